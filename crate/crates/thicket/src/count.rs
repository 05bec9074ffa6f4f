//! Exact counting of weighted independent sets and proper q-colourings
//! on quasi thick forests via clique cutset decomposition. Colouring
//! counts on cobipartite atoms go through matchings of the crossing
//! complement; all arithmetic is exact.

use crate::decompose::{classify_atom, is_quasi_thick_forest, AtomKind};
use crate::graph::{Graph, VertexSet};
use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::HashMap;
use thiserror::Error;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub const DEFAULT_MATCHING_CAP: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CountError {
    #[error("graph is not a quasi thick forest: atom {0:?} is neither clique nor cobipartite")]
    NotQuasi(Vec<u32>),
    #[error("matching-count side {side} exceeds the cap {cap}")]
    MatchingCap { side: usize, cap: usize },
    #[error("clique number {omega} exceeds the configured bound {bound}")]
    CliqueBound { omega: usize, bound: usize },
}

/// (a)_b = a (a-1) ... (a-b+1); 1 for b = 0, 0 for b > a.
pub fn falling_factorial(a: u64, b: u64) -> BigUint {
    let mut out = BigUint::one();
    for i in 0..b {
        if i >= a {
            return BigUint::zero();
        }
        out *= a - i;
    }
    out
}

/// Memo table for falling factorials at a fixed q.
pub struct FallingFactorials {
    q: u64,
    memo: Vec<BigUint>,
}

impl FallingFactorials {
    pub fn new(q: u64) -> Self {
        FallingFactorials {
            q,
            memo: vec![BigUint::one()],
        }
    }

    pub fn get(&mut self, b: usize) -> BigUint {
        while self.memo.len() <= b {
            let k = self.memo.len() as u64;
            let next = if k > self.q {
                BigUint::zero()
            } else {
                self.memo.last().unwrap() * (self.q - (k - 1))
            };
            self.memo.push(next);
        }
        self.memo[b].clone()
    }
}

/// Counts of matchings by size in a bipartite graph with parts `side_p`
/// and `side_q` (all edges crossing). Subset DP over the smaller side;
/// sides larger than `cap` are refused.
pub fn matching_counts(
    g: &Graph,
    side_p: &VertexSet,
    side_q: &VertexSet,
    cap: usize,
) -> Result<Vec<BigUint>, CountError> {
    debug_assert!(g
        .edges()
        .iter()
        .all(|&(u, v)| side_p.contains(u) != side_p.contains(v)));
    let (small, large) = if side_p.len() <= side_q.len() {
        (side_p, side_q)
    } else {
        (side_q, side_p)
    };
    if small.len() > cap {
        return Err(CountError::MatchingCap {
            side: small.len(),
            cap,
        });
    }
    let small_idx: HashMap<u32, usize> = small.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut dp: HashMap<u32, BigUint> = HashMap::new();
    dp.insert(0, BigUint::one());
    for v in large.iter() {
        let mut next = dp.clone(); // v unmatched
        for (&mask, cnt) in &dp {
            for &nb in g.neighbors(v) {
                if let Some(&i) = small_idx.get(&nb) {
                    if mask >> i & 1 == 0 {
                        *next.entry(mask | 1 << i).or_insert_with(BigUint::zero) += cnt;
                    }
                }
            }
        }
        dp = next;
    }
    let mut kappa = vec![BigUint::zero(); small.len() + 1];
    for (mask, cnt) in dp {
        kappa[mask.count_ones() as usize] += cnt;
    }
    while kappa.len() > 1 && kappa.last() == Some(&BigUint::zero()) {
        kappa.pop();
    }
    Ok(kappa)
}

/// The bipartite complement of the crossing edges of a cobipartite graph:
/// same vertex ids, an edge for every non-adjacent pair across the sides.
pub fn crossing_complement(g: &Graph, side_u: &VertexSet, side_w: &VertexSet) -> Graph {
    let mut pairs = Vec::new();
    for u in side_u.iter() {
        for w in side_w.iter() {
            if !g.has_edge(u, w) {
                pairs.push((u, w));
            }
        }
    }
    Graph::from_edge_list(g.n(), &pairs).expect("valid complement")
}

/// Proper q-colourings of a cobipartite graph: sum over k of
/// (matchings of size k in the crossing complement) * (q)_{n-k}.
pub fn cobipartite_colourings(
    g: &Graph,
    sides: (&VertexSet, &VertexSet),
    q: u64,
) -> Result<BigUint, CountError> {
    cobipartite_colourings_capped(g, sides, q, DEFAULT_MATCHING_CAP)
}

pub fn cobipartite_colourings_capped(
    g: &Graph,
    (side_u, side_w): (&VertexSet, &VertexSet),
    q: u64,
    cap: usize,
) -> Result<BigUint, CountError> {
    debug_assert!(g.is_clique(side_u) && g.is_clique(side_w));
    let n = side_u.len() + side_w.len();
    let bbar = crossing_complement(g, side_u, side_w);
    let kappa = matching_counts(&bbar, side_u, side_w, cap)?;
    let mut total = BigUint::zero();
    for (k, c) in kappa.iter().enumerate() {
        if !c.is_zero() {
            total += c * falling_factorial(q, (n - k) as u64);
        }
    }
    Ok(total)
}

/// Exact number of proper q-colourings of a quasi thick forest, by the
/// clique-cutset product formula over the decomposition tree: clique
/// atoms contribute (q)_size, cobipartite atoms the matching formula, and
/// each internal node divides by (q)_{separator size} (always exactly).
pub fn count_colourings(g: &Graph, q: u64) -> Result<BigUint, CountError> {
    count_colourings_capped(g, q, DEFAULT_MATCHING_CAP)
}

pub fn count_colourings_capped(g: &Graph, q: u64, cap: usize) -> Result<BigUint, CountError> {
    let quasi =
        is_quasi_thick_forest(g).map_err(|atom| CountError::NotQuasi(atom.iter().collect()))?;
    let kinds: HashMap<VertexSet, AtomKind> = quasi.atoms.into_iter().collect();
    ncol_node(g, &quasi.tree, quasi.tree.root, &kinds, q, cap)
}

fn ncol_node(
    g: &Graph,
    tree: &crate::decompose::DecompositionTree,
    node: usize,
    kinds: &HashMap<VertexSet, AtomKind>,
    q: u64,
    cap: usize,
) -> Result<BigUint, CountError> {
    match &tree.nodes[node] {
        crate::decompose::DecompNode::Leaf { atom } => match &kinds[atom] {
            AtomKind::Clique => Ok(falling_factorial(q, atom.len() as u64)),
            AtomKind::Cobipartite(u, w) => {
                let (sub, map) = g.induced(atom).unwrap();
                let inv: HashMap<u32, u32> = map
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| (v, i as u32))
                    .collect();
                let su: VertexSet = u.iter().map(|v| inv[&v]).collect();
                let sw: VertexSet = w.iter().map(|v| inv[&v]).collect();
                cobipartite_colourings_capped(&sub, (&su, &sw), q, cap)
            }
            AtomKind::Other => Err(CountError::NotQuasi(atom.iter().collect())),
        },
        crate::decompose::DecompNode::Internal {
            separator,
            left,
            right,
            ..
        } => {
            // a separator larger than q forces a K_{q+1}, so zero overall
            if separator.len() as u64 > q {
                return Ok(BigUint::zero());
            }
            let lhs = ncol_node(g, tree, *left, kinds, q, cap)?;
            if lhs.is_zero() {
                return Ok(BigUint::zero());
            }
            let rhs = ncol_node(g, tree, *right, kinds, q, cap)?;
            if rhs.is_zero() {
                return Ok(BigUint::zero());
            }
            let denom = falling_factorial(q, separator.len() as u64);
            let (quot, rem) = (lhs * rhs).div_rem(&denom);
            assert!(rem.is_zero(), "clique cutset division must be exact");
            Ok(quot)
        }
    }
}

/// A graph with non-negative rational vertex weights (default 1).
#[derive(Debug, Clone)]
pub struct WeightedGraph {
    pub graph: Graph,
    pub weights: Vec<BigRational>,
}

impl WeightedGraph {
    pub fn unit(graph: Graph) -> Self {
        let weights = vec![BigRational::one(); graph.n()];
        WeightedGraph { graph, weights }
    }

    pub fn with_weights(graph: Graph, weights: Vec<BigRational>) -> Self {
        assert_eq!(weights.len(), graph.n());
        WeightedGraph { graph, weights }
    }
}

/// Coefficients of a counting polynomial, constant term first, trailing
/// zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountPolynomial {
    pub coeffs: Vec<BigRational>,
}

impl CountPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map(|c| c.is_zero()) == Some(true) {
            coeffs.pop();
        }
        CountPolynomial { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut out = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            out = out * x + c;
        }
        out
    }
}

/// Total weight of independent sets of a quasi thick forest: the sum over
/// independent S of the product of vertex weights, computed by
/// conditioning on the at-most-one vertex an independent set picks from a
/// clique separator and recursing.
pub fn weighted_independent_sum(wg: &WeightedGraph) -> Result<BigRational, CountError> {
    is_quasi_thick_forest(&wg.graph)
        .map_err(|atom| CountError::NotQuasi(atom.iter().collect()))?;
    let mut memo = HashMap::new();
    Ok(wsum(
        &wg.graph,
        &wg.weights,
        VertexSet::full(wg.graph.n()),
        &mut memo,
    ))
}

fn wsum(
    g: &Graph,
    weights: &[BigRational],
    active: VertexSet,
    memo: &mut HashMap<VertexSet, BigRational>,
) -> BigRational {
    if active.is_empty() {
        return BigRational::one();
    }
    if let Some(v) = memo.get(&active) {
        return v.clone();
    }
    let comps = g.components_within(&active);
    let result = if comps.len() > 1 {
        let mut prod = BigRational::one();
        for c in comps {
            prod *= wsum(g, weights, c, memo);
        }
        prod
    } else {
        let (sub, map) = g.induced(&active).unwrap();
        let tree = crate::decompose::clique_cutset_decompose(&sub);
        match &tree.nodes[tree.root] {
            crate::decompose::DecompNode::Leaf { .. } => atom_wsum(&sub, &map, weights),
            crate::decompose::DecompNode::Internal { separator, .. } => {
                let sep: VertexSet = separator.iter().map(|v| map[v as usize]).collect();
                // no vertex of the separator chosen
                let mut total = wsum(g, weights, active.minus(&sep), memo);
                // exactly v chosen: drop the separator and N(v)
                for v in sep.iter() {
                    let mut rest = active.minus(&sep);
                    for &nb in g.neighbors(v) {
                        rest.remove(nb);
                    }
                    total += &weights[v as usize] * wsum(g, weights, rest, memo);
                }
                total
            }
        }
    };
    memo.insert(active, result.clone());
    result
}

/// W for an atom: 1 + sum of weights + the weight of each non-adjacent
/// pair (atoms of a quasi thick forest have independence number <= 2).
fn atom_wsum(sub: &Graph, map: &[u32], weights: &[BigRational]) -> BigRational {
    let w = |v: u32| -> &BigRational { &weights[map[v as usize] as usize] };
    let mut total = BigRational::one();
    for v in sub.vertices() {
        total += w(v);
    }
    for u in sub.vertices() {
        for v in u + 1..sub.n() as u32 {
            if !sub.has_edge(u, v) {
                total += w(u) * w(v);
            }
        }
    }
    debug_assert!(
        classify_atom(sub, &VertexSet::full(sub.n())) != AtomKind::Other,
        "atom of a quasi thick forest must be clique or cobipartite"
    );
    total
}

/// Independence number of a quasi thick forest by the same conditioning.
fn quasi_alpha(g: &Graph, active: VertexSet, memo: &mut HashMap<VertexSet, usize>) -> usize {
    if active.is_empty() {
        return 0;
    }
    if let Some(&v) = memo.get(&active) {
        return v;
    }
    let comps = g.components_within(&active);
    let result = if comps.len() > 1 {
        comps.into_iter().map(|c| quasi_alpha(g, c, memo)).sum()
    } else {
        let (sub, map) = g.induced(&active).unwrap();
        let tree = crate::decompose::clique_cutset_decompose(&sub);
        match &tree.nodes[tree.root] {
            crate::decompose::DecompNode::Leaf { .. } => {
                let mut best = 1;
                for u in sub.vertices() {
                    for v in u + 1..sub.n() as u32 {
                        if !sub.has_edge(u, v) {
                            best = 2;
                        }
                    }
                }
                best
            }
            crate::decompose::DecompNode::Internal { separator, .. } => {
                let sep: VertexSet = separator.iter().map(|v| map[v as usize]).collect();
                let mut best = quasi_alpha(g, active.minus(&sep), memo);
                for v in sep.iter() {
                    let mut rest = active.minus(&sep);
                    for &nb in g.neighbors(v) {
                        rest.remove(nb);
                    }
                    best = best.max(1 + quasi_alpha(g, rest, memo));
                }
                best
            }
        }
    };
    memo.insert(active, result);
    result
}

/// The weighted independence polynomial: coefficient k is the total
/// weight of size-k independent sets. Evaluates the weighted sum at
/// lambda = 1..alpha+1 and solves the (exact, integer-node) Vandermonde
/// system with the constant term pinned to 1.
pub fn independence_polynomial(wg: &WeightedGraph) -> Result<CountPolynomial, CountError> {
    is_quasi_thick_forest(&wg.graph)
        .map_err(|atom| CountError::NotQuasi(atom.iter().collect()))?;
    let n = wg.graph.n();
    if n == 0 {
        return Ok(CountPolynomial::new(vec![BigRational::one()]));
    }
    let alpha = quasi_alpha(&wg.graph, VertexSet::full(n), &mut HashMap::new());
    let eval_at = |lambda: u64| -> BigRational {
        let scaled: Vec<BigRational> = wg
            .weights
            .iter()
            .map(|w| w * BigRational::from_integer(lambda.into()))
            .collect();
        let mut memo = HashMap::new();
        wsum(&wg.graph, &scaled, VertexSet::full(n), &mut memo)
    };
    let lambdas: Vec<u64> = (1..=alpha as u64).collect();
    #[cfg(feature = "parallel")]
    let values: Vec<BigRational> = lambdas.par_iter().map(|&l| eval_at(l)).collect();
    #[cfg(not(feature = "parallel"))]
    let values: Vec<BigRational> = lambdas.iter().map(|&l| eval_at(l)).collect();

    // solve sum_{k=1}^{alpha} W_k l^k = P(l) - 1 for l = 1..alpha
    let k = alpha;
    let mut mat: Vec<Vec<BigRational>> = Vec::with_capacity(k);
    for (i, &l) in lambdas.iter().enumerate() {
        let mut row = Vec::with_capacity(k + 1);
        let lb = BigRational::from_integer(l.into());
        let mut p = lb.clone();
        for _ in 0..k {
            row.push(p.clone());
            p *= &lb;
        }
        row.push(values[i].clone() - BigRational::one());
        mat.push(row);
    }
    gauss_solve(&mut mat);
    let mut coeffs = vec![BigRational::one()];
    for row in &mat {
        coeffs.push(row[k].clone());
    }
    Ok(CountPolynomial::new(coeffs))
}

/// In-place Gaussian elimination; afterwards row i holds the i-th
/// solution in its last column.
fn gauss_solve(mat: &mut Vec<Vec<BigRational>>) {
    let n = mat.len();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !mat[r][col].is_zero())
            .expect("Vandermonde system is nonsingular");
        mat.swap(col, pivot);
        let p = mat[col][col].clone();
        for c in col..=n {
            mat[col][c] = &mat[col][c] / &p;
        }
        for r in 0..n {
            if r != col && !mat[r][col].is_zero() {
                let f = mat[r][col].clone();
                for c in col..=n {
                    mat[r][c] = &mat[r][c] - &f * &mat[col][c];
                }
            }
        }
    }
}

/// Clique number of a quasi thick forest: the max over atoms; for a
/// cobipartite atom this is n minus a maximum matching of the crossing
/// complement.
pub fn quasi_clique_number(g: &Graph) -> Result<usize, CountError> {
    let quasi =
        is_quasi_thick_forest(g).map_err(|atom| CountError::NotQuasi(atom.iter().collect()))?;
    let mut omega = 0;
    for (atom, kind) in &quasi.atoms {
        let size = match kind {
            AtomKind::Clique => atom.len(),
            AtomKind::Cobipartite(u, w) => {
                let bbar = crossing_complement(g, u, w);
                atom.len() - bipartite_max_matching(&bbar, u, w)
            }
            AtomKind::Other => unreachable!(),
        };
        omega = omega.max(size);
    }
    Ok(omega)
}

fn bipartite_max_matching(g: &Graph, left: &VertexSet, _right: &VertexSet) -> usize {
    let n = g.n();
    let mut matched = vec![u32::MAX; n];
    let mut size = 0;
    for v in left.iter() {
        let mut seen = vec![false; n];
        if augment(g, v, &mut matched, &mut seen) {
            size += 1;
        }
    }
    size
}

fn augment(g: &Graph, v: u32, matched: &mut [u32], seen: &mut [bool]) -> bool {
    for &u in g.neighbors(v) {
        if seen[u as usize] {
            continue;
        }
        seen[u as usize] = true;
        if matched[u as usize] == u32::MAX
            || augment(g, matched[u as usize], matched, seen)
        {
            matched[u as usize] = v;
            return true;
        }
    }
    false
}

/// Colour counting along the bounded-clique-number route: identical value
/// to `count_colourings`, but matchings of the (at most chi_bound by
/// chi_bound) crossing complements are counted by complete enumeration
/// rather than subset DP. Agreement with the DP route is asserted.
pub fn chi_parameter_colour_count(
    g: &Graph,
    q: u64,
    chi_bound: usize,
) -> Result<BigUint, CountError> {
    let omega = quasi_clique_number(g)?;
    if omega > chi_bound {
        return Err(CountError::CliqueBound {
            omega,
            bound: chi_bound,
        });
    }
    let quasi =
        is_quasi_thick_forest(g).map_err(|atom| CountError::NotQuasi(atom.iter().collect()))?;
    let kinds: HashMap<VertexSet, AtomKind> = quasi.atoms.into_iter().collect();
    let result = ncol_node_enum(g, &quasi.tree, quasi.tree.root, &kinds, q)?;
    debug_assert_eq!(result, count_colourings(g, q)?);
    Ok(result)
}

fn ncol_node_enum(
    g: &Graph,
    tree: &crate::decompose::DecompositionTree,
    node: usize,
    kinds: &HashMap<VertexSet, AtomKind>,
    q: u64,
) -> Result<BigUint, CountError> {
    match &tree.nodes[node] {
        crate::decompose::DecompNode::Leaf { atom } => match &kinds[atom] {
            AtomKind::Clique => Ok(falling_factorial(q, atom.len() as u64)),
            AtomKind::Cobipartite(u, w) => {
                let bbar = crossing_complement(g, u, w);
                let kappa = enumerate_matchings(&bbar);
                let n = atom.len();
                let mut total = BigUint::zero();
                for (k, c) in kappa.iter().enumerate() {
                    if !c.is_zero() {
                        total += c * falling_factorial(q, (n - k) as u64);
                    }
                }
                Ok(total)
            }
            AtomKind::Other => Err(CountError::NotQuasi(atom.iter().collect())),
        },
        crate::decompose::DecompNode::Internal {
            separator,
            left,
            right,
            ..
        } => {
            if separator.len() as u64 > q {
                return Ok(BigUint::zero());
            }
            let lhs = ncol_node_enum(g, tree, *left, kinds, q)?;
            let rhs = ncol_node_enum(g, tree, *right, kinds, q)?;
            if lhs.is_zero() || rhs.is_zero() {
                return Ok(BigUint::zero());
            }
            let denom = falling_factorial(q, separator.len() as u64);
            let (quot, rem) = (lhs * rhs).div_rem(&denom);
            assert!(rem.is_zero(), "clique cutset division must be exact");
            Ok(quot)
        }
    }
}

/// Matchings by size, enumerated edge by edge.
fn enumerate_matchings(g: &Graph) -> Vec<BigUint> {
    let edges = g.edges();
    let mut counts = vec![BigUint::zero(); g.n() / 2 + 1];
    fn rec(edges: &[(u32, u32)], i: usize, used: &mut Vec<u32>, counts: &mut [BigUint]) {
        if i == edges.len() {
            counts[used.len() / 2] += BigUint::one();
            return;
        }
        let (u, v) = edges[i];
        rec(edges, i + 1, used, counts);
        if !used.contains(&u) && !used.contains(&v) {
            used.push(u);
            used.push(v);
            rec(edges, i + 1, used, counts);
            used.pop();
            used.pop();
        }
    }
    rec(&edges, 0, &mut Vec::new(), &mut counts);
    while counts.len() > 1 && counts.last().map(|c| c.is_zero()) == Some(true) {
        counts.pop();
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    fn path(n: usize) -> Graph {
        Graph::from_edge_list(n, &(0..n as u32 - 1).map(|i| (i, i + 1)).collect::<Vec<_>>())
            .unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut pairs: Vec<_> = (0..n as u32 - 1).map(|i| (i, i + 1)).collect();
        pairs.push((n as u32 - 1, 0));
        Graph::from_edge_list(n, &pairs).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut pairs = Vec::new();
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                pairs.push((u, v));
            }
        }
        Graph::from_edge_list(n, &pairs).unwrap()
    }

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(falling_factorial(5, 2), big(20));
        assert_eq!(falling_factorial(3, 4), big(0));
        assert_eq!(falling_factorial(7, 0), big(1));
        let mut ffs = FallingFactorials::new(5);
        assert_eq!(ffs.get(2), big(20));
        assert_eq!(ffs.get(6), big(0));
        assert_eq!(ffs.get(0), big(1));
    }

    #[test]
    fn matching_counts_examples() {
        // two disjoint edges a-c, b-d
        let g = Graph::from_edge_list(4, &[(0, 2), (1, 3)]).unwrap();
        let p: VertexSet = (0..2).collect();
        let q: VertexSet = (2..4).collect();
        assert_eq!(
            matching_counts(&g, &p, &q, 24).unwrap(),
            vec![big(1), big(2), big(1)]
        );

        // edgeless
        let g = Graph::from_edge_list(4, &[]).unwrap();
        assert_eq!(matching_counts(&g, &p, &q, 24).unwrap(), vec![big(1)]);

        // K_{2,2}
        let g = Graph::from_edge_list(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(
            matching_counts(&g, &p, &q, 24).unwrap(),
            vec![big(1), big(4), big(2)]
        );
    }

    #[test]
    fn matching_counts_total_matches_enumeration() {
        let mut rng = crate::gen::TestRng::new(19);
        for _ in 0..100 {
            let n = 2 + rng.below(8);
            let (g, u, w) = crate::gen::random_cobipartite(&mut rng, n, 0.5);
            let bbar = crossing_complement(&g, &u, &w);
            let kappa = matching_counts(&bbar, &u, &w, 24).unwrap();
            let total: BigUint = kappa.iter().sum();
            let brute: BigUint = enumerate_matchings(&bbar).iter().sum();
            assert_eq!(total, brute);
        }
    }

    #[test]
    fn matching_cap_is_enforced() {
        let g = Graph::from_edge_list(8, &[(0, 4), (1, 5), (2, 6), (3, 7)]).unwrap();
        let p: VertexSet = (0..4).collect();
        let q: VertexSet = (4..8).collect();
        assert_eq!(
            matching_counts(&g, &p, &q, 3).unwrap_err(),
            CountError::MatchingCap { side: 4, cap: 3 }
        );
    }

    #[test]
    fn cobipartite_colourings_examples() {
        // C4 with sides {0,1}, {2,3} at q=3: chromatic polynomial gives 18
        let c4 = cycle(4);
        let u: VertexSet = (0..2).collect();
        let w: VertexSet = (2..4).collect();
        assert_eq!(cobipartite_colourings(&c4, (&u, &w), 3).unwrap(), big(18));

        // K4 as cobipartite at q=3: no colourings
        let k4 = complete(4);
        assert_eq!(cobipartite_colourings(&k4, (&u, &w), 3).unwrap(), big(0));

        // two disjoint edges completed to cobipartite with no crossing
        // edges, q = 2: 4 colourings
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(cobipartite_colourings(&g, (&u, &w), 2).unwrap(), big(4));
    }

    #[test]
    fn count_colourings_examples() {
        assert_eq!(count_colourings(&path(3), 3).unwrap(), big(12));
        assert_eq!(count_colourings(&complete(3), 4).unwrap(), big(24));
        assert_eq!(count_colourings(&cycle(4), 2).unwrap(), big(2));
        // C5 is not quasi
        assert!(matches!(
            count_colourings(&cycle(5), 3),
            Err(CountError::NotQuasi(_))
        ));
    }

    #[test]
    fn count_colourings_matches_oracle() {
        let mut rng = crate::gen::TestRng::new(29);
        let mut tested = 0;
        for _ in 0..400 {
            let n = 1 + rng.below(8);
            let g = crate::gen::random_graph(&mut rng, n, 0.5);
            if is_quasi_thick_forest(&g).is_err() {
                continue;
            }
            tested += 1;
            for q in 0..=4u64 {
                assert_eq!(
                    count_colourings(&g, q).unwrap(),
                    crate::oracle::brute_col_count(&g, q).unwrap(),
                    "{g:?} q={q}"
                );
            }
        }
        assert!(tested > 60);
    }

    #[test]
    fn weighted_independent_sum_examples() {
        // K_n with unit weights: n + 1
        for n in 1..=6 {
            let wg = WeightedGraph::unit(complete(n));
            assert_eq!(
                weighted_independent_sum(&wg).unwrap(),
                BigRational::from_u64(n as u64 + 1).unwrap()
            );
        }
        // C4 unit: 7 independent sets
        let wg = WeightedGraph::unit(cycle(4));
        assert_eq!(
            weighted_independent_sum(&wg).unwrap(),
            BigRational::from_u64(7).unwrap()
        );
        // P3 with weights (2,3,5): 1 + (2+3+5) + 2*5 = 21
        let wg = WeightedGraph::with_weights(path(3), vec![rat(2, 1), rat(3, 1), rat(5, 1)]);
        assert_eq!(weighted_independent_sum(&wg).unwrap(), rat(21, 1));
    }

    #[test]
    fn weighted_sum_matches_oracle() {
        let mut rng = crate::gen::TestRng::new(37);
        let mut tested = 0;
        for _ in 0..300 {
            let n = 1 + rng.below(9);
            let g = crate::gen::random_graph(&mut rng, n, 0.45);
            if is_quasi_thick_forest(&g).is_err() {
                continue;
            }
            tested += 1;
            let wg = WeightedGraph::unit(g.clone());
            let got = weighted_independent_sum(&wg).unwrap();
            let want = crate::oracle::brute_ind_count(&g).unwrap();
            assert_eq!(got, BigRational::from_integer(want.into()), "{g:?}");
        }
        assert!(tested > 50);
    }

    #[test]
    fn independence_polynomial_examples() {
        // C4: 1 + 4x + 2x^2
        let p = independence_polynomial(&WeightedGraph::unit(cycle(4))).unwrap();
        assert_eq!(p.coeffs, vec![rat(1, 1), rat(4, 1), rat(2, 1)]);

        // K3: 1 + 3x
        let p = independence_polynomial(&WeightedGraph::unit(complete(3))).unwrap();
        assert_eq!(p.coeffs, vec![rat(1, 1), rat(3, 1)]);

        // single vertex of weight 1/2: 1 + x/2
        let g = Graph::from_edge_list(1, &[]).unwrap();
        let p = independence_polynomial(&WeightedGraph::with_weights(g, vec![rat(1, 2)])).unwrap();
        assert_eq!(p.coeffs, vec![rat(1, 1), rat(1, 2)]);
    }

    #[test]
    fn independence_polynomial_brute_check() {
        let mut rng = crate::gen::TestRng::new(43);
        let mut tested = 0;
        for _ in 0..200 {
            let n = 1 + rng.below(9);
            let g = crate::gen::random_graph(&mut rng, n, 0.5);
            if is_quasi_thick_forest(&g).is_err() {
                continue;
            }
            tested += 1;
            let p = independence_polynomial(&WeightedGraph::unit(g.clone())).unwrap();
            // brute coefficients by size
            let adj: Vec<u64> = {
                let mut a = vec![0u64; n];
                for (u, v) in g.edges() {
                    a[u as usize] |= 1 << v;
                    a[v as usize] |= 1 << u;
                }
                a
            };
            let mut by_size = vec![0u64; n + 1];
            for mask in 0u64..1 << n {
                let ok = (0..n).all(|v| mask >> v & 1 == 0 || mask & adj[v] == 0);
                if ok {
                    by_size[mask.count_ones() as usize] += 1;
                }
            }
            while by_size.len() > 1 && by_size.last() == Some(&0) {
                by_size.pop();
            }
            let want: Vec<BigRational> = by_size
                .iter()
                .map(|&c| BigRational::from_u64(c).unwrap())
                .collect();
            assert_eq!(p.coeffs, want, "{g:?}");
        }
        assert!(tested > 30);
    }

    #[test]
    fn chi_parameter_examples() {
        assert_eq!(chi_parameter_colour_count(&path(3), 3, 4).unwrap(), big(12));
        assert_eq!(chi_parameter_colour_count(&cycle(4), 2, 4).unwrap(), big(2));
        assert_eq!(chi_parameter_colour_count(&complete(2), 5, 4).unwrap(), big(20));
        // bound enforcement
        assert_eq!(
            chi_parameter_colour_count(&complete(5), 5, 4).unwrap_err(),
            CountError::CliqueBound { omega: 5, bound: 4 }
        );
    }

    #[test]
    fn quasi_clique_number_matches_brute() {
        let mut rng = crate::gen::TestRng::new(47);
        for _ in 0..200 {
            let n = 1 + rng.below(9);
            let g = crate::gen::random_graph(&mut rng, n, 0.5);
            if is_quasi_thick_forest(&g).is_err() {
                continue;
            }
            let got = quasi_clique_number(&g).unwrap();
            let want = crate::oracle::maximal_cliques(&g)
                .iter()
                .map(|c| c.len())
                .max()
                .unwrap_or(0);
            assert_eq!(got, want, "{g:?}");
        }
    }
}
