//! Brute-force oracles. These exist to be obviously correct and are the
//! ground truth every recognizer and counter is tested against. They are
//! not performance-engineered beyond simple bitmask enumeration, and they
//! never silently truncate: every oracle has an explicit size cap.

use crate::graph::{Graph, VertexSet};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph too large for {oracle} oracle: n = {n} exceeds cap {cap}")]
    SizeCap {
        oracle: &'static str,
        n: usize,
        cap: usize,
    },
}

fn check_cap(oracle: &'static str, n: usize, cap: usize) -> Result<(), OracleError> {
    if n > cap {
        Err(OracleError::SizeCap { oracle, n, cap })
    } else {
        Ok(())
    }
}

fn adj_masks(g: &Graph) -> Vec<u64> {
    let mut adj = vec![0u64; g.n()];
    for (u, v) in g.edges() {
        adj[u as usize] |= 1 << v;
        adj[v as usize] |= 1 << u;
    }
    adj
}

/// Number of independent sets (including the empty set), n <= 24.
pub fn brute_ind_count(g: &Graph) -> Result<BigUint, OracleError> {
    check_cap("ind", g.n(), 24)?;
    let adj = adj_masks(g);
    let full = if g.n() == 64 { !0 } else { (1u64 << g.n()) - 1 };

    fn rec(adj: &[u64], avail: u64) -> u64 {
        if avail == 0 {
            return 1;
        }
        let v = avail.trailing_zeros() as usize;
        // skip v, or take v and drop N[v]
        rec(adj, avail & !(1 << v)) + rec(adj, avail & !(1 << v) & !adj[v])
    }

    #[cfg(feature = "parallel")]
    if g.n() >= 18 {
        // shard on the first few vertices' include/exclude decisions
        let shards: Vec<(u64, u64)> = (0u64..16)
            .map(|bits| {
                let mut avail = full;
                let mut ok = true;
                for v in 0..4.min(g.n()) {
                    if bits >> v & 1 == 1 {
                        if avail & (1 << v) == 0 {
                            ok = false;
                            break;
                        }
                        avail &= !(1 << v) & !adj[v];
                    } else {
                        avail &= !(1 << v);
                    }
                }
                (avail, ok as u64)
            })
            .collect();
        let total: u64 = shards
            .par_iter()
            .map(|&(avail, ok)| if ok == 1 { rec(&adj, avail) } else { 0 })
            .sum();
        return Ok(BigUint::from(total));
    }

    Ok(BigUint::from(rec(&adj, full)))
}

/// Falling factorial used locally by the oracles to stay independent of
/// the counting module.
fn ff(q: u64, k: usize) -> BigUint {
    let mut out = BigUint::one();
    for i in 0..k as u64 {
        if i >= q {
            return BigUint::zero();
        }
        out *= q - i;
    }
    out
}

/// Number of proper q-colourings by exhaustive enumeration of colour
/// partitions (each partition into k independent blocks contributes
/// (q)_k), n <= 14.
pub fn brute_col_count(g: &Graph, q: u64) -> Result<BigUint, OracleError> {
    check_cap("col", g.n(), 14)?;
    let counts = independent_partition_counts(g);
    let mut total = BigUint::zero();
    for (k, c) in counts.iter().enumerate() {
        if *c > 0 {
            total += ff(q, k) * BigUint::from(*c);
        }
    }
    Ok(total)
}

/// counts[k] = number of partitions of V into exactly k independent blocks
pub fn independent_partition_counts(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let adj = adj_masks(g);
    let mut counts = vec![0u64; n + 1];
    if n == 0 {
        counts[0] = 1;
        return counts;
    }
    let mut blocks: Vec<u64> = Vec::new();
    fn rec(adj: &[u64], n: usize, v: usize, blocks: &mut Vec<u64>, counts: &mut Vec<u64>) {
        if v == n {
            counts[blocks.len()] += 1;
            return;
        }
        let bit = 1u64 << v;
        for i in 0..blocks.len() {
            if blocks[i] & adj[v] == 0 {
                blocks[i] |= bit;
                rec(adj, n, v + 1, blocks, counts);
                blocks[i] &= !bit;
            }
        }
        blocks.push(bit);
        rec(adj, n, v + 1, blocks, counts);
        blocks.pop();
    }
    rec(&adj, n, 0, &mut blocks, &mut counts);
    counts
}

/// Any induced cycle of length >= 5?
pub fn has_long_hole(g: &Graph) -> bool {
    let n = g.n();
    if n < 5 {
        return false;
    }
    let adj = adj_masks(g);
    for mask in 0u64..1 << n {
        if (mask.count_ones() as usize) < 5 {
            continue;
        }
        if induces_cycle(&adj, mask) {
            return true;
        }
    }
    false
}

fn induces_cycle(adj: &[u64], mask: u64) -> bool {
    let mut m = mask;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        if (adj[v] & mask).count_ones() != 2 {
            return false;
        }
    }
    // connectivity
    let start = mask.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v] & mask & !seen;
        }
        seen |= next;
        frontier = next;
    }
    seen == mask
}

/// All induced 4-cycles, as (a, b, c, d) in cyclic order.
fn four_holes(g: &Graph) -> Vec<[u32; 4]> {
    let n = g.n();
    let adj = adj_masks(g);
    let mut out = Vec::new();
    for a in 0..n as u32 {
        for b in a + 1..n as u32 {
            if !g.has_edge(a, b) {
                continue;
            }
            for d in b + 1..n as u32 {
                if !g.has_edge(a, d) || g.has_edge(b, d) {
                    continue;
                }
                // c adjacent to b and d, not to a, c > a for dedup
                let cands = adj[b as usize] & adj[d as usize] & !adj[a as usize];
                let mut m = cands & !((1 << (a + 1)) - 1);
                while m != 0 {
                    let c = m.trailing_zeros();
                    m &= m - 1;
                    if c != a {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

/// Thick-forest membership by the forbidden-coloured-subgraph
/// characterization: some 2-colouring avoids monochromatic induced paths
/// on three vertices and alternating-coloured 4-holes, and the graph has
/// no long hole at all. n <= 16.
pub fn brute_thick_forest(g: &Graph) -> Result<bool, OracleError> {
    check_cap("thick-forest", g.n(), 16)?;
    if has_long_hole(g) {
        return Ok(false);
    }
    let n = g.n();
    if n <= 2 {
        return Ok(true);
    }
    let adj = adj_masks(g);
    let holes = four_holes(g);
    let full = (1u64 << n) - 1;

    let good = |c: u64| -> bool {
        for v in 0..n {
            let side = if c >> v & 1 == 1 { c } else { !c & full };
            let s = adj[v] & side;
            if s.count_ones() >= 2 && !mask_is_clique(&adj, s) {
                return false;
            }
        }
        for h in &holes {
            let (ca, cb, cc, cd) = (
                c >> h[0] & 1,
                c >> h[1] & 1,
                c >> h[2] & 1,
                c >> h[3] & 1,
            );
            if ca == cc && cb == cd && ca != cb {
                return false;
            }
        }
        true
    };

    // vertex 0 fixed to colour 0 by symmetry
    let range = 0u64..1 << (n - 1);
    #[cfg(feature = "parallel")]
    {
        if n >= 12 {
            return Ok(range
                .into_par_iter()
                .any(|half| good(half << 1)));
        }
    }
    Ok(range.into_iter().any(|half| good(half << 1)))
}

fn mask_is_clique(adj: &[u64], s: u64) -> bool {
    let mut m = s;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        if s & !adj[v] & !(1 << v) != 0 {
            return false;
        }
    }
    true
}

/// All maximal cliques (Bron-Kerbosch with pivoting), as sorted sets.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    assert!(n <= 64);
    let adj = adj_masks(g);
    let mut out = Vec::new();
    let full = if n == 0 { 0 } else { (1u64 << n) - 1 };

    fn bk(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        // pivot: vertex of p|x maximizing |p & adj|
        let pivot = {
            let mut best = 0;
            let mut bestc = -1i64;
            let mut m = p | x;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                let c = (p & adj[v]).count_ones() as i64;
                if c > bestc {
                    bestc = c;
                    best = v;
                }
            }
            best
        };
        let mut cand = p & !adj[pivot];
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let bit = 1u64 << v;
            bk(adj, r | bit, p & adj[v], x & adj[v], out);
            p &= !bit;
            x |= bit;
        }
    }

    let mut masks = Vec::new();
    if n > 0 {
        bk(&adj, 0, full, 0, &mut masks);
    }
    for m in masks {
        out.push((0..n as u32).filter(|&v| m >> v & 1 == 1).collect());
    }
    out.sort();
    out
}

/// Every maximal clique whose removal disconnects the graph, n <= 20.
pub fn brute_max_clique_separators(g: &Graph) -> Result<Vec<VertexSet>, OracleError> {
    check_cap("mcs", g.n(), 20)?;
    let mut out = Vec::new();
    for c in maximal_cliques(g) {
        let rest = VertexSet::full(g.n()).minus(&c);
        if g.components_within(&rest).len() >= 2 {
            out.push(c);
        }
    }
    Ok(out)
}

/// Chromatic polynomial evaluated at q by deletion-contraction (with the
/// complement-edge variant on dense graphs), n <= 12, q <= 1000.
pub fn chromatic_poly_delcon(g: &Graph, q: u64) -> Result<BigUint, OracleError> {
    check_cap("delcon", g.n(), 12)?;
    assert!(q <= 1000, "delcon oracle limited to q <= 1000");
    let val = delcon(g, q as i128);
    assert!(val >= 0);
    Ok(BigUint::from(val as u128))
}

fn delcon(g: &Graph, q: i128) -> i128 {
    let n = g.n();
    if g.m() == 0 {
        return q.pow(n as u32);
    }
    if g.is_complete() {
        let mut out = 1i128;
        for i in 0..n as i128 {
            out *= q - i;
            if out == 0 {
                return 0;
            }
        }
        return out;
    }
    // split over components
    let comps = g.components();
    if comps.len() > 1 {
        let mut out = 1i128;
        for c in comps {
            let (sub, _) = g.induced(&c).unwrap();
            out *= delcon(&sub, q);
            if out == 0 {
                return 0;
            }
        }
        return out;
    }
    if g.m() * 4 > n * (n - 1) {
        // dense: P(G) = P(G + uv) + P(G merge uv) for a non-edge uv
        let (u, v) = first_non_edge(g).expect("not complete");
        let mut added = g.edges();
        added.push((u, v));
        let plus = Graph::from_edge_list(n, &added).unwrap();
        delcon(&plus, q) + delcon(&merge(g, u, v), q)
    } else {
        // sparse: P(G) = P(G - e) - P(G merge e)
        let (u, v) = g.edges()[0];
        let minus: Vec<(u32, u32)> = g.edges().into_iter().filter(|&e| e != (u, v)).collect();
        let del = Graph::from_edge_list(n, &minus).unwrap();
        delcon(&del, q) - delcon(&merge(g, u, v), q)
    }
}

fn first_non_edge(g: &Graph) -> Option<(u32, u32)> {
    for u in 0..g.n() as u32 {
        for v in u + 1..g.n() as u32 {
            if !g.has_edge(u, v) {
                return Some((u, v));
            }
        }
    }
    None
}

/// Identify u and v (dropping parallel edges), relabelling to 0..n-1.
fn merge(g: &Graph, u: u32, v: u32) -> Graph {
    let n = g.n();
    let mut label = vec![0u32; n];
    let mut next = 0;
    for x in 0..n as u32 {
        if x == v {
            continue;
        }
        label[x as usize] = next;
        next += 1;
    }
    label[v as usize] = label[u as usize];
    let mut pairs = Vec::new();
    for (a, b) in g.edges() {
        let (la, lb) = (label[a as usize], label[b as usize]);
        if la != lb {
            pairs.push((la.min(lb), la.max(lb)));
        }
    }
    Graph::from_edge_list(n - 1, &pairs).unwrap()
}

/// Minimum number of parts over clique partitions of g whose quotient is
/// triangle-free; None if no such partition exists. n <= 12.
pub fn brute_min_nu_trianglefree(g: &Graph) -> Result<Option<usize>, OracleError> {
    check_cap("thin-search", g.n(), 12)?;
    let n = g.n();
    if n == 0 {
        return Ok(Some(0));
    }
    let adj = adj_masks(g);
    let mut best: Option<usize> = None;
    let mut blocks: Vec<u64> = Vec::new();

    fn quotient_triangle_free(g: &Graph, blocks: &[u64]) -> bool {
        let k = blocks.len();
        let mut adjacent = vec![vec![false; k]; k];
        for (u, v) in g.edges() {
            let bu = blocks.iter().position(|&b| b >> u & 1 == 1).unwrap();
            let bv = blocks.iter().position(|&b| b >> v & 1 == 1).unwrap();
            if bu != bv {
                adjacent[bu][bv] = true;
                adjacent[bv][bu] = true;
            }
        }
        for a in 0..k {
            for b in a + 1..k {
                if !adjacent[a][b] {
                    continue;
                }
                for c in b + 1..k {
                    if adjacent[a][c] && adjacent[b][c] {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn rec(
        g: &Graph,
        adj: &[u64],
        v: usize,
        blocks: &mut Vec<u64>,
        best: &mut Option<usize>,
    ) {
        if let Some(b) = *best {
            if blocks.len() >= b {
                return; // cannot improve
            }
        }
        if v == g.n() {
            if quotient_triangle_free(g, blocks) {
                *best = Some(blocks.len());
            }
            return;
        }
        let bit = 1u64 << v;
        for i in 0..blocks.len() {
            // v must be complete to the block to keep it a clique
            if blocks[i] & !adj[v] == 0 {
                blocks[i] |= bit;
                rec(g, adj, v + 1, blocks, best);
                blocks[i] &= !bit;
            }
        }
        blocks.push(bit);
        rec(g, adj, v + 1, blocks, best);
        blocks.pop();
    }

    rec(g, &adj, 0, &mut blocks, &mut best);
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let mut pairs: Vec<_> = (0..n as u32 - 1).map(|i| (i, i + 1)).collect();
        pairs.push((n as u32 - 1, 0));
        Graph::from_edge_list(n, &pairs).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edge_list(n, &(0..n as u32 - 1).map(|i| (i, i + 1)).collect::<Vec<_>>())
            .unwrap()
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

    #[test]
    fn ind_count_examples() {
        assert_eq!(brute_ind_count(&cycle(5)).unwrap(), BigUint::from(11u32));
        assert_eq!(brute_ind_count(&complete(4)).unwrap(), BigUint::from(5u32));
        // empty graph on 3: all subsets
        let e3 = Graph::from_edge_list(3, &[]).unwrap();
        assert_eq!(brute_ind_count(&e3).unwrap(), BigUint::from(8u32));
    }

    #[test]
    fn ind_count_cap() {
        let g = Graph::from_edge_list(25, &[]).unwrap();
        assert!(brute_ind_count(&g).is_err());
    }

    #[test]
    fn col_count_examples() {
        assert_eq!(brute_col_count(&complete(3), 3).unwrap(), BigUint::from(6u32));
        assert_eq!(brute_col_count(&path(3), 2).unwrap(), BigUint::from(2u32));
        assert_eq!(brute_col_count(&cycle(4), 3).unwrap(), BigUint::from(18u32));
        // colourings with q < needed colours
        assert_eq!(brute_col_count(&complete(4), 3).unwrap(), BigUint::zero());
    }

    #[test]
    fn col_count_matches_direct_enumeration() {
        let mut rng = crate::gen::TestRng::new(3);
        for _ in 0..60 {
            let n = 1 + rng.below(6);
            let g = crate::gen::random_graph(&mut rng, n, 0.5);
            for q in 1..=3u64 {
                // direct q^n scan
                let mut direct = 0u64;
                let mut col = vec![0u64; n];
                'outer: loop {
                    if g.edges().iter().all(|&(u, v)| col[u as usize] != col[v as usize]) {
                        direct += 1;
                    }
                    let mut i = 0;
                    loop {
                        if i == n {
                            break 'outer;
                        }
                        col[i] += 1;
                        if col[i] < q {
                            break;
                        }
                        col[i] = 0;
                        i += 1;
                    }
                }
                assert_eq!(brute_col_count(&g, q).unwrap(), BigUint::from(direct));
            }
        }
    }

    #[test]
    fn long_hole_detection() {
        assert!(!has_long_hole(&cycle(4)));
        assert!(has_long_hole(&cycle(5)));
        assert!(has_long_hole(&cycle(6)));
        assert!(!has_long_hole(&complete(6)));
        assert!(!has_long_hole(&path(8)));
    }

    #[test]
    fn thick_forest_examples() {
        // any tree: proper 2-colouring works
        for n in 2..=8 {
            assert!(brute_thick_forest(&path(n)).unwrap());
        }
        assert!(brute_thick_forest(&complete(6)).unwrap());
        assert!(brute_thick_forest(&cycle(4)).unwrap());
        assert!(!brute_thick_forest(&cycle(5)).unwrap());
        // K_{2,3} is not a thick forest
        let k23 = Graph::from_edge_list(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
            .unwrap();
        assert!(!brute_thick_forest(&k23).unwrap());
    }

    #[test]
    fn max_clique_separators_examples() {
        // P3's maximal cliques are its edges; removing either leaves a
        // single vertex, so nothing separates
        assert!(brute_max_clique_separators(&path(3)).unwrap().is_empty());
        assert!(brute_max_clique_separators(&complete(6)).unwrap().is_empty());
        // P4: each middle edge separates
        let seps = brute_max_clique_separators(&path(4)).unwrap();
        assert_eq!(seps, vec![VertexSet::from_sorted(vec![1, 2])]);
    }

    #[test]
    fn bron_kerbosch_matches_subset_scan() {
        let mut rng = crate::gen::TestRng::new(9);
        for _ in 0..200 {
            let n = 1 + rng.below(9);
            let g = crate::gen::random_graph(&mut rng, n, 0.5);
            let bk = maximal_cliques(&g);
            let mut brute = Vec::new();
            for mask in 1u32..1 << n {
                let s: VertexSet = (0..n as u32).filter(|&v| mask >> v & 1 == 1).collect();
                if g.is_clique(&s) && !g.vertices().any(|v| g.complete_to(v, &s)) {
                    brute.push(s);
                }
            }
            brute.sort();
            assert_eq!(bk, brute, "{g:?}");
        }
    }

    #[test]
    fn delcon_examples() {
        assert_eq!(chromatic_poly_delcon(&cycle(4), 3).unwrap(), BigUint::from(18u32));
        assert_eq!(chromatic_poly_delcon(&complete(2), 2).unwrap(), BigUint::from(2u32));
        let e3 = Graph::from_edge_list(3, &[]).unwrap();
        assert_eq!(chromatic_poly_delcon(&e3, 2).unwrap(), BigUint::from(8u32));
    }

    #[test]
    fn delcon_matches_partition_count() {
        let mut rng = crate::gen::TestRng::new(13);
        for _ in 0..150 {
            let n = 1 + rng.below(8);
            let g = crate::gen::random_graph(&mut rng, n, 0.5);
            for q in 1..=4 {
                assert_eq!(
                    chromatic_poly_delcon(&g, q).unwrap(),
                    brute_col_count(&g, q).unwrap(),
                    "{g:?} q={q}"
                );
            }
        }
    }

    #[test]
    fn min_nu_examples() {
        // C5's triangle-free thin graphs are C5 and C4
        assert_eq!(brute_min_nu_trianglefree(&cycle(5)).unwrap(), Some(4));
        // P4 can be covered by two K2s
        assert_eq!(brute_min_nu_trianglefree(&path(4)).unwrap(), Some(2));
        // a clique collapses to one vertex
        assert_eq!(brute_min_nu_trianglefree(&complete(5)).unwrap(), Some(1));
        // K_{1,3}: the claw is triangle-free itself; can merge centre with one leaf
        let claw = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(brute_min_nu_trianglefree(&claw).unwrap(), Some(3));
    }
}
