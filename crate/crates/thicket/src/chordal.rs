//! Chordality testing, minimal triangulation and maximal-clique-separator
//! listing for cobipartite graphs.

use crate::graph::{Graph, VertexSet};

/// LexBFS ordering; ties broken by smallest vertex index.
pub fn lexbfs_order(g: &Graph) -> Vec<u32> {
    lexbfs(g, None)
}

/// LexBFS ordering forced to start at `start`.
pub fn lexbfs_from(g: &Graph, start: u32) -> Vec<u32> {
    lexbfs(g, Some(start))
}

fn lexbfs(g: &Graph, start: Option<u32>) -> Vec<u32> {
    let n = g.n();
    // partition refinement over sorted blocks; pick min of the first block
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    match start {
        Some(s) => {
            blocks.push(vec![s]);
            let rest: Vec<u32> = (0..n as u32).filter(|&v| v != s).collect();
            if !rest.is_empty() {
                blocks.push(rest);
            }
        }
        None => {
            if n > 0 {
                blocks.push((0..n as u32).collect());
            }
        }
    }
    let mut order = Vec::with_capacity(n);
    while let Some(first) = blocks.first_mut() {
        let v = first.remove(0);
        if first.is_empty() {
            blocks.remove(0);
        }
        order.push(v);
        let mut next_blocks = Vec::with_capacity(blocks.len());
        for block in blocks.drain(..) {
            let (hit, miss): (Vec<u32>, Vec<u32>) =
                block.into_iter().partition(|&u| g.has_edge(u, v));
            if !hit.is_empty() {
                next_blocks.push(hit);
            }
            if !miss.is_empty() {
                next_blocks.push(miss);
            }
        }
        blocks = next_blocks;
    }
    order
}

#[derive(Debug, Clone)]
pub enum Chordality {
    /// A perfect elimination order (first vertex eliminated first).
    Chordal { peo: Vec<u32> },
    /// An induced cycle of length >= 4.
    Hole { cycle: Vec<u32> },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

pub fn is_chordal(g: &Graph) -> Chordality {
    let sigma = lexbfs_order(g);
    // reverse LexBFS order is the candidate PEO
    let peo: Vec<u32> = sigma.iter().rev().copied().collect();
    match check_peo(g, &peo) {
        None => Chordality::Chordal { peo },
        Some((v, p, w)) => {
            if let Some(cycle) = hole_through(g, v, p, w) {
                return Chordality::Hole { cycle };
            }
            Chordality::Hole {
                cycle: find_hole(g).expect("PEO check failed on a chordal graph"),
            }
        }
    }
}

/// Verifies a perfect elimination order; on failure returns (v, parent, w)
/// with parent, w later neighbours of v that are non-adjacent.
pub fn check_peo(g: &Graph, peo: &[u32]) -> Option<(u32, u32, u32)> {
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v as usize] = i;
    }
    for &v in peo {
        let later: Vec<u32> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| pos[u as usize] > pos[v as usize])
            .collect();
        if later.len() < 2 {
            continue;
        }
        let parent = *later.iter().min_by_key(|&&u| pos[u as usize]).unwrap();
        for &w in &later {
            if w != parent && !g.has_edge(parent, w) {
                return Some((v, parent, w));
            }
        }
    }
    None
}

/// Induced cycle through v and two non-adjacent neighbours p, w, if any:
/// a shortest p-w path avoiding N[v] \ {p, w}, closed through v.
fn hole_through(g: &Graph, v: u32, p: u32, w: u32) -> Option<Vec<u32>> {
    let n = g.n();
    let mut allowed = vec![true; n];
    allowed[v as usize] = false;
    for &u in g.neighbors(v) {
        allowed[u as usize] = false;
    }
    allowed[p as usize] = true;
    allowed[w as usize] = true;
    // BFS from p to w
    let mut prev = vec![u32::MAX; n];
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    seen[p as usize] = true;
    queue.push_back(p);
    while let Some(x) = queue.pop_front() {
        if x == w {
            // cycle in order v, p, ..., w
            let mut path = vec![w];
            let mut cur = w;
            while cur != p {
                cur = prev[cur as usize];
                path.push(cur);
            }
            path.push(v);
            path.reverse();
            debug_assert!(path.len() >= 4);
            return Some(path);
        }
        for &y in g.neighbors(x) {
            if allowed[y as usize] && !seen[y as usize] {
                seen[y as usize] = true;
                prev[y as usize] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// Exhaustive hole search over all (v, p, w) triples.
fn find_hole(g: &Graph) -> Option<Vec<u32>> {
    for v in g.vertices() {
        let nb = g.neighbors(v);
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                if !g.has_edge(nb[i], nb[j]) {
                    if let Some(c) = hole_through(g, v, nb[i], nb[j]) {
                        return Some(c);
                    }
                }
            }
        }
    }
    None
}

/// Checks that `cycle` is an induced cycle of length >= 4 in g.
pub fn is_hole(g: &Graph, cycle: &[u32]) -> bool {
    let k = cycle.len();
    if k < 4 {
        return false;
    }
    let set: std::collections::HashSet<u32> = cycle.iter().copied().collect();
    if set.len() != k {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let adjacent = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(cycle[i], cycle[j]) != adjacent {
                return false;
            }
        }
    }
    true
}

/// Minimal elimination ordering plus the fill it induces (MCS-M).
#[derive(Debug, Clone)]
pub struct MinimalFill {
    /// Elimination order, first eliminated first; a perfect elimination
    /// order of the filled graph.
    pub order: Vec<u32>,
    pub fill: Vec<(u32, u32)>,
}

/// MCS-M: computes an inclusion-minimal triangulation.
pub fn mcs_m(g: &Graph) -> MinimalFill {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut order_rev = Vec::with_capacity(n);
    let mut fill = Vec::new();

    for _ in 0..n {
        let v = (0..n as u32)
            .filter(|&x| !numbered[x as usize])
            .max_by(|&a, &b| {
                weight[a as usize]
                    .cmp(&weight[b as usize])
                    .then(b.cmp(&a)) // smaller index wins ties
            })
            .unwrap();

        // bottleneck search: reach[u] = min over v-u paths through
        // unnumbered vertices of the max internal weight (-1 if direct).
        let reach = bottleneck_from(g, v, &numbered, &weight);
        for u in 0..n as u32 {
            if u == v || numbered[u as usize] {
                continue;
            }
            if let Some(b) = reach[u as usize] {
                if b < weight[u as usize] as i64 {
                    weight[u as usize] += 1;
                    if !g.has_edge(u, v) {
                        fill.push((u.min(v), u.max(v)));
                    }
                }
            }
        }
        numbered[v as usize] = true;
        order_rev.push(v);
    }
    order_rev.reverse();
    fill.sort_unstable();
    fill.dedup();
    MinimalFill {
        order: order_rev,
        fill,
    }
}

/// For each unnumbered u, the minimum over v-u paths (internal vertices
/// unnumbered) of the maximum internal weight; -1 when a direct edge
/// exists; None when unreachable.
fn bottleneck_from(g: &Graph, v: u32, numbered: &[bool], weight: &[usize]) -> Vec<Option<i64>> {
    let n = g.n();
    let mut best: Vec<Option<i64>> = vec![None; n];
    // bucket Dijkstra over values -1..n
    let mut buckets: Vec<Vec<u32>> = vec![Vec::new(); n + 2];
    let idx = |b: i64| (b + 1) as usize;
    for &u in g.neighbors(v) {
        if !numbered[u as usize] {
            best[u as usize] = Some(-1);
            buckets[idx(-1)].push(u);
        }
    }
    let mut done = vec![false; n];
    for b in 0..buckets.len() {
        let mut i = 0;
        while i < buckets[b].len() {
            let x = buckets[b][i];
            i += 1;
            if done[x as usize] || best[x as usize] != Some(b as i64 - 1) {
                continue;
            }
            done[x as usize] = true;
            let through = (b as i64 - 1).max(weight[x as usize] as i64);
            for &y in g.neighbors(x) {
                if y == v || numbered[y as usize] {
                    continue;
                }
                if best[y as usize].is_none() || best[y as usize].unwrap() > through {
                    best[y as usize] = Some(through);
                    buckets[idx(through)].push(y);
                }
            }
        }
    }
    best
}

/// Inclusion-minimal fill whose addition makes g chordal.
pub fn minimal_triangulation(g: &Graph) -> Vec<(u32, u32)> {
    mcs_m(g).fill
}

pub fn add_fill(g: &Graph, fill: &[(u32, u32)]) -> Graph {
    let mut pairs = g.edges();
    pairs.extend_from_slice(fill);
    Graph::from_edge_list(g.n(), &pairs).unwrap()
}

/// All maximal cliques of a chordal graph, from a perfect elimination
/// order: candidates {v} ∪ RN(v), with the Blair-Peyton maximality test.
pub fn maximal_cliques_chordal(g: &Graph, peo: &[u32]) -> Vec<VertexSet> {
    let n = g.n();
    assert_eq!(peo.len(), n);
    debug_assert!(check_peo(g, peo).is_none(), "input order is not a PEO");
    let mut pos = vec![0usize; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v as usize] = i;
    }
    let later = |v: u32| -> Vec<u32> {
        g.neighbors(v)
            .iter()
            .copied()
            .filter(|&u| pos[u as usize] > pos[v as usize])
            .collect()
    };
    let mut non_maximal = vec![false; n];
    for u in 0..n as u32 {
        let rn = later(u);
        if let Some(&p) = rn.iter().min_by_key(|&&x| pos[x as usize]) {
            if later(p).len() == rn.len() - 1 {
                non_maximal[p as usize] = true;
            }
        }
    }
    let mut out = Vec::new();
    for v in 0..n as u32 {
        if non_maximal[v as usize] {
            continue;
        }
        let mut c = later(v);
        c.push(v);
        out.push(VertexSet::from_unsorted(c));
    }
    out.sort();
    out.dedup();
    out
}

/// Lists the internal maximal clique separators of a cobipartite graph
/// with clique sides `side_u`, `side_w`: triangulate minimally, enumerate
/// the maximal cliques of the filled graph, keep those separating it,
/// shrink fill-adjacent side-w vertices away, and validate. At most
/// min(|U|, |W|) - 1 results, sorted by |A ∩ U| ascending.
pub fn cobipartite_max_clique_separators(
    g: &Graph,
    side_u: &VertexSet,
    side_w: &VertexSet,
) -> Vec<VertexSet> {
    assert!(g.is_clique(side_u) && g.is_clique(side_w), "sides must be cliques");
    assert_eq!(side_u.len() + side_w.len(), g.n(), "sides must cover V");

    let mf = mcs_m(g);
    let filled = add_fill(g, &mf.fill);
    let in_fill: std::collections::HashSet<(u32, u32)> = mf.fill.iter().copied().collect();
    let cliques = maximal_cliques_chordal(&filled, &mf.order);

    let mut out: Vec<VertexSet> = Vec::new();
    for c in cliques {
        let ci_u = c.intersect(side_u);
        let ci_w = c.intersect(side_w);
        let rest_u = side_u.minus(&ci_u);
        let rest_w = side_w.minus(&ci_w);
        if rest_u.is_empty() || rest_w.is_empty() {
            continue;
        }
        // separator of the filled graph iff no surviving crossing edge
        let crossing = rest_u
            .iter()
            .any(|u| rest_w.iter().any(|w| filled.has_edge(u, w)));
        if crossing {
            continue;
        }
        // shrink: drop side-w vertices incident to a fill edge into U_i
        let shrunk_w: VertexSet = ci_w
            .iter()
            .filter(|&w| {
                !ci_u
                    .iter()
                    .any(|u| in_fill.contains(&(u.min(w), u.max(w))))
            })
            .collect();
        let cand = ci_u.union(&shrunk_w);
        if cand.is_empty() || !g.is_clique(&cand) {
            continue;
        }
        // must still be a maximal clique and a separator in g
        let maximal = !g.vertices().any(|v| g.complete_to(v, &cand));
        if !maximal {
            continue;
        }
        let rest = VertexSet::full(g.n()).minus(&cand);
        if g.components_within(&rest).len() < 2 {
            continue;
        }
        out.push(cand);
    }
    out.sort();
    out.dedup();
    out.sort_by_key(|a| a.intersect(side_u).len());
    debug_assert!(out.len() <= side_u.len().min(side_w.len()).saturating_sub(1));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{random_cobipartite, random_graph, TestRng};
    use crate::graph::Graph;

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

    #[test]
    fn lexbfs_examples() {
        let k3 = complete(3);
        assert_eq!(lexbfs_order(&k3), vec![0, 1, 2]);

        // hand-simulated: from 2, P3 gives [2,1,0]
        assert_eq!(lexbfs_from(&path(3), 2), vec![2, 1, 0]);

        let empty = Graph::from_edge_list(3, &[]).unwrap();
        assert_eq!(lexbfs_order(&empty), vec![0, 1, 2]);
    }

    #[test]
    fn chordality_examples() {
        match is_chordal(&cycle(4)) {
            Chordality::Hole { cycle } => {
                assert_eq!(cycle.len(), 4);
            }
            _ => panic!("C4 reported chordal"),
        }
        assert!(is_chordal(&path(5)).is_chordal());
        assert!(is_chordal(&complete(6)).is_chordal());
    }

    #[test]
    fn hole_witness_is_induced_cycle() {
        let mut rng = TestRng::new(5);
        let mut holes = 0;
        for _ in 0..400 {
            let n = 4 + rng.below(6);
            let g = random_graph(&mut rng, n, 0.4);
            if let Chordality::Hole { cycle } = is_chordal(&g) {
                assert!(is_hole(&g, &cycle), "bad witness {cycle:?} in {g:?}");
                holes += 1;
            }
        }
        assert!(holes > 20);
    }

    /// brute-force chordality: no subset induces a cycle of length >= 4
    fn brute_chordal(g: &Graph) -> bool {
        let n = g.n();
        for mask in 0u32..1 << n {
            if (mask.count_ones() as usize) < 4 {
                continue;
            }
            let vs: Vec<u32> = (0..n as u32).filter(|&v| mask >> v & 1 == 1).collect();
            let deg_ok = vs.iter().all(|&v| {
                vs.iter().filter(|&&u| u != v && g.has_edge(u, v)).count() == 2
            });
            if !deg_ok {
                continue;
            }
            let (sub, _) = g.induced(&crate::graph::VertexSet::from_unsorted(vs)).unwrap();
            if sub.is_connected() {
                return false;
            }
        }
        true
    }

    #[test]
    fn chordality_matches_brute_force() {
        let mut rng = TestRng::new(17);
        for _ in 0..400 {
            let n = 1 + rng.below(8);
            let g = random_graph(&mut rng, n, 0.45);
            assert_eq!(is_chordal(&g).is_chordal(), brute_chordal(&g), "{g:?}");
        }
    }

    #[test]
    fn triangulation_examples() {
        assert_eq!(minimal_triangulation(&cycle(4)).len(), 1);
        assert_eq!(minimal_triangulation(&cycle(5)).len(), 2);
        assert!(minimal_triangulation(&path(6)).is_empty());
        assert!(minimal_triangulation(&complete(5)).is_empty());
    }

    #[test]
    fn triangulation_is_minimal() {
        let mut rng = TestRng::new(31);
        for _ in 0..200 {
            let n = 1 + rng.below(8);
            let g = random_graph(&mut rng, n, 0.4);
            let fill = minimal_triangulation(&g);
            let filled = add_fill(&g, &fill);
            assert!(is_chordal(&filled).is_chordal(), "fill not chordal: {g:?}");
            for i in 0..fill.len() {
                let without: Vec<(u32, u32)> = fill
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &e)| e)
                    .collect();
                let sub = add_fill(&g, &without);
                assert!(
                    !is_chordal(&sub).is_chordal(),
                    "fill edge {:?} redundant in {g:?}",
                    fill[i]
                );
            }
        }
    }

    #[test]
    fn mcsm_order_is_peo_of_filled_graph() {
        let mut rng = TestRng::new(41);
        for _ in 0..200 {
            let n = 1 + rng.below(9);
            let g = random_graph(&mut rng, n, 0.4);
            let mf = mcs_m(&g);
            let filled = add_fill(&g, &mf.fill);
            assert!(check_peo(&filled, &mf.order).is_none(), "{g:?}");
        }
    }

    fn brute_maximal_cliques(g: &Graph) -> Vec<VertexSet> {
        let n = g.n();
        let mut out = Vec::new();
        for mask in 1u32..1 << n {
            let vs: VertexSet = (0..n as u32).filter(|&v| mask >> v & 1 == 1).collect();
            if !g.is_clique(&vs) {
                continue;
            }
            let extendable = g.vertices().any(|v| g.complete_to(v, &vs));
            if !extendable {
                out.push(vs);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn maximal_cliques_examples() {
        let k4 = complete(4);
        let cl = maximal_cliques_chordal(&k4, &[0, 1, 2, 3]);
        assert_eq!(cl, vec![VertexSet::full(4)]);

        let p3 = path(3);
        let peo = match is_chordal(&p3) {
            Chordality::Chordal { peo } => peo,
            _ => unreachable!(),
        };
        let cl = maximal_cliques_chordal(&p3, &peo);
        assert_eq!(
            cl,
            vec![
                VertexSet::from_sorted(vec![0, 1]),
                VertexSet::from_sorted(vec![1, 2])
            ]
        );
    }

    #[test]
    fn maximal_cliques_match_brute_force() {
        let mut rng = TestRng::new(53);
        let mut tested = 0;
        for _ in 0..400 {
            let n = 1 + rng.below(8);
            let g = random_graph(&mut rng, n, 0.5);
            if let Chordality::Chordal { peo } = is_chordal(&g) {
                assert_eq!(maximal_cliques_chordal(&g, &peo), brute_maximal_cliques(&g));
                tested += 1;
            }
        }
        assert!(tested > 50);
    }

    #[test]
    fn cobipartite_separators_on_cochain() {
        // the cochain graph attains the min(|U|,|W|) - 1 bound, with
        // |A_r ∩ U| = k - r + 1 for r = 1..k-1
        for k in 2..=6 {
            let (g, u, w) = crate::gen::gen_cochain(k);
            let seps = cobipartite_max_clique_separators(&g, &u, &w);
            assert_eq!(seps.len(), k - 1);
            let mut sizes: Vec<usize> = seps.iter().map(|a| a.intersect(&u).len()).collect();
            sizes.sort_unstable();
            assert_eq!(sizes, (2..=k).collect::<Vec<_>>());
        }
    }

    #[test]
    fn cobipartite_separators_trivial_cases() {
        // complete cobipartite graph: no separator
        let k6 = complete(6);
        let u: VertexSet = (0..3).collect();
        let w: VertexSet = (3..6).collect();
        assert!(cobipartite_max_clique_separators(&k6, &u, &w).is_empty());

        // C4 with sides {0,1}, {2,3}: no maximal clique separates C4
        let c4 = cycle(4);
        let u: VertexSet = (0..2).collect();
        let w: VertexSet = (2..4).collect();
        assert!(cobipartite_max_clique_separators(&c4, &u, &w).is_empty());
    }

    #[test]
    fn cobipartite_separators_match_brute_force() {
        let mut rng = TestRng::new(61);
        for round in 0..600 {
            let n = 2 + rng.below(11);
            let (g, u, w) = random_cobipartite(&mut rng, n, 0.3 + 0.4 * ((round % 3) as f64) / 2.0);
            let mut seps = cobipartite_max_clique_separators(&g, &u, &w);
            let mut brute = crate::oracle::brute_max_clique_separators(&g).unwrap();
            seps.sort();
            brute.sort();
            assert_eq!(seps, brute, "disagreement on {g:?} sides {u} {w}");
            assert!(seps.len() <= u.len().min(w.len()).saturating_sub(1).max(0));
            // at most one separator per |A ∩ U| value
            let mut by_u: Vec<usize> = seps.iter().map(|a| a.intersect(&u).len()).collect();
            by_u.sort_unstable();
            let len = by_u.len();
            by_u.dedup();
            assert_eq!(len, by_u.len());
        }
    }
}
