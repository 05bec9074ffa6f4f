//! Graph generators: random graphs, random thick forests with their
//! ground-truth models, and the extremal separator constructions.

use crate::graph::{Graph, VertexSet};
use crate::recognize::ThickModel;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Small deterministic RNG used by generators and tests.
pub struct TestRng(ChaCha8Rng);

impl TestRng {
    pub fn new(seed: u64) -> Self {
        TestRng(ChaCha8Rng::seed_from_u64(seed))
    }

    /// Uniform in `0..k` (k > 0).
    pub fn below(&mut self, k: usize) -> usize {
        self.0.gen_range(0..k)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.0.gen_bool(p.clamp(0.0, 1.0))
    }
}

/// G(n, p) with the given edge probability.
pub fn random_graph(rng: &mut TestRng, n: usize, p: f64) -> Graph {
    let mut pairs = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.chance(p) {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &pairs).unwrap()
}

/// Random cobipartite graph: two cliques of total size `n`, each crossing
/// pair made an edge with probability `p`. Returns the graph and its sides.
pub fn random_cobipartite(rng: &mut TestRng, n: usize, p: f64) -> (Graph, VertexSet, VertexSet) {
    let split = if n <= 1 { n } else { 1 + rng.below(n - 1) };
    let side_u: Vec<u32> = (0..split as u32).collect();
    let side_w: Vec<u32> = (split as u32..n as u32).collect();
    let mut pairs = Vec::new();
    for s in [&side_u, &side_w] {
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                pairs.push((s[i], s[j]));
            }
        }
    }
    for &u in &side_u {
        for &w in &side_w {
            if rng.chance(p) {
                pairs.push((u, w));
            }
        }
    }
    let g = Graph::from_edge_list(n, &pairs).unwrap();
    (
        g,
        VertexSet::from_unsorted(side_u),
        VertexSet::from_unsorted(side_w),
    )
}

/// Cochain graph on 2k vertices: cliques `u_1..u_k` (vertices 0..k) and
/// `w_1..w_k` (vertices k..2k), with crossing edge u_i w_j exactly when
/// i >= j. Returns the graph and the two sides.
pub fn gen_cochain(k: usize) -> (Graph, VertexSet, VertexSet) {
    assert!(k >= 2, "cochain generator needs k >= 2");
    let n = 2 * k;
    let mut pairs = Vec::new();
    for i in 0..k as u32 {
        for j in i + 1..k as u32 {
            pairs.push((i, j));
            pairs.push((k as u32 + i, k as u32 + j));
        }
    }
    for i in 1..=k {
        for j in 1..=i {
            pairs.push(((i - 1) as u32, (k + j - 1) as u32));
        }
    }
    let g = Graph::from_edge_list(n, &pairs).unwrap();
    (
        g,
        (0..k as u32).collect(),
        (k as u32..2 * k as u32).collect(),
    )
}

/// A thick P4 on 2k+2 vertices with at least 2^k maximal clique separators:
/// a 2k-clique minus a perfect matching, plus a pendant on each side of the
/// first matched pair. Vertices: u_i = i-1, w_i = k+i-1 (i in 1..=k),
/// u' = 2k, w' = 2k+1.
pub fn gen_exponential_separators(k: usize) -> Graph {
    assert!(k >= 2);
    let n = 2 * k + 2;
    let mut pairs = Vec::new();
    for a in 0..2 * k as u32 {
        for b in a + 1..2 * k as u32 {
            // remove the matching u_i w_i
            if b as usize == a as usize + k {
                continue;
            }
            pairs.push((a, b));
        }
    }
    pairs.push((0, 2 * k as u32)); // u1 - u'
    pairs.push((k as u32, 2 * k as u32 + 1)); // w1 - w'
    Graph::from_edge_list(n, &pairs).unwrap()
}

/// A thick P4 on 2k+4 vertices whose maximal-clique-separator count is
/// twice the number of maximal independent sets of C_{2k}: two
/// (2k+1)-cliques sharing a 2k-clique, minus a Hamilton cycle of the
/// shared clique, plus two pendants. Vertices: u_i = i-1, w_i = k+i-1
/// (i in 1..=k), u_0 = 2k, w_0 = 2k+1, u' = 2k+2, w' = 2k+3.
pub fn gen_perrin_separators(k: usize) -> Graph {
    assert!(k >= 2);
    let n = 2 * k + 4;
    let ku = k as u32;
    let u0 = 2 * ku;
    let w0 = 2 * ku + 1;
    let mut removed = std::collections::HashSet::new();
    // cycle u_1 w_2 u_2 w_3 ... u_k w_1: edges u_i w_i and u_i w_{i+1 mod k}
    for i in 0..k {
        let ui = i as u32;
        let wi = ku + i as u32;
        let wnext = ku + ((i + 1) % k) as u32;
        removed.insert((ui.min(wi), ui.max(wi)));
        removed.insert((ui.min(wnext), ui.max(wnext)));
    }
    let mut pairs = Vec::new();
    for a in 0..2 * ku {
        for b in a + 1..2 * ku {
            if !removed.contains(&(a, b)) {
                pairs.push((a, b));
            }
        }
    }
    for c in 0..2 * ku {
        pairs.push((c, u0));
        pairs.push((c, w0));
    }
    pairs.push((u0, 2 * ku + 2));
    pairs.push((w0, 2 * ku + 3));
    Graph::from_edge_list(n, &pairs).unwrap()
}

/// Chain of t single-apex triangles on a spine, with a double apex on the
/// first spine edge; 2t+4 vertices. Spine: 0..=t+1; apexes of the first
/// spine edge: t+2, t+3; apex of spine edge (i, i+1) for i >= 1: t+3+i.
pub fn gen_triangle_chain(t: usize) -> Graph {
    assert!(t >= 1);
    let n = 2 * t + 4;
    let spine_len = t + 2;
    let mut pairs = Vec::new();
    for i in 0..spine_len as u32 - 1 {
        pairs.push((i, i + 1));
    }
    let p = spine_len as u32;
    let q = p + 1;
    pairs.push((0, p));
    pairs.push((1, p));
    pairs.push((0, q));
    pairs.push((1, q));
    for i in 1..=t {
        let apex = (spine_len + 1 + i) as u32;
        pairs.push((i as u32, apex));
        pairs.push((i as u32 + 1, apex));
    }
    Graph::from_edge_list(n, &pairs).unwrap()
}

/// Random thick forest with its ground-truth model. A labelled tree on
/// n_h + 1 vertices is sampled from a uniform Pruefer sequence and the
/// last vertex dropped, leaving a forest on n_h thin vertices. Clique
/// sizes are uniform in 1..=max_clique_size; each crossing pair of a
/// thick edge is an edge with probability `density` (thick edges may end
/// up complete-crossing, sparse or even empty).
pub fn gen_random_thick_forest(
    seed: u64,
    n_h: usize,
    max_clique_size: usize,
    density: f64,
) -> (Graph, ThickModel) {
    let mut rng = TestRng::new(seed);
    assert!(n_h >= 1 && max_clique_size >= 1);
    let forest_edges = random_forest_edges(&mut rng, n_h);

    let sizes: Vec<usize> = (0..n_h).map(|_| 1 + rng.below(max_clique_size)).collect();
    let mut phi = Vec::new();
    let mut classes: Vec<Vec<u32>> = Vec::new();
    let mut next = 0u32;
    for (t, &sz) in sizes.iter().enumerate() {
        let mut cls = Vec::new();
        for _ in 0..sz {
            phi.push(t as u32);
            cls.push(next);
            next += 1;
        }
        classes.push(cls);
    }
    let mut pairs = Vec::new();
    for cls in &classes {
        for i in 0..cls.len() {
            for j in i + 1..cls.len() {
                pairs.push((cls[i], cls[j]));
            }
        }
    }
    for &(a, b) in &forest_edges {
        for &u in &classes[a] {
            for &w in &classes[b] {
                if rng.chance(density) {
                    pairs.push((u, w));
                }
            }
        }
    }
    let g = Graph::from_edge_list(next as usize, &pairs).unwrap();
    let thin_edges: Vec<(u32, u32)> = forest_edges
        .iter()
        .map(|&(a, b)| (a.min(b) as u32, a.max(b) as u32))
        .collect();
    let model = ThickModel::new(n_h, thin_edges, phi);
    (g, model)
}

fn random_forest_edges(rng: &mut TestRng, n_h: usize) -> Vec<(usize, usize)> {
    if n_h <= 1 {
        return Vec::new();
    }
    // uniform labelled tree on n_h + 1 vertices via Pruefer, drop the last
    let nt = n_h + 1;
    let seq: Vec<usize> = (0..nt - 2).map(|_| rng.below(nt)).collect();
    let mut degree = vec![1usize; nt];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut edges = Vec::new();
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..nt)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    for &s in &seq {
        let std::cmp::Reverse(leaf) = leaves.pop().unwrap();
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.push(std::cmp::Reverse(s));
        }
    }
    let std::cmp::Reverse(a) = leaves.pop().unwrap();
    let std::cmp::Reverse(b) = leaves.pop().unwrap();
    edges.push((a, b));
    edges.retain(|&(a, b)| a != n_h && b != n_h);
    edges
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cochain_is_cobipartite_and_chordal() {
        for k in 2..=6 {
            let (g, u, w) = gen_cochain(k);
            assert!(g.is_clique(&u));
            assert!(g.is_clique(&w));
            assert!(matches!(
                crate::chordal::is_chordal(&g),
                crate::chordal::Chordality::Chordal { .. }
            ));
        }
    }

    #[test]
    fn exponential_separators_shape() {
        for k in 2..=5 {
            let g = gen_exponential_separators(k);
            assert_eq!(g.n(), 2 * k + 2);
            // the inner 2k vertices induce a cobipartite graph
            let inner: VertexSet = (0..2 * k as u32).collect();
            let (sub, _) = g.induced(&inner).unwrap();
            assert!(crate::recognize::recognize_cobipartite(&sub).is_some());
        }
    }

    #[test]
    fn perrin_separators_shape() {
        for k in 3..=5 {
            let g = gen_perrin_separators(k);
            assert_eq!(g.n(), 2 * k + 4);
            // the inner part plus u0/w0 is cobipartite with exactly two
            // bipartitions; in particular it is cobipartite
            let inner: VertexSet = (0..2 * k as u32 + 2).collect();
            let (sub, _) = g.induced(&inner).unwrap();
            assert!(crate::recognize::recognize_cobipartite(&sub).is_some());
        }
    }

    #[test]
    fn random_thick_forest_model_is_valid() {
        for seed in 0..50 {
            let (g, model) = gen_random_thick_forest(seed, 1 + (seed as usize % 7), 4, 0.5);
            assert!(crate::recognize::verify_model(
                &g,
                &model,
                crate::recognize::ModelClass::Forest
            )
            .is_ok());
        }
    }

    #[test]
    fn forest_edges_acyclic() {
        let mut rng = TestRng::new(99);
        for n_h in 1..30 {
            let edges = random_forest_edges(&mut rng, n_h);
            let pairs: Vec<(u32, u32)> = edges.iter().map(|&(a, b)| (a as u32, b as u32)).collect();
            let f = Graph::from_edge_list(n_h, &pairs).unwrap();
            assert_eq!(f.m(), pairs.len(), "parallel edge in forest");
            // acyclic: m = n - #components
            assert_eq!(f.m(), n_h - f.components().len());
        }
    }
}
