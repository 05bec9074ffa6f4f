//! Immutable simple undirected graphs with the primitive queries the
//! rest of the crate is built on.
//!
//! Vertices are dense integers `0..n`. Graphs are immutable after
//! construction; algorithms that need to "delete" vertices work on
//! induced copies.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("edge endpoint {0} out of range (n = {1})")]
    OutOfRange(u32, usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(u32, u32),
    #[error("vertex {0} out of range (n = {1})")]
    BadVertex(u32, usize),
}

/// A set of vertices kept in strictly increasing order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(Vec<u32>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn from_sorted(v: Vec<u32>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        VertexSet(v)
    }

    /// Sorts and deduplicates.
    pub fn from_unsorted(mut v: Vec<u32>) -> Self {
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn singleton(v: u32) -> Self {
        VertexSet(vec![v])
    }

    pub fn full(n: usize) -> Self {
        VertexSet((0..n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn min(&self) -> Option<u32> {
        self.0.first().copied()
    }

    pub fn insert(&mut self, v: u32) {
        if let Err(pos) = self.0.binary_search(&v) {
            self.0.insert(pos, v);
        }
    }

    pub fn remove(&mut self, v: u32) {
        if let Ok(pos) = self.0.binary_search(&v) {
            self.0.remove(pos);
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        VertexSet::from_unsorted(v)
    }

    pub fn minus(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    pub fn intersect(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }
}

impl FromIterator<u32> for VertexSet {
    fn from_iter<T: IntoIterator<Item = u32>>(iter: T) -> Self {
        VertexSet::from_unsorted(iter.into_iter().collect())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Adjacency-bitset rows are kept for graphs up to this many vertices,
/// giving O(1) pair queries. Larger graphs fall back to binary search
/// in the sorted neighbour arrays.
const BITSET_LIMIT: usize = 4096;

#[derive(Clone)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<u32>>,
    bits: Option<Vec<Vec<u64>>>,
}

impl Graph {
    pub fn from_edge_list(n: usize, pairs: &[(u32, u32)]) -> Result<Graph, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in pairs {
            if u as usize >= n {
                return Err(GraphError::OutOfRange(u, n));
            }
            if v as usize >= n {
                return Err(GraphError::OutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        let mut m = 0;
        for row in adj.iter_mut() {
            row.sort_unstable();
            row.dedup();
            m += row.len();
        }
        debug_assert!(m % 2 == 0);
        let mut g = Graph {
            n,
            m: m / 2,
            adj,
            bits: None,
        };
        g.build_bits();
        Ok(g)
    }

    fn build_bits(&mut self) {
        if self.n <= BITSET_LIMIT {
            let words = self.n.div_ceil(64);
            let mut bits = vec![vec![0u64; words]; self.n];
            for (v, row) in self.adj.iter().enumerate() {
                for &u in row {
                    bits[v][u as usize / 64] |= 1 << (u % 64);
                }
            }
            self.bits = Some(bits);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> {
        0..self.n as u32
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        if u == v {
            return false;
        }
        match &self.bits {
            Some(bits) => bits[u as usize][v as usize / 64] >> (v % 64) & 1 == 1,
            None => self.adj[u as usize].binary_search(&v).is_ok(),
        }
    }

    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.m);
        for v in self.vertices() {
            for &u in self.neighbors(v) {
                if v < u {
                    out.push((v, u));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut pairs = Vec::new();
        for u in 0..self.n as u32 {
            for v in u + 1..self.n as u32 {
                if !self.has_edge(u, v) {
                    pairs.push((u, v));
                }
            }
        }
        Graph::from_edge_list(self.n, &pairs).expect("complement of a valid graph is valid")
    }

    /// Induced subgraph on `s`, relabelled to `0..s.len()`. The returned
    /// map sends new labels back to vertices of `self`.
    pub fn induced(&self, s: &VertexSet) -> Result<(Graph, Vec<u32>), GraphError> {
        let map: Vec<u32> = s.iter().collect();
        if let Some(&v) = map.iter().find(|&&v| v as usize >= self.n) {
            return Err(GraphError::BadVertex(v, self.n));
        }
        let mut inv = vec![u32::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        let mut pairs = Vec::new();
        for (i, &v) in map.iter().enumerate() {
            for &u in self.neighbors(v) {
                let j = inv[u as usize];
                if j != u32::MAX && (i as u32) < j {
                    pairs.push((i as u32, j));
                }
            }
        }
        let g = Graph::from_edge_list(map.len(), &pairs)?;
        Ok((g, map))
    }

    /// Connected components, sorted by minimum vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&VertexSet::full(self.n))
    }

    /// Connected components of the subgraph induced by `within`.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut inside = vec![false; self.n];
        for v in within.iter() {
            inside[v as usize] = true;
        }
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for start in within.iter() {
            if seen[start as usize] {
                continue;
            }
            let mut comp = Vec::new();
            seen[start as usize] = true;
            stack.push(start);
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &u in self.neighbors(v) {
                    if inside[u as usize] && !seen[u as usize] {
                        seen[u as usize] = true;
                        stack.push(u);
                    }
                }
            }
            out.push(VertexSet::from_unsorted(comp));
        }
        out.sort_by_key(|c| c.min());
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let vs: Vec<u32> = s.iter().collect();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                if !self.has_edge(vs[i], vs[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// True if the whole vertex set induces a clique.
    pub fn is_complete(&self) -> bool {
        self.m == self.n * (self.n.saturating_sub(1)) / 2
    }

    /// A proper 2-colouring per component if one exists. The side holding
    /// the least-indexed vertex of each component is listed first.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut colour = vec![u8::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for start in 0..self.n as u32 {
            if colour[start as usize] != u8::MAX {
                continue;
            }
            colour[start as usize] = 0;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for &u in self.neighbors(v) {
                    if colour[u as usize] == u8::MAX {
                        colour[u as usize] = 1 - colour[v as usize];
                        queue.push_back(u);
                    } else if colour[u as usize] == colour[v as usize] {
                        return None;
                    }
                }
            }
        }
        let left = (0..self.n as u32).filter(|&v| colour[v as usize] == 0).collect();
        let right = (0..self.n as u32).filter(|&v| colour[v as usize] == 1).collect();
        Some((left, right))
    }

    /// N(s) \ s for a vertex set.
    pub fn neighborhood_of_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = Vec::new();
        for v in s.iter() {
            for &u in self.neighbors(v) {
                if !s.contains(u) {
                    out.push(u);
                }
            }
        }
        VertexSet::from_unsorted(out)
    }

    /// True if `v` is adjacent to every vertex of `s` (and not in `s`).
    pub fn complete_to(&self, v: u32, s: &VertexSet) -> bool {
        !s.contains(v) && s.iter().all(|u| self.has_edge(v, u))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn path(n: usize) -> Graph {
        let pairs: Vec<_> = (0..n as u32 - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edge_list(n, &pairs).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        let mut pairs: Vec<_> = (0..n as u32 - 1).map(|i| (i, i + 1)).collect();
        pairs.push((n as u32 - 1, 0));
        Graph::from_edge_list(n, &pairs).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut pairs = Vec::new();
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                pairs.push((u, v));
            }
        }
        Graph::from_edge_list(n, &pairs).unwrap()
    }

    #[test]
    fn from_edge_list_basic() {
        let p3 = path(3);
        assert_eq!(p3.n(), 3);
        assert_eq!(p3.m(), 2);
        assert!(p3.has_edge(0, 1) && p3.has_edge(1, 2) && !p3.has_edge(0, 2));

        let c4 = cycle(4);
        assert_eq!(c4.m(), 4);
        assert!(c4.has_edge(3, 0));
    }

    #[test]
    fn from_edge_list_rejects_self_loop() {
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 0)]).unwrap_err(),
            GraphError::SelfLoop(0)
        );
    }

    #[test]
    fn from_edge_list_rejects_out_of_range() {
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 2)]).unwrap_err(),
            GraphError::OutOfRange(2, 2)
        );
    }

    #[test]
    fn from_edge_list_collapses_duplicates() {
        let g = Graph::from_edge_list(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn complement_examples() {
        let k3 = complete(3);
        assert_eq!(k3.complement().m(), 0);

        // C5 is self-complementary.
        let c5 = cycle(5);
        let cc5 = c5.complement();
        assert_eq!(cc5.m(), 5);
        for v in cc5.vertices() {
            assert_eq!(cc5.degree(v), 2);
        }

        // complement of C4 is 2K2
        let cc4 = cycle(4).complement();
        assert_eq!(cc4.edges(), vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn complement_round_trip_and_edge_count() {
        let mut rng = crate::gen::TestRng::new(7);
        for _ in 0..200 {
            let n = 1 + rng.below(9);
            let g = crate::gen::random_graph(&mut rng, n, 0.4);
            let co = g.complement();
            assert_eq!(g.m() + co.m(), n * (n - 1) / 2);
            let back = co.complement();
            assert_eq!(back.edges(), g.edges());
        }
    }

    #[test]
    fn induced_examples() {
        let c4 = cycle(4);
        let (sub, map) = c4.induced(&VertexSet::from_sorted(vec![0, 1, 2])).unwrap();
        assert_eq!(sub.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(map, vec![0, 1, 2]);

        let (empty, _) = c4.induced(&VertexSet::new()).unwrap();
        assert_eq!(empty.n(), 0);

        let (full, _) = c4.induced(&VertexSet::full(4)).unwrap();
        assert_eq!(full.edges(), c4.edges());
    }

    #[test]
    fn induced_brute_force_check() {
        let mut rng = crate::gen::TestRng::new(11);
        for _ in 0..100 {
            let n = 1 + rng.below(8);
            let g = crate::gen::random_graph(&mut rng, n, 0.5);
            let s: VertexSet = (0..n as u32).filter(|_| rng.below(2) == 0).collect();
            let (sub, map) = g.induced(&s).unwrap();
            for i in 0..sub.n() as u32 {
                for j in 0..sub.n() as u32 {
                    assert_eq!(sub.has_edge(i, j), g.has_edge(map[i as usize], map[j as usize]));
                }
            }
        }
    }

    #[test]
    fn components_examples() {
        let two_k2 = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        let comps = two_k2.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].as_slice(), &[0, 1]);
        assert_eq!(comps[1].as_slice(), &[2, 3]);

        assert_eq!(complete(5).components().len(), 1);
        assert_eq!(Graph::from_edge_list(3, &[]).unwrap().components().len(), 3);
    }

    #[test]
    fn is_clique_examples() {
        let c4 = cycle(4);
        assert!(c4.is_clique(&VertexSet::from_sorted(vec![0, 1])));
        assert!(!c4.is_clique(&VertexSet::from_sorted(vec![0, 1, 2])));
        assert!(c4.is_clique(&VertexSet::new()));
        assert!(c4.is_clique(&VertexSet::singleton(2)));
    }

    #[test]
    fn bipartition_examples() {
        let c4 = cycle(4);
        let (a, b) = c4.bipartition().unwrap();
        assert_eq!(a.as_slice(), &[0, 2]);
        assert_eq!(b.as_slice(), &[1, 3]);

        assert!(cycle(5).bipartition().is_none());

        let single = Graph::from_edge_list(1, &[]).unwrap();
        let (a, b) = single.bipartition().unwrap();
        assert_eq!(a.as_slice(), &[0]);
        assert!(b.is_empty());
    }

    #[test]
    fn bipartition_is_proper() {
        let mut rng = crate::gen::TestRng::new(23);
        for _ in 0..300 {
            let n = 1 + rng.below(9);
            let g = crate::gen::random_graph(&mut rng, n, 0.3);
            if let Some((a, b)) = g.bipartition() {
                assert_eq!(a.len() + b.len(), n);
                for (u, v) in g.edges() {
                    assert!(a.contains(u) != a.contains(v));
                }
            } else {
                // must contain an odd cycle; verify non-2-colourable by brute force
                let n = g.n();
                let ok = (0..1u32 << n).any(|mask| {
                    g.edges()
                        .iter()
                        .all(|&(u, v)| (mask >> u) & 1 != (mask >> v) & 1)
                });
                assert!(!ok);
            }
        }
    }
}
