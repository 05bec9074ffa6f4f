//! Clique cutset decomposition (Tarjan's algorithm over a minimal
//! elimination ordering), atom classification, and recognition of quasi
//! thick forests.

use crate::chordal::mcs_m;
use crate::graph::{Graph, VertexSet};
use crate::recognize::recognize_cobipartite;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AtomKind {
    Clique,
    Cobipartite(VertexSet, VertexSet),
    Other,
}

#[derive(Debug, Clone)]
pub enum DecompNode {
    Internal {
        /// vertex set of this node's subgraph
        vertices: VertexSet,
        separator: VertexSet,
        left: usize,
        right: usize,
    },
    Leaf {
        atom: VertexSet,
    },
}

#[derive(Debug, Clone)]
pub struct DecompositionTree {
    pub nodes: Vec<DecompNode>,
    pub root: usize,
}

impl DecompositionTree {
    pub fn atoms(&self) -> Vec<&VertexSet> {
        self.nodes
            .iter()
            .filter_map(|n| match n {
                DecompNode::Leaf { atom } => Some(atom),
                _ => None,
            })
            .collect()
    }

    pub fn internal_count(&self) -> usize {
        self.nodes
            .iter()
            .filter(|n| matches!(n, DecompNode::Internal { .. }))
            .count()
    }

    /// Checks the defining predicates: every internal separator is a
    /// clique in g and disconnects its node's subgraph into the two
    /// parts, parts share exactly the separator, and atoms cover V.
    pub fn validate(&self, g: &Graph) -> bool {
        let mut covered = VertexSet::new();
        for node in &self.nodes {
            match node {
                DecompNode::Leaf { atom } => covered = covered.union(atom),
                DecompNode::Internal {
                    vertices,
                    separator,
                    left,
                    right,
                } => {
                    if !g.is_clique(separator) {
                        return false;
                    }
                    let lv = self.node_vertices(*left);
                    let rv = self.node_vertices(*right);
                    if lv.intersect(&rv) != *separator {
                        return false;
                    }
                    if lv.union(&rv) != *vertices {
                        return false;
                    }
                    let lrest = lv.minus(separator);
                    let rrest = rv.minus(separator);
                    if lrest.is_empty() || rrest.is_empty() {
                        return false;
                    }
                    // no edges between the two open sides
                    for u in lrest.iter() {
                        for w in rrest.iter() {
                            if g.has_edge(u, w) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        covered == VertexSet::full(g.n())
    }

    fn node_vertices(&self, i: usize) -> VertexSet {
        match &self.nodes[i] {
            DecompNode::Leaf { atom } => atom.clone(),
            DecompNode::Internal { vertices, .. } => vertices.clone(),
        }
    }
}

/// Tarjan clique cutset decomposition. Disconnected graphs split on the
/// empty separator per component; within a component, a minimal
/// elimination ordering is scanned and each candidate set that is a
/// clique in g and separates the remaining graph splits off the scanned
/// vertex's component as an atom.
pub fn clique_cutset_decompose(g: &Graph) -> DecompositionTree {
    let comps = g.components();
    if comps.len() <= 1 {
        return decompose_connected(g, &VertexSet::full(g.n()));
    }
    let mut nodes: Vec<DecompNode> = Vec::new();
    let mut current: Option<(usize, VertexSet)> = None;
    for comp in comps.into_iter().rev() {
        let sub = decompose_connected(g, &comp);
        let offset = nodes.len();
        for node in sub.nodes {
            nodes.push(match node {
                DecompNode::Leaf { atom } => DecompNode::Leaf { atom },
                DecompNode::Internal {
                    vertices,
                    separator,
                    left,
                    right,
                } => DecompNode::Internal {
                    vertices,
                    separator,
                    left: left + offset,
                    right: right + offset,
                },
            });
        }
        let sub_root = sub.root + offset;
        current = Some(match current {
            None => (sub_root, comp),
            Some((prev_root, prev_verts)) => {
                let all = prev_verts.union(&comp);
                nodes.push(DecompNode::Internal {
                    vertices: all.clone(),
                    separator: VertexSet::new(),
                    left: sub_root,
                    right: prev_root,
                });
                (nodes.len() - 1, all)
            }
        });
    }
    let root = current.expect("graph has at least one component").0;
    DecompositionTree { nodes, root }
}

/// Decomposition of the connected subgraph induced by `within`, with all
/// vertex sets in g's labels.
fn decompose_connected(g: &Graph, within: &VertexSet) -> DecompositionTree {
    let (sub, map) = g.induced(within).expect("valid subset");
    let tree = decompose_connected_raw(&sub);
    // relabel back to g
    let relabel = |s: &VertexSet| -> VertexSet { s.iter().map(|v| map[v as usize]).collect() };
    let nodes = tree
        .nodes
        .iter()
        .map(|n| match n {
            DecompNode::Leaf { atom } => DecompNode::Leaf { atom: relabel(atom) },
            DecompNode::Internal {
                vertices,
                separator,
                left,
                right,
            } => DecompNode::Internal {
                vertices: relabel(vertices),
                separator: relabel(separator),
                left: *left,
                right: *right,
            },
        })
        .collect();
    DecompositionTree {
        nodes,
        root: tree.root,
    }
}

fn decompose_connected_raw(g: &Graph) -> DecompositionTree {
    let mf = mcs_m(g);
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in mf.order.iter().enumerate() {
        pos[v as usize] = i;
    }
    // fill-graph adjacency restricted to later-in-order neighbours
    let mut later_fill: Vec<Vec<u32>> = vec![Vec::new(); n];
    for v in 0..n as u32 {
        for &u in g.neighbors(v) {
            if pos[u as usize] > pos[v as usize] {
                later_fill[v as usize].push(u);
            }
        }
    }
    for &(a, b) in &mf.fill {
        let (lo, hi) = if pos[a as usize] < pos[b as usize] {
            (a, b)
        } else {
            (b, a)
        };
        later_fill[lo as usize].push(hi);
    }

    let mut nodes: Vec<DecompNode> = Vec::new();
    let mut remaining = VertexSet::full(n);
    // collected (separator, atom) splits, in scan order
    let mut splits: Vec<(VertexSet, VertexSet)> = Vec::new();

    for &v in &mf.order {
        if !remaining.contains(v) {
            continue;
        }
        let cand: VertexSet = later_fill[v as usize].iter().copied().collect();
        if !cand.is_subset_of(&remaining) || !g.is_clique(&cand) {
            continue;
        }
        let open = remaining.minus(&cand);
        let comps = g.components_within(&open);
        if comps.len() < 2 {
            continue;
        }
        let vcomp = comps
            .iter()
            .find(|c| c.contains(v))
            .expect("v survives in remaining")
            .clone();
        let atom = vcomp.union(&cand);
        splits.push((cand, atom));
        remaining = remaining.minus(&vcomp);
    }

    // assemble the binary tree: each split is (separator, atom-leaf, rest)
    let mut current = remaining; // final atom
    let mut current_node = {
        nodes.push(DecompNode::Leaf {
            atom: current.clone(),
        });
        nodes.len() - 1
    };
    for (sep, atom) in splits.into_iter().rev() {
        let leaf = {
            nodes.push(DecompNode::Leaf { atom: atom.clone() });
            nodes.len() - 1
        };
        current = current.union(&atom);
        nodes.push(DecompNode::Internal {
            vertices: current.clone(),
            separator: sep,
            left: leaf,
            right: current_node,
        });
        current_node = nodes.len() - 1;
    }
    DecompositionTree {
        nodes,
        root: current_node,
    }
}

pub fn classify_atom(g: &Graph, atom: &VertexSet) -> AtomKind {
    if g.is_clique(atom) {
        return AtomKind::Clique;
    }
    let (sub, map) = g.induced(atom).expect("atom within graph");
    match recognize_cobipartite(&sub) {
        Some((u, w)) => AtomKind::Cobipartite(
            u.iter().map(|v| map[v as usize]).collect(),
            w.iter().map(|v| map[v as usize]).collect(),
        ),
        None => AtomKind::Other,
    }
}

#[derive(Debug, Clone)]
pub struct QuasiDecomposition {
    pub tree: DecompositionTree,
    /// atoms paired with their classification, in tree order
    pub atoms: Vec<(VertexSet, AtomKind)>,
}

/// Every atom must classify as Clique or Cobipartite; on failure the
/// offending atom is returned.
pub fn is_quasi_thick_forest(g: &Graph) -> Result<QuasiDecomposition, VertexSet> {
    let tree = clique_cutset_decompose(g);
    let mut atoms = Vec::new();
    for atom in tree.atoms() {
        let kind = classify_atom(g, atom);
        if kind == AtomKind::Other {
            return Err(atom.clone());
        }
        atoms.push((atom.clone(), kind));
    }
    Ok(QuasiDecomposition { tree, atoms })
}

#[derive(Serialize)]
struct JsonNode {
    #[serde(skip_serializing_if = "Option::is_none")]
    sep: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    atom: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    kind: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    children: Option<[usize; 2]>,
}

/// JSON export: a node list (root last) with `sep`/`children` on internal
/// nodes and `atom`/`kind` on leaves. Schema documented in docs/formats.md.
pub fn decomposition_to_json(g: &Graph, tree: &DecompositionTree) -> String {
    let nodes: Vec<JsonNode> = tree
        .nodes
        .iter()
        .map(|n| match n {
            DecompNode::Internal {
                separator,
                left,
                right,
                ..
            } => JsonNode {
                sep: Some(separator.iter().collect()),
                atom: None,
                kind: None,
                children: Some([*left, *right]),
            },
            DecompNode::Leaf { atom } => JsonNode {
                sep: None,
                atom: Some(atom.iter().collect()),
                kind: Some(match classify_atom(g, atom) {
                    AtomKind::Clique => "clique".into(),
                    AtomKind::Cobipartite(..) => "cobipartite".into(),
                    AtomKind::Other => "other".into(),
                }),
                children: None,
            },
        })
        .collect();
    serde_json::to_string_pretty(&serde_json::json!({
        "root": tree.root,
        "nodes": nodes,
    }))
    .expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{random_graph, TestRng};

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
    fn decompose_path() {
        let p3 = path(3);
        let tree = clique_cutset_decompose(&p3);
        assert!(tree.validate(&p3));
        assert_eq!(tree.internal_count(), 1);
        let atoms: Vec<_> = tree.atoms().into_iter().cloned().collect();
        assert!(atoms.contains(&VertexSet::from_sorted(vec![0, 1])));
        assert!(atoms.contains(&VertexSet::from_sorted(vec![1, 2])));
    }

    #[test]
    fn decompose_clique_single_leaf() {
        let k5 = complete(5);
        let tree = clique_cutset_decompose(&k5);
        assert_eq!(tree.internal_count(), 0);
        assert_eq!(tree.atoms().len(), 1);
    }

    #[test]
    fn decompose_disconnected_splits_on_empty() {
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        let tree = clique_cutset_decompose(&g);
        assert!(tree.validate(&g));
        assert_eq!(tree.atoms().len(), 2);
    }

    #[test]
    fn decompose_validates_on_random_graphs() {
        let mut rng = TestRng::new(71);
        for _ in 0..500 {
            let n = 1 + rng.below(10);
            let g = random_graph(&mut rng, n, 0.35);
            let tree = clique_cutset_decompose(&g);
            assert!(tree.validate(&g), "{g:?}");
            assert!(tree.internal_count() <= n.saturating_sub(1));
            // every edge is inside at least one atom
            for (u, v) in g.edges() {
                assert!(
                    tree.atoms().iter().any(|a| a.contains(u) && a.contains(v)),
                    "edge ({u},{v}) not covered in {g:?}"
                );
            }
        }
    }

    /// brute force: a set is a clique cutset of the atom if it is a clique
    /// whose removal disconnects it
    fn has_clique_cutset(g: &Graph) -> bool {
        let n = g.n();
        for mask in 0u32..1 << n {
            let s: VertexSet = (0..n as u32).filter(|&v| mask >> v & 1 == 1).collect();
            if s.len() == n || !g.is_clique(&s) {
                continue;
            }
            let rest = VertexSet::full(n).minus(&s);
            if g.components_within(&rest).len() >= 2 {
                return true;
            }
        }
        false
    }

    #[test]
    fn atoms_have_no_clique_cutset() {
        let mut rng = TestRng::new(73);
        for _ in 0..300 {
            let n = 1 + rng.below(9);
            let g = random_graph(&mut rng, n, 0.4);
            let tree = clique_cutset_decompose(&g);
            for atom in tree.atoms() {
                let (sub, _) = g.induced(atom).unwrap();
                assert!(!has_clique_cutset(&sub), "atom {atom} of {g:?}");
            }
        }
    }

    #[test]
    fn chordal_graphs_have_clique_atoms() {
        let mut rng = TestRng::new(79);
        let mut seen = 0;
        for _ in 0..300 {
            let n = 1 + rng.below(9);
            let g = random_graph(&mut rng, n, 0.4);
            if !crate::chordal::is_chordal(&g).is_chordal() {
                continue;
            }
            seen += 1;
            let tree = clique_cutset_decompose(&g);
            for atom in tree.atoms() {
                assert_eq!(classify_atom(&g, atom), AtomKind::Clique, "{g:?}");
            }
        }
        assert!(seen > 40);
    }

    #[test]
    fn classify_atom_examples() {
        let k4 = complete(4);
        assert_eq!(classify_atom(&k4, &VertexSet::full(4)), AtomKind::Clique);

        let c4 = cycle(4);
        match classify_atom(&c4, &VertexSet::full(4)) {
            AtomKind::Cobipartite(u, w) => {
                assert_eq!(u.as_slice(), &[0, 1]);
                assert_eq!(w.as_slice(), &[2, 3]);
            }
            k => panic!("C4 classified {k:?}"),
        }

        let c5 = cycle(5);
        assert_eq!(classify_atom(&c5, &VertexSet::full(5)), AtomKind::Other);
    }

    #[test]
    fn quasi_examples() {
        // K_{2,3} is an atom and neither clique nor cobipartite
        let k23 = Graph::from_edge_list(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
            .unwrap();
        assert!(is_quasi_thick_forest(&k23).is_err());

        // chordal graphs are quasi thick forests
        let mut rng = TestRng::new(83);
        for _ in 0..200 {
            let n = 1 + rng.below(9);
            let g = random_graph(&mut rng, n, 0.4);
            if crate::chordal::is_chordal(&g).is_chordal() {
                assert!(is_quasi_thick_forest(&g).is_ok(), "{g:?}");
            }
        }
    }
}
