//! A corpus of small hand-built graphs with known recognition verdicts,
//! used throughout the test suite and shipped as sample inputs by the
//! CLI. Vertices are letters mapped to indices in alphabetical order
//! (a = 0, b = 1, ...).

use crate::graph::Graph;

fn from_letter_edges(n: usize, edges: &[(char, char)]) -> Graph {
    let idx = |c: char| (c as u32) - ('a' as u32);
    let pairs: Vec<(u32, u32)> = edges.iter().map(|&(a, b)| (idx(a), idx(b))).collect();
    Graph::from_edge_list(n, &pairs).expect("valid corpus graph")
}

/// A chordal thick tree on 26 vertices whose thick vertices are all K2s:
/// pairs a..r at the bottom, s..x in the middle, y z at the top. Every
/// maximal clique separator is a triangle even though the thick vertices
/// are pairs.
pub fn chordal_thick_tree() -> Graph {
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    // bottom pairs (2p, 2p+1) attach to middles (s,t) = (18,19), (u,v) =
    // (20,21), (w,x) = (22,23) in groups of three
    for p in 0..9u32 {
        let (m1, m2) = match p / 3 {
            0 => (18, 19),
            1 => (20, 21),
            _ => (22, 23),
        };
        pairs.push((2 * p, 2 * p + 1));
        pairs.push((2 * p, m1));
        pairs.push((2 * p + 1, m1));
        pairs.push((2 * p + 1, m2));
    }
    // middles attach to the top pair (y, z) = (24, 25)
    for m in [18u32, 20, 22] {
        pairs.push((m, m + 1));
        pairs.push((m, 24));
        pairs.push((m + 1, 24));
        pairs.push((m + 1, 25));
    }
    pairs.push((24, 25));
    Graph::from_edge_list(26, &pairs).unwrap()
}

/// An 8-vertex chordal graph (a..h) that is not a thick tree.
pub fn chordal_not_thick() -> Graph {
    from_letter_edges(
        8,
        &[
            ('f', 'h'),
            ('h', 'e'),
            ('e', 'g'),
            ('g', 'd'),
            ('f', 'e'),
            ('e', 'd'),
            ('h', 'g'),
            ('c', 'b'),
            ('b', 'a'),
            ('a', 'g'),
            ('g', 'b'),
            ('b', 'h'),
            ('h', 'c'),
        ],
    )
}

/// A non-chordal 7-vertex quasi thick forest (a..g) that is not a thick
/// tree: two 4-holes through a, and a can take neither colour.
pub fn quasi_not_thick() -> Graph {
    from_letter_edges(
        7,
        &[
            ('d', 'a'),
            ('a', 'e'),
            ('e', 'g'),
            ('g', 'c'),
            ('c', 'a'),
            ('a', 'b'),
            ('d', 'f'),
            ('f', 'b'),
        ],
    )
}

/// A 12-vertex thick tree (a..l) on which the first root split rejects
/// one subtree; recognition must re-partition the root separator and
/// descend with the corrected frontier. A valid model has thick vertices
/// {a,c}, {b,f}, {i,j}, {d,e}, {g,h}, {k,l}.
pub fn hidden_subtree_thick_tree() -> Graph {
    from_letter_edges(
        12,
        &[
            ('a', 'c'),
            ('c', 'b'),
            ('a', 'd'),
            ('d', 'e'),
            ('d', 'c'),
            ('g', 'h'),
            ('h', 'l'),
            ('l', 'k'),
            ('k', 'g'),
            ('b', 'f'),
            ('f', 'c'),
            ('d', 'g'),
            ('g', 'e'),
            ('f', 'i'),
            ('i', 'j'),
            ('j', 'f'),
        ],
    )
}

/// A 10-vertex unipolar graph (a..j): hub {e,f,g} with satellites {a,b},
/// {c,d} and {h,i,j}; {f,g,i,j} is a maximal clique separator inside the
/// leaf edge toward {h,i,j}.
pub fn unipolar_leaf_edge() -> Graph {
    from_letter_edges(
        10,
        &[
            ('a', 'e'),
            ('e', 'f'),
            ('g', 'd'),
            ('d', 'c'),
            ('c', 'f'),
            ('f', 'b'),
            ('b', 'a'),
            ('h', 'i'),
            ('h', 'f'),
            ('b', 'e'),
            ('c', 'g'),
            ('g', 'j'),
            ('j', 'f'),
            ('f', 'i'),
            ('i', 'g'),
            ('f', 'g'),
            ('i', 'j'),
            ('g', 'e'),
            ('j', 'h'),
        ],
    )
}

/// A 9-vertex fragment (a..i) where expanding the clique {a,b} yields two
/// usable maximal clique separators, {a,b,c,d} and {a,b,c,h}.
pub fn expansion_fragment() -> Graph {
    from_letter_edges(
        9,
        &[
            ('a', 'b'),
            ('b', 'e'),
            ('e', 'g'),
            ('g', 'c'),
            ('c', 'f'),
            ('f', 'd'),
            ('d', 'a'),
            ('a', 'c'),
            ('c', 'b'),
            ('b', 'd'),
            ('d', 'c'),
            ('a', 'e'),
            ('b', 'g'),
            ('a', 'h'),
            ('h', 'b'),
            ('c', 'h'),
            ('h', 'i'),
            ('i', 'c'),
        ],
    )
}

/// An 8-vertex path of triangles (a..h) where expanding {b} yields three
/// hub candidates of which only {b,e} separates the graph.
pub fn expansion_chain() -> Graph {
    from_letter_edges(
        8,
        &[
            ('a', 'b'),
            ('b', 'c'),
            ('d', 'e'),
            ('e', 'f'),
            ('a', 'd'),
            ('d', 'g'),
            ('e', 'b'),
            ('c', 'f'),
            ('f', 'h'),
        ],
    )
}

/// The wheel on four spokes: a 4-cycle plus a dominating centre. It is
/// cobipartite but has no clique cutset and no pair of disconnected
/// separating cliques.
pub fn cobipartite_wheel() -> Graph {
    Graph::from_edge_list(
        5,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (0, 4),
            (1, 4),
            (2, 4),
            (3, 4),
        ],
    )
    .unwrap()
}

/// Two 4-fans glued on a pair of centres: weakly chordal, not a clique,
/// not cobipartite, and without a clique cutset, hence not a quasi thick
/// forest. Vertices: c1 = 0, c2 = 1, left path 2,3,4, right path 5,6,7.
pub fn weakly_chordal_not_quasi() -> Graph {
    Graph::from_edge_list(
        8,
        &[
            (0, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (2, 1),
            (1, 4),
            (0, 5),
            (5, 6),
            (6, 7),
            (7, 0),
            (5, 1),
            (1, 7),
        ],
    )
    .unwrap()
}

/// A 5-vertex cobipartite graph (a..e) whose vertex c is dominating but
/// whose closed neighbourhood is not chordal: N[c] contains the 4-hole
/// a-d-e-b.
pub fn nonchordal_neighbourhood() -> Graph {
    from_letter_edges(
        5,
        &[
            ('a', 'd'),
            ('d', 'e'),
            ('e', 'b'),
            ('b', 'a'),
            ('a', 'c'),
            ('c', 'd'),
            ('b', 'c'),
            ('c', 'e'),
        ],
    )
}

/// Minimal graphs that are not thick forests: deleting any single vertex
/// of each leaves a thick forest.
pub fn minimal_obstructions() -> Vec<Graph> {
    vec![
        // K_{2,3}: a, b versus d, e, f
        from_letter_edges(
            5,
            &[
                ('a', 'c'),
                ('a', 'd'),
                ('a', 'e'),
                ('b', 'c'),
                ('b', 'd'),
                ('b', 'e'),
            ],
        ),
        // 6 vertices a..f (relabelled from a,c,d,e,f,g)
        from_letter_edges(
            6,
            &[
                ('f', 'b'),
                ('b', 'c'),
                ('c', 'd'),
                ('d', 'e'),
                ('e', 'f'),
                ('f', 'a'),
                ('a', 'b'),
                ('b', 'd'),
            ],
        ),
        // 7 vertices a..g
        from_letter_edges(
            7,
            &[
                ('g', 'c'),
                ('c', 'd'),
                ('d', 'e'),
                ('e', 'f'),
                ('f', 'g'),
                ('g', 'a'),
                ('a', 'b'),
                ('b', 'c'),
                ('c', 'e'),
            ],
        ),
        // 7 vertices: centre c joined to all, plus two wings
        from_letter_edges(
            7,
            &[
                ('c', 'a'),
                ('c', 'b'),
                ('c', 'd'),
                ('c', 'e'),
                ('c', 'f'),
                ('c', 'g'),
                ('g', 'a'),
                ('a', 'b'),
                ('d', 'e'),
                ('e', 'f'),
            ],
        ),
        // 8 vertices a..h
        from_letter_edges(
            8,
            &[
                ('c', 'd'),
                ('d', 'e'),
                ('e', 'f'),
                ('f', 'g'),
                ('g', 'h'),
                ('h', 'a'),
                ('a', 'b'),
                ('b', 'c'),
                ('c', 'e'),
                ('e', 'g'),
                ('g', 'a'),
                ('a', 'c'),
                ('c', 'g'),
            ],
        ),
    ]
}

/// Name/graph pairs for the shipped corpus.
pub fn corpus() -> Vec<(&'static str, Graph)> {
    let mut out = vec![
        ("chordal-thick-tree", chordal_thick_tree()),
        ("chordal-not-thick", chordal_not_thick()),
        ("quasi-not-thick", quasi_not_thick()),
        ("hidden-subtree", hidden_subtree_thick_tree()),
        ("unipolar-leaf-edge", unipolar_leaf_edge()),
        ("expansion-fragment", expansion_fragment()),
        ("expansion-chain", expansion_chain()),
        ("cobipartite-wheel", cobipartite_wheel()),
        ("weakly-chordal-not-quasi", weakly_chordal_not_quasi()),
        ("nonchordal-neighbourhood", nonchordal_neighbourhood()),
    ];
    for (i, g) in minimal_obstructions().into_iter().enumerate() {
        out.push((
            match i {
                0 => "minimal-obstruction-1",
                1 => "minimal-obstruction-2",
                2 => "minimal-obstruction-3",
                3 => "minimal-obstruction-4",
                _ => "minimal-obstruction-5",
            },
            g,
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    #[test]
    fn corpus_shapes() {
        let g = chordal_thick_tree();
        assert_eq!(g.n(), 26);
        assert_eq!(g.m(), 49);
        assert!(crate::chordal::is_chordal(&g).is_chordal());

        assert!(crate::chordal::is_chordal(&chordal_not_thick()).is_chordal());
        assert!(!crate::chordal::is_chordal(&quasi_not_thick()).is_chordal());
        assert_eq!(hidden_subtree_thick_tree().m(), 16);
        assert_eq!(unipolar_leaf_edge().m(), 19);
    }

    #[test]
    fn wheel_is_cobipartite_not_biclique_separable() {
        let w = cobipartite_wheel();
        assert!(crate::recognize::recognize_cobipartite(&w).is_some());
        assert!(crate::decompose::is_quasi_thick_forest(&w).is_ok());
    }

    #[test]
    fn double_fan_is_not_quasi() {
        let g = weakly_chordal_not_quasi();
        assert!(crate::decompose::is_quasi_thick_forest(&g).is_err());
    }

    #[test]
    fn nonchordal_neighbourhood_is_cobipartite_with_hole() {
        let g = nonchordal_neighbourhood();
        assert!(crate::recognize::recognize_cobipartite(&g).is_some());
        assert!(!crate::chordal::is_chordal(&g).is_chordal());
        // c = index 2 is dominating
        assert_eq!(g.degree(2), 4);
    }

    #[test]
    fn chordal_thick_tree_has_clique_atoms() {
        let g = chordal_thick_tree();
        let quasi = crate::decompose::is_quasi_thick_forest(&g).unwrap();
        for (_, kind) in &quasi.atoms {
            assert_eq!(*kind, crate::decompose::AtomKind::Clique);
        }
    }

    #[test]
    fn chordal_thick_tree_edge_partition_walkthrough() {
        // separator {y,z,t} = {24,25,19}; far side is the subtree holding s
        let g = chordal_thick_tree();
        let a = VertexSet::from_unsorted(vec![24, 25, 19]);
        assert!(g.is_clique(&a));
        let rest = VertexSet::full(26).minus(&a);
        let comps = g.components_within(&rest);
        assert_eq!(comps.len(), 3);
        let r = comps.iter().find(|c| c.contains(18)).unwrap().clone();
        let mut l = VertexSet::new();
        for c in &comps {
            if *c != r {
                l = l.union(c);
            }
        }
        let split = crate::recognize::edge_partition(&g, &a, &l, &r).unwrap();
        assert_eq!(split.thick_u, VertexSet::from_unsorted(vec![24, 25]));
        assert_eq!(split.frontier, VertexSet::from_unsorted(vec![18, 19]));
    }

    #[test]
    fn unipolar_leaf_edge_walkthrough() {
        // separator {f,g,i,j} = {5,6,8,9}: the detached leaf is {h,i,j}
        // with outside neighbours {f,g}
        let g = unipolar_leaf_edge();
        let a = VertexSet::from_unsorted(vec![5, 6, 8, 9]);
        assert!(g.is_clique(&a));
        let split = crate::recognize::leaf_detach(&g, &a).unwrap();
        assert_eq!(split.thick_u, VertexSet::from_unsorted(vec![7, 8, 9]));
        assert_eq!(split.frontier, VertexSet::from_unsorted(vec![5, 6]));
    }
}
