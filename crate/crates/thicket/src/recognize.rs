//! Recognizers producing explicit thin-graph models: cobipartite graphs,
//! unipolar graphs (thick stars) and thick forests.
//!
//! The thick-forest recognizer splits the graph at maximal clique
//! separators obtained by expanding a seed clique through a unipolar
//! decomposition of its common neighbourhood, classifies each separator
//! as a whole thick vertex or as part of a thick edge, and repairs a
//! single rejected subtree by re-partitioning the separator (EDGE) and
//! descending with the corrected frontier.

use crate::decompose::is_quasi_thick_forest;
use crate::graph::{Graph, VertexSet};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A thin graph H plus the assignment of each vertex of G to a thick
/// vertex. `thin_edges` is sorted lexicographically; `phi` is indexed by
/// graph vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThickModel {
    pub thin_n: usize,
    pub thin_edges: Vec<(u32, u32)>,
    pub phi: Vec<u32>,
}

impl ThickModel {
    pub fn new(thin_n: usize, mut thin_edges: Vec<(u32, u32)>, phi: Vec<u32>) -> Self {
        for e in thin_edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        thin_edges.sort_unstable();
        thin_edges.dedup();
        ThickModel {
            thin_n,
            thin_edges,
            phi,
        }
    }

    /// Vertices assigned to each thick vertex.
    pub fn classes(&self) -> Vec<VertexSet> {
        let mut out = vec![Vec::new(); self.thin_n];
        for (v, &t) in self.phi.iter().enumerate() {
            out[t as usize].push(v as u32);
        }
        out.into_iter().map(VertexSet::from_unsorted).collect()
    }

    pub fn thin_graph(&self) -> Graph {
        Graph::from_edge_list(self.thin_n, &self.thin_edges).expect("valid thin graph")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelClass {
    Any,
    TriangleFree,
    Forest,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModelViolation {
    #[error("phi has length {0}, graph has {1} vertices")]
    BadDimensions(usize, usize),
    #[error("phi value or thin edge endpoint {0} out of range (thin_n = {1})")]
    BadThinVertex(u32, usize),
    #[error("thick vertex {0} is empty")]
    EmptyThickVertex(u32),
    #[error("condition 1 violated: thick vertex {0} is not a clique")]
    NotAClique(u32),
    #[error("condition 2 violated: edge {0}-{1} joins non-adjacent thick vertices")]
    MissingThinEdge(u32, u32),
    #[error("thin graph has a triangle {0:?}")]
    ThinTriangle([u32; 3]),
    #[error("thin graph has a cycle")]
    ThinCycle,
}

/// Checks the two model conditions, and for `TriangleFree` / `Forest`
/// additionally that H has no triangle / no cycle.
pub fn verify_model(g: &Graph, m: &ThickModel, class: ModelClass) -> Result<(), ModelViolation> {
    if m.phi.len() != g.n() {
        return Err(ModelViolation::BadDimensions(m.phi.len(), g.n()));
    }
    for &t in &m.phi {
        if t as usize >= m.thin_n {
            return Err(ModelViolation::BadThinVertex(t, m.thin_n));
        }
    }
    for &(a, b) in &m.thin_edges {
        if a as usize >= m.thin_n || b as usize >= m.thin_n || a == b {
            return Err(ModelViolation::BadThinVertex(a.max(b), m.thin_n));
        }
    }
    let classes = m.classes();
    for (t, cls) in classes.iter().enumerate() {
        if cls.is_empty() {
            return Err(ModelViolation::EmptyThickVertex(t as u32));
        }
        if !g.is_clique(cls) {
            return Err(ModelViolation::NotAClique(t as u32));
        }
    }
    let h = m.thin_graph();
    for (u, v) in g.edges() {
        let (tu, tv) = (m.phi[u as usize], m.phi[v as usize]);
        if tu != tv && !h.has_edge(tu, tv) {
            return Err(ModelViolation::MissingThinEdge(tu.min(tv), tu.max(tv)));
        }
    }
    match class {
        ModelClass::Any => {}
        ModelClass::TriangleFree => {
            if let Some(t) = thin_triangle(&h) {
                return Err(ModelViolation::ThinTriangle(t));
            }
        }
        ModelClass::Forest => {
            // a forest has m = n - #components and no cycles
            if h.m() != h.n() - h.components().len() {
                return Err(ModelViolation::ThinCycle);
            }
        }
    }
    Ok(())
}

fn thin_triangle(h: &Graph) -> Option<[u32; 3]> {
    for (u, v) in h.edges() {
        for w in h.vertices() {
            if w != u && w != v && h.has_edge(w, u) && h.has_edge(w, v) {
                return Some([u, v, w]);
            }
        }
    }
    None
}

/// Cobipartite recognition: 2-colour the complement per component. The
/// returned assignment puts each complement-component's least-vertex side
/// into the first clique.
pub fn recognize_cobipartite(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    cobipartition_containing(g, &VertexSet::full(g.n()), &VertexSet::new())
}

/// Cobipartition of the subgraph induced by `active` with the clique `c`
/// contained in the first side, if one exists.
pub(crate) fn cobipartition_containing(
    g: &Graph,
    active: &VertexSet,
    c: &VertexSet,
) -> Option<(VertexSet, VertexSet)> {
    let verts: Vec<u32> = active.iter().collect();
    let k = verts.len();
    if k == 0 {
        return Some((VertexSet::new(), VertexSet::new()));
    }
    // 2-colour the complement of the induced subgraph
    let mut colour = vec![u8::MAX; k];
    let mut comp_id = vec![usize::MAX; k];
    let mut ncomp = 0;
    for s in 0..k {
        if colour[s] != u8::MAX {
            continue;
        }
        colour[s] = 0;
        comp_id[s] = ncomp;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(i) = queue.pop_front() {
            for j in 0..k {
                if j == i || g.has_edge(verts[i], verts[j]) {
                    continue;
                }
                if colour[j] == u8::MAX {
                    colour[j] = 1 - colour[i];
                    comp_id[j] = ncomp;
                    queue.push_back(j);
                } else if colour[j] == colour[i] {
                    return None; // odd cycle in the complement
                }
            }
        }
        ncomp += 1;
    }
    // orient each complement component: the c-side (else least vertex) first
    let mut flip = vec![false; ncomp];
    let mut forced = vec![false; ncomp];
    for (i, &v) in verts.iter().enumerate() {
        if c.contains(v) {
            let want_flip = colour[i] == 1;
            if forced[comp_id[i]] && flip[comp_id[i]] != want_flip {
                return None; // c straddles a component's bipartition
            }
            forced[comp_id[i]] = true;
            flip[comp_id[i]] = want_flip;
        }
    }
    let mut side_u = Vec::new();
    let mut side_w = Vec::new();
    for (i, &v) in verts.iter().enumerate() {
        let effective = colour[i] ^ (flip[comp_id[i]] as u8);
        if effective == 0 {
            side_u.push(v);
        } else {
            side_w.push(v);
        }
    }
    Some((
        VertexSet::from_unsorted(side_u),
        VertexSet::from_unsorted(side_w),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSplit {
    pub thick_u: VertexSet,
    /// W': the clique frontier on the other side of the cut.
    pub frontier: VertexSet,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SplitFailure {
    #[error("step (0): no seed vertices of the separator reach the far side")]
    EmptySeed,
    #[error("step (2): accumulated far-side frontier is not a clique")]
    FrontierNotClique,
    #[error("step (4): accumulated near side is not a clique")]
    NearSideNotClique,
    #[error("step (0): removing the separator leaves no detachable clique remainder")]
    NoLeafRemainder,
}

/// The EDGE partition loop. `a` is a maximal clique separator, `r` the
/// side to be cut off, `u0` the seed known to lie in the thick vertex.
/// `outside` decides whether a separator vertex has neighbours beyond the
/// candidate frontier and therefore cannot be absorbed into the thick
/// vertex (step (7)); it defaults to adjacency into `r`.
fn edge_core(
    g: &Graph,
    a: &VertexSet,
    r: &VertexSet,
    u0: &VertexSet,
    outside: &dyn Fn(u32, &VertexSet) -> bool,
) -> Result<EdgeSplit, SplitFailure> {
    if u0.is_empty() {
        return Err(SplitFailure::EmptySeed);
    }
    let mut u = u0.clone();
    let mut w_prime = VertexSet::new();
    let mut u_frontier = u0.clone();
    loop {
        // (1) W'_i = (N(U_{i-1}) ∩ R) \ W'
        let mut wi = Vec::new();
        for v in u_frontier.iter() {
            for &nb in g.neighbors(v) {
                if r.contains(nb) && !w_prime.contains(nb) {
                    wi.push(nb);
                }
            }
        }
        let wi = VertexSet::from_unsorted(wi);
        w_prime = w_prime.union(&wi);
        // (2)
        if !g.is_clique(&w_prime) {
            return Err(SplitFailure::FrontierNotClique);
        }
        // (3) U_i = (A ∩ nonN(W'_i)) \ U
        let ui: VertexSet = a
            .iter()
            .filter(|&v| !u.contains(v) && wi.iter().any(|w| !g.has_edge(v, w)))
            .collect();
        u = u.union(&ui);
        // (4)
        if !g.is_clique(&u) {
            return Err(SplitFailure::NearSideNotClique);
        }
        // (5)
        if ui.is_empty() {
            break;
        }
        u_frontier = ui;
    }
    // (6)-(7): immobile leftover separator vertices join the far side
    let a_rest = a.minus(&u);
    let w: VertexSet = a_rest.iter().filter(|&v| outside(v, &w_prime)).collect();
    let w_prime = w_prime.union(&w);
    debug_assert!(g.is_clique(&w_prime));
    // (8)
    let thick_u = u.union(&a_rest.minus(&w));
    debug_assert!(g.is_clique(&thick_u));
    Ok(EdgeSplit {
        thick_u,
        frontier: w_prime,
    })
}

/// Partition a maximal clique separator `a` into the thick vertex facing
/// `l` and the frontier clique W' inside `r` (algorithm EDGE).
pub fn edge_partition(
    g: &Graph,
    a: &VertexSet,
    l: &VertexSet,
    r: &VertexSet,
) -> Result<EdgeSplit, SplitFailure> {
    let u0: VertexSet = a
        .iter()
        .filter(|&v| g.neighbors(v).iter().any(|nb| l.contains(*nb)))
        .collect();
    edge_core(g, a, r, &u0, &|v, w_prime| {
        g.neighbors(v)
            .iter()
            .any(|&nb| r.contains(nb) && !w_prime.contains(nb))
    })
}

/// Detach a leaf thick vertex through a maximal clique separator `a`
/// contained in its leaf edge (algorithm LEAF): returns the leaf clique
/// and the clique of its outside neighbours.
pub fn leaf_detach(g: &Graph, a: &VertexSet) -> Result<EdgeSplit, SplitFailure> {
    leaf_detach_within(g, &VertexSet::full(g.n()), a, None)
}

/// LEAF restricted to the subgraph induced by `cur`. When
/// `mobility_exclude` is given, the step-(7) test treats every vertex of
/// the full graph outside `exclude ∪ frontier` as an outside neighbour
/// (used by the unipolar stripping loop, where already-removed satellites
/// still pin their hub neighbours).
fn leaf_detach_within(
    g: &Graph,
    cur: &VertexSet,
    a: &VertexSet,
    mobility_exclude: Option<&VertexSet>,
) -> Result<EdgeSplit, SplitFailure> {
    let open = cur.minus(a);
    let comps = g.components_within(&open);
    // (0): a clique remainder whose removal keeps the rest connected;
    // smallest candidate first
    let mut order: Vec<&VertexSet> = comps.iter().collect();
    order.sort_by_key(|c| (c.len(), c.as_slice().first().copied()));
    let mut chosen = None;
    for cand in order {
        if !g.is_clique(cand) {
            continue;
        }
        let rest = cur.minus(cand);
        if rest.is_empty() || g.components_within(&rest).len() == 1 {
            chosen = Some(cand.clone());
            break;
        }
    }
    let s = chosen.ok_or(SplitFailure::NoLeafRemainder)?;
    // (1): A' = s ∪ {v in A complete to s}
    let b: VertexSet = a.iter().filter(|&v| g.complete_to(v, &s)).collect();
    let a_prime = s.union(&b);
    debug_assert!(g.is_clique(&a_prime));
    let r = cur.minus(&s).minus(a);
    // (2): EDGE seeded with s
    let exclude = s.union(a);
    let out = edge_core(g, &a_prime, &r, &s, &|v, w_prime| match mobility_exclude {
        None => g
            .neighbors(v)
            .iter()
            .any(|&nb| r.contains(nb) && !w_prime.contains(nb)),
        Some(extra) => g.neighbors(v).iter().any(|&nb| {
            !exclude.contains(nb) && !extra.contains(nb) && !w_prime.contains(nb)
        }),
    })?;
    // the leaf's cut: every neighbour of the leaf must form a clique
    let frontier: VertexSet = {
        let mut f = Vec::new();
        for v in out.thick_u.iter() {
            for &nb in g.neighbors(v) {
                if cur.contains(nb) && !out.thick_u.contains(nb) {
                    f.push(nb);
                }
            }
        }
        VertexSet::from_unsorted(f)
    };
    if !g.is_clique(&frontier) {
        return Err(SplitFailure::FrontierNotClique);
    }
    Ok(EdgeSplit {
        thick_u: out.thick_u,
        frontier,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnipolarDecomposition {
    pub hub: VertexSet,
    /// Satellites: the components of G minus the hub, each a clique,
    /// sorted by minimum vertex.
    pub satellites: Vec<VertexSet>,
}

/// Unipolar recognition: a hub clique whose removal leaves a cluster
/// graph. Tries each clique-cutset separator (expanded to a maximal
/// clique) as the hub, then falls back to stripping leaf edges.
pub fn unipolar_decompose(g: &Graph) -> Option<UnipolarDecomposition> {
    let full = VertexSet::full(g.n());
    let comps = g.components();
    if comps.len() > 1 {
        // at most one component may be non-cluster; its hub serves for all
        let mut hard = Vec::new();
        let mut sats = Vec::new();
        for c in &comps {
            if g.is_clique(c) {
                sats.push(c.clone());
            } else {
                hard.push(c.clone());
            }
        }
        if hard.is_empty() {
            // cluster graph: first clique as hub keeps the hub nonempty
            let hub = sats.remove(0);
            return finish_unipolar(g, hub);
        }
        if hard.len() > 1 {
            return None;
        }
        let (sub, map) = g.induced(&hard[0]).unwrap();
        let inner = unipolar_decompose(&sub)?;
        let hub: VertexSet = inner.hub.iter().map(|v| map[v as usize]).collect();
        return finish_unipolar(g, hub);
    }
    if g.n() == 0 {
        return Some(UnipolarDecomposition {
            hub: VertexSet::new(),
            satellites: Vec::new(),
        });
    }
    if g.is_complete() {
        return Some(UnipolarDecomposition {
            hub: full,
            satellites: Vec::new(),
        });
    }

    // separators from the clique cutset decomposition, tried as hubs
    let tree = crate::decompose::clique_cutset_decompose(g);
    let mut seps: Vec<VertexSet> = tree
        .nodes
        .iter()
        .filter_map(|n| match n {
            crate::decompose::DecompNode::Internal { separator, .. } => Some(separator.clone()),
            _ => None,
        })
        .collect();
    seps.sort();
    seps.dedup();

    if seps.is_empty() {
        return match recognize_cobipartite(g) {
            Some((u, _w)) => finish_unipolar(g, u),
            None => None,
        };
    }

    for s in &seps {
        let mut tries = vec![extend_to_maximal(g, &full, s)];
        if let Some(a) = extend_separating(g, &full, s) {
            tries.push(a);
        }
        for a in tries {
            let rest = full.minus(&a);
            if g.components_within(&rest).iter().all(|c| g.is_clique(c)) {
                return finish_unipolar(g, a);
            }
        }
    }

    if let Some((u, _w)) = recognize_cobipartite(g) {
        if let Some(d) = finish_unipolar(g, u) {
            return Some(d);
        }
    }

    // strip satellites through leaf edges until a clique hub remains; the
    // hub must keep every neighbour of an already-stripped satellite
    let mut cur = full;
    let mut removed = VertexSet::new();
    let mut pinned = VertexSet::new();
    loop {
        let (sub, map) = g.induced(&cur).unwrap();
        if sub.is_complete() {
            if cur.is_empty() {
                return None;
            }
            return finish_unipolar(g, cur);
        }
        let tree = crate::decompose::clique_cutset_decompose(&sub);
        let mut seps: Vec<VertexSet> = tree
            .nodes
            .iter()
            .filter_map(|n| match n {
                crate::decompose::DecompNode::Internal { separator, .. } => {
                    Some(separator.iter().map(|v| map[v as usize]).collect())
                }
                _ => None,
            })
            .collect();
        seps.sort();
        seps.dedup();
        let mut progressed = false;
        if std::env::var("THICKET_TRACE").is_ok() {
            eprintln!("strip iter: cur={cur} seps={seps:?} removed={removed} pinned={pinned}");
        }
        'seps: for s in &seps {
            let mut tries = vec![extend_to_maximal(g, &cur, s)];
            if let Some(a) = extend_separating(g, &cur, s) {
                // LEAF needs the separator to be a maximal clique
                if !cur.iter().any(|v| g.complete_to(v, &a)) {
                    tries.push(a);
                }
            }
            for a in tries {
                if let Ok(split) = leaf_detach_within(g, &cur, &a, Some(&removed)) {
                    // satellites are pairwise anticomplete: a piece that
                    // touches an already-removed satellite is hub material
                    let touches_removed = split
                        .thick_u
                        .iter()
                        .any(|v| g.neighbors(v).iter().any(|nb| removed.contains(*nb)));
                    if touches_removed {
                        continue;
                    }
                    pinned = pinned.union(&split.frontier);
                    removed = removed.union(&split.thick_u);
                    cur = cur.minus(&split.thick_u);
                    progressed = true;
                    break 'seps;
                }
            }
        }
        if !progressed {
            // the remainder may be a thick edge: hub side constrained to
            // contain every neighbour of a stripped satellite
            return match cobipartition_containing(g, &cur, &pinned.intersect(&cur)) {
                Some((u, w)) if !w.is_empty() || !u.is_empty() => {
                    finish_unipolar(g, if u.is_empty() { w } else { u })
                }
                _ => None,
            };
        }
    }
}

/// Validates a hub and normalizes the satellites as the components of
/// g minus the hub.
fn finish_unipolar(g: &Graph, hub: VertexSet) -> Option<UnipolarDecomposition> {
    if !g.is_clique(&hub) {
        return None;
    }
    let rest = VertexSet::full(g.n()).minus(&hub);
    let satellites = g.components_within(&rest);
    if !satellites.iter().all(|c| g.is_clique(c)) {
        return None;
    }
    Some(UnipolarDecomposition { hub, satellites })
}

/// True if removing `hub` (a clique) from g leaves a cluster graph.
pub fn is_valid_unipolar(g: &Graph, hub: &VertexSet) -> bool {
    if !g.is_clique(hub) {
        return false;
    }
    let rest = VertexSet::full(g.n()).minus(hub);
    g.components_within(&rest).iter().all(|c| g.is_clique(c))
}

/// Greedily extends a clique to a maximal clique within `within`,
/// adding the smallest admissible vertex first.
fn extend_to_maximal(g: &Graph, within: &VertexSet, c: &VertexSet) -> VertexSet {
    let mut a = c.clone();
    loop {
        let next = within
            .iter()
            .find(|&v| !a.contains(v) && g.complete_to(v, &a));
        match next {
            Some(v) => a.insert(v),
            None => return a,
        }
    }
}

/// Greedy extension that only adds vertices keeping the set a separator
/// of the subgraph induced by `within`. None when `c` itself does not
/// separate.
fn extend_separating(g: &Graph, within: &VertexSet, c: &VertexSet) -> Option<VertexSet> {
    let separates = |a: &VertexSet| g.components_within(&within.minus(a)).len() >= 2;
    if !separates(c) {
        return None;
    }
    let mut a = c.clone();
    for v in within.iter() {
        if !a.contains(v) && g.complete_to(v, &a) {
            a.insert(v);
            if !separates(&a) {
                a.remove(v);
            }
        }
    }
    Some(a)
}

/// Maximal clique separator candidates containing the clique `c`,
/// obtained from the unipolar structure of the subgraph induced by c and
/// the vertices complete to c. Candidates separating g come first.
pub fn expand_clique(g: &Graph, c: &VertexSet) -> Vec<VertexSet> {
    let full = VertexSet::full(g.n());
    expand_candidates(g, &full, c)
        .into_iter()
        .filter(|a| {
            let rest = full.minus(a);
            g.components_within(&rest).len() >= 2
        })
        .collect()
}

pub(crate) fn expand_candidates(g: &Graph, active: &VertexSet, c: &VertexSet) -> Vec<VertexSet> {
    debug_assert!(!c.is_empty());
    let mut vc: Vec<u32> = c.iter().collect();
    for v in active.iter() {
        if !c.contains(v) && g.complete_to(v, c) {
            vc.push(v);
        }
    }
    let vc = VertexSet::from_unsorted(vc);
    let (sub, map) = g.induced(&vc).unwrap();
    let to_g = |s: &VertexSet| -> VertexSet { s.iter().map(|v| map[v as usize]).collect() };

    let mut cands: Vec<VertexSet> = Vec::new();
    if let Some(uni) = unipolar_decompose(&sub) {
        let sub_full = VertexSet::full(sub.n());
        let base = extend_to_maximal(&sub, &sub_full, &uni.hub);
        cands.push(to_g(&base));
        if let Some(a) = extend_separating(&sub, &sub_full, &uni.hub) {
            // keep it only when maximal as a clique
            if !sub.vertices().any(|v| sub.complete_to(v, &a)) {
                cands.push(to_g(&a));
            }
        }
        for sat in &uni.satellites {
            let kept: VertexSet = uni
                .hub
                .iter()
                .filter(|&h| sub.complete_to(h, sat))
                .collect();
            let cand = kept.union(sat);
            if sub.is_clique(&cand) && is_valid_unipolar(&sub, &cand) {
                cands.push(to_g(&extend_to_maximal(&sub, &VertexSet::full(sub.n()), &cand)));
            }
        }
    } else {
        return Vec::new();
    }
    // desk-scale completeness net: all maximal cliques of the expansion
    // subgraph with the hub property
    if sub.n() <= 24 {
        for mc in crate::oracle::maximal_cliques(&sub) {
            if is_valid_unipolar(&sub, &mc) {
                cands.push(to_g(&mc));
            }
        }
    }
    cands.retain(|a| c.is_subset_of(a));
    cands.sort();
    cands.dedup();
    // separating candidates first, then canonical order
    let separating = |a: &VertexSet| {
        let rest = active.minus(a);
        g.components_within(&rest).len() >= 2
    };
    cands.sort_by_key(|a| (!separating(a), a.clone()));
    cands
}

/// How the recognizer chooses among expansion candidates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidatePolicy {
    /// Try candidates in order, backtracking to the next on failure.
    Ordered,
    /// Always take the k-th candidate (mod the list length); no backtracking.
    Forced(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub step: String,
    pub vertices: Vec<u32>,
}

#[derive(Debug, Clone)]
pub struct RecognitionOutcome {
    pub accepted: bool,
    pub model: Option<ThickModel>,
    pub witness: Option<Witness>,
}

impl RecognitionOutcome {
    fn accept(model: ThickModel) -> Self {
        RecognitionOutcome {
            accepted: true,
            model: Some(model),
            witness: None,
        }
    }

    fn reject(step: &str, vertices: &VertexSet) -> Self {
        RecognitionOutcome {
            accepted: false,
            model: None,
            witness: Some(Witness {
                step: step.to_string(),
                vertices: vertices.iter().collect(),
            }),
        }
    }
}

/// Partial model of an induced subgraph with a designated root thick
/// vertex containing the entry frontier.
#[derive(Debug, Clone)]
struct SubModel {
    classes: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
    root: usize,
}

impl SubModel {
    fn single(class: VertexSet) -> Self {
        SubModel {
            classes: vec![class],
            edges: Vec::new(),
            root: 0,
        }
    }
}

/// Thick-forest recognition; accepts with a verified forest model.
pub fn recognize_thick_forest(g: &Graph) -> RecognitionOutcome {
    recognize_thick_forest_with_policy(g, CandidatePolicy::Ordered)
}

pub fn recognize_thick_forest_with_policy(
    g: &Graph,
    policy: CandidatePolicy,
) -> RecognitionOutcome {
    // quasi-thick-forest pre-check; a thick forest always passes
    if let Err(atom) = is_quasi_thick_forest(g) {
        return RecognitionOutcome::reject("quasi-pre-check", &atom);
    }
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for comp in g.components() {
        match solve(g, &comp, &VertexSet::new(), policy) {
            Some(sub) => {
                let offset = classes.len();
                classes.extend(sub.classes);
                edges.extend(sub.edges.iter().map(|&(a, b)| (a + offset, b + offset)));
            }
            None => return RecognitionOutcome::reject("no-forest-model", &comp),
        }
    }
    let mut phi = vec![0u32; g.n()];
    for (t, cls) in classes.iter().enumerate() {
        for v in cls.iter() {
            phi[v as usize] = t as u32;
        }
    }
    let model = ThickModel::new(
        classes.len(),
        edges.iter().map(|&(a, b)| (a as u32, b as u32)).collect(),
        phi,
    );
    assert!(
        verify_model(g, &model, ModelClass::Forest).is_ok(),
        "recognizer produced an invalid model"
    );
    RecognitionOutcome::accept(model)
}

/// Recursive solver: a forest model of g[active] whose root thick vertex
/// contains the clique `c` (the frontier toward the caller); all edges
/// from outside into `active` end in `c`.
fn solve(g: &Graph, active: &VertexSet, c: &VertexSet, policy: CandidatePolicy) -> Option<SubModel> {
    debug_assert!(!active.is_empty());
    if g.is_clique(active) {
        return Some(SubModel::single(active.clone()));
    }
    // dense necessary condition before the quadratic cobipartite check
    let twice_edges: usize = active
        .iter()
        .map(|v| g.neighbors(v).iter().filter(|&&u| active.contains(u)).count())
        .sum();
    if 2 * twice_edges >= active.len() * (active.len() - 1) {
        if let Some((x, y)) = cobipartition_containing(g, active, c) {
            if y.is_empty() {
                return Some(SubModel::single(x));
            }
            if x.is_empty() {
                return Some(SubModel::single(y));
            }
            return Some(SubModel {
                classes: vec![x, y],
                edges: vec![(0, 1)],
                root: 0,
            });
        }
    }

    let seed = if c.is_empty() {
        VertexSet::singleton(active.min().expect("nonempty"))
    } else {
        c.clone()
    };
    let cands = expand_candidates(g, active, &seed);
    if cands.is_empty() {
        return None;
    }
    match policy {
        CandidatePolicy::Ordered => {
            for a in &cands {
                if let Some(sub) = try_root(g, active, c, a, policy) {
                    return Some(sub);
                }
            }
            None
        }
        CandidatePolicy::Forced(k) => {
            let a = &cands[k % cands.len()];
            try_root(g, active, c, a, policy)
        }
    }
}

/// Process one root separator candidate: split off the components beyond
/// it, recurse with their frontier cliques, and on a single rejection
/// re-partition the separator with EDGE and repair that branch.
fn try_root(
    g: &Graph,
    active: &VertexSet,
    c: &VertexSet,
    a: &VertexSet,
    policy: CandidatePolicy,
) -> Option<SubModel> {
    let open = active.minus(a);
    if open.is_empty() {
        return None; // a == active would mean active is a clique
    }
    let comps = g.components_within(&open);
    let r = comps.len();

    let mut frontiers: Vec<Option<VertexSet>> = Vec::with_capacity(r);
    for comp in &comps {
        let ci: VertexSet = comp
            .iter()
            .filter(|&v| g.neighbors(v).iter().any(|nb| a.contains(*nb)))
            .collect();
        frontiers.push(if g.is_clique(&ci) { Some(ci) } else { None });
    }

    let mut failed: Vec<usize> = Vec::new();
    let mut subs: Vec<Option<SubModel>> = vec![None; r];
    for i in 0..r {
        match &frontiers[i] {
            None => failed.push(i),
            Some(ci) => match solve(g, &comps[i], ci, policy) {
                Some(sub) => subs[i] = Some(sub),
                None => failed.push(i),
            },
        }
        if failed.len() >= 2 {
            return None; // at most one subtree of a thick vertex can fail
        }
    }

    if failed.is_empty() {
        // the separator is a whole thick vertex
        return Some(glue(a.clone(), subs.into_iter().map(Option::unwrap).collect()));
    }

    // exactly one rejected subtree: the separator must contain the thick
    // vertex properly, inside the thick edge toward that subtree
    let j = failed[0];
    let mut l = VertexSet::new();
    for (i, comp) in comps.iter().enumerate() {
        if i != j {
            l = l.union(comp);
        }
    }
    let mut u0: Vec<u32> = c.iter().collect();
    for v in a.iter() {
        if g.neighbors(v).iter().any(|nb| l.contains(*nb)) {
            u0.push(v);
        }
    }
    let u0 = VertexSet::from_unsorted(u0);
    let split = edge_core(g, a, &comps[j], &u0, &|v, w_prime| {
        g.neighbors(v)
            .iter()
            .any(|&nb| comps[j].contains(nb) && !w_prime.contains(nb))
    })
    .ok()?;
    debug_assert!(!split.thick_u.is_empty());

    let repaired_active = comps[j].union(&a.minus(&split.thick_u));
    let sub_j = solve(g, &repaired_active, &split.frontier, policy)?;

    let mut children: Vec<SubModel> = Vec::new();
    for (i, s) in subs.into_iter().enumerate() {
        if i != j {
            children.push(s.unwrap());
        }
    }
    children.push(sub_j);
    Some(glue(split.thick_u, children))
}

fn glue(root_class: VertexSet, children: Vec<SubModel>) -> SubModel {
    let mut classes = vec![root_class];
    let mut edges = Vec::new();
    for child in children {
        let offset = classes.len();
        classes.extend(child.classes);
        edges.extend(child.edges.iter().map(|&(a, b)| (a + offset, b + offset)));
        edges.push((0, offset + child.root));
    }
    SubModel {
        classes,
        edges,
        root: 0,
    }
}
