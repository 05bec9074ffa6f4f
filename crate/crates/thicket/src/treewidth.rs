//! Counting independent sets of a thick graph from a supplied model and a
//! tree decomposition of its thin graph, via the standard nice-node
//! dynamic program. Tree decompositions are input, not computed; an
//! exhaustive-search routine for small thin graphs exists as a test
//! utility only.

use crate::graph::{Graph, VertexSet};
use crate::recognize::{verify_model, ModelClass, ThickModel};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeKind {
    Leaf,
    Introduce(u32),
    Forget(u32),
    Join,
}

#[derive(Debug, Clone)]
pub struct NiceNode {
    pub kind: NodeKind,
    pub bag: VertexSet,
    pub children: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct NiceTreeDecomposition {
    pub nodes: Vec<NiceNode>,
    pub root: usize,
}

impl NiceTreeDecomposition {
    pub fn width(&self) -> usize {
        self.nodes
            .iter()
            .map(|n| n.bag.len())
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }
}

/// A tree decomposition as bags plus tree edges (not necessarily nice).
#[derive(Debug, Clone)]
pub struct RawTreeDecomposition {
    pub bags: Vec<VertexSet>,
    pub edges: Vec<(usize, usize)>,
}

impl RawTreeDecomposition {
    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(|b| b.len())
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TdViolation {
    #[error("axiom 1 violated: vertex {0} is in no bag")]
    VertexNotCovered(u32),
    #[error("axiom 2 violated: edge {0}-{1} is in no bag")]
    EdgeNotCovered(u32, u32),
    #[error("axiom 3 violated: bags containing vertex {0} are disconnected")]
    OccupancyDisconnected(u32),
    #[error("decomposition tree is not a tree")]
    NotATree,
    #[error("root bag is not empty")]
    RootNotEmpty,
    #[error("node {0} violates niceness")]
    NotNice(usize),
    #[error("bag of node {0} mentions vertex {1} outside the thin graph")]
    BagOutOfRange(usize, u32),
}

/// Checks the three tree-decomposition axioms plus niceness.
pub fn validate_td(h: &Graph, td: &NiceTreeDecomposition) -> Result<(), TdViolation> {
    let nodes = &td.nodes;
    for (i, n) in nodes.iter().enumerate() {
        if let Some(v) = n.bag.iter().find(|&v| v as usize >= h.n()) {
            return Err(TdViolation::BagOutOfRange(i, v));
        }
    }
    // tree shape: every node except the root has exactly one parent
    let mut seen = vec![false; nodes.len()];
    let mut stack = vec![td.root];
    let mut visited = 0;
    while let Some(i) = stack.pop() {
        if seen[i] {
            return Err(TdViolation::NotATree);
        }
        seen[i] = true;
        visited += 1;
        for &c in &nodes[i].children {
            stack.push(c);
        }
    }
    if visited != nodes.len() {
        return Err(TdViolation::NotATree);
    }
    if !nodes[td.root].bag.is_empty() {
        return Err(TdViolation::RootNotEmpty);
    }
    // axiom 1 and 2
    for v in h.vertices() {
        if !nodes.iter().any(|n| n.bag.contains(v)) {
            return Err(TdViolation::VertexNotCovered(v));
        }
    }
    for (u, v) in h.edges() {
        if !nodes.iter().any(|n| n.bag.contains(u) && n.bag.contains(v)) {
            return Err(TdViolation::EdgeNotCovered(u, v));
        }
    }
    // axiom 3: occupancy of each vertex is connected in the tree
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nodes.len()];
    for (i, n) in nodes.iter().enumerate() {
        for &c in &n.children {
            adj[i].push(c);
            adj[c].push(i);
        }
    }
    for v in h.vertices() {
        let occupied: Vec<usize> = (0..nodes.len())
            .filter(|&i| nodes[i].bag.contains(v))
            .collect();
        if occupied.is_empty() {
            continue;
        }
        let inside: std::collections::HashSet<usize> = occupied.iter().copied().collect();
        let mut reach = std::collections::HashSet::new();
        reach.insert(occupied[0]);
        let mut stack = vec![occupied[0]];
        while let Some(i) = stack.pop() {
            for &j in &adj[i] {
                if inside.contains(&j) && !reach.contains(&j) {
                    reach.insert(j);
                    stack.push(j);
                }
            }
        }
        if reach.len() != occupied.len() {
            return Err(TdViolation::OccupancyDisconnected(v));
        }
    }
    // niceness
    for (i, n) in nodes.iter().enumerate() {
        let ok = match &n.kind {
            NodeKind::Leaf => n.children.is_empty() && n.bag.is_empty(),
            NodeKind::Introduce(v) => {
                n.children.len() == 1 && {
                    let cb = &nodes[n.children[0]].bag;
                    n.bag.contains(*v)
                        && !cb.contains(*v)
                        && n.bag.minus(cb).as_slice() == [*v]
                        && cb.is_subset_of(&n.bag)
                }
            }
            NodeKind::Forget(v) => {
                n.children.len() == 1 && {
                    let cb = &nodes[n.children[0]].bag;
                    !n.bag.contains(*v)
                        && cb.contains(*v)
                        && cb.minus(&n.bag).as_slice() == [*v]
                        && n.bag.is_subset_of(cb)
                }
            }
            NodeKind::Join => {
                n.children.len() == 2
                    && nodes[n.children[0]].bag == n.bag
                    && nodes[n.children[1]].bag == n.bag
            }
        };
        if !ok {
            return Err(TdViolation::NotNice(i));
        }
    }
    Ok(())
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TdError {
    #[error("raw decomposition invalid: {0}")]
    BadRaw(String),
    #[error("model or decomposition rejected: {0}")]
    Contract(String),
}

/// Turns a valid raw tree decomposition into a nice one of the same
/// width: root bag emptied by a forget chain, bag-to-bag transitions
/// expanded into forget/introduce chains, branchings into joins, leaves
/// grown from empty bags.
pub fn make_nice(h: &Graph, raw: &RawTreeDecomposition) -> Result<NiceTreeDecomposition, TdError> {
    validate_raw(h, raw).map_err(TdError::BadRaw)?;
    let nb = raw.bags.len();
    let mut radj: Vec<Vec<usize>> = vec![Vec::new(); nb];
    for &(a, b) in &raw.edges {
        radj[a].push(b);
        radj[b].push(a);
    }
    let mut nodes: Vec<NiceNode> = Vec::new();

    fn chain_to(
        nodes: &mut Vec<NiceNode>,
        mut cur: usize,
        from: &VertexSet,
        to: &VertexSet,
    ) -> usize {
        let mut bag = from.clone();
        for v in from.minus(to).iter() {
            bag.remove(v);
            nodes.push(NiceNode {
                kind: NodeKind::Forget(v),
                bag: bag.clone(),
                children: vec![cur],
            });
            cur = nodes.len() - 1;
        }
        for v in to.minus(from).iter() {
            bag.insert(v);
            nodes.push(NiceNode {
                kind: NodeKind::Introduce(v),
                bag: bag.clone(),
                children: vec![cur],
            });
            cur = nodes.len() - 1;
        }
        cur
    }

    // returns the index of a nice node carrying exactly bag[raw]
    fn build(
        raw: &RawTreeDecomposition,
        radj: &[Vec<usize>],
        nodes: &mut Vec<NiceNode>,
        at: usize,
        parent: usize,
    ) -> usize {
        let bag = raw.bags[at].clone();
        let mut branches: Vec<usize> = Vec::new();
        for &c in &radj[at] {
            if c == parent {
                continue;
            }
            let sub = build(raw, radj, nodes, c, at);
            branches.push(chain_to(nodes, sub, &raw.bags[c], &bag));
        }
        if branches.is_empty() {
            // grow the bag from an empty leaf
            nodes.push(NiceNode {
                kind: NodeKind::Leaf,
                bag: VertexSet::new(),
                children: vec![],
            });
            let leaf = nodes.len() - 1;
            return chain_to(nodes, leaf, &VertexSet::new(), &bag);
        }
        let mut cur = branches[0];
        for &b in &branches[1..] {
            nodes.push(NiceNode {
                kind: NodeKind::Join,
                bag: bag.clone(),
                children: vec![cur, b],
            });
            cur = nodes.len() - 1;
        }
        cur
    }

    let top = build(raw, &radj, &mut nodes, 0, usize::MAX);
    let root = chain_to(&mut nodes, top, &raw.bags[0], &VertexSet::new());
    let td = NiceTreeDecomposition { nodes, root };
    debug_assert_eq!(td.width(), raw.width());
    debug_assert!(validate_td(h, &td).is_ok());
    Ok(td)
}

fn validate_raw(h: &Graph, raw: &RawTreeDecomposition) -> Result<(), String> {
    let nb = raw.bags.len();
    if nb == 0 {
        return Err("no bags".into());
    }
    if raw.edges.len() + 1 != nb {
        return Err("bag tree edge count is not bags - 1".into());
    }
    let mut radj: Vec<Vec<usize>> = vec![Vec::new(); nb];
    for &(a, b) in &raw.edges {
        if a >= nb || b >= nb {
            return Err("tree edge out of range".into());
        }
        radj[a].push(b);
        radj[b].push(a);
    }
    let mut seen = vec![false; nb];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut cnt = 1;
    while let Some(i) = stack.pop() {
        for &j in &radj[i] {
            if !seen[j] {
                seen[j] = true;
                cnt += 1;
                stack.push(j);
            }
        }
    }
    if cnt != nb {
        return Err("bag tree disconnected".into());
    }
    for v in h.vertices() {
        let occupied: Vec<usize> = (0..nb).filter(|&i| raw.bags[i].contains(v)).collect();
        if occupied.is_empty() {
            return Err(format!("vertex {v} in no bag"));
        }
        let inside: std::collections::HashSet<usize> = occupied.iter().copied().collect();
        let mut reach = std::collections::HashSet::new();
        reach.insert(occupied[0]);
        let mut stack = vec![occupied[0]];
        while let Some(i) = stack.pop() {
            for &j in &radj[i] {
                if inside.contains(&j) && !reach.contains(&j) {
                    reach.insert(j);
                    stack.push(j);
                }
            }
        }
        if reach.len() != occupied.len() {
            return Err(format!("occupancy of vertex {v} disconnected"));
        }
    }
    for (u, v) in h.edges() {
        if !raw.bags.iter().any(|b| b.contains(u) && b.contains(v)) {
            return Err(format!("edge {u}-{v} in no bag"));
        }
    }
    Ok(())
}

/// Exact count of independent sets of g from a model and a nice tree
/// decomposition of the thin graph, by the leaf/introduce/forget/join
/// recurrences. The model and decomposition are checked first.
pub fn count_ind_treewidth(
    g: &Graph,
    model: &ThickModel,
    td: &NiceTreeDecomposition,
) -> Result<BigUint, TdError> {
    verify_model(g, model, ModelClass::Any)
        .map_err(|e| TdError::Contract(format!("invalid model: {e}")))?;
    let h = model.thin_graph();
    validate_td(&h, td).map_err(|e| TdError::Contract(format!("invalid decomposition: {e}")))?;

    let width = td.width();
    let classes = model.classes();
    let mut tables: Vec<Option<HashMap<VertexSet, BigUint>>> = vec![None; td.nodes.len()];
    // children before parents
    let order = postorder(td);
    for i in order {
        let node = &td.nodes[i];
        let table = match &node.kind {
            NodeKind::Leaf => {
                let mut t = HashMap::new();
                t.insert(VertexSet::new(), BigUint::one());
                t
            }
            NodeKind::Introduce(tv) => {
                let child = tables[node.children[0]].take().unwrap();
                let mut t = HashMap::new();
                for (s, cnt) in &child {
                    t.insert(s.clone(), cnt.clone());
                    for x in classes[*tv as usize].iter() {
                        if s.iter().all(|y| !g.has_edge(x, y)) {
                            let mut s2 = s.clone();
                            s2.insert(x);
                            debug_assert!(s2.len() <= width + 1);
                            t.insert(s2, cnt.clone());
                        }
                    }
                }
                t
            }
            NodeKind::Forget(tv) => {
                let child = tables[node.children[0]].take().unwrap();
                let mut t: HashMap<VertexSet, BigUint> = HashMap::new();
                for (s, cnt) in child {
                    let s2: VertexSet = s
                        .iter()
                        .filter(|&x| model.phi[x as usize] != *tv)
                        .collect();
                    *t.entry(s2).or_insert_with(BigUint::zero) += cnt;
                }
                t
            }
            NodeKind::Join => {
                let left = tables[node.children[0]].take().unwrap();
                let right = tables[node.children[1]].take().unwrap();
                let mut t = HashMap::new();
                for (s, cl) in &left {
                    if let Some(cr) = right.get(s) {
                        t.insert(s.clone(), cl * cr);
                    }
                }
                t
            }
        };
        tables[i] = Some(table);
    }
    let root = tables[td.root].take().unwrap();
    Ok(root.get(&VertexSet::new()).cloned().unwrap_or_else(BigUint::zero))
}

fn postorder(td: &NiceTreeDecomposition) -> Vec<usize> {
    let mut out = Vec::with_capacity(td.nodes.len());
    let mut stack = vec![(td.root, false)];
    while let Some((i, expanded)) = stack.pop() {
        if expanded {
            out.push(i);
        } else {
            stack.push((i, true));
            for &c in &td.nodes[i].children {
                stack.push((c, false));
            }
        }
    }
    out
}

/// Exact minimum-width tree decomposition by dynamic programming over
/// elimination orders. Test utility: exponential in |V(h)|, capped at 15.
pub fn exact_treewidth_decomposition(h: &Graph) -> RawTreeDecomposition {
    let n = h.n();
    assert!(n <= 15, "exact treewidth search is a test utility for |V| <= 15");
    if n == 0 {
        return RawTreeDecomposition {
            bags: vec![VertexSet::new()],
            edges: vec![],
        };
    }
    let adj: Vec<u32> = {
        let mut a = vec![0u32; n];
        for (u, v) in h.edges() {
            a[u as usize] |= 1 << v;
            a[v as usize] |= 1 << u;
        }
        a
    };
    // boundary degree of v after eliminating the set t
    let elim_degree = |v: usize, t: u32| -> u32 {
        // vertices outside t ∪ {v} reachable from v through t
        let mut reach = adj[v] & t;
        let mut boundary = adj[v] & !t & !(1 << v);
        let mut frontier = reach;
        while frontier != 0 {
            let mut next = 0u32;
            let mut f = frontier;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[u];
            }
            boundary |= next & !t & !(1 << v);
            let newreach = (next & t) & !reach;
            reach |= newreach;
            frontier = newreach;
        }
        boundary.count_ones()
    };
    let full = (1u32 << n) - 1;
    let mut cost = vec![u32::MAX; 1 << n];
    let mut choice = vec![u32::MAX; 1 << n];
    cost[0] = 0;
    let mut by_pop: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for s in 0u32..=full {
        by_pop[s.count_ones() as usize].push(s);
    }
    for size in 1..=n {
        for &s in &by_pop[size] {
            let mut best = u32::MAX;
            let mut who = u32::MAX;
            let mut m = s;
            while m != 0 {
                let v = m.trailing_zeros();
                m &= m - 1;
                let prev = s & !(1 << v);
                let c = cost[prev as usize].max(elim_degree(v as usize, prev));
                if c < best {
                    best = c;
                    who = v;
                }
            }
            cost[s as usize] = best;
            choice[s as usize] = who;
        }
    }
    // reconstruct the elimination order (first eliminated first)
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let v = choice[s as usize];
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();

    // simulate elimination, recording bags and the clique-tree links
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v as usize] = i;
    }
    let mut fill_adj = adj.clone();
    let mut bags: Vec<VertexSet> = Vec::with_capacity(n);
    let mut parents: Vec<Option<usize>> = Vec::with_capacity(n);
    for (i, &v) in order.iter().enumerate() {
        let later: Vec<u32> = (0..n as u32)
            .filter(|&u| fill_adj[v as usize] >> u & 1 == 1 && pos[u as usize] > i)
            .collect();
        let mut bag = later.clone();
        bag.push(v);
        bags.push(VertexSet::from_unsorted(bag));
        parents.push(
            later
                .iter()
                .min_by_key(|&&u| pos[u as usize])
                .map(|&u| pos[u as usize]),
        );
        // connect later neighbours pairwise
        for (a_i, &a) in later.iter().enumerate() {
            for &b in &later[a_i + 1..] {
                fill_adj[a as usize] |= 1 << b;
                fill_adj[b as usize] |= 1 << a;
            }
        }
    }
    let mut edges = Vec::new();
    for (i, p) in parents.iter().enumerate() {
        if let Some(p) = p {
            edges.push((i, *p));
        }
    }
    // components: link their last bags arbitrarily to keep one tree
    let raw = RawTreeDecomposition { bags, edges };
    connect_components(raw)
}

fn connect_components(mut raw: RawTreeDecomposition) -> RawTreeDecomposition {
    let nb = raw.bags.len();
    let mut dsu: Vec<usize> = (0..nb).collect();
    fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
        if dsu[x] != x {
            let r = find(dsu, dsu[x]);
            dsu[x] = r;
        }
        dsu[x]
    }
    for &(a, b) in &raw.edges {
        let (ra, rb) = (find(&mut dsu, a), find(&mut dsu, b));
        if ra != rb {
            dsu[ra] = rb;
        }
    }
    let mut reps: Vec<usize> = Vec::new();
    for i in 0..nb {
        let r = find(&mut dsu, i);
        if r == i {
            reps.push(i);
        }
    }
    for w in reps.windows(2) {
        raw.edges.push((w[0], w[1]));
    }
    raw
}
