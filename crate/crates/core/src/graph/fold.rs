//! Stallings folding.
//!
//! Vertices are merged with a union-find; each class keeps a table from
//! label to one representative neighbour. Merging two classes merges their
//! tables, and every clash between tables queues another merge. Once the
//! queue drains the quotient is deterministic.

use std::collections::{BTreeMap, HashSet, VecDeque};

use super::{LabeledGraph, VertexId};
use crate::word::Label;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Folding {
    pub graph: LabeledGraph,
    /// Image of every original vertex in the folded graph.
    pub projection: Vec<VertexId>,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }
}

/// Fold `g`, naming the result by breadth-first order from the vertex with
/// the smallest id.
pub fn fold(g: &LabeledGraph) -> Folding {
    match g.smallest_vertex() {
        Some(v) => fold_from(g, v),
        None => Folding {
            graph: LabeledGraph::new(),
            projection: Vec::new(),
        },
    }
}

/// Fold `g`, naming the result by breadth-first order from `start`
/// (`v1`, `v2`, ... and `e1`, `e2`, ...). Further components, if any, are
/// numbered afterwards starting from their smallest original id.
pub fn fold_from(g: &LabeledGraph, start: VertexId) -> Folding {
    let n = g.vertex_count();
    let mut uf = UnionFind::new(n);
    let mut tables: Vec<BTreeMap<Label, usize>> = vec![BTreeMap::new(); n];
    let mut pending: Vec<(usize, usize)> = Vec::new();

    for v in g.vertices() {
        for &d in g.star(v) {
            let label = g.dart_label(d);
            let t = g.dart_target(d).0;
            match tables[v.0].get(&label) {
                Some(&t0) => pending.push((t0, t)),
                None => {
                    tables[v.0].insert(label, t);
                }
            }
        }
    }

    while let Some((a, b)) = pending.pop() {
        let (ra, rb) = (uf.find(a), uf.find(b));
        if ra == rb {
            continue;
        }
        let (keep, gone) = if ra < rb { (ra, rb) } else { (rb, ra) };
        uf.parent[gone] = keep;
        let moved = std::mem::take(&mut tables[gone]);
        for (label, t) in moved {
            match tables[keep].get(&label) {
                Some(&t0) => pending.push((t0, t)),
                None => {
                    tables[keep].insert(label, t);
                }
            }
        }
    }

    // canonical numbering
    let mut order_of_root: Vec<Option<usize>> = vec![None; n];
    let mut roots_in_order: Vec<usize> = Vec::new();
    let mut edges: Vec<(usize, Label, usize)> = Vec::new();
    let mut seen_edges: HashSet<(usize, Label)> = HashSet::new();

    let mut component_starts: Vec<VertexId> = vec![start];
    let mut rest = g.vertices_sorted();
    rest.retain(|&v| v != start);
    component_starts.extend(rest);

    for s in component_starts {
        let root = uf.find(s.0);
        if order_of_root[root].is_some() {
            continue;
        }
        order_of_root[root] = Some(roots_in_order.len());
        roots_in_order.push(root);
        let mut queue = VecDeque::from([root]);
        while let Some(r) = queue.pop_front() {
            let entries: Vec<(Label, usize)> =
                tables[r].iter().map(|(&l, &t)| (l, t)).collect();
            for (label, t) in entries {
                let tr = uf.find(t);
                if order_of_root[tr].is_none() {
                    order_of_root[tr] = Some(roots_in_order.len());
                    roots_in_order.push(tr);
                    queue.push_back(tr);
                }
                let (src, dst) = if label.is_positive() { (r, tr) } else { (tr, r) };
                if seen_edges.insert((src, label.letter.positive())) {
                    edges.push((src, label, dst));
                }
            }
        }
    }

    let mut graph = LabeledGraph::new();
    for i in 0..roots_in_order.len() {
        graph
            .add_vertex(&format!("v{}", i + 1))
            .expect("fresh names");
    }
    for (i, (src, label, dst)) in edges.into_iter().enumerate() {
        let s = VertexId(order_of_root[src].expect("numbered"));
        let d = VertexId(order_of_root[dst].expect("numbered"));
        graph
            .add_edge(&format!("e{}", i + 1), label.letter, s, d)
            .expect("fresh names");
    }
    let projection = (0..n)
        .map(|v| VertexId(order_of_root[uf.find(v)].expect("numbered")))
        .collect();
    Folding { graph, projection }
}

impl LabeledGraph {
    /// The flower graph: one petal at a base vertex per word, each petal a
    /// circuit spelling the word. Returns the graph and its base.
    pub fn flower<'w>(words: impl IntoIterator<Item = &'w crate::word::Word>) -> (Self, VertexId) {
        let mut g = LabeledGraph::new();
        let base = g.add_vertex("o").expect("fresh graph");
        let mut fresh = 0usize;
        for (wi, w) in words.into_iter().enumerate() {
            let mut cur = base;
            for (i, &l) in w.labels().iter().enumerate() {
                let next = if i + 1 == w.len() {
                    base
                } else {
                    fresh += 1;
                    g.add_vertex(&format!("p{fresh}")).expect("fresh names")
                };
                let (s, d) = if l.is_positive() { (cur, next) } else { (next, cur) };
                g.add_edge(&format!("w{wi}.{i}"), l.letter, s, d)
                    .expect("fresh names");
                cur = next;
            }
        }
        (g, base)
    }
}
