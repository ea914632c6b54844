//! Edge-labeled Serre graphs.
//!
//! Only positively oriented edges are stored. Each one implicitly carries an
//! inverse edge running the other way with the inverted label; a [`Dart`]
//! names one of the two orientations.

mod fold;
mod format;
mod morphism;
mod path;

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, VecDeque};

use thiserror::Error;

use crate::word::{Label, Letter, Word};

pub use fold::{fold, fold_from, Folding};
pub use format::{parse_graph, write_graph, GraphFile, ParseError};
pub use morphism::{
    based_isomorphic, induced_morphism, lift_maximal, LiftOutcome, LocalClass, GraphMorphism,
};
pub use path::PathWitness;
pub(crate) use morphism::propagate as morphism_propagate;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate edge id `{0}`")]
    DuplicateEdge(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is empty")]
    Empty,
    #[error("graph is not deterministic at vertex `{0}`")]
    NotDeterministic(String),
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("vertex `{0}` does not lie over the start of the path")]
    NotOverPathStart(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

/// A positively oriented edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    pub letter: Letter,
    pub src: VertexId,
    pub dst: VertexId,
}

/// One orientation of an edge: `forward` is the stored positive edge,
/// otherwise its implicit inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub edge: EdgeId,
    pub forward: bool,
}

impl Dart {
    pub fn inv(self) -> Dart {
        Dart {
            edge: self.edge,
            forward: !self.forward,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LabeledGraph {
    vertex_names: Vec<String>,
    vertex_index: HashMap<String, VertexId>,
    edges: Vec<Edge>,
    edge_index: HashMap<String, EdgeId>,
    // darts leaving each vertex, sorted by (label, edge)
    stars: Vec<Vec<Dart>>,
}

impl LabeledGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// The bouquet `B_X`: one vertex `o` with one loop per letter.
    pub fn bouquet(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut g = LabeledGraph::new();
        let o = g.add_vertex("o").expect("fresh graph");
        let letters: BTreeSet<Letter> = letters.into_iter().collect();
        for l in letters {
            g.add_edge(&l.to_string(), l, o, o).expect("distinct letters");
        }
        g
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<VertexId, GraphError> {
        if self.vertex_index.contains_key(name) {
            return Err(GraphError::DuplicateVertex(name.to_string()));
        }
        let id = VertexId(self.vertex_names.len());
        self.vertex_names.push(name.to_string());
        self.vertex_index.insert(name.to_string(), id);
        self.stars.push(Vec::new());
        Ok(id)
    }

    pub fn add_edge(
        &mut self,
        name: &str,
        letter: Letter,
        src: VertexId,
        dst: VertexId,
    ) -> Result<EdgeId, GraphError> {
        if self.edge_index.contains_key(name) {
            return Err(GraphError::DuplicateEdge(name.to_string()));
        }
        for v in [src, dst] {
            if v.0 >= self.vertex_names.len() {
                return Err(GraphError::UnknownVertex(format!("#{}", v.0)));
            }
        }
        let id = EdgeId(self.edges.len());
        self.edges.push(Edge {
            name: name.to_string(),
            letter,
            src,
            dst,
        });
        self.edge_index.insert(name.to_string(), id);
        self.insert_dart(src, Dart { edge: id, forward: true });
        self.insert_dart(dst, Dart { edge: id, forward: false });
        Ok(id)
    }

    fn insert_dart(&mut self, v: VertexId, d: Dart) {
        let key = (self.dart_label(d), d.edge);
        let star = &self.stars[v.0];
        let pos = star.partition_point(|&x| (self.dart_label(x), x.edge) < key);
        self.stars[v.0].insert(pos, d);
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_names.len()).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.0]
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_names[v.0]
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.vertex_index.get(name).copied()
    }

    pub fn edge_by_name(&self, name: &str) -> Option<EdgeId> {
        self.edge_index.get(name).copied()
    }

    pub fn require_vertex(&self, name: &str) -> Result<VertexId, GraphError> {
        self.vertex_by_name(name)
            .ok_or_else(|| GraphError::UnknownVertex(name.to_string()))
    }

    /// Outgoing darts at `v` (including inverse edges), in label order.
    pub fn star(&self, v: VertexId) -> &[Dart] {
        &self.stars[v.0]
    }

    pub fn dart_label(&self, d: Dart) -> Label {
        let l = self.edges[d.edge.0].letter;
        if d.forward {
            l.positive()
        } else {
            l.negative()
        }
    }

    pub fn dart_source(&self, d: Dart) -> VertexId {
        let e = &self.edges[d.edge.0];
        if d.forward {
            e.src
        } else {
            e.dst
        }
    }

    pub fn dart_target(&self, d: Dart) -> VertexId {
        let e = &self.edges[d.edge.0];
        if d.forward {
            e.dst
        } else {
            e.src
        }
    }

    /// First dart at `v` carrying `label`.
    pub fn dart_with_label(&self, v: VertexId, label: Label) -> Option<Dart> {
        let star = &self.stars[v.0];
        let pos = star.partition_point(|&d| self.dart_label(d) < label);
        star.get(pos).copied().filter(|&d| self.dart_label(d) == label)
    }

    pub fn step(&self, v: VertexId, label: Label) -> Option<VertexId> {
        self.dart_with_label(v, label).map(|d| self.dart_target(d))
    }

    /// Follow `word` from `v`; `None` as soon as a letter cannot be read.
    pub fn trace(&self, v: VertexId, word: &Word) -> Option<VertexId> {
        word.labels()
            .iter()
            .try_fold(v, |cur, &l| self.step(cur, l))
    }

    pub fn letters(&self) -> BTreeSet<Letter> {
        self.edges.iter().map(|e| e.letter).collect()
    }

    /// Outgoing labels at every vertex are pairwise distinct.
    pub fn is_deterministic(&self) -> bool {
        self.first_nondeterministic_vertex().is_none()
    }

    pub fn first_nondeterministic_vertex(&self) -> Option<VertexId> {
        self.vertices().find(|&v| {
            self.stars[v.0]
                .windows(2)
                .any(|w| self.dart_label(w[0]) == self.dart_label(w[1]))
        })
    }

    pub fn require_deterministic(&self) -> Result<(), GraphError> {
        match self.first_nondeterministic_vertex() {
            Some(v) => Err(GraphError::NotDeterministic(self.vertex_name(v).to_string())),
            None => Ok(()),
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count() == 0 {
            return true;
        }
        self.bfs_tree(VertexId(0)).iter().all(|p| p.is_some())
    }

    pub fn require_connected(&self) -> Result<(), GraphError> {
        if self.vertex_count() == 0 {
            return Err(GraphError::Empty);
        }
        if self.is_connected() {
            Ok(())
        } else {
            Err(GraphError::Disconnected)
        }
    }

    /// Breadth-first spanning tree from `start`: for each vertex, the dart
    /// through which it was first reached (`Some(None)` for `start`,
    /// `None` for unreachable vertices). Darts are explored in label order.
    pub fn bfs_tree(&self, start: VertexId) -> Vec<Option<Option<Dart>>> {
        let mut parent = vec![None; self.vertex_count()];
        parent[start.0] = Some(None);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &d in self.star(v) {
                let t = self.dart_target(d);
                if parent[t.0].is_none() {
                    parent[t.0] = Some(Some(d));
                    queue.push_back(t);
                }
            }
        }
        parent
    }

    /// Shortest label-order-minimal path from `start` to every reachable vertex.
    pub fn geodesics(&self, start: VertexId) -> Vec<Option<PathWitness>> {
        let tree = self.bfs_tree(start);
        self.vertices()
            .map(|v| {
                tree[v.0]?;
                let mut steps = Vec::new();
                let mut cur = v;
                while let Some(Some(d)) = tree[cur.0] {
                    steps.push(d);
                    cur = self.dart_source(d);
                }
                steps.reverse();
                Some(PathWitness::new(start, steps))
            })
            .collect()
    }

    /// Number of positive edges outside a spanning tree, i.e. the rank of
    /// the fundamental group.
    pub fn fg_rank(&self) -> Result<usize, GraphError> {
        self.require_connected()?;
        Ok(self.edge_count() + 1 - self.vertex_count())
    }

    pub fn is_tree(&self) -> Result<bool, GraphError> {
        Ok(self.fg_rank()? == 0)
    }

    /// Vertices in canonical output order (natural order on names).
    pub fn vertices_sorted(&self) -> Vec<VertexId> {
        let mut v: Vec<VertexId> = self.vertices().collect();
        v.sort_by(|&a, &b| natural_cmp(self.vertex_name(a), self.vertex_name(b)));
        v
    }

    pub fn edges_sorted(&self) -> Vec<EdgeId> {
        let mut e: Vec<EdgeId> = self.edge_ids().collect();
        e.sort_by(|&a, &b| natural_cmp(&self.edges[a.0].name, &self.edges[b.0].name));
        e
    }

    /// Vertex with the smallest name in natural order.
    pub fn smallest_vertex(&self) -> Option<VertexId> {
        self.vertices()
            .min_by(|&a, &b| natural_cmp(self.vertex_name(a), self.vertex_name(b)))
    }
}

/// Compare ids chunk-wise, digit runs numerically, so `v2 < v10`.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    fn chunks(s: &str) -> Vec<(bool, &str)> {
        let mut out = Vec::new();
        let bytes = s.as_bytes();
        let mut start = 0;
        for i in 1..=bytes.len() {
            if i == bytes.len()
                || bytes[i].is_ascii_digit() != bytes[start].is_ascii_digit()
            {
                out.push((bytes[start].is_ascii_digit(), &s[start..i]));
                start = i;
            }
        }
        out
    }
    let (ca, cb) = (chunks(a), chunks(b));
    for (x, y) in ca.iter().zip(cb.iter()) {
        let ord = match (x, y) {
            ((true, p), (true, q)) => {
                let (p, q) = (p.trim_start_matches('0'), q.trim_start_matches('0'));
                p.len().cmp(&q.len()).then_with(|| p.cmp(q))
            }
            ((_, p), (_, q)) => p.cmp(q),
        };
        if ord != Ordering::Equal {
            return ord;
        }
    }
    ca.len().cmp(&cb.len()).then_with(|| a.cmp(b))
}
