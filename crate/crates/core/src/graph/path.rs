use super::{Dart, LabeledGraph, VertexId};
use crate::word::Word;

/// An edge path: a start vertex and a sequence of consecutive darts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathWitness {
    pub start: VertexId,
    pub steps: Vec<Dart>,
}

impl PathWitness {
    pub fn new(start: VertexId, steps: Vec<Dart>) -> Self {
        PathWitness { start, steps }
    }

    pub fn empty(start: VertexId) -> Self {
        PathWitness::new(start, Vec::new())
    }

    /// The path reading `word` from `start`, if every letter can be read.
    /// In a deterministic graph this is the unique such path.
    pub fn read(g: &LabeledGraph, start: VertexId, word: &Word) -> Option<Self> {
        let mut steps = Vec::with_capacity(word.len());
        let mut cur = start;
        for &l in word.labels() {
            let d = g.dart_with_label(cur, l)?;
            steps.push(d);
            cur = g.dart_target(d);
        }
        Some(PathWitness::new(start, steps))
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_valid(&self, g: &LabeledGraph) -> bool {
        if self.start.0 >= g.vertex_count() {
            return false;
        }
        let mut cur = self.start;
        for &d in &self.steps {
            if d.edge.0 >= g.edge_count() || g.dart_source(d) != cur {
                return false;
            }
            cur = g.dart_target(d);
        }
        true
    }

    pub fn end(&self, g: &LabeledGraph) -> VertexId {
        self.steps
            .last()
            .map_or(self.start, |&d| g.dart_target(d))
    }

    pub fn label(&self, g: &LabeledGraph) -> Word {
        self.steps.iter().map(|&d| g.dart_label(d)).collect()
    }

    pub fn is_circuit(&self, g: &LabeledGraph) -> bool {
        self.end(g) == self.start
    }

    pub fn inverse(&self, g: &LabeledGraph) -> PathWitness {
        PathWitness::new(
            self.end(g),
            self.steps.iter().rev().map(|d| d.inv()).collect(),
        )
    }

    pub fn then(&self, g: &LabeledGraph, other: &PathWitness) -> Option<PathWitness> {
        if self.end(g) != other.start {
            return None;
        }
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        Some(PathWitness::new(self.start, steps))
    }
}
