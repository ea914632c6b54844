//! The free inverse monoid `FIM(X)` via Munn trees.
//!
//! An element is a finite subtree of the Cayley tree of the free group
//! (stored as its set of reduced-word vertices, always containing `1`)
//! together with a terminal root inside the tree.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::graph::{LabeledGraph, VertexId};
use crate::word::{Label, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MunnElement {
    tree: Vec<Word>,
    root: Word,
}

struct Node {
    parent: Option<(usize, Label)>,
    children: BTreeMap<Label, usize>,
}

impl MunnElement {
    pub fn identity() -> Self {
        MunnElement {
            tree: vec![Word::empty()],
            root: Word::empty(),
        }
    }

    /// Read `w` as a path in the Cayley tree starting at `1`.
    pub fn of(w: &Word) -> Self {
        let mut nodes = vec![Node {
            parent: None,
            children: BTreeMap::new(),
        }];
        let mut cur = 0usize;
        for &l in w.labels() {
            if let Some((p, via)) = nodes[cur].parent {
                if via == l.inv() {
                    cur = p;
                    continue;
                }
            }
            cur = match nodes[cur].children.get(&l) {
                Some(&c) => c,
                None => {
                    let c = nodes.len();
                    nodes.push(Node {
                        parent: Some((cur, l)),
                        children: BTreeMap::new(),
                    });
                    nodes[cur].children.insert(l, c);
                    c
                }
            };
        }
        let spell = |mut n: usize| {
            let mut labels = Vec::new();
            while let Some((p, l)) = nodes[n].parent {
                labels.push(l);
                n = p;
            }
            labels.reverse();
            Word::from_labels(labels)
        };
        let mut tree: Vec<Word> = (0..nodes.len()).map(spell).collect();
        tree.sort();
        MunnElement {
            tree,
            root: spell(cur),
        }
    }

    /// Build from explicit parts. `None` unless `tree` is a prefix-closed
    /// set of reduced words containing `1` and `root`.
    pub fn from_parts(tree: impl IntoIterator<Item = Word>, root: Word) -> Option<Self> {
        let set: BTreeSet<Word> = tree.into_iter().collect();
        if !set.contains(&Word::empty()) || !set.contains(&root) {
            return None;
        }
        for t in &set {
            if !t.is_reduced() {
                return None;
            }
            if !t.is_empty() {
                let parent = Word::from_labels(t.labels()[..t.len() - 1].to_vec());
                if !set.contains(&parent) {
                    return None;
                }
            }
        }
        Some(MunnElement {
            tree: set.into_iter().collect(),
            root,
        })
    }

    /// Tree vertices in shortlex order.
    pub fn tree(&self) -> &[Word] {
        &self.tree
    }

    pub fn root(&self) -> &Word {
        &self.root
    }

    pub fn contains_vertex(&self, w: &Word) -> bool {
        self.tree.binary_search(w).is_ok()
    }

    /// `MT(uv) = MT(u) ∪ r(u)·MT(v)`, root `r(uv)`.
    pub fn mul(&self, other: &MunnElement) -> MunnElement {
        let mut set: BTreeSet<Word> = self.tree.iter().cloned().collect();
        set.extend(other.tree.iter().map(|t| self.root.concat(t).reduce()));
        MunnElement {
            tree: set.into_iter().collect(),
            root: self.root.concat(&other.root).reduce(),
        }
    }

    /// The same tree re-rooted: initial root at `r`, terminal root at `1`.
    pub fn inverse(&self) -> MunnElement {
        let shift = self.root.inverse();
        let mut tree: Vec<Word> = self.tree.iter().map(|t| shift.concat(t).reduce()).collect();
        tree.sort();
        MunnElement { tree, root: shift }
    }

    pub fn is_idempotent(&self) -> bool {
        self.root.is_empty()
    }

    /// Natural partial order: `self ≤ other` iff `self = self·self⁻¹·other`,
    /// i.e. `MT(other) ⊆ MT(self)` with equal roots.
    pub fn leq(&self, other: &MunnElement) -> bool {
        self.root == other.root && other.tree.iter().all(|t| self.contains_vertex(t))
    }

    /// A canonical word for this element: an Euler tour of the tree from
    /// `1` (children in label order) followed by the geodesic to the root.
    pub fn to_word(&self) -> Word {
        let mut children: BTreeMap<Word, Vec<Label>> = BTreeMap::new();
        for t in &self.tree {
            if let Some((&last, init)) = t.labels().split_last() {
                children
                    .entry(Word::from_labels(init.to_vec()))
                    .or_default()
                    .push(last);
            }
        }
        fn tour(at: &Word, children: &BTreeMap<Word, Vec<Label>>, out: &mut Word) {
            let Some(kids) = children.get(at) else { return };
            let mut kids = kids.clone();
            kids.sort();
            for l in kids {
                let mut next = at.clone();
                next.push(l);
                out.push(l);
                tour(&next, children, out);
                out.push(l.inv());
            }
        }
        let mut out = Word::empty();
        tour(&Word::empty(), &children, &mut out);
        out.concat(&self.root)
    }

    /// The tree as a labeled graph: vertices named by their reduced words,
    /// base `1`. Returns the graph, its base and its terminal root.
    pub fn to_graph(&self) -> (LabeledGraph, VertexId, VertexId) {
        let mut g = LabeledGraph::new();
        for t in &self.tree {
            g.add_vertex(&t.to_string()).expect("distinct words");
        }
        let mut edge = 0;
        for t in &self.tree {
            if let Some((&last, init)) = t.labels().split_last() {
                edge += 1;
                let parent = Word::from_labels(init.to_vec());
                let p = g.vertex_by_name(&parent.to_string()).expect("prefix closed");
                let c = g.vertex_by_name(&t.to_string()).expect("vertex");
                let (s, d) = if last.is_positive() { (p, c) } else { (c, p) };
                g.add_edge(&format!("e{edge}"), last.letter, s, d)
                    .expect("fresh names");
            }
        }
        let base = g.vertex_by_name("1").expect("tree contains 1");
        let root = g.vertex_by_name(&self.root.to_string()).expect("root in tree");
        (g, base, root)
    }
}

impl fmt::Display for MunnElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, t) in self.tree.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, "}} root {}", self.root)
    }
}

pub fn munn_element(w: &Word) -> MunnElement {
    MunnElement::of(w)
}

/// Word problem in `FIM(X)`.
pub fn fim_equal(u: &Word, v: &Word) -> bool {
    MunnElement::of(u) == MunnElement::of(v)
}

pub fn fim_mul(u: &MunnElement, v: &MunnElement) -> MunnElement {
    u.mul(v)
}

pub fn fim_inverse(w: &Word) -> Word {
    w.inverse()
}

pub fn is_idempotent(w: &Word) -> bool {
    w.is_dyck()
}

pub fn nat_leq(u: &Word, v: &Word) -> bool {
    MunnElement::of(u).leq(&MunnElement::of(v))
}
