//! Closed inverse submonoids of `FIM(X)` represented by pointed coset graphs,
//! and immersions carrying a loop monoid into an arbitrary base graph.
//!
//! A finitely generated closed inverse submonoid `H` is stored as the folded
//! flower of its generators. Its vertices are the right ω-cosets `(Hm)^ω`;
//! the coset of `m` is the endpoint of `m` read from the base, and `m ∈ H`
//! exactly when that endpoint is the base itself.

use std::sync::Arc;

use thiserror::Error;

use crate::graph::{
    based_isomorphic, fold_from, induced_morphism, GraphError, GraphMorphism, LabeledGraph,
    LocalClass, PathWitness, VertexId,
};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubmonoidError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("generator {generator} does not read a circuit at `{vertex}`")]
    NotCircuit { generator: Word, vertex: String },
    #[error("no label-preserving morphism sends the base to `{0}`")]
    NoInducedMorphism(String),
    #[error("ω-coset of {0} is undefined")]
    UndefinedCoset(Word),
    #[error("morphism is not an immersion ({0})")]
    NotImmersion(LocalClass),
    #[error("base `{up}` does not map to `{down}`")]
    BaseMismatch { up: String, down: String },
}

/// A closed inverse submonoid `H ≤ FIM(X)` as a pointed, connected,
/// deterministic graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetGraph {
    graph: Arc<LabeledGraph>,
    base: VertexId,
    generators: Vec<Word>,
}

impl CosetGraph {
    /// Fold the flower of `gens`; the result represents the smallest closed
    /// inverse submonoid containing them.
    pub fn from_generators(gens: &[Word]) -> Self {
        let (flower, base) = LabeledGraph::flower(gens);
        let folded = fold_from(&flower, base);
        CosetGraph {
            base: folded.projection[base.0],
            graph: Arc::new(folded.graph),
            generators: gens.to_vec(),
        }
    }

    /// Wrap an existing pointed graph, e.g. one read from a file.
    pub fn from_pointed(graph: LabeledGraph, base: VertexId) -> Result<Self, SubmonoidError> {
        Self::from_shared(Arc::new(graph), base)
    }

    pub fn from_shared(graph: Arc<LabeledGraph>, base: VertexId) -> Result<Self, SubmonoidError> {
        graph.require_connected()?;
        graph.require_deterministic()?;
        if base.0 >= graph.vertex_count() {
            return Err(GraphError::UnknownVertex(format!("#{}", base.0)).into());
        }
        let generators = loop_generators(&graph, base);
        Ok(CosetGraph {
            graph,
            base,
            generators,
        })
    }

    pub fn graph(&self) -> &Arc<LabeledGraph> {
        &self.graph
    }

    pub fn base(&self) -> VertexId {
        self.base
    }

    /// The generators this graph was built from (or a generating set read
    /// off a spanning tree for graphs supplied directly).
    pub fn generators(&self) -> &[Word] {
        &self.generators
    }

    /// `w ∈ H`: `w` reads a circuit at the base.
    pub fn contains(&self, w: &Word) -> bool {
        self.graph.trace(self.base, w) == Some(self.base)
    }

    /// The vertex `(Hm)^ω`, defined iff `mm⁻¹ ∈ H`.
    pub fn omega_coset(&self, m: &Word) -> Option<VertexId> {
        self.graph.trace(self.base, m)
    }

    pub fn coset_equal(&self, m: &Word, n: &Word) -> Result<bool, SubmonoidError> {
        let a = self
            .omega_coset(m)
            .ok_or_else(|| SubmonoidError::UndefinedCoset(m.clone()))?;
        let b = self
            .omega_coset(n)
            .ok_or_else(|| SubmonoidError::UndefinedCoset(n.clone()))?;
        Ok(a == b)
    }

    /// Partial right action of `FIM(X)` on cosets.
    pub fn act(&self, vertex: VertexId, m: &Word) -> Option<VertexId> {
        self.graph.trace(vertex, m)
    }

    /// A shortest word reaching each vertex from the base.
    pub fn coset_representatives(&self) -> Vec<Word> {
        self.graph
            .geodesics(self.base)
            .into_iter()
            .map(|p| p.expect("connected").label(&self.graph))
            .collect()
    }

    /// `p ∈ N(H)`: the coset of `p` exists and moving the base there is a
    /// based isomorphism of the coset graph.
    pub fn normalizer_contains(&self, p: &Word) -> bool {
        match self.omega_coset(p) {
            Some(u) => based_isomorphic(&self.graph, self.base, &self.graph, u)
                .expect("coset graphs are connected and deterministic"),
            None => false,
        }
    }

    /// Whether `self` and `other` are conjugate: some vertex of `other`'s
    /// graph makes it based-isomorphic to `self`.
    pub fn conjugate_to(&self, other: &CosetGraph) -> bool {
        other.graph.vertices().any(|u| {
            based_isomorphic(&self.graph, self.base, &other.graph, u)
                .expect("coset graphs are connected and deterministic")
        })
    }

    /// Based isomorphism with `other` at the two bases, i.e. equality of
    /// the submonoids.
    pub fn same_submonoid(&self, other: &CosetGraph) -> bool {
        based_isomorphic(&self.graph, self.base, &other.graph, other.base)
            .expect("coset graphs are connected and deterministic")
    }

    /// Realize `H ≤ L(target, v)` as an immersion of the coset graph.
    pub fn induced_immersion(
        &self,
        target: Arc<LabeledGraph>,
        v: VertexId,
    ) -> Result<ImmersionPair, SubmonoidError> {
        target.require_connected()?;
        target.require_deterministic()?;
        for g in &self.generators {
            if target.trace(v, g) != Some(v) {
                return Err(SubmonoidError::NotCircuit {
                    generator: g.clone(),
                    vertex: target.vertex_name(v).to_string(),
                });
            }
        }
        let f = induced_morphism(&self.graph, self.base, &target, v)?
            .ok_or_else(|| SubmonoidError::NoInducedMorphism(target.vertex_name(v).to_string()))?;
        ImmersionPair::new(f, self.base)
    }

    /// The immersion into the bouquet over the graph's own letters.
    pub fn tautological_immersion(&self) -> ImmersionPair {
        ImmersionPair::over_bouquet(self.graph.clone(), self.base)
            .expect("coset graphs immerse into their bouquet")
    }
}

/// A generating set for the loop monoid at `base`: the idempotent
/// `t t⁻¹` for the geodesic `t` to each leaf of the breadth-first tree, and
/// `t(u) x t(w)⁻¹` for every positive edge `u -x-> w` off the tree.
pub fn loop_generators(g: &LabeledGraph, base: VertexId) -> Vec<Word> {
    let tree = g.bfs_tree(base);
    let paths = g.geodesics(base);
    let word_to = |v: VertexId| paths[v.0].as_ref().expect("connected").label(g);
    let mut is_parent = vec![false; g.vertex_count()];
    let mut tree_edges = vec![false; g.edge_count()];
    for d in tree.iter().flatten().flatten() {
        is_parent[g.dart_source(*d).0] = true;
        tree_edges[d.edge.0] = true;
    }
    let mut gens = Vec::new();
    for v in g.vertices() {
        if v != base && !is_parent[v.0] {
            let t = word_to(v);
            gens.push(t.concat(&t.inverse()));
        }
    }
    for e in g.edge_ids() {
        if !tree_edges[e.0] {
            let edge = g.edge(e);
            let mut w = word_to(edge.src);
            w.push(edge.letter.positive());
            gens.push(w.concat(&word_to(edge.dst).inverse()));
        }
    }
    gens
}

/// An immersion `f: Δ → Γ` of connected graphs with basepoints
/// `ṽ₀ ∈ Δ` and `v₀ = f(ṽ₀) ∈ Γ`; `Γ` is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImmersionPair {
    morphism: GraphMorphism,
    base_up: VertexId,
    base_down: VertexId,
}

impl ImmersionPair {
    pub fn new(morphism: GraphMorphism, base_up: VertexId) -> Result<Self, SubmonoidError> {
        morphism.source().require_connected()?;
        morphism.target().require_connected()?;
        morphism.target().require_deterministic()?;
        if base_up.0 >= morphism.source().vertex_count() {
            return Err(GraphError::UnknownVertex(format!("#{}", base_up.0)).into());
        }
        let class = morphism.classify_local();
        if !class.is_immersion() {
            return Err(SubmonoidError::NotImmersion(class));
        }
        let base_down = morphism.map_vertex(base_up);
        Ok(ImmersionPair {
            morphism,
            base_up,
            base_down,
        })
    }

    /// The morphism induced by `base_up ↦ base_down`.
    pub fn induced(
        source: Arc<LabeledGraph>,
        base_up: VertexId,
        target: Arc<LabeledGraph>,
        base_down: VertexId,
    ) -> Result<Self, SubmonoidError> {
        let f = induced_morphism(&source, base_up, &target, base_down)?.ok_or_else(|| {
            SubmonoidError::NoInducedMorphism(target.vertex_name(base_down).to_string())
        })?;
        ImmersionPair::new(f, base_up)
    }

    /// `Δ` over the bouquet on its own letters.
    pub fn over_bouquet(source: Arc<LabeledGraph>, base_up: VertexId) -> Result<Self, SubmonoidError> {
        let bouquet = Arc::new(LabeledGraph::bouquet(source.letters()));
        Self::induced(source, base_up, bouquet, VertexId(0))
    }

    pub fn identity(g: Arc<LabeledGraph>, base: VertexId) -> Result<Self, SubmonoidError> {
        ImmersionPair::new(GraphMorphism::identity(g), base)
    }

    pub fn morphism(&self) -> &GraphMorphism {
        &self.morphism
    }

    pub fn source(&self) -> &Arc<LabeledGraph> {
        self.morphism.source()
    }

    pub fn target(&self) -> &Arc<LabeledGraph> {
        self.morphism.target()
    }

    pub fn base_up(&self) -> VertexId {
        self.base_up
    }

    pub fn base_down(&self) -> VertexId {
        self.base_down
    }

    pub fn local_class(&self) -> LocalClass {
        self.morphism.classify_local()
    }

    /// Same immersion with a different basepoint upstairs.
    pub fn rebased(&self, base_up: VertexId) -> ImmersionPair {
        ImmersionPair {
            morphism: self.morphism.clone(),
            base_up,
            base_down: self.morphism.map_vertex(base_up),
        }
    }

    /// `w ∈ H = f(L(Δ, ṽ₀))`.
    pub fn loop_monoid_contains(&self, w: &Word) -> bool {
        self.source().trace(self.base_up, w) == Some(self.base_up)
    }

    /// The deck transformation sending `ṽ₀` to `u`, if there is one: a
    /// based automorphism of `Δ` commuting with `f`.
    pub fn deck_map_to(&self, u: VertexId) -> Option<GraphMorphism> {
        let f = &self.morphism;
        if f.map_vertex(u) != self.base_down {
            return None;
        }
        let src = self.source();
        if !based_isomorphic(src, self.base_up, src, u).expect("validated source") {
            return None;
        }
        let gamma = induced_morphism(src, self.base_up, src, u)
            .expect("validated source")
            .expect("isomorphism exists");
        let commutes = src.vertices().all(|v| f.map_vertex(gamma.map_vertex(v)) == f.map_vertex(v))
            && src.edge_ids().all(|e| f.map_edge(gamma.map_edge(e)) == f.map_edge(e));
        commutes.then_some(gamma)
    }

    /// `p ∈ N(H, v₀)`: `p` reads a circuit at `v₀`, lifts at `ṽ₀`, and a
    /// deck transformation takes `ṽ₀` to the end of the lift.
    pub fn normalizer_contains(&self, p: &Word) -> bool {
        if self.target().trace(self.base_down, p) != Some(self.base_down) {
            return false;
        }
        let Some(down) = PathWitness::read(self.target(), self.base_down, p) else {
            return false;
        };
        let lift = crate::graph::lift_maximal(&self.morphism, &down, self.base_up)
            .expect("base lies over base");
        if !lift.is_complete() {
            return false;
        }
        self.deck_map_to(lift.lifted.end(self.source())).is_some()
    }

    /// Equivalence of immersions into the same target: some vertex of
    /// `other` over `v₀` carries a based isomorphism from `self` that
    /// commutes with both immersions.
    pub fn equivalent_to(&self, other: &ImmersionPair) -> bool {
        if *self.target() != *other.target() || self.base_down != other.base_down {
            return false;
        }
        other.morphism.fiber(self.base_down).into_iter().any(|u| {
            let (s, t) = (self.source(), other.source());
            if !based_isomorphic(s, self.base_up, t, u).unwrap_or(false) {
                return false;
            }
            let phi = induced_morphism(s, self.base_up, t, u)
                .expect("validated")
                .expect("isomorphic");
            s.vertices()
                .all(|v| other.morphism.map_vertex(phi.map_vertex(v)) == self.morphism.map_vertex(v))
        })
    }
}
