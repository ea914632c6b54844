//! Label-preserving graph morphisms, star classification and path lifting.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use super::{Dart, EdgeId, GraphError, LabeledGraph, PathWitness, VertexId};

/// Local behaviour of a morphism on stars.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LocalClass {
    NotImmersion,
    Immersion,
    Cover,
}

impl LocalClass {
    pub fn is_immersion(self) -> bool {
        self != LocalClass::NotImmersion
    }

    pub fn as_str(self) -> &'static str {
        match self {
            LocalClass::NotImmersion => "not_immersion",
            LocalClass::Immersion => "immersion",
            LocalClass::Cover => "cover",
        }
    }
}

impl fmt::Display for LocalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A morphism of labeled graphs, determined by its vertex map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphMorphism {
    source: Arc<LabeledGraph>,
    target: Arc<LabeledGraph>,
    vertex_map: Vec<VertexId>,
    edge_map: Vec<EdgeId>,
}

impl GraphMorphism {
    /// Build a morphism from a total vertex map. Every source edge must have
    /// a target edge with the image endpoints and the same letter.
    pub fn new(
        source: Arc<LabeledGraph>,
        target: Arc<LabeledGraph>,
        vertex_map: Vec<VertexId>,
    ) -> Result<Self, GraphError> {
        if vertex_map.len() != source.vertex_count() {
            return Err(GraphError::InvalidMorphism(format!(
                "vertex map has {} entries for {} vertices",
                vertex_map.len(),
                source.vertex_count()
            )));
        }
        if let Some(v) = vertex_map.iter().find(|v| v.0 >= target.vertex_count()) {
            return Err(GraphError::InvalidMorphism(format!(
                "image #{} is not a target vertex",
                v.0
            )));
        }
        let edge_map = induced_edge_map(&source, &target, &vertex_map)?;
        Ok(GraphMorphism {
            source,
            target,
            vertex_map,
            edge_map,
        })
    }

    pub fn identity(g: Arc<LabeledGraph>) -> Self {
        let vertex_map = g.vertices().collect();
        let edge_map = g.edge_ids().collect();
        GraphMorphism {
            source: g.clone(),
            target: g,
            vertex_map,
            edge_map,
        }
    }

    pub fn source(&self) -> &Arc<LabeledGraph> {
        &self.source
    }

    pub fn target(&self) -> &Arc<LabeledGraph> {
        &self.target
    }

    pub fn vertex_map(&self) -> &[VertexId] {
        &self.vertex_map
    }

    pub fn edge_map(&self) -> &[EdgeId] {
        &self.edge_map
    }

    pub fn map_vertex(&self, v: VertexId) -> VertexId {
        self.vertex_map[v.0]
    }

    pub fn map_edge(&self, e: EdgeId) -> EdgeId {
        self.edge_map[e.0]
    }

    pub fn map_dart(&self, d: Dart) -> Dart {
        Dart {
            edge: self.edge_map[d.edge.0],
            forward: d.forward,
        }
    }

    pub fn map_path(&self, p: &PathWitness) -> PathWitness {
        PathWitness::new(
            self.map_vertex(p.start),
            p.steps.iter().map(|&d| self.map_dart(d)).collect(),
        )
    }

    /// Vertices of the source lying over `v`, in index order.
    pub fn fiber(&self, v: VertexId) -> Vec<VertexId> {
        self.source
            .vertices()
            .filter(|&u| self.vertex_map[u.0] == v)
            .collect()
    }

    fn star_images(&self, v: VertexId) -> Vec<Dart> {
        let mut images: Vec<Dart> = self
            .source
            .star(v)
            .iter()
            .map(|&d| self.map_dart(d))
            .collect();
        images.sort();
        images
    }

    pub fn star_is_injective(&self, v: VertexId) -> bool {
        self.star_images(v).windows(2).all(|w| w[0] != w[1])
    }

    pub fn star_is_bijective(&self, v: VertexId) -> bool {
        self.star_is_injective(v)
            && self.source.star(v).len() == self.target.star(self.map_vertex(v)).len()
    }

    pub fn classify_local(&self) -> LocalClass {
        let mut class = LocalClass::Cover;
        for v in self.source.vertices() {
            if !self.star_is_injective(v) {
                return LocalClass::NotImmersion;
            }
            if !self.star_is_bijective(v) {
                class = LocalClass::Immersion;
            }
        }
        class
    }

    /// `self ∘ other`.
    pub fn compose_after(&self, other: &GraphMorphism) -> Result<GraphMorphism, GraphError> {
        if !Arc::ptr_eq(&other.target, &self.source) && *other.target != *self.source {
            return Err(GraphError::InvalidMorphism(
                "composed morphisms do not share a graph".into(),
            ));
        }
        Ok(GraphMorphism {
            source: other.source.clone(),
            target: self.target.clone(),
            vertex_map: other.vertex_map.iter().map(|&v| self.map_vertex(v)).collect(),
            edge_map: other.edge_map.iter().map(|&e| self.map_edge(e)).collect(),
        })
    }

    /// Vertex and edge maps agree pointwise.
    pub fn agrees_with(&self, other: &GraphMorphism) -> bool {
        self.vertex_map == other.vertex_map && self.edge_map == other.edge_map
    }
}

pub(crate) fn induced_edge_map(
    source: &LabeledGraph,
    target: &LabeledGraph,
    vertex_map: &[VertexId],
) -> Result<Vec<EdgeId>, GraphError> {
    source
        .edges()
        .iter()
        .map(|e| {
            let (s, d) = (vertex_map[e.src.0], vertex_map[e.dst.0]);
            target
                .star(s)
                .iter()
                .find(|&&t| {
                    t.forward
                        && target.edge(t.edge).letter == e.letter
                        && target.dart_target(t) == d
                })
                .map(|t| t.edge)
                .ok_or_else(|| {
                    GraphError::InvalidMorphism(format!(
                        "edge `{}` has no image {} -{}-> {}",
                        e.name,
                        target.vertex_name(s),
                        e.letter,
                        target.vertex_name(d)
                    ))
                })
        })
        .collect()
}

/// Breadth-first propagation of `v ↦ v2` along labels. `None` if some
/// label cannot be read in `g2` or two routes disagree; vertices of `g`
/// not reachable from `v` stay unmapped (`None` entries).
pub(crate) fn propagate(
    g: &LabeledGraph,
    v: VertexId,
    g2: &LabeledGraph,
    v2: VertexId,
) -> Option<Vec<Option<VertexId>>> {
    let mut map = vec![None; g.vertex_count()];
    map[v.0] = Some(v2);
    let mut queue = VecDeque::from([v]);
    while let Some(u) = queue.pop_front() {
        let image = map[u.0].expect("queued vertices are mapped");
        for &d in g.star(u) {
            let t = g.dart_target(d);
            let t2 = g2.step(image, g.dart_label(d))?;
            match map[t.0] {
                None => {
                    map[t.0] = Some(t2);
                    queue.push_back(t);
                }
                Some(prev) if prev != t2 => return None,
                Some(_) => {}
            }
        }
    }
    Some(map)
}

/// Total vertex map of the unique morphism `(g, v) → (g2, v2)`, if any.
pub(crate) fn induced_vertex_map(
    g: &LabeledGraph,
    v: VertexId,
    g2: &LabeledGraph,
    v2: VertexId,
) -> Result<Option<Vec<VertexId>>, GraphError> {
    g.require_connected()?;
    g2.require_deterministic()?;
    Ok(propagate(g, v, g2, v2).map(|m| m.into_iter().map(|x| x.expect("connected")).collect()))
}

/// The unique label-preserving morphism sending `v` to `v2`.
pub fn induced_morphism(
    g: &Arc<LabeledGraph>,
    v: VertexId,
    g2: &Arc<LabeledGraph>,
    v2: VertexId,
) -> Result<Option<GraphMorphism>, GraphError> {
    match induced_vertex_map(g, v, g2, v2)? {
        None => Ok(None),
        Some(vm) => GraphMorphism::new(g.clone(), g2.clone(), vm).map(Some),
    }
}

/// Whether `(g, v)` and `(g2, v2)` are isomorphic as pointed labeled graphs.
pub fn based_isomorphic(
    g: &LabeledGraph,
    v: VertexId,
    g2: &LabeledGraph,
    v2: VertexId,
) -> Result<bool, GraphError> {
    for side in [g, g2] {
        side.require_connected()?;
        side.require_deterministic()?;
    }
    if g.vertex_count() != g2.vertex_count() || g.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    let Some(there) = induced_vertex_map(g, v, g2, v2)? else {
        return Ok(false);
    };
    let Some(back) = induced_vertex_map(g2, v2, g, v)? else {
        return Ok(false);
    };
    let vertices_ok = g.vertices().all(|x| back[there[x.0].0] == x)
        && g2.vertices().all(|y| there[back[y.0].0] == y);
    if !vertices_ok {
        return Ok(false);
    }
    let e_there = induced_edge_map(g, g2, &there)?;
    let e_back = induced_edge_map(g2, g, &back)?;
    Ok(g.edge_ids().all(|e| e_back[e_there[e.0].0] == e)
        && g2.edge_ids().all(|e| e_there[e_back[e.0].0] == e))
}

/// Result of lifting a target path through a morphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftOutcome {
    /// Lift of the longest liftable initial segment, in the source.
    pub lifted: PathWitness,
    /// The part of the target path that could not be lifted.
    pub rest: PathWitness,
}

impl LiftOutcome {
    pub fn is_complete(&self) -> bool {
        self.rest.is_empty()
    }
}

/// Lift the maximal initial segment of `p` starting at `start`. For an
/// immersion the lift is unique.
pub fn lift_maximal(
    f: &GraphMorphism,
    p: &PathWitness,
    start: VertexId,
) -> Result<LiftOutcome, GraphError> {
    if f.map_vertex(start) != p.start {
        return Err(GraphError::NotOverPathStart(
            f.source().vertex_name(start).to_string(),
        ));
    }
    let source = f.source();
    let target = f.target();
    let mut cur = start;
    let mut lifted = Vec::new();
    for (i, &step) in p.steps.iter().enumerate() {
        let found = source
            .star(cur)
            .iter()
            .copied()
            .find(|&d| f.map_dart(d) == step);
        match found {
            Some(d) => {
                lifted.push(d);
                cur = source.dart_target(d);
            }
            None => {
                let rest_start = if i == 0 {
                    p.start
                } else {
                    target.dart_target(p.steps[i - 1])
                };
                return Ok(LiftOutcome {
                    lifted: PathWitness::new(start, lifted),
                    rest: PathWitness::new(rest_start, p.steps[i..].to_vec()),
                });
            }
        }
    }
    Ok(LiftOutcome {
        lifted: PathWitness::new(start, lifted),
        rest: PathWitness::empty(p.end(target)),
    })
}
