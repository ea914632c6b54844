//! Deck transformations of an immersion `f: Δ → Γ`.
//!
//! Elements are named by the image of the upstairs basepoint `ṽ₀`, which
//! determines a deck transformation completely. [`deck_group`] multiplies by
//! lifting paths; [`brute_force_deck`] enumerates automorphisms directly;
//! [`omega_coset_group`] builds `N(H)/H` from normalizer membership and the
//! coset action. All three agree.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::graph::{
    lift_maximal, natural_cmp, EdgeId, GraphError, GraphMorphism, LabeledGraph, PathWitness,
    VertexId,
};
use crate::submonoid::{CosetGraph, ImmersionPair};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeckError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex `{0}` is not in the domain")]
    NotInDomain(String),
    #[error("domain is not a connected subgraph")]
    BadDomain,
    #[error("path does not start at the basepoint")]
    PathNotFromBase,
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

/// The group of deck transformations, realized on the fiber over `v₀`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeckGroup {
    /// Upstairs basepoint `ṽ₀`.
    pub base: VertexId,
    /// Basepoint images, one per element, in natural id order.
    pub elements: Vec<VertexId>,
    /// Index of the identity in `elements`.
    pub identity: usize,
    /// `table[i][j]` is the index of `elements[i] · elements[j]`
    /// (composition `γᵢ ∘ γⱼ`).
    pub table: Vec<Vec<usize>>,
    /// The automorphism of `Δ` for each element.
    pub witness_maps: Vec<GraphMorphism>,
}

impl DeckGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, v: VertexId) -> Option<usize> {
        self.elements.iter().position(|&x| x == v)
    }

    pub fn product(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn inverse_of(&self, i: usize) -> Option<usize> {
        (0..self.order()).find(|&j| self.table[i][j] == self.identity)
    }

    /// Exhaustive check of the group axioms on the table.
    pub fn is_group_table(&self) -> bool {
        let n = self.order();
        if self.table.len() != n || self.table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return false;
        }
        let e = self.identity;
        let identity_ok = (0..n).all(|i| self.table[e][i] == i && self.table[i][e] == i);
        let inverses_ok = (0..n).all(|i| {
            (0..n).any(|j| self.table[i][j] == e && self.table[j][i] == e)
        });
        let assoc_ok = (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    self.table[self.table[i][j]][k] == self.table[i][self.table[j][k]]
                })
            })
        });
        identity_ok && inverses_ok && assoc_ok
    }

    pub fn element_names<'g>(&self, g: &'g LabeledGraph) -> Vec<&'g str> {
        self.elements.iter().map(|&v| g.vertex_name(v)).collect()
    }
}

fn sort_natural(g: &LabeledGraph, vs: &mut [VertexId]) {
    vs.sort_by(|&a, &b| natural_cmp(g.vertex_name(a), g.vertex_name(b)));
}

/// Vertices over `f(ṽ₀)` that some deck transformation sends `ṽ₀` to.
pub fn deck_fiber(pair: &ImmersionPair) -> Vec<VertexId> {
    let mut fiber: Vec<VertexId> = pair
        .morphism()
        .fiber(pair.base_down())
        .into_iter()
        .filter(|&u| pair.deck_map_to(u).is_some())
        .collect();
    sort_natural(pair.source(), &mut fiber);
    fiber
}

/// Endpoint of the lift at `u` of the projection of `path`, a path from
/// `ṽ₀`. This is `φ_u(ω(path))`.
pub fn deck_product_along(
    pair: &ImmersionPair,
    u: VertexId,
    path: &PathWitness,
) -> Result<VertexId, DeckError> {
    if path.start != pair.base_up() || !path.is_valid(pair.source()) {
        return Err(DeckError::PathNotFromBase);
    }
    let down = pair.morphism().map_path(path);
    let lift = lift_maximal(pair.morphism(), &down, u)?;
    if !lift.is_complete() {
        return Err(DeckError::Internal(format!(
            "path to `{}` does not lift at `{}`",
            pair.source().vertex_name(path.end(pair.source())),
            pair.source().vertex_name(u)
        )));
    }
    Ok(lift.lifted.end(pair.source()))
}

/// `G(Δ) ≅ N(H, v₀)/H`, multiplied by lifting geodesics from `ṽ₀`.
pub fn deck_group(pair: &ImmersionPair) -> Result<DeckGroup, DeckError> {
    let elements = deck_fiber(pair);
    let paths = pair.source().geodesics(pair.base_up());
    let witness_maps = elements
        .iter()
        .map(|&u| pair.deck_map_to(u).expect("fiber elements have deck maps"))
        .collect();
    let index = |v: VertexId| {
        elements.iter().position(|&x| x == v).ok_or_else(|| {
            DeckError::Internal(format!(
                "product `{}` left the deck fiber",
                pair.source().vertex_name(v)
            ))
        })
    };
    let mut table = Vec::with_capacity(elements.len());
    for &u in &elements {
        let mut row = Vec::with_capacity(elements.len());
        for &w in &elements {
            let p = paths[w.0].as_ref().expect("connected source");
            row.push(index(deck_product_along(pair, u, p)?)?);
        }
        table.push(row);
    }
    Ok(DeckGroup {
        base: pair.base_up(),
        identity: index(pair.base_up())?,
        elements,
        table,
        witness_maps,
    })
}

/// Enumerate deck transformations by trying every vertex of `Δ` as the
/// image of `ṽ₀`, propagating along labels and keeping the bijections
/// that commute with `f`. Products are compositions of vertex maps.
pub fn brute_force_deck(pair: &ImmersionPair) -> Result<DeckGroup, DeckError> {
    let src = pair.source();
    let f = pair.morphism();
    let mut found: Vec<(VertexId, GraphMorphism)> = Vec::new();
    for x in src.vertices() {
        let Some(map) = crate::graph::morphism_propagate(src, pair.base_up(), src, x) else {
            continue;
        };
        let Some(vmap) = map.into_iter().collect::<Option<Vec<VertexId>>>() else {
            continue;
        };
        let distinct: BTreeSet<VertexId> = vmap.iter().copied().collect();
        if distinct.len() != src.vertex_count() {
            continue;
        }
        let Ok(gamma) = GraphMorphism::new(src.clone(), src.clone(), vmap) else {
            continue;
        };
        let edges: BTreeSet<EdgeId> = gamma.edge_map().iter().copied().collect();
        if edges.len() != src.edge_count() {
            continue;
        }
        let commutes = src.vertices().all(|v| f.map_vertex(gamma.map_vertex(v)) == f.map_vertex(v))
            && src.edge_ids().all(|e| f.map_edge(gamma.map_edge(e)) == f.map_edge(e));
        if commutes {
            found.push((x, gamma));
        }
    }
    found.sort_by(|a, b| natural_cmp(src.vertex_name(a.0), src.vertex_name(b.0)));
    let elements: Vec<VertexId> = found.iter().map(|(x, _)| *x).collect();
    let index = |v: VertexId| {
        elements
            .iter()
            .position(|&x| x == v)
            .ok_or_else(|| DeckError::Internal("composition is not a deck map".into()))
    };
    let mut table = Vec::with_capacity(found.len());
    for (_, gi) in &found {
        let mut row = Vec::with_capacity(found.len());
        for (xj, _) in &found {
            row.push(index(gi.map_vertex(*xj))?);
        }
        table.push(row);
    }
    Ok(DeckGroup {
        base: pair.base_up(),
        identity: index(pair.base_up())?,
        table,
        witness_maps: found.into_iter().map(|(_, g)| g).collect(),
        elements,
    })
}

/// `N(H)/H` for a coset graph, with a representative word for each coset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetGroup {
    pub group: DeckGroup,
    pub representatives: Vec<Word>,
}

impl CosetGroup {
    /// `H` for the identity coset, `(Hw)^ω` otherwise.
    pub fn names(&self) -> Vec<String> {
        self.representatives
            .iter()
            .map(|w| {
                if w.is_empty() {
                    "H".to_string()
                } else {
                    format!("(H{w})^ω")
                }
            })
            .collect()
    }
}

/// The group of ω-cosets `(Hp)^ω` with `p ∈ N(H)`, multiplied by
/// `(Hp)^ω · (Hq)^ω = (Hpq)^ω`.
pub fn omega_coset_group(h: &CosetGraph) -> Result<CosetGroup, DeckError> {
    let reps = h.coset_representatives();
    let g = h.graph();
    let mut elements: Vec<VertexId> = g
        .vertices()
        .filter(|&u| h.normalizer_contains(&reps[u.0]))
        .collect();
    sort_natural(g, &mut elements);
    let index = |v: Option<VertexId>| {
        v.and_then(|v| elements.iter().position(|&x| x == v))
            .ok_or_else(|| DeckError::Internal("N(H) is not closed under products".into()))
    };
    let mut table = Vec::with_capacity(elements.len());
    for &u in &elements {
        let p = &reps[u.0];
        let mut row = Vec::with_capacity(elements.len());
        for &w in &elements {
            row.push(index(h.omega_coset(&p.concat(&reps[w.0])))?);
        }
        table.push(row);
    }
    let pair = h.tautological_immersion();
    let witness_maps = elements
        .iter()
        .map(|&u| {
            pair.deck_map_to(u)
                .ok_or_else(|| DeckError::Internal("normalizer coset without deck map".into()))
        })
        .collect::<Result<_, _>>()?;
    Ok(CosetGroup {
        representatives: elements.iter().map(|u| reps[u.0].clone()).collect(),
        group: DeckGroup {
            base: h.base(),
            identity: index(Some(h.base()))?,
            elements,
            table,
            witness_maps,
        },
    })
}

/// A subgraph of `Δ`: vertex and positive-edge subsets.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Subgraph {
    pub vertices: BTreeSet<VertexId>,
    pub edges: BTreeSet<EdgeId>,
}

impl Subgraph {
    pub fn whole(g: &LabeledGraph) -> Self {
        Subgraph {
            vertices: g.vertices().collect(),
            edges: g.edge_ids().collect(),
        }
    }

    pub fn single(v: VertexId) -> Self {
        Subgraph {
            vertices: BTreeSet::from([v]),
            edges: BTreeSet::new(),
        }
    }

    /// Vertices within `radius` steps of `center`, with all edges among them.
    pub fn ball(g: &LabeledGraph, center: VertexId, radius: usize) -> Self {
        let mut dist = vec![usize::MAX; g.vertex_count()];
        dist[center.0] = 0;
        let mut queue = VecDeque::from([center]);
        while let Some(v) = queue.pop_front() {
            if dist[v.0] == radius {
                continue;
            }
            for &d in g.star(v) {
                let t = g.dart_target(d);
                if dist[t.0] == usize::MAX {
                    dist[t.0] = dist[v.0] + 1;
                    queue.push_back(t);
                }
            }
        }
        let vertices: BTreeSet<VertexId> = g.vertices().filter(|v| dist[v.0] != usize::MAX).collect();
        let edges = g
            .edge_ids()
            .filter(|&e| vertices.contains(&g.edge(e).src) && vertices.contains(&g.edge(e).dst))
            .collect();
        Subgraph { vertices, edges }
    }

    pub fn is_subgraph_of(&self, g: &LabeledGraph) -> bool {
        self.vertices.iter().all(|v| v.0 < g.vertex_count())
            && self.edges.iter().all(|&e| {
                e.0 < g.edge_count()
                    && self.vertices.contains(&g.edge(e).src)
                    && self.vertices.contains(&g.edge(e).dst)
            })
    }

    pub fn is_connected(&self, g: &LabeledGraph) -> bool {
        let Some(&start) = self.vertices.iter().next() else {
            return true;
        };
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &d in g.star(v) {
                if self.edges.contains(&d.edge) {
                    let t = g.dart_target(d);
                    if seen.insert(t) {
                        queue.push_back(t);
                    }
                }
            }
        }
        seen.len() == self.vertices.len()
    }

    pub fn intersection(&self, other: &Subgraph) -> Subgraph {
        Subgraph {
            vertices: self.vertices.intersection(&other.vertices).copied().collect(),
            edges: self.edges.intersection(&other.edges).copied().collect(),
        }
    }
}

/// A label-preserving isomorphism between two subgraphs of `Δ` that
/// respects `f`. The empty map is the zero of the inverse monoid.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PartialIso {
    pub vertex_map: BTreeMap<VertexId, VertexId>,
    pub edge_map: BTreeMap<EdgeId, EdgeId>,
}

impl PartialIso {
    pub fn domain(&self) -> Subgraph {
        Subgraph {
            vertices: self.vertex_map.keys().copied().collect(),
            edges: self.edge_map.keys().copied().collect(),
        }
    }

    pub fn range(&self) -> Subgraph {
        Subgraph {
            vertices: self.vertex_map.values().copied().collect(),
            edges: self.edge_map.values().copied().collect(),
        }
    }

    pub fn inverse(&self) -> PartialIso {
        PartialIso {
            vertex_map: self.vertex_map.iter().map(|(&a, &b)| (b, a)).collect(),
            edge_map: self.edge_map.iter().map(|(&a, &b)| (b, a)).collect(),
        }
    }

    /// `later ∘ self`, defined on `self⁻¹(range(self) ∩ domain(later))`.
    pub fn then(&self, later: &PartialIso) -> PartialIso {
        PartialIso {
            vertex_map: self
                .vertex_map
                .iter()
                .filter_map(|(&a, b)| later.vertex_map.get(b).map(|&c| (a, c)))
                .collect(),
            edge_map: self
                .edge_map
                .iter()
                .filter_map(|(&a, b)| later.edge_map.get(b).map(|&c| (a, c)))
                .collect(),
        }
    }

    /// Whether this is a partial isomorphism of `pair`'s upstairs graph:
    /// injective on vertices and edges, incidence- and label-preserving,
    /// defined on a subgraph, and commuting with `f`.
    pub fn is_valid_for(&self, pair: &ImmersionPair) -> bool {
        let g = pair.source();
        let f = pair.morphism();
        if !self.domain().is_subgraph_of(g) || !self.range().is_subgraph_of(g) {
            return false;
        }
        let injective = self.range().vertices.len() == self.vertex_map.len()
            && self.range().edges.len() == self.edge_map.len();
        injective
            && self.edge_map.iter().all(|(&e, &e2)| {
                let (a, b) = (g.edge(e), g.edge(e2));
                a.letter == b.letter
                    && self.vertex_map.get(&a.src) == Some(&b.src)
                    && self.vertex_map.get(&a.dst) == Some(&b.dst)
                    && f.map_edge(e) == f.map_edge(e2)
            })
            && self
                .vertex_map
                .iter()
                .all(|(&v, &v2)| f.map_vertex(v) == f.map_vertex(v2))
    }
}

/// The partial isomorphism defined on `dom` sending `v1 ↦ v2`, if one
/// exists.
pub fn partial_iso(
    pair: &ImmersionPair,
    v1: VertexId,
    v2: VertexId,
    dom: &Subgraph,
) -> Result<Option<PartialIso>, DeckError> {
    let g = pair.source();
    if !dom.vertices.contains(&v1) {
        return Err(DeckError::NotInDomain(g.vertex_name(v1).to_string()));
    }
    if !dom.is_subgraph_of(g) || !dom.is_connected(g) {
        return Err(DeckError::BadDomain);
    }
    let f = pair.morphism();
    let mut iso = PartialIso::default();
    iso.vertex_map.insert(v1, v2);
    let mut queue = VecDeque::from([v1]);
    while let Some(x) = queue.pop_front() {
        let y = iso.vertex_map[&x];
        for &d in g.star(x) {
            if !dom.edges.contains(&d.edge) {
                continue;
            }
            let Some(d2) = g.dart_with_label(y, g.dart_label(d)) else {
                return Ok(None);
            };
            iso.edge_map.insert(d.edge, d2.edge);
            let (t, t2) = (g.dart_target(d), g.dart_target(d2));
            match iso.vertex_map.get(&t) {
                None => {
                    iso.vertex_map.insert(t, t2);
                    queue.push_back(t);
                }
                Some(&prev) if prev != t2 => return Ok(None),
                Some(_) => {}
            }
        }
    }
    let injective = iso.range().vertices.len() == iso.vertex_map.len();
    let commutes = iso
        .vertex_map
        .iter()
        .all(|(&a, &b)| f.map_vertex(a) == f.map_vertex(b));
    Ok((injective && commutes).then_some(iso))
}
