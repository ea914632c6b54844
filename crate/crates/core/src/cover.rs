//! Covers: predicates on immersions, quotients by the deck group, and
//! completion of an immersion to a cover by attaching trees.
//!
//! Completions are truncated at a finite depth. Vertices added at the last
//! level form the frontier; every other vertex of a completion has a
//! bijective star, so cover properties of a completion hold up to the
//! frontier.

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::deck::{deck_fiber, deck_group, DeckError, DeckGroup};
use crate::graph::{
    natural_cmp, EdgeId, GraphError, GraphMorphism, LabeledGraph, LocalClass, PathWitness,
    VertexId,
};
use crate::submonoid::{CosetGraph, ImmersionPair, SubmonoidError};
use crate::word::{Label, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Submonoid(#[from] SubmonoidError),
    #[error(transparent)]
    Deck(#[from] DeckError),
    #[error("completion depth must be positive")]
    ZeroDepth,
    #[error("generated id `{0}` clashes with an existing vertex")]
    IdCollision(String),
    #[error("not a deck transformation of the original immersion: {0}")]
    NotDeck(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

/// An incomplete vertex `ṽ` missing the label `x`, with the idempotent
/// `ℓ(p) x x⁻¹ ℓ(p)⁻¹ ∈ L(Γ, v₀)` that does not lift to a circuit at `ṽ₀`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MissingLift {
    pub vertex: VertexId,
    pub label: Label,
    /// Geodesic from `ṽ₀` to `ṽ`.
    pub path: PathWitness,
    pub idempotent: Word,
}

/// Source vertices in breadth-first order from the upstairs base.
fn bfs_order(pair: &ImmersionPair) -> Vec<VertexId> {
    let src = pair.source();
    let mut order = vec![pair.base_up()];
    let mut i = 0;
    let mut seen = vec![false; src.vertex_count()];
    seen[pair.base_up().0] = true;
    while i < order.len() {
        let v = order[i];
        i += 1;
        for &d in src.star(v) {
            let t = src.dart_target(d);
            if !seen[t.0] {
                seen[t.0] = true;
                order.push(t);
            }
        }
    }
    order
}

fn missing_labels(g: &LabeledGraph, v: VertexId, target: &LabeledGraph, image: VertexId) -> Vec<Label> {
    let mut labels: Vec<Label> = target
        .star(image)
        .iter()
        .map(|&d| target.dart_label(d))
        .filter(|&l| g.dart_with_label(v, l).is_none())
        .collect();
    labels.dedup();
    labels
}

/// Every (vertex, label) at which a target edge fails to lift, vertices in
/// breadth-first order from `ṽ₀` and labels in label order.
pub fn missing_lifts(pair: &ImmersionPair) -> Vec<MissingLift> {
    let src = pair.source();
    let target = pair.target();
    let paths = src.geodesics(pair.base_up());
    let mut out = Vec::new();
    for v in bfs_order(pair) {
        let image = pair.morphism().map_vertex(v);
        for label in missing_labels(src, v, target, image) {
            let path = paths[v.0].clone().expect("connected source");
            let p = path.label(src);
            let mut idempotent = p.clone();
            idempotent.push(label);
            idempotent.push(label.inv());
            idempotent = idempotent.concat(&p.inverse());
            out.push(MissingLift {
                vertex: v,
                label,
                path,
                idempotent,
            });
        }
    }
    out
}

/// `None` exactly when `f` is a cover.
pub fn find_missing_lift(pair: &ImmersionPair) -> Option<MissingLift> {
    missing_lifts(pair).into_iter().next()
}

/// `H` is full in `L(Γ, v₀)`, decided as local bijectivity of `f`.
pub fn is_full(pair: &ImmersionPair) -> bool {
    pair.local_class() == LocalClass::Cover
}

/// A coset graph is full in `FIM(X)` when it covers the bouquet on its
/// letters.
pub fn is_full_submonoid(h: &CosetGraph) -> bool {
    is_full(&h.tautological_immersion())
}

/// Normality of a cover, decided twice: deck transitivity on every fiber,
/// and the deck fiber over `v₀` filling `f⁻¹(v₀)`. The two must agree.
pub fn is_normal_cover(pair: &ImmersionPair) -> Result<bool, CoverError> {
    if pair.local_class() != LocalClass::Cover {
        return Ok(false);
    }
    let f = pair.morphism();
    let transitive_everywhere = pair.target().vertices().all(|v| {
        let fiber = f.fiber(v);
        let Some(&first) = fiber.first() else {
            return true;
        };
        let rebased = pair.rebased(first);
        fiber.iter().all(|&x| rebased.deck_map_to(x).is_some())
    });
    let base_fiber_is_deck = deck_fiber(pair).len() == f.fiber(pair.base_down()).len();
    if transitive_everywhere != base_fiber_is_deck {
        return Err(CoverError::Internal(
            "fiberwise transitivity and basepoint deck fiber disagree".into(),
        ));
    }
    Ok(transitive_everywhere)
}

/// A cover whose total graph is a tree.
pub fn is_universal_cover(pair: &ImmersionPair) -> Result<bool, CoverError> {
    Ok(pair.local_class() == LocalClass::Cover && pair.source().is_tree()?)
}

/// One-line classification used by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverClass {
    pub local: LocalClass,
    pub full: bool,
    pub normal: bool,
    pub universal: bool,
}

impl CoverClass {
    pub fn summary(&self) -> &'static str {
        match (self.local, self.universal, self.normal) {
            (LocalClass::NotImmersion, _, _) => "not an immersion",
            (LocalClass::Immersion, _, _) => "immersion",
            (LocalClass::Cover, true, _) => "universal cover",
            (LocalClass::Cover, false, true) => "normal cover",
            (LocalClass::Cover, false, false) => "cover",
        }
    }
}

pub fn classify_cover(pair: &ImmersionPair) -> Result<CoverClass, CoverError> {
    Ok(CoverClass {
        local: pair.local_class(),
        full: is_full(pair),
        normal: is_normal_cover(pair)?,
        universal: is_universal_cover(pair)?,
    })
}

/// A depth-truncated completion `g: Δ̃ → Γ` of an immersion `f: Δ → Γ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletedCover {
    pub original: ImmersionPair,
    pub graph: Arc<LabeledGraph>,
    pub map: GraphMorphism,
    pub depth: usize,
    /// Vertices added at the last level.
    pub frontier: Vec<VertexId>,
    /// Level at which each vertex was added (0 for original vertices).
    pub level: Vec<usize>,
    /// Parent and label of the edge through which each added vertex hangs.
    pub parent: Vec<Option<(VertexId, Label)>>,
}

impl CompletedCover {
    pub fn is_frontier(&self, v: VertexId) -> bool {
        self.level[v.0] == self.depth && self.parent[v.0].is_some()
    }

    /// Every non-frontier vertex has a bijective star under `g`.
    pub fn interior_is_complete(&self) -> bool {
        self.graph
            .vertices()
            .all(|v| self.is_frontier(v) || self.map.star_is_bijective(v))
    }

    /// `Δ ⊆ Δ̃` with the same ids, and `g` restricted to `Δ` equals `f`.
    pub fn restricts_to_original(&self) -> bool {
        let f = self.original.morphism();
        let src = self.original.source();
        src.vertices().all(|v| {
            self.graph
                .vertex_by_name(src.vertex_name(v))
                .is_some_and(|u| self.map.map_vertex(u) == f.map_vertex(v))
        }) && src.edge_ids().all(|e| {
            let edge = src.edge(e);
            self.graph.edge_by_name(&edge.name).is_some_and(|e2| {
                let other = self.graph.edge(e2);
                other.letter == edge.letter
                    && self.graph.vertex_name(other.src) == src.vertex_name(edge.src)
                    && self.graph.vertex_name(other.dst) == src.vertex_name(edge.dst)
                    && self.map.map_edge(e2) == f.map_edge(e)
            })
        })
    }

    /// `g` as an immersion based at the original basepoint.
    pub fn as_immersion(&self) -> ImmersionPair {
        ImmersionPair::new(self.map.clone(), self.original.base_up())
            .expect("completions are immersions")
    }
}

/// Attach, `depth` times, one new edge at every incomplete vertex for every
/// missing label. A new vertex is named `<parent>.<label>` and its edge gets
/// the same id.
pub fn complete_to_cover(pair: &ImmersionPair, depth: usize) -> Result<CompletedCover, CoverError> {
    if depth == 0 {
        return Err(CoverError::ZeroDepth);
    }
    let target = pair.target().clone();
    let mut graph = (**pair.source()).clone();
    let mut images: Vec<VertexId> = pair.morphism().vertex_map().to_vec();
    let mut level = vec![0; graph.vertex_count()];
    let mut parent: Vec<Option<(VertexId, Label)>> = vec![None; graph.vertex_count()];
    for k in 1..=depth {
        let mut additions = Vec::new();
        for v in graph.vertices() {
            if level[v.0] + 1 != k {
                continue;
            }
            for label in missing_labels(&graph, v, &target, images[v.0]) {
                additions.push((v, label));
            }
        }
        if additions.is_empty() {
            break;
        }
        for (v, label) in additions {
            let name = format!("{}.{}", graph.vertex_name(v), label.as_char());
            let new = graph
                .add_vertex(&name)
                .map_err(|_| CoverError::IdCollision(name.clone()))?;
            let (s, d) = if label.is_positive() { (v, new) } else { (new, v) };
            graph
                .add_edge(&name, label.letter, s, d)
                .map_err(|_| CoverError::IdCollision(name.clone()))?;
            images.push(target.step(images[v.0], label).expect("label read at the image"));
            level.push(k);
            parent.push(Some((v, label)));
        }
    }
    let graph = Arc::new(graph);
    let map = GraphMorphism::new(graph.clone(), target, images)?;
    let frontier = graph
        .vertices()
        .filter(|v| level[v.0] == depth && parent[v.0].is_some())
        .collect();
    Ok(CompletedCover {
        original: pair.clone(),
        graph,
        map,
        depth,
        frontier,
        level,
        parent,
    })
}

/// A ball of radius `depth` in the universal cover of `target` around `v`,
/// grown from a single vertex named `1`.
pub fn universal_cover_ball(
    target: Arc<LabeledGraph>,
    v: VertexId,
    depth: usize,
) -> Result<CompletedCover, CoverError> {
    let mut point = LabeledGraph::new();
    point.add_vertex("1")?;
    let point = Arc::new(point);
    let f = GraphMorphism::new(point, target, vec![v])?;
    complete_to_cover(&ImmersionPair::new(f, VertexId(0))?, depth)
}

fn check_deck(pair: &ImmersionPair, gamma: &GraphMorphism) -> Result<(), CoverError> {
    let src = pair.source();
    if **gamma.source() != **src || **gamma.target() != **src {
        return Err(CoverError::NotDeck("maps a different graph".into()));
    }
    let mut seen = vec![false; src.vertex_count()];
    for v in src.vertices() {
        let image = gamma.map_vertex(v);
        if std::mem::replace(&mut seen[image.0], true) {
            return Err(CoverError::NotDeck("not injective".into()));
        }
    }
    let f = pair.morphism();
    let commutes = src.vertices().all(|v| f.map_vertex(gamma.map_vertex(v)) == f.map_vertex(v))
        && src.edge_ids().all(|e| f.map_edge(gamma.map_edge(e)) == f.map_edge(e));
    if !commutes {
        return Err(CoverError::NotDeck("does not commute with the immersion".into()));
    }
    Ok(())
}

/// Extend a deck transformation of the original immersion to the completion
/// by sending the tree path with label `w` from `ṽ` to the path with label
/// `w` from `γ(ṽ)`.
pub fn extend_deck(cc: &CompletedCover, gamma: &GraphMorphism) -> Result<GraphMorphism, CoverError> {
    check_deck(&cc.original, gamma)?;
    let g = &cc.graph;
    let original = cc.original.source();
    let mut ext = Vec::with_capacity(g.vertex_count());
    for v in g.vertices() {
        let image = match cc.parent[v.0] {
            None => {
                let name = original.vertex_name(gamma.map_vertex(
                    original.require_vertex(g.vertex_name(v))?,
                ));
                g.require_vertex(name)?
            }
            Some((p, label)) => {
                let up: VertexId = ext[p.0];
                g.step(up, label).ok_or_else(|| {
                    CoverError::Internal(format!("`{}` has no {label} edge", g.vertex_name(up)))
                })?
            }
        };
        ext.push(image);
    }
    let ext = GraphMorphism::new(g.clone(), g.clone(), ext)?;
    let bijective = {
        let mut seen = vec![false; g.vertex_count()];
        g.vertices().all(|v| !std::mem::replace(&mut seen[ext.map_vertex(v).0], true))
    };
    let frontier_ok = g
        .vertices()
        .all(|v| cc.is_frontier(v) == cc.is_frontier(ext.map_vertex(v)));
    let commutes = g
        .vertices()
        .all(|v| cc.map.map_vertex(ext.map_vertex(v)) == cc.map.map_vertex(v));
    if !(bijective && frontier_ok && commutes) {
        return Err(CoverError::Internal("extension is not a deck map".into()));
    }
    Ok(ext)
}

/// `Δ / G(Δ)` with its projection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub graph: Arc<LabeledGraph>,
    /// The quotient map `Δ → Δ/G`, a normal cover.
    pub projection: ImmersionPair,
    pub group: DeckGroup,
    /// Members of each vertex orbit, indexed by quotient vertex.
    pub vertex_orbits: Vec<Vec<VertexId>>,
    /// Members of each edge orbit, indexed by quotient edge.
    pub edge_orbits: Vec<Vec<EdgeId>>,
}

pub fn quotient_by_deck(pair: &ImmersionPair) -> Result<Quotient, CoverError> {
    let group = deck_group(pair)?;
    let src = pair.source();

    let mut vertex_orbit: Vec<Option<usize>> = vec![None; src.vertex_count()];
    let mut vertex_orbits: Vec<Vec<VertexId>> = Vec::new();
    for v in src.vertices_sorted() {
        if vertex_orbit[v.0].is_some() {
            continue;
        }
        let mut members: Vec<VertexId> = group.witness_maps.iter().map(|g| g.map_vertex(v)).collect();
        members.sort_by(|&a, &b| natural_cmp(src.vertex_name(a), src.vertex_name(b)));
        members.dedup();
        for &m in &members {
            vertex_orbit[m.0] = Some(vertex_orbits.len());
        }
        vertex_orbits.push(members);
    }

    let mut edge_orbit: Vec<Option<usize>> = vec![None; src.edge_count()];
    let mut edge_orbits: Vec<Vec<EdgeId>> = Vec::new();
    for e in src.edges_sorted() {
        if edge_orbit[e.0].is_some() {
            continue;
        }
        let mut members: Vec<EdgeId> = group.witness_maps.iter().map(|g| g.map_edge(e)).collect();
        members.sort_by(|&a, &b| natural_cmp(&src.edge(a).name, &src.edge(b).name));
        members.dedup();
        for &m in &members {
            edge_orbit[m.0] = Some(edge_orbits.len());
        }
        edge_orbits.push(members);
    }

    let mut q = LabeledGraph::new();
    for i in 0..vertex_orbits.len() {
        q.add_vertex(&format!("w{}", i + 1))?;
    }
    let orbit_of = |v: VertexId| VertexId(vertex_orbit[v.0].expect("every vertex has an orbit"));
    for (i, members) in edge_orbits.iter().enumerate() {
        let e = src.edge(members[0]);
        q.add_edge(&format!("e{}", i + 1), e.letter, orbit_of(e.src), orbit_of(e.dst))?;
    }
    if !q.is_deterministic() {
        return Err(CoverError::Internal("deck group does not act freely".into()));
    }
    let q = Arc::new(q);
    let vmap = src.vertices().map(orbit_of).collect();
    let projection = GraphMorphism::new(src.clone(), q.clone(), vmap)?;
    // edge orbits and the induced edge map must coincide
    let by_orbit: BTreeMap<EdgeId, usize> = src
        .edge_ids()
        .map(|e| (e, edge_orbit[e.0].expect("every edge has an orbit")))
        .collect();
    if src.edge_ids().any(|e| projection.map_edge(e).0 != by_orbit[&e]) {
        return Err(CoverError::Internal("edge orbits do not match projection".into()));
    }
    let projection = ImmersionPair::new(projection, pair.base_up())?;
    Ok(Quotient {
        graph: q,
        projection,
        group,
        vertex_orbits,
        edge_orbits,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deck::brute_force_deck;
    use crate::graph::parse_graph;

    const FIG3: &str = "vertex v1\nvertex v2\nvertex v3\nvertex v4\n\
        edge e1 a v1 v4\nedge e2 a v2 v3\nedge e3 a v3 v2\n\
        edge e4 a v4 v1\nedge e5 b v1 v2\nedge e6 b v4 v3\n";

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn fig3_pair() -> ImmersionPair {
        let g = Arc::new(parse_graph(FIG3).unwrap().graph);
        ImmersionPair::over_bouquet(g, VertexId(0)).unwrap()
    }

    fn over_bouquet(text: &str, base: &str) -> ImmersionPair {
        let g = Arc::new(parse_graph(text).unwrap().graph);
        let b = g.vertex_by_name(base).unwrap();
        ImmersionPair::over_bouquet(g, b).unwrap()
    }

    fn cycle_pair(n: usize) -> ImmersionPair {
        CosetGraph::from_generators(&[Word::from_labels(vec![w("a").labels()[0]; n])])
            .tautological_immersion()
    }

    fn names(g: &LabeledGraph, vs: impl IntoIterator<Item = VertexId>) -> Vec<String> {
        vs.into_iter().map(|v| g.vertex_name(v).to_string()).collect()
    }

    #[test]
    fn missing_lift_examples() {
        let g = Arc::new(parse_graph(FIG3).unwrap().graph);
        let id = ImmersionPair::identity(g, VertexId(0)).unwrap();
        assert!(find_missing_lift(&id).is_none());

        let edge = over_bouquet("vertex v\nvertex w\nedge e a v w\n", "v");
        let all = missing_lifts(&edge);
        assert_eq!(all.len(), 2);
        let at_w = all
            .iter()
            .find(|m| edge.source().vertex_name(m.vertex) == "w")
            .unwrap();
        assert_eq!(at_w.label.to_string(), "a");
        assert_eq!(at_w.idempotent, w("aaAA"));
        assert!(!edge.loop_monoid_contains(&at_w.idempotent));

        let pair = fig3_pair();
        let first = find_missing_lift(&pair).unwrap();
        assert_eq!(pair.source().vertex_name(first.vertex), "v1");
        assert_eq!(first.label.to_string(), "B");
        assert_eq!(first.idempotent, w("Bb"));
    }

    #[test]
    fn fullness_examples() {
        let b = Arc::new(LabeledGraph::bouquet([w("a").labels()[0].letter]));
        assert!(is_full(&ImmersionPair::identity(b, VertexId(0)).unwrap()));
        assert!(!is_full(&fig3_pair()));
        assert!(is_full(&cycle_pair(4)));
        assert!(is_full_submonoid(&CosetGraph::from_generators(&[w("aaaa")])));
    }

    #[test]
    fn normal_and_universal_examples() {
        assert!(is_normal_cover(&cycle_pair(4)).unwrap());
        assert!(!is_universal_cover(&cycle_pair(4)).unwrap());
        assert!(!is_normal_cover(&fig3_pair()).unwrap());

        let mut point = LabeledGraph::new();
        point.add_vertex("p").unwrap();
        let point = Arc::new(point);
        let trivial = ImmersionPair::identity(point, VertexId(0)).unwrap();
        assert!(is_universal_cover(&trivial).unwrap());
        assert!(is_normal_cover(&trivial).unwrap());

        let ball = universal_cover_ball(
            Arc::new(LabeledGraph::bouquet([w("a").labels()[0].letter])),
            VertexId(0),
            3,
        )
        .unwrap();
        assert!(ball.graph.is_tree().unwrap());
        assert!(!is_universal_cover(&ball.as_immersion()).unwrap());
        assert!(ball.interior_is_complete());
    }

    #[test]
    fn figure_three_quotient() {
        let q = quotient_by_deck(&fig3_pair()).unwrap();
        let g = &q.graph;
        assert_eq!(g.vertex_count(), 2);
        let summary: Vec<(String, String, String)> = g
            .edges()
            .iter()
            .map(|e| {
                (
                    e.letter.to_string(),
                    g.vertex_name(e.src).to_string(),
                    g.vertex_name(e.dst).to_string(),
                )
            })
            .collect();
        let expect = |l: &str, s: &str, d: &str| (l.to_string(), s.to_string(), d.to_string());
        assert_eq!(
            summary,
            vec![expect("a", "w1", "w1"), expect("a", "w2", "w2"), expect("b", "w1", "w2")]
        );
        let src = q.projection.source();
        assert_eq!(names(src, q.vertex_orbits[0].clone()), ["v1", "v4"]);
        assert_eq!(q.projection.local_class(), LocalClass::Cover);
        assert!(is_normal_cover(&q.projection).unwrap());
        assert_eq!(deck_group(&q.projection).unwrap().order(), 2);
    }

    #[test]
    fn trivial_and_cyclic_quotients() {
        let seg = over_bouquet("vertex v\nvertex w\nedge e a v w\n", "v");
        let q = quotient_by_deck(&seg).unwrap();
        assert_eq!(q.graph.vertex_count(), 2);
        assert_eq!(q.graph.edge_count(), 1);

        let q = quotient_by_deck(&cycle_pair(4)).unwrap();
        assert_eq!(q.graph.vertex_count(), 1);
        assert_eq!(q.graph.edge_count(), 1);
    }

    #[test]
    fn completion_examples() {
        let cover = cycle_pair(4);
        let cc = complete_to_cover(&cover, 2).unwrap();
        assert_eq!(cc.graph.vertex_count(), 4);
        assert!(cc.frontier.is_empty());

        let edge = over_bouquet("vertex v\nvertex w\nedge e a v w\n", "v");
        let cc = complete_to_cover(&edge, 2).unwrap();
        assert_eq!(cc.graph.vertex_count(), 6);
        assert_eq!(cc.graph.edge_count(), 5);
        assert_eq!(names(&cc.graph, cc.frontier.clone()), ["v.A.A", "w.a.a"]);
        assert!(cc.interior_is_complete());
        assert!(cc.restricts_to_original());
        assert!(cc.graph.fg_rank().unwrap() == 0);

        let cc = complete_to_cover(&fig3_pair(), 1).unwrap();
        assert_eq!(cc.graph.vertex_count(), 8);
        assert_eq!(
            names(&cc.graph, cc.frontier.clone()),
            ["v1.B", "v2.b", "v3.b", "v4.B"]
        );
        assert!(cc.frontier.iter().all(|&v| {
            cc.graph.edge(cc.graph.star(v)[0].edge).letter.to_string() == "b"
        }));

        assert_eq!(complete_to_cover(&edge, 0), Err(CoverError::ZeroDepth));
    }

    #[test]
    fn deck_extension_examples() {
        let pair = fig3_pair();
        let group = brute_force_deck(&pair).unwrap();
        let cc1 = complete_to_cover(&pair, 1).unwrap();
        let id = extend_deck(&cc1, &group.witness_maps[group.identity]).unwrap();
        assert!(id.agrees_with(&GraphMorphism::identity(cc1.graph.clone())));

        let swap = extend_deck(&cc1, &group.witness_maps[1]).unwrap();
        let image = |n: &str| {
            cc1.graph
                .vertex_name(swap.map_vertex(cc1.graph.vertex_by_name(n).unwrap()))
                .to_string()
        };
        assert_eq!(image("v1.B"), "v4.B");
        assert_eq!(image("v2.b"), "v3.b");

        let cc2 = complete_to_cover(&pair, 2).unwrap();
        let swap2 = extend_deck(&cc2, &group.witness_maps[1]).unwrap();
        for v in cc1.graph.vertices() {
            let name = cc1.graph.vertex_name(v);
            let u = cc2.graph.vertex_by_name(name).unwrap();
            assert_eq!(cc2.graph.vertex_name(swap2.map_vertex(u)), image(name));
        }
    }

    #[test]
    fn extend_rejects_non_deck_maps() {
        let pair = cycle_pair(3);
        let other = cycle_pair(4);
        let cc = complete_to_cover(&pair, 1).unwrap();
        let foreign = GraphMorphism::identity(other.source().clone());
        assert!(matches!(extend_deck(&cc, &foreign), Err(CoverError::NotDeck(_))));
    }
}
