//! Test-only oracles and random generators.
//!
//! The oracles work on plain strings and edge lists and share no code with
//! the library beyond reading a graph's vertex names and edges.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::Arc;

use immersion::{LabeledGraph, Letter, VertexId, Word};
use rand::rngs::StdRng;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

fn inverse_char(c: char) -> char {
    if c.is_ascii_lowercase() {
        c.to_ascii_uppercase()
    } else {
        c.to_ascii_lowercase()
    }
}

fn chars(s: &str) -> Vec<char> {
    if s == "1" {
        Vec::new()
    } else {
        s.chars().collect()
    }
}

fn show(cs: &[char]) -> String {
    if cs.is_empty() {
        "1".to_string()
    } else {
        cs.iter().collect()
    }
}

pub fn word(s: &str) -> Word {
    s.parse().expect("valid word")
}

/// Free reduction on strings.
pub fn free_reduce(s: &str) -> String {
    let mut stack: Vec<char> = Vec::new();
    for c in chars(s) {
        if stack.last() == Some(&inverse_char(c)) {
            stack.pop();
        } else {
            stack.push(c);
        }
    }
    show(&stack)
}

pub fn inverse_string(s: &str) -> String {
    let mut cs: Vec<char> = chars(s).into_iter().map(inverse_char).collect();
    cs.reverse();
    show(&cs)
}

pub fn concat(a: &str, b: &str) -> String {
    let mut cs = chars(a);
    cs.extend(chars(b));
    show(&cs)
}

/// Munn tree by the reduced-prefix description: the reduced forms of all
/// prefixes, and the reduced form of the whole word.
pub fn prefix_tree(s: &str) -> (BTreeSet<String>, String) {
    let cs = chars(s);
    let tree = (0..=cs.len()).map(|i| free_reduce(&show(&cs[..i]))).collect();
    (tree, free_reduce(s))
}

pub fn oracle_fim_equal(u: &str, v: &str) -> bool {
    prefix_tree(u) == prefix_tree(v)
}

/// `u ≤ v` straight from the definition `u = u u⁻¹ v`.
pub fn oracle_nat_leq(u: &str, v: &str) -> bool {
    let rhs = concat(&concat(u, &inverse_string(u)), v);
    oracle_fim_equal(u, &rhs)
}

pub fn is_dyck_string(s: &str) -> bool {
    free_reduce(s) == "1"
}

pub fn random_word(rng: &mut StdRng, letters: &[char], max_len: usize) -> String {
    let len = rng.random_range(0..=max_len);
    let cs: Vec<char> = (0..len)
        .map(|_| {
            let c = letters[rng.random_range(0..letters.len())];
            if rng.random_bool(0.5) {
                c
            } else {
                c.to_ascii_uppercase()
            }
        })
        .collect();
    show(&cs)
}

/// A random Dyck word of length at most `2 * half`: a random walk out and
/// back in the Cayley tree, with random detours.
pub fn random_dyck(rng: &mut StdRng, letters: &[char], half: usize) -> String {
    let w = random_word(rng, letters, half);
    let mut s = concat(&w, &inverse_string(&w));
    if rng.random_bool(0.5) {
        let inner = random_word(rng, letters, half / 2 + 1);
        let mut cs = chars(&s);
        let at = rng.random_range(0..=cs.len());
        let ins = chars(&concat(&inner, &inverse_string(&inner)));
        cs.splice(at..at, ins);
        s = show(&cs);
    }
    s
}

/// Insert `x x⁻¹` somewhere in `s`.
pub fn insert_backtrack(rng: &mut StdRng, s: &str, letters: &[char]) -> String {
    let mut cs = chars(s);
    let c = letters[rng.random_range(0..letters.len())];
    let c = if rng.random_bool(0.5) { c } else { c.to_ascii_uppercase() };
    let at = rng.random_range(0..=cs.len());
    cs.splice(at..at, [c, inverse_char(c)]);
    show(&cs)
}

/// Rewrites that preserve the element of `FIM(X)`: `x → x x⁻¹ x`, and
/// swapping two adjacent idempotent factors `x x⁻¹ y y⁻¹`.
pub fn equal_rewrite(rng: &mut StdRng, s: &str) -> String {
    let mut cs = chars(s);
    if cs.is_empty() {
        return show(&cs);
    }
    if rng.random_bool(0.5) {
        let i = rng.random_range(0..cs.len());
        let c = cs[i];
        cs.splice(i..=i, [c, inverse_char(c), c]);
    } else {
        let spots: Vec<usize> = (0..cs.len().saturating_sub(3))
            .filter(|&i| cs[i + 1] == inverse_char(cs[i]) && cs[i + 3] == inverse_char(cs[i + 2]))
            .collect();
        if let Some(&i) = spots.choose(rng) {
            cs.swap(i, i + 2);
            cs.swap(i + 1, i + 3);
        } else {
            let i = rng.random_range(0..cs.len());
            let c = cs[i];
            cs.splice(i..=i, [c, inverse_char(c), c]);
        }
    }
    show(&cs)
}

/// A graph as a plain edge list.
#[derive(Debug, Clone)]
pub struct Plain {
    pub names: Vec<String>,
    pub edges: Vec<(usize, char, usize)>,
    adj: Vec<Vec<(char, usize)>>,
}

impl Plain {
    pub fn of(g: &LabeledGraph) -> Self {
        let names: Vec<String> = g.vertices().map(|v| g.vertex_name(v).to_string()).collect();
        let edges: Vec<(usize, char, usize)> = g
            .edges()
            .iter()
            .map(|e| (e.src.0, e.letter.as_char(), e.dst.0))
            .collect();
        let mut adj = vec![Vec::new(); names.len()];
        for &(s, c, d) in &edges {
            adj[s].push((c, d));
            adj[d].push((c.to_ascii_uppercase(), s));
        }
        for a in adj.iter_mut() {
            a.sort();
        }
        Plain { names, edges, adj }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn step(&self, v: usize, c: char) -> Option<usize> {
        self.adj[v].iter().find(|a| a.0 == c).map(|a| a.1)
    }

    pub fn trace(&self, v: usize, s: &str) -> Option<usize> {
        chars(s).into_iter().try_fold(v, |cur, c| self.step(cur, c))
    }

    pub fn out_labels(&self, v: usize) -> Vec<char> {
        self.adj[v].iter().map(|a| a.0).collect()
    }

    pub fn is_deterministic(&self) -> bool {
        (0..self.len()).all(|v| {
            let l = self.out_labels(v);
            l.windows(2).all(|w| w[0] != w[1])
        })
    }

    /// Every label word of a path from `v` of length at most `max_len`,
    /// with its endpoint.
    pub fn paths_from(&self, v: usize, max_len: usize) -> Vec<(String, usize)> {
        let mut out = vec![(String::new(), v)];
        let mut frontier = vec![(String::new(), v)];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for (w, u) in &frontier {
                for c in self.out_labels(*u) {
                    let t = self.step(*u, c).expect("label present");
                    let mut w2 = w.clone();
                    w2.push(c);
                    next.push((w2, t));
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out.into_iter()
            .map(|(w, u)| (if w.is_empty() { "1".into() } else { w }, u))
            .collect()
    }

    pub fn circuits_at(&self, v: usize, max_len: usize) -> Vec<String> {
        self.paths_from(v, max_len)
            .into_iter()
            .filter(|(_, u)| *u == v)
            .map(|(w, _)| w)
            .collect()
    }
}

/// Stallings folding in a random order: pick any clashing pair of edges
/// at random and identify them, until none is left.
pub fn random_order_fold(g: &LabeledGraph, rng: &mut StdRng) -> LabeledGraph {
    let p = Plain::of(g);
    let mut class: Vec<usize> = (0..p.len()).collect();
    let mut edges: Vec<(usize, char, usize)> = p.edges.clone();
    loop {
        let mut clashes = Vec::new();
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let (a, b) = (edges[i], edges[j]);
                if a.1 == b.1 && (a.0 == b.0 || a.2 == b.2) {
                    clashes.push((i, j));
                }
            }
        }
        let Some(&(i, j)) = clashes.choose(rng) else { break };
        let (a, b) = (edges[i], edges[j]);
        let merge = if a.0 == b.0 { (a.2, b.2) } else { (a.0, b.0) };
        let (keep, gone) = (merge.0.min(merge.1), merge.0.max(merge.1));
        for c in class.iter_mut() {
            if *c == gone {
                *c = keep;
            }
        }
        for e in edges.iter_mut() {
            if e.0 == gone {
                e.0 = keep;
            }
            if e.2 == gone {
                e.2 = keep;
            }
        }
        edges.swap_remove(j);
        let mut seen = BTreeSet::new();
        edges.retain(|e| seen.insert(*e));
    }
    let alive: BTreeSet<usize> = class.iter().copied().collect();
    let mut out = LabeledGraph::new();
    let mut id = BTreeMap::new();
    for &v in &alive {
        id.insert(v, out.add_vertex(&format!("x{v}")).unwrap());
    }
    for (k, &(s, c, d)) in edges.iter().enumerate() {
        out.add_edge(&format!("f{k}"), Letter::new(c).unwrap(), id[&s], id[&d])
            .unwrap();
    }
    out
}

/// Based isomorphism from the definition: propagate `b1 ↦ b2` along
/// labels and check that the result is a label-preserving bijection.
pub fn oracle_based_iso(g1: &Plain, b1: usize, g2: &Plain, b2: usize) -> bool {
    if g1.len() != g2.len() || g1.edges.len() != g2.edges.len() {
        return false;
    }
    let mut map: Vec<Option<usize>> = vec![None; g1.len()];
    map[b1] = Some(b2);
    let mut queue = VecDeque::from([b1]);
    while let Some(x) = queue.pop_front() {
        let y = map[x].unwrap();
        if g1.out_labels(x) != g2.out_labels(y) {
            return false;
        }
        for c in g1.out_labels(x) {
            let x2 = g1.step(x, c).unwrap();
            let y2 = g2.step(y, c).unwrap();
            match map[x2] {
                Some(z) if z != y2 => return false,
                Some(_) => {}
                None => {
                    map[x2] = Some(y2);
                    queue.push_back(x2);
                }
            }
        }
    }
    let image: BTreeSet<usize> = map.iter().flatten().copied().collect();
    map.iter().all(|m| m.is_some()) && image.len() == g1.len()
}

/// Vertices `u` with `(g, base) ≅ (g, u)`, by name.
pub fn oracle_deck_images(g: &LabeledGraph, base: VertexId) -> BTreeSet<String> {
    let p = Plain::of(g);
    (0..p.len())
        .filter(|&u| oracle_based_iso(&p, base.0, &p, u))
        .map(|u| p.names[u].clone())
        .collect()
}

/// Walk every label word of length at most `max_len` from `down` in the
/// target, following along from `up` in the source. `false` as soon as a
/// Dyck circuit at `down` fails to be a circuit at `up`.
pub fn dyck_circuits_lift(src: &Plain, up: usize, tgt: &Plain, down: usize, max_len: usize) -> bool {
    fn go(
        src: &Plain,
        up: usize,
        tgt: &Plain,
        down: usize,
        t: usize,
        s: Option<usize>,
        stack: &mut Vec<char>,
        depth: usize,
    ) -> bool {
        if t == down && stack.is_empty() && s != Some(up) {
            return false;
        }
        if depth == 0 {
            return true;
        }
        for c in tgt.out_labels(t) {
            let t2 = tgt.step(t, c).unwrap();
            let s2 = s.and_then(|x| src.step(x, c));
            let popped = stack.last() == Some(&inverse_char(c));
            if popped {
                stack.pop();
            } else {
                stack.push(c);
            }
            let ok = go(src, up, tgt, down, t2, s2, stack, depth - 1);
            if popped {
                stack.push(inverse_char(c));
            } else {
                stack.pop();
            }
            if !ok {
                return false;
            }
        }
        true
    }
    go(src, up, tgt, down, down, Some(up), &mut Vec::new(), max_len)
}

/// Exact normalizer test from the definition, using a generating set:
/// `p ∈ N(H)` iff `pp⁻¹, p⁻¹p ∈ H` and `pgp⁻¹, p⁻¹gp ∈ H` for every
/// generator `g` of `H`.
pub fn oracle_normalizer(p_graph: &Plain, base: usize, gens: &[String], p: &str) -> bool {
    let contains = |w: &str| p_graph.trace(base, w) == Some(base);
    let pi = inverse_string(p);
    if !contains(&concat(p, &pi)) || !contains(&concat(&pi, p)) {
        return false;
    }
    gens.iter().all(|g| {
        let gi = inverse_string(g);
        [g.as_str(), gi.as_str()].iter().all(|h| {
            contains(&concat(&concat(p, h), &pi)) && contains(&concat(&concat(&pi, h), p))
        })
    })
}

/// The bounded form of the definition: conjugates of every circuit word
/// of length at most `max_len` stay in `H`.
pub fn bounded_normalizer(p_graph: &Plain, base: usize, p: &str, max_len: usize) -> bool {
    // reading p·c·p⁻¹ from the base, one factor at a time
    let pi = inverse_string(p);
    let after_p = p_graph.trace(base, p);
    let after_pi = p_graph.trace(base, &pi);
    let reads_home = |start: Option<usize>, c: &str, back: &str| {
        start
            .and_then(|x| p_graph.trace(x, c))
            .and_then(|y| p_graph.trace(y, back))
            == Some(base)
    };
    p_graph.all_circuits(base, max_len, &mut |c| {
        reads_home(after_p, c, &pi) && reads_home(after_pi, c, p)
    })
}

impl Plain {
    /// `check` holds for every circuit word at `v` of length at most
    /// `max_len`, enumerated depth first.
    pub fn all_circuits(&self, v: usize, max_len: usize, check: &mut dyn FnMut(&str) -> bool) -> bool {
        fn go(
            g: &Plain,
            home: usize,
            at: usize,
            buf: &mut String,
            left: usize,
            check: &mut dyn FnMut(&str) -> bool,
        ) -> bool {
            if at == home && !check(if buf.is_empty() { "1" } else { buf }) {
                return false;
            }
            if left == 0 {
                return true;
            }
            for &(c, next) in &g.adj[at] {
                buf.push(c);
                let ok = go(g, home, next, buf, left - 1, check);
                buf.pop();
                if !ok {
                    return false;
                }
            }
            true
        }
        go(self, v, v, &mut String::new(), max_len, check)
    }
}

/// Shape of a random test graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Flower,
    PartialPermutation,
    Permutation,
    Cayley,
}

fn component_of_zero(n: usize, edges: &[(usize, char, usize)]) -> LabeledGraph {
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut order = vec![0];
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        for &(s, _, d) in edges {
            for (a, b) in [(s, d), (d, s)] {
                if a == v && !seen[b] {
                    seen[b] = true;
                    order.push(b);
                }
            }
        }
    }
    let mut g = LabeledGraph::new();
    let mut id = BTreeMap::new();
    for &v in &order {
        id.insert(v, g.add_vertex(&format!("u{}", id.len() + 1)).unwrap());
    }
    for (k, &(s, c, d)) in edges.iter().enumerate() {
        if seen[s] {
            g.add_edge(&format!("d{}", k + 1), Letter::new(c).unwrap(), id[&s], id[&d])
                .unwrap();
        }
    }
    g
}

fn random_permutation_edges(
    rng: &mut StdRng,
    n: usize,
    letters: &[char],
    keep: f64,
) -> Vec<(usize, char, usize)> {
    let mut edges = Vec::new();
    for &c in letters {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        for (s, &d) in perm.iter().enumerate() {
            if keep >= 1.0 || rng.random_bool(keep) {
                edges.push((s, c, d));
            }
        }
    }
    edges
}

fn cayley(rng: &mut StdRng) -> LabeledGraph {
    // products of cyclic groups and the symmetric group on three points
    let pick = rng.random_range(0..4);
    let (n, act): (usize, Box<dyn Fn(usize, char) -> usize>) = match pick {
        0 => {
            let n = rng.random_range(1..=12);
            let k = rng.random_range(0..n);
            (n, Box::new(move |x, c| if c == 'a' { (x + 1) % n } else { (x + k) % n }))
        }
        1 => {
            let (p, q) = (rng.random_range(1..=3), rng.random_range(1..=4));
            (p * q, Box::new(move |x, c| {
                let (i, j) = (x / q, x % q);
                if c == 'a' { ((i + 1) % p) * q + j } else { i * q + (j + 1) % q }
            }))
        }
        2 => {
            // S3 on indices 0..6: x = 3s + r, a rotation r, b reflection s
            (6, Box::new(|x, c| {
                let (s, r) = (x / 3, x % 3);
                if c == 'a' {
                    3 * s + if s == 0 { (r + 1) % 3 } else { (r + 2) % 3 }
                } else {
                    3 * (1 - s) + r
                }
            }))
        }
        _ => {
            // dihedral group of order 2m, a rotation, b reflection
            let m = rng.random_range(2..=6);
            (2 * m, Box::new(move |x, c| {
                let (s, r) = (x / m, x % m);
                if c == 'a' {
                    s * m + if s == 0 { (r + 1) % m } else { (r + m - 1) % m }
                } else {
                    (1 - s) * m + r
                }
            }))
        }
    };
    let mut edges = Vec::new();
    for x in 0..n {
        for c in ['a', 'b'] {
            edges.push((x, c, act(x, c)));
        }
    }
    component_of_zero(n, &edges)
}

/// One random connected deterministic graph over `{a, b}` with at most
/// `max_vertices` vertices, and its basepoint.
pub fn random_graph(rng: &mut StdRng, shape: Shape, max_vertices: usize) -> (LabeledGraph, VertexId) {
    loop {
        let g = match shape {
            Shape::Flower => {
                let k = rng.random_range(1..=3);
                let gens: Vec<Word> = (0..k)
                    .map(|_| word(&random_word(rng, &['a', 'b'], 6)))
                    .collect();
                let h = immersion::CosetGraph::from_generators(&gens);
                return_if_small(h.graph().as_ref().clone(), h.base(), max_vertices)
            }
            Shape::PartialPermutation => {
                let n = rng.random_range(1..=max_vertices);
                let keep = rng.random_range(0.4..0.95);
                let edges = random_permutation_edges(rng, n, &['a', 'b'], keep);
                Some((component_of_zero(n, &edges), VertexId(0)))
            }
            Shape::Permutation => {
                let n = rng.random_range(1..=max_vertices);
                let edges = random_permutation_edges(rng, n, &['a', 'b'], 1.0);
                Some((component_of_zero(n, &edges), VertexId(0)))
            }
            Shape::Cayley => return_if_small(cayley(rng), VertexId(0), max_vertices),
        };
        if let Some(found) = g {
            return found;
        }
    }
}

fn return_if_small(g: LabeledGraph, base: VertexId, max: usize) -> Option<(LabeledGraph, VertexId)> {
    (g.vertex_count() <= max).then_some((g, base))
}

/// A mixed corpus of pointed graphs.
pub fn corpus(seed: u64, count: usize, max_vertices: usize) -> Vec<(Arc<LabeledGraph>, VertexId)> {
    let mut r = rng(seed);
    let shapes = [Shape::Flower, Shape::PartialPermutation, Shape::Permutation, Shape::Cayley];
    (0..count)
        .map(|i| {
            let (g, b) = random_graph(&mut r, shapes[i % shapes.len()], max_vertices);
            (Arc::new(g), b)
        })
        .collect()
}

pub const FIG3: &str = "vertex v1\nvertex v2\nvertex v3\nvertex v4\n\
    edge e1 a v1 v4\nedge e2 a v2 v3\nedge e3 a v3 v2\n\
    edge e4 a v4 v1\nedge e5 b v1 v2\nedge e6 b v4 v3\nbase v1\n";
