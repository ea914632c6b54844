//! The `immersion` command line.
//!
//! Graph inputs are files in the graph format, words are arguments. Every
//! subcommand prints plain text by default; `--json` prints a document with
//! the keys `command`, `result` and `witnesses`.
//!
//! Exit codes: 0 on success, 1 when the input is well formed but violates a
//! precondition (for example a non-deterministic coset graph), 2 for usage
//! and parse errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::cover::{classify_cover, complete_to_cover, missing_lifts, quotient_by_deck};
use crate::deck::{deck_group, omega_coset_group, DeckGroup};
use crate::graph::{
    induced_morphism, natural_cmp, parse_graph, write_graph, GraphFile, LabeledGraph, VertexId,
};
use crate::munn::{fim_equal, munn_element, MunnElement};
use crate::submonoid::{CosetGraph, ImmersionPair};
use crate::word::Word;

/// Outcome of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "immersion", version, about = "Graph immersions, covers and free inverse monoids")]
struct Cli {
    /// Print a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct BaseArg {
    /// Basepoint; defaults to the file's `base` line.
    #[arg(long)]
    base: Option<String>,
}

#[derive(Args, Debug, Clone)]
struct TargetArgs {
    /// Basepoint of the source graph.
    #[arg(long)]
    base: Option<String>,
    /// Target graph; defaults to the bouquet on the source's letters.
    #[arg(long)]
    target: Option<PathBuf>,
    /// Image of the basepoint in the target.
    #[arg(long)]
    target_base: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a graph file and report its basic properties.
    Check { graph: PathBuf },
    /// The morphism induced by sending one basepoint to another.
    Morphism {
        graph: PathBuf,
        #[command(flatten)]
        target: TargetArgs,
    },
    /// Decide whether two words are equal in the free inverse monoid.
    FimEq {
        #[arg(value_parser = parse_word)]
        u: Word,
        #[arg(value_parser = parse_word)]
        v: Word,
    },
    /// Multiply two words in the free inverse monoid.
    FimMul {
        #[arg(value_parser = parse_word)]
        u: Word,
        #[arg(value_parser = parse_word)]
        v: Word,
    },
    /// Print the Munn tree of a word.
    FimTree {
        #[arg(value_parser = parse_word)]
        word: Word,
        /// Also print the tree as a graph file.
        #[arg(long)]
        graph: bool,
    },
    /// Build the coset graph of the submonoid generated by some words.
    CosetGraph {
        #[arg(value_parser = parse_word)]
        generators: Vec<Word>,
    },
    /// Membership of a word in the submonoid of a coset graph.
    Member {
        graph: PathBuf,
        #[arg(value_parser = parse_word)]
        word: Word,
        #[command(flatten)]
        base: BaseArg,
    },
    /// The ω-coset of a word.
    Coset {
        graph: PathBuf,
        #[arg(value_parser = parse_word)]
        word: Word,
        #[command(flatten)]
        base: BaseArg,
    },
    /// Membership of a word in the normalizer.
    Normalizer {
        graph: PathBuf,
        #[arg(value_parser = parse_word)]
        word: Word,
        #[command(flatten)]
        base: BaseArg,
    },
    /// Whether two coset graphs give conjugate submonoids.
    Conjugate { first: PathBuf, second: PathBuf },
    /// The deck transformation group of an immersion.
    Deck {
        graph: PathBuf,
        #[command(flatten)]
        target: TargetArgs,
    },
    /// The group of ω-cosets of normalizer elements.
    CosetGroup {
        graph: PathBuf,
        #[command(flatten)]
        base: BaseArg,
    },
    /// Classify an immersion as an immersion, cover, normal or universal cover.
    CoverClass {
        graph: PathBuf,
        #[command(flatten)]
        target: TargetArgs,
    },
    /// Complete an immersion towards a cover, up to a depth.
    Complete {
        graph: PathBuf,
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long)]
        depth: usize,
    },
    /// The quotient by the deck group.
    Quotient {
        graph: PathBuf,
        #[command(flatten)]
        target: TargetArgs,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Check { .. } => "check",
            Command::Morphism { .. } => "morphism",
            Command::FimEq { .. } => "fim-eq",
            Command::FimMul { .. } => "fim-mul",
            Command::FimTree { .. } => "fim-tree",
            Command::CosetGraph { .. } => "coset-graph",
            Command::Member { .. } => "member",
            Command::Coset { .. } => "coset",
            Command::Normalizer { .. } => "normalizer",
            Command::Conjugate { .. } => "conjugate",
            Command::Deck { .. } => "deck",
            Command::CosetGroup { .. } => "coset-group",
            Command::CoverClass { .. } => "cover-class",
            Command::Complete { .. } => "complete",
            Command::Quotient { .. } => "quotient",
        }
    }
}

fn parse_word(s: &str) -> Result<Word, String> {
    s.parse().map_err(|e| format!("{e}"))
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl Failure {
    fn domain(e: impl std::fmt::Display) -> Self {
        Failure::Domain(e.to_string())
    }
}

struct Report {
    text: String,
    result: Value,
    witnesses: Value,
}

impl Report {
    fn new(text: String, result: Value) -> Self {
        Report {
            text,
            result,
            witnesses: json!([]),
        }
    }

    fn with_witnesses(mut self, witnesses: Value) -> Self {
        self.witnesses = witnesses;
        self
    }
}

/// Run one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                CommandResult {
                    exit_code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                CommandResult {
                    exit_code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    let name = cli.command.name();
    match dispatch(cli.command) {
        Ok(report) => {
            let stdout = if cli.json {
                let doc = json!({
                    "command": name,
                    "result": report.result,
                    "witnesses": report.witnesses,
                });
                let mut s = serde_json::to_string_pretty(&doc).expect("json values serialize");
                s.push('\n');
                s
            } else {
                report.text
            };
            CommandResult {
                exit_code: 0,
                stdout,
                stderr: String::new(),
            }
        }
        Err(Failure::Usage(msg)) => CommandResult {
            exit_code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Domain(msg)) => CommandResult {
            exit_code: 1,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn dispatch(command: Command) -> Result<Report, Failure> {
    match command {
        Command::Check { graph } => check(&graph),
        Command::Morphism { graph, target } => morphism(&graph, &target),
        Command::FimEq { u, v } => Ok(fim_eq(&u, &v)),
        Command::FimMul { u, v } => Ok(fim_mul(&u, &v)),
        Command::FimTree { word, graph } => Ok(fim_tree(&word, graph)),
        Command::CosetGraph { generators } => Ok(coset_graph(&generators)),
        Command::Member { graph, word, base } => member(&load_coset_graph(&graph, &base)?, &word),
        Command::Coset { graph, word, base } => Ok(coset(&load_coset_graph(&graph, &base)?, &word)),
        Command::Normalizer { graph, word, base } => {
            Ok(normalizer(&load_coset_graph(&graph, &base)?, &word))
        }
        Command::Conjugate { first, second } => {
            let none = BaseArg { base: None };
            Ok(conjugate(
                &load_coset_graph(&first, &none)?,
                &load_coset_graph(&second, &none)?,
            ))
        }
        Command::Deck { graph, target } => deck(&load_pair(&graph, &target)?),
        Command::CosetGroup { graph, base } => coset_group(&load_coset_graph(&graph, &base)?),
        Command::CoverClass { graph, target } => cover_class(&load_pair(&graph, &target)?),
        Command::Complete {
            graph,
            target,
            depth,
        } => complete(&load_pair(&graph, &target)?, depth),
        Command::Quotient { graph, target } => quotient(&load_pair(&graph, &target)?),
    }
}

fn load_file(path: &Path) -> Result<GraphFile, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// `--base`, else the file's base line, else the smallest vertex id.
fn resolve_base(file: &GraphFile, flag: Option<&str>) -> Result<VertexId, Failure> {
    match flag {
        Some(name) => file
            .graph
            .vertex_by_name(name)
            .ok_or_else(|| Failure::Usage(format!("unknown vertex `{name}`"))),
        None => file
            .base
            .or_else(|| file.graph.smallest_vertex())
            .ok_or_else(|| Failure::Domain("graph has no vertices".into())),
    }
}

fn load_coset_graph(path: &Path, base: &BaseArg) -> Result<CosetGraph, Failure> {
    let file = load_file(path)?;
    let b = resolve_base(&file, base.base.as_deref())?;
    CosetGraph::from_pointed(file.graph, b).map_err(Failure::domain)
}

fn load_pair(path: &Path, args: &TargetArgs) -> Result<ImmersionPair, Failure> {
    let file = load_file(path)?;
    let base = resolve_base(&file, args.base.as_deref())?;
    let source = Arc::new(file.graph);
    let pair = match &args.target {
        Some(t) => {
            let tf = load_file(t)?;
            let tb = resolve_base(&tf, args.target_base.as_deref())?;
            ImmersionPair::induced(source, base, Arc::new(tf.graph), tb)
        }
        None => {
            if args.target_base.is_some() {
                return Err(Failure::Usage("--target-base needs --target".into()));
            }
            ImmersionPair::over_bouquet(source, base)
        }
    };
    pair.map_err(Failure::domain)
}

fn names(g: &LabeledGraph, vs: &[VertexId]) -> Vec<String> {
    vs.iter().map(|&v| g.vertex_name(v).to_string()).collect()
}

fn yes(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn check(path: &Path) -> Result<Report, Failure> {
    let file = load_file(path)?;
    let g = &file.graph;
    let connected = g.is_connected();
    let rank = g.fg_rank().ok();
    let tree = g.is_tree().ok();
    let base = file.base.map(|b| g.vertex_name(b).to_string());
    let clash = g.first_nondeterministic_vertex();
    let mut text = String::new();
    let _ = writeln!(text, "vertices {}", g.vertex_count());
    let _ = writeln!(text, "edges {}", g.edge_count());
    let _ = writeln!(text, "deterministic {}", yes(clash.is_none()));
    let _ = writeln!(text, "connected {}", yes(connected));
    if let (Some(tree), Some(rank)) = (tree, rank) {
        let _ = writeln!(text, "tree {}", yes(tree));
        let _ = writeln!(text, "rank {rank}");
    }
    if let Some(b) = &base {
        let _ = writeln!(text, "base {b}");
    }
    let witnesses = match clash {
        Some(v) => json!([{ "nondeterministic_vertex": g.vertex_name(v) }]),
        None => json!([]),
    };
    Ok(Report::new(
        text,
        json!({
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
            "deterministic": clash.is_none(),
            "connected": connected,
            "tree": tree,
            "rank": rank,
            "base": base,
        }),
    )
    .with_witnesses(witnesses))
}

fn morphism(path: &Path, args: &TargetArgs) -> Result<Report, Failure> {
    let file = load_file(path)?;
    let base = resolve_base(&file, args.base.as_deref())?;
    let source = Arc::new(file.graph);
    let (target, tb) = match &args.target {
        Some(t) => {
            let tf = load_file(t)?;
            let tb = resolve_base(&tf, args.target_base.as_deref())?;
            (Arc::new(tf.graph), tb)
        }
        None => (Arc::new(LabeledGraph::bouquet(source.letters())), VertexId(0)),
    };
    let Some(f) = induced_morphism(&source, base, &target, tb).map_err(Failure::domain)? else {
        return Ok(Report::new("none\n".into(), json!({ "exists": false })));
    };
    let class = f.classify_local();
    let mut text = format!("class {class}\n");
    let mut vmap = serde_json::Map::new();
    for v in source.vertices_sorted() {
        let image = target.vertex_name(f.map_vertex(v));
        let _ = writeln!(text, "vertex {} {}", source.vertex_name(v), image);
        vmap.insert(source.vertex_name(v).into(), json!(image));
    }
    let mut emap = serde_json::Map::new();
    for e in source.edges_sorted() {
        let image = &target.edge(f.map_edge(e)).name;
        let _ = writeln!(text, "edge {} {}", source.edge(e).name, image);
        emap.insert(source.edge(e).name.clone(), json!(image));
    }
    let witnesses: Vec<Value> = source
        .vertices_sorted()
        .into_iter()
        .filter(|&v| !f.star_is_injective(v))
        .map(|v| json!({ "noninjective_star": source.vertex_name(v) }))
        .collect();
    Ok(Report::new(
        text,
        json!({
            "exists": true,
            "class": class.as_str(),
            "vertex_map": vmap,
            "edge_map": emap,
        }),
    )
    .with_witnesses(json!(witnesses)))
}

fn tree_strings(m: &MunnElement) -> Vec<String> {
    m.tree().iter().map(|t| t.to_string()).collect()
}

fn munn_json(m: &MunnElement) -> Value {
    json!({ "tree": tree_strings(m), "root": m.root().to_string() })
}

fn fim_eq(u: &Word, v: &Word) -> Report {
    let (mu, mv) = (munn_element(u), munn_element(v));
    let equal = fim_equal(u, v);
    let mut witnesses = Vec::new();
    if !equal {
        for t in mu.tree().iter().filter(|t| !mv.contains_vertex(t)) {
            witnesses.push(json!({ "only_left": t.to_string() }));
        }
        for t in mv.tree().iter().filter(|t| !mu.contains_vertex(t)) {
            witnesses.push(json!({ "only_right": t.to_string() }));
        }
        if mu.root() != mv.root() {
            witnesses.push(json!({
                "roots": [mu.root().to_string(), mv.root().to_string()]
            }));
        }
    }
    let text = if equal { "equal\n" } else { "not equal\n" };
    Report::new(
        text.into(),
        json!({ "equal": equal, "left": munn_json(&mu), "right": munn_json(&mv) }),
    )
    .with_witnesses(json!(witnesses))
}

fn fim_mul(u: &Word, v: &Word) -> Report {
    let m = munn_element(u).mul(&munn_element(v));
    let word = m.to_word();
    let text = format!(
        "tree {}\nroot {}\nword {}\n",
        tree_strings(&m).join(" "),
        m.root(),
        word
    );
    let mut result = munn_json(&m);
    result["word"] = json!(word.to_string());
    Report::new(text, result)
}

fn fim_tree(w: &Word, with_graph: bool) -> Report {
    let m = munn_element(w);
    let mut text = format!("tree {}\nroot {}\n", tree_strings(&m).join(" "), m.root());
    let mut result = munn_json(&m);
    if with_graph {
        let (g, base, _) = m.to_graph();
        let file = write_graph(&g, Some(base), &[]);
        text.push_str(&file);
        result["graph"] = json!(file);
    }
    Report::new(text, result)
}

fn coset_graph(gens: &[Word]) -> Report {
    let h = CosetGraph::from_generators(gens);
    let g = h.graph();
    let file = write_graph(g, Some(h.base()), &[]);
    Report::new(
        file.clone(),
        json!({
            "graph": file,
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
            "base": g.vertex_name(h.base()),
            "generators": gens.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
        }),
    )
}

/// Vertices visited while reading `w` from `v`, as far as it can be read.
fn read_prefix(g: &LabeledGraph, v: VertexId, w: &Word) -> (Vec<VertexId>, usize) {
    let mut visited = vec![v];
    let mut cur = v;
    for (i, &l) in w.labels().iter().enumerate() {
        match g.step(cur, l) {
            Some(next) => {
                cur = next;
                visited.push(cur);
            }
            None => return (visited, i),
        }
    }
    (visited, w.len())
}

fn member(h: &CosetGraph, w: &Word) -> Result<Report, Failure> {
    let g = h.graph();
    let contains = h.contains(w);
    let (visited, read) = read_prefix(g, h.base(), w);
    let witness = if read < w.len() {
        json!({
            "path": names(g, &visited),
            "stuck_after": read,
            "missing_label": w.labels()[read].to_string(),
        })
    } else {
        json!({ "path": names(g, &visited) })
    };
    Ok(Report::new(
        format!("{}\n", yes(contains)),
        json!({ "member": contains }),
    )
    .with_witnesses(json!([witness])))
}

fn coset(h: &CosetGraph, w: &Word) -> Report {
    let g = h.graph();
    let target = h.omega_coset(w).map(|v| g.vertex_name(v).to_string());
    let text = format!("{}\n", target.as_deref().unwrap_or("undefined"));
    Report::new(text, json!({ "coset": target }))
}

fn normalizer(h: &CosetGraph, p: &Word) -> Report {
    let g = h.graph();
    let contains = h.normalizer_contains(p);
    let coset = h.omega_coset(p).map(|v| g.vertex_name(v).to_string());
    Report::new(
        format!("{}\n", yes(contains)),
        json!({ "normalizer": contains, "coset": coset }),
    )
}

fn conjugate(h1: &CosetGraph, h2: &CosetGraph) -> Report {
    let c = h1.conjugate_to(h2);
    let witnesses: Vec<Value> = if c {
        let g1 = h1.graph();
        g1.vertices_sorted()
            .into_iter()
            .filter(|&u| {
                crate::graph::based_isomorphic(g1, u, h2.graph(), h2.base()).unwrap_or(false)
            })
            .map(|u| json!({ "vertex": g1.vertex_name(u) }))
            .collect()
    } else {
        Vec::new()
    };
    Report::new(format!("{}\n", yes(c)), json!({ "conjugate": c }))
        .with_witnesses(json!(witnesses))
}

fn table_text(labels: &[String], group: &DeckGroup) -> String {
    let mut text = String::from("table\n");
    for row in &group.table {
        let cells: Vec<&str> = row.iter().map(|&j| labels[j].as_str()).collect();
        let _ = writeln!(text, "{}", cells.join(" "));
    }
    text
}

fn table_json(labels: &[String], group: &DeckGroup) -> Value {
    json!(group
        .table
        .iter()
        .map(|row| row.iter().map(|&j| labels[j].clone()).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn deck_maps_json(pair: &ImmersionPair, group: &DeckGroup) -> Value {
    let g = pair.source();
    json!(group
        .witness_maps
        .iter()
        .zip(&group.elements)
        .map(|(m, &e)| {
            let mut map = serde_json::Map::new();
            for v in g.vertices_sorted() {
                map.insert(g.vertex_name(v).into(), json!(g.vertex_name(m.map_vertex(v))));
            }
            json!({ "element": g.vertex_name(e), "vertex_map": map })
        })
        .collect::<Vec<_>>())
}

fn deck(pair: &ImmersionPair) -> Result<Report, Failure> {
    let group = deck_group(pair).map_err(Failure::domain)?;
    let g = pair.source();
    let labels = names(g, &group.elements);
    let text = format!(
        "order {}\nelements {}\n{}",
        group.order(),
        labels.join(" "),
        table_text(&labels, &group)
    );
    Ok(Report::new(
        text,
        json!({
            "order": group.order(),
            "base": g.vertex_name(group.base),
            "elements": labels,
            "table": table_json(&labels, &group),
        }),
    )
    .with_witnesses(deck_maps_json(pair, &group)))
}

fn coset_group(h: &CosetGraph) -> Result<Report, Failure> {
    let cg = omega_coset_group(h).map_err(Failure::domain)?;
    let g = h.graph();
    let labels = cg.names();
    let vertices = names(g, &cg.group.elements);
    let text = format!(
        "order {}\nelements {}\ncosets {}\n{}",
        cg.group.order(),
        labels.join(" "),
        vertices.join(" "),
        table_text(&labels, &cg.group)
    );
    let reps: Vec<String> = cg.representatives.iter().map(|w| w.to_string()).collect();
    Ok(Report::new(
        text,
        json!({
            "order": cg.group.order(),
            "elements": labels,
            "cosets": vertices,
            "representatives": reps,
            "table": table_json(&labels, &cg.group),
        }),
    ))
}

fn cover_class(pair: &ImmersionPair) -> Result<Report, Failure> {
    let class = classify_cover(pair).map_err(Failure::domain)?;
    let text = format!(
        "class {}\nfull {}\nnormal {}\nuniversal {}\nsummary {}\n",
        class.local,
        yes(class.full),
        yes(class.normal),
        yes(class.universal),
        class.summary()
    );
    let g = pair.source();
    let witnesses: Vec<Value> = missing_lifts(pair)
        .iter()
        .map(|m| {
            json!({
                "vertex": g.vertex_name(m.vertex),
                "label": m.label.to_string(),
                "idempotent": m.idempotent.to_string(),
            })
        })
        .collect();
    Ok(Report::new(
        text,
        json!({
            "class": class.local.as_str(),
            "full": class.full,
            "normal": class.normal,
            "universal": class.universal,
            "summary": class.summary(),
        }),
    )
    .with_witnesses(json!(witnesses)))
}

fn complete(pair: &ImmersionPair, depth: usize) -> Result<Report, Failure> {
    let cc = complete_to_cover(pair, depth).map_err(Failure::domain)?;
    let file = write_graph(&cc.graph, Some(pair.base_up()), &cc.frontier);
    let mut frontier = names(&cc.graph, &cc.frontier);
    frontier.sort_by(|a, b| natural_cmp(a, b));
    Ok(Report::new(
        file.clone(),
        json!({
            "graph": file,
            "depth": depth,
            "vertices": cc.graph.vertex_count(),
            "edges": cc.graph.edge_count(),
            "frontier": frontier,
        }),
    ))
}

fn quotient(pair: &ImmersionPair) -> Result<Report, Failure> {
    let q = quotient_by_deck(pair).map_err(Failure::domain)?;
    let src = pair.source();
    let base = q.projection.base_down();
    let mut text = write_graph(&q.graph, Some(base), &[]);
    let mut orbits = serde_json::Map::new();
    for (i, members) in q.vertex_orbits.iter().enumerate() {
        let name = q.graph.vertex_name(VertexId(i));
        let members = names(src, members);
        let _ = writeln!(text, "# orbit {name} {}", members.join(" "));
        orbits.insert(name.into(), json!(members));
    }
    let mut edge_orbits = serde_json::Map::new();
    for (i, members) in q.edge_orbits.iter().enumerate() {
        let name = &q.graph.edges()[i].name;
        let members: Vec<&str> = members.iter().map(|&e| src.edge(e).name.as_str()).collect();
        let _ = writeln!(text, "# edge-orbit {name} {}", members.join(" "));
        edge_orbits.insert(name.clone(), json!(members));
    }
    Ok(Report::new(
        text.clone(),
        json!({
            "graph": write_graph(&q.graph, Some(base), &[]),
            "vertices": q.graph.vertex_count(),
            "edges": q.graph.edge_count(),
            "base": q.graph.vertex_name(base),
            "group_order": q.group.order(),
            "orbits": orbits,
            "edge_orbits": edge_orbits,
        }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> CommandResult {
        run(std::iter::once("immersion").chain(args.iter().copied()))
    }

    #[test]
    fn fim_eq_text() {
        let r = run_args(&["fim-eq", "aAbB", "bBaA"]);
        assert_eq!(r.exit_code, 0);
        assert_eq!(r.stdout, "equal\n");
        assert_eq!(run_args(&["fim-eq", "aA", "Aa"]).stdout, "not equal\n");
    }

    #[test]
    fn fim_tree_text() {
        let r = run_args(&["fim-tree", "aAbBbAabB"]);
        assert_eq!(r.stdout, "tree 1 a b bA bb\nroot b\n");
    }

    #[test]
    fn bad_word_is_usage_error() {
        assert_eq!(run_args(&["fim-eq", "a1b", "a"]).exit_code, 2);
        assert_eq!(run_args(&["frobnicate"]).exit_code, 2);
    }

    #[test]
    fn json_envelope() {
        let r = run_args(&["--json", "fim-eq", "ab", "ab"]);
        let v: Value = serde_json::from_str(&r.stdout).unwrap();
        assert_eq!(v["command"], "fim-eq");
        assert_eq!(v["result"]["equal"], true);
        assert!(v["witnesses"].is_array());
    }

    #[test]
    fn coset_graph_output_parses() {
        let r = run_args(&["coset-graph", "baaB", "abAB", "baBa"]);
        let file = parse_graph(&r.stdout).unwrap();
        assert_eq!(file.graph.vertex_count(), 4);
        assert!(file.base.is_some());
    }
}
