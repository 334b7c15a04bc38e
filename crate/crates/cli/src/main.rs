//! `gentle-mar`: command-line front end.

mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gentle_mar::bar::{bar_algebra, tilting_check};
use gentle_mar::endo::{endomorphism_presentation, presentation_dot, tensor_algebra};
use gentle_mar::homext::{ar_quiver, ext1_basis, hom_basis};
use gentle_mar::mar::{certificate, complete_to_mar, enumerate_mars, m_inj, m_proj, required_summands, rigidity_witness};
use gentle_mar::oracle::{crosscheck, field_from_env, Field};
use gentle_mar::string_modules::{composition_text, dim_vector, is_projective, projective_dimension, socle, top};
use gentle_mar::strings::{all_strings, detect_bands, enumerate_strings, parse_word};
use gentle_mar::{fixtures, AlgebraPresentation, BoundQuiver, ModuleSet, StringWord};

use render::{module_list, presentation_text, relabel, word_list};

#[derive(Parser)]
#[command(name = "gentle-mar", version, about = "Maximal almost rigid modules over gentle algebras")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Named {
    Mproj,
    Minj,
}

#[derive(Subcommand)]
enum Command {
    /// Check the gentle conditions.
    Validate { algebra: String },
    /// List strings, canonical orientation.
    Strings {
        algebra: String,
        /// Defaults to all strings when the algebra is representation finite.
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Facts about a single string module.
    Module {
        #[command(subcommand)]
        command: ModuleCommand,
    },
    /// Basis of Hom(M(w), M(v)).
    Hom { algebra: String, w: String, v: String },
    /// Basis of Ext^1(M(v), M(w)).
    Ext1 { algebra: String, v: String, w: String },
    /// Auslander-Reiten quiver of a representation finite algebra.
    ArQuiver {
        algebra: String,
        #[arg(long)]
        dot: bool,
    },
    /// Almost rigidity and MAR certificate of a set of strings.
    AlmostRigid { algebra: String, set: PathBuf },
    /// Summands of every MAR module.
    Required { algebra: String },
    /// Projectives with their radical summands and the required summands.
    Mproj { algebra: String },
    /// Injectives with their socle quotients and the required summands.
    Minj { algebra: String },
    /// Extend an almost rigid set to a MAR module.
    Complete {
        algebra: String,
        set: PathBuf,
        #[arg(long)]
        max_len: usize,
    },
    /// All MAR modules with summands of bounded length.
    EnumerateMars {
        algebra: String,
        #[arg(long)]
        max_len: usize,
    },
    /// The subdivided algebra and its vertex and arrow correspondence.
    Bar { algebra: String },
    /// Image of a string under G.
    Gmap { algebra: String, word: String },
    /// Tilting conditions for a set of strings.
    TiltingCheck {
        algebra: String,
        set: PathBuf,
        /// Apply G first and check over the subdivided algebra.
        #[arg(long)]
        via_g: bool,
    },
    /// Quiver with relations of End(T).
    Endo {
        algebra: String,
        set: Option<PathBuf>,
        #[arg(long, value_enum, conflicts_with = "set", required_unless_present = "set")]
        mar: Option<Named>,
        /// Set file listing the summands in the order used to name vertices 1, 2, ...
        #[arg(long)]
        order: Option<PathBuf>,
    },
    /// Tensor algebra of a presentation given as an algebra file.
    Tensor { presentation: String },
    /// Numeric cross-check over a prime field.
    Oracle {
        /// Overrides GENTLE_MAR_PRIME.
        #[arg(long)]
        prime: Option<u64>,
        #[command(subcommand)]
        command: OracleCommand,
    },
}

#[derive(Subcommand)]
enum ModuleCommand {
    Info { algebra: String, word: String },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Compare Hom and Ext^1 dimensions for all pairs of short strings.
    Crosscheck {
        algebra: String,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
    },
}

#[derive(Debug)]
struct Failure {
    kind: &'static str,
    message: String,
}

impl Failure {
    fn new(kind: &'static str, message: impl ToString) -> Failure {
        Failure { kind, message: message.to_string() }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("{}", json!({ "error": f.kind, "message": f.message }));
            ExitCode::from(1)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::new("io", format!("{}: {e}", path.display())))
}

/// A path, or the name of a bundled fixture such as `ex1.json`.
fn load_any(arg: &str) -> Result<BoundQuiver, Failure> {
    let path = Path::new(arg);
    if path.exists() {
        return BoundQuiver::from_json(&read(path)?).map_err(|e| Failure::new("algebra", e));
    }
    fixtures::bundled(arg).ok_or_else(|| Failure::new("io", format!("{arg}: no such file or bundled algebra")))
}

fn load(arg: &str) -> Result<BoundQuiver, Failure> {
    let q = load_any(arg)?;
    if !q.is_gentle() {
        return Err(Failure::new("not_gentle", format!("{arg} is not gentle")));
    }
    Ok(q)
}

fn word(q: &BoundQuiver, text: &str) -> Result<StringWord, Failure> {
    parse_word(q, text).map_err(|e| Failure::new("string", e))
}

fn load_set(q: &BoundQuiver, path: &Path) -> Result<Vec<StringWord>, Failure> {
    let items: Vec<String> = serde_json::from_str(&read(path)?)
        .map_err(|e| Failure::new("set", format!("{}: expected a JSON array of strings: {e}", path.display())))?;
    items.iter().map(|s| word(q, s)).collect()
}

fn module_set(q: &BoundQuiver, path: &Path) -> Result<ModuleSet, Failure> {
    Ok(load_set(q, path)?.into_iter().collect())
}

fn field(prime: Option<u64>) -> Result<Field, Failure> {
    match prime {
        Some(p) => Field::new(p),
        None => field_from_env(),
    }
    .map_err(|e| Failure::new("oracle", e))
}

fn pretty(v: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("json values serialize"))
}

fn no_dot(format: Format) -> Result<(), Failure> {
    if format == Format::Dot {
        return Err(Failure::new("format", "dot output is not available for this command"));
    }
    Ok(())
}

fn run(cli: &Cli) -> Outcome {
    let format = cli.format;
    let json = format == Format::Json;
    match &cli.command {
        Command::Validate { algebra } => {
            no_dot(format)?;
            let q = load_any(algebra)?;
            let r = q.validate_gentle();
            if json {
                return Ok(pretty(&json!({
                    "report": r,
                    "finite_dimensional": q.is_finite_dimensional(),
                    "band": detect_bands(&q).map(|b| b.display(&q)),
                })));
            }
            let mut s = format!("gentle: {}\n", r.gentle);
            for (name, ok) in [("G1", r.g1), ("G2", r.g2), ("G3", r.g3), ("G4", r.g4)] {
                s.push_str(&format!("{name}: {ok}\n"));
            }
            if let Some(w) = &r.witness {
                s.push_str(&format!("witness: {w:?}\n"));
            }
            s.push_str(&format!("finite dimensional: {}\n", q.is_finite_dimensional()));
            match detect_bands(&q) {
                Some(b) => s.push_str(&format!("band: {}\n", b.display(&q))),
                None => s.push_str("band: none\n"),
            }
            Ok(s)
        }
        Command::Strings { algebra, max_len } => {
            no_dot(format)?;
            let q = load(algebra)?;
            let ws: Vec<StringWord> = match max_len {
                Some(n) => enumerate_strings(&q, *n).into_iter().collect(),
                None => all_strings(&q).map_err(|e| Failure::new("string", e))?.into_iter().collect(),
            };
            Ok(if json { pretty(&word_list(&q, &ws)) } else { module_list(&q, &ws) })
        }
        Command::Module { command: ModuleCommand::Info { algebra, word: text } } => {
            no_dot(format)?;
            let q = load(algebra)?;
            let w = word(&q, text)?;
            let names = |vs: Vec<usize>| -> Vec<String> { vs.into_iter().map(|v| q.vertex_name(v).to_string()).collect() };
            let info = json!({
                "word": w.display(&q).to_string(),
                "composition": composition_text(&q, &w),
                "dimension_vector": dim_vector(&q, &w),
                "top": names(top(&q, &w)),
                "socle": names(socle(&q, &w)),
                "projective": is_projective(&q, &w),
                "projective_dimension": projective_dimension(&q, &w, q.vertex_count() + 1),
            });
            if json {
                return Ok(pretty(&info));
            }
            let mut s = String::new();
            for key in ["word", "composition", "dimension_vector", "top", "socle", "projective", "projective_dimension"] {
                s.push_str(&format!("{}: {}\n", key.replace('_', " "), info[key]));
            }
            Ok(s)
        }
        Command::Hom { algebra, w, v } => {
            no_dot(format)?;
            let q = load(algebra)?;
            let (w, v) = (word(&q, w)?, word(&q, v)?);
            let basis = hom_basis(&q, &w, &v);
            let items: Vec<Value> = basis
                .iter()
                .map(|h| {
                    json!({
                        "factor": h.factor.display(&q).to_string(),
                        "kind": h.kind,
                        "source_placement": h.source_placement,
                        "target_placement": h.target_placement,
                        "node_map": h.node_map(),
                    })
                })
                .collect();
            if json {
                return Ok(pretty(&json!({ "dim": basis.len(), "basis": items })));
            }
            let mut s = format!("dim Hom: {}\n", basis.len());
            for h in &basis {
                s.push_str(&format!("{:?} through {}\n", h.kind, h.factor.display(&q)));
            }
            Ok(s)
        }
        Command::Ext1 { algebra, v, w } => {
            no_dot(format)?;
            let q = load(algebra)?;
            let (v, w) = (word(&q, v)?, word(&q, w)?);
            let e = ext1_basis(&q, &v, &w);
            let arrows: Vec<Value> = e
                .arrow_exts
                .iter()
                .map(|a| json!({ "arrow": q.arrow_name(a.arrow), "middle": a.middle.display(&q).to_string() }))
                .collect();
            let overlaps: Vec<Value> = e
                .overlap_exts
                .iter()
                .map(|o| {
                    json!({
                        "overlap": o.overlap.display(&q).to_string(),
                        "middles": [o.middles.0.display(&q).to_string(), o.middles.1.display(&q).to_string()],
                    })
                })
                .collect();
            if json {
                return Ok(pretty(&json!({ "dim": e.dim(), "arrow": arrows, "overlap": overlaps })));
            }
            let mut s = format!("dim Ext1: {}\n", e.dim());
            for a in &e.arrow_exts {
                s.push_str(&format!("arrow {}: {}\n", q.arrow_name(a.arrow), a.middle.display(&q)));
            }
            for o in &e.overlap_exts {
                s.push_str(&format!(
                    "overlap {}: {} + {}\n",
                    o.overlap.display(&q),
                    o.middles.0.display(&q),
                    o.middles.1.display(&q)
                ));
            }
            Ok(s)
        }
        Command::ArQuiver { algebra, dot } => {
            let q = load(algebra)?;
            let ar = ar_quiver(&q).map_err(|e| Failure::new("string", e))?;
            if *dot || format == Format::Dot {
                return Ok(ar.to_dot(&q));
            }
            if json {
                return Ok(pretty(&json!({ "nodes": word_list(&q, &ar.nodes), "edges": ar.edges })));
            }
            let mut s = format!("{} modules, {} irreducible maps\n", ar.nodes.len(), ar.edges.len());
            for (a, b) in &ar.edges {
                s.push_str(&format!("{} -> {}\n", ar.nodes[*a].display(&q), ar.nodes[*b].display(&q)));
            }
            Ok(s)
        }
        Command::AlmostRigid { algebra, set } => {
            no_dot(format)?;
            let q = load(algebra)?;
            let s = module_set(&q, set)?;
            let witness = rigidity_witness(&q, &s);
            let c = certificate(&q, &s);
            let pair = witness.as_ref().map(|o| [o.quotient.display(&q).to_string(), o.sub.display(&q).to_string()]);
            if json {
                return Ok(pretty(&json!({
                    "almost_rigid": witness.is_none(),
                    "mar": c.is_mar(),
                    "size_ok": c.size_ok,
                    "overlap": pair,
                })));
            }
            let mut out = format!("almost rigid: {}\nmar: {}\n", witness.is_none(), c.is_mar());
            if let Some([m, n]) = pair {
                out.push_str(&format!("overlap extension of {m} by {n}\n"));
            }
            Ok(out)
        }
        Command::Required { algebra } | Command::Mproj { algebra } | Command::Minj { algebra } => {
            no_dot(format)?;
            let q = load(algebra)?;
            let s = match &cli.command {
                Command::Required { .. } => required_summands(&q),
                Command::Mproj { .. } => m_proj(&q),
                _ => m_inj(&q),
            };
            let ws: Vec<StringWord> = s.into_iter().collect();
            Ok(if json { pretty(&word_list(&q, &ws)) } else { module_list(&q, &ws) })
        }
        Command::Complete { algebra, set, max_len } => {
            no_dot(format)?;
            let q = load(algebra)?;
            let s = module_set(&q, set)?;
            let t = complete_to_mar(&q, &s, *max_len).map_err(|e| Failure::new("mar", e))?;
            let ws: Vec<StringWord> = t.into_iter().collect();
            Ok(if json { pretty(&word_list(&q, &ws)) } else { module_list(&q, &ws) })
        }
        Command::EnumerateMars { algebra, max_len } => {
            no_dot(format)?;
            let q = load(algebra)?;
            let e = enumerate_mars(&q, *max_len);
            let lists: Vec<Vec<StringWord>> = e.mars.iter().map(|t| t.iter().cloned().collect()).collect();
            if json {
                return Ok(pretty(&json!({
                    "mars": lists.iter().map(|t| word_list(&q, t)).collect::<Vec<_>>(),
                    "pool": e.pool_size,
                    "has_bands": e.has_bands,
                    "undersized": e.undersized,
                })));
            }
            let mut s = format!("MAR modules: {} (pool {}, summands of length <= {})\n", lists.len(), e.pool_size, e.max_len);
            if e.has_bands {
                s.push_str("note: the algebra has bands, the list may be incomplete\n");
            }
            for (i, t) in lists.iter().enumerate() {
                s.push_str(&format!("\nMAR {} ({} summands)\n", i + 1, t.len()));
                s.push_str(&module_list(&q, t));
            }
            Ok(s)
        }
        Command::Bar { algebra } => {
            no_dot(format)?;
            let q = load(algebra)?;
            let b = bar_algebra(&q);
            let vertices: Vec<Value> = (0..q.vertex_count())
                .map(|v| json!([q.vertex_name(v), b.bar.vertex_name(b.vertex_map[v])]))
                .collect();
            let arrows: Vec<Value> = (0..q.arrow_count())
                .map(|a| {
                    let (x, y) = b.split[a];
                    json!([
                        q.arrow_name(a),
                        b.bar.vertex_name(b.vertex_of_arrow[a]),
                        b.bar.arrow_name(x),
                        b.bar.arrow_name(y)
                    ])
                })
                .collect();
            let algebra_json: Value = serde_json::to_value(b.bar.to_file()).expect("algebra serializes");
            if json {
                return Ok(pretty(&json!({ "algebra": algebra_json, "vertices": vertices, "arrows": arrows })));
            }
            let mut s = pretty(&algebra_json);
            for v in 0..q.vertex_count() {
                s.push_str(&format!("vertex {} -> {}\n", q.vertex_name(v), b.bar.vertex_name(b.vertex_map[v])));
            }
            for a in 0..q.arrow_count() {
                let (x, y) = b.split[a];
                s.push_str(&format!(
                    "arrow {} -> {} {} via {}\n",
                    q.arrow_name(a),
                    b.bar.arrow_name(x),
                    b.bar.arrow_name(y),
                    b.bar.vertex_name(b.vertex_of_arrow[a])
                ));
            }
            Ok(s)
        }
        Command::Gmap { algebra, word: text } => {
            no_dot(format)?;
            let q = load(algebra)?;
            let w = word(&q, text)?;
            let b = bar_algebra(&q);
            let g = b.g_string(&w);
            if json {
                return Ok(pretty(&json!({
                    "word": g.display(&b.bar).to_string(),
                    "composition": composition_text(&b.bar, &g),
                })));
            }
            Ok(format!("{}\t{}\n", g.display(&b.bar), composition_text(&b.bar, &g)))
        }
        Command::TiltingCheck { algebra, set, via_g } => {
            no_dot(format)?;
            let q = load(algebra)?;
            let s = module_set(&q, set)?;
            let (over, s) = if *via_g {
                let b = bar_algebra(&q);
                let g = b.g_set(&s);
                (b.bar, g)
            } else {
                (q, s)
            };
            let r = tilting_check(&over, &s);
            let high: Vec<String> = r.high_pd.iter().map(|w| w.display(&over).to_string()).collect();
            let pairs: Vec<[String; 2]> = r
                .ext_pairs
                .iter()
                .map(|(v, w)| [v.display(&over).to_string(), w.display(&over).to_string()])
                .collect();
            if json {
                return Ok(pretty(&json!({
                    "tilting": r.is_tilting(),
                    "pd_at_most_one": r.pd_at_most_one,
                    "ext_vanishes": r.ext_vanishes,
                    "count_matches": r.count_matches,
                    "summands": r.summands,
                    "expected": r.expected,
                    "high_pd": high,
                    "ext_pairs": pairs,
                })));
            }
            let mut out = format!(
                "tilting: {}\npd <= 1: {}\next vanishes: {}\nsummands: {} of {}\n",
                r.is_tilting(),
                r.pd_at_most_one,
                r.ext_vanishes,
                r.summands,
                r.expected
            );
            for w in high {
                out.push_str(&format!("pd > 1: {w}\n"));
            }
            for [v, w] in pairs {
                out.push_str(&format!("Ext1({v}, {w}) != 0\n"));
            }
            Ok(out)
        }
        Command::Endo { algebra, set, mar, order } => {
            let q = load(algebra)?;
            let t = match (set, mar) {
                (Some(path), _) => module_set(&q, path)?,
                (None, Some(Named::Mproj)) => m_proj(&q),
                (None, Some(Named::Minj)) => m_inj(&q),
                (None, None) => unreachable!("clap requires a set or --mar"),
            };
            let mut p = endomorphism_presentation(&q, &t).map_err(|e| Failure::new("endo", e))?;
            if let Some(path) = order {
                let wanted: Vec<StringWord> = load_set(&q, path)?.iter().map(StringWord::canonical).collect();
                p = relabel(&p, &wanted).map_err(|m| Failure::new("order", m))?;
            }
            Ok(match format {
                Format::Dot => presentation_dot(&q, &p),
                Format::Json => pretty(&json!({
                    "algebra": serde_json::to_value(p.quiver.to_file()).expect("algebra serializes"),
                    "summands": word_list(&q, &p.vertex_labels),
                })),
                Format::Text => presentation_text(&q, &p),
            })
        }
        Command::Tensor { presentation } => {
            let c = load_any(presentation)?;
            let labels = (0..c.vertex_count()).map(StringWord::Trivial).collect();
            let p = AlgebraPresentation { quiver: c.clone(), vertex_labels: labels, infinite_dimensional: false };
            let b = tensor_algebra(&p).map_err(|e| Failure::new("endo", e))?;
            Ok(match format {
                Format::Dot => presentation_dot(&c, &b),
                Format::Json => pretty(&json!({
                    "algebra": serde_json::to_value(b.quiver.to_file()).expect("algebra serializes"),
                    "infinite_dimensional": b.infinite_dimensional,
                })),
                Format::Text => {
                    let mut s = pretty(&serde_json::to_value(b.quiver.to_file()).expect("algebra serializes"));
                    s.push_str(&format!("infinite dimensional: {}\n", b.infinite_dimensional));
                    s
                }
            })
        }
        Command::Oracle { prime, command: OracleCommand::Crosscheck { algebra, max_len } } => {
            no_dot(format)?;
            let q = load(algebra)?;
            let f = field(*prime)?;
            let r = crosscheck(&f, &q, *max_len);
            if !r.ok() {
                return Err(Failure::new(
                    "mismatch",
                    serde_json::to_string(&r.mismatches).expect("mismatches serialize"),
                ));
            }
            if json {
                return Ok(pretty(&serde_json::to_value(&r).expect("report serializes")));
            }
            Ok(format!("ok: {} strings, {} pairs, prime {}\n", r.strings, r.pairs, r.prime))
        }
    }
}
