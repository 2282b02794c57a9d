//! The `scx` command line. [`run`] parses arguments, runs one subcommand on
//! a dedicated rayon pool and returns the process exit code: 0 on success,
//! 1 when a verification fails, 2 on usage or input errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use scx_core::betti::{max_b_index, property_a, property_b, strand_stats, Convention};
use scx_core::homology::reduced_homology;
use scx_core::io::{parse_complex, write_scx};
use scx_core::structure::{is_banner, is_minimal_cycle, is_pseudomanifold};
use scx_core::verify::{verify_selected, VerificationReport, SCHEMA};
use scx_core::{betti, ComplexFamily, FieldSpec, SimplicialComplex, DEFAULT_VERTEX_CAP, HARD_VERTEX_CAP};

#[derive(Parser, Debug)]
#[command(name = "scx", version, about = "Invariants of finite simplicial complexes")]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Config {
    /// Coefficient field: gf2, gf<p> for an odd prime p, or q
    #[arg(long, global = true, default_value = "gf2")]
    field: FieldSpec,
    /// Which Betti-table row the top strand is read from
    #[arg(long, global = true, value_enum, default_value_t = ConventionArg::Shifted)]
    convention: ConventionArg,
    /// Largest vertex count accepted for the 2^n sweep
    #[arg(long, global = true, default_value_t = DEFAULT_VERTEX_CAP)]
    max_vertices: usize,
    /// Worker threads; defaults to the available parallelism
    #[arg(long, global = true, env = "SCX_THREADS")]
    threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Output::Human)]
    output: Output,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConventionArg {
    Literal,
    Shifted,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Literal => Convention::Literal,
            ConventionArg::Shifted => Convention::Shifted,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Human,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a complex from a family, e.g. `gen suspension cycle 5`
    Gen {
        /// Family in prefix notation: simplex_boundary D, cross_polytope D,
        /// cycle N, cone F, suspension F, join F G, clique_of 1-2,2-3,...,
        /// rp2_6, remark_complex D, random_flag N P SEED
        #[arg(required = true, num_args = 1..)]
        family: Vec<String>,
        /// Write the complex here instead of standard output
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Graded Betti table via Hochster's formula
    Betti { input: PathBuf },
    /// Reduced homology ranks
    Homology { input: PathBuf },
    /// Vertex connectivity of the underlying graph
    Connectivity {
        input: PathBuf,
        /// Also print a minimum separating vertex set
        #[arg(long)]
        witness: bool,
    },
    /// Evaluate structural predicates; all of them when none is selected
    Check(CheckArgs),
    /// Check the connectivity and Betti-table results on a complex
    Verify {
        input: PathBuf,
        /// `all` or a comma-separated list of check names
        #[arg(long, default_value = "all")]
        theorems: String,
    },
    /// Everything: invariants, Betti table and all checks
    Report { input: PathBuf },
}

#[derive(Args, Debug)]
struct CheckArgs {
    input: PathBuf,
    #[arg(long)]
    flag: bool,
    #[arg(long)]
    pseudomanifold: bool,
    #[arg(long)]
    minimal_cycle: bool,
    #[arg(long)]
    banner: bool,
    #[arg(long)]
    banner_number: bool,
    /// Property A under the selected convention
    #[arg(long = "prop-A", alias = "prop-a")]
    prop_a: bool,
    /// Property B_S; without S, the largest S for which it holds
    #[arg(long = "prop-B", alias = "prop-b", value_name = "S", num_args = 0..=1)]
    prop_b: Option<Option<usize>>,
}

impl CheckArgs {
    fn none_selected(&self) -> bool {
        !(self.flag
            || self.pseudomanifold
            || self.minimal_cycle
            || self.banner
            || self.banner_number
            || self.prop_a
            || self.prop_b.is_some())
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// its output to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version also arrive here
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 2;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            2
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> anyhow::Result<i32> {
    let cfg = &cli.config;
    if cfg.max_vertices > HARD_VERTEX_CAP {
        bail!("--max-vertices {} exceeds the hard limit {HARD_VERTEX_CAP}", cfg.max_vertices);
    }
    let threads = match cfg.threads {
        Some(0) => bail!("--threads must be at least 1"),
        Some(t) => t,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .context("cannot start worker threads")?;
    let (code, text) = pool.install(|| dispatch(cli))?;
    out.write_all(text.as_bytes())?;
    Ok(code)
}

fn read_input(path: &Path, cap: usize) -> anyhow::Result<SimplicialComplex> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?
    };
    parse_complex(&text, cap).with_context(|| format!("invalid complex in {}", path.display()))
}

fn to_json(mut v: Value, command: &str) -> String {
    let obj = v.as_object_mut().expect("reports are objects");
    obj.insert("schema".into(), json!(SCHEMA));
    obj.insert("command".into(), json!(command));
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}

fn with_input(v: Value, path: &Path) -> Value {
    let mut v = v;
    v.as_object_mut().expect("object").insert("input".into(), json!(path.display().to_string()));
    v
}

/// Runs a command and returns its exit code and full output.
fn dispatch(cli: &Cli) -> anyhow::Result<(i32, String)> {
    let cfg = &cli.config;
    let convention: Convention = cfg.convention.into();
    let json_out = cfg.output == Output::Json;
    let mut s = String::new();
    match &cli.command {
        Command::Gen { family, out } => {
            let fam: ComplexFamily = family.join(" ").parse()?;
            let c = fam.generate()?;
            let mut header = vec![format!("family: {fam}")];
            if let Some(seed) = fam.seed() {
                header.push(format!("seed: {seed}"));
            }
            let text = write_scx(&c, &header);
            match out {
                Some(path) => {
                    std::fs::write(path, &text).with_context(|| format!("cannot write {}", path.display()))?;
                    if json_out {
                        s = to_json(
                            json!({ "family": fam.to_string(), "seed": fam.seed(), "output": path.display().to_string(),
                                    "n": c.num_vertices(), "facets": c.facets().len() }),
                            "gen",
                        );
                    } else {
                        let _ = writeln!(s, "wrote {} ({} vertices, {} facets)", path.display(), c.num_vertices(), c.facets().len());
                    }
                }
                None if json_out => {
                    s = to_json(json!({ "family": fam.to_string(), "seed": fam.seed(), "facets": c.facet_labels() }), "gen");
                }
                None => s = text,
            }
            Ok((0, s))
        }
        Command::Betti { input } => {
            let c = read_input(input, cfg.max_vertices)?;
            let t = betti::hochster_table_capped(&c, cfg.field, cfg.max_vertices)?;
            let stats = strand_stats(&t);
            if json_out {
                let mut v = json!(t);
                v["stats"] = json!(stats);
                s = to_json(with_input(v, input), "betti");
            } else {
                let _ = writeln!(s, "Betti table over {} ({} vertices)", cfg.field, c.num_vertices());
                s.push_str(&t.render());
                let _ = writeln!(s, "regularity {}, projdim {}", stats.regularity, stats.projdim);
                let _ = writeln!(s, "lp (literal): {}", fmt_map(&stats.lp));
                let _ = writeln!(s, "lp (shifted): {}", fmt_map(&stats.lp_shifted));
                let _ = writeln!(s, "t: {}", fmt_map(&stats.t));
            }
            Ok((0, s))
        }
        Command::Homology { input } => {
            let c = read_input(input, cfg.max_vertices)?;
            let h = reduced_homology(&c, cfg.field);
            if json_out {
                s = to_json(with_input(json!(h), input), "homology");
            } else {
                let _ = writeln!(s, "reduced homology over {}", cfg.field);
                for (i, r) in h.ranks().iter().enumerate() {
                    let _ = writeln!(s, "  H~_{}: {r}", i as isize - 1);
                }
            }
            Ok((0, s))
        }
        Command::Connectivity { input, witness } => {
            let c = read_input(input, cfg.max_vertices)?;
            let g = c.underlying_graph();
            let kappa = g.vertex_connectivity();
            let sep = g.minimum_separator().map(|f| c.face_labels(f));
            if json_out {
                let mut v = json!({ "n": c.num_vertices(), "kappa": kappa });
                if *witness {
                    v["separator"] = json!(sep);
                }
                s = to_json(with_input(v, input), "connectivity");
            } else {
                let _ = writeln!(s, "kappa = {kappa}");
                if *witness {
                    match sep {
                        Some(sep) => {
                            let _ = writeln!(s, "separator: {}", fmt_set(&sep));
                        }
                        None => {
                            let _ = writeln!(s, "separator: none (complete graph)");
                        }
                    }
                }
            }
            Ok((0, s))
        }
        Command::Check(args) => check(args, cfg, convention, json_out),
        Command::Verify { input, theorems } => {
            let c = read_input(input, cfg.max_vertices)?;
            let names: Option<Vec<String>> = match theorems.trim() {
                "all" => None,
                list => Some(list.split(',').map(|n| n.trim().to_string()).filter(|n| !n.is_empty()).collect()),
            };
            let mut report = verify_selected(&c, cfg.field, convention, cfg.max_vertices, names.as_deref())?;
            report.complex = input.display().to_string();
            let code = if report.all_passed() { 0 } else { 1 };
            if json_out {
                s = to_json(json!(report), "verify");
            } else {
                render_entries(&mut s, &report);
            }
            Ok((code, s))
        }
        Command::Report { input } => {
            let c = read_input(input, cfg.max_vertices)?;
            let mut report = verify_selected(&c, cfg.field, convention, cfg.max_vertices, None)?;
            report.complex = input.display().to_string();
            let code = if report.all_passed() { 0 } else { 1 };
            if json_out {
                s = to_json(json!(report), "report");
            } else {
                render_report(&mut s, &c, &report);
            }
            Ok((code, s))
        }
    }
}

fn check(args: &CheckArgs, cfg: &Config, convention: Convention, json_out: bool) -> anyhow::Result<(i32, String)> {
    let c = read_input(&args.input, cfg.max_vertices)?;
    let all = args.none_selected();
    let mut v = serde_json::Map::new();
    let mut lines = Vec::new();
    if all || args.flag {
        let flag = c.is_flag();
        v.insert("flag".into(), json!(flag));
        lines.push(format!("flag: {flag}"));
    }
    if all || args.pseudomanifold {
        let p = is_pseudomanifold(&c);
        v.insert("pseudomanifold".into(), json!(p));
        lines.push(format!("pseudomanifold: {p}"));
    }
    if all || args.minimal_cycle {
        match is_minimal_cycle(&c, cfg.field) {
            Ok(m) => {
                lines.push(format!(
                    "minimal cycle over {}: {} (cycle space dimension {})",
                    cfg.field, m.is_minimal_cycle, m.cycle_space_dim
                ));
                v.insert("minimal_cycle".into(), json!(m));
            }
            Err(e) => {
                lines.push(format!("minimal cycle over {}: false ({e})", cfg.field));
                v.insert("minimal_cycle".into(), json!({ "is_minimal_cycle": false, "reason": e.to_string() }));
            }
        }
    }
    if all || args.banner || args.banner_number {
        let b = is_banner(&c);
        if all || args.banner {
            lines.push(match &b.witness {
                None => "banner: true".to_string(),
                Some(w) => format!("banner: false (critical complete non-face {})", fmt_set(w)),
            });
            v.insert("banner".into(), json!({ "is_banner": b.is_banner, "witness": b.witness }));
        }
        if all || args.banner_number {
            lines.push(match b.banner_number {
                Some(n) => format!("banner number: {n}"),
                None => "banner number: none".to_string(),
            });
            v.insert("banner_number".into(), json!(b.banner_number));
        }
    }
    if all || args.prop_a || args.prop_b.is_some() {
        let t = betti::hochster_table_capped(&c, cfg.field, cfg.max_vertices)?;
        if all || args.prop_a {
            let a = property_a(&t, convention);
            let detail = if a.holds {
                String::new()
            } else if !a.condition1 {
                format!(" (lp_2 = {} > m = {})", a.lp2, a.m)
            } else {
                format!(" (fails at i = {})", a.violating_i.expect("a comparison failed"))
            };
            lines.push(format!("property A ({convention}): {}{detail}", a.holds));
            v.insert("property_a".into(), json!(a));
        }
        if let Some(s) = args.prop_b.or(if all { Some(None) } else { None }) {
            match s {
                Some(s) => {
                    let b = property_b(&t, s);
                    lines.push(match b.violating_i {
                        None => format!("property B_{s}: true"),
                        Some(i) => format!("property B_{s}: false (fails at i = {i})"),
                    });
                    v.insert("property_b".into(), json!(b));
                }
                None => {
                    let m = max_b_index(&t);
                    lines.push(format!("property B_s holds up to s = {m}"));
                    v.insert("max_b_index".into(), json!(m));
                }
            }
        }
    }
    let s = if json_out {
        v.insert("field".into(), json!(cfg.field));
        v.insert("convention".into(), json!(convention));
        to_json(with_input(Value::Object(v), &args.input), "check")
    } else {
        lines.join("\n") + "\n"
    };
    Ok((0, s))
}

fn fmt_set(labels: &[u32]) -> String {
    let items: Vec<String> = labels.iter().map(u32::to_string).collect();
    format!("{{{}}}", items.join(","))
}

fn fmt_map(m: &std::collections::BTreeMap<usize, usize>) -> String {
    m.iter().map(|(k, v)| format!("{k}:{v}")).collect::<Vec<_>>().join(" ")
}

fn render_entries(s: &mut String, report: &VerificationReport) {
    let width = report.entries.iter().map(|e| e.name.len()).max().unwrap_or(0);
    for e in &report.entries {
        let (tag, detail) = match e.pass {
            Some(true) => ("PASS", e.claim.clone().unwrap_or_default()),
            Some(false) => (
                "FAIL",
                format!(
                    "{} [witness {}]",
                    e.claim.clone().unwrap_or_default(),
                    e.witness.as_ref().map_or("none".into(), Value::to_string)
                ),
            ),
            None => ("n/a ", e.reason.clone().unwrap_or_default()),
        };
        let _ = writeln!(s, "{tag}  {:<width$}  {detail}", e.name);
    }
    let m = &report.summary;
    let _ = writeln!(
        s,
        "{} checks, {} applicable, {} passed, {} failed",
        m.checks, m.applicable, m.passed, m.failed
    );
}

fn render_report(s: &mut String, c: &SimplicialComplex, report: &VerificationReport) {
    let f = &report.facts;
    let _ = writeln!(s, "complex {}: {} vertices, dimension {}, {} facets", report.complex, report.n, report.dim, c.facets().len());
    let _ = writeln!(s, "f-vector {:?}", f.f_vector);
    let _ = writeln!(
        s,
        "pure {}, flag {}, pseudomanifold {}, banner {}, banner number {}",
        f.pure,
        f.flag,
        f.pseudomanifold,
        f.banner.is_banner,
        f.banner.banner_number.map_or("none".into(), |b| b.to_string())
    );
    let _ = writeln!(s, "minimal cycle over {}: {}", report.field, f.minimal_cycle);
    let ranks: Vec<String> = f.homology.iter().enumerate().map(|(i, r)| format!("H~_{}={r}", i as isize - 1)).collect();
    let _ = writeln!(s, "homology over {}: {}", report.field, ranks.join(" "));
    let _ = writeln!(
        s,
        "kappa {}{}",
        f.kappa,
        f.separator.as_ref().map_or(String::new(), |sep| format!(", separator {}", fmt_set(sep)))
    );
    let _ = writeln!(s, "Betti table{}:", if f.poincare_symmetric { " (Poincare-symmetric)" } else { "" });
    s.push_str(&f.betti.render());
    let _ = writeln!(s, "checks ({} convention):", report.convention);
    render_entries(s, report);
}
