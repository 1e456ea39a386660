use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use smindy_core::collections::{self, Collection};
use smindy_core::{kronecker, maps, perp, HomEngine, OrbitCategory, Quiver, VerificationReport, WeylGroup};

const CSV_HELP: &str = "\
CSV columns (fixed):
  roots             index,dim
  hom               x,y,w,dim            (w empty for derived Hom)
  fd                index,object
  enumerate         index,size,objects   (objects separated by ';')
  enumerate nc*     index,lengths,parts  (lengths ';'-separated; parts '|'-separated,
                                          each part the roots of a T-reduced expression)
  verify, kronecker theorem,quiver,w,pass,counts,witness (counts as key=value;...)";

#[derive(Parser)]
#[command(name = "smindy", version, about = "Simple-minded collections, simple-minded systems and noncrossing partitions of Dynkin quivers", after_help = CSV_HELP)]
struct Cli {
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Args)]
struct QuiverArgs {
    /// Quiver file, `-` for stdin, or inline text such as "vertices 2; arrows 1->2".
    #[arg(long)]
    quiver: String,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    w: u32,
    /// Largest number of candidate subsets an enumeration may face.
    #[arg(long, env = "SMINDY_BUDGET", default_value_t = collections::DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    /// Seed for randomized re-checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Record wall-clock time in reports (otherwise elapsed_ms is 0).
    #[arg(long)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Positive roots (dimension vectors of indecomposables).
    Roots {
        #[command(flatten)]
        q: QuiverArgs,
    },
    /// dim Hom(x, y) in D^b(kQ), or in C_{-w} when --w is given.
    Hom {
        #[command(flatten)]
        q: QuiverArgs,
        /// Object literal "(d1,...,dn)@degree".
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        w: Option<u32>,
    },
    /// Objects of the fundamental domain of C_{-w}.
    Fd {
        #[command(flatten)]
        q: QuiverArgs,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        w: u32,
    },
    /// List simple-minded collections, systems, sincere collections or noncrossing partitions.
    Enumerate {
        #[arg(value_enum)]
        what: EnumTarget,
        #[command(flatten)]
        q: QuiverArgs,
        #[command(flatten)]
        s: SearchArgs,
    },
    /// Run a verification driver; exits 1 if it fails.
    Verify {
        #[arg(value_enum)]
        theorem: Theorem,
        #[command(flatten)]
        q: QuiverArgs,
        #[command(flatten)]
        s: SearchArgs,
        /// Vertices (1-based) whose simples form T for `reduction`; default: each vertex in turn.
        #[arg(long, value_delimiter = ',')]
        simple: Vec<usize>,
    },
    /// Check the Kronecker 1-Riedtmann configuration built from tubes Λ and Ω.
    KroneckerExample {
        /// Tube labels in Λ.
        #[arg(long, value_delimiter = ',', required = true)]
        lambda: Vec<u32>,
        /// Tube labels in Ω.
        #[arg(long, value_delimiter = ',', required = true)]
        omega: Vec<u32>,
        #[arg(long, default_value_t = 4)]
        window: u32,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EnumTarget {
    Smc,
    Sms,
    Sincere,
    Nc,
    NcPositive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Theorem {
    TheoremA,
    TheoremB,
    Theta,
    Reduction,
    All,
}

enum Failure {
    Input(String),
    Verification,
}

impl From<smindy_core::Error> for Failure {
    fn from(e: smindy_core::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    print!("{out}");
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => {
            eprintln!("error: verification failed");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load_quiver(source: &str) -> Result<Quiver, Failure> {
    let text = if source == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        buf
    } else if Path::new(source).is_file() {
        std::fs::read_to_string(source).map_err(|e| Failure::Input(format!("{source}: {e}")))?
    } else if source.trim_start().starts_with('{') || source.contains("vertices") {
        source.to_string()
    } else {
        return Err(Failure::Input(format!("{source}: no such file")));
    };
    Ok(Quiver::parse(&text)?)
}

fn engine(q: &QuiverArgs) -> Result<HomEngine, Failure> {
    Ok(HomEngine::new(&load_quiver(&q.quiver)?)?)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn objects(e: &HomEngine, c: &Collection) -> Vec<String> {
    c.objects().iter().map(|&x| e.format_object(x)).collect()
}

fn run(cmd: Command, out: &mut String) -> Result<(), Failure> {
    match cmd {
        Command::Roots { q } => {
            let e = engine(&q)?;
            let roots: Vec<String> = e.roots().iter().map(|r| r.to_string()).collect();
            match q.format {
                Format::Json => emit_json(out, &json!({ "quiver": e.quiver().type_label(), "roots": roots })),
                Format::Csv => {
                    out.push_str("index,dim\n");
                    for (i, r) in roots.iter().enumerate() {
                        let _ = writeln!(out, "{i},{}", csv_field(r));
                    }
                }
                Format::Table => {
                    for (i, r) in roots.iter().enumerate() {
                        let _ = writeln!(out, "{i:>4}  {r}");
                    }
                }
            }
            Ok(())
        }
        Command::Hom { q, x, y, w } => {
            let e = engine(&q)?;
            let (x, y) = (e.parse_object(&x)?, e.parse_object(&y)?);
            let dim = match w {
                Some(w) => {
                    let cat = OrbitCategory::new(&e, w)?;
                    cat.dim_hom(cat.canonical(x), cat.canonical(y))?
                }
                None => e.dim_hom(x, y),
            };
            let (xs, ys) = (e.format_object(x), e.format_object(y));
            match q.format {
                Format::Json => emit_json(out, &json!({ "x": xs, "y": ys, "w": w, "dim": dim })),
                Format::Csv => {
                    let ws = w.map(|w| w.to_string()).unwrap_or_default();
                    let _ = writeln!(out, "x,y,w,dim\n{},{},{ws},{dim}", csv_field(&xs), csv_field(&ys));
                }
                Format::Table => {
                    let _ = writeln!(out, "{dim}");
                }
            }
            Ok(())
        }
        Command::Fd { q, w } => {
            let e = engine(&q)?;
            let cat = OrbitCategory::new(&e, w)?;
            let objs: Vec<String> = cat.domain().iter().map(|&x| e.format_object(x)).collect();
            match q.format {
                Format::Json => emit_json(out, &json!({ "quiver": e.quiver().type_label(), "w": w, "objects": objs })),
                Format::Csv => {
                    out.push_str("index,object\n");
                    for (i, o) in objs.iter().enumerate() {
                        let _ = writeln!(out, "{i},{}", csv_field(o));
                    }
                }
                Format::Table => {
                    for (i, o) in objs.iter().enumerate() {
                        let _ = writeln!(out, "{i:>4}  {o}");
                    }
                }
            }
            Ok(())
        }
        Command::Enumerate { what, q, s } => enumerate(what, &q, &s, out),
        Command::Verify { theorem, q, s, simple } => {
            let e = engine(&q)?;
            let reports = verify(theorem, &e, &s, &simple)?;
            emit_reports(out, &reports, q.format);
            if reports.iter().all(|r| r.pass) {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::KroneckerExample { lambda, omega, window, format } => {
            let r = kronecker::verify_example(&lambda, &omega, window)?;
            let pass = r.pass;
            emit_reports(out, &[r], format);
            if pass {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
    }
}

fn enumerate(what: EnumTarget, q: &QuiverArgs, s: &SearchArgs, out: &mut String) -> Result<(), Failure> {
    let e = engine(q)?;
    let label = e.quiver().type_label();
    if matches!(what, EnumTarget::Nc | EnumTarget::NcPositive) {
        let g = WeylGroup::new(e.quiver())?;
        let mut nc = g.enumerate_nc(s.w)?;
        if what == EnumTarget::NcPositive {
            nc = g.filter_positive(&nc);
        }
        let rows: Vec<(Vec<usize>, Vec<Vec<String>>)> = nc
            .iter()
            .map(|t| {
                let parts = t
                    .parts
                    .iter()
                    .map(|u| g.t_reduced_expression(u).iter().map(|&i| g.reflections()[i].root.to_string()).collect())
                    .collect();
                (t.lengths.clone(), parts)
            })
            .collect();
        match q.format {
            Format::Json => {
                let items: Vec<Value> = rows.iter().map(|(l, p)| json!({ "lengths": l, "parts": p })).collect();
                emit_json(out, &json!({ "quiver": label, "w": s.w, "count": rows.len(), "tuples": items }));
            }
            Format::Csv => {
                out.push_str("index,lengths,parts\n");
                for (i, (l, p)) in rows.iter().enumerate() {
                    let lengths: Vec<String> = l.iter().map(|x| x.to_string()).collect();
                    let parts: Vec<String> = p.iter().map(|x| x.join(" ")).collect();
                    let _ = writeln!(out, "{i},{},{}", lengths.join(";"), csv_field(&parts.join("|")));
                }
            }
            Format::Table => {
                for (i, (_, p)) in rows.iter().enumerate() {
                    let parts: Vec<String> = p.iter().map(|x| format!("[{}]", x.join(" "))).collect();
                    let _ = writeln!(out, "{i:>5}  {}", parts.join(" "));
                }
                let _ = writeln!(out, "{} tuples", rows.len());
            }
        }
        return Ok(());
    }
    let cat = OrbitCategory::new(&e, s.w)?;
    let found = match what {
        EnumTarget::Smc => collections::enumerate_smc_in_fd(&cat, s.budget)?,
        EnumTarget::Sms => collections::enumerate_sms(&cat, s.budget)?,
        _ => maps::enumerate_sincere(&e, s.w, s.budget)?,
    };
    let rows: Vec<Vec<String>> = found.iter().map(|c| objects(&e, c)).collect();
    match q.format {
        Format::Json => emit_json(out, &json!({ "quiver": label, "w": s.w, "count": rows.len(), "collections": rows })),
        Format::Csv => {
            out.push_str("index,size,objects\n");
            for (i, r) in rows.iter().enumerate() {
                let _ = writeln!(out, "{i},{},{}", r.len(), csv_field(&r.join(";")));
            }
        }
        Format::Table => {
            for (i, r) in rows.iter().enumerate() {
                let _ = writeln!(out, "{i:>5}  {{{}}}", r.join(", "));
            }
            let _ = writeln!(out, "{} collections", rows.len());
        }
    }
    Ok(())
}

fn verify(theorem: Theorem, e: &HomEngine, s: &SearchArgs, simple: &[usize]) -> Result<Vec<VerificationReport>, Failure> {
    let timed = |f: &dyn Fn() -> smindy_core::Result<VerificationReport>| -> Result<VerificationReport, Failure> {
        let start = Instant::now();
        let mut r = f()?;
        if s.timing {
            r.elapsed_ms = start.elapsed().as_millis() as u64;
        }
        Ok(r)
    };
    let mut reports = Vec::new();
    if matches!(theorem, Theorem::TheoremA | Theorem::All) {
        reports.push(timed(&|| maps::verify_theorem_a(e, s.w, s.budget))?);
    }
    if matches!(theorem, Theorem::TheoremB | Theorem::All) {
        reports.push(timed(&|| maps::verify_theorem_b(e, s.w, s.budget, s.seed))?);
    }
    if matches!(theorem, Theorem::Theta | Theorem::All) {
        reports.push(timed(&|| maps::verify_theta(e, s.w, s.budget))?);
    }
    if matches!(theorem, Theorem::Reduction | Theorem::All) {
        let n = e.rank();
        let sets: Vec<Vec<usize>> = if simple.is_empty() {
            (0..n).map(|v| vec![v]).collect()
        } else {
            if let Some(&v) = simple.iter().find(|&&v| v == 0 || v > n) {
                return Err(Failure::Input(format!("vertex {v} out of range 1..={n}")));
            }
            vec![simple.iter().map(|v| v - 1).collect()]
        };
        for set in sets {
            let t: Vec<_> = set.iter().map(|&v| e.simple(v)).collect();
            reports.push(timed(&|| perp::verify_reduction(e, &t, s.w, s.budget))?);
        }
    }
    Ok(reports)
}

fn emit_json(out: &mut String, v: &Value) {
    out.push_str(&serde_json::to_string(v).expect("json"));
    out.push('\n');
}

fn emit_reports(out: &mut String, reports: &[VerificationReport], format: Format) {
    match format {
        Format::Json => {
            if let [r] = reports {
                out.push_str(&r.to_json());
            } else {
                out.push_str(&serde_json::to_string(reports).expect("json"));
            }
            out.push('\n');
        }
        Format::Csv => {
            out.push_str("theorem,quiver,w,pass,counts,witness\n");
            for r in reports {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    csv_field(&r.theorem),
                    csv_field(&r.quiver),
                    r.w,
                    r.pass,
                    csv_field(&counts(&r.counts, ";")),
                    csv_field(r.witness.as_deref().unwrap_or(""))
                );
            }
        }
        Format::Table => {
            for r in reports {
                let verdict = if r.pass { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "[{verdict}] {} on {} (w = {}): {}", r.theorem, r.quiver, r.w, counts(&r.counts, ", "));
                if let Some(w) = &r.witness {
                    let _ = writeln!(out, "       witness: {w}");
                }
                if r.elapsed_ms > 0 {
                    let _ = writeln!(out, "       {} ms", r.elapsed_ms);
                }
            }
        }
    }
}

fn counts(c: &BTreeMap<String, u64>, sep: &str) -> String {
    c.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(sep)
}
