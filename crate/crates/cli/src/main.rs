use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use evenperm::algebra::{RatFunc, Series};
use evenperm::chebyshev::{chebyshev_u, cleared_u, cleared_w, r, verify_identity, Identity};
use evenperm::genfun::{Engine, GfTriple};
use evenperm::patterns::{
    CanonicalDecomposition, OracleQuery, ParityFilter, Perm, Statistic, DEFAULT_MAX_N,
};
use evenperm::verify::{run_all, run_family, Bounds, Family, Report};

const MAX_PATTERN_LEN: usize = 9;
const MAX_ORDER: usize = 30;
const DEFAULT_ORDER: usize = 20;

#[derive(Parser, Debug)]
#[command(
    name = "evenperm",
    version,
    about = "Even/odd 132-avoiding permutations: generating functions and enumeration"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    /// Lift the default limits on n, pattern length and series order.
    #[arg(long, global = true)]
    unsafe_bounds: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ParityArg {
    Even,
    Odd,
    Both,
}

impl From<ParityArg> for ParityFilter {
    fn from(p: ParityArg) -> Self {
        match p {
            ParityArg::Even => ParityFilter::Even,
            ParityArg::Odd => ParityFilter::Odd,
            ParityArg::Both => ParityFilter::Both,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count 132-avoiders of length n by brute force.
    Oracle(OracleArgs),
    /// Exact generating functions for a pattern.
    Genfun(GenfunArgs),
    /// Canonical decomposition of a pattern along its right-to-left maxima.
    Decompose {
        #[arg(long)]
        tau: String,
    },
    /// Chebyshev polynomials, the cleared forms and R_n.
    Chebyshev(ChebyshevArgs),
    /// Run verification sweeps.
    Verify(VerifyArgs),
    /// Series coefficients of E and O for a pattern.
    Series(SeriesArgs),
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long)]
    n: usize,
    /// Pattern to avoid (repeatable); 132 is always avoided.
    #[arg(long)]
    avoid: Vec<String>,
    /// PATTERN:COUNT, keep permutations with exactly COUNT occurrences.
    #[arg(long)]
    contain: Option<String>,
    #[arg(long, value_enum, default_value_t = ParityArg::Both)]
    parity: ParityArg,
    /// rlm or inc:J
    #[arg(long)]
    stat: Option<String>,
}

#[derive(Args, Debug)]
struct GenfunArgs {
    #[arg(long)]
    tau: String,
    #[arg(long, value_enum, default_value_t = ParityArg::Both)]
    parity: ParityArg,
    /// Number of series coefficients to print, minus one.
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    order: usize,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    #[arg(long)]
    tau: String,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    order: usize,
    #[arg(long, value_enum, default_value_t = ParityArg::Both)]
    parity: ParityArg,
}

#[derive(Args, Debug)]
struct ChebyshevArgs {
    #[command(subcommand)]
    action: Option<ChebyshevAction>,
    #[arg(long, default_value_t = 4)]
    n: usize,
}

#[derive(Subcommand, Debug)]
enum ChebyshevAction {
    /// Check the R_k identities.
    Verify {
        #[arg(long, default_value_t = 50)]
        max_k: usize,
        #[arg(long, default_value_t = 20)]
        max_pq: usize,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// increasing, kd, wedge, 213k, contain-once, contain-eqs, rlm,
    /// two-restrict, gk-xy, engine, examples, parity, chebyshev,
    /// coefficients or all
    #[arg(long, default_value = "all")]
    family: String,
    #[arg(long, default_value_t = 6)]
    max_k: usize,
    #[arg(long, default_value_t = 12)]
    max_n: usize,
    /// Also write the full report as JSON to this file.
    #[arg(long)]
    seed_report: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<evenperm::Error> for Failure {
    fn from(e: evenperm::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CliResult = Result<String, Failure>;

struct Limits {
    unsafe_bounds: bool,
}

impl Limits {
    fn check(&self, what: &str, value: usize, bound: usize) -> Result<(), Failure> {
        if !self.unsafe_bounds && value > bound {
            return Err(Failure::Usage(format!(
                "{what} = {value} exceeds {bound}; pass --unsafe-bounds to allow it"
            )));
        }
        Ok(())
    }

    fn pattern(&self, s: &str) -> Result<Perm, Failure> {
        let p: Perm = s.parse()?;
        self.check("pattern length", p.len(), MAX_PATTERN_LEN)?;
        Ok(p)
    }

    fn oracle_bound(&self, n: usize) -> usize {
        if self.unsafe_bounds {
            n.max(DEFAULT_MAX_N)
        } else {
            DEFAULT_MAX_N
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(out)) => {
            print!("{out}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> CliResult {
    let limits = Limits {
        unsafe_bounds: cli.unsafe_bounds,
    };
    let format = cli.format;
    match cli.command {
        Command::Oracle(a) => oracle(a, format, &limits),
        Command::Genfun(a) => genfun(a, format, &limits),
        Command::Decompose { tau } => decompose(&tau, format, &limits),
        Command::Chebyshev(a) => chebyshev(a, format, &limits),
        Command::Verify(a) => verify(a, format, &limits),
        Command::Series(a) => series(a, format, &limits),
    }
}

fn to_json(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn parse_stat(s: &str) -> Result<Statistic, Failure> {
    if s == "rlm" {
        return Ok(Statistic::Rlm);
    }
    s.strip_prefix("inc:")
        .and_then(|j| j.parse().ok())
        .map(Statistic::Inc)
        .ok_or_else(|| Failure::Usage(format!("unknown statistic {s:?}; use rlm or inc:J")))
}

fn oracle(a: OracleArgs, format: Format, limits: &Limits) -> CliResult {
    limits.check("n", a.n, DEFAULT_MAX_N)?;
    let mut q = OracleQuery::new(a.n).parity(a.parity.into());
    for p in &a.avoid {
        q = q.avoid(limits.pattern(p)?);
    }
    if let Some(arg) = &a.contain {
        let (pat, count) = arg.rsplit_once(':').ok_or_else(|| {
            Failure::Usage(format!("--contain expects PATTERN:COUNT, got {arg:?}"))
        })?;
        let count: u64 = count
            .parse()
            .map_err(|_| Failure::Usage(format!("bad occurrence count {count:?}")))?;
        q = q.contain(limits.pattern(pat)?, count);
    }
    let stat = a.stat.as_deref().map(parse_stat).transpose()?;
    if let Some(s) = &stat {
        q = q.statistic(s.clone());
    }
    let result = q.run_with_bound(limits.oracle_bound(a.n))?;
    let c = result.counts;
    let mut doc = serde_json::Map::new();
    doc.insert("n".into(), json!(a.n));
    doc.insert("constraints".into(), json!(q.constraints.to_string()));
    match a.parity {
        ParityArg::Even => {
            doc.insert("even".into(), json!(c.even));
        }
        ParityArg::Odd => {
            doc.insert("odd".into(), json!(c.odd));
        }
        ParityArg::Both => {
            doc.insert("even".into(), json!(c.even));
            doc.insert("odd".into(), json!(c.odd));
            doc.insert("total".into(), json!(c.total()));
        }
    }
    if let (Some(s), Some(dist)) = (&stat, &result.distribution) {
        doc.insert("statistic".into(), json!(s.to_string()));
        let rows: Vec<Value> = dist
            .iter()
            .map(|(v, pc)| json!({"value": v, "even": pc.even, "odd": pc.odd, "total": pc.total()}))
            .collect();
        doc.insert("distribution".into(), Value::Array(rows));
    }
    Ok(match format {
        Format::Json => to_json(&Value::Object(doc)),
        Format::Csv => {
            let mut out = String::new();
            match &result.distribution {
                Some(dist) => {
                    out.push_str("value,even,odd,total\n");
                    for (v, pc) in dist {
                        let _ = writeln!(out, "{v},{},{},{}", pc.even, pc.odd, pc.total());
                    }
                }
                None => {
                    out.push_str("n,even,odd,total\n");
                    let _ = writeln!(out, "{},{},{},{}", a.n, c.even, c.odd, c.total());
                }
            }
            out
        }
        Format::Text => {
            let mut out = format!("n = {}, {}\n", a.n, q.constraints);
            let _ = writeln!(out, "even {} odd {} total {}", c.even, c.odd, c.total());
            if let Some(dist) = &result.distribution {
                for (v, pc) in dist {
                    let _ = writeln!(out, "  {v}: even {} odd {}", pc.even, pc.odd);
                }
            }
            out
        }
    })
}

fn coeffs_json(s: &Series) -> Value {
    json!(s.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>())
}

fn coeffs_text(s: &Series) -> String {
    s.coeffs()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn triple_for(tau: &Perm) -> Result<GfTriple, Failure> {
    Ok(Engine::new().gftriple(tau)?)
}

fn genfun(a: GenfunArgs, format: Format, limits: &Limits) -> CliResult {
    let tau = limits.pattern(&a.tau)?;
    limits.check("order", a.order, MAX_ORDER)?;
    let t = triple_for(&tau)?;
    let (e, o) = (t.e.series(a.order)?, t.o.series(a.order)?);
    let parts: Vec<(&str, &RatFunc, Option<&Series>)> = match a.parity {
        ParityArg::Even => vec![("E", &t.e, Some(&e))],
        ParityArg::Odd => vec![("O", &t.o, Some(&o))],
        ParityArg::Both => vec![
            ("F", &t.f, None),
            ("M", &t.m, None),
            ("E", &t.e, Some(&e)),
            ("O", &t.o, Some(&o)),
        ],
    };
    Ok(match format {
        Format::Json => {
            let mut doc = serde_json::Map::new();
            doc.insert("tau".into(), json!(tau.to_string()));
            for (name, f, _) in &parts {
                doc.insert(
                    (*name).into(),
                    serde_json::to_value(f).expect("serializable"),
                );
            }
            let mut series = serde_json::Map::new();
            for (name, _, s) in &parts {
                if let Some(s) = s {
                    series.insert((*name).into(), coeffs_json(s));
                }
            }
            doc.insert("series".into(), Value::Object(series));
            to_json(&Value::Object(doc))
        }
        Format::Csv => series_csv(&e, &o, a.parity),
        Format::Text => {
            let mut out = format!("tau = {tau}\n");
            for (name, f, s) in &parts {
                let _ = writeln!(out, "{name} = {f}");
                if let Some(s) = s {
                    let _ = writeln!(out, "  {}", coeffs_text(s));
                }
            }
            out
        }
    })
}

fn series_csv(e: &Series, o: &Series, parity: ParityArg) -> String {
    let mut out = String::from(match parity {
        ParityArg::Even => "n,even\n",
        ParityArg::Odd => "n,odd\n",
        ParityArg::Both => "n,even,odd,total\n",
    });
    for n in 0..=e.order() {
        let (ce, co) = (e.coeff(n), o.coeff(n));
        let _ = match parity {
            ParityArg::Even => writeln!(out, "{n},{ce}"),
            ParityArg::Odd => writeln!(out, "{n},{co}"),
            ParityArg::Both => writeln!(out, "{n},{ce},{co},{}", ce + co),
        };
    }
    out
}

fn series(a: SeriesArgs, format: Format, limits: &Limits) -> CliResult {
    let tau = limits.pattern(&a.tau)?;
    limits.check("order", a.order, MAX_ORDER)?;
    let t = triple_for(&tau)?;
    let (e, o) = (t.e.series(a.order)?, t.o.series(a.order)?);
    Ok(match format {
        Format::Csv => series_csv(&e, &o, a.parity),
        Format::Json => {
            let doc = match a.parity {
                ParityArg::Even => json!({"tau": tau.to_string(), "even": coeffs_json(&e)}),
                ParityArg::Odd => json!({"tau": tau.to_string(), "odd": coeffs_json(&o)}),
                ParityArg::Both => json!({
                    "tau": tau.to_string(),
                    "even": coeffs_json(&e),
                    "odd": coeffs_json(&o),
                    "total": coeffs_json(&(&e + &o)),
                }),
            };
            to_json(&doc)
        }
        Format::Text => {
            let mut out = String::new();
            if a.parity != ParityArg::Odd {
                let _ = writeln!(out, "even: {}", coeffs_text(&e));
            }
            if a.parity != ParityArg::Even {
                let _ = writeln!(out, "odd: {}", coeffs_text(&o));
            }
            out
        }
    })
}

fn decompose(tau: &str, format: Format, limits: &Limits) -> CliResult {
    let tau = limits.pattern(tau)?;
    let dec = CanonicalDecomposition::new(&tau)?;
    let r = dec.r();
    let prefixes: Vec<String> = (0..=r).map(|d| dec.pi(d).to_string()).collect();
    let suffixes: Vec<String> = (0..=r + 1).map(|d| dec.sigma(d).to_string()).collect();
    Ok(match format {
        Format::Json => to_json(&json!({
            "tau": tau.to_string(),
            "r": r,
            "blocks": dec.blocks(),
            "prefixes": prefixes,
            "suffixes": suffixes,
        })),
        Format::Csv => {
            let mut out = String::from("d,segment,max,prefix,suffix\n");
            for (d, b) in dec.blocks().iter().enumerate() {
                let seg: Vec<String> = b.segment.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(
                    out,
                    "{d},{},{},{},{}",
                    seg.join(" "),
                    b.max,
                    prefixes[d],
                    suffixes[d]
                );
            }
            out
        }
        Format::Text => {
            let mut out = format!("tau = {tau}, r = {r}\n");
            for (d, b) in dec.blocks().iter().enumerate() {
                let seg: Vec<String> = b.segment.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(
                    out,
                    "block {d}: segment [{}] max {}  prefix {}  suffix {}",
                    seg.join(" "),
                    b.max,
                    prefixes[d],
                    suffixes[d]
                );
            }
            out
        }
    })
}

fn chebyshev(a: ChebyshevArgs, format: Format, limits: &Limits) -> CliResult {
    match a.action {
        Some(ChebyshevAction::Verify { max_k, max_pq }) => {
            limits.check("max-k", max_k, 200)?;
            limits.check("max-pq", max_pq, 40)?;
            let rk = (0..=max_k).all(|k| verify_identity(Identity::Rk { k }));
            let drk = (0..=max_k).all(|k| verify_identity(Identity::Drk { k }));
            let mut product = true;
            let mut sum = true;
            for p in 0..=max_pq {
                for q in 0..=max_pq {
                    product &= verify_identity(Identity::IrksProduct { p, q });
                    sum &= verify_identity(Identity::IrksSum { p, q });
                }
            }
            let rows = [
                ("recurrence", rk),
                ("cleared-ratio", drk),
                ("product", product),
                ("sum", sum),
            ];
            let out = match format {
                Format::Json => {
                    let m: serde_json::Map<String, Value> = rows
                        .iter()
                        .map(|(k, v)| ((*k).to_string(), json!(v)))
                        .collect();
                    to_json(&Value::Object(m))
                }
                Format::Csv => {
                    let mut out = String::from("identity,holds\n");
                    for (k, v) in rows {
                        let _ = writeln!(out, "{k},{v}");
                    }
                    out
                }
                Format::Text => rows
                    .iter()
                    .map(|(k, v)| format!("{k}: {}\n", if *v { "pass" } else { "fail" }))
                    .collect(),
            };
            if rows.iter().all(|(_, v)| *v) {
                Ok(out)
            } else {
                Err(Failure::Verification(out))
            }
        }
        None => {
            limits.check("n", a.n, 200)?;
            let u = chebyshev_u(a.n);
            let (w, uh, rn) = (cleared_w(a.n), cleared_u(a.n), r(a.n));
            Ok(match format {
                Format::Json => to_json(&json!({
                    "n": a.n,
                    "U": u,
                    "W_hat": w,
                    "U_hat": uh,
                    "R": rn,
                })),
                Format::Csv => {
                    let mut out = String::from("name,value\n");
                    for (k, v) in [
                        ("U", u.poly().to_string()),
                        ("W_hat", w.to_string()),
                        ("U_hat", uh.to_string()),
                        ("R", rn.to_string()),
                    ] {
                        let _ = writeln!(out, "{k},\"{v}\"");
                    }
                    out
                }
                Format::Text => format!(
                    "U_{n}(t) = {}\nW_{n}(x) = {w}\nÛ_{n}(x) = {uh}\nR_{n}(x) = {rn}\n",
                    u.poly(),
                    n = a.n
                ),
            })
        }
    }
}

fn verify(a: VerifyArgs, format: Format, limits: &Limits) -> CliResult {
    limits.check("max-k", a.max_k, MAX_PATTERN_LEN)?;
    limits.check("max-n", a.max_n, DEFAULT_MAX_N)?;
    let bounds = Bounds {
        max_k: a.max_k,
        max_n: a.max_n,
        oracle_bound: limits.oracle_bound(a.max_n),
    };
    let report: Report = if a.family == "all" {
        run_all(&bounds)
    } else {
        let family: Family = a.family.parse()?;
        run_family(family, &bounds)
    };
    if let Some(path) = &a.seed_report {
        std::fs::write(
            path,
            to_json(&serde_json::to_value(&report).expect("serializable")),
        )
        .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    let out = match format {
        Format::Json => to_json(&json!({
            "passed": report.passed(),
            "summary": report.to_text().lines().last().unwrap_or_default(),
            "checks": report.checks,
        })),
        Format::Csv => {
            let mut out = String::from("family,params,source,verdict,runtime_ms\n");
            for c in &report.checks {
                let _ = writeln!(
                    out,
                    "{},\"{}\",\"{}\",{},{}",
                    c.family, c.params, c.source, c.verdict, c.runtime_ms
                );
            }
            out
        }
        Format::Text => report.to_text(),
    };
    if report.passed() {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}
