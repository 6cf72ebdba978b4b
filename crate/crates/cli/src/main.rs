use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use lcdkit::code::{Analysis, RingAnalysis, DEFAULT_BUDGET};
use lcdkit::construct::bounds::BoundEntry;
use lcdkit::construct::jobs::{mds_report, parse_jobs, run_job, weighing_source, Job, JobOutput, MdsReport};
use lcdkit::construct::tables::{published_cells, reproduce_cell, table_search, PublishedCell, SearchRow};
use lcdkit::construct::{CodeAnalysis, ConstructionReport};
use lcdkit::cyclic::mds_mu_max;
use lcdkit::gf::FieldSpec;
use lcdkit::io::CodeFile;
use lcdkit::Error;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "lcdkit", version, about = "LCD and formally self-dual codes over F_q and F_q + vF_q + v^2F_q")]
struct Cli {
    /// Field for recipes and searches, e.g. `5`, `9` or `3^2:1,0,1`.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Base field of the ring `F_q + vF_q + v^2F_q` for ring recipes.
    #[arg(long, global = true)]
    ring: Option<String>,
    /// Most projective codewords enumerated per distance computation.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    #[arg(long, global = true, value_enum, default_value_t = Output::Human)]
    output: Output,
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Human,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a code file.
    Analyze { file: PathBuf },
    /// Reproduce the tables of LCD codes from weighing matrices.
    Tables {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        table: Option<u8>,
        #[arg(long)]
        p: Option<u32>,
        /// On a mismatch, evaluate every (alpha, beta) of the cell.
        #[arg(long)]
        spectrum: bool,
    },
    /// Run one recipe, e.g. `construct weighing alpha=2 w=w6_4 --field 3`.
    Construct { recipe: String, params: Vec<String> },
    /// Write the Gray image of a ring code file as a field code file.
    Gray {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Distance and LCD verdict of [alpha I | beta I + W] over a grid.
    Search {
        /// Weighing matrix: a bundled name, a Paley construction or a file.
        #[arg(long)]
        w: String,
        /// Values such as `1,2` or `1..5`; default all nonzero.
        #[arg(long)]
        alpha: Option<String>,
        /// Values such as `0..3`; default all.
        #[arg(long)]
        beta: Option<String>,
    },
    /// Cyclic MDS LCD codes of length q + 1.
    Mds {
        #[arg(long)]
        q: u32,
        /// Default: every admissible mu.
        #[arg(long)]
        mu: Option<u32>,
    },
    /// Run a job file.
    Run { file: PathBuf },
    /// Re-verify a structured report against a fresh computation.
    Verify { file: PathBuf },
}

/// Malformed command-line input.
#[derive(Debug)]
struct Usage(String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

/// A report that does not survive recomputation.
#[derive(Debug)]
struct Mismatch(String);

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "verification failed: {}", self.0)
    }
}

impl std::error::Error for Mismatch {}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<Usage>().is_some() {
        return 2;
    }
    match err.downcast_ref::<Error>() {
        Some(Error::Parse(_)) => 2,
        Some(Error::OracleDisagreement(_) | Error::CoefficientNotInBaseField | Error::NonIntegralResult) => 4,
        Some(Error::NotFound(_) | Error::BudgetExceeded { .. }) => 1,
        Some(_) => 3,
        None => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match dispatch(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn dispatch(cli: &Cli) -> anyhow::Result<()> {
    match &cli.command {
        Command::Analyze { file } => analyze(cli, file),
        Command::Tables { table, p, spectrum } => tables(cli, *table, *p, *spectrum),
        Command::Construct { recipe, params } => construct(cli, recipe, params),
        Command::Gray { file, out } => gray(cli, file, out.as_deref()),
        Command::Search { w, alpha, beta } => search(cli, w, alpha.as_deref(), beta.as_deref()),
        Command::Mds { q, mu } => mds(cli, *q, *mu),
        Command::Run { file } => run(cli, file),
        Command::Verify { file } => verify(cli, file),
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn emit(cli: &Cli, value: Value, human: impl FnOnce() -> String) {
    match cli.output {
        Output::Structured => println!("{}", serde_json::to_string_pretty(&value).expect("serializable")),
        Output::Human => print!("{}", human()),
    }
}

fn analyze_code(file: &CodeFile, budget: u64) -> lcdkit::Result<CodeAnalysis> {
    Ok(match file {
        CodeFile::Field(c) => CodeAnalysis::Field(c.analyze(budget)?),
        CodeFile::Ring(c) => CodeAnalysis::Ring(c.analyze(budget)?),
    })
}

fn analyze(cli: &Cli, path: &Path) -> anyhow::Result<()> {
    let file = CodeFile::parse(&read(path)?)?;
    let analysis = analyze_code(&file, cli.budget)?;
    let value = json!({ "type": "analysis", "analysis": analysis, "code_file": file.to_text() });
    emit(cli, value, || {
        let spec = match &file {
            CodeFile::Field(c) => format!("F_{}", c.spec().q()),
            CodeFile::Ring(c) => ring_name(c.spec().field()),
        };
        format!("{}\n{}", path.display(), show_analysis(&analysis, &spec))
    });
    Ok(())
}

fn ring_name(f: FieldSpec) -> String {
    let q = f.q();
    format!("F_{q} + vF_{q} + v^2F_{q}")
}

fn distance(d: Option<usize>, exact: bool) -> String {
    match d {
        None => "undefined (empty code)".into(),
        Some(d) if exact => format!("{d} (exact)"),
        Some(d) => format!("<= {d} (budget exceeded)"),
    }
}

fn opt(b: Option<bool>) -> String {
    b.map_or("unknown (budget exceeded)".into(), |b| b.to_string())
}

fn show_field(a: &Analysis, over: &str) -> String {
    format!(
        "  code         [{}, {}] over {over}\n  distance     {}\n  lcd          {}\n  self-dual    {}\n  fsd          {}\n  hull dim     {}\n",
        a.n,
        a.k,
        distance(a.d, a.d_exact),
        a.lcd,
        a.self_dual,
        opt(a.formally_self_dual),
        a.hull_dim
    )
}

fn show_ring(a: &RingAnalysis, over: &str) -> String {
    let q = over.split_whitespace().next().unwrap_or(over);
    let rank = a.rank.map_or("not free".into(), |r| format!("free of rank {r}"));
    let mut out = format!(
        "  code         length {} over {over}, |C| = {}^{}, components {:?}, {rank}\n",
        a.n,
        q.trim_start_matches("F_"),
        a.log_q_size,
        a.component_dims
    );
    out += &format!("  Lee dist     {}\n", distance(a.d_lee, a.d_exact));
    out += &format!("  Hamming dist {}\n", distance(a.d_hamming, a.d_exact));
    out += &format!("  lcd          {}\n", a.lcd);
    if let Some(g) = a.gram_nonsingular {
        out += &format!("  GG^t nonsing {g}\n");
    }
    out += &format!("  self-dual    {}\n", a.self_dual);
    out += &format!("  fsd (Lee)    {}\n", opt(a.formally_self_dual));
    out += &format!("  fsd (Ham)    {}\n", opt(a.formally_self_dual_hamming));
    out += &format!("  hull dim     {}\n", a.hull_dim);
    let g = &a.gray;
    out += &format!(
        "  Gray image   [{}, {}, {}]\n",
        g.n,
        g.k,
        g.d.map_or("-".into(), |d| if g.d_exact { d.to_string() } else { format!("<={d}") })
    );
    out
}

fn show_analysis(a: &CodeAnalysis, over: &str) -> String {
    match a {
        CodeAnalysis::Field(a) => show_field(a, over),
        CodeAnalysis::Ring(a) => show_ring(a, over),
    }
}

fn show_construction(r: &ConstructionReport) -> String {
    let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let over = match &r.code {
        lcdkit::construct::BuiltCode::Field(c) => format!("F_{}", c.spec().q()),
        lcdkit::construct::BuiltCode::Ring(c) => ring_name(c.spec().field()),
    };
    let mut out = format!("{} {}\n{}", r.recipe, params.join(" "), show_analysis(&r.analysis, &over));
    for f in &r.flags {
        out += &format!("  note         {f}\n");
    }
    out
}

fn show_mds(m: &MdsReport) -> String {
    format!(
        "mds q={} mu={}\n  code         [{}, {}, {}] over F_{} ({})\n  generator    {}\n  self-recip.  {}\n  lcd          {}\n  singleton    {}\n",
        m.q,
        m.mu,
        m.n,
        m.k,
        m.d,
        m.q,
        if m.d_exact { "exact" } else { "upper bound" },
        m.generator,
        m.self_reciprocal,
        m.lcd,
        m.singleton
    )
}

fn show_bound(b: &BoundEntry) -> String {
    format!(
        "bound LCD[{}, {}]_{} >= {}{}\n  witness      {}\n  singleton    {}\n",
        b.n,
        b.k,
        b.q,
        b.d_lower,
        if b.exact { "" } else { " (witness distance is an upper bound)" },
        b.witness,
        b.singleton
    )
}

fn show_output(o: &JobOutput) -> String {
    match o {
        JobOutput::Construction(r) => show_construction(r),
        JobOutput::Mds(m) => show_mds(m),
        JobOutput::Bound(b) => show_bound(b),
    }
}

/// Adds `field=` or `ring=` from the global flags when a job lacks both.
fn with_spec(cli: &Cli, mut job: Job) -> Job {
    if !job.params.contains_key("field") && !job.params.contains_key("ring") {
        if let Some(r) = &cli.ring {
            job.params.insert("ring".into(), r.clone());
        } else if let Some(f) = &cli.field {
            job.params.insert("field".into(), f.clone());
        }
    }
    job
}

fn construct(cli: &Cli, recipe: &str, params: &[String]) -> anyhow::Result<()> {
    let line = format!("{recipe} {}", params.join(" "));
    let job = with_spec(cli, parse_jobs(&line)?.remove(0));
    let out = run_job(&job, Path::new("."), cli.budget)?;
    emit(cli, serde_json::to_value(&out)?, || show_output(&out));
    Ok(())
}

fn run(cli: &Cli, path: &Path) -> anyhow::Result<()> {
    let text = read(path)?;
    let base = path.parent().unwrap_or(Path::new("."));
    let mut outputs = Vec::new();
    for job in parse_jobs(&text)? {
        let job = with_spec(cli, job);
        let out = run_job(&job, base, cli.budget).with_context(|| format!("{}:{}", path.display(), job.line))?;
        if cli.output == Output::Human {
            print!("{}", show_output(&out));
        }
        outputs.push(out);
    }
    if cli.output == Output::Structured {
        println!("{}", serde_json::to_string_pretty(&outputs)?);
    }
    Ok(())
}

fn gray(cli: &Cli, path: &Path, out: Option<&Path>) -> anyhow::Result<()> {
    let CodeFile::Ring(code) = CodeFile::parse(&read(path)?)? else {
        return Err(Usage("gray needs a ring code file".into()).into());
    };
    let image = code.gray_image();
    let text = CodeFile::Field(image.clone()).to_text();
    if let Some(dest) = out {
        std::fs::write(dest, &text).with_context(|| format!("cannot write {}", dest.display()))?;
    }
    let value = json!({ "type": "code", "n": image.n(), "k": image.k(), "code_file": text });
    emit(cli, value, || {
        if out.is_some() {
            format!("[{}, {}] Gray image written\n", image.n(), image.k())
        } else {
            text.clone()
        }
    });
    Ok(())
}

fn parse_values(s: &str, q: u32) -> Result<Vec<u32>, Usage> {
    let bad = || Usage(format!("bad value list {s:?}: use e.g. `1,2` or `0..{q}`"));
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim) {
        if let Some((a, b)) = part.split_once("..") {
            let a: u32 = a.parse().map_err(|_| bad())?;
            let b: u32 = match b.strip_prefix('=') {
                Some(b) => b.parse::<u32>().map_err(|_| bad())? + 1,
                None => b.parse().map_err(|_| bad())?,
            };
            out.extend(a..b);
        } else {
            out.push(part.parse().map_err(|_| bad())?);
        }
    }
    if out.iter().any(|&x| x >= q) {
        return Err(Usage(format!("values in {s:?} must be below {q}")));
    }
    Ok(out)
}

fn field_flag(cli: &Cli) -> anyhow::Result<FieldSpec> {
    let Some(f) = &cli.field else {
        return Err(Usage("--field is required".into()).into());
    };
    Ok(f.parse()?)
}

fn search(cli: &Cli, w: &str, alpha: Option<&str>, beta: Option<&str>) -> anyhow::Result<()> {
    let spec = field_flag(cli)?;
    if spec.r() != 1 {
        return Err(Usage("search takes a prime field".into()).into());
    }
    let q = spec.q();
    let wm = weighing_source(w, Path::new("."))?;
    let alphas = alpha.map_or(Ok((1..q).collect()), |s| parse_values(s, q))?;
    let betas = beta.map_or(Ok((0..q).collect()), |s| parse_values(s, q))?;
    let rows = table_search(&wm, spec, &alphas, &betas, cli.budget)?;
    emit(cli, serde_json::to_value(&rows)?, || show_search(&rows, wm.n(), wm.k(), q));
    Ok(())
}

fn show_search(rows: &[SearchRow], n: usize, k: usize, q: u32) -> String {
    let mut out =
        format!("[alpha I | beta I + W] with W of order {n}, weight {k}, over F_{q}\n  alpha beta  d    lcd\n");
    for r in rows {
        let d = if r.d_exact { r.d.to_string() } else { format!("<={}", r.d) };
        out += &format!("  {:>5} {:>4}  {:<4} {}\n", r.alpha, r.beta, d, r.lcd);
    }
    out
}

fn mds(cli: &Cli, q: u32, mu: Option<u32>) -> anyhow::Result<()> {
    let mus: Vec<u32> = match mu {
        Some(m) => vec![m],
        None => (1..=mds_mu_max(q)).collect(),
    };
    let reports = mus.iter().map(|&m| mds_report(q, m, cli.budget)).collect::<lcdkit::Result<Vec<_>>>()?;
    let outputs: Vec<JobOutput> = reports.into_iter().map(JobOutput::Mds).collect();
    let value = if outputs.len() == 1 { serde_json::to_value(&outputs[0])? } else { serde_json::to_value(&outputs)? };
    emit(cli, value, || outputs.iter().map(show_output).collect());
    Ok(())
}

fn cell_value(cell: &PublishedCell, budget: u64, spectrum: bool) -> lcdkit::Result<Value> {
    let mut v = serde_json::to_value(reproduce_cell(cell, budget, spectrum)?).expect("serializable");
    v["type"] = json!("cell");
    Ok(v)
}

fn show_cell(v: &Value) -> String {
    let c = &v["cell"];
    let beta = if c["beta"].is_null() { "-".to_string() } else { c["beta"].to_string() };
    let head = format!(
        "  {:>5} {:>3} {:>3}  {:>5} {:>4}  {:>9}",
        c["table"].to_string(),
        c["p"].to_string(),
        c["n"].to_string(),
        c["alpha"].to_string(),
        beta,
        c["d"].to_string()
    );
    let d = if v["d_exact"] == json!(true) { v["d"].to_string() } else { format!("<={}", v["d"]) };
    let verdict = match &v["matches"] {
        Value::Bool(true) => "match".to_string(),
        Value::Bool(false) => "MISMATCH".to_string(),
        _ => "inexact".to_string(),
    };
    let verdict =
        if v["feasible"] == json!(false) { format!("{verdict} ({} codewords)", v["codewords"]) } else { verdict };
    let mut out = format!("{head}  {d:>8}  {:<5}  {verdict}\n", v["lcd"].to_string());
    if let Some(rows) = v["spectrum"].as_array().filter(|r| !r.is_empty()) {
        let items: Vec<String> = rows.iter().map(|r| format!("({},{}):{}", r["alpha"], r["beta"], r["d"])).collect();
        out += &format!("      spectrum {}\n", items.join(" "));
    }
    out
}

fn tables(cli: &Cli, table: Option<u8>, p: Option<u32>, spectrum: bool) -> anyhow::Result<()> {
    let cells: Vec<PublishedCell> = published_cells()
        .into_iter()
        .filter(|c| table.is_none_or(|t| c.table == t) && p.is_none_or(|p| c.p == p))
        .collect();
    if cells.is_empty() {
        return Err(Usage("no table entries match the filters".into()).into());
    }
    let values = cells.iter().map(|c| cell_value(c, cli.budget, spectrum)).collect::<lcdkit::Result<Vec<_>>>()?;
    emit(cli, Value::Array(values.clone()), || {
        let mut out = format!(
            "  {:>5} {:>3} {:>3}  {:>5} {:>4}  {:>9}  {:>8}  lcd\n",
            "table", "p", "N", "alpha", "beta", "published", "computed"
        );
        out += &values.iter().map(show_cell).collect::<String>();
        out
    });
    Ok(())
}

fn check(ok: bool, what: impl FnOnce() -> String) -> anyhow::Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Mismatch(what()).into())
    }
}

fn verify_entry(v: &Value, budget: u64) -> anyhow::Result<String> {
    let kind = v["type"].as_str().ok_or_else(|| Usage("report entry without a type".into()))?;
    match kind {
        "construction" | "analysis" => {
            let text = v["code_file"].as_str().ok_or_else(|| Usage("report entry without code_file".into()))?;
            let fresh = serde_json::to_value(analyze_code(&CodeFile::parse(text)?, budget)?)?;
            check(fresh == v["analysis"], || format!("analysis differs: recomputed {fresh}"))?;
            Ok(format!("{kind} {}", v["recipe"].as_str().unwrap_or("")))
        }
        "mds" => {
            let num = |k: &str| v[k].as_u64().map(|x| x as u32).ok_or_else(|| Usage(format!("mds entry without {k}")));
            let (q, mu) = (num("q")?, num("mu")?);
            let fresh = serde_json::to_value(JobOutput::Mds(mds_report(q, mu, budget)?))?;
            check(&fresh == v, || format!("mds q={q} mu={mu} differs: recomputed {fresh}"))?;
            Ok(format!("mds q={q} mu={mu}"))
        }
        "bound" => {
            let text = v["code_file"].as_str().ok_or_else(|| Usage("bound entry without code_file".into()))?;
            let CodeFile::Field(code) = CodeFile::parse(text)? else {
                return Err(Usage("bound witness must be a field code".into()).into());
            };
            let d = code.min_distance(budget)?;
            let claimed = v["d_lower"].as_u64().unwrap_or(0) as usize;
            check(code.is_lcd()? && d.d == claimed && d.exact == (v["exact"] == json!(true)), || {
                format!("bound witness gives d={} exact={} lcd={:?}", d.d, d.exact, code.is_lcd())
            })?;
            Ok(format!("bound LCD[{}, {}] >= {claimed}", code.n(), code.k()))
        }
        "cell" => {
            let c = &v["cell"];
            let key = |k: &str| c[k].as_u64().unwrap_or(0);
            let cell = published_cells()
                .into_iter()
                .find(|x| x.table as u64 == key("table") && x.p as u64 == key("p") && x.n as u64 == key("n"))
                .ok_or_else(|| Usage("unknown table entry".into()))?;
            let spectrum = v["spectrum"].as_array().is_some_and(|s| !s.is_empty());
            let fresh = cell_value(&cell, budget, spectrum)?;
            check(&fresh == v, || {
                format!("table {} p={} N={} differs: recomputed {fresh}", cell.table, cell.p, cell.n)
            })?;
            Ok(format!("table {} p={} N={}", cell.table, cell.p, cell.n))
        }
        other => bail!(Usage(format!("cannot verify entries of type {other:?}"))),
    }
}

fn verify(cli: &Cli, path: &Path) -> anyhow::Result<()> {
    let value: Value = serde_json::from_str(&read(path)?).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    let entries = match value {
        Value::Array(items) => items,
        single => vec![single],
    };
    let mut verified = Vec::new();
    for v in &entries {
        verified.push(verify_entry(v, cli.budget)?);
    }
    emit(cli, json!({ "type": "verified", "entries": verified }), || {
        verified.iter().map(|s| format!("ok  {s}\n")).collect()
    });
    Ok(())
}
