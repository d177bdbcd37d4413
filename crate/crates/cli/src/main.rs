use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use octacomb::fibers::fiber_table;
use octacomb::perm::{all_signed, fc_signed, fc_unsigned};
use octacomb::qsym::{AnyQSym, TruncatedPoly};
use octacomb::rsk::{shape_of, try_bv_rsk};
use octacomb::verify::{run_check, Check, CheckOptions, VerificationReport};
use octacomb::words::classify;
use octacomb::SignedPermutation;

const DEFAULT_MAX_N: usize = 10;

#[derive(Parser)]
#[command(
    name = "octacomb",
    version,
    about = "Fully commutative signed permutations, domino tableaux and their quasi-symmetric generating functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Worker threads for the verification checks (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Omit timings so that repeated runs are byte-identical.
    #[arg(long, global = true)]
    canonical: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// List the elements of a family in lexicographic window order.
    Enumerate {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
    },
    /// Statistics of one signed permutation.
    Stats {
        /// Window such as `[-3,1,2]`.
        #[arg(long, allow_hyphen_values = true)]
        w: String,
    },
    /// Domino insertion tableaux.
    Rsk {
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        /// Also print the classical tableaux and every vacating step.
        #[arg(long)]
        trace: bool,
    },
    /// The fiber over an unsigned permutation, one row per element.
    Fiber {
        #[arg(long, allow_hyphen_values = true)]
        pi: String,
    },
    /// Expand a quasi-symmetric function stored as JSON in finitely many variables.
    Expand {
        #[arg(long)]
        qsym_file: PathBuf,
        /// Highest variable index kept; must be at least the degree.
        #[arg(long)]
        m: usize,
    },
    /// Run verification checks; exits 1 if any fails.
    Verify {
        /// Check name, or `all`.
        #[arg(long)]
        check: String,
        /// Rank, or an inclusive range such as `1-5`.
        #[arg(long)]
        n: String,
        /// Corrupt one input object in each check (harness self-test).
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// Fully commutative elements of `B_n`.
    Fc,
    /// Fully commutative (321-avoiding) elements of `S_n`.
    FcA,
    /// All of `B_n`.
    Signed,
}

#[derive(Serialize)]
struct StatsRow {
    window: String,
    length: usize,
    des_a: Vec<usize>,
    des_b: Vec<usize>,
    neg: Vec<usize>,
    rdes: Vec<usize>,
    bl: usize,
    bl_inv: usize,
    ldes: usize,
    ldes_inv: usize,
    fc: bool,
    class: Option<String>,
    shape: String,
}

impl StatsRow {
    fn of(w: &SignedPermutation) -> Result<Self> {
        let inv = w.inverse();
        let fc = w.is_fc();
        Ok(StatsRow {
            window: w.to_string(),
            length: w.length(),
            des_a: w.des_a().to_vec(),
            des_b: w.des_b().to_vec(),
            neg: w.neg().to_vec(),
            rdes: w.rdes().to_vec(),
            bl: w.block_number(),
            bl_inv: inv.block_number(),
            ldes: w.ldes(),
            ldes_inv: inv.ldes(),
            fc,
            class: if fc { Some(classify(w)?.to_string()) } else { None },
            shape: shape_of(w).to_string(),
        })
    }

    const HEADER: [&'static str; 13] = [
        "window", "length", "des_a", "des_b", "neg", "rdes", "bl", "bl_inv", "ldes", "ldes_inv", "fc", "class", "shape",
    ];

    fn csv_record(&self) -> Vec<String> {
        let set = |s: &[usize]| s.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        vec![
            self.window.clone(),
            self.length.to_string(),
            set(&self.des_a),
            set(&self.des_b),
            set(&self.neg),
            set(&self.rdes),
            self.bl.to_string(),
            self.bl_inv.to_string(),
            self.ldes.to_string(),
            self.ldes_inv.to_string(),
            self.fc.to_string(),
            self.class.clone().unwrap_or_default(),
            self.shape.clone(),
        ]
    }

    fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("stats serialize")
    }
}

struct Outcome {
    verified: bool,
}

fn parse_window(s: &str) -> Result<SignedPermutation> {
    s.parse().with_context(|| format!("cannot read window {s:?}"))
}

fn max_n() -> Result<usize> {
    match std::env::var("OCTACOMB_MAX_N") {
        Ok(v) => v.parse().with_context(|| format!("OCTACOMB_MAX_N={v:?} is not a number")),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn check_rank(n: usize) -> Result<()> {
    let cap = max_n()?;
    if n == 0 {
        bail!("rank must be at least 1");
    }
    if n > cap {
        bail!("rank {n} exceeds the cap {cap} (raise OCTACOMB_MAX_N to allow it)");
    }
    Ok(())
}

fn parse_ranks(s: &str) -> Result<Vec<usize>> {
    let (lo, hi) = match s.split_once('-') {
        Some((a, b)) => (a.trim().parse()?, b.trim().parse()?),
        None => {
            let n = s.trim().parse()?;
            (n, n)
        }
    };
    if lo > hi {
        bail!("empty rank range {s:?}");
    }
    for n in [lo, hi] {
        check_rank(n)?;
    }
    Ok((lo..=hi).collect())
}

fn write_csv(out: &mut impl Write, header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for r in rows {
        w.write_record(&r)?;
    }
    w.flush()?;
    Ok(())
}

fn enumerate(out: &mut impl Write, format: Format, family: Family, n: usize) -> Result<()> {
    check_rank(n)?;
    let set = match family {
        Family::Fc => fc_signed(n),
        Family::FcA => fc_unsigned(n),
        Family::Signed => all_signed(n),
    };
    match format {
        Format::Text => {
            for w in &set {
                writeln!(out, "{w}")?;
            }
        }
        Format::Json => {
            for w in &set {
                writeln!(out, "{}", StatsRow::of(w)?.to_json())?;
            }
        }
        Format::Csv => {
            let rows = set.iter().map(|w| StatsRow::of(w).map(|r| r.csv_record())).collect::<Result<Vec<_>>>()?;
            write_csv(out, &StatsRow::HEADER, rows)?;
        }
    }
    Ok(())
}

fn stats(out: &mut impl Write, format: Format, w: &str) -> Result<()> {
    let w = parse_window(w)?;
    check_rank(w.rank())?;
    let row = StatsRow::of(&w)?;
    match format {
        Format::Json => writeln!(out, "{}", row.to_json())?,
        Format::Csv => write_csv(out, &StatsRow::HEADER, [row.csv_record()])?,
        Format::Text => {
            let v = row.to_json();
            for (k, val) in v.as_object().expect("object") {
                let shown = match val {
                    Value::String(s) => s.clone(),
                    Value::Null => "-".into(),
                    other => other.to_string(),
                };
                writeln!(out, "{k:<9} {shown}")?;
            }
        }
    }
    Ok(())
}

fn rsk(out: &mut impl Write, format: Format, w: &str, trace: bool) -> Result<()> {
    let w = parse_window(w)?;
    check_rank(w.rank())?;
    let mut r = try_bv_rsk(&w)?;
    if !trace {
        r.p_trace.clear();
        r.q_trace.clear();
    }
    match format {
        Format::Json => {
            let mut v = serde_json::to_value(&r)?;
            let obj = v.as_object_mut().expect("object");
            obj.insert("window".into(), json!(w.to_string()));
            obj.insert("shape".into(), json!(r.shape().to_string()));
            if !trace {
                for k in ["p0", "q0", "p_trace", "q_trace", "palindromic"] {
                    obj.remove(k);
                }
            }
            writeln!(out, "{v}")?;
        }
        Format::Csv => bail!("rsk has no CSV form"),
        Format::Text => {
            writeln!(out, "w = {w}")?;
            if trace {
                let word: Vec<String> = r.palindromic.iter().map(i32::to_string).collect();
                writeln!(out, "w0 = [{}]", word.join(","))?;
                for (name, steps) in [("P", &r.p_trace), ("Q", &r.q_trace)] {
                    writeln!(out, "\n{name}:")?;
                    for (k, g) in steps.iter().enumerate() {
                        if k > 0 {
                            writeln!(out, "->")?;
                        }
                        writeln!(out, "{g}")?;
                    }
                }
                writeln!(out)?;
            }
            writeln!(out, "shape {}", r.shape())?;
            writeln!(out, "P(w):\n{}", r.p)?;
            writeln!(out, "Q(w):\n{}", r.q)?;
        }
    }
    Ok(())
}

fn fiber(out: &mut impl Write, format: Format, pi: &str) -> Result<()> {
    let pi = parse_window(pi)?;
    check_rank(pi.rank())?;
    let rows = fiber_table(&pi)?;
    match format {
        Format::Text => {
            let width = rows.iter().map(|r| r.window.to_string().len()).max().unwrap_or(0);
            for r in &rows {
                writeln!(out, "{:<width$}  {}", r.window.to_string(), r.expression())?;
            }
        }
        Format::Json => {
            for r in &rows {
                let v = json!({
                    "window": r.window.to_string(),
                    "mu_word": r.mu_word,
                    "pi_factors": r.pi_factors,
                    "expression": r.expression(),
                });
                writeln!(out, "{v}")?;
            }
        }
        Format::Csv => {
            let recs = rows.iter().map(|r| vec![r.window.to_string(), r.expression()]);
            write_csv(out, &["window", "expression"], recs)?;
        }
    }
    Ok(())
}

fn poly_rows(p: &TruncatedPoly) -> impl Iterator<Item = (String, &octacomb::QPoly)> {
    p.terms.iter().map(|(m, c)| (m.to_string(), c))
}

fn expand(out: &mut impl Write, format: Format, file: &PathBuf, m: usize) -> Result<()> {
    let text = std::fs::read_to_string(file).with_context(|| format!("cannot read {}", file.display()))?;
    let v: Value = serde_json::from_str(&text).with_context(|| format!("{} is not JSON", file.display()))?;
    let f = AnyQSym::from_json(&v)?;
    let p = f.expand(m)?;
    match format {
        Format::Text => writeln!(out, "{p}")?,
        Format::Json => {
            for (mono, c) in poly_rows(&p) {
                writeln!(out, "{}", json!({ "monomial": mono, "coeffs": c }))?;
            }
        }
        Format::Csv => {
            let recs = poly_rows(&p).map(|(mono, c)| vec![mono, c.to_string()]);
            write_csv(out, &["monomial", "coefficient"], recs)?;
        }
    }
    Ok(())
}

fn render_report(r: &VerificationReport, format: Format, canonical: bool) -> String {
    match format {
        Format::Json => r.to_json_line(canonical),
        Format::Csv => unreachable!("handled by the caller"),
        Format::Text => {
            let status = if r.passed() { "PASS" } else { "FAIL" };
            let time = if canonical { String::new() } else { format!(" ({} ms)", r.elapsed_ms) };
            let mut s = format!("{status} {} n={}{time}", r.check, r.n);
            if let Some(obj) = r.detail.as_object() {
                let scalars: Vec<String> = obj
                    .iter()
                    .filter(|(_, v)| !v.is_object() && !v.is_array())
                    .map(|(k, v)| format!("{k}={}", v.as_str().map_or_else(|| v.to_string(), str::to_string)))
                    .collect();
                if !scalars.is_empty() {
                    s.push_str("  ");
                    s.push_str(&scalars.join(" "));
                }
            }
            for c in r.counterexamples.iter().take(5) {
                s.push_str(&format!("\n  counterexample {c}"));
            }
            s
        }
    }
}

fn verify(out: &mut impl Write, cli: &Cli, check: &str, ranks: &str, inject_fault: bool) -> Result<Outcome> {
    let checks: Vec<Check> = if check == "all" { Check::ALL.to_vec() } else { vec![check.parse()?] };
    let ranks = parse_ranks(ranks)?;
    let opts = CheckOptions { workers: cli.workers, fault: inject_fault };
    let mut verified = true;
    let mut csv_rows = Vec::new();
    for &n in &ranks {
        for &c in &checks {
            let r = run_check(c, n, &opts)?;
            verified &= r.passed();
            if cli.format == Format::Csv {
                let mut rec = vec![r.check.clone(), r.n.to_string(), if r.passed() { "pass" } else { "fail" }.into()];
                if !cli.canonical {
                    rec.push(r.elapsed_ms.to_string());
                }
                rec.push(r.counterexamples.len().to_string());
                csv_rows.push(rec);
            } else {
                writeln!(out, "{}", render_report(&r, cli.format, cli.canonical))?;
                out.flush()?;
            }
        }
    }
    if cli.format == Format::Csv {
        let header: &[&str] = if cli.canonical {
            &["check", "n", "status", "counterexamples"]
        } else {
            &["check", "n", "status", "elapsed_ms", "counterexamples"]
        };
        write_csv(out, header, csv_rows)?;
    }
    Ok(Outcome { verified })
}

fn run(cli: &Cli) -> Result<Outcome> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let ok = Outcome { verified: true };
    match &cli.command {
        Command::Enumerate { family, n } => enumerate(&mut out, cli.format, *family, *n).map(|_| ok),
        Command::Stats { w } => stats(&mut out, cli.format, w).map(|_| ok),
        Command::Rsk { w, trace } => rsk(&mut out, cli.format, w, *trace).map(|_| ok),
        Command::Fiber { pi } => fiber(&mut out, cli.format, pi).map(|_| ok),
        Command::Expand { qsym_file, m } => expand(&mut out, cli.format, qsym_file, *m).map(|_| ok),
        Command::Verify { check, n, inject_fault } => verify(&mut out, cli, check, n, *inject_fault),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome { verified: true }) => ExitCode::SUCCESS,
        Ok(Outcome { verified: false }) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
