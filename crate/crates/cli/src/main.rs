//! Command-line front end: Reed-Muller, CSS/EA-CSS, and EA tensor product
//! code construction, rate tables, plane classification, symplectic
//! Gram-Schmidt on explicit check matrices, and the invariant suites.
//!
//! Exit codes: 0 success, 1 validation error, 2 capacity cap exceeded.
//! Errors go to standard error prefixed with `error:`.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num::{BigInt, BigUint, ToPrimitive};
use serde_json::{json, Value};

use rmtpc_core::ea::{build_ea_rm, ea_rm_params, ea_tpc_params};
use rmtpc_core::error::Error as CoreError;
use rmtpc_core::gf2::{Gf2Matrix, SymplecticVector};
use rmtpc_core::params::{ClassicalCodeParams, EaCodeParams};
use rmtpc_core::rate::{classify, rates, table_examples, table_l_r, Rate, RateReport};
use rmtpc_core::rm::{generator_matrix, parity_check_matrix, rm_params, RmSpec};
use rmtpc_core::tpc::tpc_params;
use rmtpc_core::verify;
use rmtpc_core::Caps;

#[derive(Parser)]
#[command(
    name = "rmtpc",
    version,
    about = "Exact Reed-Muller / CSS / EA tensor product code toolkit",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to a file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Override the matrix construction cap on the variable count m.
    #[arg(long, global = true)]
    cap_matrix_m: Option<u32>,

    /// Override the brute-force enumeration cap (log2 of the codebook size).
    #[arg(long, global = true)]
    cap_bruteforce_log2: Option<u32>,

    /// Override the containment-check cap on m1 + m2.
    #[arg(long, global = true)]
    cap_containment: Option<u32>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Classical Reed-Muller code parameters, with optional matrix output.
    Rm {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        m: u32,
        /// Emit the generator matrix in the matrix text format.
        #[arg(long)]
        emit_generator: bool,
        /// Emit the parity check matrix in the matrix text format.
        #[arg(long)]
        emit_parity: bool,
    },
    /// EA CSS code built from a single Reed-Muller code.
    EaRm {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        m: u32,
        /// Emit H, H_ex, H_ez, and the assembled extended check matrix.
        #[arg(long)]
        emit_extended: bool,
    },
    /// Classical tensor product of two Reed-Muller codes.
    Tpc {
        #[arg(long)]
        r1: u32,
        #[arg(long)]
        m1: u32,
        #[arg(long)]
        r2: u32,
        #[arg(long)]
        m2: u32,
    },
    /// EA tensor product code of two Reed-Muller codes, with rates.
    EaTpc {
        #[arg(long)]
        r1: u32,
        #[arg(long)]
        m1: u32,
        #[arg(long)]
        r2: u32,
        #[arg(long)]
        m2: u32,
    },
    /// Threshold table l(r) for r = 1..r_max.
    LrTable {
        #[arg(long)]
        r_max: u64,
    },
    /// Worked-examples table for a list of codes.
    ExamplesTable {
        /// Comma-separated specs, e.g. "1:4,2:6" for RM(1,4) and RM(2,6).
        #[arg(long)]
        specs: String,
    },
    /// Region classification of every (r, m) with m <= m_max.
    Classify {
        #[arg(long)]
        m_max: u32,
    },
    /// Symplectic Gram-Schmidt on a check matrix file ((x|z) rows).
    Sgs {
        /// Matrix file in the matrix text format, 2n columns per row.
        #[arg(long)]
        input: PathBuf,
    },
    /// Run a named invariant suite; nonzero exit on failure.
    Verify {
        /// One of: gf2, rm, tpc, ea, rate, properties, all.
        #[arg(long)]
        suite: String,
    },
}

struct Failure {
    message: String,
    code: u8,
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        let code = if e.is_capacity() { 2 } else { 1 };
        Failure {
            message: e.to_string(),
            code,
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            message: e.to_string(),
            code: 1,
        }
    }
}

fn fail(message: impl Into<String>) -> Failure {
    Failure {
        message: message.into(),
        code: 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                // clap renders its messages with an `error:` prefix already
                eprint!("{e}");
                return ExitCode::from(1);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let defaults = Caps::default();
    let caps = Caps {
        max_m: cli.cap_matrix_m.unwrap_or(defaults.max_m),
        bruteforce_log2: cli.cap_bruteforce_log2.unwrap_or(defaults.bruteforce_log2),
        containment_m_sum: cli.cap_containment.unwrap_or(defaults.containment_m_sum),
    };
    let format = cli.format;
    let (out, code) = match cli.command {
        Command::Rm {
            r,
            m,
            emit_generator,
            emit_parity,
        } => (cmd_rm(r, m, emit_generator, emit_parity, format, &caps)?, 0),
        Command::EaRm {
            r,
            m,
            emit_extended,
        } => (cmd_ea_rm(r, m, emit_extended, format, &caps)?, 0),
        Command::Tpc { r1, m1, r2, m2 } => (cmd_tpc(r1, m1, r2, m2, format)?, 0),
        Command::EaTpc { r1, m1, r2, m2 } => (cmd_ea_tpc(r1, m1, r2, m2, format)?, 0),
        Command::LrTable { r_max } => (cmd_lr_table(r_max, format)?, 0),
        Command::ExamplesTable { specs } => (cmd_examples_table(&specs, format)?, 0),
        Command::Classify { m_max } => (cmd_classify(m_max, format)?, 0),
        Command::Sgs { input } => (cmd_sgs(&input, format)?, 0),
        Command::Verify { suite } => cmd_verify(&suite, format)?,
    };
    match cli.output {
        Some(path) => fs::write(path, out)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(out.as_bytes())?;
        }
    }
    Ok(ExitCode::from(code))
}

// --- JSON helpers -------------------------------------------------------

fn big(v: &BigUint) -> Value {
    match v.to_u64() {
        Some(n) => json!(n),
        None => json!(v.to_string()),
    }
}

fn bigint(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(n) => json!(n),
        None => json!(v.to_string()),
    }
}

fn matrix_json(m: &Gf2Matrix) -> Value {
    let rows: Vec<String> = (0..m.rows()).map(|i| m.row(i).to_bitstring()).collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "data": rows })
}

fn rate_json(r: &Rate) -> Value {
    json!({ "exact": r.to_string(), "decimal": r.decimal() })
}

fn rates_json(r: &RateReport) -> Value {
    json!({
        "ea_rate": rate_json(&r.ea_rate),
        "tradeoff": [rate_json(&r.tradeoff.0), rate_json(&r.tradeoff.1)],
        "catalytic": rate_json(&r.catalytic),
        "catalytic_count": bigint(&r.catalytic_count),
    })
}

fn ea_params_json(p: &EaCodeParams) -> serde_json::Map<String, Value> {
    let mut map = serde_json::Map::new();
    map.insert("n".into(), big(&p.n));
    map.insert("k".into(), big(&p.k_logical));
    map.insert("d_lower".into(), big(&p.d_lower));
    map.insert("n_e".into(), big(&p.n_e));
    map
}

fn render_json(value: &Value) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn no_csv(sub: &str) -> Failure {
    fail(format!("csv output is not supported for `{sub}`"))
}

// --- subcommands ---------------------------------------------------------

fn classical_text(spec: RmSpec, c: &ClassicalCodeParams) -> String {
    format!("{spec}: {c} (rho = {})\n", c.rho())
}

fn cmd_rm(
    r: u32,
    m: u32,
    emit_generator: bool,
    emit_parity: bool,
    format: Format,
    caps: &Caps,
) -> Result<String, Failure> {
    let spec = RmSpec::new(r, m)?;
    let params = rm_params(spec);
    let emitting = emit_generator || emit_parity;
    let matrices = if emitting {
        let g = emit_generator
            .then(|| generator_matrix(spec, caps))
            .transpose()?;
        let h = emit_parity
            .then(|| parity_check_matrix(spec, caps))
            .transpose()?;
        Some((g, h))
    } else {
        None
    };
    match format {
        Format::Text => {
            let mut out = String::new();
            match &matrices {
                // matrix output stands alone so it can be piped and re-parsed
                Some((g, h)) => {
                    if let Some(g) = g {
                        out.push_str(&g.to_text());
                    }
                    if let Some(h) = h {
                        out.push_str(&h.to_text());
                    }
                }
                None => out.push_str(&classical_text(spec, &params)),
            }
            Ok(out)
        }
        Format::Json => {
            let mut map = serde_json::Map::new();
            map.insert("r".into(), json!(r));
            map.insert("m".into(), json!(m));
            map.insert("n".into(), big(&params.n));
            map.insert("k".into(), big(&params.k));
            map.insert("d".into(), big(&params.d));
            map.insert("rho".into(), big(&params.rho()));
            if let Some((g, h)) = &matrices {
                if let Some(g) = g {
                    map.insert("generator".into(), matrix_json(g));
                }
                if let Some(h) = h {
                    map.insert("parity".into(), matrix_json(h));
                }
            }
            Ok(render_json(&Value::Object(map)))
        }
        Format::Csv => {
            if emitting {
                return Err(fail(
                    "csv output cannot carry matrices; drop --emit-* or use json",
                ));
            }
            Ok(format!(
                "r,m,n,k,d,rho\n{r},{m},{},{},{},{}\n",
                params.n,
                params.k,
                params.d,
                params.rho()
            ))
        }
    }
}

fn cmd_ea_rm(
    r: u32,
    m: u32,
    emit_extended: bool,
    format: Format,
    caps: &Caps,
) -> Result<String, Failure> {
    let spec = RmSpec::new(r, m)?;
    let (classical, ea) = ea_rm_params(spec)?;
    let construction = if emit_extended {
        Some(build_ea_rm(spec, caps)?)
    } else {
        None
    };
    match format {
        Format::Text => {
            let mut out = String::new();
            match &construction {
                Some(c) => {
                    // H, H_ex, H_ez, then the assembled extended matrix;
                    // each block is self-delimiting in the text format
                    out.push_str(&c.parity.to_text());
                    out.push_str(&c.extension.x_extension_block().to_text());
                    out.push_str(&c.extension.z_extension_block().to_text());
                    out.push_str(&c.extension.matrix.to_text());
                }
                None => {
                    out.push_str(&classical_text(spec, &classical));
                    out.push_str(&format!("EA CSS code: {ea}\n"));
                }
            }
            Ok(out)
        }
        Format::Json => {
            let mut map = ea_params_json(&ea);
            if let Some(c) = &construction {
                map.insert("h".into(), matrix_json(&c.parity));
                map.insert("h_ex".into(), matrix_json(&c.extension.x_extension_block()));
                map.insert("h_ez".into(), matrix_json(&c.extension.z_extension_block()));
                map.insert("extended".into(), matrix_json(&c.extension.matrix));
            }
            Ok(render_json(&Value::Object(map)))
        }
        Format::Csv => {
            if emit_extended {
                return Err(fail(
                    "csv output cannot carry matrices; drop --emit-extended or use json",
                ));
            }
            Ok(format!(
                "r,m,n,k,d_lower,n_e\n{r},{m},{},{},{},{}\n",
                ea.n, ea.k_logical, ea.d_lower, ea.n_e
            ))
        }
    }
}

fn cmd_tpc(r1: u32, m1: u32, r2: u32, m2: u32, format: Format) -> Result<String, Failure> {
    let s1 = RmSpec::new(r1, m1)?;
    let s2 = RmSpec::new(r2, m2)?;
    let c1 = rm_params(s1);
    let c2 = rm_params(s2);
    let p = tpc_params(&c1, &c2);
    match format {
        Format::Text => Ok(format!(
            "tensor product of {s1} {c1} and {s2} {c2}: {p} (rho = {})\n",
            p.rho()
        )),
        Format::Json => Ok(render_json(&json!({
            "r1": r1, "m1": m1, "r2": r2, "m2": m2,
            "n": big(&p.n), "k": big(&p.k), "d": big(&p.d), "rho": big(&p.rho()),
        }))),
        Format::Csv => Ok(format!(
            "r1,m1,r2,m2,n,k,d,rho\n{r1},{m1},{r2},{m2},{},{},{},{}\n",
            p.n,
            p.k,
            p.d,
            p.rho()
        )),
    }
}

fn cmd_ea_tpc(r1: u32, m1: u32, r2: u32, m2: u32, format: Format) -> Result<String, Failure> {
    let s1 = RmSpec::new(r1, m1)?;
    let s2 = RmSpec::new(r2, m2)?;
    let ea = ea_tpc_params(s1, s2)?;
    let report = rates(&ea);
    match format {
        Format::Text => {
            let mut out = String::new();
            out.push_str(&format!("EA tensor product code of {s1} and {s2}: {ea}\n"));
            out.push_str(&format!(
                "EA rate:        {} = {}\n",
                report.ea_rate,
                report.ea_rate.decimal()
            ));
            out.push_str(&format!(
                "trade-off:      ({}, {}) = ({}, {})\n",
                report.tradeoff.0,
                report.tradeoff.1,
                report.tradeoff.0.decimal(),
                report.tradeoff.1.decimal()
            ));
            out.push_str(&format!(
                "catalytic rate: {} = {}\n",
                report.catalytic,
                report.catalytic.decimal()
            ));
            out.push_str(&format!("catalytic count: {}\n", report.catalytic_count));
            Ok(out)
        }
        Format::Json => {
            let mut map = serde_json::Map::new();
            map.insert("r1".into(), json!(r1));
            map.insert("m1".into(), json!(m1));
            map.insert("r2".into(), json!(r2));
            map.insert("m2".into(), json!(m2));
            for (k, v) in ea_params_json(&ea) {
                map.insert(k, v);
            }
            map.insert("rates".into(), rates_json(&report));
            Ok(render_json(&Value::Object(map)))
        }
        Format::Csv => Ok(format!(
            "r1,m1,r2,m2,n,k,d_lower,n_e,ea_rate,catalytic_rate,catalytic_count\n\
             {r1},{m1},{r2},{m2},{},{},{},{},{},{},{}\n",
            ea.n,
            ea.k_logical,
            ea.d_lower,
            ea.n_e,
            report.ea_rate.decimal(),
            report.catalytic.decimal(),
            report.catalytic_count
        )),
    }
}

fn cmd_lr_table(r_max: u64, format: Format) -> Result<String, Failure> {
    let table = table_l_r(r_max)?;
    match format {
        Format::Text => {
            let mut out = String::from("r l(r)\n");
            for row in &table.rows {
                out.push_str(&format!("{} {}\n", row.r, row.l));
            }
            out.push_str("ranges:\n");
            for range in &table.ranges {
                out.push_str(&format!(
                    "r in [{},{}] -> l(r) = {}\n",
                    range.r_lo, range.r_hi, range.l
                ));
            }
            Ok(out)
        }
        Format::Json => Ok(render_json(&json!({
            "rows": table.rows.iter().map(|r| json!({"r": r.r, "l": r.l})).collect::<Vec<_>>(),
            "ranges": table.ranges.iter()
                .map(|r| json!({"r_lo": r.r_lo, "r_hi": r.r_hi, "l": r.l}))
                .collect::<Vec<_>>(),
        }))),
        Format::Csv => {
            let mut out = String::from("r,l_r\n");
            for row in &table.rows {
                out.push_str(&format!("{},{}\n", row.r, row.l));
            }
            Ok(out)
        }
    }
}

fn parse_specs(text: &str) -> Result<Vec<RmSpec>, Failure> {
    text.split(',')
        .map(|part| {
            let part = part.trim();
            let (r, m) = part
                .split_once(':')
                .ok_or_else(|| fail(format!("bad spec {part:?}; expected r:m")))?;
            let r: u32 = r
                .trim()
                .parse()
                .map_err(|_| fail(format!("bad order in spec {part:?}")))?;
            let m: u32 = m
                .trim()
                .parse()
                .map_err(|_| fail(format!("bad variable count in spec {part:?}")))?;
            Ok(RmSpec::new(r, m)?)
        })
        .collect()
}

fn cmd_examples_table(specs: &str, format: Format) -> Result<String, Failure> {
    let specs = parse_specs(specs)?;
    let table = table_examples(&specs)?;
    match format {
        Format::Text => {
            let mut out = String::new();
            for row in &table.rows {
                out.push_str(&format!(
                    "{} C{}  EA RM {}  EA TPC {}  catalytic {} = {}{}\n",
                    row.spec,
                    row.classical,
                    row.ea_rm,
                    row.ea_tpc,
                    row.catalytic,
                    row.catalytic.decimal(),
                    row.note
                        .as_deref()
                        .map(|n| format!("  [{n}]"))
                        .unwrap_or_default()
                ));
            }
            Ok(out)
        }
        Format::Json => Ok(render_json(&Value::Array(
            table
                .rows
                .iter()
                .map(|row| {
                    json!({
                        "r": row.spec.r(),
                        "m": row.spec.m(),
                        "classical": {
                            "n": big(&row.classical.n),
                            "k": big(&row.classical.k),
                            "d": big(&row.classical.d),
                        },
                        "ea_rm": Value::Object(ea_params_json(&row.ea_rm)),
                        "ea_tpc": Value::Object(ea_params_json(&row.ea_tpc)),
                        "catalytic": rate_json(&row.catalytic),
                        "note": row.note,
                    })
                })
                .collect(),
        ))),
        Format::Csv => {
            let mut out = String::from(
                "r,m,n,k,d,ea_n,ea_k,ea_d_lower,ea_n_e,tpc_n,tpc_k,tpc_d_lower,tpc_n_e,catalytic_exact,catalytic_decimal,note\n",
            );
            for row in &table.rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                    row.spec.r(),
                    row.spec.m(),
                    row.classical.n,
                    row.classical.k,
                    row.classical.d,
                    row.ea_rm.n,
                    row.ea_rm.k_logical,
                    row.ea_rm.d_lower,
                    row.ea_rm.n_e,
                    row.ea_tpc.n,
                    row.ea_tpc.k_logical,
                    row.ea_tpc.d_lower,
                    row.ea_tpc.n_e,
                    row.catalytic,
                    row.catalytic.decimal(),
                    row.note.as_deref().unwrap_or("")
                ));
            }
            Ok(out)
        }
    }
}

fn cmd_classify(m_max: u32, format: Format) -> Result<String, Failure> {
    if m_max < 1 {
        return Err(fail("m_max must be at least 1"));
    }
    let mut triples = Vec::new();
    for m in 1..=m_max {
        for r in 0..=m {
            triples.push((m, r, classify(r, m)?));
        }
    }
    match format {
        // the plane is CSV triples by definition; text and csv agree
        Format::Text | Format::Csv => {
            let mut out = String::from("m,r,region\n");
            for (m, r, region) in &triples {
                out.push_str(&format!("{m},{r},{}\n", region.label()));
            }
            Ok(out)
        }
        Format::Json => Ok(render_json(&Value::Array(
            triples
                .iter()
                .map(|(m, r, region)| json!({"m": m, "r": r, "region": region.label()}))
                .collect(),
        ))),
    }
}

fn cmd_sgs(input: &PathBuf, format: Format) -> Result<String, Failure> {
    let text = fs::read_to_string(input)?;
    let matrix = Gf2Matrix::from_text(&text)?;
    if matrix.cols() % 2 != 0 {
        return Err(fail(format!(
            "sgs input must have an even column count (x|z rows), got {}",
            matrix.cols()
        )));
    }
    let gens: Vec<SymplecticVector> = (0..matrix.rows())
        .map(|i| SymplecticVector::from_check_row(&matrix.row(i)))
        .collect::<Result<_, _>>()?;
    let sgs = rmtpc_core::ea::symplectic_gram_schmidt(&gens)?;
    match format {
        Format::Text => {
            let mut out = String::new();
            out.push_str(&format!(
                "{} generators over {} qubits: {} pairs, {} isotropic\n",
                gens.len(),
                sgs.n,
                sgs.pair_count(),
                sgs.isotropic.len()
            ));
            for (p, (i, j)) in sgs.pair_positions.iter().enumerate() {
                out.push_str(&format!("pair {p}: rows ({i}, {j})\n"));
            }
            let isotropic: Vec<String> = sgs
                .isotropic_positions
                .iter()
                .map(|i| i.to_string())
                .collect();
            out.push_str(&format!("isotropic rows: [{}]\n", isotropic.join(", ")));
            out.push_str("h_ex:\n");
            out.push_str(&sgs.h_ex.to_text());
            out.push_str("h_ez:\n");
            out.push_str(&sgs.h_ez.to_text());
            Ok(out)
        }
        Format::Json => Ok(render_json(&json!({
            "qubits": sgs.n,
            "generators": gens.len(),
            "n_e": sgs.pair_count(),
            "pairs": sgs.pair_positions.iter().map(|&(i, j)| json!([i, j])).collect::<Vec<_>>(),
            "isotropic": sgs.isotropic_positions,
            "pair_vectors": sgs.pairs.iter()
                .map(|(a, b)| json!([a.to_string(), b.to_string()]))
                .collect::<Vec<_>>(),
            "isotropic_vectors": sgs.isotropic.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "h_ex": matrix_json(&sgs.h_ex),
            "h_ez": matrix_json(&sgs.h_ez),
        }))),
        Format::Csv => Err(no_csv("sgs")),
    }
}

fn cmd_verify(suite: &str, format: Format) -> Result<(String, u8), Failure> {
    let results = verify::run_suite(suite)?;
    let failures: usize = results.iter().map(|c| c.failures).sum();
    let out = match format {
        Format::Text => {
            let mut out = String::new();
            for check in &results {
                if check.passed() {
                    out.push_str(&format!("ok   {} ({} cases)\n", check.name, check.cases));
                } else {
                    out.push_str(&format!(
                        "FAIL {} ({}/{} cases failed): {}\n",
                        check.name,
                        check.failures,
                        check.cases,
                        check.detail.as_deref().unwrap_or("no detail")
                    ));
                }
            }
            out.push_str(&format!(
                "suite {suite}: {} checks, {failures} failures\n",
                results.len()
            ));
            out
        }
        Format::Json => render_json(&Value::Array(
            results
                .iter()
                .map(|c| {
                    json!({
                        "name": c.name,
                        "cases": c.cases,
                        "failures": c.failures,
                        "detail": c.detail,
                    })
                })
                .collect(),
        )),
        Format::Csv => return Err(no_csv("verify")),
    };
    Ok((out, u8::from(failures > 0)))
}
