//! Command-line front end: exact verification, monogenic decomposition,
//! kernel bases and dimension tables, coefficient tables, and single
//! operator application.
//!
//! Exit codes: 0 = success, 1 = identity failure, 2 = usage/parse error,
//! 3 = size cap exceeded.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::io::Read;
use std::process::ExitCode;
use sympdirac::fischer::{self, coeff_a, coeff_a_display, coeff_c};
use sympdirac::kernel::{self, monogenic_basis, slice_dimension};
use sympdirac::ops::{
    self, apply_ds, apply_euler, apply_gamma, apply_xs, clifford_apply, l_star, rho_star,
    CliffordGen, QuadraticClifford, SpKind,
};
use sympdirac::textio;
use sympdirac::verify::{run_verify, VerifyConfig};
use sympdirac::weights;
use sympdirac::{Error, Parity, SPoly, ScalarMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScalarArg {
    Rational,
    Gaussian,
}

impl From<ScalarArg> for ScalarMode {
    fn from(v: ScalarArg) -> ScalarMode {
        match v {
            ScalarArg::Rational => ScalarMode::Rational,
            ScalarArg::Gaussian => ScalarMode::Gaussian,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputArg {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "sympdirac",
    about = "Exact computer algebra for the symplectic Dirac operator",
    version
)]
struct Cli {
    /// Half-dimension n (variables x1..x2n, q1..qn). Commands default to 1;
    /// `verify` sweeps n in {1,2,3} when this is not set.
    #[arg(long, global = true)]
    n: Option<usize>,

    /// Coefficient field: rational rejects the imaginary unit.
    #[arg(long, global = true, value_enum, default_value_t = ScalarArg::Gaussian)]
    scalar: ScalarArg,

    /// Spinor-degree cap for solver commands.
    #[arg(long, global = true, default_value_t = 4)]
    dmax: usize,

    /// Maximum allowed domain dimension for matrix computations.
    #[arg(long = "size-cap", global = true, default_value_t = 200_000)]
    size_cap: usize,

    /// Output format (not every command supports every format).
    #[arg(long, global = true, value_enum, default_value_t = OutputArg::Text)]
    output: OutputArg,

    /// Seed for randomized verification; printed in reports.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the exact identity suite and report each law.
    Verify {
        /// Samples per relation law.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Maximum base degree of sampled polynomials.
        #[arg(long = "max-degree", default_value_t = 4)]
        max_degree: u32,
        /// Maximum spinor degree of sampled polynomials.
        #[arg(long = "max-spinor-degree", default_value_t = 4)]
        max_spinor_degree: u32,
        /// Mutation hook for testing the suite itself: flips the sign of
        /// X_s inside the sl2 relation checks.
        #[arg(long = "sabotage-xs-sign", hide = true)]
        sabotage_xs_sign: bool,
    },
    /// Split a polynomial into monogenic components, one block per base
    /// degree. Reads the argument, or --file, or stdin when both are absent.
    Decompose {
        input: Option<String>,
        /// Read the polynomial from a file instead.
        #[arg(long, conflicts_with = "input")]
        file: Option<std::path::PathBuf>,
    },
    /// Print an exact basis of the degree-k monogenics up to the spinor cap.
    Basis {
        #[arg(long)]
        k: usize,
    },
    /// Kernel dimension table over k <= kmax, d <= dmax, split by parity.
    Dimtable {
        #[arg(long)]
        kmax: usize,
    },
    /// Coefficient tables: c_{j,k,l}, the projector a^{i,k}_j (recursion and
    /// displayed closed form, flagged when they differ), and Casimir
    /// eigenvalues.
    Coeffs {
        #[arg(long)]
        k: usize,
    },
    /// Apply one named operator to a polynomial. Operators: ds, xs, euler,
    /// gamma, e:J, f:J, x:I,J, y:I,J, z:I,J, rho:ee:I,J, rho:ff:I,J,
    /// rho:ef:I,J, l:ee:I,J, l:ff:I,J, l:ef:I,J.
    Apply {
        #[arg(long)]
        op: String,
        input: Option<String>,
        /// Read the polynomial from a file instead.
        #[arg(long, conflicts_with = "input")]
        file: Option<std::path::PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {}", err);
            match err {
                Error::SizeCap { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    if cli.n == Some(0) {
        return Err(Error::ArgOutOfRange("--n must be at least 1".into()));
    }
    if cli.size_cap == 0 {
        return Err(Error::ArgOutOfRange("--size-cap must be at least 1".into()));
    }
    let mode: ScalarMode = cli.scalar.into();
    match &cli.command {
        Command::Verify {
            samples,
            max_degree,
            max_spinor_degree,
            sabotage_xs_sign,
        } => {
            let cfg = VerifyConfig {
                ns: match cli.n {
                    Some(n) => (1..=n).collect(),
                    None => vec![1, 2, 3],
                },
                max_base_degree: *max_degree,
                max_spinor_degree: *max_spinor_degree,
                samples: *samples,
                seed: cli.seed,
                mode,
                sabotage_xs_sign: *sabotage_xs_sign,
            };
            let report = run_verify(&cfg);
            match cli.output {
                OutputArg::Text => print!("{}", report.render_text()),
                OutputArg::Json => {
                    let laws: Vec<_> = report
                        .laws
                        .iter()
                        .map(|l| {
                            json!({
                                "law": l.law,
                                "passed": l.passed,
                                "samples": l.samples,
                                "detail": l.detail,
                            })
                        })
                        .collect();
                    let doc = json!({
                        "seed": cfg.seed,
                        "scalar_mode": mode_name(mode),
                        "all_passed": report.all_passed(),
                        "laws": laws,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
                OutputArg::Csv => {
                    println!("law,passed,samples,detail");
                    for l in &report.laws {
                        println!(
                            "{},{},{},{}",
                            l.law,
                            l.passed,
                            l.samples,
                            csv_quote(&l.detail)
                        );
                    }
                }
            }
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::Decompose { input, file } => {
            let n = cli.n.unwrap_or(1);
            let text = read_input(input, file)?;
            let poly = textio::parse_with_mode(text.trim(), n, mode)?;
            let mut parts = Vec::new();
            let mut reconstruction = SPoly::zero(n);
            for k in poly.base_degrees() {
                let graded = poly.graded_part(k);
                // Projection working space: base degree k, spinor degree up
                // to the input's plus 2k operator steps.
                let d = graded.spinor_degree().unwrap_or(0) as usize;
                guard_cap(n, k as usize, d + 2 * k as usize, cli.size_cap)?;
                let result = fischer::decompose(&graded)?;
                reconstruction = reconstruction.try_add(&result.reconstruct(n))?;
                parts.push((k, graded, result));
            }
            let ok = reconstruction == poly;
            match cli.output {
                OutputArg::Text => {
                    println!("input: {}", textio::serialize(&poly));
                    if parts.is_empty() {
                        println!("components: none");
                    }
                    for (k, _graded, result) in &parts {
                        println!("degree {}:", k);
                        for comp in result.components.iter().rev() {
                            println!(
                                "  ell = {}, xs_power = {}: {}",
                                comp.ell,
                                result.k - comp.ell,
                                textio::serialize(&comp.m)
                            );
                        }
                    }
                    println!("reconstruction: {}", if ok { "ok" } else { "MISMATCH" });
                }
                OutputArg::Json => {
                    let blocks: Vec<_> = parts
                        .iter()
                        .map(|(k, graded, result)| {
                            let comps: Vec<_> = result
                                .components
                                .iter()
                                .map(|c| {
                                    json!({
                                        "ell": c.ell,
                                        "xs_power": result.k - c.ell,
                                        "m": textio::serialize(&c.m),
                                        "terms": textio::to_json(&c.m),
                                    })
                                })
                                .collect();
                            json!({
                                "k": k,
                                "graded_part": textio::serialize(graded),
                                "components": comps,
                            })
                        })
                        .collect();
                    let doc = json!({
                        "n": n,
                        "input": textio::serialize(&poly),
                        "parts": blocks,
                        "reconstruction_ok": ok,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
                OutputArg::Csv => {
                    println!("k,ell,xs_power,component");
                    for (_, _, result) in &parts {
                        for comp in result.components.iter().rev() {
                            println!(
                                "{},{},{},{}",
                                result.k,
                                comp.ell,
                                result.k - comp.ell,
                                csv_quote(&textio::serialize(&comp.m))
                            );
                        }
                    }
                }
            }
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }

        Command::Basis { k } => {
            let n = cli.n.unwrap_or(1);
            guard_cap(n, *k, cli.dmax, cli.size_cap)?;
            let basis = monogenic_basis(n, *k, cli.dmax, None);
            let eig = weights::casimir_eigenvalue(*k, n);
            match cli.output {
                OutputArg::Text => {
                    println!(
                        "monogenic basis: n = {}, k = {}, dmax = {}",
                        n, k, cli.dmax
                    );
                    println!("kernel dimension = {}", basis.dimension());
                    println!("casimir eigenvalue = {}", eig);
                    for (idx, v) in basis.vectors.iter().enumerate() {
                        println!(
                            "  [{}] parity = {}: {}",
                            idx,
                            parity_name(v.spinor_parity()),
                            textio::serialize(v)
                        );
                    }
                }
                OutputArg::Json => {
                    let vectors: Vec<_> = basis
                        .vectors
                        .iter()
                        .map(|v| {
                            json!({
                                "parity": parity_name(v.spinor_parity()),
                                "poly": textio::serialize(v),
                                "terms": textio::to_json(v),
                            })
                        })
                        .collect();
                    let doc = json!({
                        "n": n,
                        "k": k,
                        "dmax": cli.dmax,
                        "dim": basis.dimension(),
                        "casimir_eigenvalue": eig.to_string(),
                        "vectors": vectors,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
                OutputArg::Csv => {
                    println!("index,parity,poly");
                    for (idx, v) in basis.vectors.iter().enumerate() {
                        println!(
                            "{},{},{}",
                            idx,
                            parity_name(v.spinor_parity()),
                            csv_quote(&textio::serialize(v))
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Dimtable { kmax } => {
            let n = cli.n.unwrap_or(1);
            let rows = kernel::dimension_table(n, *kmax, cli.dmax, cli.size_cap)?;
            match cli.output {
                OutputArg::Text | OutputArg::Csv => {
                    print!("{}", kernel::dimension_table_csv(&rows));
                }
                OutputArg::Json => {
                    let rows: Vec<_> = rows
                        .iter()
                        .map(|r| {
                            json!({
                                "n": r.n,
                                "k": r.k,
                                "dmax": r.d,
                                "parity": r.parity.map_or("all", Parity::as_str),
                                "dim": r.dim,
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&rows).unwrap());
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Coeffs { k } => {
            let n = cli.n.unwrap_or(1);
            let k = *k;
            match cli.output {
                OutputArg::Text => {
                    println!("coefficient tables: n = {}, k = {}", n, k);
                    println!("c_(j,k,l) with D_s^j X_s^k m_l = c X_s^(k-j) m_l:");
                    for j in 0..=k {
                        for l in 0..=k {
                            println!("  j = {}, l = {}: {}", j, l, coeff_c(j, k, l, n));
                        }
                    }
                    println!("projector table a^(i,k)_j (recursion vs displayed form):");
                    for i in 0..=k {
                        for j in 0..=(k - i) {
                            let a = coeff_a(i, k, j, n)?;
                            let d = coeff_a_display(i, k, j, n)?;
                            println!(
                                "  i = {}, j = {}: a = {}, displayed = {}{}",
                                i,
                                j,
                                a,
                                d,
                                if a == d { "" } else { "  [differs]" }
                            );
                        }
                    }
                    println!("casimir eigenvalues on monogenics:");
                    for ell in 0..=k {
                        println!("  ell = {}: {}", ell, weights::casimir_eigenvalue(ell, n));
                    }
                }
                OutputArg::Json => {
                    let mut c_rows = Vec::new();
                    for j in 0..=k {
                        for l in 0..=k {
                            c_rows.push(json!({
                                "j": j, "l": l,
                                "value": coeff_c(j, k, l, n).to_string(),
                            }));
                        }
                    }
                    let mut a_rows = Vec::new();
                    for i in 0..=k {
                        for j in 0..=(k - i) {
                            let a = coeff_a(i, k, j, n)?;
                            let d = coeff_a_display(i, k, j, n)?;
                            a_rows.push(json!({
                                "i": i, "j": j,
                                "recursion": a.to_string(),
                                "displayed": d.to_string(),
                                "differs": a != d,
                            }));
                        }
                    }
                    let eig: Vec<_> = (0..=k)
                        .map(|ell| {
                            json!({
                                "ell": ell,
                                "value": weights::casimir_eigenvalue(ell, n).to_string(),
                            })
                        })
                        .collect();
                    let doc = json!({
                        "n": n, "k": k,
                        "c": c_rows,
                        "a": a_rows,
                        "casimir_eigenvalues": eig,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
                OutputArg::Csv => {
                    println!("kind,i,j,l,value,displayed,differs");
                    for j in 0..=k {
                        for l in 0..=k {
                            println!("c,,{},{},{},,", j, l, coeff_c(j, k, l, n));
                        }
                    }
                    for i in 0..=k {
                        for j in 0..=(k - i) {
                            let a = coeff_a(i, k, j, n)?;
                            let d = coeff_a_display(i, k, j, n)?;
                            println!("a,{},{},,{},{},{}", i, j, a, d, a != d);
                        }
                    }
                    for ell in 0..=k {
                        println!(
                            "casimir,{},,,{},,",
                            ell,
                            weights::casimir_eigenvalue(ell, n)
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Apply { op, input, file } => {
            let n = cli.n.unwrap_or(1);
            let text = read_input(input, file)?;
            let poly = textio::parse_with_mode(text.trim(), n, mode)?;
            let result = apply_named(op, &poly, mode)?;
            match cli.output {
                OutputArg::Text => println!("{}", textio::serialize(&result)),
                OutputArg::Json => {
                    let doc = json!({
                        "n": n,
                        "op": op,
                        "input": textio::serialize(&poly),
                        "result": textio::serialize(&result),
                        "terms": textio::to_json(&result),
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
                OutputArg::Csv => {
                    return Err(Error::ArgOutOfRange(
                        "apply does not support csv output".into(),
                    ))
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn guard_cap(n: usize, k: usize, dmax: usize, cap: usize) -> Result<(), Error> {
    let dim = slice_dimension(n, k, dmax);
    if dim > num_dim(cap) {
        return Err(Error::SizeCap {
            k,
            d: dmax,
            dim: usize::try_from(&dim).unwrap_or(usize::MAX),
            cap,
        });
    }
    Ok(())
}

fn num_dim(cap: usize) -> num_bigint::BigUint {
    num_bigint::BigUint::from(cap)
}

fn mode_name(mode: ScalarMode) -> &'static str {
    match mode {
        ScalarMode::Rational => "rational",
        ScalarMode::Gaussian => "gaussian",
    }
}

fn parity_name(p: Option<Parity>) -> &'static str {
    match p {
        Some(Parity::Even) => "even",
        Some(Parity::Odd) => "odd",
        None => "mixed",
    }
}

fn csv_quote(text: &str) -> String {
    if text.contains(',') || text.contains('"') {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}

fn read_input(
    input: &Option<String>,
    file: &Option<std::path::PathBuf>,
) -> Result<String, Error> {
    if let Some(path) = file {
        return std::fs::read_to_string(path).map_err(|e| {
            Error::ArgOutOfRange(format!("failed to read {}: {}", path.display(), e))
        });
    }
    match input.as_deref() {
        Some("-") | None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::ArgOutOfRange(format!("failed to read stdin: {}", e)))?;
            Ok(buf)
        }
        Some(text) => Ok(text.to_string()),
    }
}

fn parse_index(part: &str) -> Result<usize, Error> {
    part.trim()
        .parse::<usize>()
        .map_err(|_| Error::ArgOutOfRange(format!("bad generator index '{}'", part)))
}

fn parse_index_pair(part: &str) -> Result<(usize, usize), Error> {
    let (i, j) = part
        .split_once(',')
        .ok_or_else(|| Error::ArgOutOfRange(format!("expected 'i,j' indices, got '{}'", part)))?;
    Ok((parse_index(i)?, parse_index(j)?))
}

fn quad_word(shape: &str, i: usize, j: usize) -> Result<QuadraticClifford, Error> {
    Ok(match shape {
        "ee" => QuadraticClifford::ee(i, j),
        "ff" => QuadraticClifford::ff(i, j),
        "ef" => QuadraticClifford::ef_sym(i, j),
        other => {
            return Err(Error::ArgOutOfRange(format!(
                "unknown quadratic shape '{}' (expected ee, ff or ef)",
                other
            )))
        }
    })
}

fn apply_named(op: &str, poly: &SPoly, mode: ScalarMode) -> Result<SPoly, Error> {
    let n = poly.n();
    let lower = op.to_ascii_lowercase();
    match lower.as_str() {
        "ds" | "d_s" => return Ok(apply_ds(poly)),
        "xs" | "x_s" => return Ok(apply_xs(poly)),
        "euler" | "e" => return Ok(apply_euler(poly)),
        "gamma" | "g" => return Ok(apply_gamma(poly)),
        _ => {}
    }
    if let Some((head, rest)) = lower.split_once(':') {
        match head {
            "e" => return clifford_apply(CliffordGen::E, parse_index(rest)?, poly),
            "f" => return clifford_apply(CliffordGen::F, parse_index(rest)?, poly),
            "x" | "y" | "z" => {
                let (i, j) = parse_index_pair(rest)?;
                let kind = match head {
                    "x" => SpKind::X,
                    "y" => SpKind::Y,
                    _ => SpKind::Z,
                };
                return ops::sp_vectorfield(kind, i, j, poly);
            }
            "rho" | "l" => {
                let (shape, indices) = rest.split_once(':').ok_or_else(|| {
                    Error::ArgOutOfRange(format!("expected '{}:<shape>:<i,j>', got '{}'", head, op))
                })?;
                let (i, j) = parse_index_pair(indices)?;
                let word = quad_word(shape, i, j)?;
                return if head == "rho" {
                    rho_star(n, word)?.vectorfield_apply(poly)
                } else {
                    l_star(n, word, mode)?.apply(poly)
                };
            }
            _ => {}
        }
    }
    Err(Error::ArgOutOfRange(format!(
        "unknown operator '{}' (see `apply --help` for the operator list)",
        op
    )))
}
