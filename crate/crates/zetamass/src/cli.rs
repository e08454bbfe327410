//! Command-line surface: a thin dispatcher over the library.
//!
//! Exit-code protocol: 0 success, 2 input error, 3 computation error,
//! 4 assertion-style check failed (e.g. `--check-fe` on a table whose
//! functional equation does not hold).  Results go to stdout; diagnostics go
//! to stderr.  Identical invocations produce byte-identical output.

use crate::curvezeta::{effective_divisor_counts, rh_check, zeta_display, zeta_special_value};
use crate::error::{Error, Result};
use crate::exactmath::{fmt_decimal, fmt_qq, parse_qq, QQ};
use crate::io::{read_ab_file, read_curve_file, RunManifest};
use crate::masscalc::{
    compositions, hn_series_partial, inversion_consistency, ks_coefficient,
    ks_total_from_semistable, siegel_volume_nf, total_mass_ff, weng_semistable_volume_nf,
    wz_average_identity, wz_individual_mass, zagier_semistable_mass, KsConvention, MassTableNF,
};
use crate::periods::{period_eval, sl2_group_zeta, PeriodConfig, SignConvention};
use crate::rootsys::{build_root_system, conjecture_coeffs, CoeffFlavor, RootType};
use crate::wittenvol::witten_zeta_su;
use crate::zetassembly::{assemble_zeta, extract_numerator, functional_equation_check};
use clap::{Parser, Subcommand};
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "zetamass",
    version,
    about = "Exact zeta, mass, and volume computations for curves over finite fields"
)]
struct Cli {
    /// Decimal digits of working precision for numeric results.
    #[arg(long, global = true, default_value_t = 40)]
    prec: u32,
    /// Seed for randomized numeric subroutines (root finding).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Echo the deterministic run manifest before the result.
    #[arg(long, global = true)]
    manifest: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Artin zeta operations on a curve file.
    Curve {
        #[command(subcommand)]
        op: CurveOp,
    },
    /// Mass and volume identities (function field and number field).
    Mass {
        #[command(subcommand)]
        op: MassOp,
    },
    /// Rank-n zeta assembly from an alpha/beta table file.
    Zeta {
        #[command(subcommand)]
        op: ZetaOp,
    },
    /// Root-system tables and conjecture coefficients.
    Rootsys {
        #[command(subcommand)]
        op: RootsysOp,
    },
    /// Witten zeta values for SU(n).
    Witten {
        #[command(subcommand)]
        op: WittenOp,
    },
    /// Period evaluation with the Gamma_R factor.
    Period {
        #[command(subcommand)]
        op: PeriodOp,
    },
}

#[derive(Subcommand)]
enum CurveOp {
    /// Print the zeta function as a canonical rational expression.
    Zeta {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Exact special value of the completed zeta at integer k >= 1.
    Special {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        k: u64,
    },
    /// Effective divisor counts for degrees 0..=dmax, as CSV.
    Divisors {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        dmax: usize,
    },
    /// Verify all numerator roots have modulus q^{-1/2} within a tolerance.
    Rh {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
}

#[derive(Subcommand)]
enum MassOp {
    /// Total mass m_{X,n} (exact rational).
    Total {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Semistable mass via the closed alternating formula (exact rational).
    Zagier {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: i64,
    },
    /// Parabolic-reduction shell partial sums up to a weight cap, as CSV.
    Hnseries {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        cap: i64,
    },
    /// Average (degree-summed) mass identity: layers and exact check.
    Wzavg {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Individual-degree mass evaluation (numeric roots-of-unity sum).
    Wzind {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: i64,
    },
    /// Siegel volume: product of completed Riemann zeta values.
    Siegel {
        #[arg(long)]
        n: usize,
    },
    /// Semistable volume for SL_n(Z) (alternating composition sum).
    Wengss {
        #[arg(long)]
        n: usize,
    },
    /// Inverse-relation coefficients and total under one convention.
    Ks {
        #[arg(long)]
        convention: String,
        #[arg(long)]
        n: usize,
    },
    /// Symbolic inversion-consistency report for both conventions.
    Invcheck {
        #[arg(long)]
        nmax: usize,
        /// Write the report to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ZetaOp {
    /// Assemble the rank-n zeta from a table file; print its numerator.
    Assemble {
        #[arg(long)]
        table: PathBuf,
        /// Additionally verify the functional equation (exit 4 on failure).
        #[arg(long)]
        check_fe: bool,
    },
}

#[derive(Subcommand)]
enum RootsysOp {
    /// Conjectural parabolic-reduction coefficients for one root system.
    Coeffs {
        /// Root system family: A, B, C, D, or G.
        #[arg(long = "type")]
        system: String,
        #[arg(long)]
        rank: usize,
        /// Coefficient flavor: NF, FF (requires --q), or RS.
        #[arg(long)]
        flavor: String,
        /// Prime power (or rational > 1) for the FF flavor.
        #[arg(long)]
        q: Option<String>,
        /// Print the full per-parabolic table instead of the summary line.
        #[arg(long)]
        full: bool,
    },
}

#[derive(Subcommand)]
enum WittenOp {
    /// Partial Witten zeta sum over SU(n) weights with a certified tail bound.
    Zeta {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: i64,
        #[arg(long)]
        cutoff: u64,
    },
}

#[derive(Subcommand)]
enum PeriodOp {
    /// Evaluate the Weyl-sum period at an exact rational lambda.
    Eval {
        #[arg(long = "in")]
        input: PathBuf,
        /// Root system family (default A).
        #[arg(long = "type", default_value = "A")]
        system: String,
        /// Rank; defaults to the number of lambda coordinates.
        #[arg(long)]
        rank: Option<usize>,
        /// Comma-separated pairings <lambda, alpha_i^vee>, e.g. "2" or "2,5/2".
        #[arg(long)]
        lambda: String,
        /// Sign convention: all_plus or length_sign.
        #[arg(long, default_value = "all_plus")]
        sign: String,
    },
    /// Tabulate the A1 period at sample points, as CSV.
    Table {
        #[arg(long = "in")]
        input: PathBuf,
        /// Comma-separated s samples, e.g. "2,5/2,3".
        #[arg(long)]
        samples: String,
        /// Optional rank-2 alpha/beta table for the comparison column.
        #[arg(long)]
        table: Option<PathBuf>,
        /// Sign convention: all_plus or length_sign.
        #[arg(long, default_value = "all_plus")]
        sign: String,
    },
}

fn path_str(p: &Path) -> String {
    p.display().to_string()
}

fn parse_qq_list(text: &str) -> Result<Vec<QQ>> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed.split(',').map(parse_qq).collect()
}

fn csv_line(out: &mut String, cells: &[String]) {
    let _ = writeln!(out, "{}", cells.join(","));
}

fn dispatch(cli: &Cli) -> Result<(RunManifest, String)> {
    let prec = cli.prec;
    let digits = prec as usize;
    match &cli.command {
        Command::Curve { op } => match op {
            CurveOp::Zeta { input } => {
                let manifest = RunManifest::new("curve zeta")
                    .with_input(path_str(input))
                    .with_precision(prec);
                let curve = read_curve_file(input)?;
                Ok((manifest, format!("{}\n", zeta_display(&curve))))
            }
            CurveOp::Special { input, k } => {
                let manifest = RunManifest::new("curve special")
                    .with_input(path_str(input))
                    .with_param("k", k)
                    .with_precision(prec);
                let curve = read_curve_file(input)?;
                let v = zeta_special_value(&curve, *k)?;
                Ok((manifest, format!("{}\n", fmt_qq(&v))))
            }
            CurveOp::Divisors { input, dmax } => {
                let manifest = RunManifest::new("curve divisors")
                    .with_input(path_str(input))
                    .with_param("dmax", dmax)
                    .with_precision(prec);
                let curve = read_curve_file(input)?;
                let counts = effective_divisor_counts(&curve, *dmax);
                let mut out = String::from("d,count\n");
                for (d, c) in counts.iter().enumerate() {
                    csv_line(&mut out, &[d.to_string(), c.to_string()]);
                }
                Ok((manifest, out))
            }
            CurveOp::Rh { input, tol } => {
                let manifest = RunManifest::new("curve rh")
                    .with_input(path_str(input))
                    .with_param("tol", format!("{tol:e}"))
                    .with_precision(prec)
                    .with_seed(cli.seed);
                let curve = read_curve_file(input)?;
                let report = rh_check(&curve, *tol, prec, cli.seed)?;
                let mut out = String::new();
                for (root, dev) in report.roots.iter().zip(&report.deviations) {
                    let _ = writeln!(
                        out,
                        "root = {} + {}i, deviation = {}",
                        fmt_decimal(&root.re, 20),
                        fmt_decimal(&root.im, 20),
                        fmt_decimal(dev, 3)
                    );
                }
                let _ = writeln!(out, "max_deviation = {:.3e}", report.max_deviation);
                if !report.pass {
                    return Err(Error::check_failed(format!(
                        "RH: fail (max deviation {:.3e} >= tolerance {tol:e})",
                        report.max_deviation
                    )));
                }
                let _ = writeln!(out, "RH: pass");
                Ok((manifest, out))
            }
        },
        Command::Mass { op } => match op {
            MassOp::Total { input, n } => {
                let manifest = RunManifest::new("mass total")
                    .with_input(path_str(input))
                    .with_param("n", n)
                    .with_precision(prec);
                let curve = read_curve_file(input)?;
                let v = total_mass_ff(&curve, *n)?;
                Ok((manifest, format!("{}\n", fmt_qq(&v))))
            }
            MassOp::Zagier { input, n, d } => {
                let manifest = RunManifest::new("mass zagier")
                    .with_input(path_str(input))
                    .with_param("n", n)
                    .with_param("d", d)
                    .with_precision(prec);
                let curve = read_curve_file(input)?;
                let v = zagier_semistable_mass(&curve, *n, *d)?;
                Ok((manifest, format!("{}\n", fmt_qq(&v))))
            }
            MassOp::Hnseries { input, n, d, cap } => {
                let manifest = RunManifest::new("mass hnseries")
                    .with_input(path_str(input))
                    .with_param("n", n)
                    .with_param("d", d)
                    .with_param("cap", cap)
                    .with_precision(prec);
                let curve = read_curve_file(input)?;
                let mut out = String::from("cap,partial_sum,last_shell\n");
                for j in 0..=*cap {
                    let p = hn_series_partial(&curve, *n, *d, j)?;
                    csv_line(
                        &mut out,
                        &[j.to_string(), fmt_qq(&p.partial_sum), fmt_qq(&p.last_shell)],
                    );
                }
                Ok((manifest, out))
            }
            MassOp::Wzavg { input, n } => {
                let manifest = RunManifest::new("mass wzavg")
                    .with_input(path_str(input))
                    .with_param("n", n)
                    .with_precision(prec);
                let curve = read_curve_file(input)?;
                let avg = wz_average_identity(&curve, *n)?;
                let mut out = String::new();
                let _ = writeln!(out, "lhs = {}", fmt_qq(&avg.lhs));
                let _ = writeln!(out, "rhs = {}", fmt_qq(&avg.rhs));
                for (i, layer) in avg.layers.iter().enumerate() {
                    let _ = writeln!(out, "layer k={} = {}", i + 1, fmt_qq(layer));
                }
                if !avg.pass {
                    return Err(Error::check_failed("average mass identity: fail"));
                }
                let _ = writeln!(out, "identity: pass");
                Ok((manifest, out))
            }
            MassOp::Wzind { input, n, d } => {
                let manifest = RunManifest::new("mass wzind")
                    .with_input(path_str(input))
                    .with_param("n", n)
                    .with_param("d", d)
                    .with_precision(prec);
                let curve = read_curve_file(input)?;
                let ind = wz_individual_mass(&curve, *n, *d, prec)?;
                let mut out = String::new();
                let _ = writeln!(out, "value = {}", fmt_decimal(&ind.value, digits));
                let _ = writeln!(out, "total_mass = {}", fmt_qq(&ind.reference));
                let _ = writeln!(out, "deviation = {}", fmt_decimal(&ind.deviation, 6));
                let _ = writeln!(
                    out,
                    "imag_residual = {}",
                    fmt_decimal(&ind.imag_residual, 3)
                );
                Ok((manifest, out))
            }
            MassOp::Siegel { n } => {
                let manifest = RunManifest::new("mass siegel")
                    .with_param("n", n)
                    .with_precision(prec);
                let v = siegel_volume_nf(*n, prec)?;
                Ok((manifest, format!("{}\n", fmt_decimal(&v, digits))))
            }
            MassOp::Wengss { n } => {
                let manifest = RunManifest::new("mass wengss")
                    .with_param("n", n)
                    .with_precision(prec);
                let v = weng_semistable_volume_nf(*n, prec)?;
                Ok((manifest, format!("{}\n", fmt_decimal(&v, digits))))
            }
            MassOp::Ks { convention, n } => {
                let manifest = RunManifest::new("mass ks")
                    .with_param("convention", convention)
                    .with_param("n", n)
                    .with_precision(prec);
                let conv = KsConvention::parse(convention)?;
                let mut out = String::new();
                for comp in compositions(*n)? {
                    let c = ks_coefficient(comp.parts(), conv);
                    let parts: Vec<String> =
                        comp.parts().iter().map(|p| p.to_string()).collect();
                    let _ = writeln!(out, "c({}) = {}", parts.join(","), fmt_qq(&c));
                }
                let table = MassTableNF::semistable(*n, prec)?;
                let total = ks_total_from_semistable(*n, &table, conv)?;
                let _ = writeln!(out, "total = {}", fmt_decimal(&total, digits));
                Ok((manifest, out))
            }
            MassOp::Invcheck { nmax, out } => {
                let mut manifest = RunManifest::new("mass invcheck")
                    .with_param("nmax", nmax)
                    .with_precision(prec);
                let report = inversion_consistency(*nmax)?;
                let text = report.to_text();
                match out {
                    Some(path) => {
                        manifest = manifest.with_param("out", path_str(path));
                        std::fs::write(path, &text).map_err(|e| {
                            Error::input(format!(
                                "cannot write report {}: {e}",
                                path.display()
                            ))
                        })?;
                        Ok((manifest, format!("wrote {}\n", path.display())))
                    }
                    None => Ok((manifest, text)),
                }
            }
        },
        Command::Zeta { op } => match op {
            ZetaOp::Assemble { table, check_fe } => {
                let manifest = RunManifest::new("zeta assemble")
                    .with_input(path_str(table))
                    .with_param("check_fe", check_fe)
                    .with_precision(prec);
                let ab = read_ab_file(table)?;
                let z = assemble_zeta(&ab);
                let numerator = extract_numerator(&z)?;
                let coeffs: Vec<String> = numerator.coeffs().iter().map(fmt_qq).collect();
                let mut out = format!("numerator = [{}]\n", coeffs.join(", "));
                if *check_fe {
                    let fe = functional_equation_check(&z);
                    if !fe.pass {
                        return Err(Error::check_failed("FE: fail"));
                    }
                    let _ = writeln!(out, "FE: pass");
                }
                Ok((manifest, out))
            }
        },
        Command::Rootsys { op } => match op {
            RootsysOp::Coeffs {
                system,
                rank,
                flavor,
                q,
                full,
            } => {
                let mut manifest = RunManifest::new("rootsys coeffs")
                    .with_param("type", system)
                    .with_param("rank", rank)
                    .with_param("flavor", flavor)
                    .with_precision(prec);
                let root_type = RootType::parse(system)?;
                let rs = build_root_system(root_type, *rank)?;
                let flavor = match flavor.trim() {
                    "NF" => CoeffFlavor::NumberField,
                    "FF" => {
                        let q_str = q.as_ref().ok_or_else(|| {
                            Error::input("FF flavor requires --q (a rational > 1)")
                        })?;
                        manifest = manifest.with_param("q", q_str);
                        CoeffFlavor::FunctionField {
                            q: parse_qq(q_str)?,
                        }
                    }
                    "RS" => CoeffFlavor::RiemannSurface {
                        precision_digits: prec,
                    },
                    other => {
                        return Err(Error::input(format!(
                            "unknown flavor '{other}': expected NF, FF, or RS"
                        )))
                    }
                };
                let table = conjecture_coeffs(&rs, &flavor)?;
                let out = if *full {
                    table.to_text()
                } else {
                    format!("{}\n", table.summary())
                };
                Ok((manifest, out))
            }
        },
        Command::Witten { op } => match op {
            WittenOp::Zeta { n, s, cutoff } => {
                let manifest = RunManifest::new("witten zeta")
                    .with_param("n", n)
                    .with_param("s", s)
                    .with_param("cutoff", cutoff)
                    .with_precision(prec);
                let z = witten_zeta_su(*n, *s, *cutoff, prec)?;
                let mut out = String::new();
                let _ = writeln!(out, "value = {}", fmt_decimal(&z.value, digits));
                let _ = writeln!(out, "tail_bound = {}", fmt_decimal(&z.tail_bound, 6));
                let _ = writeln!(out, "terms = {}", z.terms);
                Ok((manifest, out))
            }
        },
        Command::Period { op } => match op {
            PeriodOp::Eval {
                input,
                system,
                rank,
                lambda,
                sign,
            } => {
                let manifest = RunManifest::new("period eval")
                    .with_input(path_str(input))
                    .with_param("lambda", lambda)
                    .with_param("sign", sign)
                    .with_param("type", system)
                    .with_precision(prec);
                let curve = read_curve_file(input)?;
                let pairings = parse_qq_list(lambda)?;
                let rank = rank.unwrap_or(pairings.len());
                let rs = build_root_system(RootType::parse(system)?, rank)?;
                let config = PeriodConfig {
                    sign_convention: SignConvention::parse(sign)?,
                    precision_digits: prec,
                };
                let v = period_eval(&rs, &curve, &pairings, &config)?;
                let mut out = String::new();
                for term in &v.terms {
                    let _ = writeln!(
                        out,
                        "w={} sign={} gamma={} ratio={} term={}",
                        term.w_word,
                        if term.sign < 0 { "-" } else { "+" },
                        fmt_decimal(&term.gamma_product.re, digits.min(20)),
                        fmt_decimal(&term.zeta_ratio_product, digits.min(20)),
                        fmt_decimal(&term.term.re, digits.min(20)),
                    );
                }
                let _ = writeln!(
                    out,
                    "value = {} + {}i",
                    fmt_decimal(&v.value.re, digits),
                    fmt_decimal(&v.value.im, digits)
                );
                Ok((manifest, out))
            }
            PeriodOp::Table {
                input,
                samples,
                table,
                sign,
            } => {
                let mut manifest = RunManifest::new("period table")
                    .with_input(path_str(input))
                    .with_param("samples", samples)
                    .with_param("sign", sign)
                    .with_precision(prec);
                let curve = read_curve_file(input)?;
                let sample_values = parse_qq_list(samples)?;
                let ab = match table {
                    Some(path) => {
                        manifest = manifest.with_input(path_str(path));
                        Some(read_ab_file(path)?)
                    }
                    None => None,
                };
                let rs = build_root_system(RootType::A, 1)?;
                let config = PeriodConfig {
                    sign_convention: SignConvention::parse(sign)?,
                    precision_digits: prec,
                };
                let t = sl2_group_zeta(&rs, &curve, &sample_values, &config, ab.as_ref())?;
                Ok((manifest, t.to_csv()))
            }
        },
    }
}

/// Parse and run a full command line (first element = program name).
/// Returns the process exit code; results print to stdout, diagnostics to
/// stderr.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok((manifest, output)) => {
            if cli.manifest {
                print!("{}---\n", manifest.to_text());
            }
            print!("{output}");
            0
        }
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}

/// Entry point for the binary: run with the process arguments.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> Result<(RunManifest, String)> {
        let mut full = vec!["zetamass"];
        full.extend_from_slice(args);
        let cli = Cli::try_parse_from(full).expect("argument parse");
        dispatch(&cli)
    }

    fn fixture_dir() -> PathBuf {
        let dir = std::env::temp_dir().join("zetamass-cli-test");
        std::fs::create_dir_all(&dir).unwrap();
        dir
    }

    fn e2_curve_file() -> PathBuf {
        let path = fixture_dir().join("e2.curve");
        std::fs::write(&path, "q = 2\ng = 1\nnumerator = [1, 0, 2]\n").unwrap();
        path
    }

    fn rank2_table_file() -> PathBuf {
        let path = fixture_dir().join("e2_rank2.ab");
        std::fs::write(
            &path,
            "n = 2\ng = 1\nbase = \"2\"\nalphas = [\"3\"]\nbeta = \"6\"\n",
        )
        .unwrap();
        path
    }

    #[test]
    fn curve_subcommands() {
        let curve = e2_curve_file();
        let curve_arg = curve.to_str().unwrap();
        let (_, out) = run_capture(&["curve", "zeta", "--in", curve_arg]).unwrap();
        assert_eq!(out, "(1+2t^2)/((1-t)(1-2t))\n");
        let (_, out) = run_capture(&["curve", "special", "--in", curve_arg, "--k", "2"]).unwrap();
        assert_eq!(out, "3\n");
        let (_, out) = run_capture(&["curve", "divisors", "--in", curve_arg, "--dmax", "3"]).unwrap();
        assert_eq!(out, "d,count\n0,1\n1,3\n2,9\n3,21\n");
        let (_, out) = run_capture(&["curve", "rh", "--in", curve_arg]).unwrap();
        assert!(out.ends_with("RH: pass\n"), "{out}");
        // Missing file is an input error (exit 2).
        let err = run_capture(&["curve", "zeta", "--in", "/nonexistent/x.curve"]).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn mass_subcommands() {
        let curve = e2_curve_file();
        let curve_arg = curve.to_str().unwrap();
        let (_, out) = run_capture(&["mass", "total", "--in", curve_arg, "--n", "2"]).unwrap();
        assert_eq!(out, "9\n");
        let (_, out) =
            run_capture(&["mass", "zagier", "--in", curve_arg, "--n", "3", "--d", "0"]).unwrap();
        assert_eq!(out, "66/7\n");
        let (_, out) = run_capture(&[
            "mass", "hnseries", "--in", curve_arg, "--n", "2", "--d", "0", "--cap", "2",
        ])
        .unwrap();
        // Shells for n = 2, d = 0 sit at even weights: cap 1 adds nothing,
        // cap 2 picks up the first unstable shell (9 - 3/4 = 33/4).
        assert_eq!(out, "cap,partial_sum,last_shell\n0,6,6\n1,6,0\n2,33/4,9/4\n");
        let (_, out) = run_capture(&["mass", "wzavg", "--in", curve_arg, "--n", "2"]).unwrap();
        assert!(out.contains("lhs = 18"), "{out}");
        assert!(out.ends_with("identity: pass\n"), "{out}");
        let (_, out) =
            run_capture(&["mass", "wzind", "--in", curve_arg, "--n", "2", "--d", "0"]).unwrap();
        assert!(out.contains("value = 12"), "{out}");
        assert!(out.contains("total_mass = 9"), "{out}");
        let (_, out) = run_capture(&["mass", "siegel", "--n", "2", "--prec", "50"]).unwrap();
        assert!(out.starts_with("0.52359877559829887307"), "{out}");
        let (_, out) = run_capture(&["mass", "wengss", "--n", "2", "--prec", "30"]).unwrap();
        assert!(out.starts_with("0.0235987755"), "{out}");
        let (_, out) = run_capture(&["mass", "ks", "--convention", "A", "--n", "2"]).unwrap();
        assert!(out.contains("c(1,1) = 1/2"), "{out}");
        assert!(out.contains("total = "), "{out}");
        let (_, out) = run_capture(&["mass", "invcheck", "--nmax", "2"]).unwrap();
        assert!(out.contains("n=1 convention=A closes=true"), "{out}");
    }

    #[test]
    fn zeta_rootsys_witten_subcommands() {
        let table = rank2_table_file();
        let table_arg = table.to_str().unwrap();
        let (_, out) = run_capture(&["zeta", "assemble", "--table", table_arg]).unwrap();
        assert_eq!(out, "numerator = [3, 3, 12]\n");
        let (_, out) =
            run_capture(&["zeta", "assemble", "--table", table_arg, "--check-fe"]).unwrap();
        assert_eq!(out, "numerator = [3, 3, 12]\nFE: pass\n");
        let (_, out) = run_capture(&[
            "rootsys", "coeffs", "--type", "A", "--rank", "1", "--flavor", "NF",
        ])
        .unwrap();
        assert_eq!(out, "G: 1, B: -1/2\n");
        // FF coefficients display as canonical q-expressions.
        let (_, out) = run_capture(&[
            "rootsys", "coeffs", "--type", "A", "--rank", "1", "--flavor", "FF", "--q", "2",
        ])
        .unwrap();
        assert_eq!(out, "G: 1, B: -1/(q^2-1)\n");
        let err = run_capture(&[
            "rootsys", "coeffs", "--type", "A", "--rank", "1", "--flavor", "FF",
        ])
        .unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let (_, out) = run_capture(&[
            "witten", "zeta", "--n", "2", "--s", "2", "--cutoff", "100",
        ])
        .unwrap();
        assert!(out.starts_with("value = 1.6"), "{out}");
        assert!(out.contains("tail_bound = "), "{out}");
        assert!(out.contains("terms = 101"), "{out}");
    }

    #[test]
    fn period_subcommands() {
        let curve = e2_curve_file();
        let curve_arg = curve.to_str().unwrap();
        let table = rank2_table_file();
        let table_arg = table.to_str().unwrap();
        let (_, out) =
            run_capture(&["period", "eval", "--in", curve_arg, "--lambda", "2"]).unwrap();
        assert!(out.contains("w=e sign=+"), "{out}");
        assert!(out.contains("w=s1 sign=+"), "{out}");
        assert!(out.contains("value = -5.97"), "{out}");
        let (_, out) = run_capture(&[
            "period", "table", "--in", curve_arg, "--samples", "2,5/2,3", "--table", table_arg,
        ])
        .unwrap();
        assert!(out.starts_with("s,period,assembled_zeta,ratio\n"), "{out}");
        assert_eq!(out.lines().count(), 4);
        assert!(out.contains("3,singular,"), "{out}");
        // Singular lambda in eval is a hard error.
        let err =
            run_capture(&["period", "eval", "--in", curve_arg, "--lambda", "1"]).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn manifests_are_deterministic() {
        let curve = e2_curve_file();
        let curve_arg = curve.to_str().unwrap();
        let (m1, o1) = run_capture(&["curve", "special", "--in", curve_arg, "--k", "3"]).unwrap();
        let (m2, o2) = run_capture(&["curve", "special", "--in", curve_arg, "--k", "3"]).unwrap();
        assert_eq!(m1.to_text(), m2.to_text());
        assert_eq!(o1, o2);
        assert!(m1.to_text().contains("command = \"curve special\""));
        assert!(m1.to_text().contains("param.k = \"3\""));
    }
}
