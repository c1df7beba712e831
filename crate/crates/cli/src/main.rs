//! Command-line front end for the exact engine: quantum-group tensor data
//! (Clebsch-Gordan maps, recoupling tables, braiding, twist), verification
//! sweeps, first-row Virasoro tables, and the numeric equivalence check
//! between the two sides.
//!
//! Exit codes: 0 all requested checks pass, 1 a verification failed,
//! 2 usage or input error.

mod out;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;

use qcat_core::braid::{
    braid_data, braiding_eigenvalue, hexagon_sweep, ribbon_sweep, twist,
};
use qcat_core::fusion::{cg_embedding, intertwiner_sweep, sel};
use qcat_core::rep::{highest_weight_vectors, LinMap};
use qcat_core::sixj::{pentagon_check, sixj};
use qcat_core::virasoro::{self, DEFAULT_LEVEL_CAP};
use qcat_core::{qfact, qint, Cache, CoproductSide, ScalarQ, TensorWord};

use out::{
    BConstRow, BraidEigenOut, BraidMatrixOut, CgOut, ChannelValue, CheckOut, EquivOut, Format,
    FusionRow, KacRow, Out, ScalarOut, SixjOut, VirBConstOut, VirFusionOut, VirKacOut,
    VirWeightsOut, WeightRow,
};

#[derive(Parser)]
#[command(name = "qcat", version, about = "Exact braided category data for quantum sl2 and first-row Virasoro checks")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: Format,
    /// Write the output to a file instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// q-integer [n] as an exact scalar
    Qint {
        #[arg(allow_negative_numbers = true)]
        n: i64,
    },
    /// q-factorial [n]! as an exact scalar
    Qfact {
        #[arg(allow_negative_numbers = true)]
        n: i64,
    },
    /// Clebsch-Gordan embedding matrix of one channel
    Cg {
        /// channel label
        #[arg(long)]
        ell: usize,
        /// first tensor factor
        #[arg(long)]
        ell1: usize,
        /// second tensor factor
        #[arg(long)]
        ell2: usize,
        /// use the opposite coproduct
        #[arg(long)]
        op: bool,
    },
    /// Recoupling table of four labels
    Sixj {
        ell1: usize,
        ell2: usize,
        ell3: usize,
        ell4: usize,
    },
    /// Braiding matrix of a pair, or its channel eigenvalues
    Braid {
        ell1: usize,
        ell2: usize,
        /// per-channel eigenvalues instead of the matrix
        #[arg(long)]
        eigenvalues: bool,
    },
    /// Ribbon twist scalar of one irrep
    Twist { ell: usize },
    /// Exact coherence sweeps; exit code 0 iff all identities hold
    Verify {
        #[command(subcommand)]
        what: VerifyWhat,
    },
    /// First-row Virasoro data tables
    Vir {
        #[command(subcommand)]
        what: VirWhat,
    },
    /// Numeric match of braiding/twist data against the first-row phases
    Equiv {
        /// parameter with q = exp(i pi t)
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        /// label bound for pairs and channels
        #[arg(long)]
        lmax: usize,
        /// tolerance on phase deviations
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// label bound for the pentagon part (default min(lmax, 4))
        #[arg(long)]
        pentagon_lmax: Option<usize>,
    },
}

#[derive(Subcommand)]
enum VerifyWhat {
    /// Biedenharn-Elliott identity for all labels up to the bound
    Pentagon {
        #[arg(long)]
        lmax: usize,
    },
    /// Quasi-triangularity and Yang-Baxter on all three-letter words
    Hexagon {
        #[arg(long)]
        lmax: usize,
    },
    /// Twist balancing against the double braiding on all pairs
    Ribbon {
        #[arg(long)]
        lmax: usize,
    },
    /// Embedding/projection family: intertwining, biorthogonality, completeness
    Intertwiner {
        #[arg(long)]
        lmax: usize,
    },
}

#[derive(Subcommand)]
enum VirWhat {
    /// Conformal weights h_ell(t)
    Weights {
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long)]
        lmax: usize,
    },
    /// Admissible fusion triples
    Fusion {
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long)]
        lmax: usize,
    },
    /// Intertwiner normalization constants
    Bconst {
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long)]
        lmax: usize,
    },
    /// Shapovalov determinant vanishing per level (exact rational t)
    Kac {
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long)]
        lmax: usize,
    },
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let bigint = |d: &str| -> Result<BigInt, String> {
        d.parse().map_err(|_| format!("invalid integer '{d}'"))
    };
    if let Some((n, d)) = s.split_once('/') {
        let den = bigint(d.trim())?;
        if den == BigInt::ZERO {
            return Err("zero denominator".into());
        }
        Ok(BigRational::new(bigint(n.trim())?, den))
    } else if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("invalid decimal '{s}'"));
        }
        let combined = format!("{int_part}{frac_part}");
        let den = BigInt::from(10).pow(frac_part.len() as u32);
        Ok(BigRational::new(bigint(&combined)?, den))
    } else {
        Ok(BigRational::from_integer(bigint(s)?))
    }
}

fn parse_t_f64(s: &str) -> Result<f64, String> {
    if s.contains('/') {
        use num_traits::ToPrimitive;
        parse_rational(s)?
            .to_f64()
            .ok_or_else(|| format!("parameter '{s}' out of range"))
    } else {
        s.trim().parse().map_err(|_| format!("invalid parameter '{s}'"))
    }
}

fn level_cap() -> Result<usize, String> {
    match std::env::var("QCAT_LEVEL_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("invalid QCAT_LEVEL_CAP '{v}'")),
        Err(_) => Ok(DEFAULT_LEVEL_CAP),
    }
}

fn matrix_strings(m: &LinMap) -> Vec<Vec<String>> {
    m.entries()
        .iter()
        .map(|row| row.iter().map(ScalarQ::to_string).collect())
        .collect()
}

fn core_err(e: qcat_core::Error) -> String {
    e.to_string()
}

/// Structural fusion match: highest-weight multiplicities against the
/// selection rule, for all pairs up to the bound.
fn fusion_rules_match(lmax: usize) -> bool {
    for l1 in 0..=lmax {
        for l2 in 0..=lmax {
            let hw = highest_weight_vectors(&TensorWord::pair(l1, l2), CoproductSide::Delta);
            let mut found: Vec<usize> = Vec::new();
            for (w, basis) in &hw {
                if basis.len() != 1 || *w < 0 {
                    return false;
                }
                found.push(*w as usize);
            }
            found.sort_unstable();
            if found != sel(l1, l2) {
                return false;
            }
        }
    }
    true
}

fn run_equiv(
    t_str: &str,
    lmax: usize,
    tol: f64,
    pentagon_lmax: Option<usize>,
) -> Result<(Out, bool), String> {
    let t = parse_t_f64(t_str)?;
    let mut cache = Cache::new();
    let mut braid_dev = 0.0f64;
    for l1 in 0..=lmax {
        for l2 in 0..=lmax {
            for ell in sel(l1, l2) {
                let lambda = braiding_eigenvalue(ell, l1, l2, &mut cache).map_err(core_err)?;
                let lhs = lambda.eval_at(t).map_err(core_err)?;
                let rhs = virasoro::braid_phase(ell, l1, l2, t).map_err(core_err)?;
                braid_dev = braid_dev.max(lhs.dist(rhs));
            }
        }
    }
    let mut twist_dev = 0.0f64;
    for ell in 0..=2 * lmax {
        let theta = twist(ell).map_err(core_err)?;
        let lhs = theta.eval_at(t).map_err(core_err)?;
        twist_dev = twist_dev.max(lhs.dist(virasoro::twist_phase(ell, t)));
    }
    let fusion_match = fusion_rules_match(lmax);
    let plmax = pentagon_lmax.unwrap_or_else(|| lmax.min(4));
    let pentagon = pentagon_check(plmax, &mut cache).map_err(core_err)?;

    let pass = fusion_match && pentagon.pass && braid_dev < tol && twist_dev < tol;
    let report = EquivOut {
        t,
        lmax,
        tol,
        fusion_match,
        braid_phase_max_dev: braid_dev,
        twist_phase_max_dev: twist_dev,
        pentagon_lmax: plmax,
        pentagon_pass: pentagon.pass,
        pass,
    };
    Ok((Out::Equiv(report), pass))
}

fn execute(command: Command) -> Result<(Out, bool), String> {
    match command {
        Command::Qint { n } => {
            let value = qint(n).to_string();
            Ok((Out::Scalar(ScalarOut { op: "qint".into(), params: vec![n], value }), true))
        }
        Command::Qfact { n } => {
            let n_u32: u32 = n
                .try_into()
                .map_err(|_| format!("qfact requires a nonnegative argument, got {n}"))?;
            let value = qfact(n_u32).to_string();
            Ok((Out::Scalar(ScalarOut { op: "qfact".into(), params: vec![n], value }), true))
        }
        Command::Cg { ell, ell1, ell2, op } => {
            let side = if op { CoproductSide::DeltaOp } else { CoproductSide::Delta };
            let mut cache = Cache::new();
            let emb = cg_embedding(ell, ell1, ell2, side, &mut cache).map_err(core_err)?;
            let side_name = if op { "delta_op" } else { "delta" };
            Ok((
                Out::Cg(CgOut {
                    ell,
                    ell1,
                    ell2,
                    side: side_name.into(),
                    matrix: matrix_strings(&emb),
                }),
                true,
            ))
        }
        Command::Sixj { ell1, ell2, ell3, ell4 } => {
            let mut cache = Cache::new();
            let table = sixj(ell1, ell2, ell3, ell4, &mut cache).map_err(core_err)?;
            let mut entries = BTreeMap::new();
            for &m in table.row_channels() {
                for &n in table.col_channels() {
                    if let Some(v) = table.get(m, n) {
                        entries.insert(format!("{m},{n}"), v.to_string());
                    }
                }
            }
            Ok((Out::Sixj(SixjOut { ell1, ell2, ell3, ell4, entries }), true))
        }
        Command::Braid { ell1, ell2, eigenvalues } => {
            let mut cache = Cache::new();
            let data = braid_data(ell1, ell2, &mut cache).map_err(core_err)?;
            if eigenvalues {
                let eigenvalues = data
                    .eigenvalues
                    .iter()
                    .map(|(ell, v)| ChannelValue { ell: *ell, value: v.to_string() })
                    .collect();
                Ok((Out::BraidEigen(BraidEigenOut { ell1, ell2, eigenvalues }), true))
            } else {
                Ok((
                    Out::BraidMatrix(BraidMatrixOut {
                        ell1,
                        ell2,
                        matrix: matrix_strings(&data.braiding),
                    }),
                    true,
                ))
            }
        }
        Command::Twist { ell } => {
            let value = twist(ell).map_err(core_err)?.to_string();
            Ok((Out::Scalar(ScalarOut { op: "twist".into(), params: vec![ell as i64], value }), true))
        }
        Command::Verify { what } => {
            let mut cache = Cache::new();
            let report = match what {
                VerifyWhat::Pentagon { lmax } => pentagon_check(lmax, &mut cache),
                VerifyWhat::Hexagon { lmax } => hexagon_sweep(lmax),
                VerifyWhat::Ribbon { lmax } => ribbon_sweep(lmax, &mut cache),
                VerifyWhat::Intertwiner { lmax } => intertwiner_sweep(lmax, &mut cache),
            }
            .map_err(core_err)?;
            let pass = report.pass;
            Ok((Out::Check(CheckOut::from(report)), pass))
        }
        Command::Vir { what } => run_vir(what),
        Command::Equiv { t, lmax, tol, pentagon_lmax } => run_equiv(&t, lmax, tol, pentagon_lmax),
    }
}

fn run_vir(what: VirWhat) -> Result<(Out, bool), String> {
    match what {
        VirWhat::Weights { t, lmax } => {
            let tf = parse_t_f64(&t)?;
            if tf == 0.0 {
                return Err("t must be nonzero".into());
            }
            let weights = (0..=lmax)
                .map(|ell| WeightRow { ell, h: virasoro::h_weight_f64(ell, tf) })
                .collect();
            Ok((
                Out::VirWeights(VirWeightsOut {
                    t: tf,
                    c: virasoro::central_charge_f64(tf),
                    weights,
                }),
                true,
            ))
        }
        VirWhat::Fusion { t, lmax } => {
            let tf = parse_t_f64(&t)?;
            if tf == 0.0 {
                return Err("t must be nonzero".into());
            }
            let mut fusion = Vec::new();
            for ell1 in 0..=lmax {
                for ell2 in 0..=lmax {
                    for ell3 in sel(ell1, ell2) {
                        fusion.push(FusionRow {
                            ell1,
                            ell2,
                            ell3,
                            dim: virasoro::fusion_dim(ell1, ell2, ell3),
                        });
                    }
                }
            }
            Ok((
                Out::VirFusion(VirFusionOut {
                    t: tf,
                    c: virasoro::central_charge_f64(tf),
                    fusion,
                }),
                true,
            ))
        }
        VirWhat::Bconst { t, lmax } => {
            let tf = parse_t_f64(&t)?;
            if tf == 0.0 {
                return Err("t must be nonzero".into());
            }
            let mut bconst = Vec::new();
            for ell1 in 0..=lmax {
                for ell2 in 0..=lmax {
                    for ell3 in sel(ell1, ell2) {
                        let value = virasoro::b_const(ell1, ell2, ell3, tf).map_err(core_err)?;
                        bconst.push(BConstRow { ell1, ell2, ell3, value });
                    }
                }
            }
            Ok((
                Out::VirBConst(VirBConstOut {
                    t: tf,
                    c: virasoro::central_charge_f64(tf),
                    bconst,
                }),
                true,
            ))
        }
        VirWhat::Kac { t, lmax } => {
            let tr = parse_rational(&t)?;
            let cap = level_cap()?;
            let c = virasoro::central_charge(&tr).map_err(core_err)?;
            let mut kac = Vec::new();
            for ell in 0..=lmax {
                let report = virasoro::kac_first_row_check(ell, &tr, cap).map_err(core_err)?;
                for lv in report.levels {
                    kac.push(KacRow { ell, level: lv.level, det_zero: lv.det_is_zero });
                }
            }
            Ok((
                Out::VirKac(VirKacOut {
                    t: tr.to_string(),
                    c: c.to_string(),
                    level_cap: cap,
                    kac,
                }),
                true,
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok((output, pass)) => {
            let rendered = match output.render(cli.format) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            if let Some(path) = cli.out {
                if let Err(e) = std::fs::write(&path, &rendered) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{rendered}");
            }
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
