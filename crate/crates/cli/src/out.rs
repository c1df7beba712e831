//! Typed command outputs and their three renderings.
//!
//! Every subcommand produces one of these structs; JSON is the serde form
//! (stable field order, so parse + re-serialize is byte-identical), the
//! table form is for terminals, and CSV rows are for spreadsheets and CI
//! scripts.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ScalarOut {
    pub op: String,
    pub params: Vec<i64>,
    pub value: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CgOut {
    pub ell: usize,
    pub ell1: usize,
    pub ell2: usize,
    pub side: String,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BraidMatrixOut {
    pub ell1: usize,
    pub ell2: usize,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SixjOut {
    pub ell1: usize,
    pub ell2: usize,
    pub ell3: usize,
    pub ell4: usize,
    /// keyed by "m,n" channel pairs
    pub entries: std::collections::BTreeMap<String, String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ChannelValue {
    pub ell: usize,
    pub value: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BraidEigenOut {
    pub ell1: usize,
    pub ell2: usize,
    pub eigenvalues: Vec<ChannelValue>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CheckOut {
    pub check: String,
    pub params: Vec<i64>,
    pub pass: bool,
    pub failures: Vec<String>,
}

impl From<qcat_core::CheckReport> for CheckOut {
    fn from(r: qcat_core::CheckReport) -> Self {
        CheckOut {
            check: r.check.to_string(),
            params: r.params,
            pass: r.pass,
            failures: r.failures,
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct WeightRow {
    pub ell: usize,
    pub h: f64,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct VirWeightsOut {
    pub t: f64,
    pub c: f64,
    pub weights: Vec<WeightRow>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct FusionRow {
    pub ell1: usize,
    pub ell2: usize,
    pub ell3: usize,
    pub dim: usize,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct VirFusionOut {
    pub t: f64,
    pub c: f64,
    pub fusion: Vec<FusionRow>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BConstRow {
    pub ell1: usize,
    pub ell2: usize,
    pub ell3: usize,
    pub value: f64,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct VirBConstOut {
    pub t: f64,
    pub c: f64,
    pub bconst: Vec<BConstRow>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct KacRow {
    pub ell: usize,
    pub level: usize,
    pub det_zero: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct VirKacOut {
    /// exact rational parameter, as a string
    pub t: String,
    /// exact central charge, as a string
    pub c: String,
    pub level_cap: usize,
    pub kac: Vec<KacRow>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct EquivOut {
    pub t: f64,
    pub lmax: usize,
    pub tol: f64,
    pub fusion_match: bool,
    pub braid_phase_max_dev: f64,
    pub twist_phase_max_dev: f64,
    pub pentagon_lmax: usize,
    pub pentagon_pass: bool,
    pub pass: bool,
}

/// One rendered output per invocation.
pub enum Out {
    Scalar(ScalarOut),
    Cg(CgOut),
    BraidMatrix(BraidMatrixOut),
    BraidEigen(BraidEigenOut),
    Sixj(SixjOut),
    Check(CheckOut),
    VirWeights(VirWeightsOut),
    VirFusion(VirFusionOut),
    VirBConst(VirBConstOut),
    VirKac(VirKacOut),
    Equiv(EquivOut),
}

fn matrix_table(matrix: &[Vec<String>]) -> String {
    let mut s = String::new();
    for row in matrix {
        let _ = writeln!(s, "{}", row.join("\t"));
    }
    s
}

fn matrix_csv(matrix: &[Vec<String>]) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["row", "col", "value"])?;
    for (r, row) in matrix.iter().enumerate() {
        for (c, v) in row.iter().enumerate() {
            w.write_record([r.to_string(), c.to_string(), v.clone()])?;
        }
    }
    Ok(String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf8"))
}

fn csv_string(f: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> Result<(), csv::Error>) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    f(&mut w)?;
    Ok(String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf8"))
}

impl Out {
    pub fn render(&self, format: Format) -> Result<String, String> {
        match format {
            Format::Json => self.json().map_err(|e| e.to_string()),
            Format::Table => Ok(self.table()),
            Format::Csv => self.csv().map_err(|e| e.to_string()),
        }
    }

    fn json(&self) -> serde_json::Result<String> {
        let mut s = match self {
            Out::Scalar(x) => serde_json::to_string_pretty(x),
            Out::Cg(x) => serde_json::to_string_pretty(x),
            Out::BraidMatrix(x) => serde_json::to_string_pretty(x),
            Out::BraidEigen(x) => serde_json::to_string_pretty(x),
            Out::Sixj(x) => serde_json::to_string_pretty(x),
            Out::Check(x) => serde_json::to_string_pretty(x),
            Out::VirWeights(x) => serde_json::to_string_pretty(x),
            Out::VirFusion(x) => serde_json::to_string_pretty(x),
            Out::VirBConst(x) => serde_json::to_string_pretty(x),
            Out::VirKac(x) => serde_json::to_string_pretty(x),
            Out::Equiv(x) => serde_json::to_string_pretty(x),
        }?;
        s.push('\n');
        Ok(s)
    }

    fn table(&self) -> String {
        match self {
            Out::Scalar(x) => format!("{}\n", x.value),
            Out::Cg(x) => matrix_table(&x.matrix),
            Out::BraidMatrix(x) => matrix_table(&x.matrix),
            Out::BraidEigen(x) => {
                let mut s = String::new();
                for cv in &x.eigenvalues {
                    let _ = writeln!(s, "{}\t{}", cv.ell, cv.value);
                }
                s
            }
            Out::Sixj(x) => {
                let mut s = String::new();
                for (k, v) in &x.entries {
                    let _ = writeln!(s, "{k}\t{v}");
                }
                s
            }
            Out::Check(x) => {
                let mut s = String::new();
                let params: Vec<String> = x.params.iter().map(|p| p.to_string()).collect();
                let _ = writeln!(
                    s,
                    "check {} ({}): {}",
                    x.check,
                    params.join(","),
                    if x.pass { "PASS" } else { "FAIL" }
                );
                for f in &x.failures {
                    let _ = writeln!(s, "  {f}");
                }
                s
            }
            Out::VirWeights(x) => {
                let mut s = format!("t\t{}\nc\t{}\n", x.t, x.c);
                for w in &x.weights {
                    let _ = writeln!(s, "{}\t{}", w.ell, w.h);
                }
                s
            }
            Out::VirFusion(x) => {
                let mut s = format!("t\t{}\nc\t{}\n", x.t, x.c);
                for f in &x.fusion {
                    let _ = writeln!(s, "{}\t{}\t{}\t{}", f.ell1, f.ell2, f.ell3, f.dim);
                }
                s
            }
            Out::VirBConst(x) => {
                let mut s = format!("t\t{}\nc\t{}\n", x.t, x.c);
                for b in &x.bconst {
                    let _ = writeln!(s, "{}\t{}\t{}\t{}", b.ell1, b.ell2, b.ell3, b.value);
                }
                s
            }
            Out::VirKac(x) => {
                let mut s = format!("t\t{}\nc\t{}\nlevel_cap\t{}\n", x.t, x.c, x.level_cap);
                for k in &x.kac {
                    let _ = writeln!(s, "{}\t{}\t{}", k.ell, k.level, k.det_zero);
                }
                s
            }
            Out::Equiv(x) => {
                format!(
                    "t\t{}\nlmax\t{}\ntol\t{}\nfusion_match\t{}\n\
                     braid_phase_max_dev\t{}\ntwist_phase_max_dev\t{}\n\
                     pentagon_lmax\t{}\npentagon_pass\t{}\npass\t{}\n",
                    x.t,
                    x.lmax,
                    x.tol,
                    x.fusion_match,
                    x.braid_phase_max_dev,
                    x.twist_phase_max_dev,
                    x.pentagon_lmax,
                    x.pentagon_pass,
                    x.pass
                )
            }
        }
    }

    fn csv(&self) -> Result<String, csv::Error> {
        match self {
            Out::Scalar(x) => csv_string(|w| {
                w.write_record(["op", "params", "value"])?;
                let params: Vec<String> = x.params.iter().map(|p| p.to_string()).collect();
                w.write_record([x.op.clone(), params.join(";"), x.value.clone()])
            }),
            Out::Cg(x) => matrix_csv(&x.matrix),
            Out::BraidMatrix(x) => matrix_csv(&x.matrix),
            Out::BraidEigen(x) => csv_string(|w| {
                w.write_record(["ell", "value"])?;
                for cv in &x.eigenvalues {
                    w.write_record([cv.ell.to_string(), cv.value.clone()])?;
                }
                Ok(())
            }),
            Out::Sixj(x) => csv_string(|w| {
                w.write_record(["m", "n", "value"])?;
                for (k, v) in &x.entries {
                    let (m, n) = k.split_once(',').unwrap_or((k, ""));
                    w.write_record([m.to_string(), n.to_string(), v.clone()])?;
                }
                Ok(())
            }),
            Out::Check(x) => csv_string(|w| {
                w.write_record(["check", "params", "pass", "failures"])?;
                let params: Vec<String> = x.params.iter().map(|p| p.to_string()).collect();
                w.write_record([
                    x.check.clone(),
                    params.join(";"),
                    x.pass.to_string(),
                    x.failures.join(";"),
                ])
            }),
            Out::VirWeights(x) => csv_string(|w| {
                w.write_record(["ell", "h"])?;
                for r in &x.weights {
                    w.write_record([r.ell.to_string(), r.h.to_string()])?;
                }
                Ok(())
            }),
            Out::VirFusion(x) => csv_string(|w| {
                w.write_record(["ell1", "ell2", "ell3", "dim"])?;
                for r in &x.fusion {
                    w.write_record([
                        r.ell1.to_string(),
                        r.ell2.to_string(),
                        r.ell3.to_string(),
                        r.dim.to_string(),
                    ])?;
                }
                Ok(())
            }),
            Out::VirBConst(x) => csv_string(|w| {
                w.write_record(["ell1", "ell2", "ell3", "value"])?;
                for r in &x.bconst {
                    w.write_record([
                        r.ell1.to_string(),
                        r.ell2.to_string(),
                        r.ell3.to_string(),
                        r.value.to_string(),
                    ])?;
                }
                Ok(())
            }),
            Out::VirKac(x) => csv_string(|w| {
                w.write_record(["ell", "level", "det_zero"])?;
                for r in &x.kac {
                    w.write_record([
                        r.ell.to_string(),
                        r.level.to_string(),
                        r.det_zero.to_string(),
                    ])?;
                }
                Ok(())
            }),
            Out::Equiv(x) => csv_string(|w| {
                w.write_record([
                    "t",
                    "lmax",
                    "tol",
                    "fusion_match",
                    "braid_phase_max_dev",
                    "twist_phase_max_dev",
                    "pentagon_lmax",
                    "pentagon_pass",
                    "pass",
                ])?;
                w.write_record([
                    x.t.to_string(),
                    x.lmax.to_string(),
                    x.tol.to_string(),
                    x.fusion_match.to_string(),
                    x.braid_phase_max_dev.to_string(),
                    x.twist_phase_max_dev.to_string(),
                    x.pentagon_lmax.to_string(),
                    x.pentagon_pass.to_string(),
                    x.pass.to_string(),
                ])
            }),
        }
    }
}
