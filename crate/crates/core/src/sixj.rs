//! Recoupling tables for triple tensor products and the pentagon sweep.
//!
//! With flat coordinates the associativity isomorphism is the identity
//! rebracketing, so the recoupling table of four labels is a pure change of
//! basis between the two trees of opposite-coproduct embeddings
//!
//! ```text
//! (id (x) emb_n(l2,l3)) ∘ emb_{l4}(l1, n)
//!     = sum_m  table[m, n] (emb_m(l1,l2) (x) id) ∘ emb_{l4}(m, l3).
//! ```
//!
//! Every map out of a highest-weight irrep is determined by the image of the
//! top basis vector, so the table is found by one exact linear solve on those
//! images and then re-verified on full matrices.

use alloc::format;
use alloc::vec::Vec;

use crate::cache::Cache;
use crate::error::{Error, Result};
use crate::fusion::{cg_embedding, chan, sel};
use crate::linalg;
use crate::rep::{CoproductSide, LinMap, TensorWord};
use crate::report::CheckReport;
use crate::scalar::ScalarQ;

/// Change-of-basis table between the two recoupling trees of the labels
/// `(l1, l2, l3; l4)`.
///
/// Rows are indexed by `m` in `Sel(l1,l2) ∩ Sel(l3,l4)`, columns by `n` in
/// `Sel(l2,l3) ∩ Sel(l1,l4)`; as a square matrix the table is invertible
/// over the rational-function field.
#[derive(Debug, Clone, PartialEq)]
pub struct SixJTable {
    pub l1: usize,
    pub l2: usize,
    pub l3: usize,
    pub l4: usize,
    row_channels: Vec<usize>,
    col_channels: Vec<usize>,
    entries: Vec<Vec<ScalarQ>>,
}

impl SixJTable {
    /// Channel values indexing the rows (`m`).
    pub fn row_channels(&self) -> &[usize] {
        &self.row_channels
    }

    /// Channel values indexing the columns (`n`).
    pub fn col_channels(&self) -> &[usize] {
        &self.col_channels
    }

    pub fn is_empty(&self) -> bool {
        self.row_channels.is_empty()
    }

    /// Entry at channel values `(m, n)`; `None` when either channel is not
    /// admissible for these labels.
    pub fn get(&self, m: usize, n: usize) -> Option<&ScalarQ> {
        let mi = self.row_channels.iter().position(|&x| x == m)?;
        let ni = self.col_channels.iter().position(|&x| x == n)?;
        Some(&self.entries[mi][ni])
    }

    /// The table as a dense matrix in channel order.
    pub fn matrix(&self) -> &Vec<Vec<ScalarQ>> {
        &self.entries
    }

    /// Exact invertibility of the table as a matrix.
    pub fn is_invertible(&self) -> bool {
        self.is_empty() || linalg::invert(&self.entries).is_ok()
    }
}

/// Left-tree basis map `(emb_m(l1,l2) (x) id) ∘ emb_{l4}(m, l3)` into the
/// flattened word `(l1, l2, l3)`.
fn left_tree(l1: usize, l2: usize, l3: usize, l4: usize, m: usize, cache: &mut Cache) -> Result<LinMap> {
    let inner = cg_embedding(m, l1, l2, CoproductSide::DeltaOp, cache)?;
    let outer = cg_embedding(l4, m, l3, CoproductSide::DeltaOp, cache)?;
    inner.kron(&LinMap::identity(TensorWord::single(l3))).compose(&outer)
}

/// Right-tree basis map `(id (x) emb_n(l2,l3)) ∘ emb_{l4}(l1, n)`.
fn right_tree(l1: usize, l2: usize, l3: usize, l4: usize, n: usize, cache: &mut Cache) -> Result<LinMap> {
    let inner = cg_embedding(n, l2, l3, CoproductSide::DeltaOp, cache)?;
    let outer = cg_embedding(l4, l1, n, CoproductSide::DeltaOp, cache)?;
    LinMap::identity(TensorWord::single(l1)).kron(&inner).compose(&outer)
}

/// Computes the recoupling table of `(l1, l2, l3; l4)`.
///
/// Returns an empty table when no channel is admissible.
pub fn sixj(l1: usize, l2: usize, l3: usize, l4: usize, cache: &mut Cache) -> Result<SixJTable> {
    if let Some(t) = cache.sixj_tables.get(&(l1, l2, l3, l4)) {
        return Ok(t.clone());
    }
    let row_channels = chan(l1, l2, l3, l4);
    let col_channels = chan(l2, l3, l1, l4);
    // both count the multiplicity of l4 in the triple product
    debug_assert_eq!(row_channels.len(), col_channels.len());

    let table = if row_channels.is_empty() {
        SixJTable { l1, l2, l3, l4, row_channels, col_channels, entries: Vec::new() }
    } else {
        let word = TensorWord::new(alloc::vec![l1, l2, l3]);
        let lefts: Vec<LinMap> = row_channels
            .iter()
            .map(|&m| left_tree(l1, l2, l3, l4, m, cache))
            .collect::<Result<_>>()?;
        let rights: Vec<LinMap> = col_channels
            .iter()
            .map(|&n| right_tree(l1, l2, l3, l4, n, cache))
            .collect::<Result<_>>()?;

        // restrict to the weight-l4 rows; all images of the top vector live there
        let support: Vec<usize> =
            (0..word.dim()).filter(|&f| word.weight_of(f) == l4 as i64).collect();
        let a: linalg::Matrix = support
            .iter()
            .map(|&r| lefts.iter().map(|b| b.entry(r, 0).clone()).collect())
            .collect();
        let b: linalg::Matrix = support
            .iter()
            .map(|&r| rights.iter().map(|t| t.entry(r, 0).clone()).collect())
            .collect();
        let entries = linalg::solve(&a, &b).map_err(|e| match e {
            Error::SingularMatrix | Error::InconsistentSystem => {
                Error::Consistency(format!("recoupling solve failed for ({l1},{l2},{l3};{l4})"))
            }
            other => other,
        })?;

        // full-matrix postcheck on the whole irrep, not just the top vector
        for (ni, right) in rights.iter().enumerate() {
            let mut acc = LinMap::zeros(TensorWord::single(l4), word.clone());
            for (mi, left) in lefts.iter().enumerate() {
                if !entries[mi][ni].is_zero() {
                    acc = acc.add(&left.scale(&entries[mi][ni]))?;
                }
            }
            if &acc != right {
                return Err(Error::Consistency(format!(
                    "recoupling table of ({l1},{l2},{l3};{l4}) fails the full-matrix check at n={}",
                    col_channels[ni]
                )));
            }
        }
        SixJTable { l1, l2, l3, l4, row_channels, col_channels, entries }
    };
    cache.sixj_tables.insert((l1, l2, l3, l4), table.clone());
    Ok(table)
}

fn table_entry(
    cache: &mut Cache,
    labels: (usize, usize, usize, usize),
    m: usize,
    n: usize,
) -> Result<ScalarQ> {
    let t = sixj(labels.0, labels.1, labels.2, labels.3, cache)?;
    Ok(t.get(m, n).cloned().unwrap_or_else(ScalarQ::zero))
}

/// Biedenharn-Elliott coherence for one label tuple; every admissible
/// assignment of the four intermediate channels is checked exactly.
pub fn pentagon_tuple(
    l1: usize,
    l2: usize,
    l3: usize,
    l4: usize,
    l5: usize,
    cache: &mut Cache,
    failures: &mut Vec<alloc::string::String>,
) -> Result<()> {
    for p in sel(l3, l4) {
        for c in chan(l2, p, l1, l5) {
            for a in sel(l1, l2) {
                for b in chan(a, l3, l4, l5) {
                    let mut lhs = ScalarQ::zero();
                    for n in sel(l2, l3) {
                        let f1 = table_entry(cache, (l2, l3, l4, c), n, p)?;
                        if f1.is_zero() {
                            continue;
                        }
                        let f2 = table_entry(cache, (l1, n, l4, l5), b, c)?;
                        if f2.is_zero() {
                            continue;
                        }
                        let f3 = table_entry(cache, (l1, l2, l3, b), a, n)?;
                        lhs = lhs + f1 * f2 * f3;
                    }
                    let rhs = table_entry(cache, (l1, l2, p, l5), a, c)?
                        * table_entry(cache, (a, l3, l4, l5), b, p)?;
                    if lhs != rhs {
                        failures.push(format!(
                            "({l1},{l2},{l3},{l4},{l5}) channels p={p} c={c} a={a} b={b}"
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Sweeps the Biedenharn-Elliott identity over all label tuples up to `lmax`.
pub fn pentagon_check(lmax: usize, cache: &mut Cache) -> Result<CheckReport> {
    let mut report = CheckReport::new("pentagon", alloc::vec![lmax as i64]);
    let mut failures = Vec::new();
    for l1 in 0..=lmax {
        for l2 in 0..=lmax {
            for l3 in 0..=lmax {
                for l4 in 0..=lmax {
                    for l5 in 0..=lmax {
                        pentagon_tuple(l1, l2, l3, l4, l5, cache, &mut failures)?;
                    }
                }
            }
        }
    }
    for f in failures {
        report.fail(f);
    }
    Ok(report)
}
