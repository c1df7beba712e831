//! R-matrix, braiding, ribbon twist and their coherence checks.
//!
//! The universal R-matrix acts on a pair of irreps as the truncated series
//! `sum_n q^(n(n-1)/2) (q - q^-1)^n / [n]!  F^n (x) E^n` followed by the
//! Cartan factor that scales a vector of weights `(m, n)` by `v^(m n)`. The
//! braiding is the flip composed with that action, and the twist is read off
//! the standard inverse-twist series, generator by generator.

use alloc::format;

use alloc::vec::Vec;

use crate::cache::Cache;
use crate::error::{Error, Result};
use crate::fusion::{cg_embedding, cg_projection, sel};
use crate::rep::{
    generator_matrix, tensor_action_matrix, CoproductSide, Gen, Irrep, LinMap, TensorWord,
};
use crate::report::CheckReport;
use crate::scalar::{qfact, qint, ScalarQ};

/// `q^(n(n-1)/2) (q - q^-1)^n / [n]!`, the coefficient of `F^n (x) E^n`.
fn series_coefficient(n: usize) -> ScalarQ {
    let q_minus_qinv = ScalarQ::q_pow(1) - ScalarQ::q_pow(-1);
    let num = ScalarQ::v_pow((n * n) as i64 - n as i64)
        * q_minus_qinv.powi(n as i64).expect("nonzero base");
    num / qfact(n as u32)
}

/// Falling product of raising coefficients: applying `E` n times to `e_j`
/// inside the irrep `ell` gives this scalar times `e_{j-n}`.
fn e_power_coefficient(ell: usize, j: usize, n: usize) -> ScalarQ {
    let mut acc = ScalarQ::one();
    for t in 0..n {
        acc = acc * qint((j - t) as i64) * qint(ell as i64 - j as i64 + t as i64 + 1);
    }
    acc
}

/// Action of the universal R-matrix on two legs of a word: the lowering part
/// acts at `leg_f`, the raising part at `leg_e`, and the Cartan factor
/// couples the two weights after the series has acted.
fn r_on_legs(word: &TensorWord, leg_f: usize, leg_e: usize) -> LinMap {
    let letters = word.letters();
    let strides = word.strides();
    let (lf, le) = (letters[leg_f], letters[leg_e]);
    let mut m = LinMap::zeros(word.clone(), word.clone());
    for col in 0..word.dim() {
        let idx = word.unflatten(col);
        let max_n = (lf - idx[leg_f]).min(idx[leg_e]);
        for n in 0..=max_n {
            let coeff = series_coefficient(n) * e_power_coefficient(le, idx[leg_e], n);
            let row = col + n * strides[leg_f] - n * strides[leg_e];
            let wf = lf as i64 - 2 * (idx[leg_f] + n) as i64;
            let we = le as i64 - 2 * (idx[leg_e] - n) as i64;
            let val = coeff * ScalarQ::v_pow(wf * we);
            let cur = m.entry(row, col).clone();
            m.set_entry(row, col, cur + val);
        }
    }
    m
}

/// Matrix of the R-matrix action on the word `(l1, l2)`.
pub fn rmatrix(l1: usize, l2: usize) -> LinMap {
    r_on_legs(&TensorWord::pair(l1, l2), 0, 1)
}

/// The braiding `(l1, l2) -> (l2, l1)`: flip composed with the R-matrix.
pub fn braiding(l1: usize, l2: usize) -> LinMap {
    LinMap::swap(l1, l2)
        .compose(&rmatrix(l1, l2))
        .expect("dimensions agree")
}

/// Closed form of the braiding eigenvalue on the channel `ell` of the pair.
pub fn braiding_eigenvalue_closed_form(ell: usize, l1: usize, l2: usize) -> ScalarQ {
    let s = ((l1 + l2 - ell) / 2) as i64;
    let (a, b) = (l1 as i64, l2 as i64);
    let sign = if s % 2 == 0 { ScalarQ::one() } else { -ScalarQ::one() };
    sign * ScalarQ::v_pow(a * b - 2 * s * (a + b) + 2 * s * s - 2 * s)
}

/// Braiding eigenvalue on one channel, computed from the matrices and
/// cross-checked against the closed form; disagreement is fatal.
pub fn braiding_eigenvalue(ell: usize, l1: usize, l2: usize, cache: &mut Cache) -> Result<ScalarQ> {
    let emb = cg_embedding(ell, l1, l2, CoproductSide::Delta, cache)?;
    let proj = cg_projection(ell, l2, l1, CoproductSide::Delta, cache)?;
    let comp = proj.compose(&braiding(l1, l2).compose(&emb)?)?;
    let lambda = comp.as_scalar().ok_or_else(|| {
        Error::Consistency(format!("braiding on channel {ell} of ({l1},{l2}) is not scalar"))
    })?;
    let closed = braiding_eigenvalue_closed_form(ell, l1, l2);
    if lambda != closed {
        return Err(Error::Consistency(format!(
            "braiding eigenvalue mismatch on channel {ell} of ({l1},{l2}): \
             matrix gives {lambda}, closed form gives {closed}"
        )));
    }
    Ok(lambda)
}

/// All channel eigenvalues of a pair, in increasing channel order.
pub fn braiding_eigenvalues(l1: usize, l2: usize, cache: &mut Cache) -> Result<Vec<(usize, ScalarQ)>> {
    sel(l1, l2)
        .into_iter()
        .map(|ell| Ok((ell, braiding_eigenvalue(ell, l1, l2, cache)?)))
        .collect()
}

/// `(Delta (x) id)` or `(id (x) Delta)` applied to the R-matrix, as a matrix
/// on the three-letter word.
fn r_coproduct(word: &TensorWord, left_grouped: bool) -> Result<LinMap> {
    let letters = word.letters();
    let (l1, l2, l3) = (letters[0], letters[1], letters[2]);
    let (f_part, e_part, nmax): (LinMap, LinMap, usize) = if left_grouped {
        let sub = TensorWord::pair(l1, l2);
        (
            tensor_action_matrix(Gen::F, &sub, CoproductSide::Delta),
            generator_matrix(Gen::E, Irrep(l3)),
            (l1 + l2).min(l3),
        )
    } else {
        let sub = TensorWord::pair(l2, l3);
        (
            generator_matrix(Gen::F, Irrep(l1)),
            tensor_action_matrix(Gen::E, &sub, CoproductSide::Delta),
            l1.min(l2 + l3),
        )
    };
    let mut f_pow = LinMap::identity(f_part.domain().clone());
    let mut e_pow = LinMap::identity(e_part.domain().clone());
    let mut acc = LinMap::zeros(word.clone(), word.clone());
    for n in 0..=nmax {
        if n > 0 {
            f_pow = f_part.compose(&f_pow)?;
            e_pow = e_part.compose(&e_pow)?;
        }
        acc = acc.add(&f_pow.kron(&e_pow).scale(&series_coefficient(n)))?;
    }
    // Cartan factor across the grouped pair and the remaining leg
    let out = acc.scale_rows(|r| {
        let idx = word.unflatten(r);
        let w: Vec<i64> = letters
            .iter()
            .zip(idx.iter())
            .map(|(&l, &i)| l as i64 - 2 * i as i64)
            .collect();
        if left_grouped {
            ScalarQ::v_pow((w[0] + w[1]) * w[2])
        } else {
            ScalarQ::v_pow(w[0] * (w[1] + w[2]))
        }
    });
    Ok(out)
}

/// Quasi-triangularity and Yang-Baxter as exact matrix identities on the
/// word `(l1, l2, l3)`.
pub fn hexagon_check(l1: usize, l2: usize, l3: usize) -> Result<CheckReport> {
    let word = TensorWord::new(alloc::vec![l1, l2, l3]);
    let r12 = r_on_legs(&word, 0, 1);
    let r13 = r_on_legs(&word, 0, 2);
    let r23 = r_on_legs(&word, 1, 2);

    let mut report = CheckReport::new("hexagon", alloc::vec![l1 as i64, l2 as i64, l3 as i64]);

    if r_coproduct(&word, true)? != r13.compose(&r23)? {
        report.fail(format!("({l1},{l2},{l3}): (Delta x id)(R) != R13 R23"));
    }
    if r_coproduct(&word, false)? != r13.compose(&r12)? {
        report.fail(format!("({l1},{l2},{l3}): (id x Delta)(R) != R13 R12"));
    }
    let lhs = r12.compose(&r13.compose(&r23)?)?;
    let rhs = r23.compose(&r13.compose(&r12)?)?;
    if lhs != rhs {
        report.fail(format!("({l1},{l2},{l3}): Yang-Baxter fails"));
    }
    Ok(report)
}

/// Matrix of the inverse twist on a word, from the series
/// `(-1)^H K sum_n c_n (-K^-1 E)^n q^(-H^2/2) F^n` with all generators
/// acting through the iterated standard coproduct.
pub fn twist_inverse_matrix(word: &TensorWord) -> Result<LinMap> {
    let f = tensor_action_matrix(Gen::F, word, CoproductSide::Delta);
    let kinv_e = tensor_action_matrix(Gen::KInv, word, CoproductSide::Delta)
        .compose(&tensor_action_matrix(Gen::E, word, CoproductSide::Delta))?;
    let nmax: usize = word.letters().iter().sum();

    let mut f_pow = LinMap::identity(word.clone());
    let mut ke_pow = LinMap::identity(word.clone());
    let mut acc = LinMap::zeros(word.clone(), word.clone());
    for n in 0..=nmax {
        if n > 0 {
            f_pow = f.compose(&f_pow)?;
            ke_pow = kinv_e.compose(&ke_pow)?;
        }
        // q^(-H^2/2) between the raising and lowering parts
        let mid = f_pow.scale_rows(|r| {
            let w = word.weight_of(r);
            ScalarQ::v_pow(-w * w)
        });
        let sign = if n % 2 == 0 { ScalarQ::one() } else { -ScalarQ::one() };
        acc = acc.add(&ke_pow.compose(&mid)?.scale(&(series_coefficient(n) * sign)))?;
    }
    // leading (-1)^H K factor
    Ok(acc.scale_rows(|r| {
        let w = word.weight_of(r);
        let sign = if w.rem_euclid(2) == 0 { ScalarQ::one() } else { -ScalarQ::one() };
        sign * ScalarQ::q_pow(w)
    }))
}

/// The ribbon scalar of one irrep: the inverse-twist series is verified to
/// act as a scalar, inverted, and checked against `(-1)^ell q^(ell(ell+2)/2)`.
pub fn twist(ell: usize) -> Result<ScalarQ> {
    let inv = twist_inverse_matrix(&TensorWord::single(ell))?;
    let s = inv.as_scalar().ok_or_else(|| {
        Error::Consistency(format!("inverse twist on irrep {ell} is not scalar"))
    })?;
    let theta = s.inv()?;
    let sign = if ell.is_multiple_of(2) { ScalarQ::one() } else { -ScalarQ::one() };
    let expected = sign * ScalarQ::v_pow((ell * (ell + 2)) as i64);
    if theta != expected {
        return Err(Error::Consistency(format!(
            "twist on irrep {ell} is {theta}, expected {expected}"
        )));
    }
    Ok(theta)
}

/// Balancing of the twist against the double braiding, checked both as one
/// exact matrix identity on the pair and channel by channel on the scalars.
pub fn ribbon_check(l1: usize, l2: usize, cache: &mut Cache) -> Result<CheckReport> {
    let mut report = CheckReport::new("ribbon", alloc::vec![l1 as i64, l2 as i64]);
    let word = TensorWord::pair(l1, l2);

    let theta1 = twist(l1)?;
    let theta2 = twist(l2)?;
    let double = braiding(l2, l1).compose(&braiding(l1, l2))?;
    let rhs = double.scale(&(&theta1 * &theta2));
    let lhs_inv = twist_inverse_matrix(&word)?;
    if lhs_inv.compose(&rhs)? != LinMap::identity(word) {
        report.fail(format!(
            "({l1},{l2}): twist differs from (twist x twist) . double braiding"
        ));
    }

    for ell in sel(l1, l2) {
        let lam_ab = braiding_eigenvalue(ell, l1, l2, cache)?;
        let lam_ba = braiding_eigenvalue(ell, l2, l1, cache)?;
        let channel = &theta1 * &theta2 * lam_ab * lam_ba;
        if twist(ell)? != channel {
            report.fail(format!("({l1},{l2}) channel {ell}: scalar balancing fails"));
        }
    }
    Ok(report)
}

/// The braiding is a module map: it intertwines the coproduct action of each
/// generator between the two orders of the pair.
pub fn braiding_naturality(l1: usize, l2: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("braiding-naturality", alloc::vec![l1 as i64, l2 as i64]);
    let c = braiding(l1, l2);
    let w12 = TensorWord::pair(l1, l2);
    let w21 = TensorWord::pair(l2, l1);
    for gen in [Gen::K, Gen::KInv, Gen::E, Gen::F] {
        let lhs = c.compose(&tensor_action_matrix(gen, &w12, CoproductSide::Delta))?;
        let rhs = tensor_action_matrix(gen, &w21, CoproductSide::Delta).compose(&c)?;
        if lhs != rhs {
            report.fail(format!("({l1},{l2}): braiding does not intertwine {gen:?}"));
        }
    }
    Ok(report)
}

/// Quasi-triangularity and Yang-Baxter over all three-letter words up to
/// `lmax`.
pub fn hexagon_sweep(lmax: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("hexagon", alloc::vec![lmax as i64]);
    for l1 in 0..=lmax {
        for l2 in 0..=lmax {
            for l3 in 0..=lmax {
                report.absorb(hexagon_check(l1, l2, l3)?);
            }
        }
    }
    Ok(report)
}

/// Ribbon balancing over all pairs up to `lmax`.
pub fn ribbon_sweep(lmax: usize, cache: &mut Cache) -> Result<CheckReport> {
    let mut report = CheckReport::new("ribbon", alloc::vec![lmax as i64]);
    for l1 in 0..=lmax {
        for l2 in 0..=lmax {
            report.absorb(ribbon_check(l1, l2, cache)?);
        }
    }
    Ok(report)
}

/// Bundle of the braiding data of one pair, as surfaced by the CLI.
#[derive(Debug, Clone)]
pub struct BraidData {
    pub l1: usize,
    pub l2: usize,
    pub rmatrix: LinMap,
    pub braiding: LinMap,
    pub eigenvalues: Vec<(usize, ScalarQ)>,
}

pub fn braid_data(l1: usize, l2: usize, cache: &mut Cache) -> Result<BraidData> {
    Ok(BraidData {
        l1,
        l2,
        rmatrix: rmatrix(l1, l2),
        braiding: braiding(l1, l2),
        eigenvalues: braiding_eigenvalues(l1, l2, cache)?,
    })
}
