//! Selection rules and Clebsch-Gordan embeddings/projections for both
//! coproducts.
//!
//! The embedding of a channel `ell` into the pair `(ell1, ell2)` is fixed on
//! the highest-weight vector by the standard coefficients
//!
//! ```text
//! C_j = (-1)^j  [ell1-j]!/([j]! [s-j]!) * [ell2-s+j]!/([ell1]! [ell2]!)
//!       * q^(j(ell1-j+1)) / (q - q^-1)^s,        s = (ell1 + ell2 - ell)/2
//! ```
//!
//! and extended to the whole irrep by propagating with the coproduct action
//! of `F`, which acts with coefficient one along the string. Every embedding
//! is checked to intertwine all four generators before it is returned.
//! Projections are obtained by exactly inverting the block matrix formed by
//! all embeddings of the pair, which is precisely the biorthogonality and
//! completeness condition.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::cache::Cache;
use crate::error::{Error, Result};
use crate::linalg;
use crate::rep::{
    act_tensor, generator_matrix, tensor_action_matrix, CoproductSide, Gen, Irrep, LinMap,
    TensorWord,
};
use crate::scalar::{qfact, ScalarQ};

/// Channels of the pair `(l1, l2)`: `|l1-l2| <= l <= l1+l2` with
/// `l + l1 + l2` even, sorted increasingly.
pub fn sel(l1: usize, l2: usize) -> Vec<usize> {
    let lo = l1.abs_diff(l2);
    let hi = l1 + l2;
    (lo..=hi).step_by(2).collect()
}

/// Common channels `Sel(l1, l2) ∩ Sel(l3, l4)`, sorted increasingly.
pub fn chan(l1: usize, l2: usize, l3: usize, l4: usize) -> Vec<usize> {
    let b = sel(l3, l4);
    sel(l1, l2).into_iter().filter(|l| b.binary_search(l).is_ok()).collect()
}

fn check_sel(ell: usize, l1: usize, l2: usize) -> Result<usize> {
    let lo = l1.abs_diff(l2);
    let hi = l1 + l2;
    if ell < lo || ell > hi || !(ell + l1 + l2).is_multiple_of(2) {
        return Err(Error::NotInSelectionRule { ell, ell1: l1, ell2: l2 });
    }
    Ok((l1 + l2 - ell) / 2)
}

/// Coefficient of `e_j (x) e_{s-j}` in the image of the highest-weight
/// vector.
fn cg_coefficient(l1: usize, l2: usize, s: usize, j: usize) -> ScalarQ {
    let sign = if j.is_multiple_of(2) { ScalarQ::one() } else { -ScalarQ::one() };
    let num = qfact((l1 - j) as u32)
        * qfact((l2 - s + j) as u32)
        * ScalarQ::q_pow((j * (l1 - j + 1)) as i64);
    let q_minus_qinv = ScalarQ::q_pow(1) - ScalarQ::q_pow(-1);
    let den = qfact(j as u32)
        * qfact((s - j) as u32)
        * qfact(l1 as u32)
        * qfact(l2 as u32)
        * q_minus_qinv.powi(s as i64).expect("nonzero base");
    sign * num / den
}

fn intertwiner_check(
    emb: &LinMap,
    ell: usize,
    word: &TensorWord,
    side: CoproductSide,
) -> Result<()> {
    for gen in [Gen::K, Gen::KInv, Gen::E, Gen::F] {
        let lhs = tensor_action_matrix(gen, word, side).compose(emb)?;
        let rhs = emb.compose(&generator_matrix(gen, Irrep(ell)))?;
        if lhs != rhs {
            return Err(Error::Consistency(format!(
                "embedding of {ell} into ({}, {}) fails to intertwine {gen:?} for {side:?}",
                word.letters()[0],
                word.letters()[1],
            )));
        }
    }
    Ok(())
}

/// The fixed injective module map from the channel `ell` into the tensor
/// word `(l1, l2)` formed with the requested coproduct.
pub fn cg_embedding(
    ell: usize,
    l1: usize,
    l2: usize,
    side: CoproductSide,
    cache: &mut Cache,
) -> Result<LinMap> {
    let s = check_sel(ell, l1, l2)?;
    if let Some(m) = cache.embeddings.get(&(ell, l1, l2, side)) {
        return Ok(m.clone());
    }
    let word = TensorWord::pair(l1, l2);
    let emb = match side {
        CoproductSide::Delta => {
            let mut top = vec![ScalarQ::zero(); word.dim()];
            for j in 0..=s {
                top[word.flatten(&[j, s - j])] = cg_coefficient(l1, l2, s, j);
            }
            let mut cols = Vec::with_capacity(ell + 1);
            cols.push(top);
            for k in 1..=ell {
                let next = act_tensor(Gen::F, &word, side, &cols[k - 1])?;
                cols.push(next);
            }
            LinMap::from_columns(TensorWord::single(ell), word.clone(), cols)
        }
        CoproductSide::DeltaOp => {
            // flip of the opposite-order embedding for the standard coproduct
            let base = cg_embedding(ell, l2, l1, CoproductSide::Delta, cache)?;
            LinMap::swap(l2, l1).compose(&base)?
        }
    };
    intertwiner_check(&emb, ell, &word, side)?;
    cache.embeddings.insert((ell, l1, l2, side), emb.clone());
    Ok(emb)
}

/// The projection onto the channel `ell`, dual to [`cg_embedding`].
///
/// The whole family for the pair is computed at once by inverting the block
/// matrix of all embeddings; a singular block matrix cannot occur at generic
/// `q` and is reported as an internal error.
pub fn cg_projection(
    ell: usize,
    l1: usize,
    l2: usize,
    side: CoproductSide,
    cache: &mut Cache,
) -> Result<LinMap> {
    check_sel(ell, l1, l2)?;
    if let Some(m) = cache.projections.get(&(ell, l1, l2, side)) {
        return Ok(m.clone());
    }
    let word = TensorWord::pair(l1, l2);
    let dim = word.dim();
    let channels = sel(l1, l2);

    let mut big: linalg::Matrix = vec![vec![ScalarQ::zero(); dim]; dim];
    let mut offsets = Vec::with_capacity(channels.len());
    let mut offset = 0usize;
    for &ch in &channels {
        let emb = cg_embedding(ch, l1, l2, side, cache)?;
        for c in 0..=ch {
            for (r, row) in big.iter_mut().enumerate() {
                row[offset + c] = emb.entry(r, c).clone();
            }
        }
        offsets.push(offset);
        offset += ch + 1;
    }
    debug_assert_eq!(offset, dim);

    let inv = linalg::invert(&big)?;
    for (&ch, &off) in channels.iter().zip(offsets.iter()) {
        let mut proj = LinMap::zeros(word.clone(), TensorWord::single(ch));
        for r in 0..=ch {
            for (c, v) in inv[off + r].iter().enumerate() {
                proj.set_entry(r, c, v.clone());
            }
        }
        cache.projections.insert((ch, l1, l2, side), proj);
    }
    Ok(cache.projections[&(ell, l1, l2, side)].clone())
}

/// Sweeps all pairs up to `lmax` and both coproducts: every embedding must
/// intertwine the generators, and the projection family must be biorthogonal
/// and complete. Failures are listed per pair and side.
pub fn intertwiner_sweep(lmax: usize, cache: &mut Cache) -> Result<crate::report::CheckReport> {
    let mut report = crate::report::CheckReport::new("intertwiner", vec![lmax as i64]);
    for l1 in 0..=lmax {
        for l2 in 0..=lmax {
            let word = TensorWord::pair(l1, l2);
            for side in [CoproductSide::Delta, CoproductSide::DeltaOp] {
                let tag = match side {
                    CoproductSide::Delta => "delta",
                    CoproductSide::DeltaOp => "delta_op",
                };
                let channels = sel(l1, l2);
                let mut embs = Vec::with_capacity(channels.len());
                let mut projs = Vec::with_capacity(channels.len());
                for &ell in &channels {
                    // construction re-verifies the intertwining property
                    match cg_embedding(ell, l1, l2, side, cache) {
                        Ok(e) => embs.push(e),
                        Err(e) => {
                            report.fail(format!("({l1},{l2}) {tag} channel {ell}: {e}"));
                            continue;
                        }
                    }
                    match cg_projection(ell, l1, l2, side, cache) {
                        Ok(p) => projs.push(p),
                        Err(e) => report.fail(format!("({l1},{l2}) {tag} channel {ell}: {e}")),
                    }
                }
                if embs.len() != channels.len() || projs.len() != channels.len() {
                    continue;
                }
                for (i, proj) in projs.iter().enumerate() {
                    for (j, emb) in embs.iter().enumerate() {
                        let comp = proj.compose(emb)?;
                        let good = if i == j {
                            comp == LinMap::identity(TensorWord::single(channels[i]))
                        } else {
                            comp.is_zero()
                        };
                        if !good {
                            report.fail(format!(
                                "({l1},{l2}) {tag}: biorthogonality fails at ({}, {})",
                                channels[i], channels[j]
                            ));
                        }
                    }
                }
                let mut sum = LinMap::zeros(word.clone(), word.clone());
                for (emb, proj) in embs.iter().zip(&projs) {
                    sum = sum.add(&emb.compose(proj)?)?;
                }
                if sum != LinMap::identity(word.clone()) {
                    report.fail(format!("({l1},{l2}) {tag}: completeness fails"));
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> ScalarQ {
        ScalarQ::q_pow(1)
    }

    fn q_minus_qinv() -> ScalarQ {
        ScalarQ::q_pow(1) - ScalarQ::q_pow(-1)
    }

    // ---- selection rule ----

    #[test]
    fn sel_examples() {
        assert_eq!(sel(0, 5), vec![5]);
        assert_eq!(sel(1, 1), vec![0, 2]);
        assert_eq!(sel(2, 3), vec![1, 3, 5]);
        for l1 in 0..=6 {
            for l2 in 0..=6 {
                assert_eq!(sel(l1, l2), sel(l2, l1));
                assert_eq!(sel(l1, l2).len(), l1.min(l2) + 1);
            }
        }
        assert_eq!(chan(1, 1, 2, 2), vec![0, 2]);
        assert_eq!(chan(1, 1, 1, 2), vec![]);
    }

    // ---- embeddings ----

    #[test]
    fn embedding_singlet_of_two_spins() {
        let mut cache = Cache::new();
        let emb = cg_embedding(0, 1, 1, CoproductSide::Delta, &mut cache).unwrap();
        let word = TensorWord::pair(1, 1);
        let d = q_minus_qinv();
        assert_eq!(emb.entry(word.flatten(&[0, 1]), 0), &(ScalarQ::one() / &d));
        assert_eq!(emb.entry(word.flatten(&[1, 0]), 0), &(-q() / &d));
        assert!(emb.entry(word.flatten(&[0, 0]), 0).is_zero());
        assert!(emb.entry(word.flatten(&[1, 1]), 0).is_zero());
    }

    #[test]
    fn embedding_with_unit_leg() {
        let mut cache = Cache::new();
        let emb = cg_embedding(3, 0, 3, CoproductSide::Delta, &mut cache).unwrap();
        assert_eq!(emb, LinMap::from_columns(
            TensorWord::single(3),
            TensorWord::pair(0, 3),
            (0..4)
                .map(|i| {
                    let mut col = vec![ScalarQ::zero(); 4];
                    col[i] = ScalarQ::one();
                    col
                })
                .collect(),
        ));
    }

    #[test]
    fn embedding_top_channel() {
        let mut cache = Cache::new();
        let emb = cg_embedding(2, 1, 1, CoproductSide::Delta, &mut cache).unwrap();
        let word = TensorWord::pair(1, 1);
        assert!(emb.entry(word.flatten(&[0, 0]), 0).is_one());
        for flat in 1..4 {
            assert!(emb.entry(flat, 0).is_zero());
        }
    }

    #[test]
    fn embedding_rejects_bad_channel() {
        let mut cache = Cache::new();
        assert_eq!(
            cg_embedding(1, 1, 1, CoproductSide::Delta, &mut cache),
            Err(Error::NotInSelectionRule { ell: 1, ell1: 1, ell2: 1 })
        );
        assert!(cg_embedding(7, 2, 3, CoproductSide::DeltaOp, &mut cache).is_err());
    }

    #[test]
    fn embeddings_are_injective() {
        let mut cache = Cache::new();
        for (l1, l2) in [(1, 1), (2, 2), (2, 3)] {
            for &ell in sel(l1, l2).iter() {
                for side in [CoproductSide::Delta, CoproductSide::DeltaOp] {
                    let emb = cg_embedding(ell, l1, l2, side, &mut cache).unwrap();
                    assert_eq!(linalg::rank(emb.entries()), ell + 1);
                }
            }
        }
    }

    // ---- projections ----

    #[test]
    fn biorthogonality_and_completeness() {
        let mut cache = Cache::new();
        let word = TensorWord::pair(1, 1);
        let p0 = cg_projection(0, 1, 1, CoproductSide::Delta, &mut cache).unwrap();
        let p2 = cg_projection(2, 1, 1, CoproductSide::Delta, &mut cache).unwrap();
        let i0 = cg_embedding(0, 1, 1, CoproductSide::Delta, &mut cache).unwrap();
        let i2 = cg_embedding(2, 1, 1, CoproductSide::Delta, &mut cache).unwrap();

        assert_eq!(p0.compose(&i0).unwrap(), LinMap::identity(TensorWord::single(0)));
        assert!(p2.compose(&i0).unwrap().is_zero());
        assert!(p0.compose(&i2).unwrap().is_zero());

        let sum = i0.compose(&p0).unwrap().add(&i2.compose(&p2).unwrap()).unwrap();
        assert_eq!(sum, LinMap::identity(word));
    }

    #[test]
    fn hwv_count_matches_selection_rule() {
        use crate::rep::highest_weight_vectors;
        for l1 in 0..=4 {
            for l2 in 0..=4 {
                let word = TensorWord::pair(l1, l2);
                let channels = sel(l1, l2);
                for side in [CoproductSide::Delta, CoproductSide::DeltaOp] {
                    let hw = highest_weight_vectors(&word, side);
                    let found: Vec<usize> = hw
                        .iter()
                        .rev()
                        .map(|(w, basis)| {
                            assert_eq!(basis.len(), 1, "multiplicity-free at ({l1},{l2})");
                            *w as usize
                        })
                        .collect();
                    assert_eq!(found, channels, "({l1},{l2}) {side:?}");
                }
            }
        }
    }
}
