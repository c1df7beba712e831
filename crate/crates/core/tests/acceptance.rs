//! Acceptance suite: the verifiable content of the equivalence between the
//! braided category of type-I quantum-group modules and the first-row
//! Virasoro data, each criterion at its stated scale and tolerance.
//!
//! Every test prints one `criterion N (...): PASS/FAIL` line; run with
//! `cargo test --test acceptance -- --nocapture` to see them all.

use num_rational::BigRational;
use qcat_core::braid::{
    braiding_eigenvalue, hexagon_check, ribbon_check, twist,
};
use qcat_core::fusion::{cg_embedding, cg_projection, sel};
use qcat_core::rep::{
    generator_matrix, highest_weight_vectors, tensor_action_matrix, Gen, Irrep, LinMap,
};
use qcat_core::sixj::{pentagon_check, sixj};
use qcat_core::virasoro::{b_const, braid_phase, kac_first_row_check, twist_phase};
use qcat_core::{Cache, CoproductSide, TensorWord};

const PHASE_TOL: f64 = 1e-9;
const B_SYMMETRY_TOL: f64 = 1e-9;
const SAMPLE_T: [f64; 3] = [0.37, 0.41, 0.73];

fn conclude(number: u32, name: &str, pass: bool) {
    println!(
        "criterion {number} ({name}): {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {number} ({name}) failed");
}

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn criterion_1_intertwiner_suite() {
    let mut cache = Cache::new();
    let mut pass = true;
    for l1 in 0..=6usize {
        for l2 in 0..=6usize {
            let word = TensorWord::pair(l1, l2);
            let channels = sel(l1, l2);
            for side in [CoproductSide::Delta, CoproductSide::DeltaOp] {
                let actions: Vec<(Gen, LinMap)> = [Gen::K, Gen::E, Gen::F]
                    .into_iter()
                    .map(|g| (g, tensor_action_matrix(g, &word, side)))
                    .collect();
                let embs: Vec<LinMap> = channels
                    .iter()
                    .map(|&ell| cg_embedding(ell, l1, l2, side, &mut cache).unwrap())
                    .collect();
                let projs: Vec<LinMap> = channels
                    .iter()
                    .map(|&ell| cg_projection(ell, l1, l2, side, &mut cache).unwrap())
                    .collect();

                // every embedding commutes with the generator actions
                for (ell, emb) in channels.iter().zip(&embs) {
                    for (gen, act) in &actions {
                        let lhs = act.compose(emb).unwrap();
                        let rhs = emb.compose(&generator_matrix(*gen, Irrep(*ell))).unwrap();
                        pass &= lhs == rhs;
                    }
                }
                // biorthogonality
                for (i, proj) in projs.iter().enumerate() {
                    for (j, emb) in embs.iter().enumerate() {
                        let comp = proj.compose(emb).unwrap();
                        if i == j {
                            pass &= comp == LinMap::identity(TensorWord::single(channels[i]));
                        } else {
                            pass &= comp.is_zero();
                        }
                    }
                }
                // completeness
                let mut sum = LinMap::zeros(word.clone(), word.clone());
                for (emb, proj) in embs.iter().zip(&projs) {
                    sum = sum.add(&emb.compose(proj).unwrap()).unwrap();
                }
                pass &= sum == LinMap::identity(word.clone());
            }
        }
    }
    conclude(1, "intertwiner suite", pass);
}

#[test]
fn criterion_2_fusion_equivalence() {
    let mut pass = true;
    for l1 in 0..=6usize {
        for l2 in 0..=6usize {
            let word = TensorWord::pair(l1, l2);
            let channels = sel(l1, l2);
            for side in [CoproductSide::Delta, CoproductSide::DeltaOp] {
                let hw = highest_weight_vectors(&word, side);
                let total: usize = hw.iter().map(|(_, basis)| basis.len()).sum();
                pass &= total == channels.len();
                // the weights found are exactly the channels, once each
                let mut found: Vec<usize> = Vec::new();
                for (w, basis) in &hw {
                    pass &= basis.len() == 1;
                    found.push(*w as usize);
                }
                found.sort_unstable();
                pass &= found == channels;
            }
        }
    }
    conclude(2, "fusion equivalence", pass);
}

#[test]
fn criterion_3_pentagon() {
    let mut cache = Cache::new();
    let report = pentagon_check(4, &mut cache).unwrap();
    if !report.pass {
        eprintln!("pentagon failures: {:?}", report.failures);
    }
    // the tables entering the identity are invertible changes of basis
    let mut invertible = true;
    for l1 in 0..=4usize {
        for l2 in 0..=4usize {
            for l3 in 0..=4usize {
                for l4 in 0..=4usize {
                    invertible &= sixj(l1, l2, l3, l4, &mut cache).unwrap().is_invertible();
                }
            }
        }
    }
    conclude(3, "pentagon", report.pass && invertible);
}

#[test]
fn criterion_4_hexagon_yang_baxter() {
    let mut pass = true;
    for l1 in 0..=3usize {
        for l2 in 0..=3usize {
            for l3 in 0..=3usize {
                let report = hexagon_check(l1, l2, l3).unwrap();
                if !report.pass {
                    eprintln!("hexagon failures: {:?}", report.failures);
                }
                pass &= report.pass;
            }
        }
    }
    conclude(4, "hexagon and Yang-Baxter", pass);
}

#[test]
fn criterion_5_braiding_eigenvalues() {
    // braiding_eigenvalue returns an error unless the matrix computation
    // agrees exactly with the closed form on every channel
    let mut cache = Cache::new();
    let mut pass = true;
    for l1 in 0..=6usize {
        for l2 in 0..=6usize {
            for ell in sel(l1, l2) {
                pass &= braiding_eigenvalue(ell, l1, l2, &mut cache).is_ok();
            }
        }
    }
    conclude(5, "braiding eigenvalues", pass);
}

#[test]
fn criterion_6_twist_and_ribbon() {
    let mut cache = Cache::new();
    let mut pass = true;
    // twist() verifies scalar action and the closed form internally
    for ell in 0..=8usize {
        pass &= twist(ell).is_ok();
    }
    for l1 in 0..=5usize {
        for l2 in 0..=5usize {
            match ribbon_check(l1, l2, &mut cache) {
                Ok(report) => {
                    if !report.pass {
                        eprintln!("ribbon failures: {:?}", report.failures);
                    }
                    pass &= report.pass;
                }
                Err(e) => {
                    eprintln!("ribbon error at ({l1},{l2}): {e}");
                    pass = false;
                }
            }
        }
    }
    conclude(6, "twist and ribbon", pass);
}

#[test]
fn criterion_7_equivalence_phases() {
    let mut cache = Cache::new();
    let mut pass = true;
    let mut max_braid_dev = 0.0f64;
    let mut max_twist_dev = 0.0f64;
    for &t in &SAMPLE_T {
        for l1 in 0..=6usize {
            for l2 in 0..=6usize {
                for ell in sel(l1, l2) {
                    let lambda = braiding_eigenvalue(ell, l1, l2, &mut cache).unwrap();
                    let lhs = lambda.eval_at(t).unwrap();
                    let rhs = braid_phase(ell, l1, l2, t).unwrap();
                    max_braid_dev = max_braid_dev.max(lhs.dist(rhs));
                }
            }
        }
        for ell in 0..=12usize {
            let theta = twist(ell).unwrap();
            let lhs = theta.eval_at(t).unwrap();
            let rhs = twist_phase(ell, t);
            max_twist_dev = max_twist_dev.max(lhs.dist(rhs));
        }
    }
    pass &= max_braid_dev < PHASE_TOL && max_twist_dev < PHASE_TOL;
    println!(
        "  max braiding-phase deviation {max_braid_dev:.3e}, \
         max twist-phase deviation {max_twist_dev:.3e} (tol {PHASE_TOL:.0e})"
    );
    conclude(7, "equivalence phases", pass);
}

#[test]
fn criterion_8_kac_reducibility() {
    // the criterion is the exact vanishing at level ell+1; lower-level
    // determinants can hit accidental coincidences at rational t and are
    // reported by the oracle, not asserted
    let mut pass = true;
    for (n, d) in [(3i64, 5i64), (5, 7), (7, 11)] {
        let t = rational(n, d);
        for ell in 0..=5usize {
            match kac_first_row_check(ell, &t, 8) {
                Ok(report) => {
                    if !report.reducible_at_expected_level {
                        eprintln!("kac failure at ell={ell}, t={n}/{d}: {report:?}");
                    }
                    pass &= report.reducible_at_expected_level;
                }
                Err(e) => {
                    eprintln!("kac error at ell={ell}, t={n}/{d}: {e}");
                    pass = false;
                }
            }
        }
    }
    conclude(8, "Kac reducibility", pass);
}

#[test]
fn criterion_9_b_constant_symmetry() {
    let mut pass = true;
    let mut max_rel = 0.0f64;
    for &t in &SAMPLE_T {
        for l1 in 0..=5usize {
            for l2 in 0..=5usize {
                for l3 in sel(l1, l2) {
                    let x = b_const(l1, l2, l3, t).unwrap();
                    let y = b_const(l2, l1, l3, t).unwrap();
                    let scale = x.abs().max(y.abs()).max(f64::MIN_POSITIVE);
                    max_rel = max_rel.max((x - y).abs() / scale);
                }
            }
        }
    }
    pass &= max_rel < B_SYMMETRY_TOL;
    println!("  max relative B-constant asymmetry {max_rel:.3e} (tol {B_SYMMETRY_TOL:.0e})");
    conclude(9, "B-constant symmetry", pass);
}
