//! Type-I irreducible representations of the quantum group of sl2, their
//! generator actions, and iterated-coproduct actions on tensor words.
//!
//! Matrices are dense; at the label sizes this crate targets, dimensions stay
//! in the low hundreds and exact scalars dominate the cost anyway.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scalar::{qint, ScalarQ};

/// Algebra generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gen {
    K,
    KInv,
    E,
    F,
}

/// Which coproduct defines the tensor action: the standard one or its
/// opposite (the standard one composed with the flip).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoproductSide {
    Delta,
    DeltaOp,
}

/// Label of the (ell+1)-dimensional type-I irreducible representation.
///
/// Basis vector `i` (0 <= i <= ell) has weight `ell - 2i`; index 0 is the
/// highest-weight vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Irrep(pub usize);

impl Irrep {
    pub fn dim(self) -> usize {
        self.0 + 1
    }

    pub fn weight(self, i: usize) -> i64 {
        self.0 as i64 - 2 * i as i64
    }
}

/// An ordered tensor product of irreps, possibly empty (the scalar line).
///
/// Basis vectors are flattened with the leftmost factor most significant:
/// `(i_1, ..., i_k)` maps to `sum_j i_j * prod_{j' > j} (ell_{j'} + 1)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TensorWord(Vec<usize>);

impl TensorWord {
    pub fn new(letters: Vec<usize>) -> Self {
        TensorWord(letters)
    }

    pub fn empty() -> Self {
        TensorWord(Vec::new())
    }

    pub fn single(ell: usize) -> Self {
        TensorWord(vec![ell])
    }

    pub fn pair(l1: usize, l2: usize) -> Self {
        TensorWord(vec![l1, l2])
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.0.iter().map(|l| l + 1).product()
    }

    pub fn concat(&self, other: &TensorWord) -> TensorWord {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        TensorWord(letters)
    }

    /// `strides[j]` is the flat-index step of component `j`.
    pub fn strides(&self) -> Vec<usize> {
        let k = self.0.len();
        let mut s = vec![1usize; k];
        for j in (0..k.saturating_sub(1)).rev() {
            s[j] = s[j + 1] * (self.0[j + 1] + 1);
        }
        s
    }

    pub fn flatten(&self, indices: &[usize]) -> usize {
        debug_assert_eq!(indices.len(), self.0.len());
        let mut flat = 0;
        for (j, &i) in indices.iter().enumerate() {
            debug_assert!(i <= self.0[j]);
            flat = flat * (self.0[j] + 1) + i;
        }
        flat
    }

    pub fn unflatten(&self, mut flat: usize) -> Vec<usize> {
        let mut idx = vec![0usize; self.0.len()];
        for j in (0..self.0.len()).rev() {
            let d = self.0[j] + 1;
            idx[j] = flat % d;
            flat /= d;
        }
        idx
    }

    /// Total weight of a flat basis vector.
    pub fn weight_of(&self, flat: usize) -> i64 {
        let idx = self.unflatten(flat);
        self.0
            .iter()
            .zip(idx.iter())
            .map(|(&l, &i)| l as i64 - 2 * i as i64)
            .sum()
    }
}

/// A matrix of exact scalars between tensor words, stored row-major with
/// `codomain.dim()` rows and `domain.dim()` columns.
///
/// Composition only requires the dimensions to agree: flat coordinates
/// identify all bracketings of a word, which is exactly how the associator
/// acts here.
#[derive(Debug, Clone, PartialEq)]
pub struct LinMap {
    domain: TensorWord,
    codomain: TensorWord,
    entries: Vec<Vec<ScalarQ>>,
}

impl LinMap {
    pub fn zeros(domain: TensorWord, codomain: TensorWord) -> Self {
        let rows = codomain.dim();
        let cols = domain.dim();
        LinMap {
            domain,
            codomain,
            entries: vec![vec![ScalarQ::zero(); cols]; rows],
        }
    }

    pub fn identity(word: TensorWord) -> Self {
        let mut m = LinMap::zeros(word.clone(), word);
        for i in 0..m.entries.len() {
            m.entries[i][i] = ScalarQ::one();
        }
        m
    }

    /// Builds a map from the images of the domain basis vectors.
    pub fn from_columns(domain: TensorWord, codomain: TensorWord, cols: Vec<Vec<ScalarQ>>) -> Self {
        let rows = codomain.dim();
        debug_assert_eq!(cols.len(), domain.dim());
        debug_assert!(cols.iter().all(|c| c.len() == rows));
        let mut m = LinMap::zeros(domain, codomain);
        for (c, col) in cols.into_iter().enumerate() {
            for (r, val) in col.into_iter().enumerate() {
                m.entries[r][c] = val;
            }
        }
        m
    }

    pub fn domain(&self) -> &TensorWord {
        &self.domain
    }

    pub fn codomain(&self) -> &TensorWord {
        &self.codomain
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.domain.dim()
    }

    pub fn entry(&self, r: usize, c: usize) -> &ScalarQ {
        &self.entries[r][c]
    }

    pub fn set_entry(&mut self, r: usize, c: usize, v: ScalarQ) {
        self.entries[r][c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<ScalarQ> {
        self.entries.iter().map(|row| row[c].clone()).collect()
    }

    pub fn entries(&self) -> &Vec<Vec<ScalarQ>> {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|row| row.iter().all(|e| e.is_zero()))
    }

    pub fn apply(&self, x: &[ScalarQ]) -> Result<Vec<ScalarQ>> {
        if x.len() != self.cols() {
            return Err(Error::DimensionMismatch { expected: self.cols(), got: x.len() });
        }
        let mut out = vec![ScalarQ::zero(); self.rows()];
        for (c, xc) in x.iter().enumerate() {
            if xc.is_zero() {
                continue;
            }
            for (r, out_r) in out.iter_mut().enumerate() {
                let e = &self.entries[r][c];
                if !e.is_zero() {
                    *out_r = &*out_r + &(e * xc);
                }
            }
        }
        Ok(out)
    }

    /// `self` after `rhs` (matrix product `self * rhs`).
    pub fn compose(&self, rhs: &LinMap) -> Result<LinMap> {
        if self.cols() != rhs.rows() {
            return Err(Error::DimensionMismatch { expected: self.cols(), got: rhs.rows() });
        }
        let mut out = LinMap::zeros(rhs.domain.clone(), self.codomain.clone());
        for r in 0..self.rows() {
            for k in 0..self.cols() {
                let a = &self.entries[r][k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols() {
                    let b = &rhs.entries[k][c];
                    if !b.is_zero() {
                        out.entries[r][c] = &out.entries[r][c] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &LinMap) -> Result<LinMap> {
        if self.rows() != rhs.rows() || self.cols() != rhs.cols() {
            return Err(Error::DimensionMismatch { expected: self.rows(), got: rhs.rows() });
        }
        let mut out = self.clone();
        for r in 0..out.rows() {
            for c in 0..out.cols() {
                out.entries[r][c] = &out.entries[r][c] + &rhs.entries[r][c];
            }
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &LinMap) -> Result<LinMap> {
        self.add(&rhs.scale(&-ScalarQ::one()))
    }

    pub fn scale(&self, s: &ScalarQ) -> LinMap {
        let mut out = self.clone();
        for row in out.entries.iter_mut() {
            for e in row.iter_mut() {
                if !e.is_zero() {
                    *e = &*e * s;
                }
            }
        }
        out
    }

    /// Scales rows by a diagonal factor depending on the codomain basis index.
    pub fn scale_rows<FN: FnMut(usize) -> ScalarQ>(&self, mut f: FN) -> LinMap {
        let mut out = self.clone();
        for (r, row) in out.entries.iter_mut().enumerate() {
            let s = f(r);
            for e in row.iter_mut() {
                if !e.is_zero() {
                    *e = &*e * &s;
                }
            }
        }
        out
    }

    /// Kronecker product, concatenating the words of both factors.
    pub fn kron(&self, rhs: &LinMap) -> LinMap {
        let domain = self.domain.concat(&rhs.domain);
        let codomain = self.codomain.concat(&rhs.codomain);
        let mut out = LinMap::zeros(domain, codomain);
        let (ar, ac) = (self.rows(), self.cols());
        let (br, bc) = (rhs.rows(), rhs.cols());
        for i in 0..ar {
            for k in 0..ac {
                let a = &self.entries[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..br {
                    for l in 0..bc {
                        let b = &rhs.entries[j][l];
                        if !b.is_zero() {
                            out.entries[i * br + j][k * bc + l] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// The flip `u (x) v -> v (x) u` from the word `(l1, l2)` to `(l2, l1)`.
    pub fn swap(l1: usize, l2: usize) -> LinMap {
        let dom = TensorWord::pair(l1, l2);
        let cod = TensorWord::pair(l2, l1);
        let mut m = LinMap::zeros(dom.clone(), cod.clone());
        for i in 0..=l1 {
            for j in 0..=l2 {
                let c = dom.flatten(&[i, j]);
                let r = cod.flatten(&[j, i]);
                m.entries[r][c] = ScalarQ::one();
            }
        }
        m
    }

    /// If the map is a scalar multiple of the identity, returns the scalar.
    pub fn as_scalar(&self) -> Option<ScalarQ> {
        if self.rows() != self.cols() || self.rows() == 0 {
            return None;
        }
        let s = self.entries[0][0].clone();
        for r in 0..self.rows() {
            for c in 0..self.cols() {
                if r == c {
                    if self.entries[r][c] != s {
                        return None;
                    }
                } else if !self.entries[r][c].is_zero() {
                    return None;
                }
            }
        }
        Some(s)
    }
}

/// Image of the basis vector `e_i` under a generator, as a dense vector.
///
/// Out-of-range images are zero: `E e_0 = 0` and `F e_ell = 0`.
pub fn act_generator(gen: Gen, irrep: Irrep, i: usize) -> Result<Vec<ScalarQ>> {
    let d = irrep.dim();
    if i >= d {
        return Err(Error::IndexOutOfRange { index: i, dim: d });
    }
    let mut out = vec![ScalarQ::zero(); d];
    match gen {
        Gen::K => out[i] = ScalarQ::q_pow(irrep.weight(i)),
        Gen::KInv => out[i] = ScalarQ::q_pow(-irrep.weight(i)),
        Gen::E => {
            if i >= 1 {
                out[i - 1] = qint(i as i64) * qint(irrep.0 as i64 - i as i64 + 1);
            }
        }
        Gen::F => {
            if i + 1 < d {
                out[i + 1] = ScalarQ::one();
            }
        }
    }
    Ok(out)
}

/// Matrix of one generator on a single irrep.
pub fn generator_matrix(gen: Gen, irrep: Irrep) -> LinMap {
    let word = TensorWord::single(irrep.0);
    let cols = (0..irrep.dim())
        .map(|i| act_generator(gen, irrep, i).expect("index in range"))
        .collect();
    LinMap::from_columns(word.clone(), word, cols)
}

/// Sparse image of one flat basis vector of a word under the iterated
/// coproduct action of a generator.
fn action_on_basis(
    gen: Gen,
    word: &TensorWord,
    side: CoproductSide,
    flat: usize,
) -> Vec<(usize, ScalarQ)> {
    let letters = word.letters();
    let k = letters.len();
    let idx = word.unflatten(flat);
    let strides = word.strides();
    let weights: Vec<i64> = letters
        .iter()
        .zip(idx.iter())
        .map(|(&l, &i)| l as i64 - 2 * i as i64)
        .collect();
    let total: i64 = weights.iter().sum();

    match gen {
        Gen::K => return vec![(flat, ScalarQ::q_pow(total))],
        Gen::KInv => return vec![(flat, ScalarQ::q_pow(-total))],
        _ => {}
    }

    // Iterating the coproduct left to right gives, per slot j:
    //   Delta:   E_j with K before,     F_j with K^-1 after
    //   DeltaOp: E_j with K after,      F_j with K^-1 before
    let mut out = Vec::new();
    let mut prefix = 0i64;
    for j in 0..k {
        let suffix = total - prefix - weights[j];
        match gen {
            Gen::E => {
                if idx[j] >= 1 {
                    let coeff = qint(idx[j] as i64) * qint(letters[j] as i64 - idx[j] as i64 + 1);
                    let cartan = match side {
                        CoproductSide::Delta => prefix,
                        CoproductSide::DeltaOp => suffix,
                    };
                    out.push((flat - strides[j], coeff * ScalarQ::q_pow(cartan)));
                }
            }
            Gen::F => {
                if idx[j] < letters[j] {
                    let cartan = match side {
                        CoproductSide::Delta => -suffix,
                        CoproductSide::DeltaOp => -prefix,
                    };
                    out.push((flat + strides[j], ScalarQ::q_pow(cartan)));
                }
            }
            _ => unreachable!(),
        }
        prefix += weights[j];
    }
    out
}

/// Applies the iterated coproduct of a generator to a coefficient vector.
///
/// The empty word carries the counit action: `K` is the identity and `E`, `F`
/// act by zero.
pub fn act_tensor(
    gen: Gen,
    word: &TensorWord,
    side: CoproductSide,
    x: &[ScalarQ],
) -> Result<Vec<ScalarQ>> {
    let d = word.dim();
    if x.len() != d {
        return Err(Error::DimensionMismatch { expected: d, got: x.len() });
    }
    let mut out = vec![ScalarQ::zero(); d];
    for (flat, xc) in x.iter().enumerate() {
        if xc.is_zero() {
            continue;
        }
        for (target, coeff) in action_on_basis(gen, word, side, flat) {
            out[target] = &out[target] + &(coeff * xc);
        }
    }
    Ok(out)
}

/// Matrix of the iterated coproduct action on a word.
pub fn tensor_action_matrix(gen: Gen, word: &TensorWord, side: CoproductSide) -> LinMap {
    let mut m = LinMap::zeros(word.clone(), word.clone());
    for col in 0..word.dim() {
        for (row, val) in action_on_basis(gen, word, side, col) {
            m.set_entry(row, col, val);
        }
    }
    m
}

/// Pass/fail record for the four defining algebra relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RelationReport {
    /// `K K^-1 = K^-1 K = 1`
    pub k_invertible: bool,
    /// `K E = q^2 E K`
    pub ke_relation: bool,
    /// `K F = q^-2 F K`
    pub kf_relation: bool,
    /// `E F - F E = (K - K^-1)/(q - q^-1)`
    pub ef_commutator: bool,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.k_invertible && self.ke_relation && self.kf_relation && self.ef_commutator
    }
}

fn relations_of(k: &LinMap, kinv: &LinMap, e: &LinMap, f: &LinMap, word: TensorWord) -> RelationReport {
    let id = LinMap::identity(word);
    let q2 = ScalarQ::q_pow(2);
    let qm2 = ScalarQ::q_pow(-2);
    let denom = ScalarQ::q_pow(1) - ScalarQ::q_pow(-1);

    let k_invertible = k.compose(kinv).unwrap() == id && kinv.compose(k).unwrap() == id;
    let ke_relation = k.compose(e).unwrap() == e.compose(k).unwrap().scale(&q2);
    let kf_relation = k.compose(f).unwrap() == f.compose(k).unwrap().scale(&qm2);
    let lhs = e.compose(f).unwrap().sub(&f.compose(e).unwrap()).unwrap();
    let rhs = k.sub(kinv).unwrap().scale(&denom.inv().expect("q - q^-1 is nonzero"));
    let ef_commutator = lhs == rhs;

    RelationReport { k_invertible, ke_relation, kf_relation, ef_commutator }
}

/// Checks the defining relations as exact matrix identities on one irrep.
pub fn verify_relations(irrep: Irrep) -> RelationReport {
    relations_of(
        &generator_matrix(Gen::K, irrep),
        &generator_matrix(Gen::KInv, irrep),
        &generator_matrix(Gen::E, irrep),
        &generator_matrix(Gen::F, irrep),
        TensorWord::single(irrep.0),
    )
}

/// Checks the defining relations for the iterated coproduct action on a word.
pub fn verify_relations_on_word(word: &TensorWord, side: CoproductSide) -> RelationReport {
    relations_of(
        &tensor_action_matrix(Gen::K, word, side),
        &tensor_action_matrix(Gen::KInv, word, side),
        &tensor_action_matrix(Gen::E, word, side),
        &tensor_action_matrix(Gen::F, word, side),
        word.clone(),
    )
}

/// Exact bases of the joint kernel of the raising action on each weight
/// space, listed by decreasing weight; weights with trivial kernel are
/// omitted.
///
/// At generic `q` the number of vectors at weight `w = ell` is the
/// multiplicity of the irrep `ell` in the word, which makes this a
/// brute-force oracle for the fusion rules.
pub fn highest_weight_vectors(
    word: &TensorWord,
    side: CoproductSide,
) -> Vec<(i64, Vec<Vec<ScalarQ>>)> {
    use alloc::collections::BTreeMap;

    let d = word.dim();
    let e = tensor_action_matrix(Gen::E, word, side);
    let mut by_weight: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for flat in 0..d {
        by_weight.entry(word.weight_of(flat)).or_default().push(flat);
    }

    let mut out = Vec::new();
    for (&w, cols) in by_weight.iter().rev() {
        let rows = by_weight.get(&(w + 2)).cloned().unwrap_or_default();
        let sub: Vec<Vec<ScalarQ>> = rows
            .iter()
            .map(|&r| cols.iter().map(|&c| e.entry(r, c).clone()).collect())
            .collect();
        let kernel = crate::linalg::nullspace(&sub, cols.len());
        if kernel.is_empty() {
            continue;
        }
        let lifted: Vec<Vec<ScalarQ>> = kernel
            .into_iter()
            .map(|k| {
                let mut v = vec![ScalarQ::zero(); d];
                for (pos, &c) in cols.iter().enumerate() {
                    v[c] = k[pos].clone();
                }
                v
            })
            .collect();
        out.push((w, lifted));
    }
    out
}

/// Short human-readable label for failure lists.
pub fn word_label(word: &TensorWord) -> alloc::string::String {
    format!("{:?}", word.letters())
}
