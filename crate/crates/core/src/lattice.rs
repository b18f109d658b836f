//! Integral lattices: Gram matrices, the bilinear pairing, signature,
//! discriminant, orthogonal sums and sublattices.
//!
//! All arithmetic is exact over arbitrary-precision integers. Signatures are
//! computed from the characteristic polynomial with Descartes root-sign
//! counting, which is exact for real symmetric matrices; no floating point
//! is used anywhere.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Integer coordinate tuple relative to a lattice basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector {
    coords: Vec<BigInt>,
}

impl LatticeVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        LatticeVector { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        LatticeVector {
            coords: coords.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn zero(rank: usize) -> Self {
        LatticeVector {
            coords: vec![BigInt::zero(); rank],
        }
    }

    /// The i-th standard basis vector.
    pub fn basis(rank: usize, i: usize) -> Self {
        let mut coords = vec![BigInt::zero(); rank];
        coords[i] = BigInt::one();
        LatticeVector { coords }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// True iff the gcd of the coordinates is 1. Undefined on the zero vector.
    pub fn is_primitive(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        let mut g = BigInt::zero();
        for c in &self.coords {
            g = g.gcd(c);
        }
        Ok(g.is_one())
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        LatticeVector {
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    /// Appends one coordinate, embedding into a lattice of rank + 1.
    pub fn extended(&self, last: BigInt) -> Self {
        let mut coords = self.coords.clone();
        coords.push(last);
        LatticeVector { coords }
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        assert_eq!(self.len(), rhs.len());
        LatticeVector {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: &LatticeVector) -> LatticeVector {
        assert_eq!(self.len(), rhs.len());
        LatticeVector {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Inertia of a real symmetric form: counts of positive, negative and zero
/// eigenvalue signs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignatureProfile {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

impl fmt::Display for SignatureProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n_plus, self.n_minus, self.n_zero)
    }
}

/// A finite-rank free module with an integer-valued symmetric bilinear form.
///
/// Labels are cosmetic basis names with no arithmetic meaning. Rank 0 is
/// permitted (it is the identity of the orthogonal sum), and degenerate Gram
/// matrices are legal values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralLattice {
    rank: usize,
    gram: Vec<Vec<BigInt>>,
    labels: Option<Vec<String>>,
}

impl IntegralLattice {
    pub fn new(gram: Vec<Vec<BigInt>>, labels: Option<Vec<String>>) -> Result<Self> {
        let rank = gram.len();
        for (row, r) in gram.iter().enumerate() {
            if r.len() != rank {
                return Err(Error::RaggedGram {
                    row,
                    len: r.len(),
                    rank,
                });
            }
        }
        for i in 0..rank {
            for j in (i + 1)..rank {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::AsymmetricGram { row: i, col: j });
                }
            }
        }
        if let Some(ls) = &labels {
            if ls.len() != rank {
                return Err(Error::LabelCount {
                    rank,
                    len: ls.len(),
                });
            }
            for (i, l) in ls.iter().enumerate() {
                if ls[..i].contains(l) {
                    return Err(Error::DuplicateLabel(l.clone()));
                }
            }
        }
        Ok(IntegralLattice { rank, gram, labels })
    }

    /// Builds a lattice from integer rows; panics on a malformed matrix.
    /// Intended for literal Gram matrices.
    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let gram = rows
            .iter()
            .map(|r| r.iter().map(|&c| BigInt::from(c)).collect())
            .collect();
        IntegralLattice::new(gram, None).expect("malformed literal Gram matrix")
    }

    pub fn diagonal(entries: &[i64]) -> Self {
        let rank = entries.len();
        let mut gram = vec![vec![BigInt::zero(); rank]; rank];
        for (i, &d) in entries.iter().enumerate() {
            gram[i][i] = BigInt::from(d);
        }
        IntegralLattice::new(gram, None).unwrap()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.rank {
            return Err(Error::LabelCount {
                rank: self.rank,
                len: labels.len(),
            });
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gram(&self) -> &[Vec<BigInt>] {
        &self.gram
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label_index(&self, name: &str) -> Option<usize> {
        self.labels
            .as_ref()
            .and_then(|ls| ls.iter().position(|l| l == name))
    }

    fn check_len(&self, v: &LatticeVector) -> Result<()> {
        if v.len() != self.rank {
            return Err(Error::DimensionMismatch {
                rank: self.rank,
                len: v.len(),
            });
        }
        Ok(())
    }

    /// The bilinear pairing x^T . gram . y.
    pub fn pair(&self, x: &LatticeVector, y: &LatticeVector) -> Result<BigInt> {
        self.check_len(x)?;
        self.check_len(y)?;
        let mut acc = BigInt::zero();
        for (i, xi) in x.coords().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let mut row = BigInt::zero();
            for (j, yj) in y.coords().iter().enumerate() {
                if !yj.is_zero() {
                    row += &self.gram[i][j] * yj;
                }
            }
            acc += xi * row;
        }
        Ok(acc)
    }

    /// The quadratic form pair(x, x).
    pub fn square(&self, x: &LatticeVector) -> Result<BigInt> {
        self.pair(x, x)
    }

    /// Exact inertia via the characteristic polynomial. All roots of the
    /// characteristic polynomial of a symmetric matrix are real, so Descartes'
    /// rule counts positive roots exactly.
    pub fn signature(&self) -> SignatureProfile {
        let coeffs = char_poly(&self.gram);
        let n = self.rank;
        // multiplicity of the zero eigenvalue = trailing zero coefficients
        let mut n_zero = 0;
        while n_zero < n && coeffs[n - n_zero].is_zero() {
            n_zero += 1;
        }
        // char_poly returns det(xI - A); sign changes of the nonzero
        // coefficients of p(x)/x^{n_zero} count the positive eigenvalues
        let active = &coeffs[..=n - n_zero];
        let mut n_plus = 0;
        let mut last_sign = 0i8;
        for c in active {
            if c.is_zero() {
                continue;
            }
            let s = if c.is_positive() { 1 } else { -1 };
            if last_sign != 0 && s != last_sign {
                n_plus += 1;
            }
            last_sign = s;
        }
        SignatureProfile {
            n_plus,
            n_minus: n - n_zero - n_plus,
            n_zero,
        }
    }

    /// det(gram), exactly. The rank-0 lattice has discriminant 1.
    pub fn discriminant(&self) -> BigInt {
        bareiss_det(&self.gram)
    }

    /// Block-diagonal Gram sum. Labels are concatenated; a label of `other`
    /// colliding with one of `self` gets a numeric suffix.
    pub fn orthogonal_sum(&self, other: &IntegralLattice) -> IntegralLattice {
        let rank = self.rank + other.rank;
        let mut gram = vec![vec![BigInt::zero(); rank]; rank];
        for i in 0..self.rank {
            for j in 0..self.rank {
                gram[i][j] = self.gram[i][j].clone();
            }
        }
        for i in 0..other.rank {
            for j in 0..other.rank {
                gram[self.rank + i][self.rank + j] = other.gram[i][j].clone();
            }
        }
        let labels = match (&self.labels, &other.labels) {
            (None, None) => None,
            _ => {
                let default =
                    |prefix: &str, k: usize| -> Vec<String> {
                        (0..k).map(|i| format!("{prefix}{}", i + 1)).collect()
                    };
                let mut merged = self
                    .labels
                    .clone()
                    .unwrap_or_else(|| default("v", self.rank));
                for l in other
                    .labels
                    .clone()
                    .unwrap_or_else(|| default("w", other.rank))
                {
                    let mut candidate = l.clone();
                    let mut k = 2;
                    while merged.contains(&candidate) {
                        candidate = format!("{l}_{k}");
                        k += 1;
                    }
                    merged.push(candidate);
                }
                Some(merged)
            }
        };
        IntegralLattice {
            rank,
            gram,
            labels,
        }
    }

    /// Gram matrix of pairwise pairings of the given vectors. Degenerate
    /// results (repeated or dependent vectors) are legal.
    pub fn sublattice_gram(&self, vectors: &[LatticeVector]) -> Result<IntegralLattice> {
        if vectors.is_empty() {
            return Err(Error::EmptyVectors);
        }
        for v in vectors {
            self.check_len(v)?;
        }
        let k = vectors.len();
        let mut gram = vec![vec![BigInt::zero(); k]; k];
        for i in 0..k {
            for j in i..k {
                let p = self.pair(&vectors[i], &vectors[j])?;
                gram[i][j] = p.clone();
                gram[j][i] = p;
            }
        }
        Ok(IntegralLattice {
            rank: k,
            gram,
            labels: None,
        })
    }

    /// True iff the signature is (1, rank-1, 0), the shape of the Picard
    /// lattice of a smooth projective surface.
    pub fn hodge_index_valid(&self) -> bool {
        if self.rank == 0 {
            return false;
        }
        self.signature()
            == SignatureProfile {
                n_plus: 1,
                n_minus: self.rank - 1,
                n_zero: 0,
            }
    }
}

/// Coefficients [1, c1, ..., cn] of det(xI - A) = x^n + c1 x^{n-1} + ... + cn,
/// by the Faddeev-LeVerrier recurrence. The divisions are exact over Z.
fn char_poly(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = a.len();
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(BigInt::one());
    // m = A, c1 = -tr(A); m <- A(m + c I) thereafter
    let mut m = a.to_vec();
    for k in 1..=n {
        let tr: BigInt = (0..n).map(|i| m[i][i].clone()).sum();
        let c = -tr / BigInt::from(k as i64);
        coeffs.push(c.clone());
        if k == n {
            break;
        }
        let mut shifted = m.clone();
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] += &c;
        }
        m = mat_mul(a, &shifted);
    }
    coeffs
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

/// Fraction-free determinant (Bareiss). Exact over Z.
fn bareiss_det(gram: &[Vec<BigInt>]) -> BigInt {
    let n = gram.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = gram.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            // pivot search below row k
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(coords: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(coords)
    }

    #[test]
    fn pair_quartic_octic_table() {
        // k = 9 row of the quartic/octic family
        let l = IntegralLattice::from_rows(&[&[4, 9], &[9, 8]]);
        assert_eq!(l.pair(&v(&[1, 0]), &v(&[0, 1])).unwrap(), BigInt::from(9));
    }

    #[test]
    fn pair_zero_vector() {
        let l = IntegralLattice::from_rows(&[&[4, 9], &[9, 8]]);
        assert_eq!(l.pair(&v(&[0, 0]), &v(&[7, -3])).unwrap(), BigInt::zero());
    }

    #[test]
    fn pair_hyperbolic_diagonal() {
        let l = IntegralLattice::from_rows(&[&[2, 0], &[0, -2]]);
        // 2*1^2 - 2*1^2
        assert_eq!(l.pair(&v(&[1, 1]), &v(&[1, 1])).unwrap(), BigInt::zero());
    }

    #[test]
    fn pair_dimension_mismatch() {
        let l = IntegralLattice::from_rows(&[&[2]]);
        assert!(matches!(
            l.pair(&v(&[1, 0]), &v(&[1])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn asymmetric_gram_rejected() {
        let gram = vec![
            vec![BigInt::from(1), BigInt::from(2)],
            vec![BigInt::from(3), BigInt::from(4)],
        ];
        assert!(matches!(
            IntegralLattice::new(gram, None),
            Err(Error::AsymmetricGram { row: 0, col: 1 })
        ));
    }

    #[test]
    fn duplicate_labels_rejected() {
        let l = IntegralLattice::from_rows(&[&[2, 0], &[0, -2]]);
        assert!(matches!(
            l.with_labels(vec!["a".into(), "a".into()]),
            Err(Error::DuplicateLabel(_))
        ));
    }

    #[test]
    fn signature_indefinite_rank2() {
        let l = IntegralLattice::from_rows(&[&[4, 9], &[9, 8]]);
        let s = l.signature();
        assert_eq!((s.n_plus, s.n_minus, s.n_zero), (1, 1, 0));
    }

    #[test]
    fn signature_diagonal() {
        let l = IntegralLattice::from_rows(&[&[2, 0], &[0, -2]]);
        let s = l.signature();
        assert_eq!((s.n_plus, s.n_minus, s.n_zero), (1, 1, 0));
    }

    #[test]
    fn signature_zero_form() {
        let l = IntegralLattice::from_rows(&[&[0]]);
        let s = l.signature();
        assert_eq!((s.n_plus, s.n_minus, s.n_zero), (0, 0, 1));
    }

    #[test]
    fn signature_degenerate_rank3() {
        // rank-1 positive plus a 2-dim kernel
        let l = IntegralLattice::from_rows(&[&[1, 1, 0], &[1, 1, 0], &[0, 0, 0]]);
        let s = l.signature();
        assert_eq!((s.n_plus, s.n_minus, s.n_zero), (1, 0, 2));
    }

    #[test]
    fn discriminant_k8() {
        let l = IntegralLattice::from_rows(&[&[4, 8], &[8, 8]]);
        assert_eq!(l.discriminant(), BigInt::from(-32));
    }

    #[test]
    fn discriminant_identity() {
        let l = IntegralLattice::diagonal(&[1, 1, 1]);
        assert_eq!(l.discriminant(), BigInt::one());
    }

    #[test]
    fn discriminant_degree4_polarization() {
        // 2(n-1) with n = 3
        let l = IntegralLattice::from_rows(&[&[4]]);
        assert_eq!(l.discriminant(), BigInt::from(4));
    }

    #[test]
    fn orthogonal_sum_beauville_shape() {
        let a = IntegralLattice::from_rows(&[&[4]]);
        let b = IntegralLattice::from_rows(&[&[-2]]);
        let s = a.orthogonal_sum(&b);
        assert_eq!(s, IntegralLattice::from_rows(&[&[4, 0], &[0, -2]]));
    }

    #[test]
    fn orthogonal_sum_rank0_identity() {
        let l = IntegralLattice::from_rows(&[&[2, 1], &[1, 2]]);
        let empty = IntegralLattice::new(vec![], None).unwrap();
        assert_eq!(l.orthogonal_sum(&empty), l);
        assert_eq!(empty.orthogonal_sum(&l), l);
    }

    #[test]
    fn orthogonal_sum_block_assembly() {
        let a = IntegralLattice::from_rows(&[&[2, 1], &[1, 2]]);
        let b = IntegralLattice::from_rows(&[&[-2]]);
        assert_eq!(
            a.orthogonal_sum(&b),
            IntegralLattice::from_rows(&[&[2, 1, 0], &[1, 2, 0], &[0, 0, -2]])
        );
    }

    #[test]
    fn orthogonal_sum_label_collision() {
        let a = IntegralLattice::from_rows(&[&[2]])
            .with_labels(vec!["e".into()])
            .unwrap();
        let b = IntegralLattice::from_rows(&[&[-2]])
            .with_labels(vec!["e".into()])
            .unwrap();
        let s = a.orthogonal_sum(&b);
        assert_eq!(s.labels().unwrap(), ["e".to_string(), "e_2".to_string()]);
    }

    #[test]
    fn sublattice_gram_basis_reproduces() {
        let l = IntegralLattice::from_rows(&[&[4, 9], &[9, 8]]);
        let s = l
            .sublattice_gram(&[v(&[1, 0]), v(&[0, 1])])
            .unwrap();
        assert_eq!(s.gram(), l.gram());
    }

    #[test]
    fn sublattice_gram_sum_vector() {
        let l = IntegralLattice::from_rows(&[&[4, 9], &[9, 8]]);
        // 4 + 2*9 + 8
        let s = l.sublattice_gram(&[v(&[1, 1])]).unwrap();
        assert_eq!(s.gram()[0][0], BigInt::from(30));
    }

    #[test]
    fn sublattice_gram_repeated_vector_degenerate() {
        let l = IntegralLattice::from_rows(&[&[4, 9], &[9, 8]]);
        let s = l.sublattice_gram(&[v(&[1, 0]), v(&[1, 0])]).unwrap();
        assert_eq!(s.rank(), 2);
        assert_eq!(s.discriminant(), BigInt::zero());
    }

    #[test]
    fn sublattice_gram_empty_rejected() {
        let l = IntegralLattice::from_rows(&[&[2]]);
        assert!(matches!(l.sublattice_gram(&[]), Err(Error::EmptyVectors)));
    }

    #[test]
    fn primitivity() {
        assert!(!v(&[2, 4]).is_primitive().unwrap());
        assert!(v(&[1, 1]).is_primitive().unwrap());
        assert!(v(&[6, 10, 15]).is_primitive().unwrap());
        assert!(matches!(v(&[0, 0]).is_primitive(), Err(Error::ZeroVector)));
    }

    #[test]
    fn hodge_index_shapes() {
        assert!(IntegralLattice::from_rows(&[&[4, 9], &[9, 8]]).hodge_index_valid());
        assert!(!IntegralLattice::from_rows(&[&[2, 0], &[0, 2]]).hodge_index_valid());
        assert!(IntegralLattice::from_rows(&[&[2]]).hodge_index_valid());
        assert!(!IntegralLattice::from_rows(&[&[-2]]).hodge_index_valid());
    }
}
