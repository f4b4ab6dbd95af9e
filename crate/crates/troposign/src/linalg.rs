//! Dense vectors and matrices over `𝕋` and `𝕊`: scalar products,
//! support/restriction combinators, and the symmetrized determinant,
//! comatrix and Kleene star.
//!
//! Matrices are stored dense row-major; the determinant is a direct
//! permutation expansion (exact, `O(n·n!)`), which is the right tradeoff
//! at the small dimensions this crate targets.

use std::fmt;

use thiserror::Error;

use crate::signed::SignedTrop;
use crate::trop::TropNum;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("shape mismatch: {0}x{1} vs {2}x{3}")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("index {0} out of range for dimension {1}")]
    IndexOutOfRange(usize, usize),
    #[error("balanced entry at position {0} where a signed value is required")]
    BalancedEntry(usize),
    #[error("extended element (⊤/⊥) not allowed in vectors or matrices")]
    ExtendedEntry,
    #[error("dimension must be positive")]
    EmptyDimension,
    #[error("comatrix requires n ≥ 2")]
    ComatrixTooSmall,
}

/// A vector over `𝕋`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropVec {
    entries: Vec<TropNum>,
}

impl TropVec {
    pub fn new(entries: Vec<TropNum>) -> Self {
        assert!(!entries.is_empty(), "dimension must be positive");
        TropVec { entries }
    }

    pub fn zero(dim: usize) -> Self {
        TropVec::new(vec![TropNum::NegInf; dim])
    }

    /// Unit vector: `0` at position `i`, `-∞` elsewhere.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = vec![TropNum::NegInf; dim];
        v[i] = TropNum::one();
        TropVec::new(v)
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        TropVec::new(entries.iter().map(|&n| TropNum::from_int(n)).collect())
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> &TropNum {
        &self.entries[i]
    }

    pub fn set(&mut self, i: usize, v: TropNum) {
        self.entries[i] = v;
    }

    pub fn entries(&self) -> &[TropNum] {
        &self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, TropNum> {
        self.entries.iter()
    }

    /// `supp(z) = {i ∣ zᵢ ≠ 𝟘}` (0-based).
    pub fn support(&self) -> Vec<usize> {
        self.entries.iter().enumerate().filter(|(_, e)| !e.is_neg_inf()).map(|(i, _)| i).collect()
    }

    /// `z_I`: keep entries at `I`, zero out the rest.
    pub fn restrict(&self, keep: &[usize]) -> Result<TropVec, LinalgError> {
        for &i in keep {
            if i >= self.dim() {
                return Err(LinalgError::IndexOutOfRange(i, self.dim()));
            }
        }
        let mut out = TropVec::zero(self.dim());
        for &i in keep {
            out.entries[i] = self.entries[i].clone();
        }
        Ok(out)
    }

    /// `z_{∖I}`: zero out entries at `I`, keep the rest.
    pub fn restrict_complement(&self, drop: &[usize]) -> Result<TropVec, LinalgError> {
        for &i in drop {
            if i >= self.dim() {
                return Err(LinalgError::IndexOutOfRange(i, self.dim()));
            }
        }
        let mut out = self.clone();
        for &i in drop {
            out.entries[i] = TropNum::NegInf;
        }
        Ok(out)
    }

    /// Componentwise max.
    pub fn join(&self, other: &TropVec) -> Result<TropVec, LinalgError> {
        if self.dim() != other.dim() {
            return Err(LinalgError::DimMismatch(self.dim(), other.dim()));
        }
        Ok(TropVec::new(self.iter().zip(other.iter()).map(|(a, b)| a.tadd(b)).collect()))
    }

    /// Scale every entry by `λ` (tropically: add `λ`).
    pub fn scale(&self, lambda: &TropNum) -> TropVec {
        TropVec::new(self.iter().map(|e| e.tmul(lambda)).collect())
    }

    /// Entrywise `≤`.
    pub fn le(&self, other: &TropVec) -> bool {
        self.dim() == other.dim() && self.iter().zip(other.iter()).all(|(a, b)| a <= b)
    }

    /// `⟨x,y⟩ = ⊕ᵢ xᵢ ⊙ yᵢ`.
    pub fn dot(&self, other: &TropVec) -> Result<TropNum, LinalgError> {
        if self.dim() != other.dim() {
            return Err(LinalgError::DimMismatch(self.dim(), other.dim()));
        }
        Ok(self
            .iter()
            .zip(other.iter())
            .map(|(a, b)| a.tmul(b))
            .fold(TropNum::NegInf, |acc, t| acc.tadd(&t)))
    }
}

impl fmt::Display for TropVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A vector over `𝕊` with `⊤`/`⊥` excluded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedVec {
    entries: Vec<SignedTrop>,
}

impl SignedVec {
    pub fn new(entries: Vec<SignedTrop>) -> Result<Self, LinalgError> {
        if entries.is_empty() {
            return Err(LinalgError::EmptyDimension);
        }
        if entries.iter().any(|e| e.is_extended()) {
            return Err(LinalgError::ExtendedEntry);
        }
        Ok(SignedVec { entries })
    }

    pub fn zero(dim: usize) -> Self {
        SignedVec { entries: vec![SignedTrop::Zero; dim] }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> &SignedTrop {
        &self.entries[i]
    }

    pub fn set(&mut self, i: usize, v: SignedTrop) {
        assert!(!v.is_extended());
        self.entries[i] = v;
    }

    pub fn entries(&self) -> &[SignedTrop] {
        &self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SignedTrop> {
        self.entries.iter()
    }

    /// Every entry in `𝕊^∨`.
    pub fn is_signed(&self) -> bool {
        self.entries.iter().all(|e| e.is_signed())
    }

    /// Index of the first balanced entry, if any.
    pub fn first_balanced(&self) -> Option<usize> {
        self.entries.iter().position(|e| !e.is_signed())
    }

    /// `⟨x,a⟩ = ⟨x⁺,a⟩ ⊖ ⟨x⁻,a⟩` for signed `x` and tropical `a`.
    pub fn dot_trop(&self, a: &TropVec) -> Result<SignedTrop, LinalgError> {
        if self.dim() != a.dim() {
            return Err(LinalgError::DimMismatch(self.dim(), a.dim()));
        }
        if let Some(i) = self.first_balanced() {
            return Err(LinalgError::BalancedEntry(i));
        }
        let plus: Vec<TropNum> = self.iter().map(|e| e.plus_part().unwrap()).collect();
        let minus: Vec<TropNum> = self.iter().map(|e| e.minus_part().unwrap()).collect();
        let p = TropVec::new(plus).dot(a)?;
        let m = TropVec::new(minus).dot(a)?;
        Ok(&SignedTrop::from_trop(&p) - &SignedTrop::from_trop(&m))
    }

    /// General signed scalar product `⊕ᵢ xᵢ ⊙ yᵢ` (result may be balanced).
    pub fn dot_signed(&self, other: &SignedVec) -> Result<SignedTrop, LinalgError> {
        if self.dim() != other.dim() {
            return Err(LinalgError::DimMismatch(self.dim(), other.dim()));
        }
        Ok(self.iter().zip(other.iter()).fold(SignedTrop::Zero, |acc, (a, b)| &acc + &(a * b)))
    }

    pub fn scale(&self, lambda: &SignedTrop) -> SignedVec {
        SignedVec { entries: self.iter().map(|e| e * lambda).collect() }
    }
}

impl fmt::Display for SignedVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Free-function aliases matching the operation names used elsewhere.
pub fn dot_trop(x: &TropVec, y: &TropVec) -> Result<TropNum, LinalgError> {
    x.dot(y)
}

pub fn dot_signed(x: &SignedVec, a: &TropVec) -> Result<SignedTrop, LinalgError> {
    x.dot_trop(a)
}

/// A matrix over `𝕋`, dense row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropMat {
    rows: usize,
    cols: usize,
    data: Vec<TropNum>,
}

impl TropMat {
    pub fn from_rows(rows: Vec<Vec<TropNum>>) -> Result<Self, LinalgError> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(LinalgError::EmptyDimension);
        }
        let cols = rows[0].len();
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(LinalgError::DimMismatch(bad.len(), cols));
        }
        let r = rows.len();
        Ok(TropMat { rows: r, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        TropMat::from_rows(
            rows.iter().map(|r| r.iter().map(|&n| TropNum::from_int(n)).collect()).collect(),
        )
        .unwrap()
    }

    pub fn fill(rows: usize, cols: usize, v: TropNum) -> Self {
        TropMat { rows, cols, data: vec![v; rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &TropNum {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: TropNum) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> TropVec {
        TropVec::new(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn diag(&self) -> TropVec {
        TropVec::new((0..self.rows.min(self.cols)).map(|i| self.at(i, i).clone()).collect())
    }

    pub fn transpose(&self) -> TropMat {
        let mut out = TropMat::fill(self.cols, self.rows, TropNum::NegInf);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.at(i, j).clone());
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..i {
                if self.at(i, j) != self.at(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Tropical matrix product.
    pub fn mul(&self, other: &TropMat) -> Result<TropMat, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::ShapeMismatch(self.rows, self.cols, other.rows, other.cols));
        }
        let mut out = TropMat::fill(self.rows, other.cols, TropNum::NegInf);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = TropNum::NegInf;
                for k in 0..self.cols {
                    acc = acc.tadd(&self.at(i, k).tmul(other.at(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }
}

/// A matrix over `𝕊` with `⊤`/`⊥` excluded, dense row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedMat {
    rows: usize,
    cols: usize,
    data: Vec<SignedTrop>,
}

impl SignedMat {
    pub fn from_rows(rows: Vec<Vec<SignedTrop>>) -> Result<Self, LinalgError> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(LinalgError::EmptyDimension);
        }
        let cols = rows[0].len();
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(LinalgError::DimMismatch(bad.len(), cols));
        }
        if rows.iter().flatten().any(|e| e.is_extended()) {
            return Err(LinalgError::ExtendedEntry);
        }
        let r = rows.len();
        Ok(SignedMat { rows: r, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn fill(rows: usize, cols: usize, v: SignedTrop) -> Self {
        assert!(!v.is_extended());
        SignedMat { rows, cols, data: vec![v; rows * cols] }
    }

    /// Identity over `𝕊`: `𝟙` on the diagonal, `𝟘` off it.
    pub fn identity(n: usize) -> Self {
        let mut m = SignedMat::fill(n, n, SignedTrop::Zero);
        for i in 0..n {
            m.set(i, i, SignedTrop::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &SignedTrop {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: SignedTrop) {
        assert!(!v.is_extended());
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[SignedTrop] {
        &self.data
    }

    pub fn diag(&self) -> SignedVec {
        SignedVec {
            entries: (0..self.rows.min(self.cols)).map(|i| self.at(i, i).clone()).collect(),
        }
    }

    pub fn transpose(&self) -> SignedMat {
        let mut out = SignedMat::fill(self.cols, self.rows, SignedTrop::Zero);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.at(i, j).clone());
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..i {
                if self.at(i, j) != self.at(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Every entry in `𝕊^∨` (no balanced entries).
    pub fn is_signed(&self) -> bool {
        self.data.iter().all(|e| e.is_signed())
    }

    pub fn first_balanced(&self) -> Option<(usize, usize)> {
        self.data.iter().position(|e| !e.is_signed()).map(|k| (k / self.cols, k % self.cols))
    }

    pub fn add(&self, other: &SignedMat) -> Result<SignedMat, LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::ShapeMismatch(self.rows, self.cols, other.rows, other.cols));
        }
        let data = self.data.iter().zip(other.data.iter()).map(|(a, b)| a + b).collect();
        Ok(SignedMat { rows: self.rows, cols: self.cols, data })
    }

    pub fn negate(&self) -> SignedMat {
        SignedMat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|e| -e).collect() }
    }

    pub fn mul(&self, other: &SignedMat) -> Result<SignedMat, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::ShapeMismatch(self.rows, self.cols, other.rows, other.cols));
        }
        let mut out = SignedMat::fill(self.rows, other.cols, SignedTrop::Zero);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = SignedTrop::Zero;
                for k in 0..self.cols {
                    acc = &acc + &(self.at(i, k) * other.at(k, j));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Matrix-vector product over `𝕊`.
    pub fn mul_vec(&self, v: &SignedVec) -> Result<SignedVec, LinalgError> {
        if self.cols != v.dim() {
            return Err(LinalgError::DimMismatch(self.cols, v.dim()));
        }
        let entries = (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(SignedTrop::Zero, |acc, k| &acc + &(self.at(i, k) * v.get(k)))
            })
            .collect();
        Ok(SignedVec { entries })
    }

    /// Delete row `i` and column `j`.
    fn minor(&self, i: usize, j: usize) -> SignedMat {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for r in 0..self.rows {
            if r == i {
                continue;
            }
            for c in 0..self.cols {
                if c == j {
                    continue;
                }
                data.push(self.at(r, c).clone());
            }
        }
        SignedMat { rows: self.rows - 1, cols: self.cols - 1, data }
    }
}

impl fmt::Display for SignedMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let parts: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "[{}]", parts.join(", "))?;
        }
        Ok(())
    }
}

/// Tropical Frobenius scalar product `⟨X,Y⟩ = ⊕ᵢⱼ Xᵢⱼ ⊙ Yᵢⱼ`.
pub fn frobenius(x: &SignedMat, y: &SignedMat) -> Result<SignedTrop, LinalgError> {
    if x.rows != y.rows || x.cols != y.cols {
        return Err(LinalgError::ShapeMismatch(x.rows, x.cols, y.rows, y.cols));
    }
    Ok(x.data.iter().zip(y.data.iter()).fold(SignedTrop::Zero, |acc, (a, b)| &acc + &(a * b)))
}

/// Visit all permutations of `0..n` with their parity (true = even),
/// by Heap's algorithm; consecutive permutations differ by a transposition.
pub(crate) fn for_each_permutation<F: FnMut(&[usize], bool)>(n: usize, mut f: F) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut even = true;
    f(&perm, even);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            even = !even;
            f(&perm, even);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Symmetrized determinant: `⊕_σ sign(σ) ⊙ ∏ᵢ A_{i,σ(i)}`.
pub fn det_signed(a: &SignedMat) -> Result<SignedTrop, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare(a.rows, a.cols));
    }
    let n = a.rows;
    let mut acc = SignedTrop::Zero;
    for_each_permutation(n, |perm, even| {
        let mut term = SignedTrop::one();
        for (i, &j) in perm.iter().enumerate() {
            if term.is_zero() {
                break;
            }
            term = &term * a.at(i, j);
        }
        if !even {
            term = -&term;
        }
        acc = &acc + &term;
    });
    Ok(acc)
}

/// Comatrix: entry `(i,j)` is `(⊖𝟙)^{i+j} ⊙ det A(i,j)`.
pub fn comatrix(a: &SignedMat) -> Result<SignedMat, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare(a.rows, a.cols));
    }
    if a.rows < 2 {
        return Err(LinalgError::ComatrixTooSmall);
    }
    let n = a.rows;
    let mut out = SignedMat::fill(n, n, SignedTrop::Zero);
    for i in 0..n {
        for j in 0..n {
            let mut cof = det_signed(&a.minor(i, j))?;
            if (i + j) % 2 == 1 {
                cof = -&cof;
            }
            out.set(i, j, cof);
        }
    }
    Ok(out)
}

/// Kleene star `C* = I ⊕ C ⊕ ⋯ ⊕ C^{n-1}` over `𝕊`.
pub fn kleene_star(c: &SignedMat) -> Result<SignedMat, LinalgError> {
    if !c.is_square() {
        return Err(LinalgError::NotSquare(c.rows, c.cols));
    }
    let n = c.rows;
    let mut acc = SignedMat::identity(n);
    let mut pow = SignedMat::identity(n);
    for _ in 1..n {
        pow = pow.mul(c)?;
        acc = acc.add(&pow)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signed::SignedTrop as S;

    fn p(n: i64) -> S {
        S::pos_int(n)
    }
    fn n(v: i64) -> S {
        S::neg_int(v)
    }

    fn sm(rows: Vec<Vec<S>>) -> SignedMat {
        SignedMat::from_rows(rows).unwrap()
    }

    #[test]
    fn dot_trop_examples() {
        let x = TropVec::from_ints(&[0, 0]);
        let y = TropVec::from_ints(&[2, 3]);
        assert_eq!(x.dot(&y).unwrap(), TropNum::from_int(3));

        let z = TropVec::zero(2);
        assert_eq!(z.dot(&y).unwrap(), TropNum::NegInf);

        let a = TropVec::new(vec![TropNum::from_int(1), TropNum::NegInf]);
        let b = TropVec::new(vec![TropNum::NegInf, TropNum::from_int(5)]);
        assert_eq!(a.dot(&b).unwrap(), TropNum::NegInf);

        let short = TropVec::from_ints(&[1]);
        assert!(x.dot(&short).is_err());
    }

    #[test]
    fn dot_signed_examples() {
        let a = TropVec::from_ints(&[0, 0]);
        let x = SignedVec::new(vec![p(0), n(0)]).unwrap();
        assert_eq!(x.dot_trop(&a).unwrap(), S::bal_int(0));

        let x = SignedVec::new(vec![p(1), n(0)]).unwrap();
        assert_eq!(x.dot_trop(&a).unwrap(), p(1));

        let x = SignedVec::new(vec![n(2), S::Zero]).unwrap();
        let a = TropVec::from_ints(&[0, 5]);
        assert_eq!(x.dot_trop(&a).unwrap(), n(2));

        let x = SignedVec::new(vec![S::bal_int(1), S::Zero]).unwrap();
        assert!(matches!(x.dot_trop(&a), Err(LinalgError::BalancedEntry(0))));
    }

    #[test]
    fn frobenius_examples() {
        let x = sm(vec![vec![p(0)]]);
        assert_eq!(frobenius(&x, &x).unwrap(), p(0));

        let x = sm(vec![vec![p(1), p(0)], vec![p(0), p(2)]]);
        let eye = SignedMat::identity(2);
        assert_eq!(frobenius(&x, &eye).unwrap(), p(2));
    }

    #[test]
    fn support_and_restrict() {
        let z = TropVec::new(vec![TropNum::NegInf, TropNum::from_int(3), TropNum::from_int(0)]);
        assert_eq!(z.support(), vec![1, 2]);

        let v = TropVec::from_ints(&[1, 2, 3]);
        assert_eq!(v.restrict(&[0, 2]).unwrap(), {
            let mut w = TropVec::zero(3);
            w.set(0, TropNum::from_int(1));
            w.set(2, TropNum::from_int(3));
            w
        });
        assert_eq!(v.restrict_complement(&[0, 2]).unwrap(), {
            let mut w = TropVec::zero(3);
            w.set(1, TropNum::from_int(2));
            w
        });
        assert!(v.restrict(&[7]).is_err());
    }

    #[test]
    fn det_examples() {
        // the running 2x2 Remark matrix: determinant ⊖6
        let a = sm(vec![vec![p(2), p(3)], vec![p(3), p(2)]]);
        assert_eq!(det_signed(&a).unwrap(), n(6));

        let ones = sm(vec![vec![p(0), p(0)], vec![p(0), p(0)]]);
        assert_eq!(det_signed(&ones).unwrap(), S::bal_int(0));

        assert_eq!(det_signed(&SignedMat::identity(3)).unwrap(), p(0));

        let rect = sm(vec![vec![p(0), p(0)]]);
        assert!(det_signed(&rect).is_err());
    }

    #[test]
    fn comatrix_examples() {
        // com [[a,b],[c,d]] = [[d, ⊖c],[⊖b, a]]
        let a = sm(vec![vec![p(1), p(2)], vec![n(3), p(4)]]);
        let com = comatrix(&a).unwrap();
        assert_eq!(com, sm(vec![vec![p(4), p(3)], vec![n(2), p(1)]]));

        let a = sm(vec![vec![p(0), n(-1)], vec![n(-1), p(0)]]);
        let com = comatrix(&a).unwrap();
        assert_eq!(com, sm(vec![vec![p(0), p(-1)], vec![p(-1), p(0)]]));

        assert_eq!(comatrix(&SignedMat::identity(3)).unwrap(), SignedMat::identity(3));
        assert!(comatrix(&sm(vec![vec![p(0)]])).is_err());
    }

    #[test]
    fn kleene_examples() {
        let all_zero = SignedMat::fill(2, 2, S::Zero);
        assert_eq!(kleene_star(&all_zero).unwrap(), SignedMat::identity(2));

        let c = sm(vec![vec![S::Zero, p(-1)], vec![p(-1), S::Zero]]);
        let star = kleene_star(&c).unwrap();
        assert_eq!(star, sm(vec![vec![p(0), p(-1)], vec![p(-1), p(0)]]));

        // e-comastar on the same instance: transpose(com(I ⊖ C)) = C*
        let a = SignedMat::identity(2).add(&c.negate()).unwrap();
        assert_eq!(comatrix(&a).unwrap().transpose(), star);
    }

    #[test]
    fn det_of_equal_rows_is_balanced_or_zero() {
        let a = sm(vec![vec![p(1), n(2)], vec![p(1), n(2)]]);
        let d = det_signed(&a).unwrap();
        assert!(d.is_balanced_class(), "det with equal rows gave {d}");
    }

    #[test]
    fn permutation_parity_is_consistent() {
        let mut count = 0;
        let mut even_count = 0;
        for_each_permutation(4, |perm, even| {
            count += 1;
            // recompute parity by counting inversions
            let mut inv = 0;
            for i in 0..4 {
                for j in i + 1..4 {
                    if perm[i] > perm[j] {
                        inv += 1;
                    }
                }
            }
            assert_eq!(inv % 2 == 0, even);
            if even {
                even_count += 1;
            }
        });
        assert_eq!(count, 24);
        assert_eq!(even_count, 12);
    }
}
