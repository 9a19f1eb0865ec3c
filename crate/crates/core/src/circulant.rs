//! Circulant matrices over exact rationals, and the Hadamard predicate.
//!
//! A circulant matrix of order `k` is determined by its first row
//! `(a_1, ..., a_k)`: every later row is the previous one shifted cyclically
//! one position to the right, so row 2 reads `(a_k, a_1, ..., a_{k-1})` and
//! entry `(i, j)` equals `a[((j - i) mod k) + 1]` in 1-based notation.
//! Products of circulants are again circulant, which lets every operation
//! here work on first rows alone: multiplication is cyclic convolution,
//! transposition reverses the tail of the row, and the Gram matrix is the
//! row of periodic autocorrelations.
//!
//! Two representations coexist. [`Circulant`] carries arbitrary-precision
//! rational entries and is the general algebra type; [`SignRow`] is the
//! restricted ±1 first row that candidate Hadamard matrices use, cheap enough
//! for exhaustive scans. Floating point appears only in the eigenvalue
//! diagnostic [`EigenvalueReport`]; everything else is exact.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{format_scalar, int, parse_scalar, Scalar};

/// A ±1 first row: the candidate format for circulant Hadamard matrices.
///
/// Two text forms are accepted everywhere a row is read: comma-separated
/// entries (`1,-1,-1,-1`) and a bitstring (`0111`, with `0` for +1 and `1`
/// for -1, bit `i` giving entry `i + 1`). The comma form is tried first, so
/// the one-character string `1` is the single entry +1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignRow {
    entries: Vec<i8>,
}

impl SignRow {
    /// Validates that every entry is ±1 and the row is nonempty.
    pub fn new(entries: Vec<i8>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidArgument("empty row".into()));
        }
        if let Some(bad) = entries.iter().find(|e| e.abs() != 1) {
            return Err(Error::InvalidArgument(format!(
                "row entries must be 1 or -1, found {bad}"
            )));
        }
        Ok(SignRow { entries })
    }

    /// Row of length `len` whose entry `i + 1` is -1 exactly when bit `i` of
    /// `index` is set. Enumerating `index` over `0..2^len` visits every row.
    pub fn from_index(len: usize, index: u64) -> Self {
        assert!(len >= 1 && len <= 64, "length out of range");
        let entries = (0..len)
            .map(|i| if index >> i & 1 == 1 { -1 } else { 1 })
            .collect();
        SignRow { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    /// Sum of the entries as a signed integer.
    pub fn sum(&self) -> i64 {
        self.entries.iter().map(|&e| i64::from(e)).sum()
    }

    /// The row shifted cyclically `shift` positions to the right.
    pub fn rotate_right(&self, shift: usize) -> Self {
        let k = self.len();
        let shift = shift % k;
        let mut entries = Vec::with_capacity(k);
        entries.extend_from_slice(&self.entries[k - shift..]);
        entries.extend_from_slice(&self.entries[..k - shift]);
        SignRow { entries }
    }

    pub fn negated(&self) -> Self {
        SignRow {
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    /// Bitstring form: `0` for +1, `1` for -1.
    pub fn to_bitstring(&self) -> String {
        self.entries
            .iter()
            .map(|&e| if e == 1 { '0' } else { '1' })
            .collect()
    }
}

impl fmt::Display for SignRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for SignRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignRow({self})")
    }
}

impl FromStr for SignRow {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse {
                token: text.to_string(),
                reason: "empty row".to_string(),
            });
        }
        // Comma form first; fall back to a bitstring only if every comma
        // token fails, reporting the first bad token otherwise.
        let mut entries = Vec::new();
        let mut bad_token = None;
        for token in text.split(',') {
            match token.trim() {
                "1" | "+1" => entries.push(1),
                "-1" => entries.push(-1),
                other => {
                    bad_token = Some(other.to_string());
                    break;
                }
            }
        }
        match bad_token {
            None => SignRow::new(entries),
            Some(token) => {
                if !text.contains(',') && text.chars().all(|c| c == '0' || c == '1') {
                    let entries = text.chars().map(|c| if c == '0' { 1 } else { -1 }).collect();
                    SignRow::new(entries)
                } else {
                    Err(Error::Parse {
                        token,
                        reason: "expected 1, -1, or a 0/1 bitstring".to_string(),
                    })
                }
            }
        }
    }
}

impl Serialize for SignRow {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SignRow {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// A circulant matrix held as its first row of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Circulant {
    first_row: Vec<Scalar>,
}

impl Circulant {
    /// `circm(a_1, ..., a_k)`: the circulant with the given first row.
    pub fn from_first_row(first_row: Vec<Scalar>) -> Result<Self> {
        if first_row.is_empty() {
            return Err(Error::InvalidArgument("empty first row".into()));
        }
        Ok(Circulant { first_row })
    }

    pub fn from_integers(entries: &[i64]) -> Result<Self> {
        Self::from_first_row(entries.iter().map(|&e| int(e)).collect())
    }

    pub fn from_sign_row(row: &SignRow) -> Self {
        Circulant {
            first_row: row.entries().iter().map(|&e| int(i64::from(e))).collect(),
        }
    }

    /// Identity matrix of order `k`.
    pub fn identity(k: usize) -> Self {
        let mut first_row = vec![Scalar::zero(); k];
        first_row[0] = Scalar::one();
        Circulant { first_row }
    }

    /// The shift matrix: `circm(0, 1, 0, ..., 0)`. Left-multiplying by it
    /// moves every row of a circulant up into the previous slot, so its
    /// powers generate all rotations.
    pub fn shift(k: usize) -> Self {
        let mut first_row = vec![Scalar::zero(); k];
        if k == 1 {
            first_row[0] = Scalar::one();
        } else {
            first_row[1] = Scalar::one();
        }
        Circulant { first_row }
    }

    pub fn order(&self) -> usize {
        self.first_row.len()
    }

    pub fn first_row(&self) -> &[Scalar] {
        &self.first_row
    }

    /// Entry at 1-based position `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> Result<&Scalar> {
        let k = self.order();
        for index in [i, j] {
            if index < 1 || index > k {
                return Err(Error::IndexOutOfRange { index, order: k });
            }
        }
        // (j - i) mod k, in 0-based arithmetic.
        Ok(&self.first_row[(j + k - i) % k])
    }

    /// Row `i` (1-based) as a dense vector.
    pub fn row(&self, i: usize) -> Result<Vec<Scalar>> {
        let k = self.order();
        if i < 1 || i > k {
            return Err(Error::IndexOutOfRange { index: i, order: k });
        }
        let shift = i - 1;
        let mut row = Vec::with_capacity(k);
        row.extend_from_slice(&self.first_row[k - shift..]);
        row.extend_from_slice(&self.first_row[..k - shift]);
        Ok(row)
    }

    fn check_same_order(&self, other: &Circulant) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    /// Matrix product via cyclic convolution of first rows, O(k^2).
    pub fn multiply(&self, other: &Circulant) -> Result<Circulant> {
        self.check_same_order(other)?;
        let k = self.order();
        let mut first_row = vec![Scalar::zero(); k];
        for (t, a) in self.first_row.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (s, b) in other.first_row.iter().enumerate() {
                first_row[(t + s) % k] += a * b;
            }
        }
        Ok(Circulant { first_row })
    }

    /// Transpose: first row `(a_1, a_k, a_{k-1}, ..., a_2)`.
    pub fn transpose(&self) -> Circulant {
        let k = self.order();
        let mut first_row = Vec::with_capacity(k);
        first_row.push(self.first_row[0].clone());
        first_row.extend(self.first_row[1..].iter().rev().cloned());
        Circulant { first_row }
    }

    /// Gram matrix `A A^T`; its first row lists the inner products of row 1
    /// with rows 1..k.
    pub fn gram(&self) -> Circulant {
        self.multiply(&self.transpose()).expect("same order")
    }

    /// Inner product of rows `i` and `j` (1-based).
    pub fn row_inner(&self, i: usize, j: usize) -> Result<Scalar> {
        let k = self.order();
        for index in [i, j] {
            if index < 1 || index > k {
                return Err(Error::IndexOutOfRange { index, order: k });
            }
        }
        let ri = self.row(i)?;
        let rj = self.row(j)?;
        let mut acc = Scalar::zero();
        for (a, b) in ri.iter().zip(rj.iter()) {
            acc += a * b;
        }
        Ok(acc)
    }

    pub fn add(&self, other: &Circulant) -> Result<Circulant> {
        self.check_same_order(other)?;
        let first_row = self
            .first_row
            .iter()
            .zip(other.first_row.iter())
            .map(|(a, b)| a + b)
            .collect();
        Ok(Circulant { first_row })
    }

    pub fn sub(&self, other: &Circulant) -> Result<Circulant> {
        self.check_same_order(other)?;
        let first_row = self
            .first_row
            .iter()
            .zip(other.first_row.iter())
            .map(|(a, b)| a - b)
            .collect();
        Ok(Circulant { first_row })
    }

    pub fn scale(&self, factor: &Scalar) -> Circulant {
        Circulant {
            first_row: self.first_row.iter().map(|a| a * factor).collect(),
        }
    }

    /// True when every entry is an integer.
    pub fn is_integral(&self) -> bool {
        self.first_row.iter().all(|a| a.is_integer())
    }
}

impl fmt::Debug for Circulant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.first_row.iter().map(format_scalar).collect();
        write!(f, "circm({})", parts.join(","))
    }
}

impl Serialize for Circulant {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            order: usize,
            first_row: Vec<String>,
        }
        Repr {
            order: self.order(),
            first_row: self.first_row.iter().map(format_scalar).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Circulant {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            order: usize,
            first_row: Vec<String>,
        }
        let repr = Repr::deserialize(deserializer)?;
        if repr.first_row.len() != repr.order {
            return Err(serde::de::Error::custom("first_row length differs from order"));
        }
        let mut first_row = Vec::with_capacity(repr.order);
        for text in &repr.first_row {
            first_row.push(parse_scalar(text).map_err(serde::de::Error::custom)?);
        }
        Circulant::from_first_row(first_row).map_err(serde::de::Error::custom)
    }
}

/// Periodic autocorrelation of a ±1 row.
///
/// `values[t] = sum_j h_j * h_{j+t}` with indices mod the length. `values[0]`
/// is the length itself, the sequence is symmetric (`values[t] = values[k-t]`),
/// and every value is congruent to the length mod 4.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PafSpectrum {
    pub values: Vec<i64>,
}

/// Full autocorrelation spectrum, O(k^2).
pub fn paf(row: &SignRow) -> PafSpectrum {
    let h = row.entries();
    let k = h.len();
    let values = (0..k).map(|t| paf_at(h, t)).collect();
    PafSpectrum { values }
}

fn paf_at(h: &[i8], t: usize) -> i64 {
    let k = h.len();
    let mut acc = 0i64;
    for j in 0..k {
        let jt = j + t;
        let jt = if jt >= k { jt - k } else { jt };
        acc += i64::from(h[j]) * i64::from(h[jt]);
    }
    acc
}

/// True when `circm(row)` is a Hadamard matrix, i.e. every off-peak
/// autocorrelation vanishes. Uses the spectrum's symmetry to stop at half the
/// shifts, and exits at the first nonzero value.
pub fn is_circulant_hadamard(row: &SignRow) -> bool {
    let h = row.entries();
    let k = h.len();
    for t in 1..=k / 2 {
        if paf_at(h, t) != 0 {
            return false;
        }
    }
    true
}

/// Floating-point eigenvalue magnitudes of `circm(row)`, for diagnostics only.
///
/// The eigenvalues of a circulant are the values of the representer
/// polynomial at the k-th roots of unity; `magnitudes[t]` is the absolute
/// value at `exp(2*pi*i*t/k)`. The row sum (the eigenvalue at t = 0, before
/// taking absolute values) is reported exactly.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenvalueReport {
    pub magnitudes: Vec<f64>,
    pub row_sum: i64,
}

pub fn eigen_report(row: &SignRow) -> EigenvalueReport {
    let h = row.entries();
    let k = h.len();
    let magnitudes = (0..k)
        .map(|t| {
            let mut re = 0.0f64;
            let mut im = 0.0f64;
            for (j, &e) in h.iter().enumerate() {
                let angle = 2.0 * std::f64::consts::PI * (t * j) as f64 / k as f64;
                re += f64::from(e) * angle.cos();
                im += f64::from(e) * angle.sin();
            }
            re.hypot(im)
        })
        .collect();
    EigenvalueReport {
        magnitudes,
        row_sum: row.sum(),
    }
}

/// A dense ±1 matrix. The only non-circulant matrix in the crate: it carries
/// the Sylvester construction and the submatrix views used by the coding
/// bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseSignMatrix {
    order: usize,
    entries: Vec<i8>,
}

impl DenseSignMatrix {
    pub fn new(order: usize, entries: Vec<i8>) -> Result<Self> {
        if order == 0 || entries.len() != order * order {
            return Err(Error::InvalidArgument(format!(
                "expected {order}x{order} entries, found {}",
                entries.len()
            )));
        }
        if entries.iter().any(|e| e.abs() != 1) {
            return Err(Error::InvalidArgument(
                "matrix entries must be 1 or -1".into(),
            ));
        }
        Ok(DenseSignMatrix { order, entries })
    }

    /// Dense form of `circm(row)`.
    pub fn from_circulant_row(row: &SignRow) -> Self {
        let k = row.len();
        let h = row.entries();
        let mut entries = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                entries.push(h[(j + k - i) % k]);
            }
        }
        DenseSignMatrix { order: k, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Entry at 1-based position `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> Result<i8> {
        for index in [i, j] {
            if index < 1 || index > self.order {
                return Err(Error::IndexOutOfRange {
                    index,
                    order: self.order,
                });
            }
        }
        Ok(self.entries[(i - 1) * self.order + (j - 1)])
    }

    fn row_slice(&self, i0: usize) -> &[i8] {
        &self.entries[i0 * self.order..(i0 + 1) * self.order]
    }

    /// True when all distinct rows are orthogonal, i.e. the matrix is
    /// Hadamard up to the common row norm.
    pub fn rows_pairwise_orthogonal(&self) -> bool {
        for i in 0..self.order {
            let ri = self.row_slice(i);
            for j in i + 1..self.order {
                let rj = self.row_slice(j);
                let dot: i64 = ri
                    .iter()
                    .zip(rj.iter())
                    .map(|(&a, &b)| i64::from(a) * i64::from(b))
                    .sum();
                if dot != 0 {
                    return false;
                }
            }
        }
        true
    }
}

/// Sylvester's doubling construction: order `2^power`, rows pairwise
/// orthogonal. `power` is capped at 12 (order 4096).
pub fn sylvester_hadamard(power: u32) -> Result<DenseSignMatrix> {
    if power > 12 {
        return Err(Error::ResourceLimit(format!(
            "Sylvester power {power} exceeds cap 12"
        )));
    }
    let mut order = 1usize;
    let mut entries = vec![1i8];
    for _ in 0..power {
        let doubled = order * 2;
        let mut next = vec![0i8; doubled * doubled];
        for i in 0..order {
            for j in 0..order {
                let e = entries[i * order + j];
                next[i * doubled + j] = e;
                next[i * doubled + j + order] = e;
                next[(i + order) * doubled + j] = e;
                next[(i + order) * doubled + j + order] = -e;
            }
        }
        order = doubled;
        entries = next;
    }
    DenseSignMatrix::new(order, entries)
}

/// All circulant Hadamard first rows of the given order, by brute-force scan
/// of the `2^order` rows. This is the reference list the search engine is
/// checked against; the cap keeps it a deliberate small-order tool.
pub fn brute_force_hadamard_rows(order: usize) -> Result<Vec<SignRow>> {
    if order == 0 || order > 20 {
        return Err(Error::ResourceLimit(format!(
            "brute-force scan supports orders 1..=20, got {order}"
        )));
    }
    let mut rows = Vec::new();
    for index in 0..1u64 << order {
        let row = SignRow::from_index(order, index);
        if is_circulant_hadamard(&row) {
            rows.push(row);
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn srow(entries: &[i8]) -> SignRow {
        SignRow::new(entries.to_vec()).unwrap()
    }

    fn circ(entries: &[i64]) -> Circulant {
        Circulant::from_integers(entries).unwrap()
    }

    /// Dense k x k product computed entry by entry, as an independent route
    /// around the convolution shortcut.
    fn dense_product_first_row(a: &Circulant, b: &Circulant) -> Vec<Scalar> {
        let k = a.order();
        (1..=k)
            .map(|j| {
                let mut acc = Scalar::zero();
                for t in 1..=k {
                    acc += a.entry(1, t).unwrap() * b.entry(t, j).unwrap();
                }
                acc
            })
            .collect()
    }

    #[test]
    fn rows_shift_right() {
        let c = circ(&[1, -1, -1, -1]);
        let row2: Vec<Scalar> = c.row(2).unwrap();
        assert_eq!(row2, vec![int(-1), int(1), int(-1), int(-1)]);
        let row4 = c.row(4).unwrap();
        assert_eq!(row4, vec![int(-1), int(-1), int(-1), int(1)]);
        assert_eq!(*c.entry(3, 3).unwrap(), int(1));
        assert!(c.entry(0, 1).is_err());
        assert!(c.row(5).is_err());
    }

    #[test]
    fn shift_matrix_advances_rows() {
        let pi = Circulant::shift(4);
        assert_eq!(pi.row(1).unwrap(), vec![int(0), int(1), int(0), int(0)]);
        let c = circ(&[3, 1, 4, 1]);
        let shifted = pi.multiply(&c).unwrap();
        assert_eq!(shifted.row(1).unwrap(), c.row(2).unwrap());
    }

    #[test]
    fn multiply_squares_the_shift() {
        let pi = Circulant::shift(4);
        let pi2 = pi.multiply(&pi).unwrap();
        assert_eq!(pi2, circ(&[0, 0, 1, 0]));
    }

    #[test]
    fn multiply_matches_dense_product() {
        let a = circ(&[1, 1]);
        let b = circ(&[1, -1]);
        let product = a.multiply(&b).unwrap();
        assert_eq!(product, circ(&[0, 0]));
        assert_eq!(product.first_row(), dense_product_first_row(&a, &b));

        let a = Circulant::from_first_row(vec![ratio(1, 2), int(3), ratio(-2, 5)]).unwrap();
        let b = Circulant::from_first_row(vec![int(2), ratio(7, 3), int(-1)]).unwrap();
        let product = a.multiply(&b).unwrap();
        assert_eq!(product.first_row(), dense_product_first_row(&a, &b));
    }

    #[test]
    fn multiply_rejects_order_mismatch() {
        let err = circ(&[1, 1]).multiply(&circ(&[1, 1, 1])).unwrap_err();
        assert_eq!(err, Error::OrderMismatch { left: 2, right: 3 });
    }

    #[test]
    fn transpose_reverses_the_tail() {
        assert_eq!(circ(&[1, 2, 3]).transpose(), circ(&[1, 3, 2]));
        let pi = Circulant::shift(5);
        let back = pi.transpose();
        // The transpose of the shift moves rows the other way.
        assert_eq!(pi.multiply(&back).unwrap(), Circulant::identity(5));
    }

    #[test]
    fn transpose_is_an_involution() {
        let c = circ(&[4, -7, 0, 2, 9]);
        assert_eq!(c.transpose().transpose(), c);
    }

    #[test]
    fn gram_of_hadamard_row_is_scaled_identity() {
        let h = circ(&[1, -1, -1, -1]);
        assert_eq!(h.gram(), circ(&[4, 0, 0, 0]));
    }

    #[test]
    fn gram_examples() {
        assert_eq!(circ(&[1, -1]).gram(), circ(&[2, -2]));
        assert_eq!(circ(&[1, 1, 1, 1]).gram(), circ(&[4, 4, 4, 4]));
        assert_eq!(circ(&[1, -1, 1, -1]).gram(), circ(&[4, -4, 4, -4]));
    }

    #[test]
    fn gram_first_entry_is_the_order() {
        for order in 1..=6usize {
            for index in 0..1u64 << order {
                let row = SignRow::from_index(order, index);
                let g = Circulant::from_sign_row(&row).gram();
                assert_eq!(g.first_row()[0], int(order as i64));
            }
        }
    }

    #[test]
    fn row_inner_matches_dense_dot() {
        let h = circ(&[1, -1, -1, -1]);
        assert_eq!(h.row_inner(1, 2).unwrap(), int(0));
        assert_eq!(h.row_inner(1, 3).unwrap(), int(0));
        assert_eq!(h.row_inner(2, 2).unwrap(), int(4));
        // Gram first row tabulates the same inner products.
        let g = h.gram();
        for j in 1..=4 {
            assert_eq!(h.row_inner(1, j).unwrap(), *g.entry(1, j).unwrap());
        }
        assert!(h.row_inner(1, 5).is_err());
    }

    #[test]
    fn paf_examples() {
        assert_eq!(paf(&srow(&[1, -1, -1, -1])).values, vec![4, 0, 0, 0]);
        assert_eq!(paf(&srow(&[1, 1, 1, 1])).values, vec![4, 4, 4, 4]);
        assert_eq!(paf(&srow(&[1, 1, -1, -1])).values, vec![4, 0, -4, 0]);
        assert_eq!(paf(&srow(&[1])).values, vec![1]);
    }

    #[test]
    fn paf_spectrum_properties_hold_exhaustively() {
        for order in 1..=10usize {
            for index in 0..1u64 << order {
                let row = SignRow::from_index(order, index);
                let spectrum = paf(&row).values;
                assert_eq!(spectrum[0], order as i64);
                let g = Circulant::from_sign_row(&row).gram();
                for (t, value) in spectrum.iter().enumerate() {
                    // Symmetry, congruence mod 4, and agreement with the
                    // Gram route.
                    assert_eq!(*value, spectrum[(order - t) % order]);
                    assert_eq!((value - order as i64).rem_euclid(4), 0);
                    assert_eq!(int(*value), *g.entry(1, t + 1).unwrap());
                }
            }
        }
    }

    #[test]
    fn hadamard_predicate_agrees_with_gram_route() {
        for order in 1..=12usize {
            for index in 0..1u64 << order {
                let row = SignRow::from_index(order, index);
                let by_paf = is_circulant_hadamard(&row);
                let c = Circulant::from_sign_row(&row);
                let by_gram = c.gram() == Circulant::identity(order).scale(&int(order as i64));
                assert_eq!(by_paf, by_gram, "row {row}");
            }
        }
    }

    #[test]
    fn hadamard_examples() {
        assert!(is_circulant_hadamard(&srow(&[1])));
        assert!(is_circulant_hadamard(&srow(&[1, -1, -1, -1])));
        assert!(!is_circulant_hadamard(&srow(&[1, 1, 1, 1])));
        assert!(!is_circulant_hadamard(&srow(&[1, 1])));
    }

    #[test]
    fn no_order_8_hadamard_row_exists() {
        assert_eq!(brute_force_hadamard_rows(8).unwrap(), vec![]);
    }

    #[test]
    fn the_order_4_list_has_eight_rows() {
        let rows = brute_force_hadamard_rows(4).unwrap();
        assert_eq!(rows.len(), 8);
        for row in &rows {
            assert_eq!(row.sum().abs(), 2);
        }
    }

    #[test]
    fn eigen_report_magnitudes() {
        let report = eigen_report(&srow(&[1, 1]));
        assert!((report.magnitudes[0] - 2.0).abs() < 1e-9);
        assert!(report.magnitudes[1].abs() < 1e-9);
        assert_eq!(report.row_sum, 2);

        let report = eigen_report(&srow(&[1, -1, -1, -1]));
        for m in &report.magnitudes {
            assert!((m - 2.0).abs() < 1e-9, "expected magnitude 2, got {m}");
        }
        assert_eq!(report.row_sum, -2);
    }

    #[test]
    fn eigen_row_sum_is_exact() {
        for order in 1..=8usize {
            for index in 0..1u64 << order {
                let row = SignRow::from_index(order, index);
                assert_eq!(eigen_report(&row).row_sum, row.sum());
            }
        }
    }

    #[test]
    fn sylvester_small_orders() {
        let h1 = sylvester_hadamard(1).unwrap();
        assert_eq!(h1.order(), 2);
        assert_eq!(
            (1..=2)
                .flat_map(|i| (1..=2).map(move |j| (i, j)))
                .map(|(i, j)| h1.entry(i, j).unwrap())
                .collect::<Vec<_>>(),
            vec![1, 1, 1, -1]
        );
        for power in 0..=6 {
            let h = sylvester_hadamard(power).unwrap();
            assert_eq!(h.order(), 1 << power);
            assert!(h.rows_pairwise_orthogonal());
        }
        assert!(sylvester_hadamard(13).is_err());
    }

    #[test]
    fn sign_row_parsing_both_forms() {
        let csv: SignRow = "1,-1,-1,-1".parse().unwrap();
        let bits: SignRow = "0111".parse().unwrap();
        assert_eq!(csv, bits);
        assert_eq!(csv, srow(&[1, -1, -1, -1]));
        // A lone "1" is the comma form: the single entry +1.
        assert_eq!("1".parse::<SignRow>().unwrap(), srow(&[1]));
        assert_eq!("0".parse::<SignRow>().unwrap(), srow(&[1]));
        assert_eq!(" 1, +1 , -1 ".parse::<SignRow>().unwrap(), srow(&[1, 1, -1]));
    }

    #[test]
    fn sign_row_parse_errors_name_the_token() {
        let err = "1,2,1".parse::<SignRow>().unwrap_err();
        match err {
            Error::Parse { token, .. } => assert_eq!(token, "2"),
            other => panic!("unexpected error {other:?}"),
        }
        assert!("".parse::<SignRow>().is_err());
        assert!("10,01".parse::<SignRow>().is_err());
    }

    #[test]
    fn sign_row_round_trips_through_text() {
        for index in 0..1u64 << 6 {
            let row = SignRow::from_index(6, index);
            assert_eq!(row.to_string().parse::<SignRow>().unwrap(), row);
            assert_eq!(row.to_bitstring().parse::<SignRow>().unwrap(), row);
        }
    }

    #[test]
    fn rotate_and_negate() {
        let row = srow(&[1, -1, -1, 1]);
        assert_eq!(row.rotate_right(1), srow(&[1, 1, -1, -1]));
        assert_eq!(row.rotate_right(4), row);
        assert_eq!(row.negated(), srow(&[-1, 1, 1, -1]));
        assert_eq!(row.sum(), 0);
    }

    #[test]
    fn multiply_commutes_and_associates_on_sampled_triples() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        for _ in 0..50 {
            let order = rng.gen_range(1..=16);
            let mut make = |_: ()| {
                let row: Vec<Scalar> = (0..order)
                    .map(|_| ratio(rng.gen_range(-9..=9), rng.gen_range(1..=9)))
                    .collect();
                Circulant::from_first_row(row).unwrap()
            };
            let (a, b, c) = (make(()), make(()), make(()));
            assert_eq!(a.multiply(&b).unwrap(), b.multiply(&a).unwrap());
            let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
            let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
            assert_eq!(left, right);
        }
    }

    #[test]
    fn circulant_serde_round_trip() {
        let c = Circulant::from_first_row(vec![int(1), ratio(-3, 2), int(0)]).unwrap();
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, r#"{"order":3,"first_row":["1","-3/2","0"]}"#);
        let back: Circulant = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
    }
}
