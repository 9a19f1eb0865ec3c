//! The odd/even decomposition of a candidate first row.
//!
//! A ±1 row of even length n splits into two sub-circulants of order n/2:
//! E1 from the odd positions (h_1, h_3, …) and E2 from the even positions
//! (h_2, h_4, …). Everything this module computes hangs off that split: the
//! block row sums λ1, λ2 and their forced relation λ1·λ2 = 0 on Hadamard
//! rows, the block Gram matrices, the inner-product identity tying block
//! rows back to rows of the full matrix, the half-sum pair
//! K1 = (E1+E2)/2 and K2 = (E1−E2)/2 with its mod-2 behavior, and the
//! four-way condition classifier.
//!
//! Everything is exact; the only i64 values are sums of ±1 products.

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::circulant::{is_circulant_hadamard, paf, Circulant, SignRow};
use crate::error::{Error, Result};
use crate::f2::reduce_mod2;
use crate::rank::{invertible_column_pair, rank, RankCertificate};
use crate::scalar::ratio;

/// The full odd/even split of a row, with every derived object the analysis
/// needs. `k1 + k2 = e1` and `k1 − k2 = e2` hold by construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Decomposition {
    pub e1: Circulant,
    pub e2: Circulant,
    pub lambda1: i64,
    pub lambda2: i64,
    pub g1: Circulant,
    pub g2: Circulant,
    pub rank1: RankCertificate,
    pub rank2: RankCertificate,
    pub k1: Circulant,
    pub k2: Circulant,
}

fn require_even(row: &SignRow) -> Result<usize> {
    let n = row.len();
    if n % 2 != 0 || n < 4 {
        return Err(Error::InvalidArgument(format!(
            "decomposition needs an even length of at least 4, got {n}"
        )));
    }
    Ok(n)
}

/// Split a row of even length into its odd-position and even-position
/// sub-rows (1-based positions; entry 1 lands in the first block).
pub fn split(row: &SignRow) -> Result<(SignRow, SignRow)> {
    require_even(row)?;
    let h = row.entries();
    let odd: Vec<i8> = h.iter().copied().step_by(2).collect();
    let even: Vec<i8> = h.iter().copied().skip(1).step_by(2).collect();
    Ok((SignRow::new(odd)?, SignRow::new(even)?))
}

/// Inverse of [`split`]: weave two equal-length blocks back into one row,
/// the first block filling the odd positions.
pub fn interleave(odd: &SignRow, even: &SignRow) -> Result<SignRow> {
    if odd.len() != even.len() {
        return Err(Error::OrderMismatch {
            left: odd.len(),
            right: even.len(),
        });
    }
    let mut entries = Vec::with_capacity(2 * odd.len());
    for (&a, &b) in odd.entries().iter().zip(even.entries()) {
        entries.push(a);
        entries.push(b);
    }
    SignRow::new(entries)
}

/// First row of π·circm(row): the row rotated right by one. Rotation
/// preserves the Hadamard property and swaps the roles of the odd and even
/// position blocks.
pub fn pi_shift(row: &SignRow) -> SignRow {
    row.rotate_right(1)
}

/// Compute the full decomposition of an even-length row.
pub fn decompose(row: &SignRow) -> Result<Decomposition> {
    let n = require_even(row)?;
    let (odd, even) = split(row)?;
    let e1 = Circulant::from_sign_row(&odd);
    let e2 = Circulant::from_sign_row(&even);
    let g1 = e1.gram();
    let g2 = e2.gram();
    let rank1 = rank(&e1);
    let rank2 = rank(&e2);
    let half = ratio(1, 2);
    let k1 = e1.add(&e2)?.scale(&half);
    let k2 = e1.sub(&e2)?.scale(&half);
    debug_assert_eq!(k1.add(&k2)?, e1);
    debug_assert_eq!(k1.sub(&k2)?, e2);
    debug_assert_eq!(g1.first_row()[0], crate::scalar::int((n / 2) as i64));
    Ok(Decomposition {
        e1,
        e2,
        lambda1: odd.sum(),
        lambda2: even.sum(),
        g1,
        g2,
        rank1,
        rank2,
        k1,
        k2,
    })
}

/// The block-row inner-product sum
/// Σ_{j≠1} ⟨R_1,R_j⟩ + Σ_{j≠1} ⟨S_1,S_j⟩ over j = 2..n/2, where R_j and
/// S_j are the rows of E1 and E2. Equals λ1² + λ2² − n, hence 0 on every
/// circulant Hadamard row.
pub fn graphr_identity(row: &SignRow) -> Result<i64> {
    require_even(row)?;
    let (odd, even) = split(row)?;
    // ⟨R_1, R_j⟩ is the block autocorrelation at shift j−1, so the whole
    // sum reduces to two integer spectra. No rational arithmetic needed.
    let p1 = paf(&odd).values;
    let p2 = paf(&even).values;
    let value: i64 = (1..odd.len()).map(|t| p1[t] + p2[t]).sum();
    debug_assert_eq!(value, {
        let (l1, l2) = (odd.sum(), even.sum());
        l1 * l1 + l2 * l2 - row.len() as i64
    });
    Ok(value)
}

/// The row-wise form behind [`graphr_identity`]:
/// ⟨R_1,R_j⟩ + ⟨S_1,S_j⟩ = ⟨T_1,T_{2j−1}⟩ for every j, where T_j are the
/// rows of the full matrix. Holds for all even-length rows, Hadamard or not.
pub fn graphr_row_identity(row: &SignRow) -> Result<bool> {
    require_even(row)?;
    let (odd, even) = split(row)?;
    let p1 = paf(&odd).values;
    let p2 = paf(&even).values;
    let full = paf(row).values;
    Ok((0..odd.len()).all(|t| p1[t] + p2[t] == full[2 * t]))
}

/// Block row sums of a Hadamard row, with the forced relations checked.
///
/// `lambda_odd_zero` restates the pair with the zero sum in the odd slot,
/// applying at most one π-shift (which swaps the blocks); `shift_applied`
/// records whether that shift was needed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MisscaseReport {
    pub lambda1: i64,
    pub lambda2: i64,
    pub product: i64,
    pub sum_of_squares: i64,
    pub lambda_odd_zero: (i64, i64),
    pub shift_applied: bool,
}

/// For a circulant Hadamard row: λ1·λ2 = 0 and λ1² + λ2² = n. Both are
/// asserted, and the normalized ordering with the zero in the odd slot is
/// reported.
pub fn misscase_check(row: &SignRow) -> Result<MisscaseReport> {
    let n = require_even(row)? as i64;
    if !is_circulant_hadamard(row) {
        return Err(Error::PreconditionViolation(
            "block row-sum relations are stated for circulant Hadamard rows only".into(),
        ));
    }
    let (odd, even) = split(row)?;
    let lambda1 = odd.sum();
    let lambda2 = even.sum();
    let product = lambda1 * lambda2;
    let sum_of_squares = lambda1 * lambda1 + lambda2 * lambda2;
    assert_eq!(product, 0, "Hadamard row with both block sums nonzero");
    assert_eq!(sum_of_squares, n, "block sums must satisfy λ1² + λ2² = n");
    let (lambda_odd_zero, shift_applied) = if lambda1 == 0 {
        ((lambda1, lambda2), false)
    } else {
        // One rotation moves the even positions into the odd slots.
        ((lambda2, lambda1), true)
    };
    Ok(MisscaseReport {
        lambda1,
        lambda2,
        product,
        sum_of_squares,
        lambda_odd_zero,
        shift_applied,
    })
}

/// Idempotence and involution flags for K1 and K2, computed by exact
/// rational squaring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectionReport {
    pub k1_is_projection: bool,
    pub k2_is_projection: bool,
    pub k1_is_involution: bool,
    pub k2_is_involution: bool,
}

/// Whether K² = K (projection) and K² = I (involution) for K1 and K2.
/// Reported as measured, on any even length.
pub fn projection_check(row: &SignRow) -> Result<ProjectionReport> {
    let d = decompose(row)?;
    let identity = Circulant::identity(d.k1.order());
    let square1 = d.k1.multiply(&d.k1)?;
    let square2 = d.k2.multiply(&d.k2)?;
    Ok(ProjectionReport {
        k1_is_projection: square1 == d.k1,
        k2_is_projection: square2 == d.k2,
        k1_is_involution: square1 == identity,
        k2_is_involution: square2 == identity,
    })
}

/// Symmetric-and-orthogonal verdicts for the mod-2 reductions of K1 and K2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mod2Report {
    pub k1_ok: bool,
    pub k2_ok: bool,
}

/// Reduce K1 and K2 mod 2 (entries are always integers in {−1, 0, 1}, and
/// −1 ↦ 1 by parity) and test each reduction for symmetry and orthogonality
/// over F2.
pub fn mod2_symmetric_orthogonal(row: &SignRow) -> Result<Mod2Report> {
    let d = decompose(row)?;
    let r1 = reduce_mod2(&d.k1)?;
    let r2 = reduce_mod2(&d.k2)?;
    Ok(Mod2Report {
        k1_ok: r1.is_symmetric() && r1.is_orthogonal(),
        k2_ok: r2.is_symmetric() && r2.is_orthogonal(),
    })
}

/// The four-condition profile of a row, evaluated independently of whether
/// the row is Hadamard.
///
/// cond_a: both blocks have rank 1. cond_b: all entries of both Gram
/// matrices share one absolute value. cond_c: the first two rows of each
/// block are linearly dependent over the rationals. cond_d: in each block,
/// |⟨row 1, row 2⟩| equals |⟨row 1, row 1⟩|.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionProfile {
    pub cond_a: bool,
    pub cond_b: bool,
    pub cond_c: bool,
    pub cond_d: bool,
    pub ranks: (usize, usize),
    pub gram_abs_uniform: bool,
    pub graphr_sum: i64,
    pub lambda_product: i64,
}

pub fn classify_conditions(row: &SignRow) -> Result<ConditionProfile> {
    let d = decompose(row)?;
    let ranks = (d.rank1.rank, d.rank2.rank);
    let cond_a = ranks == (1, 1);

    let mut abs_values = d
        .g1
        .first_row()
        .iter()
        .chain(d.g2.first_row())
        .map(|e| e.abs());
    let first = abs_values.next().expect("blocks are nonempty");
    let gram_abs_uniform = abs_values.all(|v| v == first);

    let dependent = |block: &Circulant| -> Result<bool> {
        let r1 = block.row(1)?;
        let r2 = block.row(2)?;
        Ok(invertible_column_pair(&r1, &r2).is_none())
    };
    let cond_c = dependent(&d.e1)? && dependent(&d.e2)?;

    let matched = |block: &Circulant| -> Result<bool> {
        Ok(block.row_inner(1, 2)?.abs() == block.row_inner(1, 1)?.abs())
    };
    let cond_d = matched(&d.e1)? && matched(&d.e2)?;

    Ok(ConditionProfile {
        cond_a,
        cond_b: gram_abs_uniform,
        cond_c,
        cond_d,
        ranks,
        gram_abs_uniform,
        graphr_sum: graphr_identity(row)?,
        lambda_product: d.lambda1 * d.lambda2,
    })
}

/// Entry-count profile of a Hadamard row against the regular-Hadamard
/// pattern: n = 4h² with h odd, and 2h² ± h entries of each sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityProfile {
    pub n: usize,
    pub h: Option<u64>,
    pub positive_count: usize,
    pub negative_count: usize,
    pub row_sum: i64,
    pub consistent: bool,
}

fn integer_sqrt(n: usize) -> usize {
    let mut r = 0usize;
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Profile a circulant Hadamard row of order ≥ 4. A failure of the n = 4h²
/// shape (or of the entry counts) is reported as `consistent = false`, not
/// as an error; a non-Hadamard input is a precondition violation.
pub fn regularity_profile(row: &SignRow) -> Result<RegularityProfile> {
    let n = row.len();
    if n < 4 {
        return Err(Error::InvalidArgument(format!(
            "the regular-Hadamard pattern is stated for order at least 4, got {n}"
        )));
    }
    if !is_circulant_hadamard(row) {
        return Err(Error::PreconditionViolation(
            "regularity profile is stated for circulant Hadamard rows only".into(),
        ));
    }
    let positive_count = row.entries().iter().filter(|&&e| e == 1).count();
    let negative_count = n - positive_count;
    let root = integer_sqrt(n);
    let h = (root * root == n && root % 2 == 0).then(|| (root / 2) as u64);
    let consistent = match h {
        Some(h) if h % 2 == 1 => {
            let h = h as usize;
            let high = 2 * h * h + h;
            let low = 2 * h * h - h;
            (positive_count, negative_count) == (high, low)
                || (positive_count, negative_count) == (low, high)
        }
        _ => false,
    };
    Ok(RegularityProfile {
        n,
        h,
        positive_count,
        negative_count,
        row_sum: row.sum(),
        consistent,
    })
}
