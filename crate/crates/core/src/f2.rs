//! Circulant matrices over the binary field, packed into machine words.
//!
//! A circulant over F2 is its first row, stored as a bitmask (bit i is entry
//! i+1). Multiplication is a carryless cyclic convolution: XOR together the
//! left-rotations of one row selected by the set bits of the other. This is
//! all the F2 linear algebra the project needs: enough to ask whether a
//! matrix is symmetric and orthogonal, and to enumerate every first row of a
//! given order to confirm that the identity is the only circulant symmetric
//! orthogonal matrix once the order exceeds 2.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::circulant::Circulant;
use crate::error::{Error, Result};

const MAX_ORDER: usize = 32;
const MAX_SURVEY_ORDER: usize = 24;

/// Circulant matrix over F2, order at most 32.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct F2Circulant {
    order: usize,
    bits: u32,
}

impl F2Circulant {
    pub fn new(order: usize, bits: u32) -> Result<Self> {
        if order == 0 || order > MAX_ORDER {
            return Err(Error::InvalidArgument(format!(
                "order must be between 1 and {MAX_ORDER}, got {order}"
            )));
        }
        if order < MAX_ORDER && bits >> order != 0 {
            return Err(Error::InvalidArgument(format!(
                "bitmask {bits:#x} has set positions beyond order {order}"
            )));
        }
        Ok(F2Circulant { order, bits })
    }

    pub fn identity(order: usize) -> Result<Self> {
        F2Circulant::new(order, 1)
    }

    /// The cyclic shift matrix: first row 0,1,0,…,0 (the identity at order 1).
    pub fn shift(order: usize) -> Result<Self> {
        if order == 1 {
            return F2Circulant::identity(1);
        }
        F2Circulant::new(order, 0b10)
    }

    /// Parse a first row written as '0'/'1' characters, entry 1 first.
    pub fn from_bitstring(text: &str) -> Result<Self> {
        let mut bits = 0u32;
        let mut len = 0usize;
        for (i, c) in text.chars().enumerate() {
            match c {
                '0' => {}
                '1' if i < MAX_ORDER => bits |= 1 << i,
                '1' => {
                    return Err(Error::InvalidArgument(format!(
                        "bitstring longer than {MAX_ORDER}"
                    )))
                }
                other => {
                    return Err(Error::Parse {
                        token: other.to_string(),
                        reason: "expected '0' or '1'".into(),
                    })
                }
            }
            len = i + 1;
        }
        F2Circulant::new(len, bits)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn to_bitstring(&self) -> String {
        (0..self.order)
            .map(|i| if self.bits >> i & 1 == 1 { '1' } else { '0' })
            .collect()
    }

    fn mask(&self) -> u32 {
        if self.order == MAX_ORDER {
            u32::MAX
        } else {
            (1 << self.order) - 1
        }
    }

    fn rotate_left(&self, s: usize) -> u32 {
        debug_assert!(s < self.order);
        if s == 0 {
            return self.bits;
        }
        (self.bits << s | self.bits >> (self.order - s)) & self.mask()
    }

    pub fn multiply(&self, other: &F2Circulant) -> Result<F2Circulant> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        let mut bits = 0u32;
        for j in 0..self.order {
            if self.bits >> j & 1 == 1 {
                bits ^= other.rotate_left(j);
            }
        }
        Ok(F2Circulant {
            order: self.order,
            bits,
        })
    }

    /// First row of the transpose: entry 1 stays, the tail reverses.
    pub fn transpose(&self) -> F2Circulant {
        let mut bits = self.bits & 1;
        for i in 1..self.order {
            if self.bits >> (self.order - i) & 1 == 1 {
                bits |= 1 << i;
            }
        }
        F2Circulant {
            order: self.order,
            bits,
        }
    }

    /// Symmetric iff entry j equals entry (order + 2 − j) for all j ≥ 2,
    /// i.e. the first row's tail is palindromic.
    pub fn is_symmetric(&self) -> bool {
        self.bits == self.transpose().bits
    }

    pub fn is_orthogonal(&self) -> bool {
        let product = self
            .multiply(&self.transpose())
            .expect("same order by construction");
        product.bits == 1
    }
}

/// Spec-level alias for the product, mirroring the rest of the module's
/// free-function surface.
pub fn f2_multiply(a: &F2Circulant, b: &F2Circulant) -> Result<F2Circulant> {
    a.multiply(b)
}

/// Reduce an integer-valued rational circulant mod 2 (entries map by parity,
/// so −1 ↦ 1). Errors if any entry is not an integer or the order exceeds 32.
pub fn reduce_mod2(matrix: &Circulant) -> Result<F2Circulant> {
    if !matrix.is_integral() {
        return Err(Error::PreconditionViolation(
            "mod-2 reduction needs integer entries".into(),
        ));
    }
    let order = matrix.order();
    if order > MAX_ORDER {
        return Err(Error::ResourceLimit(format!(
            "mod-2 reduction supports order at most {MAX_ORDER}, got {order}"
        )));
    }
    let mut bits = 0u32;
    for (i, entry) in matrix.first_row().iter().enumerate() {
        let numer = entry.numer();
        if numer.bit(0) {
            bits |= 1 << i;
        }
    }
    F2Circulant::new(order, bits)
}

/// Result of enumerating every F2 circulant of one order and keeping those
/// that are simultaneously symmetric and orthogonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyReport {
    pub order: usize,
    pub count: usize,
    pub witnesses: Vec<F2Circulant>,
}

#[derive(Serialize, Deserialize)]
struct SurveyRepr {
    order: usize,
    count: usize,
    witnesses: Vec<String>,
}

impl Serialize for SurveyReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SurveyRepr {
            order: self.order,
            count: self.count,
            witnesses: self.witnesses.iter().map(|w| w.to_bitstring()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SurveyReport {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = SurveyRepr::deserialize(deserializer)?;
        let witnesses = repr
            .witnesses
            .iter()
            .map(|text| F2Circulant::from_bitstring(text).map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(SurveyReport {
            order: repr.order,
            count: repr.count,
            witnesses,
        })
    }
}

/// Enumerate all 2^order first rows and count the circulant symmetric
/// orthogonal matrices. For order > 2 only the identity survives; order 2 is
/// the boundary case with two survivors (identity and the swap).
pub fn macwilliams_survey(order: usize) -> Result<SurveyReport> {
    if !(2..=MAX_SURVEY_ORDER).contains(&order) {
        return Err(Error::ResourceLimit(format!(
            "survey supports orders 2 through {MAX_SURVEY_ORDER}, got {order}"
        )));
    }
    let mut witnesses = Vec::new();
    for bits in 0..1u64 << order {
        let candidate = F2Circulant {
            order,
            bits: bits as u32,
        };
        if candidate.is_symmetric() && candidate.is_orthogonal() {
            witnesses.push(candidate);
        }
    }
    Ok(SurveyReport {
        order,
        count: witnesses.len(),
        witnesses,
    })
}
