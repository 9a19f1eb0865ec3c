//! Binary-code bounds and the monochromatic-submatrix inequality.
//!
//! Three pieces. The Plotkin special case: a binary code of length m with
//! even minimum distance d and 2d > m has at most 2⌊d/(2d−m)⌋ words. An
//! independent brute-force oracle for the same quantity: exact maximum
//! clique in the "Hamming distance ≥ d" graph, translated so the zero word
//! is always in the code. And the Hadamard submatrix fact: a constant a×b
//! block inside a ±1 matrix with pairwise orthogonal rows forces ab ≤ n.
//!
//! Words are u32 bitmasks; length is capped well below 32 everywhere.

use serde::{Deserialize, Serialize};

use crate::circulant::DenseSignMatrix;
use crate::error::{Error, Result};

/// Hamming distance between two words of the given length.
pub fn hamming(x: u32, y: u32, length: usize) -> u32 {
    debug_assert!(length <= 32);
    debug_assert!(length == 32 || (x >> length == 0 && y >> length == 0));
    (x ^ y).count_ones()
}

/// The Plotkin special case: `2⌊d/(2d−m)⌋` when d is even and 2d > m,
/// `None` when the hypothesis fails.
pub fn plotkin_bound(m: u32, d: u32) -> Option<u64> {
    debug_assert!(m >= 1 && d >= 1);
    if d % 2 != 0 || 2 * d <= m {
        return None;
    }
    Some(2 * u64::from(d / (2 * d - m)))
}

/// Exact optimum found by [`max_code_bruteforce`], with a certifying code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeOracle {
    pub size: u64,
    pub witness_code: Vec<u32>,
}

const MAX_ORACLE_LENGTH: u32 = 12;

/// Exact maximum size of a binary code of length m with pairwise Hamming
/// distance ≥ d, by branch-and-bound maximum-clique search.
///
/// Translation invariance pins the zero word into the code, so the search
/// runs over words of weight ≥ d only. The worst cases are small d on large
/// m, where the distance graph is dense.
pub fn max_code_bruteforce(m: u32, d: u32) -> Result<CodeOracle> {
    if m == 0 || d == 0 {
        return Err(Error::InvalidArgument(format!(
            "code length and distance must be positive, got m={m}, d={d}"
        )));
    }
    if m > MAX_ORACLE_LENGTH {
        return Err(Error::ResourceLimit(format!(
            "brute-force oracle supports length at most {MAX_ORACLE_LENGTH}, got {m}"
        )));
    }
    let oracle = if d == 1 {
        // Distance ≥ 1 is distinctness; the whole cube qualifies.
        CodeOracle {
            size: 1 << m,
            witness_code: (0..1u32 << m).collect(),
        }
    } else if d > m {
        // No two length-m words can be that far apart.
        CodeOracle {
            size: 1,
            witness_code: vec![0],
        }
    } else {
        let candidates: Vec<u32> = (1..1u32 << m).filter(|w| w.count_ones() >= d).collect();
        let n = candidates.len();
        let words = n.div_ceil(64);
        let mut adjacency = vec![vec![0u64; words]; n];
        for i in 0..n {
            for j in i + 1..n {
                if hamming(candidates[i], candidates[j], m as usize) >= d {
                    adjacency[i][j / 64] |= 1 << (j % 64);
                    adjacency[j][i / 64] |= 1 << (i % 64);
                }
            }
        }
        let mut all = vec![u64::MAX; words];
        if n % 64 != 0 {
            all[words - 1] = (1 << (n % 64)) - 1;
        }
        let mut best = Vec::new();
        let mut current = Vec::new();
        expand_clique(&adjacency, &all, &mut current, &mut best);
        let mut witness = vec![0u32];
        witness.extend(best.iter().map(|&v| candidates[v]));
        witness.sort_unstable();
        CodeOracle {
            size: witness.len() as u64,
            witness_code: witness,
        }
    };
    debug_assert!(verify_code(&oracle.witness_code, m as usize, d));
    debug_assert_eq!(oracle.size as usize, oracle.witness_code.len());
    Ok(oracle)
}

fn verify_code(code: &[u32], length: usize, d: u32) -> bool {
    code.iter().enumerate().all(|(i, &x)| {
        code[i + 1..]
            .iter()
            .all(|&y| hamming(x, y, length) >= d)
    })
}

fn bitset_pop(set: &[u64]) -> usize {
    set.iter().map(|w| w.count_ones() as usize).sum()
}

fn bitset_remove(set: &mut [u64], v: usize) {
    set[v / 64] &= !(1 << (v % 64));
}

fn bitset_contains(set: &[u64], v: usize) -> bool {
    set[v / 64] >> (v % 64) & 1 == 1
}

fn bitset_first(set: &[u64]) -> Option<usize> {
    set.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
}

fn bitset_and(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

/// Branch and bound with greedy coloring: vertices of the candidate set are
/// grouped into color classes (pairwise non-adjacent within a class), so a
/// clique can use at most one vertex per class; expanding in descending
/// color order makes the class number an upper bound that prunes hard.
fn expand_clique(
    adjacency: &[Vec<u64>],
    candidates: &[u64],
    current: &mut Vec<usize>,
    best: &mut Vec<usize>,
) {
    if bitset_pop(candidates) == 0 {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    let mut order = Vec::new();
    let mut colors = Vec::new();
    let mut uncolored = candidates.to_vec();
    let mut color = 0usize;
    while bitset_pop(&uncolored) > 0 {
        color += 1;
        let mut admissible = uncolored.clone();
        while let Some(v) = bitset_first(&admissible) {
            order.push(v);
            colors.push(color);
            bitset_remove(&mut uncolored, v);
            bitset_remove(&mut admissible, v);
            for w in 0..admissible.len() {
                admissible[w] &= !adjacency[v][w];
            }
        }
    }
    let mut remaining = candidates.to_vec();
    for i in (0..order.len()).rev() {
        if current.len() + colors[i] <= best.len() {
            return;
        }
        let v = order[i];
        debug_assert!(bitset_contains(&remaining, v));
        bitset_remove(&mut remaining, v);
        current.push(v);
        let next = bitset_and(&remaining, &adjacency[v]);
        expand_clique(adjacency, &next, current, best);
        current.pop();
    }
}

/// A row/column selection into a ±1 matrix; 1-based, strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubmatrixSpec {
    row_indices: Vec<usize>,
    col_indices: Vec<usize>,
}

impl SubmatrixSpec {
    pub fn new(row_indices: Vec<usize>, col_indices: Vec<usize>) -> Result<Self> {
        let increasing = |list: &[usize]| {
            !list.is_empty() && list.iter().all(|&i| i >= 1) && list.windows(2).all(|w| w[0] < w[1])
        };
        if !increasing(&row_indices) || !increasing(&col_indices) {
            return Err(Error::InvalidArgument(
                "index lists must be nonempty, 1-based, and strictly increasing".into(),
            ));
        }
        Ok(SubmatrixSpec {
            row_indices,
            col_indices,
        })
    }

    pub fn rows(&self) -> &[usize] {
        &self.row_indices
    }

    pub fn cols(&self) -> &[usize] {
        &self.col_indices
    }
}

/// A ±1 matrix whose rows were verified pairwise orthogonal at construction,
/// so submatrix checks need not re-verify the host each call.
#[derive(Debug, Clone)]
pub struct OrthogonalHost {
    matrix: DenseSignMatrix,
}

impl OrthogonalHost {
    pub fn new(matrix: DenseSignMatrix) -> Result<Self> {
        if matrix.order() <= 2 {
            return Err(Error::PreconditionViolation(format!(
                "submatrix bound is stated for order above 2, got {}",
                matrix.order()
            )));
        }
        if !matrix.rows_pairwise_orthogonal() {
            return Err(Error::PreconditionViolation(
                "host rows must be pairwise orthogonal".into(),
            ));
        }
        Ok(OrthogonalHost { matrix })
    }

    pub fn matrix(&self) -> &DenseSignMatrix {
        &self.matrix
    }

    pub fn order(&self) -> usize {
        self.matrix.order()
    }
}

/// Outcome of testing one submatrix selection for constancy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonochromaticReport {
    pub a: usize,
    pub b: usize,
    pub ab: usize,
    pub n: usize,
    pub all_equal: bool,
    pub bound_holds: bool,
}

/// Check whether the selected a×b submatrix is constant; if it is, its area
/// cannot exceed the host order (asserted, since the hypothesis was verified
/// when the host was built).
pub fn monochromatic_bound_check(
    host: &OrthogonalHost,
    spec: &SubmatrixSpec,
) -> Result<MonochromaticReport> {
    let n = host.order();
    let matrix = host.matrix();
    let first = matrix.entry(spec.rows()[0], spec.cols()[0])?;
    let mut all_equal = true;
    'scan: for &i in spec.rows() {
        for &j in spec.cols() {
            if matrix.entry(i, j)? != first {
                all_equal = false;
                break 'scan;
            }
        }
    }
    let a = spec.rows().len();
    let b = spec.cols().len();
    let ab = a * b;
    if all_equal {
        assert!(ab <= n, "constant {a}x{b} block in an orthogonal host of order {n}");
    }
    Ok(MonochromaticReport {
        a,
        b,
        ab,
        n,
        all_equal,
        bound_holds: !all_equal || ab <= n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circulant::{sylvester_hadamard, SignRow};
    use rand::{seq::SliceRandom, Rng, SeedableRng};

    #[test]
    fn hamming_examples() {
        assert_eq!(hamming(0b0000, 0b0000, 4), 0);
        assert_eq!(hamming(0b1010, 0b0101, 4), 4);
        assert_eq!(hamming(0b1100, 0b1010, 4), 2);
    }

    #[test]
    fn hamming_is_a_metric() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        for _ in 0..500 {
            let length = rng.gen_range(1..=16usize);
            let mask = if length == 16 { 0xffff } else { (1u32 << length) - 1 };
            let x = rng.gen::<u32>() & mask;
            let y = rng.gen::<u32>() & mask;
            let z = rng.gen::<u32>() & mask;
            assert_eq!(hamming(x, y, length), hamming(y, x, length));
            assert_eq!(hamming(x, x, length), 0);
            assert!(hamming(x, y, length) > 0 || x == y);
            assert!(hamming(x, z, length) <= hamming(x, y, length) + hamming(y, z, length));
        }
    }

    #[test]
    fn plotkin_examples() {
        assert_eq!(plotkin_bound(3, 2), Some(4));
        assert_eq!(plotkin_bound(4, 2), None);
        assert_eq!(plotkin_bound(6, 4), Some(4));
        assert_eq!(plotkin_bound(5, 3), None);
        assert_eq!(plotkin_bound(11, 6), Some(12));
        assert_eq!(plotkin_bound(12, 8), Some(4));
    }

    #[test]
    fn oracle_known_values() {
        assert_eq!(max_code_bruteforce(3, 2).unwrap().size, 4);
        assert_eq!(max_code_bruteforce(4, 4).unwrap().size, 2);
        for m in 1..=6u32 {
            assert_eq!(max_code_bruteforce(m, 1).unwrap().size, 1u64 << m);
        }
        assert_eq!(max_code_bruteforce(5, 3).unwrap().size, 4);
        assert_eq!(max_code_bruteforce(10, 6).unwrap().size, 6);
        assert_eq!(max_code_bruteforce(12, 8).unwrap().size, 4);
        assert!(max_code_bruteforce(13, 4).is_err());
        assert!(max_code_bruteforce(0, 1).is_err());
        assert!(max_code_bruteforce(4, 0).is_err());
    }

    #[test]
    fn oracle_handles_the_tight_plotkin_case() {
        // A(11,6) meets the bound 2⌊6/1⌋ = 12 exactly.
        let oracle = max_code_bruteforce(11, 6).unwrap();
        assert_eq!(oracle.size, 12);
        assert_eq!(plotkin_bound(11, 6), Some(12));
    }

    #[test]
    fn oracle_agrees_with_subset_enumeration_on_tiny_lengths() {
        // Independent route: enumerate every subset of the cube.
        for m in 1..=4u32 {
            for d in 1..=5u32 {
                let mut best = 0u64;
                for subset in 0u32..1 << (1 << m) {
                    let words: Vec<u32> =
                        (0..1u32 << m).filter(|&w| subset >> w & 1 == 1).collect();
                    if verify_code(&words, m as usize, d) {
                        best = best.max(words.len() as u64);
                    }
                }
                assert_eq!(
                    max_code_bruteforce(m, d).unwrap().size,
                    best,
                    "m={m} d={d}"
                );
            }
        }
    }

    #[test]
    fn oracle_witness_certifies_the_size() {
        for (m, d) in [(6, 4), (8, 6), (9, 6), (11, 6)] {
            let oracle = max_code_bruteforce(m, d).unwrap();
            assert_eq!(oracle.witness_code.len() as u64, oracle.size);
            assert!(verify_code(&oracle.witness_code, m as usize, d));
            assert!(oracle.witness_code.contains(&0));
        }
    }

    #[test]
    fn oracle_never_exceeds_the_plotkin_bound() {
        for m in 1..=12u32 {
            for d in (2..=m).step_by(2) {
                if 2 * d <= m {
                    continue;
                }
                let bound = plotkin_bound(m, d).unwrap();
                let oracle = max_code_bruteforce(m, d).unwrap();
                assert!(
                    oracle.size <= bound,
                    "m={m} d={d}: oracle {} > bound {bound}",
                    oracle.size
                );
            }
        }
    }

    fn h3_host() -> OrthogonalHost {
        let row = SignRow::new(vec![1, -1, -1, -1]).unwrap();
        OrthogonalHost::new(DenseSignMatrix::from_circulant_row(&row)).unwrap()
    }

    #[test]
    fn submatrix_spec_validation() {
        assert!(SubmatrixSpec::new(vec![1, 2], vec![3, 4]).is_ok());
        assert!(SubmatrixSpec::new(vec![], vec![1]).is_err());
        assert!(SubmatrixSpec::new(vec![2, 1], vec![1]).is_err());
        assert!(SubmatrixSpec::new(vec![1, 1], vec![1]).is_err());
        assert!(SubmatrixSpec::new(vec![0, 1], vec![1]).is_err());
    }

    #[test]
    fn monochromatic_examples() {
        let sylvester = OrthogonalHost::new(sylvester_hadamard(3).unwrap()).unwrap();
        let spec = SubmatrixSpec::new(vec![1], (1..=8).collect()).unwrap();
        let report = monochromatic_bound_check(&sylvester, &spec).unwrap();
        assert_eq!(
            report,
            MonochromaticReport {
                a: 1,
                b: 8,
                ab: 8,
                n: 8,
                all_equal: true,
                bound_holds: true,
            }
        );

        // Rows 1 and 2 of circm(1,-1,-1,-1) agree on columns 3 and 4, where
        // both are −1: a constant 2×2 block in an order-4 host, area 4 = n.
        let spec = SubmatrixSpec::new(vec![1, 2], vec![3, 4]).unwrap();
        let report = monochromatic_bound_check(&h3_host(), &spec).unwrap();
        assert!(report.all_equal);
        assert_eq!(report.ab, 4);

        let spec = SubmatrixSpec::new(vec![1, 2], vec![1, 2]).unwrap();
        let report = monochromatic_bound_check(&h3_host(), &spec).unwrap();
        assert!(!report.all_equal);
        assert!(report.bound_holds);
    }

    #[test]
    fn hosts_are_validated_once() {
        let constant = DenseSignMatrix::from_circulant_row(&SignRow::new(vec![1, 1, 1, 1]).unwrap());
        assert!(matches!(
            OrthogonalHost::new(constant),
            Err(Error::PreconditionViolation(_))
        ));
        let tiny = sylvester_hadamard(1).unwrap();
        assert!(matches!(
            OrthogonalHost::new(tiny),
            Err(Error::PreconditionViolation(_))
        ));
        let out_of_range = SubmatrixSpec::new(vec![1], vec![9]).unwrap();
        let sylvester = OrthogonalHost::new(sylvester_hadamard(3).unwrap()).unwrap();
        assert!(monochromatic_bound_check(&sylvester, &out_of_range).is_err());
    }

    #[test]
    fn random_sylvester_selections_respect_the_bound() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for power in [2u32, 3, 4, 5, 6] {
            let host = OrthogonalHost::new(sylvester_hadamard(power).unwrap()).unwrap();
            let n = host.order();
            for _ in 0..2000 {
                let a = rng.gen_range(1..=4.min(n));
                let b = rng.gen_range(1..=4.min(n));
                let mut all: Vec<usize> = (1..=n).collect();
                all.shuffle(&mut rng);
                let mut rows: Vec<usize> = all[..a].to_vec();
                rows.sort_unstable();
                all.shuffle(&mut rng);
                let mut cols: Vec<usize> = all[..b].to_vec();
                cols.sort_unstable();
                let spec = SubmatrixSpec::new(rows, cols).unwrap();
                let report = monochromatic_bound_check(&host, &spec).unwrap();
                assert!(report.bound_holds);
                if report.all_equal {
                    assert!(report.ab <= n);
                }
            }
        }
    }
}
