//! Named invariant suites, runnable one at a time or all together.
//!
//! Each suite stresses one structural fact the library relies on, mixing
//! exhaustive sweeps over small orders with seeded random sampling at larger
//! ones. A suite reports how many checks it ran and whether all of them
//! held; randomized suites are reproducible through the seed parameter.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::circulant::{
    brute_force_hadamard_rows, is_circulant_hadamard, paf, sylvester_hadamard, Circulant, SignRow,
};
use crate::coding::{
    hamming, max_code_bruteforce, monochromatic_bound_check, plotkin_bound, OrthogonalHost,
    SubmatrixSpec,
};
use crate::decomposition::{
    classify_conditions, decompose, graphr_identity, graphr_row_identity, interleave,
    misscase_check, mod2_symmetric_orthogonal, pi_shift, projection_check, regularity_profile,
    split,
};
use crate::error::{Error, Result};
use crate::f2::{f2_multiply, macwilliams_survey, reduce_mod2, F2Circulant};
use crate::rank::{
    check_rank_gram_equality, consecutive_equal_rows_implies_constant, first_equals_third_sum,
    rank, rank1_structure, rank2_coefficients, Rank1Class,
};
use crate::scalar::{ratio, Scalar};
use crate::search::{full_search, SearchConfig, SearchMode};

/// Outcome of one suite run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub name: String,
    pub instances: u64,
    pub passed: bool,
    pub detail: String,
}

struct Check {
    instances: u64,
    failure_count: u64,
    first_failure: Option<String>,
}

impl Check {
    fn new() -> Self {
        Check { instances: 0, failure_count: 0, first_failure: None }
    }

    fn verify(&mut self, condition: bool, context: impl FnOnce() -> String) {
        self.instances += 1;
        if !condition {
            self.failure_count += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(context());
            }
        }
    }

    fn finish(self, name: &str, summary: impl Into<String>) -> SuiteResult {
        let passed = self.failure_count == 0;
        let detail = if passed {
            summary.into()
        } else {
            format!(
                "{} of {} checks failed; first: {}",
                self.failure_count,
                self.instances,
                self.first_failure.unwrap_or_default()
            )
        };
        SuiteResult { name: name.to_string(), instances: self.instances, passed, detail }
    }
}

fn rng_for(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn random_sign_row(rng: &mut ChaCha8Rng, len: usize) -> SignRow {
    SignRow::from_index(len, rng.gen_range(0..1u64 << len))
}

fn random_rational_circulant(rng: &mut ChaCha8Rng, order: usize) -> Circulant {
    let entries: Vec<Scalar> =
        (0..order).map(|_| ratio(rng.gen_range(-9..=9), rng.gen_range(1..=9))).collect();
    Circulant::from_first_row(entries).expect("nonempty row")
}

fn order_4_rows() -> Vec<SignRow> {
    brute_force_hadamard_rows(4).expect("order 4 is in range")
}

fn suite_eigenvector_row_sum(seed: u64) -> SuiteResult {
    let mut check = Check::new();
    let mut rng = rng_for(seed, 1);
    for _ in 0..120 {
        let order = rng.gen_range(1..=8);
        let matrix = random_rational_circulant(&mut rng, order);
        let expected: Scalar = matrix.first_row().iter().sum();
        for i in 1..=order {
            let row_sum: Scalar = matrix.row(i).expect("index in range").iter().sum();
            check.verify(row_sum == expected, || format!("row {i} of a random order-{order} circulant"));
        }
    }
    for row in order_4_rows() {
        let matrix = Circulant::from_sign_row(&row);
        let expected: Scalar = matrix.first_row().iter().sum();
        for i in 1..=4 {
            let row_sum: Scalar = matrix.row(i).expect("index in range").iter().sum();
            check.verify(row_sum == expected, || format!("row {i} of {row}"));
        }
    }
    check.finish(
        "eigenvector_row_sum",
        "every row of a circulant sums to the first-row sum, so the all-ones vector is an eigenvector",
    )
}

fn suite_paf_spectrum(seed: u64) -> SuiteResult {
    let mut check = Check::new();
    for n in 1..=10usize {
        for index in 0..1u64 << n {
            let row = SignRow::from_index(n, index);
            let values = paf(&row).values;
            check.verify(values[0] == n as i64, || format!("zero-shift value of {row}"));
            for t in 1..n {
                check.verify(values[t] == values[n - t], || format!("symmetry at shift {t} of {row}"));
            }
            let flat = (1..=n / 2).all(|t| values[t] == 0);
            check.verify(
                is_circulant_hadamard(&row) == flat,
                || format!("flat-spectrum equivalence for {row}"),
            );
        }
    }
    let mut rng = rng_for(seed, 2);
    for _ in 0..200 {
        let n = rng.gen_range(11..=16);
        let row = random_sign_row(&mut rng, n);
        let values = paf(&row).values;
        for t in 1..n {
            check.verify(values[t] == values[n - t], || format!("symmetry at shift {t} of {row}"));
        }
    }
    check.finish(
        "paf_spectrum",
        "autocorrelation spectra are symmetric, start at n, and vanish exactly on Hadamard rows",
    )
}

fn suite_rank_gram(seed: u64) -> SuiteResult {
    let mut check = Check::new();
    for n in 1..=7usize {
        for index in 0..1u64 << n {
            let row = SignRow::from_index(n, index);
            let matrix = Circulant::from_sign_row(&row);
            check.verify(check_rank_gram_equality(&matrix), || format!("sign row {row}"));
        }
    }
    let mut rng = rng_for(seed, 3);
    for _ in 0..120 {
        let order = rng.gen_range(1..=6);
        let matrix = random_rational_circulant(&mut rng, order);
        check.verify(check_rank_gram_equality(&matrix), || format!("random order-{order} circulant"));
    }
    check.finish("rank_gram", "rank(A·Aᵀ) equals rank(A) for circulants over the rationals")
}

fn suite_rank1_structure(_seed: u64) -> SuiteResult {
    let mut check = Check::new();
    for n in [2usize, 4, 6, 8, 10] {
        for index in 0..1u64 << n {
            let row = SignRow::from_index(n, index);
            let class = rank1_structure(&row).expect("even length");
            let actual_rank = rank(&Circulant::from_sign_row(&row)).rank;
            check.verify(
                (class != Rank1Class::NotRank1) == (actual_rank == 1),
                || format!("classification of {row}"),
            );
            match class {
                Rank1Class::ConstantPlus => {
                    check.verify(row.entries().iter().all(|&e| e == 1), || format!("{row}"))
                }
                Rank1Class::ConstantMinus => {
                    check.verify(row.entries().iter().all(|&e| e == -1), || format!("{row}"))
                }
                Rank1Class::Alternating => check.verify(
                    row.entries().windows(2).all(|w| w[0] == -w[1]),
                    || format!("{row}"),
                ),
                Rank1Class::NotRank1 => {}
            }
        }
    }
    check.finish(
        "rank1_structure",
        "a ±1 circulant has rank 1 exactly when its row is constant or alternating",
    )
}

fn rank2_rows(len: usize) -> Vec<SignRow> {
    (0..1u64 << len)
        .map(|index| SignRow::from_index(len, index))
        .filter(|row| rank(&Circulant::from_sign_row(row)).rank == 2)
        .collect()
}

fn suite_rank2_coefficients(_seed: u64) -> SuiteResult {
    let mut check = Check::new();
    let mut qualifying = 0u64;
    for len in [6usize, 8, 10] {
        for row in rank2_rows(len) {
            qualifying += 1;
            let (a, b) = rank2_coefficients(&row).expect("rank is 2");
            let matrix = Circulant::from_sign_row(&row);
            let r1 = matrix.row(1).expect("in range");
            let r2 = matrix.row(2).expect("in range");
            let r3 = matrix.row(3).expect("in range");
            let reproduced = (0..len).all(|c| &(&a * &r1[c]) + &(&b * &r2[c]) == r3[c]);
            check.verify(reproduced, || format!("third-row reproduction for {row}"));
        }
    }
    // Rows of other ranks must be turned away.
    check.verify(
        matches!(
            rank2_coefficients(&SignRow::new(vec![1; 6]).expect("constant row")),
            Err(Error::PreconditionViolation(_))
        ),
        || "rank-1 row was not rejected".to_string(),
    );
    check.finish(
        "rank2_coefficients",
        format!("row 3 = a·row 1 + b·row 2 verified on all {qualifying} rank-2 rows of length ≤ 10"),
    )
}

fn suite_coefficient_trichotomy(_seed: u64) -> SuiteResult {
    let mut check = Check::new();
    let mut nonzero_sum = 0u64;
    for len in [6usize, 8, 10] {
        for row in rank2_rows(len) {
            let (a, b) = rank2_coefficients(&row).expect("rank is 2");
            if row.sum() != 0 {
                nonzero_sum += 1;
                check.verify(&a + &b == Scalar::from_integer(1.into()), || format!("a+b for {row}"));
            } else {
                check.verify(true, || String::new());
            }
            // Every rank-2 row at these lengths is antiperiodic with period 2,
            // which pins the coefficient pair.
            check.verify(
                (a.clone(), b.clone()) == (ratio(-1, 1), ratio(0, 1)),
                || format!("coefficient pair for {row}"),
            );
        }
    }
    check.finish(
        "coefficient_trichotomy",
        format!(
            "rank-2 rows with nonzero sum must have a+b = 1; {nonzero_sum} such rows exist at lengths ≤ 10, all rank-2 rows there have zero sum"
        ),
    )
}

fn suite_consecutive_rows(_seed: u64) -> SuiteResult {
    let mut check = Check::new();
    for n in 1..=12usize {
        for index in 0..1u64 << n {
            let row = SignRow::from_index(n, index);
            check.verify(consecutive_equal_rows_implies_constant(&row), || format!("{row}"));
            let rows_equal = row.rotate_right(1) == row;
            let constant = row.entries().iter().all(|&e| e == row.entries()[0]);
            check.verify(rows_equal == constant, || format!("equality pattern of {row}"));
        }
    }
    check.finish(
        "consecutive_rows",
        "equal first and second circulant rows force a constant row, checked exhaustively to length 12",
    )
}

fn suite_first_equals_third(_seed: u64) -> SuiteResult {
    let mut check = Check::new();
    for n in [6usize, 8, 10, 12] {
        for index in 0..1u64 << n {
            let row = SignRow::from_index(n, index);
            let outcome = first_equals_third_sum(&row).expect("even length ≥ 6");
            let coincide = row.rotate_right(2) == row;
            check.verify(outcome.is_some() == coincide, || format!("detection on {row}"));
            if let Some(sum) = outcome {
                check.verify(sum == row.sum(), || format!("sum value on {row}"));
                check.verify(
                    sum == 0 || sum.unsigned_abs() as usize == n,
                    || format!("forced sum range on {row}"),
                );
            }
        }
    }
    check.finish(
        "first_equals_third",
        "rows equal to their own double shift are 2-periodic, so their sum is 0 or ±n",
    )
}

fn suite_graphr(seed: u64) -> SuiteResult {
    let mut check = Check::new();
    for n in [4usize, 6, 8, 10, 12, 14] {
        for index in 0..1u64 << n {
            let row = SignRow::from_index(n, index);
            let value = graphr_identity(&row).expect("even length");
            let (odd, even) = split(&row).expect("even length");
            let (l1, l2) = (odd.sum(), even.sum());
            check.verify(value == l1 * l1 + l2 * l2 - n as i64, || format!("closed form on {row}"));
            check.verify(graphr_row_identity(&row).expect("even length"), || format!("row identity on {row}"));
        }
    }
    let mut rng = rng_for(seed, 9);
    for _ in 0..1000 {
        let row = random_sign_row(&mut rng, 16);
        check.verify(graphr_row_identity(&row).expect("even length"), || format!("row identity on {row}"));
    }
    check.finish(
        "graphr",
        "the block inner-product sum matches λ1²+λ2²−n and its row-wise form holds on every even row",
    )
}

fn suite_misscase(seed: u64) -> SuiteResult {
    let mut check = Check::new();
    for row in order_4_rows() {
        let report = misscase_check(&row).expect("Hadamard row");
        check.verify(report.product == 0, || format!("λ product for {row}"));
        check.verify(report.sum_of_squares == 4, || format!("λ square sum for {row}"));
        check.verify(report.lambda_odd_zero.0 == 0, || format!("normalized odd slot for {row}"));
        let mut pair = [report.lambda1, report.lambda2];
        let mut normalized = [report.lambda_odd_zero.0, report.lambda_odd_zero.1];
        pair.sort_unstable();
        normalized.sort_unstable();
        check.verify(pair == normalized, || format!("λ multiset for {row}"));
        check.verify(report.shift_applied == (report.lambda1 != 0), || format!("shift flag for {row}"));
    }
    // The π-shift swaps the two blocks, hence the two block sums.
    for n in [4usize, 6, 8, 10] {
        for index in 0..1u64 << n {
            let row = SignRow::from_index(n, index);
            let (odd, even) = split(&row).expect("even length");
            let (shifted_odd, shifted_even) = split(&pi_shift(&row)).expect("even length");
            check.verify(
                (shifted_odd.sum(), shifted_even.sum()) == (even.sum(), odd.sum()),
                || format!("block-sum swap on {row}"),
            );
        }
    }
    let mut rng = rng_for(seed, 10);
    for _ in 0..50 {
        let n = 2 * rng.gen_range(2..=6);
        let row = random_sign_row(&mut rng, n);
        if !is_circulant_hadamard(&row) {
            check.verify(misscase_check(&row).is_err(), || format!("non-Hadamard {row} accepted"));
        }
    }
    check.finish(
        "misscase",
        "Hadamard block sums satisfy λ1λ2 = 0 and λ1²+λ2² = n, with the π-shift swapping the pair",
    )
}

fn suite_regular(_seed: u64) -> SuiteResult {
    let mut check = Check::new();
    for row in order_4_rows() {
        let profile = regularity_profile(&row).expect("Hadamard row");
        check.verify(profile.consistent, || format!("consistency for {row}"));
        check.verify(profile.h == Some(1), || format!("h for {row}"));
        check.verify(
            profile.positive_count + profile.negative_count == 4,
            || format!("count total for {row}"),
        );
        check.verify(profile.row_sum.abs() == 2, || format!("row sum for {row}"));
    }
    for h in [1u64, 3, 5, 7, 9] {
        let n = 4 * h * h;
        let heavy = 2 * h * h + h;
        let light = 2 * h * h - h;
        check.verify(heavy + light == n, || format!("count sum at h = {h}"));
        check.verify(heavy - light == 2 * h, || format!("count gap at h = {h}"));
        check.verify((heavy as i64 - light as i64) % 2 == 0, || format!("gap parity at h = {h}"));
    }
    check.verify(
        regularity_profile(&SignRow::new(vec![1, 1, 1, 1]).expect("row")).is_err(),
        || "non-Hadamard row accepted".to_string(),
    );
    check.finish(
        "regular",
        "a circulant Hadamard row of order 4h² carries 2h²±h entries of each sign",
    )
}

fn suite_conditions_n4(_seed: u64) -> SuiteResult {
    let mut check = Check::new();
    for row in order_4_rows() {
        let profile = classify_conditions(&row).expect("even length");
        check.verify(profile.cond_a, || format!("condition (a) for {row}"));
        check.verify(profile.cond_b, || format!("condition (b) for {row}"));
        check.verify(profile.cond_c, || format!("condition (c) for {row}"));
        check.verify(profile.cond_d, || format!("condition (d) for {row}"));
        check.verify(profile.ranks == (1, 1), || format!("block ranks for {row}"));
        check.verify(profile.cond_b == profile.gram_abs_uniform, || format!("(b) alias for {row}"));
        check.verify(profile.graphr_sum == 0, || format!("block sum identity for {row}"));
        check.verify(profile.lambda_product == 0, || format!("λ product for {row}"));
    }
    check.finish("conditions_n4", "all four structural conditions hold on every order-4 hit")
}

fn suite_projection_mod2(_seed: u64) -> SuiteResult {
    let mut check = Check::new();
    let mut projection_count = 0u32;
    for row in order_4_rows() {
        let mod2 = mod2_symmetric_orthogonal(&row).expect("even length");
        check.verify(mod2.k1_ok, || format!("K1 mod 2 for {row}"));
        check.verify(mod2.k2_ok, || format!("K2 mod 2 for {row}"));
        let projections = projection_check(&row).expect("even length");
        check.verify(projections.k1_is_involution, || format!("K1 involution for {row}"));
        check.verify(projections.k2_is_involution, || format!("K2 involution for {row}"));
        projection_count += u32::from(projections.k1_is_projection);
        projection_count += u32::from(projections.k2_is_projection);
    }
    check.verify(projection_count == 4, || format!("projection count {projection_count}"));
    check.finish(
        "projection_mod2",
        "both half-sum matrices reduce mod 2 to symmetric orthogonal circulants; over ℤ they are involutions, and 4 of the 16 are projections",
    )
}

fn suite_macwilliams(_seed: u64) -> SuiteResult {
    let mut check = Check::new();
    for order in (3..=13usize).step_by(2) {
        let survey = macwilliams_survey(order).expect("order in range");
        check.verify(survey.count == 1, || format!("odd order {order} count {}", survey.count));
        check.verify(
            survey.witnesses == vec![F2Circulant::identity(order).expect("order in range")],
            || format!("odd order {order} witness set"),
        );
    }
    for order in (2..=14usize).step_by(2) {
        let survey = macwilliams_survey(order).expect("order in range");
        check.verify(
            survey.count == 1 << (order / 4 + 1),
            || format!("even order {order} count {}", survey.count),
        );
        let identity = F2Circulant::identity(order).expect("order in range");
        let half_shift = F2Circulant::new(order, 1 << (order / 2)).expect("order in range");
        check.verify(survey.witnesses.contains(&identity), || format!("identity at order {order}"));
        check.verify(survey.witnesses.contains(&half_shift), || format!("half shift at order {order}"));
        for witness in &survey.witnesses {
            check.verify(
                witness.is_symmetric() && witness.is_orthogonal(),
                || format!("witness {} at order {order}", witness.to_bitstring()),
            );
            let square = witness.multiply(witness).expect("same order");
            check.verify(square == identity, || {
                format!("square of witness {} at order {order}", witness.to_bitstring())
            });
        }
    }
    check.finish(
        "macwilliams",
        "the identity is the only symmetric orthogonal binary circulant at odd orders; even orders carry 2^(⌊n/4⌋+1) of them, always including the half shift",
    )
}

fn suite_plotkin(_seed: u64) -> SuiteResult {
    let mut check = Check::new();
    for m in 1..=10u32 {
        for d in (2..=m).step_by(2) {
            if 2 * d <= m {
                continue;
            }
            let bound = plotkin_bound(m, d).expect("d even and 2d > m");
            let oracle = max_code_bruteforce(m, d).expect("m within cap");
            check.verify(
                oracle.size <= bound,
                || format!("m = {m}, d = {d}: oracle {} over bound {bound}", oracle.size),
            );
        }
    }
    for (m, d, value) in [(3u32, 2u32, 4u64), (4, 4, 2), (6, 4, 4), (10, 6, 6)] {
        let bound = plotkin_bound(m, d).expect("d even and 2d > m");
        let oracle = max_code_bruteforce(m, d).expect("m within cap");
        check.verify(bound == value && oracle.size == value, || format!("tight case ({m},{d})"));
    }
    check.finish("plotkin", "exhaustive code sizes never exceed the Plotkin bound, and known tight cases meet it")
}

fn suite_monochromatic(seed: u64) -> SuiteResult {
    let mut check = Check::new();
    let mut rng = rng_for(seed, 16);
    let mut constant_blocks = 0u64;
    for power in 2..=5u32 {
        let host = OrthogonalHost::new(sylvester_hadamard(power).expect("power in range"))
            .expect("Sylvester matrices have orthogonal rows");
        let order = host.matrix().order();
        for _ in 0..150 {
            let pick = |rng: &mut ChaCha8Rng| -> Vec<usize> {
                loop {
                    let mask = rng.gen::<u64>() & ((1u64 << order) - 1);
                    if mask != 0 {
                        return (0..order).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
                    }
                }
            };
            let spec = SubmatrixSpec::new(pick(&mut rng), pick(&mut rng)).expect("valid indices");
            let report = monochromatic_bound_check(&host, &spec).expect("indices in range");
            check.verify(report.bound_holds, || {
                format!("ab > n on a constant {}×{} block of the order-{order} host", report.a, report.b)
            });
            if report.all_equal {
                constant_blocks += 1;
                check.verify(report.ab <= report.n, || format!("ab bound at order {order}"));
            }
        }
    }
    check.finish(
        "monochromatic",
        format!("constant submatrices obey ab ≤ n on Sylvester hosts ({constant_blocks} constant blocks sampled)"),
    )
}

fn suite_f2_cross(seed: u64) -> SuiteResult {
    let mut check = Check::new();
    let mut rng = rng_for(seed, 17);
    for _ in 0..250 {
        let order = rng.gen_range(1..=12);
        let left: Vec<i64> = (0..order).map(|_| rng.gen_range(-4..=4)).collect();
        let right: Vec<i64> = (0..order).map(|_| rng.gen_range(-4..=4)).collect();
        let a = Circulant::from_integers(&left).expect("nonempty");
        let b = Circulant::from_integers(&right).expect("nonempty");
        let product_then_reduce =
            reduce_mod2(&a.multiply(&b).expect("same order")).expect("integral");
        let reduce_then_product = f2_multiply(
            &reduce_mod2(&a).expect("integral"),
            &reduce_mod2(&b).expect("integral"),
        )
        .expect("same order");
        check.verify(product_then_reduce == reduce_then_product, || {
            format!("mod-2 functoriality at order {order}")
        });
    }
    check.finish("f2_cross", "reducing mod 2 commutes with circulant multiplication")
}

fn suite_hamming_metric(seed: u64) -> SuiteResult {
    let mut check = Check::new();
    let mut rng = rng_for(seed, 18);
    for _ in 0..400 {
        let m = rng.gen_range(1..=16usize);
        let mask = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
        let x = rng.gen::<u32>() & mask;
        let y = rng.gen::<u32>() & mask;
        let z = rng.gen::<u32>() & mask;
        check.verify(hamming(x, x, m) == 0, || format!("d(x,x) at length {m}"));
        check.verify(hamming(x, y, m) == hamming(y, x, m), || format!("symmetry at length {m}"));
        check.verify(
            hamming(x, z, m) <= hamming(x, y, m) + hamming(y, z, m),
            || format!("triangle at length {m}"),
        );
        check.verify(
            hamming(x ^ z, y ^ z, m) == hamming(x, y, m),
            || format!("translation invariance at length {m}"),
        );
        check.verify(hamming(x, 0, m) == (x & mask).count_ones(), || format!("weight at length {m}"));
    }
    check.finish("hamming_metric", "Hamming distance is a translation-invariant metric given by the weight")
}

fn suite_decompose_interleave(seed: u64) -> SuiteResult {
    let mut check = Check::new();
    for n in [4usize, 6, 8, 10] {
        for index in 0..1u64 << n {
            let row = SignRow::from_index(n, index);
            let (odd, even) = split(&row).expect("even length");
            check.verify(
                interleave(&odd, &even).expect("same length") == row,
                || format!("split/interleave identity on {row}"),
            );
        }
    }
    let mut rng = rng_for(seed, 19);
    for _ in 0..300 {
        let half = rng.gen_range(2..=8);
        let odd = random_sign_row(&mut rng, half);
        let even = random_sign_row(&mut rng, half);
        let row = interleave(&odd, &even).expect("same length");
        check.verify(split(&row).expect("even length") == (odd.clone(), even.clone()), || {
            format!("interleave/split identity on {row}")
        });
    }
    for _ in 0..150 {
        let n = 2 * rng.gen_range(2..=5);
        let row = random_sign_row(&mut rng, n);
        let d = decompose(&row).expect("even length");
        let sum = d.k1.add(&d.k2).expect("same order");
        let difference = d.k1.sub(&d.k2).expect("same order");
        check.verify(sum == d.e1, || format!("K1+K2 on {row}"));
        check.verify(difference == d.e2, || format!("K1−K2 on {row}"));
        let (odd, even) = split(&row).expect("even length");
        check.verify(
            d.lambda1 == odd.sum() && d.lambda2 == even.sum(),
            || format!("block sums on {row}"),
        );
        check.verify(
            d.g1 == d.e1.gram() && d.g2 == d.e2.gram(),
            || format!("Gram blocks on {row}"),
        );
    }
    check.finish(
        "decompose_interleave",
        "splitting and interleaving are inverse, and the half-sum pair reassembles both blocks",
    )
}

fn suite_search_oracle(_seed: u64) -> SuiteResult {
    let mut check = Check::new();
    for order in [1usize, 2, 4, 6, 8, 10, 12] {
        let report = &full_search(&SearchConfig::new(vec![order], SearchMode::Full))
            .expect("orders within cap")[0];
        let mut reference = brute_force_hadamard_rows(order).expect("order within cap");
        reference.sort();
        check.verify(report.hits == reference, || format!("hit list at order {order}"));
    }
    check.finish(
        "search_oracle",
        "the pruned search returns exactly the brute-force hit lists for all orders ≤ 12",
    )
}

type SuiteFn = fn(u64) -> SuiteResult;

const SUITES: [(&str, SuiteFn); 20] = [
    ("coefficient_trichotomy", suite_coefficient_trichotomy),
    ("conditions_n4", suite_conditions_n4),
    ("consecutive_rows", suite_consecutive_rows),
    ("decompose_interleave", suite_decompose_interleave),
    ("eigenvector_row_sum", suite_eigenvector_row_sum),
    ("f2_cross", suite_f2_cross),
    ("first_equals_third", suite_first_equals_third),
    ("graphr", suite_graphr),
    ("hamming_metric", suite_hamming_metric),
    ("macwilliams", suite_macwilliams),
    ("misscase", suite_misscase),
    ("monochromatic", suite_monochromatic),
    ("paf_spectrum", suite_paf_spectrum),
    ("plotkin", suite_plotkin),
    ("projection_mod2", suite_projection_mod2),
    ("rank1_structure", suite_rank1_structure),
    ("rank2_coefficients", suite_rank2_coefficients),
    ("rank_gram", suite_rank_gram),
    ("regular", suite_regular),
    ("search_oracle", suite_search_oracle),
];

/// Names of all suites, sorted.
pub fn available() -> Vec<&'static str> {
    SUITES.iter().map(|(name, _)| *name).collect()
}

/// Runs one suite by name. Unknown names list the valid ones.
pub fn run_suite(name: &str, seed: u64) -> Result<SuiteResult> {
    match SUITES.iter().find(|(candidate, _)| *candidate == name) {
        Some((_, suite)) => Ok(suite(seed)),
        None => Err(Error::InvalidArgument(format!(
            "unknown suite '{name}'; available: {}",
            available().join(", ")
        ))),
    }
}

/// Runs every suite in name order.
pub fn run_all(seed: u64) -> Vec<SuiteResult> {
    SUITES.iter().map(|(_, suite)| suite(seed)).collect()
}
