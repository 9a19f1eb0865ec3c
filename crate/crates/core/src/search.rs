//! Exhaustive and structure-constrained searches for circulant Hadamard rows.
//!
//! Three modes share one report shape. `Full` walks the complete ±1 prefix
//! tree of a given order with feasibility pruning on partial row sums and on
//! partial autocorrelation, and optionally collapses the rotation/negation
//! symmetry. The constrained modes fix one block of the odd/even interleaving
//! to a structured family (rank-1 patterns, or precomputed rank-2 rows) and
//! enumerate the other side.
//!
//! Every run is deterministic: hit lists come back sorted, and the counters
//! in a report are identical for every `worker_count`, because the work split
//! only moves where a node is visited, never whether it is visited.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::circulant::{is_circulant_hadamard, Circulant, SignRow};
use crate::decomposition::interleave;
use crate::error::{Error, Result};
use crate::rank::rank;

/// Largest order accepted by the full tree walk.
pub const FULL_MAX_ORDER: usize = 32;
/// Largest order accepted by the constrained campaigns.
pub const CONSTRAINED_MAX_ORDER: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    Full,
    Rank1Constrained,
    Rank2Constrained,
}

impl SearchMode {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchMode::Full => "full",
            SearchMode::Rank1Constrained => "rank1_constrained",
            SearchMode::Rank2Constrained => "rank2_constrained",
        }
    }
}

impl fmt::Display for SearchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Run parameters. `new` picks the defaults used by the command-line tool:
/// both prune rules on, symmetry reduction off, one worker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub orders: Vec<usize>,
    pub mode: SearchMode,
    pub symmetry_reduction: bool,
    pub prune_rowsum: bool,
    pub prune_paf_prefix: bool,
    pub worker_count: usize,
}

impl SearchConfig {
    pub fn new(orders: Vec<usize>, mode: SearchMode) -> Self {
        SearchConfig {
            orders,
            mode,
            symmetry_reduction: false,
            prune_rowsum: true,
            prune_paf_prefix: true,
            worker_count: 1,
        }
    }

    /// Checks every order against the caps for the configured mode, so a run
    /// either starts on all orders or produces nothing.
    pub fn validate(&self) -> Result<()> {
        if self.worker_count == 0 {
            return Err(Error::InvalidArgument("worker_count must be at least 1".into()));
        }
        for &order in &self.orders {
            match self.mode {
                SearchMode::Full => {
                    if order == 0 {
                        return Err(Error::InvalidArgument("order must be positive".into()));
                    }
                    if order > FULL_MAX_ORDER {
                        return Err(Error::ResourceLimit(format!(
                            "full search accepts orders up to {FULL_MAX_ORDER}, got {order}"
                        )));
                    }
                }
                SearchMode::Rank1Constrained | SearchMode::Rank2Constrained => {
                    if order < 4 || order % 2 != 0 {
                        return Err(Error::InvalidArgument(format!(
                            "constrained searches need an even order of at least 4, got {order}"
                        )));
                    }
                    if order > CONSTRAINED_MAX_ORDER {
                        return Err(Error::ResourceLimit(format!(
                            "constrained searches accept orders up to {CONSTRAINED_MAX_ORDER}, got {order}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Outcome of one order under one mode. `hits` and `canonical_hits` are
/// sorted; `canonical_hits` holds one representative per rotation/negation
/// class among the hits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub order: usize,
    pub mode: SearchMode,
    pub candidates_examined: u64,
    pub hits: Vec<SignRow>,
    pub canonical_hits: Vec<SignRow>,
    pub pruned_by_rule: BTreeMap<String, u64>,
    pub elapsed_ms: u64,
}

/// Least row in the rotation/negation orbit, comparing entries left to right
/// with −1 before 1.
pub fn canonicalize(row: &SignRow) -> SignRow {
    let mut best = row.clone();
    for base in [row.clone(), row.negated()] {
        for shift in 0..base.len() {
            let image = base.rotate_right(shift);
            if image < best {
                best = image;
            }
        }
    }
    best
}

fn isqrt_exact(n: u64) -> Option<u64> {
    let guess = (n as f64).sqrt() as u64;
    (guess.saturating_sub(2)..=guess + 2).find(|r| r * r == n)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct PruneTally {
    rowsum: u64,
    paf_prefix: u64,
    noncanonical: u64,
}

impl PruneTally {
    fn add(&mut self, other: &PruneTally) {
        self.rowsum += other.rowsum;
        self.paf_prefix += other.paf_prefix;
        self.noncanonical += other.noncanonical;
    }
}

/// Depth-first state for the full tree walk. Entries are assigned left to
/// right, +1 branch first; the partial row sum and the per-shift partial
/// autocorrelation sums are maintained incrementally with exact undo.
struct Dfs {
    n: usize,
    entries: Vec<i8>,
    targets: Vec<i64>,
    symmetry: bool,
    prune_rowsum: bool,
    prune_paf: bool,
    partial_sum: i64,
    shift_sums: Vec<i64>,
    shift_done: Vec<u32>,
    tally: PruneTally,
    examined: u64,
    hits: Vec<SignRow>,
}

impl Dfs {
    fn new(n: usize, config: &SearchConfig) -> Self {
        let targets = match isqrt_exact(n as u64) {
            Some(r) => vec![r as i64, -(r as i64)],
            None => Vec::new(),
        };
        Dfs {
            n,
            entries: vec![0; n],
            targets,
            symmetry: config.symmetry_reduction,
            prune_rowsum: config.prune_rowsum,
            prune_paf: config.prune_paf_prefix,
            partial_sum: 0,
            shift_sums: vec![0; n / 2],
            shift_done: vec![0; n / 2],
            tally: PruneTally::default(),
            examined: 0,
            hits: Vec::new(),
        }
    }

    fn assign(&mut self, position: usize, value: i8) {
        self.entries[position] = value;
        self.partial_sum += i64::from(value);
        for ti in 0..self.n / 2 {
            let t = ti + 1;
            let ahead = (position + t) % self.n;
            if ahead < position {
                self.shift_sums[ti] += i64::from(value * self.entries[ahead]);
                self.shift_done[ti] += 1;
            }
            let behind = (position + self.n - t) % self.n;
            if behind < position {
                self.shift_sums[ti] += i64::from(value * self.entries[behind]);
                self.shift_done[ti] += 1;
            }
        }
    }

    fn unassign(&mut self, position: usize, value: i8) {
        for ti in 0..self.n / 2 {
            let t = ti + 1;
            let ahead = (position + t) % self.n;
            if ahead < position {
                self.shift_sums[ti] -= i64::from(value * self.entries[ahead]);
                self.shift_done[ti] -= 1;
            }
            let behind = (position + self.n - t) % self.n;
            if behind < position {
                self.shift_sums[ti] -= i64::from(value * self.entries[behind]);
                self.shift_done[ti] -= 1;
            }
        }
        self.partial_sum -= i64::from(value);
        self.entries[position] = 0;
    }

    /// Feasibility of the current prefix of `assigned` entries. Only called
    /// for proper prefixes; a completed assignment goes straight to the full
    /// verifier. Both rules are conservative: a prefix is cut only when no
    /// completion can reach a valid row.
    fn passes(&mut self, assigned: usize) -> bool {
        if self.prune_rowsum {
            let remaining = (self.n - assigned) as i64;
            let feasible = self.targets.iter().any(|&target| {
                let gap = (target - self.partial_sum).abs();
                gap <= remaining && (remaining - gap) % 2 == 0
            });
            if !feasible {
                self.tally.rowsum += 1;
                return false;
            }
        }
        if self.prune_paf {
            for ti in 0..self.n / 2 {
                let unresolved = self.n as i64 - i64::from(self.shift_done[ti]);
                if self.shift_sums[ti].abs() > unresolved {
                    self.tally.paf_prefix += 1;
                    return false;
                }
            }
        }
        true
    }

    fn leaf(&mut self) {
        self.examined += 1;
        let row = SignRow::new(self.entries.clone()).expect("entries are ±1 at a leaf");
        if is_circulant_hadamard(&row) {
            if self.symmetry && canonicalize(&row) != row {
                self.tally.noncanonical += 1;
            } else {
                self.hits.push(row);
            }
        }
    }

    fn walk(&mut self, depth: usize) {
        if depth == self.n {
            self.leaf();
            return;
        }
        for value in [1i8, -1] {
            if depth == 0 && self.symmetry && value == 1 {
                continue;
            }
            self.assign(depth, value);
            if depth + 1 == self.n || self.passes(depth + 1) {
                self.walk(depth + 1);
            }
            self.unassign(depth, value);
        }
    }

    /// Enumerates surviving prefixes of length `dispatch` instead of
    /// recursing to leaves; prune events on the way are tallied here exactly
    /// once, so the merged totals do not depend on the dispatch depth.
    fn collect_prefixes(&mut self, depth: usize, dispatch: usize, out: &mut Vec<Vec<i8>>) {
        if depth == dispatch {
            out.push(self.entries[..dispatch].to_vec());
            return;
        }
        for value in [1i8, -1] {
            if depth == 0 && self.symmetry && value == 1 {
                continue;
            }
            self.assign(depth, value);
            if depth + 1 == self.n || self.passes(depth + 1) {
                self.collect_prefixes(depth + 1, dispatch, out);
            }
            self.unassign(depth, value);
        }
    }
}

fn ceil_log2(value: usize) -> usize {
    value.next_power_of_two().trailing_zeros() as usize
}

fn full_search_one(order: usize, config: &SearchConfig) -> SearchReport {
    let start = Instant::now();
    let fixed = usize::from(config.symmetry_reduction);
    let dispatch = (fixed + ceil_log2(config.worker_count)).min(order);

    let mut coordinator = Dfs::new(order, config);
    let mut prefixes = Vec::new();
    coordinator.collect_prefixes(0, dispatch, &mut prefixes);

    let mut assignments: Vec<Vec<Vec<i8>>> = vec![Vec::new(); config.worker_count];
    for (index, prefix) in prefixes.into_iter().enumerate() {
        assignments[index % config.worker_count].push(prefix);
    }

    let worker_results: Vec<(u64, Vec<SignRow>, PruneTally)> = std::thread::scope(|scope| {
        let handles: Vec<_> = assignments
            .iter()
            .map(|work| {
                scope.spawn(move || {
                    let mut dfs = Dfs::new(order, config);
                    for prefix in work {
                        for (position, &value) in prefix.iter().enumerate() {
                            dfs.assign(position, value);
                        }
                        dfs.walk(prefix.len());
                        for (position, &value) in prefix.iter().enumerate().rev() {
                            dfs.unassign(position, value);
                        }
                    }
                    (dfs.examined, dfs.hits, dfs.tally)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });

    let mut examined = coordinator.examined;
    let mut tally = coordinator.tally;
    let mut hits = coordinator.hits;
    for (worker_examined, worker_hits, worker_tally) in worker_results {
        examined += worker_examined;
        tally.add(&worker_tally);
        hits.extend(worker_hits);
    }

    let mut pruned_by_rule = BTreeMap::new();
    if config.prune_rowsum {
        pruned_by_rule.insert("rowsum".to_string(), tally.rowsum);
    }
    if config.prune_paf_prefix {
        pruned_by_rule.insert("paf_prefix".to_string(), tally.paf_prefix);
    }
    if config.symmetry_reduction {
        pruned_by_rule.insert("noncanonical_hit".to_string(), tally.noncanonical);
    }

    finish_report(order, SearchMode::Full, examined, hits, pruned_by_rule, start)
}

fn finish_report(
    order: usize,
    mode: SearchMode,
    candidates_examined: u64,
    mut hits: Vec<SignRow>,
    pruned_by_rule: BTreeMap<String, u64>,
    start: Instant,
) -> SearchReport {
    hits.sort();
    debug_assert!(hits.iter().all(is_circulant_hadamard));
    let canonical: BTreeSet<SignRow> = hits.iter().map(canonicalize).collect();
    SearchReport {
        order,
        mode,
        candidates_examined,
        hits,
        canonical_hits: canonical.into_iter().collect(),
        pruned_by_rule,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

/// Complete ±1 enumeration with pruning, one report per requested order.
pub fn full_search(config: &SearchConfig) -> Result<Vec<SearchReport>> {
    let config = SearchConfig { mode: SearchMode::Full, ..config.clone() };
    config.validate()?;
    Ok(config.orders.iter().map(|&order| full_search_one(order, &config)).collect())
}

/// The rank-1 rows of a given length: the two constant rows, plus the two
/// alternating rows when the length is even.
fn rank1_patterns(len: usize) -> Vec<SignRow> {
    let mut patterns = vec![
        SignRow::new(vec![1; len]).expect("constant row"),
        SignRow::new(vec![-1; len]).expect("constant row"),
    ];
    if len % 2 == 0 {
        let alternating: Vec<i8> = (0..len).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect();
        let flipped: Vec<i8> = alternating.iter().map(|v| -v).collect();
        patterns.push(SignRow::new(alternating).expect("alternating row"));
        patterns.push(SignRow::new(flipped).expect("alternating row"));
    }
    patterns
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FixedBlock {
    Odd,
    Even,
}

fn rank1_campaign_one(order: usize, fixed: FixedBlock) -> SearchReport {
    let start = Instant::now();
    let half = order / 2;
    let mut examined = 0u64;
    let mut hits = Vec::new();
    for pattern in rank1_patterns(half) {
        for index in 0..1u64 << half {
            let free = SignRow::from_index(half, index);
            let row = match fixed {
                FixedBlock::Odd => interleave(&pattern, &free),
                FixedBlock::Even => interleave(&free, &pattern),
            }
            .expect("blocks share a length");
            examined += 1;
            if is_circulant_hadamard(&row) {
                hits.push(row);
            }
        }
    }
    finish_report(order, SearchMode::Rank1Constrained, examined, hits, BTreeMap::new(), start)
}

/// Fixes the odd-position block to each rank-1 pattern and enumerates the
/// even-position block exhaustively.
pub fn rank1_campaign(config: &SearchConfig) -> Result<Vec<SearchReport>> {
    let config = SearchConfig { mode: SearchMode::Rank1Constrained, ..config.clone() };
    config.validate()?;
    Ok(config.orders.iter().map(|&order| rank1_campaign_one(order, FixedBlock::Odd)).collect())
}

/// Same campaign with the blocks swapped: the even-position block is fixed
/// and the odd-position block runs free. Relabeling the two blocks is a
/// symmetry of the problem, so the outcome matches [`rank1_campaign`].
pub fn rank1_campaign_mirrored(config: &SearchConfig) -> Result<Vec<SearchReport>> {
    let config = SearchConfig { mode: SearchMode::Rank1Constrained, ..config.clone() };
    config.validate()?;
    Ok(config.orders.iter().map(|&order| rank1_campaign_one(order, FixedBlock::Even)).collect())
}

fn rank2_campaign_one(order: usize) -> SearchReport {
    let start = Instant::now();
    let half = order / 2;
    let mut blocks = Vec::new();
    for index in 0..1u64 << half {
        let row = SignRow::from_index(half, index);
        if rank(&Circulant::from_sign_row(&row)).rank == 2 {
            blocks.push(row);
        }
    }
    let mut examined = 0u64;
    let mut hits = Vec::new();
    for odd in &blocks {
        for even in &blocks {
            let row = interleave(odd, even).expect("blocks share a length");
            examined += 1;
            if is_circulant_hadamard(&row) {
                hits.push(row);
            }
        }
    }
    finish_report(order, SearchMode::Rank2Constrained, examined, hits, BTreeMap::new(), start)
}

/// Precomputes every rank-2 ±1 row of length n/2 by exact rank, then tests
/// all ordered block pairs. Orders whose half length admits no rank-2 row
/// report zero candidates.
pub fn rank2_campaign(config: &SearchConfig) -> Result<Vec<SearchReport>> {
    let config = SearchConfig { mode: SearchMode::Rank2Constrained, ..config.clone() };
    config.validate()?;
    Ok(config.orders.iter().map(|&order| rank2_campaign_one(order)).collect())
}

/// Dispatches on `config.mode`. All orders are validated before any search
/// starts, so an out-of-cap order yields an error and no partial results.
pub fn run(config: &SearchConfig) -> Result<Vec<SearchReport>> {
    config.validate()?;
    match config.mode {
        SearchMode::Full => full_search(config),
        SearchMode::Rank1Constrained => rank1_campaign(config),
        SearchMode::Rank2Constrained => rank2_campaign(config),
    }
}

/// One line per report: `order,mode,examined,hits,elapsed_ms`, with a header.
pub fn csv_summary(reports: &[SearchReport]) -> String {
    let mut out = String::from("order,mode,examined,hits,elapsed_ms\n");
    for report in reports {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            report.order,
            report.mode,
            report.candidates_examined,
            report.hits.len(),
            report.elapsed_ms
        ));
    }
    out
}
