//! Exhaustive enumeration of magmas of a fixed order.
//!
//! Tables are visited as base-`n` numerals over the flattened row-major
//! table, most significant digit first, in ascending order. A scan is split
//! into `shards` contiguous index ranges; each range is further cut into
//! fixed-size chunks that run on the rayon pool. Every partial result is a
//! count plus a set of canonical forms, so the merge is associative and the
//! report does not depend on scheduling or on the shard count.

use std::collections::HashSet;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};
use std::time::Instant;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{MagmaError, Result};
use crate::magma::Magma;
use crate::morphisms::canonical_form;

/// Largest order scanned in full without an explicit long-run flag.
pub const FULL_SCAN_MAX_ORDER: usize = 3;
/// Largest order the full scan supports at all (`4^16` tables).
pub const FULL_SCAN_LONG_RUN_ORDER: usize = 4;
/// Largest order for the right-entire restricted scan without the flag.
pub const RESTRICTED_MAX_ORDER: usize = 4;
/// Largest order the restricted scan supports at all (`(5!)^5` tables).
pub const RESTRICTED_LONG_RUN_ORDER: usize = 5;

const CHUNK: u64 = 1 << 20;

/// Which tables a census visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// All `n^(n^2)` tables.
    All,
    /// Only tables whose every column is a permutation: `(n!)^n` tables.
    RightEntire,
}

impl Family {
    pub fn size(self, order: usize) -> u64 {
        match self {
            Family::All => table_count(order),
            Family::RightEntire => right_entire_count(order),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Family::All => "all",
            Family::RightEntire => "right-entire",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Progress {
    pub scanned: u64,
    pub total: u64,
}

pub type ProgressFn = dyn Fn(Progress) + Send + Sync;

#[derive(Clone)]
pub struct CensusOptions {
    pub up_to_iso: bool,
    pub shards: usize,
    pub allow_long_run: bool,
    pub progress: Option<Arc<ProgressFn>>,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            up_to_iso: false,
            shards: rayon::current_num_threads().max(1),
            allow_long_run: false,
            progress: None,
        }
    }
}

impl CensusOptions {
    pub fn up_to_iso(mut self, on: bool) -> Self {
        self.up_to_iso = on;
        self
    }

    pub fn shards(mut self, shards: usize) -> Self {
        self.shards = shards;
        self
    }

    pub fn allow_long_run(mut self, on: bool) -> Self {
        self.allow_long_run = on;
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub order: usize,
    pub filter: String,
    pub family: &'static str,
    pub total: u64,
    pub matches: u64,
    pub matches_up_to_iso: Option<u64>,
    /// First matching table in enumeration order.
    pub first_match: Option<Magma>,
    pub shards: usize,
    pub elapsed_ms: u64,
}

impl CensusReport {
    /// Equality of everything except timing and shard count.
    pub fn same_counts(&self, other: &CensusReport) -> bool {
        (self.order, &self.filter, self.total, self.matches, self.matches_up_to_iso, &self.first_match)
            == (other.order, &other.filter, other.total, other.matches, other.matches_up_to_iso, &other.first_match)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// `n^(n^2)`, saturating for orders whose count overflows.
pub fn table_count(n: usize) -> u64 {
    (n as u64).checked_pow((n * n) as u32).unwrap_or(u64::MAX)
}

/// `(n!)^n`, the number of tables with every column a permutation.
pub fn right_entire_count(n: usize) -> u64 {
    let fact: u64 = (1..=n as u64).product();
    fact.checked_pow(n as u32).unwrap_or(u64::MAX)
}

/// Advances `digits` as a big-endian base-`base` numeral. Returns `false`
/// after wrapping around from the largest numeral to zero.
#[inline]
pub(crate) fn odometer_step(digits: &mut [u8], base: u8) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// The table with census index `index` at order `n`.
pub fn magma_from_index(n: usize, index: u64) -> Magma {
    let mut digits = vec![0u8; n * n];
    let mut rest = index;
    for d in digits.iter_mut().rev() {
        *d = (rest % n as u64) as u8;
        rest /= n as u64;
    }
    Magma::from_flat_unchecked(n, digits)
}

/// Every magma of order `n` in census order.
pub fn all_magmas(n: usize) -> impl Iterator<Item = Magma> {
    (0..table_count(n)).map(move |i| magma_from_index(n, i))
}

/// Every magma of order `n` in census order, as a parallel iterator.
pub fn all_magmas_par(n: usize) -> impl ParallelIterator<Item = Magma> {
    (0..table_count(n)).into_par_iter().map(move |i| magma_from_index(n, i))
}

fn column_permutations(n: usize) -> &'static [Vec<u8>] {
    static CACHE: OnceLock<Vec<Vec<Vec<u8>>>> = OnceLock::new();
    let cache =
        CACHE.get_or_init(|| (0..=RESTRICTED_LONG_RUN_ORDER).map(|k| (0..k as u8).permutations(k).collect()).collect());
    &cache[n]
}

fn right_entire_digits(n: usize, index: u64) -> Vec<usize> {
    let base = column_permutations(n).len() as u64;
    let mut digits = vec![0usize; n];
    let mut rest = index;
    for d in digits.iter_mut().rev() {
        *d = (rest % base) as usize;
        rest /= base;
    }
    digits
}

fn write_column(table: &mut [u8], n: usize, col: usize, perm: &[u8]) {
    for (l, &v) in perm.iter().enumerate() {
        table[l * n + col] = v;
    }
}

/// The right-entire table with restricted index `index`: column `r` is the
/// `d_r`-th permutation in lexicographic order, with `d_0` most significant.
pub fn right_entire_from_index(n: usize, index: u64) -> Magma {
    let perms = column_permutations(n);
    let mut table = vec![0u8; n * n];
    for (col, d) in right_entire_digits(n, index).into_iter().enumerate() {
        write_column(&mut table, n, col, &perms[d]);
    }
    Magma::from_flat_unchecked(n, table)
}

pub fn right_entire_magmas(n: usize) -> impl Iterator<Item = Magma> {
    (0..right_entire_count(n)).map(move |i| right_entire_from_index(n, i))
}

pub fn right_entire_magmas_par(n: usize) -> impl ParallelIterator<Item = Magma> {
    (0..right_entire_count(n)).into_par_iter().map(move |i| right_entire_from_index(n, i))
}

#[derive(Default)]
struct Partial {
    matches: u64,
    first_match: Option<u64>,
    canon: HashSet<Vec<u8>>,
}

impl Partial {
    fn merge(mut self, mut other: Partial) -> Partial {
        self.matches += other.matches;
        self.first_match = match (self.first_match, other.first_match) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        if self.canon.len() < other.canon.len() {
            std::mem::swap(&mut self.canon, &mut other.canon);
        }
        self.canon.extend(other.canon);
        self
    }

    fn record(&mut self, index: u64, m: &Magma, up_to_iso: bool) {
        self.matches += 1;
        self.first_match.get_or_insert(index);
        if up_to_iso {
            let form = canonical_form(m).expect("census orders are within canonical bounds");
            self.canon.insert(form.table);
        }
    }
}

fn scan_all<F>(n: usize, start: u64, end: u64, filter: &F, up_to_iso: bool) -> Partial
where
    F: Fn(&Magma) -> bool + Sync,
{
    let mut partial = Partial::default();
    let mut m = magma_from_index(n, start);
    for index in start..end {
        if filter(&m) {
            partial.record(index, &m, up_to_iso);
        }
        odometer_step(m.table_mut(), n as u8);
    }
    partial
}

fn scan_right_entire<F>(n: usize, start: u64, end: u64, filter: &F, up_to_iso: bool) -> Partial
where
    F: Fn(&Magma) -> bool + Sync,
{
    let perms = column_permutations(n);
    let base = perms.len();
    let mut partial = Partial::default();
    let mut digits = right_entire_digits(n, start);
    let mut m = right_entire_from_index(n, start);
    for index in start..end {
        if filter(&m) {
            partial.record(index, &m, up_to_iso);
        }
        for col in (0..n).rev() {
            digits[col] += 1;
            if digits[col] < base {
                write_column(m.table_mut(), n, col, &perms[digits[col]]);
                break;
            }
            digits[col] = 0;
            write_column(m.table_mut(), n, col, &perms[0]);
        }
    }
    partial
}

/// Scans every magma of order `n` and counts those accepted by `filter`.
pub fn enumerate<F>(n: usize, filter_name: &str, filter: F, options: &CensusOptions) -> Result<CensusReport>
where
    F: Fn(&Magma) -> bool + Sync,
{
    check_bounds(n, FULL_SCAN_MAX_ORDER, FULL_SCAN_LONG_RUN_ORDER, options, "full census")?;
    run(n, Family::All, filter_name, &filter, options)
}

/// Scans only the `(n!)^n` tables whose every column is a permutation.
/// Exact for any filter that implies condition (i).
pub fn enumerate_right_entire<F>(
    n: usize,
    filter_name: &str,
    filter: F,
    options: &CensusOptions,
) -> Result<CensusReport>
where
    F: Fn(&Magma) -> bool + Sync,
{
    check_bounds(n, RESTRICTED_MAX_ORDER, RESTRICTED_LONG_RUN_ORDER, options, "right-entire census")?;
    run(n, Family::RightEntire, filter_name, &filter, options)
}

fn check_bounds(
    n: usize,
    default_max: usize,
    long_run_max: usize,
    options: &CensusOptions,
    operation: &'static str,
) -> Result<()> {
    if n == 0 {
        return Err(MagmaError::EmptyOrder);
    }
    if n > long_run_max {
        return Err(MagmaError::UnsupportedOrder { operation, order: n, max: long_run_max });
    }
    if n > default_max && !options.allow_long_run {
        return Err(MagmaError::LongRunRequired(format!(
            "{operation} at order {n} needs the long-run flag (orders up to {default_max} run by default)"
        )));
    }
    Ok(())
}

fn run<F>(n: usize, family: Family, filter_name: &str, filter: &F, options: &CensusOptions) -> Result<CensusReport>
where
    F: Fn(&Magma) -> bool + Sync,
{
    let started = Instant::now();
    let total = family.size(n);
    let shards = options.shards.max(1);
    let mut chunks = Vec::new();
    for shard in 0..shards as u64 {
        let lo = (total as u128 * shard as u128 / shards as u128) as u64;
        let hi = (total as u128 * (shard + 1) as u128 / shards as u128) as u64;
        let mut start = lo;
        while start < hi {
            let end = (start + CHUNK).min(hi);
            chunks.push((shard, start, end));
            start = end;
        }
    }
    let scanned = AtomicU64::new(0);
    let partials: Vec<(u64, Partial)> = chunks
        .par_iter()
        .map(|&(shard, start, end)| {
            let partial = match family {
                Family::All => scan_all(n, start, end, filter, options.up_to_iso),
                Family::RightEntire => scan_right_entire(n, start, end, filter, options.up_to_iso),
            };
            let done = scanned.fetch_add(end - start, Ordering::Relaxed) + (end - start);
            if let Some(progress) = &options.progress {
                progress(Progress { scanned: done, total });
            }
            (shard, partial)
        })
        .collect();

    // per-shard accumulators first, then one merge across shards
    let mut per_shard: Vec<Partial> = (0..shards).map(|_| Partial::default()).collect();
    for (shard, partial) in partials {
        let slot = &mut per_shard[shard as usize];
        *slot = std::mem::take(slot).merge(partial);
    }
    let merged = per_shard.into_iter().fold(Partial::default(), Partial::merge);

    let first_match = merged.first_match.map(|i| match family {
        Family::All => magma_from_index(n, i),
        Family::RightEntire => right_entire_from_index(n, i),
    });
    Ok(CensusReport {
        order: n,
        filter: filter_name.to_owned(),
        family: family.name(),
        total,
        matches: merged.matches,
        matches_up_to_iso: options.up_to_iso.then_some(merged.canon.len() as u64),
        first_match,
        shards,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::properties::*;

    #[test]
    fn odometer_wraps() {
        let mut d = [0u8, 1];
        assert!(odometer_step(&mut d, 2));
        assert_eq!(d, [1, 0]);
        assert!(odometer_step(&mut d, 2));
        assert!(!odometer_step(&mut d, 2));
        assert_eq!(d, [0, 0]);
    }

    #[test]
    fn index_decoding_matches_odometer() {
        let mut m = magma_from_index(2, 0);
        for i in 0..16 {
            assert_eq!(m, magma_from_index(2, i));
            odometer_step(m.table_mut(), 2);
        }
        assert_eq!(magma_from_index(2, 1).flat(), &[0, 0, 0, 1]);
    }

    #[test]
    fn restricted_index_decoding_matches_scan() {
        let from_index: Vec<Magma> = right_entire_magmas(3).collect();
        let mut seen = Vec::new();
        let opts = CensusOptions::default().shards(1);
        let collected = std::sync::Mutex::new(&mut seen);
        enumerate_right_entire(
            3,
            "always",
            |m| {
                collected.lock().unwrap().push(m.clone());
                true
            },
            &opts,
        )
        .unwrap();
        assert_eq!(seen, from_index);
        assert!(from_index.iter().all(condition_i_holds));
    }

    #[test]
    fn small_counts() {
        let opts = CensusOptions::default();
        assert_eq!(enumerate(2, "always", |_| true, &opts).unwrap().total, 16);
        let re = enumerate(2, "right-entire", condition_i_holds, &opts).unwrap();
        assert_eq!(re.matches, 4);
        assert_eq!(table_count(3), 19683);
        assert_eq!(right_entire_count(4), 331_776);
    }

    #[test]
    fn bounds() {
        let opts = CensusOptions::default();
        assert!(matches!(enumerate(4, "always", |_| true, &opts), Err(MagmaError::LongRunRequired(_))));
        assert!(matches!(enumerate(5, "always", |_| true, &opts), Err(MagmaError::UnsupportedOrder { .. })));
        assert!(matches!(enumerate_right_entire(5, "always", |_| true, &opts), Err(MagmaError::LongRunRequired(_))));
        assert!(matches!(
            enumerate_right_entire(6, "always", |_| true, &opts.clone().allow_long_run(true)),
            Err(MagmaError::UnsupportedOrder { .. })
        ));
        assert_eq!(enumerate(0, "always", |_| true, &opts).unwrap_err(), MagmaError::EmptyOrder);
    }

    #[test]
    fn first_match_is_first_in_order() {
        let opts = CensusOptions::default().shards(8);
        let r = enumerate(2, "group", |m| as_group(m).is_some(), &opts).unwrap();
        // XOR [0,1,1,0] has index 6, XNOR [1,0,0,1] has index 9
        assert_eq!(r.matches, 2);
        assert_eq!(r.first_match.unwrap().flat(), &[0, 1, 1, 0]);
    }
}
