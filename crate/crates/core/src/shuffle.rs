//! Enumeration and counting of two- and three-block shuffles and their
//! mixable refinements.
//!
//! A two-block shuffle of type `(m, n)` is a permutation of `{1..m+n}` that
//! preserves the internal order of `{1..m}` and of `{m+1..m+n}`. A *mixable*
//! shuffle additionally selects a set of admissible adjacent positions where
//! the two blocks merge. Enumeration order is deterministic: shuffles sorted
//! lexicographically by one-line form, merge sets sorted as position lists.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use itertools::Itertools;
use num::bigint::BigInt;
use num::Zero;

use crate::ring::{binomial_int, binomial_signed};

/// A permutation in one-line form; `images[k-1]` is the image of `k`
/// (positions and values are 1-based).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn new(images: Vec<usize>) -> Option<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return None;
            }
            seen[v - 1] = true;
        }
        Some(Perm { images })
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// The image of position `k` (1-based).
    pub fn image(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    /// The position mapped to value `v` (1-based).
    pub fn preimage(&self, v: usize) -> usize {
        self.images.iter().position(|&x| x == v).expect("valid perm") + 1
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }
}

/// A two-block shuffle: position `k` of the output receives the element with
/// original index `perm.image(k)`, indices `1..=m` from the first block and
/// `m+1..=m+n` from the second.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PairShuffle {
    m: usize,
    n: usize,
    perm: Perm,
}

impl PairShuffle {
    pub fn new(m: usize, n: usize, perm: Perm) -> Option<PairShuffle> {
        if perm.size() != m + n {
            return None;
        }
        let s = PairShuffle { m, n, perm };
        if s.block_orders_preserved() {
            Some(s)
        } else {
            None
        }
    }

    fn block_orders_preserved(&self) -> bool {
        let in_order = |lo: usize, hi: usize| {
            (lo..hi).all(|v| self.perm.preimage(v) < self.perm.preimage(v + 1))
        };
        (self.m < 2 || in_order(1, self.m)) && (self.n < 2 || in_order(self.m + 1, self.m + self.n))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    pub fn size(&self) -> usize {
        self.m + self.n
    }
}

/// All `(m, n)`-shuffles, sorted lexicographically by one-line form; there
/// are `binomial(m+n, m)` of them.
pub fn enumerate_pair_shuffles(m: usize, n: usize) -> Vec<PairShuffle> {
    let total = m + n;
    let mut out = Vec::new();
    for first_positions in (1..=total).combinations(m) {
        let mut images = vec![0usize; total];
        for (value, &p) in (1..).zip(first_positions.iter()) {
            images[p - 1] = value;
        }
        let mut next_second = m + 1;
        for slot in images.iter_mut() {
            if *slot == 0 {
                *slot = next_second;
                next_second += 1;
            }
        }
        out.push(PairShuffle {
            m,
            n,
            perm: Perm::new(images).expect("constructed permutation"),
        });
    }
    out.sort();
    out
}

/// The admissible merge positions of a shuffle: all `(k, k+1)` where position
/// `k` holds a first-block element and `k+1` a second-block element.
pub fn admissible_pairs(s: &PairShuffle) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for k in 1..s.size() {
        if s.perm.image(k) <= s.m && s.perm.image(k + 1) > s.m {
            out.push((k, k + 1));
        }
    }
    out
}

/// A shuffle together with a chosen subset of its admissible merge positions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MixablePairShuffle {
    pub shuffle: PairShuffle,
    /// Sorted list of merged positions, each a subset of
    /// `admissible_pairs(&shuffle)`.
    pub merges: Vec<(usize, usize)>,
}

impl MixablePairShuffle {
    /// Output length after merging: `m + n - |merges|`.
    pub fn output_len(&self) -> usize {
        self.shuffle.size() - self.merges.len()
    }

    /// Whether the stored merge positions are sorted and admissible for the
    /// underlying shuffle.
    pub fn is_valid(&self) -> bool {
        let admissible = admissible_pairs(&self.shuffle);
        self.merges.windows(2).all(|w| w[0] < w[1])
            && self.merges.iter().all(|p| admissible.contains(p))
    }
}

/// All mixable `(m, n)`-shuffles in deterministic order.
pub fn enumerate_mixable_pair(m: usize, n: usize) -> Vec<MixablePairShuffle> {
    let mut out = Vec::new();
    for shuffle in enumerate_pair_shuffles(m, n) {
        let admissible = admissible_pairs(&shuffle);
        let mut subsets: Vec<Vec<(usize, usize)>> = (0..1u32 << admissible.len())
            .map(|mask| {
                admissible
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect()
            })
            .collect();
        subsets.sort();
        for merges in subsets {
            out.push(MixablePairShuffle {
                shuffle: shuffle.clone(),
                merges,
            });
        }
    }
    out
}

/// Closed-form count of mixable `(m, n)`-shuffles.
pub fn count_mixable_pair(m: usize, n: usize) -> BigInt {
    let mut total = BigInt::zero();
    for i in 0..=n {
        total += count_mixable_pair_by_merges(m, n, i);
    }
    total
}

/// Closed-form count of mixable `(m, n)`-shuffles with exactly `i` merges.
pub fn count_mixable_pair_by_merges(m: usize, n: usize, i: usize) -> BigInt {
    let (m, n, i) = (m as u64, n as u64, i as u64);
    if i > m + n {
        return BigInt::zero();
    }
    binomial_int(m + n - i, n) * binomial_int(n, i)
}

/// Splits the mixable `(m, n)`-shuffles into the three disjoint classes used
/// by the counting recurrence: first-block element leading (position `(1,2)`
/// unmerged), second-block element leading, and `(1,2)` merged.
pub fn partition_dec(
    m: usize,
    n: usize,
) -> (
    Vec<MixablePairShuffle>,
    Vec<MixablePairShuffle>,
    Vec<MixablePairShuffle>,
) {
    assert!(m >= 1 && n >= 1, "partition requires nonempty blocks");
    let mut first_leads = Vec::new();
    let mut second_leads = Vec::new();
    let mut merged_head = Vec::new();
    for ms in enumerate_mixable_pair(m, n) {
        if ms.merges.contains(&(1, 2)) {
            merged_head.push(ms);
        } else if ms.shuffle.perm.image(1) == 1 {
            first_leads.push(ms);
        } else {
            second_leads.push(ms);
        }
    }
    (first_leads, second_leads, merged_head)
}

/// A three-block shuffle of type `(m, n, l)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TripleShuffle {
    m: usize,
    n: usize,
    l: usize,
    perm: Perm,
}

impl TripleShuffle {
    pub fn new(m: usize, n: usize, l: usize, perm: Perm) -> Option<TripleShuffle> {
        if perm.size() != m + n + l {
            return None;
        }
        let s = TripleShuffle { m, n, l, perm };
        let in_order = |lo: usize, hi: usize| {
            (lo..hi).all(|v| s.perm.preimage(v) < s.perm.preimage(v + 1))
        };
        let ok = (m < 2 || in_order(1, m))
            && (n < 2 || in_order(m + 1, m + n))
            && (l < 2 || in_order(m + n + 1, m + n + l));
        if ok {
            Some(s)
        } else {
            None
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    pub fn size(&self) -> usize {
        self.m + self.n + self.l
    }

    /// Which of the three blocks the element at output position `k` came from
    /// (0, 1 or 2).
    fn block_at(&self, k: usize) -> usize {
        let v = self.perm.image(k);
        if v <= self.m {
            0
        } else if v <= self.m + self.n {
            1
        } else {
            2
        }
    }
}

/// Which pair of blocks an adjacent merge combines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum MergeClass {
    /// First-block element followed by a second-block element.
    FirstSecond,
    /// First-block element followed by a third-block element.
    FirstThird,
    /// Second-block element followed by a third-block element.
    SecondThird,
}

/// One merge entry of a mixable triple shuffle: either two adjacent positions
/// in one of the three pair classes, or three adjacent positions taking one
/// element from each block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MergeEntry {
    Pair { start: usize, class: MergeClass },
    Triple { start: usize },
}

impl MergeEntry {
    pub fn start(&self) -> usize {
        match self {
            MergeEntry::Pair { start, .. } | MergeEntry::Triple { start } => *start,
        }
    }

    /// Number of output positions covered by this entry (2 or 3).
    pub fn width(&self) -> usize {
        match self {
            MergeEntry::Pair { .. } => 2,
            MergeEntry::Triple { .. } => 3,
        }
    }

    /// Contribution to the merge degree: 1 for pairs, 2 for triples.
    pub fn degree(&self) -> usize {
        self.width() - 1
    }

    fn last(&self) -> usize {
        self.start() + self.width() - 1
    }

    fn overlaps(&self, other: &MergeEntry) -> bool {
        self.start() <= other.last() && other.start() <= self.last()
    }

    fn sort_key(&self) -> (usize, usize) {
        (self.start(), self.width())
    }
}

impl PartialOrd for MergeEntry {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MergeEntry {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

/// A triple shuffle with a set of non-overlapping merge entries.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MixableTripleShuffle {
    pub shuffle: TripleShuffle,
    /// Sorted, pairwise non-overlapping merge entries.
    pub merges: Vec<MergeEntry>,
}

impl MixableTripleShuffle {
    /// Merge degree: pairs count once, triples twice.
    pub fn degree(&self) -> usize {
        self.merges.iter().map(MergeEntry::degree).sum()
    }

    /// Output length after merging: `m + n + l - degree`.
    pub fn output_len(&self) -> usize {
        self.shuffle.size() - self.degree()
    }
}

/// All `(m, n, l)`-shuffles sorted lexicographically by one-line form.
pub fn enumerate_triple_shuffles(m: usize, n: usize, l: usize) -> Vec<TripleShuffle> {
    let total = m + n + l;
    let mut out = Vec::new();
    for first_positions in (1..=total).combinations(m) {
        let rest: Vec<usize> = (1..=total)
            .filter(|p| !first_positions.contains(p))
            .collect();
        for second_selector in (0..rest.len()).combinations(n) {
            let mut images = vec![0usize; total];
            for (i, &p) in first_positions.iter().enumerate() {
                images[p - 1] = i + 1;
            }
            for (i, &ri) in second_selector.iter().enumerate() {
                images[rest[ri] - 1] = m + i + 1;
            }
            let mut next_third = m + n + 1;
            for slot in images.iter_mut() {
                if *slot == 0 {
                    *slot = next_third;
                    next_third += 1;
                }
            }
            out.push(TripleShuffle {
                m,
                n,
                l,
                perm: Perm::new(images).expect("constructed permutation"),
            });
        }
    }
    out.sort();
    out
}

/// The merge entries available on a triple shuffle: adjacent positions whose
/// elements come from distinct blocks in increasing block order, plus
/// three-position windows covering all three blocks in order.
pub fn merge_candidates(s: &TripleShuffle) -> Vec<MergeEntry> {
    let size = s.size();
    let mut out = Vec::new();
    for k in 1..size {
        let entry = match (s.block_at(k), s.block_at(k + 1)) {
            (0, 1) => Some(MergeClass::FirstSecond),
            (0, 2) => Some(MergeClass::FirstThird),
            (1, 2) => Some(MergeClass::SecondThird),
            _ => None,
        };
        if let Some(class) = entry {
            out.push(MergeEntry::Pair { start: k, class });
        }
    }
    for k in 1..size.saturating_sub(1) {
        if s.block_at(k) == 0 && s.block_at(k + 1) == 1 && s.block_at(k + 2) == 2 {
            out.push(MergeEntry::Triple { start: k });
        }
    }
    out.sort();
    out
}

fn non_overlapping_subsets(candidates: &[MergeEntry]) -> Vec<Vec<MergeEntry>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn step(
        candidates: &[MergeEntry],
        idx: usize,
        current: &mut Vec<MergeEntry>,
        out: &mut Vec<Vec<MergeEntry>>,
    ) {
        if idx == candidates.len() {
            out.push(current.clone());
            return;
        }
        step(candidates, idx + 1, current, out);
        let entry = candidates[idx];
        if current.iter().all(|e| !e.overlaps(&entry)) {
            current.push(entry);
            step(candidates, idx + 1, current, out);
            current.pop();
        }
    }
    step(candidates, 0, &mut current, &mut out);
    for subset in out.iter_mut() {
        subset.sort();
    }
    out.sort();
    out
}

/// All mixable `(m, n, l)`-shuffles in deterministic order.
pub fn enumerate_mixable_triple(m: usize, n: usize, l: usize) -> Vec<MixableTripleShuffle> {
    let mut out = Vec::new();
    for shuffle in enumerate_triple_shuffles(m, n, l) {
        let candidates = merge_candidates(&shuffle);
        for merges in non_overlapping_subsets(&candidates) {
            out.push(MixableTripleShuffle {
                shuffle: shuffle.clone(),
                merges,
            });
        }
    }
    out
}

/// Closed-form count of mixable `(m, n, l)`-shuffles with merge degree `k`.
pub fn count_mixable_triple_by_degree(m: usize, n: usize, l: usize, k: usize) -> BigInt {
    let (m, n, l, k) = (m as i64, n as i64, l as i64, k as i64);
    let mut total = BigInt::zero();
    for i in 0..=n {
        total += binomial_signed(m + n + l - k, l)
            * binomial_signed(l, k - i)
            * binomial_signed(m + n - i, n)
            * binomial_signed(n, i);
    }
    total
}

/// Closed-form count of mixable `(m, n, l)`-shuffles.
pub fn count_mixable_triple(m: usize, n: usize, l: usize) -> BigInt {
    let mut total = BigInt::zero();
    for k in 0..=n + l {
        total += count_mixable_triple_by_degree(m, n, l, k);
    }
    total
}

/// A compiled mixable shuffle: how to fill each output slot from the
/// concatenated inputs (0-based indices), plus the weight exponent.
#[derive(Debug, Clone)]
pub(crate) struct ShufflePlan {
    pub lambda_exp: usize,
    pub slots: Vec<PlanSlot>,
}

#[derive(Debug, Clone, Copy)]
pub(crate) enum PlanSlot {
    One(usize),
    Two(usize, usize),
}

impl ShufflePlan {
    fn compile(ms: &MixablePairShuffle) -> ShufflePlan {
        let size = ms.shuffle.size();
        let mut slots = Vec::with_capacity(ms.output_len());
        let mut k = 1;
        while k <= size {
            if ms.merges.binary_search(&(k, k + 1)).is_ok() {
                slots.push(PlanSlot::Two(
                    ms.shuffle.perm.image(k) - 1,
                    ms.shuffle.perm.image(k + 1) - 1,
                ));
                k += 2;
            } else {
                slots.push(PlanSlot::One(ms.shuffle.perm.image(k) - 1));
                k += 1;
            }
        }
        ShufflePlan {
            lambda_exp: ms.merges.len(),
            slots,
        }
    }
}

type PlanCache = RwLock<HashMap<(usize, usize), Arc<Vec<ShufflePlan>>>>;

static PLAN_CACHE: OnceLock<PlanCache> = OnceLock::new();

/// Compiled mixable `(m, n)`-shuffles, memoized across calls.
pub(crate) fn pair_plans(m: usize, n: usize) -> Arc<Vec<ShufflePlan>> {
    let cache = PLAN_CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(found) = cache.read().expect("plan cache").get(&(m, n)) {
        return Arc::clone(found);
    }
    let plans: Vec<ShufflePlan> = enumerate_mixable_pair(m, n)
        .iter()
        .map(ShufflePlan::compile)
        .collect();
    let plans = Arc::new(plans);
    cache
        .write()
        .expect("plan cache")
        .entry((m, n))
        .or_insert_with(|| Arc::clone(&plans));
    plans
}
