//! Streaming generators for partitions and t-core partitions.
//!
//! [`partitions_of`] walks every partition of `n` in reverse-lexicographic
//! order and filters naively; it is the brute-force universe. The t-core
//! generators grow a diagram from its bottom row upwards. A new top row
//! never changes the hooks of the rows beneath it, and its own hooks are
//! final the moment it is placed, so every prefix of the search is itself a
//! t-core and a row is rejected as soon as one of its hooks is a multiple
//! of `t`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Restriction on the part values a partition may use.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartFilter {
    excluded: BTreeSet<usize>,
    min_part: usize,
}

impl Default for PartFilter {
    fn default() -> Self {
        PartFilter {
            excluded: BTreeSet::new(),
            min_part: 1,
        }
    }
}

impl PartFilter {
    /// The filter that admits everything.
    pub fn none() -> Self {
        Self::default()
    }

    /// Excludes the given part values (the set `C` of `a^{-C}`).
    pub fn excluding(parts: impl IntoIterator<Item = usize>) -> Self {
        PartFilter {
            excluded: parts.into_iter().collect(),
            min_part: 1,
        }
    }

    pub fn with_min_part(mut self, min_part: usize) -> Self {
        self.min_part = min_part.max(1);
        self
    }

    pub fn excluded(&self) -> &BTreeSet<usize> {
        &self.excluded
    }

    pub fn min_part(&self) -> usize {
        self.min_part
    }

    pub fn is_trivial(&self) -> bool {
        self.min_part <= 1 && self.excluded.is_empty()
    }

    pub fn admits_part(&self, part: usize) -> bool {
        part >= self.min_part && !self.excluded.contains(&part)
    }

    pub fn admits(&self, p: &Partition) -> bool {
        p.parts().iter().all(|&part| self.admits_part(part))
    }
}

/// Bookkeeping for one generator run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumStats {
    pub n: usize,
    /// 0 for the unrestricted partition stream.
    pub t: usize,
    pub produced: u64,
    pub pruned_nodes: u64,
}

/// All partitions of `n` admitted by `filter`, in reverse-lexicographic order.
pub fn partitions_of(n: usize, filter: &PartFilter) -> Partitions {
    Partitions {
        current: Some(if n == 0 { Vec::new() } else { vec![n] }),
        filter: filter.clone(),
        stats: EnumStats {
            n,
            ..EnumStats::default()
        },
    }
}

#[derive(Clone, Debug)]
pub struct Partitions {
    current: Option<Vec<usize>>,
    filter: PartFilter,
    stats: EnumStats,
}

impl Partitions {
    pub fn stats(&self) -> EnumStats {
        self.stats
    }

    fn advance(parts: &mut Vec<usize>) -> bool {
        let mut freed = 0;
        while parts.last() == Some(&1) {
            parts.pop();
            freed += 1;
        }
        let Some(last) = parts.last_mut() else {
            return false;
        };
        *last -= 1;
        let cap = *last;
        freed += 1;
        while freed >= cap {
            parts.push(cap);
            freed -= cap;
        }
        if freed > 0 {
            parts.push(freed);
        }
        true
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        loop {
            let parts = self.current.take()?;
            let mut succ = parts.clone();
            if Self::advance(&mut succ) {
                self.current = Some(succ);
            }
            let p = Partition::from_parts_unchecked(parts);
            if self.filter.admits(&p) {
                self.stats.produced += 1;
                return Some(p);
            }
        }
    }
}

/// Read-only view of a t-core reached by the bottom-up search.
pub struct CoreNode<'a> {
    rows_bottom_up: &'a [usize],
    hook_counts: &'a [u64],
    size: usize,
}

impl CoreNode<'_> {
    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of hooks of length `k`.
    pub fn hook_count(&self, k: usize) -> u64 {
        self.hook_counts.get(k).copied().unwrap_or(0)
    }

    /// Hook counts indexed by hook length; index 0 is always 0.
    pub fn hook_counts(&self) -> &[u64] {
        self.hook_counts
    }

    pub fn to_partition(&self) -> Partition {
        Partition::from_parts_unchecked(self.rows_bottom_up.iter().rev().copied().collect())
    }
}

/// Depth-first bottom-up search over t-cores.
struct CoreWalker<'f> {
    t: usize,
    bound: usize,
    exact: bool,
    filter: &'f PartFilter,
    rows: Vec<usize>,
    col_len: Vec<usize>,
    hooks: Vec<u64>,
    size: usize,
    pruned: u64,
}

impl<'f> CoreWalker<'f> {
    fn new(t: usize, bound: usize, exact: bool, filter: &'f PartFilter) -> Result<Self> {
        if t < 2 {
            return Err(Error::InvalidCoreParameter(t));
        }
        Ok(CoreWalker {
            t,
            bound,
            exact,
            filter,
            rows: Vec::new(),
            col_len: vec![0; bound + 1],
            hooks: vec![0; 2 * bound + 1],
            size: 0,
            pruned: 0,
        })
    }

    /// Whether a new top row of length `p` has no hook divisible by `t`.
    fn row_is_clean(&self, p: usize) -> bool {
        (1..=p).all(|c| !(p - c + self.col_len[c - 1] + 1).is_multiple_of(self.t))
    }

    fn push_row(&mut self, p: usize) {
        for c in 1..=p {
            let h = p - c + self.col_len[c - 1] + 1;
            self.hooks[h] += 1;
            self.col_len[c - 1] += 1;
        }
        self.rows.push(p);
        self.size += p;
    }

    fn pop_row(&mut self) {
        let p = self.rows.pop().expect("pop on empty walker");
        self.size -= p;
        for c in 1..=p {
            self.col_len[c - 1] -= 1;
            let h = p - c + self.col_len[c - 1] + 1;
            self.hooks[h] -= 1;
        }
    }

    fn walk(&mut self, visit: &mut dyn FnMut(&CoreNode<'_>)) {
        if !self.exact || self.size == self.bound {
            let max_hook = self.rows.last().map_or(0, |&top| top + self.rows.len() - 1);
            visit(&CoreNode {
                rows_bottom_up: &self.rows,
                hook_counts: &self.hooks[..=max_hook],
                size: self.size,
            });
        }
        let top = self.rows.last().copied().unwrap_or(0);
        let room = self.bound - self.size;
        // Cells of the new row past the old top row have hooks 1..=p-top.
        let hi = (top + self.t - 1).min(room);
        for p in top.max(1)..=hi {
            if !self.filter.admits_part(p) || !self.row_is_clean(p) {
                self.pruned += 1;
                continue;
            }
            let left = room - p;
            if self.exact && left > 0 && left < p {
                self.pruned += 1;
                continue;
            }
            self.push_row(p);
            self.walk(visit);
            self.pop_row();
        }
    }
}

/// Visits every t-core of size at most `n_max` admitted by `filter`,
/// exactly once each, in search order.
pub fn visit_t_cores(
    n_max: usize,
    t: usize,
    filter: &PartFilter,
    mut visit: impl FnMut(&CoreNode<'_>),
) -> Result<u64> {
    let mut walker = CoreWalker::new(t, n_max, false, filter)?;
    walker.walk(&mut visit);
    Ok(walker.pruned)
}

/// Visits every t-core of size exactly `n` admitted by `filter`.
pub fn visit_t_cores_of(
    n: usize,
    t: usize,
    filter: &PartFilter,
    mut visit: impl FnMut(&CoreNode<'_>),
) -> Result<u64> {
    let mut walker = CoreWalker::new(t, n, true, filter)?;
    walker.walk(&mut visit);
    Ok(walker.pruned)
}

/// The t-core partitions of `n` admitted by `filter`, in the same
/// reverse-lexicographic order as [`partitions_of`].
pub fn t_cores_of(n: usize, t: usize, filter: &PartFilter) -> Result<TCores> {
    let mut found = Vec::new();
    let pruned = visit_t_cores_of(n, t, filter, |node| found.push(node.to_partition()))?;
    found.sort_unstable_by(|a, b| b.cmp(a));
    let stats = EnumStats {
        n,
        t,
        produced: found.len() as u64,
        pruned_nodes: pruned,
    };
    Ok(TCores {
        inner: found.into_iter(),
        stats,
    })
}

/// Stream of t-cores produced by [`t_cores_of`].
#[derive(Debug)]
pub struct TCores {
    inner: std::vec::IntoIter<Partition>,
    stats: EnumStats,
}

impl TCores {
    pub fn stats(&self) -> EnumStats {
        self.stats
    }
}

impl Iterator for TCores {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        self.inner.next()
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.inner.size_hint()
    }
}

impl ExactSizeIterator for TCores {}

/// `a_t(n)` under `filter`.
pub fn count_t_cores(n: usize, t: usize, filter: &PartFilter) -> Result<u64> {
    let mut count = 0u64;
    visit_t_cores_of(n, t, filter, |_| count += 1)?;
    Ok(count)
}

/// `[a_t(0), …, a_t(n_max)]` under `filter`, from a single search.
pub fn count_t_cores_up_to(n_max: usize, t: usize, filter: &PartFilter) -> Result<Vec<u64>> {
    let mut counts = vec![0u64; n_max + 1];
    visit_t_cores(n_max, t, filter, |node| counts[node.size()] += 1)?;
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn list(it: impl Iterator<Item = Partition>) -> Vec<Partition> {
        it.collect()
    }

    #[test]
    fn partitions_of_four() {
        assert_eq!(
            list(partitions_of(4, &PartFilter::none())),
            vec![
                p(&[4]),
                p(&[3, 1]),
                p(&[2, 2]),
                p(&[2, 1, 1]),
                p(&[1, 1, 1, 1])
            ]
        );
        assert_eq!(
            list(partitions_of(4, &PartFilter::excluding([1]))),
            vec![p(&[4]), p(&[2, 2])]
        );
    }

    #[test]
    fn partitions_of_zero() {
        assert_eq!(
            list(partitions_of(0, &PartFilter::none())),
            vec![Partition::empty()]
        );
        assert_eq!(
            list(partitions_of(0, &PartFilter::excluding([1, 2]))),
            vec![Partition::empty()]
        );
    }

    #[test]
    fn partition_numbers() {
        let counts: Vec<usize> = (0..=12)
            .map(|n| partitions_of(n, &PartFilter::none()).count())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
    }

    #[test]
    fn t_core_examples() {
        let none = PartFilter::none();
        assert_eq!(
            list(t_cores_of(4, 3, &none).unwrap()),
            vec![p(&[3, 1]), p(&[2, 1, 1])]
        );
        assert_eq!(
            list(t_cores_of(3, 4, &none).unwrap()),
            vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]
        );
        assert_eq!(list(t_cores_of(6, 2, &none).unwrap()), vec![p(&[3, 2, 1])]);
        assert_eq!(
            list(t_cores_of(0, 5, &none).unwrap()),
            vec![Partition::empty()]
        );
    }

    #[test]
    fn t_core_counts() {
        let none = PartFilter::none();
        assert_eq!(count_t_cores(5, 2, &none).unwrap(), 0);
        assert_eq!(count_t_cores(6, 2, &none).unwrap(), 1);
        assert_eq!(count_t_cores(4, 4, &none).unwrap(), 1);
        assert_eq!(
            count_t_cores(4, 1, &none),
            Err(Error::InvalidCoreParameter(1))
        );
        assert!(t_cores_of(4, 0, &none).is_err());
    }

    #[test]
    fn stats_are_reported() {
        let cores = t_cores_of(10, 3, &PartFilter::none()).unwrap();
        let stats = cores.stats();
        assert_eq!(stats.produced, cores.len() as u64);
        assert_eq!((stats.n, stats.t), (10, 3));
        assert!(stats.pruned_nodes > 0);
    }

    #[test]
    fn sweep_matches_single_counts() {
        let f = PartFilter::excluding([1]);
        let sweep = count_t_cores_up_to(30, 5, &f).unwrap();
        for (n, &c) in sweep.iter().enumerate() {
            assert_eq!(c, count_t_cores(n, 5, &f).unwrap(), "n={n}");
        }
    }

    #[test]
    fn min_part_filter() {
        let f = PartFilter::none().with_min_part(3);
        assert_eq!(
            list(t_cores_of(9, 4, &f).unwrap()),
            list(t_cores_of(9, 4, &PartFilter::excluding([1, 2])).unwrap())
        );
        assert!(!f.admits(&p(&[3, 2])));
        assert!(PartFilter::none().is_trivial());
    }
}
