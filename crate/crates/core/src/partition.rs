//! Partitions, Young-diagram cells, hook lengths and hook regions.
//!
//! Diagrams use English notation: row 1 is the top row and holds the
//! largest part, columns are counted from the left, and both indices are
//! 1-based.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition, stored as its weakly decreasing positive parts.
///
/// The text form is `[6,3,2,1]`, which is also its JSON encoding. The
/// empty partition `[]` is the unique partition of 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// A box of a Young diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Multiset of hook lengths of a partition, as `k -> number of k-hooks`.
///
/// Zero counts are never stored, so two profiles compare equal exactly when
/// they describe the same multiset.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HookProfile {
    counts: BTreeMap<usize, usize>,
}

impl HookProfile {
    /// Number of hooks of length `k` (0 when absent).
    pub fn count(&self, k: usize) -> usize {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    /// Total number of hooks, which is the number of boxes.
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&k, &c)| (k, c))
    }

    pub fn max_hook(&self) -> Option<usize> {
        self.counts.keys().next_back().copied()
    }

    fn add(&mut self, k: usize) {
        *self.counts.entry(k).or_insert(0) += 1;
    }
}

impl Partition {
    /// Builds a partition, rejecting zero parts and increasing steps.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts are not weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// Caller guarantees the parts are positive and weakly decreasing.
    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from `(part, multiplicity)` pairs with distinct,
    /// strictly decreasing parts and positive multiplicities.
    pub fn from_multiplicities(pairs: &[(usize, usize)]) -> Result<Self> {
        if pairs.windows(2).any(|w| w[0].0 <= w[1].0) {
            return Err(Error::InvalidPartition(format!(
                "distinct parts must strictly decrease: {pairs:?}"
            )));
        }
        if pairs.iter().any(|&(part, mult)| part == 0 || mult == 0) {
            return Err(Error::InvalidPartition(format!(
                "parts and multiplicities must be positive: {pairs:?}"
            )));
        }
        let parts = pairs
            .iter()
            .flat_map(|&(part, mult)| std::iter::repeat_n(part, mult))
            .collect();
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts (rows of the diagram).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest_part(&self) -> Option<usize> {
        self.parts.first().copied()
    }

    pub fn smallest_part(&self) -> Option<usize> {
        self.parts.last().copied()
    }

    /// The multiplicity view `(λ₁^m₁, …, λ_r^m_r)` with `λ₁ > … > λ_r`.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((part, mult)) if *part == p => *mult += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.largest_part().unwrap_or(0);
        let mut cols = vec![0; width];
        for &p in &self.parts {
            for c in &mut cols[..p] {
                *c += 1;
            }
        }
        Partition { parts: cols }
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.col >= 1
            && cell.row <= self.parts.len()
            && cell.col <= self.parts[cell.row - 1]
    }

    fn check_cell(&self, cell: Cell) -> Result<()> {
        if self.contains(cell) {
            Ok(())
        } else {
            Err(Error::InvalidCell {
                cell,
                partition: self.clone(),
            })
        }
    }

    /// All boxes in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
    }

    pub fn hook_length(&self, cell: Cell) -> Result<usize> {
        self.check_cell(cell)?;
        let conj = self.conjugate();
        Ok(hook_with_conjugate(&self.parts, &conj.parts, cell))
    }

    /// Hook lengths of every box, row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                (1..=p)
                    .map(|j| hook_with_conjugate(&self.parts, &conj.parts, Cell::new(i + 1, j)))
                    .collect()
            })
            .collect()
    }

    pub fn hook_profile(&self) -> HookProfile {
        let mut profile = HookProfile::default();
        for row in self.hook_lengths() {
            for h in row {
                profile.add(h);
            }
        }
        profile
    }

    /// True iff no hook length is divisible by `t`.
    pub fn is_t_core(&self, t: usize) -> Result<bool> {
        if t < 2 {
            return Err(Error::InvalidCoreParameter(t));
        }
        Ok(self.hook_lengths().iter().flatten().all(|h| h % t != 0))
    }

    /// True iff some box has hook length exactly `t`.
    pub fn has_exact_hook(&self, t: usize) -> bool {
        // Hooks in the first row and first column are the largest; anything
        // above λ₁ + ℓ - 1 cannot occur.
        if t == 0 || t > self.largest_part().unwrap_or(0) + self.len().saturating_sub(1) {
            return false;
        }
        self.hook_lengths().iter().flatten().any(|&h| h == t)
    }

    /// The region of the hook at `cell`: every box weakly below and weakly
    /// to the right of it, in row-major order.
    pub fn region(&self, cell: Cell) -> Result<Vec<Cell>> {
        self.check_cell(cell)?;
        Ok(self.parts[cell.row - 1..]
            .iter()
            .enumerate()
            .take_while(|&(_, &p)| p >= cell.col)
            .flat_map(|(i, &p)| (cell.col..=p).map(move |j| Cell::new(cell.row + i, j)))
            .collect())
    }

    /// The region of `cell` re-indexed as a Young diagram of its own, so
    /// that `(row, col)` maps to `(1, 1)`.
    pub fn region_shape(&self, cell: Cell) -> Result<Partition> {
        self.check_cell(cell)?;
        let parts = self.parts[cell.row - 1..]
            .iter()
            .take_while(|&&p| p >= cell.col)
            .map(|&p| p - cell.col + 1)
            .collect();
        Ok(Partition { parts })
    }
}

fn hook_with_conjugate(parts: &[usize], conj: &[usize], cell: Cell) -> usize {
    (parts[cell.row - 1] - cell.col) + (conj[cell.col - 1] - cell.row) + 1
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|rest| rest.strip_suffix(']'))
            .ok_or_else(|| Error::InvalidPartition(format!("expected [a,b,...], got {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::InvalidPartition(format!("bad part {tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rejects_malformed_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![3, 0]).is_err());
        assert!(Partition::from_multiplicities(&[(2, 1), (2, 1)]).is_err());
        assert!(Partition::from_multiplicities(&[(2, 0)]).is_err());
    }

    #[test]
    fn multiplicity_view_round_trips() {
        let q = p(&[5, 5, 3, 1, 1, 1]);
        let m = q.multiplicities();
        assert_eq!(m, vec![(5, 2), (3, 1), (1, 3)]);
        assert_eq!(Partition::from_multiplicities(&m).unwrap(), q);
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 2, 1]).conjugate(), p(&[3, 2, 1]));
        assert_eq!(p(&[6, 3, 2, 1]).conjugate(), p(&[4, 3, 2, 1, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn hook_lengths_of_6321() {
        let q = p(&[6, 3, 2, 1]);
        assert_eq!(q.hook_length(Cell::new(1, 1)).unwrap(), 9);
        assert_eq!(q.hook_length(Cell::new(2, 2)).unwrap(), 3);
        // Rows 1 and 2 match the printed diagram; row 3 follows the formula.
        assert_eq!(
            q.hook_lengths(),
            vec![vec![9, 7, 5, 3, 2, 1], vec![5, 3, 1], vec![3, 1], vec![1]]
        );
        assert_eq!(p(&[1]).hook_length(Cell::new(1, 1)).unwrap(), 1);
    }

    #[test]
    fn invalid_cell_is_reported() {
        let err = p(&[2, 1]).hook_length(Cell::new(2, 2)).unwrap_err();
        assert!(matches!(err, Error::InvalidCell { cell, .. } if cell == Cell::new(2, 2)));
        assert!(err.to_string().contains("(2, 2)"));
        assert!(p(&[2, 1]).region(Cell::new(3, 1)).is_err());
        assert!(p(&[2, 1]).hook_length(Cell::new(0, 1)).is_err());
    }

    #[test]
    fn hook_profile_examples() {
        let prof = p(&[2, 1]).hook_profile();
        assert_eq!(prof.iter().collect::<Vec<_>>(), vec![(1, 2), (3, 1)]);
        assert!(Partition::empty().hook_profile().is_empty());
        let prof = p(&[6, 3, 2, 1]).hook_profile();
        assert_eq!(prof.count(9), 1);
        assert_eq!(prof.total(), 12);
        assert_eq!(prof.count(4), 0);
    }

    #[test]
    fn core_tests() {
        assert!(p(&[6, 3, 2, 1]).is_t_core(4).unwrap());
        assert!(p(&[2, 2]).is_t_core(4).unwrap());
        assert!(!p(&[4]).is_t_core(4).unwrap());
        assert!(Partition::empty().is_t_core(7).unwrap());
        assert_eq!(p(&[1]).is_t_core(1), Err(Error::InvalidCoreParameter(1)));
        assert!(p(&[2, 2]).has_exact_hook(3));
        assert!(!p(&[1]).has_exact_hook(2));
        assert!(!p(&[6, 3, 2, 1]).has_exact_hook(4));
    }

    #[test]
    fn region_examples() {
        let q = p(&[6, 4, 2, 1]);
        let all: Vec<Cell> = q.cells().collect();
        assert_eq!(q.region(Cell::new(1, 1)).unwrap(), all);
        assert_eq!(all.len(), 13);
        assert_eq!(
            p(&[3, 1]).region(Cell::new(1, 3)).unwrap(),
            vec![Cell::new(1, 3)]
        );
        assert_eq!(
            p(&[4, 1, 1]).region(Cell::new(1, 2)).unwrap(),
            vec![Cell::new(1, 2), Cell::new(1, 3), Cell::new(1, 4)]
        );
        assert_eq!(
            p(&[4, 3, 1]).region_shape(Cell::new(1, 2)).unwrap(),
            p(&[3, 2])
        );
    }

    #[test]
    fn text_form() {
        assert_eq!(p(&[6, 3, 2, 1]).to_string(), "[6,3,2,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert_eq!("[6, 3,2,1]".parse::<Partition>().unwrap(), p(&[6, 3, 2, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("6,3".parse::<Partition>().is_err());
        assert_eq!(serde_json::to_string(&p(&[3, 1])).unwrap(), "[3,1]");
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
