//! Mechanical checks of the structural conditions on 3- and 4-cores, the
//! hook-region theorem, the closed-form counts, the bias theorems and the
//! 5-core conjecture scanner.
//!
//! Every check is exhaustive over a finite range and reports the first
//! failure it meets. Nothing here proves anything beyond that range.

use std::fmt;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate::{count_t_cores_up_to, partitions_of, visit_t_cores, PartFilter};
use crate::error::{Error, Result};
use crate::partition::{Cell, Partition};
use crate::qseries::triangular_index;
use crate::quadform::{odd_representation, triple_triangular_count};
use crate::stats::{
    chain_table, per_partition_chain_violation, BiasChain, BiasRecord, HookKey, HookTable,
    Relation, Verdict,
};

/// First failure found by a range check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub n: Option<usize>,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Partition>,
}

impl Failure {
    fn at(n: usize, detail: impl Into<String>) -> Self {
        Failure {
            n: Some(n),
            detail: detail.into(),
            witness: None,
        }
    }

    fn with_witness(mut self, p: Partition) -> Self {
        self.witness = Some(p);
        self
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.n {
            write!(f, "n={n}: ")?;
        }
        f.write_str(&self.detail)?;
        if let Some(w) = &self.witness {
            write!(f, " (witness {w})")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub holds: bool,
    /// Number of individual facts confirmed before stopping.
    pub checked: u64,
    pub first_failure: Option<Failure>,
}

impl CheckOutcome {
    fn pass(checked: u64) -> Self {
        CheckOutcome {
            holds: true,
            checked,
            first_failure: None,
        }
    }

    fn fail(checked: u64, failure: Failure) -> Self {
        CheckOutcome {
            holds: false,
            checked,
            first_failure: Some(failure),
        }
    }
}

// ---------------------------------------------------------------------------
// Structural conditions

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub subject: Partition,
    pub checks: Vec<(String, bool)>,
    pub overall: bool,
}

impl ConditionReport {
    fn new(subject: &Partition, checks: Vec<(&str, bool)>) -> Self {
        let overall = checks.iter().all(|&(_, ok)| ok);
        ConditionReport {
            subject: subject.clone(),
            checks: checks
                .into_iter()
                .map(|(id, ok)| (id.to_string(), ok))
                .collect(),
            overall,
        }
    }

    pub fn passed(&self, id: &str) -> Option<bool> {
        self.checks.iter().find(|(c, _)| c == id).map(|&(_, ok)| ok)
    }

    pub fn failed_ids(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(c, _)| c.as_str())
            .collect()
    }
}

/// Conditions 3A–3D on the multiplicity view of `p`.
///
/// - 3A: every multiplicity is at most 2
/// - 3B: consecutive distinct parts differ by at most 2, and `λ_r <= 2`
/// - 3C: `m_i = 2` forces `λ_i - λ_{i+1} = 1` (for `i < r`)
/// - 3D: `λ_i - λ_{i+1} = 1` forces `m_{i+1} = 2` (for `i < r`)
pub fn check_3core_conditions(p: &Partition) -> ConditionReport {
    let mv = p.multiplicities();
    let gaps: Vec<(usize, usize, usize, usize)> = mv
        .windows(2)
        .map(|w| (w[0].0 - w[1].0, w[0].1, w[1].1, w[0].0))
        .collect();
    let a = mv.iter().all(|&(_, m)| m <= 2);
    let b =
        gaps.iter().all(|&(gap, ..)| gap <= 2) && p.smallest_part().is_none_or(|last| last <= 2);
    let c = gaps.iter().all(|&(gap, m, _, _)| m != 2 || gap == 1);
    let d = gaps
        .iter()
        .all(|&(gap, _, m_next, _)| gap != 1 || m_next == 2);
    ConditionReport::new(p, vec![("3A", a), ("3B", b), ("3C", c), ("3D", d)])
}

/// The bullet conditions on 4-cores, with `λ_{r+1} = 0`.
///
/// Rules that mention `m_{i+1}` apply for `i < r` only.
///
/// - `4-mult`: `m_i <= 3`
/// - `4-gap`: `λ_i - λ_{i+1} <= 3`
/// - `4-gap3`: a gap of 3 forces `m_i = 1`
/// - `4-gap2`: a gap of 2 forbids `m_i = 3`, and `m_i ∈ {1,2}` forces `m_{i+1} ∈ {2,3}`
/// - `4-gap1`: a gap of 1 with `m_i = 1` forces `m_{i+1} ∈ {1,3}`; with
///   `m_i ∈ {2,3}` it forces `m_{i+1} = 3`
pub fn check_4core_conditions(p: &Partition) -> ConditionReport {
    let mv = p.multiplicities();
    let r = mv.len();
    let mut mult = true;
    let mut gap_ok = true;
    let mut gap3 = true;
    let mut gap2 = true;
    let mut gap1 = true;
    for i in 0..r {
        let (lambda, m) = mv[i];
        let next = mv.get(i + 1).copied();
        let gap = lambda - next.map_or(0, |(l, _)| l);
        let m_next = next.map(|(_, mn)| mn);
        mult &= m <= 3;
        gap_ok &= gap <= 3;
        match gap {
            3 => gap3 &= m == 1 && m_next.is_none_or(|mn| (1..=3).contains(&mn)),
            2 => {
                gap2 &= m != 3;
                if let Some(mn) = m_next {
                    gap2 &= !(m == 1 || m == 2) || mn == 2 || mn == 3;
                }
            }
            1 => {
                if let Some(mn) = m_next {
                    gap1 &= match m {
                        1 => mn == 1 || mn == 3,
                        2 | 3 => mn == 3,
                        _ => true,
                    };
                }
            }
            _ => {}
        }
    }
    ConditionReport::new(
        p,
        vec![
            ("4-mult", mult),
            ("4-gap", gap_ok),
            ("4-gap3", gap3),
            ("4-gap2", gap2),
            ("4-gap1", gap1),
        ],
    )
}

/// Every 3-core passes 3A–3D and every 4-core passes the 4-core bullets,
/// for all sizes up to `n_max`.
pub fn conditions_necessity_check(n_max: usize) -> Result<CheckOutcome> {
    let mut checked = 0u64;
    let mut failure: Option<Failure> = None;
    for (t, check) in [
        (
            3,
            check_3core_conditions as fn(&Partition) -> ConditionReport,
        ),
        (4, check_4core_conditions),
    ] {
        visit_t_cores(n_max, t, &PartFilter::none(), |node| {
            if failure.is_some() {
                return;
            }
            let p = node.to_partition();
            let report = check(&p);
            checked += 1;
            if !report.overall {
                failure = Some(
                    Failure::at(
                        p.size(),
                        format!("{t}-core fails {:?}", report.failed_ids()),
                    )
                    .with_witness(p),
                );
            }
        })?;
        if let Some(f) = failure {
            return Ok(CheckOutcome::fail(checked, f));
        }
    }
    Ok(CheckOutcome::pass(checked))
}

// ---------------------------------------------------------------------------
// Hook regions

/// A `kt`-hook together with a `t`-hook found in its region.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionWitness {
    pub partition: Partition,
    pub hook_cell: Cell,
    pub hook_len: usize,
    pub t: usize,
    pub witness_cell: Option<Cell>,
}

/// Searches the region of `hook_cell` for a box with hook length exactly
/// `t`, scanning the region in row-major order.
pub fn region_witness(p: &Partition, hook_cell: Cell, t: usize) -> Result<RegionWitness> {
    let hook_len = p.hook_length(hook_cell)?;
    let hooks = p.hook_lengths();
    let witness_cell = p
        .region(hook_cell)?
        .into_iter()
        .find(|c| hooks[c.row - 1][c.col - 1] == t);
    Ok(RegionWitness {
        partition: p.clone(),
        hook_cell,
        hook_len,
        t,
        witness_cell,
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionScan {
    pub partitions_checked: u64,
    /// `(cell, t)` pairs whose hook is `k·t` with `k >= 2`.
    pub hooks_checked: u64,
    pub violations: Vec<RegionWitness>,
    /// A few passing instances, for reports.
    pub samples: Vec<RegionWitness>,
}

impl RegionScan {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

const REGION_SAMPLES: usize = 8;

/// For a fixed `t`, the row-major-first `t`-hook in the region of every box.
fn region_first_hook(p: &Partition, hooks: &[Vec<usize>], t: usize) -> Vec<Vec<Option<Cell>>> {
    let parts = p.parts();
    let mut first: Vec<Vec<Option<Cell>>> = parts.iter().map(|&len| vec![None; len]).collect();
    for i in (0..parts.len()).rev() {
        for j in (0..parts[i]).rev() {
            let here = (hooks[i][j] == t).then_some(Cell::new(i + 1, j + 1));
            let right = if j + 1 < parts[i] {
                first[i][j + 1]
            } else {
                None
            };
            let below = if i + 1 < parts.len() && j < parts[i + 1] {
                first[i + 1][j]
            } else {
                None
            };
            first[i][j] = [here, right, below].into_iter().flatten().min();
        }
    }
    first
}

/// For every partition of every `n` in `1..=n_max` and every box whose hook
/// is `k·t` with `k >= 2` and `t` in `t_set`, looks for a `t`-hook in the
/// box's region.
pub fn region_theorem_scan(n_max: usize, t_set: &[usize]) -> Result<RegionScan> {
    if t_set.contains(&0) {
        return Err(Error::Domain("t must be at least 1".into()));
    }
    let per_n: Vec<RegionScan> = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let mut scan = RegionScan::default();
            for p in partitions_of(n, &PartFilter::none()) {
                scan.partitions_checked += 1;
                let hooks = p.hook_lengths();
                for &t in t_set {
                    let first = region_first_hook(&p, &hooks, t);
                    for cell in p.cells() {
                        let h = hooks[cell.row - 1][cell.col - 1];
                        if h % t != 0 || h / t < 2 {
                            continue;
                        }
                        scan.hooks_checked += 1;
                        let witness_cell = first[cell.row - 1][cell.col - 1];
                        let record = || RegionWitness {
                            partition: p.clone(),
                            hook_cell: cell,
                            hook_len: h,
                            t,
                            witness_cell,
                        };
                        if witness_cell.is_none() {
                            scan.violations.push(record());
                        } else if scan.samples.len() < REGION_SAMPLES && h / t == 2 && n == n_max {
                            scan.samples.push(record());
                        }
                    }
                }
            }
            scan
        })
        .collect();
    let mut total = RegionScan::default();
    for scan in per_n {
        total.partitions_checked += scan.partitions_checked;
        total.hooks_checked += scan.hooks_checked;
        total.violations.extend(scan.violations);
        total.samples.extend(scan.samples);
    }
    total.samples.truncate(REGION_SAMPLES);
    Ok(total)
}

/// `is_t_core(p, t)` agrees with "no hook of length exactly `t`" on every
/// partition of `n <= n_max` and every `t` in `ts`.
pub fn core_equivalence_check(n_max: usize, ts: RangeInclusive<usize>) -> Result<CheckOutcome> {
    let mut checked = 0u64;
    for n in 0..=n_max {
        for p in partitions_of(n, &PartFilter::none()) {
            for t in ts.clone() {
                checked += 1;
                if p.is_t_core(t)? == p.has_exact_hook(t) {
                    return Ok(CheckOutcome::fail(
                        checked,
                        Failure::at(n, format!("t={t}: core test and exact-hook test disagree"))
                            .with_witness(p),
                    ));
                }
            }
        }
    }
    Ok(CheckOutcome::pass(checked))
}

// ---------------------------------------------------------------------------
// Closed forms

/// The 2-core hook counts: at `n = ℓ(ℓ+1)/2`, `a_{2,2k+1}(n) = ℓ - k` for
/// `0 <= k <= ℓ-1` and every other `a_{2,j}(n)` is 0; at every other `n`
/// all counts vanish. Consecutive odd counts differ by exactly 1.
pub fn prop_2core_check(l_max: usize) -> Result<CheckOutcome> {
    if l_max < 1 {
        return Err(Error::Domain("l_max must be at least 1".into()));
    }
    let n_max = l_max * (l_max + 1) / 2;
    let table = HookTable::build(2, n_max, &PartFilter::none())?;
    let mut checked = 0u64;
    for n in 0..=n_max {
        let ell = triangular_index(n);
        let expected_cores = u64::from(ell.is_some());
        if table.core_count(n) != expected_cores {
            return Ok(CheckOutcome::fail(
                checked,
                Failure::at(
                    n,
                    format!(
                        "a_2(n) = {}, expected {expected_cores}",
                        table.core_count(n)
                    ),
                ),
            ));
        }
        let k_top = table.max_hook(n).max(2 * ell.unwrap_or(0) + 1);
        for k in 1..=k_top {
            let expected = match ell {
                Some(l) if k % 2 == 1 && (k - 1) / 2 < l => (l - (k - 1) / 2) as u64,
                _ => 0,
            };
            checked += 1;
            let got = table.value(n, k);
            if got != expected {
                return Ok(CheckOutcome::fail(
                    checked,
                    Failure::at(n, format!("a_{{2,{k}}}(n) = {got}, expected {expected}")),
                ));
            }
        }
        if let Some(l) = ell {
            for j in 0..l.saturating_sub(1) {
                checked += 1;
                let (a, b) = (table.value(n, 2 * j + 1), table.value(n, 2 * j + 3));
                if a.checked_sub(b) != Some(1) {
                    return Ok(CheckOutcome::fail(
                        checked,
                        Failure::at(
                            n,
                            format!(
                                "a_{{2,{}}} - a_{{2,{}}} = {a} - {b} != 1",
                                2 * j + 1,
                                2 * j + 3
                            ),
                        ),
                    ));
                }
            }
        }
    }
    Ok(CheckOutcome::pass(checked))
}

/// `a^{-{1,2}}_{4,1}(n) = a^{-{1,2}}_{4,3}(n) = ℓ` when `n = 3ℓ(ℓ+1)/2`
/// with `ℓ >= 1`, and 0 otherwise, for `n <= 3 l_max (l_max+1)/2`.
pub fn restricted_4core_formula_check(l_max: usize) -> Result<CheckOutcome> {
    if l_max < 1 {
        return Err(Error::Domain("l_max must be at least 1".into()));
    }
    let n_max = 3 * l_max * (l_max + 1) / 2;
    let table = HookTable::build(4, n_max, &PartFilter::excluding([1, 2]))?;
    let mut checked = 0u64;
    for n in 0..=n_max {
        let expected = match (n % 3 == 0).then(|| triangular_index(n / 3)).flatten() {
            Some(l) if l >= 1 => l as u64,
            _ => 0,
        };
        for k in [1, 3] {
            checked += 1;
            let got = table.value(n, k);
            if got != expected {
                return Ok(CheckOutcome::fail(
                    checked,
                    Failure::at(
                        n,
                        format!("a^-{{1,2}}_{{4,{k}}}(n) = {got}, expected {expected}"),
                    ),
                ));
            }
        }
    }
    Ok(CheckOutcome::pass(checked))
}

// ---------------------------------------------------------------------------
// Bias chains

fn chain_outcome(chain: &BiasChain, n_max: usize) -> Result<CheckOutcome> {
    let rows = chain_table(chain, 0..=n_max)?;
    let mut checked = 0u64;
    for row in &rows {
        match row.verdict {
            Verdict::Fails => {
                let values: Vec<String> = row
                    .values
                    .iter()
                    .map(|v| format!("a_{{{}}}={}", HookKey::new(v.t, v.k), v.value))
                    .collect();
                return Ok(CheckOutcome::fail(
                    checked,
                    Failure::at(row.n, values.join(", ")),
                ));
            }
            Verdict::Holds => checked += 1,
            Verdict::NotApplicable => {}
        }
    }
    Ok(CheckOutcome::pass(checked))
}

fn per_partition_outcome(
    t: usize,
    ks: &[usize],
    relations: &[Relation],
    n_max: usize,
    filter: &PartFilter,
) -> Result<Option<Failure>> {
    Ok(
        per_partition_chain_violation(t, ks, relations, n_max, filter)?.map(|p| {
            let prof = p.hook_profile();
            let counts: Vec<String> = ks
                .iter()
                .map(|&k| format!("#{k}-hooks={}", prof.count(k)))
                .collect();
            Failure::at(
                p.size(),
                format!("per-partition chain fails: {}", counts.join(", ")),
            )
            .with_witness(p)
        }),
    )
}

/// Aggregate chain for every `n <= n_max`, then the same chain on each
/// individual t-core of size at most `per_partition_max`.
pub fn chain_check(
    chain: &BiasChain,
    n_max: usize,
    per_partition_max: Option<usize>,
) -> Result<CheckOutcome> {
    let mut outcome = chain_outcome(chain, n_max)?;
    if !outcome.holds {
        return Ok(outcome);
    }
    if let Some(pp_max) = per_partition_max {
        let t = chain.terms[0].t;
        if chain.terms.iter().any(|key| key.t != t) {
            return Err(Error::Domain("per-partition chains need a single t".into()));
        }
        let ks: Vec<usize> = chain.terms.iter().map(|key| key.k).collect();
        if let Some(f) = per_partition_outcome(t, &ks, &chain.relations, pp_max, &chain.filter)? {
            return Ok(CheckOutcome::fail(outcome.checked, f));
        }
        outcome.checked += 1;
    }
    Ok(outcome)
}

/// Named range checks, one per statement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Statement {
    /// Closed form of the 2-core hook counts and the unit differences.
    TwoCoreFormula,
    /// `a_{3,1} >= a_{3,2} >= a_{3,4}`.
    ThreeCoreChain,
    /// `a_{4,1} >= a_{4,3}`.
    FourCoreOneThree,
    /// `a^{-{1,2}}_{4,1} = a^{-{1,2}}_{4,3}`.
    FourCoreNoOneTwo,
    /// `a^{-{1}}_{4,1} >= a^{-{1}}_{4,3}`.
    FourCoreNoOne,
    /// `a^{-{1,2}}_{5,1} <= a^{-{1,2}}_{5,3}`.
    FiveCoreNoOneTwo,
    /// `a_{2,k} <= a_{4,k}` for `k ∈ {1,3}`.
    TwoVersusFour,
    /// A `kt`-hook's region holds a `t`-hook; t-cores are exactly the
    /// partitions without a `t`-hook.
    RegionTheorem,
    /// Conjectured `a_{5,1} >= a_{5,3} >= a_{5,6}` (scanned, not asserted).
    FiveCoreChain,
    /// Necessity of the 3-core and 4-core structural conditions.
    CoreConditions,
}

impl Statement {
    pub const ALL: [Statement; 10] = [
        Statement::TwoCoreFormula,
        Statement::ThreeCoreChain,
        Statement::FourCoreOneThree,
        Statement::FourCoreNoOneTwo,
        Statement::FourCoreNoOne,
        Statement::FiveCoreNoOneTwo,
        Statement::TwoVersusFour,
        Statement::RegionTheorem,
        Statement::FiveCoreChain,
        Statement::CoreConditions,
    ];

    /// The identifier used on the command line.
    pub fn id(self) -> &'static str {
        match self {
            Statement::TwoCoreFormula => "prop21",
            Statement::ThreeCoreChain => "thm13",
            Statement::FourCoreOneThree => "thm14",
            Statement::FourCoreNoOneTwo => "thm16",
            Statement::FourCoreNoOne => "thm17",
            Statement::FiveCoreNoOneTwo => "thm18",
            Statement::TwoVersusFour => "thm19",
            Statement::RegionTheorem => "region",
            Statement::FiveCoreChain => "conj15",
            Statement::CoreConditions => "conditions",
        }
    }

    pub fn from_id(id: &str) -> Option<Statement> {
        Self::ALL.into_iter().find(|s| s.id() == id)
    }

    /// The bias chain behind this statement, when it is one.
    pub fn chain(self) -> Option<BiasChain> {
        use Relation::*;
        let none = PartFilter::none;
        let chain = match self {
            Statement::ThreeCoreChain => BiasChain::single(3, &[1, 2, 4], vec![Ge, Ge], none()),
            Statement::FourCoreOneThree => BiasChain::single(4, &[1, 3], vec![Ge], none()),
            Statement::FourCoreNoOneTwo => {
                BiasChain::single(4, &[1, 3], vec![Eq], PartFilter::excluding([1, 2]))
            }
            Statement::FourCoreNoOne => {
                BiasChain::single(4, &[1, 3], vec![Ge], PartFilter::excluding([1]))
            }
            Statement::FiveCoreNoOneTwo => {
                BiasChain::single(5, &[1, 3], vec![Le], PartFilter::excluding([1, 2]))
            }
            Statement::FiveCoreChain => BiasChain::single(5, &[1, 3, 6], vec![Ge, Ge], none()),
            _ => return None,
        };
        Some(chain.expect("statement chains are well formed"))
    }

    /// Runs the check over `n <= n_max`.
    ///
    /// For the 2-core formula `n_max` bounds the triangular numbers checked;
    /// for the region theorem it bounds the brute-force partition universe
    /// and `t` ranges over `1..=7`.
    pub fn check(self, n_max: usize) -> Result<CheckOutcome> {
        match self {
            Statement::TwoCoreFormula => {
                let l_max = (1..)
                    .take_while(|l| l * (l + 1) / 2 <= n_max.max(1))
                    .last()
                    .unwrap_or(1);
                prop_2core_check(l_max)
            }
            Statement::ThreeCoreChain
            | Statement::FourCoreOneThree
            | Statement::FiveCoreNoOneTwo => {
                chain_check(&self.chain().expect("chain"), n_max, Some(n_max))
            }
            Statement::FourCoreNoOneTwo | Statement::FourCoreNoOne | Statement::FiveCoreChain => {
                chain_check(&self.chain().expect("chain"), n_max, None)
            }
            Statement::TwoVersusFour => two_versus_four_check(n_max),
            Statement::RegionTheorem => {
                let scan = region_theorem_scan(n_max, &[1, 2, 3, 4, 5, 6, 7])?;
                if let Some(v) = scan.violations.first() {
                    return Ok(CheckOutcome::fail(
                        scan.hooks_checked,
                        Failure::at(
                            v.partition.size(),
                            format!(
                                "no {}-hook in the region of the {}-hook at {}",
                                v.t, v.hook_len, v.hook_cell
                            ),
                        )
                        .with_witness(v.partition.clone()),
                    ));
                }
                let eq = core_equivalence_check(n_max, 2..=7)?;
                Ok(CheckOutcome {
                    checked: scan.hooks_checked + eq.checked,
                    ..eq
                })
            }
            Statement::CoreConditions => conditions_necessity_check(n_max),
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// `a_{2,k}(n) <= a_{4,k}(n)` for `k ∈ {1,3}` and every `n <= n_max`.
pub fn two_versus_four_check(n_max: usize) -> Result<CheckOutcome> {
    let mut checked = 0;
    for k in [1, 3] {
        let chain = BiasChain::new(
            vec![HookKey::new(2, k), HookKey::new(4, k)],
            vec![Relation::Le],
            PartFilter::none(),
        )?;
        let outcome = chain_outcome(&chain, n_max)?;
        checked += outcome.checked;
        if !outcome.holds {
            return Ok(CheckOutcome { checked, ..outcome });
        }
    }
    Ok(CheckOutcome::pass(checked))
}

/// Rows of the conjectured 5-core chain that fail, for `n <= n_max`.
/// Each failing row carries the first 5-core of that `n` whose own hook
/// counts break the chain, when there is one.
pub fn scan_conjecture_5core(n_max: usize) -> Result<Vec<BiasRecord>> {
    let chain = Statement::FiveCoreChain.chain().expect("chain");
    let mut fails: Vec<BiasRecord> = chain_table(&chain, 0..=n_max)?
        .into_iter()
        .filter(|row| row.verdict == Verdict::Fails)
        .collect();
    for row in &mut fails {
        row.witness = crate::enumerate::t_cores_of(row.n, 5, &PartFilter::none())?.find(|p| {
            let prof = p.hook_profile();
            !(prof.count(1) >= prof.count(3) && prof.count(3) >= prof.count(6))
        });
    }
    Ok(fails)
}

/// For `2 <= h <= h_max` and `n = h(h+1)/2`: an odd representation of
/// `(2h+1)² + 4` other than the staircase one exists, the three-fold
/// triangular sum has at least two terms at `n`, and (for `n` up to
/// `enumeration_budget`) there are at least two 4-cores of `n`.
pub fn verify_two_4cores(h_max: u64, enumeration_budget: usize) -> Result<CheckOutcome> {
    if h_max < 2 {
        return Err(Error::Domain("h_max must be at least 2".into()));
    }
    let tri = |h: u64| (h * (h + 1) / 2) as usize;
    let enum_max = (2..=h_max)
        .map(tri)
        .take_while(|&n| n <= enumeration_budget)
        .last();
    let counts = match enum_max {
        Some(n) => count_t_cores_up_to(n, 4, &PartFilter::none())?,
        None => Vec::new(),
    };
    let mut checked = 0u64;
    for h in 2..=h_max {
        let n = tri(h);
        let rep = odd_representation(h)?;
        if !rep.is_valid() || rep.is_staircase() {
            return Ok(CheckOutcome::fail(
                checked,
                Failure::at(
                    n,
                    format!("h={h}: no non-staircase odd representation ({rep:?})"),
                ),
            ));
        }
        let terms = triple_triangular_count(n as u64, 2);
        if terms < 2 {
            return Ok(CheckOutcome::fail(
                checked,
                Failure::at(n, format!("h={h}: series coefficient {terms} < 2")),
            ));
        }
        if let Some(&c) = counts.get(n) {
            if c < 2 {
                return Ok(CheckOutcome::fail(
                    checked,
                    Failure::at(n, format!("h={h}: a_4(n) = {c} < 2")),
                ));
            }
        }
        checked += 1;
    }
    Ok(CheckOutcome::pass(checked))
}
