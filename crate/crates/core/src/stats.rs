//! Hook-length counts `a_{t,k}(n)` over t-cores and bias tables built from them.

use std::fmt;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate::{t_cores_of, visit_t_cores, visit_t_cores_of, PartFilter};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// A `(t, k)` pair naming the statistic `a_{t,k}`; displayed as `t.k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HookKey {
    pub t: usize,
    pub k: usize,
}

impl HookKey {
    pub const fn new(t: usize, k: usize) -> Self {
        HookKey { t, k }
    }
}

impl fmt::Display for HookKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.t, self.k)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountQuery {
    pub t: usize,
    pub k: usize,
    pub n: usize,
    pub filter: PartFilter,
}

impl CountQuery {
    pub fn new(t: usize, k: usize, n: usize) -> Self {
        CountQuery {
            t,
            k,
            n,
            filter: PartFilter::none(),
        }
    }

    pub fn with_filter(mut self, filter: PartFilter) -> Self {
        self.filter = filter;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.t < 2 {
            return Err(Error::InvalidCoreParameter(self.t));
        }
        if self.k == 0 {
            return Err(Error::Domain("hook length k must be positive".into()));
        }
        Ok(())
    }
}

/// Total number of `k`-hooks over the t-cores of `n` admitted by the filter.
pub fn a_tk(q: &CountQuery) -> Result<u64> {
    q.validate()?;
    t_cores_of(q.n, q.t, &q.filter)?.try_fold(0u64, |acc, p| {
        acc.checked_add(p.hook_profile().count(q.k) as u64)
            .ok_or(Error::Overflow("a_tk"))
    })
}

/// `a^{-C}_{t,k}(n)`: [`a_tk`] over t-cores with no part in `excluded`.
pub fn a_tk_restricted(t: usize, k: usize, n: usize, excluded: &[usize]) -> Result<u64> {
    a_tk(&CountQuery::new(t, k, n).with_filter(PartFilter::excluding(excluded.iter().copied())))
}

/// Comparison between adjacent terms of a bias chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "=")]
    Eq,
}

impl Relation {
    pub fn holds(self, lhs: u64, rhs: u64) -> bool {
        match self {
            Relation::Ge => lhs >= rhs,
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Ge => ">=",
            Relation::Le => "<=",
            Relation::Eq => "=",
        }
    }
}

impl std::str::FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            ">=" | "ge" | "≥" => Ok(Relation::Ge),
            "<=" | "le" | "≤" => Ok(Relation::Le),
            "=" | "==" | "eq" => Ok(Relation::Eq),
            other => Err(Error::Domain(format!("unknown relation {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "HOLDS")]
    Holds,
    #[serde(rename = "FAILS")]
    Fails,
    /// The enumeration universe is empty for this `n`.
    #[serde(rename = "NOT-APPLICABLE")]
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "HOLDS",
            Verdict::Fails => "FAILS",
            Verdict::NotApplicable => "NOT-APPLICABLE",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KeyedValue {
    pub t: usize,
    pub k: usize,
    pub value: u64,
}

/// One row of a bias table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiasRecord {
    pub n: usize,
    pub verdict: Verdict,
    pub values: Vec<KeyedValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Partition>,
}

impl BiasRecord {
    pub fn value(&self, key: HookKey) -> Option<u64> {
        self.values
            .iter()
            .find(|v| v.t == key.t && v.k == key.k)
            .map(|v| v.value)
    }

    pub fn csv_header(keys: &[HookKey]) -> String {
        let mut out = String::from("n,verdict");
        for key in keys {
            out.push_str(&format!(",{key}"));
        }
        out
    }

    pub fn csv_row(&self) -> String {
        let mut out = format!("{},{}", self.n, self.verdict);
        for v in &self.values {
            out.push_str(&format!(",{}", v.value));
        }
        out
    }
}

/// Every `a_{t,k}(n)` and `a_t(n)` for `n <= n_max`, gathered in a single
/// pass over the t-cores.
#[derive(Clone, Debug)]
pub struct HookTable {
    t: usize,
    n_max: usize,
    filter: PartFilter,
    cores: Vec<u64>,
    hooks: Vec<Vec<u64>>,
}

impl HookTable {
    pub fn build(t: usize, n_max: usize, filter: &PartFilter) -> Result<Self> {
        let mut cores = vec![0u64; n_max + 1];
        let mut hooks: Vec<Vec<u64>> = vec![Vec::new(); n_max + 1];
        let mut overflow = false;
        visit_t_cores(n_max, t, filter, |node| {
            let n = node.size();
            cores[n] += 1;
            let row = &mut hooks[n];
            let counts = node.hook_counts();
            if row.len() < counts.len() {
                row.resize(counts.len(), 0);
            }
            for (slot, &c) in row.iter_mut().zip(counts) {
                match slot.checked_add(c) {
                    Some(v) => *slot = v,
                    None => overflow = true,
                }
            }
        })?;
        if overflow {
            return Err(Error::Overflow("hook table"));
        }
        Ok(HookTable {
            t,
            n_max,
            filter: filter.clone(),
            cores,
            hooks,
        })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn filter(&self) -> &PartFilter {
        &self.filter
    }

    /// `a_{t,k}(n)`; zero for `n` beyond the table.
    pub fn value(&self, n: usize, k: usize) -> u64 {
        self.hooks
            .get(n)
            .and_then(|row| row.get(k))
            .copied()
            .unwrap_or(0)
    }

    /// `a_t(n)` under the table's filter.
    pub fn core_count(&self, n: usize) -> u64 {
        self.cores.get(n).copied().unwrap_or(0)
    }

    /// The largest `k` with a possibly non-zero `a_{t,k}(n)`.
    pub fn max_hook(&self, n: usize) -> usize {
        self.hooks
            .get(n)
            .map_or(0, |row| row.len().saturating_sub(1))
    }

    /// `(k, a_{t,k}(n))` for every `k >= 1` with a non-zero count.
    pub fn nonzero(&self, n: usize) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.hooks
            .get(n)
            .into_iter()
            .flat_map(|row| row.iter().copied().enumerate().skip(1))
            .filter(|&(_, v)| v != 0)
    }
}

/// A chain `a_{key₀}(n) rel₀ a_{key₁}(n) rel₁ …`, evaluated under one filter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiasChain {
    pub terms: Vec<HookKey>,
    pub relations: Vec<Relation>,
    pub filter: PartFilter,
}

impl BiasChain {
    pub fn new(terms: Vec<HookKey>, relations: Vec<Relation>, filter: PartFilter) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::Domain("a bias chain needs at least one term".into()));
        }
        if relations.len() + 1 != terms.len() {
            return Err(Error::Domain(format!(
                "{} terms need {} relations, got {}",
                terms.len(),
                terms.len() - 1,
                relations.len()
            )));
        }
        if let Some(key) = terms.iter().find(|key| key.t < 2 || key.k == 0) {
            return Err(Error::Domain(format!("invalid term a_{{{key}}}")));
        }
        Ok(BiasChain {
            terms,
            relations,
            filter,
        })
    }

    /// A chain over a single `t`.
    pub fn single(
        t: usize,
        ks: &[usize],
        relations: Vec<Relation>,
        filter: PartFilter,
    ) -> Result<Self> {
        Self::new(
            ks.iter().map(|&k| HookKey::new(t, k)).collect(),
            relations,
            filter,
        )
    }

    fn core_parameters(&self) -> Vec<usize> {
        let mut ts: Vec<usize> = self.terms.iter().map(|key| key.t).collect();
        ts.sort_unstable();
        ts.dedup();
        ts
    }

    fn record(&self, n: usize, tables: &[HookTable]) -> BiasRecord {
        let table = |t: usize| tables.iter().find(|tab| tab.t() == t).expect("table for t");
        let values: Vec<KeyedValue> = self
            .terms
            .iter()
            .map(|key| KeyedValue {
                t: key.t,
                k: key.k,
                value: table(key.t).value(n, key.k),
            })
            .collect();
        let universe_empty = tables.iter().all(|tab| tab.core_count(n) == 0);
        let verdict = if universe_empty {
            Verdict::NotApplicable
        } else if self
            .relations
            .iter()
            .zip(values.windows(2))
            .all(|(rel, pair)| rel.holds(pair[0].value, pair[1].value))
        {
            Verdict::Holds
        } else {
            Verdict::Fails
        };
        BiasRecord {
            n,
            verdict,
            values,
            witness: None,
        }
    }
}

/// One record per `n` in `range` for an arbitrary chain.
pub fn chain_table(chain: &BiasChain, range: RangeInclusive<usize>) -> Result<Vec<BiasRecord>> {
    let n_hi = *range.end();
    let tables = chain
        .core_parameters()
        .into_par_iter()
        .map(|t| HookTable::build(t, n_hi, &chain.filter))
        .collect::<Result<Vec<_>>>()?;
    Ok(range.map(|n| chain.record(n, &tables)).collect())
}

/// One record per `n` for the chain `a_{t,ks[0]} rel a_{t,ks[1]} …`.
pub fn bias_table(
    t: usize,
    ks: &[usize],
    relations: &[Relation],
    range: RangeInclusive<usize>,
    filter: &PartFilter,
) -> Result<Vec<BiasRecord>> {
    if ks.is_empty() {
        return Err(Error::Domain("bias table needs at least one k".into()));
    }
    let chain = BiasChain::single(t, ks, relations.to_vec(), filter.clone())?;
    chain_table(&chain, range)
}

/// Compares `#k1-hooks` against `#k2-hooks` on every t-core of `n`
/// individually; the witness is the first violator in stream order.
pub fn per_partition_compare(
    t: usize,
    n: usize,
    k1: usize,
    k2: usize,
    filter: &PartFilter,
) -> Result<BiasRecord> {
    let mut totals = [0u64; 2];
    let mut witness = None;
    let mut any = false;
    for p in t_cores_of(n, t, filter)? {
        any = true;
        let prof = p.hook_profile();
        let (c1, c2) = (prof.count(k1) as u64, prof.count(k2) as u64);
        totals[0] = totals[0]
            .checked_add(c1)
            .ok_or(Error::Overflow("per-partition totals"))?;
        totals[1] = totals[1]
            .checked_add(c2)
            .ok_or(Error::Overflow("per-partition totals"))?;
        if c1 < c2 && witness.is_none() {
            witness = Some(p);
        }
    }
    let verdict = match (any, &witness) {
        (false, _) => Verdict::NotApplicable,
        (true, None) => Verdict::Holds,
        (true, Some(_)) => Verdict::Fails,
    };
    Ok(BiasRecord {
        n,
        verdict,
        values: vec![
            KeyedValue {
                t,
                k: k1,
                value: totals[0],
            },
            KeyedValue {
                t,
                k: k2,
                value: totals[1],
            },
        ],
        witness,
    })
}

/// Checks a single-`t` chain on every individual t-core of size at most
/// `n_max`. Returns the smallest violating partition (by size, then stream
/// order), if any.
pub fn per_partition_chain_violation(
    t: usize,
    ks: &[usize],
    relations: &[Relation],
    n_max: usize,
    filter: &PartFilter,
) -> Result<Option<Partition>> {
    if relations.len() + 1 != ks.len() {
        return Err(Error::Domain(
            "relations must sit between consecutive k".into(),
        ));
    }
    let mut worst: Option<Partition> = None;
    visit_t_cores(n_max, t, filter, |node| {
        let ok = relations
            .iter()
            .zip(ks.windows(2))
            .all(|(rel, pair)| rel.holds(node.hook_count(pair[0]), node.hook_count(pair[1])));
        if !ok {
            let p = node.to_partition();
            let better = match &worst {
                None => true,
                Some(w) => (p.size(), std::cmp::Reverse(&p)) < (w.size(), std::cmp::Reverse(w)),
            };
            if better {
                worst = Some(p);
            }
        }
    })?;
    Ok(worst)
}

/// Raw `a_{t,k}(n)` rows for a range of `n`, computed per `n` in parallel.
pub fn count_rows(
    t: usize,
    ks: &[usize],
    range: RangeInclusive<usize>,
    filter: &PartFilter,
) -> Result<Vec<(usize, usize, u64)>> {
    if t < 2 {
        return Err(Error::InvalidCoreParameter(t));
    }
    if ks.contains(&0) {
        return Err(Error::Domain("hook length k must be positive".into()));
    }
    let per_n = range
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|n| {
            let mut sums = vec![0u64; ks.len()];
            visit_t_cores_of(n, t, filter, |node| {
                for (s, &k) in sums.iter_mut().zip(ks) {
                    *s += node.hook_count(k);
                }
            })?;
            Ok(ks
                .iter()
                .zip(sums)
                .map(|(&k, v)| (n, k, v))
                .collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(per_n.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn none() -> PartFilter {
        PartFilter::none()
    }

    #[test]
    fn a_tk_examples() {
        assert_eq!(a_tk(&CountQuery::new(2, 1, 6)).unwrap(), 3);
        assert_eq!(a_tk(&CountQuery::new(4, 1, 4)).unwrap(), 1);
        assert_eq!(a_tk(&CountQuery::new(4, 2, 4)).unwrap(), 2);
        assert_eq!(a_tk(&CountQuery::new(4, 2, 3)).unwrap(), 2);
        assert_eq!(a_tk(&CountQuery::new(4, 3, 3)).unwrap(), 3);
        for t in 2..6 {
            for k in 1..5 {
                assert_eq!(a_tk(&CountQuery::new(t, k, 0)).unwrap(), 0);
            }
        }
        assert!(a_tk(&CountQuery::new(1, 1, 3)).is_err());
        assert!(a_tk(&CountQuery::new(3, 0, 3)).is_err());
    }

    #[test]
    fn restricted_examples() {
        assert_eq!(a_tk_restricted(4, 1, 9, &[1, 2]).unwrap(), 2);
        assert_eq!(a_tk_restricted(4, 1, 5, &[1, 2]).unwrap(), 0);
        assert_eq!(a_tk_restricted(4, 3, 9, &[1, 2]).unwrap(), 2);
    }

    #[test]
    fn bias_table_examples() {
        let rows =
            bias_table(3, &[1, 2, 4], &[Relation::Ge, Relation::Ge], 4..=4, &none()).unwrap();
        assert_eq!(rows[0].verdict, Verdict::Holds);
        let vals: Vec<u64> = rows[0].values.iter().map(|v| v.value).collect();
        assert_eq!(vals, vec![4, 2, 2]);

        let rows = bias_table(4, &[1, 3], &[Relation::Ge], 0..=20, &none()).unwrap();
        assert_eq!(rows.len(), 21);
        assert!(rows.iter().all(|r| r.verdict == Verdict::Holds));

        let rows =
            bias_table(5, &[1, 3, 6], &[Relation::Ge, Relation::Ge], 7..=7, &none()).unwrap();
        assert_eq!(rows[0].verdict, Verdict::Holds);
        assert_eq!(rows[0].csv_row(), "7,HOLDS,12,6,2");
    }

    #[test]
    fn bias_table_errors() {
        assert!(bias_table(3, &[], &[], 0..=3, &none()).is_err());
        assert!(bias_table(3, &[1, 2], &[], 0..=3, &none()).is_err());
    }

    #[test]
    fn not_applicable_when_universe_empty() {
        let rows = bias_table(
            4,
            &[1, 3],
            &[Relation::Eq],
            5..=5,
            &PartFilter::excluding([1, 2]),
        )
        .unwrap();
        assert_eq!(rows[0].verdict, Verdict::NotApplicable);
        let rec = per_partition_compare(2, 5, 1, 3, &none()).unwrap();
        assert_eq!(rec.verdict, Verdict::NotApplicable);
    }

    #[test]
    fn per_partition_examples() {
        let rec = per_partition_compare(4, 12, 1, 3, &none()).unwrap();
        assert_eq!(rec.verdict, Verdict::Holds);
        let rec = per_partition_compare(3, 10, 1, 2, &none()).unwrap();
        assert_eq!(rec.verdict, Verdict::Holds);
        let rec = per_partition_compare(2, 6, 1, 3, &none()).unwrap();
        assert_eq!(rec.verdict, Verdict::Holds);
        assert!(rec.witness.is_none());
    }

    #[test]
    fn per_partition_failure_has_witness() {
        // (2,1) has one 3-hook and two 1-hooks.
        let rec = per_partition_compare(2, 3, 3, 1, &none()).unwrap();
        assert_eq!(rec.verdict, Verdict::Fails);
        assert_eq!(rec.witness.unwrap().to_string(), "[2,1]");
    }

    #[test]
    fn table_agrees_with_direct_counts() {
        let f = PartFilter::excluding([1]);
        let table = HookTable::build(4, 25, &f).unwrap();
        for n in 0..=25 {
            for k in 1..=8 {
                let direct = a_tk(&CountQuery::new(4, k, n).with_filter(f.clone())).unwrap();
                assert_eq!(table.value(n, k), direct, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn count_rows_match_table() {
        let table = HookTable::build(5, 20, &none()).unwrap();
        let rows = count_rows(5, &[1, 3, 6], 0..=20, &none()).unwrap();
        for (n, k, v) in rows {
            assert_eq!(v, table.value(n, k));
        }
    }

    #[test]
    fn relation_parsing() {
        assert_eq!(">=".parse::<Relation>().unwrap(), Relation::Ge);
        assert_eq!("<=".parse::<Relation>().unwrap(), Relation::Le);
        assert_eq!("=".parse::<Relation>().unwrap(), Relation::Eq);
        assert!("<".parse::<Relation>().is_err());
    }
}
