//! Exact enumeration of t-core partitions and their hook-length statistics.
//!
//! The crate counts `a_{t,k}(n)`, the number of hooks of length `k` summed
//! over all t-core partitions of `n`, optionally restricted to partitions
//! avoiding a set of part values. Around that it provides generating-function
//! oracles, structural checks for 3- and 4-cores, the hook-region scan and
//! the quadratic-form argument for 4-cores of triangular size.
//!
//! ```
//! use corehooks::{a_tk, CountQuery, Partition};
//!
//! let p: Partition = "[6,3,2,1]".parse().unwrap();
//! assert!(p.is_t_core(4).unwrap());
//! assert_eq!(a_tk(&CountQuery::new(4, 2, 4)).unwrap(), 2);
//! ```

pub mod cli;
pub mod enumerate;
pub mod error;
pub mod partition;
pub mod qseries;
pub mod quadform;
pub mod stats;
pub mod verify;

pub use enumerate::{
    count_t_cores, count_t_cores_up_to, partitions_of, t_cores_of, visit_t_cores, CoreNode,
    EnumStats, PartFilter,
};
pub use error::{Error, Result};
pub use partition::{Cell, HookProfile, Partition};
pub use qseries::{
    eta_quotient_tcore, series_mul, theta_triangular, triple_triangular_series, verify_identity,
    IdentityCheck, TruncatedSeries,
};
pub use quadform::{is_dickson_excluded, odd_representation, represent_ternary, OddRepresentation};
pub use stats::{
    a_tk, a_tk_restricted, bias_table, chain_table, per_partition_compare, BiasChain, BiasRecord,
    CountQuery, HookKey, HookTable, Relation, Verdict,
};
pub use verify::{
    check_3core_conditions, check_4core_conditions, prop_2core_check, region_theorem_scan,
    restricted_4core_formula_check, scan_conjecture_5core, verify_two_4cores, CheckOutcome,
    ConditionReport, RegionWitness, Statement,
};
