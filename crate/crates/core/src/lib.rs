//! Parts divisible by `k` in partitions whose multiplicities are all below
//! `k`.
//!
//! The crate counts `a_k(n)`, `b_{k,m}(n)` and `c_{k,m}(n)` by exhaustive
//! enumeration, implements the two explicit bijections relating them,
//! computes their generating functions as exact truncated power series, and
//! checks the pentagonal, triangular and square recurrences that follow.
//!
//! ```
//! use glaisher::{a_direct, gf_a_k, Modulus};
//!
//! let k = Modulus::new(3).unwrap();
//! assert_eq!(a_direct(9, k), 10);
//! assert_eq!(gf_a_k(k, 9).coeff(9).to_string(), "10");
//! ```

pub mod bijection;
pub mod counting;
pub mod error;
pub mod partition;
pub mod recurrence;
pub mod report;
pub mod sequence;
pub mod series;
pub mod table;

pub use bijection::{a_to_c, b_to_c, c_to_a, c_to_b, expand_base_k, verify_bijections};
pub use counting::{
    a_direct, am_parity_counts, bc_direct, build_marked_sets, verify_main_theorem, CountVector,
    MarkedPartition, MarkedVariant,
};
pub use error::{Error, Result};
pub use partition::{enumerate_partitions, Modulus, Partition, PartitionConstraint, Partitions};
pub use recurrence::{
    check_p_square_identity, check_pentagonal, check_square, check_square_identity,
    check_triangular, offsets, search_both_square, zero_coefficient_set,
    zero_coefficient_set_square_preset, OffsetKind,
};
pub use report::{Failure, VerificationReport};
pub use series::{
    gf_a_k, gf_p, gf_p_distinct_odd, neg_pochhammer, pochhammer, theta_series, ThetaKind,
    TruncatedSeries,
};
