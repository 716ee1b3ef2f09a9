//! The counted sets behind `a_k(n)`, `b_{k,m}(n)` and `c_{k,m}(n)`.
//!
//! For a modulus `k`:
//!
//! - `a_k(n)` is the number of parts divisible by `k`, counted with
//!   multiplicity, over all partitions of `n` whose multiplicities are all
//!   below `k`.
//! - `b_{k,0}(n)` / `b_{k,1}(n)` count partitions of `n` with exactly one
//!   base divisible by `k`, split on whether that base's multiplicity is
//!   divisible by `k` (class 0) or not (class 1).
//! - `c_{k,0}(n)` / `c_{k,1}(n)` count partitions of `n` with exactly one
//!   multiplicity `>= k`, split on whether that base is divisible by `k`.
//!
//! The sets `A_k(n)` and `A'_k(n)` are materialized as [`MarkedPartition`]s
//! so the bijection module can act on them element by element.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Modulus, Partition, PartitionConstraint};
use crate::report::VerificationReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MarkedVariant {
    /// Every multiplicity is below `k`; `mark < multiplicity(pivot)`.
    InA,
    /// The pivot has multiplicity `>= k`, all others are below `k`;
    /// `mark < k`.
    InAPrime,
}

/// A partition with a distinguished base divisible by `k` and a mark.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MarkedPartition {
    pub partition: Partition,
    pub pivot_base: u64,
    pub mark: u64,
    pub variant: MarkedVariant,
}

impl MarkedPartition {
    /// Checks every invariant of the variant with respect to `k`.
    pub fn validate(&self, k: Modulus) -> Result<()> {
        let fail = |reason: &'static str| {
            Err(Error::InvalidMarked {
                partition: self.partition.to_string(),
                pivot: self.pivot_base,
                mark: self.mark,
                k: k.get(),
                reason,
            })
        };
        let pivot_mult = self.partition.multiplicity(self.pivot_base);
        if pivot_mult == 0 {
            return fail("pivot is not a base of the partition");
        }
        if !k.divides(self.pivot_base) {
            return fail("pivot is not divisible by k");
        }
        let others_small = self
            .partition
            .pairs()
            .iter()
            .all(|&(b, m)| b == self.pivot_base || m < k.get());
        if !others_small {
            return fail("a non-pivot multiplicity is at least k");
        }
        match self.variant {
            MarkedVariant::InA => {
                if pivot_mult >= k.get() {
                    return fail("pivot multiplicity is at least k");
                }
                if self.mark >= pivot_mult {
                    return fail("mark is not below the pivot multiplicity");
                }
            }
            MarkedVariant::InAPrime => {
                if pivot_mult < k.get() {
                    return fail("pivot multiplicity is below k");
                }
                if self.mark >= k.get() {
                    return fail("mark is not below k");
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for MarkedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(({}), {}, {})",
            self.partition, self.pivot_base, self.mark
        )
    }
}

/// One `(n, k)` row of counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CountVector {
    pub n: u64,
    pub k: u64,
    pub a: u64,
    pub b0: u64,
    pub b1: u64,
    pub c0: u64,
    pub c1: u64,
}

impl CountVector {
    pub const CSV_HEADER: &'static str = "n,k,a,b0,b1,c0,c1";

    /// `n,k,a,b0,b1,c0,c1`, without a trailing newline.
    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.n, self.k, self.a, self.b0, self.b1, self.c0, self.c1
        )
    }
}

/// Materializes `A_k(n)` and `A'_k(n)`, in enumeration order of the
/// underlying partitions, then by pivot (largest first), then by mark.
pub fn build_marked_sets(n: u64, k: Modulus) -> (Vec<MarkedPartition>, Vec<MarkedPartition>) {
    let mut in_a = Vec::new();
    for p in enumerate_partitions(n, PartitionConstraint::MaxMultiplicityBelow(k)) {
        for &(base, mult) in p.pairs() {
            if k.divides(base) {
                for mark in 0..mult {
                    in_a.push(MarkedPartition {
                        partition: p.clone(),
                        pivot_base: base,
                        mark,
                        variant: MarkedVariant::InA,
                    });
                }
            }
        }
    }

    let mut in_a_prime = Vec::new();
    for p in enumerate_partitions(n, PartitionConstraint::ExactlyOneMultiplicityAtLeast(k)) {
        let &(base, _) = p
            .pairs()
            .iter()
            .find(|&&(_, m)| m >= k.get())
            .expect("constraint guarantees one large multiplicity");
        if k.divides(base) {
            for mark in 0..k.get() {
                in_a_prime.push(MarkedPartition {
                    partition: p.clone(),
                    pivot_base: base,
                    mark,
                    variant: MarkedVariant::InAPrime,
                });
            }
        }
    }
    (in_a, in_a_prime)
}

/// `a_k(n)` by streaming enumeration.
pub fn a_direct(n: u64, k: Modulus) -> u64 {
    enumerate_partitions(n, PartitionConstraint::MaxMultiplicityBelow(k))
        .map(|p| {
            p.pairs()
                .iter()
                .filter(|&&(b, _)| k.divides(b))
                .map(|&(_, m)| m)
                .sum::<u64>()
        })
        .sum()
}

/// All five counts for one `(n, k)` by streaming enumeration.
pub fn bc_direct(n: u64, k: Modulus) -> CountVector {
    let (mut b0, mut b1) = (0, 0);
    for p in enumerate_partitions(n, PartitionConstraint::ExactlyOneBaseDivisibleBy(k)) {
        let &(_, m) = p.pairs().iter().find(|&&(b, _)| k.divides(b)).unwrap();
        if k.divides(m) {
            b0 += 1;
        } else {
            b1 += 1;
        }
    }
    let (mut c0, mut c1) = (0, 0);
    for p in enumerate_partitions(n, PartitionConstraint::ExactlyOneMultiplicityAtLeast(k)) {
        let &(b, _) = p.pairs().iter().find(|&&(_, m)| m >= k.get()).unwrap();
        if k.divides(b) {
            c0 += 1;
        } else {
            c1 += 1;
        }
    }
    CountVector {
        n,
        k: k.get(),
        a: a_direct(n, k),
        b0,
        b1,
        c0,
        c1,
    }
}

/// `(b_e(n), b_o(n))`: partitions of `n` with exactly one distinct even
/// base, split on whether the number of parts (with multiplicity) is even
/// or odd.
pub fn am_parity_counts(n: u64) -> (u64, u64) {
    let two = Modulus::new(2).unwrap();
    let (mut even, mut odd) = (0, 0);
    for p in enumerate_partitions(n, PartitionConstraint::ExactlyOneBaseDivisibleBy(two)) {
        if p.num_parts() % 2 == 0 {
            even += 1;
        } else {
            odd += 1;
        }
    }
    (even, odd)
}

/// Checks, for every `0 <= n <= n_max`:
/// `b0 = c0`, `b1 = c1`, `a = b1 - (k-1) b0`, `a = c1 - (k-1) c0`,
/// `|A_k(n)| = a` and `|A'_k(n)| = k c0`.
pub fn verify_main_theorem(k: Modulus, n_max: u64) -> VerificationReport {
    let mut report = VerificationReport::new("main", Some(k.get()), (0, n_max));
    let km1 = i128::from(k.get() - 1);
    for n in 0..=n_max {
        report.count_checked();
        let cv = bc_direct(n, k);
        let (a_set, a_prime_set) = build_marked_sets(n, k);
        let a = i128::from(cv.a);
        let (b0, b1, c0, c1) = (
            i128::from(cv.b0),
            i128::from(cv.b1),
            i128::from(cv.c0),
            i128::from(cv.c1),
        );
        report.compare(n, Some("b0 = c0"), b0, c0);
        report.compare(n, Some("b1 = c1"), b1, c1);
        report.compare(n, Some("a = b1 - (k-1) b0"), a, b1 - km1 * b0);
        report.compare(n, Some("a = c1 - (k-1) c0"), a, c1 - km1 * c0);
        report.compare(n, Some("|A| = a"), a_set.len() as i128, a);
        report.compare(
            n,
            Some("|A'| = k c0"),
            a_prime_set.len() as i128,
            i128::from(k.get()) * c0,
        );
    }
    report
}
