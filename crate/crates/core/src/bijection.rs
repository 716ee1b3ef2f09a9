//! Explicit bijections `B_{k,m}(n) <-> C_{k,m}(n)` and
//! `A_k(n) ∪ A'_k(n) <-> C_{k,0}(n) ∪ C_{k,1}(n)`.
//!
//! The first map is Glaisher's base-`k` regrouping applied to every base not
//! divisible by `k`, with the single `k`-divisible block `a^b` transposed to
//! `b^a`. The second removes the pivot block `λ^{m_λ}` of a marked partition
//! and reinserts it as `λ^{mark}` plus `(m_λ - mark)^λ`.
//!
//! Every map checks membership of its input first and returns
//! [`Error::NotInDomain`] / [`Error::InvalidMarked`] rather than producing
//! garbage.

use std::collections::BTreeSet;

use crate::counting::{build_marked_sets, MarkedPartition, MarkedVariant};
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Modulus, Partition, PartitionConstraint};
use crate::report::VerificationReport;

/// Class index `m` of a partition in `B_{k,0} ∪ B_{k,1}` or `C_{k,0} ∪ C_{k,1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Class {
    Zero,
    One,
}

/// Nonzero base-`k` digits of `m` as `(digit, place)`, lowest place first.
pub fn expand_base_k(m: u64, k: Modulus) -> Result<Vec<(u64, u32)>> {
    if m == 0 {
        return Err(Error::ZeroMultiplicity);
    }
    let mut digits = Vec::new();
    let mut rest = m;
    let mut place = 0;
    while rest > 0 {
        let d = rest % k.get();
        if d != 0 {
            digits.push((d, place));
        }
        rest /= k.get();
        place += 1;
    }
    Ok(digits)
}

/// Splits `x` as `k^j * y` with `k ∤ y`.
fn strip_powers(mut x: u64, k: Modulus) -> (u64, u32) {
    let mut j = 0;
    while k.divides(x) {
        x /= k.get();
        j += 1;
    }
    (x, j)
}

/// The unique `(base, multiplicity)` whose base is divisible by `k`, if the
/// partition lies in `B_{k,0} ∪ B_{k,1}`.
fn b_witness(p: &Partition, k: Modulus) -> Option<(u64, u64)> {
    let mut it = p.pairs().iter().filter(|&&(b, _)| k.divides(b));
    match (it.next(), it.next()) {
        (Some(&w), None) => Some(w),
        _ => None,
    }
}

/// The unique `(base, multiplicity)` with multiplicity `>= k`, if the
/// partition lies in `C_{k,0} ∪ C_{k,1}`.
fn c_witness(p: &Partition, k: Modulus) -> Option<(u64, u64)> {
    let mut it = p.pairs().iter().filter(|&&(_, m)| m >= k.get());
    match (it.next(), it.next()) {
        (Some(&w), None) => Some(w),
        _ => None,
    }
}

/// Class of `p` in `B_{k,0} ∪ B_{k,1}`, or `None` if it is not a member.
pub fn b_class(p: &Partition, k: Modulus) -> Option<Class> {
    b_witness(p, k).map(|(_, m)| {
        if k.divides(m) {
            Class::Zero
        } else {
            Class::One
        }
    })
}

/// Class of `p` in `C_{k,0} ∪ C_{k,1}`, or `None` if it is not a member.
pub fn c_class(p: &Partition, k: Modulus) -> Option<Class> {
    c_witness(p, k).map(|(b, _)| {
        if k.divides(b) {
            Class::Zero
        } else {
            Class::One
        }
    })
}

fn not_in(p: &Partition, set: &'static str, k: Modulus) -> Error {
    Error::NotInDomain {
        partition: p.to_string(),
        set,
        k: k.get(),
    }
}

/// `B_{k,m}(n) -> C_{k,m}(n)`.
pub fn b_to_c(p: &Partition, k: Modulus) -> Result<Partition> {
    let (a, b) = b_witness(p, k).ok_or_else(|| not_in(p, "B_k,0 ∪ B_k,1", k))?;
    let mut out = Vec::new();
    for &(base, mult) in p.pairs() {
        if base == a {
            continue;
        }
        for (digit, place) in expand_base_k(mult, k)? {
            out.push((base * k.get().pow(place), digit));
        }
    }
    out.push((b, a));
    Ok(Partition::from_pairs(out))
}

/// `C_{k,m}(n) -> B_{k,m}(n)`, the inverse of [`b_to_c`].
pub fn c_to_b(p: &Partition, k: Modulus) -> Result<Partition> {
    let (b, alpha) = c_witness(p, k).ok_or_else(|| not_in(p, "C_k,0 ∪ C_k,1", k))?;
    let r = alpha % k.get();
    let a = alpha - r;
    let mut out = Vec::new();
    for &(base, mult) in p.pairs() {
        let mult = if base == b { r } else { mult };
        if mult == 0 {
            continue;
        }
        let (core, j) = strip_powers(base, k);
        out.push((core, mult * k.get().pow(j)));
    }
    out.push((a, b));
    Ok(Partition::from_pairs(out))
}

/// `A_k(n) ∪ A'_k(n) -> C_{k,0}(n) ∪ C_{k,1}(n)`.
pub fn a_to_c(mp: &MarkedPartition, k: Modulus) -> Result<Partition> {
    mp.validate(k)?;
    let pivot = mp.pivot_base;
    let pivot_mult = mp.partition.multiplicity(pivot);
    let rest = mp
        .partition
        .pairs()
        .iter()
        .copied()
        .filter(|&(b, _)| b != pivot);
    Ok(Partition::from_pairs(
        rest.chain([(pivot, mp.mark), (pivot_mult - mp.mark, pivot)]),
    ))
}

/// `C_{k,0}(n) ∪ C_{k,1}(n) -> A_k(n) ∪ A'_k(n)`, the inverse of [`a_to_c`].
pub fn c_to_a(p: &Partition, k: Modulus) -> Result<MarkedPartition> {
    let (b, alpha) = c_witness(p, k).ok_or_else(|| not_in(p, "C_k,0 ∪ C_k,1", k))?;
    let r = alpha % k.get();
    let pivot = alpha - r;

    // Take out the transposed block b^pivot first; whatever multiplicity of
    // `pivot` remains afterwards is the mark.
    let mut pairs: Vec<(u64, u64)> = p
        .pairs()
        .iter()
        .map(|&(base, m)| {
            if base == b {
                (base, m - pivot)
            } else {
                (base, m)
            }
        })
        .collect();
    let mark = pairs
        .iter()
        .find(|&&(base, _)| base == pivot)
        .map_or(0, |&(_, m)| m);
    pairs.retain(|&(base, _)| base != pivot);
    let pivot_mult = b + mark;
    pairs.push((pivot, pivot_mult));

    let variant = if pivot_mult >= k.get() {
        MarkedVariant::InAPrime
    } else {
        MarkedVariant::InA
    };
    let mp = MarkedPartition {
        partition: Partition::from_pairs(pairs),
        pivot_base: pivot,
        mark,
        variant,
    };
    mp.validate(k)?;
    Ok(mp)
}

/// Tallies for one run of [`verify_bijections`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RoundTripCounts {
    pub b_elements: u64,
    pub c_elements: u64,
    pub marked_elements: u64,
}

impl RoundTripCounts {
    pub fn total(&self) -> u64 {
        // Each C element is round-tripped through both maps.
        self.b_elements + 2 * self.c_elements + self.marked_elements
    }
}

/// Exhaustively checks both bijections for `0 <= n <= n_max`.
///
/// Per `n`, each relation is recorded as `lhs = number of elements with the
/// property`, `rhs = number of elements it should hold for`: round trips in
/// both directions, weight and class preservation, and set equality of the
/// images with the enumerated `C` union.
pub fn verify_bijections(k: Modulus, n_max: u64) -> (VerificationReport, RoundTripCounts) {
    let mut report = VerificationReport::new("bijections", Some(k.get()), (0, n_max));
    let mut counts = RoundTripCounts::default();
    for n in 0..=n_max {
        report.count_checked();
        let bs: Vec<Partition> =
            enumerate_partitions(n, PartitionConstraint::ExactlyOneBaseDivisibleBy(k)).collect();
        let cs: Vec<Partition> =
            enumerate_partitions(n, PartitionConstraint::ExactlyOneMultiplicityAtLeast(k))
                .collect();
        let (a_set, a_prime_set) = build_marked_sets(n, k);
        let marked: Vec<MarkedPartition> = a_set.into_iter().chain(a_prime_set).collect();
        counts.b_elements += bs.len() as u64;
        counts.c_elements += cs.len() as u64;
        counts.marked_elements += marked.len() as u64;

        let c_set: BTreeSet<&Partition> = cs.iter().collect();

        let mut b_images = BTreeSet::new();
        let (mut b_round, mut b_weight, mut b_class_ok) = (0u64, 0u64, 0u64);
        for x in &bs {
            let Ok(y) = b_to_c(x, k) else { continue };
            if y.weight() == n {
                b_weight += 1;
            }
            if c_class(&y, k).is_some() && c_class(&y, k) == b_class(x, k) {
                b_class_ok += 1;
            }
            if c_to_b(&y, k).as_ref() == Ok(x) {
                b_round += 1;
            }
            b_images.insert(y);
        }
        let c_round_b = cs
            .iter()
            .filter(|y| {
                c_to_b(y, k)
                    .and_then(|x| b_to_c(&x, k))
                    .is_ok_and(|back| &back == *y)
            })
            .count() as u64;

        let mut a_images = BTreeSet::new();
        let (mut a_round, mut a_weight) = (0u64, 0u64);
        for mp in &marked {
            let Ok(y) = a_to_c(mp, k) else { continue };
            if y.weight() == n {
                a_weight += 1;
            }
            if c_to_a(&y, k).as_ref() == Ok(mp) {
                a_round += 1;
            }
            a_images.insert(y);
        }
        let c_round_a = cs
            .iter()
            .filter(|y| {
                c_to_a(y, k)
                    .and_then(|mp| a_to_c(&mp, k))
                    .is_ok_and(|back| &back == *y)
            })
            .count() as u64;

        let b_len = bs.len() as u64;
        let c_len = cs.len() as u64;
        let m_len = marked.len() as u64;
        report.compare(n, Some("c_to_b(b_to_c(x)) = x"), b_round, b_len);
        report.compare(n, Some("b_to_c(c_to_b(y)) = y"), c_round_b, c_len);
        report.compare(n, Some("b_to_c preserves weight"), b_weight, b_len);
        report.compare(n, Some("b_to_c preserves class"), b_class_ok, b_len);
        report.compare(
            n,
            Some("b_to_c image = C union"),
            u64::from(b_images.iter().eq(c_set.iter().copied())),
            1,
        );
        report.compare(n, Some("c_to_a(a_to_c(x)) = x"), a_round, m_len);
        report.compare(n, Some("a_to_c(c_to_a(y)) = y"), c_round_a, c_len);
        report.compare(n, Some("a_to_c preserves weight"), a_weight, m_len);
        report.compare(
            n,
            Some("a_to_c image = C union"),
            u64::from(a_images.iter().eq(c_set.iter().copied())),
            1,
        );
    }
    (report, counts)
}
