//! Integer partitions in multiplicity form.
//!
//! A [`Partition`] stores its distinct bases together with their
//! multiplicities, largest base first. Two partitions are equal exactly when
//! their canonical pair lists are equal, so the derived `Eq`, `Ord` and
//! `Hash` impls compare partitions as multisets.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The modulus `k >= 2` that every statistic in this crate is taken with
/// respect to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(k: u64) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidModulus(k));
        }
        Ok(Modulus(k))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn divides(self, x: u64) -> bool {
        x.is_multiple_of(self.0)
    }

    pub fn is_even(self) -> bool {
        self.0.is_multiple_of(2)
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl TryFrom<u64> for Modulus {
    type Error = Error;

    fn try_from(k: u64) -> Result<Self> {
        Modulus::new(k)
    }
}

/// A partition written as `(base, multiplicity)` pairs, bases strictly
/// decreasing and every multiplicity at least one.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    pairs: Vec<(u64, u64)>,
}

impl Partition {
    /// The unique partition of zero.
    pub fn empty() -> Self {
        Partition { pairs: Vec::new() }
    }

    /// Merges equal bases, drops zero multiplicities and sorts the result.
    ///
    /// Rejects non-positive bases and negative multiplicities.
    pub fn canonicalize<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        let mut merged = Vec::new();
        for (base, multiplicity) in pairs {
            if base <= 0 || multiplicity < 0 {
                return Err(Error::InvalidPart { base, multiplicity });
            }
            merged.push((base as u64, multiplicity as u64));
        }
        Ok(Self::from_pairs(merged))
    }

    /// Same as [`Partition::canonicalize`] for input that is already known to
    /// have positive bases. Zero bases are a logic error.
    pub fn from_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let mut acc: BTreeMap<u64, u64> = BTreeMap::new();
        for (base, multiplicity) in pairs {
            debug_assert!(base >= 1, "zero base in partition");
            if multiplicity > 0 {
                *acc.entry(base).or_default() += multiplicity;
            }
        }
        Partition {
            pairs: acc.into_iter().rev().collect(),
        }
    }

    /// Builds a partition from a list of parts in any order.
    pub fn from_parts<I>(parts: I) -> Self
    where
        I: IntoIterator<Item = u64>,
    {
        Self::from_pairs(parts.into_iter().map(|p| (p, 1)))
    }

    /// Builds from a non-increasing part list by run-length encoding.
    fn from_sorted_parts(parts: &[u64]) -> Self {
        let mut pairs: Vec<(u64, u64)> = Vec::new();
        for &p in parts {
            match pairs.last_mut() {
                Some((b, m)) if *b == p => *m += 1,
                _ => pairs.push((p, 1)),
            }
        }
        Partition { pairs }
    }

    pub fn pairs(&self) -> &[(u64, u64)] {
        &self.pairs
    }

    pub fn into_pairs(self) -> Vec<(u64, u64)> {
        self.pairs
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Number of distinct bases.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    /// The integer this partition sums to.
    pub fn weight(&self) -> u64 {
        self.pairs.iter().map(|&(b, m)| b * m).sum()
    }

    /// Number of parts counted with multiplicity.
    pub fn num_parts(&self) -> u64 {
        self.pairs.iter().map(|&(_, m)| m).sum()
    }

    /// Multiplicity of `base`, zero when absent.
    pub fn multiplicity(&self, base: u64) -> u64 {
        self.pairs
            .binary_search_by(|&(b, _)| base.cmp(&b))
            .map(|i| self.pairs[i].1)
            .unwrap_or(0)
    }

    /// Parts in non-increasing order, repeated by multiplicity.
    pub fn parts(&self) -> impl Iterator<Item = u64> + '_ {
        self.pairs
            .iter()
            .flat_map(|&(b, m)| std::iter::repeat_n(b, m as usize))
    }

    /// Franklin's statistics: `(number of even bases, number of repeated bases)`.
    pub fn part_stats(&self) -> (u64, u64) {
        let even = self.pairs.iter().filter(|&&(b, _)| b % 2 == 0).count();
        let repeated = self.pairs.iter().filter(|&&(_, m)| m >= 2).count();
        (even as u64, repeated as u64)
    }
}

impl fmt::Display for Partition {
    /// Renders as `3^2 2 1`; the empty partition renders as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return f.write_str("()");
        }
        for (i, &(b, m)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if m == 1 {
                write!(f, "{b}")?;
            } else {
                write!(f, "{b}^{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts whitespace-separated terms `base` or `base^mult` in any order;
    /// repeated bases are merged. `()` and the blank string denote the empty
    /// partition.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "()" {
            return Ok(Partition::empty());
        }
        let bad = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut pairs = Vec::new();
        for term in trimmed.split_whitespace() {
            let (base, mult) = match term.split_once('^') {
                Some((b, m)) => (b, m),
                None => (term, "1"),
            };
            let base: i64 = base.parse().map_err(|_| bad("base is not an integer"))?;
            let mult: i64 = mult
                .parse()
                .map_err(|_| bad("multiplicity is not an integer"))?;
            if mult < 1 {
                return Err(bad("multiplicity must be at least 1"));
            }
            pairs.push((base, mult));
        }
        Partition::canonicalize(pairs)
    }
}

/// Restrictions used by the enumerator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PartitionConstraint {
    All,
    /// Every multiplicity is strictly below `k`.
    MaxMultiplicityBelow(Modulus),
    /// Exactly one base is a multiple of `k`.
    ExactlyOneBaseDivisibleBy(Modulus),
    /// Exactly one base occurs `k` or more times.
    ExactlyOneMultiplicityAtLeast(Modulus),
}

impl PartitionConstraint {
    pub fn admits(&self, p: &Partition) -> bool {
        match *self {
            PartitionConstraint::All => true,
            PartitionConstraint::MaxMultiplicityBelow(k) => {
                p.pairs().iter().all(|&(_, m)| m < k.get())
            }
            PartitionConstraint::ExactlyOneBaseDivisibleBy(k) => {
                p.pairs().iter().filter(|&&(b, _)| k.divides(b)).count() == 1
            }
            PartitionConstraint::ExactlyOneMultiplicityAtLeast(k) => {
                p.pairs().iter().filter(|&&(_, m)| m >= k.get()).count() == 1
            }
        }
    }
}

/// Iterator over all partitions of `n` in reverse lexicographic order of
/// their non-increasing part lists: `(n)`, `(n-1, 1)`, `(n-2, 2)`, ...,
/// `(1^n)`. This is the order in which partitions are usually listed by hand.
#[derive(Debug, Clone)]
pub struct Partitions {
    parts: Vec<u64>,
    done: bool,
}

impl Partitions {
    pub fn new(n: u64) -> Self {
        let parts = if n == 0 { Vec::new() } else { vec![n] };
        Partitions { parts, done: false }
    }

    // Replace the rightmost part v > 1 (and the trailing ones) by the
    // greedy split of the freed weight into parts of size at most v - 1.
    fn advance(&mut self) -> bool {
        let mut freed = 0;
        while self.parts.last() == Some(&1) {
            self.parts.pop();
            freed += 1;
        }
        let Some(last) = self.parts.last_mut() else {
            return false;
        };
        *last -= 1;
        let cap = *last;
        freed += 1;
        while freed > 0 {
            let t = freed.min(cap);
            self.parts.push(t);
            freed -= t;
        }
        true
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let out = Partition::from_sorted_parts(&self.parts);
        if !self.advance() {
            self.done = true;
        }
        Some(out)
    }
}

/// Every partition of `n` admitted by `constraint`, each exactly once, in
/// the order produced by [`Partitions`].
pub fn enumerate_partitions(
    n: u64,
    constraint: PartitionConstraint,
) -> impl Iterator<Item = Partition> {
    Partitions::new(n).filter(move |p| constraint.admits(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn k(v: u64) -> Modulus {
        Modulus::new(v).unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn canonicalize_merges_and_sorts() {
        let c = Partition::canonicalize([(3, 1), (1, 3), (3, 1)]).unwrap();
        assert_eq!(c.pairs(), &[(3, 2), (1, 3)]);
        let c = Partition::canonicalize([(6, 1), (1, 2), (1, 1)]).unwrap();
        assert_eq!(c, p("6 1^3"));
        assert_eq!(Partition::canonicalize([]).unwrap(), Partition::empty());
        let c = Partition::canonicalize([(4, 0), (2, 1)]).unwrap();
        assert_eq!(c.pairs(), &[(2, 1)]);
    }

    #[test]
    fn canonicalize_rejects_bad_parts() {
        assert!(matches!(
            Partition::canonicalize([(0, 1)]),
            Err(Error::InvalidPart { base: 0, .. })
        ));
        assert!(Partition::canonicalize([(-2, 1)]).is_err());
        assert!(Partition::canonicalize([(2, -1)]).is_err());
    }

    #[test]
    fn weight_and_stats() {
        assert_eq!(p("3^2 2 1").weight(), 9);
        assert_eq!(p("4 3 1^2").weight(), 9);
        assert_eq!(Partition::empty().weight(), 0);
        assert_eq!(p("3^2 2 1").part_stats(), (1, 1));
        assert_eq!(p("1^9").part_stats(), (0, 1));
        assert_eq!(p("5 3 1").part_stats(), (0, 0));
        assert_eq!(p("3^2 2 1").num_parts(), 4);
        assert_eq!(p("3^2 2 1").multiplicity(3), 2);
        assert_eq!(p("3^2 2 1").multiplicity(4), 0);
    }

    #[test]
    fn render_and_parse() {
        assert_eq!(p("1 2 3^2").to_string(), "3^2 2 1");
        assert_eq!(Partition::empty().to_string(), "()");
        assert_eq!(p("()"), Partition::empty());
        assert_eq!(p("2 2 2"), p("2^3"));
        assert!("3^x".parse::<Partition>().is_err());
        assert!("0".parse::<Partition>().is_err());
        assert!("3^0".parse::<Partition>().is_err());
    }

    #[test]
    fn modulus_rejects_small() {
        assert_eq!(Modulus::new(1), Err(Error::InvalidModulus(1)));
        assert!(Modulus::new(0).is_err());
        assert_eq!(Modulus::new(2).unwrap().get(), 2);
    }

    #[test]
    fn nine_matches_hand_listings() {
        let all: Vec<String> = enumerate_partitions(9, PartitionConstraint::All)
            .map(|x| x.to_string())
            .collect();
        assert_eq!(all.len(), 30);
        assert_eq!(&all[..6], &["9", "8 1", "7 2", "7 1^2", "6 3", "6 2 1"]);
        assert_eq!(all.last().unwrap(), "1^9");

        let bounded: Vec<String> =
            enumerate_partitions(9, PartitionConstraint::MaxMultiplicityBelow(k(3)))
                .map(|x| x.to_string())
                .collect();
        let expected = [
            "9",
            "8 1",
            "7 2",
            "7 1^2",
            "6 3",
            "6 2 1",
            "5 4",
            "5 3 1",
            "5 2^2",
            "5 2 1^2",
            "4^2 1",
            "4 3 2",
            "4 3 1^2",
            "4 2^2 1",
            "3^2 2 1",
            "3 2^2 1^2",
        ];
        assert_eq!(bounded, expected);

        let one_div: Vec<String> =
            enumerate_partitions(9, PartitionConstraint::ExactlyOneBaseDivisibleBy(k(3)))
                .map(|x| x.to_string())
                .collect();
        let expected = [
            "9",
            "6 2 1",
            "6 1^3",
            "5 3 1",
            "4 3 2",
            "4 3 1^2",
            "3^3",
            "3^2 2 1",
            "3^2 1^3",
            "3 2^3",
            "3 2^2 1^2",
            "3 2 1^4",
            "3 1^6",
        ];
        assert_eq!(one_div, expected);

        let one_big: Vec<String> =
            enumerate_partitions(9, PartitionConstraint::ExactlyOneMultiplicityAtLeast(k(3)))
                .map(|x| x.to_string())
                .collect();
        let expected = [
            "6 1^3", "5 1^4", "4 2 1^3", "4 1^5", "3^3", "3^2 1^3", "3 2^3", "3 2 1^4", "3 1^6",
            "2^4 1", "2^2 1^5", "2 1^7", "1^9",
        ];
        assert_eq!(one_big, expected);
    }

    #[test]
    fn zero_is_the_empty_partition() {
        let all: Vec<_> = enumerate_partitions(0, PartitionConstraint::All).collect();
        assert_eq!(all, vec![Partition::empty()]);
        let bounded: Vec<_> =
            enumerate_partitions(0, PartitionConstraint::MaxMultiplicityBelow(k(2))).collect();
        assert_eq!(bounded, vec![Partition::empty()]);
        assert_eq!(
            enumerate_partitions(0, PartitionConstraint::ExactlyOneBaseDivisibleBy(k(2))).count(),
            0
        );
        assert_eq!(
            enumerate_partitions(0, PartitionConstraint::ExactlyOneMultiplicityAtLeast(k(2)))
                .count(),
            0
        );
    }

    // Independent count of partitions of n with parts at most `max`.
    fn brute_count(n: u64, max: u64) -> u64 {
        if n == 0 {
            return 1;
        }
        (1..=max.min(n))
            .map(|part| brute_count(n - part, part))
            .sum()
    }

    #[test]
    fn counts_match_recursive_oracle() {
        for n in 0..=25 {
            assert_eq!(
                Partitions::new(n).count() as u64,
                brute_count(n, n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn constrained_streams_are_sound_and_duplicate_free() {
        for n in 0..=22u64 {
            for kv in 2..=5 {
                let kk = k(kv);
                for c in [
                    PartitionConstraint::All,
                    PartitionConstraint::MaxMultiplicityBelow(kk),
                    PartitionConstraint::ExactlyOneBaseDivisibleBy(kk),
                    PartitionConstraint::ExactlyOneMultiplicityAtLeast(kk),
                ] {
                    let mut seen = HashSet::new();
                    for x in enumerate_partitions(n, c) {
                        assert_eq!(x.weight(), n);
                        assert!(c.admits(&x));
                        assert!(seen.insert(x));
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn canonicalize_is_idempotent(raw in prop::collection::vec((1i64..20, 0i64..6), 0..12)) {
            let once = Partition::canonicalize(raw.clone()).unwrap();
            let again = Partition::canonicalize(
                once.pairs().iter().map(|&(b, m)| (b as i64, m as i64)),
            ).unwrap();
            prop_assert_eq!(&once, &again);
            let expected: i64 = raw.iter().map(|&(b, m)| b * m).sum();
            prop_assert_eq!(once.weight() as i64, expected);
            prop_assert!(once.pairs().windows(2).all(|w| w[0].0 > w[1].0));
            prop_assert!(once.pairs().iter().all(|&(_, m)| m >= 1));
        }

        #[test]
        fn display_parse_round_trip(raw in prop::collection::vec((1u64..30, 1u64..5), 0..8)) {
            let x = Partition::from_pairs(raw);
            prop_assert_eq!(x.to_string().parse::<Partition>().unwrap(), x);
        }
    }
}
