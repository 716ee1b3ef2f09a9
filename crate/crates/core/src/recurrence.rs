//! Recurrences satisfied by `a_k(n)` and `p(n)`, checked coefficientwise
//! against the generating functions, plus the searches for `n` where the
//! doubled square-sum relations happen to hold.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partition::Modulus;
use crate::report::VerificationReport;
use crate::series::{
    gf_a_k, gf_p, gf_p_distinct_odd, marked_divisor_sum, neg_pochhammer, pochhammer,
    TruncatedSeries,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OffsetKind {
    /// 1, 2, 5, 7, 12, 15, ... with signs + + - - + + ...
    GeneralizedPentagonal,
    /// 1, 3, 6, 10, 15, ... with signs + + - - + + ...
    Triangular,
    /// m² with sign (-1)^(m-1)
    Square,
    /// 2m² with sign (-1)^(m-1)
    SquareDoubled,
}

/// Offsets `<= limit` of a recurrence together with their signs, in
/// increasing order of the generating index.
pub fn offsets(kind: OffsetKind, limit: u64) -> Vec<(u64, i8)> {
    let alternating = |m: u64| if m % 2 == 1 { 1 } else { -1 };
    let mut out = Vec::new();
    match kind {
        OffsetKind::GeneralizedPentagonal => {
            for j in 1u64.. {
                let sign = alternating(j);
                let lo = j * (3 * j - 1) / 2;
                if lo > limit {
                    break;
                }
                out.push((lo, sign));
                let hi = j * (3 * j + 1) / 2;
                if hi <= limit {
                    out.push((hi, sign));
                }
            }
        }
        OffsetKind::Triangular => {
            for m in 1u64.. {
                let t = m * (m + 1) / 2;
                if t > limit {
                    break;
                }
                // moved across from Σ (-1)^t a(n - t) = 0
                out.push((t, if t % 2 == 1 { 1 } else { -1 }));
            }
        }
        OffsetKind::Square | OffsetKind::SquareDoubled => {
            let scale = if kind == OffsetKind::Square { 1 } else { 2 };
            for m in 1u64.. {
                let e = scale * m * m;
                if e > limit {
                    break;
                }
                out.push((e, alternating(m)));
            }
        }
    }
    out
}

/// `Σ sign · values[n - offset]` over offsets `<= n`.
pub fn signed_sum(values: &[BigInt], n: u64, kind: OffsetKind) -> BigInt {
    let mut acc = BigInt::zero();
    for (o, sign) in offsets(kind, n) {
        let v = &values[(n - o) as usize];
        if sign > 0 {
            acc += v;
        } else {
            acc -= v;
        }
    }
    acc
}

fn a_k_values(k: Modulus, n_max: u64) -> Vec<BigInt> {
    gf_a_k(k, n_max as usize).into_coeffs()
}

fn require_even(k: Modulus) -> Result<()> {
    if k.is_even() {
        Ok(())
    } else {
        Err(Error::OddModulus(k.get()))
    }
}

/// `a_k(n) = a_k(n-1) + a_k(n-2) - a_k(n-5) - a_k(n-7) + ...` for `k ∤ n`.
pub fn check_pentagonal(k: Modulus, n_max: u64) -> VerificationReport {
    let a = a_k_values(k, n_max);
    let mut report = VerificationReport::new("pentagonal", Some(k.get()), (0, n_max));
    for n in (0..=n_max).filter(|&n| !k.divides(n)) {
        report.count_checked();
        let rhs = signed_sum(&a, n, OffsetKind::GeneralizedPentagonal);
        report.compare(n, None, a[n as usize].clone(), rhs);
    }
    report
}

/// `a_k(n) = a_k(n-1) + a_k(n-3) - a_k(n-6) - a_k(n-10) + ...` for even `k`
/// and odd `n`.
pub fn check_triangular(k: Modulus, n_max: u64) -> Result<VerificationReport> {
    require_even(k)?;
    let a = a_k_values(k, n_max);
    let mut report = VerificationReport::new("triangular", Some(k.get()), (0, n_max));
    for n in (1..=n_max).step_by(2) {
        report.count_checked();
        let rhs = signed_sum(&a, n, OffsetKind::Triangular);
        report.compare(n, None, a[n as usize].clone(), rhs);
    }
    Ok(report)
}

/// `a_k(n) = Σ (-1)^(m-1) a_k(n-m²) + Σ (-1)^(m-1) a_k(n-2m²)` for even
/// `k` and odd `n`.
pub fn check_square(k: Modulus, n_max: u64) -> Result<VerificationReport> {
    require_even(k)?;
    let a = a_k_values(k, n_max);
    let mut report = VerificationReport::new("square", Some(k.get()), (0, n_max));
    for n in (1..=n_max).step_by(2) {
        report.count_checked();
        let rhs =
            signed_sum(&a, n, OffsetKind::Square) + signed_sum(&a, n, OffsetKind::SquareDoubled);
        report.compare(n, None, a[n as usize].clone(), rhs);
    }
    Ok(report)
}

/// `Σ (-1)^(m-1) a_k(n-m²) = Σ (-1)^(m-1) a_k(n-2m²)` for even `k` and
/// even `n`.
pub fn check_square_identity(k: Modulus, n_max: u64) -> Result<VerificationReport> {
    require_even(k)?;
    let a = a_k_values(k, n_max);
    let mut report = VerificationReport::new("square-identity", Some(k.get()), (0, n_max));
    for n in (0..=n_max).step_by(2) {
        report.count_checked();
        report.compare(
            n,
            None,
            signed_sum(&a, n, OffsetKind::Square),
            signed_sum(&a, n, OffsetKind::SquareDoubled),
        );
    }
    Ok(report)
}

/// For even `n`:
/// `Σ (-1)^(m-1) p(n-m²) = Σ (-1)^(m-1) p(n-2m²) = (p(n) - p_DO(n)) / 2`.
///
/// The second equality is compared in doubled form so a parity defect shows
/// up as a failure instead of being rounded away.
pub fn check_p_square_identity(n_max: u64) -> VerificationReport {
    let order = n_max as usize;
    let p = gf_p(order).into_coeffs();
    let pdo = gf_p_distinct_odd(order).into_coeffs();
    let mut report = VerificationReport::new("p-square-identity", None, (0, n_max));
    for n in (0..=n_max).step_by(2) {
        report.count_checked();
        let squares = signed_sum(&p, n, OffsetKind::Square);
        let doubled = signed_sum(&p, n, OffsetKind::SquareDoubled);
        let diff = &p[n as usize] - &pdo[n as usize];
        report.compare(
            n,
            Some("square sum = doubled-square sum"),
            squares.clone(),
            doubled,
        );
        report.compare(n, Some("2 * square sum = p - p_DO"), squares * 2, diff);
    }
    report
}

/// All `1 <= n <= n_max` where both
/// `a_k(n) = 2 Σ (-1)^(m-1) a_k(n-m²)` and
/// `a_k(n) = 2 Σ (-1)^(m-1) a_k(n-2m²)` hold.
pub fn search_both_square(k: Modulus, n_max: u64) -> Vec<u64> {
    let a = a_k_values(k, n_max);
    (1..=n_max)
        .filter(|&n| {
            let lhs = &a[n as usize];
            *lhs == signed_sum(&a, n, OffsetKind::Square) * 2
                && *lhs == signed_sum(&a, n, OffsetKind::SquareDoubled) * 2
        })
        .collect()
}

/// Indices `1 <= n <= N` with a zero coefficient.
pub fn zero_positions(series: &TruncatedSeries) -> Vec<u64> {
    series
        .coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, c)| c.is_zero())
        .map(|(n, _)| n as u64)
        .collect()
}

/// `(-q^m; q^m)_∞ (q^k; q^k)_∞ · Σ_{n>=1} (Σ_{i<k} i q^{ikn}) / (Σ_{i<k} q^{ikn})`,
/// which equals `(q;q)_∞ (-q^m;q^m)_∞ Σ a_k(n) q^n`.
pub fn neg_pochhammer_series(k: Modulus, m: u64, order: usize) -> TruncatedSeries {
    assert!(m >= 1, "m must be at least 1");
    let kk = k.get() as usize;
    neg_pochhammer(m as usize, m as usize, order)
        .mul(&pochhammer(kk, kk, order))
        .and_then(|s| s.mul(&marked_divisor_sum(k, order)))
        .expect("same order")
}

/// `(q; q²)_∞ (q^k; q^k)_∞ · Σ_{n>=1} ...`, which equals
/// `(q;q)_∞ (q;q²)_∞ Σ a_k(n) q^n`; its `q^n` coefficient is
/// `a_k(n) - 2 Σ (-1)^(m-1) a_k(n-m²)`. For `k = 2` this is
/// `(q;q)_∞ Σ q^{2n} / (1 + q^{2n})`.
pub fn square_preset_series(k: Modulus, order: usize) -> TruncatedSeries {
    let kk = k.get() as usize;
    pochhammer(1, 2, order)
        .mul(&pochhammer(kk, kk, order))
        .and_then(|s| s.mul(&marked_divisor_sum(k, order)))
        .expect("same order")
}

/// Zero-coefficient positions `1 <= n <= N` of [`neg_pochhammer_series`].
pub fn zero_coefficient_set(k: Modulus, m: u64, order: usize) -> Vec<u64> {
    zero_positions(&neg_pochhammer_series(k, m, order))
}

/// Zero-coefficient positions `1 <= n <= N` of [`square_preset_series`].
pub fn zero_coefficient_set_square_preset(k: Modulus, order: usize) -> Vec<u64> {
    zero_positions(&square_preset_series(k, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{theta_series, ThetaKind};

    fn k(v: u64) -> Modulus {
        Modulus::new(v).unwrap()
    }

    const TABLE_K2: [i64; 16] = [0, 0, 1, 1, 1, 2, 4, 5, 5, 8, 11, 14, 18, 23, 29, 37];

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn signs(v: &[(u64, i8)]) -> (Vec<u64>, Vec<i8>) {
        v.iter().copied().unzip()
    }

    #[test]
    fn offset_lists() {
        let (o, s) = signs(&offsets(OffsetKind::GeneralizedPentagonal, 26));
        assert_eq!(o, [1, 2, 5, 7, 12, 15, 22, 26]);
        assert_eq!(s, [1, 1, -1, -1, 1, 1, -1, -1]);
        let (o, s) = signs(&offsets(OffsetKind::Triangular, 36));
        assert_eq!(o, [1, 3, 6, 10, 15, 21, 28, 36]);
        assert_eq!(s, [1, 1, -1, -1, 1, 1, -1, -1]);
        let sq = offsets(OffsetKind::Square, 16);
        let sq2 = offsets(OffsetKind::SquareDoubled, 32);
        let interleaved: Vec<(u64, i8)> = sq.iter().zip(&sq2).flat_map(|(&a, &b)| [a, b]).collect();
        let (o, s) = signs(&interleaved);
        assert_eq!(o, [1, 2, 4, 8, 9, 18, 16, 32]);
        assert_eq!(s, [1, 1, -1, -1, 1, 1, -1, -1]);
        assert!(offsets(OffsetKind::Square, 0).is_empty());
    }

    #[test]
    fn recurrences_on_table_values() {
        let a2 = big(&TABLE_K2);
        // n = 11, triangular: 11 + 5 - 2 - 0
        assert_eq!(
            signed_sum(&a2, 11, OffsetKind::Triangular),
            BigInt::from(14)
        );
        // n = 11, square: (11 - 5 + 1) + (8 - 1)
        let sq = signed_sum(&a2, 11, OffsetKind::Square)
            + signed_sum(&a2, 11, OffsetKind::SquareDoubled);
        assert_eq!(sq, BigInt::from(14));
        // n = 10, identity: a(9) - a(6) + a(1) = 4 = a(8) - a(2)
        assert_eq!(signed_sum(&a2, 10, OffsetKind::Square), BigInt::from(4));
        assert_eq!(
            signed_sum(&a2, 10, OffsetKind::SquareDoubled),
            BigInt::from(4)
        );
        let a3 = big(&[0, 0, 0, 1, 1, 2, 4, 6, 9, 10, 16]);
        assert_eq!(
            signed_sum(&a3, 10, OffsetKind::GeneralizedPentagonal),
            BigInt::from(16)
        );
    }

    #[test]
    fn small_checks_pass() {
        let r = check_pentagonal(k(2), 15);
        assert!(r.passed);
        assert_eq!(r.checked, 8);
        let r = check_pentagonal(k(4), 4);
        assert_eq!(r.checked, 3, "n = 0 and n = 4 are skipped");
        assert!(check_triangular(k(2), 15).unwrap().passed);
        assert!(check_square(k(4), 15).unwrap().passed);
        let r = check_square(k(2), 1).unwrap();
        assert!(r.passed && r.checked == 1);
        let r = check_square_identity(k(2), 0).unwrap();
        assert!(r.passed && r.checked == 1);
        assert!(check_square_identity(k(4), 300).unwrap().passed);
        let r = check_p_square_identity(10);
        assert!(r.passed && r.checked == 6);
    }

    #[test]
    fn odd_modulus_rejected() {
        assert_eq!(
            check_triangular(k(3), 100).unwrap_err(),
            Error::OddModulus(3)
        );
        assert!(check_square(k(5), 10).is_err());
        assert!(check_square_identity(k(3), 10).is_err());
    }

    #[test]
    fn p_square_identity_at_ten() {
        let p = gf_p(10).into_coeffs();
        assert_eq!(signed_sum(&p, 10, OffsetKind::Square), BigInt::from(20));
        assert_eq!(
            signed_sum(&p, 10, OffsetKind::SquareDoubled),
            BigInt::from(20)
        );
        let pdo = gf_p_distinct_odd(10).into_coeffs();
        assert_eq!((&p[10] - &pdo[10]) / 2, BigInt::from(20));
    }

    #[test]
    fn broken_sequence_is_reported() {
        let mut a = big(&TABLE_K2);
        a[11] += 1;
        let mut report = VerificationReport::new("pentagonal", Some(2), (0, 15));
        for n in (1..=15).step_by(2) {
            report.compare(
                n,
                None,
                a[n as usize].clone(),
                signed_sum(&a, n, OffsetKind::GeneralizedPentagonal),
            );
        }
        assert!(!report.passed);
        assert_eq!(report.failures[0].n, 11);
        assert_eq!(report.failures[0].lhs, BigInt::from(15));
    }

    #[test]
    fn search_prefixes() {
        assert_eq!(search_both_square(k(2), 30), [1, 5, 11, 22, 23, 27, 30]);
        assert_eq!(search_both_square(k(4), 60), [1, 2, 3, 6, 19, 53, 54, 58]);
        assert!(search_both_square(k(2), 0).is_empty());
    }

    #[test]
    fn zero_set_for_m2_splits_on_parity() {
        // The product is a series in q², so every odd n vanishes; an even n
        // vanishes exactly when the triangular convolution of a_2 does.
        let order = 300;
        let zeros = zero_coefficient_set(k(2), 2, order);
        let a = gf_a_k(k(2), order);
        let conv = theta_series(ThetaKind::Triangular, order).mul(&a).unwrap();
        let av = a.into_coeffs();
        let expected: Vec<u64> = (1..=order as u64)
            .filter(|&n| n % 2 == 1 || av[n as usize] == signed_sum(&av, n, OffsetKind::Triangular))
            .collect();
        assert_eq!(zeros, expected);
        let from_conv = zero_positions(&conv);
        assert_eq!(zeros, from_conv);
        assert!(!zeros.contains(&0));
    }

    #[test]
    fn preset_matches_known_display_for_k2() {
        // (q;q)_∞ Σ q^{2n}/(1+q^{2n}) built directly
        let order = 120;
        let mut sum = TruncatedSeries::zero(order);
        for n in (2..=order).step_by(2) {
            let num = TruncatedSeries::monomial(order, n, 1);
            let mut den = TruncatedSeries::one(order);
            den.mul_binomial(n, 1);
            sum = sum.add(&num.div(&den).unwrap()).unwrap();
        }
        let direct = pochhammer(1, 1, order).mul(&sum).unwrap();
        assert_eq!(square_preset_series(k(2), order), direct);
    }
}
