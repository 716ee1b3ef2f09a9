//! Truncated formal power series in `q` with exact integer coefficients,
//! and the products and generating functions built from them.

use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::Modulus;

/// `c_0 + c_1 q + ... + c_N q^N`, everything above `q^N` discarded.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, 1)
    }

    /// `c q^exp`; zero when `exp > order`.
    pub fn monomial(order: usize, exp: usize, c: impl Into<BigInt>) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = c.into();
        }
        s
    }

    /// Takes ownership of `c_0..=c_N`. Panics on an empty vector.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series has at least c_0");
        TruncatedSeries { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Re-truncates to a smaller order. Panics if `order` exceeds the
    /// current one.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse, defined when `c_0 = ±1`.
    pub fn invert(&self) -> Result<Self> {
        Self::one(self.order()).div(self)
    }

    /// `self / divisor` by forward substitution:
    /// `q_n = (a_n - Σ_{j>=1} d_j q_{n-j}) / d_0`. Requires `d_0 = ±1`.
    /// Cost is proportional to `N` times the number of nonzero `d_j`.
    pub fn div(&self, divisor: &Self) -> Result<Self> {
        self.check_order(divisor)?;
        let d0 = &divisor.coeffs[0];
        if !d0.abs().is_one() {
            return Err(Error::NonUnitConstant);
        }
        let negate = d0.is_negative();
        let support: Vec<(usize, &BigInt)> = divisor
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut out: Vec<BigInt> = Vec::with_capacity(self.coeffs.len());
        for n in 0..self.coeffs.len() {
            let mut acc = self.coeffs[n].clone();
            for &(j, d) in support.iter().take_while(|(j, _)| *j <= n) {
                acc -= d * &out[n - j];
            }
            out.push(if negate { -acc } else { acc });
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Multiplies in place by `1 + sign * q^exp`.
    pub fn mul_binomial(&mut self, exp: usize, sign: i8) {
        if exp > self.order() {
            return;
        }
        if exp == 0 {
            let factor = BigInt::from(1 + i64::from(sign));
            for c in &mut self.coeffs {
                *c *= &factor;
            }
            return;
        }
        for i in (exp..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            if sign < 0 {
                hi[0] -= &lo[i - exp];
            } else {
                hi[0] += &lo[i - exp];
            }
        }
    }

    /// Sparse text form, e.g. `1 - 2q + 2q^4 - 2q^9`.
    pub fn to_sparse_string(&self) -> String {
        self.to_string()
    }

    /// One `n,c_n` line per coefficient under an `n,coeff` header.
    pub fn to_dense_csv(&self) -> String {
        let mut out = String::from("n,coeff\n");
        for (i, c) in self.coeffs.iter().enumerate() {
            out.push_str(&format!("{i},{c}\n"));
        }
        out
    }
}

impl Neg for TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{mag}q^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `(q^c; q^d)_∞ = ∏_{j>=0} (1 - q^{c + jd})` to order `N`.
pub fn pochhammer(c: usize, d: usize, order: usize) -> TruncatedSeries {
    pochhammer_with_sign(c, d, order, -1)
}

/// `(-q^c; q^d)_∞ = ∏_{j>=0} (1 + q^{c + jd})` to order `N`.
pub fn neg_pochhammer(c: usize, d: usize, order: usize) -> TruncatedSeries {
    pochhammer_with_sign(c, d, order, 1)
}

fn pochhammer_with_sign(c: usize, d: usize, order: usize, sign: i8) -> TruncatedSeries {
    assert!(c >= 1 && d >= 1, "q-Pochhammer needs c >= 1 and d >= 1");
    let mut s = TruncatedSeries::one(order);
    let mut e = c;
    while e <= order {
        s.mul_binomial(e, sign);
        e += d;
    }
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ThetaKind {
    /// `Σ_{j∈Z} (-1)^j q^{j(3j-1)/2}`
    Pentagonal,
    /// `Σ_{m>=0} (-q)^{m(m+1)/2}`
    Triangular,
    /// `Σ_{m∈Z} (-1)^m q^{m²}`
    Square,
    /// `Σ_{m∈Z} (-1)^m q^{2m²}`
    SquareDoubled,
}

pub fn theta_series(kind: ThetaKind, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    let mut bump = |exp: usize, c: i64| {
        if exp <= order {
            s.coeffs[exp] += c;
        }
    };
    match kind {
        ThetaKind::Pentagonal => {
            bump(0, 1);
            for j in 1.. {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                let lo = j * (3 * j - 1) / 2;
                if lo > order {
                    break;
                }
                bump(lo, sign);
                bump(j * (3 * j + 1) / 2, sign);
            }
        }
        ThetaKind::Triangular => {
            for m in 0.. {
                let t = m * (m + 1) / 2;
                if t > order {
                    break;
                }
                bump(t, if t % 2 == 0 { 1 } else { -1 });
            }
        }
        ThetaKind::Square | ThetaKind::SquareDoubled => {
            let scale = if kind == ThetaKind::Square { 1 } else { 2 };
            bump(0, 1);
            for m in 1.. {
                let e = scale * m * m;
                if e > order {
                    break;
                }
                bump(e, if m % 2 == 0 { 2 } else { -2 });
            }
        }
    }
    s
}

/// `Σ_{n>=1} (q^{kn} + 2q^{2kn} + ... + (k-1)q^{(k-1)kn}) / (1 + q^{kn} + ... + q^{(k-1)kn})`
/// to order `N`. Only `n` with `kn <= N` contribute.
pub fn marked_divisor_sum(k: Modulus, order: usize) -> TruncatedSeries {
    let k = k.get() as usize;
    let mut total = TruncatedSeries::zero(order);
    for n in 1.. {
        let step = k * n;
        if step > order {
            break;
        }
        let mut num = TruncatedSeries::zero(order);
        let mut den = TruncatedSeries::zero(order);
        for i in 0..k {
            let e = i * step;
            if e > order {
                break;
            }
            num.coeffs[e] = BigInt::from(i);
            den.coeffs[e] = BigInt::one();
        }
        let term = num.div(&den).expect("denominator has constant term 1");
        for (t, x) in total.coeffs.iter_mut().zip(term.coeffs) {
            *t += x;
        }
    }
    total
}

/// Generating function of `a_k(n)`:
/// `(q^k; q^k)_∞ / (q; q)_∞ · Σ_{n>=1} (Σ_{i<k} i q^{ikn}) / (Σ_{i<k} q^{ikn})`.
pub fn gf_a_k(k: Modulus, order: usize) -> TruncatedSeries {
    let kk = k.get() as usize;
    let product = pochhammer(kk, kk, order)
        .div(&pochhammer(1, 1, order))
        .expect("(q;q) has constant term 1");
    product
        .mul(&marked_divisor_sum(k, order))
        .expect("same order")
}

/// `Σ p(n) q^n = 1 / (q; q)_∞`.
pub fn gf_p(order: usize) -> TruncatedSeries {
    pochhammer(1, 1, order)
        .invert()
        .expect("(q;q) has constant term 1")
}

/// Partitions into distinct odd parts, `(-q; q²)_∞`.
pub fn gf_p_distinct_odd(order: usize) -> TruncatedSeries {
    neg_pochhammer(1, 2, order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ts(c: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_i64(c)
    }

    fn k(v: u64) -> Modulus {
        Modulus::new(v).unwrap()
    }

    fn as_i64(s: &TruncatedSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    // Expands ∏ (1 + sign q^e) over the given exponents with plain
    // polynomial arithmetic, then truncates.
    fn product_oracle(exps: &[usize], sign: i64, order: usize) -> Vec<i64> {
        let mut poly = vec![1i64];
        for &e in exps {
            let mut next = vec![0i64; poly.len() + e];
            for (i, &c) in poly.iter().enumerate() {
                next[i] += c;
                next[i + e] += sign * c;
            }
            poly = next;
        }
        poly.resize(poly.len().max(order + 1), 0);
        poly.truncate(order + 1);
        poly
    }

    #[test]
    fn mul_small() {
        assert_eq!(
            ts(&[1, 1, 0]).mul(&ts(&[1, -1, 0])).unwrap(),
            ts(&[1, 0, -1])
        );
        let geometric = ts(&[1; 6]);
        assert_eq!(
            ts(&[1, -1, 0, 0, 0, 0]).mul(&geometric).unwrap(),
            TruncatedSeries::one(5)
        );
        assert_eq!(
            ts(&[1, 1]).mul(&ts(&[1, 1, 1])),
            Err(Error::OrderMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn invert_small() {
        assert_eq!(ts(&[1, -1, 0, 0, 0]).invert().unwrap(), ts(&[1; 5]));
        assert_eq!(
            ts(&[1, 0, 1, 0, 0, 0]).invert().unwrap(),
            ts(&[1, 0, -1, 0, 1, 0])
        );
        assert_eq!(ts(&[2, 1]).invert(), Err(Error::NonUnitConstant));
        assert_eq!(ts(&[0, 1]).invert(), Err(Error::NonUnitConstant));
        let neg = ts(&[-1, 1, 0, 0]).invert().unwrap();
        assert_eq!(neg, ts(&[-1, -1, -1, -1]));
    }

    #[test]
    fn euler_product_inverts_partition_gf() {
        let prod = pochhammer(1, 1, 50).mul(&gf_p(50)).unwrap();
        assert_eq!(prod, TruncatedSeries::one(50));
        assert_eq!(*gf_p(9).coeff(9), BigInt::from(30));
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(as_i64(&pochhammer(1, 1, 7)), [1, -1, -1, 0, 0, 1, 0, 1]);
        assert_eq!(
            as_i64(&pochhammer(1, 2, 6)),
            product_oracle(&[1, 3, 5], -1, 6)
        );
        assert_eq!(as_i64(&pochhammer(1, 2, 6)), [1, -1, 0, -1, 1, -1, 1]);
        assert_eq!(as_i64(&neg_pochhammer(2, 2, 6)), [1, 0, 1, 0, 1, 0, 2]);
        for (c, d) in [(1, 1), (2, 3), (3, 3), (1, 2), (4, 1)] {
            let exps: Vec<usize> = (0..).map(|j| c + j * d).take_while(|&e| e <= 30).collect();
            assert_eq!(as_i64(&pochhammer(c, d, 30)), product_oracle(&exps, -1, 30));
            assert_eq!(
                as_i64(&neg_pochhammer(c, d, 30)),
                product_oracle(&exps, 1, 30)
            );
        }
    }

    #[test]
    fn theta_examples() {
        assert_eq!(
            as_i64(&theta_series(ThetaKind::Pentagonal, 7)),
            [1, -1, -1, 0, 0, 1, 0, 1]
        );
        assert_eq!(
            as_i64(&theta_series(ThetaKind::Square, 9)),
            [1, -2, 0, 0, 2, 0, 0, 0, 0, -2]
        );
        assert_eq!(
            as_i64(&theta_series(ThetaKind::Triangular, 10)),
            [1, -1, 0, -1, 0, 0, 1, 0, 0, 0, 1]
        );
        assert_eq!(
            as_i64(&theta_series(ThetaKind::SquareDoubled, 8)),
            [1, 0, -2, 0, 0, 0, 0, 0, 2]
        );
        assert_eq!(as_i64(&theta_series(ThetaKind::Square, 0)), [1]);
    }

    #[test]
    fn a_k_gf_small() {
        assert_eq!(
            as_i64(&gf_a_k(k(3), 15)),
            [0, 0, 0, 1, 1, 2, 4, 6, 9, 10, 16, 21, 31, 39, 54, 69]
        );
        assert_eq!(*gf_a_k(k(8), 8).coeff(8), BigInt::one());
        for kv in 2..=9 {
            assert!(gf_a_k(k(kv), 20).coeff(0).is_zero());
        }
        assert_eq!(as_i64(&gf_a_k(k(5), 0)), [0]);
    }

    #[test]
    fn telescoped_summands_agree() {
        // (Σ_{i<k} i x^i) / (Σ_{i<k} x^i) = (Σ_{i<k} i x^i)(1 - x) / (1 - x^k)
        for kv in 2..=5usize {
            let order = 60;
            let mut via_tele = TruncatedSeries::zero(order);
            for n in 1.. {
                let step = kv * n;
                if step > order {
                    break;
                }
                let mut num = TruncatedSeries::zero(order);
                for i in 1..kv {
                    if i * step <= order {
                        num.coeffs[i * step] = BigInt::from(i);
                    }
                }
                num.mul_binomial(step, -1);
                let mut den = TruncatedSeries::one(order);
                den.mul_binomial(kv * step, -1);
                via_tele = via_tele.add(&num.div(&den).unwrap()).unwrap();
            }
            assert_eq!(via_tele, marked_divisor_sum(k(kv as u64), order));
        }
    }

    #[test]
    fn p_and_distinct_odd() {
        assert_eq!(as_i64(&gf_p(9)), [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
        let pdo = gf_p_distinct_odd(10);
        assert_eq!(*pdo.coeff(10), BigInt::from(2));
        assert_eq!(*pdo.coeff(0), BigInt::one());
        assert!(pdo.coeff(2).is_zero());
    }

    #[test]
    fn rendering() {
        assert_eq!(
            theta_series(ThetaKind::Square, 9).to_string(),
            "1 - 2q + 2q^4 - 2q^9"
        );
        assert_eq!(TruncatedSeries::zero(3).to_string(), "0");
        assert_eq!(ts(&[0, -1, 3]).to_string(), "-q + 3q^2");
        assert_eq!(ts(&[1, 2]).to_dense_csv(), "n,coeff\n0,1\n1,2\n");
    }

    #[test]
    fn mul_binomial_edges() {
        let mut s = ts(&[1, 1, 1]);
        s.mul_binomial(5, -1);
        assert_eq!(s, ts(&[1, 1, 1]));
        let mut s = ts(&[1, 1, 1]);
        s.mul_binomial(0, 1);
        assert_eq!(s, ts(&[2, 2, 2]));
    }
}
