//! Integer sequences exported as OEIS b-files or CSV.

use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::counting::{a_direct, bc_direct};
use crate::partition::Modulus;
use crate::series::{gf_a_k, gf_p, gf_p_distinct_odd};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sequence {
    /// `a_k(n)`, read from the generating function.
    A(Modulus),
    /// `p(n)`
    P,
    /// Partitions into distinct odd parts.
    PDistinctOdd,
    B0(Modulus),
    B1(Modulus),
    C0(Modulus),
    C1(Modulus),
}

impl Sequence {
    pub fn name(&self) -> String {
        match self {
            Sequence::A(k) => format!("a_{k}"),
            Sequence::P => "p".to_string(),
            Sequence::PDistinctOdd => "p_distinct_odd".to_string(),
            Sequence::B0(k) => format!("b_{k}_0"),
            Sequence::B1(k) => format!("b_{k}_1"),
            Sequence::C0(k) => format!("c_{k}_0"),
            Sequence::C1(k) => format!("c_{k}_1"),
        }
    }

    /// Terms for `n = 0..=n_max`. The `b`/`c` sequences are enumerated
    /// directly and get slow past `n ≈ 60`.
    pub fn values(&self, n_max: u64) -> Vec<BigInt> {
        let order = n_max as usize;
        let counted = |pick: fn(&crate::counting::CountVector) -> u64, k: Modulus| {
            (0..=n_max)
                .map(|n| BigInt::from(pick(&bc_direct(n, k))))
                .collect()
        };
        match *self {
            Sequence::A(k) => gf_a_k(k, order).into_coeffs(),
            Sequence::P => gf_p(order).into_coeffs(),
            Sequence::PDistinctOdd => gf_p_distinct_odd(order).into_coeffs(),
            Sequence::B0(k) => counted(|c| c.b0, k),
            Sequence::B1(k) => counted(|c| c.b1, k),
            Sequence::C0(k) => counted(|c| c.c0, k),
            Sequence::C1(k) => counted(|c| c.c1, k),
        }
    }

    /// `a_k(n)` by enumeration rather than the generating function.
    pub fn a_direct_values(k: Modulus, n_max: u64) -> Vec<BigInt> {
        (0..=n_max).map(|n| BigInt::from(a_direct(n, k))).collect()
    }
}

/// OEIS b-file: `"{n} {value}\n"` per term, starting at `n = 0`.
pub fn to_bfile(values: &[BigInt]) -> String {
    let mut out = String::new();
    for (n, v) in values.iter().enumerate() {
        writeln!(out, "{n} {v}").unwrap();
    }
    out
}

/// `n,{name}` header then `"{n},{value}\n"` per term.
pub fn to_csv(name: &str, values: &[BigInt]) -> String {
    let mut out = format!("n,{name}\n");
    for (n, v) in values.iter().enumerate() {
        writeln!(out, "{n},{v}").unwrap();
    }
    out
}
