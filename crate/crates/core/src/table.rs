//! The grid of `a_k(n)` values over ranges of `k` and `n`.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use serde_json::{json, Number, Value};

use crate::counting::a_direct;
use crate::partition::Modulus;
use crate::series::gf_a_k;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Source {
    /// Enumerate partitions.
    Direct,
    /// Read coefficients of the generating function.
    Gf,
    /// Compute both and require agreement.
    Both,
}

/// A cell where the two sources disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub n: u64,
    pub k: u64,
    pub direct: BigInt,
    pub gf: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ATable {
    pub ks: Vec<u64>,
    pub ns: RangeInclusive<u64>,
    /// `columns[i][j]` is `a_{ks[i]}(ns.start() + j)`.
    pub columns: Vec<Vec<BigInt>>,
}

impl ATable {
    pub fn build(
        ks: &[Modulus],
        ns: RangeInclusive<u64>,
        source: Source,
    ) -> Result<Self, Vec<Mismatch>> {
        let (lo, hi) = (*ns.start(), *ns.end());
        let mut columns = Vec::with_capacity(ks.len());
        let mut mismatches = Vec::new();
        for &k in ks {
            let gf = || {
                let mut c = gf_a_k(k, hi as usize).into_coeffs();
                c.drain(..lo as usize);
                c
            };
            let direct = || {
                (lo..=hi)
                    .map(|n| BigInt::from(a_direct(n, k)))
                    .collect::<Vec<_>>()
            };
            let col = match source {
                Source::Direct => direct(),
                Source::Gf => gf(),
                Source::Both => {
                    let (d, g) = (direct(), gf());
                    for (i, (x, y)) in d.iter().zip(&g).enumerate() {
                        if x != y {
                            mismatches.push(Mismatch {
                                n: lo + i as u64,
                                k: k.get(),
                                direct: x.clone(),
                                gf: y.clone(),
                            });
                        }
                    }
                    g
                }
            };
            columns.push(col);
        }
        if !mismatches.is_empty() {
            return Err(mismatches);
        }
        Ok(ATable {
            ks: ks.iter().map(|k| k.get()).collect(),
            ns,
            columns,
        })
    }

    pub fn get(&self, n: u64, k: u64) -> Option<&BigInt> {
        let i = self.ks.iter().position(|&x| x == k)?;
        if !self.ns.contains(&n) {
            return None;
        }
        self.columns[i].get((n - self.ns.start()) as usize)
    }

    fn rows(&self) -> impl Iterator<Item = (u64, Vec<&BigInt>)> + '_ {
        self.ns
            .clone()
            .enumerate()
            .map(move |(j, n)| (n, self.columns.iter().map(|c| &c[j]).collect()))
    }

    /// Header `n,k=2,k=3,...`, one row per `n`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n");
        for k in &self.ks {
            write!(out, ",k={k}").unwrap();
        }
        out.push('\n');
        for (n, row) in self.rows() {
            write!(out, "{n}").unwrap();
            for v in row {
                write!(out, ",{v}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows()
            .map(|(n, row)| {
                let vals: Vec<Value> = row
                    .into_iter()
                    .map(|v| Value::Number(v.to_string().parse::<Number>().unwrap()))
                    .collect();
                json!({ "n": n, "values": vals })
            })
            .collect();
        json!({
            "schema": crate::report::REPORT_SCHEMA,
            "k": self.ks,
            "n": [self.ns.start(), self.ns.end()],
            "rows": rows,
        })
    }

    /// Right-aligned columns for terminals.
    pub fn to_pretty(&self) -> String {
        let mut header = vec!["n".to_string()];
        header.extend(self.ks.iter().map(|k| format!("k={k}")));
        let mut grid = vec![header];
        for (n, row) in self.rows() {
            let mut line = vec![n.to_string()];
            line.extend(row.into_iter().map(|v| v.to_string()));
            grid.push(line);
        }
        let widths: Vec<usize> = (0..grid[0].len())
            .map(|c| grid.iter().map(|r| r[c].len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for r in &grid {
            let cells: Vec<String> = r
                .iter()
                .zip(&widths)
                .map(|(cell, w)| format!("{cell:>w$}"))
                .collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}
