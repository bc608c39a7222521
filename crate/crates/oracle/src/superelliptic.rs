//! Superelliptic curves `y^n = Π (x − a_i)^{r_i}` with `σ: y ↦ ζ_n y`.
//!
//! The `ζ_n^k`-eigenspace of `σ*` on `H⁰(X, Ω^{⊗m})` is
//! `{h(x) y^k dx^m : h ∈ k(x) holomorphic after pullback}`, a Riemann-Roch
//! space on `P¹` whose dimension is read off from the orders of `x − a`,
//! `y` and `dx` at the points above each branch value.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use equikoszul::{BranchPoint, Cover, CoverData, Table};
use num_integer::gcd;

use crate::groups::cyclic_table;

fn table(n: usize) -> Table {
    static TABLES: OnceLock<Mutex<HashMap<usize, Table>>> = OnceLock::new();
    let mut tables = TABLES.get_or_init(Default::default).lock().unwrap();
    tables.entry(n).or_insert_with(|| cyclic_table(n)).clone()
}

/// Exponents over the finite branch values plus the exponent at infinity
/// (possibly zero), all reduced into `0..n`.
fn branch_exponents(n: u64, exponents: &[u64]) -> Vec<u64> {
    let total: u64 = exponents.iter().sum();
    let mut out: Vec<u64> = exponents.iter().map(|r| r % n).collect();
    out.push((n - total % n) % n);
    out
}

/// Dimensions of the `ζ_n^k`-eigenspaces of `σ*` on `H⁰(X, Ω^{⊗m})` for
/// `k = 0, …, n − 1`.
pub fn superelliptic_h0(n: u64, exponents: &[u64], m: u64) -> Vec<u64> {
    let total: i64 = exponents.iter().map(|&r| r as i64).sum();
    let (n_i, m_i) = (n as i64, m as i64);
    (0..n_i)
        .map(|k| {
            let mut degree = 0i64;
            for &r in exponents {
                let r = r as i64;
                let e = n_i / gcd(n_i, r);
                let ord_y = r * e / n_i;
                let ord_dx = e - 1;
                degree += (k * ord_y + m_i * ord_dx).div_euclid(e);
            }
            let e = n_i / gcd(n_i, total);
            let ord_y = -total * e / n_i;
            let ord_dx = -e - 1;
            degree += (k * ord_y + m_i * ord_dx).div_euclid(e);
            (degree + 1).max(0) as u64
        })
        .collect()
}

/// The same curve as a `Z/n` cover of `P¹`: above a branch value with
/// exponent `r` and `d = gcd(n, r)` the stabilizer is generated by `σ^d`,
/// with rotation `−(r/d)^{−1} mod n/d`. `None` when the curve is
/// disconnected or has genus below 2.
pub fn superelliptic_cover(n: u64, exponents: &[u64]) -> Option<Cover> {
    if exponents.iter().fold(n, |d, &r| gcd(d, r)) != 1 {
        return None;
    }
    let branch = branch_exponents(n, exponents)
        .into_iter()
        .enumerate()
        .filter(|&(_, r)| r != 0)
        .map(|(i, r)| {
            let d = gcd(n, r);
            let e = n / d;
            let unit = (r / d) as i64;
            let inverse = (1..e as i64)
                .find(|&u| (u * unit).rem_euclid(e as i64) == 1)
                .unwrap_or(0);
            let rotation = (-inverse).rem_euclid(e as i64);
            BranchPoint::generator(format!("Q{i}"), e as usize, d as usize, rotation)
        })
        .collect();
    CoverData::new(table(n as usize), 0, branch).ok()
}
