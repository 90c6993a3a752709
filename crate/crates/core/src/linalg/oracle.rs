//! Brute-force references used only by tests: cofactor expansion and
//! gcd-of-minors, deliberately sharing no code with the elimination kernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Matrix;

fn expand(m: &Matrix<BigInt>, rows: &[usize], cols: &[usize]) -> BigInt {
    if rows.is_empty() {
        return BigInt::one();
    }
    let r = rows[0];
    let mut acc = BigInt::zero();
    for (idx, &c) in cols.iter().enumerate() {
        let v = &m[(r, c)];
        if v.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = v * expand(m, &rows[1..], &rest);
        if idx % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

pub fn laplace_det(m: &Matrix<BigInt>) -> BigInt {
    let idx: Vec<usize> = (0..m.dim()).collect();
    expand(m, &idx, &idx)
}

pub fn minor(m: &Matrix<BigInt>, rows: &[usize], cols: &[usize]) -> BigInt {
    expand(m, rows, cols)
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Delta_k: gcd of all k x k minors (Delta_0 = 1).
pub fn delta(m: &Matrix<BigInt>, k: usize) -> BigInt {
    let sets = subsets(m.dim(), k);
    let mut g = BigInt::zero();
    for r in &sets {
        for c in &sets {
            g = g.gcd(&minor(m, r, c));
            if g.is_one() {
                return g;
            }
        }
    }
    g.abs()
}

/// Invariant factors from determinantal divisors: d_k = Delta_k / Delta_(k-1).
pub fn invariant_factors_by_minors(m: &Matrix<BigInt>) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(m.dim());
    let mut prev = BigInt::one();
    for k in 1..=m.dim() {
        let d = delta(m, k);
        if d.is_zero() {
            out.push(BigInt::zero());
            prev = BigInt::zero();
        } else {
            out.push(&d / &prev);
            prev = d;
        }
    }
    out
}
