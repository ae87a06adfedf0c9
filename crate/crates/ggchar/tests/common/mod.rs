//! Shared helpers for the integration suites: an independent truncated
//! power-series oracle over exact rationals, concrete evaluation of symmetric
//! functions on finite alphabets, and brute-force polynomial counting over
//! small finite fields. Everything here is deliberately separate from the
//! library's own computation paths.
#![allow(dead_code)] // each test target uses a different subset

use ggchar::ring::Rat;
use ggchar::symfunc::SymFunc;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// A power series truncated at a fixed length, with exact coefficients in
/// any commutative ring.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<T> {
    pub coeffs: Vec<T>,
}

impl<T> Series<T>
where
    T: Clone + Zero + One + PartialEq + std::ops::Sub<Output = T>,
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T>,
{
    pub fn one(len: usize) -> Self {
        let mut coeffs = vec![T::zero(); len];
        coeffs[0] = T::one();
        Series { coeffs }
    }

    /// `1 - c t^k`.
    pub fn one_minus(c: &T, k: usize, len: usize) -> Self {
        let mut s = Series::one(len);
        if k < len {
            s.coeffs[k] = T::zero() - c.clone();
        }
        s
    }

    /// `1/(1 - c t^k) = sum_m c^m t^{km}`.
    pub fn geometric(c: &T, k: usize, len: usize) -> Self {
        let mut coeffs = vec![T::zero(); len];
        let mut power = T::one();
        let mut idx = 0;
        while idx < len {
            coeffs[idx] = power.clone();
            power = &power * c;
            idx += k;
        }
        Series { coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let len = self.coeffs.len();
        let mut coeffs = vec![T::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == T::zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                let prod = a * b;
                coeffs[i + j] = coeffs[i + j].clone() + prod;
            }
        }
        Series { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Series::one(self.coeffs.len());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

/// Evaluates a symmetric function at a concrete finite alphabet by
/// specializing each `p_k` to the numeric power sum of the values.
pub fn eval_at(f: &SymFunc, values: &[Rat]) -> Rat {
    let max_deg = f.terms().map(|(lam, _)| lam.size()).max().unwrap_or(0);
    let assign: BTreeMap<u32, ggchar::ring::LaurentPoly> = (1..=max_deg.max(1))
        .map(|k| {
            let total: Rat = values.iter().map(|v| v.pow(k as i32)).sum();
            (k, ggchar::ring::LaurentPoly::constant(total))
        })
        .collect();
    f.specialize_p(&assign)
        .expect("assignment covers all degrees")
        .coeff(0)
}

/// Counts monic irreducible polynomials of degree `deg` over `F_q` by
/// sieving out all products of lower-degree monic polynomials. When
/// `nonzero_constant` is set, polynomials with constant term zero are
/// excluded from the count.
pub fn brute_force_irreducible_count(q: u32, deg: u32, nonzero_constant: bool) -> u64 {
    // A monic polynomial of degree d is its vector of d low-order
    // coefficients; the leading 1 is implicit.
    fn all_monic(q: u32, d: u32) -> Vec<Vec<u32>> {
        let mut out = vec![vec![]];
        for _ in 0..d {
            let mut next = Vec::with_capacity(out.len() * q as usize);
            for prefix in &out {
                for c in 0..q {
                    let mut v = prefix.clone();
                    v.push(c);
                    next.push(v);
                }
            }
            out = next;
        }
        out
    }

    fn multiply(q: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
        // (x^da + sum a_i x^i)(x^db + sum b_j x^j), keeping the low
        // da + db coefficients of the monic product
        let da = a.len();
        let db = b.len();
        let mut full = vec![0u64; da + db + 1];
        full[da + db] = 1;
        let coeff = |v: &[u32], i: usize, d: usize| -> u64 {
            if i == d {
                1
            } else {
                u64::from(v[i])
            }
        };
        let mut out = vec![0u64; da + db + 1];
        for i in 0..=da {
            for j in 0..=db {
                out[i + j] += coeff(a, i, da) * coeff(b, j, db);
            }
        }
        out.truncate(da + db);
        out.iter().map(|&c| (c % u64::from(q)) as u32).collect()
    }

    let mut reducible = std::collections::HashSet::new();
    for da in 1..=deg / 2 {
        let db = deg - da;
        for a in all_monic(q, da) {
            for b in all_monic(q, db) {
                reducible.insert(multiply(q, &a, &b));
            }
        }
    }
    all_monic(q, deg)
        .into_iter()
        .filter(|f| !reducible.contains(f))
        .filter(|f| !nonzero_constant || f[0] != 0)
        .count() as u64
}
