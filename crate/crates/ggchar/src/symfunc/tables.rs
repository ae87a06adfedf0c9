//! Per-degree transition data between the classical bases.
//!
//! All conversions route through the power-sum basis. For each homogeneous
//! degree the table can produce, as matrices over the rationals:
//!
//! - `h_to_p`, `e_to_p`: rows give the `p`-expansions of `h_lambda` and
//!   `e_lambda`, built from the Newton recurrences
//!   `n h_n = sum_k p_k h_{n-k}` and `n e_n = sum_k (-1)^{k-1} p_k e_{n-k}`.
//! - `p_to_m`: rows give the monomial expansion of `p_lambda`, built by
//!   iterated multiplication `p_r * m_mu`.
//! - `s_to_h`: rows give the `h`-expansion of `s_lambda` via the
//!   Jacobi-Trudi determinant `det(h_{lambda_i - i + j})`, expanded over
//!   permutations with early pruning on zero entries.
//!
//! The reverse directions are solved against these matrices: each one is
//! triangular with nonzero diagonal when partitions are listed in
//! reverse-lexicographic order, because the supports are constrained by
//! refinement (for `h`, `e`), coarsening (for `p_to_m`), and dominance (for
//! `s_to_h`).
//!
//! Tables are cached per degree and each matrix is built once on first use;
//! entries are immutable afterwards, so concurrent readers and concurrent
//! first-writers computing identical values are both fine.

use crate::partition::{partitions_of, Partition};
use crate::ring::{rat, Rat};
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

pub(crate) struct DegreeTables {
    /// Partitions of the degree in reverse-lexicographic order.
    pub parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    h_to_p: OnceLock<Vec<Vec<Rat>>>,
    e_to_p: OnceLock<Vec<Vec<Rat>>>,
    p_to_m: OnceLock<Vec<Vec<Rat>>>,
    s_to_h: OnceLock<Vec<Vec<Rat>>>,
}

impl DegreeTables {
    pub fn pos(&self, lam: &Partition) -> usize {
        self.index[lam]
    }

    pub fn h_to_p(&self) -> &[Vec<Rat>] {
        self.h_to_p
            .get_or_init(|| self.multiplicative_rows(&one_row_p_expansions(self.degree(), false)))
    }

    pub fn e_to_p(&self) -> &[Vec<Rat>] {
        self.e_to_p
            .get_or_init(|| self.multiplicative_rows(&one_row_p_expansions(self.degree(), true)))
    }

    pub fn p_to_m(&self) -> &[Vec<Rat>] {
        self.p_to_m.get_or_init(|| {
            self.parts
                .iter()
                .map(|mu| {
                    let mut acc: HashMap<Partition, Rat> = HashMap::new();
                    acc.insert(Partition::empty(), Rat::one());
                    for &part in mu.parts() {
                        acc = mul_p_into_m(part, &acc);
                    }
                    self.to_row(&acc)
                })
                .collect()
        })
    }

    pub fn s_to_h(&self) -> &[Vec<Rat>] {
        self.s_to_h.get_or_init(|| {
            self.parts
                .iter()
                .map(|lam| self.to_row(&jacobi_trudi(lam)))
                .collect()
        })
    }

    fn degree(&self) -> u32 {
        self.parts.first().map(Partition::size).unwrap_or(0)
    }

    fn multiplicative_rows(&self, one_row: &[HashMap<Partition, Rat>]) -> Vec<Vec<Rat>> {
        self.parts
            .iter()
            .map(|lam| {
                let mut acc: HashMap<Partition, Rat> = HashMap::new();
                acc.insert(Partition::empty(), Rat::one());
                for &part in lam.parts() {
                    acc = sparse_mul(&acc, &one_row[part as usize]);
                }
                self.to_row(&acc)
            })
            .collect()
    }

    fn to_row(&self, map: &HashMap<Partition, Rat>) -> Vec<Rat> {
        let mut row = vec![Rat::zero(); self.parts.len()];
        for (lam, c) in map {
            row[self.index[lam]] = c.clone();
        }
        row
    }
}

static CACHE: OnceLock<Mutex<HashMap<u32, Arc<DegreeTables>>>> = OnceLock::new();

pub(crate) fn degree_tables(n: u32) -> Arc<DegreeTables> {
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    Arc::clone(guard.entry(n).or_insert_with(|| {
        let parts = partitions_of(n);
        let index = parts
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        Arc::new(DegreeTables {
            parts,
            index,
            h_to_p: OnceLock::new(),
            e_to_p: OnceLock::new(),
            p_to_m: OnceLock::new(),
            s_to_h: OnceLock::new(),
        })
    }))
}

/// Multiplies two p-basis expansions; the index partitions of a
/// multiplicative basis concatenate.
fn sparse_mul(a: &HashMap<Partition, Rat>, b: &HashMap<Partition, Rat>) -> HashMap<Partition, Rat> {
    let mut out: HashMap<Partition, Rat> = HashMap::new();
    for (la, ca) in a {
        for (lb, cb) in b {
            let key = la.concat_sort(lb);
            let v = ca * cb;
            let entry = out.entry(key).or_insert_with(Rat::zero);
            *entry += v;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// p-expansions of `h_0..h_n` (or `e_0..e_n` when `alternating`), via the
/// Newton recurrences.
fn one_row_p_expansions(n: u32, alternating: bool) -> Vec<HashMap<Partition, Rat>> {
    let mut rows: Vec<HashMap<Partition, Rat>> = Vec::with_capacity(n as usize + 1);
    rows.push(HashMap::from([(Partition::empty(), Rat::one())]));
    for m in 1..=n {
        let mut acc: HashMap<Partition, Rat> = HashMap::new();
        for k in 1..=m {
            let sign = if alternating && k % 2 == 0 {
                rat(-1)
            } else {
                rat(1)
            };
            for (lam, c) in &rows[(m - k) as usize] {
                let key = lam.concat_sort(&Partition::one_row(k));
                let v = c * &sign;
                let entry = acc.entry(key).or_insert_with(Rat::zero);
                *entry += v;
            }
        }
        let inv = rat(i64::from(m)).recip();
        for c in acc.values_mut() {
            *c *= &inv;
        }
        acc.retain(|_, c| !c.is_zero());
        rows.push(acc);
    }
    rows
}

/// Expands `p_r * (monomial-basis expansion)` using the exponent-insertion
/// rule: each candidate result `nu` comes from appending a part `r` to `mu`
/// or adding `r` to one part, with multiplicity the number of positions of
/// `nu` from which removing `r` recovers `mu`.
fn mul_p_into_m(r: u32, f: &HashMap<Partition, Rat>) -> HashMap<Partition, Rat> {
    let mut out: HashMap<Partition, Rat> = HashMap::new();
    for (mu, c) in f {
        let mut candidates = vec![mu.concat_sort(&Partition::one_row(r))];
        for i in 0..mu.len() {
            let mut parts = mu.parts().to_vec();
            parts[i] += r;
            let nu = Partition::new(parts);
            if !candidates.contains(&nu) {
                candidates.push(nu);
            }
        }
        for nu in candidates {
            let mut mult = 0i64;
            for j in 0..nu.len() {
                let vj = nu.parts()[j];
                if vj < r {
                    continue;
                }
                let mut reduced: Vec<u32> = nu.parts().to_vec();
                if vj == r {
                    reduced.remove(j);
                } else {
                    reduced[j] = vj - r;
                }
                if Partition::new(reduced) == *mu {
                    mult += 1;
                }
            }
            if mult != 0 {
                let v = c * rat(mult);
                let entry = out.entry(nu).or_insert_with(Rat::zero);
                *entry += v;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// h-expansion of the Schur function via `det(h_{lambda_i - i + j})`,
/// expanded over permutations. Branches hitting an `h_{k<0} = 0` entry are
/// pruned as soon as the offending column is chosen, which keeps the
/// expansion near the nonzero band of the matrix.
fn jacobi_trudi(lam: &Partition) -> HashMap<Partition, Rat> {
    let l = lam.len();
    let mut out: HashMap<Partition, Rat> = HashMap::new();
    if l == 0 {
        out.insert(Partition::empty(), Rat::one());
        return out;
    }
    let mut used = vec![false; l];
    let mut chosen: Vec<u32> = Vec::with_capacity(l);
    expand_rows(lam, 0, 1, &mut used, &mut chosen, &mut out);
    out.retain(|_, c| !c.is_zero());
    out
}

fn expand_rows(
    lam: &Partition,
    row: usize,
    sign: i64,
    used: &mut Vec<bool>,
    chosen: &mut Vec<u32>,
    out: &mut HashMap<Partition, Rat>,
) {
    let l = used.len();
    if row == l {
        let parts: Vec<u32> = chosen.iter().copied().filter(|&k| k > 0).collect();
        let entry = out.entry(Partition::new(parts)).or_insert_with(Rat::zero);
        *entry += rat(sign);
        return;
    }
    for col in 0..l {
        if used[col] {
            continue;
        }
        let idx = i64::from(lam.parts()[row]) - row as i64 + col as i64;
        if idx < 0 {
            continue;
        }
        // parity of inversions introduced by placing this column
        let inversions = used[col + 1..].iter().filter(|&&u| u).count();
        let factor = if inversions % 2 == 0 { 1 } else { -1 };
        used[col] = true;
        chosen.push(idx as u32);
        expand_rows(lam, row + 1, sign * factor, used, chosen, out);
        chosen.pop();
        used[col] = false;
    }
}

/// Solves `x * M = b` where `M[row][col]` is nonzero only for
/// `col >= row` (upper triangular in list position), by forward substitution.
pub(crate) fn solve_upper<T>(m: &[Vec<Rat>], b: &[T]) -> Vec<T>
where
    T: Clone + Zero,
    for<'a> T: std::ops::Sub<&'a T, Output = T>,
    for<'a> &'a T: ScaleBy<Output = T>,
{
    let n = b.len();
    let mut x: Vec<T> = Vec::with_capacity(n);
    for j in 0..n {
        let mut rhs = b[j].clone();
        for (i, xi) in x.iter().enumerate().take(j) {
            if !m[i][j].is_zero() {
                rhs = rhs - &xi.scale_by(&m[i][j]);
            }
        }
        x.push(rhs.scale_by(&m[j][j].clone().recip()));
    }
    x
}

/// Solves `x * M = b` where `M[row][col]` is nonzero only for
/// `col <= row` (lower triangular in list position), by back substitution.
pub(crate) fn solve_lower<T>(m: &[Vec<Rat>], b: &[T]) -> Vec<T>
where
    T: Clone + Zero,
    for<'a> T: std::ops::Sub<&'a T, Output = T>,
    for<'a> &'a T: ScaleBy<Output = T>,
{
    let n = b.len();
    let mut x: Vec<T> = vec![T::zero(); n];
    for j in (0..n).rev() {
        let mut rhs = b[j].clone();
        for i in j + 1..n {
            if !m[i][j].is_zero() {
                rhs = rhs - &x[i].scale_by(&m[i][j]);
            }
        }
        x[j] = rhs.scale_by(&m[j][j].clone().recip());
    }
    x
}

/// Scalar multiplication by a rational, abstracted so the triangular solvers
/// work over both rational and Laurent-polynomial right-hand sides.
pub(crate) trait ScaleBy {
    type Output;
    fn scale_by(self, c: &Rat) -> Self::Output;
}

impl ScaleBy for &crate::ring::LaurentPoly {
    type Output = crate::ring::LaurentPoly;
    fn scale_by(self, c: &Rat) -> crate::ring::LaurentPoly {
        self.scale(c)
    }
}

impl ScaleBy for &Rat {
    type Output = Rat;
    fn scale_by(self, c: &Rat) -> Rat {
        self * c
    }
}
