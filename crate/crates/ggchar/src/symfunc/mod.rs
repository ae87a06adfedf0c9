//! The graded algebra of symmetric functions over the Laurent coefficient
//! ring: five classical bases, conversions through the power-sum hub,
//! multiplication, the omega involution, the Hall scalar product, plethysm by
//! power sums, and power-sum specialization.
//!
//! Alphabets are abstract: a [`SymFunc`] is a basis tag plus a finite linear
//! combination of basis elements indexed by partitions. No variable lists are
//! ever stored; identities that genuinely need concrete variables instantiate
//! them in tests via [`SymFunc::specialize_p`].

pub(crate) mod tables;

use crate::partition::Partition;
use crate::ring::{LaurentPoly, Rat};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use tables::{degree_tables, solve_lower, solve_upper};

/// One of the five classical bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisTag {
    Monomial,
    Elementary,
    Complete,
    PowerSum,
    Schur,
}

impl BasisTag {
    pub const ALL: [BasisTag; 5] = [
        BasisTag::Monomial,
        BasisTag::Elementary,
        BasisTag::Complete,
        BasisTag::PowerSum,
        BasisTag::Schur,
    ];

    pub fn letter(self) -> char {
        match self {
            BasisTag::Monomial => 'm',
            BasisTag::Elementary => 'e',
            BasisTag::Complete => 'h',
            BasisTag::PowerSum => 'p',
            BasisTag::Schur => 's',
        }
    }

    /// Whether index partitions simply concatenate under multiplication.
    fn is_multiplicative(self) -> bool {
        matches!(
            self,
            BasisTag::Complete | BasisTag::Elementary | BasisTag::PowerSum
        )
    }
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for BasisTag {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "m" => Ok(BasisTag::Monomial),
            "e" => Ok(BasisTag::Elementary),
            "h" => Ok(BasisTag::Complete),
            "p" => Ok(BasisTag::PowerSum),
            "s" => Ok(BasisTag::Schur),
            other => Err(format!(
                "unknown basis tag {other:?} (expected m, e, h, p or s)"
            )),
        }
    }
}

/// Errors from symmetric-function operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymFuncError {
    /// Addition of two functions carried in different bases.
    BasisMismatch(BasisTag, BasisTag),
    /// Specialization with no value assigned to some needed `p_k`.
    MissingAssignment(u32),
}

impl fmt::Display for SymFuncError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymFuncError::BasisMismatch(a, b) => {
                write!(f, "basis mismatch: {a} vs {b} (convert first)")
            }
            SymFuncError::MissingAssignment(k) => {
                write!(f, "no value assigned to p_{k}")
            }
        }
    }
}

impl std::error::Error for SymFuncError {}

/// A basis-tagged, degree-graded finite linear combination of symmetric
/// functions with Laurent-polynomial coefficients.
///
/// No zero coefficients are stored; two values in the same basis are equal
/// exactly when their term maps are equal, and values in different bases are
/// compared by converting both to the power-sum basis.
#[derive(Clone, Debug)]
pub struct SymFunc {
    basis: BasisTag,
    terms: BTreeMap<Partition, LaurentPoly>,
}

impl SymFunc {
    pub fn zero(basis: BasisTag) -> Self {
        SymFunc {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The constant 1 (coefficient 1 on the empty partition).
    pub fn one(basis: BasisTag) -> Self {
        SymFunc::basis_element(basis, Partition::empty())
    }

    /// The single basis element indexed by `lam`, with coefficient 1.
    pub fn basis_element(basis: BasisTag, lam: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lam, LaurentPoly::one());
        SymFunc { basis, terms }
    }

    pub fn h(parts: &[u32]) -> Self {
        SymFunc::basis_element(BasisTag::Complete, Partition::new(parts.iter().copied()))
    }

    pub fn e(parts: &[u32]) -> Self {
        SymFunc::basis_element(BasisTag::Elementary, Partition::new(parts.iter().copied()))
    }

    pub fn m(parts: &[u32]) -> Self {
        SymFunc::basis_element(BasisTag::Monomial, Partition::new(parts.iter().copied()))
    }

    pub fn p(parts: &[u32]) -> Self {
        SymFunc::basis_element(BasisTag::PowerSum, Partition::new(parts.iter().copied()))
    }

    pub fn s(parts: &[u32]) -> Self {
        SymFunc::basis_element(BasisTag::Schur, Partition::new(parts.iter().copied()))
    }

    /// Builds from `(partition, coefficient)` pairs, summing duplicates and
    /// dropping zeros.
    pub fn from_terms<I>(basis: BasisTag, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, LaurentPoly)>,
    {
        let mut out = SymFunc::zero(basis);
        for (lam, c) in terms {
            out.add_term(lam, c);
        }
        out
    }

    pub fn basis(&self) -> BasisTag {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order: degree ascending, reverse-lexicographic
    /// within a degree.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of the basis element indexed by `lam` (zero if absent).
    pub fn coeff(&self, lam: &Partition) -> LaurentPoly {
        self.terms.get(lam).cloned().unwrap_or_default()
    }

    /// The common degree of all terms, if the function is homogeneous and
    /// nonzero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Partition::size);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    fn add_term(&mut self, lam: Partition, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&lam) {
            Some(existing) => {
                *existing = &*existing + &c;
                if existing.is_zero() {
                    self.terms.remove(&lam);
                }
            }
            None => {
                self.terms.insert(lam, c);
            }
        }
    }

    /// Coefficientwise sum; fails unless both operands carry the same basis.
    pub fn try_add(&self, other: &SymFunc) -> Result<SymFunc, SymFuncError> {
        if self.basis != other.basis {
            return Err(SymFuncError::BasisMismatch(self.basis, other.basis));
        }
        let mut out = self.clone();
        for (lam, c) in other.terms() {
            out.add_term(lam.clone(), c.clone());
        }
        Ok(out)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &LaurentPoly) -> SymFunc {
        SymFunc::from_terms(
            self.basis,
            self.terms().map(|(lam, v)| (lam.clone(), v * c)),
        )
    }

    pub fn scale_rat(&self, c: &Rat) -> SymFunc {
        SymFunc::from_terms(
            self.basis,
            self.terms().map(|(lam, v)| (lam.clone(), v.scale(c))),
        )
    }

    /// The same element of the ring expressed in `target`.
    pub fn convert(&self, target: BasisTag) -> SymFunc {
        if self.basis == target {
            return self.clone();
        }
        self.to_p().convert_from_p(target)
    }

    fn to_p(&self) -> SymFunc {
        if self.basis == BasisTag::PowerSum {
            return self.clone();
        }
        let mut out = SymFunc::zero(BasisTag::PowerSum);
        for (degree, coeffs) in self.dense_by_degree() {
            let t = degree_tables(degree);
            let p_coeffs = match self.basis {
                BasisTag::Complete => apply_rows(t.h_to_p(), &coeffs),
                BasisTag::Elementary => apply_rows(t.e_to_p(), &coeffs),
                BasisTag::Schur => apply_rows(t.h_to_p(), &apply_rows(t.s_to_h(), &coeffs)),
                BasisTag::Monomial => solve_lower(t.p_to_m(), &coeffs),
                BasisTag::PowerSum => unreachable!(),
            };
            for (lam, c) in t.parts.iter().zip(p_coeffs) {
                out.add_term(lam.clone(), c);
            }
        }
        out
    }

    fn convert_from_p(&self, target: BasisTag) -> SymFunc {
        debug_assert_eq!(self.basis, BasisTag::PowerSum);
        if target == BasisTag::PowerSum {
            return self.clone();
        }
        let mut out = SymFunc::zero(target);
        for (degree, coeffs) in self.dense_by_degree() {
            let t = degree_tables(degree);
            let new_coeffs = match target {
                BasisTag::Complete => solve_upper(t.h_to_p(), &coeffs),
                BasisTag::Elementary => solve_upper(t.e_to_p(), &coeffs),
                BasisTag::Monomial => apply_rows(t.p_to_m(), &coeffs),
                BasisTag::Schur => solve_lower(t.s_to_h(), &solve_upper(t.h_to_p(), &coeffs)),
                BasisTag::PowerSum => unreachable!(),
            };
            for (lam, c) in t.parts.iter().zip(new_coeffs) {
                out.add_term(lam.clone(), c);
            }
        }
        out
    }

    /// Splits into per-degree dense coefficient vectors over the canonical
    /// partition list of each degree.
    fn dense_by_degree(&self) -> Vec<(u32, Vec<LaurentPoly>)> {
        let mut degrees: BTreeMap<u32, Vec<(&Partition, &LaurentPoly)>> = BTreeMap::new();
        for (lam, c) in self.terms() {
            degrees.entry(lam.size()).or_default().push((lam, c));
        }
        degrees
            .into_iter()
            .map(|(d, group)| {
                let t = degree_tables(d);
                let mut dense = vec![LaurentPoly::zero(); t.parts.len()];
                for (lam, c) in group {
                    dense[t.pos(lam)] = c.clone();
                }
                (d, dense)
            })
            .collect()
    }

    /// The omega involution, diagonal in the power-sum basis: the coefficient
    /// of `p_lambda` picks up the sign `(-1)^{|lambda| - l(lambda)}`.
    pub fn omega(&self) -> SymFunc {
        let p_form = self.to_p();
        let twisted = SymFunc::from_terms(
            BasisTag::PowerSum,
            p_form.terms().map(|(lam, c)| {
                let c = if lam.omega_sign() < 0 { -c } else { c.clone() };
                (lam.clone(), c)
            }),
        );
        twisted.convert_from_p(self.basis)
    }

    /// The Hall scalar product, computed in the power-sum basis with
    /// `<p_lambda, p_mu> = delta z_lambda`.
    pub fn inner(&self, other: &SymFunc) -> LaurentPoly {
        let a = self.to_p();
        let b = other.to_p();
        let mut out = LaurentPoly::zero();
        for (lam, ca) in a.terms() {
            let cb = match b.terms.get(lam) {
                Some(c) => c,
                None => continue,
            };
            let z = Rat::from_integer(lam.z_stat());
            out = &out + &(ca * cb).scale(&z);
        }
        out
    }

    /// The plethysm `f[p_b]`: in the power-sum basis, the substitution
    /// `p_k -> p_{k b}` on every index. Degrees multiply by `b`.
    pub fn plethysm_pb(&self, b: u32) -> SymFunc {
        assert!(b >= 1, "plethysm index must be positive");
        let p_form = self.to_p();
        let substituted = SymFunc::from_terms(
            BasisTag::PowerSum,
            p_form
                .terms()
                .map(|(lam, c)| (lam.scale_parts(b), c.clone())),
        );
        substituted.convert_from_p(self.basis)
    }

    /// Replaces each `p_k` by `assign[k]` and sums with coefficients; the
    /// assignment must cover every power-sum index appearing in the p-basis
    /// form of `self`.
    pub fn specialize_p(
        &self,
        assign: &BTreeMap<u32, LaurentPoly>,
    ) -> Result<LaurentPoly, SymFuncError> {
        let p_form = self.to_p();
        let mut out = LaurentPoly::zero();
        for (lam, c) in p_form.terms() {
            let mut prod = c.clone();
            for &part in lam.parts() {
                let value = assign
                    .get(&part)
                    .ok_or(SymFuncError::MissingAssignment(part))?;
                prod = &prod * value;
            }
            out = &out + &prod;
        }
        Ok(out)
    }
}

/// Applies a row-indexed matrix: `out[col] = sum_row x[row] * m[row][col]`.
fn apply_rows(m: &[Vec<Rat>], x: &[LaurentPoly]) -> Vec<LaurentPoly> {
    let n = x.len();
    let mut out = vec![LaurentPoly::zero(); n];
    for (row, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (col, cell) in m[row].iter().enumerate() {
            if !cell.is_zero() {
                out[col] = &out[col] + &xi.scale(cell);
            }
        }
    }
    out
}

/// Same basis compares term maps; across bases both sides are converted to
/// the power-sum basis first.
impl PartialEq for SymFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.basis == other.basis {
            self.terms == other.terms
        } else {
            self.to_p().terms == other.to_p().terms
        }
    }
}

impl Eq for SymFunc {}

impl Add<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    /// Panics on a basis mismatch; use [`SymFunc::try_add`] to handle it.
    fn add(self, rhs: &SymFunc) -> SymFunc {
        self.try_add(rhs).unwrap()
    }
}

impl Sub<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        self.try_add(&-rhs).unwrap()
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().map(|(l, c)| (l.clone(), -c)).collect(),
        }
    }
}

impl Neg for SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        -&self
    }
}

impl Mul<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    /// Product in the ring of symmetric functions. In a multiplicative basis
    /// (`h`, `e`, `p`) index partitions concatenate; otherwise the product is
    /// computed through the power-sum basis and converted back to the basis
    /// of the left operand.
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        if self.basis == rhs.basis && self.basis.is_multiplicative() {
            return mul_concat(self, rhs);
        }
        mul_concat(&self.to_p(), &rhs.to_p()).convert_from_p(self.basis)
    }
}

fn mul_concat(a: &SymFunc, b: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero(a.basis);
    for (la, ca) in a.terms() {
        for (lb, cb) in b.terms() {
            out.add_term(la.concat_sort(lb), ca * cb);
        }
    }
    out
}

macro_rules! forward_symfunc_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for SymFunc {
            type Output = SymFunc;
            fn $method(self, rhs: SymFunc) -> SymFunc {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&SymFunc> for SymFunc {
            type Output = SymFunc;
            fn $method(self, rhs: &SymFunc) -> SymFunc {
                (&self).$method(rhs)
            }
        }
        impl $trait<SymFunc> for &SymFunc {
            type Output = SymFunc;
            fn $method(self, rhs: SymFunc) -> SymFunc {
                self.$method(&rhs)
            }
        }
    };
}

forward_symfunc_binop!(Add, add);
forward_symfunc_binop!(Sub, sub);
forward_symfunc_binop!(Mul, mul);

/// Canonical text form: `(q^2-1)*h[2] - (q-1)*h[1,1]`.
///
/// Terms are ordered degree ascending and reverse-lexicographically within a
/// degree; symbolic coefficients are parenthesized, constants are printed
/// bare, and a coefficient whose leading term is negative is pulled through
/// the joining sign.
impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::Signed;
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (lam, c) in self.terms() {
            let leading_negative = c.max_exp().is_some_and(|k| c.coeff(k).is_negative());
            let display = if leading_negative { -c } else { c.clone() };
            if first {
                if leading_negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if leading_negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if lam.is_empty() {
                if display.is_constant() {
                    write!(f, "{display}")?;
                } else {
                    write!(f, "({display})")?;
                }
            } else if display.is_constant() {
                write!(f, "{display}*{}{lam}", self.basis)?;
            } else {
                write!(f, "({display})*{}{lam}", self.basis)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;
    use crate::ring::{rat, rat_frac};
    use proptest::prelude::*;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.iter().copied())
    }

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(k, c)| (k, rat(c))))
    }

    #[test]
    fn add_and_mismatch() {
        let two_h2 = SymFunc::h(&[2]).scale(&lp(&[(0, 2)]));
        assert_eq!(&SymFunc::h(&[2]) + &SymFunc::h(&[2]), two_h2);
        assert_eq!(
            &SymFunc::h(&[2]) + &SymFunc::zero(BasisTag::Complete),
            SymFunc::h(&[2])
        );
        let q_minus_1 = lp(&[(1, 1), (0, -1)]);
        let cancel = SymFunc::h(&[1])
            .scale(&q_minus_1)
            .try_add(&SymFunc::h(&[1]).scale(&-&q_minus_1));
        assert!(cancel.unwrap().is_zero());
        assert_eq!(
            SymFunc::h(&[2]).try_add(&SymFunc::e(&[2])),
            Err(SymFuncError::BasisMismatch(
                BasisTag::Complete,
                BasisTag::Elementary
            ))
        );
    }

    #[test]
    fn mul_multiplicative_bases() {
        assert_eq!(&SymFunc::h(&[2]) * &SymFunc::h(&[1]), SymFunc::h(&[2, 1]));
        assert_eq!(&SymFunc::p(&[3]) * &SymFunc::p(&[3]), SymFunc::p(&[3, 3]));
    }

    /// Evaluates `m_lambda` at concrete values by summing distinct monomials.
    fn eval_monomial(lam: &Partition, ys: &[Rat]) -> Rat {
        fn distinct_perms(sorted: &[u32]) -> Vec<Vec<u32>> {
            if sorted.is_empty() {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            let mut used = Vec::new();
            for i in 0..sorted.len() {
                if used.contains(&sorted[i]) {
                    continue;
                }
                used.push(sorted[i]);
                let mut rest = sorted.to_vec();
                rest.remove(i);
                for mut tail in distinct_perms(&rest) {
                    let mut v = vec![sorted[i]];
                    v.append(&mut tail);
                    out.push(v);
                }
            }
            out
        }
        let l = lam.len();
        if l > ys.len() {
            return Rat::zero();
        }
        // choose positions, then spread the parts over them in every
        // distinct order
        fn choose(k: usize, n: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in 0..n {
                for rest in choose(k - 1, n) {
                    if rest.iter().all(|&r| r > first) {
                        let mut v = vec![first];
                        v.extend(rest);
                        out.push(v);
                    }
                }
            }
            out
        }
        let mut total = Rat::zero();
        for positions in choose(l, ys.len()) {
            for arrangement in distinct_perms(lam.parts()) {
                let mut prod = Rat::from_integer(1.into());
                for (slot, &exp) in positions.iter().zip(&arrangement) {
                    prod *= ys[*slot].pow(exp as i32);
                }
                total += prod;
            }
        }
        total
    }

    /// Concrete evaluation of any SymFunc through power-sum specialization.
    fn eval_concrete(f: &SymFunc, ys: &[Rat]) -> Rat {
        let max_deg = f.terms().map(|(l, _)| l.size()).max().unwrap_or(0);
        let assign: BTreeMap<u32, LaurentPoly> = (1..=max_deg.max(1))
            .map(|k| {
                let value: Rat = ys.iter().map(|y| y.pow(k as i32)).sum();
                (k, LaurentPoly::constant(value))
            })
            .collect();
        f.specialize_p(&assign).unwrap().coeff(0)
    }

    #[test]
    fn mul_monomials_matches_brute_force() {
        // m_1 * m_1 = m_2 + 2 m_{1,1}
        let product = &SymFunc::m(&[1]) * &SymFunc::m(&[1]);
        let expected = SymFunc::from_terms(
            BasisTag::Monomial,
            [
                (part(&[2]), LaurentPoly::one()),
                (part(&[1, 1]), lp(&[(0, 2)])),
            ],
        );
        assert_eq!(product, expected);
        // cross-check against direct expansion in 4 concrete variables
        let ys = [rat_frac(1, 2), rat(2), rat_frac(3, 5), rat(7)];
        let direct = eval_monomial(&part(&[1]), &ys) * eval_monomial(&part(&[1]), &ys);
        let via_terms: Rat = expected
            .terms()
            .map(|(lam, c)| c.coeff(0) * eval_monomial(lam, &ys))
            .sum();
        assert_eq!(direct, via_terms);
        assert_eq!(direct, eval_concrete(&product, &ys));
    }

    #[test]
    fn conversion_examples() {
        // h_2 = (p_{1,1} + p_2)/2
        let h2_p = SymFunc::h(&[2]).convert(BasisTag::PowerSum);
        let expected = SymFunc::from_terms(
            BasisTag::PowerSum,
            [
                (part(&[2]), LaurentPoly::constant(rat_frac(1, 2))),
                (part(&[1, 1]), LaurentPoly::constant(rat_frac(1, 2))),
            ],
        );
        assert_eq!(h2_p, expected);
        // p_2 = 2 h_2 - h_{1,1}
        let p2_h = SymFunc::p(&[2]).convert(BasisTag::Complete);
        let expected = SymFunc::from_terms(
            BasisTag::Complete,
            [(part(&[2]), lp(&[(0, 2)])), (part(&[1, 1]), lp(&[(0, -1)]))],
        );
        assert_eq!(p2_h, expected);
        // s_{1,1} = h_{1,1} - h_2
        let s11_h = SymFunc::s(&[1, 1]).convert(BasisTag::Complete);
        let expected = SymFunc::from_terms(
            BasisTag::Complete,
            [(part(&[1, 1]), lp(&[(0, 1)])), (part(&[2]), lp(&[(0, -1)]))],
        );
        assert_eq!(s11_h, expected);
    }

    #[test]
    fn omega_examples() {
        assert_eq!(SymFunc::p(&[2]).omega(), -SymFunc::p(&[2]));
        assert_eq!(SymFunc::h(&[1]).omega(), SymFunc::h(&[1]));
        assert_eq!(SymFunc::h(&[3]).omega().omega(), SymFunc::h(&[3]));
        for n in 1..=5 {
            // cross-basis equality via the power-sum comparison
            assert_eq!(SymFunc::h(&[n]).omega(), SymFunc::e(&[n]));
        }
    }

    #[test]
    fn inner_product_examples() {
        assert_eq!(
            SymFunc::h(&[2, 1]).inner(&SymFunc::m(&[2, 1])),
            LaurentPoly::one()
        );
        assert!(SymFunc::h(&[2]).inner(&SymFunc::m(&[1, 1])).is_zero());
        assert_eq!(SymFunc::p(&[2]).inner(&SymFunc::p(&[2])), lp(&[(0, 2)]));
    }

    #[test]
    fn plethysm_examples() {
        for a in 1..=4 {
            assert_eq!(SymFunc::h(&[a]).plethysm_pb(1), SymFunc::h(&[a]));
        }
        assert_eq!(SymFunc::p(&[3]).plethysm_pb(2), SymFunc::p(&[6]));
        // h_2[p_2] = (p_{2,2} + p_4)/2
        let expected = SymFunc::from_terms(
            BasisTag::PowerSum,
            [
                (part(&[4]), LaurentPoly::constant(rat_frac(1, 2))),
                (part(&[2, 2]), LaurentPoly::constant(rat_frac(1, 2))),
            ],
        );
        assert_eq!(SymFunc::h(&[2]).plethysm_pb(2), expected);
    }

    #[test]
    fn specialize_examples() {
        let assign: BTreeMap<u32, LaurentPoly> = (1..=4)
            .map(|k| (k, LaurentPoly::q_pow_minus_one(k)))
            .collect();
        assert_eq!(
            SymFunc::h(&[1]).specialize_p(&assign).unwrap(),
            lp(&[(1, 1), (0, -1)])
        );
        // h_2 at p_k = q^k - 1 gives q^2 - q
        assert_eq!(
            SymFunc::h(&[2]).specialize_p(&assign).unwrap(),
            lp(&[(2, 1), (1, -1)])
        );
        // m_{1,1} gives -(q-1)
        assert_eq!(
            SymFunc::m(&[1, 1]).specialize_p(&assign).unwrap(),
            lp(&[(1, -1), (0, 1)])
        );
        let empty = BTreeMap::new();
        assert_eq!(
            SymFunc::h(&[2]).specialize_p(&empty),
            Err(SymFuncError::MissingAssignment(2))
        );
    }

    #[test]
    fn display_form() {
        let rho2 = SymFunc::from_terms(
            BasisTag::Complete,
            [
                (part(&[2]), lp(&[(2, 1), (0, -1)])),
                (part(&[1, 1]), lp(&[(1, -1), (0, 1)])),
            ],
        );
        assert_eq!(rho2.to_string(), "(q^2-1)*h[2] - (q-1)*h[1,1]");
        let constant = SymFunc::one(BasisTag::Complete);
        assert_eq!(constant.to_string(), "1");
        let at_2 = SymFunc::from_terms(
            BasisTag::Complete,
            [(part(&[2]), lp(&[(0, 3)])), (part(&[1, 1]), lp(&[(0, -1)]))],
        );
        assert_eq!(at_2.to_string(), "3*h[2] - 1*h[1,1]");
    }

    fn arb_coeff() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-2i64..4, -9i64..9), 0..3)
            .prop_map(|terms| LaurentPoly::from_terms(terms.into_iter().map(|(k, c)| (k, rat(c)))))
    }

    fn arb_partition(max: u32) -> impl Strategy<Value = Partition> {
        (0..=max).prop_flat_map(|n| {
            let all = partitions_of(n);
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
    }

    fn arb_symfunc(basis: BasisTag, max_deg: u32) -> impl Strategy<Value = SymFunc> {
        proptest::collection::vec((arb_partition(max_deg), arb_coeff()), 0..4)
            .prop_map(move |terms| SymFunc::from_terms(basis, terms))
    }

    fn arb_basis() -> impl Strategy<Value = BasisTag> {
        proptest::sample::select(&BasisTag::ALL[..])
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn conversion_roundtrip(
            (src, f) in arb_basis().prop_flat_map(|b| (Just(b), arb_symfunc(b, 6))),
            dst in arb_basis(),
        ) {
            prop_assert_eq!(f.convert(dst).convert(src), f);
        }

        #[test]
        fn mul_is_degree_additive(
            a in arb_partition(5),
            b in arb_partition(5),
            basis in arb_basis(),
        ) {
            let fa = SymFunc::basis_element(basis, a.clone());
            let fb = SymFunc::basis_element(basis, b.clone());
            let prod = &fa * &fb;
            for (lam, _) in prod.terms() {
                prop_assert_eq!(lam.size(), a.size() + b.size());
            }
        }

        #[test]
        fn omega_is_involutive_algebra_map(
            f in arb_symfunc(BasisTag::Complete, 5),
            g in arb_symfunc(BasisTag::Complete, 4),
        ) {
            prop_assert_eq!(f.omega().omega(), f.clone());
            prop_assert_eq!((&f * &g).omega(), &f.omega() * &g.omega());
        }

        #[test]
        fn plethysm_is_algebra_map(
            f in arb_symfunc(BasisTag::PowerSum, 4),
            g in arb_symfunc(BasisTag::PowerSum, 4),
            b in 1u32..4,
            c in 1u32..3,
        ) {
            prop_assert_eq!(
                (&f * &g).plethysm_pb(b),
                &f.plethysm_pb(b) * &g.plethysm_pb(b)
            );
            prop_assert_eq!(f.plethysm_pb(b).plethysm_pb(c), f.plethysm_pb(b * c));
        }

        #[test]
        fn specialization_is_ring_hom(
            f in arb_symfunc(BasisTag::Complete, 4),
            g in arb_symfunc(BasisTag::Complete, 4),
        ) {
            let assign: BTreeMap<u32, LaurentPoly> = (1..=8)
                .map(|k| (k, LaurentPoly::q_pow_minus_one(k)))
                .collect();
            let lhs = (&f * &g).specialize_p(&assign).unwrap();
            let rhs = &f.specialize_p(&assign).unwrap() * &g.specialize_p(&assign).unwrap();
            prop_assert_eq!(lhs, rhs);
            let sum_lhs = (&f + &g).specialize_p(&assign).unwrap();
            let sum_rhs = &f.specialize_p(&assign).unwrap() + &g.specialize_p(&assign).unwrap();
            prop_assert_eq!(sum_lhs, sum_rhs);
        }
    }

    #[test]
    fn orthogonality_small_degrees() {
        for n in 0..=6u32 {
            for lam in partitions_of(n) {
                for mu in partitions_of(n) {
                    let hm = SymFunc::basis_element(BasisTag::Complete, lam.clone())
                        .inner(&SymFunc::basis_element(BasisTag::Monomial, mu.clone()));
                    let ss = SymFunc::basis_element(BasisTag::Schur, lam.clone())
                        .inner(&SymFunc::basis_element(BasisTag::Schur, mu.clone()));
                    if lam == mu {
                        assert!(hm.is_one(), "<h,m> != 1 at {lam}");
                        assert!(ss.is_one(), "<s,s> != 1 at {lam}");
                    } else {
                        assert!(hm.is_zero(), "<h,m> != 0 at {lam},{mu}");
                        assert!(ss.is_zero(), "<s,s> != 0 at {lam},{mu}");
                    }
                }
            }
        }
    }
}
