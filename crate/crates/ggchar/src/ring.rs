//! Exact coefficient arithmetic: arbitrary-precision rationals and Laurent
//! polynomials in the single indeterminate `q`.
//!
//! Every computation in this crate happens over [`LaurentPoly`]. Negative
//! exponents are first-class because the twisted Hall-Littlewood parameter is
//! `q^{-1}`. Values are kept in canonical form (no stored zero coefficients),
//! so equality is plain structural equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact rational scalar, always in lowest terms with positive denominator.
pub type Rat = BigRational;

/// Small-integer rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The fraction `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// `n!` as a rational.
pub fn factorial(n: u64) -> Rat {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rat::from_integer(acc)
}

/// Errors from Laurent-polynomial arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingError {
    /// Division by the zero polynomial.
    DivideByZero,
    /// The quotient does not exist in the Laurent-polynomial ring.
    NotDivisible,
    /// Evaluation at 0 of a polynomial with negative exponents.
    EvalAtZero,
}

impl fmt::Display for RingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingError::DivideByZero => write!(f, "division by the zero polynomial"),
            RingError::NotDivisible => write!(f, "quotient is not a Laurent polynomial"),
            RingError::EvalAtZero => {
                write!(f, "cannot evaluate negative exponents at zero")
            }
        }
    }
}

impl std::error::Error for RingError {}

/// A Laurent polynomial in `q` with exact rational coefficients.
///
/// Sparse map from exponent (possibly negative) to nonzero coefficient; the
/// zero polynomial is the empty map.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Rat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(Rat::one())
    }

    /// The constant polynomial `c`.
    pub fn constant(c: Rat) -> Self {
        LaurentPoly::monomial(0, c)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        LaurentPoly::monomial(1, Rat::one())
    }

    /// `q^k`, with `k` possibly negative.
    pub fn q_pow(k: i64) -> Self {
        LaurentPoly::monomial(k, Rat::one())
    }

    /// `c * q^k`.
    pub fn monomial(k: i64, c: Rat) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        LaurentPoly { coeffs }
    }

    /// Builds from `(exponent, coefficient)` pairs, summing duplicates and
    /// dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rat)>>(terms: I) -> Self {
        let mut out = LaurentPoly::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    /// `q^n - 1`.
    pub fn q_pow_minus_one(n: u32) -> Self {
        LaurentPoly::from_terms([(i64::from(n), Rat::one()), (0, -Rat::one())])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(Rat::is_one)
    }

    /// True when the polynomial is a single constant term (or zero).
    pub fn is_constant(&self) -> bool {
        self.coeffs.keys().all(|&k| k == 0)
    }

    /// Exponent/coefficient pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> + '_ {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    /// Coefficient of `q^k` (zero if absent).
    pub fn coeff(&self, k: i64) -> Rat {
        self.coeffs.get(&k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    fn add_term(&mut self, k: i64, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&k) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.coeffs.remove(&k);
                }
            }
            None => {
                self.coeffs.insert(k, c);
            }
        }
    }

    /// Multiplies by the scalar `c`.
    pub fn scale(&self, c: &Rat) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> LaurentPoly {
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, v)| (e + k, v.clone()))
                .collect(),
        }
    }

    /// `self^n` for `n >= 0`.
    pub fn pow(&self, n: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division: the `c` with `self = divisor * c`, if it exists.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly, RingError> {
        if divisor.is_zero() {
            return Err(RingError::DivideByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        // Shift both operands to ordinary polynomials with nonzero constant
        // term; divisibility is unaffected because q^k is a unit.
        let a_shift = self.min_exp().unwrap();
        let b_shift = divisor.min_exp().unwrap();
        let a = self.to_dense(a_shift);
        let b = divisor.to_dense(b_shift);

        let mut rem = a;
        let mut quot = vec![Rat::zero(); rem.len().saturating_sub(b.len()) + 1];
        let lead = b.last().unwrap().clone();
        for i in (0..quot.len()).rev() {
            let idx = i + b.len() - 1;
            if idx >= rem.len() || rem[idx].is_zero() {
                continue;
            }
            let factor = &rem[idx] / &lead;
            for (j, bj) in b.iter().enumerate() {
                let t = bj * &factor;
                rem[i + j] -= t;
            }
            quot[i] = factor;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(RingError::NotDivisible);
        }
        Ok(LaurentPoly::from_terms(
            quot.into_iter()
                .enumerate()
                .map(|(i, c)| (i as i64 + a_shift - b_shift, c)),
        ))
    }

    /// Dense coefficient vector of `self / q^shift`, lowest exponent first.
    fn to_dense(&self, shift: i64) -> Vec<Rat> {
        let max = self.max_exp().unwrap();
        let len = usize::try_from(max - shift).unwrap() + 1;
        let mut out = vec![Rat::zero(); len];
        for (k, c) in self.terms() {
            out[usize::try_from(k - shift).unwrap()] = c.clone();
        }
        out
    }

    /// The falling-factorial binomial `self (self-1) ... (self-m+1) / m!`,
    /// the symbolic "choose m" used in orbit counting. `m = 0` gives 1.
    pub fn falling_binomial(&self, m: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for k in 0..m {
            let factor = self - &LaurentPoly::constant(rat(i64::from(k)));
            acc = &acc * &factor;
        }
        acc.scale(&factorial(u64::from(m)).recip())
    }

    /// Exact evaluation at `x`.
    pub fn eval(&self, x: &Rat) -> Result<Rat, RingError> {
        if x.is_zero() {
            if self.min_exp().is_some_and(|m| m < 0) {
                return Err(RingError::EvalAtZero);
            }
            return Ok(self.coeff(0));
        }
        let mut acc = Rat::zero();
        for (k, c) in self.terms() {
            let p = match i32::try_from(k) {
                Ok(k) => x.pow(k),
                Err(_) => panic!("exponent {k} out of evaluation range"),
            };
            acc += c * p;
        }
        Ok(acc)
    }
}

impl num_traits::Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl num_traits::One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::constant(Rat::one())
    }
    fn is_one(&self) -> bool {
        LaurentPoly::is_one(self)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, -c);
        }
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ka, ca) in self.terms() {
            for (kb, cb) in rhs.terms() {
                out.add_term(ka + kb, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_by_value {
    ($trait:ident, $method:ident) => {
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_by_value!(Add, add);
forward_by_value!(Sub, sub);
forward_by_value!(Mul, mul);

/// Renders with exponents descending: `q^2-3*q+2`, `1/2*q^-1`, `-q+1`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().rev() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            match (*k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{mag}*q^{k}")?,
            }
        }
        Ok(())
    }
}
