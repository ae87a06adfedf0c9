//! One-row Hall-Littlewood symmetric functions `q_r(Y;t)` and `P_n(Y;t)`,
//! and the twisted form `P~_n(Y;q) = P_n(Y;q^{-1})` obtained by instantiating
//! the parameter as `t = q^{-1}`.
//!
//! The parameter lives in the Laurent coefficient ring rather than being a
//! second indeterminate; every use in this crate either sets `t = q^{-1}` or
//! a rational constant.

use crate::ring::{LaurentPoly, Rat};
use crate::symfunc::{BasisTag, SymFunc};

/// An instantiation of the Hall-Littlewood parameter `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HLParam {
    value: LaurentPoly,
}

impl HLParam {
    pub fn new(value: LaurentPoly) -> Self {
        HLParam { value }
    }

    /// `t = q^{-1}`, the twist used by the characteristic map.
    pub fn q_inverse() -> Self {
        HLParam::new(LaurentPoly::q_pow(-1))
    }

    /// A constant rational value of `t`; `t = 0` degenerates `P_n` to `h_n`.
    pub fn constant(c: Rat) -> Self {
        HLParam::new(LaurentPoly::constant(c))
    }

    pub fn zero() -> Self {
        HLParam::new(LaurentPoly::zero())
    }

    pub fn value(&self) -> &LaurentPoly {
        &self.value
    }

    /// `1 - t`.
    fn one_minus(&self) -> LaurentPoly {
        &LaurentPoly::one() - &self.value
    }
}

/// `q_r(Y;t)` in the `h` basis, via the expansion
/// `q_r = sum_{i=0}^{r} (-t)^i e_i h_{r-i}`
/// (the `u^r` coefficient of `E(-tu) H(u)`). `q_0 = 1`.
pub fn qr_symfunc(r: u32, t: &HLParam) -> SymFunc {
    let mut acc = SymFunc::zero(BasisTag::Complete);
    let minus_t = -t.value();
    let mut t_power = LaurentPoly::one();
    for i in 0..=r {
        let e_i = SymFunc::e(&one_row(i)).convert(BasisTag::Complete);
        let h_rest = SymFunc::h(&one_row(r - i));
        acc = &acc + &(&e_i * &h_rest).scale(&t_power);
        t_power = &t_power * &minus_t;
    }
    acc
}

fn one_row(n: u32) -> Vec<u32> {
    if n == 0 {
        Vec::new()
    } else {
        vec![n]
    }
}

/// The one-row Hall-Littlewood polynomial `P_n(Y;t) = q_n(Y;t) / (1-t)`.
///
/// Panics if `t = 1` (the quotient is undefined there) or if some coefficient
/// of `q_n` fails to divide exactly — the latter cannot happen for a correct
/// `q_n` and signals a bug, not a user error.
pub fn hl_one_row(n: u32, t: &HLParam) -> SymFunc {
    assert!(n >= 1, "one-row Hall-Littlewood needs n >= 1");
    let denom = t.one_minus();
    assert!(
        !denom.is_zero(),
        "Hall-Littlewood parameter t = 1 is outside the domain of P_n"
    );
    let qn = qr_symfunc(n, t);
    SymFunc::from_terms(
        BasisTag::Complete,
        qn.terms().map(|(lam, c)| {
            let quotient = c
                .exact_div(&denom)
                .expect("(1-t) must divide every coefficient of q_n");
            (lam.clone(), quotient)
        }),
    )
}

/// The twisted one-row Hall-Littlewood polynomial `P~_n(Y;q)`.
///
/// Since `n((n)) = 0` the twist is just `P_n(Y;q^{-1})`.
pub fn twisted_hl_one_row(n: u32) -> SymFunc {
    hl_one_row(n, &HLParam::q_inverse())
}
