//! The exact coefficient ring: Laurent polynomials in `q` over
//! arbitrary-precision rationals.
//!
//! ```bash
//! cargo run -p ggchar --example laurent_arithmetic
//! ```

use ggchar::ring::{rat, LaurentPoly, RingError};

fn main() -> Result<(), RingError> {
    let q = LaurentPoly::q();
    let q_minus_1 = &q - &LaurentPoly::one();
    let q_plus_1 = &q + &LaurentPoly::one();

    let product = &q_minus_1 * &q_plus_1;
    println!("(q-1)(q+1)        = {product}");

    // exact division recovers a factor or reports failure
    println!("(q^2-1)/(q+1)     = {}", product.exact_div(&q_plus_1)?);
    match q_plus_1.exact_div(&q_minus_1) {
        Err(RingError::NotDivisible) => println!("(q+1)/(q-1)       = not divisible"),
        other => panic!("unexpected result {other:?}"),
    }

    // negative exponents are first-class: q^{-1} * q = 1
    let q_inv = LaurentPoly::q_pow(-1);
    println!("q^-1 * q          = {}", &q_inv * &q);

    // the symbolic binomial coefficient used in orbit counting:
    // choose(q-1, 2) = (q-1)(q-2)/2
    let choose2 = q_minus_1.falling_binomial(2);
    println!("choose(q-1, 2)    = {choose2}");

    // exact evaluation: at q = 7, choose(6, 2) = 15
    println!("  at q=7          = {}", choose2.eval(&rat(7))?);

    // evaluation respects the ring structure
    let a = LaurentPoly::from_terms([(2, rat(3)), (-1, rat(1))]);
    let b = LaurentPoly::from_terms([(1, rat(1)), (0, rat(-5))]);
    let x = rat(4);
    assert_eq!((&a * &b).eval(&x)?, a.eval(&x)? * b.eval(&x)?);
    println!("eval is a ring homomorphism: checked at q=4");
    Ok(())
}
