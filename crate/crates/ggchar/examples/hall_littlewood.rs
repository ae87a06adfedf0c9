//! One-row Hall-Littlewood symmetric functions: the generating-function
//! coefficients `q_r(Y;t)`, the polynomials `P_n(Y;t) = q_n/(1-t)`, and the
//! twisted form at `t = q^{-1}`.
//!
//! ```bash
//! cargo run -p ggchar --example hall_littlewood
//! ```

use ggchar::hall_littlewood::{hl_one_row, qr_symfunc, twisted_hl_one_row, HLParam};
use ggchar::ring::{rat, LaurentPoly};

fn main() {
    let t = HLParam::q_inverse();

    println!("with t = q^-1:");
    for r in 0..=3 {
        println!("  q_{r} = {}", qr_symfunc(r, &t));
    }

    println!("\none-row Hall-Littlewood P_n = q_n/(1-t):");
    for n in 1..=3 {
        println!("  P_{n} = {}", hl_one_row(n, &t));
    }

    // the division by (1-t) is exact: (1-t) P_r = q_r
    let one_minus_t = &LaurentPoly::one() - t.value();
    for r in 1..=8 {
        assert_eq!(hl_one_row(r, &t).scale(&one_minus_t), qr_symfunc(r, &t));
    }
    println!("\n(1-t) P_r = q_r: checked for r <= 8");

    // at t = 0 the polynomial degenerates to h_n
    println!("\nP_4 at t=0: {}", hl_one_row(4, &HLParam::zero()));
    println!("P_3 at t=2: {}", hl_one_row(3, &HLParam::constant(rat(2))));

    // the twisted form is P_n(Y; q^{-1}) since n((n)) = 0
    println!("\ntwisted P~_2(Y;q) = {}", twisted_hl_one_row(2));
    println!("twisted P~_3(Y;q) = {}", twisted_hl_one_row(3));
}
