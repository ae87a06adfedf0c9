//! Plethysm by power sums (`f[p_b]`, the substitution sending every variable
//! to its b-th power) and power-sum specialization.
//!
//! ```bash
//! cargo run -p ggchar --example plethysm
//! ```

use ggchar::ring::LaurentPoly;
use ggchar::symfunc::{BasisTag, SymFunc};
use std::collections::BTreeMap;

fn main() {
    // on power sums the substitution just scales indices: p_3[p_2] = p_6
    println!("p[3][p_2] = {}", SymFunc::p(&[3]).plethysm_pb(2));

    // h_2[p_2] in the power-sum basis
    let h2p2 = SymFunc::h(&[2]).plethysm_pb(2).convert(BasisTag::PowerSum);
    println!("h[2][p_2] = {h2p2}");

    // plethysm is an algebra map in its first argument
    let f = SymFunc::h(&[2]);
    let g = SymFunc::h(&[1, 1]);
    assert_eq!(
        (&f * &g).plethysm_pb(3),
        &f.plethysm_pb(3) * &g.plethysm_pb(3)
    );
    println!("(fg)[p_3] = f[p_3] g[p_3]: checked");

    // and it composes: (f[p_2])[p_3] = f[p_6]
    assert_eq!(f.plethysm_pb(2).plethysm_pb(3), f.plethysm_pb(6));
    println!("(f[p_2])[p_3] = f[p_6]: checked");

    // specialization: substituting p_k = q^k - 1 turns symmetric functions
    // into Laurent polynomials in q
    let assign: BTreeMap<u32, LaurentPoly> = (1..=4)
        .map(|k| (k, LaurentPoly::q_pow_minus_one(k)))
        .collect();
    for (name, f) in [
        ("h[2]", SymFunc::h(&[2])),
        ("m[1,1]", SymFunc::m(&[1, 1])),
        ("e[3]", SymFunc::e(&[3])),
    ] {
        let value = f.specialize_p(&assign).unwrap();
        println!("{name} at p_k = q^k - 1: {value}");
    }
}
