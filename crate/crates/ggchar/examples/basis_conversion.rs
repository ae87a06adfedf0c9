//! The five classical bases and exact conversion between them, plus the Hall
//! scalar product and the omega involution.
//!
//! ```bash
//! cargo run -p ggchar --example basis_conversion
//! ```

use ggchar::symfunc::{BasisTag, SymFunc};

fn main() {
    // h_2 through every basis
    let h2 = SymFunc::h(&[2]);
    for target in BasisTag::ALL {
        println!("h[2] in the {target} basis: {}", h2.convert(target));
    }

    // conversions are exact inverses
    let f = &SymFunc::s(&[2, 1]) - &SymFunc::s(&[1, 1, 1]);
    let roundtrip = f
        .convert(BasisTag::Monomial)
        .convert(BasisTag::PowerSum)
        .convert(BasisTag::Schur);
    assert_eq!(roundtrip, f);
    println!("\ns[2,1] - s[1,1,1] survives s -> m -> p -> s unchanged");

    // the omega involution swaps h and e
    println!("\nomega(h[3])  = {}", SymFunc::h(&[3]).omega());
    println!("omega(e[3])  = {}", SymFunc::e(&[3]).omega());
    println!("omega(p[3])  = {}", SymFunc::p(&[3]).omega());

    // duality of the h and m bases under the Hall scalar product
    println!(
        "\n<h[2,1], m[2,1]> = {}",
        SymFunc::h(&[2, 1]).inner(&SymFunc::m(&[2, 1]))
    );
    println!(
        "<h[2,1], m[1,1,1]> = {}",
        SymFunc::h(&[2, 1]).inner(&SymFunc::m(&[1, 1, 1]))
    );
    println!(
        "<p[2], p[2]> = {} (the centralizer order z_(2))",
        SymFunc::p(&[2]).inner(&SymFunc::p(&[2]))
    );

    // multiplication works across bases; the result carries the left basis
    let product = &SymFunc::m(&[1]) * &SymFunc::m(&[1]);
    println!("\nm[1] * m[1] = {product}");
}
