//! Expanding class functions in the `{rho_lambda}` basis at a numeric `q`,
//! and reading off character dimensions as coefficient sums.
//!
//! The `data/` directory ships reference expansions, at q = 2, of the
//! characteristic images of induced linear supercharacters of U_3 and U_4;
//! this example reconstructs each one, expands it back, and prints its
//! dimension.
//!
//! ```bash
//! cargo run -p ggchar --example rho_basis_dimension
//! ```

use ggchar::gelfand_graev::{rho_combination, to_rho_basis};
use ggchar::render::{parse_expression, rho_expansion_to_text, ExpressionFile};
use ggchar::ring::rat;
use ggchar::symfunc::SymFunc;
use std::path::Path;

fn main() {
    let q = rat(2);
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    for file in [
        "u3_arc_1_3.json",
        "u4_arc_1_4.json",
        "u4_arcs_13_24.json",
        "u4_arcs_12_24.json",
    ] {
        let src = std::fs::read_to_string(data.join(file)).unwrap();
        let terms = match parse_expression(&src).unwrap() {
            ExpressionFile::RhoCombination(terms) => terms,
            ExpressionFile::SymFunc(_) => unreachable!("data files are rho combinations"),
        };
        // assemble the symbolic h-expansion, then expand it back at q = 2
        let f = rho_combination(&terms);
        let expansion = to_rho_basis(&f, &q).unwrap();
        println!("{file}:");
        println!("  expansion = {}", rho_expansion_to_text(&expansion));
        println!("  dim       = {}", expansion.dim_sum());
    }

    // the expansion works for any homogeneous input, not just rho
    // combinations: h_1 = rho_1/(q-1) collapses to rho_1 at q = 2
    let e = to_rho_basis(&SymFunc::h(&[1]), &q).unwrap();
    println!("\nh[1] at q=2: {}", rho_expansion_to_text(&e));
}
