//! The plethysm image `rho_n` of the induced Gelfand-Graev characteristic,
//! computed by four independent routes that agree exactly: the convolution
//! recurrence, the Hall-Littlewood form, the monomial specialization, and
//! the orbit-family enumeration.
//!
//! ```bash
//! cargo run -p ggchar --example rho_four_routes
//! ```

use ggchar::gelfand_graev::{product_rho, rho, rho_coeff, rho_via_hl, rho_via_m, rho_via_theta};
use ggchar::partition::Partition;

fn main() {
    for n in 0..=4 {
        println!("rho_{n} = {}", rho(n));
    }

    println!("\nfour routes at n = 5:");
    let recurrence = rho(5);
    let hall_littlewood = rho_via_hl(5);
    let monomial = rho_via_m(5);
    let enumeration = rho_via_theta(5);
    assert_eq!(recurrence, hall_littlewood);
    assert_eq!(recurrence, monomial);
    assert_eq!(recurrence, enumeration);
    println!("  recurrence == hall-littlewood == monomial == enumeration");
    println!("  rho_5 = {recurrence}");

    // individual coefficients come from a recurrence that never expands
    // the full function
    let lam = Partition::new([2, 2, 1]);
    println!("\n[h{lam}] rho_5 = {}", rho_coeff(5, &lam).unwrap());

    // products of components multiply: one induced linear supercharacter
    // with component sizes 1, 2, 3
    let p = product_rho(&[1, 2, 3]);
    println!(
        "\nrho_1 rho_2 rho_3 has degree {:?} and {} terms",
        p.homogeneous_degree(),
        p.num_terms()
    );
}
