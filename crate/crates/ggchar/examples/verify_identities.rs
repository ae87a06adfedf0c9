//! The identity-verification suite, run programmatically: four-way route
//! agreement, the convolution identity, the Moebius product identity, and
//! the coefficient sign law.
//!
//! ```bash
//! cargo run -p ggchar --example verify_identities
//! ```

use ggchar::gelfand_graev::verify_suite;

fn main() {
    let max_n = 5;
    let report = verify_suite(max_n);
    for check in &report {
        println!(
            "{:<20} n={}: {}",
            check.identity,
            check.n,
            if check.pass { "PASS" } else { "FAIL" }
        );
    }
    let failures = report.iter().filter(|c| !c.pass).count();
    println!(
        "\n{} checks up to n = {max_n}, {failures} failures",
        report.len()
    );
    assert_eq!(failures, 0);
}
