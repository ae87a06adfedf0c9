//! Partition enumeration and the statistics the symmetric-function formulas
//! consume.
//!
//! ```bash
//! cargo run -p ggchar --example partitions
//! ```

use ggchar::partition::{partitions_of, Partition};

fn main() {
    for n in [0u32, 3, 5] {
        let all = partitions_of(n);
        let rendered: Vec<String> = all.iter().map(|p| p.to_string()).collect();
        println!(
            "partitions of {n} ({} total): {}",
            all.len(),
            rendered.join(" ")
        );
    }

    let lam = Partition::new([2, 2, 1]);
    println!("\nlambda = {lam}");
    println!("  size   |lambda|  = {}", lam.size());
    println!("  length l(lambda) = {}", lam.len());
    println!("  z_lambda         = {}", lam.z_stat());
    println!("  n(lambda)        = {}", lam.n_stat());

    // multiset union backs multiplication in the multiplicative bases
    let mu = Partition::new([3, 1]);
    println!("  union with {mu}  = {}", lam.concat_sort(&mu));

    // refinement drives the triangularity of the rho-basis change
    println!(
        "  [1,1,1,1,1] refines {lam}: {}",
        Partition::new([1, 1, 1, 1, 1]).refines(&lam)
    );
    println!(
        "  [3,2] refines {lam}:       {}",
        Partition::new([3, 2]).refines(&lam)
    );
}
