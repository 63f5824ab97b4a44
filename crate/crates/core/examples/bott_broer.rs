//! Twisted forms on projective space and the nef vanishing scan.
//!
//! cargo run --example bott_broer -- 3

use loghodge::bott::{bott_table, broer_check};

fn main() -> loghodge::Result<()> {
    let n: usize = std::env::args().nth(1).map(|s| s.parse().expect("n is an integer")).unwrap_or(2);
    for k in [-3, 0, 2] {
        println!("h^i(P^{n}, Ω^j({k})):");
        print!("{}", bott_table(n, k)?);
    }

    let report = broer_check(n, -4, 6)?;
    println!("violations of H^i(Ω^j(k)) = 0 for i > j, 0 <= k <= 6: {}", report.violations.len());
    let below: Vec<_> = report.negative_twist_loci.iter().filter(|l| l.i > l.j).collect();
    println!("non-zero groups with i > j at negative twists: {}", below.len());
    for l in below.iter().take(5) {
        println!("  h^{}(Ω^{}({})) = {}", l.i, l.j, l.k, l.dim);
    }
    Ok(())
}
