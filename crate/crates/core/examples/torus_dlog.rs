//! Row `i = 0` of a torus table is the exterior algebra on its characters.
//!
//! cargo run --example torus_dlog -- 3

use loghodge::grpcpt::{dlog_row_rank, engine_table, CartanType};
use loghodge::verify::dlog_row_check;

fn main() -> loghodge::Result<()> {
    let rank: usize = std::env::args().nth(1).map(|s| s.parse().expect("rank is an integer")).unwrap_or(3);
    let ty = CartanType::torus(rank)?;
    let table = engine_table(ty, rank + 1)?;
    print!("{table}");

    let report = dlog_row_check(&table, dlog_row_rank(ty));
    if report.passed() {
        println!("row 0 is C({rank}, j) for j <= {}", report.j_max);
    } else {
        println!("row 0 mismatches: {:?}", report.mismatches);
    }
    Ok(())
}
