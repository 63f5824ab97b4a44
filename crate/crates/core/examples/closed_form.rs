//! Closed-form tables for group compactifications of every simple type.
//!
//! cargo run --example closed_form -- E6

use loghodge::grpcpt::{closed_form_table, invariant_degrees, weyl_group_order, CartanType};
use loghodge::verify::{strip_check, StripParams};

fn main() -> loghodge::Result<()> {
    let ty: CartanType = std::env::args().nth(1).as_deref().unwrap_or("G2").parse()?;
    let degrees = invariant_degrees(ty);
    println!("{ty}: degrees {:?}, |W| = {}", degrees.degrees(), weyl_group_order(ty));

    let table = closed_form_table(&degrees, None);
    print!("{table}");
    println!("total dimension {} = 2^{}", table.total_mass(), ty.rank());

    let violations = strip_check(&table, StripParams::new(0, ty.rank()));
    println!("entries outside 0 <= j - i <= {}: {}", ty.rank(), violations.len());
    Ok(())
}
