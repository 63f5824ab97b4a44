//! Chow groups of a smooth complete toric variety and of the complement of
//! some boundary divisors.
//!
//! cargo run --example toric_chow -- crates/core/data/p1xp1.fan 0

use std::collections::BTreeSet;

use loghodge::toric::{chow_table, h_vector, parse_fan, validate, Fan, ValidatedFan};

fn main() -> loghodge::Result<()> {
    let mut args = std::env::args().skip(1);
    let fan = match args.next() {
        Some(path) => parse_fan(&std::fs::read_to_string(path)?)?,
        None => Fan::hirzebruch(1),
    };
    let removed: BTreeSet<usize> = args.map(|s| s.parse().expect("ray index")).collect();

    let report = validate(&fan);
    if !report.is_valid() {
        println!("{report}");
        return Ok(());
    }
    let fan = ValidatedFan::new(fan)?;
    println!("f-vector {:?}, h-vector {:?}", fan.f_vector(), h_vector(&fan));
    println!("Chow dimensions of X:");
    print!("{}", chow_table(&fan, &BTreeSet::new())?);
    if !removed.is_empty() {
        println!("after removing the divisors of rays {removed:?}:");
        print!("{}", chow_table(&fan, &removed)?);
    }
    Ok(())
}
