//! Runs the Koszul engine on a graph ideal and compares with the closed form.
//!
//! cargo run --release --example koszul_engine -- A1 4

use std::time::Instant;

use loghodge::grpcpt::{closed_form_table, engine_table, invariant_degrees, CartanType};

fn main() -> loghodge::Result<()> {
    let mut args = std::env::args().skip(1);
    let ty: CartanType = args.next().as_deref().unwrap_or("A1").parse()?;
    let j_max: usize = args.next().map(|s| s.parse().expect("j_max is an integer")).unwrap_or(4);

    let start = Instant::now();
    let engine = engine_table(ty, j_max)?;
    let elapsed = start.elapsed();
    let closed = closed_form_table(&invariant_degrees(ty), Some(j_max));

    println!("{ty} through j = {j_max}, engine took {elapsed:.2?}");
    print!("{engine}");
    println!("Euler checksums per j: {:?}", engine.checksums);
    if engine.same_entries(&closed) {
        println!("matches the closed form");
    } else {
        println!("differs from the closed form: {:?}", closed.diff(&engine));
    }
    Ok(())
}
