//! Strip check on a table read from a JSON document or built in place.
//!
//! cargo run --example strip_verify -- table.json 0 2

use loghodge::cli::TableDocument;
use loghodge::grpcpt::{closed_form_table, InvariantDegrees};
use loghodge::verify::{strip_check, StripParams};

fn main() -> loghodge::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (table, strip) = match args.as_slice() {
        [path, q, r] => {
            let doc = TableDocument::parse(&std::fs::read_to_string(path)?)?;
            let strip = StripParams::new(q.parse().expect("q"), r.parse().expect("r"));
            (doc.into_table()?, strip)
        }
        _ => (closed_form_table(&InvariantDegrees::new(vec![2, 3]), None), StripParams::new(0, 1)),
    };
    print!("{table}");
    let violations = strip_check(&table, strip);
    println!("q = {}, r = {}: {} violations", strip.q, strip.r, violations.len());
    for v in violations {
        println!("  h^({}, {}) = {}", v.i, v.j, v.dim);
    }
    Ok(())
}
