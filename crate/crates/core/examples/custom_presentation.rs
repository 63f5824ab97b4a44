//! Tor table of an ideal given in the text format.
//!
//! cargo run --example custom_presentation -- crates/core/data/two_quadrics.ideal 4

use loghodge::gralg::text::parse_presentation;
use loghodge::gralg::GradedQuotientAlgebra;
use loghodge::koszul::tor_table;

const TWISTED_CUBIC: &str = "\
# twisted cubic in P^3
vars 4
x1 x3 - x2^2
x2 x4 - x3^2
x1 x4 - x2 x3
";

fn main() -> loghodge::Result<()> {
    let mut args = std::env::args().skip(1);
    let text = match args.next() {
        Some(path) => std::fs::read_to_string(path)?,
        None => TWISTED_CUBIC.to_string(),
    };
    let j_max: usize = args.next().map(|s| s.parse().expect("j_max is an integer")).unwrap_or(4);

    let presentation = parse_presentation(&text)?;
    println!("{presentation}");
    let algebra = GradedQuotientAlgebra::new(presentation, j_max);
    println!("Hilbert function: {:?}", algebra.hilbert_function());
    let table = tor_table(&algebra, j_max)?;
    print!("{table}");
    println!("Euler checksums: {:?}", table.checksums);
    Ok(())
}
