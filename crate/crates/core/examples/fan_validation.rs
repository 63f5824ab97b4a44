//! What the fan validator reports for a few broken fans.

use loghodge::toric::{validate, Fan};

fn main() {
    let mut missing = Fan::projective_space(2);
    missing.max_cones.pop();

    let mut scaled = Fan::projective_space(2);
    scaled.rays[0] = vec![2, 0];

    let singular = Fan::new(2, vec![vec![1, 0], vec![1, 2], vec![-1, -1]], vec![vec![0, 1], vec![1, 2], vec![0, 2]]);

    for (name, fan) in [("plane", Fan::projective_space(2)), ("missing cone", missing), ("scaled ray", scaled), ("singular", singular)] {
        let report = validate(&fan);
        if report.is_valid() {
            println!("{name}: valid");
        } else {
            println!("{name}:\n{report}");
        }
    }
}
