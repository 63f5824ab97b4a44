mod common;

use std::collections::BTreeMap;

use common::cech::cech_dims;
use loghodge::bott::{bott_dims, BottQuery};

#[test]
fn line_bundles_on_the_projective_line() {
    assert_eq!(cech_dims(1, 0, 2), BTreeMap::from([(0, 3)]));
    assert_eq!(cech_dims(1, 0, -3), BTreeMap::from([(1, 2)]));
    assert_eq!(cech_dims(1, 1, 0), BTreeMap::from([(1, 1)]));
}

#[test]
fn bott_formula_matches_cech_cohomology() {
    for n in 1..=2 {
        for j in 0..=n {
            for k in -3..=3 {
                let formula = bott_dims(BottQuery::new(n, j, k).unwrap());
                assert_eq!(formula, cech_dims(n, j, k), "n = {n}, j = {j}, k = {k}");
            }
        }
    }
}
