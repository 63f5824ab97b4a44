use loghodge::bott::{bott_dims, broer_check, BottQuery};
use proptest::prelude::*;

fn query() -> impl Strategy<Value = BottQuery> {
    (1usize..=6).prop_flat_map(|n| (Just(n), 0..=n, -12i64..=12)).prop_map(|(n, j, k)| BottQuery::new(n, j, k).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn serre_duality(q in query()) {
        // h^i(Ω^j(k)) = h^{n-i}(Ω^{n-j}(-k))
        let dual = bott_dims(BottQuery::new(q.n, q.n - q.j, -q.k).unwrap());
        let flipped: Vec<(usize, u128)> = bott_dims(q).into_iter().map(|(i, d)| (q.n - i, d)).rev().collect();
        prop_assert_eq!(dual.into_iter().collect::<Vec<_>>(), flipped);
    }

    #[test]
    fn at_most_one_nonzero_degree(q in query()) {
        let dims = bott_dims(q);
        prop_assert!(dims.len() <= 1);
        if let Some((&i, _)) = dims.iter().next() {
            prop_assert!(i == 0 || i == q.j || i == q.n);
        }
    }

    #[test]
    fn euler_characteristic_of_line_bundles(n in 1usize..=6, k in -12i64..=12) {
        // χ(O(k)) = C(n + k, n) as a polynomial in k
        let chi: i128 = bott_dims(BottQuery::new(n, 0, k).unwrap())
            .into_iter()
            .map(|(i, d)| if i % 2 == 0 { d as i128 } else { -(d as i128) })
            .sum();
        let poly: i128 = (1..=n as i128).fold(1i128, |acc, t| acc * (k as i128 + t)) / (1..=n as i128).product::<i128>();
        prop_assert_eq!(chi, poly);
    }
}

#[test]
fn no_violations_for_nef_twists() {
    for n in 1..=4 {
        assert!(broer_check(n, 0, 6).unwrap().passed(), "n = {n}");
    }
}

#[test]
fn negative_twists_do_not_count_as_violations() {
    let r = broer_check(3, -6, -1).unwrap();
    assert!(r.passed());
    assert!(r.negative_twist_loci.iter().any(|l| l.i > l.j));
}
