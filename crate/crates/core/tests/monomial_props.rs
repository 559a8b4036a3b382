mod common;

use common::monomial_product_oracle;
use ideal_lab::monomial::{minimalize, MonomialIdeal};
use proptest::prelude::*;

fn gens(dim: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0u32..=4, dim), 1..=4)
}

fn dim_and_pair() -> impl Strategy<Value = (usize, Vec<Vec<u32>>, Vec<Vec<u32>>)> {
    (1usize..=3).prop_flat_map(|d| (Just(d), gens(d), gens(d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn product_matches_split_oracle((d, a, b) in dim_and_pair()) {
        let i = MonomialIdeal::new(d, a.clone()).unwrap();
        let j = MonomialIdeal::new(d, b.clone()).unwrap();
        let ij = i.product(&j).unwrap();
        for (m, expected) in monomial_product_oracle(&a, &b, d, 10) {
            prop_assert_eq!(ij.member(&m).unwrap(), expected, "{:?} in {} * {}", m, i, j);
        }
    }

    #[test]
    fn minimalization_is_idempotent_and_order_free((d, a, _) in dim_and_pair(), seed in any::<u64>()) {
        let once = minimalize(a.clone());
        prop_assert_eq!(&minimalize(once.clone()), &once);
        let mut shuffled = a.clone();
        let n = shuffled.len();
        for k in 0..n {
            shuffled.swap(k, (seed as usize).wrapping_add(k * 7) % n);
        }
        prop_assert_eq!(&minimalize(shuffled), &once);
        // no generator divides another, and every input is still covered
        let ideal = MonomialIdeal::new(d, a.clone()).unwrap();
        for g in &a {
            prop_assert!(ideal.member(g).unwrap());
        }
        for (x, g) in once.iter().enumerate() {
            for (y, h) in once.iter().enumerate() {
                prop_assert!(x == y || !g.iter().zip(h).all(|(p, q)| p <= q));
            }
        }
    }

    #[test]
    fn powers_add((d, a, _) in dim_and_pair(), m in 1usize..=3, n in 1usize..=3) {
        let i = MonomialIdeal::new(d, a).unwrap();
        prop_assert_eq!(i.power(m + n).unwrap(), i.power(m).unwrap().product(&i.power(n).unwrap()).unwrap());
    }

    #[test]
    fn containment_matches_membership((d, a, b) in dim_and_pair()) {
        let i = MonomialIdeal::new(d, a).unwrap();
        let j = MonomialIdeal::new(d, b).unwrap();
        let by_members = common::box_vectors(d, 8).iter().all(|m| !j.member(m).unwrap() || i.member(m).unwrap());
        prop_assert_eq!(i.contains(&j).unwrap(), by_members);
        let s = i.sum(&j).unwrap();
        prop_assert!(s.contains(&i).unwrap() && s.contains(&j).unwrap());
    }
}
