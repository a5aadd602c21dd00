use num_bigint::BigInt;
use proptest::prelude::*;
use symspring::partitions::{conjugate, dominance_leq};
use symspring::qseries::gaussian_binomial;
use symspring::{Partition, Poly};

fn partition_of(w: usize) -> impl Strategy<Value = Partition> {
    let all = Partition::all(w);
    (0..all.len()).prop_map(move |k| all[k].clone())
}

fn any_partition() -> impl Strategy<Value = Partition> {
    (0usize..=18).prop_flat_map(partition_of)
}

fn small_poly() -> impl Strategy<Value = Poly> {
    (-4i64..4, prop::collection::vec(-5i64..=5, 0..6)).prop_map(|(s, c)| Poly::from_i64s(s, &c))
}

proptest! {
    #[test]
    fn conjugate_is_an_involution(p in any_partition()) {
        prop_assert_eq!(conjugate(&conjugate(&p)), p);
    }

    #[test]
    fn conjugation_reverses_dominance((a, b) in (1usize..=14).prop_flat_map(|w| (partition_of(w), partition_of(w)))) {
        prop_assert_eq!(dominance_leq(&a, &b).unwrap(), dominance_leq(&conjugate(&b), &conjugate(&a)).unwrap());
    }

    #[test]
    fn partition_string_round_trip(p in any_partition()) {
        let s = p.to_string();
        prop_assert_eq!(s.parse::<Partition>().unwrap(), p);
    }

    #[test]
    fn gaussian_symmetry_and_pascal((m, k) in (1usize..=14).prop_flat_map(|m| (Just(m), 1..=m))) {
        let g = |k, m| gaussian_binomial::<BigInt>(k, m).unwrap();
        prop_assert_eq!(g(k, m), g(m - k, m));
        // g_{k,m} = g_{k−1,m−1} + q^k g_{k,m−1}
        let rhs = if k == m { g(k - 1, m - 1) } else { g(k - 1, m - 1) + g(k, m - 1).shift(k as i64) };
        prop_assert_eq!(g(k, m), rhs);
        prop_assert!(g(k, m).is_palindromic_about((k * (m - k)) as i64));
    }

    #[test]
    fn exact_division_recovers_factor(a in small_poly(), b in small_poly()) {
        prop_assume!(!b.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(prod.div_exact(&b).unwrap(), a);
    }

    #[test]
    fn json_round_trip(a in small_poly()) {
        let s = serde_json::to_string(&a).unwrap();
        let back: Poly = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, a);
    }
}

#[test]
fn exhaustive_conjugate_involution() {
    for w in 0..=30 {
        for p in Partition::all(w) {
            assert_eq!(conjugate(&conjugate(&p)), p);
        }
    }
}
