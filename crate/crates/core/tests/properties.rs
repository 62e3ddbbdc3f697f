//! Randomized structural properties over arbitrary truth tables.

use proptest::prelude::*;

use cubesense::hypercube::gl_twist;
use cubesense::measures::{block_sensitivity, fourier, sensitivity, Caps};
use cubesense::poly::MultilinearPoly;
use cubesense::BooleanFunction;

fn arb_function(max_n: usize) -> impl Strategy<Value = BooleanFunction> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0u8..2, 1 << n)
            .prop_map(move |bits| BooleanFunction::from_truth_table(n, &bits).unwrap())
    })
}

proptest! {
    #[test]
    fn table_string_round_trips(f in arb_function(6)) {
        let text = f.to_tt_string();
        let back = BooleanFunction::from_tt_string(&text).unwrap();
        prop_assert_eq!(f, back);
    }

    #[test]
    fn polynomial_agrees_with_table(f in arb_function(5)) {
        let p = MultilinearPoly::from_function(&f);
        for x in 0..f.len() {
            prop_assert_eq!(p.eval(x), f.value(x) as i64);
        }
    }

    #[test]
    fn fourier_reconstructs_values(f in arb_function(5)) {
        let table = fourier(&f);
        let pm = f.pm1_values();
        for x in 0..f.len() {
            prop_assert!((table.reconstruct(x) - pm[x]).abs() < 1e-12);
        }
    }

    #[test]
    fn sensitivity_at_most_block_sensitivity(f in arb_function(5)) {
        let caps = Caps::default();
        let s = sensitivity(&f).value;
        let bs = block_sensitivity(&f, &caps).unwrap().value;
        prop_assert!(s <= bs);
    }

    #[test]
    fn parity_twist_is_an_involution(f in arb_function(6)) {
        prop_assert_eq!(gl_twist(&gl_twist(&f)), f);
    }

    #[test]
    fn restriction_drops_one_variable(f in arb_function(5)) {
        for bit in 0..2u8 {
            let g = f.restrict(1, bit).unwrap();
            prop_assert_eq!(g.n(), f.n() - 1);
            for x in 0..g.len() {
                prop_assert_eq!(g.value(x), f.value(x << 1 | bit as usize));
            }
        }
    }
}
