mod common;

use common::*;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toricmot_core::motser::{
    check_nicaise, curve_closed_form, local_series, par_aux, par_local, par_normal, pgeom_local, SeriesExpansion,
};
use toricmot_core::toricsg::{face_semigroup, minimal_generating_set};
use toricmot_core::{LatticeVector, SemigroupData, SeriesConfig};

fn cfg() -> SeriesConfig {
    SeriesConfig::default()
}

/// `⟨(1,0), (1,1), …, (1,k)⟩`, the saturated semigroup of the `A_{k−1}` singularity.
fn a_series(k: i64) -> SemigroupData {
    let g: Vec<LatticeVector> = (0..=k).map(|c| lv(&[1, c])).collect();
    SemigroupData::new(2, &g).unwrap().with_saturated(true)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn faces_add_up(seed in any::<u64>()) {
        let s = random_semigroup(&mut ChaCha8Rng::seed_from_u64(seed));
        let total = par_local(&s, &cfg()).unwrap().expand(20);
        let mut sum = SeriesExpansion::zero(20);
        for eta in s.faces().unwrap() {
            let fs = face_semigroup(&s, &eta).unwrap();
            sum = sum.add(&par_aux(&fs.semigroup, &cfg()).unwrap().expand(20));
        }
        prop_assert_eq!(total, sum);
    }

    #[test]
    fn l_one_gives_geometric_series(seed in any::<u64>()) {
        let s = random_semigroup(&mut ChaCha8Rng::seed_from_u64(seed));
        let local = local_series(&s, &cfg()).unwrap();
        let e = local.arithmetic.expand(25);
        for t in 0..=25 {
            prop_assert_eq!(e.at_l_one(t), BigRational::one());
        }
        for (a, b) in local.arithmetic.cancel().denominator_pairs() {
            prop_assert!(local.local_poles.contains(&(a, b)), "({}, {}) outside B", a, b);
            prop_assert!(a >= 0 && b > 0);
        }
    }

    #[test]
    fn vertex_criterion_implies_equal_series(seed in any::<u64>()) {
        let s = random_semigroup(&mut ChaCha8Rng::seed_from_u64(seed));
        if check_nicaise(&s).unwrap().holds() {
            prop_assert!(par_local(&s, &cfg()).unwrap().equals(&pgeom_local(&s, &cfg()).unwrap()));
        }
    }

    #[test]
    fn curves_match_closed_form(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gens = loop {
            let n = rng.gen_range(1..=4usize);
            let raw: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=40u64)).collect();
            if raw.iter().fold(0u64, |g, &e| g.gcd(&e)) == 1 {
                let v: Vec<LatticeVector> = raw.iter().map(|&e| lv(&[e as i64])).collect();
                let mut m: Vec<u64> = minimal_generating_set(1, &v)
                    .unwrap()
                    .iter()
                    .map(|x| x.coords()[0].clone().try_into().unwrap())
                    .collect();
                m.sort();
                break m;
            }
        };
        let s = curve(&gens.iter().map(|&e| e as i64).collect::<Vec<_>>());
        prop_assert!(par_local(&s, &cfg()).unwrap().equals(&curve_closed_form(&gens).unwrap()), "{:?}", gens);
    }
}

#[test]
fn normal_mode_on_a_series() {
    for k in 1..=3 {
        let s = a_series(k);
        let normal = par_normal(&s, &cfg()).unwrap();
        assert_eq!(normal.expand(30), par_local(&s, &cfg()).unwrap().expand(30), "k = {}", k);
    }
}
