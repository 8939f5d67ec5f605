mod common;

use std::collections::BTreeSet;

use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toricmot_core::intlat::{lattice_rank, IntMatrix};
use toricmot_core::toricsg::{face_semigroup, minimal_generating_set};
use toricmot_core::{IdealFamily, LatticeVector};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn phi_data_recovers_generators(seed in any::<u64>()) {
        let s = random_semigroup(&mut ChaCha8Rng::seed_from_u64(seed));
        let f = IdealFamily::new(&s).unwrap();
        let n = s.len();
        let mut recovered: BTreeSet<LatticeVector> = BTreeSet::new();
        for theta in f.theta_fan(n).maximal_cones() {
            let x = theta.interior_sample();
            let mut here: Vec<LatticeVector> = (1..=n)
                .map(|j| f.phi_function(j).functional_at(&x).expect("maximal cone").clone())
                .collect();
            let mut gens = s.generators().to_vec();
            here.sort();
            gens.sort();
            prop_assert_eq!(&here, &gens);
            recovered.extend(here);
        }
        let original: BTreeSet<LatticeVector> = s.generators().iter().cloned().collect();
        prop_assert_eq!(recovered, original);
    }

    #[test]
    fn jacobian_vertices_are_independent_sums(seed in any::<u64>()) {
        let s = random_semigroup(&mut ChaCha8Rng::seed_from_u64(seed));
        let f = IdealFamily::new(&s).unwrap();
        let gens = s.generators();
        for l in 1..=s.rank().min(s.len()) {
            for v in f.jacobian(l).polyhedron.vertices() {
                let ok = subsets(gens.len(), l).into_iter().any(|sub| {
                    let rows: Vec<LatticeVector> = sub.iter().map(|&i| gens[i].clone()).collect();
                    &LatticeVector::sum(s.rank(), &rows) == v && lattice_rank(&IntMatrix::from_rows(s.rank(), &rows)) == l
                });
                prop_assert!(ok, "vertex {} of N(J_{})", v, l);
            }
        }
    }

    #[test]
    fn face_generators_stay_minimal(seed in any::<u64>()) {
        let s = random_semigroup(&mut ChaCha8Rng::seed_from_u64(seed));
        for eta in s.faces().unwrap() {
            let fs = face_semigroup(&s, &eta).unwrap();
            let kept: Vec<LatticeVector> = fs.kept.iter().map(|&i| s.generators()[i].clone()).collect();
            if kept.is_empty() {
                continue;
            }
            prop_assert_eq!(minimal_generating_set(s.rank(), &kept).unwrap().len(), kept.len());
            prop_assert_eq!(fs.semigroup.len(), kept.len());
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

#[test]
fn lattice_generation_is_enforced() {
    let bad = [lv(&[2, 0]), lv(&[0, 2])];
    assert!(toricmot_core::SemigroupData::new(2, &bad).is_err());
}
