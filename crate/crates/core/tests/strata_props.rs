mod common;

use common::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toricmot_core::intlat::{lattice_rank, IntMatrix};
use toricmot_core::polycone::PlValue;
use toricmot_core::strata::{enumerate_strata, ClassWitness};
use toricmot_core::{IdealFamily, LatticeVector, SemigroupData};

/// `(ν, s) ∼ (ν', s)` straight from the definition: same span of the small
/// generators and the same functional on it.
fn equivalent(s: &SemigroupData, a: &ClassWitness, b: &ClassWitness) -> bool {
    if a.s != b.s {
        return false;
    }
    let d = s.rank();
    let rows = |w: &ClassWitness| -> Vec<LatticeVector> { w.small.iter().map(|&i| s.generators()[i].clone()).collect() };
    let (ra, rb) = (rows(a), rows(b));
    let joint: Vec<LatticeVector> = ra.iter().chain(rb.iter()).cloned().collect();
    let rank = |r: &[LatticeVector]| if r.is_empty() { 0 } else { lattice_rank(&IntMatrix::from_rows(d, r)) };
    if rank(&ra) != rank(&joint) || rank(&rb) != rank(&joint) {
        return false;
    }
    let diff = a.nu.sub(&b.nu);
    joint.iter().all(|g| g.dot(&diff) == BigInt::from(0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn partition_constancy_refinement(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_semigroup(&mut rng);
        let f = IdealFamily::new(&s).unwrap();
        let strata = enumerate_strata(&f).unwrap();
        for _ in 0..60 {
            let nu = random_interior(&mut rng, &s, 10);
            let t = BigInt::from(rng.gen_range(1..=50i64));
            let hits: Vec<_> = strata.iter().filter(|st| !st.is_empty() && st.contains(&f, &nu, &t)).collect();
            let below = f.phi(1, &nu) > PlValue::Finite(t.clone());
            prop_assert_eq!(hits.len(), usize::from(!below));
            if let Some(st) = hits.first() {
                let data = st.data.as_ref().unwrap();
                let w = ClassWitness::new(&f, &nu, &t);
                prop_assert_eq!(w.rank, data.witness.rank);
                prop_assert_eq!(&w.index, &data.witness.index);
                prop_assert_eq!(&w.small, &data.witness.small);
                let sv = PlValue::Finite(t.clone());
                prop_assert!(data.tau.relative_interior_contains(&nu));
                prop_assert!(f.big_phi(w.rank, &nu) <= sv && sv < f.big_phi(w.rank + 1, &nu));
            }
        }
    }

    #[test]
    fn class_keys_match_equivalence(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_semigroup(&mut rng);
        let f = IdealFamily::new(&s).unwrap();
        let t = BigInt::from(rng.gen_range(1..=12i64));
        let sample: Vec<ClassWitness> = (0..40)
            .map(|_| random_interior(&mut rng, &s, 4))
            .map(|nu| ClassWitness::new(&f, &nu, &t))
            .collect();
        for a in &sample {
            for b in &sample {
                prop_assert_eq!(a.key() == b.key(), equivalent(&s, a, b));
            }
        }
    }

    #[test]
    fn pole_pairs_are_admissible(seed in any::<u64>()) {
        let s = random_semigroup(&mut ChaCha8Rng::seed_from_u64(seed));
        let f = IdealFamily::new(&s).unwrap();
        for st in enumerate_strata(&f).unwrap() {
            if let Some(d) = &st.data {
                for &(a, b) in d.poles.edges() {
                    prop_assert!(b > 0 && a >= 0, "({}, {}) in {}", a, b, st);
                }
            }
        }
    }
}
