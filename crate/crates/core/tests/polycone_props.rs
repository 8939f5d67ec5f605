mod common;

use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toricmot_core::polycone::{fan_intersection, Cone, NewtonPolyhedron};
use toricmot_core::LatticeVector;

fn strictly_convex_cone() -> impl Strategy<Value = Cone> {
    // generators in the open positive orthant keep the cone pointed; the
    // extra unit vectors make it full-dimensional
    (2usize..=3, proptest::collection::vec(proptest::collection::vec(0i64..6, 3), 1..5)).prop_map(|(d, raw)| {
        let mut gens: Vec<LatticeVector> = raw.iter().map(|v| lv(&v[..d])).filter(|v| !v.is_zero()).collect();
        gens.extend((0..d).map(|k| LatticeVector::unit(d, k)));
        Cone::from_generators(d, &gens)
    })
}

fn newton_points() -> impl Strategy<Value = Vec<LatticeVector>> {
    proptest::collection::vec((0i64..7, 0i64..7), 1..7).prop_map(|v| v.into_iter().map(|(a, b)| lv(&[a, b])).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dual_is_an_involution(c in strictly_convex_cone()) {
        prop_assert_eq!(c.dual().dual(), c);
    }

    #[test]
    fn support_function_is_superadditive(points in newton_points(), a in (1i64..9, 1i64..9), b in (1i64..9, 1i64..9)) {
        let sd = Cone::orthant(2);
        let p = NewtonPolyhedron::new(&points, &sd).unwrap();
        let h = p.support_function().unwrap();
        let (x, y) = (lv(&[a.0, a.1]), lv(&[b.0, b.1]));
        let hx = h.evaluate(&x).unwrap();
        let hy = h.evaluate(&y).unwrap();
        let hxy = h.evaluate(&x.add(&y)).unwrap();
        prop_assert!(hx + hy <= hxy);
        prop_assert_eq!(h.evaluate(&x).unwrap(), p.ord(&x));
    }

    #[test]
    fn normal_fan_matches_faces(points in newton_points()) {
        let sd = Cone::orthant(2);
        let p = NewtonPolyhedron::new(&points, &sd).unwrap();
        let fan = p.normal_fan().unwrap();
        prop_assert_eq!(fan.maximal_cones().len(), p.vertices().len());
        let face = |c: &Cone| {
            let mut v = p.minimizing_vertices(&c.interior_sample());
            v.sort();
            v
        };
        for small in fan.cones() {
            for big in fan.cones() {
                if big.contains_cone(small) {
                    let (fs, fb) = (face(small), face(big));
                    prop_assert!(fb.iter().all(|v| fs.contains(v)));
                }
            }
        }
    }

    #[test]
    fn intersection_refines_inputs(p1 in newton_points(), p2 in newton_points()) {
        let sd = Cone::orthant(2);
        let f1 = NewtonPolyhedron::new(&p1, &sd).unwrap().normal_fan().unwrap();
        let f2 = NewtonPolyhedron::new(&p2, &sd).unwrap().normal_fan().unwrap();
        let meet = fan_intersection(&[f1.clone(), f2.clone()]).unwrap();
        for m in meet.maximal_cones() {
            let x = m.interior_sample();
            for f in [&f1, &f2] {
                prop_assert_eq!(f.cones().iter().filter(|c| c.relative_interior_contains(&x)).count(), 1);
            }
        }
        prop_assert!(meet.refines(&f1) && meet.refines(&f2));
    }

    #[test]
    fn random_semigroup_cones_are_dual(seed in any::<u64>()) {
        let s = random_semigroup(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(&s.sigma().dual(), s.sigma_dual());
    }
}
