#![allow(dead_code)]

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use toricmot_core::toricsg::minimal_generating_set;
use toricmot_core::{LatticeVector, SemigroupData};

pub fn lv(v: &[i64]) -> LatticeVector {
    LatticeVector::from_i64(v)
}

pub fn sg(d: usize, gens: &[&[i64]]) -> SemigroupData {
    let g: Vec<LatticeVector> = gens.iter().map(|v| lv(v)).collect();
    SemigroupData::new(d, &g).expect("valid fixture")
}

pub fn curve(gens: &[i64]) -> SemigroupData {
    let g: Vec<LatticeVector> = gens.iter().map(|&e| lv(&[e])).collect();
    SemigroupData::new(1, &g).expect("valid curve")
}

pub fn surface() -> SemigroupData {
    sg(2, &[&[5, 0], &[0, 2], &[0, 3], &[6, 2]])
}

pub fn a1() -> SemigroupData {
    sg(2, &[&[1, 0], &[1, 1], &[1, 2]])
}

pub fn fixtures() -> Vec<(&'static str, SemigroupData)> {
    vec![
        ("<2,3>", curve(&[2, 3])),
        ("<3,4,5>", curve(&[3, 4, 5])),
        ("<4,6,7>", curve(&[4, 6, 7])),
        ("<8,18,20,21>", curve(&[8, 18, 20, 21])),
        ("<8,18,21>", curve(&[8, 18, 21])),
        ("surface", surface()),
        ("Z>=0", curve(&[1])),
        ("Z^2>=0", sg(2, &[&[1, 0], &[0, 1]])),
        ("A1", a1()),
    ]
}

/// A random semigroup of rank `d ≤ 2` with at most five generators and
/// coordinates in `0..=8`, redrawn until it generates the lattice.
pub fn random_semigroup(rng: &mut ChaCha8Rng) -> SemigroupData {
    loop {
        let d = rng.gen_range(1..=2usize);
        let n = rng.gen_range(d..=5usize);
        let gens: Vec<LatticeVector> = (0..n)
            .map(|_| LatticeVector::new((0..d).map(|_| BigInt::from(rng.gen_range(0..=8i64))).collect()))
            .collect();
        let Ok(min) = minimal_generating_set(d, &gens) else { continue };
        if min.is_empty() {
            continue;
        }
        if let Ok(s) = SemigroupData::new(d, &min) {
            return s;
        }
    }
}

/// A lattice point of `int σ` with coordinates in `[-r, r]`.
pub fn random_interior(rng: &mut ChaCha8Rng, s: &SemigroupData, r: i64) -> LatticeVector {
    loop {
        let nu = LatticeVector::new((0..s.rank()).map(|_| BigInt::from(rng.gen_range(-r..=r))).collect());
        if s.in_interior(&nu) {
            return nu;
        }
    }
}
