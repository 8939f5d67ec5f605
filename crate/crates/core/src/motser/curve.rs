//! Closed form for monomial curves `⟨e_1 < … < e_n⟩ ⊂ Z_{≥0}`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::Poly;
use super::rational::MotivicRational;
use crate::error::{Error, Result};

/// `1/(1−T) + (L−1)/(1−LT)·[(1/q_1)T^{e_1}/(1−T^{e_1}) + Σ_{i≥2} w_i L^{e_i−e_1}T^{e_i}/(1−L^{e_i−e_1}T^{e_i})]`
/// with `q_i = gcd(e_1, …, e_i)` and `w_i = (q_{i−1} − q_i)/(q_{i−1} q_i)`.
pub fn curve_closed_form(gens: &[u64]) -> Result<MotivicRational> {
    if gens.is_empty() {
        return Err(Error::InvalidCurve("no generators"));
    }
    if gens[0] == 0 {
        return Err(Error::InvalidCurve("generators must be positive"));
    }
    if gens.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidCurve("generators must be strictly increasing"));
    }
    let q = curve_gcds(gens);
    if !q.last().expect("nonempty").is_one() {
        return Err(Error::InvalidCurve("generators must have gcd 1"));
    }
    let e1 = gens[0];
    let b1 = u32::try_from(e1).map_err(|_| Error::InvalidCurve("generator too large"))?;
    let mut bracket = MotivicRational::new(
        BigRational::new(BigInt::one(), q[0].clone()),
        Poly::monomial(BigInt::one(), 0, b1),
        &[(0, b1)],
    );
    for i in 1..gens.len() {
        let w = BigRational::new(&q[i - 1] - &q[i], &q[i - 1] * &q[i]);
        if w.is_zero() {
            continue;
        }
        let a = (gens[i] - e1) as i64;
        let b = u32::try_from(gens[i]).map_err(|_| Error::InvalidCurve("generator too large"))?;
        bracket = bracket.add(&MotivicRational::new(w, Poly::monomial(BigInt::one(), a, b), &[(a, b)]));
    }
    let outer = MotivicRational::new(BigRational::one(), Poly::l_minus_one_pow(1), &[(1, 1)]);
    Ok(MotivicRational::geometric(0, 1).add(&outer.mul(&bracket)))
}

/// Running gcds `q_i = gcd(e_1, …, e_i)`.
pub fn curve_gcds(gens: &[u64]) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(gens.len());
    let mut g = BigInt::zero();
    for &e in gens {
        g = g.gcd(&BigInt::from(e));
        out.push(g.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cusp() {
        let c = curve_closed_form(&[2, 3]).unwrap();
        let e = c.expand(2);
        // 1 + (L − 1)/2 at T²
        let t2 = e.coefficient(2);
        assert_eq!(t2.get(&0), Some(&BigRational::new(1.into(), 2.into())));
        assert_eq!(t2.get(&1), Some(&BigRational::new(1.into(), 2.into())));
    }

    #[test]
    fn line() {
        let c = curve_closed_form(&[1]).unwrap();
        let want = MotivicRational::geometric(0, 1).add(&MotivicRational::new(
            BigRational::one(),
            Poly::l_minus_one_pow(1).mul(&Poly::monomial(BigInt::one(), 0, 1)),
            &[(1, 1), (0, 1)],
        ));
        assert!(c.equals(&want));
    }

    #[test]
    fn vanishing_weight_drops_factor() {
        assert_eq!(curve_gcds(&[8, 18, 20, 21]), [8, 2, 2, 1].map(BigInt::from).to_vec());
        let c = curve_closed_form(&[8, 18, 20, 21]).unwrap().cancel();
        assert!(!c.denominator().contains_key(&(12, 20)));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(curve_closed_form(&[]).is_err());
        assert!(curve_closed_form(&[3, 2]).is_err());
        assert!(curve_closed_form(&[2, 4]).is_err());
        assert!(curve_closed_form(&[0, 1]).is_err());
    }
}
