//! Exact enumeration of the classes of a stratum and reconstruction of its
//! rational generating function.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::Poly;
use super::rational::MotivicRational;
use crate::error::{Error, Result};
use crate::intlat::LatticeVector;
use crate::polycone::dd::extreme_rays;
use crate::strata::Stratum;
use crate::toricsg::IdealFamily;

fn to_i64(v: &BigInt) -> Result<i64> {
    v.to_i64().ok_or_else(|| Error::Internal("coordinate overflow".into()))
}

/// Lattice box `[lo, hi]` containing one representative of every class of
/// the stratum with `s ≤ s_max`.
///
/// The classes are the lattice points of the polyhedron cut out by the
/// stratum's inequalities; recession directions keep the class fixed, so a
/// box around the vertices widened by one step along each recession ray is enough.
fn class_box(family: &IdealFamily, stratum: &Stratum, small: &[usize], s_max: u32) -> Result<Option<(Vec<i64>, Vec<i64>)>> {
    let sg = family.semigroup();
    let d = sg.rank();
    let theta = &stratum.cone;
    let row = |nu: &LatticeVector, s: i64, lambda: i64| {
        let mut c = nu.coords().to_vec();
        c.push(BigInt::from(s));
        c.push(BigInt::from(lambda));
        LatticeVector::new(c)
    };
    let zero = LatticeVector::zero(d);
    let mut rows = Vec::new();
    for h in theta.equations() {
        rows.push(row(h, 0, 0));
        rows.push(row(&h.neg(), 0, 0));
    }
    for f in theta.facets() {
        rows.push(row(f, 0, -1));
    }
    for (i, e) in sg.generators().iter().enumerate() {
        rows.push(row(e, 0, -1));
        if small.contains(&i) {
            rows.push(row(&e.neg(), 1, 0));
        } else {
            rows.push(row(e, -1, -1));
        }
    }
    rows.push(row(&zero, 1, -1));
    rows.push(row(&zero, -1, i64::from(s_max)));
    rows.push(row(&zero, 0, 1));
    let rays = extreme_rays(d + 2, &rows)?;
    let mut lo: Vec<Option<BigInt>> = alloc::vec![None; d];
    let mut hi: Vec<Option<BigInt>> = alloc::vec![None; d];
    let mut widen_lo = alloc::vec![BigInt::zero(); d];
    let mut widen_hi = alloc::vec![BigInt::zero(); d];
    let mut any_vertex = false;
    for r in &rays {
        let lambda = &r[d + 1];
        if lambda.is_positive() {
            any_vertex = true;
            for k in 0..d {
                let x = BigRational::new(r[k].clone(), lambda.clone());
                let f = x.floor().to_integer();
                let c = x.ceil().to_integer();
                if lo[k].as_ref().map_or(true, |v| &f < v) {
                    lo[k] = Some(f);
                }
                if hi[k].as_ref().map_or(true, |v| &c > v) {
                    hi[k] = Some(c);
                }
            }
        } else {
            for k in 0..d {
                if r[k].is_negative() {
                    widen_lo[k] += &r[k];
                } else {
                    widen_hi[k] += &r[k];
                }
            }
        }
    }
    if !any_vertex {
        return Ok(None);
    }
    let mut l = Vec::with_capacity(d);
    let mut h = Vec::with_capacity(d);
    for k in 0..d {
        l.push(to_i64(&(lo[k].take().expect("vertex bound") + &widen_lo[k]))?);
        h.push(to_i64(&(hi[k].take().expect("vertex bound") + &widen_hi[k]))?);
    }
    Ok(Some((l, h)))
}

/// Calls `f` on every lattice point of the box `[lo, hi]`.
pub(crate) fn for_each_point<F: FnMut(&LatticeVector) -> Result<()>>(lo: &[i64], hi: &[i64], mut f: F) -> Result<()> {
    let d = lo.len();
    if (0..d).any(|k| lo[k] > hi[k]) {
        return Ok(());
    }
    let mut cur = lo.to_vec();
    loop {
        f(&LatticeVector::from_i64(&cur))?;
        let mut k = 0;
        loop {
            if k == d {
                return Ok(());
            }
            if cur[k] < hi[k] {
                cur[k] += 1;
                break;
            }
            cur[k] = lo[k];
            k += 1;
        }
    }
}

/// Number of classes of the stratum with `s ≤ s_max`, per monomial `L^a T^s`
/// where `a = l·s − ord_{J_l}(ν)`.
pub fn class_monomials(family: &IdealFamily, stratum: &Stratum, s_max: u32) -> Result<BTreeMap<(i64, u32), u64>> {
    let mut out = BTreeMap::new();
    let Some(data) = &stratum.data else { return Ok(out) };
    let small = &data.witness.small;
    let l = data.witness.rank;
    let Some((lo, hi)) = class_box(family, stratum, small, s_max)? else { return Ok(out) };
    let sg = family.semigroup();
    let smax = BigInt::from(s_max);
    // values on the small generators -> (largest admissible s, ord_{J_l})
    let mut reps: BTreeMap<Vec<BigInt>, (BigInt, BigInt)> = BTreeMap::new();
    for_each_point(&lo, &hi, |nu| {
        if !stratum.cone.relative_interior_contains(nu) || !sg.in_interior(nu) {
            return Ok(());
        }
        let p = sg.pairings(nu);
        let values: Vec<BigInt> = small.iter().map(|&i| p[i].clone()).collect();
        let top = (0..p.len()).filter(|i| !small.contains(i)).map(|i| &p[i] - 1).min().unwrap_or_else(|| smax.clone());
        let top = top.min(smax.clone());
        let bottom = values.iter().max().cloned().unwrap_or_else(BigInt::one).max(BigInt::one());
        if bottom > top {
            return Ok(());
        }
        let ord = family.ord_jacobian(l, nu);
        match reps.get_mut(&values) {
            Some((t, o)) => {
                if *o != ord {
                    return Err(Error::Internal("ord_J not constant on a class".into()));
                }
                if top > *t {
                    *t = top;
                }
            }
            None => {
                reps.insert(values, (top, ord));
            }
        }
        Ok(())
    })?;
    for (values, (top, ord)) in reps {
        let bottom = values.iter().max().cloned().unwrap_or_else(BigInt::one).max(BigInt::one());
        let (b, t) = (to_i64(&bottom)?, to_i64(&top)?);
        let ord = to_i64(&ord)?;
        for s in b..=t {
            let a = l as i64 * s - ord;
            *out.entry((a, s as u32)).or_insert(0) += 1;
        }
    }
    Ok(out)
}

/// The class generating function `Σ L^{l·s − ord} T^s` truncated at `s_max`.
pub fn class_polynomial(family: &IdealFamily, stratum: &Stratum, s_max: u32) -> Result<Poly> {
    let mut p = Poly::zero();
    for ((a, s), c) in class_monomials(family, stratum, s_max)? {
        p.add_term(a, s, BigInt::from(c));
    }
    Ok(p)
}

/// `P_{φ,j,θ} = (L − 1)^l · N / ∏ (1 − L^a T^b)` with the denominator given by
/// the stratum's pole edges and `N` reconstructed from enumerated classes.
///
/// The product of the class series with the denominator must vanish on
/// `guard` consecutive orders past its last nonzero term. The window starts at
/// the denominator degree and is doubled a few times before giving up; the
/// numerator can exceed the denominator degree when several lattice points
/// share a class.
pub fn stratum_series(family: &IdealFamily, stratum: &Stratum, guard: u32) -> Result<MotivicRational> {
    let Some(data) = &stratum.data else { return Ok(MotivicRational::zero()) };
    let edges = data.poles.edges();
    let guard = guard.max(1);
    let degree = data.poles.t_degree();
    let mut s_max = degree + guard;
    let cap = 8 * (degree + guard);
    loop {
        let series = class_polynomial(family, stratum, s_max)?;
        let mut den = Poly::one();
        for &(a, b) in edges {
            den = den.mul_factor(a, b).truncate(s_max);
        }
        let product = series.mul_truncated(&den, s_max);
        let last = (0..=s_max).rev().find(|&t| product.layer(t).is_some_and(|m| !m.is_empty())).unwrap_or(0);
        if last + guard <= s_max {
            let numerator = product.mul(&Poly::l_minus_one_pow(data.witness.rank));
            return Ok(MotivicRational::new(BigRational::one(), numerator, edges));
        }
        if s_max >= cap {
            return Err(Error::Certification { level: stratum.level, rays: stratum.cone.rays().to_vec(), order: last });
        }
        s_max = (2 * s_max).min(cap).max(last + guard);
    }
}
