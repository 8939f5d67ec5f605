//! Assembly of the arithmetic and geometric series from per-stratum pieces.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use super::classes::stratum_series;
use super::poly::Poly;
use super::rational::MotivicRational;
use crate::error::{Error, Result};
use crate::polycone::Cone;
use crate::strata::{enumerate_strata, Stratum};
use crate::toricsg::{face_semigroup, quotient_semigroup, FaceSemigroup, IdealFamily, SemigroupData};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeriesConfig {
    /// Orders checked past the denominator degree when reconstructing a stratum.
    pub guard: u32,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig { guard: 10 }
    }
}

/// A nonempty stratum with its series `P_{φ,j,θ}` (including `(L − 1)^l`).
#[derive(Clone, Debug)]
pub struct StratumSeries {
    pub stratum: Stratum,
    pub series: MotivicRational,
}

impl StratumSeries {
    pub fn weight(&self) -> BigRational {
        BigRational::new(BigInt::one(), self.stratum.index().cloned().unwrap_or_else(BigInt::one))
    }
}

/// `Par(Λ)` together with its geometric counterpart and bookkeeping.
#[derive(Clone, Debug)]
pub struct AuxSeries {
    pub strata: Vec<Stratum>,
    /// Series of the strata inside `D`, in stratum order.
    pub pieces: Vec<StratumSeries>,
    pub arithmetic: MotivicRational,
    pub geometric: MotivicRational,
    /// `Σ (1/q − 1) P` computed stratum by stratum.
    pub weighted_difference: MotivicRational,
    pub q: BigInt,
    pub poles: BTreeSet<(i64, u32)>,
}

fn accumulate(acc: &mut MotivicRational, term: &MotivicRational) {
    *acc = acc.add(term).cancel();
}

/// Sums rational functions, merging first the terms that share a
/// denominator factor so that common denominators stay small.
///
/// At each step the factor whose sharing terms have the cheapest common
/// denominator is chosen and those terms are added and cancelled; once no
/// factor is shared the remaining terms are added in order.
pub fn sum_rationals(terms: Vec<MotivicRational>) -> MotivicRational {
    let mut terms: Vec<MotivicRational> = terms.into_iter().filter(|t| !t.is_zero()).collect();
    loop {
        let mut users: BTreeMap<(i64, u32), Vec<usize>> = BTreeMap::new();
        for (i, t) in terms.iter().enumerate() {
            for f in t.denominator().keys() {
                users.entry(*f).or_default().push(i);
            }
        }
        let best = users
            .iter()
            .filter(|(_, idx)| idx.len() > 1)
            .map(|(f, idx)| {
                let mut common: BTreeMap<(i64, u32), u32> = BTreeMap::new();
                for &i in idx {
                    for (g, m) in terms[i].denominator() {
                        let e = common.entry(*g).or_insert(0);
                        *e = (*e).max(*m);
                    }
                }
                let cost: u64 = common.iter().map(|((_, b), m)| u64::from(*b) * u64::from(*m)).sum();
                (cost, *f, idx.clone())
            })
            .min();
        let Some((_, _, idx)) = best else { break };
        let mut merged = MotivicRational::zero();
        for &i in idx.iter().rev() {
            accumulate(&mut merged, &terms.swap_remove(i));
        }
        if !merged.is_zero() {
            terms.push(merged);
        }
    }
    let mut acc = MotivicRational::zero();
    for t in &terms {
        accumulate(&mut acc, t);
    }
    acc
}

fn all_pieces(family: &IdealFamily, strata: &[Stratum], only_d: bool, cfg: &SeriesConfig) -> Result<Vec<StratumSeries>> {
    let mut out = Vec::new();
    for st in strata.iter().filter(|s| !s.is_empty() && (!only_d || s.in_d())) {
        let series = stratum_series(family, st, cfg.guard)?.cancel();
        out.push(StratumSeries { stratum: st.clone(), series });
    }
    Ok(out)
}

/// Auxiliary series of `Λ`; the trivial semigroup gives `1/(1 − T)`.
pub fn aux_series(s: &SemigroupData, cfg: &SeriesConfig) -> Result<AuxSeries> {
    if s.is_trivial() {
        let g = MotivicRational::geometric(0, 1);
        return Ok(AuxSeries {
            strata: Vec::new(),
            pieces: Vec::new(),
            arithmetic: g.clone(),
            geometric: g,
            weighted_difference: MotivicRational::zero(),
            q: BigInt::one(),
            poles: [(0, 1)].into_iter().collect(),
        });
    }
    let family = IdealFamily::new(s)?;
    let strata = enumerate_strata(&family)?;
    let pieces = all_pieces(&family, &strata, true, cfg)?;
    let mut q = BigInt::one();
    let mut poles = BTreeSet::new();
    let (mut ar, mut ge, mut wd) = (Vec::new(), Vec::new(), Vec::new());
    for p in &pieces {
        let w = p.weight();
        ar.push(p.series.scale(&w));
        ge.push(p.series.clone());
        wd.push(p.series.scale(&(w - BigRational::one())));
        q = q.lcm(p.stratum.index().expect("nonempty"));
        if let Some(d) = &p.stratum.data {
            poles.extend(d.poles.pairs());
        }
    }
    let arithmetic = sum_rationals(ar);
    let geometric = sum_rationals(ge);
    let weighted_difference = sum_rationals(wd);
    Ok(AuxSeries { strata, pieces, arithmetic, geometric, weighted_difference, q, poles })
}

pub fn par_aux(s: &SemigroupData, cfg: &SeriesConfig) -> Result<MotivicRational> {
    Ok(aux_series(s, cfg)?.arithmetic)
}

#[derive(Clone, Debug)]
pub struct FaceSeries {
    pub face: FaceSemigroup,
    pub aux: AuxSeries,
}

/// The local series at the origin, summed over the faces of `σ`.
#[derive(Clone, Debug)]
pub struct LocalSeries {
    pub faces: Vec<FaceSeries>,
    pub arithmetic: MotivicRational,
    pub geometric: MotivicRational,
    pub difference: MotivicRational,
    /// `q(Λ)` of the semigroup itself.
    pub q: BigInt,
    /// `q_Λ`: lcm over all faces.
    pub q_local: BigInt,
    /// `B_ar(Λ)`.
    pub poles: BTreeSet<(i64, u32)>,
    /// `B_{ar,Λ}`: union over faces.
    pub local_poles: BTreeSet<(i64, u32)>,
}

pub fn local_series(s: &SemigroupData, cfg: &SeriesConfig) -> Result<LocalSeries> {
    let faces: Vec<Cone> = s.faces()?;
    let mut out = Vec::with_capacity(faces.len());
    let (mut ar, mut ge, mut wd) = (Vec::new(), Vec::new(), Vec::new());
    let mut q_local = BigInt::one();
    let mut local_poles = BTreeSet::new();
    let mut q = BigInt::one();
    let mut poles = BTreeSet::new();
    for eta in &faces {
        let face = face_semigroup(s, eta)?;
        let aux = aux_series(&face.semigroup, cfg)?;
        ar.push(aux.arithmetic.clone());
        ge.push(aux.geometric.clone());
        wd.push(aux.weighted_difference.clone());
        q_local = q_local.lcm(&aux.q);
        local_poles.extend(aux.poles.iter().copied());
        if eta.dim() == 0 {
            q = aux.q.clone();
            poles = aux.poles.clone();
        }
        out.push(FaceSeries { face, aux });
    }
    let arithmetic = sum_rationals(ar);
    let geometric = sum_rationals(ge);
    let stratumwise = sum_rationals(wd);
    let difference = sum_rationals(alloc::vec![arithmetic.clone(), geometric.neg()]);
    if !difference.equals(&stratumwise) {
        return Err(Error::Internal("arithmetic minus geometric disagrees with the stratum-wise difference".into()));
    }
    Ok(LocalSeries { faces: out, arithmetic, geometric, difference, q, q_local, poles, local_poles })
}

pub fn par_local(s: &SemigroupData, cfg: &SeriesConfig) -> Result<MotivicRational> {
    Ok(local_series(s, cfg)?.arithmetic)
}

pub fn pgeom_local(s: &SemigroupData, cfg: &SeriesConfig) -> Result<MotivicRational> {
    Ok(local_series(s, cfg)?.geometric)
}

/// `Par − Pgeom`, checked against `Σ (1/q − 1) P`.
pub fn series_difference(s: &SemigroupData, cfg: &SeriesConfig) -> Result<MotivicRational> {
    Ok(local_series(s, cfg)?.difference)
}

/// Local series of a saturated semigroup, summed over every nonempty stratum.
pub fn par_normal(s: &SemigroupData, cfg: &SeriesConfig) -> Result<MotivicRational> {
    if !s.is_saturated() {
        return Err(Error::NotSaturated);
    }
    let mut terms = alloc::vec![MotivicRational::geometric(0, 1)];
    if !s.is_trivial() {
        let family = IdealFamily::new(s)?;
        let strata = enumerate_strata(&family)?;
        for p in all_pieces(&family, &strata, false, cfg)? {
            terms.push(p.series.scale(&p.weight()));
        }
    }
    Ok(sum_rationals(terms))
}

/// Global series `Σ_θ (L − 1)^{codim θ} · Par(Λ(θ))` of a saturated semigroup.
pub fn par_global_normal(s: &SemigroupData, cfg: &SeriesConfig) -> Result<MotivicRational> {
    if !s.is_saturated() {
        return Err(Error::NotSaturated);
    }
    let mut terms = Vec::new();
    for theta in s.faces()? {
        let quotient = quotient_semigroup(s, &theta)?;
        let local = par_normal(&quotient, cfg)?;
        let codim = s.rank() - theta.dim();
        terms.push(local.mul_poly(&Poly::l_minus_one_pow(codim)));
    }
    Ok(sum_rationals(terms))
}

/// Candidate poles of [`par_normal`]: `(0, 1)` and the pole edges of every nonempty stratum.
pub fn normal_poles(s: &SemigroupData) -> Result<BTreeSet<(i64, u32)>> {
    let mut out = BTreeSet::new();
    out.insert((0, 1));
    if !s.is_trivial() {
        let family = IdealFamily::new(s)?;
        for st in enumerate_strata(&family)? {
            if let Some(data) = &st.data {
                out.extend(data.poles.pairs());
            }
        }
    }
    Ok(out)
}

/// Candidate poles of [`par_global_normal`].
pub fn global_normal_poles(s: &SemigroupData) -> Result<BTreeSet<(i64, u32)>> {
    if !s.is_saturated() {
        return Err(Error::NotSaturated);
    }
    let mut out = BTreeSet::new();
    for theta in s.faces()? {
        out.extend(normal_poles(&quotient_semigroup(s, &theta)?)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intlat::LatticeVector;

    fn sg(d: usize, gens: &[&[i64]]) -> SemigroupData {
        let g: Vec<LatticeVector> = gens.iter().map(|v| LatticeVector::from_i64(v)).collect();
        SemigroupData::new(d, &g).unwrap()
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn mono(c: i64, l: i64, t: u32) -> Poly {
        Poly::monomial(c.into(), l, t)
    }

    fn lm1_over_1_minus_lt() -> MotivicRational {
        MotivicRational::new(BigRational::one(), Poly::l_minus_one_pow(1), &[(1, 1)])
    }

    #[test]
    fn trivial_aux_is_geometric() {
        let p = par_aux(&SemigroupData::trivial(), &SeriesConfig::default()).unwrap();
        assert!(p.equals(&MotivicRational::geometric(0, 1)));
    }

    #[test]
    fn cusp_aux() {
        let p = par_aux(&sg(1, &[&[2], &[3]]), &SeriesConfig::default()).unwrap();
        let bracket = MotivicRational::new(r(1, 2), mono(1, 0, 2), &[(0, 2)])
            .add(&MotivicRational::new(r(1, 2), mono(1, 1, 3), &[(1, 3)]));
        assert!(p.equals(&lm1_over_1_minus_lt().mul(&bracket)));
    }

    #[test]
    fn single_generator_aux() {
        let p = par_aux(&sg(1, &[&[1]]), &SeriesConfig::default()).unwrap();
        let want = lm1_over_1_minus_lt().mul(&MotivicRational::new(BigRational::one(), mono(1, 0, 1), &[(0, 1)]));
        assert!(p.equals(&want));
    }

    #[test]
    fn cusp_geometric_and_difference() {
        let s = sg(1, &[&[2], &[3]]);
        let cfg = SeriesConfig::default();
        let local = local_series(&s, &cfg).unwrap();
        // P1 = (L−1)/(1−LT)·[T²/(1−T²) − LT³/(1−LT³)], P2 = (L−1)/(1−LT)·LT³/(1−LT³)
        let even = MotivicRational::new(BigRational::one(), mono(1, 0, 2), &[(0, 2)]);
        let odd = MotivicRational::new(BigRational::one(), mono(1, 1, 3), &[(1, 3)]);
        let p1 = lm1_over_1_minus_lt().mul(&even.sub(&odd));
        let geom = MotivicRational::geometric(0, 1).add(&lm1_over_1_minus_lt().mul(&even));
        assert!(local.geometric.equals(&geom));
        assert!(local.difference.equals(&p1.scale(&r(-1, 2))));
        assert_eq!(local.q, BigInt::from(2));
        assert_eq!(local.q_local, BigInt::from(2));
    }

    #[test]
    fn all_q_one_has_zero_difference() {
        let s = sg(2, &[&[1, 0], &[0, 1]]);
        assert!(series_difference(&s, &SeriesConfig::default()).unwrap().is_zero());
    }

    #[test]
    fn normal_matches_local_on_orthant() {
        let s = sg(2, &[&[1, 0], &[0, 1]]).with_saturated(true);
        let cfg = SeriesConfig::default();
        assert!(par_normal(&s, &cfg).unwrap().equals(&par_local(&s, &cfg).unwrap()));
    }

    #[test]
    fn normal_needs_flag() {
        let s = sg(1, &[&[1]]);
        assert_eq!(par_normal(&s, &SeriesConfig::default()), Err(Error::NotSaturated));
        assert_eq!(par_global_normal(&s, &SeriesConfig::default()), Err(Error::NotSaturated));
    }

    #[test]
    fn smooth_line_global() {
        // both faces of the ray reduce to the line itself: (L − 1) + 1 copies
        let s = sg(1, &[&[1]]).with_saturated(true);
        let cfg = SeriesConfig::default();
        let g = par_global_normal(&s, &cfg).unwrap();
        let local = par_normal(&s, &cfg).unwrap();
        assert!(g.equals(&local.mul_poly(&mono(1, 1, 0))));
    }

    #[test]
    fn orthant_global_has_four_faces() {
        let s = sg(2, &[&[1, 0], &[0, 1]]).with_saturated(true);
        let cfg = SeriesConfig::default();
        let g = par_global_normal(&s, &cfg).unwrap();
        let local = par_normal(&s, &cfg).unwrap();
        // every quotient is again Z²≥0, weights (L−1)² + 2(L−1) + 1 = L²
        assert!(g.equals(&local.mul_poly(&mono(1, 2, 0))));
    }

    #[test]
    fn normal_poles_cover_the_denominator() {
        let s = sg(2, &[&[1, 0], &[1, 1], &[1, 2]]).with_saturated(true);
        let cfg = SeriesConfig::default();
        let poles: Vec<_> = normal_poles(&s).unwrap().into_iter().collect();
        assert!(par_normal(&s, &cfg).unwrap().denominator_divides(&poles));
        let global: Vec<_> = global_normal_poles(&s).unwrap().into_iter().collect();
        assert!(par_global_normal(&s, &cfg).unwrap().denominator_divides(&global));
    }
}
