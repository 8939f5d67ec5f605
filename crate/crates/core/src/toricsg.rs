//! Validated semigroups `Λ ⊂ M`, their ideals `C_j`, `J_l` and the piecewise
//! linear sequences `φ`, `Φ`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result, SemigroupError};
use crate::intlat::{
    lattice_index, lattice_rank, row_lattice_basis, saturated_basis, solve_in_basis, IntMatrix, LatticeVector,
};
use crate::polycone::{face_semigroup_cone, fan_intersection, Cone, Fan, NewtonPolyhedron, PlFunction, PlValue};

/// A finitely generated semigroup with its minimal generators `e_1, …, e_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupData {
    rank: usize,
    generators: Vec<LatticeVector>,
    sigma_dual: Cone,
    sigma: Cone,
    saturated: bool,
}

/// `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < n - k + i {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        if idx[i] >= n - k + i {
            return out;
        }
        idx[i] += 1;
        for t in i + 1..k {
            idx[t] = idx[t - 1] + 1;
        }
    }
}

/// Finds nonnegative integers `c` with `Σ c_k g_k = target`, given weights
/// `w_k = ⟨ν0, g_k⟩ > 0`.
fn decompose(gens: &[LatticeVector], weights: &[BigInt], target: &LatticeVector, budget: &BigInt) -> Option<Vec<u64>> {
    fn go(
        gens: &[LatticeVector],
        weights: &[BigInt],
        pos: usize,
        rest: &LatticeVector,
        budget: &BigInt,
        coeffs: &mut Vec<u64>,
        dead: &mut alloc::collections::BTreeSet<(usize, LatticeVector)>,
    ) -> bool {
        if rest.is_zero() {
            return true;
        }
        if pos == gens.len() || budget.is_negative() || dead.contains(&(pos, rest.clone())) {
            return false;
        }
        let max = (budget / &weights[pos]).to_u64().unwrap_or(u64::MAX);
        let mut c = max;
        loop {
            let r = rest.sub(&gens[pos].scale(&BigInt::from(c)));
            let b = budget - &weights[pos] * BigInt::from(c);
            coeffs[pos] = c;
            if go(gens, weights, pos + 1, &r, &b, coeffs, dead) {
                return true;
            }
            if c == 0 {
                break;
            }
            c -= 1;
        }
        coeffs[pos] = 0;
        dead.insert((pos, rest.clone()));
        false
    }
    let mut coeffs = vec![0u64; gens.len()];
    let mut dead = alloc::collections::BTreeSet::new();
    go(gens, weights, 0, target, budget, &mut coeffs, &mut dead).then_some(coeffs)
}

/// Removes zeros, duplicates and decomposable elements from a generating set
/// of a semigroup whose cone is pointed. The result keeps input order.
pub fn minimal_generating_set(dim: usize, gens: &[LatticeVector]) -> Result<Vec<LatticeVector>> {
    let mut set: Vec<LatticeVector> = Vec::new();
    for g in gens {
        if !g.is_zero() && !set.contains(g) {
            set.push(g.clone());
        }
    }
    if set.is_empty() {
        return Ok(set);
    }
    let cone = Cone::from_generators(dim, &set);
    if !cone.is_pointed() {
        return Err(SemigroupError::NotStrictlyConvex.into());
    }
    let dual = cone.dual();
    // A point in the relative interior of the dual, positive on every generator.
    let nu0 = dual.interior_sample();
    let mut i = 0;
    while i < set.len() {
        let others: Vec<LatticeVector> = set.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, g)| g.clone()).collect();
        let weights: Vec<BigInt> = others.iter().map(|g| nu0.dot(g)).collect();
        if decompose(&others, &weights, &set[i], &nu0.dot(&set[i])).is_some() {
            set.remove(i);
            i = 0;
        } else {
            i += 1;
        }
    }
    Ok(set)
}

impl SemigroupData {
    /// Validates `gens` as the minimal generating set of a semigroup generating `Z^d`.
    pub fn new(d: usize, gens: &[LatticeVector]) -> Result<SemigroupData> {
        if d == 0 || gens.is_empty() {
            return Err(SemigroupError::Empty.into());
        }
        for (index, g) in gens.iter().enumerate() {
            if g.dim() != d {
                return Err(SemigroupError::DimensionMismatch { index, expected: d, found: g.dim() }.into());
            }
            if g.is_zero() {
                return Err(SemigroupError::ZeroGenerator { index }.into());
            }
            if let Some(first) = gens[..index].iter().position(|h| h == g) {
                return Err(SemigroupError::DuplicateGenerator { first, second: index }.into());
            }
        }
        let m = IntMatrix::from_rows(d, gens);
        let rank = lattice_rank(&m);
        if rank < d {
            return Err(SemigroupError::NotFullDimensional { rank }.into());
        }
        let sigma_dual = Cone::from_generators(d, gens);
        if !sigma_dual.is_pointed() {
            return Err(SemigroupError::NotStrictlyConvex.into());
        }
        let index = lattice_index(&m);
        if !index.is_one() {
            return Err(SemigroupError::LatticeNotGenerated { index }.into());
        }
        let sigma = sigma_dual.dual();
        let nu0 = sigma.interior_sample();
        let weights: Vec<BigInt> = gens.iter().map(|g| nu0.dot(g)).collect();
        for i in 0..gens.len() {
            let others: Vec<LatticeVector> = gens.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, g)| g.clone()).collect();
            let w: Vec<BigInt> = weights.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, x)| x.clone()).collect();
            if let Some(c) = decompose(&others, &w, &gens[i], &weights[i]) {
                let decomposition = (0..gens.len())
                    .filter(|&k| k != i)
                    .zip(c)
                    .filter(|(_, c)| *c > 0)
                    .collect();
                return Err(SemigroupError::NotMinimal { index: i, decomposition }.into());
            }
        }
        Ok(SemigroupData { rank: d, generators: gens.to_vec(), sigma_dual, sigma, saturated: false })
    }

    /// The semigroup `{0}` of rank zero, the face semigroup of `σ` itself.
    pub fn trivial() -> SemigroupData {
        SemigroupData {
            rank: 0,
            generators: Vec::new(),
            sigma_dual: Cone::zero(0),
            sigma: Cone::zero(0),
            saturated: true,
        }
    }

    /// Records the user's assertion that `Λ = σ∨ ∩ M`.
    pub fn with_saturated(mut self, saturated: bool) -> SemigroupData {
        self.saturated = saturated || self.rank == 0;
        self
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[LatticeVector] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn sigma_dual(&self) -> &Cone {
        &self.sigma_dual
    }

    pub fn sigma(&self) -> &Cone {
        &self.sigma
    }

    pub fn is_saturated(&self) -> bool {
        self.saturated
    }

    pub fn pairings(&self, nu: &LatticeVector) -> Vec<BigInt> {
        self.generators.iter().map(|e| nu.dot(e)).collect()
    }

    /// Whether `ν ∈ int σ`, i.e. pairs positively with every generator.
    pub fn in_interior(&self, nu: &LatticeVector) -> bool {
        self.generators.iter().all(|e| nu.dot(e).is_positive())
    }

    /// Nonnegative integer coefficients writing `x` in terms of the generators.
    pub fn decompose(&self, x: &LatticeVector) -> Option<Vec<u64>> {
        let nu0 = self.sigma.interior_sample();
        let weights: Vec<BigInt> = self.generators.iter().map(|g| nu0.dot(g)).collect();
        decompose(&self.generators, &weights, x, &nu0.dot(x))
    }

    /// A point of `σ∨ ∩ Z^d` outside `Λ`, or `None` when `Λ` is saturated.
    ///
    /// Any point of `σ∨` minus the integer parts of its coefficients lies in the
    /// zonotope `Σ [0, 1] e_i`, so scanning that zonotope's bounding box suffices.
    pub fn saturation_gap(&self) -> Option<LatticeVector> {
        let d = self.rank;
        let mut lo = vec![BigInt::zero(); d];
        let mut hi = vec![BigInt::zero(); d];
        for g in &self.generators {
            for (k, c) in g.coords().iter().enumerate() {
                if c.is_negative() {
                    lo[k] += c;
                } else {
                    hi[k] += c;
                }
            }
        }
        let mut x = lo.clone();
        loop {
            let v = LatticeVector::new(x.clone());
            if !v.is_zero() && self.sigma_dual.contains(&v) && self.decompose(&v).is_none() {
                return Some(v);
            }
            let mut k = 0;
            loop {
                if k == d {
                    return None;
                }
                if x[k] < hi[k] {
                    x[k] += 1;
                    break;
                }
                x[k] = lo[k].clone();
                k += 1;
            }
        }
    }

    /// All faces of `σ`, from `{0}` to `σ`.
    pub fn faces(&self) -> Result<Vec<Cone>> {
        self.sigma.faces()
    }
}

pub fn build_semigroup(d: usize, gens: &[LatticeVector]) -> Result<SemigroupData> {
    SemigroupData::new(d, gens)
}

/// Sums of `j` distinct generators, deduplicated and sorted.
pub fn combination_ideal(s: &SemigroupData, j: usize) -> Result<Vec<LatticeVector>> {
    let n = s.len();
    if j == 0 || j > n {
        return Err(Error::OutOfRange { what: "j", value: j, min: 1, max: n });
    }
    let mut out: Vec<LatticeVector> = subsets(n, j)
        .into_iter()
        .map(|idx| LatticeVector::sum(s.rank(), idx.iter().map(|&i| &s.generators()[i])))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Sums of `l` linearly independent generators, deduplicated and sorted.
pub fn log_jacobian_ideal(s: &SemigroupData, l: usize) -> Result<Vec<LatticeVector>> {
    let d = s.rank();
    if l == 0 || l > d {
        return Err(Error::OutOfRange { what: "l", value: l, min: 1, max: d });
    }
    let mut out: Vec<LatticeVector> = subsets(s.len(), l)
        .into_iter()
        .filter_map(|idx| {
            let rows: Vec<LatticeVector> = idx.iter().map(|&i| s.generators()[i].clone()).collect();
            (lattice_rank(&IntMatrix::from_rows(d, &rows)) == l).then(|| LatticeVector::sum(d, &rows))
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// A monomial ideal given by its generating exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    pub points: Vec<LatticeVector>,
    pub polyhedron: NewtonPolyhedron,
    pub ord: PlFunction,
}

impl Ideal {
    fn new(points: Vec<LatticeVector>, sigma_dual: &Cone) -> Result<Ideal> {
        let polyhedron = NewtonPolyhedron::new(&points, sigma_dual)?;
        let ord = polyhedron.support_function()?;
        Ok(Ideal { points, polyhedron, ord })
    }

    pub fn fan(&self) -> &Fan {
        self.ord.fan()
    }

    pub fn ord_at(&self, nu: &LatticeVector) -> BigInt {
        self.polyhedron.ord(nu)
    }
}

/// The ideals `C_j`, `J_l`, their fans and the sequences `φ`, `Φ`.
#[derive(Clone, Debug)]
pub struct IdealFamily {
    semigroup: SemigroupData,
    combination: Vec<Ideal>,
    jacobian: Vec<Ideal>,
    theta: Vec<Fan>,
    sigma_fans: Vec<Fan>,
    phi: Vec<PlFunction>,
    big_phi: Vec<PlFunction>,
}

impl IdealFamily {
    pub fn new(s: &SemigroupData) -> Result<IdealFamily> {
        if s.is_trivial() {
            return Err(Error::EmptyInput("trivial semigroup has no ideals"));
        }
        let n = s.len();
        let d = s.rank();
        let mut combination = Vec::with_capacity(n);
        for j in 1..=n {
            combination.push(Ideal::new(combination_ideal(s, j)?, s.sigma_dual())?);
        }
        let mut jacobian = Vec::with_capacity(d);
        for l in 1..=d {
            jacobian.push(Ideal::new(log_jacobian_ideal(s, l)?, s.sigma_dual())?);
        }
        let theta = cumulative(combination.iter().map(|c| c.fan().clone()).collect())?;
        let sigma_fans = cumulative(jacobian.iter().map(|c| c.fan().clone()).collect())?;
        let phi = differences(&combination)?;
        let big_phi = differences(&jacobian)?;
        let family = IdealFamily { semigroup: s.clone(), combination, jacobian, theta, sigma_fans, phi, big_phi };
        family.check_monotone()?;
        Ok(family)
    }

    fn check_monotone(&self) -> Result<()> {
        let finest_theta = self.theta.last().expect("n ≥ 1");
        for ray in finest_theta.rays() {
            for j in 1..self.semigroup.len() {
                if self.phi(j, &ray) > self.phi(j + 1, &ray) {
                    return Err(Error::Internal("φ sequence not monotone".into()));
                }
            }
        }
        let finest_sigma = self.sigma_fans.last().expect("d ≥ 1");
        for c in finest_sigma.maximal_cones() {
            let nu = c.interior_sample();
            for l in 1..self.semigroup.rank() {
                if self.big_phi(l, &nu) > self.big_phi(l + 1, &nu) {
                    return Err(Error::Internal("Φ sequence not monotone".into()));
                }
            }
        }
        Ok(())
    }

    pub fn semigroup(&self) -> &SemigroupData {
        &self.semigroup
    }

    /// The ideal `C_j`, `1 ≤ j ≤ n`.
    pub fn combination(&self, j: usize) -> &Ideal {
        &self.combination[j - 1]
    }

    /// The ideal `J_l`, `1 ≤ l ≤ d`.
    pub fn jacobian(&self, l: usize) -> &Ideal {
        &self.jacobian[l - 1]
    }

    /// `Θ_1 ∩ … ∩ Θ_j`.
    pub fn theta_fan(&self, j: usize) -> &Fan {
        &self.theta[j - 1]
    }

    /// `Σ_1 ∩ … ∩ Σ_l`.
    pub fn sigma_fan(&self, l: usize) -> &Fan {
        &self.sigma_fans[l - 1]
    }

    /// `φ_j` as a piecewise linear function, `1 ≤ j ≤ n`.
    pub fn phi_function(&self, j: usize) -> &PlFunction {
        &self.phi[j - 1]
    }

    /// `Φ_l` as a piecewise linear function, `1 ≤ l ≤ d`.
    pub fn big_phi_function(&self, l: usize) -> &PlFunction {
        &self.big_phi[l - 1]
    }

    /// `φ_j(ν)` with `φ_0 = 0` and `φ_{n+1} = ∞`: the `j`-th smallest pairing.
    pub fn phi(&self, j: usize, nu: &LatticeVector) -> PlValue {
        let n = self.semigroup.len();
        if j == 0 {
            return PlValue::Finite(BigInt::zero());
        }
        if j > n {
            return PlValue::Infinite;
        }
        let mut p = self.semigroup.pairings(nu);
        p.sort();
        PlValue::Finite(p[j - 1].clone())
    }

    pub fn ord_combination(&self, j: usize, nu: &LatticeVector) -> BigInt {
        if j == 0 {
            return BigInt::zero();
        }
        self.combination[j - 1].ord_at(nu)
    }

    pub fn ord_jacobian(&self, l: usize, nu: &LatticeVector) -> BigInt {
        if l == 0 {
            return BigInt::zero();
        }
        self.jacobian[l - 1].ord_at(nu)
    }

    /// `Φ_l(ν)` with `Φ_0 = 0` and `Φ_{d+1} = ∞`.
    pub fn big_phi(&self, l: usize, nu: &LatticeVector) -> PlValue {
        if l > self.semigroup.rank() {
            return PlValue::Infinite;
        }
        if l == 0 {
            return PlValue::Finite(BigInt::zero());
        }
        PlValue::Finite(self.ord_jacobian(l, nu) - self.ord_jacobian(l - 1, nu))
    }
}

fn cumulative(fans: Vec<Fan>) -> Result<Vec<Fan>> {
    let mut out: Vec<Fan> = Vec::with_capacity(fans.len());
    for f in fans {
        let next = match out.last() {
            None => f,
            Some(prev) => fan_intersection(&[prev.clone(), f])?,
        };
        out.push(next);
    }
    Ok(out)
}

fn differences(ideals: &[Ideal]) -> Result<Vec<PlFunction>> {
    let mut out = Vec::with_capacity(ideals.len());
    for (k, ideal) in ideals.iter().enumerate() {
        if k == 0 {
            out.push(ideal.ord.clone());
        } else {
            out.push(ideal.ord.difference(&ideals[k - 1].ord)?);
        }
    }
    Ok(out)
}

pub fn phi_sequences(s: &SemigroupData) -> Result<IdealFamily> {
    IdealFamily::new(s)
}

/// The semigroup `Λ ∩ η^⊥` re-based into the lattice its generators span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSemigroup {
    pub face: Cone,
    /// Indices of the generators of `Λ` lying in `η^⊥`.
    pub kept: Vec<usize>,
    /// Rows: a basis of the group generated by the kept generators, in `M`.
    pub basis: Vec<LatticeVector>,
    pub semigroup: SemigroupData,
}

pub fn face_semigroup(s: &SemigroupData, eta: &Cone) -> Result<FaceSemigroup> {
    let perp = face_semigroup_cone(s.sigma(), eta)?;
    let kept: Vec<usize> = (0..s.len()).filter(|&i| perp.contains(&s.generators()[i])).collect();
    if kept.is_empty() {
        return Ok(FaceSemigroup { face: eta.clone(), kept, basis: Vec::new(), semigroup: SemigroupData::trivial() });
    }
    let rows: Vec<LatticeVector> = kept.iter().map(|&i| s.generators()[i].clone()).collect();
    let basis = row_lattice_basis(&IntMatrix::from_rows(s.rank(), &rows));
    let coords: Vec<LatticeVector> = rows
        .iter()
        .map(|r| solve_in_basis(&basis, r).expect("generator lies in its own lattice"))
        .collect();
    let semigroup = SemigroupData::new(basis.len(), &coords)?.with_saturated(s.is_saturated());
    Ok(FaceSemigroup { face: eta.clone(), kept, basis, semigroup })
}

/// `Λ(θ) = (σ_θ∨ ∩ M_θ) × Z_{≥0}^{codim θ}` for a face `θ` of `σ` of a saturated semigroup.
pub fn quotient_semigroup(s: &SemigroupData, theta: &Cone) -> Result<SemigroupData> {
    if !s.is_saturated() {
        return Err(Error::NotSaturated);
    }
    if !theta.is_face_of(s.sigma()) {
        return Err(Error::NotAFace);
    }
    let d = s.rank();
    let b = if theta.dim() == 0 { Vec::new() } else { saturated_basis(&IntMatrix::from_rows(d, theta.rays())) };
    let k = b.len();
    let images: Vec<LatticeVector> =
        s.generators().iter().map(|e| LatticeVector::new(b.iter().map(|bk| bk.dot(e)).collect())).collect();
    let mut gens: Vec<LatticeVector> = Vec::new();
    if k > 0 {
        let mut minimal = minimal_generating_set(k, &images)?;
        minimal.sort();
        for g in minimal {
            let mut c = g.into_coords();
            c.resize(d, BigInt::zero());
            gens.push(LatticeVector::new(c));
        }
    }
    for m in k..d {
        gens.push(LatticeVector::unit(d, m));
    }
    Ok(SemigroupData::new(d, &gens)?.with_saturated(true))
}

/// Multiset of generator pairings keyed by value, used in round-trip checks.
pub fn generator_multiset(gens: &[LatticeVector]) -> BTreeMap<LatticeVector, usize> {
    let mut m = BTreeMap::new();
    for g in gens {
        *m.entry(g.clone()).or_insert(0) += 1;
    }
    m
}
