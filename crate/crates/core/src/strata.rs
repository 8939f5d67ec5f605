//! The strata `A(φ, j, θ)`: pairs `(ν, s)` with `ν` in the relative interior of a
//! cone `θ` of `Θ_1 ∩ … ∩ Θ_j` and `φ_j(ν) ≤ s < φ_{j+1}(ν)`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::intlat::{lattice_index, lattice_rank, IntMatrix, LatticeVector};
use crate::polycone::{Cone, PlValue};
use crate::toricsg::IdealFamily;

/// Complete invariant of the class of `(ν, s)`: `s`, the small generators and
/// the values of `ν` on them.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassKey {
    pub s: BigInt,
    pub small: Vec<usize>,
    pub values: Vec<BigInt>,
}

/// A pair `(ν, s)` together with its derived data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassWitness {
    pub nu: LatticeVector,
    pub s: BigInt,
    /// Indices `i` with `⟨ν, e_i⟩ ≤ s`.
    pub small: Vec<usize>,
    pub values: Vec<BigInt>,
    /// `l(ν, s)`: rank of the small generators.
    pub rank: usize,
    /// `q(ν, s)`: index of the lattice they generate in its saturation.
    pub index: BigInt,
    /// `ord_{J_l}(ν)`, zero when `l = 0`.
    pub ord_jacobian: BigInt,
}

impl ClassWitness {
    pub fn new(family: &IdealFamily, nu: &LatticeVector, s: &BigInt) -> ClassWitness {
        let sg = family.semigroup();
        let p = sg.pairings(nu);
        let small: Vec<usize> = (0..p.len()).filter(|&i| &p[i] <= s).collect();
        let values = small.iter().map(|&i| p[i].clone()).collect();
        let rows: Vec<LatticeVector> = small.iter().map(|&i| sg.generators()[i].clone()).collect();
        let m = IntMatrix::from_rows(sg.rank(), &rows);
        let rank = lattice_rank(&m);
        let index = lattice_index(&m);
        let ord_jacobian = family.ord_jacobian(rank, nu);
        ClassWitness { nu: nu.clone(), s: s.clone(), small, values, rank, index, ord_jacobian }
    }

    pub fn key(&self) -> ClassKey {
        ClassKey { s: self.s.clone(), small: self.small.clone(), values: self.values.clone() }
    }

    /// The level `j`: how many pairings are at most `s`.
    pub fn level(&self) -> usize {
        self.small.len()
    }

    /// Exponent of `L` in the class weight: `l·s − ord_{J_l}(ν)`.
    pub fn l_exponent(&self) -> BigInt {
        BigInt::from(self.rank) * &self.s - &self.ord_jacobian
    }
}

/// `(l, q)` of a witness.
pub fn stratum_indices(w: &ClassWitness) -> (usize, BigInt) {
    (w.rank, w.index.clone())
}

/// Candidate poles `(a, b)` of a stratum, meaning factors `1 − L^a T^b`.
///
/// `edges` keeps one pair per edge of the stratum's cone, with repetitions;
/// [`PoleSet::pairs`] is the underlying set.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PoleSet {
    edges: Vec<(i64, u32)>,
}

impl PoleSet {
    pub fn from_edges(mut edges: Vec<(i64, u32)>) -> PoleSet {
        edges.sort();
        PoleSet { edges }
    }

    pub fn edges(&self) -> &[(i64, u32)] {
        &self.edges
    }

    pub fn pairs(&self) -> BTreeSet<(i64, u32)> {
        self.edges.iter().copied().collect()
    }

    pub fn contains(&self, pair: (i64, u32)) -> bool {
        self.edges.contains(&pair)
    }

    /// `Σ b` over the edges: the `T`-degree of the denominator.
    pub fn t_degree(&self) -> u32 {
        self.edges.iter().map(|e| e.1).sum()
    }
}

/// Data of a nonempty stratum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumData {
    pub witness: ClassWitness,
    /// The cone of `Σ_1 ∩ … ∩ Σ_l` containing `θ`.
    pub tau: Cone,
    /// Whether the face of `N(J_l)` selected by `τ` lies in the interior of `σ∨`.
    pub in_d: bool,
    pub poles: PoleSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub level: usize,
    pub cone: Cone,
    /// `None` when the stratum is empty.
    pub data: Option<StratumData>,
}

impl Stratum {
    pub fn is_empty(&self) -> bool {
        self.data.is_none()
    }

    pub fn rank(&self) -> Option<usize> {
        self.data.as_ref().map(|d| d.witness.rank)
    }

    pub fn index(&self) -> Option<&BigInt> {
        self.data.as_ref().map(|d| &d.witness.index)
    }

    pub fn in_d(&self) -> bool {
        self.data.as_ref().is_some_and(|d| d.in_d)
    }

    /// Whether `(ν, s)` belongs to `A(φ, j, θ)`.
    pub fn contains(&self, family: &IdealFamily, nu: &LatticeVector, s: &BigInt) -> bool {
        if !family.semigroup().in_interior(nu) || !self.cone.relative_interior_contains(nu) {
            return false;
        }
        let lo = family.phi(self.level, nu);
        let hi = family.phi(self.level + 1, nu);
        lo <= PlValue::Finite(s.clone()) && PlValue::Finite(s.clone()) < hi
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "j={} rays=[", self.level)?;
        for (i, r) in self.cone.rays().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", r)?;
        }
        write!(f, "]")?;
        match &self.data {
            None => write!(f, " empty"),
            Some(d) => write!(f, " l={} q={} D={}", d.witness.rank, d.witness.index, d.in_d),
        }
    }
}

fn finite(v: PlValue) -> BigInt {
    v.finite().cloned().expect("finite value")
}

fn small_int(v: &BigInt) -> Result<i64> {
    v.to_i64().ok_or_else(|| Error::Internal("exponent overflow".into()))
}

/// A lattice point of `relint θ ∩ int σ` where `φ_j < φ_{j+1}`, with `s = φ_j(ν)`.
///
/// `φ_{j+1} − φ_j` is concave, homogeneous and nonnegative on `θ`, so it
/// vanishes identically as soon as it vanishes at one relative interior point.
pub fn witness_search(family: &IdealFamily, j: usize, theta: &Cone) -> Option<(LatticeVector, BigInt)> {
    let nu = theta.interior_sample();
    if !family.semigroup().in_interior(&nu) {
        return None;
    }
    let lo = family.phi(j, &nu);
    if lo == family.phi(j + 1, &nu) {
        return None;
    }
    Some((nu, finite(lo)))
}

/// The unique cone of `Σ_1 ∩ … ∩ Σ_l` containing `θ`.
pub fn associated_tau(family: &IdealFamily, theta: &Cone, l: usize) -> Result<Cone> {
    let fan = family.sigma_fan(l);
    let nu = theta.interior_sample();
    let tau = fan.locate(&nu).ok_or_else(|| Error::Internal("sample outside the Σ fan".into()))?;
    if !tau.contains_cone(theta) {
        return Err(Error::Internal("θ not contained in a single cone of the Σ fan".into()));
    }
    Ok(tau.clone())
}

/// Whether every minimizer of `⟨ν, ·⟩` on `J_l` pairs positively with every ray of `σ`.
pub fn d_l_membership(family: &IdealFamily, nu: &LatticeVector, l: usize) -> bool {
    let sigma = family.semigroup().sigma();
    family
        .jacobian(l)
        .polyhedron
        .minimizing_vertices(nu)
        .iter()
        .all(|v| sigma.rays().iter().all(|r| r.dot(v).is_positive()))
}

/// Candidate poles from the edges of the cone over `θ` between the graphs of `φ_j` and `φ_{j+1}`.
///
/// Edges with `b = 0` run along the kernel of the class map and are dropped.
pub fn pole_set(family: &IdealFamily, level: usize, theta: &Cone, l: usize) -> Result<PoleSet> {
    let n = family.semigroup().len();
    let lb = BigInt::from(l);
    let mut edges = Vec::new();
    let mut push = |rho: &LatticeVector, phi: BigInt| -> Result<()> {
        if phi.is_zero() {
            return Ok(());
        }
        let a = &lb * &phi - family.ord_jacobian(l, rho);
        let b = phi.to_u32().ok_or_else(|| Error::Internal("exponent overflow".into()))?;
        edges.push((small_int(&a)?, b));
        Ok(())
    };
    for rho in theta.rays() {
        push(rho, finite(family.phi(level, rho)))?;
    }
    if level == n {
        edges.push((family.semigroup().rank() as i64, 1u32));
    } else {
        for rho in family.theta_fan(level + 1).rays() {
            if !theta.contains(&rho) {
                continue;
            }
            let lo = family.phi(level, &rho);
            let hi = family.phi(level + 1, &rho);
            if lo != hi {
                push(&rho, finite(hi))?;
            }
        }
    }
    Ok(PoleSet::from_edges(edges))
}

/// All strata `(j, θ)` with `1 ≤ j ≤ n` and `relint θ ⊂ int σ`, in canonical order.
pub fn enumerate_strata(family: &IdealFamily) -> Result<Vec<Stratum>> {
    let sg = family.semigroup();
    let mut out = Vec::new();
    for level in 1..=sg.len() {
        for theta in family.theta_fan(level).cones() {
            if !sg.in_interior(&theta.interior_sample()) {
                continue;
            }
            let data = match witness_search(family, level, theta) {
                None => None,
                Some((nu, s)) => {
                    let witness = ClassWitness::new(family, &nu, &s);
                    if witness.level() != level {
                        return Err(Error::Internal("witness at the wrong level".into()));
                    }
                    let l = witness.rank;
                    let tau = associated_tau(family, theta, l)?;
                    let in_d = d_l_membership(family, &nu, l);
                    let poles = pole_set(family, level, theta, l)?;
                    Some(StratumData { witness, tau, in_d, poles })
                }
            };
            out.push(Stratum { level, cone: theta.clone(), data });
        }
    }
    Ok(out)
}

/// The nonempty stratum containing `(ν, s)`, if `ν ∈ int σ` and `s ≥ φ_1(ν)`.
pub fn locate_stratum<'a>(
    strata: &'a [Stratum],
    family: &IdealFamily,
    nu: &LatticeVector,
    s: &BigInt,
) -> Option<&'a Stratum> {
    strata.iter().find(|st| st.contains(family, nu, s))
}

/// `q(Λ)`: least common multiple of `q(j, θ)` over the nonempty strata in `D`.
pub fn q_lambda(strata: &[Stratum]) -> BigInt {
    use num_integer::Integer;
    strata
        .iter()
        .filter(|s| s.in_d())
        .filter_map(|s| s.index())
        .fold(BigInt::one(), |acc, q| acc.lcm(q))
}
