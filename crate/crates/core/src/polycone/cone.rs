//! Rational polyhedral cones with both ray and half-space descriptions.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::dd::extreme_rays;
use crate::error::{Error, Result};
use crate::intlat::{
    coordinates, integer_kernel, lattice_rank, left_inverse, row_lattice_basis, saturated_basis, IntMatrix,
    LatticeVector,
};

/// A rational polyhedral cone in `R^ambient`.
///
/// The cone is `lineality + cone(rays)`, and equally the set of `x` with
/// `⟨e, x⟩ = 0` for all equations and `⟨f, x⟩ ≥ 0` for all facet normals.
/// For pointed cones the rays are the primitive extreme rays, sorted.
#[derive(Clone, Debug)]
pub struct Cone {
    ambient: usize,
    dim: usize,
    rays: Vec<LatticeVector>,
    lineality: Vec<LatticeVector>,
    equations: Vec<LatticeVector>,
    facets: Vec<LatticeVector>,
}

impl PartialEq for Cone {
    fn eq(&self, other: &Self) -> bool {
        if self.ambient != other.ambient || self.dim != other.dim || self.lineality.len() != other.lineality.len() {
            return false;
        }
        if self.lineality.is_empty() {
            return self.rays == other.rays;
        }
        self.contains_cone(other) && other.contains_cone(self)
    }
}

impl Eq for Cone {}

impl Cone {
    /// The cone `{0}`.
    pub fn zero(ambient: usize) -> Cone {
        Cone {
            ambient,
            dim: 0,
            rays: Vec::new(),
            lineality: Vec::new(),
            equations: (0..ambient).map(|k| LatticeVector::unit(ambient, k)).collect(),
            facets: Vec::new(),
        }
    }

    /// The first orthant of `R^ambient`.
    pub fn orthant(ambient: usize) -> Cone {
        let units: Vec<LatticeVector> = (0..ambient).map(|k| LatticeVector::unit(ambient, k)).collect();
        Cone::from_generators(ambient, &units)
    }

    /// The cone generated by the given vectors (which may contain lines).
    pub fn from_generators(ambient: usize, gens: &[LatticeVector]) -> Cone {
        let gens: Vec<LatticeVector> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        if gens.is_empty() {
            return Cone::zero(ambient);
        }
        let gm = IntMatrix::from_rows(ambient, &gens);
        let span = saturated_basis(&gm);
        let k = span.len();
        let bm = IntMatrix::from_rows(ambient, &span);
        let inv = left_inverse(&bm).expect("saturated basis has a left inverse");
        let ys: Vec<LatticeVector> = gens.iter().map(|g| coordinates(g, &inv)).collect();
        let dual_rays = extreme_rays(k, &ys).expect("generators span their own span");
        let lineality_y: Vec<LatticeVector> = if dual_rays.is_empty() {
            (0..k).map(|i| LatticeVector::unit(k, i)).collect()
        } else {
            integer_kernel(&IntMatrix::from_rows(k, &dual_rays))
        };
        let lift = |y: &LatticeVector| IntMatrix::from_rows(k, core::slice::from_ref(y)).mul(&bm).row(0);
        let lineality: Vec<LatticeVector> = if lineality_y.is_empty() {
            Vec::new()
        } else {
            let lifted: Vec<LatticeVector> = lineality_y.iter().map(lift).collect();
            row_lattice_basis(&IntMatrix::from_rows(ambient, &lifted))
        };
        let mut facets: Vec<LatticeVector> = dual_rays
            .iter()
            .map(|w| {
                let col = IntMatrix::from_rows(k, core::slice::from_ref(w)).transpose();
                inv.mul(&col).column(0)
            })
            .collect();
        facets.sort();
        let pointed_dim = k - lineality.len();
        let mut rays: Vec<LatticeVector> = Vec::new();
        if pointed_dim > 0 {
            let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
            let mut candidates: Vec<(Vec<usize>, LatticeVector)> = Vec::new();
            for (g, y) in gens.iter().zip(&ys) {
                let vals: Vec<BigInt> = dual_rays.iter().map(|w| w.dot(y)).collect();
                if vals.iter().all(Zero::is_zero) {
                    continue;
                }
                let tight: Vec<usize> = (0..vals.len()).filter(|&i| vals[i].is_zero()).collect();
                let tight_rows: Vec<LatticeVector> = tight.iter().map(|&i| dual_rays[i].clone()).collect();
                if lattice_rank(&IntMatrix::from_rows(k, &tight_rows)) + 1 == pointed_dim {
                    candidates.push((tight, g.primitive()));
                }
            }
            candidates.sort_by(|a, b| a.1.cmp(&b.1));
            for (tight, g) in candidates {
                if seen.insert(tight) {
                    rays.push(g);
                }
            }
            rays.sort();
        }
        let equations = integer_kernel(&gm);
        Cone { ambient, dim: k, rays, lineality, equations, facets }
    }

    /// The cone `{x : ⟨f, x⟩ ≥ 0, ⟨e, x⟩ = 0}`, which must be pointed.
    pub fn from_inequalities(ambient: usize, inequalities: &[LatticeVector], equations: &[LatticeVector]) -> Result<Cone> {
        let mut rows: Vec<LatticeVector> = equations.to_vec();
        rows.extend(equations.iter().map(LatticeVector::neg));
        rows.extend(inequalities.iter().cloned());
        let rays = extreme_rays(ambient, &rows)?;
        Ok(Cone::from_generators(ambient, &rays))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn lineality(&self) -> &[LatticeVector] {
        &self.lineality
    }

    pub fn equations(&self) -> &[LatticeVector] {
        &self.equations
    }

    pub fn facets(&self) -> &[LatticeVector] {
        &self.facets
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.ambient
    }

    /// Sum of the rays: a point of the relative interior of a pointed cone.
    pub fn interior_sample(&self) -> LatticeVector {
        LatticeVector::sum(self.ambient, &self.rays)
    }

    pub fn contains(&self, v: &LatticeVector) -> bool {
        self.equations.iter().all(|e| e.dot(v).is_zero()) && self.facets.iter().all(|f| !f.dot(v).is_negative())
    }

    /// Whether `v` lies in the cone and on none of its proper faces.
    pub fn relative_interior_contains(&self, v: &LatticeVector) -> bool {
        self.equations.iter().all(|e| e.dot(v).is_zero()) && self.facets.iter().all(|f| f.dot(v).is_positive())
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        other.rays.iter().all(|r| self.contains(r))
            && other.lineality.iter().all(|l| self.contains(l) && self.contains(&l.neg()))
    }

    pub fn intersection(&self, other: &Cone) -> Result<Cone> {
        let mut ineq = self.facets.clone();
        ineq.extend(other.facets.iter().cloned());
        let mut eqs = self.equations.clone();
        eqs.extend(other.equations.iter().cloned());
        Cone::from_inequalities(self.ambient, &ineq, &eqs)
    }

    /// The dual cone `{w : ⟨w, x⟩ ≥ 0 for all x in the cone}`.
    pub fn dual(&self) -> Cone {
        let mut gens = self.facets.clone();
        gens.extend(self.equations.iter().cloned());
        gens.extend(self.equations.iter().map(LatticeVector::neg));
        Cone::from_generators(self.ambient, &gens)
    }

    /// All faces of a pointed cone, from `{0}` up to the cone itself,
    /// ordered by dimension and then by rays.
    pub fn faces(&self) -> Result<Vec<Cone>> {
        if !self.is_pointed() {
            return Err(Error::NotPointed);
        }
        let all: Vec<usize> = (0..self.rays.len()).collect();
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        found.insert(all.clone());
        let mut queue = alloc::vec![all];
        while let Some(face) = queue.pop() {
            for f in &self.facets {
                let sub: Vec<usize> = face.iter().copied().filter(|&i| f.dot(&self.rays[i]).is_zero()).collect();
                if found.insert(sub.clone()) {
                    queue.push(sub);
                }
            }
        }
        let mut faces: Vec<Cone> = found
            .into_iter()
            .map(|idx| {
                let gens: Vec<LatticeVector> = idx.iter().map(|&i| self.rays[i].clone()).collect();
                Cone::from_generators(self.ambient, &gens)
            })
            .collect();
        faces.sort_by(|a, b| (a.dim, &a.rays).cmp(&(b.dim, &b.rays)));
        faces.dedup();
        Ok(faces)
    }

    /// Whether this cone is a face of `outer`.
    pub fn is_face_of(&self, outer: &Cone) -> bool {
        outer.faces().map(|fs| fs.contains(self)).unwrap_or(false)
    }
}

/// The linear subspace `η^⊥` of the dual space, for a face `η` of `σ`.
pub fn face_semigroup_cone(sigma: &Cone, eta: &Cone) -> Result<Cone> {
    if !eta.is_face_of(sigma) {
        return Err(Error::NotAFace);
    }
    let d = sigma.ambient();
    if eta.dim() == 0 {
        let mut gens: Vec<LatticeVector> = (0..d).map(|k| LatticeVector::unit(d, k)).collect();
        gens.extend((0..d).map(|k| LatticeVector::unit(d, k).neg()));
        return Ok(Cone::from_generators(d, &gens));
    }
    let perp = integer_kernel(&IntMatrix::from_rows(d, eta.rays()));
    let mut gens = perp.clone();
    gens.extend(perp.iter().map(LatticeVector::neg));
    Ok(Cone::from_generators(d, &gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn lv(v: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(v)
    }

    fn cone(gens: &[&[i64]]) -> Cone {
        let d = gens[0].len();
        let g: Vec<LatticeVector> = gens.iter().map(|v| lv(v)).collect();
        Cone::from_generators(d, &g)
    }

    #[test]
    fn orthant_is_self_dual() {
        let c = Cone::orthant(2);
        assert_eq!(c.dual(), c);
        assert_eq!(c.facets(), &[lv(&[0, 1]), lv(&[1, 0])]);
    }

    #[test]
    fn dual_of_ray_is_half_plane() {
        let d = cone(&[&[1, 0]]).dual();
        assert_eq!(d.dim(), 2);
        assert_eq!(d.lineality().len(), 1);
        assert!(d.contains(&lv(&[0, 7])) && d.contains(&lv(&[0, -7])) && d.contains(&lv(&[3, 1])));
        assert!(!d.contains(&lv(&[-1, 0])));
        assert_eq!(d.dual(), cone(&[&[1, 0]]));
    }

    #[test]
    fn dual_facet_normals() {
        let c = cone(&[&[2, 5], &[3, 5]]);
        assert_eq!(c.facets(), &[lv(&[-5, 3]), lv(&[5, -2])]);
        assert_eq!(c.dual().rays(), &[lv(&[-5, 3]), lv(&[5, -2])]);
        assert_eq!(c.dual().dual(), c);
    }

    #[test]
    fn face_counts() {
        assert_eq!(Cone::orthant(2).faces().unwrap().len(), 4);
        assert_eq!(cone(&[&[1, 2]]).faces().unwrap().len(), 2);
        assert_eq!(Cone::orthant(3).faces().unwrap().len(), 8);
        let pyramid = cone(&[&[1, 1, 1], &[-1, 1, 1], &[1, -1, 1], &[-1, -1, 1]]);
        assert_eq!(pyramid.faces().unwrap().len(), 1 + 4 + 4 + 1);
    }

    #[test]
    fn relative_interior() {
        let q = Cone::orthant(2);
        assert!(!q.relative_interior_contains(&lv(&[0, 0])));
        assert!(q.relative_interior_contains(&lv(&[1, 1])));
        assert!(!q.relative_interior_contains(&lv(&[0, 1])));
        let r = cone(&[&[2, 5]]);
        assert!(r.relative_interior_contains(&lv(&[2, 5])));
        assert!(!r.relative_interior_contains(&lv(&[0, 0])));
        assert!(!cone(&[&[4, 6]]).relative_interior_contains(&lv(&[2, 5])));
    }

    #[test]
    fn redundant_generators_and_lines() {
        let c = cone(&[&[1, 0], &[1, 1], &[0, 1], &[2, 1]]);
        assert_eq!(c.rays(), &[lv(&[0, 1]), lv(&[1, 0])]);
        let plane = cone(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]);
        assert_eq!(plane.dim(), 2);
        assert_eq!(plane.lineality().len(), 2);
        assert!(plane.facets().is_empty());
        assert!(plane.dual().dim() == 0);
        let half = cone(&[&[1, 0], &[-1, 0], &[1, 1]]);
        assert_eq!(half.lineality(), &[lv(&[1, 0])]);
        assert_eq!(half.facets(), &[lv(&[0, 1])]);
    }

    #[test]
    fn intersections() {
        let a = cone(&[&[1, 0], &[1, 2]]);
        let b = cone(&[&[1, 1], &[0, 1]]);
        assert_eq!(a.intersection(&b).unwrap(), cone(&[&[1, 1], &[1, 2]]));
        let c = cone(&[&[1, 0]]);
        assert_eq!(a.intersection(&c).unwrap(), c);
        assert_eq!(b.intersection(&c).unwrap(), Cone::zero(2));
    }

    #[test]
    fn face_subspaces() {
        let sigma = Cone::orthant(2);
        let all = face_semigroup_cone(&sigma, &Cone::zero(2)).unwrap();
        assert_eq!(all.dim(), 2);
        assert!(all.facets().is_empty());
        assert_eq!(face_semigroup_cone(&sigma, &sigma).unwrap().dim(), 0);
        let eta = cone(&[&[1, 0]]);
        let perp = face_semigroup_cone(&sigma, &eta).unwrap();
        let kept: Vec<LatticeVector> = [lv(&[5, 0]), lv(&[0, 2]), lv(&[0, 3]), lv(&[6, 2])]
            .into_iter()
            .filter(|g| perp.contains(g))
            .collect();
        assert_eq!(kept, vec![lv(&[0, 2]), lv(&[0, 3])]);
        assert_eq!(face_semigroup_cone(&sigma, &cone(&[&[1, 1]])), Err(Error::NotAFace));
    }
}
