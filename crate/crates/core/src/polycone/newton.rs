//! Newton polyhedra `conv(I) + σ∨` and their normal fans.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::cone::Cone;
use super::fan::Fan;
use super::lp::feasible_point;
use super::plf::PlFunction;
use crate::error::{Error, Result};
use crate::intlat::LatticeVector;

/// Witness that `point` lies in `conv(I ∖ {point}) + σ∨`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonVertexCertificate {
    pub point: LatticeVector,
    pub convex: Vec<(LatticeVector, BigRational)>,
    pub recession: Vec<(LatticeVector, BigRational)>,
}

impl NonVertexCertificate {
    pub fn verify(&self) -> bool {
        let d = self.point.dim();
        let mut acc: Vec<BigRational> = alloc::vec![BigRational::zero(); d];
        let mut weight = BigRational::zero();
        for (p, c) in &self.convex {
            if c < &BigRational::zero() {
                return false;
            }
            weight += c;
            for k in 0..d {
                acc[k] += c * BigRational::from(p[k].clone());
            }
        }
        for (g, c) in &self.recession {
            if c < &BigRational::zero() {
                return false;
            }
            for k in 0..d {
                acc[k] += c * BigRational::from(g[k].clone());
            }
        }
        weight.is_one() && (0..d).all(|k| acc[k] == BigRational::from(self.point[k].clone()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    points: Vec<LatticeVector>,
    vertices: Vec<LatticeVector>,
    recession: Cone,
    sigma: Cone,
    certificates: Vec<NonVertexCertificate>,
}

fn q(v: &BigInt) -> BigRational {
    BigRational::from(v.clone())
}

impl NewtonPolyhedron {
    /// `conv(points) + sigma_dual`, with vertices decided by exact linear programming.
    pub fn new(points: &[LatticeVector], sigma_dual: &Cone) -> Result<NewtonPolyhedron> {
        if points.is_empty() {
            return Err(Error::EmptyInput("Newton polyhedron generating set"));
        }
        let mut pts = points.to_vec();
        pts.sort();
        pts.dedup();
        let d = sigma_dual.ambient();
        let mut rec: Vec<LatticeVector> = sigma_dual.rays().to_vec();
        rec.extend(sigma_dual.lineality().iter().cloned());
        rec.extend(sigma_dual.lineality().iter().map(LatticeVector::neg));
        let mut vertices = Vec::new();
        let mut certificates = Vec::new();
        for v in &pts {
            let others: Vec<&LatticeVector> = pts.iter().filter(|w| *w != v).collect();
            let vars = others.len() + rec.len();
            let mut a: Vec<Vec<BigRational>> = Vec::with_capacity(d + 1);
            for k in 0..d {
                let mut row: Vec<BigRational> = others.iter().map(|w| q(&w[k])).collect();
                row.extend(rec.iter().map(|g| q(&g[k])));
                a.push(row);
            }
            let mut ones: Vec<BigRational> = others.iter().map(|_| BigRational::one()).collect();
            ones.extend(rec.iter().map(|_| BigRational::zero()));
            a.push(ones);
            let mut b: Vec<BigRational> = v.coords().iter().map(q).collect();
            b.push(BigRational::one());
            match feasible_point(&a, &b, vars) {
                None => vertices.push(v.clone()),
                Some(x) => {
                    let n = others.len();
                    let convex = others
                        .iter()
                        .zip(&x[..n])
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(w, c)| ((*w).clone(), c.clone()))
                        .collect();
                    let recession = rec
                        .iter()
                        .zip(&x[n..])
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(g, c)| (g.clone(), c.clone()))
                        .collect();
                    certificates.push(NonVertexCertificate { point: v.clone(), convex, recession });
                }
            }
        }
        let sigma = sigma_dual.dual();
        Ok(NewtonPolyhedron { points: pts, vertices, recession: sigma_dual.clone(), sigma, certificates })
    }

    pub fn points(&self) -> &[LatticeVector] {
        &self.points
    }

    pub fn vertices(&self) -> &[LatticeVector] {
        &self.vertices
    }

    pub fn recession(&self) -> &Cone {
        &self.recession
    }

    /// The cone `σ` on which the support function lives.
    pub fn sigma(&self) -> &Cone {
        &self.sigma
    }

    pub fn certificates(&self) -> &[NonVertexCertificate] {
        &self.certificates
    }

    /// `min ⟨ν, v⟩` over the vertices.
    pub fn ord(&self, nu: &LatticeVector) -> BigInt {
        self.vertices.iter().map(|v| nu.dot(v)).min().expect("nonempty vertex set")
    }

    /// Vertices of the face of the polyhedron where `⟨ν, ·⟩` is minimal.
    pub fn minimizing_vertices(&self, nu: &LatticeVector) -> Vec<LatticeVector> {
        let m = self.ord(nu);
        self.vertices.iter().filter(|v| nu.dot(v) == m).cloned().collect()
    }

    /// The normal cone `{ν ∈ σ : ⟨ν, w − v⟩ ≥ 0}` of a vertex `v`.
    pub fn vertex_cone(&self, v: &LatticeVector) -> Result<Cone> {
        let mut ineq: Vec<LatticeVector> = self.sigma.facets().to_vec();
        ineq.extend(self.vertices.iter().filter(|w| *w != v).map(|w| w.sub(v)));
        Cone::from_inequalities(self.sigma.ambient(), &ineq, self.sigma.equations())
    }

    /// The dual subdivision of `σ`: one maximal cone per vertex.
    pub fn normal_fan(&self) -> Result<Fan> {
        let mut cones = Vec::with_capacity(self.vertices.len());
        for v in &self.vertices {
            let c = self.vertex_cone(v)?;
            if c.dim() == self.sigma.dim() {
                cones.push(c);
            }
        }
        Fan::from_maximal(self.sigma.clone(), cones)
    }

    /// `ord` as a piecewise linear function on the normal fan.
    pub fn support_function(&self) -> Result<PlFunction> {
        let fan = self.normal_fan()?;
        let functionals = fan
            .maximal_cones()
            .iter()
            .map(|c| {
                let s = c.interior_sample();
                let m = self.ord(&s);
                self.vertices.iter().find(|v| s.dot(v) == m).cloned().expect("minimizer exists")
            })
            .collect();
        PlFunction::new(fan, functionals)
    }
}

pub fn newton_polyhedron(points: &[LatticeVector], sigma_dual: &Cone) -> Result<NewtonPolyhedron> {
    NewtonPolyhedron::new(points, sigma_dual)
}
