//! Fans subdividing a cone, stored with all of their faces.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::cone::Cone;
use crate::error::{Error, Result};
use crate::intlat::LatticeVector;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    support: Cone,
    maximal: Vec<Cone>,
    cones: Vec<Cone>,
}

fn cone_key(c: &Cone) -> (usize, Vec<LatticeVector>) {
    (c.dim(), c.rays().to_vec())
}

impl Fan {
    /// The fan of a pointed cone and all its faces.
    pub fn trivial(support: Cone) -> Result<Fan> {
        Fan::from_maximal(support.clone(), alloc::vec![support])
    }

    /// Closes the given pointed cones under taking faces.
    pub fn from_maximal(support: Cone, maximal: Vec<Cone>) -> Result<Fan> {
        let mut all: BTreeMap<(usize, Vec<LatticeVector>), Cone> = BTreeMap::new();
        let mut maxes: BTreeMap<(usize, Vec<LatticeVector>), Cone> = BTreeMap::new();
        for m in maximal {
            for f in m.faces()? {
                all.entry(cone_key(&f)).or_insert(f);
            }
            maxes.insert(cone_key(&m), m);
        }
        Ok(Fan { support, maximal: maxes.into_values().collect(), cones: all.into_values().collect() })
    }

    pub fn support(&self) -> &Cone {
        &self.support
    }

    pub fn ambient(&self) -> usize {
        self.support.ambient()
    }

    /// Maximal cones in canonical order.
    pub fn maximal_cones(&self) -> &[Cone] {
        &self.maximal
    }

    /// All cones, ordered by dimension and then rays.
    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    /// The one-dimensional cones' generators, sorted.
    pub fn rays(&self) -> Vec<LatticeVector> {
        self.cones.iter().filter(|c| c.dim() == 1).map(|c| c.rays()[0].clone()).collect()
    }

    /// The cone whose relative interior contains `v`.
    pub fn locate(&self, v: &LatticeVector) -> Option<&Cone> {
        self.cones.iter().find(|c| c.relative_interior_contains(v))
    }

    /// Index of the first maximal cone containing `v`.
    pub fn locate_maximal(&self, v: &LatticeVector) -> Option<usize> {
        self.maximal.iter().position(|c| c.contains(v))
    }

    /// Whether every cone of `self` lies in some cone of `coarser`.
    pub fn refines(&self, coarser: &Fan) -> bool {
        self.maximal.iter().all(|c| coarser.maximal.iter().any(|d| d.contains_cone(c)))
    }
}

/// The common refinement of fans with a common support.
pub fn fan_intersection(fans: &[Fan]) -> Result<Fan> {
    let Some(first) = fans.first() else { return Err(Error::EmptyInput("fan list")) };
    let support = first.support().clone();
    let dim = support.dim();
    let mut maximal: Vec<Cone> = first.maximal_cones().to_vec();
    for f in &fans[1..] {
        if f.support() != &support {
            return Err(Error::SupportMismatch);
        }
        let mut next = Vec::new();
        for a in &maximal {
            for b in f.maximal_cones() {
                let c = a.intersection(b)?;
                if c.dim() == dim {
                    next.push(c);
                }
            }
        }
        maximal = next;
    }
    Fan::from_maximal(support, maximal)
}
