//! The vertex criterion under which the arithmetic and geometric series agree.

use alloc::vec::Vec;

use crate::error::Result;
use crate::intlat::{is_part_of_basis, lattice_rank, IntMatrix, LatticeVector};
use crate::toricsg::{subsets, IdealFamily, SemigroupData};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexWitness {
    pub l: usize,
    pub vertex: LatticeVector,
    /// Generator indices summing to the vertex and extending to a basis.
    pub subset: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NicaiseVerdict {
    Holds(Vec<VertexWitness>),
    Fails { l: usize, vertex: LatticeVector },
}

impl NicaiseVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, NicaiseVerdict::Holds(_))
    }
}

/// Every vertex of every `N(J_l)` must be a sum of `l` generators forming part of a basis.
pub fn check_nicaise(s: &SemigroupData) -> Result<NicaiseVerdict> {
    if s.is_trivial() {
        return Ok(NicaiseVerdict::Holds(Vec::new()));
    }
    let family = IdealFamily::new(s)?;
    let gens = s.generators();
    let d = s.rank();
    let mut witnesses = Vec::new();
    for l in 1..=d.min(gens.len()) {
        for v in family.jacobian(l).polyhedron.vertices() {
            let mut found = None;
            for sub in subsets(gens.len(), l) {
                let rows: Vec<LatticeVector> = sub.iter().map(|&i| gens[i].clone()).collect();
                if &LatticeVector::sum(d, &rows) != v {
                    continue;
                }
                let m = IntMatrix::from_rows(d, &rows);
                if lattice_rank(&m) == l && is_part_of_basis(&m)? {
                    found = Some(sub);
                    break;
                }
            }
            match found {
                Some(subset) => witnesses.push(VertexWitness { l, vertex: v.clone(), subset }),
                None => return Ok(NicaiseVerdict::Fails { l, vertex: v.clone() }),
            }
        }
    }
    Ok(NicaiseVerdict::Holds(witnesses))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(d: usize, gens: &[&[i64]]) -> SemigroupData {
        let g: Vec<LatticeVector> = gens.iter().map(|v| LatticeVector::from_i64(v)).collect();
        SemigroupData::new(d, &g).unwrap()
    }

    #[test]
    fn a1_holds() {
        let v = check_nicaise(&sg(2, &[&[1, 0], &[1, 1], &[1, 2]])).unwrap();
        let NicaiseVerdict::Holds(w) = v else { panic!("expected success") };
        let l2: Vec<_> = w.iter().filter(|x| x.l == 2).map(|x| x.vertex.clone()).collect();
        assert!(l2.contains(&LatticeVector::from_i64(&[2, 1])));
        assert!(l2.contains(&LatticeVector::from_i64(&[2, 3])));
    }

    #[test]
    fn cusp_fails() {
        let v = check_nicaise(&sg(1, &[&[2], &[3]])).unwrap();
        assert_eq!(v, NicaiseVerdict::Fails { l: 1, vertex: LatticeVector::from_i64(&[2]) });
    }

    #[test]
    fn basis_holds() {
        assert!(check_nicaise(&sg(2, &[&[1, 0], &[0, 1]])).unwrap().holds());
    }
}
