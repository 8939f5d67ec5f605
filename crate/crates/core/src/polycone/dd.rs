//! Double description: extreme rays of `{x : ⟨a, x⟩ ≥ 0}` for a pointed cone.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::intlat::{lattice_rank, IntMatrix, LatticeVector};

#[derive(Clone)]
struct Ray {
    v: LatticeVector,
    zeros: Vec<u64>,
}

fn bit_set(z: &mut [u64], i: usize) {
    z[i / 64] |= 1 << (i % 64);
}

fn and_count(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

fn subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

/// Columns of the inverse of a nonsingular square matrix, each scaled to a primitive integer vector.
fn inverse_columns(a: &[LatticeVector]) -> Vec<LatticeVector> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row.coords().iter().map(|c| BigRational::from(c.clone())).collect();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero()).expect("singular basis");
        m.swap(c, p);
        let inv = m[c][c].recip();
        for x in m[c].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..2 * n {
                    let t = &m[c][j] * &f;
                    m[i][j] -= t;
                }
            }
        }
    }
    (0..n)
        .map(|col| {
            let entries: Vec<&BigRational> = (0..n).map(|i| &m[i][n + col]).collect();
            let lcm = entries.iter().fold(BigInt::one(), |acc, q| num_integer::lcm(acc, q.denom().clone()));
            let v: Vec<BigInt> = entries.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
            LatticeVector::new(v).primitive()
        })
        .collect()
}

/// Extreme rays (primitive, sorted) of `{x ∈ R^dim : ⟨row, x⟩ ≥ 0 for all rows}`.
///
/// The rows must have full rank `dim`, i.e. the cone must be pointed.
pub fn extreme_rays(dim: usize, rows: &[LatticeVector]) -> Result<Vec<LatticeVector>> {
    if dim == 0 {
        return Ok(Vec::new());
    }
    let mut basis: Vec<usize> = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        if basis.len() == dim {
            break;
        }
        let mut cand: Vec<LatticeVector> = basis.iter().map(|&b| rows[b].clone()).collect();
        cand.push(r.clone());
        if lattice_rank(&IntMatrix::from_rows(dim, &cand)) == cand.len() {
            basis.push(i);
        }
    }
    if basis.len() < dim {
        return Err(Error::NotPointed);
    }
    let words = rows.len().div_ceil(64).max(1);
    let basis_rows: Vec<LatticeVector> = basis.iter().map(|&b| rows[b].clone()).collect();
    let mut rays: Vec<Ray> = inverse_columns(&basis_rows)
        .into_iter()
        .enumerate()
        .map(|(k, v)| {
            let mut zeros = vec![0u64; words];
            for (kk, &b) in basis.iter().enumerate() {
                if kk != k {
                    bit_set(&mut zeros, b);
                }
            }
            Ray { v, zeros }
        })
        .collect();
    for (idx, a) in rows.iter().enumerate() {
        if basis.contains(&idx) {
            continue;
        }
        let vals: Vec<BigInt> = rays.iter().map(|r| a.dot(&r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        if neg.is_empty() {
            for (r, v) in rays.iter_mut().zip(&vals) {
                if v.is_zero() {
                    bit_set(&mut r.zeros, idx);
                }
            }
            continue;
        }
        let mut fresh = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common: Vec<u64> = rays[p].zeros.iter().zip(&rays[q].zeros).map(|(x, y)| x & y).collect();
                if dim >= 2 && and_count(&rays[p].zeros, &rays[q].zeros) < dim - 2 {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(t, r)| t != p && t != q && subset(&common, &r.zeros));
                if blocked {
                    continue;
                }
                let v = rays[q].v.scale(&vals[p]).sub(&rays[p].v.scale(&vals[q])).primitive();
                let mut zeros = common;
                bit_set(&mut zeros, idx);
                fresh.push(Ray { v, zeros });
            }
        }
        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + fresh.len());
        for (mut r, v) in rays.into_iter().zip(vals) {
            if v.is_negative() {
                continue;
            }
            if v.is_zero() {
                bit_set(&mut r.zeros, idx);
            }
            next.push(r);
        }
        next.extend(fresh);
        rays = next;
    }
    let mut out: Vec<LatticeVector> = rays.into_iter().map(|r| r.v).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(v: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(v)
    }

    #[test]
    fn orthant() {
        let rays = extreme_rays(3, &[lv(&[1, 0, 0]), lv(&[0, 1, 0]), lv(&[0, 0, 1])]).unwrap();
        assert_eq!(rays, vec![lv(&[0, 0, 1]), lv(&[0, 1, 0]), lv(&[1, 0, 0])]);
    }

    #[test]
    fn square_pyramid() {
        // x3 ≥ |x1|, x3 ≥ |x2|
        let rows = [lv(&[1, 0, 1]), lv(&[-1, 0, 1]), lv(&[0, 1, 1]), lv(&[0, -1, 1])];
        let rays = extreme_rays(3, &rows).unwrap();
        assert_eq!(rays, vec![lv(&[-1, -1, 1]), lv(&[-1, 1, 1]), lv(&[1, -1, 1]), lv(&[1, 1, 1])]);
    }

    #[test]
    fn redundant_and_degenerate() {
        let rows = [lv(&[1, 0]), lv(&[0, 1]), lv(&[1, 1]), lv(&[2, -1]), lv(&[2, -1])];
        let rays = extreme_rays(2, &rows).unwrap();
        assert_eq!(rays, vec![lv(&[1, 0]), lv(&[1, 2])]);
    }

    #[test]
    fn collapses_to_origin() {
        let rows = [lv(&[1, 0]), lv(&[0, 1]), lv(&[-1, -1])];
        assert!(extreme_rays(2, &rows).unwrap().is_empty());
    }

    #[test]
    fn rejects_lines() {
        assert_eq!(extreme_rays(2, &[lv(&[1, 0])]), Err(Error::NotPointed));
    }
}
