//! Brute-force expansion of the local series, independent of fans and strata.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::rational::SeriesExpansion;
use crate::error::{Error, Result};
use crate::intlat::{lattice_index, lattice_rank, IntMatrix, LatticeVector};
use crate::toricsg::{face_semigroup, subsets, SemigroupData};

fn small_vec(v: &LatticeVector) -> Result<Vec<i64>> {
    v.coords().iter().map(|c| c.to_i64().ok_or_else(|| Error::Internal("coordinate overflow".into()))).collect()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `Σ_s Σ_{classes} (1/q)(L − 1)^l L^{l·s − ord} T^s` over all faces, plus `1/(1 − T)`
/// from the face `σ`.
pub fn oracle_series(s: &SemigroupData, s_max: u32) -> Result<SeriesExpansion> {
    let mut out = SeriesExpansion::zero(s_max);
    if s.is_trivial() {
        add_trivial(&mut out, s_max);
        return Ok(out);
    }
    for eta in s.faces()? {
        let face = face_semigroup(s, &eta)?;
        if face.semigroup.is_trivial() {
            add_trivial(&mut out, s_max);
        } else {
            oracle_aux(&face.semigroup, s_max, &mut out)?;
        }
    }
    Ok(out)
}

fn add_trivial(out: &mut SeriesExpansion, s_max: u32) {
    for t in 0..=s_max {
        out.add_term(0, t, BigRational::from(BigInt::from(1)));
    }
}

struct JPoint {
    point: Vec<i64>,
    interior: bool,
}

fn oracle_aux(s: &SemigroupData, s_max: u32, out: &mut SeriesExpansion) -> Result<()> {
    let d = s.rank();
    let gens: Vec<Vec<i64>> = s.generators().iter().map(small_vec).collect::<Result<_>>()?;
    let n = gens.len();
    let rays: Vec<Vec<i64>> = s.sigma().rays().iter().map(small_vec).collect::<Result<_>>()?;
    let mut jacobian: Vec<Vec<JPoint>> = vec![Vec::new()];
    for l in 1..=d.min(n) {
        let mut pts = Vec::new();
        for sub in subsets(n, l) {
            let rows: Vec<LatticeVector> = sub.iter().map(|&i| s.generators()[i].clone()).collect();
            if lattice_rank(&IntMatrix::from_rows(d, &rows)) != l {
                continue;
            }
            let mut p = vec![0i64; d];
            for &i in &sub {
                for k in 0..d {
                    p[k] += gens[i][k];
                }
            }
            let interior = rays.iter().all(|r| dot(r, &p) > 0);
            pts.push(JPoint { point: p, interior });
        }
        jacobian.push(pts);
    }
    // a class counted here has ord_{J_l}(ν) ≤ l·s attained at an interior point u,
    // so ν lies in the simplex-like region σ ∩ {⟨·,u⟩ ≤ d·s_max}
    let cap = d as i64 * i64::from(s_max);
    let mut lo = vec![0i64; d];
    let mut hi = vec![0i64; d];
    let mut any = false;
    for u in jacobian.iter().flatten().filter(|u| u.interior) {
        any = true;
        for r in &rays {
            let w = dot(r, &u.point);
            for k in 0..d {
                let x = r[k] * cap;
                lo[k] = lo[k].min(Integer::div_floor(&x, &w));
                hi[k] = hi[k].max(Integer::div_ceil(&x, &w));
            }
        }
    }
    if !any {
        return Ok(());
    }
    let mut small_memo: BTreeMap<u64, (usize, BigInt)> = BTreeMap::new();
    let mut seen: BTreeSet<(u32, u64, Vec<i64>)> = BTreeSet::new();
    let mut counts: BTreeMap<(u32, usize, BigInt, i64), u64> = BTreeMap::new();
    let mut nu = lo.clone();
    'scan: loop {
        let p: Vec<i64> = gens.iter().map(|g| dot(g, &nu)).collect();
        if p.iter().all(|&x| x > 0) {
            // per l: (ord, whether every minimizer is interior)
            let ords: Vec<(i64, bool)> = jacobian
                .iter()
                .map(|pts| {
                    let ord = pts.iter().map(|u| dot(&u.point, &nu)).min().unwrap_or(i64::MAX);
                    let ok = pts.iter().filter(|u| dot(&u.point, &nu) == ord).all(|u| u.interior);
                    (ord, ok)
                })
                .collect();
            let first = *p.iter().min().expect("generators");
            for t in first.max(1)..=i64::from(s_max) {
                let mut mask = 0u64;
                for i in 0..n {
                    if p[i] <= t {
                        mask |= 1 << i;
                    }
                }
                let (l, q) = small_memo
                    .entry(mask)
                    .or_insert_with(|| {
                        let rows: Vec<LatticeVector> =
                            (0..n).filter(|i| mask >> i & 1 == 1).map(|i| s.generators()[i].clone()).collect();
                        let m = IntMatrix::from_rows(d, &rows);
                        (lattice_rank(&m), lattice_index(&m))
                    })
                    .clone();
                let (ord, in_d) = ords[l];
                if !in_d {
                    continue;
                }
                let vals: Vec<i64> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| p[i]).collect();
                if seen.insert((t as u32, mask, vals)) {
                    *counts.entry((t as u32, l, q, l as i64 * t - ord)).or_insert(0) += 1;
                }
            }
        }
        let mut k = 0;
        loop {
            if k == d {
                break 'scan;
            }
            if nu[k] < hi[k] {
                nu[k] += 1;
                break;
            }
            nu[k] = lo[k];
            k += 1;
        }
    }
    for ((t, l, q, a), c) in counts {
        let w = BigRational::new(BigInt::from(c), q);
        // (L − 1)^l = Σ_k C(l,k) L^k (−1)^{l−k}
        let mut binom = BigInt::from(1);
        for k in 0..=l {
            let sign = if (l - k) % 2 == 0 { 1 } else { -1 };
            out.add_term(a + k as i64, t, &w * BigRational::from(&binom * sign));
            binom = binom * (l - k) / (k + 1);
        }
    }
    Ok(())
}
