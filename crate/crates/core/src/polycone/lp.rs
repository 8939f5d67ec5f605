//! Exact feasibility for `A x = b, x ≥ 0` by a phase one simplex with Bland's rule.

use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Returns a nonnegative solution of `A x = b`, or `None` if there is none.
pub fn feasible_point(a: &[Vec<BigRational>], b: &[BigRational], vars: usize) -> Option<Vec<BigRational>> {
    let m = a.len();
    let width = vars + m + 1;
    let rhs = vars + m;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row: Vec<BigRational> = Vec::with_capacity(width);
        for j in 0..vars {
            row.push(if flip { -&a[i][j] } else { a[i][j].clone() });
        }
        for k in 0..m {
            row.push(if k == i { BigRational::from_integer(1.into()) } else { BigRational::zero() });
        }
        row.push(if flip { -&b[i] } else { b[i].clone() });
        t.push(row);
    }
    let mut basis: Vec<usize> = (vars..vars + m).collect();
    // reduced costs of the phase one objective: minimize the sum of artificials
    let mut cost: Vec<BigRational> = (0..width)
        .map(|j| {
            if j < vars || j == rhs {
                -t.iter().map(|r| r[j].clone()).sum::<BigRational>()
            } else {
                BigRational::zero()
            }
        })
        .collect();
    while let Some(enter) = (0..vars + m).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if !t[i][enter].is_positive() {
                continue;
            }
            let ratio = &t[i][rhs] / &t[i][enter];
            let better = match &leave {
                None => true,
                Some((l, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*l]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let Some((p, _)) = leave else { break };
        let piv = t[p][enter].clone();
        for x in t[p].iter_mut() {
            *x /= &piv;
        }
        for i in 0..m {
            if i != p && !t[i][enter].is_zero() {
                let f = t[i][enter].clone();
                for j in 0..width {
                    let v = &t[p][j] * &f;
                    t[i][j] -= v;
                }
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for j in 0..width {
                let v = &t[p][j] * &f;
                cost[j] -= v;
            }
        }
        basis[p] = enter;
    }
    if !cost[rhs].is_zero() {
        return None;
    }
    let mut x = alloc::vec![BigRational::zero(); vars];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < vars {
            x[bv] = t[i][rhs].clone();
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use num_bigint::BigInt;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn check(a: &[Vec<BigRational>], b: &[BigRational], x: &[BigRational]) {
        for (row, bi) in a.iter().zip(b) {
            let s: BigRational = row.iter().zip(x).map(|(p, q)| p * q).sum();
            assert_eq!(&s, bi);
        }
        assert!(x.iter().all(|v| !v.is_negative()));
    }

    #[test]
    fn finds_convex_combination() {
        // (1,1) = 1/2 (2,0) + 1/2 (0,2)
        let a = vec![vec![q(2), q(0)], vec![q(0), q(2)], vec![q(1), q(1)]];
        let b = vec![q(1), q(1), q(1)];
        let x = feasible_point(&a, &b, 2).unwrap();
        check(&a, &b, &x);
    }

    #[test]
    fn detects_infeasibility() {
        let a = vec![vec![q(1), q(1)]];
        assert!(feasible_point(&a, &[q(-1)], 2).is_none());
        let a = vec![vec![q(1), q(-1)], vec![q(1), q(1)]];
        let b = vec![q(3), q(1)];
        assert!(feasible_point(&a, &b, 2).is_none());
    }

    #[test]
    fn negative_rhs_rows() {
        let a = vec![vec![q(-1), q(2)], vec![q(1), q(0)]];
        let b = vec![q(-1), q(3)];
        let x = feasible_point(&a, &b, 2).unwrap();
        check(&a, &b, &x);
    }
}
