//! Rational functions `c · N(L, T) / ∏ (1 − L^a T^b)` and their expansions.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::Poly;

/// A denominator as a multiset of pairs `(a, b)`, each meaning `1 − L^a T^b`.
pub type Denominator = BTreeMap<(i64, u32), u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MotivicRational {
    scalar: BigRational,
    numerator: Poly,
    denominator: Denominator,
}

fn lcm_denominator(a: &Denominator, b: &Denominator) -> Denominator {
    let mut out = a.clone();
    for (k, m) in b {
        let e = out.entry(*k).or_insert(0);
        *e = (*e).max(*m);
    }
    out
}

/// `∏ (1 − L^a T^b)^{m}` over the factors of `full` not covered by `part`.
fn cofactor(full: &Denominator, part: &Denominator) -> Poly {
    let mut p = Poly::one();
    for ((a, b), m) in full {
        let have = part.get(&(*a, *b)).copied().unwrap_or(0);
        for _ in have..*m {
            p = p.mul_factor(*a, *b);
        }
    }
    p
}

impl MotivicRational {
    /// Builds `scalar · numerator / ∏ (1 − L^a T^b)`; every `b` must be positive.
    pub fn new(scalar: BigRational, numerator: Poly, factors: &[(i64, u32)]) -> MotivicRational {
        let mut denominator = Denominator::new();
        for &(a, b) in factors {
            assert!(b > 0, "denominator factors must involve T");
            *denominator.entry((a, b)).or_insert(0) += 1;
        }
        let mut r = MotivicRational { scalar, numerator, denominator };
        r.normalize();
        r
    }

    pub fn zero() -> MotivicRational {
        MotivicRational { scalar: BigRational::one(), numerator: Poly::zero(), denominator: Denominator::new() }
    }

    pub fn one() -> MotivicRational {
        MotivicRational::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> MotivicRational {
        MotivicRational::new(BigRational::one(), p, &[])
    }

    /// `1 / (1 − L^a T^b)`.
    pub fn geometric(a: i64, b: u32) -> MotivicRational {
        MotivicRational::new(BigRational::one(), Poly::one(), &[(a, b)])
    }

    fn normalize(&mut self) {
        if self.numerator.is_zero() || self.scalar.is_zero() {
            *self = MotivicRational {
                scalar: BigRational::one(),
                numerator: Poly::zero(),
                denominator: Denominator::new(),
            };
            return;
        }
        let g = self.numerator.content();
        if !g.is_one() {
            self.numerator = self.numerator.div_scalar(&g);
            self.scalar *= BigRational::from(g);
        }
    }

    pub fn scalar(&self) -> &BigRational {
        &self.scalar
    }

    pub fn numerator(&self) -> &Poly {
        &self.numerator
    }

    pub fn denominator(&self) -> &Denominator {
        &self.denominator
    }

    /// Denominator factors with repetition, sorted.
    pub fn denominator_pairs(&self) -> Vec<(i64, u32)> {
        self.denominator.iter().flat_map(|(k, m)| core::iter::repeat(*k).take(*m as usize)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// The numerator with the scalar folded in and a common integer denominator pulled out.
    fn integral(&self) -> (BigInt, Poly) {
        let den = self.scalar.denom().clone();
        (den, self.numerator.scale(self.scalar.numer()))
    }

    pub fn add(&self, other: &MotivicRational) -> MotivicRational {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let denominator = lcm_denominator(&self.denominator, &other.denominator);
        let (d1, n1) = self.integral();
        let (d2, n2) = other.integral();
        let common = num_integer::lcm(d1.clone(), d2.clone());
        let p1 = n1.scale(&(&common / &d1)).mul(&cofactor(&denominator, &self.denominator));
        let p2 = n2.scale(&(&common / &d2)).mul(&cofactor(&denominator, &other.denominator));
        let mut r = MotivicRational {
            scalar: BigRational::new(BigInt::one(), common),
            numerator: p1.add(&p2),
            denominator,
        };
        r.normalize();
        r
    }

    pub fn neg(&self) -> MotivicRational {
        let mut r = self.clone();
        r.scalar = -r.scalar;
        r
    }

    pub fn sub(&self, other: &MotivicRational) -> MotivicRational {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MotivicRational) -> MotivicRational {
        let mut denominator = self.denominator.clone();
        for (k, m) in &other.denominator {
            *denominator.entry(*k).or_insert(0) += m;
        }
        let mut r = MotivicRational {
            scalar: &self.scalar * &other.scalar,
            numerator: self.numerator.mul(&other.numerator),
            denominator,
        };
        r.normalize();
        r
    }

    pub fn scale(&self, k: &BigRational) -> MotivicRational {
        let mut r = self.clone();
        r.scalar *= k;
        r.normalize();
        r
    }

    pub fn mul_poly(&self, p: &Poly) -> MotivicRational {
        let mut r = self.clone();
        r.numerator = r.numerator.mul(p);
        r.normalize();
        r
    }

    /// Equality as rational functions.
    pub fn equals(&self, other: &MotivicRational) -> bool {
        self.sub(other).is_zero()
    }

    /// Removes denominator factors that divide the numerator exactly.
    pub fn cancel(&self) -> MotivicRational {
        let mut r = self.clone();
        loop {
            let mut progress = false;
            let keys: Vec<(i64, u32)> = r.denominator.keys().copied().collect();
            for (a, b) in keys {
                while r.denominator.get(&(a, b)).copied().unwrap_or(0) > 0 {
                    match r.numerator.div_factor(a, b) {
                        Some(q) => {
                            r.numerator = q;
                            let m = r.denominator.get_mut(&(a, b)).expect("factor present");
                            *m -= 1;
                            if *m == 0 {
                                r.denominator.remove(&(a, b));
                            }
                            progress = true;
                        }
                        None => break,
                    }
                }
            }
            if !progress {
                break;
            }
        }
        r.normalize();
        r
    }

    /// The same function written over the least common multiple of its
    /// denominator and `∏ (1 − L^a T^b)` over `pairs`.
    pub fn over(&self, pairs: &[(i64, u32)]) -> MotivicRational {
        let mut extra = Denominator::new();
        for &(a, b) in pairs {
            assert!(b > 0, "denominator factors must involve T");
            *extra.entry((a, b)).or_insert(0) += 1;
        }
        if self.is_zero() {
            return self.clone();
        }
        let denominator = lcm_denominator(&self.denominator, &extra);
        let numerator = self.numerator.mul(&cofactor(&denominator, &self.denominator));
        MotivicRational { scalar: self.scalar.clone(), numerator, denominator }
    }

    /// Whether the denominator divides `∏ (1 − L^a T^b)` over `pairs`.
    pub fn denominator_divides(&self, pairs: &[(i64, u32)]) -> bool {
        let mut p = Poly::one();
        for &(a, b) in pairs {
            p = p.mul_factor(a, b);
        }
        for ((a, b), m) in &self.denominator {
            for _ in 0..*m {
                match p.div_factor(*a, *b) {
                    Some(q) => p = q,
                    None => return false,
                }
            }
        }
        true
    }

    /// Power series expansion up to `T^s_max`.
    pub fn expand(&self, s_max: u32) -> SeriesExpansion {
        let mut den = Poly::one();
        for ((a, b), m) in &self.denominator {
            for _ in 0..*m {
                den = den.mul_factor(*a, *b).truncate(s_max);
            }
        }
        let num = self.numerator.truncate(s_max);
        let mut s: Vec<BTreeMap<i64, BigInt>> = Vec::with_capacity(s_max as usize + 1);
        for t in 0..=s_max {
            let mut layer: BTreeMap<i64, BigInt> = num.layer(t).cloned().unwrap_or_default();
            for k in 1..=t {
                let Some(dk) = den.layer(k) else { continue };
                let prev = &s[(t - k) as usize];
                for (l1, c1) in dk {
                    for (l2, c2) in prev {
                        let e = layer.entry(l1 + l2).or_insert_with(BigInt::zero);
                        *e -= c1 * c2;
                    }
                }
            }
            layer.retain(|_, c| !c.is_zero());
            s.push(layer);
        }
        let coeffs = s
            .into_iter()
            .map(|m| m.into_iter().map(|(l, c)| (l, BigRational::from(c) * &self.scalar)).collect())
            .collect();
        SeriesExpansion { coeffs }
    }
}

impl fmt::Display for MotivicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if !self.scalar.is_one() {
            write!(f, "({}) * ", self.scalar)?;
        }
        write!(f, "({})", self.numerator)?;
        for ((a, b), m) in &self.denominator {
            write!(f, " / (1 - ")?;
            match a {
                0 => {}
                1 => write!(f, "L*")?,
                _ => write!(f, "L^{}*", a)?,
            }
            if *b == 1 {
                write!(f, "T)")?;
            } else {
                write!(f, "T^{})", b)?;
            }
            if *m > 1 {
                write!(f, "^{}", m)?;
            }
        }
        Ok(())
    }
}

/// Truncated power series: coefficient of `T^s` is a Laurent polynomial in `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesExpansion {
    coeffs: Vec<BTreeMap<i64, BigRational>>,
}

impl SeriesExpansion {
    pub fn zero(s_max: u32) -> SeriesExpansion {
        SeriesExpansion { coeffs: alloc::vec![BTreeMap::new(); s_max as usize + 1] }
    }

    pub fn s_max(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coefficient(&self, s: u32) -> &BTreeMap<i64, BigRational> {
        &self.coeffs[s as usize]
    }

    pub fn coefficients(&self) -> &[BTreeMap<i64, BigRational>] {
        &self.coeffs
    }

    pub fn add_term(&mut self, l: i64, s: u32, c: BigRational) {
        let layer = &mut self.coeffs[s as usize];
        let e = layer.entry(l).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            layer.remove(&l);
        }
    }

    pub fn add(&self, other: &SeriesExpansion) -> SeriesExpansion {
        let mut out = self.clone();
        for (s, layer) in other.coeffs.iter().enumerate() {
            if s >= out.coeffs.len() {
                break;
            }
            for (l, c) in layer {
                out.add_term(*l, s as u32, c.clone());
            }
        }
        out
    }

    /// The coefficient of `T^s` evaluated at `L = 1`.
    pub fn at_l_one(&self, s: u32) -> BigRational {
        self.coeffs[s as usize].values().sum()
    }

    /// Whether every coefficient has nonnegative `L`-exponents only.
    pub fn is_polynomial_in_l(&self) -> bool {
        self.coeffs.iter().all(|m| m.keys().all(|l| !l.is_negative()))
    }
}

impl fmt::Display for SeriesExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (s, layer) in self.coeffs.iter().enumerate() {
            write!(f, "T^{}:", s)?;
            if layer.is_empty() {
                write!(f, " 0")?;
            }
            for (l, c) in layer {
                write!(f, " {}*L^{}", c, l)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
