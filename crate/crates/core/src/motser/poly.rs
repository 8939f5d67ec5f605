//! Integer polynomials in `T` whose coefficients are Laurent polynomials in `L`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Stored by `T`-degree: `layers[t]` maps `L`-exponents to coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    layers: Vec<BTreeMap<i64, BigInt>>,
}

fn add_into(layer: &mut BTreeMap<i64, BigInt>, l: i64, c: BigInt) {
    if c.is_zero() {
        return;
    }
    use alloc::collections::btree_map::Entry;
    match layer.entry(l) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::monomial(BigInt::one(), 0, 0)
    }

    /// `c · L^l · T^t`.
    pub fn monomial(c: BigInt, l: i64, t: u32) -> Poly {
        let mut p = Poly::zero();
        p.add_term(l, t, c);
        p
    }

    /// `1 − L^a T^b`.
    pub fn factor(a: i64, b: u32) -> Poly {
        let mut p = Poly::one();
        p.add_term(a, b, -BigInt::one());
        p
    }

    /// `(L − 1)^k`.
    pub fn l_minus_one_pow(k: usize) -> Poly {
        let base = {
            let mut p = Poly::monomial(BigInt::one(), 1, 0);
            p.add_term(0, 0, -BigInt::one());
            p
        };
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = acc.mul(&base);
        }
        acc
    }

    fn trim(&mut self) {
        while self.layers.last().is_some_and(BTreeMap::is_empty) {
            self.layers.pop();
        }
    }

    pub fn add_term(&mut self, l: i64, t: u32, c: BigInt) {
        let t = t as usize;
        if self.layers.len() <= t {
            self.layers.resize_with(t + 1, BTreeMap::new);
        }
        add_into(&mut self.layers[t], l, c);
        self.trim();
    }

    pub fn is_zero(&self) -> bool {
        self.layers.is_empty()
    }

    /// Highest power of `T`, `None` for the zero polynomial.
    pub fn t_degree(&self) -> Option<u32> {
        self.layers.len().checked_sub(1).map(|t| t as u32)
    }

    pub fn layer(&self, t: u32) -> Option<&BTreeMap<i64, BigInt>> {
        self.layers.get(t as usize)
    }

    pub fn coefficient(&self, l: i64, t: u32) -> BigInt {
        self.layer(t).and_then(|m| m.get(&l)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms as `(L-exponent, T-exponent, coefficient)`, ordered by `T` then `L`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, u32, &BigInt)> + '_ {
        self.layers
            .iter()
            .enumerate()
            .flat_map(|(t, m)| m.iter().map(move |(l, c)| (*l, t as u32, c)))
    }

    pub fn len(&self) -> usize {
        self.layers.iter().map(BTreeMap::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Poly) {
        if self.layers.len() < other.layers.len() {
            self.layers.resize_with(other.layers.len(), BTreeMap::new);
        }
        for (t, m) in other.layers.iter().enumerate() {
            for (l, c) in m {
                add_into(&mut self.layers[t], *l, c.clone());
            }
        }
        self.trim();
    }

    pub fn neg(&self) -> Poly {
        self.scale(&-BigInt::one())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &BigInt) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly { layers: self.layers.iter().map(|m| m.iter().map(|(l, c)| (*l, c * k)).collect()).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.mul_truncated(other, u32::MAX)
    }

    /// Product keeping only powers `T^t` with `t ≤ max_t`.
    pub fn mul_truncated(&self, other: &Poly, max_t: u32) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let len = (self.layers.len() + other.layers.len() - 1).min(max_t as usize + 1);
        let mut layers: Vec<BTreeMap<i64, BigInt>> = alloc::vec![BTreeMap::new(); len];
        for (t1, m1) in self.layers.iter().enumerate() {
            if m1.is_empty() {
                continue;
            }
            for (t2, m2) in other.layers.iter().enumerate() {
                if t1 + t2 >= len {
                    break;
                }
                for (l1, c1) in m1 {
                    for (l2, c2) in m2 {
                        add_into(&mut layers[t1 + t2], l1 + l2, c1 * c2);
                    }
                }
            }
        }
        let mut p = Poly { layers };
        p.trim();
        p
    }

    /// `self · (1 − L^a T^b)`.
    pub fn mul_factor(&self, a: i64, b: u32) -> Poly {
        let mut out = self.clone();
        for (t, m) in self.layers.iter().enumerate() {
            for (l, c) in m {
                out.add_term(l + a, t as u32 + b, -c.clone());
            }
        }
        out
    }

    /// Drops all terms with `T`-degree above `max_t`.
    pub fn truncate(&self, max_t: u32) -> Poly {
        let mut p = self.clone();
        p.layers.truncate(max_t as usize + 1);
        p.trim();
        p
    }

    /// `self / (1 − L^a T^b)` if the division is exact.
    pub fn div_factor(&self, a: i64, b: u32) -> Option<Poly> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let b = b as usize;
        assert!(b > 0, "factor must involve T");
        let top = self.layers.len() - 1;
        if top < b {
            return None;
        }
        // Q_t = N_t + L^a Q_{t-b}; exact iff Q vanishes above top - b.
        let mut q: Vec<BTreeMap<i64, BigInt>> = Vec::with_capacity(top + 1);
        for t in 0..=top {
            let mut layer = self.layers[t].clone();
            if t >= b {
                for (l, c) in &q[t - b] {
                    add_into(&mut layer, l + a, c.clone());
                }
            }
            if t > top - b && !layer.is_empty() {
                return None;
            }
            q.push(layer);
        }
        let mut p = Poly { layers: q };
        p.trim();
        Some(p)
    }

    /// Gcd of the coefficients, with the sign of the leading one.
    pub fn content(&self) -> BigInt {
        let g = self.terms().fold(BigInt::zero(), |g, (_, _, c)| g.gcd(c));
        match self.terms().last() {
            Some((_, _, c)) if c.is_negative() => -g,
            _ => g,
        }
    }

    pub fn div_scalar(&self, k: &BigInt) -> Poly {
        Poly { layers: self.layers.iter().map(|m| m.iter().map(|(l, c)| (*l, c / k)).collect()).collect() }
    }

    /// Substitutes `L = 1`, giving a polynomial in `T`.
    pub fn at_l_one(&self) -> Vec<BigInt> {
        self.layers.iter().map(|m| m.values().sum()).collect()
    }

    /// Smallest `L`-exponent present.
    pub fn min_l(&self) -> Option<i64> {
        self.layers.iter().filter_map(|m| m.keys().next().copied()).min()
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, l: i64, t: u32) -> fmt::Result {
    let mut parts = Vec::new();
    match l {
        0 => {}
        1 => parts.push(alloc::string::String::from("L")),
        _ => parts.push(alloc::format!("L^{}", l)),
    }
    match t {
        0 => {}
        1 => parts.push(alloc::string::String::from("T")),
        _ => parts.push(alloc::format!("T^{}", t)),
    }
    write!(f, "{}", parts.join("*"))
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (l, t, c)) in self.terms().enumerate() {
            let unit = l == 0 && t == 0;
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            if !mag.is_one() || unit {
                write!(f, "{}", mag)?;
                if !unit {
                    write!(f, "*")?;
                }
            }
            if !unit {
                write_monomial(f, l, t)?;
            }
        }
        Ok(())
    }
}
