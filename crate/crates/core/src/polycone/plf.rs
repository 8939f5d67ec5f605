//! Piecewise linear functions on fans.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;

use super::fan::{fan_intersection, Fan};
use crate::error::{Error, Result};
use crate::intlat::LatticeVector;

/// A value of a piecewise linear function, allowing the `+∞` convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlValue {
    Finite(BigInt),
    Infinite,
}

impl PlValue {
    pub fn finite(&self) -> Option<&BigInt> {
        match self {
            PlValue::Finite(v) => Some(v),
            PlValue::Infinite => None,
        }
    }
}

impl PartialOrd for PlValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PlValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (PlValue::Finite(a), PlValue::Finite(b)) => a.cmp(b),
            (PlValue::Finite(_), PlValue::Infinite) => Ordering::Less,
            (PlValue::Infinite, PlValue::Finite(_)) => Ordering::Greater,
            (PlValue::Infinite, PlValue::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for PlValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlValue::Finite(v) => write!(f, "{}", v),
            PlValue::Infinite => write!(f, "inf"),
        }
    }
}

/// One integer linear functional per maximal cone of a fan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlFunction {
    fan: Fan,
    functionals: Vec<LatticeVector>,
}

impl PlFunction {
    /// Checks that neighbouring functionals agree on every shared ray.
    pub fn new(fan: Fan, functionals: Vec<LatticeVector>) -> Result<PlFunction> {
        if functionals.len() != fan.maximal_cones().len() {
            return Err(Error::Internal("one functional per maximal cone required".into()));
        }
        for ray in fan.rays() {
            let mut values = fan
                .maximal_cones()
                .iter()
                .zip(&functionals)
                .filter(|(c, _)| c.contains(&ray))
                .map(|(_, f)| f.dot(&ray));
            if let Some(first) = values.next() {
                if values.any(|v| v != first) {
                    return Err(Error::Internal("functionals disagree on a shared ray".into()));
                }
            }
        }
        Ok(PlFunction { fan, functionals })
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn functionals(&self) -> &[LatticeVector] {
        &self.functionals
    }

    /// The functional of a maximal cone containing `v`.
    pub fn functional_at(&self, v: &LatticeVector) -> Option<&LatticeVector> {
        self.fan.locate_maximal(v).map(|i| &self.functionals[i])
    }

    pub fn evaluate(&self, v: &LatticeVector) -> Option<BigInt> {
        self.functional_at(v).map(|f| f.dot(v))
    }

    /// `self − other` on the common refinement of both fans.
    pub fn difference(&self, other: &PlFunction) -> Result<PlFunction> {
        let fan = fan_intersection(&[self.fan.clone(), other.fan.clone()])?;
        let functionals = fan
            .maximal_cones()
            .iter()
            .map(|c| {
                let s = c.interior_sample();
                let a = self.functional_at(&s).expect("sample in support");
                let b = other.functional_at(&s).expect("sample in support");
                a.sub(b)
            })
            .collect();
        PlFunction::new(fan, functionals)
    }
}
