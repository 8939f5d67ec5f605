//! Error type shared by the whole crate.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::intlat::LatticeVector;

/// Why a generator list does not define a valid semigroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemigroupError {
    /// The lattice rank is zero or no generators were given.
    Empty,
    /// A generator has the wrong number of coordinates.
    DimensionMismatch { index: usize, expected: usize, found: usize },
    ZeroGenerator { index: usize },
    DuplicateGenerator { first: usize, second: usize },
    /// The generators span a space of dimension `rank < d`.
    NotFullDimensional { rank: usize },
    /// The cone spanned by the generators contains a line.
    NotStrictlyConvex,
    /// The generators span a proper sublattice of `Z^d` of the given index.
    LatticeNotGenerated { index: BigInt },
    /// Generator `index` equals the given nonnegative combination of the others.
    NotMinimal { index: usize, decomposition: Vec<(usize, u64)> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    EmptyInput(&'static str),
    OutOfRange { what: &'static str, value: usize, min: usize, max: usize },
    /// Rows were required to be linearly independent.
    DependentRows,
    /// A cone given by inequalities contains a line where a pointed cone was needed.
    NotPointed,
    NotAFace,
    SupportMismatch,
    InvalidSemigroup(SemigroupError),
    /// A normal-case operation was requested without asserting saturation.
    NotSaturated,
    /// Reconstruction left nonzero coefficients in the guard region.
    Certification { level: usize, rays: Vec<LatticeVector>, order: u32 },
    /// A curve semigroup that is not a strictly increasing list with gcd 1.
    InvalidCurve(&'static str),
    Internal(String),
}

impl From<SemigroupError> for Error {
    fn from(e: SemigroupError) -> Self {
        Error::InvalidSemigroup(e)
    }
}

impl fmt::Display for SemigroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemigroupError::Empty => write!(f, "no generators or zero lattice rank"),
            SemigroupError::DimensionMismatch { index, expected, found } => write!(
                f,
                "generator {} has {} coordinates, expected {}",
                index + 1,
                found,
                expected
            ),
            SemigroupError::ZeroGenerator { index } => write!(f, "generator {} is zero", index + 1),
            SemigroupError::DuplicateGenerator { first, second } => {
                write!(f, "generators {} and {} coincide", first + 1, second + 1)
            }
            SemigroupError::NotFullDimensional { rank } => {
                write!(f, "generators span a subspace of dimension {}", rank)
            }
            SemigroupError::NotStrictlyConvex => write!(f, "generated cone contains a line"),
            SemigroupError::LatticeNotGenerated { index } => {
                write!(f, "generators span a sublattice of index {}", index)
            }
            SemigroupError::NotMinimal { index, decomposition } => {
                write!(f, "generator {} is decomposable:", index + 1)?;
                let mut first = true;
                for (k, c) in decomposition {
                    if *c == 0 {
                        continue;
                    }
                    write!(f, "{} {}*e{}", if first { "" } else { " +" }, c, k + 1)?;
                    first = false;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyInput(what) => write!(f, "empty input: {}", what),
            Error::OutOfRange { what, value, min, max } => {
                write!(f, "{} = {} outside {}..={}", what, value, min, max)
            }
            Error::DependentRows => write!(f, "rows are linearly dependent"),
            Error::NotPointed => write!(f, "cone is not pointed"),
            Error::NotAFace => write!(f, "cone is not a face"),
            Error::SupportMismatch => write!(f, "fans have different supports"),
            Error::InvalidSemigroup(e) => write!(f, "invalid semigroup: {}", e),
            Error::NotSaturated => write!(f, "operation requires a saturated semigroup"),
            Error::Certification { level, rays, order } => {
                write!(f, "reconstruction guard failed at T^{} for stratum j={} rays [", order, level)?;
                for (i, r) in rays.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{}", r)?;
                }
                write!(f, "]")
            }
            Error::InvalidCurve(why) => write!(f, "invalid curve semigroup: {}", why),
            Error::Internal(msg) => write!(f, "internal error: {}", msg),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
