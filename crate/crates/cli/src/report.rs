//! The report document and its conversions from library values.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use toricmot_core::motser::{NicaiseVerdict, Poly};
use toricmot_core::{Cone, LatticeVector, MotivicRational, SeriesExpansion, Stratum};

use crate::error::CliError;
use crate::input::InputSpec;

pub const TOOL_NAME: &str = "toricmot";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// A pair `(a, b)` standing for the factor `1 − L^a T^b`.
pub type Pair = (i64, u32);
/// A term `c · L^i T^j` as `(i, j, c)`, with `c` an exact rational written in decimal.
pub type Term = (i64, u32, String);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Compute,
    Strata,
    Oracle,
    CheckNicaise,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToolInfo {
    pub name: String,
    pub version: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub tool: ToolInfo,
    pub command: Command,
    pub input: InputSpec,
    pub strata: Option<Vec<StratumRow>>,
    pub invariants: Option<Invariants>,
    pub faces: Option<Vec<FaceRow>>,
    pub series: Vec<SeriesEntry>,
    pub nicaise: Option<NicaiseReport>,
    /// SHA-256 of the report serialized with this field empty.
    pub content_hash: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub nu: Vec<i64>,
    pub s: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumRow {
    pub j: usize,
    pub rays: Vec<Vec<i64>>,
    pub empty: bool,
    pub l: Option<usize>,
    pub q: Option<String>,
    pub in_d: Option<bool>,
    pub tau_rays: Option<Vec<Vec<i64>>>,
    pub poles: Vec<Pair>,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    /// `q(Λ)`.
    pub q: String,
    /// `q_Λ`, the lcm over faces; absent in global mode.
    pub q_local: Option<String>,
    /// `B_ar(Λ)`.
    pub poles: Vec<Pair>,
    /// `B_{ar,Λ}`, the union over faces.
    pub local_poles: Option<Vec<Pair>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceRow {
    pub dim: usize,
    pub rays: Vec<Vec<i64>>,
    /// Indices of the input generators orthogonal to the face.
    pub generators: Vec<usize>,
    pub basis: Vec<Vec<i64>>,
    pub q: String,
    pub poles: Vec<Pair>,
    pub arithmetic: RationalForm,
    pub geometric: RationalForm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeriesName {
    Arithmetic,
    Geometric,
    Difference,
    Normal,
    Global,
    Oracle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalForm {
    pub numerator: Vec<Term>,
    /// Factors with repetition.
    pub denominator: Vec<Pair>,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expansion {
    pub order: u32,
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesEntry {
    pub name: SeriesName,
    pub irredundant: Option<RationalForm>,
    /// The same function over every candidate pole.
    pub raw: Option<RationalForm>,
    pub expansion: Option<Expansion>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRow {
    pub l: usize,
    pub vertex: Vec<i64>,
    pub subset: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NicaiseReport {
    pub holds: bool,
    pub witnesses: Vec<VertexRow>,
    pub failure: Option<VertexRow>,
}

fn small(x: &BigInt) -> Result<i64, CliError> {
    x.to_i64().ok_or_else(|| CliError::Certification(format!("integer {x} exceeds 64 bits")))
}

pub fn vector(v: &LatticeVector) -> Result<Vec<i64>, CliError> {
    v.coords().iter().map(small).collect()
}

pub fn rays(c: &Cone) -> Result<Vec<Vec<i64>>, CliError> {
    c.rays().iter().map(vector).collect()
}

impl StratumRow {
    pub fn new(st: &Stratum) -> Result<StratumRow, CliError> {
        let data = st.data.as_ref();
        Ok(StratumRow {
            j: st.level,
            rays: rays(&st.cone)?,
            empty: data.is_none(),
            l: st.rank(),
            q: st.index().map(|q| q.to_string()),
            in_d: data.map(|d| d.in_d),
            tau_rays: data.map(|d| rays(&d.tau)).transpose()?,
            poles: data.map(|d| d.poles.edges().to_vec()).unwrap_or_default(),
            witness: data
                .map(|d| Ok::<_, CliError>(Witness { nu: vector(&d.witness.nu)?, s: small(&d.witness.s)? }))
                .transpose()?,
        })
    }
}

impl RationalForm {
    pub fn new(r: &MotivicRational) -> RationalForm {
        let numerator = r
            .numerator()
            .terms()
            .map(|(i, j, c)| (i, j, (r.scalar() * BigRational::from(c.clone())).to_string()))
            .collect();
        RationalForm { numerator, denominator: r.denominator_pairs(), text: r.to_string() }
    }

    /// Reads the form back; `None` if a coefficient does not parse.
    pub fn to_rational(&self) -> Option<MotivicRational> {
        let mut coeffs = Vec::with_capacity(self.numerator.len());
        let mut den = BigInt::one();
        for (i, j, c) in &self.numerator {
            let c: BigRational = c.parse().ok()?;
            den = num_integer::lcm(den, c.denom().clone());
            coeffs.push((*i, *j, c));
        }
        let mut p = Poly::zero();
        for (i, j, c) in coeffs {
            p.add_term(i, j, (c * BigRational::from(den.clone())).to_integer());
        }
        if self.denominator.iter().any(|&(_, b)| b == 0) {
            return None;
        }
        Some(MotivicRational::new(BigRational::new(BigInt::one(), den), p, &self.denominator))
    }
}

impl Expansion {
    pub fn new(e: &SeriesExpansion) -> Expansion {
        let mut terms = Vec::new();
        for s in 0..=e.s_max() {
            for (l, c) in e.coefficient(s) {
                if !c.is_zero() {
                    terms.push((*l, s, c.to_string()));
                }
            }
        }
        Expansion { order: e.s_max(), terms }
    }
}

fn vertex_row(l: usize, v: &LatticeVector, subset: Vec<usize>) -> Result<VertexRow, CliError> {
    Ok(VertexRow { l, vertex: vector(v)?, subset })
}

impl NicaiseReport {
    pub fn new(v: &NicaiseVerdict) -> Result<NicaiseReport, CliError> {
        Ok(match v {
            NicaiseVerdict::Holds(ws) => NicaiseReport {
                holds: true,
                witnesses: ws.iter().map(|w| vertex_row(w.l, &w.vertex, w.subset.clone())).collect::<Result<_, _>>()?,
                failure: None,
            },
            NicaiseVerdict::Fails { l, vertex } => NicaiseReport {
                holds: false,
                witnesses: Vec::new(),
                failure: Some(vertex_row(*l, vertex, Vec::new())?),
            },
        })
    }
}

impl ReportDoc {
    pub fn new(command: Command, input: InputSpec) -> ReportDoc {
        ReportDoc {
            tool: ToolInfo { name: TOOL_NAME.into(), version: TOOL_VERSION.into() },
            command,
            input,
            strata: None,
            invariants: None,
            faces: None,
            series: Vec::new(),
            nicaise: None,
            content_hash: String::new(),
        }
    }

    pub fn compute_hash(&self) -> String {
        let mut unhashed = self.clone();
        unhashed.content_hash.clear();
        let bytes = serde_json::to_vec(&unhashed).expect("report serializes");
        Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn seal(mut self) -> ReportDoc {
        self.content_hash = self.compute_hash();
        self
    }

    pub fn hash_is_valid(&self) -> bool {
        self.content_hash == self.compute_hash()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn series(&self, name: SeriesName) -> Option<&SeriesEntry> {
        self.series.iter().find(|e| e.name == name)
    }
}

/// Human-readable `Σ c L^i` for one power of `T`.
pub fn render_l_poly(terms: &[(i64, &str)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (i, c)) in terms.iter().enumerate() {
        let neg = c.starts_with('-');
        let mag = c.trim_start_matches('-');
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let unit = mag == "1";
        match (*i, unit) {
            (0, _) => out.push_str(mag),
            (1, true) => out.push('L'),
            (1, false) => out.push_str(&format!("{mag}*L")),
            (_, true) => out.push_str(&format!("L^{i}")),
            (_, false) => out.push_str(&format!("{mag}*L^{i}")),
        }
    }
    out
}
