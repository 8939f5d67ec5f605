//! The four subcommands, each producing a sealed [`ReportDoc`].

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use toricmot_core::motser::{
    check_nicaise, global_normal_poles, local_series, normal_poles, oracle_series, par_global_normal, par_normal,
};
use toricmot_core::strata::{enumerate_strata, q_lambda};
use toricmot_core::toricsg::face_semigroup;
use toricmot_core::{IdealFamily, LatticeVector, MotivicRational, SemigroupData, SeriesConfig, Stratum};

use crate::error::CliError;
use crate::input::{InputSpec, Mode, SeriesKind};
use crate::report::{
    rays, vector, Command, Expansion, FaceRow, Invariants, NicaiseReport, Pair, RationalForm, ReportDoc, SeriesEntry,
    SeriesName, StratumRow,
};

/// Builds the semigroup, checking the saturation claim when `normal` is set.
pub fn semigroup(spec: &InputSpec) -> Result<SemigroupData, CliError> {
    let gens: Vec<LatticeVector> = spec.generators.iter().map(|g| LatticeVector::from_i64(g)).collect();
    let s = SemigroupData::new(spec.lattice_rank, &gens)?;
    if spec.normal {
        if let Some(x) = s.saturation_gap() {
            return Err(CliError::Validation(format!(
                "declared normal, but {:?} lies in the cone and not in the semigroup",
                vector(&x)?
            )));
        }
    }
    Ok(s.with_saturated(spec.normal))
}

fn check_flags(command: Command, spec: &InputSpec) -> Result<(), CliError> {
    if spec.mode == Mode::Global {
        if !spec.normal {
            return Err(CliError::Usage("--mode global requires --normal".into()));
        }
        if spec.series != SeriesKind::Arithmetic {
            return Err(CliError::Usage("--mode global only provides the arithmetic series".into()));
        }
    }
    if command == Command::Oracle && spec.expand.is_none() {
        return Err(CliError::Usage("oracle requires --expand N".into()));
    }
    if spec.smax_guard == 0 {
        return Err(CliError::Usage("--guard must be positive".into()));
    }
    Ok(())
}

pub fn run(command: Command, spec: InputSpec) -> Result<ReportDoc, CliError> {
    check_flags(command, &spec)?;
    let s = semigroup(&spec)?;
    let mut doc = ReportDoc::new(command, spec);
    match command {
        Command::Compute => compute(&s, &mut doc)?,
        Command::Strata => strata(&s, &mut doc)?,
        Command::Oracle => oracle(&s, &mut doc)?,
        Command::CheckNicaise => doc.nicaise = Some(NicaiseReport::new(&check_nicaise(&s)?)?),
    }
    Ok(doc.seal())
}

fn own_strata(s: &SemigroupData) -> Result<Vec<Stratum>, CliError> {
    Ok(enumerate_strata(&IdealFamily::new(s)?)?)
}

fn d_poles(strata: &[Stratum]) -> BTreeSet<Pair> {
    strata.iter().filter(|s| s.in_d()).filter_map(|s| s.data.as_ref()).flat_map(|d| d.poles.pairs()).collect()
}

fn table(strata: &[Stratum]) -> Result<Vec<StratumRow>, CliError> {
    strata.iter().map(StratumRow::new).collect()
}

/// `q_Λ` and `B_{ar,Λ}` from the strata of every face, without series.
fn local_invariants(s: &SemigroupData) -> Result<(BigInt, BTreeSet<Pair>), CliError> {
    let mut q = BigInt::one();
    let mut poles = BTreeSet::new();
    for eta in s.faces()? {
        let face = face_semigroup(s, &eta)?;
        if face.semigroup.is_trivial() {
            poles.insert((0, 1));
            continue;
        }
        let st = own_strata(&face.semigroup)?;
        q = q.lcm(&q_lambda(&st));
        poles.extend(d_poles(&st));
    }
    Ok((q, poles))
}

fn entry(name: SeriesName, r: &MotivicRational, candidates: &BTreeSet<Pair>, expand: Option<u32>) -> SeriesEntry {
    let pairs: Vec<Pair> = candidates.iter().copied().collect();
    SeriesEntry {
        name,
        irredundant: Some(RationalForm::new(r)),
        raw: Some(RationalForm::new(&r.over(&pairs))),
        expansion: expand.map(|n| Expansion::new(&r.expand(n))),
    }
}

fn compute(s: &SemigroupData, doc: &mut ReportDoc) -> Result<(), CliError> {
    let spec = doc.input.clone();
    let cfg = SeriesConfig { guard: spec.smax_guard };
    let st = own_strata(s)?;
    doc.strata = Some(table(&st)?);
    doc.nicaise = Some(NicaiseReport::new(&check_nicaise(s)?)?);
    if spec.mode == Mode::Global {
        let global = par_global_normal(s, &cfg)?;
        doc.invariants = Some(Invariants {
            q: q_lambda(&st).to_string(),
            q_local: None,
            poles: d_poles(&st).into_iter().collect(),
            local_poles: None,
        });
        doc.series.push(entry(SeriesName::Global, &global, &global_normal_poles(s)?, spec.expand));
        return Ok(());
    }
    let local = local_series(s, &cfg)?;
    let candidates = &local.local_poles;
    doc.invariants = Some(Invariants {
        q: local.q.to_string(),
        q_local: Some(local.q_local.to_string()),
        poles: local.poles.iter().copied().collect(),
        local_poles: Some(candidates.iter().copied().collect()),
    });
    let mut faces = Vec::with_capacity(local.faces.len());
    for f in &local.faces {
        faces.push(FaceRow {
            dim: f.face.face.dim(),
            rays: rays(&f.face.face)?,
            generators: f.face.kept.clone(),
            basis: f.face.basis.iter().map(vector).collect::<Result<_, _>>()?,
            q: f.aux.q.to_string(),
            poles: f.aux.poles.iter().copied().collect(),
            arithmetic: RationalForm::new(&f.aux.arithmetic),
            geometric: RationalForm::new(&f.aux.geometric),
        });
    }
    doc.faces = Some(faces);
    let wanted: &[SeriesName] = match spec.series {
        SeriesKind::Arithmetic => &[SeriesName::Arithmetic],
        SeriesKind::Geometric => &[SeriesName::Geometric],
        SeriesKind::Both => &[SeriesName::Arithmetic, SeriesName::Geometric],
        SeriesKind::Difference => &[SeriesName::Difference],
    };
    for name in wanted {
        let r = match name {
            SeriesName::Arithmetic => &local.arithmetic,
            SeriesName::Geometric => &local.geometric,
            _ => &local.difference,
        };
        doc.series.push(entry(*name, r, candidates, spec.expand));
    }
    if spec.normal {
        let normal = par_normal(s, &cfg)?;
        if !normal.equals(&local.arithmetic) {
            return Err(CliError::Certification("normal-case series disagrees with the local series".into()));
        }
        doc.series.push(entry(SeriesName::Normal, &normal, &normal_poles(s)?, spec.expand));
    }
    Ok(())
}

fn strata(s: &SemigroupData, doc: &mut ReportDoc) -> Result<(), CliError> {
    let st = own_strata(s)?;
    let (q_local, local_poles) = local_invariants(s)?;
    doc.invariants = Some(Invariants {
        q: q_lambda(&st).to_string(),
        q_local: Some(q_local.to_string()),
        poles: d_poles(&st).into_iter().collect(),
        local_poles: Some(local_poles.into_iter().collect()),
    });
    doc.strata = Some(table(&st)?);
    Ok(())
}

fn oracle(s: &SemigroupData, doc: &mut ReportDoc) -> Result<(), CliError> {
    let n = doc.input.expand.expect("checked by check_flags");
    let e = oracle_series(s, n)?;
    doc.series.push(SeriesEntry {
        name: SeriesName::Oracle,
        irredundant: None,
        raw: None,
        expansion: Some(Expansion::new(&e)),
    });
    Ok(())
}
