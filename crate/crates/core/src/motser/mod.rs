//! The series engine.

mod assemble;
mod classes;
mod curve;
mod nicaise;
mod oracle;
mod poly;
mod rational;

pub use assemble::{
    aux_series, global_normal_poles, local_series, normal_poles, par_aux, par_global_normal, par_local, par_normal,
    pgeom_local, series_difference, sum_rationals, AuxSeries, FaceSeries, LocalSeries, SeriesConfig, StratumSeries,
};
pub use classes::{class_monomials, class_polynomial, stratum_series};
pub use poly::Poly;
pub use rational::{Denominator, MotivicRational, SeriesExpansion};
pub use curve::{curve_closed_form, curve_gcds};
pub use nicaise::{check_nicaise, NicaiseVerdict, VertexWitness};
pub use oracle::oracle_series;
