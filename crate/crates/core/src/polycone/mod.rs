//! Rational polyhedral cones, fans, Newton polyhedra and piecewise linear functions.

mod cone;
pub mod dd;
mod fan;
pub mod lp;
mod newton;
mod plf;

pub use cone::{face_semigroup_cone, Cone};
pub use fan::{fan_intersection, Fan};
pub use newton::{newton_polyhedron, NewtonPolyhedron, NonVertexCertificate};
pub use plf::{PlFunction, PlValue};

/// Alias matching the usual name of the dual operation.
pub fn dual_cone(c: &Cone) -> Cone {
    c.dual()
}

/// Free function form of [`Cone::faces`].
pub fn faces_of(c: &Cone) -> crate::error::Result<alloc::vec::Vec<Cone>> {
    c.faces()
}

pub fn normal_fan(p: &NewtonPolyhedron) -> crate::error::Result<Fan> {
    p.normal_fan()
}

pub fn support_function(p: &NewtonPolyhedron) -> crate::error::Result<PlFunction> {
    p.support_function()
}

pub fn relative_interior_membership(c: &Cone, v: &crate::intlat::LatticeVector) -> bool {
    c.relative_interior_contains(v)
}
