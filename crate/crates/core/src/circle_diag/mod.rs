//! Numerical checks of the circle-method machinery: the Farey dissection,
//! the error terms `E_{h,k}` and their limits on the major arcs, the lattice
//! rewrite of `E_{h,k}` through the kernels `g_{j,k}`, and quadrature of the
//! approximated integrand over the dominant arc.

mod farey;
mod harmonic;
mod kernels;
mod lattice;
mod quadrature;
mod saddle;

pub use farey::{farey, FareyArc};
pub use harmonic::twisted_harmonic_g;
pub use kernels::{bernoulli_poly, f1, f2, g_jk, g_residue, phi};
pub use lattice::{
    lattice_check, lemma42_identity_residual, lattice_truncation, LatticeCase, LATTICE_GRID,
    LATTICE_TRUNCATION_CAP,
};
pub use quadrature::{integrate, major_arc_quadrature, ArcIntegral, MAX_SUBDIVISIONS};
pub use saddle::{
    error_term_e, saddle_deviation, log_pp_direct, loglog_slope, t_n_trace, SaddleCase,
    SaddleRow, SaddleParam, LOG_PP_TERM_CAP,
};
