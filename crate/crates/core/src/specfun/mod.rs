//! Classical special functions: Γ, Hurwitz and periodic zeta, polylogarithm,
//! Clausen pair, polygamma, Bernoulli and Apostol–Bernoulli polynomials.

mod bernoulli;
mod gamma;
mod hurwitz;
mod periodic;
mod polygamma;
mod polylog;
mod theta;

pub use bernoulli::{
    apostol_bernoulli, bernoulli_number, bernoulli_poly, bernoulli_poly_coefficients, bernoulli_table, BernoulliTable,
};
pub use gamma::gamma;
pub use hurwitz::{hurwitz_zeta, HurwitzZeta};
pub use periodic::{lerch_residual, periodic_zeta, PeriodicZeta};
pub use polygamma::{digamma, polygamma};
pub use polylog::{clausen_pair, polylog};
pub use theta::ThetaParam;

pub(crate) use gamma::pole_threshold;
