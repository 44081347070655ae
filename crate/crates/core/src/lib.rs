//! Spectrum of a planar (2+1-dimensional) Dirac electron bound in a Coulomb
//! field and a uniform perpendicular magnetic field.
//!
//! For a denumerable set of field strengths the coupled radial system admits
//! solutions whose series parts terminate, so part of the spectrum — the
//! quasi-exactly-solvable (QES) part — comes out in closed or algebraic form.
//! This crate builds those solutions and checks every one of them against an
//! independent ODE shooting oracle:
//!
//! * [`recursion`] — series coefficients of the radial ansatz from the exact
//!   recursion relations,
//! * [`solver`] — the (E, a) pairs that terminate the series, via closed
//!   forms for low termination index and a bracketing scan in general,
//! * [`wavefunction`] — radial profiles, norms and node counts,
//! * [`oracle`] — two-sided shooting verification of every reported level,
//! * [`semiclassical`] — the zero-field spectrum and weak-field (WKB) limits,
//! * [`bethe`] — the nonrelativistic problem via factorization and Bethe
//!   ansatz equations.
//!
//! Units: ħ = c = 1, energies in units of the electron mass `m` (default
//! m = 1). The magnetic field enters only through `a = eB/2`.

pub mod bethe;
pub mod error;
pub mod oracle;
pub mod params;
pub mod polyroot;
pub mod recursion;
pub mod semiclassical;
pub mod solver;
pub mod wavefunction;

pub use error::{QesError, Result};
pub use params::{Gamma, Params};
pub use recursion::CoefficientTable;
pub use solver::{Branch, QesLevel, ScanConfig};
