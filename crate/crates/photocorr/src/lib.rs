//! Final-state correlation corrections to high-energy nonrelativistic
//! photoionization of atomic p states.
//!
//! The library evaluates the relative correlation factors x_{n's,np} that
//! measure how strongly each occupied or virtual s state contributes to the
//! asymptotic photoionization amplitude of an np electron, verifies the
//! closure and cancellation sum rules they obey, and turns them into
//! amplitude and cross-section correction factors for real atoms described
//! by a quantum-defect dataset.
//!
//! Modules:
//! - [`numerics`]: polygamma tail sums and adaptive quadrature.
//! - [`hydrogenic`]: Coulomb bound/continuum radial functions, s–p
//!   overlaps, and pure-Coulomb correlation factors.
//! - [`quantum_defect`]: defect extraction and the (x_d, x_c, x_ph)
//!   breakdown per atom.
//! - [`screening`]: effective-charge two-term x_ph and the η factor.
//! - [`observables`]: reduced amplitudes, cross-section corrections, the
//!   high-Q tip integral, and the ionization-excitation mechanism
//!   classifier.
//! - [`sumrules`]: numerical verification of closure and cancellation.
//! - [`atomdata`]: dataset schema, parser, and bundled atoms.
//! - [`cli`]: batch front end used by the `photocorr` binary.

pub mod atomdata;
pub mod cli;
pub mod error;
pub mod hydrogenic;
pub mod numerics;
pub mod observables;
pub mod quantum_defect;
pub mod screening;
pub mod sumrules;

pub use error::{Error, Result};

/// Energy conversion used for all file input/output.
pub const HARTREE_IN_EV: f64 = 27.211386;
