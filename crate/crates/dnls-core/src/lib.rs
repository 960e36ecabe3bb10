//! Ground states of focusing discrete nonlinear Schrödinger lattices.
//!
//! The crate computes standing-wave profiles on truncated `Z^d` lattices
//! (d = 1..3) as constrained minimizers of two variational problems —
//! the Hamiltonian at fixed `l²` mass ("normalized" waves) and the
//! quadratic action at fixed `l^{2σ+2}` norm ("homogeneous" waves) — and
//! decides their spectral stability three independent ways: the full
//! linearized eigenvalue problem, the Vakhitov–Kolokolov slope
//! `∂_ω ‖φ_ω‖²`, and the stability function
//! `s(ω) = j''(ω) + j'(ω)²/(σ j(ω))` built from the constrained minimum
//! `j(ω)`.
//!
//! Module map:
//! * [`lattice`] — grids, fields, the discrete Laplacian and the
//!   functionals `P`, `V`, `H`, `J` (generic over the scalar type),
//! * [`rearrange`] — symmetric-decreasing rearrangement and the discrete
//!   Szegő inequality with brute-force oracles,
//! * [`semigroup`] — the lattice heat kernel, semigroup application, and
//!   Perron–Frobenius / positivity-improving checks,
//! * [`minimize`] — both sphere-constrained solvers, Newton refinement,
//!   and continuation in the spectral parameter,
//! * [`spectra`] — the linearized pair `L±`, Morse indices, eigenvalue
//!   spectra, and the three-way stability verdict,
//! * [`io`] — CSV / sidecar serialization for every external interface.

pub mod error;
pub mod io;
pub mod lattice;
pub mod linalg;
pub mod minimize;
pub mod rearrange;
pub mod scalar;
pub mod semigroup;
pub mod spectra;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Default floating-point type used by the solver and spectra lanes.
pub type Real = f64;
/// Lattice field over the default scalar.
pub type Field = lattice::Field<Real>;
/// Functional bundle over the default scalar.
pub type FunctionalValues = lattice::FunctionalValues<Real>;
/// Heat kernel over the default scalar.
pub type HeatKernel = semigroup::HeatKernel<Real>;
