//! Numerical Maslov-type index theory for symplectic paths with Lagrangian
//! boundary conditions.
//!
//! The crate computes three flavors of integer index pairs for paths in
//! `Sp(2n)` starting at the identity:
//!
//! * the `L0`-index `(i_{L0}, nu_{L0})` relative to the Lagrangian
//!   `L0 = {0} x R^n`, by the winding of a unitary determinant trace and,
//!   independently, by a stabilized relative Morse index on a Galerkin
//!   truncation,
//! * the periodic `omega`-index `(i_omega, nu_omega)` for the boundary twist
//!   `z(1) = omega z(0)`,
//! * the twisted `(L0, omega)`-index entering the even-iteration Bott-type
//!   formula at `omega = sqrt(-1)`.
//!
//! On top of the index engines sit the brake-symmetric iteration machinery
//! (path iteration, splitting numbers, Bott-type formulas, iteration
//! inequalities with equality-case classification) and a shooting solver for
//! brake orbits of nonlinear symmetric Hamiltonian systems, including the
//! second-order Dirichlet and Neumann variants.
//!
//! All numerics are generic over the scalar through [`Real`]; the `*64`
//! aliases below pin the `f64` instantiations used by the CLI and tests.

pub mod brake;
pub mod corpus;
pub mod error;
pub mod galerkin;
pub mod iteration;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod spectrum;
pub mod sympl;
pub mod types;
pub mod winding;

pub use error::{Error, Result};
pub use scalar::Real;
pub use types::{IndexFlavor, IndexMethod, IndexPair};

/// Dense real matrix over a [`Real`] scalar.
pub type Mat<T> = nalgebra::DMatrix<T>;
/// Dense complex matrix over a [`Real`] scalar.
pub type CMat<T> = nalgebra::DMatrix<nalgebra::Complex<T>>;
/// Dense real vector.
pub type Vect<T> = nalgebra::DVector<T>;

pub type Mat64 = Mat<f64>;
pub type CMat64 = CMat<f64>;
pub type Vect64 = Vect<f64>;
pub type SymplecticPath64 = sympl::SymplecticPath<f64>;
pub type CoefficientPath64 = sympl::CoefficientPath<f64>;
pub type HamiltonianSpec64 = brake::HamiltonianSpec<f64>;
pub type BrakeOrbit64 = brake::BrakeOrbit<f64>;
