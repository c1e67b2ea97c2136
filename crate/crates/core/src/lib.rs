//! Rigorous verification of the (generalized) Riemann hypothesis in bounded
//! windows, for the Riemann zeta function and a class of degree-`r`
//! `L`-functions with real coefficients.
//!
//! Everything numeric flows through [`Ball`], an interval enclosure with
//! outward rounding on top of MPFR, so every computed quantity is a
//! guaranteed two-sided bound. The verification inequalities compare a
//! certified lower bound on the contribution of known zeros (plus a
//! hypothetical counterexample's minimal contribution) against a zero-sum
//! constant computed from a truncated logarithmic derivative with an
//! explicit tail bound. A verdict is only reported as verified when the two
//! enclosures are strictly separated.
//!
//! Module map:
//!
//! * [`ball`] — real and complex interval arithmetic at arbitrary precision.
//! * [`specfun`] — digamma, trigamma, log-gamma and zeta enclosures.
//! * [`arith`] — prime sieves, Kronecker symbols, Ramanujan tau, elliptic
//!   point counts, and the coefficient providers built from them.
//! * [`lmodel`] — the analytic datum (degree, conductor, root number,
//!   spectral parameters, coefficients) of an `L`-function instance.
//! * [`logderiv`] — truncated logarithmic derivatives and the zero-sum
//!   constants they determine.
//! * [`zeros`] — zeros-list ingestion, known-zero sums, and sign-change
//!   certification for zeta.
//! * [`verify`] — threshold functions, tail bounds, verdicts, and maximal
//!   window search.

/// Re-export of the multiprecision backend, part of the public API
/// (exact rationals appear in zero-set signatures).
pub use rug;

pub mod arith;
pub mod ball;
pub mod error;
pub mod lmodel;
pub mod logderiv;
pub mod specfun;
pub mod verify;
pub mod zeros;

pub use ball::{Ball, CBall, Precision};
pub use error::{Error, Result};
pub use lmodel::LFunctionParams;
pub use verify::{Verdict, VerdictStatus};
pub use zeros::ZeroSet;
