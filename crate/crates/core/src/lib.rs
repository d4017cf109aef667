//! Exact computation of the invariants of noncommutative solenoids.
//!
//! A noncommutative solenoid is the twisted group C*-algebra of
//! `Z[1/p] x Z[1/p]` (the square of the group of rationals with
//! denominator a power of a prime `p`), twisted by a multiplier.  Up to
//! cohomology every such multiplier is determined by a sequence
//! `alpha = (alpha_n)` with `alpha_0 in [0,1)` and
//! `p*alpha_{n+1} = alpha_n + digit`, with digits in `{0,..,p-1}` — the
//! same data as a point of the `p`-solenoid.  This crate works with
//! those sequences exactly and derives the operator-algebraic
//! invariants that only depend on them:
//!
//! * simplicity, symmetrizer groups, and uniqueness of the trace
//!   ([`solenoid`]);
//! * `K_0` as an extension of `Z[1/p]` by `Z`, the trace on it and its
//!   range ([`ktheory`]);
//! * classification up to *-isomorphism by tail comparison
//!   ([`classify`]);
//! * Heisenberg-lattice data on `Q_p x R` producing Morita partners
//!   ([`morita`]).
//!
//! Everything is exact: rationals are arbitrary precision, circle
//! values are kept additively modulo one, `p`-adic numbers are stored
//! as eventually periodic digit words (exactly the rational elements of
//! `Q_p`), and a single opaque irrational symbol is carried through all
//! arithmetic.  No floating point enters any computation; decimal
//! output is display-only.

pub mod classify;
pub mod error;
pub mod exact;
pub mod ktheory;
pub mod morita;
pub mod sampling;
pub mod solenoid;
pub mod xi;

pub use classify::{isomorphic, IsoVerdict};
pub use error::Error;
pub use exact::{
    frac_p, padic_invert, padic_norm, DigitWord, ExactReal, PadicInt, PadicNumber, PadicRational,
    Phase, Symbol,
};
pub use ktheory::{
    k0_add, k0_neg, k0_trace, k1_descriptor, schur_cohomologous, trace_range, xi_j, K0Element,
    K1Descriptor, TraceRange,
};
pub use morita::{
    eta, induced_alpha, iota, perp, perp_beta, perp_element, rho, trace_scaling_check, winding_pi,
    LatticeSpec, MPoint, PerpSpec, ScalingReport,
};
pub use solenoid::{
    dual_action, is_simple, limit_stage, pair, projective_module, psi, symmetrizer, trace_count,
    ModuleDescriptor, SolenoidPoint, StageDescriptor, Symmetrizer, TraceCount,
};
pub use xi::{Periodicity, TailRule, XiSequence};

/// A convenient result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
