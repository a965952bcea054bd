//! Exact computational obstructions to spectrality and translational
//! tiling for measurable sets.
//!
//! The crate decides, in exact rational arithmetic wherever the
//! underlying question is exact:
//!
//! - essential difference sets and packing-region obstructions for
//!   finite unions of boxes ([`setalg`]);
//! - symmetric Cantor constructions, their difference sets, and the
//!   quantitative overlap bounds that rule out weak tilings ([`cantor`]);
//! - central-symmetry, facet and belt criteria deciding translational
//!   tiling (hence spectrality) of convex polytopes ([`convex`]);
//! - weak-tiling verification on grids, product composition of tiling
//!   measures, and LP feasibility with replayable Farkas certificates
//!   ([`weaktile`]);
//! - closed-form Fourier transforms of box indicators and the
//!   Fejér-kernel witness functions behind the frequency-side
//!   obstruction ([`witness`], floating point, tolerances reported).

pub mod cantor;
pub mod rational;
pub mod setalg;

pub use rational::{format_rational, parse_rational, Rational};
pub use setalg::{AxisBox, BoxSet, SetAlgError, Verdict, VerdictTag};
