//! Toolkit for studying the gap between the chromatic number χ and the
//! cochromatic number ζ of dense random graphs.
//!
//! The crate bundles four layers that are useful together when working on
//! colouring problems for `G(n, 1/2)` and `G(n, m)`:
//!
//! * [`graph`] — bitset graphs, reproducible `G(n,1/2)` / `G(n,m)` samplers,
//!   and exact independent-set/clique search.
//! * [`solver`] — exact χ, size-bounded χ_t and ζ on small graphs, plus exact
//!   counts of (co)colourings realizing a given class-size profile.
//! * [`moments`] — arbitrary-precision closed forms: α₀(n), μ_t, expected
//!   (co)colouring counts, the `G(n,m)` transfer ratio and related bounds.
//! * [`opt`] — the variational approximation `L0(n,k,t)` of the log expected
//!   number of size-bounded colourings, the first-moment threshold `k_t(n)`,
//!   near-optimal integer profiles and tameness checks.
//! * [`structure`] — ordered-partition machinery: how near-maximum independent
//!   sets straddle a partition, relevant pairs, overlap classification and
//!   exhaustive tiny-scale second-moment oracles.
//!
//! Every sampler and solver is deterministic given a seed; see [`seed`] for
//! the derivation scheme. Start with the `examples/` directory: each example
//! is a small runnable tour of one capability.

pub mod graph;
pub mod moments;
pub mod num;
pub mod profile;
pub mod seed;
pub mod solver;

pub use graph::Graph;
pub use num::logreal::LogReal;
pub use num::Prec;
