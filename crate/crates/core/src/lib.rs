//! Exact symbolic engine for motivic DT/PT generating series.
//!
//! The crate is organized along the pipeline:
//!
//! - [`motive`]: the coefficient field — canonical fractions of Laurent
//!   polynomials in `u = -L^{1/2}` and Adams atoms, with `psi^k` and the
//!   Euler-characteristic specialization;
//! - [`qseries`]: truncated power series in `q` over that field, with
//!   ordinary `exp`/`log` and the plethystic `Exp`/`Log` computed through
//!   the Adams-series bridge;
//! - [`torus`]: the completed twisted algebra on the grading lattice, with
//!   the `*`-product, Poisson brackets, and exponential-adjoint actions;
//! - [`dtpt`]: the end-to-end computations — the degree-0 series, the
//!   `N_n` invariants by two independent routes, Euler specialization, and
//!   the wall-crossing factorization replay;
//! - [`check`]: seeded property suites shared by the CLI and the tests.

pub mod check;
pub mod dtpt;
pub mod motive;
pub mod qseries;
pub mod torus;
