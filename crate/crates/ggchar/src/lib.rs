//! An exact symbolic engine for the plethysm image of induced Gelfand-Graev
//! characters of `GL_n(F_q)`.
//!
//! The central objects are the symmetric functions `rho_n`, the plethysm
//! images of the characteristics of the linear characters induced from the
//! unipotent upper-triangular group `U_n(F_q)` up to `GL_n(F_q)`. They turn
//! out to be multiples of one-row twisted Hall-Littlewood polynomials,
//! `rho_n = q^{n-1}(q-1) P~_n(Y;q)`, and the crate computes them by four
//! independent routes that must agree coefficient-for-coefficient:
//!
//! - a convolution recurrence ([`gelfand_graev::rho`]),
//! - the Hall-Littlewood generating function ([`gelfand_graev::rho_via_hl`]),
//! - monomial specialization at `p_k = q^k - 1` ([`gelfand_graev::rho_via_m`]),
//! - enumeration of orbit families with symbolic irreducible-polynomial
//!   counts ([`gelfand_graev::rho_via_theta`]).
//!
//! Everything is computed exactly over Laurent polynomials in `q` with
//! arbitrary-precision rational coefficients ([`ring::LaurentPoly`]); there
//! is no floating point anywhere.
//!
//! Supporting layers:
//!
//! - [`partition`] — integer partitions and their statistics;
//! - [`symfunc`] — the five classical bases with conversions through the
//!   power-sum hub, the omega involution, the Hall scalar product, plethysm
//!   by power sums, and power-sum specialization;
//! - [`hall_littlewood`] — one-row `q_r(Y;t)`, `P_n(Y;t)` and the twisted
//!   form at `t = q^{-1}`;
//! - [`gelfand_graev`] — the four `rho` routes, coefficient recurrences and
//!   sign law, generating-function identity checks, component products, and
//!   expansion in the `{rho_lambda}` basis at numeric `q`;
//! - [`render`] — deterministic structured output and expression-file
//!   parsing for the command-line tool.
//!
//! The `examples/` directory exercises each capability; the thin `ggchar`
//! binary exposes the same operations for scripting.

pub mod gelfand_graev;
pub mod hall_littlewood;
pub mod partition;
pub mod render;
pub mod ring;
pub mod symfunc;

pub use gelfand_graev::{
    count_irreducible, count_irreducible_nonzero_root, omega_rho, product_rho, rho, rho_coeff,
    rho_combination, rho_via_hl, rho_via_m, rho_via_theta, to_rho_basis, verify_convolution,
    verify_four_way, verify_moebius_product, verify_sign_law, verify_suite, GgError, IdentityCheck,
    RhoExpansion,
};
pub use hall_littlewood::{hl_one_row, qr_symfunc, twisted_hl_one_row, HLParam};
pub use partition::{partitions_of, Partition};
pub use ring::{LaurentPoly, Rat, RingError};
pub use symfunc::{BasisTag, SymFunc, SymFuncError};
