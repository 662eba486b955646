//! Theta functions, elliptic gamma functions and the additive bracket `[.]`.

mod gamma;
mod params;
mod series;
mod theta;

pub use gamma::{elliptic_gamma, triple_gamma};
pub use params::{EllipticParams, Params, DEFAULT_TRUNC_TOL};
pub use series::{terminates_at, v12_11};
pub use theta::{bracket, bracket_pm, qpoch_inf, sine_bracket, theta, theta_poch, three_term_residual, three_term_with};
