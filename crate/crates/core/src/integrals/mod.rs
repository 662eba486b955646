//! Elliptic hypergeometric integrals and the identities they satisfy.

mod ehi;
mod identities;
mod psi;
mod quadrature;

pub use ehi::{check_admissible, cross_theta, elliptic_integral, elliptic_integral_n, integrand_h, kappa_factor, IntegrandContext};
pub use identities::{
    bailey_residual, contiguity_residual, contiguity_terms, contiguity_terms_additive, in_transform_residual,
    terminating_eval, terminating_sample, BaileyKind, TerminatingComparison, Termination,
};
pub use psi::{
    admissible_representative, balanced_integral, block_masks, block_reflect, check_balanced, hat, level, max_modulus,
    pair_triple_gamma, psi_n, Point,
};
pub use quadrature::{converge, converge_1d, half_circle, symmetric_mean, QuadConfig};
