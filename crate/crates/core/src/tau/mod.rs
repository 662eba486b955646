//! Tau functions of the bilinear lattice system: evaluators, transformations,
//! the residual of the bilinear equations, and the hypergeometric solution.

pub mod function;
pub mod hirota;
pub mod hypergeometric;

pub use function::{inner, quad_form, CanonicalTau, Domain, ExpGauge, FnTau, PeriodTranslated, Tau, WeylTransformed};
pub use hirota::{check_generic, generic_point, GENERIC_ATTEMPTS, hirota_residual, hirota_residual_split, hirota_terms, min_coefficient};
pub use hypergeometric::{
    build_chain, hg_tau0, pair_gamma_f, hg_tau1, hypergeometric_chain, level_point, toda_step, toda_step_explicit, TauChain, DEFAULT_N_MAX,
    N_MAX_CAP,
};
pub mod casorati;
pub use casorati::{
    casorati_k, casorati_recurrence_residual, dfactor_d, gauge_g, gauge_ratio_residual, gauge_recurrence_residual, tau_n_det,
    tau_n_int, theta_det_residual, Case, Route,
};
pub mod variants;
pub use variants::{psi_variant, Variant, VariantTau};
