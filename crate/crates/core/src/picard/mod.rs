//! The rank-10 lattice of signature (1, 9) carrying the affine E8 root system, and the
//! correspondence between lattice tau functions and tau functions on `V`.

pub mod bridge;
pub mod vector;

pub use bridge::{
    coords_back, coords_forward, frame_form_agreement, frame_form_terms, gamma_point, hirota39_residual, hirota39_terms,
    kac_translate_point, lattice_tau_eval, pair, project, reflect_point, Epsilon,
};
pub use vector::{from_p1p1, in_orbit_m, kac_translate, to_p1p1, P1P1Vector, PicardVector};

/// Exact lattice vectors are the only kind used here.
pub type Picard = PicardVector;
