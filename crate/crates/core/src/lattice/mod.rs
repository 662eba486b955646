//! The lattice `P` of type E8 inside `V = C^8`, its roots, frames and Weyl-group orbits.
//!
//! Vectors are exact, with coordinates stored as quarter-integers.

mod frames;
pub mod named;
mod orbit;
mod roots;
mod vector;

pub use frames::{c8_frames, classify_frame, enumerate_frames, frame_containing, unit_half_vectors, Frame, FrameType};
pub use orbit::{weyl_orbit, Reflectable};
pub use roots::{bounded_search, e7_roots, enumerate_norm, reflect, reflect_point, simple_roots, WeylGroup, WeylWord};
pub use vector::{vsum, LatticeVector, Membership};
