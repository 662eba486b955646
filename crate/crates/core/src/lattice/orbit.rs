//! Orbits of the finite Weyl groups, by breadth-first search over simple reflections.

use std::collections::{HashSet, VecDeque};
use std::hash::Hash;

use super::frames::Frame;
use super::roots::{reflect, simple_roots, WeylGroup};
use super::vector::LatticeVector;

/// Objects the simple reflections act on.
pub trait Reflectable: Clone + Eq + Hash {
    fn reflected(&self, alpha: &LatticeVector) -> Self;
}

impl Reflectable for LatticeVector {
    fn reflected(&self, alpha: &LatticeVector) -> Self {
        reflect(alpha, self).expect("simple roots act on the half lattice")
    }
}

impl Reflectable for Frame {
    fn reflected(&self, alpha: &LatticeVector) -> Self {
        self.reflect(alpha)
    }
}

pub fn weyl_orbit<X: Reflectable>(seed: &X, group: WeylGroup) -> HashSet<X> {
    let roots = simple_roots();
    let gens = &roots[..group.rank()];
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(seed.clone());
    queue.push_back(seed.clone());
    while let Some(x) = queue.pop_front() {
        for alpha in gens {
            let y = x.reflected(alpha);
            if !seen.contains(&y) {
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{enumerate_frames, enumerate_norm, named};

    #[test]
    fn e7_orbits_on_norm_four() {
        let mut covered = HashSet::new();
        let expected = [126, 576, 756, 576, 126];
        for ((level, rep), size) in named::e7_orbit_representatives().into_iter().zip(expected) {
            assert_eq!(rep.norm16(), 64);
            assert_eq!(rep.phi8(), 8 * level);
            let orbit = weyl_orbit(&rep, WeylGroup::E7);
            assert_eq!(orbit.len(), size);
            covered.extend(orbit);
        }
        assert_eq!(covered.len(), 2160);
    }

    #[test]
    fn e8_acts_transitively_on_roots() {
        let orbit = weyl_orbit(&LatticeVector::phi(), WeylGroup::E8);
        let roots: HashSet<_> = enumerate_norm(2).unwrap().into_iter().collect();
        assert_eq!(orbit, roots);
    }

    #[test]
    fn e7_orbit_of_a0_is_the_type_i_frames() {
        assert_eq!(weyl_orbit(&named::frame_a0(), WeylGroup::E7).len(), 72);
        assert_eq!(weyl_orbit(&named::frame_a2(), WeylGroup::E7).len(), 63);
    }

    #[test]
    fn e8_acts_transitively_on_c3_frames() {
        let orbit = weyl_orbit(&named::recursion_frame(), WeylGroup::E8);
        assert_eq!(orbit.len(), 7560);
        let all: HashSet<_> = enumerate_frames(3).unwrap().into_iter().collect();
        assert_eq!(orbit, all);
    }
}
