//! Rejection sampling of random valid loops, for fuzzing and property tests.

use num_traits::Zero;
use rand::Rng;

use crate::analysis::VectorLoop;
use crate::lattice::LatticeVector;

/// Per-position draws before the whole loop is thrown away and redrawn.
const VERTEX_ATTEMPTS: usize = 200;

/// Uniform primitive vector with both components in `[-bound, bound]`.
pub fn random_primitive<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> LatticeVector {
    assert!(bound >= 1, "coordinate bound must be at least 1");
    loop {
        let x = rng.random_range(-bound..=bound);
        let y = rng.random_range(-bound..=bound);
        let v = LatticeVector::new(x, y);
        if v.is_primitive() {
            return v;
        }
    }
}

/// Random valid loop with `d` uniform in `[2, max_d]` and coordinates in
/// `[-bound, bound]`.
///
/// Draws vertices one at a time, rejecting non-primitive vectors and any
/// vector collinear with its predecessor (or, for the last position, with
/// the first vertex). If a position exhausts its attempt budget the whole
/// loop is redrawn.
pub fn random_loop<R: Rng + ?Sized>(rng: &mut R, max_d: usize, bound: i64) -> VectorLoop {
    assert!(max_d >= 2, "max_d must be at least 2");
    'redraw: loop {
        let d = rng.random_range(2..=max_d);
        let mut vs: Vec<LatticeVector> = Vec::with_capacity(d);
        while vs.len() < d {
            let mut placed = false;
            for _ in 0..VERTEX_ATTEMPTS {
                let v = random_primitive(rng, bound);
                let fits_prev = vs.last().is_none_or(|p| !p.det(&v).is_zero());
                let last_position = vs.len() + 1 == d;
                let fits_wrap = !last_position || !v.det(&vs[0]).is_zero();
                if fits_prev && fits_wrap {
                    vs.push(v);
                    placed = true;
                    break;
                }
            }
            if !placed {
                continue 'redraw;
            }
        }
        return VectorLoop::new(vs).expect("sampled loop satisfies the loop invariants");
    }
}
