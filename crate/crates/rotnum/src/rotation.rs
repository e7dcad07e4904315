//! The rotation number three ways.
//!
//! For a unimodular loop the rotation number is
//! `(1/12) * sum_i (3*eps_i + a_i)` ([`hm_rotation`]). For a general loop it
//! is
//!
//! ```text
//! (1/12) * sum_i [ (3*(l_i + 1) - sum_j n_ij) * eps_i/|eps_i|
//!                  + a_i - (x_i + y_i)/eps_i ]
//! ```
//!
//! ([`rotation_formula`]), where `x_i`, `y_i` and the expansion terms `n_ij`
//! come from [`crate::analysis::analyze_loop`]. Both are cross-checked
//! against an integer-only crossing count ([`winding_number_exact`]) and a
//! floating-point angle sum ([`winding_number_float`]).

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::analysis::{analyze_loop, VectorLoop};
use crate::arith::Int;
use crate::rat::Rat;
use crate::refine::refine_loop;
use crate::Error;

/// Largest admissible distance between the float winding sum and the nearest
/// integer; generous for coordinates up to 1e3 and loops up to 1e3 edges.
pub const FLOAT_WINDING_TOLERANCE: f64 = 1e-6;

/// Rotation number of a unimodular loop, `(1/12) * sum (3*eps_i + a_i)`.
///
/// Rejects loops with any `|eps_i| != 1`. The result is always an integer;
/// a non-integral sum panics because it signals a bug.
pub fn hm_rotation(vl: &VectorLoop) -> Result<Rat, Error> {
    let vs = vl.vertices();
    let d = vl.d();
    for k in 0..d {
        if !vl.epsilon(k).abs().is_one() {
            return Err(Error::NotUnimodularLoop { edge: k + 1 });
        }
    }
    let mut sum = Rat::zero();
    for k in 0..d {
        let prev = &vs[(k + d - 1) % d];
        let cur = &vs[k];
        let next = &vs[(k + 1) % d];
        let eps = cur.det(next);
        let eps_prev = prev.det(cur);
        let a = Rat::new(next.det(prev), eps_prev * &eps);
        sum = &sum + &(&Rat::from(eps * 3) + &a);
    }
    let rot = &sum / &Rat::from(12);
    assert!(rot.is_integer(), "unimodular rotation sum not divisible by 12");
    Ok(rot)
}

/// The rotation number of one loop computed along every route, with the
/// grouped partial sums of the general formula.
#[derive(Clone, Debug, PartialEq)]
pub struct RotationReport {
    /// Value of the general formula; an integer for every valid loop.
    pub formula: Rat,
    /// [`hm_rotation`] applied to the unimodular refinement.
    pub hm_on_refined: Rat,
    /// Exact crossing-count winding number.
    pub winding: Int,
    /// `sum_i (3*(l_i + 1) - sum_j n_ij) * eps_i/|eps_i|`.
    pub signed_term_sum: Int,
    /// `sum_i a_i`.
    pub a_sum: Rat,
    /// `sum_i (x_i + y_i)/eps_i`.
    pub xy_sum: Rat,
}

impl RotationReport {
    /// True iff all three routes agree on a single integer.
    pub fn is_consistent(&self) -> bool {
        self.formula == self.hm_on_refined && self.formula == Rat::from(self.winding.clone())
    }

    /// The common value as an integer. Panics on an inconsistent report,
    /// which signals a bug.
    pub fn rotation_number(&self) -> Int {
        assert!(self.is_consistent(), "rotation routes disagree: {self:?}");
        self.winding.clone()
    }
}

/// Evaluates the general rotation formula together with its cross-checks.
pub fn rotation_formula(vl: &VectorLoop) -> RotationReport {
    let edges = analyze_loop(vl);
    let mut signed_term_sum = Int::zero();
    let mut a_sum = Rat::zero();
    let mut xy_sum = Rat::zero();
    for e in &edges {
        let weight = Int::from(3) * Int::from(e.l() + 1) - e.term_sum();
        signed_term_sum += weight * e.sign();
        a_sum = &a_sum + &e.a;
        xy_sum = &xy_sum + &Rat::new(&e.x + &e.y, e.epsilon.clone());
    }
    let formula = &(&(&Rat::from(signed_term_sum.clone()) + &a_sum) - &xy_sum) / &Rat::from(12);
    assert!(formula.is_integer(), "formula value must be an integer");

    let refinement = refine_loop(vl);
    let hm_on_refined =
        hm_rotation(refinement.enlarged()).expect("refined loop is unimodular");
    let winding = winding_number_exact(vl);
    RotationReport {
        formula,
        hm_on_refined,
        winding,
        signed_term_sum,
        a_sum,
        xy_sum,
    }
}

/// Exact winding number of the closed path `v_1 -> ... -> v_d -> v_1` around
/// the origin, by signed crossings of the positive x-axis.
///
/// The axis itself is treated as part of the upper half-plane, so a vertex
/// lying on it is counted consistently on both incident segments. A segment
/// moving from the lower to the upper half-plane crosses the positive axis
/// iff `det(a, b) > 0`; no segment passes through the origin because
/// consecutive vectors are linearly independent.
pub fn winding_number_exact(vl: &VectorLoop) -> Int {
    let vs = vl.vertices();
    let d = vl.d();
    let mut wn = Int::zero();
    for k in 0..d {
        let a = &vs[k];
        let b = &vs[(k + 1) % d];
        let a_upper = !a.y.is_negative();
        let b_upper = !b.y.is_negative();
        if a_upper == b_upper {
            continue;
        }
        let det = a.det(b);
        if b_upper {
            if det.is_positive() {
                wn += 1;
            }
        } else if det.is_negative() {
            wn -= 1;
        }
    }
    wn
}

/// Winding number from the floating-point angle sum.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatWinding {
    /// `(1/2pi) * sum of signed angles`; close to an integer.
    pub value: f64,
    /// `value` rounded to the nearest integer.
    pub rounded: Int,
}

/// Sums the signed angles `atan2(det(v_i, v_{i+1}), dot(v_i, v_{i+1}))` and
/// divides by `2*pi`. Errors if the sum strays from an integer by
/// [`FLOAT_WINDING_TOLERANCE`] or more.
pub fn winding_number_float(vl: &VectorLoop) -> Result<FloatWinding, Error> {
    let vs = vl.vertices();
    let d = vl.d();
    let mut total = 0.0f64;
    for k in 0..d {
        let a = &vs[k];
        let b = &vs[(k + 1) % d];
        let det = a.det(b).to_f64().expect("bigint to f64");
        let dot = a.dot(b).to_f64().expect("bigint to f64");
        total += det.atan2(dot);
    }
    let value = total / std::f64::consts::TAU;
    let rounded_f = value.round();
    if (value - rounded_f).abs() >= FLOAT_WINDING_TOLERANCE {
        return Err(Error::WindingTolerance { value });
    }
    Ok(FloatWinding {
        value,
        rounded: Int::from(rounded_f as i64),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::LatticeVector;

    fn v(x: i64, y: i64) -> LatticeVector {
        LatticeVector::new(x, y)
    }

    fn int(n: i64) -> Int {
        Int::from(n)
    }

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(int(n), int(d))
    }

    fn golden_loop() -> VectorLoop {
        VectorLoop::new(vec![v(1, 0), v(1, 3), v(-2, -1), v(-2, 1), v(5, -3)]).unwrap()
    }

    fn square_loop() -> VectorLoop {
        VectorLoop::new(vec![v(1, 0), v(0, 1), v(-1, 0), v(0, -1)]).unwrap()
    }

    fn reversed_square() -> VectorLoop {
        VectorLoop::new(vec![v(1, 0), v(0, -1), v(-1, 0), v(0, 1)]).unwrap()
    }

    #[test]
    fn square_turns_once() {
        assert_eq!(hm_rotation(&square_loop()).unwrap(), Rat::one());
        assert_eq!(winding_number_exact(&square_loop()), int(1));
        let fw = winding_number_float(&square_loop()).unwrap();
        assert_eq!(fw.rounded, int(1));
        assert!((fw.value - 1.0).abs() < FLOAT_WINDING_TOLERANCE);
    }

    #[test]
    fn reversed_square_turns_back() {
        assert_eq!(hm_rotation(&reversed_square()).unwrap(), rat(-1, 1));
        assert_eq!(winding_number_exact(&reversed_square()), int(-1));
        assert_eq!(
            winding_number_float(&reversed_square()).unwrap().rounded,
            int(-1)
        );
    }

    #[test]
    fn hm_rejects_non_unimodular_loops() {
        assert_eq!(
            hm_rotation(&golden_loop()),
            Err(Error::NotUnimodularLoop { edge: 1 })
        );
    }

    #[test]
    fn golden_loop_report() {
        let report = rotation_formula(&golden_loop());
        assert_eq!(report.signed_term_sum, int(13));
        assert_eq!(report.a_sum, rat(3, 2));
        assert_eq!(report.xy_sum, rat(5, 2));
        assert_eq!(report.formula, Rat::one());
        assert_eq!(report.hm_on_refined, Rat::one());
        assert_eq!(report.winding, int(1));
        assert!(report.is_consistent());
        assert_eq!(report.rotation_number(), int(1));
    }

    #[test]
    fn golden_loop_oracles() {
        assert_eq!(winding_number_exact(&golden_loop()), int(1));
        assert_eq!(winding_number_float(&golden_loop()).unwrap().rounded, int(1));
        let refined = refine_loop(&golden_loop());
        assert_eq!(hm_rotation(refined.enlarged()).unwrap(), Rat::one());
    }

    #[test]
    fn two_vector_loop_has_no_net_turn() {
        let vl = VectorLoop::new(vec![v(1, 0), v(0, 1)]).unwrap();
        let report = rotation_formula(&vl);
        assert_eq!(report.formula, Rat::zero());
        assert_eq!(report.winding, int(0));
        assert!(report.is_consistent());
    }

    #[test]
    fn doubled_square_turns_twice() {
        let vl = VectorLoop::new(vec![
            v(1, 0),
            v(0, 1),
            v(-1, 0),
            v(0, -1),
            v(1, 0),
            v(0, 1),
            v(-1, 0),
            v(0, -1),
        ])
        .unwrap();
        let report = rotation_formula(&vl);
        assert_eq!(report.winding, int(2));
        assert_eq!(report.formula, Rat::from(2));
        assert_eq!(winding_number_float(&vl).unwrap().rounded, int(2));
    }

    #[test]
    fn square_report_reduces_to_unimodular_formula() {
        let report = rotation_formula(&square_loop());
        // all l = x = y = 0: the signed term sum is 3 * sum of signs
        assert_eq!(report.signed_term_sum, int(12));
        assert_eq!(report.xy_sum, Rat::zero());
        assert_eq!(report.formula, hm_rotation(&square_loop()).unwrap());
    }

    #[test]
    fn inconsistent_report_is_detected() {
        let mut report = rotation_formula(&square_loop());
        report.winding = int(5);
        assert!(!report.is_consistent());
    }

    #[test]
    fn vertex_on_positive_axis_is_counted_once() {
        // both segments incident to (1, 0) see it in the upper half-plane
        let vl = VectorLoop::new(vec![v(0, -1), v(1, 0), v(0, 1), v(-1, 0)]).unwrap();
        assert_eq!(winding_number_exact(&vl), int(1));
        assert_eq!(winding_number_float(&vl).unwrap().rounded, int(1));
    }
}
