//! Loop validation and per-edge normalization data.
//!
//! For each edge `(v_i, v_{i+1})` with determinant `eps_i` this computes
//!
//! - the unique residue `0 <= x_i < |eps_i|` and unimodular matrix `P_i` with
//!   `(v_i, v_{i+1}) = P_i * [[1, -x_i], [0, |eps_i|]]`,
//! - the reverse-direction pair `(y_i, Q_i)` obtained from `(v_{i+1}, v_i)`,
//! - the rational coefficient `a_i` of the three-term relation
//!   `eps_{i-1}^{-1} v_{i-1} + eps_i^{-1} v_{i+1} + a_i v_i = 0`,
//! - the Hirzebruch-Jung expansion of `|eps_i| / x_i` when `|eps_i| >= 2`.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{div_exact, ext_gcd, Int};
use crate::contfrac::{hj_expand, HjExpansion};
use crate::lattice::{LatticeVector, Mat2};
use crate::rat::Rat;
use crate::Error;

/// Closed sequence of primitive vectors with nonzero consecutive
/// determinants, indices cyclic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorLoop {
    vertices: Vec<LatticeVector>,
}

impl VectorLoop {
    /// Validates the loop invariants: at least two vertices, every vertex
    /// primitive, every cyclic edge with nonzero determinant. Error indices
    /// are 1-based.
    pub fn new(vertices: Vec<LatticeVector>) -> Result<VectorLoop, Error> {
        if vertices.len() < 2 {
            return Err(Error::LoopTooShort {
                len: vertices.len(),
            });
        }
        // walk the path: report the first violation along it, vertex before
        // the edge it starts
        let d = vertices.len();
        for k in 0..d {
            if !vertices[k].is_primitive() {
                return Err(Error::NonPrimitiveVertex { vertex: k + 1 });
            }
            if vertices[k].det(&vertices[(k + 1) % d]).is_zero() {
                return Err(Error::ZeroDeterminantEdge { edge: k + 1 });
            }
        }
        Ok(VectorLoop { vertices })
    }

    /// Number of vertices (and of cyclic edges).
    pub fn d(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[LatticeVector] {
        &self.vertices
    }

    /// Determinant of the 0-based cyclic edge `k`.
    pub fn epsilon(&self, k: usize) -> Int {
        let d = self.d();
        self.vertices[k % d].det(&self.vertices[(k + 1) % d])
    }

    pub fn is_unimodular(&self) -> bool {
        (0..self.d()).all(|k| self.epsilon(k).abs().is_one())
    }

    /// The same loop traversed in the opposite direction.
    pub fn reversed(&self) -> VectorLoop {
        let vertices = self.vertices.iter().rev().cloned().collect();
        // reversal flips the sign of every determinant, so validity holds
        VectorLoop { vertices }
    }
}

/// Normalizes the ordered pair `(u, w)`.
///
/// Returns the unique `0 <= x < |det(u, w)|` together with the unimodular `P`
/// satisfying `(u, w) = P * [[1, -x], [0, |det(u, w)|]]`. Equivalently
/// `P^{-1} u = (1, 0)^T` and `P^{-1} w = (-x, |det|)^T`. `x` is coprime to
/// `|det|`, and `det(P) = det(u, w) / |det(u, w)|`.
pub fn edge_normalization(
    u: &LatticeVector,
    w: &LatticeVector,
) -> Result<(Int, Mat2), Error> {
    let (g, p, q) = ext_gcd(&u.x, &u.y);
    if !g.is_one() {
        return Err(Error::NonPrimitiveVector);
    }
    let result = edge_normalization_with(u, w, &p, &q)?;
    // checked after the determinant so a collinear pair reports as such
    if !w.is_primitive() {
        return Err(Error::NonPrimitiveVector);
    }
    Ok(result)
}

/// Worker taking an explicit Bezout pair `u.x * p + u.y * q = 1`; the result
/// does not depend on which pair is supplied.
fn edge_normalization_with(
    u: &LatticeVector,
    w: &LatticeVector,
    p: &Int,
    q: &Int,
) -> Result<(Int, Mat2), Error> {
    let eps = u.det(w);
    if eps.is_zero() {
        return Err(Error::CollinearVectors);
    }
    let m = eps.abs();
    // row-reduce u to (1, 0)^T: the second column becomes (t, eps)^T; the
    // unique shift of t into (-m, 0] by multiples of m gives x
    let t = p * &w.x + q * &w.y;
    let x = (-t).mod_floor(&m);
    // P = (u, w) * [[1, -x], [0, m]]^{-1} entrywise; the divisions are exact
    // precisely because of how x was chosen, and det(P) = eps/m
    let p_mat = Mat2 {
        m00: u.x.clone(),
        m01: div_exact(&(&u.x * &x + &w.x), &m),
        m10: u.y.clone(),
        m11: div_exact(&(&u.y * &x + &w.y), &m),
    };
    debug_assert!(p_mat.is_unimodular());
    Ok((x, p_mat))
}

/// Everything attached to the 1-based edge `i` from `v_i` to `v_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeAnalysis {
    /// 1-based edge index.
    pub index: usize,
    /// `det(v_i, v_{i+1})`; never zero.
    pub epsilon: Int,
    /// Coefficient of the three-term relation; denominator divides
    /// `eps_{i-1} * eps_i`.
    pub a: Rat,
    /// Forward residue, `0 <= x < |eps|`; zero iff `|eps| = 1`.
    pub x: Int,
    /// Reverse residue; `x * y ≡ 1 (mod |eps|)` when `|eps| >= 2`.
    pub y: Int,
    /// Unimodular matrix with `(v_i, v_{i+1}) = P * [[1, -x], [0, |eps|]]`.
    pub p: Mat2,
    /// Unimodular matrix with `(v_{i+1}, v_i) = Q * [[1, -y], [0, |eps|]]`.
    pub q: Mat2,
    /// Expansion of `|eps| / x`; `None` when `|eps| = 1`.
    pub hj: Option<HjExpansion>,
}

impl EdgeAnalysis {
    /// Expansion length `l`; zero when `|eps| = 1`.
    pub fn l(&self) -> usize {
        self.hj.as_ref().map_or(0, HjExpansion::len)
    }

    pub fn terms(&self) -> &[Int] {
        self.hj.as_ref().map_or(&[], HjExpansion::terms)
    }

    pub fn term_sum(&self) -> Int {
        self.hj.as_ref().map_or_else(Int::zero, HjExpansion::term_sum)
    }

    /// `eps / |eps|`.
    pub fn sign(&self) -> Int {
        self.epsilon.signum()
    }
}

/// Computes the [`EdgeAnalysis`] of every cyclic edge.
pub fn analyze_loop(vl: &VectorLoop) -> Vec<EdgeAnalysis> {
    let vs = vl.vertices();
    let d = vl.d();
    (0..d)
        .map(|k| {
            let prev = &vs[(k + d - 1) % d];
            let cur = &vs[k];
            let next = &vs[(k + 1) % d];
            let epsilon = cur.det(next);
            let eps_prev = prev.det(cur);
            let (x, p) = edge_normalization(cur, next).expect("validated edge");
            let (y, q) = edge_normalization(next, cur).expect("validated edge");
            let a = Rat::new(next.det(prev), eps_prev * &epsilon);
            let m = epsilon.abs();
            let hj = (m >= Int::from(2))
                .then(|| hj_expand(&m, &x).expect("x is coprime to |eps|"));
            EdgeAnalysis {
                index: k + 1,
                epsilon,
                a,
                x,
                y,
                p,
                q,
                hj,
            }
        })
        .collect()
}
