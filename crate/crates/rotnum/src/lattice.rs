//! Lattice vectors in `Z^2` and 2x2 integer matrices.

use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{One, Signed};

use crate::arith::{gcd, Int};
use crate::Error;

/// Integer vector in `Z^2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeVector {
    pub x: Int,
    pub y: Int,
}

impl LatticeVector {
    pub fn new(x: impl Into<Int>, y: impl Into<Int>) -> LatticeVector {
        LatticeVector {
            x: x.into(),
            y: y.into(),
        }
    }

    /// Determinant of the 2x2 matrix whose columns are `self` and `other`.
    pub fn det(&self, other: &LatticeVector) -> Int {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn dot(&self, other: &LatticeVector) -> Int {
        &self.x * &other.x + &self.y * &other.y
    }

    /// True iff the components are relatively prime. Rejects the zero vector.
    pub fn is_primitive(&self) -> bool {
        gcd(&self.x, &self.y).is_one()
    }

    pub fn scaled(&self, k: &Int) -> LatticeVector {
        LatticeVector {
            x: &self.x * k,
            y: &self.y * k,
        }
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        LatticeVector {
            x: &self.x + &rhs.x,
            y: &self.y + &rhs.y,
        }
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// 2x2 integer matrix. Entry `mRC` sits in row `R`, column `C`; the columns
/// are the images of the basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2 {
    pub m00: Int,
    pub m01: Int,
    pub m10: Int,
    pub m11: Int,
}

impl Mat2 {
    pub fn new(
        m00: impl Into<Int>,
        m01: impl Into<Int>,
        m10: impl Into<Int>,
        m11: impl Into<Int>,
    ) -> Mat2 {
        Mat2 {
            m00: m00.into(),
            m01: m01.into(),
            m10: m10.into(),
            m11: m11.into(),
        }
    }

    pub fn identity() -> Mat2 {
        Mat2::new(1, 0, 0, 1)
    }

    pub fn from_cols(u: &LatticeVector, w: &LatticeVector) -> Mat2 {
        Mat2 {
            m00: u.x.clone(),
            m01: w.x.clone(),
            m10: u.y.clone(),
            m11: w.y.clone(),
        }
    }

    /// Column 0 or 1 as a vector.
    pub fn col(&self, j: usize) -> LatticeVector {
        match j {
            0 => LatticeVector {
                x: self.m00.clone(),
                y: self.m10.clone(),
            },
            1 => LatticeVector {
                x: self.m01.clone(),
                y: self.m11.clone(),
            },
            _ => panic!("column index {j} out of range"),
        }
    }

    pub fn det(&self) -> Int {
        &self.m00 * &self.m11 - &self.m01 * &self.m10
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    pub fn mul_vec(&self, v: &LatticeVector) -> LatticeVector {
        LatticeVector {
            x: &self.m00 * &v.x + &self.m01 * &v.y,
            y: &self.m10 * &v.x + &self.m11 * &v.y,
        }
    }

    /// Exact inverse of a determinant-`±1` matrix.
    pub fn inv_unimodular(&self) -> Result<Mat2, Error> {
        let det = self.det();
        if !det.abs().is_one() {
            return Err(Error::NotUnimodularMatrix { det });
        }
        // for det = ±1 the adjugate divided by det is the adjugate times det
        Ok(Mat2 {
            m00: &self.m11 * &det,
            m01: -(&self.m01 * &det),
            m10: -(&self.m10 * &det),
            m11: &self.m00 * &det,
        })
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: &Mat2) -> Mat2 {
        Mat2 {
            m00: &self.m00 * &rhs.m00 + &self.m01 * &rhs.m10,
            m01: &self.m00 * &rhs.m01 + &self.m01 * &rhs.m11,
            m10: &self.m10 * &rhs.m00 + &self.m11 * &rhs.m10,
            m11: &self.m10 * &rhs.m01 + &self.m11 * &rhs.m11,
        }
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.m00, self.m01, self.m10, self.m11
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn v(x: i64, y: i64) -> LatticeVector {
        LatticeVector::new(x, y)
    }

    #[test]
    fn det_examples() {
        assert_eq!(v(1, 0).det(&v(1, 3)), Int::from(3));
        assert_eq!(v(-2, -1).det(&v(-2, 1)), Int::from(-4));
        assert_eq!(v(1, 0).det(&v(2, 0)), Int::zero());
    }

    #[test]
    fn primitivity() {
        assert!(v(5, -3).is_primitive());
        assert!(!v(2, 4).is_primitive());
        assert!(v(0, 1).is_primitive());
        assert!(!v(0, 0).is_primitive());
    }

    #[test]
    fn matrix_det_and_identity_inverse() {
        assert_eq!(Mat2::new(1, 0, 3, 1).det(), Int::one());
        assert_eq!(
            Mat2::identity().inv_unimodular().unwrap(),
            Mat2::identity()
        );
    }

    #[test]
    fn elementary_square() {
        let e = Mat2::new(0, -1, 1, 2);
        assert_eq!(&e * &e, Mat2::new(-1, -2, 2, 3));
    }

    #[test]
    fn inverse_rejects_non_unimodular() {
        assert_eq!(
            Mat2::new(2, 0, 0, 1).inv_unimodular(),
            Err(Error::NotUnimodularMatrix { det: Int::from(2) })
        );
    }

    #[test]
    fn inverse_negative_determinant() {
        let a = Mat2::new(0, 1, 1, 0);
        let inv = a.inv_unimodular().unwrap();
        assert_eq!(&a * &inv, Mat2::identity());
        assert_eq!(&inv * &a, Mat2::identity());
    }

    fn small_mat() -> impl Strategy<Value = Mat2> {
        (-9i64..=9, -9i64..=9, -9i64..=9, -9i64..=9)
            .prop_map(|(a, b, c, d)| Mat2::new(a, b, c, d))
    }

    /// Random unimodular matrix: a short product of elementary factors.
    fn unimodular_mat() -> impl Strategy<Value = Mat2> {
        (
            prop::collection::vec(2i64..=7, 0..5),
            prop::bool::ANY,
        )
            .prop_map(|(terms, flip)| {
                let mut m = terms
                    .iter()
                    .fold(Mat2::identity(), |acc, &n| &acc * &Mat2::new(0, -1, 1, n));
                if flip {
                    m = &m * &Mat2::new(0, 1, 1, 0);
                }
                m
            })
    }

    proptest! {
        #[test]
        fn det_antisymmetry(ax in -50i64..=50, ay in -50i64..=50, bx in -50i64..=50, by in -50i64..=50) {
            let a = v(ax, ay);
            let b = v(bx, by);
            prop_assert_eq!(a.det(&b), -b.det(&a));
        }

        #[test]
        fn mul_associativity_and_det(a in small_mat(), b in small_mat(), c in small_mat()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!((&a * &b).det(), a.det() * b.det());
        }

        #[test]
        fn unimodular_inverse_round_trip(m in unimodular_mat()) {
            prop_assert!(m.is_unimodular());
            let inv = m.inv_unimodular().unwrap();
            prop_assert_eq!(&m * &inv, Mat2::identity());
            prop_assert_eq!(&inv * &m, Mat2::identity());
        }
    }
}
