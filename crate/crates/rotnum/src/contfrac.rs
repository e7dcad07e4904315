//! Hirzebruch-Jung and regular continued fractions.
//!
//! The Hirzebruch-Jung expansion of `m/x` (for `m >= 2`, `0 < x < m` coprime)
//! is the descending-minus form
//!
//! ```text
//! m/x = n_1 - 1/(n_2 - 1/(... - 1/n_l)),   n_j >= 2,
//! ```
//!
//! which is unique. The product of the elementary factors `[[0, -1], [1, n_j]]`
//! taken left to right equals `[[(1 - x*y)/m, -x], [y, m]]`, where `y` is the
//! inverse of `x` modulo `m`. The regular (plus-sign) expansion satisfies the
//! analogous identity with factors `[[0, 1], [1, n_j]]` and a sign that
//! depends on the parity of the length.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{ext_gcd, gcd, Int};
use crate::lattice::Mat2;
use crate::rat::Rat;
use crate::Error;

/// Hirzebruch-Jung expansion of `m/x`; all terms are `>= 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HjExpansion {
    m: Int,
    x: Int,
    terms: Vec<Int>,
}

/// Regular continued-fraction expansion of `m/x`; all terms are `>= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegExpansion {
    m: Int,
    x: Int,
    terms: Vec<Int>,
}

macro_rules! expansion_accessors {
    ($ty:ident) => {
        impl $ty {
            pub fn m(&self) -> &Int {
                &self.m
            }

            pub fn x(&self) -> &Int {
                &self.x
            }

            pub fn terms(&self) -> &[Int] {
                &self.terms
            }

            /// Number of terms.
            pub fn len(&self) -> usize {
                self.terms.len()
            }

            pub fn is_empty(&self) -> bool {
                self.terms.is_empty()
            }

            pub fn term_sum(&self) -> Int {
                self.terms.iter().sum()
            }
        }
    };
}

expansion_accessors!(HjExpansion);
expansion_accessors!(RegExpansion);

fn check_fraction(m: &Int, x: &Int) -> Result<(), Error> {
    if m < &Int::from(2) || !x.is_positive() || x >= m {
        return Err(Error::FractionOutOfRange {
            m: m.clone(),
            x: x.clone(),
        });
    }
    if !gcd(m, x).is_one() {
        return Err(Error::NotCoprime {
            m: m.clone(),
            x: x.clone(),
        });
    }
    Ok(())
}

/// The unique all-terms-`>= 2` expansion of `m/x`.
///
/// Iterates the descent `(m, x) -> (x, ceil(m/x)*x - m)`, which strictly
/// shrinks the denominator and stops when it reaches zero.
pub fn hj_expand(m: &Int, x: &Int) -> Result<HjExpansion, Error> {
    check_fraction(m, x)?;
    let mut terms = Vec::new();
    let (mut m_cur, mut x_cur) = (m.clone(), x.clone());
    loop {
        let n = m_cur.div_ceil(&x_cur);
        let r = &n * &x_cur - &m_cur;
        terms.push(n);
        if r.is_zero() {
            break;
        }
        m_cur = std::mem::replace(&mut x_cur, r);
    }
    Ok(HjExpansion {
        m: m.clone(),
        x: x.clone(),
        terms,
    })
}

/// Exact value of the descending-minus continued fraction.
pub fn hj_eval(terms: &[Int]) -> Result<Rat, Error> {
    let (last, init) = terms.split_last().ok_or(Error::EmptyExpansion)?;
    check_terms(terms, 2)?;
    let mut acc = Rat::from(last.clone());
    for n in init.iter().rev() {
        acc = &Rat::from(n.clone()) - &acc.recip();
    }
    Ok(acc)
}

/// Exact value of the plus-sign continued fraction.
pub fn regular_eval(terms: &[Int]) -> Result<Rat, Error> {
    let (last, init) = terms.split_last().ok_or(Error::EmptyExpansion)?;
    check_terms(terms, 1)?;
    let mut acc = Rat::from(last.clone());
    for n in init.iter().rev() {
        acc = &Rat::from(n.clone()) + &acc.recip();
    }
    Ok(acc)
}

fn check_terms(terms: &[Int], min: u32) -> Result<(), Error> {
    for t in terms {
        if t < &Int::from(min) {
            return Err(Error::TermOutOfRange {
                term: t.clone(),
                min,
            });
        }
    }
    Ok(())
}

pub(crate) fn hj_factor(n: &Int) -> Mat2 {
    Mat2::new(Int::zero(), Int::from(-1), Int::one(), n.clone())
}

pub(crate) fn regular_factor(n: &Int) -> Mat2 {
    Mat2::new(Int::zero(), Int::one(), Int::one(), n.clone())
}

/// Product of the factors `[[0, -1], [1, n_j]]` left to right; the empty
/// product is the identity.
///
/// For `terms = hj_expand(m, x)` the result is `[[(1 - x*y)/m, -x], [y, m]]`
/// with `y` the inverse of `x` modulo `m`.
pub fn hj_matrix_product(terms: &[Int]) -> Mat2 {
    terms
        .iter()
        .fold(Mat2::identity(), |acc, n| &acc * &hj_factor(n))
}

/// Product of the factors `[[0, 1], [1, n_j]]` left to right.
pub fn regular_matrix_product(terms: &[Int]) -> Mat2 {
    terms
        .iter()
        .fold(Mat2::identity(), |acc, n| &acc * &regular_factor(n))
}

/// The unique `y` with `0 < y < m` and `x*y ≡ 1 (mod m)`.
pub fn mod_inverse(x: &Int, m: &Int) -> Result<Int, Error> {
    if m < &Int::from(2) {
        return Err(Error::FractionOutOfRange {
            m: m.clone(),
            x: x.clone(),
        });
    }
    let (g, p, _) = ext_gcd(x, m);
    if !g.is_one() {
        return Err(Error::NotCoprime {
            m: m.clone(),
            x: x.clone(),
        });
    }
    Ok(p.mod_floor(m))
}

/// Plus-sign expansion of `m/x` by plain Euclidean division.
pub fn regular_expand(m: &Int, x: &Int) -> Result<RegExpansion, Error> {
    check_fraction(m, x)?;
    let mut terms = Vec::new();
    let (mut m_cur, mut x_cur) = (m.clone(), x.clone());
    loop {
        let (q, r) = m_cur.div_rem(&x_cur);
        terms.push(q);
        if r.is_zero() {
            break;
        }
        m_cur = std::mem::replace(&mut x_cur, r);
    }
    Ok(RegExpansion {
        m: m.clone(),
        x: x.clone(),
        terms,
    })
}

/// Checks every continued-fraction identity for one admissible pair `(m, x)`.
/// Shared by the unit tests and the acceptance suite.
#[doc(hidden)]
pub fn verify_identities(m: &Int, x: &Int) {
    let hj = hj_expand(m, x).expect("admissible pair");
    assert!(hj.terms().iter().all(|n| n >= &Int::from(2)));
    assert_eq!(
        hj_eval(hj.terms()).unwrap(),
        Rat::new(m.clone(), x.clone()),
        "HJ evaluation mismatch for {m}/{x}"
    );

    let y = mod_inverse(x, m).unwrap();
    let prod = hj_matrix_product(hj.terms());
    let expected = Mat2 {
        m00: crate::arith::div_exact(&(Int::one() - x * &y), m),
        m01: -x.clone(),
        m10: y.clone(),
        m11: m.clone(),
    };
    assert_eq!(prod, expected, "HJ matrix identity fails for {m}/{x}");

    // expanding m/y reverses the term list
    let rev = hj_expand(m, &y).unwrap();
    let mut reversed = hj.terms().to_vec();
    reversed.reverse();
    assert_eq!(rev.terms(), reversed, "reversal duality fails for {m}/{x}");

    // regular expansion: product identity with parity-dependent sign
    let reg = regular_expand(m, x).unwrap();
    assert!(reg.terms().iter().all(|n| n >= &Int::one()));
    assert_eq!(
        regular_eval(reg.terms()).unwrap(),
        Rat::new(m.clone(), x.clone())
    );
    let sign = if reg.len().is_multiple_of(2) {
        Int::one()
    } else {
        -Int::one()
    };
    // unique 0 < y' < m with x*y' ≡ (-1)^(l+1) (mod m)
    let y_reg = (-&sign * mod_inverse(x, m).unwrap()).mod_floor(m);
    assert!(y_reg.is_positive() && &y_reg < m);
    assert_eq!(
        (x * &y_reg).mod_floor(m),
        (-&sign).mod_floor(m),
        "sign condition fails for {m}/{x}"
    );
    let reg_prod = regular_matrix_product(reg.terms());
    let reg_expected = Mat2 {
        m00: crate::arith::div_exact(&(x * &y_reg + &sign), m),
        m01: x.clone(),
        m10: y_reg,
        m11: m.clone(),
    };
    assert_eq!(reg_prod, reg_expected, "regular identity fails for {m}/{x}");
}
