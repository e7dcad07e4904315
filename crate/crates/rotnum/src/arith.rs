//! Integer scalars and Euclidean helpers.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision signed integer; every scalar in this crate is one.
pub type Int = num_bigint::BigInt;

/// Nonnegative greatest common divisor, with `gcd(0, 0) = 0`.
pub fn gcd(a: &Int, b: &Int) -> Int {
    a.gcd(b)
}

/// Extended Euclidean algorithm.
///
/// Returns `(g, p, q)` with `a*p + b*q = g` and `g = gcd(a, b) >= 0`.
pub fn ext_gcd(a: &Int, b: &Int) -> (Int, Int, Int) {
    let (mut r_prev, mut r) = (a.clone(), b.clone());
    let (mut p_prev, mut p) = (Int::one(), Int::zero());
    let (mut q_prev, mut q) = (Int::zero(), Int::one());
    while !r.is_zero() {
        let quot = &r_prev / &r;
        let next_r = &r_prev - &quot * &r;
        let next_p = &p_prev - &quot * &p;
        let next_q = &q_prev - &quot * &q;
        r_prev = std::mem::replace(&mut r, next_r);
        p_prev = std::mem::replace(&mut p, next_p);
        q_prev = std::mem::replace(&mut q, next_q);
    }
    if r_prev.is_negative() {
        (-r_prev, -p_prev, -q_prev)
    } else {
        (r_prev, p_prev, q_prev)
    }
}

/// Quotient of an exact division. Panics if `b` does not divide `a`; callers
/// rely on divisibility that is guaranteed by construction.
pub(crate) fn div_exact(a: &Int, b: &Int) -> Int {
    let (q, r) = a.div_rem(b);
    assert!(r.is_zero(), "{a} is not divisible by {b}");
    q
}
