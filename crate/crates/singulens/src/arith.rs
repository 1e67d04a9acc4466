//! Exact scalar and vector arithmetic helpers.
//!
//! All geometry in this crate is carried out over the rationals.  Lattice
//! data (exponents, facet normals, rays) is stored as `i64` vectors; derived
//! quantities that can be fractional (offsets, vertices, volumes, scales) use
//! arbitrary-precision [`BigRational`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Exact rational scalar.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat_int(a: i64) -> Rat {
    Rat::from_integer(BigInt::from(a))
}

/// Rational `a / b`.  Panics if `b == 0`.
pub fn rat(a: i64, b: i64) -> Rat {
    Rat::new(BigInt::from(a), BigInt::from(b))
}

/// Dot product of two integer vectors.
pub fn dot_ii(a: &[i64], b: &[i64]) -> i64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Dot product of an integer vector with a rational vector.
pub fn dot_ir(a: &[i64], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(Rat::zero(), |acc, (x, y)| acc + y * rat_int(*x))
}

/// Greatest common divisor of the entries (nonnegative; 0 for the zero vector).
pub fn content(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| gcd(g, x.abs()))
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Divide an integer vector by the gcd of its entries.  The zero vector is
/// returned unchanged.
pub fn primitive(v: &[i64]) -> Vec<i64> {
    let g = content(v);
    if g <= 1 {
        v.to_vec()
    } else {
        v.iter().map(|x| x / g).collect()
    }
}

/// Scale a rational vector to a primitive integer vector pointing the same
/// way (all entries multiplied by the lcm of denominators, then reduced).
pub fn primitive_of_rational(v: &[Rat]) -> Vec<i64> {
    let mut lcm = BigInt::from(1);
    for x in v {
        lcm = num_integer::lcm(lcm, x.denom().clone());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rat::from_integer(lcm.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = num_integer::gcd(g, x.abs());
    }
    ints.iter()
        .map(|x| {
            let r = if g.is_zero() { x.clone() } else { x / &g };
            i64::try_from(&r).expect("vector entry exceeds i64 range")
        })
        .collect()
}

/// Convert an integer vector to a rational vector.
pub fn to_rat_vec(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| rat_int(x)).collect()
}

/// Render a rational in the usual `p/q` (or plain `p`) form.
pub fn rat_display(x: &Rat) -> String {
    x.to_string()
}

/// Exact factorial as `Rat`.
pub fn factorial(n: usize) -> Rat {
    let mut out = BigInt::from(1);
    for k in 2..=n {
        out *= BigInt::from(k);
    }
    Rat::from_integer(out)
}
