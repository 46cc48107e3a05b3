//! Exact scalar fields.
//!
//! Everything above this module is generic over [`Field`]. Two families of
//! implementations are provided: arbitrary precision rationals
//! ([`Rational`](crate::Rational)) for characteristic zero, and prime fields
//! [`Fp`] with the modulus fixed at compile time.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A commutative field with exact arithmetic.
pub trait Field:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Hash
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// 0 for the rationals, `p` for a prime field.
    fn characteristic() -> u64;

    /// Short name used in reports: `Q`, `F2`, `F3`, ...
    fn name() -> String;

    fn from_i64(v: i64) -> Self;

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// `self -= a * b`, without cloning the operands where the backend allows it.
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        let t = a.clone() * b.clone();
        *self = self.clone() - t;
    }

    /// `self += a * b`.
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        let t = a.clone() * b.clone();
        *self = self.clone() + t;
    }

    /// Roots of the polynomial with the given coefficients (lowest degree
    /// first) that lie in the field, sorted. `None` when the search space is
    /// too large to be covered.
    fn roots_in_field(coeffs: &[Self]) -> Option<Vec<Self>>;

    /// Serialized form used in JSON reports.
    fn to_report_string(&self) -> String;
}

impl Field for BigRational {
    fn characteristic() -> u64 {
        0
    }

    fn name() -> String {
        "Q".to_string()
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self -= a * b;
    }

    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self += a * b;
    }

    fn roots_in_field(coeffs: &[Self]) -> Option<Vec<Self>> {
        rational_roots(coeffs)
    }

    fn to_report_string(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }
}

// Divisor enumeration by trial division; coefficients beyond this bound are
// not searched.
const ROOT_SEARCH_LIMIT: u64 = 1 << 24;

/// Rational root theorem on the integer-scaled polynomial.
fn rational_roots(coeffs: &[BigRational]) -> Option<Vec<BigRational>> {
    let mut coeffs: Vec<BigRational> = coeffs.to_vec();
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    if coeffs.len() <= 1 {
        return Some(Vec::new());
    }
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();

    let mut roots = Vec::new();
    // strip the factor t^k
    let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if low > 0 {
        roots.push(BigRational::zero());
    }
    let ints = &ints[low..];
    if ints.len() <= 1 {
        return Some(roots);
    }
    let (Some(a0), Some(an)) = (
        ints[0].abs().to_u64(),
        ints[ints.len() - 1].abs().to_u64(),
    ) else {
        return None;
    };
    if a0 > ROOT_SEARCH_LIMIT || an > ROOT_SEARCH_LIMIT {
        return None;
    }
    let eval = |x: &BigRational| {
        ints.iter().rev().fold(BigRational::zero(), |acc, c| {
            acc * x + BigRational::from_integer(c.clone())
        })
    };
    let mut seen = Vec::new();
    for p in divisors(a0) {
        for q in divisors(an) {
            for sign in [1i64, -1] {
                let cand = BigRational::new(BigInt::from(sign) * BigInt::from(p), BigInt::from(q));
                if !seen.contains(&cand) && eval(&cand).is_zero() {
                    seen.push(cand.clone());
                }
            }
        }
    }
    seen.sort();
    roots.extend(seen);
    roots.sort();
    Some(roots)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

pub const fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Residues modulo the prime `P`. The value is always kept reduced.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const PRIME_CHECK: () = assert!(is_prime(P), "Fp modulus must be prime");

    pub fn new(v: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::PRIME_CHECK;
        Fp(v % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp::new(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 + rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 + P as u128 - rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero in Fp")
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp::new(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp::new(1)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn characteristic() -> u64 {
        P
    }

    fn name() -> String {
        format!("F{P}")
    }

    fn from_i64(v: i64) -> Self {
        Fp::new(v.rem_euclid(P as i64) as u64)
    }

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }

    fn roots_in_field(coeffs: &[Self]) -> Option<Vec<Self>> {
        if coeffs.iter().all(|c| c.is_zero()) {
            return Some(Vec::new());
        }
        if P > ROOT_SEARCH_LIMIT {
            return None;
        }
        let roots = (0..P)
            .map(Fp::new)
            .filter(|x| {
                coeffs
                    .iter()
                    .rev()
                    .fold(Fp::new(0), |acc, c| acc * *x + *c)
                    .is_zero()
            })
            .collect();
        Some(roots)
    }

    fn to_report_string(&self) -> String {
        self.0.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type F7 = Fp<7>;

    #[test]
    fn fp_inverse_roundtrip() {
        for v in 1..7 {
            let x = F7::new(v);
            assert_eq!(x * x.inv().unwrap(), F7::one());
        }
        assert!(F7::zero().inv().is_none());
    }

    #[test]
    fn fp_negative_embedding() {
        assert_eq!(F7::from_i64(-1), F7::new(6));
        assert_eq!(Fp::<2>::from_i64(-3), Fp::<2>::new(1));
    }

    #[test]
    fn rational_roots_of_quadratics() {
        let q = |n: i64| BigRational::from_i64(n);
        // (t - 1)(t + 1) = t^2 - 1
        assert_eq!(rational_roots(&[q(-1), q(0), q(1)]), Some(vec![q(-1), q(1)]));
        // t^2 - 2 has no rational root
        assert_eq!(rational_roots(&[q(-2), q(0), q(1)]), Some(vec![]));
        // 2t^2 - t = t(2t - 1)
        let r = rational_roots(&[q(0), q(-1), q(2)]).unwrap();
        assert_eq!(r, vec![q(0), BigRational::new(1.into(), 2.into())]);
        // huge constant term: the search declines
        let big = BigRational::from_integer(BigInt::from(1u64 << 40) + 1);
        assert_eq!(rational_roots(&[big, q(0), q(1)]), None);
    }

    #[test]
    fn fp_roots_exhaustive() {
        // t^2 + 1 over F5 has roots 2 and 3
        let c = [Fp::<5>::new(1), Fp::new(0), Fp::new(1)];
        assert_eq!(Fp::<5>::roots_in_field(&c), Some(vec![Fp::new(2), Fp::new(3)]));
    }
}
