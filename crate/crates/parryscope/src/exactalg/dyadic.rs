//! Dyadic rationals `m * 2^e` with exact arithmetic.
//!
//! Interval endpoints throughout the crate are dyadic so that halving is
//! exact and comparisons reduce to integer comparisons.

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A dyadic rational `mantissa * 2^exp`.
#[derive(Clone, Debug)]
pub struct Dyadic {
    mantissa: BigInt,
    exp: i64,
}

impl Dyadic {
    pub fn new(mantissa: BigInt, exp: i64) -> Self {
        Dyadic { mantissa, exp }.normalized()
    }

    pub fn zero() -> Self {
        Dyadic { mantissa: BigInt::zero(), exp: 0 }
    }

    pub fn one() -> Self {
        Dyadic::from_int(1)
    }

    pub fn from_int<T: Into<BigInt>>(n: T) -> Self {
        Dyadic { mantissa: n.into(), exp: 0 }
    }

    /// Exact conversion from an `f64`; every finite `f64` is dyadic.
    pub fn from_f64(x: f64) -> Option<Self> {
        if !x.is_finite() {
            return None;
        }
        if x == 0.0 {
            return Some(Dyadic::zero());
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1i64 } else { 1 };
        let exponent = ((bits >> 52) & 0x7ff) as i64;
        let fraction = bits & 0x000f_ffff_ffff_ffff;
        let (mant, exp) = if exponent == 0 {
            (fraction, -1074)
        } else {
            (fraction | 0x0010_0000_0000_0000, exponent - 1075)
        };
        Some(Dyadic::new(BigInt::from(sign * mant as i64), exp))
    }

    fn normalized(mut self) -> Self {
        if self.mantissa.is_zero() {
            self.exp = 0;
            return self;
        }
        // strip trailing zero bits to keep mantissas small
        let tz = self.mantissa.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.mantissa >>= tz;
            self.exp += tz as i64;
        }
        self
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exp(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn signum(&self) -> i32 {
        match self.mantissa.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    /// Multiplication by a power of two (exact).
    pub fn mul_pow2(&self, k: i64) -> Self {
        Dyadic { mantissa: self.mantissa.clone(), exp: self.exp + k }
    }

    /// Midpoint of `self` and `other` (exact).
    pub fn midpoint(&self, other: &Dyadic) -> Self {
        (self.clone() + other.clone()).mul_pow2(-1)
    }

    pub fn abs(&self) -> Self {
        Dyadic { mantissa: self.mantissa.abs(), exp: self.exp }
    }

    /// Bring two dyadics to a common exponent.
    fn aligned(&self, other: &Dyadic) -> (BigInt, BigInt, i64) {
        let exp = self.exp.min(other.exp);
        let a = &self.mantissa << (self.exp - exp) as u64;
        let b = &other.mantissa << (other.exp - exp) as u64;
        (a, b, exp)
    }

    /// Round down to `prec` fractional bits (floor).
    pub fn floor_to_prec(&self, prec: i64) -> Self {
        if self.exp >= -prec {
            return self.clone();
        }
        let shift = (-prec - self.exp) as u64;
        let m = self.mantissa.clone() >> shift; // arithmetic shift: floors
        Dyadic::new(m, -prec)
    }

    /// Round up to `prec` fractional bits (ceiling).
    pub fn ceil_to_prec(&self, prec: i64) -> Self {
        if self.exp >= -prec {
            return self.clone();
        }
        let shift = (-prec - self.exp) as u64;
        let floored = self.mantissa.clone() >> shift;
        let back = floored.clone() << shift;
        let m = if back == self.mantissa { floored } else { floored + 1 };
        Dyadic::new(m, -prec)
    }

    /// Nearest `f64` (correctly handling mantissas wider than 53 bits up to
    /// ordinary rounding; overflow saturates to infinity).
    pub fn to_f64(&self) -> f64 {
        if self.mantissa.is_zero() {
            return 0.0;
        }
        let bits = self.mantissa.bits() as i64;
        // keep at most 64 significant bits for the conversion
        let drop = (bits - 64).max(0);
        let m = self.mantissa.clone() >> drop as u64;
        let m_f64 = m.to_string().parse::<f64>().unwrap_or(f64::NAN);
        let e = self.exp + drop;
        m_f64 * pow2_f64(e)
    }
}

fn pow2_f64(e: i64) -> f64 {
    if e >= -1022 && e <= 1023 {
        f64::from_bits(((e + 1023) as u64) << 52)
    } else if e < -1022 {
        // subnormal or underflow territory: split
        f64::from_bits(1) * pow2_f64(e + 1074).min(f64::MAX)
    } else {
        f64::INFINITY * if e > 0 { 1.0 } else { 0.0 }
    }
}

impl PartialEq for Dyadic {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Dyadic {}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl Add for Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: Dyadic) -> Dyadic {
        let (a, b, exp) = self.aligned(&rhs);
        Dyadic::new(a + b, exp)
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: Dyadic) -> Dyadic {
        let (a, b, exp) = self.aligned(&rhs);
        Dyadic::new(a - b, exp)
    }
}

impl Mul for Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: Dyadic) -> Dyadic {
        Dyadic::new(self.mantissa * rhs.mantissa, self.exp + rhs.exp)
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { mantissa: -self.mantissa, exp: self.exp }
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp >= 0 {
            write!(f, "{}", &self.mantissa << self.exp as u64)
        } else {
            write!(f, "{}/2^{}", self.mantissa, -self.exp)
        }
    }
}

/// A closed interval with dyadic endpoints, `lo <= hi`.
#[derive(Clone, Debug, PartialEq)]
pub struct DyadicInterval {
    pub lo: Dyadic,
    pub hi: Dyadic,
}

impl DyadicInterval {
    pub fn new(lo: Dyadic, hi: Dyadic) -> Self {
        debug_assert!(lo <= hi);
        DyadicInterval { lo, hi }
    }

    pub fn point(x: Dyadic) -> Self {
        DyadicInterval { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> Dyadic {
        self.hi.clone() - self.lo.clone()
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.signum() <= 0 && self.hi.signum() >= 0
    }

    /// Sign of every point in the interval, if constant.
    pub fn sign(&self) -> Option<i32> {
        if self.lo.signum() > 0 {
            Some(1)
        } else if self.hi.signum() < 0 {
            Some(-1)
        } else if self.lo.signum() == 0 && self.hi.signum() == 0 {
            Some(0)
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        DyadicInterval {
            lo: self.lo.clone() + other.lo.clone(),
            hi: self.hi.clone() + other.hi.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let cands = [
            self.lo.clone() * other.lo.clone(),
            self.lo.clone() * other.hi.clone(),
            self.hi.clone() * other.lo.clone(),
            self.hi.clone() * other.hi.clone(),
        ];
        let lo = cands.iter().min().unwrap().clone();
        let hi = cands.iter().max().unwrap().clone();
        DyadicInterval { lo, hi }
    }

    pub fn add_int(&self, n: &BigInt) -> Self {
        let d = Dyadic::from_int(n.clone());
        DyadicInterval { lo: self.lo.clone() + d.clone(), hi: self.hi.clone() + d }
    }

    pub fn to_f64_mid(&self) -> f64 {
        self.lo.midpoint(&self.hi).to_f64()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_across_exponents() {
        let a = Dyadic::new(BigInt::from(3), -1); // 1.5
        let b = Dyadic::new(BigInt::from(25), -4); // 1.5625
        assert!(a < b);
        assert_eq!(a.clone() + a.clone(), Dyadic::from_int(3));
    }

    #[test]
    fn f64_roundtrip() {
        for x in [0.0, 1.0, -2.75, 0.1, 1e-300, 12345.678] {
            let d = Dyadic::from_f64(x).unwrap();
            assert_eq!(d.to_f64(), x);
        }
    }

    #[test]
    fn rounding_to_precision() {
        let d = Dyadic::new(BigInt::from(7), -3); // 0.875
        assert_eq!(d.floor_to_prec(1), Dyadic::new(BigInt::from(1), -1)); // 0.5
        assert_eq!(d.ceil_to_prec(1), Dyadic::from_int(1));
        assert_eq!(d.floor_to_prec(3), d);
    }

    #[test]
    fn interval_multiplication_covers_products() {
        let a = DyadicInterval::new(Dyadic::from_int(-2), Dyadic::from_int(3));
        let b = DyadicInterval::new(Dyadic::from_int(-1), Dyadic::from_int(4));
        let p = a.mul(&b);
        assert_eq!(p.lo, Dyadic::from_int(-8));
        assert_eq!(p.hi, Dyadic::from_int(12));
    }
}
