//! Integer-coefficient polynomials with exact arithmetic.
//!
//! Coefficients are arbitrary-precision; index `i` stores the coefficient of
//! `X^i`. The highest stored coefficient is nonzero unless the polynomial is
//! identically zero (empty vector).

use crate::error::Error;
use crate::exactalg::dyadic::{Dyadic, DyadicInterval};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        IntPoly::new(vec![c.into()])
    }

    pub fn x() -> Self {
        IntPoly::monomial(1, 1)
    }

    pub fn monomial<T: Into<BigInt>>(degree: usize, c: T) -> Self {
        let c = c.into();
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree of a nonzero polynomial (panics on zero).
    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    /// Height `H`: max |coefficient|.
    pub fn height(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// Length (1-norm) `L`: sum of |coefficients|.
    pub fn length(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    /// Squared 2-norm as an exact integer.
    pub fn norm2_squared(&self) -> BigInt {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    pub fn norm2(&self) -> f64 {
        self.norm2_squared().to_f64().unwrap_or(f64::INFINITY).sqrt()
    }

    /// Number of nonzero coefficients (monomials).
    pub fn monomial_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Exponents carrying nonzero coefficients, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn neg(&self) -> Self {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        IntPoly::new(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn mul_scalar(&self, s: &BigInt) -> Self {
        IntPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// `self(X) * X^k`.
    pub fn mul_xk(&self, k: usize) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs: out }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// `p(-X)`.
    pub fn compose_neg_x(&self) -> Self {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Reciprocal polynomial `X^deg * p(1/X)` (coefficient reversal).
    pub fn reciprocal(&self) -> Result<IntPoly, Error> {
        if self.is_zero() {
            return Err(Error::InvalidInput(
                "reciprocal of the zero polynomial".into(),
            ));
        }
        let mut coeffs: Vec<BigInt> = self.coeffs.iter().rev().cloned().collect();
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        Ok(IntPoly { coeffs })
    }

    pub fn is_reciprocal(&self) -> bool {
        !self.is_zero() && self.reciprocal().map(|r| r == *self).unwrap_or(false)
    }

    pub fn is_anti_reciprocal(&self) -> bool {
        !self.is_zero() && self.reciprocal().map(|r| r == self.neg()).unwrap_or(false)
    }

    /// Exact division over the integers: `self = b * q`.
    ///
    /// Fails with `NotAFactor` (carrying the remainder) when the division
    /// leaves a remainder, and with `InvalidInput` when `b` is zero.
    pub fn exact_divide(&self, b: &IntPoly) -> Result<IntPoly, Error> {
        if b.is_zero() {
            return Err(Error::InvalidInput("division by zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        if self.deg() < b.deg() {
            return Err(Error::NotAFactor {
                remainder: format!("{}", self),
            });
        }
        let mut rem = self.coeffs.clone();
        let bn = b.deg();
        let lead = b.leading();
        let mut q = vec![BigInt::zero(); self.deg() - bn + 1];
        for i in (bn..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let (quot, r) = rem[i].div_rem(&lead);
            if !r.is_zero() {
                return Err(Error::NotAFactor {
                    remainder: format!("{}", IntPoly::new(rem)),
                });
            }
            q[i - bn] = quot.clone();
            for j in 0..=bn {
                let t = &b.coeffs[j] * &quot;
                rem[i - bn + j] -= t;
            }
        }
        let rem_poly = IntPoly::new(rem);
        if !rem_poly.is_zero() {
            return Err(Error::NotAFactor {
                remainder: format!("{}", rem_poly),
            });
        }
        Ok(IntPoly::new(q))
    }

    pub fn divides(&self, other: &IntPoly) -> bool {
        other.exact_divide(self).is_ok()
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`, exact over Z.
    pub fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        assert!(!b.is_zero());
        if self.is_zero() || self.deg() < b.deg() {
            return self.clone();
        }
        let d = self.deg() - b.deg() + 1;
        let lead = b.leading();
        let mut rem = self.mul_scalar(&num_traits::pow::pow(lead.clone(), d)).coeffs;
        let bn = b.deg();
        for i in (bn..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let quot = &rem[i] / &lead; // exact by construction
            for j in 0..=bn {
                let t = &b.coeffs[j] * &quot;
                rem[i - bn + j] -= t;
            }
        }
        IntPoly::new(rem)
    }

    /// Content: gcd of coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        IntPoly::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Polynomial gcd over Z (primitive, positive leading coefficient),
    /// by the subresultant pseudo-remainder sequence.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let content_gcd = self.content().gcd(&other.content());
        let (mut a, mut b) = if self.deg() >= other.deg() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.primitive_part().mul_scalar(&content_gcd)
    }

    pub fn square_free_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        if self.deg() == 0 {
            return IntPoly::one();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            self.primitive_part()
        } else {
            self.exact_divide(&g)
                .expect("gcd divides")
                .primitive_part()
        }
    }

    /// Square-free decomposition (Yun): returns `[(f_i, e_i)]` with
    /// `primitive(self) = prod f_i^{e_i}`, each `f_i` square-free, pairwise
    /// coprime, positive leading coefficients, `e_i` strictly increasing.
    pub fn square_free_decomposition(&self) -> Vec<(IntPoly, u32)> {
        let f = self.primitive_part();
        if f.is_zero() || f.deg() == 0 {
            return vec![];
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        if a0.degree() == Some(0) {
            return vec![(f, 1)];
        }
        let mut out = vec![];
        let mut b = f.exact_divide(&a0).expect("gcd divides");
        let mut c = df.exact_divide(&a0).expect("gcd divides");
        let mut i = 1u32;
        loop {
            let d = c.sub(&b.derivative());
            if d.is_zero() {
                if b.deg() > 0 {
                    out.push((b.primitive_part(), i));
                }
                break;
            }
            let a = b.gcd(&d);
            if a.deg() > 0 {
                out.push((a.clone(), i));
            }
            b = b.exact_divide(&a).expect("gcd divides");
            c = d.exact_divide(&a).expect("gcd divides");
            i += 1;
            if b.degree() == Some(0) {
                break;
            }
        }
        out
    }

    pub fn eval_bigint(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact value at a dyadic point.
    pub fn eval_dyadic(&self, x: &Dyadic) -> Dyadic {
        let mut acc = Dyadic::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + Dyadic::from_int(c.clone());
        }
        acc
    }

    /// Exact sign at a dyadic point.
    pub fn sign_at(&self, x: &Dyadic) -> i32 {
        self.eval_dyadic(x).signum()
    }

    /// Interval enclosure of `p(I)` by exact interval Horner.
    pub fn eval_interval(&self, x: &DyadicInterval) -> DyadicInterval {
        let mut acc = DyadicInterval::point(Dyadic::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add_int(c);
        }
        acc
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    /// Cauchy root bound: all complex roots have modulus < `1 + H/|lc|` <= this.
    pub fn cauchy_bound(&self) -> BigInt {
        let h = self.height();
        let lc = self.leading().abs();
        // ceil(H/lc) + 1
        let q = (&h + &lc - BigInt::one()) / &lc;
        q + BigInt::one()
    }

    /// Coefficient-list form `c0,c1,...,cn`.
    pub fn to_coeff_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn coeffs_i64(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }

    /// Parse either human form (`X^3 - X - 1`) or, with the `coeffs:` tag or
    /// bare comma-separated digits, the little-endian coefficient list.
    pub fn parse(input: &str) -> Result<IntPoly, Error> {
        let s = input.trim();
        if let Some(rest) = s.strip_prefix("coeffs:") {
            return Self::parse_coeff_list(rest);
        }
        if s.contains(',') {
            return Self::parse_coeff_list(s);
        }
        Self::parse_human(s)
    }

    pub fn parse_coeff_list(s: &str) -> Result<IntPoly, Error> {
        let mut coeffs = vec![];
        for part in s.split(',') {
            let part = part.trim();
            let c: BigInt = part
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad coefficient '{}'", part)))?;
            coeffs.push(c);
        }
        Ok(IntPoly::new(coeffs))
    }

    fn parse_human(s: &str) -> Result<IntPoly, Error> {
        let mut terms: Vec<(BigInt, usize)> = vec![];
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut i = 0usize;
        let n = chars.len();
        if n == 0 {
            return Err(Error::InvalidInput("empty polynomial".into()));
        }
        while i < n {
            let mut sign = BigInt::one();
            while i < n && (chars[i] == '+' || chars[i] == '-') {
                if chars[i] == '-' {
                    sign = -sign;
                }
                i += 1;
            }
            if i >= n {
                return Err(Error::InvalidInput("dangling sign".into()));
            }
            // optional coefficient, possibly parenthesized
            let mut coeff: Option<BigInt> = None;
            if chars[i] == '(' {
                let close = chars[i..]
                    .iter()
                    .position(|&c| c == ')')
                    .ok_or_else(|| Error::InvalidInput("unbalanced parenthesis".into()))?
                    + i;
                let inner: String = chars[i + 1..close].iter().collect();
                coeff = Some(
                    inner
                        .parse()
                        .map_err(|_| Error::InvalidInput(format!("bad coefficient ({})", inner)))?,
                );
                i = close + 1;
            } else if chars[i].is_ascii_digit() {
                let start = i;
                while i < n && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                coeff = Some(digits.parse().unwrap());
            }
            // optional '*'
            if i < n && chars[i] == '*' {
                i += 1;
            }
            // optional X^k
            let mut exp = 0usize;
            if i < n && (chars[i] == 'X' || chars[i] == 'x') {
                i += 1;
                exp = 1;
                if i < n && chars[i] == '^' {
                    i += 1;
                    let start = i;
                    while i < n && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    if start == i {
                        return Err(Error::InvalidInput("missing exponent after ^".into()));
                    }
                    let digits: String = chars[start..i].iter().collect();
                    exp = digits
                        .parse()
                        .map_err(|_| Error::InvalidInput("exponent too large".into()))?;
                }
            } else if coeff.is_none() {
                return Err(Error::InvalidInput(format!(
                    "expected term at position {} of '{}'",
                    i, s
                )));
            }
            let c = sign * coeff.unwrap_or_else(BigInt::one);
            terms.push((c, exp));
        }
        let deg = terms.iter().map(|&(_, e)| e).max().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        for (c, e) in terms {
            coeffs[e] += c;
        }
        Ok(IntPoly::new(coeffs))
    }
}

impl fmt::Display for IntPoly {
    /// Human form, e.g. `X^3 - X - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}", mag)?;
                }
                if i == 1 {
                    write!(f, "X")?;
                } else {
                    write!(f, "X^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    #[test]
    fn norms_are_consistent() {
        // H <= L <= (deg+1) * H
        let q = p(&[-4, -9, -9, 1]);
        let h = q.height();
        let l = q.length();
        assert!(h <= l);
        assert!(l <= BigInt::from(q.deg() as i64 + 1) * &h);
        assert_eq!(q.norm2_squared(), BigInt::from(16 + 81 + 81 + 1));
    }

    #[test]
    fn reciprocal_examples() {
        // X^2 - X - 1 -> -X^2 - X + 1
        let q = p(&[-1, -1, 1]);
        assert_eq!(q.reciprocal().unwrap(), p(&[1, -1, -1]));
        assert!(!q.is_reciprocal());
        // cyclotomic Phi_6 = X^2 - X + 1 is reciprocal
        let phi6 = p(&[1, -1, 1]);
        assert_eq!(phi6.reciprocal().unwrap(), phi6);
        assert!(phi6.is_reciprocal());
        // Lehmer's polynomial is reciprocal
        let lehmer = p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        assert!(lehmer.is_reciprocal());
        assert!(IntPoly::zero().reciprocal().is_err());
    }

    #[test]
    fn reciprocal_is_involutive_away_from_zero_constant() {
        let q = p(&[3, 0, -2, 7]);
        assert_eq!(q.reciprocal().unwrap().reciprocal().unwrap(), q);
    }

    #[test]
    fn exact_division_examples() {
        // (X^5 - X^4 - 1) / (X^3 - X - 1) = X^2 - X + 1
        let a = p(&[-1, 0, 0, 0, -1, 1]);
        let b = p(&[-1, -1, 0, 1]);
        let q = a.exact_divide(&b).unwrap();
        assert_eq!(q, p(&[1, -1, 1]));
        assert_eq!(b.mul(&q), a);
        // unit divisor
        assert_eq!(a.exact_divide(&IntPoly::one()).unwrap(), a);
        // (X^2 - X - 1) / (X - 1) leaves remainder -1
        let c = p(&[-1, -1, 1]);
        let d = p(&[-1, 1]);
        match c.exact_divide(&d) {
            Err(Error::NotAFactor { .. }) => {}
            other => panic!("expected NotAFactor, got {:?}", other),
        }
        assert!(matches!(
            c.exact_divide(&IntPoly::zero()),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn gcd_and_square_free() {
        let a = p(&[-1, -1, 1]); // X^2-X-1
        let b = p(&[1, -1, 1]); // X^2-X+1
        let f = a.mul(&a).mul(&b); // a^2 * b
        let sf = f.square_free_part();
        assert_eq!(sf, a.mul(&b));
        let dec = f.square_free_decomposition();
        assert_eq!(dec, vec![(b.clone(), 1), (a.clone(), 2)]);
    }

    #[test]
    fn parse_and_display_roundtrip() {
        let q = IntPoly::parse("X^3 - X - 1").unwrap();
        assert_eq!(q, p(&[-1, -1, 0, 1]));
        assert_eq!(format!("{}", q), "X^3 - X - 1");
        let bassino = IntPoly::parse("X^3-(32)X^2+60X-30").unwrap();
        assert_eq!(bassino, p(&[-30, 60, -32, 1]));
        let list = IntPoly::parse("coeffs:-1,-1,1").unwrap();
        assert_eq!(list, p(&[-1, -1, 1]));
        let bare = IntPoly::parse("-1,-1,1").unwrap();
        assert_eq!(bare, p(&[-1, -1, 1]));
        assert_eq!(IntPoly::parse(&q.to_coeff_string()).unwrap(), q);
    }

    #[test]
    fn interval_evaluation_encloses_value() {
        let q = p(&[-1, -1, 1]);
        let x = DyadicInterval::new(
            Dyadic::new(BigInt::from(25), -4), // 1.5625
            Dyadic::new(BigInt::from(27), -4), // 1.6875
        );
        let v = q.eval_interval(&x);
        // golden mean in the interval: value interval must contain 0
        assert!(v.contains_zero());
    }

    #[test]
    fn eval_complex_matches_real() {
        let q = p(&[-1, -1, 1]);
        let z = Complex64::new(2.0, 0.0);
        assert!((q.eval_complex(z).re - 1.0).abs() < 1e-12);
    }
}
