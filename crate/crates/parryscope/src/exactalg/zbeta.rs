//! Elements of `Z[beta]` as integer coordinate vectors in the power basis
//! `{1, beta, ..., beta^(d-1)}`, reduced modulo the monic minimal polynomial.

use crate::error::Error;
use crate::exactalg::algebraic::AlgebraicReal;
use crate::exactalg::poly::IntPoly;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZBetaElement {
    coords: Vec<BigInt>,
}

impl ZBetaElement {
    pub fn zero(d: usize) -> Self {
        ZBetaElement { coords: vec![BigInt::zero(); d] }
    }

    pub fn one(d: usize) -> Self {
        let mut coords = vec![BigInt::zero(); d];
        coords[0] = BigInt::one();
        ZBetaElement { coords }
    }

    pub fn from_coords(coords: Vec<BigInt>) -> Self {
        ZBetaElement { coords }
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Multiplication by `beta`, reducing modulo the monic minimal
    /// polynomial `X^d + p_(d-1) X^(d-1) + ... + p_0`.
    pub fn mul_beta(&self, minpoly: &IntPoly) -> Result<Self, Error> {
        let d = self.coords.len();
        if minpoly.deg() != d || !minpoly.is_monic() {
            return Err(Error::InvalidInput(
                "minimal polynomial must be monic of matching degree".into(),
            ));
        }
        let mut out = vec![BigInt::zero(); d];
        let top = self.coords[d - 1].clone();
        for i in 1..d {
            out[i] = self.coords[i - 1].clone();
        }
        if !top.is_zero() {
            // beta^d = -(p_0 + p_1 beta + ... + p_(d-1) beta^(d-1))
            for i in 0..d {
                out[i] -= &top * minpoly.coeff(i);
            }
        }
        Ok(ZBetaElement { coords: out })
    }

    pub fn sub_int(&self, n: &BigInt) -> Self {
        let mut coords = self.coords.clone();
        coords[0] -= n;
        ZBetaElement { coords }
    }

    /// Reduce an arbitrary integer polynomial modulo the monic minimal
    /// polynomial (Horner over `Z[beta]`).
    pub fn reduce_poly(p: &IntPoly, minpoly: &IntPoly) -> Result<Self, Error> {
        let d = minpoly.deg();
        let mut acc = ZBetaElement::zero(d);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul_beta(minpoly)?;
            acc.coords[0] += c;
        }
        Ok(acc)
    }

    /// Coordinates as a polynomial in `X` (for interval evaluation).
    fn as_poly(&self) -> IntPoly {
        IntPoly::new(self.coords.clone())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }
}

/// Exact sign of `e(beta)`.
///
/// Zero is decided algebraically: the power basis is a basis, so `e` is zero
/// exactly when its coordinate vector vanishes. Nonzero signs come from
/// interval evaluation, refining `beta` in place until zero is excluded;
/// refinement never changes a returned sign.
pub fn sign_eval(e: &ZBetaElement, beta: &mut AlgebraicReal) -> Result<Sign, Error> {
    if e.dim() != beta.degree() {
        return Err(Error::InvalidInput(
            "element and field dimensions differ".into(),
        ));
    }
    if e.is_zero() {
        return Ok(Sign::Zero);
    }
    let p = e.as_poly();
    loop {
        let iv = p.eval_interval(&beta.interval());
        if iv.lo.signum() > 0 {
            return Ok(Sign::Positive);
        }
        if iv.hi.signum() < 0 {
            return Ok(Sign::Negative);
        }
        *beta = beta.refined();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::algebraic::isolate_dominant_root;

    fn golden() -> AlgebraicReal {
        isolate_dominant_root(&IntPoly::from_i64(&[-1, -1, 1])).unwrap()
    }

    #[test]
    fn zero_element_has_sign_zero() {
        let mut beta = golden();
        let e = ZBetaElement::zero(2);
        assert_eq!(sign_eval(&e, &mut beta).unwrap(), Sign::Zero);
    }

    #[test]
    fn beta_minus_one_is_positive() {
        let mut beta = golden();
        let e = ZBetaElement::from_coords(vec![BigInt::from(-1), BigInt::from(1)]);
        assert_eq!(sign_eval(&e, &mut beta).unwrap(), Sign::Positive);
    }

    #[test]
    fn minimal_polynomial_relation_is_exactly_zero() {
        let mut beta = golden();
        // beta^2 - beta - 1 reduces to the zero vector
        let e = ZBetaElement::reduce_poly(&IntPoly::from_i64(&[-1, -1, 1]), beta.minpoly()).unwrap();
        assert!(e.is_zero());
        assert_eq!(sign_eval(&e, &mut beta).unwrap(), Sign::Zero);
    }

    #[test]
    fn sign_stable_under_refinement() {
        let mut beta = golden();
        let e = ZBetaElement::from_coords(vec![BigInt::from(2), BigInt::from(-1)]); // 2 - beta > 0
        let s1 = sign_eval(&e, &mut beta).unwrap();
        for _ in 0..20 {
            beta = beta.refined();
        }
        let s2 = sign_eval(&e, &mut beta).unwrap();
        assert_eq!(s1, s2);
        assert_eq!(s1, Sign::Positive);
    }

    #[test]
    fn orbit_arithmetic_matches_definition() {
        let mut beta = golden();
        // T^1(1) = beta - 1 for the golden mean (t_1 = 1)
        let one = ZBetaElement::one(2);
        let b1 = one.mul_beta(beta.minpoly()).unwrap();
        let t1 = b1.sub_int(&BigInt::one());
        assert_eq!(t1.coords(), &[BigInt::from(-1), BigInt::from(1)]);
        assert_eq!(sign_eval(&t1, &mut beta).unwrap(), Sign::Positive);
    }
}
