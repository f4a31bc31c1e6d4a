//! Cyclotomic polynomials, divisor sieves and small number-theoretic helpers.

use crate::exactalg::IntPoly;
use num_bigint::BigInt;
use num_traits::One;
use std::collections::HashMap;
use std::sync::Mutex;
use std::sync::OnceLock;

/// Prime factorization of a small integer by trial division.
pub fn factorize_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = vec![];
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    let mut phi = n;
    for (p, _) in factorize_u64(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

pub fn mobius(n: u64) -> i64 {
    if n == 1 {
        return 1;
    }
    let f = factorize_u64(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Number of positive divisors.
pub fn tau(n: u64) -> u64 {
    factorize_u64(n).iter().map(|&(_, e)| e as u64 + 1).product()
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1];
    for (p, e) in factorize_u64(n) {
        let prev = out.clone();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            out.extend(prev.iter().map(|d| d * pk));
        }
    }
    out.sort_unstable();
    out
}

/// Number of primes `<= n`.
pub fn prime_pi(n: u64) -> u64 {
    (2..=n).filter(|&k| factorize_u64(k).len() == 1 && factorize_u64(k)[0].1 == 1).count() as u64
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<u64, IntPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, IntPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `n`-th cyclotomic polynomial, via iterated exact division of
/// `X^n - 1` by `Phi_d` over the proper divisors `d` of `n`.
pub fn cyclotomic_poly(n: u64) -> IntPoly {
    assert!(n >= 1);
    if let Some(hit) = cyclotomic_cache().lock().unwrap().get(&n) {
        return hit.clone();
    }
    let result = if n == 1 {
        IntPoly::from_i64(&[-1, 1])
    } else {
        let mut coeffs = vec![BigInt::from(-1)];
        coeffs.extend(std::iter::repeat(BigInt::from(0)).take(n as usize - 1));
        coeffs.push(BigInt::one());
        let mut q = IntPoly::new(coeffs); // X^n - 1
        for d in divisors(n) {
            if d < n {
                q = q.exact_divide(&cyclotomic_poly(d)).expect("Phi_d divides X^n-1");
            }
        }
        q
    };
    cyclotomic_cache().lock().unwrap().insert(n, result.clone());
    result
}

/// Strip every cyclotomic factor from a monic polynomial.
///
/// Scans indices `n <= 2 deg(q)^2` (enough, since `phi(n) >= sqrt(n/2)`),
/// dividing out `Phi_n` to maximal multiplicity. Returns the `(n,
/// multiplicity)` list in ascending `n` and the cyclotomic-free remainder.
pub fn cyclotomic_sieve(q: &IntPoly) -> (Vec<(u64, u32)>, IntPoly) {
    assert!(!q.is_zero() && q.is_monic());
    let mut rem = q.clone();
    let mut found = vec![];
    if rem.deg() == 0 {
        return (found, rem);
    }
    let limit = 2 * (q.deg() as u64) * (q.deg() as u64);
    for n in 1..=limit {
        let deg_left = rem.deg() as u64;
        if deg_left == 0 {
            break;
        }
        if euler_phi(n) > deg_left {
            continue;
        }
        let phi_n = cyclotomic_poly(n);
        let mut mult = 0u32;
        while let Ok(next) = rem.exact_divide(&phi_n) {
            rem = next;
            mult += 1;
            if rem.deg() == 0 {
                break;
            }
        }
        if mult > 0 {
            found.push((n, mult));
        }
    }
    (found, rem)
}

/// If `p` (monic irreducible) equals some `Phi_n`, return `n`.
pub fn cyclotomic_index(p: &IntPoly) -> Option<u64> {
    if p.is_zero() || !p.is_monic() {
        return None;
    }
    let d = p.deg() as u64;
    if d == 0 {
        return None;
    }
    // quick necessary conditions: cyclotomics are reciprocal or Phi_1
    if !(p.is_reciprocal() || *p == cyclotomic_poly(1)) {
        return None;
    }
    let limit = 2 * d * d + 1;
    (1..=limit).find(|&n| euler_phi(n) == d && cyclotomic_poly(n) == *p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_poly(1), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic_poly(6), IntPoly::from_i64(&[1, -1, 1]));
        // Phi_30 = X^8 + X^7 - X^5 - X^4 - X^3 + X + 1
        assert_eq!(
            cyclotomic_poly(30),
            IntPoly::from_i64(&[1, 1, 0, -1, -1, -1, 0, 1, 1])
        );
        assert_eq!(cyclotomic_poly(31).deg(), 30);
    }

    #[test]
    fn mobius_formula_oracle() {
        // Phi_n = prod_{d | n} (X^d - 1)^(mu(n/d)), checked by exact
        // multiplication of both sides split by the sign of mu.
        for n in [4u64, 6, 12, 15, 30] {
            let mut num = IntPoly::one();
            let mut den = IntPoly::one();
            for d in divisors(n) {
                let mut c = vec![BigInt::from(-1)];
                c.extend(std::iter::repeat(BigInt::from(0)).take(d as usize - 1));
                c.push(BigInt::one());
                let xd1 = IntPoly::new(c);
                match mobius(n / d) {
                    1 => num = num.mul(&xd1),
                    -1 => den = den.mul(&xd1),
                    _ => {}
                }
            }
            assert_eq!(cyclotomic_poly(n).mul(&den), num);
        }
    }

    #[test]
    fn sieve_strips_repeated_factors() {
        let phi1 = cyclotomic_poly(1);
        let cube = phi1.mul(&phi1).mul(&phi1);
        let (found, rem) = cyclotomic_sieve(&cube);
        assert_eq!(found, vec![(1, 3)]);
        assert_eq!(rem, IntPoly::one());
    }

    #[test]
    fn sieve_leaves_noncyclotomic_remainder() {
        let p = cyclotomic_poly(6).mul(&IntPoly::from_i64(&[-1, -1, 0, 1]));
        let (found, rem) = cyclotomic_sieve(&p);
        assert_eq!(found, vec![(6, 1)]);
        assert_eq!(rem, IntPoly::from_i64(&[-1, -1, 0, 1]));
    }

    #[test]
    fn index_detection() {
        assert_eq!(cyclotomic_index(&IntPoly::from_i64(&[1, -1, 1])), Some(6));
        assert_eq!(cyclotomic_index(&IntPoly::from_i64(&[-1, -1, 0, 1])), None);
        // Lehmer's polynomial: reciprocal degree 10 but not cyclotomic
        let lehmer = IntPoly::from_i64(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        assert_eq!(cyclotomic_index(&lehmer), None);
    }

    #[test]
    fn helpers() {
        assert_eq!(euler_phi(30), 8);
        assert_eq!(tau(12), 6);
        assert_eq!(prime_pi(41), 13);
        assert_eq!(mobius(6), 1);
        assert_eq!(mobius(12), 0);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }
}
