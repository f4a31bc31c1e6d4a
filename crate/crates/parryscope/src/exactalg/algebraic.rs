//! Real algebraic numbers as (irreducible minimal polynomial, isolating
//! dyadic interval), with Sturm-certified isolation and on-demand refinement.

use crate::error::Error;
use crate::exactalg::dyadic::{Dyadic, DyadicInterval};
use crate::exactalg::poly::IntPoly;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

/// Sturm chain of a polynomial (square-free on the interval of interest).
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Self {
        let mut chain = vec![];
        if p.is_zero() {
            return SturmChain { chain };
        }
        chain.push(p.clone());
        let dp = p.derivative();
        if dp.is_zero() {
            return SturmChain { chain };
        }
        chain.push(dp);
        loop {
            let n = chain.len();
            let a = &chain[n - 2];
            let b = &chain[n - 1];
            if b.is_zero() {
                chain.pop();
                break;
            }
            if a.deg() < b.deg() {
                break;
            }
            // pseudo-remainder scaled by lc(b)^(delta+1); keep Sturm signs by
            // flipping according to the sign of the implied positive factor
            let delta = a.deg() - b.deg() + 1;
            let r = a.pseudo_rem(b);
            if r.is_zero() {
                break;
            }
            let lead_sign = if b.leading().is_negative() { -1 } else { 1 };
            let factor_sign = if delta % 2 == 0 { 1 } else { lead_sign };
            // next = -(a mod b) up to positive scaling
            let next = if factor_sign > 0 { r.neg() } else { r };
            // divide by content to control growth (positive scaling only)
            let c = next.content();
            let next = IntPoly::new(next.coeffs().iter().map(|x| x / &c).collect());
            chain.push(next);
        }
        SturmChain { chain }
    }

    fn sign_variations_at(&self, x: &Dyadic) -> usize {
        let mut count = 0;
        let mut prev = 0i32;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s != 0 {
                if prev != 0 && s != prev {
                    count += 1;
                }
                prev = s;
            }
        }
        count
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn count_roots(&self, lo: &Dyadic, hi: &Dyadic) -> usize {
        if self.chain.is_empty() || lo >= hi {
            return 0;
        }
        let vl = self.sign_variations_at(lo);
        let vh = self.sign_variations_at(hi);
        vl.saturating_sub(vh)
    }
}

/// Exact count of distinct real roots of `p` in `(lo, hi]`.
///
/// Callers must first remove repeated factors; this routine takes the
/// square-free part itself so the count is correct for any input.
pub fn sturm_count(p: &IntPoly, lo: &Dyadic, hi: &Dyadic) -> usize {
    if p.is_zero() {
        return 0;
    }
    let sf = p.square_free_part();
    if sf.degree().map(|d| d == 0).unwrap_or(true) {
        return 0;
    }
    SturmChain::new(&sf).count_roots(lo, hi)
}

/// A real algebraic number: irreducible `minpoly` with positive leading
/// coefficient and a dyadic interval `(lo, hi]`-style enclosure containing
/// exactly one of its real roots. Refinement only shrinks the interval.
#[derive(Clone, Debug)]
pub struct AlgebraicReal {
    minpoly: IntPoly,
    lo: Dyadic,
    hi: Dyadic,
}

impl AlgebraicReal {
    /// Build from an irreducible polynomial and an isolating interval.
    /// The Sturm count over `(lo, hi]` must be exactly 1.
    pub fn new(minpoly: IntPoly, lo: Dyadic, hi: Dyadic) -> Result<Self, Error> {
        if minpoly.is_zero() || minpoly.leading().is_negative() {
            return Err(Error::InvalidInput(
                "minimal polynomial must be nonzero with positive leading coefficient".into(),
            ));
        }
        let chain = SturmChain::new(&minpoly);
        if chain.count_roots(&lo, &hi) != 1 {
            return Err(Error::InvalidInput(
                "interval does not isolate exactly one root".into(),
            ));
        }
        Ok(AlgebraicReal { minpoly, lo, hi })
    }

    pub fn minpoly(&self) -> &IntPoly {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.minpoly.deg()
    }

    pub fn interval(&self) -> DyadicInterval {
        DyadicInterval::new(self.lo.clone(), self.hi.clone())
    }

    pub fn width(&self) -> Dyadic {
        self.hi.clone() - self.lo.clone()
    }

    pub fn to_f64(&self) -> f64 {
        self.lo.midpoint(&self.hi).to_f64()
    }

    /// One bisection step (new value with an interval half as wide).
    ///
    /// The root is simple (the minimal polynomial is irreducible), so the
    /// sign of `minpoly` changes across it; if the midpoint sign matches the
    /// `lo` side the root lies above the midpoint.
    pub fn refined(&self) -> Self {
        let mid = self.lo.midpoint(&self.hi);
        let sm = self.minpoly.sign_at(&mid);
        if sm == 0 {
            // the midpoint is the root itself (possible only for degree 1)
            return AlgebraicReal {
                minpoly: self.minpoly.clone(),
                lo: mid.clone(),
                hi: mid,
            };
        }
        let slo = self.minpoly.sign_at(&self.lo);
        let (lo, hi) = if slo != 0 && sm != slo {
            (self.lo.clone(), mid)
        } else {
            (mid, self.hi.clone())
        };
        AlgebraicReal { minpoly: self.minpoly.clone(), lo, hi }
    }

    /// Shrink until `width <= 2^-prec_bits`, bisection with a guarded
    /// Newton jump once the interval is already narrow.
    pub fn refine_to(&self, prec_bits: i64) -> Self {
        let target = Dyadic::new(BigInt::from(1), -prec_bits);
        let mut cur = self.clone();
        let mut since_newton = 0u32;
        while cur.width() > target {
            since_newton += 1;
            if since_newton >= 8 {
                since_newton = 0;
                if let Some(next) = cur.newton_step(prec_bits) {
                    cur = next;
                    continue;
                }
            }
            cur = cur.refined();
        }
        cur
    }

    /// Guarded Newton step: propose `m - p(m)/p'(m)` rounded to a dyadic
    /// grid, and accept a small certified bracket around it only when the
    /// sign change confirms the root is inside. Exactness of the sign tests
    /// keeps this correct regardless of rounding.
    fn newton_step(&self, prec_bits: i64) -> Option<Self> {
        let m = self.lo.midpoint(&self.hi);
        let pm = self.minpoly.eval_dyadic(&m);
        if pm.is_zero() {
            return Some(AlgebraicReal {
                minpoly: self.minpoly.clone(),
                lo: m.clone(),
                hi: m,
            });
        }
        let dpm = self.minpoly.derivative().eval_dyadic(&m);
        if dpm.is_zero() {
            return None;
        }
        // p(m)/p'(m) rounded toward zero at 2*prec_bits fractional bits
        let grid = 2 * prec_bits + 4;
        let num = pm.mantissa() << grid as u64;
        let quot = num / dpm.mantissa();
        let correction = Dyadic::new(quot, pm.exp() - dpm.exp() - grid);
        let z = m - correction;
        let eps = Dyadic::new(BigInt::from(1), -(2 * prec_bits));
        let lo = z.clone() - eps.clone();
        let hi = z + eps;
        if lo <= self.lo || hi >= self.hi {
            return None;
        }
        let slo = self.minpoly.sign_at(&lo);
        let shi = self.minpoly.sign_at(&hi);
        if slo != 0 && shi != 0 && slo != shi {
            Some(AlgebraicReal { minpoly: self.minpoly.clone(), lo, hi })
        } else {
            None
        }
    }

    /// Exact floor of the represented number, assuming it is positive.
    pub fn floor_positive(&self) -> BigInt {
        let mut cur = self.clone();
        loop {
            // candidate from the interval
            let lo_f = cur.lo.to_f64().floor();
            let hi_f = cur.hi.to_f64().floor();
            if lo_f == hi_f && lo_f.is_finite() {
                let n = BigInt::from(lo_f as i64);
                // confirm exactly: n <= x < n+1
                let n_d = Dyadic::from_int(n.clone());
                let n1_d = Dyadic::from_int(&n + 1);
                if cur.lo >= n_d && cur.hi < n1_d {
                    return n;
                }
            }
            cur = cur.refined();
        }
    }

    /// Exact comparison with an integer.
    pub fn cmp_int(&self, n: &BigInt) -> std::cmp::Ordering {
        let nd = Dyadic::from_int(n.clone());
        let mut cur = self.clone();
        loop {
            if cur.lo > nd {
                return std::cmp::Ordering::Greater;
            }
            if cur.hi < nd {
                return std::cmp::Ordering::Less;
            }
            // n inside the interval: decide exactly via the minimal polynomial
            if cur.minpoly.eval_bigint(n).is_zero() {
                return std::cmp::Ordering::Equal;
            }
            cur = cur.refined();
        }
    }
}

/// Isolate the largest real root `> 1` of `p` as an [`AlgebraicReal`] whose
/// minimal polynomial is the irreducible factor owning that root, refined to
/// width `<= 2^-32`.
///
/// Fails with `NotACandidate` when `p` has no real root greater than 1.
pub fn isolate_dominant_root(p: &IntPoly) -> Result<AlgebraicReal, Error> {
    if p.is_zero() || p.deg() == 0 {
        return Err(Error::InvalidInput("constant polynomial".into()));
    }
    let sf = p.square_free_part();
    let chain = SturmChain::new(&sf);
    let one = Dyadic::one();
    let bound = Dyadic::from_int(sf.cauchy_bound());
    if chain.count_roots(&one, &bound) == 0 {
        return Err(Error::NotACandidate(format!("{}", p)));
    }
    // bisect down to the single largest root in (1, bound]
    let mut lo = one;
    let mut hi = bound;
    loop {
        let in_interval = chain.count_roots(&lo, &hi);
        if in_interval == 1 {
            break;
        }
        let mid = lo.midpoint(&hi);
        if chain.count_roots(&mid, &hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // attach the irreducible factor that vanishes on the interval
    let factors = crate::factorizer::factor_into_irreducibles(&sf)?;
    let mut owner: Option<IntPoly> = None;
    for (f, _) in &factors {
        if f.deg() >= 1 && sturm_count(f, &lo, &hi) == 1 {
            owner = Some(f.clone());
            break;
        }
    }
    let minpoly =
        owner.ok_or_else(|| Error::Inconsistent("no irreducible factor owns the root".into()))?;
    // re-isolate against the minimal polynomial alone, then certify width
    let mchain = SturmChain::new(&minpoly);
    let (mut lo, mut hi) = (lo, hi);
    while mchain.count_roots(&lo, &hi) != 1 {
        // cannot happen for a correct factorization; defensive refinement
        let mid = lo.midpoint(&hi);
        if mchain.count_roots(&mid, &hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let root = AlgebraicReal { minpoly, lo, hi };
    Ok(root.refine_to(32))
}

/// All real roots of a square-free polynomial, as isolating intervals
/// refined to width `<= 2^-prec_bits`, ascending.
pub fn isolate_real_roots(sf: &IntPoly, prec_bits: i64) -> Vec<(Dyadic, Dyadic)> {
    if sf.is_zero() || sf.deg() == 0 {
        return vec![];
    }
    let chain = SturmChain::new(sf);
    let bound = Dyadic::from_int(sf.cauchy_bound());
    let lo0 = -bound.clone();
    let total = chain.count_roots(&lo0, &bound);
    let mut out = vec![];
    let mut stack = vec![(lo0, bound, total)];
    let target = Dyadic::new(BigInt::from(1), -prec_bits);
    while let Some((lo, hi, count)) = stack.pop() {
        if count == 0 {
            continue;
        }
        if count == 1 {
            // shrink maintaining the count
            let (mut lo, mut hi) = (lo, hi);
            while hi.clone() - lo.clone() > target {
                let mid = lo.midpoint(&hi);
                if chain.count_roots(&mid, &hi) == 1 {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            out.push((lo, hi));
            continue;
        }
        let mid = lo.midpoint(&hi);
        let upper = chain.count_roots(&mid, &hi);
        stack.push((lo, mid.clone(), count - upper));
        stack.push((mid, hi, upper));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Exact number of real positive roots counted with multiplicity.
pub fn count_real_positive(p: &IntPoly) -> usize {
    if p.is_zero() {
        return 0;
    }
    let mut total = 0usize;
    for (f, mult) in p.square_free_decomposition() {
        let chain = SturmChain::new(&f);
        let zero = Dyadic::zero();
        let bound = Dyadic::from_int(f.cauchy_bound());
        total += chain.count_roots(&zero, &bound) * mult as usize;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    #[test]
    fn sturm_counts_match_known_roots() {
        let q = p(&[-1, -1, 1]); // roots 1.618, -0.618
        let d = |x: i64| Dyadic::from_int(x);
        assert_eq!(sturm_count(&q, &d(0), &d(2)), 1);
        assert_eq!(sturm_count(&q, &d(-1), &d(0)), 1);
        assert_eq!(sturm_count(&p(&[1, 0, 1]), &d(-10), &d(10)), 0);
        // repeated factors are handled through the square-free part
        assert_eq!(sturm_count(&q.mul(&q), &d(0), &d(2)), 1);
    }

    #[test]
    fn golden_mean_isolation() {
        let beta = isolate_dominant_root(&p(&[-1, -1, 1])).unwrap();
        let x = beta.to_f64();
        assert!((x - 1.618_033_988_749_895).abs() < 1e-9);
        assert_eq!(beta.floor_positive(), BigInt::from(1));
        // Sturm count over the isolating interval is 1 at all refinement levels
        let mut cur = beta.clone();
        for _ in 0..5 {
            cur = cur.refined();
            let iv = cur.interval();
            assert_eq!(sturm_count(cur.minpoly(), &iv.lo, &iv.hi), 1);
        }
    }

    #[test]
    fn plastic_number_isolation() {
        let theta = isolate_dominant_root(&p(&[-1, -1, 0, 1])).unwrap();
        assert!((theta.to_f64() - 1.324_717_957_244_746).abs() < 1e-9);
    }

    #[test]
    fn dominant_root_of_reducible_input_gets_irreducible_minpoly() {
        // X^5 - X^4 - 1 = (X^2 - X + 1)(X^3 - X - 1)
        let selmer = p(&[-1, 0, 0, 0, -1, 1]);
        let beta = isolate_dominant_root(&selmer).unwrap();
        assert_eq!(beta.minpoly(), &p(&[-1, -1, 0, 1]));
        assert!((beta.to_f64() - 1.324_717_957_244_746).abs() < 1e-9);
    }

    #[test]
    fn no_candidate_root() {
        assert!(matches!(
            isolate_dominant_root(&p(&[1, 0, 1])),
            Err(Error::NotACandidate(_))
        ));
    }

    #[test]
    fn deep_refinement_narrows_fast() {
        let beta = isolate_dominant_root(&p(&[-1, -1, 1])).unwrap();
        let fine = beta.refine_to(256);
        let w = fine.width();
        assert!(w <= Dyadic::new(BigInt::from(1), -256));
        // refinement never loses the root
        let iv = fine.interval();
        assert_eq!(sturm_count(fine.minpoly(), &iv.lo, &iv.hi), 1);
    }

    #[test]
    fn real_root_isolation_lists_all() {
        // (X^2-2)(X-3) has roots -1.414, 1.414, 3
        let q = p(&[-2, 0, 1]).mul(&p(&[-3, 1]));
        let roots = isolate_real_roots(&q, 40);
        assert_eq!(roots.len(), 3);
        let approx: Vec<f64> = roots
            .iter()
            .map(|(lo, hi)| lo.midpoint(hi).to_f64())
            .collect();
        assert!((approx[0] + std::f64::consts::SQRT_2).abs() < 1e-9);
        assert!((approx[1] - std::f64::consts::SQRT_2).abs() < 1e-9);
        assert!((approx[2] - 3.0).abs() < 1e-9);
    }

    #[test]
    fn real_positive_count_with_multiplicity() {
        // (X-2)^2 (X^2+1) -> 2
        let q = p(&[-2, 1]).mul(&p(&[-2, 1])).mul(&p(&[1, 0, 1]));
        assert_eq!(count_real_positive(&q), 2);
        assert_eq!(count_real_positive(&p(&[-1, -1, 1])), 1);
    }
}
