//! Real algebraic numbers: a squarefree integer polynomial plus an
//! isolating interval. Comparisons are exact; refinement is plain bisection
//! because every non-point isolator brackets its root with a sign change.

use std::cmp::Ordering;

use crate::interval::Interval;
use crate::num::{decimal_of_rat, rat_pow, rat_to_f64, sign_of, Int, Rat};
use crate::unipoly::ZPoly;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone)]
pub struct AlgebraicReal {
    minpoly: ZPoly,
    isolator: Interval,
}

/// Divisor-enumeration cutoff for the rational-root fast path. Roots whose
/// numerator or denominator divides coefficients beyond this bound simply
/// stay in interval form; nothing downstream depends on catching them.
const RATIONAL_ROOT_COEFF_LIMIT: u64 = 1 << 20;

impl AlgebraicReal {
    /// Wrap a root of `p` isolated by `iso`. `p` need not be squarefree;
    /// `iso` must contain exactly one distinct real root of it.
    pub fn new(p: &ZPoly, iso: Interval) -> AlgebraicReal {
        let sf = p.squarefree_part();
        debug_assert_eq!(sf.count_roots_closed(&iso.lo, &iso.hi), 1);
        if sf.sign_at(&iso.lo) == 0 {
            return AlgebraicReal::from_rational(iso.lo);
        }
        if sf.sign_at(&iso.hi) == 0 {
            return AlgebraicReal::from_rational(iso.hi);
        }
        if let Some(r) = rational_root_in(&sf, &iso) {
            return AlgebraicReal::from_rational(r);
        }
        AlgebraicReal {
            minpoly: sf,
            isolator: iso,
        }
    }

    pub fn from_rational(r: Rat) -> AlgebraicReal {
        let minpoly =
            ZPoly::from_coeffs(vec![-r.numer().clone(), r.denom().clone()]).primitive();
        AlgebraicReal {
            minpoly,
            isolator: Interval::point(r),
        }
    }

    pub fn from_int(n: i64) -> AlgebraicReal {
        AlgebraicReal::from_rational(Rat::from_integer(Int::from(n)))
    }

    /// All real roots of `p`, sorted increasing.
    pub fn roots_of(p: &ZPoly) -> Vec<AlgebraicReal> {
        p.isolate_real_roots()
            .into_iter()
            .map(|iv| AlgebraicReal::new(p, iv))
            .collect()
    }

    pub fn minpoly(&self) -> &ZPoly {
        &self.minpoly
    }

    pub fn isolator(&self) -> &Interval {
        &self.isolator
    }

    pub fn as_rational(&self) -> Option<Rat> {
        if self.isolator.is_point() {
            return Some(self.isolator.lo.clone());
        }
        if self.minpoly.deg() == Some(1) {
            let a0 = self.minpoly.coeff(0);
            let a1 = self.minpoly.coeff(1);
            return Some(Rat::new(-a0, a1));
        }
        None
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    pub fn sign(&self) -> i32 {
        if let Some(r) = self.as_rational() {
            return sign_of(&r);
        }
        let mut iso = self.isolator.clone();
        loop {
            if let Some(s) = iso.sign() {
                if s != 0 {
                    return s;
                }
            }
            if iso.contains_zero() && self.minpoly.sign_at(&Rat::zero()) == 0 {
                return 0;
            }
            iso = self.minpoly.refine_step(&iso);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign() == 0
    }

    pub fn refine_step(&mut self) {
        self.isolator = self.minpoly.refine_step(&self.isolator);
    }

    pub fn refine_to_width(&mut self, w: &Rat) {
        self.isolator = self.minpoly.refine_to_width(&self.isolator, w);
    }

    /// Enclosure of width at most `w`, without mutating the isolator.
    pub fn approx(&self, w: &Rat) -> Interval {
        self.minpoly.refine_to_width(&self.isolator, w)
    }

    pub fn to_f64(&self) -> f64 {
        let iv = self.approx(&Rat::new(Int::one(), Int::from(1u64 << 40)));
        rat_to_f64(&iv.mid())
    }

    pub fn neg(&self) -> AlgebraicReal {
        let flipped: Vec<Int> = self
            .minpoly
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
            .collect();
        AlgebraicReal {
            minpoly: ZPoly::from_coeffs(flipped).positive_lc(),
            isolator: self.isolator.neg(),
        }
    }

    /// Decimal midpoint with `digits` places plus a certified error bound.
    pub fn decimal(&self, digits: u32) -> (String, Rat) {
        let target = Rat::new(Int::one(), Int::from(10u8).pow(digits + 1));
        let iv = self.approx(&target);
        let half_width = iv.width() / Rat::from_integer(Int::from(2));
        let rounding = rat_pow(&Rat::new(Int::one(), Int::from(10u8)), digits);
        (decimal_of_rat(&iv.mid(), digits), half_width + rounding)
    }

    pub fn cmp_rat(&self, r: &Rat) -> Ordering {
        if let Some(s) = self.as_rational() {
            return s.cmp(r);
        }
        if r <= &self.isolator.lo {
            // lo is not a root for non-point isolators, so root > lo >= r.
            return Ordering::Greater;
        }
        if r >= &self.isolator.hi {
            return Ordering::Less;
        }
        if self.minpoly.sign_at(r) == 0 {
            return Ordering::Equal;
        }
        let sl = self.minpoly.sign_at(&self.isolator.lo);
        if sl * self.minpoly.sign_at(r) < 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    fn equals(&self, other: &AlgebraicReal) -> bool {
        let overlap = match self.isolator.intersect(&other.isolator) {
            Some(o) => o,
            None => return false,
        };
        let g = ZPoly::gcd(&self.minpoly, &other.minpoly);
        if g.deg().map_or(true, |d| d == 0) {
            return false;
        }
        g.count_roots_closed(&overlap.lo, &overlap.hi) >= 1
    }

    pub fn cmp_exact(&self, other: &AlgebraicReal) -> Ordering {
        match (self.as_rational(), other.as_rational()) {
            (Some(a), Some(b)) => return a.cmp(&b),
            (Some(a), None) => return other.cmp_rat(&a).reverse(),
            (None, Some(b)) => return self.cmp_rat(&b),
            (None, None) => {}
        }
        if self.isolator.hi < other.isolator.lo {
            return Ordering::Less;
        }
        if other.isolator.hi < self.isolator.lo {
            return Ordering::Greater;
        }
        if self.equals(other) {
            return Ordering::Equal;
        }
        let mut a = self.isolator.clone();
        let mut b = other.isolator.clone();
        loop {
            if a.hi < b.lo {
                return Ordering::Less;
            }
            if b.hi < a.lo {
                return Ordering::Greater;
            }
            a = self.minpoly.refine_step(&a);
            b = other.minpoly.refine_step(&b);
        }
    }
}

impl PartialEq for AlgebraicReal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_exact(other) == Ordering::Equal
    }
}

impl Eq for AlgebraicReal {}

impl PartialOrd for AlgebraicReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_exact(other))
    }
}

impl Ord for AlgebraicReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_exact(other)
    }
}

impl std::fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if let Some(r) = self.as_rational() {
            write!(f, "{}", crate::num::rat_to_string(&r))
        } else {
            let (d, _) = self.decimal(6);
            write!(f, "~{d}")
        }
    }
}

/// Rational root of sf inside iso, found by divisor enumeration when the
/// outer coefficients are small enough to make that cheap.
fn rational_root_in(sf: &ZPoly, iso: &Interval) -> Option<Rat> {
    let d = sf.deg()?;
    if d == 0 {
        return None;
    }
    let a0 = sf.coeff(0);
    let an = sf.coeff(d);
    if a0.is_zero() {
        // Zero is a root; the isolator invariant puts it inside or nowhere.
        let z = Rat::zero();
        if iso.strictly_contains(&z) {
            return Some(z);
        }
        return None;
    }
    let limit = Int::from(RATIONAL_ROOT_COEFF_LIMIT);
    if a0.abs() > limit || an.abs() > limit {
        return None;
    }
    let num_divs = small_divisors(&a0)?;
    let den_divs = small_divisors(&an)?;
    for p in &num_divs {
        for q in &den_divs {
            for sgn in [1i64, -1] {
                let cand = Rat::new(p * Int::from(sgn), q.clone());
                if iso.strictly_contains(&cand) && sf.sign_at(&cand) == 0 {
                    return Some(cand);
                }
            }
        }
    }
    None
}

fn small_divisors(n: &Int) -> Option<Vec<Int>> {
    let n = n.abs();
    let cap = 4096u64;
    let mut out = Vec::new();
    let mut d = Int::one();
    let mut steps = 0u64;
    while &d * &d <= n {
        steps += 1;
        if steps > cap {
            return None;
        }
        if (&n % &d).is_zero() {
            out.push(d.clone());
            out.push(&n / &d);
        }
        d += Int::one();
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, rat_int};

    fn sqrt2() -> AlgebraicReal {
        AlgebraicReal::new(
            &ZPoly::from_i64(&[-2, 0, 1]),
            Interval::new(rat_int(1), rat_int(2)),
        )
    }

    #[test]
    fn compare_distinct() {
        let a = sqrt2();
        let b = AlgebraicReal::from_rational(rat(3, 2));
        assert_eq!(a.cmp_exact(&b), Ordering::Less);
        assert_eq!(a.cmp_rat(&rat(7, 5)), Ordering::Greater);
        assert_eq!(a.cmp_rat(&rat(3, 2)), Ordering::Less);
    }

    #[test]
    fn equality_through_different_polys() {
        // sqrt(2) as a root of (x^2-2)(x-5) with a wide isolator.
        let p = ZPoly::from_i64(&[-2, 0, 1]);
        let q = p.mul(&ZPoly::from_i64(&[-5, 1]));
        let a = sqrt2();
        let b = AlgebraicReal::new(&q, Interval::new(rat(5, 4), rat(19, 10)));
        assert_eq!(a, b);
    }

    #[test]
    fn rational_collapse() {
        // 3/2 hiding inside (2x-3)(x^2-7)
        let p = ZPoly::from_i64(&[-3, 2]).mul(&ZPoly::from_i64(&[-7, 0, 1]));
        let r = AlgebraicReal::new(&p, Interval::new(rat(7, 5), rat(8, 5)));
        assert_eq!(r.as_rational(), Some(rat(3, 2)));
    }

    #[test]
    fn sign_and_zero() {
        let z = AlgebraicReal::from_rational(rat_int(0));
        assert!(z.is_zero());
        assert_eq!(sqrt2().sign(), 1);
        assert_eq!(sqrt2().neg().sign(), -1);
    }

    #[test]
    fn neg_round_trip() {
        let a = sqrt2();
        let na = a.neg();
        assert_eq!(na.neg(), a);
        assert!(na < a);
    }

    #[test]
    fn decimal_output() {
        let (s, err) = sqrt2().decimal(6);
        assert_eq!(s, "1.414214");
        assert!(err < rat(1, 100000));
    }

    #[test]
    fn ordering_of_root_list() {
        // (x^2-2)(x^2-3)
        let p = ZPoly::from_i64(&[-2, 0, 1]).mul(&ZPoly::from_i64(&[-3, 0, 1]));
        let roots = AlgebraicReal::roots_of(&p);
        assert_eq!(roots.len(), 4);
        for w in roots.windows(2) {
            assert!(w[0] < w[1]);
        }
        assert_eq!(roots[3].decimal(3).0, "1.732");
    }
}
