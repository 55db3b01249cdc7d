//! Closed rational intervals with outward-exact arithmetic.
//!
//! Endpoints are exact rationals, so every operation here is conservative
//! containment, not rounding: the result interval contains every possible
//! value of the operation over the operands.

use crate::num::{rat_max, rat_min, sign_of, Rat};
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
}

impl Interval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Interval { lo, hi }
    }

    pub fn point(v: Rat) -> Self {
        Interval { lo: v.clone(), hi: v }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from_integer(2.into())
    }

    pub fn contains(&self, v: &Rat) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        sign_of(&self.lo) <= 0 && sign_of(&self.hi) >= 0
    }

    pub fn strictly_contains(&self, v: &Rat) -> bool {
        &self.lo < v && v < &self.hi
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = rat_max(self.lo.clone(), other.lo.clone());
        let hi = rat_min(self.hi.clone(), other.hi.clone());
        if lo <= hi {
            Some(Interval { lo, hi })
        } else {
            None
        }
    }

    pub fn disjoint(&self, other: &Interval) -> bool {
        self.hi < other.lo || other.hi < self.lo
    }

    /// Certain sign of every point in the interval, if uniform.
    pub fn sign(&self) -> Option<i32> {
        let sl = sign_of(&self.lo);
        let sh = sign_of(&self.hi);
        if sl > 0 {
            Some(1)
        } else if sh < 0 {
            Some(-1)
        } else if sl == 0 && sh == 0 {
            Some(0)
        } else {
            None
        }
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        self.add(&other.neg())
    }

    pub fn add_rat(&self, r: &Rat) -> Interval {
        Interval {
            lo: &self.lo + r,
            hi: &self.hi + r,
        }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let c = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = c[0].clone();
        let mut hi = c[0].clone();
        for v in &c[1..] {
            if v < &lo {
                lo = v.clone();
            }
            if v > &hi {
                hi = v.clone();
            }
        }
        Interval { lo, hi }
    }

    pub fn scale(&self, r: &Rat) -> Interval {
        if sign_of(r) >= 0 {
            Interval {
                lo: &self.lo * r,
                hi: &self.hi * r,
            }
        } else {
            Interval {
                lo: &self.hi * r,
                hi: &self.lo * r,
            }
        }
    }

    pub fn pow(&self, e: u32) -> Interval {
        if e == 0 {
            return Interval::point(Rat::from_integer(1.into()));
        }
        let mut acc = self.clone();
        for _ in 1..e {
            acc = acc.mul(self);
        }
        // Even powers of zero-straddling intervals clamp below at zero.
        if e % 2 == 0 && self.contains_zero() && acc.lo < Rat::zero() {
            acc.lo = Rat::zero();
        }
        acc
    }

    /// Reciprocal; None when the interval straddles or touches zero.
    pub fn recip(&self) -> Option<Interval> {
        if self.contains_zero() {
            return None;
        }
        Some(Interval {
            lo: Rat::from_integer(1.into()) / &self.hi,
            hi: Rat::from_integer(1.into()) / &self.lo,
        })
    }

    pub fn div(&self, other: &Interval) -> Option<Interval> {
        Some(self.mul(&other.recip()?))
    }

    /// Outward rounding to dyadic endpoints with precision tied to the
    /// width: containment is kept, the width grows by at most a 1/64
    /// factor, and the endpoints shed whatever exactness the operands
    /// dragged in. Deep evaluation towers otherwise carry endpoint
    /// rationals whose sizes compound multiplicatively.
    pub fn coarsen(&self) -> Interval {
        use num_integer::Integer;
        let w = self.width();
        if w.is_zero() {
            return self.clone();
        }
        // 2^-k <= w/128: rounding adds at most 2 * 2^-k = w/64.
        let k = (w.denom().bits() as i64 - w.numer().bits() as i64 + 8).max(1) as usize;
        let lo = (self.lo.numer().clone() << k).div_floor(self.lo.denom());
        let hi = -((-(self.hi.numer().clone() << k)).div_floor(self.hi.denom()));
        let den = crate::num::Int::from(1) << k;
        Interval::new(Rat::new(lo, den.clone()), Rat::new(hi, den))
    }

    /// Split at the midpoint into (left, right).
    pub fn bisect(&self) -> (Interval, Interval) {
        let m = self.mid();
        (
            Interval::new(self.lo.clone(), m.clone()),
            Interval::new(m, self.hi.clone()),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;

    #[test]
    fn coarsen_contains_and_barely_widens() {
        let a = Interval::new(rat(1_000_001, 3_000_000), rat(1_000_003, 3_000_000));
        let c = a.coarsen();
        assert!(c.lo <= a.lo && a.hi <= c.hi);
        assert!(c.width() <= a.width() * rat(65, 64));
        // Endpoints become dyadic with small denominators.
        assert!(c.lo.denom().bits() < 40);
        let p = Interval::point(rat(-7, 5));
        assert_eq!(p.coarsen(), p);
        let n = Interval::new(rat(-5, 3), rat(-1, 7));
        let c = n.coarsen();
        assert!(c.lo <= n.lo && n.hi <= c.hi);
    }

    #[test]
    fn arithmetic_contains_samples() {
        let a = Interval::new(rat(-1, 2), rat(3, 4));
        let b = Interval::new(rat(2, 1), rat(3, 1));
        let s = a.add(&b);
        assert!(s.contains(&(rat(-1, 2) + rat(2, 1))));
        let p = a.mul(&b);
        assert!(p.contains(&(rat(3, 4) * rat(3, 1))));
        assert!(p.contains(&(rat(-1, 2) * rat(3, 1))));
    }

    #[test]
    fn signs() {
        assert_eq!(Interval::new(rat(1, 3), rat(2, 1)).sign(), Some(1));
        assert_eq!(Interval::new(rat(-2, 1), rat(-1, 3)).sign(), Some(-1));
        assert_eq!(Interval::new(rat(-1, 3), rat(2, 1)).sign(), None);
        assert_eq!(Interval::point(rat(0, 1)).sign(), Some(0));
    }

    #[test]
    fn even_pow_clamps_at_zero() {
        let a = Interval::new(rat(-2, 1), rat(1, 1));
        let sq = a.pow(2);
        assert_eq!(sq.lo, rat(0, 1));
        assert_eq!(sq.hi, rat(4, 1));
    }

    #[test]
    fn recip_requires_sign() {
        assert!(Interval::new(rat(-1, 1), rat(1, 1)).recip().is_none());
        let r = Interval::new(rat(1, 2), rat(2, 1)).recip().unwrap();
        assert_eq!(r.lo, rat(1, 2));
        assert_eq!(r.hi, rat(2, 1));
    }
}
