//! Scalar aliases and small exact-arithmetic helpers.
//!
//! Everything downstream works over `Rat` (arbitrary-precision rationals);
//! `Int` shows up where primitive integer polynomials are needed.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Int = BigInt;
pub type Rat = num_rational::BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

/// Sign of a rational as -1, 0, or +1.
pub fn sign_of(r: &Rat) -> i32 {
    match r.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

pub fn rat_min(a: Rat, b: Rat) -> Rat {
    if a <= b {
        a
    } else {
        b
    }
}

pub fn rat_max(a: Rat, b: Rat) -> Rat {
    if a >= b {
        a
    } else {
        b
    }
}

pub fn rat_abs(r: &Rat) -> Rat {
    r.abs()
}

pub fn rat_pow(r: &Rat, e: u32) -> Rat {
    let mut acc = Rat::one();
    let mut base = r.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// Largest integer n with n^2 <= v (v >= 0).
pub fn int_sqrt_floor(v: &Int) -> Int {
    assert!(!v.is_negative());
    if v.is_zero() {
        return Int::zero();
    }
    let bits = v.bits();
    let mut x: Int = Int::one() << ((bits / 2) + 1);
    loop {
        let y: Int = (&x + v / &x) >> 1;
        if y >= x {
            break;
        }
        x = y;
    }
    x
}

/// A rational u with u >= sqrt(r) and u - sqrt(r) < 1/4, for r >= 0.
pub fn rat_sqrt_upper(r: &Rat) -> Rat {
    assert!(!r.is_negative());
    if r.is_zero() {
        return Rat::zero();
    }
    // Scale by 4^k so the integer sqrt gives 2^-k resolution.
    let k = 4u32;
    let scale = Int::one() << (2 * k);
    let scaled = r * Rat::from_integer(scale);
    let num = scaled.numer();
    let den = scaled.denom();
    // ceil(sqrt(num/den)) <= (isqrt(num) + 1) / isqrt(den) in the worst case;
    // use floor sqrt of num*den over den to stay exact.
    let prod = num * den;
    let root = int_sqrt_floor(&prod) + Int::one();
    Rat::new(root, den << k)
}

/// Decimal rendering with a certified error bound: returns a string with
/// `digits` places and a bound 10^-digits on its distance from the midpoint.
pub fn decimal_of_rat(r: &Rat, digits: u32) -> String {
    let neg = r.is_negative();
    let a = r.abs();
    let pow: Int = Int::from(10u8).pow(digits);
    let scaled = &a * Rat::from_integer(pow.clone());
    // Round to nearest.
    let (q, rem) = scaled.numer().div_rem(scaled.denom());
    let q = if &(&rem * 2u8) >= scaled.denom() {
        q + Int::one()
    } else {
        q
    };
    let (ip, fp) = q.div_rem(&pow);
    let frac = fp.to_string();
    let pad = digits as usize - frac.len();
    let mut s = String::new();
    if neg && (!ip.is_zero() || !fp.is_zero()) {
        s.push('-');
    }
    s.push_str(&ip.to_string());
    if digits > 0 {
        s.push('.');
        for _ in 0..pad {
            s.push('0');
        }
        s.push_str(&frac);
    }
    s
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Fall back through string round trip only for pathological magnitudes.
        let n = r.numer().to_f64().unwrap_or(f64::MAX);
        let d = r.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

/// Parse "a" or "a/b" with optional leading minus into a rational.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: Int = num.parse().ok()?;
    let d: Int = den.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rat::new(n, d))
}

/// Canonical text for a rational: integer, or "n/d" in lowest terms.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
