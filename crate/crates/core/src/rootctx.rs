//! Arithmetic in Q(theta) for a real algebraic theta, with dynamic
//! splitting when the modulus turns out to be reducible.
//!
//! A context holds a monic squarefree modulus m and an interval isolating
//! exactly one real root theta. Elements are polynomial representatives in
//! theta; their meaning is the value at theta, so a representative stays
//! valid when the modulus later shrinks. Zero tests factor the modulus on
//! demand: gcd(m, e) splits m into the factor vanishing at theta and the
//! rest, and the context keeps whichever part still has theta as a root.
//! This decides e(theta) = 0 exactly without ever factoring over Q up
//! front.

use crate::algebraic::AlgebraicReal;
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::num::{sign_of, Int, Rat};
use crate::resultant::resultant;
use crate::unipoly::{gcd_vs_large, QPoly, ZPoly};
use num_integer::Integer;
use num_traits::{One, Zero};

/// Element of Q(theta): a polynomial representative evaluated at theta.
pub type El = QPoly;

#[derive(Debug, Clone)]
pub struct RootCtx {
    modulus: QPoly,
    isolator: Interval,
}

impl RootCtx {
    /// Context for a rational generator.
    pub fn rational(r: &Rat) -> RootCtx {
        let modulus = QPoly::from_coeffs(vec![-r.clone(), Rat::one()]);
        RootCtx {
            modulus,
            isolator: Interval::point(r.clone()),
        }
    }

    pub fn from_algebraic(a: &AlgebraicReal) -> RootCtx {
        RootCtx {
            modulus: a.minpoly().to_qpoly().monic(),
            isolator: a.isolator().clone(),
        }
    }

    /// Directly from a monic squarefree modulus and an isolator certified
    /// by the caller to contain exactly one real root, with non-root
    /// endpoints unless it is a point.
    pub fn new(modulus: QPoly, isolator: Interval) -> RootCtx {
        debug_assert!(modulus.deg().map_or(false, |d| d >= 1));
        RootCtx { modulus, isolator }
    }

    pub fn modulus(&self) -> &QPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.deg().unwrap()
    }

    pub fn isolator(&self) -> &Interval {
        &self.isolator
    }

    pub fn generator(&self) -> El {
        self.reduce(&QPoly::var())
    }

    pub fn from_rat(&self, r: &Rat) -> El {
        QPoly::constant(r.clone())
    }

    pub fn reduce(&self, e: &El) -> El {
        if e.deg().map_or(true, |d| d < self.degree()) {
            return e.clone();
        }
        e.divrem(&self.modulus).1
    }

    pub fn add(&self, a: &El, b: &El) -> El {
        a.add(b)
    }

    pub fn sub(&self, a: &El, b: &El) -> El {
        a.sub(b)
    }

    pub fn neg(&self, a: &El) -> El {
        a.neg()
    }

    pub fn scale(&self, a: &El, r: &Rat) -> El {
        a.scale(r)
    }

    pub fn mul(&self, a: &El, b: &El) -> El {
        self.reduce(&a.mul(b))
    }

    pub fn pow(&self, a: &El, k: u32) -> El {
        let mut acc = QPoly::constant(Rat::one());
        let mut base = self.reduce(a);
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Evaluate a rational-coefficient polynomial at an element.
    pub fn eval_qpoly(&self, p: &QPoly, at: &El) -> El {
        let mut acc = QPoly::zero();
        for c in p.coeffs().iter().rev() {
            acc = self.mul(&acc, at).add(&QPoly::constant(c.clone()));
        }
        acc
    }

    /// One bisection step on theta's isolator.
    pub fn refine(&mut self) {
        if self.isolator.is_point() {
            return;
        }
        let mid = self.isolator.mid();
        let sm = sign_of(&self.modulus.eval(&mid));
        if sm == 0 {
            self.isolator = Interval::point(mid);
            return;
        }
        let slo = sign_of(&self.modulus.eval(&self.isolator.lo));
        debug_assert_ne!(slo, 0);
        if slo != sm {
            self.isolator = Interval::new(self.isolator.lo.clone(), mid);
        } else {
            self.isolator = Interval::new(mid, self.isolator.hi.clone());
        }
    }

    /// Enclosure of the value of an element at theta.
    pub fn el_interval(&self, e: &El) -> Interval {
        self.reduce(e).eval_interval(&self.isolator)
    }

    /// Refine until the enclosure of e(theta) has width at most `width`.
    pub fn approx_el(&mut self, e: &El, width: &Rat) -> Interval {
        let e = self.reduce(e);
        loop {
            let iv = e.eval_interval(&self.isolator);
            if iv.width() <= *width {
                return iv;
            }
            self.refine();
        }
    }

    /// Exact zero test; may shrink the modulus.
    pub fn is_zero_el(&mut self, e: &El) -> bool {
        let red = self.reduce(e);
        if red.is_zero() {
            return true;
        }
        if self.degree() == 1 {
            // red is a nonzero constant (the exact value).
            return false;
        }
        // A sign-definite enclosure settles nonzero without the integer
        // gcd below, which dominates at large modulus degrees.
        for _ in 0..16 {
            if red.eval_interval(&self.isolator).sign().is_some() {
                return false;
            }
            self.refine();
        }
        let g = QPoly::gcd(&self.modulus, &red);
        if g.deg() == Some(0) {
            return false;
        }
        let g = g.monic();
        let gz = g.to_primitive_z();
        let vanishes = if self.isolator.is_point() {
            gz.eval_rat(&self.isolator.lo).is_zero()
        } else {
            // Isolator endpoints are non-roots of the modulus, hence of g.
            gz.count_roots_closed(&self.isolator.lo, &self.isolator.hi) > 0
        };
        if vanishes {
            self.modulus = g;
            true
        } else {
            self.modulus = self.modulus.exact_div(&g).monic();
            false
        }
    }

    /// Exact sign of e(theta).
    pub fn sign_el(&mut self, e: &El) -> i32 {
        let red = self.reduce(e);
        if red.is_zero() {
            return 0;
        }
        for _ in 0..8 {
            if let Some(s) = red.eval_interval(&self.isolator).sign() {
                return s;
            }
            self.refine();
        }
        if self.is_zero_el(&red) {
            return 0;
        }
        loop {
            if let Some(s) = self.reduce(&red).eval_interval(&self.isolator).sign() {
                return s;
            }
            self.refine();
        }
    }

    /// Exact sign of p(theta) for an integer polynomial of any degree,
    /// without ever forming its rational remainder modulo the modulus:
    /// a large degree gap gives that remainder a denominator of lc to
    /// the power of the gap, so the reduction runs through residues
    /// instead. May shrink the modulus. The interval budget before the
    /// exact phase is generous because one round here costs a fraction
    /// of the certified gcd.
    pub fn sign_zpoly(&mut self, p: &ZPoly) -> i32 {
        if p.is_zero() {
            return 0;
        }
        if self.degree() == 1 {
            // Rational theta: monic t + c has root -c.
            return p.sign_at(&-self.modulus.coeff(0));
        }
        for _ in 0..24 {
            if let Some(s) = p.eval_interval(&self.isolator).sign() {
                return s;
            }
            self.refine();
        }
        let mz = self.modulus.to_primitive_z();
        match gcd_vs_large(&mz, p) {
            Some(g) if g.deg() == Some(0) => {
                // Coprime to the modulus: nonzero at every root of m.
            }
            Some(g) => {
                let vanishes = if self.isolator.is_point() {
                    g.eval_rat(&self.isolator.lo).is_zero()
                } else {
                    g.count_roots_closed(&self.isolator.lo, &self.isolator.hi) > 0
                };
                if vanishes {
                    // theta roots the common factor, which divides p.
                    self.modulus = g.to_qpoly().monic();
                    return 0;
                }
                // theta roots the cofactor; every common zero of m and p
                // roots g, so p(theta) is nonzero.
                self.modulus = mz.exact_div(&g).to_qpoly().monic();
            }
            None => {
                // Prime budget exhausted: rational arithmetic decides.
                let red = self.reduce(&p.to_qpoly());
                return self.sign_el(&red);
            }
        }
        loop {
            if let Some(s) = p.eval_interval(&self.isolator).sign() {
                return s;
            }
            self.refine();
        }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv_el(&mut self, e: &El) -> Result<El> {
        if self.is_zero_el(e) {
            return Err(Error::Internal(
                "division by zero in algebraic context".into(),
            ));
        }
        let mut red = self.reduce(e);
        loop {
            match half_inverse(&self.modulus, &red) {
                HalfInv::Inv(v) => return Ok(self.reduce(&v)),
                HalfInv::CommonFactor(g) => {
                    // e is nonzero at theta, so theta roots the cofactor;
                    // the modulus is squarefree, so the cofactor is
                    // coprime to e and the retry makes progress.
                    self.modulus = self.modulus.exact_div(&g.monic()).monic();
                    red = self.reduce(&red);
                }
            }
        }
    }

    pub fn div_el(&mut self, a: &El, b: &El) -> Result<El> {
        let bi = self.inv_el(b)?;
        Ok(self.mul(a, &bi))
    }

    /// The exact value of an element as a self-contained algebraic number.
    pub fn to_algebraic(&mut self, e: &El) -> AlgebraicReal {
        let red = self.reduce(e);
        if red.is_zero() {
            return AlgebraicReal::from_rational(Rat::zero());
        }
        if red.deg() == Some(0) {
            return AlgebraicReal::from_rational(red.coeff(0));
        }
        let n = self.degree();
        // Power sums of the modulus roots via Newton's identities.
        let m = &self.modulus;
        let mut p = vec![Rat::zero(); n];
        p[0] = Rat::from_integer(Int::from(n as i64));
        for k in 1..n {
            let mut acc = m.coeff(n - k) * Rat::from_integer(Int::from(k as i64));
            for i in 1..k {
                acc += m.coeff(n - i) * p[k - i].clone();
            }
            p[k] = -acc;
        }
        // Traces of e, e^2, ..., e^n.
        let mut traces = vec![Rat::zero(); n + 1];
        let mut ej = QPoly::constant(Rat::one());
        for t in traces.iter_mut().skip(1) {
            ej = self.mul(&ej, &red);
            let mut acc = Rat::zero();
            for (i, ps) in p.iter().enumerate() {
                acc += ej.coeff(i) * ps.clone();
            }
            *t = acc;
        }
        // Characteristic polynomial of e from its power sums.
        let mut b = vec![Rat::zero(); n + 1];
        b[n] = Rat::one();
        for k in 1..=n {
            let mut acc = traces[k].clone();
            for i in 1..k {
                acc += b[n - i].clone() * traces[k - i].clone();
            }
            b[n - k] = -acc / Rat::from_integer(Int::from(k as i64));
        }
        let charpoly = QPoly::from_coeffs(b);
        let cz = charpoly.to_primitive_z().squarefree_part();
        let mut candidates = AlgebraicReal::roots_of(&cz);
        debug_assert!(!candidates.is_empty());
        loop {
            let iv = self.el_interval(&red);
            let mut hits: Vec<usize> = Vec::new();
            for (i, c) in candidates.iter().enumerate() {
                if !c.isolator().disjoint(&iv) {
                    hits.push(i);
                }
            }
            if hits.len() == 1 {
                return candidates.swap_remove(hits[0]);
            }
            // e(theta) is exactly one of the candidates; shrink both sides
            // until the others fall away.
            self.refine();
            for i in hits {
                candidates[i].refine_step();
            }
        }
    }

    /// The exact value of num(theta) / den(theta) as an algebraic number,
    /// without ever forming den^(-1): the inverse of an element in a
    /// high-degree context has enormous coefficients, while the value
    /// itself is a root of Res_t(m(t), den(t)*Y - num(t)). That resultant
    /// is obtained by evaluating Y and interpolating, which keeps every
    /// elimination univariate.
    pub fn to_algebraic_fraction(&mut self, num: &El, den: &El) -> Result<AlgebraicReal> {
        if self.is_zero_el(den) {
            return Err(Error::Internal(
                "division by zero in algebraic context".into(),
            ));
        }
        let mut num = self.reduce(num);
        let mut den = self.reduce(den);
        if num.is_zero() {
            return Ok(AlgebraicReal::from_rational(Rat::zero()));
        }
        // den does not vanish at theta, so theta survives in the cofactor
        // of any factor shared with den; stripping it makes the resultant
        // below nonzero.
        let g = QPoly::gcd(&self.modulus, &den).monic();
        if g.deg().map_or(false, |d| d >= 1) {
            self.modulus = self.modulus.exact_div(&g).monic();
            num = self.reduce(&num);
            den = self.reduce(&den);
        }
        if num.deg() == Some(0) && den.deg() == Some(0) {
            return Ok(AlgebraicReal::from_rational(num.coeff(0) / den.coeff(0)));
        }
        let n = self.degree();
        let mv: Vec<QPoly> = self
            .modulus
            .coeffs()
            .iter()
            .map(|c| QPoly::constant(c.clone()))
            .collect();
        // The top t-coefficient of den*Y - num must not drop at a sample,
        // or the evaluated resultant is not the specialized one; at most
        // one sample value is bad.
        let lt = num.deg().unwrap_or(0).max(den.deg().unwrap_or(0));
        let bad = |y: &Rat| den.coeff(lt) * y == num.coeff(lt);
        let mut samples: Vec<(Rat, Rat)> = Vec::with_capacity(n + 1);
        let mut next: i64 = 0;
        while samples.len() < n + 1 {
            let y = Rat::from_integer(Int::from(next));
            next = if next > 0 { -next } else { -next + 1 };
            if bad(&y) {
                continue;
            }
            let gt = den.scale(&y).sub(&num);
            let gv: Vec<QPoly> = gt
                .coeffs()
                .iter()
                .map(|c| QPoly::constant(c.clone()))
                .collect();
            let r = resultant(&mv, &gv);
            samples.push((y, r.coeff(0)));
        }
        let charpoly = lagrange(&samples);
        if charpoly.is_zero() {
            return Err(Error::Internal("vanishing eliminant of a fraction".into()));
        }
        let cz = charpoly.to_primitive_z().squarefree_part();
        let mut candidates = AlgebraicReal::roots_of(&cz);
        debug_assert!(!candidates.is_empty());
        loop {
            let di = self.el_interval(&den);
            let iv = match di.sign() {
                Some(_) => self
                    .el_interval(&num)
                    .div(&di)
                    .expect("sign-definite denominator"),
                None => {
                    self.refine();
                    continue;
                }
            };
            let mut hits: Vec<usize> = Vec::new();
            for (i, c) in candidates.iter().enumerate() {
                if !c.isolator().disjoint(&iv) {
                    hits.push(i);
                }
            }
            if hits.len() == 1 {
                return Ok(candidates.swap_remove(hits[0]));
            }
            self.refine();
            for i in hits {
                candidates[i].refine_step();
            }
        }
    }
}

/// Interpolate the polynomial of degree < points.len() through the given
/// (x, value) pairs.
fn lagrange(points: &[(Rat, Rat)]) -> QPoly {
    let mut acc = QPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = QPoly::constant(Rat::one());
        let mut denom = Rat::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = basis.mul(&QPoly::from_coeffs(vec![-xj.clone(), Rat::one()]));
            denom *= xi - xj;
        }
        acc = acc.add(&basis.scale(&(yi / denom)));
    }
    acc
}

enum HalfInv {
    Inv(QPoly),
    CommonFactor(QPoly),
}

/// Inverse of e modulo m by a half-extended Euclid. Remainder rows are
/// rescaled to primitive integer form at every step (the cofactor row
/// scales along, preserving t*e = r mod m), which keeps coefficient
/// growth polynomial; the naive rational recurrence explodes already
/// around degree fifty. A nonconstant gcd is reported instead of an
/// inverse, so the caller can split its modulus; no separate gcd
/// computation is needed up front.
fn half_inverse(m: &QPoly, e: &QPoly) -> HalfInv {
    let mut r0 = m.clone();
    let mut t0 = QPoly::zero();
    let ci = e.rational_content().recip();
    let mut r1 = e.scale(&ci);
    let mut t1 = QPoly::constant(ci);
    while r1.deg().map_or(false, |d| d >= 1) {
        let (q, r) = r0.divrem(&r1);
        if r.is_zero() {
            return HalfInv::CommonFactor(r1);
        }
        let t = t0.sub(&q.mul(&t1));
        let ci = r.rational_content().recip();
        r0 = std::mem::replace(&mut r1, r.scale(&ci));
        t0 = std::mem::replace(&mut t1, t.scale(&ci));
    }
    HalfInv::Inv(t1.scale(&(Rat::one() / r1.coeff(0))))
}

// --- Polynomials with coefficients in Q(theta) ----------------------------

/// Coefficient list indexed by power; coefficients are context elements.
pub type CPoly = Vec<El>;

/// Divide out the joint rational content of all coefficient
/// representatives. A gcd computation is free to rescale its rows by
/// rationals, and doing so keeps the integer sizes flat.
pub fn cp_normalize(p: &mut CPoly) {
    let mut joint = Rat::zero();
    for el in p.iter() {
        if el.is_zero() {
            continue;
        }
        let c = el.rational_content();
        joint = if joint.is_zero() {
            c
        } else {
            rat_gcd(&joint, &c)
        };
    }
    if joint.is_zero() || joint.is_one() {
        return;
    }
    let ci = joint.recip();
    for el in p.iter_mut() {
        *el = el.scale(&ci);
    }
}

/// gcd on positive rationals: gcd of numerators over lcm of denominators.
fn rat_gcd(a: &Rat, b: &Rat) -> Rat {
    Rat::new(
        a.numer().gcd(b.numer()),
        a.denom().lcm(b.denom()),
    )
}

pub fn cp_from_qpoly(q: &QPoly) -> CPoly {
    q.coeffs()
        .iter()
        .map(|c| QPoly::constant(c.clone()))
        .collect()
}

/// Strip value-zero leading coefficients. Must be the only way degree is
/// established: a representative can be a nonzero polynomial yet denote
/// zero.
pub fn cp_trim(ctx: &mut RootCtx, p: &mut CPoly) {
    while let Some(last) = p.last() {
        if ctx.is_zero_el(last) {
            p.pop();
        } else {
            break;
        }
    }
}

/// Degree of a trimmed polynomial.
pub fn cp_deg(p: &CPoly) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub fn cp_is_zero(ctx: &mut RootCtx, p: &CPoly) -> bool {
    p.iter().all(|c| ctx.is_zero_el(c))
}

pub fn cp_monic(ctx: &mut RootCtx, p: &CPoly) -> Result<CPoly> {
    let lc = p.last().expect("monic of zero polynomial");
    let inv = ctx.inv_el(lc)?;
    Ok(p.iter().map(|c| ctx.mul(c, &inv)).collect())
}

pub fn cp_derivative(ctx: &RootCtx, p: &CPoly) -> CPoly {
    let mut out = Vec::new();
    for (i, c) in p.iter().enumerate().skip(1) {
        out.push(ctx.scale(c, &Rat::from_integer(Int::from(i as i64))));
    }
    out
}

pub fn cp_eval(ctx: &RootCtx, p: &CPoly, at: &El) -> El {
    let mut acc = QPoly::zero();
    for c in p.iter().rev() {
        acc = ctx.mul(&acc, at).add(c);
    }
    ctx.reduce(&acc)
}

pub fn cp_mul(ctx: &RootCtx, a: &CPoly, b: &CPoly) -> CPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![QPoly::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        for (j, cb) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&ctx.mul(ca, cb));
        }
    }
    out
}

pub fn cp_sub(_ctx: &RootCtx, a: &CPoly, b: &CPoly) -> CPoly {
    let mut out = a.clone();
    if out.len() < b.len() {
        out.resize(b.len(), QPoly::zero());
    }
    for (i, cb) in b.iter().enumerate() {
        out[i] = out[i].sub(cb);
    }
    out
}

/// Remainder of a by b, where b must be trimmed; the quotient is not
/// returned. The divisor's leading coefficient is inverted, so the result
/// is an honest remainder, not a pseudo-remainder.
pub fn cp_rem(ctx: &mut RootCtx, a: &CPoly, b: &CPoly) -> Result<CPoly> {
    let db = cp_deg(b).expect("division by zero polynomial");
    let lc_inv = ctx.inv_el(&b[db])?;
    let mut r = a.clone();
    cp_trim(ctx, &mut r);
    while let Some(dr) = cp_deg(&r) {
        if dr < db {
            break;
        }
        let q = ctx.mul(&r[dr], &lc_inv);
        for i in 0..=db {
            let t = ctx.mul(&q, &b[i]);
            r[dr - db + i] = r[dr - db + i].sub(&t);
        }
        r.truncate(dr);
        cp_trim(ctx, &mut r);
    }
    Ok(r)
}

/// Monic gcd over Q(theta); zero tests along the way may split the
/// context.
pub fn cp_gcd(ctx: &mut RootCtx, a: &CPoly, b: &CPoly) -> Result<CPoly> {
    let mut f = a.clone();
    let mut g = b.clone();
    cp_trim(ctx, &mut f);
    cp_trim(ctx, &mut g);
    if f.is_empty() {
        return if g.is_empty() { Ok(g) } else { cp_monic(ctx, &g) };
    }
    if g.is_empty() {
        return cp_monic(ctx, &f);
    }
    if cp_deg(&f) < cp_deg(&g) {
        std::mem::swap(&mut f, &mut g);
    }
    cp_normalize(&mut f);
    cp_normalize(&mut g);
    loop {
        let mut r = cp_rem(ctx, &f, &g)?;
        cp_trim(ctx, &mut r);
        if r.is_empty() {
            return cp_monic(ctx, &g);
        }
        cp_normalize(&mut r);
        f = g;
        g = r;
    }
}

/// Product of distinct factors: p / gcd(p, p').
pub fn cp_squarefree(ctx: &mut RootCtx, p: &CPoly) -> Result<CPoly> {
    let mut p = p.clone();
    cp_trim(ctx, &mut p);
    if cp_deg(&p).map_or(true, |d| d == 0) {
        return Ok(p);
    }
    let dp = cp_derivative(ctx, &p);
    let g = cp_gcd(ctx, &p, &dp)?;
    if cp_deg(&g) == Some(0) {
        return cp_monic(ctx, &p);
    }
    let q = cp_exact_div(ctx, &p, &g)?;
    cp_monic(ctx, &q)
}

/// Exact division; the remainder is checked to vanish.
pub fn cp_exact_div(ctx: &mut RootCtx, a: &CPoly, b: &CPoly) -> Result<CPoly> {
    let db = cp_deg(b).expect("division by zero polynomial");
    let lc_inv = ctx.inv_el(&b[db])?;
    let mut r = a.clone();
    cp_trim(ctx, &mut r);
    let da = match cp_deg(&r) {
        None => return Ok(Vec::new()),
        Some(d) => d,
    };
    if da < db {
        return Err(Error::Internal("inexact polynomial division".into()));
    }
    let mut q = vec![QPoly::zero(); da - db + 1];
    while let Some(dr) = cp_deg(&r) {
        if dr < db {
            break;
        }
        let qk = ctx.mul(&r[dr], &lc_inv);
        for i in 0..=db {
            let t = ctx.mul(&qk, &b[i]);
            r[dr - db + i] = r[dr - db + i].sub(&t);
        }
        q[dr - db] = qk;
        r.truncate(dr);
        cp_trim(ctx, &mut r);
    }
    if !r.is_empty() {
        return Err(Error::Internal("inexact polynomial division".into()));
    }
    Ok(q)
}

// --- Real root adjunction -------------------------------------------------

/// A real root of a polynomial over Q(theta), packaged with a context that
/// contains both the root and the old generator.
#[derive(Debug, Clone)]
pub struct Adjoined {
    pub ctx: RootCtx,
    /// The old generator theta expressed in the new context.
    pub theta: El,
    /// The adjoined root.
    pub root: El,
}

impl Adjoined {
    /// Map an element of the old context into the new one.
    pub fn lift(&self, e: &El) -> El {
        self.ctx.eval_qpoly(e, &self.theta)
    }
}

pub fn binomial(n: usize, k: usize) -> Int {
    let mut num = Int::one();
    let mut den = Int::one();
    for i in 0..k {
        num *= Int::from((n - i) as i64);
        den *= Int::from((i + 1) as i64);
    }
    num / den
}

/// All real roots of q (a polynomial over the context) in ascending order.
///
/// Each returned root lives in a fresh context generated by a primitive
/// element w = c + s*theta; both the root c and theta are elements there.
/// The minimal polynomial of w over Q is found by elimination, and s is
/// chosen so that it is squarefree, which forces every real root of it to
/// arise from exactly one real pair (theta, c): a complex pair contributing
/// a real w would make that w a repeated root.
pub fn adjoin_real_roots(ctx: &RootCtx, q: &[El]) -> Result<Vec<Adjoined>> {
    let mut work = ctx.clone();
    let mut p: CPoly = q.iter().map(|e| work.reduce(e)).collect();
    cp_trim(&mut work, &mut p);
    if p.is_empty() {
        return Err(Error::Internal(
            "root adjunction of the zero polynomial".into(),
        ));
    }
    if cp_deg(&p) == Some(0) {
        return Ok(Vec::new());
    }
    let p = cp_squarefree(&mut work, &p)?;

    if work.degree() == 1 {
        return adjoin_over_rational(&work, &p);
    }

    let n = work.degree();
    let d = cp_deg(&p).unwrap();
    for try_idx in 0..32u32 {
        let s: i64 = if try_idx % 2 == 0 {
            (try_idx as i64) / 2 + 1
        } else {
            -((try_idx as i64) / 2 + 1)
        };
        // B(t, u) = sum_i q_i(u) (t - s u)^i, as a polynomial in u with
        // coefficients in Q[t].
        let mut b: Vec<QPoly> = vec![QPoly::zero(); n + d];
        for (i, qi) in p.iter().enumerate() {
            for j in 0..=i {
                let coef = Rat::from_integer(binomial(i, j) * Int::from(-s).pow(j as u32));
                // contributes coef * t^(i-j) * u^(j + k) for each u^k in qi
                for (k, c) in qi.coeffs().iter().enumerate() {
                    let upow = j + k;
                    if b.len() <= upow {
                        b.resize(upow + 1, QPoly::zero());
                    }
                    let term = QPoly::monomial(i - j, c * &coef);
                    b[upow] = b[upow].add(&term);
                }
            }
        }
        let m_cp: Vec<QPoly> = work
            .modulus()
            .coeffs()
            .iter()
            .map(|c| QPoly::constant(c.clone()))
            .collect();
        let mw = resultant(&m_cp, &b);
        if mw.deg().map_or(true, |dm| dm == 0) {
            continue;
        }
        let mz = mw.to_primitive_z();
        if crate::unipoly::ZPoly::gcd(&mz, &mz.derivative())
            .deg()
            .map_or(false, |dg| dg > 0)
        {
            continue;
        }
        match adjoin_with_primitive_element(&work, &b, s, &mz) {
            Ok(Some(out)) => return Ok(out),
            Ok(None) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Internal(
        "primitive element search exhausted".into(),
    ))
}

fn adjoin_over_rational(work: &RootCtx, p: &CPoly) -> Result<Vec<Adjoined>> {
    // Monic linear modulus u + a0 pins theta = -a0.
    let theta = -work.modulus().coeff(0);
    let vals: Vec<Rat> = p.iter().map(|e| work.reduce(e).coeff(0)).collect();
    let qq = QPoly::from_coeffs(vals);
    let qz = qq.to_primitive_z();
    let roots = AlgebraicReal::roots_of(&qz.squarefree_part());
    let mut out = Vec::new();
    for r in roots {
        let ctx = RootCtx::from_algebraic(&r);
        let root = ctx.generator();
        out.push(Adjoined {
            theta: QPoly::constant(theta.clone()),
            root,
            ctx,
        });
    }
    Ok(out)
}

/// One attempt at a given shift s with squarefree eliminant mz. Returns
/// None to request the next s (structural degeneracy), a list otherwise.
/// `b` is B(t, u) as a polynomial in u with coefficients in Q[t].
fn adjoin_with_primitive_element(
    work: &RootCtx,
    b: &[QPoly],
    s: i64,
    mz: &crate::unipoly::ZPoly,
) -> Result<Option<Vec<Adjoined>>> {
    let wroots = AlgebraicReal::roots_of(mz);
    let srat = Rat::from_integer(Int::from(s));
    let mut out: Vec<Adjoined> = Vec::new();
    for w in &wroots {
        let mut cx = RootCtx::from_algebraic(w);
        // The generator of cx is w, so a coefficient in Q[t] becomes an
        // element by reduction.
        let gen = cx.generator();
        let bw: CPoly = b.iter().map(|c| cx.reduce(c)).collect();
        let m_cp = cp_from_qpoly(work.modulus());
        let h = cp_gcd(&mut cx, &m_cp, &bw)?;
        if cp_deg(&h) != Some(1) {
            // With a squarefree eliminant this cannot happen for a true
            // root; treat as a degenerate s and retry.
            return Ok(None);
        }
        let theta_new = {
            let neg = cx.neg(&h[0]);
            cx.div_el(&neg, &h[1])?
        };
        // Accept only roots whose theta matches our theta: theta_new is a
        // root of the old modulus, and the old isolator contains exactly
        // one of those, so containment decides and disjointness refutes.
        // The old isolator stays fixed; only the enclosure of theta_new
        // shrinks, so one of the two outcomes must occur.
        let it = work.isolator().clone();
        let matches = if it.is_point() {
            // Rational theta: settle exactly rather than by shrinking.
            let diff = theta_new.sub(&QPoly::constant(it.lo.clone()));
            cx.is_zero_el(&diff)
        } else {
            loop {
                let jv = cx.el_interval(&theta_new);
                if jv.disjoint(&it) {
                    break false;
                }
                if it.lo <= jv.lo && jv.hi <= it.hi {
                    break true;
                }
                cx.refine();
            }
        };
        if !matches {
            continue;
        }
        let root = {
            let st = cx.scale(&theta_new, &srat);
            cx.sub(&gen, &st)
        };
        out.push(Adjoined {
            ctx: cx,
            theta: theta_new,
            root,
        });
    }
    // Ascending order of the root value; roots are pairwise distinct.
    sort_adjoined(&mut out);
    Ok(Some(out))
}

fn sort_adjoined(items: &mut [Adjoined]) {
    items.sort_by(|a, b| {
        let mut ca = a.ctx.clone();
        let mut cb = b.ctx.clone();
        let mut width = Rat::new(Int::one(), Int::from(16));
        for _ in 0..128 {
            let ia = ca.approx_el(&a.root, &width);
            let ib = cb.approx_el(&b.root, &width);
            if ia.hi < ib.lo {
                return std::cmp::Ordering::Less;
            }
            if ib.hi < ia.lo {
                return std::cmp::Ordering::Greater;
            }
            width = width / Rat::from_integer(Int::from(4));
        }
        let va = ca.to_algebraic(&a.root);
        let vb = cb.to_algebraic(&b.root);
        va.cmp(&vb)
    });
}

/// Theta-match test used when an adjunction must be checked against an
/// externally supplied value.
pub fn el_equals_algebraic(ctx: &mut RootCtx, e: &El, v: &AlgebraicReal) -> bool {
    ctx.to_algebraic(e) == *v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, rat_int};
    use crate::unipoly::ZPoly;

    fn sqrt2_ctx() -> RootCtx {
        let m = QPoly::from_coeffs(vec![rat(-2, 1), rat(0, 1), rat(1, 1)]);
        RootCtx::new(m, Interval::new(rat(1, 1), rat(2, 1)))
    }

    #[test]
    fn sign_zpoly_without_rational_reduction() {
        // Multiples of the modulus vanish; shifted ones pick up the sign
        // of the shift, however large the degree.
        let mut cx = sqrt2_ctx();
        let m2 = ZPoly::from_i64(&[-2, 0, 1]);
        let mut qc = vec![0i64; 38];
        qc[0] = 3;
        qc[37] = 1;
        let big = m2.mul(&ZPoly::from_i64(&qc));
        assert_eq!(cx.sign_zpoly(&big), 0);
        assert_eq!(cx.sign_zpoly(&big.add(&ZPoly::from_i64(&[7]))), 1);
        assert_eq!(cx.sign_zpoly(&big.sub(&ZPoly::from_i64(&[0, 1]))), -1);
        // A factor vanishing at sqrt(2) inside a reducible modulus
        // splits it down to that factor.
        let m6 = QPoly::from_coeffs(vec![rat(12, 1), rat(0, 1), rat(-8, 1), rat(0, 1), rat(1, 1)]);
        let mut cx = RootCtx::new(m6, Interval::new(rat(1, 1), rat(3, 2)));
        let v = m2.mul(&ZPoly::from_i64(&qc));
        assert_eq!(cx.sign_zpoly(&v), 0);
        assert_eq!(cx.degree(), 2);
        // Rational context: plain evaluation.
        let mut cx = RootCtx::rational(&rat(-3, 1));
        assert_eq!(cx.sign_zpoly(&ZPoly::from_i64(&[1, 1])), -1);
    }

    #[test]
    fn rational_context_arithmetic() {
        let mut cx = RootCtx::rational(&rat(3, 1));
        let g = cx.generator();
        assert_eq!(g, QPoly::constant(rat(3, 1)));
        let e = cx.mul(&g, &g);
        assert_eq!(e, QPoly::constant(rat(9, 1)));
        assert_eq!(cx.sign_el(&e), 1);
        assert!(cx.is_zero_el(&cx.sub(&e, &QPoly::constant(rat(9, 1)))));
    }

    #[test]
    fn sqrt2_arithmetic_and_inverse() {
        let mut cx = sqrt2_ctx();
        let t = cx.generator();
        let sq = cx.mul(&t, &t);
        assert!(cx.is_zero_el(&sq.sub(&QPoly::constant(rat(2, 1)))));
        // (1 + sqrt2)^(-1) = sqrt2 - 1
        let e = t.add(&QPoly::constant(rat(1, 1)));
        let inv = cx.inv_el(&e).unwrap();
        let want = t.sub(&QPoly::constant(rat(1, 1)));
        assert!(cx.is_zero_el(&inv.sub(&want)));
        assert_eq!(cx.sign_el(&want), 1);
        assert_eq!(cx.sign_el(&t.sub(&QPoly::constant(rat(3, 2)))), -1);
    }

    #[test]
    fn reducible_modulus_splits() {
        // (u^2-2)(u^2-3) with the isolator around sqrt(2)
        let m = QPoly::from_coeffs(vec![rat(6, 1), rat(0, 1), rat(-5, 1), rat(0, 1), rat(1, 1)]);
        let iso = Interval::new(rat(13, 10), rat(29, 20));
        let mut cx = RootCtx::new(m.clone(), iso.clone());
        let u2m2 = QPoly::from_coeffs(vec![rat(-2, 1), rat(0, 1), rat(1, 1)]);
        assert!(cx.is_zero_el(&u2m2));
        assert_eq!(cx.degree(), 2);
        // Fresh context: a non-vanishing element is decided without any
        // obligation to split (intervals suffice), but its sign and an
        // inverse still come out right over the full modulus.
        let mut cx2 = RootCtx::new(m, iso);
        let u2m3 = QPoly::from_coeffs(vec![rat(-3, 1), rat(0, 1), rat(1, 1)]);
        assert!(!cx2.is_zero_el(&u2m3));
        assert_eq!(cx2.sign_el(&u2m3), -1);
        let inv = cx2.inv_el(&u2m3).unwrap();
        let prod = cx2.mul(&inv, &u2m3);
        assert!(cx2.is_zero_el(&prod.sub(&QPoly::constant(rat(1, 1)))));
    }

    #[test]
    fn to_algebraic_of_shifted_generator() {
        let mut cx = sqrt2_ctx();
        let e = cx.generator().add(&QPoly::constant(rat(1, 1)));
        let a = cx.to_algebraic(&e);
        // minpoly x^2 - 2x - 1
        assert_eq!(
            a.minpoly(),
            &ZPoly::from_i64(&[-1, -2, 1])
        );
        let (dec, _) = a.decimal(6);
        assert_eq!(dec, "2.414214");
    }

    #[test]
    fn cp_gcd_common_root() {
        // gcd((c - theta)(c + 2), (c - theta)(c - 5)) = c - theta over Q(sqrt2)
        let mut cx = sqrt2_ctx();
        let t = cx.generator();
        let lin_theta = vec![cx.neg(&t), QPoly::constant(rat(1, 1))];
        let lin2 = vec![QPoly::constant(rat(2, 1)), QPoly::constant(rat(1, 1))];
        let lin5 = vec![QPoly::constant(rat(-5, 1)), QPoly::constant(rat(1, 1))];
        let a = cp_mul(&cx, &lin_theta, &lin2);
        let b = cp_mul(&cx, &lin_theta, &lin5);
        let g = cp_gcd(&mut cx, &a, &b).unwrap();
        assert_eq!(cp_deg(&g), Some(1));
        // monic: g = c - theta
        assert!(cx.is_zero_el(&g[0].add(&t)));
    }

    #[test]
    fn adjoin_over_rational_ctx() {
        let cx = RootCtx::rational(&rat(3, 1));
        // c^2 - 2
        let q = vec![
            QPoly::constant(rat(-2, 1)),
            QPoly::zero(),
            QPoly::constant(rat(1, 1)),
        ];
        let roots = adjoin_real_roots(&cx, &q).unwrap();
        assert_eq!(roots.len(), 2);
        let mut c0 = roots[0].ctx.clone();
        let mut c1 = roots[1].ctx.clone();
        let v0 = c0.to_algebraic(&roots[0].root);
        let v1 = c1.to_algebraic(&roots[1].root);
        let expect = AlgebraicReal::roots_of(&ZPoly::from_i64(&[-2, 0, 1]));
        assert_eq!(v0, expect[0]);
        assert_eq!(v1, expect[1]);
        // theta is carried over
        let th = c0.to_algebraic(&roots[0].theta);
        assert_eq!(th, AlgebraicReal::from_rational(rat(3, 1)));
    }

    #[test]
    fn adjoin_fourth_root_of_two() {
        // c^2 - theta over Q(sqrt2): roots +- 2^(1/4)
        let cx = sqrt2_ctx();
        let q = vec![
            cx.neg(&cx.generator()),
            QPoly::zero(),
            QPoly::constant(rat(1, 1)),
        ];
        let roots = adjoin_real_roots(&cx, &q).unwrap();
        assert_eq!(roots.len(), 2);
        let expect = AlgebraicReal::roots_of(&ZPoly::from_i64(&[-2, 0, 0, 0, 1]));
        assert_eq!(expect.len(), 2);
        for (adj, want) in roots.iter().zip(expect.iter()) {
            let mut c = adj.ctx.clone();
            assert_eq!(c.to_algebraic(&adj.root), *want);
            // theta must map to sqrt(2) in every branch
            let th = c.to_algebraic(&adj.theta);
            let s2 = AlgebraicReal::roots_of(&ZPoly::from_i64(&[-2, 0, 1]));
            assert_eq!(th, s2[1]);
        }
    }

    #[test]
    fn adjoin_with_repeated_factor() {
        // (c - theta)^2 (c + 1) over Q(sqrt2): roots sqrt2 and -1
        let cx = sqrt2_ctx();
        let t = cx.generator();
        let c2 = QPoly::constant(rat(2, 1));
        // expanded: c^3 + (1 - 2 theta) c^2 + (2 - 2 theta) c + 2
        // (using theta^2 = 2)
        let q = vec![
            c2.clone(),
            c2.sub(&t.scale(&rat(2, 1))),
            QPoly::constant(rat(1, 1)).sub(&t.scale(&rat(2, 1))),
            QPoly::constant(rat(1, 1)),
        ];
        let roots = adjoin_real_roots(&cx, &q).unwrap();
        assert_eq!(roots.len(), 2);
        let mut ca = roots[0].ctx.clone();
        assert_eq!(
            ca.to_algebraic(&roots[0].root),
            AlgebraicReal::from_rational(rat(-1, 1))
        );
        let mut cb = roots[1].ctx.clone();
        let s2 = AlgebraicReal::roots_of(&ZPoly::from_i64(&[-2, 0, 1]));
        assert_eq!(cb.to_algebraic(&roots[1].root), s2[1]);
    }

    #[test]
    fn lift_maps_old_elements() {
        let cx = sqrt2_ctx();
        let q = vec![
            cx.neg(&cx.generator()),
            QPoly::zero(),
            QPoly::constant(rat(1, 1)),
        ];
        let roots = adjoin_real_roots(&cx, &q).unwrap();
        // Lift theta + 1 and check value = sqrt2 + 1.
        let e = cx.generator().add(&QPoly::constant(rat(1, 1)));
        for adj in &roots {
            let le = adj.lift(&e);
            let mut c = adj.ctx.clone();
            let got = c.to_algebraic(&le);
            assert_eq!(got.minpoly(), &ZPoly::from_i64(&[-1, -2, 1]));
        }
    }

    #[test]
    fn approx_and_interval() {
        let mut cx = sqrt2_ctx();
        let e = cx.generator();
        let iv = cx.approx_el(&e, &rat(1, 1000));
        assert!(iv.width() <= rat(1, 1000));
        assert!(iv.contains(&rat(7071, 5000)) || iv.lo <= rat(7072, 5000));
    }

    #[test]
    fn division_by_zero_is_detected() {
        let mut cx = sqrt2_ctx();
        let sq = cx.mul(&cx.generator(), &cx.generator());
        let z = sq.sub(&QPoly::constant(rat(2, 1)));
        assert!(cx.inv_el(&z).is_err());
    }

    #[test]
    fn eval_qpoly_matches_compose() {
        let mut cx = sqrt2_ctx();
        // p(v) = v^2 - 2 at v = theta gives 0
        let p = QPoly::from_coeffs(vec![rat(-2, 1), rat(0, 1), rat(1, 1)]);
        let v = cx.eval_qpoly(&p, &cx.generator());
        assert!(cx.is_zero_el(&v));
        // p at v = theta + 1: (theta+1)^2 - 2 = 2 theta + 1
        let v2 = cx.eval_qpoly(&p, &cx.generator().add(&QPoly::constant(rat_int(1))));
        let want = cx.generator().scale(&rat(2, 1)).add(&QPoly::constant(rat_int(1)));
        assert!(cx.is_zero_el(&v2.sub(&want)));
    }
}
