//! Exact bivariate polynomials over Q, plus the homogeneous trivariate form
//! used for localization at the line at infinity.
//!
//! The Milnor-set constructions live here: the Jacobian determinant against
//! a shifted squared-distance function, squarefree reduction, and chart
//! localization. The determinant row convention is fixed once and for all as
//! f_x * g_y - f_y * g_x; every sign rule downstream is stated against it.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::num::{rat_to_string, sign_of, Int, Rat};
use crate::unipoly::QPoly;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

/// Sparse polynomial in Q[x, y]; keys are (i, j) for x^i y^j.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = BiPoly::zero();
        if !c.is_zero() {
            p.terms.insert((0, 0), c);
        }
        p
    }

    pub fn from_int(n: i64) -> Self {
        BiPoly::constant(Rat::from_integer(Int::from(n)))
    }

    pub fn var(v: Var) -> Self {
        let key = match v {
            Var::X => (1, 0),
            Var::Y => (0, 1),
        };
        let mut p = BiPoly::zero();
        p.terms.insert(key, Rat::one());
        p
    }

    pub fn monomial(i: u32, j: u32, c: Rat) -> Self {
        let mut p = BiPoly::zero();
        if !c.is_zero() {
            p.terms.insert((i, j), c);
        }
        p
    }

    /// Build from (i, j, coefficient) triples; repeated keys accumulate.
    pub fn from_terms(terms: &[(u32, u32, Rat)]) -> Self {
        let mut p = BiPoly::zero();
        for (i, j, c) in terms {
            p.add_term(*i, *j, c.clone());
        }
        p
    }

    pub fn from_int_terms(terms: &[(u32, u32, i64)]) -> Self {
        let mut p = BiPoly::zero();
        for (i, j, c) in terms {
            p.add_term(*i, *j, Rat::from_integer(Int::from(*c)));
        }
        p
    }

    fn add_term(&mut self, i: u32, j: u32, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i == 0 && j == 0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rat {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        match v {
            Var::X => self.terms.keys().map(|&(i, _)| i).max(),
            Var::Y => self.terms.keys().map(|&(_, j)| j).max(),
        }
    }

    pub fn add(&self, o: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &o.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &o.terms {
            out.add_term(i, j, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&k, c)| (k, -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, r: &Rat) -> BiPoly {
        if r.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, c * r)).collect(),
        }
    }

    pub fn mul(&self, o: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &o.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> BiPoly {
        let mut acc = BiPoly::constant(Rat::one());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        // Horner in y over Horner-in-x coefficient polynomials.
        let ypolys = self.y_coefficients();
        let mut acc = Rat::zero();
        for p in ypolys.iter().rev() {
            acc = acc * y + p.eval(x);
        }
        acc
    }

    pub fn eval_interval(&self, x: &Interval, y: &Interval) -> Interval {
        let ypolys = self.y_coefficients();
        let mut acc = Interval::point(Rat::zero());
        for p in ypolys.iter().rev() {
            acc = acc.mul(y).add(&p.eval_interval(x));
        }
        acc
    }

    pub fn diff(&self, v: Var) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            match v {
                Var::X => {
                    if i > 0 {
                        out.add_term(i - 1, j, c * Rat::from_integer(Int::from(i)));
                    }
                }
                Var::Y => {
                    if j > 0 {
                        out.add_term(i, j - 1, c * Rat::from_integer(Int::from(j)));
                    }
                }
            }
        }
        out
    }

    /// Substitute polynomials for both variables.
    pub fn subst(&self, x_img: &BiPoly, y_img: &BiPoly) -> BiPoly {
        let max_i = self.degree_in(Var::X).unwrap_or(0) as usize;
        let max_j = self.degree_in(Var::Y).unwrap_or(0) as usize;
        let mut xp = Vec::with_capacity(max_i + 1);
        let mut yp = Vec::with_capacity(max_j + 1);
        xp.push(BiPoly::constant(Rat::one()));
        for k in 1..=max_i {
            let next = xp[k - 1].mul(x_img);
            xp.push(next);
        }
        yp.push(BiPoly::constant(Rat::one()));
        for k in 1..=max_j {
            let next = yp[k - 1].mul(y_img);
            yp.push(next);
        }
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            let term = xp[i as usize].mul(&yp[j as usize]).scale(c);
            out = out.add(&term);
        }
        out
    }

    /// f(x + a, y + b).
    pub fn translate(&self, a: &Rat, b: &Rat) -> BiPoly {
        let x_img = BiPoly::var(Var::X).add(&BiPoly::constant(a.clone()));
        let y_img = BiPoly::var(Var::Y).add(&BiPoly::constant(b.clone()));
        self.subst(&x_img, &y_img)
    }

    /// f(x + k*y, y).
    pub fn shear_x(&self, k: &Rat) -> BiPoly {
        let x_img = BiPoly::var(Var::X).add(&BiPoly::var(Var::Y).scale(k));
        self.subst(&x_img, &BiPoly::var(Var::Y))
    }

    pub fn swap_vars(&self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((j, i), c.clone()))
                .collect(),
        }
    }

    /// Coefficients as polynomials in x, indexed by the power of y.
    pub fn y_coefficients(&self) -> Vec<QPoly> {
        let dy = match self.degree_in(Var::Y) {
            None => return Vec::new(),
            Some(d) => d as usize,
        };
        let dx = self.degree_in(Var::X).unwrap_or(0) as usize;
        let mut rows = vec![vec![Rat::zero(); dx + 1]; dy + 1];
        for (&(i, j), c) in &self.terms {
            rows[j as usize][i as usize] = c.clone();
        }
        rows.into_iter().map(QPoly::from_coeffs).collect()
    }

    /// Coefficients as polynomials in y, indexed by the power of x.
    pub fn x_coefficients(&self) -> Vec<QPoly> {
        self.swap_vars().y_coefficients()
    }

    pub fn from_y_coefficients(cs: &[QPoly]) -> BiPoly {
        let mut out = BiPoly::zero();
        for (j, p) in cs.iter().enumerate() {
            for (i, c) in p.coeffs().iter().enumerate() {
                out.add_term(i as u32, j as u32, c.clone());
            }
        }
        out
    }

    pub fn from_x_coefficients(cs: &[QPoly]) -> BiPoly {
        BiPoly::from_y_coefficients(cs).swap_vars()
    }

    /// Substitute a rational value for x, leaving a polynomial in y.
    pub fn eval_x(&self, x: &Rat) -> QPoly {
        let mut c: Vec<Rat> = Vec::new();
        for (&(i, j), coeff) in &self.terms {
            let v = coeff * crate::num::rat_pow(x, i);
            while c.len() <= j as usize {
                c.push(Rat::zero());
            }
            c[j as usize] += v;
        }
        QPoly::from_coeffs(c)
    }

    pub fn eval_y(&self, y: &Rat) -> QPoly {
        self.swap_vars().eval_x(y)
    }

    /// Leading term under graded lexicographic order (degree first, then
    /// power of x).
    pub fn leading_glex(&self) -> Option<((u32, u32), Rat)> {
        self.terms
            .iter()
            .max_by_key(|(&(i, j), _)| (i + j, i))
            .map(|(&k, c)| (k, c.clone()))
    }

    /// Terms of maximal total degree, as a bivariate form.
    pub fn top_form(&self) -> BiPoly {
        let d = match self.total_degree() {
            None => return BiPoly::zero(),
            Some(d) => d,
        };
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(&(i, j), _)| i + j == d)
                .map(|(&k, c)| (k, c.clone()))
                .collect(),
        }
    }

    /// Scale to integer coefficients with content 1 and positive leading
    /// glex coefficient.
    pub fn normalized(&self) -> BiPoly {
        if self.is_zero() {
            return BiPoly::zero();
        }
        let mut den = Int::one();
        for c in self.terms.values() {
            den = num_integer::Integer::lcm(&den, c.denom());
        }
        let mut content = Int::zero();
        for c in self.terms.values() {
            let scaled = c.numer() * (&den / c.denom());
            content = num_integer::Integer::gcd(&content, &scaled);
        }
        let mut factor = Rat::new(den, content);
        if sign_of(&self.leading_glex().unwrap().1) < 0 {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Greatest common divisor, normalized.
    pub fn gcd(a: &BiPoly, b: &BiPoly) -> BiPoly {
        bivar_gcd(a, b).normalized()
    }

    /// Exact division; panics if not divisible.
    pub fn exact_div(&self, d: &BiPoly) -> BiPoly {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return BiPoly::zero();
        }
        if d.degree_in(Var::Y).unwrap_or(0) == 0 {
            // Divisor lives in Q[x]; divide each y-coefficient.
            let dq = d.y_coefficients().remove(0);
            let cs: Vec<QPoly> = self
                .y_coefficients()
                .iter()
                .map(|p| p.exact_div(&dq))
                .collect();
            return BiPoly::from_y_coefficients(&cs);
        }
        let num = self.y_coefficients();
        let den = d.y_coefficients();
        let q = ypoly_exact_div(&num, &den);
        BiPoly::from_y_coefficients(&q)
    }

    pub fn divides(&self, other: &BiPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        if other.is_zero() {
            return true;
        }
        let g = bivar_gcd(self, other);
        g.total_degree() == self.total_degree()
            && self.num_terms() > 0
            && {
                let a = g.normalized();
                let b = self.normalized();
                a == b
            }
    }

    /// Product of the distinct irreducible factors, content-normalized with
    /// positive leading glex coefficient.
    pub fn squarefree_part(&self) -> Result<BiPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_constant() {
            return Ok(BiPoly::constant(Rat::one()));
        }
        let gx = bivar_gcd(self, &self.diff(Var::X));
        let g = bivar_gcd(&gx, &self.diff(Var::Y));
        let red = if g.is_constant() {
            self.clone()
        } else {
            self.exact_div(&g)
        };
        Ok(red.normalized())
    }
}

/// Bivariate gcd via content/primitive-part recursion over Q[x][y].
fn bivar_gcd(a: &BiPoly, b: &BiPoly) -> BiPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let ay = a.degree_in(Var::Y).unwrap_or(0);
    let by = b.degree_in(Var::Y).unwrap_or(0);
    if ay == 0 && by == 0 {
        // Both in Q[x].
        let g = QPoly::gcd(&a.y_coefficients()[0], &b.y_coefficients()[0]);
        return BiPoly::from_y_coefficients(&[g]);
    }
    let (ca, pa) = content_primitive_y(a);
    let (cb, pb) = content_primitive_y(b);
    let cg = QPoly::gcd(&ca, &cb);
    let pg = primitive_prs_gcd(&pa, &pb);
    let content_part = BiPoly::from_y_coefficients(&[cg]);
    content_part.mul(&BiPoly::from_y_coefficients(&pg))
}

/// Split into (content in Q[x], primitive part as y-coefficient list).
fn content_primitive_y(p: &BiPoly) -> (QPoly, Vec<QPoly>) {
    let cs = p.y_coefficients();
    let mut content = QPoly::zero();
    for c in &cs {
        content = QPoly::gcd(&content, c);
        if content.deg() == Some(0) {
            break;
        }
    }
    let prim: Vec<QPoly> = cs.iter().map(|c| c.exact_div(&content)).collect();
    (content, prim)
}

fn yp_deg(p: &[QPoly]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn yp_trim(mut p: Vec<QPoly>) -> Vec<QPoly> {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

/// Pseudo-remainder in (Q[x])[y].
fn yp_prem(n: &[QPoly], d: &[QPoly]) -> Vec<QPoly> {
    let dn = match yp_deg(n) {
        None => return Vec::new(),
        Some(v) => v,
    };
    let dd = yp_deg(d).expect("pseudo-division by zero");
    if dn < dd {
        return n.to_vec();
    }
    let lc = d[dd].clone();
    let mut rem: Vec<QPoly> = n.to_vec();
    for k in (dd..=dn).rev() {
        if yp_deg(&rem).map_or(true, |v| v < k) {
            continue;
        }
        let lead = rem[k].clone();
        for t in rem.iter_mut() {
            *t = t.mul(&lc);
        }
        for i in 0..=dd {
            rem[k - dd + i] = rem[k - dd + i].sub(&lead.mul(&d[i]));
        }
        rem = yp_trim(rem);
        if rem.is_empty() {
            break;
        }
    }
    rem
}

/// Primitive PRS gcd of two primitive elements of (Q[x])[y].
fn primitive_prs_gcd(a: &[QPoly], b: &[QPoly]) -> Vec<QPoly> {
    let mut f = yp_trim(a.to_vec());
    let mut g = yp_trim(b.to_vec());
    if f.is_empty() {
        return g;
    }
    if g.is_empty() {
        return f;
    }
    if yp_deg(&f) < yp_deg(&g) {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        let r = yp_prem(&f, &g);
        if r.is_empty() {
            let (_, prim) = yp_content_primitive(&g);
            return prim;
        }
        if yp_deg(&r) == Some(0) {
            return vec![QPoly::constant(Rat::one())];
        }
        f = g;
        let (_, prim) = yp_content_primitive(&r);
        g = prim;
    }
}

fn yp_content_primitive(p: &[QPoly]) -> (QPoly, Vec<QPoly>) {
    let mut content = QPoly::zero();
    for c in p {
        content = QPoly::gcd(&content, c);
        if content.deg() == Some(0) {
            break;
        }
    }
    if content.is_zero() {
        return (QPoly::zero(), Vec::new());
    }
    (content.clone(), p.iter().map(|c| c.exact_div(&content)).collect())
}

/// Exact long division in (Q[x])[y]; panics when not exact.
fn ypoly_exact_div(n: &[QPoly], d: &[QPoly]) -> Vec<QPoly> {
    let dn = yp_deg(n).expect("exact division of zero");
    let dd = yp_deg(d).expect("exact division by zero");
    assert!(dn >= dd);
    let mut rem: Vec<QPoly> = n.to_vec();
    let mut quo: Vec<QPoly> = vec![QPoly::zero(); dn - dd + 1];
    let lc = &d[dd];
    for k in (dd..=dn).rev() {
        let lead = if rem.len() > k {
            rem[k].clone()
        } else {
            QPoly::zero()
        };
        if lead.is_zero() {
            continue;
        }
        let q = lead.exact_div(lc);
        for i in 0..=dd {
            rem[k - dd + i] = rem[k - dd + i].sub(&q.mul(&d[i]));
        }
        quo[k - dd] = q;
    }
    assert!(yp_trim(rem).is_empty(), "bivariate division was not exact");
    quo
}

// --- Milnor constructions -------------------------------------------------

pub fn differentiate(p: &BiPoly, v: Var) -> BiPoly {
    p.diff(v)
}

/// f_x * g_y - f_y * g_x with the row order fixed (f first).
pub fn jacobian_det(f: &BiPoly, g: &BiPoly) -> BiPoly {
    let fx = f.diff(Var::X);
    let fy = f.diff(Var::Y);
    let gx = g.diff(Var::X);
    let gy = g.diff(Var::Y);
    fx.mul(&gy).sub(&fy.mul(&gx))
}

/// Squared distance from the center a: (x - a1)^2 + (y - a2)^2.
pub fn rho(center: (&Rat, &Rat)) -> BiPoly {
    let x = BiPoly::var(Var::X).sub(&BiPoly::constant(center.0.clone()));
    let y = BiPoly::var(Var::Y).sub(&BiPoly::constant(center.1.clone()));
    x.mul(&x).add(&y.mul(&y))
}

/// Jacobian determinant of (f, rho_center); vanishes identically exactly
/// when f is radial about the center.
pub fn milnor_poly(f: &BiPoly, center: (&Rat, &Rat)) -> BiPoly {
    jacobian_det(f, &rho(center))
}

pub fn squarefree_part(g: &BiPoly) -> Result<BiPoly> {
    g.squarefree_part()
}

// --- Homogeneous form and charts ------------------------------------------

/// Homogeneous polynomial in Q[x, y, z]; keys (i, j, k), i + j + k = degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriPoly {
    terms: BTreeMap<(u32, u32, u32), Rat>,
    degree: u32,
}

impl TriPoly {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32, u32), &Rat)> {
        self.terms.iter()
    }

    /// Substitute z = 1, recovering the affine polynomial.
    pub fn dehomogenize(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i, j, _), c) in &self.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    /// Germ at [a : 1 : 0] for rational a: shear x -> x + a*y, then y = 1.
    /// Variables of the result are (x, z).
    pub fn germ_at_slope(&self, a: &Rat) -> BiPoly {
        let mut out = BiPoly::zero();
        // c * x^i y^j z^k -> c * (x + a)^i z^k at y = 1.
        for (&(i, _, k), c) in &self.terms {
            let shifted = BiPoly::var(Var::X)
                .add(&BiPoly::constant(a.clone()))
                .pow(i);
            let term = shifted.scale(c);
            for (&(ti, tj), tc) in &term.terms {
                debug_assert_eq!(tj, 0);
                out.add_term(ti, k, tc.clone());
            }
        }
        out
    }

    /// Germ at [1 : 0 : 0]: set x = 1. Variables of the result are (y, z).
    pub fn germ_at_x_axis(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(_, j, k), c) in &self.terms {
            out.add_term(j, k, c.clone());
        }
        out
    }
}

pub fn homogenize(p: &BiPoly) -> Result<TriPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = p.total_degree().unwrap();
    let terms = p
        .terms
        .iter()
        .map(|(&(i, j), c)| ((i, j, d - i - j), c.clone()))
        .collect();
    Ok(TriPoly { terms, degree: d })
}

/// Localize a homogeneous polynomial at a rational projective point on the
/// line at infinity, producing the affine germ in chart coordinates. The
/// chart sends the point to the coordinate origin of (local, z) coordinates.
pub fn chart_localize(q: &TriPoly, point: (&Rat, &Rat, &Rat)) -> Result<BiPoly> {
    let (x0, y0, z0) = point;
    if !z0.is_zero() || (x0.is_zero() && y0.is_zero()) {
        return Err(Error::PointNotAtInfinity);
    }
    if y0.is_zero() {
        Ok(q.germ_at_x_axis())
    } else {
        let slope = x0 / y0;
        Ok(q.germ_at_slope(&slope))
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Graded lex, highest first.
        let mut keys: Vec<(u32, u32)> = self.terms.keys().cloned().collect();
        keys.sort_by_key(|&(i, j)| (std::cmp::Reverse(i + j), std::cmp::Reverse(i)));
        let mut first = true;
        for (i, j) in keys {
            let c = &self.terms[&(i, j)];
            let mag = c.abs();
            if first {
                if sign_of(c) < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign_of(c) < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || (i == 0 && j == 0) {
                parts.push(rat_to_string(&mag));
            }
            if i > 0 {
                parts.push(if i == 1 {
                    "x".to_string()
                } else {
                    format!("x^{i}")
                });
            }
            if j > 0 {
                parts.push(if j == 1 {
                    "y".to_string()
                } else {
                    format!("y^{j}")
                });
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, rat_int};

    fn x() -> BiPoly {
        BiPoly::var(Var::X)
    }

    fn y() -> BiPoly {
        BiPoly::var(Var::Y)
    }

    #[test]
    fn differentiate_examples() {
        // d/dx (x + x^2 y) = 1 + 2xy
        let f = x().add(&x().pow(2).mul(&y()));
        assert_eq!(
            f.diff(Var::X),
            BiPoly::from_int_terms(&[(0, 0, 1), (1, 1, 2)])
        );
        // d/dy (constant) = 0
        assert!(BiPoly::from_int(5).diff(Var::Y).is_zero());
        // d/dy (2x^2y^3 - 9xy^2 + 12y) = 6x^2y^2 - 18xy + 12
        let g = BiPoly::from_int_terms(&[(2, 3, 2), (1, 2, -9), (0, 1, 12)]);
        assert_eq!(
            g.diff(Var::Y),
            BiPoly::from_int_terms(&[(2, 2, 6), (1, 1, -18), (0, 0, 12)])
        );
    }

    #[test]
    fn jacobian_examples() {
        assert_eq!(jacobian_det(&x(), &y()), BiPoly::from_int(1));
        let f = BiPoly::from_int_terms(&[(2, 3, 2), (1, 2, -9), (0, 1, 12)]);
        assert!(jacobian_det(&f, &f).is_zero());
        // Against the squared distance: -2*(12x - 18x^2y + 6x^3y^2 + 9y^3 - 4xy^4)
        let circle = x().pow(2).add(&y().pow(2));
        let want = BiPoly::from_int_terms(&[
            (1, 0, 12),
            (2, 1, -18),
            (3, 2, 6),
            (0, 3, 9),
            (1, 4, -4),
        ])
        .scale(&rat(-2, 1));
        assert_eq!(jacobian_det(&f, &circle), want);
    }

    #[test]
    fn jacobian_antisymmetry() {
        let f = BiPoly::from_int_terms(&[(3, 1, 2), (0, 2, -1), (1, 0, 4)]);
        let g = BiPoly::from_int_terms(&[(1, 1, 3), (2, 0, -5), (0, 0, 7)]);
        assert_eq!(jacobian_det(&f, &g), jacobian_det(&g, &f).neg());
    }

    #[test]
    fn milnor_poly_examples() {
        // f = x + x^2 y at the origin: 2(y + 2xy^2 - x^3)
        let f = x().add(&x().pow(2).mul(&y()));
        let zero = rat_int(0);
        let got = milnor_poly(&f, (&zero, &zero));
        let want = BiPoly::from_int_terms(&[(0, 1, 1), (1, 2, 2), (3, 0, -1)]).scale(&rat(2, 1));
        assert_eq!(got, want);
        // Radial f = (x^2+y^2)^2 vanishes identically.
        let radial = x().pow(2).add(&y().pow(2)).pow(2);
        assert!(milnor_poly(&radial, (&zero, &zero)).is_zero());
        // f = x^3 + xy^2 - 4x + 5: 2y(x^2 + y^2 - 4)
        let g = BiPoly::from_int_terms(&[(3, 0, 1), (1, 2, 1), (1, 0, -4), (0, 0, 5)]);
        let want2 = BiPoly::from_int_terms(&[(2, 1, 2), (0, 3, 2), (0, 1, -8)]);
        assert_eq!(milnor_poly(&g, (&zero, &zero)), want2);
    }

    #[test]
    fn milnor_center_shift_identity() {
        // milnor(f, a) - milnor(f, b) = 2(b2-a2) f_x - 2(b1-a1) f_y
        let f = BiPoly::from_int_terms(&[(2, 3, 1), (3, 0, -2), (1, 1, 5), (0, 2, 1)]);
        let a = (rat(1, 2), rat(-3, 1));
        let b = (rat(2, 1), rat(1, 4));
        let lhs = milnor_poly(&f, (&a.0, &a.1)).sub(&milnor_poly(&f, (&b.0, &b.1)));
        let two = rat(2, 1);
        let rhs = f
            .diff(Var::X)
            .scale(&(&two * (&b.1 - &a.1)))
            .sub(&f.diff(Var::Y).scale(&(&two * (&b.0 - &a.0))));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn squarefree_examples() {
        // x^2 y^3 -> x y
        let p = x().pow(2).mul(&y().pow(3));
        assert_eq!(p.squarefree_part().unwrap(), x().mul(&y()));
        // 2y(x^2+y^2-4) -> y(x^2+y^2-4), content-normalized
        let q = BiPoly::from_int_terms(&[(2, 1, 2), (0, 3, 2), (0, 1, -8)]);
        let want = BiPoly::from_int_terms(&[(2, 1, 1), (0, 3, 1), (0, 1, -4)]);
        assert_eq!(q.squarefree_part().unwrap(), want);
        // Idempotence on a squarefree input.
        let s = x().mul(&y()).add(&BiPoly::from_int(1));
        assert_eq!(s.squarefree_part().unwrap(), s);
        // Zero errors.
        assert_eq!(
            BiPoly::zero().squarefree_part().unwrap_err(),
            Error::ZeroPolynomial
        );
    }

    #[test]
    fn squarefree_with_repeated_bivariate_factor() {
        // (x+y)^2 (x - y + 1) -> (x+y)(x - y + 1)
        let s = x().add(&y());
        let t = x().sub(&y()).add(&BiPoly::from_int(1));
        let p = s.mul(&s).mul(&t);
        assert_eq!(p.squarefree_part().unwrap(), s.mul(&t).normalized());
    }

    #[test]
    fn homogenize_and_charts() {
        // x + x^2 y -> xz^2 + x^2 y, degree 3
        let f = x().add(&x().pow(2).mul(&y()));
        let h = homogenize(&f).unwrap();
        assert_eq!(h.degree(), 3);
        assert_eq!(h.dehomogenize(), f);
        // Chart at [0:1:0]: substitute y = 1 -> x z^2 + x^2
        let zero = rat_int(0);
        let one = rat_int(1);
        let germ = chart_localize(&h, (&zero, &one, &zero)).unwrap();
        assert_eq!(germ, BiPoly::from_int_terms(&[(1, 2, 1), (2, 0, 1)]));
        // Affine points are rejected.
        assert_eq!(
            chart_localize(&h, (&one, &one, &one)).unwrap_err(),
            Error::PointNotAtInfinity
        );
        // Chart at [1:0:0] swaps the roles.
        let germ_x = chart_localize(&h, (&one, &zero, &zero)).unwrap();
        // xz^2 + x^2y at x = 1: z^2 + y, in variables (y, z).
        assert_eq!(germ_x, BiPoly::from_int_terms(&[(0, 2, 1), (1, 0, 1)]));
    }

    #[test]
    fn germ_at_rational_slope() {
        // q = x^2 y - y^3 (homogeneous of f = x^2 y - y^3... already affine);
        // germ at [1:1:0] should vanish at the origin.
        let f = x().pow(2).mul(&y()).sub(&y().pow(3));
        let h = homogenize(&f).unwrap();
        let one = rat_int(1);
        let zero = rat_int(0);
        let germ = chart_localize(&h, (&one, &one, &zero)).unwrap();
        assert!(germ.coeff(0, 0).is_zero());
        // And the top-form root at slope 1 means the germ has no pure-z
        // obstruction: germ(0, z) = 0 identically here.
        let along_z = germ.eval_x(&zero);
        assert!(along_z.is_zero() || along_z.deg().is_some());
    }

    #[test]
    fn display_round_trip_shape() {
        let f = BiPoly::from_int_terms(&[(2, 1, -3), (0, 0, 5), (1, 0, 1)])
            .add(&BiPoly::monomial(0, 2, rat(1, 2)));
        let s = format!("{f}");
        assert_eq!(s, "-3*x^2*y + 1/2*y^2 + x + 5");
    }

    #[test]
    fn gcd_shared_factor() {
        let s = x().add(&y());
        let a = s.mul(&x());
        let b = s.mul(&y().add(&BiPoly::from_int(2)));
        assert_eq!(BiPoly::gcd(&a, &b), s.normalized());
    }

    #[test]
    fn eval_interval_contains_point_values() {
        let f = BiPoly::from_int_terms(&[(2, 1, 1), (1, 2, -4), (0, 0, 3)]);
        let ix = Interval::new(rat(1, 2), rat(3, 4));
        let iy = Interval::new(rat(-1, 3), rat(1, 5));
        let iv = f.eval_interval(&ix, &iy);
        for (px, py) in [(rat(1, 2), rat(-1, 3)), (rat(3, 4), rat(1, 5)), (rat(5, 8), rat(0, 1))] {
            assert!(iv.contains(&f.eval(&px, &py)));
        }
    }

    #[test]
    fn top_form_and_degrees() {
        let f = BiPoly::from_int_terms(&[(2, 1, 7), (1, 2, -2), (1, 0, 3)]);
        assert_eq!(f.total_degree(), Some(3));
        assert_eq!(
            f.top_form(),
            BiPoly::from_int_terms(&[(2, 1, 7), (1, 2, -2)])
        );
    }
}
