//! Real solutions of bivariate polynomial systems over Q, with certified
//! sign evaluation at the solution points.
//!
//! The method is elimination plus exact back-substitution. The subresultant
//! chain of the pair in y is computed once over Q[x]; the x-coordinates of
//! all solutions are among the real roots of its bottom row (the
//! resultant). For each such root alpha, the degree of the fiber gcd
//! gcd(g1(alpha, y), g2(alpha, y)) is the index of the first principal
//! subresultant coefficient that survives specialization, and that row,
//! specialized, is a scalar multiple of the gcd itself. Computing the gcd
//! from the precomputed chain instead of by Euclid over Q(alpha) is what
//! keeps high-degree alphas affordable: remainder sequences over a number
//! field blow up, while specializing the chain costs one reduction per
//! coefficient.
//!
//! Specializing the chain is only valid when the leading y-coefficients of
//! both inputs are nonvanishing constants, and reading the fiber root off
//! two chain coefficients requires the fiber to carry exactly one point.
//! Both are arranged by a shear x -> x + k*y: all but finitely many k make
//! the pair y-regular and the projection injective, so k = 0, 1, 2, ... is
//! retried until the checks pass. Points are exact: every box carries a
//! representation of its coordinates in a root context, so signs at the
//! point can always be decided.

use crate::algebraic::AlgebraicReal;
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::num::{rat, sign_of, Int, Rat};
use crate::poly::BiPoly;
use crate::resultant::subresultant_chain;
use crate::rootctx::{adjoin_real_roots, binomial, CPoly, El, RootCtx};
use crate::unipoly::{normal_form_crt, QPoly, ZPoly};
use num_traits::One;

/// All distinct real roots, ascending.
pub fn isolate_real_roots(p: &ZPoly) -> Result<Vec<AlgebraicReal>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(AlgebraicReal::roots_of(p))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn from_i32(s: i32) -> Sign {
        match s.cmp(&0) {
            std::cmp::Ordering::Less => Sign::Negative,
            std::cmp::Ordering::Equal => Sign::Zero,
            std::cmp::Ordering::Greater => Sign::Positive,
        }
    }

    pub fn to_i32(self) -> i32 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }
}

/// Refinement policy for certified signs. The exact phase always
/// terminates; restricting to intervals trades certainty for speed and can
/// fail with BudgetExhausted.
#[derive(Debug, Clone, Copy)]
pub enum SignPolicy {
    Exact,
    IntervalOnly { rounds: u32 },
}

#[derive(Debug, Clone)]
enum PointRep {
    Rational {
        x: Rat,
        y: Rat,
    },
    /// Coordinates as fractions over one context: x = x_num/den and
    /// y = y_num/den with den nonzero at the root. The denominator is kept
    /// uncleared on purpose: multiplying by den^(-1) would push the full
    /// number-field inverse, whose coefficients are enormous at high
    /// degree, into every later evaluation.
    Rur {
        ctx: RootCtx,
        x_num: El,
        y_num: El,
        den: El,
    },
}

/// A certified isolating box around a single common real zero of the
/// witness pair, with exact coordinates behind it.
#[derive(Debug, Clone)]
pub struct PlaneBox {
    x: Interval,
    y: Interval,
    witness: (BiPoly, BiPoly),
    rep: PointRep,
}

impl PlaneBox {
    pub fn x(&self) -> &Interval {
        &self.x
    }

    pub fn y(&self) -> &Interval {
        &self.y
    }

    pub fn witness(&self) -> (&BiPoly, &BiPoly) {
        (&self.witness.0, &self.witness.1)
    }

    pub fn rational_coords(&self) -> Option<(Rat, Rat)> {
        match &self.rep {
            PointRep::Rational { x, y } => Some((x.clone(), y.clone())),
            PointRep::Rur { .. } => None,
        }
    }

    /// Shrink the box around the point.
    pub fn refine_step(&mut self) {
        match &mut self.rep {
            PointRep::Rational { .. } => {}
            PointRep::Rur {
                ctx,
                x_num,
                y_num,
                den,
            } => {
                ctx.refine();
                let (x, y) = fraction_box(ctx, x_num, y_num, den);
                self.x = x;
                self.y = y;
            }
        }
    }

    /// Exact value of p at the point.
    pub fn eval_algebraic(&mut self, p: &BiPoly) -> AlgebraicReal {
        match &mut self.rep {
            PointRep::Rational { x, y } => AlgebraicReal::from_rational(p.eval(x, y)),
            PointRep::Rur {
                ctx,
                x_num,
                y_num,
                den,
            } => {
                let (v, d, l) = eval_cleared_z(p, x_num, y_num, den);
                // v(theta) = l * den(theta)^d * p(point); bring v into
                // the field through its residue-built normal form.
                let mz = ctx.modulus().to_primitive_z();
                let (num, scale) = match normal_form_crt(&v, &mz) {
                    Some((n, l2)) => (n.to_qpoly(), l * l2),
                    None => (ctx.reduce(&v.to_qpoly()), l),
                };
                let dp = ctx.pow(den, d);
                let dp = ctx.scale(&dp, &Rat::from_integer(scale));
                ctx.to_algebraic_fraction(&num, &dp)
                    .expect("denominator is nonzero at the point")
            }
        }
    }

    pub fn x_algebraic(&mut self) -> AlgebraicReal {
        match &mut self.rep {
            PointRep::Rational { x, .. } => AlgebraicReal::from_rational(x.clone()),
            PointRep::Rur { ctx, x_num, den, .. } => ctx
                .to_algebraic_fraction(x_num, den)
                .expect("denominator is nonzero at the point"),
        }
    }

    pub fn y_algebraic(&mut self) -> AlgebraicReal {
        match &mut self.rep {
            PointRep::Rational { y, .. } => AlgebraicReal::from_rational(y.clone()),
            PointRep::Rur { ctx, y_num, den, .. } => ctx
                .to_algebraic_fraction(y_num, den)
                .expect("denominator is nonzero at the point"),
        }
    }

    fn exact_sign(&mut self, p: &BiPoly) -> i32 {
        match &mut self.rep {
            PointRep::Rational { x, y } => sign_of(&p.eval(x, y)),
            PointRep::Rur {
                ctx,
                x_num,
                y_num,
                den,
            } => {
                let (v, d, _) = eval_cleared_z(p, x_num, y_num, den);
                let sv = ctx.sign_zpoly(&v);
                if sv == 0 {
                    return 0;
                }
                // v is a positive multiple of den^d * p(point): correct
                // by the denominator sign.
                if d % 2 == 0 || ctx.sign_el(den) > 0 {
                    sv
                } else {
                    -sv
                }
            }
        }
    }
}

/// Enclosures of x_num/den and y_num/den, refining until the denominator
/// encloses away from zero.
fn fraction_box(ctx: &mut RootCtx, x_num: &El, y_num: &El, den: &El) -> (Interval, Interval) {
    loop {
        let di = ctx.el_interval(den);
        if di.sign().is_some() {
            // Coarsened endpoints: the exact quotients carry rationals
            // sized like the element coefficients, and everything
            // downstream evaluates polynomials on these boxes.
            let x = ctx
                .el_interval(x_num)
                .div(&di)
                .expect("sign-definite denominator")
                .coarsen();
            let y = ctx
                .el_interval(y_num)
                .div(&di)
                .expect("sign-definite denominator")
                .coarsen();
            return (x, y);
        }
        ctx.refine();
    }
}

/// Successive powers e^0, ..., e^up_to in the context.
fn powers(ctx: &RootCtx, e: &El, up_to: u32) -> Vec<El> {
    let mut v: Vec<El> = Vec::with_capacity(up_to as usize + 1);
    v.push(QPoly::constant(rat(1, 1)));
    for t in 0..up_to as usize {
        let next = ctx.mul(&v[t], e);
        v.push(next);
    }
    v
}

/// Successive powers e^0, ..., e^up_to, unreduced over the integers.
fn zpowers(e: &ZPoly, up_to: u32) -> Vec<ZPoly> {
    let mut v: Vec<ZPoly> = Vec::with_capacity(up_to as usize + 1);
    v.push(ZPoly::from_i64(&[1]));
    for t in 0..up_to as usize {
        v.push(v[t].mul(e));
    }
    v
}

fn rat_pow(r: &Rat, e: u32) -> Rat {
    Rat::new(r.numer().pow(e), r.denom().pow(e))
}

/// Integer form of den^D * p(x_num/den, y_num/den) with D the total
/// degree of p: returns (e, D, l) with e(theta) = l * den(theta)^D *
/// p(point) for a positive integer l. The products stay unreduced so the
/// whole construction is integer arithmetic; reducing each product in
/// the field would normalize a rational per coefficient operation, which
/// dominates everything else at high modulus degrees.
fn eval_cleared_z(p: &BiPoly, x_num: &El, y_num: &El, den: &El) -> (ZPoly, u32, Int) {
    let d = match p.total_degree() {
        None => return (ZPoly::zero(), 0, Int::one()),
        Some(d) => d,
    };
    let (xc, xz) = (x_num.rational_content(), x_num.to_primitive_z());
    let (yc, yz) = (y_num.rational_content(), y_num.to_primitive_z());
    let (dc, dz) = (den.rational_content(), den.to_primitive_z());
    let mut weights: Vec<((u32, u32), Rat)> = Vec::new();
    let mut l = Int::one();
    for (&(i, j), c) in p.terms() {
        let w = c * rat_pow(&xc, i) * rat_pow(&yc, j) * rat_pow(&dc, d - i - j);
        l = num_integer::Integer::lcm(&l, w.denom());
        weights.push(((i, j), w));
    }
    let px = zpowers(&xz, d);
    let py = zpowers(&yz, d);
    let pd = zpowers(&dz, d);
    let mut acc = ZPoly::zero();
    for ((i, j), w) in weights {
        let m = px[i as usize].mul(&py[j as usize]).mul(&pd[(d - i - j) as usize]);
        acc = acc.add(&m.scale(&(w.numer() * (&l / w.denom()))));
    }
    (acc, d, l)
}

/// Exact sign of p at the point in the box. The interval phase runs first;
/// under the Exact policy a still-ambiguous sign escalates to an exact
/// zero test and exact refinement, which always terminates.
pub fn certified_sign(p: &BiPoly, bx: &mut PlaneBox, policy: SignPolicy) -> Result<Sign> {
    // The point is a common zero of its witness pair by construction, so
    // either witness equation (up to a scalar) vanishes here with no
    // evaluation at all, under any policy. This is the common
    // certification: callers mostly confirm the defining equations at
    // their own solutions, and intervals can never resolve a true zero.
    let pn = p.normalized();
    if pn == bx.witness.0.normalized() || pn == bx.witness.1.normalized() {
        return Ok(Sign::Zero);
    }
    let rounds = match policy {
        SignPolicy::Exact => 8,
        SignPolicy::IntervalOnly { rounds } => rounds,
    };
    for _ in 0..rounds {
        if let Some(s) = p.eval_interval(&bx.x, &bx.y).sign() {
            return Ok(Sign::from_i32(s));
        }
        bx.refine_step();
    }
    match policy {
        SignPolicy::IntervalOnly { .. } => Err(Error::BudgetExhausted),
        SignPolicy::Exact => Ok(Sign::from_i32(bx.exact_sign(p))),
    }
}

/// Solutions of {g1 = 0, g2 = 0}: certified boxes for the isolated common
/// zeros of the system with any shared curve factored out, plus that
/// shared one-dimensional part (squarefree) when present.
#[derive(Debug, Clone)]
pub struct SystemSolutions {
    pub points: Vec<PlaneBox>,
    pub curves: Vec<BiPoly>,
}

pub fn solve_bivariate(g1: &BiPoly, g2: &BiPoly) -> Result<SystemSolutions> {
    if g1.is_zero() || g2.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let w = BiPoly::gcd(g1, g2);
    let (curves, a1, a2) = if w.is_constant() {
        (Vec::new(), g1.clone(), g2.clone())
    } else {
        (
            vec![w.squarefree_part()?],
            g1.exact_div(&w),
            g2.exact_div(&w),
        )
    };
    if a1.is_constant() || a2.is_constant() {
        // A nonzero constant in the reduced system: no isolated points.
        return Ok(SystemSolutions {
            points: Vec::new(),
            curves,
        });
    }
    const SHEAR_CAP: i64 = 256;
    'shear: for k in 0..=SHEAR_CAP {
        let kr = rat(k, 1);
        let s1 = a1.shear_x(&kr);
        let s2 = a2.shear_x(&kr);
        let c1 = s1.y_coefficients();
        let c2 = s2.y_coefficients();
        // Specialization x = alpha commutes with the chain only if it
        // preserves both y-degrees, i.e. both leading y-coefficients are
        // nonzero constants. A generic shear makes the y-degree the total
        // degree with a constant on top, so only finitely many k fail.
        let regular = |c: &[QPoly]| c.last().map_or(false, |t| t.deg() == Some(0));
        if !regular(&c1) || !regular(&c2) {
            continue 'shear;
        }
        let small = if c1.len() >= c2.len() { &c2 } else { &c1 };
        let rows = subresultant_chain(&c1, &c2);
        if rows[0].is_empty() {
            return Err(Error::Internal(
                "zero resultant for a coprime system".into(),
            ));
        }
        let rx = &rows[0][0];
        if rx.deg() == Some(0) {
            return Ok(SystemSolutions {
                points: Vec::new(),
                curves,
            });
        }
        let rz = rx.to_primitive_z().squarefree_part();
        let alphas = AlgebraicReal::roots_of(&rz);
        let mut points: Vec<PlaneBox> = Vec::new();
        for alpha in &alphas {
            let mut cx = RootCtx::from_algebraic(alpha);
            match fiber_root(&mut cx, &rows, small)? {
                Fiber::Point { num, den } => {
                    // x = x' + k*y over the common denominator.
                    let x_num = {
                        let t = cx.mul(&cx.generator(), &den);
                        cx.add(&t, &cx.scale(&num, &kr))
                    };
                    points.push(make_point(cx, x_num, num, den, (&a1, &a2)));
                }
                Fiber::Collision(fib) => {
                    if k < SHEAR_CAP {
                        // Several y over one alpha (possibly a complex
                        // pair): separate by the next shear.
                        continue 'shear;
                    }
                    // Out of shears: adjoin the fiber roots directly.
                    for adj in adjoin_real_roots(&cx, &fib)? {
                        let y_num = adj.root.clone();
                        let x_num = adj.ctx.add(&adj.theta, &adj.ctx.scale(&y_num, &kr));
                        let one = QPoly::constant(rat(1, 1));
                        points.push(make_point(adj.ctx, x_num, y_num, one, (&a1, &a2)));
                    }
                }
            }
        }
        #[cfg(debug_assertions)]
        verify_against_x_eliminant(&a1, &a2, &mut points);
        separate_boxes(&mut points);
        points.sort_by(cmp_points);
        return Ok(SystemSolutions { points, curves });
    }
    unreachable!("shear loop always returns");
}

enum Fiber {
    /// The unique y over this alpha, as the fraction num/den with den
    /// nonzero at alpha. Keeping the fraction avoids the number-field
    /// inversion, whose result has enormous coefficients at high degree.
    Point { num: El, den: El },
    /// The fiber holds several roots (the shear was not separating); the
    /// reduced fiber polynomial is kept for last-resort adjunction.
    Collision(CPoly),
}

/// The solution fiber over one root alpha of the eliminant, read off the
/// specialized subresultant chain.
///
/// The degree of gcd(g1(alpha, y), g2(alpha, y)) is the least j whose
/// principal subresultant coefficient does not vanish at alpha, and row j
/// then specializes to a scalar multiple of that gcd. A separating shear
/// leaves a single point per alpha, making the gcd lc * (y - beta)^j with
/// beta real, so beta = -row[j-1] / (j * row[j]) at alpha. For j >= 2 that
/// formula alone would also accept fibers whose root-mean happens to be a
/// root (for example roots {-1, 0, 1}), so the remaining coefficients are
/// checked against the binomial expansion; any mismatch reports a
/// collision and forces the next shear.
fn fiber_root(cx: &mut RootCtx, rows: &[Vec<QPoly>], small: &[QPoly]) -> Result<Fiber> {
    let q = rows.len();
    for j in 1..q {
        let row = &rows[j];
        if row.len() <= j {
            // Principal coefficient identically zero (defective row).
            continue;
        }
        let cj = cx.reduce(&row[j]);
        if cx.is_zero_el(&cj) {
            continue;
        }
        let num = cx.neg(&cx.reduce(&row[j - 1]));
        let den = cx.scale(&cj, &rat(j as i64, 1));
        if j == 1 {
            return Ok(Fiber::Point { num, den });
        }
        let red: CPoly = row.iter().map(|c| cx.reduce(c)).collect();
        if is_pure_power(cx, &red, &num, &den) {
            return Ok(Fiber::Point { num, den });
        }
        return Ok(Fiber::Collision(red));
    }
    // Every proper principal coefficient vanished: the gcd is the smaller
    // input itself, whose leading coefficient is a nonzero rational by the
    // regularity check.
    let lc = small[q].coeff(0);
    let num = cx.neg(&cx.reduce(&small[q - 1]));
    let den = QPoly::constant(rat(q as i64, 1) * lc);
    if q == 1 {
        return Ok(Fiber::Point { num, den });
    }
    let red: CPoly = small.iter().map(|c| cx.reduce(c)).collect();
    if is_pure_power(cx, &red, &num, &den) {
        return Ok(Fiber::Point { num, den });
    }
    Ok(Fiber::Collision(red))
}

/// Does the reduced fiber polynomial equal lc * (y - beta)^j exactly, for
/// beta = num/den? Each coefficient identity is cleared of denominators
/// before testing: red[i] * den^(j-i) = lc * C(j, i) * (-num)^(j-i). The
/// top two coefficients already match by the choice of beta, so only the
/// lower ones are tested.
fn is_pure_power(cx: &mut RootCtx, red: &CPoly, num: &El, den: &El) -> bool {
    let j = red.len() - 1;
    let lc = &red[j];
    let neg_num = cx.neg(num);
    let pn = powers(cx, &neg_num, j as u32);
    let pd = powers(cx, den, j as u32);
    for i in 0..j.saturating_sub(1) {
        let lhs = cx.mul(&red[i], &pd[j - i]);
        let rhs = {
            let b = Rat::from_integer(binomial(j, i));
            let m = cx.mul(lc, &pn[j - i]);
            cx.scale(&m, &b)
        };
        let diff = cx.add(&lhs, &cx.neg(&rhs));
        if !cx.is_zero_el(&diff) {
            return false;
        }
    }
    true
}

/// Debug-build cross-check: every reported point's y must be a root of the
/// x-eliminant, an independently computed resultant.
#[cfg(debug_assertions)]
fn verify_against_x_eliminant(a1: &BiPoly, a2: &BiPoly, points: &mut [PlaneBox]) {
    use crate::resultant::resultant;
    use num_traits::Zero;
    let ry = resultant(&a1.x_coefficients(), &a2.x_coefficients());
    if ry.deg().map_or(true, |d| d == 0) {
        assert!(
            points.is_empty(),
            "constant x-eliminant admits no solutions"
        );
        return;
    }
    for p in points.iter_mut() {
        match &mut p.rep {
            PointRep::Rational { y, .. } => {
                assert!(ry.eval(y).is_zero(), "point fails the x-eliminant");
            }
            PointRep::Rur { ctx, y_num, den, .. } => {
                // den^deg(ry) * ry(y_num/den), cleared and unreduced over
                // the integers as in eval_cleared_z.
                let d = ry.deg().unwrap() as u32;
                let (yc, yz) = (y_num.rational_content(), y_num.to_primitive_z());
                let (dc, dz) = (den.rational_content(), den.to_primitive_z());
                let mut weights: Vec<Rat> = Vec::new();
                let mut l = Int::one();
                for (i, c) in ry.coeffs().iter().enumerate() {
                    let w = c * rat_pow(&yc, i as u32) * rat_pow(&dc, d - i as u32);
                    l = num_integer::Integer::lcm(&l, w.denom());
                    weights.push(w);
                }
                let pn = zpowers(&yz, d);
                let pd = zpowers(&dz, d);
                let mut acc = ZPoly::zero();
                for (i, w) in weights.iter().enumerate() {
                    let m = pn[i].mul(&pd[d as usize - i]);
                    acc = acc.add(&m.scale(&(w.numer() * (&l / w.denom()))));
                }
                assert_eq!(ctx.sign_zpoly(&acc), 0, "point fails the x-eliminant");
            }
        }
    }
}

/// Build a box from fraction coordinates (x_num/den, y_num/den) over the
/// context, already unsheared by the caller.
fn make_point(
    mut cx: RootCtx,
    x_num: El,
    y_num: El,
    den: El,
    witness: (&BiPoly, &BiPoly),
) -> PlaneBox {
    if cx.degree() == 1 {
        let d = cx.reduce(&den).coeff(0);
        let x = cx.reduce(&x_num).coeff(0) / d.clone();
        let y = cx.reduce(&y_num).coeff(0) / d;
        return PlaneBox {
            x: Interval::point(x.clone()),
            y: Interval::point(y.clone()),
            witness: (witness.0.clone(), witness.1.clone()),
            rep: PointRep::Rational { x, y },
        };
    }
    let target = rat(1, 16);
    loop {
        let (x, y) = fraction_box(&mut cx, &x_num, &y_num, &den);
        if x.width() <= target && y.width() <= target {
            return PlaneBox {
                x,
                y,
                witness: (witness.0.clone(), witness.1.clone()),
                rep: PointRep::Rur {
                    ctx: cx,
                    x_num,
                    y_num,
                    den,
                },
            };
        }
        cx.refine();
    }
}

/// Shrink boxes until they are pairwise disjoint in x or in y, so each box
/// isolates its own point.
fn separate_boxes(points: &mut [PlaneBox]) {
    let n = points.len();
    loop {
        let mut all_clear = true;
        for i in 0..n {
            for j in (i + 1)..n {
                let overlap = !points[i].x.disjoint(&points[j].x)
                    && !points[i].y.disjoint(&points[j].y);
                if overlap {
                    all_clear = false;
                    points[i].refine_step();
                    points[j].refine_step();
                }
            }
        }
        if all_clear {
            return;
        }
    }
}

/// Order by x, then y, exactly. Refinement happens on clones so the boxes
/// themselves stay untouched during sorting.
fn cmp_points(a: &PlaneBox, b: &PlaneBox) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    let mut ca = a.clone();
    let mut cb = b.clone();
    for _ in 0..64 {
        if ca.x.hi < cb.x.lo {
            return Ordering::Less;
        }
        if cb.x.hi < ca.x.lo {
            return Ordering::Greater;
        }
        ca.refine_step();
        cb.refine_step();
    }
    let xa = ca.x_algebraic();
    let xb = cb.x_algebraic();
    match xa.cmp(&xb) {
        Ordering::Equal => {}
        o => return o,
    }
    for _ in 0..64 {
        if ca.y.hi < cb.y.lo {
            return Ordering::Less;
        }
        if cb.y.hi < ca.y.lo {
            return Ordering::Greater;
        }
        ca.refine_step();
        cb.refine_step();
    }
    ca.y_algebraic().cmp(&cb.y_algebraic())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat_int;
    use crate::poly::{milnor_poly, squarefree_part, Var};
    use num_traits::Zero;

    fn x() -> BiPoly {
        BiPoly::var(Var::X)
    }

    fn y() -> BiPoly {
        BiPoly::var(Var::Y)
    }

    #[test]
    fn axes_cross_at_origin() {
        let sol = solve_bivariate(&y(), &x()).unwrap();
        assert!(sol.curves.is_empty());
        assert_eq!(sol.points.len(), 1);
        let (px, py) = sol.points[0].rational_coords().unwrap();
        assert!(px.is_zero() && py.is_zero());
    }

    #[test]
    fn milnor_set_of_linear_function() {
        // f = x: h = y, companion x h_y - y h_x = x.
        let f = x();
        let zero = rat_int(0);
        let h = squarefree_part(&milnor_poly(&f, (&zero, &zero))).unwrap();
        assert_eq!(h, y());
        let companion = x().mul(&h.diff(Var::Y)).sub(&y().mul(&h.diff(Var::X)));
        assert_eq!(companion, x());
        let sol = solve_bivariate(&h, &companion).unwrap();
        assert_eq!(sol.points.len(), 1);
        assert_eq!(
            sol.points[0].rational_coords().unwrap(),
            (rat_int(0), rat_int(0))
        );
    }

    #[test]
    fn shared_circle_component() {
        let circle = BiPoly::from_int_terms(&[(2, 0, 1), (0, 2, 1), (0, 0, -4)]);
        let g2 = circle.mul(&x());
        let sol = solve_bivariate(&circle, &g2).unwrap();
        assert_eq!(sol.curves.len(), 1);
        assert_eq!(sol.curves[0], circle.normalized());
        assert!(sol.points.is_empty());
    }

    #[test]
    fn circle_meets_diagonal() {
        let g1 = BiPoly::from_int_terms(&[(2, 0, 1), (0, 2, 1), (0, 0, -1)]);
        let g2 = x().sub(&y());
        let mut sol = solve_bivariate(&g1, &g2).unwrap();
        assert_eq!(sol.points.len(), 2);
        // Points are (+-sqrt(1/2), +-sqrt(1/2)), ordered by x.
        assert!(sol.points[0].x().hi < rat(0, 1));
        assert!(sol.points[1].x().lo > rat(0, 1));
        let probe = BiPoly::from_int_terms(&[(2, 0, 2), (0, 0, -1)]); // 2x^2 - 1
        for p in sol.points.iter_mut() {
            assert_eq!(
                certified_sign(&probe, p, SignPolicy::Exact).unwrap(),
                Sign::Zero
            );
            assert_eq!(
                certified_sign(&g1, p, SignPolicy::Exact).unwrap(),
                Sign::Zero
            );
            assert_eq!(
                certified_sign(&g2, p, SignPolicy::Exact).unwrap(),
                Sign::Zero
            );
        }
    }

    #[test]
    fn tangential_contact() {
        // Parabola tangent to its axis: single solution at the origin.
        let g1 = y().sub(&x().mul(&x()));
        let g2 = y();
        let sol = solve_bivariate(&g1, &g2).unwrap();
        assert_eq!(sol.points.len(), 1);
        assert_eq!(
            sol.points[0].rational_coords().unwrap(),
            (rat_int(0), rat_int(0))
        );
    }

    #[test]
    fn degenerate_fiber_on_vertical_line() {
        // g1 = xy vanishes identically on x = 0; the fiber there is cut
        // out by g2 alone.
        let g1 = x().mul(&y());
        let g2 = x().mul(&x()).sub(&y().mul(&y()));
        let sol = solve_bivariate(&g1, &g2).unwrap();
        assert_eq!(sol.points.len(), 1);
        assert_eq!(
            sol.points[0].rational_coords().unwrap(),
            (rat_int(0), rat_int(0))
        );
    }

    #[test]
    fn complex_pair_is_rejected_by_shear() {
        // y^2 + 1 = 0 has no real points; the unsheared x-resultant still
        // vanishes at x = 0 via the complex pair y = +-i.
        let g1 = BiPoly::from_int_terms(&[(0, 2, 1), (0, 0, 1)]);
        let g2 = BiPoly::from_int_terms(&[(1, 0, 1), (0, 2, 1), (0, 0, 1)]);
        let sol = solve_bivariate(&g1, &g2).unwrap();
        assert!(sol.points.is_empty());
        assert!(sol.curves.is_empty());
    }

    #[test]
    fn collision_of_two_points_over_one_x() {
        // (0, 1) and (0, -1) share their x-coordinate; a shear separates.
        let g1 = x();
        let g2 = BiPoly::from_int_terms(&[(0, 2, 1), (0, 0, -1)]);
        let sol = solve_bivariate(&g1, &g2).unwrap();
        assert_eq!(sol.points.len(), 2);
        let c0 = sol.points[0].rational_coords().unwrap();
        let c1 = sol.points[1].rational_coords().unwrap();
        assert_eq!(c0, (rat_int(0), rat_int(-1)));
        assert_eq!(c1, (rat_int(0), rat_int(1)));
    }

    #[test]
    fn swapped_system_agrees() {
        // Count must be stable under swapping the roles of x and y.
        let g1 = BiPoly::from_int_terms(&[(2, 0, 1), (0, 2, 1), (0, 0, -5)]);
        let g2 = BiPoly::from_int_terms(&[(1, 1, 1), (0, 0, -2)]);
        let sol = solve_bivariate(&g1, &g2).unwrap();
        let sol_swapped = solve_bivariate(&g1.swap_vars(), &g2.swap_vars()).unwrap();
        assert_eq!(sol.points.len(), sol_swapped.points.len());
        assert_eq!(sol.points.len(), 4);
        // (1,2),(2,1),(-1,-2),(-2,-1)
        for p in &sol.points {
            let (px, py) = p.rational_coords().unwrap();
            assert_eq!(&px * &py, rat(2, 1));
            assert_eq!(&px * &px + &py * &py, rat(5, 1));
        }
    }

    #[test]
    fn zero_input_rejected() {
        assert!(matches!(
            solve_bivariate(&BiPoly::zero(), &x()),
            Err(Error::ZeroPolynomial)
        ));
        assert!(matches!(
            isolate_real_roots(&ZPoly::zero()),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn isolate_spec_examples() {
        let two = ZPoly::from_i64(&[-2, 0, 1]);
        assert_eq!(isolate_real_roots(&two).unwrap().len(), 2);
        let none = ZPoly::from_i64(&[1, 0, 1]);
        assert!(isolate_real_roots(&none).unwrap().is_empty());
        // (x-1)^3 (x+2)
        let p = ZPoly::from_i64(&[-1, 1]);
        let cube = ZPoly::from_i64(&[2, 1]);
        let mut prod = ZPoly::from_i64(&[1]);
        for _ in 0..3 {
            prod = prod.mul(&p);
        }
        prod = prod.mul(&cube);
        let roots = isolate_real_roots(&prod).unwrap();
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0], AlgebraicReal::from_rational(rat(-2, 1)));
        assert_eq!(roots[1], AlgebraicReal::from_rational(rat(1, 1)));
    }

    #[test]
    fn interval_only_budget_exhausts() {
        // A sign query at an exact zero can never resolve by intervals.
        let g1 = y();
        let g2 = x();
        let mut sol = solve_bivariate(&g1, &g2).unwrap();
        let p = &mut sol.points[0];
        // The origin is rational, so interval evaluation is a point and
        // the sign of x+y there is exactly resolvable even by intervals:
        // use an irrational point instead.
        let c1 = BiPoly::from_int_terms(&[(2, 0, 1), (0, 2, 1), (0, 0, -1)]);
        let c2 = x().sub(&y());
        let mut sol2 = solve_bivariate(&c1, &c2).unwrap();
        let q = &mut sol2.points[1];
        let vanishing = BiPoly::from_int_terms(&[(2, 0, 2), (0, 0, -1)]);
        assert!(matches!(
            certified_sign(&vanishing, q, SignPolicy::IntervalOnly { rounds: 6 }),
            Err(Error::BudgetExhausted)
        ));
        // And the same query under the exact policy resolves to Zero.
        assert_eq!(
            certified_sign(&vanishing, q, SignPolicy::Exact).unwrap(),
            Sign::Zero
        );
        let _ = p;
    }

    #[test]
    fn eval_algebraic_at_rur_point() {
        let g1 = BiPoly::from_int_terms(&[(2, 0, 1), (0, 2, 1), (0, 0, -1)]);
        let g2 = x().sub(&y());
        let mut sol = solve_bivariate(&g1, &g2).unwrap();
        // f = x + y at (sqrt(1/2), sqrt(1/2)) is sqrt(2).
        let f = x().add(&y());
        let v = sol.points[1].eval_algebraic(&f);
        let s2 = AlgebraicReal::roots_of(&ZPoly::from_i64(&[-2, 0, 1]));
        assert_eq!(v, s2[1]);
    }
}
