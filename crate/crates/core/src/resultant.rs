//! Exact resultants over Q[x] via the subresultant pseudo-remainder
//! sequence.
//!
//! The input is a polynomial in a main variable whose coefficients live in
//! Q[x], given as a coefficient vector indexed by the main-variable power.
//! Content-stripped remainder sequences can silently drop factors of the
//! resultant (the dropped contents carry projection roots), so this module
//! keeps the exact subresultant bookkeeping: every division below is exact
//! and the result is the true determinant of the Sylvester matrix.

use crate::num::Rat;
use crate::unipoly::QPoly;
use num_traits::One;

fn deg(p: &[QPoly]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn trim(mut p: Vec<QPoly>) -> Vec<QPoly> {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

fn qpow(base: &QPoly, e: usize) -> QPoly {
    let mut acc = QPoly::constant(Rat::one());
    for _ in 0..e {
        acc = acc.mul(base);
    }
    acc
}

fn scale(p: &[QPoly], c: &QPoly) -> Vec<QPoly> {
    p.iter().map(|t| t.mul(c)).collect()
}

fn exact_div_all(p: &[QPoly], c: &QPoly) -> Vec<QPoly> {
    p.iter().map(|t| t.exact_div(c)).collect()
}

fn content(p: &[QPoly]) -> QPoly {
    let mut g = QPoly::zero();
    for c in p {
        g = QPoly::gcd(&g, c);
        if g.deg() == Some(0) {
            break;
        }
    }
    g
}

/// Exact pseudo-remainder: returns R with lc(b)^(deg a - deg b + 1) * a =
/// q * b + R and deg R < deg b. The multiplier exponent is uniform.
fn prem(a: &[QPoly], b: &[QPoly]) -> Vec<QPoly> {
    let da = deg(a).expect("prem of zero");
    let db = deg(b).expect("prem by zero");
    assert!(da >= db);
    let lc = b[db].clone();
    let mut r: Vec<QPoly> = a.to_vec();
    let mut e = da - db + 1;
    while let Some(dr) = deg(&r) {
        if dr < db {
            break;
        }
        let lead = r[dr].clone();
        // r := lc * r - lead * x^(dr-db) * b
        for t in r.iter_mut() {
            *t = t.mul(&lc);
        }
        for i in 0..=db {
            r[dr - db + i] = r[dr - db + i].sub(&lead.mul(&b[i]));
        }
        r = trim(r);
        e -= 1;
    }
    if e > 0 {
        let f = qpow(&lc, e);
        r = scale(&r, &f);
    }
    r
}

/// Resultant with respect to the main variable; the result lives in Q[x].
pub fn resultant(a: &[QPoly], b: &[QPoly]) -> QPoly {
    let a = trim(a.to_vec());
    let b = trim(b.to_vec());
    let (da, db) = match (deg(&a), deg(&b)) {
        (Some(da), Some(db)) => (da, db),
        // Conventions for degenerate inputs; callers eliminate with at
        // least one nonconstant argument.
        _ => return QPoly::zero(),
    };
    if da == 0 && db == 0 {
        return QPoly::constant(Rat::one());
    }
    let mut s_neg = false;
    let (mut f, mut g) = if da >= db {
        (a, b)
    } else {
        if da % 2 == 1 && db % 2 == 1 {
            s_neg = true;
        }
        (b, a)
    };
    if deg(&g) == Some(0) {
        let res = qpow(&g[0], deg(&f).unwrap());
        return if s_neg { res.neg() } else { res };
    }
    let ca = content(&f);
    let cb = content(&g);
    f = exact_div_all(&f, &ca);
    g = exact_div_all(&g, &cb);
    let mut t = qpow(&ca, deg(&g).unwrap()).mul(&qpow(&cb, deg(&f).unwrap()));
    if s_neg {
        t = t.neg();
    }
    let mut h = QPoly::constant(Rat::one());
    let mut gg = QPoly::constant(Rat::one());
    loop {
        let df = deg(&f).unwrap();
        let dg = deg(&g).unwrap();
        let delta = df - dg;
        if df % 2 == 1 && dg % 2 == 1 {
            t = t.neg();
        }
        let r = prem(&f, &g);
        f = g;
        let divisor = gg.mul(&qpow(&h, delta));
        g = exact_div_all(&r, &divisor);
        gg = f[deg(&f).unwrap()].clone();
        if delta > 0 {
            // h := gg^delta / h^(delta-1), exact in Q[x].
            h = qpow(&gg, delta).exact_div(&qpow(&h, delta - 1));
        }
        match deg(&g) {
            None => return QPoly::zero(),
            Some(0) => break,
            Some(_) => {}
        }
    }
    let dprev = deg(&f).unwrap();
    let last = g[0].clone();
    let hfin = qpow(&last, dprev).exact_div(&qpow(&h, dprev - 1));
    t.mul(&hfin)
}

fn neg_all(p: &[QPoly]) -> Vec<QPoly> {
    p.iter().map(|c| c.neg()).collect()
}

/// Pseudo-remainder by the negated divisor: prem(a, -b), which equals
/// prem(a, b) negated exactly when deg a - deg b is even.
fn sprem(a: &[QPoly], b: &[QPoly]) -> Vec<QPoly> {
    let da = deg(a).expect("prem of zero");
    let db = deg(b).expect("prem by zero");
    let r = prem(a, b);
    if (da - db) % 2 == 0 {
        neg_all(&r)
    } else {
        r
    }
}

/// The polynomial subresultants S_0, ..., S_{q-1} of a and b in the main
/// variable, where q is the smaller of the two degrees. Entry j holds the
/// coefficient vector of S_j; an empty entry is the zero subresultant.
/// S_0 is the resultant. The inputs are interchangeable: swapping them
/// changes the chain only by row-global signs, which no consumer of
/// degree structure or coefficient ratios can observe.
///
/// This is the classical subresultant walk (Loos' presentation): each
/// division is exact, and defective degree drops emit the extra row S_e.
pub fn subresultant_chain(a: &[QPoly], b: &[QPoly]) -> Vec<Vec<QPoly>> {
    let av = trim(a.to_vec());
    let bv = trim(b.to_vec());
    let (av, bv) = if deg(&av) >= deg(&bv) {
        (av, bv)
    } else {
        (bv, av)
    };
    let p = deg(&av).expect("subresultants of the zero polynomial");
    let q = deg(&bv).expect("subresultants with a zero polynomial");
    assert!(q >= 1, "smaller input must have positive main degree");
    let mut rows: Vec<Vec<QPoly>> = vec![Vec::new(); q];
    let mut s = qpow(&bv[q], p - q);
    let mut cur_a = bv.clone();
    let mut cur_b = sprem(&av, &bv);
    loop {
        if cur_b.is_empty() {
            return rows;
        }
        let d = deg(&cur_a).unwrap();
        let e = deg(&cur_b).unwrap();
        rows[d - 1] = cur_b.clone();
        let delta = d - e;
        let c = if delta > 1 {
            let num = scale(&cur_b, &qpow(&cur_b[e], delta - 1));
            let cp = exact_div_all(&num, &qpow(&s, delta - 1));
            rows[e] = cp.clone();
            cp
        } else {
            cur_b.clone()
        };
        if e == 0 {
            return rows;
        }
        let divisor = qpow(&s, delta).mul(&cur_a[d]);
        let nb = exact_div_all(&sprem(&cur_a, &cur_b), &divisor);
        cur_a = c;
        s = cur_a[deg(&cur_a).unwrap()].clone();
        cur_b = nb;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;
    use crate::poly::{BiPoly, Var};

    fn res_y(a: &BiPoly, b: &BiPoly) -> QPoly {
        resultant(&a.y_coefficients(), &b.y_coefficients())
    }

    fn res_x(a: &BiPoly, b: &BiPoly) -> QPoly {
        resultant(&a.x_coefficients(), &b.x_coefficients())
    }

    fn qp(cs: &[i64]) -> QPoly {
        QPoly::from_coeffs(cs.iter().map(|&c| rat(c, 1)).collect())
    }

    #[test]
    fn circle_and_line() {
        let a = BiPoly::from_int_terms(&[(2, 0, 1), (0, 2, 1), (0, 0, -1)]);
        let b = BiPoly::from_int_terms(&[(1, 0, 1), (0, 1, -1)]);
        assert_eq!(res_y(&a, &b), qp(&[-1, 0, 2]));
        assert_eq!(res_x(&a, &b), qp(&[-1, 0, 2]));
    }

    #[test]
    fn content_growth_case() {
        // res_y(x^3 y^2 + x, y^2 - x^2) = x^10 + 2x^6 + x^2
        let a = BiPoly::from_int_terms(&[(3, 2, 1), (1, 0, 1)]);
        let b = BiPoly::from_int_terms(&[(0, 2, 1), (2, 0, -1)]);
        let mut want = vec![0i64; 11];
        want[10] = 1;
        want[6] = 2;
        want[2] = 1;
        assert_eq!(res_y(&a, &b), qp(&want));
    }

    #[test]
    fn dense_cases() {
        // res_y(2xy^3 - y^2 + 3x^2y - x + 1, y^2 + xy - 2x^2 + x)
        let a = BiPoly::from_int_terms(&[(1, 3, 2), (0, 2, -1), (2, 1, 3), (1, 0, -1), (0, 0, 1)]);
        let b = BiPoly::from_int_terms(&[(0, 2, 1), (1, 1, 1), (2, 0, -2), (1, 0, 1)]);
        assert_eq!(
            res_y(&a, &b),
            qp(&[1, 0, -5, 4, -8, 1, 20, -12, -32])
        );
        // res_y(y^4 - xy + x^3, 3y^2 - x^2 y + 2)
        let c = BiPoly::from_int_terms(&[(0, 4, 1), (1, 1, -1), (3, 0, 1)]);
        let d = BiPoly::from_int_terms(&[(0, 2, 3), (2, 1, -1), (0, 0, 2)]);
        let mut want = vec![0i64; 12];
        want[11] = 1;
        want[7] = -26;
        want[6] = 54;
        want[3] = 108;
        want[2] = 54;
        want[0] = 16;
        assert_eq!(res_y(&c, &d), qp(&want));
    }

    #[test]
    fn common_factor_gives_zero() {
        let s = BiPoly::var(Var::Y).sub(&BiPoly::var(Var::X));
        let a = s.mul(&BiPoly::from_int_terms(&[(0, 2, 1), (1, 0, 1)]));
        let b = s.mul(&BiPoly::from_int_terms(&[(0, 1, 1), (0, 0, 3)]));
        assert!(res_y(&a, &b).is_zero());
    }

    #[test]
    fn linear_elimination_matches_substitution() {
        // res_y(f, y - g(x)) = lc^deg * f(x, g(x)) up to sign conventions;
        // here both monic so check f(x, x^2) directly.
        let f = BiPoly::from_int_terms(&[(0, 2, 1), (1, 1, 1), (0, 0, -3)]);
        let g = BiPoly::from_int_terms(&[(0, 1, 1), (2, 0, -1)]);
        // f(x, x^2) = x^4 + x^3 - 3
        assert_eq!(res_y(&f, &g), qp(&[-3, 0, 0, 1, 1]));
    }

    #[test]
    fn primitive_element_resultant() {
        // Res_u(u^2 - 2, u^2 - (2t+1)u + t^2) = t^4 - 4t^2 - 8t + 2
        let m = vec![qp(&[-2]), qp(&[0]), qp(&[1])];
        let b = vec![qp(&[0, 0, 1]), qp(&[-1, -2]), qp(&[1])];
        assert_eq!(resultant(&b, &m), resultant(&m, &b));
        assert_eq!(resultant(&m, &b), qp(&[2, -8, -4, 0, 1]));
    }

    #[test]
    fn degenerate_conventions() {
        let f = BiPoly::from_int_terms(&[(0, 2, 1), (0, 0, 1)]);
        let c = BiPoly::from_int(5);
        // Res(f, 5) = 5^2
        assert_eq!(res_y(&f, &c), qp(&[25]));
        assert!(res_y(&f, &BiPoly::zero()).is_zero());
    }

    #[test]
    fn swap_sign_rule() {
        // deg 1 x deg 1 swap flips sign relative to unswapped order when
        // both degrees are odd: res(a, b) = -res(b, a).
        let a = BiPoly::from_int_terms(&[(0, 1, 1), (0, 0, -3)]);
        let b = BiPoly::from_int_terms(&[(0, 1, 1), (1, 0, -1)]);
        let r1 = res_y(&a, &b);
        let r2 = res_y(&b, &a);
        assert_eq!(r1, r2.neg());
        // Res(y-3, y-x) = lc^0 * (3 - x)... = x - 3 in one of the orders.
        assert!(r1 == qp(&[-3, 1]) || r1 == qp(&[3, -1]));
    }

    fn row(cs: &[&[i64]]) -> Vec<QPoly> {
        cs.iter().map(|c| qp(c)).collect()
    }

    #[test]
    fn chain_cubic_quadratic() {
        // a = y^3 + x*y + 1, b = 2y^2 - x
        let a = BiPoly::from_int_terms(&[(0, 3, 1), (1, 1, 1), (0, 0, 1)]);
        let b = BiPoly::from_int_terms(&[(0, 2, 2), (1, 0, -1)]);
        let ch = subresultant_chain(&a.y_coefficients(), &b.y_coefficients());
        assert_eq!(ch.len(), 2);
        assert_eq!(ch[0], row(&[&[8, 0, 0, -9]]));
        assert_eq!(ch[1], row(&[&[4], &[0, 6]]));
        // S_0 agrees with the resultant routine.
        assert_eq!(
            ch[0][0],
            resultant(&a.y_coefficients(), &b.y_coefficients())
        );
    }

    #[test]
    fn chain_defective_sequence() {
        // a = (y+1)(y^4+x) + x*y + 1, b = y^4 + x: the remainder degree
        // drops from 4 straight to 1, so S_2 is identically zero.
        let b = BiPoly::from_int_terms(&[(0, 4, 1), (1, 0, 1)]);
        let a = BiPoly::from_int_terms(&[
            (0, 5, 1),
            (0, 4, 1),
            (1, 1, 2),
            (1, 0, 1),
            (0, 0, 1),
        ]);
        let ch = subresultant_chain(&a.y_coefficients(), &b.y_coefficients());
        assert_eq!(ch.len(), 4);
        assert_eq!(ch[0], row(&[&[1, 0, 0, 0, 0, 1]]));
        assert_eq!(ch[1], row(&[&[0, 0, 1], &[0, 0, 0, 1]]));
        assert!(ch[2].is_empty());
        assert_eq!(ch[3], row(&[&[1], &[0, 1]]));
    }

    #[test]
    fn chain_equal_degrees() {
        // a = y^3 + x*y^2 - 1, b = 2y^3 - x^2*y + x
        let a = BiPoly::from_int_terms(&[(0, 3, 1), (1, 2, 1), (0, 0, -1)]);
        let b = BiPoly::from_int_terms(&[(0, 3, 2), (2, 1, -1), (1, 0, 1)]);
        let ch = subresultant_chain(&a.y_coefficients(), &b.y_coefficients());
        assert_eq!(ch.len(), 3);
        assert_eq!(ch[0], row(&[&[8, 12, 6, -7, -2, -1, 1]]));
        assert_eq!(ch[1], row(&[&[0, 0, -2, 1], &[0, 4, 2, 0, -1]]));
        assert_eq!(ch[2], row(&[&[2, 1], &[0, 0, -1], &[0, -2]]));
    }

    #[test]
    fn chain_detects_common_factor() {
        // (y - x) divides both: every row is zero.
        let w = BiPoly::from_int_terms(&[(0, 1, 1), (1, 0, -1)]);
        let a = w.mul(&BiPoly::from_int_terms(&[(0, 1, 1), (0, 0, 1)]));
        let b = w.mul(&BiPoly::from_int_terms(&[(0, 1, 1), (0, 0, -2)]));
        let ch = subresultant_chain(&a.y_coefficients(), &b.y_coefficients());
        assert!(ch[0].is_empty());
    }
}
