//! Scratch timing harness for the large-system solve pipeline.

use bifurc_core::poly::{milnor_poly, squarefree_part, BiPoly, Var};
use bifurc_core::resultant::subresultant_chain;
use bifurc_core::rootctx::RootCtx;
use bifurc_core::algebraic::AlgebraicReal;
use bifurc_core::num::rat;
use std::time::Instant;

fn sample_f() -> BiPoly {
    BiPoly::from_int_terms(&[
        (2, 7, 1),
        (2, 5, -50),
        (2, 3, 625),
        (1, 4, 2),
        (1, 3, 50),
        (1, 2, -50),
        (1, 1, -1250),
        (0, 4, -1),
        (0, 3, -1),
        (0, 2, 50),
        (0, 1, 51),
        (0, 0, -575),
    ])
}

fn main() {
    let t0 = Instant::now();
    let f = sample_f();
    let zero = rat(0, 1);
    let h = squarefree_part(&milnor_poly(&f, (&zero, &zero))).unwrap();
    let companion = BiPoly::var(Var::X)
        .mul(&h.diff(Var::Y))
        .sub(&BiPoly::var(Var::Y).mul(&h.diff(Var::X)));
    eprintln!("[{:?}] h and companion built", t0.elapsed());

    let t = Instant::now();
    let w = BiPoly::gcd(&h, &companion);
    eprintln!(
        "[{:?}] BiPoly::gcd, total degree {:?}",
        t.elapsed(),
        w.total_degree()
    );

    let t = Instant::now();
    let sol = bifurc_core::realroots::solve_bivariate(&h, &companion).unwrap();
    eprintln!(
        "[{:?}] solve_bivariate: {} points, {} curves",
        t.elapsed(),
        sol.points.len(),
        sol.curves.len()
    );
    let mut sol = sol;
    let far = BiPoly::from_int_terms(&[(2, 0, 1), (0, 2, 1), (0, 0, -100)]);
    for (i, p) in sol.points.iter_mut().enumerate() {
        let t = Instant::now();
        let s = bifurc_core::realroots::certified_sign(
            &far,
            p,
            bifurc_core::realroots::SignPolicy::Exact,
        )
        .unwrap();
        eprintln!("  point {}: [{:?}] far sign {:?}", i, t.elapsed(), s);
        let t = Instant::now();
        let r = bifurc_core::realroots::certified_sign(
            &h,
            p,
            bifurc_core::realroots::SignPolicy::IntervalOnly { rounds: 8 },
        );
        eprintln!("  point {}: [{:?}] h interval rounds -> {:?}", i, t.elapsed(), r);
        let t = Instant::now();
        let s = bifurc_core::realroots::certified_sign(
            &h,
            p,
            bifurc_core::realroots::SignPolicy::Exact,
        )
        .unwrap();
        eprintln!("  point {}: [{:?}] h sign {:?}", i, t.elapsed(), s);
    }
    eprintln!("[{:?}] total with certification", t0.elapsed());
    std::process::exit(0);

    for k in 0..4i64 {
        let kr = rat(k, 1);
        let s1 = h.shear_x(&kr);
        let s2 = companion.shear_x(&kr);
        let c1 = s1.y_coefficients();
        let c2 = s2.y_coefficients();
        let reg = |c: &[bifurc_core::unipoly::QPoly]| {
            c.last().map_or(false, |t| t.deg() == Some(0))
        };
        eprintln!(
            "k={} regular: {} {}",
            k,
            reg(&c1),
            reg(&c2)
        );
        if !reg(&c1) || !reg(&c2) {
            continue;
        }
        let t = Instant::now();
        let rows = subresultant_chain(&c1, &c2);
        eprintln!("[{:?}] chain, {} rows", t.elapsed(), rows.len());
        for (j, r) in rows.iter().enumerate() {
            eprintln!(
                "  row {}: len {}, max xdeg {:?}",
                j,
                r.len(),
                r.iter().filter_map(|c| c.deg()).max()
            );
        }
        let rx = &rows[0][0];
        let t = Instant::now();
        let rz = rx.to_primitive_z().squarefree_part();
        eprintln!("[{:?}] squarefree, deg {:?}", t.elapsed(), rz.deg());
        let t = Instant::now();
        let alphas = AlgebraicReal::roots_of(&rz);
        eprintln!("[{:?}] {} real roots", t.elapsed(), alphas.len());
        for (i, alpha) in alphas.iter().enumerate() {
            let t = Instant::now();
            let mut cx = RootCtx::from_algebraic(alpha);
            let c1_el = cx.reduce(&rows[1][1]);
            eprintln!(
                "  alpha {}: [{:?}] reduce row1 lead (ctx deg {})",
                i,
                t.elapsed(),
                cx.degree()
            );
            let t = Instant::now();
            let z = cx.is_zero_el(&c1_el);
            eprintln!("    [{:?}] sres_1 zero: {}", t.elapsed(), z);
            if !z {
                let t = Instant::now();
                let num = cx.neg(&cx.reduce(&rows[1][0]));
                let den = c1_el.clone();
                let x_num = cx.add(&cx.mul(&cx.generator(), &den), &cx.scale(&num, &kr));
                let target = rat(1, 16);
                let mut rounds = 0u32;
                loop {
                    let di = cx.el_interval(&den);
                    if di.sign().is_some() {
                        let x = cx.el_interval(&x_num).div(&di).unwrap();
                        let y = cx.el_interval(&num).div(&di).unwrap();
                        if x.width() <= target && y.width() <= target {
                            break;
                        }
                    }
                    cx.refine();
                    rounds += 1;
                }
                eprintln!(
                    "    [{:?}] fraction box to 1/16 in {} rounds",
                    t.elapsed(),
                    rounds
                );
            }
        }
        break;
    }
    eprintln!("[{:?}] total", t0.elapsed());
}
