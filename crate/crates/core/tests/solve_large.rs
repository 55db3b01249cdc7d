//! A full-size system: a degree-nine curve paired with its rotational
//! companion x*h_y - y*h_x. The eliminant here has degree 50, so this
//! exercises fiber arithmetic over large root contexts.

use bifurc_core::num::rat_int;
use bifurc_core::poly::{milnor_poly, squarefree_part, BiPoly, Var};
use bifurc_core::realroots::{certified_sign, solve_bivariate, Sign, SignPolicy};

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

#[test]
fn rotational_companion_system() {
    let f = sample_f();
    let zero = rat_int(0);
    let h = squarefree_part(&milnor_poly(&f, (&zero, &zero))).unwrap();
    assert_eq!(h.total_degree(), Some(9));
    let x = BiPoly::var(Var::X);
    let y = BiPoly::var(Var::Y);
    let companion = x.mul(&h.diff(Var::Y)).sub(&y.mul(&h.diff(Var::X)));
    let mut sol = solve_bivariate(&h, &companion).unwrap();
    assert!(sol.curves.is_empty());
    assert!(!sol.points.is_empty());
    // Every solution lies well inside the disk of radius 10.
    let norm_gate = BiPoly::from_int_terms(&[(2, 0, 1), (0, 2, 1), (0, 0, -100)]);
    for p in sol.points.iter_mut() {
        assert_eq!(
            certified_sign(&norm_gate, p, SignPolicy::Exact).unwrap(),
            Sign::Negative
        );
        assert_eq!(
            certified_sign(&h, p, SignPolicy::Exact).unwrap(),
            Sign::Zero
        );
    }
    // Boxes come out sorted by x and pairwise disjoint.
    for w in sol.points.windows(2) {
        assert!(w[0].x().hi <= w[1].x().lo || w[0].y().disjoint(w[1].y()));
    }
}
