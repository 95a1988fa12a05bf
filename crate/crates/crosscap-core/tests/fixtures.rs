//! Exact fixtures: the piecewise formulas of X for the reference systems of
//! small knots, and the fully worked type I case list.

use crosscap_core::fraction::frac;
use crosscap_core::{
    big_x, chi_ratio, lambda_a_system, parse_pretzel, solve_type_i, stats, BasicEdgepath,
    Fraction, PiecewiseLinear, Variant,
};

fn pl(pts: &[(i64, i64, i64, i64)], slope: (i64, i64)) -> PiecewiseLinear {
    PiecewiseLinear::new(
        pts.iter()
            .map(|&(wn, wd, vn, vd)| (frac(wn, wd), frac(vn, vd)))
            .collect(),
        frac(slope.0, slope.1),
    )
}

fn x_lambda_a(params: &[i64]) -> PiecewiseLinear {
    big_x(&lambda_a_system(&parse_pretzel(params).unwrap()))
}

#[test]
fn x_fixture_2333() {
    // (N-5)w/2 + (N+1)/2 with N = 4 on [1,2], then flat, then w/2
    let expected = pl(&[(1, 1, 2, 1), (2, 1, 3, 2), (3, 1, 3, 2)], (1, 2));
    assert_eq!(x_lambda_a(&[2, 3, 3, 3]), expected);
}

#[test]
fn x_fixture_33333() {
    // (N-4)w/2 + N/2 with N = 5 on [1,3], then 4w/3
    let expected = pl(&[(1, 1, 3, 1), (3, 1, 4, 1)], (4, 3));
    assert_eq!(x_lambda_a(&[3, 3, 3, 3, 3]), expected);
}

#[test]
fn x_fixture_357() {
    // w/12 + 11/12; w/4 + 5/12; 3w/10 + 1/6; 34w/105
    let expected = pl(
        &[(1, 1, 1, 1), (3, 1, 7, 6), (5, 1, 5, 3), (7, 1, 34, 15)],
        (34, 105),
    );
    assert_eq!(x_lambda_a(&[3, 5, 7]), expected);
    // works for any arrangement of the same absolute values
    assert_eq!(x_lambda_a(&[-7, 5, -3]), expected);
}

#[test]
fn x_fixture_555() {
    // w/4 + 3/4 on [1,5], then 2w/5
    let expected = pl(&[(1, 1, 1, 1), (5, 1, 2, 1)], (2, 5));
    assert_eq!(x_lambda_a(&[5, 5, 5]), expected);
    assert_eq!(x_lambda_a(&[5, 5, 5]).eval(&frac(5, 1)).unwrap(), frac(2, 1));
}

#[test]
fn type_i_case_minus3_minus5_5_worked_in_full() {
    let k = parse_pretzel(&[-3, -5, 5]).unwrap();
    let sols = solve_type_i(&k).unwrap();
    assert_eq!(sols.systems.len(), 1);
    assert!(sols.families.is_empty());
    let sys = &sols.systems[0];
    assert_eq!(sys.w0(), Some(&frac(7, 3)));
    assert_eq!(chi_ratio(sys).unwrap(), frac(3, 1));

    let shown: Vec<String> = sys.paths().iter().map(|p| p.to_string()).collect();
    assert_eq!(shown[0], "(1/3)<0>+(2/3)<-1/3> -- <-1/3>");
    assert_eq!(shown[1], "(2/3)<0>+(1/3)<-1/5> -- <-1/5>");
    assert_eq!(shown[2], "(2/3)<1/2>+(1/3)<1/3> -- <1/3> -- <1/4> -- <1/5>");

    let st = stats(sys).unwrap();
    assert_eq!(st.sheets_lb, num_bigint::BigInt::from(3));
    assert!(!st.spanning_candidate);
}

#[test]
fn type_i_case_minus3_minus3_n_path_notation() {
    let k = parse_pretzel(&[-3, -3, 5]).unwrap();
    let sols = solve_type_i(&k).unwrap();
    let sys = &sols.systems[0];
    let shown: Vec<String> = sys.paths().iter().map(|p| p.to_string()).collect();
    assert_eq!(shown[0], "(1/2)<0>+(1/2)<-1/3> -- <-1/3>");
    assert_eq!(shown[1], "(1/2)<0>+(1/2)<-1/3> -- <-1/3>");
    assert_eq!(shown[2], "<1/2> -- <1/3> -- <1/4> -- <1/5>");
}

#[test]
fn type_i_chi_matches_x_at_w0_for_battery() {
    // the structural formula and the closed-form X agree on every solution
    let battery: &[&[i64]] = &[
        &[-3, -3, 3],
        &[-3, -3, 5],
        &[-3, -3, 7],
        &[-3, 3, 3],
        &[-3, 3, 5],
        &[-3, -5, 5],
        &[-2, 3, 3],
        &[-2, 3, 5],
        &[2, -3, 5, -7],
        &[-2, 3, 3, 3],
    ];
    for params in battery {
        let k = parse_pretzel(params).unwrap();
        let sols = solve_type_i(&k).unwrap();
        for sys in &sols.systems {
            let w0 = sys.w0().unwrap();
            let from_x = big_x(sys.source_basic()).eval(w0).unwrap();
            assert_eq!(
                chi_ratio(sys).unwrap(),
                from_x,
                "dual-route mismatch for {params:?} at w0 = {w0}"
            );
        }
        for fam in &sols.families {
            // the family ratio at interior sample points matches the
            // structural formula of the concrete member
            let lo = fam.w_start();
            let hi = fam.w_end().cloned().unwrap_or_else(|| lo + &frac(2, 1));
            let mid = &(lo + &hi) / &frac(2, 1);
            for w in [mid, hi] {
                if &w <= lo || !fam.contains(&w) {
                    continue;
                }
                let member = fam.member_at(&w).unwrap();
                assert_eq!(
                    chi_ratio(&member).unwrap(),
                    fam.ratio_fn().eval(&w).unwrap(),
                    "family mismatch for {params:?} at w = {w}"
                );
            }
        }
    }
}

#[test]
fn x_lambda_a_is_minimal_over_basic_systems() {
    for params in [[2i64, 3, 5].as_slice(), &[-3, 3, 5], &[3, 5, 7], &[-2, 3, 3, 3]] {
        let k = parse_pretzel(params).unwrap();
        let x_a = big_x(&lambda_a_system(&k));
        for basics in crosscap_core::basic_systems(&k) {
            let x = big_x(&basics);
            let mut ws: Vec<Fraction> = x_a
                .breakpoints()
                .iter()
                .chain(x.breakpoints())
                .map(|(w, _)| w.clone())
                .collect();
            ws.push(frac(37, 7));
            ws.push(frac(100, 1));
            for w in ws {
                assert!(x_a.eval(&w).unwrap() <= x.eval(&w).unwrap());
            }
        }
    }
}

#[test]
fn b_variant_system_x_values() {
    // mixed-variant X built from the same summands stays exact
    let sys = [
        BasicEdgepath::new(-3, Variant::B).unwrap(),
        BasicEdgepath::new(3, Variant::A).unwrap(),
        BasicEdgepath::new(5, Variant::A).unwrap(),
    ];
    let x = big_x(&sys);
    // at the unique gluing root w = 7/3 the value is the chi ratio 1
    assert_eq!(x.eval(&frac(7, 3)).unwrap(), frac(1, 1));
}
