//! Property suites: function-algebra laws, root-solver oracle agreement,
//! monotonicity of X along the tuple preorder, and symmetry of the candidate
//! enumeration.

use proptest::prelude::*;

use crosscap_core::fraction::frac;
use crosscap_core::{
    basic_systems, big_x, chi_ratio, enumerate_type_ii, enumerate_type_iii, gluing_sum,
    lambda_a_system, parse_pretzel, solve_type_i, stats, x_of, BasicEdgepath, Fraction,
    PiecewiseLinear, Variant,
};

// -------------------------------------------------------------------------
// x functions, deterministic sweep over |p| in [2, 30]

#[test]
fn x_a_below_x_b_and_both_strictly_decreasing() {
    for p in 2i64..=30 {
        for signed in [p, -p] {
            let a = x_of(&BasicEdgepath::new(signed, Variant::A).unwrap());
            let b = x_of(&BasicEdgepath::new(signed, Variant::B).unwrap());
            let mut ws: Vec<Fraction> = a
                .breakpoints()
                .iter()
                .chain(b.breakpoints())
                .map(|(w, _)| w.clone())
                .collect();
            for k in 0..60 {
                ws.push(frac(7 * k + 9, 8));
            }
            for w in &ws {
                assert!(a.eval(w).unwrap() <= b.eval(w).unwrap(), "p = {signed}, w = {w}");
            }
            for f in [&a, &b] {
                for pair in f.breakpoints().windows(2) {
                    assert!(pair[0].1 > pair[1].1, "segment not decreasing for p = {signed}");
                }
                assert!(f.final_slope().is_negative());
            }
        }
    }
}

// -------------------------------------------------------------------------
// root-solver oracle

/// Checks `roots()` against a dense grid: every reported zero is exact, every
/// strict sign change on the grid brackets a reported root, every zero found
/// on the grid or at a breakpoint is covered, and no root can hide beyond the
/// grid end.
fn check_roots_against_grid(f: &PiecewiseLinear, denom: i64) {
    let r = f.roots();
    let zero = Fraction::zero();
    for root in &r.isolated {
        assert_eq!(f.eval(root).unwrap(), zero, "reported root is not a zero");
    }
    let covered = |w: &Fraction| -> bool {
        r.isolated.contains(w)
            || r.intervals.iter().any(|iv| {
                w >= &iv.start && iv.end.as_ref().map_or(true, |e| w <= e)
            })
    };
    for iv in &r.intervals {
        assert_eq!(f.eval(&iv.start).unwrap(), zero);
        if let Some(end) = &iv.end {
            assert_eq!(f.eval(end).unwrap(), zero);
            let mid = &(&iv.start + end) / &frac(2, 1);
            assert_eq!(f.eval(&mid).unwrap(), zero);
        }
    }
    // grid end: past the last breakpoint and past every reported root
    let mut end = f.breakpoints().last().unwrap().0.clone();
    for root in &r.isolated {
        if root > &end {
            end = root.clone();
        }
    }
    for iv in &r.intervals {
        if let Some(e) = &iv.end {
            if e > &end {
                end = e.clone();
            }
        }
    }
    end = &end + &Fraction::one();

    // a zero strictly inside an affine piece without a sign change would make
    // the piece identically zero, so breakpoints + grid + brackets see all
    for (w, v) in f.breakpoints() {
        if v.is_zero() {
            assert!(covered(w), "zero breakpoint not covered at w = {w}");
        }
    }
    let start = f.domain_start().clone();
    let steps_num = (&(&end - &start) * &Fraction::from_int(denom)).floor_int();
    let steps = i64::try_from(&steps_num).unwrap();
    let mut prev: Option<(Fraction, i32)> = None;
    for k in 0..=steps {
        let w = &start + &frac(k, denom);
        let v = f.eval(&w).unwrap();
        let s = v.signum();
        if s == 0 {
            assert!(covered(&w), "grid zero not covered at w = {w}");
        }
        if let Some((pw, ps)) = &prev {
            if *ps != 0 && s != 0 && *ps != s {
                let hit = r.isolated.iter().any(|x| x > pw && x < &w)
                    || r.intervals.iter().any(|iv| &iv.start > pw && iv.start < w);
                assert!(hit, "sign change in ({pw}, {w}) without a reported root");
            }
        }
        prev = Some((w, s));
    }
    // beyond the grid the function is affine and moving away from zero
    let v_end = f.eval(&end).unwrap();
    if !v_end.is_zero() {
        assert!(
            f.final_slope().signum() == 0 || f.final_slope().signum() == v_end.signum(),
            "possible unreported root beyond the grid"
        );
    } else {
        assert!(covered(&end));
    }
}

#[test]
fn gluing_sum_roots_agree_with_grid_oracle_on_battery() {
    let battery: &[&[i64]] = &[
        &[2, 3, 3],
        &[2, 3, 5],
        &[-2, 3, 3],
        &[3, 3, 3],
        &[-3, 3, 3],
        &[-3, 3, 5],
        &[-3, -3, 5],
        &[-3, -5, 5],
        &[-3, 5, 5],
        &[3, 5, 7],
        &[5, 5, 5],
        &[2, 3, 3, 3],
        &[3, 3, 3, 3, 3],
        &[-2, 3, 3, 3],
        &[2, -3, 5, -7],
    ];
    for params in battery {
        let k = parse_pretzel(params).unwrap();
        for basics in basic_systems(&k) {
            check_roots_against_grid(&gluing_sum(&basics), 72);
        }
    }
}

fn arb_pl() -> impl Strategy<Value = PiecewiseLinear> {
    (
        prop::collection::vec((1i64..=6, -6i64..=6, 1i64..=4), 1..5),
        (-4i64..=4, 1i64..=3),
    )
        .prop_map(|(segments, (sn, sd))| {
            let mut w = frac(1, 1);
            let mut bps = Vec::new();
            for (dw, vn, vd) in segments {
                bps.push((w.clone(), frac(vn, vd)));
                w = &w + &frac(dw, 3);
            }
            PiecewiseLinear::new(bps, frac(sn, sd))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn random_pl_roots_agree_with_grid_oracle(f in arb_pl()) {
        check_roots_against_grid(&f, 360);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sum_is_pointwise_addition(fs in prop::collection::vec(arb_pl(), 1..4), ws in prop::collection::vec((0i64..200, 1i64..40), 20)) {
        let s = PiecewiseLinear::sum(&fs);
        for (n, d) in ws {
            let w = &frac(1, 1) + &frac(n, d);
            let direct: Fraction = fs.iter().map(|f| f.eval(&w).unwrap()).sum();
            prop_assert_eq!(s.eval(&w).unwrap(), direct);
        }
    }
}

// -------------------------------------------------------------------------
// preorder monotonicity of X

fn arb_comparable_tuples() -> impl Strategy<Value = (Vec<i64>, Vec<i64>)> {
    prop::collection::vec((2i64..=9, 0i64..=4, prop::bool::ANY, prop::bool::ANY), 3..=6).prop_map(
        |entries| {
            let t1: Vec<i64> = entries
                .iter()
                .map(|(base, _, neg1, _)| if *neg1 { -base } else { *base })
                .collect();
            let t2: Vec<i64> = entries
                .iter()
                .map(|(base, grow, _, neg2)| {
                    let v = base + grow;
                    if *neg2 {
                        -v
                    } else {
                        v
                    }
                })
                .collect();
            (t1, t2)
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn x_lambda_a_monotone_under_preorder((t1, t2) in arb_comparable_tuples()) {
        prop_assert!(crosscap_core::tuple_le(&t1, &t2).unwrap());
        let x1 = big_x(&t1.iter().map(|&p| BasicEdgepath::new(p, Variant::A).unwrap()).collect::<Vec<_>>());
        let x2 = big_x(&t2.iter().map(|&p| BasicEdgepath::new(p, Variant::A).unwrap()).collect::<Vec<_>>());
        let mut ws: Vec<Fraction> = x1
            .breakpoints()
            .iter()
            .chain(x2.breakpoints())
            .map(|(w, _)| w.clone())
            .collect();
        for k in 1..12 {
            ws.push(frac(11 * k + 5, 7));
        }
        for w in ws {
            prop_assert!(x1.eval(&w).unwrap() <= x2.eval(&w).unwrap());
        }
    }

    #[test]
    fn equivalent_tuples_share_x(perm in prop::collection::vec(2i64..=9, 3..=5), flips in prop::collection::vec(prop::bool::ANY, 5)) {
        let t1: Vec<i64> = perm
            .iter()
            .zip(&flips)
            .map(|(p, f)| if *f { -p } else { *p })
            .collect();
        let mut t2 = t1.clone();
        t2.reverse();
        let t2: Vec<i64> = t2.iter().map(|p| -p).collect();
        prop_assert!(crosscap_core::tuple_equiv(&t1, &t2).unwrap());
        let to_x = |t: &[i64]| {
            big_x(&t.iter().map(|&p| BasicEdgepath::new(p, Variant::A).unwrap()).collect::<Vec<_>>())
        };
        prop_assert_eq!(to_x(&t1), to_x(&t2));
    }
}

// -------------------------------------------------------------------------
// candidate symmetry and structural invariants

fn arb_knot_params() -> impl Strategy<Value = Vec<i64>> {
    (
        prop::collection::vec((1i64..=4, prop::bool::ANY), 3..=5),
        prop::bool::ANY,
    )
        .prop_map(|(raw, class_a)| {
            let mut params: Vec<i64> = raw
                .iter()
                .map(|(m, neg)| {
                    let v = 2 * m + 1; // odd, in [3, 9]
                    if *neg {
                        -v
                    } else {
                        v
                    }
                })
                .collect();
            if params.len() % 2 == 0 || class_a {
                params[0] = params[0].signum() * (params[0].abs() + 1); // one even entry
            }
            params
        })
}

/// Sorted multiset of (chi, sheets) over all candidates of a knot.
fn candidate_signature(params: &[i64]) -> Vec<(String, String)> {
    let k = parse_pretzel(params).unwrap();
    let mut sig: Vec<(String, String)> = Vec::new();
    let sols = solve_type_i(&k).unwrap();
    for sys in &sols.systems {
        let st = stats(sys).unwrap();
        sig.push((st.chi_ratio.to_string(), st.sheets_lb.to_string()));
    }
    for fam in &sols.families {
        sig.push((
            format!(
                "family {}..{}",
                fam.w_start(),
                fam.w_end().map(|e| e.to_string()).unwrap_or_default()
            ),
            fam.ratio_fn()
                .eval(fam.w_end().unwrap_or(fam.w_start()))
                .unwrap()
                .to_string(),
        ));
    }
    for sys in enumerate_type_ii(&k, 2).unwrap().iter().chain(enumerate_type_iii(&k).unwrap().iter()) {
        let st = stats(sys).unwrap();
        sig.push((st.chi_ratio.to_string(), st.sheets_lb.to_string()));
    }
    sig.sort();
    sig
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn candidate_stats_invariant_under_negation_and_permutation(params in arb_knot_params()) {
        let base = candidate_signature(&params);

        let negated: Vec<i64> = params.iter().map(|p| -p).collect();
        prop_assert_eq!(&base, &candidate_signature(&negated));

        let mut rotated = params.clone();
        rotated.rotate_left(1);
        prop_assert_eq!(&base, &candidate_signature(&rotated));
    }

    #[test]
    fn emitted_systems_pass_invariants(params in arb_knot_params()) {
        let k = parse_pretzel(&params).unwrap();
        let sols = solve_type_i(&k).unwrap();
        for sys in &sols.systems {
            sys.validate().unwrap();
            let w0 = sys.w0().unwrap();
            prop_assert_eq!(gluing_sum(sys.source_basic()).eval(w0).unwrap(), Fraction::zero());
        }
        for fam in &sols.families {
            let hi = fam.w_end().cloned().unwrap_or_else(|| fam.w_start() + &frac(3, 1));
            let mid = &(fam.w_start() + &hi) / &frac(2, 1);
            for w in [mid, hi] {
                if fam.contains(&w) && w > frac(1, 1) {
                    let member = fam.member_at(&w).unwrap();
                    member.validate().unwrap();
                    prop_assert_eq!(gluing_sum(fam.source_basic()).eval(&w).unwrap(), Fraction::zero());
                }
            }
        }
        for sys in enumerate_type_ii(&k, 2).unwrap().iter().chain(enumerate_type_iii(&k).unwrap().iter()) {
            sys.validate().unwrap();
            let _ = chi_ratio(sys).unwrap();
        }
        // the reference system's X is the minimum, spot-checked at w = 2
        let x_a = big_x(&lambda_a_system(&k));
        for basics in basic_systems(&k) {
            prop_assert!(x_a.eval(&frac(2, 1)).unwrap() <= big_x(&basics).eval(&frac(2, 1)).unwrap());
        }
    }
}
