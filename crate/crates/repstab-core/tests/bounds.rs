use repstab_core::bounds::{
    evaluate, pbr_closed_form, repstab_recursion, BoundInputs, BoundKind, BoundValue, ExtInt,
    Theta,
};

fn fin(v: i64) -> ExtInt {
    ExtInt::Fin(v)
}

#[test]
fn theta_table() {
    assert_eq!(Theta::Sym.eval(fin(3), fin(5), 2), fin(10));
    assert_eq!(Theta::Sym.eval(fin(3), ExtInt::NegInf, 2), fin(8));
    assert_eq!(Theta::U1.eval(fin(3), fin(5), 2), fin(7));
    assert_eq!(Theta::U1.eval(fin(3), fin(1), 2), fin(6));
    assert_eq!(Theta::Sym.eval(ExtInt::NegInf, fin(1), 2), ExtInt::NegInf);
}

#[test]
fn central_and_tor_thresholds() {
    // max(d+i+1, ki+a+r) with r = 1, d = -1, k = 2, a = 2, i = 0 gives 3.
    let inputs = BoundInputs {
        d: Some(-1),
        r: Some(fin(1)),
        i: Some(0),
        k: Some(2),
        a: Some(2),
        ..Default::default()
    };
    assert_eq!(
        evaluate(BoundKind::Central, &inputs).unwrap(),
        BoundValue::Threshold(fin(3))
    );
    assert_eq!(
        evaluate(BoundKind::Tor, &inputs).unwrap(),
        BoundValue::Threshold(fin(1))
    );
}

#[test]
fn pbr_example_values() {
    // d = -1, r = 1: g_i = 7·2^{i-1} - 2, r_i = 7·2^{i-1} - 1.
    for i in 1..=5i64 {
        let (g, r) = pbr_closed_form(-1, fin(1), i);
        let expect = 7 * (1 << (i - 1)) - 2;
        assert_eq!(g, fin(expect), "i={i}");
        assert_eq!(r, fin(expect + 1), "i={i}");
    }
    assert_eq!(pbr_closed_form(-1, fin(1), 1).0, fin(5));
    // Base case.
    let (g0, r0) = pbr_closed_form(-1, fin(1), 0);
    assert_eq!((g0, r0), (fin(1), fin(3)));
}

#[test]
fn recursion_reproduces_pbr_closed_form() {
    // The closed form is the recursion's value in the regime where the
    // coherence terms dominate: r = -∞, or 0 ≤ r with d ≤ r.
    let mut cases: Vec<(i64, ExtInt)> = vec![
        (-1, ExtInt::NegInf),
        (0, ExtInt::NegInf),
        (2, ExtInt::NegInf),
    ];
    for r in 0..=3i64 {
        for d in -1..=r {
            cases.push((d, fin(r)));
        }
    }
    for (d, r) in cases {
        let seq = repstab_recursion(Theta::Sym, 2, 2, d, r, 4);
        for (i, &(g, rr)) in seq.iter().enumerate() {
            let (ge, re) = pbr_closed_form(d, r, i as i64);
            assert_eq!((g, rr), (ge, re), "d={d} r={r} i={i}");
        }
    }
}

#[test]
fn recursion_monotone() {
    // Monotone nondecreasing in i, r, and d.
    let base = repstab_recursion(Theta::Sym, 2, 2, 0, fin(1), 5);
    for w in base.windows(2) {
        assert!(w[1].0 >= w[0].0 && w[1].1 >= w[0].1);
    }
    let bigger_r = repstab_recursion(Theta::Sym, 2, 2, 0, fin(2), 5);
    let bigger_d = repstab_recursion(Theta::Sym, 2, 2, 1, fin(1), 5);
    for i in 0..=5 {
        assert!(bigger_r[i].0 >= base[i].0 && bigger_r[i].1 >= base[i].1);
        assert!(bigger_d[i].0 >= base[i].0 && bigger_d[i].1 >= base[i].1);
    }
    // Same properties for the action-free coherence function.
    let u1 = repstab_recursion(Theta::U1, 2, 2, 0, fin(1), 5);
    for w in u1.windows(2) {
        assert!(w[1].0 >= w[0].0 && w[1].1 >= w[0].1);
    }
}

#[test]
fn neg_inf_passes_through() {
    let seq = repstab_recursion(Theta::Sym, 2, 2, 3, ExtInt::NegInf, 2);
    // With r = -∞ the base cases collapse to d-driven values.
    assert_eq!(seq[0], (fin(3), fin(4)));
    let inputs = BoundInputs {
        d: Some(2),
        r: Some(ExtInt::NegInf),
        i: Some(3),
        ..Default::default()
    };
    assert_eq!(
        evaluate(BoundKind::Tor, &inputs).unwrap(),
        BoundValue::Threshold(fin(5))
    );
}

#[test]
fn congruence_formula() {
    let inputs = BoundInputs {
        i: Some(1),
        s: Some(2),
        t: Some(3),
        ..Default::default()
    };
    // max(8+8+3+8, 4+4+6-1) = 27.
    assert_eq!(
        evaluate(BoundKind::Congruence, &inputs).unwrap(),
        BoundValue::Threshold(fin(27))
    );
}

#[test]
fn missing_inputs_are_reported() {
    let err = evaluate(BoundKind::Central, &BoundInputs::default()).unwrap_err();
    assert!(err.to_string().contains("requires input"));
}
