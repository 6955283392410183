use octospin::degree::{degree_ledger, verify_square, winding_degree, DEFAULT_SAMPLES};
use octospin::{CirclePoint, Rational, Scalar, Tolerance};

type P = CirclePoint<Rational>;

fn power(p: &P, k: i64) -> P {
    let base = if k < 0 { p.inverse() } else { p.clone() };
    (0..k.abs()).fold(P::identity(), |acc, _| acc.angle_sum(&base))
}

#[test]
fn degree_of_powers() {
    for k in -3..=3 {
        assert_eq!(
            winding_degree(|p: &P| power(p, k), DEFAULT_SAMPLES),
            Ok(k),
            "z^{k}"
        );
    }
}

#[test]
fn degree_is_multiplicative_under_composition() {
    let twist = P::from_parameter(&Rational::from_ratio(3, 7));
    for a in [-2i64, -1, 1, 2, 3] {
        for b in [-2i64, 1, 2] {
            let f = |p: &P| power(p, a).angle_sum(&twist);
            let g = |p: &P| power(p, b);
            let df = winding_degree(f, DEFAULT_SAMPLES).unwrap();
            let dg = winding_degree(g, DEFAULT_SAMPLES).unwrap();
            let dfg = winding_degree(|p: &P| f(&g(p)), DEFAULT_SAMPLES).unwrap();
            assert_eq!(dfg, df * dg, "a={a}, b={b}");
        }
    }
}

#[test]
fn degree_independent_of_sample_count() {
    let maps: [fn(&P) -> P; 4] = [
        |p| p.clone(),
        |p| p.double_angle(),
        |p| p.inverse().double_angle(),
        |p| p.double_angle().angle_sum(p),
    ];
    for f in maps {
        assert_eq!(winding_degree(f, 256), winding_degree(f, 1024));
    }
}

#[test]
fn float_backend_degrees() {
    type F = CirclePoint<f64>;
    assert_eq!(winding_degree(|p: &F| p.double_angle(), 256), Ok(2));
    assert_eq!(winding_degree(|p: &F| p.inverse(), 256), Ok(-1));
}

#[test]
fn square_and_ledger() {
    let square = verify_square::<Rational>(5, 20, Tolerance::default()).unwrap();
    assert!(square.pass());
    assert_eq!(square.max_residual, Rational::zero());
    let d = winding_degree(|p: &P| p.double_angle(), DEFAULT_SAMPLES).unwrap();
    let ledger = degree_ledger(&square, d, d).unwrap();
    assert_eq!(ledger.p_degree, 4);
    assert_eq!(ledger.conclusion_magnitude, 8);
    assert_eq!(
        ledger.conclusion_magnitude * ledger.cover_multiplier,
        ledger.h_multiplier_magnitude * ledger.p_degree
    );
    assert!(!ledger.sign_determined);
}

#[test]
fn float_square_residual_is_small() {
    let square = verify_square::<f64>(5, 20, Tolerance::default()).unwrap();
    assert!(square.pass());
    assert!(square.max_residual < 1e-12, "{}", square.max_residual);
}
