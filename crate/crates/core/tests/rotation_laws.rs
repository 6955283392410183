use octospin::geometry::{cayley_orthogonal, plane_rotation, so_check};
use octospin::sampling::{Sampler, FRAME_RANGE};
use octospin::{
    CirclePoint, Matrix8, OrientedPlane, Rational, Scalar, Subspace, Tolerance, Vector8,
};
use proptest::prelude::*;

const INSTANCES: u64 = 200;

fn tol() -> Tolerance {
    Tolerance::default()
}

/// Random plane in ℝ⁸ (not only Im 𝕆) with a random nonzero scale.
fn random_plane(s: &mut Sampler) -> OrientedPlane<Rational> {
    let q = s.rotation::<Rational>(Subspace::R7);
    let r = s.rotation::<Rational>(Subspace::R7);
    // mixes e0 in: rotate the columns of q by a fixed rational rotation in [e0, e1]
    let mix = plane_rotation(
        &OrientedPlane::basis(0, 1),
        &CirclePoint::from_parameter(&Rational::from_ratio(1, 3)),
    );
    let m = mix.compose(&q).compose(&r);
    let lambda: Rational = s.nonzero_scalar(FRAME_RANGE);
    OrientedPlane::new(m.column(2), m.column(5), tol())
        .unwrap()
        .scaled(&lambda)
        .unwrap()
}

#[test]
fn one_parameter_subgroup() {
    for k in 0..INSTANCES {
        let mut s = Sampler::new(21, k);
        let p = random_plane(&mut s);
        let t = s.circle_point::<Rational>();
        let t2 = s.circle_point::<Rational>();
        assert_eq!(
            plane_rotation(&p, &t).compose(&plane_rotation(&p, &t2)),
            plane_rotation(&p, &t.angle_sum(&t2)),
            "instance {k}"
        );
    }
}

#[test]
fn fixes_orthogonal_complement() {
    for k in 0..INSTANCES {
        let mut s = Sampler::new(22, k);
        let p = random_plane(&mut s);
        let t = s.circle_point::<Rational>();
        let z: Vector8<Rational> = s.octonion();
        let z_perp = [p.u(), p.v()].iter().fold(z, |acc, b| {
            let c = acc.inner(b).checked_div(&b.norm_sq()).unwrap();
            &acc - &b.scale(&c)
        });
        assert_eq!(
            plane_rotation(&p, &t).apply(&z_perp),
            z_perp,
            "instance {k}"
        );
    }
}

#[test]
fn rotates_spanning_pair() {
    for k in 0..INSTANCES {
        let mut s = Sampler::new(23, k);
        let p = random_plane(&mut s);
        let t = s.circle_point::<Rational>();
        let r = plane_rotation(&p, &t);
        let (u, v) = (p.u(), p.v());
        assert_eq!(r.apply(u), &u.scale(t.c()) + &v.scale(t.s()));
        assert_eq!(r.apply(v), &v.scale(t.c()) - &u.scale(t.s()));
    }
}

#[test]
fn orientation_reversal() {
    for k in 0..INSTANCES {
        let mut s = Sampler::new(24, k);
        let p = random_plane(&mut s);
        let t = s.circle_point::<Rational>();
        assert_eq!(
            plane_rotation(&p.reversed(), &t.inverse()),
            plane_rotation(&p, &t),
            "instance {k}"
        );
    }
}

#[test]
fn scaling_invariance() {
    for k in 0..INSTANCES {
        let mut s = Sampler::new(25, k);
        let p = random_plane(&mut s);
        let t = s.circle_point::<Rational>();
        let lambda: Rational = s.nonzero_scalar(FRAME_RANGE);
        assert_eq!(
            plane_rotation(&p.scaled(&lambda).unwrap(), &t),
            plane_rotation(&p, &t),
            "instance {k}"
        );
    }
}

#[test]
fn basis_rotation_invariance() {
    for k in 0..INSTANCES {
        let mut s = Sampler::new(26, k);
        let p = random_plane(&mut s);
        let t = s.circle_point::<Rational>();
        let by = s.circle_point::<Rational>();
        assert_eq!(
            plane_rotation(&p.rotate_basis(&by), &t),
            plane_rotation(&p, &t),
            "instance {k}"
        );
    }
}

#[test]
fn rotations_are_special_orthogonal() {
    for k in 0..INSTANCES {
        let mut s = Sampler::new(27, k);
        let p = random_plane(&mut s);
        let t = s.circle_point::<Rational>();
        let r = so_check(&plane_rotation(&p, &t), tol());
        assert!(r.pass, "instance {k}: {r:?}");
        assert_eq!(r.orthogonality_residual, Rational::zero());
    }
}

#[test]
fn cayley_columns_are_orthonormal() {
    for k in 0..200 {
        let a = Sampler::new(28, k).antisymmetric::<Rational>(Subspace::R7);
        let q = cayley_orthogonal(&a, tol()).unwrap();
        for i in 0..8 {
            for j in 0..8 {
                let want = if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                };
                assert_eq!(q.column(i).inner(&q.column(j)), want);
            }
        }
        assert!(so_check(&q, tol()).pass);
    }
}

#[test]
fn float_so_check_tolerates_rounding() {
    let mut s = Sampler::new(29, 0);
    let q = s.rotation::<f64>(Subspace::R7);
    let r = so_check(&q, tol());
    assert!(r.pass, "{r:?}");
    let reflected = Matrix8::from_fn(|i, j| {
        if i == 0 {
            -*q.entry(i, j)
        } else {
            *q.entry(i, j)
        }
    });
    assert!(!so_check(&reflected, tol()).pass);
}

proptest! {
    #[test]
    fn circle_parameter_is_exact(p in -1000i64..1000, q in 1i64..1000) {
        let pt = CirclePoint::from_parameter(&Rational::from_ratio(p, q));
        prop_assert_eq!(pt.c().clone() * pt.c().clone() + pt.s().clone() * pt.s().clone(), Rational::one());
    }

    #[test]
    fn angle_group_laws(a in -50i64..50, b in -50i64..50, c in -50i64..50, d in 1i64..20) {
        let p = CirclePoint::from_parameter(&Rational::from_ratio(a, d));
        let q = CirclePoint::from_parameter(&Rational::from_ratio(b, d));
        let r = CirclePoint::from_parameter(&Rational::from_ratio(c, d));
        prop_assert_eq!(p.double_angle(), p.angle_sum(&p));
        prop_assert_eq!(p.angle_sum(&q), q.angle_sum(&p));
        prop_assert_eq!(p.angle_sum(&q).angle_sum(&r), p.angle_sum(&q.angle_sum(&r)));
        prop_assert_eq!(p.angle_sum(&CirclePoint::identity()), p.clone());
        prop_assert_eq!(p.angle_sum(&p.inverse()), CirclePoint::identity());
    }
}

#[test]
fn circle_parameter_seeded_sweep() {
    for k in 0..1000 {
        let u: Rational = Sampler::new(30, k).scalar(octospin::sampling::OCTONION_RANGE);
        let pt = CirclePoint::from_parameter(&u);
        assert_eq!(pt.c().square() + pt.s().square(), Rational::one());
    }
}
