//! The verification suites behind `octospin verify`.
//!
//! Every suite draws its instances from `Sampler::new(suite_seed, k)` for
//! `k = 0, 1, …`, so a report is a pure function of the configuration.

use octospin::degree::{degree_ledger, verify_square, winding_degree, DEFAULT_SAMPLES};
use octospin::geometry::{plane_rotation, so_check};
use octospin::octonion::FANO_LINES;
use octospin::sampling::{Sampler, FRAME_RANGE};
use octospin::spinmaps::{basis_b, f5, f7, project_double_cover, triality_check, verify_spin7};
use octospin::{
    CirclePoint, Matrix8, Octonion, OrientedPlane, Rational, Scalar, Subspace, Tolerance, Vector8,
};
use serde_json::{json, Value};

use crate::config::{Backend, RunConfig};
use crate::error::CliError;
use crate::report::{ClaimRecord, ConfigRecord, DegreeRecord, Report, Suite, SuiteRecord};
use crate::text::{angle_text, matrix_text, plane_text, vector_text, ScalarText};

/// Failing instances kept per claim; the rest are only counted.
pub const MAX_RECORDED_FAILURES: usize = 8;

struct Claim {
    id: &'static str,
    anchor: &'static str,
    instances: usize,
    failure_count: usize,
    failures: Vec<Value>,
    details: Option<Value>,
}

impl Claim {
    fn new(id: &'static str, anchor: &'static str) -> Self {
        Claim {
            id,
            anchor,
            instances: 0,
            failure_count: 0,
            failures: Vec::new(),
            details: None,
        }
    }

    fn record(&mut self, ok: bool, data: impl FnOnce() -> Value) {
        self.instances += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_RECORDED_FAILURES {
                self.failures.push(data());
            }
        }
    }

    /// Records an instance whose check could not run at all.
    fn record_error(&mut self, err: octospin::Error, data: impl FnOnce() -> Value) {
        self.record(false, || {
            let mut v = data();
            v["error"] = json!(err.to_string());
            v
        });
    }

    fn finish(self) -> ClaimRecord {
        ClaimRecord {
            id: self.id,
            anchor: self.anchor,
            instances: self.instances,
            pass: self.failure_count == 0 && self.instances > 0,
            failure_count: self.failure_count,
            failures: self.failures,
            details: self.details,
        }
    }
}

/// FNV-1a of the suite name, mixed with the run seed.
fn suite_seed(seed: u64, suite: Suite) -> u64 {
    suite
        .name()
        .bytes()
        .fold(0xcbf2_9ce4_8422_2325 ^ seed, |h, b| {
            (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
        })
}

struct Ctx {
    seed: u64,
    trials: usize,
    tol: Tolerance,
}

impl Ctx {
    fn sampler(&self, k: usize) -> Sampler {
        Sampler::new(self.seed, k as u64)
    }
}

fn o<S: ScalarText>(v: &Vector8<S>) -> Value {
    json!(vector_text(v))
}

fn oct<S: Scalar>(a: &Octonion<S>, b: &Octonion<S>) -> Octonion<S> {
    a * b
}

fn octonion_identities<S: ScalarText>(ctx: &Ctx) -> Vec<ClaimRecord> {
    let n = 5 * ctx.trials;
    let tol = ctx.tol;
    let eq = |a: &Octonion<S>, b: &Octonion<S>| a.approx_eq(b, tol);

    let mut e3e2 = Claim::new("octonion.e3e2", "e3·e2 = −e1");
    let (e1, e2, e3) = (
        Octonion::<S>::basis(1),
        Octonion::basis(2),
        Octonion::basis(3),
    );
    let got = oct(&e3, &e2);
    e3e2.record(eq(&got, &-e1), || json!({ "product": o(&got) }));

    let mut left = Claim::new("octonion.alternative-left", "x(xy) = (xx)y");
    let mut right = Claim::new("octonion.alternative-right", "(yx)x = y(xx)");
    let mut m1 = Claim::new("octonion.moufang-1", "(x(yz))x = x((yz)x) = (xy)(zx)");
    let mut m2 = Claim::new("octonion.moufang-2", "(x(yx))z = x(y(xz))");
    let mut m3 = Claim::new("octonion.moufang-3", "y(x(zx)) = ((yx)z)x");
    let mut anti = Claim::new("octonion.anticommute", "xy = −yx for imaginary x ⊥ y");
    let mut triple = Claim::new("octonion.unit-triple", "y(xy) = x for unit imaginary x ⊥ y");
    let mut assoc = Claim::new(
        "octonion.anti-associative",
        "x(yz) = −(xy)z for imaginary x, y, z with x, y, z, xy mutually orthogonal",
    );
    let mut norm = Claim::new("octonion.norm-multiplicative", "|ab|² = |a|²|b|²");

    for [a, b, c] in FANO_LINES {
        let (x, y) = (Octonion::<S>::basis(a), Octonion::<S>::basis(b));
        let got = oct(&y, &oct(&x, &y));
        triple.record(
            eq(&got, &x),
            || json!({ "line": [a, b, c], "y(xy)": o(&got) }),
        );
    }

    for k in 0..n {
        let mut s = ctx.sampler(k);
        let (x, y, z) = (s.octonion::<S>(), s.octonion::<S>(), s.octonion::<S>());
        let data = || json!({ "instance": k, "x": o(&x), "y": o(&y), "z": o(&z) });

        left.record(eq(&oct(&x, &oct(&x, &y)), &oct(&oct(&x, &x), &y)), data);
        right.record(eq(&oct(&oct(&y, &x), &x), &oct(&y, &oct(&x, &x))), data);
        let yz = oct(&y, &z);
        let a = oct(&oct(&x, &yz), &x);
        let b = oct(&x, &oct(&yz, &x));
        let c = oct(&oct(&x, &y), &oct(&z, &x));
        m1.record(eq(&a, &b) && eq(&b, &c), data);
        m2.record(
            eq(
                &oct(&oct(&x, &oct(&y, &x)), &z),
                &oct(&x, &oct(&y, &oct(&x, &z))),
            ),
            data,
        );
        m3.record(
            eq(
                &oct(&y, &oct(&x, &oct(&z, &x))),
                &oct(&oct(&oct(&y, &x), &z), &x),
            ),
            data,
        );
        norm.record(
            oct(&x, &y)
                .norm_sq()
                .approx_eq(&x.norm_sq().mul_ref(&y.norm_sq()), tol),
            data,
        );

        // imaginary pair, second one projected off the first
        let u = s.imaginary_octonion::<S>();
        let v = s.imaginary_octonion::<S>();
        let v = match v.inner(&u).checked_div(&u.norm_sq()) {
            Some(coef) => &v - &u.scale(&coef),
            None => v,
        };
        anti.record(
            eq(&oct(&u, &v), &-oct(&v, &u)),
            || json!({ "instance": k, "x": o(&u), "y": o(&v) }),
        );

        let plane = s.orthonormal_pair::<S>(Subspace::R7);
        let (p, q) = (plane.u(), plane.v());
        let got = oct(q, &oct(p, q));
        triple.record(
            eq(&got, p),
            || json!({ "instance": k, "x": o(p), "y": o(q) }),
        );

        let lambda: S = s.nonzero_scalar(FRAME_RANGE);
        let mu: S = s.nonzero_scalar(FRAME_RANGE);
        let (px, py) = (p.scale(&lambda), q.scale(&mu));
        let pz = s.complement_vector(&plane);
        assoc.record(
            eq(&oct(&px, &oct(&py, &pz)), &-oct(&oct(&px, &py), &pz)),
            || json!({ "instance": k, "x": o(&px), "y": o(&py), "z": o(&pz) }),
        );
    }
    [e3e2, left, right, m1, m2, m3, anti, triple, assoc, norm]
        .into_iter()
        .map(Claim::finish)
        .collect()
}

/// A plane through `e0` and `Im 𝕆` directions, spanned by two columns of a
/// random rotation and scaled by a random nonzero rational.
fn random_r8_plane<S: Scalar>(
    s: &mut Sampler,
    tol: Tolerance,
) -> octospin::Result<OrientedPlane<S>> {
    let mix = plane_rotation(
        &OrientedPlane::<S>::basis(0, 1),
        &CirclePoint::from_parameter(&S::from_ratio(1, 3)),
    );
    let m = mix.compose(&s.rotation::<S>(Subspace::R7));
    let lambda: S = s.nonzero_scalar(FRAME_RANGE);
    OrientedPlane::new(m.column(2), m.column(5), tol).and_then(|p| p.scaled(&lambda))
}

fn rotation_laws<S: ScalarText>(ctx: &Ctx) -> Vec<ClaimRecord> {
    let tol = ctx.tol;
    let mut group = Claim::new("rotation.one-parameter", "R(P,t)·R(P,t′) = R(P,t+t′)");
    let mut fixes = Claim::new("rotation.fixes-complement", "R(P,t)·z = z for z ⊥ P");
    let mut reverse = Claim::new("rotation.orientation-reversal", "R([y,x],−t) = R([x,y],t)");
    let mut scaling = Claim::new("rotation.scaling", "R([λx,λy],t) = R([x,y],t)");
    let mut basis = Claim::new(
        "rotation.basis-rotation",
        "R([x′,y′],t) = R([x,y],t) for [x′,y′] = [x,y] rotated within P",
    );
    let mut special = Claim::new("rotation.special-orthogonal", "RᵀR = I and det R = 1");

    for k in 0..2 * ctx.trials {
        let mut s = ctx.sampler(k);
        let p = match random_r8_plane::<S>(&mut s, tol) {
            Ok(p) => p,
            Err(e) => {
                for c in [
                    &mut group,
                    &mut fixes,
                    &mut reverse,
                    &mut scaling,
                    &mut basis,
                    &mut special,
                ] {
                    c.record_error(e.clone(), || json!({ "instance": k }));
                }
                continue;
            }
        };
        let (t, t2, by) = (
            s.circle_point::<S>(),
            s.circle_point::<S>(),
            s.circle_point::<S>(),
        );
        let lambda: S = s.nonzero_scalar(FRAME_RANGE);
        let z = s.octonion::<S>();
        let data = || json!({ "instance": k, "plane": plane_text(&p), "t": angle_text(&t) });

        let r = plane_rotation(&p, &t);
        group.record(
            r.compose(&plane_rotation(&p, &t2))
                .approx_eq(&plane_rotation(&p, &t.angle_sum(&t2)), tol),
            data,
        );
        let z_perp = [p.u(), p.v()].iter().fold(z, |acc, b| {
            let coef = acc
                .inner(b)
                .checked_div(&b.norm_sq())
                .expect("plane vectors are nonzero");
            &acc - &b.scale(&coef)
        });
        fixes.record(r.apply(&z_perp).approx_eq(&z_perp, tol), data);
        reverse.record(
            plane_rotation(&p.reversed(), &t.inverse()).approx_eq(&r, tol),
            data,
        );
        match p.scaled(&lambda) {
            Ok(q) => scaling.record(plane_rotation(&q, &t).approx_eq(&r, tol), data),
            Err(e) => scaling.record_error(e, data),
        }
        basis.record(
            plane_rotation(&p.rotate_basis(&by), &t).approx_eq(&r, tol),
            data,
        );
        let so = so_check(&r, tol);
        special.record(so.pass, || {
            let mut v = data();
            v["determinant"] = json!(so.determinant.to_text());
            v["orthogonality_residual"] = json!(so.orthogonality_residual.to_text());
            v
        });
    }
    [group, fixes, reverse, scaling, basis, special]
        .into_iter()
        .map(Claim::finish)
        .collect()
}

fn f7_well_defined<S: ScalarText>(ctx: &Ctx) -> Vec<ClaimRecord> {
    let tol = ctx.tol;
    let mut basis = Claim::new(
        "f7.basis-rotation",
        "f7([x′,y′],t) = f7([x,y],t) for [x′,y′] = [x,y] rotated within P",
    );
    let mut choice = Claim::new(
        "f7.w-choice",
        "f7 is unchanged by w′ = aw + b·wx + c·wy + d·w(xy) ≠ 0",
    );
    let mut wx = Claim::new("f7.w-prime-x", "w′x = −bw + a·wx − d·wy + c·w(xy)");
    let mut wy = Claim::new("f7.w-prime-y", "w′y = −cw + d·wx + a·wy − b·w(xy)");
    let mut wxy = Claim::new("f7.w-prime-xy", "w′(xy) = −dw − c·wx + b·wy + a·w(xy)");

    for k in 0..ctx.trials {
        let mut s = ctx.sampler(k);
        let plane = s.orthonormal_pair::<S>(Subspace::R7);
        let t = s.circle_point::<S>();
        let w = s.complement_vector(&plane);
        let by = s.circle_point::<S>();
        let coef: [S; 4] = loop {
            let c: [S; 4] = core::array::from_fn(|_| s.scalar(FRAME_RANGE));
            if c.iter().any(|x| *x != S::zero()) {
                break c;
            }
        };
        let data = || {
            json!({
                "instance": k,
                "plane": plane_text(&plane),
                "t": angle_text(&t),
                "w": o(&w),
                "abcd": coef.iter().map(ScalarText::to_text).collect::<Vec<_>>(),
            })
        };

        let base = match f7(&plane, &t, Some(&w), tol) {
            Ok(m) => m,
            Err(e) => {
                for c in [&mut basis, &mut choice, &mut wx, &mut wy, &mut wxy] {
                    c.record_error(e.clone(), data);
                }
                continue;
            }
        };
        match f7(&plane.rotate_basis(&by), &t, Some(&w), tol) {
            Ok(m) => basis.record(m.approx_eq(&base, tol), data),
            Err(e) => basis.record_error(e, data),
        }

        let frame = basis_b(&plane, &w, tol).expect("f7 accepted this frame");
        let [a, b, c, d] = &coef;
        let comb = |ca: S, cb: S, cc: S, cd: S| {
            let f = |i: usize, x: &S| frame.get(i).scale(x);
            &(&f(4, &ca) + &f(5, &cb)) + &(&f(6, &cc) + &f(7, &cd))
        };
        let w2 = comb(a.clone(), b.clone(), c.clone(), d.clone());
        match f7(&plane, &t, Some(&w2), tol) {
            Ok(m) => choice.record(m.approx_eq(&base, tol), data),
            Err(e) => choice.record_error(e, data),
        }
        let (x, y, xy) = (frame.get(1), frame.get(2), frame.get(3));
        let neg = |v: &S| -v.clone();
        wx.record(
            oct(&w2, x).approx_eq(&comb(neg(b), a.clone(), neg(d), c.clone()), tol),
            data,
        );
        wy.record(
            oct(&w2, y).approx_eq(&comb(neg(c), d.clone(), a.clone(), neg(b)), tol),
            data,
        );
        wxy.record(
            oct(&w2, xy).approx_eq(&comb(neg(d), neg(c), b.clone(), a.clone()), tol),
            data,
        );
    }
    [basis, choice, wx, wy, wxy]
        .into_iter()
        .map(Claim::finish)
        .collect()
}

fn membership_data<S: ScalarText>(m: &Matrix8<S>, failures: &[(usize, usize)]) -> Value {
    json!({
        "matrix": matrix_text(m),
        "failing_pairs": failures.iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>(),
    })
}

fn spin7_membership<S: ScalarText>(ctx: &Ctx) -> Vec<ClaimRecord> {
    let tol = ctx.tol;
    let mut f7c = Claim::new(
        "spin7.f7-values",
        "g(ei)·g̃(ej) = g̃(ei·ej) for all 64 basis pairs, with g ∈ SO(7), for g̃ = f7(P,t)",
    );
    let mut f5c = Claim::new("spin7.f5-values", "f5(P,t) ∈ Spin(7)");
    let mut prod = Claim::new("spin7.f7xf5-values", "f7(P,t)·f5(P′,t′) ∈ Spin(7)");
    let mut minus = Claim::new("spin7.minus-identity", "−I ∈ Spin(7) over g = I");
    let mut generic = Claim::new(
        "spin7.single-plane-rotation-rejected",
        "R(P,t) ∉ Spin(7) for a single plane P ⊂ ℝ⁸ and t ≠ 0",
    );

    let neg_id = Matrix8::<S>::scalar(-S::one());
    let r = verify_spin7(&neg_id, tol);
    minus.record(
        r.is_member && r.candidate_g.approx_eq(&Matrix8::identity(), tol),
        || membership_data(&neg_id, &r.relation_failures),
    );

    for k in 0..ctx.trials {
        let mut s = ctx.sampler(k);
        let p7 = s.orthonormal_pair::<S>(Subspace::R7);
        let p5 = s.orthonormal_pair::<S>(Subspace::R5);
        let (t, t2) = (s.circle_point::<S>(), s.circle_point::<S>());
        let data = || {
            json!({
                "instance": k,
                "plane": plane_text(&p7),
                "t": angle_text(&t),
                "plane5": plane_text(&p5),
                "t5": angle_text(&t2),
            })
        };
        let with = |extra: Value| {
            let mut v = data();
            v["membership"] = extra;
            v
        };
        let g = f7(&p7, &t, None, tol);
        let h = f5(&p5, &t2, tol);
        match &g {
            Ok(m) => {
                let r = verify_spin7(m, tol);
                f7c.record(r.is_member, || {
                    with(membership_data(m, &r.relation_failures))
                });
            }
            Err(e) => f7c.record_error(e.clone(), data),
        }
        match &h {
            Ok(m) => {
                let r = verify_spin7(m, tol);
                f5c.record(r.is_member, || {
                    with(membership_data(m, &r.relation_failures))
                });
            }
            Err(e) => f5c.record_error(e.clone(), data),
        }
        match (&g, &h) {
            (Ok(g), Ok(h)) => {
                let m = g.compose(h);
                let r = verify_spin7(&m, tol);
                prod.record(r.is_member, || {
                    with(membership_data(&m, &r.relation_failures))
                });
            }
            (Err(e), _) | (_, Err(e)) => prod.record_error(e.clone(), data),
        }

        let plane = match random_r8_plane::<S>(&mut s, tol) {
            Ok(p) => p,
            Err(e) => {
                generic.record_error(e, || json!({ "instance": k }));
                continue;
            }
        };
        let mut angle = s.circle_point::<S>();
        if angle.approx_eq(&CirclePoint::identity(), tol) {
            angle = CirclePoint::quarter_turn();
        }
        let m = plane_rotation(&plane, &angle);
        generic.record(
            !verify_spin7(&m, tol).is_member,
            || json!({ "instance": k, "plane": plane_text(&plane), "t": angle_text(&angle) }),
        );
    }
    [f7c, f5c, prod, minus, generic]
        .into_iter()
        .map(Claim::finish)
        .collect()
}

fn triality<S: ScalarText>(ctx: &Ctx) -> Vec<ClaimRecord> {
    let tol = ctx.tol;
    let mut relation = Claim::new(
        "triality.relation",
        "g(α)·ψt(β) = ψt(αβ) for all frame pairs, with ψt = f7(P,t) and g = R(P,2t)",
    );
    let mut quarter = Claim::new(
        "triality.quarter-turn",
        "α·ψ(β) = ψ(αβ) for α ∉ {x, y} at the quarter turn",
    );
    let mut explicit = Claim::new(
        "triality.explicit-case",
        "g(x)·ψt(y) = −s·e0 + c·xy = ψt(xy)",
    );

    let standard = (
        OrientedPlane::<S>::basis(1, 2),
        CirclePoint::from_parameter(&S::from_ratio(1, 2)),
        Vector8::<S>::basis(4),
    );
    let count = (ctx.trials / 2).max(1);
    let instances = core::iter::once(standard).chain((0..count).map(|k| {
        let mut s = ctx.sampler(k);
        let plane = s.orthonormal_pair::<S>(Subspace::R7);
        let t = s.circle_point::<S>();
        let w = s.complement_vector(&plane);
        (plane, t, w)
    }));
    for (k, (plane, t, w)) in instances.enumerate() {
        let data = || {
            json!({
                // instance 0 is the standard frame [e1, e2], w = e4
                "instance": k,
                "plane": plane_text(&plane),
                "t": angle_text(&t),
                "w": o(&w),
            })
        };
        match triality_check(&plane, &t, &w, tol) {
            Ok(r) => {
                let pairs = |f: &[(usize, usize)]| {
                    let mut v = data();
                    v["failing_pairs"] = json!(f.iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>());
                    v
                };
                relation.record(r.failures.is_empty(), || pairs(&r.failures));
                quarter.record(r.quarter_turn_failures.is_empty(), || {
                    pairs(&r.quarter_turn_failures)
                });
                explicit.record(r.explicit_case, data);
            }
            Err(e) => {
                for c in [&mut relation, &mut quarter, &mut explicit] {
                    c.record_error(e.clone(), data);
                }
            }
        }
    }
    [relation, quarter, explicit]
        .into_iter()
        .map(Claim::finish)
        .collect()
}

fn double_cover<S: ScalarText>(ctx: &Ctx) -> Vec<ClaimRecord> {
    let tol = ctx.tol;
    let mut c7 = Claim::new("double-cover.f7", "c(f7(P,t)) = R(P,2t)");
    let mut c5 = Claim::new("double-cover.f5", "c(f5(P,t)) = R(P,2t)");
    let mut half = Claim::new("double-cover.half-turn", "f7(P,π) = −I and c(−I) = I");
    let mut hom = Claim::new("double-cover.homomorphism", "c(g̃·h̃) = c(g̃)·c(h̃)");
    let mut float = Claim::new(
        "double-cover.float-matches-exact",
        "float f7(P,t) agrees with exact f7(P,t) entry-wise within epsilon",
    );
    let id = Matrix8::<S>::identity();
    let neg_id = Matrix8::<S>::scalar(-S::one());

    for k in 0..ctx.trials {
        let mut s = ctx.sampler(k);
        let p7 = s.orthonormal_pair::<S>(Subspace::R7);
        let p5 = s.orthonormal_pair::<S>(Subspace::R5);
        let (t, t2) = (s.circle_point::<S>(), s.circle_point::<S>());
        let data = || {
            json!({
                "instance": k,
                "plane": plane_text(&p7),
                "t": angle_text(&t),
                "plane5": plane_text(&p5),
                "t5": angle_text(&t2),
            })
        };
        let (g, h) = match (f7(&p7, &t, None, tol), f5(&p5, &t2, tol)) {
            (Ok(g), Ok(h)) => (g, h),
            (Err(e), _) | (_, Err(e)) => {
                for c in [&mut c7, &mut c5, &mut half, &mut hom] {
                    c.record_error(e.clone(), data);
                }
                continue;
            }
        };
        let (cg, ch) = (project_double_cover(&g), project_double_cover(&h));
        c7.record(
            cg.approx_eq(&plane_rotation(&p7, &t.double_angle()), tol),
            data,
        );
        c5.record(
            ch.approx_eq(&plane_rotation(&p5, &t2.double_angle()), tol),
            data,
        );
        hom.record(
            project_double_cover(&g.compose(&h)).approx_eq(&cg.compose(&ch), tol),
            data,
        );
        match f7(&p7, &CirclePoint::half_turn(), None, tol) {
            Ok(m) => half.record(
                m.approx_eq(&neg_id, tol) && project_double_cover(&m).approx_eq(&id, tol),
                || {
                    let mut v = data();
                    v["f7_half_turn"] = json!(matrix_text(&m));
                    v
                },
            ),
            Err(e) => half.record_error(e, data),
        }

        // the same draw in both backends
        let exact = {
            let mut s = ctx.sampler(k);
            let p = s.orthonormal_pair::<Rational>(Subspace::R7);
            f7(
                &p,
                &s.circle_point::<Rational>(),
                None,
                Tolerance::default(),
            )
        };
        let approx = {
            let mut s = ctx.sampler(k);
            let p = s.orthonormal_pair::<f64>(Subspace::R7);
            f7(&p, &s.circle_point::<f64>(), None, tol)
        };
        match (exact, approx) {
            (Ok(e), Ok(a)) => {
                let e = e.map(Scalar::to_f64);
                let diff = e.max_abs_diff(&a);
                float.record(e.approx_eq(&a, tol), || {
                    let mut v = data();
                    v["max_abs_diff"] = json!(diff.to_text());
                    v
                });
            }
            (Err(e), _) | (_, Err(e)) => float.record_error(e, data),
        }
    }
    [c7, c5, half, hom, float]
        .into_iter()
        .map(Claim::finish)
        .collect()
}

fn commutative_square<S: ScalarText>(ctx: &Ctx) -> Vec<ClaimRecord> {
    let mut square = Claim::new("square.pointwise", "c ∘ (f7 × f5) = h70 ∘ p");
    match verify_square::<S>(ctx.seed, ctx.trials, ctx.tol) {
        Ok(r) => {
            let mut failed = r.failures.iter().peekable();
            for trial in 0..r.trials {
                let hit = failed.next_if(|f| f.trial == trial);
                square.record(hit.is_none(), || {
                    let f = hit.expect("recorded only on failure");
                    json!({ "trial": f.trial, "residual": f.residual.to_text() })
                });
            }
            square.details = Some(json!({ "max_residual": r.max_residual.to_text() }));
        }
        Err(e) => square.record_error(e, || json!({})),
    }
    vec![square.finish()]
}

fn degree_claims<S: ScalarText>(ctx: &Ctx) -> Vec<ClaimRecord> {
    let mut double = Claim::new("degree.double-angle", "deg(t ↦ 2t) = 2");
    let mut samples = Claim::new(
        "degree.sample-count",
        "winding degree at 256 samples = at 1024 samples",
    );
    let mut ledger = Claim::new(
        "degree.ledger",
        "2·|deg (f7 × f5)_*| = 4·|deg p|, so |deg (f7 × f5)_*| = 8",
    );

    let dbl = |p: &CirclePoint<S>| p.double_angle();
    let d = winding_degree(dbl, DEFAULT_SAMPLES);
    double.record(
        d == Ok(2),
        || json!({ "samples": DEFAULT_SAMPLES, "degree": format!("{d:?}") }),
    );
    double.details = Some(json!({ "samples": DEFAULT_SAMPLES }));

    type CircleMap<S> = fn(&CirclePoint<S>) -> CirclePoint<S>;
    let maps: [(&str, CircleMap<S>); 3] = [
        ("identity", |p| p.clone()),
        ("double", |p| p.double_angle()),
        ("inverse", |p| p.inverse()),
    ];
    for (name, f) in maps {
        let (a, b) = (winding_degree(f, 256), winding_degree(f, 1024));
        samples.record(
            a.is_ok() && a == b,
            || json!({ "map": name, "at_256": format!("{a:?}"), "at_1024": format!("{b:?}") }),
        );
    }

    let outcome = d.and_then(|d| {
        let square = verify_square::<S>(ctx.seed, ctx.trials, ctx.tol)?;
        degree_ledger(&square, d, d)
    });
    match outcome {
        Ok(r) => {
            ledger.record(
                r.p_degree == 4 && r.conclusion_magnitude == 8 && !r.sign_determined,
                || json!({ "conclusion_magnitude": r.conclusion_magnitude }),
            );
            ledger.details =
                Some(json!({ "square_trials": ctx.trials, "ledger": DegreeRecord::from(&r) }));
        }
        Err(e) => ledger.record_error(e, || json!({})),
    }
    [double, samples, ledger]
        .into_iter()
        .map(Claim::finish)
        .collect()
}

fn run_suite<S: ScalarText>(suite: Suite, config: &RunConfig) -> SuiteRecord {
    let ctx = Ctx {
        seed: suite_seed(config.seed, suite),
        trials: config.trials,
        tol: config.tolerance(),
    };
    let claims = match suite {
        Suite::OctonionIdentities => octonion_identities::<S>(&ctx),
        Suite::RotationLaws => rotation_laws::<S>(&ctx),
        Suite::F7WellDefined => f7_well_defined::<S>(&ctx),
        Suite::Spin7Membership => spin7_membership::<S>(&ctx),
        Suite::Triality => triality::<S>(&ctx),
        Suite::DoubleCover => double_cover::<S>(&ctx),
        Suite::CommutativeSquare => commutative_square::<S>(&ctx),
        Suite::DegreeLedger => degree_claims::<S>(&ctx),
    };
    SuiteRecord {
        suite,
        pass: claims.iter().all(|c| c.pass),
        claims,
    }
}

/// Runs the selected suites (all of them when `suites` is empty) in their
/// canonical order.
pub fn run_verify_suite(config: &RunConfig, suites: &[Suite]) -> Result<Report, CliError> {
    config.validate()?;
    let mut selected: Vec<Suite> = if suites.is_empty() {
        Suite::ALL.to_vec()
    } else {
        suites.to_vec()
    };
    selected.sort();
    selected.dedup();
    let records: Vec<SuiteRecord> = selected
        .into_iter()
        .map(|suite| match config.backend {
            Backend::Exact => run_suite::<Rational>(suite, config),
            Backend::Float => run_suite::<f64>(suite, config),
        })
        .collect();
    Ok(Report {
        tool: "octospin",
        version: env!("CARGO_PKG_VERSION"),
        config: ConfigRecord::from(config),
        pass: records.iter().all(|s| s.pass),
        suites: records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(backend: Backend) -> RunConfig {
        RunConfig {
            backend,
            trials: 3,
            ..RunConfig::default()
        }
    }

    #[test]
    fn claim_bookkeeping() {
        let mut c = Claim::new("id", "anchor");
        for k in 0..20 {
            c.record(k % 2 == 0, || json!(k));
        }
        let r = c.finish();
        assert_eq!((r.instances, r.failure_count, r.pass), (20, 10, false));
        assert_eq!(r.failures.len(), MAX_RECORDED_FAILURES);
        assert_eq!(r.failures[0], json!(1));
        assert!(!Claim::new("empty", "").finish().pass);
    }

    #[test]
    fn suite_seeds_differ() {
        let seeds: Vec<u64> = Suite::ALL.iter().map(|&s| suite_seed(42, s)).collect();
        for (i, a) in seeds.iter().enumerate() {
            assert!(!seeds[i + 1..].contains(a));
        }
        assert_ne!(
            suite_seed(1, Suite::Triality),
            suite_seed(2, Suite::Triality)
        );
    }

    #[test]
    fn small_runs_pass_in_both_backends() {
        for backend in [Backend::Exact, Backend::Float] {
            let r = run_verify_suite(&small(backend), &[]).unwrap();
            let failing: Vec<&str> = r.claims().filter(|c| !c.pass).map(|c| c.id).collect();
            assert!(failing.is_empty(), "{backend:?}: {failing:?}");
            assert_eq!(r.suites.len(), 8);
        }
    }

    #[test]
    fn selection_is_canonical() {
        let cfg = small(Backend::Exact);
        let a = run_verify_suite(
            &cfg,
            &[Suite::DegreeLedger, Suite::Triality, Suite::Triality],
        )
        .unwrap();
        let b = run_verify_suite(&cfg, &[Suite::Triality, Suite::DegreeLedger]).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.suites.len(), 2);
    }

    #[test]
    fn instance_counts_scale_with_trials() {
        let r = run_verify_suite(
            &small(Backend::Exact),
            &[Suite::OctonionIdentities, Suite::RotationLaws],
        )
        .unwrap();
        assert_eq!(r.claim("octonion.moufang-1").unwrap().instances, 15);
        assert_eq!(r.claim("octonion.unit-triple").unwrap().instances, 15 + 7);
        assert_eq!(r.claim("rotation.scaling").unwrap().instances, 6);
    }

    #[test]
    fn zero_trials_rejected() {
        let cfg = RunConfig {
            trials: 0,
            ..RunConfig::default()
        };
        assert!(matches!(
            run_verify_suite(&cfg, &[]),
            Err(CliError::Config(_))
        ));
    }
}
