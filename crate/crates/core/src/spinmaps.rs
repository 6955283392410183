//! Maps `Gr̃₂(ℝ⁷) × S¹ → Spin(7)` built from four commuting plane rotations,
//! the double covering `Spin(7) → SO(7)`, and a Spin(7) membership test.
//!
//! For an oriented plane `[x, y]` of unit imaginary octonions and any nonzero
//! imaginary `w ⊥ span{e0, x, y, xy}`, the frame
//! `B = (e0, x, y, xy, w, wx, wy, w(xy))` is an orthogonal basis of `𝕆`, and
//!
//! ```text
//! f7([x, y], t) = ψ[x,y],t · ψ[e0,xy],t · ψ[w,w(xy)],t · ψ[wx,wy],t
//! ```
//!
//! does not depend on the choice of `w` or of the basis of `[x, y]`.
//!
//! An element `g̃ ∈ SO(8)` lies in `Spin(7)` iff some `g ∈ SO(7)` satisfies
//! `g(a)·g̃(b) = g̃(ab)` for all `a, b`. Setting `b = e0` forces
//! `g(a) = g̃(a) / g̃(e0)`, which is how [`project_double_cover`] extracts the
//! only possible candidate.

use alloc::vec::Vec;

use crate::circle::CirclePoint;
use crate::geometry::{choose_w, plane_rotation, so_check, Matrix8, OrientedPlane, Subspace};
use crate::octonion::{basis_product, Vector8};
use crate::scalar::{Scalar, Tolerance};
use crate::{Error, Result};

/// Frame slot names, in order.
pub const FRAME_LABELS: [&str; 8] = ["e0", "x", "y", "xy", "w", "wx", "wy", "w(xy)"];

/// The orthogonal basis `(e0, x, y, xy, w, wx, wy, w(xy))`.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameB<S> {
    elements: [Vector8<S>; 8],
    norm_w: S,
}

impl<S: Scalar> FrameB<S> {
    pub fn elements(&self) -> &[Vector8<S>; 8] {
        &self.elements
    }

    pub fn get(&self, i: usize) -> &Vector8<S> {
        &self.elements[i]
    }

    /// Common squared norm of `w, wx, wy, w(xy)`.
    pub fn norm_w(&self) -> &S {
        &self.norm_w
    }

    /// The four mutually orthogonal rotation planes of `f7`, in product order.
    pub fn planes(&self) -> [OrientedPlane<S>; 4] {
        let p = |a: usize, b: usize| {
            OrientedPlane::new(
                self.elements[a].clone(),
                self.elements[b].clone(),
                Tolerance::default(),
            )
            .expect("frame elements pair into valid planes")
        };
        [p(1, 2), p(0, 3), p(4, 7), p(5, 6)]
    }
}

fn check_plane<S: Scalar>(plane: &OrientedPlane<S>, tol: Tolerance) -> Result<()> {
    if !plane.is_imaginary(tol) {
        return Err(Error::NotImaginary);
    }
    if !plane.is_unit(tol) {
        return Err(Error::NonUnitPlane);
    }
    Ok(())
}

/// Builds and validates the frame `B` for `[x, y]` and `w`.
pub fn basis_b<S: Scalar>(
    plane: &OrientedPlane<S>,
    w: &Vector8<S>,
    tol: Tolerance,
) -> Result<FrameB<S>> {
    check_plane(plane, tol)?;
    let (x, y) = (plane.u().clone(), plane.v().clone());
    let xy = &x * &y;
    if w.is_zero(tol) || !w.is_imaginary(tol) {
        return Err(Error::InadmissibleComplement);
    }
    if [&x, &y, &xy]
        .iter()
        .any(|b| !w.inner(b).is_zero_within(tol))
    {
        return Err(Error::InadmissibleComplement);
    }
    let wx = w * &x;
    let wy = w * &y;
    let wxy = w * &xy;
    let elements = [Vector8::one(), x, y, xy, w.clone(), wx, wy, wxy];
    let norm_w = w.norm_sq();

    for i in 0..8 {
        for j in i + 1..8 {
            if !elements[i].inner(&elements[j]).is_zero_within(tol) {
                return Err(Error::FrameNotOrthogonal { i, j });
            }
        }
        let want = if i < 4 { S::one() } else { norm_w.clone() };
        if !elements[i].norm_sq().approx_eq(&want, tol) {
            return Err(Error::FrameNorm { i });
        }
    }
    Ok(FrameB { elements, norm_w })
}

/// `±B_k` entry of a frame multiplication table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedIndex {
    pub sign: i8,
    pub index: usize,
}

/// `B_i · B_j = sign · B_index`, times `norm_w` when both factors are among
/// `w, wx, wy, w(xy)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameTable {
    pub entries: [[SignedIndex; 8]; 8],
}

/// Multiplies every pair of frame elements and identifies the product as a
/// signed (and scaled) frame element.
pub fn frame_table<S: Scalar>(frame: &FrameB<S>, tol: Tolerance) -> Result<FrameTable> {
    let el = &frame.elements;
    let mut entries = [[SignedIndex { sign: 0, index: 0 }; 8]; 8];
    for i in 0..8 {
        for j in 0..8 {
            let prod = &el[i] * &el[j];
            let magnitude = if i >= 4 && j >= 4 {
                frame.norm_w.clone()
            } else {
                S::one()
            };
            let hit = (0..8).find(|&k| !prod.inner(&el[k]).is_zero_within(tol));
            let k = hit.ok_or(Error::FrameProduct { i, j })?;
            let lambda = prod
                .inner(&el[k])
                .checked_div(&el[k].norm_sq())
                .ok_or(Error::FrameProduct { i, j })?;
            let sign = if lambda.approx_eq(&magnitude, tol) {
                1
            } else if lambda.approx_eq(&-magnitude, tol) {
                -1
            } else {
                return Err(Error::FrameProduct { i, j });
            };
            if !prod.approx_eq(&el[k].scale(&lambda), tol) {
                return Err(Error::FrameProduct { i, j });
            }
            entries[i][j] = SignedIndex { sign, index: k };
        }
    }
    Ok(FrameTable { entries })
}

/// `f7([x, y], t)`, with `w` defaulting to [`choose_w`].
pub fn f7<S: Scalar>(
    plane: &OrientedPlane<S>,
    t: &CirclePoint<S>,
    w: Option<&Vector8<S>>,
    tol: Tolerance,
) -> Result<Matrix8<S>> {
    let frame = match w {
        Some(w) => basis_b(plane, w, tol)?,
        None => {
            check_plane(plane, tol)?;
            basis_b(plane, &choose_w(plane), tol)?
        }
    };
    Ok(f7_from_frame(&frame, t))
}

/// The four-rotation product over an already validated frame.
pub fn f7_from_frame<S: Scalar>(frame: &FrameB<S>, t: &CirclePoint<S>) -> Matrix8<S> {
    frame
        .planes()
        .iter()
        .map(|p| plane_rotation(p, t))
        .reduce(|acc, r| acc.compose(&r))
        .expect("four planes")
}

/// `f7` restricted to planes in `span{e1..e5}`.
pub fn f5<S: Scalar>(
    plane: &OrientedPlane<S>,
    t: &CirclePoint<S>,
    tol: Tolerance,
) -> Result<Matrix8<S>> {
    if !Subspace::R5.contains(plane.u(), tol) || !Subspace::R5.contains(plane.v(), tol) {
        return Err(Error::OutsideSubspace);
    }
    f7(plane, t, None, tol)
}

/// `f7(P7, t) · f5(P5, t′)`.
pub fn f7xf5<S: Scalar>(
    p7: &OrientedPlane<S>,
    t: &CirclePoint<S>,
    p5: &OrientedPlane<S>,
    t2: &CirclePoint<S>,
    tol: Tolerance,
) -> Result<Matrix8<S>> {
    Ok(f7(p7, t, None, tol)?.compose(&f5(p5, t2, tol)?))
}

/// `ψ[P7],t · ψ[P5],t′`, an `SO(7)` element acting on `Im 𝕆`.
pub fn h70<S: Scalar>(
    p7: &OrientedPlane<S>,
    t: &CirclePoint<S>,
    p5: &OrientedPlane<S>,
    t2: &CirclePoint<S>,
) -> Matrix8<S> {
    plane_rotation(p7, t).compose(&plane_rotation(p5, t2))
}

/// Doubles both circle coordinates; planes pass through unchanged.
pub fn p_map<S: Scalar>(
    t: &CirclePoint<S>,
    t2: &CirclePoint<S>,
) -> (CirclePoint<S>, CirclePoint<S>) {
    (t.double_angle(), t2.double_angle())
}

/// `g̃ ↦ g` with `g(e0) = e0` and `g(ei) = g̃(ei) / g̃(e0)`.
pub fn project_double_cover<S: Scalar>(g_tilde: &Matrix8<S>) -> Matrix8<S> {
    let image_unit = g_tilde.column(0);
    let cols: [Vector8<S>; 8] = core::array::from_fn(|i| {
        if i == 0 {
            Vector8::one()
        } else {
            g_tilde
                .column(i)
                .right_divide(&image_unit)
                .expect("columns of an orthogonal matrix are nonzero")
        }
    });
    Matrix8::from_columns(&cols)
}

/// Result of [`verify_spin7`].
#[derive(Debug, Clone, PartialEq)]
pub struct MembershipReport<S> {
    pub candidate_g: Matrix8<S>,
    /// Basis pairs `(i, j)` with `g(ei)·g̃(ej) ≠ g̃(ei·ej)`.
    pub relation_failures: Vec<(usize, usize)>,
    pub g_in_so7: bool,
    pub is_member: bool,
}

/// Decides whether `g̃` lies in `Spin(7)`.
pub fn verify_spin7<S: Scalar>(g_tilde: &Matrix8<S>, tol: Tolerance) -> MembershipReport<S> {
    let g = project_double_cover(g_tilde);
    let fixes_e0 = g.column(0).approx_eq(&Vector8::one(), tol);
    let preserves_imaginary = (1..8).all(|j| g.entry(0, j).is_zero_within(tol));
    let g_in_so7 = fixes_e0 && preserves_imaginary && so_check(&g, tol).pass;

    let g_cols: Vec<Vector8<S>> = (0..8).map(|i| g.column(i)).collect();
    let gt_cols: Vec<Vector8<S>> = (0..8).map(|i| g_tilde.column(i)).collect();
    let mut relation_failures = Vec::new();
    for i in 0..8 {
        for j in 0..8 {
            let lhs = &g_cols[i] * &gt_cols[j];
            let (sign, k) = basis_product(i, j);
            let rhs = if sign > 0 {
                gt_cols[k].clone()
            } else {
                -gt_cols[k].clone()
            };
            if !lhs.approx_eq(&rhs, tol) {
                relation_failures.push((i, j));
            }
        }
    }
    let is_member = relation_failures.is_empty() && g_in_so7;
    MembershipReport {
        candidate_g: g,
        relation_failures,
        g_in_so7,
        is_member,
    }
}

/// Result of [`triality_check`]. Pair indices refer to frame slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialityReport {
    /// `(α, β)` with `g(α)·ψt(β) ≠ ψt(αβ)`.
    pub failures: Vec<(usize, usize)>,
    /// `(α, β)`, `α ∉ {x, y}`, with `α·ψπ/2(β) ≠ ψπ/2(αβ)`.
    pub quarter_turn_failures: Vec<(usize, usize)>,
    /// `g(x)·ψt(y) = −s·e0 + c·xy = ψt(xy)`.
    pub explicit_case: bool,
    pub pass: bool,
}

/// Checks `g(α)·ψt(β) = ψt(αβ)` over all frame pairs, for `ψt = f7(P, t, w)`
/// and `g = ψ[P],2t`.
pub fn triality_check<S: Scalar>(
    plane: &OrientedPlane<S>,
    t: &CirclePoint<S>,
    w: &Vector8<S>,
    tol: Tolerance,
) -> Result<TrialityReport> {
    let frame = basis_b(plane, w, tol)?;
    let psi = f7_from_frame(&frame, t);
    let quarter = f7_from_frame(&frame, &CirclePoint::quarter_turn());
    let g = plane_rotation(plane, &t.double_angle());
    let el = frame.elements();

    let mut failures = Vec::new();
    let mut quarter_turn_failures = Vec::new();
    for (a, alpha) in el.iter().enumerate() {
        let g_alpha = g.apply(alpha);
        for (b, beta) in el.iter().enumerate() {
            let ab = alpha * beta;
            if !(&g_alpha * &psi.apply(beta)).approx_eq(&psi.apply(&ab), tol) {
                failures.push((a, b));
            }
            if a != 1
                && a != 2
                && !(alpha * &quarter.apply(beta)).approx_eq(&quarter.apply(&ab), tol)
            {
                quarter_turn_failures.push((a, b));
            }
        }
    }

    let (x, y, xy) = (&el[1], &el[2], &el[3]);
    let lhs = &g.apply(x) * &psi.apply(y);
    let closed_form = &Vector8::one().scale(&-t.s().clone()) + &xy.scale(t.c());
    let explicit_case =
        lhs.approx_eq(&closed_form, tol) && closed_form.approx_eq(&psi.apply(xy), tol);

    let pass = failures.is_empty() && quarter_turn_failures.is_empty() && explicit_case;
    Ok(TrialityReport {
        failures,
        quarter_turn_failures,
        explicit_case,
        pass,
    })
}

/// The `Spin(8) ≅ Spin(7) × S⁷` valued map `(f7 · f5, s)`.
pub fn spin8_map<S: Scalar>(
    p7: &OrientedPlane<S>,
    t: &CirclePoint<S>,
    p5: &OrientedPlane<S>,
    t2: &CirclePoint<S>,
    s: &Vector8<S>,
    tol: Tolerance,
) -> Result<(Matrix8<S>, Vector8<S>)> {
    if !s.norm_sq().approx_eq(&S::one(), tol) {
        return Err(Error::NotUnitVector);
    }
    Ok((f7xf5(p7, t, p5, t2, tol)?, s.clone()))
}
