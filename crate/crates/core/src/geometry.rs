//! Oriented planes, plane rotations and 8×8 orthogonal matrices.
//!
//! Planes are spanned by an orthogonal pair `[u, v]` of equal (not necessarily
//! unit) norm `N`. The rotation by `(c, s)` in such a plane is
//!
//! ```text
//! I + ((c − 1)/N)(uuᵀ + vvᵀ) + (s/N)(vuᵀ − uvᵀ)
//! ```
//!
//! which never needs a square root, so rational inputs give rational rotations.

use alloc::vec::Vec;
use core::ops::Mul;

use crate::circle::CirclePoint;
use crate::octonion::Vector8;
use crate::scalar::{Scalar, Tolerance};
use crate::{Error, Result};

/// Coordinate subspaces that host oriented planes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Subspace {
    /// `Im 𝕆 = span{e1..e7}`.
    R7,
    /// `span{e1..e5} ⊂ Im 𝕆`.
    R5,
}

impl Subspace {
    pub fn coords(self) -> core::ops::RangeInclusive<usize> {
        match self {
            Subspace::R7 => 1..=7,
            Subspace::R5 => 1..=5,
        }
    }

    pub fn contains(self, v: &Vector8<impl Scalar>, tol: Tolerance) -> bool {
        let range = self.coords();
        v.coords()
            .iter()
            .enumerate()
            .all(|(i, c)| range.contains(&i) || c.is_zero_within(tol))
    }
}

/// Row-major 8×8 matrix. Elements of `SO(8)`, `Spin(7)` and `SO(7)` (as the
/// `e0`-fixing block) all use this one type.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix8<S> {
    rows: [[S; 8]; 8],
}

impl<S: Scalar> Matrix8<S> {
    pub fn from_rows(rows: [[S; 8]; 8]) -> Self {
        Matrix8 { rows }
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> S) -> Self {
        Matrix8 {
            rows: core::array::from_fn(|i| core::array::from_fn(|j| f(i, j))),
        }
    }

    pub fn from_columns(cols: &[Vector8<S>; 8]) -> Self {
        Self::from_fn(|i, j| cols[j].coords()[i].clone())
    }

    pub fn identity() -> Self {
        Self::scalar(S::one())
    }

    /// `k·I`.
    pub fn scalar(k: S) -> Self {
        Self::from_fn(|i, j| if i == j { k.clone() } else { S::zero() })
    }

    pub fn rows(&self) -> &[[S; 8]; 8] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &S {
        &self.rows[i][j]
    }

    pub fn column(&self, j: usize) -> Vector8<S> {
        Vector8::new(core::array::from_fn(|i| self.rows[i][j].clone()))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.rows[j][i].clone())
    }

    /// Matrix product `self · rhs`.
    pub fn compose(&self, rhs: &Self) -> Self {
        Self::from_fn(|i, j| {
            S::signed_dot((0..8).map(|k| (false, &self.rows[i][k], &rhs.rows[k][j])))
        })
    }

    pub fn apply(&self, z: &Vector8<S>) -> Vector8<S> {
        let zc = z.coords();
        Vector8::new(core::array::from_fn(|i| {
            S::signed_dot((0..8).map(|k| (false, &self.rows[i][k], &zc[k])))
        }))
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(|i, j| -self.rows[i][j].clone())
    }

    pub fn determinant(&self) -> S {
        S::determinant(&self.to_vecs())
    }

    /// Largest `|self − other|` entry.
    pub fn max_abs_diff(&self, other: &Self) -> S {
        let mut worst = S::zero();
        for i in 0..8 {
            for j in 0..8 {
                let d = self.rows[i][j].sub_ref(&other.rows[i][j]).abs();
                if d > worst {
                    worst = d;
                }
            }
        }
        worst
    }

    pub fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        self.rows
            .iter()
            .flatten()
            .zip(other.rows.iter().flatten())
            .all(|(a, b)| a.approx_eq(b, tol))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix8<T> {
        Matrix8::from_fn(|i, j| f(&self.rows[i][j]))
    }

    fn to_vecs(&self) -> Vec<Vec<S>> {
        self.rows.iter().map(|r| r.to_vec()).collect()
    }

    fn from_vecs(rows: Vec<Vec<S>>) -> Self {
        Self::from_fn(|i, j| rows[i][j].clone())
    }
}

impl<S: Scalar> Mul for &Matrix8<S> {
    type Output = Matrix8<S>;

    fn mul(self, rhs: &Matrix8<S>) -> Matrix8<S> {
        self.compose(rhs)
    }
}

/// An oriented 2-plane `[u, v]`: `u ⊥ v`, `|u|² = |v|² ≠ 0`.
/// `[u, v]` and `[v, u]` carry opposite orientations.
#[derive(Debug, Clone, PartialEq)]
pub struct OrientedPlane<S> {
    u: Vector8<S>,
    v: Vector8<S>,
}

impl<S: Scalar> OrientedPlane<S> {
    pub fn new(u: Vector8<S>, v: Vector8<S>, tol: Tolerance) -> Result<Self> {
        let nu = u.norm_sq();
        if nu.is_zero_within(tol) || !nu.approx_eq(&v.norm_sq(), tol) {
            return Err(Error::DegeneratePlane);
        }
        if !u.inner(&v).is_zero_within(tol) {
            return Err(Error::DegeneratePlane);
        }
        Ok(OrientedPlane { u, v })
    }

    /// The coordinate plane `[e_i, e_j]`.
    pub fn basis(i: usize, j: usize) -> Self {
        assert!(i != j, "coordinate plane needs distinct axes");
        OrientedPlane {
            u: Vector8::basis(i),
            v: Vector8::basis(j),
        }
    }

    pub fn u(&self) -> &Vector8<S> {
        &self.u
    }

    pub fn v(&self) -> &Vector8<S> {
        &self.v
    }

    /// Common squared norm `N` of the spanning pair.
    pub fn norm_sq(&self) -> S {
        self.u.norm_sq()
    }

    pub fn is_unit(&self, tol: Tolerance) -> bool {
        self.norm_sq().approx_eq(&S::one(), tol)
    }

    pub fn is_imaginary(&self, tol: Tolerance) -> bool {
        self.u.is_imaginary(tol) && self.v.is_imaginary(tol)
    }

    /// `[v, u]`.
    pub fn reversed(&self) -> Self {
        OrientedPlane {
            u: self.v.clone(),
            v: self.u.clone(),
        }
    }

    /// `[λu, λv]`.
    pub fn scaled(&self, lambda: &S) -> Result<Self> {
        if lambda.is_zero_within(Tolerance::new(0.0)) {
            return Err(Error::DegeneratePlane);
        }
        Ok(OrientedPlane {
            u: self.u.scale(lambda),
            v: self.v.scale(lambda),
        })
    }

    /// Another basis of the same oriented plane: `[c·u + s·v, −s·u + c·v]`.
    pub fn rotate_basis(&self, by: &CirclePoint<S>) -> Self {
        let (c, s) = (by.c(), by.s());
        OrientedPlane {
            u: &self.u.scale(c) + &self.v.scale(s),
            v: &self.v.scale(c) - &self.u.scale(s),
        }
    }

    pub fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        self.u.approx_eq(&other.u, tol) && self.v.approx_eq(&other.v, tol)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T + Copy) -> OrientedPlane<T> {
        OrientedPlane {
            u: self.u.map(f),
            v: self.v.map(f),
        }
    }
}

/// Rotation by `t` in the oriented plane `plane`, identity on its orthogonal complement.
pub fn plane_rotation<S: Scalar>(plane: &OrientedPlane<S>, t: &CirclePoint<S>) -> Matrix8<S> {
    let n = plane.norm_sq();
    let along = (t.c().clone() - S::one())
        .checked_div(&n)
        .expect("plane norm is nonzero");
    let across = t.s().checked_div(&n).expect("plane norm is nonzero");
    let (u, v) = (plane.u.coords(), plane.v.coords());
    Matrix8::from_fn(|i, j| {
        let id = if i == j { S::one() } else { S::zero() };
        let sym = u[i].mul_ref(&u[j]) + v[i].mul_ref(&v[j]);
        let skew = v[i].mul_ref(&u[j]) - u[i].mul_ref(&v[j]);
        id + along.mul_ref(&sym) + across.mul_ref(&skew)
    })
}

/// Result of [`so_check`].
#[derive(Debug, Clone, PartialEq)]
pub struct SoReport<S> {
    /// Largest entry of `|MᵀM − I|`.
    pub orthogonality_residual: S,
    pub determinant: S,
    pub pass: bool,
}

/// Checks `MᵀM = I` and `det M = 1`.
pub fn so_check<S: Scalar>(m: &Matrix8<S>, tol: Tolerance) -> SoReport<S> {
    let gram = m.transpose().compose(m);
    let residual = gram.max_abs_diff(&Matrix8::identity());
    let det = m.determinant();
    let orthogonal = if S::EXACT {
        residual == S::zero()
    } else {
        residual.to_f64() <= tol.epsilon
    };
    let pass = orthogonal && det.approx_eq(&S::one(), tol);
    SoReport {
        orthogonality_residual: residual,
        determinant: det,
        pass,
    }
}

/// Cayley transform `(I − A)(I + A)⁻¹` of an antisymmetric matrix.
/// Rational input gives an exactly special orthogonal result.
pub fn cayley_orthogonal<S: Scalar>(a: &Matrix8<S>, tol: Tolerance) -> Result<Matrix8<S>> {
    for i in 0..8 {
        for j in 0..8 {
            if !a.entry(i, j).approx_eq(&-a.entry(j, i).clone(), tol) {
                return Err(Error::NotAntisymmetric);
            }
        }
    }
    let id = Matrix8::<S>::identity();
    let plus = Matrix8::from_fn(|i, j| id.entry(i, j).add_ref(a.entry(i, j)));
    let minus = Matrix8::from_fn(|i, j| id.entry(i, j).sub_ref(a.entry(i, j)));
    let inv = S::inverse(&plus.to_vecs(), tol).ok_or(Error::Singular)?;
    Ok(minus.compose(&Matrix8::from_vecs(inv)))
}

/// A nonzero vector orthogonal to `e0, x, y, xy`.
///
/// Projects `e1, e2, …, e7` in order off that span and returns the first
/// nonzero residual, without normalizing it.
pub fn choose_w<S: Scalar>(plane: &OrientedPlane<S>) -> Vector8<S> {
    let (x, y) = (plane.u(), plane.v());
    let xy = x * y;
    let spanning = [Vector8::<S>::basis(0), x.clone(), y.clone(), xy];
    let norms: Vec<S> = spanning.iter().map(|b| b.norm_sq()).collect();
    for k in 1..8 {
        let mut r = Vector8::<S>::basis(k);
        for (b, n) in spanning.iter().zip(norms.iter()) {
            if let Some(coef) = r.inner(b).checked_div(n) {
                r = &r - &b.scale(&coef);
            }
        }
        if !r.is_zero(Tolerance::default()) {
            return r;
        }
    }
    unreachable!("the complement of a 4-dimensional span in ℝ⁸ is nonzero")
}
