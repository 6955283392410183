//! Exact points of the unit circle.
//!
//! A point `(c, s)` stands in for `e^{it}` with `c = cos t`, `s = sin t`.
//! Angle addition is complex multiplication, so every identity in `t` stays
//! polynomial and can be tested with exact equality.

use crate::scalar::{Scalar, Tolerance};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct CirclePoint<S> {
    c: S,
    s: S,
}

impl<S: Scalar> CirclePoint<S> {
    /// Checks `c² + s² = 1` under `tol`.
    pub fn new(c: S, s: S, tol: Tolerance) -> Result<Self> {
        let norm = c.square() + s.square();
        if norm.approx_eq(&S::one(), tol) {
            Ok(CirclePoint { c, s })
        } else {
            Err(Error::NotOnCircle)
        }
    }

    /// Angle zero.
    pub fn identity() -> Self {
        CirclePoint {
            c: S::one(),
            s: S::zero(),
        }
    }

    /// Angle π/2.
    pub fn quarter_turn() -> Self {
        CirclePoint {
            c: S::zero(),
            s: S::one(),
        }
    }

    /// Angle π.
    pub fn half_turn() -> Self {
        CirclePoint {
            c: -S::one(),
            s: S::zero(),
        }
    }

    /// Stereographic parametrization `((1−u²)/(1+u²), 2u/(1+u²))`, i.e. `u = tan(t/2)`.
    /// Lands exactly on the circle for rational `u`.
    pub fn from_parameter(u: &S) -> Self {
        let u2 = u.square();
        let denom = S::one() + u2.clone();
        let c = (S::one() - u2)
            .checked_div(&denom)
            .expect("1 + u² is positive");
        let s = (S::from_int(2) * u.clone())
            .checked_div(&denom)
            .expect("1 + u² is positive");
        CirclePoint { c, s }
    }

    pub fn c(&self) -> &S {
        &self.c
    }

    pub fn s(&self) -> &S {
        &self.s
    }

    /// `e^{it} ↦ e^{2it}`: `(c² − s², 2cs)`.
    pub fn double_angle(&self) -> Self {
        CirclePoint {
            c: self.c.square() - self.s.square(),
            s: S::from_int(2) * self.c.mul_ref(&self.s),
        }
    }

    /// Angle addition, `(p.c·q.c − p.s·q.s, p.s·q.c + p.c·q.s)`.
    pub fn angle_sum(&self, q: &Self) -> Self {
        CirclePoint {
            c: self.c.mul_ref(&q.c) - self.s.mul_ref(&q.s),
            s: self.s.mul_ref(&q.c) + self.c.mul_ref(&q.s),
        }
    }

    /// `(c, −s)`.
    pub fn inverse(&self) -> Self {
        CirclePoint {
            c: self.c.clone(),
            s: -self.s.clone(),
        }
    }

    /// `(−c, −s)`, the point rotated by π.
    pub fn antipode(&self) -> Self {
        CirclePoint {
            c: -self.c.clone(),
            s: -self.s.clone(),
        }
    }

    pub fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        self.c.approx_eq(&other.c, tol) && self.s.approx_eq(&other.s, tol)
    }

    /// Converts coordinates to another backend without re-checking the circle condition.
    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> CirclePoint<T> {
        CirclePoint {
            c: f(&self.c),
            s: f(&self.s),
        }
    }
}
