//! Arithmetic backends.
//!
//! [`Rational`] is exact: equality is structural and no rounding ever happens.
//! `f64` compares with the hybrid test `|a − b| ≤ ε·max(1, |a|, |b|)`, where ε
//! comes from a [`Tolerance`] passed to whichever check needs it.

use core::cmp::Ordering;
use core::fmt::Debug;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::linalg;

/// Arbitrary-precision rational number, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

/// Comparison tolerance for the floating-point backend. Ignored by exact backends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub epsilon: f64,
}

impl Tolerance {
    pub const DEFAULT_EPSILON: f64 = 1e-9;

    pub const fn new(epsilon: f64) -> Self {
        Tolerance { epsilon }
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::new(Self::DEFAULT_EPSILON)
    }
}

/// An ordered field element usable by every algorithm in this crate.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// True when arithmetic and equality are exact.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;

    /// `p / q`.
    ///
    /// # Panics
    /// If `q == 0`.
    fn from_ratio(p: i64, q: i64) -> Self;

    /// Division, `None` iff `rhs` is exactly zero.
    fn checked_div(&self, rhs: &Self) -> Option<Self>;

    fn abs(&self) -> Self;
    fn to_f64(&self) -> f64;

    /// Equality under the backend's notion of equality.
    fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool;

    fn is_zero_within(&self, tol: Tolerance) -> bool {
        self.approx_eq(&Self::zero(), tol)
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self.clone() + rhs.clone()
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.clone() - rhs.clone()
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.clone() * rhs.clone()
    }

    fn square(&self) -> Self {
        self.mul_ref(self)
    }

    /// Sign relative to zero, exact comparison in both backends.
    fn sign(&self) -> Ordering {
        self.partial_cmp(&Self::zero()).unwrap_or(Ordering::Equal)
    }

    /// `Σ ±aᵢ·bᵢ`, with `true` marking a negated term.
    fn signed_dot<'a, I>(terms: I) -> Self
    where
        Self: 'a,
        I: IntoIterator<Item = (bool, &'a Self, &'a Self)>,
    {
        terms.into_iter().fold(Self::zero(), |acc, (neg, a, b)| {
            let t = a.mul_ref(b);
            if neg {
                acc - t
            } else {
                acc + t
            }
        })
    }

    /// Determinant of a square matrix given row-major.
    fn determinant(rows: &[alloc::vec::Vec<Self>]) -> Self;

    /// Inverse of a square matrix given row-major; `None` if singular under `tol`.
    fn inverse(
        rows: &[alloc::vec::Vec<Self>],
        tol: Tolerance,
    ) -> Option<alloc::vec::Vec<alloc::vec::Vec<Self>>>;
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        num_traits::One::one()
    }

    fn from_int(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }

    fn from_ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Rational::new(BigInt::from(p), BigInt::from(q))
    }

    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(self / rhs)
        }
    }

    fn abs(&self) -> Self {
        Signed::abs(self)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn approx_eq(&self, other: &Self, _tol: Tolerance) -> bool {
        self == other
    }

    fn is_zero_within(&self, _tol: Tolerance) -> bool {
        self.is_zero()
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    /// Accumulates over a running common denominator and reduces once.
    fn signed_dot<'a, I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (bool, &'a Self, &'a Self)>,
    {
        let mut num = BigInt::zero();
        let mut den = <BigInt as num_traits::One>::one();
        for (neg, a, b) in terms {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let mut tn = a.numer() * b.numer();
            if neg {
                tn = -tn;
            }
            let td = a.denom() * b.denom();
            if td == den {
                num += tn;
            } else {
                num = num * &td + tn * &den;
                den *= td;
            }
        }
        Rational::new(num, den)
    }

    fn determinant(rows: &[alloc::vec::Vec<Self>]) -> Self {
        linalg::rational_determinant(rows)
    }

    fn inverse(
        rows: &[alloc::vec::Vec<Self>],
        _tol: Tolerance,
    ) -> Option<alloc::vec::Vec<alloc::vec::Vec<Self>>> {
        linalg::rational_inverse(rows)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn from_ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        p as f64 / q as f64
    }

    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        if *rhs == 0.0 {
            None
        } else {
            Some(self / rhs)
        }
    }

    fn abs(&self) -> Self {
        if *self < 0.0 {
            -*self
        } else {
            *self
        }
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        let scale = 1.0f64.max(Scalar::abs(self)).max(Scalar::abs(other));
        Scalar::abs(&(self - other)) <= tol.epsilon * scale
    }

    fn determinant(rows: &[alloc::vec::Vec<Self>]) -> Self {
        linalg::lu_determinant(rows)
    }

    fn inverse(
        rows: &[alloc::vec::Vec<Self>],
        tol: Tolerance,
    ) -> Option<alloc::vec::Vec<alloc::vec::Vec<Self>>> {
        linalg::gauss_jordan_inverse(rows, tol)
    }
}
