//! Seeded random instances: small rationals, octonions, circle points and
//! exact orthonormal frames.
//!
//! A [`Sampler`] is keyed by `(seed, stream)`, so trial `k` of a run always
//! sees the same values no matter how trials are scheduled.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circle::CirclePoint;
use crate::geometry::{cayley_orthogonal, Matrix8, OrientedPlane, Subspace};
use crate::octonion::{Octonion, Vector8};
use crate::scalar::{Scalar, Tolerance};

/// Numerators in `[-20, 20]`, denominators in `[1, 10]`.
pub const OCTONION_RANGE: RatioRange = RatioRange::new(20, 10);
/// Numerators in `[-5, 5]`, denominators in `[1, 4]`.
pub const FRAME_RANGE: RatioRange = RatioRange::new(5, 4);
/// Stereographic parameters for random angles.
pub const ANGLE_RANGE: RatioRange = RatioRange::new(20, 10);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RatioRange {
    pub max_numer: i64,
    pub max_denom: i64,
}

impl RatioRange {
    pub const fn new(max_numer: i64, max_denom: i64) -> Self {
        RatioRange {
            max_numer,
            max_denom,
        }
    }
}

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Sampler { rng }
    }

    /// A pair `(p, q)` with `|p| ≤ max_numer`, `1 ≤ q ≤ max_denom`.
    pub fn ratio(&mut self, range: RatioRange) -> (i64, i64) {
        let p = self.rng.random_range(-range.max_numer..=range.max_numer);
        let q = self.rng.random_range(1..=range.max_denom);
        (p, q)
    }

    pub fn scalar<S: Scalar>(&mut self, range: RatioRange) -> S {
        let (p, q) = self.ratio(range);
        S::from_ratio(p, q)
    }

    pub fn nonzero_scalar<S: Scalar>(&mut self, range: RatioRange) -> S {
        loop {
            let (p, q) = self.ratio(range);
            if p != 0 {
                return S::from_ratio(p, q);
            }
        }
    }

    pub fn octonion<S: Scalar>(&mut self) -> Octonion<S> {
        Octonion::new(core::array::from_fn(|_| self.scalar(OCTONION_RANGE)))
    }

    pub fn nonzero_octonion<S: Scalar>(&mut self) -> Octonion<S> {
        loop {
            let o = self.octonion::<S>();
            if !o.is_zero(Tolerance::new(0.0)) {
                return o;
            }
        }
    }

    pub fn imaginary_octonion<S: Scalar>(&mut self) -> Octonion<S> {
        let mut c: [S; 8] = core::array::from_fn(|_| self.scalar(OCTONION_RANGE));
        c[0] = S::zero();
        Octonion::new(c)
    }

    /// `from_parameter(u)` for a random rational `u`.
    pub fn circle_point<S: Scalar>(&mut self) -> CirclePoint<S> {
        let u: S = self.scalar(ANGLE_RANGE);
        CirclePoint::from_parameter(&u)
    }

    /// Random antisymmetric matrix supported on the coordinates of `sub`.
    pub fn antisymmetric<S: Scalar>(&mut self, sub: Subspace) -> Matrix8<S> {
        let range = sub.coords();
        let mut upper = [[(0i64, 1i64); 8]; 8];
        for i in range.clone() {
            for j in range.clone() {
                if i < j {
                    upper[i][j] = self.ratio(FRAME_RANGE);
                }
            }
        }
        Matrix8::from_fn(|i, j| {
            if i < j {
                S::from_ratio(upper[i][j].0, upper[i][j].1)
            } else if j < i {
                -S::from_ratio(upper[j][i].0, upper[j][i].1)
            } else {
                S::zero()
            }
        })
    }

    /// Random special orthogonal matrix fixing the complement of `sub` pointwise.
    pub fn rotation<S: Scalar>(&mut self, sub: Subspace) -> Matrix8<S> {
        let a = self.antisymmetric::<S>(sub);
        cayley_orthogonal(&a, Tolerance::default())
            .expect("I + A is invertible for antisymmetric A")
    }

    /// A unit orthonormal pair `[x, y]` supported on `sub`: the columns of a
    /// random Cayley rotation at the first two coordinates of `sub`.
    pub fn orthonormal_pair<S: Scalar>(&mut self, sub: Subspace) -> OrientedPlane<S> {
        let q = self.rotation::<S>(sub);
        let first = *sub.coords().start();
        let x = q.column(first);
        let y = q.column(first + 1);
        OrientedPlane::new(x, y, Tolerance::default()).expect("Cayley columns are orthonormal")
    }

    /// Random nonzero imaginary vector orthogonal to `e0, x, y, xy`.
    pub fn complement_vector<S: Scalar>(&mut self, plane: &OrientedPlane<S>) -> Vector8<S> {
        let (x, y) = (plane.u(), plane.v());
        let spanning = [x.clone(), y.clone(), x * y];
        loop {
            let mut r = self.imaginary_octonion::<S>();
            for b in &spanning {
                let coef = r
                    .inner(b)
                    .checked_div(&b.norm_sq())
                    .expect("frame vectors are nonzero");
                r = &r - &b.scale(&coef);
            }
            if !r.is_zero(Tolerance::default()) {
                return r;
            }
        }
    }
}

/// Unit orthonormal pair from stream 0 of `seed`.
pub fn random_orthonormal_pair<S: Scalar>(seed: u64, sub: Subspace) -> OrientedPlane<S> {
    Sampler::new(seed, 0).orthonormal_pair(sub)
}
