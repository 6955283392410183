//! Circle-map degrees, the pointwise commutative square
//! `c ∘ (f7 × f5) = h70 ∘ p`, and the degree ledger built from them.
//!
//! Only the degree of `p` and the square are computed here. The multipliers
//! of the covering map and of `h70` on top homology are imported constants
//! carrying their citations.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::circle::CirclePoint;
use crate::geometry::{Matrix8, Subspace};
use crate::sampling::Sampler;
use crate::scalar::{Scalar, Tolerance};
use crate::spinmaps::{f7xf5, h70, project_double_cover};
use crate::{Error, Result};

pub const DEFAULT_SAMPLES: usize = 256;

/// Multiplier of `c_*` on `H₁₈`.
pub const COVER_MULTIPLIER: i64 = 2;
pub const COVER_CITATION: &str =
    "Pittie, 7.4: the double covering Spin(7) -> SO(7) induces multiplication by 2 on H_18";

/// Magnitude of the multiplier of `(h70)_*` on `H₁₈`.
pub const H_MULTIPLIER_MAGNITUDE: i64 = 4;
pub const H_CITATION: &str = "KQ, Theorem 4.7: (h_{7,0})_* on H_18 is multiplication by +-4";

/// `n` exact points going once counterclockwise around the circle.
///
/// The right half is `from_parameter(v)` for `v` evenly spaced in `[-1, 1)`;
/// the left half is the antipode of the same points. Adjacent points are at
/// most `8/n` radians apart.
pub fn circle_samples<S: Scalar>(n: usize) -> Vec<CirclePoint<S>> {
    let half = n.div_ceil(2).max(1);
    let right: Vec<CirclePoint<S>> = (0..half)
        .map(|k| {
            let v = S::from_ratio(2 * k as i64 - half as i64, half as i64);
            CirclePoint::from_parameter(&v)
        })
        .collect();
    let left = right.iter().map(CirclePoint::antipode);
    right.iter().cloned().chain(left).collect()
}

/// Which half of the circle a point lies on: angles in `[0, π)` are upper.
fn upper<S: Scalar>(p: &CirclePoint<S>) -> bool {
    match p.s().sign() {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => p.c().sign() == Ordering::Greater,
    }
}

/// Winding number of a circle self-map.
///
/// Walks the images of [`circle_samples`] and counts signed passes through
/// angle π along the shorter arc between consecutive images. Exact for
/// rational backends.
pub fn winding_degree<S: Scalar, F>(f: F, samples: usize) -> Result<i64>
where
    F: Fn(&CirclePoint<S>) -> CirclePoint<S>,
{
    if samples < 8 {
        return Err(Error::TooFewSamples { samples });
    }
    let images: Vec<CirclePoint<S>> = circle_samples::<S>(samples).iter().map(&f).collect();
    let n = images.len();
    let mut degree = 0i64;
    for i in 0..n {
        let a = &images[i];
        let b = &images[(i + 1) % n];
        let cross = a.c().mul_ref(b.s()) - a.s().mul_ref(b.c());
        let dot = a.c().mul_ref(b.c()) + a.s().mul_ref(b.s());
        match cross.sign() {
            Ordering::Equal => {
                if dot.sign() == Ordering::Less {
                    return Err(Error::AntipodalStep { index: i });
                }
            }
            Ordering::Greater => {
                if upper(a) && !upper(b) {
                    degree += 1;
                }
            }
            Ordering::Less => {
                if !upper(a) && upper(b) {
                    degree -= 1;
                }
            }
        }
    }
    Ok(degree)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SquareFailure<S> {
    pub trial: usize,
    pub residual: S,
}

/// Result of [`verify_square`].
#[derive(Debug, Clone, PartialEq)]
pub struct SquareReport<S> {
    pub trials: usize,
    pub failures: Vec<SquareFailure<S>>,
    /// Largest entry-wise difference seen; always zero for exact backends that pass.
    pub max_residual: S,
}

impl<S> SquareReport<S> {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// One random instance of the square, drawn from stream `trial` of `seed`.
pub fn square_instance<S: Scalar>(
    seed: u64,
    trial: usize,
    tol: Tolerance,
) -> Result<(Matrix8<S>, Matrix8<S>)> {
    let mut rng = Sampler::new(seed, trial as u64);
    let p7 = rng.orthonormal_pair::<S>(Subspace::R7);
    let t = rng.circle_point::<S>();
    let p5 = rng.orthonormal_pair::<S>(Subspace::R5);
    let t2 = rng.circle_point::<S>();
    let upper_path = project_double_cover(&f7xf5(&p7, &t, &p5, &t2, tol)?);
    let lower_path = h70(&p7, &t.double_angle(), &p5, &t2.double_angle());
    Ok((upper_path, lower_path))
}

/// Checks `c ∘ (f7 × f5) = h70 ∘ p` entry-wise on `trials` random instances.
pub fn verify_square<S: Scalar>(
    seed: u64,
    trials: usize,
    tol: Tolerance,
) -> Result<SquareReport<S>> {
    let mut failures = Vec::new();
    let mut max_residual = S::zero();
    for trial in 0..trials {
        let (a, b) = square_instance::<S>(seed, trial, tol)?;
        let residual = a.max_abs_diff(&b);
        if !a.approx_eq(&b, tol) {
            failures.push(SquareFailure {
                trial,
                residual: residual.clone(),
            });
        }
        if residual > max_residual {
            max_residual = residual;
        }
    }
    Ok(SquareReport {
        trials,
        failures,
        max_residual,
    })
}

/// Degree bookkeeping for `(f7 × f5)_*` on `H₁₈`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport {
    /// Degree of `p`, computed from the two circle factors.
    pub p_degree: i64,
    pub cover_multiplier: i64,
    pub cover_citation: &'static str,
    pub h_multiplier_magnitude: i64,
    pub h_citation: &'static str,
    pub conclusion_magnitude: i64,
    /// Orientations of the fundamental classes are not fixed, so the sign is not.
    pub sign_determined: bool,
}

/// Solves `conclusion · 2 = 4 · deg p` for the magnitude of `(f7 × f5)_*`.
pub fn degree_ledger<S>(
    square: &SquareReport<S>,
    p_deg_t: i64,
    p_deg_t2: i64,
) -> Result<DegreeReport> {
    if !square.pass() {
        return Err(Error::SquareFailed {
            failures: square.failures.len(),
        });
    }
    let p_degree = p_deg_t * p_deg_t2;
    let numerator = H_MULTIPLIER_MAGNITUDE * p_degree;
    if numerator % COVER_MULTIPLIER != 0 {
        return Err(Error::LedgerNotIntegral);
    }
    let conclusion_magnitude = (numerator / COVER_MULTIPLIER).abs();
    debug_assert_eq!(
        conclusion_magnitude * COVER_MULTIPLIER,
        (H_MULTIPLIER_MAGNITUDE * p_degree).abs()
    );
    Ok(DegreeReport {
        p_degree,
        cover_multiplier: COVER_MULTIPLIER,
        cover_citation: COVER_CITATION,
        h_multiplier_magnitude: H_MULTIPLIER_MAGNITUDE,
        h_citation: H_CITATION,
        conclusion_magnitude,
        sign_determined: false,
    })
}
