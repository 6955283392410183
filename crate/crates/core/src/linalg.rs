//! Small dense elimination routines behind [`Scalar::determinant`] and matrix inversion.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::scalar::{Rational, Scalar, Tolerance};

/// Exact determinant: rows are scaled to integers by their denominators' lcm,
/// then reduced with fraction-free (Bareiss) elimination.
pub(crate) fn rational_determinant(rows: &[Vec<Rational>]) -> Rational {
    if rows.is_empty() {
        return <Rational as One>::one();
    }
    let (mut m, scales) = integer_rows(rows);
    let det = bareiss(&mut m);
    let scale = scales.iter().fold(BigInt::one(), |acc, l| acc * l);
    Rational::new(det, scale)
}

/// Each row multiplied by the lcm of its denominators; returns the rows and the multipliers.
fn integer_rows(rows: &[Vec<Rational>]) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
    rows.iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let ints = row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
            (ints, lcm)
        })
        .unzip()
}

/// Bareiss elimination in place; returns the determinant.
fn bareiss(m: &mut [Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                // exact by Sylvester's identity
                m[i][j] = v / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    if negate {
        -prev
    } else {
        prev
    }
}

/// Exact inverse by fraction-free Gauss–Jordan on integer-scaled rows, so
/// no gcd work happens until the final division. `None` if singular.
pub(crate) fn rational_inverse(rows: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = rows.len();
    let (ints, scales) = integer_rows(rows);
    let mut m: Vec<Vec<BigInt>> = ints
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            row.extend((0..n).map(|j| {
                if i == j {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }));
            row
        })
        .collect();
    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = (k..n).find(|&r| !m[r][k].is_zero())?;
        m.swap(k, pivot);
        for i in 0..n {
            if i == k {
                continue;
            }
            for j in 0..2 * n {
                if j != k {
                    let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = v / &prev;
                }
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    // left block is now prev·I; undo the row scaling on the columns
    Some(
        m.iter()
            .map(|row| {
                (0..n)
                    .map(|j| Rational::new(&row[n + j] * &scales[j], prev.clone()))
                    .collect()
            })
            .collect(),
    )
}

/// LU with partial pivoting.
pub(crate) fn lu_determinant(rows: &[Vec<f64>]) -> f64 {
    let n = rows.len();
    let mut m: Vec<Vec<f64>> = rows.to_vec();
    let mut det = 1.0;
    for k in 0..n {
        let pivot = (k..n)
            .max_by(|&a, &b| {
                Scalar::abs(&m[a][k])
                    .partial_cmp(&Scalar::abs(&m[b][k]))
                    .unwrap_or(core::cmp::Ordering::Equal)
            })
            .unwrap_or(k);
        if m[pivot][k] == 0.0 {
            return 0.0;
        }
        if pivot != k {
            m.swap(pivot, k);
            det = -det;
        }
        det *= m[k][k];
        for i in k + 1..n {
            let factor = m[i][k] / m[k][k];
            for j in k..n {
                let delta = factor * m[k][j];
                m[i][j] -= delta;
            }
        }
    }
    det
}

/// Gauss–Jordan inverse with largest-magnitude pivoting. `None` if singular under `tol`.
pub(crate) fn gauss_jordan_inverse<S: Scalar>(
    rows: &[Vec<S>],
    tol: Tolerance,
) -> Option<Vec<Vec<S>>> {
    let n = rows.len();
    let mut a: Vec<Vec<S>> = rows.to_vec();
    let mut inv: Vec<Vec<S>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { S::one() } else { S::zero() })
                .collect()
        })
        .collect();

    for k in 0..n {
        let pivot = (k..n).max_by(|&r1, &r2| {
            a[r1][k]
                .abs()
                .partial_cmp(&a[r2][k].abs())
                .unwrap_or(core::cmp::Ordering::Equal)
        })?;
        if a[pivot][k].is_zero_within(tol) {
            return None;
        }
        a.swap(k, pivot);
        inv.swap(k, pivot);

        let p = a[k][k].clone();
        for j in 0..n {
            a[k][j] = a[k][j].checked_div(&p)?;
            inv[k][j] = inv[k][j].checked_div(&p)?;
        }
        for i in 0..n {
            if i == k || a[i][k] == S::zero() {
                continue;
            }
            let factor = a[i][k].clone();
            for j in 0..n {
                let da = factor.mul_ref(&a[k][j]);
                a[i][j] = a[i][j].sub_ref(&da);
                let di = factor.mul_ref(&inv[k][j]);
                inv[i][j] = inv[i][j].sub_ref(&di);
            }
        }
    }
    Some(inv)
}
