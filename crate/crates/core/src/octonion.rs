//! The octonions over a [`Scalar`] field.
//!
//! Basis `e0..e7` with `e0 = 1`, `ei² = −1` for `i ≥ 1`, and distinct imaginary
//! units multiplied along the seven oriented Fano lines in [`FANO_LINES`]: for a
//! line `(a, b, c)`, `ea·eb = ec`, `eb·ec = ea`, `ec·ea = eb`, and reversing the
//! order of a product flips its sign.

use core::ops::{Add, Mul, Neg, Sub};

use crate::scalar::{Scalar, Tolerance};
use crate::{Error, Result};

/// Oriented Fano lines. Together they fix `e1e2 = e3` and `e3e2 = −e1`.
pub const FANO_LINES: [[usize; 3]; 7] = [
    [1, 2, 3],
    [1, 4, 5],
    [6, 7, 1],
    [3, 5, 6],
    [3, 4, 7],
    [6, 4, 2],
    [7, 2, 5],
];

/// `ei·ej = sign·e_index` for distinct `i, j ∈ 1..=7`, stored zero-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanoTable {
    sign: [[i8; 7]; 7],
    index: [[u8; 7]; 7],
}

impl FanoTable {
    /// Builds the table from cyclically oriented lines. Diagonal entries stay zero.
    pub const fn from_lines(lines: &[[usize; 3]; 7]) -> Self {
        let mut sign = [[0i8; 7]; 7];
        let mut index = [[0u8; 7]; 7];
        let mut l = 0;
        while l < 7 {
            let [a, b, c] = lines[l];
            let cyc = [(a, b, c), (b, c, a), (c, a, b)];
            let mut r = 0;
            while r < 3 {
                let (i, j, k) = cyc[r];
                sign[i - 1][j - 1] = 1;
                index[i - 1][j - 1] = k as u8;
                sign[j - 1][i - 1] = -1;
                index[j - 1][i - 1] = k as u8;
                r += 1;
            }
            l += 1;
        }
        FanoTable { sign, index }
    }

    /// `(sign, k)` with `ei·ej = sign·ek`, for distinct `i, j ∈ 1..=7`.
    pub fn product(&self, i: usize, j: usize) -> (i8, usize) {
        debug_assert!(i != j && (1..=7).contains(&i) && (1..=7).contains(&j));
        (self.sign[i - 1][j - 1], self.index[i - 1][j - 1] as usize)
    }
}

pub static FANO: FanoTable = FanoTable::from_lines(&FANO_LINES);

/// `ei·ej = sign·ek` for any `i, j ∈ 0..8`.
pub fn basis_product(i: usize, j: usize) -> (i8, usize) {
    match (i, j) {
        (0, j) => (1, j),
        (i, 0) => (1, i),
        (i, j) if i == j => (-1, 0),
        (i, j) => FANO.product(i, j),
    }
}

/// `PARTNER[i][k]` is the `j` with `eᵢ·eⱼ = ±e_k`.
static PARTNER: [[usize; 8]; 8] = {
    let mut t = [[0usize; 8]; 8];
    let mut i = 0;
    while i < 8 {
        let mut j = 0;
        while j < 8 {
            let k = if i == 0 {
                j
            } else if j == 0 {
                i
            } else if i == j {
                0
            } else {
                FANO.index[i - 1][j - 1] as usize
            };
            t[i][k] = j;
            j += 1;
        }
        i += 1;
    }
    t
};

/// An octonion `Σ coordsᵢ·eᵢ`. Also used as a vector of `ℝ⁸`.
#[derive(Debug, Clone, PartialEq)]
pub struct Octonion<S> {
    coords: [S; 8],
}

/// Vectors of `ℝ⁸` share the octonion representation; `ℝ⁷ = Im 𝕆`.
pub type Vector8<S> = Octonion<S>;

impl<S: Scalar> Octonion<S> {
    pub fn new(coords: [S; 8]) -> Self {
        Octonion { coords }
    }

    pub fn zero() -> Self {
        Octonion::new(core::array::from_fn(|_| S::zero()))
    }

    pub fn one() -> Self {
        Self::basis(0)
    }

    /// `e_i`.
    ///
    /// # Panics
    /// If `i ≥ 8`.
    pub fn basis(i: usize) -> Self {
        assert!(i < 8, "basis index out of range");
        Octonion::new(core::array::from_fn(|k| {
            if k == i {
                S::one()
            } else {
                S::zero()
            }
        }))
    }

    pub fn coords(&self) -> &[S; 8] {
        &self.coords
    }

    pub fn into_coords(self) -> [S; 8] {
        self.coords
    }

    pub fn real(&self) -> &S {
        &self.coords[0]
    }

    pub fn is_imaginary(&self, tol: Tolerance) -> bool {
        self.coords[0].is_zero_within(tol)
    }

    pub fn is_zero(&self, tol: Tolerance) -> bool {
        self.coords.iter().all(|c| c.is_zero_within(tol))
    }

    pub fn conj(&self) -> Self {
        Octonion::new(core::array::from_fn(|k| {
            if k == 0 {
                self.coords[0].clone()
            } else {
                -self.coords[k].clone()
            }
        }))
    }

    /// Euclidean dot product of coordinate vectors.
    pub fn inner(&self, other: &Self) -> S {
        S::signed_dot(
            self.coords
                .iter()
                .zip(other.coords.iter())
                .map(|(a, b)| (false, a, b)),
        )
    }

    pub fn norm_sq(&self) -> S {
        self.inner(self)
    }

    pub fn scale(&self, k: &S) -> Self {
        Octonion::new(core::array::from_fn(|i| self.coords[i].mul_ref(k)))
    }

    /// Solves `b·u = a` for `b`: `a·conj(u) / |u|²`.
    pub fn right_divide(&self, u: &Self) -> Result<Self> {
        let n = u.norm_sq();
        let p = self * &u.conj();
        let coords = p
            .coords
            .iter()
            .map(|c| c.checked_div(&n))
            .collect::<Option<alloc::vec::Vec<_>>>()
            .ok_or(Error::DivisionByZero)?;
        let coords: [S; 8] = coords.try_into().expect("eight coordinates");
        Ok(Octonion::new(coords))
    }

    pub fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        self.coords
            .iter()
            .zip(other.coords.iter())
            .all(|(a, b)| a.approx_eq(b, tol))
    }

    /// Converts to another backend coordinate-wise.
    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Octonion<T> {
        Octonion::new(core::array::from_fn(|i| f(&self.coords[i])))
    }

    fn product(&self, rhs: &Self) -> Self {
        // eᵢ·eⱼ lands on e_k for exactly one j per (i, k)
        Octonion::new(core::array::from_fn(|k| {
            S::signed_dot((0..8).map(|i| {
                let j = PARTNER[i][k];
                let (sign, _) = basis_product(i, j);
                (sign < 0, &self.coords[i], &rhs.coords[j])
            }))
        }))
    }
}

impl<S: Scalar> Mul for &Octonion<S> {
    type Output = Octonion<S>;

    fn mul(self, rhs: &Octonion<S>) -> Octonion<S> {
        self.product(rhs)
    }
}

impl<S: Scalar> Mul for Octonion<S> {
    type Output = Octonion<S>;

    fn mul(self, rhs: Octonion<S>) -> Octonion<S> {
        self.product(&rhs)
    }
}

impl<S: Scalar> Add for &Octonion<S> {
    type Output = Octonion<S>;

    fn add(self, rhs: &Octonion<S>) -> Octonion<S> {
        Octonion::new(core::array::from_fn(|i| {
            self.coords[i].add_ref(&rhs.coords[i])
        }))
    }
}

impl<S: Scalar> Add for Octonion<S> {
    type Output = Octonion<S>;

    fn add(self, rhs: Octonion<S>) -> Octonion<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for &Octonion<S> {
    type Output = Octonion<S>;

    fn sub(self, rhs: &Octonion<S>) -> Octonion<S> {
        Octonion::new(core::array::from_fn(|i| {
            self.coords[i].sub_ref(&rhs.coords[i])
        }))
    }
}

impl<S: Scalar> Sub for Octonion<S> {
    type Output = Octonion<S>;

    fn sub(self, rhs: Octonion<S>) -> Octonion<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Neg for Octonion<S> {
    type Output = Octonion<S>;

    fn neg(self) -> Octonion<S> {
        Octonion::new(self.coords.map(|c| -c))
    }
}

impl<S: Scalar> Neg for &Octonion<S> {
    type Output = Octonion<S>;

    fn neg(self) -> Octonion<S> {
        -self.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use alloc::vec::Vec;

    type O = Octonion<Rational>;

    fn e(i: usize) -> O {
        O::basis(i)
    }

    fn q(p: i64, d: i64) -> Rational {
        Rational::from_ratio(p, d)
    }

    #[test]
    fn e3_e2_is_minus_e1() {
        assert_eq!(&e(3) * &e(2), -e(1));
    }

    #[test]
    fn e1_e2_is_e3() {
        assert_eq!(&e(1) * &e(2), e(3));
    }

    #[test]
    fn unit_and_squares() {
        let a = O::new(core::array::from_fn(|i| q(i as i64 - 3, 2)));
        assert_eq!(&e(0) * &a, a);
        assert_eq!(&a * &e(0), a);
        for i in 1..8 {
            assert_eq!(&e(i) * &e(i), -e(0));
        }
    }

    #[test]
    fn table_is_antisymmetric_and_covers_each_pair_once() {
        let mut seen = [[0u8; 8]; 8];
        for line in FANO_LINES {
            for a in 0..3 {
                for b in 0..3 {
                    if a != b {
                        seen[line[a]][line[b]] += 1;
                    }
                }
            }
        }
        for i in 1..8 {
            for j in 1..8 {
                if i == j {
                    continue;
                }
                assert_eq!(seen[i][j], 1, "pair ({i},{j})");
                let (s1, k1) = FANO.product(i, j);
                let (s2, k2) = FANO.product(j, i);
                assert_eq!(k1, k2);
                assert_eq!(s1, -s2);
                assert!(k1 != i && k1 != j);
            }
        }
    }

    #[test]
    fn frame_products_for_e4() {
        // wx, wy, w(xy) for x = e1, y = e2, w = e4
        assert_eq!(&e(4) * &e(1), -e(5));
        assert_eq!(&e(4) * &e(2), e(6));
        assert_eq!(&e(4) * &e(3), -e(7));
        assert_eq!(&(-e(5)) * &e(6), -e(3));
    }

    #[test]
    fn conjugation() {
        assert_eq!(e(0).conj(), e(0));
        assert_eq!(e(5).conj(), -e(5));
        let a = &e(0).scale(&q(3, 1)) + &e(2).scale(&q(4, 1));
        let c = a.conj();
        assert_eq!(c, &e(0).scale(&q(3, 1)) - &e(2).scale(&q(4, 1)));
        assert_eq!(&a * &c, e(0).scale(&q(25, 1)));
        assert_eq!(c.conj(), a);
    }

    #[test]
    fn inner_products() {
        for i in 0..8 {
            for j in 0..8 {
                let want = if i == j { q(1, 1) } else { q(0, 1) };
                assert_eq!(e(i).inner(&e(j)), want);
            }
        }
        assert_eq!((&e(1) + &e(2)).inner(&(&e(1) - &e(2))), q(0, 1));
        let a = &e(0).scale(&q(3, 1)) + &e(2).scale(&q(4, 1));
        assert_eq!(a.inner(&a), q(25, 1));
    }

    /// Solves `b·u = a` by Gaussian elimination on the 8×8 system whose
    /// columns are `ek·u`; independent of the conjugate formula.
    fn solve_right(a: &O, u: &O) -> O {
        let cols: Vec<O> = (0..8).map(|k| &e(k) * u).collect();
        let mut m: Vec<Vec<Rational>> = (0..8)
            .map(|r| {
                let mut row: Vec<Rational> = cols.iter().map(|c| c.coords()[r].clone()).collect();
                row.push(a.coords()[r].clone());
                row
            })
            .collect();
        for k in 0..8 {
            let p = (k..8).find(|&r| m[r][k] != q(0, 1)).unwrap();
            m.swap(k, p);
            let pv = m[k][k].clone();
            for c in 0..9 {
                m[k][c] = m[k][c].clone() / pv.clone();
            }
            for r in 0..8 {
                if r != k {
                    let f = m[r][k].clone();
                    for c in 0..9 {
                        let d = f.clone() * m[k][c].clone();
                        m[r][c] = m[r][c].clone() - d;
                    }
                }
            }
        }
        O::new(core::array::from_fn(|r| m[r][8].clone()))
    }

    #[test]
    fn right_divide_examples() {
        let b = e(3).right_divide(&e(2)).unwrap();
        assert_eq!(b, solve_right(&e(3), &e(2)));
        assert_eq!(b, e(1));
        assert_eq!(&b * &e(2), e(3));

        let a = O::new(core::array::from_fn(|i| q(2 * i as i64 - 5, 3)));
        assert_eq!(a.right_divide(&e(0)).unwrap(), a);

        let u = O::new(core::array::from_fn(|i| q(i as i64 % 3 - 1, 1 + i as i64)));
        assert_eq!(a.right_divide(&u).unwrap(), solve_right(&a, &u));
    }

    #[test]
    fn right_divide_by_zero() {
        assert_eq!(e(1).right_divide(&O::zero()), Err(Error::DivisionByZero));
    }
}
