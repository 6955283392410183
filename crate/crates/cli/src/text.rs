//! Text forms of scalars, vectors, matrices and planes.
//!
//! Rationals are `"p/q"` in lowest terms with `q > 0`, always with the
//! slash. Floats are decimal strings with 17 significant digits.

use std::str::FromStr;

use octospin::{CirclePoint, Matrix8, OrientedPlane, Rational, Scalar, Vector8};
use serde::Serialize;

pub trait ScalarText: Scalar {
    fn to_text(&self) -> String;
}

impl ScalarText for Rational {
    fn to_text(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }
}

impl ScalarText for f64 {
    fn to_text(&self) -> String {
        format!("{:.16e}", self)
    }
}

pub fn vector_text<S: ScalarText>(v: &Vector8<S>) -> Vec<String> {
    v.coords().iter().map(ScalarText::to_text).collect()
}

pub fn matrix_text<S: ScalarText>(m: &Matrix8<S>) -> Vec<Vec<String>> {
    m.rows()
        .iter()
        .map(|row| row.iter().map(ScalarText::to_text).collect())
        .collect()
}

pub fn plane_text<S: ScalarText>(p: &OrientedPlane<S>) -> [Vec<String>; 2] {
    [vector_text(p.u()), vector_text(p.v())]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AngleText {
    pub c: String,
    pub s: String,
}

pub fn angle_text<S: ScalarText>(t: &CirclePoint<S>) -> AngleText {
    AngleText {
        c: t.c().to_text(),
        s: t.s().to_text(),
    }
}

/// Parses `"p/q"` or an integer `"p"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    Rational::from_str(s).ok()
}
