//! Exact inputs from the command line.
//!
//! Vectors are `e<k>` or eight comma-separated rationals. Planes are
//! `ei,ej` or two 8-tuples separated by `;`. Angles are `c,s` or `u=p/q`.

use octospin::{CirclePoint, OrientedPlane, Rational, Scalar, Tolerance, Vector8};

use crate::error::CliError;
use crate::text::parse_rational;

fn bad(kind: &'static str, input: &str, reason: impl Into<String>) -> CliError {
    CliError::Argument {
        kind,
        input: input.to_string(),
        reason: reason.into(),
    }
}

fn basis_name(s: &str) -> Option<usize> {
    let k: usize = s.trim().strip_prefix('e')?.parse().ok()?;
    (k < 8).then_some(k)
}

fn tuple(kind: &'static str, input: &str, s: &str) -> Result<Vector8<Rational>, CliError> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 8 {
        return Err(bad(
            kind,
            input,
            format!("expected 8 coordinates, got {}", parts.len()),
        ));
    }
    let mut coords: [Rational; 8] = Default::default();
    for (c, p) in coords.iter_mut().zip(&parts) {
        *c = parse_rational(p).ok_or_else(|| bad(kind, input, format!("not a rational: {p:?}")))?;
    }
    Ok(Vector8::new(coords))
}

pub fn parse_vector(input: &str) -> Result<Vector8<Rational>, CliError> {
    match basis_name(input) {
        Some(k) => Ok(Vector8::basis(k)),
        None => tuple("vector", input, input),
    }
}

pub fn parse_plane(input: &str) -> Result<OrientedPlane<Rational>, CliError> {
    let (u, v) = if let Some((a, b)) = input.split_once(';') {
        (tuple("plane", input, a)?, tuple("plane", input, b)?)
    } else {
        let names: Vec<Option<usize>> = input.split(',').map(basis_name).collect();
        match names.as_slice() {
            [Some(i), Some(j)] => (Vector8::basis(*i), Vector8::basis(*j)),
            _ => {
                return Err(bad(
                    "plane",
                    input,
                    "expected `ei,ej` or two 8-tuples joined by `;`",
                ))
            }
        }
    };
    OrientedPlane::new(u, v, Tolerance::default()).map_err(|e| bad("plane", input, e.to_string()))
}

pub fn parse_angle(input: &str) -> Result<CirclePoint<Rational>, CliError> {
    if let Some(u) = input.trim().strip_prefix("u=") {
        let u =
            parse_rational(u).ok_or_else(|| bad("angle", input, "parameter is not a rational"))?;
        return Ok(CirclePoint::from_parameter(&u));
    }
    let parts: Vec<&str> = input.split(',').collect();
    let [c, s] = parts.as_slice() else {
        return Err(bad("angle", input, "expected `c,s` or `u=p/q`"));
    };
    let c =
        parse_rational(c).ok_or_else(|| bad("angle", input, format!("not a rational: {c:?}")))?;
    let s =
        parse_rational(s).ok_or_else(|| bad("angle", input, format!("not a rational: {s:?}")))?;
    CirclePoint::new(c, s, Tolerance::default()).map_err(|e| bad("angle", input, e.to_string()))
}

pub fn to_float_plane(p: &OrientedPlane<Rational>) -> OrientedPlane<f64> {
    p.map(Scalar::to_f64)
}
