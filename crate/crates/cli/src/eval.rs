//! `eval`, `table` and `gen-frame`: single evaluations written as records.

use octospin::geometry::{choose_w, so_check};
use octospin::sampling::Sampler;
use octospin::spinmaps::{
    basis_b, f5, f7, f7xf5, frame_table, h70, spin8_map, verify_spin7, FRAME_LABELS,
};
use octospin::{CirclePoint, Matrix8, OrientedPlane, Rational, Scalar, Subspace, Vector8};
use serde::Serialize;

use crate::args::{parse_angle, parse_plane, parse_vector};
use crate::config::{Backend, RunConfig};
use crate::error::CliError;
use crate::text::{angle_text, matrix_text, plane_text, vector_text, AngleText, ScalarText};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum MapName {
    F7,
    F5,
    F7xf5,
    H70,
    Spin8,
}

impl MapName {
    pub fn name(self) -> &'static str {
        match self {
            MapName::F7 => "f7",
            MapName::F5 => "f5",
            MapName::F7xf5 => "f7xf5",
            MapName::H70 => "h70",
            MapName::Spin8 => "spin8",
        }
    }

    /// Flags the map reads: `plane`, `angle`, `w`, `plane5`, `angle5`, `s`.
    fn uses(self) -> [bool; 6] {
        match self {
            MapName::F7 => [true, true, true, false, false, false],
            MapName::F5 => [true, true, false, false, false, false],
            MapName::F7xf5 | MapName::H70 => [true, true, false, true, true, false],
            MapName::Spin8 => [true, true, false, true, true, true],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum SubspaceArg {
    R7,
    R5,
}

impl From<SubspaceArg> for Subspace {
    fn from(s: SubspaceArg) -> Self {
        match s {
            SubspaceArg::R7 => Subspace::R7,
            SubspaceArg::R5 => Subspace::R5,
        }
    }
}

/// Raw map arguments as given on the command line.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MapArgs {
    pub plane: Option<String>,
    pub angle: Option<String>,
    pub w: Option<String>,
    pub plane5: Option<String>,
    pub angle5: Option<String>,
    pub s: Option<String>,
}

const FLAGS: [&str; 6] = ["plane", "angle", "w", "plane5", "angle5", "s"];

#[derive(Debug, Clone)]
struct Inputs<S> {
    plane: OrientedPlane<S>,
    angle: CirclePoint<S>,
    w: Option<Vector8<S>>,
    plane5: Option<OrientedPlane<S>>,
    angle5: Option<CirclePoint<S>>,
    s: Option<Vector8<S>>,
}

impl Inputs<Rational> {
    fn parse(map: MapName, args: &MapArgs) -> Result<Self, CliError> {
        let given = [
            &args.plane,
            &args.angle,
            &args.w,
            &args.plane5,
            &args.angle5,
            &args.s,
        ];
        for ((flag, used), value) in FLAGS.iter().zip(map.uses()).zip(given) {
            if !used && value.is_some() {
                return Err(CliError::Unused {
                    map: map.name(),
                    flag,
                });
            }
        }
        fn need<'a>(
            map: MapName,
            v: &'a Option<String>,
            flag: &'static str,
        ) -> Result<&'a str, CliError> {
            v.as_deref().ok_or(CliError::Missing {
                map: map.name(),
                flag,
            })
        }
        let needs5 = map.uses()[3];
        Ok(Inputs {
            plane: parse_plane(need(map, &args.plane, "plane")?)?,
            angle: parse_angle(need(map, &args.angle, "angle")?)?,
            w: args.w.as_deref().map(parse_vector).transpose()?,
            plane5: if needs5 {
                Some(parse_plane(need(map, &args.plane5, "plane5")?)?)
            } else {
                None
            },
            angle5: if needs5 {
                Some(parse_angle(need(map, &args.angle5, "angle5")?)?)
            } else {
                None
            },
            s: if map.uses()[5] {
                Some(parse_vector(need(map, &args.s, "s")?)?)
            } else {
                None
            },
        })
    }

    fn to_float(&self) -> Inputs<f64> {
        let f = |x: &Rational| Scalar::to_f64(x);
        Inputs {
            plane: self.plane.map(f),
            angle: self.angle.map(f),
            w: self.w.as_ref().map(|v| v.map(f)),
            plane5: self.plane5.as_ref().map(|p| p.map(f)),
            angle5: self.angle5.as_ref().map(|t| t.map(f)),
            s: self.s.as_ref().map(|v| v.map(f)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InputsRecord {
    pub plane: [Vec<String>; 2],
    pub angle: AngleText,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub plane5: Option<[Vec<String>; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub angle5: Option<AngleText>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SoRecord {
    pub orthogonality_residual: String,
    pub determinant: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MembershipRecord {
    pub is_member: bool,
    pub g_in_so7: bool,
    pub relation_failures: Vec<[usize; 2]>,
    pub candidate_g: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalRecord {
    pub map: MapName,
    pub backend: Backend,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<String>,
    pub inputs: InputsRecord,
    pub matrix: Vec<Vec<String>>,
    /// The `S⁷` component, for `spin8` only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<Vec<String>>,
    pub so_check: SoRecord,
    pub verify_spin7: MembershipRecord,
}

fn epsilon_text(config: &RunConfig) -> Option<String> {
    (config.backend == Backend::Float).then(|| config.epsilon.to_text())
}

fn evaluate<S: ScalarText>(
    map: MapName,
    inp: &Inputs<S>,
    config: &RunConfig,
) -> Result<EvalRecord, CliError> {
    let tol = config.tolerance();
    let err = |source| CliError::Map {
        map: map.name(),
        source,
    };
    let (p5, t5) = (inp.plane5.as_ref(), inp.angle5.as_ref());
    let pair = || p5.zip(t5).expect("parsed for maps that need them");
    let (matrix, s): (Matrix8<S>, Option<Vector8<S>>) = match map {
        MapName::F7 => (
            f7(&inp.plane, &inp.angle, inp.w.as_ref(), tol).map_err(err)?,
            None,
        ),
        MapName::F5 => (f5(&inp.plane, &inp.angle, tol).map_err(err)?, None),
        MapName::F7xf5 => {
            let (p5, t5) = pair();
            (
                f7xf5(&inp.plane, &inp.angle, p5, t5, tol).map_err(err)?,
                None,
            )
        }
        MapName::H70 => {
            let (p5, t5) = pair();
            (h70(&inp.plane, &inp.angle, p5, t5), None)
        }
        MapName::Spin8 => {
            let (p5, t5) = pair();
            let sv = inp.s.as_ref().expect("parsed for spin8");
            let (m, s) = spin8_map(&inp.plane, &inp.angle, p5, t5, sv, tol).map_err(err)?;
            (m, Some(s))
        }
    };
    let so = so_check(&matrix, tol);
    let member = verify_spin7(&matrix, tol);
    Ok(EvalRecord {
        map,
        backend: config.backend,
        epsilon: epsilon_text(config),
        inputs: InputsRecord {
            plane: plane_text(&inp.plane),
            angle: angle_text(&inp.angle),
            w: inp.w.as_ref().map(vector_text),
            plane5: inp.plane5.as_ref().map(plane_text),
            angle5: inp.angle5.as_ref().map(angle_text),
            s: inp.s.as_ref().map(vector_text),
        },
        matrix: matrix_text(&matrix),
        s: s.as_ref().map(vector_text),
        so_check: SoRecord {
            orthogonality_residual: so.orthogonality_residual.to_text(),
            determinant: so.determinant.to_text(),
            pass: so.pass,
        },
        verify_spin7: MembershipRecord {
            is_member: member.is_member,
            g_in_so7: member.g_in_so7,
            relation_failures: member
                .relation_failures
                .iter()
                .map(|&(i, j)| [i, j])
                .collect(),
            candidate_g: matrix_text(&member.candidate_g),
        },
    })
}

/// Evaluates one of the maps on exact inputs, in the configured backend.
pub fn eval_and_export(
    map: MapName,
    args: &MapArgs,
    config: &RunConfig,
) -> Result<EvalRecord, CliError> {
    config.validate()?;
    let inputs = Inputs::parse(map, args)?;
    match config.backend {
        Backend::Exact => evaluate(map, &inputs, config),
        Backend::Float => evaluate(map, &inputs.to_float(), config),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRecord {
    pub backend: Backend,
    pub plane: [Vec<String>; 2],
    pub w: Vec<String>,
    pub norm_w: String,
    pub labels: [&'static str; 8],
    pub frame: Vec<Vec<String>>,
    /// `products[i][j]` names `B_i·B_j`; products of two of `w, wx, wy, w(xy)`
    /// carry the factor `|w|²` unless it is 1.
    pub products: Vec<Vec<String>>,
}

fn table_for<S: ScalarText>(
    plane: &OrientedPlane<S>,
    w: Option<&Vector8<S>>,
    config: &RunConfig,
) -> Result<TableRecord, CliError> {
    let tol = config.tolerance();
    let err = |source| CliError::Map {
        map: "table",
        source,
    };
    let w = w.cloned().unwrap_or_else(|| choose_w(plane));
    let frame = basis_b(plane, &w, tol).map_err(err)?;
    let table = frame_table(&frame, tol).map_err(err)?;
    let unit = frame.norm_w().approx_eq(&S::one(), tol);
    let products = (0..8)
        .map(|i| {
            (0..8)
                .map(|j| {
                    let e = table.entries[i][j];
                    let sign = if e.sign < 0 { "-" } else { "+" };
                    let scale = if i >= 4 && j >= 4 && !unit {
                        "|w|²·"
                    } else {
                        ""
                    };
                    format!("{sign}{scale}{}", FRAME_LABELS[e.index])
                })
                .collect()
        })
        .collect();
    Ok(TableRecord {
        backend: config.backend,
        plane: plane_text(plane),
        w: vector_text(&w),
        norm_w: frame.norm_w().to_text(),
        labels: FRAME_LABELS,
        frame: frame.elements().iter().map(vector_text).collect(),
        products,
    })
}

/// The multiplication table of the frame built from `plane` and `w`.
pub fn frame_table_record(
    plane: &str,
    w: Option<&str>,
    config: &RunConfig,
) -> Result<TableRecord, CliError> {
    config.validate()?;
    let plane = parse_plane(plane)?;
    let w = w.map(parse_vector).transpose()?;
    match config.backend {
        Backend::Exact => table_for(&plane, w.as_ref(), config),
        Backend::Float => {
            let f = |x: &Rational| Scalar::to_f64(x);
            table_for(&plane.map(f), w.map(|v| v.map(f)).as_ref(), config)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FrameRecord {
    pub backend: Backend,
    pub seed: u64,
    pub subspace: SubspaceArg,
    pub plane: [Vec<String>; 2],
}

/// A random unit orthonormal pair from stream 0 of the configured seed.
pub fn gen_frame(subspace: SubspaceArg, config: &RunConfig) -> Result<FrameRecord, CliError> {
    config.validate()?;
    let mut s = Sampler::new(config.seed, 0);
    let plane = match config.backend {
        Backend::Exact => plane_text(&s.orthonormal_pair::<Rational>(subspace.into())),
        Backend::Float => plane_text(&s.orthonormal_pair::<f64>(subspace.into())),
    };
    Ok(FrameRecord {
        backend: config.backend,
        seed: config.seed,
        subspace,
        plane,
    })
}
