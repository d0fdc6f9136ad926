//! Executes a case through the full pipeline.

use std::time::Instant;

use cuf_iga::assembly::{apply_boundary, BoundaryKind, Load, PlateModel};
use cuf_iga::post::{nondimensionalize, recover_displacement, recover_stress, Quantity, Scales};
use cuf_iga::solve::{solve_modes, solve_static};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::spec::{
    Analysis, CaseSpec, CircleLength, Geometry, ModeFamily, OutputQuantity, QuantityClass,
    Reference,
};
use crate::BenchError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputValue {
    pub label: String,
    pub class: QuantityClass,
    pub value: f64,
}

/// Conventions a reader needs to interpret the numbers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    pub theory: String,
    pub degree: usize,
    pub mesh: usize,
    pub free_unknowns: usize,
    pub boundary: String,
    pub interface_side: String,
    pub alpha: Option<f64>,
    pub load_z_over_h: Option<f64>,
    pub frequency_length: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseResult {
    pub name: String,
    pub table: String,
    pub row: String,
    pub column: String,
    pub outputs: Vec<OutputValue>,
    pub references: Vec<Reference>,
    pub metadata: Metadata,
    pub runtime_seconds: f64,
}

impl CaseResult {
    pub fn output(&self, label: &str) -> Option<f64> {
        self.outputs
            .iter()
            .find(|o| o.label == label)
            .map(|o| o.value)
    }
}

const SS_CONVENTION: &str =
    "simply supported: v and w families fixed on x = 0, a; u and w families fixed on y = 0, a";
const CLAMPED_CONVENTION: &str = "clamped: all families fixed on every boundary control point";
const INTERFACE_SIDE: &str = "layer nearer the midplane";

fn context(spec: &CaseSpec) -> impl Fn(cuf_iga::Error) -> BenchError + '_ {
    move |e| BenchError::Case {
        case: spec.name.clone(),
        source: e,
    }
}

/// Highest flexural mode number asked for by any output.
fn flexural_wanted(spec: &CaseSpec) -> usize {
    spec.outputs
        .iter()
        .filter_map(|o| match o.quantity {
            OutputQuantity::Frequency {
                mode,
                family: ModeFamily::Flexural,
                ..
            } => Some(mode),
            _ => None,
        })
        .max()
        .unwrap_or(0)
}

/// Runs one case. Identical specs give bitwise-identical outputs.
pub fn run_case(spec: &CaseSpec) -> Result<CaseResult, BenchError> {
    spec.validate()?;
    let start = Instant::now();
    let ctx = context(spec);
    let model = PlateModel::new(
        spec.patch()?,
        spec.layup()?,
        spec.expansion()?,
        spec.assembly_options(),
    )
    .map_err(&ctx)?;
    let lamina = spec.material.lamina(spec.nu_completion);
    let h = spec.thickness();
    let kind: BoundaryKind = spec.boundary.into();

    let mut outputs = Vec::with_capacity(spec.outputs.len());
    let (free, load_z_over_h, frequency_length) = match spec.analysis {
        Analysis::Static { p0, load_z_over_h } => {
            let a = spec.length();
            let load = Load::Sinusoidal {
                amplitude: p0,
                a,
                b: a,
            };
            let sys = model
                .assemble(Some((&load, load_z_over_h * h)))
                .map_err(&ctx)?;
            let constrained = apply_boundary(&sys, kind, &model.patch).map_err(&ctx)?;
            let q = solve_static(&constrained).map_err(&ctx)?.displacement;
            let scales = Scales {
                a,
                h,
                e2: lamina.e2,
                p0,
                rho: lamina.rho,
            };
            for out in &spec.outputs {
                let value = match out.quantity {
                    OutputQuantity::Deflection { at } => {
                        let [x, y, z] = spec.point(at);
                        let w = recover_displacement(&model, &q, x, y, z).map_err(&ctx)?[2];
                        nondimensionalize(w, Quantity::Deflection, &scales)
                    }
                    OutputQuantity::Stress { component, at } => {
                        let [x, y, z] = spec.point(at);
                        let s =
                            recover_stress(&model, &q, x, y, z).map_err(&ctx)?[component.index()];
                        let kind = if component.is_shear() {
                            Quantity::ShearStress
                        } else {
                            Quantity::NormalStress
                        };
                        nondimensionalize(s, kind, &scales)
                    }
                    OutputQuantity::Frequency { .. } => unreachable!("validated"),
                };
                outputs.push(OutputValue {
                    label: out.label.clone(),
                    class: out.quantity.class(),
                    value,
                });
            }
            (constrained.len(), Some(load_z_over_h), None)
        }
        Analysis::Modes { count } => {
            let sys = model.assemble(None).map_err(&ctx)?;
            let constrained = apply_boundary(&sys, kind, &model.patch).map_err(&ctx)?;
            let wanted = flexural_wanted(spec);
            // extraction redoes the dense eigensolve, so ask for a margin up front
            let mut extract = count.max(4 * wanted + 4).min(constrained.len());
            let (modes, flexural) = loop {
                let modes = solve_modes(&constrained, extract).map_err(&ctx)?;
                let flexural: Vec<usize> = (0..extract)
                    .filter(|&i| modes.is_flexural(&constrained, i))
                    .collect();
                if flexural.len() >= wanted || extract == constrained.len() {
                    break (modes, flexural);
                }
                extract = (2 * extract).min(constrained.len());
            };
            let omega = modes.frequencies();
            let mut length_used = None;
            for out in &spec.outputs {
                let OutputQuantity::Frequency {
                    mode,
                    circle_length,
                    family,
                } = out.quantity
                else {
                    unreachable!("validated")
                };
                let index = match family {
                    ModeFamily::Any => mode - 1,
                    ModeFamily::Flexural => *flexural.get(mode - 1).ok_or_else(|| {
                        BenchError::Spec(format!(
                            "case '{}': only {} flexural modes among all {extract}",
                            spec.name,
                            flexural.len()
                        ))
                    })?,
                };
                let a = match (spec.geometry, circle_length) {
                    (Geometry::Square { a }, _) => a,
                    (Geometry::Circle, CircleLength::Diameter) => {
                        length_used = Some("diameter".to_string());
                        2.0 * spec.length()
                    }
                    (Geometry::Circle, CircleLength::Radius) => {
                        length_used = Some("radius".to_string());
                        spec.length()
                    }
                };
                let scales = Scales {
                    a,
                    h,
                    e2: lamina.e2,
                    p0: 1.0,
                    rho: lamina.rho,
                };
                let value = nondimensionalize(omega[index], Quantity::Frequency, &scales);
                outputs.push(OutputValue {
                    label: out.label.clone(),
                    class: out.quantity.class(),
                    value,
                });
            }
            (constrained.len(), None, length_used)
        }
    };
    let metadata = Metadata {
        theory: "sinus-w2".into(),
        degree: spec.degree,
        mesh: spec.mesh,
        free_unknowns: free,
        boundary: match kind {
            BoundaryKind::Clamped => CLAMPED_CONVENTION.into(),
            _ => SS_CONVENTION.into(),
        },
        interface_side: INTERFACE_SIDE.into(),
        alpha: spec.assembly_options().alpha,
        load_z_over_h,
        frequency_length,
    };
    Ok(CaseResult {
        name: spec.name.clone(),
        table: spec.table.clone(),
        row: spec.row.clone(),
        column: spec.column.clone(),
        outputs,
        references: spec.references.clone(),
        metadata,
        runtime_seconds: start.elapsed().as_secs_f64(),
    })
}

/// Runs cases in parallel; results keep the input order.
pub fn run_cases(specs: &[CaseSpec]) -> Vec<Result<CaseResult, BenchError>> {
    specs.par_iter().map(run_case).collect()
}
