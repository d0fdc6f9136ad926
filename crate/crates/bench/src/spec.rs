//! JSON case description and its translation into a plate model.

use std::f64::consts::PI;

use cuf_iga::assembly::{AssemblyOptions, BoundaryKind, DEFAULT_ALPHA};
use cuf_iga::laminate::{Lamina, Layup};
use cuf_iga::nurbs::{make_circle_patch, make_square_patch, Direction, NurbsPatch, CIRCLE_RADIUS};
use cuf_iga::theory::ThicknessExpansion;
use serde::{Deserialize, Serialize};

use crate::BenchError;

/// One benchmark run: geometry, stack, discretization, analysis and the
/// quantities to report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseSpec {
    pub name: String,
    /// Result group, e.g. `table2`; cases of one group share an output table.
    pub table: String,
    /// Row and column of this case in the group's table.
    pub row: String,
    pub column: String,
    pub geometry: Geometry,
    /// `a / h` for squares, `R / h` for circles.
    pub length_to_thickness: f64,
    /// Ply angles in degrees from bottom to top, equal ply thicknesses.
    pub angles_deg: Vec<f64>,
    pub material: MaterialSpec,
    #[serde(default)]
    pub nu_completion: NuCompletion,
    #[serde(default)]
    pub theory: Theory,
    pub degree: usize,
    /// Elements per direction.
    pub mesh: usize,
    pub analysis: Analysis,
    pub boundary: Boundary,
    #[serde(default)]
    pub stabilization: Stabilization,
    pub outputs: Vec<OutputSpec>,
    #[serde(default)]
    pub references: Vec<Reference>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub enum Geometry {
    Square {
        a: f64,
    },
    /// The exact quadratic circle of radius 0.5 refined to the requested
    /// degree and mesh.
    Circle,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum MaterialSpec {
    /// `E1 = 25 E2`, `G12 = G13 = 0.5 E2`, `G23 = 0.2 E2`, `nu12 = 0.25`, `E2 = 1`.
    Pagano,
    /// The GPa three-layer material: `E1 = 132.38`, `E2 = E3 = 10.756`,
    /// `G12 = 3.606`, `G13 = G23 = 5.6537`, `nu12 = nu13 = 0.24`, `nu23 = 0.49`.
    CarreraGpa,
    /// `E1 = ratio E2`, `G12 = G13 = 0.6 E2`, `G23 = 0.5 E2`, `nu12 = 0.25`, `E2 = rho = 1`.
    Vibration { e1_over_e2: f64 },
    Custom {
        e1: f64,
        e2: f64,
        e3: f64,
        g12: f64,
        g13: f64,
        g23: f64,
        nu12: f64,
        nu13: f64,
        nu23: f64,
        rho: f64,
    },
}

/// Overrides for Poisson ratios a table leaves unstated (the named
/// materials default to `nu13 = nu23 = nu12`).
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NuCompletion {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu13: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu23: Option<f64>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theory {
    #[default]
    SinusW2,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub enum Analysis {
    /// Sinusoidal pressure of amplitude `p0` acting at `z = load_z_over_h * h`.
    Static {
        p0: f64,
        #[serde(default)]
        load_z_over_h: f64,
    },
    Modes {
        count: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Boundary {
    SimplySupported,
    Clamped,
}

impl From<Boundary> for BoundaryKind {
    fn from(b: Boundary) -> Self {
        match b {
            Boundary::SimplySupported => BoundaryKind::SimplySupported,
            Boundary::Clamped => BoundaryKind::Clamped,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Stabilization {
    pub enabled: bool,
    pub alpha: f64,
}

impl Default for Stabilization {
    fn default() -> Self {
        Self {
            enabled: true,
            alpha: DEFAULT_ALPHA,
        }
    }
}

/// Length entering the frequency scaling of a circular plate.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CircleLength {
    #[default]
    Diameter,
    Radius,
}

/// A reported quantity. Points are relative: `x / L`, `y / L`, `z / h` with
/// `L` the side (origin at a corner) or the radius (origin at the center).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSpec {
    pub label: String,
    pub quantity: OutputQuantity,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum OutputQuantity {
    /// Nondimensional transverse displacement.
    Deflection { at: [f64; 3] },
    /// Nondimensional stress component.
    Stress {
        component: StressComponent,
        at: [f64; 3],
    },
    /// Nondimensional frequency of mode `mode` (1-based), counted among the
    /// modes of `family`.
    Frequency {
        mode: usize,
        #[serde(default)]
        circle_length: CircleLength,
        #[serde(default)]
        family: ModeFamily,
    },
}

/// Which modes a frequency output counts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModeFamily {
    /// Every mode in ascending order.
    #[default]
    Any,
    /// Modes whose kinetic energy is mostly transverse. Thick simply
    /// supported plates have in-plane and thickness-shear modes below the
    /// first bending mode.
    Flexural,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StressComponent {
    Sxx,
    Syy,
    Txy,
    Txz,
    Tyz,
    Szz,
}

impl StressComponent {
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn is_shear(self) -> bool {
        matches!(self, Self::Txz | Self::Tyz)
    }
}

/// Quantity classes with their own tolerances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuantityClass {
    Deflection,
    NormalStress,
    ShearStress,
    Frequency,
}

impl OutputQuantity {
    pub fn class(&self) -> QuantityClass {
        match self {
            Self::Deflection { .. } => QuantityClass::Deflection,
            Self::Stress { component, .. } if component.is_shear() => QuantityClass::ShearStress,
            Self::Stress { .. } => QuantityClass::NormalStress,
            Self::Frequency { .. } => QuantityClass::Frequency,
        }
    }
}

/// A published value for one output. `value: null` marks a dash entry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Reference {
    pub output: String,
    pub value: Option<f64>,
    pub citation: String,
    /// Only target references are compared; the rest are context columns.
    #[serde(default = "yes")]
    pub target: bool,
    /// Relative tolerance overriding the class default of the `paper` profile.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn yes() -> bool {
    true
}

impl MaterialSpec {
    pub fn lamina(&self, nu: NuCompletion) -> Lamina<f64> {
        let mut lam = match *self {
            Self::Pagano => Lamina::transversely_isotropic(25.0, 1.0, 0.5, 0.5, 0.2, 0.25, 1.0),
            Self::CarreraGpa => Lamina {
                e1: 132.38e9,
                e2: 10.756e9,
                e3: 10.756e9,
                g12: 3.606e9,
                g13: 5.6537e9,
                g23: 5.6537e9,
                nu12: 0.24,
                nu13: 0.24,
                nu23: 0.49,
                rho: 1.0,
            },
            Self::Vibration { e1_over_e2 } => {
                Lamina::transversely_isotropic(e1_over_e2, 1.0, 0.6, 0.6, 0.5, 0.25, 1.0)
            }
            Self::Custom {
                e1,
                e2,
                e3,
                g12,
                g13,
                g23,
                nu12,
                nu13,
                nu23,
                rho,
            } => Lamina {
                e1,
                e2,
                e3,
                g12,
                g13,
                g23,
                nu12,
                nu13,
                nu23,
                rho,
            },
        };
        if let Some(v) = nu.nu13 {
            lam.nu13 = v;
        }
        if let Some(v) = nu.nu23 {
            lam.nu23 = v;
        }
        lam
    }
}

impl CaseSpec {
    pub fn from_json(text: &str) -> Result<Self, BenchError> {
        let spec: Self = serde_json::from_str(text).map_err(|e| BenchError::Spec(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("case specs always serialize")
    }

    /// Characteristic length: side of the square or radius of the circle.
    pub fn length(&self) -> f64 {
        match self.geometry {
            Geometry::Square { a } => a,
            Geometry::Circle => CIRCLE_RADIUS,
        }
    }

    pub fn thickness(&self) -> f64 {
        self.length() / self.length_to_thickness
    }

    pub fn validate(&self) -> Result<(), BenchError> {
        let bad = |msg: String| Err(BenchError::Spec(format!("case '{}': {msg}", self.name)));
        if self.name.trim().is_empty() {
            return Err(BenchError::Spec("case name is empty".into()));
        }
        if !(self.length_to_thickness > 0.0) || !(self.length() > 0.0) {
            return bad("length and thickness ratio must be positive".into());
        }
        if self.angles_deg.is_empty() {
            return bad("at least one ply is required".into());
        }
        if self.degree < 1 || self.mesh < 1 {
            return bad(format!(
                "degree {} / mesh {} must be at least 1",
                self.degree, self.mesh
            ));
        }
        if let Geometry::Circle = self.geometry {
            if self.degree < 2 {
                return bad("the circle needs degree 2 or more".into());
            }
            if let Analysis::Static { .. } = self.analysis {
                return bad("the sinusoidal load is defined on the square only".into());
            }
        }
        if let Analysis::Modes { count } = self.analysis {
            if count == 0 {
                return bad("mode count must be positive".into());
            }
        }
        if self.stabilization.enabled && !(0.05..=0.15).contains(&self.stabilization.alpha) {
            return bad(format!(
                "alpha {} outside [0.05, 0.15]",
                self.stabilization.alpha
            ));
        }
        let mut labels = std::collections::BTreeSet::new();
        for out in &self.outputs {
            if !labels.insert(out.label.as_str()) {
                return bad(format!("duplicate output '{}'", out.label));
            }
            match (&out.quantity, &self.analysis) {
                (OutputQuantity::Frequency { mode, .. }, Analysis::Modes { count }) => {
                    if *mode == 0 || mode > count {
                        return bad(format!(
                            "output '{}' asks for mode {mode} of {count}",
                            out.label
                        ));
                    }
                }
                (OutputQuantity::Frequency { .. }, _) => {
                    return bad(format!("output '{}' needs a modal analysis", out.label));
                }
                (
                    OutputQuantity::Deflection { at } | OutputQuantity::Stress { at, .. },
                    Analysis::Static { .. },
                ) => {
                    self.check_point(*at)
                        .or_else(|m| bad(format!("output '{}': {m}", out.label)))?;
                }
                _ => return bad(format!("output '{}' needs a static analysis", out.label)),
            }
        }
        for r in &self.references {
            if !labels.contains(r.output.as_str()) {
                return bad(format!("reference to unknown output '{}'", r.output));
            }
        }
        // the material must be admissible
        cuf_iga::laminate::stiffness_3d(&self.material.lamina(self.nu_completion))
            .map_err(|e| BenchError::Spec(format!("case '{}': {e}", self.name)))?;
        Ok(())
    }

    fn check_point(&self, at: [f64; 3]) -> Result<(), String> {
        let eps = 1e-12;
        if at[2].abs() > 0.5 + eps {
            return Err(format!("z/h = {} outside [-0.5, 0.5]", at[2]));
        }
        let inside = match self.geometry {
            Geometry::Square { .. } => (0.0..=1.0).contains(&at[0]) && (0.0..=1.0).contains(&at[1]),
            Geometry::Circle => at[0] * at[0] + at[1] * at[1] <= 1.0 + eps,
        };
        if inside {
            Ok(())
        } else {
            Err(format!("point ({}, {}) outside the plate", at[0], at[1]))
        }
    }

    /// Physical coordinates of a relative point.
    pub fn point(&self, at: [f64; 3]) -> [f64; 3] {
        let l = self.length();
        [at[0] * l, at[1] * l, at[2] * self.thickness()]
    }

    pub fn patch(&self) -> Result<NurbsPatch<f64>, BenchError> {
        let patch = match self.geometry {
            Geometry::Square { a } => make_square_patch(a, self.degree, self.mesh)?,
            Geometry::Circle => {
                let base = make_circle_patch::<f64>();
                let up = self.degree - base.knot_u().degree();
                base.elevate_degree(Direction::U, up)?
                    .elevate_degree(Direction::V, up)?
                    .refine_uniform(self.mesh)?
            }
        };
        Ok(patch)
    }

    pub fn layup(&self) -> Result<Layup<f64>, BenchError> {
        let angles: Vec<f64> = self.angles_deg.iter().map(|d| d * PI / 180.0).collect();
        Ok(Layup::equal_plies(
            self.material.lamina(self.nu_completion),
            &angles,
            self.thickness(),
        )?)
    }

    pub fn expansion(&self) -> Result<ThicknessExpansion<f64>, BenchError> {
        match self.theory {
            Theory::SinusW2 => Ok(ThicknessExpansion::sinus_w2(self.thickness())?),
        }
    }

    pub fn assembly_options(&self) -> AssemblyOptions<f64> {
        AssemblyOptions {
            alpha: self
                .stabilization
                .enabled
                .then_some(self.stabilization.alpha),
            ..Default::default()
        }
    }
}
