//! Point evaluation of displacements and stresses, and the nondimensional
//! scalings used to report results.

use std::str::FromStr;

use nalgebra::{DVector, Vector6};

use crate::assembly::{Element, PhysicalBasis, PlateModel};
use crate::error::{Error, Result};
use crate::nurbs::NurbsPatch;
use crate::scalar::{from_usize, lit, to_f64, Real};
use crate::theory::{strain_terms, Component};

/// Parametric coordinates of the physical point `(x, y)`.
pub fn locate<T: Real>(patch: &NurbsPatch<T>, x: T, y: T) -> Result<(T, T)> {
    let (u0, u1) = (patch.knot_u().first(), patch.knot_u().last());
    let (v0, v1) = (patch.knot_v().first(), patch.knot_v().last());
    let outside = || Error::OutsideDomain {
        x: to_f64(x),
        y: to_f64(y),
    };
    if !x.is_finite() || !y.is_finite() {
        return Err(outside());
    }

    // coarse sampling for a starting point
    let samples = 16;
    let mut best = (u0, v0, T::max_value().unwrap_or_else(T::one));
    let mut extent = T::zero();
    for j in 0..=samples {
        for i in 0..=samples {
            let xi = u0 + (u1 - u0) * from_usize::<T>(i) / from_usize::<T>(samples);
            let eta = v0 + (v1 - v0) * from_usize::<T>(j) / from_usize::<T>(samples);
            let p = patch.point(xi, eta)?;
            extent = extent.max(p[0].abs()).max(p[1].abs());
            let d = (p[0] - x) * (p[0] - x) + (p[1] - y) * (p[1] - y);
            if d < best.2 {
                best = (xi, eta, d);
            }
        }
    }
    let tol = lit::<T>(1e-12) * extent.max(T::one());
    let (mut xi, mut eta) = (best.0, best.1);
    for _ in 0..50 {
        let s = patch.eval(xi, eta)?;
        let (rx, ry) = (s.point[0] - x, s.point[1] - y);
        if (rx * rx + ry * ry).sqrt() <= tol {
            return Ok((xi, eta));
        }
        let [[a, b], [c, d]] = s.jacobian;
        let det = a * d - b * c;
        if det == T::zero() {
            break;
        }
        let dxi = (d * rx - b * ry) / det;
        let deta = (a * ry - c * rx) / det;
        xi = (xi - dxi).max(u0).min(u1);
        eta = (eta - deta).max(v0).min(v1);
    }
    Err(outside())
}

/// Element whose closed span pair contains `(xi, eta)`.
fn element_at<T: Real>(patch: &NurbsPatch<T>, xi: T, eta: T) -> Result<Element<T>> {
    let span = |kv: &crate::nurbs::KnotVector<T>, t: T| -> Result<crate::nurbs::Span<T>> {
        let i = kv.find_span(t)?;
        Ok(crate::nurbs::Span {
            index: i,
            lo: kv.knots()[i],
            hi: kv.knots()[i + 1],
        })
    };
    Ok(Element {
        u: span(patch.knot_u(), xi)?,
        v: span(patch.knot_v(), eta)?,
    })
}

/// Basis, element and in-plane fields at a physical point.
struct PointData<T: Real> {
    basis: PhysicalBasis<T>,
    element: Element<T>,
}

impl<T: Real> PointData<T> {
    fn new(model: &PlateModel<T>, x: T, y: T) -> Result<Self> {
        let (xi, eta) = locate(&model.patch, x, y)?;
        let element = element_at(&model.patch, xi, eta)?;
        let basis = PhysicalBasis::at(&model.patch, &element, xi, eta)?;
        Ok(Self { basis, element })
    }

    /// `sum_i g(R_i) q_{c, t, i}` for in-plane factor `g` (0 value, 1 d/dx, 2 d/dy).
    fn field(&self, model: &PlateModel<T>, q: &DVector<T>, c: Component, t: usize, g: usize) -> T {
        let b = &self.basis;
        let factors = match g {
            0 => &b.values,
            1 => &b.dx,
            _ => &b.dy,
        };
        b.indices
            .iter()
            .zip(factors)
            .fold(T::zero(), |acc, (&i, &f)| {
                acc + f * q[model.dofs().dof(i, c, t)]
            })
    }
}

fn check_z<T: Real>(model: &PlateModel<T>, z: T) -> Result<()> {
    let half = model.layup.thickness() * lit(0.5);
    if z.abs() > half * (T::one() + lit(1e-12)) {
        return Err(Error::Invalid(format!(
            "z = {} outside [-h/2, h/2]",
            to_f64(z)
        )));
    }
    Ok(())
}

fn check_len<T: Real>(model: &PlateModel<T>, q: &DVector<T>) -> Result<()> {
    if q.len() != model.dofs().len() {
        return Err(Error::Invalid(format!(
            "solution has {} entries, model expects {}",
            q.len(),
            model.dofs().len()
        )));
    }
    Ok(())
}

/// `(u, v, w)` at `(x, y, z)` from a full-length solution vector.
pub fn recover_displacement<T: Real>(
    model: &PlateModel<T>,
    q: &DVector<T>,
    x: T,
    y: T,
    z: T,
) -> Result<[T; 3]> {
    check_len(model, q)?;
    check_z(model, z)?;
    let pd = PointData::new(model, x, y)?;
    let mut out = [T::zero(); 3];
    for c in Component::ALL {
        for (t, f) in model.expansion.functions(c).iter().enumerate() {
            out[c.index()] += f.value(z) * pd.field(model, q, c, t, 0);
        }
    }
    Ok(out)
}

/// Engineering strains `(xx, yy, xy, xz, yz, zz)` at `(x, y, z)`.
pub fn recover_strain<T: Real>(
    model: &PlateModel<T>,
    q: &DVector<T>,
    x: T,
    y: T,
    z: T,
) -> Result<Vector6<T>> {
    check_len(model, q)?;
    check_z(model, z)?;
    let pd = PointData::new(model, x, y)?;
    Ok(strain_at(model, q, &pd, z))
}

fn strain_at<T: Real>(
    model: &PlateModel<T>,
    q: &DVector<T>,
    pd: &PointData<T>,
    z: T,
) -> Vector6<T> {
    let mut eps = Vector6::zeros();
    for c in Component::ALL {
        for (t, f) in model.expansion.functions(c).iter().enumerate() {
            for term in strain_terms(c) {
                let fz = f.eval(z, term.dz);
                if fz != T::zero() {
                    eps[term.strain] += fz * pd.field(model, q, c, t, term.inplane as usize);
                }
            }
        }
    }
    eps
}

/// Stresses `(xx, yy, xy, xz, yz, zz)` at `(x, y, z)`, evaluated
/// constitutively in the layer chosen by [`crate::laminate::Layup::layer_at`]
/// (at an interface, the layer nearer the midplane). Transverse-shear moduli
/// carry the stabilization factor of the containing element, matching the
/// stiffness used in the solve.
pub fn recover_stress<T: Real>(
    model: &PlateModel<T>,
    q: &DVector<T>,
    x: T,
    y: T,
    z: T,
) -> Result<Vector6<T>> {
    check_z(model, z)?;
    let layer = model.layup.layer_at(z)?;
    recover_stress_in_layer(model, q, x, y, z, layer)
}

/// As [`recover_stress`] but with the layer given explicitly, to evaluate
/// either side of an interface.
pub fn recover_stress_in_layer<T: Real>(
    model: &PlateModel<T>,
    q: &DVector<T>,
    x: T,
    y: T,
    z: T,
    layer: usize,
) -> Result<Vector6<T>> {
    check_len(model, q)?;
    check_z(model, z)?;
    let zs = model.layup.interfaces();
    if layer >= model.layup.num_layers() {
        return Err(Error::Index(format!(
            "layer {layer} of {}",
            model.layup.num_layers()
        )));
    }
    let tol = model.layup.thickness() * lit(1e-12);
    if z < zs[layer] - tol || z > zs[layer + 1] + tol {
        return Err(Error::Invalid(format!(
            "z = {} is not in layer {layer}",
            to_f64(z)
        )));
    }
    let pd = PointData::new(model, x, y)?;
    let eps = strain_at(model, q, &pd, z);
    let factor = model.shear_factor(&pd.element)?;
    let c = model.blocks()[layer].with_shear_scaled(factor).full();
    Ok(c * eps)
}

/// Reported quantity classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantity {
    /// `w 100 h^3 E2 / (P a^4)`
    Deflection,
    /// `sigma h^2 / (P a^2)`
    NormalStress,
    /// `tau h / (P a)`
    ShearStress,
    /// `omega a^2 / h sqrt(rho / E2)`
    Frequency,
}

impl FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "w" | "deflection" => Ok(Self::Deflection),
            "sxx" | "syy" | "sigma" | "normal-stress" => Ok(Self::NormalStress),
            "txz" | "tau" | "shear-stress" => Ok(Self::ShearStress),
            "omega" | "frequency" => Ok(Self::Frequency),
            other => Err(Error::Invalid(format!("unknown quantity '{other}'"))),
        }
    }
}

/// Reference scales of a nondimensionalization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scales<T> {
    pub a: T,
    pub h: T,
    pub e2: T,
    /// Load amplitude (static quantities).
    pub p0: T,
    /// Density (frequencies).
    pub rho: T,
}

impl<T: Real> Scales<T> {
    fn factor(&self, kind: Quantity) -> T {
        let Self { a, h, e2, p0, rho } = *self;
        match kind {
            Quantity::Deflection => lit::<T>(100.0) * h * h * h * e2 / (p0 * a * a * a * a),
            Quantity::NormalStress => h * h / (p0 * a * a),
            Quantity::ShearStress => h / (p0 * a),
            Quantity::Frequency => a * a / h * (rho / e2).sqrt(),
        }
    }
}

pub fn nondimensionalize<T: Real>(raw: T, kind: Quantity, scales: &Scales<T>) -> T {
    raw * scales.factor(kind)
}

pub fn dimensionalize<T: Real>(value: T, kind: Quantity, scales: &Scales<T>) -> T {
    value / scales.factor(kind)
}
