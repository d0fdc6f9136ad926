//! Orthotropic laminae, stacking sequences and the rotated constitutive
//! blocks used by the plate kinematics.
//!
//! Strain and stress components are ordered `(xx, yy, xy | xz, yz, zz)`
//! everywhere: the first three are the in-plane group, the last three the
//! out-of-plane group, so the 3x3 block partition is index-literal.

use nalgebra::{Matrix3, Matrix6};

use crate::error::{Error, Result};
use crate::scalar::{lit, to_f64, Real};

pub const XX: usize = 0;
pub const YY: usize = 1;
pub const XY: usize = 2;
pub const XZ: usize = 3;
pub const YZ: usize = 4;
pub const ZZ: usize = 5;

/// Engineering constants of an orthotropic ply in its material axes
/// (1 = fibre, 2 = transverse in-plane, 3 = thickness).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lamina<T> {
    pub e1: T,
    pub e2: T,
    pub e3: T,
    pub g12: T,
    pub g13: T,
    pub g23: T,
    pub nu12: T,
    pub nu13: T,
    pub nu23: T,
    pub rho: T,
}

impl<T: Real> Lamina<T> {
    /// Transversely isotropic completion: `E3 = E2`, `nu13 = nu23 = nu12`.
    #[allow(clippy::too_many_arguments)]
    pub fn transversely_isotropic(e1: T, e2: T, g12: T, g13: T, g23: T, nu12: T, rho: T) -> Self {
        Self {
            e1,
            e2,
            e3: e2,
            g12,
            g13,
            g23,
            nu12,
            nu13: nu12,
            nu23: nu12,
            rho,
        }
    }

    pub fn isotropic(e: T, nu: T, rho: T) -> Self {
        let g = e / (lit::<T>(2.0) * (T::one() + nu));
        Self {
            e1: e,
            e2: e,
            e3: e,
            g12: g,
            g13: g,
            g23: g,
            nu12: nu,
            nu13: nu,
            nu23: nu,
            rho,
        }
    }

    fn validate(&self) -> Result<()> {
        let moduli = [
            ("E1", self.e1),
            ("E2", self.e2),
            ("E3", self.e3),
            ("G12", self.g12),
            ("G13", self.g13),
            ("G23", self.g23),
            ("rho", self.rho),
        ];
        for (name, v) in moduli {
            if !(v > T::zero()) || !v.is_finite() {
                return Err(Error::Material(format!(
                    "{name} must be positive, got {}",
                    to_f64(v)
                )));
            }
        }
        Ok(())
    }

    fn describe(&self) -> String {
        format!(
            "E1={} E2={} E3={} nu12={} nu13={} nu23={}",
            to_f64(self.e1),
            to_f64(self.e2),
            to_f64(self.e3),
            to_f64(self.nu12),
            to_f64(self.nu13),
            to_f64(self.nu23)
        )
    }
}

/// Material stiffness of a lamina in its own axes, ordered
/// `(11, 22, 12 | 13, 23, 33)`.
///
/// Closed-form inverse of the orthotropic compliance; fails if the constants
/// do not give a positive definite matrix.
pub fn stiffness_3d<T: Real>(lamina: &Lamina<T>) -> Result<Matrix6<T>> {
    lamina.validate()?;
    let Lamina {
        e1,
        e2,
        e3,
        g12,
        g13,
        g23,
        nu12,
        nu13,
        nu23,
        ..
    } = *lamina;
    let nu21 = nu12 * e2 / e1;
    let nu31 = nu13 * e3 / e1;
    let nu32 = nu23 * e3 / e2;
    let two = lit::<T>(2.0);
    let delta = T::one() - nu12 * nu21 - nu23 * nu32 - nu13 * nu31 - two * nu21 * nu32 * nu13;
    if !(delta > T::zero()) {
        return Err(Error::Material(format!(
            "Poisson ratios give a non-positive-definite stiffness ({})",
            lamina.describe()
        )));
    }
    let c11 = e1 * (T::one() - nu23 * nu32) / delta;
    let c22 = e2 * (T::one() - nu13 * nu31) / delta;
    let c33 = e3 * (T::one() - nu12 * nu21) / delta;
    let c12 = e1 * (nu21 + nu31 * nu23) / delta;
    let c13 = e1 * (nu31 + nu21 * nu32) / delta;
    let c23 = e2 * (nu32 + nu12 * nu31) / delta;

    let mut c = Matrix6::<T>::zeros();
    c[(XX, XX)] = c11;
    c[(YY, YY)] = c22;
    c[(ZZ, ZZ)] = c33;
    c[(XX, YY)] = c12;
    c[(YY, XX)] = c12;
    c[(XX, ZZ)] = c13;
    c[(ZZ, XX)] = c13;
    c[(YY, ZZ)] = c23;
    c[(ZZ, YY)] = c23;
    c[(XY, XY)] = g12;
    c[(XZ, XZ)] = g13;
    c[(YZ, YZ)] = g23;
    if c.cholesky().is_none() {
        return Err(Error::Material(format!(
            "constants do not give a positive definite stiffness ({})",
            lamina.describe()
        )));
    }
    Ok(c)
}

/// Maps laminate-axis engineering strains to material-axis strains for a ply
/// whose fibre makes angle `theta` with the x axis.
pub fn strain_rotation<T: Real>(theta: T) -> Matrix6<T> {
    let (n, m) = theta.sin_cos();
    let two = lit::<T>(2.0);
    let mut t = Matrix6::<T>::zeros();
    t[(XX, XX)] = m * m;
    t[(XX, YY)] = n * n;
    t[(XX, XY)] = m * n;
    t[(YY, XX)] = n * n;
    t[(YY, YY)] = m * m;
    t[(YY, XY)] = -m * n;
    t[(XY, XX)] = -two * m * n;
    t[(XY, YY)] = two * m * n;
    t[(XY, XY)] = m * m - n * n;
    t[(XZ, XZ)] = m;
    t[(XZ, YZ)] = n;
    t[(YZ, XZ)] = -n;
    t[(YZ, YZ)] = m;
    t[(ZZ, ZZ)] = T::one();
    t
}

/// The four 3x3 blocks of a stiffness in laminate axes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstitutiveBlocks<T: Real> {
    pub cpp: Matrix3<T>,
    pub cpn: Matrix3<T>,
    pub cnp: Matrix3<T>,
    pub cnn: Matrix3<T>,
}

impl<T: Real> ConstitutiveBlocks<T> {
    pub fn from_full(c: &Matrix6<T>) -> Self {
        Self {
            cpp: c.fixed_view::<3, 3>(0, 0).into_owned(),
            cpn: c.fixed_view::<3, 3>(0, 3).into_owned(),
            cnp: c.fixed_view::<3, 3>(3, 0).into_owned(),
            cnn: c.fixed_view::<3, 3>(3, 3).into_owned(),
        }
    }

    pub fn full(&self) -> Matrix6<T> {
        let mut c = Matrix6::zeros();
        c.fixed_view_mut::<3, 3>(0, 0).copy_from(&self.cpp);
        c.fixed_view_mut::<3, 3>(0, 3).copy_from(&self.cpn);
        c.fixed_view_mut::<3, 3>(3, 0).copy_from(&self.cnp);
        c.fixed_view_mut::<3, 3>(3, 3).copy_from(&self.cnn);
        c
    }

    /// Copy with the transverse-shear sub-block (C55, C45, C44) scaled.
    pub fn with_shear_scaled(&self, factor: T) -> Self {
        let mut out = *self;
        for i in 0..2 {
            for j in 0..2 {
                out.cnn[(i, j)] *= factor;
            }
        }
        out
    }
}

/// Rotates a material stiffness into laminate axes and splits it into
/// in-plane / out-of-plane blocks.
pub fn rotate_to_laminate<T: Real>(c: &Matrix6<T>, theta: T) -> ConstitutiveBlocks<T> {
    let t = strain_rotation(theta);
    let rotated = t.transpose() * c * t;
    // exact symmetry, independent of rounding in the triple product
    let sym = (rotated + rotated.transpose()) * lit::<T>(0.5);
    ConstitutiveBlocks::from_full(&sym)
}

/// One ply of a stack.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ply<T> {
    pub lamina: Lamina<T>,
    /// Fibre angle from the x axis, radians.
    pub angle: T,
    /// Share of the total thickness.
    pub fraction: T,
}

/// Ordered stack of plies from the bottom face `z = -h/2` upwards.
#[derive(Debug, Clone, PartialEq)]
pub struct Layup<T> {
    plies: Vec<Ply<T>>,
    thickness: T,
    interfaces: Vec<T>,
}

impl<T: Real> Layup<T> {
    pub fn new(plies: Vec<Ply<T>>, thickness: T) -> Result<Self> {
        if plies.is_empty() {
            return Err(Error::Layup("at least one ply is required".into()));
        }
        if !(thickness > T::zero()) {
            return Err(Error::Layup(format!(
                "thickness must be positive, got {}",
                to_f64(thickness)
            )));
        }
        if plies.iter().any(|p| !(p.fraction > T::zero())) {
            return Err(Error::Layup(
                "ply thickness fractions must be positive".into(),
            ));
        }
        let total = plies.iter().fold(T::zero(), |a, p| a + p.fraction);
        if (total - T::one()).abs() > lit(1e-12) {
            return Err(Error::Layup(format!(
                "thickness fractions sum to {}, not 1",
                to_f64(total)
            )));
        }
        let half = thickness * lit(0.5);
        let mut interfaces = vec![-half];
        let mut acc = T::zero();
        for p in &plies[..plies.len() - 1] {
            acc += p.fraction;
            interfaces.push(-half + acc * thickness);
        }
        interfaces.push(half);
        if interfaces.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::Layup("interface coordinates must increase".into()));
        }
        Ok(Self {
            plies,
            thickness,
            interfaces,
        })
    }

    /// Equally thick plies of one material with the given angles.
    pub fn equal_plies(lamina: Lamina<T>, angles: &[T], thickness: T) -> Result<Self> {
        let n = T::from_usize(angles.len().max(1)).expect("ply count");
        let fraction = T::one() / n;
        let plies = angles
            .iter()
            .map(|&angle| Ply {
                lamina,
                angle,
                fraction,
            })
            .collect();
        Self::new(plies, thickness)
    }

    pub fn plies(&self) -> &[Ply<T>] {
        &self.plies
    }

    pub fn num_layers(&self) -> usize {
        self.plies.len()
    }

    pub fn thickness(&self) -> T {
        self.thickness
    }

    /// `z_0 = -h/2 < z_1 < ... < z_N = h/2`.
    pub fn interfaces(&self) -> &[T] {
        &self.interfaces
    }

    /// Laminate-axis blocks of every ply.
    pub fn blocks(&self) -> Result<Vec<ConstitutiveBlocks<T>>> {
        self.plies
            .iter()
            .map(|p| Ok(rotate_to_laminate(&stiffness_3d(&p.lamina)?, p.angle)))
            .collect()
    }

    /// Layer containing `z`. On an interface the layer nearer the midplane
    /// wins; at `z = 0` on an interface the lower layer is taken.
    pub fn layer_at(&self, z: T) -> Result<usize> {
        let tol = self.thickness * lit(1e-12);
        let zs = &self.interfaces;
        if z < zs[0] - tol || z > zs[zs.len() - 1] + tol {
            return Err(Error::Invalid(format!(
                "z = {} outside the laminate [{}, {}]",
                to_f64(z),
                to_f64(zs[0]),
                to_f64(zs[zs.len() - 1])
            )));
        }
        for k in 1..zs.len() - 1 {
            if (z - zs[k]).abs() <= tol {
                // interface between layers k-1 (below) and k (above)
                return Ok(if zs[k] > T::zero() {
                    k - 1
                } else if zs[k] < T::zero() {
                    k
                } else {
                    k - 1
                });
            }
        }
        let k = zs
            .windows(2)
            .position(|w| z >= w[0] && z <= w[1])
            .unwrap_or(0);
        Ok(k.min(self.plies.len() - 1))
    }
}
