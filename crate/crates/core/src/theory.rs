//! Thickness expansions of the unified plate kinematics, thickness integrals
//! and the fundamental nuclei of the stiffness and mass operators.
//!
//! Each displacement component `c` in `{u, v, w}` is expanded as
//! `c(x, y, z) = sum_t F_t^c(z) c_t(x, y)`, with its own list of thickness
//! functions.

use nalgebra::Matrix3;

use crate::error::{Error, Result};
use crate::laminate::{ConstitutiveBlocks, Layup, XX, XY, XZ, YY, YZ, ZZ};
use crate::quadrature::gauss_on_interval;
use crate::scalar::{lit, Real};

/// Displacement component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Component {
    U = 0,
    V = 1,
    W = 2,
}

impl Component {
    pub const ALL: [Component; 3] = [Component::U, Component::V, Component::W];

    pub fn index(self) -> usize {
        self as usize
    }
}

/// Function of the thickness coordinate with an analytic derivative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ThicknessFn<T> {
    /// `z^n`
    Power(u32),
    /// `sin(k z)`
    Sine(T),
    /// `cos(k z)`
    Cosine(T),
}

impl<T: Real> ThicknessFn<T> {
    pub fn value(&self, z: T) -> T {
        match *self {
            ThicknessFn::Power(n) => z.powi(n as i32),
            ThicknessFn::Sine(k) => (k * z).sin(),
            ThicknessFn::Cosine(k) => (k * z).cos(),
        }
    }

    pub fn derivative(&self, z: T) -> T {
        match *self {
            ThicknessFn::Power(0) => T::zero(),
            ThicknessFn::Power(n) => T::from_u32(n).expect("exponent") * z.powi(n as i32 - 1),
            ThicknessFn::Sine(k) => k * (k * z).cos(),
            ThicknessFn::Cosine(k) => -k * (k * z).sin(),
        }
    }

    /// `value` for flag 0, `derivative` for flag 1.
    pub fn eval(&self, z: T, derivative: bool) -> T {
        if derivative {
            self.derivative(z)
        } else {
            self.value(z)
        }
    }
}

/// Per-component thickness functions of an equivalent-single-layer model.
#[derive(Debug, Clone, PartialEq)]
pub struct ThicknessExpansion<T> {
    thickness: T,
    functions: [Vec<ThicknessFn<T>>; 3],
}

impl<T: Real> ThicknessExpansion<T> {
    pub fn new(
        thickness: T,
        u: Vec<ThicknessFn<T>>,
        v: Vec<ThicknessFn<T>>,
        w: Vec<ThicknessFn<T>>,
    ) -> Result<Self> {
        if !(thickness > T::zero()) {
            return Err(Error::Expansion("thickness must be positive".into()));
        }
        if u.is_empty() || v.is_empty() || w.is_empty() {
            return Err(Error::Expansion(
                "every component needs at least one function".into(),
            ));
        }
        let out = Self {
            thickness,
            functions: [u, v, w],
        };
        let half = thickness * lit(0.5);
        for c in Component::ALL {
            for f in out.functions(c) {
                for z in [-half, T::zero(), half] {
                    if !f.value(z).is_finite() || !f.derivative(z).is_finite() {
                        return Err(Error::Expansion(format!(
                            "{f:?} is not finite on the thickness"
                        )));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Sinusoidal in-plane, quadratic transverse displacement model:
    /// `u, v: {1, z, sin(pi z / h)}` and `w: {1, z, z^2}`.
    pub fn sinus_w2(thickness: T) -> Result<Self> {
        let k = T::pi() / thickness;
        let inplane = vec![
            ThicknessFn::Power(0),
            ThicknessFn::Power(1),
            ThicknessFn::Sine(k),
        ];
        let transverse = vec![
            ThicknessFn::Power(0),
            ThicknessFn::Power(1),
            ThicknessFn::Power(2),
        ];
        Self::new(thickness, inplane.clone(), inplane, transverse)
    }

    /// Polynomial expansion with the given orders for in-plane and transverse
    /// components: `{1, z, ..., z^order}`.
    pub fn taylor(thickness: T, inplane_order: u32, transverse_order: u32) -> Result<Self> {
        let inplane: Vec<_> = (0..=inplane_order).map(ThicknessFn::Power).collect();
        let transverse = (0..=transverse_order).map(ThicknessFn::Power).collect();
        Self::new(thickness, inplane.clone(), inplane, transverse)
    }

    pub fn thickness(&self) -> T {
        self.thickness
    }

    pub fn functions(&self, c: Component) -> &[ThicknessFn<T>] {
        &self.functions[c.index()]
    }

    pub fn len(&self, c: Component) -> usize {
        self.functions[c.index()].len()
    }

    /// Unknowns per in-plane point.
    pub fn dofs_per_point(&self) -> usize {
        self.functions.iter().map(Vec::len).sum()
    }

    /// Offset of component `c` within the per-point unknowns
    /// (`u` terms, then `v`, then `w`).
    pub fn offset(&self, c: Component) -> usize {
        self.functions[..c.index()].iter().map(Vec::len).sum()
    }

    /// `(component, index)` of a per-point unknown.
    pub fn local_dof(&self, local: usize) -> (Component, usize) {
        let mut rem = local;
        for c in Component::ALL {
            let n = self.len(c);
            if rem < n {
                return (c, rem);
            }
            rem -= n;
        }
        panic!("local dof {local} out of range");
    }
}

/// Per-layer integrals `int_{z_{k-1}}^{z_k} d^a F_t^c d^b F_s^d dz`.
#[derive(Debug, Clone, PartialEq)]
pub struct ThicknessIntegralTable<T> {
    lens: [usize; 3],
    /// `[layer][c1][c2][a][b]`, each a row-major `len(c1) x len(c2)` block.
    data: Vec<[[[[Vec<T>; 2]; 2]; 3]; 3]>,
}

impl<T: Real> ThicknessIntegralTable<T> {
    pub fn num_layers(&self) -> usize {
        self.data.len()
    }

    /// Integral over layer `k` of `F_t^{c1}` (derivative if `a`) times
    /// `F_s^{c2}` (derivative if `b`).
    #[allow(clippy::too_many_arguments)]
    pub fn get(
        &self,
        k: usize,
        c1: Component,
        c2: Component,
        a: bool,
        b: bool,
        t: usize,
        s: usize,
    ) -> T {
        self.data[k][c1.index()][c2.index()][a as usize][b as usize][t * self.lens[c2.index()] + s]
    }

    fn check(&self, k: usize, c1: Component, t: usize, c2: Component, s: usize) -> Result<()> {
        if k >= self.num_layers() {
            return Err(Error::Index(format!("layer {k} of {}", self.num_layers())));
        }
        if t >= self.lens[c1.index()] || s >= self.lens[c2.index()] {
            return Err(Error::Index(format!(
                "expansion indices ({t}, {s}) for {c1:?}/{c2:?}"
            )));
        }
        Ok(())
    }
}

/// Default number of Gauss points per layer for thickness integrals.
pub const DEFAULT_THICKNESS_POINTS: usize = 10;

/// Gauss–Legendre thickness integrals of every function product, layer by
/// layer.
pub fn integrate_thickness<T: Real>(
    layup: &Layup<T>,
    expansion: &ThicknessExpansion<T>,
    points: usize,
) -> Result<ThicknessIntegralTable<T>> {
    if points < 4 {
        return Err(Error::Invalid(format!(
            "at least 4 thickness points are required, got {points}"
        )));
    }
    let lens = [
        expansion.len(Component::U),
        expansion.len(Component::V),
        expansion.len(Component::W),
    ];
    let zs = layup.interfaces();
    let mut data = Vec::with_capacity(layup.num_layers());
    for k in 0..layup.num_layers() {
        let (pts, wts) = gauss_on_interval::<T>(points, zs[k], zs[k + 1]);
        let layer: [[[[Vec<T>; 2]; 2]; 3]; 3] = std::array::from_fn(|c1| {
            std::array::from_fn(|c2| {
                std::array::from_fn(|a| {
                    std::array::from_fn(|b| {
                        let f1 = expansion.functions(Component::ALL[c1]);
                        let f2 = expansion.functions(Component::ALL[c2]);
                        let mut block = vec![T::zero(); f1.len() * f2.len()];
                        for (z, w) in pts.iter().zip(&wts) {
                            for (t, ft) in f1.iter().enumerate() {
                                let vt = ft.eval(*z, a == 1);
                                for (s, fs) in f2.iter().enumerate() {
                                    block[t * f2.len() + s] += vt * fs.eval(*z, b == 1) * *w;
                                }
                            }
                        }
                        block
                    })
                })
            })
        });
        data.push(layer);
    }
    Ok(ThicknessIntegralTable { lens, data })
}

/// Which in-plane factor of a basis function enters a strain term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InPlane {
    Value = 0,
    Dx = 1,
    Dy = 2,
}

/// One strain entry produced by a unit displacement unknown: strain slot,
/// whether `F'` (instead of `F`) multiplies it, and its in-plane factor.
#[derive(Debug, Clone, Copy)]
pub(crate) struct StrainTerm {
    pub strain: usize,
    pub dz: bool,
    pub inplane: InPlane,
}

/// Strain operator of the plate kinematics applied to `F(z) N(x, y)` in
/// direction `c`.
pub(crate) fn strain_terms(c: Component) -> [StrainTerm; 3] {
    use InPlane::*;
    let t = |strain, dz, inplane| StrainTerm {
        strain,
        dz,
        inplane,
    };
    match c {
        // eps_xx = F N_x, gamma_xy = F N_y, gamma_xz = F' N
        Component::U => [t(XX, false, Dx), t(XY, false, Dy), t(XZ, true, Value)],
        Component::V => [t(YY, false, Dy), t(XY, false, Dx), t(YZ, true, Value)],
        // gamma_xz = F N_x, gamma_yz = F N_y, eps_zz = F' N
        Component::W => [t(XZ, false, Dx), t(YZ, false, Dy), t(ZZ, true, Value)],
    }
}

fn is_shear(strain: usize) -> bool {
    strain == XZ || strain == YZ
}

/// One contribution to a nucleus slot:
/// `coefficient * g_test(N_i) * g_trial(N_j)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NucleusTerm<T> {
    pub test: InPlane,
    pub trial: InPlane,
    pub coefficient: T,
    /// Transverse-shear contribution (scaled by the locking stabilizer).
    pub shear: bool,
}

/// The 3x3 stiffness nucleus of one layer and one `(test, trial)` pair of
/// expansion indices, as in-plane bilinear-form coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct Nucleus<T> {
    /// `slots[row component][column component]`, rows are the test functions.
    pub slots: [[Vec<NucleusTerm<T>>; 3]; 3],
}

/// Expands the weak form of the stiffness for layer `k`, test index `s` and
/// trial index `tau` (each component uses its own function list).
///
/// The in-plane derivatives stay on the basis functions (symmetric Galerkin
/// form); `d/dz` acting on the thickness functions is carried by the
/// derivative-flag integrals of `table`.
pub fn stiffness_nucleus<T: Real>(
    blocks: &ConstitutiveBlocks<T>,
    table: &ThicknessIntegralTable<T>,
    k: usize,
    tau: usize,
    s: usize,
) -> Result<Nucleus<T>> {
    let c = blocks.full();
    let mut slots: [[Vec<NucleusTerm<T>>; 3]; 3] = Default::default();
    for row in Component::ALL {
        for col in Component::ALL {
            slots[row.index()][col.index()] = slot_terms(&c, table, k, row, s, col, tau)?;
        }
    }
    Ok(Nucleus { slots })
}

/// A single `(row, col)` slot of the stiffness nucleus, with independent
/// test index `s` (into `row`'s functions) and trial index `tau` (into
/// `col`'s functions).
pub fn nucleus_slot<T: Real>(
    blocks: &ConstitutiveBlocks<T>,
    table: &ThicknessIntegralTable<T>,
    k: usize,
    row: Component,
    s: usize,
    col: Component,
    tau: usize,
) -> Result<Vec<NucleusTerm<T>>> {
    slot_terms(&blocks.full(), table, k, row, s, col, tau)
}

fn slot_terms<T: Real>(
    c: &nalgebra::Matrix6<T>,
    table: &ThicknessIntegralTable<T>,
    k: usize,
    row: Component,
    s: usize,
    col: Component,
    tau: usize,
) -> Result<Vec<NucleusTerm<T>>> {
    table.check(k, row, s, col, tau)?;
    let mut terms: Vec<NucleusTerm<T>> = Vec::new();
    for et in strain_terms(row) {
        for er in strain_terms(col) {
            let cij = c[(et.strain, er.strain)];
            if cij == T::zero() {
                continue;
            }
            let coefficient = cij * table.get(k, row, col, et.dz, er.dz, s, tau);
            let shear = is_shear(et.strain) && is_shear(er.strain);
            match terms
                .iter_mut()
                .find(|t| t.test == et.inplane && t.trial == er.inplane && t.shear == shear)
            {
                Some(t) => t.coefficient += coefficient,
                None => terms.push(NucleusTerm {
                    test: et.inplane,
                    trial: er.inplane,
                    coefficient,
                    shear,
                }),
            }
        }
    }
    Ok(terms)
}

/// Diagonal mass nucleus `rho_k int F_tau F_s dz` for each component.
///
/// `tau` and `s` index each component's own function list; a component for
/// which they are out of range contributes zero.
pub fn mass_nucleus<T: Real>(
    rho: T,
    table: &ThicknessIntegralTable<T>,
    k: usize,
    tau: usize,
    s: usize,
) -> Result<Matrix3<T>> {
    if k >= table.num_layers() {
        return Err(Error::Index(format!("layer {k} of {}", table.num_layers())));
    }
    let mut m = Matrix3::zeros();
    let mut any = false;
    for c in Component::ALL {
        if tau < table.lens[c.index()] && s < table.lens[c.index()] {
            m[(c.index(), c.index())] = rho * table.get(k, c, c, false, false, s, tau);
            any = true;
        }
    }
    if !any {
        return Err(Error::Index(format!("expansion indices ({tau}, {s})")));
    }
    Ok(m)
}
