//! Global stiffness, mass and load arrays by Gauss quadrature over the NURBS
//! elements, the transverse-shear locking stabilizer and boundary
//! constraints.

use std::collections::BTreeSet;

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::laminate::{ConstitutiveBlocks, Layup};
use crate::nurbs::{NurbsPatch, Span, SurfaceEval};
use crate::quadrature::gauss_on_interval;
use crate::scalar::{lit, to_f64, Real};
use crate::theory::{
    integrate_thickness, nucleus_slot, Component, InPlane, ThicknessExpansion,
    ThicknessIntegralTable, DEFAULT_THICKNESS_POINTS,
};

/// Default stabilization constant.
pub const DEFAULT_ALPHA: f64 = 0.1;

/// Extra Gauss points per direction used for load integrals.
const LOAD_EXTRA_POINTS: usize = 8;

/// Locking stabilizer `h^2 / (h^2 + alpha^2 l^2)` applied to the
/// transverse-shear moduli of an element whose longest edge is `ell`.
pub fn shear_stabilizer<T: Real>(h: T, ell: T, alpha: T) -> Result<T> {
    if !(h > T::zero()) || !(ell > T::zero()) {
        return Err(Error::Invalid(format!(
            "thickness and element size must be positive (h = {}, l = {})",
            to_f64(h),
            to_f64(ell)
        )));
    }
    if alpha < T::zero() || !alpha.is_finite() {
        return Err(Error::Invalid(format!(
            "alpha must be non-negative, got {}",
            to_f64(alpha)
        )));
    }
    let h2 = h * h;
    Ok(h2 / (h2 + alpha * alpha * ell * ell))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AssemblyOptions<T> {
    /// Stabilization constant; `None` turns the stabilizer off.
    pub alpha: Option<T>,
    /// Gauss points per layer for thickness integrals.
    pub thickness_points: usize,
    /// Points added to the `(p + 1) x (q + 1)` element rule in each direction.
    pub extra_points: usize,
}

impl<T: Real> Default for AssemblyOptions<T> {
    fn default() -> Self {
        Self {
            alpha: Some(lit(DEFAULT_ALPHA)),
            thickness_points: DEFAULT_THICKNESS_POINTS,
            extra_points: 0,
        }
    }
}

/// A nonempty knot-span pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Element<T> {
    pub u: Span<T>,
    pub v: Span<T>,
}

/// Parametric Gauss point; `weight` includes the parent-to-span Jacobian.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraturePoint<T> {
    pub xi: T,
    pub eta: T,
    pub weight: T,
}

pub fn elements<T: Real>(patch: &NurbsPatch<T>) -> Vec<Element<T>> {
    let su = patch.knot_u().spans();
    let sv = patch.knot_v().spans();
    sv.iter()
        .flat_map(|&v| su.iter().map(move |&u| Element { u, v }))
        .collect()
}

/// Tensor Gauss rule with `nu x nv` points on one element.
pub fn element_rule<T: Real>(e: &Element<T>, nu: usize, nv: usize) -> Vec<QuadraturePoint<T>> {
    let (xu, wu) = gauss_on_interval(nu, e.u.lo, e.u.hi);
    let (xv, wv) = gauss_on_interval(nv, e.v.lo, e.v.hi);
    let mut out = Vec::with_capacity(nu * nv);
    for (eta, w2) in xv.iter().zip(&wv) {
        for (xi, w1) in xu.iter().zip(&wu) {
            out.push(QuadraturePoint {
                xi: *xi,
                eta: *eta,
                weight: *w1 * *w2,
            });
        }
    }
    out
}

/// `(p + 1) x (q + 1)` Gauss points per element.
pub fn quadrature_rule<T: Real>(
    patch: &NurbsPatch<T>,
) -> Vec<(Element<T>, Vec<QuadraturePoint<T>>)> {
    quadrature_rule_with(patch, 0)
}

/// `(p + 1 + extra) x (q + 1 + extra)` Gauss points per element.
pub fn quadrature_rule_with<T: Real>(
    patch: &NurbsPatch<T>,
    extra: usize,
) -> Vec<(Element<T>, Vec<QuadraturePoint<T>>)> {
    let (p, q) = (patch.knot_u().degree(), patch.knot_v().degree());
    elements(patch)
        .into_iter()
        .map(|e| (e, element_rule(&e, p + 1 + extra, q + 1 + extra)))
        .collect()
}

/// Rational basis with physical first derivatives at a point.
#[derive(Debug, Clone, PartialEq)]
pub struct PhysicalBasis<T> {
    pub point: [T; 2],
    pub det_jacobian: T,
    pub indices: Vec<usize>,
    pub values: Vec<T>,
    pub dx: Vec<T>,
    pub dy: Vec<T>,
}

impl<T: Real> PhysicalBasis<T> {
    pub fn from_eval(s: SurfaceEval<T>) -> Result<Self> {
        let [[a, b], [c, d]] = s.jacobian;
        let det = a * d - b * c;
        let scale = a * a + b * b + c * c + d * d;
        if !(det > lit::<T>(1e-13) * scale) {
            return Err(Error::Mesh(format!(
                "singular or inverted geometry map (det J = {}) at ({}, {})",
                to_f64(det),
                to_f64(s.point[0]),
                to_f64(s.point[1])
            )));
        }
        let n = s.values.len();
        let mut dx = Vec::with_capacity(n);
        let mut dy = Vec::with_capacity(n);
        for k in 0..n {
            dx.push((d * s.d_xi[k] - c * s.d_eta[k]) / det);
            dy.push((a * s.d_eta[k] - b * s.d_xi[k]) / det);
        }
        Ok(Self {
            point: s.point,
            det_jacobian: det,
            indices: s.indices,
            values: s.values,
            dx,
            dy,
        })
    }

    pub fn at(patch: &NurbsPatch<T>, e: &Element<T>, xi: T, eta: T) -> Result<Self> {
        Self::from_eval(patch.eval_in_element(e.u.index, e.v.index, xi, eta)?)
    }

    fn factor(&self, k: usize, g: usize) -> T {
        match g {
            0 => self.values[k],
            1 => self.dx[k],
            _ => self.dy[k],
        }
    }
}

/// Numbering of the unknowns: `point * per_point + offset(component) + index`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DofMap {
    num_points: usize,
    offsets: [usize; 3],
    lens: [usize; 3],
}

impl DofMap {
    pub fn new<T: Real>(num_points: usize, expansion: &ThicknessExpansion<T>) -> Self {
        let lens = Component::ALL.map(|c| expansion.len(c));
        let offsets = Component::ALL.map(|c| expansion.offset(c));
        Self {
            num_points,
            offsets,
            lens,
        }
    }

    pub fn per_point(&self) -> usize {
        self.lens.iter().sum()
    }

    pub fn num_points(&self) -> usize {
        self.num_points
    }

    pub fn len(&self) -> usize {
        self.num_points * self.per_point()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn terms(&self, c: Component) -> usize {
        self.lens[c.index()]
    }

    pub fn dof(&self, point: usize, c: Component, index: usize) -> usize {
        debug_assert!(index < self.lens[c.index()]);
        point * self.per_point() + self.offsets[c.index()] + index
    }

    /// `(point, component, index)` of a global unknown.
    pub fn describe(&self, dof: usize) -> (usize, Component, usize) {
        let per = self.per_point();
        let (point, mut local) = (dof / per, dof % per);
        for c in Component::ALL {
            if local < self.lens[c.index()] {
                return (point, c, local);
            }
            local -= self.lens[c.index()];
        }
        unreachable!()
    }
}

/// Load acting on the plate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Load<T> {
    /// `p0 sin(pi x / a) sin(pi y / b)`.
    Sinusoidal {
        amplitude: T,
        a: T,
        b: T,
    },
    Uniform {
        amplitude: T,
    },
}

impl<T: Real> Load<T> {
    pub fn value(&self, x: T, y: T) -> T {
        match *self {
            Load::Sinusoidal { amplitude, a, b } => {
                amplitude * (T::pi() * x / a).sin() * (T::pi() * y / b).sin()
            }
            Load::Uniform { amplitude } => amplitude,
        }
    }
}

/// Unassembled stiffness data of the whole stack: for every pair of
/// per-point unknowns, the in-plane coefficients of `g_test(N_i) g_trial(N_j)`.
#[derive(Debug, Clone)]
struct StiffnessKernel<T> {
    per_point: usize,
    /// `[(r * per + c)] -> [(test, trial, coefficient)]`
    bending: Vec<Vec<(usize, usize, T)>>,
    shear: Vec<Vec<(usize, usize, T)>>,
}

fn inplane_index(g: InPlane) -> usize {
    g as usize
}

/// Plate problem on one patch: geometry, stack, kinematics and options.
#[derive(Debug, Clone)]
pub struct PlateModel<T: Real> {
    pub patch: NurbsPatch<T>,
    pub layup: Layup<T>,
    pub expansion: ThicknessExpansion<T>,
    pub options: AssemblyOptions<T>,
    blocks: Vec<ConstitutiveBlocks<T>>,
    table: ThicknessIntegralTable<T>,
    dofs: DofMap,
}

/// Assembled, unconstrained arrays.
#[derive(Debug, Clone)]
pub struct GlobalSystem<T: Real> {
    pub k: DMatrix<T>,
    pub m: DMatrix<T>,
    pub p: DVector<T>,
    pub dofs: DofMap,
}

impl<T: Real> PlateModel<T> {
    pub fn new(
        patch: NurbsPatch<T>,
        layup: Layup<T>,
        expansion: ThicknessExpansion<T>,
        options: AssemblyOptions<T>,
    ) -> Result<Self> {
        let (h1, h2) = (layup.thickness(), expansion.thickness());
        if (h1 - h2).abs() > lit::<T>(1e-12) * h1 {
            return Err(Error::Invalid(format!(
                "layup thickness {} differs from expansion thickness {}",
                to_f64(h1),
                to_f64(h2)
            )));
        }
        let blocks = layup.blocks()?;
        let table = integrate_thickness(&layup, &expansion, options.thickness_points)?;
        let dofs = DofMap::new(patch.num_control_points(), &expansion);
        Ok(Self {
            patch,
            layup,
            expansion,
            options,
            blocks,
            table,
            dofs,
        })
    }

    pub fn dofs(&self) -> &DofMap {
        &self.dofs
    }

    pub fn table(&self) -> &ThicknessIntegralTable<T> {
        &self.table
    }

    pub fn blocks(&self) -> &[ConstitutiveBlocks<T>] {
        &self.blocks
    }

    /// Longest physical corner-to-corner edge of an element.
    pub fn element_size(&self, e: &Element<T>) -> Result<T> {
        let c = self
            .patch
            .element_corners((e.u.lo, e.u.hi), (e.v.lo, e.v.hi))?;
        let mut ell = T::zero();
        for i in 0..4 {
            let (a, b) = (c[i], c[(i + 1) % 4]);
            let d = ((a[0] - b[0]) * (a[0] - b[0]) + (a[1] - b[1]) * (a[1] - b[1])).sqrt();
            ell = ell.max(d);
        }
        Ok(ell)
    }

    /// Transverse-shear scaling of an element (1 with stabilization off).
    pub fn shear_factor(&self, e: &Element<T>) -> Result<T> {
        match self.options.alpha {
            None => Ok(T::one()),
            Some(alpha) => shear_stabilizer(self.layup.thickness(), self.element_size(e)?, alpha),
        }
    }

    fn stiffness_kernel(&self) -> Result<StiffnessKernel<T>> {
        let per = self.dofs.per_point();
        let mut bending = vec![Vec::new(); per * per];
        let mut shear = vec![Vec::new(); per * per];
        for r in 0..per {
            let (rc, s) = self.expansion.local_dof(r);
            for c in 0..per {
                let (cc, tau) = self.expansion.local_dof(c);
                let mut acc_b = [[T::zero(); 3]; 3];
                let mut acc_s = [[T::zero(); 3]; 3];
                for (k, blocks) in self.blocks.iter().enumerate() {
                    for t in nucleus_slot(blocks, &self.table, k, rc, s, cc, tau)? {
                        let acc = if t.shear { &mut acc_s } else { &mut acc_b };
                        acc[inplane_index(t.test)][inplane_index(t.trial)] += t.coefficient;
                    }
                }
                for a in 0..3 {
                    for b in 0..3 {
                        if acc_b[a][b] != T::zero() {
                            bending[r * per + c].push((a, b, acc_b[a][b]));
                        }
                        if acc_s[a][b] != T::zero() {
                            shear[r * per + c].push((a, b, acc_s[a][b]));
                        }
                    }
                }
            }
        }
        Ok(StiffnessKernel {
            per_point: per,
            bending,
            shear,
        })
    }

    /// Element stiffness with local rows ordered `(basis, per-point unknown)`.
    fn element_stiffness(
        &self,
        kernel: &StiffnessKernel<T>,
        e: &Element<T>,
        rule: &[QuadraturePoint<T>],
    ) -> Result<(Vec<usize>, DMatrix<T>)> {
        let per = kernel.per_point;
        let factor = self.shear_factor(e)?;
        let terms: Vec<Vec<(usize, usize, T)>> = kernel
            .bending
            .iter()
            .zip(&kernel.shear)
            .map(|(b, s)| {
                let mut all = b.clone();
                for &(ga, gb, v) in s {
                    match all.iter_mut().find(|t| t.0 == ga && t.1 == gb) {
                        Some(t) => t.2 += factor * v,
                        None => all.push((ga, gb, factor * v)),
                    }
                }
                all
            })
            .collect();
        let mut local: Option<DMatrix<T>> = None;
        let mut indices = Vec::new();
        for qp in rule {
            let basis = PhysicalBasis::at(&self.patch, e, qp.xi, qp.eta)?;
            let nb = basis.values.len();
            let mat = local.get_or_insert_with(|| DMatrix::zeros(nb * per, nb * per));
            if indices.is_empty() {
                indices = basis.indices.clone();
            }
            let da = qp.weight * basis.det_jacobian;
            let g: Vec<[T; 3]> = (0..nb)
                .map(|i| [basis.factor(i, 0), basis.factor(i, 1), basis.factor(i, 2)])
                .collect();
            for j in 0..nb {
                for i in 0..nb {
                    let mut o = [[T::zero(); 3]; 3];
                    for a in 0..3 {
                        for b in 0..3 {
                            o[a][b] = g[i][a] * g[j][b] * da;
                        }
                    }
                    for c in 0..per {
                        let col = j * per + c;
                        for r in 0..per {
                            let list = &terms[r * per + c];
                            if list.is_empty() {
                                continue;
                            }
                            let mut v = T::zero();
                            for &(a, b, coef) in list {
                                v += coef * o[a][b];
                            }
                            mat[(i * per + r, col)] += v;
                        }
                    }
                }
            }
        }
        Ok((indices, local.unwrap_or_else(|| DMatrix::zeros(0, 0))))
    }

    fn scatter(&self, target: &mut DMatrix<T>, indices: &[usize], local: &DMatrix<T>) {
        let per = self.dofs.per_point();
        for (j, &pj) in indices.iter().enumerate() {
            for c in 0..per {
                let gc = pj * per + c;
                let lc = j * per + c;
                for (i, &pi) in indices.iter().enumerate() {
                    for r in 0..per {
                        target[(pi * per + r, gc)] += local[(i * per + r, lc)];
                    }
                }
            }
        }
    }

    /// Global stiffness matrix (unconstrained).
    pub fn stiffness(&self) -> Result<DMatrix<T>> {
        let kernel = self.stiffness_kernel()?;
        let n = self.dofs.len();
        let mut k = DMatrix::zeros(n, n);
        for (e, rule) in quadrature_rule_with(&self.patch, self.options.extra_points) {
            let (indices, local) = self.element_stiffness(&kernel, &e, &rule)?;
            self.scatter(&mut k, &indices, &local);
        }
        Ok(k)
    }

    /// Global consistent mass matrix (unconstrained).
    pub fn mass(&self) -> Result<DMatrix<T>> {
        let per = self.dofs.per_point();
        let mut coef = vec![T::zero(); per * per];
        for r in 0..per {
            let (rc, s) = self.expansion.local_dof(r);
            for c in 0..per {
                let (cc, tau) = self.expansion.local_dof(c);
                if rc != cc {
                    continue;
                }
                for (k, ply) in self.layup.plies().iter().enumerate() {
                    // tau and s both index the same component's list here
                    let v = self.table.get(k, rc, cc, false, false, s, tau) * ply.lamina.rho;
                    coef[r * per + c] += v;
                }
            }
        }
        let n = self.dofs.len();
        let mut m = DMatrix::zeros(n, n);
        for (e, rule) in quadrature_rule_with(&self.patch, self.options.extra_points) {
            let mut local: Option<DMatrix<T>> = None;
            let mut indices = Vec::new();
            for qp in &rule {
                let basis = PhysicalBasis::at(&self.patch, &e, qp.xi, qp.eta)?;
                let nb = basis.values.len();
                let mat = local.get_or_insert_with(|| DMatrix::zeros(nb * per, nb * per));
                if indices.is_empty() {
                    indices = basis.indices.clone();
                }
                let da = qp.weight * basis.det_jacobian;
                for j in 0..nb {
                    for i in 0..nb {
                        let rr = basis.values[i] * basis.values[j] * da;
                        for c in 0..per {
                            for r in 0..per {
                                let v = coef[r * per + c];
                                if v != T::zero() {
                                    mat[(i * per + r, j * per + c)] += v * rr;
                                }
                            }
                        }
                    }
                }
            }
            if let Some(local) = local {
                self.scatter(&mut m, &indices, &local);
            }
        }
        Ok(m)
    }

    /// Consistent load of a transverse pressure acting at thickness
    /// coordinate `z`; it does work on `w(z) = sum_t F_t^w(z) w_t`.
    pub fn load(&self, load: &Load<T>, z: T) -> Result<DVector<T>> {
        let weights: Vec<T> = self
            .expansion
            .functions(Component::W)
            .iter()
            .map(|f| f.value(z))
            .collect();
        let (p, q) = (self.patch.knot_u().degree(), self.patch.knot_v().degree());
        let mut out = DVector::zeros(self.dofs.len());
        for e in elements(&self.patch) {
            for qp in element_rule(&e, p + 1 + LOAD_EXTRA_POINTS, q + 1 + LOAD_EXTRA_POINTS) {
                let basis = PhysicalBasis::at(&self.patch, &e, qp.xi, qp.eta)?;
                let f = load.value(basis.point[0], basis.point[1]) * qp.weight * basis.det_jacobian;
                for (k, &idx) in basis.indices.iter().enumerate() {
                    let v = basis.values[k] * f;
                    for (t, w) in weights.iter().enumerate() {
                        if *w != T::zero() {
                            out[self.dofs.dof(idx, Component::W, t)] += *w * v;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Stiffness, mass and (optionally) load of the unconstrained problem.
    pub fn assemble(&self, load: Option<(&Load<T>, T)>) -> Result<GlobalSystem<T>> {
        let k = self.stiffness()?;
        let m = self.mass()?;
        let p = match load {
            Some((l, z)) => self.load(l, z)?,
            None => DVector::zeros(self.dofs.len()),
        };
        Ok(GlobalSystem {
            k,
            m,
            p,
            dofs: self.dofs.clone(),
        })
    }

    /// Integral of `f(x, y)` over the patch with the element Gauss rule.
    pub fn integrate<F: Fn(T, T) -> T>(&self, f: F) -> Result<T> {
        integrate_over_patch(&self.patch, f)
    }
}

/// Integral of `f(x, y)` over the physical domain of `patch`.
pub fn integrate_over_patch<T: Real, F: Fn(T, T) -> T>(patch: &NurbsPatch<T>, f: F) -> Result<T> {
    let mut acc = T::zero();
    for (e, rule) in quadrature_rule(patch) {
        for qp in rule {
            let s = patch.eval_in_element(e.u.index, e.v.index, qp.xi, qp.eta)?;
            let [[a, b], [c, d]] = s.jacobian;
            acc += f(s.point[0], s.point[1]) * qp.weight * (a * d - b * c);
        }
    }
    Ok(acc)
}

/// Support conditions on the patch boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundaryKind {
    /// On edges of constant `xi` (x = 0, a): `v_t = w_t = 0`; on edges of
    /// constant `eta` (y = 0, a): `u_t = w_t = 0`, for all expansion terms.
    SimplySupported,
    /// Every unknown of every boundary control point fixed.
    Clamped,
    Free,
}

impl std::str::FromStr for BoundaryKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "simplysupported" | "ss" => Ok(Self::SimplySupported),
            "clamped" | "c" => Ok(Self::Clamped),
            "free" => Ok(Self::Free),
            other => Err(Error::Invalid(format!("unknown boundary kind '{other}'"))),
        }
    }
}

/// Global unknowns fixed by `kind`.
pub fn constrained_dofs<T: Real>(
    patch: &NurbsPatch<T>,
    dofs: &DofMap,
    kind: BoundaryKind,
) -> BTreeSet<usize> {
    let (nu, nv) = (patch.num_u(), patch.num_v());
    let mut out = BTreeSet::new();
    let mut fix = |point: usize, c: Component| {
        for t in 0..dofs.terms(c) {
            out.insert(dofs.dof(point, c, t));
        }
    };
    for j in 0..nv {
        for i in 0..nu {
            let on_xi_edge = i == 0 || i == nu - 1;
            let on_eta_edge = j == 0 || j == nv - 1;
            if !on_xi_edge && !on_eta_edge {
                continue;
            }
            let point = patch.index(i, j);
            match kind {
                BoundaryKind::Free => {}
                BoundaryKind::Clamped => Component::ALL.iter().for_each(|&c| fix(point, c)),
                BoundaryKind::SimplySupported => {
                    fix(point, Component::W);
                    if on_xi_edge {
                        fix(point, Component::V);
                    }
                    if on_eta_edge {
                        fix(point, Component::U);
                    }
                }
            }
        }
    }
    out
}

/// System restricted to the free unknowns by row/column elimination.
#[derive(Debug, Clone)]
pub struct ConstrainedSystem<T: Real> {
    pub k: DMatrix<T>,
    pub m: DMatrix<T>,
    pub p: DVector<T>,
    /// Global index of every reduced unknown.
    pub free: Vec<usize>,
    pub constrained: BTreeSet<usize>,
    pub dofs: DofMap,
    pub boundary: BoundaryKind,
}

impl<T: Real> ConstrainedSystem<T> {
    pub fn len(&self) -> usize {
        self.free.len()
    }

    pub fn is_empty(&self) -> bool {
        self.free.is_empty()
    }

    /// Full-length vector with zeros on the constrained unknowns.
    pub fn expand(&self, reduced: &DVector<T>) -> DVector<T> {
        let mut full = DVector::zeros(self.dofs.len());
        for (r, &g) in self.free.iter().enumerate() {
            full[g] = reduced[r];
        }
        full
    }

    pub fn expand_matrix(&self, reduced: &DMatrix<T>) -> DMatrix<T> {
        let mut full = DMatrix::zeros(self.dofs.len(), reduced.ncols());
        for (r, &g) in self.free.iter().enumerate() {
            full.row_mut(g).copy_from(&reduced.row(r));
        }
        full
    }
}

pub fn apply_boundary<T: Real>(
    system: &GlobalSystem<T>,
    kind: BoundaryKind,
    patch: &NurbsPatch<T>,
) -> Result<ConstrainedSystem<T>> {
    if patch.num_control_points() != system.dofs.num_points() {
        return Err(Error::Invalid(
            "patch does not match the assembled system".into(),
        ));
    }
    let constrained = constrained_dofs(patch, &system.dofs, kind);
    let free: Vec<usize> = (0..system.dofs.len())
        .filter(|d| !constrained.contains(d))
        .collect();
    let n = free.len();
    let k = DMatrix::from_fn(n, n, |i, j| system.k[(free[i], free[j])]);
    let m = DMatrix::from_fn(n, n, |i, j| system.m[(free[i], free[j])]);
    let p = DVector::from_fn(n, |i, _| system.p[free[i]]);
    Ok(ConstrainedSystem {
        k,
        m,
        p,
        free,
        constrained,
        dofs: system.dofs.clone(),
        boundary: kind,
    })
}
