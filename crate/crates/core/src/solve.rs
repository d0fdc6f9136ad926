//! Static and modal solutions of a constrained plate system.

use nalgebra::{Cholesky, DMatrix, DVector, Dyn, SymmetricEigen};

use crate::assembly::{ConstrainedSystem, DofMap};
use crate::error::{Error, Result};
use crate::scalar::{lit, to_f64, Real};
use crate::theory::Component;

/// Displacement solution of `K u = P`.
#[derive(Debug, Clone, PartialEq)]
pub struct StaticResult<T: Real> {
    /// Full-length vector with zeros on constrained unknowns.
    pub displacement: DVector<T>,
    pub dofs: DofMap,
    /// `|K u - P| / |P|` on the reduced system (0 for zero load).
    pub relative_residual: T,
}

/// Lowest eigenpairs of `K phi = omega^2 M phi`.
#[derive(Debug, Clone, PartialEq)]
pub struct ModalResult<T: Real> {
    /// Ascending `omega^2`.
    pub eigenvalues: Vec<T>,
    /// Full-length mass-normalized modes, one per column.
    pub modes: DMatrix<T>,
    pub dofs: DofMap,
    /// Largest `|phi' K phi / phi' M phi - omega^2| / omega^2` over the modes.
    pub rayleigh_error: T,
}

impl<T: Real> ModalResult<T> {
    pub fn frequencies(&self) -> Vec<T> {
        self.eigenvalues.iter().map(|l| l.sqrt()).collect()
    }

    pub fn mode(&self, i: usize) -> DVector<T> {
        self.modes.column(i).into_owned()
    }

    /// Share of the kinetic energy of mode `i` carried by the u, v and w
    /// families. The mass matrix has no coupling between families, so the
    /// shares sum to one.
    pub fn component_shares(&self, system: &ConstrainedSystem<T>, i: usize) -> [T; 3] {
        let phi = self.modes.column(i);
        let mut shares = [T::zero(); 3];
        for c in Component::ALL {
            let masked = DVector::from_iterator(
                system.free.len(),
                system.free.iter().map(|&g| {
                    if self.dofs.describe(g).1 == c {
                        phi[g]
                    } else {
                        T::zero()
                    }
                }),
            );
            shares[c.index()] = masked.dot(&(&system.m * &masked));
        }
        let total = shares[0] + shares[1] + shares[2];
        shares.map(|s| s / total)
    }

    /// Whether the transverse family carries the largest kinetic energy share.
    pub fn is_flexural(&self, system: &ConstrainedSystem<T>, i: usize) -> bool {
        let [u, v, w] = self.component_shares(system, i);
        w > u && w > v
    }
}

fn relative_asymmetry<T: Real>(a: &DMatrix<T>) -> T {
    let scale = a.amax();
    if scale == T::zero() {
        return T::zero();
    }
    (a - a.transpose()).amax() / scale
}

/// Null-space hint for a failed factorization: the unknowns with the
/// smallest diagonal entries.
fn diagnostics<T: Real>(k: &DMatrix<T>, system: &ConstrainedSystem<T>) -> String {
    let mut diag: Vec<(usize, T)> = (0..k.nrows()).map(|i| (i, k[(i, i)])).collect();
    diag.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal));
    let worst: Vec<String> = diag
        .iter()
        .take(3)
        .map(|&(i, v)| {
            let (point, c, t) = system.dofs.describe(system.free[i]);
            format!("point {point} {c:?}{t} (K_ii = {:.3e})", to_f64(v))
        })
        .collect();
    format!(
        "{} free unknowns under {:?} supports; smallest diagonal entries: {}; \
         an unsupported rigid-body mode is the usual cause",
        k.nrows(),
        system.boundary,
        worst.join(", ")
    )
}

fn factor<T: Real>(k: &DMatrix<T>, system: &ConstrainedSystem<T>) -> Result<Cholesky<T, Dyn>> {
    if k.nrows() == 0 {
        return Err(Error::Singular("every unknown is constrained".into()));
    }
    Cholesky::new(k.clone()).ok_or_else(|| Error::Singular(diagnostics(k, system)))
}

/// Solves the constrained static problem by Cholesky factorization.
pub fn solve_static<T: Real>(system: &ConstrainedSystem<T>) -> Result<StaticResult<T>> {
    let chol = factor(&system.k, system)?;
    let u = chol.solve(&system.p);
    let pn = system.p.norm();
    let relative_residual = if pn == T::zero() {
        (&system.k * &u).norm()
    } else {
        (&system.k * &u - &system.p).norm() / pn
    };
    if !relative_residual.is_finite() || relative_residual > lit(1e-8) {
        return Err(Error::Singular(format!(
            "solution residual {:.3e} too large; the stiffness is numerically singular",
            to_f64(relative_residual)
        )));
    }
    Ok(StaticResult {
        displacement: system.expand(&u),
        dofs: system.dofs.clone(),
        relative_residual,
    })
}

/// Every eigenpair of the symmetric-definite pencil `(k, m)` by reduction
/// with the Cholesky factor of `m`. Eigenvectors are `m`-orthonormal and
/// sorted by ascending eigenvalue.
pub fn generalized_eigen<T: Real>(k: &DMatrix<T>, m: &DMatrix<T>) -> Result<(Vec<T>, DMatrix<T>)> {
    let n = k.nrows();
    if m.nrows() != n || k.ncols() != n || m.ncols() != n {
        return Err(Error::Invalid(
            "stiffness and mass dimensions differ".into(),
        ));
    }
    let tol = lit::<T>(1e-10);
    if relative_asymmetry(m) > tol {
        return Err(Error::Mass("mass matrix is not symmetric".into()));
    }
    let l = Cholesky::new(m.clone())
        .ok_or_else(|| Error::Mass(format!("Cholesky factorization failed for {n} unknowns")))?
        .unpack();
    // A = L^-1 K L^-T
    let mut a = k.clone();
    if !l.solve_lower_triangular_mut(&mut a) {
        return Err(Error::Mass("zero pivot in mass factor".into()));
    }
    let mut a = a.transpose();
    l.solve_lower_triangular_mut(&mut a);
    let a = (&a + a.transpose()) * lit::<T>(0.5);
    let eig = SymmetricEigen::new(a);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        eig.eigenvalues[i]
            .partial_cmp(&eig.eigenvalues[j])
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let values: Vec<T> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut y = DMatrix::zeros(n, n);
    for (c, &i) in order.iter().enumerate() {
        y.set_column(c, &eig.eigenvectors.column(i));
    }
    // phi = L^-T y
    let lt = l.transpose();
    if !lt.solve_upper_triangular_mut(&mut y) {
        return Err(Error::Mass("zero pivot in mass factor".into()));
    }
    Ok((values, y))
}

/// Lowest `count` vibration modes of the constrained system.
pub fn solve_modes<T: Real>(system: &ConstrainedSystem<T>, count: usize) -> Result<ModalResult<T>> {
    let n = system.len();
    if count == 0 || count > n {
        return Err(Error::Invalid(format!(
            "cannot extract {count} modes from {n} unknowns"
        )));
    }
    let (values, vectors) = generalized_eigen(&system.k, &system.m)?;
    let mut eigenvalues = Vec::with_capacity(count);
    let mut reduced = DMatrix::zeros(n, count);
    let mut rayleigh_error = T::zero();
    for i in 0..count {
        let mut phi = vectors.column(i).into_owned();
        let mass = phi.dot(&(&system.m * &phi));
        phi /= mass.sqrt();
        let lambda = values[i];
        if !(lambda > T::zero()) {
            return Err(Error::Eigen(format!(
                "eigenvalue {i} is {:.3e}; the constrained stiffness is not positive definite",
                to_f64(lambda)
            )));
        }
        let rq = phi.dot(&(&system.k * &phi)) / phi.dot(&(&system.m * &phi));
        rayleigh_error = rayleigh_error.max((rq - lambda).abs() / lambda);
        eigenvalues.push(lambda);
        reduced.set_column(i, &phi);
    }
    if rayleigh_error > lit(1e-8) {
        return Err(Error::Eigen(format!(
            "Rayleigh quotient mismatch {:.3e}",
            to_f64(rayleigh_error)
        )));
    }
    Ok(ModalResult {
        eigenvalues,
        modes: system.expand_matrix(&reduced),
        dofs: system.dofs.clone(),
        rayleigh_error,
    })
}
