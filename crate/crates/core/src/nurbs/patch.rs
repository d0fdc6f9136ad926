use super::knot::KnotVector;
use crate::error::{Error, Result};
use crate::scalar::{to_f64, Real};

/// Parametric direction of a surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    U,
    V,
}

/// Planar tensor-product NURBS patch.
///
/// Control points and weights are stored with the `u` index running
/// fastest: entry `(i, j)` lives at `j * num_u + i`.
#[derive(Debug, Clone, PartialEq)]
pub struct NurbsPatch<T> {
    knot_u: KnotVector<T>,
    knot_v: KnotVector<T>,
    control: Vec<[T; 2]>,
    weights: Vec<T>,
}

/// Geometry point and rational basis at one parametric location.
///
/// `values`, `d_xi` and `d_eta` are ordered with the local `u` index running
/// fastest over the `(p + 1) x (q + 1)` nonzero functions.
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceEval<T> {
    pub point: [T; 2],
    /// Columns `[dx/dxi, dx/deta; dy/dxi, dy/deta]` stored row-wise.
    pub jacobian: [[T; 2]; 2],
    pub first_u: usize,
    pub first_v: usize,
    pub values: Vec<T>,
    pub d_xi: Vec<T>,
    pub d_eta: Vec<T>,
    pub indices: Vec<usize>,
}

impl<T: Real> NurbsPatch<T> {
    pub fn new(
        knot_u: KnotVector<T>,
        knot_v: KnotVector<T>,
        control: Vec<[T; 2]>,
        weights: Vec<T>,
    ) -> Result<Self> {
        let n = knot_u.num_basis() * knot_v.num_basis();
        if control.len() != n || weights.len() != n {
            return Err(Error::Patch(format!(
                "expected {} x {} = {n} control points and weights, got {} and {}",
                knot_u.num_basis(),
                knot_v.num_basis(),
                control.len(),
                weights.len()
            )));
        }
        if let Some(w) = weights
            .iter()
            .find(|w| !(**w > T::zero()) || !w.is_finite())
        {
            return Err(Error::Patch(format!(
                "weights must be positive, found {}",
                to_f64(*w)
            )));
        }
        Ok(Self {
            knot_u,
            knot_v,
            control,
            weights,
        })
    }

    pub fn knots(&self, dir: Direction) -> &KnotVector<T> {
        match dir {
            Direction::U => &self.knot_u,
            Direction::V => &self.knot_v,
        }
    }

    pub fn knot_u(&self) -> &KnotVector<T> {
        &self.knot_u
    }

    pub fn knot_v(&self) -> &KnotVector<T> {
        &self.knot_v
    }

    pub fn num_u(&self) -> usize {
        self.knot_u.num_basis()
    }

    pub fn num_v(&self) -> usize {
        self.knot_v.num_basis()
    }

    pub fn num_control_points(&self) -> usize {
        self.control.len()
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        j * self.num_u() + i
    }

    pub fn control_points(&self) -> &[[T; 2]] {
        &self.control
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    pub fn control_point(&self, i: usize, j: usize) -> [T; 2] {
        self.control[self.index(i, j)]
    }

    pub fn weight(&self, i: usize, j: usize) -> T {
        self.weights[self.index(i, j)]
    }

    /// Evaluates geometry and the rational basis at `(xi, eta)`.
    pub fn eval(&self, xi: T, eta: T) -> Result<SurfaceEval<T>> {
        let su = self.knot_u.find_span(xi)?;
        let sv = self.knot_v.find_span(eta)?;
        self.eval_in_element(su, sv, xi, eta)
    }

    /// Evaluation with the element (knot span pair) fixed by the caller, so
    /// points on element boundaries use the basis of that element.
    pub fn eval_in_element(&self, su: usize, sv: usize, xi: T, eta: T) -> Result<SurfaceEval<T>> {
        let bu = self.knot_u.eval_in_span(su, xi);
        let bv = self.knot_v.eval_in_span(sv, eta);
        let (nu, nv) = (bu.values.len(), bv.values.len());
        let count = nu * nv;
        let mut values = Vec::with_capacity(count);
        let mut d_xi = Vec::with_capacity(count);
        let mut d_eta = Vec::with_capacity(count);
        let mut indices = Vec::with_capacity(count);
        let (mut w, mut w_xi, mut w_eta) = (T::zero(), T::zero(), T::zero());
        for b in 0..nv {
            for a in 0..nu {
                let idx = self.index(bu.first_index + a, bv.first_index + b);
                let wt = self.weights[idx];
                let n = bu.values[a] * bv.values[b] * wt;
                let n_xi = bu.derivs[a] * bv.values[b] * wt;
                let n_eta = bu.values[a] * bv.derivs[b] * wt;
                w += n;
                w_xi += n_xi;
                w_eta += n_eta;
                values.push(n);
                d_xi.push(n_xi);
                d_eta.push(n_eta);
                indices.push(idx);
            }
        }
        if !(w > T::zero()) {
            return Err(Error::Patch(format!(
                "weight function {} is not positive at ({}, {})",
                to_f64(w),
                to_f64(xi),
                to_f64(eta)
            )));
        }
        let w2 = w * w;
        let mut point = [T::zero(); 2];
        let mut jacobian = [[T::zero(); 2]; 2];
        for k in 0..count {
            // quotient rule on N w / W
            let r = values[k] / w;
            let r_xi = (d_xi[k] * w - values[k] * w_xi) / w2;
            let r_eta = (d_eta[k] * w - values[k] * w_eta) / w2;
            values[k] = r;
            d_xi[k] = r_xi;
            d_eta[k] = r_eta;
            let c = self.control[indices[k]];
            for d in 0..2 {
                point[d] += r * c[d];
                jacobian[d][0] += r_xi * c[d];
                jacobian[d][1] += r_eta * c[d];
            }
        }
        Ok(SurfaceEval {
            point,
            jacobian,
            first_u: bu.first_index,
            first_v: bv.first_index,
            values,
            d_xi,
            d_eta,
            indices,
        })
    }

    /// Physical position of `(xi, eta)`.
    pub fn point(&self, xi: T, eta: T) -> Result<[T; 2]> {
        Ok(self.eval(xi, eta)?.point)
    }

    /// Control points with weights folded in: `(w x, w y, w)`.
    pub(crate) fn homogeneous(&self) -> Vec<[T; 3]> {
        self.control
            .iter()
            .zip(&self.weights)
            .map(|(c, &w)| [c[0] * w, c[1] * w, w])
            .collect()
    }

    pub(crate) fn from_homogeneous(
        knot_u: KnotVector<T>,
        knot_v: KnotVector<T>,
        points: Vec<[T; 3]>,
    ) -> Result<Self> {
        let weights: Vec<T> = points.iter().map(|p| p[2]).collect();
        let control = points.iter().map(|p| [p[0] / p[2], p[1] / p[2]]).collect();
        Self::new(knot_u, knot_v, control, weights)
    }

    /// Physical corner points of the element spanning `[u0, u1] x [v0, v1]`
    /// in counter-clockwise parametric order.
    pub fn element_corners(&self, u: (T, T), v: (T, T)) -> Result<[[T; 2]; 4]> {
        Ok([
            self.point(u.0, v.0)?,
            self.point(u.1, v.0)?,
            self.point(u.1, v.1)?,
            self.point(u.0, v.1)?,
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_nets() {
        let ku = KnotVector::<f64>::uniform(1, 1).unwrap();
        let kv = ku.clone();
        let pts = vec![[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]];
        assert!(NurbsPatch::new(ku.clone(), kv.clone(), pts.clone(), vec![1.0; 3]).is_err());
        assert!(NurbsPatch::new(
            ku.clone(),
            kv.clone(),
            pts.clone(),
            vec![1.0, 1.0, 0.0, 1.0]
        )
        .is_err());
        assert!(NurbsPatch::new(ku, kv, pts, vec![1.0, 1.0, -2.0, 1.0]).is_err());
    }

    #[test]
    fn bilinear_patch_evaluates() {
        let ku = KnotVector::<f64>::uniform(1, 1).unwrap();
        let pts = vec![[0.0, 0.0], [2.0, 0.0], [0.0, 1.0], [2.0, 1.0]];
        let p = NurbsPatch::new(ku.clone(), ku, pts, vec![1.0; 4]).unwrap();
        let e = p.eval(0.25, 0.5).unwrap();
        assert!((e.point[0] - 0.5).abs() < 1e-15 && (e.point[1] - 0.5).abs() < 1e-15);
        assert!((e.jacobian[0][0] - 2.0).abs() < 1e-15);
        assert!((e.jacobian[1][1] - 1.0).abs() < 1e-15);
        assert_eq!(e.indices, vec![0, 1, 2, 3]);
    }
}
