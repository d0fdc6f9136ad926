//! Knot insertion and degree elevation. Both act on homogeneous control
//! points one parametric row at a time and leave the geometry unchanged.

use nalgebra::{DMatrix, DVector};

use super::knot::KnotVector;
use super::patch::{Direction, NurbsPatch};
use crate::error::{Error, Result};
use crate::scalar::{from_usize, to_f64, Real};

impl<T: Real> NurbsPatch<T> {
    /// Inserts `xi` once into the knot vector of `dir`.
    pub fn insert_knot(&self, dir: Direction, xi: T) -> Result<Self> {
        let kv = self.knots(dir);
        if !(xi > kv.first() && xi < kv.last()) {
            return Err(Error::Refinement(format!(
                "knot {} is not strictly inside ({}, {})",
                to_f64(xi),
                to_f64(kv.first()),
                to_f64(kv.last())
            )));
        }
        let p = kv.degree();
        let mult = kv.multiplicity(xi);
        if mult + 1 > p {
            return Err(Error::Refinement(format!(
                "inserting {} would raise its multiplicity to {} > degree {p}",
                to_f64(xi),
                mult + 1
            )));
        }
        let k = kv.find_span(xi)?;
        let old = kv.knots();
        let mut knots = old.to_vec();
        knots.insert(k + 1, xi);
        let new_kv = KnotVector::new(p, knots)?;

        let alphas: Vec<T> = (0..kv.num_basis() + 1)
            .map(|i| {
                if i + p <= k {
                    T::one()
                } else if i > k {
                    T::zero()
                } else {
                    (xi - old[i]) / (old[i + p] - old[i])
                }
            })
            .collect();
        let new_row = |row: &[[T; 3]]| -> Vec<[T; 3]> {
            (0..row.len() + 1)
                .map(|i| {
                    let a = alphas[i];
                    let cur = if i < row.len() {
                        row[i]
                    } else {
                        [T::zero(); 3]
                    };
                    let prev = if i > 0 { row[i - 1] } else { [T::zero(); 3] };
                    if a == T::one() {
                        cur
                    } else if a == T::zero() {
                        prev
                    } else {
                        let b = T::one() - a;
                        [
                            a * cur[0] + b * prev[0],
                            a * cur[1] + b * prev[1],
                            a * cur[2] + b * prev[2],
                        ]
                    }
                })
                .collect()
        };
        self.map_rows(dir, new_kv, new_row)
    }

    /// Inserts every knot of `values` (in order) along `dir`.
    pub fn insert_knots(&self, dir: Direction, values: &[T]) -> Result<Self> {
        values
            .iter()
            .try_fold(self.clone(), |p, &x| p.insert_knot(dir, x))
    }

    /// Subdivides every existing span of both directions uniformly so that the
    /// patch has `spans` equal-width elements per direction on `[0, 1]`.
    ///
    /// Existing interior knots must lie on the target grid.
    pub fn refine_uniform(&self, spans: usize) -> Result<Self> {
        let mut out = self.clone();
        for dir in [Direction::U, Direction::V] {
            let kv = out.knots(dir).clone();
            let (lo, hi) = (kv.first(), kv.last());
            let n = from_usize::<T>(spans);
            let mut new = Vec::new();
            for i in 1..spans {
                let x = lo + (hi - lo) * from_usize::<T>(i) / n;
                if kv.multiplicity(x) == 0 {
                    new.push(x);
                }
            }
            out = out.insert_knots(dir, &new)?;
            if out.knots(dir).spans().len() != spans {
                return Err(Error::Refinement(format!(
                    "existing knots are not compatible with {spans} uniform spans"
                )));
            }
        }
        Ok(out)
    }

    /// Raises the degree along `dir` by `times`, keeping the continuity at
    /// every interior knot.
    ///
    /// The elevated space contains the original one, so the new control
    /// points are recovered exactly by interpolating the homogeneous curve
    /// at the Greville abscissae of the elevated basis.
    pub fn elevate_degree(&self, dir: Direction, times: usize) -> Result<Self> {
        if times == 0 {
            return Err(Error::Refinement(
                "elevation count must be at least 1".into(),
            ));
        }
        let kv = self.knots(dir).clone();
        let p = kv.degree();
        let q = p + times;
        let mut knots = Vec::new();
        for x in kv.distinct() {
            let m = kv.multiplicity(x) + times;
            knots.extend(std::iter::repeat_n(x, m));
        }
        let new_kv = KnotVector::new(q, knots)?;
        let g = new_kv.greville();
        let n_new = new_kv.num_basis();

        let mut collocation = DMatrix::<T>::zeros(n_new, n_new);
        let mut old_basis = Vec::with_capacity(n_new);
        for (r, &x) in g.iter().enumerate() {
            let b = new_kv.eval_basis(x)?;
            for (a, v) in b.values.iter().enumerate() {
                collocation[(r, b.first_index + a)] = *v;
            }
            old_basis.push(kv.eval_basis(x)?);
        }
        let lu = collocation.lu();
        if lu.determinant() == T::zero() {
            return Err(Error::Refinement("singular collocation system".into()));
        }
        let new_row = |row: &[[T; 3]]| -> Vec<[T; 3]> {
            let mut out = vec![[T::zero(); 3]; n_new];
            for c in 0..3 {
                let rhs = DVector::from_iterator(
                    n_new,
                    old_basis.iter().map(|b| {
                        b.values.iter().enumerate().fold(T::zero(), |acc, (a, v)| {
                            acc + *v * row[b.first_index + a][c]
                        })
                    }),
                );
                let sol = lu.solve(&rhs).expect("nonsingular collocation");
                for i in 0..n_new {
                    out[i][c] = sol[i];
                }
            }
            out
        };
        self.map_rows(dir, new_kv, new_row)
    }

    fn map_rows<F>(&self, dir: Direction, new_kv: KnotVector<T>, f: F) -> Result<Self>
    where
        F: Fn(&[[T; 3]]) -> Vec<[T; 3]>,
    {
        let hom = self.homogeneous();
        let (nu, nv) = (self.num_u(), self.num_v());
        match dir {
            Direction::U => {
                let n_new = new_kv.num_basis();
                let mut pts = vec![[T::zero(); 3]; n_new * nv];
                for j in 0..nv {
                    let row = f(&hom[j * nu..(j + 1) * nu]);
                    pts[j * n_new..(j + 1) * n_new].copy_from_slice(&row);
                }
                NurbsPatch::from_homogeneous(new_kv, self.knot_v().clone(), pts)
            }
            Direction::V => {
                let n_new = new_kv.num_basis();
                let mut pts = vec![[T::zero(); 3]; nu * n_new];
                for i in 0..nu {
                    let col: Vec<[T; 3]> = (0..nv).map(|j| hom[j * nu + i]).collect();
                    for (j, p) in f(&col).into_iter().enumerate() {
                        pts[j * nu + i] = p;
                    }
                }
                NurbsPatch::from_homogeneous(self.knot_u().clone(), new_kv, pts)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{make_circle_patch, make_square_patch};
    use super::*;

    fn max_geometry_gap(a: &NurbsPatch<f64>, b: &NurbsPatch<f64>, n: usize) -> f64 {
        let mut gap = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let (xi, eta) = (i as f64 / (n - 1) as f64, j as f64 / (n - 1) as f64);
                let pa = a.point(xi, eta).unwrap();
                let pb = b.point(xi, eta).unwrap();
                gap = gap.max((pa[0] - pb[0]).abs()).max((pa[1] - pb[1]).abs());
            }
        }
        gap
    }

    #[test]
    fn single_insertion_preserves_geometry() {
        let p = make_circle_patch::<f64>();
        let r = p.insert_knot(Direction::U, 0.5).unwrap();
        assert_eq!(r.knot_u().knots(), &[0., 0., 0., 0.5, 1., 1., 1.]);
        assert_eq!((r.num_u(), r.num_v()), (4, 3));
        assert!(max_geometry_gap(&p, &r, 21) < 1e-12);
        let r = r.insert_knot(Direction::V, 0.3).unwrap();
        assert_eq!((r.num_u(), r.num_v()), (4, 4));
        assert!(max_geometry_gap(&p, &r, 21) < 1e-12);
    }

    #[test]
    fn multiplicity_limit() {
        let p = make_square_patch(1.0f64, 2, 1).unwrap();
        let r = p.insert_knot(Direction::U, 0.5).unwrap();
        let r = r.insert_knot(Direction::U, 0.5).unwrap();
        assert!(matches!(
            r.insert_knot(Direction::U, 0.5),
            Err(Error::Refinement(_))
        ));
        assert!(p.insert_knot(Direction::U, 0.0).is_err());
        assert!(p.insert_knot(Direction::V, 1.2).is_err());
    }

    #[test]
    fn uniform_refinement_matches_direct_construction() {
        let coarse = make_square_patch(2.0f64, 3, 1).unwrap();
        let fine = coarse.refine_uniform(9).unwrap();
        let direct = make_square_patch(2.0f64, 3, 9).unwrap();
        assert_eq!(fine.num_u(), 12);
        for (a, b) in fine.knot_u().knots().iter().zip(direct.knot_u().knots()) {
            assert!((a - b).abs() < 1e-15);
        }
        for (a, b) in fine.control_points().iter().zip(direct.control_points()) {
            assert!((a[0] - b[0]).abs() < 1e-13 && (a[1] - b[1]).abs() < 1e-13);
        }
    }

    #[test]
    fn elevation_preserves_geometry() {
        let p = make_square_patch(1.0f64, 2, 1).unwrap();
        let e = p
            .elevate_degree(Direction::U, 1)
            .unwrap()
            .elevate_degree(Direction::V, 1)
            .unwrap();
        assert_eq!(e.knot_u().degree(), 3);
        assert!(max_geometry_gap(&p, &e, 5) < 1e-12);

        let c = make_circle_patch::<f64>();
        let e = c
            .elevate_degree(Direction::U, 2)
            .unwrap()
            .elevate_degree(Direction::V, 1)
            .unwrap();
        assert_eq!((e.knot_u().degree(), e.knot_v().degree()), (4, 3));
        assert!(max_geometry_gap(&c, &e, 25) < 1e-12);

        // interior knots keep their continuity
        let c2 = c
            .refine_uniform(3)
            .unwrap()
            .elevate_degree(Direction::U, 1)
            .unwrap();
        assert_eq!(c2.knot_u().multiplicity(1.0 / 3.0), 2);
        assert!(max_geometry_gap(&c, &c2, 25) < 1e-12);
        assert!(c.elevate_degree(Direction::U, 0).is_err());
    }
}
