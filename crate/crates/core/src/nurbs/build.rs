use super::knot::KnotVector;
use super::patch::NurbsPatch;
use crate::error::{Error, Result};
use crate::scalar::{lit, to_f64, Real};

/// Radius of the single-element circular patch.
pub const CIRCLE_RADIUS: f64 = 0.5;

/// Square `[0, a]^2` with `nel` uniform spans per direction.
///
/// Control points sit at the Greville abscissae, which makes the
/// parametric-to-physical map affine at every degree.
pub fn make_square_patch<T: Real>(a: T, degree: usize, nel: usize) -> Result<NurbsPatch<T>> {
    if !(a > T::zero()) {
        return Err(Error::Invalid(format!(
            "side length must be positive, got {}",
            to_f64(a)
        )));
    }
    let kv = KnotVector::uniform(degree, nel)?;
    let g = kv.greville();
    let n = g.len();
    let mut control = Vec::with_capacity(n * n);
    for j in 0..n {
        for i in 0..n {
            control.push([a * g[i], a * g[j]]);
        }
    }
    NurbsPatch::new(kv.clone(), kv, control, vec![T::one(); n * n])
}

/// Quadratic single-element disc of radius 0.5 centred at the origin.
///
/// The four parametric corners land on the circle at 45 degree positions;
/// edge midpoints carry weight `sqrt(2)/2`.
pub fn make_circle_patch<T: Real>() -> NurbsPatch<T> {
    let s2: T = lit::<T>(2.0).sqrt();
    let q = s2 / lit(4.0);
    let h = s2 / lit(2.0);
    let z = T::zero();
    let control = vec![
        [-q, q],
        [-h, z],
        [-q, -q],
        [z, h],
        [z, z],
        [z, -h],
        [q, q],
        [h, z],
        [q, -q],
    ];
    let one = T::one();
    let weights = vec![one, h, one, h, one, h, one, h, one];
    let kv = KnotVector::new(2, vec![z, z, z, one, one, one]).expect("static knot vector");
    NurbsPatch::new(kv.clone(), kv, control, weights).expect("static patch data")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_patch_shapes() {
        let p = make_square_patch(1.0f64, 2, 1).unwrap();
        assert_eq!((p.num_u(), p.num_v()), (3, 3));
        let p = make_square_patch(1.0f64, 4, 9).unwrap();
        assert_eq!((p.num_u(), p.num_v()), (13, 13));
        let p = make_square_patch(2.5f64, 3, 4).unwrap();
        let c0 = p.point(0.0, 0.0).unwrap();
        let c1 = p.point(1.0, 1.0).unwrap();
        assert_eq!(c0, [0.0, 0.0]);
        assert!((c1[0] - 2.5).abs() < 1e-15 && (c1[1] - 2.5).abs() < 1e-15);
        assert!(make_square_patch(0.0f64, 2, 2).is_err());
        assert!(make_square_patch(1.0f64, 2, 0).is_err());
    }

    #[test]
    fn square_map_is_affine() {
        let p = make_square_patch(3.0f64, 4, 5).unwrap();
        for &(xi, eta) in &[(0.13, 0.77), (0.5, 0.5), (0.91, 0.02)] {
            let e = p.eval(xi, eta).unwrap();
            assert!((e.point[0] - 3.0 * xi).abs() < 1e-14);
            assert!((e.point[1] - 3.0 * eta).abs() < 1e-14);
            assert!((e.jacobian[0][0] - 3.0).abs() < 1e-13);
            assert!(e.jacobian[0][1].abs() < 1e-13);
        }
    }

    #[test]
    fn circle_control_net() {
        let p = make_circle_patch::<f64>();
        let s = 2f64.sqrt();
        // table entries i = 2 and i = 5 (1-based, u index fastest)
        assert_eq!(p.control_points()[1], [-s / 2.0, 0.0]);
        assert_eq!(p.weights()[1], s / 2.0);
        assert_eq!(p.control_points()[4], [0.0, 0.0]);
        assert_eq!(p.weights()[4], 1.0);
        for &(xi, eta) in &[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (1.0, 1.0)] {
            let c = p.point(xi, eta).unwrap();
            assert!((c[0] * c[0] + c[1] * c[1] - 0.25).abs() < 1e-15);
        }
    }
}
