//! Brute-force integration of the 3D weak form for one element: strain and
//! displacement matrices are built at every point of a tensor Gauss grid in
//! (x, y, z) and `int B' C B dV`, `int rho N' N dV` are summed directly.

#![allow(dead_code)]

use std::f64::consts::PI;

use cuf_iga::assembly::{AssemblyOptions, PhysicalBasis, PlateModel};
use cuf_iga::laminate::{rotate_to_laminate, stiffness_3d, Layup};
use cuf_iga::nurbs::{KnotVector, NurbsPatch};
use cuf_iga::quadrature::gauss_on_interval;
use cuf_iga::theory::ThicknessExpansion;
use nalgebra::{DMatrix, Matrix6};

/// Thickness functions coded independently of the library: values and
/// derivatives of each family's list.
pub type Family = Vec<(Box<dyn Fn(f64) -> f64>, Box<dyn Fn(f64) -> f64>)>;

pub fn sinus_w2(h: f64) -> [Family; 3] {
    let inplane = || -> Family {
        vec![
            (Box::new(|_| 1.0), Box::new(|_| 0.0)),
            (Box::new(|z| z), Box::new(|_| 1.0)),
            (
                Box::new(move |z| (PI * z / h).sin()),
                Box::new(move |z| PI / h * (PI * z / h).cos()),
            ),
        ]
    };
    let w: Family = vec![
        (Box::new(|_| 1.0), Box::new(|_| 0.0)),
        (Box::new(|z| z), Box::new(|_| 1.0)),
        (Box::new(|z| z * z), Box::new(|z| 2.0 * z)),
    ];
    [inplane(), inplane(), w]
}

/// First-order in-plane, constant transverse: the FSDT-like truncation.
pub fn fsdt_like() -> [Family; 3] {
    let inplane = || -> Family {
        vec![
            (Box::new(|_| 1.0), Box::new(|_| 0.0)),
            (Box::new(|z| z), Box::new(|_| 1.0)),
        ]
    };
    [
        inplane(),
        inplane(),
        vec![(Box::new(|_| 1.0), Box::new(|_| 0.0))],
    ]
}

/// Parallelogram with unit weights: the integrands are polynomials, so the
/// library's `(p + 1)`-point rule is exact.
pub fn affine_element() -> NurbsPatch<f64> {
    let kv = KnotVector::uniform(2, 1).unwrap();
    let mut control = Vec::new();
    for eta in [0.0, 0.5, 1.0] {
        for xi in [0.0, 0.5, 1.0] {
            control.push([1.2 * xi + 0.3 * eta, 0.9 * eta]);
        }
    }
    NurbsPatch::new(kv.clone(), kv, control, vec![1.0; 9]).unwrap()
}

/// Curved edges and non-unit weights: rational integrands.
pub fn distorted_element() -> NurbsPatch<f64> {
    let kv = KnotVector::uniform(2, 1).unwrap();
    let control = vec![
        [0.0, 0.0],
        [0.55, -0.05],
        [1.1, 0.02],
        [-0.04, 0.5],
        [0.5, 0.52],
        [1.05, 0.47],
        [0.03, 0.95],
        [0.52, 1.02],
        [1.0, 1.0],
    ];
    let weights = vec![1.0, 0.9, 1.0, 1.1, 1.0, 0.85, 1.0, 0.95, 1.0];
    NurbsPatch::new(kv.clone(), kv, control, weights).unwrap()
}

pub struct Brute {
    pub k: DMatrix<f64>,
    pub m: DMatrix<f64>,
}

pub fn brute_force(patch: &NurbsPatch<f64>, layup: &Layup<f64>, families: &[Family; 3]) -> Brute {
    let lens: Vec<usize> = families.iter().map(|f| f.len()).collect();
    let per: usize = lens.iter().sum();
    let offsets = [0, lens[0], lens[0] + lens[1]];
    let npts = patch.num_control_points();
    let n = npts * per;
    let mut k = DMatrix::zeros(n, n);
    let mut m = DMatrix::zeros(n, n);
    let (xs, ws) = gauss_on_interval::<f64>(20, 0.0, 1.0);
    let e = cuf_iga::assembly::elements(patch)[0];
    for (iy, eta) in xs.iter().enumerate() {
        for (ix, xi) in xs.iter().enumerate() {
            let b = PhysicalBasis::at(patch, &e, *xi, *eta).unwrap();
            let da = ws[ix] * ws[iy] * b.det_jacobian;
            for (layer, ply) in layup.plies().iter().enumerate() {
                let (z0, z1) = (layup.interfaces()[layer], layup.interfaces()[layer + 1]);
                let c: Matrix6<f64> =
                    rotate_to_laminate(&stiffness_3d(&ply.lamina).unwrap(), ply.angle).full();
                let (zs, wz) = gauss_on_interval::<f64>(16, z0, z1);
                for (z, wzq) in zs.iter().zip(&wz) {
                    let mut bmat = DMatrix::<f64>::zeros(6, n);
                    let mut nmat = DMatrix::<f64>::zeros(3, n);
                    for (a, &point) in b.indices.iter().enumerate() {
                        let (r, rx, ry) = (b.values[a], b.dx[a], b.dy[a]);
                        for comp in 0..3 {
                            for (t, (f, df)) in families[comp].iter().enumerate() {
                                let col = point * per + offsets[comp] + t;
                                let (fz, dfz) = (f(*z), df(*z));
                                nmat[(comp, col)] = fz * r;
                                match comp {
                                    0 => {
                                        bmat[(0, col)] += fz * rx;
                                        bmat[(2, col)] += fz * ry;
                                        bmat[(3, col)] += dfz * r;
                                    }
                                    1 => {
                                        bmat[(1, col)] += fz * ry;
                                        bmat[(2, col)] += fz * rx;
                                        bmat[(4, col)] += dfz * r;
                                    }
                                    _ => {
                                        bmat[(3, col)] += fz * rx;
                                        bmat[(4, col)] += fz * ry;
                                        bmat[(5, col)] += dfz * r;
                                    }
                                }
                            }
                        }
                    }
                    let dv = da * wzq;
                    k += bmat.transpose() * c * &bmat * dv;
                    m += nmat.transpose() * &nmat * (ply.lamina.rho * dv);
                }
            }
        }
    }
    Brute { k, m }
}

/// Largest relative entry mismatch of the library's K and M against the
/// brute-force integration.
pub fn mismatch(
    patch: NurbsPatch<f64>,
    extra_points: usize,
    layup: Layup<f64>,
    expansion: ThicknessExpansion<f64>,
    families: [Family; 3],
) -> (f64, f64) {
    let options = AssemblyOptions {
        alpha: None,
        extra_points,
        ..Default::default()
    };
    let model = PlateModel::new(patch.clone(), layup.clone(), expansion, options).unwrap();
    let k = model.stiffness().unwrap();
    let m = model.mass().unwrap();
    let oracle = brute_force(&patch, &layup, &families);
    let ek = (&k - &oracle.k).amax() / oracle.k.amax();
    let em = (&m - &oracle.m).amax() / oracle.m.amax();
    (ek, em)
}
