//! Gauss–Legendre rules.

use crate::scalar::{from_usize, lit, Real};

/// Points and weights of the `n`-point Gauss–Legendre rule on `[-1, 1]`.
///
/// Nodes are found by Newton iteration on the Legendre recurrence, so the
/// rule is accurate to working precision for any `n`.
pub fn gauss_legendre<T: Real>(n: usize) -> (Vec<T>, Vec<T>) {
    assert!(n >= 1, "quadrature order must be positive");
    let mut points = vec![T::zero(); n];
    let mut weights = vec![T::zero(); n];
    let nf = from_usize::<T>(n);
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi initial guess, descending order
        let guess = (T::pi() * (from_usize::<T>(i) + lit(0.75)) / (nf + lit(0.5))).cos();
        let mut x = guess;
        let mut dp = T::one();
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() <= T::default_epsilon() * lit(4.0) {
                let (_, d) = legendre_with_derivative(n, x);
                dp = d;
                break;
            }
        }
        let w = lit::<T>(2.0) / ((T::one() - x * x) * dp * dp);
        points[i] = -x;
        points[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        points[n / 2] = T::zero();
    }
    (points, weights)
}

fn legendre_with_derivative<T: Real>(n: usize, x: T) -> (T, T) {
    let mut p0 = T::one();
    let mut p1 = x;
    for k in 2..=n {
        let kf = from_usize::<T>(k);
        let p2 = ((lit::<T>(2.0) * kf - T::one()) * x * p1 - (kf - T::one()) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let nf = from_usize::<T>(n);
    let p = if n == 0 { p0 } else { p1 };
    let d = nf * (x * p1 - p0) / (x * x - T::one());
    (p, d)
}

/// Gauss rule mapped to `[a, b]`, weights include the interval Jacobian.
pub fn gauss_on_interval<T: Real>(n: usize, a: T, b: T) -> (Vec<T>, Vec<T>) {
    let (xs, ws) = gauss_legendre::<T>(n);
    let half = (b - a) * lit(0.5);
    let mid = (a + b) * lit(0.5);
    (
        xs.iter().map(|&x| mid + half * x).collect(),
        ws.iter().map(|&w| w * half).collect(),
    )
}
