use crate::error::{Error, Result};
use crate::scalar::{from_usize, to_f64, Real};

/// Open knot vector of a B-spline basis.
#[derive(Debug, Clone, PartialEq)]
pub struct KnotVector<T> {
    degree: usize,
    knots: Vec<T>,
}

/// Nonzero basis values and first derivatives at one parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisEval<T> {
    /// Index of the first nonzero basis function.
    pub first_index: usize,
    pub values: Vec<T>,
    pub derivs: Vec<T>,
}

/// A nonempty knot interval `[lo, hi)` with the index of its left knot.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Span<T> {
    pub index: usize,
    pub lo: T,
    pub hi: T,
}

impl<T: Real> KnotVector<T> {
    pub fn new(degree: usize, knots: Vec<T>) -> Result<Self> {
        if degree < 1 {
            return Err(Error::KnotVector("degree must be at least 1".into()));
        }
        if knots.len() < 2 * (degree + 1) {
            return Err(Error::KnotVector(format!(
                "{} knots cannot support {} basis functions of degree {degree}",
                knots.len(),
                degree + 1
            )));
        }
        if knots.iter().any(|k| !k.is_finite()) {
            return Err(Error::KnotVector("knots must be finite".into()));
        }
        if knots.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::KnotVector("knots must be non-decreasing".into()));
        }
        let first = knots[0];
        let last = knots[knots.len() - 1];
        if !(first < last) {
            return Err(Error::KnotVector("knot range is empty".into()));
        }
        let lead = knots.iter().take_while(|&&k| k == first).count();
        let trail = knots.iter().rev().take_while(|&&k| k == last).count();
        if lead != degree + 1 || trail != degree + 1 {
            return Err(Error::KnotVector(format!(
                "end knots must be repeated exactly {} times (found {lead} and {trail})",
                degree + 1
            )));
        }
        let kv = Self { degree, knots };
        for k in &kv.knots[degree + 1..kv.knots.len() - degree - 1] {
            let m = kv.multiplicity(*k);
            if m > degree {
                return Err(Error::KnotVector(format!(
                    "interior knot {} has multiplicity {m} > degree {degree}",
                    to_f64(*k)
                )));
            }
        }
        Ok(kv)
    }

    /// Open uniform knot vector on `[0, 1]` with `spans` equal intervals.
    pub fn uniform(degree: usize, spans: usize) -> Result<Self> {
        if spans == 0 {
            return Err(Error::KnotVector("at least one span is required".into()));
        }
        let mut knots = vec![T::zero(); degree + 1];
        let n = from_usize::<T>(spans);
        knots.extend((1..spans).map(|i| from_usize::<T>(i) / n));
        knots.extend(std::iter::repeat_n(T::one(), degree + 1));
        Self::new(degree, knots)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn knots(&self) -> &[T] {
        &self.knots
    }

    /// Number of basis functions.
    pub fn num_basis(&self) -> usize {
        self.knots.len() - self.degree - 1
    }

    pub fn first(&self) -> T {
        self.knots[0]
    }

    pub fn last(&self) -> T {
        self.knots[self.knots.len() - 1]
    }

    pub fn multiplicity(&self, value: T) -> usize {
        self.knots.iter().filter(|&&k| k == value).count()
    }

    /// Distinct knot values in increasing order.
    pub fn distinct(&self) -> Vec<T> {
        let mut out: Vec<T> = Vec::new();
        for &k in &self.knots {
            if out.last() != Some(&k) {
                out.push(k);
            }
        }
        out
    }

    /// The nonempty knot spans, i.e. the elements along this direction.
    pub fn spans(&self) -> Vec<Span<T>> {
        (self.degree..self.num_basis())
            .filter(|&i| self.knots[i] < self.knots[i + 1])
            .map(|i| Span {
                index: i,
                lo: self.knots[i],
                hi: self.knots[i + 1],
            })
            .collect()
    }

    /// Greville abscissae, one per basis function.
    pub fn greville(&self) -> Vec<T> {
        let p = from_usize::<T>(self.degree);
        (0..self.num_basis())
            .map(|i| {
                self.knots[i + 1..=i + self.degree]
                    .iter()
                    .fold(T::zero(), |a, &k| a + k)
                    / p
            })
            .collect()
    }

    fn check_domain(&self, xi: T) -> Result<()> {
        if xi < self.first() || xi > self.last() || !xi.is_finite() {
            return Err(Error::Domain {
                value: to_f64(xi),
                lo: to_f64(self.first()),
                hi: to_f64(self.last()),
            });
        }
        Ok(())
    }

    /// Index `i` with `knots[i] <= xi < knots[i + 1]`; the right end of the
    /// domain belongs to the last nonempty span.
    pub fn find_span(&self, xi: T) -> Result<usize> {
        self.check_domain(xi)?;
        let n = self.num_basis();
        if xi >= self.knots[n] {
            return Ok(n - 1);
        }
        let (mut lo, mut hi) = (self.degree, n);
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if xi < self.knots[mid] {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok(lo)
    }

    /// Nonzero basis functions and their first derivatives at `xi`.
    pub fn eval_basis(&self, xi: T) -> Result<BasisEval<T>> {
        let span = self.find_span(xi)?;
        Ok(self.eval_in_span(span, xi))
    }

    /// Triangular-table evaluation of the degree-`p` functions supported on
    /// `span`, with derivatives from the degree `p - 1` row.
    pub(crate) fn eval_in_span(&self, span: usize, xi: T) -> BasisEval<T> {
        let p = self.degree;
        let u = &self.knots;
        let mut left = vec![T::zero(); p + 1];
        let mut right = vec![T::zero(); p + 1];
        // ndu[j][r]: basis values (upper triangle) and knot differences (lower)
        let mut ndu = vec![vec![T::zero(); p + 1]; p + 1];
        ndu[0][0] = T::one();
        for j in 1..=p {
            left[j] = xi - u[span + 1 - j];
            right[j] = u[span + j] - xi;
            let mut saved = T::zero();
            for r in 0..j {
                ndu[j][r] = right[r + 1] + left[j - r];
                let temp = if ndu[j][r] == T::zero() {
                    T::zero()
                } else {
                    ndu[r][j - 1] / ndu[j][r]
                };
                ndu[r][j] = saved + right[r + 1] * temp;
                saved = left[j - r] * temp;
            }
            ndu[j][j] = saved;
        }
        let values: Vec<T> = (0..=p).map(|j| ndu[j][p]).collect();

        let pf = from_usize::<T>(p);
        let mut derivs = vec![T::zero(); p + 1];
        for (r, d) in derivs.iter_mut().enumerate() {
            let mut acc = T::zero();
            if r >= 1 {
                let denom = ndu[p][r - 1];
                if denom != T::zero() {
                    acc += ndu[r - 1][p - 1] / denom;
                }
            }
            if r < p {
                let denom = ndu[p][r];
                if denom != T::zero() {
                    acc -= ndu[r][p - 1] / denom;
                }
            }
            *d = acc * pf;
        }
        BasisEval {
            first_index: span - p,
            values,
            derivs,
        }
    }
}
