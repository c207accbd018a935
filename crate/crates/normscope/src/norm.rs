//! Vectors, norm families, norm evaluation and norm-axiom residual checks.
//!
//! A [`NormSpec`] describes one concrete norm: a p-norm, a weighted p-norm,
//! the square root of a positive-definite quadratic form, or the gauge
//! (Minkowski functional) of a centrally symmetric convex polygon in the
//! plane. All analysis code works against the [`Norm`] trait so that
//! 2-dimensional restrictions of higher-dimensional norms can reuse the same
//! machinery.

use crate::matrix::Matrix;
use crate::rng::SplitMix64;
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Index, Neg, Sub};
use thiserror::Error;

/// Largest supported ambient dimension.
pub const MAX_DIM: usize = 8;

/// Below this norm a vector counts as zero.
pub const ZERO_TOL: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NormError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("dimension {dim} outside supported range 1..={max}", max = MAX_DIM)]
    DimensionOutOfRange { dim: usize },
    #[error("non-finite coordinate {value} at index {index}")]
    NonFiniteCoordinate { index: usize, value: f64 },
    #[error("p-norm exponent must be >= 1, got {p}")]
    ExponentTooSmall { p: f64 },
    #[error("weight {value} at index {index} is not positive")]
    NonPositiveWeight { index: usize, value: f64 },
    #[error("quadratic form is not symmetric: max entry asymmetry {asymmetry:.3e}")]
    NotSymmetric { asymmetry: f64 },
    #[error("quadratic form is not positive definite: leading minor {index} is {value:.3e}")]
    NotPositiveDefinite { index: usize, value: f64 },
    #[error("polytope vertices span less than two dimensions")]
    DegeneratePolytope,
    #[error("vector norm {norm:.3e} is too close to zero to normalize")]
    NearZeroVector { norm: f64 },
    #[error("rational scaling check requires nonzero denominators k and n")]
    ZeroDenominator,
    #[error("lattice base pair has residual {residual:.3e}, above the {limit:.1e} hypothesis limit")]
    BaseResidualTooLarge { residual: f64, limit: f64 },
    #[error("vector {which} must have unit norm, got {norm}")]
    NotUnit { which: &'static str, norm: f64 },
    #[error("operation requires dimension {required}, norm has dimension {got}")]
    WrongDimension { required: usize, got: usize },
    #[error("basis vectors are linearly dependent (gram determinant {det:.3e})")]
    DependentBasis { det: f64 },
    #[error("subspace is not euclidean (deviation {deviation:.3e}); cannot build a support frame")]
    SubspaceNotEuclidean { deviation: f64 },
    #[error("support plane refinement stalled at defect {defect:.3e}")]
    SupportRefinementFailed { defect: f64 },
    #[error("rendering a norm of dimension {dim} needs a 2D section; pass --section i,j")]
    SectionRequired { dim: usize },
    #[error("section indices ({i},{j}) invalid for dimension {dim}")]
    BadSection { i: usize, j: usize, dim: usize },
    #[error("witness quadruple has dimension {dim}; only 2D witnesses can be drawn")]
    WitnessNotPlanar { dim: usize },
}

/// Element of the ambient space: an ordered tuple of finite coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector {
    coords: Vec<f64>,
}

impl Vector {
    /// Validates length (1..=[`MAX_DIM`]) and finiteness of every coordinate.
    pub fn new(coords: Vec<f64>) -> Result<Self, NormError> {
        if coords.is_empty() || coords.len() > MAX_DIM {
            return Err(NormError::DimensionOutOfRange { dim: coords.len() });
        }
        for (index, &value) in coords.iter().enumerate() {
            if !value.is_finite() {
                return Err(NormError::NonFiniteCoordinate { index, value });
            }
        }
        Ok(Self { coords })
    }

    pub fn from_slice(coords: &[f64]) -> Result<Self, NormError> {
        Self::new(coords.to_vec())
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            coords: vec![0.0; dim],
        }
    }

    /// Standard basis vector `i` of dimension `dim`.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.coords[i] = 1.0;
        v
    }

    pub(crate) fn from_coords_unchecked(coords: Vec<f64>) -> Self {
        Self { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.coords
    }

    pub fn scale(&self, t: f64) -> Vector {
        Vector {
            coords: self.coords.iter().map(|c| c * t).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0.0)
    }

    /// Plain euclidean dot product of the coordinate tuples.
    pub fn dot(&self, other: &Vector) -> f64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }
}

/// Convenience constructor for 2D vectors; panics on non-finite input.
pub fn vec2(x: f64, y: f64) -> Vector {
    Vector::new(vec![x, y]).expect("invalid 2D vector")
}

/// Convenience constructor for 3D vectors; panics on non-finite input.
pub fn vec3(x: f64, y: f64, z: f64) -> Vector {
    Vector::new(vec![x, y, z]).expect("invalid 3D vector")
}

impl Index<usize> for Vector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.coords[i]
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        Vector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        Vector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        self.scale(-1.0)
    }
}

impl Serialize for Vector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coords.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Vector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let coords: Vec<f64> = Vec::deserialize(deserializer)?;
        Vector::new(coords).map_err(D::Error::custom)
    }
}

/// Exponent of a p-norm: a finite `p >= 1` or the max-norm tag.
///
/// Infinity is a distinct tag rather than a large float, so evaluation is an
/// exact coordinate maximum with no overflow.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PExponent {
    Finite(f64),
    Infinity,
}

impl PExponent {
    fn validate(self) -> Result<Self, NormError> {
        match self {
            PExponent::Finite(p) if !(p.is_finite() && p >= 1.0) => {
                Err(NormError::ExponentTooSmall { p })
            }
            other => Ok(other),
        }
    }
}

impl fmt::Display for PExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PExponent::Finite(p) => write!(f, "{p}"),
            PExponent::Infinity => write!(f, "inf"),
        }
    }
}

/// Tagged descriptor of a norm family plus its parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum NormFamily {
    PNorm {
        p: PExponent,
    },
    WeightedPNorm {
        p: PExponent,
        weights: Vec<f64>,
    },
    Quadratic {
        form: Matrix,
    },
    /// Gauge of a centrally symmetric convex polygon; `hull` is the vertex
    /// cycle in counterclockwise order, symmetrized at construction.
    PolytopeGauge2D {
        hull: Vec<[f64; 2]>,
    },
}

/// The object under analysis: a norm family pinned to an ambient dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct NormSpec {
    family: NormFamily,
    dim: usize,
}

impl NormSpec {
    pub fn p_norm(p: PExponent, dim: usize) -> Result<Self, NormError> {
        check_dim(dim)?;
        Ok(Self {
            family: NormFamily::PNorm { p: p.validate()? },
            dim,
        })
    }

    /// Weighted p-norm `(sum w_i |x_i|^p)^(1/p)`; every weight must be positive.
    pub fn weighted_p_norm(p: PExponent, weights: Vec<f64>) -> Result<Self, NormError> {
        check_dim(weights.len())?;
        for (index, &value) in weights.iter().enumerate() {
            if !(value.is_finite() && value > 0.0) {
                return Err(NormError::NonPositiveWeight { index, value });
            }
        }
        let dim = weights.len();
        Ok(Self {
            family: NormFamily::WeightedPNorm {
                p: p.validate()?,
                weights,
            },
            dim,
        })
    }

    /// Norm `sqrt(x^T A x)` of a symmetric positive-definite form.
    pub fn quadratic(form: Matrix) -> Result<Self, NormError> {
        check_dim(form.dim())?;
        let asymmetry = form.asymmetry();
        if asymmetry > 1e-12 {
            return Err(NormError::NotSymmetric { asymmetry });
        }
        for (i, minor) in form.leading_principal_minors().into_iter().enumerate() {
            if minor <= 0.0 {
                return Err(NormError::NotPositiveDefinite {
                    index: i + 1,
                    value: minor,
                });
            }
        }
        let dim = form.dim();
        Ok(Self {
            family: NormFamily::Quadratic { form },
            dim,
        })
    }

    /// Gauge of the convex hull of `vertices` united with their negatives.
    ///
    /// The input need not be symmetric or hull-ordered; symmetrization and
    /// hull extraction happen here. Fails if the symmetrized set is collinear
    /// (the hull would have empty interior).
    pub fn polytope_gauge_2d(vertices: &[(f64, f64)]) -> Result<Self, NormError> {
        if vertices.is_empty() {
            return Err(NormError::DegeneratePolytope);
        }
        let mut points = Vec::with_capacity(vertices.len() * 2);
        for &(x, y) in vertices {
            if !x.is_finite() {
                return Err(NormError::NonFiniteCoordinate { index: 0, value: x });
            }
            if !y.is_finite() {
                return Err(NormError::NonFiniteCoordinate { index: 1, value: y });
            }
            points.push([x, y]);
            points.push([-x, -y]);
        }
        let hull = convex_hull(points);
        if hull.len() < 3 {
            return Err(NormError::DegeneratePolytope);
        }
        Ok(Self {
            family: NormFamily::PolytopeGauge2D { hull },
            dim: 2,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn family(&self) -> &NormFamily {
        &self.family
    }

    /// Norm value of `x`; checked variant of [`Norm::value`].
    pub fn eval(&self, x: &Vector) -> Result<f64, NormError> {
        if x.dim() != self.dim {
            return Err(NormError::DimensionMismatch {
                expected: self.dim,
                got: x.dim(),
            });
        }
        Ok(self.value_unchecked(x.as_slice()))
    }

    fn value_unchecked(&self, x: &[f64]) -> f64 {
        match &self.family {
            NormFamily::PNorm { p } => p_norm_value(*p, x, None),
            NormFamily::WeightedPNorm { p, weights } => p_norm_value(*p, x, Some(weights)),
            NormFamily::Quadratic { form } => form.quadratic_form(x).max(0.0).sqrt(),
            NormFamily::PolytopeGauge2D { hull } => polytope_gauge(hull, x[0], x[1]),
        }
    }
}

fn check_dim(dim: usize) -> Result<(), NormError> {
    if dim == 0 || dim > MAX_DIM {
        return Err(NormError::DimensionOutOfRange { dim });
    }
    Ok(())
}

fn p_norm_value(p: PExponent, x: &[f64], weights: Option<&[f64]>) -> f64 {
    let weight = |i: usize| weights.map_or(1.0, |w| w[i]);
    match p {
        PExponent::Infinity => x
            .iter()
            .enumerate()
            .map(|(i, c)| weight(i) * c.abs())
            .fold(0.0, f64::max),
        PExponent::Finite(p) if p == 1.0 => {
            x.iter().enumerate().map(|(i, c)| weight(i) * c.abs()).sum()
        }
        PExponent::Finite(p) if p == 2.0 => x
            .iter()
            .enumerate()
            .map(|(i, c)| weight(i) * c * c)
            .sum::<f64>()
            .sqrt(),
        PExponent::Finite(p) => x
            .iter()
            .enumerate()
            .map(|(i, c)| weight(i) * c.abs().powf(p))
            .sum::<f64>()
            .powf(1.0 / p),
    }
}

/// Minkowski gauge of a convex CCW polygon containing the origin:
/// `min { t > 0 : x/t in hull }`, computed by intersecting the ray through
/// `x` with each edge. The direction is max-normalized first so the edge
/// intersection solve is well scaled for arbitrarily small inputs.
fn polytope_gauge(hull: &[[f64; 2]], x: f64, y: f64) -> f64 {
    let m = x.abs().max(y.abs());
    if m == 0.0 {
        return 0.0;
    }
    let (ux, uy) = (x / m, y / m);
    let mut best_lambda: Option<f64> = None;
    for i in 0..hull.len() {
        let a = hull[i];
        let b = hull[(i + 1) % hull.len()];
        let (dx, dy) = (b[0] - a[0], b[1] - a[1]);
        // a + u*(b-a) = lambda*(ux,uy), solved by Cramer's rule.
        let det = dx * (-uy) - (-ux) * dy;
        if det.abs() < 1e-14 {
            continue;
        }
        let u = ((-a[0]) * (-uy) - (-ux) * (-a[1])) / det;
        let lambda = (dx * (-a[1]) - (-a[0]) * dy) / det;
        if (-1e-12..=1.0 + 1e-12).contains(&u) && lambda > 0.0 {
            best_lambda = Some(best_lambda.map_or(lambda, |cur: f64| cur.max(lambda)));
        }
    }
    let lambda = best_lambda.expect("gauge ray missed polytope boundary; hull invariant broken");
    m / lambda
}

/// Andrew's monotone chain; returns the hull in CCW order with collinear
/// points dropped.
fn convex_hull(mut points: Vec<[f64; 2]>) -> Vec<[f64; 2]> {
    points.sort_by(|a, b| a.partial_cmp(b).expect("finite coordinates"));
    points.dedup();
    if points.len() <= 2 {
        return points;
    }
    let cross = |o: [f64; 2], a: [f64; 2], b: [f64; 2]| {
        (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    };
    let mut lower: Vec<[f64; 2]> = Vec::new();
    for &p in &points {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<[f64; 2]> = Vec::new();
    for &p in points.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Norm evaluation interface shared by [`NormSpec`] and subspace restrictions.
pub trait Norm {
    fn dim(&self) -> usize;

    /// Norm of `x`. Panics if `x.dim() != self.dim()`; use the checked
    /// entry points when the dimension is not already established.
    fn value(&self, x: &Vector) -> f64;
}

impl Norm for NormSpec {
    fn dim(&self) -> usize {
        self.dim
    }

    fn value(&self, x: &Vector) -> f64 {
        assert_eq!(x.dim(), self.dim, "norm evaluated at wrong dimension");
        self.value_unchecked(x.as_slice())
    }
}

impl<N: Norm + ?Sized> Norm for &N {
    fn dim(&self) -> usize {
        (**self).dim()
    }
    fn value(&self, x: &Vector) -> f64 {
        (**self).value(x)
    }
}

/// Checked norm evaluation; exactly zero only on the zero vector
/// (up to underflow).
pub fn eval_norm(spec: &NormSpec, x: &Vector) -> Result<f64, NormError> {
    spec.eval(x)
}

/// `x` divided by its norm; the result has norm 1 up to roundoff.
pub fn gauge_normalize<N: Norm + ?Sized>(norm: &N, x: &Vector) -> Result<Vector, NormError> {
    let n = norm.value(x);
    if n <= ZERO_TOL {
        return Err(NormError::NearZeroVector { norm: n });
    }
    Ok(x.scale(1.0 / n))
}

/// Worst observed violations of the three norm axioms over a seeded sample.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormAxiomResiduals {
    /// max |(norm of a*x) - |a| * (norm of x)|
    pub homogeneity: f64,
    /// max positive part of |x+y| - |x| - |y|
    pub triangle: f64,
    /// max positive part of ZERO_TOL - |x| over nonzero samples
    pub positivity: f64,
}

/// Samples `sample_count` configurations with coordinates in [-1,1] and
/// scalars in [-2,2], deterministically in `seed`.
pub fn norm_axiom_residuals<N: Norm + ?Sized>(
    norm: &N,
    sample_count: usize,
    seed: u64,
) -> NormAxiomResiduals {
    assert!(sample_count >= 1, "sample_count must be at least 1");
    let dim = norm.dim();
    let mut rng = SplitMix64::new(seed);
    let mut out = NormAxiomResiduals {
        homogeneity: 0.0,
        triangle: 0.0,
        positivity: 0.0,
    };
    for _ in 0..sample_count {
        let x = random_vector(&mut rng, dim);
        let y = random_vector(&mut rng, dim);
        let a = rng.uniform(-2.0, 2.0);
        let nx = norm.value(&x);
        out.homogeneity = out
            .homogeneity
            .max((norm.value(&x.scale(a)) - a.abs() * nx).abs());
        out.triangle = out
            .triangle
            .max((norm.value(&(&x + &y)) - nx - norm.value(&y)).max(0.0));
        if !x.is_zero() {
            out.positivity = out.positivity.max((ZERO_TOL - nx).max(0.0));
        }
    }
    out
}

fn random_vector(rng: &mut SplitMix64, dim: usize) -> Vector {
    Vector::from_coords_unchecked((0..dim).map(|_| rng.uniform(-1.0, 1.0)).collect())
}

/// Residual of the exact homogeneity identity
/// `|(j/k) p + (m/n) q| = |1/(kn)| * |jn p + km q|`,
/// which holds for every norm and all integer j, k, m, n with k, n nonzero.
/// The returned value is float noise only.
pub fn rational_scaling_check<N: Norm + ?Sized>(
    norm: &N,
    p: &Vector,
    q: &Vector,
    j: i64,
    k: i64,
    m: i64,
    n: i64,
) -> Result<f64, NormError> {
    if k == 0 || n == 0 {
        return Err(NormError::ZeroDenominator);
    }
    if p.dim() != norm.dim() || q.dim() != norm.dim() {
        return Err(NormError::DimensionMismatch {
            expected: norm.dim(),
            got: if p.dim() != norm.dim() { p.dim() } else { q.dim() },
        });
    }
    let (jf, kf, mf, nf) = (j as f64, k as f64, m as f64, n as f64);
    let lhs = norm.value(&(&p.scale(jf / kf) + &q.scale(mf / nf)));
    let rhs = (1.0 / (kf * nf)).abs() * norm.value(&(&p.scale(jf * nf) + &q.scale(kf * mf)));
    Ok((lhs - rhs).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(coords: &[f64]) -> Vector {
        Vector::from_slice(coords).unwrap()
    }

    pub(crate) fn hexagon() -> NormSpec {
        NormSpec::polytope_gauge_2d(&[(1.0, 0.0), (0.5, 0.75), (0.5, -0.75)]).unwrap()
    }

    #[test]
    fn p1_norm_of_3_4_is_7() {
        let spec = NormSpec::p_norm(PExponent::Finite(1.0), 2).unwrap();
        assert_eq!(spec.eval(&v(&[3.0, 4.0])).unwrap(), 7.0);
    }

    #[test]
    fn p2_norm_of_3_4_is_5() {
        let spec = NormSpec::p_norm(PExponent::Finite(2.0), 2).unwrap();
        assert_eq!(spec.eval(&v(&[3.0, 4.0])).unwrap(), 5.0);
    }

    #[test]
    fn identity_quadratic_matches_euclidean() {
        let spec = NormSpec::quadratic(Matrix::identity(2)).unwrap();
        assert_eq!(spec.eval(&v(&[3.0, 4.0])).unwrap(), 5.0);
    }

    #[test]
    fn cross_polytope_gauge_matches_l1() {
        // Hull of (+-1,0),(0,+-1) is the unit ball of the 1-norm.
        let spec = NormSpec::polytope_gauge_2d(&[(1.0, 0.0), (0.0, 1.0)]).unwrap();
        let g = spec.eval(&v(&[3.0, 4.0])).unwrap();
        assert!((g - 7.0).abs() < 1e-12, "gauge {g} != 7");
    }

    #[test]
    fn gauge_normalize_examples() {
        let p1 = NormSpec::p_norm(PExponent::Finite(1.0), 2).unwrap();
        let u = gauge_normalize(&p1, &v(&[3.0, 4.0])).unwrap();
        assert!((u[0] - 3.0 / 7.0).abs() < 1e-15);
        assert!((u[1] - 4.0 / 7.0).abs() < 1e-15);

        let p2 = NormSpec::p_norm(PExponent::Finite(2.0), 2).unwrap();
        let u = gauge_normalize(&p2, &v(&[0.0, 5.0])).unwrap();
        assert_eq!(u.as_slice(), &[0.0, 1.0]);

        let pinf = NormSpec::p_norm(PExponent::Infinity, 2).unwrap();
        let u = gauge_normalize(&pinf, &v(&[2.0, -4.0])).unwrap();
        assert_eq!(u.as_slice(), &[0.5, -1.0]);
    }

    #[test]
    fn gauge_normalize_rejects_zero() {
        let p2 = NormSpec::p_norm(PExponent::Finite(2.0), 2).unwrap();
        let err = gauge_normalize(&p2, &v(&[0.0, 0.0])).unwrap_err();
        assert!(matches!(err, NormError::NearZeroVector { .. }));
    }

    #[test]
    fn eval_rejects_dimension_mismatch() {
        let spec = NormSpec::p_norm(PExponent::Finite(2.0), 3).unwrap();
        let err = spec.eval(&v(&[1.0, 2.0])).unwrap_err();
        assert!(matches!(err, NormError::DimensionMismatch { expected: 3, got: 2 }));
    }

    #[test]
    fn vector_rejects_nan_and_bad_length() {
        assert!(matches!(
            Vector::new(vec![1.0, f64::NAN]),
            Err(NormError::NonFiniteCoordinate { index: 1, .. })
        ));
        assert!(Vector::new(vec![]).is_err());
        assert!(Vector::new(vec![0.0; MAX_DIM + 1]).is_err());
    }

    #[test]
    fn quadratic_rejects_asymmetric_and_indefinite() {
        let asym = Matrix::from_rows(2, vec![1.0, 0.5, 0.3, 1.0]);
        assert!(matches!(
            NormSpec::quadratic(asym),
            Err(NormError::NotSymmetric { .. })
        ));
        let indef = Matrix::from_rows(2, vec![1.0, 2.0, 2.0, 1.0]);
        assert!(matches!(
            NormSpec::quadratic(indef),
            Err(NormError::NotPositiveDefinite { .. })
        ));
    }

    #[test]
    fn polytope_rejects_collinear_vertices() {
        assert!(matches!(
            NormSpec::polytope_gauge_2d(&[(1.0, 0.0), (2.0, 0.0)]),
            Err(NormError::DegeneratePolytope)
        ));
    }

    #[test]
    fn weighted_norm_values() {
        let spec =
            NormSpec::weighted_p_norm(PExponent::Finite(1.0), vec![2.0, 3.0]).unwrap();
        assert_eq!(spec.eval(&v(&[1.0, -1.0])).unwrap(), 5.0);
        let spec = NormSpec::weighted_p_norm(PExponent::Infinity, vec![2.0, 3.0]).unwrap();
        assert_eq!(spec.eval(&v(&[1.0, -1.0])).unwrap(), 3.0);
    }

    #[test]
    fn exact_norms_have_tiny_axiom_residuals() {
        let p2 = NormSpec::p_norm(PExponent::Finite(2.0), 3).unwrap();
        let r = norm_axiom_residuals(&p2, 1000, 7);
        assert!(r.homogeneity < 1e-10, "homogeneity {}", r.homogeneity);
        assert!(r.triangle < 1e-10, "triangle {}", r.triangle);
        assert!(r.positivity == 0.0);
    }

    #[test]
    fn spd_form_is_a_norm() {
        let a = Matrix::from_rows(3, vec![2.0, 0.3, 0.1, 0.3, 1.5, -0.2, 0.1, -0.2, 1.0]);
        let spec = NormSpec::quadratic(a).unwrap();
        let r = norm_axiom_residuals(&spec, 1000, 7);
        assert!(r.homogeneity < 1e-9 && r.triangle < 1e-9 && r.positivity < 1e-9);
    }

    #[test]
    fn hexagon_gauge_is_a_norm() {
        let r = norm_axiom_residuals(&hexagon(), 1000, 7);
        assert!(r.homogeneity < 1e-9 && r.triangle < 1e-9 && r.positivity < 1e-9);
    }

    #[test]
    fn hexagon_gauge_values() {
        let hex = hexagon();
        assert!((hex.eval(&v(&[1.0, 0.0])).unwrap() - 1.0).abs() < 1e-15);
        assert!((hex.eval(&v(&[0.5, 0.75])).unwrap() - 1.0).abs() < 1e-15);
        // Top edge runs at y = 0.75 between x = -0.5 and 0.5.
        assert!((hex.eval(&v(&[0.0, 0.75])).unwrap() - 1.0).abs() < 1e-15);
        assert!((hex.eval(&v(&[0.0, 1.5])).unwrap() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn norm_is_symmetric_under_negation() {
        let specs = [
            NormSpec::p_norm(PExponent::Finite(1.7), 2).unwrap(),
            NormSpec::p_norm(PExponent::Infinity, 2).unwrap(),
            hexagon(),
        ];
        let mut rng = SplitMix64::new(11);
        for spec in &specs {
            for _ in 0..200 {
                let x = random_vector(&mut rng, 2);
                let a = spec.value(&x);
                let b = spec.value(&-&x);
                assert!((a - b).abs() < 1e-12, "asymmetric at {:?}", x);
            }
        }
    }

    #[test]
    fn rational_scaling_examples() {
        let p2 = NormSpec::p_norm(PExponent::Finite(2.0), 2).unwrap();
        let r = rational_scaling_check(&p2, &v(&[1.0, 0.0]), &v(&[0.0, 1.0]), 1, 2, 3, 4).unwrap();
        assert!(r < 1e-12, "residual {r}");

        let p1 = NormSpec::p_norm(PExponent::Finite(1.0), 2).unwrap();
        let r = rational_scaling_check(&p1, &v(&[1.0, 2.0]), &v(&[3.0, -1.0]), 5, 3, -2, 7).unwrap();
        assert!(r < 1e-12, "residual {r}");

        let r = rational_scaling_check(&hexagon(), &v(&[1.0, 0.0]), &v(&[0.0, 1.0]), 2, 3, 1, 5)
            .unwrap();
        assert!(r < 1e-12, "residual {r}");
    }

    #[test]
    fn rational_scaling_rejects_zero_denominator() {
        let p2 = NormSpec::p_norm(PExponent::Finite(2.0), 2).unwrap();
        assert!(matches!(
            rational_scaling_check(&p2, &v(&[1.0, 0.0]), &v(&[0.0, 1.0]), 1, 0, 1, 1),
            Err(NormError::ZeroDenominator)
        ));
    }
}
