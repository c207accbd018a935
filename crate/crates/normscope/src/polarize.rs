//! Polarization candidate inner product and its axiom residuals.
//!
//! `polarize(v, w) = (|v+w|^2 - |v|^2 - |w|^2) / 2` is the only bilinear form
//! a norm can come from. The norm is euclidean exactly when this form
//! satisfies the inner-product axioms, which involve at most three vector
//! variables, so axiom checks sample triples (u, v, w).
//!
//! The parallelogram identity is checked in squared form
//! `| |v+w|^2 + |v-w|^2 - 2|v|^2 - 2|w|^2 |` because the square-root form's
//! radicand can go negative for non-euclidean norms; the two forms agree
//! whenever the radicand is nonnegative.

use crate::matrix::Matrix;
use crate::norm::{Norm, Vector};
use crate::rng::SplitMix64;
use serde::{Deserialize, Serialize};

/// PSD test threshold for leading principal minors.
pub const PSD_MINOR_TOL: f64 = 1e-10;

/// Candidate inner product from the norm; symmetric in (v, w) by construction.
pub fn polarize<N: Norm + ?Sized>(norm: &N, v: &Vector, w: &Vector) -> f64 {
    let s = norm.value(&(v + w));
    let nv = norm.value(v);
    let nw = norm.value(w);
    (s * s - nv * nv - nw * nw) / 2.0
}

/// Squared-form parallelogram defect; zero (up to roundoff) everywhere
/// exactly for euclidean norms.
pub fn parallelogram_residual<N: Norm + ?Sized>(norm: &N, v: &Vector, w: &Vector) -> f64 {
    let s = norm.value(&(v + w));
    let d = norm.value(&(v - w));
    let nv = norm.value(v);
    let nw = norm.value(w);
    (s * s + d * d - 2.0 * nv * nv - 2.0 * nw * nw).abs()
}

/// Worst observed inner-product axiom violations over a sample set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AxiomResiduals {
    /// max |polarize(u+v, w) - polarize(u, w) - polarize(v, w)|
    pub additivity: f64,
    /// max |polarize(a v, w) - a polarize(v, w)|
    pub homogeneity: f64,
    /// max positive part of 1e-12 - polarize(v, v) over nonzero v
    pub definiteness: f64,
}

impl AxiomResiduals {
    pub fn all_below(&self, tol: f64) -> bool {
        self.additivity < tol && self.homogeneity < tol && self.definiteness < tol
    }
}

/// Axiom residuals plus the witnesses that attained them.
#[derive(Debug, Clone)]
pub struct AxiomScan {
    pub residuals: AxiomResiduals,
    pub worst_additivity_triple: (Vector, Vector, Vector),
    pub worst_homogeneity: (f64, Vector, Vector),
}

/// Scalars for the homogeneity axiom: rationals around the unit interval
/// plus the golden ratio as an irrational probe.
const HOMOGENEITY_SCALARS: [f64; 7] = [-2.0, -1.0, -0.5, 0.0, 0.5, 1.618_033_988_749_895, 2.0];

/// Deterministic adversarial sample vectors: every sign pattern over
/// {-1, 0, 1} in the first min(dim, 3) coordinates, plus diagonal patterns in
/// higher dimensions. Known p-norm violators live on this grid, so detection
/// does not depend on random sampling luck.
pub(crate) fn adversarial_grid(dim: usize) -> Vec<Vector> {
    let k = dim.min(3);
    let mut out = Vec::new();
    for code in 1..3usize.pow(k as u32) {
        let mut coords = vec![0.0; dim];
        let mut c = code;
        for coord in coords.iter_mut().take(k) {
            *coord = [0.0, 1.0, -1.0][c % 3];
            c /= 3;
        }
        out.push(Vector::from_coords_unchecked(coords));
    }
    if dim > 3 {
        out.push(Vector::from_coords_unchecked(vec![1.0; dim]));
        out.push(Vector::from_coords_unchecked(
            (0..dim).map(|i| if i % 2 == 0 { 1.0 } else { -1.0 }).collect(),
        ));
    }
    out
}

fn random_vector(rng: &mut SplitMix64, dim: usize) -> Vector {
    Vector::from_coords_unchecked((0..dim).map(|_| rng.uniform(-1.0, 1.0)).collect())
}

/// Samples the inner-product axioms on the adversarial grid plus
/// `sample_count` seeded random configurations. Symmetry is not sampled:
/// it holds identically by the shape of the formula.
pub fn axiom_scan<N: Norm + ?Sized>(norm: &N, sample_count: usize, seed: u64) -> AxiomScan {
    assert!(sample_count >= 1, "sample_count must be at least 1");
    let dim = norm.dim();
    let grid = adversarial_grid(dim);
    let zero = Vector::zeros(dim);
    let mut scan = AxiomScan {
        residuals: AxiomResiduals {
            additivity: 0.0,
            homogeneity: 0.0,
            definiteness: 0.0,
        },
        worst_additivity_triple: (zero.clone(), zero.clone(), zero),
        worst_homogeneity: (0.0, Vector::zeros(dim), Vector::zeros(dim)),
    };

    let mut check_additivity = |scan: &mut AxiomScan, u: &Vector, v: &Vector, w: &Vector| {
        let r = (polarize(norm, &(u + v), w) - polarize(norm, u, w) - polarize(norm, v, w)).abs();
        if r > scan.residuals.additivity {
            scan.residuals.additivity = r;
            scan.worst_additivity_triple = (u.clone(), v.clone(), w.clone());
        }
    };
    for u in &grid {
        for v in &grid {
            for w in &grid {
                check_additivity(&mut scan, u, v, w);
            }
        }
    }

    let mut check_homogeneity = |scan: &mut AxiomScan, a: f64, v: &Vector, w: &Vector| {
        let r = (polarize(norm, &v.scale(a), w) - a * polarize(norm, v, w)).abs();
        if r > scan.residuals.homogeneity {
            scan.residuals.homogeneity = r;
            scan.worst_homogeneity = (a, v.clone(), w.clone());
        }
    };
    for v in &grid {
        for w in &grid {
            for &a in &HOMOGENEITY_SCALARS {
                check_homogeneity(&mut scan, a, v, w);
            }
        }
    }

    let mut check_definiteness = |scan: &mut AxiomScan, v: &Vector| {
        if !v.is_zero() {
            let r = (1e-12 - polarize(norm, v, v)).max(0.0);
            scan.residuals.definiteness = scan.residuals.definiteness.max(r);
        }
    };
    for v in &grid {
        check_definiteness(&mut scan, v);
    }

    let mut rng = SplitMix64::new(seed);
    for _ in 0..sample_count {
        let u = random_vector(&mut rng, dim);
        let v = random_vector(&mut rng, dim);
        let w = random_vector(&mut rng, dim);
        let a = rng.uniform(-2.0, 2.0);
        check_additivity(&mut scan, &u, &v, &w);
        check_homogeneity(&mut scan, a, &v, &w);
        check_definiteness(&mut scan, &v);
    }
    scan
}

/// Worst inner-product axiom residuals over the adversarial grid plus
/// `sample_count` seeded random triples; deterministic in `seed`.
pub fn axiom_residuals<N: Norm + ?Sized>(norm: &N, sample_count: usize, seed: u64) -> AxiomResiduals {
    axiom_scan(norm, sample_count, seed).residuals
}

/// Gram matrix of the polarization form on the standard basis, with a PSD
/// test and the worst model error of `|x|^2 = x^T G x` over sampled probes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GramResult {
    pub matrix: Matrix,
    /// True iff every leading principal minor exceeds [`PSD_MINOR_TOL`].
    pub psd: bool,
    /// max |norm(x)^2 - x^T G x| over the sampled probes.
    pub max_model_residual: f64,
}

/// Recovers the candidate Gram matrix `G_ij = polarize(b_i, b_j)` and
/// measures how well `x^T G x` models the squared norm on `probe_count`
/// seeded probes. For a euclidean norm the residual is float noise and the
/// matrix is positive definite.
pub fn recover_gram<N: Norm + ?Sized>(norm: &N, probe_count: usize, seed: u64) -> GramResult {
    assert!(probe_count >= 1, "probe_count must be at least 1");
    let dim = norm.dim();
    let mut matrix = Matrix::zeros(dim);
    for i in 0..dim {
        for j in 0..=i {
            let g = polarize(norm, &Vector::basis(dim, i), &Vector::basis(dim, j));
            matrix.set(i, j, g);
            matrix.set(j, i, g);
        }
    }
    let psd = matrix
        .leading_principal_minors()
        .into_iter()
        .all(|m| m > PSD_MINOR_TOL);

    let mut rng = SplitMix64::new(seed);
    let mut max_model_residual = 0.0f64;
    for _ in 0..probe_count {
        let x = random_vector(&mut rng, dim);
        let n = norm.value(&x);
        max_model_residual =
            max_model_residual.max((n * n - matrix.quadratic_form(x.as_slice())).abs());
    }
    GramResult {
        matrix,
        psd,
        max_model_residual,
    }
}

/// Parallelogram defect summary over the adversarial grid plus seeded
/// random pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParallelogramSummary {
    pub max_residual: f64,
    pub worst_v: Vector,
    pub worst_w: Vector,
    pub pairs_checked: usize,
}

/// Maximum parallelogram defect over grid pairs and `sample_count` random
/// pairs; deterministic in `seed`.
pub fn parallelogram_max_residual<N: Norm + ?Sized>(
    norm: &N,
    sample_count: usize,
    seed: u64,
) -> ParallelogramSummary {
    let dim = norm.dim();
    let grid = adversarial_grid(dim);
    let mut out = ParallelogramSummary {
        max_residual: 0.0,
        worst_v: Vector::zeros(dim),
        worst_w: Vector::zeros(dim),
        pairs_checked: 0,
    };
    let mut check = |out: &mut ParallelogramSummary, v: &Vector, w: &Vector| {
        out.pairs_checked += 1;
        let r = parallelogram_residual(norm, v, w);
        if r > out.max_residual {
            out.max_residual = r;
            out.worst_v = v.clone();
            out.worst_w = w.clone();
        }
    };
    for v in &grid {
        for w in &grid {
            check(&mut out, v, w);
        }
    }
    let mut rng = SplitMix64::new(seed);
    for _ in 0..sample_count {
        let v = random_vector(&mut rng, dim);
        let w = random_vector(&mut rng, dim);
        check(&mut out, &v, &w);
    }
    out
}
