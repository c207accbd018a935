//! Quadruple criterion: if two parallelograms agree in both side norms and
//! one diagonal norm, a euclidean norm forces the other diagonal norms to
//! agree. A quadruple that satisfies the antecedent but not the consequent
//! certifies that the norm is not euclidean; this module evaluates the
//! criterion on given quadruples and searches for such violation witnesses
//! with seeded multistart Nelder-Mead plus a bisection polish.

use crate::norm::{gauge_normalize, Norm, NormError, Vector};
use crate::optim::{bisect_to_tolerance, nelder_mead};
use crate::rng::{derive_seed, SplitMix64};
use serde::{Deserialize, Serialize};

/// Quadruples with `|v1 - w1|` below this are considered degenerate and are
/// never reported as witnesses: they satisfy the criterion vacuously and
/// stall the optimizer.
pub const DEGENERATE_DIAG_TOL: f64 = 1e-6;

/// Penalty weight on the squared diagonal-equality defect in the search
/// objective.
const PENALTY_WEIGHT: f64 = 100.0;

/// Random configurations evaluated before each simplex start; the best one
/// seeds the simplex.
const PRESAMPLES: usize = 16;

/// Simplex runs chained per restart; re-inflating the simplex from the
/// previous result recovers progress lost to simplex collapse on
/// piecewise-linear norms.
const NM_STAGES: usize = 3;

/// Two parallelograms `(v1, w1)` and `(v2, w2)` with the four residuals the
/// criterion speaks about.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AronszajnQuadruple {
    pub v1: Vector,
    pub w1: Vector,
    pub v2: Vector,
    pub w2: Vector,
    /// | |v1| - |v2| |
    pub side_v_residual: f64,
    /// | |w1| - |w2| |
    pub side_w_residual: f64,
    /// | |v1-w1| - |v2-w2| |
    pub diag_minus_residual: f64,
    /// | |v1+w1| - |v2+w2| |
    pub diag_plus_gap: f64,
}

/// Evaluates all four residual fields by direct norm evaluation.
pub fn criterion_residuals<N: Norm + ?Sized>(
    norm: &N,
    v1: &Vector,
    w1: &Vector,
    v2: &Vector,
    w2: &Vector,
) -> AronszajnQuadruple {
    AronszajnQuadruple {
        side_v_residual: (norm.value(v1) - norm.value(v2)).abs(),
        side_w_residual: (norm.value(w1) - norm.value(w2)).abs(),
        diag_minus_residual: (norm.value(&(v1 - w1)) - norm.value(&(v2 - w2))).abs(),
        diag_plus_gap: (norm.value(&(v1 + w1)) - norm.value(&(v2 + w2))).abs(),
        v1: v1.clone(),
        w1: w1.clone(),
        v2: v2.clone(),
        w2: w2.clone(),
    }
}

/// True iff the antecedent holds within `eps` while the consequent gap is at
/// least `gap_threshold` — i.e. the quadruple witnesses a criterion failure.
pub fn is_violation(q: &AronszajnQuadruple, eps: f64, gap_threshold: f64) -> bool {
    assert!(eps > 0.0 && gap_threshold > 0.0);
    q.side_v_residual <= eps
        && q.side_w_residual <= eps
        && q.diag_minus_residual <= eps
        && q.diag_plus_gap >= gap_threshold
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchTrace {
    pub seed: u64,
    /// Restarts consumed up to and including the successful one.
    pub restarts_used: usize,
    /// Total objective (and polish) evaluations across the whole search.
    pub objective_evals: usize,
}

/// A violation witness together with the thresholds it was validated
/// against and the search effort that produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ViolationCertificate {
    pub quadruple: AronszajnQuadruple,
    pub eps_used: f64,
    pub gap_threshold_used: f64,
    pub search_trace: SearchTrace,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub restarts: usize,
    pub max_iters: usize,
    /// Antecedent equality tolerance.
    pub eps: f64,
    /// Minimum consequent gap for a reportable witness; far above float
    /// noise.
    pub gap_threshold: f64,
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            restarts: 200,
            max_iters: 400,
            eps: 1e-8,
            gap_threshold: 0.05,
            seed: 0,
        }
    }
}

/// Candidate quadruple described by five parameters: two unit directions per
/// parallelogram plus a shared `w`-scale `s` in `[0.1, 1]`. Both side
/// equalities hold by construction, leaving only the diagonal equality to
/// enforce.
struct Parametrization {
    v1: Vector,
    w1: Vector,
    v2: Vector,
    s: f64,
}

fn unit_dir<N: Norm + ?Sized>(norm: &N, t: f64) -> Option<Vector> {
    if !t.is_finite() {
        return None;
    }
    gauge_normalize(norm, &Vector::from_coords_unchecked(vec![t.cos(), t.sin()])).ok()
}

fn build<N: Norm + ?Sized>(norm: &N, params: &[f64]) -> Option<Parametrization> {
    let s = params[2].clamp(0.1, 1.0);
    Some(Parametrization {
        v1: unit_dir(norm, params[0])?,
        w1: unit_dir(norm, params[1])?.scale(s),
        v2: unit_dir(norm, params[3])?,
        s,
    })
}

/// Searches for a violation witness of a 2-dimensional norm.
///
/// Maximizes `gap - 100 * diag_defect^2` over the parametrization by seeded
/// multistart Nelder-Mead, then drives the diagonal defect below `eps` by
/// bisection on the second parallelogram's `w` direction (which keeps `|w2|`
/// fixed). Restarts are tried in index order, so the returned certificate is
/// from the lowest-indexed successful restart and the result is deterministic
/// in the seed. An empty return means no quadruple passed the thresholds
/// within budget — evidence of, not proof of, a euclidean norm.
pub fn search_violation<N: Norm + ?Sized>(
    norm: &N,
    config: &SearchConfig,
) -> Result<Option<ViolationCertificate>, NormError> {
    if norm.dim() != 2 {
        return Err(NormError::WrongDimension {
            required: 2,
            got: norm.dim(),
        });
    }
    assert!(config.restarts >= 1, "need at least one restart");
    let mut evals = 0usize;

    for restart in 0..config.restarts {
        let mut rng = SplitMix64::new(derive_seed(config.seed, restart as u64));

        let mut objective = |params: &[f64]| -> f64 {
            evals += 1;
            let Some(par) = build(norm, params) else {
                return f64::INFINITY;
            };
            let Some(w2_dir) = unit_dir(norm, params[4]) else {
                return f64::INFINITY;
            };
            let w2 = w2_dir.scale(par.s);
            let gap = (norm.value(&(&par.v1 + &par.w1)) - norm.value(&(&par.v2 + &w2))).abs();
            let defect = norm.value(&(&par.v1 - &par.w1)) - norm.value(&(&par.v2 - &w2));
            -(gap - PENALTY_WEIGHT * defect * defect)
        };

        let mut start = [0.0; 5];
        let mut best_value = f64::INFINITY;
        for _ in 0..PRESAMPLES {
            let candidate = [
                rng.uniform(0.0, std::f64::consts::TAU),
                rng.uniform(0.0, std::f64::consts::TAU),
                rng.uniform(0.1, 1.0),
                rng.uniform(0.0, std::f64::consts::TAU),
                rng.uniform(0.0, std::f64::consts::TAU),
            ];
            let value = objective(&candidate);
            if value < best_value {
                best_value = value;
                start = candidate;
            }
        }

        let steps = [0.3, 0.3, 0.1, 0.3, 0.3];
        let mut current = start.to_vec();
        for _ in 0..NM_STAGES {
            let run = nelder_mead(&mut objective, &current, &steps, config.max_iters, 1e-14);
            current = run.best;
        }

        let Some(par) = build(norm, &current) else {
            continue;
        };
        let target = norm.value(&(&par.v1 - &par.w1));
        if target < DEGENERATE_DIAG_TOL {
            continue;
        }

        let mut diag_defect = |b2: f64| -> f64 {
            evals += 1;
            match unit_dir(norm, b2) {
                Some(dir) => target - norm.value(&(&par.v2 - &dir.scale(par.s))),
                None => f64::INFINITY,
            }
        };

        let b2_start = current[4];
        let h0 = diag_defect(b2_start);
        let b2_final = if h0.abs() <= config.eps {
            b2_start
        } else {
            // Expand a bracket around the optimizer's endpoint, then bisect.
            let mut bracket = None;
            let mut delta = 1e-4;
            'expand: while delta <= 0.8 {
                for candidate in [b2_start - delta, b2_start + delta] {
                    if (diag_defect(candidate) > 0.0) != (h0 > 0.0) {
                        bracket = Some((b2_start, candidate));
                        break 'expand;
                    }
                }
                delta *= 2.0;
            }
            let Some((lo, hi)) = bracket else {
                continue;
            };
            let out = bisect_to_tolerance(&mut diag_defect, lo, hi, config.eps * 0.5, 200);
            evals += out.evals - 1; // closure already counted its own calls
            out.x
        };

        let Some(w2_dir) = unit_dir(norm, b2_final) else {
            continue;
        };
        let w2 = w2_dir.scale(par.s);
        let quadruple = criterion_residuals(norm, &par.v1, &par.w1, &par.v2, &w2);
        if is_violation(&quadruple, config.eps, config.gap_threshold) {
            return Ok(Some(ViolationCertificate {
                quadruple,
                eps_used: config.eps,
                gap_threshold_used: config.gap_threshold,
                search_trace: SearchTrace {
                    seed: config.seed,
                    restarts_used: restart + 1,
                    objective_evals: evals,
                },
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norm::{NormSpec, PExponent};

    fn v(coords: &[f64]) -> Vector {
        Vector::from_slice(coords).unwrap()
    }

    fn p_norm(p: f64) -> NormSpec {
        NormSpec::p_norm(PExponent::Finite(p), 2).unwrap()
    }

    #[test]
    fn l1_hand_witness_has_gap_exactly_two() {
        let q = criterion_residuals(
            &p_norm(1.0),
            &v(&[1.0, 0.0]),
            &v(&[0.0, 1.0]),
            &v(&[1.0, 0.0]),
            &v(&[-1.0, 0.0]),
        );
        assert_eq!(q.side_v_residual, 0.0);
        assert_eq!(q.side_w_residual, 0.0);
        assert_eq!(q.diag_minus_residual, 0.0);
        assert_eq!(q.diag_plus_gap, 2.0);
        assert!(is_violation(&q, 1e-8, 0.05));
    }

    #[test]
    fn identical_pairs_have_zero_residuals() {
        let q = criterion_residuals(
            &p_norm(2.0),
            &v(&[0.3, 0.4]),
            &v(&[-0.2, 0.9]),
            &v(&[0.3, 0.4]),
            &v(&[-0.2, 0.9]),
        );
        assert_eq!(q.side_v_residual, 0.0);
        assert_eq!(q.diag_plus_gap, 0.0);
        assert!(!is_violation(&q, 1e-8, 0.05), "gap is zero");
    }

    #[test]
    fn euclidean_swap_symmetry_gives_zero_residuals() {
        let q = criterion_residuals(
            &p_norm(2.0),
            &v(&[1.0, 0.0]),
            &v(&[0.0, 1.0]),
            &v(&[0.0, 1.0]),
            &v(&[1.0, 0.0]),
        );
        assert_eq!(q.side_v_residual, 0.0);
        assert_eq!(q.side_w_residual, 0.0);
        assert_eq!(q.diag_minus_residual, 0.0);
        assert_eq!(q.diag_plus_gap, 0.0);
    }

    #[test]
    fn failed_antecedent_is_not_a_violation() {
        let mut q = criterion_residuals(
            &p_norm(1.0),
            &v(&[1.0, 0.0]),
            &v(&[0.0, 1.0]),
            &v(&[1.0, 0.0]),
            &v(&[-1.0, 0.0]),
        );
        q.side_v_residual = 1.0;
        assert!(!is_violation(&q, 1e-8, 0.05));
    }

    #[test]
    fn negation_of_second_pair_leaves_residuals_unchanged() {
        let norm = p_norm(1.5);
        let (v1, w1) = (v(&[0.9, 0.1]), v(&[-0.3, 0.7]));
        let (v2, w2) = (v(&[0.5, -0.6]), v(&[0.2, 0.8]));
        let a = criterion_residuals(&norm, &v1, &w1, &v2, &w2);
        let b = criterion_residuals(&norm, &v1, &w1, &(-&v2), &(-&w2));
        assert_eq!(a.side_v_residual, b.side_v_residual);
        assert_eq!(a.side_w_residual, b.side_w_residual);
        assert_eq!(a.diag_minus_residual, b.diag_minus_residual);
        assert_eq!(a.diag_plus_gap, b.diag_plus_gap);
    }

    #[test]
    fn search_certifies_l1() {
        let cert = search_violation(&p_norm(1.0), &SearchConfig::default())
            .unwrap()
            .expect("the 1-norm is not euclidean");
        let q = &cert.quadruple;
        let recheck = criterion_residuals(&p_norm(1.0), &q.v1, &q.w1, &q.v2, &q.w2);
        assert!(is_violation(&recheck, cert.eps_used, cert.gap_threshold_used));
        assert!(q.diag_plus_gap >= 1.0, "gap {}", q.diag_plus_gap);
    }

    #[test]
    fn search_returns_nothing_for_euclidean_norm() {
        let config = SearchConfig {
            restarts: 40,
            ..SearchConfig::default()
        };
        let found = search_violation(&p_norm(2.0), &config).unwrap();
        assert!(found.is_none(), "euclidean norm produced {found:?}");
    }

    #[test]
    fn search_rejects_wrong_dimension() {
        let spec = NormSpec::p_norm(PExponent::Finite(1.0), 3).unwrap();
        assert!(matches!(
            search_violation(&spec, &SearchConfig::default()),
            Err(NormError::WrongDimension { required: 2, got: 3 })
        ));
    }

    #[test]
    fn scaling_a_quadruple_scales_residuals_linearly() {
        let norm = p_norm(1.0);
        let (v1, w1) = (v(&[1.0, 0.0]), v(&[0.0, 1.0]));
        let (v2, w2) = (v(&[1.0, 0.0]), v(&[-1.0, 0.0]));
        let base = criterion_residuals(&norm, &v1, &w1, &v2, &w2);
        for t in [0.5, 2.0, 3.75] {
            let scaled = criterion_residuals(
                &norm,
                &v1.scale(t),
                &w1.scale(t),
                &v2.scale(t),
                &w2.scale(t),
            );
            assert!((scaled.diag_plus_gap - t * base.diag_plus_gap).abs() < 1e-12);
            assert!((scaled.side_v_residual - t * base.side_v_residual).abs() < 1e-12);
        }
    }
}
