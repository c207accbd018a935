//! Derivative-free optimization primitives: Nelder-Mead simplex, bisection
//! and golden-section refinement. All routines are deterministic in their
//! inputs; the p=1 and max-norm objectives they face are non-smooth, which
//! is why nothing here wants a gradient.

/// Outcome of a simplex minimization.
#[derive(Debug, Clone)]
pub struct SimplexResult {
    pub best: Vec<f64>,
    pub best_value: f64,
    pub evals: usize,
}

/// Nelder-Mead simplex minimization with standard coefficients
/// (reflection 1, expansion 2, contraction 0.5, shrink 0.5).
///
/// `steps[i]` sets the initial simplex offset along coordinate `i`.
pub fn nelder_mead<F>(
    mut f: F,
    start: &[f64],
    steps: &[f64],
    max_iters: usize,
    ftol: f64,
) -> SimplexResult
where
    F: FnMut(&[f64]) -> f64,
{
    let n = start.len();
    assert_eq!(steps.len(), n);
    let mut evals = 0usize;
    let mut eval = |x: &[f64], evals: &mut usize| {
        *evals += 1;
        f(x)
    };

    let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
    simplex.push(start.to_vec());
    for i in 0..n {
        let mut p = start.to_vec();
        p[i] += steps[i];
        simplex.push(p);
    }
    let mut values: Vec<f64> = simplex.iter().map(|p| eval(p, &mut evals)).collect();

    for _ in 0..max_iters {
        let mut order: Vec<usize> = (0..=n).collect();
        order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap_or(std::cmp::Ordering::Equal));
        let best = order[0];
        let worst = order[n];
        let second_worst = order[n - 1];

        if (values[worst] - values[best]).abs() < ftol {
            break;
        }

        let mut centroid = vec![0.0; n];
        for &idx in &order[..n] {
            for d in 0..n {
                centroid[d] += simplex[idx][d];
            }
        }
        for c in centroid.iter_mut() {
            *c /= n as f64;
        }

        let reflected: Vec<f64> = centroid
            .iter()
            .zip(&simplex[worst])
            .map(|(c, w)| c + (c - w))
            .collect();
        let f_reflected = eval(&reflected, &mut evals);

        if f_reflected < values[second_worst] && f_reflected >= values[best] {
            simplex[worst] = reflected;
            values[worst] = f_reflected;
        } else if f_reflected < values[best] {
            let expanded: Vec<f64> = centroid
                .iter()
                .zip(&reflected)
                .map(|(c, r)| c + 2.0 * (r - c))
                .collect();
            let f_expanded = eval(&expanded, &mut evals);
            if f_expanded < f_reflected {
                simplex[worst] = expanded;
                values[worst] = f_expanded;
            } else {
                simplex[worst] = reflected;
                values[worst] = f_reflected;
            }
        } else {
            let contracted: Vec<f64> = centroid
                .iter()
                .zip(&simplex[worst])
                .map(|(c, w)| c + 0.5 * (w - c))
                .collect();
            let f_contracted = eval(&contracted, &mut evals);
            if f_contracted < values[worst] {
                simplex[worst] = contracted;
                values[worst] = f_contracted;
            } else {
                let anchor = simplex[best].clone();
                for idx in 0..=n {
                    if idx == best {
                        continue;
                    }
                    for d in 0..n {
                        simplex[idx][d] = anchor[d] + 0.5 * (simplex[idx][d] - anchor[d]);
                    }
                    values[idx] = eval(&simplex[idx], &mut evals);
                }
            }
        }
    }

    let best = values
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal))
        .map(|(i, _)| i)
        .expect("non-empty simplex");
    SimplexResult {
        best: simplex[best].clone(),
        best_value: values[best],
        evals,
    }
}

/// Outcome of a bisection run: the argument, the residual there, and the
/// number of interval halvings used.
#[derive(Debug, Clone, Copy)]
pub struct BisectionOutcome {
    pub x: f64,
    pub f_value: f64,
    pub iterations: usize,
    pub evals: usize,
}

/// Bisection on `[lo, hi]` where `f(lo)` and `f(hi)` have opposite signs.
/// Stops once `|f(mid)| <= tol` or after `max_iters` halvings.
pub fn bisect_to_tolerance<F>(mut f: F, lo: f64, hi: f64, tol: f64, max_iters: usize) -> BisectionOutcome
where
    F: FnMut(f64) -> f64,
{
    let mut evals = 0usize;
    let mut lo = lo;
    let mut hi = hi;
    evals += 1;
    let mut f_lo = f(lo);
    let mut x = lo;
    let mut fx = f_lo;
    if f_lo.abs() <= tol {
        return BisectionOutcome {
            x: lo,
            f_value: f_lo,
            iterations: 0,
            evals,
        };
    }
    for iter in 0..max_iters {
        let mid = 0.5 * (lo + hi);
        evals += 1;
        let f_mid = f(mid);
        x = mid;
        fx = f_mid;
        if f_mid.abs() <= tol {
            return BisectionOutcome {
                x: mid,
                f_value: f_mid,
                iterations: iter + 1,
                evals,
            };
        }
        if (f_mid > 0.0) == (f_lo > 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    BisectionOutcome {
        x,
        f_value: fx,
        iterations: max_iters,
        evals,
    }
}

/// Golden-section search for the maximum of a unimodal `f` on `[lo, hi]`.
pub fn golden_section_max<F>(mut f: F, mut lo: f64, mut hi: f64, iters: usize) -> (f64, f64)
where
    F: FnMut(f64) -> f64,
{
    let inv_phi = 0.618_033_988_749_894_9_f64;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..iters {
        if f1 > f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    if f1 > f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}
