//! Nelder–Mead simplex minimization.

use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NelderMeadConfig<T> {
    /// Stop once `max f − min f` over the simplex falls below this.
    pub tol: T,
    pub max_evals: usize,
    /// Edge length of the initial simplex along each axis.
    pub initial_step: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NelderMeadOutcome<T> {
    pub best: Vec<T>,
    pub best_value: T,
    pub evaluations: usize,
    pub converged: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub enum NelderMeadError<E> {
    Objective(E),
    NonFinite { evaluations: usize },
}

struct Budget<'a, T, E> {
    f: &'a mut dyn FnMut(&[T]) -> Result<T, E>,
    used: usize,
    max: usize,
}

impl<T: Real, E> Budget<'_, T, E> {
    /// `None` once the budget is spent.
    fn eval(&mut self, x: &[T]) -> Result<Option<T>, NelderMeadError<E>> {
        if self.used >= self.max {
            return Ok(None);
        }
        self.used += 1;
        let v = (self.f)(x).map_err(NelderMeadError::Objective)?;
        if !v.is_finite() {
            return Err(NelderMeadError::NonFinite { evaluations: self.used });
        }
        Ok(Some(v))
    }
}

fn lerp<T: Real>(from: &[T], to: &[T], t: T) -> Vec<T> {
    from.iter().zip(to).map(|(&a, &b)| a + t * (b - a)).collect()
}

/// Minimizes `f` from `x0` with reflection 1, expansion 2, contraction 0.5
/// and shrink 0.5. `on_iter(iteration, best_point, best_value)` is called
/// for the starting simplex and after every completed step.
pub fn nelder_mead<T: Real, E>(
    mut f: impl FnMut(&[T]) -> Result<T, E>,
    x0: &[T],
    cfg: &NelderMeadConfig<T>,
    mut on_iter: impl FnMut(usize, &[T], T),
) -> Result<NelderMeadOutcome<T>, NelderMeadError<E>> {
    let mut budget = Budget { f: &mut f, used: 0, max: cfg.max_evals.max(1) };
    let d = x0.len();
    let half = T::lit(0.5);

    let mut simplex: Vec<(Vec<T>, T)> = Vec::with_capacity(d + 1);
    let first = budget.eval(x0)?.expect("budget of at least one");
    simplex.push((x0.to_vec(), first));
    for k in 0..d {
        let mut x = x0.to_vec();
        x[k] += cfg.initial_step;
        match budget.eval(&x)? {
            Some(v) => simplex.push((x, v)),
            None => break,
        }
    }
    let sort = |s: &mut Vec<(Vec<T>, T)>| {
        s.sort_by(|a, b| a.1.partial_cmp(&b.1).expect("finite values"))
    };
    sort(&mut simplex);
    on_iter(0, &simplex[0].0, simplex[0].1);

    let mut converged = false;
    let mut iter = 0;
    'outer: while simplex.len() == d + 1 {
        let spread = simplex[d].1 - simplex[0].1;
        if spread < cfg.tol {
            converged = true;
            break;
        }
        let mut centroid = vec![T::zero(); d];
        for (x, _) in &simplex[..d] {
            for (c, &xi) in centroid.iter_mut().zip(x) {
                *c += xi / T::lit(d as f64);
            }
        }
        let worst = simplex[d].clone();
        let reflected = lerp(&centroid, &worst.0, -T::one());
        let Some(fr) = budget.eval(&reflected)? else { break };

        let accepted = if fr < simplex[0].1 {
            let expanded = lerp(&centroid, &worst.0, -T::lit(2.0));
            let Some(fe) = budget.eval(&expanded)? else {
                simplex[d] = (reflected, fr);
                break;
            };
            Some(if fe < fr { (expanded, fe) } else { (reflected, fr) })
        } else if fr < simplex[d - 1].1 {
            Some((reflected, fr))
        } else {
            let (point, bound) = if fr < worst.1 {
                (lerp(&centroid, &reflected, half), fr)
            } else {
                (lerp(&centroid, &worst.0, half), worst.1)
            };
            let Some(fc) = budget.eval(&point)? else { break };
            let ok = if fr < worst.1 { fc <= bound } else { fc < bound };
            ok.then_some((point, fc))
        };

        match accepted {
            Some(v) => simplex[d] = v,
            None => {
                let best = simplex[0].0.clone();
                for k in 1..=d {
                    let x = lerp(&best, &simplex[k].0, half);
                    match budget.eval(&x)? {
                        Some(v) => simplex[k] = (x, v),
                        None => {
                            sort(&mut simplex);
                            break 'outer;
                        }
                    }
                }
            }
        }
        sort(&mut simplex);
        iter += 1;
        on_iter(iter, &simplex[0].0, simplex[0].1);
    }
    sort(&mut simplex);
    let (best, best_value) = simplex.swap_remove(0);
    Ok(NelderMeadOutcome { best, best_value, evaluations: budget.used, converged })
}
