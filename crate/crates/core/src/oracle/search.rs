//! Exhaustive coarse grid followed by successive local grid refinement.
//!
//! The coarse grid is evaluated through [`map_indexed`], so it runs in
//! parallel when enabled; the reduction is sequential over grid indices and
//! breaks ties by the lowest lexicographic point. Results do not depend on the
//! execution mode.

use crate::exec::{map_indexed, map_slice, Execution};

/// Coarse-grid points whose score is this close to the optimum are reported
/// as near-optimal.
pub const DEGENERACY_TOL: f64 = 1e-9;
const NEAR_OPTIMAL_CAP: usize = 256;
/// Local window half-width, in steps.
const WINDOW: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Axis {
    pub lo: f64,
    pub hi: f64,
    pub points: usize,
    /// Periodic axes exclude `hi` (it coincides with `lo`) and wrap during
    /// refinement; closed axes include both ends and clamp.
    pub periodic: bool,
}

impl Axis {
    pub fn closed(lo: f64, hi: f64, points: usize) -> Self {
        Self { lo, hi, points, periodic: false }
    }

    pub fn periodic(lo: f64, hi: f64, points: usize) -> Self {
        Self { lo, hi, points, periodic: true }
    }

    fn step(&self) -> f64 {
        if self.periodic {
            (self.hi - self.lo) / self.points as f64
        } else {
            (self.hi - self.lo) / (self.points.max(2) - 1) as f64
        }
    }

    fn at(&self, k: usize) -> f64 {
        self.lo + k as f64 * self.step()
    }

    fn normalize(&self, v: f64) -> f64 {
        if self.periodic {
            self.lo + (v - self.lo).rem_euclid(self.hi - self.lo)
        } else {
            v.clamp(self.lo, self.hi)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Goal {
    Minimize,
    Maximize,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RefineSettings {
    pub rounds: usize,
    /// Number of best coarse points refined independently.
    pub seeds: usize,
    /// Refinement stops once every step is below this.
    pub min_step: f64,
    pub execution: Execution,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Candidate<const D: usize> {
    pub point: [f64; D],
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchOutcome<const D: usize> {
    pub best: Candidate<D>,
    /// Refinement result for each seed, in seed order.
    pub refined: Vec<Candidate<D>>,
    /// Coarse points within [`DEGENERACY_TOL`] of the coarse optimum, thinned
    /// to at most 256 evenly strided entries.
    pub near_optimal: Vec<[f64; D]>,
    pub evaluations: usize,
}

impl<const D: usize> SearchOutcome<D> {
    /// Every point known to attain the optimum within [`DEGENERACY_TOL`].
    pub fn optimal_points(&self) -> impl Iterator<Item = [f64; D]> + '_ {
        let best = self.best.value;
        self.refined
            .iter()
            .filter(move |c| (c.value - best).abs() <= DEGENERACY_TOL)
            .map(|c| c.point)
            .chain(self.near_optimal.iter().copied())
    }
}

#[inline]
fn key(goal: Goal, v: f64) -> f64 {
    let s = match goal {
        Goal::Minimize => v,
        Goal::Maximize => -v,
    };
    if s.is_nan() {
        f64::INFINITY
    } else {
        s
    }
}

fn lex_less<const D: usize>(a: &[f64; D], b: &[f64; D]) -> bool {
    for k in 0..D {
        match a[k].total_cmp(&b[k]) {
            std::cmp::Ordering::Less => return true,
            std::cmp::Ordering::Greater => return false,
            std::cmp::Ordering::Equal => {}
        }
    }
    false
}

fn coarse_point<const D: usize>(axes: &[Axis; D], mut index: usize) -> [f64; D] {
    let mut out = [0.0; D];
    for k in (0..D).rev() {
        let n = axes[k].points;
        out[k] = axes[k].at(index % n);
        index /= n;
    }
    out
}

fn refine<const D: usize, F>(
    axes: &[Axis; D],
    goal: Goal,
    settings: &RefineSettings,
    start: Candidate<D>,
    f: &F,
) -> (Candidate<D>, usize)
where
    F: Fn(&[f64; D]) -> f64,
{
    let mut steps: [f64; D] = std::array::from_fn(|k| axes[k].step());
    let mut best = start;
    let mut best_key = key(goal, start.value);
    let width = (2 * WINDOW + 1) as usize;
    let local = width.pow(D as u32);
    let mut evaluations = 0;
    for _ in 0..settings.rounds {
        if steps.iter().all(|&s| s < settings.min_step) {
            break;
        }
        let center = best.point;
        for idx in 0..local {
            let mut rest = idx;
            let mut p = [0.0; D];
            for k in (0..D).rev() {
                let offset = (rest % width) as i32 - WINDOW;
                rest /= width;
                p[k] = axes[k].normalize(center[k] + offset as f64 * steps[k]);
            }
            let v = f(&p);
            evaluations += 1;
            let kv = key(goal, v);
            if kv < best_key || (kv == best_key && lex_less(&p, &best.point)) {
                best = Candidate { point: p, value: v };
                best_key = kv;
            }
        }
        for s in &mut steps {
            *s *= 0.5;
        }
    }
    (best, evaluations)
}

/// Optimises `f` over the box spanned by `axes`.
pub fn grid_refine<const D: usize, F>(
    axes: &[Axis; D],
    goal: Goal,
    settings: &RefineSettings,
    f: F,
) -> SearchOutcome<D>
where
    F: Fn(&[f64; D]) -> f64 + Sync + Send,
{
    let total: usize = axes.iter().map(|a| a.points).product();
    let keys = map_indexed(total, settings.execution, |i| key(goal, f(&coarse_point(axes, i))));

    // best `seeds` indices by (key, index); index order is lexicographic
    let seeds = settings.seeds.max(1);
    let mut top: Vec<(f64, usize)> = Vec::with_capacity(seeds + 1);
    for (i, &k) in keys.iter().enumerate() {
        if top.len() < seeds || k < top[top.len() - 1].0 {
            let pos = top.partition_point(|&(tk, _)| tk <= k);
            top.insert(pos, (k, i));
            top.truncate(seeds);
        }
    }
    let coarse_best = top[0].0;
    let near: Vec<usize> =
        keys.iter().enumerate().filter(|(_, &k)| k <= coarse_best + DEGENERACY_TOL).map(|(i, _)| i).collect();
    // evenly strided so that large flat regions are represented across the box
    let stride = near.len().div_ceil(NEAR_OPTIMAL_CAP).max(1);
    let near_optimal: Vec<[f64; D]> = near.iter().step_by(stride).map(|&i| coarse_point(axes, i)).collect();

    let starts: Vec<Candidate<D>> = top
        .iter()
        .map(|&(_, i)| {
            let point = coarse_point(axes, i);
            Candidate { point, value: f(&point) }
        })
        .collect();
    let results = map_slice(&starts, settings.execution, |s| refine(axes, goal, settings, *s, &f));

    let mut evaluations = total + starts.len();
    let mut refined = Vec::with_capacity(results.len());
    for (c, n) in results {
        evaluations += n;
        refined.push(c);
    }
    let mut best = refined[0];
    for c in &refined[1..] {
        let (kc, kb) = (key(goal, c.value), key(goal, best.value));
        if kc < kb || (kc == kb && lex_less(&c.point, &best.point)) {
            best = *c;
        }
    }
    SearchOutcome { best, refined, near_optimal, evaluations }
}
