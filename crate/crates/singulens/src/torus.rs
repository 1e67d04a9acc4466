//! Solvability of polynomial systems in the algebraic torus.
//!
//! Face systems are decided by a tiered strategy.  The first three tiers are
//! exact: a single-monomial equation can never vanish on the torus; one lone
//! equation with at least two terms always has a torus zero (restrict to a
//! generic one-parameter subgroup and take a nonzero root); and an
//! all-binomial system reduces to character equations `z^w = c`, consistent
//! exactly when every integer relation among the exponent differences is
//! matched by the corresponding multiplicative relation among the constants.
//! Everything else falls back to seeded numeric sampling with Gauss–Newton
//! refinement, reported as heuristic.

use crate::arith::Rat;
use crate::germ::Germ;
use crate::lattice;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Number of random torus starting points per sampled system.
pub const SAMPLE_STARTS: usize = 200;
/// Residual below which a refined sample counts as a zero.  The residual of
/// each equation is measured relative to its largest term magnitude, so
/// acceptance demands genuine cancellation and cannot be faked by scaling
/// the point toward a coordinate hyperplane.
pub const SAMPLE_RESIDUAL: f64 = 1e-9;
/// Coordinates closer to zero than this disqualify a sample as a torus point.
pub const TORUS_MARGIN: f64 = 1e-6;

/// Outcome of a solvability or non-degeneracy decision: the backing method
/// is recorded alongside the boolean.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    Exact(bool),
    Heuristic(bool),
}

impl Decision {
    pub fn value(self) -> bool {
        match self {
            Decision::Exact(b) | Decision::Heuristic(b) => b,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Decision::Exact(_))
    }
}

/// Decide whether the equations have a common zero with all coordinates
/// nonzero.  Identically zero equations impose nothing and are skipped.
pub fn system_solvable_in_torus(equations: &[Germ], seed: u64) -> Decision {
    let live: Vec<&Germ> = equations.iter().filter(|g| !g.is_zero()).collect();
    if live.is_empty() {
        return Decision::Exact(true);
    }
    if live.iter().any(|g| g.terms().len() == 1) {
        return Decision::Exact(false);
    }
    if live.len() == 1 {
        // A lone equation with two or more terms always vanishes somewhere
        // on the torus.
        return Decision::Exact(true);
    }
    if live.iter().all(|g| g.terms().len() == 2) {
        return Decision::Exact(binomial_system_solvable(&live));
    }
    Decision::Heuristic(sample_for_zero(&live, seed))
}

/// The raw numeric backend on its own: random torus starts refined toward a
/// common zero.  Exposed so the exact backends can be cross-validated
/// against it.
pub fn sample_solvable(equations: &[Germ], seed: u64) -> bool {
    let live: Vec<&Germ> = equations.iter().filter(|g| !g.is_zero()).collect();
    if live.is_empty() {
        return true;
    }
    sample_for_zero(&live, seed)
}

/// Character-consistency test for a system of binomial equations
/// `a z^p + b z^q = 0`, i.e. `z^(p-q) = -b/a`.
fn binomial_system_solvable(equations: &[&Germ]) -> bool {
    let mut diffs: Vec<Vec<i64>> = Vec::new();
    let mut constants: Vec<Rat> = Vec::new();
    for eq in equations {
        let mut it = eq.terms().iter();
        let (q, b) = it.next().expect("binomial has two terms");
        let (p, a) = it.next().expect("binomial has two terms");
        diffs.push(p.iter().zip(q).map(|(x, y)| x - y).collect());
        constants.push(-(b / a));
    }
    let m = diffs.len();
    let n = diffs[0].len();
    // Relations among the exponent differences: integer vectors lambda with
    // sum lambda_i * w_i = 0, found as the kernel of the matrix with the
    // w_i as columns.
    let columns: Vec<Vec<i64>> = (0..n)
        .map(|j| (0..m).map(|i| diffs[i][j]).collect())
        .collect();
    let relations = lattice::kernel_basis(&columns, m);
    for lambda in &relations {
        let mut prod = Rat::one();
        for (l, c) in lambda.iter().zip(&constants) {
            match l.cmp(&0) {
                std::cmp::Ordering::Greater => {
                    for _ in 0..*l {
                        prod *= c;
                    }
                }
                std::cmp::Ordering::Less => {
                    for _ in 0..-*l {
                        prod /= c;
                    }
                }
                std::cmp::Ordering::Equal => {}
            }
        }
        if !prod.is_one() {
            return false;
        }
    }
    true
}

fn rat_to_f64(r: &Rat) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

/// Evaluate a germ at a complex point.
pub fn eval_complex(g: &Germ, z: &[Complex64]) -> Complex64 {
    eval_with_scale(g, z).0
}

/// Evaluate a germ and report the largest term magnitude alongside, the
/// natural scale against which cancellation is measured.
fn eval_with_scale(g: &Germ, z: &[Complex64]) -> (Complex64, f64) {
    let mut total = Complex64::new(0.0, 0.0);
    let mut scale = 0.0f64;
    for (exp, coeff) in g.terms() {
        let mut term = Complex64::new(rat_to_f64(coeff), 0.0);
        for (zi, &e) in z.iter().zip(exp) {
            for _ in 0..e {
                term *= zi;
            }
        }
        scale = scale.max(term.norm());
        total += term;
    }
    (total, scale)
}

/// Seeded sampling with Gauss–Newton refinement: returns true when some
/// start converges to a common zero staying inside the torus.
fn sample_for_zero(equations: &[&Germ], seed: u64) -> bool {
    let n = equations[0].vars();
    let partials: Vec<Vec<Germ>> = equations
        .iter()
        .map(|eq| {
            (0..n)
                .map(|i| eq.derivative(i).expect("valid variable index"))
                .collect()
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SAMPLE_STARTS {
        let mut z: Vec<Complex64> = (0..n)
            .map(|_| {
                let mag = (0.25f64.ln() + rng.gen::<f64>() * (4.0f64.ln() - 0.25f64.ln())).exp();
                let phase = rng.gen::<f64>() * std::f64::consts::TAU;
                Complex64::from_polar(mag, phase)
            })
            .collect();
        if refine(equations, &partials, &mut z) {
            return true;
        }
    }
    false
}

/// The Gauss–Newton objective: the sum of squared equation values.
fn sum_of_squares(equations: &[&Germ], z: &[Complex64]) -> f64 {
    equations
        .iter()
        .map(|eq| eval_complex(eq, z).norm_sqr())
        .sum()
}

/// Worst relative equation residual: each value is divided by the largest
/// term magnitude of its equation at the point.
fn relative_residual(equations: &[&Germ], z: &[Complex64]) -> f64 {
    let mut worst = 0.0f64;
    for eq in equations {
        let (value, scale) = eval_with_scale(eq, z);
        worst = worst.max(value.norm() / scale.max(f64::MIN_POSITIVE));
    }
    worst
}

fn torus_point(z: &[Complex64]) -> bool {
    z.iter().all(|zi| zi.norm() > TORUS_MARGIN)
}

fn refine(equations: &[&Germ], partials: &[Vec<Germ>], z: &mut Vec<Complex64>) -> bool {
    let n = z.len();
    let m = equations.len();
    for _ in 0..60 {
        if z.iter().any(|zi| !zi.norm().is_finite() || zi.norm() > 1e6) {
            return false;
        }
        if relative_residual(equations, z) < SAMPLE_RESIDUAL {
            return torus_point(z);
        }
        let res = sum_of_squares(equations, z);
        if !res.is_finite() {
            return false;
        }
        // Gauss–Newton step through the normal equations of the linearized
        // least-squares problem.
        let fvals: Vec<Complex64> = equations.iter().map(|eq| eval_complex(eq, z)).collect();
        let jac: Vec<Vec<Complex64>> = (0..m)
            .map(|i| (0..n).map(|j| eval_complex(&partials[i][j], z)).collect())
            .collect();
        let mut a = vec![vec![Complex64::new(0.0, 0.0); n]; n];
        let mut b = vec![Complex64::new(0.0, 0.0); n];
        for p in 0..n {
            for q in 0..n {
                for i in 0..m {
                    a[p][q] += jac[i][p].conj() * jac[i][q];
                }
            }
            for i in 0..m {
                b[p] -= jac[i][p].conj() * fvals[i];
            }
        }
        // Levenberg damping keeps the normal matrix invertible when the
        // system has fewer equations than unknowns.
        let maxdiag = (0..n).fold(0.0f64, |acc, p| acc.max(a[p][p].norm()));
        let damp = 1e-9 * maxdiag.max(1.0);
        for (p, row) in a.iter_mut().enumerate() {
            row[p] += Complex64::new(damp, 0.0);
        }
        let Some(step) = solve_complex(&mut a, &mut b) else {
            return false;
        };
        // Backtracking: halve the step until the residual improves.
        let mut scale = 1.0;
        let mut accepted = false;
        for _ in 0..6 {
            let trial: Vec<Complex64> = z
                .iter()
                .zip(&step)
                .map(|(zi, di)| zi + di * scale)
                .collect();
            if sum_of_squares(equations, &trial) < res {
                *z = trial;
                accepted = true;
                break;
            }
            scale *= 0.5;
        }
        if !accepted {
            return false;
        }
    }
    relative_residual(equations, z) < SAMPLE_RESIDUAL && torus_point(z)
}

/// In-place Gaussian elimination with partial pivoting; returns the solution
/// of `A x = b` or None when the matrix is numerically singular.
fn solve_complex(a: &mut [Vec<Complex64>], b: &mut [Complex64]) -> Option<Vec<Complex64>> {
    let n = b.len();
    for c in 0..n {
        let pivot = (c..n).max_by(|&i, &j| {
            a[i][c]
                .norm()
                .partial_cmp(&a[j][c].norm())
                .unwrap_or(std::cmp::Ordering::Equal)
        })?;
        if a[pivot][c].norm() < 1e-14 {
            return None;
        }
        a.swap(c, pivot);
        b.swap(c, pivot);
        for i in 0..n {
            if i != c {
                let f = a[i][c] / a[c][c];
                for j in c..n {
                    let v = a[c][j];
                    a[i][j] -= f * v;
                }
                let v = b[c];
                b[i] -= f * v;
            }
        }
    }
    Some((0..n).map(|i| b[i] / a[i][i]).collect())
}
