//! Affine semigroups of exponents: the combinatorial data of an affine toric
//! variety.  A semigroup is given by generators in the nonnegative orthant of
//! the ambient lattice; the module derives its relation lattice (and the
//! corresponding binomials), the cone and dual cone, fibers of the exponent
//! map with witnesses, and supports of germs with exact cancellation.

use crate::arith::{dot_ii, Rat};
use crate::error::{Error, Result};
use crate::germ::Germ;
use crate::lattice;
use crate::polyhedron::{dd_cone, Polyhedron};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::sync::Arc;

/// Bound on the coordinate sum of values whose exponent-map fibers are
/// enumerated exhaustively.
pub const WITNESS_BOUND: i64 = 64;

/// Degree up to which the bounded normality spot-check enumerates cone
/// points at construction time.
pub const NORMALITY_CHECK_DEGREE: i64 = 10;

/// What is known about normality of the toric variety of the semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalityStatus {
    /// The caller vouched for normality.
    AssertedNormal,
    /// Every lattice point of the cone with coordinate sum at most the bound
    /// was verified to lie in the semigroup.
    CheckedUpToBound(i64),
    /// Not checked, or the spot-check found a gap.
    Unknown,
}

/// A value of the exponent map together with one witness exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupPoint {
    pub value: Vec<i64>,
    pub witness: Vec<i64>,
}

/// A finitely generated subsemigroup of the nonnegative orthant of `Z^n`,
/// with full-dimensional strongly convex cone.
#[derive(Debug)]
pub struct Semigroup {
    n: usize,
    generators: Vec<Vec<i64>>,
    kernel: Vec<Vec<i64>>,
    cone_rays: Vec<Vec<i64>>,
    dual_rays: Vec<Vec<i64>>,
    normality: NormalityStatus,
    lattice_full: bool,
}

impl PartialEq for Semigroup {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.generators == other.generators
    }
}

impl Eq for Semigroup {}

impl Semigroup {
    /// Standard semigroup checks: generators span the full lattice.
    pub fn new(n: usize, generators: Vec<Vec<i64>>) -> Result<Arc<Self>> {
        Self::build(n, generators, true, false)
    }

    /// Like `new`, but records the caller's assertion that the toric variety
    /// is normal instead of running the bounded spot-check.
    pub fn asserted_normal(n: usize, generators: Vec<Vec<i64>>) -> Result<Arc<Self>> {
        Self::build(n, generators, true, true)
    }

    /// Relaxed constructor for lattice computations on generator sets that
    /// span a proper sublattice; germ-level geometry on such semigroups is
    /// not meaningful and normality is left Unknown.
    pub fn with_sublattice(n: usize, generators: Vec<Vec<i64>>) -> Result<Arc<Self>> {
        Self::build(n, generators, false, false)
    }

    /// The standard semigroup: exponents of the affine coordinate ring.
    pub fn standard(n: usize) -> Arc<Self> {
        let gens = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        Self::build(n, gens, true, true).expect("standard semigroup is well-formed")
    }

    fn build(
        n: usize,
        generators: Vec<Vec<i64>>,
        require_full: bool,
        asserted_normal: bool,
    ) -> Result<Arc<Self>> {
        if n == 0 || generators.is_empty() {
            return Err(Error::DegenerateCone);
        }
        for g in &generators {
            if g.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: g.len() });
            }
            if g.iter().any(|&x| x < 0) {
                return Err(Error::NegativeExponent);
            }
            if g.iter().all(|&x| x == 0) {
                return Err(Error::DegenerateCone);
            }
        }
        if lattice::rank(&generators) != n {
            return Err(Error::DegenerateCone);
        }
        let factors = lattice::invariant_factors(&generators);
        let lattice_full = factors.len() == n && factors.iter().all(|&d| d == 1);
        if require_full && !lattice_full {
            return Err(Error::LatticeNotFull);
        }
        let r = generators.len();
        // ker of the exponent map: integer combinations of generators summing
        // to zero.  The constraint matrix has the generators as columns.
        let columns: Vec<Vec<i64>> = (0..n)
            .map(|j| (0..r).map(|i| generators[i][j]).collect())
            .collect();
        let kernel = lattice::kernel_basis(&columns, r);
        let origin = vec![vec![Rat::zero(); n]];
        let cone = Polyhedron::hull_with_recession(&origin, &generators)?;
        let cone_rays = cone.rays().to_vec();
        let dual = dd_cone(&generators, n);
        debug_assert!(dual.lines.is_empty(), "full-rank generators leave no lineality");
        let dual_rays = dual.rays;
        let mut sg = Semigroup {
            n,
            generators,
            kernel,
            cone_rays,
            dual_rays,
            normality: NormalityStatus::Unknown,
            lattice_full,
        };
        sg.normality = if asserted_normal {
            NormalityStatus::AssertedNormal
        } else if lattice_full && sg.spot_check_normality()? {
            NormalityStatus::CheckedUpToBound(NORMALITY_CHECK_DEGREE)
        } else {
            NormalityStatus::Unknown
        };
        Ok(Arc::new(sg))
    }

    fn spot_check_normality(&self) -> Result<bool> {
        for v in lattice_points_sum_at_most(self.n, NORMALITY_CHECK_DEGREE) {
            if self.dual_rays.iter().any(|u| dot_ii(u, &v) < 0) {
                continue; // outside the cone
            }
            if self.enumerate_fiber(&v)?.is_empty() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of generators, i.e. of ambient variables on the variety.
    pub fn r(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    /// Hermite-normal-form basis of the relation lattice of the generators.
    pub fn kernel_lattice(&self) -> &[Vec<i64>] {
        &self.kernel
    }

    /// Primitive extreme rays of the cone spanned by the generators.
    pub fn cone_rays(&self) -> &[Vec<i64>] {
        &self.cone_rays
    }

    /// Primitive extreme rays of the dual cone.
    pub fn dual_cone(&self) -> &[Vec<i64>] {
        &self.dual_rays
    }

    pub fn normality_status(&self) -> NormalityStatus {
        self.normality
    }

    pub fn is_lattice_full(&self) -> bool {
        self.lattice_full
    }

    /// The exponent map: `nu(k) = sum k_i * generator_i`.
    pub fn nu(&self, k: &[i64]) -> Result<SemigroupPoint> {
        if k.len() != self.r() {
            return Err(Error::DimensionMismatch { expected: self.r(), got: k.len() });
        }
        if k.iter().any(|&x| x < 0) {
            return Err(Error::NegativeExponent);
        }
        let mut value = vec![0i64; self.n];
        for (ki, g) in k.iter().zip(&self.generators) {
            for j in 0..self.n {
                value[j] += ki * g[j];
            }
        }
        Ok(SemigroupPoint { value, witness: k.to_vec() })
    }

    /// All exponents mapping to `value`, in lexicographic order.  Fibers are
    /// finite because every generator is nonzero and nonnegative; values with
    /// coordinate sum beyond the witness bound are refused.
    pub fn enumerate_fiber(&self, value: &[i64]) -> Result<Vec<Vec<i64>>> {
        if value.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: value.len() });
        }
        if value.iter().any(|&x| x < 0) {
            return Ok(Vec::new());
        }
        if value.iter().sum::<i64>() > WITNESS_BOUND {
            return Err(Error::WitnessBoundExceeded);
        }
        let mut out = Vec::new();
        let mut k = vec![0i64; self.r()];
        self.fiber_search(0, &mut value.to_vec(), &mut k, &mut out);
        Ok(out)
    }

    fn fiber_search(
        &self,
        idx: usize,
        remaining: &mut Vec<i64>,
        k: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if idx == self.r() {
            if remaining.iter().all(|&x| x == 0) {
                out.push(k.clone());
            }
            return;
        }
        let g = &self.generators[idx];
        let max_t = (0..self.n)
            .filter(|&j| g[j] > 0)
            .map(|j| remaining[j] / g[j])
            .min()
            .expect("generators are nonzero");
        for t in 0..=max_t {
            if t > 0 {
                for j in 0..self.n {
                    remaining[j] -= g[j];
                }
            }
            k[idx] = t;
            self.fiber_search(idx + 1, remaining, k, out);
        }
        for j in 0..self.n {
            remaining[j] += g[j] * max_t;
        }
        k[idx] = 0;
    }

    pub fn has_witness(&self, value: &[i64]) -> Result<bool> {
        Ok(!self.enumerate_fiber(value)?.is_empty())
    }

    /// `min { |k| : nu(k) = value }` — the fiber-minimal ambient degree.
    pub fn minimal_fiber_degree(&self, value: &[i64]) -> Result<usize> {
        let fiber = self.enumerate_fiber(value)?;
        fiber
            .iter()
            .map(|k| k.iter().sum::<i64>() as usize)
            .min()
            .ok_or_else(|| Error::HypothesisNotMet("value is not in the semigroup".into()))
    }

    /// Fiber-summed terms of a germ: map from exponent-map value to the total
    /// coefficient and the least contributing ambient exponent.
    pub(crate) fn fibered_terms(&self, g: &Germ) -> Result<BTreeMap<Vec<i64>, (Rat, Vec<i64>)>> {
        if g.vars() != self.r() {
            return Err(Error::DimensionMismatch { expected: self.r(), got: g.vars() });
        }
        let mut fibers: BTreeMap<Vec<i64>, (Rat, Vec<i64>)> = BTreeMap::new();
        for (k, c) in g.terms() {
            let value = self.nu(k)?.value;
            match fibers.get_mut(&value) {
                Some((total, _)) => *total += c,
                None => {
                    fibers.insert(value, (c.clone(), k.clone()));
                }
            }
        }
        fibers.retain(|_, (total, _)| !total.is_zero());
        Ok(fibers)
    }

    /// Support of a germ on the toric variety: exponent-map values whose
    /// fiber-summed coefficient is nonzero, each with one witness.
    pub fn support(&self, g: &Germ) -> Result<Vec<SemigroupPoint>> {
        Ok(self
            .fibered_terms(g)?
            .into_iter()
            .map(|(value, (_, witness))| SemigroupPoint { value, witness })
            .collect())
    }

    /// The associated polynomial in `n` fresh variables: one term per support
    /// value, with the fiber-summed coefficient.
    pub fn flatten(&self, g: &Germ) -> Result<Germ> {
        let fibers = self.fibered_terms(g)?;
        if fibers.keys().any(|v| v.iter().all(|&x| x == 0)) {
            return Err(Error::ConstantTermPresent);
        }
        Germ::from_terms(self.n, fibers.into_iter().map(|(v, (c, _))| (v, c)), None)
    }

    /// One binomial per relation-lattice basis row: `x^{a+} - x^{a-}`.
    pub fn lattice_binomials(self: &Arc<Self>) -> Vec<Germ> {
        self.kernel
            .iter()
            .map(|row| {
                let plus: Vec<i64> = row.iter().map(|&x| x.max(0)).collect();
                let minus: Vec<i64> = row.iter().map(|&x| (-x).max(0)).collect();
                Germ::from_terms(
                    self.r(),
                    [(plus, Rat::one()), (minus, -Rat::one())],
                    Some(Arc::clone(self)),
                )
                .expect("kernel rows give valid exponents")
            })
            .collect()
    }
}

/// All nonnegative integer vectors of length `n` with coordinate sum at most
/// `d`, in lexicographic order.
pub(crate) fn lattice_points_sum_at_most(n: usize, d: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    fn rec(i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for t in 0..=left {
            cur[i] = t;
            rec(i + 1, left - t, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, d, &mut cur, &mut out);
    out
}
