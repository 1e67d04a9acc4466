//! Ideals of polynomial germs: Newton polyhedra, order, Jacobian ideals,
//! face restrictions, Newton non-degeneracy and integral-closure monomials.

use crate::error::{Error, Result};
use crate::germ::Germ;
use crate::polyhedron::{standard_orthant_rays, Face, Polyhedron, ScaleValue};
use crate::semigroup::Semigroup;
use crate::torus::{system_solvable_in_torus, Decision};
use num_traits::One;
use std::collections::BTreeSet;
use std::sync::Arc;

/// The restriction of an ideal's generators to a compact face of its Newton
/// polyhedron, flattened to the torus variables.  Generators whose support
/// misses the face contribute zero equations, which are retained.
#[derive(Debug, Clone)]
pub struct FaceSystem {
    pub face: Face,
    pub equations: Vec<Germ>,
}

/// A monomial of the integral closure, with ambient exponent and a flag for
/// minimality among the listed monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureMonomial {
    pub exponent: Vec<i64>,
    pub is_minimal: bool,
}

/// A finitely generated ideal of germs sharing one coordinate ring.
#[derive(Debug, Clone)]
pub struct Ideal {
    generators: Vec<Germ>,
    newton: Option<Polyhedron>,
}

impl Ideal {
    pub fn new(generators: Vec<Germ>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::HypothesisNotMet(
                "an ideal needs at least one generator".into(),
            ));
        }
        let vars = generators[0].vars();
        let context = generators[0].context().cloned();
        for g in &generators {
            if g.vars() != vars {
                return Err(Error::DimensionMismatch { expected: vars, got: g.vars() });
            }
            let same = match (&context, g.context()) {
                (None, None) => true,
                (Some(a), Some(b)) => a == b,
                _ => false,
            };
            if !same {
                return Err(Error::HypothesisNotMet(
                    "generators live in different coordinate rings".into(),
                ));
            }
            if g.is_zero() {
                return Err(Error::ZeroGerm);
            }
        }
        // Support points, with per-generator fiber cancellation on a toric
        // context; the recession cone is the semigroup cone or the orthant.
        let mut points: BTreeSet<Vec<i64>> = BTreeSet::new();
        match &context {
            None => {
                for g in &generators {
                    points.extend(g.exponents());
                }
            }
            Some(s) => {
                for g in &generators {
                    for pt in s.support(g)? {
                        points.insert(pt.value);
                    }
                }
            }
        }
        let newton = if points.is_empty() {
            None
        } else {
            let rays = match &context {
                None => standard_orthant_rays(vars),
                Some(s) => s.cone_rays().to_vec(),
            };
            let pts: Vec<Vec<i64>> = points.into_iter().collect();
            Some(Polyhedron::hull_lattice(&pts, &rays)?)
        };
        Ok(Ideal { generators, newton })
    }

    /// The ideal generated by one germ.
    pub fn principal(g: Germ) -> Result<Self> {
        Ideal::new(vec![g])
    }

    /// All monomials of total degree `a` in the ambient variables.
    pub fn maximal_power(
        vars: usize,
        a: i64,
        context: Option<Arc<Semigroup>>,
    ) -> Result<Self> {
        if a < 1 {
            return Err(Error::HypothesisNotMet(
                "maximal-ideal power must be positive".into(),
            ));
        }
        let gens: Vec<Germ> = crate::semigroup::lattice_points_sum_at_most(vars, a)
            .into_iter()
            .filter(|k| k.iter().sum::<i64>() == a)
            .map(|k| {
                Germ::monomial(vars, k, crate::arith::Rat::one(), context.clone())
                    .expect("monomial exponents are valid")
            })
            .collect();
        Ideal::new(gens)
    }

    pub fn generators(&self) -> &[Germ] {
        &self.generators
    }

    pub fn vars(&self) -> usize {
        self.generators[0].vars()
    }

    pub fn context(&self) -> Option<&Arc<Semigroup>> {
        self.generators[0].context()
    }

    /// Every generator is a single term.
    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(Germ::is_monomial)
    }

    /// Every generator has at most two terms.
    pub fn is_binomial(&self) -> bool {
        self.generators.iter().all(Germ::is_binomial_or_less)
    }

    pub fn newton_polyhedron(&self) -> Result<&Polyhedron> {
        self.newton.as_ref().ok_or(Error::EmptySupport)
    }

    /// Order of the ideal: the minimum of the generator orders.  Generators
    /// that vanish on the toric variety impose nothing and are skipped.
    pub fn order(&self) -> Result<usize> {
        let mut best: Option<usize> = None;
        for g in &self.generators {
            match g.order() {
                Ok(d) => best = Some(best.map_or(d, |b| b.min(d))),
                Err(Error::ZeroGerm) => continue,
                Err(e) => return Err(e),
            }
        }
        best.ok_or(Error::ZeroGerm)
    }

    /// The Jacobian ideal of a germ: the nonzero formal partial derivatives
    /// with respect to every ambient variable.
    pub fn jacobian(f: &Germ) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroGerm);
        }
        if f.is_constant() {
            return Err(Error::ConstantGerm);
        }
        let mut partials = Vec::new();
        for i in 0..f.vars() {
            let d = f.derivative(i)?;
            if !d.is_zero() {
                partials.push(d);
            }
        }
        if partials.is_empty() {
            return Err(Error::ConstantGerm);
        }
        Ideal::new(partials)
    }

    /// Whether an integer point (a support value) lies on the given face.
    fn on_face(&self, face: &Face, value: &[i64]) -> Result<bool> {
        let p = self.newton_polyhedron()?;
        for &fi in &face.defining_facets {
            let f = &p.facets()[fi];
            if crate::arith::dot_ir(&f.normal, &crate::arith::to_rat_vec(value)) != f.offset {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Restrict every generator to the terms whose support value lies on the
    /// given compact face, then flatten to the torus variables.
    pub fn face_restriction(&self, face: &Face) -> Result<FaceSystem> {
        if !face.is_compact() {
            return Err(Error::NonCompactFace);
        }
        let mut equations = Vec::with_capacity(self.generators.len());
        match self.context() {
            None => {
                for g in &self.generators {
                    let mut kept = Vec::new();
                    for (k, c) in g.terms() {
                        if self.on_face(face, k)? {
                            kept.push((k.clone(), c.clone()));
                        }
                    }
                    equations.push(Germ::from_terms(g.vars(), kept, None)?);
                }
            }
            Some(s) => {
                let s = Arc::clone(s);
                for g in &self.generators {
                    let mut kept = Vec::new();
                    for (value, (total, _)) in s.fibered_terms(g)? {
                        if self.on_face(face, &value)? {
                            kept.push((value, total));
                        }
                    }
                    equations.push(Germ::from_terms(s.n(), kept, None)?);
                }
            }
        }
        Ok(FaceSystem { face: face.clone(), equations })
    }

    /// Newton non-degeneracy: no compact-face system has a common zero in
    /// the torus.  Exact when every face was decided exactly; heuristic when
    /// any face needed numeric sampling.
    pub fn is_nondegenerate(&self, seed: u64) -> Result<Decision> {
        let faces = self.newton_polyhedron()?.compact_faces();
        let mut any_heuristic = false;
        let mut solvable_heuristically = false;
        for (i, face) in faces.iter().enumerate() {
            let system = self.face_restriction(face)?;
            let face_seed = seed.wrapping_add((i as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
            match system_solvable_in_torus(&system.equations, face_seed) {
                Decision::Exact(true) => return Ok(Decision::Exact(false)),
                Decision::Exact(false) => {}
                Decision::Heuristic(s) => {
                    any_heuristic = true;
                    solvable_heuristically |= s;
                }
            }
        }
        Ok(if any_heuristic {
            Decision::Heuristic(!solvable_heuristically)
        } else {
            Decision::Exact(true)
        })
    }

    /// Does the Newton polyhedron meet every extreme ray of the recession
    /// cone at finite scale?  This is the polyhedral finite-colength test; it
    /// is exact for monomial ideals and for exactly non-degenerate ideals,
    /// and refuses otherwise.
    pub fn finite_colength_test(&self, seed: u64) -> Result<bool> {
        if !self.is_monomial() && self.is_nondegenerate(seed)? != Decision::Exact(true) {
            return Err(Error::HypothesisNotMet(
                "finite-colength test needs a monomial or exactly non-degenerate ideal".into(),
            ));
        }
        let p = self.newton_polyhedron()?;
        for ray in p.rays() {
            if matches!(p.axis_scale_lattice(ray)?, ScaleValue::Infinite) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Monomials whose support value lands in the Newton polyhedron, up to
    /// the given ambient degree.  Requires exact non-degeneracy unless the
    /// caller passes `assume_nondegenerate` acknowledging the hypothesis.
    pub fn integral_closure_monomials(
        &self,
        degree_bound: i64,
        assume_nondegenerate: bool,
        seed: u64,
    ) -> Result<Vec<ClosureMonomial>> {
        if !assume_nondegenerate && !self.is_monomial() {
            match self.is_nondegenerate(seed)? {
                Decision::Exact(true) => {}
                Decision::Exact(false) => {
                    return Err(Error::HypothesisNotMet(
                        "ideal is Newton degenerate; the monomial closure description does not apply"
                            .into(),
                    ))
                }
                Decision::Heuristic(_) => return Err(Error::NondegeneracyUnknown),
            }
        }
        let p = self.newton_polyhedron()?;
        let mut hits: Vec<Vec<i64>> = Vec::new();
        for k in crate::semigroup::lattice_points_sum_at_most(self.vars(), degree_bound) {
            let inside = match self.context() {
                None => p.contains_lattice(&k, 1)?,
                Some(s) => p.contains_lattice(&s.nu(&k)?.value, 1)?,
            };
            if inside {
                hits.push(k);
            }
        }
        let out = hits
            .iter()
            .map(|k| {
                let minimal = !hits.iter().any(|other| {
                    other != k && other.iter().zip(k).all(|(a, b)| a <= b)
                });
                ClosureMonomial { exponent: k.clone(), is_minimal: minimal }
            })
            .collect();
        Ok(out)
    }
}
