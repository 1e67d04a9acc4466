//! Numeric invariants of ideals: Łojasiewicz exponents (polyhedral and
//! brute-force), Hilbert–Samuel multiplicity with its counting oracle,
//! monomial colength, the alternating-volume Milnor oracle, hypersurface
//! multiplicity, and the invariant chain bundling them together.

use crate::arith::{factorial, rat_int, Rat};
use crate::error::{Error, Result};
use crate::germ::Germ;
use crate::ideal::Ideal;
use crate::polyhedron::ScaleValue;
use crate::semigroup::lattice_points_sum_at_most;
use crate::torus::Decision;
use num_traits::{ToPrimitive, Zero};

/// Where a reported value came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Computed exactly from the Newton polyhedron.
    ExactPolyhedral,
    /// Computed by direct counting or search, independent of the polyhedron.
    Oracle,
    /// Not computed because a hypothesis could not be certified.
    Refused,
}

/// The invariants of one ideal, each tagged with its provenance, plus the
/// verdict on the chain `loj0^n >= mult >= ord^n`.
#[derive(Debug, Clone)]
pub struct InvariantBundle {
    pub ord: usize,
    pub ord_provenance: Provenance,
    pub loj0: Option<ScaleValue>,
    pub loj0_provenance: Provenance,
    pub mult: Option<i64>,
    pub mult_provenance: Provenance,
    pub colength: Option<i64>,
    pub colength_provenance: Provenance,
    /// True when all three chain members were available and the chain held.
    pub chain_verified: bool,
}

fn require_ambient(i: &Ideal, what: &str) -> Result<()> {
    if i.context().is_some() {
        return Err(Error::HypothesisNotMet(format!(
            "{what} is only computed in the standard ambient ring"
        )));
    }
    Ok(())
}

fn require_monomial_or_nondegenerate(i: &Ideal, seed: u64) -> Result<()> {
    if i.is_monomial() {
        return Ok(());
    }
    match i.is_nondegenerate(seed)? {
        Decision::Exact(true) => Ok(()),
        Decision::Exact(false) => Err(Error::HypothesisNotMet(
            "ideal is Newton degenerate".into(),
        )),
        Decision::Heuristic(_) => Err(Error::HypothesisNotMet(
            "non-degeneracy could not be certified exactly".into(),
        )),
    }
}

/// Łojasiewicz exponent of an ideal with respect to the maximal ideal: the
/// largest scale at which a coordinate axis first enters the Newton
/// polyhedron, or Infinite when the polyhedron misses an axis.
pub fn loj0(i: &Ideal, seed: u64) -> Result<ScaleValue> {
    require_ambient(i, "the Łojasiewicz exponent")?;
    if !i.finite_colength_test(seed)? {
        return Ok(ScaleValue::Infinite);
    }
    let p = i.newton_polyhedron()?;
    let mut best = Rat::zero();
    for ray in crate::polyhedron::standard_orthant_rays(i.vars()) {
        match p.axis_scale_lattice(&ray)? {
            ScaleValue::Finite(s) => best = best.max(s),
            ScaleValue::Infinite => return Ok(ScaleValue::Infinite),
        }
    }
    Ok(ScaleValue::Finite(best))
}

/// Relative Łojasiewicz exponent of `i` with respect to `j`: the largest
/// scale at which a vertex direction of `j`'s polyhedron enters `i`'s.
pub fn lojj(i: &Ideal, j: &Ideal, seed: u64) -> Result<ScaleValue> {
    require_ambient(i, "the relative Łojasiewicz exponent")?;
    require_ambient(j, "the relative Łojasiewicz exponent")?;
    if i.vars() != j.vars() {
        return Err(Error::DimensionMismatch { expected: i.vars(), got: j.vars() });
    }
    require_monomial_or_nondegenerate(i, seed)?;
    require_monomial_or_nondegenerate(j, seed)?;
    let pi = i.newton_polyhedron()?;
    let pj = j.newton_polyhedron()?;
    let mut best = Rat::zero();
    for v in pj.vertices() {
        match pi.axis_scale(v)? {
            ScaleValue::Finite(s) => best = best.max(s),
            ScaleValue::Infinite => return Ok(ScaleValue::Infinite),
        }
    }
    Ok(ScaleValue::Finite(best))
}

/// Brute-force Łojasiewicz oracle for monomial ideals: the least ratio `a/b`
/// with `1 <= a, b <= bound` such that every monomial of degree `a` lies in
/// the `b`-fold dilation of the Newton polyhedron.
pub fn loj0_oracle(i: &Ideal, bound: i64) -> Result<Rat> {
    require_ambient(i, "the Łojasiewicz oracle")?;
    if !i.is_monomial() {
        return Err(Error::HypothesisNotMet(
            "the brute-force oracle only handles monomial ideals".into(),
        ));
    }
    if bound < 1 {
        return Err(Error::BoundTooSmall);
    }
    let p = i.newton_polyhedron()?;
    let n = i.vars();
    let mut best: Option<Rat> = None;
    for b in 1..=bound {
        // Feasibility in `a` is monotone: degree a+1 monomials dominate
        // degree a ones, so scan up from the smallest candidate.
        for a in 1..=bound {
            let ratio = Rat::new(a.into(), b.into());
            if best.as_ref().is_some_and(|best| *best <= ratio) {
                break;
            }
            let mut all_in = true;
            for k in lattice_points_sum_at_most(n, a) {
                if k.iter().sum::<i64>() == a && !p.contains_lattice(&k, b)? {
                    all_in = false;
                    break;
                }
            }
            if all_in {
                best = Some(ratio);
                break;
            }
        }
    }
    best.ok_or(Error::BoundTooSmall)
}

/// Hilbert–Samuel multiplicity as the normalized volume of the staircase
/// region: `n!` times the covolume of the Newton polyhedron.
pub fn multiplicity_polyhedral(i: &Ideal, seed: u64) -> Result<i64> {
    require_ambient(i, "the multiplicity")?;
    require_monomial_or_nondegenerate(i, seed)?;
    let p = i.newton_polyhedron()?;
    let e = factorial(i.vars()) * p.covolume()?;
    if !e.is_integer() {
        return Err(Error::NonIntegerResult);
    }
    e.to_integer()
        .to_i64()
        .ok_or_else(|| Error::InternalInconsistency("multiplicity exceeds the integer range".into()))
}

/// Exponents of the generators of a monomial ideal.
fn monomial_exponents(i: &Ideal) -> Result<Vec<Vec<i64>>> {
    if !i.is_monomial() {
        return Err(Error::HypothesisNotMet(
            "this computation needs a monomial ideal".into(),
        ));
    }
    Ok(i.generators()
        .iter()
        .map(|g| g.exponents()[0].clone())
        .collect())
}

/// Drop exponents dominated componentwise by another listed exponent.  A
/// dominator has total degree at most that of the dominated point, so
/// scanning in degree order only compares against already-kept points.
fn minimalize(mut gens: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    gens.sort_by_key(|g| (g.iter().sum::<i64>(), g.clone()));
    gens.dedup();
    let mut kept: Vec<Vec<i64>> = Vec::new();
    for g in gens {
        if !kept
            .iter()
            .any(|h| h.iter().zip(&g).all(|(a, b)| a <= b))
        {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

/// Lattice points of the orthant outside the staircase spanned by `gens`,
/// counted by slicing along the last coordinate.
fn staircase_colength(gens: &[Vec<i64>]) -> Result<i64> {
    if gens.is_empty() {
        return Err(Error::InfiniteColength);
    }
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return Ok(0);
    }
    let n = gens[0].len();
    if n == 1 {
        return Ok(gens.iter().map(|g| g[0]).min().expect("nonempty"));
    }
    let last = n - 1;
    let cap = gens
        .iter()
        .filter(|g| g[..last].iter().all(|&e| e == 0))
        .map(|g| g[last])
        .min()
        .ok_or(Error::InfiniteColength)?;
    // The slice ideal is constant between consecutive generator heights.
    let mut heights: Vec<i64> = gens.iter().map(|g| g[last]).filter(|&h| h <= cap).collect();
    heights.push(0);
    heights.push(cap);
    heights.sort();
    heights.dedup();
    let mut total = 0i64;
    for w in heights.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let slice: Vec<Vec<i64>> = gens
            .iter()
            .filter(|g| g[last] <= lo)
            .map(|g| g[..last].to_vec())
            .collect();
        total += (hi - lo) * staircase_colength(&minimalize(slice))?;
    }
    Ok(total)
}

/// Colength of a monomial ideal: the number of standard monomials.
pub fn colength_monomial(i: &Ideal) -> Result<i64> {
    require_ambient(i, "the monomial colength")?;
    let gens = minimalize(monomial_exponents(i)?);
    staircase_colength(&gens)
}

/// The `b`-fold Minkowski power of a monomial ideal: sums of `b` generator
/// exponents, minimalized.
pub fn monomial_power(i: &Ideal, b: usize) -> Result<Ideal> {
    require_ambient(i, "the monomial power")?;
    if b == 0 {
        return Err(Error::HypothesisNotMet("power must be positive".into()));
    }
    let base = minimalize(monomial_exponents(i)?);
    let mut power = base.clone();
    for _ in 1..b {
        let mut next = Vec::with_capacity(power.len() * base.len());
        for p in &power {
            for g in &base {
                next.push(p.iter().zip(g).map(|(x, y)| x + y).collect());
            }
        }
        power = minimalize(next);
    }
    Ideal::new(
        power
            .into_iter()
            .map(|k| {
                Germ::monomial(i.vars(), k, rat_int(1), None).expect("valid monomial exponent")
            })
            .collect(),
    )
}

/// Multiplicity oracle by counting: colengths of successive powers are fit
/// with the degree-`n` Hilbert polynomial through the last `n + 1` samples;
/// the result is `n!` times the leading coefficient, i.e. the top finite
/// difference.  Earlier samples in the range must lie on the fitted
/// polynomial, otherwise the counts have not stabilized.
pub fn hilbert_fit(i: &Ideal, k_lo: i64, k_hi: i64) -> Result<i64> {
    require_ambient(i, "the Hilbert fit")?;
    let n = i.vars();
    if k_lo < 1 || (k_hi - k_lo + 1) < n as i64 + 2 {
        return Err(Error::RangeTooShort);
    }
    let mut counts: Vec<(i64, i64)> = Vec::new();
    for k in k_lo..=k_hi {
        let power = monomial_power(i, k as usize)?;
        let gens = minimalize(monomial_exponents(&power)?);
        counts.push((k, staircase_colength(&gens)?));
    }
    let window = &counts[counts.len() - (n + 1)..];
    // Top finite difference of the window = n! * leading coefficient.
    let mut diffs: Vec<i64> = window.iter().map(|&(_, v)| v).collect();
    for _ in 0..n {
        diffs = diffs.windows(2).map(|w| w[1] - w[0]).collect();
    }
    let leading = diffs[0];
    // Lagrange-evaluate the window polynomial at every earlier sample.
    for &(k0, v0) in &counts[..counts.len() - (n + 1)] {
        let mut value = Rat::zero();
        for (a, &(ka, va)) in window.iter().enumerate() {
            let mut term = rat_int(va);
            for (b, &(kb, _)) in window.iter().enumerate() {
                if a != b {
                    term *= Rat::new((k0 - kb).into(), (ka - kb).into());
                }
            }
            value += term;
        }
        if value != rat_int(v0) {
            return Err(Error::NonStabilized);
        }
    }
    Ok(leading)
}

/// Compute order, Łojasiewicz exponent, multiplicity and colength together,
/// recording a provenance per field, and verify the chain
/// `loj0^n >= mult >= ord^n` whenever all members are available.
pub fn check_chain(i: &Ideal, seed: u64) -> Result<InvariantBundle> {
    let ord = i.order()?;
    let n = i.vars();
    let (loj0_value, loj0_provenance) = match loj0(i, seed) {
        Ok(v) => (Some(v), Provenance::ExactPolyhedral),
        Err(_) => (None, Provenance::Refused),
    };
    let (mult, mult_provenance) = match multiplicity_polyhedral(i, seed) {
        Ok(v) => (Some(v), Provenance::ExactPolyhedral),
        Err(_) => (None, Provenance::Refused),
    };
    let (colength, colength_provenance) = match colength_monomial(i) {
        Ok(v) => (Some(v), Provenance::Oracle),
        Err(_) => (None, Provenance::Refused),
    };
    let mut chain_verified = false;
    if let (Some(ScaleValue::Finite(l)), Some(e)) = (&loj0_value, mult) {
        let ln = num_traits::pow(l.clone(), n);
        let ordn = num_traits::pow(rat_int(ord as i64), n);
        if ln < rat_int(e) || rat_int(e) < ordn {
            return Err(Error::InternalInconsistency(format!(
                "invariant chain failed: loj0^n = {ln}, mult = {e}, ord^n = {ordn}"
            )));
        }
        chain_verified = true;
    }
    Ok(InvariantBundle {
        ord,
        ord_provenance: Provenance::ExactPolyhedral,
        loj0: loj0_value,
        loj0_provenance,
        mult,
        mult_provenance,
        colength,
        colength_provenance,
        chain_verified,
    })
}

/// Alternating-sum Milnor oracle for a convenient, non-degenerate germ: over
/// every coordinate subset the normalized covolume of the restricted
/// diagram, with alternating signs; the empty subset contributes 1.
pub fn kouchnirenko_mu(f: &Germ, seed: u64) -> Result<i64> {
    if f.context().is_some() {
        return Err(Error::HypothesisNotMet(
            "the Milnor oracle is only computed in the standard ambient ring".into(),
        ));
    }
    let n = f.vars();
    let ideal = Ideal::principal(f.clone())?;
    for axis in 0..n {
        let touches = f.terms().keys().any(|k| {
            k[axis] > 0 && k.iter().enumerate().all(|(j, &e)| j == axis || e == 0)
        });
        if !touches {
            return Err(Error::NotConvenient);
        }
    }
    // Milnor non-degeneracy: on every compact face the gradient of the face
    // polynomial has no common torus zero.
    let faces = ideal.newton_polyhedron()?.compact_faces();
    for (idx, face) in faces.iter().enumerate() {
        let restricted = ideal.face_restriction(face)?;
        let f_face = &restricted.equations[0];
        let mut gradient = Vec::new();
        for axis in 0..n {
            let d = f_face.derivative(axis)?;
            if !d.is_zero() {
                gradient.push(d);
            }
        }
        let face_seed = seed.wrapping_add((idx as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        match crate::torus::system_solvable_in_torus(&gradient, face_seed) {
            Decision::Exact(false) => {}
            Decision::Exact(true) => {
                return Err(Error::HypothesisNotMet("germ is Newton degenerate".into()))
            }
            Decision::Heuristic(_) => return Err(Error::NondegeneracyUnknown),
        }
    }
    let mut mu = Rat::zero();
    for mask in 0u32..(1 << n) {
        let subset: Vec<usize> = (0..n).filter(|j| mask >> j & 1 == 1).collect();
        let m = subset.len();
        let sign = if (n - m) % 2 == 0 { 1 } else { -1 };
        let volume = if m == 0 {
            rat_int(1)
        } else {
            let mut terms = Vec::new();
            for (k, c) in f.terms() {
                if k.iter().enumerate().all(|(j, &e)| e == 0 || subset.contains(&j)) {
                    terms.push((subset.iter().map(|&j| k[j]).collect::<Vec<i64>>(), c.clone()));
                }
            }
            let restricted = Ideal::principal(Germ::from_terms(m, terms, None)?)?;
            factorial(m) * restricted.newton_polyhedron()?.covolume()?
        };
        mu += rat_int(sign) * volume;
    }
    if !mu.is_integer() {
        return Err(Error::NonIntegerResult);
    }
    mu.to_integer()
        .to_i64()
        .ok_or_else(|| Error::InternalInconsistency("Milnor number exceeds the integer range".into()))
}

/// Multiplicity of a hypersurface germ: its order.
pub fn hypersurface_m0(f: &Germ) -> Result<usize> {
    f.order()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn monomial_ideal(vars: usize, exps: &[&[i64]]) -> Ideal {
        Ideal::new(
            exps.iter()
                .map(|e| Germ::monomial(vars, e.to_vec(), Rat::one(), None).unwrap())
                .collect(),
        )
        .unwrap()
    }

    fn germ(vars: usize, terms: &[(&[i64], i64)]) -> Germ {
        Germ::from_terms(
            vars,
            terms.iter().map(|(e, c)| (e.to_vec(), rat_int(*c))),
            None,
        )
        .unwrap()
    }

    fn finite(v: ScaleValue) -> Rat {
        match v {
            ScaleValue::Finite(r) => r,
            ScaleValue::Infinite => panic!("expected a finite scale"),
        }
    }

    #[test]
    fn loj0_of_plane_staircases() {
        let i = monomial_ideal(2, &[&[3, 0], &[0, 2]]);
        assert_eq!(finite(loj0(&i, 1).unwrap()), rat_int(3));
        let j = monomial_ideal(2, &[&[3, 0], &[0, 3], &[1, 1]]);
        assert_eq!(finite(loj0(&j, 1).unwrap()), rat_int(3));
        let m2 = Ideal::maximal_power(2, 2, None).unwrap();
        assert_eq!(finite(loj0(&m2, 1).unwrap()), rat_int(2));
    }

    #[test]
    fn loj0_infinite_without_axis_contact() {
        let i = monomial_ideal(2, &[&[1, 1]]);
        assert_eq!(loj0(&i, 1).unwrap(), ScaleValue::Infinite);
    }

    #[test]
    fn loj0_refuses_off_hypotheses() {
        let s = crate::semigroup::Semigroup::standard(2);
        let g = Germ::monomial(2, vec![1, 0], Rat::one(), Some(s)).unwrap();
        let toric = Ideal::principal(g).unwrap();
        match loj0(&toric, 1) {
            Err(Error::HypothesisNotMet(_)) => {}
            other => panic!("expected ambient refusal, got {other:?}"),
        }
    }

    #[test]
    fn oracle_agrees_on_frozen_examples() {
        let i = monomial_ideal(2, &[&[3, 0], &[0, 2]]);
        assert_eq!(loj0_oracle(&i, 24).unwrap(), rat_int(3));
        let m2 = Ideal::maximal_power(2, 2, None).unwrap();
        assert_eq!(loj0_oracle(&m2, 24).unwrap(), rat_int(2));
        let k = monomial_ideal(2, &[&[2, 0], &[1, 1], &[0, 4]]);
        assert_eq!(loj0_oracle(&k, 24).unwrap(), rat_int(4));
        assert_eq!(finite(loj0(&k, 1).unwrap()), rat_int(4));
        let f = monomial_ideal(2, &[&[4, 0], &[0, 4], &[1, 2]]);
        assert_eq!(finite(loj0(&f, 1).unwrap()), loj0_oracle(&f, 24).unwrap());
    }

    #[test]
    fn oracle_needs_a_large_enough_bound() {
        let i = monomial_ideal(2, &[&[9, 0], &[0, 9]]);
        assert_eq!(loj0_oracle(&i, 4).unwrap_err(), Error::BoundTooSmall);
    }

    #[test]
    fn relative_exponents() {
        let i = monomial_ideal(2, &[&[2, 0], &[0, 2]]);
        let m = Ideal::maximal_power(2, 1, None).unwrap();
        assert_eq!(finite(lojj(&i, &m, 1).unwrap()), rat_int(2));
        let j = monomial_ideal(2, &[&[3, 0], &[0, 2]]);
        assert_eq!(finite(lojj(&j, &j, 1).unwrap()), rat_int(1));
        let a = monomial_ideal(2, &[&[4, 0], &[0, 2]]);
        let b = monomial_ideal(2, &[&[2, 0], &[0, 1]]);
        assert_eq!(finite(lojj(&a, &b, 1).unwrap()), rat_int(2));
    }

    #[test]
    fn multiplicities_match_hand_values() {
        assert_eq!(
            multiplicity_polyhedral(&monomial_ideal(2, &[&[3, 0], &[0, 2]]), 1).unwrap(),
            6
        );
        let m2 = Ideal::maximal_power(3, 2, None).unwrap();
        assert_eq!(multiplicity_polyhedral(&m2, 1).unwrap(), 8);
        assert_eq!(
            multiplicity_polyhedral(&monomial_ideal(2, &[&[3, 0], &[0, 3], &[1, 1]]), 1).unwrap(),
            6
        );
    }

    #[test]
    fn colength_counts_standard_monomials() {
        assert_eq!(colength_monomial(&monomial_ideal(2, &[&[3, 0], &[0, 2]])).unwrap(), 6);
        assert_eq!(
            colength_monomial(&monomial_ideal(2, &[&[3, 0], &[0, 3], &[1, 1]])).unwrap(),
            5
        );
        let m2 = Ideal::maximal_power(2, 2, None).unwrap();
        assert_eq!(colength_monomial(&m2).unwrap(), 3);
        assert_eq!(
            colength_monomial(&monomial_ideal(2, &[&[1, 1]])).unwrap_err(),
            Error::InfiniteColength
        );
        // Parameter ideals: colength = product of the exponents.
        let p = monomial_ideal(3, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 4]]);
        assert_eq!(colength_monomial(&p).unwrap(), 24);
        assert_eq!(multiplicity_polyhedral(&p, 1).unwrap(), 24);
    }

    #[test]
    fn hilbert_fit_recovers_multiplicity() {
        let i = monomial_ideal(2, &[&[3, 0], &[0, 2]]);
        assert_eq!(hilbert_fit(&i, 4, 8).unwrap(), 6);
        let m3 = Ideal::maximal_power(2, 3, None).unwrap();
        assert_eq!(hilbert_fit(&m3, 3, 6).unwrap(), 9);
        let j = monomial_ideal(2, &[&[3, 0], &[0, 3], &[1, 1]]);
        assert_eq!(hilbert_fit(&j, 4, 9).unwrap(), 6);
        assert_eq!(hilbert_fit(&i, 4, 5).unwrap_err(), Error::RangeTooShort);
    }

    #[test]
    fn chain_bundle_on_the_running_example() {
        let i = monomial_ideal(2, &[&[3, 0], &[0, 2]]);
        let bundle = check_chain(&i, 1).unwrap();
        assert_eq!(bundle.ord, 2);
        assert_eq!(bundle.loj0, Some(ScaleValue::Finite(rat_int(3))));
        assert_eq!(bundle.mult, Some(6));
        assert_eq!(bundle.colength, Some(6));
        assert_eq!(bundle.colength_provenance, Provenance::Oracle);
        assert!(bundle.chain_verified);
        // 𝔪^a is the extremal case: equalities throughout.
        let m3 = Ideal::maximal_power(2, 3, None).unwrap();
        let b3 = check_chain(&m3, 1).unwrap();
        assert_eq!(b3.ord, 3);
        assert_eq!(b3.loj0, Some(ScaleValue::Finite(rat_int(3))));
        assert_eq!(b3.mult, Some(9));
        assert!(b3.chain_verified);
    }

    #[test]
    fn chain_bundle_records_refusals() {
        let s = crate::semigroup::Semigroup::new(2, vec![vec![1, 0], vec![1, 1], vec![1, 2]])
            .unwrap();
        let g = Germ::from_terms(
            3,
            [(vec![2, 0, 0], rat_int(1)), (vec![0, 0, 2], rat_int(1))],
            Some(s),
        )
        .unwrap();
        let bundle = check_chain(&Ideal::principal(g).unwrap(), 1).unwrap();
        assert_eq!(bundle.ord, 2);
        assert_eq!(bundle.loj0, None);
        assert_eq!(bundle.loj0_provenance, Provenance::Refused);
        assert!(!bundle.chain_verified);
    }

    #[test]
    fn milnor_oracle_matches_classical_values() {
        assert_eq!(kouchnirenko_mu(&germ(2, &[(&[2, 0], 1), (&[0, 2], 1)]), 1).unwrap(), 1);
        assert_eq!(kouchnirenko_mu(&germ(2, &[(&[3, 0], 1), (&[0, 3], 1)]), 1).unwrap(), 4);
        assert_eq!(kouchnirenko_mu(&germ(2, &[(&[2, 0], 1), (&[0, 3], 1)]), 1).unwrap(), 2);
        // Diagonal germs: mu = prod (a_i - 1).
        assert_eq!(kouchnirenko_mu(&germ(2, &[(&[3, 0], 1), (&[0, 4], 1)]), 1).unwrap(), 6);
        assert_eq!(
            kouchnirenko_mu(
                &germ(3, &[(&[2, 0, 0], 1), (&[0, 2, 0], 1), (&[0, 0, 2], 1)]),
                1
            )
            .unwrap(),
            1
        );
    }

    #[test]
    fn milnor_oracle_refusals() {
        assert_eq!(
            kouchnirenko_mu(&germ(2, &[(&[2, 0], 1), (&[1, 1], 1)]), 1).unwrap_err(),
            Error::NotConvenient
        );
        let degenerate = germ(2, &[(&[2, 0], 1), (&[1, 1], -2), (&[0, 2], 1)]);
        match kouchnirenko_mu(&degenerate, 1) {
            Err(Error::HypothesisNotMet(_)) => {}
            other => panic!("expected degeneracy refusal, got {other:?}"),
        }
    }

    #[test]
    fn hypersurface_multiplicity_is_the_order() {
        assert_eq!(hypersurface_m0(&germ(2, &[(&[2, 0], 1), (&[0, 3], 1)])).unwrap(), 2);
        let quadric = germ(3, &[(&[2, 0, 0], 1), (&[0, 2, 0], 1), (&[0, 0, 2], 1)]);
        assert_eq!(hypersurface_m0(&quadric).unwrap(), 2);
        let sheared = germ(
            3,
            &[
                (&[2, 0, 0], 1),
                (&[1, 1, 0], 2),
                (&[0, 2, 0], 2),
                (&[0, 0, 2], 1),
            ],
        );
        assert_eq!(hypersurface_m0(&sheared).unwrap(), 2);
    }

    #[test]
    fn power_scaling_laws() {
        let i = monomial_ideal(2, &[&[3, 0], &[0, 2]]);
        for b in 1..=3usize {
            let p = monomial_power(&i, b).unwrap();
            assert_eq!(
                multiplicity_polyhedral(&p, 1).unwrap(),
                (b * b) as i64 * multiplicity_polyhedral(&i, 1).unwrap()
            );
            assert_eq!(
                finite(loj0(&p, 1).unwrap()),
                rat_int(b as i64) * finite(loj0(&i, 1).unwrap())
            );
        }
    }
}
