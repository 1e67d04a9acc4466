//! Hypothesis-and-conclusion certificates for the invariance theorems, and
//! the unconditional obstruction report.
//!
//! A certificate never decides bi-Lipschitz equivalence: the equivalence
//! enters only as an explicitly assumed hypothesis.  The unconditional
//! direction is the contrapositive: if a compared invariant differs, the
//! germs or ideals cannot be equivalent.

use crate::error::{Error, Result};
use crate::germ::Germ;
use crate::ideal::Ideal;
use crate::invariants::{hypersurface_m0, loj0};
use crate::polyhedron::ScaleValue;
use crate::semigroup::NormalityStatus;
use crate::torus::{system_solvable_in_torus, Decision};
use serde_json::{json, Value};

/// The theorem a certificate instantiates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremId {
    OrdLoj,
    ClosureCriterion,
    JacobianEquiv,
    JacobianClosure,
    SemiHomogeneous,
    MultiplicityZariski,
    EulerEquality,
    PolarM1,
}

impl TheoremId {
    /// Stable identifier used in serialized output.
    pub fn label(self) -> &'static str {
        match self {
            TheoremId::OrdLoj => "ord-loj",
            TheoremId::ClosureCriterion => "closure-criterion",
            TheoremId::JacobianEquiv => "jacobian-equiv",
            TheoremId::JacobianClosure => "jacobian-closure",
            TheoremId::SemiHomogeneous => "semi-homogeneous",
            TheoremId::MultiplicityZariski => "multiplicity-zariski",
            TheoremId::EulerEquality => "euler-equality",
            TheoremId::PolarM1 => "polar-m1",
        }
    }

    /// Human-readable statement location within the library's theorem list.
    pub fn anchor(self) -> &'static str {
        match self {
            TheoremId::OrdLoj => "invariance of order and Łojasiewicz exponent",
            TheoremId::ClosureCriterion => "integral-closure criterion for equivalent ideals",
            TheoremId::JacobianEquiv => "invariance of the Jacobian ideal closure",
            TheoremId::JacobianClosure => "Jacobian closure as a power of the maximal ideal",
            TheoremId::SemiHomogeneous => "Jacobian closure of semi-homogeneous germs",
            TheoremId::MultiplicityZariski => "invariance of the multiplicity",
            TheoremId::EulerEquality => "equality of local Euler obstructions",
            TheoremId::PolarM1 => "equality of first polar multiplicities",
        }
    }
}

/// How a hypothesis was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HypothesisStatus {
    /// Verified by an exact computation.
    Exact,
    /// Supported only by numeric sampling.
    HeuristicOnly,
    /// Taken on trust from the caller.
    Assumed,
    /// Checked and found false.
    Failed,
}

impl HypothesisStatus {
    pub fn label(self) -> &'static str {
        match self {
            HypothesisStatus::Exact => "exact",
            HypothesisStatus::HeuristicOnly => "heuristic-only",
            HypothesisStatus::Assumed => "assumed",
            HypothesisStatus::Failed => "failed",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypothesis {
    pub name: String,
    pub status: HypothesisStatus,
    pub detail: String,
}

impl Hypothesis {
    fn new(name: &str, status: HypothesisStatus, detail: impl Into<String>) -> Self {
        Hypothesis { name: name.into(), status, detail: detail.into() }
    }
}

/// Overall state of a certificate, derived from its hypotheses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Every hypothesis is exact or explicitly assumed; conclusion stated.
    Issued,
    /// Some hypothesis is only heuristic; no conclusion is stated.
    Advisory,
    /// Some hypothesis failed; no conclusion is stated.
    Refused,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Issued => "issued",
            Verdict::Advisory => "advisory",
            Verdict::Refused => "refused",
        }
    }
}

/// The conclusion of an issued certificate: a statement plus the attached
/// verification payload (string key-value pairs, serialized sorted).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conclusion {
    pub text: String,
    pub attached: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub theorem: TheoremId,
    pub hypotheses: Vec<Hypothesis>,
    pub conclusion: Option<Conclusion>,
    pub anchor: String,
}

impl Certificate {
    /// Assemble a certificate, granting the conclusion exactly when every
    /// hypothesis is `Exact` or `Assumed`.
    fn assemble(
        theorem: TheoremId,
        hypotheses: Vec<Hypothesis>,
        text: String,
        attached: Vec<(String, String)>,
    ) -> Certificate {
        let grantable = hypotheses
            .iter()
            .all(|h| matches!(h.status, HypothesisStatus::Exact | HypothesisStatus::Assumed));
        let conclusion = grantable.then(|| {
            let mut attached = attached;
            attached.sort();
            Conclusion { text, attached }
        });
        Certificate {
            theorem,
            hypotheses,
            conclusion,
            anchor: theorem.anchor().to_string(),
        }
    }

    pub fn verdict(&self) -> Verdict {
        if self.hypotheses.iter().any(|h| h.status == HypothesisStatus::Failed) {
            Verdict::Refused
        } else if self
            .hypotheses
            .iter()
            .any(|h| h.status == HypothesisStatus::HeuristicOnly)
        {
            Verdict::Advisory
        } else {
            Verdict::Issued
        }
    }

    /// Serialize with stable, alphabetical key order.
    pub fn to_json(&self) -> Value {
        let hypotheses: Vec<Value> = self
            .hypotheses
            .iter()
            .map(|h| {
                json!({
                    "detail": h.detail,
                    "name": h.name,
                    "status": h.status.label(),
                })
            })
            .collect();
        let conclusion = match &self.conclusion {
            None => Value::Null,
            Some(c) => {
                let attached: serde_json::Map<String, Value> = c
                    .attached
                    .iter()
                    .map(|(k, v)| (k.clone(), Value::String(v.clone())))
                    .collect();
                json!({ "attached": attached, "text": c.text })
            }
        };
        json!({
            "anchor": self.anchor,
            "conclusion": conclusion,
            "hypotheses": hypotheses,
            "theorem": self.theorem.label(),
            "verdict": self.verdict().label(),
        })
    }
}

/// One compared invariant in an obstruction report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparedInvariant {
    pub name: String,
    pub left: String,
    pub right: String,
}

impl ComparedInvariant {
    pub fn differs(&self) -> bool {
        self.left != self.right
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObstructionVerdict {
    /// Some invariant differs: the inputs are certifiably not equivalent.
    NotEquivalent,
    /// Every compared invariant agrees; nothing is decided.
    Inconclusive,
}

impl ObstructionVerdict {
    pub fn label(self) -> &'static str {
        match self {
            ObstructionVerdict::NotEquivalent => "not-equivalent",
            ObstructionVerdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionReport {
    pub compared: Vec<ComparedInvariant>,
    pub verdict: ObstructionVerdict,
    /// Invariants that were skipped, with the reason.
    pub notes: Vec<String>,
}

impl ObstructionReport {
    pub fn to_json(&self) -> Value {
        let compared: Vec<Value> = self
            .compared
            .iter()
            .map(|c| {
                json!({
                    "differs": c.differs(),
                    "left": c.left,
                    "name": c.name,
                    "right": c.right,
                })
            })
            .collect();
        json!({
            "compared": compared,
            "notes": self.notes,
            "verdict": self.verdict.label(),
        })
    }
}

fn scale_string(v: &ScaleValue) -> String {
    match v {
        ScaleValue::Finite(r) => crate::arith::rat_display(r),
        ScaleValue::Infinite => "infinite".to_string(),
    }
}

/// Compare the invariants the invariance theorems protect.  A difference is
/// an unconditional obstruction to bi-Lipschitz equivalence of the ideals.
pub fn obstruct_equivalence(i: &Ideal, j: &Ideal, seed: u64) -> Result<ObstructionReport> {
    let mut compared = vec![ComparedInvariant {
        name: "ord".into(),
        left: i.order()?.to_string(),
        right: j.order()?.to_string(),
    }];
    let mut notes = Vec::new();
    match (loj0(i, seed), loj0(j, seed)) {
        (Ok(ScaleValue::Finite(a)), Ok(ScaleValue::Finite(b))) => {
            compared.push(ComparedInvariant {
                name: "loj0".into(),
                left: crate::arith::rat_display(&a),
                right: crate::arith::rat_display(&b),
            });
        }
        (Ok(a), Ok(b)) => notes.push(format!(
            "loj0 skipped: requires finite colength on both sides (got {}, {})",
            scale_string(&a),
            scale_string(&b)
        )),
        (Err(e), _) | (_, Err(e)) => {
            notes.push(format!("loj0 skipped: {e}"));
        }
    }
    let verdict = if compared.iter().any(ComparedInvariant::differs) {
        ObstructionVerdict::NotEquivalent
    } else {
        ObstructionVerdict::Inconclusive
    };
    Ok(ObstructionReport { compared, verdict, notes })
}

/// Record the non-degeneracy of an ideal as a hypothesis.
fn nondegeneracy_hypothesis(name: &str, i: &Ideal, seed: u64) -> Result<Hypothesis> {
    Ok(match i.is_nondegenerate(seed)? {
        Decision::Exact(true) => Hypothesis::new(
            name,
            HypothesisStatus::Exact,
            "every compact face system is exactly unsolvable in the torus",
        ),
        Decision::Exact(false) => Hypothesis::new(
            name,
            HypothesisStatus::Failed,
            "a compact face system has a torus zero",
        ),
        Decision::Heuristic(true) => Hypothesis::new(
            name,
            HypothesisStatus::HeuristicOnly,
            "numeric sampling found no torus zero on the undecided faces",
        ),
        Decision::Heuristic(false) => Hypothesis::new(
            name,
            HypothesisStatus::Failed,
            "numeric sampling located an apparent torus zero on a face",
        ),
    })
}

/// For toric inputs, record the normality of the semigroup.
fn context_hypotheses(i: &Ideal, hypotheses: &mut Vec<Hypothesis>) {
    if let Some(s) = i.context() {
        let (status, detail) = match s.normality_status() {
            NormalityStatus::AssertedNormal => (
                HypothesisStatus::Assumed,
                "semigroup normality asserted at construction".to_string(),
            ),
            NormalityStatus::CheckedUpToBound(d) => (
                HypothesisStatus::Assumed,
                format!("semigroup normality spot-checked for cone points of degree <= {d}"),
            ),
            NormalityStatus::Unknown => (
                HypothesisStatus::Failed,
                "semigroup normality spot-check found an unwitnessed cone point".to_string(),
            ),
        };
        hypotheses.push(Hypothesis::new("semigroup-normal", status, detail));
    }
}

/// Certify that the integral closure of `i` is the `d`-th power of the
/// maximal ideal, where `d` is the order of `i`: the Newton polyhedra must
/// coincide and `i` must be non-degenerate.
pub fn equals_maximal_power(i: &Ideal, seed: u64) -> Result<Certificate> {
    let d = i.order()?;
    let power = Ideal::maximal_power(i.vars(), d as i64, i.context().cloned())?;
    let matches = i.newton_polyhedron()? == power.newton_polyhedron()?;
    let mut hypotheses = vec![if matches {
        Hypothesis::new(
            "newton-polyhedron-is-maximal-power",
            HypothesisStatus::Exact,
            format!("facet systems of the Newton polyhedron and of the degree-{d} power coincide"),
        )
    } else {
        Hypothesis::new(
            "newton-polyhedron-is-maximal-power",
            HypothesisStatus::Failed,
            format!("the Newton polyhedron differs from that of the degree-{d} power"),
        )
    }];
    hypotheses.push(nondegeneracy_hypothesis("newton-nondegenerate", i, seed)?);
    context_hypotheses(i, &mut hypotheses);
    Ok(Certificate::assemble(
        TheoremId::ClosureCriterion,
        hypotheses,
        format!("the integral closure equals power {d} of the maximal ideal"),
        vec![("order".into(), d.to_string())],
    ))
}

/// Fold a finished certificate into a single hypothesis of an outer one.
fn as_hypothesis(name: &str, cert: &Certificate) -> Hypothesis {
    match cert.verdict() {
        Verdict::Issued => {
            let assumed = cert
                .hypotheses
                .iter()
                .any(|h| h.status == HypothesisStatus::Assumed);
            let status = if assumed { HypothesisStatus::Assumed } else { HypothesisStatus::Exact };
            let detail = cert
                .conclusion
                .as_ref()
                .map(|c| c.text.clone())
                .unwrap_or_else(|| "issued".to_string());
            Hypothesis::new(name, status, detail)
        }
        Verdict::Advisory => {
            let weak = cert
                .hypotheses
                .iter()
                .find(|h| h.status == HypothesisStatus::HeuristicOnly)
                .map(|h| h.name.clone())
                .unwrap_or_default();
            Hypothesis::new(
                name,
                HypothesisStatus::HeuristicOnly,
                format!("inner check '{weak}' is heuristic"),
            )
        }
        Verdict::Refused => {
            let failing = cert
                .hypotheses
                .iter()
                .find(|h| h.status == HypothesisStatus::Failed)
                .map(|h| format!("{}: {}", h.name, h.detail))
                .unwrap_or_default();
            Hypothesis::new(name, HypothesisStatus::Failed, failing)
        }
    }
}

fn equivalence_hypothesis(assumed: bool, what: &str) -> Hypothesis {
    if assumed {
        Hypothesis::new(
            "bilipschitz-equivalence",
            HypothesisStatus::Assumed,
            format!("bi-Lipschitz {what} is taken on trust; it is never decided here"),
        )
    } else {
        Hypothesis::new(
            "bilipschitz-equivalence",
            HypothesisStatus::Failed,
            "equivalence was not assumed; run the obstruction report for the unconditional direction",
        )
    }
}

/// Both sides must pass the polyhedral finite-colength test.
fn require_finite_colength(i: &Ideal, j: &Ideal, seed: u64) -> Result<()> {
    for side in [i, j] {
        if !side.finite_colength_test(seed)? {
            return Err(Error::HypothesisNotMet(
                "both ideals must have finite colength".into(),
            ));
        }
    }
    Ok(())
}

/// Polyhedral comparison attachment, when both sides can be taken at face
/// value (monomial or exactly non-degenerate).
fn polyhedra_comparable(i: &Ideal, j: &Ideal, seed: u64) -> Result<Option<bool>> {
    let exact = |k: &Ideal| -> Result<bool> {
        Ok(k.is_monomial() || k.is_nondegenerate(seed)? == Decision::Exact(true))
    };
    if exact(i)? && exact(j)? {
        Ok(Some(i.newton_polyhedron()? == j.newton_polyhedron()?))
    } else {
        Ok(None)
    }
}

/// Certify equality of integral closures of two ideals assumed equivalent,
/// with the closure-is-a-power hypothesis checked on the first.
pub fn certify_closure_criterion(
    i: &Ideal,
    j: &Ideal,
    assumed_equivalent: bool,
    seed: u64,
) -> Result<Certificate> {
    require_finite_colength(i, j, seed)?;
    let inner = equals_maximal_power(i, seed)?;
    let mut hypotheses = vec![as_hypothesis("closure-is-maximal-power", &inner)];
    hypotheses.push(equivalence_hypothesis(assumed_equivalent, "equivalence of the ideals"));
    let mut attached = vec![("closure-power".into(), i.order()?.to_string())];
    if let Some(equal) = polyhedra_comparable(i, j, seed)? {
        attached.push(("newton-polyhedra-equal".into(), equal.to_string()));
    }
    Ok(Certificate::assemble(
        TheoremId::ClosureCriterion,
        hypotheses,
        "the integral closures of the two ideals coincide".into(),
        attached,
    ))
}

/// Check that the Jacobian ideal closure of `f` is `m^(d-1)`, `d = ord(f)`.
pub fn certify_jacobian_closure(f: &Germ, seed: u64) -> Result<Certificate> {
    let d = f.order()?;
    if d < 2 {
        return Err(Error::HypothesisNotMet(
            "the germ is smooth or a unit at the origin; no singular theory applies".into(),
        ));
    }
    let jac = Ideal::jacobian(f)?;
    let power = Ideal::maximal_power(f.vars(), d as i64 - 1, f.context().cloned())?;
    let matches = jac.newton_polyhedron()? == power.newton_polyhedron()?;
    let mut hypotheses = vec![if matches {
        Hypothesis::new(
            "jacobian-polyhedron-is-maximal-power",
            HypothesisStatus::Exact,
            format!("Newton polyhedron of the Jacobian ideal equals that of the degree-{} power", d - 1),
        )
    } else {
        Hypothesis::new(
            "jacobian-polyhedron-is-maximal-power",
            HypothesisStatus::Failed,
            format!(
                "Newton polyhedron of the Jacobian ideal differs from that of the degree-{} power",
                d - 1
            ),
        )
    }];
    hypotheses.push(nondegeneracy_hypothesis("jacobian-nondegenerate", &jac, seed)?);
    context_hypotheses(&jac, &mut hypotheses);
    Ok(Certificate::assemble(
        TheoremId::JacobianClosure,
        hypotheses,
        format!("the closure of the Jacobian ideal equals power {} of the maximal ideal", d - 1),
        vec![
            ("jacobian-power".into(), (d - 1).to_string()),
            ("order".into(), d.to_string()),
        ],
    ))
}

/// Certify equality of the Jacobian ideal closures of two germs assumed
/// equivalent.
pub fn certify_jacobian_equiv(
    f: &Germ,
    g: &Germ,
    assumed_equivalent: bool,
    seed: u64,
) -> Result<Certificate> {
    f.check_compatible(g)?;
    let jf = Ideal::jacobian(f)?;
    let jg = Ideal::jacobian(g)?;
    let hypotheses = vec![equivalence_hypothesis(assumed_equivalent, "equivalence of the germs")];
    let mut attached = Vec::new();
    if let Some(equal) = polyhedra_comparable(&jf, &jg, seed)? {
        attached.push(("jacobian-polyhedra-equal".into(), equal.to_string()));
    }
    Ok(Certificate::assemble(
        TheoremId::JacobianEquiv,
        hypotheses,
        "the closures of the two Jacobian ideals coincide".into(),
        attached,
    ))
}

/// Isolatedness of the singularity of the lowest-degree part, by stratified
/// torus solvability of its gradient: for every nonempty coordinate subset,
/// the gradient restricted to that stratum must have no torus zero there.
fn initial_part_isolated(fd: &Germ, seed: u64) -> Result<Hypothesis> {
    let n = fd.vars();
    let diagonal = fd.terms().iter().all(|(k, _)| {
        k.iter().filter(|&&e| e > 0).count() == 1
    }) && (0..n).all(|axis| fd.terms().keys().any(|k| k[axis] > 0));
    let mut all_exact = true;
    for mask in 1u32..(1 << n) {
        let mut system = Vec::new();
        for axis in 0..n {
            let partial = fd.derivative(axis)?;
            let mut kept = Vec::new();
            for (k, c) in partial.terms() {
                if k.iter()
                    .enumerate()
                    .all(|(j, &e)| e == 0 || mask >> j & 1 == 1)
                {
                    let projected: Vec<i64> =
                        (0..n).filter(|j| mask >> j & 1 == 1).map(|j| k[j]).collect();
                    kept.push((projected, c.clone()));
                }
            }
            let vars = (0..n).filter(|j| mask >> j & 1 == 1).count();
            let restricted = Germ::from_terms(vars, kept, None)?;
            if !restricted.is_zero() {
                system.push(restricted);
            }
        }
        let stratum_seed = seed.wrapping_add(u64::from(mask).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        match system_solvable_in_torus(&system, stratum_seed) {
            Decision::Exact(false) => {}
            Decision::Exact(true) => {
                return Ok(Hypothesis::new(
                    "initial-part-isolated",
                    HypothesisStatus::Failed,
                    "the gradient of the lowest-degree part vanishes along a coordinate stratum",
                ))
            }
            Decision::Heuristic(true) => {
                return Ok(Hypothesis::new(
                    "initial-part-isolated",
                    HypothesisStatus::Failed,
                    "numeric sampling located an apparent singular point off the origin",
                ))
            }
            Decision::Heuristic(false) => all_exact = false,
        }
    }
    Ok(if all_exact {
        let detail = if diagonal {
            "lowest-degree part is diagonal; its gradient is a system of pure powers".to_string()
        } else {
            "gradient strata decided exactly: no zero off the origin".to_string()
        };
        Hypothesis::new("initial-part-isolated", HypothesisStatus::Exact, detail)
    } else {
        Hypothesis::new(
            "initial-part-isolated",
            HypothesisStatus::HeuristicOnly,
            "some gradient stratum was only decided by numeric sampling",
        )
    })
}

/// Certify the Jacobian closure of a semi-homogeneous germ: if the
/// lowest-degree part has an isolated singularity, the closure of the
/// Jacobian ideal is the `(d-1)`-th maximal power.
pub fn semihomogeneous_certificate(f: &Germ, seed: u64) -> Result<Certificate> {
    if f.context().is_some() {
        return Err(Error::UnsupportedContext);
    }
    let d = f.order()?;
    if d < 2 {
        return Err(Error::HypothesisNotMet(
            "the germ is smooth or a unit at the origin; no singular theory applies".into(),
        ));
    }
    let fd = f.graded_part(d as i64);
    let hypotheses = vec![initial_part_isolated(&fd, seed)?];
    Ok(Certificate::assemble(
        TheoremId::SemiHomogeneous,
        hypotheses,
        format!("the closure of the Jacobian ideal equals power {} of the maximal ideal", d - 1),
        vec![
            ("jacobian-power".into(), (d - 1).to_string()),
            ("order".into(), d.to_string()),
        ],
    ))
}

/// Certify equality of multiplicities at the origin for two ideals assumed
/// equivalent, with the closure-is-a-power hypothesis checked on the first.
pub fn certify_multiplicity(
    i: &Ideal,
    j: &Ideal,
    dims_equal: bool,
    assumed_equivalent: bool,
    seed: u64,
) -> Result<Certificate> {
    let mut hypotheses = vec![if dims_equal {
        Hypothesis::new(
            "dimensions-equal",
            HypothesisStatus::Assumed,
            "equal dimensions of the two germs taken on trust",
        )
    } else {
        Hypothesis::new(
            "dimensions-equal",
            HypothesisStatus::Failed,
            "dimension equality was not assumed",
        )
    }];
    let mut attached = Vec::new();
    if let ([f], [g]) = (i.generators(), j.generators()) {
        // Hypersurface germs: the multiplicity is the order, so the two
        // values are compared outright instead of going through the closure
        // hypothesis (which no principal ideal can satisfy).
        let m0_left = hypersurface_m0(f)?;
        let m0_right = hypersurface_m0(g)?;
        hypotheses.push(if m0_left == m0_right {
            Hypothesis::new(
                "hypersurface-multiplicities-agree",
                HypothesisStatus::Exact,
                format!("both hypersurface germs have multiplicity {m0_left}"),
            )
        } else {
            Hypothesis::new(
                "hypersurface-multiplicities-agree",
                HypothesisStatus::Failed,
                format!("multiplicities differ: {m0_left} versus {m0_right}"),
            )
        });
        attached.push(("m0-left".into(), m0_left.to_string()));
        attached.push(("m0-right".into(), m0_right.to_string()));
        attached.push(("m0-equal".into(), (m0_left == m0_right).to_string()));
    } else {
        require_finite_colength(i, j, seed)?;
        let inner = equals_maximal_power(i, seed)?;
        hypotheses.push(as_hypothesis("closure-is-maximal-power", &inner));
    }
    hypotheses.push(equivalence_hypothesis(assumed_equivalent, "equivalence of the germs"));
    Ok(Certificate::assemble(
        TheoremId::MultiplicityZariski,
        hypotheses,
        "the multiplicities at the origin coincide".into(),
        attached,
    ))
}

/// The hypothesis battery shared by the Euler-obstruction and polar
/// multiplicity certificates.
fn euler_hypotheses(
    f: &Germ,
    g: &Germ,
    assumed_equivalent: bool,
    seed: u64,
) -> Result<(Vec<Hypothesis>, Vec<(String, String)>)> {
    f.check_compatible(g)?;
    let mut hypotheses = Vec::new();
    // (1) Jacobian closure of f is a power of the maximal ideal.
    let inner = certify_jacobian_closure(f, seed)?;
    hypotheses.push(as_hypothesis("jacobian-closure-is-maximal-power", &inner));
    // (2) Isolated singularities on both sides: the Jacobian polyhedron must
    // meet every recession ray, exactly certified where possible.
    for (tag, germ) in [("left", f), ("right", g)] {
        let jac = Ideal::jacobian(germ)?;
        let p = jac.newton_polyhedron()?;
        let mut touches = true;
        for ray in p.rays() {
            if matches!(p.axis_scale_lattice(ray)?, ScaleValue::Infinite) {
                touches = false;
            }
        }
        let exact = jac.is_monomial() || jac.is_nondegenerate(seed)? == Decision::Exact(true);
        let name = format!("isolated-singularity-{tag}");
        hypotheses.push(if !touches {
            Hypothesis::new(
                &name,
                HypothesisStatus::Failed,
                "the Jacobian polyhedron misses a coordinate direction",
            )
        } else if exact {
            Hypothesis::new(
                &name,
                HypothesisStatus::Exact,
                "the Jacobian polyhedron meets every coordinate direction at finite scale",
            )
        } else {
            Hypothesis::new(
                &name,
                HypothesisStatus::HeuristicOnly,
                "axis contact holds, but non-degeneracy of the Jacobian is not exactly certified",
            )
        });
    }
    // (3) The assumed equivalence.
    hypotheses.push(equivalence_hypothesis(assumed_equivalent, "equivalence of the germs"));
    // Derived consequences: order and both Newton polyhedra must agree; a
    // failure here refutes the assumption and refuses the certificate.
    let (df, dg) = (f.order()?, g.order()?);
    hypotheses.push(if df == dg {
        Hypothesis::new(
            "orders-agree",
            HypothesisStatus::Exact,
            format!("both germs have order {df}"),
        )
    } else {
        Hypothesis::new(
            "orders-agree",
            HypothesisStatus::Failed,
            format!("orders differ: {df} versus {dg}"),
        )
    });
    let pf = Ideal::principal(f.clone())?;
    let pg = Ideal::principal(g.clone())?;
    let newton_equal = pf.newton_polyhedron()? == pg.newton_polyhedron()?;
    hypotheses.push(if newton_equal {
        Hypothesis::new(
            "newton-polyhedra-agree",
            HypothesisStatus::Exact,
            "the Newton polyhedra of the two germs coincide",
        )
    } else {
        Hypothesis::new(
            "newton-polyhedra-agree",
            HypothesisStatus::Failed,
            "the Newton polyhedra differ; the assumed equivalence is refuted",
        )
    });
    let jf = Ideal::jacobian(f)?;
    let jg = Ideal::jacobian(g)?;
    let jac_equal = jf.newton_polyhedron()? == jg.newton_polyhedron()?;
    hypotheses.push(if jac_equal {
        Hypothesis::new(
            "jacobian-polyhedra-agree",
            HypothesisStatus::Exact,
            "the Newton polyhedra of the two Jacobian ideals coincide",
        )
    } else {
        Hypothesis::new(
            "jacobian-polyhedra-agree",
            HypothesisStatus::Failed,
            "the Jacobian Newton polyhedra differ; the assumed equivalence is refuted",
        )
    });
    let mut attached = vec![
        ("jacobian-polyhedra-equal".into(), jac_equal.to_string()),
        ("newton-polyhedra-equal".into(), newton_equal.to_string()),
        ("order".into(), df.to_string()),
    ];
    if f.context().is_some() {
        attached.push((
            "order-convention".into(),
            "fiber-minimal ambient degree; tail terms measured in the same convention".into(),
        ));
    }
    Ok((hypotheses, attached))
}

/// Certify equality of local Euler obstructions of two hypersurface germs
/// assumed equivalent.  The obstruction values themselves are out of scope;
/// only their equality is concluded.
pub fn certify_euler(
    f: &Germ,
    g: &Germ,
    assumed_equivalent: bool,
    seed: u64,
) -> Result<Certificate> {
    let (hypotheses, attached) = euler_hypotheses(f, g, assumed_equivalent, seed)?;
    Ok(Certificate::assemble(
        TheoremId::EulerEquality,
        hypotheses,
        "the local Euler obstructions at the origin coincide".into(),
        attached,
    ))
}

/// Certify equality of the first polar multiplicities of two surface germs
/// in three ambient variables, via the Euler-obstruction battery.  Neither
/// polar multiplicity is computed.
pub fn certify_polar_m1(
    f: &Germ,
    g: &Germ,
    assumed_equivalent: bool,
    seed: u64,
) -> Result<Certificate> {
    if f.context().is_some() || g.context().is_some() || f.vars() != 3 {
        return Err(Error::HypothesisNotMet(
            "the polar multiplicity corollary applies to germs in three ambient variables".into(),
        ));
    }
    let (hypotheses, mut attached) = euler_hypotheses(f, g, assumed_equivalent, seed)?;
    attached.push(("m0-left".into(), hypersurface_m0(f)?.to_string()));
    attached.push(("m0-right".into(), hypersurface_m0(g)?.to_string()));
    Ok(Certificate::assemble(
        TheoremId::PolarM1,
        hypotheses,
        "the first polar multiplicities at the origin coincide".into(),
        attached,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_int;
    use crate::arith::Rat;
    use num_traits::One;

    fn germ(vars: usize, terms: &[(&[i64], i64)]) -> Germ {
        Germ::from_terms(
            vars,
            terms.iter().map(|(e, c)| (e.to_vec(), rat_int(*c))),
            None,
        )
        .unwrap()
    }

    fn monomial_ideal(vars: usize, exps: &[&[i64]]) -> Ideal {
        Ideal::new(
            exps.iter()
                .map(|e| Germ::monomial(vars, e.to_vec(), Rat::one(), None).unwrap())
                .collect(),
        )
        .unwrap()
    }

    fn binomial_example() -> Ideal {
        Ideal::new(vec![
            germ(3, &[(&[2, 0, 0], 1), (&[0, 2, 0], -1)]),
            germ(3, &[(&[1, 1, 0], 1), (&[0, 0, 2], -1)]),
            germ(3, &[(&[1, 0, 1], 1), (&[0, 2, 0], -2)]),
            germ(3, &[(&[0, 1, 1], 1), (&[2, 0, 0], -3)]),
        ])
        .unwrap()
    }

    fn quadric() -> Germ {
        germ(3, &[(&[2, 0, 0], 1), (&[0, 2, 0], 1), (&[0, 0, 2], 1)])
    }

    fn sheared_quadric() -> Germ {
        // (x + y)^2 + y^2 + z^2
        germ(
            3,
            &[(&[2, 0, 0], 1), (&[1, 1, 0], 2), (&[0, 2, 0], 2), (&[0, 0, 2], 1)],
        )
    }

    #[test]
    fn obstruction_by_order_and_exponent() {
        let m2 = Ideal::maximal_power(2, 2, None).unwrap();
        let m3 = Ideal::maximal_power(2, 3, None).unwrap();
        let r = obstruct_equivalence(&m2, &m3, 1).unwrap();
        assert_eq!(r.verdict, ObstructionVerdict::NotEquivalent);
        let a = monomial_ideal(2, &[&[3, 0], &[0, 2]]);
        let b = monomial_ideal(2, &[&[2, 0], &[0, 3]]);
        let r = obstruct_equivalence(&a, &b, 1).unwrap();
        assert_eq!(r.verdict, ObstructionVerdict::Inconclusive);
        assert_eq!(r.compared.len(), 2);
        let c = monomial_ideal(2, &[&[4, 0], &[0, 2]]);
        let r = obstruct_equivalence(&a, &c, 1).unwrap();
        assert_eq!(r.verdict, ObstructionVerdict::NotEquivalent);
        assert!(r.compared.iter().any(|x| x.name == "loj0" && x.differs()));
    }

    #[test]
    fn obstruction_is_symmetric() {
        let a = monomial_ideal(2, &[&[3, 0], &[0, 2]]);
        let c = monomial_ideal(2, &[&[4, 0], &[0, 2]]);
        let lr = obstruct_equivalence(&a, &c, 1).unwrap();
        let rl = obstruct_equivalence(&c, &a, 1).unwrap();
        assert_eq!(lr.verdict, rl.verdict);
        for (x, y) in lr.compared.iter().zip(rl.compared.iter()) {
            assert_eq!(x.name, y.name);
            assert_eq!(x.left, y.right);
            assert_eq!(x.right, y.left);
        }
    }

    #[test]
    fn closure_power_certificates() {
        let issued = equals_maximal_power(&binomial_example(), 1).unwrap();
        assert_eq!(issued.verdict(), Verdict::Issued);
        assert!(issued.conclusion.is_some());
        let m5 = Ideal::maximal_power(2, 5, None).unwrap();
        assert_eq!(equals_maximal_power(&m5, 1).unwrap().verdict(), Verdict::Issued);
        let refused = equals_maximal_power(&monomial_ideal(2, &[&[3, 0], &[0, 3], &[1, 1]]), 1)
            .unwrap();
        assert_eq!(refused.verdict(), Verdict::Refused);
        assert!(refused.conclusion.is_none());
    }

    #[test]
    fn closure_criterion_on_the_binomial_pair() {
        let i = binomial_example();
        let m2 = Ideal::maximal_power(3, 2, None).unwrap();
        let cert = certify_closure_criterion(&i, &m2, true, 1).unwrap();
        assert_eq!(cert.verdict(), Verdict::Issued);
        let conclusion = cert.conclusion.as_ref().unwrap();
        assert!(conclusion
            .attached
            .iter()
            .any(|(k, v)| k == "newton-polyhedra-equal" && v == "true"));
        // Without the assumption the certificate refuses.
        let refused = certify_closure_criterion(&i, &m2, false, 1).unwrap();
        assert_eq!(refused.verdict(), Verdict::Refused);
        // Hypothesis-1 failure refuses regardless of the assumption.
        let bad = monomial_ideal(2, &[&[3, 0], &[0, 3], &[1, 1]]);
        let other = Ideal::maximal_power(2, 2, None).unwrap();
        let refused = certify_closure_criterion(&bad, &other, true, 1).unwrap();
        assert_eq!(refused.verdict(), Verdict::Refused);
    }

    #[test]
    fn jacobian_closure_of_the_quadric() {
        let cert = certify_jacobian_closure(&quadric(), 1).unwrap();
        assert_eq!(cert.verdict(), Verdict::Issued);
        let conclusion = cert.conclusion.unwrap();
        assert!(conclusion.attached.contains(&("jacobian-power".into(), "1".into())));
    }

    #[test]
    fn jacobian_closure_toric_instance() {
        let s = crate::semigroup::Semigroup::new(2, vec![vec![1, 0], vec![1, 1], vec![1, 2]])
            .unwrap();
        let g = Germ::from_terms(
            3,
            [
                (vec![3, 0, 0], rat_int(1)),
                (vec![0, 4, 0], rat_int(1)),
                (vec![0, 0, 3], rat_int(1)),
            ],
            Some(s),
        )
        .unwrap();
        let cert = certify_jacobian_closure(&g, 1).unwrap();
        assert_eq!(cert.verdict(), Verdict::Issued);
        let conclusion = cert.conclusion.as_ref().unwrap();
        assert!(conclusion.attached.contains(&("jacobian-power".into(), "2".into())));
        assert!(cert
            .hypotheses
            .iter()
            .any(|h| h.name == "semigroup-normal" && h.status == HypothesisStatus::Assumed));
    }

    #[test]
    fn jacobian_closure_refuses_non_isolated() {
        // f = x^2 y: J = <2xy, x^2> misses the y-axis.
        let f = germ(2, &[(&[2, 1], 1)]);
        let cert = certify_jacobian_closure(&f, 1).unwrap();
        assert_eq!(cert.verdict(), Verdict::Refused);
    }

    #[test]
    fn jacobian_equiv_attaches_polyhedral_equality() {
        let cert = certify_jacobian_equiv(&quadric(), &sheared_quadric(), true, 1).unwrap();
        assert_eq!(cert.verdict(), Verdict::Issued);
        let conclusion = cert.conclusion.unwrap();
        assert!(conclusion
            .attached
            .contains(&("jacobian-polyhedra-equal".into(), "true".into())));
    }

    #[test]
    fn semihomogeneous_diagonal_and_refusal() {
        // x^3 + y^3 + z^3 + x^2 y^2: the cubic part is diagonal.
        let f = germ(
            3,
            &[
                (&[3, 0, 0], 1),
                (&[0, 3, 0], 1),
                (&[0, 0, 3], 1),
                (&[2, 2, 0], 1),
            ],
        );
        let cert = semihomogeneous_certificate(&f, 1).unwrap();
        assert_eq!(cert.verdict(), Verdict::Issued);
        assert!(cert
            .conclusion
            .as_ref()
            .unwrap()
            .attached
            .contains(&("jacobian-power".into(), "2".into())));
        let q = semihomogeneous_certificate(&quadric(), 1).unwrap();
        assert_eq!(q.verdict(), Verdict::Issued);
        // x^2 y alone: the initial part has a singular line.
        let bad = semihomogeneous_certificate(&germ(2, &[(&[2, 1], 1)]), 1).unwrap();
        assert_eq!(bad.verdict(), Verdict::Refused);
    }

    #[test]
    fn multiplicity_certificate_for_the_sheared_pair() {
        let i = Ideal::principal(quadric()).unwrap();
        let j = Ideal::principal(sheared_quadric()).unwrap();
        let cert = certify_multiplicity(&i, &j, true, true, 1).unwrap();
        assert_eq!(cert.verdict(), Verdict::Issued);
        let conclusion = cert.conclusion.unwrap();
        assert!(conclusion.attached.contains(&("m0-left".into(), "2".into())));
        assert!(conclusion.attached.contains(&("m0-equal".into(), "true".into())));
        // The staircase with vertex (1,1) fails the closure hypothesis.
        let bad = monomial_ideal(2, &[&[3, 0], &[0, 3], &[1, 1]]);
        let other = Ideal::maximal_power(2, 2, None).unwrap();
        let refused = certify_multiplicity(&bad, &other, true, true, 1).unwrap();
        assert_eq!(refused.verdict(), Verdict::Refused);
    }

    #[test]
    fn euler_certificate_for_the_sheared_pair() {
        let cert = certify_euler(&quadric(), &sheared_quadric(), true, 1).unwrap();
        assert_eq!(cert.verdict(), Verdict::Issued);
        let conclusion = cert.conclusion.as_ref().unwrap();
        assert!(conclusion
            .attached
            .contains(&("newton-polyhedra-equal".into(), "true".into())));
        assert!(conclusion
            .attached
            .contains(&("jacobian-polyhedra-equal".into(), "true".into())));
    }

    #[test]
    fn euler_certificate_refuses_on_order_mismatch() {
        let cubic = germ(3, &[(&[3, 0, 0], 1), (&[0, 3, 0], 1), (&[0, 0, 3], 1)]);
        let cert = certify_euler(&quadric(), &cubic, true, 1).unwrap();
        assert_eq!(cert.verdict(), Verdict::Refused);
        assert!(cert
            .hypotheses
            .iter()
            .any(|h| h.name == "orders-agree" && h.status == HypothesisStatus::Failed));
        assert!(cert
            .hypotheses
            .iter()
            .any(|h| h.name == "newton-polyhedra-agree" && h.status == HypothesisStatus::Failed));
    }

    #[test]
    fn polar_certificate_follows_euler() {
        let cert = certify_polar_m1(&quadric(), &sheared_quadric(), true, 1).unwrap();
        assert_eq!(cert.verdict(), Verdict::Issued);
        let conclusion = cert.conclusion.unwrap();
        assert!(conclusion.attached.contains(&("m0-left".into(), "2".into())));
        let same = certify_polar_m1(&quadric(), &quadric(), true, 1).unwrap();
        assert_eq!(same.verdict(), Verdict::Issued);
        let cubic = germ(3, &[(&[3, 0, 0], 1), (&[0, 3, 0], 1), (&[0, 0, 3], 1)]);
        let refused = certify_polar_m1(&quadric(), &cubic, true, 1).unwrap();
        assert_eq!(refused.verdict(), Verdict::Refused);
        // Two ambient variables are out of scope.
        let plane = germ(2, &[(&[2, 0], 1), (&[0, 2], 1)]);
        match certify_polar_m1(&plane, &plane, true, 1) {
            Err(Error::HypothesisNotMet(_)) => {}
            other => panic!("expected a three-variable refusal, got {other:?}"),
        }
    }

    #[test]
    fn serialization_is_deterministic_and_ordered() {
        let cert = certify_euler(&quadric(), &sheared_quadric(), true, 1).unwrap();
        let one = cert.to_json().to_string();
        let two = certify_euler(&quadric(), &sheared_quadric(), true, 1)
            .unwrap()
            .to_json()
            .to_string();
        assert_eq!(one, two);
        let value = cert.to_json();
        let keys: Vec<&str> = value.as_object().unwrap().keys().map(|k| k.as_str()).collect();
        assert_eq!(keys, vec!["anchor", "conclusion", "hypotheses", "theorem", "verdict"]);
    }
}
