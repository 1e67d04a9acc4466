//! Acceptance suite: one test per advertised capability, each printing a
//! single `[PASS]` line on success (visible with `--nocapture`).

use std::process::Command;
use std::sync::Arc;

use num_traits::One;
use singulens::arith::{rat_int, Rat};
use singulens::certificate::{
    certify_euler, certify_jacobian_closure, certify_multiplicity, equals_maximal_power,
    obstruct_equivalence, semihomogeneous_certificate, HypothesisStatus, ObstructionVerdict,
    Verdict,
};
use singulens::corpus::{random_monomial_ideals, CORPUS_SEED};
use singulens::germ::Germ;
use singulens::ideal::Ideal;
use singulens::invariants::{
    check_chain, hilbert_fit, loj0, loj0_oracle, multiplicity_polyhedral,
};
use singulens::polyhedron::ScaleValue;
use singulens::semigroup::Semigroup;
use singulens::torus::Decision;

const SEED: u64 = 20260814;

fn germ(vars: usize, terms: &[(&[i64], i64)]) -> Germ {
    Germ::from_terms(
        vars,
        terms.iter().map(|(e, c)| (e.to_vec(), rat_int(*c))),
        None,
    )
    .unwrap()
}

fn toric_germ(s: &Arc<Semigroup>, terms: &[(&[i64], i64)]) -> Germ {
    Germ::from_terms(
        3,
        terms.iter().map(|(e, c)| (e.to_vec(), rat_int(*c))),
        Some(s.clone()),
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

fn running_semigroup() -> Arc<Semigroup> {
    Semigroup::new(2, vec![vec![1, 0], vec![1, 1], vec![1, 2]]).unwrap()
}

fn finite(v: ScaleValue) -> Rat {
    match v {
        ScaleValue::Finite(r) => r,
        ScaleValue::Infinite => panic!("expected a finite scale"),
    }
}

fn rat_pow(r: &Rat, n: usize) -> Rat {
    (0..n).fold(Rat::one(), |acc, _| acc * r)
}

fn status_of<'c>(cert: &'c singulens::certificate::Certificate, name: &str) -> &'c HypothesisStatus {
    &cert
        .hypotheses
        .iter()
        .find(|h| h.name == name)
        .unwrap_or_else(|| panic!("no hypothesis named {name}"))
        .status
}

fn attached(cert: &singulens::certificate::Certificate, key: &str) -> String {
    cert.conclusion
        .as_ref()
        .expect("certificate carries a conclusion")
        .attached
        .iter()
        .find(|(k, _)| k == key)
        .unwrap_or_else(|| panic!("no attached value named {key}"))
        .1
        .clone()
}

#[test]
fn acceptance_1_binomial_ideal_closure_is_the_square() {
    // I' = <x^2 - y^2, x y - z^2, x z - 2 y^2, y z - 3 x^2> in three variables.
    let gens = vec![
        germ(3, &[(&[2, 0, 0], 1), (&[0, 2, 0], -1)]),
        germ(3, &[(&[1, 1, 0], 1), (&[0, 0, 2], -1)]),
        germ(3, &[(&[1, 0, 1], 1), (&[0, 2, 0], -2)]),
        germ(3, &[(&[0, 1, 1], 1), (&[2, 0, 0], -3)]),
    ];
    let ideal = Ideal::new(gens).unwrap();
    assert!(ideal.is_binomial());
    assert_eq!(ideal.order().unwrap(), 2);
    assert_eq!(ideal.is_nondegenerate(SEED).unwrap(), Decision::Exact(true));

    let cert = equals_maximal_power(&ideal, SEED).unwrap();
    assert_eq!(cert.verdict(), Verdict::Issued);
    for h in &cert.hypotheses {
        assert_eq!(h.status, HypothesisStatus::Exact, "hypothesis {}", h.name);
    }
    assert_eq!(attached(&cert, "order"), "2");
    println!("[PASS] acceptance 1: binomial ideal has order 2, is exactly nondegenerate, and its closure is certified to be the square of the maximal ideal");
}

#[test]
fn acceptance_2_toric_jacobian_closure_and_rendered_polygon() {
    let s = running_semigroup();
    // g = x^3 + y^4 + z^3 on the toric surface of the running semigroup.
    let g = toric_germ(&s, &[(&[3, 0, 0], 1), (&[0, 4, 0], 1), (&[0, 0, 3], 1)]);

    let cert = certify_jacobian_closure(&g, SEED).unwrap();
    assert_eq!(cert.verdict(), Verdict::Issued);
    assert_eq!(
        *status_of(&cert, "jacobian-polyhedron-is-maximal-power"),
        HypothesisStatus::Exact
    );
    assert_eq!(
        *status_of(&cert, "jacobian-nondegenerate"),
        HypothesisStatus::Exact
    );
    assert_eq!(attached(&cert, "jacobian-power"), "2");

    // The Jacobian Newton polygon has exactly the two labeled vertices
    // (2, 0) and (2, 4) in the value lattice.
    let jac = Ideal::jacobian(&g).unwrap();
    let polygon = jac.newton_polyhedron().unwrap();
    let mut vertices: Vec<Vec<Rat>> = polygon.vertices().to_vec();
    vertices.sort();
    assert_eq!(
        vertices,
        vec![
            vec![rat_int(2), rat_int(0)],
            vec![rat_int(2), rat_int(4)],
        ]
    );

    // The same picture through the command-line renderer.
    let mut dir = std::env::temp_dir();
    let mut svg = dir.clone();
    dir.push(format!("singulens-accept-{}.sg", std::process::id()));
    svg.push(format!("singulens-accept-{}.svg", std::process::id()));
    std::fs::write(
        &dir,
        "semigroup S = [(1,0),(1,1),(1,2)]\nring R = toric(S) vars x,y,z\n\
         germ g = x^3 + y^4 + z^3\n",
    )
    .unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_singulens"))
        .args([
            dir.to_str().unwrap(),
            "newton",
            "g",
            "--jacobian",
            "--svg",
            svg.to_str().unwrap(),
        ])
        .env_remove("SINGULENS_SEED")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let drawing = std::fs::read_to_string(&svg).unwrap();
    assert!(drawing.contains("(2, 0)"));
    assert!(drawing.contains("(2, 4)"));
    let _ = std::fs::remove_file(dir);
    let _ = std::fs::remove_file(svg);
    println!("[PASS] acceptance 2: toric Jacobian closure certified as the square of the maximal ideal; rendered polygon shows the vertices (2, 0) and (2, 4)");
}

/// The hypotheses of an Euler-equality certificate that are decided by
/// polyhedral computation alone.
const POLYHEDRAL_HYPOTHESES: [&str; 5] = [
    "isolated-singularity-left",
    "isolated-singularity-right",
    "orders-agree",
    "newton-polyhedra-agree",
    "jacobian-polyhedra-agree",
];

#[test]
fn acceptance_3_euler_equality_certificates() {
    // Toric pair on the running semigroup, with the tail of g built from
    // coordinate shifts of bounded distortion.
    let s = running_semigroup();
    let x = Germ::variable(3, 0, Some(s.clone())).unwrap();
    let y = Germ::variable(3, 1, Some(s.clone())).unwrap();
    let z = Germ::variable(3, 2, Some(s.clone())).unwrap();
    let two = Germ::constant(3, rat_int(2), Some(s.clone())).unwrap();
    let f_toric = toric_germ(&s, &[(&[2, 0, 0], 1), (&[0, 4, 0], 1), (&[0, 0, 2], 1)]);
    let g_toric = x
        .pow(2)
        .unwrap()
        .add(&y.add(&x.mul(&y).unwrap()).unwrap().pow(2).unwrap())
        .unwrap()
        .add(
            &z.add(&two.mul(&y.pow(2).unwrap()).unwrap()).unwrap()
                .add(&x.mul(&y.pow(2).unwrap()).unwrap()).unwrap()
                .pow(2)
                .unwrap(),
        )
        .unwrap();

    // Plane-quadric pair in three ambient variables.
    let f_plain = germ(3, &[(&[2, 0, 0], 1), (&[0, 2, 0], 1), (&[0, 0, 2], 1)]);
    let g_plain = germ(
        3,
        &[
            (&[2, 0, 0], 1),
            (&[1, 1, 0], 2),
            (&[0, 2, 0], 2),
            (&[0, 0, 2], 1),
        ],
    );

    for (label, f, g) in [
        ("toric", &f_toric, &g_toric),
        ("plain", &f_plain, &g_plain),
    ] {
        let cert = certify_euler(f, g, true, SEED).unwrap();
        assert_eq!(cert.verdict(), Verdict::Issued, "{label} pair");
        assert_eq!(
            *status_of(&cert, "bilipschitz-equivalence"),
            HypothesisStatus::Assumed,
            "{label} pair"
        );
        for name in POLYHEDRAL_HYPOTHESES {
            assert_eq!(
                *status_of(&cert, name),
                HypothesisStatus::Exact,
                "{label} pair, hypothesis {name}"
            );
        }
    }

    // Control pair with mismatched orders: refused even on trust.
    let cubic = germ(3, &[(&[3, 0, 0], 1), (&[0, 3, 0], 1), (&[0, 0, 3], 1)]);
    let control = certify_euler(&f_plain, &cubic, true, SEED).unwrap();
    assert_eq!(control.verdict(), Verdict::Refused);
    assert!(control.conclusion.is_none());
    println!("[PASS] acceptance 3: Euler-obstruction equality certified for the toric and plain pairs (equivalence assumed, polyhedral hypotheses exact); control pair refused");
}

#[test]
fn acceptance_4_invariant_chain_on_the_corpus() {
    let ideals = random_monomial_ideals(CORPUS_SEED, 100);
    assert_eq!(ideals.len(), 100);
    let mut failures = 0usize;
    for ideal in &ideals {
        let bundle = check_chain(ideal, SEED).unwrap();
        let n = ideal.vars();
        let l0 = finite(bundle.loj0.clone().expect("finite colength corpus"));
        let mult = rat_int(bundle.mult.expect("multiplicity available"));
        let ord = rat_int(bundle.ord as i64);
        let chain = rat_pow(&l0, n) >= mult && mult >= rat_pow(&ord, n);
        if !(bundle.chain_verified && chain) {
            failures += 1;
        }
    }
    assert_eq!(failures, 0);
    println!("[PASS] acceptance 4: loj0^n >= multiplicity >= ord^n holds exactly on all 100 corpus ideals");
}

#[test]
fn acceptance_5_oracles_agree_on_the_corpus() {
    let ideals = random_monomial_ideals(CORPUS_SEED, 100);
    let mut discrepancies = 0usize;
    for ideal in &ideals {
        let n = ideal.vars() as i64;
        let fast = finite(loj0(ideal, SEED).unwrap());
        let slow = loj0_oracle(ideal, 24).unwrap();
        if fast != slow {
            discrepancies += 1;
        }
        let polyhedral = multiplicity_polyhedral(ideal, SEED).unwrap();
        let fitted = hilbert_fit(ideal, n + 2, 2 * n + 4).unwrap();
        if polyhedral != fitted {
            discrepancies += 1;
        }
    }
    assert_eq!(discrepancies, 0);
    println!("[PASS] acceptance 5: loj0 matches the box-search oracle and the polyhedral multiplicity matches the Hilbert fit on all 100 corpus ideals");
}

#[test]
fn acceptance_6_maximal_powers_are_extremal() {
    for n in [2usize, 3] {
        for a in 1i64..=5 {
            let m = Ideal::maximal_power(n, a, None).unwrap();
            assert_eq!(m.order().unwrap(), a as usize, "n={n} a={a}");
            assert_eq!(finite(loj0(&m, SEED).unwrap()), rat_int(a), "n={n} a={a}");
            assert_eq!(
                multiplicity_polyhedral(&m, SEED).unwrap(),
                a.pow(n as u32),
                "n={n} a={a}"
            );
            let cert = equals_maximal_power(&m, SEED).unwrap();
            assert_eq!(cert.verdict(), Verdict::Issued, "n={n} a={a}");
            assert_eq!(attached(&cert, "order"), a.to_string(), "n={n} a={a}");
        }
    }
    println!("[PASS] acceptance 6: powers of the maximal ideal have ord = a, loj0 = a, multiplicity = a^n, and certify trivially for a = 1..5, n = 2, 3");
}

#[test]
fn acceptance_7_semihomogeneous_diagonal_shortcut() {
    let f = germ(
        3,
        &[
            (&[3, 0, 0], 1),
            (&[0, 3, 0], 1),
            (&[0, 0, 3], 1),
            (&[2, 2, 0], 1),
        ],
    );
    let cert = semihomogeneous_certificate(&f, SEED).unwrap();
    assert_eq!(cert.verdict(), Verdict::Issued);
    assert_eq!(attached(&cert, "jacobian-power"), "2");
    assert_eq!(attached(&cert, "order"), "3");
    assert_eq!(cert.hypotheses.len(), 1);
    let h = &cert.hypotheses[0];
    assert_eq!(h.name, "initial-part-isolated");
    assert_eq!(h.status, HypothesisStatus::Exact);
    assert!(h.detail.contains("diagonal"), "detail: {}", h.detail);
    println!("[PASS] acceptance 7: semi-homogeneous certificate concludes the Jacobian closure is the square of the maximal ideal, isolatedness decided by the diagonal shortcut");
}

#[test]
fn acceptance_8_obstructions_and_mutation_refusals() {
    // Obstruction soundness on three reference pairs.
    let m2 = Ideal::maximal_power(2, 2, None).unwrap();
    let m3 = Ideal::maximal_power(2, 3, None).unwrap();
    let report = obstruct_equivalence(&m2, &m3, SEED).unwrap();
    assert_eq!(report.verdict, ObstructionVerdict::NotEquivalent);

    let x3y2 = monomial_ideal(2, &[&[3, 0], &[0, 2]]);
    let x4y2 = monomial_ideal(2, &[&[4, 0], &[0, 2]]);
    let x2y3 = monomial_ideal(2, &[&[2, 0], &[0, 3]]);
    let report = obstruct_equivalence(&x3y2, &x4y2, SEED).unwrap();
    assert_eq!(report.verdict, ObstructionVerdict::NotEquivalent);
    let report = obstruct_equivalence(&x3y2, &x2y3, SEED).unwrap();
    assert_eq!(report.verdict, ObstructionVerdict::Inconclusive);

    // Mutation battery: take certificates that issue, flip one exact (or
    // assumed) hypothesis at a time by perturbing the inputs, and verify
    // refusal with the blame on the flipped hypothesis.
    let f = germ(3, &[(&[2, 0, 0], 1), (&[0, 2, 0], 1), (&[0, 0, 2], 1)]);
    let sheared = germ(
        3,
        &[
            (&[2, 0, 0], 1),
            (&[1, 1, 0], 2),
            (&[0, 2, 0], 2),
            (&[0, 0, 2], 1),
        ],
    );
    let baseline = certify_euler(&f, &sheared, true, SEED).unwrap();
    assert_eq!(baseline.verdict(), Verdict::Issued);

    // (a) flip orders-agree.
    let cubic = germ(3, &[(&[3, 0, 0], 1), (&[0, 3, 0], 1), (&[0, 0, 3], 1)]);
    let cert = certify_euler(&f, &cubic, true, SEED).unwrap();
    assert_eq!(cert.verdict(), Verdict::Refused);
    assert_eq!(*status_of(&cert, "orders-agree"), HypothesisStatus::Failed);

    // (b) flip newton-polyhedra-agree while the orders still match.
    let stretched = germ(3, &[(&[2, 0, 0], 1), (&[0, 2, 0], 1), (&[0, 0, 3], 1)]);
    let cert = certify_euler(&f, &stretched, true, SEED).unwrap();
    assert_eq!(cert.verdict(), Verdict::Refused);
    assert_eq!(*status_of(&cert, "orders-agree"), HypothesisStatus::Exact);
    assert_eq!(
        *status_of(&cert, "newton-polyhedra-agree"),
        HypothesisStatus::Failed
    );

    // (c) flip isolated-singularity-right with a germ missing one variable.
    let cylinder = germ(3, &[(&[2, 0, 0], 1), (&[0, 2, 0], 1)]);
    let cert = certify_euler(&f, &cylinder, true, SEED).unwrap();
    assert_eq!(cert.verdict(), Verdict::Refused);
    assert_eq!(
        *status_of(&cert, "isolated-singularity-right"),
        HypothesisStatus::Failed
    );

    // (d) withdraw the equivalence assumption.
    let cert = certify_euler(&f, &sheared, false, SEED).unwrap();
    assert_eq!(cert.verdict(), Verdict::Refused);
    assert_eq!(
        *status_of(&cert, "bilipschitz-equivalence"),
        HypothesisStatus::Failed
    );

    // (e) flip the closure-power hypothesis of the multiplicity theorem.
    let good = certify_multiplicity(&m2, &m2, true, true, SEED).unwrap();
    assert_eq!(good.verdict(), Verdict::Issued);
    let cert = certify_multiplicity(&x3y2, &x3y2, true, true, SEED).unwrap();
    assert_eq!(cert.verdict(), Verdict::Refused);
    assert_eq!(
        *status_of(&cert, "closure-is-maximal-power"),
        HypothesisStatus::Failed
    );

    // (f) withdraw the equal-dimensions assumption.
    let cert = certify_multiplicity(&m2, &m2, false, true, SEED).unwrap();
    assert_eq!(cert.verdict(), Verdict::Refused);
    assert_eq!(
        *status_of(&cert, "dimensions-equal"),
        HypothesisStatus::Failed
    );
    println!("[PASS] acceptance 8: obstruction reports separate the reference pairs and every mutated hypothesis forces a refusal");
}

#[test]
fn acceptance_9_toric_algebra_of_the_running_semigroup() {
    let s = running_semigroup();

    // The relation lattice is spanned by (1, -2, 1).
    let kernel = s.kernel_lattice();
    assert_eq!(kernel.len(), 1);
    assert!(
        kernel[0] == vec![1, -2, 1] || kernel[0] == vec![-1, 2, -1],
        "kernel basis: {kernel:?}"
    );

    // x z - y^2 vanishes identically on the surface: empty support.
    let binomial = toric_germ(&s, &[(&[1, 0, 1], 1), (&[0, 2, 0], -1)]);
    assert!(s.support(&binomial).unwrap().is_empty());

    // The dual cone is spanned by (0, 1) and (2, -1) up to positive scaling.
    let mut rays = s.dual_cone().to_vec();
    for r in &mut rays {
        let g = r.iter().fold(0i64, |acc, c| num_integer::gcd(acc, *c));
        if g > 1 {
            for c in r.iter_mut() {
                *c /= g;
            }
        }
    }
    rays.sort();
    assert_eq!(rays, vec![vec![0, 1], vec![2, -1]]);
    println!("[PASS] acceptance 9: kernel lattice spanned by (1, -2, 1); the defining binomial has empty support on the surface; dual cone rays are (0, 1) and (2, -1)");
}
