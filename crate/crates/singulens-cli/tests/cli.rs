//! End-to-end tests that drive the compiled `singulens` binary.

use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::atomic::{AtomicUsize, Ordering};

static COUNTER: AtomicUsize = AtomicUsize::new(0);

fn scratch(name: &str, contents: &str) -> PathBuf {
    let id = COUNTER.fetch_add(1, Ordering::SeqCst);
    let mut path = std::env::temp_dir();
    path.push(format!(
        "singulens-cli-{}-{id}-{name}",
        std::process::id()
    ));
    std::fs::write(&path, contents).unwrap();
    path
}

/// Run the binary with a clean environment (no inherited seed override).
fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_singulens"))
        .args(args)
        .env_remove("SINGULENS_SEED")
        .output()
        .unwrap()
}

fn run_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_singulens"))
        .args(args)
        .env_remove("SINGULENS_SEED")
        .env(key, value)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

const PLANE_SESSION: &str =
    "ideal I = <x^3, y^2>\nideal K = <x*y>\nideal M = <x^2, x*y, y^2>\n";

#[test]
fn ok_command_exits_zero_with_text_report() {
    let session = scratch("plane.sg", PLANE_SESSION);
    let out = run(&[session.to_str().unwrap(), "invar", "chain", "I"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("command: invar chain I"), "got: {text}");
    assert!(text.contains("status: ok"), "got: {text}");
    assert!(text.contains("ord"), "got: {text}");
    let _ = std::fs::remove_file(session);
}

#[test]
fn golden_json_for_a_small_command() {
    let session = scratch("gold.sg", PLANE_SESSION);
    let out = run(&[session.to_str().unwrap(), "invar", "ord", "I", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let expected = "{\n  \"command\": \"invar ord I\",\n  \"exit_code\": 0,\n  \
                    \"payload\": {\n    \"ord\": 2\n  },\n  \"status\": \"ok\"\n}\n";
    assert_eq!(stdout(&out), expected);
    let _ = std::fs::remove_file(session);
}

#[test]
fn json_output_is_byte_stable_across_runs() {
    let session = scratch("stable.sg", PLANE_SESSION);
    let args = [
        session.to_str().unwrap(),
        "certify",
        "closure",
        "M",
        "M",
        "--assume-equivalent",
        "--json",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert!(stdout(&first).contains("\"verdict\": \"issued\""));
    assert_eq!(first.stdout, second.stdout);
    let _ = std::fs::remove_file(session);
}

#[test]
fn parse_errors_exit_three_with_position() {
    let session = scratch("broken.sg", "germ f = x^\n");
    let out = run(&[session.to_str().unwrap(), "invar", "ord", "f"]);
    assert_eq!(out.status.code(), Some(3));
    let text = stdout(&out);
    assert!(text.contains("line 1"), "got: {text}");
    assert!(text.contains("column 12"), "got: {text}");
    let _ = std::fs::remove_file(session);
}

#[test]
fn unknown_binding_exits_three() {
    let session = scratch("unknown.sg", PLANE_SESSION);
    let out = run(&[session.to_str().unwrap(), "invar", "ord", "Z"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("unknown binding Z"));
    let _ = std::fs::remove_file(session);
}

#[test]
fn unknown_flag_exits_three() {
    let session = scratch("flag.sg", PLANE_SESSION);
    let out = run(&[session.to_str().unwrap(), "invar", "ord", "I", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("unknown flag --frobnicate"));
    let _ = std::fs::remove_file(session);
}

#[test]
fn no_arguments_prints_usage_and_exits_three() {
    let out = run(&[]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("usage"));
}

#[test]
fn refused_certificate_exits_two() {
    let session = scratch(
        "refuse.sg",
        "germ f = x^2 + y^2 + z^2\ngerm g = x^3 + y^3 + z^3\n",
    );
    let out = run(&[
        session.to_str().unwrap(),
        "certify",
        "euler",
        "f",
        "g",
        "--assume-equivalent",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let text = stdout(&out);
    assert!(text.contains("\"status\": \"refused\""), "got: {text}");
    assert!(text.contains("\"verdict\": \"refused\""), "got: {text}");
    let _ = std::fs::remove_file(session);
}

#[test]
fn degenerate_session_semigroup_exits_two() {
    let session = scratch("sublattice.sg", "semigroup S = [(2,0),(0,2),(1,1)]\n");
    let out = run(&[session.to_str().unwrap(), "show"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("line 1"));
    let _ = std::fs::remove_file(session);
}

#[test]
fn infinite_colength_exits_four() {
    let session = scratch("curve.sg", PLANE_SESSION);
    let out = run(&[session.to_str().unwrap(), "invar", "loj0", "K"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stdout(&out).contains("status: error"));
    let _ = std::fs::remove_file(session);
}

#[test]
fn show_round_trips_the_session() {
    let text = "semigroup S = [(1,0),(1,1),(1,2)]\n\
                ring R = toric(S) vars x,y,z\n\
                ring A = affine(2) vars u,v\n\
                germ f = x^2 + 3/2*y^4 + z^2\n\
                ideal J = <u^3, u*v, v^2>\n";
    let session = scratch("round.sg", text);
    let out = run(&[session.to_str().unwrap(), "show", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rendered = parsed["payload"]["session"].as_str().unwrap();

    let again = scratch("round2.sg", rendered);
    let out2 = run(&[again.to_str().unwrap(), "show", "--json"]);
    assert_eq!(out2.status.code(), Some(0));
    let parsed2: serde_json::Value = serde_json::from_str(&stdout(&out2)).unwrap();
    assert_eq!(parsed["payload"], parsed2["payload"]);
    let _ = std::fs::remove_file(session);
    let _ = std::fs::remove_file(again);
}

#[test]
fn batch_preserves_order_and_reports_worst_exit() {
    let session = scratch("batch.sg", PLANE_SESSION);
    let commands = scratch(
        "batch.txt",
        "# demo batch\ninvar ord I\n\ninvar loj0 K\nnewton I\n",
    );
    let out = run(&[
        session.to_str().unwrap(),
        "--batch",
        commands.to_str().unwrap(),
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(4));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let items = parsed.as_array().unwrap();
    assert_eq!(items.len(), 3);
    assert_eq!(items[0]["command"], "invar ord I");
    assert_eq!(items[0]["exit_code"], 0);
    assert_eq!(items[1]["command"], "invar loj0 K");
    assert_eq!(items[1]["exit_code"], 4);
    assert_eq!(items[2]["command"], "newton I");
    assert_eq!(items[2]["exit_code"], 0);

    let text_out = run(&[
        session.to_str().unwrap(),
        "--batch",
        commands.to_str().unwrap(),
    ]);
    assert_eq!(text_out.status.code(), Some(4));
    let text = stdout(&text_out);
    let ord_pos = text.find("invar ord I").unwrap();
    let loj_pos = text.find("invar loj0 K").unwrap();
    let newton_pos = text.find("newton I").unwrap();
    assert!(ord_pos < loj_pos && loj_pos < newton_pos);
    assert!(text.contains("--\n"));
    let _ = std::fs::remove_file(session);
    let _ = std::fs::remove_file(commands);
}

#[test]
fn seed_env_variable_overrides_the_flag() {
    let session = scratch("seed.sg", PLANE_SESSION);
    // A malformed override is rejected up front, even for valid commands.
    let out = run_with_env(
        &[session.to_str().unwrap(), "invar", "ord", "I"],
        "SINGULENS_SEED",
        "not-a-number",
    );
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("SINGULENS_SEED"));

    // A well-formed override is accepted and yields the same deterministic
    // report as passing the seed as a flag.
    let via_env = run_with_env(
        &[session.to_str().unwrap(), "nondeg", "I", "--json"],
        "SINGULENS_SEED",
        "42",
    );
    let via_flag = run(&[
        session.to_str().unwrap(),
        "nondeg",
        "I",
        "--seed",
        "42",
        "--json",
    ]);
    assert_eq!(via_env.status.code(), Some(0));
    assert_eq!(via_env.stdout, via_flag.stdout);
    let _ = std::fs::remove_file(session);
}

#[test]
fn svg_flag_writes_a_labeled_drawing() {
    let session = scratch("svg.sg", PLANE_SESSION);
    let mut svg_path = std::env::temp_dir();
    svg_path.push(format!("singulens-cli-{}-newton.svg", std::process::id()));
    let out = run(&[
        session.to_str().unwrap(),
        "newton",
        "I",
        "--svg",
        svg_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let document = std::fs::read_to_string(&svg_path).unwrap();
    assert!(document.contains("(3, 0)"));
    assert!(document.contains("(0, 2)"));
    assert!(document.ends_with("</svg>\n"));
    assert!(stdout(&out).contains("svg"));
    let _ = std::fs::remove_file(session);
    let _ = std::fs::remove_file(svg_path);
}

#[test]
fn newton_payload_lists_vertices_and_facets() {
    let session = scratch("newton.sg", PLANE_SESSION);
    let out = run(&[session.to_str().unwrap(), "newton", "I", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let payload = &parsed["payload"];
    assert_eq!(payload["dim"], 2);
    let vertices = payload["vertices"].as_array().unwrap();
    assert!(vertices.iter().any(|v| v[0] == "3" && v[1] == "0"));
    assert!(vertices.iter().any(|v| v[0] == "0" && v[1] == "2"));
    assert!(!payload["facets"].as_array().unwrap().is_empty());
    let _ = std::fs::remove_file(session);
}

#[test]
fn closure_respects_the_degree_flag() {
    let session = scratch("closure.sg", PLANE_SESSION);
    let out = run(&[
        session.to_str().unwrap(),
        "closure",
        "I",
        "--degree",
        "5",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let payload = &parsed["payload"];
    assert_eq!(payload["degree"], 5);
    let monomials = payload["monomials"].as_array().unwrap();
    assert_eq!(payload["count"].as_u64().unwrap() as usize, monomials.len());
    // Both generators appear, and every listed exponent stays within degree 5.
    assert!(monomials.iter().any(|m| m["exponent"] == serde_json::json!([3, 0])));
    assert!(monomials.iter().any(|m| m["exponent"] == serde_json::json!([0, 2])));
    for m in monomials {
        let total: i64 = m["exponent"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c.as_i64().unwrap())
            .sum();
        assert!(total <= 5);
    }
    let _ = std::fs::remove_file(session);
}
