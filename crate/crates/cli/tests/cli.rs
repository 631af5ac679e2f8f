//! End-to-end pipelines through the CLI binary against the figure fixtures.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_polyshadow"))
}

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn run_ok(args: &[&str]) -> Output {
    let out = bin().args(args).output().expect("spawn polyshadow");
    assert!(
        out.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    out
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("polyshadow-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn divide_to_invariants_pipeline() {
    let shadow = tmp("fig15-built.shadow.json");
    run_ok(&[
        "build-divide",
        fixtures().join("fig15.divide.json").to_str().unwrap(),
        "-o",
        shadow.to_str().unwrap(),
    ]);
    let pres = tmp("fig15.pres.json");
    run_ok(&[
        "present",
        shadow.to_str().unwrap(),
        "--sub",
        "Yabc",
        "-o",
        pres.to_str().unwrap(),
    ]);
    let simplified = tmp("fig15.simple.pres.json");
    run_ok(&[
        "simplify",
        pres.to_str().unwrap(),
        "-o",
        simplified.to_str().unwrap(),
    ]);
    let out = run_ok(&["invariants", simplified.to_str().unwrap()]);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["abelian"]["rank"], 2);
    assert_eq!(value["abelian"]["torsion"].as_array().unwrap().len(), 0);
    // Z^2 into S3: 18 commuting pairs.
    assert_eq!(value["homs"][0], serde_json::json!(["S3", 18]));
}

#[test]
fn invariants_of_free_group() {
    let pres = tmp("free.pres.json");
    std::fs::write(
        &pres,
        r#"{"schema":"presentation/1","generators":["a"],"relators":[]}"#,
    )
    .unwrap();
    let out = run_ok(&["invariants", pres.to_str().unwrap(), "--homs", "S3,Z2"]);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["abelian"]["rank"], 1);
    assert_eq!(value["homs"][0], serde_json::json!(["S3", 6]));
    assert_eq!(value["homs"][1], serde_json::json!(["Z2", 2]));
}

#[test]
fn cutting_seeds_agree() {
    let shadow = fixtures().join("fig16.shadow.json");
    let mut outputs = Vec::new();
    for seed in ["seed:1", "seed:2"] {
        let pres = tmp(&format!("fig16-{}.pres.json", seed.replace(':', "-")));
        run_ok(&[
            "present",
            shadow.to_str().unwrap(),
            "--sub",
            "Yabc",
            "--cutting",
            seed,
            "-o",
            pres.to_str().unwrap(),
        ]);
        let simplified = tmp(&format!("fig16-{}.simple.json", seed.replace(':', "-")));
        run_ok(&[
            "simplify",
            pres.to_str().unwrap(),
            "-o",
            simplified.to_str().unwrap(),
        ]);
        let out = run_ok(&["invariants", simplified.to_str().unwrap()]);
        outputs.push(String::from_utf8(out.stdout).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
}

#[test]
fn reduced_flag_and_custom_selection() {
    let shadow = fixtures().join("fig16.shadow.json");
    let sel = tmp("sel.json");
    std::fs::write(&sel, r#"{"regions": [1, 2, 3]}"#).unwrap();
    let pres = tmp("fig16-custom.pres.json");
    run_ok(&[
        "present",
        shadow.to_str().unwrap(),
        "--sub",
        &format!("custom:{}", sel.display()),
        "--reduced",
        "-o",
        pres.to_str().unwrap(),
    ]);
    let text = std::fs::read_to_string(&pres).unwrap();
    assert!(text.contains("presentation/1"));
}

#[test]
fn cutting_from_file() {
    // The hand-drawn system of the fig15 example: each digon hangs off the
    // outer region, the square off the right digon.
    let cutting = tmp("fig15.cutting.json");
    std::fs::write(
        &cutting,
        r#"{"schema":"cutting/1","links":[[1,1],[2,3],[3,0],[4,4],[5,7]]}"#,
    )
    .unwrap();
    let pres = tmp("fig15-filecut.pres.json");
    run_ok(&[
        "present",
        fixtures().join("fig15.shadow.json").to_str().unwrap(),
        "--sub",
        "Yabc",
        "--cutting",
        cutting.to_str().unwrap(),
        "-o",
        pres.to_str().unwrap(),
    ]);
    let simplified = tmp("fig15-filecut.simple.json");
    run_ok(&[
        "simplify",
        pres.to_str().unwrap(),
        "-o",
        simplified.to_str().unwrap(),
    ]);
    let out = run_ok(&["invariants", simplified.to_str().unwrap()]);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["abelian"]["rank"], 2);

    // An invalid cutting file is rejected with its error code.
    std::fs::write(
        &cutting,
        r#"{"schema":"cutting/1","links":[[1,1],[2,3],[3,0],[4,4]]}"#,
    )
    .unwrap();
    let out = bin()
        .args([
            "present",
            fixtures().join("fig15.shadow.json").to_str().unwrap(),
            "--sub",
            "Yabc",
            "--cutting",
            cutting.to_str().unwrap(),
            "-o",
            "-",
        ])
        .output()
        .unwrap();
    assert!(!out.status.success());
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["code"], "RegionWithoutVertex");
}

#[test]
fn check_thm41_answers() {
    // Divide gleams do not satisfy gl = c.
    let out = run_ok(&[
        "check-thm41",
        fixtures().join("fig15.shadow.json").to_str().unwrap(),
    ]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "not-applicable");

    // Adjusting the gleams to the corner sums gives a match.
    let text = std::fs::read_to_string(fixtures().join("fig15.shadow.json")).unwrap();
    let mut value: serde_json::Value = serde_json::from_str(&text).unwrap();
    value["twice_gleams"] = serde_json::json!([2, -4, 2, 2, 2]);
    let adjusted = tmp("fig15-adjusted.shadow.json");
    std::fs::write(&adjusted, serde_json::to_string(&value).unwrap()).unwrap();
    let out = run_ok(&["check-thm41", adjusted.to_str().unwrap()]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "match");
}

#[test]
fn wirtinger_of_fig15_fixture() {
    let pres = tmp("fig15-wirt.pres.json");
    run_ok(&[
        "wirtinger",
        fixtures().join("fig15.shadow.json").to_str().unwrap(),
        "-o",
        pres.to_str().unwrap(),
    ]);
    let simplified = tmp("fig15-wirt.simple.json");
    run_ok(&[
        "simplify",
        pres.to_str().unwrap(),
        "-o",
        simplified.to_str().unwrap(),
    ]);
    let out = run_ok(&["invariants", simplified.to_str().unwrap()]);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    // Two-component torus link: rank 2 abelianization.
    assert_eq!(value["abelian"]["rank"], 2);
}

#[test]
fn arrangement_build_and_render() {
    let shadow = tmp("fig18-built.shadow.json");
    run_ok(&[
        "build-arrangement",
        fixtures().join("fig18.arr.json").to_str().unwrap(),
        "-o",
        shadow.to_str().unwrap(),
    ]);
    let value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&shadow).unwrap()).unwrap();
    assert_eq!(value["crossings"].as_array().unwrap().len(), 32);
    assert!(value["layout"].is_array());

    let svg = tmp("fig18.svg");
    run_ok(&["render", shadow.to_str().unwrap(), "-o", svg.to_str().unwrap()]);
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<svg"));
    assert_eq!(text.matches("class=\"crossing\"").count(), 32);
    // Exact coordinates carried through, so not schematic.
    assert!(!text.contains("schematic"));
}

#[test]
fn stdout_piping() {
    let out = run_ok(&[
        "render",
        fixtures().join("fig15.shadow.json").to_str().unwrap(),
        "-o",
        "-",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    // The hand-encoded fixture has no layout, so the fallback is marked.
    assert!(text.contains("schematic"));
}

#[test]
fn errors_are_machine_readable() {
    let out = bin()
        .args(["present", "no-such-file.json", "--sub", "Yabc", "-o", "-"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["code"], "Io");
    assert!(err["message"].is_string());
    assert!(err["context"].is_object());

    // A geometric degeneracy propagates its error code.
    let divide = tmp("bad.divide.json");
    std::fs::write(
        &divide,
        r#"{"schema":"divide/1","components":[
            {"closed":false,"points":[[[-2,1],[0,1]],[[2,1],[0,1]]]},
            {"closed":false,"points":[[[0,1],[-2,1]],[[0,1],[2,1]]]},
            {"closed":false,"points":[[[-2,1],[-2,1]],[[2,1],[2,1]]]}
        ]}"#,
    )
    .unwrap();
    let out = bin()
        .args(["build-divide", divide.to_str().unwrap(), "-o", "-"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["code"], "TangencyOrTriplePoint");
}
