use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_polyburn"))
}

fn stdout_of(out: &std::process::Output) -> String {
    assert!(
        out.status.success(),
        "stdout:\n{}\nstderr:\n{}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn solve_eval_and_exit_codes_on_a_square() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("square.json");
    std::fs::write(
        &inst,
        r#"{"version": 1, "outer": [[0,0],[1,0],[1,1],[0,1]], "k": 2}"#,
    )
    .unwrap();

    let out = bin().args(["solve", "--method", "brute"]).arg(&inst).output().unwrap();
    let text = stdout_of(&out);
    assert!(text.contains("method: brute_force"), "{text}");
    assert!(text.contains("burn_time: 1\n"), "{text}");
    assert!(text.contains("sites: 0+2"), "{text}");
    assert!(text.contains("evaluator: convex_exact"), "{text}");

    let out = bin()
        .args(["eval", "--sites", "2,0"])
        .arg(&inst)
        .output()
        .unwrap();
    let text = stdout_of(&out);
    assert!(text.contains("burn_time: 1\n"), "{text}");
    assert!(text.contains("sites: 0+2"), "{text}");

    // Budget beyond the vertex count is a validation failure.
    let out = bin()
        .args(["solve", "--method", "brute", "--k", "9"])
        .arg(&inst)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // Missing file surfaces as an OS failure, not a panic.
    let out = bin()
        .args(["solve", "--method", "brute"])
        .arg(dir.path().join("absent.json"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn gen_check_ordering_render_and_bench_chain() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("gen.json");

    let out = bin()
        .args(["gen", "--sliceable", "--n", "6", "--seed", "3", "--k", "2", "-o"])
        .arg(&inst)
        .output()
        .unwrap();
    stdout_of(&out);

    let out = bin().arg("check-sliceable").arg(&inst).output().unwrap();
    let text = stdout_of(&out);
    assert!(text.contains("convex: true"), "{text}");
    assert!(text.contains("sliceable: true"), "{text}");
    assert!(text.contains("ordering: "), "{text}");

    let out = bin().arg("ordering").arg(&inst).output().unwrap();
    let text = stdout_of(&out);
    assert_eq!(text.trim().split(' ').count(), 6, "{text}");

    let out = bin().args(["solve", "--method", "dp"]).arg(&inst).output().unwrap();
    let text = stdout_of(&out);
    assert!(text.contains("method: dp_sliceable"), "{text}");

    let svg_path = dir.path().join("gen.svg");
    let out = bin()
        .arg("render")
        .arg(&inst)
        .arg("-o")
        .arg(&svg_path)
        .args(["--sites", "0,2", "--shade", "0.4", "--chords", "--ordering"])
        .output()
        .unwrap();
    stdout_of(&out);
    let svg = std::fs::read_to_string(&svg_path).unwrap();
    assert!(svg.starts_with("<svg"), "{}", &svg[..60.min(svg.len())]);
    assert!(svg.contains("class=\"region\""), "{svg}");

    let csv_path = dir.path().join("bench.csv");
    let out = bin()
        .arg("bench")
        .arg(dir.path())
        .arg("-o")
        .arg(&csv_path)
        .args(["--methods", "brute,gonzalez,dp", "--stable"])
        .output()
        .unwrap();
    stdout_of(&out);
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    assert!(
        csv.starts_with("instance,method,k,burn_time,sites,evaluator,resolution,wall_ms"),
        "{csv}"
    );
    assert!(csv.contains("gen,dp_sliceable,2,"), "{csv}");
}

#[test]
fn gadget_build_and_verify_single_edge() {
    let dir = tempfile::tempdir().unwrap();
    let drawing = dir.path().join("edge.json");
    std::fs::write(
        &drawing,
        r#"{"version": 1, "vertices": [[0,0],[1,0]], "edges": [{"route": [[0,0],[1,0]]}], "kappa": 1}"#,
    )
    .unwrap();

    let built = dir.path().join("gadget.json");
    let out = bin()
        .args(["gadget", "build"])
        .arg(&drawing)
        .arg("-o")
        .arg(&built)
        .output()
        .unwrap();
    let text = stdout_of(&out);
    assert!(text.contains("K: 2"), "{text}");
    assert!(built.exists());
    assert!(dir.path().join("gadget.sidecar.json").exists());

    let out = bin()
        .args(["gadget", "verify"])
        .arg(&drawing)
        .args(["--resolution", "0.002"])
        .output()
        .unwrap();
    let text = stdout_of(&out);
    assert!(text.contains("cover_exists: true"), "{text}");
    assert!(text.contains("verdict: PASS"), "{text}");

    // The built instance is a burnable domain document.
    let out = bin()
        .arg("eval")
        .arg(&built)
        .args(["--sites", "4,8"])
        .output()
        .unwrap();
    let text = stdout_of(&out);
    assert!(text.contains("burn_time: "), "{text}");

    let out = bin()
        .args(["solve", "--method", "dp1d"])
        .arg(&built)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn onedim_documents_solve_and_eval() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("line.json");
    std::fs::write(&inst, r#"{"version": 1, "positions": [0, 1, 3], "k": 2}"#).unwrap();

    let out = bin()
        .args(["solve", "--method", "dp1d"])
        .arg(&inst)
        .output()
        .unwrap();
    let text = stdout_of(&out);
    assert!(text.contains("method: dp_1d"), "{text}");
    assert!(text.contains("burn_time: 1\n"), "{text}");
    assert!(text.contains("sites: 1+2"), "{text}");

    let out = bin()
        .arg("eval")
        .arg(&inst)
        .args(["--sites", "0,2"])
        .output()
        .unwrap();
    let text = stdout_of(&out);
    assert!(text.contains("burn_time: 1.5\n"), "{text}");
    assert!(text.contains("witness: 1.5"), "{text}");

    let out = bin()
        .args(["solve", "--method", "brute"])
        .arg(&inst)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
