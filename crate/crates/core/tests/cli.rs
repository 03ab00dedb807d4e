use std::process::Command;

fn holospin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_holospin"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn rep_in_the_euclidean_plane() {
    let (code, out, _) = holospin(&["rep", "--p", "0", "--q", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("anticommutation: ok"));
    assert!(out.contains("Φ(e1) ="));
}

#[test]
fn rep_json_lists_exact_entries() {
    let (code, out, _) = holospin(&["rep", "--p", "0", "--q", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["generators"][0][0][1], "0/1+1/1*i");
    assert_eq!(v["generators"][1][0][1], "-1/1+0/1*i");
    assert_eq!(v["anticommutation"], true);
}

#[test]
fn holonomy_json_row() {
    let (code, out, _) = holospin(&["holonomy", "--name", "sp", "--pprime", "1", "--qprime", "1", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["signature"], serde_json::json!([4, 4]));
    assert_eq!(v["algebra_dim"], 10);
    assert_eq!(v["N_expected"], 3);
    assert_eq!(v["N_computed"], 3);
    assert_eq!(v["match"], true);
    assert_eq!(v["conjugation_stable"], true);
    assert_eq!(v["basis"].as_array().unwrap().len(), 3);
}

#[test]
fn unsupported_signature_is_reported() {
    let (code, _, err) = holospin(&["rep", "--p", "3", "--q", "0"]);
    assert_ne!(code, 0);
    assert!(err.contains("odd dimension needs at least one positive direction"));
}

#[test]
fn unknown_label_is_a_usage_error() {
    let (code, _, err) = holospin(&["holonomy", "--name", "e8"]);
    assert_ne!(code, 0);
    assert!(err.contains("unknown holonomy algebra"));
    let (code, _, _) = holospin(&["holonomy", "--name", "su"]);
    assert_ne!(code, 0);
    let (code, _, _) = holospin(&["frobnicate"]);
    assert_ne!(code, 0);
}

#[test]
fn output_is_deterministic_and_can_go_to_a_file() {
    let args = ["holonomy", "--name", "u", "--pprime", "2", "--qprime", "0", "--seed", "5"];
    let (c1, a, _) = holospin(&args);
    let (c2, b, _) = holospin(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);

    let path = std::env::temp_dir().join(format!("holospin-cli-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out, _) = holospin(&["props", "--p", "2", "--q", "2", "--format", "json", "--out", p]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["checks"]["lift_certificate"], true);
    std::fs::remove_file(path).unwrap();
}
