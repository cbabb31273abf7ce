use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn hurwitz(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hurwitz"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn g2_json() {
    let o = hurwitz(&["alexander", "builtin:g2", "--json"], None);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["canonical"], serde_json::json!([-1, 0, 1]));
    assert_eq!(v["polynomial"], "t^2 - 1");
    assert_eq!(v["factors"], serde_json::json!([{"d": 1, "mult": 1}, {"d": 2, "mult": 1}]));
    assert_eq!(v["components"], 2);
    assert_eq!(v["hurwitz_degree"], 4);
    assert_eq!(v["unit"], serde_json::json!({"sign": 1, "t_power": 0}));
    for (_, c) in v["checks"].as_object().unwrap() {
        assert_eq!(c["pass"], true);
    }
}

#[test]
fn text_and_json_agree() {
    let text = stdout(&hurwitz(&["alexander", "builtin:universal:3"], None));
    let v = json(&hurwitz(&["alexander", "builtin:universal:3", "--json"], None));
    assert!(text.contains(&format!("Delta = {}", v["polynomial"].as_str().unwrap())));
    assert!(text.contains(&format!("components: {}", v["components"])));
    assert!(text.contains("factors: Phi_1^2 Phi_3"));
}

#[test]
fn sextic_betti() {
    let o = hurwitz(&["betti", "--delta", "builtin:torus6:2:3", "--n", "6"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("b1 = 2\n"));
    let v = json(&hurwitz(&["betti", "--delta", "builtin:torus6:2:3", "--n", "6", "--json"], None));
    assert_eq!(v["b1"], 2);
    assert_eq!(v["r_n"], 2);
    assert_eq!(v["affine_h1_dim"], 3);
    assert_eq!(v["components"], 1);
}

#[test]
fn braid_group_pipes_into_alexander() {
    let dsl = hurwitz(&["braid-group", "--n", "2", "--m", "3"], None);
    assert_eq!(dsl.status.code(), Some(0));
    let o = hurwitz(&["alexander", "-", "--json"], Some(&stdout(&dsl)));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["polynomial"], "t^2 - t + 1");
}

#[test]
fn product_multiplies() {
    let v = json(&hurwitz(&["product", "builtin:abelian:2", "builtin:g2", "--json", "--parallel"], None));
    // (t - 1) (t^2 - 1)
    assert_eq!(v["canonical"], serde_json::json!([1, -1, -1, 1]));
    assert_eq!(v["components"], 3);
    let dsl = stdout(&hurwitz(&["product", "builtin:abelian:2", "builtin:abelian:2", "--dsl"], None));
    let o = hurwitz(&["alexander", "-", "--json"], Some(&dsl));
    assert_eq!(json(&o)["canonical"], serde_json::json!([1, -2, 1]));
}

#[test]
fn verify_exit_codes() {
    let dir = std::env::temp_dir().join(format!("hurwitz-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();

    let saved = dir.join("g2.json");
    std::fs::write(&saved, hurwitz(&["alexander", "builtin:g2", "--json"], None).stdout).unwrap();
    let o = hurwitz(&["verify", saved.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("verify: PASS"));

    // t^2 - 3t + 1 is not cyclotomic
    let mut v = json(&hurwitz(&["alexander", "builtin:g2", "--json"], None));
    v["canonical"] = serde_json::json!([1, -3, 1]);
    v["factors"] = serde_json::json!([]);
    v["residual"] = serde_json::json!([1, -3, 1]);
    let bad = dir.join("bad.json");
    std::fs::write(&bad, v.to_string()).unwrap();
    let o = hurwitz(&["verify", bad.to_str().unwrap(), "--json"], None);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json(&o)["pass"], false);

    let pres = dir.join("z2.cp");
    std::fs::write(&pres, "generators: 2\nhurwitz_degree: 2\nrel: x1 = x2^-1 x1 x2\n").unwrap();
    assert_eq!(hurwitz(&["verify", pres.to_str().unwrap()], None).status.code(), Some(0));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn errors_exit_one() {
    let o = hurwitz(&["alexander", "-", "--json"], Some("generators: 2\nrel: x1 = x2 x1\n"));
    assert_eq!(o.status.code(), Some(1));
    let e = &json(&o)["error"];
    assert_eq!(e["kind"], "parse");
    assert_eq!(e["reason"], "not_a_conjugate");
    assert_eq!((e["line"].as_u64(), e["column"].as_u64()), (Some(2), Some(11)));

    let o = hurwitz(&["alexander", "builtin:torus:2"], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error: unknown builtin"));

    let o = hurwitz(&["alexander", "/nonexistent/presentation.cp", "--json"], None);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["error"]["kind"], "io");

    let o = hurwitz(&["betti", "--delta", "builtin:g2", "--n", "0", "--json"], None);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn thread_count_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_hurwitz"))
        .args(["alexander", "builtin:universal:4", "--parallel", "--json"])
        .env("HURWITZ_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let serial = json(&hurwitz(&["alexander", "builtin:universal:4", "--json"], None));
    assert_eq!(json(&o)["canonical"], serial["canonical"]);

    let o = Command::new(env!("CARGO_BIN_EXE_hurwitz"))
        .args(["alexander", "builtin:g2"])
        .env("HURWITZ_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn reproduce_json_is_deterministic() {
    let a = json(&hurwitz(&["reproduce", "--json", "--seed", "7"], None));
    let b = json(&hurwitz(&["reproduce", "--json", "--seed", "7"], None));
    assert_eq!(a["pass"], true);
    let strip = |v: &Value| -> Vec<(Value, Value)> {
        v["criteria"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| (r["criterion"].clone(), r["pass"].clone()))
            .collect()
    };
    assert_eq!(strip(&a).len(), 9);
    assert_eq!(strip(&a), strip(&b));
    assert!(a["seconds"].as_f64().unwrap() < 60.0);
}
