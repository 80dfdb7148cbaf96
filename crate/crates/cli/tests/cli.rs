use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn hexmagic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hexmagic"))
        .args(args)
        .env_remove("HEXMAGIC_CACHE")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn build_writes_a_valid_hexagon() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hexagon.json");
    let p = path.to_str().unwrap();
    let out = hexmagic(&["build", "--out", p]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let first = std::fs::read(&path).unwrap();
    let v: Value = serde_json::from_slice(&first).unwrap();
    assert_eq!(v["points"].as_array().unwrap().len(), 63);
    assert_eq!(v["lines"].as_array().unwrap().len(), 63);
    assert_eq!(v["sigma"].as_array().unwrap().len(), 6);
    assert_eq!(v["validation"]["girth"], 12);
    assert_eq!(v["validation"]["diameter"], 6);
    assert_eq!(v["invariant_hexagons"], 1);

    assert_eq!(code(&hexmagic(&["build", "--out", p])), 0);
    assert_eq!(std::fs::read(&path).unwrap(), first);

    // the written file loads back as a hexagon
    let loaded: hexmagic::hexagon::HexagonJson = serde_json::from_slice(&first).unwrap();
    assert!(hexmagic::Hexagon::from_json(&loaded).unwrap().validate().is_valid());
}

#[test]
fn build_text_and_dot() {
    let out = hexmagic(&["build", "--format", "text"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("incidence girth: 12"));
    let dot = hexmagic(&["build", "--format", "dot"]);
    assert!(stdout(&dot).starts_with("graph"));
}

#[test]
fn hyperplane_census_csv() {
    let out = hexmagic(&["hyperplanes"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let header = rdr.headers().unwrap().clone();
    let found = header.iter().position(|h| h == "copies_found").unwrap();
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 26);
    let row = |t: &str| rows.iter().find(|r| &r[0] == t).unwrap().clone();
    assert_eq!(&row("V2")[found], "36");
    assert_eq!(&row("V22")[found], "1008");
    assert_eq!(&row("total")[found], "16383");
    assert!(rows.iter().all(|r| r.get(r.len() - 1) == Some("true")));
}

#[test]
fn hyperplane_census_json() {
    let v = json(&hexmagic(&["hyperplanes", "--format", "json"]));
    assert_eq!(v["total_found"], 16383);
    assert_eq!(v["orbits"], 25);
    assert_eq!(v["all_match"], true);
}

#[test]
fn config_verify_built_ins() {
    for name in ["18_2-12_3", "2_4 14_2-4_3 6_4"] {
        let out = hexmagic(&["config", "verify", "--name", name]);
        assert_eq!(code(&out), 0);
        let v = json(&out);
        assert_eq!(v["magic"], true);
        assert_eq!(v["witness_verified"], true);
        assert!(v["witness"]["certificate"].is_array());
    }
    let v = json(&hexmagic(&["config", "verify", "--name", "18_2-12_3"]));
    assert_eq!(v["negative_contexts"].as_array().unwrap().len(), 3);
}

#[test]
fn config_close_reaches_v22() {
    let v = json(&hexmagic(&["config", "close", "--name", "18_2-12_3"]));
    assert_eq!(v["type"], "V22");
    assert_eq!(v["point_count"], 37);
    assert_eq!(v["signature"], "(37;0,12,15,10)");
    assert_eq!(v["deep_points"].as_array().unwrap().len(), 10);

    let dot = stdout(&hexmagic(&["config", "close", "--name", "18_2-12_3", "--format", "dot"]));
    for colour in ["red", "blue", "yellow"] {
        assert!(dot.contains(&format!("fillcolor={colour}")), "{colour}");
    }
}

#[test]
fn config_contain_v4() {
    let out = hexmagic(&["config", "contain", "--name", "2_4 14_2-4_3 6_4"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["count"], 1);
    assert_eq!(v["distinct_types"], serde_json::json!(["V4"]));
}

#[test]
fn config_replicate_matches_table_columns() {
    use hexmagic::tables::REPLICAS_18_2_12_3;
    for k in [3usize, 4] {
        let out = hexmagic(&["config", "replicate", "--name", "18_2-12_3", "--k", &k.to_string()]);
        assert_eq!(code(&out), 0);
        let v = json(&out);
        assert_eq!(v["magic"], true);
        let mut got: Vec<String> = v["configuration"]["contexts"]
            .as_array()
            .unwrap()
            .iter()
            .flat_map(|c| c.as_array().unwrap().iter().map(|s| s.as_str().unwrap().to_string()))
            .collect();
        got.sort();
        got.dedup();
        let mut want: Vec<String> = REPLICAS_18_2_12_3.iter().map(|r| r[k].to_string()).collect();
        want.sort();
        assert_eq!(got, want, "k = {k}");
    }
    assert_ne!(code(&hexmagic(&["config", "replicate", "--name", "18_2-12_3", "--k", "7"])), 0);
}

#[test]
fn pentagram_census() {
    let out = hexmagic(&["pentagrams", "--list"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["magic"], 12096);
    assert_eq!(v["all_revalidated"], true);
    let list = v["pentagrams"].as_array().unwrap();
    assert_eq!(list.len(), 12096);
    let first = list[0]["contexts"].as_array().unwrap();
    assert_eq!(first.len(), 5);
    assert!(first.iter().all(|c| c.as_array().unwrap().len() == 4));
}

#[test]
fn automorphism_group() {
    let out = hexmagic(&["aut"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["order"], 12096);
    assert_eq!(v["sigma_in_group"], true);
    assert_eq!(v["point_orbits"], 1);
    assert!(stdout(&hexmagic(&["aut", "--format", "text"])).contains("order: 12096"));
}

#[test]
fn outputs_do_not_depend_on_thread_count() {
    for args in [
        &["hyperplanes", "--list"][..],
        &["hyperplanes", "--format", "json"],
        &["pentagrams", "--list", "--format", "csv"],
        &["aut"],
        &["build"],
        &["config", "contain", "--name", "18_2-12_3"],
    ] {
        let one = hexmagic(&[args, &["--threads", "1"]].concat());
        let many = hexmagic(&[args, &["--threads", "4"]].concat());
        assert_eq!(code(&one), 0, "{args:?}");
        assert!(one.stdout == many.stdout, "{args:?} differs across thread counts");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(code(&hexmagic(&["config", "verify", "--name", "no such thing"])), 3);
    assert_eq!(code(&hexmagic(&["config", "verify", "--in", "/definitely/missing.json"])), 2);
    assert_eq!(code(&hexmagic(&["build", "--unknown-flag"])), 2);
    assert_eq!(code(&hexmagic(&["aut", "--format", "csv"])), 1);
    assert_eq!(code(&hexmagic(&["build", "--out", "/definitely/missing/dir/h.json"])), 2);
    assert_eq!(code(&hexmagic(&["build", "--threads", "0"])), 2);
}

fn write_config(dir: &Path, name: &str, contexts: &[&[&str]]) -> String {
    let path = dir.join(format!("{}.json", name.replace(' ', "_")));
    let body = serde_json::json!({ "name": name, "contexts": contexts });
    std::fs::write(&path, body.to_string()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn user_configurations() {
    let dir = tempfile::tempdir().unwrap();
    let square = write_config(
        dir.path(),
        "peres-mermin",
        &[
            &["XII", "IXI", "XXI"],
            &["IZI", "ZII", "ZZI"],
            &["XZI", "ZXI", "YYI"],
            &["XII", "IZI", "XZI"],
            &["IXI", "ZII", "ZXI"],
            &["XXI", "ZZI", "YYI"],
        ],
    );
    let out = hexmagic(&["config", "verify", "--in", &square]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["magic"], true);
    let contain = hexmagic(&["config", "contain", "--in", &square]);
    assert_eq!(code(&contain), 0);
    assert!(json(&contain)["count"].is_u64());

    let plain = write_config(dir.path(), "plain", &[&["XII", "IXI", "XXI"]]);
    let out = hexmagic(&["config", "verify", "--in", &plain]);
    assert_eq!(code(&out), 1);
    assert!(json(&out)["witness"]["assignment"].is_array());

    let broken = write_config(dir.path(), "broken", &[&["XII", "ZII", "YII"]]);
    assert_eq!(code(&hexmagic(&["config", "verify", "--in", &broken])), 1);

    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "{ not json").unwrap();
    assert_eq!(code(&hexmagic(&["config", "verify", "--in", garbage.to_str().unwrap()])), 1);
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_hexmagic"))
            .args(["hyperplanes", "--format", "json"])
            .env("HEXMAGIC_CACHE", &cache)
            .output()
            .unwrap()
    };
    let first = run();
    assert_eq!(code(&first), 0);
    assert!(cache.join("hexagon.json").exists());
    assert!(cache.join("hyperplanes.json").exists());
    let second = run();
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout, hexmagic(&["hyperplanes", "--format", "json"]).stdout);

    std::fs::write(cache.join("hyperplanes.json"), "[1, 2, 3]").unwrap();
    std::fs::write(cache.join("hexagon.json"), "nonsense").unwrap();
    let repaired = run();
    assert_eq!(code(&repaired), 0);
    assert_eq!(first.stdout, repaired.stdout);
}
