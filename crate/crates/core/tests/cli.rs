use std::process::{Command, Output};

use serde_json::Value;

fn siteswap(args: &[&str]) -> Output {
    siteswap_env(args, None)
}

fn siteswap_env(args: &[&str], budget: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_siteswap"));
    cmd.args(args).env_remove("SITESWAP_NODE_BUDGET");
    if let Some(b) = budget {
        cmd.env("SITESWAP_NODE_BUDGET", b);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn lines(o: &Output) -> Vec<String> {
    stdout(o).lines().map(str::to_owned).collect()
}

#[test]
fn validate_command() {
    let o = siteswap(&["validate", "5551"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("balls: 4"));

    let o = siteswap(&["validate", "12"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("landing collision (0,1)"));

    let o = siteswap(&["validate", "5!"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("offset 1"), "{}", stderr(&o));

    let o = siteswap(&["validate", "4,3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["valid"], false);
    assert_eq!(v["balls"], Value::Null);
    let kinds: Vec<_> = v["violations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["kind"].as_str().unwrap().to_owned())
        .collect();
    assert_eq!(kinds, ["landing-collision", "non-divisible-sum"]);
}

#[test]
fn count_command() {
    let o = siteswap(&["count", "--period", "4", "--balls", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        lines(&o),
        ["count: 671", "branch: unbounded", "cross_checked: false"]
    );

    let o = siteswap(&[
        "count",
        "--period",
        "4",
        "--all-balls",
        "--ceiling",
        "3",
        "--format",
        "json",
    ]);
    let v = json(&o);
    assert_eq!(v["count"], "24");
    assert_eq!(v["branch"], "factorial");

    let o = siteswap(&[
        "count",
        "--period",
        "4",
        "--balls",
        "2",
        "--ceiling",
        "3",
        "--method",
        "both",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["count"], "11");
    assert_eq!(v["cross_checked"], true);
}

#[test]
fn count_json_schema_is_exact() {
    let o = siteswap(&["count", "--period", "4", "--balls", "5", "--format", "json"]);
    let v = json(&o);
    let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys.len(), 4);
    for k in ["query", "count", "branch", "cross_checked"] {
        assert!(v.get(k).is_some(), "missing {k}");
    }
    assert!(v["count"].is_string());
    assert!(v["cross_checked"].is_boolean());
    assert_eq!(v["query"]["period"], 4);
    assert_eq!(v["query"]["balls"], 5);
    assert_eq!(v["query"]["ceiling"], Value::Null);
    assert_eq!(v["query"]["method"], "auto");
}

#[test]
fn big_counts_print_exactly() {
    let o = siteswap(&[
        "count", "--period", "30", "--balls", "40", "--format", "json",
    ]);
    // 41^30 - 40^30
    assert_eq!(
        json(&o)["count"],
        "1265409264682673487963038742566759257517431737201"
    );
}

#[test]
fn count_usage_errors() {
    let o = siteswap(&["count", "--period", "4", "--all-balls"]);
    assert_eq!(o.status.code(), Some(2));
    let o = siteswap(&["count", "--period", "4"]);
    assert_eq!(o.status.code(), Some(2));
    let o = siteswap(&[
        "count",
        "--period",
        "5",
        "--balls",
        "2",
        "--ceiling",
        "3",
        "--method",
        "closed",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn budget_flag_and_environment() {
    let args = [
        "count", "--period", "6", "--balls", "3", "--method", "oracle",
    ];
    // (18 + 1)^6 is about 4.7e7
    let o = siteswap_env(&args, Some("1000"));
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
    assert!(stderr(&o).contains("budget"));

    let mut with_flag = args.to_vec();
    with_flag.extend(["--budget", "100000000"]);
    let o = siteswap_env(&with_flag, Some("1000"));
    assert_eq!(
        o.status.code(),
        Some(0),
        "flag should override the variable"
    );
    assert_eq!(lines(&o)[0], "count: 3367");

    let o = siteswap(&[
        "enumerate",
        "--period",
        "12",
        "--all-balls",
        "--ceiling",
        "11",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn enumerate_command() {
    let o = siteswap(&[
        "enumerate",
        "--period",
        "2",
        "--balls",
        "1",
        "--ceiling",
        "2",
    ]);
    assert_eq!(lines(&o), ["02", "11", "20"]);

    let o = siteswap(&[
        "enumerate",
        "--period",
        "3",
        "--all-balls",
        "--ceiling",
        "1",
    ]);
    assert_eq!(lines(&o), ["000", "111"]);

    let o = siteswap(&[
        "enumerate",
        "--period",
        "1",
        "--balls",
        "3",
        "--ceiling",
        "3",
    ]);
    assert_eq!(lines(&o), ["3"]);

    let o = siteswap(&["enumerate", "--period", "1", "--balls", "40"]);
    assert_eq!(lines(&o), ["40,"]);
}

#[test]
fn enumerate_limit_and_formats() {
    let o = siteswap(&[
        "enumerate",
        "--period",
        "4",
        "--balls",
        "5",
        "--limit",
        "2",
        "--format",
        "json",
    ]);
    let v = json(&o);
    let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys.len(), 3);
    assert_eq!(v["patterns"], serde_json::json!(["000k", "001j"]));
    assert_eq!(v["truncated"], true);
    assert_eq!(v["total"], "671");

    let o = siteswap(&["enumerate", "--period", "4", "--balls", "5", "--limit", "2"]);
    let out = lines(&o);
    assert_eq!(out.len(), 3);
    assert!(out[2].contains("truncated") && out[2].contains("671"));

    let o = siteswap(&[
        "enumerate",
        "--period",
        "2",
        "--balls",
        "1",
        "--ceiling",
        "2",
        "--format",
        "csv",
    ]);
    assert_eq!(lines(&o), ["pattern,balls", "02,1", "11,1", "20,1"]);

    let o = siteswap(&[
        "enumerate",
        "--period",
        "2",
        "--balls",
        "1",
        "--ceiling",
        "2",
        "--format",
        "json",
    ]);
    let v = json(&o);
    assert_eq!(v["truncated"], false);
    assert_eq!(v["total"], "3");
}

#[test]
fn decompose_and_construct() {
    let o = siteswap(&["decompose", "5551"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(lines(&o), ["P=(1,2,3,0)", "B=(1,1,1,1)", "k=1"]);

    let o = siteswap(&["construct", "--perm", "1,2,3,0", "--bvec", "1,1,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(lines(&o), ["5551", "balls: 4"]);

    let o = siteswap(&["construct", "--perm", "1,0", "--bvec", "0,0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("b_1 must be ≥ 1 at descent position"));

    let o = siteswap(&["construct", "--perm", "1,1", "--bvec", "0,0"]);
    assert_eq!(o.status.code(), Some(1));

    let o = siteswap(&["decompose", "12"]);
    assert_eq!(o.status.code(), Some(1));

    let o = siteswap(&["decompose", "97531", "--format", "json"]);
    let v = json(&o);
    let perm: Vec<String> = v["perm"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.to_string())
        .collect();
    let bvec: Vec<String> = v["b_vec"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.to_string())
        .collect();
    let o = siteswap(&[
        "construct",
        "--perm",
        &perm.join(","),
        "--bvec",
        &bvec.join(","),
    ]);
    assert_eq!(lines(&o)[0], "97531");
}

#[test]
fn eulerian_table() {
    let o = siteswap(&["table", "--kind", "eulerian", "--max-n", "6"]);
    let out = lines(&o);
    assert_eq!(out.len(), 6);
    assert_eq!(out[5], "1 57 302 302 57 1");

    let o = siteswap(&[
        "table", "--kind", "eulerian", "--max-n", "3", "--format", "csv",
    ]);
    assert_eq!(
        lines(&o),
        [
            "n,k,value",
            "1,0,1",
            "2,0,1",
            "2,1,1",
            "3,0,1",
            "3,1,4",
            "3,2,1"
        ]
    );

    let o = siteswap(&[
        "table", "--kind", "eulerian", "--max-n", "4", "--format", "json",
    ]);
    let v = json(&o);
    assert_eq!(
        v["rows"][3]["values"],
        serde_json::json!(["1", "11", "11", "1"])
    );
}

#[test]
fn rook_table() {
    let o = siteswap(&["table", "--kind", "rook", "--max-n", "4", "--format", "csv"]);
    let out = lines(&o);
    for row in ["0,4,24", "1,4,9", "2,4,2", "3,4,1"] {
        assert!(out.iter().any(|l| l == row), "missing {row}");
    }
    let o = siteswap(&["table", "--kind", "rook", "--max-n", "4"]);
    assert!(lines(&o).iter().any(|l| l == "4: 24 9 2 1"));
}

#[test]
fn counts_table() {
    let o = siteswap(&[
        "table", "--kind", "counts", "--max-n", "4", "--format", "csv",
    ]);
    let out = lines(&o);
    assert_eq!(out[0], "n,balls,ceiling,count,branch");
    assert!(out.iter().any(|l| l == "4,2,3,11,eulerian"));
    assert!(out.iter().any(|l| l == "2,1,3,3,unbounded"));

    let o = siteswap(&[
        "table",
        "--kind",
        "counts",
        "--max-n",
        "5",
        "--ceiling-form",
        "small",
        "--format",
        "json",
    ]);
    let v = json(&o);
    let rows = v["rows"].as_array().unwrap();
    let star = |n: u64, c: u64| {
        rows.iter()
            .find(|r| r["n"] == n && r["ceiling"] == c && r["balls"] == "all")
            .map(|r| r["count"].as_str().unwrap().to_owned())
    };
    assert_eq!(star(5, 4).as_deref(), Some("120"));
    assert_eq!(star(5, 3).as_deref(), Some("44"));
    assert_eq!(star(5, 2).as_deref(), Some("13"));
    // every count is a string of digits
    assert!(rows.iter().all(|r| r["count"]
        .as_str()
        .unwrap()
        .bytes()
        .all(|b| b.is_ascii_digit())));

    let o = siteswap(&[
        "table",
        "--kind",
        "counts",
        "--max-n",
        "12",
        "--ceiling-form",
        "small",
        "--budget",
        "1000",
    ]);
    assert_eq!(o.status.code(), Some(3));
}
