use std::process::{Command, Output};

fn orbline(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbline"))
        .args(args)
        .env_remove("ORBLINE_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}: ")))
        .unwrap_or_else(|| panic!("no {key} in {text}"))
}

#[test]
fn classify_reports_type() {
    let o = orbline(&["classify", "--A", "2,3,6"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(field(&text, "type"), "Tubular");
    assert_eq!(field(&text, "chi"), "0");

    let text = stdout(&orbline(&["classify", "--A", "2,3,7"]));
    assert_eq!(field(&text, "chi"), "-1/42");
    assert_eq!(field(&text, "deg_omega"), "1");
}

#[test]
fn charge_of_omega() {
    let o = orbline(&["charge", "--A", "2,3,7", "--tau", "0,1", "--obj", "O(w)"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(field(&text, "Z"), "-1+1i");
    assert_eq!(field(&text, "phase"), "3/4 (0.75)");

    let text = stdout(&orbline(&[
        "charge", "--A", "2,3,7", "--tau", "0,1", "--obj", "O(1*c)",
    ]));
    assert_eq!(field(&text, "Z"), "-42+1i");
    assert_eq!(field(&text, "slope"), "42");
}

#[test]
fn tau_outside_upper_half_plane_is_a_usage_error() {
    let o = orbline(&["charge", "--A", "2,3,7", "--tau", "0,-1", "--obj", "O(0)"]);
    assert_eq!(o.status.code(), Some(2));
    let o = orbline(&["gldim", "--A", "2,3,7", "--tau", "1/0,1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn malformed_literals_are_usage_errors() {
    assert_eq!(
        orbline(&["classify", "--A", "2,x,7"]).status.code(),
        Some(2)
    );
    assert_eq!(orbline(&["classify", "--A", "2,3"]).status.code(), Some(2));
    assert_eq!(
        orbline(&["k0-class", "--A", "2,3,7", "--obj", "S[4,1]"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        orbline(&["normal-form", "--A", "2,3,7", "3*y"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn printed_literals_reparse() {
    let text = stdout(&orbline(&["normal-form", "--A", "2,3,7", "5*x3-c+x1"]));
    let nf = field(&text, "normal_form").to_string();
    let again = stdout(&orbline(&["normal-form", "--A", "2,3,7", &nf]));
    assert_eq!(field(&again, "normal_form"), nf);

    for literal in ["O(w)", "S[*;3]", "S[2,2;4]", "S[3,0]"] {
        let text = stdout(&orbline(&["k0-class", "--A", "2,3,7", "--obj", literal]));
        let printed = field(&text, "object").to_string();
        let again = stdout(&orbline(&["k0-class", "--A", "2,3,7", "--obj", &printed]));
        assert_eq!(field(&again, "object"), printed);
        assert_eq!(field(&again, "class"), field(&text, "class"));
    }
}

#[test]
fn homdim_examples() {
    let text = stdout(&orbline(&[
        "homdim", "--A", "2,3,7", "--from", "O(0)", "--to", "O(w)", "--ext",
    ]));
    assert_eq!(field(&text, "ext1"), "1");
    let text = stdout(&orbline(&[
        "homdim", "--A", "2,3,7", "--from", "O(0)", "--to", "O(c)",
    ]));
    assert_eq!(field(&text, "hom"), "2");
}

#[test]
fn gldim_json_domestic() {
    let o = orbline(&["gldim", "--A", "2,3,5", "--tau", "0,1", "--json"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(
        text.contains(r#""exact_flag":"ExactGlobal","value":"1""#),
        "{text}"
    );
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["witness"]["ext"], true);
}

#[test]
fn gldim_json_wild() {
    let text = stdout(&orbline(&[
        "gldim", "--A", "2,3,7", "--tau", "0,1", "--L", "2", "--N", "7", "--json",
    ]));
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["exact_flag"], "WindowLowerBound");
    assert_eq!(doc["value"], "5/4");
    assert_eq!(doc["ratio"], serde_json::json!(["1", "1"]));
}

#[test]
fn verify_theorems_tubular() {
    let o = orbline(&["verify-theorems", "--A", "2,2,2,2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains(r#""gepner": true"#));
    assert!(text.contains(r#""gldim": "1 (exact)""#));
}

#[test]
fn verify_theorems_wild() {
    let o = orbline(&["verify-theorems", "--A", "2,3,7", "--tau", "0,1"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["lower_bound"], 1.25);
    assert_eq!(doc["gepner"], false);
    assert_eq!(doc["failures"], serde_json::json!([]));
}

#[test]
fn verify_theorems_domestic() {
    let o = orbline(&["verify-theorems", "--A", "2,3,5", "--tau", "1/2,3/2"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["gldim"], "1 (exact)");
}

fn write_charges(dir: &tempfile::TempDir, body: &serde_json::Value) -> String {
    let path = dir.path().join("charges.json");
    std::fs::write(&path, body.to_string()).unwrap();
    path.to_string_lossy().into_owned()
}

fn slope_charges() -> serde_json::Value {
    // Z_i on the basis for (2,3,5): Z(O) = i, Z(S) = -30, Z(S_{i,j}) = -30/a_i.
    serde_json::json!({
        "O": ["0", "1"],
        "S": ["-30", "0"],
        "S[1,1]": ["-15", "0"],
        "S[2,1]": ["-10", "0"],
        "S[2,2]": ["-10", "0"],
        "S[3,1]": ["-6", "0"],
        "S[3,2]": ["-6", "0"],
        "S[3,3]": ["-6", "0"],
        "S[3,4]": ["-6", "0"],
    })
}

#[test]
fn check_thm1_accepts_slope_charges() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_charges(&dir, &slope_charges());
    let o = orbline(&["check-thm1", "--A", "2,3,5", "--charges", &path]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "accept: tau = 0,1");
}

#[test]
fn check_thm1_rejects_and_reports_reason() {
    let dir = tempfile::tempdir().unwrap();
    let mut z = slope_charges();
    z["S[1,1]"] = serde_json::json!(["-29/2", "0"]);
    let path = write_charges(&dir, &z);
    let o = orbline(&["check-thm1", "--A", "2,3,5", "--charges", &path]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("reject: tube consistency"));

    let mut z = slope_charges();
    z.as_object_mut().unwrap().remove("S[3,4]");
    let path = write_charges(&dir, &z);
    let o = orbline(&["check-thm1", "--A", "2,3,5", "--charges", &path]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn scan_writes_csv_with_summary() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("scan.csv");
    let o = orbline(&[
        "scan",
        "--A",
        "2,3,7",
        "--grid",
        "0,1;0,10;0,100;0,1000",
        "--L",
        "2",
        "--N",
        "7",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let csv = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(
        lines[0],
        "tau_re,tau_im,lower_bound_float,exact_flag,witness_a,witness_b,witness_ext"
    );
    assert_eq!(lines.len(), 6);
    assert!(lines[1].starts_with("0,1,1.25,WindowLowerBound,"));
    let values: Vec<f64> = lines[1..5]
        .iter()
        .map(|l| l.split(',').nth(2).unwrap().parse().unwrap())
        .collect();
    assert!(values.windows(2).all(|w| w[1] < w[0]));
    assert!(lines[5].starts_with("grid_inf,,"));
}

#[test]
fn scan_grid_from_file_and_rect() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("grid.txt");
    std::fs::write(&grid, "# tubular\n0,1\n-1/2,2\n").unwrap();
    let o = orbline(&[
        "scan",
        "--A",
        "2,2,2,2",
        "--grid",
        grid.to_str().unwrap(),
        "--L",
        "1",
        "--N",
        "2",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().skip(1).all(|l| l.contains(",1,ExactGlobal,")));

    let o = orbline(&[
        "scan",
        "--A",
        "2,3,5",
        "--grid",
        "rect:-1,1,3;1/2,3/2,3",
        "--L",
        "1",
        "--N",
        "5",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 11);

    let o = orbline(&["scan", "--A", "2,3,5", "--grid", "rect:-1,1,3;-1,1,3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn repeated_runs_are_identical() {
    let args = ["gldim", "--A", "2,2,3", "--tau", "1/3,2", "--json"];
    assert_eq!(orbline(&args).stdout, orbline(&args).stdout);
}
