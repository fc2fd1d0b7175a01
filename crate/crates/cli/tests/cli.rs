use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_specfun"))
        .args(args)
        .env_remove("SPECFUN_THREADS")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn column(row: &str, k: usize) -> String {
    row.split(',').nth(k).unwrap().to_string()
}

#[test]
fn eval_examples() {
    let o = run(&["eval", "daw", "1.0+0.0i"]);
    assert!(o.status.success());
    let row = stdout(&o).lines().nth(1).unwrap().to_string();
    assert!(column(&row, 2).starts_with("0.53807950691"));
    assert_eq!(column(&row, 4), "series");

    let o = run(&["eval", "jackson", "0.0+0.0i"]);
    assert_eq!(column(stdout(&o).lines().nth(1).unwrap(), 2), "1.0");

    let o = run(&["eval", "fresnel-c", "1.0"]);
    assert!(column(stdout(&o).lines().nth(1).unwrap(), 2).starts_with("0.37398283341573"));
}

#[test]
fn tabulate_examples() {
    let o = run(&["tabulate", "daw", "--re=-2:2:5"]);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 5);
    assert_eq!(column(rows[2], 2), "0.0");

    let o = run(&["tabulate", "fresnel-s", "--re", "0:2:3"]);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(column(rows[0], 2), "0.0");
    assert!(column(rows[1], 2).starts_with("0.50485459411368"));
    assert!(column(rows[2], 2).starts_with("0.27433550558379"));
}

#[test]
fn json_records_carry_the_csv_names() {
    let o = run(&["eval", "faddeeva", "1+1i", "--format", "json", "--oracle"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let keys = ["z_re", "z_im", "value_re", "value_im", "method", "est_error", "oracle_re", "oracle_im", "rel_diff"];
    for k in keys {
        assert!(v.get(k).is_some(), "{k}");
    }
    assert!(v["rel_diff"].as_f64().unwrap() < 1e-12);
    let o = run(&["eval", "faddeeva", "1+1i", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(v.get("oracle_re").is_none() && v.get("rel_diff").is_none());
}

#[test]
fn polar_grid_order() {
    let o = run(&["tabulate", "daw", "--polar", "--re", "1:2:2", "--im", "0:1.5707963267948966:2"]);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 4);
    assert_eq!(column(rows[1], 0), "2.0");
    assert!(column(rows[2], 0).parse::<f64>().unwrap().abs() < 1e-15);
    assert_eq!(column(rows[2], 1), "1.0");
}

#[test]
fn accuracy_map_records_point_errors_in_row() {
    let o = run(&["accuracy-map", "daw", "--re=-1:1:3", "--method", "asymptotic"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("z_re,z_im,value_re,value_im,method,est_error,oracle_re,oracle_im,rel_diff")
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(column(rows[1], 4), "error");
    assert_eq!(column(rows[0], 4), "asymptotic");
}

#[test]
fn gordeyev_eval_and_flags() {
    let o = run(&["eval", "gordeyev", "1.3+0.2i", "--lambda", "0.5", "--nu", "0.2", "--oracle"]);
    let row = stdout(&o).lines().nth(1).unwrap().to_string();
    assert!(column(&row, 2).starts_with("0.41091660359232"));
    assert!(column(&row, 8).parse::<f64>().unwrap() < 1e-12);
    assert_eq!(run(&["eval", "gordeyev", "1"]).status.code(), Some(2));
    let o = run(&["eval", "gordeyev", "3", "--lambda", "0.5", "--nu", "0.1", "--method", "asymptotic"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn bench_reports_each_route() {
    let o = run(&["bench", "daw", "--re", "8:9:5", "--im", "0.5:1:2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("function,route,points,failures,ns_per_point,mean_terms,max_terms"));
    let routes: Vec<String> = lines.map(|l| column(l, 1)).collect();
    assert_eq!(routes, vec!["series", "asymptotic", "auto"]);
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["eval", "sitenko", "1+1i"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "daw", "1", "--orders", "0,3"]).status.code(), Some(2));
    assert_eq!(run(&["tabulate", "daw", "--re", "1:0:3"]).status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_specfun"))
        .args(["eval", "daw", "1"])
        .env("SPECFUN_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn method_choices_route_as_asked() {
    for (m, tag) in [("series", "series"), ("asymptotic", "asymptotic"), ("quadrature", "quadrature"), ("paper-asymptotic", "paper-asymptotic")] {
        let o = run(&["eval", "daw", "6+1i", "--method", m]);
        assert_eq!(column(stdout(&o).lines().nth(1).unwrap(), 4), tag, "{m}");
    }
}
