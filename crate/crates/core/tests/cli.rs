use std::path::PathBuf;

use loghodge::cli::{run, TableDocument, EXIT_INPUT, EXIT_OK, EXIT_VIOLATION};
use loghodge::BigradedTable;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

struct Output {
    code: i32,
    out: String,
    err: String,
}

fn loghodge(args: &[&str]) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("loghodge").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Output { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn table(o: &Output) -> BigradedTable {
    assert_eq!(o.code, EXIT_OK, "stderr: {}", o.err);
    TableDocument::parse(&o.out).unwrap().into_table().unwrap()
}

fn tmp_file(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("loghodge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.display().to_string()
}

#[test]
fn closed_form_a2_json() {
    let o = loghodge(&["grpcpt", "--type", "A2", "--mode", "closed"]);
    let t = table(&o);
    assert_eq!(t.iter().collect::<Vec<_>>(), vec![(0, 0, 1), (1, 2, 1), (2, 3, 1), (3, 5, 1)]);
    assert_eq!(t.j_max, Some(5));
    assert!(o.out.starts_with("{\n  \"schema\": \"loghodge/1\",\n  \"source\": {\n    \"command\": \"grpcpt\""));
}

#[test]
fn csv_and_pretty_outputs() {
    let csv = loghodge(&["grpcpt", "--type", "A1", "--out", "csv"]);
    assert_eq!(csv.out, "i,j,dim\n0,0,1\n1,2,1\n");
    let pretty = loghodge(&["grpcpt", "--type", "A1", "--out", "pretty"]);
    assert_eq!(pretty.code, EXIT_OK);
    assert!(pretty.out.contains('.'));
}

#[test]
fn crosscheck_a1() {
    let o = loghodge(&["grpcpt", "--type", "A1", "--crosscheck", "--jmax", "4"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.err);
    assert!(o.out.contains("\"differences\": []"));
}

#[test]
fn engine_mode_for_unsupported_type_is_an_input_error() {
    let o = loghodge(&["grpcpt", "--type", "G2", "--mode", "engine", "--jmax", "2"]);
    assert_eq!(o.code, EXIT_INPUT);
    assert!(o.err.contains("A1"));
}

#[test]
fn bad_arguments() {
    assert_eq!(loghodge(&["grpcpt", "--type", "Q7"]).code, EXIT_INPUT);
    assert_eq!(loghodge(&["frobnicate"]).code, EXIT_INPUT);
    assert_eq!(loghodge(&["bott", "--n", "2"]).code, EXIT_INPUT);
    assert_eq!(loghodge(&["bott", "--n", "2", "--j", "3", "--twist", "0"]).code, EXIT_INPUT);
    assert_eq!(loghodge(&["toric", "--fan", "/nonexistent/x.fan"]).code, EXIT_INPUT);
    assert_eq!(loghodge(&["toric", "--fan", &data("p2_missing_cone.fan")]).code, EXIT_INPUT);
    assert_eq!(loghodge(&["--help"]).code, EXIT_OK);
}

#[test]
fn engine_on_presentation_files() {
    let t = table(&loghodge(&["engine", "--presentation", &data("t2.ideal"), "--jmax", "3"]));
    assert_eq!(t.iter().collect::<Vec<_>>(), vec![(0, 0, 1), (0, 1, 2), (0, 2, 1)]);
    assert_eq!(t.checksums.len(), 4);
    let bad = tmp_file("bad.ideal", "vars 2\nx1 + x2^2\n");
    assert_eq!(loghodge(&["engine", "--presentation", &bad, "--jmax", "2"]).code, EXIT_INPUT);
}

#[test]
fn permuted_presentation_gives_the_same_table() {
    let a = table(&loghodge(&["engine", "--presentation", &data("a1.ideal"), "--jmax", "4"]));
    let b = table(&loghodge(&["engine", "--presentation", &data("a1_permuted.ideal"), "--jmax", "4"]));
    assert!(a.same_entries(&b));
    assert_eq!(a.checksums, b.checksums);
}

#[test]
fn toric_codim_one_of_the_plane() {
    let t = table(&loghodge(&["toric", "--fan", &data("p2.fan"), "--codim", "1"]));
    assert_eq!(t.iter().collect::<Vec<_>>(), vec![(1, 1, 1)]);
    let all = loghodge(&["toric", "--fan", &data("p1xp1.fan"), "--all"]);
    let doc = TableDocument::parse(&all.out).unwrap();
    assert_eq!(doc.h_vector, Some(vec![1, 2, 1]));
    let removed = table(&loghodge(&["toric", "--fan", &data("p1xp1.fan"), "--remove", "0", "--codim", "1"]));
    assert_eq!(removed.get(1, 1), 1);
}

#[test]
fn bott_queries() {
    let t = table(&loghodge(&["bott", "--n", "2", "--j", "1", "--twist", "2"]));
    assert_eq!(t.iter().collect::<Vec<_>>(), vec![(0, 1, 3)]);
    let neg = table(&loghodge(&["bott", "--n", "1", "--j", "0", "--twist", "-3"]));
    assert_eq!(neg.iter().collect::<Vec<_>>(), vec![(1, 0, 2)]);
    let broer = loghodge(&["bott", "--broer", "--n", "3", "--kmax", "4"]);
    assert_eq!(broer.code, EXIT_OK);
    assert!(broer.out.contains("\"violations\": []"));
}

#[test]
fn verify_consumes_emitted_tables() {
    let a2 = loghodge(&["grpcpt", "--type", "A2"]);
    let path = tmp_file("a2.json", &a2.out);
    assert_eq!(loghodge(&["verify", "--table", &path, "--q", "0", "--r", "2"]).code, EXIT_OK);
    let narrow = loghodge(&["verify", "--table", &path, "--q", "0", "--r", "1"]);
    assert_eq!(narrow.code, EXIT_VIOLATION);
    assert!(narrow.out.contains("\"j\": 5"));

    for (name, args) in [
        ("toric.json", vec!["toric", "--fan", &data("p3.fan") as &str]),
        ("bott.json", vec!["bott", "--n", "2", "--j", "2", "--twist", "0"]),
        ("engine.json", vec!["engine", "--presentation", &data("a1.ideal") as &str, "--jmax", "3"]),
    ] {
        let emitted = loghodge(&args);
        assert_eq!(emitted.code, EXIT_OK, "{name}: {}", emitted.err);
        let path = tmp_file(name, &emitted.out);
        let o = loghodge(&["verify", "--table", &path, "--q", "0", "--r", "1"]);
        assert_eq!(o.code, EXIT_OK, "{name}: {}", o.out);
    }

    let garbage = tmp_file("garbage.json", "{\"schema\": 3}");
    assert_eq!(loghodge(&["verify", "--table", &garbage, "--q", "0", "--r", "0"]).code, EXIT_INPUT);
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let p2 = data("p2.fan");
    let a1 = data("a1.ideal");
    let cases: Vec<Vec<&str>> = vec![
        vec!["grpcpt", "--type", "E8"],
        vec!["grpcpt", "--type", "T2", "--mode", "engine", "--jmax", "3"],
        vec!["grpcpt", "--type", "A1", "--crosscheck", "--jmax", "4"],
        vec!["engine", "--presentation", &a1, "--jmax", "4"],
        vec!["toric", "--fan", &p2, "--all"],
        vec!["bott", "--broer", "--n", "2", "--kmin", "-3", "--kmax", "3"],
    ];
    for args in cases {
        let a = loghodge(&args);
        let b = loghodge(&args);
        assert_eq!(a.code, EXIT_OK, "{args:?}: {}", a.err);
        assert_eq!(a.out, b.out, "{args:?}");
    }
}
