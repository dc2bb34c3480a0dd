use hopf_atlas::cli::run;

fn hopfatlas(args: &[&str]) -> (i32, String, String) {
    run(std::iter::once("hopfatlas").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = hopfatlas(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

#[test]
fn verbs_print_the_expected_lines() {
    assert!(ok(&["verify", "taft3"]).contains("ok: bialgebra, antipode"));
    let inv = ok(&["invariants", "k8"]);
    assert!(inv.contains("corad_dim=6") && inv.contains("r=2"), "{inv}");
    let p = ok(&["prove", "70", "--pack", "extended", "--flag", "full-orbit=2", "--axiom", "pq-half"]);
    assert!(p.contains("eliminated: 5,7,10,14,35*,70 (* axiom)"), "{p}");
    assert!(ok(&["status", "24"]).contains("Pointed: Completed"));
    assert!(ok(&["table", "--format", "csv"]).lines().count() > 16);
    let c = ok(&["coinv"]);
    assert_eq!(c.matches("law holds, π|R = ε holds").count(), 3, "{c}");
    assert!(c.contains("dim H = 12, dim H^coπ = 3, dim B = 4"), "{c}");
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["invariants", "am11:3"][..],
        &["prove", "42", "--pack", "extended"],
        &["dual", "taft3"],
        &["status", "78", "--crosscheck"],
        &["table"],
    ] {
        assert_eq!(hopfatlas(args), hopfatlas(args), "{args:?}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(hopfatlas(&["verify", "nosuch"]).0, 3);
    assert_eq!(hopfatlas(&["frobnicate"]).0, 2);
    assert_eq!(hopfatlas(&["status", "200"]).0, 3);
    assert_eq!(hopfatlas(&["prove", "300"]).0, 3);
    assert_eq!(hopfatlas(&["verify", "/nonexistent/h.json"]).0, 4);
    assert_eq!(hopfatlas(&["prove", "--replay", "/nonexistent/t.json"]).0, 4);
    let (code, out, _) = hopfatlas(&["iso", "a4p", "a4pp"]);
    assert_eq!(code, 1);
    assert!(out.contains("dual coradical dims differ"), "{out}");
}

#[test]
fn files_round_trip_through_the_cli() {
    let dir = std::env::temp_dir().join(format!("hopfatlas-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let alg = dir.join("a4pp.json");
    let trace = dir.join("trace.json");
    let (a, t) = (alg.to_str().unwrap(), trace.to_str().unwrap());
    ok(&["export", "a4pp", "--out", a]);
    assert!(ok(&["verify", a]).contains("ok"));
    ok(&["prove", "42", "--pack", "extended", "--trace", t]);
    let replayed = ok(&["prove", "--replay", t]);
    assert!(!replayed.is_empty());
    let text = std::fs::read_to_string(&trace).unwrap();
    std::fs::write(&trace, text.replacen("\"eliminated\": false", "\"eliminated\": true", 1)).unwrap();
    assert_eq!(hopfatlas(&["prove", "--replay", t]).0, 1);
    std::fs::remove_dir_all(&dir).unwrap();
}
