use hopf_atlas::kb::{Crosscheck, Kb, KbError, Status, TableFormat, COLUMNS};

use Status::{Completed as C, None as N, Open as O};

// (dim, [semisimple, pointed, chevalley, other]) as printed in the
// classification table.
const SPOT: &[(u32, [Status; 4])] = &[
    (8, [C, C, N, N]),
    (16, [C, C, C, C]),
    (24, [O, C, O, O]),
    (27, [C, C, N, N]),
    (30, [C, N, N, C]),
    (31, [C, N, N, N]),
    (32, [O, C, O, O]),
    (42, [C, N, N, O]),
    (60, [O, C, O, O]),
    (64, [O, O, O, O]),
    (81, [O, C, O, O]),
    (87, [C, N, N, O]),
    (88, [O, O, O, O]),
    (96, [O, O, O, O]),
    (100, [O, O, O, O]),
];

const OPEN: &[u32] = &[
    24, 32, 36, 40, 42, 45, 48, 52, 54, 56, 60, 63, 64, 66, 68, 70, 72, 75, 76, 78, 80, 81, 84, 87, 88, 90, 92, 93, 96,
    99, 100,
];

#[test]
fn spot_dimensions() {
    let kb = Kb::load().unwrap();
    for (n, cols) in SPOT {
        let rep = kb.status(*n).unwrap();
        for (c, s) in COLUMNS.iter().zip(cols) {
            assert_eq!(rep.status(*c), *s, "dim {n} {}", c.title());
        }
        assert!(rep.cells.iter().all(|c| !c.cite.is_empty()));
    }
    let r = kb.status(24).unwrap().render();
    assert!(r.contains("Other: Open") && r.contains("Pointed: Completed"), "{r}");
}

#[test]
fn patterns_and_bindings() {
    let kb = Kb::load().unwrap();
    let cases = [
        (31, "p", vec![31]),
        (14, "2p", vec![7]),
        (15, "pq", vec![3, 5]),
        (18, "2p^2", vec![3]),
        (12, "pq^2", vec![3, 2]),
        (54, "p^3q", vec![3, 2]),
        (64, "p^n", vec![2]),
        (90, "p^2qr", vec![3, 2, 5]),
    ];
    for (n, label, bind) in cases {
        let rep = kb.status(n).unwrap();
        assert_eq!((rep.pattern.as_str(), rep.binding), (label, bind), "n={n}");
    }
    assert_eq!(kb.rows.len(), 16);
    assert!(matches!(kb.status(1), Err(KbError::Range(1))));
    assert!(matches!(kb.status(101), Err(KbError::Range(101))));
}

#[test]
fn open_dimensions() {
    let kb = Kb::load().unwrap();
    assert_eq!(kb.open_dimensions(), OPEN);
    assert_eq!(kb.open_dimensions_from_summaries(), OPEN);
}

#[test]
fn renders() {
    let kb = Kb::load().unwrap();
    let md = kb.render_table(TableFormat::Md);
    let p3 = md.lines().find(|l| l.starts_with("| p^3 |")).unwrap();
    assert!(p3.contains("8, 27"));
    assert_eq!(md, kb.render_table(TableFormat::Md));
    let csv = kb.render_table(TableFormat::Csv);
    assert_eq!(csv.lines().count(), 1 + kb.rows.len());
    assert!("tex".parse::<TableFormat>().is_err());
}

#[test]
fn crosschecks() {
    let kb = Kb::load().unwrap();
    for n in [42, 66, 70, 78] {
        let c = kb.crosscheck_with_prover(n).unwrap();
        assert!(matches!(c, Crosscheck::Consistent { .. }), "{n}: {}", c.render());
    }
    assert!(matches!(kb.crosscheck_with_prover(31).unwrap(), Crosscheck::Vacuous(_)));
    assert!(kb.crosscheck_with_prover(24).unwrap().passed());
}

#[test]
fn broken_data_is_rejected() {
    let table = include_str!("../data/table1.toml");
    let bib = include_str!("../data/bibliography.toml");
    // an unknown key
    let bad = table.replacen("cite = [\"Z\"]", "cite = [\"nowhere\"]", 1);
    assert!(Kb::from_strs(&bad, bib).is_err());
    // an open list that disagrees with its entries
    let bad = table.replacen("Open: 87, 93", "Open: 87", 1);
    assert!(Kb::from_strs(&bad, bib).is_err());
    // a dimension of the wrong shape
    let bad = table.replacen("dims = [87, 93]", "dims = [87, 90, 93]", 1);
    assert!(matches!(Kb::from_strs(&bad, bib), Err(KbError::Inconsistent(m)) if m.contains("shape")));
    assert!(Kb::from_strs(table, bib).is_ok());
}
