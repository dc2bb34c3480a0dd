//! Classification status of small dimensions, as shipped data.
//!
//! Nothing here computes mathematics; `crosscheck_with_prover` only reports
//! whether the prover contradicts the recorded grouplike-order claims.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Deserialize;
use thiserror::Error;

use crate::prover::{self, Assumptions, Axiom, Flag, Pack};

const TABLE: &str = include_str!("../data/table1.toml");
const BIBLIOGRAPHY: &str = include_str!("../data/bibliography.toml");

#[derive(Debug, Error)]
pub enum KbError {
    #[error("dimension {0} outside 2..=100")]
    Range(u32),
    #[error("malformed data: {0}")]
    Data(String),
    #[error("inconsistent data: {0}")]
    Inconsistent(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Column {
    Semisimple,
    Pointed,
    Chevalley,
    Other,
}

pub const COLUMNS: [Column; 4] = [Column::Semisimple, Column::Pointed, Column::Chevalley, Column::Other];

impl Column {
    pub fn title(&self) -> &'static str {
        match self {
            Column::Semisimple => "Semisimple",
            Column::Pointed => "Pointed",
            Column::Chevalley => "Chevalley",
            Column::Other => "Other",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Completed,
    None,
    Open,
    Partial,
}

impl Status {
    pub fn title(&self) -> &'static str {
        match self {
            Status::Completed => "Completed",
            Status::None => "None",
            Status::Open => "Open",
            Status::Partial => "Partial",
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub dims: Vec<u32>,
    pub status: Status,
    #[serde(default)]
    pub note: Option<String>,
    #[serde(default)]
    pub grouplike_orders: Option<Vec<u32>>,
    pub cite: Vec<String>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Cell {
    pub column: Column,
    pub status: Status,
    pub summary: String,
    pub cite: Vec<String>,
    #[serde(default)]
    pub entry: Vec<Entry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Condition {
    Two,
    Odd,
}

/// One table row: a factorization shape.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShapePattern {
    pub label: String,
    #[serde(default)]
    pub note: Option<String>,
    /// Exponent multisets, descending.
    pub shapes: Vec<Vec<u32>>,
    #[serde(default)]
    pub condition: Option<Condition>,
    pub cell: Vec<Cell>,
}

impl ShapePattern {
    /// The primes bound to p, q, r (in exponent order) if n has this shape.
    pub fn matches(&self, n: u32) -> Option<Vec<u32>> {
        if n < 2 {
            return None;
        }
        let mut f = prover::factor(n);
        // descending exponent, then ascending prime
        f.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        let exps: Vec<u32> = f.iter().map(|x| x.1).collect();
        if !self.shapes.contains(&exps) {
            return None;
        }
        if let Some(c) = self.condition {
            // the prime carrying exponent 1 (the smaller one for pq)
            let single = f.iter().filter(|x| x.1 == 1).map(|x| x.0).min()?;
            let ok = match c {
                Condition::Two => single == 2,
                Condition::Odd => single != 2,
            };
            if !ok {
                return None;
            }
        }
        let primes: Vec<u32> = f.iter().map(|x| x.0).collect();
        Some(self.bind(primes))
    }

    // p, q, r in the order the label names them: the 2 of 2p/2p² is not a
    // variable, and in pq² the exponent-1 prime is p.
    fn bind(&self, primes: Vec<u32>) -> Vec<u32> {
        match self.label.as_str() {
            "2p" | "2p^2" => primes.into_iter().filter(|&p| p != 2).collect(),
            "pq^2" => primes.into_iter().rev().collect(),
            _ => primes,
        }
    }

    pub fn dims(&self, max: u32) -> Vec<u32> {
        (2..=max).filter(|&n| self.matches(n).is_some()).collect()
    }

    pub fn cell(&self, c: Column) -> &Cell {
        self.cell.iter().find(|x| x.column == c).expect("validated: every column present")
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BibEntry {
    pub key: String,
    pub kind: String,
    pub topic: String,
}

#[derive(Deserialize)]
struct TableFile {
    row: Vec<ShapePattern>,
}

#[derive(Deserialize)]
struct BibFile {
    entry: Vec<BibEntry>,
}

#[derive(Clone, Debug)]
pub struct Kb {
    pub rows: Vec<ShapePattern>,
    pub bibliography: BTreeMap<String, BibEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellStatus {
    pub column: Column,
    pub status: Status,
    pub note: Option<String>,
    pub cite: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatusReport {
    pub n: u32,
    pub pattern: String,
    pub binding: Vec<u32>,
    pub cells: Vec<CellStatus>,
    pub grouplike_orders: Option<Vec<u32>>,
}

impl StatusReport {
    pub fn status(&self, c: Column) -> Status {
        self.cells.iter().find(|x| x.column == c).map(|x| x.status).expect("four columns")
    }

    pub fn render(&self) -> String {
        let vars = ["p", "q", "r"];
        let bind: Vec<String> = self.binding.iter().zip(vars).map(|(v, name)| format!("{name}={v}")).collect();
        let mut out = format!("dim {} ({}; {})\n", self.n, self.pattern, bind.join(", "));
        for c in &self.cells {
            let _ = write!(out, "{}: {}", c.column.title(), c.status.title());
            if let Some(note) = &c.note {
                let _ = write!(out, " — {note}");
            }
            let _ = writeln!(out, " [{}]", c.cite.join(", "));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Crosscheck {
    /// No recorded claim to test (e.g. primes).
    Vacuous(String),
    Consistent { claim: Vec<u32>, surviving: Vec<u32> },
    Mismatch { claim: Vec<u32>, surviving: Vec<u32>, extra: Vec<u32> },
}

impl Crosscheck {
    pub fn passed(&self) -> bool {
        !matches!(self, Crosscheck::Mismatch { .. })
    }

    pub fn render(&self) -> String {
        let list = |v: &[u32]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            Crosscheck::Vacuous(why) => format!("vacuous: {why}"),
            Crosscheck::Consistent { claim, surviving } => {
                format!("consistent: prover surviving {{{}}} ⊆ claimed {{{}}}", list(surviving), list(claim))
            }
            Crosscheck::Mismatch { claim, surviving, extra } => format!(
                "MISMATCH: prover surviving {{{}}} not within claimed {{{}}} (extra: {})",
                list(surviving),
                list(claim),
                list(extra)
            ),
        }
    }
}

/// Flags and axioms `crosscheck_with_prover` runs with.
pub fn crosscheck_assumptions() -> Assumptions {
    Assumptions::default().with_flags(&[Flag::FullOrbit(2), Flag::FreeTranslation]).with_axiom(Axiom::PqHalf)
}

/// Integers following "Open:" in a cell summary; `None` when the summary
/// is a bare "Open" (the whole row).
fn open_list_in_summary(s: &str) -> Option<BTreeSet<u32>> {
    if s.trim() == "Open" {
        return None;
    }
    let mut out = BTreeSet::new();
    let mut rest = s;
    while let Some(i) = rest.find("Open:") {
        rest = &rest[i + 5..];
        for tok in rest.split(',') {
            let t = tok.trim().trim_end_matches('.');
            match t.parse::<u32>() {
                Ok(v) => out.insert(v),
                Err(_) => break,
            };
        }
    }
    Some(out)
}

impl Kb {
    pub fn load() -> Result<Kb, KbError> {
        Kb::from_strs(TABLE, BIBLIOGRAPHY)
    }

    pub fn from_strs(table: &str, bib: &str) -> Result<Kb, KbError> {
        let t: TableFile = toml::from_str(table).map_err(|e| KbError::Data(e.to_string()))?;
        let b: BibFile = toml::from_str(bib).map_err(|e| KbError::Data(e.to_string()))?;
        let mut bibliography = BTreeMap::new();
        for e in b.entry {
            if bibliography.insert(e.key.clone(), e.clone()).is_some() {
                return Err(KbError::Inconsistent(format!("duplicate bibliography key {}", e.key)));
            }
        }
        let kb = Kb { rows: t.row, bibliography };
        kb.validate()?;
        Ok(kb)
    }

    fn validate(&self) -> Result<(), KbError> {
        let bad = |s: String| Err(KbError::Inconsistent(s));
        for n in 2..=100 {
            let hits: Vec<&str> = self.rows.iter().filter(|r| r.matches(n).is_some()).map(|r| r.label.as_str()).collect();
            if hits.len() != 1 {
                return bad(format!("dimension {n} matches {hits:?}"));
            }
        }
        for r in &self.rows {
            for c in COLUMNS {
                if r.cell.iter().filter(|x| x.column == c).count() != 1 {
                    return bad(format!("row {} needs exactly one {} cell", r.label, c.title()));
                }
            }
            let dims = r.dims(100);
            for cell in &r.cell {
                let keys = cell.cite.iter().chain(cell.entry.iter().flat_map(|e| &e.cite));
                if cell.cite.is_empty() || cell.entry.iter().any(|e| e.cite.is_empty()) {
                    return bad(format!("row {} {}: cell without citation", r.label, cell.column.title()));
                }
                for k in keys {
                    if !self.bibliography.contains_key(k) {
                        return bad(format!("unknown citation key {k:?}"));
                    }
                }
                let mut seen = BTreeMap::new();
                for e in &cell.entry {
                    for d in &e.dims {
                        if !dims.contains(d) {
                            return bad(format!("row {}: dimension {d} does not have shape {}", r.label, r.label));
                        }
                        if let Some(prev) = seen.insert(*d, e.status) {
                            if prev != e.status {
                                return bad(format!("dimension {d} both {} and {}", prev.title(), e.status.title()));
                            }
                        }
                    }
                }
                // open lists in the printed summary agree with the entries
                let open: BTreeSet<u32> =
                    dims.iter().copied().filter(|&d| self.cell_status(cell, d).status == Status::Open).collect();
                let printed = open_list_in_summary(&cell.summary).unwrap_or_else(|| dims.iter().copied().collect());
                if open != printed {
                    return bad(format!("row {} {}: open {:?} vs summary {:?}", r.label, cell.column.title(), open, printed));
                }
            }
        }
        Ok(())
    }

    pub fn pattern(&self, n: u32) -> Option<&ShapePattern> {
        self.rows.iter().find(|r| r.matches(n).is_some())
    }

    fn cell_status(&self, cell: &Cell, n: u32) -> CellStatus {
        match cell.entry.iter().find(|e| e.dims.contains(&n)) {
            Some(e) => CellStatus { column: cell.column, status: e.status, note: e.note.clone(), cite: e.cite.clone() },
            None => CellStatus { column: cell.column, status: cell.status, note: None, cite: cell.cite.clone() },
        }
    }

    pub fn status(&self, n: u32) -> Result<StatusReport, KbError> {
        if !(2..=100).contains(&n) {
            return Err(KbError::Range(n));
        }
        let r = self.pattern(n).expect("validated coverage");
        let cells: Vec<CellStatus> = COLUMNS.iter().map(|&c| self.cell_status(r.cell(c), n)).collect();
        let grouplike_orders =
            r.cell.iter().flat_map(|c| &c.entry).filter(|e| e.dims.contains(&n)).find_map(|e| e.grouplike_orders.clone());
        Ok(StatusReport { n, pattern: r.label.clone(), binding: r.matches(n).unwrap(), cells, grouplike_orders })
    }

    /// Dimensions with an open cell in any column.
    pub fn open_dimensions(&self) -> Vec<u32> {
        (2..=100)
            .filter(|&n| {
                let rep = self.status(n).unwrap();
                rep.cells.iter().any(|c| c.status == Status::Open)
            })
            .collect()
    }

    /// Same set, read off the printed "Open:" lists only.
    pub fn open_dimensions_from_summaries(&self) -> Vec<u32> {
        let mut out = BTreeSet::new();
        for r in &self.rows {
            for c in &r.cell {
                match open_list_in_summary(&c.summary) {
                    Some(s) => out.extend(s),
                    None => out.extend(r.dims(100)),
                }
            }
        }
        out.into_iter().collect()
    }

    pub fn render_table(&self, format: TableFormat) -> String {
        let mut out = String::new();
        let cell_text = |r: &ShapePattern, c: Column| {
            let cell = r.cell(c);
            let mut keys: Vec<&str> = cell.cite.iter().map(|s| s.as_str()).collect();
            for e in &cell.entry {
                for k in &e.cite {
                    if !keys.contains(&k.as_str()) {
                        keys.push(k);
                    }
                }
            }
            format!("{} [{}]", cell.summary, keys.join(", "))
        };
        let label = |r: &ShapePattern| match &r.note {
            Some(n) => format!("{} ({n})", r.label),
            None => r.label.clone(),
        };
        match format {
            TableFormat::Md => {
                out.push_str("| dim H | Semisimple | Pointed | Chevalley | Other |\n");
                out.push_str("|---|---|---|---|---|\n");
                for r in &self.rows {
                    let cells: Vec<String> = COLUMNS.iter().map(|&c| cell_text(r, c).replace('|', "\\|")).collect();
                    let _ = writeln!(out, "| {} | {} |", label(r), cells.join(" | "));
                }
            }
            TableFormat::Csv => {
                out.push_str("dim_h,semisimple,pointed,chevalley,other\n");
                let q = |s: String| format!("\"{}\"", s.replace('"', "\"\""));
                for r in &self.rows {
                    let cells: Vec<String> = COLUMNS.iter().map(|&c| q(cell_text(r, c))).collect();
                    let _ = writeln!(out, "{},{}", q(label(r)), cells.join(","));
                }
            }
        }
        out
    }

    pub fn crosscheck_with_prover(&self, n: u32) -> Result<Crosscheck, KbError> {
        if n > 100 {
            return Err(KbError::Range(n));
        }
        if n < 4 || prover::is_prime(n) {
            return Ok(Crosscheck::Vacuous(format!("{n} is prime or too small for the prover")));
        }
        let rep = self.status(n)?;
        let Some(claim) = rep.grouplike_orders else {
            return Ok(Crosscheck::Vacuous(format!("no grouplike-order claim recorded for {n}")));
        };
        let report = prover::prove(n, &crosscheck_assumptions(), Pack::Extended)
            .map_err(|e| KbError::Inconsistent(e.to_string()))?;
        let surviving = report.surviving();
        let extra: Vec<u32> = surviving.iter().copied().filter(|g| !claim.contains(g)).collect();
        Ok(if extra.is_empty() {
            Crosscheck::Consistent { claim, surviving }
        } else {
            Crosscheck::Mismatch { claim, surviving, extra }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Md,
    Csv,
}

impl std::str::FromStr for TableFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "md" => Ok(TableFormat::Md),
            "csv" => Ok(TableFormat::Csv),
            _ => Err(format!("unknown table format {s:?} (md|csv)")),
        }
    }
}
