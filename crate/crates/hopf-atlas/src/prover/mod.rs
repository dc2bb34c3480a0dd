//! Counting arguments on coradical profiles.
//!
//! A profile (n, g, {(d_i, m_i)}) describes H₀ ≅ 𝕜G ⊕ ⊕_i M*(d_i)^{m_i}; the
//! rest of H splits into blocks P^{τ,γ} indexed by pairs of simple
//! subcoalgebras, grouped as y_GG (both grouplike), y_GD_i (grouplike and a
//! d_i-class; counted on both sides) and y_DD_ij.
//!
//! Rule ids:
//! * `R-div` — g | m·d² per class (profile enumeration);
//!   `R-empty` — no profile at all for this g (every block costs at least
//!   lcm(g, d²), and c0 < n is required);
//! * `R-gcd` — gcd(g, n/g) = 1 ⇒ no nontrivial skew-primitives;
//! * `R-bound` — without skew-primitives, n ≥ c0 + (2d₁+1)g + d₁²;
//! * `R-pointed` — pointed, nonsemisimple and without skew-primitives is
//!   impossible;
//! * `E-search` — exhaustive search for a P-block assignment (extended pack);
//! * `AXIOM:<id>` — imported structural facts, off unless enabled.

pub mod search;
pub mod trace;

use num_integer::{gcd, lcm};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use search::{all_assignments, find_assignment, Assignment, Constraints};

#[derive(Debug, Error)]
pub enum ProverError {
    #[error("dimension {0} outside the supported range 4..=200")]
    Range(u32),
    #[error("flag full-orbit={0} names a block size that no profile of dimension {1} can contain")]
    AbsentClass(u32, u32),
    #[error("unknown axiom rule {0:?}")]
    UnknownAxiom(String),
    #[error("trace replay failed: {0}")]
    Replay(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Flag {
    /// The antipode permutes the d-blocks of a minimal class in one orbit.
    FullOrbit(u32),
    /// G-translation acts freely on pairs of simple subcoalgebras.
    FreeTranslation,
}

impl Flag {
    pub fn citation(&self) -> &'static str {
        match self {
            Flag::FullOrbit(_) => {
                "hypothesis: S permutes the simple subcoalgebras of the class transitively, so each meets G in a nonzero block"
            }
            Flag::FreeTranslation => "hypothesis: G(H) acts freely by translation on pairs of simple subcoalgebras",
        }
    }

    pub fn label(&self) -> String {
        match self {
            Flag::FullOrbit(d) => format!("full-orbit={d}"),
            Flag::FreeTranslation => "free-translation".into(),
        }
    }
}

/// Structural exclusions imported as axioms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Axiom {
    /// n = 2pq (p, q odd primes): |G(H)| ≠ pq.
    PqHalf,
}

impl Axiom {
    pub fn parse(s: &str) -> Result<Axiom, ProverError> {
        match s {
            "pq-half" => Ok(Axiom::PqHalf),
            _ => Err(ProverError::UnknownAxiom(s.to_string())),
        }
    }

    pub fn id(&self) -> &'static str {
        match self {
            Axiom::PqHalf => "pq-half",
        }
    }

    pub fn citation(&self) -> &'static str {
        match self {
            Axiom::PqHalf => {
                "structural: for dim H = 2pq a grouplike subgroup of order pq gives a normal sub-Hopf algebra of index 2 (exact-sequence argument, not derived here)"
            }
        }
    }

    /// Does the axiom exclude this g at dimension n?
    pub fn applies(&self, n: u32, g: u32) -> bool {
        match self {
            Axiom::PqHalf => {
                let f = factor(n);
                f.len() == 3
                    && f.iter().all(|&(_, e)| e == 1)
                    && f[0].0 == 2
                    && g == n / 2
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Pack {
    Base,
    Extended,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assumptions {
    pub nonsemisimple: bool,
    pub nonpointed: bool,
    pub noncopointed: bool,
    pub flags: Vec<Flag>,
    pub axioms: Vec<Axiom>,
}

impl Default for Assumptions {
    fn default() -> Self {
        Assumptions { nonsemisimple: true, nonpointed: true, noncopointed: true, flags: vec![], axioms: vec![] }
    }
}

impl Assumptions {
    pub fn with_flags(mut self, flags: &[Flag]) -> Self {
        self.flags.extend_from_slice(flags);
        self.flags.sort();
        self.flags.dedup();
        self
    }

    pub fn with_axiom(mut self, a: Axiom) -> Self {
        if !self.axioms.contains(&a) {
            self.axioms.push(a);
            self.axioms.sort();
        }
        self
    }

    pub fn pointed_ok(mut self) -> Self {
        self.nonpointed = false;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Profile {
    pub n: u32,
    pub g: u32,
    /// Sorted by d, distinct d.
    pub blocks: Vec<(u32, u32)>,
}

impl Profile {
    pub fn c0(&self) -> u32 {
        self.g + self.blocks.iter().map(|(d, m)| m * d * d).sum::<u32>()
    }

    pub fn min_block(&self) -> Option<u32> {
        self.blocks.first().map(|b| b.0)
    }

    /// m·d² equals the least multiple of g and d² for this class.
    pub fn minimal_class(&self, d: u32) -> bool {
        self.blocks.iter().any(|&(dd, m)| dd == d && m * d * d == lcm(self.g, d * d))
    }
}

impl std::fmt::Display for Profile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let b: Vec<String> = self.blocks.iter().map(|(d, m)| format!("({d},{m})")).collect();
        write!(f, "g={} {{{}}}", self.g, b.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StepKind {
    Rule,
    Axiom,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub rule: String,
    pub kind: StepKind,
    /// Numeric instantiation, as (name, value) pairs.
    pub values: Vec<(String, i64)>,
    pub citation: String,
    pub flags: Vec<String>,
}

impl Step {
    fn rule(rule: &str, values: &[(&str, i64)], citation: &str) -> Step {
        Step {
            rule: rule.to_string(),
            kind: StepKind::Rule,
            values: values.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            citation: citation.to_string(),
            flags: vec![],
        }
    }

    pub fn value(&self, key: &str) -> Option<i64> {
        self.values.iter().find(|(k, _)| k == key).map(|(_, v)| *v)
    }
}

pub const CITE_NZ: &str = "Nichols–Zoeller: |G(H)| divides dim H";
pub const CITE_DIV: &str = "Andruskiewitsch–Natale: |G(H)| divides dim H_n and dim H_{0,d}";
pub const CITE_LR: &str = "Larson–Radford: nonsemisimple ⇒ not cosemisimple, so c0 < n";
pub const CITE_GCD: &str = "gcd(|G|, dim H/|G|) = 1 ⇒ H has no nontrivial skew-primitive elements";
pub const CITE_BOUND: &str =
    "without nontrivial skew-primitives: dim H ≥ dim H_0 + (2n_1+1)|G| + n_1², n_1 the least block size";
pub const CITE_POINTED: &str =
    "without nontrivial skew-primitives a nonsemisimple H has a simple subcoalgebra of dimension > 1";
pub const CITE_E2: &str = "translation by G(H) (free on the grouplike coordinate): g | y_GG, g·d | y_GD, d_i·d_j | y_DD";
pub const CITE_E3: &str =
    "existence: y_GG ≥ g and some class with y_GD ≥ g·d and y_DD ≥ d² (nondegenerate block for some m > 1)";
pub const CITE_SEARCH: &str = "exhaustive search over P-block assignments with all variables ≤ n";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Feasible { witness: Option<Assignment> },
    Eliminated { steps: Vec<Step> },
}

impl Verdict {
    pub fn eliminated(&self) -> bool {
        matches!(self, Verdict::Eliminated { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileResult {
    pub profile: Profile,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GResult {
    pub g: u32,
    pub eliminated: bool,
    pub used_axiom: bool,
    /// g-level steps (axioms, empty profile set).
    pub steps: Vec<Step>,
    pub profiles: Vec<ProfileResult>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationReport {
    pub n: u32,
    pub pack: Pack,
    pub assumptions: Assumptions,
    pub results: Vec<GResult>,
}

impl EliminationReport {
    pub fn eliminated(&self) -> Vec<u32> {
        self.results.iter().filter(|r| r.eliminated).map(|r| r.g).collect()
    }

    pub fn surviving(&self) -> Vec<u32> {
        self.results.iter().filter(|r| !r.eliminated).map(|r| r.g).collect()
    }

    pub fn result(&self, g: u32) -> Option<&GResult> {
        self.results.iter().find(|r| r.g == g)
    }

    pub fn summary(&self) -> String {
        let el: Vec<String> = self
            .results
            .iter()
            .filter(|r| r.eliminated)
            .map(|r| if r.used_axiom { format!("{}*", r.g) } else { r.g.to_string() })
            .collect();
        let sv: Vec<String> = self.surviving().iter().map(|g| g.to_string()).collect();
        let any_axiom = self.results.iter().any(|r| r.used_axiom);
        let mut out = format!("eliminated: {}", el.join(","));
        if any_axiom {
            out.push_str(" (* axiom)");
        }
        out.push_str(&format!("\nsurviving: {}", sv.join(",")));
        out
    }
}

pub fn factor(mut n: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

fn check_range(n: u32) -> Result<(), ProverError> {
    if (4..=200).contains(&n) {
        Ok(())
    } else {
        Err(ProverError::Range(n))
    }
}

/// Profiles for one g, in lexicographic order of their block lists.
pub fn profiles_for_g(n: u32, g: u32, a: &Assumptions) -> Vec<Profile> {
    let mut out = Vec::new();
    if n % g != 0 || g >= n {
        return out;
    }
    let budget = n - g - 1; // c0 < n
    let mut cur = Vec::new();
    extend_blocks(n, g, 2, budget, &mut cur, &mut out);
    if a.nonpointed {
        out.retain(|p| !p.blocks.is_empty());
    }
    out
}

fn extend_blocks(n: u32, g: u32, dmin: u32, budget: u32, cur: &mut Vec<(u32, u32)>, out: &mut Vec<Profile>) {
    out.push(Profile { n, g, blocks: cur.clone() });
    let mut d = dmin;
    while d * d <= budget {
        let step = lcm(g, d * d) / (d * d); // least m with g | m d²
        let mut m = step;
        while m * d * d <= budget {
            cur.push((d, m));
            extend_blocks(n, g, d + 1, budget - m * d * d, cur, out);
            cur.pop();
            m += step;
        }
        d += 1;
    }
}

pub fn enumerate_profiles(n: u32, a: &Assumptions) -> Result<Vec<Profile>, ProverError> {
    check_range(n)?;
    Ok(divisors(n).into_iter().flat_map(|g| profiles_for_g(n, g, a)).collect())
}

/// Smallest c0 a profile with at least one block can have, and the d
/// attaining it.
fn least_block_cost(n: u32, g: u32) -> (u32, u32) {
    let mut best = (u32::MAX, 0);
    let mut d = 2;
    while d * d < n {
        let c = lcm(g, d * d);
        if c < best.0 {
            best = (c, d);
        }
        d += 1;
    }
    if best.1 == 0 {
        best = (n * n, 0);
    }
    best
}

pub fn no_skew(n: u32, g: u32) -> bool {
    gcd(g, n / g) == 1
}

/// Base pack on one profile.
pub fn apply_base_pack(p: &Profile, a: &Assumptions) -> Verdict {
    let mut steps = Vec::new();
    let (n, g) = (p.n as i64, p.g as i64);
    if !no_skew(p.n, p.g) {
        return Verdict::Feasible { witness: None };
    }
    steps.push(Step::rule("R-gcd", &[("n", n), ("g", g), ("gcd", 1)], CITE_GCD));
    if !a.nonsemisimple {
        return Verdict::Feasible { witness: None };
    }
    match p.min_block() {
        None => {
            steps.push(Step::rule("R-pointed", &[("n", n), ("g", g), ("blocks", 0)], CITE_POINTED));
            Verdict::Eliminated { steps }
        }
        Some(d1) => {
            let c0 = p.c0() as i64;
            let d1 = d1 as i64;
            let bound = c0 + (2 * d1 + 1) * g + d1 * d1;
            if bound > n {
                steps.push(Step::rule(
                    "R-bound",
                    &[("n", n), ("c0", c0), ("g", g), ("d1", d1), ("bound", bound)],
                    CITE_BOUND,
                ));
                Verdict::Eliminated { steps }
            } else {
                Verdict::Feasible { witness: None }
            }
        }
    }
}

/// Constraint system of the extended pack for this profile.
pub fn constraints_for(p: &Profile, a: &Assumptions) -> (Constraints, Vec<String>) {
    let skewless = no_skew(p.n, p.g);
    let mut used = Vec::new();
    let k = p.blocks.len();
    let mut c = Constraints::basic(p, skewless);
    for flag in &a.flags {
        match *flag {
            Flag::FullOrbit(d) => {
                if let Some(i) = p.blocks.iter().position(|b| b.0 == d) {
                    if p.minimal_class(d) {
                        let m = p.blocks[i].1;
                        let lb = p.g * d * m;
                        c.gd_lower[i] = c.gd_lower[i].max(lb);
                        used.push(flag.label());
                    }
                }
            }
            Flag::FreeTranslation => {
                let mut touched = false;
                for i in 0..k {
                    for j in i..k {
                        let di = p.blocks[i].0;
                        let dj = p.blocks[j].0;
                        let m = lcm(p.g, di * dj);
                        let slot = c.dd_index(i, j);
                        if m != c.dd_mod[slot] {
                            c.dd_mod[slot] = lcm(c.dd_mod[slot], m);
                            touched = true;
                        }
                    }
                }
                if touched {
                    used.push(flag.label());
                }
            }
        }
    }
    (c, used)
}

pub fn apply_extended_pack(p: &Profile, a: &Assumptions) -> Verdict {
    let base = apply_base_pack(p, a);
    if base.eliminated() {
        return base;
    }
    let (c, used) = constraints_for(p, a);
    match find_assignment(&c) {
        Some(w) => Verdict::Feasible { witness: Some(w) },
        None => {
            let mut steps = Vec::new();
            if c.existence {
                steps.push(Step::rule("R-gcd", &[("n", p.n as i64), ("g", p.g as i64), ("gcd", 1)], CITE_GCD));
            }
            let mut s = Step::rule(
                "E-search",
                &[("n", p.n as i64), ("c0", p.c0() as i64), ("remaining", (p.n - p.c0()) as i64)],
                &format!("{CITE_E2}; {}{CITE_SEARCH}", if c.existence { format!("{CITE_E3}; ") } else { String::new() }),
            );
            s.values.extend(c.describe());
            s.flags = used.clone();
            for f in &a.flags {
                if used.contains(&f.label()) {
                    s.citation.push_str("; ");
                    s.citation.push_str(f.citation());
                }
            }
            steps.push(s);
            Verdict::Eliminated { steps }
        }
    }
}

fn validate_flags(n: u32, a: &Assumptions) -> Result<(), ProverError> {
    for f in &a.flags {
        if let Flag::FullOrbit(d) = *f {
            // some g must allow a d-block under c0 < n
            let possible = divisors(n).into_iter().any(|g| g < n && lcm(g, d * d) + g < n) && d >= 2;
            if !possible {
                return Err(ProverError::AbsentClass(d, n));
            }
        }
    }
    Ok(())
}

pub fn prove_g(n: u32, g: u32, a: &Assumptions, pack: Pack) -> GResult {
    for ax in &a.axioms {
        if ax.applies(n, g) {
            let step = Step {
                rule: format!("AXIOM:{}", ax.id()),
                kind: StepKind::Axiom,
                values: vec![("n".into(), n as i64), ("g".into(), g as i64)],
                citation: ax.citation().to_string(),
                flags: vec![],
            };
            return GResult { g, eliminated: true, used_axiom: true, steps: vec![step], profiles: vec![] };
        }
    }
    let profiles = profiles_for_g(n, g, a);
    if profiles.is_empty() {
        let mut steps = vec![Step::rule("R-div", &[("n", n as i64), ("g", g as i64)], CITE_NZ)];
        if g >= n {
            steps.push(Step::rule("R-empty", &[("n", n as i64), ("g", g as i64), ("c0", g as i64)], CITE_LR));
        } else {
            let (cost, d) = least_block_cost(n, g);
            steps.push(Step::rule(
                "R-empty",
                &[("n", n as i64), ("g", g as i64), ("d", d as i64), ("least_block", cost as i64), ("pointed_allowed", (!a.nonpointed) as i64)],
                &format!("{CITE_DIV}; {CITE_LR}"),
            ));
        }
        return GResult { g, eliminated: true, used_axiom: false, steps, profiles: vec![] };
    }
    let results: Vec<ProfileResult> = profiles
        .into_par_iter()
        .map(|p| {
            let verdict = match pack {
                Pack::Base => apply_base_pack(&p, a),
                Pack::Extended => apply_extended_pack(&p, a),
            };
            ProfileResult { profile: p, verdict }
        })
        .collect();
    let eliminated = results.iter().all(|r| r.verdict.eliminated());
    GResult { g, eliminated, used_axiom: false, steps: vec![], profiles: results }
}

pub fn prove(n: u32, a: &Assumptions, pack: Pack) -> Result<EliminationReport, ProverError> {
    check_range(n)?;
    validate_flags(n, a)?;
    let results = divisors(n).into_iter().map(|g| prove_g(n, g, a, pack)).collect();
    Ok(EliminationReport { n, pack, assumptions: a.clone(), results })
}

/// Is `x` a prime?
pub fn is_prime(x: u32) -> bool {
    x >= 2 && (2..x).take_while(|d| d * d <= x).all(|d| x % d != 0)
}
