//! Sub-Hopf algebra claims (copies of H₄) and the shipped surjections used
//! for coinvariants.

use crate::hopf::{verify_hopf_morphism, FinHopf};
use crate::invariants::{sub_h4, SubH4};
use crate::linalg::{unit_vec, zero_vec, LinearMap};

use super::{build, build_named, AtlasError, FamilySpec};

#[derive(Clone, Debug)]
pub enum ClaimResult {
    /// Verified injective Hopf map H₄ → A.
    Embedding(LinearMap),
    /// Exhaustive certificate that no H₄ embeds.
    Absent(String),
    Undecided(String),
}

#[derive(Clone, Debug)]
pub struct SubHopfClaim {
    pub claim: String,
    /// What the literature asserts: true when A contains H₄.
    pub expected: bool,
    pub result: ClaimResult,
}

impl SubHopfClaim {
    pub fn confirmed(&self) -> bool {
        matches!(
            (&self.result, self.expected),
            (ClaimResult::Embedding(_), true) | (ClaimResult::Absent(_), false)
        )
    }
}

fn expected_h4(spec: &FamilySpec) -> Option<bool> {
    use FamilySpec::*;
    match spec {
        A2 | A4tripleprime(_) | A22 | Apm10dual(_) | H4xCp(_) => Some(true),
        A4prime | A4doubleprime | Apm10(_) | Apm11(_) => Some(false),
        Tensor(a, _) if **a == Sweedler => Some(true),
        _ => None,
    }
}

/// H₄ basis g^a x^b ↦ γ^a y^b.
pub fn h4_embedding(a: &FinHopf, g: &[crate::scalars::FieldElem], y: &[crate::scalars::FieldElem]) -> Option<LinearMap> {
    let h4 = build(&FamilySpec::Sweedler).ok()?.embed(a.field.order());
    let cols = vec![a.one(), y.to_vec(), g.to_vec(), a.mul(g, y)];
    let map = LinearMap::from_columns(a.dim, cols);
    let ok = map.rank() == 4 && verify_hopf_morphism(&map, &h4, a).map(|r| r.ok()).unwrap_or(false);
    ok.then_some(map)
}

pub fn sub_hopf_claims(spec: &FamilySpec) -> Result<Vec<SubHopfClaim>, AtlasError> {
    let Some(expected) = expected_h4(spec) else { return Ok(vec![]) };
    let a = build(spec)?;
    let claim = format!("{} has {} sub-Hopf algebra isomorphic to H4", spec.name(), if expected { "a" } else { "no" });
    let result = match sub_h4(&a).map_err(|e| AtlasError::Construction(e.to_string()))? {
        SubH4::Embedding { g, x } => match h4_embedding(&a, &g, &x) {
            Some(m) => ClaimResult::Embedding(m),
            None => ClaimResult::Undecided("candidate embedding failed verification".into()),
        },
        SubH4::Absent { checks } => {
            let parts: Vec<String> = checks
                .iter()
                .map(|(k, d, sq)| {
                    if *sq {
                        format!("grouplike #{k}: dim L = {d}, y² ≠ 0")
                    } else {
                        format!("grouplike #{k}: dim L = {d}")
                    }
                })
                .collect();
            ClaimResult::Absent(if parts.is_empty() {
                "no grouplike of order 2".into()
            } else {
                format!("L = {{y ∈ P(1,γ) : γy + yγ = 0}} admits no y ≠ 0 with y² = 0 — {}", parts.join("; "))
            })
        }
        SubH4::Undecided(m) => ClaimResult::Undecided(m),
    };
    Ok(vec![SubHopfClaim { claim, expected, result }])
}

pub struct Surjection {
    pub name: String,
    pub source: FinHopf,
    pub target: FinHopf,
    pub map: LinearMap,
}

/// H₄⊗𝕜C₃ → H₄, H₄⊗𝕜C₃ → 𝕜C₃ and H₄ → 𝕜C₂ (x ↦ 0).
pub fn shipped_surjections() -> Vec<Surjection> {
    let h4 = build_named("h4").expect("h4 builds");
    let c3 = build_named("kC3").expect("kC3 builds");
    let c2 = build_named("kC2").expect("kC2 builds");
    let t = build_named("tensor(h4,kC3)").expect("tensor builds");
    let f = t.field.clone();
    let h4e = h4.embed(f.order());
    let c3e = c3.embed(f.order());
    let n2 = c3.dim;
    let to_h4 = LinearMap::from_columns(4, (0..t.dim).map(|p| unit_vec(&f, 4, p / n2)).collect());
    let to_c3 = LinearMap::from_columns(
        n2,
        (0..t.dim)
            .map(|p| {
                let e = h4e.counit[p / n2].clone();
                let mut v = zero_vec(&f, n2);
                v[p % n2] = e;
                v
            })
            .collect(),
    );
    let g = c2.field.clone();
    let kill_x = LinearMap::from_columns(
        2,
        (0..4).map(|i| if i % 2 == 0 { unit_vec(&g, 2, i / 2) } else { zero_vec(&g, 2) }).collect(),
    );
    let c2e = c2.embed(h4.field.order());
    vec![
        Surjection { name: "h4⊗kC3 → h4".into(), source: t.clone(), target: h4e, map: to_h4 },
        Surjection { name: "h4⊗kC3 → kC3".into(), source: t, target: c3e, map: to_c3 },
        Surjection { name: "h4 → kC2".into(), source: h4, target: c2e, map: kill_x },
    ]
}
