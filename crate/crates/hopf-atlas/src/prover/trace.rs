//! JSON traces and their independent replay.

use num_integer::gcd;

use super::*;

pub fn to_json(r: &EliminationReport) -> String {
    serde_json::to_string_pretty(r).expect("report serializes")
}

pub fn from_json(s: &str) -> Result<EliminationReport, ProverError> {
    serde_json::from_str(s).map_err(|e| ProverError::Replay(format!("parse: {e}")))
}

fn need(step: &Step, key: &str) -> Result<i64, ProverError> {
    step.value(key).ok_or_else(|| ProverError::Replay(format!("{}: missing value {key}", step.rule)))
}

fn fail(step: &Step, why: &str) -> ProverError {
    ProverError::Replay(format!("{}: {why}", step.rule))
}

/// Re-derives the arithmetic claim of one step.
pub fn check_step(step: &Step, profile: Option<&Profile>, a: &Assumptions) -> Result<(), ProverError> {
    let n = need(step, "n")? as u32;
    let g = need(step, "g").ok().map(|v| v as u32).or(profile.map(|p| p.g)).unwrap_or(0);
    if let Some(id) = step.rule.strip_prefix("AXIOM:") {
        let ax = Axiom::parse(id)?;
        if step.kind != StepKind::Axiom || !a.axioms.contains(&ax) || !ax.applies(n, g) {
            return Err(fail(step, "axiom not enabled or not applicable"));
        }
        return Ok(());
    }
    if step.kind != StepKind::Rule {
        return Err(fail(step, "rule step marked as axiom"));
    }
    match step.rule.as_str() {
        "R-div" => {
            if g == 0 || n % g != 0 {
                return Err(fail(step, "g does not divide n"));
            }
        }
        "R-empty" => {
            if g >= n {
                return Ok(());
            }
            if need(step, "pointed_allowed")? != 0 || !a.nonpointed {
                return Err(fail(step, "pointed profile would exist"));
            }
            let mut least = u32::MAX;
            let mut d = 2;
            while d * d < n {
                least = least.min(num_integer::lcm(g, d * d));
                d += 1;
            }
            if least != u32::MAX && need(step, "least_block")? != least as i64 {
                return Err(fail(step, "least block cost differs"));
            }
            if least != u32::MAX && least + g < n {
                return Err(fail(step, "a block fits below n"));
            }
        }
        "R-gcd" => {
            if n % g != 0 || gcd(g, n / g) != 1 {
                return Err(fail(step, "gcd(g, n/g) ≠ 1"));
            }
        }
        "R-pointed" => {
            let p = profile.ok_or_else(|| fail(step, "no profile"))?;
            if !p.blocks.is_empty() || gcd(g, n / g) != 1 {
                return Err(fail(step, "profile has blocks or skew possible"));
            }
        }
        "R-bound" => {
            let p = profile.ok_or_else(|| fail(step, "no profile"))?;
            let d1 = p.min_block().ok_or_else(|| fail(step, "no blocks"))?;
            let bound = p.c0() + (2 * d1 + 1) * p.g + d1 * d1;
            if need(step, "c0")? != p.c0() as i64 || need(step, "d1")? != d1 as i64 || need(step, "bound")? != bound as i64 {
                return Err(fail(step, "instantiation differs"));
            }
            if bound <= n || gcd(g, n / g) != 1 {
                return Err(fail(step, "bound does not exceed n"));
            }
        }
        "E-search" => {
            let p = profile.ok_or_else(|| fail(step, "no profile"))?;
            let (c, _) = constraints_for(p, a);
            let expected = c.describe();
            for (k, v) in &expected {
                if step.value(k) != Some(*v) {
                    return Err(fail(step, &format!("constraint {k} differs")));
                }
            }
            if super::find_assignment(&c).is_some() {
                return Err(fail(step, "an assignment exists"));
            }
        }
        other => return Err(ProverError::Replay(format!("unknown rule {other}"))),
    }
    Ok(())
}

/// Checks every step and witness, re-runs the prover and demands a
/// byte-identical trace.
pub fn replay(json: &str) -> Result<EliminationReport, ProverError> {
    let r = from_json(json)?;
    let a = &r.assumptions;
    for gr in &r.results {
        for s in &gr.steps {
            check_step(s, None, a)?;
        }
        for pr in &gr.profiles {
            match &pr.verdict {
                Verdict::Eliminated { steps } => {
                    if steps.is_empty() {
                        return Err(ProverError::Replay(format!("{}: empty elimination", pr.profile)));
                    }
                    for s in steps {
                        check_step(s, Some(&pr.profile), a)?;
                    }
                }
                Verdict::Feasible { witness: Some(w) } => {
                    let (c, _) = constraints_for(&pr.profile, a);
                    if !c.satisfies(w) {
                        return Err(ProverError::Replay(format!("{}: witness violates constraints", pr.profile)));
                    }
                }
                Verdict::Feasible { witness: None } => {}
            }
        }
        let all = !gr.profiles.is_empty() && gr.profiles.iter().all(|p| p.verdict.eliminated());
        if gr.eliminated != (all || !gr.steps.is_empty()) {
            return Err(ProverError::Replay(format!("g={}: verdict inconsistent with its steps", gr.g)));
        }
    }
    let again = prove(r.n, a, r.pack)?;
    if to_json(&again) != json {
        return Err(ProverError::Replay("re-run trace differs".into()));
    }
    Ok(r)
}
