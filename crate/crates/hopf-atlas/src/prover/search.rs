use serde::{Deserialize, Serialize};

use super::Profile;

/// A P-block assignment. `y_dd` runs over pairs i ≤ j in row order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Assignment {
    pub y_gg: u32,
    pub y_gd: Vec<u32>,
    pub y_dd: Vec<u32>,
}

impl Assignment {
    /// y_GG + 2·Σ y_GD + Σ y_DD.
    pub fn total(&self) -> u32 {
        self.y_gg + 2 * self.y_gd.iter().sum::<u32>() + self.y_dd.iter().sum::<u32>()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraints {
    pub remaining: u32,
    pub classes: Vec<u32>,
    pub gg_mod: u32,
    pub gg_lower: u32,
    pub gd_mod: Vec<u32>,
    pub gd_lower: Vec<u32>,
    pub dd_mod: Vec<u32>,
    pub dd_lower: Vec<u32>,
    /// E3 disjunction over classes (no-skew case only).
    pub existence: bool,
    pub g: u32,
}

impl Constraints {
    pub fn basic(p: &Profile, existence: bool) -> Constraints {
        let classes: Vec<u32> = p.blocks.iter().map(|b| b.0).collect();
        let k = classes.len();
        let mut dd_mod = Vec::new();
        for i in 0..k {
            for j in i..k {
                dd_mod.push(classes[i] * classes[j]);
            }
        }
        Constraints {
            remaining: p.n - p.c0(),
            gg_mod: p.g,
            gg_lower: if existence { p.g } else { 0 },
            gd_mod: classes.iter().map(|d| p.g * d).collect(),
            gd_lower: vec![0; k],
            dd_lower: vec![0; dd_mod.len()],
            dd_mod,
            classes,
            existence,
            g: p.g,
        }
    }

    pub fn dd_index(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        let k = self.classes.len();
        i * k - i * (i + 1) / 2 + j
    }

    pub fn satisfies(&self, a: &Assignment) -> bool {
        let k = self.classes.len();
        if a.y_gd.len() != k || a.y_dd.len() != self.dd_mod.len() || a.total() != self.remaining {
            return false;
        }
        let ok = |v: u32, m: u32, lo: u32| v % m == 0 && v >= lo;
        if !ok(a.y_gg, self.gg_mod, self.gg_lower) {
            return false;
        }
        if (0..k).any(|i| !ok(a.y_gd[i], self.gd_mod[i], self.gd_lower[i])) {
            return false;
        }
        if (0..self.dd_mod.len()).any(|s| !ok(a.y_dd[s], self.dd_mod[s], self.dd_lower[s])) {
            return false;
        }
        !self.existence || self.witness_class(a).is_some()
    }

    /// A class certifying the E3 disjunction.
    pub fn witness_class(&self, a: &Assignment) -> Option<usize> {
        (0..self.classes.len()).find(|&i| {
            let d = self.classes[i];
            a.y_gd[i] >= self.g * d && a.y_dd[self.dd_index(i, i)] >= d * d
        })
    }

    /// The numeric data a replayer needs, flattened for a trace step.
    pub fn describe(&self) -> Vec<(String, i64)> {
        let mut v = vec![
            ("gg_mod".to_string(), self.gg_mod as i64),
            ("gg_lower".to_string(), self.gg_lower as i64),
            ("existence".to_string(), self.existence as i64),
        ];
        for (i, d) in self.classes.iter().enumerate() {
            v.push((format!("d{i}"), *d as i64));
            v.push((format!("gd_mod{i}"), self.gd_mod[i] as i64));
            v.push((format!("gd_lower{i}"), self.gd_lower[i] as i64));
        }
        for s in 0..self.dd_mod.len() {
            v.push((format!("dd_mod{s}"), self.dd_mod[s] as i64));
            v.push((format!("dd_lower{s}"), self.dd_lower[s] as i64));
        }
        v
    }
}

fn first_at_least(lower: u32, m: u32) -> u32 {
    lower.div_ceil(m) * m
}

/// First assignment in lexicographic order of (y_GG, y_GD.., y_DD..).
pub fn find_assignment(c: &Constraints) -> Option<Assignment> {
    let mut found = None;
    search_all(c, &mut |a| {
        found = Some(a.clone());
        false
    });
    found
}

/// Calls `visit` on every solution in order until it returns false.
pub fn search_all(c: &Constraints, visit: &mut dyn FnMut(&Assignment) -> bool) {
    let k = c.classes.len();
    let mut mods = vec![c.gg_mod];
    let mut lows = vec![c.gg_lower];
    let mut weights = vec![1];
    for i in 0..k {
        mods.push(c.gd_mod[i]);
        lows.push(c.gd_lower[i]);
        weights.push(2);
    }
    for s in 0..c.dd_mod.len() {
        mods.push(c.dd_mod[s]);
        lows.push(c.dd_lower[s]);
        weights.push(1);
    }
    let mut vals = vec![0u32; mods.len()];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        c: &Constraints,
        idx: usize,
        left: u32,
        mods: &[u32],
        lows: &[u32],
        weights: &[u32],
        vals: &mut Vec<u32>,
        k: usize,
        visit: &mut dyn FnMut(&Assignment) -> bool,
    ) -> bool {
        if idx == mods.len() {
            if left != 0 {
                return true;
            }
            let a = Assignment { y_gg: vals[0], y_gd: vals[1..1 + k].to_vec(), y_dd: vals[1 + k..].to_vec() };
            if c.existence && c.witness_class(&a).is_none() {
                return true;
            }
            return visit(&a);
        }
        // later variables need at least their lower bounds
        let reserve: u32 = (idx + 1..mods.len()).map(|t| weights[t] * first_at_least(lows[t], mods[t])).sum();
        if reserve > left {
            return true;
        }
        let mut v = first_at_least(lows[idx], mods[idx]);
        while weights[idx] * v + reserve <= left {
            vals[idx] = v;
            if !rec(c, idx + 1, left - weights[idx] * v, mods, lows, weights, vals, k, visit) {
                return false;
            }
            v += mods[idx];
        }
        true
    }
    rec(c, 0, c.remaining, &mods, &lows, &weights, &mut vals, k, visit);
}

/// Every solution (small instances only).
pub fn all_assignments(c: &Constraints) -> Vec<Assignment> {
    let mut out = Vec::new();
    search_all(c, &mut |a| {
        out.push(a.clone());
        true
    });
    out
}
