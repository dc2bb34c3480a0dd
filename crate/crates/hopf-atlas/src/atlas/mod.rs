//! Constructors for the named families.
//!
//! Basis conventions (frozen; serialization depends on them):
//! * group algebras of abelian groups C_{o_1}×…: exponent tuples, lexicographic;
//!   dihedral D_n: r^a s^b at index 2a + b;
//! * pointed families: g^a x^b (and g^a h^b x^c, g^a x^b y^c), lexicographic in
//!   the exponents, group exponents first;
//! * 𝒦: a^i c^j at index 2i + j, with b = a²c and d = a³.

pub mod present;
pub mod subhopf;
pub mod witnesses;

use std::fmt;

use thiserror::Error;

use crate::hopf::{hopf_dual, tensor_hopf, FinHopf, SparseVec};
use crate::linalg::{unit_vec, zero_vec, Vector};
use crate::scalars::{Field, FieldElem};

use present::{assemble, tensor_of, Assembly, SkewGroupAlgebra};

#[derive(Debug, Error)]
pub enum AtlasError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("{0} is a coalgebra only, not a Hopf algebra")]
    NotHopf(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupDesc {
    /// Direct product of cyclic groups of the given orders.
    Abelian(Vec<u32>),
    /// Dihedral group of order 2n.
    Dihedral(u32),
}

impl GroupDesc {
    pub fn order(&self) -> usize {
        match self {
            GroupDesc::Abelian(v) => v.iter().map(|&o| o as usize).product(),
            GroupDesc::Dihedral(n) => 2 * *n as usize,
        }
    }
}

impl fmt::Display for GroupDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDesc::Abelian(v) => {
                let parts: Vec<String> = v.iter().map(|o| format!("C{o}")).collect();
                f.write_str(&parts.join("x"))
            }
            GroupDesc::Dihedral(n) => write!(f, "D{n}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    GroupAlgebra(GroupDesc),
    DualGroupAlgebra(GroupDesc),
    Taft(u32),
    Sweedler,
    A2,
    A4prime,
    A4doubleprime,
    /// `true` selects ξ = ζ₄, `false` selects ξ = ζ₄³.
    A4tripleprime(bool),
    A22,
    Kdim8,
    Apm10(u32),
    Apm10dual(u32),
    Apm11(u32),
    H4xCp(u32),
    MatrixCoalgebraOnly(u32),
    Dual(Box<FamilySpec>),
    Tensor(Box<FamilySpec>, Box<FamilySpec>),
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn odd_prime(p: u32) -> Result<u32, AtlasError> {
    if p > 2 && is_prime(p) {
        Ok(p)
    } else {
        Err(AtlasError::BadParameter(format!("{p} is not an odd prime")))
    }
}

fn parse_group(s: &str) -> Option<GroupDesc> {
    if let Some(n) = s.strip_prefix('D') {
        let n: u32 = n.parse().ok()?;
        return (n >= 2).then_some(GroupDesc::Dihedral(n));
    }
    let mut orders = Vec::new();
    for part in s.split('x') {
        let o: u32 = part.strip_prefix('C')?.parse().ok()?;
        if o == 0 {
            return None;
        }
        orders.push(o);
    }
    Some(GroupDesc::Abelian(orders))
}

impl FamilySpec {
    /// Parses the CLI-facing family names.
    pub fn parse(s: &str) -> Result<FamilySpec, AtlasError> {
        let unknown = || AtlasError::UnknownFamily(s.to_string());
        if let Some(inner) = s.strip_prefix("dual:") {
            return Ok(FamilySpec::Dual(Box::new(FamilySpec::parse(inner)?)));
        }
        if let Some(inner) = s.strip_prefix("tensor(").and_then(|r| r.strip_suffix(')')) {
            let (a, b) = split_top_comma(inner).ok_or_else(unknown)?;
            return Ok(FamilySpec::Tensor(Box::new(FamilySpec::parse(a)?), Box::new(FamilySpec::parse(b)?)));
        }
        let param = |prefix: &str| -> Option<Result<u32, AtlasError>> {
            s.strip_prefix(prefix).map(|p| {
                p.parse::<u32>().map_err(|_| AtlasError::BadParameter(format!("bad parameter in {s:?}")))
            })
        };
        if let Some(p) = param("am10d:") {
            return Ok(FamilySpec::Apm10dual(odd_prime(p?)?));
        }
        if let Some(p) = param("am10:") {
            return Ok(FamilySpec::Apm10(odd_prime(p?)?));
        }
        if let Some(p) = param("am11:") {
            return Ok(FamilySpec::Apm11(odd_prime(p?)?));
        }
        if let Some(p) = param("h4xc:") {
            return Ok(FamilySpec::H4xCp(odd_prime(p?)?));
        }
        if let Some(d) = param("mc:") {
            let d = d?;
            if d == 0 {
                return Err(AtlasError::BadParameter("matrix coalgebra size must be positive".into()));
            }
            return Ok(FamilySpec::MatrixCoalgebraOnly(d));
        }
        match s {
            "h4" => return Ok(FamilySpec::Sweedler),
            "a2" => return Ok(FamilySpec::A2),
            "a4p" => return Ok(FamilySpec::A4prime),
            "a4pp" => return Ok(FamilySpec::A4doubleprime),
            "a4ppp+" => return Ok(FamilySpec::A4tripleprime(true)),
            "a4ppp-" => return Ok(FamilySpec::A4tripleprime(false)),
            "a22" => return Ok(FamilySpec::A22),
            "k8" => return Ok(FamilySpec::Kdim8),
            _ => {}
        }
        if let Some(n) = s.strip_prefix("taft") {
            let n: u32 = n.parse().map_err(|_| AtlasError::BadParameter(format!("bad Taft order in {s:?}")))?;
            if n < 2 {
                return Err(AtlasError::BadParameter("Taft algebras need N ≥ 2".into()));
            }
            return Ok(FamilySpec::Taft(n));
        }
        if let Some(rest) = s.strip_prefix('k') {
            let (g, dual) = match rest.strip_suffix("dual") {
                Some(g) => (g, true),
                None => (rest, false),
            };
            if g.starts_with('C') || g.starts_with('D') {
                let gd = parse_group(g)
                    .ok_or_else(|| AtlasError::BadParameter(format!("bad group descriptor in {s:?}")))?;
                return Ok(if dual { FamilySpec::DualGroupAlgebra(gd) } else { FamilySpec::GroupAlgebra(gd) });
            }
        }
        Err(unknown())
    }

    pub fn name(&self) -> String {
        match self {
            FamilySpec::GroupAlgebra(g) => format!("k{g}"),
            FamilySpec::DualGroupAlgebra(g) => format!("k{g}dual"),
            FamilySpec::Taft(n) => format!("taft{n}"),
            FamilySpec::Sweedler => "h4".into(),
            FamilySpec::A2 => "a2".into(),
            FamilySpec::A4prime => "a4p".into(),
            FamilySpec::A4doubleprime => "a4pp".into(),
            FamilySpec::A4tripleprime(true) => "a4ppp+".into(),
            FamilySpec::A4tripleprime(false) => "a4ppp-".into(),
            FamilySpec::A22 => "a22".into(),
            FamilySpec::Kdim8 => "k8".into(),
            FamilySpec::Apm10(p) => format!("am10:{p}"),
            FamilySpec::Apm10dual(p) => format!("am10d:{p}"),
            FamilySpec::Apm11(p) => format!("am11:{p}"),
            FamilySpec::H4xCp(p) => format!("h4xc:{p}"),
            FamilySpec::MatrixCoalgebraOnly(d) => format!("mc:{d}"),
            FamilySpec::Dual(inner) => format!("dual:{}", inner.name()),
            FamilySpec::Tensor(a, b) => format!("tensor({},{})", a.name(), b.name()),
        }
    }

    /// True when the family is known to be semisimple (used for prover
    /// assumption sets; it is re-derived by the invariants module anyway).
    pub fn expected_dim(&self) -> Option<usize> {
        Some(match self {
            FamilySpec::GroupAlgebra(g) | FamilySpec::DualGroupAlgebra(g) => g.order(),
            FamilySpec::Taft(n) => (*n as usize).pow(2),
            FamilySpec::Sweedler => 4,
            FamilySpec::A2
            | FamilySpec::A4prime
            | FamilySpec::A4doubleprime
            | FamilySpec::A4tripleprime(_)
            | FamilySpec::A22
            | FamilySpec::Kdim8 => 8,
            FamilySpec::Apm10(p) | FamilySpec::Apm10dual(p) | FamilySpec::Apm11(p) | FamilySpec::H4xCp(p) => {
                4 * *p as usize
            }
            FamilySpec::MatrixCoalgebraOnly(d) => (*d as usize).pow(2),
            FamilySpec::Dual(inner) => inner.expected_dim()?,
            FamilySpec::Tensor(a, b) => a.expected_dim()? * b.expected_dim()?,
        })
    }
}

fn split_top_comma(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Builds and verifies the named family.
pub fn build(spec: &FamilySpec) -> Result<FinHopf, AtlasError> {
    let mut h = match spec {
        FamilySpec::GroupAlgebra(GroupDesc::Abelian(orders)) => abelian_group_algebra(orders)?,
        FamilySpec::GroupAlgebra(GroupDesc::Dihedral(n)) => dihedral_group_algebra(*n)?,
        FamilySpec::DualGroupAlgebra(g) => hopf_dual(&build(&FamilySpec::GroupAlgebra(g.clone()))?),
        FamilySpec::Taft(n) => taft(*n)?,
        FamilySpec::Sweedler => taft(2)?,
        FamilySpec::A2 => a2()?,
        FamilySpec::A4prime => a4(false)?,
        FamilySpec::A4doubleprime => a4(true)?,
        FamilySpec::A4tripleprime(plus) => a4_triple(*plus)?,
        FamilySpec::A22 => a22()?,
        FamilySpec::Kdim8 => kdim8()?,
        FamilySpec::Apm10(p) => dim4p(odd_prime(*p)?, Dim4p::Apm10)?,
        FamilySpec::Apm10dual(p) => dim4p(odd_prime(*p)?, Dim4p::Apm10dual)?,
        FamilySpec::Apm11(p) => dim4p(odd_prime(*p)?, Dim4p::Apm11)?,
        FamilySpec::H4xCp(p) => dim4p(odd_prime(*p)?, Dim4p::H4xCp)?,
        FamilySpec::MatrixCoalgebraOnly(_) => return Err(AtlasError::NotHopf(spec.name())),
        FamilySpec::Dual(inner) => hopf_dual(&build(inner)?),
        FamilySpec::Tensor(a, b) => tensor_hopf(&build(a)?, &build(b)?),
    };
    h.name = spec.name();
    Ok(h)
}

pub fn build_named(name: &str) -> Result<FinHopf, AtlasError> {
    build(&FamilySpec::parse(name)?)
}

/// Every named family exercised by the acceptance battery.
pub fn atlas_families() -> Vec<FamilySpec> {
    use FamilySpec::*;
    let mut v = Vec::new();
    for g in small_groups() {
        v.push(GroupAlgebra(g.clone()));
        v.push(DualGroupAlgebra(g));
    }
    for n in 2..=4 {
        v.push(Taft(n));
    }
    v.extend([A2, A4prime, A4doubleprime, A4tripleprime(true), A4tripleprime(false), A22, Kdim8]);
    for p in [3, 5] {
        v.extend([Apm10(p), Apm10dual(p), Apm11(p), H4xCp(p)]);
    }
    v
}

/// Groups of order ≤ 12 used in the axiom battery.
pub fn small_groups() -> Vec<GroupDesc> {
    use GroupDesc::*;
    let mut v: Vec<GroupDesc> = (1..=12).map(|n| Abelian(vec![n])).collect();
    v.extend([
        Abelian(vec![2, 2]),
        Abelian(vec![2, 4]),
        Abelian(vec![2, 2, 2]),
        Abelian(vec![3, 3]),
        Abelian(vec![2, 6]),
        Dihedral(3),
        Dihedral(4),
        Dihedral(5),
        Dihedral(6),
    ]);
    v
}

fn lcm_all(v: &[u32]) -> u32 {
    v.iter().fold(1u32, |a, &b| num_integer::lcm(a, b))
}

fn grouplike_gen_data(sk: &SkewGroupAlgebra, i: usize) -> (Vector, FieldElem, Vector) {
    let f = &sk.field;
    let n = sk.dim();
    let r = sk.orders.len();
    let s = sk.nil.len();
    let mut g = vec![0u32; r];
    g[i] = 1;
    let gv = unit_vec(f, n, sk.index(&g, &vec![0; s]));
    let mut ginv = vec![0u32; r];
    ginv[i] = sk.orders[i] - 1;
    let d = tensor_of(f, n, &[(f.one(), gv.clone(), gv.clone())]);
    (d, f.one(), unit_vec(f, n, sk.index(&ginv, &vec![0; s])))
}

/// Δx_j = x_j⊗1 + γ⊗x_j, S(x_j) = −γ⁻¹x_j.
fn skew_gen_data(sk: &SkewGroupAlgebra, j: usize, gamma: &[u32]) -> (Vector, FieldElem, Vector) {
    let f = &sk.field;
    let n = sk.dim();
    let r = sk.orders.len();
    let s = sk.nil.len();
    let mut e = vec![0usize; s];
    e[j] = 1;
    let x = unit_vec(f, n, sk.index(&vec![0; r], &e));
    let one = unit_vec(f, n, 0);
    let gv = unit_vec(f, n, sk.index(gamma, &vec![0; s]));
    let d = tensor_of(f, n, &[(f.one(), x.clone(), one), (f.one(), gv, x)]);
    let ginv: Vec<u32> = gamma.iter().zip(&sk.orders).map(|(g, o)| (o - g % o) % o).collect();
    let mut sv = zero_vec(f, n);
    sv[sk.index(&ginv, &e)] = f.from_int(-1);
    (d, f.zero(), sv)
}

/// Assembles a pointed family whose skew generators are (1, γ_j)-primitive.
fn pointed_family(
    name: &str,
    sk: SkewGroupAlgebra,
    names: &[&str],
    gammas: &[Vec<u32>],
    reps: Vec<Vec<Vec<Vec<FieldElem>>>>,
) -> Result<FinHopf, AtlasError> {
    let n = sk.dim();
    let (generators, words) = sk.generators(names);
    let mut gen_comult = Vec::new();
    let mut gen_counit = Vec::new();
    let mut gen_antipode = Vec::new();
    for i in 0..sk.orders.len() {
        let (d, e, s) = grouplike_gen_data(&sk, i);
        gen_comult.push(d);
        gen_counit.push(e);
        gen_antipode.push(s);
    }
    for (j, gamma) in gammas.iter().enumerate() {
        let (d, e, s) = skew_gen_data(&sk, j, gamma);
        gen_comult.push(d);
        gen_counit.push(e);
        gen_antipode.push(s);
    }
    let s = sk.nil.len();
    let grouplikes = (0..sk.group_size())
        .map(|gi| unit_vec(&sk.field, n, sk.index(&sk.group_elem(gi), &vec![0; s])))
        .collect();
    assemble(Assembly {
        name: name.to_string(),
        field: sk.field.clone(),
        dim: n,
        mult: sk.mult_table(),
        generators,
        words,
        gen_comult,
        gen_counit,
        gen_antipode,
        grouplikes,
        matrix_bases: vec![],
        reps,
    })
}

fn abelian_group_algebra(orders: &[u32]) -> Result<FinHopf, AtlasError> {
    let f = Field::new(lcm_all(orders).max(1));
    let sk = SkewGroupAlgebra {
        field: f.clone(),
        orders: orders.to_vec(),
        chi: vec![],
        nil: vec![],
        power: vec![],
        braid: vec![],
    };
    let names: Vec<String> = (0..orders.len()).map(|i| format!("g{}", i + 1)).collect();
    let names: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let name = format!("k{}", GroupDesc::Abelian(orders.to_vec()));
    pointed_family(&name, sk, &names, &[], vec![])
}

fn dihedral_group_algebra(m: u32) -> Result<FinHopf, AtlasError> {
    if m < 2 {
        return Err(AtlasError::BadParameter("dihedral groups need n ≥ 2".into()));
    }
    let f = Field::new(m);
    let n = 2 * m as usize;
    let idx = |a: u32, b: u32| (2 * (a % m) + b % 2) as usize;
    let mut mult: Vec<SparseVec> = Vec::with_capacity(n * n);
    for i in 0..n as u32 {
        let (a, b) = (i / 2, i % 2);
        for j in 0..n as u32 {
            let (c, d) = (j / 2, j % 2);
            // r^a s^b r^c s^d = r^{a ± c} s^{b+d}
            let a2 = if b == 0 { a + c } else { a + m - c };
            mult.push(vec![(idx(a2, b + d), f.one())]);
        }
    }
    let one = unit_vec(&f, n, 0);
    let r = unit_vec(&f, n, idx(1, 0));
    let s = unit_vec(&f, n, idx(0, 1));
    let generators = vec![("r".to_string(), r.clone()), ("s".to_string(), s.clone())];
    let words: Vec<Vec<usize>> = (0..n as u32)
        .map(|i| {
            let (a, b) = (i / 2, i % 2);
            let mut w = vec![0usize; a as usize];
            w.extend(std::iter::repeat(1).take(b as usize));
            w
        })
        .collect();
    let gen_comult =
        vec![tensor_of(&f, n, &[(f.one(), r.clone(), r.clone())]), tensor_of(&f, n, &[(f.one(), s.clone(), s.clone())])];
    let gen_antipode = vec![unit_vec(&f, n, idx(m - 1, 0)), s.clone()];
    let grouplikes = (0..n).map(|i| unit_vec(&f, n, i)).collect();
    // two-dimensional irreducibles r ↦ diag(ζ^k, ζ^{-k}), s ↦ swap
    let mut reps = Vec::new();
    for k in 1..=((m - 1) / 2) as i64 {
        let z = f.zeta_pow(k);
        let zi = f.zeta_pow(-k);
        let rm = vec![vec![z, f.zero()], vec![f.zero(), zi]];
        let sm = vec![vec![f.zero(), f.one()], vec![f.one(), f.zero()]];
        reps.push(vec![rm, sm]);
    }
    let _ = one;
    assemble(Assembly {
        name: format!("kD{m}"),
        field: f.clone(),
        dim: n,
        mult,
        generators,
        words,
        gen_comult,
        gen_counit: vec![f.one(), f.one()],
        gen_antipode,
        grouplikes,
        matrix_bases: vec![],
        reps,
    })
}

fn taft(nn: u32) -> Result<FinHopf, AtlasError> {
    if nn < 2 {
        return Err(AtlasError::BadParameter("Taft algebras need N ≥ 2".into()));
    }
    let f = Field::new(nn);
    let q = f.zeta();
    let sk = SkewGroupAlgebra {
        field: f.clone(),
        orders: vec![nn],
        chi: vec![vec![q]],
        nil: vec![nn as usize],
        power: vec![vec![]],
        braid: vec![vec![]],
    };
    let name = if nn == 2 { "h4".to_string() } else { format!("taft{nn}") };
    pointed_family(&name, sk, &["g", "x"], &[vec![1]], vec![])
}

fn a2() -> Result<FinHopf, AtlasError> {
    let f = Field::new(4);
    let m1 = f.from_int(-1);
    let sk = SkewGroupAlgebra {
        field: f.clone(),
        orders: vec![2],
        chi: vec![vec![m1.clone()], vec![m1.clone()]],
        nil: vec![2, 2],
        power: vec![vec![], vec![]],
        braid: vec![vec![], vec![m1]],
    };
    pointed_family("a2", sk, &["g", "x", "y"], &[vec![1], vec![1]], vec![])
}

/// 𝒜'₄ (x² = 0) or 𝒜''₄ (x² = g² − 1).
fn a4(double: bool) -> Result<FinHopf, AtlasError> {
    let f = Field::new(4);
    let power = if double { vec![(vec![2], f.one()), (vec![0], f.from_int(-1))] } else { vec![] };
    let sk = SkewGroupAlgebra {
        field: f.clone(),
        orders: vec![4],
        chi: vec![vec![f.from_int(-1)]],
        nil: vec![2],
        power: vec![power],
        braid: vec![vec![]],
    };
    let mut reps = Vec::new();
    if double {
        // g ↦ diag(λ, −λ), x ↦ [[0, 1], [λ² − 1, 0]] with λ = ζ₄
        let l = f.zeta();
        let gm = vec![vec![l.clone(), f.zero()], vec![f.zero(), -&l]];
        let xm = vec![vec![f.zero(), f.one()], vec![&(&l * &l) - &f.one(), f.zero()]];
        reps.push(vec![gm, xm]);
    }
    pointed_family(if double { "a4pp" } else { "a4p" }, sk, &["g", "x"], &[vec![1]], reps)
}

fn a4_triple(plus: bool) -> Result<FinHopf, AtlasError> {
    let f = Field::new(4);
    let xi = if plus { f.zeta() } else { f.zeta_pow(3) };
    let sk = SkewGroupAlgebra {
        field: f.clone(),
        orders: vec![4],
        chi: vec![vec![xi]],
        nil: vec![2],
        power: vec![vec![]],
        braid: vec![vec![]],
    };
    pointed_family(if plus { "a4ppp+" } else { "a4ppp-" }, sk, &["g", "x"], &[vec![2]], vec![])
}

fn a22() -> Result<FinHopf, AtlasError> {
    let f = Field::new(4);
    let m1 = f.from_int(-1);
    let sk = SkewGroupAlgebra {
        field: f.clone(),
        orders: vec![2, 2],
        chi: vec![vec![m1.clone(), m1]],
        nil: vec![2],
        power: vec![vec![]],
        braid: vec![vec![]],
    };
    pointed_family("a22", sk, &["g", "h", "x"], &[vec![1, 0]], vec![])
}

/// 𝒦 from its presentation: a⁴ = 1, c² = 0, ac = ξca with b = a²c, d = a³,
/// and the multiplicative matrix (a b; c d).
fn kdim8() -> Result<FinHopf, AtlasError> {
    let f = Field::new(4);
    let xi = f.zeta();
    let sk = SkewGroupAlgebra {
        field: f.clone(),
        orders: vec![4],
        chi: vec![vec![xi.clone()]],
        nil: vec![2],
        power: vec![vec![]],
        braid: vec![vec![]],
    };
    let n = sk.dim();
    let e = |i: u32, j: usize| unit_vec(&f, n, sk.index(&[i], &[j]));
    let (a, b, c, d) = (e(1, 0), e(2, 1), e(0, 1), e(3, 0));
    let (generators, words) = sk.generators(&["a", "c"]);
    let one = f.one();
    let gen_comult = vec![
        tensor_of(&f, n, &[(one.clone(), a.clone(), a.clone()), (one.clone(), b.clone(), c.clone())]),
        tensor_of(&f, n, &[(one.clone(), c.clone(), a.clone()), (one.clone(), d.clone(), c.clone())]),
    ];
    let gen_counit = vec![f.one(), f.zero()];
    let gen_antipode = vec![d.clone(), c.iter().map(|x| &(-&xi) * x).collect()];
    let grouplikes = vec![e(0, 0), e(2, 0)];
    let matrix_bases = vec![vec![vec![a, b], vec![c, d]]];
    assemble(Assembly {
        name: "k8".into(),
        field: f.clone(),
        dim: n,
        mult: sk.mult_table(),
        generators,
        words,
        gen_comult,
        gen_counit,
        gen_antipode,
        grouplikes,
        matrix_bases,
        reps: vec![],
    })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Dim4p {
    Apm10,
    Apm10dual,
    Apm11,
    H4xCp,
}

fn dim4p(p: u32, which: Dim4p) -> Result<FinHopf, AtlasError> {
    let order = 2 * p;
    let f = match which {
        Dim4p::Apm10dual => Field::new(num_integer::lcm(4, p)),
        _ => Field::new(order),
    };
    let m1 = f.from_int(-1);
    let (chi, power, gamma, name) = match which {
        Dim4p::Apm10 => (m1.clone(), vec![], 1, format!("am10:{p}")),
        // gx + ξxg = 0 with ξ a primitive p-th root: gx = −ξ xg
        Dim4p::Apm10dual => {
            let xi = f.zeta_pow((f.order() / p) as i64);
            (-&xi, vec![], p, format!("am10d:{p}"))
        }
        Dim4p::Apm11 => (m1.clone(), vec![(vec![2], f.one()), (vec![0], m1.clone())], 1, format!("am11:{p}")),
        Dim4p::H4xCp => (m1.clone(), vec![], p, format!("h4xc:{p}")),
    };
    let sk = SkewGroupAlgebra {
        field: f.clone(),
        orders: vec![order],
        chi: vec![vec![chi]],
        nil: vec![2],
        power: vec![power],
        braid: vec![vec![]],
    };
    let mut reps = Vec::new();
    if which == Dim4p::Apm11 {
        // g ↦ diag(λ, −λ), x ↦ [[0,1],[λ²−1,0]], λ = ζ_{2p}^k, 1 ≤ k ≤ p−1
        let step = (f.order() / order) as i64;
        for k in 1..p as i64 {
            let l = f.zeta_pow(k * step);
            let gm = vec![vec![l.clone(), f.zero()], vec![f.zero(), -&l]];
            let xm = vec![vec![f.zero(), f.one()], vec![&(&l * &l) - &f.one(), f.zero()]];
            reps.push(vec![gm, xm]);
        }
    }
    pointed_family(&name, sk, &["g", "x"], &[vec![gamma]], reps)
}

/// The coalgebra M*(d): basis e_ij with Δe_ij = Σ_l e_il⊗e_lj, ε(e_ij) = δ_ij.
pub struct MatrixCoalgebra {
    pub d: usize,
    pub comult: Vec<SparseVec>,
    pub counit: Vector,
}

pub fn matrix_coalgebra(d: usize, field: &Field) -> MatrixCoalgebra {
    let n = d * d;
    let idx = |i: usize, j: usize| i * d + j;
    let mut comult = Vec::with_capacity(n);
    let mut counit = Vec::with_capacity(n);
    for i in 0..d {
        for j in 0..d {
            comult.push((0..d).map(|l| (idx(i, l) * n + idx(l, j), field.one())).collect());
            counit.push(if i == j { field.one() } else { field.zero() });
        }
    }
    MatrixCoalgebra { d, comult, counit }
}

impl MatrixCoalgebra {
    /// Coassociativity and the counit laws, exhaustively.
    pub fn verify(&self) -> bool {
        let n = self.d * self.d;
        (0..n).all(|i| {
            let mut l = std::collections::BTreeMap::new();
            let mut r = std::collections::BTreeMap::new();
            for (p, c) in &self.comult[i] {
                let (j, k) = (p / n, p % n);
                for (q, d) in &self.comult[j] {
                    *l.entry(q * n + k).or_insert_with(|| c.field().zero()) += &(c * d);
                }
                for (q, d) in &self.comult[k] {
                    *r.entry(j * n * n + q).or_insert_with(|| c.field().zero()) += &(c * d);
                }
            }
            let counit_ok = {
                let mut lc = zero_vec(self.counit[0].field(), n);
                let mut rc = zero_vec(self.counit[0].field(), n);
                for (p, c) in &self.comult[i] {
                    lc[p % n].add_mul(&self.counit[p / n], c);
                    rc[p / n].add_mul(c, &self.counit[p % n]);
                }
                let want = unit_vec(self.counit[0].field(), n, i);
                lc == want && rc == want
            };
            l == r && counit_ok
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_roundtrip() {
        for fam in atlas_families() {
            assert_eq!(FamilySpec::parse(&fam.name()).unwrap(), fam);
        }
        assert!(matches!(FamilySpec::parse("bogus"), Err(AtlasError::UnknownFamily(_))));
        assert!(matches!(FamilySpec::parse("am10:4"), Err(AtlasError::BadParameter(_))));
        assert!(matches!(FamilySpec::parse("taft1"), Err(AtlasError::BadParameter(_))));
    }

    #[test]
    fn matrix_coalgebra_is_a_coalgebra() {
        assert!(matrix_coalgebra(3, &Field::new(1)).verify());
        assert!(matches!(build(&FamilySpec::MatrixCoalgebraOnly(2)), Err(AtlasError::NotHopf(_))));
    }
}

#[cfg(test)]
mod build_tests {
    use super::*;

    #[test]
    fn every_family_builds() {
        for fam in atlas_families() {
            let h = build(&fam).unwrap_or_else(|e| panic!("{fam}: {e}"));
            assert_eq!(Some(h.dim), fam.expected_dim(), "{fam}");
        }
    }
}
