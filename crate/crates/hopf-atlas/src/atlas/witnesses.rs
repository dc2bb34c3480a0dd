//! Frozen isomorphism witnesses and the pairs they cover.
//!
//! The images were produced by `iso::search_iso` (and, for 𝒦, from a hand
//! computation in the dual basis of 𝒜''₄ checked by `iso::verify_iso`), then
//! written to `data/witnesses.json`; `examples/derive_witnesses.rs`
//! regenerates that file byte for byte.

use crate::format::witnesses_from_str;
use crate::iso::IsoWitness;
use crate::linalg::zero_vec;
use crate::scalars::Field;

const FROZEN: &str = include_str!("../../data/witnesses.json");

/// (source, target) family names with a shipped witness.
pub const WITNESS_PAIRS: &[(&str, &str)] = &[
    ("h4", "dual:h4"),
    ("taft3", "dual:taft3"),
    ("taft4", "dual:taft4"),
    ("a2", "dual:a2"),
    ("a22", "dual:a22"),
    ("a4ppp+", "dual:a4p"),
    ("a4ppp-", "dual:a4p"),
    ("a4ppp+", "a4ppp-"),
    ("h4xc:3", "dual:h4xc:3"),
];

pub fn builtin_witnesses() -> Vec<IsoWitness> {
    witnesses_from_str(FROZEN).expect("shipped witness file parses")
}

pub fn find_witness(source: &str, target: &str) -> Option<IsoWitness> {
    builtin_witnesses().into_iter().find(|w| w.source == source && w.target == target)
}

/// 𝒦 → (𝒜''₄)*: with G_i, X_l the dual basis vectors of g^i and g^l x,
/// a ↦ Σ ξ^i G_i and c ↦ √2 Σ ξ^{3l} X_l, where √2 = ζ₈ − ζ₈³.
pub fn k8_change_of_basis() -> IsoWitness {
    let f = Field::new(8);
    let sqrt2 = &f.zeta() - &f.zeta_pow(3);
    let mut a = zero_vec(&f, 8);
    let mut c = zero_vec(&f, 8);
    for i in 0..4i64 {
        a[2 * i as usize] = f.zeta_pow(2 * i);
        c[2 * i as usize + 1] = &sqrt2 * &f.zeta_pow(6 * i);
    }
    IsoWitness {
        source: "k8".into(),
        target: "dual:a4pp".into(),
        field_order: 8,
        generator_images: vec![("a".into(), a), ("c".into(), c)],
    }
}
