//! Reference data for the doubly hexagonal chain.
//!
//! Type order throughout is `τ0, ..., τ5`; lumped order is
//! `{τ0}, {τ1, τ2}, {τ3}, {τ4, τ5}`.

use crate::exactpoly::{BiPoly, PolyMatrix, PolyVector, UniPoly};
use crate::transfer::EigTemplate;

/// Genus polynomials of `D_1, ..., D_8`.
pub const GENUS_TABLE: [&str; 8] = [
    "2 + 2x",
    "2 + 38x + 24x^2",
    "2 + 102x + 664x^2 + 256x^3",
    "2 + 166x + 3032x^2 + 10368x^3 + 2816x^4",
    "2 + 230x + 7448x^2 + 70912x^3 + 152832x^4 + 30720x^5",
    "2 + 294x + 13912x^2 + 244096x^3 + 1441536x^4 + 2158592x^5 + 335872x^6",
    "2 + 358x + 22424x^2 + 595456x^3 + 6588672x^4 + 26675200x^5 + 29556736x^6 + 3670016x^7",
    "2 + 422x + 32984x^2 + 1190528x^3 + 20378368x^4 + 155713536x^5 + 461266944x^6 \
     + 395051008x^7 + 40108032x^8",
];

pub const TYPE_NAMES: [&str; 6] = ["τ0", "τ1", "τ2", "τ3", "τ4", "τ5"];
pub const LUMPED_NAMES: [&str; 4] = ["τ0", "τ12", "τ3", "τ45"];

pub const Q_ROWS: [[&str; 6]; 6] = [
    ["1", "2", "2", "4", "8", "8"],
    ["6Y", "4Y", "4Y", "8Y", "0", "0"],
    ["2Y", "4Y", "4Y", "0", "0", "0"],
    ["2Y", "4Y", "4Y", "0", "0", "0"],
    ["2Y^2", "0", "0", "0", "0", "0"],
    ["2Y^2+Y", "2Y", "2Y", "4Y", "8Y", "8Y"],
];

pub const V1: [&str; 6] = ["2", "0", "0", "0", "0", "2Y"];

pub const Q_HAT_ROWS: [[&str; 4]; 4] = [
    ["1", "2", "4", "8"],
    ["8Y", "8Y", "8Y", "0"],
    ["2Y", "4Y", "0", "0"],
    ["4Y^2+Y", "2Y", "4Y", "8Y"],
];

pub const V1_HAT: [&str; 4] = ["2", "0", "0", "2Y"];

/// Stratified vector of `D_2` in type order.
pub const D2_STRATIFIED: [&str; 6] = ["2+16Y", "12Y", "4Y", "4Y", "4Y^2", "2Y+20Y^2"];

fn poly(s: &str) -> UniPoly {
    s.parse().expect("static polynomial")
}

fn matrix<const N: usize>(rows: &[[&str; N]; N]) -> PolyMatrix {
    let refs: Vec<&[&str]> = rows.iter().map(|r| &r[..]).collect();
    PolyMatrix::parse_rows(&refs).expect("static matrix")
}

fn vector(entries: &[&str]) -> PolyVector {
    PolyVector::new(entries.iter().map(|e| poly(e)).collect())
}

pub fn genus_table() -> Vec<UniPoly> {
    GENUS_TABLE.iter().map(|s| poly(s)).collect()
}

pub fn q_matrix() -> PolyMatrix {
    matrix(&Q_ROWS)
}

pub fn v1() -> PolyVector {
    vector(&V1)
}

pub fn q_hat() -> PolyMatrix {
    matrix(&Q_HAT_ROWS)
}

pub fn v1_hat() -> PolyVector {
    vector(&V1_HAT)
}

pub fn d2_stratified() -> PolyVector {
    vector(&D2_STRATIFIED)
}

fn l() -> BiPoly {
    BiPoly::lambda()
}

fn y(s: &str) -> BiPoly {
    BiPoly::constant(poly(s))
}

fn pow(b: &BiPoly, k: usize) -> BiPoly {
    (0..k).fold(BiPoly::one(), |acc, _| &acc * b)
}

/// `λ^4 − (16Y+1)λ^3 − 16Yλ^2 + (512Y^3−64Y^2)λ + 1024Y^4`.
pub fn char_poly() -> BiPoly {
    let terms = [
        pow(&l(), 4),
        &y("-16Y-1") * &pow(&l(), 3),
        &y("-16Y") * &pow(&l(), 2),
        &y("512Y^3-64Y^2") * &l(),
        y("1024Y^4"),
    ];
    terms.iter().fold(BiPoly::zero(), |acc, t| &acc + t)
}

/// Eigenvector of the lumped matrix, kept in the factored form it is
/// usually written in.
pub fn eigen_template() -> EigTemplate {
    let sum = |terms: &[BiPoly]| terms.iter().fold(BiPoly::zero(), |acc, t| &acc + t);
    let (l1, l2, l3) = (l(), pow(&l(), 2), pow(&l(), 3));
    // λ^3 − 24λ^2Y + 96λY^2 + 512Y^3 − λ^2 − 8λY
    let u1_inner = sum(&[
        l3.clone(),
        &y("-24Y") * &l2,
        &y("96Y^2") * &l1,
        y("512Y^3"),
        -&l2,
        &y("-8Y") * &l1,
    ]);
    let u2 = sum(&[
        l3.clone(),
        &y("-24Y") * &l2,
        &y("192Y^2") * &l1,
        y("512Y^3"),
        -&l2,
        &y("-8Y") * &l1,
    ]);
    // λ^3 − 12λ^2Y + 128Y^3 − λ^2 − 20λY − 96Y^2
    let u4_inner = sum(&[
        l3,
        &y("-12Y") * &l2,
        y("128Y^3"),
        -&l2,
        &y("-20Y") * &l1,
        y("-96Y^2"),
    ]);
    EigTemplate::new(vec![
        &y("-2") * &u1_inner,
        u2,
        y("384Y^3"),
        &y("2Y") * &u4_inner,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_shapes() {
        for (i, p) in genus_table().iter().enumerate() {
            let n = i + 1;
            assert_eq!(p.degree(), Some(n));
            assert_eq!(p.eval_at_one(), num_bigint::BigInt::from(2u8).pow(4 * n as u32 - 2));
        }
        assert_eq!(q_matrix().rows(), 6);
        assert_eq!(q_hat().rows(), 4);
    }

    #[test]
    fn char_poly_prints_as_written() {
        assert_eq!(
            char_poly().to_string(),
            "λ^4 - (16Y+1)λ^3 - 16Yλ^2 + (512Y^3-64Y^2)λ + 1024Y^4"
        );
    }

    #[test]
    fn template_expands_as_expected() {
        let u = eigen_template();
        let c = u.components();
        assert_eq!(c[0].coeff(3), poly("-2"));
        assert_eq!(c[0].coeff(0), poly("-1024Y^3"));
        assert_eq!(c[1].coeff(1), poly("192Y^2-8Y"));
        assert_eq!(c[3].coeff(0), poly("256Y^4-192Y^3"));
        assert_eq!(c[3].coeff(1), poly("-40Y^2"));
    }
}
