//! Point maps written once over any coordinate ring, so the same formulas
//! serve exact evaluation and the symbolic equation check.

use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::GaussianRational;

pub trait CoordRing:
    Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn imag_unit() -> Self;
}

impl CoordRing for GaussianRational {
    fn imag_unit() -> Self {
        GaussianRational::i()
    }
}

/// Nonzero 2-torsion points: `t1 ↔ [λ₀:λ₁:0]`, `t2 ↔ [1:1:0]`, `t3 ↔ [0:1:0]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Translation {
    T1,
    T2,
    T3,
}

impl Translation {
    pub const ALL: [Translation; 3] = [Translation::T1, Translation::T2, Translation::T3];

    pub fn as_str(self) -> &'static str {
        match self {
            Translation::T1 => "t1",
            Translation::T2 => "t2",
            Translation::T3 => "t3",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Translation::ALL.into_iter().find(|t| t.as_str() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LambdaGenerator {
    /// `λ ↦ 1/λ`
    Swap,
    /// `λ ↦ 1 − λ`
    Complement,
}

impl LambdaGenerator {
    pub fn as_str(self) -> &'static str {
        match self {
            LambdaGenerator::Swap => "swap",
            LambdaGenerator::Complement => "complement",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "swap" => Some(LambdaGenerator::Swap),
            "complement" => Some(LambdaGenerator::Complement),
            _ => None,
        }
    }
}

pub type Pair<R> = [R; 2];
pub type Coords<R> = [R; 3];

/// `Z² − XY(X−Y)(λ₁X − λ₀Y)`
pub fn curve_equation<R: CoordRing>(l: &Pair<R>, p: &Coords<R>) -> R {
    let [x, y, z] = p.clone();
    let [l0, l1] = l.clone();
    z.clone() * z - x.clone() * y.clone() * (x.clone() - y.clone()) * (l1 * x - l0 * y)
}

/// The displayed maps, which send the origin to the matching 2-torsion point.
/// Only the `t2` map is a translation; `t1` and `t3` are `p ↦ T − p`.
pub fn printed_map<R: CoordRing>(which: Translation, l: &Pair<R>, p: &Coords<R>) -> Coords<R> {
    let [x, y, z] = p.clone();
    let [l0, l1] = l.clone();
    match which {
        Translation::T1 => [
            l0.clone() * (x.clone() - y.clone()),
            l1.clone() * x - l0.clone() * y,
            l0.clone() * (l0 - l1) * z,
        ],
        Translation::T2 => [
            -(l1.clone() * x.clone()) + l0.clone() * y.clone(),
            l1.clone() * (y - x),
            l1.clone() * (l0 - l1) * z,
        ],
        Translation::T3 => [l0.clone() * y, l1.clone() * x, l0 * l1 * z],
    }
}

/// `p ↦ p + T`.
pub fn translation_map<R: CoordRing>(which: Translation, l: &Pair<R>, p: &Coords<R>) -> Coords<R> {
    let [x, y, z] = printed_map(which, l, p);
    match which {
        Translation::T2 => [x, y, z],
        Translation::T1 | Translation::T3 => [x, y, -z],
    }
}

/// Carries `E_λ` isomorphically onto the curve of the new pair.
pub fn lambda_map<R: CoordRing>(g: LambdaGenerator, l: &Pair<R>, p: &Coords<R>) -> (Pair<R>, Coords<R>) {
    let [x, y, z] = p.clone();
    let [l0, l1] = l.clone();
    match g {
        LambdaGenerator::Swap => ([l1, l0], [y, x, z]),
        LambdaGenerator::Complement => (
            [l1.clone() - l0, l1],
            [y.clone() - x, y, R::imag_unit() * z],
        ),
    }
}

pub fn involution_map<R: CoordRing>(p: &Coords<R>) -> Coords<R> {
    let [x, y, z] = p.clone();
    [x, y, -z]
}
