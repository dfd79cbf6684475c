//! Multivariate polynomials in `X, Y, Z, λ₀, λ₁` over ℚ(i), enough to check
//! that a point map preserves the curve equation modulo the curve ideal.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::maps::{curve_equation, involution_map, lambda_map, translation_map, printed_map, CoordRing};
use super::{LambdaGenerator, Translation};
use crate::arith::GaussianRational;

const X: usize = 0;
const Y: usize = 1;
const Z: usize = 2;
const L0: usize = 3;
const L1: usize = 4;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MPoly {
    terms: BTreeMap<[u32; 5], GaussianRational>,
}

impl MPoly {
    pub fn var(i: usize) -> Self {
        let mut e = [0; 5];
        e[i] = 1;
        MPoly::monomial(e, GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        MPoly::monomial([0; 5], c)
    }

    fn monomial(e: [u32; 5], c: GaussianRational) -> Self {
        let mut p = MPoly::default();
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    fn add_term(&mut self, e: [u32; 5], c: GaussianRational) {
        let entry = self.terms.entry(e).or_default();
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn pow(&self, k: u32) -> MPoly {
        (0..k).fold(MPoly::constant(GaussianRational::one()), |acc, _| acc * self.clone())
    }

    /// Remainder after replacing `Z²` by `rel`.
    pub fn reduce_z_squared(&self, rel: &MPoly) -> MPoly {
        let mut out = MPoly::default();
        for (e, c) in &self.terms {
            let mut rest = *e;
            rest[Z] %= 2;
            let t = MPoly::monomial(rest, c.clone()) * rel.pow(e[Z] / 2);
            for (e2, c2) in t.terms {
                out.add_term(e2, c2);
            }
        }
        out
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(mut self, rhs: MPoly) -> MPoly {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        self + (-rhs)
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    // exponents add when monomials multiply
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: MPoly) -> MPoly {
        let mut out = MPoly::default();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = std::array::from_fn(|i| e1[i] + e2[i]);
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl CoordRing for MPoly {
    fn imag_unit() -> Self {
        MPoly::constant(GaussianRational::i())
    }
}

/// Which map a symbolic check concerns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurveMap {
    Printed(Translation),
    Translation(Translation),
    Lambda(LambdaGenerator),
    Involution,
}

/// `Z′² − q_λ′(X′, Y′)` lies in the ideal of `Z² − q_λ(X, Y)`, with λ symbolic.
pub fn preserves_curve(map: CurveMap) -> bool {
    let l = [MPoly::var(L0), MPoly::var(L1)];
    let p = [MPoly::var(X), MPoly::var(Y), MPoly::var(Z)];
    let (l2, p2) = match map {
        CurveMap::Printed(t) => (l.clone(), printed_map(t, &l, &p)),
        CurveMap::Translation(t) => (l.clone(), translation_map(t, &l, &p)),
        CurveMap::Lambda(g) => lambda_map(g, &l, &p),
        CurveMap::Involution => (l.clone(), involution_map(&p)),
    };
    // Z² = q exactly when the equation vanishes, so q = Z² − equation
    let q = p[2].clone() * p[2].clone() - curve_equation(&l, &p);
    curve_equation(&l2, &p2).reduce_z_squared(&q).is_zero()
}
