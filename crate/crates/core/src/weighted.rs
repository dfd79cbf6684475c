//! Points of weighted projective spaces with exact coordinates.

use std::fmt;

use num_integer::Integer;

use crate::arith::GaussianRational;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct WeightedPoint {
    weights: Vec<u32>,
    coords: Vec<GaussianRational>,
}

impl WeightedPoint {
    pub fn new(weights: Vec<u32>, coords: Vec<GaussianRational>) -> Result<Self> {
        if weights.len() != coords.len() || weights.contains(&0) {
            return Err(Error::WeightMismatch);
        }
        if coords.iter().all(GaussianRational::is_zero) {
            return Err(Error::ZeroPoint);
        }
        Ok(WeightedPoint { weights, coords })
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn coords(&self) -> &[GaussianRational] {
        &self.coords
    }

    /// `λ · (c₁..cₙ) = (λ^w₁ c₁ .. λ^wₙ cₙ)`.
    pub fn scale(&self, lambda: &GaussianRational) -> WeightedPoint {
        let coords = self
            .weights
            .iter()
            .zip(&self.coords)
            .map(|(&w, c)| c * &lambda.pow(w as i64))
            .collect();
        WeightedPoint {
            weights: self.weights.clone(),
            coords,
        }
    }

    /// Whether some `λ ≠ 0` over the algebraic closure carries `self` to `other`.
    ///
    /// On the common support `S` with ratios `rᵢ = otherᵢ/selfᵢ`, write
    /// `g = gcd(wᵢ) = Σ nᵢwᵢ` and `ρ = Π rᵢ^nᵢ`. Then `λ` exists iff
    /// `rᵢ = ρ^(wᵢ/g)` for all `i ∈ S`. Pairwise conditions
    /// `rᵢ^wⱼ = rⱼ^wᵢ` alone are not enough: with weights `(2, 4)` the
    /// ratios `(1, −1)` pass them but no `λ` exists.
    pub fn equivalent(&self, other: &WeightedPoint) -> Result<bool> {
        if self.weights != other.weights {
            return Err(Error::WeightMismatch);
        }
        let mut support = Vec::new();
        for (i, (a, b)) in self.coords.iter().zip(&other.coords).enumerate() {
            match (a.is_zero(), b.is_zero()) {
                (true, true) => {}
                (false, false) => support.push(i),
                _ => return Ok(false),
            }
        }
        let ratios: Vec<GaussianRational> = support
            .iter()
            .map(|&i| &other.coords[i] / &self.coords[i])
            .collect();
        let ws: Vec<i64> = support.iter().map(|&i| self.weights[i] as i64).collect();
        let (g, bezout) = bezout(&ws);
        let rho = ratios
            .iter()
            .zip(&bezout)
            .fold(GaussianRational::one(), |acc, (r, &n)| &acc * &r.pow(n));
        Ok(ratios
            .iter()
            .zip(&ws)
            .all(|(r, &w)| *r == rho.pow(w / g)))
    }
}

/// `gcd(xs)` with coefficients `n` such that `Σ nᵢ xᵢ = gcd`.
fn bezout(xs: &[i64]) -> (i64, Vec<i64>) {
    let mut g = 0i64;
    let mut coeffs: Vec<i64> = Vec::with_capacity(xs.len());
    for &x in xs {
        let e = g.extended_gcd(&x);
        for c in &mut coeffs {
            *c *= e.x;
        }
        coeffs.push(e.y);
        g = e.gcd;
    }
    (g, coeffs)
}

/// Free-function form of [`WeightedPoint::equivalent`].
pub fn weighted_point_equal(p: &WeightedPoint, q: &WeightedPoint) -> Result<bool> {
    p.equivalent(q)
}

impl fmt::Display for WeightedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        let ws: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        write!(f, "[{}] in P({})", cs.join(" : "), ws.join(","))
    }
}

impl fmt::Debug for WeightedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
