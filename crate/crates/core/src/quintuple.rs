//! 2×2×2×2 tensors: classical invariants, GIT stability and geometricity.

use std::fmt;

use crate::arith::{binary_form_gcd, BinaryForm, ExactMatrix, GaussianRational, Matrix};
use crate::error::{Error, Result};
use crate::weighted::WeightedPoint;

/// Weights of `(f₂, f₄, g₄, f₆)`.
pub const QUINTUPLE_WEIGHTS: [u32; 4] = [2, 4, 4, 6];

/// The Gram matrix `J = ε ⊗ ε` of the pairing on `V₀ ⊗ V₁`.
pub fn j_matrix() -> ExactMatrix {
    let z = GaussianRational::zero;
    let o = GaussianRational::from_integer;
    Matrix::from_rows(vec![
        vec![z(), z(), z(), o(1)],
        vec![z(), z(), o(-1), z()],
        vec![z(), o(-1), z(), z()],
        vec![o(1), z(), z(), z()],
    ])
}

/// A tensor `w ∈ V₀⊗V₁⊗V₂⊗V₃` with entry `w[i][j][k][l]`, indices in {0, 1}.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quintuple {
    entries: [GaussianRational; 16],
}

fn flat(i: usize, j: usize, k: usize, l: usize) -> usize {
    8 * i + 4 * j + 2 * k + l
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuintupleInvariants {
    pub f2: GaussianRational,
    pub f4: GaussianRational,
    pub g4: GaussianRational,
    pub f6: GaussianRational,
}

impl QuintupleInvariants {
    pub fn to_vec(&self) -> Vec<GaussianRational> {
        vec![self.f2.clone(), self.f4.clone(), self.g4.clone(), self.f6.clone()]
    }

    pub fn all_zero(&self) -> bool {
        self.to_vec().iter().all(GaussianRational::is_zero)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stability {
    Stable,
    StrictlySemistable,
    Unstable,
}

impl Stability {
    pub fn as_str(self) -> &'static str {
        match self {
            Stability::Stable => "stable",
            Stability::StrictlySemistable => "strictly-semistable",
            Stability::Unstable => "unstable",
        }
    }
}

/// Outcome of the geometricity test; `failing_index` is the first `j` that fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Geometricity {
    pub geometric: bool,
    pub failing_index: Option<usize>,
}

impl Quintuple {
    pub fn zero() -> Self {
        Quintuple {
            entries: std::array::from_fn(|_| GaussianRational::zero()),
        }
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize, usize, usize) -> GaussianRational) -> Self {
        Quintuple {
            entries: std::array::from_fn(|n| f(n >> 3 & 1, n >> 2 & 1, n >> 1 & 1, n & 1)),
        }
    }

    /// Inverse of [`reshape_to_matrix`](Self::reshape_to_matrix).
    pub fn from_matrix(m: &ExactMatrix) -> Self {
        assert_eq!((m.rows(), m.cols()), (4, 4));
        Self::from_fn(|i, j, k, l| m[(2 * i + j, 2 * k + l)].clone())
    }

    /// The tensor `x₀x₁y₂y₃ − y₀x₁x₂y₃ − x₀y₁y₂x₃ + y₀y₁x₂x₃`.
    pub fn linear_reference() -> Self {
        Self::from_matrix(&j_matrix())
    }

    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> &GaussianRational {
        &self.entries[flat(i, j, k, l)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, l: usize, v: GaussianRational) {
        self.entries[flat(i, j, k, l)] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(GaussianRational::is_zero)
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        Quintuple {
            entries: std::array::from_fn(|n| &self.entries[n] * s),
        }
    }

    /// `M[(ij),(kl)] = w[i][j][k][l]` with pair index `2i + j`.
    pub fn reshape_to_matrix(&self) -> ExactMatrix {
        Matrix::from_fn(4, 4, |r, c| self.get(r >> 1, r & 1, c >> 1, c & 1).clone())
    }

    /// `A = MᵀJMJ`; its traces and `det M` are the invariants.
    pub fn twisted_square(&self) -> ExactMatrix {
        let m = self.reshape_to_matrix();
        let j = j_matrix();
        &(&(&m.transpose() * &j) * &m) * &j
    }

    pub fn invariants(&self) -> QuintupleInvariants {
        let a = self.twisted_square();
        let a2 = &a * &a;
        let a3 = &a2 * &a;
        QuintupleInvariants {
            f2: a.trace(),
            f4: a2.trace(),
            g4: self.reshape_to_matrix().determinant().unwrap(),
            f6: a3.trace(),
        }
    }

    pub fn classify_stability(&self) -> Result<Stability> {
        if self.is_zero() {
            return Err(Error::ZeroTensor);
        }
        if !self.reshape_to_matrix().determinant()?.is_zero() {
            Ok(Stability::Stable)
        } else if self.twisted_square().is_nilpotent()? {
            Ok(Stability::Unstable)
        } else {
            Ok(Stability::StrictlySemistable)
        }
    }

    /// `[f₂ : f₄ : g₄ : f₆]` in ℙ(2,4,4,6).
    pub fn weighted_point(&self) -> Result<WeightedPoint> {
        let inv = self.invariants();
        if inv.all_zero() {
            return Err(Error::Unstable);
        }
        WeightedPoint::new(QUINTUPLE_WEIGHTS.to_vec(), inv.to_vec())
    }

    /// Whether the invariants agree with those of the linear reference tensor
    /// as points of ℙ(2,4,4,6). Necessary for linearity, not known to suffice.
    pub fn has_linear_invariants(&self) -> Result<bool> {
        self.weighted_point()?
            .equivalent(&Quintuple::linear_reference().weighted_point()?)
    }

    /// Action of `g₀ ⊗ g₁ ⊗ g₂ ⊗ g₃` on the four tensor slots.
    pub fn act(&self, g: [&ExactMatrix; 4]) -> Quintuple {
        let left = g[0].kron(g[1]);
        let right = g[2].kron(g[3]);
        let m = &(&left * &self.reshape_to_matrix()) * &right.transpose();
        Quintuple::from_matrix(&m)
    }

    /// Rotates slots so that slot `j` comes first: `w′[a][b][c][d]` is the
    /// entry of `w` with slot `j` = a, `j+1` = b, `j+2` = c, `j+3` = d.
    fn rotated(&self, j: usize) -> Quintuple {
        Quintuple::from_fn(|a, b, c, d| {
            let mut idx = [0; 4];
            for (off, v) in [a, b, c, d].into_iter().enumerate() {
                idx[(j + off) % 4] = v;
            }
            self.get(idx[0], idx[1], idx[2], idx[3]).clone()
        })
    }

    /// Whether adjacent covectors `(φ_j, φ_{j+1})` can kill `w` at slot `j`.
    ///
    /// With slices `B_m[a][b] = w′[a][b][m]`, the rows `uᵀB_m` form a 4×2
    /// matrix; a bad pair exists iff its six 2×2 minors (binary quadratics
    /// in `u`) share a projective root.
    pub fn fails_at(&self, j: usize) -> bool {
        let w = self.rotated(j % 4);
        // uᵀB_m column b as a linear form: coefficient of u₁ is B[0][b], of u₂ is B[1][b]
        let lin = |m: usize, b: usize| {
            BinaryForm::new(vec![
                w.get(1, b, m >> 1, m & 1).clone(),
                w.get(0, b, m >> 1, m & 1).clone(),
            ])
        };
        let mut minors = Vec::with_capacity(6);
        for m in 0..4 {
            for n in m + 1..4 {
                let p = lin(m, 0).mul(&lin(n, 1));
                let q = lin(m, 1).mul(&lin(n, 0));
                let diff = p
                    .coeffs()
                    .iter()
                    .zip(q.coeffs())
                    .map(|(x, y)| x - y)
                    .collect();
                minors.push(BinaryForm::new(diff));
            }
        }
        let g = binary_form_gcd(&minors).unwrap();
        g.is_zero() || !g.is_constant()
    }

    pub fn is_geometric(&self) -> Result<Geometricity> {
        if self.is_zero() {
            return Err(Error::ZeroTensor);
        }
        let failing_index = (0..4).find(|&j| self.fails_at(j));
        Ok(Geometricity {
            geometric: failing_index.is_none(),
            failing_index,
        })
    }
}

pub fn linear_reference_quintuple() -> Quintuple {
    Quintuple::linear_reference()
}

impl fmt::Debug for Quintuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.entries.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(
                |(n, c)| format!("w{}{}{}{}={}", n >> 3 & 1, n >> 2 & 1, n >> 1 & 1, n & 1, c),
            ))
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_integer(n)
    }

    fn q(n: i64, d: i64) -> GaussianRational {
        GaussianRational::real(Rational::new(n, d))
    }

    #[test]
    fn j_squares_to_identity() {
        let j = j_matrix();
        assert_eq!(&j * &j, Matrix::identity(4));
        assert_eq!(j.determinant().unwrap(), g(1));
        assert_eq!(j.rank(), 4);
    }

    #[test]
    fn reshape_bookkeeping() {
        let mut w = Quintuple::zero();
        w.set(0, 0, 1, 1, g(1));
        let m = w.reshape_to_matrix();
        assert_eq!(m[(0, 3)], g(1));
        assert_eq!(m.rank(), 1);
        assert_eq!(Quintuple::linear_reference().reshape_to_matrix(), j_matrix());
        assert!(Quintuple::zero().reshape_to_matrix().is_zero());
    }

    #[test]
    fn linear_reference_invariants() {
        let lin = Quintuple::linear_reference();
        let inv = lin.invariants();
        assert_eq!(inv.to_vec(), vec![g(4), g(4), g(1), g(4)]);
        let half = lin.scale(&q(1, 2)).invariants();
        assert_eq!(half.to_vec(), vec![g(1), q(1, 4), q(1, 16), q(1, 16)]);
        assert!(Quintuple::zero().invariants().all_zero());
        assert_eq!(lin.classify_stability().unwrap(), Stability::Stable);
        assert!(lin.scale(&q(1, 2)).has_linear_invariants().unwrap());
    }

    #[test]
    fn stability_fixtures() {
        let mut e = Quintuple::zero();
        e.set(0, 0, 0, 0, g(1));
        assert_eq!(e.classify_stability().unwrap(), Stability::Unstable);
        assert_eq!(e.weighted_point(), Err(Error::Unstable));
        // x₀x₁x₂x₃ + y₀x₁x₂y₃: A vanishes identically
        let mut w = Quintuple::zero();
        w.set(0, 0, 0, 0, g(1));
        w.set(1, 0, 0, 1, g(1));
        assert!(w.twisted_square().is_zero());
        assert_eq!(w.classify_stability().unwrap(), Stability::Unstable);
        assert_eq!(Quintuple::zero().classify_stability(), Err(Error::ZeroTensor));
    }

    #[test]
    fn strictly_semistable_example() {
        // M = E₀₃ + E₃₀: det M = 0 but A is not nilpotent
        let mut w = Quintuple::zero();
        w.set(0, 0, 1, 1, g(1));
        w.set(1, 1, 0, 0, g(1));
        assert!(w.invariants().g4.is_zero());
        assert_eq!(w.classify_stability().unwrap(), Stability::StrictlySemistable);
    }

    #[test]
    fn geometricity() {
        assert_eq!(
            Quintuple::linear_reference().is_geometric().unwrap(),
            Geometricity {
                geometric: true,
                failing_index: None
            }
        );
        let mut e = Quintuple::zero();
        e.set(0, 0, 0, 0, g(1));
        assert_eq!(e.is_geometric().unwrap().failing_index, Some(0));
        assert!(Quintuple::zero().is_geometric().is_err());
    }
}
