//! Quartic conifold potentials as symmetric 4×4 matrices, their invariants
//! in ℙ(1,2,3,4) and the degree-4 map to quintuple invariants in ℙ(2,4,4,6).

use std::collections::BTreeMap;

use nalgebra::{Complex, Matrix4, Schur};

use crate::arith::{GaussianRational, Matrix, Rational};
use crate::error::{Error, Result};
use crate::quintuple::{j_matrix, Quintuple, QuintupleInvariants};
use crate::quiver::{CyclicPotential, Quiver};
use crate::weighted::WeightedPoint;

pub const POTENTIAL_WEIGHTS: [u32; 4] = [1, 2, 3, 4];

/// Symmetric `N` indexed by pairs `(ij) ↦ 2i + j`, so that the potential is
/// `Σ N[(ij),(kl)]` over the expanded words `a_i b_j a_k b_l`, halved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPotentialMatrix {
    n: Matrix<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PotentialInvariants {
    pub f1: Rational,
    pub f2: Rational,
    pub f3: Rational,
    pub f4: Rational,
}

impl PotentialInvariants {
    pub fn to_vec(&self) -> Vec<Rational> {
        vec![self.f1.clone(), self.f2.clone(), self.f3.clone(), self.f4.clone()]
    }

    pub fn all_zero(&self) -> bool {
        self.to_vec().iter().all(Rational::is_zero)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PotentialStability {
    Semistable,
    Unstable,
}

impl PotentialStability {
    pub fn as_str(self) -> &'static str {
        match self {
            PotentialStability::Semistable => "semistable",
            PotentialStability::Unstable => "unstable",
        }
    }
}

fn rational_j() -> Matrix<Rational> {
    j_matrix().map(|x| x.re.clone())
}

/// Traces of the first `k` powers of a square matrix.
fn power_traces(m: &Matrix<Rational>, k: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(k);
    let mut p = m.clone();
    for _ in 0..k {
        out.push(p.trace());
        p = &p * m;
    }
    out
}

impl SymPotentialMatrix {
    pub fn new(n: Matrix<Rational>) -> Result<Self> {
        if (n.rows(), n.cols()) != (4, 4) {
            return Err(Error::NonSquare {
                rows: n.rows(),
                cols: n.cols(),
            });
        }
        if n != n.transpose() {
            return Err(Error::NotQuarticConifold("matrix is not symmetric".into()));
        }
        Ok(SymPotentialMatrix { n })
    }

    pub fn zero() -> Self {
        SymPotentialMatrix {
            n: Matrix::zeros(4, 4),
        }
    }

    /// Builds a symmetric matrix from its upper triangle, row by row (10 entries).
    pub fn from_upper(entries: &[Rational; 10]) -> Self {
        let mut n = Matrix::zeros(4, 4);
        let mut it = entries.iter();
        for r in 0..4 {
            for c in r..4 {
                let v = it.next().unwrap().clone();
                n[(r, c)] = v.clone();
                n[(c, r)] = v;
            }
        }
        SymPotentialMatrix { n }
    }

    pub fn matrix(&self) -> &Matrix<Rational> {
        &self.n
    }

    pub fn is_zero(&self) -> bool {
        self.n.is_zero()
    }

    /// Reads `N` off a quartic potential on the conifold quiver.
    pub fn from_potential(phi: &CyclicPotential) -> Result<Self> {
        if *phi.quiver() != Quiver::conifold() {
            return Err(Error::NotQuarticConifold("potential is not on the conifold quiver".into()));
        }
        if let Some(d) = phi.degree().map_err(|_| Error::NotQuarticConifold("mixed word lengths".into()))? {
            if d != 4 {
                return Err(Error::NotQuarticConifold(format!("words of length {d}")));
            }
        }
        let q = phi.quiver();
        let a = [q.arrow("a1")?, q.arrow("a2")?];
        let b = [q.arrow("b1")?, q.arrow("b2")?];
        let expanded = phi.expanded();
        let half = Rational::new(1, 2);
        let n = Matrix::from_fn(4, 4, |r, c| {
            let word = vec![a[r >> 1], b[r & 1], a[c >> 1], b[c & 1]];
            expanded.get(&word).map_or_else(Rational::zero, |v| v * &half)
        });
        Ok(SymPotentialMatrix { n })
    }

    pub fn to_potential(&self) -> CyclicPotential {
        let mut phi = CyclicPotential::zero(Quiver::conifold());
        let name = |r: usize| [["a1", "a2"][r >> 1], ["b1", "b2"][r & 1]];
        for r in 0..4 {
            for c in r..4 {
                let v = &self.n[(r, c)];
                if v.is_zero() {
                    continue;
                }
                let coeff = if r == c { v.clone() } else { v * &Rational::from_integer(2) };
                let [x, y] = name(r);
                let [z, w] = name(c);
                phi.add_named(&[x, y, z, w], coeff).unwrap();
            }
        }
        phi
    }

    /// `NJ`, whose power traces are the invariants.
    pub fn twisted(&self) -> Matrix<Rational> {
        &self.n * &rational_j()
    }

    /// `f_d = Tr((NJ)^d)` for `d = 1..4`.
    pub fn invariants(&self) -> PotentialInvariants {
        let t = power_traces(&self.twisted(), 4);
        PotentialInvariants {
            f1: t[0].clone(),
            f2: t[1].clone(),
            f3: t[2].clone(),
            f4: t[3].clone(),
        }
    }

    pub fn classify_stability(&self) -> Result<PotentialStability> {
        if self.is_zero() {
            return Err(Error::ZeroPotential);
        }
        Ok(if self.twisted().is_nilpotent()? {
            PotentialStability::Unstable
        } else {
            PotentialStability::Semistable
        })
    }

    pub fn weighted_point(&self) -> Result<WeightedPoint> {
        let inv = self.invariants();
        if inv.all_zero() {
            return Err(Error::Unstable);
        }
        WeightedPoint::new(
            POTENTIAL_WEIGHTS.to_vec(),
            inv.to_vec().into_iter().map(GaussianRational::real).collect(),
        )
    }

    /// The tensor `w[i][j][k][l] = N[(ij),(kl)]`.
    pub fn to_quintuple(&self) -> Quintuple {
        Quintuple::from_matrix(&self.n.map(|x| GaussianRational::real(x.clone())))
    }

    /// Induced action of `(g₀, g₁)`: `N ↦ (g₀⊗g₁) N (g₀⊗g₁)ᵀ`.
    pub fn act(&self, g0: &Matrix<Rational>, g1: &Matrix<Rational>) -> Self {
        let g = g0.kron(g1);
        SymPotentialMatrix {
            n: &(&g * &self.n) * &g.transpose(),
        }
    }
}

/// Right-hand sides of the covering identities: `(g₄, f₆)` as polynomials in `f₁..f₄`.
pub fn covering_formulas(f: &PotentialInvariants) -> (Rational, Rational) {
    let r = Rational::new;
    let (f1, f2, f3, f4) = (&f.f1, &f.f2, &f.f3, &f.f4);
    let g4 = r(1, 24) * f1.pow(4) - r(1, 4) * f1.pow(2) * f2 + r(1, 3) * f1 * f3
        + r(1, 8) * f2.pow(2)
        - r(1, 4) * f4;
    let f6 = r(-1, 24) * f1.pow(6) + r(3, 8) * f1.pow(4) * f2 - r(2, 3) * f1.pow(3) * f3
        - r(3, 8) * f1.pow(2) * f2.pow(2)
        + r(3, 4) * f1.pow(2) * f4
        - r(1, 8) * f2.pow(3)
        + r(3, 4) * f2 * f4
        + r(1, 3) * f3.pow(2);
    (g4, f6)
}

/// Compares the quintuple invariants of the image tensor with the
/// covering formulas applied to the potential invariants.
pub fn verify_covering_identities(n: &SymPotentialMatrix) -> bool {
    let f = n.invariants();
    let image: QuintupleInvariants = n.to_quintuple().invariants();
    let (g4, f6) = covering_formulas(&f);
    let real = |x: &GaussianRational| x.is_real().then(|| x.re.clone());
    real(&image.f2) == Some(f.f2.clone())
        && real(&image.f4) == Some(f.f4.clone())
        && real(&image.g4) == Some(g4)
        && real(&image.f6) == Some(f6)
}

#[derive(Clone, Debug)]
pub struct FiberReport {
    /// Distinct points of ℙ(1,2,3,4) among the 8 even sign patterns.
    pub preimages: Vec<WeightedPoint>,
    /// `(Σx², Σx⁴, Πx, Σx⁶)`.
    pub target: WeightedPoint,
    /// Every even pattern maps to `target`.
    pub common_target: bool,
    /// The covering formulas reproduce `Πx` and `Σx⁶` from each preimage.
    pub formulas_agree: bool,
    /// Every odd pattern maps to a point different from `target`.
    pub odd_patterns_separated: bool,
}

impl FiberReport {
    pub fn distinct_preimages(&self) -> usize {
        self.preimages.len()
    }
}

fn power_sums(x: &[Rational]) -> Vec<Rational> {
    (1..=6).map(|d| x.iter().map(|v| v.pow(d)).sum()).collect()
}

fn target_point(x: &[Rational]) -> WeightedPoint {
    let p = power_sums(x);
    let prod = x.iter().fold(Rational::one(), |a, v| a * v);
    let coords = [p[1].clone(), p[3].clone(), prod, p[5].clone()];
    WeightedPoint::new(
        crate::quintuple::QUINTUPLE_WEIGHTS.to_vec(),
        coords.into_iter().map(GaussianRational::real).collect(),
    )
    .unwrap()
}

/// Fiber of the covering map over the image of `x`, in the diagonal model
/// where a potential is its spectrum `x` and a quintuple its singular values.
pub fn fiber_experiment(x: &[Rational; 4]) -> Result<FiberReport> {
    for (i, a) in x.iter().enumerate() {
        if a.is_zero() {
            return Err(Error::DegenerateFiber("zero coordinate".into()));
        }
        if x[..i].iter().any(|b| b.abs() == a.abs()) {
            return Err(Error::DegenerateFiber("repeated absolute values".into()));
        }
    }
    let target = target_point(x);
    let mut preimages: Vec<WeightedPoint> = Vec::new();
    let mut common_target = true;
    let mut formulas_agree = true;
    let mut odd_patterns_separated = true;
    for mask in 0u32..16 {
        let y: Vec<Rational> = x
            .iter()
            .enumerate()
            .map(|(i, v)| if mask >> i & 1 == 1 { -v } else { v.clone() })
            .collect();
        let image = target_point(&y);
        if mask.count_ones() % 2 == 1 {
            odd_patterns_separated &= !image.equivalent(&target)?;
            continue;
        }
        common_target &= image.equivalent(&target)?;
        let p = power_sums(&y);
        let f = PotentialInvariants {
            f1: p[0].clone(),
            f2: p[1].clone(),
            f3: p[2].clone(),
            f4: p[3].clone(),
        };
        let (g4, f6) = covering_formulas(&f);
        formulas_agree &= image.coords()[2].re == g4 && image.coords()[3].re == f6;
        let point = WeightedPoint::new(
            POTENTIAL_WEIGHTS.to_vec(),
            f.to_vec().into_iter().map(GaussianRational::real).collect(),
        )?;
        let mut seen = false;
        for q in &preimages {
            seen |= q.equivalent(&point)?;
        }
        if !seen {
            preimages.push(point);
        }
    }
    Ok(FiberReport {
        preimages,
        target,
        common_target,
        formulas_agree,
        odd_patterns_separated,
    })
}

/// Elementary symmetric functions `e₁..e₄` from power sums via Newton's identities.
pub fn newton_elementary(p: &[Rational; 4]) -> [Rational; 4] {
    let mut e = vec![Rational::one()];
    for k in 1..=4 {
        let mut acc = Rational::zero();
        for i in 1..=k {
            let term = &e[k - i] * &p[i - 1];
            acc = if i % 2 == 1 { acc + term } else { acc - term };
        }
        e.push(acc / Rational::from_integer(k as i64));
    }
    [e[1].clone(), e[2].clone(), e[3].clone(), e[4].clone()]
}

#[derive(Clone, Debug)]
pub struct Spectrum {
    pub roots: Vec<Complex<f64>>,
    /// `max_d |Σ xᵢ^d − f_d|` over `d = 1..4`.
    pub residual: f64,
}

pub const SPECTRUM_TOLERANCE: f64 = 1e-8;

/// Numerical eigenvalues of `NJ`, recovered from `f₁..f₄` alone.
pub fn reconstruct_spectrum(n: &SymPotentialMatrix) -> Spectrum {
    let f = n.invariants();
    let p = [f.f1.clone(), f.f2.clone(), f.f3.clone(), f.f4.clone()];
    let e = newton_elementary(&p).map(|v| v.to_f64());
    // companion matrix of x⁴ − e₁x³ + e₂x² − e₃x + e₄
    #[rustfmt::skip]
    let companion = Matrix4::new(
        e[0], -e[1], e[2], -e[3],
        1.0,  0.0,   0.0,  0.0,
        0.0,  1.0,   0.0,  0.0,
        0.0,  0.0,   1.0,  0.0,
    );
    // the unbounded Schur iteration can stall on defective companions such as x⁴
    let roots: Vec<Complex<f64>> = match Schur::try_new(companion, f64::EPSILON, 10_000) {
        Some(schur) => schur.complex_eigenvalues().iter().copied().collect(),
        None => weierstrass_roots(&e),
    };
    let residual = p
        .iter()
        .enumerate()
        .map(|(d, fd)| {
            let s: Complex<f64> = roots.iter().map(|x| x.powi(d as i32 + 1)).sum();
            (s - Complex::new(fd.to_f64(), 0.0)).norm()
        })
        .fold(0.0, f64::max);
    Spectrum { roots, residual }
}

/// Roots of `x⁴ − e₁x³ + e₂x² − e₃x + e₄` by simultaneous Weierstrass iteration.
fn weierstrass_roots(e: &[f64; 4]) -> Vec<Complex<f64>> {
    let poly = |x: Complex<f64>| (((x - e[0]) * x + e[1]) * x - e[2]) * x + e[3];
    let radius = 1.0 + e.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let seed = Complex::from_polar(0.4, 0.9);
    let mut z: Vec<Complex<f64>> = (0..4).map(|k| seed.powi(k) * radius).collect();
    for _ in 0..500 {
        let prev = z.clone();
        for i in 0..4 {
            let denom: Complex<f64> = (0..4).filter(|&j| j != i).map(|j| z[i] - z[j]).product();
            if denom.norm() > 0.0 {
                let step = poly(z[i]) / denom;
                z[i] -= step;
            }
        }
        if z.iter().zip(&prev).all(|(a, b)| (a - b).norm() < 1e-15 * radius) {
            break;
        }
    }
    z
}

/// Random symmetric matrix with entries `num/den`, `|num| ≤ bound`, `1 ≤ den ≤ bound`.
pub fn random_sym_matrix(rng: &mut impl rand::Rng, bound: i64) -> SymPotentialMatrix {
    let entries: [Rational; 10] = std::array::from_fn(|_| {
        Rational::new(rng.random_range(-bound..=bound), rng.random_range(1..=bound))
    });
    SymPotentialMatrix::from_upper(&entries)
}

/// Keyed by cyclic class, the coefficients of [`SymPotentialMatrix::to_potential`].
pub fn class_coefficients(n: &SymPotentialMatrix) -> BTreeMap<Vec<String>, Rational> {
    let phi = n.to_potential();
    phi.classes()
        .iter()
        .map(|(w, c)| (phi.word_names(w), c.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spectrum_of_a_nilpotent_twist_terminates() {
        let mut e: [Rational; 10] = std::array::from_fn(|_| Rational::zero());
        e[0] = Rational::one();
        let s = reconstruct_spectrum(&SymPotentialMatrix::from_upper(&e));
        assert_eq!(s.roots.len(), 4);
        assert!(s.residual < SPECTRUM_TOLERANCE);
        let w = weierstrass_roots(&[10.0, 35.0, 50.0, 24.0]);
        for k in 1..=4 {
            assert!(w.iter().any(|z| (z - Complex::new(k as f64, 0.0)).norm() < 1e-9));
        }
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn single_entry() -> SymPotentialMatrix {
        let mut e = [(); 10].map(|_| Rational::zero());
        e[0] = Rational::one();
        SymPotentialMatrix::from_upper(&e)
    }

    #[test]
    fn conifold_potential_matrix() {
        let n = SymPotentialMatrix::from_potential(&CyclicPotential::conifold_standard()).unwrap();
        assert_eq!(n.matrix(), &rational_j().scale(&r(1, 2)));
        assert_eq!(n.invariants().to_vec(), vec![r(2, 1), r(1, 1), r(1, 2), r(1, 4)]);
        assert_eq!(n.classify_stability().unwrap(), PotentialStability::Semistable);
        assert_eq!(
            n.to_quintuple(),
            Quintuple::linear_reference().scale(&GaussianRational::real(r(1, 2)))
        );
        assert!(verify_covering_identities(&n));
        assert_eq!(n.to_potential(), CyclicPotential::conifold_standard());
    }

    #[test]
    fn diagonal_potentials() {
        let phi = CyclicPotential::diagonal([r(1, 1), r(2, 1), r(3, 1), r(5, 1)]);
        let n = SymPotentialMatrix::from_potential(&phi).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let want = if i == j { r([1, 2, 3, 5][i], 1) } else { Rational::zero() };
                assert_eq!(n.matrix()[(i, j)], want);
            }
        }
        let e = single_entry();
        let mut phi = CyclicPotential::zero(Quiver::conifold());
        phi.add_named(&["a1", "b1", "a1", "b1"], Rational::one()).unwrap();
        assert_eq!(SymPotentialMatrix::from_potential(&phi).unwrap(), e);
        assert!(e.invariants().all_zero());
        assert_eq!(e.classify_stability().unwrap(), PotentialStability::Unstable);
        assert_eq!(e.weighted_point(), Err(Error::Unstable));
        assert_eq!(SymPotentialMatrix::zero().classify_stability(), Err(Error::ZeroPotential));
    }

    #[test]
    fn identity_twist() {
        let n = SymPotentialMatrix::new(rational_j()).unwrap();
        assert_eq!(n.invariants().to_vec(), vec![r(4, 1), r(4, 1), r(4, 1), r(4, 1)]);
        let s = reconstruct_spectrum(&n);
        assert!(s.residual < SPECTRUM_TOLERANCE);
        for x in &s.roots {
            assert!((x - Complex::new(1.0, 0.0)).norm() < 1e-3);
        }
    }

    #[test]
    fn rejects_non_quartic() {
        let mut phi = CyclicPotential::zero(Quiver::conifold());
        phi.add_named(&["a1", "b1"], Rational::one()).unwrap();
        assert!(SymPotentialMatrix::from_potential(&phi).is_err());
    }

    #[test]
    fn fiber_fixtures() {
        let x = [r(1, 1), r(2, 1), r(3, 1), r(5, 1)];
        let rep = fiber_experiment(&x).unwrap();
        assert_eq!(rep.distinct_preimages(), 4);
        assert!(rep.common_target && rep.formulas_agree && rep.odd_patterns_separated);
        let t: Vec<Rational> = rep.target.coords().iter().map(|c| c.re.clone()).collect();
        assert_eq!(t, vec![r(39, 1), r(723, 1), r(30, 1), r(16419, 1)]);
        assert!(fiber_experiment(&[r(1, 1), r(1, 1), r(1, 1), r(1, 1)]).is_err());
        let y = [r(1, 1), r(2, 1), r(3, 1), r(4, 1)];
        assert_eq!(fiber_experiment(&y).unwrap().distinct_preimages(), 4);
    }

    #[test]
    fn newton_identities() {
        // roots 1, 2, 3, 4
        let p = [r(10, 1), r(30, 1), r(100, 1), r(354, 1)];
        assert_eq!(newton_elementary(&p), [r(10, 1), r(35, 1), r(50, 1), r(24, 1)]);
    }
}
