//! Framed representations of the conifold quiver at dimension vector (1,1,1)
//! over 𝔽_p, θ-stability, and point counts of the framed moduli.

use std::fmt;

use crate::arith::{PrimeField, PrimeFieldElement, Rational};
use crate::error::{Error, Result};
use crate::quiver::{jacobi_generators, CyclicPotential, Quiver};

/// Scalar order of the five maps: `a1, a2, b1, b2, i`.
pub const ARROWS: [&str; 5] = ["a1", "a2", "b1", "b2", "i"];

/// Vertex of each arrow's source and target, as indices into `(v0, v1, ∞)`.
const ENDS: [(usize, usize); 5] = [(0, 1), (0, 1), (1, 0), (1, 0), (2, 0)];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FramedRep {
    pub field: PrimeField,
    /// `[a1, a2, b1, b2, i]`
    pub maps: [PrimeFieldElement; 5],
}

impl FramedRep {
    pub fn new(field: PrimeField, values: [i64; 5]) -> Self {
        FramedRep {
            field,
            maps: values.map(|v| field.element(v)),
        }
    }

    pub fn a(&self) -> [PrimeFieldElement; 2] {
        [self.maps[0], self.maps[1]]
    }

    pub fn b(&self) -> [PrimeFieldElement; 2] {
        [self.maps[2], self.maps[3]]
    }

    pub fn i(&self) -> PrimeFieldElement {
        self.maps[4]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityParameter {
    pub theta: [Rational; 3],
}

impl StabilityParameter {
    pub fn new(t0: Rational, t1: Rational, t_inf: Rational) -> Self {
        StabilityParameter {
            theta: [t0, t1, t_inf],
        }
    }

    /// `θ = (−1, −1, 2)`
    pub fn standard() -> Self {
        let r = Rational::from_integer;
        StabilityParameter::new(r(-1), r(-1), r(2))
    }

    fn slope(&self, dims: [u32; 3]) -> Rational {
        let num: Rational = (0..3)
            .map(|k| &self.theta[k] * &Rational::from_integer(dims[k] as i64))
            .sum();
        num / Rational::from_integer(dims.iter().sum::<u32>() as i64)
    }
}

impl fmt::Display for StabilityParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.theta;
        write!(f, "({a}, {b}, {c})")
    }
}

/// The Jacobi relations reduced mod `p`, as sums of monomials in the five scalars.
#[derive(Clone, Debug)]
pub struct ScalarRelations {
    field: PrimeField,
    relations: Vec<Vec<(PrimeFieldElement, Vec<usize>)>>,
    /// Some nonzero rational coefficient vanished mod `p`.
    degenerate: bool,
}

impl ScalarRelations {
    pub fn new(phi: &CyclicPotential, field: PrimeField) -> Result<Self> {
        let phi = phi.on_quiver(&Quiver::framed_conifold()).map_err(|_| {
            Error::WrongQuiver("dimension (1,1,1) counts need a conifold potential".into())
        })?;
        let q = phi.quiver();
        let slot: Vec<usize> = q
            .arrows()
            .iter()
            .map(|a| ARROWS.iter().position(|n| *n == a.name).unwrap())
            .collect();
        let mut degenerate = false;
        let mut relations = Vec::new();
        for r in jacobi_generators(&phi) {
            let mut terms = Vec::new();
            for (path, c) in r.terms() {
                if !c.is_real() {
                    return Err(Error::Parse(format!("non-rational coefficient {c}")));
                }
                let v = field.reduce(&c.re)?;
                degenerate |= v.is_zero();
                terms.push((v, path.arrows().iter().map(|&a| slot[a]).collect()));
            }
            relations.push(terms);
        }
        Ok(ScalarRelations {
            field,
            relations,
            degenerate,
        })
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    pub fn satisfied(&self, rep: &FramedRep) -> bool {
        self.relations.iter().all(|terms| {
            terms
                .iter()
                .fold(self.field.zero(), |acc, (c, mono)| {
                    acc + mono.iter().fold(*c, |m, &k| m * rep.maps[k])
                })
                .is_zero()
        })
    }
}

/// Every Jacobi relation of `phi` vanishes on the scalars of `rep`.
pub fn satisfies_relations(rep: &FramedRep, phi: &CyclicPotential) -> Result<bool> {
    Ok(ScalarRelations::new(phi, rep.field)?.satisfied(rep))
}

/// King stability by brute force over the coordinate subrepresentations.
pub fn is_theta_stable(rep: &FramedRep, theta: &StabilityParameter) -> bool {
    let total = theta.slope([1, 1, 1]);
    for mask in 1u32..7 {
        let dims = [mask & 1, mask >> 1 & 1, mask >> 2 & 1];
        let closed = ENDS
            .iter()
            .zip(&rep.maps)
            .all(|(&(s, t), m)| m.is_zero() || dims[s] == 0 || dims[t] == 1);
        if closed && theta.slope(dims) >= total {
            return false;
        }
    }
    true
}

fn count_stratum(
    rel: &ScalarRelations,
    theta: &StabilityParameter,
    fixed: &[(usize, i64)],
) -> Result<u64> {
    let f = rel.field;
    let p = f.modulus();
    let free: Vec<usize> = (0..5).filter(|k| fixed.iter().all(|(j, _)| j != k)).collect();
    let mut n = 0u64;
    for code in 0..p.pow(free.len() as u32) {
        let mut values = [0i64; 5];
        for &(k, v) in fixed {
            values[k] = v;
        }
        let mut c = code;
        for &k in &free {
            values[k] = (c % p) as i64;
            c /= p;
        }
        let rep = FramedRep::new(f, values);
        if is_theta_stable(&rep, theta) && rel.satisfied(&rep) {
            if rep.maps[..4].iter().all(PrimeFieldElement::is_zero) {
                return Err(Error::Stabilizer);
            }
            n += 1;
        }
    }
    Ok(n)
}

fn orbits(total: u64, p: u64) -> Result<u64> {
    if !total.is_multiple_of(p - 1) {
        return Err(Error::Stabilizer);
    }
    Ok(total / (p - 1))
}

fn check_unframed_stratum(rel: &ScalarRelations, theta: &StabilityParameter) -> Result<()> {
    // With i = 0 the scalar gauge acts trivially, so such stable points would
    // carry a stabilizer; they can only occur when ∞ alone does not destabilize.
    if theta.slope([0, 0, 1]) < theta.slope([1, 1, 1]) && count_stratum(rel, theta, &[(4, 0)])? > 0 {
        return Err(Error::Stabilizer);
    }
    Ok(())
}

/// Orbits of stable framed representations satisfying the relations,
/// counted with the gauge `i = 1` and residual `(a, b) ↦ (ta, t⁻¹b)`.
pub fn count_points(phi: &CyclicPotential, theta: &StabilityParameter, p: u64) -> Result<u64> {
    let rel = ScalarRelations::new(phi, PrimeField::new(p)?)?;
    check_unframed_stratum(&rel, theta)?;
    orbits(count_stratum(&rel, theta, &[(4, 1)])?, p)
}

/// The same count with the gauge `a1 = 1`, plus the stratum `a1 = 0, a2 = 1`.
pub fn count_points_arrow_gauge(phi: &CyclicPotential, theta: &StabilityParameter, p: u64) -> Result<u64> {
    let rel = ScalarRelations::new(phi, PrimeField::new(p)?)?;
    check_unframed_stratum(&rel, theta)?;
    let a1 = count_stratum(&rel, theta, &[(0, 1)])?;
    let a2 = count_stratum(&rel, theta, &[(0, 0), (1, 1)])?;
    Ok(orbits(a1, p)? + orbits(a2, p)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeCount {
    pub p: u64,
    pub count: Option<u64>,
    /// Why this prime is left out of the fit, if it is.
    pub excluded: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FitStatus {
    /// Cubic through the first four usable primes, confirmed on `extra_checks` more.
    Fitted { extra_checks: usize },
    NoPolynomialFit,
    InsufficientUsablePrimes,
}

#[derive(Clone, Debug)]
pub struct CountReport {
    pub potential: String,
    pub theta: StabilityParameter,
    pub counts: Vec<PrimeCount>,
    /// Ascending coefficients of the counting polynomial in `q`.
    pub polynomial: Option<Vec<Rational>>,
    pub status: FitStatus,
    /// Value of the counting polynomial at `q = 1`.
    pub euler_number: Option<Rational>,
    /// Every counted prime gives `(p + 1)p²`.
    pub matches_resolved_conifold: bool,
}

/// Coefficients of the Lagrange interpolant through `points`.
pub fn lagrange(points: &[(Rational, Rational)]) -> Vec<Rational> {
    let n = points.len();
    let mut out = vec![Rational::zero(); n];
    for (i, (xi, yi)) in points.iter().enumerate() {
        // basis polynomial Π_{j≠i} (q − x_j)/(x_i − x_j)
        let mut basis = vec![Rational::one()];
        let mut denom = Rational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![Rational::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= &(c * xj);
            }
            basis = next;
            denom *= &(xi - xj);
        }
        for (k, c) in basis.iter().enumerate() {
            out[k] += &(c * yi / &denom);
        }
    }
    while out.len() > 1 && out.last().is_some_and(Rational::is_zero) {
        out.pop();
    }
    out
}

pub fn eval_poly(coeffs: &[Rational], q: &Rational) -> Rational {
    coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * q + c)
}

/// `q^3 + q^2` style rendering.
pub fn render_poly(coeffs: &[Rational]) -> String {
    let mut parts = Vec::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => "q".into(),
            _ => format!("q^{k}"),
        };
        let coeff = if k > 0 && c.is_one() {
            String::new()
        } else if k > 0 && *c == -Rational::one() {
            "-".into()
        } else if k > 0 {
            format!("{c}*")
        } else {
            c.to_string()
        };
        parts.push(format!("{coeff}{mono}"));
    }
    if parts.is_empty() {
        return "0".into();
    }
    parts.join(" + ").replace("+ -", "- ")
}

pub fn counting_report(
    phi: &CyclicPotential,
    theta: &StabilityParameter,
    primes: &[u64],
) -> Result<CountReport> {
    if primes.len() < 4 {
        return Err(Error::InsufficientPrimes {
            needed: 4,
            got: primes.len(),
        });
    }
    let mut counts = Vec::new();
    for &p in primes {
        let field = PrimeField::new(p)?;
        let entry = match ScalarRelations::new(phi, field) {
            Err(Error::DenominatorDivisible { .. }) => PrimeCount {
                p,
                count: None,
                excluded: Some("coefficient denominator divisible by p".into()),
            },
            Err(e) => return Err(e),
            Ok(rel) => PrimeCount {
                p,
                count: Some(count_points(phi, theta, p)?),
                excluded: rel
                    .is_degenerate()
                    .then(|| "a relation coefficient vanishes mod p".into()),
            },
        };
        counts.push(entry);
    }
    let usable: Vec<(Rational, Rational)> = counts
        .iter()
        .filter(|c| c.excluded.is_none())
        .map(|c| {
            (
                Rational::from_integer(c.p as i64),
                Rational::from_integer(c.count.unwrap() as i64),
            )
        })
        .collect();
    let (polynomial, status) = if usable.len() < 4 {
        (None, FitStatus::InsufficientUsablePrimes)
    } else {
        let poly = lagrange(&usable[..4]);
        if usable[4..].iter().all(|(x, y)| eval_poly(&poly, x) == *y) {
            let extra = usable.len() - 4;
            (Some(poly), FitStatus::Fitted { extra_checks: extra })
        } else {
            (None, FitStatus::NoPolynomialFit)
        }
    };
    let euler_number = polynomial.as_ref().map(|c| eval_poly(c, &Rational::one()));
    let matches_resolved_conifold = counts
        .iter()
        .all(|c| c.count.is_none_or(|n| n == (c.p + 1) * c.p * c.p));
    Ok(CountReport {
        potential: phi.render(),
        theta: theta.clone(),
        counts,
        polynomial,
        status,
        euler_number,
        matches_resolved_conifold,
    })
}
