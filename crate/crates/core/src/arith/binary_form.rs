use super::{Field, GaussianRational, UniPoly};
use crate::error::{Error, Result};

/// Homogeneous form of degree `d` in `u₁, u₂`; `coeffs[k]` multiplies `u₁ᵏ u₂^(d−k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    degree: usize,
    coeffs: Vec<GaussianRational>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<GaussianRational>) -> Self {
        assert!(!coeffs.is_empty(), "a form needs at least one coefficient");
        BinaryForm {
            degree: coeffs.len() - 1,
            coeffs,
        }
    }

    pub fn zero(degree: usize) -> Self {
        BinaryForm::new(vec![GaussianRational::zero(); degree + 1])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        BinaryForm::new(coeffs.iter().map(|&c| GaussianRational::from_integer(c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Field::is_zero)
    }

    /// Nonzero of degree 0.
    pub fn is_constant(&self) -> bool {
        self.degree == 0 && !self.is_zero()
    }

    pub fn eval(&self, u1: &GaussianRational, u2: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            acc = acc + c * &(u1.pow(k as i64) * u2.pow((self.degree - k) as i64));
        }
        acc
    }

    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        let mut out = vec![GaussianRational::zero(); self.degree + other.degree + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        BinaryForm::new(out)
    }

    /// Exponent of the largest power of `u₂` dividing a nonzero form.
    fn u2_multiplicity(&self) -> usize {
        self.coeffs.iter().rev().take_while(|c| c.is_zero()).count()
    }

    fn dehomogenize(&self) -> UniPoly<GaussianRational> {
        UniPoly::new(self.coeffs.clone())
    }

    /// Divisibility in ℚ(i)[u₁, u₂]. Every form divides the zero form.
    pub fn divides(&self, other: &BinaryForm) -> bool {
        if other.is_zero() {
            return true;
        }
        if self.is_zero() || self.degree > other.degree {
            return false;
        }
        self.u2_multiplicity() <= other.u2_multiplicity()
            && other.dehomogenize().div_rem(&self.dehomogenize()).1.is_zero()
    }
}

/// Greatest common divisor, monic in `u₁` after removing the `u₂`-power part.
/// All-zero input yields the zero form of degree 0.
pub fn binary_form_gcd(forms: &[BinaryForm]) -> Result<BinaryForm> {
    if forms.is_empty() {
        return Err(Error::EmptyInput("binary_form_gcd needs at least one form"));
    }
    let nonzero: Vec<&BinaryForm> = forms.iter().filter(|f| !f.is_zero()).collect();
    if nonzero.is_empty() {
        return Ok(BinaryForm::zero(0));
    }
    let m = nonzero.iter().map(|f| f.u2_multiplicity()).min().unwrap();
    let h = nonzero
        .iter()
        .fold(UniPoly::zero(), |acc, f| acc.gcd(&f.dehomogenize()));
    let e = h.degree().unwrap();
    let mut coeffs = h.coeffs().to_vec();
    coeffs.resize(e + m + 1, GaussianRational::zero());
    Ok(BinaryForm::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(c: &[i64]) -> BinaryForm {
        BinaryForm::from_ints(c)
    }

    #[test]
    fn documented_cases() {
        // u₁², u₂²
        assert_eq!(binary_form_gcd(&[f(&[0, 0, 1]), f(&[1, 0, 0])]).unwrap(), f(&[1]));
        // u₁u₂, u₁²
        assert_eq!(binary_form_gcd(&[f(&[0, 1, 0]), f(&[0, 0, 1])]).unwrap(), f(&[0, 1]));
        let s = f(&[1, 0, 1]);
        assert_eq!(binary_form_gcd(&[s.clone(), s.clone()]).unwrap(), s);
    }

    #[test]
    fn u2_factors_and_zero_forms() {
        // u₁u₂ and u₂² share u₂
        let g = binary_form_gcd(&[f(&[0, 1, 0]), f(&[1, 0, 0]), f(&[0, 0, 0])]).unwrap();
        assert_eq!(g, f(&[1, 0]));
        assert!(binary_form_gcd(&[f(&[0, 0])]).unwrap().is_zero());
        assert!(binary_form_gcd(&[]).is_err());
    }

    #[test]
    fn divisibility() {
        let h = f(&[1, 1]);
        let p = h.mul(&f(&[2, 0, 3]));
        assert!(h.divides(&p));
        assert!(!f(&[1, 0]).divides(&p));
        assert!(f(&[1, 0]).divides(&f(&[1, 0]).mul(&p)));
    }
}
