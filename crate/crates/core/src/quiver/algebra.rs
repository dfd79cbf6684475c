use std::collections::BTreeMap;

use super::{Path, Quiver};
use crate::arith::GaussianRational;

/// Finite linear combination of paths. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraElement {
    terms: BTreeMap<Path, GaussianRational>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_path(p: Path) -> Self {
        Self::from_terms([(p, GaussianRational::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Path, GaussianRational)>) -> Self {
        let mut e = Self::zero();
        for (p, c) in terms {
            e.add_term(p, c);
        }
        e
    }

    pub fn add_term(&mut self, p: Path, c: GaussianRational) {
        let entry = self.terms.entry(p).or_insert_with(GaussianRational::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> &BTreeMap<Path, GaussianRational> {
        &self.terms
    }

    pub fn coefficient(&self, p: &Path) -> GaussianRational {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &GaussianRational) -> AlgebraElement {
        AlgebraElement::from_terms(self.terms.iter().map(|(p, c)| (p.clone(), c * s)))
    }

    pub fn render(&self, q: &Quiver) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(p, c)| format!("({})·{}", c, p.render(q)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Bilinear extension of concatenation; incomposable pairs contribute nothing.
pub fn multiply(x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (p, c) in &x.terms {
        for (r, d) in &y.terms {
            if let Some(pr) = p.concat(r) {
                out.add_term(pr, c * d);
            }
        }
    }
    out
}
