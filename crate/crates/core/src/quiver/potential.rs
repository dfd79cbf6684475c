use std::collections::BTreeMap;

use super::{AlgebraElement, Path, Quiver};
use crate::arith::{GaussianRational, Rational};
use crate::error::{Error, Result};

/// Linear combination of cyclic words up to rotation.
///
/// A class with coefficient `c` stands for the sum of all `n` rotations of its
/// representative, each with coefficient `c` (rotations may repeat when the
/// word is periodic). Representatives are the lexicographically least
/// rotation by arrow id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicPotential {
    quiver: Quiver,
    classes: BTreeMap<Vec<usize>, Rational>,
}

fn rotate(word: &[usize], r: usize) -> Vec<usize> {
    let mut w = word[r..].to_vec();
    w.extend_from_slice(&word[..r]);
    w
}

fn canonical_rotation(word: &[usize]) -> Vec<usize> {
    (0..word.len()).map(|r| rotate(word, r)).min().unwrap_or_default()
}

fn period(word: &[usize]) -> usize {
    (1..=word.len())
        .find(|&k| word.len().is_multiple_of(k) && rotate(word, k) == word)
        .unwrap_or(0)
}

impl CyclicPotential {
    pub fn zero(quiver: Quiver) -> Self {
        CyclicPotential {
            quiver,
            classes: BTreeMap::new(),
        }
    }

    /// `Φ₀ = a1 b1 a2 b2 − a1 b2 a2 b1` on the conifold quiver.
    pub fn conifold_standard() -> Self {
        let mut phi = CyclicPotential::zero(Quiver::conifold());
        phi.add_named(&["a1", "b1", "a2", "b2"], Rational::one()).unwrap();
        phi.add_named(&["a1", "b2", "a2", "b1"], -Rational::one()).unwrap();
        phi
    }

    /// `α a1b1a1b1 + β a1b2a1b2 + γ a2b1a2b1 + δ a2b2a2b2`.
    pub fn diagonal(coeffs: [Rational; 4]) -> Self {
        let mut phi = CyclicPotential::zero(Quiver::conifold());
        let words = [["a1", "b1"], ["a1", "b2"], ["a2", "b1"], ["a2", "b2"]];
        for (w, c) in words.iter().zip(coeffs) {
            phi.add_named(&[w[0], w[1], w[0], w[1]], c).unwrap();
        }
        phi
    }

    /// Builds a potential from `(word, coefficient)` terms over arrow names.
    pub fn from_terms<S: AsRef<str>>(quiver: Quiver, terms: &[(Vec<S>, Rational)]) -> Result<Self> {
        let mut phi = CyclicPotential::zero(quiver);
        for (w, c) in terms {
            phi.add_named(w, c.clone())?;
        }
        Ok(phi)
    }

    pub fn add_named<S: AsRef<str>>(&mut self, word: &[S], c: Rational) -> Result<()> {
        let ids = word
            .iter()
            .map(|n| self.quiver.arrow(n.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        self.add_word(&ids, c)
    }

    pub fn add_word(&mut self, word: &[usize], c: Rational) -> Result<()> {
        let path = Path::from_arrows(&self.quiver, word.to_vec())?;
        if path.source() != path.target() {
            return Err(Error::NotCyclic(path.render(&self.quiver)));
        }
        let key = canonical_rotation(word);
        let entry = self.classes.entry(key.clone()).or_insert_with(Rational::zero);
        *entry += &c;
        if entry.is_zero() {
            self.classes.remove(&key);
        }
        Ok(())
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn classes(&self) -> &BTreeMap<Vec<usize>, Rational> {
        &self.classes
    }

    pub fn is_zero(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn word_names(&self, word: &[usize]) -> Vec<String> {
        word.iter()
            .map(|&a| self.quiver.arrow_info(a).name.clone())
            .collect()
    }

    /// Common word length; `None` for the zero potential.
    pub fn degree(&self) -> Result<Option<usize>> {
        let mut lens = self.classes.keys().map(Vec::len);
        let Some(d) = lens.next() else {
            return Ok(None);
        };
        if lens.all(|l| l == d) {
            Ok(Some(d))
        } else {
            Err(Error::Inhomogeneous)
        }
    }

    /// Rotation-expanded form: word → summed coefficient over all rotations.
    pub fn expanded(&self) -> BTreeMap<Vec<usize>, Rational> {
        let mut out: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
        for (w, c) in &self.classes {
            for r in 0..w.len() {
                *out.entry(rotate(w, r)).or_insert_with(Rational::zero) += c;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Inverse of [`expanded`](Self::expanded) on rotation-invariant input.
    pub fn from_expanded(quiver: Quiver, expanded: &BTreeMap<Vec<usize>, Rational>) -> Result<Self> {
        let mut phi = CyclicPotential::zero(quiver);
        for (w, c) in expanded {
            if *w == canonical_rotation(w) {
                let k = Rational::new(period(w) as i64, w.len() as i64);
                phi.add_word(w, c * &k)?;
            }
        }
        Ok(phi)
    }

    /// Same words, reinterpreted on another quiver by arrow name.
    pub fn on_quiver(&self, target: &Quiver) -> Result<Self> {
        let mut phi = CyclicPotential::zero(target.clone());
        for (w, c) in &self.classes {
            phi.add_named(&self.word_names(w), c.clone())?;
        }
        Ok(phi)
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.classes
            .iter()
            .map(|(w, c)| format!("({}) {}", c, self.word_names(w).join(" ")))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn derivative_by_id(phi: &CyclicPotential, arrow: usize) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (w, c) in phi.expanded() {
        if w[0] != arrow {
            continue;
        }
        let rest = if w.len() == 1 {
            Path::trivial(phi.quiver.arrow_info(arrow).source)
        } else {
            Path::from_arrows(&phi.quiver, w[1..].to_vec()).expect("subpath of a cycle")
        };
        out.add_term(rest, GaussianRational::real(c));
    }
    out
}

/// Strips a leading `arrow` from every word of the expanded potential.
pub fn partial_derivative(phi: &CyclicPotential, arrow: &str) -> Result<AlgebraElement> {
    Ok(derivative_by_id(phi, phi.quiver.arrow(arrow)?))
}

/// The nonzero derivatives by every arrow, in arrow order.
pub fn jacobi_generators(phi: &CyclicPotential) -> Vec<AlgebraElement> {
    (0..phi.quiver.arrows().len())
        .map(|a| derivative_by_id(phi, a))
        .filter(|r| !r.is_zero())
        .collect()
}

/// Pull-back to [`Quiver::double_cover`]. Every expanded word is lifted from
/// each sheet; lifts that do not close up are dropped (only words with an even
/// number of `ab` pairs survive).
pub fn potential_double_cover(phi: &CyclicPotential) -> Result<CyclicPotential> {
    if phi.quiver != Quiver::conifold() {
        return Err(Error::WrongQuiver(
            "pull-back is defined for the conifold quiver".into(),
        ));
    }
    let cover = Quiver::double_cover();
    let lift_of = |base: usize, source: usize| -> usize {
        let name = &phi.quiver.arrow_info(base).name;
        cover
            .arrows()
            .iter()
            .position(|a| a.source == source && a.name.trim_end_matches('\'') == name)
            .expect("cover has a lift from every vertex over the base source")
    };
    let mut lifted = BTreeMap::new();
    for (w, c) in phi.expanded() {
        let first = *w.last().unwrap();
        let base_source = phi.quiver.arrow_info(first).source;
        for (start, v) in cover.vertices().iter().enumerate() {
            // v_{k,s} lies over v_k
            if v[..2] != phi.quiver.vertices()[base_source] {
                continue;
            }
            let mut at = start;
            let mut word = vec![0; w.len()];
            for (k, &a) in w.iter().enumerate().rev() {
                let l = lift_of(a, at);
                word[k] = l;
                at = cover.arrow_info(l).target;
            }
            if at == start {
                *lifted.entry(word).or_insert_with(Rational::zero) += &c;
            }
        }
    }
    CyclicPotential::from_expanded(cover, &lifted)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single(word: &[&str]) -> CyclicPotential {
        let mut phi = CyclicPotential::zero(Quiver::conifold());
        phi.add_named(word, Rational::one()).unwrap();
        phi
    }

    #[test]
    fn canonical_classes() {
        let mut phi = single(&["b1", "a1", "b1", "a1"]);
        assert_eq!(phi, single(&["a1", "b1", "a1", "b1"]));
        phi.add_named(&["a1", "b1", "a1", "b1"], -Rational::one()).unwrap();
        assert!(phi.is_zero());
        let mut bad = CyclicPotential::zero(Quiver::conifold());
        assert!(bad.add_named(&["a1", "a2"], Rational::one()).is_err());
    }

    #[test]
    fn expanded_round_trip() {
        let phi = CyclicPotential::conifold_standard();
        assert_eq!(phi.expanded().len(), 8);
        let back = CyclicPotential::from_expanded(Quiver::conifold(), &phi.expanded()).unwrap();
        assert_eq!(back, phi);
        let per = single(&["a1", "b1", "a1", "b1"]);
        assert_eq!(per.expanded().values().next().unwrap(), &Rational::from_integer(2));
        let back = CyclicPotential::from_expanded(Quiver::conifold(), &per.expanded()).unwrap();
        assert_eq!(back, per);
    }

    #[test]
    fn derivatives_of_the_conifold_potential() {
        let phi = CyclicPotential::conifold_standard();
        let q = phi.quiver().clone();
        let d = partial_derivative(&phi, "a1").unwrap();
        let expected = AlgebraElement::from_terms([
            (Path::from_names(&q, &["b1", "a2", "b2"]).unwrap(), GaussianRational::one()),
            (
                Path::from_names(&q, &["b2", "a2", "b1"]).unwrap(),
                GaussianRational::from_integer(-1),
            ),
        ]);
        assert_eq!(d, expected);
        assert_eq!(jacobi_generators(&phi).len(), 4);
        assert!(partial_derivative(&phi, "c9").is_err());
    }

    #[test]
    fn derivatives_of_a_square() {
        let phi = single(&["a1", "b1", "a1", "b1"]);
        let q = phi.quiver().clone();
        assert!(partial_derivative(&phi, "a2").unwrap().is_zero());
        let d = partial_derivative(&phi, "a1").unwrap();
        let p = Path::from_names(&q, &["b1", "a1", "b1"]).unwrap();
        assert_eq!(d, AlgebraElement::from_terms([(p, GaussianRational::from_integer(2))]));
        assert_eq!(jacobi_generators(&phi).len(), 2);
        assert!(jacobi_generators(&CyclicPotential::zero(q)).is_empty());
    }

    #[test]
    fn double_cover_lifts() {
        let lifted = potential_double_cover(&CyclicPotential::conifold_standard()).unwrap();
        assert_eq!(lifted.classes().len(), 4);
        assert!(lifted.classes().values().all(|c| c.is_one() || *c == -Rational::one()));

        let sq = potential_double_cover(&single(&["a1", "b1", "a1", "b1"])).unwrap();
        let mut expected = CyclicPotential::zero(Quiver::double_cover());
        expected.add_named(&["a1", "b1'", "a1'", "b1"], Rational::one()).unwrap();
        expected.add_named(&["a1'", "b1", "a1", "b1'"], Rational::one()).unwrap();
        assert_eq!(sq, expected);

        let zero = CyclicPotential::zero(Quiver::conifold());
        assert!(potential_double_cover(&zero).unwrap().is_zero());
        assert!(potential_double_cover(&CyclicPotential::zero(Quiver::framed_conifold())).is_err());
    }
}
