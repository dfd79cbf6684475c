use std::collections::HashMap;

use super::{jacobi_generators, CyclicPotential, Path};
use crate::arith::{GaussianRational, SparseEchelon};
use crate::error::{Error, Result};

/// Longest path length accepted by [`graded_dimension`].
pub const DEFAULT_LENGTH_BOUND: usize = 8;

/// Dimensions of `e_to · (ℂQ/(∂Φ))_ℓ · e_from` for `ℓ = 0..=max_length`.
///
/// The degree-ℓ part of the ideal is spanned by `p·r·q` over generators `r`
/// and composable paths `p, q` of complementary length; its rank is
/// subtracted from the number of paths.
pub fn graded_dimension(
    phi: &CyclicPotential,
    from: &str,
    to: &str,
    max_length: usize,
) -> Result<Vec<usize>> {
    if max_length > DEFAULT_LENGTH_BOUND {
        return Err(Error::LengthBound {
            requested: max_length,
            bound: DEFAULT_LENGTH_BOUND,
        });
    }
    let q = phi.quiver();
    let (from, to) = (q.vertex(from)?, q.vertex(to)?);
    let rel_len = phi.degree()?.map(|d| d - 1);
    let gens = jacobi_generators(phi);

    let mut dims = Vec::with_capacity(max_length + 1);
    for len in 0..=max_length {
        let basis = q.paths(from, to, len);
        let index: HashMap<&Path, usize> = basis.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut ech = SparseEchelon::<GaussianRational>::new();
        if let Some(r_len) = rel_len.filter(|&r| r <= len) {
            for r in &gens {
                let (rs, rt) = {
                    let p = r.terms().keys().next().unwrap();
                    (p.source(), p.target())
                };
                for left in 0..=len - r_len {
                    let right = len - r_len - left;
                    let qs = q.paths(from, rs, right);
                    let ps = q.paths(rt, to, left);
                    for p in &ps {
                        for qq in &qs {
                            let row = r.terms().iter().map(|(path, c)| {
                                let full = p.concat(path).and_then(|x| x.concat(qq)).unwrap();
                                (index[&full], c.clone())
                            });
                            ech.insert(row);
                            if ech.rank() == basis.len() {
                                break;
                            }
                        }
                    }
                }
            }
        }
        dims.push(basis.len() - ech.rank());
    }
    Ok(dims)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    #[test]
    fn conifold_hilbert_function() {
        let phi = CyclicPotential::conifold_standard();
        assert_eq!(graded_dimension(&phi, "v0", "v0", 4).unwrap(), vec![1, 0, 4, 0, 9]);
        assert_eq!(graded_dimension(&phi, "v0", "v1", 3).unwrap(), vec![0, 2, 0, 6]);
    }

    #[test]
    fn free_path_counts_without_relations() {
        let phi = CyclicPotential::zero(Quiver::conifold());
        assert_eq!(graded_dimension(&phi, "v0", "v0", 4).unwrap(), vec![1, 0, 4, 0, 16]);
    }

    #[test]
    fn guards() {
        let phi = CyclicPotential::conifold_standard();
        assert!(matches!(
            graded_dimension(&phi, "v0", "v0", 9),
            Err(Error::LengthBound { .. })
        ));
        let mut mixed = phi.clone();
        mixed.add_named(&["a1", "b1"], crate::arith::Rational::one()).unwrap();
        assert_eq!(graded_dimension(&mixed, "v0", "v0", 2), Err(Error::Inhomogeneous));
        assert!(graded_dimension(&phi, "v0", "w", 2).is_err());
    }
}
