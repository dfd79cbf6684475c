use std::collections::BTreeMap;

use super::Field;

/// Incrementally built row-echelon basis of sparse vectors indexed by `usize`.
/// Each stored row has a distinct pivot (its smallest index), with coefficient 1.
#[derive(Clone, Debug)]
pub struct SparseEchelon<T> {
    rows: BTreeMap<usize, BTreeMap<usize, T>>,
}

impl<T: Field> Default for SparseEchelon<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Field> SparseEchelon<T> {
    pub fn new() -> Self {
        SparseEchelon {
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; inserts the remainder when nonzero.
    /// Returns whether the rank grew.
    pub fn insert(&mut self, v: impl IntoIterator<Item = (usize, T)>) -> bool {
        let mut v: BTreeMap<usize, T> = v.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        while let Some((&lead, c)) = v.iter().next() {
            let Some(row) = self.rows.get(&lead) else {
                let inv = c.inv().unwrap();
                for x in v.values_mut() {
                    *x = x.clone() * inv.clone();
                }
                self.rows.insert(lead, v);
                return true;
            };
            let c = c.clone();
            for (k, r) in row {
                let e = v.entry(*k).or_insert_with(T::zero);
                *e = e.clone() - c.clone() * r.clone();
                if e.is_zero() {
                    v.remove(k);
                }
            }
        }
        false
    }
}
