//! Small dense matrices with polynomial entries.
//!
//! Used for presentation matrices, Koszul differentials and their
//! transposes. Sizes stay tiny (dozens of rows at most), so a row-major
//! `Vec` with no cleverness is the right tool.

use crate::freemod::FreeElement;
use crate::monomial::ModuleOrder;
use crate::poly::{PolyRing, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    nrows: usize,
    ncols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zero(nrows: usize, ncols: usize) -> PolyMatrix {
        PolyMatrix {
            nrows,
            ncols,
            entries: vec![Polynomial::default(); nrows * ncols],
        }
    }

    /// Builds from column elements of a free module of rank `nrows`.
    pub fn from_columns(ring: &PolyRing, nrows: usize, cols: &[FreeElement]) -> PolyMatrix {
        let mut m = PolyMatrix::zero(nrows, cols.len());
        for (j, v) in cols.iter().enumerate() {
            for i in 0..nrows {
                *m.at_mut(i, j) = v.component(ring, i);
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn at(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.ncols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Polynomial {
        &mut self.entries[i * self.ncols + j]
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut t = PolyMatrix::zero(self.ncols, self.nrows);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    pub fn column(&self, ring: &PolyRing, ord: &ModuleOrder, j: usize) -> FreeElement {
        let comps: Vec<Polynomial> = (0..self.nrows).map(|i| self.at(i, j).clone()).collect();
        FreeElement::from_components(ring, ord, &comps)
    }

    pub fn columns(&self, ring: &PolyRing, ord: &ModuleOrder) -> Vec<FreeElement> {
        (0..self.ncols).map(|j| self.column(ring, ord, j)).collect()
    }

    pub fn mul(&self, ring: &PolyRing, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.ncols, other.nrows);
        let mut out = PolyMatrix::zero(self.nrows, other.ncols);
        for i in 0..self.nrows {
            for j in 0..other.ncols {
                let mut acc = ring.zero();
                for k in 0..self.ncols {
                    acc = ring.add(&acc, &ring.mul(self.at(i, k), other.at(k, j)));
                }
                *out.at_mut(i, j) = acc;
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|p| p.is_zero())
    }

    pub fn delete_row(&self, i: usize) -> PolyMatrix {
        let mut m = PolyMatrix::zero(self.nrows - 1, self.ncols);
        for (ii, src) in (0..self.nrows).filter(|&r| r != i).enumerate() {
            for j in 0..self.ncols {
                *m.at_mut(ii, j) = self.at(src, j).clone();
            }
        }
        m
    }

    pub fn delete_col(&self, j: usize) -> PolyMatrix {
        let mut m = PolyMatrix::zero(self.nrows, self.ncols - 1);
        for i in 0..self.nrows {
            for (jj, src) in (0..self.ncols).filter(|&c| c != j).enumerate() {
                *m.at_mut(i, jj) = self.at(i, src).clone();
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::monomial::{ModuleOrder, MonomialOrder};

    #[test]
    fn transpose_and_mul() {
        let r = PolyRing::new(
            Field::new(101).unwrap(),
            vec!["x".into(), "y".into()],
            MonomialOrder::GrevLex,
        )
        .unwrap();
        let ord = ModuleOrder::Pot(r.order().clone());
        // columns (x, y) and (y, 0)
        let c0 = FreeElement::from_components(&r, &ord, &[r.var(0), r.var(1)]);
        let c1 = FreeElement::from_components(&r, &ord, &[r.var(1), r.zero()]);
        let m = PolyMatrix::from_columns(&r, 2, &[c0.clone(), c1]);
        assert_eq!(m.at(0, 0), &r.var(0));
        assert_eq!(m.at(1, 1), &r.zero());
        let t = m.transpose();
        assert_eq!(t.at(0, 1), &r.var(1));
        let p = t.mul(&r, &m);
        // (t m)[0][0] = x^2 + y^2
        assert_eq!(
            p.at(0, 0),
            &r.add(&r.pow(&r.var(0), 2), &r.pow(&r.var(1), 2))
        );
        assert_eq!(m.column(&r, &ord, 0), c0);
    }
}
