//! Koszul complexes on finitely presented modules.
//!
//! `K_j(f; M)` is modeled on the ambient free module `F^{C(c, j)}`, one
//! block per `j`-subset of the elements, with the relation submodule
//! repeated in every block. Slot `s` and inner position `v` live at flat
//! position `s * rank + v`. Homology is a kernel-over-image subquotient:
//! kernels come from a syzygy computation against the downstream relation
//! block, images from the next differential's columns.
//!
//! The alternating sum of homology lengths is the multiplicity of the
//! element system when it is a system of parameters.

use crate::error::{EngineError, Result};
use crate::fpmodule::FPModule;
use crate::freemod::{self, FreeElement};
use crate::poly::{Homogeneity, PolyRing, Polynomial};
use crate::submodule::{self, canonical_order, Length};
use std::sync::Arc;

/// All `j`-subsets of `0..c`, lexicographically.
fn combinations(c: usize, j: usize) -> Vec<Vec<usize>> {
    if j > c {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(j);
    fn rec(out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>, start: usize, c: usize, j: usize) {
        if cur.len() == j {
            out.push(cur.clone());
            return;
        }
        for i in start..c {
            cur.push(i);
            rec(out, cur, i + 1, c, j);
            cur.pop();
        }
    }
    rec(&mut out, &mut cur, 0, c, j);
    out
}

pub struct KoszulComplex {
    ring: Arc<PolyRing>,
    polys: Vec<Polynomial>,
    poly_degrees: Vec<i64>,
    rank: usize,
    base_degrees: Vec<i64>,
    relations: Vec<FreeElement>,
    subsets: Vec<Vec<Vec<usize>>>,
}

impl KoszulComplex {
    pub fn new(module: &FPModule, polys: &[Polynomial]) -> Result<KoszulComplex> {
        let mut poly_degrees = Vec::with_capacity(polys.len());
        for p in polys {
            match p.homogeneity() {
                Homogeneity::Degree(d) => poly_degrees.push(d),
                _ => {
                    return Err(EngineError::NonHomogeneous(
                        "Koszul complexes need nonzero homogeneous elements".into(),
                    ))
                }
            }
        }
        let c = polys.len();
        let subsets = (0..=c).map(|j| combinations(c, j)).collect();
        Ok(KoszulComplex {
            ring: module.ring().clone(),
            polys: polys.to_vec(),
            poly_degrees,
            rank: module.rank(),
            base_degrees: module.degrees().to_vec(),
            relations: module.relations().generators().to_vec(),
            subsets,
        })
    }

    /// Number of elements `c`; levels run `0..=c`.
    pub fn levels(&self) -> usize {
        self.polys.len()
    }

    fn slot_count(&self, j: usize) -> usize {
        self.subsets[j].len()
    }

    pub fn ambient_rank(&self, j: usize) -> usize {
        self.slot_count(j) * self.rank
    }

    pub fn ambient_degrees(&self, j: usize) -> Vec<i64> {
        let mut degs = Vec::with_capacity(self.ambient_rank(j));
        for s in &self.subsets[j] {
            let shift: i64 = s.iter().map(|&i| self.poly_degrees[i]).sum();
            for v in 0..self.rank {
                degs.push(self.base_degrees[v] + shift);
            }
        }
        degs
    }

    fn slot_index(&self, j: usize, subset: &[usize]) -> usize {
        self.subsets[j]
            .iter()
            .position(|s| s == subset)
            .expect("subset enumeration is complete")
    }

    /// Columns of `d_j : K_j -> K_{j-1}`, indexed like the `K_j` basis.
    pub fn differential(&self, j: usize) -> Vec<FreeElement> {
        assert!(j >= 1 && j <= self.levels());
        let ord = canonical_order(&self.ring);
        let mut cols = Vec::with_capacity(self.ambient_rank(j));
        for subset in &self.subsets[j] {
            for v in 0..self.rank {
                let mut col = FreeElement::zero();
                for (t, &i) in subset.iter().enumerate() {
                    let smaller: Vec<usize> = subset.iter().copied().filter(|&k| k != i).collect();
                    let slot = self.slot_index(j - 1, &smaller);
                    let target = FreeElement::basis(&self.ring, slot * self.rank + v);
                    let mut f = self.polys[i].clone();
                    if t % 2 == 1 {
                        f = self.ring.neg(&f);
                    }
                    col = freemod::add(
                        &self.ring,
                        &ord,
                        &col,
                        &freemod::poly_mul(&self.ring, &ord, &f, &target),
                    );
                }
                cols.push(col);
            }
        }
        cols
    }

    /// The module relations repeated in every slot of level `j`.
    pub fn relations_block(&self, j: usize) -> Vec<FreeElement> {
        let mut out = Vec::with_capacity(self.slot_count(j) * self.relations.len());
        for s in 0..self.slot_count(j) {
            for p in &self.relations {
                out.push(p.shift_positions(s * self.rank));
            }
        }
        out
    }

    /// `d_j d_{j+1} = 0` on the nose (ambient free modules).
    pub fn is_complex(&self) -> bool {
        let ord = canonical_order(&self.ring);
        for j in 1..self.levels() {
            let down = self.differential(j);
            for col in self.differential(j + 1) {
                let mut acc = FreeElement::zero();
                for (idx, coeff) in col
                    .components(&self.ring, self.ambient_rank(j))
                    .iter()
                    .enumerate()
                {
                    if coeff.is_zero() {
                        continue;
                    }
                    acc = freemod::add(
                        &self.ring,
                        &ord,
                        &acc,
                        &freemod::poly_mul(&self.ring, &ord, coeff, &down[idx]),
                    );
                }
                if !acc.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// `H_j(f; M)` as a finitely presented module.
    pub fn homology(&self, j: usize) -> Result<FPModule> {
        let c = self.levels();
        assert!(j <= c);
        let degs_j = self.ambient_degrees(j);
        let kernel: Vec<FreeElement> = if j == 0 {
            (0..self.ambient_rank(0))
                .map(|i| FreeElement::basis(&self.ring, i))
                .collect()
        } else {
            let cols = self.differential(j);
            let target = self.relations_block(j - 1);
            submodule::preimage_gens(&self.ring, self.ambient_rank(j - 1), &cols, &target)
        };
        let mut image = if j < c {
            self.differential(j + 1)
        } else {
            Vec::new()
        };
        image.extend(self.relations_block(j));
        FPModule::subquotient(self.ring.clone(), &degs_j, &kernel, &image)
    }

    /// Lengths of all homology modules, `H_0` through `H_c`.
    pub fn homology_lengths(&self) -> Result<Vec<u64>> {
        let mut out = Vec::with_capacity(self.levels() + 1);
        for j in 0..=self.levels() {
            match self.homology(j)?.length() {
                Length::Finite(n) => out.push(n),
                Length::Infinite => return Err(EngineError::InfiniteLength),
            }
        }
        Ok(out)
    }

    /// The alternating sum of homology lengths.
    pub fn euler_characteristic(&self) -> Result<i64> {
        let lens = self.homology_lengths()?;
        Ok(lens
            .iter()
            .enumerate()
            .map(|(j, &l)| if j % 2 == 0 { l as i64 } else { -(l as i64) })
            .sum())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::linalg;
    use crate::monomial::MonomialOrder;

    fn ring(vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(
            Field::new(0).unwrap(),
            vars.iter().map(|s| s.to_string()).collect(),
            MonomialOrder::GrevLex,
        )
        .unwrap()
    }

    #[test]
    fn combinations_are_lex_ordered() {
        assert_eq!(combinations(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(combinations(2, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn regular_sequence_has_no_higher_homology() {
        let r = ring(&["x", "y"]);
        let m = FPModule::free(r.clone(), vec![0]);
        let k = KoszulComplex::new(&m, &[r.var(0), r.var(1)]).unwrap();
        assert!(k.is_complex());
        assert_eq!(k.homology_lengths().unwrap(), vec![1, 0, 0]);
        assert_eq!(k.euler_characteristic().unwrap(), 1);
    }

    #[test]
    fn euler_characteristic_drops_to_multiplicity() {
        // M = R/(x^2, x y): chi(y; M) = 2 - 1 = 1
        let r = ring(&["x", "y"]);
        let m = FPModule::cyclic(
            r.clone(),
            &[r.pow(&r.var(0), 2), r.mul(&r.var(0), &r.var(1))],
        )
        .unwrap();
        let k = KoszulComplex::new(&m, &[r.var(1)]).unwrap();
        let lens = k.homology_lengths().unwrap();
        assert_eq!(lens, vec![2, 1]);
        assert_eq!(k.euler_characteristic().unwrap(), 1);
    }

    #[test]
    fn homology_agrees_with_graded_linear_algebra() {
        // middle homology of K(x, y; R/(x^2, x y)) two ways
        let r = ring(&["x", "y"]);
        let m = FPModule::cyclic(
            r.clone(),
            &[r.pow(&r.var(0), 2), r.mul(&r.var(0), &r.var(1))],
        )
        .unwrap();
        let k = KoszulComplex::new(&m, &[r.var(0), r.var(1)]).unwrap();
        let h1 = k.homology(1).unwrap();
        let lens = k.homology_lengths().unwrap();
        let hp = linalg::HomologyPiece {
            ring: &r,
            mid_degs: &k.ambient_degrees(1),
            mid_rel: &k.relations_block(1),
            down_cols: &k.differential(1),
            down_degs: &k.ambient_degrees(0),
            down_rel: &k.relations_block(0),
            up_cols: &k.differential(2),
        };
        let oracle = linalg::homology_total_dim(&hp, 0, 8);
        assert_eq!(lens[1], oracle);
        assert_eq!(h1.length(), Length::Finite(oracle));
    }

    #[test]
    fn nonzero_middle_homology_detected() {
        // x is a zerodivisor on R/(x y): H_1(x, y; M) is nonzero
        let r = ring(&["x", "y"]);
        let m = FPModule::cyclic(r.clone(), &[r.mul(&r.var(0), &r.var(1))]).unwrap();
        let k = KoszulComplex::new(&m, &[r.var(0), r.var(1)]).unwrap();
        let lens = k.homology_lengths().unwrap();
        assert_eq!(lens[0], 1);
        assert!(lens[1] > 0);
        assert!(k.is_complex());
    }

    #[test]
    fn infinite_homology_rejected() {
        let r = ring(&["x", "y"]);
        let m = FPModule::cyclic(r.clone(), &[r.mul(&r.var(0), &r.var(1))]).unwrap();
        let k = KoszulComplex::new(&m, &[r.var(0)]).unwrap();
        assert!(matches!(
            k.homology_lengths(),
            Err(EngineError::InfiniteLength)
        ));
    }
}
