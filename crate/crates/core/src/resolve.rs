//! Graded free resolutions by iterated syzygies.
//!
//! Each syzygy step produces a (possibly redundant) presentation of the
//! kernel; a pruning pass then cancels every constant entry by Gaussian
//! elimination on the complex, so the finished object is the minimal
//! graded resolution. Pruning a unit at `(i, j)` of `d_k` takes the Schur
//! complement in `d_k`, deletes column `i` of `d_{k-1}` and row `j` of
//! `d_{k+1}`, and keeps everything else; both compositions stay zero and
//! the homotopy type is unchanged.

use crate::error::{EngineError, Result};
use crate::freemod::FreeElement;
use crate::matrix::PolyMatrix;
use crate::poly::{Homogeneity, PolyRing};
use crate::submodule::{self, canonical_order};
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct Resolution {
    ring: Arc<PolyRing>,
    /// Basis degrees of `F_0, ..., F_len`.
    degrees: Vec<Vec<i64>>,
    /// `maps[k-1]` is `d_k : F_k -> F_{k-1}` for `k = 1..=len`.
    maps: Vec<PolyMatrix>,
}

impl Resolution {
    /// Minimal graded resolution of `coker(relations) = F_0 / N` where
    /// `F_0` has the given basis degrees.
    pub fn compute(
        ring: Arc<PolyRing>,
        degrees: Vec<i64>,
        relations: &[FreeElement],
    ) -> Result<Resolution> {
        let ord = canonical_order(&ring);
        let rank0 = degrees.len();
        for v in relations {
            if v.max_pos_plus_one() > rank0 {
                return Err(EngineError::RankMismatch {
                    expected: rank0,
                    got: v.max_pos_plus_one(),
                });
            }
            if matches!(v.homogeneity(&degrees), Homogeneity::No) {
                return Err(EngineError::NonHomogeneous(
                    "free resolutions need homogeneous relations".into(),
                ));
            }
        }
        let mut res = Resolution {
            ring: ring.clone(),
            degrees: vec![degrees],
            maps: Vec::new(),
        };
        let mut cols: Vec<FreeElement> =
            relations.iter().filter(|v| !v.is_zero()).cloned().collect();
        loop {
            if cols.is_empty() {
                break;
            }
            let level = res.maps.len();
            let tgt_degs = res.degrees[level].clone();
            let mut col_degs = Vec::with_capacity(cols.len());
            for v in &cols {
                match v.homogeneity(&tgt_degs) {
                    Homogeneity::Degree(d) => col_degs.push(d),
                    _ => unreachable!("syzygies of homogeneous columns are homogeneous"),
                }
            }
            res.maps
                .push(PolyMatrix::from_columns(&ring, tgt_degs.len(), &cols));
            res.degrees.push(col_degs);
            res.prune();
            assert!(
                res.maps.len() <= ring.nvars() + 1,
                "pruned resolution exceeded the syzygy bound"
            );
            let Some(last) = res.maps.last() else { break };
            if last.ncols() == 0 {
                break;
            }
            let rank = last.nrows();
            cols = submodule::syzygies(&ring, rank, &last.columns(&ring, &ord));
        }
        res.trim();
        Ok(res)
    }

    /// Cancels constant entries anywhere in the complex until none remain.
    fn prune(&mut self) {
        let field = self.ring.field().clone();
        'outer: loop {
            for k in 0..self.maps.len() {
                let m = &self.maps[k];
                for i in 0..m.nrows() {
                    for j in 0..m.ncols() {
                        if m.at(i, j).as_constant().is_some() {
                            let c = m.at(i, j).as_constant().unwrap().clone();
                            let cinv = field.inv(&c);
                            self.cancel(k, i, j, &cinv);
                            continue 'outer;
                        }
                    }
                }
            }
            break;
        }
    }

    fn cancel(&mut self, k: usize, i: usize, j: usize, cinv: &crate::field::Coeff) {
        let ring = self.ring.clone();
        let m = &mut self.maps[k];
        // Schur complement: m[i'][j'] -= m[i'][j] * cinv * m[i][j']
        let row_i: Vec<_> = (0..m.ncols()).map(|j2| m.at(i, j2).clone()).collect();
        let col_j: Vec<_> = (0..m.nrows()).map(|i2| m.at(i2, j).clone()).collect();
        for i2 in 0..m.nrows() {
            if i2 == i {
                continue;
            }
            for j2 in 0..m.ncols() {
                if j2 == j {
                    continue;
                }
                let corr = ring.scale(cinv, &ring.mul(&col_j[i2], &row_i[j2]));
                *m.at_mut(i2, j2) = ring.sub(m.at(i2, j2), &corr);
            }
        }
        self.maps[k] = self.maps[k].delete_row(i).delete_col(j);
        self.degrees[k].remove(i);
        self.degrees[k + 1].remove(j);
        if k > 0 {
            self.maps[k - 1] = self.maps[k - 1].delete_col(i);
        }
        if k + 1 < self.maps.len() {
            self.maps[k + 1] = self.maps[k + 1].delete_row(j);
        }
    }

    /// Drops trailing zero free modules.
    fn trim(&mut self) {
        while let Some(last) = self.maps.last() {
            if last.ncols() == 0 {
                self.maps.pop();
                self.degrees.pop();
            } else {
                break;
            }
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    /// Homological length: largest `k` with `F_k` nonzero.
    pub fn length(&self) -> usize {
        self.degrees.len() - 1
    }

    /// Ranks of `F_0, ..., F_len`.
    pub fn betti(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.len()).collect()
    }

    pub fn degrees(&self, k: usize) -> &[i64] {
        &self.degrees[k]
    }

    /// The differential `d_k : F_k -> F_{k-1}`, `1 <= k <= length`.
    pub fn map(&self, k: usize) -> &PolyMatrix {
        &self.maps[k - 1]
    }

    /// All compositions `d_k d_{k+1}` vanish.
    pub fn is_complex(&self) -> bool {
        for k in 1..self.maps.len() {
            if !self.maps[k - 1].mul(&self.ring, &self.maps[k]).is_zero() {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::linalg;
    use crate::monomial::MonomialOrder;
    use crate::poly::Polynomial;

    fn ring(vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(
            Field::new(0).unwrap(),
            vars.iter().map(|s| s.to_string()).collect(),
            MonomialOrder::GrevLex,
        )
        .unwrap()
    }

    fn cyclic_res(r: &Arc<PolyRing>, gens: &[Polynomial]) -> Resolution {
        let rel: Vec<FreeElement> = gens.iter().map(|p| FreeElement::from_poly(p, 0)).collect();
        Resolution::compute(r.clone(), vec![0], &rel).unwrap()
    }

    #[test]
    fn koszul_shape_for_two_variables() {
        let r = ring(&["x", "y"]);
        let res = cyclic_res(&r, &[r.var(0), r.var(1)]);
        assert_eq!(res.betti(), vec![1, 2, 1]);
        assert_eq!(res.degrees(1), &[1, 1]);
        assert_eq!(res.degrees(2), &[2]);
        assert!(res.is_complex());
    }

    #[test]
    fn two_planes_resolution() {
        // (a, b) /\ (c, d) = (ac, ad, bc, bd): betti numbers 1, 4, 4, 1
        let r = ring(&["a", "b", "c", "d"]);
        let (a, b, c, d) = (r.var(0), r.var(1), r.var(2), r.var(3));
        let res = cyclic_res(
            &r,
            &[r.mul(&a, &c), r.mul(&a, &d), r.mul(&b, &c), r.mul(&b, &d)],
        );
        assert_eq!(res.betti(), vec![1, 4, 4, 1]);
        assert_eq!(res.degrees(1), &[2, 2, 2, 2]);
        assert_eq!(res.degrees(2), &[3, 3, 3, 3]);
        assert_eq!(res.degrees(3), &[4]);
        assert!(res.is_complex());
        // generic-point exactness: rank d_k + rank d_{k+1} = rank F_k
        let pt: Vec<_> = [2i64, 3, 5, 7]
            .iter()
            .map(|&n| r.field().from_i64(n))
            .collect();
        let ord = canonical_order(&r);
        for k in 1..=2 {
            let dk =
                linalg::evaluated_rank(&r, res.betti()[k - 1], &res.map(k).columns(&r, &ord), &pt);
            let dk1 =
                linalg::evaluated_rank(&r, res.betti()[k], &res.map(k + 1).columns(&r, &ord), &pt);
            assert_eq!(dk + dk1, res.betti()[k]);
        }
    }

    #[test]
    fn redundant_generators_prune_away() {
        // relations (x, x) present the same module as (x)
        let r = ring(&["x", "y"]);
        let rel = vec![
            FreeElement::from_poly(&r.var(0), 0),
            FreeElement::from_poly(&r.var(0), 0),
        ];
        let res = Resolution::compute(r.clone(), vec![0], &rel).unwrap();
        assert_eq!(res.betti(), vec![1, 1]);
        assert!(res.is_complex());
    }

    #[test]
    fn free_module_has_length_zero() {
        let r = ring(&["x", "y"]);
        let res = Resolution::compute(r.clone(), vec![0, 1], &[]).unwrap();
        assert_eq!(res.betti(), vec![2]);
        assert_eq!(res.length(), 0);
    }

    #[test]
    fn zero_module_collapses() {
        let r = ring(&["x", "y"]);
        let rel = vec![FreeElement::from_poly(&r.one(), 0)];
        let res = Resolution::compute(r.clone(), vec![0], &rel).unwrap();
        assert_eq!(res.betti(), vec![0]);
    }

    #[test]
    fn nonhomogeneous_relations_rejected() {
        let r = ring(&["x", "y"]);
        let rel = vec![FreeElement::from_poly(&r.add(&r.var(0), &r.one()), 0)];
        assert!(matches!(
            Resolution::compute(r.clone(), vec![0], &rel),
            Err(EngineError::NonHomogeneous(_))
        ));
    }
}
