//! Finitely presented graded modules `M = F / P`.
//!
//! A module fixes the ambient free rank, a degree for each basis element,
//! and the relation submodule. Ideals viewed as modules keep an embedding
//! map back to the ring so later code can relate the two pictures.
//!
//! Subquotients `(Z + B)/B` are turned back into presentations by taking
//! the chosen generators of `Z` as new basis elements and lifting the
//! membership conditions through a syzygy computation.

use crate::error::{EngineError, Result};
use crate::freemod::{self, FreeElement};
use crate::poly::{Homogeneity, PolyRing, Polynomial};
use crate::resolve::Resolution;
use crate::submodule::{self, canonical_order, Length, Submodule};
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct FPModule {
    ring: Arc<PolyRing>,
    rank: usize,
    degrees: Vec<i64>,
    relations: Submodule,
    /// For an ideal presented as a module: the ring element each basis
    /// vector stands for.
    embedding: Option<Vec<Polynomial>>,
}

impl FPModule {
    pub fn presentation(
        ring: Arc<PolyRing>,
        degrees: Vec<i64>,
        relations: Vec<FreeElement>,
    ) -> Result<FPModule> {
        let rank = degrees.len();
        let rel = Submodule::new(ring.clone(), rank.max(1), relations)?;
        if !rel.is_homogeneous(&pad(&degrees)) {
            return Err(EngineError::NonHomogeneous(
                "module relations must be homogeneous for the given degrees".into(),
            ));
        }
        Ok(FPModule {
            ring,
            rank,
            degrees,
            relations: rel,
            embedding: None,
        })
    }

    /// The free module with the given basis degrees.
    pub fn free(ring: Arc<PolyRing>, degrees: Vec<i64>) -> FPModule {
        let rank = degrees.len();
        let relations = Submodule::zero(ring.clone(), rank.max(1));
        FPModule {
            ring,
            rank,
            degrees,
            relations,
            embedding: None,
        }
    }

    /// The cyclic module `R / (gens)`.
    pub fn cyclic(ring: Arc<PolyRing>, gens: &[Polynomial]) -> Result<FPModule> {
        let relations = Submodule::ideal(ring.clone(), gens)?;
        if !relations.is_homogeneous(&[0]) {
            return Err(EngineError::NonHomogeneous(
                "ideal generators must be homogeneous".into(),
            ));
        }
        Ok(FPModule {
            ring,
            rank: 1,
            degrees: vec![0],
            relations,
            embedding: None,
        })
    }

    /// The ideal `(gens)` viewed as an `R`-module: generators become basis
    /// elements, relations are their syzygies, and the embedding into `R`
    /// is remembered.
    pub fn ideal_as_module(ring: Arc<PolyRing>, gens: &[Polynomial]) -> Result<FPModule> {
        let gens: Vec<Polynomial> = gens.iter().filter(|p| !p.is_zero()).cloned().collect();
        if gens.is_empty() {
            return Err(EngineError::RingConstruction(
                "an ideal viewed as a module needs at least one nonzero generator".into(),
            ));
        }
        let mut degrees = Vec::with_capacity(gens.len());
        for g in &gens {
            match g.homogeneity() {
                Homogeneity::Degree(d) => degrees.push(d),
                _ => {
                    return Err(EngineError::NonHomogeneous(
                        "ideal generators must be homogeneous".into(),
                    ))
                }
            }
        }
        let lifted: Vec<FreeElement> = gens.iter().map(|g| FreeElement::from_poly(g, 0)).collect();
        let syz = submodule::syzygies(&ring, 1, &lifted);
        let rank = gens.len();
        let relations = Submodule::new(ring.clone(), rank, syz)?;
        Ok(FPModule {
            ring,
            rank,
            degrees,
            relations,
            embedding: Some(gens),
        })
    }

    /// Presents `(<num> + <den>) / <den>` inside the graded free module
    /// with basis degrees `ambient_degrees`.
    pub fn subquotient(
        ring: Arc<PolyRing>,
        ambient_degrees: &[i64],
        num: &[FreeElement],
        den: &[FreeElement],
    ) -> Result<FPModule> {
        let num: Vec<FreeElement> = num.iter().filter(|v| !v.is_zero()).cloned().collect();
        let mut degrees = Vec::with_capacity(num.len());
        for z in &num {
            match z.homogeneity(ambient_degrees) {
                Homogeneity::Degree(d) => degrees.push(d),
                _ => {
                    return Err(EngineError::NonHomogeneous(
                        "subquotient generators must be homogeneous".into(),
                    ))
                }
            }
        }
        let relations = submodule::preimage_gens(&ring, ambient_degrees.len().max(1), &num, den);
        FPModule::presentation(ring, degrees, relations)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn relations(&self) -> &Submodule {
        &self.relations
    }

    pub fn embedding(&self) -> Option<&[Polynomial]> {
        self.embedding.as_deref()
    }

    pub fn length(&self) -> Length {
        if self.rank == 0 {
            return Length::Finite(0);
        }
        self.relations.quotient_length()
    }

    pub fn dim(&self) -> i64 {
        if self.rank == 0 {
            return -1;
        }
        self.relations.quotient_dim()
    }

    pub fn is_zero(&self) -> bool {
        (0..self.rank).all(|i| self.relations.contains(&FreeElement::basis(&self.ring, i)))
    }

    /// Normal form of an element against the relations.
    pub fn normal_form(&self, v: &FreeElement) -> FreeElement {
        self.relations.normal_form(v)
    }

    /// `M / (polys) M`: every `f e_i` becomes a relation.
    pub fn quotient_by_polys(&self, polys: &[Polynomial]) -> Result<FPModule> {
        let ord = canonical_order(&self.ring);
        let mut extra = Vec::with_capacity(polys.len() * self.rank);
        for f in polys {
            for i in 0..self.rank {
                extra.push(freemod::poly_mul(
                    &self.ring,
                    &ord,
                    f,
                    &FreeElement::basis(&self.ring, i),
                ));
            }
        }
        let relations = self.relations.plus_elements(&extra)?;
        Ok(FPModule {
            ring: self.ring.clone(),
            rank: self.rank,
            degrees: self.degrees.clone(),
            relations,
            embedding: self.embedding.clone(),
        })
    }

    /// `M / N` for a submodule `N` of the ambient free module given by
    /// explicit elements.
    pub fn quotient_by_elements(&self, elems: &[FreeElement]) -> Result<FPModule> {
        let relations = self.relations.plus_elements(elems)?;
        Ok(FPModule {
            ring: self.ring.clone(),
            rank: self.rank,
            degrees: self.degrees.clone(),
            relations,
            embedding: None,
        })
    }

    /// The kernel `0 :_M f` of multiplication by `f`, as a module.
    pub fn kernel_of_mult(&self, f: &Polynomial) -> Result<FPModule> {
        let colon = self.relations.colon_poly(f)?;
        FPModule::subquotient(
            self.ring.clone(),
            &self.degrees,
            colon.generators(),
            self.relations.generators(),
        )
    }

    /// The annihilator ideal `0 :_R M`.
    pub fn annihilator(&self) -> Result<Submodule> {
        if self.rank == 0 {
            return Submodule::ideal(self.ring.clone(), &[self.ring.one()]);
        }
        let mut acc: Option<Submodule> = None;
        for i in 0..self.rank {
            let anni = self
                .relations
                .colon_element(&FreeElement::basis(&self.ring, i))?;
            acc = Some(match acc {
                None => anni,
                Some(a) => a.intersect(&anni)?,
            });
        }
        Ok(acc.expect("rank checked nonzero"))
    }

    /// Minimal graded free resolution of `M`.
    pub fn resolution(&self) -> Result<Resolution> {
        Resolution::compute(
            self.ring.clone(),
            self.degrees.clone(),
            self.relations.generators(),
        )
    }

    /// `Ext^j(M, R)`, computed from the dualized resolution.
    pub fn ext_module(&self, j: usize) -> Result<FPModule> {
        let res = self.resolution()?;
        if j > res.length() {
            return Ok(FPModule::free(self.ring.clone(), Vec::new()));
        }
        let ord = canonical_order(&self.ring);
        // Hom(F_j, R) has basis degrees -degrees(F_j)
        let hom_degs: Vec<i64> = res.degrees(j).iter().map(|d| -d).collect();
        let hom_rank = hom_degs.len();
        // kernel of the outgoing dual map d_{j+1}^T
        let ker: Vec<FreeElement> = if j == res.length() {
            (0..hom_rank)
                .map(|i| FreeElement::basis(&self.ring, i))
                .collect()
        } else {
            let out_cols = res.map(j + 1).transpose().columns(&self.ring, &ord);
            let tgt_rank = res.degrees(j + 1).len();
            let syz = submodule::preimage_gens(&self.ring, tgt_rank, &out_cols, &[]);
            syz
        };
        // image of the incoming dual map d_j^T
        let im: Vec<FreeElement> = if j == 0 {
            Vec::new()
        } else {
            res.map(j).transpose().columns(&self.ring, &ord)
        };
        FPModule::subquotient(self.ring.clone(), &hom_degs, &ker, &im)
    }
}

fn pad(degrees: &[i64]) -> Vec<i64> {
    if degrees.is_empty() {
        vec![0]
    } else {
        degrees.to_vec()
    }
}

/// A validated homogeneous system of parameters on a module.
#[derive(Clone, Debug)]
pub struct ParamSystem {
    polys: Vec<Polynomial>,
}

impl ParamSystem {
    /// Accepts exactly `dim M` homogeneous polynomials of positive degree
    /// whose quotient has finite length.
    pub fn new(module: &FPModule, polys: Vec<Polynomial>) -> Result<ParamSystem> {
        let d = module.dim();
        if d <= 0 {
            return Err(EngineError::InvalidParamSystem(format!(
                "module has dimension {d}, a nonempty parameter system needs dimension at least 1"
            )));
        }
        if polys.len() != d as usize {
            return Err(EngineError::InvalidParamSystem(format!(
                "expected {} parameters for a module of dimension {}, got {}",
                d,
                d,
                polys.len()
            )));
        }
        for p in &polys {
            match p.homogeneity() {
                Homogeneity::Degree(e) if e > 0 => {}
                _ => {
                    return Err(EngineError::InvalidParamSystem(
                        "parameters must be homogeneous of positive degree".into(),
                    ))
                }
            }
        }
        let quot = module.quotient_by_polys(&polys)?;
        if quot.length() == Length::Infinite {
            return Err(EngineError::InvalidParamSystem(
                "quotient by the candidate system does not have finite length".into(),
            ));
        }
        Ok(ParamSystem { polys })
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    /// The powered system `x_1^{n_1}, ..., x_d^{n_d}`.
    pub fn powered(&self, ring: &PolyRing, n: &[u32]) -> Vec<Polynomial> {
        debug_assert_eq!(n.len(), self.polys.len());
        self.polys
            .iter()
            .zip(n.iter())
            .map(|(p, &e)| ring.pow(p, e))
            .collect()
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
    fn cyclic_point_module() {
        let r = ring(&["x", "y"]);
        let m = FPModule::cyclic(r.clone(), &[r.var(0), r.var(1)]).unwrap();
        assert_eq!(m.length(), Length::Finite(1));
        assert_eq!(m.dim(), 0);
        assert!(!m.is_zero());
    }

    #[test]
    fn ideal_as_module_of_max_ideal() {
        let r = ring(&["x", "y"]);
        let m = FPModule::ideal_as_module(r.clone(), &[r.var(0), r.var(1)]).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.degrees(), &[1, 1]);
        assert_eq!(m.relations().generators().len(), 1);
        assert_eq!(m.dim(), 2);
        // I/(x,y)I has two generators surviving
        let q = m.quotient_by_polys(&[r.var(0), r.var(1)]).unwrap();
        assert_eq!(q.length(), Length::Finite(2));
    }

    #[test]
    fn annihilators() {
        let r = ring(&["x", "y"]);
        let m = FPModule::cyclic(r.clone(), &[r.pow(&r.var(0), 2)]).unwrap();
        let ann = m.annihilator().unwrap();
        let expect = Submodule::ideal(r.clone(), &[r.pow(&r.var(0), 2)]).unwrap();
        assert!(ann.equal(&expect).unwrap());
        let f = FPModule::free(r.clone(), vec![0]);
        assert!(f.annihilator().unwrap().is_zero_submodule());
    }

    #[test]
    fn kernel_of_multiplication() {
        // 0 :_{R/(x^2, xy, y^2)} y = (x, y)/(x^2, xy, y^2), length 2
        let r = ring(&["x", "y"]);
        let m = FPModule::cyclic(
            r.clone(),
            &[
                r.pow(&r.var(0), 2),
                r.mul(&r.var(0), &r.var(1)),
                r.pow(&r.var(1), 2),
            ],
        )
        .unwrap();
        let k = m.kernel_of_mult(&r.var(1)).unwrap();
        assert_eq!(k.length(), Length::Finite(2));
    }

    #[test]
    fn ext_of_complete_intersection_point() {
        let r = ring(&["x", "y"]);
        let m = FPModule::cyclic(r.clone(), &[r.var(0), r.var(1)]).unwrap();
        assert!(m.ext_module(0).unwrap().is_zero());
        assert!(m.ext_module(1).unwrap().is_zero());
        let top = m.ext_module(2).unwrap();
        assert_eq!(top.length(), Length::Finite(1));
        let ann = top.annihilator().unwrap();
        let expect = Submodule::ideal(r.clone(), &[r.var(0), r.var(1)]).unwrap();
        assert!(ann.equal(&expect).unwrap());
        assert!(m.ext_module(3).unwrap().is_zero());
    }

    #[test]
    fn ext_zero_of_free_is_dual() {
        let r = ring(&["x", "y"]);
        let f = FPModule::free(r.clone(), vec![1]);
        let dual = f.ext_module(0).unwrap();
        assert_eq!(dual.rank(), 1);
        assert_eq!(dual.degrees(), &[-1]);
        assert_eq!(dual.dim(), 2);
    }

    #[test]
    fn subquotient_lengths_cross_checked() {
        // (x, y)/(x^2, xy, y^2) inside R
        let r = ring(&["x", "y"]);
        let sq = r.pow(&r.var(0), 2);
        let xy = r.mul(&r.var(0), &r.var(1));
        let yq = r.pow(&r.var(1), 2);
        let num = [
            FreeElement::from_poly(&r.var(0), 0),
            FreeElement::from_poly(&r.var(1), 0),
        ];
        let den = [
            FreeElement::from_poly(&sq, 0),
            FreeElement::from_poly(&xy, 0),
            FreeElement::from_poly(&yq, 0),
        ];
        let m = FPModule::subquotient(r.clone(), &[0], &num, &den).unwrap();
        assert_eq!(m.length(), Length::Finite(2));
        // independent check by graded pieces: dims of the presented module
        let total: u64 = (0..6)
            .map(|t| {
                linalg::quotient_piece_dim(&r, m.degrees(), m.relations().generators(), t) as u64
            })
            .sum();
        assert_eq!(total, 2);
    }

    #[test]
    fn param_system_validation() {
        let r = ring(&["x", "y"]);
        let m = FPModule::cyclic(r.clone(), &[r.mul(&r.var(0), &r.var(1))]).unwrap();
        assert_eq!(m.dim(), 1);
        let good = ParamSystem::new(&m, vec![r.add(&r.var(0), &r.var(1))]);
        assert!(good.is_ok());
        let bad = ParamSystem::new(&m, vec![r.var(0)]);
        assert!(matches!(bad, Err(EngineError::InvalidParamSystem(_))));
        let wrong_count = ParamSystem::new(&m, vec![r.var(0), r.var(1)]);
        assert!(matches!(
            wrong_count,
            Err(EngineError::InvalidParamSystem(_))
        ));
        let sys = good.unwrap();
        let pow = sys.powered(&r, &[3]);
        assert_eq!(pow[0].degree(), Some(3));
    }
}
