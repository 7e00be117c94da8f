//! Trivial ring extensions `S = R x M` presented as cyclic modules over
//! an extended polynomial ring.
//!
//! A tag variable `t_i` of degree one stands for the `i`-th generator of
//! `M`; the extension is `R[t_1..t_s]` modulo all products `t_i t_j`
//! (the square of `M` vanishes) and one element `sum f_i t_i` per module
//! relation. Parameter systems drawn from `R` lift verbatim, and length
//! computations over the extension split into ring and module summands.
//!
//! The grading forces every generator of `M` into a single degree. Inputs
//! generated in degree one pass as is; degree zero is accepted with a
//! shift (the generators sit in degree one inside `S`), and anything else
//! is rejected.

use crate::error::{EngineError, Result};
use crate::fpmodule::FPModule;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct Idealization {
    /// `R[t_1..t_s]`.
    pub ring: Arc<PolyRing>,
    /// `S` as a cyclic module over the extended ring.
    pub module: FPModule,
    /// The tag variable names, in generator order.
    pub tag_names: Vec<String>,
    /// Set when the input generators sat in degree zero.
    pub warning: Option<String>,
}

impl Idealization {
    /// Carry a polynomial of the base ring into the extension.
    pub fn lift(&self, p: &Polynomial) -> Polynomial {
        lift_poly(&self.ring, p)
    }

    pub fn lift_all(&self, polys: &[Polynomial]) -> Vec<Polynomial> {
        polys.iter().map(|p| self.lift(p)).collect()
    }
}

fn lift_poly(ext: &PolyRing, p: &Polynomial) -> Polynomial {
    ext.from_terms(
        p.terms()
            .iter()
            .map(|(c, m)| (c.clone(), m.extend(ext.nvars() - m.nvars())))
            .collect(),
    )
}

pub fn idealize(m: &FPModule) -> Result<Idealization> {
    let base = m.ring();
    let s = m.rank();
    let mut warning = None;
    if s > 0 {
        let g = m.degrees()[0];
        if m.degrees().iter().any(|&d| d != g) {
            return Err(EngineError::Idealization(
                "module generators must share a single degree".into(),
            ));
        }
        match g {
            1 => {}
            0 => {
                warning = Some(
                    "generators in degree 0 are shifted to degree 1 inside the extension"
                        .to_string(),
                );
            }
            other => {
                return Err(EngineError::Idealization(format!(
                    "module generators sit in degree {other}; only 0 or 1 are supported"
                )));
            }
        }
    }
    let mut vars: Vec<String> = base.vars().to_vec();
    let tag_names: Vec<String> = (1..=s).map(|i| format!("t{i}")).collect();
    for t in &tag_names {
        if base.vars().contains(t) {
            return Err(EngineError::Idealization(format!(
                "base ring already uses the variable name {t}"
            )));
        }
    }
    vars.extend(tag_names.iter().cloned());
    let ext = PolyRing::new(base.field().clone(), vars, base.order().clone())
        .map_err(EngineError::RingConstruction)?;

    let n = base.nvars();
    let tag_var = |i: usize| -> Polynomial {
        ext.from_terms(vec![(
            ext.field().one(),
            Monomial::var_power(n + s, n + i, 1),
        )])
    };
    let mut rels: Vec<Polynomial> = Vec::new();
    for i in 0..s {
        for j in i..s {
            rels.push(ext.mul(&tag_var(i), &tag_var(j)));
        }
    }
    for r in m.relations().generators() {
        let mut acc = ext.zero();
        for i in 0..s {
            let comp = r.component(base, i);
            if comp.is_zero() {
                continue;
            }
            acc = ext.add(&acc, &ext.mul(&lift_poly(&ext, &comp), &tag_var(i)));
        }
        if !acc.is_zero() {
            rels.push(acc);
        }
    }
    let module = FPModule::cyclic(ext.clone(), &rels)?;
    Ok(Idealization {
        ring: ext,
        module,
        tag_names,
        warning,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::fpmodule::ParamSystem;
    use crate::invariants::limit::limit_closure_of_sequence;
    use crate::invariants::DEFAULT_STAB_CAP;
    use crate::monomial::MonomialOrder;
    use crate::submodule::Length;
    use std::sync::Arc;

    fn ring(vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(
            Field::new(0).unwrap(),
            vars.iter().map(|s| s.to_string()).collect(),
            MonomialOrder::GrevLex,
        )
        .unwrap()
    }

    #[test]
    fn free_rank_one_gives_dual_numbers() {
        // R x R = R[t]/(t^2)
        let r = ring(&["x"]);
        let m = FPModule::free(r.clone(), vec![0]);
        let s = idealize(&m).unwrap();
        assert_eq!(s.ring.nvars(), 2);
        assert!(s.warning.is_some());
        let x = s.lift(&r.var(0));
        let quot = s.module.quotient_by_polys(&[x]).unwrap();
        assert_eq!(quot.length(), Length::Finite(2));
    }

    #[test]
    fn cyclic_module_relations_are_rewritten() {
        // R x R/(x) over k[x,y]: relations t^2 and x t
        let r = ring(&["x", "y"]);
        let m = FPModule::cyclic(r.clone(), &[r.var(0)]).unwrap();
        let s = idealize(&m).unwrap();
        assert_eq!(s.module.dim(), 2);
        let x = s.lift(&r.var(0));
        let y = s.lift(&r.var(1));
        // additivity of the limit closure quotient:
        // l(S/lim_S) = l(R/lim_R) + l(M/lim_M) = 1 + 0
        let seq_s = vec![x, y];
        let clo_s = limit_closure_of_sequence(&s.module, &seq_s, DEFAULT_STAB_CAP).unwrap();
        let quot_s = s
            .module
            .quotient_by_elements(clo_s.submodule.generators())
            .unwrap();
        assert_eq!(quot_s.length(), Length::Finite(1));

        let r_mod = FPModule::free(r.clone(), vec![0]);
        let seq_r = vec![r.var(0), r.var(1)];
        let clo_r = limit_closure_of_sequence(&r_mod, &seq_r, DEFAULT_STAB_CAP).unwrap();
        let quot_r = r_mod
            .quotient_by_elements(clo_r.submodule.generators())
            .unwrap();
        assert_eq!(quot_r.length(), Length::Finite(1));

        let clo_m = limit_closure_of_sequence(&m, &seq_r, DEFAULT_STAB_CAP).unwrap();
        let quot_m = m
            .quotient_by_elements(clo_m.submodule.generators())
            .unwrap();
        assert_eq!(quot_m.length(), Length::Finite(0));
    }

    #[test]
    fn lifted_parameters_stay_parameters() {
        let r = ring(&["x", "y"]);
        let m = FPModule::cyclic(r.clone(), &[r.var(0)]).unwrap();
        let s = idealize(&m).unwrap();
        let sys = ParamSystem::new(&s.module, s.lift_all(&[r.var(0), r.var(1)]));
        assert!(sys.is_ok());
    }

    #[test]
    fn mixed_generator_degrees_are_rejected() {
        let r = ring(&["x", "y"]);
        let m = FPModule::free(r.clone(), vec![0, 2]);
        assert!(matches!(idealize(&m), Err(EngineError::Idealization(_))));
    }

    #[test]
    fn tag_name_collision_is_rejected() {
        let r = ring(&["t1", "y"]);
        let m = FPModule::free(r.clone(), vec![0]);
        assert!(matches!(idealize(&m), Err(EngineError::Idealization(_))));
    }
}
