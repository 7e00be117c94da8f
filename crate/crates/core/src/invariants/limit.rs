//! Limit closures of parameter ideals.
//!
//! The closure is the union of the ascending colon chain
//! `L_t = ((x_1^{t+1}, ..., x_d^{t+1})M : (x_1 ... x_d)^t)`. Stabilization
//! is detected heuristically: first `t` with `L_t = L_{t+1}`, confirmed
//! against `L_{2t}`; a failed confirmation resumes the scan at `2t`. The
//! cap turns a runaway chain into a distinct error instead of a wrong
//! answer.

use crate::error::{EngineError, Result};
use crate::fpmodule::{FPModule, ParamSystem};
use crate::invariants::ExponentBox;
use crate::poly::Polynomial;
use crate::submodule::{Length, Submodule};
use std::collections::BTreeMap;

/// A stabilized member of the colon chain, tagged with where the scan
/// settled. The submodule lives in the ambient free module and contains
/// the relation submodule, so quotient queries speak about `M`.
#[derive(Clone, Debug)]
pub struct ClosureResult {
    pub submodule: Submodule,
    pub stabilized_at: u32,
}

fn chain_member(m: &FPModule, polys: &[Polynomial], t: u32) -> Result<Submodule> {
    let ring = m.ring();
    let raised: Vec<Polynomial> = polys.iter().map(|p| ring.pow(p, t + 1)).collect();
    let base = m.quotient_by_polys(&raised)?;
    let product = polys.iter().fold(ring.one(), |acc, p| ring.mul(&acc, p));
    let power = ring.pow(&product, t);
    base.relations().colon_poly(&power)
}

/// Limit closure of an arbitrary element sequence, gated only on the
/// quotient `M/(polys)M` having finite length.
pub fn limit_closure_of_sequence(
    m: &FPModule,
    polys: &[Polynomial],
    cap: u32,
) -> Result<ClosureResult> {
    if m.quotient_by_polys(polys)?.length() == Length::Infinite {
        return Err(EngineError::InvalidParamSystem(
            "limit closure needs a finite-length quotient".into(),
        ));
    }
    if polys.is_empty() {
        return Ok(ClosureResult {
            submodule: m.relations().clone(),
            stabilized_at: 0,
        });
    }
    let mut cache: BTreeMap<u32, Submodule> = BTreeMap::new();
    let member = |t: u32, cache: &mut BTreeMap<u32, Submodule>| -> Result<Submodule> {
        if let Some(s) = cache.get(&t) {
            return Ok(s.clone());
        }
        let s = chain_member(m, polys, t)?;
        cache.insert(t, s.clone());
        Ok(s)
    };
    let mut t = 1u32;
    loop {
        if t > cap {
            return Err(EngineError::StabilizationCapExceeded { cap });
        }
        let lt = member(t, &mut cache)?;
        let lt1 = member(t + 1, &mut cache)?;
        if lt.equal(&lt1)? {
            let l2t = member(2 * t, &mut cache)?;
            if lt.equal(&l2t)? {
                return Ok(ClosureResult {
                    submodule: lt,
                    stabilized_at: t,
                });
            }
            t *= 2;
        } else {
            t += 1;
        }
    }
}

/// `(x)^lim_M` for a validated parameter system.
pub fn limit_closure(m: &FPModule, x: &ParamSystem, cap: u32) -> Result<ClosureResult> {
    limit_closure_of_sequence(m, x.polys(), cap)
}

/// Closed-form limit closure for dd-sequences:
/// `sum_i ((x_1,...,x_i-hat,...,x_d)M : x_i) + (x)M`.
///
/// Certification is part of the call: the system must pass the
/// dd-sequence box check first.
pub fn limit_closure_dd(
    m: &FPModule,
    x: &ParamSystem,
    certify_box: &ExponentBox,
) -> Result<Submodule> {
    let verdict = crate::invariants::dseq::is_dd_sequence_box(m, x.polys(), certify_box)?;
    if !verdict.passed {
        return Err(EngineError::DdCertification(
            verdict
                .counterexample
                .unwrap_or_else(|| "dd-sequence box check failed".into()),
        ));
    }
    let ring = m.ring();
    let polys = x.polys();
    let mut gens = Vec::new();
    for (i, xi) in polys.iter().enumerate() {
        let others: Vec<Polynomial> = polys
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p.clone())
            .collect();
        let base = m.quotient_by_polys(&others)?;
        let colon = base.relations().colon_poly(xi)?;
        gens.extend(colon.generators().iter().cloned());
    }
    let with_x = m.quotient_by_polys(polys)?;
    gens.extend(with_x.relations().generators().iter().cloned());
    Submodule::new(ring.clone(), m.rank().max(1), gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::freemod::FreeElement;
    use crate::invariants::DEFAULT_STAB_CAP;
    use crate::monomial::MonomialOrder;
    use crate::poly::PolyRing;
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
    fn regular_sequence_closure_is_the_ideal_itself() {
        let r = ring(&["x", "y"]);
        let m = FPModule::free(r.clone(), vec![0]);
        let x = ParamSystem::new(&m, vec![r.var(0), r.var(1)]).unwrap();
        let clo = limit_closure(&m, &x, DEFAULT_STAB_CAP).unwrap();
        let expect = Submodule::ideal(r.clone(), &[r.var(0), r.var(1)]).unwrap();
        assert!(clo.submodule.equal(&expect).unwrap());
        assert_eq!(clo.stabilized_at, 1);
    }

    #[test]
    fn one_dimensional_cm_closure() {
        // M = k[x], sop (x^2): closure stays (x^2)
        let r = ring(&["x"]);
        let m = FPModule::free(r.clone(), vec![0]);
        let x = ParamSystem::new(&m, vec![r.pow(&r.var(0), 2)]).unwrap();
        let clo = limit_closure(&m, &x, DEFAULT_STAB_CAP).unwrap();
        let expect = Submodule::ideal(r.clone(), &[r.pow(&r.var(0), 2)]).unwrap();
        assert!(clo.submodule.equal(&expect).unwrap());
    }

    #[test]
    fn two_planes_closure_is_the_irrelevant_ideal() {
        let r = ring(&["a", "b", "c", "d"]);
        let (a, b, c, d) = (r.var(0), r.var(1), r.var(2), r.var(3));
        let m = FPModule::cyclic(
            r.clone(),
            &[r.mul(&a, &c), r.mul(&a, &d), r.mul(&b, &c), r.mul(&b, &d)],
        )
        .unwrap();
        let x = ParamSystem::new(&m, vec![r.add(&a, &c), r.add(&b, &d)]).unwrap();
        let clo = limit_closure(&m, &x, DEFAULT_STAB_CAP).unwrap();
        // the closure picks up every variable; the quotient is one point
        let expect = Submodule::ideal(r.clone(), &[a, b, c, d]).unwrap();
        assert!(clo.submodule.equal(&expect).unwrap());
        assert_eq!(clo.submodule.quotient_length(), Length::Finite(1));
        // the plain parameter ideal is strictly smaller
        let quot = m.quotient_by_polys(x.polys()).unwrap();
        assert!(!clo.submodule.equal(quot.relations()).unwrap());
        assert_eq!(quot.length(), Length::Finite(3));
    }

    #[test]
    fn chain_is_monotone() {
        let r = ring(&["a", "b", "c", "d"]);
        let (a, b, c, d) = (r.var(0), r.var(1), r.var(2), r.var(3));
        let m = FPModule::cyclic(
            r.clone(),
            &[r.mul(&a, &c), r.mul(&a, &d), r.mul(&b, &c), r.mul(&b, &d)],
        )
        .unwrap();
        let polys = vec![r.add(&a, &c), r.add(&b, &d)];
        let l1 = chain_member(&m, &polys, 1).unwrap();
        let l2 = chain_member(&m, &polys, 2).unwrap();
        let l3 = chain_member(&m, &polys, 3).unwrap();
        assert!(l2.contains_submodule(&l1).unwrap());
        assert!(l3.contains_submodule(&l2).unwrap());
    }

    #[test]
    fn closure_contains_parameter_ideal_and_relations() {
        let r = ring(&["x", "y"]);
        let m = FPModule::cyclic(r.clone(), &[r.pow(&r.var(0), 2)]).unwrap();
        let x = ParamSystem::new(&m, vec![r.var(1)]).unwrap();
        let clo = limit_closure(&m, &x, DEFAULT_STAB_CAP).unwrap();
        assert!(clo
            .submodule
            .contains(&FreeElement::from_poly(&r.var(1), 0)));
        assert!(clo.submodule.contains_submodule(m.relations()).unwrap());
    }

    #[test]
    fn sequence_variant_rejects_infinite_quotients() {
        let r = ring(&["x", "y"]);
        let m = FPModule::free(r.clone(), vec![0]);
        let err = limit_closure_of_sequence(&m, &[r.var(0)], 8);
        assert!(matches!(err, Err(EngineError::InvalidParamSystem(_))));
    }
}
