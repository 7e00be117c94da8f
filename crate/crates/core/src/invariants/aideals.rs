//! Annihilators of local cohomology through graded duality, and the
//! p-standard parameter search built on them.
//!
//! Over the polynomial ring in `n` variables the graded dual of
//! `H^i_m(M)` is `Ext^{n-i}(M, R)` up to twist, so annihilators and
//! lengths transfer. `a(M)` is the product of the lower annihilators, and
//! its quotient dimension is the candidate for the invariant `p(M)`.
//!
//! The p-standard search draws homogeneous elements of the required
//! ideals with seeded pseudo-random coefficients, from the last parameter
//! backwards, insisting that each pick cuts the dimension by one.

use crate::error::{EngineError, Result};
use crate::fpmodule::{FPModule, ParamSystem};
use crate::monomial::monomials_of_degree;
use crate::poly::{PolyRing, Polynomial};
use crate::submodule::{Length, Submodule};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug)]
pub struct AIdeals {
    /// `a_0(M), ..., a_{d-1}(M)`.
    pub ideals: Vec<Submodule>,
    /// Lengths of the dual modules standing in for `H^0, ..., H^{d-1}`.
    pub cohomology_lengths: Vec<Length>,
    /// `a(M) = a_0 ... a_{d-1}` (unit ideal when `d = 0`).
    pub a_total: Submodule,
    /// `dim R/a(M)`; -1 when `a(M)` is the unit ideal.
    pub p_candidate: i64,
}

fn ideal_product(a: &Submodule, b: &Submodule) -> Result<Submodule> {
    let ring = a.ring();
    let mut gens = Vec::new();
    for x in a.generators() {
        for y in b.generators() {
            let p = ring.mul(&x.component(ring, 0), &y.component(ring, 0));
            gens.push(p);
        }
    }
    Submodule::ideal(ring.clone(), &gens)
}

pub fn a_ideals(m: &FPModule) -> Result<AIdeals> {
    let ring = m.ring();
    let n = ring.nvars();
    let d = m.dim();
    let mut ideals = Vec::new();
    let mut lengths = Vec::new();
    for i in 0..d.max(0) as usize {
        let ext = m.ext_module(n - i)?;
        lengths.push(ext.length());
        ideals.push(ext.annihilator()?);
    }
    let unit = Submodule::ideal(ring.clone(), &[ring.one()])?;
    let mut a_total = unit;
    for a in &ideals {
        a_total = ideal_product(&a_total, a)?;
    }
    let p_candidate = a_total.quotient_dim();
    Ok(AIdeals {
        ideals,
        cohomology_lengths: lengths,
        a_total,
        p_candidate,
    })
}

/// A homogeneous pseudo-random combination of the ideal's generators,
/// padded by monomials up to the largest generator degree. Coefficients
/// are nonzero. Falls back to the irrelevant ideal when the input is the
/// unit ideal, since then any parameter qualifies.
fn draw_element(ring: &PolyRing, ideal: &Submodule, rng: &mut ChaCha8Rng) -> Option<Polynomial> {
    let coeff_max: u64 = match ring.field().characteristic() {
        0 => 100,
        p => (p - 1).min(100),
    };
    let gens: Vec<Polynomial> = if ideal.contains_poly(&ring.one()) {
        (0..ring.nvars()).map(|i| ring.var(i)).collect()
    } else {
        ideal
            .generators()
            .iter()
            .map(|g| g.component(ring, 0))
            .collect()
    };
    let target = gens.iter().filter_map(|g| g.degree()).max()?;
    let mut acc = ring.zero();
    for g in &gens {
        let dg = g.degree()?;
        for mono in monomials_of_degree(ring.nvars(), (target - dg) as u32) {
            let c = ring.field().from_i64(rng.gen_range(1..=coeff_max) as i64);
            acc = ring.add(&acc, &ring.term_mul(&c, &mono, g));
        }
    }
    if acc.is_zero() {
        None
    } else {
        Some(acc)
    }
}

/// Searches for a p-standard system of parameters: `x_d` in `a(M)`,
/// then `x_i` in `a(M/(x_{i+1},...,x_d)M)` for `i = d-1,...,1`, each
/// pick a parameter on the current quotient. Deterministic for a fixed
/// seed.
pub fn p_standard_sop(m: &FPModule, attempts: u32, seed: u64) -> Result<ParamSystem> {
    let d = m.dim();
    if d <= 0 {
        return Err(EngineError::PStandardNotFound(
            "module dimension must be positive".into(),
        ));
    }
    let base = a_ideals(m)?;
    if base.p_candidate >= d {
        return Err(EngineError::PStandardNotFound(format!(
            "dim R/a(M) = {} is not below dim M = {}",
            base.p_candidate, d
        )));
    }
    let ring = m.ring();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draws_per_step = 25u32;
    for _ in 0..attempts.max(1) {
        let mut picked: Vec<Polynomial> = Vec::with_capacity(d as usize);
        let mut current = m.clone();
        let mut ok = true;
        for step in (1..=d).rev() {
            let ai = if step == d {
                base.a_total.clone()
            } else {
                a_ideals(&current)?.a_total
            };
            let mut found = None;
            for _ in 0..draws_per_step {
                let Some(cand) = draw_element(ring, &ai, &mut rng) else {
                    continue;
                };
                let quot = current.quotient_by_polys(&[cand.clone()])?;
                if quot.dim() == current.dim() - 1 {
                    found = Some((cand, quot));
                    break;
                }
            }
            match found {
                Some((cand, quot)) => {
                    picked.push(cand);
                    current = quot;
                }
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        picked.reverse();
        if let Ok(sys) = ParamSystem::new(m, picked) {
            return Ok(sys);
        }
    }
    Err(EngineError::PStandardNotFound(format!(
        "no valid system found in {attempts} attempts"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
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
    fn cm_module_has_unit_lower_annihilators() {
        // k[x,y]/(x) is CM of dimension 1: a_0 = (1)
        let r = ring(&["x", "y"]);
        let m = FPModule::cyclic(r.clone(), &[r.var(0)]).unwrap();
        let ai = a_ideals(&m).unwrap();
        assert_eq!(ai.ideals.len(), 1);
        assert!(ai.ideals[0].contains_poly(&r.one()));
        assert_eq!(ai.p_candidate, -1);
        assert_eq!(ai.cohomology_lengths[0], Length::Finite(0));
    }

    #[test]
    fn free_module_annihilators() {
        let r = ring(&["x", "y"]);
        let m = FPModule::free(r.clone(), vec![0]);
        let ai = a_ideals(&m).unwrap();
        assert_eq!(ai.ideals.len(), 2);
        assert!(ai.ideals.iter().all(|i| i.contains_poly(&r.one())));
        assert_eq!(ai.p_candidate, -1);
    }

    #[test]
    fn two_planes_annihilators() {
        let r = ring(&["a", "b", "c", "d"]);
        let (a, b, c, d) = (r.var(0), r.var(1), r.var(2), r.var(3));
        let m = FPModule::cyclic(
            r.clone(),
            &[r.mul(&a, &c), r.mul(&a, &d), r.mul(&b, &c), r.mul(&b, &d)],
        )
        .unwrap();
        let ai = a_ideals(&m).unwrap();
        // a_0 = (1) (no H^0), a_1 = the irrelevant ideal, H^1 has length 1
        assert!(ai.ideals[0].contains_poly(&r.one()));
        let irr = Submodule::ideal(r.clone(), &[a, b, c, d]).unwrap();
        assert!(ai.ideals[1].equal(&irr).unwrap());
        assert_eq!(
            ai.cohomology_lengths,
            vec![Length::Finite(0), Length::Finite(1)]
        );
        assert_eq!(ai.p_candidate, 0);
    }

    #[test]
    fn p_standard_search_on_the_two_planes() {
        let r = ring(&["a", "b", "c", "d"]);
        let (a, b, c, d) = (r.var(0), r.var(1), r.var(2), r.var(3));
        let m = FPModule::cyclic(
            r.clone(),
            &[r.mul(&a, &c), r.mul(&a, &d), r.mul(&b, &c), r.mul(&b, &d)],
        )
        .unwrap();
        let sys = p_standard_sop(&m, 5, 42).unwrap();
        assert_eq!(sys.len(), 2);
        // deterministic: the same seed reproduces the same system
        let again = p_standard_sop(&m, 5, 42).unwrap();
        assert_eq!(sys.polys(), again.polys());
    }

    #[test]
    fn hypersurface_is_p_standard_friendly() {
        // k[x,y]/(x^2) is CM, so a(M) = (1) and any parameter works
        let r = ring(&["x", "y"]);
        let m = FPModule::cyclic(r.clone(), &[r.pow(&r.var(0), 2)]).unwrap();
        let ai = a_ideals(&m).unwrap();
        assert!(ai.ideals[0].contains_poly(&r.one()));
        let sys = p_standard_sop(&m, 5, 7).unwrap();
        assert_eq!(sys.len(), 1);
    }

    #[test]
    fn zero_dimensional_module_is_rejected() {
        let r = ring(&["x", "y"]);
        let m = FPModule::cyclic(r.clone(), &[r.var(0), r.var(1)]).unwrap();
        assert!(matches!(
            p_standard_sop(&m, 3, 7),
            Err(EngineError::PStandardNotFound(_))
        ));
    }
}
