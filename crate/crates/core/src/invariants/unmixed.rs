//! The unmixed component `U_M(0)`, the largest submodule of dimension
//! below `dim M`.
//!
//! An element has lower-dimensional support exactly when a power of
//! `b = prod_{i > c} Ann Ext^i(M, R)` kills it, where `c` is the
//! codimension of `M`: localizing at a minimal prime of its annihilator
//! and applying duality puts that prime in the support of one of these
//! Ext modules, and conversely every point of such a support has
//! codimension above `c`. So `U_M(0)` is the saturation of the relation
//! submodule with respect to these annihilators in turn, an ascending
//! chain that must terminate.
//!
//! Two certificates guard the result: the component has dimension below
//! `dim M`, and dividing it out leaves the multiplicity unchanged.

use crate::error::{EngineError, Result};
use crate::fpmodule::{FPModule, ParamSystem};
use crate::invariants::multiplicity::multiplicity;
use crate::submodule::Submodule;

/// The unmixed component, as a submodule of the ambient free module
/// containing the relations (so `F/U` presents `M/U_M(0)`).
#[derive(Clone, Debug)]
pub struct UnmixedResult {
    pub submodule: Submodule,
    /// Colon rounds the longest saturation took.
    pub stabilized_at: u32,
}

fn saturate(start: &Submodule, ideal: &Submodule, cap: u32) -> Result<(Submodule, u32)> {
    let ring = start.ring().clone();
    let gens: Vec<_> = ideal
        .generators()
        .iter()
        .map(|g| g.component(&ring, 0))
        .collect();
    let mut cur = start.clone();
    for round in 0..=cap {
        let mut next: Option<Submodule> = None;
        for g in &gens {
            let colon = cur.colon_poly(g)?;
            next = Some(match next {
                None => colon,
                Some(acc) => acc.intersect(&colon)?,
            });
        }
        let next =
            next.ok_or_else(|| EngineError::UnmixedCertificate("empty annihilator ideal".into()))?;
        if next.equal(&cur)? {
            return Ok((cur, round));
        }
        cur = next;
    }
    Err(EngineError::StabilizationCapExceeded { cap })
}

pub fn unmixed_component(m: &FPModule, x: &ParamSystem, cap: u32) -> Result<UnmixedResult> {
    let ring = m.ring();
    let n = ring.nvars();
    let d = m.dim();
    let c = n - d as usize;
    let mut current = m.relations().clone();
    let mut rounds = 0u32;
    for i in (c + 1)..=n {
        let ann = m.ext_module(i)?.annihilator()?;
        if ann.contains_poly(&ring.one()) {
            continue;
        }
        let (sat, r) = saturate(&current, &ann, cap)?;
        current = sat;
        rounds = rounds.max(r);
    }
    let result = UnmixedResult {
        submodule: current,
        stabilized_at: rounds,
    };

    // certificates: dim U < dim M, and e(x; M/U) = e(x; M)
    let u_module = FPModule::subquotient(
        ring.clone(),
        m.degrees(),
        result.submodule.generators(),
        m.relations().generators(),
    )?;
    if u_module.dim() >= m.dim() {
        return Err(EngineError::UnmixedCertificate(format!(
            "candidate component has dimension {}, not below dim M = {}",
            u_module.dim(),
            m.dim()
        )));
    }
    let quotient = m.quotient_by_elements(result.submodule.generators())?;
    let x_on_quotient = ParamSystem::new(&quotient, x.polys().to_vec())
        .map_err(|_| EngineError::UnmixedCertificate("parameter system fails on M/U".into()))?;
    let e_m = multiplicity(m, x)?;
    let e_q = multiplicity(&quotient, &x_on_quotient)?;
    if e_m != e_q {
        return Err(EngineError::UnmixedCertificate(format!(
            "multiplicity changed after removing the component: {e_m} vs {e_q}"
        )));
    }
    Ok(result)
}
