//! Serre multiplicity as a Koszul Euler characteristic.

use crate::error::Result;
use crate::fpmodule::{FPModule, ParamSystem};
use crate::koszul::KoszulComplex;

/// `e(x; M)` for a parameter system, as the alternating sum of Koszul
/// homology lengths. Positive whenever `x` has as many elements as
/// `dim M`.
pub fn multiplicity(m: &FPModule, x: &ParamSystem) -> Result<u64> {
    let k = KoszulComplex::new(m, x.polys())?;
    let chi = k.euler_characteristic()?;
    assert!(
        chi >= 0,
        "Euler characteristic of a parameter system is non-negative"
    );
    Ok(chi as u64)
}

/// `e(x^n; M) = n_1 ... n_d e(x; M)`.
pub fn powered_multiplicity(e_base: u64, n: &[u32]) -> u64 {
    n.iter().fold(e_base, |acc, &k| acc * k as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::koszul::KoszulComplex;
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
    fn regular_ring_has_multiplicity_one() {
        let r = ring(&["x", "y"]);
        let m = FPModule::free(r.clone(), vec![0]);
        let x = ParamSystem::new(&m, vec![r.var(0), r.var(1)]).unwrap();
        assert_eq!(multiplicity(&m, &x).unwrap(), 1);
    }

    #[test]
    fn powers_multiply() {
        let r = ring(&["x"]);
        let m = FPModule::free(r.clone(), vec![0]);
        let x = ParamSystem::new(&m, vec![r.pow(&r.var(0), 3)]).unwrap();
        assert_eq!(multiplicity(&m, &x).unwrap(), 3);
        assert_eq!(powered_multiplicity(3, &[2]), 6);
        // independent check: the Koszul route on the powered system
        let k = KoszulComplex::new(&m, &[r.pow(&r.var(0), 6)]).unwrap();
        assert_eq!(k.euler_characteristic().unwrap(), 6);
    }

    #[test]
    fn two_planes_multiplicity_is_two() {
        // R/((a,b) /\ (c,d)): one point from each plane
        let r = ring(&["a", "b", "c", "d"]);
        let (a, b, c, d) = (r.var(0), r.var(1), r.var(2), r.var(3));
        let m = FPModule::cyclic(
            r.clone(),
            &[r.mul(&a, &c), r.mul(&a, &d), r.mul(&b, &c), r.mul(&b, &d)],
        )
        .unwrap();
        assert_eq!(m.dim(), 2);
        let x = ParamSystem::new(&m, vec![r.add(&a, &c), r.add(&b, &d)]).unwrap();
        assert_eq!(multiplicity(&m, &x).unwrap(), 2);
    }
}
