//! Shared fixtures for the benchmark suite.

use parafrac_core::{FPModule, Field, MonomialOrder, PolyRing, Polynomial};
use std::sync::Arc;

pub fn ring(ch: u64, vars: &[&str]) -> Arc<PolyRing> {
    PolyRing::new(
        Field::new(ch).unwrap(),
        vars.iter().map(|s| s.to_string()).collect(),
        MonomialOrder::GrevLex,
    )
    .unwrap()
}

/// Two planes in four-space meeting at the origin, with its standard
/// parameter system. The workhorse non-Cohen-Macaulay example.
pub fn two_planes() -> (Arc<PolyRing>, FPModule, Vec<Polynomial>) {
    let r = ring(101, &["a", "b", "c", "d"]);
    let (a, b, c, d) = (r.var(0), r.var(1), r.var(2), r.var(3));
    let m = FPModule::cyclic(
        r.clone(),
        &[r.mul(&a, &c), r.mul(&a, &d), r.mul(&b, &c), r.mul(&b, &d)],
    )
    .unwrap();
    let sop = vec![r.add(&a, &c), r.add(&b, &d)];
    (r, m, sop)
}

/// The nodal plane curve over F_2, for Hilbert-Kunz length counting.
pub fn node() -> (Arc<PolyRing>, FPModule) {
    let r = ring(2, &["x", "y"]);
    let m = FPModule::cyclic(r.clone(), &[r.mul(&r.var(0), &r.var(1))]).unwrap();
    (r, m)
}
