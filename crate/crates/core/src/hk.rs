//! Hilbert-Kunz functions in positive characteristic, and the bridge
//! from the length function J of an ideal viewed as a module to the
//! Hilbert-Kunz function of the quotient ring.
//!
//! Over a ring of characteristic `p` the Frobenius power of an ideal is
//! generated by the `q`-th powers of any generating set, `q = p^e`. The
//! Hilbert-Kunz function of an irrelevant-primary ideal tabulates
//! `l(A/I^[q])`; the multiplicity estimate divides the last value by
//! `q^dim` and reports the gap to the previous ratio as the residual.
//!
//! The bridge: for an ideal `I` of codimension at least two, viewed as a
//! module over the full ring with the variables as parameters, `J` at the
//! uniform tuple `(q, ..., q)` equals `l(R/(I + (x_1^q, ..., x_n^q)))`.
//! Both sides are computed independently and compared.

use crate::error::{EngineError, Result};
use crate::fpmodule::{FPModule, ParamSystem};
use crate::invariants::ij::j_fun;
use crate::invariants::DEFAULT_STAB_CAP;
use crate::poly::{PolyRing, Polynomial};
use crate::submodule::{Length, Submodule};
use num::BigRational;
use num::{BigInt, Signed};
use std::sync::Arc;

/// Standard-monomial budget for a single length evaluation.
pub const DEFAULT_HK_BUDGET: u128 = 2_000_000;

#[derive(Clone, Debug)]
pub struct HKSeries {
    pub p: u64,
    /// `(q, l(A/I^[q]))`, one entry per computed `e >= 1`.
    pub values: Vec<(u64, u64)>,
    /// True when the budget stopped the series before `e_max`.
    pub truncated: bool,
}

#[derive(Clone, Debug)]
pub struct HKEstimate {
    pub estimate: BigRational,
    /// Gap between the last two normalized ratios.
    pub residual: BigRational,
}

#[derive(Clone, Debug)]
pub struct BridgeRow {
    pub q: u64,
    pub j_limit: i64,
    pub len_direct: u64,
    pub agree: bool,
}

#[derive(Clone, Debug)]
pub struct BridgeTable {
    pub p: u64,
    pub rows: Vec<BridgeRow>,
}

fn char_of(ring: &PolyRing) -> Result<u64> {
    match ring.field().characteristic() {
        0 => Err(EngineError::CharZero),
        p => Ok(p),
    }
}

/// Check `q = p^e` with `e >= 1` and return `e`.
pub fn frobenius_exponent(q: u64, p: u64) -> Result<u32> {
    let mut rest = q;
    let mut e = 0u32;
    while rest > 1 && rest % p == 0 {
        rest /= p;
        e += 1;
    }
    if rest == 1 && e >= 1 {
        Ok(e)
    } else {
        Err(EngineError::NotFrobeniusPower { q, p })
    }
}

/// Generators of `I^[q]`.
pub fn frobenius_power(ring: &PolyRing, gens: &[Polynomial], q: u64) -> Result<Vec<Polynomial>> {
    let p = char_of(ring)?;
    frobenius_exponent(q, p)?;
    let qe = u32::try_from(q).map_err(|_| EngineError::NotFrobeniusPower { q, p })?;
    Ok(gens.iter().map(|g| ring.pow(g, qe)).collect())
}

/// The Hilbert-Kunz function of `ideal_gens` on the cyclic module `a`,
/// for `q = p, p^2, ..., p^e_max`, stopping early when a single length
/// would exceed `budget` standard monomials.
pub fn hk_function(
    a: &FPModule,
    ideal_gens: &[Polynomial],
    e_max: u32,
    budget: u128,
) -> Result<HKSeries> {
    let ring = a.ring();
    let p = char_of(ring)?;
    let probe = a.quotient_by_polys(ideal_gens)?;
    if probe.length() == Length::Infinite {
        return Err(EngineError::NotIrrelevantPrimary);
    }
    let mut values = Vec::new();
    let mut truncated = false;
    for e in 1..=e_max {
        let q = p
            .checked_pow(e)
            .ok_or(EngineError::NotFrobeniusPower { q: 0, p })?;
        let powered = frobenius_power(ring, ideal_gens, q)?;
        let quot = a.quotient_by_polys(&powered)?;
        match quot.relations().quotient_box_size() {
            Some(size) if size <= budget => {}
            _ => {
                truncated = true;
                break;
            }
        }
        match quot.length() {
            Length::Finite(l) => values.push((q, l)),
            Length::Infinite => return Err(EngineError::NotIrrelevantPrimary),
        }
    }
    Ok(HKSeries {
        p,
        values,
        truncated,
    })
}

/// Last-ratio estimate of the Hilbert-Kunz multiplicity with the gap to
/// the previous ratio as residual.
pub fn e_hk_estimate(series: &HKSeries, dim: i64) -> Result<HKEstimate> {
    if series.values.len() < 2 {
        return Err(EngineError::SeriesTooShort {
            required: 2,
            got: series.values.len(),
        });
    }
    let ratio = |&(q, l): &(u64, u64)| -> BigRational {
        let d = dim.max(0) as u32;
        BigRational::new(BigInt::from(l), BigInt::from(q).pow(d))
    };
    let last = ratio(series.values.last().unwrap());
    let prev = ratio(&series.values[series.values.len() - 2]);
    let residual = (&last - &prev).abs();
    Ok(HKEstimate {
        estimate: last,
        residual,
    })
}

/// For `I` of codimension at least two: `J` of the ideal-module at
/// `(q, ..., q)` with the variables as parameters, against the direct
/// length `l(R/(I + (x_1^q, ..., x_n^q)))`.
pub fn j_hk_bridge(
    ring: &Arc<PolyRing>,
    ideal_gens: &[Polynomial],
    e_max: u32,
) -> Result<BridgeTable> {
    let p = char_of(ring)?;
    let n = ring.nvars();
    let quotient_dim = Submodule::ideal(ring.clone(), ideal_gens)?.quotient_dim();
    let found = n as i64 - quotient_dim;
    if found < 2 {
        return Err(EngineError::CodimTooSmall { required: 2, found });
    }
    let m = FPModule::ideal_as_module(ring.clone(), ideal_gens)?;
    let vars: Vec<Polynomial> = (0..n).map(|i| ring.var(i)).collect();
    let sop = ParamSystem::new(&m, vars.clone())?;
    let a = FPModule::cyclic(ring.clone(), ideal_gens)?;
    let mut rows = Vec::new();
    for e in 1..=e_max {
        let q = p
            .checked_pow(e)
            .ok_or(EngineError::NotFrobeniusPower { q: 0, p })?;
        let tuple = vec![u32::try_from(q).expect("q fits u32 at desk scale"); n];
        let j_limit = j_fun(&m, &sop, &tuple, DEFAULT_STAB_CAP)?;
        let powered = frobenius_power(ring, &vars, q)?;
        let direct = a.quotient_by_polys(&powered)?;
        let len_direct = match direct.length() {
            Length::Finite(l) => l,
            Length::Infinite => return Err(EngineError::InfiniteLength),
        };
        let agree = j_limit >= 0 && j_limit as u64 == len_direct;
        rows.push(BridgeRow {
            q,
            j_limit,
            len_direct,
            agree,
        });
    }
    Ok(BridgeTable { p, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::monomial::MonomialOrder;
    use num::{One, Zero};

    fn ring_p(p: u64, vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(
            Field::new(p).unwrap(),
            vars.iter().map(|s| s.to_string()).collect(),
            MonomialOrder::GrevLex,
        )
        .unwrap()
    }

    #[test]
    fn regular_ring_is_q_squared() {
        let r = ring_p(2, &["x", "y"]);
        let a = FPModule::cyclic(r.clone(), &[]).unwrap();
        let s = hk_function(&a, &[r.var(0), r.var(1)], 4, DEFAULT_HK_BUDGET).unwrap();
        assert_eq!(s.values, vec![(2, 4), (4, 16), (8, 64), (16, 256)]);
        assert!(!s.truncated);
        let est = e_hk_estimate(&s, 2).unwrap();
        assert!(est.estimate.is_one());
        assert!(est.residual.is_zero());
    }

    #[test]
    fn node_curve_is_two_q_minus_one() {
        let r = ring_p(2, &["x", "y"]);
        let a = FPModule::cyclic(r.clone(), &[r.mul(&r.var(0), &r.var(1))]).unwrap();
        let s = hk_function(&a, &[r.var(0), r.var(1)], 4, DEFAULT_HK_BUDGET).unwrap();
        assert_eq!(s.values, vec![(2, 3), (4, 7), (8, 15), (16, 31)]);
        let est = e_hk_estimate(&s, 1).unwrap();
        // 31/16 = 2 - 1/16
        assert_eq!(
            est.estimate,
            BigRational::new(BigInt::from(31), BigInt::from(16))
        );
        assert_eq!(
            est.residual,
            BigRational::new(BigInt::from(1), BigInt::from(16))
        );
    }

    #[test]
    fn double_plane_length_by_hand() {
        // k[x,y,z]/(z^2) char 3 at q = 3: l = 9 * 2
        let r = ring_p(3, &["x", "y", "z"]);
        let a = FPModule::cyclic(r.clone(), &[r.pow(&r.var(2), 2)]).unwrap();
        let s = hk_function(&a, &[r.var(0), r.var(1), r.var(2)], 1, DEFAULT_HK_BUDGET).unwrap();
        assert_eq!(s.values, vec![(3, 18)]);
    }

    #[test]
    fn non_primary_ideal_is_rejected() {
        let r = ring_p(2, &["x", "y"]);
        let a = FPModule::cyclic(r.clone(), &[]).unwrap();
        assert!(matches!(
            hk_function(&a, &[r.var(0)], 2, DEFAULT_HK_BUDGET),
            Err(EngineError::NotIrrelevantPrimary)
        ));
    }

    #[test]
    fn char_zero_is_rejected() {
        let r = PolyRing::new(
            Field::new(0).unwrap(),
            vec!["x".into(), "y".into()],
            MonomialOrder::GrevLex,
        )
        .unwrap();
        let a = FPModule::cyclic(r.clone(), &[]).unwrap();
        assert!(matches!(
            hk_function(&a, &[r.var(0), r.var(1)], 2, DEFAULT_HK_BUDGET),
            Err(EngineError::CharZero)
        ));
    }

    #[test]
    fn short_series_is_rejected() {
        let s = HKSeries {
            p: 2,
            values: vec![(2, 4)],
            truncated: false,
        };
        assert!(matches!(
            e_hk_estimate(&s, 2),
            Err(EngineError::SeriesTooShort { .. })
        ));
    }

    #[test]
    fn budget_truncates_the_series() {
        let r = ring_p(2, &["x", "y"]);
        let a = FPModule::cyclic(r.clone(), &[]).unwrap();
        let s = hk_function(&a, &[r.var(0), r.var(1)], 10, 100).unwrap();
        // q = 16 would need 256 standard monomials
        assert_eq!(s.values.len(), 3);
        assert!(s.truncated);
    }

    #[test]
    fn bridge_on_a_plane_ideal() {
        // I = (x, y) in k[x,y,z]: A = k[z], J(q) = l(k[z]/(z^q)) = q
        let r = ring_p(2, &["x", "y", "z"]);
        let t = j_hk_bridge(&r, &[r.var(0), r.var(1)], 2).unwrap();
        assert_eq!(t.rows.len(), 2);
        for row in &t.rows {
            assert!(row.agree);
            assert_eq!(row.j_limit as u64, row.q);
        }
    }

    #[test]
    fn bridge_on_the_full_irrelevant_ideal() {
        // I = (x, y, z): A = k, J(q) = 1 for all q
        let r = ring_p(2, &["x", "y", "z"]);
        let t = j_hk_bridge(&r, &[r.var(0), r.var(1), r.var(2)], 2).unwrap();
        for row in &t.rows {
            assert!(row.agree);
            assert_eq!(row.len_direct, 1);
        }
    }

    #[test]
    fn codimension_one_is_rejected() {
        let r = ring_p(2, &["x", "y", "z"]);
        assert!(matches!(
            j_hk_bridge(&r, &[r.var(0)], 2),
            Err(EngineError::CodimTooSmall {
                required: 2,
                found: 1
            })
        ));
    }
}
