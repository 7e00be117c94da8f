//! The two length functions of a parameter system and their tables.
//!
//! `I(n) = l(M/x^n M) - e(x^n; M)` measures the distance from
//! Cohen-Macaulayness from above; `J(n) = e(x^n; M) - l(M/(x^n)^lim)`
//! measures it from below, through the limit closure. Multiplicities of
//! powered systems come from the base multiplicity once, by
//! multiplicativity.

use crate::error::{EngineError, Result};
use crate::fpmodule::{FPModule, ParamSystem};
use crate::invariants::limit::limit_closure_of_sequence;
use crate::invariants::multiplicity::{multiplicity, powered_multiplicity};
use crate::invariants::{ExponentBox, InvariantRow, InvariantTable};
use crate::submodule::Length;
use rayon::prelude::*;

fn finite(l: Length) -> Result<u64> {
    match l {
        Length::Finite(n) => Ok(n),
        Length::Infinite => Err(EngineError::InfiniteLength),
    }
}

/// One table record; `e_base` is `e(x; M)`.
pub fn ij_row(
    m: &FPModule,
    x: &ParamSystem,
    e_base: u64,
    n: &[u32],
    cap: u32,
) -> Result<InvariantRow> {
    debug_assert_eq!(n.len(), x.len());
    let powered = x.powered(m.ring(), n);
    let len_quot = finite(m.quotient_by_polys(&powered)?.length())?;
    let mult = powered_multiplicity(e_base, n);
    let clo = limit_closure_of_sequence(m, &powered, cap)?;
    let len_mod_lim = finite(clo.submodule.quotient_length())?;
    Ok(InvariantRow {
        n: n.to_vec(),
        len_quot,
        mult,
        i_val: len_quot as i64 - mult as i64,
        j_val: mult as i64 - len_mod_lim as i64,
        len_mod_lim,
        stabilized_at: clo.stabilized_at,
    })
}

pub fn i_fun(m: &FPModule, x: &ParamSystem, n: &[u32], cap: u32) -> Result<i64> {
    let e = multiplicity(m, x)?;
    Ok(ij_row(m, x, e, n, cap)?.i_val)
}

pub fn j_fun(m: &FPModule, x: &ParamSystem, n: &[u32], cap: u32) -> Result<i64> {
    let e = multiplicity(m, x)?;
    Ok(ij_row(m, x, e, n, cap)?.j_val)
}

/// The full table over a box. Rows are computed in parallel and collected
/// in lexicographic tuple order, so the result is deterministic.
pub fn table(
    m: &FPModule,
    x: &ParamSystem,
    box_: &ExponentBox,
    cap: u32,
) -> Result<InvariantTable> {
    if box_.dim() != x.len() {
        return Err(EngineError::BadBox);
    }
    let e_base = multiplicity(m, x)?;
    let tuples = box_.tuples();
    let rows: Vec<Result<InvariantRow>> = tuples
        .par_iter()
        .map(|n| ij_row(m, x, e_base, n, cap))
        .collect();
    let mut out = Vec::with_capacity(rows.len());
    for r in rows {
        out.push(r?);
    }
    Ok(InvariantTable {
        box_: box_.clone(),
        e_base,
        rows: out,
    })
}
