//! Parameter-system invariants: limit closures, multiplicities, the I and
//! J length functions with their tables, unmixed components, d/dd-sequence
//! verdicts, annihilator ideals of cohomology, and box-fit estimates.

pub mod aideals;
pub mod dseq;
pub mod estimate;
pub mod ij;
pub mod limit;
pub mod multiplicity;
pub mod unmixed;

pub use aideals::{a_ideals, p_standard_sop, AIdeals};
pub use dseq::{is_d_sequence, is_dd_sequence_box, is_strong_d_on_box, DdVerdict};
pub use estimate::{p_estimate, pf_estimate, FitEstimate};
pub use ij::{i_fun, ij_row, j_fun, table};
pub use limit::{limit_closure, limit_closure_dd, limit_closure_of_sequence, ClosureResult};
pub use multiplicity::{multiplicity, powered_multiplicity};
pub use unmixed::{unmixed_component, UnmixedResult};

use crate::error::{EngineError, Result};

/// Default cap for the stabilization loops.
pub const DEFAULT_STAB_CAP: u32 = 32;

/// A box of exponent tuples `n` with `lo_i <= n_i <= hi_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentBox {
    lo: Vec<u32>,
    hi: Vec<u32>,
}

impl ExponentBox {
    pub fn new(lo: Vec<u32>, hi: Vec<u32>) -> Result<ExponentBox> {
        if lo.is_empty() || lo.len() != hi.len() {
            return Err(EngineError::BadBox);
        }
        if lo.iter().zip(&hi).any(|(&l, &h)| l < 1 || h < l) {
            return Err(EngineError::BadBox);
        }
        Ok(ExponentBox { lo, hi })
    }

    /// The cube `[1..hi]^d`.
    pub fn cube(d: usize, hi: u32) -> Result<ExponentBox> {
        ExponentBox::new(vec![1; d], vec![hi; d])
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn lo(&self) -> &[u32] {
        &self.lo
    }

    pub fn hi(&self) -> &[u32] {
        &self.hi
    }

    pub fn size(&self) -> u64 {
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(&l, &h)| (h - l + 1) as u64)
            .product()
    }

    /// All tuples in lexicographic order.
    pub fn tuples(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::with_capacity(self.size() as usize);
        let mut cur = self.lo.clone();
        loop {
            out.push(cur.clone());
            let mut i = self.dim();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] <= self.hi[i] {
                    break;
                }
                cur[i] = self.lo[i];
            }
        }
    }

    /// A box one shorter, dropping the last coordinate.
    pub fn drop_last(&self) -> Result<ExponentBox> {
        ExponentBox::new(
            self.lo[..self.dim() - 1].to_vec(),
            self.hi[..self.dim() - 1].to_vec(),
        )
    }
}

/// One table record at the tuple `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantRow {
    pub n: Vec<u32>,
    pub len_quot: u64,
    pub mult: u64,
    pub i_val: i64,
    pub j_val: i64,
    pub len_mod_lim: u64,
    pub stabilized_at: u32,
}

/// The I/J table over a box, with the base multiplicity attached.
#[derive(Clone, Debug)]
pub struct InvariantTable {
    pub box_: ExponentBox,
    pub e_base: u64,
    pub rows: Vec<InvariantRow>,
}

impl InvariantTable {
    pub fn max_stabilized_at(&self) -> u32 {
        self.rows.iter().map(|r| r.stabilized_at).max().unwrap_or(0)
    }

    pub fn i_column(&self) -> Vec<(Vec<u32>, i64)> {
        self.rows.iter().map(|r| (r.n.clone(), r.i_val)).collect()
    }

    pub fn j_column(&self) -> Vec<(Vec<u32>, i64)> {
        self.rows.iter().map(|r| (r.n.clone(), r.j_val)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn box_enumeration_is_lexicographic() {
        let b = ExponentBox::new(vec![1, 2], vec![2, 3]).unwrap();
        assert_eq!(b.size(), 4);
        assert_eq!(
            b.tuples(),
            vec![vec![1, 2], vec![1, 3], vec![2, 2], vec![2, 3]]
        );
    }

    #[test]
    fn bad_boxes_rejected() {
        assert!(matches!(
            ExponentBox::new(vec![], vec![]),
            Err(EngineError::BadBox)
        ));
        assert!(matches!(
            ExponentBox::new(vec![0], vec![2]),
            Err(EngineError::BadBox)
        ));
        assert!(matches!(
            ExponentBox::new(vec![3], vec![2]),
            Err(EngineError::BadBox)
        ));
        assert!(matches!(
            ExponentBox::new(vec![1, 1], vec![2]),
            Err(EngineError::BadBox)
        ));
    }
}
