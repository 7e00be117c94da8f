//! Growth-order estimates for the I and J columns of an invariant table.
//!
//! Both columns are bounded by a polynomial in min(n_i) of some degree;
//! the estimate reports the least exponent `k` such that
//! `value <= C * max(n)^k` fits the whole table, with the constant `C`
//! calibrated on the interior of the box (rows whose largest coordinate
//! stays below the box maximum). A table that is identically zero gets
//! degree -1.

use crate::invariants::InvariantTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FitEstimate {
    /// Least exponent that fits; -1 for the zero table.
    pub degree: i64,
    /// Calibrated constant; 0 for the zero table.
    pub constant: u64,
}

fn fit(rows: &[(Vec<u32>, i64)]) -> FitEstimate {
    let vals: Vec<(u64, u64)> = rows
        .iter()
        .map(|(n, v)| {
            let maxn = n.iter().copied().max().unwrap_or(1).max(1) as u64;
            (maxn, (*v).max(0) as u64)
        })
        .collect();
    if vals.iter().all(|&(_, v)| v == 0) {
        return FitEstimate {
            degree: -1,
            constant: 0,
        };
    }
    let nmax = vals.iter().map(|&(m, _)| m).max().unwrap();
    let interior: Vec<(u64, u64)> = {
        let inner: Vec<_> = vals.iter().copied().filter(|&(m, _)| m < nmax).collect();
        if inner.is_empty() {
            vals.clone()
        } else {
            inner
        }
    };
    for k in 0..=64u32 {
        let c = interior
            .iter()
            .map(|&(m, v)| {
                let mk = m.checked_pow(k).expect("overflow in fit");
                v.div_ceil(mk)
            })
            .max()
            .unwrap();
        let fits_all = vals.iter().all(|&(m, v)| {
            let mk = m.checked_pow(k).expect("overflow in fit");
            v <= c.saturating_mul(mk)
        });
        if fits_all {
            return FitEstimate {
                degree: k as i64,
                constant: c,
            };
        }
    }
    unreachable!("no exponent up to 64 fits the table");
}

/// Estimate for the growth order of I over the table's box.
pub fn p_estimate(table: &InvariantTable) -> FitEstimate {
    let rows: Vec<(Vec<u32>, i64)> = table.rows.iter().map(|r| (r.n.clone(), r.i_val)).collect();
    fit(&rows)
}

/// Estimate for the growth order of J over the table's box.
pub fn pf_estimate(table: &InvariantTable) -> FitEstimate {
    let rows: Vec<(Vec<u32>, i64)> = table.rows.iter().map(|r| (r.n.clone(), r.j_val)).collect();
    fit(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows_from(f: impl Fn(u32, u32) -> i64, hi: u32) -> Vec<(Vec<u32>, i64)> {
        let mut out = Vec::new();
        for a in 1..=hi {
            for b in 1..=hi {
                out.push((vec![a, b], f(a, b)));
            }
        }
        out
    }

    #[test]
    fn zero_table_has_degree_minus_one() {
        let est = fit(&rows_from(|_, _| 0, 4));
        assert_eq!(
            est,
            FitEstimate {
                degree: -1,
                constant: 0
            }
        );
    }

    #[test]
    fn constant_table_has_degree_zero() {
        let est = fit(&rows_from(|_, _| 1, 4));
        assert_eq!(
            est,
            FitEstimate {
                degree: 0,
                constant: 1
            }
        );
    }

    #[test]
    fn min_coordinate_growth_has_degree_one() {
        let est = fit(&rows_from(|a, b| a.min(b) as i64, 5));
        assert_eq!(est.degree, 1);
    }

    #[test]
    fn product_growth_has_degree_two() {
        let est = fit(&rows_from(|a, b| (a * b) as i64, 5));
        assert_eq!(est.degree, 2);
    }

    #[test]
    fn negative_values_clamp_to_zero() {
        let est = fit(&rows_from(|_, _| -3, 3));
        assert_eq!(est.degree, -1);
    }
}
