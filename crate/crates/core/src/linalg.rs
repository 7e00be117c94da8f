//! Exact linear algebra on graded pieces.
//!
//! Everything here works degree by degree with dense coefficient matrices
//! and Gaussian elimination, no Groebner bases involved. The test suite
//! uses this as an independent route to lengths, Hilbert function values,
//! and homology dimensions; production code never calls into it.

use crate::field::{Coeff, Field};
use crate::freemod::FreeElement;
use crate::monomial::Monomial;
use crate::poly::{Homogeneity, PolyRing};

/// All monomials in `nvars` variables of total degree `d`, in a fixed
/// order. Local copy: the oracle stays self-contained.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fill(&mut out, &mut exps, 0, d);
    out
}

fn fill(out: &mut Vec<Monomial>, exps: &mut Vec<u32>, i: usize, left: u32) {
    if i + 1 == exps.len() {
        exps[i] = left;
        out.push(Monomial::from_exps(exps));
        exps[i] = 0;
        return;
    }
    for e in (0..=left).rev() {
        exps[i] = e;
        fill(out, exps, i + 1, left - e);
        exps[i] = 0;
    }
}

/// Basis of the degree-`t` piece of a graded free module with the given
/// basis element degrees.
pub fn graded_basis(nvars: usize, degrees: &[i64], t: i64) -> Vec<(Monomial, usize)> {
    let mut basis = Vec::new();
    for (pos, &dp) in degrees.iter().enumerate() {
        let md = t - dp;
        if md < 0 {
            continue;
        }
        for m in monomials_of_degree(nvars, md as u32) {
            basis.push((m, pos));
        }
    }
    basis
}

/// Row-reduce in place and return the rank.
pub fn rank(field: &Field, rows: &mut Vec<Vec<Coeff>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rk = 0;
    for col in 0..ncols {
        let pivot = (rk..rows.len()).find(|&i| !field.is_zero(&rows[i][col]));
        let Some(p) = pivot else { continue };
        rows.swap(rk, p);
        let inv = field.inv(&rows[rk][col]);
        for c in col..ncols {
            rows[rk][c] = field.mul(&rows[rk][c], &inv);
        }
        for i in 0..rows.len() {
            if i != rk && !field.is_zero(&rows[i][col]) {
                let factor = rows[i][col].clone();
                for c in col..ncols {
                    let sub = field.mul(&factor, &rows[rk][c]);
                    rows[i][c] = field.sub(&rows[i][c], &sub);
                }
            }
        }
        rk += 1;
        if rk == rows.len() {
            break;
        }
    }
    rk
}

fn expand(
    ring: &PolyRing,
    v: &FreeElement,
    basis_index: &std::collections::HashMap<(Vec<u32>, usize), usize>,
    width: usize,
) -> Vec<Coeff> {
    let mut row = vec![ring.field().zero(); width];
    for (c, m, p) in v.terms() {
        let key = (m.exps().to_vec(), *p);
        let idx = *basis_index
            .get(&key)
            .expect("homogeneous element expands inside its graded piece");
        row[idx] = ring.field().add(&row[idx], c);
    }
    row
}

/// Dimension of the degree-`t` piece of the submodule of the graded free
/// module (basis degrees `degrees`) generated by the homogeneous `gens`.
pub fn submodule_piece_dim(
    ring: &PolyRing,
    degrees: &[i64],
    gens: &[FreeElement],
    t: i64,
) -> usize {
    let basis = graded_basis(ring.nvars(), degrees, t);
    if basis.is_empty() {
        return 0;
    }
    let index: std::collections::HashMap<(Vec<u32>, usize), usize> = basis
        .iter()
        .enumerate()
        .map(|(i, (m, p))| ((m.exps().to_vec(), *p), i))
        .collect();
    let mut rows = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let dg = match g.homogeneity(degrees) {
            Homogeneity::Degree(d) => d,
            Homogeneity::Zero => continue,
            Homogeneity::No => panic!("graded piece expansion needs homogeneous generators"),
        };
        let md = t - dg;
        if md < 0 {
            continue;
        }
        for m in monomials_of_degree(ring.nvars(), md as u32) {
            let shifted = crate::freemod::term_mul(ring, &ring.field().one(), &m, g);
            rows.push(expand(ring, &shifted, &index, basis.len()));
        }
    }
    rank(ring.field(), &mut rows)
}

/// Dimension of the degree-`t` piece of the quotient `F / <gens>`.
pub fn quotient_piece_dim(ring: &PolyRing, degrees: &[i64], gens: &[FreeElement], t: i64) -> usize {
    graded_basis(ring.nvars(), degrees, t).len() - submodule_piece_dim(ring, degrees, gens, t)
}

/// Total dimension of `F / <gens>` summed over `t_min..=t_max`, with a
/// check that the pieces really vanish at both ends of the window.
pub fn quotient_total_dim(
    ring: &PolyRing,
    degrees: &[i64],
    gens: &[FreeElement],
    t_min: i64,
    t_max: i64,
) -> u64 {
    assert_eq!(
        quotient_piece_dim(ring, degrees, gens, t_max),
        0,
        "window too small"
    );
    if t_min > degrees.iter().copied().min().unwrap_or(0) {
        assert_eq!(quotient_piece_dim(ring, degrees, gens, t_min - 1), 0);
    }
    (t_min..=t_max)
        .map(|t| quotient_piece_dim(ring, degrees, gens, t) as u64)
        .sum()
}

/// Degree-`t` dimension of the middle homology of
/// `C' --down--> C --up--> ...` read homologically: the chain is
/// `G_up/rel --d_up--> G/rel --d_down--> G_dn/rel_dn`, and the value is
/// `dim ker(d_down) - dim im(d_up)` inside the quotient complex.
pub struct HomologyPiece<'a> {
    pub ring: &'a PolyRing,
    /// basis degrees of the middle free module
    pub mid_degs: &'a [i64],
    /// relations dividing out of the middle module
    pub mid_rel: &'a [FreeElement],
    /// columns of the outgoing map, as elements of the downstream module
    pub down_cols: &'a [FreeElement],
    pub down_degs: &'a [i64],
    pub down_rel: &'a [FreeElement],
    /// columns of the incoming map, as elements of the middle module
    pub up_cols: &'a [FreeElement],
}

pub fn homology_piece_dim(hp: &HomologyPiece, t: i64) -> usize {
    let ring = hp.ring;
    let mid_dim = quotient_piece_dim(ring, hp.mid_degs, hp.mid_rel, t);

    // image of the outgoing map inside the downstream quotient
    let mut down_all: Vec<FreeElement> = hp.down_cols.to_vec();
    down_all.extend_from_slice(hp.down_rel);
    let im_down = submodule_piece_dim(ring, hp.down_degs, &down_all, t)
        - submodule_piece_dim(ring, hp.down_degs, hp.down_rel, t);

    // image of the incoming map inside the middle quotient
    let mut up_all: Vec<FreeElement> = hp.up_cols.to_vec();
    up_all.extend_from_slice(hp.mid_rel);
    let im_up = submodule_piece_dim(ring, hp.mid_degs, &up_all, t)
        - submodule_piece_dim(ring, hp.mid_degs, hp.mid_rel, t);

    mid_dim - im_down - im_up
}

/// Total homology dimension over a degree window, with vanishing checks at
/// the window's top end.
pub fn homology_total_dim(hp: &HomologyPiece, t_min: i64, t_max: i64) -> u64 {
    assert_eq!(homology_piece_dim(hp, t_max), 0, "window too small");
    (t_min..=t_max)
        .map(|t| homology_piece_dim(hp, t) as u64)
        .sum()
}

/// Rank of the scalar matrix obtained by evaluating polynomial columns at
/// a point. Used for generic-point exactness spot checks on resolutions.
pub fn evaluated_rank(
    ring: &PolyRing,
    rank_tgt: usize,
    cols: &[FreeElement],
    point: &[Coeff],
) -> usize {
    let field = ring.field();
    let mut rows = vec![vec![field.zero(); cols.len()]; rank_tgt];
    for (j, col) in cols.iter().enumerate() {
        for p in 0..rank_tgt {
            let val = ring.eval(&col.component(ring, p), point);
            rows[p][j] = val;
        }
    }
    rank(field, &mut rows)
}
