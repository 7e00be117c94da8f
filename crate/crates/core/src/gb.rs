//! Buchberger's algorithm over free modules, with the normal selection
//! strategy and the classical pair criteria.
//!
//! Everything here is parametric in a [`ModuleOrder`], so the same loop
//! serves the ring order, POT for canonical submodule bases, and the tag
//! elimination orders behind intersections and syzygies. Reduced bases are
//! unique for a given order, which is what makes the engine's outputs
//! bit-stable regardless of internal strategy.
//!
//! S-pairs are only formed between elements whose leading terms share a
//! position. The coprime (product) criterion is applied at rank 1 only; it
//! is not sound for free modules of higher rank. The chain criterion is
//! applied everywhere, in the pending-pair formulation: skip `(i, j)` when
//! some `lm_k` divides their lcm and neither `(i, k)` nor `(j, k)` is still
//! pending.

use crate::freemod::{self, FreeElement};
use crate::monomial::{ModuleOrder, Monomial};
use crate::poly::{PolyRing, Polynomial};
use std::collections::BTreeSet;
use std::sync::Arc;

/// A reduced Groebner basis of a submodule of `R^rank`.
///
/// Elements are monic, fully inter-reduced, sorted ascending by leading
/// term, and sorted internally under `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    rank: usize,
    order: ModuleOrder,
    elements: Vec<FreeElement>,
}

impl GroebnerBasis {
    /// Runs Buchberger on `gens` and reduces the result.
    pub fn compute(
        ring: Arc<PolyRing>,
        rank: usize,
        order: ModuleOrder,
        gens: &[FreeElement],
    ) -> GroebnerBasis {
        let elements = buchberger_reduced(&ring, &order, gens);
        for v in &elements {
            debug_assert!(v.max_pos_plus_one() <= rank);
        }
        GroebnerBasis {
            ring,
            rank,
            order,
            elements,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn elements(&self) -> &[FreeElement] {
        &self.elements
    }

    /// Fully reduced normal form; the input may be sorted under any order.
    pub fn normal_form(&self, v: &FreeElement) -> FreeElement {
        let w = freemod::resort(&self.ring, &self.order, v);
        normal_form(&self.ring, &self.order, &w, &self.elements)
    }

    pub fn contains(&self, v: &FreeElement) -> bool {
        self.normal_form(v).is_zero()
    }

    /// Leading terms `(monomial, position)` of the basis.
    pub fn leading_terms(&self) -> Vec<(Monomial, usize)> {
        self.elements
            .iter()
            .map(|g| {
                let lt = g.lt().expect("basis elements are nonzero");
                (lt.1.clone(), lt.2)
            })
            .collect()
    }
}

/// Convenience wrapper for ideals: rank-1 Groebner basis of polynomials.
pub fn ideal_groebner(
    ring: Arc<PolyRing>,
    order: ModuleOrder,
    gens: &[Polynomial],
) -> GroebnerBasis {
    let lifted: Vec<FreeElement> = gens.iter().map(|p| FreeElement::from_poly(p, 0)).collect();
    GroebnerBasis::compute(ring, 1, order, &lifted)
}

/// Full normal form of `v` (sorted under `ord`) against `basis`.
///
/// The reducer is the first basis element in list order whose leading term
/// divides; for a reduced basis the choice is irrelevant, during the main
/// loop it fixes determinism.
pub fn normal_form(
    ring: &PolyRing,
    ord: &ModuleOrder,
    v: &FreeElement,
    basis: &[FreeElement],
) -> FreeElement {
    let field = ring.field();
    let mut work = v.clone();
    let mut rem: Vec<crate::freemod::ModTerm> = Vec::new();
    'outer: while let Some((c, m, p)) = work.lt().cloned() {
        for g in basis {
            let (gc, gm, gp) = g.lt().expect("zero element in basis");
            if *gp == p && gm.divides(&m) {
                let q = m.div(gm).expect("divisibility just checked");
                let factor = field.div(&c, gc);
                work = freemod::sub(ring, ord, &work, &freemod::term_mul(ring, &factor, &q, g));
                continue 'outer;
            }
        }
        rem.push((c, m, p));
        work = work.tail();
    }
    // rem was collected in strictly descending order already
    FreeElement::from_sorted_terms(rem)
}

/// The S-element of `f` and `g`; `None` when leading positions differ.
fn s_pair(
    ring: &PolyRing,
    ord: &ModuleOrder,
    f: &FreeElement,
    g: &FreeElement,
) -> Option<FreeElement> {
    let (fc, fm, fp) = f.lt()?;
    let (gc, gm, gp) = g.lt()?;
    if fp != gp {
        return None;
    }
    let field = ring.field();
    let l = fm.lcm(gm);
    let a = freemod::term_mul(ring, &field.inv(fc), &l.div(fm).unwrap(), f);
    let b = freemod::term_mul(ring, &field.inv(gc), &l.div(gm).unwrap(), g);
    Some(freemod::sub(ring, ord, &a, &b))
}

/// Buchberger's loop followed by minimalization and inter-reduction.
pub fn buchberger_reduced(
    ring: &PolyRing,
    ord: &ModuleOrder,
    gens: &[FreeElement],
) -> Vec<FreeElement> {
    let field = ring.field();
    let mut basis: Vec<FreeElement> = gens
        .iter()
        .filter(|v| !v.is_zero())
        .map(|v| freemod::resort(ring, ord, v))
        .collect();

    // is this computation rank 1 as a whole? (product criterion gate)
    let rank_one = basis.iter().all(|v| v.max_pos_plus_one() <= 1);

    // pending pairs keyed by (lcm degree, i, j): normal selection strategy
    let mut pending: BTreeSet<(u64, usize, usize)> = BTreeSet::new();
    let lead = |b: &[FreeElement], i: usize| -> (Monomial, usize) {
        let lt = b[i].lt().expect("basis elements are nonzero");
        (lt.1.clone(), lt.2)
    };
    let push_pairs = |b: &[FreeElement], pending: &mut BTreeSet<(u64, usize, usize)>, j: usize| {
        let (mj, pj) = lead(b, j);
        for i in 0..j {
            let (mi, pi) = lead(b, i);
            if pi == pj {
                pending.insert((mi.lcm(&mj).degree(), i, j));
            }
        }
    };
    for j in 0..basis.len() {
        push_pairs(&basis, &mut pending, j);
    }

    while let Some(&(deg, i, j)) = pending.iter().next() {
        pending.remove(&(deg, i, j));
        let (mi, pi) = lead(&basis, i);
        let (mj, _) = lead(&basis, j);
        // product criterion, sound only at rank 1
        if rank_one && mi.is_coprime(&mj) {
            continue;
        }
        // chain criterion (pending-pair formulation)
        let l = mi.lcm(&mj);
        let chain = (0..basis.len()).any(|k| {
            if k == i || k == j {
                return false;
            }
            let (mk, pk) = lead(&basis, k);
            if pk != pi || !mk.divides(&l) {
                return false;
            }
            let ik = (mi.lcm(&mk).degree(), i.min(k), i.max(k));
            let jk = (mj.lcm(&mk).degree(), j.min(k), j.max(k));
            !pending.contains(&ik) && !pending.contains(&jk)
        });
        if chain {
            continue;
        }
        let s = s_pair(ring, ord, &basis[i], &basis[j]).expect("paired elements share a position");
        let r = normal_form(ring, ord, &s, &basis);
        if !r.is_zero() {
            let (c, _, _) = r.lt().unwrap();
            let r = freemod::term_mul(ring, &field.inv(c), &Monomial::one(ring.nvars()), &r);
            basis.push(r);
            push_pairs(&basis, &mut pending, basis.len() - 1);
        }
    }

    reduce_basis(ring, ord, basis)
}

/// Minimalizes (drops elements whose leading term another one divides) and
/// inter-reduces; output is monic and sorted ascending by leading term.
fn reduce_basis(
    ring: &PolyRing,
    ord: &ModuleOrder,
    mut basis: Vec<FreeElement>,
) -> Vec<FreeElement> {
    let field = ring.field();
    // ascending by leading term: a divisor always sorts before its multiples
    basis.sort_by(|a, b| {
        let la = a.lt().unwrap();
        let lb = b.lt().unwrap();
        ord.cmp((&la.1, la.2), (&lb.1, lb.2))
    });
    let mut kept: Vec<FreeElement> = Vec::new();
    for v in basis {
        let (_, m, p) = v.lt().unwrap();
        let dominated = kept.iter().any(|w| {
            let (_, wm, wp) = w.lt().unwrap();
            wp == p && wm.divides(m)
        });
        if !dominated {
            kept.push(v);
        }
    }
    for i in 0..kept.len() {
        let v = kept[i].clone();
        let others: Vec<FreeElement> = kept
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, w)| w.clone())
            .collect();
        let r = normal_form(ring, ord, &v, &others);
        debug_assert!(!r.is_zero(), "minimal basis element reduced away");
        let (c, _, _) = r.lt().unwrap();
        kept[i] = freemod::term_mul(ring, &field.inv(c), &Monomial::one(ring.nvars()), &r);
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::monomial::MonomialOrder;

    fn ring_xy() -> Arc<PolyRing> {
        PolyRing::new(
            Field::new(0).unwrap(),
            vec!["x".into(), "y".into()],
            MonomialOrder::GrevLex,
        )
        .unwrap()
    }

    fn pot(r: &PolyRing) -> ModuleOrder {
        ModuleOrder::Pot(r.order().clone())
    }

    #[test]
    fn gb_of_xy_and_x_minus_y() {
        // {xy, x - y} under grevlex reduces to {x - y, y^2}
        let r = ring_xy();
        let xy = r.mul(&r.var(0), &r.var(1));
        let xmy = r.sub(&r.var(0), &r.var(1));
        let gb = ideal_groebner(r.clone(), pot(&r), &[xy, xmy.clone()]);
        let elems: Vec<Polynomial> = gb.elements().iter().map(|v| v.component(&r, 0)).collect();
        assert_eq!(elems.len(), 2);
        assert_eq!(elems[0], xmy);
        assert_eq!(elems[1], r.pow(&r.var(1), 2));
        // y^2 is in the ideal
        assert!(gb.contains(&FreeElement::from_poly(&r.pow(&r.var(1), 2), 0)));
    }

    #[test]
    fn normal_form_is_idempotent_and_zero_on_members() {
        let r = ring_xy();
        let gens = [r.mul(&r.var(0), &r.var(1)), r.sub(&r.var(0), &r.var(1))];
        let gb = ideal_groebner(r.clone(), pot(&r), &gens);
        let f = FreeElement::from_poly(&r.pow(&r.add(&r.var(0), &r.var(1)), 3), 0);
        let n1 = gb.normal_form(&f);
        let n2 = gb.normal_form(&n1);
        assert_eq!(n1, n2);
        let member = FreeElement::from_poly(&r.mul(&gens[0], &r.pow(&r.var(1), 5)), 0);
        assert!(gb.contains(&member));
    }

    #[test]
    fn gb_recompute_is_stable() {
        let r = ring_xy();
        let gens = [
            r.sub(&r.pow(&r.var(0), 3), &r.var(1)),
            r.sub(&r.pow(&r.var(1), 2), &r.one()),
        ];
        let gb1 = ideal_groebner(r.clone(), pot(&r), &gens);
        let gb2 = GroebnerBasis::compute(r.clone(), 1, pot(&r), gb1.elements());
        assert_eq!(gb1.elements(), gb2.elements());
    }

    #[test]
    fn module_gb_respects_positions() {
        // submodule of R^2 generated by (x, y) and (0, x): no S-pairs across
        // positions, basis stays put up to reduction
        let r = ring_xy();
        let ord = pot(&r);
        let g1 = FreeElement::from_components(&r, &ord, &[r.var(0), r.var(1)]);
        let g2 = FreeElement::from_components(&r, &ord, &[r.zero(), r.var(0)]);
        let gb = GroebnerBasis::compute(r.clone(), 2, ord, &[g1.clone(), g2.clone()]);
        assert!(gb.contains(&g1));
        assert!(gb.contains(&g2));
        let outside = FreeElement::from_components(&r, gb.order(), &[r.zero(), r.var(1)]);
        assert!(!gb.contains(&outside));
    }

    #[test]
    fn zero_generators_give_empty_basis() {
        let r = ring_xy();
        let gb = ideal_groebner(r.clone(), pot(&r), &[r.zero()]);
        assert!(gb.elements().is_empty());
        assert!(gb.contains(&FreeElement::zero()));
        assert!(!gb.contains(&FreeElement::from_poly(&r.one(), 0)));
    }
}
