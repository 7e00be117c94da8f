//! Elements of free modules `R^r` as sparse term lists.
//!
//! A `FreeElement` is a list of `(coeff, monomial, position)` terms sorted
//! strictly descending under some [`ModuleOrder`]; which order is in force is
//! contextual (canonical storage uses POT over the ring order, Groebner runs
//! under whatever order they were asked for and re-canonicalize afterwards).
//! Positions index the free basis `e_0..e_{r-1}`; the rank is tracked by the
//! surrounding structure, not the element.

use crate::field::Coeff;
use crate::monomial::{ModuleOrder, Monomial};
use crate::poly::{Homogeneity, PolyRing, Polynomial};
use std::cmp::Ordering;

/// One free-module term.
pub type ModTerm = (Coeff, Monomial, usize);

/// A sparse free-module element; see the module docs for the invariant.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FreeElement {
    terms: Vec<ModTerm>,
}

impl FreeElement {
    pub fn zero() -> FreeElement {
        FreeElement { terms: Vec::new() }
    }

    /// The basis vector `e_pos`.
    pub fn basis(ring: &PolyRing, pos: usize) -> FreeElement {
        FreeElement {
            terms: vec![(ring.field().one(), Monomial::one(ring.nvars()), pos)],
        }
    }

    /// Embeds a polynomial at one position.
    pub fn from_poly(p: &Polynomial, pos: usize) -> FreeElement {
        FreeElement {
            terms: p
                .terms()
                .iter()
                .map(|(c, m)| (c.clone(), m.clone(), pos))
                .collect(),
        }
    }

    /// Packs one polynomial per position; terms get re-sorted by the caller's
    /// normalize step, so any input order is fine.
    pub fn from_components(
        ring: &PolyRing,
        ord: &ModuleOrder,
        comps: &[Polynomial],
    ) -> FreeElement {
        let mut terms = Vec::new();
        for (pos, p) in comps.iter().enumerate() {
            terms.extend(p.terms().iter().map(|(c, m)| (c.clone(), m.clone(), pos)));
        }
        normalize(ring, ord, terms)
    }

    /// Rebuilds from terms already in strictly descending order with no
    /// zeros; used by the division loop, which preserves the invariant.
    pub(crate) fn from_sorted_terms(terms: Vec<ModTerm>) -> FreeElement {
        FreeElement { terms }
    }

    /// Everything below the leading term.
    pub(crate) fn tail(&self) -> FreeElement {
        FreeElement {
            terms: self.terms[1..].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[ModTerm] {
        &self.terms
    }

    /// Leading term under the order the element is currently sorted by.
    pub fn lt(&self) -> Option<&ModTerm> {
        self.terms.first()
    }

    /// Largest position index appearing (+1); a rank lower bound.
    pub fn max_pos_plus_one(&self) -> usize {
        self.terms.iter().map(|t| t.2 + 1).max().unwrap_or(0)
    }

    /// The component polynomial at `pos`, canonical under the ring order.
    pub fn component(&self, ring: &PolyRing, pos: usize) -> Polynomial {
        ring.from_terms(
            self.terms
                .iter()
                .filter(|t| t.2 == pos)
                .map(|(c, m, _)| (c.clone(), m.clone()))
                .collect(),
        )
    }

    /// All components as a vector of the given rank.
    pub fn components(&self, ring: &PolyRing, rank: usize) -> Vec<Polynomial> {
        (0..rank).map(|i| self.component(ring, i)).collect()
    }

    /// Homogeneity against a degree vector for the free basis: a term
    /// `c m e_i` has degree `deg m + degrees[i]`.
    pub fn homogeneity(&self, degrees: &[i64]) -> Homogeneity {
        let mut it = self.terms.iter();
        match it.next() {
            None => Homogeneity::Zero,
            Some((_, m, p)) => {
                let d = m.degree() as i64 + degrees[*p];
                if it.all(|(_, m, p)| m.degree() as i64 + degrees[*p] == d) {
                    Homogeneity::Degree(d)
                } else {
                    Homogeneity::No
                }
            }
        }
    }

    /// Shifts every position up by `offset` (block embedding).
    pub fn shift_positions(&self, offset: usize) -> FreeElement {
        FreeElement {
            terms: self
                .terms
                .iter()
                .map(|(c, m, p)| (c.clone(), m.clone(), p + offset))
                .collect(),
        }
    }

    /// Keeps positions in `range`, re-based to start at 0; the caller
    /// guarantees the element is supported there (used to split tag blocks).
    pub fn restrict_positions(&self, start: usize, len: usize) -> FreeElement {
        FreeElement {
            terms: self
                .terms
                .iter()
                .map(|(c, m, p)| {
                    debug_assert!(*p >= start && *p < start + len);
                    (c.clone(), m.clone(), p - start)
                })
                .collect(),
        }
    }

    /// True when every term's position lies in `[start, start+len)`.
    pub fn supported_in(&self, start: usize, len: usize) -> bool {
        self.terms.iter().all(|t| t.2 >= start && t.2 < start + len)
    }

    /// Maps monomials into a ring with `extra` tag variables in front.
    pub fn lift_tagged(&self, extra: usize) -> FreeElement {
        FreeElement {
            terms: self
                .terms
                .iter()
                .map(|(c, m, p)| {
                    let mut exps = vec![0u32; extra];
                    exps.extend_from_slice(m.exps());
                    (c.clone(), Monomial::from_exps(&exps), *p)
                })
                .collect(),
        }
    }

    /// Strips `extra` leading tag variables (all exponents must vanish).
    pub fn drop_tags(&self, extra: usize) -> FreeElement {
        FreeElement {
            terms: self
                .terms
                .iter()
                .map(|(c, m, p)| (c.clone(), m.strip_front(extra), *p))
                .collect(),
        }
    }

    /// True when no term involves the first `extra` variables.
    pub fn is_tag_free(&self, extra: usize) -> bool {
        self.terms
            .iter()
            .all(|(_, m, _)| m.exps()[..extra].iter().all(|&e| e == 0))
    }
}

/// Sorts descending under `ord`, merges duplicates, drops zeros.
pub fn normalize(ring: &PolyRing, ord: &ModuleOrder, mut terms: Vec<ModTerm>) -> FreeElement {
    terms.sort_by(|a, b| ord.cmp((&b.1, b.2), (&a.1, a.2)));
    let mut out: Vec<ModTerm> = Vec::with_capacity(terms.len());
    for (c, m, p) in terms {
        match out.last_mut() {
            Some(last) if last.1 == m && last.2 == p => last.0 = ring.field().add(&last.0, &c),
            _ => out.push((c, m, p)),
        }
        if let Some(last) = out.last() {
            if ring.field().is_zero(&last.0) {
                out.pop();
            }
        }
    }
    FreeElement { terms: out }
}

/// Re-sorts an element for use under a different order.
pub fn resort(ring: &PolyRing, ord: &ModuleOrder, v: &FreeElement) -> FreeElement {
    normalize(ring, ord, v.terms.clone())
}

pub fn add(ring: &PolyRing, ord: &ModuleOrder, a: &FreeElement, b: &FreeElement) -> FreeElement {
    let mut terms = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    while i < a.terms.len() && j < b.terms.len() {
        let ta = &a.terms[i];
        let tb = &b.terms[j];
        match ord.cmp((&ta.1, ta.2), (&tb.1, tb.2)) {
            Ordering::Greater => {
                terms.push(ta.clone());
                i += 1;
            }
            Ordering::Less => {
                terms.push(tb.clone());
                j += 1;
            }
            Ordering::Equal => {
                let c = ring.field().add(&ta.0, &tb.0);
                if !ring.field().is_zero(&c) {
                    terms.push((c, ta.1.clone(), ta.2));
                }
                i += 1;
                j += 1;
            }
        }
    }
    terms.extend_from_slice(&a.terms[i..]);
    terms.extend_from_slice(&b.terms[j..]);
    FreeElement { terms }
}

pub fn neg(ring: &PolyRing, a: &FreeElement) -> FreeElement {
    FreeElement {
        terms: a
            .terms
            .iter()
            .map(|(c, m, p)| (ring.field().neg(c), m.clone(), *p))
            .collect(),
    }
}

pub fn sub(ring: &PolyRing, ord: &ModuleOrder, a: &FreeElement, b: &FreeElement) -> FreeElement {
    add(ring, ord, a, &neg(ring, b))
}

/// Multiplies by one ring term; sortedness is preserved under every order.
pub fn term_mul(ring: &PolyRing, c: &Coeff, m: &Monomial, a: &FreeElement) -> FreeElement {
    if ring.field().is_zero(c) {
        return FreeElement::zero();
    }
    FreeElement {
        terms: a
            .terms
            .iter()
            .map(|(ca, ma, p)| (ring.field().mul(c, ca), ma.mul(m), *p))
            .collect(),
    }
}

/// Multiplies by a polynomial.
pub fn poly_mul(
    ring: &PolyRing,
    ord: &ModuleOrder,
    f: &Polynomial,
    a: &FreeElement,
) -> FreeElement {
    let mut terms = Vec::with_capacity(f.num_terms() * a.terms.len());
    for (c, m) in f.terms() {
        for (ca, ma, p) in &a.terms {
            terms.push((ring.field().mul(c, ca), m.mul(ma), *p));
        }
    }
    normalize(ring, ord, terms)
}

/// Divides every component exactly by `f`; `None` if any division fails.
pub fn div_exact(
    ring: &PolyRing,
    ord: &ModuleOrder,
    a: &FreeElement,
    f: &Polynomial,
    rank: usize,
) -> Option<FreeElement> {
    let mut comps = Vec::with_capacity(rank);
    for i in 0..rank {
        comps.push(ring.div_exact(&a.component(ring, i), f)?);
    }
    Some(FreeElement::from_components(ring, ord, &comps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::monomial::MonomialOrder;
    use std::sync::Arc;

    fn setup() -> (Arc<PolyRing>, ModuleOrder) {
        let r = PolyRing::new(
            Field::new(101).unwrap(),
            vec!["x".into(), "y".into()],
            MonomialOrder::GrevLex,
        )
        .unwrap();
        let ord = ModuleOrder::Pot(r.order().clone());
        (r, ord)
    }

    #[test]
    fn components_round_trip() {
        let (r, ord) = setup();
        let v = FreeElement::from_components(&r, &ord, &[r.var(0), r.add(&r.var(1), &r.one())]);
        assert_eq!(v.component(&r, 0), r.var(0));
        assert_eq!(v.component(&r, 1), r.add(&r.var(1), &r.one()));
        let back = FreeElement::from_components(&r, &ord, &v.components(&r, 2));
        assert_eq!(back, v);
    }

    #[test]
    fn pot_sorting_puts_position_zero_first() {
        let (r, ord) = setup();
        let v = add(
            &r,
            &ord,
            &FreeElement::from_poly(&r.var(1), 1),
            &FreeElement::from_poly(&r.one(), 0),
        );
        assert_eq!(v.lt().unwrap().2, 0);
    }

    #[test]
    fn cancellation() {
        let (r, ord) = setup();
        let v = FreeElement::from_poly(&r.var(0), 1);
        assert!(sub(&r, &ord, &v, &v).is_zero());
    }

    #[test]
    fn exact_division_componentwise() {
        let (r, ord) = setup();
        let f = r.add(&r.var(0), &r.var(1));
        let v = FreeElement::from_components(&r, &ord, &[r.mul(&f, &r.var(0)), r.mul(&f, &f)]);
        let w = div_exact(&r, &ord, &v, &f, 2).unwrap();
        assert_eq!(w.component(&r, 0), r.var(0));
        assert_eq!(w.component(&r, 1), f);
        assert_eq!(div_exact(&r, &ord, &v, &r.var(1), 2), None);
    }

    #[test]
    fn homogeneity_with_twists() {
        let (r, _) = setup();
        let v = add(
            &r,
            &ModuleOrder::Pot(r.order().clone()),
            &FreeElement::from_poly(&r.var(0), 0),
            &FreeElement::from_poly(&r.one(), 1),
        );
        // positions of degrees [0, 1]: x e0 and 1 e1 both have degree 1
        assert_eq!(v.homogeneity(&[0, 1]), Homogeneity::Degree(1));
        assert_eq!(v.homogeneity(&[0, 0]), Homogeneity::No);
    }
}
