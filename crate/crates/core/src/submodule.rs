//! Submodules of free modules with a cached canonical Groebner basis.
//!
//! A `Submodule` fixes its ambient rank and computes a reduced basis under
//! POT over the ring order at construction; all later queries reuse it.
//! Ideals are the rank-1 case. The quotient-side queries (`quotient_*`)
//! speak about `F / N`, which is where lengths and dimensions live.
//!
//! Intersections go through the classical single tag variable construction:
//! `A /\ B = (tA + (1-t)B) /\ R^r` with `t` eliminated by a block order.
//! Colon by a polynomial is intersection with `f F` followed by exact
//! division. Syzygies use the tag-position construction: POT makes original
//! positions dominate the adjoined ones, and basis elements supported
//! entirely in the tag block are the syzygies.

use crate::error::{EngineError, Result};
use crate::freemod::{self, FreeElement};
use crate::gb::{self, GroebnerBasis};
use crate::monomial::{ModuleOrder, Monomial};
use crate::poly::{Homogeneity, PolyRing, Polynomial};
use std::sync::Arc;

/// Length of a quotient: finite count of standard monomials, or not.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Length {
    Finite(u64),
    Infinite,
}

impl Length {
    pub fn finite(self) -> Option<u64> {
        match self {
            Length::Finite(n) => Some(n),
            Length::Infinite => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Submodule {
    ring: Arc<PolyRing>,
    rank: usize,
    gens: Vec<FreeElement>,
    gb: GroebnerBasis,
}

/// The canonical module order: POT over the ring's own order.
pub fn canonical_order(ring: &PolyRing) -> ModuleOrder {
    ModuleOrder::Pot(ring.order().clone())
}

impl Submodule {
    /// Builds a submodule of `R^rank`; zero generators are dropped.
    pub fn new(ring: Arc<PolyRing>, rank: usize, gens: Vec<FreeElement>) -> Result<Submodule> {
        let ord = canonical_order(&ring);
        let mut cleaned = Vec::with_capacity(gens.len());
        for v in gens {
            if v.max_pos_plus_one() > rank {
                return Err(EngineError::RankMismatch {
                    expected: rank,
                    got: v.max_pos_plus_one(),
                });
            }
            if !v.is_zero() {
                cleaned.push(freemod::resort(&ring, &ord, &v));
            }
        }
        let gb = GroebnerBasis::compute(ring.clone(), rank, ord, &cleaned);
        Ok(Submodule {
            ring,
            rank,
            gens: cleaned,
            gb,
        })
    }

    /// The zero submodule of `R^rank`.
    pub fn zero(ring: Arc<PolyRing>, rank: usize) -> Submodule {
        Submodule::new(ring, rank, Vec::new()).expect("no generators to reject")
    }

    /// An ideal, as a rank-1 submodule.
    pub fn ideal(ring: Arc<PolyRing>, gens: &[Polynomial]) -> Result<Submodule> {
        let lifted = gens.iter().map(|p| FreeElement::from_poly(p, 0)).collect();
        Submodule::new(ring, 1, lifted)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[FreeElement] {
        &self.gens
    }

    pub fn gb(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn is_zero_submodule(&self) -> bool {
        self.gb.elements().is_empty()
    }

    fn check_ambient(&self, other: &Submodule) -> Result<()> {
        if self.ring != other.ring {
            return Err(EngineError::MixedRings);
        }
        if self.rank != other.rank {
            return Err(EngineError::RankMismatch {
                expected: self.rank,
                got: other.rank,
            });
        }
        Ok(())
    }

    pub fn normal_form(&self, v: &FreeElement) -> FreeElement {
        self.gb.normal_form(v)
    }

    pub fn contains(&self, v: &FreeElement) -> bool {
        self.gb.contains(v)
    }

    pub fn contains_poly(&self, f: &Polynomial) -> bool {
        debug_assert_eq!(self.rank, 1);
        self.contains(&FreeElement::from_poly(f, 0))
    }

    pub fn contains_submodule(&self, other: &Submodule) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other.gens.iter().all(|v| self.contains(v)))
    }

    /// Equality as submodules (mutual containment via normal forms).
    pub fn equal(&self, other: &Submodule) -> Result<bool> {
        Ok(self.contains_submodule(other)? && other.contains_submodule(self)?)
    }

    /// The sum `N + <extra>`.
    pub fn plus_elements(&self, extra: &[FreeElement]) -> Result<Submodule> {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Submodule::new(self.ring.clone(), self.rank, gens)
    }

    pub fn plus(&self, other: &Submodule) -> Result<Submodule> {
        self.check_ambient(other)?;
        self.plus_elements(&other.gens)
    }

    /// All generators homogeneous for the given basis degrees?
    pub fn is_homogeneous(&self, degrees: &[i64]) -> bool {
        debug_assert_eq!(degrees.len(), self.rank);
        self.gens
            .iter()
            .all(|v| !matches!(v.homogeneity(degrees), Homogeneity::No))
    }

    // ---- Leading term data ----

    /// Leading monomials of the basis,  bucketed by position.
    fn leading_by_position(&self) -> Vec<Vec<Monomial>> {
        let mut buckets = vec![Vec::new(); self.rank];
        for (m, p) in self.gb.leading_terms() {
            buckets[p].push(m);
        }
        buckets
    }

    // ---- Quotient-side queries: F / N ----

    /// Standard monomials of `F/N`: pairs `(monomial, position)` outside the
    /// leading term module. `None` when there are infinitely many.
    pub fn quotient_std_monomials(&self) -> Option<Vec<(Monomial, usize)>> {
        let mut out = Vec::new();
        self.visit_std_monomials(|m, p| out.push((m.clone(), p)))?;
        Some(out)
    }

    /// Vector space dimension of `F/N` over the base field.
    pub fn quotient_length(&self) -> Length {
        let mut count: u64 = 0;
        match self.visit_std_monomials(|_, _| count += 1) {
            Some(()) => Length::Finite(count),
            None => Length::Infinite,
        }
    }

    /// Size of the enumeration box behind `quotient_length`, as a cheap
    /// upper bound on the work it will do. `None` means infinite length.
    pub fn quotient_box_size(&self) -> Option<u128> {
        let mut total: u128 = 0;
        for lms in self.leading_by_position() {
            match position_bounds(self.ring.nvars(), &lms) {
                PositionBounds::Dead => {}
                PositionBounds::Infinite => return None,
                PositionBounds::Box(bounds) => {
                    let mut prod: u128 = 1;
                    for b in bounds {
                        prod = prod.saturating_mul(b as u128);
                    }
                    total = total.saturating_add(prod);
                }
            }
        }
        Some(total)
    }

    fn visit_std_monomials(&self, mut visit: impl FnMut(&Monomial, usize)) -> Option<()> {
        let n = self.ring.nvars();
        for (pos, lms) in self.leading_by_position().into_iter().enumerate() {
            match position_bounds(n, &lms) {
                PositionBounds::Dead => continue,
                PositionBounds::Infinite => return None,
                PositionBounds::Box(bounds) => {
                    let mut exps = vec![0u32; n];
                    loop {
                        let m = Monomial::from_exps(&exps);
                        if !lms.iter().any(|l| l.divides(&m)) {
                            visit(&m, pos);
                        }
                        // mixed-radix increment over the box
                        let mut i = n;
                        loop {
                            if i == 0 {
                                break;
                            }
                            i -= 1;
                            exps[i] += 1;
                            if exps[i] < bounds[i] {
                                break;
                            }
                            exps[i] = 0;
                        }
                        if exps.iter().all(|&e| e == 0) {
                            break;
                        }
                    }
                }
            }
        }
        Some(())
    }

    /// Krull dimension of `F/N`; -1 for the zero module.
    ///
    /// Computed combinatorially from the leading term module: per position,
    /// the largest set of variables not containing the support of any
    /// leading monomial.
    pub fn quotient_dim(&self) -> i64 {
        let n = self.ring.nvars();
        assert!(
            n <= 24,
            "dimension by subset enumeration needs few variables"
        );
        let mut best: i64 = -1;
        for lms in self.leading_by_position() {
            let supports: Vec<u32> = lms
                .iter()
                .map(|m| {
                    m.exps().iter().enumerate().fold(
                        0u32,
                        |acc, (i, &e)| if e > 0 { acc | (1 << i) } else { acc },
                    )
                })
                .collect();
            for mask in 0u32..(1u32 << n) {
                if supports.iter().any(|&s| s & !mask == 0) {
                    continue;
                }
                best = best.max(mask.count_ones() as i64);
            }
        }
        best
    }

    // ---- Ideal-theoretic operations ----

    /// Intersection of two submodules of the same ambient free module.
    pub fn intersect(&self, other: &Submodule) -> Result<Submodule> {
        self.check_ambient(other)?;
        let tagged = self.ring.with_tags_front(1);
        let ord = ModuleOrder::TagBlock {
            head: 1,
            then: Box::new(ModuleOrder::Pot(tagged.order().clone())),
        };
        let t = tagged.var(0);
        let one_minus_t = tagged.sub(&tagged.one(), &t);
        let mut gens = Vec::with_capacity(self.gens.len() + other.gens.len());
        for a in &self.gens {
            gens.push(freemod::poly_mul(&tagged, &ord, &t, &a.lift_tagged(1)));
        }
        for b in &other.gens {
            gens.push(freemod::poly_mul(
                &tagged,
                &ord,
                &one_minus_t,
                &b.lift_tagged(1),
            ));
        }
        let basis = gb::buchberger_reduced(&tagged, &ord, &gens);
        let kept: Vec<FreeElement> = basis
            .iter()
            .filter(|v| v.is_tag_free(1))
            .map(|v| v.drop_tags(1))
            .collect();
        Submodule::new(self.ring.clone(), self.rank, kept)
    }

    /// The colon `(N : f) = { v in F : f v in N }`.
    pub fn colon_poly(&self, f: &Polynomial) -> Result<Submodule> {
        if f.is_zero() {
            return Err(EngineError::ColonByZero);
        }
        let f_free = (0..self.rank)
            .map(|i| {
                freemod::poly_mul(
                    &self.ring,
                    &canonical_order(&self.ring),
                    f,
                    &FreeElement::basis(&self.ring, i),
                )
            })
            .collect();
        let ff = Submodule::new(self.ring.clone(), self.rank, f_free)?;
        let meet = self.intersect(&ff)?;
        let ord = canonical_order(&self.ring);
        let mut gens = Vec::with_capacity(meet.gens.len());
        for v in &meet.gens {
            let w = freemod::div_exact(&self.ring, &ord, v, f, self.rank)
                .expect("intersection with fF is divisible by f");
            gens.push(w);
        }
        Submodule::new(self.ring.clone(), self.rank, gens)
    }

    /// The ideal `(N : v) = { f in R : f v in N }` for a module element.
    pub fn colon_element(&self, v: &FreeElement) -> Result<Submodule> {
        if v.max_pos_plus_one() > self.rank {
            return Err(EngineError::RankMismatch {
                expected: self.rank,
                got: v.max_pos_plus_one(),
            });
        }
        let prei = preimage_gens(&self.ring, self.rank, &[v.clone()], self.gb.elements());
        let polys: Vec<Polynomial> = prei.iter().map(|w| w.component(&self.ring, 0)).collect();
        Submodule::ideal(self.ring.clone(), &polys)
    }
}

enum PositionBounds {
    /// A unit leading term kills the position entirely.
    Dead,
    /// Some variable has no pure power among the leading monomials.
    Infinite,
    /// Standard monomials fit the half-open box `[0, bounds)`.
    Box(Vec<u32>),
}

fn position_bounds(nvars: usize, lms: &[Monomial]) -> PositionBounds {
    if lms.iter().any(|m| m.is_one()) {
        return PositionBounds::Dead;
    }
    let mut bounds = Vec::with_capacity(nvars);
    for j in 0..nvars {
        let mut best: Option<u32> = None;
        for m in lms {
            let e = m.exp(j);
            if e > 0 && m.degree() == e as u64 {
                best = Some(best.map_or(e, |b| b.min(e)));
            }
        }
        match best {
            Some(e) => bounds.push(e),
            None => return PositionBounds::Infinite,
        }
    }
    PositionBounds::Box(bounds)
}

/// Generators of the syzygy module of `gens` (a submodule of `R^s`,
/// `s = gens.len()`), via the tag-position construction.
pub fn syzygies(ring: &Arc<PolyRing>, rank: usize, gens: &[FreeElement]) -> Vec<FreeElement> {
    let s = gens.len();
    if s == 0 {
        return Vec::new();
    }
    let ord = canonical_order(ring);
    let mut ext = Vec::with_capacity(s);
    for (i, g) in gens.iter().enumerate() {
        debug_assert!(g.max_pos_plus_one() <= rank);
        let tagged = freemod::add(ring, &ord, g, &FreeElement::basis(ring, rank + i));
        ext.push(tagged);
    }
    let basis = gb::buchberger_reduced(ring, &ord, &ext);
    basis
        .iter()
        .filter(|v| v.supported_in(rank, s))
        .map(|v| v.restrict_positions(rank, s))
        .collect()
}

/// Generators of the preimage `{ v in R^a : sum v_i cols_i in <target> }`,
/// with `cols` and `target` living in the ambient `R^rank`.
///
/// Syzygies of `(cols | target)` projected onto the first block.
pub fn preimage_gens(
    ring: &Arc<PolyRing>,
    rank: usize,
    cols: &[FreeElement],
    target: &[FreeElement],
) -> Vec<FreeElement> {
    let a = cols.len();
    if a == 0 {
        return Vec::new();
    }
    let all: Vec<FreeElement> = cols.iter().chain(target.iter()).cloned().collect();
    let syz = syzygies(ring, rank, &all);
    let ord = canonical_order(ring);
    syz.iter()
        .map(|v| {
            let comps: Vec<Polynomial> = (0..a).map(|i| v.component(ring, i)).collect();
            FreeElement::from_components(ring, &ord, &comps)
        })
        .filter(|v| !v.is_zero())
        .collect()
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

    fn ideal_of(r: &Arc<PolyRing>, gens: &[Polynomial]) -> Submodule {
        Submodule::ideal(r.clone(), gens).unwrap()
    }

    #[test]
    fn std_monomials_of_square_max_ideal() {
        // (x^2, xy, y^2): standard monomials {1, x, y}
        let r = ring_xy();
        let i = ideal_of(
            &r,
            &[
                r.pow(&r.var(0), 2),
                r.mul(&r.var(0), &r.var(1)),
                r.pow(&r.var(1), 2),
            ],
        );
        let std = i.quotient_std_monomials().unwrap();
        let mut got: Vec<Vec<u32>> = std.iter().map(|(m, _)| m.exps().to_vec()).collect();
        got.sort();
        assert_eq!(got, vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
        assert_eq!(i.quotient_length(), Length::Finite(3));
    }

    #[test]
    fn infinite_length_detected() {
        let r = ring_xy();
        let i = ideal_of(&r, &[r.var(0)]);
        assert_eq!(i.quotient_length(), Length::Infinite);
        assert_eq!(i.quotient_std_monomials(), None);
        assert_eq!(i.quotient_dim(), 1);
    }

    #[test]
    fn dims() {
        let r = ring_xy();
        assert_eq!(Submodule::zero(r.clone(), 1).quotient_dim(), 2);
        let unit = ideal_of(&r, &[r.one()]);
        assert_eq!(unit.quotient_dim(), -1);
        assert_eq!(unit.quotient_length(), Length::Finite(0));
        let pt = ideal_of(&r, &[r.var(0), r.var(1)]);
        assert_eq!(pt.quotient_dim(), 0);
        assert_eq!(pt.quotient_length(), Length::Finite(1));
    }

    #[test]
    fn intersection_example() {
        // (x^2, y) /\ (x) = (x^2, xy), checked against the frozen answer
        let r = ring_xy();
        let a = ideal_of(&r, &[r.pow(&r.var(0), 2), r.var(1)]);
        let b = ideal_of(&r, &[r.var(0)]);
        let meet = a.intersect(&b).unwrap();
        let expect = ideal_of(&r, &[r.pow(&r.var(0), 2), r.mul(&r.var(0), &r.var(1))]);
        assert!(meet.equal(&expect).unwrap());
    }

    #[test]
    fn colon_example() {
        // (x^2, xy, y^2) : x = (x, y)
        let r = ring_xy();
        let i = ideal_of(
            &r,
            &[
                r.pow(&r.var(0), 2),
                r.mul(&r.var(0), &r.var(1)),
                r.pow(&r.var(1), 2),
            ],
        );
        let q = i.colon_poly(&r.var(0)).unwrap();
        let expect = ideal_of(&r, &[r.var(0), r.var(1)]);
        assert!(q.equal(&expect).unwrap());
        // every generator g of the colon satisfies f g in N
        for g in q.generators() {
            let fg = freemod::poly_mul(&r, &canonical_order(&r), &r.var(0), g);
            assert!(i.contains(&fg));
        }
        assert!(matches!(
            i.colon_poly(&r.zero()),
            Err(EngineError::ColonByZero)
        ));
    }

    #[test]
    fn syzygy_of_koszul_pair() {
        // syzygies of (x, y) in R^1: generated by (y, -x)
        let r = ring_xy();
        let gens = [
            FreeElement::from_poly(&r.var(0), 0),
            FreeElement::from_poly(&r.var(1), 0),
        ];
        let syz = syzygies(&r, 1, &gens);
        assert_eq!(syz.len(), 1);
        let ord = canonical_order(&r);
        // evaluate the syzygy back on the generators
        let mut acc = FreeElement::zero();
        for (i, g) in gens.iter().enumerate() {
            let coeff = syz[0].component(&r, i);
            acc = freemod::add(&r, &ord, &acc, &freemod::poly_mul(&r, &ord, &coeff, g));
        }
        assert!(acc.is_zero());
    }

    #[test]
    fn colon_element_annihilator() {
        // in R^1 / (x y, y^2) the element y has annihilator (x, y)
        let r = ring_xy();
        let n = ideal_of(&r, &[r.mul(&r.var(0), &r.var(1)), r.pow(&r.var(1), 2)]);
        let ann = n
            .colon_element(&FreeElement::from_poly(&r.var(1), 0))
            .unwrap();
        let expect = ideal_of(&r, &[r.var(0), r.var(1)]);
        assert!(ann.equal(&expect).unwrap());
    }

    #[test]
    fn equality_is_basis_independent() {
        let r = ring_xy();
        let a = ideal_of(&r, &[r.var(0), r.var(1)]);
        let b = ideal_of(&r, &[r.add(&r.var(0), &r.var(1)), r.var(1)]);
        assert!(a.equal(&b).unwrap());
    }
}
