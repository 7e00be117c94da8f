//! Exponent vectors and the term orders driving the engine.
//!
//! A `Monomial` is a plain exponent vector; it carries no ordering of its
//! own. Comparisons always go through a [`MonomialOrder`] (or a
//! [`ModuleOrder`] for free-module terms), so the same data can be viewed
//! under the ring's order or under an elimination order without copying.

use smallvec::SmallVec;
use std::cmp::Ordering;

/// An exponent vector over a fixed variable list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u32; 8]>,
}

impl Monomial {
    /// The monomial `1` in `nvars` variables.
    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn from_exps(exps: &[u32]) -> Monomial {
        Monomial {
            exps: SmallVec::from_slice(exps),
        }
    }

    /// The monomial `x_i^e`.
    pub fn var_power(nvars: usize, i: usize, e: u32) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.exps[i] = e;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Total degree.
    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Exact quotient, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let mut exps = SmallVec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial { exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Appends extra variables (exponent 0); used when adjoining tag variables.
    pub fn extend(&self, extra: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.extend(std::iter::repeat(0).take(extra));
        Monomial { exps }
    }

    /// Drops the first `k` variables; caller guarantees their exponents vanish.
    pub fn strip_front(&self, k: usize) -> Monomial {
        debug_assert!(self.exps[..k].iter().all(|&e| e == 0));
        Monomial {
            exps: SmallVec::from_slice(&self.exps[k..]),
        }
    }
}

/// All monomials of total degree `d`, first variable's exponent largest
/// first.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(out: &mut Vec<Monomial>, exps: &mut Vec<u32>, i: usize, left: u32) {
        if i + 1 == exps.len() {
            exps[i] = left;
            out.push(Monomial::from_exps(exps));
            exps[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            exps[i] = e;
            rec(out, exps, i + 1, left - e);
            exps[i] = 0;
        }
    }
    let mut out = Vec::new();
    rec(&mut out, &mut vec![0u32; nvars], 0, d);
    out
}

/// A term order on monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// Block elimination: the first `head` variables dominate (compared by
    /// graded reverse lex among themselves), ties fall through to `tail`
    /// on the remaining variables.
    Block {
        head: usize,
        tail: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    /// Eliminates the first `k` variables over a base order on the rest.
    pub fn elimination(k: usize, base: MonomialOrder) -> MonomialOrder {
        MonomialOrder::Block {
            head: k,
            tail: Box::new(base),
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_slices(a.exps(), b.exps())
    }

    fn cmp_slices(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Lex => {
                for (x, y) in a.iter().zip(b) {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::Block { head, tail } => {
                let k = *head;
                match grevlex(&a[..k], &b[..k]) {
                    Ordering::Equal => tail.cmp_slices(&a[k..], &b[k..]),
                    ord => ord,
                }
            }
        }
    }
}

/// Graded reverse lexicographic comparison on exponent slices.
fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {
            for (x, y) in a.iter().zip(b).rev() {
                match x.cmp(y) {
                    // the last differing exponent decides, smaller wins
                    Ordering::Equal => continue,
                    ord => return ord.reverse(),
                }
            }
            Ordering::Equal
        }
        ord => ord,
    }
}

/// A term order on free-module monomials `(monomial, position)`.
///
/// Position 0 is the highest basis vector in both position-sensitive
/// variants.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ModuleOrder {
    /// Position over term: compare positions first, then monomials.
    Pot(MonomialOrder),
    /// Term over position: compare monomials first, then positions.
    Top(MonomialOrder),
    /// Tag elimination: the first `head` variables dominate everything,
    /// including positions (compared by grevlex among themselves); ties fall
    /// through to the inner order. POT alone cannot eliminate a variable
    /// because a tagged term can hide behind a better position.
    TagBlock { head: usize, then: Box<ModuleOrder> },
}

impl ModuleOrder {
    pub fn base(&self) -> &MonomialOrder {
        match self {
            ModuleOrder::Pot(o) | ModuleOrder::Top(o) => o,
            ModuleOrder::TagBlock { then, .. } => then.base(),
        }
    }

    pub fn cmp(&self, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering {
        match self {
            ModuleOrder::Pot(o) => match b.1.cmp(&a.1) {
                Ordering::Equal => o.cmp(a.0, b.0),
                ord => ord,
            },
            ModuleOrder::Top(o) => match o.cmp(a.0, b.0) {
                Ordering::Equal => b.1.cmp(&a.1),
                ord => ord,
            },
            ModuleOrder::TagBlock { head, then } => {
                match grevlex(&a.0.exps()[..*head], &b.0.exps()[..*head]) {
                    Ordering::Equal => then.cmp(a, b),
                    ord => ord,
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e)
    }

    #[test]
    fn divisibility() {
        assert_eq!(m(&[3, 1]).div(&m(&[1, 1])), Some(m(&[2, 0])));
        assert_eq!(m(&[1, 2]).div(&m(&[2, 0])), None);
        assert_eq!(m(&[1, 2]).lcm(&m(&[2, 0])), m(&[2, 2]));
        assert!(m(&[1, 0]).is_coprime(&m(&[0, 5])));
        assert!(!m(&[1, 1]).is_coprime(&m(&[0, 1])));
    }

    #[test]
    fn lex_order() {
        let o = MonomialOrder::Lex;
        // x > y^5 under lex with x first
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1]), &m(&[1, 2])), Ordering::Less);
    }

    #[test]
    fn grevlex_order() {
        let o = MonomialOrder::GrevLex;
        // degree decides first
        assert_eq!(o.cmp(&m(&[0, 3]), &m(&[2, 0])), Ordering::Greater);
        // x^2yz < xy^3: same degree 4, last exponent 1 > 0 so the first loses
        assert_eq!(o.cmp(&m(&[2, 1, 1]), &m(&[1, 3, 0])), Ordering::Less);
        // classical: x1 x3 < x2^2 in grevlex
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn block_eliminates_head() {
        // one tag variable in front, grevlex behind
        let o = MonomialOrder::elimination(1, MonomialOrder::GrevLex);
        // t beats any tag-free monomial
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        // tag-free monomials compare by the tail order
        assert_eq!(o.cmp(&m(&[0, 1, 0]), &m(&[0, 0, 2])), Ordering::Less);
    }

    #[test]
    fn module_orders() {
        let pot = ModuleOrder::Pot(MonomialOrder::GrevLex);
        let top = ModuleOrder::Top(MonomialOrder::GrevLex);
        let x = m(&[1, 0]);
        let y2 = m(&[0, 2]);
        // POT: position 0 dominates regardless of monomials
        assert_eq!(pot.cmp((&x, 0), (&y2, 1)), Ordering::Greater);
        assert_eq!(pot.cmp((&x, 1), (&y2, 0)), Ordering::Less);
        // TOP: monomial degree dominates
        assert_eq!(top.cmp((&x, 0), (&y2, 1)), Ordering::Less);
        assert_eq!(top.cmp((&x, 1), (&x, 0)), Ordering::Less);
    }

    #[test]
    fn tag_block_eliminates_across_positions() {
        // one tag variable; base ring has two real variables
        let inner = ModuleOrder::Pot(MonomialOrder::elimination(1, MonomialOrder::GrevLex));
        let ord = ModuleOrder::TagBlock {
            head: 1,
            then: Box::new(inner),
        };
        let t = m(&[1, 0, 0]);
        let y3 = m(&[0, 0, 3]);
        // a tagged term at a bad position still beats a tag-free term at
        // position 0
        assert_eq!(ord.cmp((&t, 5), (&y3, 0)), Ordering::Greater);
        // among tag-free terms, position decides first
        assert_eq!(ord.cmp((&y3, 1), (&m(&[0, 1, 0]), 0)), Ordering::Less);
    }
}
