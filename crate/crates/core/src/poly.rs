//! Sparse polynomials over a fixed ring description.
//!
//! A `Polynomial` is a term list `(coeff, monomial)` kept strictly descending
//! under the order of the ring that produced it, with no zero coefficients
//! and no repeated monomials. Every operation re-normalizes eagerly, so two
//! equal polynomials are structurally equal. The ring itself is cheap data
//! (field, variable names, order) shared behind `Arc` by everything built on
//! top; polynomials do not carry a ring pointer.

use crate::field::{Coeff, Field};
use crate::monomial::{Monomial, MonomialOrder};
use std::cmp::Ordering;
use std::sync::Arc;

/// A polynomial ring `k[x_1..x_n]` with a fixed term order.
///
/// The grading is standard: every variable has degree 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    field: Field,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(
        field: Field,
        vars: Vec<String>,
        order: MonomialOrder,
    ) -> Result<Arc<PolyRing>, String> {
        if vars.is_empty() {
            return Err("a ring needs at least one variable".into());
        }
        for v in &vars {
            let mut chars = v.chars();
            let head_ok = chars
                .next()
                .map(|c| c.is_ascii_alphabetic() || c == '_')
                .unwrap_or(false);
            if !head_ok || !v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(format!("bad variable name {v:?}"));
            }
        }
        let mut sorted = vars.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != vars.len() {
            return Err("duplicate variable names".into());
        }
        Ok(Arc::new(PolyRing { field, vars, order }))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// A ring with `extra` fresh variables appended in front (used for tag
    /// variables in elimination constructions). Fresh names avoid clashes.
    pub fn with_tags_front(&self, extra: usize) -> Arc<PolyRing> {
        let mut vars = Vec::with_capacity(self.vars.len() + extra);
        for i in 0..extra {
            let mut name = format!("tag{i}");
            while self.vars.contains(&name) {
                name.push('_');
            }
            vars.push(name);
        }
        vars.extend(self.vars.iter().cloned());
        Arc::new(PolyRing {
            field: self.field.clone(),
            vars,
            order: MonomialOrder::elimination(extra, self.order.clone()),
        })
    }

    // ---- Constructors ----

    pub fn zero(&self) -> Polynomial {
        Polynomial { terms: Vec::new() }
    }

    pub fn one(&self) -> Polynomial {
        Polynomial {
            terms: vec![(self.field.one(), Monomial::one(self.nvars()))],
        }
    }

    pub fn constant(&self, c: Coeff) -> Polynomial {
        self.from_terms(vec![(c, Monomial::one(self.nvars()))])
    }

    /// The variable `x_i`.
    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial {
            terms: vec![(self.field.one(), Monomial::var_power(self.nvars(), i, 1))],
        }
    }

    pub fn monomial(&self, m: Monomial) -> Polynomial {
        Polynomial {
            terms: vec![(self.field.one(), m)],
        }
    }

    /// Builds a polynomial from arbitrary terms, normalizing under the ring order.
    pub fn from_terms(&self, terms: Vec<(Coeff, Monomial)>) -> Polynomial {
        let mut p = Polynomial { terms };
        self.normalize(&mut p);
        p
    }

    /// Sorts descending, merges duplicates, drops zeros.
    fn normalize(&self, p: &mut Polynomial) {
        self.normalize_under(p, &self.order)
    }

    pub(crate) fn normalize_under(&self, p: &mut Polynomial, order: &MonomialOrder) {
        p.terms.sort_by(|a, b| order.cmp(&b.1, &a.1));
        let mut out: Vec<(Coeff, Monomial)> = Vec::with_capacity(p.terms.len());
        for (c, m) in p.terms.drain(..) {
            match out.last_mut() {
                Some(last) if last.1 == m => last.0 = self.field.add(&last.0, &c),
                _ => out.push((c, m)),
            }
            if let Some(last) = out.last() {
                if self.field.is_zero(&last.0) {
                    out.pop();
                }
            }
        }
        p.terms = out;
    }

    // ---- Arithmetic ----

    pub fn add(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        self.add_under(a, b, &self.order)
    }

    pub(crate) fn add_under(
        &self,
        a: &Polynomial,
        b: &Polynomial,
        order: &MonomialOrder,
    ) -> Polynomial {
        let mut terms = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() && j < b.terms.len() {
            match order.cmp(&a.terms[i].1, &b.terms[j].1) {
                Ordering::Greater => {
                    terms.push(a.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    terms.push(b.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.field.add(&a.terms[i].0, &b.terms[j].0);
                    if !self.field.is_zero(&c) {
                        terms.push((c, a.terms[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&a.terms[i..]);
        terms.extend_from_slice(&b.terms[j..]);
        Polynomial { terms }
    }

    pub fn neg(&self, a: &Polynomial) -> Polynomial {
        Polynomial {
            terms: a
                .terms
                .iter()
                .map(|(c, m)| (self.field.neg(c), m.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        self.add(a, &self.neg(b))
    }

    /// Multiplies by a single term; preserves sortedness under any order.
    pub fn term_mul(&self, c: &Coeff, m: &Monomial, a: &Polynomial) -> Polynomial {
        if self.field.is_zero(c) {
            return self.zero();
        }
        Polynomial {
            terms: a
                .terms
                .iter()
                .map(|(ca, ma)| (self.field.mul(c, ca), ma.mul(m)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff, a: &Polynomial) -> Polynomial {
        self.term_mul(c, &Monomial::one(self.nvars()), a)
    }

    pub fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        let mut terms = Vec::with_capacity(a.terms.len() * b.terms.len());
        for (ca, ma) in &a.terms {
            for (cb, mb) in &b.terms {
                terms.push((self.field.mul(ca, cb), ma.mul(mb)));
            }
        }
        self.from_terms(terms)
    }

    pub fn pow(&self, a: &Polynomial, mut e: u32) -> Polynomial {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Makes the leading coefficient 1; zero stays zero.
    pub fn monic(&self, a: &Polynomial) -> Polynomial {
        match a.terms.first() {
            None => self.zero(),
            Some((c, _)) if self.field.is_one(c) => a.clone(),
            Some((c, _)) => self.scale(&self.field.inv(c), a),
        }
    }

    /// Exact division by `b`; `None` when `b` does not divide `a`.
    ///
    /// Plain multivariate division tracking only the quotient: the remainder
    /// must come out zero.
    pub fn div_exact(&self, a: &Polynomial, b: &Polynomial) -> Option<Polynomial> {
        assert!(!b.is_zero(), "division by zero polynomial");
        let (bc, bm) = (&b.terms[0].0, &b.terms[0].1);
        let bc_inv = self.field.inv(bc);
        let mut rem = a.clone();
        let mut quot_terms = Vec::new();
        while let Some((rc, rm)) = rem.terms.first().cloned() {
            let q = rm.div(bm)?;
            let qc = self.field.mul(&rc, &bc_inv);
            rem = self.sub(&rem, &self.term_mul(&qc, &q, b));
            quot_terms.push((qc, q));
        }
        Some(Polynomial { terms: quot_terms })
    }

    /// Evaluates at a point (one coefficient per variable).
    pub fn eval(&self, a: &Polynomial, point: &[Coeff]) -> Coeff {
        assert_eq!(point.len(), self.nvars());
        let mut acc = self.field.zero();
        for (c, m) in &a.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    t = self.field.mul(&t, &point[i]);
                }
            }
            acc = self.field.add(&acc, &t);
        }
        acc
    }
}

/// A sparse polynomial; see the module docs for the representation invariant.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Coeff, Monomial)>,
}

impl Polynomial {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Coeff, Monomial)] {
        &self.terms
    }

    /// Leading term under the order the terms are currently sorted by.
    pub fn lt(&self) -> Option<(&Coeff, &Monomial)> {
        self.terms.first().map(|(c, m)| (c, m))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Maximal total degree over all terms (order-independent).
    pub fn degree(&self) -> Option<u64> {
        self.terms.iter().map(|(_, m)| m.degree()).max()
    }

    /// `Degree(d)` when all terms share total degree `d`.
    pub fn homogeneity(&self) -> Homogeneity {
        let mut it = self.terms.iter();
        match it.next() {
            None => Homogeneity::Zero,
            Some((_, m0)) => {
                let d = m0.degree() as i64;
                if it.all(|(_, m)| m.degree() as i64 == d) {
                    Homogeneity::Degree(d)
                } else {
                    Homogeneity::No
                }
            }
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        !matches!(self.homogeneity(), Homogeneity::No)
    }

    /// The coefficient of a nonzero constant polynomial.
    pub fn as_constant(&self) -> Option<&Coeff> {
        match self.terms.as_slice() {
            [(c, m)] if m.is_one() => Some(c),
            _ => None,
        }
    }

    /// True for `c * x_i^e` with `e >= 1`; returns `(i, e)`.
    pub fn as_var_power(&self) -> Option<(usize, u32)> {
        if self.terms.len() != 1 {
            return None;
        }
        let m = &self.terms[0].1;
        let mut hit = None;
        for (i, &e) in m.exps().iter().enumerate() {
            if e > 0 {
                if hit.is_some() {
                    return None;
                }
                hit = Some((i, e));
            }
        }
        hit
    }

    /// Remaps terms into a ring with `extra` variables adjoined in front.
    pub fn lift_tagged(&self, extra: usize) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(c, m)| {
                    let mut exps = vec![0u32; extra];
                    exps.extend_from_slice(m.exps());
                    (c.clone(), Monomial::from_exps(&exps))
                })
                .collect(),
        }
    }
}

/// Homogeneity classification of a term list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Degree(i64),
    No,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Arc<PolyRing> {
        PolyRing::new(
            Field::new(0).unwrap(),
            vec!["x".into(), "y".into()],
            MonomialOrder::GrevLex,
        )
        .unwrap()
    }

    #[test]
    fn construction_rejects_bad_vars() {
        assert!(PolyRing::new(Field::Rationals, vec![], MonomialOrder::Lex).is_err());
        assert!(PolyRing::new(
            Field::Rationals,
            vec!["x".into(), "x".into()],
            MonomialOrder::Lex
        )
        .is_err());
        assert!(PolyRing::new(Field::Rationals, vec!["2x".into()], MonomialOrder::Lex).is_err());
    }

    #[test]
    fn add_cancels() {
        let r = ring();
        let x = r.var(0);
        let s = r.add(&x, &r.neg(&x));
        assert!(s.is_zero());
    }

    #[test]
    fn mul_expands_binomial() {
        let r = ring();
        let xy = r.add(&r.var(0), &r.var(1));
        let sq = r.mul(&xy, &xy);
        // (x+y)^2 = x^2 + 2xy + y^2
        assert_eq!(sq.num_terms(), 3);
        let two = r.field().from_i64(2);
        let expected = r.from_terms(vec![
            (r.field().one(), Monomial::from_exps(&[2, 0])),
            (two, Monomial::from_exps(&[1, 1])),
            (r.field().one(), Monomial::from_exps(&[0, 2])),
        ]);
        assert_eq!(sq, expected);
    }

    #[test]
    fn freshman_dream_in_char_two() {
        // (x+y)^2 = x^2 + y^2 over F_2; expected side built from binomial
        // coefficients reduced mod 2, not from the multiplication routine.
        let r = PolyRing::new(
            Field::new(2).unwrap(),
            vec!["x".into(), "y".into()],
            MonomialOrder::GrevLex,
        )
        .unwrap();
        let p = r.pow(&r.add(&r.var(0), &r.var(1)), 2);
        let mut expect_terms = Vec::new();
        let binom = [1u64, 2, 1];
        for (k, &b) in binom.iter().enumerate() {
            if b % 2 != 0 {
                expect_terms.push((
                    r.field().from_i64((b % 2) as i64),
                    Monomial::from_exps(&[(2 - k) as u32, k as u32]),
                ));
            }
        }
        assert_eq!(p, r.from_terms(expect_terms));
    }

    #[test]
    fn pow_and_div_exact() {
        let r = ring();
        let f = r.add(&r.var(0), &r.one());
        let f3 = r.pow(&f, 3);
        assert_eq!(r.div_exact(&f3, &f), Some(r.pow(&f, 2)));
        assert_eq!(r.div_exact(&f3, &r.var(1)), None);
    }

    #[test]
    fn homogeneity_classes() {
        let r = ring();
        assert_eq!(r.zero().homogeneity(), Homogeneity::Zero);
        let h = r.add(&r.var(0), &r.var(1));
        assert_eq!(h.homogeneity(), Homogeneity::Degree(1));
        let nh = r.add(&r.var(0), &r.one());
        assert_eq!(nh.homogeneity(), Homogeneity::No);
    }

    #[test]
    fn eval_point() {
        let r = ring();
        // x^2 + y at (3, 5) = 14
        let p = r.add(&r.pow(&r.var(0), 2), &r.var(1));
        let v = r.eval(&p, &[r.field().from_i64(3), r.field().from_i64(5)]);
        assert_eq!(v, r.field().from_i64(14));
    }
}
