//! Text form of engine values. The polynomial printer and the session
//! printer both produce input the parser accepts, which is what the
//! round-trip guarantee rests on.

use num::Signed;
use parafrac_core::{Coeff, FreeElement, PolyRing, Polynomial, Submodule};

pub fn coeff_string(c: &Coeff) -> String {
    match c {
        Coeff::Rat(x) => {
            if x.is_integer() {
                x.numer().to_string()
            } else {
                format!("{}/{}", x.numer(), x.denom())
            }
        }
        Coeff::Mod(x) => x.to_string(),
    }
}

fn monomial_string(ring: &PolyRing, exps: &[u32]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in exps.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ring.vars()[i].clone()),
            _ => parts.push(format!("{}^{}", ring.vars()[i], e)),
        }
    }
    parts.join("*")
}

pub fn poly_string(ring: &PolyRing, f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let field = ring.field();
    let mut out = String::new();
    for (k, (c, m)) in f.terms().iter().enumerate() {
        let mono = monomial_string(ring, m.exps());
        let (neg, mag) = match c {
            Coeff::Rat(x) if x.is_negative() => (true, coeff_string(&field.neg(c))),
            _ => (false, coeff_string(c)),
        };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&mag);
        } else if mag == "1" {
            out.push_str(&mono);
        } else {
            out.push_str(&mag);
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

pub fn element_string(ring: &PolyRing, rank: usize, v: &FreeElement) -> String {
    if rank == 1 {
        return poly_string(ring, &v.component(ring, 0));
    }
    let comps: Vec<String> = (0..rank)
        .map(|i| poly_string(ring, &v.component(ring, i)))
        .collect();
    format!("[{}]", comps.join(", "))
}

pub fn submodule_strings(w: &Submodule) -> Vec<String> {
    let ring = w.ring().clone();
    w.generators()
        .iter()
        .map(|g| element_string(&ring, w.rank(), g))
        .collect()
}
