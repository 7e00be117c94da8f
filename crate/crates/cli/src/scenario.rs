//! Named verification scenarios. Each one drives a bundled session through
//! the ordinary task runner, then checks the results against values
//! computed along an independent route (closed formulas, quotient rings,
//! linear algebra). `verify all` runs the lot.

use crate::parse::parse_session;
use crate::runner::{run_task, RunConfig};
use crate::session::Session;
use crate::CliError;
use num::{BigInt, BigRational, Signed};
use parafrac_core::invariants::dseq::closed_form_coefficients;
use parafrac_core::monomial::monomials_of_degree;
use parafrac_core::{
    e_hk_estimate, hk_function, is_dd_sequence_box, limit_closure_dd, limit_closure_of_sequence,
    linalg, p_standard_sop, unmixed_component, ExponentBox, FPModule, Field, FreeElement,
    MonomialOrder, ParamSystem, PolyRing, Polynomial, Submodule, DEFAULT_HK_BUDGET,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use std::sync::Arc;

pub const SCENARIOS: &[&str] = &[
    "min-formula",
    "ideal-excess",
    "cm-vanishing",
    "two-planes",
    "unmixed-invariance",
    "closed-form",
    "ij-bound",
    "idealization",
    "dd-closed-form",
    "hilbert-kunz",
    "engine",
];

const MIN_FORMULA: &str = include_str!("../../../sessions/min_formula.pf");
const IDEAL_EXCESS: &str = include_str!("../../../sessions/ideal_excess.pf");
const CM_VANISHING: &str = include_str!("../../../sessions/cm_vanishing.pf");
const TWO_PLANES: &str = include_str!("../../../sessions/two_planes.pf");
const UNMIXED_INVARIANCE: &str = include_str!("../../../sessions/unmixed_invariance.pf");
const IDEALIZATION: &str = include_str!("../../../sessions/idealization.pf");
const HILBERT_KUNZ: &str = include_str!("../../../sessions/hilbert_kunz.pf");
const IJ_BOUND: &str = include_str!("../../../sessions/ij_bound.pf");

pub struct ScenarioReport {
    pub name: String,
    pub passed: bool,
    pub lines: Vec<String>,
}

struct Checks {
    lines: Vec<String>,
    passed: bool,
}

impl Checks {
    fn new() -> Checks {
        Checks {
            lines: Vec::new(),
            passed: true,
        }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        let what = what.into();
        self.lines
            .push(format!("{} {}", if ok { "ok  " } else { "FAIL" }, what));
        if !ok {
            self.passed = false;
        }
    }

    fn note(&mut self, what: impl Into<String>) {
        self.lines.push(format!("     {}", what.into()));
    }

    fn into_report(self, name: &str) -> ScenarioReport {
        ScenarioReport {
            name: name.to_string(),
            passed: self.passed,
            lines: self.lines,
        }
    }
}

fn load(text: &str) -> Result<Session, CliError> {
    Ok(parse_session(text)?)
}

/// Rows of a `table` envelope as (n, len_quot, mult, I, J, len_mod_lim).
fn table_rows(outputs: &Value) -> Vec<(Vec<u32>, u64, u64, i64, i64, u64)> {
    outputs["rows"]
        .as_array()
        .expect("table rows")
        .iter()
        .map(|r| {
            let n: Vec<u32> = r["n"]
                .as_array()
                .expect("tuple")
                .iter()
                .map(|v| v.as_u64().expect("exponent") as u32)
                .collect();
            (
                n,
                r["len_quot"].as_u64().expect("len_quot"),
                r["mult"].as_u64().expect("mult"),
                r["I"].as_i64().expect("I"),
                r["J"].as_i64().expect("J"),
                r["len_mod_lim"].as_u64().expect("len_mod_lim"),
            )
        })
        .collect()
}

fn run_named(s: &Session, text: &str, task: &str, cfg: &RunConfig) -> Result<Value, CliError> {
    let t = s
        .task(task)
        .ok_or_else(|| CliError::unknown("task", task))?
        .clone();
    Ok(run_task(s, text, &t, cfg)?.envelope.outputs)
}

fn powered(ring: &Arc<PolyRing>, polys: &[Polynomial], n: &[u32]) -> Vec<Polynomial> {
    polys.iter().zip(n).map(|(p, &k)| ring.pow(p, k)).collect()
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let mut acc = 1i64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn run_scenario(name: &str, cfg: &RunConfig) -> Result<ScenarioReport, CliError> {
    match name {
        "min-formula" => min_formula(cfg),
        "ideal-excess" => ideal_excess(cfg),
        "cm-vanishing" => cm_vanishing(cfg),
        "two-planes" => two_planes(cfg),
        "unmixed-invariance" => unmixed_invariance(cfg),
        "closed-form" => closed_form(cfg),
        "ij-bound" => ij_bound(cfg),
        "idealization" => idealization_scenario(cfg),
        "dd-closed-form" => dd_closed_form(cfg),
        "hilbert-kunz" => hilbert_kunz(cfg),
        "engine" => engine(cfg),
        _ => Err(CliError::Input(format!(
            "unknown scenario `{}` (available: {})",
            name,
            SCENARIOS.join(", ")
        ))),
    }
}

fn min_formula(cfg: &RunConfig) -> Result<ScenarioReport, CliError> {
    let s = load(MIN_FORMULA)?;
    let mut c = Checks::new();

    let rows3 = table_rows(&run_named(&s, MIN_FORMULA, "T3", cfg)?);
    let mut bad = 0;
    for (n, _, _, _, j, _) in &rows3 {
        if *j != (n[0].min(n[2]) as i64) {
            bad += 1;
        }
    }
    c.check(
        bad == 0,
        format!("3 variables: J = min(n1, n3) on all {} tuples", rows3.len()),
    );

    let rows4 = table_rows(&run_named(&s, MIN_FORMULA, "T4", cfg)?);
    bad = 0;
    for (n, _, _, _, j, _) in &rows4 {
        if *j != (n[2] as i64) * (n[0].min(n[3]) as i64) {
            bad += 1;
        }
    }
    c.check(
        bad == 0,
        format!(
            "4 variables: J = n3 * min(n1, n4) on all {} tuples",
            rows4.len()
        ),
    );

    Ok(c.into_report("min-formula"))
}

fn ideal_excess(cfg: &RunConfig) -> Result<ScenarioReport, CliError> {
    let s = load(IDEAL_EXCESS)?;
    let mut c = Checks::new();

    for (task, ncyc, sop) in [("TA", "NA", "XA"), ("TC", "NC", "XC")] {
        let rows = table_rows(&run_named(&s, IDEAL_EXCESS, task, cfg)?);
        let nmod = &s.module(ncyc).expect("session module").module;
        let ring = nmod.ring().clone();
        let polys = &s.sop(sop).expect("session sop").polys;
        let mut bad = 0;
        for (n, _, _, _, j, _) in &rows {
            let q = nmod.quotient_by_polys(&powered(&ring, polys, n))?;
            let direct = q.length().finite().expect("finite co-length") as i64;
            if *j != direct {
                bad += 1;
            }
        }
        c.check(
            bad == 0,
            format!(
                "{}: J agrees with the quotient-ring co-length on {} tuples",
                task,
                rows.len()
            ),
        );
    }
    Ok(c.into_report("ideal-excess"))
}

fn cm_vanishing(cfg: &RunConfig) -> Result<ScenarioReport, CliError> {
    let s = load(CM_VANISHING)?;
    let mut c = Checks::new();

    for (task, module, sop) in [
        ("TR", "REG", "XR"),
        ("TH", "HYP", "XH"),
        ("TCI", "CI", "XC"),
    ] {
        let rows = table_rows(&run_named(&s, CM_VANISHING, task, cfg)?);
        let all_zero = rows.iter().all(|(_, _, _, i, j, _)| *i == 0 && *j == 0);
        c.check(
            all_zero,
            format!("{}: I = J = 0 on {} tuples", task, rows.len()),
        );

        let m = &s.module(module).expect("session module").module;
        let ring = m.ring().clone();
        let polys = &s.sop(sop).expect("session sop").polys;
        let mut closure_plain = true;
        for (n, ..) in &rows {
            let pw = powered(&ring, polys, n);
            let clo = limit_closure_of_sequence(m, &pw, cfg.cap)?;
            let plain = Submodule::ideal(ring.clone(), &pw)?.plus(m.relations())?;
            if !clo.submodule.equal(&plain)? {
                closure_plain = false;
            }
        }
        c.check(closure_plain, format!("{}: the closure adds nothing", task));
    }
    Ok(c.into_report("cm-vanishing"))
}

fn two_planes(cfg: &RunConfig) -> Result<ScenarioReport, CliError> {
    let s = load(TWO_PLANES)?;
    let mut c = Checks::new();

    let rows = table_rows(&run_named(&s, TWO_PLANES, "T", cfg)?);
    let ones = rows.iter().all(|(_, _, _, i, j, _)| *i == 1 && *j == 1);
    c.check(ones, format!("I = J = 1 on {} tuples", rows.len()));

    let ai = run_named(&s, TWO_PLANES, "AI", cfg)?;
    let h: Vec<i64> = ai["cohomology_lengths"]
        .as_array()
        .expect("lengths")
        .iter()
        .map(|v| v.as_i64().expect("finite length"))
        .collect();
    c.check(h == vec![0, 1], format!("cohomology lengths are {:?}", h));

    let d = h.len() as i64;
    let i_pred: i64 = (0..d).map(|i| binomial(d - 1, i) * h[i as usize]).sum();
    let j_pred: i64 = (1..d).map(|i| binomial(d - 2, i - 1) * h[i as usize]).sum();
    c.check(
        i_pred == 1,
        format!("binomial sum over cohomology gives I = {}", i_pred),
    );
    c.check(
        j_pred == 1,
        format!("binomial sum over cohomology gives J = {}", j_pred),
    );

    let u = run_named(&s, TWO_PLANES, "U", cfg)?;
    let m = &s.module("M").expect("session module").module;
    let ucore = unmixed_component(
        m,
        &ParamSystem::new(m, s.sop("X").unwrap().polys.clone())?,
        cfg.cap,
    )?;
    c.check(
        ucore.submodule.equal(m.relations())?,
        "the unmixed component is zero",
    );
    c.note(format!(
        "unmixed generators reported: {}",
        u["generators"].as_array().map(|a| a.len()).unwrap_or(0)
    ));

    Ok(c.into_report("two-planes"))
}

fn unmixed_invariance(cfg: &RunConfig) -> Result<ScenarioReport, CliError> {
    let s = load(UNMIXED_INVARIANCE)?;
    let mut c = Checks::new();

    let m = &s.module("M").expect("session module").module;
    let ring = m.ring().clone();
    let polys = s.sop("X").expect("session sop").polys.clone();
    let sys = ParamSystem::new(m, polys.clone())?;

    let u = unmixed_component(m, &sys, cfg.cap)?;
    let x_ideal = Submodule::ideal(ring.clone(), &[ring.var(0)])?.plus(m.relations())?;
    c.check(
        u.submodule.equal(&x_ideal)?,
        "the component is the image of (x)",
    );

    let q = m.quotient_by_elements(u.submodule.generators())?;
    let qsys = ParamSystem::new(&q, polys.clone())?;

    let rows = table_rows(&run_named(&s, UNMIXED_INVARIANCE, "T", cfg)?);
    let mut bad = 0;
    for (n, _, _, _, j, _) in &rows {
        let jq = parafrac_core::j_fun(&q, &qsys, n, cfg.cap)?;
        if *j != jq {
            bad += 1;
        }
    }
    c.check(
        bad == 0,
        format!(
            "J is unchanged after dividing out the component, {} tuples",
            rows.len()
        ),
    );

    Ok(c.into_report("unmixed-invariance"))
}

fn closed_form(cfg: &RunConfig) -> Result<ScenarioReport, CliError> {
    let s = load(TWO_PLANES)?;
    let mut c = Checks::new();

    let dd = run_named(&s, TWO_PLANES, "DD", cfg)?;
    c.check(
        dd["passed"].as_bool() == Some(true),
        "the parameter system is a dd-sequence on the box",
    );
    c.check(
        dd["identity_checked"].as_bool() == Some(true),
        "the length identity was checked",
    );

    let m = &s.module("M").expect("session module").module;
    let polys = &s.sop("X").expect("session sop").polys;
    let es = closed_form_coefficients(m, polys)?;
    c.check(
        es == vec![1, 0],
        format!("closed-form coefficients are {:?}", es),
    );

    let rows = table_rows(&run_named(&s, TWO_PLANES, "T", cfg)?);
    let constant = rows.iter().all(|(_, _, _, i, _, _)| *i == es[0]);
    c.check(constant, "I is the constant leading coefficient");

    Ok(c.into_report("closed-form"))
}

fn ij_bound(cfg: &RunConfig) -> Result<ScenarioReport, CliError> {
    let s = load(IJ_BOUND)?;
    let mut c = Checks::new();

    for (task, module) in [("P1", "TP"), ("P2", "HYP"), ("P3", "REG")] {
        let env = run_named(&s, IJ_BOUND, task, cfg)?;
        let found = env["polys"].as_array().map(|a| a.len()).unwrap_or(0);
        let m = &s.module(module).expect("session module").module;
        let d = m.dim();
        c.check(
            found as i64 == d,
            format!("{}: found {} parameters for dimension {}", task, found, d),
        );

        let sys = p_standard_sop(m, cfg.attempts, cfg.seed)?;
        let box_ = ExponentBox::cube(d as usize, 3)?;
        let t = parafrac_core::table(m, &sys, &box_, cfg.cap)?;
        let factor = 1i64 << (d - 2).max(0);
        let bound_ok = t.rows.iter().all(|r| r.i_val <= factor * r.j_val);
        c.check(
            bound_ok,
            format!("{}: I <= {} * J on {} tuples", module, factor, t.rows.len()),
        );
        if d == 2 {
            let eq = t.rows.iter().all(|r| r.i_val == r.j_val);
            c.check(eq, format!("{}: equality holds in dimension two", module));
        }
    }
    Ok(c.into_report("ij-bound"))
}

fn idealization_scenario(cfg: &RunConfig) -> Result<ScenarioReport, CliError> {
    let s = load(IDEALIZATION)?;
    let mut c = Checks::new();

    let base_ring = s.ring("R").expect("session ring").handle.clone();
    let base_free = FPModule::cyclic(base_ring.clone(), &[])?;
    let base_vars: Vec<Polynomial> = vec![base_ring.var(0), base_ring.var(1)];

    for (task, ext_mod, base_mod) in [("T1", "S1", "M1"), ("T2", "S2", "M2")] {
        let rows = table_rows(&run_named(&s, IDEALIZATION, task, cfg)?);
        let bm = &s.module(base_mod).expect("session module").module;
        let mut bad = 0;
        for (n, _, _, _, _, len_mod_lim) in &rows {
            let pw = powered(&base_ring, &base_vars, n);
            let ring_part = limit_closure_of_sequence(&base_free, &pw, cfg.cap)?
                .submodule
                .quotient_length()
                .finite()
                .expect("finite");
            let mod_part = limit_closure_of_sequence(bm, &pw, cfg.cap)?
                .submodule
                .quotient_length()
                .finite()
                .expect("finite");
            if *len_mod_lim != ring_part + mod_part {
                bad += 1;
            }
        }
        c.check(
            bad == 0,
            format!(
                "{}: co-length of the closure splits as ring part + module part ({} tuples)",
                ext_mod,
                rows.len()
            ),
        );
    }
    Ok(c.into_report("idealization"))
}

fn dd_closed_form(cfg: &RunConfig) -> Result<ScenarioReport, CliError> {
    let mut c = Checks::new();

    let cases: Vec<(&str, &str, &str, &str)> = vec![
        (TWO_PLANES, "M", "X", "two planes"),
        (CM_VANISHING, "REG", "XR", "regular"),
        (CM_VANISHING, "HYP", "XH", "hypersurface"),
        (CM_VANISHING, "CI", "XC", "complete intersection"),
    ];
    for (text, module, sop, label) in cases {
        let s = load(text)?;
        let m = &s.module(module).expect("session module").module;
        let ring = m.ring().clone();
        let polys = s.sop(sop).expect("session sop").polys.clone();
        let d = polys.len();
        let unit = ExponentBox::cube(d, 1)?;

        let verdict = is_dd_sequence_box(m, &polys, &ExponentBox::cube(d, 2)?)?;
        c.check(
            verdict.passed,
            format!("{}: dd-sequence certification", label),
        );
        if !verdict.passed {
            continue;
        }
        let mut agree = true;
        for n in ExponentBox::cube(d, 2)?.tuples() {
            let pw = powered(&ring, &polys, &n);
            let sys = ParamSystem::new(m, pw.clone())?;
            let closed = limit_closure_dd(m, &sys, &unit)?;
            let chased = limit_closure_of_sequence(m, &pw, cfg.cap)?.submodule;
            if !closed.equal(&chased)? {
                agree = false;
            }
        }
        c.check(
            agree,
            format!("{}: closed form matches the colon chase", label),
        );
    }
    Ok(c.into_report("dd-closed-form"))
}

fn hilbert_kunz(cfg: &RunConfig) -> Result<ScenarioReport, CliError> {
    let s = load(HILBERT_KUNZ)?;
    let mut c = Checks::new();

    let hr = run_named(&s, HILBERT_KUNZ, "HR", cfg)?;
    let expect_reg: Value = serde_json::json!([[2, 4], [4, 16], [8, 64], [16, 256]]);
    c.check(hr["values"] == expect_reg, "regular plane: lengths are q^2");

    let hn = run_named(&s, HILBERT_KUNZ, "HN", cfg)?;
    let expect_node: Value = serde_json::json!([[2, 3], [4, 7], [8, 15], [16, 31]]);
    c.check(hn["values"] == expect_node, "node: lengths are 2q - 1");

    let node = &s.module("NODE").expect("session module").module;
    let ring = node.ring().clone();
    let vars: Vec<Polynomial> = (0..ring.nvars()).map(|i| ring.var(i)).collect();
    let series = hk_function(node, &vars, 4, DEFAULT_HK_BUDGET)?;
    let est = e_hk_estimate(&series, node.dim())?;
    let gap = (est.estimate.clone() - BigRational::from_integer(BigInt::from(2))).abs();
    let tol = BigRational::new(BigInt::from(1), BigInt::from(8));
    c.check(
        gap <= tol,
        format!("node: estimate {} is within 1/8 of 2", est.estimate),
    );

    let br = run_named(&s, HILBERT_KUNZ, "BR", cfg)?;
    let rows = br["rows"].as_array().expect("bridge rows");
    let all_agree = rows.iter().all(|r| r["agree"].as_bool() == Some(true));
    c.check(
        rows.len() == 3 && all_agree,
        format!(
            "bridge: both counts agree for {} Frobenius powers",
            rows.len()
        ),
    );

    Ok(c.into_report("hilbert-kunz"))
}

const ENGINE_SEED: u64 = 1729;
const ENGINE_ROUNDS: usize = 220;

fn engine_ring(char_p: u64, nvars: usize) -> Arc<PolyRing> {
    let names: Vec<String> = ["x", "y", "z"][..nvars]
        .iter()
        .map(|s| s.to_string())
        .collect();
    PolyRing::new(Field::new(char_p).unwrap(), names, MonomialOrder::GrevLex).unwrap()
}

fn engine_homog(r: &PolyRing, rng: &mut ChaCha8Rng, deg: u32) -> Polynomial {
    let monos = monomials_of_degree(r.nvars(), deg);
    loop {
        let mut acc = r.zero();
        for m in &monos {
            if rng.gen_bool(0.4) {
                let cf = r.field().from_i64(rng.gen_range(1..=5));
                acc = r.add(&acc, &r.from_terms(vec![(cf, m.clone())]));
            }
        }
        if !acc.is_zero() {
            return acc;
        }
    }
}

fn engine(_cfg: &RunConfig) -> Result<ScenarioReport, CliError> {
    let mut c = Checks::new();
    let mut rng = ChaCha8Rng::seed_from_u64(ENGINE_SEED);
    let mut nf_bad = 0usize;
    let mut gb_bad = 0usize;
    let mut member_bad = 0usize;
    let mut colon_bad = 0usize;
    let mut intersect_bad = 0usize;
    let mut member_seen = 0usize;

    for _ in 0..ENGINE_ROUNDS {
        let char_p = if rng.gen_bool(0.5) { 0 } else { 101 };
        let nv = rng.gen_range(2..=3usize);
        let r = engine_ring(char_p, nv);

        let count = rng.gen_range(1..=3);
        let gens: Vec<Polynomial> = (0..count)
            .map(|_| {
                let d = rng.gen_range(1..=4);
                engine_homog(&r, &mut rng, d)
            })
            .collect();
        let ideal = Submodule::ideal(r.clone(), &gens)?;

        // normal forms: idempotent, and zero exactly on members
        let d = rng.gen_range(1..=4);
        let f = engine_homog(&r, &mut rng, d);
        let v = FreeElement::from_poly(&f, 0);
        let nf = ideal.normal_form(&v);
        if ideal.normal_form(&nf) != nf || ideal.contains(&v) != nf.is_zero() {
            nf_bad += 1;
        }

        // a reduced basis regenerates itself
        let regen: Vec<Polynomial> = ideal
            .gb()
            .elements()
            .iter()
            .map(|e| e.component(&r, 0))
            .collect();
        let again = Submodule::ideal(r.clone(), &regen)?;
        let same_lts = {
            let key = |w: &Submodule| {
                let mut k: Vec<(Vec<u32>, usize)> = w
                    .gb()
                    .leading_terms()
                    .into_iter()
                    .map(|(m, p)| (m.exps().to_vec(), p))
                    .collect();
                k.sort();
                k
            };
            key(&ideal) == key(&again)
        };
        if !ideal.equal(&again)? || !same_lts {
            gb_bad += 1;
        }

        // membership against a rank count done degree by degree
        let mut art_gens = gens.clone();
        let mut socle_bound = 0i64;
        for i in 0..nv {
            let k = rng.gen_range(1..=3u32);
            art_gens.push(r.pow(&r.var(i), k));
            socle_bound += k as i64;
        }
        let art = Submodule::ideal(r.clone(), &art_gens)?;
        let probe_deg = rng.gen_range(1..=4);
        let probe = engine_homog(&r, &mut rng, probe_deg);
        let with_probe = art.plus_elements(&[FreeElement::from_poly(&probe, 0)])?;
        let len_art = linalg::quotient_total_dim(&r, &[0], art.generators(), 0, socle_bound + 4);
        let len_with =
            linalg::quotient_total_dim(&r, &[0], with_probe.generators(), 0, socle_bound + 4);
        let oracle_member = len_art == len_with;
        if art.contains_poly(&probe) != oracle_member {
            member_bad += 1;
        }
        member_seen += 1;

        // colon: contains the ideal, and multiplies back in
        let gdeg = rng.gen_range(1..=2);
        let g = engine_homog(&r, &mut rng, gdeg);
        let colon = ideal.colon_poly(&g)?;
        if !colon.contains_submodule(&ideal)? {
            colon_bad += 1;
        } else {
            for h in colon.generators() {
                let back = r.mul(&g, &h.component(&r, 0));
                if !ideal.contains_poly(&back) {
                    colon_bad += 1;
                    break;
                }
            }
        }

        // intersection: inside both, and catches common generators
        let count2 = rng.gen_range(1..=2);
        let gens2: Vec<Polynomial> = (0..count2)
            .map(|_| {
                let dg = rng.gen_range(1..=3);
                engine_homog(&r, &mut rng, dg)
            })
            .collect();
        let other = Submodule::ideal(r.clone(), &gens2)?;
        let both = ideal.intersect(&other)?;
        if !ideal.contains_submodule(&both)? || !other.contains_submodule(&both)? {
            intersect_bad += 1;
        } else {
            let prod = r.mul(&gens[0], &gens2[0]);
            if !both.contains_poly(&prod) {
                intersect_bad += 1;
            }
        }
    }

    c.check(
        nf_bad == 0,
        format!("normal forms on {} ideals", ENGINE_ROUNDS),
    );
    c.check(
        gb_bad == 0,
        format!("basis stability on {} ideals", ENGINE_ROUNDS),
    );
    c.check(
        member_bad == 0,
        format!(
            "membership against the rank oracle on {} ideals",
            member_seen
        ),
    );
    c.check(colon_bad == 0, "colon ideals satisfy their definition");
    c.check(intersect_bad == 0, "intersections satisfy their definition");

    Ok(c.into_report("engine"))
}
