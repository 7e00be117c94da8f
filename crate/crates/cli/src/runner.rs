//! Task execution: one `TaskDecl` in, one envelope out, plus CSV text for
//! the tabular kinds.

use crate::envelope::{inputs_digest, Metadata, ResultEnvelope};
use crate::print::{element_string, poly_string, submodule_strings};
use crate::session::{ModuleKind, Session, TaskDecl, TaskKind};
use crate::CliError;
use parafrac_core::{
    a_ideals, e_hk_estimate, hk_function, is_dd_sequence_box, j_hk_bridge,
    limit_closure_of_sequence, multiplicity, p_standard_sop, table, unmixed_component, ExponentBox,
    FPModule, FreeElement, Length, ParamSystem, DEFAULT_HK_BUDGET,
};
use serde_json::{json, Value};
use std::fmt::Write as _;

#[derive(Clone, Copy)]
pub struct RunConfig {
    pub cap: u32,
    pub seed: u64,
    pub attempts: u32,
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            cap: parafrac_core::DEFAULT_STAB_CAP,
            seed: 0,
            attempts: 64,
            timings: false,
        }
    }
}

pub struct TaskOutput {
    pub envelope: ResultEnvelope,
    pub csv: Option<String>,
    pub verdict_failed: bool,
}

fn length_value(l: Length) -> Value {
    match l.finite() {
        Some(n) => json!(n),
        None => json!("infinite"),
    }
}

fn sop_system(s: &Session, module: &FPModule, sop_name: &str) -> Result<ParamSystem, CliError> {
    let decl = s
        .sop(sop_name)
        .ok_or_else(|| CliError::unknown("sop", sop_name))?;
    ParamSystem::new(module, decl.polys.clone()).map_err(CliError::Engine)
}

fn exponent_box(s: &Session, name: &str) -> Result<ExponentBox, CliError> {
    let b = s.box_(name).ok_or_else(|| CliError::unknown("box", name))?;
    ExponentBox::new(b.lo.clone(), b.hi.clone()).map_err(CliError::Engine)
}

pub fn table_csv(t: &parafrac_core::InvariantTable) -> String {
    let d = t.box_.dim();
    let mut out = String::new();
    let header: Vec<String> = (1..=d).map(|i| format!("n{}", i)).collect();
    let _ = writeln!(out, "{},len_quot,mult,I,J,len_mod_lim", header.join(","));
    for row in &t.rows {
        let ns: Vec<String> = row.n.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            ns.join(","),
            row.len_quot,
            row.mult,
            row.i_val,
            row.j_val,
            row.len_mod_lim
        );
    }
    out
}

pub fn run_task(
    s: &Session,
    session_text: &str,
    task: &TaskDecl,
    cfg: &RunConfig,
) -> Result<TaskOutput, CliError> {
    let started = std::time::Instant::now();
    let module_decl = |name: &str| {
        s.module(name)
            .ok_or_else(|| CliError::unknown("module", name))
    };

    let mut stabilization: Vec<u32> = Vec::new();
    let mut seed_used: Option<u64> = None;
    let mut csv: Option<String> = None;
    let mut verdict_failed = false;

    let (kind_name, outputs) = match &task.kind {
        TaskKind::Gb { module } => {
            let md = module_decl(module)?;
            let w = md.module.relations();
            let gens = submodule_strings(w);
            let ring = md.module.ring();
            let lts: Vec<String> = w
                .gb()
                .leading_terms()
                .iter()
                .map(|(m, pos)| {
                    let p = ring.from_terms(vec![(ring.field().one(), m.clone())]);
                    if w.rank() == 1 {
                        poly_string(ring, &p)
                    } else {
                        format!("{} @ {}", poly_string(ring, &p), pos)
                    }
                })
                .collect();
            ("gb", json!({ "relations_gb": gens, "leading_terms": lts }))
        }
        TaskKind::Nf { module, expr } => {
            let md = module_decl(module)?;
            let ring = md.module.ring().clone();
            let v = FreeElement::from_poly(expr, 0);
            let nf = md.module.normal_form(&v);
            (
                "nf",
                json!({
                    "input": poly_string(&ring, expr),
                    "normal_form": element_string(&ring, md.module.rank(), &nf),
                    "is_zero": nf.is_zero(),
                }),
            )
        }
        TaskKind::Length { module } => {
            let md = module_decl(module)?;
            (
                "length",
                json!({ "length": length_value(md.module.length()) }),
            )
        }
        TaskKind::Mult { module, sop } => {
            let md = module_decl(module)?;
            let sys = sop_system(s, &md.module, sop)?;
            let e = multiplicity(&md.module, &sys)?;
            ("mult", json!({ "multiplicity": e }))
        }
        TaskKind::Limclo {
            module,
            sop,
            powers,
        } => {
            let md = module_decl(module)?;
            let sys = sop_system(s, &md.module, sop)?;
            let n: Vec<u32> = match powers {
                Some(n) => {
                    if n.len() != sys.len() {
                        return Err(CliError::Input(format!(
                            "powers have {} entries but the sop has {}",
                            n.len(),
                            sys.len()
                        )));
                    }
                    n.clone()
                }
                None => vec![1; sys.len()],
            };
            let powered = sys.powered(md.module.ring(), &n);
            let clo = limit_closure_of_sequence(&md.module, &powered, cfg.cap)?;
            stabilization.push(clo.stabilized_at);
            let quot_len = clo.submodule.quotient_length();
            (
                "limclo",
                json!({
                    "powers": n,
                    "generators": submodule_strings(&clo.submodule),
                    "stabilized_at": clo.stabilized_at,
                    "len_mod_closure": length_value(quot_len),
                }),
            )
        }
        TaskKind::Table {
            module,
            sop,
            box_name,
        } => {
            let md = module_decl(module)?;
            let sys = sop_system(s, &md.module, sop)?;
            let box_ = exponent_box(s, box_name)?;
            let t = table(&md.module, &sys, &box_, cfg.cap)?;
            stabilization = t.rows.iter().map(|r| r.stabilized_at).collect();
            csv = Some(table_csv(&t));
            let rows: Vec<Value> = t
                .rows
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "len_quot": r.len_quot,
                        "mult": r.mult,
                        "I": r.i_val,
                        "J": r.j_val,
                        "len_mod_lim": r.len_mod_lim,
                    })
                })
                .collect();
            ("table", json!({ "e_base": t.e_base, "rows": rows }))
        }
        TaskKind::Unmixed { module, sop } => {
            let md = module_decl(module)?;
            let sys = sop_system(s, &md.module, sop)?;
            let u = unmixed_component(&md.module, &sys, cfg.cap)?;
            stabilization.push(u.stabilized_at);
            (
                "unmixed",
                json!({
                    "generators": submodule_strings(&u.submodule),
                    "stabilized_at": u.stabilized_at,
                }),
            )
        }
        TaskKind::DdCheck {
            module,
            sop,
            box_name,
        } => {
            let md = module_decl(module)?;
            let decl = s.sop(sop).ok_or_else(|| CliError::unknown("sop", sop))?;
            let box_ = exponent_box(s, box_name)?;
            let v = is_dd_sequence_box(&md.module, &decl.polys, &box_)?;
            verdict_failed = !v.passed;
            (
                "ddcheck",
                json!({
                    "passed": v.passed,
                    "counterexample": v.counterexample,
                    "e_values": v.e_values,
                    "identity_checked": v.identity_checked,
                }),
            )
        }
        TaskKind::AIdeals { module } => {
            let md = module_decl(module)?;
            let a = a_ideals(&md.module)?;
            let anns: Vec<Vec<String>> = a.ideals.iter().map(submodule_strings).collect();
            let lens: Vec<Value> = a
                .cohomology_lengths
                .iter()
                .map(|l| length_value(l.clone()))
                .collect();
            (
                "aideals",
                json!({
                    "cohomology_lengths": lens,
                    "annihilators": anns,
                    "a_total": submodule_strings(&a.a_total),
                    "p_candidate": a.p_candidate,
                }),
            )
        }
        TaskKind::Psop { module } => {
            let md = module_decl(module)?;
            let sys = p_standard_sop(&md.module, cfg.attempts, cfg.seed)?;
            seed_used = Some(cfg.seed);
            let ring = md.module.ring();
            let polys: Vec<String> = sys.polys().iter().map(|p| poly_string(ring, p)).collect();
            ("psop", json!({ "polys": polys, "attempts": cfg.attempts }))
        }
        TaskKind::Hk { module, e_max } => {
            let md = module_decl(module)?;
            let ring = md.module.ring();
            let vars: Vec<_> = (0..ring.nvars()).map(|i| ring.var(i)).collect();
            let series = hk_function(&md.module, &vars, *e_max, DEFAULT_HK_BUDGET)?;
            let est = if series.values.len() >= 2 {
                let e = e_hk_estimate(&series, md.module.dim())?;
                json!({ "estimate": e.estimate.to_string(), "residual": e.residual.to_string() })
            } else {
                Value::Null
            };
            (
                "hk",
                json!({
                    "p": series.p,
                    "values": series.values,
                    "truncated": series.truncated,
                    "e_hk": est,
                }),
            )
        }
        TaskKind::Bridge { module, e_max } => {
            let md = module_decl(module)?;
            let gens = match &md.kind {
                ModuleKind::IdealAsModule(gens) => gens.clone(),
                _ => {
                    return Err(CliError::Input(format!(
                        "bridge needs an ideal_as_module, but `{}` is not one",
                        module
                    )))
                }
            };
            let ring = md.module.ring().clone();
            let t = j_hk_bridge(&ring, &gens, *e_max)?;
            verdict_failed = t.rows.iter().any(|r| !r.agree);
            let mut out = String::new();
            let _ = writeln!(out, "q,j_limit,len_direct,agree");
            for r in &t.rows {
                let _ = writeln!(out, "{},{},{},{}", r.q, r.j_limit, r.len_direct, r.agree);
            }
            csv = Some(out);
            let rows: Vec<Value> = t
                .rows
                .iter()
                .map(|r| {
                    json!({
                        "q": r.q,
                        "j_limit": r.j_limit,
                        "len_direct": r.len_direct,
                        "agree": r.agree,
                    })
                })
                .collect();
            ("bridge", json!({ "p": t.p, "rows": rows }))
        }
    };

    let task_line = format!("{} = {}", task.name, s.task_rhs(&task.kind));
    let envelope = ResultEnvelope {
        task: task.name.clone(),
        kind: kind_name.to_string(),
        inputs_digest: inputs_digest(session_text, &task_line, cfg.cap, seed_used),
        outputs,
        metadata: Metadata {
            cap: cfg.cap,
            caps_hit: false,
            stabilization,
            seed: seed_used,
            timings_ms: cfg.timings.then(|| started.elapsed().as_millis() as u64),
        },
    };
    Ok(TaskOutput {
        envelope,
        csv,
        verdict_failed,
    })
}
