//! Resolved session files: named rings, modules, parameter candidates,
//! exponent boxes and tasks. Construction happens in the parser; this
//! module owns the shapes, the name lookups and the canonical printing.

use crate::print::poly_string;
use parafrac_core::{FPModule, Idealization, PolyRing, Polynomial};
use std::fmt::Write as _;
use std::sync::Arc;

#[derive(Clone)]
pub struct RingDecl {
    pub name: String,
    pub char_p: u64,
    pub vars: Vec<String>,
    pub handle: Arc<PolyRing>,
}

#[derive(Clone, PartialEq)]
pub enum ModuleKind {
    Cyclic(Vec<Polynomial>),
    IdealAsModule(Vec<Polynomial>),
    Presentation {
        degrees: Vec<i64>,
        rels: Vec<Vec<Polynomial>>,
    },
    Idealization {
        base: String,
    },
}

#[derive(Clone)]
pub struct ModuleDecl {
    pub name: String,
    pub ring_name: String,
    pub kind: ModuleKind,
    pub module: FPModule,
    pub ext: Option<Idealization>,
}

#[derive(Clone)]
pub struct SopDecl {
    pub name: String,
    pub module: String,
    pub polys: Vec<Polynomial>,
}

#[derive(Clone, PartialEq)]
pub struct BoxDecl {
    pub name: String,
    pub lo: Vec<u32>,
    pub hi: Vec<u32>,
}

#[derive(Clone, PartialEq)]
pub enum TaskKind {
    Gb {
        module: String,
    },
    Nf {
        module: String,
        expr: Polynomial,
    },
    Length {
        module: String,
    },
    Mult {
        module: String,
        sop: String,
    },
    Limclo {
        module: String,
        sop: String,
        powers: Option<Vec<u32>>,
    },
    Table {
        module: String,
        sop: String,
        box_name: String,
    },
    Unmixed {
        module: String,
        sop: String,
    },
    DdCheck {
        module: String,
        sop: String,
        box_name: String,
    },
    AIdeals {
        module: String,
    },
    Psop {
        module: String,
    },
    Hk {
        module: String,
        e_max: u32,
    },
    Bridge {
        module: String,
        e_max: u32,
    },
}

#[derive(Clone)]
pub struct TaskDecl {
    pub name: String,
    pub kind: TaskKind,
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum DeclKind {
    Ring,
    Module,
    Sop,
    Box_,
    Task,
}

#[derive(Default, Clone)]
pub struct Session {
    pub rings: Vec<RingDecl>,
    pub modules: Vec<ModuleDecl>,
    pub sops: Vec<SopDecl>,
    pub boxes: Vec<BoxDecl>,
    pub tasks: Vec<TaskDecl>,
    /// declaration order, for printing
    pub order: Vec<(DeclKind, usize)>,
}

impl Session {
    pub fn ring(&self, name: &str) -> Option<&RingDecl> {
        self.rings.iter().find(|r| r.name == name)
    }

    pub fn module(&self, name: &str) -> Option<&ModuleDecl> {
        self.modules.iter().find(|m| m.name == name)
    }

    pub fn sop(&self, name: &str) -> Option<&SopDecl> {
        self.sops.iter().find(|s| s.name == name)
    }

    pub fn box_(&self, name: &str) -> Option<&BoxDecl> {
        self.boxes.iter().find(|b| b.name == name)
    }

    pub fn task(&self, name: &str) -> Option<&TaskDecl> {
        self.tasks.iter().find(|t| t.name == name)
    }

    /// Canonical text; parsing it again gives an equal session.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for &(kind, i) in &self.order {
            match kind {
                DeclKind::Ring => {
                    let r = &self.rings[i];
                    let _ = writeln!(
                        out,
                        "ring {} = poly(char={}, vars=[{}])",
                        r.name,
                        r.char_p,
                        r.vars.join(", ")
                    );
                }
                DeclKind::Module => {
                    let m = &self.modules[i];
                    let ring = self.ring(&m.ring_name).expect("ring resolved at parse");
                    let gens = |polys: &[Polynomial]| -> String {
                        polys
                            .iter()
                            .map(|p| poly_string(&ring.handle, p))
                            .collect::<Vec<_>>()
                            .join(", ")
                    };
                    let rhs = match &m.kind {
                        ModuleKind::Cyclic(polys) => {
                            if polys.is_empty() {
                                format!("cyclic({})", m.ring_name)
                            } else {
                                format!("cyclic({}; {})", m.ring_name, gens(polys))
                            }
                        }
                        ModuleKind::IdealAsModule(polys) => {
                            format!("ideal_as_module({}; {})", m.ring_name, gens(polys))
                        }
                        ModuleKind::Presentation { degrees, rels } => {
                            let ds = degrees
                                .iter()
                                .map(|d| d.to_string())
                                .collect::<Vec<_>>()
                                .join(", ");
                            let rs = rels
                                .iter()
                                .map(|row| format!("[{}]", gens(row)))
                                .collect::<Vec<_>>()
                                .join(", ");
                            format!(
                                "presentation({}; degrees=[{}]; rels=[{}])",
                                m.ring_name, ds, rs
                            )
                        }
                        ModuleKind::Idealization { base } => {
                            format!("idealization({}; {})", m.ring_name, base)
                        }
                    };
                    let _ = writeln!(out, "module {} = {}", m.name, rhs);
                }
                DeclKind::Sop => {
                    let s = &self.sops[i];
                    let md = self.module(&s.module).expect("module resolved at parse");
                    let ring = md.module.ring();
                    let es = s
                        .polys
                        .iter()
                        .map(|p| poly_string(ring, p))
                        .collect::<Vec<_>>()
                        .join(", ");
                    let _ = writeln!(out, "sop {} on {} = [{}]", s.name, s.module, es);
                }
                DeclKind::Box_ => {
                    let b = &self.boxes[i];
                    let rs =
                        b.lo.iter()
                            .zip(&b.hi)
                            .map(|(l, h)| format!("{}..{}", l, h))
                            .collect::<Vec<_>>()
                            .join(", ");
                    let _ = writeln!(out, "box {} = [{}]", b.name, rs);
                }
                DeclKind::Task => {
                    let t = &self.tasks[i];
                    let _ = writeln!(out, "task {} = {}", t.name, self.task_rhs(&t.kind));
                }
            }
        }
        out
    }

    /// The canonical right-hand side of a task declaration.
    pub fn task_rhs(&self, kind: &TaskKind) -> String {
        match kind {
            TaskKind::Gb { module } => format!("gb({})", module),
            TaskKind::Nf { module, expr } => {
                let ring = self.module(module).expect("resolved").module.ring().clone();
                format!("nf({}; {})", module, poly_string(&ring, expr))
            }
            TaskKind::Length { module } => format!("length({})", module),
            TaskKind::Mult { module, sop } => format!("mult({}, {})", module, sop),
            TaskKind::Limclo {
                module,
                sop,
                powers,
            } => match powers {
                None => format!("limclo({}, {})", module, sop),
                Some(n) => format!(
                    "limclo({}, {}; powers=[{}])",
                    module,
                    sop,
                    n.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                ),
            },
            TaskKind::Table {
                module,
                sop,
                box_name,
            } => {
                format!("table({}, {}, {})", module, sop, box_name)
            }
            TaskKind::Unmixed { module, sop } => {
                format!("unmixed({}, {})", module, sop)
            }
            TaskKind::DdCheck {
                module,
                sop,
                box_name,
            } => {
                format!("ddcheck({}, {}, {})", module, sop, box_name)
            }
            TaskKind::AIdeals { module } => format!("aideals({})", module),
            TaskKind::Psop { module } => format!("psop({})", module),
            TaskKind::Hk { module, e_max } => {
                format!("hk({}; emax={})", module, e_max)
            }
            TaskKind::Bridge { module, e_max } => {
                format!("bridge({}; emax={})", module, e_max)
            }
        }
    }
}
