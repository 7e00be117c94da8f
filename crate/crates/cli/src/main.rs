//! `parafrac`: session files in, result envelopes out.
//!
//! Exit codes: 0 success, 1 a check or verdict failed, 2 bad input,
//! 3 a stabilization cap was exceeded.

use clap::{Parser, Subcommand, ValueEnum};
use parafrac_cli::parse::{parse_poly_arg, parse_session};
use parafrac_cli::runner::{run_task, RunConfig, TaskOutput};
use parafrac_cli::scenario::{run_scenario, ScenarioReport, SCENARIOS};
use parafrac_cli::session::{Session, TaskDecl, TaskKind};
use parafrac_cli::CliError;
use std::io::Read as _;
use std::process::ExitCode;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Parser)]
#[command(
    name = "parafrac",
    version,
    about = "Length invariants of parameter ideals: limit closures, I/J tables, \
             multiplicities and Hilbert-Kunz functions for graded modules"
)]
struct Cli {
    /// Stabilization cap for colon chains and saturations
    #[arg(long, global = true, default_value_t = parafrac_core::DEFAULT_STAB_CAP)]
    cap: u32,

    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Output format; csv applies to table and bridge, everything else is json
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Seed for the randomized parameter search
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Attempts for the randomized parameter search
    #[arg(long, global = true, default_value_t = 64)]
    attempts: u32,

    /// Include wall-clock timings in envelopes (breaks byte-stable output)
    #[arg(long, global = true)]
    timings: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run one task from a session, or every task in declaration order
    Run {
        /// Session file, or `-` for stdin
        session: String,
        /// Task name; omit to run all tasks
        task: Option<String>,
    },
    /// Reduced Groebner basis of a module's relation submodule
    Gb { session: String, module: String },
    /// Normal form of an expression against a module's relations
    Nf {
        session: String,
        module: String,
        expr: String,
    },
    /// Length of a module
    Length { session: String, module: String },
    /// Multiplicity of a parameter system on a module
    Mult {
        session: String,
        module: String,
        sop: String,
    },
    /// Limit closure of a parameter system, optionally powered
    Limclo {
        session: String,
        module: String,
        sop: String,
        /// Exponents, comma separated, one per sop element
        #[arg(long, value_delimiter = ',')]
        powers: Option<Vec<u32>>,
    },
    /// Length table with the I and J columns over an exponent box
    Table {
        session: String,
        module: String,
        sop: String,
        r#box: String,
    },
    /// Unmixed component of the zero submodule
    Unmixed {
        session: String,
        module: String,
        sop: String,
    },
    /// dd-sequence certification over an exponent box
    Ddcheck {
        session: String,
        module: String,
        sop: String,
        r#box: String,
    },
    /// Annihilator ideals of the local cohomology modules
    Aideals { session: String, module: String },
    /// Seeded search for a p-standard system of parameters
    Psop { session: String, module: String },
    /// Hilbert-Kunz function along Frobenius powers of the variables
    Hk {
        session: String,
        module: String,
        #[arg(long, default_value_t = 4)]
        emax: u32,
    },
    /// Compare the limit-closure count with the direct Frobenius count
    Bridge {
        session: String,
        module: String,
        #[arg(long, default_value_t = 3)]
        emax: u32,
    },
    /// Echo a session back in canonical form
    Fmt {
        /// Session file, or `-` for stdin
        session: String,
    },
    /// Run a named self-check scenario, or `all`
    Verify {
        /// One of the scenario names, or `all`
        scenario: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        if rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .is_err()
        {
            eprintln!("error: could not configure {} worker threads", k);
            return ExitCode::from(2);
        }
    }
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

/// Writes to stdout, exiting quietly when the reader has gone away
/// (`parafrac ... | head` must not panic).
fn emit(text: &str) {
    use std::io::Write as _;
    let mut out = std::io::stdout();
    if out.write_all(text.as_bytes()).is_err() || out.flush().is_err() {
        std::process::exit(0);
    }
}

fn read_session(path: &str) -> Result<(Session, String), CliError> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Input(format!("reading stdin: {}", e)))?;
        buf
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("reading `{}`: {}", path, e)))?
    };
    let session = parse_session(&text)?;
    Ok((session, text))
}

fn config(cli: &Cli) -> RunConfig {
    RunConfig {
        cap: cli.cap,
        seed: cli.seed,
        attempts: cli.attempts,
        timings: cli.timings,
    }
}

fn print_output(cli: &Cli, out: &TaskOutput) {
    match (&cli.format, &out.csv) {
        (Format::Csv, Some(csv)) => emit(csv),
        _ => emit(&format!("{}\n", out.envelope.to_json())),
    }
}

fn check_sop(s: &Session, module: &str, sop: &str) -> Result<(), CliError> {
    match s.sop(sop) {
        None => Err(CliError::unknown("sop", sop)),
        Some(d) if d.module != module => Err(CliError::Input(format!(
            "sop `{}` is declared on `{}`, not `{}`",
            sop, d.module, module
        ))),
        Some(_) => Ok(()),
    }
}

fn check_module(s: &Session, module: &str) -> Result<(), CliError> {
    if s.module(module).is_none() {
        return Err(CliError::unknown("module", module));
    }
    Ok(())
}

fn check_box(s: &Session, name: &str) -> Result<(), CliError> {
    if s.box_(name).is_none() {
        return Err(CliError::unknown("box", name));
    }
    Ok(())
}

/// Builds the ad-hoc task a direct subcommand stands for.
fn direct_task(s: &Session, cmd: &Cmd) -> Result<Option<TaskDecl>, CliError> {
    let kind = match cmd {
        Cmd::Gb { module, .. } => {
            check_module(s, module)?;
            TaskKind::Gb {
                module: module.clone(),
            }
        }
        Cmd::Nf { module, expr, .. } => {
            check_module(s, module)?;
            let ring = s.module(module).expect("checked").module.ring().clone();
            let p = parse_poly_arg(expr, &ring)?;
            TaskKind::Nf {
                module: module.clone(),
                expr: p,
            }
        }
        Cmd::Length { module, .. } => {
            check_module(s, module)?;
            TaskKind::Length {
                module: module.clone(),
            }
        }
        Cmd::Mult { module, sop, .. } => {
            check_module(s, module)?;
            check_sop(s, module, sop)?;
            TaskKind::Mult {
                module: module.clone(),
                sop: sop.clone(),
            }
        }
        Cmd::Limclo {
            module,
            sop,
            powers,
            ..
        } => {
            check_module(s, module)?;
            check_sop(s, module, sop)?;
            TaskKind::Limclo {
                module: module.clone(),
                sop: sop.clone(),
                powers: powers.clone(),
            }
        }
        Cmd::Table {
            module, sop, r#box, ..
        } => {
            check_module(s, module)?;
            check_sop(s, module, sop)?;
            check_box(s, r#box)?;
            TaskKind::Table {
                module: module.clone(),
                sop: sop.clone(),
                box_name: r#box.clone(),
            }
        }
        Cmd::Unmixed { module, sop, .. } => {
            check_module(s, module)?;
            check_sop(s, module, sop)?;
            TaskKind::Unmixed {
                module: module.clone(),
                sop: sop.clone(),
            }
        }
        Cmd::Ddcheck {
            module, sop, r#box, ..
        } => {
            check_module(s, module)?;
            check_sop(s, module, sop)?;
            check_box(s, r#box)?;
            TaskKind::DdCheck {
                module: module.clone(),
                sop: sop.clone(),
                box_name: r#box.clone(),
            }
        }
        Cmd::Aideals { module, .. } => {
            check_module(s, module)?;
            TaskKind::AIdeals {
                module: module.clone(),
            }
        }
        Cmd::Psop { module, .. } => {
            check_module(s, module)?;
            TaskKind::Psop {
                module: module.clone(),
            }
        }
        Cmd::Hk { module, emax, .. } => {
            check_module(s, module)?;
            if !(1..=24).contains(emax) {
                return Err(CliError::Input("emax must lie in 1..=24".into()));
            }
            TaskKind::Hk {
                module: module.clone(),
                e_max: *emax,
            }
        }
        Cmd::Bridge { module, emax, .. } => {
            check_module(s, module)?;
            if !(1..=24).contains(emax) {
                return Err(CliError::Input("emax must lie in 1..=24".into()));
            }
            TaskKind::Bridge {
                module: module.clone(),
                e_max: *emax,
            }
        }
        _ => return Ok(None),
    };
    Ok(Some(TaskDecl {
        name: "cli".to_string(),
        kind,
    }))
}

fn dispatch(cli: &Cli) -> Result<ExitCode, CliError> {
    let cfg = config(cli);
    match &cli.cmd {
        Cmd::Run { session, task } => {
            let (s, text) = read_session(session)?;
            let tasks: Vec<&TaskDecl> = match task {
                Some(name) => {
                    vec![s
                        .task(name)
                        .ok_or_else(|| CliError::unknown("task", name))?]
                }
                None => s.tasks.iter().collect(),
            };
            if tasks.is_empty() {
                return Err(CliError::Input("the session declares no tasks".into()));
            }
            let mut any_failed = false;
            for t in tasks {
                let out = run_task(&s, &text, t, &cfg)?;
                print_output(cli, &out);
                any_failed |= out.verdict_failed;
            }
            Ok(if any_failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Cmd::Fmt { session } => {
            let (s, _) = read_session(session)?;
            emit(&s.to_text());
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { scenario } => {
            let names: Vec<&str> = if scenario == "all" {
                SCENARIOS.to_vec()
            } else {
                vec![scenario.as_str()]
            };
            let mut failed = 0usize;
            for name in &names {
                let report = run_scenario(name, &cfg)?;
                print_report(&report);
                if !report.passed {
                    failed += 1;
                }
            }
            if names.len() > 1 {
                emit(&format!(
                    "{} of {} scenarios passed\n",
                    names.len() - failed,
                    names.len()
                ));
            }
            Ok(if failed > 0 {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        other => {
            let session_path = match other {
                Cmd::Gb { session, .. }
                | Cmd::Nf { session, .. }
                | Cmd::Length { session, .. }
                | Cmd::Mult { session, .. }
                | Cmd::Limclo { session, .. }
                | Cmd::Table { session, .. }
                | Cmd::Unmixed { session, .. }
                | Cmd::Ddcheck { session, .. }
                | Cmd::Aideals { session, .. }
                | Cmd::Psop { session, .. }
                | Cmd::Hk { session, .. }
                | Cmd::Bridge { session, .. } => session,
                Cmd::Run { .. } | Cmd::Fmt { .. } | Cmd::Verify { .. } => unreachable!(),
            };
            let (s, text) = read_session(session_path)?;
            let task = direct_task(&s, other)?.expect("direct subcommand");
            let out = run_task(&s, &text, &task, &cfg)?;
            print_output(cli, &out);
            Ok(if out.verdict_failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
    }
}

fn print_report(r: &ScenarioReport) {
    let mut text = format!("== {} ==\n", r.name);
    for line in &r.lines {
        text.push_str("  ");
        text.push_str(line);
        text.push('\n');
    }
    text.push_str(&format!(
        "{}: {}\n",
        r.name,
        if r.passed { "PASS" } else { "FAIL" }
    ));
    emit(&text);
}
