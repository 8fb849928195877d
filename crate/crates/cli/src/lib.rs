//! Command-line front end for `ratcoh-core`.

pub mod args;
pub mod commands;
pub mod json;

use std::time::Instant;

use serde_json::{json, Value};

use args::{Cli, Command, ConfigArgs, Format};
use commands::{CliError, Outcome};

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Rendered stdout and the process exit code.
pub struct Rendered {
    pub stdout: String,
    pub code: i32,
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Basis { .. } => "basis",
        Command::SSet { .. } => "s-set",
        Command::TheoremMain { .. } => "theorem-main",
        Command::LemmaBraid { .. } => "lemma-braid",
        Command::Iso { .. } => "iso",
        Command::Steenrod { .. } => "steenrod",
        Command::BraidConf { .. } => "braid-conf",
        Command::Coalgebra { .. } => "coalgebra",
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    let limits = cli.config.limits();
    limits.validate()?;
    match cli.command {
        Command::Basis { family, k } => commands::basis_cmd(family.into(), k, &limits),
        Command::SSet { family, k } => commands::s_set_cmd(family.into(), k, &limits),
        Command::TheoremMain { from, to } => commands::theorem_main_cmd(from, to, &limits),
        Command::LemmaBraid { max_k } => commands::lemma_braid_cmd(max_k, &limits),
        Command::Iso { a, b, sq1 } => commands::iso_cmd(a, b, sq1, &limits),
        Command::Steenrod {
            family,
            k,
            j,
            extended,
            against,
        } => commands::steenrod_cmd(family.into(), k, j, extended, against, &limits),
        Command::BraidConf { max_k } => commands::braid_conf_cmd(max_k, &limits),
        Command::Coalgebra { family, k } => commands::coalgebra_cmd(family.into(), k, &limits),
    }
}

fn config_json(c: &ConfigArgs) -> Value {
    json!({
        "max_gen": c.max_gen,
        "basis_k_bound": c.basis_k_bound,
        "iso_budget": c.iso_budget,
        "max_basis_size": c.max_basis_size,
    })
}

/// Runs one invocation. Errors are reported on stderr by the caller.
pub fn run(cli: &Cli) -> Result<Rendered, CliError> {
    let start = Instant::now();
    let outcome = dispatch(cli)?;
    let elapsed = start.elapsed();
    let code = if outcome.passed { EXIT_PASS } else { EXIT_FAIL };
    let stdout = match cli.config.format {
        Format::Json => {
            let mut report = json!({
                "schema": SCHEMA_VERSION,
                "command": command_name(&cli.command),
                "inputs": outcome.inputs,
                "config": config_json(&cli.config),
                "results": outcome.results,
                "verdict": if outcome.passed { "pass" } else { "fail" },
            });
            if cli.config.timing {
                report["timing_ms"] = json!(elapsed.as_secs_f64() * 1000.0);
            }
            let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = outcome.text;
            s.push_str(if outcome.passed {
                "verdict: pass\n"
            } else {
                "verdict: FAIL\n"
            });
            if cli.config.timing {
                s.push_str(&format!("time: {:.1} ms\n", elapsed.as_secs_f64() * 1000.0));
            }
            s
        }
    };
    Ok(Rendered { stdout, code })
}
