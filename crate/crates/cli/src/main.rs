mod args;
mod config;
mod output;

use std::io::{self, BufWriter};
use std::process::ExitCode;

use anyhow::{anyhow, Result};
use clap::Parser;
use domb_core::qseries::{verify_apery_eta_identity, verify_domb_eta_identity};
use domb_core::verifier::{run_campaign, run_task, CampaignConfig, Claim, CongruenceTask};
use domb_core::{DombSpec, Prime, Sequence};

use args::{
    Cli, Command, Format, LevelArgs, LiftArgs, QcheckCommand, SeqCommand, SpecArgs, VerifyCommand,
};
use config::ConfigFile;
use output::{Emitter, OutputRecord};

/// Errors that map to exit code 2.
#[derive(Debug)]
struct UsageError(anyhow::Error);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:#}", self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(error: impl Into<anyhow::Error>) -> anyhow::Error {
    anyhow::Error::new(UsageError(error.into()))
}

fn spec(args: SpecArgs) -> Result<DombSpec> {
    DombSpec::new(args.a, args.b, args.c).map_err(usage)
}

fn prime(p: u64) -> Result<Prime> {
    Prime::new_large(p).map_err(usage)
}

fn check_index(index: u64, max_index: u64) -> Result<()> {
    if index > max_index {
        return Err(usage(anyhow!(
            "index {index} exceeds the limit {max_index} (raise it with --max-index or DOMB_MAX_INDEX)"
        )));
    }
    Ok(())
}

fn stdout_emitter(format: Format) -> Emitter<BufWriter<io::StdoutLock<'static>>> {
    Emitter::new(format, BufWriter::new(io::stdout().lock()))
}

fn cmd_seq(command: SeqCommand, format: Format, max_index: u64) -> Result<bool> {
    let (sequence, n) = match command {
        SeqCommand::Apery(i) => (Sequence::Apery, i.n),
        SeqCommand::Domb(i) => (Sequence::Domb, i.n),
        SeqCommand::Gendomb { index, spec: s } => (Sequence::Generalized(spec(s)?), index.n),
    };
    check_index(n, max_index)?;
    let mut out = stdout_emitter(format);
    for value in sequence.values_through(n) {
        out.emit(&OutputRecord::sequence(sequence, &value))?;
    }
    out.finish()?;
    Ok(true)
}

fn level_index(level: LevelArgs) -> u64 {
    level
        .p
        .checked_pow(level.r)
        .and_then(|q| q.checked_mul(level.m))
        .unwrap_or(u64::MAX)
}

fn lift_task(claim: Claim, lift: LiftArgs) -> Result<(CongruenceTask, u64)> {
    let l = lift.level;
    let task = CongruenceTask::lift(
        claim,
        prime(l.p)?,
        l.m,
        lift.n,
        l.r,
        lift.s,
        spec(lift.spec)?,
    );
    Ok((task, level_index(l)))
}

fn single_task(command: VerifyCommand) -> Result<(CongruenceTask, u64)> {
    Ok(match command {
        VerifyCommand::Theorem { level: l, spec: s } => (
            CongruenceTask::theorem(prime(l.p)?, l.m, l.r, spec(s)?),
            level_index(l),
        ),
        VerifyCommand::Weak(l) => (
            CongruenceTask::weak_zagier(prime(l.p)?, l.m, l.r),
            level_index(l),
        ),
        VerifyCommand::Gessel { p, n } => {
            (CongruenceTask::gessel(prime(p)?, n), n.saturating_mul(p))
        }
        VerifyCommand::Central(l) => (
            CongruenceTask::central(prime(l.p)?, l.m, l.r),
            level_index(l),
        ),
        VerifyCommand::Key(lift) => lift_task(Claim::KeyCongruence, lift)?,
        VerifyCommand::Steps(lift) => lift_task(Claim::StepFactorization, lift)?,
        VerifyCommand::Ratio(lift) => lift_task(Claim::RatioCongruence, lift)?,
        VerifyCommand::Witnesses(lift) => lift_task(Claim::Witnesses, lift)?,
        VerifyCommand::Seventerms(lift) => lift_task(Claim::SevenTerms, lift)?,
        VerifyCommand::Vanishing { level: l, spec: s } => (
            CongruenceTask::vanishing(prime(l.p)?, l.m, l.r, spec(s)?),
            level_index(l),
        ),
        VerifyCommand::Prop21 { level: l, j } => (
            CongruenceTask::harmonic(prime(l.p)?, l.m, l.r, j),
            level_index(l),
        ),
        VerifyCommand::Campaign { .. } => unreachable!("campaigns are not single tasks"),
    })
}

fn cmd_verify(command: VerifyCommand, format: Option<Format>, max_index: u64) -> Result<bool> {
    if let VerifyCommand::Campaign { config } = command {
        let (campaign, file_format) = match config {
            Some(path) => {
                let file = ConfigFile::load(&path).map_err(usage)?;
                let file_format = file.format;
                (file.into_campaign(max_index).map_err(usage)?, file_format)
            }
            None => (
                CampaignConfig {
                    max_index,
                    ..CampaignConfig::default()
                },
                None,
            ),
        };
        let outcomes = run_campaign(&campaign).map_err(usage)?;
        let mut out = stdout_emitter(format.or(file_format).unwrap_or(Format::Plain));
        let mut all_hold = true;
        for outcome in &outcomes {
            all_hold &= matches!(outcome, Ok(report) if report.holds);
            out.emit(&OutputRecord::congruence(outcome))?;
        }
        out.finish()?;
        return Ok(all_hold);
    }

    let (task, index) = single_task(command)?;
    check_index(index, max_index)?;
    let report = run_task(&task).map_err(usage)?;
    let holds = report.holds;
    let mut out = stdout_emitter(format.unwrap_or(Format::Plain));
    out.emit(&OutputRecord::congruence(&Ok(report)))?;
    out.finish()?;
    Ok(holds)
}

fn cmd_qcheck(command: QcheckCommand, format: Format, max_index: u64) -> Result<bool> {
    let (args, verify): (_, fn(u64) -> domb_core::Result<_>) = match command {
        QcheckCommand::Apery(args) => (args, verify_apery_eta_identity),
        QcheckCommand::Domb(args) => (args, verify_domb_eta_identity),
    };
    check_index(args.order, max_index)?;
    let report = verify(args.order).map_err(usage)?;
    let mut out = stdout_emitter(format);
    out.emit(&OutputRecord::identity(&report, args.emit_coefficients))?;
    out.finish()?;
    if let Some(m) = &report.mismatch {
        eprintln!(
            "{}: first mismatch at q^{}: form {} vs expansion {}",
            report.identity, m.exponent, m.form, m.expansion
        );
    }
    Ok(report.agrees())
}

fn run(cli: Cli) -> Result<bool> {
    let plain = cli.format.unwrap_or(Format::Plain);
    match cli.command {
        Command::Seq(command) => cmd_seq(command, plain, cli.max_index),
        Command::Verify(command) => cmd_verify(command, cli.format, cli.max_index),
        Command::Qcheck(command) => cmd_qcheck(command, plain, cli.max_index),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(error) => {
            eprintln!("domb: {error:#}");
            if error.downcast_ref::<UsageError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
