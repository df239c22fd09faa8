//! Batch runs over a grid of `(p, e)` cells, written as JSON lines.
//!
//! The output file is append-only and keyed by `(p, e, f_expr)`: rerunning
//! with the same file skips cells already recorded, so an interrupted sweep
//! resumes where it stopped. With `--jobs > 1` the cells are computed by a
//! small worker pool, but lines are still written in grid order, so a
//! partial file is always a prefix of the full one.

use std::collections::{BTreeMap, HashSet};
use std::fs::OpenOptions;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;
use std::thread;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use serde::Serialize;

use crate::cell::{check_cell, parse_f, probe_cell, txy_ring, ProbeJson};

/// One line of sweep output. Field names and order are a stable interface;
/// downstream tooling matches on them.
#[derive(Debug, Serialize)]
pub struct SweepRecord {
    pub p: u64,
    pub e: u32,
    pub q: u64,
    pub f_expr: String,
    pub lemma11: bool,
    pub thm12_member_tau_g: bool,
    pub thm12_not_member_g: bool,
    pub thm12_contraction_is_tau: bool,
    pub ge_check: Option<bool>,
    pub divisors: Vec<String>,
    pub probes: Vec<ProbeJson>,
    pub duration_ms: u64,
}

pub struct SweepConfig {
    pub primes: Vec<u64>,
    pub emax: u32,
    pub f_expr: String,
    pub out: PathBuf,
    pub jobs: usize,
    pub seed: u64,
}

fn record_line(p: u64, e: u32, f_expr: &str, seed: u64) -> Result<String> {
    let start = Instant::now();
    let cell = check_cell(p, e, f_expr)?;
    let probe = probe_cell(p, e, f_expr, seed)?;
    let record = SweepRecord {
        p,
        e,
        q: cell.q,
        f_expr: f_expr.to_string(),
        lemma11: cell.lemma11,
        thm12_member_tau_g: cell.member_tau_g,
        thm12_not_member_g: cell.not_member_g,
        thm12_contraction_is_tau: cell.contraction_is_tau,
        ge_check: cell.ge_check,
        divisors: probe.divisors,
        probes: probe.probes,
        duration_ms: start.elapsed().as_millis() as u64,
    };
    Ok(serde_json::to_string(&record)?)
}

pub fn run_sweep(cfg: &SweepConfig) -> Result<()> {
    if cfg.emax == 0 {
        bail!("--emax must be at least 1");
    }
    // Validate the polynomial for every requested prime before spawning
    // anything: a typo should fail fast, not once per cell.
    for &p in &cfg.primes {
        let ring = txy_ring(p)?;
        parse_f(&cfg.f_expr, &ring)?;
    }

    let mut tasks: Vec<(u64, u32)> = Vec::new();
    for &p in &cfg.primes {
        for e in 1..=cfg.emax {
            tasks.push((p, e));
        }
    }

    // Resume: collect the keys already present. Lines that do not parse
    // (for example a line cut short by a crash) are ignored and the cells
    // they would have covered are recomputed.
    let mut already = 0usize;
    if cfg.out.exists() {
        let content = std::fs::read_to_string(&cfg.out)
            .with_context(|| format!("reading {}", cfg.out.display()))?;
        let mut done: HashSet<(u64, u32)> = HashSet::new();
        for line in content.lines() {
            let Ok(value) = serde_json::from_str::<serde_json::Value>(line) else {
                continue;
            };
            if value["f_expr"].as_str() == Some(cfg.f_expr.as_str()) {
                if let (Some(p), Some(e)) = (value["p"].as_u64(), value["e"].as_u64()) {
                    done.insert((p, e as u32));
                }
            }
        }
        let before = tasks.len();
        tasks.retain(|key| !done.contains(key));
        already = before - tasks.len();
    }

    let file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(&cfg.out)
        .with_context(|| format!("opening {}", cfg.out.display()))?;
    let mut writer = BufWriter::new(file);

    let workers = cfg.jobs.max(1).min(tasks.len().max(1));
    let next = AtomicUsize::new(0);
    let (tx, rx) = mpsc::channel::<(usize, Result<String>)>();
    let mut written = 0usize;
    let mut failed = 0usize;

    thread::scope(|scope| -> Result<()> {
        for _ in 0..workers {
            let tx = tx.clone();
            let tasks = &tasks;
            let next = &next;
            let cfg = &*cfg;
            scope.spawn(move || loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= tasks.len() {
                    break;
                }
                let (p, e) = tasks[i];
                let line = record_line(p, e, &cfg.f_expr, cfg.seed);
                if tx.send((i, line)).is_err() {
                    break;
                }
            });
        }
        drop(tx);

        // Reorder completions so the file grows in grid order.
        let mut pending: BTreeMap<usize, Result<String>> = BTreeMap::new();
        let mut next_write = 0usize;
        for (i, result) in rx {
            pending.insert(i, result);
            while let Some(result) = pending.remove(&next_write) {
                let (p, e) = tasks[next_write];
                match result {
                    Ok(line) => {
                        writeln!(writer, "{line}")?;
                        writer.flush()?;
                        eprintln!("p={p} e={e}: recorded");
                        written += 1;
                    }
                    Err(err) => {
                        eprintln!("p={p} e={e}: failed: {err:#}");
                        failed += 1;
                    }
                }
                next_write += 1;
            }
        }
        Ok(())
    })?;

    println!(
        "{written} record(s) written to {} ({already} already present, {failed} failed)",
        cfg.out.display()
    );
    if failed > 0 {
        bail!("{failed} cell(s) failed");
    }
    Ok(())
}
