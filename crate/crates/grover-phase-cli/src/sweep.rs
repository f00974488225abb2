//! Figure sweeps: one row per database size, comparing the exact maximum
//! success probability against the two closed-form estimates, written as
//! deterministic CSV plus a small matplotlib script.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use grover_phase::approx::{p_max_improved, p_max_long};
use grover_phase::probability::{p_max_continuous, p_max_exact};
use grover_phase::{Error, PhaseConfig};

pub const CSV_HEADER: &str = "n,beta,delta,theta,m_star,p_exact,p_eq12,p_eq13";

/// One record of a sweep over database sizes at fixed `theta` and `delta`.
#[derive(Debug, Clone, Copy)]
pub struct SweepRow {
    pub n: u32,
    pub beta: f64,
    pub delta: f64,
    pub theta: f64,
    /// Integer iteration count attaining the exact maximum.
    pub m_star: u64,
    /// Exact ceiling of the success probability (at the continuous
    /// optimum, which is what the estimates approximate).
    pub p_exact: f64,
    /// The amplitude-ceiling estimate.
    pub p_eq12: f64,
    /// The earlier, coarser estimate.
    pub p_eq13: f64,
}

impl SweepRow {
    pub fn compute(n: u32, theta: f64, delta: f64) -> Result<Self, Error> {
        let cfg = PhaseConfig::from_qubits(n, theta + delta, theta)?;
        let outcome = p_max_exact(cfg);
        let row = Self {
            n,
            beta: cfg.beta(),
            delta,
            theta,
            m_star: outcome.m,
            p_exact: p_max_continuous(cfg),
            p_eq12: p_max_improved(cfg)?,
            p_eq13: p_max_long(cfg)?,
        };
        debug_assert!(delta == 0.0 || row.p_eq13 <= row.p_eq12);
        Ok(row)
    }
}

/// 17 significant digits, enough to round-trip any f64.
fn fmt(value: f64) -> String {
    format!("{value:.16e}")
}

pub fn write_csv(rows: &[SweepRow], path: &Path) -> io::Result<()> {
    let mut out = String::new();
    out.push_str(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            row.n,
            fmt(row.beta),
            fmt(row.delta),
            fmt(row.theta),
            row.m_star,
            fmt(row.p_exact),
            fmt(row.p_eq12),
            fmt(row.p_eq13),
        ));
    }
    fs::write(path, out)
}

/// Path of the plot script that accompanies a CSV output.
pub fn script_path(csv_path: &Path) -> PathBuf {
    csv_path.with_extension("py")
}

const PLOT_TEMPLATE: &str = r#"#!/usr/bin/env python3
"""Render a sweep produced by `grover-phase figure`.

Cross marks: exact maximum success probability.
Solid line:  amplitude-ceiling estimate (p_eq12).
Dashed line: earlier, coarser estimate (p_eq13).
"""
import csv
import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

HERE = os.path.dirname(os.path.abspath(__file__))
CSV_NAME = "@CSV_NAME@"

with open(os.path.join(HERE, CSV_NAME), newline="") as handle:
    rows = list(csv.DictReader(handle))

n = [int(r["n"]) for r in rows]
p_exact = [float(r["p_exact"]) for r in rows]
p_eq12 = [float(r["p_eq12"]) for r in rows]
p_eq13 = [float(r["p_eq13"]) for r in rows]
delta = float(rows[0]["delta"]) if rows else 0.0

plt.figure(figsize=(6.5, 4.5))
plt.plot(n, p_exact, "kx", label="exact")
plt.plot(n, p_eq12, "k-", label="improved estimate")
plt.plot(n, p_eq13, "k--", label="earlier estimate")
plt.xlabel("qubits n")
plt.ylabel("maximum success probability")
plt.title(f"delta = {delta:g}")
plt.ylim(-0.02, 1.02)
plt.legend()
plt.tight_layout()
out = os.path.join(HERE, os.path.splitext(CSV_NAME)[0] + ".png")
plt.savefig(out, dpi=150)
print(f"wrote {out}")
"#;

pub fn write_plot_script(csv_path: &Path, target: &Path) -> io::Result<()> {
    let csv_name = csv_path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "sweep.csv".to_string());
    fs::write(target, PLOT_TEMPLATE.replace("@CSV_NAME@", &csv_name))
}
