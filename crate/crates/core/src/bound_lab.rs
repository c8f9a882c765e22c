//! Checks `γ_p(G) <= (n + 1) / 5` on connected 4-regular claw-free graphs
//! and its tightness on `E_k`.
//!
//! Instances are `E_0..E_K` with `r = 4`, the octahedron (line graph of
//! `K_4`), and line graphs of seeded random cubic graphs. Line graphs of
//! connected cubic graphs are connected, 4-regular and claw-free, but every
//! instance is still checked before it counts.

use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::families::{gen_e, gen_random_cubic};
use crate::graph::Graph;
use crate::solver::{min_pds_capped, DEFAULT_CARDINALITY_CAP};

pub const CSV_HEADER: &str = "instance,n,gamma_p,bound,tight,connected,regular4,clawfree,runtime_ms";

/// Largest cubic order accepted; its line graph has 18 vertices.
pub const MAX_CUBIC_ORDER: usize = 12;

#[derive(Clone, Debug)]
pub struct LabConfig {
    /// Number of random line-graph instances.
    pub trials: usize,
    /// Largest cubic order sampled (even, 4..=12).
    pub max_cubic: usize,
    pub seed: u64,
    /// Include `E_0..=E_k` (`r = 4`) when set.
    pub ek_max: Option<usize>,
    /// Exact-solver vertex cap; larger instances are skipped.
    pub solver_cap: usize,
    /// Record wall-clock runtimes. With `false`, `runtime_ms` is 0 and the
    /// report depends only on the configuration.
    pub timing: bool,
}

impl Default for LabConfig {
    fn default() -> Self {
        LabConfig {
            trials: 20,
            max_cubic: MAX_CUBIC_ORDER,
            seed: 1,
            ek_max: Some(2),
            solver_cap: DEFAULT_CARDINALITY_CAP,
            timing: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundRecord {
    pub instance: String,
    pub n: usize,
    /// `None` when the instance exceeded the solver cap.
    pub gamma_p: Option<usize>,
    /// `floor((n + 1) / 5)`.
    pub bound: usize,
    pub tight: bool,
    pub connected: bool,
    pub regular4: bool,
    pub clawfree: bool,
    pub runtime_ms: u64,
    /// `5 γ_p > n`: beats the `n / (r + 1)` bound conjectured for
    /// connected `r`-regular graphs (here `r = 4`).
    pub exceeds_n_over_5: bool,
}

impl BoundRecord {
    pub fn structural_ok(&self) -> bool {
        self.connected && self.regular4 && self.clawfree
    }

    /// The checks pass but `γ_p` is above the bound.
    pub fn violates_bound(&self) -> bool {
        self.structural_ok() && self.gamma_p.is_some_and(|g| g > self.bound)
    }

    pub fn skipped(&self) -> bool {
        self.gamma_p.is_none()
    }
}

#[derive(Clone, Debug, Default)]
pub struct LabReport {
    /// Sorted by instance name.
    pub records: Vec<BoundRecord>,
    /// Graphs of bound violations, for debugging.
    pub violations: Vec<(String, Graph)>,
    /// Generated instances dropped for failing a structural check.
    pub rejected: Vec<String>,
}

pub fn bound(n: usize) -> usize {
    (n + 1) / 5
}

/// Structural checks and exact `γ_p` for one graph.
pub fn evaluate(name: &str, g: &Graph, cap: usize) -> Result<BoundRecord> {
    let start = Instant::now();
    let n = g.vertex_count();
    let gamma_p = match min_pds_capped(g, cap) {
        Ok(r) => Some(r.cardinality),
        Err(Error::Resource(_)) => None,
        Err(e) => return Err(e),
    };
    let bound = bound(n);
    Ok(BoundRecord {
        instance: name.to_string(),
        n,
        gamma_p,
        bound,
        tight: gamma_p == Some(bound),
        connected: g.is_connected(),
        regular4: g.is_regular(4),
        clawfree: g.is_claw_free(),
        runtime_ms: start.elapsed().as_millis() as u64,
        exceeds_n_over_5: gamma_p.is_some_and(|gp| 5 * gp > n),
    })
}

fn instances(config: &LabConfig) -> Result<Vec<(String, Graph, bool)>> {
    let mc = config.max_cubic;
    if mc < 4 || !mc.is_multiple_of(2) || mc > MAX_CUBIC_ORDER {
        return Err(Error::input(format!(
            "max cubic order must be even and in 4..={MAX_CUBIC_ORDER}, got {mc}"
        )));
    }
    let mut out = Vec::new();
    if let Some(kmax) = config.ek_max {
        for k in 0..=kmax {
            let g = gen_e(4, k)?;
            if g.vertex_count() > 24 {
                return Err(Error::input(format!(
                    "E_{k} has {} vertices; keep the E_k range within 24 vertices (k <= 3)",
                    g.vertex_count()
                )));
            }
            out.push((format!("ek-r4-k{k}"), g, false));
        }
    }
    out.push(("line-k4".to_string(), gen_random_cubic(4, 0)?.line_graph(), true));

    let sizes: Vec<usize> = if mc == 4 { vec![4] } else { (6..=mc).step_by(2).collect() };
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for t in 0..config.trials {
        let size = sizes[t % sizes.len()];
        let cubic = gen_random_cubic(size, rng.gen())?;
        out.push((format!("line-cubic{size:02}-t{t:03}"), cubic.line_graph(), true));
    }
    Ok(out)
}

/// Runs every configured instance. Bound violations are collected in the
/// report rather than returned as errors.
pub fn run_lab(config: &LabConfig) -> Result<LabReport> {
    let mut report = LabReport::default();
    for (name, g, generated) in instances(config)? {
        let mut record = evaluate(&name, &g, config.solver_cap)?;
        if generated && !record.structural_ok() {
            report.rejected.push(name);
            continue;
        }
        if !config.timing {
            record.runtime_ms = 0;
        }
        if record.violates_bound() {
            report.violations.push((name, g));
        }
        report.records.push(record);
    }
    report.records.sort_by(|a, b| a.instance.cmp(&b.instance));
    Ok(report)
}

/// CSV text of the report, rows sorted by instance name.
pub fn render_report(records: &[BoundRecord]) -> String {
    let mut rows: Vec<&BoundRecord> = records.iter().collect();
    rows.sort_by(|a, b| a.instance.cmp(&b.instance));
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let gamma = r.gamma_p.map(|g| g.to_string()).unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            r.instance, r.n, gamma, r.bound, r.tight, r.connected, r.regular4, r.clawfree, r.runtime_ms
        )
        .unwrap();
    }
    out
}

pub fn write_report(records: &[BoundRecord], path: &Path) -> Result<()> {
    std::fs::write(path, render_report(records)).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}
