//! Named identity checks, named series, and report rendering for the CLI.

mod checks;
mod report;

use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::dt::{self, GeometryInput};
use crate::error::{Error, Result};
use crate::motive::{half_power, MotiveClass};
use crate::series::MotiveSeries;

pub use checks::{CheckFn, CheckEntry, CHECKS};
pub use report::{render_json, render_markdown, CheckReport, Discrepancy, Status};

/// Knobs shared by every check.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CheckOptions {
    pub seed: u64,
    /// Replace the point weights with a corrupted copy (`omega_bbs(1)` shifted).
    pub mutate_omega_bbs: bool,
}

pub const DEFAULT_SEED: u64 = 0x5eed;

pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.name).collect()
}

fn find_check(name: &str) -> Result<&'static CheckEntry> {
    CHECKS.iter().find(|c| c.name == name).ok_or_else(|| Error::Unknown {
        kind: "check",
        name: name.into(),
        available: check_names().join(", "),
    })
}

pub fn run_check(name: &str, order: usize, opts: &CheckOptions) -> Result<CheckReport> {
    let entry = find_check(name)?;
    Ok(execute(entry, order, opts))
}

fn execute(entry: &CheckEntry, order: usize, opts: &CheckOptions) -> CheckReport {
    let start = Instant::now();
    let outcome = (entry.run)(order, opts);
    let elapsed_ms = u64::try_from(start.elapsed().as_millis()).unwrap_or(u64::MAX);
    let first_discrepancy = match outcome {
        Ok(d) => d,
        Err(e) => Some(Discrepancy::new(0, "error", e)),
    };
    CheckReport {
        check: entry.name.to_string(),
        order,
        status: if first_discrepancy.is_none() { Status::Pass } else { Status::Fail },
        seed: opts.seed,
        first_discrepancy,
        elapsed_ms,
    }
}

/// Every registered check, run in parallel and sorted by name.
pub fn run_all(order: usize, opts: &CheckOptions) -> Vec<CheckReport> {
    let mut out: Vec<CheckReport> = CHECKS.par_iter().map(|c| execute(c, order, opts)).collect();
    out.sort_by(|a, b| a.check.cmp(&b.check));
    out
}

/// How a series is printed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Realization {
    Motivic,
    Weight,
    Euler,
}

impl FromStr for Realization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "motivic" => Ok(Realization::Motivic),
            "weight" => Ok(Realization::Weight),
            "euler" => Ok(Realization::Euler),
            other => Err(Error::Unknown {
                kind: "realization",
                name: other.into(),
                available: "motivic, weight, euler".into(),
            }),
        }
    }
}

pub const SERIES_NAMES: &[&str] = &[
    "f-curv",
    "local-quot-exp-form",
    "macmahon",
    "omega-bbs",
    "omega-curv",
    "q-quot-L",
    "q-quot-conifold",
    "z-hilb-A3",
    "z-hilb-X",
    "z0",
];

/// A named series through `t^order`.
pub fn series(name: &str, order: usize) -> Result<MotiveSeries> {
    Ok(match name {
        "z0" => dt::z0(order),
        "f-curv" => dt::f_curv(order),
        "z-hilb-A3" => dt::z_hilb(&half_power(6), order),
        "z-hilb-X" => dt::z_hilb(&dt::class_conifold(), order),
        "q-quot-L" => dt::q_quot(&GeometryInput::affine_line(), order),
        "q-quot-conifold" => dt::q_quot(&GeometryInput::conifold(), order),
        "local-quot-exp-form" => dt::q_l_exp_form(order),
        "macmahon" => checks::macmahon_series(order)?,
        "omega-bbs" => dt::omega_series(order, dt::omega_bbs),
        "omega-curv" => dt::omega_series(order, dt::omega_curv),
        other => {
            return Err(Error::Unknown {
                kind: "series",
                name: other.into(),
                available: SERIES_NAMES.join(", "),
            })
        }
    })
}

fn render_value(c: &MotiveClass, r: Realization) -> String {
    match r {
        Realization::Motivic => c.to_string(),
        Realization::Weight => c.specialize_weight().to_string(),
        Realization::Euler => c.specialize_euler().to_string(),
    }
}

/// One line `t^n: value` per coefficient.
pub fn render_series(s: &MotiveSeries, r: Realization) -> String {
    s.coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| format!("t^{n}: {}\n", render_value(c, r)))
        .collect()
}
