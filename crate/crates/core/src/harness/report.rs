use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// First power of `t` (or trial index) at which two sides disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub power: usize,
    pub lhs: String,
    pub rhs: String,
}

impl Discrepancy {
    pub fn new(power: usize, lhs: impl ToString, rhs: impl ToString) -> Self {
        Discrepancy {
            power,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub order: usize,
    pub status: Status,
    pub seed: u64,
    pub first_discrepancy: Option<Discrepancy>,
    pub elapsed_ms: u64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Same report with the timing zeroed, for byte-stable output.
    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = 0;
        self
    }
}

pub fn render_json(reports: &[CheckReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

pub fn render_markdown(reports: &[CheckReport]) -> String {
    let mut out = String::from("| check | order | status | first discrepancy | elapsed ms |\n|---|---|---|---|---|\n");
    for r in reports {
        let status = match r.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
        };
        let disc = match &r.first_discrepancy {
            None => "-".to_string(),
            Some(d) => format!("t^{}: `{}` vs `{}`", d.power, d.lhs, d.rhs),
        };
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} |\n",
            r.check, r.order, status, disc, r.elapsed_ms
        ));
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    out.push_str(&format!("\n{} checks, {} failed\n", reports.len(), failed));
    out
}
