use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use motivic_dt::harness::{
    self, render_json, render_markdown, render_series, CheckOptions, Realization, DEFAULT_SEED,
    SERIES_NAMES,
};
use motivic_dt::quiver::{parse_quiver, presets, Orientation, QuiverWithPotential};

const USAGE_ERROR: u8 = 2;

macro_rules! outln {
    ($out:expr, $($arg:tt)*) => {{
        $out.push_str(&format!($($arg)*));
        $out.push('\n');
    }};
}

macro_rules! outp {
    ($out:expr, $($arg:tt)*) => {
        $out.push_str(&format!($($arg)*))
    };
}

#[derive(Parser)]
#[command(name = "motdt", version, about = "Exact motivic DT series and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one named check.
    Check {
        name: String,
        #[arg(long, env = "MOTDT_ORDER", default_value_t = 10)]
        order: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Corrupt the point weights at t^1 before running.
        #[arg(long)]
        mutate_omega_bbs: bool,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
        #[arg(long)]
        no_timing: bool,
    },
    /// Print a named series coefficient by coefficient.
    Series {
        name: String,
        #[arg(long, env = "MOTDT_ORDER", default_value_t = 10)]
        order: usize,
        #[arg(long, value_enum, default_value_t = RealizationArg::Motivic)]
        realization: RealizationArg,
    },
    /// Run every check and print a report.
    Report {
        #[arg(long, env = "MOTDT_ORDER", default_value_t = 10)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        mutate_omega_bbs: bool,
        /// Write zero for every elapsed time so output is byte-stable.
        #[arg(long)]
        no_timing: bool,
        /// Write the report here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// List check and series names.
    List,
    /// Quivers with potential.
    Quiver {
        #[command(subcommand)]
        command: QuiverCommand,
    },
}

#[derive(Subcommand)]
enum QuiverCommand {
    /// Cyclic derivative of the potential in a quiver file.
    Derive {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        arrow: String,
    },
    /// Show a built-in quiver with potential and its relations.
    Preset { name: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum RealizationArg {
    Motivic,
    Weight,
    Euler,
}

impl From<RealizationArg> for Realization {
    fn from(r: RealizationArg) -> Self {
        match r {
            RealizationArg::Motivic => Realization::Motivic,
            RealizationArg::Weight => Realization::Weight,
            RealizationArg::Euler => Realization::Euler,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Md,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(USAGE_ERROR)
}

fn status_code(pass: bool) -> ExitCode {
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn describe(qp: &QuiverWithPotential) -> String {
    let q = &qp.quiver;
    let mut out = String::new();
    let orientation = match q.orientation() {
        Orientation::Path => "path",
        Orientation::RightModule => "right-module",
    };
    out.push_str(&format!("orientation {orientation}\n"));
    for v in q.vertices() {
        let tag = if v.framing { " framing" } else { "" };
        out.push_str(&format!("vertex {}{tag}\n", v.name));
    }
    for a in q.arrows() {
        let (s, t) = (&q.vertices()[a.source].name, &q.vertices()[a.target].name);
        out.push_str(&format!("arrow {}: {s} -> {t}\n", a.name));
    }
    out.push_str(&format!("potential: {}\n", qp.potential.render(q)));
    for (a, rel) in qp.potential.superpotential_relations(q) {
        out.push_str(&format!("d/d{} = {}\n", q.arrow_name(a), rel.render(q)));
    }
    out
}

fn run(cli: Cli, out: &mut String) -> ExitCode {
    match cli.command {
        Command::Check {
            name,
            order,
            seed,
            mutate_omega_bbs,
            json,
            no_timing,
        } => {
            let opts = CheckOptions { seed, mutate_omega_bbs };
            let report = match harness::run_check(&name, order, &opts) {
                Ok(r) if no_timing => r.without_timing(),
                Ok(r) => r,
                Err(e) => return usage(e),
            };
            if json {
                outln!(out, "{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                let status = if report.passed() { "PASS" } else { "FAIL" };
                outln!(out, "{status} {} (order {}, seed {}, {} ms)", report.check, report.order, report.seed, report.elapsed_ms);
                if let Some(d) = &report.first_discrepancy {
                    outln!(out, "first discrepancy at t^{}:\n  lhs: {}\n  rhs: {}", d.power, d.lhs, d.rhs);
                }
            }
            status_code(report.passed())
        }
        Command::Series { name, order, realization } => match harness::series(&name, order) {
            Ok(s) => {
                outp!(out, "{}", render_series(&s, realization.into()));
                ExitCode::SUCCESS
            }
            Err(e) => usage(e),
        },
        Command::Report {
            order,
            format,
            seed,
            mutate_omega_bbs,
            no_timing,
            output,
        } => {
            let opts = CheckOptions { seed, mutate_omega_bbs };
            let mut reports = harness::run_all(order, &opts);
            if no_timing {
                reports = reports.into_iter().map(|r| r.without_timing()).collect();
            }
            let text = match format {
                Format::Json => render_json(&reports) + "\n",
                Format::Md => render_markdown(&reports),
            };
            match output {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, &text) {
                        return usage(format!("cannot write {}: {e}", path.display()));
                    }
                }
                None => outp!(out, "{text}"),
            }
            status_code(reports.iter().all(|r| r.passed()))
        }
        Command::List => {
            outln!(out, "checks:");
            for c in harness::CHECKS {
                outln!(out, "  {:<32} {}", c.name, c.summary);
            }
            outln!(out, "series:");
            for n in SERIES_NAMES {
                outln!(out, "  {n}");
            }
            ExitCode::SUCCESS
        }
        Command::Quiver { command } => match command {
            QuiverCommand::Derive { file, arrow } => {
                let text = match std::fs::read_to_string(&file) {
                    Ok(t) => t,
                    Err(e) => return usage(format!("cannot read {}: {e}", file.display())),
                };
                let qp = match parse_quiver(&text) {
                    Ok(qp) => qp,
                    Err(e) => return usage(format!("{}: {e}", file.display())),
                };
                let Some(a) = qp.quiver.arrow_id(&arrow) else {
                    let names: Vec<_> = qp.quiver.arrows().iter().map(|a| a.name.as_str()).collect();
                    return usage(format!("unknown arrow {arrow:?}; available: {}", names.join(", ")));
                };
                outln!(out, "{}", qp.potential.cyclic_derivative(a).render(&qp.quiver));
                ExitCode::SUCCESS
            }
            QuiverCommand::Preset { name } => match presets::preset(&name) {
                Ok(qp) => {
                    outp!(out, "{}", describe(&qp));
                    ExitCode::SUCCESS
                }
                Err(e) => usage(e),
            },
        },
    }
}

fn main() -> ExitCode {
    let mut out = String::new();
    let code = run(Cli::parse(), &mut out);
    // a closed pipe downstream is not an error
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    code
}
