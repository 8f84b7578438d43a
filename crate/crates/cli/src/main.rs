// Copyright 2026 The szx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! `szx`: evaluate diagrams, run rule suites, compile diagonal gates,
//! certify spider nests and synthesize CNOT circuits.
//!
//! Reports are JSON on stdout (or `--out`). Exit status is 0 on success,
//! 1 when a check ran and failed, 2 for unreadable input or usage errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use szx_core::f2::{cnot_synthesize, replay};
use szx_core::gates::{fourier_decompose, moebius_decompose};
use szx_core::nest::{
    family_de2020fast, munson_check, nest_check, nest_numeric, s_hat_from_gadget_phases,
    MAX_NUMERIC_QUBITS,
};
use szx_core::phase::{PhaseFunction, SymmetricPhaseFunction};
use szx_core::rational;
use szx_core::suite::run_suite;
use szx_core::tensor::build::cnot_circuit_diagram;
use szx_core::tensor::{eval_diagram, parse_diagram, ComplexMatrix, Diagram};
use szx_core::{Error, F2Matrix};

#[derive(Parser)]
#[command(name = "szx", version, about = "Scalable ZX/ZH semantics and diagonal-gate tooling")]
struct Cli {
    /// Numerical tolerance for matrix comparisons.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a diagram to its matrix.
    Eval {
        diagram: PathBuf,
        /// Matrix to compare against.
        #[arg(long)]
        expect: Option<PathBuf>,
    },
    /// Run a randomized rule suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Largest register size.
        #[arg(long, default_value_t = 3)]
        sizes: usize,
    },
    /// Decompose a phase function into gadgets or hyperedges.
    Decompose {
        phasefn: PathBuf,
        #[arg(long, value_enum, default_value_t = Transform::Walsh)]
        transform: Transform,
        /// Rebuild the phase function from the terms and require exact equality.
        #[arg(long)]
        roundtrip: bool,
    },
    /// Certify spider-nest identities.
    Nest {
        #[arg(long, value_enum, conflicts_with = "file")]
        family: Option<Family>,
        /// Inclusive range `a..b`.
        #[arg(long, default_value = "4..16")]
        n_range: String,
        /// Gadget phase for the munson family.
        #[arg(long, default_value = "1/4")]
        alpha: String,
        /// Symmetric coefficients Ŝ as JSON.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Read `--file` as gadget phases per weight instead of Ŝ.
        #[arg(long, requires = "file")]
        gadget_phases: bool,
        /// Cross-check with the enumeration oracle for n up to this.
        #[arg(long)]
        numeric_max: Option<usize>,
    },
    /// Synthesize an invertible F2 matrix as CNOTs.
    Synth {
        matrix: PathBuf,
        /// Replay the circuit and compare semantics.
        #[arg(long)]
        check: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Arrows,
    Spiders,
    Diagonal,
    Graph,
    Localcomp,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Transform {
    Walsh,
    Moebius,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    De2020fast,
    Munson,
}

/// Exit status paired with a message for stderr.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    fn check(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotInvertible => Failure::check(e.to_string()),
            _ => Failure::input(e.to_string()),
        }
    }
}

/// A report plus whether the checks it describes passed.
struct Outcome {
    report: Value,
    ok: bool,
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    serde_json::from_str(&read(path)?)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report serializes")
}

fn parse_range(s: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::input(format!("bad --n-range `{s}`, expected a..b"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn cmd_eval(diagram: &Path, expect: Option<&Path>, tol: f64) -> Result<Outcome, Failure> {
    let d = parse_diagram(&read(diagram)?)?;
    let m = eval_diagram(&d)?;
    let Some(expect) = expect else {
        return Ok(Outcome { report: to_value(&m), ok: true });
    };
    let want: ComplexMatrix = read_json(expect)?;
    let delta = m.max_abs_diff(&want)?;
    let ok = delta <= tol;
    if !ok {
        eprintln!("matrix differs from {} by {delta:e}", expect.display());
    }
    Ok(Outcome { report: to_value(&m), ok })
}

fn cmd_verify(suite: Suite, sizes: usize, seed: u64, tol: f64) -> Result<Outcome, Failure> {
    let name = match suite {
        Suite::Arrows => "arrows",
        Suite::Spiders => "spiders",
        Suite::Diagonal => "diagonal",
        Suite::Graph => "graph",
        Suite::Localcomp => "localcomp",
        Suite::All => "all",
    };
    let r = run_suite(name, sizes, seed, tol)?;
    for item in r.items.iter().filter(|i| !i.holds) {
        eprintln!("{} failed: max_delta {:e}", item.id, item.max_delta);
    }
    Ok(Outcome { ok: r.all_hold, report: to_value(&r) })
}

fn cmd_decompose(path: &Path, transform: Transform, roundtrip: bool) -> Result<Outcome, Failure> {
    let f: PhaseFunction = read_json(path)?;
    let d = match transform {
        Transform::Walsh => fourier_decompose(&f),
        Transform::Moebius => moebius_decompose(&f),
    };
    let mut report = to_value(&d);
    let mut ok = true;
    if roundtrip {
        ok = d.phasefn() == f;
        report["roundtrip"] = json!(ok);
        if !ok {
            eprintln!("terms do not rebuild the phase function");
        }
    }
    Ok(Outcome { report, ok })
}

fn nest_entry(s_hat: &SymmetricPhaseFunction, numeric_max: Option<usize>) -> Result<(Value, bool), Failure> {
    let r = nest_check(s_hat)?;
    let mut ok = r.is_identity;
    let mut v = to_value(&r);
    if let Some(max) = numeric_max {
        if r.n <= max.min(MAX_NUMERIC_QUBITS) {
            let numeric = nest_numeric(s_hat)?;
            v["numeric"] = json!(numeric);
            if numeric != r.is_identity {
                eprintln!("n = {}: oracle disagrees with inversion", r.n);
                ok = false;
            }
        }
    }
    if !r.is_identity {
        let residues: Vec<String> = r.residues.iter().map(rational::format).collect();
        eprintln!("n = {}: not an identity, residues [{}]", r.n, residues.join(", "));
    }
    Ok((v, ok))
}

#[allow(clippy::too_many_arguments)]
fn cmd_nest(
    family: Option<Family>,
    n_range: &str,
    alpha: &str,
    file: Option<&Path>,
    gadget_phases: bool,
    numeric_max: Option<usize>,
) -> Result<Outcome, Failure> {
    let mut reports = Vec::new();
    let mut ok = true;
    match (family, file) {
        (_, Some(path)) => {
            let mut s_hat: SymmetricPhaseFunction = read_json(path)?;
            if gadget_phases {
                s_hat = s_hat_from_gadget_phases(&s_hat);
            }
            let (v, good) = nest_entry(&s_hat, numeric_max)?;
            reports.push(v);
            ok &= good;
        }
        (Some(Family::De2020fast), None) => {
            let (a, b) = parse_range(n_range)?;
            for n in a..=b {
                let (v, good) = nest_entry(&family_de2020fast(n)?, numeric_max)?;
                reports.push(v);
                ok &= good;
            }
        }
        (Some(Family::Munson), None) => {
            let alpha = rational::parse(alpha)?;
            let (a, b) = parse_range(n_range)?;
            for n in a..=b {
                let r = munson_check(&alpha, n)?;
                if !r.is_identity {
                    eprintln!("n = {n}: munson identity fails");
                }
                ok &= r.is_identity;
                reports.push(to_value(&r));
            }
        }
        (None, None) => return Err(Failure::input("nest needs --family or --file")),
    }
    Ok(Outcome {
        report: json!({ "all_identity": ok, "reports": reports }),
        ok,
    })
}

/// Largest register for the tensor comparison in `synth --check`.
const SYNTH_TENSOR_MAX: usize = 10;

fn cmd_synth(path: &Path, check: bool, tol: f64) -> Result<Outcome, Failure> {
    let a: F2Matrix = read_json(path)?;
    let steps = cnot_synthesize(&a)?;
    if !check {
        return Ok(Outcome { report: to_value(&steps), ok: true });
    }
    let n = a.rows();
    let replayed = replay(n, &steps)? == a;
    let mut report = json!({ "steps": steps, "replay": replayed });
    let mut ok = replayed;
    if n <= SYNTH_TENSOR_MAX {
        let lhs = eval_diagram(&Diagram::red_arrow(&a))?;
        let rhs = eval_diagram(&cnot_circuit_diagram(n, &steps)?)?;
        let delta = lhs.max_abs_diff(&rhs)?;
        report["max_delta"] = json!(delta);
        ok &= delta <= tol;
    }
    if !ok {
        eprintln!("synthesized circuit does not reproduce the matrix");
    }
    Ok(Outcome { report, ok })
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Eval { diagram, expect } => cmd_eval(diagram, expect.as_deref(), cli.tol),
        Command::Verify { suite, sizes } => cmd_verify(*suite, *sizes, cli.seed, cli.tol),
        Command::Decompose { phasefn, transform, roundtrip } => {
            cmd_decompose(phasefn, *transform, *roundtrip)
        }
        Command::Nest { family, n_range, alpha, file, gadget_phases, numeric_max } => cmd_nest(
            *family,
            n_range,
            alpha,
            file.as_deref(),
            *gadget_phases,
            *numeric_max,
        ),
        Command::Synth { matrix, check } => cmd_synth(matrix, *check, cli.tol),
    }
}

fn emit(cli: &Cli, report: &Value) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(report).expect("report serializes") + "\n";
    match &cli.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::input(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|o| emit(&cli, &o.report).map(|_| o.ok));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("szx: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
