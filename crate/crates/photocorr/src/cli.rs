//! Batch command-line front end: emits the defect/correlation tables,
//! sum-rule verification reports, cross-section corrections, screening
//! factors, and mechanism classifications in table or CSV form.

use crate::atomdata::{load_dataset, AtomRecord};
use crate::error::Result;
use crate::hydrogenic::x_ratio_coulomb;
use crate::observables::{
    amplitude_correction_factor, classify_mechanism, cross_section_factor, MechanismClass,
};
use crate::quantum_defect::defect_from_normalization;
use crate::screening::{eta, EffectiveCharges, DELTA_1S, DELTA_2P, DELTA_2S};
use crate::sumrules::{verify_cancellation, verify_closure};
use clap::{Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::path::PathBuf;

/// Direct-summation reference values x_dir, keyed by (Z, n); the remaining
/// dataset rows have no reference and print a dash.
const X_DIR_REFERENCE: [(u32, u32, f64); 3] = [(7, 2, -0.18), (10, 2, -0.11), (18, 3, -0.14)];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RuleArg {
    Closure,
    Cancellation,
}

#[derive(Debug, Parser)]
#[command(
    name = "photocorr",
    about = "Correlation corrections to high-energy photoionization of atomic p states",
    version
)]
pub struct Cli {
    /// Dataset file (default: PHOTOCORR_DATA env var, then the bundled set).
    #[arg(long, global = true)]
    pub data: Option<PathBuf>,

    /// Restrict to these nuclear charges (comma separated, e.g. --z 10,18).
    #[arg(long, global = true, value_delimiter = ',')]
    pub z: Vec<f64>,

    /// Restrict to this principal quantum number of the ionized p state.
    #[arg(long, global = true)]
    pub n: Option<u32>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,

    /// Exit with code 1 if any reference comparison misses its tolerance.
    #[arg(long, global = true)]
    pub strict: bool,

    /// Tolerance for comparisons against reference correlation factors.
    #[arg(long, global = true, default_value_t = 0.05)]
    pub tol_x: f64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Quantum defects: recomputed from normalizations vs bundled values.
    Table1,
    /// Correlation breakdown (x_d, x_c, x_ph) per atom and np state.
    Table2,
    /// Pure-Coulomb correlation factors x_{n's,np} for np = 2p, 3p.
    Table3 {
        /// Highest n' row to print.
        #[arg(long, default_value_t = 8)]
        n_prime_max: u32,
    },
    /// Numerically verify a sum rule for a hydrogenic np state.
    Verify {
        #[arg(long, value_enum)]
        rule: RuleArg,
        /// Discrete sum cutoff before the n'^-3 tail extrapolation.
        #[arg(long, default_value_t = 30)]
        n_max: u32,
        /// Continuum cutoff in units of Z^2 hartree.
        #[arg(long, default_value_t = 60.0)]
        eps_max: f64,
    },
    /// Cross-section and amplitude correction factors per atom.
    Xsec {
        /// Keep only the intra-shell ns term (x = 1) instead of the full x_ph.
        #[arg(long)]
        intra_shell_only: bool,
    },
    /// Screening suppression of the 1s correlation term.
    Screening {
        /// Use this eta instead of computing it from the screening constants.
        #[arg(long)]
        eta_override: Option<f64>,
        #[arg(long, default_value_t = DELTA_1S)]
        delta_1s: f64,
        #[arg(long, default_value_t = DELTA_2S)]
        delta_2s: f64,
        #[arg(long, default_value_t = DELTA_2P)]
        delta_2p: f64,
    },
    /// Classify which ionization-excitation mechanism dominates.
    Mechanism {
        /// Orbital angular momentum of the first removed electron.
        #[arg(long)]
        l: u32,
        /// Orbital angular momentum of the second removed electron.
        #[arg(long)]
        l_prime: u32,
        /// Orbital angular momentum of the excited final-state electron.
        #[arg(long)]
        l_star: u32,
    },
}

/// One output table: header plus rows of pre-formatted cells.
struct Report {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Report {
    fn emit(&self, format: OutputFormat, out: &mut dyn Write) -> std::io::Result<()> {
        match format {
            OutputFormat::Csv => {
                writeln!(out, "{}", self.header.join(","))?;
                for row in &self.rows {
                    writeln!(out, "{}", row.join(","))?;
                }
            }
            OutputFormat::Table => {
                let cols = self.header.len();
                let mut widths: Vec<usize> = self.header.iter().map(|h| h.len()).collect();
                for row in &self.rows {
                    for i in 0..cols {
                        widths[i] = widths[i].max(row.get(i).map_or(0, String::len));
                    }
                }
                let line = |cells: Vec<&str>, out: &mut dyn Write| -> std::io::Result<()> {
                    let mut parts = Vec::with_capacity(cols);
                    for (i, c) in cells.iter().enumerate() {
                        parts.push(format!("{c:>width$}", width = widths[i]));
                    }
                    writeln!(out, "{}", parts.join("  "))
                };
                line(self.header.to_vec(), out)?;
                for row in &self.rows {
                    line(row.iter().map(String::as_str).collect(), out)?;
                }
            }
        }
        Ok(())
    }
}

fn select<'a>(atoms: &'a [AtomRecord], zs: &[f64]) -> Vec<&'a AtomRecord> {
    atoms
        .iter()
        .filter(|a| zs.is_empty() || zs.iter().any(|&z| (a.z - z).abs() < 1e-9))
        .collect()
}

fn fmt2(v: f64) -> String {
    format!("{v:.2}")
}

fn cmd_table1(atoms: &[&AtomRecord]) -> Result<(Report, bool)> {
    let mut rows = Vec::new();
    let mut all_ok = true;
    for a in atoms {
        let (recomputed, flag) = match a.n_h().and_then(|n_h| a.norm_sq_s.get(&n_h).map(|v| (n_h, *v))) {
            Some((n_h, n2)) => {
                let dh = defect_from_normalization(n2, a.z, n_h)?;
                let ok = (dh - a.delta_h).abs() <= 0.02;
                all_ok &= ok;
                (fmt2(dh), if ok { "ok" } else { "MISMATCH" })
            }
            None => ("n/a".into(), "n/a"),
        };
        rows.push(vec![
            format!("{}", a.z),
            a.symbol.clone(),
            recomputed,
            fmt2(a.delta_h),
            fmt2(a.delta_inf),
            flag.to_string(),
        ]);
    }
    Ok((
        Report {
            header: vec!["Z", "symbol", "delta_h_from_norm", "delta_h", "delta_inf", "flag"],
            rows,
        },
        all_ok,
    ))
}

fn cmd_table2(atoms: &[&AtomRecord], n_filter: Option<u32>, tol_x: f64) -> Result<(Report, bool)> {
    let mut rows = Vec::new();
    let mut all_ok = true;
    for a in atoms {
        for n in a.p_state_ns() {
            if n_filter.is_some_and(|want| want != n) {
                continue;
            }
            let b = a.breakdown(n)?;
            let x_dir = X_DIR_REFERENCE
                .iter()
                .find(|(z, m, _)| *z as f64 == a.z && *m == n)
                .map(|(_, _, v)| *v);
            let (dir_cell, ok) = match x_dir {
                Some(v) => (fmt2(v), (b.x_ph - v).abs() <= tol_x),
                None => ("-".into(), true),
            };
            all_ok &= ok;
            rows.push(vec![
                format!("{}", a.z),
                format!("{n}"),
                fmt2(b.x_d),
                fmt2(b.x_c),
                fmt2(b.x_ph),
                dir_cell,
            ]);
        }
    }
    Ok((
        Report {
            header: vec!["Z", "n", "x_d", "x_c", "x_ph", "x_dir"],
            rows,
        },
        all_ok,
    ))
}

fn cmd_table3(n_prime_max: u32) -> Result<(Report, bool)> {
    let mut rows = Vec::new();
    for n_prime in 1..=n_prime_max.max(4) {
        let x2 = x_ratio_coulomb(n_prime, 2)?;
        let x3 = x_ratio_coulomb(n_prime, 3)?;
        rows.push(vec![format!("{n_prime}"), format!("{x2:.4}"), format!("{x3:.4}")]);
    }
    Ok((
        Report {
            header: vec!["n_prime", "x_2p", "x_3p"],
            rows,
        },
        true,
    ))
}

fn cmd_verify(rule: RuleArg, z: f64, n: u32, n_max: u32, eps_max: f64) -> Result<(Report, bool)> {
    let report = match rule {
        RuleArg::Closure => verify_closure(z, n, n_max, eps_max)?,
        RuleArg::Cancellation => verify_cancellation(z, n, n_max, eps_max)?,
    };
    let (name, tol) = match rule {
        RuleArg::Closure => ("closure", 1e-3),
        RuleArg::Cancellation => ("cancellation", 0.02),
    };
    let ok = report.residual < tol;
    let rows = vec![vec![
        name.to_string(),
        format!("{z}"),
        format!("{n}"),
        format!("{n_max}"),
        format!("{eps_max}"),
        format!("{:.6}", report.bound_sum),
        format!("{:.6}", report.continuum_integral.value),
        format!("{:.2e}", report.residual),
        if ok { "ok" } else { "EXCEEDS" }.to_string(),
    ]];
    Ok((
        Report {
            header: vec![
                "rule", "Z", "n", "n_max", "eps_max", "bound_sum", "continuum", "residual", "flag",
            ],
            rows,
        },
        ok,
    ))
}

fn cmd_xsec(atoms: &[&AtomRecord], n_filter: Option<u32>, intra_only: bool) -> Result<(Report, bool)> {
    let mut rows = Vec::new();
    for a in atoms {
        for n in a.p_state_ns() {
            if n_filter.is_some_and(|want| want != n) {
                continue;
            }
            let Some(&ratio) = a.norm_ratio.get(&n) else {
                rows.push(vec![
                    format!("{}", a.z),
                    format!("{n}"),
                    "n/a".into(),
                    "n/a".into(),
                    "n/a".into(),
                    "n/a".into(),
                    "n/a".into(),
                ]);
                continue;
            };
            let x = if intra_only { 1.0 } else { a.breakdown(n)?.x_ph };
            let amp = amplitude_correction_factor(ratio, 1.0, x)?;
            let xsec = cross_section_factor(ratio, 1.0, x)?;
            rows.push(vec![
                format!("{}", a.z),
                format!("{n}"),
                fmt2(ratio),
                format!("{x:.3}"),
                format!("{amp:.4}"),
                format!("{xsec:.4}"),
                format!("{:+.1}%", (xsec - 1.0) * 100.0),
            ]);
        }
    }
    Ok((
        Report {
            header: vec!["Z", "n", "norm_ratio", "x", "amp_factor", "xsec_factor", "change"],
            rows,
        },
        true,
    ))
}

fn cmd_screening(
    zs: &[f64],
    eta_override: Option<f64>,
    d1s: f64,
    d2s: f64,
    d2p: f64,
) -> Result<(Report, bool)> {
    let charges = if zs.is_empty() { vec![10.0] } else { zs.to_vec() };
    let x1s = x_ratio_coulomb(1, 2)?;
    let mut rows = Vec::new();
    for z in charges {
        let eta_val = match eta_override {
            Some(v) => v,
            None => eta(&EffectiveCharges::new(z, z - d1s, z - d2s, z - d2p)?)?,
        };
        let x_ph = crate::screening::x_ph_two_term(x1s, eta_val);
        rows.push(vec![
            format!("{z}"),
            format!("{x1s:.4}"),
            format!("{eta_val:.4}"),
            format!("{x_ph:.4}"),
        ]);
    }
    Ok((
        Report {
            header: vec!["Z", "x_1s_coulomb", "eta", "x_ph_two_term"],
            rows,
        },
        true,
    ))
}

fn mechanism_name(class: MechanismClass) -> &'static str {
    match class {
        MechanismClass::CorrelationOnly => "correlation-only",
        MechanismClass::CorrelationDominates => "correlation-dominates",
        MechanismClass::InterplayOverlapSmall => "interplay-overlap-small",
        MechanismClass::ShakeupDominates => "shakeup-dominates",
    }
}

fn cmd_mechanism(l: u32, l_prime: u32, l_star: u32) -> Result<(Report, bool)> {
    let class = classify_mechanism(l, l_prime, l_star);
    Ok((
        Report {
            header: vec!["l", "l_prime", "l_star", "class"],
            rows: vec![vec![
                format!("{l}"),
                format!("{l_prime}"),
                format!("{l_star}"),
                mechanism_name(class).to_string(),
            ]],
        },
        true,
    ))
}

/// Run one parsed invocation, writing the report to `out`.
/// Returns whether every reference comparison passed.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<bool> {
    let needs_data = matches!(
        cli.command,
        Command::Table1 | Command::Table2 | Command::Xsec { .. }
    );
    let atoms = if needs_data {
        load_dataset(cli.data.as_deref())?
    } else {
        Vec::new()
    };
    let selected = select(&atoms, &cli.z);
    let (report, ok) = match &cli.command {
        Command::Table1 => cmd_table1(&selected)?,
        Command::Table2 => cmd_table2(&selected, cli.n, cli.tol_x)?,
        Command::Table3 { n_prime_max } => cmd_table3(*n_prime_max)?,
        Command::Verify { rule, n_max, eps_max } => {
            let z = cli.z.first().copied().unwrap_or(1.0);
            let n = cli.n.unwrap_or(2);
            cmd_verify(*rule, z, n, *n_max, *eps_max)?
        }
        Command::Xsec { intra_shell_only } => cmd_xsec(&selected, cli.n, *intra_shell_only)?,
        Command::Screening {
            eta_override,
            delta_1s,
            delta_2s,
            delta_2p,
        } => cmd_screening(&cli.z, *eta_override, *delta_1s, *delta_2s, *delta_2p)?,
        Command::Mechanism { l, l_prime, l_star } => cmd_mechanism(*l, *l_prime, *l_star)?,
    };
    report.emit(cli.format, out)?;
    Ok(ok)
}

/// Parse arguments, run, and map the outcome to the process exit code:
/// 0 ok, 1 reference comparison out of tolerance in strict mode,
/// 2 usage or data error.
pub fn main_entry<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints --help/--version through this path too; those are
            // not errors.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let stdout = std::io::stdout();
    match run(&cli, &mut stdout.lock()) {
        Ok(true) => 0,
        Ok(false) => {
            if cli.strict {
                eprintln!("photocorr: reference comparison outside tolerance");
                1
            } else {
                0
            }
        }
        Err(e) => {
            eprintln!("photocorr: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (String, bool) {
        let cli = Cli::try_parse_from(args).expect("args parse");
        let mut buf = Vec::new();
        let ok = run(&cli, &mut buf).expect("run");
        (String::from_utf8(buf).unwrap(), ok)
    }

    #[test]
    fn table1_rows_and_flags() {
        let (out, ok) = run_capture(&["photocorr", "table1", "--format", "csv"]);
        assert!(ok);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "Z,symbol,delta_h_from_norm,delta_h,delta_inf,flag");
        assert_eq!(lines.len(), 9);
        let ne = lines.iter().find(|l| l.starts_with("10,Ne")).unwrap();
        assert!(ne.contains("1.44") && ne.contains("1.27") && ne.ends_with("ok"), "{ne}");
    }

    #[test]
    fn table1_empty_selection_is_header_only() {
        let (out, ok) = run_capture(&["photocorr", "table1", "--z", "99", "--format", "csv"]);
        assert!(ok);
        assert_eq!(out.lines().count(), 1);
    }

    #[test]
    fn table2_reference_rows() {
        let (out, ok) = run_capture(&["photocorr", "table2", "--format", "csv"]);
        assert!(ok, "x_dir comparisons within tolerance");
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 13);
        assert!(lines.contains(&"10,2,0.04,0.07,-0.11,-0.11"), "{out}");
        assert!(lines.contains(&"50,5,0.06,0.13,-0.19,-"), "{out}");
    }

    #[test]
    fn table2_n_filter() {
        let (out, _) = run_capture(&["photocorr", "table2", "--n", "3", "--format", "csv"]);
        assert_eq!(out.lines().count(), 5); // header + Si, Ar, Ge, Kr
    }

    #[test]
    fn verify_closure_report() {
        let (out, ok) = run_capture(&[
            "photocorr", "verify", "--rule", "closure", "--n-max", "20", "--eps-max", "20",
            "--format", "csv",
        ]);
        assert!(ok);
        assert!(out.lines().nth(1).unwrap().ends_with("ok"), "{out}");
    }

    #[test]
    fn xsec_quoted_percentages() {
        let (full, _) = run_capture(&["photocorr", "xsec", "--format", "csv"]);
        let ne = full.lines().find(|l| l.starts_with("10,2")).unwrap();
        assert!(ne.ends_with("-2.4%") || ne.ends_with("-2.5%"), "{ne}");
        let ar = full.lines().find(|l| l.starts_with("18,3")).unwrap();
        assert!(ar.ends_with("-1.8%"), "{ar}");
        let (intra, _) = run_capture(&["photocorr", "xsec", "--intra-shell-only", "--format", "csv"]);
        let ne = intra.lines().find(|l| l.starts_with("10,2")).unwrap();
        assert!(ne.ends_with("+22.0%"), "{ne}");
        let n_row = intra.lines().find(|l| l.starts_with("7,2")).unwrap();
        assert!(n_row.ends_with("+18.0%"), "{n_row}");
        let ar = intra.lines().find(|l| l.starts_with("18,3")).unwrap();
        assert!(ar.ends_with("+12.0%"), "{ar}");
    }

    #[test]
    fn screening_defaults_and_override() {
        let (out, _) = run_capture(&["photocorr", "screening", "--z", "10", "--format", "csv"]);
        let row = out.lines().nth(1).unwrap();
        let cells: Vec<&str> = row.split(',').collect();
        let eta_val: f64 = cells[2].parse().unwrap();
        let x_ph: f64 = cells[3].parse().unwrap();
        assert!((eta_val - 0.676).abs() < 1e-3);
        assert!((x_ph + 0.068).abs() < 2e-3);
        let (out, _) = run_capture(&[
            "photocorr", "screening", "--z", "10", "--eta-override", "0.702", "--format", "csv",
        ]);
        let x_ph: f64 = out.lines().nth(1).unwrap().split(',').last().unwrap().parse().unwrap();
        assert!((x_ph + 0.11).abs() < 5e-3);
    }

    #[test]
    fn mechanism_report() {
        let (out, _) = run_capture(&[
            "photocorr", "mechanism", "--l", "1", "--l-prime", "0", "--l-star", "2", "--format",
            "csv",
        ]);
        assert!(out.ends_with("correlation-only\n"), "{out}");
    }

    #[test]
    fn csv_deterministic() {
        let (a, _) = run_capture(&["photocorr", "table2", "--format", "csv"]);
        let (b, _) = run_capture(&["photocorr", "table2", "--format", "csv"]);
        assert_eq!(a, b);
    }

    #[test]
    fn bad_rule_is_usage_error() {
        assert!(Cli::try_parse_from(["photocorr", "verify", "--rule", "nonsense"]).is_err());
    }
}
