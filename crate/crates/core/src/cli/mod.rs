//! The `planepart` command line: exact tables, trace-class counts, the two
//! special angles, oscillation data, asymptotic comparisons and circle-method
//! diagnostics, written as CSV or JSON.

mod output;

use std::f64::consts::{PI, TAU};
use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;

use crate::asymptotics::{
    over_main_term, oscillation_model, ratio_report, trace_main_term, wright_pp_main_term,
};
use crate::circle_diag::{
    farey, saddle_deviation, lattice_check, loglog_slope, major_arc_quadrature, SaddleCase,
    LATTICE_GRID,
};
use crate::error::{invalid, Error, Result};
use crate::exact_qseries::{
    build_over_table, build_trace_table, difference_series, eval_trace_c64, residue_counts_direct,
    RootOfUnity,
};
use crate::polylog_unit::{solve_theta1, solve_theta12, PrecisionSpec};

pub use output::{write_table, Cell, Format, RealFormat, Table};

#[derive(Debug, Parser)]
#[command(name = "planepart", version, about = "Plane partitions by trace: exact tables and asymptotics")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "csv")]
    pub format: Format,

    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Working precision in bits (at least 53).
    #[arg(long, global = true, default_value_t = 128)]
    pub precision: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// pp(n) for 0 <= n <= max-n.
    Table {
        #[arg(long, default_value_t = 50)]
        max_n: usize,
    },
    /// pp(a, b, n): counts with trace congruent to a modulo b.
    Residue {
        #[arg(long)]
        b: u64,
        #[arg(long, default_value_t = 50)]
        max_n: usize,
    },
    /// The transition angle θ₁₂ or the overpartition angle θ₁.
    Theta {
        #[arg(value_enum)]
        which: Angle,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Exact trace-class differences against the cosine model.
    Figure2 {
        #[arg(long, default_value_t = 1)]
        a1: u64,
        #[arg(long, default_value_t = 4)]
        a2: u64,
        #[arg(long, default_value_t = 5)]
        b: u64,
        #[arg(long, default_value_t = 1)]
        n_lo: usize,
        #[arg(long, default_value_t = 400)]
        n_hi: usize,
    },
    /// Exact values divided by the main term on a doubling grid of n.
    Asymptotic {
        #[arg(long, value_enum)]
        kind: Kind,
        #[command(flatten)]
        root: RootArgs,
        #[arg(long, default_value_t = 50)]
        n_lo: u64,
        #[arg(long, default_value_t = 400)]
        n_hi: u64,
    },
    /// Circle-method diagnostics.
    Diag {
        #[command(subcommand)]
        which: Diag,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Angle {
    Theta12,
    Theta1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// T_n(ζ) for ζ = e^{2πi a/b}.
    Trace,
    /// pp(n) against Wright's formula.
    Wright,
    /// Plane overpartitions weighted by ζ.
    Over,
    /// Plane overpartitions at ζ = -1.
    Overpp,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct RootArgs {
    #[arg(long, default_value_t = 1)]
    pub a: i64,
    #[arg(long, default_value_t = 5)]
    pub b: u64,
}

impl RootArgs {
    fn root(self) -> Result<RootOfUnity> {
        RootOfUnity::new(self.a, self.b)
    }
}

#[derive(Debug, Subcommand)]
pub enum Diag {
    /// E_{h,k} at t_n on the dominant arc against its limit, for n = n-lo, 10 n-lo, ... <= n-hi.
    Lemma41 {
        #[arg(long, default_value_t = 1)]
        case: u8,
        /// Defaults to 1/3, 0/1, 12/25, 1/2 for cases 1 to 4.
        #[arg(long)]
        a: Option<i64>,
        #[arg(long)]
        b: Option<u64>,
        #[arg(long, default_value_t = 1000)]
        n_lo: u64,
        #[arg(long, default_value_t = 100_000)]
        n_hi: u64,
    },
    /// The lattice-sum rewrite of E_{h,k} on the built-in grid of twenty cases.
    Lemma42 {
        /// Target for the truncated tail.
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Farey arcs of the given order.
    Farey {
        #[arg(long, default_value_t = 5)]
        order: i64,
    },
    /// Quadrature over the dominant arc against the exact value and the main term.
    Arc {
        #[command(flatten)]
        root: RootArgs,
        #[arg(long, default_value_t = 200)]
        n: u64,
        /// Farey order; defaults to max(2, ⌊n^{1/3}⌋).
        #[arg(long)]
        order: Option<i64>,
    },
}

/// Parses `args`, runs the command and returns the process exit code:
/// 0 on success, 2 for usage errors, 3 for resource or precision failures.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidInput(_) => 2,
        Error::Resource(_) | Error::Precision(_) | Error::Bracket { .. } => 3,
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Table { .. } => "table",
        Command::Residue { .. } => "residue",
        Command::Theta { .. } => "theta",
        Command::Figure2 { .. } => "figure2",
        Command::Asymptotic { .. } => "asymptotic",
        Command::Diag { which } => match which {
            Diag::Lemma41 { .. } => "diag lemma41",
            Diag::Lemma42 { .. } => "diag lemma42",
            Diag::Farey { .. } => "diag farey",
            Diag::Arc { .. } => "diag arc",
        },
    }
}

fn execute(cli: &Cli) -> Result<()> {
    if cli.precision < 53 {
        return Err(invalid(format!("precision must be at least 53 bits, got {}", cli.precision)));
    }
    let table = build(&cli.command, cli.precision)?;
    let rf = RealFormat::from_bits(cli.precision);
    let name = command_name(&cli.command);
    match &cli.out {
        Some(path) => {
            let f = File::create(path).map_err(|e| Error::Resource(format!("{}: {e}", path.display())))?;
            let mut w = BufWriter::new(f);
            write_table(&table, name, cli.format, rf, &mut w)?;
            w.flush().map_err(|e| Error::Resource(e.to_string()))
        }
        None => {
            let stdout = io::stdout();
            let mut w = stdout.lock();
            write_table(&table, name, cli.format, rf, &mut w)
        }
    }
}

fn precision_spec(bits: u32) -> PrecisionSpec {
    PrecisionSpec::new((-(bits as f64)).exp2().max(1e-15)).expect("positive")
}

/// Runs one command and returns its table.
pub fn build(command: &Command, bits: u32) -> Result<Table> {
    let p = precision_spec(bits);
    match *command {
        Command::Table { max_n } => {
            let t = build_trace_table(max_n)?;
            let mut out = Table::new(&["n", "pp"]);
            for n in 0..=max_n {
                out.push(vec![Cell::exact(n), Cell::exact(t.pp(n)?)]);
            }
            Ok(out)
        }
        Command::Residue { b, max_n } => {
            if b == 0 {
                return Err(invalid("b must be positive"));
            }
            let counts = residue_counts_direct(&build_trace_table(max_n)?, b)?;
            let mut cols = vec!["n".to_string()];
            cols.extend((0..b).map(|a| format!("pp_{a}")));
            let mut out = Table { notes: Vec::new(), columns: cols, rows: Vec::new() };
            for n in 0..=max_n {
                let mut row = vec![Cell::exact(n)];
                row.extend(counts.row(n).iter().map(Cell::exact));
                out.push(row);
            }
            Ok(out)
        }
        Command::Theta { which, tol } => {
            let spec = PrecisionSpec::new(tol)?;
            let (name, value) = match which {
                Angle::Theta12 => ("theta12", solve_theta12(spec)?),
                Angle::Theta1 => ("theta1", solve_theta1(spec)?),
            };
            let digits = ((-tol.log10()).ceil() as usize + 1).clamp(1, RealFormat::from_bits(bits).digits);
            let mut out = Table::new(&["which", "value", "tol"]);
            out.push(vec![
                Cell::Text(name.into()),
                Cell::Text(RealFormat { digits }.fmt(value)),
                Cell::Real(tol),
            ]);
            Ok(out)
        }
        Command::Figure2 { a1, a2, b, n_lo, n_hi } => figure2(a1, a2, b, n_lo, n_hi, p),
        Command::Asymptotic { kind, root, n_lo, n_hi } => asymptotic(kind, root, n_lo, n_hi, p),
        Command::Diag { ref which } => diag(which, p),
    }
}

fn six(x: f64) -> Cell {
    Cell::Text(format!("{x:.5e}"))
}

fn figure2(a1: u64, a2: u64, b: u64, n_lo: usize, n_hi: usize, p: PrecisionSpec) -> Result<Table> {
    let m = oscillation_model(a1, a2, b, p)?;
    if n_lo == 0 || n_lo > n_hi {
        return Err(invalid(format!("need 1 <= n-lo <= n-hi, got {n_lo} and {n_hi}")));
    }
    let t = build_trace_table(n_hi)?;
    let diffs = difference_series(&t, a1, a2, b, n_lo..=n_hi)?;
    let alpha = if m.alpha > PI { m.alpha - TAU } else { m.alpha };
    let mut out = Table::new(&["n", "exact_diff", "normalized", "cos_prediction"]);
    out.note("B", six(m.big_b));
    out.note("alpha", six(alpha));
    out.note("lambda1", six(m.lambda1));
    out.note("lambda2", six(m.lambda2));
    for (i, d) in diffs.iter().enumerate() {
        let n = (n_lo + i) as u64;
        let normalized = d.to_f64().unwrap_or(f64::NAN) / m.envelope(n, -2.0 / 3.0);
        out.push(vec![Cell::exact(n), Cell::exact(d), Cell::Real(normalized), Cell::Real(m.cosine(n))]);
    }
    Ok(out)
}

/// `n_lo, 2 n_lo, 4 n_lo, ...` up to `n_hi`, ending at `n_hi`.
fn doubling_grid(n_lo: u64, n_hi: u64) -> Result<Vec<u64>> {
    if n_lo == 0 || n_lo > n_hi {
        return Err(invalid(format!("need 1 <= n-lo <= n-hi, got {n_lo} and {n_hi}")));
    }
    let mut grid = Vec::new();
    let mut n = n_lo;
    while n < n_hi {
        grid.push(n);
        n *= 2;
    }
    grid.push(n_hi);
    Ok(grid)
}

fn asymptotic(kind: Kind, root: RootArgs, n_lo: u64, n_hi: u64, p: PrecisionSpec) -> Result<Table> {
    let grid = doubling_grid(n_lo, n_hi)?;
    let max_n = usize::try_from(n_hi).map_err(|_| invalid("n-hi is too large"))?;
    let (z, rows) = match kind {
        Kind::Trace => {
            let z = root.root()?;
            let est = trace_main_term(z, p)?;
            (z, ratio_report(&build_trace_table(max_n)?, z, &est, &grid)?)
        }
        Kind::Wright => {
            let z = RootOfUnity::ONE;
            (z, ratio_report(&build_trace_table(max_n)?, z, &wright_pp_main_term(), &grid)?)
        }
        Kind::Over | Kind::Overpp => {
            let z = if kind == Kind::Over { root.root()? } else { RootOfUnity::MINUS_ONE };
            let est = over_main_term(z, p)?;
            (z, ratio_report(&build_over_table(max_n)?, z, &est, &grid)?)
        }
    };
    let mut out = Table::new(&["n", "ratio_re", "ratio_im", "deviation"]);
    out.note("zeta", Cell::exact(z));
    for r in rows {
        out.push(vec![Cell::exact(r.n), Cell::Real(r.ratio.re), Cell::Real(r.ratio.im), Cell::Real(r.deviation)]);
    }
    Ok(out)
}

fn diag(which: &Diag, p: PrecisionSpec) -> Result<Table> {
    match *which {
        Diag::Lemma41 { case, a, b, n_lo, n_hi } => {
            let case = SaddleCase::from_number(case)?;
            let (da, db) = match case {
                SaddleCase::Primary => (1, 3),
                SaddleCase::One => (0, 1),
                SaddleCase::Doubled => (12, 25),
                SaddleCase::MinusOne => (1, 2),
            };
            let z = RootOfUnity::new(a.unwrap_or(da), b.unwrap_or(db))?;
            if n_lo == 0 || n_lo > n_hi {
                return Err(invalid(format!("need 1 <= n-lo <= n-hi, got {n_lo} and {n_hi}")));
            }
            let mut rows = Vec::new();
            let mut n = n_lo;
            while n <= n_hi {
                rows.push(saddle_deviation(case, z, n, 0.0, p)?);
                n = n.saturating_mul(10);
            }
            let mut out = Table::new(&[
                "n", "t_re", "t_im", "e_re", "e_im", "limit_re", "limit_im", "deviation", "err_bound",
            ]);
            out.note("case", Cell::exact(case.number()));
            out.note("zeta", Cell::exact(z));
            if rows.len() >= 2 {
                out.note("loglog_slope", Cell::Real(loglog_slope(&rows)));
            }
            for r in rows {
                out.push(vec![
                    Cell::exact(r.n),
                    Cell::Real(r.t.re),
                    Cell::Real(r.t.im),
                    Cell::Real(r.value.re),
                    Cell::Real(r.value.im),
                    Cell::Real(r.limit.re),
                    Cell::Real(r.limit.im),
                    Cell::Real(r.deviation),
                    Cell::Real(r.err),
                ]);
            }
            Ok(out)
        }
        Diag::Lemma42 { tol } => {
            if !(tol > 0.0) {
                return Err(invalid(format!("tol must be positive, got {tol}")));
            }
            let mut out = Table::new(&["a", "b", "h", "k", "t_re", "t_im", "truncation", "residual"]);
            let mut worst: f64 = 0.0;
            for c in &LATTICE_GRID {
                let (l, r) = lattice_check(c, tol, p)?;
                worst = worst.max(r);
                out.push(vec![
                    Cell::exact(c.a),
                    Cell::exact(c.b),
                    Cell::exact(c.h),
                    Cell::exact(c.k),
                    Cell::Real(c.t.re),
                    Cell::Real(c.t.im),
                    Cell::exact(l),
                    Cell::Real(r),
                ]);
            }
            out.note("max_residual", Cell::Real(worst));
            Ok(out)
        }
        Diag::Farey { order } => {
            let mut out = Table::new(&["h", "k", "theta_lo", "theta_hi"]);
            for arc in farey(order)? {
                out.push(vec![
                    Cell::exact(arc.h),
                    Cell::exact(arc.k),
                    Cell::exact(arc.theta_lo),
                    Cell::exact(arc.theta_hi),
                ]);
            }
            Ok(out)
        }
        Diag::Arc { root, n, order } => {
            let z = root.root()?;
            let order = order.unwrap_or_else(|| ((n as f64).cbrt().floor() as i64).max(2));
            let q = major_arc_quadrature(z, n, order, p)?;
            let max_n = usize::try_from(n).map_err(|_| invalid("n is too large"))?;
            let t = build_trace_table(max_n)?;
            let exact = eval_trace_c64(&t, max_n, z)?;
            let main = if z.is_one() { wright_pp_main_term() } else { trace_main_term(z, p)? }.eval(n);
            let mut out = Table::new(&[
                "n", "h", "k", "order", "quad_re", "quad_im", "quad_err", "main_re", "main_im", "exact_re",
                "exact_im",
            ]);
            out.note("zeta", Cell::exact(z));
            out.push(vec![
                Cell::exact(n),
                Cell::exact(q.h),
                Cell::exact(q.k),
                Cell::exact(order),
                Cell::Real(q.value.re),
                Cell::Real(q.value.im),
                Cell::Real(q.abs_err),
                Cell::Real(main.re),
                Cell::Real(main.im),
                Cell::Real(exact.re),
                Cell::Real(exact.im),
            ]);
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids() {
        assert_eq!(doubling_grid(50, 400).unwrap(), vec![50, 100, 200, 400]);
        assert_eq!(doubling_grid(30, 100).unwrap(), vec![30, 60, 100]);
        assert_eq!(doubling_grid(7, 7).unwrap(), vec![7]);
        assert!(doubling_grid(0, 5).is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(["planepart", "table", "--max-n", "2", "--out", "/dev/null"]), 0);
        assert_eq!(run(["planepart", "table", "--max-n", "x"]), 2);
        assert_eq!(run(["planepart", "figure2", "--a1", "0", "--a2", "1", "--b", "2"]), 2);
        assert_eq!(run(["planepart", "theta", "theta12", "--tol", "0"]), 2);
        assert_eq!(run(["planepart", "table", "--precision", "40"]), 2);
        assert_eq!(run(["planepart", "table", "--max-n", "100000"]), 3);
    }
}
