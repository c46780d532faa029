//! Command-line surface for the finite-well spectral library: spectrum
//! tables, h-sweeps reproducing the eigenvalue-curve figures, first-order
//! expansion fits, splitting analysis, quasimode experiments, and the
//! self-verification suite.

pub mod modes;
mod output;
mod verify;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use finwell_core::asymptotics::{
    build_quasimode, first_order_coefficient, splitting_matrix,
};
use finwell_core::dirichlet::dirichlet_eigenvalue;
use finwell_core::domain::{Mode, Parity, Sector, WellDomain, WellParams};
use finwell_core::oracle::{fd_line_spectrum, fd_radial_spectrum};
use finwell_core::secular::{solve_mode, solve_spectrum};
use finwell_core::Error as CoreError;

use modes::{leading_modes, ModeInfo};
use output::{write_output, CsvTable, JsonRows};

/// Run the CLI against the process arguments, returning the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(CliError::Config(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

/// CLI-level error split matching the exit-code contract: configuration
/// problems exit 2, computational/check failures exit 1.
#[derive(Debug)]
pub enum CliError {
    Config(String),
    Failure(String),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Config(m) => CliError::Config(m),
            CoreError::Domain(m) => CliError::Config(m),
            CoreError::Solver(m) => CliError::Failure(m),
            CoreError::Degenerate(m) => CliError::Failure(m),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Parser)]
#[command(
    name = "finwell",
    version,
    about = "Spectra and eigenvalue asymptotics of finite-depth well operators"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the discrete spectrum at a single well depth.
    Spectrum(SpectrumArgs),
    /// Sweep h and emit eigenvalue-curve rows (figure data).
    Sweep(SweepArgs),
    /// Fit the first-order eigenvalue expansion of a simple mode.
    Expand(ExpandArgs),
    /// Analyze the splitting matrix of a degenerate disk eigenspace.
    Split(SplitArgs),
    /// Build quasimodes and certify their residuals against the spectrum.
    Quasimode(QuasimodeArgs),
    /// Run the self-verification suite (PASS/FAIL per check).
    Verify(VerifyArgs),
}

#[derive(Args, Clone)]
struct DomainOpts {
    /// Well geometry.
    #[arg(long, value_enum, default_value_t = DomainKind::Interval)]
    domain: DomainKind,
    /// Radius a of the interval or ball.
    #[arg(long, default_value_t = 2.0)]
    radius: f64,
    /// Ambient dimension d (balls only).
    #[arg(long, default_value_t = 2)]
    dim: u32,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum DomainKind {
    Interval,
    Ball,
}

impl DomainOpts {
    fn build(&self) -> CliResult<WellDomain> {
        Ok(match self.domain {
            DomainKind::Interval => WellDomain::interval(self.radius)?,
            DomainKind::Ball => WellDomain::ball(self.radius, self.dim)?,
        })
    }
}

#[derive(Args, Clone)]
struct ModeOpts {
    /// Angular sector nu (balls).
    #[arg(long, default_value_t = 0)]
    nu: u32,
    /// Radial index l >= 1 within the sector (balls).
    #[arg(long, default_value_t = 1)]
    l: u32,
    /// Overall mode index n >= 1 (intervals; odd n are even-parity).
    #[arg(long, default_value_t = 1)]
    n: u32,
}

impl ModeOpts {
    fn build(&self, domain: &WellDomain) -> CliResult<Mode> {
        match domain {
            WellDomain::Interval { .. } => {
                if self.n == 0 {
                    return Err(CliError::Config("mode index n must be >= 1".into()));
                }
                Ok(Mode::interval_nth(self.n))
            }
            WellDomain::Ball { .. } => {
                if self.l == 0 {
                    return Err(CliError::Config("mode index l must be >= 1".into()));
                }
                Ok(Mode::ball(self.nu, self.l))
            }
        }
    }
}

#[derive(Args, Clone)]
struct HSweepOpts {
    /// Explicit well parameter(s) h in (0, 1); repeatable.
    #[arg(long = "h", value_name = "H")]
    h: Vec<f64>,
    /// Smallest h of a geometric sweep.
    #[arg(long)]
    h_min: Option<f64>,
    /// Largest h of a geometric sweep.
    #[arg(long)]
    h_max: Option<f64>,
    /// Number of sweep points.
    #[arg(long, default_value_t = 8)]
    h_count: usize,
}

impl HSweepOpts {
    /// The h list: explicit values as given, or a log-spaced sweep from
    /// h_min up to h_max.
    fn values(&self) -> CliResult<Vec<f64>> {
        let hs = if !self.h.is_empty() {
            if self.h_min.is_some() || self.h_max.is_some() {
                return Err(CliError::Config(
                    "give either explicit --h values or an --h-min/--h-max sweep, not both".into(),
                ));
            }
            self.h.clone()
        } else {
            let (lo, hi) = match (self.h_min, self.h_max) {
                (Some(lo), Some(hi)) => (lo, hi),
                _ => {
                    return Err(CliError::Config(
                        "need --h or both --h-min and --h-max".into(),
                    ))
                }
            };
            if !(0.0 < lo && lo <= hi && hi < 1.0) {
                return Err(CliError::Config(format!(
                    "need 0 < h_min <= h_max < 1, got [{lo}, {hi}]"
                )));
            }
            if self.h_count == 0 {
                return Err(CliError::Config("h_count must be >= 1".into()));
            }
            if self.h_count == 1 {
                vec![lo]
            } else {
                let ratio = (hi / lo).powf(1.0 / (self.h_count as f64 - 1.0));
                (0..self.h_count).map(|i| lo * ratio.powi(i as i32)).collect()
            }
        };
        for &h in &hs {
            if !(0.0 < h && h < 1.0) {
                return Err(CliError::Config(format!("h={h} outside (0, 1)")));
            }
        }
        Ok(hs)
    }
}

#[derive(Args, Clone)]
struct OutputOpts {
    /// Write data here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    domain: DomainOpts,
    /// Well parameter h in (0, 1).
    #[arg(long)]
    h: f64,
    /// Cap on the angular sector (balls); automatic when omitted.
    #[arg(long)]
    nu_max: Option<u32>,
    /// Emit at most this many eigenvalues.
    #[arg(long)]
    modes: Option<usize>,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    domain: DomainOpts,
    #[command(flatten)]
    sweep: HSweepOpts,
    /// Number of leading Dirichlet modes to track.
    #[arg(long, default_value_t = 9)]
    modes: usize,
    /// Cap on the angular sector when enumerating ball modes.
    #[arg(long)]
    nu_max: Option<u32>,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Args)]
struct ExpandArgs {
    #[command(flatten)]
    domain: DomainOpts,
    #[command(flatten)]
    mode: ModeOpts,
    #[command(flatten)]
    sweep: HSweepOpts,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Args)]
struct SplitArgs {
    #[command(flatten)]
    domain: DomainOpts,
    #[command(flatten)]
    mode: ModeOpts,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Args)]
struct QuasimodeArgs {
    #[command(flatten)]
    domain: DomainOpts,
    #[command(flatten)]
    mode: ModeOpts,
    #[command(flatten)]
    sweep: HSweepOpts,
    /// Quasimode order (0 or 1).
    #[arg(long, default_value_t = 1)]
    order: u32,
    /// Use the finite-difference oracle for spectral distances instead of
    /// the secular solver.
    #[arg(long)]
    oracle: bool,
    /// Retained sector-basis size for the order-1 correction.
    #[arg(long, default_value_t = finwell_core::asymptotics::DEFAULT_BASIS_SIZE)]
    basis_size: usize,
    /// Also write the sampled profile (r,value) at the smallest h here.
    #[arg(long)]
    profile_out: Option<PathBuf>,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run the fast subset only.
    #[arg(long)]
    quick: bool,
    /// Test hook: perturb the first Bessel zero used by the Rellich check.
    #[arg(long, hide = true, default_value_t = 0.0)]
    perturb_zero: f64,
}

fn dispatch(cli: Cli) -> CliResult<()> {
    match cli.cmd {
        Command::Spectrum(a) => cmd_spectrum(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Expand(a) => cmd_expand(a),
        Command::Split(a) => cmd_split(a),
        Command::Quasimode(a) => cmd_quasimode(a),
        Command::Verify(a) => verify::cmd_verify(a.quick, a.perturb_zero),
    }
}

fn sector_columns(mode: &Mode) -> (Option<u32>, Option<&'static str>) {
    match mode.sector {
        Sector::Angular(nu) => (Some(nu), None),
        Sector::Parity(Parity::Even) => (None, Some("even")),
        Sector::Parity(Parity::Odd) => (None, Some("odd")),
    }
}

fn cmd_spectrum(args: SpectrumArgs) -> CliResult<()> {
    let domain = args.domain.build()?;
    let params = WellParams::new(args.h)?;
    eprintln!(
        "computing spectrum of {domain:?} at h={} (depth {})",
        args.h,
        params.depth()
    );
    let mut eigs = solve_spectrum(&domain, &params, None, args.nu_max)?;
    if let Some(cap) = args.modes {
        eigs.truncate(cap);
    }
    let mut table = CsvTable::new("j,nu,l,parity,multiplicity,lambda,residual");
    let mut rows = JsonRows::new();
    for (i, e) in eigs.iter().enumerate() {
        let (nu, parity) = sector_columns(&e.mode);
        table.row(&[
            (i + 1).to_string(),
            nu.map_or(String::new(), |v| v.to_string()),
            e.mode.l.to_string(),
            parity.unwrap_or("").to_string(),
            e.multiplicity.to_string(),
            e.lambda.to_string(),
            e.residual.to_string(),
        ]);
        rows.push(serde_json::json!({
            "j": i + 1,
            "nu": nu,
            "l": e.mode.l,
            "parity": parity,
            "multiplicity": e.multiplicity,
            "lambda": e.lambda,
            "residual": e.residual,
        }));
    }
    emit(&args.output, table, rows)
}

fn cmd_sweep(args: SweepArgs) -> CliResult<()> {
    let domain = args.domain.build()?;
    let hs = args.sweep.values()?;
    if args.modes == 0 {
        return Err(CliError::Config("--modes must be >= 1".into()));
    }
    let modes = leading_modes(&domain, args.modes, args.nu_max)?;
    eprintln!(
        "sweeping {} h values over {} modes of {domain:?}",
        hs.len(),
        modes.len()
    );
    let results = sweep_eigenvalues(&domain, &modes, &hs)?;
    let mut table =
        CsvTable::new("h,j,nu,l,parity,multiplicity,lambda_h,lambda_D,diff,first_order");
    let mut rows = JsonRows::new();
    for (hi, &h) in hs.iter().enumerate() {
        for (mi, info) in modes.iter().enumerate() {
            let Some(lambda_h) = results[hi][mi] else {
                continue; // mode not yet bound at this depth
            };
            let (nu, parity) = sector_columns(&info.mode);
            let diff = info.lambda_d - lambda_h;
            let first_order = h * info.boundary_norm_sq;
            table.row(&[
                h.to_string(),
                info.j.to_string(),
                nu.map_or(String::new(), |v| v.to_string()),
                info.mode.l.to_string(),
                parity.unwrap_or("").to_string(),
                info.multiplicity.to_string(),
                lambda_h.to_string(),
                info.lambda_d.to_string(),
                diff.to_string(),
                first_order.to_string(),
            ]);
            rows.push(serde_json::json!({
                "h": h,
                "j": info.j,
                "nu": nu,
                "l": info.mode.l,
                "parity": parity,
                "multiplicity": info.multiplicity,
                "lambda_h": lambda_h,
                "lambda_D": info.lambda_d,
                "diff": diff,
                "first_order": first_order,
            }));
        }
    }
    emit(&args.output, table, rows)
}

/// Eigenvalues for every (h, mode) pair; None where the mode is not bound.
/// h points are computed concurrently, output order stays deterministic.
fn sweep_eigenvalues(
    domain: &WellDomain,
    modes: &[ModeInfo],
    hs: &[f64],
) -> CliResult<Vec<Vec<Option<f64>>>> {
    let workers = hs.len().min(8).max(1);
    let mut results: Vec<Option<CliResult<Vec<Option<f64>>>>> = Vec::new();
    results.resize_with(hs.len(), || None);
    let slots: Vec<std::sync::Mutex<&mut Option<CliResult<Vec<Option<f64>>>>>> =
        results.iter_mut().map(std::sync::Mutex::new).collect();
    let next = std::sync::atomic::AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                if i >= hs.len() {
                    break;
                }
                let r = eigenvalues_at(domain, modes, hs[i]);
                **slots[i].lock().unwrap() = Some(r);
            });
        }
    });
    results
        .into_iter()
        .map(|r| r.expect("worker filled every slot"))
        .collect()
}

fn eigenvalues_at(
    domain: &WellDomain,
    modes: &[ModeInfo],
    h: f64,
) -> CliResult<Vec<Option<f64>>> {
    let params = WellParams::new(h)?;
    modes
        .iter()
        .map(|info| match solve_mode(domain, &params, &info.mode) {
            Ok(v) => Ok(Some(v)),
            // Not bound at this depth: the branch has not been born yet.
            Err(CoreError::Solver(_)) => Ok(None),
            Err(e) => Err(e.into()),
        })
        .collect()
}

fn cmd_expand(args: ExpandArgs) -> CliResult<()> {
    let domain = args.domain.build()?;
    let mode = args.mode.build(&domain)?;
    let hs = {
        let mut o = args.sweep.clone();
        if o.h.is_empty() && o.h_min.is_none() && o.h_max.is_none() {
            o.h_min = Some(0.005);
            o.h_max = Some(0.05);
        }
        o.values()?
    };
    if hs.len() < 3 {
        return Err(CliError::Config("the expansion fit needs at least 3 h values".into()));
    }
    let lambda1 = first_order_coefficient(&domain, &mode).map_err(|e| match e {
        CoreError::Degenerate(m) => {
            CliError::Failure(format!("{m}; use the `split` subcommand"))
        }
        other => other.into(),
    })?;
    let lambda_d = dirichlet_eigenvalue(&domain, &mode)?;
    eprintln!("fitting the expansion of {mode:?} on {domain:?} over {} h values", hs.len());
    let mut per_h = Vec::new();
    for &h in &hs {
        let params = WellParams::new(h)?;
        let lam = solve_mode(&domain, &params, &mode)?;
        let ratio = (lambda_d - lam) / h;
        let remainder = (lam - lambda_d - h * lambda1).abs();
        per_h.push((h, lam, ratio, remainder));
    }
    // Linear fit ratio ~ c0 + c1 h: c0 extrapolates ||du/dn||^2 at h = 0.
    let (c0, _) = linear_fit(
        &per_h.iter().map(|r| r.0).collect::<Vec<_>>(),
        &per_h.iter().map(|r| r.2).collect::<Vec<_>>(),
    );
    let (_, slope) = linear_fit(
        &per_h.iter().map(|r| r.0.ln()).collect::<Vec<_>>(),
        &per_h.iter().map(|r| r.3.max(1e-300).ln()).collect::<Vec<_>>(),
    );
    let mut table = CsvTable::new("h,lambda_h,ratio,remainder");
    for (h, lam, ratio, rem) in &per_h {
        table.row(&[h.to_string(), lam.to_string(), ratio.to_string(), rem.to_string()]);
    }
    let report = serde_json::json!({
        "lambda_D": lambda_d,
        "lambda_1": lambda1,
        "fitted_first_order": c0,
        "fit_relative_error": (c0 - (-lambda1)).abs() / (-lambda1),
        "remainder_slope": slope,
        "rows": per_h.iter().map(|(h, lam, ratio, rem)| serde_json::json!({
            "h": h, "lambda_h": lam, "ratio": ratio, "remainder": rem,
        })).collect::<Vec<_>>(),
    });
    eprintln!(
        "lambda_D = {lambda_d}; lambda_1 = {lambda1}; fitted ||du/dn||^2 = {c0}; \
         remainder slope = {slope}"
    );
    match args.output.format {
        Format::Csv => write_output(&args.output.out, &table.finish())?,
        Format::Json => {
            write_output(&args.output.out, &format!("{:#}\n", report))?;
        }
    }
    Ok(())
}

/// Least-squares line y = a + b x; returns (a, b).
fn linear_fit(x: &[f64], y: &[f64]) -> (f64, f64) {
    let n = x.len() as f64;
    let sx: f64 = x.iter().sum();
    let sy: f64 = y.iter().sum();
    let sxx: f64 = x.iter().map(|v| v * v).sum();
    let sxy: f64 = x.iter().zip(y).map(|(u, v)| u * v).sum();
    let b = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    let a = (sy - b * sx) / n;
    (a, b)
}

fn cmd_split(args: SplitArgs) -> CliResult<()> {
    let domain = args.domain.build()?;
    let mode = args.mode.build(&domain)?;
    let s = splitting_matrix(&domain, &mode)?;
    if s.matrix.n == 1 {
        return Err(CliError::Failure(format!(
            "{mode:?} is simple; the splitting analysis needs a degenerate eigenspace \
             (use `expand` for simple modes)"
        )));
    }
    let a11 = s.matrix.get(0, 0);
    let a22 = s.matrix.get(1, 1);
    let a12 = s.matrix.get(0, 1);
    let tol = 1e-10_f64.max(1e-12 * a11.abs());
    let degenerate_criterion = a12.abs() <= tol && (a11 - a22).abs() <= tol;
    let report = serde_json::json!({
        "lambda_D": s.dirichlet_eigenvalue,
        "basis": s.basis_labels,
        "matrix": [[a11, a12], [a12, a22]],
        "eigenvalues": s.pairing_eigenvalues,
        "eigenvectors": s.vectors,
        "first_order_candidates": s.first_order_candidates(),
        "degenerate_criterion_holds": degenerate_criterion,
    });
    eprintln!(
        "splitting matrix [[{a11}, {a12}], [{a12}, {a22}]]; criterion \
         (equal diagonal, zero off-diagonal): {}",
        if degenerate_criterion { "satisfied" } else { "violated" }
    );
    match args.output.format {
        Format::Json => write_output(&args.output.out, &format!("{:#}\n", report))?,
        Format::Csv => {
            let mut table = CsvTable::new("quantity,value");
            table.row(&["lambda_D".into(), s.dirichlet_eigenvalue.to_string()]);
            table.row(&["A11".into(), a11.to_string()]);
            table.row(&["A12".into(), a12.to_string()]);
            table.row(&["A22".into(), a22.to_string()]);
            for (i, v) in s.pairing_eigenvalues.iter().enumerate() {
                table.row(&[format!("pairing_eigenvalue_{}", i + 1), v.to_string()]);
            }
            for (i, v) in s.first_order_candidates().iter().enumerate() {
                table.row(&[format!("first_order_candidate_{}", i + 1), v.to_string()]);
            }
            table.row(&[
                "degenerate_criterion_holds".into(),
                degenerate_criterion.to_string(),
            ]);
            write_output(&args.output.out, &table.finish())?;
        }
    }
    Ok(())
}

fn cmd_quasimode(args: QuasimodeArgs) -> CliResult<()> {
    let domain = args.domain.build()?;
    let mode = args.mode.build(&domain)?;
    let hs = {
        let mut o = args.sweep.clone();
        if o.h.is_empty() && o.h_min.is_none() && o.h_max.is_none() {
            o.h = vec![0.2, 0.1, 0.05, 0.025];
        }
        o.values()?
    };
    let mut hs = hs;
    hs.sort_by(|a, b| b.partial_cmp(a).unwrap());
    eprintln!(
        "building order-{} quasimodes for {mode:?} on {domain:?} at {} h values",
        args.order,
        hs.len()
    );
    let mut per_h = Vec::new();
    for &h in &hs {
        let params = WellParams::new(h)?;
        let q = build_quasimode(&domain, &mode, &params, args.order, args.basis_size)?;
        let res = q.residual_norms()?;
        let dist = spectral_distance(&domain, &params, &mode, q.lambda_tilde, args.oracle)?;
        eprintln!(
            "h={h}: lambda~={} norm={} l2={} hminus1={} distance={dist}",
            q.lambda_tilde, res.norm, res.l2, res.hminus1
        );
        per_h.push((h, q.lambda_tilde, res, dist));
    }
    // Lemma-of-residual constant: fit K at the largest h, check the bound at
    // the rest; slope of the distance curve on log-log axes.
    let k_fit = per_h[0].3 / per_h[0].2.hminus1;
    let bound_holds = per_h.iter().all(|(_, _, res, dist)| *dist <= k_fit * res.hminus1 * (1.0 + 1e-12));
    let (_, slope) = linear_fit(
        &per_h.iter().map(|r| r.0.ln()).collect::<Vec<_>>(),
        &per_h.iter().map(|r| r.3.max(1e-300).ln()).collect::<Vec<_>>(),
    );
    let mut table = CsvTable::new("h,lambda_tilde,norm,l2_residual,hminus1_residual,delta_coeff,distance");
    let mut rows = JsonRows::new();
    for (h, lt, res, dist) in &per_h {
        table.row(&[
            h.to_string(),
            lt.to_string(),
            res.norm.to_string(),
            res.l2.to_string(),
            res.hminus1.to_string(),
            res.delta_coeff.to_string(),
            dist.to_string(),
        ]);
        rows.push(serde_json::json!({
            "h": h,
            "lambda_tilde": lt,
            "norm": res.norm,
            "l2_residual": res.l2,
            "hminus1_residual": res.hminus1,
            "delta_coeff": res.delta_coeff,
            "distance": dist,
        }));
    }
    eprintln!(
        "fitted residual constant K = {k_fit}; bound holds at smaller h: {bound_holds}; \
         distance slope = {slope}"
    );
    if let Some(path) = &args.profile_out {
        let h = *hs.last().unwrap();
        let params = WellParams::new(h)?;
        let q = build_quasimode(&domain, &mode, &params, args.order, args.basis_size)?;
        let mut profile = CsvTable::new("r,value");
        let r_max = domain.radius() + q.collar;
        let n = 800;
        for i in 0..=n {
            let r = r_max * i as f64 / n as f64;
            profile.row(&[r.to_string(), q.eval(r)?.to_string()]);
        }
        write_output(&Some(path.clone()), &profile.finish())?;
    }
    emit(&args.output, table, rows)
}

/// Distance from lambda~ to the nearest eigenvalue: secular solver by
/// default, Richardson-extrapolated finite differences with --oracle.
fn spectral_distance(
    domain: &WellDomain,
    params: &WellParams,
    mode: &Mode,
    lambda_tilde: f64,
    use_fd: bool,
) -> CliResult<f64> {
    if !use_fd {
        let lam = solve_mode(domain, params, mode)?;
        return Ok((lam - lambda_tilde).abs());
    }
    let spectrum = match domain {
        WellDomain::Interval { .. } => {
            // The line scheme sees both parities; count enough modes to
            // surround lambda~.
            let count = 2 * mode.l as usize + 2;
            fd_line_spectrum(domain.radius(), params.h, count, None)?
        }
        WellDomain::Ball { dim, .. } => {
            let nu = mode.sector.nu().unwrap();
            fd_radial_spectrum(*dim, nu, domain.radius(), params.h, mode.l as usize + 2, None)?
        }
    };
    spectrum
        .richardson
        .iter()
        .map(|v| (v - lambda_tilde).abs())
        .min_by(|a, b| a.partial_cmp(b).unwrap())
        .ok_or_else(|| CliError::Failure("empty oracle spectrum".into()))
}

fn emit(output: &OutputOpts, table: CsvTable, rows: JsonRows) -> CliResult<()> {
    match output.format {
        Format::Csv => write_output(&output.out, &table.finish()),
        Format::Json => write_output(&output.out, &rows.finish()),
    }
}
