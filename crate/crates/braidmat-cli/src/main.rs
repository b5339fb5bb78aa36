//! Command-line surface: matrix generation, conformance sweeps, tower
//! traces, chain Hamiltonians, Cayley potentials, link invariants,
//! entanglement reports and phase-gauge canonicalization.
//!
//! Exit codes: 0 all checks pass, 1 a residual check failed, 2 usage or
//! domain error. `BRAIDMAT_TOL` overrides the default pass tolerance.

mod document;

use std::collections::BTreeMap;
use std::process::ExitCode;

use braidmat::fusion::{order_zero, trace_closed_form_n2, TowerKind};
use braidmat::gauge::phased_antidiagonal;
use braidmat::verify::{
    check_braid_with_tol, check_shape_constraints, DEFAULT_TOL_EVEN, DEFAULT_TOL_ODD,
};
use braidmat::*;
use clap::{Args, Parser, Subcommand, ValueEnum};
use document::MatrixDocument;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(
    name = "braidmat",
    version,
    about = "Unitary braid matrices and their derived structures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a matrix as a JSON document
    Gen(GenArgs),
    /// Conformance sweep over n/class/z grids; TSV residual table
    Verify(VerifyArgs),
    /// Tower traces by order, against the n=2 closed form
    Tower(TowerArgs),
    /// Cyclic chain Hamiltonian
    Hamiltonian(HamiltonianArgs),
    /// Inverse-Cayley potential X(z)
    Potential(PotentialArgs),
    /// Link-invariant evaluation of a braid word
    Invariant(InvariantArgs),
    /// Two-party entanglement report
    Entangle(EntangleArgs),
    /// Remove spurious anti-diagonal phases by Y⊗Y conjugation
    Gauge(GaugeArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Braid,
    PPlus,
    PMinus,
    M,
    U,
    V,
    Odd,
}

#[derive(Args)]
struct GenArgs {
    /// Half local dimension (even families)
    #[arg(long, default_value_t = 1)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Family::Braid)]
    family: Family,
    /// Braid class: KJ (I), JK (II), KL, LK
    #[arg(long, default_value = "KJ")]
    class: String,
    /// Spectral parameter
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    z: f64,
    /// Odd family: six parameters m11+,m11-,m12+,m12-,m21+,m21-
    #[arg(long, default_value = "1,-1,0.5,-0.5,2,-2", allow_hyphen_values = true)]
    odd_params: String,
    /// Odd family angle θ
    #[arg(long, default_value_t = 0.7, allow_hyphen_values = true)]
    theta: f64,
    /// Write the document here instead of stdout
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    /// Re-ingest the emitted document and re-run the residual checks on it
    #[arg(long)]
    check: bool,
    /// Override the pass tolerance
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest n in the sweep
    #[arg(long, default_value_t = 2)]
    max_n: usize,
    /// Number of z grid points
    #[arg(long, default_value_t = 5)]
    grid: usize,
    /// Random parameter draws for the odd family
    #[arg(long, default_value_t = 3)]
    odd_draws: usize,
    /// Seed for the randomized draws
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct TowerArgs {
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// L or T
    #[arg(long, default_value = "L")]
    kind: String,
    #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
    z: f64,
    #[arg(long, default_value_t = 6)]
    max_order: usize,
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct HamiltonianArgs {
    #[arg(long, default_value_t = 1)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    sites: usize,
    #[arg(long, default_value = "KJ")]
    class: String,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct PotentialArgs {
    #[arg(long, default_value_t = 1)]
    n: usize,
    #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
    z: f64,
    /// Real part of μ
    #[arg(long, default_value_t = 3.0, allow_hyphen_values = true)]
    mu: f64,
    /// Imaginary part of μ
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    mu_im: f64,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct InvariantArgs {
    #[arg(long, default_value_t = 1)]
    n: usize,
    /// Diagonal parameters d_1,…,d_n (comma separated)
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    d: String,
    #[arg(long, default_value_t = 2)]
    strands: usize,
    /// Braid word as comma-separated signed letters, e.g. "1,2,-1"
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    word: String,
    /// Spectral parameter (1 = the link invariant; |z|<1 is experimental)
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    z: f64,
}

#[derive(Args)]
struct EntangleArgs {
    #[arg(long, default_value_t = 1)]
    n: usize,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    z: f64,
    /// First basis label (1-indexed); omit for the full basis sweep
    #[arg(long)]
    c: Option<usize>,
    /// Second basis label (1-indexed)
    #[arg(long)]
    cprime: Option<usize>,
    /// Use the odd 9×9 family instead
    #[arg(long)]
    odd: bool,
    #[arg(long, default_value = "1,-1,0.5,-0.5,2,-2", allow_hyphen_values = true)]
    odd_params: String,
    #[arg(long, default_value_t = 0.3, allow_hyphen_values = true)]
    theta: f64,
}

#[derive(Args)]
struct GaugeArgs {
    /// Build the reference phased anti-diagonal with this outer phase
    #[arg(long, allow_hyphen_values = true)]
    phi: Option<f64>,
    /// Read a 4×4 matrix document instead
    #[arg(long, conflicts_with = "phi")]
    input: Option<std::path::PathBuf>,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    #[arg(long)]
    tol: Option<f64>,
}

/// Messages that should exit with the usage/domain code.
struct UsageError(String);

type CliResult<T> = std::result::Result<T, UsageError>;

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

impl From<String> for UsageError {
    fn from(s: String) -> Self {
        UsageError(s)
    }
}

impl From<std::io::Error> for UsageError {
    fn from(e: std::io::Error) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Tower(args) => cmd_tower(args),
        Command::Hamiltonian(args) => cmd_hamiltonian(args),
        Command::Potential(args) => cmd_potential(args),
        Command::Invariant(args) => cmd_invariant(args),
        Command::Entangle(args) => cmd_entangle(args),
        Command::Gauge(args) => cmd_gauge(args),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn fmt_complex(v: Complex64) -> String {
    // normalize -0.0 so identity gauges read as 1+0i
    let re = if v.re == 0.0 { 0.0 } else { v.re };
    let im = if v.im == 0.0 { 0.0 } else { v.im };
    if im < 0.0 {
        format!("{re}{im}i")
    } else {
        format!("{re}+{im}i")
    }
}

fn print_all(s: &str) {
    use std::io::Write;
    let _ = std::io::stdout().write_all(s.as_bytes());
}

fn env_tol(default: f64) -> f64 {
    std::env::var("BRAIDMAT_TOL").ok().and_then(|s| s.parse().ok()).unwrap_or(default)
}

fn tol_even(flag: Option<f64>) -> f64 {
    flag.unwrap_or_else(|| env_tol(DEFAULT_TOL_EVEN))
}

fn parse_f64_list(text: &str, expect: Option<usize>) -> CliResult<Vec<f64>> {
    let vals = text
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| UsageError(format!("bad number '{t}'"))))
        .collect::<CliResult<Vec<_>>>()?;
    if let Some(want) = expect {
        if vals.len() != want {
            return Err(UsageError(format!("expected {want} values, got {}", vals.len())));
        }
    }
    Ok(vals)
}

fn odd_params_from(text: &str, theta: f64) -> CliResult<OddBraidParams> {
    let ms = parse_f64_list(text, Some(6))?;
    Ok(OddBraidParams::new((ms[0], ms[1]), (ms[2], ms[3]), (ms[4], ms[5]), theta))
}

fn emit_document(doc: &MatrixDocument, out: Option<&std::path::Path>) -> CliResult<()> {
    let text = doc.serialize();
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print_all(&text),
    }
    Ok(())
}

fn print_report(rep: &ResidualReport) {
    println!(
        "check\t{}\tmax_abs={:.3e}\tfrobenius={:.3e}\ttol={:.1e}\t{}",
        rep.check,
        rep.max_abs,
        rep.frobenius,
        rep.tolerance,
        if rep.pass { "pass" } else { "FAIL" }
    );
}

fn meta(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn cmd_gen(args: GenArgs) -> CliResult<bool> {
    if args.n < 1 {
        return Err(UsageError("n must be at least 1".into()));
    }
    let class = BraidClass::parse(&args.class)?;
    let tol = tol_even(args.tol);
    let (matrix, family_name, extra): (ComplexDense, &str, Vec<(&str, String)>) = match args.family
    {
        Family::Braid => (
            braid_hat(args.n, class, args.z),
            "braid",
            vec![("class", class.label().to_string()), ("z", args.z.to_string())],
        ),
        Family::PPlus => (build_projectors(args.n).0, "p-plus", vec![]),
        Family::PMinus => (build_projectors(args.n).1, "p-minus", vec![]),
        Family::M => (build_m(args.n), "m", vec![]),
        Family::U => (build_u(args.n)?, "u", vec![]),
        Family::V => (build_block_diagonalizer(args.n)?, "v", vec![]),
        Family::Odd => {
            if args.n != 1 {
                return Err(UsageError("the odd family is the 9x9 case; use --n 1".into()));
            }
            let params = odd_params_from(&args.odd_params, args.theta)?;
            (
                build_odd_braid(&params),
                "odd",
                vec![("theta", args.theta.to_string()), ("params", args.odd_params.clone())],
            )
        }
    };
    let mut pairs = vec![("family", family_name.to_string()), ("n", args.n.to_string())];
    pairs.extend(extra);
    let doc = MatrixDocument::from_matrix(&matrix, meta(&pairs));
    emit_document(&doc, args.out.as_deref())?;
    if !args.check {
        return Ok(true);
    }

    // round trip, then run identical checks on both copies
    let reparsed = MatrixDocument::parse(&doc.serialize())?;
    if reparsed != doc {
        return Err(UsageError("document did not round-trip".into()));
    }
    let copy = reparsed.to_matrix()?;
    let checks = |m: &ComplexDense| -> Vec<ResidualReport> {
        match args.family {
            Family::Braid => vec![
                ResidualReport::from_matrix(
                    "matches constructor",
                    &m.sub(&braid_hat(args.n, class, args.z)),
                    tol,
                ),
                check_unitarity(m, tol),
                check_family_braid(args.n, class, args.z, tol),
            ],
            Family::PPlus | Family::PMinus => {
                vec![ResidualReport::from_matrix("idempotency", &m.mul(m).sub(m), tol)]
            }
            Family::M => vec![check_unitarity(m, tol)],
            Family::U => vec![ResidualReport::from_matrix(
                "involution",
                &m.mul(m).sub(&ComplexDense::identity(m.rows())),
                tol,
            )],
            Family::V => {
                let v_inv = build_block_diagonalizer_inverse(args.n).expect("n validated");
                let conj = m.mul(&braid_hat(args.n, BraidClass::KJ, args.z)).mul(&v_inv);
                vec![ResidualReport::from_matrix(
                    "block-diagonal reduction",
                    &conj.sub(&direct_sum_r2(args.n, args.z)),
                    tol,
                )]
            }
            Family::Odd => {
                vec![check_unitarity(m, args.tol.unwrap_or_else(|| env_tol(DEFAULT_TOL_ODD)))]
            }
        }
    };
    let original = checks(&matrix);
    let reloaded = checks(&copy);
    let mut all_pass = true;
    for (a, b) in original.iter().zip(&reloaded) {
        if a.max_abs != b.max_abs || a.frobenius != b.frobenius {
            return Err(UsageError(format!("round-trip changed residuals for {}", a.check)));
        }
        print_report(a);
        all_pass &= a.pass;
    }
    Ok(all_pass)
}

struct Row {
    check: &'static str,
    n: usize,
    class: String,
    z: String,
    zp: String,
    max_abs: f64,
    frobenius: f64,
    tol: f64,
    pass: bool,
}

impl Row {
    fn from_report(
        check: &'static str,
        n: usize,
        class: &str,
        z: &str,
        zp: &str,
        rep: &ResidualReport,
    ) -> Self {
        Row {
            check,
            n,
            class: class.to_string(),
            z: z.to_string(),
            zp: zp.to_string(),
            max_abs: rep.max_abs,
            frobenius: rep.frobenius,
            tol: rep.tolerance,
            pass: rep.pass,
        }
    }
}

fn grid_points(count: usize, lo: f64, hi: f64) -> Vec<f64> {
    if count <= 1 {
        return vec![(lo + hi) / 2.0];
    }
    (0..count).map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64).collect()
}

fn cmd_verify(args: VerifyArgs) -> CliResult<bool> {
    if args.max_n < 1 {
        return Err(UsageError("max-n must be at least 1".into()));
    }
    let tol = tol_even(args.tol);
    let tol_odd = args.tol.unwrap_or_else(|| env_tol(DEFAULT_TOL_ODD));
    let z_family = grid_points(args.grid, -1.0, 1.0);
    let z_bax = grid_points(args.grid, -0.9, 0.9);
    let mut rows = Vec::new();
    for n in 1..=args.max_n {
        for class in BraidClass::ALL {
            let label = class.label();
            for &z in &z_family {
                let zs = format!("{z:.4}");
                let rep = check_family_braid(n, class, z, tol);
                rows.push(Row::from_report("family-braid", n, label, &zs, "-", &rep));
                let rep = check_unitarity(&braid_hat(n, class, z), tol);
                rows.push(Row::from_report("unitarity", n, label, &zs, "-", &rep));
                let rep = check_quadratic(n, class, z, tol);
                rows.push(Row::from_report("quadratic", n, label, &zs, "-", &rep));
                let rep = check_shape_constraints(&BraidSpec::new(n, class, z));
                rows.push(Row::from_report("shape", n, label, &zs, "-", &rep));
            }
            for &z in &[-1.0, 1.0] {
                let zs = format!("{z:.4}");
                let rep = check_braid_with_tol(&braid_hat(n, class, z), tol)?;
                rows.push(Row::from_report("constant-braid", n, label, &zs, "-", &rep));
                let rep =
                    braidmat::verify::check_periodicity_with_tol(&braid_hat(n, class, z), tol);
                rows.push(Row::from_report("periodicity", n, label, &zs, "-", &rep));
            }
            let rep = check_hecke(&braid_hat(n, class, 1.0), tol);
            rows.push(Row::from_report("hecke", n, label, "1.0000", "-", &rep));
            for &z in &z_bax {
                for &zp in &z_bax {
                    let rep = check_baxterized(n, class, z, zp, tol)?;
                    rows.push(Row::from_report(
                        "baxterized",
                        n,
                        label,
                        &format!("{z:.4}"),
                        &format!("{zp:.4}"),
                        &rep,
                    ));
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    for draw in 0..args.odd_draws {
        let mut m = || rng.random_range(-2.0..2.0);
        let params = OddBraidParams::new((m(), m()), (m(), m()), (m(), m()), 0.0);
        let theta = rng.random_range(-1.5..1.5);
        let thetap = rng.random_range(-1.5..1.5);
        let mut rep = check_odd_braid(&params, theta, thetap);
        rep.tolerance = tol_odd;
        rep.pass = rep.max_abs <= tol_odd;
        rows.push(Row::from_report(
            "odd-braid",
            draw,
            "odd",
            &format!("{theta:.4}"),
            &format!("{thetap:.4}"),
            &rep,
        ));
        let rep = check_unitarity(&build_odd_braid(&params.with_theta(theta)), tol_odd);
        rows.push(Row::from_report(
            "odd-unitarity",
            draw,
            "odd",
            &format!("{theta:.4}"),
            "-",
            &rep,
        ));
    }

    rows.sort_by(|a, b| {
        (a.check, a.n, &a.class, &a.z, &a.zp).cmp(&(b.check, b.n, &b.class, &b.z, &b.zp))
    });
    let mut out = String::from("check\tn\tclass\tz\tzprime\tmax_abs\tfrobenius\ttol\tpass\n");
    let mut all_pass = true;
    for r in &rows {
        all_pass &= r.pass;
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{:.3e}\t{:.3e}\t{:.1e}\t{}\n",
            r.check,
            r.n,
            r.class,
            r.z,
            r.zp,
            r.max_abs,
            r.frobenius,
            r.tol,
            if r.pass { "pass" } else { "FAIL" }
        ));
    }
    print_all(&out);
    Ok(all_pass)
}

fn cmd_tower(args: TowerArgs) -> CliResult<bool> {
    let kind = match args.kind.to_ascii_uppercase().as_str() {
        "L" => TowerKind::L,
        "T" => TowerKind::T,
        other => return Err(UsageError(format!("unknown tower kind '{other}'"))),
    };
    let tol = args.tol.unwrap_or_else(|| env_tol(1e-10));
    let mut t = order_zero(kind, BraidClass::KJ, args.n, args.z);
    let mut all_pass = true;
    println!("order\ttrace_re\ttrace_im\tclosed_form\trel_err\tpass");
    for order in 1..=args.max_order {
        t = coproduct_step(&t)?;
        let tr = tower_trace(&t);
        if args.n == 2 {
            let want = trace_closed_form_n2(args.z, order);
            let rel = (tr.re - want).abs() / want.abs().max(1.0);
            let pass = rel <= tol && tr.im.abs() <= tol;
            all_pass &= pass;
            println!(
                "{order}\t{:.12e}\t{:.3e}\t{:.12e}\t{:.3e}\t{}",
                tr.re,
                tr.im,
                want,
                rel,
                if pass { "pass" } else { "FAIL" }
            );
        } else {
            // no closed form asserted away from n = 2; measured values only
            println!("{order}\t{:.12e}\t{:.3e}\t-\t-\t-", tr.re, tr.im);
        }
    }
    Ok(all_pass)
}

fn cmd_hamiltonian(args: HamiltonianArgs) -> CliResult<bool> {
    let class = BraidClass::parse(&args.class)?;
    let spec = ChainSpec::new(args.n, args.sites);
    let h = hamiltonian(&spec, class)?;
    let doc = MatrixDocument::from_matrix(
        &h,
        meta(&[
            ("family", "hamiltonian".to_string()),
            ("n", args.n.to_string()),
            ("sites", args.sites.to_string()),
            ("class", class.label().to_string()),
        ]),
    );
    emit_document(&doc, args.out.as_deref())?;
    let real = h.data().iter().map(|v| v.im.abs()).fold(0.0, f64::max);
    let skew = h.add(&h.transpose()).max_abs();
    let trace = h.trace().norm();
    let pass = real == 0.0 && skew == 0.0 && trace == 0.0;
    eprintln!("check\treal+antisymmetric+traceless\tim={real:.1e}\tskew={skew:.1e}\ttrace={trace:.1e}\t{}",
        if pass { "pass" } else { "FAIL" });
    Ok(pass)
}

fn cmd_potential(args: PotentialArgs) -> CliResult<bool> {
    let params = PotentialParams::new(args.n, args.z, Complex64::new(args.mu, args.mu_im));
    let tol = args.tol.unwrap_or_else(|| env_tol(1e-10));
    let x = cayley_potential(&params)?;
    let doc = MatrixDocument::from_matrix(
        &x,
        meta(&[
            ("family", "cayley-x".to_string()),
            ("n", args.n.to_string()),
            ("z", args.z.to_string()),
            ("mu", fmt_complex(Complex64::new(args.mu, args.mu_im))),
        ]),
    );
    emit_document(&doc, args.out.as_deref())?;
    let d2 = (2 * args.n) * (2 * args.n);
    let shifted = braidmat::physics::scaled_yb_matrix(args.n, args.z)
        .sub(&ComplexDense::identity(d2).scale(params.mu));
    let rep = ResidualReport::from_matrix(
        "X(sqrt(1+z^2)R - mu I) = I",
        &x.mul(&shifted).sub(&ComplexDense::identity(d2)),
        tol,
    );
    let mut all_pass = rep.pass;
    eprint!("{}", report_line(&rep));
    match args.n {
        1 => {
            let rep = ResidualReport::from_matrix(
                "closed form (n=1)",
                &x.sub(&braidmat::physics::closed_form_x_n1(args.z, params.mu)),
                tol,
            );
            all_pass &= rep.pass;
            eprint!("{}", report_line(&rep));
        }
        2 => {
            let rep = ResidualReport::from_matrix(
                "closed form (n=2)",
                &x.sub(&braidmat::physics::closed_form_x_n2(args.z, params.mu)),
                tol,
            );
            all_pass &= rep.pass;
            eprint!("{}", report_line(&rep));
        }
        _ => {}
    }
    Ok(all_pass)
}

fn report_line(rep: &ResidualReport) -> String {
    format!(
        "check\t{}\tmax_abs={:.3e}\tfrobenius={:.3e}\ttol={:.1e}\t{}\n",
        rep.check,
        rep.max_abs,
        rep.frobenius,
        rep.tolerance,
        if rep.pass { "pass" } else { "FAIL" }
    )
}

fn cmd_invariant(args: InvariantArgs) -> CliResult<bool> {
    let d = parse_f64_list(&args.d, Some(args.n))?;
    let sys = build_enhanced(args.n, &d)?;
    let word = BraidWord::parse(args.strands, &args.word)?;
    let value = invariant(&sys, &word, args.z)?;
    let trf = sys.f().trace();
    println!("invariant\t{:.15e}\t{:.15e}", value.re, value.im);
    println!("strands\t{}", args.strands);
    println!("word\t{}", if word.is_empty() { "(empty)".to_string() } else { word.to_string() });
    println!("z\t{}", args.z);
    println!("a\t1");
    println!("b\t{:.15e}", sys.b());
    println!("trace_f\t{:.15e}", trf.re);
    println!("note\tunknot value = Tr(F) = 2*sum(d) = sqrt(2)*b, not b/sqrt(2)");
    Ok(true)
}

fn cmd_entangle(args: EntangleArgs) -> CliResult<bool> {
    if args.odd {
        let params = odd_params_from(&args.odd_params, args.theta)?;
        let states = odd_superpositions(&params);
        let labels = ["+", "0", "-"];
        println!("ket\tamplitudes (re,im on |c c'>)");
        for (idx, st) in states.iter().enumerate() {
            let label = format!("|{}{}>", labels[idx / 3], labels[idx % 3]);
            let amps: Vec<String> = st
                .amplitudes()
                .iter()
                .enumerate()
                .filter(|(_, a)| a.norm() > 1e-14)
                .map(|(i, a)| {
                    format!("|{}{}>:({:.6},{:.6})", labels[i / 3], labels[i % 3], a.re, a.im)
                })
                .collect();
            println!("{label}\t{}", amps.join(" "));
        }
        let central = &states[4];
        let fixed = central.amplitude(2, 2) == Complex64::new(1.0, 0.0);
        println!("check\tcentral |00> fixed\t{}", if fixed { "pass" } else { "FAIL" });
        return Ok(fixed);
    }
    let d = 2 * args.n;
    let cells: Vec<(usize, usize)> = match (args.c, args.cprime) {
        (Some(c), Some(cp)) => vec![(c, cp)],
        (None, None) => (1..=d).flat_map(|c| (1..=d).map(move |cp| (c, cp))).collect(),
        _ => return Err(UsageError("--c and --cprime must be given together".into())),
    };
    println!("c\tcprime\trank\tentropy_bits\tschmidt_coefficients");
    let mut all_pass = true;
    for (c, cp) in cells {
        let (state, profile) = act_and_analyze(args.n, args.z, c, cp)?;
        all_pass &= (state.norm() - 1.0).abs() <= 1e-12;
        let coeffs: Vec<String> = profile.coefficients.iter().map(|s| format!("{s:.12}")).collect();
        println!("{c}\t{cp}\t{}\t{:.12}\t{}", profile.rank, profile.entropy_bits, coeffs.join(","));
    }
    Ok(all_pass)
}

fn cmd_gauge(args: GaugeArgs) -> CliResult<bool> {
    let tol = tol_even(args.tol);
    let input = match (&args.phi, &args.input) {
        (Some(phi), None) => phased_antidiagonal(*phi),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)?;
            MatrixDocument::parse(&text)?.to_matrix()?
        }
        _ => return Err(UsageError("provide exactly one of --phi or --input".into())),
    };
    let (y, canonical) = canonicalize_phases(&input)?;
    let before = check_braid_with_tol(&input, tol)?;
    let after = check_braid_with_tol(&canonical, tol)?;
    let drift = (before.max_abs - after.max_abs).abs();
    let doc = MatrixDocument::from_matrix(
        &canonical,
        meta(&[
            ("family", "gauge-canonical".to_string()),
            ("y11", fmt_complex(y.at(0, 0))),
            ("y22", fmt_complex(y.at(1, 1))),
            ("braid_residual_before", format!("{:.17e}", before.max_abs)),
            ("braid_residual_after", format!("{:.17e}", after.max_abs)),
        ]),
    );
    emit_document(&doc, args.out.as_deref())?;
    let pass = drift <= tol;
    eprintln!(
        "check\tbraid residual preserved\tbefore={:.3e}\tafter={:.3e}\tdrift={:.3e}\t{}",
        before.max_abs,
        after.max_abs,
        drift,
        if pass { "pass" } else { "FAIL" }
    );
    Ok(pass)
}
