use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use quadcong::boxcount::count_exact;
use quadcong::conic::{enumerate_in_box_orbit, enumerate_in_box_scan, fundamental_solution, verify_small_arc_lemma};
use quadcong::harness::{fit_by_prime, read_csv, run_pipeline, sweep, write_csv, SweepSpec};
use quadcong::{Error, Interval, PrimeModulus, QuadraticForm, SearchBox};

#[derive(Parser)]
#[command(name = "quadcong", version, about = "Solutions of quadratic congruences in boxes")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Instance {
    #[arg(long)]
    prime: BigInt,
    /// Coefficients a,b,c,d,e,f of ax² + bxy + cy² + dx + ey + f.
    #[arg(long, allow_hyphen_values = true)]
    form: String,
    #[arg(long, allow_hyphen_values = true)]
    lambda: BigInt,
    /// K,L,M for the box [K+1, K+M] × [L+1, L+M].
    #[arg(long = "box", allow_hyphen_values = true)]
    bx: String,
}

#[derive(Subcommand)]
enum Cmd {
    /// Count solutions in a box.
    Count {
        #[command(flatten)]
        inst: Instance,
        /// Print every solution.
        #[arg(long)]
        list: bool,
    },
    /// Count through the Diophantine decomposition and compare.
    Pipeline {
        #[command(flatten)]
        inst: Instance,
    },
    /// Fundamental unit of x² - D·y² = 1, or the points of x² - D·y² = n.
    Pell {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<BigInt>,
        /// XLO,XHI,YLO,YHI (default ±1000).
        #[arg(long = "box", allow_hyphen_values = true)]
        bx: Option<String>,
    },
    /// Check three-point arcs on x² - D·y² = n for 1 <= |n| <= nmax.
    #[command(name = "verify-lemma1")]
    VerifyLemma1 {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long)]
        nmax: u64,
    },
    /// Run a seeded sweep and write CSV.
    Sweep {
        #[arg(long)]
        config: String,
        #[arg(long)]
        out: Option<String>,
        /// Overrides the seed in the config file.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Fit log(count) against log(M) per prime.
    Fit {
        #[arg(long = "in")]
        input: String,
    },
}

enum Failure {
    Usage(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::PipelineMismatch { .. } | Error::InversionMismatch(_) => Failure::Mismatch(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn ints(s: &str, len: usize, what: &str) -> Result<Vec<BigInt>, Failure> {
    let v: Vec<BigInt> = s
        .split(',')
        .map(|t| t.trim().parse())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::Usage(format!("{what}: expected {len} comma-separated integers")))?;
    if v.len() != len {
        return Err(Failure::Usage(format!(
            "{what}: expected {len} comma-separated integers"
        )));
    }
    Ok(v)
}

fn parse_instance(i: &Instance) -> Result<(QuadraticForm, PrimeModulus, SearchBox), Failure> {
    let c = ints(&i.form, 6, "--form")?;
    let q = QuadraticForm::new(
        c[0].clone(),
        c[1].clone(),
        c[2].clone(),
        c[3].clone(),
        c[4].clone(),
        c[5].clone(),
    )?;
    let p = PrimeModulus::new(i.prime.clone())?;
    let b = ints(&i.bx, 3, "--box")?;
    let m = u64::try_from(&b[2]).map_err(|_| Failure::Usage("--box: M must be a positive integer".into()))?;
    let bx = SearchBox::new(b[0].clone(), b[1].clone(), m)?;
    Ok((q, p, bx))
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Count { inst, list } => {
            let (q, p, bx) = parse_instance(&inst)?;
            let r = count_exact(&q, &inst.lambda, &p, &bx, list);
            writeln!(out, "count {}", r.count)?;
            if r.is_degenerate() {
                writeln!(out, "degenerate columns {}", r.degenerate_columns.len())?;
            }
            for (x, y) in r.solutions.unwrap_or_default() {
                writeln!(out, "{x} {y}")?;
            }
        }
        Cmd::Pipeline { inst } => {
            let (q, p, bx) = parse_instance(&inst)?;
            let r = run_pipeline(&q, &inst.lambda, &p, &bx)?;
            let ph = &r.pigeonhole;
            writeln!(out, "kind {}", r.kind.name())?;
            writeln!(out, "regime {}", r.regime.name())?;
            writeln!(out, "T {} t {} k0 {} l0 {}", ph.big_t, ph.t, ph.k0, ph.l0)?;
            writeln!(out, "z range [-{0}, {0}] ({1} values)", r.z_max, r.rows.len())?;
            writeln!(out, "{:>8} {:>24} {:>9}", "z", "n_z", "solutions")?;
            for row in r.rows.iter().filter(|row| row.solutions > 0) {
                writeln!(out, "{:>8} {:>24} {:>9}", row.z, row.n, row.solutions)?;
            }
            writeln!(out, "decomposed {} exact {} match", r.decomposed_count, r.exact_count)?;
        }
        Cmd::Pell { d, n, bx } => match n {
            None => {
                let u = fundamental_solution(d)?;
                writeln!(out, "u0 {}\nv0 {}", u.u0, u.v0)?;
            }
            Some(n) => {
                let b = match bx {
                    Some(s) => ints(&s, 4, "--box")?,
                    None => vec![
                        BigInt::from(-1000),
                        BigInt::from(1000),
                        BigInt::from(-1000),
                        BigInt::from(1000),
                    ],
                };
                let xs = Interval::new(b[0].clone(), b[1].clone());
                let ys = Interval::new(b[2].clone(), b[3].clone());
                let scan = enumerate_in_box_scan(d, &n, &xs, &ys)?;
                if d >= 2 {
                    let orbit = enumerate_in_box_orbit(d, &n, &xs, &ys)?;
                    if orbit != scan {
                        return Err(Failure::Mismatch(format!(
                            "orbit found {} points, scan found {}",
                            orbit.len(),
                            scan.len()
                        )));
                    }
                }
                writeln!(out, "points {}", scan.len())?;
                for p in scan {
                    writeln!(out, "{} {}", p.x, p.y)?;
                }
            }
        },
        Cmd::VerifyLemma1 { d, nmax } => {
            let r = verify_small_arc_lemma(d, nmax)?;
            writeln!(out, "D {} nmax {}", r.d, r.n_max)?;
            writeln!(
                out,
                "conics {} triples {} arcs {}",
                r.conics_with_points, r.triples_checked, r.arcs_computed
            )?;
            match r.min_ratio {
                Some(m) => writeln!(out, "min ratio {m:.6}")?,
                None => writeln!(out, "min ratio -")?,
            }
            writeln!(out, "violations {}", r.violations.len())?;
            for v in &r.violations {
                writeln!(
                    out,
                    "n {} points {} {} {} arc {:.6} threshold {:.6}",
                    v.n, v.points[0], v.points[1], v.points[2], v.arc, v.threshold
                )?;
            }
            if !r.passed() {
                return Err(Failure::Mismatch(format!("{} violations", r.violations.len())));
            }
        }
        Cmd::Sweep {
            config,
            out: path,
            seed,
        } => {
            let text = fs::read_to_string(&config)?;
            let mut spec = SweepSpec::parse(&text)?;
            if let Some(s) = seed {
                spec.seed = s;
            }
            let rows = sweep(&spec)?;
            match path {
                Some(path) => write_csv(&rows, fs::File::create(path)?)?,
                None => write_csv(&rows, &mut *out)?,
            }
        }
        Cmd::Fit { input } => {
            let rows = read_csv(fs::File::open(&input)?)?;
            for (p, fit) in fit_by_prime(&rows) {
                match fit {
                    Ok(f) => writeln!(
                        out,
                        "p {p} slope {:.6} residual {:.6} points {}",
                        f.slope, f.residual, f.points
                    )?,
                    Err(e) => writeln!(out, "p {p} {e}")?,
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch(m)) => {
            eprintln!("mismatch: {m}");
            ExitCode::from(2)
        }
    }
}
