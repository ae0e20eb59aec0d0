//! Command-line front end: point evaluation, grid sampling, and the
//! verification suites, emitting CSV/JSON for plotting and CI.

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use tricomi::fundsol::{eval_solution, riemann_r, SolutionKind};
use tricomi::geometry::{classify, default_eps_geo, source_from_b, PhysPoint, Source};
use tricomi::specfun::CutSide;
use tricomi::verify::{
    geometric_b_sequence, limit_study, pairing, residual_scan, BumpSpec, QuadSpec, ResidualForm,
};
use tricomi::TricomiError;

const EXIT_VERIFY_FAIL: i32 = 1;
const EXIT_BAD_ARGS: i32 = 2;
const EXIT_NUMERICAL: i32 = 3;

#[derive(Parser)]
#[command(name = "tricomi", version, about = "Evaluate and verify fundamental solutions of the mixed-type operator y u_xx + u_yy")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate one solution at one point
    Eval(EvalArgs),
    /// Sample a solution on a rectangular grid into a CSV file
    Grid(GridArgs),
    /// Distributional pairing <E, T phi> against the bump oracle
    Verify(VerifyArgs),
    /// Finite-difference residual suites in all operator forms
    Residual(ResidualArgs),
    /// Riemann-function boundary conditions
    Riemann(RiemannArgs),
    /// Pointwise limits as b tends to 0
    Limits(LimitsArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// Source depth (b <= 0)
    #[arg(long, allow_hyphen_values = true)]
    b: f64,
    #[arg(long, allow_hyphen_values = true)]
    x: f64,
    #[arg(long, allow_hyphen_values = true)]
    y: f64,
    /// E, EI, EII, EIII, EIV, ESHARP, FPLUS, FMINUS, RIEMANN, HOMOGENEOUS
    #[arg(long)]
    solution: String,
    /// json (default) or csv
    #[arg(long, default_value = "json")]
    format: String,
}

#[derive(Args)]
struct GridArgs {
    #[arg(long, allow_hyphen_values = true)]
    b: f64,
    #[arg(long)]
    solution: String,
    #[arg(long, allow_hyphen_values = true)]
    xmin: f64,
    #[arg(long, allow_hyphen_values = true)]
    xmax: f64,
    #[arg(long, allow_hyphen_values = true)]
    ymin: f64,
    #[arg(long, allow_hyphen_values = true)]
    ymax: f64,
    #[arg(long)]
    nx: usize,
    #[arg(long)]
    ny: usize,
    /// Output CSV path
    #[arg(long)]
    out: std::path::PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, allow_hyphen_values = true)]
    b: f64,
    #[arg(long)]
    solution: String,
    #[arg(long, allow_hyphen_values = true)]
    bump_cx: f64,
    #[arg(long, allow_hyphen_values = true)]
    bump_cy: f64,
    #[arg(long)]
    bump_r: f64,
    #[arg(long, default_value_t = 1.0)]
    bump_amp: f64,
    #[arg(long, default_value_t = 1e-2)]
    tol: f64,
    #[arg(long, default_value_t = 8)]
    cells: usize,
    #[arg(long, default_value_t = 12)]
    order: usize,
    #[arg(long, default_value_t = 3.0)]
    grading: f64,
}

#[derive(Args)]
struct ResidualArgs {
    #[arg(long, allow_hyphen_values = true)]
    b: f64,
    /// thyp, tadjoint, tphys, tell, or all
    #[arg(long, default_value = "all")]
    form: String,
    #[arg(long, default_value_t = 1e-3)]
    h: f64,
    #[arg(long, default_value_t = 1e-4)]
    tol: f64,
    #[arg(long, default_value_t = 100)]
    points: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct RiemannArgs {
    #[arg(long, allow_hyphen_values = true)]
    b: f64,
}

#[derive(Args)]
struct LimitsArgs {
    #[arg(long)]
    solution: String,
    #[arg(long, allow_hyphen_values = true)]
    x: f64,
    #[arg(long, allow_hyphen_values = true)]
    y: f64,
    #[arg(long, default_value_t = 6)]
    depth: usize,
}

#[derive(Serialize)]
struct Metric {
    name: String,
    value: f64,
    tolerance: f64,
}

#[derive(Serialize)]
struct RunReport {
    command: String,
    passed: bool,
    metrics: Vec<Metric>,
}

impl RunReport {
    fn new(command: &str, metrics: Vec<Metric>) -> Self {
        let passed = metrics.iter().all(|m| m.value <= m.tolerance);
        RunReport { command: command.to_string(), passed, metrics }
    }

    fn emit(self) -> i32 {
        println!("{}", serde_json::to_string_pretty(&self).expect("report serializes"));
        if self.passed {
            0
        } else {
            EXIT_VERIFY_FAIL
        }
    }
}

fn fail(code: i32, msg: impl std::fmt::Display) -> ! {
    eprintln!("error: {msg}");
    std::process::exit(code);
}

fn numerical_exit(e: &TricomiError) -> i32 {
    match e {
        TricomiError::Domain { .. } => EXIT_BAD_ARGS,
        _ => EXIT_NUMERICAL,
    }
}

fn parse_solution(s: &str) -> SolutionKind {
    let k = match s.to_ascii_uppercase().as_str() {
        "E" | "ERAW" => Some(SolutionKind::Eraw),
        "EI" => Some(SolutionKind::EI),
        "EII" => Some(SolutionKind::EII),
        "EIII" => Some(SolutionKind::EIII),
        "EIV" => Some(SolutionKind::EIV),
        "ESHARP" => Some(SolutionKind::ESharp),
        "ECONJ" => Some(SolutionKind::EConj),
        "EREAL" => Some(SolutionKind::EReal),
        "FPLUS" => Some(SolutionKind::FPlus),
        "FMINUS" => Some(SolutionKind::FMinus),
        "RIEMANN" => Some(SolutionKind::RiemannR),
        "HOMOGENEOUS" => Some(SolutionKind::HomogeneousU),
        _ => None,
    };
    k.unwrap_or_else(|| fail(EXIT_BAD_ARGS, format!("unknown solution kind '{s}'")))
}

fn make_source(b: f64) -> Source {
    source_from_b(b).unwrap_or_else(|e| fail(EXIT_BAD_ARGS, e))
}

fn threads() -> usize {
    std::env::var("TRICOMI_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or(1)
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.cmd {
        Cmd::Eval(a) => cmd_eval(a),
        Cmd::Grid(a) => cmd_grid(a),
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::Residual(a) => cmd_residual(a),
        Cmd::Riemann(a) => cmd_riemann(a),
        Cmd::Limits(a) => cmd_limits(a),
    };
    std::process::exit(code);
}

fn cmd_eval(a: EvalArgs) -> i32 {
    let kind = parse_solution(&a.solution);
    let s = make_source(a.b);
    let p = PhysPoint::new(a.x, a.y);
    let region = classify(p, &s, default_eps_geo(&s)).as_str();
    match eval_solution(kind, p, &s) {
        Ok(v) => {
            match a.format.as_str() {
                "json" => println!(
                    "{{\"x\":{},\"y\":{},\"re\":{},\"im\":{},\"region\":\"{region}\"}}",
                    a.x, a.y, v.re, v.im
                ),
                "csv" => println!("{},{},{},{},{region}", a.x, a.y, v.re, v.im),
                other => fail(EXIT_BAD_ARGS, format!("unknown format '{other}'")),
            }
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            numerical_exit(&e)
        }
    }
}

fn cmd_grid(a: GridArgs) -> i32 {
    if !(a.xmin < a.xmax && a.ymin < a.ymax && a.nx >= 2 && a.ny >= 2) {
        fail(EXIT_BAD_ARGS, "grid needs xmin < xmax, ymin < ymax and nx, ny >= 2");
    }
    let kind = parse_solution(&a.solution);
    let s = make_source(a.b);
    let eps = default_eps_geo(&s);
    let dx = (a.xmax - a.xmin) / a.nx as f64;
    let dy = (a.ymax - a.ymin) / a.ny as f64;
    let nthreads = threads().min(a.ny);

    // one row of samples at the j-th cell-center height
    let row = |j: usize| -> Result<String, TricomiError> {
        let y = a.ymin + (j as f64 + 0.5) * dy;
        let mut out = String::new();
        for i in 0..a.nx {
            let x = a.xmin + (i as f64 + 0.5) * dx;
            let p = PhysPoint::new(x, y);
            let region = classify(p, &s, eps).as_str();
            match eval_solution(kind, p, &s) {
                Ok(v) => out.push_str(&format!("{x},{y},{},{},{region}\n", v.re, v.im)),
                Err(TricomiError::SingularLocus { .. }) => {
                    // singular samples are emitted, not skipped, so plots show
                    // the characteristic curves as gaps
                    out.push_str(&format!("{x},{y},,,{region}\n"));
                }
                Err(e) => return Err(e),
            }
        }
        Ok(out)
    };

    let rows: Vec<Result<String, TricomiError>> = if nthreads <= 1 {
        (0..a.ny).map(row).collect()
    } else {
        let mut rows: Vec<Option<Result<String, TricomiError>>> = (0..a.ny).map(|_| None).collect();
        let chunk = a.ny.div_ceil(nthreads);
        std::thread::scope(|scope| {
            for (t, slot) in rows.chunks_mut(chunk).enumerate() {
                let row = &row;
                scope.spawn(move || {
                    for (off, cell) in slot.iter_mut().enumerate() {
                        *cell = Some(row(t * chunk + off));
                    }
                });
            }
        });
        rows.into_iter().map(|r| r.expect("all rows computed")).collect()
    };

    let mut file = String::from("x,y,re,im,region\n");
    for r in rows {
        match r {
            Ok(line) => file.push_str(&line),
            Err(e) => {
                eprintln!("error: {e}");
                return numerical_exit(&e);
            }
        }
    }
    if let Err(e) = std::fs::write(&a.out, file) {
        fail(EXIT_BAD_ARGS, format!("cannot write {}: {e}", a.out.display()));
    }
    0
}

fn cmd_verify(a: VerifyArgs) -> i32 {
    let kind = parse_solution(&a.solution);
    let s = make_source(a.b);
    let bump = BumpSpec::new(a.bump_cx, a.bump_cy, a.bump_r, a.bump_amp);
    let q = QuadSpec {
        base_cells_per_axis: a.cells,
        gauss_order: a.order,
        grading_exponent: a.grading,
        target_tol: a.tol,
    };
    let expect = match kind {
        SolutionKind::FPlus | SolutionKind::FMinus => bump.phi(PhysPoint::new(0.0, 0.0)),
        _ => bump.phi(PhysPoint::new(0.0, a.b)),
    };
    let rep = match pairing(kind, &s, &bump, &q) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return numerical_exit(&e);
        }
    };
    let denom = expect.abs().max(1e-12);
    let metrics = vec![
        Metric {
            name: "pairing_relative_error".into(),
            value: (rep.value.re - expect).abs() / denom,
            tolerance: a.tol,
        },
        Metric {
            name: "pairing_imaginary_part".into(),
            value: rep.value.im.abs(),
            tolerance: a.tol * denom,
        },
        Metric {
            name: "estimated_quadrature_error".into(),
            value: rep.estimated_error,
            tolerance: a.tol * (1.0 + rep.value.norm()),
        },
    ];
    RunReport::new("verify", metrics).emit()
}

fn cmd_residual(a: ResidualArgs) -> i32 {
    use rand::SeedableRng;
    let s = make_source(a.b);
    if s.b >= 0.0 {
        fail(EXIT_BAD_ARGS, "residual suites need b < 0");
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(a.seed);
    let forms: Vec<ResidualForm> = match a.form.as_str() {
        "all" => vec![ResidualForm::Thyp, ResidualForm::Tadjoint, ResidualForm::Tphys, ResidualForm::Tell],
        other => vec![ResidualForm::parse(other)
            .unwrap_or_else(|| fail(EXIT_BAD_ARGS, format!("unknown form '{other}'")))],
    };
    let mut metrics = Vec::new();
    for form in forms {
        let result = run_residual_suite(form, &s, &mut rng, a.points, a.h);
        match result {
            Ok(worst) => metrics.push(Metric {
                name: format!("{form:?}_max_normalized_residual").to_ascii_lowercase(),
                value: worst,
                tolerance: a.tol,
            }),
            Err(e) => {
                eprintln!("error: {e}");
                return numerical_exit(&e);
            }
        }
    }
    RunReport::new("residual", metrics).emit()
}

fn run_residual_suite(
    form: ResidualForm,
    s: &Source,
    rng: &mut rand_chacha::ChaCha8Rng,
    npoints: usize,
    h: f64,
) -> Result<f64, TricomiError> {
    use rand::Rng;
    let mut worst = 0.0f64;
    match form {
        ResidualForm::Thyp => {
            let points: Vec<(f64, f64)> = (0..npoints)
                .map(|_| (s.l0 + rng.gen_range(0.3..3.0), -s.l0 - rng.gen_range(0.3..3.0)))
                .collect();
            let field = |l: f64, m: f64| {
                tricomi::fundsol::eval_e_general(l, m, s.l0, -s.l0, CutSide::Below).map(|e| e.re)
            };
            for (r, &(l, m)) in residual_scan(form, field, &points, h)?.iter().zip(&points) {
                let scale = 1.0 + field(l, m)?.abs() / ((l - m) * (l - m));
                worst = worst.max(r.abs() / scale);
            }
        }
        ResidualForm::Tadjoint => {
            let points: Vec<(f64, f64)> = (0..npoints)
                .map(|_| loop {
                    let l = rng.gen_range(-0.9 * s.l0..0.95 * s.l0);
                    let m = rng.gen_range(-0.95 * s.l0..0.9 * s.l0);
                    if l - m > 0.2 * s.l0 {
                        break (l, m);
                    }
                })
                .collect();
            let field = |l: f64, m: f64| riemann_r(l, m, s.l0, -s.l0);
            for (r, &(l, m)) in residual_scan(form, field, &points, h)?.iter().zip(&points) {
                let scale = 1.0 + field(l, m)?.abs() / ((l - m) * (l - m));
                worst = worst.max(r.abs() / scale);
            }
        }
        ResidualForm::Tphys => {
            let points: Vec<(f64, f64)> = (0..npoints)
                .map(|_| (rng.gen_range(-2.0..2.0), rng.gen_range(0.3..2.5)))
                .collect();
            let field = |x: f64, y: f64| {
                eval_solution(SolutionKind::EII, PhysPoint::new(x, y), s).map(|e| e.im)
            };
            for (r, &(x, y)) in residual_scan(form, field, &points, h)?.iter().zip(&points) {
                let scale = 1.0 + field(x, y)?.abs();
                worst = worst.max(r.abs() / scale);
            }
        }
        ResidualForm::Tell => {
            let points: Vec<(f64, f64)> = (0..npoints)
                .map(|_| (rng.gen_range(-2.0..2.0), rng.gen_range(0.4..2.0)))
                .collect();
            let field = |x: f64, y: f64| {
                eval_solution(SolutionKind::EII, PhysPoint::new(x, y), s).map(|e| e.re)
            };
            for (r, &(x, y)) in residual_scan(form, field, &points, h)?.iter().zip(&points) {
                let scale = 1.0 + field(x, y)?.abs();
                worst = worst.max(r.abs() / scale);
            }
        }
    }
    Ok(worst)
}

fn cmd_riemann(a: RiemannArgs) -> i32 {
    let s = make_source(a.b);
    if s.b >= 0.0 {
        fail(EXIT_BAD_ARGS, "the Riemann-function checks need b < 0");
    }
    let (l0, m0) = (s.l0, -s.l0);
    let corner = match riemann_r(l0, m0, l0, m0) {
        Ok(v) => (v - 1.0).abs(),
        Err(e) => {
            eprintln!("error: {e}");
            return numerical_exit(&e);
        }
    };
    // R(l, m0) = ((l - m0)/(l0 - m0))^{1/6} along the lower edge
    let mut edge_err = 0.0f64;
    for i in 1..=20 {
        let l = m0 + (l0 - m0) * (0.2 + 1.3 * i as f64 / 20.0);
        let r = riemann_r(l, m0, l0, m0).unwrap();
        edge_err = edge_err.max((r - ((l - m0) / (l0 - m0)).powf(1.0 / 6.0)).abs());
    }
    // convergence order of the first-derivative boundary conditions
    let order_shortfall = |err_h: f64, err_h2: f64| {
        let order = (err_h / err_h2).log2();
        (1.9 - order).max(0.0)
    };
    let dl_err = |h: f64| {
        let mut worst = 0.0f64;
        for l in [0.8 * l0, 1.2 * l0, 1.6 * l0] {
            let fd =
                (riemann_r(l + h, m0, l0, m0).unwrap() - riemann_r(l - h, m0, l0, m0).unwrap())
                    / (2.0 * h);
            worst = worst.max((fd - riemann_r(l, m0, l0, m0).unwrap() / (6.0 * (l - m0))).abs());
        }
        worst
    };
    let dm_err = |h: f64| {
        let mut worst = 0.0f64;
        for m in [-0.8 * l0, -1.2 * l0, -1.6 * l0] {
            let fd =
                (riemann_r(l0, m + h, l0, m0).unwrap() - riemann_r(l0, m - h, l0, m0).unwrap())
                    / (2.0 * h);
            worst = worst.max((fd + riemann_r(l0, m, l0, m0).unwrap() / (6.0 * (l0 - m))).abs());
        }
        worst
    };
    let metrics = vec![
        Metric { name: "corner_value_deviation".into(), value: corner, tolerance: 1e-14 },
        Metric { name: "edge_value_max_error".into(), value: edge_err, tolerance: 1e-12 },
        Metric {
            name: "edge_dl_order_shortfall".into(),
            value: order_shortfall(dl_err(1e-3), dl_err(5e-4)),
            tolerance: 0.0,
        },
        Metric {
            name: "edge_dm_order_shortfall".into(),
            value: order_shortfall(dm_err(1e-3), dm_err(5e-4)),
            tolerance: 0.0,
        },
    ];
    RunReport::new("riemann", metrics).emit()
}

fn cmd_limits(a: LimitsArgs) -> i32 {
    let kind = parse_solution(&a.solution);
    let devs = match limit_study(kind, PhysPoint::new(a.x, a.y), &geometric_b_sequence(a.depth)) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {e}");
            return numerical_exit(&e);
        }
    };
    let violations = devs
        .windows(2)
        .filter(|w| w[1] > w[0] || (w[1] == w[0] && w[0] != 0.0))
        .count();
    let final_over_initial = devs[devs.len() - 1] / devs[0].max(f64::MIN_POSITIVE);
    let metrics = vec![
        Metric { name: "monotonicity_violations".into(), value: violations as f64, tolerance: 0.0 },
        Metric { name: "final_over_initial".into(), value: final_over_initial, tolerance: 0.1 },
    ];
    RunReport::new("limits", metrics).emit()
}
