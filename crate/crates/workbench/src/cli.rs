//! Command-line front end. `run` writes to any sink so tests can drive it
//! in-process; `main` maps errors to exit codes.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fmt;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rider_core::{
    augment, closed_form, corner_trajectories, crossing_points, denominator, detect_family, enumerate_rigid_cycles,
    minimal_period, trace, Board, Family, MoveType, PeriodOutcome, Point2, Rider, Trajectory,
    DEFAULT_MAX_STEPS,
};
use serde::Serialize;

use crate::config::{parse_board_json, parse_config, BoardSpec, ConfigError};
use crate::float_sim::{rider_slopes, simulate_float, Pt};
use crate::formats;
use crate::parallel::count_series_parallel;
use crate::render::{render_svg, RenderSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Validation(String),
    Inconclusive(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Inconclusive(_) => 3,
            CliError::Internal(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(s) => write!(f, "error: {s}"),
            CliError::Inconclusive(s) => write!(f, "inconclusive: {s}"),
            CliError::Internal(s) => write!(f, "internal error: {s}"),
        }
    }
}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        CliError::Validation(e.to_string())
    }
}

fn io_err(e: std::io::Error) -> CliError {
    CliError::Internal(format!("write failed: {e}"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Svg,
}

#[derive(Debug, Parser)]
#[command(name = "riders", about = "Exact and floating-point experiments with two-move riders on convex boards")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone, Default)]
pub struct Common {
    /// JSON problem configuration; other flags override its fields.
    #[arg(long)]
    pub config: Option<String>,
    /// Two moves, e.g. `--moves 2,1 1,-2`.
    #[arg(long, allow_hyphen_values = true)]
    pub moves: Option<String>,
    /// `square` or a path to a JSON board document.
    #[arg(long)]
    pub board: Option<String>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long = "n-max")]
    pub n_max: Option<usize>,
    /// Boundary point `x,y` with `p/q` or decimal coordinates.
    #[arg(long, allow_hyphen_values = true)]
    pub start: Option<String>,
    #[arg(long = "first-move")]
    pub first_move: Option<u8>,
    #[arg(long = "max-steps")]
    pub max_steps: Option<usize>,
    #[arg(long)]
    pub out: Option<String>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Add floating-point approximations, labelled as such.
    #[arg(long)]
    pub decimal: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact trajectory from `--start`.
    Simulate(Common),
    /// Floating-point orbit with distances to a limit set.
    FloatSim {
        #[command(flatten)]
        common: Common,
        /// Real slopes `m1,m2` instead of the moves' slopes.
        #[arg(long, allow_hyphen_values = true)]
        slopes: Option<String>,
    },
    /// Trajectories through every corner.
    CornerTrajectories(Common),
    /// Rigid cycles up to `--max-len` points.
    RigidCycles {
        #[command(flatten)]
        common: Common,
        #[arg(long = "max-len", default_value_t = 8)]
        max_len: usize,
    },
    /// Denominator of the counting quasipolynomial with every contribution.
    Denominator(Common),
    /// Closed-form denominator for recognised move families.
    ClosedForm(Common),
    /// Nonattacking placement counts for `n = 0..=n_max`.
    Count(Common),
    /// Minimal period of the counting quasipolynomial.
    Period(Common),
    /// Fitted period against the denominator.
    Conjecture(Common),
    /// SVG of trajectories, augmentations, crossings and rigid cycles.
    Render {
        #[command(flatten)]
        common: Common,
        /// Draw augmentations and their crossing points.
        #[arg(long)]
        augment: bool,
        /// Highlight rigid cycles up to this many points.
        #[arg(long = "rigid-cycles")]
        rigid_cycles: Option<usize>,
    },
}

/// Flags merged over an optional configuration file.
struct Problem {
    board: Board,
    rider: Option<Rider>,
    q: Option<usize>,
    n_max: Option<usize>,
    max_steps: usize,
    start: Option<String>,
    first_move: MoveType,
    out: Option<String>,
    format: Option<Format>,
    decimal: bool,
}

impl Problem {
    fn rider(&self) -> Result<Rider, CliError> {
        self.rider.ok_or_else(|| CliError::Validation("moves are required (--moves or --config)".into()))
    }

    fn q(&self) -> Result<usize, CliError> {
        self.q.ok_or_else(|| CliError::Validation("--q is required".into()))
    }

    fn n_max(&self) -> Result<usize, CliError> {
        self.n_max.ok_or_else(|| CliError::Validation("--n-max is required".into()))
    }

    fn exact_start(&self) -> Result<Point2, CliError> {
        let s = self.start.as_deref().ok_or_else(|| CliError::Validation("--start is required".into()))?;
        s.parse::<Point2>().map_err(|e| CliError::Validation(format!("bad start {s:?}: {e}")))
    }

    fn format(&self, default: Format, allowed: &[Format]) -> Result<Format, CliError> {
        let f = self.format.unwrap_or(default);
        if allowed.contains(&f) {
            Ok(f)
        } else {
            Err(CliError::Validation(format!("format {f:?} is not available here")))
        }
    }
}

fn parse_moves(v: &str) -> Result<Rider, CliError> {
    let parts: Vec<&str> = v.split_whitespace().collect();
    if parts.len() != 2 {
        return Err(CliError::Validation("--moves needs two moves c1,d1 c2,d2".into()));
    }
    let m = |s: &str| s.parse().map_err(|e| CliError::Validation(format!("bad move {s:?}: {e}")));
    Rider::new(m(parts[0])?, m(parts[1])?).map_err(|e| CliError::from(ConfigError::from(e)))
}

fn read_file(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Validation(format!("cannot read {path}: {e}")))
}

fn resolve(c: &Common) -> Result<Problem, CliError> {
    let cfg = c.config.as_deref().map(|p| read_file(p).and_then(|t| Ok(parse_config(&t)?))).transpose()?;
    let board = match c.board.as_deref() {
        Some("square") => Board::square(),
        Some(path) => parse_board_json(&read_file(path)?)?.build()?,
        None => cfg.as_ref().map(|k| k.board.clone()).unwrap_or_else(|| BoardSpec::Square.build().expect("square")),
    };
    let rider = match &c.moves {
        Some(v) => Some(parse_moves(v)?),
        None => cfg.as_ref().map(|k| k.rider),
    };
    let first_move = match c.first_move {
        Some(n) => MoveType::from_number(n).ok_or_else(|| CliError::Validation(format!("--first-move must be 1 or 2, got {n}")))?,
        None => cfg.as_ref().and_then(|k| k.first_move).unwrap_or(MoveType::First),
    };
    let start = c.start.clone().or_else(|| cfg.as_ref().and_then(|k| k.start.as_ref()).map(|p| format!("{},{}", p.x, p.y)));
    Ok(Problem {
        board,
        rider,
        q: c.q.or(cfg.as_ref().and_then(|k| k.q)),
        n_max: c.n_max.or(cfg.as_ref().and_then(|k| k.n_max)),
        max_steps: c.max_steps.or(cfg.as_ref().and_then(|k| k.max_steps)).unwrap_or(DEFAULT_MAX_STEPS),
        start,
        first_move,
        out: c.out.clone().or(cfg.as_ref().and_then(|k| k.out.clone())),
        format: c.format,
        decimal: c.decimal,
    })
}

fn emit(p: &Problem, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match &p.out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Validation(format!("cannot write {path}: {e}"))),
        None => stdout.write_all(text.as_bytes()).map_err(io_err),
    }
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializes") + "\n"
}

fn parse_real(s: &str) -> Result<f64, CliError> {
    let bad = || CliError::Validation(format!("bad number {s:?}"));
    if s.contains('/') {
        s.parse::<rider_core::Rational>().map(|r| r.to_f64()).map_err(|_| bad())
    } else {
        s.trim().parse::<f64>().map_err(|_| bad())
    }
}

fn parse_real_pair(s: &str) -> Result<(f64, f64), CliError> {
    let (a, b) = s.split_once(',').ok_or_else(|| CliError::Validation(format!("expected two values in {s:?}")))?;
    Ok((parse_real(a)?, parse_real(b)?))
}

fn trajectories_out(p: &Problem, rider: &Rider, ts: &[Trajectory]) -> Result<String, CliError> {
    Ok(match p.format(Format::Json, &[Format::Json, Format::Text, Format::Svg])? {
        Format::Text => ts.iter().map(|t| formats::trajectory_text(rider, t, p.decimal)).collect::<Vec<_>>().join("\n"),
        Format::Svg => render_svg(&p.board, &RenderSpec { trajectories: ts.to_vec(), ..RenderSpec::default() }),
        _ => formats::trajectories_json(rider, ts, p.decimal),
    })
}

fn looks_like_move(s: &str) -> bool {
    s.split_whitespace().all(|m| m.split_once(',').is_some_and(|(c, d)| c.parse::<i64>().is_ok() && d.parse::<i64>().is_ok()))
}

/// `--moves 2,1 1,-2` spans two tokens, and `1,-2` must not be mistaken
/// for a flag; folds the move tokens into one `--moves=...` argument.
fn fold_moves(args: Vec<OsString>) -> Vec<OsString> {
    let mut out = Vec::with_capacity(args.len());
    let mut it = args.into_iter().peekable();
    while let Some(a) = it.next() {
        if a != "--moves" {
            out.push(a);
            continue;
        }
        let mut moves = Vec::new();
        while moves.len() < 2 {
            match it.peek().and_then(|n| n.to_str()) {
                Some(n) if looks_like_move(n) => {
                    moves.push(n.to_string());
                    it.next();
                }
                _ => break,
            }
        }
        if moves.is_empty() {
            out.push(a);
        } else {
            out.push(format!("--moves={}", moves.join(" ")).into());
        }
    }
    out
}

/// Runs one command line (including the program name).
pub fn run<I, T>(args: I, stdout: &mut dyn Write) -> Result<(), CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = fold_moves(args.into_iter().map(Into::into).collect());
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion) => {
            return stdout.write_all(e.to_string().as_bytes()).map_err(io_err);
        }
        Err(e) => return Err(CliError::Validation(e.to_string())),
    };
    match cli.command {
        Command::Simulate(c) => {
            let p = resolve(&c)?;
            let rider = p.rider()?;
            let start = p.exact_start()?;
            let t = trace(&p.board, &rider, &start, p.first_move, p.max_steps).map_err(|e| CliError::Validation(e.to_string()))?;
            let text = match p.format(Format::Text, &[Format::Json, Format::Text, Format::Svg])? {
                Format::Text => formats::trajectory_text(&rider, &t, p.decimal),
                _ => trajectories_out(&p, &rider, &[t])?,
            };
            emit(&p, &text, stdout)
        }
        Command::FloatSim { common, slopes } => {
            let p = resolve(&common)?;
            let slopes = match slopes {
                Some(s) => parse_real_pair(&s)?,
                None => rider_slopes(&p.rider()?),
            };
            let start: Pt = match &p.start {
                Some(s) => parse_real_pair(s)?,
                None => p.board.corners()[0].to_f64(),
            };
            let path = simulate_float(&p.board, slopes, start, p.first_move, p.max_steps, None);
            let text = match p.format(Format::Csv, &[Format::Csv, Format::Svg])? {
                Format::Svg => render_svg(&p.board, &RenderSpec { float_paths: vec![path], ..RenderSpec::default() }),
                _ => formats::float_path_csv(&path),
            };
            emit(&p, &text, stdout)
        }
        Command::CornerTrajectories(c) => {
            let p = resolve(&c)?;
            let rider = p.rider()?;
            let ts = corner_trajectories(&p.board, &rider, p.max_steps);
            emit(&p, &trajectories_out(&p, &rider, &ts)?, stdout)
        }
        Command::RigidCycles { common, max_len } => {
            let p = resolve(&common)?;
            let rider = p.rider()?;
            let cycles = enumerate_rigid_cycles(&p.board, &rider, max_len);
            let text = match p.format(Format::Json, &[Format::Json, Format::Svg])? {
                Format::Svg => render_svg(
                    &p.board,
                    &RenderSpec {
                        trajectories: cycles.iter().map(|c| c.trajectory.clone()).collect(),
                        rigid_cycles: cycles.iter().map(|c| c.configuration.clone()).collect(),
                        ..RenderSpec::default()
                    },
                ),
                _ => formats::rigid_cycles_json(&cycles, max_len, p.decimal),
            };
            emit(&p, &text, stdout)
        }
        Command::Denominator(c) => {
            let p = resolve(&c)?;
            let report = denominator(&p.board, &p.rider()?, p.q()?);
            let text = match p.format(Format::Json, &[Format::Json, Format::Csv])? {
                Format::Csv => formats::denominator_csv(&report),
                _ => formats::denominator_json(&report, p.decimal),
            };
            emit(&p, &text, stdout)
        }
        Command::ClosedForm(c) => {
            let p = resolve(&c)?;
            p.format(Format::Json, &[Format::Json])?;
            let rider = p.rider()?;
            let q = p.q()?;
            let family = detect_family(&rider).ok_or_else(|| CliError::Validation("no closed form for these moves".into()))?;
            let value = closed_form(&rider, q).ok_or_else(|| CliError::Validation("no closed form for these moves".into()))?;
            #[derive(Serialize)]
            struct Doc {
                family: &'static str,
                q: usize,
                denominator: String,
            }
            let family = match family {
                Family::Inclined { .. } => "inclined",
                Family::Orthogonal { .. } => "orthogonal",
                Family::Mirror { .. } => "mirror",
            };
            emit(&p, &json(&Doc { family, q, denominator: value.to_string() }), stdout)
        }
        Command::Count(c) => {
            let p = resolve(&c)?;
            let series = count_series_parallel(&p.rider()?, p.q()?, p.n_max()?);
            let text = match p.format(Format::Csv, &[Format::Csv, Format::Json])? {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Doc {
                        q: usize,
                        values: Vec<(usize, String)>,
                    }
                    json(&Doc { q: series.q, values: series.values.iter().map(|(n, u)| (*n, u.to_string())).collect() })
                }
                _ => formats::count_series_csv(&series),
            };
            emit(&p, &text, stdout)
        }
        Command::Period(c) => {
            let p = resolve(&c)?;
            p.format(Format::Json, &[Format::Json])?;
            let series = count_series_parallel(&p.rider()?, p.q()?, p.n_max()?);
            match minimal_period(&series.values, 2 * series.q).map_err(|e| CliError::Inconclusive(e.to_string()))? {
                PeriodOutcome::Found(fit) => emit(&p, &formats::fit_json(&fit), stdout),
                PeriodOutcome::Inconclusive { max_tried, required_n_max } => Err(CliError::Inconclusive(format!(
                    "no period up to {max_tried} fits; the next needs n_max >= {required_n_max}"
                ))),
            }
        }
        Command::Conjecture(c) => {
            let p = resolve(&c)?;
            p.format(Format::Json, &[Format::Json])?;
            if !p.board.corners().eq(Board::square().corners()) {
                return Err(CliError::Validation("counting is defined on the square board only".into()));
            }
            let series = count_series_parallel(&p.rider()?, p.q()?, p.n_max()?);
            match rider_core::conjecture_report(&series) {
                Ok(r) => emit(&p, &formats::conjecture_json(&r), stdout),
                Err(e) => Err(CliError::Inconclusive(e.to_string())),
            }
        }
        Command::Render { common, augment: with_aug, rigid_cycles } => {
            let p = resolve(&common)?;
            p.format(Format::Svg, &[Format::Svg])?;
            let rider = p.rider()?;
            let trajectories = match &p.start {
                Some(_) => vec![trace(&p.board, &rider, &p.exact_start()?, p.first_move, p.max_steps)
                    .map_err(|e| CliError::Validation(e.to_string()))?],
                None => corner_trajectories(&p.board, &rider, p.max_steps),
            };
            let mut spec = RenderSpec { trajectories, ..RenderSpec::default() };
            if with_aug {
                let augs: Vec<_> = spec.trajectories.iter().map(|t| augment(&p.board, &rider, t)).collect();
                let mut seen = BTreeSet::new();
                for i in 0..augs.len() {
                    for j in i..augs.len() {
                        for c in crossing_points(&p.board, &augs[i], i, &augs[j], j) {
                            if seen.insert((c.location.x.clone(), c.location.y.clone())) {
                                spec.crossings.push(c.location);
                            }
                        }
                    }
                }
                spec.augmentations = augs;
            }
            if let Some(len) = rigid_cycles {
                spec.rigid_cycles = enumerate_rigid_cycles(&p.board, &rider, len).into_iter().map(|c| c.configuration).collect();
            }
            emit(&p, &render_svg(&p.board, &spec), stdout)
        }
    }
}
