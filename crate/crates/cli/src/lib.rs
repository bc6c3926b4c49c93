//! The `twoxtwo` command line.
//!
//! [`run`] does all the work and returns the exit code, so tests can drive
//! the commands in-process. Exit codes: 0 success, 1 analysis,
//! verification or I/O failure, 2 usage error.

mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;
use twoxtwo::classify::census;
use twoxtwo::distribution::{JointDistribution, MarginalPair};
use twoxtwo::embedding::embed;
use twoxtwo::game::{Game, Player};
use twoxtwo::graphs::{br_graph, ordinal_graph};
use twoxtwo::oracle::{self, CheckConfig, Solver};
use twoxtwo::rational::Rational;
use twoxtwo::render::{
    parse_heatmap, parse_points, render_figure, Color, EmbeddingPlot, FigureKind, FigureSpec, Format, Payload,
    RenderError, StyleOptions,
};

pub use report::analysis_report;

pub const EXIT_SUCCESS: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "twoxtwo", version, about = "Analyse and draw 2x2 normal-form games")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a report of a game's graphs, classes, equilibria and embedding.
    Analyze {
        /// Eight payoffs: row player row-major, then column player row-major.
        #[arg(allow_negative_numbers = true, value_name = "PAYOFF")]
        payoffs: Vec<String>,
    },
    /// Write a figure as TikZ or SVG.
    Render(Box<RenderArgs>),
    /// Count ordinal games, partial-ordinal classes and best-response classes.
    Census,
    /// Run the oracle checks on seeded random games.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        /// Grid resolution for the Nash checks.
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(i64).range(1..))]
        grid: i64,
    },
}

#[derive(Debug, Args)]
struct RenderArgs {
    /// ordgraph, brgraph, table, joint, rowcond, colcond, marginal,
    /// jointmarginal, polytope or embedding.
    #[arg(long)]
    kind: String,
    /// tikz or svg; inferred from the output extension when omitted.
    #[arg(long)]
    format: Option<String>,
    /// Output file; standard output when omitted.
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
    /// Angle pairs to plot (embedding only).
    #[arg(long)]
    points: Option<PathBuf>,
    /// Heatmap underlay (embedding only).
    #[arg(long)]
    matrix: Option<PathBuf>,
    /// Figure side in points (default 120).
    #[arg(long)]
    size: Option<f64>,
    /// Line width in points (default 0.8).
    #[arg(long)]
    stroke: Option<f64>,
    /// Row player colour: a name or #rrggbb.
    #[arg(long)]
    row_color: Option<String>,
    /// Column player colour: a name or #rrggbb.
    #[arg(long)]
    col_color: Option<String>,
    /// Polytope camera azimuth in degrees.
    #[arg(long)]
    azimuth: Option<f64>,
    /// Polytope camera elevation in degrees, strictly between -90 and 90.
    #[arg(long)]
    elevation: Option<f64>,
    /// Omit corner and axis labels.
    #[arg(long)]
    no_axes_labels: bool,
    #[arg(long)]
    no_tick_labels: bool,
    /// Omit class names on the embedding plot.
    #[arg(long)]
    no_best_response_names: bool,
    /// Payoffs (8), a joint distribution (4) or marginals (2), by kind.
    #[arg(allow_negative_numbers = true, value_name = "VALUE")]
    values: Vec<String>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Failure(_) => EXIT_FAILURE,
        }
    }
}

impl From<twoxtwo::error::GameError> for CliError {
    fn from(e: twoxtwo::error::GameError) -> CliError {
        CliError::Usage(e.to_string())
    }
}

impl From<RenderError> for CliError {
    fn from(e: RenderError) -> CliError {
        CliError::Usage(e.to_string())
    }
}

fn parse_game(values: &[String]) -> Result<Game, CliError> {
    if values.len() != 8 {
        return Err(CliError::Usage(format!("expected 8 payoffs, found {}", values.len())));
    }
    Ok(Game::parse_flat(values)?)
}

fn parse_rationals(values: &[String]) -> Result<Vec<Rational>, CliError> {
    values
        .iter()
        .map(|v| v.parse::<Rational>().map_err(|e| CliError::Usage(e.to_string())))
        .collect()
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Failure(format!("cannot read {}: {e}", path.display())))
}

fn style_from(args: &RenderArgs) -> Result<StyleOptions, CliError> {
    let mut style = StyleOptions::default();
    if let Some(size) = args.size {
        style.size_pt = size;
    }
    if let Some(stroke) = args.stroke {
        style.stroke_width_pt = stroke;
    }
    for (slot, text) in [(0, &args.row_color), (1, &args.col_color)] {
        if let Some(text) = text {
            style.player_colors[slot] =
                Color::parse(text).ok_or_else(|| CliError::Usage(format!("unknown color `{text}`")))?;
        }
    }
    if let Some(az) = args.azimuth {
        style.camera_azimuth_deg = az;
    }
    if let Some(el) = args.elevation {
        style.camera_elevation_deg = el;
    }
    style.show_axes_labels = !args.no_axes_labels;
    style.show_tick_labels = !args.no_tick_labels;
    style.show_best_response_names = !args.no_best_response_names;
    style.validate()?;
    Ok(style)
}

fn joint_from(values: &[String], kind: FigureKind) -> Result<JointDistribution, CliError> {
    if values.len() != 4 {
        return Err(CliError::Usage(format!("{kind} expects 4 joint probabilities, found {}", values.len())));
    }
    Ok(JointDistribution::parse(values)?)
}

fn payload_from(kind: FigureKind, args: &RenderArgs) -> Result<Payload, CliError> {
    let values = &args.values;
    if kind != FigureKind::EmbeddingScene && (args.points.is_some() || args.matrix.is_some()) {
        return Err(CliError::Usage(format!("--points and --matrix apply only to the embedding kind, not {kind}")));
    }
    Ok(match kind {
        FigureKind::OrdGraph => {
            let game = parse_game(values)?;
            Payload::OrdGraph(Player::ALL.iter().map(|&p| ordinal_graph(&game, p)).collect())
        }
        FigureKind::BrGraph => Payload::BrGraph(br_graph(&parse_game(values)?)),
        FigureKind::PayoffTable => Payload::PayoffTable(parse_game(values)?),
        FigureKind::PolytopeScene => Payload::PolytopeScene(parse_game(values)?),
        FigureKind::JointGlyph => Payload::JointGlyph(joint_from(values, kind)?),
        FigureKind::RowCondGlyph => Payload::RowCondGlyph(joint_from(values, kind)?),
        FigureKind::ColCondGlyph => Payload::ColCondGlyph(joint_from(values, kind)?),
        FigureKind::JointMarginalGlyph => Payload::JointMarginalGlyph(joint_from(values, kind)?),
        FigureKind::MarginalGlyph => match values.len() {
            2 => {
                let v = parse_rationals(values)?;
                Payload::MarginalGlyph(MarginalPair::new(v[0].clone(), v[1].clone())?)
            }
            4 => Payload::MarginalGlyph(joint_from(values, kind)?.marginals()),
            n => {
                return Err(CliError::Usage(format!(
                    "marginal expects 2 marginals or 4 joint probabilities, found {n}"
                )))
            }
        },
        FigureKind::EmbeddingScene => {
            let mut points = Vec::new();
            if !values.is_empty() {
                points.extend(embed(&parse_game(values)?).angles());
            }
            if let Some(path) = &args.points {
                points.extend(parse_points(&read_file(path)?)?);
            }
            let heatmap = args.matrix.as_deref().map(|p| read_file(p).and_then(|t| Ok(parse_heatmap(&t)?))).transpose()?;
            Payload::EmbeddingScene(EmbeddingPlot::new(points, heatmap))
        }
    })
}

fn format_from(args: &RenderArgs) -> Result<Format, CliError> {
    if let Some(f) = &args.format {
        return Ok(f.parse()?);
    }
    match args.output.as_deref().and_then(Path::extension).and_then(|e| e.to_str()) {
        Some("tex") => Ok(Format::Tikz),
        _ => Ok(Format::Svg),
    }
}

fn cmd_render(args: &RenderArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let kind: FigureKind = args.kind.parse()?;
    let format = format_from(args)?;
    let style = style_from(args)?;
    let spec = FigureSpec::with_style(payload_from(kind, args)?, style);
    let text = render_figure(&spec, format)?;
    match &args.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Failure(format!("cannot write {}: {e}", path.display()))),
        None => out.write_all(text.as_bytes()).map_err(|e| CliError::Failure(e.to_string())),
    }
}

fn cmd_census(out: &mut dyn Write) -> Result<(), CliError> {
    for (label, count) in census().rows() {
        writeln!(out, "{label} {count}").map_err(|e| CliError::Failure(e.to_string()))?;
    }
    Ok(())
}

/// Runs the oracle suite on `trials` games drawn from `seed`. Prints
/// `PASS n/n`, or the first counterexample and `FAIL`.
pub fn verify(solver: &dyn Solver, seed: u64, trials: u64, grid: i64, out: &mut dyn Write) -> Result<(), CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let config = CheckConfig { grid, ..CheckConfig::default() };
    let io = |e: std::io::Error| CliError::Failure(e.to_string());
    for trial in 0..trials {
        let game = oracle::random_game(&mut rng);
        if let Err(counterexample) = oracle::check_game(solver, &game, config, &mut rng) {
            writeln!(out, "counterexample {counterexample}").map_err(io)?;
            writeln!(out, "FAIL {trial}/{trials}").map_err(io)?;
            return Err(CliError::Failure(format!("oracle disagreement on game {}", counterexample.game)));
        }
    }
    writeln!(out, "PASS {trials}/{trials}").map_err(io)?;
    Ok(())
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze { payoffs } => {
            let game = parse_game(&payoffs)?;
            out.write_all(analysis_report(&game).as_bytes()).map_err(|e| CliError::Failure(e.to_string()))
        }
        Command::Render(args) => cmd_render(&args, out),
        Command::Census => cmd_census(out),
        Command::Verify { seed, trials, grid } => verify(&oracle::Library, seed, trials, grid, out),
    }
}

const VALUE_OPTIONS: [&str; 15] = [
    "--kind", "--format", "-o", "--output", "--points", "--matrix", "--size", "--stroke", "--row-color",
    "--col-color", "--azimuth", "--elevation", "--seed", "--trials", "--grid",
];

/// Moves numeric literals of `analyze` and `render` behind a `--` so that
/// negative fractions such as `-1/2` are not taken for flags and options
/// may follow the values.
fn separate_values(args: Vec<OsString>) -> Vec<OsString> {
    let text: Vec<Option<&str>> = args.iter().map(|a| a.to_str()).collect();
    let Some(sub) = text.iter().position(|t| matches!(t, Some("analyze" | "render"))) else {
        return args;
    };
    if text.contains(&Some("--")) {
        return args;
    }
    let mut head: Vec<OsString> = args[..=sub].to_vec();
    let mut values = Vec::new();
    let mut i = sub + 1;
    while i < args.len() {
        match text[i] {
            Some(t) if VALUE_OPTIONS.contains(&t) => {
                head.extend(args[i..(i + 2).min(args.len())].iter().cloned());
                i += 2;
                continue;
            }
            Some(t) if t.parse::<Rational>().is_ok() => values.push(args[i].clone()),
            _ => head.push(args[i].clone()),
        }
        i += 1;
    }
    if !values.is_empty() {
        head.push("--".into());
        head.extend(values);
    }
    head
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = separate_values(args.into_iter().map(Into::into).collect());
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_SUCCESS };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(()) => EXIT_SUCCESS,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
