//! Deterministic TikZ and SVG figures.
//!
//! Every figure is first built as a [`Scene`] of tagged primitives, then
//! emitted by one of the two backends. Output depends only on the inputs.

mod data;
mod embedding_plot;
mod figures;
mod number;
mod polytope;
mod scene;
pub mod svg;
pub mod tikz;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::distribution::{JointDistribution, MarginalPair};
use crate::embedding::EmbeddingPoint;
use crate::game::Game;
use crate::graphs::{BrGraph, OrdinalGraph};

pub use data::{parse_heatmap, parse_points, write_heatmap, write_points, Heatmap};
pub use embedding_plot::EmbeddingPlot;
pub use number::fmt_num;
pub use polytope::{Camera, PolytopeScene};
pub use scene::{Anchor, Color, Fill, Item, Point, Role, Scene, Shape, Stroke};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("unsupported figure: {0}")]
    Unsupported(String),
    #[error("format error: {0}")]
    Format(String),
    #[error("invalid style: {0}")]
    Style(String),
}

pub type Result<T, E = RenderError> = std::result::Result<T, E>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    Tikz,
    Svg,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Tikz => "tex",
            Format::Svg => "svg",
        }
    }
}

impl FromStr for Format {
    type Err = RenderError;

    fn from_str(s: &str) -> Result<Format> {
        match s.to_ascii_lowercase().as_str() {
            "tikz" | "tex" => Ok(Format::Tikz),
            "svg" => Ok(Format::Svg),
            _ => Err(RenderError::Unsupported(format!("unknown format `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StyleOptions {
    pub size_pt: f64,
    pub stroke_width_pt: f64,
    /// Row, then column.
    pub player_colors: [Color; 2],
    pub show_axes_labels: bool,
    pub show_tick_labels: bool,
    pub show_best_response_names: bool,
    pub camera_azimuth_deg: f64,
    pub camera_elevation_deg: f64,
}

impl Default for StyleOptions {
    fn default() -> StyleOptions {
        StyleOptions {
            size_pt: 120.0,
            stroke_width_pt: 0.8,
            player_colors: [Color::BLACK, Color::GRAY],
            show_axes_labels: true,
            show_tick_labels: true,
            show_best_response_names: true,
            camera_azimuth_deg: Camera::DEFAULT_AZIMUTH_DEG,
            camera_elevation_deg: Camera::DEFAULT_ELEVATION_DEG,
        }
    }
}

impl StyleOptions {
    pub fn validate(&self) -> Result<()> {
        if !(self.size_pt.is_finite() && self.size_pt > 0.0) {
            return Err(RenderError::Style(format!("size must be positive, got {}", self.size_pt)));
        }
        if !(self.stroke_width_pt.is_finite() && self.stroke_width_pt > 0.0) {
            return Err(RenderError::Style(format!(
                "stroke width must be positive, got {}",
                self.stroke_width_pt
            )));
        }
        if !self.camera_azimuth_deg.is_finite()
            || !(self.camera_elevation_deg.is_finite() && self.camera_elevation_deg.abs() < 90.0)
        {
            return Err(RenderError::Style("camera elevation must lie strictly between -90 and 90".into()));
        }
        Ok(())
    }

    pub fn row_color(&self) -> Color {
        self.player_colors[0]
    }

    pub fn col_color(&self) -> Color {
        self.player_colors[1]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FigureKind {
    OrdGraph,
    BrGraph,
    PayoffTable,
    JointGlyph,
    RowCondGlyph,
    ColCondGlyph,
    MarginalGlyph,
    JointMarginalGlyph,
    PolytopeScene,
    EmbeddingScene,
}

impl FigureKind {
    pub const ALL: [FigureKind; 10] = [
        FigureKind::OrdGraph,
        FigureKind::BrGraph,
        FigureKind::PayoffTable,
        FigureKind::JointGlyph,
        FigureKind::RowCondGlyph,
        FigureKind::ColCondGlyph,
        FigureKind::MarginalGlyph,
        FigureKind::JointMarginalGlyph,
        FigureKind::PolytopeScene,
        FigureKind::EmbeddingScene,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FigureKind::OrdGraph => "ordgraph",
            FigureKind::BrGraph => "brgraph",
            FigureKind::PayoffTable => "table",
            FigureKind::JointGlyph => "joint",
            FigureKind::RowCondGlyph => "rowcond",
            FigureKind::ColCondGlyph => "colcond",
            FigureKind::MarginalGlyph => "marginal",
            FigureKind::JointMarginalGlyph => "jointmarginal",
            FigureKind::PolytopeScene => "polytope",
            FigureKind::EmbeddingScene => "embedding",
        }
    }
}

impl fmt::Display for FigureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FigureKind {
    type Err = RenderError;

    fn from_str(s: &str) -> Result<FigureKind> {
        FigureKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| RenderError::Unsupported(format!("unknown figure kind `{s}`")))
    }
}

/// The domain object a figure draws.
#[derive(Debug, Clone, PartialEq)]
pub enum Payload {
    /// One or both players' ordinal graphs, at most one per player.
    OrdGraph(Vec<OrdinalGraph>),
    BrGraph(BrGraph),
    PayoffTable(Game),
    JointGlyph(JointDistribution),
    RowCondGlyph(JointDistribution),
    ColCondGlyph(JointDistribution),
    MarginalGlyph(MarginalPair),
    JointMarginalGlyph(JointDistribution),
    PolytopeScene(Game),
    EmbeddingScene(EmbeddingPlot),
}

impl Payload {
    pub fn kind(&self) -> FigureKind {
        match self {
            Payload::OrdGraph(_) => FigureKind::OrdGraph,
            Payload::BrGraph(_) => FigureKind::BrGraph,
            Payload::PayoffTable(_) => FigureKind::PayoffTable,
            Payload::JointGlyph(_) => FigureKind::JointGlyph,
            Payload::RowCondGlyph(_) => FigureKind::RowCondGlyph,
            Payload::ColCondGlyph(_) => FigureKind::ColCondGlyph,
            Payload::MarginalGlyph(_) => FigureKind::MarginalGlyph,
            Payload::JointMarginalGlyph(_) => FigureKind::JointMarginalGlyph,
            Payload::PolytopeScene(_) => FigureKind::PolytopeScene,
            Payload::EmbeddingScene(_) => FigureKind::EmbeddingScene,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureSpec {
    pub payload: Payload,
    pub style: StyleOptions,
}

impl FigureSpec {
    pub fn new(payload: Payload) -> FigureSpec {
        FigureSpec { payload, style: StyleOptions::default() }
    }

    pub fn with_style(payload: Payload, style: StyleOptions) -> FigureSpec {
        FigureSpec { payload, style }
    }

    pub fn kind(&self) -> FigureKind {
        self.payload.kind()
    }

    pub fn scene(&self) -> Result<Scene> {
        let style = &self.style;
        style.validate()?;
        match &self.payload {
            Payload::OrdGraph(graphs) => figures::ordinal_graphs(graphs, style),
            Payload::BrGraph(graph) => Ok(figures::br_graph(graph, style)),
            Payload::PayoffTable(game) => Ok(figures::payoff_table(game, style)),
            Payload::JointGlyph(joint) => Ok(figures::joint_glyph(joint, style)),
            Payload::RowCondGlyph(joint) => Ok(figures::conditional_glyph(joint, crate::game::Player::Row, style)),
            Payload::ColCondGlyph(joint) => Ok(figures::conditional_glyph(joint, crate::game::Player::Col, style)),
            Payload::MarginalGlyph(m) => Ok(figures::marginal_glyph(None, m, style)),
            Payload::JointMarginalGlyph(joint) => Ok(figures::marginal_glyph(Some(joint), &joint.marginals(), style)),
            Payload::PolytopeScene(game) => Ok(PolytopeScene::new(game, style).scene(style)),
            Payload::EmbeddingScene(plot) => plot.scene(style),
        }
    }
}

pub fn emit(scene: &Scene, format: Format) -> String {
    match format {
        Format::Tikz => tikz::emit(scene),
        Format::Svg => svg::emit(scene),
    }
}

pub fn render_figure(figure: &FigureSpec, format: Format) -> Result<String> {
    Ok(emit(&figure.scene()?, format))
}

pub fn render_polytope(game: &Game, style: &StyleOptions, format: Format) -> Result<String> {
    render_figure(&FigureSpec::with_style(Payload::PolytopeScene(game.clone()), style.clone()), format)
}

pub fn render_embedding(
    points: &[EmbeddingPoint],
    heatmap: Option<&Heatmap>,
    style: &StyleOptions,
    format: Format,
) -> Result<String> {
    let plot = EmbeddingPlot::from_embeddings(points, heatmap.cloned());
    render_figure(&FigureSpec::with_style(Payload::EmbeddingScene(plot), style.clone()), format)
}
