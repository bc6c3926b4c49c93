//! Backend-neutral drawing primitives.
//!
//! Coordinates are points (1/72 in) with the origin at the bottom-left and
//! `y` growing upwards; the SVG backend flips the axis on output.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Point {
        Point { x, y }
    }

    pub fn lerp(self, other: Point, t: f64) -> Point {
        Point::new(self.x + (other.x - self.x) * t, self.y + (other.y - self.y) * t)
    }

    pub fn distance(self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color {
    pub r: u8,
    pub g: u8,
    pub b: u8,
}

impl Color {
    pub const BLACK: Color = Color::rgb(0, 0, 0);
    pub const GRAY: Color = Color::rgb(128, 128, 128);
    pub const LIGHT_GRAY: Color = Color::rgb(191, 191, 191);
    pub const WHITE: Color = Color::rgb(255, 255, 255);
    pub const PURPLE: Color = Color::rgb(128, 0, 128);
    pub const BLUE: Color = Color::rgb(0, 0, 255);

    pub const fn rgb(r: u8, g: u8, b: u8) -> Color {
        Color { r, g, b }
    }

    pub fn hex(self) -> String {
        format!("{:02x}{:02x}{:02x}", self.r, self.g, self.b)
    }

    /// Parses `#rrggbb`, `rrggbb`, or one of a few names.
    pub fn parse(text: &str) -> Option<Color> {
        match text.to_ascii_lowercase().as_str() {
            "black" => return Some(Color::BLACK),
            "gray" | "grey" => return Some(Color::GRAY),
            "white" => return Some(Color::WHITE),
            "purple" => return Some(Color::PURPLE),
            "blue" => return Some(Color::BLUE),
            _ => {}
        }
        let hex = text.strip_prefix('#').unwrap_or(text);
        if hex.len() != 6 || !hex.bytes().all(|b| b.is_ascii_hexdigit()) {
            return None;
        }
        let byte = |i: usize| u8::from_str_radix(&hex[i..i + 2], 16).ok();
        Some(Color::rgb(byte(0)?, byte(2)?, byte(4)?))
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.hex())
    }
}

/// What a primitive depicts. Emitted as the SVG `class` attribute and used
/// by tests to count figure content.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    Background,
    Node,
    RowEdge,
    ColEdge,
    TableLine,
    Label,
    Payoff,
    JointCell,
    ConditionalCell,
    RowMarginalCell,
    ColMarginalCell,
    CellOutline,
    SimplexEdge,
    SimplexEdgeHidden,
    CceEdge,
    CceVertex,
    NePoint,
    NeSegment,
    NeSurface,
    Axis,
    Grid,
    Tick,
    TickLabel,
    AxisLabel,
    Heat,
    ClassName,
    Marker,
}

impl Role {
    pub fn name(self) -> &'static str {
        match self {
            Role::Background => "background",
            Role::Node => "node",
            Role::RowEdge => "row-edge",
            Role::ColEdge => "col-edge",
            Role::TableLine => "table-line",
            Role::Label => "label",
            Role::Payoff => "payoff",
            Role::JointCell => "joint-cell",
            Role::ConditionalCell => "conditional-cell",
            Role::RowMarginalCell => "row-marginal-cell",
            Role::ColMarginalCell => "col-marginal-cell",
            Role::CellOutline => "cell-outline",
            Role::SimplexEdge => "simplex-edge",
            Role::SimplexEdgeHidden => "simplex-edge-hidden",
            Role::CceEdge => "cce-edge",
            Role::CceVertex => "cce-vertex",
            Role::NePoint => "ne-point",
            Role::NeSegment => "ne-segment",
            Role::NeSurface => "ne-surface",
            Role::Axis => "axis",
            Role::Grid => "grid",
            Role::Tick => "tick",
            Role::TickLabel => "tick-label",
            Role::AxisLabel => "axis-label",
            Role::Heat => "heat",
            Role::ClassName => "class-name",
            Role::Marker => "marker",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Anchor {
    Center,
    North,
    South,
    East,
    West,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Stroke {
    pub color: Color,
    pub width: f64,
    pub dashed: bool,
    pub arrow: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Fill {
    pub color: Color,
    /// In `[0, 1]`; shading over white.
    pub opacity: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Shape {
    Line { from: Point, to: Point, stroke: Stroke },
    Circle { center: Point, radius: f64, fill: Option<Fill>, stroke: Option<Stroke> },
    Rect { min: Point, max: Point, fill: Option<Fill>, stroke: Option<Stroke> },
    Polygon { points: Vec<Point>, fill: Option<Fill>, stroke: Option<Stroke> },
    Text { at: Point, text: String, anchor: Anchor, size: f64, color: Color },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Item {
    pub role: Role,
    pub shape: Shape,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scene {
    pub width: f64,
    pub height: f64,
    pub items: Vec<Item>,
}

impl Scene {
    pub fn new(width: f64, height: f64) -> Scene {
        Scene { width, height, items: Vec::new() }
    }

    pub fn push(&mut self, role: Role, shape: Shape) {
        self.items.push(Item { role, shape });
    }

    pub fn count(&self, role: Role) -> usize {
        self.items.iter().filter(|i| i.role == role).count()
    }

    pub fn with_role(&self, role: Role) -> impl Iterator<Item = &Shape> {
        self.items.iter().filter(move |i| i.role == role).map(|i| &i.shape)
    }

    /// Colors in first-use order, without repeats.
    pub fn colors(&self) -> Vec<Color> {
        let mut out: Vec<Color> = Vec::new();
        let mut add = |c: Color| {
            if !out.contains(&c) {
                out.push(c);
            }
        };
        for item in &self.items {
            match &item.shape {
                Shape::Line { stroke, .. } => add(stroke.color),
                Shape::Circle { fill, stroke, .. }
                | Shape::Rect { fill, stroke, .. }
                | Shape::Polygon { fill, stroke, .. } => {
                    if let Some(f) = fill {
                        add(f.color);
                    }
                    if let Some(s) = stroke {
                        add(s.color);
                    }
                }
                Shape::Text { color, .. } => add(*color),
            }
        }
        out
    }
}
