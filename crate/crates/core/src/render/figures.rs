//! Graphs, payoff tables and distribution glyphs.

use super::scene::{Anchor, Color, Fill, Point, Role, Scene, Shape, Stroke};
use super::{RenderError, Result, StyleOptions};
use crate::distribution::{JointDistribution, MarginalPair};
use crate::game::{Action, Cell, Game, Player};
use crate::graphs::{BrGraph, OrdinalGraph};
use crate::rational::Rational;

const NODE_MARGIN: f64 = 0.18;
const NODE_RADIUS: f64 = 0.09;
const DOUBLED_EDGE_OFFSET: f64 = 0.03;

fn player_color(style: &StyleOptions, player: Player) -> Color {
    style.player_colors[player.index()]
}

fn node_position(cell: Cell, size: f64) -> Point {
    let (lo, hi) = (NODE_MARGIN * size, (1.0 - NODE_MARGIN) * size);
    let x = if cell.col == Action::A { lo } else { hi };
    let y = if cell.row == Action::A { hi } else { lo };
    Point::new(x, y)
}

fn draw_nodes(scene: &mut Scene, style: &StyleOptions) {
    let size = style.size_pt;
    for cell in Cell::ALL {
        let center = node_position(cell, size);
        scene.push(
            Role::Node,
            Shape::Circle {
                center,
                radius: NODE_RADIUS * size,
                fill: Some(Fill { color: Color::WHITE, opacity: 1.0 }),
                stroke: Some(Stroke { color: Color::BLACK, width: style.stroke_width_pt, dashed: false, arrow: false }),
            },
        );
        scene.push(
            Role::Label,
            Shape::Text { at: center, text: cell.to_string(), anchor: Anchor::Center, size: 0.07 * size, color: Color::BLACK },
        );
    }
}

/// Arrow between two nodes, clipped to their circles and shifted sideways
/// by `offset` (a fraction of the figure size).
fn arrow(from: Cell, to: Cell, offset: f64, color: Color, style: &StyleOptions) -> Shape {
    let size = style.size_pt;
    let (a, b) = (node_position(from, size), node_position(to, size));
    let len = a.distance(b);
    let (ux, uy) = ((b.x - a.x) / len, (b.y - a.y) / len);
    let (nx, ny) = (-uy * offset * size, ux * offset * size);
    let r = NODE_RADIUS * size + style.stroke_width_pt;
    Shape::Line {
        from: Point::new(a.x + ux * r + nx, a.y + uy * r + ny),
        to: Point::new(b.x - ux * r + nx, b.y - uy * r + ny),
        stroke: Stroke { color, width: style.stroke_width_pt, dashed: false, arrow: true },
    }
}

fn edge_role(player: Player) -> Role {
    match player {
        Player::Row => Role::RowEdge,
        Player::Col => Role::ColEdge,
    }
}

pub fn ordinal_graphs(graphs: &[OrdinalGraph], style: &StyleOptions) -> Result<Scene> {
    if graphs.is_empty() || graphs.len() > 2 {
        return Err(RenderError::Unsupported(format!("ordinal graph figure needs 1 or 2 graphs, got {}", graphs.len())));
    }
    if graphs.len() == 2 && graphs[0].player == graphs[1].player {
        return Err(RenderError::Unsupported("ordinal graph figure has two graphs for the same player".into()));
    }
    let mut scene = Scene::new(style.size_pt, style.size_pt);
    draw_nodes(&mut scene, style);
    for graph in graphs {
        let offset = match (graphs.len(), graph.player) {
            (1, _) => 0.0,
            (_, Player::Row) => DOUBLED_EDGE_OFFSET,
            (_, Player::Col) => -DOUBLED_EDGE_OFFSET,
        };
        let color = player_color(style, graph.player);
        for &(from, to) in &graph.edges {
            scene.push(edge_role(graph.player), arrow(from, to, offset, color, style));
        }
    }
    Ok(scene)
}

/// Row edges run vertically within a column, column edges horizontally
/// within a row; each points at the preferred action. Indifference omits
/// the edge.
pub fn br_graph(graph: &BrGraph, style: &StyleOptions) -> Scene {
    let mut scene = Scene::new(style.size_pt, style.size_pt);
    draw_nodes(&mut scene, style);
    for player in Player::ALL {
        for opponent_action in Action::ALL {
            let Some(preferred) = graph.preference(player, opponent_action).action() else {
                continue;
            };
            let cell_with = |own: Action| match player {
                Player::Row => Cell::new(own, opponent_action),
                Player::Col => Cell::new(opponent_action, own),
            };
            let shape = arrow(cell_with(preferred.other()), cell_with(preferred), 0.0, player_color(style, player), style);
            scene.push(edge_role(player), shape);
        }
    }
    scene
}

fn line(from: Point, to: Point, style: &StyleOptions) -> Shape {
    Shape::Line { from, to, stroke: Stroke { color: Color::BLACK, width: style.stroke_width_pt, dashed: false, arrow: false } }
}

/// Header column and row of width `u`, four cells of `2u × u`.
pub fn payoff_table(game: &Game, style: &StyleOptions) -> Scene {
    let u = style.size_pt / 5.0;
    let mut scene = Scene::new(5.0 * u, 3.0 * u);
    let text_size = 0.45 * u;
    let x_of = |col: usize| u + 2.0 * u * col as f64;
    let y_of = |row: usize| 2.0 * u - u * row as f64;
    for k in 0..3 {
        scene.push(Role::TableLine, line(Point::new(x_of(k), 0.0), Point::new(x_of(k), 2.0 * u), style));
        scene.push(Role::TableLine, line(Point::new(u, y_of(k)), Point::new(5.0 * u, y_of(k)), style));
    }
    for action in Action::ALL {
        let i = action.index();
        scene.push(
            Role::Label,
            Shape::Text {
                at: Point::new(0.5 * u, y_of(i) - 0.5 * u),
                text: action.to_string(),
                anchor: Anchor::Center,
                size: text_size,
                color: style.row_color(),
            },
        );
        scene.push(
            Role::Label,
            Shape::Text {
                at: Point::new(x_of(i) + u, 2.5 * u),
                text: action.to_string(),
                anchor: Anchor::Center,
                size: text_size,
                color: style.col_color(),
            },
        );
    }
    for cell in Cell::ALL {
        let (x, y) = (x_of(cell.col.index()), y_of(cell.row.index()) - 0.5 * u);
        for (player, dx, anchor) in [(Player::Row, 0.9 * u, Anchor::East), (Player::Col, 1.1 * u, Anchor::West)] {
            scene.push(
                Role::Payoff,
                Shape::Text {
                    at: Point::new(x + dx, y),
                    text: game.payoff(player, cell).to_string(),
                    anchor,
                    size: text_size,
                    color: player_color(style, player),
                },
            );
        }
        scene.push(
            Role::Label,
            Shape::Text { at: Point::new(x + u, y), text: ",".into(), anchor: Anchor::Center, size: text_size, color: Color::BLACK },
        );
    }
    scene
}

fn shaded_cell(min: Point, side: (f64, f64), prob: Option<&Rational>, color: Color, style: &StyleOptions) -> Shape {
    Shape::Rect {
        min,
        max: Point::new(min.x + side.0, min.y + side.1),
        fill: prob.map(|p| Fill { color, opacity: p.to_f64() }),
        stroke: Some(Stroke { color: Color::BLACK, width: style.stroke_width_pt, dashed: false, arrow: false }),
    }
}

/// Cell `(row, col)` of a 2×2 grid of side `c` whose bottom-left corner is `origin`.
fn grid_cell(origin: Point, c: f64, cell: Cell) -> Point {
    Point::new(origin.x + c * cell.col.index() as f64, origin.y + c * (1 - cell.row.index()) as f64)
}

/// Joint shading uses the row player's color.
pub fn joint_glyph(joint: &JointDistribution, style: &StyleOptions) -> Scene {
    let c = style.size_pt / 2.0;
    let mut scene = Scene::new(2.0 * c, 2.0 * c);
    for cell in Cell::ALL {
        let min = grid_cell(Point::new(0.0, 0.0), c, cell);
        scene.push(Role::JointCell, shaded_cell(min, (c, c), Some(joint.prob(cell)), style.row_color(), style));
    }
    scene
}

/// Conditioning on the row player shades each row by the column player's
/// conditional distribution (in the column color), and vice versa. A
/// conditioning action with zero probability leaves its cells unshaded.
pub fn conditional_glyph(joint: &JointDistribution, conditioning: Player, style: &StyleOptions) -> Scene {
    let c = style.size_pt / 2.0;
    let mut scene = Scene::new(2.0 * c, 2.0 * c);
    let table = joint.conditional(conditioning);
    let color = player_color(style, conditioning.opponent());
    for cell in Cell::ALL {
        let (given, other) = match conditioning {
            Player::Row => (cell.row, cell.col),
            Player::Col => (cell.col, cell.row),
        };
        let prob = table.given(given).map(|dist| &dist[other.index()]);
        let min = grid_cell(Point::new(0.0, 0.0), c, cell);
        scene.push(Role::ConditionalCell, shaded_cell(min, (c, c), prob, color, style));
    }
    scene
}

/// Row marginal as a vertical bar on the left, column marginal as a
/// horizontal bar on top, with the joint grid (if any) between them.
pub fn marginal_glyph(joint: Option<&JointDistribution>, marginals: &MarginalPair, style: &StyleOptions) -> Scene {
    let c = style.size_pt / 2.0;
    let bar = 0.35 * c;
    let gap = 0.15 * c;
    let grid = Point::new(bar + gap, 0.0);
    let mut scene = Scene::new(grid.x + 2.0 * c, 2.0 * c + gap + bar);
    if let Some(joint) = joint {
        for cell in Cell::ALL {
            let min = grid_cell(grid, c, cell);
            scene.push(Role::JointCell, shaded_cell(min, (c, c), Some(joint.prob(cell)), style.row_color(), style));
        }
    }
    for action in Action::ALL {
        let i = action.index() as f64;
        let p_row = marginal_prob(marginals, Player::Row, action);
        let p_col = marginal_prob(marginals, Player::Col, action);
        let row_min = Point::new(0.0, c * (1.0 - i));
        scene.push(Role::RowMarginalCell, shaded_cell(row_min, (bar, c), Some(&p_row), style.row_color(), style));
        let col_min = Point::new(grid.x + c * i, 2.0 * c + gap);
        scene.push(Role::ColMarginalCell, shaded_cell(col_min, (c, bar), Some(&p_col), style.col_color(), style));
    }
    scene
}

fn marginal_prob(m: &MarginalPair, player: Player, action: Action) -> Rational {
    match action {
        Action::A => m.prob_a(player).clone(),
        Action::B => m.prob_a(player).complement(),
    }
}
