//! Games plotted on the torus of best-response angles.

use super::data::Heatmap;
use super::number::fmt_num;
use super::scene::{Anchor, Color, Fill, Point, Role, Scene, Shape, Stroke};
use super::{Result, StyleOptions};
use crate::classify::class_of_br_graph;
use crate::embedding::EmbeddingPoint;
use crate::graphs::{BrGraph, Preference};

pub const HEAT_COLOR: Color = Color::rgb(31, 119, 180);
const MARGIN_LEFT: f64 = 0.16;
const MARGIN_BOTTOM: f64 = 0.16;
const MARGIN_TOP: f64 = 0.1;
const MARGIN_RIGHT: f64 = 0.06;
const TICKS: [f64; 5] = [0.0, 90.0, 180.0, 270.0, 360.0];

#[derive(Debug, Clone, PartialEq, Default)]
pub struct EmbeddingPlot {
    /// `(row angle, column angle)` in degrees.
    pub points: Vec<(f64, f64)>,
    pub heatmap: Option<Heatmap>,
}

impl EmbeddingPlot {
    pub fn new(points: Vec<(f64, f64)>, heatmap: Option<Heatmap>) -> EmbeddingPlot {
        EmbeddingPlot { points, heatmap }
    }

    /// Players with no direction have no angle; such games are skipped.
    pub fn from_embeddings(points: &[EmbeddingPoint], heatmap: Option<Heatmap>) -> EmbeddingPlot {
        EmbeddingPlot { points: points.iter().filter_map(EmbeddingPoint::angles).collect(), heatmap }
    }

    pub fn scene(&self, style: &StyleOptions) -> Result<Scene> {
        let size = style.size_pt;
        let w = style.stroke_width_pt;
        let (x0, y0) = (MARGIN_LEFT * size, MARGIN_BOTTOM * size);
        let side = size * (1.0 - MARGIN_LEFT - MARGIN_RIGHT).min(1.0 - MARGIN_BOTTOM - MARGIN_TOP);
        let at = |row_deg: f64, col_deg: f64| Point::new(x0 + side * row_deg / 360.0, y0 + side * col_deg / 360.0);
        let thin = |color: Color| Stroke { color, width: 0.5 * w, dashed: false, arrow: false };
        let mut scene = Scene::new(size, size);

        if let Some(heat) = &self.heatmap {
            let (lo, hi) = heat.range();
            let (cw, ch) = (side / heat.width() as f64, side / heat.height() as f64);
            for (i, row) in heat.rows().iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    let opacity = if hi > lo { (v - lo) / (hi - lo) } else { 0.5 };
                    let min = Point::new(x0 + cw * j as f64, y0 + ch * i as f64);
                    scene.push(
                        Role::Heat,
                        Shape::Rect {
                            min,
                            max: Point::new(min.x + cw, min.y + ch),
                            fill: Some(Fill { color: HEAT_COLOR, opacity }),
                            stroke: None,
                        },
                    );
                }
            }
        }

        for &t in &TICKS[1..4] {
            scene.push(Role::Grid, Shape::Line { from: at(t, 0.0), to: at(t, 360.0), stroke: thin(Color::LIGHT_GRAY) });
            scene.push(Role::Grid, Shape::Line { from: at(0.0, t), to: at(360.0, t), stroke: thin(Color::LIGHT_GRAY) });
        }
        scene.push(
            Role::Axis,
            Shape::Rect {
                min: at(0.0, 0.0),
                max: at(360.0, 360.0),
                fill: None,
                stroke: Some(Stroke { color: Color::BLACK, width: w, dashed: false, arrow: false }),
            },
        );

        let tick_len = 0.015 * size;
        let label_size = 0.045 * size;
        for &t in &TICKS {
            let bx = at(t, 0.0);
            scene.push(Role::Tick, Shape::Line { from: bx, to: Point::new(bx.x, bx.y - tick_len), stroke: thin(Color::BLACK) });
            let ly = at(0.0, t);
            scene.push(Role::Tick, Shape::Line { from: ly, to: Point::new(ly.x - tick_len, ly.y), stroke: thin(Color::BLACK) });
            if style.show_tick_labels {
                let text = fmt_num(t);
                scene.push(
                    Role::TickLabel,
                    Shape::Text {
                        at: Point::new(bx.x, bx.y - 1.5 * tick_len),
                        text: text.clone(),
                        anchor: Anchor::North,
                        size: label_size,
                        color: Color::BLACK,
                    },
                );
                scene.push(
                    Role::TickLabel,
                    Shape::Text {
                        at: Point::new(ly.x - 1.5 * tick_len, ly.y),
                        text,
                        anchor: Anchor::East,
                        size: label_size,
                        color: Color::BLACK,
                    },
                );
            }
        }
        if style.show_axes_labels {
            scene.push(
                Role::AxisLabel,
                Shape::Text {
                    at: Point::new(x0 + side / 2.0, 0.02 * size),
                    text: "row angle".into(),
                    anchor: Anchor::South,
                    size: label_size,
                    color: style.row_color(),
                },
            );
            scene.push(
                Role::AxisLabel,
                Shape::Text {
                    at: Point::new(0.02 * size, y0 + side + 0.06 * size),
                    text: "column angle".into(),
                    anchor: Anchor::West,
                    size: label_size,
                    color: style.col_color(),
                },
            );
        }
        if style.show_best_response_names {
            for row_band in 0..4 {
                for col_band in 0..4 {
                    let graph = band_graph(row_band, col_band);
                    let center = at(90.0 * row_band as f64 + 45.0, 90.0 * col_band as f64 + 45.0);
                    scene.push(
                        Role::ClassName,
                        Shape::Text {
                            at: center,
                            text: class_of_br_graph(&graph).name,
                            anchor: Anchor::Center,
                            size: 0.03 * size,
                            color: Color::BLACK,
                        },
                    );
                }
            }
        }
        for &(row_deg, col_deg) in &self.points {
            scene.push(
                Role::Marker,
                Shape::Circle {
                    center: at(row_deg.rem_euclid(360.0), col_deg.rem_euclid(360.0)),
                    radius: 2.0 * w,
                    fill: Some(Fill { color: Color::BLUE, opacity: 1.0 }),
                    stroke: None,
                },
            );
        }
        Ok(scene)
    }
}

/// Signs of `(vs A, vs B)` in the open quarter `[90k, 90k + 90)`.
fn band_preferences(band: usize) -> [Preference; 2] {
    use Preference::{A, B};
    match band {
        0 => [A, A],
        1 => [B, A],
        2 => [B, B],
        _ => [A, B],
    }
}

/// Best-response graph shared by every game in the open cell of the given
/// quarter bands.
pub fn band_graph(row_band: usize, col_band: usize) -> BrGraph {
    let [ra, rb] = band_preferences(row_band);
    let [ca, cb] = band_preferences(col_band);
    BrGraph::new([ra, rb, ca, cb])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::Direction;

    #[test]
    fn band_graphs_match_directions_at_band_centers() {
        for row_band in 0..4 {
            for col_band in 0..4 {
                let dir = |band: usize| {
                    let [a, b] = band_preferences(band).map(|p| if p == Preference::A { 1 } else { -1 });
                    Direction::from_ints(a, b).unwrap()
                };
                let (r, c) = (dir(row_band), dir(col_band));
                assert_eq!(r.angle_degrees(), 90.0 * row_band as f64 + 45.0);
                let point = EmbeddingPoint { row: Some(r), col: Some(c) };
                assert_eq!(point.br_graph(), band_graph(row_band, col_band));
            }
        }
    }
}
