//! Line-oriented analysis report.
//!
//! Every line is `key value...`; rationals are written as `num/den` or as a
//! bare integer. Keys appear in a fixed order.

use std::fmt::Write;

use twoxtwo::classify::br_class;
use twoxtwo::embedding::{embed, Direction};
use twoxtwo::equilibria::cce_polytope;
use twoxtwo::game::{Game, Player};
use twoxtwo::graphs::{br_graph, ordinal_graph};
use twoxtwo::nash::{nash_set, Shape};
use twoxtwo::render::fmt_num;

fn shape_name(shape: Shape) -> &'static str {
    match shape {
        Shape::Point => "point",
        Shape::Segment => "segment",
        Shape::Box => "box",
    }
}

fn direction(d: Option<&Direction>) -> String {
    d.map_or_else(|| "none".to_owned(), Direction::to_string)
}

fn angle(a: Option<f64>) -> String {
    a.map_or_else(|| "none".to_owned(), fmt_num)
}

pub fn analysis_report(game: &Game) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "game {game}");
    for player in Player::ALL {
        let graph = ordinal_graph(game, player);
        let levels: Vec<String> = graph
            .levels
            .iter()
            .map(|level| level.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
            .collect();
        let _ = writeln!(out, "ordinal_graph.{} {}", player.name(), levels.join(" < "));
    }
    let graph = br_graph(game);
    let _ = writeln!(out, "br_graph {graph}");
    let _ = writeln!(out, "br_class {}", br_class(game));
    let pure: Vec<String> = graph.pure_equilibria().iter().map(ToString::to_string).collect();
    let _ = writeln!(out, "pure_equilibria {}", if pure.is_empty() { "none".to_owned() } else { pure.join(" ") });

    let nash = nash_set(game);
    let _ = writeln!(out, "nash.components {}", nash.components().len());
    for c in nash.components() {
        let _ = writeln!(out, "nash.component {} {} {} {} {}", shape_name(c.shape()), c.p.lo, c.p.hi, c.q.lo, c.q.hi);
    }

    let poly = cce_polytope(game);
    let _ = writeln!(out, "cce.dimension {}", poly.dimension);
    let _ = writeln!(out, "cce.vertices {}", poly.vertices.len());
    for v in &poly.vertices {
        let probs: Vec<String> = v.as_array().iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "cce.vertex {}", probs.join(" "));
    }
    let _ = writeln!(out, "cce.edges {}", poly.edges.len());
    for (a, b) in &poly.edges {
        let _ = writeln!(out, "cce.edge {a} {b}");
    }

    let point = embed(game);
    let _ = writeln!(out, "embedding.row {}", direction(point.row.as_ref()));
    let _ = writeln!(out, "embedding.col {}", direction(point.col.as_ref()));
    let _ = writeln!(out, "embedding.row_angle {}", angle(point.row_angle_degrees()));
    let _ = writeln!(out, "embedding.col_angle {}", angle(point.col_angle_degrees()));
    out
}
