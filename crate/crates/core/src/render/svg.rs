use std::fmt::Write;

use super::number::fmt_num;
use super::scene::{Anchor, Color, Fill, Point, Scene, Shape, Stroke};

pub fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for ch in text.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            _ => out.push(ch),
        }
    }
    out
}

fn marker_id(c: Color) -> String {
    format!("arrow-{}", c.hex())
}

struct Flip(f64);

impl Flip {
    fn x(&self, p: Point) -> String {
        fmt_num(p.x)
    }

    fn y(&self, p: Point) -> String {
        fmt_num(self.0 - p.y)
    }

    fn pair(&self, p: Point) -> String {
        format!("{},{}", self.x(p), self.y(p))
    }
}

fn stroke_attrs(s: &Stroke) -> String {
    let mut a = format!(" stroke=\"{}\" stroke-width=\"{}\"", s.color, fmt_num(s.width));
    if s.dashed {
        let dash = fmt_num(3.0 * s.width.max(0.5));
        let _ = write!(a, " stroke-dasharray=\"{dash},{dash}\"");
    }
    if s.arrow {
        let _ = write!(a, " marker-end=\"url(#{})\"", marker_id(s.color));
    }
    a
}

fn fill_attrs(f: &Option<Fill>) -> String {
    match f {
        Some(f) => format!(" fill=\"{}\" fill-opacity=\"{}\"", f.color, fmt_num(f.opacity)),
        None => " fill=\"none\"".to_owned(),
    }
}

fn paint(fill: &Option<Fill>, stroke: &Option<Stroke>) -> String {
    let mut a = fill_attrs(fill);
    if let Some(s) = stroke {
        a.push_str(&stroke_attrs(s));
    }
    a
}

pub fn emit(scene: &Scene) -> String {
    let flip = Flip(scene.height);
    let (w, h) = (fmt_num(scene.width), fmt_num(scene.height));
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}pt\" height=\"{h}pt\" viewBox=\"0 0 {w} {h}\">"
    );
    let mut arrow_colors: Vec<Color> = Vec::new();
    for item in &scene.items {
        if let Shape::Line { stroke, .. } = &item.shape {
            if stroke.arrow && !arrow_colors.contains(&stroke.color) {
                arrow_colors.push(stroke.color);
            }
        }
    }
    if !arrow_colors.is_empty() {
        out.push_str("<defs>\n");
        for c in arrow_colors {
            let _ = writeln!(
                out,
                "<marker id=\"{}\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"{c}\"/></marker>",
                marker_id(c)
            );
        }
        out.push_str("</defs>\n");
    }
    for item in &scene.items {
        let class = item.role.name();
        let _ = match &item.shape {
            Shape::Line { from, to, stroke } => writeln!(
                out,
                "<line class=\"{class}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"{}/>",
                flip.x(*from),
                flip.y(*from),
                flip.x(*to),
                flip.y(*to),
                stroke_attrs(stroke)
            ),
            Shape::Circle { center, radius, fill, stroke } => writeln!(
                out,
                "<circle class=\"{class}\" cx=\"{}\" cy=\"{}\" r=\"{}\"{}/>",
                flip.x(*center),
                flip.y(*center),
                fmt_num(*radius),
                paint(fill, stroke)
            ),
            Shape::Rect { min, max, fill, stroke } => writeln!(
                out,
                "<rect class=\"{class}\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\"{}/>",
                fmt_num(min.x),
                fmt_num(scene.height - max.y),
                fmt_num(max.x - min.x),
                fmt_num(max.y - min.y),
                paint(fill, stroke)
            ),
            Shape::Polygon { points, fill, stroke } => {
                let pts: Vec<String> = points.iter().map(|p| flip.pair(*p)).collect();
                writeln!(out, "<polygon class=\"{class}\" points=\"{}\"{}/>", pts.join(" "), paint(fill, stroke))
            }
            Shape::Text { at, text, anchor, size, color } => {
                let (text_anchor, baseline) = match anchor {
                    Anchor::Center => ("middle", "central"),
                    Anchor::North => ("middle", "hanging"),
                    Anchor::South => ("middle", "alphabetic"),
                    Anchor::East => ("end", "central"),
                    Anchor::West => ("start", "central"),
                };
                writeln!(
                    out,
                    "<text class=\"{class}\" x=\"{}\" y=\"{}\" font-size=\"{}\" font-family=\"serif\" fill=\"{color}\" text-anchor=\"{text_anchor}\" dominant-baseline=\"{baseline}\">{}</text>",
                    flip.x(*at),
                    flip.y(*at),
                    fmt_num(*size),
                    escape(text)
                )
            }
        };
    }
    out.push_str("</svg>\n");
    out
}
