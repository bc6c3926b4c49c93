use std::fmt::Write;

use super::number::fmt_num;
use super::scene::{Anchor, Color, Fill, Point, Scene, Shape, Stroke};

fn color_name(c: Color) -> String {
    format!("c{}", c.hex())
}

fn pt(p: Point) -> String {
    format!("({},{})", fmt_num(p.x), fmt_num(p.y))
}

fn stroke_opts(s: &Stroke) -> String {
    let mut opts = format!("draw={}, line width={}pt", color_name(s.color), fmt_num(s.width));
    if s.dashed {
        opts.push_str(", dashed");
    }
    if s.arrow {
        opts.push_str(", -{Stealth}");
    }
    opts
}

fn fill_opts(f: &Fill) -> String {
    format!("fill={}, fill opacity={}", color_name(f.color), fmt_num(f.opacity))
}

fn paint(fill: &Option<Fill>, stroke: &Option<Stroke>) -> String {
    let parts: Vec<String> =
        fill.iter().map(fill_opts).chain(stroke.iter().map(stroke_opts)).collect();
    parts.join(", ")
}

/// Escapes TeX special characters in label text.
pub fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for ch in text.chars() {
        match ch {
            '\\' => out.push_str("\\textbackslash{}"),
            '{' | '}' | '$' | '&' | '#' | '%' | '_' => {
                out.push('\\');
                out.push(ch);
            }
            '^' => out.push_str("\\^{}"),
            '~' => out.push_str("\\~{}"),
            _ => out.push(ch),
        }
    }
    out
}

fn anchor_name(a: Anchor) -> &'static str {
    match a {
        Anchor::Center => "center",
        Anchor::North => "north",
        Anchor::South => "south",
        Anchor::East => "east",
        Anchor::West => "west",
    }
}

/// A self-contained `tikzpicture`; needs `tikz` with the `arrows.meta` library.
pub fn emit(scene: &Scene) -> String {
    let mut out = String::new();
    out.push_str("% requires \\usetikzlibrary{arrows.meta}\n");
    out.push_str("\\begin{tikzpicture}[x=1pt, y=1pt]\n");
    for c in scene.colors() {
        let _ = writeln!(out, "\\definecolor{{{}}}{{RGB}}{{{},{},{}}}", color_name(c), c.r, c.g, c.b);
    }
    let _ = writeln!(
        out,
        "\\path[use as bounding box] (0,0) rectangle {};",
        pt(Point::new(scene.width, scene.height))
    );
    for item in &scene.items {
        let role = item.role.name();
        let _ = match &item.shape {
            Shape::Line { from, to, stroke } => {
                writeln!(out, "\\path[{}] {} -- {}; % {role}", stroke_opts(stroke), pt(*from), pt(*to))
            }
            Shape::Circle { center, radius, fill, stroke } => writeln!(
                out,
                "\\path[{}] {} circle[radius={}]; % {role}",
                paint(fill, stroke),
                pt(*center),
                fmt_num(*radius)
            ),
            Shape::Rect { min, max, fill, stroke } => {
                writeln!(out, "\\path[{}] {} rectangle {}; % {role}", paint(fill, stroke), pt(*min), pt(*max))
            }
            Shape::Polygon { points, fill, stroke } => {
                let path: Vec<String> = points.iter().map(|p| pt(*p)).collect();
                writeln!(out, "\\path[{}] {} -- cycle; % {role}", paint(fill, stroke), path.join(" -- "))
            }
            Shape::Text { at, text, anchor, size, color } => writeln!(
                out,
                "\\node[anchor={}, text={}, font=\\fontsize{{{}}}{{{}}}\\selectfont, inner sep=1pt] at {} {{{}}}; % {role}",
                anchor_name(*anchor),
                color_name(*color),
                fmt_num(*size),
                fmt_num(size * 1.2),
                pt(*at),
                escape(text)
            ),
        };
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

/// Checks that braces and `\begin`/`\end` pairs are balanced, ignoring
/// escaped braces and comments.
pub fn is_balanced(text: &str) -> bool {
    let mut depth: i64 = 0;
    let mut envs: Vec<String> = Vec::new();
    for line in text.lines() {
        let mut chars = line.char_indices().peekable();
        while let Some((i, ch)) = chars.next() {
            match ch {
                '\\' => {
                    let rest = &line[i + 1..];
                    if let Some(r) = rest.strip_prefix("begin{").or_else(|| rest.strip_prefix("end{")) {
                        let Some(close) = r.find('}') else { return false };
                        let name = r[..close].to_owned();
                        if rest.starts_with("begin") {
                            envs.push(name);
                        } else if envs.pop().as_deref() != Some(name.as_str()) {
                            return false;
                        }
                    }
                    if matches!(rest.chars().next(), Some('{' | '}' | '\\' | '%')) {
                        chars.next();
                    }
                }
                '%' => break,
                '{' => depth += 1,
                '}' => {
                    depth -= 1;
                    if depth < 0 {
                        return false;
                    }
                }
                _ => {}
            }
        }
    }
    depth == 0 && envs.is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn balance_checker() {
        assert!(is_balanced("\\begin{a}{x\\}}\\end{a}"));
        assert!(!is_balanced("\\begin{a}\\end{b}"));
        assert!(!is_balanced("{"));
        assert!(!is_balanced("}{"));
        assert!(is_balanced("% {\n"));
    }

    #[test]
    fn escapes_specials() {
        assert_eq!(escape("a_b & {c}"), "a\\_b \\& \\{c\\}");
        assert!(is_balanced(&escape("}}{")));
    }
}
