//! The CCE polytope and Nash set drawn inside the probability simplex.
//!
//! The simplex over the four pure joints is a unit-edge regular tetrahedron
//! centered at the origin and seen through a perspective camera.

use super::scene::{Anchor, Color, Fill, Point, Role, Scene, Shape, Stroke};
use super::StyleOptions;
use crate::distribution::{JointDistribution, MarginalPair};
use crate::equilibria::{cce_polytope, CcePolytope};
use crate::game::{Cell, Game};
use crate::nash::{nash_set, NashBox, NashSet, Shape as NashShape};
use crate::rational::Rational;

pub type Vec3 = [f64; 3];

const NE_SURFACE_LINES: usize = 4;

fn sub(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn dot(a: Vec3, b: Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: Vec3, b: Vec3) -> Vec3 {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn scale(a: Vec3, s: f64) -> Vec3 {
    [a[0] * s, a[1] * s, a[2] * s]
}

fn normalize(a: Vec3) -> Vec3 {
    scale(a, 1.0 / dot(a, a).sqrt())
}

/// Vertices of AA, AB, BA, BB: alternate corners of a cube, scaled to unit edge.
pub fn simplex_vertices() -> [Vec3; 4] {
    let s = 1.0 / (2.0 * 2f64.sqrt());
    [[s, s, s], [s, -s, -s], [-s, s, -s], [-s, -s, s]]
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Camera {
    pub azimuth_deg: f64,
    pub elevation_deg: f64,
    pub distance: f64,
}

impl Camera {
    pub const DEFAULT_AZIMUTH_DEG: f64 = 25.0;
    pub const DEFAULT_ELEVATION_DEG: f64 = 20.0;
    pub const DISTANCE: f64 = 3.5;

    pub fn from_style(style: &StyleOptions) -> Camera {
        Camera {
            azimuth_deg: style.camera_azimuth_deg,
            elevation_deg: style.camera_elevation_deg,
            distance: Camera::DISTANCE,
        }
    }

    pub fn position(&self) -> Vec3 {
        let (az, el) = (self.azimuth_deg.to_radians(), self.elevation_deg.to_radians());
        scale([el.cos() * az.cos(), el.cos() * az.sin(), el.sin()], self.distance)
    }

    /// Perspective projection onto the image plane at unit focal length.
    pub fn project(&self, p: Vec3) -> (f64, f64) {
        let eye = self.position();
        let forward = normalize(scale(eye, -1.0));
        let right = normalize(cross(forward, [0.0, 0.0, 1.0]));
        let up = cross(right, forward);
        let rel = sub(p, eye);
        let depth = dot(rel, forward);
        (dot(rel, right) / depth, dot(rel, up) / depth)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PolytopeScene {
    pub simplex_vertices: [Vec3; 4],
    pub polytope: CcePolytope,
    pub nash: NashSet,
    pub camera: Camera,
}

impl PolytopeScene {
    pub fn new(game: &Game, style: &StyleOptions) -> PolytopeScene {
        PolytopeScene {
            simplex_vertices: simplex_vertices(),
            polytope: cce_polytope(game),
            nash: nash_set(game),
            camera: Camera::from_style(style),
        }
    }

    pub fn position(&self, joint: &[Rational; 4]) -> Vec3 {
        let mut out = [0.0; 3];
        for (p, v) in joint.iter().zip(&self.simplex_vertices) {
            let p = p.to_f64();
            for k in 0..3 {
                out[k] += p * v[k];
            }
        }
        out
    }

    pub fn project(&self, joint: &[Rational; 4]) -> (f64, f64) {
        self.camera.project(self.position(joint))
    }

    /// Tetrahedron edges `(i, j)` with whether they are hidden, i.e. both
    /// adjacent faces point away from the camera.
    pub fn simplex_edges(&self) -> Vec<(usize, usize, bool)> {
        let eye = self.camera.position();
        let v = &self.simplex_vertices;
        let front = |opposite: usize| {
            let face: Vec<Vec3> = (0..4).filter(|&k| k != opposite).map(|k| v[k]).collect();
            let centroid = scale([0, 1, 2].map(|k| face[0][k] + face[1][k] + face[2][k]), 1.0 / 3.0);
            let outward = sub(centroid, v[opposite]);
            dot(outward, sub(eye, centroid)) > 0.0
        };
        let mut out = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                let hidden = (0..4).filter(|&k| k != i && k != j).all(|k| !front(k));
                out.push((i, j, hidden));
            }
        }
        out
    }

    pub fn scene(&self, style: &StyleOptions) -> Scene {
        let size = style.size_pt;
        let w = style.stroke_width_pt;
        let corners: Vec<(f64, f64)> = self.simplex_vertices.iter().map(|v| self.camera.project(*v)).collect();
        let (min_x, max_x) = bounds(corners.iter().map(|c| c.0));
        let (min_y, max_y) = bounds(corners.iter().map(|c| c.1));
        let margin = 0.12 * size;
        let k = (size - 2.0 * margin) / (max_x - min_x).max(max_y - min_y);
        let height = (max_y - min_y) * k + 2.0 * margin;
        let to_scene = |(x, y): (f64, f64)| Point::new(margin + (x - min_x) * k, margin + (y - min_y) * k);
        let joint_point = |joint: &[Rational; 4]| to_scene(self.project(joint));
        let corner = |i: usize| to_scene(corners[i]);
        let solid = |color: Color, width: f64| Stroke { color, width, dashed: false, arrow: false };
        let dashed = |color: Color, width: f64| Stroke { color, width, dashed: true, arrow: false };

        let mut scene = Scene::new(size, height);
        let edges = self.simplex_edges();
        for &(i, j, hidden) in &edges {
            if hidden {
                scene.push(
                    Role::SimplexEdgeHidden,
                    Shape::Line { from: corner(i), to: corner(j), stroke: dashed(Color::LIGHT_GRAY, w) },
                );
            }
        }
        for &(a, b) in &self.polytope.edges {
            let (pa, pb) = (self.polytope.vertices[a].as_array(), self.polytope.vertices[b].as_array());
            scene.push(
                Role::CceEdge,
                Shape::Line { from: joint_point(pa), to: joint_point(pb), stroke: solid(Color::PURPLE, 1.5 * w) },
            );
        }
        for &(i, j, hidden) in &edges {
            if !hidden {
                scene.push(Role::SimplexEdge, Shape::Line { from: corner(i), to: corner(j), stroke: solid(Color::BLACK, w) });
            }
        }
        for vertex in &self.polytope.vertices {
            scene.push(
                Role::CceVertex,
                Shape::Circle {
                    center: joint_point(vertex.as_array()),
                    radius: 2.0 * w,
                    fill: Some(Fill { color: Color::PURPLE, opacity: 1.0 }),
                    stroke: None,
                },
            );
        }
        for component in self.nash.components() {
            self.draw_nash_component(&mut scene, component, &joint_point, style);
        }
        if style.show_axes_labels {
            let center = to_scene(self.camera.project([0.0; 3]));
            for cell in Cell::ALL {
                let at = corner(cell.index());
                let (dx, dy) = (at.x - center.x, at.y - center.y);
                let len = dx.hypot(dy).max(1e-9);
                let push = 0.06 * size;
                scene.push(
                    Role::Label,
                    Shape::Text {
                        at: Point::new(at.x + dx / len * push, at.y + dy / len * push),
                        text: cell.to_string(),
                        anchor: Anchor::Center,
                        size: 0.07 * size,
                        color: Color::BLACK,
                    },
                );
            }
        }
        scene
    }

    fn draw_nash_component(
        &self,
        scene: &mut Scene,
        component: &NashBox,
        joint_point: &dyn Fn(&[Rational; 4]) -> Point,
        style: &StyleOptions,
    ) {
        let w = style.stroke_width_pt;
        let product = |p: &Rational, q: &Rational| {
            let m = MarginalPair::new(p.clone(), q.clone()).expect("Nash components lie in the unit square");
            joint_point(JointDistribution::product(&m).as_array())
        };
        let stroke = Stroke { color: Color::BLUE, width: w, dashed: true, arrow: false };
        match component.shape() {
            NashShape::Point => scene.push(
                Role::NePoint,
                Shape::Circle {
                    center: product(&component.p.lo, &component.q.lo),
                    radius: 3.0 * w,
                    fill: Some(Fill { color: Color::BLUE, opacity: 1.0 }),
                    stroke: None,
                },
            ),
            NashShape::Segment => scene.push(
                Role::NeSegment,
                Shape::Line {
                    from: product(&component.p.lo, &component.q.lo),
                    to: product(&component.p.hi, &component.q.hi),
                    stroke,
                },
            ),
            NashShape::Box => {
                // Joints are linear in p for fixed q and vice versa, so the
                // product surface is ruled by straight lines.
                let steps = NE_SURFACE_LINES as i64;
                let along = |lo: &Rational, hi: &Rational, i: i64| lo + &((hi - lo) * Rational::from(i) / Rational::from(steps));
                for i in 0..=steps {
                    let p = along(&component.p.lo, &component.p.hi, i);
                    scene.push(
                        Role::NeSurface,
                        Shape::Line { from: product(&p, &component.q.lo), to: product(&p, &component.q.hi), stroke: stroke.clone() },
                    );
                    let q = along(&component.q.lo, &component.q.hi, i);
                    scene.push(
                        Role::NeSurface,
                        Shape::Line { from: product(&component.p.lo, &q), to: product(&component.p.hi, &q), stroke: stroke.clone() },
                    );
                }
            }
        }
    }
}

fn bounds(values: impl Iterator<Item = f64>) -> (f64, f64) {
    values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)))
}
