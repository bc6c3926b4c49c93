//! Coarse correlated equilibria: deviation constraints and the exact
//! polytope they cut out of the simplex of joint distributions.
//!
//! With two actions per player, correlated and coarse correlated equilibria
//! coincide, so [`CcePolytope`] is also the correlated-equilibrium set.

use std::collections::BTreeSet;

use crate::distribution::JointDistribution;
use crate::game::{Action, Cell, Game, Player};
use crate::linalg;
use crate::rational::Rational;

/// `sum_a sigma(a) * coefficients[a] <= 0`, where
/// `coefficients[a] = G_p(deviation, a_-p) - G_p(a)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DeviationConstraint {
    pub player: Player,
    pub deviation: Action,
    pub coefficients: [Rational; 4],
}

impl DeviationConstraint {
    /// Expected gain from deviating; the constraint holds when it is `<= 0`.
    pub fn gain(&self, joint: &JointDistribution) -> Rational {
        Cell::ALL
            .into_iter()
            .map(|c| joint.prob(c) * &self.coefficients[c.index()])
            .sum()
    }
}

/// One per `(player, deviation)` in the order Row→A, Row→B, Col→A, Col→B.
pub fn cce_constraints(game: &Game) -> [DeviationConstraint; 4] {
    std::array::from_fn(|i| {
        let player = Player::ALL[i / 2];
        let deviation = Action::ALL[i % 2];
        let coefficients = Cell::ALL.map(|cell| {
            game.payoff(player, cell.with_action(player, deviation)) - game.payoff(player, cell)
        });
        DeviationConstraint { player, deviation, coefficients }
    })
}

pub fn joint_in_cce(game: &Game, joint: &JointDistribution) -> bool {
    cce_constraints(game).iter().all(|c| !c.gain(joint).is_positive())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HalfspaceKind {
    Deviation { player: Player, deviation: Action },
    /// `sigma(cell) >= 0`, stored as `-sigma(cell) <= 0`.
    NonNegative(Cell),
}

/// `sum_a sigma(a) * coefficients[a] <= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Halfspace {
    pub kind: HalfspaceKind,
    pub coefficients: [Rational; 4],
}

impl Halfspace {
    pub fn value(&self, point: &[Rational; 4]) -> Rational {
        point.iter().zip(&self.coefficients).map(|(x, c)| x * c).sum()
    }
}

/// The eight defining inequalities: four deviation constraints, then
/// nonnegativity of each cell. Together with `sum sigma = 1`.
pub fn cce_halfspaces(game: &Game) -> Vec<Halfspace> {
    let deviations = cce_constraints(game).into_iter().map(|c| Halfspace {
        kind: HalfspaceKind::Deviation { player: c.player, deviation: c.deviation },
        coefficients: c.coefficients,
    });
    let nonneg = Cell::ALL.into_iter().map(|cell| Halfspace {
        kind: HalfspaceKind::NonNegative(cell),
        coefficients: std::array::from_fn(|i| {
            if i == cell.index() {
                -Rational::one()
            } else {
                Rational::zero()
            }
        }),
    });
    deviations.chain(nonneg).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CcePolytope {
    pub halfspaces: Vec<Halfspace>,
    /// Sorted lexicographically on `(AA, AB, BA, BB)`.
    pub vertices: Vec<JointDistribution>,
    /// Bitmask over `halfspaces` of the constraints tight at each vertex.
    pub tight: Vec<u8>,
    /// Index pairs `(i, j)` with `i < j`, sorted.
    pub edges: Vec<(usize, usize)>,
    pub dimension: usize,
}

impl CcePolytope {
    /// Rank of the tight constraints at vertex `v` within the affine hull of
    /// the simplex (the sum-to-one row is factored out).
    pub fn tight_rank(&self, v: usize) -> usize {
        let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::one(); 4]];
        rows.extend(
            self.halfspaces
                .iter()
                .enumerate()
                .filter(|(i, _)| self.tight[v] & (1 << i) != 0)
                .map(|(_, h)| h.coefficients.to_vec()),
        );
        linalg::rank(&rows) - 1
    }

    pub fn contains(&self, joint: &JointDistribution) -> bool {
        self.halfspaces.iter().all(|h| !h.value(joint.as_array()).is_positive())
    }
}

fn tight_mask(halfspaces: &[Halfspace], point: &[Rational; 4]) -> u8 {
    halfspaces
        .iter()
        .enumerate()
        .filter(|(_, h)| h.value(point).is_zero())
        .fold(0u8, |mask, (i, _)| mask | (1 << i))
}

/// Exact vertex enumeration: every choice of three inequalities made tight,
/// together with `sum sigma = 1`, is solved and kept when feasible.
pub fn cce_polytope(game: &Game) -> CcePolytope {
    let halfspaces = cce_halfspaces(game);
    let ones: [Rational; 4] = std::array::from_fn(|_| Rational::one());
    let rhs = [Rational::zero(), Rational::zero(), Rational::zero(), Rational::one()];

    let mut found: BTreeSet<[Rational; 4]> = BTreeSet::new();
    let n = halfspaces.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let system = [
                    halfspaces[i].coefficients.clone(),
                    halfspaces[j].coefficients.clone(),
                    halfspaces[k].coefficients.clone(),
                    ones.clone(),
                ];
                let Some(point) = linalg::solve(&system, &rhs) else { continue };
                if halfspaces.iter().all(|h| !h.value(&point).is_positive()) {
                    found.insert(point);
                }
            }
        }
    }

    let points: Vec<[Rational; 4]> = found.into_iter().collect();
    let tight: Vec<u8> = points.iter().map(|p| tight_mask(&halfspaces, p)).collect();

    // The smallest face containing two vertices is cut out by their common
    // tight constraints; it is an edge exactly when it holds no third vertex.
    let mut edges = Vec::new();
    for a in 0..points.len() {
        for b in a + 1..points.len() {
            let common = tight[a] & tight[b];
            let on_face = tight.iter().filter(|&&t| t & common == common).count();
            if on_face == 2 {
                edges.push((a, b));
            }
        }
    }

    let dimension = match points.split_first() {
        Some((origin, rest)) => {
            let diffs: Vec<Vec<Rational>> =
                rest.iter().map(|p| p.iter().zip(origin).map(|(x, o)| x - o).collect()).collect();
            linalg::rank(&diffs)
        }
        None => 0,
    };

    let vertices = points
        .into_iter()
        .map(|p| JointDistribution::new(p).expect("feasible vertices lie in the simplex"))
        .collect();

    CcePolytope { halfspaces, vertices, tight, edges, dimension }
}
