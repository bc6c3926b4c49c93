//! Independent checks of the equilibrium and embedding code on random games.
//!
//! The oracles here evaluate the equilibrium inequalities by direct
//! summation over joint actions and share no code with the solvers they
//! check. [`Solver`] abstracts the code under test so a deliberately broken
//! solver can be fed through the same checks as a negative control.

use std::fmt;

use rand::Rng;

use crate::classify::{br_class, BrClass};
use crate::distribution::{JointDistribution, MarginalPair};
use crate::embedding::{class_of_embedding, embed, EmbeddingPoint};
use crate::equilibria::{cce_polytope, joint_in_cce, CcePolytope};
use crate::game::{Action, Cell, Game, Player};
use crate::graphs::br_graph;
use crate::linalg;
use crate::nash::{is_nash, nash_set, NashSet};
use crate::rational::Rational;

/// The operations the oracle suite checks.
pub trait Solver {
    fn is_nash(&self, game: &Game, m: &MarginalPair) -> bool;
    fn nash_set(&self, game: &Game) -> NashSet;
    fn cce_polytope(&self, game: &Game) -> CcePolytope;
    fn joint_in_cce(&self, game: &Game, joint: &JointDistribution) -> bool;
    fn embed(&self, game: &Game) -> EmbeddingPoint;
    fn class_of_embedding(&self, point: &EmbeddingPoint) -> BrClass;
}

/// The crate's own implementations.
#[derive(Debug, Clone, Copy, Default)]
pub struct Library;

impl Solver for Library {
    fn is_nash(&self, game: &Game, m: &MarginalPair) -> bool {
        is_nash(game, m)
    }
    fn nash_set(&self, game: &Game) -> NashSet {
        nash_set(game)
    }
    fn cce_polytope(&self, game: &Game) -> CcePolytope {
        cce_polytope(game)
    }
    fn joint_in_cce(&self, game: &Game, joint: &JointDistribution) -> bool {
        joint_in_cce(game, joint)
    }
    fn embed(&self, game: &Game) -> EmbeddingPoint {
        embed(game)
    }
    fn class_of_embedding(&self, point: &EmbeddingPoint) -> BrClass {
        class_of_embedding(point)
    }
}

/// Expected gain for `player` from switching every action to `deviation`,
/// summed directly over joint actions.
pub fn deviation_gain(game: &Game, player: Player, deviation: Action, joint: &[Rational; 4]) -> Rational {
    let mut total = Rational::zero();
    for r in Action::ALL {
        for c in Action::ALL {
            let played = Cell::new(r, c);
            let deviated = match player {
                Player::Row => Cell::new(deviation, c),
                Player::Col => Cell::new(r, deviation),
            };
            let delta = game.payoff(player, deviated) - game.payoff(player, played);
            total += &joint[played.index()] * &delta;
        }
    }
    total
}

/// No player gains by any pure deviation from the joint.
pub fn oracle_cce(game: &Game, joint: &[Rational; 4]) -> bool {
    Player::ALL
        .iter()
        .all(|&p| Action::ALL.iter().all(|&d| !deviation_gain(game, p, d, joint).is_positive()))
}

/// Nash condition: the product of the marginals is a CCE.
pub fn oracle_nash(game: &Game, p: &Rational, q: &Rational) -> bool {
    let row = [p.clone(), Rational::one() - p];
    let col = [q.clone(), Rational::one() - q];
    let joint = [&row[0] * &col[0], &row[0] * &col[1], &row[1] * &col[0], &row[1] * &col[1]];
    oracle_cce(game, &joint)
}

/// Number of linearly independent defining constraints tight at `point`,
/// counted inside the hyperplane `sum = 1`.
pub fn oracle_tight_rank(game: &Game, point: &[Rational; 4]) -> usize {
    let mut rows = vec![vec![Rational::one(); 4]];
    for p in Player::ALL {
        for d in Action::ALL {
            if deviation_gain(game, p, d, point).is_zero() {
                // Gradient of the gain in the joint coordinates.
                let grad = (0..4)
                    .map(|i| {
                        let mut unit = [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()];
                        unit[i] = Rational::one();
                        deviation_gain(game, p, d, &unit)
                    })
                    .collect();
                rows.push(grad);
            }
        }
    }
    for i in 0..4 {
        if point[i].is_zero() {
            let mut row = vec![Rational::zero(); 4];
            row[i] = Rational::one();
            rows.push(row);
        }
    }
    linalg::rank(&rows) - 1
}

/// A game that failed a check, and what failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub game: Box<Game>,
    pub check: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check, self.game)
    }
}

/// Random payoffs with frequent ties: small integers most of the time,
/// otherwise fractions with small denominators.
pub fn random_game<R: Rng + ?Sized>(rng: &mut R) -> Game {
    let style = rng.random_range(0..4);
    let values: Vec<Rational> = (0..8)
        .map(|_| match style {
            0 => Rational::from_integer(rng.random_range(-1..=1)),
            1 => Rational::from_integer(rng.random_range(-3..=3)),
            _ => Rational::new(rng.random_range(-20..=20), rng.random_range(1..=6)).expect("nonzero denominator"),
        })
        .collect();
    Game::from_flat(&values).expect("eight values")
}

pub fn random_unit_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let den = rng.random_range(1..=12);
    Rational::new(rng.random_range(0..=den), den).expect("nonzero denominator")
}

pub fn random_joint<R: Rng + ?Sized>(rng: &mut R) -> JointDistribution {
    let weights: Vec<i64> = (0..4).map(|_| rng.random_range(0..=9)).collect();
    let total: i64 = weights.iter().sum();
    if total == 0 {
        return JointDistribution::uniform();
    }
    let prob = std::array::from_fn(|i| Rational::new(weights[i], total).expect("positive total"));
    JointDistribution::new(prob).expect("weights normalise to one")
}

/// Settings for [`check_game`].
#[derive(Debug, Clone, Copy)]
pub struct CheckConfig {
    /// Grid resolution: points `i / grid` for `i` in `0..=grid`.
    pub grid: i64,
    /// Random convex combinations of polytope vertices per game.
    pub combinations: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig { grid: 100, combinations: 100 }
    }
}

fn fail(game: &Game, check: impl Into<String>) -> Counterexample {
    Counterexample { game: Box::new(game.clone()), check: check.into() }
}

/// Nash checks: `is_nash` and `nash_set` agree with the direct oracle at
/// every grid point, and every component's corners and centre are equilibria.
pub fn check_nash(solver: &dyn Solver, game: &Game, grid: i64) -> Result<(), Counterexample> {
    let set = solver.nash_set(game);
    if set.components().is_empty() {
        return Err(fail(game, "nash set is empty"));
    }
    let ticks: Vec<Rational> = (0..=grid).map(|i| Rational::new(i, grid).expect("grid > 0")).collect();
    for p in &ticks {
        for q in &ticks {
            let expected = oracle_nash(game, p, q);
            let m = MarginalPair::new(p.clone(), q.clone()).expect("grid point in the square");
            if solver.is_nash(game, &m) != expected {
                return Err(fail(game, format!("is_nash disagrees with oracle at ({p}, {q})")));
            }
            if set.contains(&m) != expected {
                return Err(fail(game, format!("nash set membership disagrees with oracle at ({p}, {q})")));
            }
        }
    }
    for component in set.components() {
        for m in component.corners().iter().chain(std::iter::once(&component.center())) {
            if !oracle_nash(game, m.row_prob_a(), m.col_prob_a()) {
                return Err(fail(game, format!("component {component} contains a non-equilibrium point")));
            }
        }
    }
    Ok(())
}

/// CCE checks: vertices feasible with full tight rank, convex combinations
/// inside, membership agrees with the oracle on random joints, and the
/// product joints of equilibria are inside.
pub fn check_cce<R: Rng + ?Sized>(
    solver: &dyn Solver,
    game: &Game,
    combinations: usize,
    rng: &mut R,
) -> Result<(), Counterexample> {
    let poly = solver.cce_polytope(game);
    if poly.vertices.is_empty() {
        return Err(fail(game, "cce polytope is empty"));
    }
    for v in &poly.vertices {
        if !oracle_cce(game, v.as_array()) {
            return Err(fail(game, format!("polytope vertex {:?} violates a deviation constraint", v.as_array())));
        }
        if oracle_tight_rank(game, v.as_array()) < 3 {
            return Err(fail(game, format!("polytope vertex {:?} has fewer than 3 tight constraints", v.as_array())));
        }
    }
    for _ in 0..combinations {
        let weights: Vec<i64> = poly.vertices.iter().map(|_| rng.random_range(0..=5)).collect();
        let total: i64 = weights.iter().sum::<i64>().max(1);
        let mut point: [Rational; 4] = std::array::from_fn(|_| Rational::zero());
        for (v, w) in poly.vertices.iter().zip(&weights) {
            let w = Rational::new(*w, total).expect("positive total");
            for (x, y) in point.iter_mut().zip(v.as_array()) {
                *x += &w * y;
            }
        }
        let Ok(joint) = JointDistribution::new(point) else {
            // All weights zero: fall back to the first vertex.
            if !solver.joint_in_cce(game, &poly.vertices[0]) {
                return Err(fail(game, "vertex rejected by joint_in_cce"));
            }
            continue;
        };
        if !solver.joint_in_cce(game, &joint) {
            return Err(fail(game, format!("convex combination {:?} rejected by joint_in_cce", joint.as_array())));
        }
        let random = random_joint(rng);
        if solver.joint_in_cce(game, &random) != oracle_cce(game, random.as_array()) {
            return Err(fail(game, format!("joint_in_cce disagrees with oracle at {:?}", random.as_array())));
        }
    }
    for component in solver.nash_set(game).components() {
        for m in component.corners().iter().chain(std::iter::once(&component.center())) {
            let joint = JointDistribution::product(m);
            if !solver.joint_in_cce(game, &joint) {
                return Err(fail(game, format!("equilibrium product joint {:?} outside the CCE set", joint.as_array())));
            }
        }
    }
    Ok(())
}

/// Embedding checks: the embedding's class matches the game's, and the
/// embedding, best-response graph and equilibria survive a random affine
/// transform of a random player.
pub fn check_embedding<R: Rng + ?Sized>(solver: &dyn Solver, game: &Game, rng: &mut R) -> Result<(), Counterexample> {
    let point = solver.embed(game);
    if solver.class_of_embedding(&point) != br_class(game) {
        return Err(fail(game, "class_of_embedding(embed(g)) differs from br_class(g)"));
    }
    let player = Player::ALL[rng.random_range(0..2)];
    let scale = Rational::new(rng.random_range(1..=9), rng.random_range(1..=4)).expect("nonzero denominator");
    let offsets = [
        Rational::new(rng.random_range(-9..=9), rng.random_range(1..=3)).expect("nonzero denominator"),
        Rational::new(rng.random_range(-9..=9), rng.random_range(1..=3)).expect("nonzero denominator"),
    ];
    let moved = game
        .transform_affine(player, &scale, [&offsets[0], &offsets[1]])
        .expect("positive scale");
    if solver.embed(&moved) != point {
        return Err(fail(game, "embedding changed under an affine transform"));
    }
    if br_graph(&moved) != br_graph(game) {
        return Err(fail(game, "best-response graph changed under an affine transform"));
    }
    if solver.nash_set(&moved) != solver.nash_set(game) {
        return Err(fail(game, "nash set changed under an affine transform"));
    }
    if solver.cce_polytope(&moved).vertices != solver.cce_polytope(game).vertices {
        return Err(fail(game, "cce vertices changed under an affine transform"));
    }
    Ok(())
}

pub fn check_game<R: Rng + ?Sized>(
    solver: &dyn Solver,
    game: &Game,
    config: CheckConfig,
    rng: &mut R,
) -> Result<(), Counterexample> {
    check_nash(solver, game, config.grid)?;
    check_cce(solver, game, config.combinations, rng)?;
    check_embedding(solver, game, rng)
}
