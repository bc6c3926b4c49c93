//! Equilibrium-invariant embedding of 2×2 games.
//!
//! A player's equilibrium behaviour depends only on the advantage of action
//! A over action B against each opponent pure action, and only up to a
//! positive factor. Reducing each player's advantage vector to a coprime
//! integer direction therefore gives a description that is unchanged by
//! positive scaling and by offsets that depend on the opponent's action.
//! Each direction is one angle, so a game embeds as a point on a torus.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::classify::{class_of_br_graph, BrClass};
use crate::game::{Action, Game, Player};
use crate::graphs::{BrGraph, Preference};
use crate::rational::Rational;
use crate::symmetry::Symmetry;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdvantageVector {
    pub given_opponent_a: Rational,
    pub given_opponent_b: Rational,
}

impl AdvantageVector {
    pub fn is_zero(&self) -> bool {
        self.given_opponent_a.is_zero() && self.given_opponent_b.is_zero()
    }
}

/// Row: `(G1(A,A) - G1(B,A), G1(A,B) - G1(B,B))`;
/// column: `(G2(A,A) - G2(A,B), G2(B,A) - G2(B,B))`.
pub fn advantage(game: &Game, player: Player) -> AdvantageVector {
    let [given_opponent_a, given_opponent_b] = crate::nash::advantages(game, player);
    AdvantageVector { given_opponent_a, given_opponent_b }
}

/// A nonzero advantage vector reduced to coprime integers. Signs are kept:
/// negating a direction changes the game.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Direction {
    pub given_opponent_a: BigInt,
    pub given_opponent_b: BigInt,
}

impl Direction {
    pub fn from_advantage(adv: &AdvantageVector) -> Option<Direction> {
        if adv.is_zero() {
            return None;
        }
        let (a, b) = (&adv.given_opponent_a, &adv.given_opponent_b);
        let lcm = a.denom().lcm(&b.denom());
        let x = a.numer() * (&lcm / a.denom());
        let y = b.numer() * (&lcm / b.denom());
        let g = x.gcd(&y);
        Some(Direction { given_opponent_a: x / &g, given_opponent_b: y / &g })
    }

    pub fn from_ints(a: i64, b: i64) -> Option<Direction> {
        let adv = AdvantageVector { given_opponent_a: a.into(), given_opponent_b: b.into() };
        Direction::from_advantage(&adv)
    }

    /// `atan2(vs B, vs A)` in degrees, in `[0, 360)`. For plotting only.
    pub fn angle_degrees(&self) -> f64 {
        let x = self.given_opponent_a.to_f64().unwrap_or(0.0);
        let y = self.given_opponent_b.to_f64().unwrap_or(0.0);
        let deg = y.atan2(x).to_degrees();
        let wrapped = if deg < 0.0 { deg + 360.0 } else { deg };
        if wrapped >= 360.0 {
            0.0
        } else {
            wrapped
        }
    }

    fn negated(&self) -> Direction {
        Direction { given_opponent_a: -&self.given_opponent_a, given_opponent_b: -&self.given_opponent_b }
    }

    fn swapped(&self) -> Direction {
        Direction { given_opponent_a: self.given_opponent_b.clone(), given_opponent_b: self.given_opponent_a.clone() }
    }

    fn component(&self, opponent_action: Action) -> &BigInt {
        match opponent_action {
            Action::A => &self.given_opponent_a,
            Action::B => &self.given_opponent_b,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.given_opponent_a, self.given_opponent_b)
    }
}

/// A game's embedding: one direction per player, absent for a player who
/// is indifferent everywhere.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EmbeddingPoint {
    pub row: Option<Direction>,
    pub col: Option<Direction>,
}

impl EmbeddingPoint {
    pub fn direction(&self, player: Player) -> Option<&Direction> {
        match player {
            Player::Row => self.row.as_ref(),
            Player::Col => self.col.as_ref(),
        }
    }

    pub fn row_angle_degrees(&self) -> Option<f64> {
        self.row.as_ref().map(Direction::angle_degrees)
    }

    pub fn col_angle_degrees(&self) -> Option<f64> {
        self.col.as_ref().map(Direction::angle_degrees)
    }

    /// Both players nontrivial: the point can be placed on the angle torus.
    pub fn angles(&self) -> Option<(f64, f64)> {
        Some((self.row_angle_degrees()?, self.col_angle_degrees()?))
    }

    pub fn is_trivial(&self) -> bool {
        self.row.is_none() && self.col.is_none()
    }

    /// How the embedding moves under a symmetry of the game.
    ///
    /// | element            | effect                                              |
    /// |--------------------|-----------------------------------------------------|
    /// | swap row actions   | row direction negated, column components exchanged  |
    /// | swap column actions| row components exchanged, column direction negated  |
    /// | swap players       | row and column directions exchanged                 |
    ///
    /// Action swaps are applied before the player swap.
    pub fn permute(&self, symmetry: Symmetry) -> EmbeddingPoint {
        let transform = |source: Player| {
            let (own_flip, opponent_flip) = match source {
                Player::Row => (symmetry.swap_row_actions, symmetry.swap_col_actions),
                Player::Col => (symmetry.swap_col_actions, symmetry.swap_row_actions),
            };
            self.direction(source).map(|d| {
                let d = if opponent_flip { d.swapped() } else { d.clone() };
                if own_flip {
                    d.negated()
                } else {
                    d
                }
            })
        };
        let row = transform(Player::Row);
        let col = transform(Player::Col);
        if symmetry.swap_players {
            EmbeddingPoint { row: col, col: row }
        } else {
            EmbeddingPoint { row, col }
        }
    }

    /// Best-response graph encoded by the signs of the directions.
    pub fn br_graph(&self) -> BrGraph {
        let mut fields = [Preference::Indifferent; 4];
        for player in Player::ALL {
            for opponent_action in Action::ALL {
                let pref = match self.direction(player).map(|d| d.component(opponent_action)) {
                    Some(v) if v.is_positive() => Preference::A,
                    Some(v) if v.is_negative() => Preference::B,
                    Some(v) => {
                        debug_assert!(v.is_zero());
                        Preference::Indifferent
                    }
                    None => Preference::Indifferent,
                };
                fields[player.index() * 2 + opponent_action.index()] = pref;
            }
        }
        BrGraph::new(fields)
    }
}

pub fn embed(game: &Game) -> EmbeddingPoint {
    EmbeddingPoint {
        row: Direction::from_advantage(&advantage(game, Player::Row)),
        col: Direction::from_advantage(&advantage(game, Player::Col)),
    }
}

pub fn class_of_embedding(point: &EmbeddingPoint) -> BrClass {
    class_of_br_graph(&point.br_graph())
}
