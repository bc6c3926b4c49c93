//! 2×2 games, players, actions and payoff evaluation.

use std::fmt;

use crate::distribution::JointDistribution;
use crate::error::{GameError, Result};
use crate::rational::Rational;
use crate::symmetry::Symmetry;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Player {
    Row,
    Col,
}

impl Player {
    pub const ALL: [Player; 2] = [Player::Row, Player::Col];

    pub fn index(self) -> usize {
        match self {
            Player::Row => 0,
            Player::Col => 1,
        }
    }

    pub fn opponent(self) -> Player {
        match self {
            Player::Row => Player::Col,
            Player::Col => Player::Row,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Player::Row => "row",
            Player::Col => "col",
        }
    }
}

/// A pure action. Externally `A` is index 0 and `B` is index 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Action {
    A,
    B,
}

impl Action {
    pub const ALL: [Action; 2] = [Action::A, Action::B];

    pub fn index(self) -> usize {
        match self {
            Action::A => 0,
            Action::B => 1,
        }
    }

    pub fn from_index(index: usize) -> Option<Action> {
        match index {
            0 => Some(Action::A),
            1 => Some(Action::B),
            _ => None,
        }
    }

    pub fn other(self) -> Action {
        match self {
            Action::A => Action::B,
            Action::B => Action::A,
        }
    }

    pub fn flipped_if(self, flip: bool) -> Action {
        if flip {
            self.other()
        } else {
            self
        }
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Action::A => "A",
            Action::B => "B",
        })
    }
}

/// A joint pure action `(row action, column action)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: Action,
    pub col: Action,
}

impl Cell {
    pub const AA: Cell = Cell { row: Action::A, col: Action::A };
    pub const AB: Cell = Cell { row: Action::A, col: Action::B };
    pub const BA: Cell = Cell { row: Action::B, col: Action::A };
    pub const BB: Cell = Cell { row: Action::B, col: Action::B };

    /// Row-major order, the order of every flat 4-tuple in the crate.
    pub const ALL: [Cell; 4] = [Cell::AA, Cell::AB, Cell::BA, Cell::BB];

    pub fn new(row: Action, col: Action) -> Cell {
        Cell { row, col }
    }

    pub fn index(self) -> usize {
        self.row.index() * 2 + self.col.index()
    }

    pub fn from_index(index: usize) -> Option<Cell> {
        Cell::ALL.get(index).copied()
    }

    /// The action `player` takes in this cell.
    pub fn action_of(self, player: Player) -> Action {
        match player {
            Player::Row => self.row,
            Player::Col => self.col,
        }
    }

    /// The cell reached when `player` switches to `action` and the opponent stays.
    pub fn with_action(self, player: Player, action: Action) -> Cell {
        match player {
            Player::Row => Cell { row: action, ..self },
            Player::Col => Cell { col: action, ..self },
        }
    }

    pub fn transposed(self) -> Cell {
        Cell { row: self.col, col: self.row }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.row, self.col)
    }
}

/// The set of best responses; never empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BestResponse {
    Only(Action),
    Both,
}

impl BestResponse {
    pub fn contains(self, action: Action) -> bool {
        match self {
            BestResponse::Only(a) => a == action,
            BestResponse::Both => true,
        }
    }

    pub fn actions(self) -> Vec<Action> {
        Action::ALL.into_iter().filter(|&a| self.contains(a)).collect()
    }
}

/// A two-player, two-action game with exact payoffs.
///
/// Payoffs are stored per player in row-major cell order, so the flat
/// 8-tuple form is `(G1(A,A), G1(A,B), G1(B,A), G1(B,B), G2(A,A), ..., G2(B,B))`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Game {
    payoffs: [[Rational; 4]; 2],
}

impl Game {
    pub fn new(row: [Rational; 4], col: [Rational; 4]) -> Game {
        Game { payoffs: [row, col] }
    }

    pub fn from_flat(values: &[Rational]) -> Result<Game> {
        let values: &[Rational; 8] =
            values.try_into().map_err(|_| GameError::Arity { expected: 8, found: values.len() })?;
        Ok(Game {
            payoffs: [
                std::array::from_fn(|i| values[i].clone()),
                std::array::from_fn(|i| values[4 + i].clone()),
            ],
        })
    }

    pub fn from_ints(values: [i64; 8]) -> Game {
        Game {
            payoffs: [
                std::array::from_fn(|i| Rational::from_integer(values[i])),
                std::array::from_fn(|i| Rational::from_integer(values[4 + i])),
            ],
        }
    }

    /// Parses eight payoff literals (integers, decimals or fractions).
    pub fn parse_flat<S: AsRef<str>>(tokens: &[S]) -> Result<Game> {
        let values = tokens
            .iter()
            .map(|t| t.as_ref().parse::<Rational>())
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Game::from_flat(&values)
    }

    pub fn zero() -> Game {
        Game::from_ints([0; 8])
    }

    pub fn to_flat(&self) -> [Rational; 8] {
        std::array::from_fn(|i| self.payoffs[i / 4][i % 4].clone())
    }

    pub fn payoff(&self, player: Player, cell: Cell) -> &Rational {
        &self.payoffs[player.index()][cell.index()]
    }

    /// All four payoffs of one player in row-major cell order.
    pub fn payoffs(&self, player: Player) -> &[Rational; 4] {
        &self.payoffs[player.index()]
    }

    pub fn expected_payoff(&self, player: Player, joint: &JointDistribution) -> Rational {
        Cell::ALL
            .into_iter()
            .map(|cell| joint.prob(cell) * self.payoff(player, cell))
            .sum()
    }

    /// Payoff to `player` for playing `action` while the opponent plays A
    /// with probability `opponent_mix`.
    pub fn payoff_against_mix(&self, player: Player, action: Action, opponent_mix: &Rational) -> Rational {
        let cell_a = Cell::new(action, Action::A);
        let cell_b = Cell::new(action, Action::B);
        let (vs_a, vs_b) = match player {
            Player::Row => (cell_a, cell_b),
            Player::Col => (cell_a.transposed(), cell_b.transposed()),
        };
        opponent_mix * self.payoff(player, vs_a) + opponent_mix.complement() * self.payoff(player, vs_b)
    }

    pub fn best_response_set(&self, player: Player, opponent_mix: &Rational) -> Result<BestResponse> {
        if !opponent_mix.in_unit_interval() {
            return Err(GameError::Domain(format!("opponent mix {opponent_mix} is outside [0, 1]")));
        }
        let value_a = self.payoff_against_mix(player, Action::A, opponent_mix);
        let value_b = self.payoff_against_mix(player, Action::B, opponent_mix);
        Ok(match value_a.cmp(&value_b) {
            std::cmp::Ordering::Greater => BestResponse::Only(Action::A),
            std::cmp::Ordering::Less => BestResponse::Only(Action::B),
            std::cmp::Ordering::Equal => BestResponse::Both,
        })
    }

    /// Positive scaling plus an offset that depends only on the opponent's action:
    /// `G_p(a) -> scale * G_p(a) + offsets[a_opponent]`.
    pub fn transform_affine(&self, player: Player, scale: &Rational, offsets: [&Rational; 2]) -> Result<Game> {
        if !scale.is_positive() {
            return Err(GameError::Domain(format!("scale must be positive, got {scale}")));
        }
        let mut out = self.clone();
        for cell in Cell::ALL {
            let offset = offsets[cell.action_of(player.opponent()).index()];
            out.payoffs[player.index()][cell.index()] = scale * self.payoff(player, cell) + offset;
        }
        Ok(out)
    }

    pub fn permute(&self, symmetry: Symmetry) -> Game {
        Game {
            payoffs: std::array::from_fn(|p| {
                let player = Player::ALL[p];
                std::array::from_fn(|c| {
                    let (source_player, source_cell) = symmetry.source_of(player, Cell::ALL[c]);
                    self.payoff(source_player, source_cell).clone()
                })
            }),
        }
    }
}

impl fmt::Display for Game {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flat = self.to_flat();
        for (i, v) in flat.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Game {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Game({self})")
    }
}

/// Games used throughout the docs and tests.
pub mod named {
    use super::Game;

    pub fn prisoners_dilemma() -> Game {
        Game::from_ints([-1, -3, 0, -2, -1, 0, -3, -2])
    }

    pub fn matching_pennies() -> Game {
        Game::from_ints([1, -1, -1, 1, -1, 1, 1, -1])
    }

    pub fn coordination() -> Game {
        Game::from_ints([2, 0, 0, 1, 2, 0, 0, 1])
    }

    /// An anticoordination game whose mixed equilibrium puts 1/10 on A for
    /// both players, giving the joint (1/100, 9/100, 9/100, 81/100).
    pub fn traffic_lights() -> Game {
        Game::from_ints([-9, 1, 0, 0, -9, 0, 1, 0])
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;
    use crate::rational::rat;

    #[test]
    fn flat_order_is_row_player_row_major() {
        let pd = prisoners_dilemma();
        assert_eq!(pd.payoff(Player::Row, Cell::BA), &rat(0, 1));
        assert_eq!(pd.payoff(Player::Col, Cell::AB), &rat(0, 1));
        assert_eq!(pd.payoff(Player::Row, Cell::AB), &rat(-3, 1));
        let coord = coordination();
        assert_eq!(coord.payoff(Player::Row, Cell::AA), &rat(2, 1));
        assert_eq!(coord.payoff(Player::Col, Cell::AA), &rat(2, 1));
        assert!(Game::zero().to_flat().iter().all(Rational::is_zero));
    }

    #[test]
    fn wrong_arity_is_an_error() {
        let seven: Vec<Rational> = (0..7).map(Rational::from_integer).collect();
        assert_eq!(Game::from_flat(&seven), Err(GameError::Arity { expected: 8, found: 7 }));
        assert!(matches!(Game::parse_flat(&["1"; 9]), Err(GameError::Arity { found: 9, .. })));
    }

    #[test]
    fn parse_flat_reports_bad_token() {
        let err = Game::parse_flat(&["1", "2", "x3", "4", "5", "6", "7", "8"]).unwrap_err();
        match err {
            GameError::Parse(e) => assert_eq!(e.token(), "x3"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn expected_payoff_examples() {
        let bb = JointDistribution::point_mass(Cell::BB);
        assert_eq!(prisoners_dilemma().expected_payoff(Player::Row, &bb), rat(-2, 1));
        let aa = JointDistribution::point_mass(Cell::AA);
        let g = coordination();
        for p in Player::ALL {
            assert_eq!(&g.expected_payoff(p, &aa), g.payoff(p, Cell::AA));
        }
        let mp = matching_pennies();
        assert_eq!(mp.expected_payoff(Player::Row, &JointDistribution::uniform()), Rational::zero());
    }

    #[test]
    fn best_response_examples() {
        let pd = prisoners_dilemma();
        for q in [rat(0, 1), rat(1, 3), rat(1, 1)] {
            assert_eq!(pd.best_response_set(Player::Row, &q).unwrap(), BestResponse::Only(Action::B));
        }
        let half = rat(1, 2);
        assert_eq!(matching_pennies().best_response_set(Player::Row, &half).unwrap(), BestResponse::Both);
        assert_eq!(
            coordination().best_response_set(Player::Row, &half).unwrap(),
            BestResponse::Only(Action::A)
        );
        assert!(matches!(pd.best_response_set(Player::Col, &rat(3, 2)), Err(GameError::Domain(_))));
        assert!(matches!(pd.best_response_set(Player::Col, &rat(-1, 2)), Err(GameError::Domain(_))));
    }

    #[test]
    fn column_best_response_uses_row_mix() {
        // Column gets 2 at (A,A) and 1 at (B,B); row mixing 1/2 favours A.
        let g = coordination();
        assert_eq!(g.best_response_set(Player::Col, &rat(1, 2)).unwrap(), BestResponse::Only(Action::A));
        assert_eq!(g.best_response_set(Player::Col, &rat(1, 3)).unwrap(), BestResponse::Both);
        assert_eq!(g.best_response_set(Player::Col, &rat(0, 1)).unwrap(), BestResponse::Only(Action::B));
    }

    #[test]
    fn affine_examples() {
        let pd = prisoners_dilemma();
        let zero = Rational::zero();
        assert_eq!(pd.transform_affine(Player::Row, &Rational::one(), [&zero, &zero]).unwrap(), pd);
        let doubled = pd.transform_affine(Player::Row, &rat(2, 1), [&zero, &zero]).unwrap();
        assert_eq!(doubled.payoffs(Player::Row), &[rat(-2, 1), rat(-6, 1), rat(0, 1), rat(-4, 1)]);
        assert_eq!(doubled.payoffs(Player::Col), pd.payoffs(Player::Col));

        // Column offsets are indexed by the row player's action.
        let shifted = coordination()
            .transform_affine(Player::Col, &Rational::one(), [&rat(-2, 1), &rat(-1, 1)])
            .unwrap();
        assert_eq!(shifted.payoffs(Player::Col), &[rat(0, 1), rat(-2, 1), rat(-1, 1), rat(0, 1)]);
        assert_eq!(shifted.payoffs(Player::Row), coordination().payoffs(Player::Row));

        for bad in [rat(0, 1), rat(-1, 2)] {
            assert!(matches!(pd.transform_affine(Player::Row, &bad, [&zero, &zero]), Err(GameError::Domain(_))));
        }
    }

    #[test]
    fn permute_examples() {
        let coord = coordination();
        assert_eq!(coord.permute(Symmetry::IDENTITY), coord);
        let swapped = coord.permute(Symmetry::new(true, false, false));
        assert_eq!(swapped.payoffs(Player::Row), &[rat(0, 1), rat(1, 1), rat(2, 1), rat(0, 1)]);
        let players = Symmetry::new(false, false, true);
        let pd = prisoners_dilemma();
        assert_eq!(pd.permute(players).permute(players), pd);
        // The prisoner's dilemma is symmetric: swapping players is a no-op.
        assert_eq!(pd.permute(players), pd);
    }
}
