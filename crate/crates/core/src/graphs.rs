//! Partial-ordinal graphs and best-response graphs.

use std::fmt;

use crate::game::{Action, Cell, Game, Player};
use crate::rational::Rational;
use crate::symmetry::Symmetry;

/// Dense ranks of four payoffs: equal values share a rank, ranks start at 1
/// and have no gaps.
pub fn dense_ranks(values: &[Rational; 4]) -> [u8; 4] {
    let mut distinct: Vec<&Rational> = values.iter().collect();
    distinct.sort();
    distinct.dedup();
    values.each_ref().map(|v| {
        let pos = distinct.binary_search(&v).expect("value is present");
        pos as u8 + 1
    })
}

/// One player's preference graph over the four cells.
///
/// `levels` partitions the cells into sets of equal payoff, lowest payoff
/// first; every cell of a level points to every cell of the next level.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrdinalGraph {
    pub player: Player,
    pub levels: Vec<Vec<Cell>>,
    pub edges: Vec<(Cell, Cell)>,
}

impl OrdinalGraph {
    pub fn from_ranks(player: Player, ranks: [u8; 4]) -> OrdinalGraph {
        let top = ranks.iter().copied().max().unwrap_or(0);
        let levels: Vec<Vec<Cell>> = (1..=top)
            .map(|r| Cell::ALL.into_iter().filter(|c| ranks[c.index()] == r).collect())
            .filter(|level: &Vec<Cell>| !level.is_empty())
            .collect();
        let edges = levels
            .windows(2)
            .flat_map(|pair| {
                let (lower, upper) = (&pair[0], &pair[1]);
                lower.iter().flat_map(move |&from| upper.iter().map(move |&to| (from, to)))
            })
            .collect();
        OrdinalGraph { player, levels, edges }
    }

    pub fn ranks(&self) -> [u8; 4] {
        let mut ranks = [0u8; 4];
        for (i, level) in self.levels.iter().enumerate() {
            for c in level {
                ranks[c.index()] = i as u8 + 1;
            }
        }
        ranks
    }
}

pub fn ordinal_graph(game: &Game, player: Player) -> OrdinalGraph {
    OrdinalGraph::from_ranks(player, dense_ranks(game.payoffs(player)))
}

/// Which action a player prefers against a fixed opponent action.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Preference {
    A,
    B,
    Indifferent,
}

impl Preference {
    pub const ALL: [Preference; 3] = [Preference::A, Preference::B, Preference::Indifferent];

    pub fn from_advantage(advantage_of_a: &Rational) -> Preference {
        match advantage_of_a.sign() {
            std::cmp::Ordering::Greater => Preference::A,
            std::cmp::Ordering::Less => Preference::B,
            std::cmp::Ordering::Equal => Preference::Indifferent,
        }
    }

    pub fn reversed(self) -> Preference {
        match self {
            Preference::A => Preference::B,
            Preference::B => Preference::A,
            Preference::Indifferent => Preference::Indifferent,
        }
    }

    pub fn action(self) -> Option<Action> {
        match self {
            Preference::A => Some(Action::A),
            Preference::B => Some(Action::B),
            Preference::Indifferent => None,
        }
    }

    fn digit(self) -> u8 {
        match self {
            Preference::A => 0,
            Preference::B => 1,
            Preference::Indifferent => 2,
        }
    }

    fn symbol(self) -> char {
        match self {
            Preference::A => 'A',
            Preference::B => 'B',
            Preference::Indifferent => '-',
        }
    }
}

/// Best-response graph: each player's strict preference against each pure
/// opponent action. Indifference means the edge is absent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BrGraph {
    pub row_given_col_a: Preference,
    pub row_given_col_b: Preference,
    pub col_given_row_a: Preference,
    pub col_given_row_b: Preference,
}

impl BrGraph {
    pub fn new(fields: [Preference; 4]) -> BrGraph {
        let [row_given_col_a, row_given_col_b, col_given_row_a, col_given_row_b] = fields;
        BrGraph { row_given_col_a, row_given_col_b, col_given_row_a, col_given_row_b }
    }

    /// Fields in the fixed order used for encoding and comparison.
    pub fn fields(&self) -> [Preference; 4] {
        [self.row_given_col_a, self.row_given_col_b, self.col_given_row_a, self.col_given_row_b]
    }

    pub fn preference(&self, player: Player, opponent_action: Action) -> Preference {
        self.fields()[player.index() * 2 + opponent_action.index()]
    }

    /// Base-3 code in `0..81`; ordering codes is lexicographic on `fields()`.
    pub fn code(&self) -> u8 {
        self.fields().iter().fold(0, |acc, p| acc * 3 + p.digit())
    }

    pub fn from_code(code: u8) -> Option<BrGraph> {
        if code >= 81 {
            return None;
        }
        let mut rest = code;
        let mut fields = [Preference::A; 4];
        for slot in fields.iter_mut().rev() {
            *slot = Preference::ALL[(rest % 3) as usize];
            rest /= 3;
        }
        Some(BrGraph::new(fields))
    }

    /// All 81 graphs in code order.
    pub fn all() -> impl Iterator<Item = BrGraph> {
        (0..81).filter_map(BrGraph::from_code)
    }

    /// The graph of the permuted game, computed from this graph alone.
    pub fn permute(&self, symmetry: Symmetry) -> BrGraph {
        let mut fields = [Preference::Indifferent; 4];
        for player in Player::ALL {
            let source = if symmetry.swap_players { player.opponent() } else { player };
            let (own_flip, opponent_flip) = match source {
                Player::Row => (symmetry.swap_row_actions, symmetry.swap_col_actions),
                Player::Col => (symmetry.swap_col_actions, symmetry.swap_row_actions),
            };
            for opponent_action in Action::ALL {
                let pref = self.preference(source, opponent_action.flipped_if(opponent_flip));
                fields[player.index() * 2 + opponent_action.index()] =
                    if own_flip { pref.reversed() } else { pref };
            }
        }
        BrGraph::new(fields)
    }

    /// Cells that are pure equilibria: no player has a strict incentive to leave.
    pub fn pure_equilibria(&self) -> Vec<Cell> {
        Cell::ALL
            .into_iter()
            .filter(|cell| {
                Player::ALL.iter().all(|&p| {
                    let own = cell.action_of(p);
                    let pref = self.preference(p, cell.action_of(p.opponent()));
                    pref.action().is_none_or(|best| best == own)
                })
            })
            .collect()
    }
}

impl fmt::Display for BrGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.fields().iter().map(|p| p.symbol()).collect();
        f.write_str(&s)
    }
}

/// Strict comparison of the payoffs on each line of the payoff table.
pub fn br_graph(game: &Game) -> BrGraph {
    let mut fields = [Preference::Indifferent; 4];
    for player in Player::ALL {
        for opponent_action in Action::ALL {
            let cell_for = |own: Action| match player {
                Player::Row => Cell::new(own, opponent_action),
                Player::Col => Cell::new(opponent_action, own),
            };
            let advantage = game.payoff(player, cell_for(Action::A)) - game.payoff(player, cell_for(Action::B));
            fields[player.index() * 2 + opponent_action.index()] = Preference::from_advantage(&advantage);
        }
    }
    BrGraph::new(fields)
}
