//! Joint, marginal and conditional distributions over the four joint actions.

use crate::error::{GameError, Result};
use crate::game::{Action, Cell, Player};
use crate::rational::Rational;
use crate::symmetry::Symmetry;

/// A probability distribution over joint actions; a point of the 3-simplex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JointDistribution {
    prob: [Rational; 4],
}

impl JointDistribution {
    /// Entries in row-major cell order `(AA, AB, BA, BB)`.
    pub fn new(prob: [Rational; 4]) -> Result<JointDistribution> {
        if let Some(bad) = prob.iter().find(|p| p.is_negative()) {
            return Err(GameError::Distribution(format!("negative probability {bad}")));
        }
        let total: Rational = prob.iter().sum();
        if total != Rational::one() {
            return Err(GameError::Distribution(format!("probabilities sum to {total}, not 1")));
        }
        Ok(JointDistribution { prob })
    }

    pub fn from_slice(values: &[Rational]) -> Result<JointDistribution> {
        let values: &[Rational; 4] =
            values.try_into().map_err(|_| GameError::Arity { expected: 4, found: values.len() })?;
        JointDistribution::new(values.clone())
    }

    pub fn parse<S: AsRef<str>>(tokens: &[S]) -> Result<JointDistribution> {
        let values = tokens
            .iter()
            .map(|t| t.as_ref().parse::<Rational>())
            .collect::<std::result::Result<Vec<_>, _>>()?;
        JointDistribution::from_slice(&values)
    }

    pub fn uniform() -> JointDistribution {
        let quarter = Rational::new(1, 4).unwrap();
        JointDistribution { prob: std::array::from_fn(|_| quarter.clone()) }
    }

    pub fn point_mass(cell: Cell) -> JointDistribution {
        JointDistribution {
            prob: std::array::from_fn(|i| if i == cell.index() { Rational::one() } else { Rational::zero() }),
        }
    }

    /// Outer product of the two marginals.
    pub fn product(marginals: &MarginalPair) -> JointDistribution {
        let p = marginals.row_prob_a();
        let q = marginals.col_prob_a();
        let row = [p.clone(), p.complement()];
        let col = [q.clone(), q.complement()];
        JointDistribution { prob: std::array::from_fn(|i| &row[i / 2] * &col[i % 2]) }
    }

    pub fn prob(&self, cell: Cell) -> &Rational {
        &self.prob[cell.index()]
    }

    pub fn as_array(&self) -> &[Rational; 4] {
        &self.prob
    }

    pub fn marginals(&self) -> MarginalPair {
        MarginalPair {
            row_prob_a: self.prob(Cell::AA) + self.prob(Cell::AB),
            col_prob_a: self.prob(Cell::AA) + self.prob(Cell::BA),
        }
    }

    /// Distribution of the other player's action given each action of
    /// `conditioning`. Null conditioning events have no row.
    pub fn conditional(&self, conditioning: Player) -> ConditionalTable {
        let rows = Action::ALL.map(|given| {
            let cells = Action::ALL.map(|other| match conditioning {
                Player::Row => Cell::new(given, other),
                Player::Col => Cell::new(other, given),
            });
            let mass: Rational = cells.iter().map(|&c| self.prob(c)).sum();
            let inverse = mass.recip()?;
            Some(cells.map(|c| self.prob(c) * &inverse))
        });
        ConditionalTable { conditioning, rows }
    }

    /// Convex combination `weight * self + (1 - weight) * other`.
    pub fn mix(&self, other: &JointDistribution, weight: &Rational) -> Result<JointDistribution> {
        if !weight.in_unit_interval() {
            return Err(GameError::Domain(format!("mixing weight {weight} is outside [0, 1]")));
        }
        let rest = weight.complement();
        Ok(JointDistribution { prob: std::array::from_fn(|i| weight * &self.prob[i] + &rest * &other.prob[i]) })
    }

    pub fn permute(&self, symmetry: Symmetry) -> JointDistribution {
        JointDistribution { prob: Cell::ALL.map(|c| self.prob(symmetry.source_cell(c)).clone()) }
    }

    pub fn is_product(&self) -> bool {
        JointDistribution::product(&self.marginals()) == *self
    }
}

/// Each player's probability of playing action A.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MarginalPair {
    row_prob_a: Rational,
    col_prob_a: Rational,
}

impl MarginalPair {
    pub fn new(row_prob_a: Rational, col_prob_a: Rational) -> Result<MarginalPair> {
        for (who, v) in [("row", &row_prob_a), ("column", &col_prob_a)] {
            if !v.in_unit_interval() {
                return Err(GameError::Distribution(format!("{who} probability {v} is outside [0, 1]")));
            }
        }
        Ok(MarginalPair { row_prob_a, col_prob_a })
    }

    pub fn row_prob_a(&self) -> &Rational {
        &self.row_prob_a
    }

    pub fn col_prob_a(&self) -> &Rational {
        &self.col_prob_a
    }

    pub fn prob_a(&self, player: Player) -> &Rational {
        match player {
            Player::Row => &self.row_prob_a,
            Player::Col => &self.col_prob_a,
        }
    }

    /// Action swaps complement the swapped player's probability; the player
    /// swap exchanges the two coordinates.
    pub fn permute(&self, symmetry: Symmetry) -> MarginalPair {
        let flip = |v: &Rational, f: bool| if f { v.complement() } else { v.clone() };
        let p = flip(&self.row_prob_a, symmetry.swap_row_actions);
        let q = flip(&self.col_prob_a, symmetry.swap_col_actions);
        if symmetry.swap_players {
            MarginalPair { row_prob_a: q, col_prob_a: p }
        } else {
            MarginalPair { row_prob_a: p, col_prob_a: q }
        }
    }
}

/// Conditional distributions of one player's action given the other's.
///
/// `rows[a]` is the distribution over the non-conditioning player's actions
/// `(A, B)` given that the conditioning player chose `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionalTable {
    pub conditioning: Player,
    pub rows: [Option<[Rational; 2]>; 2],
}

impl ConditionalTable {
    pub fn given(&self, action: Action) -> Option<&[Rational; 2]> {
        self.rows[action.index()].as_ref()
    }
}
