//! The order-8 symmetry group of 2×2 games.
//!
//! An element swaps the row player's actions, the column player's actions,
//! and/or the players themselves. Action swaps are applied first, then the
//! player swap, so `Symmetry { x, y, t }` maps a game `G` to
//!
//! ```text
//! F(p, r, c)  = G(p, r ^ x, c ^ y)
//! G'(p, r, c) = F(p, r, c)            if !t
//!             = F(other(p), c, r)     if t
//! ```
//!
//! The group is dihedral of order 8: pure swaps have order 2, and the two
//! elements combining a single action swap with a player swap have order 4.

use crate::game::{Cell, Player};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Symmetry {
    pub swap_row_actions: bool,
    pub swap_col_actions: bool,
    pub swap_players: bool,
}

impl Symmetry {
    pub const IDENTITY: Symmetry = Symmetry::new(false, false, false);

    pub const ALL: [Symmetry; 8] = [
        Symmetry::new(false, false, false),
        Symmetry::new(false, false, true),
        Symmetry::new(false, true, false),
        Symmetry::new(false, true, true),
        Symmetry::new(true, false, false),
        Symmetry::new(true, false, true),
        Symmetry::new(true, true, false),
        Symmetry::new(true, true, true),
    ];

    /// The strategy-relabelling subgroup (no player swap).
    pub const STRATEGY_SWAPS: [Symmetry; 4] = [
        Symmetry::new(false, false, false),
        Symmetry::new(false, true, false),
        Symmetry::new(true, false, false),
        Symmetry::new(true, true, false),
    ];

    pub const fn new(swap_row_actions: bool, swap_col_actions: bool, swap_players: bool) -> Symmetry {
        Symmetry { swap_row_actions, swap_col_actions, swap_players }
    }

    /// The element equal to applying `self` first and `then` second.
    pub fn then(self, then: Symmetry) -> Symmetry {
        // Flipping actions of an already transposed game is the same as
        // flipping the opposite player's actions before transposing.
        let (x2, y2) = if self.swap_players {
            (then.swap_col_actions, then.swap_row_actions)
        } else {
            (then.swap_row_actions, then.swap_col_actions)
        };
        Symmetry {
            swap_row_actions: self.swap_row_actions ^ x2,
            swap_col_actions: self.swap_col_actions ^ y2,
            swap_players: self.swap_players ^ then.swap_players,
        }
    }

    pub fn inverse(self) -> Symmetry {
        Symmetry::ALL
            .into_iter()
            .find(|&s| self.then(s) == Symmetry::IDENTITY)
            .expect("group elements are invertible")
    }

    /// Where the value at `(player, cell)` of the transformed object comes from
    /// in the original.
    pub fn source_of(self, player: Player, cell: Cell) -> (Player, Cell) {
        let (player, cell) = if self.swap_players {
            (player.opponent(), cell.transposed())
        } else {
            (player, cell)
        };
        (player, self.flip_cell(cell))
    }

    /// Source cell of a joint distribution entry (players carry no data there).
    pub fn source_cell(self, cell: Cell) -> Cell {
        let cell = if self.swap_players { cell.transposed() } else { cell };
        self.flip_cell(cell)
    }

    fn flip_cell(self, cell: Cell) -> Cell {
        Cell {
            row: cell.row.flipped_if(self.swap_row_actions),
            col: cell.col.flipped_if(self.swap_col_actions),
        }
    }

    pub fn order(self) -> usize {
        let mut acc = self;
        let mut n = 1;
        while acc != Symmetry::IDENTITY {
            acc = acc.then(self);
            n += 1;
        }
        n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_and_inverses() {
        for a in Symmetry::ALL {
            assert_eq!(a.then(a.inverse()), Symmetry::IDENTITY);
            assert_eq!(a.inverse().then(a), Symmetry::IDENTITY);
            for b in Symmetry::ALL {
                assert!(Symmetry::ALL.contains(&a.then(b)));
                for c in Symmetry::ALL {
                    assert_eq!(a.then(b).then(c), a.then(b.then(c)));
                }
            }
        }
    }

    #[test]
    fn element_orders() {
        let mut orders: Vec<usize> = Symmetry::ALL.iter().map(|s| s.order()).collect();
        orders.sort();
        assert_eq!(orders, vec![1, 2, 2, 2, 2, 2, 4, 4]);
        assert_eq!(Symmetry::new(true, false, true).order(), 4);
        assert_eq!(Symmetry::new(true, true, true).order(), 2);
    }

    #[test]
    fn group_is_not_abelian() {
        let row = Symmetry::new(true, false, false);
        let players = Symmetry::new(false, false, true);
        assert_ne!(row.then(players), players.then(row));
    }
}
