//! Exact Nash equilibrium sets of 2×2 games.
//!
//! Every equilibrium is a pair `(p, q)` of probabilities of action A. The
//! row player's advantage of A over B against `q` is affine in `q`, so its
//! best-response correspondence is a union of at most three closed boxes
//! (two vertical segments joined by a horizontal one at the indifference
//! point, or the whole square when the player is indifferent everywhere).
//! The equilibrium set is the intersection of the two correspondences,
//! which is again a finite union of boxes.

use std::fmt;

use crate::distribution::MarginalPair;
use crate::game::{Action, Cell, Game, Player};
use crate::rational::Rational;
use crate::symmetry::Symmetry;

/// Closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Option<Interval> {
        (lo <= hi).then_some(Interval { lo, hi })
    }

    pub fn point(x: Rational) -> Interval {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn unit() -> Interval {
        Interval { lo: Rational::zero(), hi: Rational::one() }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        Interval::new(self.lo.clone().max(other.lo.clone()), self.hi.clone().min(other.hi.clone()))
    }

    /// Union when it is itself an interval (overlapping or touching).
    fn join(&self, other: &Interval) -> Option<Interval> {
        if self.hi < other.lo || other.hi < self.lo {
            return None;
        }
        Some(Interval { lo: self.lo.clone().min(other.lo.clone()), hi: self.hi.clone().max(other.hi.clone()) })
    }

    fn complemented(&self) -> Interval {
        Interval { lo: self.hi.complement(), hi: self.lo.complement() }
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) * Rational::new(1, 2).unwrap()
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    Point,
    Segment,
    Box,
}

/// Axis-aligned box `p × q` in marginal space.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NashBox {
    /// Row player's probability of A.
    pub p: Interval,
    /// Column player's probability of A.
    pub q: Interval,
}

impl NashBox {
    pub fn new(p: Interval, q: Interval) -> NashBox {
        NashBox { p, q }
    }

    pub fn point(p: Rational, q: Rational) -> NashBox {
        NashBox { p: Interval::point(p), q: Interval::point(q) }
    }

    pub fn shape(&self) -> Shape {
        match (self.p.is_point(), self.q.is_point()) {
            (true, true) => Shape::Point,
            (false, false) => Shape::Box,
            _ => Shape::Segment,
        }
    }

    pub fn contains(&self, m: &MarginalPair) -> bool {
        self.p.contains(m.row_prob_a()) && self.q.contains(m.col_prob_a())
    }

    fn contains_box(&self, other: &NashBox) -> bool {
        self.p.contains_interval(&other.p) && self.q.contains_interval(&other.q)
    }

    fn intersect(&self, other: &NashBox) -> Option<NashBox> {
        Some(NashBox { p: self.p.intersect(&other.p)?, q: self.q.intersect(&other.q)? })
    }

    fn join(&self, other: &NashBox) -> Option<NashBox> {
        if self.p == other.p {
            Some(NashBox { p: self.p.clone(), q: self.q.join(&other.q)? })
        } else if self.q == other.q {
            Some(NashBox { p: self.p.join(&other.p)?, q: self.q.clone() })
        } else {
            None
        }
    }

    /// The four corners (with repeats for degenerate boxes).
    pub fn corners(&self) -> [MarginalPair; 4] {
        let make = |p: &Rational, q: &Rational| MarginalPair::new(p.clone(), q.clone()).expect("box lies in the unit square");
        [
            make(&self.p.lo, &self.q.lo),
            make(&self.p.lo, &self.q.hi),
            make(&self.p.hi, &self.q.lo),
            make(&self.p.hi, &self.q.hi),
        ]
    }

    pub fn center(&self) -> MarginalPair {
        MarginalPair::new(self.p.midpoint(), self.q.midpoint()).expect("box lies in the unit square")
    }

    pub fn permute(&self, symmetry: Symmetry) -> NashBox {
        let p = if symmetry.swap_row_actions { self.p.complemented() } else { self.p.clone() };
        let q = if symmetry.swap_col_actions { self.q.complemented() } else { self.q.clone() };
        if symmetry.swap_players {
            NashBox { p: q, q: p }
        } else {
            NashBox { p, q }
        }
    }
}

impl fmt::Display for NashBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} x {}", self.p, self.q)
    }
}

/// A finite union of boxes in normal form: no box contains another, no two
/// boxes union to a box, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NashSet {
    components: Vec<NashBox>,
}

impl NashSet {
    pub fn from_boxes(boxes: Vec<NashBox>) -> NashSet {
        NashSet { components: normalize(boxes) }
    }

    pub fn components(&self) -> &[NashBox] {
        &self.components
    }

    pub fn contains(&self, m: &MarginalPair) -> bool {
        self.components.iter().any(|b| b.contains(m))
    }

    pub fn permute(&self, symmetry: Symmetry) -> NashSet {
        NashSet::from_boxes(self.components.iter().map(|b| b.permute(symmetry)).collect())
    }
}

fn normalize(mut boxes: Vec<NashBox>) -> Vec<NashBox> {
    loop {
        boxes.sort();
        boxes.dedup();
        let before = boxes.len();

        if let Some(i) = (0..boxes.len())
            .find(|&i| (0..boxes.len()).any(|j| j != i && boxes[j].contains_box(&boxes[i])))
        {
            boxes.remove(i);
            continue;
        }

        let mut merged = None;
        'outer: for i in 0..boxes.len() {
            for j in i + 1..boxes.len() {
                if let Some(joined) = boxes[i].join(&boxes[j]) {
                    merged = Some((i, j, joined));
                    break 'outer;
                }
            }
        }
        match merged {
            Some((i, j, joined)) => {
                boxes.remove(j);
                boxes[i] = joined;
            }
            None if boxes.len() == before => return boxes,
            None => {}
        }
    }
}

/// Advantage of A over B for `player` against each opponent pure action:
/// `(vs A, vs B)`.
pub(crate) fn advantages(game: &Game, player: Player) -> [Rational; 2] {
    Action::ALL.map(|opponent| {
        let cell = |own: Action| match player {
            Player::Row => Cell::new(own, opponent),
            Player::Col => Cell::new(opponent, own),
        };
        game.payoff(player, cell(Action::A)) - game.payoff(player, cell(Action::B))
    })
}

/// `x * vs_a + (1 - x) * vs_b`.
fn advantage_at(adv: &[Rational; 2], x: &Rational) -> Rational {
    x * &adv[0] + x.complement() * &adv[1]
}

/// Best-response correspondence of one player as boxes in
/// `(own probability, opponent probability)` coordinates.
fn best_response_boxes(adv: &[Rational; 2]) -> Vec<(Interval, Interval)> {
    if adv.iter().all(Rational::is_zero) {
        return vec![(Interval::unit(), Interval::unit())];
    }
    let mut breakpoints = vec![Rational::zero()];
    // Root of x * a + (1 - x) * b = 0 strictly inside (0, 1).
    let slope = &adv[0] - &adv[1];
    let root = (!slope.is_zero()).then(|| -&adv[1] / &slope);
    if let Some(r) = root.as_ref().filter(|r| r.is_positive() && *r < &Rational::one()) {
        breakpoints.push(r.clone());
    }
    breakpoints.push(Rational::one());

    let mut out = Vec::new();
    for pair in breakpoints.windows(2) {
        let piece = Interval::new(pair[0].clone(), pair[1].clone()).expect("breakpoints are sorted");
        let own = match advantage_at(adv, &piece.midpoint()).sign() {
            std::cmp::Ordering::Greater => Rational::one(),
            std::cmp::Ordering::Less => Rational::zero(),
            std::cmp::Ordering::Equal => unreachable!("advantage vanishes only at breakpoints"),
        };
        out.push((Interval::point(own), piece));
    }
    for x in &breakpoints {
        if advantage_at(adv, x).is_zero() {
            out.push((Interval::unit(), Interval::point(x.clone())));
        }
    }
    out
}

pub fn nash_set(game: &Game) -> NashSet {
    let row = best_response_boxes(&advantages(game, Player::Row));
    let col = best_response_boxes(&advantages(game, Player::Col));
    let mut boxes = Vec::new();
    for (p, q) in &row {
        let row_box = NashBox::new(p.clone(), q.clone());
        for (q_own, p_opp) in &col {
            let col_box = NashBox::new(p_opp.clone(), q_own.clone());
            if let Some(b) = row_box.intersect(&col_box) {
                boxes.push(b);
            }
        }
    }
    NashSet::from_boxes(boxes)
}

/// Whether `(p, q)` is an equilibrium: each player's mix only uses actions
/// that are best responses to the other's mix.
pub fn is_nash(game: &Game, m: &MarginalPair) -> bool {
    Player::ALL.iter().all(|&player| {
        let own = m.prob_a(player);
        let adv = advantage_at(&advantages(game, player), m.prob_a(player.opponent()));
        match adv.sign() {
            std::cmp::Ordering::Greater => *own == Rational::one(),
            std::cmp::Ordering::Less => own.is_zero(),
            std::cmp::Ordering::Equal => true,
        }
    })
}
