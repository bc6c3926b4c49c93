//! Symmetry classes of best-response graphs and the exhaustive game censuses.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{GameError, Result};
use crate::game::{Cell, Game, Player};
use crate::graphs::{br_graph, dense_ranks, BrGraph};
use crate::symmetry::Symmetry;

/// Number of best-response classes up to symmetry.
pub const BR_CLASS_COUNT: usize = 15;

const BUNDLED_NAMES: &str = include_str!("../data/br_class_names.tsv");

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BrClass {
    pub canonical: BrGraph,
    /// 1-based index in `1..=15`, ordered by the canonical graph's code.
    pub index: usize,
    pub name: String,
}

impl fmt::Display for BrClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.index, self.name)
    }
}

/// The orbit representative with the smallest code.
pub fn canonical_br_graph(graph: &BrGraph) -> BrGraph {
    Symmetry::ALL
        .iter()
        .map(|&s| graph.permute(s))
        .min_by_key(BrGraph::code)
        .expect("group is nonempty")
}

fn canonical_codes() -> &'static [u8] {
    static CODES: OnceLock<Vec<u8>> = OnceLock::new();
    CODES.get_or_init(|| {
        let reps: BTreeSet<u8> = BrGraph::all().map(|g| canonical_br_graph(&g).code()).collect();
        reps.into_iter().collect()
    })
}

fn bundled_names() -> &'static BTreeMap<usize, String> {
    static NAMES: OnceLock<BTreeMap<usize, String>> = OnceLock::new();
    NAMES.get_or_init(|| parse_name_table(BUNDLED_NAMES).expect("bundled name table is valid"))
}

/// Parses `index<TAB>name` lines. Blank lines and `#` comments are skipped.
/// Every index in `1..=15` must appear exactly once.
pub fn parse_name_table(text: &str) -> Result<BTreeMap<usize, String>> {
    let mut names = BTreeMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |what: &str| GameError::Domain(format!("name table line {}: {what}", lineno + 1));
        let (index, name) = line.split_once('\t').ok_or_else(|| bad("expected index<TAB>name"))?;
        let index: usize = index.trim().parse().map_err(|_| bad("index is not an integer"))?;
        if !(1..=BR_CLASS_COUNT).contains(&index) {
            return Err(bad("index out of range 1..15"));
        }
        let name = name.trim();
        if name.is_empty() {
            return Err(bad("empty name"));
        }
        if names.insert(index, name.to_owned()).is_some() {
            return Err(bad("duplicate index"));
        }
    }
    if names.len() != BR_CLASS_COUNT {
        return Err(GameError::Domain(format!("name table has {} entries, expected 15", names.len())));
    }
    Ok(names)
}

pub fn class_of_br_graph(graph: &BrGraph) -> BrClass {
    let canonical = canonical_br_graph(graph);
    let position = canonical_codes()
        .binary_search(&canonical.code())
        .expect("every canonical code is tabulated");
    let index = position + 1;
    BrClass { canonical, index, name: bundled_names()[&index].clone() }
}

pub fn br_class(game: &Game) -> BrClass {
    class_of_br_graph(&br_graph(game))
}

/// All 15 classes in index order.
pub fn all_br_classes() -> Vec<BrClass> {
    canonical_codes()
        .iter()
        .map(|&c| class_of_br_graph(&BrGraph::from_code(c).expect("valid code")))
        .collect()
}

/// Per-player payoff ranks `[row ranks, column ranks]`, the payload of an
/// ordinal or partial-ordinal game.
pub type RankPair = [[u8; 4]; 2];

pub fn rank_pair(game: &Game) -> RankPair {
    [dense_ranks(game.payoffs(Player::Row)), dense_ranks(game.payoffs(Player::Col))]
}

fn permute_ranks(ranks: &RankPair, symmetry: Symmetry) -> RankPair {
    std::array::from_fn(|p| {
        std::array::from_fn(|c| {
            let (player, cell) = symmetry.source_of(Player::ALL[p], Cell::ALL[c]);
            ranks[player.index()][cell.index()]
        })
    })
}

/// Number of orbits of `items` under `group`, by canonical-representative
/// enumeration.
pub fn count_orbits(items: &[RankPair], group: &[Symmetry]) -> usize {
    items
        .iter()
        .map(|r| group.iter().map(|&s| permute_ranks(r, s)).min().expect("group is nonempty"))
        .collect::<BTreeSet<_>>()
        .len()
}

/// Orbit count by Burnside's lemma: the mean number of fixed points.
pub fn count_orbits_burnside(items: &[RankPair], group: &[Symmetry]) -> usize {
    let fixed: usize = group
        .iter()
        .map(|&s| items.iter().filter(|r| permute_ranks(r, s) == **r).count())
        .sum();
    assert_eq!(fixed % group.len(), 0, "Burnside average must be integral");
    fixed / group.len()
}

fn permutations_of_four() -> Vec<[u8; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 1..=4u8 {
        for b in 1..=4u8 {
            for c in 1..=4u8 {
                for d in 1..=4u8 {
                    let t = [a, b, c, d];
                    if BTreeSet::from(t).len() == 4 {
                        out.push(t);
                    }
                }
            }
        }
    }
    out
}

/// Dense rank tuples: ordered set partitions (weak orders) of the four cells.
pub fn weak_orders_of_four() -> Vec<[u8; 4]> {
    let mut out = BTreeSet::new();
    for code in 0..256u32 {
        let t: [u8; 4] = std::array::from_fn(|i| ((code >> (2 * i)) & 3) as u8 + 1);
        let as_rationals = t.map(|v| crate::rational::Rational::from_integer(v as i64));
        out.insert(dense_ranks(&as_rationals));
    }
    out.into_iter().collect()
}

fn pairs(tuples: &[[u8; 4]]) -> Vec<RankPair> {
    tuples.iter().flat_map(|&a| tuples.iter().map(move |&b| [a, b])).collect()
}

pub fn strict_ordinal_games() -> Vec<RankPair> {
    pairs(&permutations_of_four())
}

pub fn partial_ordinal_games() -> Vec<RankPair> {
    pairs(&weak_orders_of_four())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusReport {
    pub strict_ordinal_total: usize,
    pub strict_ordinal_up_to_strategy: usize,
    pub strict_ordinal_up_to_strategy_and_player: usize,
    pub partial_ordinal_classes: usize,
    pub br_graph_total: usize,
    pub br_class_total: usize,
}

impl CensusReport {
    /// `(label, count)` rows in a fixed order.
    pub fn rows(&self) -> [(&'static str, usize); 6] {
        [
            ("strict_ordinal_total", self.strict_ordinal_total),
            ("strict_ordinal_up_to_strategy", self.strict_ordinal_up_to_strategy),
            ("strict_ordinal_up_to_strategy_and_player", self.strict_ordinal_up_to_strategy_and_player),
            ("partial_ordinal_classes", self.partial_ordinal_classes),
            ("br_graphs", self.br_graph_total),
            ("br_classes", self.br_class_total),
        ]
    }
}

pub fn census() -> CensusReport {
    let strict = strict_ordinal_games();
    let partial = partial_ordinal_games();
    let graphs: Vec<BrGraph> = BrGraph::all().collect();
    let classes: BTreeSet<u8> = graphs.iter().map(|g| canonical_br_graph(g).code()).collect();
    CensusReport {
        strict_ordinal_total: strict.len(),
        strict_ordinal_up_to_strategy: count_orbits(&strict, &Symmetry::STRATEGY_SWAPS),
        strict_ordinal_up_to_strategy_and_player: count_orbits(&strict, &Symmetry::ALL),
        partial_ordinal_classes: count_orbits(&partial, &Symmetry::ALL),
        br_graph_total: graphs.len(),
        br_class_total: classes.len(),
    }
}
