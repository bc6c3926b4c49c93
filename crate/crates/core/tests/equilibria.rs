mod common;

use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twoxtwo::classify::BrClass;
use twoxtwo::distribution::{JointDistribution, MarginalPair};
use twoxtwo::embedding::EmbeddingPoint;
use twoxtwo::equilibria::{cce_polytope, joint_in_cce, CcePolytope};
use twoxtwo::game::{named, Game, Player};
use twoxtwo::nash::{is_nash, nash_set, NashSet, Shape};
use twoxtwo::oracle::{self, check_cce, check_embedding, check_nash, oracle_cce, oracle_nash, Library, Solver};
use twoxtwo::rational::rat;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn nash_set_is_equivariant(g in game(), s in symmetry()) {
        prop_assert_eq!(nash_set(&g.permute(s)), nash_set(&g).permute(s));
    }

    #[test]
    fn equilibria_ignore_affine_transforms(g in game(), scale in positive_rational(), a in rational(), b in rational(), i in 0usize..2) {
        let moved = g.transform_affine(Player::ALL[i], &scale, [&a, &b]).unwrap();
        prop_assert_eq!(nash_set(&moved), nash_set(&g));
        prop_assert_eq!(cce_polytope(&moved).vertices, cce_polytope(&g).vertices);
    }

    #[test]
    fn cce_polytope_is_equivariant(g in game(), s in symmetry()) {
        let mut moved: Vec<JointDistribution> = cce_polytope(&g).vertices.iter().map(|v| v.permute(s)).collect();
        moved.sort();
        let poly = cce_polytope(&g.permute(s));
        prop_assert_eq!(&poly.vertices, &moved);
        prop_assert_eq!(poly.edges.len(), cce_polytope(&g).edges.len());
        prop_assert_eq!(poly.dimension, cce_polytope(&g).dimension);
    }

    #[test]
    fn is_nash_matches_direct_deviation_sums(g in game(), m in marginals()) {
        prop_assert_eq!(is_nash(&g, &m), oracle_nash(&g, m.row_prob_a(), m.col_prob_a()));
        prop_assert_eq!(nash_set(&g).contains(&m), oracle_nash(&g, m.row_prob_a(), m.col_prob_a()));
    }

    #[test]
    fn cce_membership_matches_direct_sums(g in game(), j in joint()) {
        prop_assert_eq!(joint_in_cce(&g, &j), oracle_cce(&g, j.as_array()));
        prop_assert_eq!(cce_polytope(&g).contains(&j), oracle_cce(&g, j.as_array()));
    }

    #[test]
    fn nash_products_lie_in_the_cce_set(g in game()) {
        let poly = cce_polytope(&g);
        for c in nash_set(&g).components() {
            for m in c.corners() {
                prop_assert!(poly.contains(&JointDistribution::product(&m)));
            }
        }
    }

    #[test]
    fn polytope_structure(g in game()) {
        let poly = cce_polytope(&g);
        prop_assert!(!poly.vertices.is_empty());
        for v in 0..poly.vertices.len() {
            prop_assert!(poly.tight_rank(v) >= 3);
        }
        for &(a, b) in &poly.edges {
            let shared = (poly.tight[a] & poly.tight[b]).count_ones();
            prop_assert!(shared >= 2);
        }
        prop_assert!(poly.dimension <= 3);
    }
}

#[test]
fn exact_equilibria_of_named_games() {
    let pd = named::prisoners_dilemma();
    let set = nash_set(&pd);
    assert_eq!(set.components().len(), 1);
    assert_eq!(set.components()[0].shape(), Shape::Point);
    assert!(set.contains(&MarginalPair::new(rat(0, 1), rat(0, 1)).unwrap()));
    assert_eq!(cce_polytope(&pd).vertices, vec![JointDistribution::point_mass(twoxtwo::game::Cell::BB)]);

    let mp = cce_polytope(&named::matching_pennies());
    assert_eq!(mp.vertices, vec![JointDistribution::uniform()]);
    assert_eq!(mp.dimension, 0);

    let zero = nash_set(&Game::zero());
    assert_eq!(zero.components().len(), 1);
    assert_eq!(zero.components()[0].shape(), Shape::Box);
    assert_eq!(cce_polytope(&Game::zero()).vertices.len(), 4);
}

#[test]
fn segment_components() {
    let safety = nash_set(&Game::from_ints([1, -1, -1, 1, 1, -1, 0, 0]));
    let shapes: Vec<Shape> = safety.components().iter().map(|c| c.shape()).collect();
    assert_eq!(shapes.iter().filter(|s| **s == Shape::Point).count(), 1);
    assert_eq!(shapes.iter().filter(|s| **s == Shape::Segment).count(), 1);
    let horseplay = nash_set(&Game::from_ints([1, -1, -1, 1, 0, 0, 0, 0]));
    assert_eq!(horseplay.components().len(), 3);
    assert!(horseplay.components().iter().all(|c| c.shape() == Shape::Segment));
}

#[test]
fn oracle_suite_passes_on_seeded_games() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..25 {
        let g = oracle::random_game(&mut rng);
        oracle::check_game(&Library, &g, oracle::CheckConfig { grid: 20, combinations: 20 }, &mut rng).unwrap();
    }
}

/// Correct except that mixed equilibria are dropped from the Nash set.
struct PureOnlyNash;

/// Correct except that the column player's deviation constraints are ignored.
struct RowOnlyCce;

/// Correct except that embeddings forget the column player.
struct RowOnlyEmbedding;

macro_rules! delegate {
    ($($name:ident($($arg:ident: $ty:ty),*) -> $ret:ty;)*) => {
        $(fn $name(&self, $($arg: $ty),*) -> $ret { Library.$name($($arg),*) })*
    };
}

impl Solver for PureOnlyNash {
    fn nash_set(&self, game: &Game) -> NashSet {
        let pure = Library.nash_set(game).components().iter().filter(|c| {
            let is_pure = |x: &twoxtwo::rational::Rational| x.is_zero() || *x == rat(1, 1);
            c.shape() == Shape::Point && is_pure(&c.p.lo) && is_pure(&c.q.lo)
        }).cloned().collect();
        NashSet::from_boxes(pure)
    }
    delegate! {
        is_nash(game: &Game, m: &MarginalPair) -> bool;
        cce_polytope(game: &Game) -> CcePolytope;
        joint_in_cce(game: &Game, joint: &JointDistribution) -> bool;
        embed(game: &Game) -> EmbeddingPoint;
        class_of_embedding(point: &EmbeddingPoint) -> BrClass;
    }
}

impl Solver for RowOnlyCce {
    fn joint_in_cce(&self, game: &Game, joint: &JointDistribution) -> bool {
        let [r0, r1, ..] = twoxtwo::equilibria::cce_constraints(game);
        !r0.gain(joint).is_positive() && !r1.gain(joint).is_positive()
    }
    delegate! {
        is_nash(game: &Game, m: &MarginalPair) -> bool;
        nash_set(game: &Game) -> NashSet;
        cce_polytope(game: &Game) -> CcePolytope;
        embed(game: &Game) -> EmbeddingPoint;
        class_of_embedding(point: &EmbeddingPoint) -> BrClass;
    }
}

impl Solver for RowOnlyEmbedding {
    fn embed(&self, game: &Game) -> EmbeddingPoint {
        EmbeddingPoint { row: Library.embed(game).row, col: None }
    }
    delegate! {
        is_nash(game: &Game, m: &MarginalPair) -> bool;
        nash_set(game: &Game) -> NashSet;
        cce_polytope(game: &Game) -> CcePolytope;
        joint_in_cce(game: &Game, joint: &JointDistribution) -> bool;
        class_of_embedding(point: &EmbeddingPoint) -> BrClass;
    }
}

#[test]
fn oracle_suite_catches_broken_solvers() {
    let coordination = named::coordination();
    assert!(check_nash(&PureOnlyNash, &coordination, 30).is_err());
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut caught = false;
    for _ in 0..200 {
        let g = oracle::random_game(&mut rng);
        if check_cce(&RowOnlyCce, &g, 50, &mut rng).is_err() {
            caught = true;
            break;
        }
    }
    assert!(caught, "dropped column constraints went unnoticed");
    let err = check_embedding(&RowOnlyEmbedding, &coordination, &mut rng).unwrap_err();
    assert!(err.to_string().contains("2 0 0 1 2 0 0 1"), "{err}");
}
