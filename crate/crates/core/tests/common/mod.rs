#![allow(dead_code)]

use proptest::prelude::*;
use twoxtwo::distribution::{JointDistribution, MarginalPair};
use twoxtwo::game::Game;
use twoxtwo::rational::Rational;
use twoxtwo::symmetry::Symmetry;

pub fn rational() -> impl Strategy<Value = Rational> {
    prop_oneof![
        3 => (-3i64..=3).prop_map(Rational::from),
        2 => (-12i64..=12, 1i64..=5).prop_map(|(n, d)| Rational::new(n, d).unwrap()),
    ]
}

pub fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..=12, 1i64..=5).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

pub fn unit_rational() -> impl Strategy<Value = Rational> {
    (1i64..=8).prop_flat_map(|d| (0..=d, Just(d))).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

pub fn game() -> impl Strategy<Value = Game> {
    prop_oneof![
        proptest::array::uniform8(-1i64..=1).prop_map(Game::from_ints),
        proptest::array::uniform8(-4i64..=4).prop_map(Game::from_ints),
        proptest::collection::vec(rational(), 8).prop_map(|v| Game::from_flat(&v).unwrap()),
    ]
}

pub fn symmetry() -> impl Strategy<Value = Symmetry> {
    (0usize..8).prop_map(|i| Symmetry::ALL[i])
}

pub fn marginals() -> impl Strategy<Value = MarginalPair> {
    (unit_rational(), unit_rational()).prop_map(|(p, q)| MarginalPair::new(p, q).unwrap())
}

pub fn joint() -> impl Strategy<Value = JointDistribution> {
    proptest::array::uniform4(0i64..=6).prop_map(|w| {
        let total: i64 = w.iter().sum();
        if total == 0 {
            JointDistribution::uniform()
        } else {
            JointDistribution::new(w.map(|x| Rational::new(x, total).unwrap())).unwrap()
        }
    })
}
