//! Named built-in inputs and seeded random instances.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::approx::AlgebraTag;
use crate::braid::{braiding_diagonal, braiding_from_rack, Braiding};
use crate::cocycle::{coboundary, twist_rack_cocycle, GroupCocycle, RackCocycle};
use crate::error::{Error, Result};
use crate::rack::{conjugation_rack, symmetric_group, GroupTable, Rack};
use crate::scalar::ExactScalar;

/// A built-in braided vector space.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    /// Algebra used by truncation jobs when none is given.
    pub tag: AlgebraTag,
    pub braiding: Braiding,
    /// Present for rack braidings.
    pub cocycle: Option<RackCocycle>,
}

const NAMES: [(&str, &str); 7] = [
    ("trivial-rack-dim1-minus1", "one-element rack, q = -1 (exterior algebra on one letter)"),
    ("flip-dim2", "trivial rack on two letters, q = 1 (the flip)"),
    ("diagonal-minus1-dim3", "diagonal braiding with Q = -1 on three letters"),
    ("s3-transpositions-minus1", "transpositions of S_3 as a conjugation rack, q = -1"),
    ("shuffle-flip-dim1", "the flip on one letter, shuffle algebra"),
    ("shuffle-flip-dim2", "the flip on two letters, shuffle algebra"),
    ("diagonal-zeta3-dim2", "diagonal braiding Q = [[-1, z3], [z3^2, -1]]"),
];

pub fn fixture_names() -> Vec<&'static str> {
    NAMES.iter().map(|(n, _)| *n).collect()
}

fn int(v: i64) -> ExactScalar {
    ExactScalar::from_integer(1, v)
}

/// `S_3` and its transposition rack (embedded).
pub fn s3_transposition_rack() -> (Arc<GroupTable>, Rack) {
    let g = Arc::new(symmetric_group(3).expect("S_3"));
    let t: Vec<usize> = ["(1 2)", "(1 3)", "(2 3)"].iter().map(|l| g.find_label(l).expect("transposition")).collect();
    let r = conjugation_rack(&g, &t).expect("transpositions are closed");
    (g, r)
}

fn rack_fixture(name: &'static str, description: &'static str, tag: AlgebraTag, q: RackCocycle) -> Result<Fixture> {
    Ok(Fixture { name, description, tag, braiding: braiding_from_rack(&q)?, cocycle: Some(q) })
}

pub fn fixture(name: &str) -> Result<Fixture> {
    let (name, description) = *NAMES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::Malformed(format!("unknown fixture {name:?}; known: {}", fixture_names().join(", "))))?;
    match name {
        "trivial-rack-dim1-minus1" => rack_fixture(name, description, AlgebraTag::Nichols, RackCocycle::constant(Rack::trivial(1), int(-1))?),
        "flip-dim2" => rack_fixture(name, description, AlgebraTag::Nichols, RackCocycle::constant(Rack::trivial(2), int(1))?),
        "diagonal-minus1-dim3" => Ok(Fixture {
            name,
            description,
            tag: AlgebraTag::Nichols,
            braiding: braiding_diagonal(&vec![vec![int(-1); 3]; 3])?,
            cocycle: None,
        }),
        "s3-transpositions-minus1" => {
            let (_, r) = s3_transposition_rack();
            rack_fixture(name, description, AlgebraTag::Nichols, RackCocycle::constant(r, int(-1))?)
        }
        "shuffle-flip-dim1" => rack_fixture(name, description, AlgebraTag::Shuffle, RackCocycle::constant(Rack::trivial(1), int(1))?),
        "shuffle-flip-dim2" => rack_fixture(name, description, AlgebraTag::Shuffle, RackCocycle::constant(Rack::trivial(2), int(1))?),
        "diagonal-zeta3-dim2" => {
            let z = ExactScalar::zeta(3);
            Ok(Fixture {
                name,
                description,
                tag: AlgebraTag::Nichols,
                braiding: braiding_diagonal(&[vec![int(-1), z.clone()], vec![&z * &z, int(-1)]])?,
                cocycle: None,
            })
        }
        _ => unreachable!("listed fixture"),
    }
}

pub fn all_fixtures() -> Vec<Fixture> {
    fixture_names().into_iter().map(|n| fixture(n).expect("built-in fixture")).collect()
}

/// Root-of-unity orders used for random values.
const ORDERS: [u32; 8] = [2, 3, 4, 5, 6, 8, 10, 12];

fn random_root(rng: &mut ChaCha8Rng, m: u32) -> ExactScalar {
    ExactScalar::zeta_pow(m, rng.gen_range(0..m as i64))
}

/// `μ : G → μ_m` with `μ(e) = 1`.
pub fn random_mu(rng: &mut ChaCha8Rng, g: &GroupTable, m: u32) -> Vec<ExactScalar> {
    (0..g.order()).map(|i| if i == g.identity() { ExactScalar::one(m) } else { random_root(rng, m) }).collect()
}

/// A seeded coboundary on `g` with values of order dividing 12.
pub fn random_coboundary(seed: u64, g: &Arc<GroupTable>) -> GroupCocycle {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mu = random_mu(&mut rng, g, 12);
    coboundary(g, &mu).expect("μ(e) = 1")
}

fn tetrahedral_rack() -> Rack {
    let g = Arc::new(symmetric_group(4).expect("S_4"));
    let class: Vec<usize> = ["(1 2 3)", "(1 4 2)", "(1 3 4)", "(2 4 3)"].iter().map(|l| g.find_label(l).expect("3-cycle")).collect();
    conjugation_rack(&g, &class).expect("an A_4 class is closed")
}

/// A random rack with at most four elements from a small catalogue:
/// trivial racks, permutation racks, dihedral racks, and the conjugation
/// racks of the transpositions of `S_3` and of a 3-cycle class of `A_4`.
pub fn random_rack(rng: &mut ChaCha8Rng) -> Rack {
    match rng.gen_range(0..5) {
        0 => Rack::trivial(rng.gen_range(1..=4)),
        1 => {
            let n = rng.gen_range(2..=4);
            let mut phi: Vec<usize> = (0..n).collect();
            phi.shuffle(rng);
            Rack::new((0..n).map(|_| phi.clone()).collect(), None).expect("permutation rack")
        }
        2 => {
            let n = rng.gen_range(3..=4);
            Rack::new((0..n).map(|x| (0..n).map(|y| (2 * x + 2 * n - y) % n).collect()).collect(), None).expect("dihedral rack")
        }
        3 => s3_transposition_rack().1,
        _ => tetrahedral_rack(),
    }
}

/// A seeded rack cocycle on a random rack with `|X| ≤ 4` and values in
/// `μ_m` for an order `m ≤ 12`: a constant times the rack coboundary
/// `f(x ▷ y) / f(y)`, further twisted by a group coboundary when the rack
/// comes with a group.
pub fn random_rack_cocycle(seed: u64) -> RackCocycle {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rack = random_rack(&mut rng);
    let m = *ORDERS.choose(&mut rng).expect("nonempty");
    let n = rack.size();
    let c = random_root(&mut rng, m);
    let f: Vec<ExactScalar> = (0..n).map(|_| random_root(&mut rng, m)).collect();
    let table: Vec<Vec<ExactScalar>> = (0..n)
        .map(|x| (0..n).map(|y| &(&c * &f[rack.act(x, y)]) * &f[y].inverse().expect("root of unity")).collect())
        .collect();
    let q = RackCocycle::new(rack.clone(), table).expect("coboundary-type rack cocycle");
    match rack.embedding() {
        Some(emb) => {
            let mu = random_mu(&mut rng, &emb.group, m);
            let sigma = coboundary(&emb.group, &mu).expect("μ(e) = 1");
            let t = twist_rack_cocycle(&q, &sigma).expect("embedded rack");
            RackCocycle::new(rack, t.cocycle.table().to_vec()).expect("twist of a cocycle is a cocycle")
        }
        None => q,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::check_yang_baxter;

    #[test]
    fn fixtures_build() {
        let all = all_fixtures();
        assert!(all.len() >= 6);
        assert!(fixture_names().contains(&"s3-transpositions-minus1"));
        for f in &all {
            assert!(check_yang_baxter(f.braiding.matrix()).unwrap().is_ok(), "{}", f.name);
        }
        assert!(fixture("nope").is_err());
    }

    #[test]
    fn random_cocycles_are_reproducible() {
        for seed in 0..20 {
            let a = random_rack_cocycle(seed);
            assert_eq!(a, random_rack_cocycle(seed));
            assert!(a.rack().size() <= 4);
            assert!(a.validate().is_ok());
        }
    }
}
