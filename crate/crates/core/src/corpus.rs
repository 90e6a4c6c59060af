//! A reproducible corpus of test lattices: stock shapes, constructed
//! examples, and seeded random lattices for property checks.

use crate::autgroup::{bits, lattice_from_masks, try_extend};
use crate::construct::{glued_sum, tower, w_gadget};
use crate::gf::sub_lattice;
use crate::lattice::{boolean, chain, hexagon, m3, n5, FiniteLattice, DEFAULT_MAX_ELEMENTS};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seed used by the verification suite unless overridden.
pub const DEFAULT_SEED: u64 = 0x1A77_1CE5;

/// How many random lattices the standard corpus carries.
pub const RANDOM_CORPUS_SIZE: usize = 50;

/// Three atoms, two of which carry an extra element below the top; the
/// doubled arms stop any congruence from collapsing an atom without
/// collapsing everything, so only the arm-top pairs generate proper
/// congruences and the bottom always stays separated.
pub fn doubled_m3() -> FiniteLattice {
    FiniteLattice::build_from_covers(
        &["0", "a", "b", "c", "b'", "c'", "1"],
        &[
            ("0", "a"),
            ("0", "b"),
            ("0", "c"),
            ("a", "1"),
            ("b", "b'"),
            ("b'", "1"),
            ("c", "c'"),
            ("c'", "1"),
        ],
    )
    .expect("fixed covers form a lattice")
}

/// A uniform-ish random lattice with exactly `size` elements, grown bottom
/// up: every new element takes a random admissible antichain of lower
/// covers (single lower covers are always admissible), and a final top
/// closes the order.
pub fn random_lattice(rng: &mut ChaCha8Rng, size: usize) -> FiniteLattice {
    assert!((2..=16).contains(&size), "mask-based generation supports 2..=16");
    let mut downs: Vec<u64> = vec![1];
    let mut covers: Vec<(usize, usize)> = Vec::new();
    let mut covered: u64 = 0;
    while downs.len() < size - 1 {
        let k = downs.len();
        let all = (1u64 << k) - 1;
        let mut chosen: Option<u64> = None;
        for _ in 0..30 {
            let s = rng.gen_range(1..=all);
            if try_extend(&downs, s).is_some() {
                chosen = Some(s);
                break;
            }
        }
        let s = chosen.unwrap_or_else(|| 1u64 << rng.gen_range(0..k));
        let d = try_extend(&downs, s).expect("singleton fallback is always admissible");
        covers.extend(bits(s).map(|a| (a, k)));
        covered |= s;
        downs.push(d);
    }
    let k = downs.len();
    let maximals = ((1u64 << k) - 1) & !covered;
    covers.extend(bits(maximals).map(|m| (m, k)));
    downs.push((1u64 << (k + 1)) - 1);
    lattice_from_masks(&downs, &covers)
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub lattice: FiniteLattice,
}

fn entry(name: &str, lattice: FiniteLattice) -> CorpusEntry {
    CorpusEntry { name: name.to_string(), lattice }
}

/// The fixed members of the corpus, before the seeded random tail.
pub fn named_corpus() -> Vec<CorpusEntry> {
    let mut out = vec![
        entry("chain(1)", chain(1)),
        entry("chain(2)", chain(2)),
        entry("chain(3)", chain(3)),
        entry("chain(4)", chain(4)),
        entry("chain(5)", chain(5)),
        entry("boolean(1)", boolean(1)),
        entry("boolean(2)", boolean(2)),
        entry("boolean(3)", boolean(3)),
        entry("m3", m3()),
        entry("n5", n5()),
        entry("hexagon", hexagon()),
        entry("doubled_m3", doubled_m3()),
        entry("w_gadget(m3)", w_gadget(&m3())),
        entry("glued(m3,m3)", glued_sum(&m3(), &m3())),
        entry("glued(n5,chain(3))", glued_sum(&n5(), &chain(3))),
    ];
    for (p, n) in [(2u64, 2usize), (2, 3), (2, 4), (3, 2)] {
        out.push(entry(
            &format!("sub({p},{n})"),
            sub_lattice(p, n).expect("small subspace lattices fit the limit"),
        ));
    }
    out.push(entry(
        "tower(m3,2)",
        tower(&m3(), 2, DEFAULT_MAX_ELEMENTS).expect("small tower").lattice,
    ));
    out
}

/// Seeded random members: sizes cycle over 5..=10.
pub fn random_corpus(seed: u64, count: usize) -> Vec<CorpusEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sizes: Vec<usize> = (0..count).map(|i| 5 + i % 6).collect();
    sizes
        .iter()
        .enumerate()
        .map(|(i, &size)| CorpusEntry {
            name: format!("random#{i:02}(n={size})"),
            lattice: random_lattice(&mut rng, size),
        })
        .collect()
}

/// Named fixtures plus the seeded random tail.
pub fn standard_corpus(seed: u64) -> Vec<CorpusEntry> {
    let mut out = named_corpus();
    out.extend(random_corpus(seed, RANDOM_CORPUS_SIZE));
    out
}

/// Deterministically samples `count` ordered pairs of indices below `n`.
pub fn sample_pairs(seed: u64, n: usize, count: usize) -> Vec<(usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9E37_79B9_7F4A_7C15);
    let indices: Vec<usize> = (0..n).collect();
    (0..count)
        .map(|_| {
            let a = *indices.choose(&mut rng).expect("nonempty corpus");
            let b = *indices.choose(&mut rng).expect("nonempty corpus");
            (a, b)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_deterministic_per_seed() {
        let a = standard_corpus(7);
        let b = standard_corpus(7);
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.name, y.name);
            assert!(x.lattice.same_labeled(&y.lattice));
        }
        let c = standard_corpus(8);
        let differs = a
            .iter()
            .zip(&c)
            .any(|(x, y)| !x.lattice.same_labeled(&y.lattice));
        assert!(differs);
    }

    #[test]
    fn random_lattices_have_requested_sizes_and_pass_validation() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for size in 2..=12 {
            let l = random_lattice(&mut rng, size);
            assert_eq!(l.size(), size);
            assert!(l.verify_axioms());
        }
    }

    #[test]
    fn doubled_arms_keep_the_bottom_separated() {
        let l = doubled_m3();
        assert_eq!(l.size(), 7);
        assert_eq!(crate::congruence::congruence_count(&l), 5);
        assert!(crate::construct::zero_separated(&l).unwrap());
    }

    #[test]
    fn pair_sampling_is_deterministic() {
        assert_eq!(sample_pairs(1, 50, 10), sample_pairs(1, 50, 10));
        assert_eq!(sample_pairs(1, 50, 200).len(), 200);
    }
}
