//! Seeded instance generators for sweeps.
//!
//! Every generator draws from `ChaCha8Rng::seed_from_u64(seed)`
//! (`rand_chacha`), so a seed fixes the generated instances.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::deltacycles::Eta;
use crate::hypergraph::{Hypergraph, VertexMask};
use crate::listcolor::Assignment;

pub type SweepRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SweepRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_edge<R: Rng>(rng: &mut R, n: usize, size: usize) -> Vec<usize> {
    let mut e = sample(rng, n, size).into_vec();
    e.sort_unstable();
    e
}

fn mask(e: &[usize]) -> VertexMask {
    e.iter().fold(0, |acc, &v| acc | (1 as VertexMask) << v)
}

/// Adds random edges with sizes drawn from `sizes` until `m` edges exist or
/// `attempts` candidates have been rejected. Candidates that would break the
/// antichain condition are skipped, so fewer than `m` edges may result.
pub fn random_hypergraph<R: Rng>(
    rng: &mut R,
    n: usize,
    m: usize,
    sizes: &[usize],
    attempts: usize,
) -> Hypergraph {
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut masks: Vec<VertexMask> = Vec::new();
    let mut rejected = 0;
    while edges.len() < m && rejected < attempts {
        let size = sizes[rng.random_range(0..sizes.len())].min(n);
        let e = random_edge(rng, n, size);
        let em = mask(&e);
        if masks.iter().any(|&f| em & !f == 0 || f & !em == 0) {
            rejected += 1;
            continue;
        }
        masks.push(em);
        edges.push(e);
    }
    Hypergraph::new(n, edges).expect("generator keeps the antichain condition")
}

/// An `r`-uniform hypergraph with exactly `m` edges, or `None` if `n`
/// choose `r` is too small or the attempts run out.
pub fn random_uniform<R: Rng>(rng: &mut R, n: usize, r: usize, m: usize) -> Option<Hypergraph> {
    let h = random_hypergraph(rng, n, m, &[r], 50 * (m + 1));
    (h.m() == m).then_some(h)
}

/// Uniformly random ordering of `m` edges.
pub fn random_eta<R: Rng>(rng: &mut R, m: usize) -> Eta {
    Eta::from_ranks(sample(rng, m, m).into_vec()).expect("a sample of all indices is a permutation")
}

/// Each vertex gets a uniformly random `k`-subset of `{1, ..., palette}`.
pub fn random_assignment<R: Rng>(rng: &mut R, n: usize, k: usize, palette: usize) -> Assignment {
    let lists = (0..n)
        .map(|_| {
            sample(rng, palette, k)
                .into_iter()
                .map(|c| c as u32 + 1)
                .collect()
        })
        .collect();
    Assignment::new(k, lists).expect("samples are distinct")
}

/// The constant assignment `{1..k}` with one to two vertices each trading
/// one colour for a colour from `{k+1, ..., 2k}`.
pub fn near_constant_assignment<R: Rng>(rng: &mut R, n: usize, k: usize) -> Assignment {
    let mut lists: Vec<Vec<u32>> = vec![(1..=k as u32).collect(); n];
    if n > 0 {
        let changes = rng.random_range(1..=2.min(n));
        for v in sample(rng, n, changes) {
            let slot = rng.random_range(0..k);
            lists[v][slot] = rng.random_range(k as u32 + 1..=2 * k as u32);
        }
    }
    Assignment::new(k, lists).expect("replacement colours are outside 1..=k")
}

/// `count` assignments: the constant one first, then alternating
/// near-constant perturbations and random draws from a palette of `2k`.
pub fn sample_assignments<R: Rng>(rng: &mut R, n: usize, k: usize, count: usize) -> Vec<Assignment> {
    (0..count)
        .map(|i| match i {
            0 => Assignment::constant(n, k),
            i if i % 2 == 1 => near_constant_assignment(rng, n, k),
            _ => random_assignment(rng, n, k, 2 * k),
        })
        .collect()
}
