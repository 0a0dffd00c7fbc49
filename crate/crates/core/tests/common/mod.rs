//! Brute-force oracles shared by the integration suites. None of them calls
//! into the counting, component or family code of the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

use hyperchrom::random::{random_hypergraph, rng};
use hyperchrom::{Eta, Hypergraph};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

/// Colour maps from the lists with every edge seeing two colours, by an
/// odometer over the full product.
pub fn naive_list_count(h: &Hypergraph, lists: &[Vec<u32>]) -> u64 {
    let n = h.n();
    if lists.iter().any(|l| l.is_empty()) {
        return 0;
    }
    let mut idx = vec![0usize; n];
    let mut count = 0;
    loop {
        let proper = h.edges().iter().all(|e| {
            let first = lists[e[0]][idx[e[0]]];
            e.iter().any(|&v| lists[v][idx[v]] != first)
        });
        if proper {
            count += 1;
        }
        let mut v = 0;
        loop {
            if v == n {
                return count;
            }
            idx[v] += 1;
            if idx[v] < lists[v].len() {
                break;
            }
            idx[v] = 0;
            v += 1;
        }
    }
}

pub fn naive_count(h: &Hypergraph, k: u32) -> u64 {
    let lists: Vec<Vec<u32>> = vec![(1..=k).collect(); h.n()];
    naive_list_count(h, &lists)
}

pub fn subsets(m: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << m).map(move |bits| (0..m).filter(|i| bits >> i & 1 == 1).collect())
}

fn find(parent: &mut [usize], v: usize) -> usize {
    let mut r = v;
    while parent[r] != r {
        r = parent[r];
    }
    r
}

/// Components of the spanning subhypergraph on the edges `a`, by union-find.
pub fn naive_components(h: &Hypergraph, a: &[usize]) -> Vec<BTreeSet<usize>> {
    let n = h.n();
    let mut parent: Vec<usize> = (0..n).collect();
    for &e in a {
        let edge = h.edge(e);
        for w in edge.windows(2) {
            let (x, y) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            parent[x] = y;
        }
    }
    let mut groups: Vec<BTreeSet<usize>> = Vec::new();
    let mut root_of = vec![usize::MAX; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        if root_of[r] == usize::MAX {
            root_of[r] = groups.len();
            groups.push(BTreeSet::new());
        }
        groups[root_of[r]].insert(v);
    }
    groups
}

pub fn naive_c(h: &Hypergraph, a: &[usize]) -> usize {
    naive_components(h, a).len()
}

fn covers(h: &Hypergraph, a: &[usize]) -> bool {
    !a.is_empty()
        && a.iter().all(|&e| {
            let others: BTreeSet<usize> = a
                .iter()
                .filter(|&&f| f != e)
                .flat_map(|&f| h.edge(f).iter().copied())
                .collect();
            h.edge(e).iter().all(|v| others.contains(v))
        })
}

fn is_sub(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

/// Minimal edge sets in which each edge lies inside the union of the others.
pub fn naive_delta_cycles(h: &Hypergraph) -> Vec<Vec<usize>> {
    let covering: Vec<Vec<usize>> = subsets(h.m()).filter(|a| covers(h, a)).collect();
    covering
        .iter()
        .filter(|a| !covering.iter().any(|b| b.len() < a.len() && is_sub(b, a)))
        .cloned()
        .collect()
}

/// Edge sets containing no delta-cycle minus its first edge under `eta`.
pub fn naive_nb(h: &Hypergraph, eta: &Eta) -> Vec<Vec<usize>> {
    let broken: Vec<Vec<usize>> = naive_delta_cycles(h)
        .into_iter()
        .map(|c| {
            let first = *c.iter().min_by_key(|&&e| eta.rank(e)).unwrap();
            c.into_iter().filter(|&e| e != first).collect()
        })
        .collect();
    subsets(h.m())
        .filter(|a| !broken.iter().any(|b| is_sub(b, a)))
        .collect()
}

pub fn common(lists: &[Vec<u32>], group: &BTreeSet<usize>) -> usize {
    let mut it = group.iter();
    let first: BTreeSet<u32> = lists[*it.next().unwrap()].iter().copied().collect();
    it.fold(first, |acc, &v| {
        let l: BTreeSet<u32> = lists[v].iter().copied().collect();
        acc.intersection(&l).copied().collect()
    })
    .len()
}

pub fn naive_beta(h: &Hypergraph, lists: &[Vec<u32>], a: &[usize]) -> BigInt {
    naive_components(h, a)
        .iter()
        .fold(BigInt::one(), |acc, g| acc * BigInt::from(common(lists, g)))
}

/// `F(H,e,k)` summed term by term from the naive family.
pub fn naive_factor(h: &Hypergraph, eta: &Eta, e: usize, k: u64) -> BigRational {
    let r = h.edge(0).len() as i64;
    let n = h.n() as i64;
    let kq = BigRational::from_integer(BigInt::from(k));
    let pow = |x: i64| {
        if x >= 0 {
            num_traits::pow(kq.clone(), x as usize)
        } else {
            num_traits::pow(kq.clone(), (-x) as usize).recip()
        }
    };
    let mut f = BigRational::one();
    for a in naive_nb(h, eta).into_iter().filter(|a| a.contains(&e)) {
        let other = a.iter().copied().find(|&x| x != e);
        match a.len() {
            1 => {}
            2 => {
                let shared = h
                    .edge(e)
                    .iter()
                    .filter(|v| h.edge(other.unwrap()).contains(v))
                    .count() as i64;
                f -= if shared == r - 1 { pow(-1) } else { pow(-2) };
            }
            j => {
                let term = pow(naive_c(h, &a) as i64 - 1 - (n - r));
                if j % 2 == 1 {
                    f += term / BigRational::from_integer(BigInt::from(j));
                } else {
                    f -= term;
                }
            }
        }
    }
    f
}

/// `|E_{r-1}(e)|` from vertex intersections.
pub fn naive_ew(h: &Hypergraph, e: usize) -> usize {
    let r = h.edge(e).len();
    (0..h.m())
        .filter(|&f| f != e)
        .filter(|&f| h.edge(e).iter().filter(|v| h.edge(f).contains(v)).count() + 1 == r)
        .count()
}

pub fn sum(values: impl Iterator<Item = BigRational>) -> BigRational {
    values.fold(BigRational::zero(), |a, b| a + b)
}

/// Seeded mixed-size hypergraphs: `3 <= n <= 8`, `1 <= m <= 6`, edge sizes
/// drawn from `{2, 3, 4}`.
pub fn mixed_suite(seed: u64, count: usize) -> Vec<Hypergraph> {
    let mut g = rng(seed);
    (0..count)
        .map(|_| {
            let n = g.random_range(3..=8);
            let m = g.random_range(1..=6);
            random_hypergraph(&mut g, n, m, &[2, 3, 4], 200)
        })
        .collect()
}

fn k_subsets(pool: &[u32], k: usize) -> Vec<Vec<u32>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if pool.len() < k {
        return Vec::new();
    }
    let mut with: Vec<Vec<u32>> = k_subsets(&pool[1..], k - 1)
        .into_iter()
        .map(|mut s| {
            s.insert(0, pool[0]);
            s
        })
        .collect();
    with.extend(k_subsets(&pool[1..], k));
    with
}

/// Minimum list count over canonical assignments: vertex 0 gets `1..=k`,
/// each later vertex a `k`-subset of the colours used so far plus `k` fresh
/// ones.
pub fn naive_plmin(h: &Hypergraph, k: usize) -> u64 {
    fn go(h: &Hypergraph, k: usize, lists: &mut Vec<Vec<u32>>, used: u32, best: &mut u64) {
        if lists.len() == h.n() {
            *best = (*best).min(naive_list_count(h, lists));
            return;
        }
        let pool: Vec<u32> = (1..=used + k as u32).collect();
        for s in k_subsets(&pool, k) {
            let top = used.max(*s.last().unwrap());
            lists.push(s);
            go(h, k, lists, top, best);
            lists.pop();
        }
    }
    let mut lists = vec![(1..=k as u32).collect::<Vec<_>>()];
    let mut best = u64::MAX;
    go(h, k, &mut lists, k as u32, &mut best);
    best
}
