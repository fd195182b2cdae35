//! Deliberately naive reference implementations, independent of the
//! library's search, isomorphism and census code.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

pub type Table = Vec<Vec<usize>>;

/// Every Cayley table of order `n` with identity 0.
///
/// For `n <= 6` this enumerates all reduced Latin squares and filters by
/// associativity at the end. Larger orders check every fully known triple
/// after each placement; there is no propagation and no symmetry breaking.
pub fn naive_group_tables(n: usize) -> Vec<Table> {
    assert!((1..=8).contains(&n));
    let mut t: Table = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    if x == 0 {
                        y
                    } else if y == 0 {
                        x
                    } else {
                        usize::MAX
                    }
                })
                .collect()
        })
        .collect();
    let cells: Vec<(usize, usize)> = (1..n).flat_map(|a| (1..n).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    fill(&mut t, &cells, 0, n > 6, &mut out);
    if n <= 6 {
        out.retain(is_associative);
    }
    out
}

fn fill(t: &mut Table, cells: &[(usize, usize)], i: usize, eager: bool, out: &mut Vec<Table>) {
    let n = t.len();
    if i == cells.len() {
        out.push(t.clone());
        return;
    }
    let (a, b) = cells[i];
    for v in 0..n {
        if (0..n).any(|x| t[a][x] == v || t[x][b] == v) {
            continue;
        }
        t[a][b] = v;
        if !eager || known_triples_ok(t) {
            fill(t, cells, i + 1, eager, out);
        }
        t[a][b] = usize::MAX;
    }
}

fn known_triples_ok(t: &Table) -> bool {
    let n = t.len();
    let unknown = usize::MAX;
    for x in 0..n {
        for y in 0..n {
            let xy = t[x][y];
            if xy == unknown {
                continue;
            }
            for z in 0..n {
                let yz = t[y][z];
                if yz == unknown {
                    continue;
                }
                let (l, r) = (t[xy][z], t[x][yz]);
                if l != unknown && r != unknown && l != r {
                    return false;
                }
            }
        }
    }
    true
}

pub fn is_associative(t: &Table) -> bool {
    let n = t.len();
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| t[t[x][y]][z] == t[x][t[y][z]])))
}

/// Lexicographically least relabeling of `t` over all permutations fixing
/// 0, found by trying every permutation.
pub fn brute_canonical(t: &Table) -> Vec<usize> {
    let n = t.len();
    let mut best: Vec<usize> = t.iter().flatten().copied().collect();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        // perm: new label -> old element
        let mut inv = vec![0; n];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }
        let mut smaller = false;
        'cmp: for a in 0..n {
            for b in 0..n {
                let v = inv[t[perm[a]][perm[b]]];
                let cur = best[a * n + b];
                if v < cur {
                    smaller = true;
                    break 'cmp;
                }
                if v > cur {
                    break 'cmp;
                }
            }
        }
        if smaller {
            best = (0..n * n).map(|i| inv[t[perm[i / n]][perm[i % n]]]).collect();
        }
        if !next_perm(&mut perm[1..]) {
            break;
        }
    }
    best
}

fn next_perm(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Number of groups of order `n` up to isomorphism, by brute force.
pub fn naive_count(n: usize) -> usize {
    naive_group_tables(n)
        .iter()
        .map(brute_canonical)
        .collect::<BTreeSet<_>>()
        .len()
}

/// Brute-force brute isomorphism check over all bijections fixing 0.
pub fn brute_isomorphic(g: &Table, h: &Table) -> bool {
    g.len() == h.len() && brute_canonical(g) == brute_canonical(h)
}

/// Cyclic subgroups as member sets, by collecting powers of every element.
pub fn brute_cyclic_subgroups(t: &Table) -> BTreeSet<BTreeSet<usize>> {
    let n = t.len();
    (0..n)
        .map(|x| {
            let mut members = BTreeSet::from([0]);
            let mut p = x;
            while members.insert(p) {
                p = t[p][x];
            }
            members
        })
        .collect()
}

/// `subgroup order -> number of cyclic subgroups of that order`.
pub fn brute_cyclic_counts(t: &Table) -> BTreeMap<usize, usize> {
    let mut counts = BTreeMap::new();
    for s in brute_cyclic_subgroups(t) {
        *counts.entry(s.len()).or_insert(0) += 1;
    }
    counts
}

pub fn brute_element_order(t: &Table, x: usize) -> usize {
    let mut p = x;
    let mut m = 1;
    while p != 0 {
        p = t[p][x];
        m += 1;
    }
    m
}

pub fn brute_phi(d: usize) -> usize {
    (1..=d).filter(|&k| gcd(k, d) == 1).count()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
