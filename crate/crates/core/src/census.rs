//! Cyclic subgroups, their per-order counts, and the totient identities
//! those counts satisfy.
//!
//! Each element of order `d` generates a cyclic subgroup of order `d`, and
//! every cyclic subgroup of order `d` has exactly `phi(d)` generators. So if
//! `n_d` is the number of cyclic subgroups of order `d`, then
//! `sum_d n_d * phi(d) = |G|`, and `|G| - |C(G)| = sum_d n_d * (phi(d) - 1)`.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::element_set::ElementSet;
use crate::group::GroupTable;

/// Euler's totient by trial-division factorization.
pub fn euler_phi(d: u64) -> u64 {
    assert!(d >= 1, "euler_phi is defined for d >= 1");
    let mut rest = d;
    let mut phi = d;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if rest > 1 {
        phi -= phi / rest;
    }
    phi
}

/// All `d <= bound` with `euler_phi(d) == value`, ascending.
pub fn totient_preimage(value: u64, bound: u64) -> Vec<u64> {
    (1..=bound).filter(|&d| euler_phi(d) == value).collect()
}

/// Order of the automorphism group of a cyclic group of order `d`.
pub fn aut_order_cyclic(d: u64) -> u64 {
    euler_phi(d)
}

/// Positive divisors of `n`, ascending.
pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// One member of the set of cyclic subgroups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicSubgroup {
    /// Least element index generating the subgroup.
    pub generator: usize,
    pub order: usize,
    pub members: ElementSet,
}

/// Every cyclic subgroup of `g` exactly once, sorted by `(order, generator)`.
pub fn cyclic_subgroups(g: &GroupTable) -> Vec<CyclicSubgroup> {
    collect_cyclic(g, g.elements().map(|x| (x, g.cyclic_closure(x))))
}

/// Same result as [`cyclic_subgroups`], generating the closures on the
/// rayon pool. The merge is order-independent.
pub fn cyclic_subgroups_par(g: &GroupTable) -> Vec<CyclicSubgroup> {
    let closures: Vec<(usize, ElementSet)> = g
        .elements()
        .into_par_iter()
        .map(|x| (x, g.cyclic_closure(x)))
        .collect();
    collect_cyclic(g, closures)
}

fn collect_cyclic(
    g: &GroupTable,
    closures: impl IntoIterator<Item = (usize, ElementSet)>,
) -> Vec<CyclicSubgroup> {
    let mut least: HashMap<ElementSet, usize> = HashMap::with_capacity(g.order());
    for (x, members) in closures {
        least
            .entry(members)
            .and_modify(|gen| *gen = (*gen).min(x))
            .or_insert(x);
    }
    let mut out: Vec<CyclicSubgroup> = least
        .into_iter()
        .map(|(members, generator)| CyclicSubgroup {
            generator,
            order: members.len(),
            members,
        })
        .collect();
    out.sort_by_key(|c| (c.order, c.generator));
    out
}

/// Divisor-indexed counts of cyclic subgroups.
///
/// Serialized with the field names `order`, `divisors`, `counts`, `total`,
/// `deficiency`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CyclicCensus {
    #[serde(rename = "order")]
    pub group_order: usize,
    /// Every positive divisor of the group order, ascending.
    pub divisors: Vec<usize>,
    /// `counts[i]` is the number of cyclic subgroups of order `divisors[i]`.
    pub counts: Vec<usize>,
    /// Number of cyclic subgroups.
    pub total: usize,
    /// Group order minus `total`.
    pub deficiency: usize,
}

impl CyclicCensus {
    pub fn from_subgroups(group_order: usize, subgroups: &[CyclicSubgroup]) -> Self {
        let divisors = divisors(group_order);
        let counts = divisors
            .iter()
            .map(|&d| subgroups.iter().filter(|c| c.order == d).count())
            .collect();
        let total = subgroups.len();
        CyclicCensus {
            group_order,
            divisors,
            counts,
            total,
            deficiency: group_order - total,
        }
    }

    /// Number of cyclic subgroups of order `d` (0 if `d` is not a divisor).
    pub fn count_of(&self, d: usize) -> usize {
        self.divisors
            .iter()
            .position(|&x| x == d)
            .map_or(0, |i| self.counts[i])
    }

    fn weighted_sum(&self, weight: impl Fn(u64) -> i64) -> i64 {
        self.divisors
            .iter()
            .zip(&self.counts)
            .map(|(&d, &count)| count as i64 * weight(d as u64))
            .sum()
    }

    /// `sum n_i * phi(d_i) == |G|`.
    pub fn check_totient_identity(&self) -> bool {
        self.weighted_sum(|d| euler_phi(d) as i64) == self.group_order as i64
    }

    /// `sum n_i * (phi(d_i) - 1) == 1`.
    pub fn check_star_identity(&self) -> bool {
        self.weighted_sum(|d| euler_phi(d) as i64 - 1) == 1
    }
}

pub fn census(g: &GroupTable) -> CyclicCensus {
    CyclicCensus::from_subgroups(g.order(), &cyclic_subgroups(g))
}

pub fn check_totient_identity(c: &CyclicCensus) -> bool {
    c.check_totient_identity()
}

pub fn check_star_identity(c: &CyclicCensus) -> bool {
    c.check_star_identity()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_phi(d: u64) -> u64 {
        (1..=d).filter(|&k| num_integer::gcd(k, d) == 1).count() as u64
    }

    #[test]
    fn phi_matches_coprime_count() {
        for d in 1..=500 {
            assert_eq!(euler_phi(d), brute_phi(d), "d = {d}");
        }
        assert_eq!(euler_phi(12), 4);
    }

    #[test]
    fn preimages_of_small_values() {
        assert_eq!(totient_preimage(2, 100), vec![3, 4, 6]);
        assert_eq!(totient_preimage(1, 100), vec![1, 2]);
        assert!(totient_preimage(3, 100).is_empty());
    }

    #[test]
    fn aut_orders() {
        assert_eq!(aut_order_cyclic(1), 1);
        assert_eq!(aut_order_cyclic(3), 2);
        assert_eq!(aut_order_cyclic(4), 2);
    }

    #[test]
    fn trivial_group_census() {
        let c = census(&GroupTable::trivial());
        assert_eq!(c.divisors, vec![1]);
        assert_eq!(c.counts, vec![1]);
        assert_eq!((c.total, c.deficiency), (1, 0));
        assert!(c.check_totient_identity());
        assert!(!c.check_star_identity());
    }

    #[test]
    fn tampered_census_fails_identity() {
        let g = GroupTable::from_fn_unchecked(4, |a, b| a ^ b);
        let mut c = census(&g);
        assert!(c.check_totient_identity());
        c.counts[1] -= 1;
        assert!(!c.check_totient_identity());
    }

    #[test]
    fn parallel_matches_sequential() {
        let g = GroupTable::from_fn_unchecked(12, |a, b| (a + b) % 12);
        assert_eq!(cyclic_subgroups(&g), cyclic_subgroups_par(&g));
    }

    #[test]
    fn count_of_non_divisor_is_zero() {
        let c = census(&GroupTable::from_fn_unchecked(6, |a, b| (a + b) % 6));
        assert_eq!(c.count_of(4), 0);
        assert_eq!(c.count_of(3), 1);
    }
}
