//! Isomorphism testing between Cayley tables.
//!
//! Groups are first compared by [`Fingerprint`](crate::group::Fingerprint);
//! surviving pairs are searched by assigning images to a generating
//! sequence of the first group one generator at a time. After every
//! assignment the partial map is extended over the subgroup generated so
//! far and rejected as soon as two products disagree.

use crate::element_set::ElementSet;
use crate::group::GroupTable;

/// Whether `g` and `h` are isomorphic.
pub fn is_isomorphic(g: &GroupTable, h: &GroupTable) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Returns a witness bijection `map` with `map[a·b] = map[a]·map[b]`, if any.
pub fn find_isomorphism(g: &GroupTable, h: &GroupTable) -> Option<Vec<usize>> {
    if g.order() != h.order() || g.fingerprint() != h.fingerprint() {
        return None;
    }
    IsoSearch::new(g.clone()).find(h)
}

/// Precomputed data for repeatedly testing candidates against one group.
pub struct IsoSearch {
    source: GroupTable,
    generators: Vec<usize>,
    profile: Vec<ElementProfile>,
}

/// Per-element invariants that any isomorphism must preserve.
#[derive(Clone, Copy, PartialEq, Eq)]
struct ElementProfile {
    order: usize,
    centralizer_size: usize,
}

fn profiles(g: &GroupTable) -> Vec<ElementProfile> {
    let n = g.order();
    g.elements()
        .map(|x| ElementProfile {
            order: g.element_order(x),
            centralizer_size: (0..n).filter(|&y| g.product(x, y) == g.product(y, x)).count(),
        })
        .collect()
}

/// A short generating sequence: repeatedly adds the element of largest
/// order outside the current subgroup.
pub fn generating_sequence(g: &GroupTable) -> Vec<usize> {
    let orders = g.element_orders();
    let mut by_order: Vec<usize> = g.elements().collect();
    by_order.sort_by(|&a, &b| orders[b].cmp(&orders[a]).then(a.cmp(&b)));
    let mut gens = Vec::new();
    let mut span = ElementSet::singleton(g.order(), 0);
    for x in by_order {
        if span.len() == g.order() {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            span = g.generated_subgroup(&ElementSet::from_elements(g.order(), gens.iter().copied()));
        }
    }
    gens
}

impl IsoSearch {
    pub fn new(source: GroupTable) -> Self {
        IsoSearch {
            generators: generating_sequence(&source),
            profile: profiles(&source),
            source,
        }
    }

    pub fn source(&self) -> &GroupTable {
        &self.source
    }

    pub fn into_source(self) -> GroupTable {
        self.source
    }

    /// Searches for an isomorphism from the source group onto `target`.
    /// Callers are expected to have compared fingerprints already.
    pub fn find(&self, target: &GroupTable) -> Option<Vec<usize>> {
        if target.order() != self.source.order() {
            return None;
        }
        let target_profile = profiles(target);
        let candidates: Vec<Vec<usize>> = self
            .generators
            .iter()
            .map(|&x| {
                target
                    .elements()
                    .filter(|&y| target_profile[y] == self.profile[x])
                    .collect()
            })
            .collect();
        let n = self.source.order();
        let mut map = vec![usize::MAX; n];
        map[0] = 0;
        let mut images = Vec::with_capacity(self.generators.len());
        if self.extend(target, &candidates, &mut images, &mut map) {
            Some(map)
        } else {
            None
        }
    }

    fn extend(
        &self,
        target: &GroupTable,
        candidates: &[Vec<usize>],
        images: &mut Vec<usize>,
        map: &mut Vec<usize>,
    ) -> bool {
        let level = images.len();
        if level == self.generators.len() {
            return true;
        }
        for &y in &candidates[level] {
            if map.contains(&y) {
                continue;
            }
            images.push(y);
            let saved = map.clone();
            if self.close_map(target, images, map) && self.extend(target, candidates, images, map) {
                return true;
            }
            *map = saved;
            images.pop();
        }
        false
    }

    /// Extends `map` over the subgroup generated by the first
    /// `images.len()` generators, following `x -> x·g_i`. Fails on any
    /// inconsistency or collision.
    fn close_map(&self, target: &GroupTable, images: &[usize], map: &mut [usize]) -> bool {
        let n = self.source.order();
        let mut used = vec![false; n];
        let mut queue = Vec::new();
        for (x, &y) in map.iter().enumerate() {
            if y != usize::MAX {
                used[y] = true;
                queue.push(x);
            }
        }
        while let Some(x) = queue.pop() {
            for (i, &img) in images.iter().enumerate() {
                let gx = self.source.product(x, self.generators[i]);
                let gy = target.product(map[x], img);
                if map[gx] == usize::MAX {
                    if used[gy] {
                        return false;
                    }
                    map[gx] = gy;
                    used[gy] = true;
                    queue.push(gx);
                } else if map[gx] != gy {
                    return false;
                }
            }
        }
        true
    }
}

/// Checks that `map` is a product-preserving bijection from `g` onto `h`.
pub fn is_isomorphism(g: &GroupTable, h: &GroupTable, map: &[usize]) -> bool {
    let n = g.order();
    if h.order() != n || map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &y in map {
        if y >= n || seen[y] {
            return false;
        }
        seen[y] = true;
    }
    (0..n).all(|a| (0..n).all(|b| map[g.product(a, b)] == h.product(map[a], map[b])))
}
