//! Finite groups as validated Cayley tables.
//!
//! Elements are the indices `0..n` and the identity is always index 0.
//! Tables are immutable once validated, so a [`GroupTable`] can be shared
//! freely between threads.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::element_set::ElementSet;
use crate::error::{GroupError, Line, Result};

/// Largest order any table may have. Element sets are single `u64` words.
pub const HARD_MAX_ORDER: usize = 64;

/// Default maximum order for constructed groups.
pub const DEFAULT_MAX_ORDER: usize = 24;

/// A finite group given by its multiplication table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupTable {
    order: usize,
    // Row-major, entry `a * order + b` holds the product a·b.
    cells: Vec<u8>,
}

impl GroupTable {
    /// Validates a raw square table and returns it as a group.
    ///
    /// Checks run in the order: shape, entry range, Latin property,
    /// identity, associativity, inverses. If the identity is some element
    /// `e != 0`, the labels `0` and `e` are swapped so that the identity
    /// ends up at index 0.
    pub fn validate(raw: &[Vec<usize>]) -> Result<GroupTable> {
        let n = raw.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        if n > HARD_MAX_ORDER {
            return Err(GroupError::OrderOverflow {
                order: n,
                max: HARD_MAX_ORDER,
            });
        }
        for (row, entries) in raw.iter().enumerate() {
            if entries.len() != n {
                return Err(GroupError::NotSquare {
                    row,
                    len: entries.len(),
                    expected: n,
                });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(GroupError::BadEntry {
                        row,
                        col,
                        value,
                        order: n,
                    });
                }
            }
        }
        check_latin(raw)?;

        let identity = (0..n)
            .find(|&e| (0..n).all(|x| raw[e][x] == x && raw[x][e] == x))
            .ok_or(GroupError::NoIdentity)?;

        for a in 0..n {
            for b in 0..n {
                let ab = raw[a][b];
                for c in 0..n {
                    let left = raw[ab][c];
                    let right = raw[a][raw[b][c]];
                    if left != right {
                        return Err(GroupError::NonAssociative { a, b, c, left, right });
                    }
                }
            }
        }

        if let Some(a) = (0..n).find(|&a| !(0..n).any(|b| raw[a][b] == identity && raw[b][a] == identity)) {
            return Err(GroupError::NoInverse(a));
        }

        let swap = |x: usize| {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };
        let mut cells = vec![0u8; n * n];
        for a in 0..n {
            for b in 0..n {
                cells[swap(a) * n + swap(b)] = swap(raw[a][b]) as u8;
            }
        }
        Ok(GroupTable { order: n, cells })
    }

    /// Builds a table from a product function without validating it.
    ///
    /// Used by the constructors in this crate whose output is a group by
    /// construction; debug builds still run the full validation.
    pub(crate) fn from_fn_unchecked(order: usize, product: impl Fn(usize, usize) -> usize) -> Self {
        assert!((1..=HARD_MAX_ORDER).contains(&order));
        let mut cells = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                cells.push(product(a, b) as u8);
            }
        }
        let table = GroupTable { order, cells };
        debug_assert!(
            GroupTable::validate(&table.rows()).as_ref() == Ok(&table),
            "constructed table is not a group with identity 0"
        );
        table
    }

    pub(crate) fn from_cells_unchecked(order: usize, cells: Vec<u8>) -> Self {
        debug_assert_eq!(cells.len(), order * order);
        GroupTable { order, cells }
    }

    /// The trivial group.
    pub fn trivial() -> Self {
        GroupTable {
            order: 1,
            cells: vec![0],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.order + b] as usize
    }

    /// The table as nested rows, suitable for [`GroupTable::validate`].
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells
            .chunks(self.order)
            .map(|row| row.iter().map(|&x| x as usize).collect())
            .collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn inverse(&self, x: usize) -> usize {
        (0..self.order)
            .find(|&y| self.product(x, y) == 0)
            .expect("validated tables have inverses")
    }

    /// Least `m >= 1` with `x^m` equal to the identity.
    pub fn element_order(&self, x: usize) -> usize {
        assert!(x < self.order, "element {x} out of range 0..{}", self.order);
        let mut power = x;
        let mut m = 1;
        while power != 0 {
            power = self.product(power, x);
            m += 1;
        }
        m
    }

    pub fn element_orders(&self) -> Vec<usize> {
        self.elements().map(|x| self.element_order(x)).collect()
    }

    /// Closure of `seeds` and the identity under the group product.
    pub fn generated_subgroup(&self, seeds: &ElementSet) -> ElementSet {
        debug_assert_eq!(seeds.parent_order(), self.order);
        let gens: Vec<usize> = seeds.iter().filter(|&s| s != 0).collect();
        let mut members = ElementSet::singleton(self.order, 0);
        let mut queue = vec![0];
        while let Some(x) = queue.pop() {
            for &s in &gens {
                let y = self.product(x, s);
                if members.insert(y) {
                    queue.push(y);
                }
            }
        }
        members
    }

    /// The cyclic subgroup generated by a single element.
    pub fn cyclic_closure(&self, x: usize) -> ElementSet {
        let mut members = ElementSet::singleton(self.order, 0);
        let mut power = x;
        while power != 0 {
            members.insert(power);
            power = self.product(power, x);
        }
        members
    }

    /// Elements commuting with every member of `s`.
    pub fn centralizer(&self, s: &ElementSet) -> ElementSet {
        ElementSet::from_elements(
            self.order,
            self.elements()
                .filter(|&x| s.iter().all(|h| self.product(x, h) == self.product(h, x))),
        )
    }

    pub fn center(&self) -> ElementSet {
        self.centralizer(&ElementSet::full(self.order))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.product(a, b) == self.product(b, a)))
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> usize {
        self.elements()
            .map(|x| self.element_order(x))
            .fold(1, |acc, m| acc.lcm(&m))
    }

    /// Whether `s` is closed under the product and contains the identity.
    pub fn is_subgroup(&self, s: &ElementSet) -> bool {
        s.contains(0) && s.iter().all(|a| s.iter().all(|b| s.contains(self.product(a, b))))
    }

    /// Direct product with componentwise multiplication.
    ///
    /// The pair `(a, b)` gets index `a * |other| + b`, so the pair of
    /// identities is index 0.
    pub fn direct_product(&self, other: &GroupTable, max_order: usize) -> Result<GroupTable> {
        let order = self.order * other.order;
        let max = max_order.min(HARD_MAX_ORDER);
        if order > max {
            return Err(GroupError::OrderOverflow { order, max });
        }
        let m = other.order;
        Ok(GroupTable::from_fn_unchecked(order, |x, y| {
            self.product(x / m, y / m) * m + other.product(x % m, y % m)
        }))
    }

    /// Applies a relabeling `perm` (old index -> new index). `perm` must fix 0.
    pub fn relabel(&self, perm: &[usize]) -> GroupTable {
        assert_eq!(perm.len(), self.order);
        assert_eq!(perm[0], 0, "relabeling must fix the identity");
        let mut inv = vec![0; self.order];
        for (old, &new) in perm.iter().enumerate() {
            inv[new] = old;
        }
        GroupTable::from_fn_unchecked(self.order, |a, b| perm[self.product(inv[a], inv[b])])
    }

    /// Isomorphism-invariant summary used to bucket groups before
    /// running an isomorphism search.
    pub fn fingerprint(&self) -> Fingerprint {
        let orders = self.element_orders();
        let mut order_counts: Vec<(usize, usize)> = Vec::new();
        let mut sorted = orders.clone();
        sorted.sort_unstable();
        for d in sorted {
            match order_counts.last_mut() {
                Some((last, count)) if *last == d => *count += 1,
                _ => order_counts.push((d, 1)),
            }
        }
        Fingerprint {
            order: self.order,
            order_counts,
            abelian: self.is_abelian(),
            center_size: self.center().len(),
            exponent: orders.iter().fold(1, |acc, m| acc.lcm(m)),
        }
    }
}

fn check_latin(raw: &[Vec<usize>]) -> Result<()> {
    let n = raw.len();
    for (row, entries) in raw.iter().enumerate() {
        let mut seen = 0u64;
        for &value in entries {
            if seen & (1 << value) != 0 {
                return Err(GroupError::NotLatin {
                    line: Line::Row,
                    index: row,
                    value,
                });
            }
            seen |= 1 << value;
        }
    }
    for col in 0..n {
        let mut seen = 0u64;
        for entries in raw {
            let value = entries[col];
            if seen & (1 << value) != 0 {
                return Err(GroupError::NotLatin {
                    line: Line::Column,
                    index: col,
                    value,
                });
            }
            seen |= 1 << value;
        }
    }
    Ok(())
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GroupTable(order {})", self.order)?;
        for row in self.cells.chunks(self.order) {
            let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  {}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Isomorphism invariants of a group, ordered for deterministic sorting.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Fingerprint {
    pub order: usize,
    /// `(element order, number of elements of that order)`, ascending.
    pub order_counts: Vec<(usize, usize)>,
    pub abelian: bool,
    pub center_size: usize,
    pub exponent: usize,
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let counts: Vec<String> = self
            .order_counts
            .iter()
            .map(|(d, c)| format!("{d}^{c}"))
            .collect();
        write!(
            f,
            "orders=[{}] abelian={} center={} exponent={}",
            counts.join(","),
            self.abelian,
            self.center_size,
            self.exponent
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> GroupTable {
        GroupTable::from_fn_unchecked(n, |a, b| (a + b) % n)
    }

    #[test]
    fn validates_trivial_and_z2() {
        let t = GroupTable::validate(&[vec![0]]).unwrap();
        assert_eq!(t.order(), 1);
        let z2 = GroupTable::validate(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(z2.order(), 2);
        assert_eq!(z2.product(1, 1), 0);
    }

    #[test]
    fn rejects_repeated_row_entry() {
        let err = GroupTable::validate(&[vec![0, 1], vec![1, 1]]).unwrap_err();
        assert!(matches!(err, GroupError::NotLatin { .. }), "{err:?}");
    }

    #[test]
    fn rejects_out_of_range_and_ragged() {
        assert!(matches!(
            GroupTable::validate(&[vec![0, 2], vec![1, 0]]),
            Err(GroupError::BadEntry { value: 2, .. })
        ));
        assert!(matches!(
            GroupTable::validate(&[vec![0, 1], vec![1]]),
            Err(GroupError::NotSquare { row: 1, .. })
        ));
        assert_eq!(GroupTable::validate(&[]), Err(GroupError::Empty));
    }

    #[test]
    fn rejects_missing_identity() {
        // x*y = x - y mod 3 is a Latin square with no identity.
        let raw: Vec<Vec<usize>> = (0..3)
            .map(|a| (0..3).map(|b| (a + 3 - b) % 3).collect())
            .collect();
        assert_eq!(GroupTable::validate(&raw), Err(GroupError::NoIdentity));
    }

    #[test]
    fn reports_first_non_associative_triple() {
        // A loop of order 5 with identity 0 that is not a group.
        let raw = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        match GroupTable::validate(&raw) {
            Err(GroupError::NonAssociative { a, b, c, left, right }) => {
                assert_eq!((a, b, c), (1, 1, 2));
                assert_ne!(left, right);
            }
            other => panic!("expected NonAssociative, got {other:?}"),
        }
    }

    #[test]
    fn reindexes_identity_to_zero() {
        // Z3 with the identity stored at index 2.
        let raw = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let g = GroupTable::validate(&raw).unwrap();
        assert!((0..3).all(|x| g.product(0, x) == x && g.product(x, 0) == x));
        assert_eq!(g.element_order(1), 3);
    }

    #[test]
    fn orders_divide_group_order() {
        let g = z(12);
        assert_eq!(g.element_order(0), 1);
        assert_eq!(g.element_order(1), 12);
        assert_eq!(g.element_order(8), 3);
        assert!(g.element_orders().iter().all(|m| 12 % m == 0));
        assert_eq!(g.exponent(), 12);
    }

    #[test]
    fn empty_seed_generates_trivial_subgroup() {
        let g = z(6);
        let h = g.generated_subgroup(&ElementSet::empty(6));
        assert_eq!(h.to_vec(), vec![0]);
        let h = g.generated_subgroup(&ElementSet::singleton(6, 2));
        assert_eq!(h.to_vec(), vec![0, 2, 4]);
        assert_eq!(g.cyclic_closure(2), h);
    }

    #[test]
    fn centralizer_of_identity_is_everything() {
        let g = z(5);
        assert_eq!(g.centralizer(&ElementSet::singleton(5, 0)), ElementSet::full(5));
        assert_eq!(g.center().len(), 5);
    }

    #[test]
    fn direct_product_overflow() {
        let err = z(5).direct_product(&z(5), 24).unwrap_err();
        assert_eq!(err, GroupError::OrderOverflow { order: 25, max: 24 });
        let p = z(2).direct_product(&z(3), 24).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.exponent(), 6);
    }

    #[test]
    fn relabel_keeps_structure() {
        let g = z(4);
        let h = g.relabel(&[0, 3, 1, 2]);
        assert_eq!(g.fingerprint(), h.fingerprint());
        assert_eq!(h.element_order(3), 4);
    }
}
