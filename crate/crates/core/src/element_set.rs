use std::fmt;

use crate::group::HARD_MAX_ORDER;

/// A subset of the elements of a group of order at most [`HARD_MAX_ORDER`],
/// stored as a single-word bitset.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    bits: u64,
    parent_order: usize,
}

impl ElementSet {
    pub fn empty(parent_order: usize) -> Self {
        assert!(
            parent_order <= HARD_MAX_ORDER,
            "order {parent_order} above hard cap"
        );
        ElementSet {
            bits: 0,
            parent_order,
        }
    }

    pub fn full(parent_order: usize) -> Self {
        let mut set = Self::empty(parent_order);
        set.bits = mask_below(parent_order);
        set
    }

    pub fn singleton(parent_order: usize, x: usize) -> Self {
        let mut set = Self::empty(parent_order);
        set.insert(x);
        set
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(parent_order: usize, elements: I) -> Self {
        let mut set = Self::empty(parent_order);
        for x in elements {
            set.insert(x);
        }
        set
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    /// The raw bit pattern; bit `i` is set iff element `i` is a member.
    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn insert(&mut self, x: usize) -> bool {
        assert!(
            x < self.parent_order,
            "element {x} out of range 0..{}",
            self.parent_order
        );
        let fresh = self.bits & (1 << x) == 0;
        self.bits |= 1 << x;
        fresh
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.parent_order && self.bits & (1 << x) != 0
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        debug_assert_eq!(self.parent_order, other.parent_order);
        ElementSet {
            bits: self.bits | other.bits,
            parent_order: self.parent_order,
        }
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        debug_assert_eq!(self.parent_order, other.parent_order);
        ElementSet {
            bits: self.bits & other.bits,
            parent_order: self.parent_order,
        }
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter {
        Iter { bits: self.bits }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub(crate) fn mask_below(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub struct Iter {
    bits: u64,
}

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let x = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.bits.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for &ElementSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}
