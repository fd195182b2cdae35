//! Exhaustive enumeration of groups of small order up to isomorphism.
//!
//! The search completes a Cayley table cell by cell in row-major order, with
//! the identity row and column pre-filled. Each row and column keeps a
//! bitmask of used symbols, and every placed entry is checked against all
//! associativity triples whose cells are now known. Complete tables are
//! bucketed by fingerprint and deduplicated by isomorphism test.
//!
//! Candidate symbols are tried in ascending order, so complete tables are
//! produced in lexicographic order and the first table seen in each class is
//! the lexicographically least one. That table becomes the representative.
//!
//! With [`EnumerationConfig::canonical_prune`] the search also discards any
//! partial table for which some relabeling of the known cells is already
//! lexicographically smaller. Least tables are never discarded, so the
//! output is the same; the search then reaches one complete table per class.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::census::{census, CyclicCensus};
use crate::element_set::mask_below;
use crate::error::{GroupError, Result};
use crate::families::{recognize, FamilySpec};
use crate::group::{Fingerprint, GroupTable};
use crate::iso::IsoSearch;

/// Largest order enumerated without the extended flag.
pub const DEFAULT_ENUMERATION_CAP: usize = 12;
/// Largest order enumerated with the extended flag.
pub const EXTENDED_ENUMERATION_CAP: usize = 16;

const UNSET: u8 = u8::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationConfig {
    /// Unlocks orders up to [`EXTENDED_ENUMERATION_CAP`].
    pub extended: bool,
    /// Worker threads; 1 runs on the calling thread.
    pub jobs: usize,
    /// Discard partial tables that cannot complete to the lexicographically
    /// least table of their class. Changes running time only: without it,
    /// order 12 visits about 21.6 million complete tables instead of 5.
    pub canonical_prune: bool,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig {
            extended: false,
            jobs: 1,
            canonical_prune: true,
        }
    }
}

impl EnumerationConfig {
    pub fn extended() -> Self {
        EnumerationConfig {
            extended: true,
            ..Self::default()
        }
    }

    pub fn cap(&self) -> usize {
        if self.extended {
            EXTENDED_ENUMERATION_CAP
        } else {
            DEFAULT_ENUMERATION_CAP
        }
    }

    fn check(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(GroupError::BadParameters("group order must be at least 1".into()));
        }
        if n > self.cap() {
            return Err(GroupError::CapExceeded {
                order: n,
                cap: self.cap(),
            });
        }
        Ok(())
    }
}

/// One isomorphism class found by enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoClassRecord {
    pub order: usize,
    #[serde(skip)]
    pub representative: GroupTable,
    pub fingerprint: Fingerprint,
    #[serde(serialize_with = "serialize_recognized")]
    pub recognized: Option<FamilySpec>,
    pub census: CyclicCensus,
}

fn serialize_recognized<S: serde::Serializer>(spec: &Option<FamilySpec>, s: S) -> Result<S::Ok, S::Error> {
    match spec {
        Some(spec) => s.serialize_some(&spec.to_string()),
        None => s.serialize_none(),
    }
}

impl IsoClassRecord {
    pub fn new(representative: GroupTable) -> Self {
        IsoClassRecord {
            order: representative.order(),
            fingerprint: representative.fingerprint(),
            recognized: recognize(&representative),
            census: census(&representative),
            representative,
        }
    }
}

/// All groups of order `n` up to isomorphism, sorted by fingerprint and
/// then by representative table.
pub fn enumerate_groups(n: usize, config: &EnumerationConfig) -> Result<Vec<IsoClassRecord>> {
    config.check(n)?;
    let reps = if config.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| GroupError::BadParameters(format!("cannot start worker pool: {e}")))?;
        pool.install(|| representatives(n, config.canonical_prune, true))
    } else {
        representatives(n, config.canonical_prune, false)
    };
    let mut records: Vec<IsoClassRecord> = reps.into_iter().map(IsoClassRecord::new).collect();
    records.sort_by(|a, b| (&a.fingerprint, &a.representative).cmp(&(&b.fingerprint, &b.representative)));
    Ok(records)
}

pub fn count_groups(n: usize, config: &EnumerationConfig) -> Result<usize> {
    enumerate_groups(n, config).map(|records| records.len())
}

/// Records for every order `1..=max_order`, in order.
pub fn universe(max_order: usize, config: &EnumerationConfig) -> Result<Vec<IsoClassRecord>> {
    config.check(max_order)?;
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.extend(enumerate_groups(n, config)?);
    }
    Ok(out)
}

/// Calls `visit` with every complete Cayley table of order `n` that has the
/// identity at index 0, in lexicographic order. With `canonical_prune`,
/// only tables that can still be least in their class are guaranteed.
pub fn for_each_table(n: usize, canonical_prune: bool, mut visit: impl FnMut(&GroupTable)) {
    let mut search = TableSearch::new(n, canonical_prune);
    search.run(usize::MAX, &mut |s: &TableSearch| visit(&s.table()));
}

/// Deduplicated class representatives, each the lexicographically least
/// table of its class.
fn representatives(n: usize, canonical_prune: bool, parallel: bool) -> Vec<GroupTable> {
    let mut root = TableSearch::new(n, canonical_prune);
    if !parallel {
        let mut classes = ClassSet::default();
        root.run(usize::MAX, &mut |s: &TableSearch| classes.offer(s.table()));
        return classes.into_representatives();
    }

    // Split after two branching decisions; prefixes come out in lex order
    // and complete tables reached earlier are kept as their own prefixes.
    let split = 2;
    let mut prefixes: Vec<Vec<u8>> = Vec::new();
    root.run(split, &mut |s: &TableSearch| prefixes.push(s.cells.clone()));
    let partial: Vec<Vec<GroupTable>> = prefixes
        .par_iter()
        .map(|cells| {
            let mut search = TableSearch::from_snapshot(n, canonical_prune, cells);
            let mut classes = ClassSet::default();
            search.run(usize::MAX, &mut |s: &TableSearch| classes.offer(s.table()));
            classes.into_representatives()
        })
        .collect();
    let mut merged = ClassSet::default();
    for reps in partial {
        for rep in reps {
            merged.offer(rep);
        }
    }
    merged.into_representatives()
}

/// Isomorphism classes seen so far, keeping the first table offered for
/// each class.
#[derive(Default)]
struct ClassSet {
    classes: Vec<IsoSearch>,
    buckets: HashMap<Fingerprint, Vec<usize>>,
}

impl ClassSet {
    fn offer(&mut self, table: GroupTable) {
        let bucket = self.buckets.entry(table.fingerprint()).or_default();
        if bucket.iter().any(|&i| self.classes[i].find(&table).is_some()) {
            return;
        }
        bucket.push(self.classes.len());
        self.classes.push(IsoSearch::new(table));
    }

    fn into_representatives(self) -> Vec<GroupTable> {
        self.classes.into_iter().map(IsoSearch::into_source).collect()
    }
}

/// Depth-first completion of a Cayley table.
///
/// Branching always happens on the first empty cell in row-major order.
/// Every placed entry, whether chosen or derived, is pushed through the
/// associativity constraints it takes part in; any entry those constraints
/// determine is placed as well, and a contradiction (an associativity
/// violation or a repeated symbol in a row or column) abandons the branch.
struct TableSearch {
    n: usize,
    cells: Vec<u8>,
    row_used: Vec<u64>,
    col_used: Vec<u64>,
    // `in_row[x * n + v]` is the column holding `v` in row `x`.
    in_row: Vec<u8>,
    // `in_col[y * n + v]` is the row holding `v` in column `y`.
    in_col: Vec<u8>,
    trail: Vec<(u8, u8)>,
    queue: Vec<(u8, u8)>,
    canonical_prune: bool,
}

impl TableSearch {
    fn new(n: usize, canonical_prune: bool) -> Self {
        assert!((1..=64).contains(&n));
        let mut search = TableSearch {
            n,
            cells: vec![UNSET; n * n],
            row_used: vec![0; n],
            col_used: vec![0; n],
            in_row: vec![UNSET; n * n],
            in_col: vec![UNSET; n * n],
            trail: Vec::with_capacity(n * n),
            queue: Vec::with_capacity(n * n),
            canonical_prune,
        };
        for x in 0..n {
            search.set(0, x, x);
            if x > 0 {
                search.set(x, 0, x);
            }
        }
        search.trail.clear();
        search
    }

    fn from_snapshot(n: usize, canonical_prune: bool, cells: &[u8]) -> Self {
        let mut search = Self::new(n, canonical_prune);
        for a in 1..n {
            for b in 1..n {
                let v = cells[a * n + b];
                if v != UNSET {
                    search.set(a, b, v as usize);
                }
            }
        }
        search.trail.clear();
        search
    }

    fn table(&self) -> GroupTable {
        GroupTable::from_cells_unchecked(self.n, self.cells.clone())
    }

    #[inline]
    fn get(&self, a: usize, b: usize) -> u8 {
        self.cells[a * self.n + b]
    }

    #[inline]
    fn set(&mut self, a: usize, b: usize, c: usize) {
        let n = self.n;
        self.cells[a * n + b] = c as u8;
        self.row_used[a] |= 1 << c;
        self.col_used[b] |= 1 << c;
        self.in_row[a * n + c] = b as u8;
        self.in_col[b * n + c] = a as u8;
        self.trail.push((a as u8, b as u8));
    }

    fn undo_to(&mut self, mark: usize) {
        let n = self.n;
        while self.trail.len() > mark {
            let (a, b) = self.trail.pop().unwrap();
            let (a, b) = (a as usize, b as usize);
            let c = self.cells[a * n + b] as usize;
            self.cells[a * n + b] = UNSET;
            self.row_used[a] &= !(1 << c);
            self.col_used[b] &= !(1 << c);
            self.in_row[a * n + c] = UNSET;
            self.in_col[b * n + c] = UNSET;
        }
    }

    /// Requires cell `(a, b)` to hold `c`. Returns false on contradiction.
    #[inline]
    fn force(&mut self, a: usize, b: usize, c: usize) -> bool {
        let current = self.get(a, b);
        if current != UNSET {
            return current as usize == c;
        }
        if (self.row_used[a] | self.col_used[b]) & (1 << c) != 0 {
            return false;
        }
        self.set(a, b, c);
        self.queue.push((a as u8, b as u8));
        true
    }

    /// Places `(a, b) = c` and everything it implies.
    fn assign(&mut self, a: usize, b: usize, c: usize) -> bool {
        self.queue.clear();
        if !self.force(a, b, c) {
            return false;
        }
        while let Some((a, b)) = self.queue.pop() {
            if !self.propagate(a as usize, b as usize) {
                return false;
            }
        }
        true
    }

    /// Walks the associativity triples `(x·y)·z = x·(y·z)` in which the
    /// known cell `(a, b) = c` appears, deriving whatever they determine.
    fn propagate(&mut self, a: usize, b: usize) -> bool {
        let n = self.n;
        let c = self.get(a, b) as usize;
        for x in 0..n {
            // (a·b)·x = a·(b·x)
            let bx = self.get(b, x);
            if bx != UNSET {
                let left = self.get(c, x);
                let right = self.get(a, bx as usize);
                match (left != UNSET, right != UNSET) {
                    (true, true) if left != right => return false,
                    (true, false) if !self.force(a, bx as usize, left as usize) => return false,
                    (false, true) if !self.force(c, x, right as usize) => return false,
                    _ => {}
                }
            } else {
                // a·(b·x) = c·x  =>  b·x is the column holding c·x in row a
                let left = self.get(c, x);
                if left != UNSET {
                    let col = self.in_row[a * n + left as usize];
                    if col != UNSET && !self.force(b, x, col as usize) {
                        return false;
                    }
                }
            }

            // (x·a)·b = x·(a·b)
            let xa = self.get(x, a);
            if xa != UNSET {
                let left = self.get(xa as usize, b);
                let right = self.get(x, c);
                match (left != UNSET, right != UNSET) {
                    (true, true) if left != right => return false,
                    (true, false) if !self.force(x, c, left as usize) => return false,
                    (false, true) if !self.force(xa as usize, b, right as usize) => return false,
                    _ => {}
                }
            } else {
                // (x·a)·b = x·c  =>  x·a is the row holding x·c in column b
                let right = self.get(x, c);
                if right != UNSET {
                    let row = self.in_col[b * n + right as usize];
                    if row != UNSET && !self.force(x, a, row as usize) {
                        return false;
                    }
                }
            }

            // x·y = a  =>  x·(y·b) = c
            let y = self.in_row[x * n + a];
            if y != UNSET {
                let yb = self.get(y as usize, b);
                if yb != UNSET {
                    if !self.force(x, yb as usize, c) {
                        return false;
                    }
                } else {
                    let col = self.in_row[x * n + c];
                    if col != UNSET && !self.force(y as usize, b, col as usize) {
                        return false;
                    }
                }
            }

            // x·z = b  =>  (a·x)·z = c
            let z = self.in_row[x * n + b];
            if z != UNSET {
                let ax = self.get(a, x);
                if ax != UNSET {
                    if !self.force(ax as usize, z as usize, c) {
                        return false;
                    }
                } else {
                    let row = self.in_col[z as usize * n + c];
                    if row != UNSET && !self.force(a, x, row as usize) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn first_empty(&self, from: usize) -> Option<usize> {
        (from..self.cells.len()).find(|&i| self.cells[i] == UNSET)
    }

    /// Explores the subtree below the current state, calling `visit` at
    /// complete tables or after `budget` further branching decisions.
    fn run(&mut self, budget: usize, visit: &mut dyn FnMut(&TableSearch)) {
        self.explore(0, budget, visit);
    }

    fn explore(&mut self, from: usize, budget: usize, visit: &mut dyn FnMut(&TableSearch)) {
        let Some(cell) = self.first_empty(from) else {
            visit(self);
            return;
        };
        if budget == 0 {
            visit(self);
            return;
        }
        let n = self.n;
        let (a, b) = (cell / n, cell % n);
        let mut options = mask_below(n) & !(self.row_used[a] | self.col_used[b]);
        while options != 0 {
            let c = options.trailing_zeros() as usize;
            options &= options - 1;
            let mark = self.trail.len();
            if self.assign(a, b, c) && !self.pruned() {
                self.explore(cell + 1, budget - 1, visit);
            }
            self.undo_to(mark);
        }
    }

    fn pruned(&self) -> bool {
        self.canonical_prune && self.beaten_by_relabeling()
    }

    /// Reports whether some relabeling fixing the identity makes every
    /// completion of the current partial table lexicographically smaller.
    /// Only cells already known are compared.
    fn beaten_by_relabeling(&self) -> bool {
        let mut relabel = Relabeling::new(self.n);
        (1..self.n).any(|first| {
            relabel.reset();
            relabel.assign(first, 1);
            self.relabeling_wins(&mut relabel, 1, 1) == Comparison::Smaller
        })
    }

    /// Compares the relabeled table against the current one from cell
    /// `(row, col)` on, in row-major order. The relabeling is extended on
    /// demand; new labels are handed out in increasing order, which is the
    /// only choice that can make the relabeled cell as small as possible.
    fn relabeling_wins(&self, relabel: &mut Relabeling, row: usize, col: usize) -> Comparison {
        let n = self.n;
        let (mut r, mut c) = (row, col);
        loop {
            if c == n {
                r += 1;
                c = 1;
            }
            if r == n {
                return Comparison::Equal;
            }
            let ours = self.get(r, c);
            if ours == UNSET {
                return Comparison::Unknown;
            }
            let Some(src_row) = relabel.preimage(r) else {
                return Comparison::Unknown;
            };
            let src_col = match relabel.preimage(c) {
                Some(x) => x,
                None => {
                    // Label `c` is the next fresh label; try every unlabeled
                    // element for it.
                    debug_assert_eq!(c, relabel.next_label);
                    let mut best = Comparison::Larger;
                    for x in 1..n {
                        if relabel.label_of(x).is_some() {
                            continue;
                        }
                        let mut branch = relabel.clone();
                        branch.assign(x, c);
                        match self.relabeling_wins(&mut branch, r, c) {
                            Comparison::Smaller => return Comparison::Smaller,
                            other => best = best.max_uncertain(other),
                        }
                    }
                    return best;
                }
            };
            let product = self.get(src_row, src_col);
            if product == UNSET {
                return Comparison::Unknown;
            }
            let theirs = match relabel.label_of(product as usize) {
                Some(label) => label,
                None => {
                    let label = relabel.next_label;
                    relabel.assign(product as usize, label);
                    label
                }
            };
            match theirs.cmp(&(ours as usize)) {
                std::cmp::Ordering::Less => return Comparison::Smaller,
                std::cmp::Ordering::Greater => return Comparison::Larger,
                std::cmp::Ordering::Equal => {}
            }
            c += 1;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Comparison {
    Smaller,
    Equal,
    Larger,
    Unknown,
}

impl Comparison {
    // Combines outcomes of alternative branches that did not win outright.
    fn max_uncertain(self, other: Comparison) -> Comparison {
        use Comparison::*;
        match (self, other) {
            (Unknown, _) | (_, Unknown) => Unknown,
            (Equal, _) | (_, Equal) => Equal,
            _ => Larger,
        }
    }
}

/// A partial relabeling fixing the identity: element -> label.
#[derive(Clone)]
struct Relabeling {
    label: Vec<u8>,
    preimage: Vec<u8>,
    next_label: usize,
}

impl Relabeling {
    fn new(n: usize) -> Self {
        let mut r = Relabeling {
            label: vec![UNSET; n],
            preimage: vec![UNSET; n],
            next_label: 0,
        };
        r.reset();
        r
    }

    fn reset(&mut self) {
        self.label.fill(UNSET);
        self.preimage.fill(UNSET);
        self.label[0] = 0;
        self.preimage[0] = 0;
        self.next_label = 1;
    }

    fn assign(&mut self, element: usize, label: usize) {
        debug_assert_eq!(label, self.next_label);
        self.label[element] = label as u8;
        self.preimage[label] = element as u8;
        self.next_label += 1;
    }

    fn label_of(&self, element: usize) -> Option<usize> {
        (self.label[element] != UNSET).then_some(self.label[element] as usize)
    }

    fn preimage(&self, label: usize) -> Option<usize> {
        (self.preimage[label] != UNSET).then_some(self.preimage[label] as usize)
    }
}
