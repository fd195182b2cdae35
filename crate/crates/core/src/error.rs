use thiserror::Error;

/// Errors raised while building, ingesting or classifying groups.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("table is empty")]
    Empty,

    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },

    #[error("entry {value} at ({row}, {col}) is outside 0..{order}")]
    BadEntry {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("not a Latin square: {line} {index} repeats element {value}")]
    NotLatin { line: Line, index: usize, value: usize },

    #[error("no element is a two-sided identity")]
    NoIdentity,

    #[error("not associative: ({a}*{b})*{c} = {left} but {a}*({b}*{c}) = {right}")]
    NonAssociative {
        a: usize,
        b: usize,
        c: usize,
        left: usize,
        right: usize,
    },

    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),

    #[error("group order {order} exceeds the maximum order {max}")]
    OrderOverflow { order: usize, max: usize },

    #[error("order {order} is above the enumeration cap {cap}")]
    CapExceeded { order: usize, cap: usize },

    #[error("bad family parameters: {0}")]
    BadParameters(String),

    #[error("generator {index} is not a permutation of 0..{degree}")]
    NotAPermutation { index: usize, degree: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("group of order {order} has |G|-1 cyclic subgroups but matches none of Z3, Z4, S3, D8")]
    StarWithoutIdentity { order: usize },

    #[error("group of order {order} is isomorphic to {family} but does not have |G|-1 cyclic subgroups")]
    IdentityWithoutStar { order: usize, family: String },
}

/// Row or column of a Cayley table, for diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Row,
    Column,
}

impl std::fmt::Display for Line {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Line::Row => f.write_str("row"),
            Line::Column => f.write_str("column"),
        }
    }
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;
