//! Standard group families and permutation-group ingestion.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{GroupError, Result};
use crate::group::{GroupTable, DEFAULT_MAX_ORDER, HARD_MAX_ORDER};
use crate::iso::is_isomorphic;

/// A named member of one of the supported families.
///
/// `Dihedral(n)` and `GeneralizedQuaternion(n)` are parameterized by the
/// group order, so the dihedral group of order 8 is `Dihedral(8)`.
/// `ElementaryAbelian2(k)` has order `2^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    GeneralizedQuaternion(usize),
    ElementaryAbelian2(u32),
    DirectProduct(Vec<FamilySpec>),
}

impl FamilySpec {
    /// Order of the group this spec describes, or `None` on overflow.
    pub fn order(&self) -> Option<usize> {
        match *self {
            FamilySpec::Cyclic(n) | FamilySpec::Dihedral(n) | FamilySpec::GeneralizedQuaternion(n) => Some(n),
            FamilySpec::Symmetric(m) => (1..=m).try_fold(1usize, |acc, k| acc.checked_mul(k)),
            FamilySpec::ElementaryAbelian2(k) => 1usize.checked_shl(k).filter(|_| k < usize::BITS),
            FamilySpec::DirectProduct(ref factors) => factors
                .iter()
                .try_fold(1usize, |acc, f| f.order().and_then(|o| acc.checked_mul(o))),
        }
    }

    fn check_parameters(&self) -> Result<()> {
        let bad = |msg: String| Err(GroupError::BadParameters(msg));
        match *self {
            FamilySpec::Cyclic(0) => bad("cyclic order must be at least 1".into()),
            FamilySpec::Dihedral(n) if n < 2 || n % 2 != 0 => {
                bad(format!("dihedral order must be even and at least 2, got {n}"))
            }
            FamilySpec::Symmetric(0) => bad("symmetric degree must be at least 1".into()),
            FamilySpec::GeneralizedQuaternion(n) if n < 8 || n % 4 != 0 => bad(format!(
                "generalized quaternion order must be a multiple of 4 and at least 8, got {n}"
            )),
            FamilySpec::DirectProduct(ref factors) => {
                if factors.is_empty() {
                    return bad("direct product needs at least one factor".into());
                }
                factors.iter().try_for_each(FamilySpec::check_parameters)
            }
            _ => Ok(()),
        }
    }

    /// Builds the Cayley table with the default order cap.
    pub fn build(&self) -> Result<GroupTable> {
        self.build_capped(DEFAULT_MAX_ORDER)
    }

    /// Builds the Cayley table, failing if the order exceeds `max_order`
    /// (itself clamped to [`HARD_MAX_ORDER`]).
    pub fn build_capped(&self, max_order: usize) -> Result<GroupTable> {
        self.check_parameters()?;
        let max = max_order.min(HARD_MAX_ORDER);
        let order = self.order().unwrap_or(usize::MAX);
        if order > max {
            return Err(GroupError::OrderOverflow { order, max });
        }
        Ok(match *self {
            FamilySpec::Cyclic(n) => cyclic(n),
            FamilySpec::Dihedral(n) => dihedral(n),
            FamilySpec::Symmetric(m) => symmetric(m),
            FamilySpec::GeneralizedQuaternion(n) => generalized_quaternion(n),
            FamilySpec::ElementaryAbelian2(k) => {
                let n = 1usize << k;
                GroupTable::from_fn_unchecked(n, |a, b| a ^ b)
            }
            FamilySpec::DirectProduct(ref factors) => {
                let mut acc = GroupTable::trivial();
                for f in factors {
                    acc = acc.direct_product(&f.build_capped(max)?, max)?;
                }
                acc
            }
        })
    }
}

fn cyclic(n: usize) -> GroupTable {
    GroupTable::from_fn_unchecked(n, |a, b| (a + b) % n)
}

// r^i s^j is stored at index i + m*j.
fn dihedral(order: usize) -> GroupTable {
    let m = order / 2;
    GroupTable::from_fn_unchecked(order, |x, y| {
        let (i, j) = (x % m, x / m);
        let (k, l) = (y % m, y / m);
        let rot = if j == 0 { (i + k) % m } else { (i + m - k) % m };
        rot + m * ((j + l) % 2)
    })
}

// a^i b^j at index i + 2m*j, with a^(2m) = 1, b^2 = a^m, b a b^-1 = a^-1.
fn generalized_quaternion(order: usize) -> GroupTable {
    let half = order / 2;
    let m = order / 4;
    GroupTable::from_fn_unchecked(order, |x, y| {
        let (i, j) = (x % half, x / half);
        let (k, l) = (y % half, y / half);
        match (j, l) {
            (0, _) => (i + k) % half + half * l,
            (_, 0) => (i + half - k) % half + half,
            _ => (i + half - k + m) % half,
        }
    })
}

fn symmetric(m: usize) -> GroupTable {
    let mut perms = Vec::new();
    let mut current: Vec<u8> = (0..m as u8).collect();
    loop {
        perms.push(current.clone());
        if !next_permutation(&mut current) {
            break;
        }
    }
    table_from_permutations(&perms)
}

fn next_permutation(p: &mut [u8]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Cayley table of a closed list of permutations whose first entry is the
/// identity. The product is composition: `(p·q)(x) = p(q(x))`.
fn table_from_permutations(perms: &[Vec<u8>]) -> GroupTable {
    let index: HashMap<&[u8], usize> = perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    GroupTable::from_fn_unchecked(perms.len(), |a, b| {
        let composed: Vec<u8> = perms[b].iter().map(|&x| perms[a][x as usize]).collect();
        index[composed.as_slice()]
    })
}

/// Closes a set of permutations of `0..degree` under composition and
/// returns the Cayley table of the resulting group. Elements are indexed in
/// discovery order with the identity at 0.
pub fn from_permutations(degree: usize, generators: &[Vec<usize>], max_order: usize) -> Result<GroupTable> {
    let max = max_order.min(HARD_MAX_ORDER);
    if degree == 0 || degree > u8::MAX as usize {
        return Err(GroupError::BadParameters(format!(
            "degree {degree} out of range 1..=255"
        )));
    }
    let mut gens: Vec<Vec<u8>> = Vec::with_capacity(generators.len());
    for (index, g) in generators.iter().enumerate() {
        let mut seen = vec![false; degree];
        let ok = g.len() == degree
            && g.iter()
                .all(|&x| x < degree && !std::mem::replace(&mut seen[x], true));
        if !ok {
            return Err(GroupError::NotAPermutation { index, degree });
        }
        gens.push(g.iter().map(|&x| x as u8).collect());
    }

    let identity: Vec<u8> = (0..degree as u8).collect();
    let mut perms = vec![identity.clone()];
    let mut index: HashMap<Vec<u8>, usize> = HashMap::from([(identity, 0)]);
    let mut cursor = 0;
    while cursor < perms.len() {
        for g in &gens {
            let next: Vec<u8> = g.iter().map(|&x| perms[cursor][x as usize]).collect();
            if !index.contains_key(&next) {
                if perms.len() == max {
                    return Err(GroupError::OrderOverflow {
                        order: perms.len() + 1,
                        max,
                    });
                }
                index.insert(next.clone(), perms.len());
                perms.push(next);
            }
        }
        cursor += 1;
    }
    Ok(table_from_permutations(&perms))
}

/// Names `g` as a family member of the same order, trying cyclic,
/// elementary abelian 2, dihedral, symmetric (degree at most 4) and
/// generalized quaternion in that order.
pub fn recognize(g: &GroupTable) -> Option<FamilySpec> {
    candidates(g.order()).into_iter().find(|spec| {
        spec.build_capped(HARD_MAX_ORDER)
            .is_ok_and(|t| is_isomorphic(g, &t))
    })
}

fn candidates(n: usize) -> Vec<FamilySpec> {
    let mut out = vec![FamilySpec::Cyclic(n)];
    if n.is_power_of_two() {
        out.push(FamilySpec::ElementaryAbelian2(n.trailing_zeros()));
    }
    if n.is_multiple_of(2) {
        out.push(FamilySpec::Dihedral(n));
    }
    if let Some(m) = (1..=4).find(|&m| FamilySpec::Symmetric(m).order() == Some(n)) {
        out.push(FamilySpec::Symmetric(m));
    }
    if n >= 8 && n.is_multiple_of(4) {
        out.push(FamilySpec::GeneralizedQuaternion(n));
    }
    out
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cyclic(n) => write!(f, "cyclic({n})"),
            FamilySpec::Dihedral(n) => write!(f, "dihedral({n})"),
            FamilySpec::Symmetric(m) => write!(f, "symmetric({m})"),
            FamilySpec::GeneralizedQuaternion(n) => write!(f, "generalized_quaternion({n})"),
            FamilySpec::ElementaryAbelian2(k) => write!(f, "elementary_abelian_2({k})"),
            FamilySpec::DirectProduct(factors) => {
                f.write_str("product(")?;
                for (i, factor) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{factor}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// Parses the command-line syntax `name:param`, e.g. `dihedral:8`, or
/// `product:cyclic:2,cyclic:4` for direct products.
impl FromStr for FamilySpec {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || GroupError::BadParameters(format!("cannot parse family spec `{s}`"));
        let (name, rest) = s.split_once(':').ok_or_else(bad)?;
        if matches!(name, "product" | "direct_product") {
            let factors = rest
                .split(',')
                .map(str::parse)
                .collect::<Result<Vec<FamilySpec>>>()?;
            return Ok(FamilySpec::DirectProduct(factors));
        }
        let param: usize = rest.trim().parse().map_err(|_| bad())?;
        match name {
            "cyclic" | "z" => Ok(FamilySpec::Cyclic(param)),
            "dihedral" | "d" => Ok(FamilySpec::Dihedral(param)),
            "symmetric" | "s" => Ok(FamilySpec::Symmetric(param)),
            "generalized_quaternion" | "quaternion" | "q" => Ok(FamilySpec::GeneralizedQuaternion(param)),
            "elementary_abelian_2" | "elem2" => {
                let k = u32::try_from(param).map_err(|_| bad())?;
                Ok(FamilySpec::ElementaryAbelian2(k))
            }
            _ => Err(GroupError::BadParameters(format!("unknown family `{name}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_cli_syntax() {
        assert_eq!("cyclic:4".parse::<FamilySpec>().unwrap(), FamilySpec::Cyclic(4));
        assert_eq!(
            "dihedral:8".parse::<FamilySpec>().unwrap(),
            FamilySpec::Dihedral(8)
        );
        assert_eq!(
            "product:cyclic:2,cyclic:4".parse::<FamilySpec>().unwrap(),
            FamilySpec::DirectProduct(vec![FamilySpec::Cyclic(2), FamilySpec::Cyclic(4)])
        );
        assert!("cyclic".parse::<FamilySpec>().is_err());
        assert!("torus:3".parse::<FamilySpec>().is_err());
        assert!("cyclic:x".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn display_names() {
        assert_eq!(FamilySpec::Dihedral(8).to_string(), "dihedral(8)");
        assert_eq!(
            FamilySpec::DirectProduct(vec![FamilySpec::Cyclic(2), FamilySpec::Cyclic(4)]).to_string(),
            "product(cyclic(2), cyclic(4))"
        );
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(
            FamilySpec::Dihedral(7).build(),
            Err(GroupError::BadParameters(_))
        ));
        assert!(matches!(
            FamilySpec::Dihedral(0).build(),
            Err(GroupError::BadParameters(_))
        ));
        assert!(matches!(
            FamilySpec::GeneralizedQuaternion(4).build(),
            Err(GroupError::BadParameters(_))
        ));
        assert!(matches!(
            FamilySpec::Cyclic(0).build(),
            Err(GroupError::BadParameters(_))
        ));
        assert_eq!(
            FamilySpec::Symmetric(5).build(),
            Err(GroupError::OrderOverflow { order: 120, max: 24 })
        );
        assert!(matches!(
            FamilySpec::ElementaryAbelian2(80).build(),
            Err(GroupError::OrderOverflow { .. })
        ));
    }

    #[test]
    fn orders() {
        assert_eq!(FamilySpec::Symmetric(4).build().unwrap().order(), 24);
        assert_eq!(FamilySpec::ElementaryAbelian2(0).build().unwrap().order(), 1);
        assert_eq!(FamilySpec::GeneralizedQuaternion(12).build().unwrap().order(), 12);
        assert_eq!(FamilySpec::Dihedral(2).build().unwrap().order(), 2);
    }

    #[test]
    fn permutation_errors() {
        assert_eq!(
            from_permutations(3, &[vec![0, 0, 1]], 24),
            Err(GroupError::NotAPermutation { index: 0, degree: 3 })
        );
        assert_eq!(
            from_permutations(3, &[vec![0, 1]], 24),
            Err(GroupError::NotAPermutation { index: 0, degree: 3 })
        );
        assert!(matches!(
            from_permutations(5, &[vec![1, 2, 3, 4, 0], vec![1, 0, 2, 3, 4]], 24),
            Err(GroupError::OrderOverflow { max: 24, .. })
        ));
    }
}
