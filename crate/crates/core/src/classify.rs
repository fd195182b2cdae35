//! Predicates relating the number of cyclic subgroups to the group order.
//!
//! A group has exactly `|G|` cyclic subgroups iff it is an elementary
//! abelian 2-group, and exactly `|G| - 1` iff it is one of Z3, Z4, S3, D8.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::census::{census, CyclicCensus};
use crate::enumerate::IsoClassRecord;
use crate::error::{GroupError, Result};
use crate::families::FamilySpec;
use crate::group::GroupTable;
use crate::iso::is_isomorphic;

/// Every element squares to the identity.
pub fn is_elementary_abelian_2(g: &GroupTable) -> bool {
    g.elements().all(|x| g.product(x, x) == 0)
}

/// Checks that "elementary abelian 2-group" and "deficiency 0" agree on `g`.
/// A `false` return means the census or the predicate is wrong.
pub fn theorem1_holds(g: &GroupTable) -> bool {
    is_elementary_abelian_2(g) == (census(g).deficiency == 0)
}

/// `g` has exactly `|G| - 1` cyclic subgroups.
pub fn satisfies_star(g: &GroupTable) -> bool {
    census(g).deficiency == 1
}

/// Whether the group order is a prime power.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PGroup {
    /// Order 1; not counted as a p-group for any particular p.
    Trivial,
    /// Order `p^k` with `k >= 1`.
    Prime(u64),
    /// Order divisible by at least two primes.
    No,
}

impl PGroup {
    pub fn prime(self) -> Option<u64> {
        match self {
            PGroup::Prime(p) => Some(p),
            _ => None,
        }
    }
}

pub fn is_p_group(g: &GroupTable) -> PGroup {
    prime_power_base(g.order() as u64)
}

pub(crate) fn prime_power_base(n: u64) -> PGroup {
    if n == 1 {
        return PGroup::Trivial;
    }
    let p = (2..=n).find(|p| n.is_multiple_of(*p)).unwrap();
    let mut rest = n;
    while rest.is_multiple_of(p) {
        rest /= p;
    }
    if rest == 1 {
        PGroup::Prime(p)
    } else {
        PGroup::No
    }
}

/// The four groups with `|C(G)| = |G| - 1`.
pub fn star_groups() -> [FamilySpec; 4] {
    [
        FamilySpec::Cyclic(3),
        FamilySpec::Cyclic(4),
        FamilySpec::Symmetric(3),
        FamilySpec::Dihedral(8),
    ]
}

fn star_references() -> &'static [(FamilySpec, GroupTable)] {
    static REFS: OnceLock<Vec<(FamilySpec, GroupTable)>> = OnceLock::new();
    REFS.get_or_init(|| {
        star_groups()
            .into_iter()
            .map(|spec| {
                let table = spec.build().expect("star groups are small");
                (spec, table)
            })
            .collect()
    })
}

/// Which of the four star groups `g` is isomorphic to, if any.
pub fn match_star_group(g: &GroupTable) -> Option<FamilySpec> {
    star_references()
        .iter()
        .find(|(_, t)| t.order() == g.order() && is_isomorphic(g, t))
        .map(|(spec, _)| spec.clone())
}

/// Outcome of all classification predicates for one group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationVerdict {
    pub order: usize,
    pub total_cyclic: usize,
    pub deficiency: usize,
    #[serde(rename = "elem_abelian_2")]
    pub is_elem_abelian_2: bool,
    #[serde(rename = "star")]
    pub satisfies_star: bool,
    #[serde(with = "spec_name")]
    pub star_identity: Option<FamilySpec>,
    /// The prime `p` when the order is `p^k` with `k >= 1`.
    #[serde(rename = "p_group")]
    pub p_group: Option<u64>,
}

/// Classifies `g`. The star identity is looked up by isomorphism against
/// freshly built reference tables, and any disagreement between the census
/// and that lookup is reported as an error.
pub fn theorem2_verdict(g: &GroupTable) -> Result<ClassificationVerdict> {
    verdict_from_census(g, &census(g))
}

pub(crate) fn verdict_from_census(g: &GroupTable, c: &CyclicCensus) -> Result<ClassificationVerdict> {
    let satisfies_star = c.deficiency == 1;
    let star_identity = match_star_group(g);
    match (&star_identity, satisfies_star) {
        (None, true) => return Err(GroupError::StarWithoutIdentity { order: g.order() }),
        (Some(spec), false) => {
            return Err(GroupError::IdentityWithoutStar {
                order: g.order(),
                family: spec.to_string(),
            })
        }
        _ => {}
    }
    Ok(ClassificationVerdict {
        order: g.order(),
        total_cyclic: c.total,
        deficiency: c.deficiency,
        is_elem_abelian_2: is_elementary_abelian_2(g),
        satisfies_star,
        star_identity,
        p_group: is_p_group(g).prime(),
    })
}

/// Records of `universe` with deficiency `r`, sorted by order then fingerprint.
pub fn deficiency_spectrum(universe: &[IsoClassRecord], r: usize) -> Vec<&IsoClassRecord> {
    let mut out: Vec<&IsoClassRecord> = universe.iter().filter(|rec| rec.census.deficiency == r).collect();
    out.sort_by(|a, b| (a.order, &a.fingerprint).cmp(&(b.order, &b.fingerprint)));
    out
}

mod spec_name {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::families::FamilySpec;

    pub fn serialize<S: Serializer>(spec: &Option<FamilySpec>, s: S) -> Result<S::Ok, S::Error> {
        match spec {
            Some(spec) => s.serialize_some(&spec.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<FamilySpec>, D::Error> {
        let name: Option<String> = Option::deserialize(d)?;
        name.map(|n| {
            parse_display(&n).ok_or_else(|| serde::de::Error::custom(format!("unknown family `{n}`")))
        })
        .transpose()
    }

    // Accepts the `name(param)` form produced by `Display`.
    fn parse_display(name: &str) -> Option<FamilySpec> {
        let (family, rest) = name.split_once('(')?;
        let param = rest.strip_suffix(')')?;
        format!("{family}:{param}").parse().ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power_base(1), PGroup::Trivial);
        assert_eq!(prime_power_base(8), PGroup::Prime(2));
        assert_eq!(prime_power_base(9), PGroup::Prime(3));
        assert_eq!(prime_power_base(6), PGroup::No);
        assert_eq!(prime_power_base(11), PGroup::Prime(11));
        assert_eq!(PGroup::No.prime(), None);
    }

    #[test]
    fn trivial_group_conventions() {
        let g = GroupTable::trivial();
        assert!(is_elementary_abelian_2(&g));
        assert!(theorem1_holds(&g));
        assert_eq!(is_p_group(&g), PGroup::Trivial);
        let v = theorem2_verdict(&g).unwrap();
        assert_eq!((v.total_cyclic, v.deficiency), (1, 0));
        assert!(v.is_elem_abelian_2);
        assert_eq!(v.p_group, None);
    }

    #[test]
    fn verdict_json_fields() {
        let g = FamilySpec::Dihedral(8).build().unwrap();
        let v = theorem2_verdict(&g).unwrap();
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(
            json,
            r#"{"order":8,"total_cyclic":7,"deficiency":1,"elem_abelian_2":false,"star":true,"star_identity":"dihedral(8)","p_group":2}"#
        );
        let back: ClassificationVerdict = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
    }
}
