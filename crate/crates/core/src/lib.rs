//! Cyclic subgroup census for finite groups given by Cayley tables.
//!
//! The crate builds or ingests finite groups, lists their cyclic subgroups,
//! counts them per divisor of the group order, and enumerates every group
//! of small order up to isomorphism so that statements about the number of
//! cyclic subgroups can be checked exhaustively.
//!
//! ```
//! use cyclic_census::{census, FamilySpec};
//!
//! let d8 = FamilySpec::Dihedral(8).build().unwrap();
//! let c = census(&d8);
//! assert_eq!(c.counts, vec![1, 5, 1, 0]);
//! assert_eq!(c.deficiency, 1);
//! ```

pub mod census;
pub mod classify;
pub mod element_set;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod group;
pub mod io;
pub mod iso;

pub use census::{
    aut_order_cyclic, census, check_star_identity, check_totient_identity, cyclic_subgroups, euler_phi,
    totient_preimage, CyclicCensus, CyclicSubgroup,
};
pub use classify::{
    deficiency_spectrum, is_elementary_abelian_2, is_p_group, satisfies_star, theorem1_holds,
    theorem2_verdict, ClassificationVerdict, PGroup,
};
pub use element_set::ElementSet;
pub use enumerate::{count_groups, enumerate_groups, universe, EnumerationConfig, IsoClassRecord};
pub use error::{GroupError, Result};
pub use families::{from_permutations, recognize, FamilySpec};
pub use group::{Fingerprint, GroupTable, DEFAULT_MAX_ORDER, HARD_MAX_ORDER};
pub use iso::{find_isomorphism, is_isomorphic};
