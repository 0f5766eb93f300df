//! Exact-arithmetic feasibility analysis, enumeration and search for
//! partial difference sets (PDSs) in finite nonabelian groups.
//!
//! A regular (v, k, λ, μ)-PDS is an inverse-closed, identity-free subset D
//! of a group G of order v whose difference multiset covers every element
//! of D exactly λ times and every other nonidentity element exactly μ
//! times; its Cayley graph is a strongly regular graph. The crate decides
//! feasibility questions with character theory over exact cyclotomic
//! arithmetic, enumerates admissible conjugacy-class intersection vectors,
//! searches for explicit sets, and constructs verified infinite families
//! from Steiner 2-designs over finite fields.

pub mod arith;
pub mod cci;
pub mod chartab;
pub mod cyclotomic;
pub mod designs;
pub mod group;
pub mod search;
pub mod sieves;
pub mod srg;


pub use cyclotomic::Cyclotomic;
pub use group::{ConjugacyData, FiniteGroup, GroupSpec, NormalStructure};
pub use srg::{Eigendata, SrgParams};
pub use chartab::CharacterTable;
