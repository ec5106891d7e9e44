//! Finitely presented group computations: free-group words, coset
//! enumeration, subgroup presentations, abelian invariants, permutation
//! quotients, and word-problem helpers.

pub mod abelian;
pub mod coset;
pub mod kb;
pub mod perm;
pub mod presentation;
pub mod rs;
pub mod snf;
pub mod tietze;
pub mod word;
pub mod wp;

pub use abelian::{abelian_invariants, AbelianInvariants, AbelianizationMap};
pub use perm::{FiniteGroup, Permutation};
pub use presentation::{Presentation, PresentationError};
pub use snf::{smith_normal_form, IntMatrix};
pub use word::{Alphabet, GenMap, Letter, Word, WordError};
