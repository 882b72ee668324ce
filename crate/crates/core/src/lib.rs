#![cfg_attr(not(test), no_std)]
//! Computational workbench for finite semigroups with a zero element.
//!
//! Everything is driven by an explicit multiplication table. Starting from a
//! finite 0-left cancellative semigroup `S` the crate builds:
//!
//! - the regular representation of `S` by partial bijections of `S \ {0}`
//!   ([`hull::regular_rep`]),
//! - the inverse hull generated by it ([`hull::generate_hull`]) together with
//!   its semilattice of constructible sets,
//! - the space of strings (hereditary directed subsets) and the induced
//!   actions on it ([`strings`]),
//! - the character spectrum of the constructible-set semilattice, with
//!   filters, ultrafilters, tight and relatively tight characters, and the
//!   census of ultracharacters ([`spectrum`]).
//!
//! Constructors for semigroups coming from languages, Markov subshift
//! truncations, monoids with an adjoined zero, and symbolic zero-free products
//! live in [`constructors`]. Brute-force cross-checks used by tests and the
//! `--oracle` command line switch live in [`oracle`].
//!
//! The crate is `no_std` (with `alloc`); all values are immutable after
//! construction and all operations are pure functions.
//!
//! ```
//! use ihull_core::{fixtures, hull, spectrum, strings};
//!
//! // {0, 1, a, aa} with a³ = 0
//! let sg = fixtures::fixture_a();
//! assert!(sg.property_flags().zero_left_cancellative);
//!
//! // the inverse hull and its constructible sets
//! let constructible = hull::constructible_sets(&sg, 100_000).unwrap();
//! assert_eq!(constructible.len(), 7);
//!
//! // three strings, three ultracharacters, all of them open
//! assert_eq!(strings::all_strings(&sg).len(), 3);
//! let census = spectrum::ultra_census(&sg, 100_000).unwrap();
//! assert_eq!(census.open_ultras.len(), 3);
//! assert!(census.nonopen_ultras.is_empty());
//! ```

extern crate alloc;

pub mod constructors;
pub mod fixtures;
pub mod hull;
pub mod oracle;
pub mod semigroup;
pub mod spectrum;
pub mod strings;

pub use hull::{Gen, Hull, HullError, NormalForm, PartialBijection};
pub use semigroup::{
    Alignment, ElementClass, ElementId, PropertyFlags, SOrOne, Semigroup, SemigroupError,
};
pub use spectrum::{Census, Character, Filter, Semilattice, SetRepresentation, SpectrumError};
pub use strings::{StringSet, StringsError};
