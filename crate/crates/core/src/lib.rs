//! Words over the natural numbers as an ordinal notation system for ε₀.
//!
//! Words are compared by a recursive preorder ([`order`]), reduced to unique
//! normal forms ([`normal`]) and mapped order-isomorphically onto Cantor
//! normal forms ([`ordinal`], [`correspondence`]). The [`gadget`] module
//! encodes finite structures with two linear orders as words.

pub mod cli;
pub mod correspondence;
pub mod gadget;
pub mod normal;
pub mod order;
pub mod ordinal;
pub mod selftest;
pub mod word;

pub use correspondence::{o_map, word_of, word_to_multiset, OrdMultiset};
pub use normal::{normalize, NormalWord};
pub use order::compare;
pub use ordinal::Ordinal;
pub use word::{Symbol, Word};
