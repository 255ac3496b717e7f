//! Fully reduced noncommutative Gröbner bases for the relations ideal of a
//! modular p-group algebra F_p[G], under three word orderings:
//! length-lexicographical, reverse length-lexicographical and Jennings.
//!
//! The pipeline runs group -> generator choice -> action matrices ->
//! nontips -> minimal tips -> basis. Groups come in as permutations or as
//! multiplication tables (converted through the regular action); a bundled
//! corpus of small p-groups backs the test suite and the experiment
//! harness.

pub mod corpus;
pub mod dump;
pub mod engine;
pub mod error;
pub mod experiment;
pub mod fp;
pub mod group;
pub mod jennings;
pub mod pipeline;
pub mod words;

pub use error::{Error, Result};
