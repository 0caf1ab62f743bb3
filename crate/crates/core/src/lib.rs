//! Exact computations in Weyl groups of finite-dimensional simple Lie
//! algebras: minuscule and strong minuscule elements, parametrizations of
//! maximal parabolic quotients, Bruhat intervals, and dimensions of Demazure
//! modules with minuscule highest weight.
//!
//! Everything is integer arithmetic. Nodes are 0-based in the API and
//! 1-based in text (`"3,2,1"` is the word `s_3 s_2 s_1`).
//!
//! ```
//! use strongmin::{minuscule, weyl::{parse_word, WeylGroup}};
//!
//! let g = WeylGroup::new("B3".parse().unwrap());
//! let word = parse_word("3,2,1").unwrap();
//! let class = minuscule::classify_word(&g, &word).unwrap();
//! assert_eq!(class.strong_node(), Some(0));
//! ```

pub mod bruhat;
pub mod cartan;
pub mod cli;
pub mod error;
pub mod minuscule;
pub mod reference;
pub mod products;
pub mod weyl;

pub use cartan::{CartanDatum, Family, TypeLabel, Weight};
pub use error::{Error, Result};
pub use minuscule::Classification;
pub use weyl::{ParabolicContext, ReducedWord, WeylElement, WeylGroup};
