//! Finite AG-groups, Bol* quasigroups and right Bol quasigroups as involutive
//! twists of abelian groups, groups and right Bol loops.
//!
//! Every structure is carried by a [`CayleyTable`] over the elements
//! `0..n`. The building blocks are:
//!
//! - [`tables`]: table I/O, identity scans with witnesses, isomorphism search.
//! - [`abelian`]: abelian groups in invariant-factor form and their
//!   automorphisms as endomorphism matrices.
//! - [`permgroups`]: permutation groups with full element enumeration,
//!   involution classes, centralizers and index-two structure recognition.
//! - [`catalog`]: every group of order at most 20 as a verified table.
//! - [`twist`]: the twist `a * b = alpha(a) b` and its inverse construction.
//! - [`mulgroup`]: multiplication groups and inner mapping groups.
//! - [`enumerate`]: counting and listing up to isomorphism, with brute-force
//!   oracles at tiny orders.
//!
//! ```
//! use agq::{abelian::AbelianInvariants, enumerate};
//!
//! let record = enumerate::count_ag(12).unwrap();
//! assert_eq!((record.associative, record.nonassociative), (2, 6));
//!
//! let chains = agq::abelian::abelian_groups_of_order(12);
//! assert_eq!(chains, vec![AbelianInvariants::new(vec![12]).unwrap(),
//!                         AbelianInvariants::new(vec![2, 6]).unwrap()]);
//! ```

pub mod abelian;
pub mod catalog;
pub mod cli;
pub mod enumerate;
mod error;
pub mod mulgroup;
pub mod permgroups;
pub mod tables;
pub mod twist;

pub use error::{Error, Result};
pub use permgroups::{PermGroup, Permutation};
pub use tables::CayleyTable;

pub use twist::{BaseKind, TwistSpec};
