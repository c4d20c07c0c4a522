//! Exact computation of `dim Ext^1` between Verma modules and of
//! Kazhdan–Lusztig R-polynomials for finite Weyl groups.
//!
//! Groups are built from Cartan data ([`cartan`], [`roots`], [`group`]).
//! [`ext`] and [`rpoly`] run the descent recursions over element pairs with
//! concurrent memo tables, [`flags`] counts points of cell intersections over
//! small prime fields by brute force, and [`verify`] ties the three together.

pub mod cartan;
pub mod error;
pub mod ext;
pub mod flags;
pub mod group;
pub mod memo;
pub mod perm;
pub mod poly;
pub mod roots;
pub mod rpoly;
pub mod table;
pub mod verify;

pub use cartan::CartanDatum;
pub use error::{Error, Result};
pub use ext::{ext1_dim, ext1_table, hom_dim, ExtMemo};
pub use flags::{count_richardson, interpolate_r, FlagOverFq, PrimeField};
pub use group::{GroupElement, WeylGroup};
pub use perm::Permutation;
pub use poly::IntPolynomial;
pub use roots::RootSystem;
pub use rpoly::{r_polynomial, r_table, RMemo};
