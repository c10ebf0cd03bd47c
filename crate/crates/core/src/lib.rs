//! Crystal combinatorics of type `A_n` and the character calculus of
//! Khovanov–Lauda–Rouquier (KLR) algebras.
//!
//! The crate is organised bottom-up:
//!
//! * [`cartan`]: weights, roots and the Cartan matrix of type `A_n`.
//! * [`tableaux`]: partitions, semistandard tableaux, readings, the map
//!   `Ψ_λ` from tableaux to tuples of Young diagrams, and counting.
//! * [`crystal`]: the abstract crystal interface, the signature rule,
//!   tableau crystals `B(λ)`, crystal graphs and isomorphism testing.
//! * [`binfinity`]: `B(∞)` realised by marginally large tableaux.
//! * [`qshuffle`]: Laurent polynomials, q-characters and (quantum) shuffle
//!   products, Serre relations and the restriction functors `e_i`.
//! * [`segments`]: segment modules `S_(a;ℓ)`, the lists `S_μ[k]`, `Ŝ_μ[k]`
//!   and `S_T`, and the certificates tying a tableau `T` to the head of
//!   `ind S_T`.
//! * [`verify`]: sweeps that run the certificates over whole families.

pub mod binfinity;
pub mod cartan;
pub mod crystal;
pub mod error;
pub mod fixtures;
pub mod qshuffle;
pub mod segments;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
