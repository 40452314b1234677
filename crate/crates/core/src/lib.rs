//! Lattices, cones, flops and sections for line bundles on
//! K3^[2]-type hyperkähler fourfolds, computed exactly.
//!
//! The crate works in two settings:
//!
//! * the formal lattice `Λ_K3 ⊕ Zδ` with `q(δ) = -2(n-1)`, where a class is
//!   written `aλ + bδ` for a primitive `λ` with `q(λ) = 2d₀` ([`lattice`]);
//! * the rank-two Picard lattice of `X = Hilb²(S)` for a K3 surface `S` of
//!   degree two, in the bases `(H, δ)` and `(H, L)` with `L = H - δ`, together
//!   with its Mukai flop `X'` ([`cones`], [`flop`], [`baselocus`]).
//!
//! Section counts come from [`riemann_roch`], and [`sections`] carries the
//! exact linear algebra for the multiplication map
//! `H⁰(L) ⊗ H⁰(H) → H⁰(H + L)` modelled on `P² × P²`.
//!
//! Every integer is arbitrary precision and every rational is exact.

pub mod baselocus;
pub mod citations;
pub mod cones;
pub mod error;
pub mod flop;
pub mod lattice;
pub mod riemann_roch;
pub mod sections;

pub use error::{Error, Result};
pub use lattice::{GeneralClass, GramLattice, HLClass, LambdaTag, Model};
