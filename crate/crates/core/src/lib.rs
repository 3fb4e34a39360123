//! Exact Hurwitz theory for the wreath products G(m,1,n) = (Z/m) wr S_n.
//!
//! A degree-n, m-colored Hurwitz number counts tuples of reflections of
//! G(m,1,n) with prescribed class profile whose product lands in a given
//! conjugacy class, weighted by 1/|G|.  This crate computes these numbers
//! exactly (big rationals, cyclotomic integers where roots of unity enter)
//! along three independent routes and checks the routes against each other:
//!
//! 1. direct enumeration over the group, plus a class-coordinate dynamic
//!    program driven by class-product multiplicity tables ([`enumeration`]);
//! 2. evolution of a generating function by cut-and-join differential
//!    operators in colored power-sum variables ([`cutjoin`]);
//! 3. a closed form as a sum over colored partitions of products of Schur
//!    functions, using that the cut-and-join family diagonalizes on a
//!    Schur basis after a discrete Fourier change of variables ([`schur`]).
//!
//! Downstream structure is covered too: the KP hierarchy equations for the
//! one-family restrictions of the generating function ([`kp`]) and the
//! reduction of the colored theory to classical single-partition Hurwitz
//! numbers ([`elsv`]).
//!
//! See the crate `examples/` directory for runnable entry points; the
//! `wreath-hurwitz` binary wraps the same routines in a small CLI.

pub mod cli;
pub mod cutjoin;
pub mod cyclo;
pub mod elsv;
pub mod enumeration;
mod error;
pub mod kp;
pub mod matrix;
pub mod partitions;
pub mod perm;
pub mod polyring;
pub mod schur;
pub mod wreath;

pub use cyclo::{CycloNumber, Rational};
pub use error::{Error, Result};
pub use partitions::{ColoredPartition, Partition};
pub use wreath::WreathElement;
