//! Exact-arithmetic toolkit for character data of finite reductive groups.
//!
//! The crate computes torus point counts and regular semisimple element
//! counts from root data and Frobenius twists, evaluates the separation
//! inequalities that control when a representation is pinned down by its
//! character values on (very) regular elements, models tame elliptic tori
//! of GL_n in a discrete-log cyclic model, and verifies the character
//! formulas against a brute-force character-table oracle on small matrix
//! groups over F_q.
//!
//! Everything is exact: integers are arbitrary precision where they can
//! grow, character values live in cyclotomic fields represented by integer
//! coordinate vectors, and no floating point is used anywhere.

pub mod dl;
pub mod finitegrp;
pub mod gln;
pub mod inequalities;
pub mod lattice;
pub mod par;
pub mod primes;
pub mod rootdata;
pub mod torus;
