//! Invariants of (1,1)-knots in lens spaces and of their strongly-cyclic
//! branched coverings.
//!
//! A (1,1)-knot is specified by a word in the three Dehn twist generators of
//! the pure mapping class group of the twice-punctured torus. From that word
//! the library computes the ambient lens space, a one-relator presentation
//! of the knot group, the homology of the complement, the set of n-fold
//! strongly-cyclic branched coverings, and for each covering the cyclic
//! presentation of its fundamental group together with the associated
//! polynomial and first homology.
//!
//! The pipeline:
//! 1. act with the twist word on the beta loop ([`mcg::apply_mcg`]);
//! 2. erase beta to get the knot-group relator ([`knot::analyze`]);
//! 3. enumerate covering monodromies ([`covering::covering_monodromies`]);
//! 4. rewrite the relator over the covering generators and read off the
//!    cyclic word ([`covering::cyclic_word`]);
//! 5. take abelian invariants via Smith normal form
//!    ([`cyclicpres::CyclicPresentation::abelianization`]).

pub mod catalog;
pub mod cli;
pub mod covering;
pub mod cyclicpres;
pub mod intlinalg;
pub mod knot;
pub mod mcg;
pub mod words;

pub use covering::{covering_monodromies, cyclic_word, Monodromy};
pub use cyclicpres::{CyclicPresentation, IntPoly};
pub use intlinalg::AbelianGroup;
pub use knot::{analyze, complement_homology, knot_group, OneOneKnot};
pub use mcg::MCGWord;
pub use words::{Pi1Word, PiGen, Word};
