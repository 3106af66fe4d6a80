//! Alignment toolkit for recorded music performances.
//!
//! The pipeline: decode audio ([`audio`]), compute time-stamped feature
//! sequences ([`features`]), align two recordings with dynamic time warping
//! ([`dtw`]), push beat markers through the warp path ([`annotation`]), and
//! quantify both annotator precision ([`stats`]) and alignment accuracy
//! ([`eval`]). [`sim`] generates synthetic recordings and annotations with
//! known ground truth so every stage can be tested without a record shelf.

pub mod annotation;
pub mod audio;
pub mod dtw;
pub mod eval;
pub mod features;
pub mod sim;
pub mod stats;
