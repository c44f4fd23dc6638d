//! Exact-arithmetic laboratory for representation stability: FI-modules,
//! symmetric-group representation theory, the central-stability / bar /
//! splitting / Koszul complexes, twisted pure-braid-group homology with its
//! symmetric-group action, and evaluators for the associated quantitative
//! vanishing bounds.
//!
//! Everything is computed over the rationals (optionally a prime field) with
//! no floating point; homology dimensions are exact.

pub mod bounds;
pub mod braid;
pub mod exactlin;
pub mod homalg;
pub mod figmod;
pub mod grouphom;
pub mod symgrp;
