//! Torsion and homology tools for deciding Heegaard Floer L-space gluings of
//! rational homology solid tori.

pub mod cli;
pub mod families;
pub mod foxcalc;
pub mod groupring;
pub mod homology;
pub mod poly;
pub mod slopes;
pub mod torsion;
