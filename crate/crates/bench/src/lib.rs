//! Shared fixtures for the benchmarks.

use gtlattice_core::{build_lattice, GtLattice, Partition};

/// Shapes and ranks exercised by every benchmark group.
pub const INSTANCES: &[(&str, usize)] = &[("2,1", 3), ("3,2,1", 4), ("4,2", 4), ("3,2", 5)];

pub fn lattice(shape: &str, n: usize) -> GtLattice {
    let shape: Partition = shape.parse().expect("fixture shape");
    build_lattice(&shape, n).expect("fixture fits")
}
