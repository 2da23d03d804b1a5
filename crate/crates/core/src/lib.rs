//! Exact combinatorics of line and pseudoline arrangements in the real
//! projective plane: multiplicity and face profiles, wiring diagrams and their
//! cell complexes, rational line arrangements, the classical linear
//! inequalities on `t_i`, lower bounds on the number of regions, and the set of
//! achievable region counts.

pub mod bounds;
pub mod cli;
pub mod enumerator;
pub mod exact;
pub mod geometry;
pub mod inequalities;
pub mod io;
pub mod profiles;
pub mod spectrum;
pub mod wiring;
