//! Exact truncated multivariate power series over the rationals, with
//! q-series product expansions, Hessenberg-determinant coefficient
//! extraction, visible-point lattice identities, and the binary-weight
//! partition identity — each identity checkable by at least two
//! independent routes.
//!
//! All arithmetic is in the quotient ring Q[x_1..x_n]/(x_i^{c_i+1}) for
//! per-variable caps c_i, so every comparison is exact.

pub mod binpart;
pub mod detkit;
pub mod oracle;
pub mod qseries;
pub mod report;
pub mod series;
pub mod vpv;
