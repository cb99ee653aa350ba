//! Iteration of `Ψ = ∧ - 1` on class functions, its reduced coordinate
//! forms, fixed-point classification and basin scans.

pub mod basin;
pub mod fixed_point;
pub mod iterate;
pub mod maps;

pub use basin::{basin_scan, BasinCell, BasinConfig, BasinGrid, BasinLabel, BasinSlice};
pub use fixed_point::{classify_fixed_point, polar_decomposition, Classification, FixedPointReport};
pub use iterate::{exact_dyadic_trajectory, iterate, iterate_with, psi, ExactStep, IterationTrace, Psi, Status};
pub use maps::{jacobian_phi2d, phi2d, seven_class_map, seven_class_map_derivative, Phi2d, RealMap, SevenClassMap};
