//! The classical realizations of the associahedron, with exact coordinates.

mod cluster;
mod config;
mod minkowski;
mod secondary;

pub use cluster::{cluster_associahedron, cluster_pairs, ClusterParams, MAX_DEFAULT_N};
pub use config::{
    enumerate_config_triangulations, parabola_config, random_convex_polygon,
    triangle_with_midpoints, AffineMap2, ConfigTriangulation, PointConfig2D,
};
pub use minkowski::{
    minkowski_associahedron, minkowski_associahedron_in_order, minkowski_intervals, minkowski_sum,
    MinkowskiParams,
};
pub use secondary::{gkz_vector, gkz_vectors, secondary_polytope};
