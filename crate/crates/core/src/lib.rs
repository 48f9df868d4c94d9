//! Amoebas of complex algebraic plane curves and their polyhedral models.
//!
//! Given a Laurent polynomial f, this crate computes:
//!
//! - the affine amoeba (Log image of the zero set), its complement
//!   components and their lattice orders, and the solid/optimal
//!   classification ([`amoeba`]);
//! - the compactified amoeba and the weighted compactified amoebas of the
//!   Hadamard powers f^[r], all inside the Newton polytope ([`moment`]);
//! - the amoeba-shaped polyhedral complex, both as the Hausdorff limit of
//!   the weighted compactified amoebas and by the direct edge-midpoint
//!   patchwork over the dual triangulation, together with complement and
//!   π₀ analysis ([`polyhedral`]);
//! - the supporting machinery: tropical curves dual to regular subdivisions
//!   ([`tropical`], [`subdivision`]), exact lattice geometry ([`lattice`]),
//!   and complex root solving that works in log scale ([`roots`],
//!   [`numerics`]).
//!
//! Data-parallel loops run on rayon with the default `parallel` feature and
//! degrade to sequential iteration without it; outputs are identical either
//! way.

pub mod amoeba;
pub mod error;
mod exec;
pub mod fiber;
pub mod lattice;
pub mod moment;
pub mod numerics;
pub mod parse;
pub mod poly;
pub mod polyhedral;
pub mod raster;
pub mod roots;
pub mod subdivision;
pub mod tropical;

pub use amoeba::{
    amoeba_points, auto_window, classify, membership, order_of_point, AmoebaRaster,
    ClassifyOptions, ClassifyReport, Verdict,
};
pub use error::{Error, Result};
pub use fiber::sample_hypersurface;
pub use lattice::{convex_hull_2d, Cell, LatticePolytope};
pub use moment::{
    compactified_amoeba, moment_map, wca, weighted_moment_map, Ambient, PointCloud,
    SampleOptions,
};
pub use numerics::{hausdorff_distance, maximize_margin, softmax_weights, MarginStatus};
pub use parse::parse_polynomial;
pub use poly::{LaurentPolynomial, LogPolynomial};
pub use polyhedral::{
    check_hypotheses, complement_analysis, default_schedule, direct_complex,
    limit_complex_estimate, pi0_compare, ComplexSet, HypothesisReport, Pi0Options,
    PolyhedralComplex,
};
pub use raster::{Raster, Window};
pub use roots::{roots, RootSet};
pub use subdivision::{
    is_concave_on_support, regular_subdivision, vertex_coefficient_bound, RegularSubdivision,
};
pub use tropical::{tropical_curve_2d, tropical_orders, TropicalCurve, TropicalPolynomial};
