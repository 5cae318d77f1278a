//! Rational distance sets: points with coordinates in `Q(sqrt k)`,
//! verification, normalization to the anchors `(0,0)` and `(1,0)`,
//! inversion, general-position predicates and a brute-force grid search.

mod point;
mod position;
mod search;
mod set;

pub use point::{common_k, dist2, PlanePoint};
pub use position::{collinear, concyclic, select_general_position, GeneralPosition};
pub use search::{grid_search_rational_sets, GridSearch};
pub use set::{
    detect_k, invert_points, invert_set, is_rational_set, normalize_set, RationalDistanceSet,
    SimilarityTransform, Verdict,
};
