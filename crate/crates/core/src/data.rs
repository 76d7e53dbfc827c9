//! Bundled data: default Betti tables for the stratum links that have no
//! closed form here, and presentation files for the known ring structures.

use crate::algebra::GradedPresentation;
use crate::strata::BettiTable;

const BETTI_JSON: &str = include_str!("../data/betti.json");

const PRESENTATIONS: &[(&str, &str)] = &[
    (
        "loop-homology-s3",
        include_str!("../data/presentations/loop_homology_s3.json"),
    ),
    (
        "rfh-ring-s-star-s3",
        include_str!("../data/presentations/rfh_ring_s_star_s3.json"),
    ),
    (
        "a2-surface-sh",
        include_str!("../data/presentations/a2_surface_sh.json"),
    ),
    (
        "a3-surface-sh",
        include_str!("../data/presentations/a3_surface_sh.json"),
    ),
    (
        "a5-surface-sh",
        include_str!("../data/presentations/a5_surface_sh.json"),
    ),
];

/// The bundled default Betti table.
pub fn bundled_betti_table() -> BettiTable {
    BettiTable::from_json_str(BETTI_JSON).expect("bundled betti.json is valid")
}

/// Names of the bundled presentation files.
pub fn bundled_presentation_names() -> Vec<&'static str> {
    PRESENTATIONS.iter().map(|(name, _)| *name).collect()
}

/// Loads a bundled presentation by name.
pub fn bundled_presentation(name: &str) -> Option<GradedPresentation> {
    PRESENTATIONS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, json)| {
            GradedPresentation::from_json_str(json).expect("bundled presentation is valid")
        })
}
