//! Shared inputs for the pipeline benchmarks.

use polyshadow::cutting::{auto_cut, CuttingSystem};
use polyshadow::group::Presentation;
use polyshadow::present::present;
use polyshadow::samples;
use polyshadow::shadow::{select_regions, SelectionPreset, ShadowedPolyhedron, SubSelection};

/// The 4-line arrangement shadow with its default cutting system and the
/// everything-internal selection: the largest input in the test corpus.
pub fn arrangement_case() -> (ShadowedPolyhedron, SubSelection, CuttingSystem) {
    let shadow = samples::fig18_shadow();
    let (selection, _) = select_regions(&shadow, &SelectionPreset::Yabc).unwrap();
    let cs = auto_cut(shadow.map(), 0).unwrap();
    (shadow, selection, cs)
}

/// The raw (unsimplified) presentation of the arrangement case.
pub fn arrangement_presentation() -> Presentation {
    let (shadow, selection, cs) = arrangement_case();
    present(&shadow, &selection, &cs).unwrap()
}
