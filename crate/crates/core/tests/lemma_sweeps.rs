mod support;

use support::*;

#[test]
fn no_line_hypersurfaces_obey_multiplicity_bounds() {
    let t = no_line_lemma_sweep(21, 200);
    assert!(t.clean(200), "{t}");
}

#[test]
fn factory_slices_obey_cone_lemma() {
    let t = slice_lemma_sweep(22, 60);
    assert!(t.clean(60), "{t}");
}

#[test]
fn non_slice_curves_have_large_ratio() {
    let t = non_slice_curve_sweep(23, 100);
    assert!(t.clean(100), "{t}");
}
