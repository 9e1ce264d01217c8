mod common;

use common::{canonical_code, classes, classes_where};
use mlt_core::generate_named;

#[test]
fn class_counts_match_known_values() {
    let counts: Vec<usize> = (1..=7).map(|m| classes(m).len()).collect();
    assert_eq!(counts, vec![1, 2, 4, 11, 34, 156, 1044]);
}

#[test]
fn triangle_free_counts() {
    let counts: Vec<usize> = (1..=8).map(|m| classes_where(m, &|g| !g.has_triangle()).len()).collect();
    assert_eq!(counts, vec![1, 2, 3, 7, 14, 38, 107, 410]);
}

#[test]
fn codes_detect_isomorphism() {
    let c6 = generate_named("cycle", &[6]).unwrap();
    let relabeled = mlt_core::Graph::new(6, [(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0)]).unwrap();
    assert_eq!(canonical_code(&c6), canonical_code(&relabeled));
    let k33 = generate_named("complete_bipartite", &[3, 3]).unwrap();
    let prism = mlt_core::Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
    assert_ne!(canonical_code(&k33), canonical_code(&prism));
}
