mod common;

use circlet::generators;
use circlet::gf2::{circlet_decomposition, is_circlet, kernel_dimension};
use common::{brute_force_is_circlet, bundled, count_even_subsets};

#[test]
fn kernel_matches_exhaustive_search() {
    let mut checked = 0;
    for (name, k) in bundled() {
        if k.face_count() > 20 {
            continue;
        }
        let dim = kernel_dimension(&k);
        assert_eq!(count_even_subsets(&k), 1 << dim, "{name}");
        assert_eq!(is_circlet(&k), brute_force_is_circlet(&k), "{name}");
        checked += 1;
    }
    assert!(checked >= 10);
}

#[test]
fn simplex_five_kernel_by_exhaustion() {
    let k = generators::simplex_skeleton(5).unwrap();
    assert_eq!(k.face_count(), 20);
    assert_eq!(count_even_subsets(&k), 1 << 10);
    assert_eq!(kernel_dimension(&k), 10);
}

#[test]
fn decomposition_parts_are_circlets_by_exhaustion() {
    for (name, k) in bundled() {
        let Ok(parts) = circlet_decomposition(&k) else {
            continue;
        };
        for p in parts.iter().filter(|p| p.len() <= 20) {
            let sub = k.subcomplex(p).unwrap();
            assert!(brute_force_is_circlet(&sub), "{name}: part {:?}", p.ids(&k));
        }
    }
}
