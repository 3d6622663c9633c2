use circlet::complex::TwoComplex;
use circlet::generators;
use circlet::{parse_complex, serialize_complex};

fn bundled_file(name: &str) -> String {
    let path = format!("{}/../../data/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

#[test]
fn data_files_match_generators() {
    let cases: [(&str, TwoComplex); 5] = [
        ("d4.2c", generators::simplex_skeleton(4).unwrap()),
        ("d5.2c", generators::simplex_skeleton(5).unwrap()),
        ("figure2.2c", generators::figure2_complex()),
        ("pinched-sphere.2c", generators::pinched_sphere()),
        ("two-tetra.2c", generators::two_tetra_shared_edge()),
    ];
    for (name, k) in cases {
        let text = bundled_file(name);
        assert_eq!(parse_complex(&text).unwrap(), k, "{name}");
        assert_eq!(serialize_complex(&k), text, "{name}");
    }
}
