use std::time::Instant;

fn main() {
    let groups: Vec<(&str, fn() -> Vec<riordan_gamma::verify::Check>)> = vec![
        ("golden", riordan_gamma::verify::golden_matrix_checks),
        ("three-method", riordan_gamma::verify::three_method_checks),
        ("round-trip", riordan_gamma::verify::round_trip_checks),
        ("closed-form", riordan_gamma::verify::closed_form_checks),
        ("jacobi", riordan_gamma::verify::jacobi_stream_checks),
        ("transform", riordan_gamma::verify::transform_identity_checks),
        ("integrality", riordan_gamma::verify::integrality_checks),
    ];
    for (name, f) in groups {
        let t0 = Instant::now();
        let checks = f();
        let fails = checks.iter().filter(|c| !c.passed).count();
        println!("{name:14} {:>8.2?}  ({} checks, {} failed)", t0.elapsed(), checks.len(), fails);
        for c in checks.iter().filter(|c| !c.passed) {
            println!("    FAIL {}: {}", c.name, c.detail);
        }
    }
}
