mod common;

use common::PROPERTIES;

fn check(name: &str) {
    let (_, f) = PROPERTIES.iter().find(|(n, _)| *n == name).expect("known property");
    if let Err(e) = f() {
        panic!("{name}: {e}");
    }
}

#[test]
fn crt_round_trip_and_homomorphism() {
    check("crt round trip and homomorphism");
}

#[test]
fn gray_additivity_and_isometry() {
    check("gray additivity and isometry");
}

#[test]
fn gray_commutes_with_duality() {
    check("gray image of the dual is the dual of the gray image");
}

#[test]
fn lee_distance_is_min_component_distance() {
    check("lee distance equals min component distance");
}

#[test]
fn macwilliams_matches_brute_force() {
    check("macwilliams equals brute-force dual distribution");
}

#[test]
fn minimum_distance_matches_brute_force() {
    check("minimum distance equals brute force");
}

#[test]
fn lcd_oracles_agree() {
    check("lcd oracles agree");
}

#[test]
fn cyclic_lcd_verdict_matches_hull() {
    check("cyclic lcd verdict agrees with the hull");
}

#[test]
#[ignore = "fails at repeated-root lengths; acceptance criterion 10 reports it"]
fn cyclic_self_reciprocal_iff_lcd() {
    check("cyclic self-reciprocal iff lcd");
}

#[test]
fn cyclic_self_reciprocal_iff_lcd_coprime_lengths() {
    check("cyclic self-reciprocal iff lcd, gcd(n, q) = 1");
}

#[test]
fn no_self_dual_cyclic_code_over_r() {
    check("no self-dual cyclic code over R");
}
