use lyubeznik_core::invariants::{bound_b, lyubeznik_table, lyubeznik_table_at_face, lyubeznik_table_monomial};
use lyubeznik_core::monomial::{parse_ideal, parse_ideal_in};
use lyubeznik_core::verify::{golden, run_suite, CorpusConfig};
use lyubeznik_core::{FieldSpec, PolynomialRing, Subset};

fn q() -> FieldSpec {
    FieldSpec::RATIONALS
}

#[test]
fn hypersurface_table() {
    let ring = PolynomialRing::new(vec!["x".into(), "y".into()]).unwrap();
    let t = lyubeznik_table_monomial(&parse_ideal_in(&ring, "x").unwrap(), q()).unwrap();
    assert_eq!(t.d(), 1);
    assert_eq!(t.nonzero_entries(), vec![(1, 1, 1)]);
}

#[test]
fn minimalization_does_not_change_the_table() {
    let a = lyubeznik_table_monomial(&parse_ideal("ring: x, y; x*y, x").unwrap(), q()).unwrap();
    let b = lyubeznik_table_monomial(&parse_ideal("ring: x, y; x").unwrap(), q()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn jumping_complex_from_its_ideal() {
    let ideal = parse_ideal("ring: x, y, z, u, v; y*u, y*z*v, x*z*u, x*z*v").unwrap();
    let delta = ideal.stanley_reisner().unwrap();
    assert_eq!(delta, golden::jumping_complex());
    let at_z = lyubeznik_table_at_face(&delta, Subset::singleton(2), q()).unwrap();
    assert_eq!((at_z.d(), at_z.highest()), (2, 2));
    assert_eq!(lyubeznik_table(&delta, q()).unwrap().highest(), 1);
}

#[test]
fn polarization_of_a_square() {
    let pol = parse_ideal("x^2").unwrap().polarize();
    assert_eq!(pol.ideal.generators_text(), "x_1_1*x_1_2");
    assert_eq!(pol.height_shift, 1);
    assert_eq!(bound_b(&pol.ideal.stanley_reisner().unwrap(), q()).unwrap(), 1);
}

#[test]
fn suite_is_deterministic_and_green() {
    let config = CorpusConfig { seed: 99, complex_count: 12, ideal_count: 6, ..CorpusConfig::default() };
    let a = run_suite(&config);
    assert_eq!(a, run_suite(&config));
    assert!(a.iter().all(|r| r.passed()), "{a:?}");
}
