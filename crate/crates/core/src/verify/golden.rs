//! Fixed instances with known answers.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{check_complex, names, Reports};
use crate::invariants::{highest_lyu_via_graph, LocalCohomology, LyubeznikTable};
use crate::linalg::FieldSpec;
use crate::monomial::{parse_ideal, MonomialIdeal};
use crate::simplicial::SimplicialComplex;
use crate::subset::Subset;
use crate::with_field;

/// Five vertices `x, y, z, u, v`; a Cohen-Macaulay-failing complex whose
/// table changes under localization at `z` and at `{z, u, v}`.
pub fn jumping_complex() -> SimplicialComplex {
    SimplicialComplex::from_vertex_lists(5, &[&[2, 3, 4], &[0, 3, 4], &[0, 1, 4], &[0, 1, 2]]).expect("valid facets")
}

/// Faces of [`jumping_complex`] with their expected Krull dimension and `lambda_{d,d}`.
pub fn jumping_complex_faces() -> Vec<(Subset, usize, usize)> {
    vec![(Subset::EMPTY, 3, 1), (Subset::singleton(2), 2, 2), (Subset::from_elements([2, 3, 4]), 0, 1)]
}

/// The six-vertex triangulation of the real projective plane.
pub fn rp2() -> SimplicialComplex {
    SimplicialComplex::from_vertex_lists(
        6,
        &[
            &[0, 1, 2],
            &[0, 2, 3],
            &[0, 3, 4],
            &[0, 4, 5],
            &[0, 1, 5],
            &[1, 2, 4],
            &[2, 3, 5],
            &[1, 3, 4],
            &[2, 4, 5],
            &[1, 3, 5],
        ],
    )
    .expect("valid facets")
}

/// An ideal in three variables whose radical has a trivial table.
pub fn specialized_ideal() -> MonomialIdeal {
    parse_ideal("x^2*y, x^2*z, x*y*z, x*z^2, y^3, y^2*z, y*z^2").expect("valid ideal")
}

/// A squarefree ideal specializing to [`specialized_ideal`] by a substitution
/// that is not the standard polarization; its table is not trivial.
pub fn nonstandard_specialization() -> MonomialIdeal {
    parse_ideal(
        "ring: x1, x2, x3, y1, y2, y3, z1, z2, z3; \
         x1*x2*y3, x1*x2*z3, x1*y2*z3, x1*z2*z3, y1*y2*y3, y1*y2*z3, y1*z2*z3",
    )
    .expect("valid ideal")
}

/// Nonzero entries of the table of [`nonstandard_specialization`], in any
/// characteristic.
pub const NONSTANDARD_ENTRIES: &[(usize, usize, usize)] = &[(5, 6, 1), (7, 7, 2)];

/// Runs the golden checks in each field.
pub fn check_goldens(fields: &[FieldSpec]) -> Reports {
    let mut reports = Reports::new();
    if fields.is_empty() {
        return reports;
    }

    let delta = jumping_complex();
    reports.merge(check_complex(&delta, fields));
    let r = reports.get(names::GOLDEN_JUMPING_COMPLEX);
    for (face, d, highest) in jumping_complex_faces() {
        r.instances_run += 1;
        let link = delta.link(face).and_then(|l| l.compress(face.complement(5)));
        r.expect_eq(|| format!("components at {face}"), Ok(highest), link.and_then(|l| highest_lyu_via_graph(&l)));
        for &field in fields {
            let t = crate::invariants::lyubeznik_table_at_face(&delta, face, field);
            r.expect_eq(|| format!("table at {face} over {field}"), Ok((d, highest)), t.map(|t| (t.d(), t.highest())));
        }
    }

    let r = reports.get(names::GOLDEN_SPECIALIZATION_PAIR);
    let ideal = specialized_ideal();
    let pol = ideal.polarize();
    let other = nonstandard_specialization();
    for &field in fields {
        r.instances_run += 1;
        let small = crate::invariants::lyubeznik_table_monomial(&ideal, field);
        r.expect_eq(|| format!("{ideal} over {field}"), Ok((1, true)), small.map(|t| (t.d(), t.is_trivial())));
        let standard = crate::invariants::lyubeznik_table_monomial(&pol.ideal, field);
        r.expect_eq(
            || format!("{} over {field}", pol.ideal),
            Ok((1 + pol.height_shift, true)),
            standard.map(|t| (t.d(), t.is_trivial())),
        );
        let t = crate::invariants::lyubeznik_table_monomial(&other, field);
        r.expect_eq(
            || format!("{other} over {field}"),
            Ok(NONSTANDARD_ENTRIES.to_vec()),
            t.map(|t: LyubeznikTable| t.nonzero_entries()),
        );
    }

    let r = reports.get(names::GOLDEN_RP2);
    let delta = rp2();
    for &field in fields {
        r.instances_run += 1;
        let t = with_field!(field, |f| LocalCohomology::new(f, &delta).map(|lc| lc.table()));
        let expected_trivial = field.characteristic() != 2;
        r.expect_eq(
            || format!("{delta} over {field}"),
            Ok((3, 1, expected_trivial)),
            t.map(|t| (t.d(), t.highest(), t.is_trivial())),
        );
    }
    reports
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specialization_pair_is_consistent() {
        let ideal = specialized_ideal();
        assert!(!ideal.is_squarefree());
        assert!(nonstandard_specialization().is_squarefree());
        assert_eq!(nonstandard_specialization().n(), 9);
    }

    #[test]
    fn goldens_pass_in_two_characteristics() {
        let reports = check_goldens(&[FieldSpec::RATIONALS, FieldSpec::new(2).unwrap()]).into_sorted();
        for r in &reports {
            assert!(r.passed(), "{r:?}");
        }
    }
}
