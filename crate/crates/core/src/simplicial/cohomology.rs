use alloc::vec::Vec;

use super::SimplicialComplex;
use crate::linalg::{Field, FieldSpec, Matrix};
use crate::subset::Subset;
use crate::with_field;

/// Reduced cohomology dimensions; `dims()[k]` is `H~^{k-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedCohomology {
    dims: Vec<usize>,
}

impl ReducedCohomology {
    /// Dimensions indexed from degree -1 up to `dim Delta`; empty for the
    /// void complex.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn get(&self, degree: isize) -> usize {
        if degree < -1 {
            return 0;
        }
        self.dims.get((degree + 1) as usize).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.dims.iter().sum()
    }
}

/// Faces grouped by size; `groups[k]` holds the `(k-1)`-dimensional faces in
/// increasing bitmask order.
fn faces_by_size(delta: &SimplicialComplex) -> Vec<Vec<Subset>> {
    let mut groups: Vec<Vec<Subset>> = Vec::new();
    for face in delta.faces() {
        let k = face.len();
        if groups.len() <= k {
            groups.resize(k + 1, Vec::new());
        }
        groups[k].push(face);
    }
    groups
}

/// Coboundary maps `C^{k-1} -> C^k` of the augmented cochain complex, for
/// `k = 0, 1, ...`. The entry for a face `G` and its facet `G \ v` is
/// `(-1)^{position of v in G}`.
pub fn coboundary_matrices<F: Field>(f: &F, delta: &SimplicialComplex) -> Vec<Matrix<F::Elem>> {
    let groups = faces_by_size(delta);
    let mut maps = Vec::new();
    for k in 1..groups.len() {
        let (src, dst) = (&groups[k - 1], &groups[k]);
        let mut m = Matrix::zeros(f, dst.len(), src.len());
        for (r, g) in dst.iter().enumerate() {
            for v in g.iter() {
                let face = g.without(v);
                let c = src.binary_search(&face).expect("faces are closed under removal");
                let sign = if g.count_below(v) % 2 == 0 { f.one() } else { f.neg(&f.one()) };
                m.set(r, c, sign);
            }
        }
        maps.push(m);
    }
    maps
}

pub(crate) fn reduced_cohomology_in<F: Field>(f: &F, delta: &SimplicialComplex) -> ReducedCohomology {
    let groups = faces_by_size(delta);
    if groups.is_empty() {
        return ReducedCohomology { dims: Vec::new() };
    }
    let maps = coboundary_matrices(f, delta);
    let ranks: Vec<usize> = maps.iter().map(|m| f.rank(m)).collect();
    let dims = (0..groups.len())
        .map(|k| {
            let outgoing = ranks.get(k).copied().unwrap_or(0);
            let incoming = if k == 0 { 0 } else { ranks[k - 1] };
            groups[k].len() - outgoing - incoming
        })
        .collect();
    ReducedCohomology { dims }
}

/// Reduced simplicial cohomology with coefficients in the given field. The
/// irrelevant complex has `H~^{-1} = K`; the void complex has nothing.
pub fn reduced_cohomology_dims(delta: &SimplicialComplex, field: FieldSpec) -> ReducedCohomology {
    with_field!(field, |f| reduced_cohomology_in(&f, delta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rationals;
    use alloc::vec;

    pub(crate) fn rp2() -> SimplicialComplex {
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
        .unwrap()
    }

    #[test]
    fn small_complexes() {
        let q = FieldSpec::RATIONALS;
        let pts = SimplicialComplex::from_vertex_lists(2, &[&[0], &[1]]).unwrap();
        assert_eq!(reduced_cohomology_dims(&pts, q).dims(), &[0, 1]);
        let hollow = SimplicialComplex::from_vertex_lists(3, &[&[0, 1], &[1, 2], &[0, 2]]).unwrap();
        assert_eq!(reduced_cohomology_dims(&hollow, q).dims(), &[0, 0, 1]);
        assert_eq!(reduced_cohomology_dims(&SimplicialComplex::irrelevant(3), q).dims(), &[1]);
        assert_eq!(reduced_cohomology_dims(&SimplicialComplex::void(3), q).total(), 0);
        assert_eq!(reduced_cohomology_dims(&SimplicialComplex::simplex(4), q).total(), 0);
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        let d = rp2();
        assert_eq!(d.f_vector(), vec![1, 6, 15, 10]);
        let over_q = reduced_cohomology_dims(&d, FieldSpec::RATIONALS);
        let over_2 = reduced_cohomology_dims(&d, FieldSpec::new(2).unwrap());
        assert_eq!(over_q.get(1), 0);
        assert_eq!(over_q.get(2), 0);
        assert_eq!(over_2.get(1), 1);
        assert_eq!(over_2.get(2), 1);
        assert_eq!(reduced_cohomology_dims(&d, FieldSpec::new(3).unwrap()), over_q);
    }

    #[test]
    fn coboundary_squares_to_zero() {
        let f = Rationals;
        let maps = coboundary_matrices(&f, &rp2());
        for w in maps.windows(2) {
            assert!(w[1].mul(&f, &w[0]).unwrap().is_zero(&f));
        }
    }

    #[test]
    fn spheres_agree_across_fields() {
        // boundary of the 4-simplex and the octahedron are spheres
        let boundary = SimplicialComplex::new(5, (0..5).map(|i| Subset::full(5).without(i))).unwrap();
        let octahedron = SimplicialComplex::from_vertex_lists(
            6,
            &[&[0, 2, 4], &[0, 2, 5], &[0, 3, 4], &[0, 3, 5], &[1, 2, 4], &[1, 2, 5], &[1, 3, 4], &[1, 3, 5]],
        )
        .unwrap();
        for d in [boundary, octahedron] {
            let q = reduced_cohomology_dims(&d, FieldSpec::RATIONALS);
            for p in [2, 3, 5] {
                assert_eq!(reduced_cohomology_dims(&d, FieldSpec::new(p).unwrap()), q);
            }
            assert_eq!(q.total(), 1);
        }
    }
}
