//! Simplicial complexes on `[n]` stored by their facets.
//!
//! The void complex (no faces at all) and the irrelevant complex (only the
//! empty face) are different values: the first is the Stanley-Reisner
//! complex of the unit ideal, the second that of the maximal ideal.

mod betti;
mod cohomology;

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use serde::Serialize;

pub use betti::{hochster_betti, ideal_betti, upper_koszul_complex};
pub use cohomology::{coboundary_matrices, reduced_cohomology_dims, ReducedCohomology};

use crate::error::{Error, Result};
use crate::subset::Subset;
use crate::MAX_VARIABLES;

#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SimplicialComplex {
    n: usize,
    /// Pairwise incomparable, sorted by bitmask.
    facets: Vec<Subset>,
}

/// Keeps the inclusion-maximal sets, sorted.
pub fn maximal_sets(mut sets: Vec<Subset>) -> Vec<Subset> {
    sets.sort_by_key(|s| core::cmp::Reverse(s.len()));
    let mut kept: Vec<Subset> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset_of(*k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

impl SimplicialComplex {
    /// Builds the complex generated by `facets`; non-maximal generators are
    /// dropped.
    pub fn new<I: IntoIterator<Item = Subset>>(n: usize, facets: I) -> Result<Self> {
        if n > MAX_VARIABLES {
            return Err(Error::TooManyVariables { count: n, max: MAX_VARIABLES });
        }
        let ground = Subset::full(n);
        let facets: Vec<Subset> = facets.into_iter().collect();
        for f in &facets {
            if !f.is_subset_of(ground) {
                let vertex = f.difference(ground).iter().next().unwrap_or(0);
                return Err(Error::VertexOutOfRange { vertex, n });
            }
        }
        Ok(SimplicialComplex { n, facets: maximal_sets(facets) })
    }

    /// Convenience constructor from 0-based vertex lists.
    pub fn from_vertex_lists(n: usize, facets: &[&[usize]]) -> Result<Self> {
        for f in facets {
            if let Some(&v) = f.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        Self::new(n, facets.iter().map(|f| Subset::from_elements(f.iter().copied())))
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, facets: Vec::new() }
    }

    pub fn irrelevant(n: usize) -> Self {
        SimplicialComplex { n, facets: alloc::vec![Subset::EMPTY] }
    }

    pub fn simplex(n: usize) -> Self {
        SimplicialComplex { n, facets: alloc::vec![Subset::full(n)] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn facets(&self) -> &[Subset] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `dim K[Delta]`, the largest facet size; `None` for the void complex.
    pub fn krull_dim(&self) -> Option<usize> {
        self.facets.iter().map(|f| f.len()).max()
    }

    /// `dim Delta = krull_dim - 1`; `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.krull_dim().map(|d| d as isize - 1)
    }

    /// Facets of maximal size.
    pub fn top_facets(&self) -> Vec<Subset> {
        let d = self.krull_dim().unwrap_or(0);
        self.facets.iter().copied().filter(|f| f.len() == d).collect()
    }

    pub fn vertices(&self) -> Subset {
        self.facets.iter().fold(Subset::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn is_pure(&self) -> bool {
        let d = self.krull_dim();
        self.facets.iter().all(|f| Some(f.len()) == d)
    }

    pub fn is_face(&self, sigma: Subset) -> bool {
        self.facets.iter().any(|f| sigma.is_subset_of(*f))
    }

    /// Every face, ordered by size and then by bitmask.
    pub fn faces(&self) -> Vec<Subset> {
        let mut set = BTreeSet::new();
        for f in &self.facets {
            for s in f.subsets() {
                set.insert((s.len(), s.0));
            }
        }
        set.into_iter().map(|(_, b)| Subset(b)).collect()
    }

    /// Face counts `f_{-1}, f_0, ..., f_{dim}`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for face in self.faces() {
            let k = face.len();
            if counts.len() <= k {
                counts.resize(k + 1, 0);
            }
            counts[k] += 1;
        }
        counts
    }

    /// `sum_k (-1)^k f_k` over faces of dimension `k >= -1`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector().iter().enumerate().map(|(size, &c)| if size % 2 == 1 { c as i64 } else { -(c as i64) }).sum()
    }

    /// `lk F = { tau : tau and F disjoint, tau + F in Delta }`, on the same
    /// ground set.
    pub fn link(&self, face: Subset) -> Result<Self> {
        if !face.is_subset_of(self.ground()) || !self.is_face(face) {
            return Err(Error::NotAFace(face));
        }
        let facets = self.facets.iter().filter(|f| face.is_subset_of(**f)).map(|f| f.difference(face)).collect();
        Ok(SimplicialComplex { n: self.n, facets: maximal_sets(facets) })
    }

    /// Faces contained in `w`.
    pub fn induced(&self, w: Subset) -> Self {
        let facets = self.facets.iter().map(|f| f.intersection(w)).collect();
        SimplicialComplex { n: self.n, facets: maximal_sets(facets) }
    }

    /// Re-indexes a complex whose faces lie in `ground` onto `[#ground]`.
    pub fn compress(&self, ground: Subset) -> Result<Self> {
        if let Some(f) = self.facets.iter().find(|f| !f.is_subset_of(ground)) {
            let vertex = f.difference(ground).iter().next().unwrap_or(0);
            return Err(Error::VertexOutOfRange { vertex, n: ground.len() });
        }
        let facets = self.facets.iter().map(|f| f.compress(ground)).collect();
        Ok(SimplicialComplex { n: ground.len(), facets: maximal_sets(facets) })
    }

    /// The same complex on a larger ground set.
    pub fn with_ground(&self, n: usize) -> Result<Self> {
        Self::new(n, self.facets.iter().copied())
    }

    /// Minimal non-faces, i.e. the supports of the minimal generators of the
    /// Stanley-Reisner ideal.
    pub fn minimal_nonfaces(&self) -> Vec<Subset> {
        let mut out = Vec::new();
        if self.is_void() {
            out.push(Subset::EMPTY);
            return out;
        }
        // A minimal non-face is either a vertex outside every facet or a face
        // plus one vertex; enumerate faces and extend.
        let faces = self.faces();
        let mut seen = BTreeSet::new();
        for face in &faces {
            for v in face.complement(self.n).iter() {
                let cand = face.with(v);
                if seen.contains(&cand) || self.is_face(cand) {
                    continue;
                }
                seen.insert(cand);
                if cand.iter().all(|i| self.is_face(cand.without(i))) {
                    out.push(cand);
                }
            }
        }
        out.sort_by_key(|s| (s.len(), s.0));
        out
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} facets=[", self.n)?;
        for (k, facet) in self.facets.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{facet}")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FieldSpec;
    use alloc::vec;
    use proptest::prelude::*;

    fn s(v: &[usize]) -> Subset {
        Subset::from_elements(v.iter().copied())
    }

    /// Vertices x,y,z,u,v = 0..5; complement of the four minimal primes.
    fn jumping_complex() -> SimplicialComplex {
        SimplicialComplex::from_vertex_lists(5, &[&[2, 3, 4], &[0, 3, 4], &[0, 1, 4], &[0, 1, 2]]).unwrap()
    }

    #[test]
    fn is_face_examples() {
        let d = SimplicialComplex::from_vertex_lists(3, &[&[0, 1]]).unwrap();
        assert!(d.is_face(s(&[1])));
        assert!(!d.is_face(s(&[2])));
        assert!(!SimplicialComplex::void(3).is_face(Subset::EMPTY));
        assert!(SimplicialComplex::irrelevant(3).is_face(Subset::EMPTY));
    }

    #[test]
    fn link_examples() {
        let d = jumping_complex();
        let lk = d.link(s(&[2])).unwrap();
        assert_eq!(lk.facets(), &[s(&[0, 1]), s(&[3, 4])]);
        assert_eq!(d.link(Subset::EMPTY).unwrap(), d);
        let full = SimplicialComplex::simplex(3);
        assert_eq!(full.link(s(&[0])).unwrap().facets(), &[s(&[1, 2])]);
        assert_eq!(d.link(s(&[1, 3])), Err(Error::NotAFace(s(&[1, 3]))));
    }

    #[test]
    fn induced_examples() {
        let d = SimplicialComplex::from_vertex_lists(3, &[&[0, 1], &[1, 2]]).unwrap();
        assert_eq!(d.induced(s(&[0, 2])).facets(), &[s(&[0]), s(&[2])]);
        assert_eq!(d.induced(d.ground()), d);
        assert_eq!(d.induced(Subset::EMPTY), SimplicialComplex::irrelevant(3));
    }

    #[test]
    fn constructor_drops_non_maximal_and_rejects_bad_vertices() {
        let d = SimplicialComplex::from_vertex_lists(3, &[&[0], &[0, 1], &[0, 1]]).unwrap();
        assert_eq!(d.facets(), &[s(&[0, 1])]);
        assert_eq!(
            SimplicialComplex::from_vertex_lists(2, &[&[0, 2]]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn minimal_nonfaces_examples() {
        assert_eq!(jumping_complex().minimal_nonfaces(), vec![s(&[1, 3]), s(&[0, 2, 3]), s(&[0, 2, 4]), s(&[1, 2, 4])]);
        let two_points = SimplicialComplex::from_vertex_lists(3, &[&[0], &[1]]).unwrap();
        assert_eq!(two_points.minimal_nonfaces(), vec![s(&[2]), s(&[0, 1])]);
        assert_eq!(SimplicialComplex::simplex(2).minimal_nonfaces(), vec![]);
        assert_eq!(SimplicialComplex::void(2).minimal_nonfaces(), vec![Subset::EMPTY]);
    }

    fn arb_complex(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(0u64..(1 << n), 1..6)
                .prop_map(move |fs| SimplicialComplex::new(n, fs.into_iter().map(Subset)).unwrap())
        })
    }

    proptest! {
        #[test]
        fn link_matches_definition(d in arb_complex(6)) {
            for face in d.faces() {
                let lk = d.link(face).unwrap();
                for tau in d.ground().subsets() {
                    let expected = tau.intersection(face).is_empty() && d.is_face(tau.union(face));
                    prop_assert_eq!(lk.is_face(tau), expected);
                }
            }
        }

        #[test]
        fn euler_characteristic_matches_cohomology(d in arb_complex(6)) {
            for spec in [FieldSpec::RATIONALS, FieldSpec::new(2).unwrap(), FieldSpec::new(3).unwrap()] {
                let h = reduced_cohomology_dims(&d, spec);
                let alt: i64 = h.dims().iter().enumerate()
                    .map(|(k, &x)| if k % 2 == 0 { -(x as i64) } else { x as i64 })
                    .sum();
                prop_assert_eq!(alt, d.reduced_euler_characteristic());
            }
        }
    }
}
