//! Betti-number oracles built from simplicial cohomology alone.

use alloc::vec::Vec;

use super::{cohomology::reduced_cohomology_in, maximal_sets, SimplicialComplex};
use crate::linalg::FieldSpec;
use crate::subset::Subset;
use crate::with_field;

/// Hochster's formula: `beta_{i,sigma}(K[Delta]) = dim H~^{#sigma - i - 1}(Delta|_sigma)`.
pub fn hochster_betti(delta: &SimplicialComplex, i: usize, sigma: Subset, field: FieldSpec) -> usize {
    let restricted = delta.induced(sigma);
    let degree = sigma.len() as isize - i as isize - 1;
    with_field!(field, |f| reduced_cohomology_in(&f, &restricted).get(degree))
}

/// `K^sigma(I) = { tau subset of sigma : x^{sigma \ tau} in I }` for a
/// squarefree ideal given by generator supports. The complex is void when
/// `x^sigma` is not in `I`.
pub fn upper_koszul_complex(n: usize, generators: &[Subset], sigma: Subset) -> SimplicialComplex {
    let in_ideal = |m: Subset| generators.iter().any(|g| g.is_subset_of(m));
    let faces: Vec<Subset> = sigma.subsets().filter(|tau| in_ideal(sigma.difference(*tau))).collect();
    SimplicialComplex::new(n, maximal_sets(faces)).expect("faces lie inside sigma")
}

/// `beta_{k,sigma}(I) = dim H~_{k-1}(K^sigma(I))` for a squarefree monomial
/// ideal `I`, which may be the unit ideal (generator `EMPTY`).
pub fn ideal_betti(n: usize, generators: &[Subset], k: usize, sigma: Subset, field: FieldSpec) -> usize {
    let complex = upper_koszul_complex(n, generators, sigma);
    with_field!(field, |f| reduced_cohomology_in(&f, &complex).get(k as isize - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn principal_ideal() {
        let q = FieldSpec::RATIONALS;
        let x = Subset::singleton(0);
        assert_eq!(ideal_betti(1, &[x], 0, x, q), 1);
        assert_eq!(ideal_betti(1, &[x], 0, Subset::EMPTY, q), 0);
        assert_eq!(ideal_betti(1, &[Subset::EMPTY], 0, Subset::EMPTY, q), 1);
    }

    #[test]
    fn two_disjoint_generators() {
        // (xy, zw): generators in degrees {x,y}, {z,w}, one syzygy in degree [4]
        let q = FieldSpec::RATIONALS;
        let gens = [Subset(0b0011), Subset(0b1100)];
        assert_eq!(ideal_betti(4, &gens, 0, Subset(0b0011), q), 1);
        assert_eq!(ideal_betti(4, &gens, 0, Subset(0b1100), q), 1);
        assert_eq!(ideal_betti(4, &gens, 1, Subset(0b1111), q), 1);
        assert_eq!(ideal_betti(4, &gens, 0, Subset(0b1111), q), 0);
    }

    #[test]
    fn hochster_for_two_points() {
        // K[x,y]/(xy): beta_0 = 1 at the empty set, beta_1 = 1 at {x,y}
        let q = FieldSpec::RATIONALS;
        let d = SimplicialComplex::from_vertex_lists(2, &[&[0], &[1]]).unwrap();
        assert_eq!(hochster_betti(&d, 0, Subset::EMPTY, q), 1);
        assert_eq!(hochster_betti(&d, 1, Subset(0b11), q), 1);
        assert_eq!(hochster_betti(&d, 1, Subset(0b01), q), 0);
    }
}
