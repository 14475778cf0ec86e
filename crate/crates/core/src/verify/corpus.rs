use alloc::vec::Vec;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::linalg::FieldSpec;
use crate::monomial::{minimalize, MonomialIdeal, PolynomialRing};
use crate::simplicial::{maximal_sets, SimplicialComplex};
use crate::subset::Subset;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusConfig {
    pub seed: u64,
    pub complex_count: usize,
    /// At most 8.
    pub max_vertices: usize,
    pub ideal_count: usize,
    /// At most 4.
    pub max_vars: usize,
    /// At most 3.
    pub max_exponent: u32,
    pub fields: Vec<FieldSpec>,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            seed: 0,
            complex_count: 20,
            max_vertices: 6,
            ideal_count: 10,
            max_vars: 4,
            max_exponent: 3,
            fields: alloc::vec![FieldSpec::RATIONALS, FieldSpec::new(2).expect("2 is prime")],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corpus {
    pub complexes: Vec<SimplicialComplex>,
    pub ideals: Vec<MonomialIdeal>,
}

/// Keeps each subset of `[n]` with probability `density`, then the maximal
/// ones. If nothing was kept, one uniformly chosen subset becomes the only
/// facet.
pub fn random_complex<R: Rng>(n: usize, density: f64, rng: &mut R) -> SimplicialComplex {
    let mut candidates: Vec<Subset> = Subset::full(n).subsets().filter(|_| rng.gen_bool(density)).collect();
    if candidates.is_empty() {
        candidates.push(Subset(rng.gen_range(0..1u64 << n)));
    }
    SimplicialComplex::new(n, maximal_sets(candidates)).expect("subsets of [n]")
}

/// `count` candidate facets with uniformly random vertices, then the
/// maximal ones. Sizes are a common random `s` in `1..n` or `s - 1`, so
/// that candidates seldom swallow each other.
pub fn random_facets<R: Rng>(n: usize, count: usize, rng: &mut R) -> SimplicialComplex {
    let s = rng.gen_range(1..n.max(2));
    let candidates = (0..count.max(1))
        .map(|_| {
            let size = if s > 1 && rng.gen_bool(0.3) { s - 1 } else { s };
            Subset::from_elements(rand::seq::index::sample(rng, n, size))
        })
        .collect();
    SimplicialComplex::new(n, maximal_sets(candidates)).expect("subsets of [n]")
}

/// `1..=6` generators with nonempty random support and exponents in
/// `1..=max_exponent`, minimalized.
pub fn random_ideal<R: Rng>(n: usize, max_exponent: u32, rng: &mut R) -> MonomialIdeal {
    let count = rng.gen_range(1..=6);
    let gens = (0..count)
        .map(|_| {
            let support = rng.gen_range(1..1u64 << n);
            (0..n).map(|i| if support >> i & 1 == 1 { rng.gen_range(1..=max_exponent) } else { 0 }).collect()
        })
        .collect();
    MonomialIdeal::new(PolynomialRing::standard(n), minimalize(gens)).expect("no generator is 1")
}

pub fn generate_corpus(config: &CorpusConfig) -> Corpus {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let max_vertices = config.max_vertices.clamp(1, 8);
    let max_vars = config.max_vars.clamp(1, 4);
    let max_exponent = config.max_exponent.clamp(1, 3);
    // Independent sampling rarely keeps more than two facets, so two in
    // three complexes come from an explicit facet list instead.
    let complexes = (0..config.complex_count)
        .map(|k| {
            let n = rng.gen_range(max_vertices.min(2)..=max_vertices);
            if k % 3 == 0 {
                let density = (rng.gen_range(2.0..10.0) / (1u64 << n) as f64).min(0.9);
                random_complex(n, density, &mut rng)
            } else {
                let count = rng.gen_range(3..=8);
                random_facets(n, count, &mut rng)
            }
        })
        .collect();
    let ideals = (0..config.ideal_count)
        .map(|_| {
            let n = rng.gen_range(1..=max_vars);
            random_ideal(n, max_exponent, &mut rng)
        })
        .collect();
    Corpus { complexes, ideals }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dense_limit_is_the_simplex() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(random_complex(4, 0.999_999, &mut rng), SimplicialComplex::simplex(4));
    }

    #[test]
    fn one_vertex() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let d = random_complex(1, 0.3, &mut rng);
            assert!(d == SimplicialComplex::simplex(1) || d == SimplicialComplex::irrelevant(1));
        }
    }

    #[test]
    fn seeded_generation_is_reproducible() {
        let config = CorpusConfig { seed: 42, ..CorpusConfig::default() };
        let a = generate_corpus(&config);
        assert_eq!(a, generate_corpus(&config));
        assert_eq!(a.complexes.len(), config.complex_count);
        assert!(a.complexes.iter().all(|d| !d.is_void() && d.n() <= 6));
        assert!(a.ideals.iter().all(|i| i.n() <= 4 && i.generators().iter().flatten().all(|&e| e <= 3)));
        let other = generate_corpus(&CorpusConfig { seed: 43, ..config });
        assert_ne!(a, other);
    }
}
