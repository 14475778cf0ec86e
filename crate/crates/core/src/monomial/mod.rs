//! Monomial ideals in `K[x_1, ..., x_n]` and their combinatorics: minimal
//! generators, radicals, polarization, Alexander duality and the
//! Stanley-Reisner dictionary.

mod parse;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use serde::Serialize;

pub use parse::{parse_ideal, parse_ideal_in};

use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;
use crate::subset::Subset;
use crate::MAX_VARIABLES;

/// Exponent vector of a monomial.
pub type Exponents = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct PolynomialRing {
    names: Vec<String>,
}

fn is_identifier(s: &str) -> bool {
    let mut bytes = s.bytes();
    matches!(bytes.next(), Some(b) if b.is_ascii_alphabetic()) && bytes.all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl PolynomialRing {
    pub fn new(names: Vec<String>) -> Result<Self> {
        if names.len() > MAX_VARIABLES {
            return Err(Error::TooManyVariables { count: names.len(), max: MAX_VARIABLES });
        }
        for (k, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::Syntax { position: 0, message: format!("`{name}` is not a valid variable name") });
            }
            if names[..k].contains(name) {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        Ok(PolynomialRing { names })
    }

    /// `K[x1, ..., xn]`.
    pub fn standard(n: usize) -> Self {
        PolynomialRing { names: (1..=n).map(|i| format!("x{i}")).collect() }
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// A name not yet used, derived from `base`.
    fn fresh_name(&self, base: String) -> String {
        let mut name = base;
        while self.index_of(&name).is_some() {
            name.push('_');
        }
        name
    }
}

impl fmt::Display for PolynomialRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.names.join(", "))
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Drops duplicates and every generator divisible by another one. The
/// survivors are sorted in decreasing lexicographic order.
pub fn minimalize(mut gens: Vec<Exponents>) -> Vec<Exponents> {
    gens.sort_by_key(|g| g.iter().map(|&e| e as u64).sum::<u64>());
    let mut kept: Vec<Exponents> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| divides(k, &g)) {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    kept
}

/// Inclusion-minimal members, sorted by bitmask.
pub(crate) fn minimal_sets(mut sets: Vec<Subset>) -> Vec<Subset> {
    sets.sort_by_key(|s| s.len());
    let mut kept: Vec<Subset> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset_of(s)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// Minimal sets meeting every member of `sets`. For generator supports of a
/// squarefree ideal these are the supports of its minimal primes.
pub fn minimal_transversals(sets: &[Subset]) -> Vec<Subset> {
    let mut current = alloc::vec![Subset::EMPTY];
    for &g in sets {
        let mut next = Vec::new();
        for &t in &current {
            if t.intersection(g).is_empty() {
                next.extend(g.iter().map(|v| t.with(v)));
            } else {
                next.push(t);
            }
        }
        current = minimal_sets(next);
    }
    current
}

fn support(e: &[u32]) -> Subset {
    Subset::from_elements(e.iter().enumerate().filter(|(_, &x)| x > 0).map(|(i, _)| i))
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct MonomialIdeal {
    ring: PolynomialRing,
    /// Minimal generators in decreasing lexicographic order.
    generators: Vec<Exponents>,
}

impl MonomialIdeal {
    /// The ideal generated by `gens`, minimalized. Fails on the unit ideal.
    pub fn new(ring: PolynomialRing, gens: Vec<Exponents>) -> Result<Self> {
        let n = ring.n();
        for g in &gens {
            if g.len() != n {
                return Err(Error::ShapeMismatch(format!(
                    "exponent vector of length {} in a ring with {n} variables",
                    g.len()
                )));
            }
            if g.iter().all(|&e| e == 0) {
                return Err(Error::UnitIdeal);
            }
        }
        Ok(MonomialIdeal { ring, generators: minimalize(gens) })
    }

    pub fn zero(ring: PolynomialRing) -> Self {
        MonomialIdeal { ring, generators: Vec::new() }
    }

    /// The squarefree ideal with the given generator supports.
    pub fn from_supports(ring: PolynomialRing, supports: &[Subset]) -> Result<Self> {
        let n = ring.n();
        let gens = supports
            .iter()
            .map(|s| {
                if let Some(v) = s.iter().find(|&v| v >= n) {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                Ok((0..n).map(|i| s.contains(i) as u32).collect())
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, gens)
    }

    /// The Stanley-Reisner ideal `I_Delta`, generated by the minimal non-faces.
    pub fn from_complex(ring: PolynomialRing, delta: &SimplicialComplex) -> Result<Self> {
        if ring.n() != delta.n() {
            return Err(Error::RingMismatch(format!("{} variables but a complex on {} vertices", ring.n(), delta.n())));
        }
        if delta.is_void() {
            return Err(Error::UnitIdeal);
        }
        Self::from_supports(ring, &delta.minimal_nonfaces())
    }

    pub fn ring(&self) -> &PolynomialRing {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.ring.n()
    }

    pub fn generators(&self) -> &[Exponents] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(|g| g.iter().all(|&e| e <= 1))
    }

    pub fn contains(&self, monomial: &[u32]) -> bool {
        self.generators.iter().any(|g| divides(g, monomial))
    }

    /// Supports of the minimal generators.
    pub fn supports(&self) -> Vec<Subset> {
        self.generators.iter().map(|g| support(g)).collect()
    }

    pub fn squarefree_supports(&self) -> Result<Vec<Subset>> {
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        Ok(self.supports())
    }

    /// `sqrt(I)`: generator supports, minimalized.
    pub fn radical(&self) -> MonomialIdeal {
        let gens = self.generators.iter().map(|g| g.iter().map(|&e| (e > 0) as u32).collect()).collect();
        MonomialIdeal { ring: self.ring.clone(), generators: minimalize(gens) }
    }

    /// Supports of the minimal primes `(x_i : i in P)`.
    pub fn minimal_primes(&self) -> Vec<Subset> {
        minimal_transversals(&self.radical().supports())
    }

    /// `dim S/I`, the largest facet size of the Stanley-Reisner complex of
    /// the radical.
    pub fn krull_dim(&self) -> usize {
        let height = self.minimal_primes().iter().map(|p| p.len()).min().unwrap_or(0);
        self.n() - height
    }

    /// `Delta(I)` for squarefree `I`: its facets are the complements of the
    /// minimal primes.
    pub fn stanley_reisner(&self) -> Result<SimplicialComplex> {
        let supports = self.squarefree_supports()?;
        let n = self.n();
        SimplicialComplex::new(n, minimal_transversals(&supports).into_iter().map(|p| p.complement(n)))
    }

    /// `I^vee`, generated by `x^{[n] \ sigma}` for the facets `sigma` of
    /// `Delta(I)`. The dual of the zero ideal is the unit ideal and is
    /// rejected.
    pub fn alexander_dual(&self) -> Result<MonomialIdeal> {
        let supports = self.squarefree_supports()?;
        Self::from_supports(self.ring.clone(), &minimal_transversals(&supports))
    }

    /// `I S' cap (x_{n+1})` in one more variable, i.e. every generator
    /// multiplied by the new variable.
    pub fn cone_with_hyperplane(&self) -> Result<MonomialIdeal> {
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let n = self.n();
        if n + 1 > MAX_VARIABLES {
            return Err(Error::TooManyVariables { count: n + 1, max: MAX_VARIABLES });
        }
        let mut names = self.ring.names.clone();
        names.push(self.ring.fresh_name(format!("x{}", n + 1)));
        let ring = PolynomialRing { names };
        let generators = self
            .generators
            .iter()
            .map(|g| {
                let mut e = g.clone();
                e.push(1);
                e
            })
            .collect();
        Ok(MonomialIdeal { ring, generators: minimalize(generators) })
    }

    /// Replaces every `x_i^a` by `x_{i,1} ... x_{i,a}`.
    pub fn polarize(&self) -> PolarizationResult {
        let n = self.n();
        if self.is_zero() {
            return PolarizationResult {
                ideal: self.clone(),
                blocks: (0..n).map(|i| alloc::vec![i]).collect(),
                height_shift: 0,
            };
        }
        let copies: Vec<usize> =
            (0..n).map(|i| self.generators.iter().map(|g| g[i] as usize).max().unwrap_or(0).max(1)).collect();
        let mut blocks = Vec::with_capacity(n);
        let mut names = Vec::new();
        for (i, &a) in copies.iter().enumerate() {
            blocks.push((names.len()..names.len() + a).collect::<Vec<_>>());
            names.extend((1..=a).map(|j| format!("x_{}_{}", i + 1, j)));
        }
        let total = names.len();
        let generators = self
            .generators
            .iter()
            .map(|g| {
                let mut e = alloc::vec![0u32; total];
                for (i, &a) in g.iter().enumerate() {
                    for &k in &blocks[i][..a as usize] {
                        e[k] = 1;
                    }
                }
                e
            })
            .collect();
        let ideal = MonomialIdeal { ring: PolynomialRing { names }, generators: minimalize(generators) };
        let height_shift = ideal.krull_dim() - self.krull_dim();
        PolarizationResult { ideal, blocks, height_shift }
    }

    /// Generators as text, `0` for the zero ideal.
    pub fn generators_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            let factors: Vec<String> = g
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { self.ring.names[i].clone() } else { format!("{}^{e}", self.ring.names[i]) })
                .collect();
            parts.push(factors.join("*"));
        }
        parts.join(", ")
    }
}

/// Parses back with [`parse_ideal`].
impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ring: {}; {}", self.ring, self.generators_text())
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PolarizationResult {
    pub ideal: MonomialIdeal,
    /// `blocks[i][j]` is the index of `x_{i,j}` in the polarized ring.
    pub blocks: Vec<Vec<usize>>,
    /// `dim S~/I~ - dim S/I`.
    pub height_shift: usize,
}

impl PolarizationResult {
    pub fn variable(&self, i: usize, j: usize) -> Option<usize> {
        self.blocks.get(i)?.get(j).copied()
    }

    /// The `(i, j)` pair behind a polarized variable.
    pub fn origin(&self, k: usize) -> Option<(usize, usize)> {
        self.blocks.iter().enumerate().find_map(|(i, b)| b.iter().position(|&v| v == k).map(|j| (i, j)))
    }

    /// Undoes the polarization by sending `x_{i,j}` to `x_i`. Applied to the
    /// polarized generators this gives back the original ones.
    pub fn specialize(&self, monomial: &[u32]) -> Exponents {
        let mut e = alloc::vec![0u32; self.blocks.len()];
        for (i, block) in self.blocks.iter().enumerate() {
            e[i] = block.iter().map(|&k| monomial[k]).sum();
        }
        e
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn ideal(text: &str) -> MonomialIdeal {
        parse_ideal(text).unwrap()
    }

    /// All supports of prime ideals containing I, minimal ones kept: the
    /// brute-force oracle for the radical.
    fn brute_minimal_primes(i: &MonomialIdeal) -> Vec<Subset> {
        let n = i.n();
        let primes = Subset::full(n)
            .subsets()
            .filter(|p| i.generators().iter().all(|g| !support(g).intersection(*p).is_empty()))
            .collect();
        minimal_sets(primes)
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(minimalize(vec![vec![2], vec![3]]), vec![vec![2]]);
        assert_eq!(minimalize(vec![vec![1, 1], vec![1, 0], vec![0, 2]]), vec![vec![1, 0], vec![0, 2]]);
        assert_eq!(minimalize(vec![]), Vec::<Exponents>::new());
    }

    #[test]
    fn radical_examples() {
        let i = ideal("ring: x, y; x^2*y, y^3");
        assert_eq!(i.radical(), ideal("ring: x, y; y"));
        assert_eq!(brute_minimal_primes(&i), vec![Subset(0b10)]);
        let i = ideal("ring: x, y, z; x^2*y, x^2*z, x*y*z, x*z^2, y^3, y^2*z, y*z^2");
        assert_eq!(i.radical(), ideal("ring: x, y, z; y, x*z"));
        assert_eq!(brute_minimal_primes(&i), i.minimal_primes());
        let sq = ideal("x*y, y*z");
        assert_eq!(sq.radical(), sq);
    }

    #[test]
    fn polarize_examples() {
        let p = ideal("x^2").polarize();
        assert_eq!(p.ideal.to_string(), "ring: x_1_1, x_1_2; x_1_1*x_1_2");
        assert_eq!(p.height_shift, 1);

        let p = ideal("x*y").polarize();
        assert_eq!(p.ideal.to_string(), "ring: x_1_1, x_2_1; x_1_1*x_2_1");
        assert_eq!(p.height_shift, 0);

        let i = ideal("x^2*y, x*y^2");
        let p = i.polarize();
        assert_eq!(p.ideal.to_string(), "ring: x_1_1, x_1_2, x_2_1, x_2_2; x_1_1*x_1_2*x_2_1, x_1_1*x_2_1*x_2_2");
        let back = minimalize(p.ideal.generators().iter().map(|g| p.specialize(g)).collect());
        assert_eq!(back, i.generators());
        assert_eq!(p.variable(1, 1), Some(3));
        assert_eq!(p.origin(3), Some((1, 1)));

        let zero = MonomialIdeal::zero(PolynomialRing::standard(2));
        let p = zero.polarize();
        assert_eq!(p.ideal, zero);
        assert_eq!(p.height_shift, 0);
    }

    #[test]
    fn alexander_dual_examples() {
        assert_eq!(ideal("x*y").alexander_dual().unwrap(), ideal("x, y"));
        let i = ideal("ring: x, y, z, w; x*z, x*w, y*z, y*w");
        assert_eq!(i.alexander_dual().unwrap(), ideal("ring: x, y, z, w; x*y, z*w"));
        assert_eq!(ideal("x^2").alexander_dual(), Err(Error::NotSquarefree));
        assert_eq!(MonomialIdeal::zero(PolynomialRing::standard(2)).alexander_dual(), Err(Error::UnitIdeal));
    }

    #[test]
    fn stanley_reisner_examples() {
        let d = ideal("x*y").stanley_reisner().unwrap();
        assert_eq!(d.facets(), &[Subset(0b01), Subset(0b10)]);
        // (x,y)∩(y,z)∩(z,u)∩(u,v) = (y*u, y*z*v, x*z*u, x*z*v)
        let i = ideal("ring: x, y, z, u, v; y*u, y*z*v, x*z*u, x*z*v");
        let d = i.stanley_reisner().unwrap();
        let expected = [&[2, 3, 4][..], &[0, 3, 4], &[0, 1, 4], &[0, 1, 2]];
        let mut expected: Vec<Subset> = expected.iter().map(|f| Subset::from_elements(f.iter().copied())).collect();
        expected.sort();
        assert_eq!(d.facets(), &expected[..]);
        let zero = MonomialIdeal::zero(PolynomialRing::standard(2));
        assert_eq!(zero.stanley_reisner().unwrap(), SimplicialComplex::simplex(2));
        assert_eq!(MonomialIdeal::from_complex(PolynomialRing::standard(5), &d).unwrap().generators().len(), 4);
        // a variable in the ideal removes its vertex
        let d = ideal("ring: x, y; x").stanley_reisner().unwrap();
        assert_eq!(d.facets(), &[Subset(0b10)]);
    }

    #[test]
    fn cone_examples() {
        let c = ideal("x").cone_with_hyperplane().unwrap();
        assert_eq!(c.to_string(), "ring: x, x2; x*x2");
        assert_eq!(c.krull_dim(), 1);
        let c = ideal("ring: x, y, z; x*y, y*z").cone_with_hyperplane().unwrap();
        assert_eq!(c.generators(), &[vec![1, 1, 0, 1], vec![0, 1, 1, 1]]);
        // brute-force membership in I S' ∩ (w) up to degree 4
        let i = ideal("ring: x, y, z; x*y, y*z");
        for bits in 0u32..(5u32.pow(4)) {
            let e: Vec<u32> = (0..4).map(|k| bits / 5u32.pow(k) % 5).collect();
            if e.iter().sum::<u32>() > 4 {
                continue;
            }
            let in_both = i.contains(&e[..3]) && e[3] > 0;
            assert_eq!(c.contains(&e), in_both);
        }
        let z = MonomialIdeal::zero(PolynomialRing::standard(2)).cone_with_hyperplane().unwrap();
        assert!(z.is_zero());
        assert_eq!(z.n(), 3);
    }

    #[test]
    fn fresh_cone_variable() {
        let c = ideal("ring: x, x2; x").cone_with_hyperplane().unwrap();
        assert_eq!(c.ring().names(), &["x", "x2", "x3"]);
        let c = ideal("ring: x3, y; x3").cone_with_hyperplane().unwrap();
        assert_eq!(c.ring().name(2), "x3_");
    }

    #[test]
    fn display_round_trips() {
        let i = ideal("ring: a, b, c; a^3*b, c, b^2");
        assert_eq!(parse_ideal(&i.to_string()).unwrap(), i);
        let z = MonomialIdeal::zero(PolynomialRing::standard(3));
        assert_eq!(parse_ideal(&z.to_string()).unwrap(), z);
    }

    fn arb_ideal(max_n: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
        (1..=max_n).prop_flat_map(move |n| {
            proptest::collection::vec(proptest::collection::vec(0..=max_exp, n), 0..6).prop_map(move |gens| {
                let gens = gens.into_iter().filter(|g| g.iter().any(|&e| e > 0)).collect();
                MonomialIdeal::new(PolynomialRing::standard(n), gens).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn minimalize_preserves_ideal(i in arb_ideal(4, 3), extra in proptest::collection::vec(proptest::collection::vec(0u32..4, 4), 0..4)) {
            let n = i.n();
            let mut gens = i.generators().to_vec();
            for e in extra {
                let e: Exponents = e[..n].to_vec();
                if i.contains(&e) {
                    gens.push(e);
                }
            }
            let m = minimalize(gens.clone());
            let j = MonomialIdeal::new(i.ring().clone(), m.clone()).unwrap();
            for g in &gens {
                prop_assert!(j.contains(g));
            }
            for (a, x) in m.iter().enumerate() {
                for (b, y) in m.iter().enumerate() {
                    prop_assert!(a == b || !divides(x, y));
                }
            }
        }

        #[test]
        fn radical_properties(i in arb_ideal(5, 3)) {
            let r = i.radical();
            prop_assert!(r.is_squarefree());
            prop_assert_eq!(r.radical(), r.clone());
            prop_assert_eq!(r.minimal_primes(), brute_minimal_primes(&i));
            let p = i.polarize();
            prop_assert!(p.ideal.is_squarefree());
            prop_assert_eq!(p.ideal.radical(), p.ideal.clone());
            let back = minimalize(p.ideal.generators().iter().map(|g| p.specialize(g)).collect());
            prop_assert_eq!(back, i.generators().to_vec());
            prop_assert_eq!(p.height_shift, p.ideal.n() - i.n());
        }

        #[test]
        fn duality_and_complexes(i in arb_ideal(6, 1)) {
            if !i.is_zero() {
                let dual = i.alexander_dual().unwrap();
                prop_assert_eq!(dual.alexander_dual().unwrap(), i.clone());
            }
            let delta = i.stanley_reisner().unwrap();
            for sigma in Subset::full(i.n()).subsets() {
                let e: Exponents = (0..i.n()).map(|k| sigma.contains(k) as u32).collect();
                prop_assert_eq!(delta.is_face(sigma), !i.contains(&e));
            }
            prop_assert_eq!(MonomialIdeal::from_complex(i.ring().clone(), &delta).unwrap(), i);
        }
    }
}
