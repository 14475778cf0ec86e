//! The dual complex `D(M)` and `Ext^{n-i}_S(M, omega_S) = H^{-i}(D(M))`.
//!
//! In squarefree degree `tau` the term `D^{-i}` is the sum of `(M_sigma)^*`
//! over `sigma` containing `tau` with `#sigma = i`. The component from the
//! `sigma` summand to the `sigma \ j` summand is
//! `(-1)^{#{k in sigma : k < j}}` times the transpose of `x_j` on
//! `M_{sigma \ j}`. Multiplication by `x_k` from degree `tau` to `tau + k`
//! projects onto the summands that contain `k`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::SquarefreeModule;
use crate::error::{Error, Result};
use crate::linalg::{CohomologyBasis, ComplexSlice, Field, Matrix};
use crate::subset::Subset;

/// One squarefree degree of `D(M)`.
#[derive(Clone, Debug)]
pub struct DualSlice<E> {
    degree: Subset,
    /// `summands[i]` lists `(sigma, dim M_sigma, offset)` with `#sigma = i`,
    /// in bitmask order.
    summands: Vec<Vec<(Subset, usize, usize)>>,
    /// `diffs[i]` maps term `i` to term `i - 1`; the first and last entries
    /// are the zero maps out of the ends of the complex.
    diffs: Vec<Matrix<E>>,
}

impl<E: Clone + PartialEq + core::fmt::Debug> DualSlice<E> {
    pub fn new<F: Field<Elem = E>>(m: &SquarefreeModule<F>, degree: Subset) -> Self {
        let f = m.field();
        let n = m.n();
        let mut summands: Vec<Vec<(Subset, usize, usize)>> = vec![Vec::new(); n + 1];
        for (&sigma, &d) in m.dims() {
            if degree.is_subset_of(sigma) {
                summands[sigma.len()].push((sigma, d, 0));
            }
        }
        let mut totals = Vec::with_capacity(n + 1);
        for terms in &mut summands {
            let mut offset = 0;
            for entry in terms.iter_mut() {
                entry.2 = offset;
                offset += entry.1;
            }
            totals.push(offset);
        }

        let mut diffs = Vec::with_capacity(n + 2);
        diffs.push(Matrix::zeros(f, 0, totals[0]));
        for i in 1..=n {
            let mut d = Matrix::zeros(f, totals[i - 1], totals[i]);
            for &(sigma, dim, c0) in &summands[i] {
                for j in sigma.difference(degree).iter() {
                    let rho = sigma.without(j);
                    let Ok(pos) = summands[i - 1].binary_search_by_key(&rho, |e| e.0) else { continue };
                    let Some(x) = m.mult_ref(rho, j) else { continue };
                    let (_, rho_dim, r0) = summands[i - 1][pos];
                    let odd = sigma.count_below(j) % 2 == 1;
                    for a in 0..rho_dim {
                        for b in 0..dim {
                            let v = x.get(b, a);
                            if !f.is_zero(v) {
                                d.set(r0 + a, c0 + b, if odd { f.neg(v) } else { v.clone() });
                            }
                        }
                    }
                }
            }
            diffs.push(d);
        }
        diffs.push(Matrix::zeros(f, totals[n], 0));
        DualSlice { degree, summands, diffs }
    }

    pub fn degree(&self) -> Subset {
        self.degree
    }

    /// Highest homological position, which is `n`.
    pub fn length(&self) -> usize {
        self.summands.len() - 1
    }

    pub fn term_dim(&self, i: usize) -> usize {
        self.diffs[i].cols()
    }

    /// Summands of term `i` as `(sigma, dim)` pairs.
    pub fn summands(&self, i: usize) -> impl Iterator<Item = (Subset, usize)> + '_ {
        self.summands[i].iter().map(|&(s, d, _)| (s, d))
    }

    /// The differential from term `i` to term `i - 1`.
    pub fn differential(&self, i: usize) -> &Matrix<E> {
        &self.diffs[i]
    }

    /// The maps into and out of term `i`, which computes `H^{-i}`.
    pub fn complex_slice(&self, i: usize) -> ComplexSlice<E> {
        ComplexSlice { d_in: self.diffs[i + 1].clone(), d_out: self.diffs[i].clone() }
    }

    pub fn check_d_squared<F: Field<Elem = E>>(&self, f: &F) -> Result<()> {
        for i in 1..self.diffs.len() {
            if !self.diffs[i - 1].mul(f, &self.diffs[i])?.is_zero(f) {
                return Err(Error::NotAComplex);
            }
        }
        Ok(())
    }

    /// `dim H^{-i}` for `i = 0..=n`.
    pub fn cohomology_dims<F: Field<Elem = E>>(&self, f: &F) -> Vec<usize> {
        let ranks: Vec<usize> =
            self.diffs.iter().map(|d| if d.rows() == 0 || d.cols() == 0 { 0 } else { f.rank(d) }).collect();
        (0..=self.length()).map(|i| self.term_dim(i) - ranks[i] - ranks[i + 1]).collect()
    }

    /// For every row of term `i` in `target`, the matching row in `self`.
    /// `target` must sit in a degree containing `self.degree`.
    fn row_map(&self, target: &DualSlice<E>, i: usize) -> Vec<usize> {
        let mut rows = Vec::with_capacity(target.term_dim(i));
        for &(sigma, dim, _) in &target.summands[i] {
            let pos = self.summands[i]
                .binary_search_by_key(&sigma, |e| e.0)
                .expect("summands of a larger degree are inherited");
            let off = self.summands[i][pos].2;
            rows.extend(off..off + dim);
        }
        rows
    }
}

/// `D(M)` viewed degree by degree.
pub struct SqComplex<'a, F: Field> {
    module: &'a SquarefreeModule<F>,
}

pub fn dual_complex<F: Field>(m: &SquarefreeModule<F>) -> SqComplex<'_, F> {
    SqComplex { module: m }
}

impl<F: Field> SqComplex<'_, F> {
    /// Degrees where some term is nonzero.
    pub fn degrees(&self) -> Vec<Subset> {
        self.module.down_closure()
    }

    pub fn slice(&self, degree: Subset) -> DualSlice<F::Elem> {
        DualSlice::new(self.module, degree)
    }

    /// `d o d = 0` in every degree.
    pub fn check(&self) -> Result<()> {
        self.degrees().into_iter().try_for_each(|t| self.slice(t).check_d_squared(self.module.field()))
    }
}

/// `dim [Ext^{n-i}_S(M, omega_S)]_tau` for `i = 0..=n`.
pub fn ext_dims_at<F: Field>(m: &SquarefreeModule<F>, tau: Subset) -> Vec<usize> {
    DualSlice::new(m, tau).cohomology_dims(m.field())
}

/// `Ext^{n-i}_S(M, omega_S)` as a squarefree module.
pub fn ext_sq<F: Field>(m: &SquarefreeModule<F>, i: usize) -> Result<SquarefreeModule<F>> {
    if i > m.n() {
        return Err(Error::IndexOutOfRange { index: i, max: m.n() });
    }
    Ok(ext_selected(m, &[i]).pop().expect("one index requested"))
}

/// `ext_sq(M, i)` for every `i = 0..=n`.
pub fn ext_all<F: Field>(m: &SquarefreeModule<F>) -> Vec<SquarefreeModule<F>> {
    let all: Vec<usize> = (0..=m.n()).collect();
    ext_selected(m, &all)
}

fn ext_selected<F: Field>(m: &SquarefreeModule<F>, wanted: &[usize]) -> Vec<SquarefreeModule<F>> {
    let f = m.field();
    let n = m.n();
    let slices: BTreeMap<Subset, DualSlice<F::Elem>> =
        m.down_closure().into_iter().map(|t| (t, DualSlice::new(m, t))).collect();
    wanted
        .iter()
        .map(|&i| {
            let mut bases = BTreeMap::new();
            for (&t, slice) in &slices {
                if slice.term_dim(i) == 0 {
                    continue;
                }
                let basis = CohomologyBasis::compute(f, &slice.diffs[i + 1], &slice.diffs[i]);
                if basis.dim() > 0 {
                    bases.insert(t, basis);
                }
            }
            let mut mult = BTreeMap::new();
            for (&t, basis) in &bases {
                for k in t.complement(n).iter() {
                    let u = t.with(k);
                    let Some(target) = bases.get(&u) else { continue };
                    let rows = slices[&t].row_map(&slices[&u], i);
                    let map = target.coords.mul(f, &basis.reps.select_rows(&rows)).expect("shapes agree");
                    if !map.is_zero(f) {
                        mult.insert((t, k), map);
                    }
                }
            }
            let dims = bases.iter().map(|(&t, b)| (t, b.dim())).collect();
            SquarefreeModule::from_parts(f.clone(), n, dims, mult)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{FieldSpec, PrimeField, Rationals};
    use crate::simplicial::{reduced_cohomology_dims, SimplicialComplex};
    use proptest::prelude::*;

    fn s(v: &[usize]) -> Subset {
        Subset::from_elements(v.iter().copied())
    }

    #[test]
    fn quotient_by_a_variable() {
        // S/(x) for n = 1
        let m = SquarefreeModule::from_complex(Rationals, &SimplicialComplex::irrelevant(1));
        let slice = dual_complex(&m).slice(Subset::EMPTY);
        assert_eq!((slice.term_dim(0), slice.term_dim(1)), (1, 0));
        assert_eq!(ext_dims_at(&m, Subset::EMPTY), vec![1, 0]);
    }

    #[test]
    fn ext_of_the_ring_is_omega() {
        let s1 = SquarefreeModule::from_complex(Rationals, &SimplicialComplex::simplex(1));
        let e = ext_sq(&s1, 1).unwrap();
        assert_eq!((e.dim(Subset::EMPTY), e.dim(s(&[0]))), (0, 1));
        for n in 1..=4 {
            let ring = SquarefreeModule::from_complex(Rationals, &SimplicialComplex::simplex(n));
            let exts = ext_all(&ring);
            for (i, e) in exts.iter().enumerate() {
                if i == n {
                    assert!(e.same_data(&SquarefreeModule::canonical_module(Rationals, n)));
                } else {
                    assert!(e.is_zero());
                }
            }
        }
    }

    #[test]
    fn zero_module() {
        let z = SquarefreeModule::<Rationals>::zero(Rationals, 3);
        assert!(ext_all(&z).iter().all(|e| e.is_zero()));
        assert!(dual_complex(&z).degrees().is_empty());
        assert_eq!(ext_sq(&z, 4), Err(Error::IndexOutOfRange { index: 4, max: 3 }));
    }

    #[test]
    fn two_points() {
        // R = K[x,y]/(xy) is Gorenstein: dualizing 0 -> S(-1,-1) -> S gives
        // Ext^1(R, omega) = R, with components in degrees {}, {x}, {y}
        let d = SimplicialComplex::from_vertex_lists(2, &[&[0], &[1]]).unwrap();
        let m = SquarefreeModule::from_complex(Rationals, &d);
        let e = ext_sq(&m, 1).unwrap();
        assert_eq!(e.total_dim(), 3);
        assert_eq!(e.dims(), m.dims());
        assert!(e.mult_ref(Subset::EMPTY, 0).is_some() && e.mult_ref(Subset::EMPTY, 1).is_some());
        assert!(ext_sq(&m, 0).unwrap().is_zero());
        assert!(ext_sq(&m, 2).unwrap().is_zero());
    }

    #[test]
    fn cohen_macaulay_path() {
        // path 1-2-3-4 is Cohen-Macaulay of dimension 2
        let path = SimplicialComplex::from_vertex_lists(4, &[&[0, 1], &[1, 2], &[2, 3]]).unwrap();
        let m = SquarefreeModule::from_complex(Rationals, &path);
        for (j, e) in ext_all(&m).iter().enumerate() {
            assert_eq!(e.is_zero(), j != 2, "j = {j}");
        }
    }

    /// Reisner/Hochster: dim [Ext^{n-i}(K[Delta], omega)]_tau is
    /// dim H~^{i - #tau - 1}(lk tau) for faces tau.
    fn link_oracle(delta: &SimplicialComplex, spec: FieldSpec, tau: Subset, i: usize) -> usize {
        if !delta.is_face(tau) {
            return 0;
        }
        let lk = delta.link(tau).unwrap();
        reduced_cohomology_dims(&lk, spec).get(i as isize - tau.len() as isize - 1)
    }

    fn arb_complex(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(0u64..(1 << n), 1..6)
                .prop_map(move |fs| SimplicialComplex::new(n, fs.into_iter().map(Subset)).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn ext_matches_link_cohomology(delta in arb_complex(5)) {
            for (spec, exts) in [
                (FieldSpec::RATIONALS, ext_all(&SquarefreeModule::from_complex(Rationals, &delta)).iter().map(|e| e.dims().clone()).collect::<Vec<_>>()),
                (FieldSpec::new(2).unwrap(), ext_all(&SquarefreeModule::from_complex(PrimeField::new(2), &delta)).iter().map(|e| e.dims().clone()).collect()),
            ] {
                for (i, dims) in exts.iter().enumerate() {
                    for tau in delta.ground().subsets() {
                        prop_assert_eq!(dims.get(&tau).copied().unwrap_or(0), link_oracle(&delta, spec, tau, i));
                    }
                }
            }
        }

        #[test]
        fn dual_complex_is_a_complex_and_ext_commutes(delta in arb_complex(5)) {
            let m = SquarefreeModule::from_complex(PrimeField::new(3), &delta);
            dual_complex(&m).check().unwrap();
            for e in ext_all(&m) {
                e.check_commuting_squares().unwrap();
                dual_complex(&e).check().unwrap();
                for ee in ext_all(&e) {
                    ee.check_commuting_squares().unwrap();
                }
            }
        }

        #[test]
        fn dims_only_agrees_with_full(delta in arb_complex(5)) {
            let m = SquarefreeModule::from_complex(Rationals, &delta);
            let exts = ext_all(&m);
            for tau in delta.ground().subsets() {
                let fast = ext_dims_at(&m, tau);
                for (i, e) in exts.iter().enumerate() {
                    prop_assert_eq!(fast[i], e.dim(tau));
                }
            }
        }
    }
}
