//! `Tor^S_i(K, M)` from the Koszul complex, degree by degree.
//!
//! In degree `alpha` the term `i` is the sum of `M_{alpha - tau}` over
//! `tau` inside `supp alpha` with `#tau = i`, and
//! `e_tau (x) m` maps to the sum over `j in tau` of
//! `(-1)^{#{k in tau : k < j}} e_{tau \ j} (x) x_j m`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use serde::Serialize;

use super::{support, SquarefreeModule};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};
use crate::subset::Subset;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct KoszulTor {
    pub total: usize,
    pub per_degree: BTreeMap<Subset, usize>,
}

/// Differentials of the Koszul complex in degree `alpha`; entry `t` maps
/// term `t` to term `t - 1`, with zero maps at both ends.
pub fn koszul_slice<F: Field>(m: &SquarefreeModule<F>, alpha: &[u32]) -> Vec<Matrix<F::Elem>> {
    let f = m.field();
    let a = support(alpha);
    // x_j is invertible on M_beta when j already lies in supp beta
    let ones = Subset::from_elements(alpha.iter().enumerate().filter(|(_, &e)| e == 1).map(|(i, _)| i));
    let s = a.len();
    let mut terms: Vec<Vec<(Subset, Subset, usize, usize)>> = vec![Vec::new(); s + 1];
    for tau in a.subsets() {
        let beta = a.difference(tau.intersection(ones));
        let d = m.dim(beta);
        if d > 0 {
            terms[tau.len()].push((tau, beta, d, 0));
        }
    }
    let mut totals = Vec::with_capacity(s + 1);
    for t in &mut terms {
        t.sort_by_key(|e| e.0);
        let mut off = 0;
        for e in t.iter_mut() {
            e.3 = off;
            off += e.2;
        }
        totals.push(off);
    }
    let mut diffs = Vec::with_capacity(s + 2);
    diffs.push(Matrix::zeros(f, 0, totals[0]));
    for t in 1..=s {
        let mut d = Matrix::zeros(f, totals[t - 1], totals[t]);
        for &(tau, beta, dim, c0) in &terms[t] {
            for j in tau.iter() {
                let Ok(pos) = terms[t - 1].binary_search_by_key(&tau.without(j), |e| e.0) else { continue };
                let (_, target_beta, target_dim, r0) = terms[t - 1][pos];
                let odd = tau.count_below(j) % 2 == 1;
                if beta.contains(j) {
                    debug_assert_eq!(target_beta, beta);
                    for b in 0..dim {
                        d.set(r0 + b, c0 + b, if odd { f.neg(&f.one()) } else { f.one() });
                    }
                } else if let Some(x) = m.mult_ref(beta, j) {
                    for r in 0..target_dim {
                        for c in 0..dim {
                            let v = x.get(r, c);
                            if !f.is_zero(v) {
                                d.set(r0 + r, c0 + c, if odd { f.neg(v) } else { v.clone() });
                            }
                        }
                    }
                }
            }
        }
        diffs.push(d);
    }
    diffs.push(Matrix::zeros(f, totals[s], 0));
    diffs
}

fn homology_dims<F: Field>(f: &F, diffs: &[Matrix<F::Elem>]) -> Vec<usize> {
    let ranks: Vec<usize> = diffs.iter().map(|d| if d.rows() == 0 || d.cols() == 0 { 0 } else { f.rank(d) }).collect();
    (0..diffs.len() - 1).map(|t| diffs[t].cols() - ranks[t] - ranks[t + 1]).collect()
}

/// `dim Tor_i(K, M)_alpha` for any `alpha` in `N^n`.
pub fn koszul_tor_dim_at<F: Field>(m: &SquarefreeModule<F>, i: usize, alpha: &[u32]) -> usize {
    let diffs = koszul_slice(m, alpha);
    homology_dims(m.field(), &diffs).get(i).copied().unwrap_or(0)
}

/// Squarefree Tor dimensions for every `i = 0..=n`.
pub fn koszul_tor_all<F: Field>(m: &SquarefreeModule<F>) -> Vec<KoszulTor> {
    let n = m.n();
    let mut out = vec![KoszulTor::default(); n + 1];
    // only degrees containing a nonzero component can carry Tor
    let mut degrees = BTreeSet::new();
    for &rho in m.dims().keys() {
        for extra in rho.complement(n).subsets() {
            degrees.insert(rho.union(extra));
        }
    }
    for sigma in degrees {
        let alpha: Vec<u32> = (0..n).map(|k| sigma.contains(k) as u32).collect();
        let dims = homology_dims(m.field(), &koszul_slice(m, &alpha));
        for (i, &d) in dims.iter().enumerate() {
            if d > 0 {
                out[i].total += d;
                out[i].per_degree.insert(sigma, d);
            }
        }
    }
    out
}

pub fn koszul_tor_dims<F: Field>(m: &SquarefreeModule<F>, i: usize) -> Result<KoszulTor> {
    if i > m.n() {
        return Err(Error::IndexOutOfRange { index: i, max: m.n() });
    }
    Ok(koszul_tor_all(m).swap_remove(i))
}
