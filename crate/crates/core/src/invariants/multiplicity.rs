use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use serde::Serialize;

use super::LocalCohomology;
use crate::error::{Error, Result};
use crate::linalg::{Field, FieldSpec};
use crate::simplicial::{ideal_betti, SimplicialComplex};
use crate::sqfree::SquarefreeModule;
use crate::subset::Subset;
use crate::with_field;

/// Multiplicities `m_{j,sigma}` of the simple factors `H^{#sigma}_{p_sigma}(S)`
/// in `H^j_I(S)`, with the derived `gamma` and `lambda^0` tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityTable {
    pub n: usize,
    /// `m[j]` maps `sigma` to `m_{j,sigma}`; zeros are omitted.
    pub m: Vec<BTreeMap<Subset, usize>>,
    /// `gamma[i][j] = sum over #sigma = n - i of m_{j,sigma}`.
    pub gamma: Vec<Vec<usize>>,
    /// `lambda0[j] = sum over sigma of m_{n-j,sigma}`.
    pub lambda0: Vec<usize>,
}

impl MultiplicityTable {
    /// From `exts[k] = Ext^{n-k}_S(K[Delta], omega_S)`: the component of
    /// `H^j_I(S)` at `-sigma` is dual to the component of `Ext^j` at
    /// `[n] \ sigma`.
    pub(crate) fn from_exts<F: Field>(exts: &[SquarefreeModule<F>]) -> Self {
        let n = exts.len() - 1;
        let m: Vec<BTreeMap<Subset, usize>> =
            (0..=n).map(|j| exts[n - j].dims().iter().map(|(&tau, &d)| (tau.complement(n), d)).collect()).collect();
        Self::from_m(n, m)
    }

    pub fn from_m(n: usize, m: Vec<BTreeMap<Subset, usize>>) -> Self {
        let mut gamma = alloc::vec![alloc::vec![0; n + 1]; n + 1];
        let mut lambda0 = alloc::vec![0; n + 1];
        for (j, row) in m.iter().enumerate() {
            for (sigma, &v) in row {
                gamma[n - sigma.len()][j] += v;
                lambda0[n - j] += v;
            }
        }
        MultiplicityTable { n, m, gamma, lambda0 }
    }

    pub fn get(&self, j: usize, sigma: Subset) -> usize {
        self.m.get(j).and_then(|row| row.get(&sigma)).copied().unwrap_or(0)
    }

    /// `gamma_{i,j}`, zero outside `0..=n`.
    pub fn gamma(&self, i: isize, j: isize) -> usize {
        if i < 0 || j < 0 {
            return 0;
        }
        self.gamma.get(i as usize).and_then(|r| r.get(j as usize)).copied().unwrap_or(0)
    }

    /// `lambda^0_j`, zero outside `0..=n`.
    pub fn lambda0(&self, j: isize) -> usize {
        if j < 0 {
            return 0;
        }
        self.lambda0.get(j as usize).copied().unwrap_or(0)
    }
}

/// `m_{j,sigma} = beta_{#sigma - j, sigma}(I^vee)`, each Betti number from the
/// upper Koszul complex of the Alexander dual.
pub fn multiplicities_from_dual_betti(delta: &SimplicialComplex, field: FieldSpec) -> Result<MultiplicityTable> {
    if delta.is_void() {
        return Err(Error::VoidComplex);
    }
    let n = delta.n();
    // I^vee is generated by the complements of the facets
    let dual_gens: Vec<Subset> = delta.facets().iter().map(|f| f.complement(n)).collect();
    let mut m = alloc::vec![BTreeMap::new(); n + 1];
    for sigma in Subset::full(n).subsets() {
        for (j, row) in m.iter_mut().enumerate() {
            if j > sigma.len() {
                break;
            }
            let v = ideal_betti(n, &dual_gens, sigma.len() - j, sigma, field);
            if v > 0 {
                row.insert(sigma, v);
            }
        }
    }
    Ok(MultiplicityTable::from_m(n, m))
}

/// Multiplicities from the `Ext` modules, confirmed against the Betti
/// numbers of the Alexander dual.
pub fn multiplicities(delta: &SimplicialComplex, field: FieldSpec) -> Result<MultiplicityTable> {
    let from_ext = with_field!(field, |f| LocalCohomology::new(f, delta)?.multiplicities());
    let from_betti = multiplicities_from_dual_betti(delta, field)?;
    if from_ext != from_betti {
        return Err(Error::InternalInconsistency(format!(
            "multiplicities from Ext {:?} differ from dual Betti numbers {:?}",
            from_ext.m, from_betti.m
        )));
    }
    Ok(from_ext)
}

/// `lambda^0_j` for `j = 0..=n`.
pub fn generalized_lyu(delta: &SimplicialComplex, field: FieldSpec) -> Result<Vec<usize>> {
    Ok(multiplicities(delta, field)?.lambda0)
}
