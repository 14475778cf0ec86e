//! Lyubeznik tables, Hochster-Huneke graphs, composition-factor
//! multiplicities and the Bass-number bound of Stanley-Reisner rings.
//!
//! Everything is read off the modules `Ext^{n-j}_S(K[Delta], omega_S)` and
//! their own `Ext` modules. [`LocalCohomology`] computes the inner modules
//! once and serves all derived invariants.

mod graph;
mod multiplicity;
mod table;

use alloc::format;
use alloc::vec::Vec;

pub use graph::{highest_lyu_via_graph, hochster_huneke_graph, HochsterHunekeGraph};
pub use multiplicity::{generalized_lyu, multiplicities, multiplicities_from_dual_betti, MultiplicityTable};
pub use table::{is_trivial_table, LyubeznikTable};

use crate::error::{Error, Result};
use crate::linalg::{Field, FieldSpec};
use crate::monomial::MonomialIdeal;
use crate::simplicial::SimplicialComplex;
use crate::sqfree::{ext_all, ext_dims_at, koszul_tor_all, SquarefreeModule};
use crate::subset::Subset;
use crate::with_field;

/// `K[Delta]` together with all of `Ext^{n-j}_S(K[Delta], omega_S)`,
/// `j = 0..=n`.
#[derive(Clone, Debug)]
pub struct LocalCohomology<F: Field> {
    delta: SimplicialComplex,
    exts: Vec<SquarefreeModule<F>>,
}

impl<F: Field> LocalCohomology<F> {
    pub fn new(field: F, delta: &SimplicialComplex) -> Result<Self> {
        if delta.is_void() {
            return Err(Error::VoidComplex);
        }
        let module = SquarefreeModule::from_complex(field, delta);
        Ok(LocalCohomology { delta: delta.clone(), exts: ext_all(&module) })
    }

    pub fn field(&self) -> &F {
        self.exts[0].field()
    }

    pub fn delta(&self) -> &SimplicialComplex {
        &self.delta
    }

    pub fn n(&self) -> usize {
        self.delta.n()
    }

    /// `Ext^{n-j}_S(K[Delta], omega_S)`.
    pub fn ext(&self, j: usize) -> &SquarefreeModule<F> {
        &self.exts[j]
    }

    pub fn exts(&self) -> &[SquarefreeModule<F>] {
        &self.exts
    }

    /// `dim [Ext^{n-i}(Ext^{n-j}(K[Delta], omega), omega)]_tau` for `i = 0..=n`.
    pub fn iterated_ext_dims(&self, j: usize, tau: Subset) -> Vec<usize> {
        ext_dims_at(&self.exts[j], tau)
    }

    /// The table at the `m`-adic localization.
    pub fn table(&self) -> LyubeznikTable {
        self.graded_table(Subset::EMPTY).expect("the empty set is a face of a nonvoid complex")
    }

    /// Table of the localization at the prime `(x_i : i not in face)`, read
    /// from the degree-`face` components with both indices raised by
    /// `#face`. Entries beyond the local dimension must vanish.
    pub fn graded_table(&self, face: Subset) -> Result<LyubeznikTable> {
        if !face.is_subset_of(self.delta.ground()) || !self.delta.is_face(face) {
            return Err(Error::NotAFace(face));
        }
        let n = self.n();
        let shift = face.len();
        let d = self.delta.link(face)?.krull_dim().expect("links of faces are nonvoid");
        let mut entries = alloc::vec![alloc::vec![0; d + 1]; d + 1];
        for j in 0..=n - shift {
            let dims = self.iterated_ext_dims(j + shift, face);
            for i in 0..=n - shift {
                let v = dims[i + shift];
                if i <= d && j <= d {
                    entries[i][j] = v;
                } else if v != 0 {
                    return Err(Error::InternalInconsistency(format!(
                        "entry ({i},{j}) = {v} at face {face} lies beyond the local dimension {d}"
                    )));
                }
            }
        }
        Ok(LyubeznikTable::new(d, entries, self.field().spec()))
    }

    /// Localized table computed twice: from graded components and from the
    /// link on the remaining vertices. The two must agree.
    pub fn table_at_face(&self, face: Subset) -> Result<LyubeznikTable> {
        let graded = self.graded_table(face)?;
        let direct = link_table(self.field().clone(), &self.delta, face)?;
        if graded != direct {
            return Err(Error::InternalInconsistency(format!(
                "at face {face}: graded components give {graded:?}, the link gives {direct:?}"
            )));
        }
        Ok(graded)
    }

    /// `m_{j,sigma} = dim [Ext^j_S(K[Delta], omega_S)]_{[n] \ sigma}`, derived
    /// sums included. No cross-check.
    pub fn multiplicities(&self) -> MultiplicityTable {
        MultiplicityTable::from_exts(&self.exts)
    }

    /// Largest total Betti number of any `Ext^j(K[Delta], omega_S)`.
    pub fn bound_b(&self) -> usize {
        self.exts.iter().flat_map(|e| koszul_tor_all(e).into_iter().map(|t| t.total)).max().unwrap_or(0)
    }
}

/// Table of `lk face` in the polynomial ring on the vertices outside `face`.
fn link_table<F: Field>(field: F, delta: &SimplicialComplex, face: Subset) -> Result<LyubeznikTable> {
    let rest = face.complement(delta.n());
    let link = delta.link(face)?.compress(rest)?;
    Ok(LocalCohomology::new(field, &link)?.table())
}

/// `lambda_{i,j}(K[Delta]) = dim [Ext^{n-i}(Ext^{n-j}(K[Delta], omega), omega)]_0`.
pub fn lyubeznik_table(delta: &SimplicialComplex, field: FieldSpec) -> Result<LyubeznikTable> {
    with_field!(field, |f| Ok(LocalCohomology::new(f, delta)?.table()))
}

/// Table of `K[Delta]` localized at `(x_i : i not in face)`.
pub fn lyubeznik_table_at_face(delta: &SimplicialComplex, face: Subset, field: FieldSpec) -> Result<LyubeznikTable> {
    with_field!(field, |f| LocalCohomology::new(f, delta)?.table_at_face(face))
}

/// Table of `S/I`, which depends only on `sqrt(I)`.
pub fn lyubeznik_table_monomial(ideal: &MonomialIdeal, field: FieldSpec) -> Result<LyubeznikTable> {
    lyubeznik_table(&ideal.radical().stanley_reisner()?, field)
}

/// `B`: the largest `dim Tor_i(K, Ext^j_S(K[Delta], omega_S))`.
pub fn bound_b(delta: &SimplicialComplex, field: FieldSpec) -> Result<usize> {
    with_field!(field, |f| Ok(LocalCohomology::new(f, delta)?.bound_b()))
}
