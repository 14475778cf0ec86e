//! Squarefree modules over `S = K[x_1, ..., x_n]`.
//!
//! A squarefree module is determined by its components `M_sigma` for
//! `sigma` a subset of `[n]` together with the multiplication maps
//! `x_i : M_sigma -> M_{sigma + i}` for `i` outside `sigma`. Only components
//! of positive dimension are stored; an absent multiplication map is zero.

mod dual;
mod koszul;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

pub use dual::{dual_complex, ext_all, ext_dims_at, ext_sq, DualSlice, SqComplex};
pub use koszul::{koszul_slice, koszul_tor_all, koszul_tor_dim_at, koszul_tor_dims, KoszulTor};

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};
use crate::simplicial::SimplicialComplex;
use crate::subset::Subset;
use crate::MAX_VARIABLES;

#[derive(Clone, Debug, PartialEq)]
pub struct SquarefreeModule<F: Field> {
    field: F,
    n: usize,
    dims: BTreeMap<Subset, usize>,
    mult: BTreeMap<(Subset, usize), Matrix<F::Elem>>,
}

impl<F: Field> SquarefreeModule<F> {
    /// Validates shapes and the commuting squares. Zero dimensions may be
    /// listed and are dropped.
    pub fn new(
        field: F,
        n: usize,
        dims: impl IntoIterator<Item = (Subset, usize)>,
        mult: impl IntoIterator<Item = ((Subset, usize), Matrix<F::Elem>)>,
    ) -> Result<Self> {
        if n > MAX_VARIABLES {
            return Err(Error::TooManyVariables { count: n, max: MAX_VARIABLES });
        }
        let ground = Subset::full(n);
        let mut dim_map = BTreeMap::new();
        for (sigma, d) in dims {
            if !sigma.is_subset_of(ground) {
                let vertex = sigma.difference(ground).iter().next().unwrap_or(0);
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            if d > 0 {
                dim_map.insert(sigma, d);
            }
        }
        let mut module = SquarefreeModule { field, n, dims: dim_map, mult: BTreeMap::new() };
        for ((sigma, i), m) in mult {
            if i >= n {
                return Err(Error::VertexOutOfRange { vertex: i, n });
            }
            if sigma.contains(i) {
                return Err(Error::ShapeMismatch(format!("x{} already divides degree {sigma}", i + 1)));
            }
            let expected = (module.dim(sigma.with(i)), module.dim(sigma));
            if m.shape() != expected {
                return Err(Error::ShapeMismatch(format!(
                    "multiplication by x{} at {sigma} is {:?}, expected {:?}",
                    i + 1,
                    m.shape(),
                    expected
                )));
            }
            if expected.0 > 0 && expected.1 > 0 && !m.is_zero(&module.field) {
                module.mult.insert((sigma, i), m);
            }
        }
        module.check_commuting_squares()?;
        Ok(module)
    }

    pub(crate) fn from_parts(
        field: F,
        n: usize,
        dims: BTreeMap<Subset, usize>,
        mult: BTreeMap<(Subset, usize), Matrix<F::Elem>>,
    ) -> Self {
        SquarefreeModule { field, n, dims, mult }
    }

    pub fn zero(field: F, n: usize) -> Self {
        SquarefreeModule { field, n, dims: BTreeMap::new(), mult: BTreeMap::new() }
    }

    /// `K[Delta] = S / I_Delta`.
    pub fn from_complex(field: F, delta: &SimplicialComplex) -> Self {
        let n = delta.n();
        let faces = delta.faces();
        let face_set: BTreeSet<Subset> = faces.iter().copied().collect();
        let one = Matrix::identity(&field, 1);
        let mut mult = BTreeMap::new();
        for &sigma in &faces {
            for i in sigma.complement(n).iter() {
                if face_set.contains(&sigma.with(i)) {
                    mult.insert((sigma, i), one.clone());
                }
            }
        }
        let dims = faces.into_iter().map(|s| (s, 1)).collect();
        SquarefreeModule { field, n, dims, mult }
    }

    /// `omega_S = S(-1)`: one dimension in degree `[n]`.
    pub fn canonical_module(field: F, n: usize) -> Self {
        let mut dims = BTreeMap::new();
        dims.insert(Subset::full(n), 1);
        SquarefreeModule { field, n, dims, mult: BTreeMap::new() }
    }

    /// `K = S / m`.
    pub fn residue_field(field: F, n: usize) -> Self {
        let mut dims = BTreeMap::new();
        dims.insert(Subset::EMPTY, 1);
        SquarefreeModule { field, n, dims, mult: BTreeMap::new() }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self, sigma: Subset) -> usize {
        self.dims.get(&sigma).copied().unwrap_or(0)
    }

    /// Dimension of the component in an arbitrary degree `alpha` in `N^n`,
    /// which equals that of `M_{supp alpha}`.
    pub fn dim_at(&self, alpha: &[u32]) -> usize {
        self.dim(support(alpha))
    }

    /// Degrees with a nonzero component and their dimensions.
    pub fn dims(&self) -> &BTreeMap<Subset, usize> {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    /// Multiplication by `x_i` on `M_sigma`; `None` stands for the zero map.
    pub fn mult_ref(&self, sigma: Subset, i: usize) -> Option<&Matrix<F::Elem>> {
        self.mult.get(&(sigma, i))
    }

    /// Multiplication by `x_i` on `M_sigma` as a `dim(sigma + i) x dim(sigma)`
    /// matrix.
    pub fn mult(&self, sigma: Subset, i: usize) -> Matrix<F::Elem> {
        match self.mult.get(&(sigma, i)) {
            Some(m) => m.clone(),
            None => Matrix::zeros(&self.field, self.dim(sigma.with(i)), self.dim(sigma)),
        }
    }

    /// Every subset of a degree with a nonzero component, ordered by size and
    /// then by bitmask.
    pub fn down_closure(&self) -> Vec<Subset> {
        let mut set = BTreeSet::new();
        for &sigma in self.dims.keys() {
            if set.contains(&(sigma.len(), sigma)) {
                continue;
            }
            for tau in sigma.subsets() {
                set.insert((tau.len(), tau));
            }
        }
        set.into_iter().map(|(_, t)| t).collect()
    }

    /// `x_j x_i = x_i x_j` on every component.
    pub fn check_commuting_squares(&self) -> Result<()> {
        let f = &self.field;
        for &sigma in self.dims.keys() {
            let outside: Vec<usize> = sigma.complement(self.n).iter().collect();
            for (a, &i) in outside.iter().enumerate() {
                for &j in &outside[a + 1..] {
                    if self.dim(sigma.with(i).with(j)) == 0 {
                        continue;
                    }
                    // entries are canonical, so equality is exact
                    let equal = match (self.path(sigma, i, j), self.path(sigma, j, i)) {
                        (Some(p), Some(q)) => p == q,
                        (Some(p), None) | (None, Some(p)) => p.is_zero(f),
                        (None, None) => true,
                    };
                    if !equal {
                        return Err(Error::NotCommutative { sigma, i, j });
                    }
                }
            }
        }
        Ok(())
    }

    /// `x_second x_first` on `M_sigma`, or `None` if a factor is zero.
    fn path(&self, sigma: Subset, first: usize, second: usize) -> Option<Matrix<F::Elem>> {
        let a = self.mult.get(&(sigma, first))?;
        let b = self.mult.get(&(sigma.with(first), second))?;
        Some(b.mul(&self.field, a).expect("shapes are validated"))
    }

    /// `l_sigma(M)`: the module over `K[x_i : i in sigma]` with
    /// `(l_sigma M)_tau = M_{sigma^c + tau}`. The result lives on `[#sigma]`.
    pub fn link_functor(&self, sigma: Subset) -> Result<Self> {
        let ground = Subset::full(self.n);
        if !sigma.is_subset_of(ground) {
            let vertex = sigma.difference(ground).iter().next().unwrap_or(0);
            return Err(Error::VertexOutOfRange { vertex, n: self.n });
        }
        let outside = sigma.complement(self.n);
        let dims = self
            .dims
            .iter()
            .filter(|(rho, _)| outside.is_subset_of(**rho))
            .map(|(rho, &d)| (rho.difference(outside).compress(sigma), d))
            .collect();
        let mult = self
            .mult
            .iter()
            .filter(|((rho, _), _)| outside.is_subset_of(*rho))
            .map(|(&(rho, i), m)| {
                let i_local = Subset::singleton(i).compress(sigma).iter().next().expect("i lies in sigma");
                ((rho.difference(outside).compress(sigma), i_local), m.clone())
            })
            .collect();
        Ok(SquarefreeModule { field: self.field.clone(), n: sigma.len(), dims, mult })
    }

    /// Same dimensions in every degree and equal multiplication maps. This
    /// is equality of the stored data, not isomorphism.
    pub fn same_data(&self, other: &Self) -> bool {
        self.n == other.n && self.dims == other.dims && self.mult == other.mult
    }
}

fn support(alpha: &[u32]) -> Subset {
    Subset::from_elements(alpha.iter().enumerate().filter(|(_, &a)| a > 0).map(|(i, _)| i))
}
