use alloc::vec::Vec;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;
use crate::subset::Subset;

/// Facets of maximal size `d`, joined when they share `d - 1` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HochsterHunekeGraph {
    pub vertices: Vec<Subset>,
    pub edges: Vec<(usize, usize)>,
    /// Component label of every vertex, numbered by first appearance.
    pub components: Vec<usize>,
    pub component_count: usize,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

pub fn hochster_huneke_graph(delta: &SimplicialComplex) -> Result<HochsterHunekeGraph> {
    let d = delta.krull_dim().ok_or(Error::VoidComplex)?;
    let vertices = delta.top_facets();
    let mut edges = Vec::new();
    let mut uf = UnionFind::new(vertices.len());
    for a in 0..vertices.len() {
        for b in a + 1..vertices.len() {
            if vertices[a].intersection(vertices[b]).len() + 1 == d {
                edges.push((a, b));
                uf.union(a, b);
            }
        }
    }
    let mut labels: Vec<Option<usize>> = alloc::vec![None; vertices.len()];
    let mut components = Vec::with_capacity(vertices.len());
    let mut count = 0;
    for v in 0..vertices.len() {
        let root = uf.find(v);
        let label = *labels[root].get_or_insert_with(|| {
            count += 1;
            count - 1
        });
        components.push(label);
    }
    Ok(HochsterHunekeGraph { vertices, edges, components, component_count: count })
}

/// `lambda_{d,d}` as the number of connected components.
pub fn highest_lyu_via_graph(delta: &SimplicialComplex) -> Result<usize> {
    Ok(hochster_huneke_graph(delta)?.component_count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn examples() {
        let jumping_complex =
            SimplicialComplex::from_vertex_lists(5, &[&[2, 3, 4], &[0, 3, 4], &[0, 1, 4], &[0, 1, 2]]).unwrap();
        let g = hochster_huneke_graph(&jumping_complex).unwrap();
        assert_eq!(g.vertices.len(), 4);
        assert_eq!(g.edges.len(), 3);
        assert_eq!(g.component_count, 1);
        let lk = jumping_complex.link(Subset::singleton(2)).unwrap();
        let g = hochster_huneke_graph(&lk).unwrap();
        assert_eq!((g.vertices.len(), g.edges.len(), g.component_count), (2, 0, 2));
        assert_eq!(g.components, vec![0, 1]);
        let g = hochster_huneke_graph(&SimplicialComplex::simplex(3)).unwrap();
        assert_eq!((g.vertices.len(), g.edges.len(), g.component_count), (1, 0, 1));
        assert_eq!(highest_lyu_via_graph(&SimplicialComplex::void(2)), Err(Error::VoidComplex));
    }

    #[test]
    fn lower_dimensional_facets_are_ignored() {
        // two triangles sharing a vertex plus an edge bridging them
        let d = SimplicialComplex::from_vertex_lists(6, &[&[0, 1, 2], &[2, 3, 4], &[1, 3], &[5]]).unwrap();
        assert_eq!(highest_lyu_via_graph(&d).unwrap(), 2);
    }
}
