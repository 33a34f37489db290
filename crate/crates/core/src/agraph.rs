//! Attaching graphs: one vertex per boundary curve of the seed
//! neighbourhood, one edge per attached 1-handle.

use alloc::vec;
use alloc::vec::Vec;

/// Multigraph on seed face ids. Self-loops and repeated edges are kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

/// A connected component and whether it contains a cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphComponent {
    pub vertices: Vec<usize>,
    pub edge_count: usize,
    pub acyclic: bool,
}

impl AGraph {
    /// # Panics
    /// If an edge endpoint is not below `vertex_count`.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Self {
        assert!(
            edges
                .iter()
                .all(|&(a, b)| a < vertex_count && b < vertex_count),
            "edge endpoint out of range"
        );
        AGraph {
            vertex_count,
            edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Components ordered by smallest vertex; isolated vertices are their
    /// own components.
    pub fn components(&self) -> Vec<GraphComponent> {
        let mut sets = DisjointSets::new(self.vertex_count);
        let mut cyclic_roots = vec![false; self.vertex_count];
        let mut cycle_edges = Vec::new();
        for &(a, b) in &self.edges {
            if !sets.union(a, b) {
                cycle_edges.push(a);
            }
        }
        for a in cycle_edges {
            let r = sets.find(a);
            cyclic_roots[r] = true;
        }
        let mut index_of_root = vec![usize::MAX; self.vertex_count];
        let mut out: Vec<GraphComponent> = Vec::new();
        for v in 0..self.vertex_count {
            let r = sets.find(v);
            if index_of_root[r] == usize::MAX {
                index_of_root[r] = out.len();
                out.push(GraphComponent {
                    vertices: Vec::new(),
                    edge_count: 0,
                    acyclic: !cyclic_roots[r],
                });
            }
            out[index_of_root[r]].vertices.push(v);
        }
        for &(a, _) in &self.edges {
            let r = sets.find(a);
            out[index_of_root[r]].edge_count += 1;
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// `|E| - |V| + c`: the number of independent cycles.
    pub fn cyclomatic_number(&self) -> usize {
        self.edges.len() + self.component_count() - self.vertex_count
    }

    pub fn is_forest(&self) -> bool {
        self.cyclomatic_number() == 0
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count > 0 && self.is_forest() && self.component_count() == 1
    }

    /// Number of boundary curves left once every handle is attached, when
    /// the graph is a forest: every handle then joins two different curves,
    /// leaving one curve per component.
    pub fn predicted_boundary_count(&self) -> Option<usize> {
        self.is_forest().then(|| self.component_count())
    }

    /// Least and greatest possible number of boundary curves after
    /// attachment, `c` and `c + b₁`.
    ///
    /// A handle closing a cycle either splits a curve or rejoins two curves
    /// split by an earlier handle whose feet interleave with its own, so the
    /// exact count depends on the order of the feet along the curves. Every
    /// handle changes the count by one, so it has the parity of `c + b₁`.
    pub fn boundary_count_bounds(&self) -> (usize, usize) {
        let c = self.component_count();
        (c, c + self.cyclomatic_number())
    }
}

struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    /// Returns `false` when `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (big, small) = if self.size[ra] >= self.size[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        true
    }
}
