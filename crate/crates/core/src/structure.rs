//! Zero-pattern structure: irreducibility, atoms, the atomic part and
//! diagonal similarity.
//!
//! The digraph of `K` has an edge `i → j` whenever `K_ij ≠ 0`. `K` is
//! irreducible when that digraph is strongly connected, and its atoms (the
//! maximal irreducible index sets) are the strongly connected components.
//! A single index always forms an irreducible set, whatever its diagonal
//! entry.

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use crate::error::Result;
use crate::matrix::{same_dim, Matrix};
use crate::subset::IndexSet;

/// Directed adjacency structure of a square matrix; self-loops allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    succ: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn successors(&self, i: usize) -> &[usize] {
        &self.succ[i]
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.succ[i].binary_search(&j).is_ok()
    }

    /// All edges `(i, j)`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(i, s)| s.iter().map(move |&j| (i, j)))
            .collect()
    }

    /// Strongly connected components, each sorted, ordered by smallest member.
    pub fn strongly_connected_components(&self) -> Partition {
        let mut g = DiGraph::<(), ()>::with_capacity(self.n, 0);
        let nodes: Vec<NodeIndex> = (0..self.n).map(|_| g.add_node(())).collect();
        for (i, j) in self.edges() {
            g.add_edge(nodes[i], nodes[j], ());
        }
        let mut blocks: Vec<IndexSet> = tarjan_scc(&g)
            .into_iter()
            .map(|comp| {
                let members: Vec<usize> = comp.into_iter().map(|v| v.index()).collect();
                IndexSet::new(self.n, &members).expect("component within range")
            })
            .collect();
        blocks.sort_by_key(|b| b.members().next());
        Partition { blocks }
    }
}

/// Edge `(i, j)` iff `|K_ij| > pattern_tol`.
pub fn adjacency_digraph(k: &Matrix, pattern_tol: f64) -> Digraph {
    let n = k.dim();
    let succ = (0..n)
        .map(|i| (0..n).filter(|&j| k[(i, j)].abs() > pattern_tol).collect())
        .collect();
    Digraph { n, succ }
}

/// Disjoint blocks covering `{0, …, n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<IndexSet>,
}

impl Partition {
    pub fn blocks(&self) -> &[IndexSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Index of the block holding `i`.
    pub fn block_of(&self, i: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(i))
    }
}

pub fn is_irreducible(k: &Matrix) -> bool {
    atoms(k).len() == 1
}

/// The maximal irreducible index sets of `K` (exact zero pattern).
pub fn atoms(k: &Matrix) -> Partition {
    adjacency_digraph(k, 0.0).strongly_connected_components()
}

/// `K^𝒜`: keeps `K_ij` when `i` and `j` lie in the same atom, zero otherwise.
pub fn atomic_part(k: &Matrix) -> Matrix {
    let part = atoms(k);
    let owner: Vec<usize> = (0..k.dim())
        .map(|i| part.block_of(i).expect("partition covers every index"))
        .collect();
    Matrix::from_fn(
        k.dim(),
        |i, j| {
            if owner[i] == owner[j] {
                k[(i, j)]
            } else {
                0.0
            }
        },
    )
}

/// `K = K^𝒜`: every path `i ⇝ j` has a return path `j ⇝ i`.
pub fn is_completely_reducible(k: &Matrix) -> bool {
    atomic_part(k) == *k
}

/// Diagonal `d` with `K = Diag(d)·K̃·Diag(d)⁻¹`.
#[derive(Debug, Clone, PartialEq)]
pub struct SimilarityWitness {
    /// `d_i`, normalized to 1 at the smallest index of each weakly
    /// connected component of the pattern graph.
    pub d: Vec<f64>,
    /// `max_ij |K_ij·d_j - d_i·K̃_ij| / max(1, ‖K‖_max, ‖K̃‖_max)`.
    pub residual: f64,
}

impl SimilarityWitness {
    /// Whether every `d_i` is positive; always the case for nonnegative inputs.
    pub fn is_positive(&self) -> bool {
        self.d.iter().all(|&x| x > 0.0)
    }
}

/// Searches for a nonsingular diagonal `D` with `K = D·K̃·D⁻¹`.
///
/// The zero patterns must agree exactly. `d` is propagated along a spanning
/// forest of the undirected pattern graph (`d_j = d_i·K̃_ij / K_ij` along
/// `i → j`, the reverse ratio along `j → i`), then checked against every
/// entry, which amounts to checking that all cycle products agree. Returns
/// `None` when the patterns differ or the residual exceeds `tol`.
pub fn diagonal_similarity_witness(
    k: &Matrix,
    kt: &Matrix,
    tol: f64,
) -> Result<Option<SimilarityWitness>> {
    same_dim(k, kt)?;
    let n = k.dim();
    let nonzero = |i: usize, j: usize| k[(i, j)] != 0.0;
    for i in 0..n {
        for j in 0..n {
            if nonzero(i, j) != (kt[(i, j)] != 0.0) {
                return Ok(None);
            }
        }
    }

    let mut d: Vec<Option<f64>> = vec![None; n];
    for root in 0..n {
        if d[root].is_some() {
            continue;
        }
        d[root] = Some(1.0);
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            let du = d[u].expect("visited");
            for x in 0..n {
                if x == u || d[x].is_some() {
                    continue;
                }
                let dx = if nonzero(u, x) {
                    du * kt[(u, x)] / k[(u, x)]
                } else if nonzero(x, u) {
                    du * k[(x, u)] / kt[(x, u)]
                } else {
                    continue;
                };
                d[x] = Some(dx);
                stack.push(x);
            }
        }
    }
    let d: Vec<f64> = d
        .into_iter()
        .map(|x| x.expect("every vertex rooted"))
        .collect();
    if d.iter().any(|x| !x.is_finite() || *x == 0.0) {
        return Ok(None);
    }

    let scale = 1f64.max(k.max_abs()).max(kt.max_abs());
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            worst = worst.max((k[(i, j)] * d[j] - d[i] * kt[(i, j)]).abs());
        }
    }
    let residual = worst / scale;
    Ok((residual <= tol).then_some(SimilarityWitness { d, residual }))
}
