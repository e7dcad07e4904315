//! Unimodular refinement: inserting primitive vectors along each edge until
//! every consecutive determinant is `±1`.
//!
//! For an edge with normalization matrix `P` and expansion terms
//! `n_1, ..., n_l`, the inserted vectors are
//!
//! ```text
//! w_j = P * [[0,-1],[1,n_1]] * ... * [[0,-1],[1,n_j]] * (1, 0)^T,
//! ```
//!
//! giving the chain `v_i = w_0, w_1, ..., w_l, w_{l+1} = v_{i+1}` in which
//! every consecutive determinant equals `eps_i / |eps_i|`.

use num_traits::Signed;

use crate::analysis::{analyze_loop, EdgeAnalysis, VectorLoop};
use crate::contfrac::hj_factor;
use crate::lattice::LatticeVector;

/// Where a vertex of the enlarged loop came from. Indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexOrigin {
    /// Vertex `i` of the original loop.
    Original { vertex: usize },
    /// The `position`-th vector inserted along original edge `edge`.
    Inserted { edge: usize, position: usize },
}

/// A loop together with its unimodular enlargement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnimodularRefinement {
    original: VectorLoop,
    inserted: Vec<Vec<LatticeVector>>,
    enlarged: VectorLoop,
    origins: Vec<VertexOrigin>,
}

impl UnimodularRefinement {
    pub fn original(&self) -> &VectorLoop {
        &self.original
    }

    /// Vectors inserted along the 0-based edge `k`, in path order.
    pub fn inserted(&self) -> &[Vec<LatticeVector>] {
        &self.inserted
    }

    /// The enlarged loop: each original vertex followed by its edge's
    /// inserted vectors. Every consecutive determinant is `±1`.
    pub fn enlarged(&self) -> &VectorLoop {
        &self.enlarged
    }

    /// Provenance of each enlarged-loop vertex, parallel to
    /// `enlarged().vertices()`.
    pub fn origins(&self) -> &[VertexOrigin] {
        &self.origins
    }
}

/// Computes the vectors `w_1, ..., w_l` inserted along one edge; empty when
/// `l = 0`. Panics if an internal identity fails, which signals a bug rather
/// than bad input.
pub fn refine_edge(edge: &EdgeAnalysis) -> Vec<LatticeVector> {
    let terms = edge.terms();
    let mut inserted = Vec::with_capacity(terms.len());
    let mut running = edge.p.clone();
    for n in terms {
        // with j-1 factors applied, the (0,1)-column expression for w_j
        let overlap = running.col(1);
        running = &running * &hj_factor(n);
        let w = running.col(0);
        assert_eq!(w, overlap, "refinement overlap identity failed");
        inserted.push(w);
    }
    // with all l factors applied the (0,1)-column must land on the edge's
    // second endpoint P * (-x, |eps|)^T
    let end = LatticeVector {
        x: -edge.x.clone(),
        y: edge.epsilon.abs(),
    };
    assert_eq!(
        running.col(1),
        edge.p.mul_vec(&end),
        "refinement endpoint identity failed"
    );
    inserted
}

/// Refines every edge and stitches the enlarged loop together.
pub fn refine_loop(vl: &VectorLoop) -> UnimodularRefinement {
    let edges = analyze_loop(vl);
    let inserted: Vec<Vec<LatticeVector>> = edges.iter().map(refine_edge).collect();
    let mut vertices = Vec::with_capacity(vl.d() + inserted.iter().map(Vec::len).sum::<usize>());
    let mut origins = Vec::with_capacity(vertices.capacity());
    for (k, v) in vl.vertices().iter().enumerate() {
        vertices.push(v.clone());
        origins.push(VertexOrigin::Original { vertex: k + 1 });
        for (j, w) in inserted[k].iter().enumerate() {
            vertices.push(w.clone());
            origins.push(VertexOrigin::Inserted {
                edge: k + 1,
                position: j + 1,
            });
        }
    }
    let enlarged = VectorLoop::new(vertices).expect("refined loop is a valid loop");
    assert!(enlarged.is_unimodular(), "refined loop is unimodular");
    UnimodularRefinement {
        original: vl.clone(),
        inserted,
        enlarged,
        origins,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn v(x: i64, y: i64) -> LatticeVector {
        LatticeVector::new(x, y)
    }

    fn golden_loop() -> VectorLoop {
        VectorLoop::new(vec![v(1, 0), v(1, 3), v(-2, -1), v(-2, 1), v(5, -3)]).unwrap()
    }

    fn square_loop() -> VectorLoop {
        VectorLoop::new(vec![v(1, 0), v(0, 1), v(-1, 0), v(0, -1)]).unwrap()
    }

    #[test]
    fn unit_determinant_edge_inserts_nothing() {
        let edges = analyze_loop(&square_loop());
        for e in &edges {
            assert!(refine_edge(e).is_empty());
        }
        let refinement = refine_loop(&square_loop());
        assert_eq!(refinement.enlarged(), &square_loop());
    }

    #[test]
    fn golden_edge_insertions() {
        let edges = analyze_loop(&golden_loop());
        // edge 1: eps = 3, terms [2, 2]
        assert_eq!(refine_edge(&edges[0]), vec![v(1, 1), v(1, 2)]);
        // edge 3: eps = -4, terms [4]
        assert_eq!(refine_edge(&edges[2]), vec![v(-1, 0)]);
        // edge 5: eps = 3, terms [3]
        assert_eq!(refine_edge(&edges[4]), vec![v(2, -1)]);
    }

    #[test]
    fn golden_refinement_stitches_eleven_vertices() {
        let refinement = refine_loop(&golden_loop());
        let enlarged = refinement.enlarged();
        assert_eq!(enlarged.d(), 11);
        assert!(enlarged.is_unimodular());
        assert_eq!(
            enlarged.vertices(),
            [
                v(1, 0),
                v(1, 1),
                v(1, 2),
                v(1, 3),
                v(0, 1),
                v(-1, 0),
                v(-2, -1),
                v(-1, 0),
                v(-2, 1),
                v(5, -3),
                v(2, -1),
            ]
        );
        assert_eq!(
            refinement.origins()[..5],
            [
                VertexOrigin::Original { vertex: 1 },
                VertexOrigin::Inserted { edge: 1, position: 1 },
                VertexOrigin::Inserted { edge: 1, position: 2 },
                VertexOrigin::Original { vertex: 2 },
                VertexOrigin::Inserted { edge: 2, position: 1 },
            ]
        );
    }

    #[test]
    fn per_edge_determinants_carry_the_edge_sign() {
        let vl = golden_loop();
        let edges = analyze_loop(&vl);
        let vs = vl.vertices();
        for (k, e) in edges.iter().enumerate() {
            let mut chain = vec![vs[k].clone()];
            chain.extend(refine_edge(e));
            chain.push(vs[(k + 1) % vl.d()].clone());
            let sign = e.epsilon.signum();
            for pair in chain.windows(2) {
                assert_eq!(pair[0].det(&pair[1]), sign);
            }
            // interior three-term relation: w_{j-1} + w_{j+1} = n_j * w_j
            for (j, n) in e.terms().iter().enumerate() {
                let lhs = &chain[j] + &chain[j + 2];
                assert_eq!(lhs, chain[j + 1].scaled(n));
            }
        }
    }

    #[test]
    fn inserted_vectors_are_primitive() {
        let refinement = refine_loop(&golden_loop());
        assert_eq!(refinement.original(), &golden_loop());
        for ws in refinement.inserted() {
            for w in ws {
                assert!(w.is_primitive());
            }
        }
    }
}
