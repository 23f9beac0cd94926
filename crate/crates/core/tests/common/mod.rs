#![allow(dead_code)]

use std::sync::Arc;

use proptest::prelude::*;
use quiverstab_core::{DimVector, Field, Matrix, Quiver, Representation, StabilityWeights};

/// Small quivers: A2, A3, the Kronecker quiver, a vertex with a loop, and
/// an oriented 2-cycle.
pub fn quivers() -> Vec<Arc<Quiver>> {
    vec![
        Arc::new(Quiver::path(2)),
        Arc::new(Quiver::path(3)),
        Arc::new(Quiver::kronecker(2)),
        Arc::new(Quiver::from_edges(2, &[(0, 0), (0, 1)]).unwrap()),
        Arc::new(Quiver::from_edges(2, &[(0, 1), (1, 0)]).unwrap()),
    ]
}

fn entries(n: usize, p: u64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(0..p as i64, n)
}

/// A representation over `F_p` (`p` in {2, 3}) with every dimension at most
/// `max_dim`.
pub fn representation(max_dim: usize) -> impl Strategy<Value = Representation> {
    let qs = quivers();
    (0..qs.len(), prop::sample::select(vec![2u64, 3]))
        .prop_flat_map(move |(qi, p)| {
            let q = qs[qi].clone();
            let n = q.vertex_count();
            (Just(q), Just(p), prop::collection::vec(0..=max_dim, n))
        })
        .prop_filter("nonzero", |(_, _, d)| d.iter().any(|&x| x > 0))
        .prop_flat_map(|(q, p, d)| {
            let shapes: Vec<(usize, usize)> = q.arrows().iter().map(|a| (d[a.target], d[a.source])).collect();
            let maps: Vec<_> = shapes.iter().map(|&(r, c)| entries(r * c, p)).collect();
            (Just(q), Just(p), Just(d), maps, Just(shapes))
        })
        .prop_map(|(q, p, d, data, shapes)| {
            let f = Field::prime(p).unwrap();
            let maps =
                shapes.iter().zip(&data).map(|(&(r, c), xs)| Matrix::from_i64(f, r, c, xs).unwrap()).collect();
            Representation::new(q, f, DimVector(d), maps).unwrap()
        })
}

pub fn weights(n: usize) -> impl Strategy<Value = StabilityWeights> {
    (prop::collection::vec(-3i64..=3, n), prop::collection::vec(1i64..=3, n))
        .prop_map(|(t, s)| StabilityWeights::new(t, s).unwrap())
}

/// A representation together with random weights on its quiver.
pub fn weighted_representation(max_dim: usize) -> impl Strategy<Value = (Representation, StabilityWeights)> {
    representation(max_dim).prop_flat_map(|rep| {
        let n = rep.quiver().vertex_count();
        (Just(rep), weights(n))
    })
}
