//! Brute-force oracles written straight from the definitions. They only use
//! the order sequences of a representation, never the crate's domination or
//! enumeration code.

#![allow(dead_code)]

use proptest::prelude::*;
use supsec::{Element, Face, Representation, SimplicialComplex};

/// Position of every element in every order, `positions[i][e]`.
pub fn positions(rep: &Representation) -> Vec<Vec<usize>> {
    rep.orders()
        .iter()
        .map(|o| {
            let mut pos = vec![0; rep.len()];
            for (p, e) in o.sequence().iter().enumerate() {
                pos[e.id()] = p;
            }
            pos
        })
        .collect()
}

pub fn members(face: Face) -> Vec<usize> {
    (0..64).filter(|&i| face.bits() >> i & 1 == 1).collect()
}

/// Every element dominates `face` in at least one of the first `k` orders.
pub fn is_face_prefix(pos: &[Vec<usize>], n: usize, k: usize, face: Face) -> bool {
    let fs = members(face);
    (0..n).all(|v| (0..k).any(|i| fs.iter().all(|&f| pos[i][f] <= pos[i][v])))
}

pub fn is_face(rep: &Representation, face: Face) -> bool {
    is_face_prefix(&positions(rep), rep.len(), rep.dimension(), face)
}

/// Σ over the first `k` orders by scanning all 2^n subsets.
pub fn section_prefix(rep: &Representation, k: usize) -> Vec<Face> {
    let pos = positions(rep);
    let n = rep.len();
    assert!(n <= 16, "oracle scans 2^n subsets");
    let mut out: Vec<Face> = (0u64..1 << n)
        .map(Face::from_bits)
        .filter(|&f| is_face_prefix(&pos, n, k, f))
        .collect();
    out.sort();
    out
}

pub fn section(rep: &Representation) -> Vec<Face> {
    section_prefix(rep, rep.dimension())
}

/// The ≤_d-least x with x strictly below max_{≤_i} F for every i < d.
pub fn psi(rep: &Representation, face: Face) -> Option<usize> {
    let pos = positions(rep);
    let d = rep.dimension();
    let fs = members(face);
    if fs.is_empty() {
        return None;
    }
    let top = |i: usize| fs.iter().map(|&f| pos[i][f]).max().unwrap();
    (0..rep.len())
        .filter(|&x| (0..d - 1).all(|i| pos[i][x] < top(i)))
        .min_by_key(|&x| pos[d - 1][x])
}

/// `n` elements and `d` uniform orders, for proptest.
pub fn representation(
    n: std::ops::RangeInclusive<usize>,
    d: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = Representation> {
    (n, d).prop_flat_map(|(n, d)| {
        let perm = Just((0..n).collect::<Vec<usize>>()).prop_shuffle();
        proptest::collection::vec(perm, d).prop_map(move |orders| {
            let names: Vec<Vec<String>> = orders
                .iter()
                .map(|o| o.iter().map(|i| format!("v{i}")).collect())
                .collect();
            Representation::from_names(&names).unwrap()
        })
    })
}

pub fn worked_example() -> Representation {
    Representation::from_names(&[
        ["a", "b", "e", "d", "c"],
        ["c", "b", "a", "d", "e"],
        ["e", "d", "c", "b", "a"],
    ])
    .unwrap()
}

pub fn face_of(rep: &Representation, names: &[&str]) -> Face {
    rep.ground().canonical_face(names).unwrap()
}

pub fn el(rep: &Representation, name: &str) -> Element {
    rep.ground().resolve(name).unwrap()
}

pub fn complex_of(faces: &[Face]) -> SimplicialComplex {
    SimplicialComplex::from_faces(faces.iter().copied()).unwrap()
}
