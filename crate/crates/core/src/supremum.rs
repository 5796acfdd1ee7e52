//! Domination and the supremum section of a representation.
//!
//! An element `x` dominates a set `F` in a linear order when every member of
//! `F` is at most `x`, and dominates `F` in a representation when it does so
//! in at least one of the orders. The supremum section `Σ(R)` collects the
//! subsets of the ground set dominated by every element.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::{Element, Face};
use crate::order::{LinearOrder, Representation};

pub fn dominates_in_order(x: Element, face: Face, order: &LinearOrder) -> bool {
    order.dominates(x, face)
}

pub fn dominates(x: Element, face: Face, rep: &Representation) -> bool {
    rep.orders().iter().any(|o| o.dominates(x, face))
}

/// Elements that fail to dominate `face` in every one of `orders`: those
/// strictly below the maximum of `face` in each order.
///
/// Always empty for the empty face.
pub(crate) fn undominated(face: Face, orders: &[LinearOrder], universe: Face) -> Face {
    if face.is_empty() {
        return Face::EMPTY;
    }
    let mut acc = universe;
    for order in orders {
        let top = order.max_of(face).expect("nonempty face");
        acc = acc.intersection(order.strictly_below(top));
        if acc.is_empty() {
            break;
        }
    }
    acc
}

pub fn is_face(face: Face, rep: &Representation) -> bool {
    undominated(face, rep.orders(), rep.ground().all()).is_empty()
}

/// `Σ` of an order list over `0..n`.
///
/// Faces are produced by cardinality. A candidate of size `k` is only formed
/// by extending a face of size `k - 1` with an element above its largest id,
/// and sizes stop at the number of orders, since each member of a face must
/// be the face's maximum in some order.
pub(crate) fn section_of_orders(n: usize, orders: &[LinearOrder]) -> SimplicialComplex {
    let universe = Face::full(n);
    let mut faces = vec![Face::EMPTY];
    let mut frontier = vec![Face::EMPTY];
    for _ in 1..=orders.len().min(n) {
        let mut next = Vec::new();
        for &f in &frontier {
            let start = f.last().map_or(0, |e| e.id() + 1);
            for id in start..n {
                let g = f.with(Element::new(id));
                if undominated(g, orders, universe).is_empty() {
                    next.push(g);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        faces.extend_from_slice(&next);
        frontier = next;
    }
    SimplicialComplex::from_faces_unchecked(faces)
}

pub fn supremum_section(rep: &Representation) -> SimplicialComplex {
    section_of_orders(rep.len(), rep.orders())
}

/// `Σ` of every prefix `(≤₁)`, `(≤₁, ≤₂)`, …, `R`, in that order.
pub fn prefix_sections(rep: &Representation) -> Vec<SimplicialComplex> {
    (1..=rep.dimension())
        .map(|k| section_of_orders(rep.len(), &rep.orders()[..k]))
        .collect()
}

pub fn drop_last_order(rep: &Representation) -> Result<Representation> {
    rep.drop_last_order()
}

/// Whether every face of `complex` is a face of `Σ(R)`. Vertex ids of
/// `complex` refer to the ground set of `rep`.
pub fn contains_complex(complex: &SimplicialComplex, rep: &Representation) -> Result<bool> {
    let outside = complex.vertices().difference(rep.ground().all());
    if let Some(v) = outside.iter().next() {
        return Err(Error::Domain(format!(
            "vertex {} is outside a ground set of {} elements",
            v.id(),
            rep.len()
        )));
    }
    // closure of both sides reduces this to the facets
    Ok(complex.facets().into_iter().all(|f| is_face(f, rep)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> Representation {
        Representation::from_names(&[
            ["a", "b", "e", "d", "c"],
            ["c", "b", "a", "d", "e"],
            ["e", "d", "c", "b", "a"],
        ])
        .unwrap()
    }

    fn face(rep: &Representation, names: &[&str]) -> Face {
        rep.ground().canonical_face(names).unwrap()
    }

    fn el(rep: &Representation, name: &str) -> Element {
        rep.ground().resolve(name).unwrap()
    }

    #[test]
    fn domination_in_a_single_order() {
        let r = example();
        let first = &r.orders()[0];
        assert!(dominates_in_order(el(&r, "b"), face(&r, &["a", "b"]), first));
        assert!(!dominates_in_order(el(&r, "b"), face(&r, &["a", "b", "c"]), first));
        for x in r.ground().elements() {
            assert!(dominates_in_order(x, Face::EMPTY, first));
        }
    }

    #[test]
    fn domination_in_the_representation() {
        let r = example();
        assert!(!dominates(el(&r, "b"), face(&r, &["a", "b", "c"]), &r));
        assert!(dominates(el(&r, "b"), face(&r, &["b", "c", "d"]), &r));
        assert!(dominates(el(&r, "c"), Face::EMPTY, &r));
    }

    #[test]
    fn face_membership() {
        let r = example();
        assert!(is_face(face(&r, &["a", "b"]), &r));
        assert!(!is_face(face(&r, &["a", "b", "c"]), &r));
        assert!(is_face(Face::EMPTY, &r));
    }

    #[test]
    fn worked_example_section() {
        let r = example();
        let sigma = supremum_section(&r);
        assert_eq!(sigma.len(), 14);
        let mut facets: Vec<Vec<&str>> = sigma
            .facets()
            .into_iter()
            .map(|f| r.ground().face_names(f))
            .collect();
        facets.sort();
        assert_eq!(facets, vec![vec!["a", "b"], vec!["b", "c", "d"], vec!["b", "d", "e"]]);
    }

    #[test]
    fn dropping_the_third_order_gives_a_path() {
        let r = example().drop_last_order().unwrap();
        let sigma = supremum_section(&r);
        let mut facets: Vec<Vec<&str>> = sigma
            .facets()
            .into_iter()
            .map(|f| r.ground().face_names(f))
            .collect();
        facets.sort();
        assert_eq!(facets, vec![vec!["a", "b"], vec!["b", "c"]]);
    }

    #[test]
    fn single_order_gives_its_minimum() {
        let r = Representation::from_names(&[["c", "a", "b"]]).unwrap();
        let sigma = supremum_section(&r);
        assert_eq!(sigma, SimplicialComplex::point(el(&r, "c")));
    }

    #[test]
    fn containment() {
        let r = example();
        assert!(contains_complex(&SimplicialComplex::from_facets([Face::EMPTY]), &r).unwrap());
        let sub = supremum_section(&r.drop_last_order().unwrap());
        assert!(contains_complex(&sub, &r).unwrap());
        let simplex = SimplicialComplex::from_facets([face(&r, &["a", "b", "c"])]);
        assert!(!contains_complex(&simplex, &r).unwrap());
        let outside = SimplicialComplex::from_facets([Face::singleton(Element::new(9))]);
        assert!(matches!(contains_complex(&outside, &r), Err(Error::Domain(_))));
    }

    #[test]
    fn prefix_sections_grow() {
        let r = example();
        let sections = prefix_sections(&r);
        assert_eq!(sections.len(), 3);
        assert_eq!(sections[0].len(), 2);
        assert_eq!(sections[1].len(), 6);
        assert_eq!(sections[2].len(), 14);
    }
}
