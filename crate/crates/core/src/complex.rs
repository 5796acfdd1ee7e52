//! Simplicial complexes as face sets, and their Hasse diagrams.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::face::{Element, Face};

/// A downward-closed family of faces.
///
/// Faces are kept in canonical order (see [`Face`]). The empty family is a
/// valid value; any nonempty complex contains the empty face.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    faces: BTreeSet<Face>,
}

impl SimplicialComplex {
    /// Builds a complex from an explicit face list, rejecting families that
    /// are not closed under taking subsets.
    pub fn from_faces<I: IntoIterator<Item = Face>>(faces: I) -> Result<Self> {
        let complex = Self::from_faces_unchecked(faces);
        if let Some((face, missing)) = complex.closure_violation() {
            return Err(Error::NotClosed(format!(
                "face {face:?} is present but its subface {missing:?} is not"
            )));
        }
        Ok(complex)
    }

    pub(crate) fn from_faces_unchecked<I: IntoIterator<Item = Face>>(faces: I) -> Self {
        SimplicialComplex {
            faces: faces.into_iter().collect(),
        }
    }

    /// The smallest complex containing every face in `facets`.
    pub fn from_facets<I: IntoIterator<Item = Face>>(facets: I) -> Self {
        let mut faces = BTreeSet::new();
        for facet in facets {
            faces.extend(facet.subsets());
        }
        SimplicialComplex { faces }
    }

    /// The complex `{∅, {v}}`.
    pub fn point(v: Element) -> Self {
        Self::from_facets([Face::singleton(v)])
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains(&self, face: Face) -> bool {
        self.faces.contains(&face)
    }

    /// Faces in canonical order.
    pub fn faces(&self) -> impl DoubleEndedIterator<Item = Face> + ExactSizeIterator + '_ {
        self.faces.iter().copied()
    }

    /// Union of all faces.
    pub fn vertices(&self) -> Face {
        self.faces.iter().fold(Face::EMPTY, |acc, &f| acc.union(f))
    }

    /// Maximal faces, in canonical order.
    pub fn facets(&self) -> Vec<Face> {
        // a face is maximal iff no face of the next cardinality contains it
        let vertices = self.vertices();
        self.faces
            .iter()
            .copied()
            .filter(|&f| {
                vertices
                    .difference(f)
                    .iter()
                    .all(|v| !self.faces.contains(&f.with(v)))
            })
            .collect()
    }

    /// Largest face cardinality, or `None` for the empty family.
    pub fn max_face_size(&self) -> Option<usize> {
        self.faces.iter().map(|f| f.len()).max()
    }

    /// `Some(v)` when this complex is exactly `{∅, {v}}`.
    pub fn as_point(&self) -> Option<Element> {
        if self.faces.len() != 2 || !self.faces.contains(&Face::EMPTY) {
            return None;
        }
        let last = *self.faces.last()?;
        if last.len() == 1 {
            last.last()
        } else {
            None
        }
    }

    pub fn is_point(&self) -> bool {
        self.as_point().is_some()
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.faces.is_subset(&other.faces)
    }

    pub fn is_downward_closed(&self) -> bool {
        self.closure_violation().is_none()
    }

    /// First face found with a missing codimension-one subface.
    fn closure_violation(&self) -> Option<(Face, Face)> {
        for &f in &self.faces {
            for e in f {
                let sub = f.without(e);
                if !self.faces.contains(&sub) {
                    return Some((f, sub));
                }
            }
        }
        None
    }

    /// Faces of the complex containing `face` with exactly one more element.
    pub fn cofaces(&self, face: Face) -> impl Iterator<Item = Face> + '_ {
        self.vertices()
            .difference(face)
            .iter()
            .map(move |v| face.with(v))
            .filter(move |g| self.faces.contains(g))
    }

    /// Removes every face containing `face`.
    pub(crate) fn remove_star(&mut self, face: Face) -> usize {
        let before = self.faces.len();
        self.faces.retain(|&g| !face.is_subset(g));
        before - self.faces.len()
    }

    pub(crate) fn remove(&mut self, face: Face) -> bool {
        self.faces.remove(&face)
    }

    pub fn hasse(&self) -> HasseDiagram {
        HasseDiagram::of(self)
    }
}

/// The covering digraph of the inclusion order on a complex. Arcs point from
/// the larger face to the smaller one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseDiagram {
    nodes: Vec<Face>,
    node_set: HashSet<Face>,
    arcs: Vec<(Face, Face)>,
}

impl HasseDiagram {
    pub fn of(complex: &SimplicialComplex) -> Self {
        let nodes: Vec<Face> = complex.faces().collect();
        let mut arcs = Vec::new();
        for &upper in &nodes {
            for e in upper {
                let lower = upper.without(e);
                if complex.contains(lower) {
                    arcs.push((upper, lower));
                }
            }
        }
        HasseDiagram {
            node_set: nodes.iter().copied().collect(),
            nodes,
            arcs,
        }
    }

    pub fn nodes(&self) -> &[Face] {
        &self.nodes
    }

    /// `(upper, lower)` pairs, grouped by upper face in canonical order.
    pub fn arcs(&self) -> &[(Face, Face)] {
        &self.arcs
    }

    pub fn contains_node(&self, face: Face) -> bool {
        self.node_set.contains(&face)
    }

    pub fn contains_arc(&self, upper: Face, lower: Face) -> bool {
        lower.is_proper_subset(upper)
            && upper.len() == lower.len() + 1
            && self.node_set.contains(&upper)
            && self.node_set.contains(&lower)
    }
}
