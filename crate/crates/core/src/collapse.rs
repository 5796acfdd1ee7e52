//! Free faces, elementary collapses, collapse sequences read off a Morse
//! matching, and a brute-force collapsibility search that does not use
//! matchings at all.

use std::collections::HashSet;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::morse::{MatchedPair, MorseMatching};

/// One elementary collapse: `free` and every face containing it are removed.
/// `facet` is the unique facet containing `free`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CollapseStep {
    pub free: Face,
    pub facet: Face,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CollapseSequence {
    pub steps: Vec<CollapseStep>,
}

impl CollapseSequence {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Every free face of `complex` with its unique facet, in canonical order of
/// the free face.
pub fn free_faces(complex: &SimplicialComplex) -> Vec<CollapseStep> {
    let facets = complex.facets();
    let mut out = Vec::new();
    for face in complex.faces() {
        if face.is_empty() {
            continue;
        }
        let mut containing = facets.iter().filter(|&&g| face.is_subset(g));
        let (Some(&facet), None) = (containing.next(), containing.next()) else {
            continue;
        };
        if facet != face {
            out.push(CollapseStep { free: face, facet });
        }
    }
    out
}

/// The unique facet containing `face`, if `face` is free.
fn free_facet(complex: &SimplicialComplex, face: Face) -> std::result::Result<Face, String> {
    if face.is_empty() {
        return Err("the empty face is never free".into());
    }
    if !complex.contains(face) {
        return Err("not a face of the complex".into());
    }
    let facets = complex.facets();
    let containing: Vec<Face> = facets.into_iter().filter(|&g| face.is_subset(g)).collect();
    match containing.as_slice() {
        [g] if *g == face => Err("face is maximal".into()),
        [g] => Ok(*g),
        many => Err(format!("face lies in {} facets", many.len())),
    }
}

/// Removes a free face together with every face containing it.
pub fn elementary_collapse(complex: &SimplicialComplex, face: Face) -> Result<SimplicialComplex> {
    free_facet(complex, face).map_err(Error::Domain)?;
    let mut next = complex.clone();
    next.remove_star(face);
    Ok(next)
}

/// Applies `sequence` step by step. A step is legal when its free face is
/// free at that moment and its recorded facet is the one containing it.
pub fn replay(complex: &SimplicialComplex, sequence: &CollapseSequence) -> Result<SimplicialComplex> {
    let mut current = complex.clone();
    for (index, step) in sequence.steps.iter().enumerate() {
        let facet = free_facet(&current, step.free).map_err(|reason| Error::IllegalStep {
            index,
            face: step.free,
            reason,
        })?;
        if facet != step.facet {
            return Err(Error::IllegalStep {
                index,
                face: step.free,
                reason: format!("recorded facet {:?}, actual facet {:?}", step.facet, facet),
            });
        }
        current.remove_star(step.free);
    }
    Ok(current)
}

/// A collapse sequence to a point read off a complete acyclic matching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extraction {
    pub sequence: CollapseSequence,
    /// The pair `({v}, ∅)` left over once the complex is the point `{∅, {v}}`.
    pub terminal: MatchedPair,
}

/// Turns a complete acyclic matching of `complex` into collapse steps.
///
/// At each stage the eligible pairs are those whose lower face is currently
/// free with the upper face as its facet, and the one with the smallest
/// lower face is executed.
pub fn extract_collapse_sequence(
    complex: &SimplicialComplex,
    matching: &MorseMatching,
) -> Result<Extraction> {
    let mut pending: Vec<MatchedPair> = Vec::with_capacity(matching.len());
    let mut terminal = None;
    for &p in matching.pairs() {
        if !complex.contains(p.upper) || !complex.contains(p.lower) {
            return Err(Error::Domain(format!(
                "matched pair {:?} <- {:?} is not in the complex",
                p.upper, p.lower
            )));
        }
        if p.lower.is_empty() {
            if terminal.replace(p).is_some() {
                return Err(Error::Domain("the empty face is matched twice".into()));
            }
        } else {
            pending.push(p);
        }
    }
    pending.sort_by_key(|p| p.lower);

    let mut current = complex.clone();
    let mut steps = Vec::with_capacity(pending.len());
    while !pending.is_empty() {
        let position = pending.iter().position(|p| {
            // with |upper| = |lower| + 1, lower is free with facet upper
            // exactly when upper is its only coface
            let mut cofaces = current.cofaces(p.lower);
            cofaces.next() == Some(p.upper) && cofaces.next().is_none()
        });
        let Some(position) = position else {
            return Err(Error::Internal(format!(
                "collapse extraction stuck with {} faces and {} pairs left; \
                 the matching is not complete and acyclic",
                current.len(),
                pending.len()
            )));
        };
        let p = pending.remove(position);
        current.remove(p.upper);
        current.remove(p.lower);
        steps.push(CollapseStep {
            free: p.lower,
            facet: p.upper,
        });
    }

    let terminal = terminal.ok_or_else(|| Error::Internal("the empty face is unmatched".into()))?;
    if current.as_point() != terminal.upper.last() || terminal.upper.len() != 1 {
        return Err(Error::Internal(format!(
            "extraction ended at {} faces, not at the point of {:?}",
            current.len(),
            terminal.upper
        )));
    }
    Ok(Extraction {
        sequence: CollapseSequence { steps },
        terminal,
    })
}

/// Default number of distinct complexes the brute-force search may expand.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Collapsibility {
    /// Collapses to a point; the witness replays from the input.
    Yes(CollapseSequence),
    /// The whole search space was explored without reaching a point.
    No,
    /// The state budget ran out first.
    Unknown { visited: u64 },
}

struct Oracle {
    budget: u64,
    visited: u64,
    // complexes known not to collapse to a point, keyed by their facets
    dead: HashSet<Vec<Face>>,
    path: Vec<CollapseStep>,
}

impl Oracle {
    /// `Some(true)` when a point is reached, `None` when out of budget.
    fn explore(&mut self, complex: &SimplicialComplex) -> Option<bool> {
        if complex.is_point() {
            return Some(true);
        }
        let key = complex.facets();
        if self.dead.contains(&key) {
            return Some(false);
        }
        if self.visited >= self.budget {
            return None;
        }
        self.visited += 1;
        for step in free_faces(complex) {
            let mut next = complex.clone();
            next.remove_star(step.free);
            self.path.push(step);
            match self.explore(&next) {
                Some(true) => return Some(true),
                Some(false) => {
                    self.path.pop();
                }
                None => return None,
            }
        }
        self.dead.insert(key);
        Some(false)
    }
}

/// Exhaustive backtracking over free-face choices. Failed complexes are
/// memoized, so each distinct complex is expanded at most once.
pub fn is_collapsible_bruteforce(complex: &SimplicialComplex, budget: u64) -> Collapsibility {
    let mut oracle = Oracle {
        budget,
        visited: 0,
        dead: HashSet::new(),
        path: Vec::new(),
    };
    match oracle.explore(complex) {
        Some(true) => Collapsibility::Yes(CollapseSequence { steps: oracle.path }),
        Some(false) => Collapsibility::No,
        None => Collapsibility::Unknown {
            visited: oracle.visited,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::face::Element;

    fn f(bits: u64) -> Face {
        Face::from_bits(bits)
    }

    fn edge() -> SimplicialComplex {
        SimplicialComplex::from_facets([f(0b11)])
    }

    fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::from_facets([f(0b011), f(0b110), f(0b101)])
    }

    #[test]
    fn free_faces_by_definition() {
        assert_eq!(
            free_faces(&edge()),
            vec![
                CollapseStep { free: f(0b01), facet: f(0b11) },
                CollapseStep { free: f(0b10), facet: f(0b11) },
            ]
        );
        assert!(free_faces(&hollow_triangle()).is_empty());
        assert!(free_faces(&SimplicialComplex::point(Element::new(0))).is_empty());
    }

    #[test]
    fn free_faces_of_a_triangle_include_vertices_with_large_facets() {
        let tri = SimplicialComplex::from_facets([f(0b111)]);
        assert_eq!(free_faces(&tri).len(), 6);
    }

    #[test]
    fn collapsing_an_edge() {
        let point = elementary_collapse(&edge(), f(0b01)).unwrap();
        assert_eq!(point, SimplicialComplex::point(Element::new(1)));
        assert!(matches!(
            elementary_collapse(&edge(), f(0b11)),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            elementary_collapse(&edge(), Face::EMPTY),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn collapsing_a_vertex_of_a_triangle_removes_its_star() {
        let tri = SimplicialComplex::from_facets([f(0b111)]);
        let rest = elementary_collapse(&tri, f(0b001)).unwrap();
        assert_eq!(rest, SimplicialComplex::from_facets([f(0b110)]));
        assert!(rest.is_downward_closed());
    }

    #[test]
    fn replay_reports_the_failing_index() {
        let seq = CollapseSequence {
            steps: vec![
                CollapseStep { free: f(0b01), facet: f(0b11) },
                CollapseStep { free: f(0b10), facet: f(0b11) },
            ],
        };
        match replay(&edge(), &seq) {
            Err(Error::IllegalStep { index, face, .. }) => {
                assert_eq!(index, 1);
                assert_eq!(face, f(0b10));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(replay(&edge(), &CollapseSequence::default()).unwrap(), edge());
    }

    #[test]
    fn replay_checks_the_recorded_facet() {
        let tri = SimplicialComplex::from_facets([f(0b111)]);
        let seq = CollapseSequence {
            steps: vec![CollapseStep { free: f(0b001), facet: f(0b011) }],
        };
        assert!(matches!(replay(&tri, &seq), Err(Error::IllegalStep { index: 0, .. })));
    }

    #[test]
    fn extraction_on_tiny_complexes() {
        let a = Element::new(0);
        let point = SimplicialComplex::point(a);
        let m = MorseMatching::new([MatchedPair::new(f(0b01), Face::EMPTY)]);
        let ex = extract_collapse_sequence(&point, &m).unwrap();
        assert!(ex.sequence.is_empty());
        assert_eq!(ex.terminal, MatchedPair::new(f(0b01), Face::EMPTY));

        let m = MorseMatching::new([
            MatchedPair::new(f(0b11), f(0b10)),
            MatchedPair::new(f(0b01), Face::EMPTY),
        ]);
        let ex = extract_collapse_sequence(&edge(), &m).unwrap();
        assert_eq!(
            ex.sequence.steps,
            vec![CollapseStep { free: f(0b10), facet: f(0b11) }]
        );
        assert_eq!(replay(&edge(), &ex.sequence).unwrap(), point);
    }

    #[test]
    fn extraction_gets_stuck_on_a_cyclic_matching() {
        let m = MorseMatching::new([
            MatchedPair::new(f(0b011), f(0b001)),
            MatchedPair::new(f(0b110), f(0b010)),
            MatchedPair::new(f(0b101), f(0b100)),
        ]);
        assert!(matches!(
            extract_collapse_sequence(&hollow_triangle(), &m),
            Err(Error::Internal(_))
        ));
    }

    #[test]
    fn oracle_basics() {
        let point = SimplicialComplex::point(Element::new(2));
        assert_eq!(is_collapsible_bruteforce(&point, 10), Collapsibility::Yes(CollapseSequence::default()));
        assert_eq!(is_collapsible_bruteforce(&hollow_triangle(), 10), Collapsibility::No);
        let two_triangles = SimplicialComplex::from_facets([f(0b00111), f(0b11100)]);
        let Collapsibility::Yes(witness) = is_collapsible_bruteforce(&two_triangles, DEFAULT_BUDGET)
        else {
            panic!("two triangles sharing a vertex collapse");
        };
        assert!(replay(&two_triangles, &witness).unwrap().is_point());
    }

    #[test]
    fn oracle_respects_its_budget() {
        let two_triangles = SimplicialComplex::from_facets([f(0b00111), f(0b11100)]);
        assert!(matches!(
            is_collapsible_bruteforce(&two_triangles, 0),
            Collapsibility::Unknown { visited: 0 }
        ));
    }
}
