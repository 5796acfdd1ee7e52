//! Ground-set elements and faces.
//!
//! A [`Face`] is a subset of a ground set of at most [`MAX_ELEMENTS`]
//! elements, stored as a single `u64` whose bit `i` is set when the element
//! with id `i` is a member. All set operations are bitwise.

use std::cmp::Ordering;
use std::fmt;

/// Largest supported ground set.
pub const MAX_ELEMENTS: usize = 64;

/// An element of the ground set, identified by its declaration index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(u8);

impl Element {
    /// # Panics
    ///
    /// If `id >= MAX_ELEMENTS`.
    pub fn new(id: usize) -> Self {
        assert!(id < MAX_ELEMENTS, "element id {id} out of range");
        Element(id as u8)
    }

    #[inline]
    pub fn id(self) -> usize {
        self.0 as usize
    }

    #[inline]
    fn bit(self) -> u64 {
        1u64 << self.0
    }
}

/// A finite set of elements.
///
/// Faces are ordered canonically: first by cardinality, then by the sorted
/// list of member ids compared lexicographically. For two faces of equal
/// size, the one holding the smallest element of their symmetric difference
/// comes first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        Face(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(e: Element) -> Self {
        Face(e.bit())
    }

    /// The face holding every element with id below `n`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            Face(u64::MAX)
        } else {
            Face((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, e: Element) -> bool {
        self.0 & e.bit() != 0
    }

    #[inline]
    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_proper_subset(self, other: Face) -> bool {
        self.is_subset(other) && self != other
    }

    #[inline]
    pub fn with(self, e: Element) -> Face {
        Face(self.0 | e.bit())
    }

    #[inline]
    pub fn without(self, e: Element) -> Face {
        Face(self.0 & !e.bit())
    }

    #[inline]
    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    /// Member with the largest id.
    pub fn last(self) -> Option<Element> {
        if self.0 == 0 {
            None
        } else {
            Some(Element((63 - self.0.leading_zeros()) as u8))
        }
    }

    /// Members in increasing id order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// Every subset of this face, the face itself and the empty face
    /// included. Order is unspecified.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(self.0),
        }
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & diff & diff.wrapping_neg() != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", e.id())?;
        }
        f.write_str("}")
    }
}

impl FromIterator<Element> for Face {
    fn from_iter<I: IntoIterator<Item = Element>>(iter: I) -> Self {
        iter.into_iter().fold(Face::EMPTY, Face::with)
    }
}

impl IntoIterator for Face {
    type Item = Element;
    type IntoIter = Elements;

    fn into_iter(self) -> Elements {
        self.iter()
    }
}

#[derive(Clone, Debug)]
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = Element;

    fn next(&mut self) -> Option<Element> {
        if self.0 == 0 {
            return None;
        }
        let id = self.0.trailing_zeros() as u8;
        self.0 &= self.0 - 1;
        Some(Element(id))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

#[derive(Clone, Debug)]
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        let current = self.next?;
        self.next = if current == 0 {
            None
        } else {
            Some((current - 1) & self.mask)
        };
        Some(Face(current))
    }
}
