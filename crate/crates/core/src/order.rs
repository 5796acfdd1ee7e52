//! Named ground sets, linear orders and d-representations.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::face::{Element, Face, MAX_ELEMENTS};

/// The ground set: element names in declaration order.
///
/// Names are resolved to [`Element`] ids once; everything downstream works on
/// ids.
#[derive(Clone, PartialEq, Eq)]
pub struct Ground {
    names: Vec<String>,
    index: HashMap<String, Element>,
}

impl Ground {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_ELEMENTS {
            return Err(Error::TooManyElements(names.len()));
        }
        let mut index = HashMap::with_capacity(names.len());
        for (id, name) in names.iter().enumerate() {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(Error::InvalidName(name.clone()));
            }
            if index.insert(name.clone(), Element::new(id)).is_some() {
                return Err(Error::DuplicateElement(name.clone()));
            }
        }
        Ok(Ground { names, index })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, e: Element) -> &str {
        &self.names[e.id()]
    }

    pub fn element(&self, name: &str) -> Option<Element> {
        self.index.get(name).copied()
    }

    pub fn resolve(&self, name: &str) -> Result<Element> {
        self.element(name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.len()).map(Element::new)
    }

    /// The face holding every element of the ground set.
    pub fn all(&self) -> Face {
        Face::full(self.len())
    }

    /// Resolves a list of names into a face, ignoring repeats and order.
    pub fn canonical_face<S: AsRef<str>>(&self, tokens: &[S]) -> Result<Face> {
        tokens
            .iter()
            .map(|t| self.resolve(t.as_ref()))
            .collect::<Result<Face>>()
    }

    /// Member names of `face` in lexicographic name order.
    pub fn face_names(&self, face: Face) -> Vec<&str> {
        let mut names: Vec<&str> = face.iter().map(|e| self.name(e)).collect();
        names.sort_unstable();
        names
    }

    /// `{a,b}` style rendering; the empty face renders as `{}`.
    pub fn display_face(&self, face: Face) -> String {
        format!("{{{}}}", self.face_names(face).join(","))
    }
}

impl fmt::Debug for Ground {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.names).finish()
    }
}

/// A total order on `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearOrder {
    by_rank: Vec<Element>,
    rank: Vec<u8>,
    // strictly_below[e] = elements ranked below e
    strictly_below: Vec<Face>,
}

impl LinearOrder {
    /// Builds the order listing `sequence` from minimum to maximum. The
    /// sequence must be a permutation of `0..sequence.len()`.
    pub fn from_sequence(sequence: Vec<Element>) -> Result<Self> {
        let n = sequence.len();
        if n > MAX_ELEMENTS {
            return Err(Error::TooManyElements(n));
        }
        let mut rank = vec![u8::MAX; n];
        let mut strictly_below = vec![Face::EMPTY; n];
        let mut seen = Face::EMPTY;
        for (r, &e) in sequence.iter().enumerate() {
            if e.id() >= n || seen.contains(e) {
                return Err(Error::InvalidRepresentation(format!(
                    "order is not a permutation of 0..{n}"
                )));
            }
            rank[e.id()] = r as u8;
            strictly_below[e.id()] = seen;
            seen = seen.with(e);
        }
        Ok(LinearOrder {
            by_rank: sequence,
            rank,
            strictly_below,
        })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_sequence((0..n).map(Element::new).collect()).expect("identity is a permutation")
    }

    pub fn len(&self) -> usize {
        self.by_rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_rank.is_empty()
    }

    /// Rank of `e`, 0 for the minimum.
    #[inline]
    pub fn rank(&self, e: Element) -> usize {
        self.rank[e.id()] as usize
    }

    /// Elements from minimum to maximum.
    pub fn sequence(&self) -> &[Element] {
        &self.by_rank
    }

    pub fn minimum(&self) -> Element {
        self.by_rank[0]
    }

    #[inline]
    pub fn strictly_below(&self, e: Element) -> Face {
        self.strictly_below[e.id()]
    }

    /// Largest member of `face` in this order.
    pub fn max_of(&self, face: Face) -> Option<Element> {
        face.iter().max_by_key(|&e| self.rank[e.id()])
    }

    /// Smallest member of `face` in this order.
    pub fn min_of(&self, face: Face) -> Option<Element> {
        if face.is_empty() {
            return None;
        }
        self.by_rank.iter().copied().find(|&e| face.contains(e))
    }

    /// `x` dominates `face` here when every member of `face` is at most `x`.
    #[inline]
    pub fn dominates(&self, x: Element, face: Face) -> bool {
        face.is_subset(self.strictly_below[x.id()].with(x))
    }
}

impl fmt::Debug for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.by_rank.iter().map(|e| e.id()))
            .finish()
    }
}

/// A ground set together with `d >= 1` linear orders over it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    ground: Ground,
    orders: Vec<LinearOrder>,
}

impl Representation {
    pub fn new(ground: Ground, orders: Vec<LinearOrder>) -> Result<Self> {
        if ground.is_empty() {
            return Err(Error::InvalidRepresentation("empty ground set".into()));
        }
        if orders.is_empty() {
            return Err(Error::InvalidRepresentation("no orders".into()));
        }
        if let Some(i) = orders.iter().position(|o| o.len() != ground.len()) {
            return Err(Error::InvalidRepresentation(format!(
                "order {} ranks {} elements, ground set has {}",
                i + 1,
                orders[i].len(),
                ground.len()
            )));
        }
        Ok(Representation { ground, orders })
    }

    /// Builds a representation from orders given as name lists, minimum
    /// first. The first list declares the ground set.
    pub fn from_names<L, S>(orders: &[L]) -> Result<Self>
    where
        L: AsRef<[S]>,
        S: AsRef<str>,
    {
        let first = orders
            .first()
            .ok_or_else(|| Error::InvalidRepresentation("no orders".into()))?;
        let ground = Ground::new(first.as_ref().iter().map(|s| s.as_ref().to_string()))?;
        let orders = orders
            .iter()
            .map(|line| {
                let line = line.as_ref();
                if line.len() != ground.len() {
                    return Err(Error::InvalidRepresentation(format!(
                        "order has {} elements, ground set has {}",
                        line.len(),
                        ground.len()
                    )));
                }
                let seq = line
                    .iter()
                    .map(|s| ground.resolve(s.as_ref()))
                    .collect::<Result<Vec<_>>>()?;
                LinearOrder::from_sequence(seq)
            })
            .collect::<Result<Vec<_>>>()?;
        Representation::new(ground, orders)
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    pub fn orders(&self) -> &[LinearOrder] {
        &self.orders
    }

    /// Number of orders, `d`.
    pub fn dimension(&self) -> usize {
        self.orders.len()
    }

    /// Size of the ground set, `n`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.ground.len()
    }

    /// The representation made of the first `k` orders.
    pub fn prefix(&self, k: usize) -> Result<Self> {
        if k == 0 || k > self.dimension() {
            return Err(Error::InvalidOperation(format!(
                "prefix of length {k} of a {}-representation",
                self.dimension()
            )));
        }
        Ok(Representation {
            ground: self.ground.clone(),
            orders: self.orders[..k].to_vec(),
        })
    }

    /// Deletes the last order. Fails on a 1-representation.
    pub fn drop_last_order(&self) -> Result<Self> {
        if self.dimension() < 2 {
            return Err(Error::InvalidOperation(
                "cannot drop the only order of a 1-representation".into(),
            ));
        }
        self.prefix(self.dimension() - 1)
    }

    /// Orders as name sequences, minimum first.
    pub fn order_names(&self) -> Vec<Vec<&str>> {
        self.orders
            .iter()
            .map(|o| o.sequence().iter().map(|&e| self.ground.name(e)).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_face_dedups_and_ignores_order() {
        let g = Ground::new(["a", "b", "c"]).unwrap();
        let empty: [&str; 0] = [];
        assert_eq!(g.canonical_face(&empty).unwrap(), Face::EMPTY);
        assert_eq!(
            g.canonical_face(&["b", "a"]).unwrap(),
            g.canonical_face(&["a", "b"]).unwrap()
        );
        assert_eq!(g.canonical_face(&["a", "a"]).unwrap().len(), 1);
        assert_eq!(
            g.canonical_face(&["a", "q"]),
            Err(Error::UnknownElement("q".into()))
        );
    }

    #[test]
    fn ground_rejects_bad_names() {
        assert!(matches!(Ground::new(["a", "a"]), Err(Error::DuplicateElement(_))));
        assert!(matches!(Ground::new(["a b"]), Err(Error::InvalidName(_))));
        assert!(matches!(Ground::new([""]), Err(Error::InvalidName(_))));
        let many: Vec<String> = (0..65).map(|i| format!("v{i}")).collect();
        assert_eq!(Ground::new(many), Err(Error::TooManyElements(65)));
    }

    #[test]
    fn order_ranks_and_domination() {
        // c < a < b
        let o = LinearOrder::from_sequence(vec![Element::new(2), Element::new(0), Element::new(1)])
            .unwrap();
        assert_eq!(o.rank(Element::new(2)), 0);
        assert_eq!(o.minimum(), Element::new(2));
        let ab = Face::from_bits(0b011);
        assert_eq!(o.max_of(ab), Some(Element::new(1)));
        assert_eq!(o.min_of(ab), Some(Element::new(0)));
        assert!(o.dominates(Element::new(1), ab));
        assert!(!o.dominates(Element::new(0), ab));
        assert!(o.dominates(Element::new(2), Face::EMPTY));
    }

    #[test]
    fn order_must_be_a_permutation() {
        let bad = LinearOrder::from_sequence(vec![Element::new(0), Element::new(0)]);
        assert!(bad.is_err());
        let bad = LinearOrder::from_sequence(vec![Element::new(0), Element::new(2)]);
        assert!(bad.is_err());
    }

    #[test]
    fn drop_last_order() {
        let r = Representation::from_names(&[["a", "b"], ["b", "a"]]).unwrap();
        let r1 = r.drop_last_order().unwrap();
        assert_eq!(r1.dimension(), 1);
        assert_eq!(r1.ground(), r.ground());
        assert_eq!(r1.orders()[0], r.orders()[0]);
        assert!(matches!(r1.drop_last_order(), Err(Error::InvalidOperation(_))));
    }

    #[test]
    fn duplicate_orders_are_allowed() {
        let r = Representation::from_names(&[["a", "b"], ["a", "b"]]).unwrap();
        assert_eq!(r.dimension(), 2);
    }
}
