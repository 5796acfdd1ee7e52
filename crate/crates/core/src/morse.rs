//! The complete acyclic matching of the face poset of `Σ(R)`.
//!
//! For `R = (≤₁, …, ≤_d)` with `d ≥ 2` let `R'` drop the last order. The
//! layer `K = Σ(R) \ Σ(R')` is matched on its own: each face `F` of `K` has a
//! pivot, the `≤_d`-smallest element lying strictly below the maximum of `F`
//! in each of `≤₁ … ≤_{d-1}`. Faces not holding their pivot (side A) are
//! paired with `F ∪ {pivot}` (side B). Recursing on `R'` down to the single
//! order base case `({m₁}, ∅)` yields a matching of the whole Hasse diagram.
//!
//! [`verify_matching`] checks any matching against a Hasse diagram with two
//! unrelated acyclicity tests.

use std::collections::HashMap;

use crate::complex::{HasseDiagram, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::{Element, Face};
use crate::order::{LinearOrder, Representation};
use crate::supremum::{section_of_orders, undominated};

/// A Hasse arc chosen by a matching.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatchedPair {
    pub upper: Face,
    pub lower: Face,
}

impl MatchedPair {
    pub fn new(upper: Face, lower: Face) -> Self {
        MatchedPair { upper, lower }
    }
}

/// A set of matched Hasse arcs, kept sorted by upper face then lower face.
///
/// Construction does not check the matching conditions; use
/// [`verify_matching`] for that.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MorseMatching {
    pairs: Vec<MatchedPair>,
}

impl MorseMatching {
    pub fn new<I: IntoIterator<Item = MatchedPair>>(pairs: I) -> Self {
        let mut pairs: Vec<MatchedPair> = pairs.into_iter().collect();
        pairs.sort_unstable();
        pairs.dedup();
        MorseMatching { pairs }
    }

    pub fn pairs(&self) -> &[MatchedPair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, pair: MatchedPair) -> bool {
        self.pairs.binary_search(&pair).is_ok()
    }

    pub fn union(&self, other: &MorseMatching) -> MorseMatching {
        MorseMatching::new(self.pairs.iter().chain(&other.pairs).copied())
    }

    /// Map from each matched face to its partner.
    pub fn partners(&self) -> HashMap<Face, Face> {
        let mut map = HashMap::with_capacity(2 * self.pairs.len());
        for p in &self.pairs {
            map.insert(p.upper, p.lower);
            map.insert(p.lower, p.upper);
        }
        map
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// The face does not hold its pivot.
    A,
    /// The face holds its pivot.
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LayerClassification {
    pub face: Face,
    pub psi: Element,
    pub side: Side,
}

/// Pivot of `face`, with `orders` the full representation. The caller must
/// have checked that `face` lies in the last layer.
fn pivot(face: Face, orders: &[LinearOrder], universe: Face) -> Option<Element> {
    let (last, rest) = orders.split_last()?;
    last.min_of(undominated(face, rest, universe))
}

/// The pivot `ψ(F)` of a face of the layer `Σ(R) \ Σ(R')`.
pub fn psi(face: Face, rep: &Representation) -> Result<Element> {
    if rep.dimension() < 2 {
        return Err(Error::InvalidOperation(
            "the layer function needs at least two orders".into(),
        ));
    }
    let universe = rep.ground().all();
    let orders = rep.orders();
    if !face.is_subset(universe) || !undominated(face, orders, universe).is_empty() {
        return Err(Error::Domain(format!("{face:?} is not a face of Σ(R)")));
    }
    let (last, rest) = orders.split_last().expect("d >= 2");
    let candidates = undominated(face, rest, universe);
    last.min_of(candidates)
        .ok_or_else(|| Error::Domain(format!("{face:?} is already a face of Σ(R')")))
}

fn classify(
    layer: impl Iterator<Item = Face>,
    orders: &[LinearOrder],
    universe: Face,
) -> Result<Vec<LayerClassification>> {
    layer
        .map(|face| {
            let psi = pivot(face, orders, universe).ok_or_else(|| {
                Error::Internal(format!("layer face {face:?} has no pivot"))
            })?;
            let side = if face.contains(psi) { Side::B } else { Side::A };
            Ok(LayerClassification { face, psi, side })
        })
        .collect()
}

fn layer_faces<'a>(
    current: &'a SimplicialComplex,
    previous: &'a SimplicialComplex,
) -> impl Iterator<Item = Face> + 'a {
    current.faces().filter(|&f| !previous.contains(f))
}

/// Every face of `Σ(R) \ Σ(R')` tagged with its pivot and side, in canonical
/// face order.
pub fn classify_layer(rep: &Representation) -> Result<Vec<LayerClassification>> {
    if rep.dimension() < 2 {
        return Err(Error::InvalidOperation(
            "layer classification needs at least two orders".into(),
        ));
    }
    let n = rep.len();
    let orders = rep.orders();
    let current = section_of_orders(n, orders);
    let previous = section_of_orders(n, &orders[..orders.len() - 1]);
    classify(layer_faces(&current, &previous), orders, rep.ground().all())
}

fn match_layer(
    current: &SimplicialComplex,
    previous: &SimplicialComplex,
    orders: &[LinearOrder],
    universe: Face,
) -> Result<MorseMatching> {
    let classes = classify(layer_faces(current, previous), orders, universe)?;
    let mut pairs = Vec::with_capacity(classes.len() / 2);
    for c in classes.iter().filter(|c| c.side == Side::A) {
        let upper = c.face.with(c.psi);
        if !current.contains(upper) || previous.contains(upper) {
            return Err(Error::Internal(format!(
                "{:?} + pivot leaves the layer",
                c.face
            )));
        }
        pairs.push(MatchedPair::new(upper, c.face));
    }
    let matching = MorseMatching::new(pairs);
    let covered: std::collections::HashSet<Face> = matching
        .pairs()
        .iter()
        .flat_map(|p| [p.upper, p.lower])
        .collect();
    if covered.len() != classes.len() || 2 * matching.len() != classes.len() {
        return Err(Error::Internal(format!(
            "layer of {} faces is not perfectly matched by {} pairs",
            classes.len(),
            matching.len()
        )));
    }
    Ok(matching)
}

/// `{(F ∪ {ψ(F)}, F) : F ∈ A}` for the last layer of `rep`.
pub fn layer_matching(rep: &Representation) -> Result<MorseMatching> {
    if rep.dimension() < 2 {
        return Err(Error::InvalidOperation(
            "layer matching needs at least two orders".into(),
        ));
    }
    let n = rep.len();
    let orders = rep.orders();
    let current = section_of_orders(n, orders);
    let previous = section_of_orders(n, &orders[..orders.len() - 1]);
    match_layer(&current, &previous, orders, rep.ground().all())
}

/// The complete acyclic matching of the Hasse diagram of `Σ(R)`.
///
/// Errors only with [`Error::Internal`].
pub fn build_matching(rep: &Representation) -> Result<MorseMatching> {
    let n = rep.len();
    let orders = rep.orders();
    let universe = rep.ground().all();
    let base = Face::singleton(orders[0].minimum());
    let mut pairs = vec![MatchedPair::new(base, Face::EMPTY)];
    let mut previous = section_of_orders(n, &orders[..1]);
    for k in 2..=orders.len() {
        let current = section_of_orders(n, &orders[..k]);
        let layer = match_layer(&current, &previous, &orders[..k], universe)?;
        pairs.extend_from_slice(layer.pairs());
        previous = current;
    }
    Ok(MorseMatching::new(pairs))
}

/// Outcome of [`verify_matching`]. Each field is computed on its own.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    /// Every pair is a Hasse arc and no face lies in two pairs.
    pub is_matching: bool,
    /// Every node of the diagram lies in some pair.
    pub is_complete: bool,
    /// Depth-first search finds no cycle after reversing the matched arcs.
    pub acyclic_by_reversal: bool,
    /// No cyclic chain of pairs `m₁ … mₙ` with each `(u(m_{i+1}), d(m_i))`
    /// and `(u(m₁), d(mₙ))` an unmatched Hasse arc.
    pub acyclic_by_sequences: bool,
}

impl VerificationReport {
    pub fn is_acyclic(&self) -> bool {
        self.acyclic_by_reversal && self.acyclic_by_sequences
    }

    pub fn checkers_agree(&self) -> bool {
        self.acyclic_by_reversal == self.acyclic_by_sequences
    }

    pub fn all_pass(&self) -> bool {
        self.is_matching && self.is_complete && self.is_acyclic()
    }
}

pub fn verify_matching(hasse: &HasseDiagram, matching: &MorseMatching) -> VerificationReport {
    VerificationReport {
        is_matching: is_matching(hasse, matching),
        is_complete: is_complete(hasse, matching),
        acyclic_by_reversal: acyclic_by_reversal(hasse, matching),
        acyclic_by_sequences: acyclic_by_sequences(hasse, matching),
    }
}

fn is_matching(hasse: &HasseDiagram, matching: &MorseMatching) -> bool {
    let mut seen = std::collections::HashSet::new();
    matching.pairs().iter().all(|p| {
        hasse.contains_arc(p.upper, p.lower) && seen.insert(p.upper) && seen.insert(p.lower)
    })
}

fn is_complete(hasse: &HasseDiagram, matching: &MorseMatching) -> bool {
    let covered: std::collections::HashSet<Face> = matching
        .pairs()
        .iter()
        .flat_map(|p| [p.upper, p.lower])
        .collect();
    hasse.nodes().iter().all(|f| covered.contains(f))
}

/// Cycle detection on the Hasse digraph with matched arcs pointing up,
/// iterative three-colour DFS.
fn acyclic_by_reversal(hasse: &HasseDiagram, matching: &MorseMatching) -> bool {
    let index: HashMap<Face, usize> = hasse
        .nodes()
        .iter()
        .enumerate()
        .map(|(i, &f)| (f, i))
        .collect();
    let mut adjacency = vec![Vec::new(); index.len()];
    for &(upper, lower) in hasse.arcs() {
        let (u, d) = (index[&upper], index[&lower]);
        if matching.contains(MatchedPair::new(upper, lower)) {
            adjacency[d].push(u);
        } else {
            adjacency[u].push(d);
        }
    }

    #[derive(Clone, Copy, PartialEq)]
    enum Colour {
        White,
        Grey,
        Black,
    }
    let mut colour = vec![Colour::White; adjacency.len()];
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for root in 0..adjacency.len() {
        if colour[root] != Colour::White {
            continue;
        }
        colour[root] = Colour::Grey;
        stack.push((root, 0));
        while let Some(top) = stack.last_mut() {
            let (node, next) = *top;
            if let Some(&succ) = adjacency[node].get(next) {
                top.1 += 1;
                match colour[succ] {
                    Colour::Grey => return false,
                    Colour::White => {
                        colour[succ] = Colour::Grey;
                        stack.push((succ, 0));
                    }
                    Colour::Black => {}
                }
            } else {
                colour[node] = Colour::Black;
                stack.pop();
            }
        }
    }
    true
}

/// Cycle detection on the graph whose nodes are the pairs, with `i → j` when
/// `j ≠ i` and `(u(m_j), d(m_i))` is a Hasse arc. Kahn's algorithm: the graph
/// is acyclic iff every node can be peeled off at in-degree zero.
fn acyclic_by_sequences(hasse: &HasseDiagram, matching: &MorseMatching) -> bool {
    let pairs = matching.pairs();
    let mut by_upper: HashMap<Face, Vec<usize>> = HashMap::new();
    for (j, p) in pairs.iter().enumerate() {
        by_upper.entry(p.upper).or_default().push(j);
    }
    let vertices = hasse
        .nodes()
        .iter()
        .fold(Face::EMPTY, |acc, &f| acc.union(f));

    let mut successors = vec![Vec::new(); pairs.len()];
    let mut in_degree = vec![0usize; pairs.len()];
    for (i, p) in pairs.iter().enumerate() {
        for v in vertices.difference(p.lower) {
            let upper = p.lower.with(v);
            if !hasse.contains_arc(upper, p.lower) {
                continue;
            }
            for &j in by_upper.get(&upper).into_iter().flatten() {
                if j != i {
                    successors[i].push(j);
                    in_degree[j] += 1;
                }
            }
        }
    }

    let mut ready: Vec<usize> = (0..pairs.len()).filter(|&i| in_degree[i] == 0).collect();
    let mut peeled = 0;
    while let Some(i) = ready.pop() {
        peeled += 1;
        for &j in &successors[i] {
            in_degree[j] -= 1;
            if in_degree[j] == 0 {
                ready.push(j);
            }
        }
    }
    peeled == pairs.len()
}
