//! Search for a representation whose supremum section contains, or equals,
//! a target complex.
//!
//! Small ground sets are searched exhaustively over multisets of
//! permutations (the section depends only on which orders occur, not on
//! their positions), in lexicographic order, so the reported witness is the
//! first one found in that order. Larger ground sets fall back to seeded
//! random tuples.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::{Element, Face};
use crate::order::{Ground, LinearOrder, Representation};
use crate::supremum::{section_of_orders, undominated};

/// Ground sets at most this large (target vertices plus auxiliary elements)
/// are searched exhaustively.
pub const EXHAUSTIVE_LIMIT: usize = 10;

/// Default number of random tuples tried above [`EXHAUSTIVE_LIMIT`].
pub const DEFAULT_TRIES: u64 = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `Σ(R)` contains the target.
    Contains,
    /// `Σ(R)` equals the target.
    Exact,
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub dimension: usize,
    pub extra: usize,
    pub relation: Relation,
    pub seed: u64,
    pub tries: u64,
}

impl SearchConfig {
    pub fn new(dimension: usize) -> Self {
        SearchConfig {
            dimension,
            extra: 0,
            relation: Relation::Contains,
            seed: 0,
            tries: DEFAULT_TRIES,
        }
    }
}

#[derive(Clone, Debug)]
pub enum SearchOutcome {
    Found(Representation),
    NotFound {
        exhaustive: bool,
        candidates: u64,
    },
}

/// Whether `Σ(orders)` relates to `target` as requested. Target facets are
/// tested first; full enumeration only happens for [`Relation::Exact`].
pub fn satisfies(
    n: usize,
    orders: &[LinearOrder],
    target: &SimplicialComplex,
    target_facets: &[Face],
    relation: Relation,
) -> bool {
    let universe = Face::full(n);
    if !target_facets
        .iter()
        .all(|&f| undominated(f, orders, universe).is_empty())
    {
        return false;
    }
    match relation {
        Relation::Contains => true,
        Relation::Exact => {
            let sigma = section_of_orders(n, orders);
            sigma.len() == target.len() && sigma.is_subcomplex_of(target)
        }
    }
}

struct Exhaustive<'a> {
    n: usize,
    dimension: usize,
    target: &'a SimplicialComplex,
    facets: Vec<Face>,
    relation: Relation,
    orders: Vec<LinearOrder>,
    candidates: u64,
}

impl Exhaustive<'_> {
    fn run(&mut self, slot: usize, start: Vec<Element>) -> bool {
        let mut perm = start;
        loop {
            let order = LinearOrder::from_sequence(perm.clone()).expect("permutation");
            self.orders.push(order);
            let done = if slot + 1 == self.dimension {
                self.candidates += 1;
                satisfies(self.n, &self.orders, self.target, &self.facets, self.relation)
            } else {
                // Σ only grows as orders are added, so an exact target must
                // already contain the section of every prefix.
                let viable = self.relation == Relation::Contains
                    || section_of_orders(self.n, &self.orders).is_subcomplex_of(self.target);
                viable && self.run(slot + 1, perm.clone())
            };
            if done {
                return true;
            }
            self.orders.pop();
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }
}

/// Advances to the next permutation in lexicographic id order.
fn next_permutation(perm: &mut [Element]) -> bool {
    let Some(i) = perm.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = perm.iter().rposition(|&x| x > perm[i]).expect("successor exists");
    perm.swap(i, j);
    perm[i + 1..].reverse();
    true
}

/// The search ground set: target vertices followed by `z0 … z{extra-1}`.
pub fn search_ground(target_ground: &Ground, extra: usize) -> Result<Ground> {
    let mut names: Vec<String> = target_ground.names().to_vec();
    for i in 0..extra {
        let name = format!("z{i}");
        if target_ground.element(&name).is_some() {
            return Err(Error::InvalidOperation(format!(
                "auxiliary element `{name}` clashes with a target vertex"
            )));
        }
        names.push(name);
    }
    Ground::new(names)
}

/// Looks for a `cfg.dimension`-representation over the target's vertices
/// plus `cfg.extra` auxiliary elements. Target vertex ids must follow
/// `target_ground`.
pub fn search_representation(
    target_ground: &Ground,
    target: &SimplicialComplex,
    cfg: &SearchConfig,
) -> Result<SearchOutcome> {
    if cfg.dimension == 0 {
        return Err(Error::InvalidOperation("search needs at least one order".into()));
    }
    let ground = search_ground(target_ground, cfg.extra)?;
    let n = ground.len();
    if n == 0 {
        return Err(Error::InvalidOperation("empty ground set".into()));
    }
    let facets = target.facets();

    if n <= EXHAUSTIVE_LIMIT {
        let mut search = Exhaustive {
            n,
            dimension: cfg.dimension,
            target,
            facets,
            relation: cfg.relation,
            orders: Vec::with_capacity(cfg.dimension),
            candidates: 0,
        };
        let identity: Vec<Element> = (0..n).map(Element::new).collect();
        if search.run(0, identity) {
            return Ok(SearchOutcome::Found(Representation::new(ground, search.orders)?));
        }
        return Ok(SearchOutcome::NotFound {
            exhaustive: true,
            candidates: search.candidates,
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut seq: Vec<Element> = (0..n).map(Element::new).collect();
    for _ in 0..cfg.tries {
        let orders: Vec<LinearOrder> = (0..cfg.dimension)
            .map(|_| {
                seq.shuffle(&mut rng);
                LinearOrder::from_sequence(seq.clone()).expect("permutation")
            })
            .collect();
        if satisfies(n, &orders, target, &facets, cfg.relation) {
            return Ok(SearchOutcome::Found(Representation::new(ground, orders)?));
        }
    }
    Ok(SearchOutcome::NotFound {
        exhaustive: false,
        candidates: cfg.tries,
    })
}
