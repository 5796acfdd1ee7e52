//! Runtime checks of every structural fact the matching construction relies
//! on, run against a concrete representation.

use std::fmt;

use crate::collapse::{extract_collapse_sequence, replay};
use crate::complex::SimplicialComplex;
use crate::face::{Element, Face};
use crate::morse::{build_matching, psi, verify_matching, Side};
use crate::order::Representation;
use crate::supremum::{is_face, prefix_sections};

/// Subsets are enumerated directly up to this ground-set size.
pub const ALL_SUBSETS_LIMIT: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(String),
    Skip(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            Status::Pass => write!(f, "PASS {}", self.name),
            Status::Fail(why) => write!(f, "FAIL {}: {why}", self.name),
            Status::Skip(why) => write!(f, "SKIP {}: {why}", self.name),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.checks
            .iter()
            .all(|c| !matches!(c.status, Status::Fail(_)))
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks
            .iter()
            .filter(|c| matches!(c.status, Status::Fail(_)))
    }

    fn record(&mut self, name: &'static str, outcome: Result<(), String>) {
        let status = match outcome {
            Ok(()) => Status::Pass,
            Err(why) => Status::Fail(why),
        };
        self.checks.push(Check { name, status });
    }

    fn skip(&mut self, name: &'static str, why: &str) {
        self.checks.push(Check {
            name,
            status: Status::Skip(why.to_string()),
        });
    }
}

type Outcome = Result<(), String>;

pub fn check_downward_closure(sections: &[SimplicialComplex]) -> Outcome {
    for (k, s) in sections.iter().enumerate() {
        if !s.is_downward_closed() {
            return Err(format!("Σ of the first {} orders is not closed", k + 1));
        }
        if !s.contains(Face::EMPTY) {
            return Err(format!("Σ of the first {} orders misses ∅", k + 1));
        }
    }
    Ok(())
}

pub fn check_face_sizes(sections: &[SimplicialComplex]) -> Outcome {
    for (k, s) in sections.iter().enumerate() {
        if let Some(f) = s.faces().find(|f| f.len() > k + 1) {
            return Err(format!("{f:?} has more than {} elements", k + 1));
        }
    }
    Ok(())
}

/// The size-bounded enumeration agrees with a scan of every subset.
pub fn check_pruned_enumeration(rep: &Representation, sigma: &SimplicialComplex) -> Outcome {
    let all: Vec<Face> = rep
        .ground()
        .all()
        .subsets()
        .filter(|&f| is_face(f, rep))
        .collect();
    if all.len() != sigma.len() {
        return Err(format!(
            "all-subsets scan finds {} faces, enumeration {}",
            all.len(),
            sigma.len()
        ));
    }
    match all.into_iter().find(|&f| !sigma.contains(f)) {
        Some(f) => Err(format!("{f:?} missed by the enumeration")),
        None => Ok(()),
    }
}

pub fn check_subcomplex_chain(sections: &[SimplicialComplex]) -> Outcome {
    for k in 1..sections.len() {
        if !sections[k - 1].is_subcomplex_of(&sections[k]) {
            return Err(format!(
                "Σ of {} orders is not inside Σ of {} orders",
                k,
                k + 1
            ));
        }
    }
    Ok(())
}

fn in_layer(face: Face, current: &SimplicialComplex, previous: &SimplicialComplex) -> bool {
    current.contains(face) && !previous.contains(face)
}

/// Pivot properties on the layer `Σ(R^k) \ Σ(R^{k-1})`, with `prefix` the
/// `k`-order prefix of the representation.
pub fn check_psi_properties(
    prefix: &Representation,
    current: &SimplicialComplex,
    previous: &SimplicialComplex,
) -> Outcome {
    let last = prefix.orders().last().expect("nonempty");
    for face in current.faces().filter(|&f| !previous.contains(f)) {
        let p = psi(face, prefix).map_err(|e| e.to_string())?;
        if face.contains(p) {
            let lowered = face.without(p);
            if !in_layer(lowered, current, previous) {
                return Err(format!("{face:?} minus its pivot leaves the layer"));
            }
            let q = psi(lowered, prefix).map_err(|e| e.to_string())?;
            if q != p || lowered.contains(q) {
                return Err(format!("pivot changes from {face:?} to {lowered:?}"));
            }
        } else {
            let raised = face.with(p);
            if !in_layer(raised, current, previous) {
                return Err(format!("{face:?} plus its pivot leaves the layer"));
            }
            let q = psi(raised, prefix).map_err(|e| e.to_string())?;
            if q != p {
                return Err(format!("pivot changes from {face:?} to {raised:?}"));
            }
            let top = last.max_of(face).expect("layer faces are nonempty");
            if last.rank(top) >= last.rank(p) {
                return Err(format!("pivot of {face:?} is not above its last-order maximum"));
            }
        }
    }
    Ok(())
}

/// `F ↦ F ∪ {ψ(F)}` on side A and `F ↦ F \ {ψ(F)}` on side B are mutually
/// inverse.
pub fn check_bijection(
    prefix: &Representation,
    current: &SimplicialComplex,
    previous: &SimplicialComplex,
) -> Outcome {
    let pivot = |f: Face| psi(f, prefix).map_err(|e| e.to_string());
    let side = |f: Face, p: Element| if f.contains(p) { Side::B } else { Side::A };
    let (mut a, mut b) = (0usize, 0usize);
    for face in current.faces().filter(|&f| !previous.contains(f)) {
        let p = pivot(face)?;
        match side(face, p) {
            Side::A => {
                a += 1;
                let up = face.with(p);
                let back = up.without(pivot(up)?);
                if back != face {
                    return Err(format!("η(φ({face:?})) = {back:?}"));
                }
            }
            Side::B => {
                b += 1;
                let down = face.without(p);
                let back = down.with(pivot(down)?);
                if back != face {
                    return Err(format!("φ(η({face:?})) = {back:?}"));
                }
            }
        }
    }
    if a != b {
        return Err(format!("|A| = {a} but |B| = {b}"));
    }
    Ok(())
}

/// No face of the smaller complex contains a face of the layer.
pub fn check_cross_arcs(current: &SimplicialComplex, previous: &SimplicialComplex) -> Outcome {
    for face in previous.faces() {
        for sub in face.subsets() {
            if sub != face && in_layer(sub, current, previous) {
                return Err(format!("{face:?} contains the layer face {sub:?}"));
            }
        }
    }
    Ok(())
}

/// Runs the full check list on one representation.
pub fn verify_representation(rep: &Representation) -> Report {
    let mut report = Report::default();
    let sections = prefix_sections(rep);
    let sigma = sections.last().expect("d >= 1");

    report.record("downward-closure", check_downward_closure(&sections));
    report.record("face-size", check_face_sizes(&sections));
    if rep.len() <= ALL_SUBSETS_LIMIT {
        report.record("pruned-enumeration", check_pruned_enumeration(rep, sigma));
    } else {
        report.skip("pruned-enumeration", "ground set too large to scan");
    }

    const LAYER_CHECKS: [&str; 4] = ["prefix-chain", "psi-property", "bijection", "cross-arc"];
    if rep.dimension() < 2 {
        for name in LAYER_CHECKS {
            report.skip(name, "needs at least two orders");
        }
    } else {
        report.record("prefix-chain", check_subcomplex_chain(&sections));
        let mut psi_outcome = Ok(());
        let mut bijection_outcome = Ok(());
        let mut cross_outcome = Ok(());
        for k in 2..=rep.dimension() {
            let prefix = rep.prefix(k).expect("k in range");
            let (current, previous) = (&sections[k - 1], &sections[k - 2]);
            psi_outcome = psi_outcome.and_then(|_| check_psi_properties(&prefix, current, previous));
            bijection_outcome =
                bijection_outcome.and_then(|_| check_bijection(&prefix, current, previous));
            cross_outcome = cross_outcome.and_then(|_| check_cross_arcs(current, previous));
        }
        report.record("psi-property", psi_outcome);
        report.record("bijection", bijection_outcome);
        report.record("cross-arc", cross_outcome);
    }

    let matching = build_matching(rep);
    let matching_outcome = matching.as_ref().map_err(|e| e.to_string()).and_then(|m| {
        let r = verify_matching(&sigma.hasse(), m);
        if !r.checkers_agree() {
            Err(format!("acyclicity checkers disagree: {r:?}"))
        } else if !r.all_pass() {
            Err(format!("{r:?}"))
        } else {
            Ok(())
        }
    });
    report.record("matching", matching_outcome);

    let replay_outcome = matching.map_err(|e| e.to_string()).and_then(|m| {
        let ex = extract_collapse_sequence(sigma, &m).map_err(|e| e.to_string())?;
        let end = replay(sigma, &ex.sequence).map_err(|e| e.to_string())?;
        if end.is_point() {
            Ok(())
        } else {
            Err(format!("replay ends at {} faces", end.len()))
        }
    });
    report.record("replay", replay_outcome);
    report
}
