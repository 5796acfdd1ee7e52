mod common;

use proptest::prelude::*;
use supsec::checks::{check_bijection, check_cross_arcs, check_psi_properties};
use supsec::collapse::DEFAULT_BUDGET;
use supsec::format::{parse_representation, write_representation};
use supsec::supremum::prefix_sections;
use supsec::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn enumeration_matches_the_all_subsets_oracle(rep in common::representation(1..=6, 1..=4)) {
        let sigma: Vec<Face> = supremum_section(&rep).faces().collect();
        prop_assert_eq!(sigma, common::section(&rep));
    }

    #[test]
    fn is_face_matches_the_definition(rep in common::representation(1..=8, 1..=4), bits in any::<u64>()) {
        let face = Face::from_bits(bits & rep.ground().all().bits());
        prop_assert_eq!(is_face(face, &rep), common::is_face(&rep, face));
    }

    #[test]
    fn section_is_downward_closed_and_small(rep in common::representation(1..=8, 1..=4)) {
        let sigma = supremum_section(&rep);
        prop_assert!(sigma.contains(Face::EMPTY));
        prop_assert!(sigma.is_downward_closed());
        prop_assert!(sigma.faces().all(|f| f.len() <= rep.dimension()));
    }

    #[test]
    fn singletons_are_faces_iff_nothing_is_below_in_every_order(rep in common::representation(1..=8, 1..=4)) {
        let sigma = supremum_section(&rep);
        let pos = common::positions(&rep);
        for v in 0..rep.len() {
            let undercut = (0..rep.len())
                .any(|x| (0..rep.dimension()).all(|i| pos[i][x] < pos[i][v]));
            prop_assert_eq!(sigma.contains(Face::singleton(Element::new(v))), !undercut);
        }
    }

    #[test]
    fn dropping_an_order_gives_a_subcomplex(rep in common::representation(1..=8, 2..=4)) {
        let smaller = supremum_section(&rep.drop_last_order().unwrap());
        prop_assert!(smaller.is_subcomplex_of(&supremum_section(&rep)));
    }

    #[test]
    fn psi_matches_the_definition_on_the_layer(rep in common::representation(1..=8, 2..=4)) {
        let sigma = supremum_section(&rep);
        let smaller = supremum_section(&rep.drop_last_order().unwrap());
        for face in sigma.faces() {
            if smaller.contains(face) {
                prop_assert!(psi(face, &rep).is_err());
            } else {
                let expected = common::psi(&rep, face).expect("layer faces have a pivot");
                prop_assert_eq!(psi(face, &rep).unwrap().id(), expected);
            }
        }
        let classes = classify_layer(&rep).unwrap();
        prop_assert_eq!(classes.len(), sigma.len() - smaller.len());
        for c in classes {
            prop_assert_eq!(c.side == Side::B, c.face.contains(c.psi));
        }
    }

    #[test]
    fn layer_structure_holds_at_every_level(rep in common::representation(1..=8, 2..=4)) {
        let sections = prefix_sections(&rep);
        for k in 2..=rep.dimension() {
            let prefix = rep.prefix(k).unwrap();
            let (current, previous) = (&sections[k - 1], &sections[k - 2]);
            prop_assert_eq!(check_psi_properties(&prefix, current, previous), Ok(()));
            prop_assert_eq!(check_bijection(&prefix, current, previous), Ok(()));
            prop_assert_eq!(check_cross_arcs(current, previous), Ok(()));
        }
    }

    #[test]
    fn matching_is_complete_and_acyclic(rep in common::representation(1..=8, 1..=4)) {
        let sigma = supremum_section(&rep);
        let m = build_matching(&rep).unwrap();
        prop_assert_eq!(2 * m.len(), sigma.len());
        let report = verify_matching(&sigma.hasse(), &m);
        prop_assert!(report.all_pass(), "{:?}", report);
    }

    #[test]
    fn pivot_decreases_along_unmatched_arcs_within_a_layer(rep in common::representation(1..=8, 2..=4)) {
        // for a matched (F + ψF, F) and another A-face G below F + ψF in the
        // same layer, ψF lies in G and is strictly below ψ(G) in the last
        // order; chaining this around a cycle is impossible
        let sigma = supremum_section(&rep);
        let smaller = supremum_section(&rep.drop_last_order().unwrap());
        let last = rep.orders().last().unwrap();
        let in_layer = |f: Face| sigma.contains(f) && !smaller.contains(f);
        for p in layer_matching(&rep).unwrap().pairs() {
            let pf = psi(p.lower, &rep).unwrap();
            for e in p.upper {
                let g = p.upper.without(e);
                if g == p.lower || !in_layer(g) {
                    continue;
                }
                let pg = psi(g, &rep).unwrap();
                if !g.contains(pg) {
                    prop_assert!(g.contains(pf));
                    prop_assert!(last.rank(pf) < last.rank(pg));
                }
            }
        }
    }

    #[test]
    fn extraction_replays_to_a_point(rep in common::representation(1..=8, 1..=4)) {
        let sigma = supremum_section(&rep);
        let m = build_matching(&rep).unwrap();
        let ex = extract_collapse_sequence(&sigma, &m).unwrap();
        prop_assert_eq!(ex.sequence.len(), (sigma.len() - 2) / 2);
        let mut current = sigma.clone();
        for step in &ex.sequence.steps {
            let next = elementary_collapse(&current, step.free).unwrap();
            prop_assert_eq!(current.len() - next.len(), 2);
            current = next;
        }
        prop_assert_eq!(current.as_point(), Some(rep.orders()[0].minimum()));
        prop_assert_eq!(replay(&sigma, &ex.sequence).unwrap(), current);
        prop_assert_eq!(ex.terminal, MatchedPair::new(Face::singleton(rep.orders()[0].minimum()), Face::EMPTY));
        // deterministic
        prop_assert_eq!(extract_collapse_sequence(&sigma, &m).unwrap(), ex);
    }

    #[test]
    fn bruteforce_oracle_agrees(rep in common::representation(1..=7, 1..=3)) {
        let sigma = supremum_section(&rep);
        match is_collapsible_bruteforce(&sigma, DEFAULT_BUDGET) {
            Collapsibility::Yes(witness) => {
                prop_assert!(replay(&sigma, &witness).unwrap().is_point());
            }
            other => prop_assert!(false, "oracle says {:?}", other),
        }
    }

    #[test]
    fn representation_files_round_trip(rep in common::representation(1..=10, 1..=5)) {
        let text = write_representation(&rep);
        let back = parse_representation(&text).unwrap();
        prop_assert_eq!(back.order_names(), rep.order_names());
        prop_assert_eq!(write_representation(&back), text);
    }
}

#[test]
fn hasse_arc_count_on_sections() {
    for seed in 0..200 {
        let rep = random::random_representation(7, 3, seed).unwrap();
        let sigma = supremum_section(&rep);
        let arcs: usize = sigma.faces().map(|f| f.len()).sum();
        assert_eq!(sigma.hasse().arcs().len(), arcs);
    }
}
