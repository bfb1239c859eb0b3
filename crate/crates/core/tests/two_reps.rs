use std::sync::Arc;

use catpow::groups::{symmetric_group, FiniteGroup, GSet, Permutation};
use catpow::schur_cocycle::schur_supersymbol_character;
use catpow::two_reps::*;

fn perm_reps() -> Vec<PermTwoRep> {
    let s3 = Arc::new(symmetric_group(3).unwrap());
    let s4 = Arc::new(symmetric_group(4).unwrap());
    let z4 = Arc::new(FiniteGroup::cyclic(4).unwrap());
    vec![
        PermTwoRep::new(GSet::natural(s3.clone())),
        PermTwoRep::new(GSet::regular(s3)),
        PermTwoRep::new(GSet::natural(s4.clone())),
        PermTwoRep::new(GSet::regular(s4)),
        PermTwoRep::new(GSet::regular(z4)),
    ]
}

#[test]
fn sign_two_character_is_conjugation_invariant() {
    for n in 1..=6 {
        let rep = sign_two_rep(n).unwrap();
        let g = rep.group().clone();
        for (x, y) in g.commuting_pairs() {
            let value = rep.two_character(x, y).unwrap();
            for s in g.generators().iter().copied().chain([g.identity()]) {
                let moved = rep.two_character(g.conjugate(s, x), g.conjugate(s, y)).unwrap();
                assert_eq!(moved, value, "n={n}");
            }
        }
    }
}

#[test]
fn sign_two_character_matches_closed_form_and_slot_rule() {
    for n in 1..=6 {
        let rep = sign_two_rep(n).unwrap();
        let g = rep.group().clone();
        for (x, y) in g.commuting_pairs() {
            let (sx, sy) = (g.label(x), g.label(y));
            let e = schur_supersymbol_character(sx, sy).unwrap() as i64;
            let expected = if sx.is_odd() { SuperPair::new(0, e) } else { SuperPair::new(e, 0) };
            assert_eq!(rep.two_character(x, y).unwrap(), expected, "n={n} g={sx:?} h={sy:?}");
            assert_eq!(two_character_cocycle(&rep, x, y).unwrap(), expected);
        }
    }
}

#[test]
fn perm_two_character_is_symmetric_and_invariant() {
    for rep in perm_reps() {
        let g = rep.group().clone();
        for (x, y) in g.commuting_pairs() {
            let value = rep.two_character(x, y).unwrap();
            assert_eq!(value, rep.two_character(y, x).unwrap());
            for s in g.elements() {
                assert_eq!(rep.two_character(g.conjugate(s, x), g.conjugate(s, y)).unwrap(), value);
            }
        }
    }
}

#[test]
fn categorical_characters() {
    let s3 = Arc::new(symmetric_group(3).unwrap());
    let natural = PermTwoRep::new(GSet::natural(s3.clone()));
    assert_eq!(categorical_character(&natural, s3.identity()).dim(), 3);
    let t = s3.index_of(&Permutation::elementary(3, 1)).unwrap();
    let x = categorical_character(&natural, t);
    assert_eq!(x.dim(), 1);
    assert!(x.is_homomorphism(&s3));
    assert_eq!(two_character_perm(&natural, t, t).unwrap(), 1);
    assert_eq!(two_character_perm(&natural, 0, 0).unwrap(), 3);

    let z2 = Arc::new(FiniteGroup::cyclic(2).unwrap());
    let regular = PermTwoRep::new(GSet::regular(z2));
    assert_eq!(regular.categorical_character(1).dim(), 0);
    assert_eq!(regular.two_character(1, 0).unwrap(), 0);
    assert_eq!(regular.two_character(1, 1).unwrap(), 0);
}

#[test]
fn non_commuting_pairs_are_rejected() {
    let s3 = Arc::new(symmetric_group(3).unwrap());
    let a = s3.index_of(&Permutation::elementary(3, 1)).unwrap();
    let b = s3.index_of(&Permutation::elementary(3, 2)).unwrap();
    let natural = PermTwoRep::new(GSet::natural(s3));
    assert!(matches!(natural.two_character(a, b), Err(TwoRepError::NotCommuting { .. })));
    let sign = sign_two_rep(3).unwrap();
    assert!(matches!(sign.two_character(a, b), Err(TwoRepError::NotCommuting { .. })));
}

#[test]
fn sign_rep_examples() {
    let one = sign_two_rep(1).unwrap();
    assert_eq!(one.two_character(0, 0).unwrap(), SuperPair::new(1, 0));
    let s4 = sign_two_rep(4).unwrap();
    let g = s4.group().index_of(&Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap()).unwrap();
    let h = s4.group().index_of(&Permutation::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap()).unwrap();
    assert_eq!(s4.two_character(g, h).unwrap(), SuperPair::new(-1, 0));
    let table = cocycle_two_character_table(&s4).unwrap();
    assert!(table.iter().any(|e| e.value == SuperPair::new(-1, 0)));
}
