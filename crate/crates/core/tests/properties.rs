//! Randomized structural invariants of the polynomial ring, the group
//! action, and the divided-difference operators.

use proptest::collection::vec;
use proptest::prelude::*;

use schubop_core::divdiff::{antisymmetrize, apply_letter, apply_letter_by_division, delta};
use schubop_core::dyadic::DyadicRational;
use schubop_core::poly::SparsePolynomial;
use schubop_core::ptilde::{qtilde, qtilde_with, strict_partitions, QtildeMethod};
use schubop_core::weyl::{
    enumerate_group, evaluate_word, GroupType, Letter, SignedPermutation, ENUMERATION_BOUND,
};

fn coefficient() -> impl Strategy<Value = DyadicRational> {
    ((-6i64..=6).prop_filter("nonzero", |m| *m != 0), -2i64..=2)
        .prop_map(|(m, e)| DyadicRational::new(m.into(), e))
}

/// A sparse polynomial in `n` variables with bounded degree.
fn poly(n: usize, max_degree: u16) -> impl Strategy<Value = SparsePolynomial> {
    vec((vec(0..=max_degree, n), coefficient()), 0..5).prop_map(move |terms| {
        terms.into_iter().fold(SparsePolynomial::zero(n), |acc, (exps, c)| {
            acc.checked_add(&SparsePolynomial::monomial(n, &exps, c)).expect("same alphabet")
        })
    })
}

fn letters(n: usize) -> Vec<Letter> {
    let mut out = vec![Letter::Zero, Letter::ZeroC];
    if n >= 2 {
        out.push(Letter::Heart);
    }
    out.extend((1..n).map(|i| Letter::S(i as u8)));
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(f in poly(3, 5), g in poly(3, 5), h in poly(3, 5)) {
        let fg = f.checked_mul(&g).unwrap();
        prop_assert_eq!(&fg, &g.checked_mul(&f).unwrap());
        let left = fg.checked_mul(&h).unwrap();
        let right = f.checked_mul(&g.checked_mul(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let distributed = f.checked_mul(&g.checked_add(&h).unwrap()).unwrap();
        let expanded = fg.checked_add(&f.checked_mul(&h).unwrap()).unwrap();
        prop_assert_eq!(distributed, expanded);
    }

    #[test]
    fn print_parse_roundtrip(f in poly(3, 6)) {
        let text = f.to_plain_string();
        prop_assert_eq!(SparsePolynomial::parse(&text, 3).unwrap(), f);
    }

    #[test]
    fn serde_roundtrip(f in poly(2, 6)) {
        let json = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(serde_json::from_str::<SparsePolynomial>(&json).unwrap(), f);
    }

    #[test]
    fn action_is_a_ring_homomorphism(f in poly(3, 4), g in poly(3, 4), idx in 0usize..6) {
        let group = enumerate_group(GroupType::B, 2, ENUMERATION_BOUND).unwrap();
        let w = group[idx % group.len()].embedded(3).unwrap();
        let sum = f.checked_add(&g).unwrap().act(&w).unwrap();
        prop_assert_eq!(sum, f.act(&w).unwrap().checked_add(&g.act(&w).unwrap()).unwrap());
        let product = f.checked_mul(&g).unwrap().act(&w).unwrap();
        prop_assert_eq!(product, f.act(&w).unwrap().checked_mul(&g.act(&w).unwrap()).unwrap());
    }

    #[test]
    fn operators_square_to_zero(f in poly(3, 5)) {
        for letter in letters(3) {
            let once = apply_letter(&f, letter).unwrap();
            prop_assert!(apply_letter(&once, letter).unwrap().is_zero(), "letter {letter}");
        }
    }

    #[test]
    fn operator_agrees_with_division_oracle(f in poly(3, 5)) {
        for letter in letters(3) {
            let fast = apply_letter(&f, letter).unwrap();
            let slow = apply_letter_by_division(&f, letter).unwrap();
            prop_assert_eq!(&fast, &slow, "letter {}", letter);
        }
    }

    #[test]
    fn braid_relations_on_polynomials(f in poly(4, 4)) {
        let chains: &[(&str, &str)] = &[
            ("1 2 1", "2 1 2"),
            ("2 3 2", "3 2 3"),
            ("1 3", "3 1"),
            ("0 1 0 1", "1 0 1 0"),
            ("0 2", "2 0"),
            ("h 2 h", "2 h 2"),
            ("h 1", "1 h"),
            ("h 3", "3 h"),
            ("0c 1 0c 1", "1 0c 1 0c"),
        ];
        for (a, b) in chains {
            let left = schubop_core::divdiff::apply_word(&f, &schubop_core::divdiff::parse_word(a).unwrap()).unwrap();
            let right = schubop_core::divdiff::apply_word(&f, &schubop_core::divdiff::parse_word(b).unwrap()).unwrap();
            prop_assert_eq!(left, right, "{} vs {}", a, b);
        }
    }

    #[test]
    fn leibniz_rule(f in poly(3, 4), g in poly(3, 4)) {
        // (fg) d = (f d) g + f^s (g d) for every letter
        for letter in letters(3) {
            let s = SignedPermutation::from_letter(3, letter).unwrap();
            let lhs = apply_letter(&f.checked_mul(&g).unwrap(), letter).unwrap();
            let rhs = apply_letter(&f, letter)
                .unwrap()
                .checked_mul(&g)
                .unwrap()
                .checked_add(&f.act(&s).unwrap().checked_mul(&apply_letter(&g, letter).unwrap()).unwrap())
                .unwrap();
            prop_assert_eq!(lhs, rhs, "letter {}", letter);
        }
    }

    #[test]
    fn antisymmetrization_is_divisible(f in poly(2, 5)) {
        for t in [GroupType::A, GroupType::B, GroupType::D] {
            let skew = antisymmetrize(&f, t).unwrap();
            if skew.is_zero() {
                continue;
            }
            let quotient = skew.exact_divide(&delta(t, 2)).unwrap();
            prop_assert_eq!(quotient.checked_mul(&delta(t, 2)).unwrap(), skew);
        }
    }

    #[test]
    fn words_reduce_to_their_element(seq in vec(0usize..4, 0..10)) {
        let n = 3;
        let alphabet = letters(n);
        let word: Vec<Letter> = seq
            .iter()
            .map(|&i| [Letter::Zero, Letter::Heart, Letter::S(1), Letter::S(2)][i % 4])
            .filter(|l| alphabet.contains(l))
            .collect();
        let w = evaluate_word(n, &word).unwrap();
        let t = if word.contains(&Letter::Zero) {
            GroupType::B
        } else if word.contains(&Letter::Heart) {
            GroupType::D
        } else {
            GroupType::A
        };
        if w.check_member(t).is_ok() {
            let reduced = w.reduced_word(t).unwrap();
            prop_assert_eq!(reduced.len(), w.length(t).unwrap());
            prop_assert_eq!(evaluate_word(n, &reduced).unwrap(), w);
        }
    }

    #[test]
    fn basis_routes_agree(idx in 0usize..16) {
        let n = 4;
        let all = strict_partitions(n);
        let parts = &all[idx % all.len()];
        let direct = qtilde(parts, n).unwrap();
        prop_assert_eq!(&direct, &qtilde_with(parts, n, QtildeMethod::Pfaffian).unwrap());
        prop_assert_eq!(&direct, &qtilde_with(parts, n, QtildeMethod::Recursion).unwrap());
        prop_assert!(direct.is_symmetric_in_first(n));
    }
}
