//! Group structure and operator well-definedness.

use std::collections::HashMap;

use crate::divdiff::{
    apply_letter, apply_letter_by_division, apply_word, lemma1_check, nabla_b_word, nabla_d_word,
    partial_v_word,
};
use crate::error::Result;
use crate::ptilde::{branch, qtilde, qtilde_with, strict_partitions, QtildeMethod};
use crate::schubert::{schubert_y, schubert_y_by_recursion};
use crate::weyl::{
    distinguished, enumerate_group, evaluate_word, generators, longest_element,
    reduced_words_up_to, tau, Distinguished, GroupType, Letter, SignedPermutation,
    ENUMERATION_BOUND,
};

use super::{staircase_codes, Ctx};

const TYPES: [GroupType; 3] = [GroupType::A, GroupType::B, GroupType::D];

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Cayley-graph distances from the identity, the length oracle.
fn bfs_lengths(t: GroupType, n: usize) -> Result<HashMap<SignedPermutation, usize>> {
    let gens: Vec<SignedPermutation> = generators(t, n)
        .into_iter()
        .map(|l| SignedPermutation::from_letter(n, l))
        .collect::<Result<_>>()?;
    let mut dist = HashMap::new();
    let mut frontier = vec![SignedPermutation::identity(n)];
    dist.insert(frontier[0].clone(), 0usize);
    let mut d = 0;
    while !frontier.is_empty() {
        d += 1;
        let mut next = Vec::new();
        for w in &frontier {
            for g in &gens {
                let v = w.compose(g);
                if !dist.contains_key(&v) {
                    dist.insert(v.clone(), d);
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    Ok(dist)
}

// ---- integer group algebra --------------------------------------------

type Alg = HashMap<SignedPermutation, i64>;

fn alg_mul(a: &Alg, b: &Alg) -> Alg {
    let mut out: Alg = HashMap::new();
    for (u, cu) in a {
        for (v, cv) in b {
            *out.entry(u.compose(v)).or_insert(0) += cu * cv;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn alg_add(a: &Alg, b: &Alg) -> Alg {
    let mut out = a.clone();
    for (v, cv) in b {
        *out.entry(v.clone()).or_insert(0) += cv;
    }
    out.retain(|_, c| *c != 0);
    out
}

fn alg_scale(a: &Alg, by: i64) -> Alg {
    a.iter().map(|(w, c)| (w.clone(), c * by)).collect()
}

fn alg_display(a: &Alg) -> String {
    let mut keyed: Vec<(String, i64)> = a.iter().map(|(w, c)| (w.to_string(), *c)).collect();
    keyed.sort();
    format!("{keyed:?}")
}

/// The signed sum `sum_w (-1)^{l(w)} w` over the whole group.
fn signed_sum(t: GroupType, n: usize) -> Result<Alg> {
    let mut out = Alg::new();
    for w in enumerate_group(t, n, ENUMERATION_BOUND)? {
        let coeff = if w.length(t)? % 2 == 0 { 1 } else { -1 };
        out.insert(w, coeff);
    }
    Ok(out)
}

/// `prod_{i=1..n} (1 +- t_i)` with `t_i` the sign change of the `i`-th
/// coordinate.
fn sign_change_product(n: usize, plus: bool) -> Alg {
    let mut out = Alg::from([(SignedPermutation::identity(n), 1)]);
    for i in 1..=n {
        let t = tau(n, i);
        let mut next = out.clone();
        for (w, c) in &out {
            *next.entry(w.compose(&t)).or_insert(0) += if plus { *c } else { -*c };
        }
        next.retain(|_, c| *c != 0);
        out = next;
    }
    out
}

pub(crate) fn coxeter(ctx: &mut Ctx) -> Result<()> {
    for n in ctx.ranks("orders, lengths, reduced words", &[1, 2, 3, 4]) {
        for t in TYPES {
            let group = enumerate_group(t, n, ENUMERATION_BOUND)?;
            let expected = match t {
                GroupType::A => factorial(n),
                GroupType::B => factorial(n) << n,
                GroupType::D => factorial(n) << (n.saturating_sub(1)),
            };
            ctx.check(format!("order of {t}{n}"), group.len() == expected, || {
                format!("lhs = {}; rhs = {expected}", group.len())
            });

            let dist = bfs_lengths(t, n)?;
            let top = match t {
                GroupType::A => n * (n - 1) / 2,
                GroupType::B => n * n,
                GroupType::D => n * (n - 1),
            };
            let w0 = longest_element(t, n);
            let at_top = group.iter().filter(|w| w.length(t).unwrap() == top).count();
            ctx.check(
                format!("longest element of {t}{n}"),
                w0.length(t)? == top && at_top == 1,
                || format!("lhs = ({}, {at_top} elements of length {top}); rhs = ({top}, 1)", w0.length(t).unwrap()),
            );

            for w in &group {
                let len = w.length(t)?;
                let oracle = dist[w];
                ctx.check(format!("length of {w} in {t}{n}"), len == oracle, || {
                    format!("lhs = {len}; rhs = {oracle}")
                });
                let word = w.reduced_word(t)?;
                let back = evaluate_word(n, &word)?;
                ctx.check(
                    format!("reduced word of {w} in {t}{n}"),
                    word.len() == len && back == *w,
                    || format!("lhs = ({} letters, {back}); rhs = ({len}, {w})", word.len()),
                );
            }
        }
    }

    // the triangular operator words are reduced, and the scalar-product
    // word reaches upsilon = omega * w0(D)
    for n in ctx.ranks("operator words", &[2, 3, 4, 5]) {
        let upsilon = distinguished(GroupType::D, n, Distinguished::Upsilon)?;
        let word = partial_v_word(n)?;
        let reached = evaluate_word(n, &word)?;
        ctx.check(
            format!("scalar-product word at n={n}"),
            reached == upsilon && word.len() == upsilon.length(GroupType::D)?,
            || format!("lhs = ({} letters, {reached}); rhs = ({}, {upsilon})",
                word.len(), upsilon.length(GroupType::D).unwrap()),
        );
        if n % 2 == 0 {
            let alt = evaluate_word(n, &nabla_d_word(n / 2, n)?)?;
            ctx.check(format!("half-rank triangular word at n={n}"), alt == upsilon, || {
                format!("lhs = {alt}; rhs = {upsilon}")
            });
        }
        for k in 1..=n {
            let word = nabla_b_word(k, n)?;
            let reached = evaluate_word(n, &word)?;
            // the full tower is the negated reversal, of length n(n+1)/2
            let full = SignedPermutation::from_image((1..=n).map(|i| i as i32 - 1 - n as i32).collect())?;
            let ok = word.len() == reached.length(GroupType::B)?
                && (k < n || reached == full);
            ctx.check(format!("triangular B word k={k}, n={n} is reduced"), ok, || {
                format!("lhs = ({} letters, {reached}); rhs = reduced", word.len())
            });
        }
        for k in 1..=n / 2 {
            let word = nabla_d_word(k, n)?;
            let reached = evaluate_word(n, &word)?;
            ctx.check(
                format!("triangular D word k={k}, n={n} is reduced"),
                word.len() == reached.length(GroupType::D)?,
                || format!("lhs = ({} letters, {reached}); rhs = reduced", word.len()),
            );
        }
    }

    // sign-change reflections: t_1 = s_0 and t_i = s_{i-1} t_{i-1} s_{i-1}
    for n in ctx.ranks("signed-sum factorization", &[2, 3, 4]) {
        let mut prev = tau(n, 1);
        ctx.check(
            format!("first sign change at n={n}"),
            prev == SignedPermutation::simple_zero(n)?,
            || format!("lhs = {prev}; rhs = {}", SignedPermutation::simple_zero(n).unwrap()),
        );
        for i in 2..=n {
            let s = SignedPermutation::simple(n, i - 1)?;
            let conjugate = s.compose(&prev).compose(&s);
            ctx.check(format!("sign change recursion i={i}, n={n}"), conjugate == tau(n, i), || {
                format!("lhs = {conjugate}; rhs = {}", tau(n, i))
            });
            prev = conjugate;
        }

        // the hyperoctahedral signed sum factors through the symmetric one,
        // on either side; twice the even signed sum splits over both signs
        let omega_a = signed_sum(GroupType::A, n)?;
        let omega_b = signed_sum(GroupType::B, n)?;
        let omega_d = signed_sum(GroupType::D, n)?;
        let minus = sign_change_product(n, false);
        let plus = sign_change_product(n, true);
        for (side, product) in
            [("right", alg_mul(&omega_a, &minus)), ("left", alg_mul(&minus, &omega_a))]
        {
            ctx.check(format!("B signed sum splits ({side}) at n={n}"), product == omega_b, || {
                format!("lhs = {}; rhs = {}", alg_display(&product), alg_display(&omega_b))
            });
        }
        let both = alg_add(&plus, &minus);
        let doubled = alg_scale(&omega_d, 2);
        for (side, product) in
            [("right", alg_mul(&omega_a, &both)), ("left", alg_mul(&both, &omega_a))]
        {
            ctx.check(format!("D signed sum splits ({side}) at n={n}"), product == doubled, || {
                format!("lhs = {}; rhs = {}", alg_display(&product), alg_display(&doubled))
            });
        }
    }

    for n in ctx.ranks("antisymmetrization vs longest word", &[2, 3]) {
        for t in TYPES {
            ctx.check(format!("antisymmetrized box over delta in {t}{n}"), lemma1_check(t, n)?, || {
                "lhs = antisymmetrize/delta; rhs = longest-word operator".into()
            });
        }
    }
    Ok(())
}

pub(crate) fn welldef(ctx: &mut Ctx) -> Result<()> {
    let letters = [Letter::S(1), Letter::S(2), Letter::S(3), Letter::Zero, Letter::ZeroC, Letter::Heart];
    let n = 4;
    ctx.note_range("letter checks: n = 4".to_string());

    if ctx.restrict.map_or(true, |r| r == n) {
        // the expansion rules agree with the symmetrize-and-divide oracle
        for letter in letters {
            for case in 0..50 {
                let f = ctx.random_poly(n, 5, 4);
                let fast = apply_letter(&f, letter)?;
                let slow = apply_letter_by_division(&f, letter)?;
                ctx.check(format!("division oracle for d{letter}, case {case}"), fast == slow, || {
                    format!("input = {}; lhs = {}; rhs = {}",
                        f.to_plain_string(), fast.to_plain_string(), slow.to_plain_string())
                });
            }
        }

        // nilpotence
        for letter in letters {
            for case in 0..200 {
                let f = ctx.random_poly(n, 5, 4);
                let twice = apply_letter(&apply_letter(&f, letter)?, letter)?;
                ctx.check(format!("d{letter} squares to zero, case {case}"), twice.is_zero(), || {
                    format!("input = {}; lhs = {}; rhs = 0", f.to_plain_string(), twice.to_plain_string())
                });
            }
        }

        // braid and commutation relations, as operators
        let relations: [(&str, &str); 10] = [
            ("1 3", "3 1"),
            ("1 2 1", "2 1 2"),
            ("2 3 2", "3 2 3"),
            ("0 2", "2 0"),
            ("0 3", "3 0"),
            ("0 1 0 1", "1 0 1 0"),
            ("h 1", "1 h"),
            ("h 3", "3 h"),
            ("h 2 h", "2 h 2"),
            ("0c 1 0c 1", "1 0c 1 0c"),
        ];
        for (left, right) in relations {
            let lw = crate::divdiff::parse_word(left)?;
            let rw = crate::divdiff::parse_word(right)?;
            for case in 0..200 {
                let f = ctx.random_poly(n, 5, 4);
                let a = apply_word(&f, &lw)?;
                let b = apply_word(&f, &rw)?;
                ctx.check(format!("relation {left} = {right}, case {case}"), a == b, || {
                    format!("input = {}; lhs = {}; rhs = {}",
                        f.to_plain_string(), a.to_plain_string(), b.to_plain_string())
                });
            }
        }

        // twisted Leibniz rule per letter
        for letter in letters {
            let reflection = SignedPermutation::from_letter(n, match letter {
                Letter::ZeroC => Letter::Zero,
                other => other,
            })?;
            for case in 0..50 {
                let f = ctx.random_poly(n, 4, 3);
                let g = ctx.random_poly(n, 4, 3);
                let lhs = apply_letter(&f.checked_mul(&g)?, letter)?;
                let rhs = f
                    .checked_mul(&apply_letter(&g, letter)?)?
                    .checked_add(&apply_letter(&f, letter)?.checked_mul(&g.act(&reflection)?)?)?;
                ctx.check(format!("Leibniz rule for d{letter}, case {case}"), lhs == rhs, || {
                    format!("f = {}; g = {}; lhs = {}; rhs = {}",
                        f.to_plain_string(), g.to_plain_string(),
                        lhs.to_plain_string(), rhs.to_plain_string())
                });
            }
        }
    }

    // distinct reduced words act identically
    for (t, n) in [(GroupType::B, 3), (GroupType::D, 4)] {
        if ctx.restrict.map_or(false, |r| r != n) {
            continue;
        }
        ctx.note_range(format!("reduced-word agreement: {t}{n}"));
        let w0 = longest_element(t, n);
        for w in enumerate_group(t, n, ENUMERATION_BOUND)? {
            let words = reduced_words_up_to(&w, t, 3)?;
            let mut distinct = words.clone();
            distinct.sort();
            distinct.dedup();
            let mut ok = !words.is_empty() && distinct.len() == words.len();
            if w == w0 {
                ok = ok && words.len() == 3;
            }
            for word in &words {
                ok = ok
                    && word.len() == w.length(t)?
                    && evaluate_word(n, word)? == w;
            }
            let f = ctx.random_poly(n, 4, 4);
            let images: Vec<_> =
                words.iter().map(|word| apply_word(&f, word)).collect::<Result<_>>()?;
            ok = ok && images.windows(2).all(|p| p[0] == p[1]);
            ctx.check(format!("reduced words of {w} in {t}{n}"), ok, || {
                format!(
                    "words = {:?}; images = {:?}",
                    words
                        .iter()
                        .map(|word| word.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" "))
                        .collect::<Vec<_>>(),
                    images.iter().map(|p| p.to_plain_string()).collect::<Vec<_>>()
                )
            });
        }
    }

    // the two Schubert constructions agree on the whole staircase
    for n in ctx.ranks("Schubert recursion", &[2, 3, 4]) {
        for alpha in staircase_codes(n) {
            let direct = schubert_y(&alpha, n)?;
            let recursed = schubert_y_by_recursion(&alpha, n)?;
            ctx.check_poly(format!("Y[{alpha:?}] over {n} variables"), &recursed, &direct);
        }
    }

    // the Pfaffian and recursive expansions agree, repeats included
    for n in ctx.ranks("Pfaffian vs recursion", &[3, 4, 5]) {
        let mut indices = strict_partitions(n);
        indices.extend([vec![2, 2], vec![2, 2, 1], vec![3, 3, 1], vec![3, 2, 2]]);
        for parts in indices {
            let a = qtilde_with(&parts, n, QtildeMethod::Pfaffian)?;
            let b = qtilde_with(&parts, n, QtildeMethod::Recursion)?;
            ctx.check_poly(format!("Qt[{parts:?}] over {n} variables"), &a, &b);
        }
    }

    // a repeated part splits off as a factor
    for n in ctx.ranks("repeated-pair factorization", &[3, 4]) {
        for (parts, pair, rest) in [
            (vec![2, 2, 2], vec![2, 2], vec![2]),
            (vec![3, 2, 2], vec![2, 2], vec![3]),
            (vec![2, 2, 1], vec![2, 2], vec![1]),
            (vec![3, 3, 1], vec![3, 3], vec![1]),
            (vec![4, 4, 2], vec![4, 4], vec![2]),
        ] {
            let lhs = qtilde(&parts, n)?;
            let rhs = qtilde(&pair, n)?.checked_mul(&qtilde(&rest, n)?)?;
            ctx.check_poly(format!("Qt[{parts:?}] factors over {n} variables"), &lhs, &rhs);
        }
    }

    // one-variable branching
    for m in ctx.ranks("branching", &[2, 3, 4]) {
        let mut indices = strict_partitions(4);
        indices.extend([vec![2, 2], vec![3, 3, 1]]);
        for parts in indices {
            let (holds, contributing) = branch(&parts, m)?;
            ctx.check(format!("branch of Qt[{parts:?}] at m={m}"), holds, || {
                format!("lhs = Qt[{parts:?}]({m} vars); rhs = sum over {contributing:?}")
            });
        }
    }
    Ok(())
}
