//! Divided differences for types A, B and D, and their composites.
//!
//! Operators act on the left of their argument: `apply_word(f, [a, b])`
//! computes `(f da) db`. The simple operators are
//!
//! - `f d_i = (f - f^{s_i}) / (x_i - x_{i+1})`,
//! - `f d_0 = (f - f^{s_0}) / (-x_1)`,
//! - `f d_0c = (f - f^{s_0}) / (2 x_1)`,
//! - `f d_h = (f - f^{s_h}) / (-x_1 - x_2)`,
//!
//! each implemented by an exact per-monomial expansion of the quotient (the
//! numerators are always divisible, so no remainder can occur).
//!
//! The module also provides the triangular composites `nabla_B`, `nabla_D`
//! and `partial_v`, alternating sums over a whole group, the products
//! `delta` they are compared against, and planar displays of words with
//! their row and column readings.

use crate::dyadic::DyadicRational;
use crate::error::{Error, Result};
use crate::poly::{Monomial, SparsePolynomial};
use crate::weyl::{
    enumerate_group, evaluate_word, longest_element, GroupType, Letter, SignedPermutation,
    ENUMERATION_BOUND,
};

fn check_letter(letter: Letter, n: usize) -> Result<()> {
    let ok = match letter {
        Letter::S(i) => i as usize >= 1 && (i as usize) < n,
        Letter::Zero | Letter::ZeroC => n >= 1,
        Letter::Heart => n >= 2,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidLetter(
            letter.to_string(),
            format!("alphabet has {n} variables"),
        ))
    }
}

/// Applies one simple divided difference.
pub fn apply_letter(f: &SparsePolynomial, letter: Letter) -> Result<SparsePolynomial> {
    let n = f.alphabet_size();
    check_letter(letter, n)?;
    let mut raw: Vec<(Monomial, DyadicRational)> = Vec::new();
    match letter {
        Letter::S(i) => {
            let (p, q) = (i as usize - 1, i as usize);
            for (m, c) in f.iter() {
                let (a, b) = (m.0[p], m.0[q]);
                if a == b {
                    continue;
                }
                if a > b {
                    for j in 0..a - b {
                        let mut e = m.0.clone();
                        e[p] = b + j;
                        e[q] = a - 1 - j;
                        raw.push((Monomial(e), c.clone()));
                    }
                } else {
                    for j in 0..b - a {
                        let mut e = m.0.clone();
                        e[p] = a + j;
                        e[q] = b - 1 - j;
                        raw.push((Monomial(e), -c));
                    }
                }
            }
        }
        Letter::Zero | Letter::ZeroC => {
            let scale = if letter == Letter::Zero {
                DyadicRational::from_integer(-2)
            } else {
                DyadicRational::one()
            };
            for (m, c) in f.iter() {
                if m.0[0] % 2 == 1 {
                    let mut e = m.0.clone();
                    e[0] -= 1;
                    raw.push((Monomial(e), c * &scale));
                }
            }
        }
        Letter::Heart => {
            for (m, c) in f.iter() {
                let (a, b) = (m.0[0], m.0[1]);
                if a == b {
                    continue;
                }
                // sign pattern of the expanded quotient by -(x1 + x2)
                let (lo, hi, extra_flip) = if a > b { (b, a, true) } else { (a, b, (b - a) % 2 == 1) };
                let width = hi - lo;
                for j in 0..width {
                    let mut e = m.0.clone();
                    e[0] = lo + j;
                    e[1] = hi - 1 - j;
                    let flip = ((width - 1 - j) % 2 == 1) ^ extra_flip;
                    raw.push((Monomial(e), if flip { -c } else { c.clone() }));
                }
            }
        }
    }
    SparsePolynomial::from_terms(n, raw)
}

/// The same operator computed literally as a numerator divided exactly;
/// used as an independent oracle for `apply_letter`.
pub fn apply_letter_by_division(f: &SparsePolynomial, letter: Letter) -> Result<SparsePolynomial> {
    let n = f.alphabet_size();
    check_letter(letter, n)?;
    let x = |v| SparsePolynomial::variable(n, v);
    let (reflected, divisor) = match letter {
        Letter::S(i) => (
            f.swapped_vars(i as usize - 1, i as usize),
            &x(i as usize - 1) - &x(i as usize),
        ),
        Letter::Zero => (f.negated_var(0), -&x(0)),
        Letter::ZeroC => (f.negated_var(0), x(0).scaled(&DyadicRational::from_integer(2))),
        Letter::Heart => (f.swapped_negated_vars(0, 1), -&(&x(0) + &x(1))),
    };
    f.checked_sub(&reflected)?.exact_divide(&divisor)
}

/// Applies a word of simple operators left to right.
pub fn apply_word(f: &SparsePolynomial, word: &[Letter]) -> Result<SparsePolynomial> {
    let mut out = f.clone();
    for &letter in word {
        out = apply_letter(&out, letter)?;
    }
    Ok(out)
}

/// Applies the operator of a group element via any reduced word (the braid
/// relations make the result independent of the choice).
pub fn apply_element(
    f: &SparsePolynomial,
    w: &SignedPermutation,
    t: GroupType,
) -> Result<SparsePolynomial> {
    apply_word(f, &w.reduced_word(t)?)
}

/// Word of the triangular type-B operator: blocks `d_0 d_1 .. d_{n-t}` for
/// `t = 1..k`.
pub fn nabla_b_word(k: usize, n: usize) -> Result<Vec<Letter>> {
    if k > n {
        return Err(Error::InvalidArgument(format!("nabla_B needs k <= n, got k={k}, n={n}")));
    }
    let mut word = Vec::new();
    for t in 1..=k {
        word.push(Letter::Zero);
        for i in 1..=n - t {
            word.push(Letter::S(i as u8));
        }
    }
    Ok(word)
}

/// Word of the triangular type-D operator: blocks
/// `d_h d_2 .. d_{n-2t+1} d_1 .. d_{n-2t}` for `t = 1..k`.
pub fn nabla_d_word(k: usize, n: usize) -> Result<Vec<Letter>> {
    if 2 * k > n {
        return Err(Error::InvalidArgument(format!("nabla_D needs 2k <= n, got k={k}, n={n}")));
    }
    let mut word = Vec::new();
    for t in 1..=k {
        word.push(Letter::Heart);
        for i in 2..=n - 2 * t + 1 {
            word.push(Letter::S(i as u8));
        }
        for i in 1..=n.saturating_sub(2 * t) {
            word.push(Letter::S(i as u8));
        }
    }
    Ok(word)
}

/// Word of the scalar-product operator of type D on `Sym(n)`; its length is
/// `n(n-1)/2`.
pub fn partial_v_word(n: usize) -> Result<Vec<Letter>> {
    if n < 2 {
        return Ok(Vec::new());
    }
    if n % 2 == 0 {
        let mut word = nabla_d_word((n - 2) / 2, n)?;
        word.push(Letter::Heart);
        Ok(word)
    } else {
        nabla_d_word((n - 1) / 2, n)
    }
}

pub fn nabla_b(f: &SparsePolynomial, k: usize, n: usize) -> Result<SparsePolynomial> {
    apply_word(f, &nabla_b_word(k, n)?)
}

pub fn nabla_d(f: &SparsePolynomial, k: usize, n: usize) -> Result<SparsePolynomial> {
    apply_word(f, &nabla_d_word(k, n)?)
}

pub fn partial_v(f: &SparsePolynomial, n: usize) -> Result<SparsePolynomial> {
    apply_word(f, &partial_v_word(n)?)
}

/// The alternating sum `f -> sum_w (-1)^{l(w)} f^w` over the whole group on
/// the alphabet of `f`.
pub fn antisymmetrize(f: &SparsePolynomial, t: GroupType) -> Result<SparsePolynomial> {
    let n = f.alphabet_size();
    let mut acc = SparsePolynomial::zero(n);
    for w in enumerate_group(t, n, ENUMERATION_BOUND)? {
        let term = f.act(&w)?;
        acc = if w.length(t)? % 2 == 0 {
            acc.checked_add(&term)?
        } else {
            acc.checked_sub(&term)?
        };
    }
    Ok(acc)
}

/// The product the alternating sum is divided by:
/// type A: `prod_{i<j} (x_i - x_j)`;
/// type B: `prod_i x_i * prod_{i>j} (x_i^2 - x_j^2)`;
/// type D: `prod_{i>j} (x_i^2 - x_j^2)`.
pub fn delta(t: GroupType, n: usize) -> SparsePolynomial {
    let x = |v| SparsePolynomial::variable(n, v);
    let sq = |v| &x(v) * &x(v);
    let mut out = SparsePolynomial::one(n);
    match t {
        GroupType::A => {
            for i in 0..n {
                for j in i + 1..n {
                    out = &out * &(&x(i) - &x(j));
                }
            }
        }
        GroupType::B => {
            for i in 0..n {
                out = &out * &x(i);
            }
            for i in 0..n {
                for j in 0..i {
                    out = &out * &(&sq(i) - &sq(j));
                }
            }
        }
        GroupType::D => {
            for i in 0..n {
                for j in 0..i {
                    out = &out * &(&sq(i) - &sq(j));
                }
            }
        }
    }
    out
}

/// Exponent box of the free-module monomial basis used by `lemma1_check`.
fn lemma1_box(t: GroupType, n: usize) -> Vec<u16> {
    (1..=n)
        .map(|i| match t {
            GroupType::A => (n - i) as u16,
            GroupType::B => (2 * (n - i) + 1) as u16,
            GroupType::D => (2 * (n - i)) as u16,
        })
        .collect()
}

/// Checks that the alternating sum followed by exact division by the
/// matching `delta` agrees with the longest-element divided difference
/// (up to the sign `(-1)^n` in type B) on every monomial of the
/// free-module basis box.
pub fn lemma1_check(t: GroupType, n: usize) -> Result<bool> {
    let bounds = lemma1_box(t, n);
    let den = delta(t, n);
    let w0 = longest_element(t, n);
    let word = w0.reduced_word(t)?;
    let negate = t == GroupType::B && n % 2 == 1;
    let mut exp = vec![0u16; n];
    loop {
        let mono = SparsePolynomial::monomial(n, &exp, DyadicRational::one());
        let lhs = antisymmetrize(&mono, t)?.exact_divide(&den)?;
        let mut rhs = apply_word(&mono, &word)?;
        if negate {
            rhs = -rhs;
        }
        if lhs != rhs {
            return Ok(false);
        }
        // advance the mixed-radix counter over the box
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(true);
            }
            if exp[pos] < bounds[pos] {
                exp[pos] += 1;
                break;
            }
            exp[pos] = 0;
            pos += 1;
        }
    }
}

/// A word laid out in rows, each with a left offset; readings of such
/// displays give congruent reduced words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarDisplay {
    pub rows: Vec<(usize, Vec<Letter>)>,
}

impl PlanarDisplay {
    /// Parses rows separated by `/`, offsets marked by leading dots:
    /// `"0 1 2 3/. 0 1 2/. . 0 1"`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for row_text in text.split('/') {
            let mut offset = 0usize;
            let mut letters = Vec::new();
            for token in row_text.split_whitespace() {
                if token == "." {
                    if !letters.is_empty() {
                        return Err(Error::Parse("dot after a letter in a display row".into()));
                    }
                    offset += 1;
                } else {
                    letters.push(Letter::parse(token)?);
                }
            }
            rows.push((offset, letters));
        }
        Ok(PlanarDisplay { rows })
    }

    /// Letters read row by row, left to right.
    pub fn row_reading(&self) -> Vec<Letter> {
        self.rows.iter().flat_map(|(_, row)| row.iter().copied()).collect()
    }

    /// Letters read column by column (left to right), each column downward.
    pub fn column_reading(&self) -> Vec<Letter> {
        let width = self
            .rows
            .iter()
            .map(|(off, row)| off + row.len())
            .max()
            .unwrap_or(0);
        let mut out = Vec::new();
        for col in 0..width {
            for (off, row) in &self.rows {
                if col >= *off && col < off + row.len() {
                    out.push(row[col - off]);
                }
            }
        }
        out
    }
}

impl std::fmt::Display for PlanarDisplay {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rendered: Vec<String> = self
            .rows
            .iter()
            .map(|(off, row)| {
                let mut parts: Vec<String> = vec![".".to_string(); *off];
                parts.extend(row.iter().map(|l| l.to_string()));
                parts.join(" ")
            })
            .collect();
        f.write_str(&rendered.join("/"))
    }
}

/// Two words are congruent when they evaluate to the same group element and
/// both are reduced (their length equals the Coxeter length).
pub fn congruent(w1: &[Letter], w2: &[Letter], t: GroupType, n: usize) -> Result<bool> {
    let u = evaluate_word(n, w1)?;
    let v = evaluate_word(n, w2)?;
    if !u.is_member(t) || !v.is_member(t) {
        return Err(Error::NotInGroup(format!("words leave type {t}")));
    }
    let len = u.length(t)?;
    Ok(u == v && w1.len() == len && w2.len() == len)
}

/// Parses a space-separated word such as `"0 1 2 h 0c"`.
pub fn parse_word(text: &str) -> Result<Vec<Letter>> {
    text.split_whitespace().map(Letter::parse).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, v: usize) -> SparsePolynomial {
        SparsePolynomial::variable(n, v)
    }

    fn c(n: usize, v: i64) -> SparsePolynomial {
        SparsePolynomial::constant(n, DyadicRational::from_integer(v))
    }

    #[test]
    fn simple_operators() {
        let n = 2;
        assert_eq!(apply_letter(&x(n, 0), Letter::S(1)).unwrap(), c(n, 1));
        assert_eq!(apply_letter(&x(n, 1), Letter::S(1)).unwrap(), c(n, -1));
        let x1x2 = &x(n, 0) * &x(n, 1);
        assert!(apply_letter(&x1x2, Letter::S(1)).unwrap().is_zero());
        let sq = &x(n, 0) * &x(n, 0);
        assert_eq!(apply_letter(&sq, Letter::S(1)).unwrap(), &x(n, 0) + &x(n, 1));
        assert_eq!(apply_letter(&x(n, 0), Letter::Zero).unwrap(), c(n, -2));
        assert_eq!(apply_letter(&x(n, 0), Letter::ZeroC).unwrap(), c(n, 1));
        assert_eq!(apply_letter(&x(n, 0), Letter::Heart).unwrap(), c(n, -1));
        assert_eq!(apply_letter(&x(n, 1), Letter::Heart).unwrap(), c(n, -1));
        assert!(apply_letter(&x1x2, Letter::Heart).unwrap().is_zero());
        assert!(apply_letter(&c(n, 5), Letter::Zero).unwrap().is_zero());
    }

    #[test]
    fn division_oracle_agrees() {
        let n = 3;
        let f = SparsePolynomial::parse(
            "3*x1^4*x2 - x1^2*x2*x3 + 1/2^1*x2^3 - x1*x3 + 7",
            n,
        )
        .unwrap();
        for letter in [Letter::S(1), Letter::S(2), Letter::Zero, Letter::ZeroC, Letter::Heart] {
            assert_eq!(
                apply_letter(&f, letter).unwrap(),
                apply_letter_by_division(&f, letter).unwrap(),
                "mismatch for {letter}"
            );
        }
    }

    #[test]
    fn word_application_and_nilpotence() {
        let n = 2;
        // x1(x1+x2)/2 through both reduced words of w0(D_2)
        let f = (&(&x(n, 0) * &x(n, 0)) + &(&x(n, 0) * &x(n, 1)))
            .scaled(&DyadicRational::new(1.into(), -1));
        let via_h1 = apply_word(&f, &[Letter::Heart, Letter::S(1)]).unwrap();
        let via_1h = apply_word(&f, &[Letter::S(1), Letter::Heart]).unwrap();
        assert_eq!(via_h1, c(n, -1));
        assert_eq!(via_1h, c(n, -1));
        // nilpotence on a sample
        let g = SparsePolynomial::parse("x1^3*x2 + x1*x2^2 - 2*x2", n).unwrap();
        for letter in [Letter::S(1), Letter::Zero, Letter::ZeroC, Letter::Heart] {
            let once = apply_letter(&g, letter).unwrap();
            assert!(apply_letter(&once, letter).unwrap().is_zero(), "{letter}^2 != 0");
        }
    }

    #[test]
    fn triangular_words() {
        assert_eq!(partial_v_word(2).unwrap(), vec![Letter::Heart]);
        assert_eq!(
            partial_v_word(3).unwrap(),
            vec![Letter::Heart, Letter::S(2), Letter::S(1)]
        );
        // lengths match the staircase weights
        for n in 2..=7 {
            assert_eq!(partial_v_word(n).unwrap().len(), n * (n - 1) / 2);
        }
        assert_eq!(
            nabla_b_word(2, 4).unwrap(),
            parse_word("0 1 2 3 0 1 2").unwrap()
        );
        assert_eq!(
            nabla_d_word(2, 4).unwrap(),
            parse_word("h 2 3 1 2 h").unwrap()
        );
        assert_eq!(nabla_b_word(7, 7).unwrap().len(), 7 + 6 + 5 + 4 + 3 + 2 + 1);
        assert!(nabla_d_word(3, 5).is_err());
    }

    #[test]
    fn apply_element_uses_any_reduced_word() {
        let n = 2;
        let w0 = longest_element(GroupType::D, n);
        let f = (&(&x(n, 0) * &x(n, 0)) + &(&x(n, 0) * &x(n, 1)))
            .scaled(&DyadicRational::new(1.into(), -1));
        assert_eq!(apply_element(&f, &w0, GroupType::D).unwrap(), c(n, -1));
    }

    #[test]
    fn alternating_sum_identities() {
        // delta = x^rho * Omega (type A), and the scaled analogues in B and D
        for n in [2usize, 3] {
            let rho: Vec<u16> = (0..n).map(|i| (n - 1 - i) as u16).collect();
            let xr = SparsePolynomial::monomial(n, &rho, DyadicRational::one());
            assert_eq!(antisymmetrize(&xr, GroupType::A).unwrap(), delta(GroupType::A, n));

            // every sign flip acts coherently on all-odd exponents, so the
            // full 2^n sign subgroup contributes, not 2^(n-1) as in type D
            let odd: Vec<u16> = (0..n).map(|i| (2 * i + 1) as u16).collect();
            let xo = SparsePolynomial::monomial(n, &odd, DyadicRational::one());
            let lhs = antisymmetrize(&xo, GroupType::B)
                .unwrap()
                .scaled(&DyadicRational::new(1.into(), -(n as i64)));
            assert_eq!(lhs, delta(GroupType::B, n));

            let even: Vec<u16> = (0..n).map(|i| (2 * i) as u16).collect();
            let xe = SparsePolynomial::monomial(n, &even, DyadicRational::one());
            let lhs = antisymmetrize(&xe, GroupType::D)
                .unwrap()
                .scaled(&DyadicRational::new(1.into(), -((n as i64) - 1)));
            assert_eq!(lhs, delta(GroupType::D, n));
        }
    }

    #[test]
    fn lemma1_small_ranks() {
        for t in [GroupType::A, GroupType::B, GroupType::D] {
            assert!(lemma1_check(t, 2).unwrap(), "type {t} rank 2");
        }
    }

    #[test]
    fn displays_and_congruence() {
        let d1 = PlanarDisplay::parse("2/1 2").unwrap();
        let d2 = PlanarDisplay::parse("1 2/. 1").unwrap();
        assert_eq!(d1.row_reading(), parse_word("2 1 2").unwrap());
        assert_eq!(d2.row_reading(), parse_word("1 2 1").unwrap());
        assert!(congruent(&d1.row_reading(), &d2.row_reading(), GroupType::A, 3).unwrap());
        // equal as elements but not congruent: "2 1 1" is not reduced
        let sloppy = parse_word("2 1 1").unwrap();
        let reduced = parse_word("2").unwrap();
        assert_eq!(
            evaluate_word(3, &sloppy).unwrap(),
            evaluate_word(3, &reduced).unwrap()
        );
        assert!(!congruent(&sloppy, &reduced, GroupType::A, 3).unwrap());

        let rect = PlanarDisplay::parse("3 4 5 6/2 3 4 5/1 2 3 4").unwrap();
        assert_eq!(rect.column_reading(), parse_word("3 2 1 4 3 2 5 4 3 6 5 4").unwrap());
        assert!(congruent(&rect.row_reading(), &rect.column_reading(), GroupType::A, 7).unwrap());
        assert_eq!(rect.to_string(), "3 4 5 6/2 3 4 5/1 2 3 4");
        assert_eq!(PlanarDisplay::parse(&rect.to_string()).unwrap(), rect);

        // staircase of type-B blocks: readings agree as operators too
        let stairs = PlanarDisplay::parse("0 1 2 3/. 0 1 2/. . 0 1").unwrap();
        assert_eq!(stairs.row_reading(), nabla_b_word(3, 4).unwrap());
        assert_eq!(stairs.column_reading(), parse_word("0 1 0 2 1 0 3 2 1").unwrap());
        assert!(congruent(&stairs.row_reading(), &stairs.column_reading(), GroupType::B, 4).unwrap());
    }

    #[test]
    fn row_shift_relation() {
        // a partial row of length k on top of the parallelogram can move to the
        // bottom: display (b+1..b+k / b..d / ... / a..c) vs (b..d / ... / a..c / a..a+k-1)
        let check = |a: usize, b: usize, c: usize, d: usize, k: usize, n: usize| {
            assert_eq!(a + d, b + c);
            assert!(k <= d - b);
            let mut rows1 = vec![(0usize, (b + 1..=b + k).map(|i| Letter::S(i as u8)).collect::<Vec<_>>())];
            for r in (a..=b).rev() {
                rows1.push((0, (r..=r + d - b).map(|i| Letter::S(i as u8)).collect()));
            }
            let mut rows2 = Vec::new();
            for r in (a..=b).rev() {
                rows2.push((0usize, (r..=r + d - b).map(|i| Letter::S(i as u8)).collect::<Vec<_>>()));
            }
            rows2.push((0, (a..=a + k - 1).map(|i| Letter::S(i as u8)).collect()));
            let w1 = PlanarDisplay { rows: rows1 }.row_reading();
            let w2 = PlanarDisplay { rows: rows2 }.row_reading();
            assert!(congruent(&w1, &w2, GroupType::A, n).unwrap(), "({a},{b},{c},{d},{k})");
        };
        check(1, 3, 2, 4, 1, 5);
        check(1, 3, 4, 6, 3, 7);
        check(1, 2, 3, 4, 1, 5);
        check(2, 4, 3, 5, 1, 6);
    }
}
