//! Vertex operators stabilizing the `Qt` and Schur P families, the
//! variable-stripping expansions around `x_1`, and the rectangle gluing
//! rule for split alphabets.

use num_rational::BigRational;
use num_traits::One;

use crate::divdiff::{apply_letter, apply_word};
use crate::dyadic::DyadicRational;
use crate::error::Result;
use crate::poly::SparsePolynomial;
use crate::ptilde::strict_partitions;
use crate::schubert::schur_s;
use crate::symfun::{
    e_gen, foulkes_d, p_row_gen, qtilde_sym, realize, rectangle_coefficient, rectangle_word,
    schur_p, vertex_apply, SymFunExpr, VertexOp,
};
use crate::weyl::Letter;

use super::{bounded_partitions, signed, x1_power, Ctx};

/// Degree cap generous enough for every index used in these suites.
const CAP: u32 = 12;

/// The exchange run `s_1 s_2 .. s_{n-1}`.
fn exchange_run(n: usize) -> Vec<Letter> {
    (1..n).map(|i| Letter::S(i as u8)).collect()
}

/// `prod_{i in front, j beyond} (x_i + x_j)` for the split after `q`
/// variables.
fn split_cross(n: usize, q: usize) -> Result<SparsePolynomial> {
    let mut acc = SparsePolynomial::one(n);
    for i in 0..q {
        for j in q..n {
            let factor = SparsePolynomial::variable(n, i)
                .checked_add(&SparsePolynomial::variable(n, j))?;
            acc = acc.checked_mul(&factor)?;
        }
    }
    Ok(acc)
}

fn check_expr(ctx: &mut Ctx, case: String, got: &SymFunExpr, want: &SymFunExpr) {
    let ok = got == want;
    ctx.check(case, ok, || {
        format!("lhs = {}; rhs = {}", got.to_plain_string(), want.to_plain_string())
    });
}

/// The shift operators fix one family each: `Qt` for the Schur-row operator
/// and Schur P for the elementary one, in even length; odd length is
/// annihilated.
pub(crate) fn prop25(ctx: &mut Ctx) -> Result<()> {
    ctx.note_range("vertex fixed points: strict indices of weight at most 6");
    for parts in strict_partitions(6) {
        if parts.iter().sum::<u32>() > 6 {
            continue;
        }
        let even = parts.len() % 2 == 0;

        let qt = qtilde_sym(&parts, CAP)?;
        let shifted = vertex_apply(&qt, VertexOp::Us);
        let expected = if even { qt.clone() } else { SymFunExpr::zero(CAP) };
        check_expr(
            ctx,
            format!("Qt[{parts:?}] under the Schur-row shift"),
            &shifted,
            &expected,
        );

        let p = schur_p(&parts, CAP);
        let moved = vertex_apply(&p, VertexOp::Ve);
        let expected_p = if even { p.clone() } else { SymFunExpr::zero(CAP) };
        check_expr(
            ctx,
            format!("SP[{parts:?}] under the elementary shift"),
            &moved,
            &expected_p,
        );
    }
    Ok(())
}

/// The finite-alphabet realization of the complement of the Schur-row shift
/// as a cap-letter sandwich, with its expansion and commutation rules.
pub(crate) fn lemma27(ctx: &mut Ctx) -> Result<()> {
    let lambdas: Vec<Vec<u32>> = bounded_partitions(6, 6)
        .into_iter()
        .map(|l| l.into_iter().map(|p| p as u32).collect())
        .collect();

    for n in ctx.ranks("cap-letter realization", &[2, 3, 4]) {
        for lambda in &lambdas {
            let f = SymFunExpr::from_partition(lambda, BigRational::one(), CAP);
            let realized = realize(&f, n)?;

            let lhs = realize(&f.sub(&vertex_apply(&f, VertexOp::Us)), n)?;
            let rhs = apply_word(
                &apply_letter(&realized, Letter::ZeroC)?.checked_mul(&x1_power(n, n))?,
                &exchange_run(n),
            )?;
            ctx.check_poly(format!("complement of the shift on p[{lambda:?}], n={n}"), &lhs, &rhs);

            // the cap letter expands into row-P derivatives times powers
            // of the first variable
            let capped = apply_letter(&realized, Letter::ZeroC)?;
            let mut expansion = SparsePolynomial::zero(n);
            for k in 1..=f.degree() + 1 {
                let derived = realize(&foulkes_d(&p_row_gen(k, CAP), &f), n)?;
                let term = signed(derived, (k - 1) % 2 == 1)
                    .checked_mul(&x1_power(n, (k - 1) as usize))?;
                expansion = expansion.checked_add(&term)?;
            }
            ctx.check_poly(
                format!("cap-letter expansion of p[{lambda:?}], n={n}"),
                &capped,
                &expansion,
            );
        }
    }

    for n in ctx.ranks("cap-letter commutation", &[3]) {
        for m in 0..=2usize {
            for case in 0..20 {
                let f = ctx.random_poly(n, 4, 4);
                let even_lhs =
                    apply_letter(&f.checked_mul(&x1_power(n, 2 * m))?, Letter::ZeroC)?;
                let even_rhs =
                    apply_letter(&f, Letter::ZeroC)?.checked_mul(&x1_power(n, 2 * m))?;
                ctx.check_poly(
                    format!("even power past the cap letter, m={m}, case {case}, n={n}"),
                    &even_lhs,
                    &even_rhs,
                );

                let odd_lhs =
                    apply_letter(&f.checked_mul(&x1_power(n, 2 * m + 1))?, Letter::ZeroC)?;
                let odd_rhs = signed(
                    apply_letter(&f, Letter::ZeroC)?.checked_mul(&x1_power(n, 2 * m + 1))?,
                    true,
                )
                .checked_add(&f.checked_mul(&x1_power(n, 2 * m))?)?;
                ctx.check_poly(
                    format!("odd power past the cap letter, m={m}, case {case}, n={n}"),
                    &odd_lhs,
                    &odd_rhs,
                );
            }
        }
    }
    Ok(())
}

/// Stripping or restoring the first variable of a Schur P polynomial: the
/// cross-product exchange chain, the rectangle gluing rule, and the
/// elementary-derivative expansion.
pub(crate) fn fact26(ctx: &mut Ctx) -> Result<()> {
    let indices = strict_partitions(4);
    for n in ctx.ranks("first-variable exchange", &[2, 3, 4]) {
        let run = exchange_run(n);
        let cross = split_cross(n, 1)?;

        // one-row case: a power of the first variable spreads into the
        // one-row P polynomial
        for k in 1..=6usize {
            let lhs = apply_word(&x1_power(n, k).checked_mul(&cross)?, &run)?;
            let rhs = realize(&schur_p(&[k as u32], CAP), n)?;
            ctx.check_poly(format!("one-row spread of x1^{k}, n={n}"), &lhs, &rhs);
        }

        // without the cross product the chain produces a one-row Schur
        // polynomial
        for p in 0..=6usize {
            let lhs = apply_word(&x1_power(n, p), &run)?;
            let rhs = if p + 1 < n {
                SparsePolynomial::zero(n)
            } else {
                schur_s(&[(p + 1 - n) as u32], n)?
            };
            ctx.check_poly(format!("exchange chain on x1^{p}, n={n}"), &lhs, &rhs);
        }

        for parts in &indices {
            if parts.len() + 1 > n {
                continue;
            }
            // restoring the first variable: alive exactly when the
            // complement count is odd
            let stripped = realize(&schur_p(parts, CAP), n - 1)?.embedded(n, 1)?;
            let lhs = apply_word(&stripped.checked_mul(&cross)?, &run)?;
            let rhs = if (n - parts.len()) % 2 == 1 {
                signed(realize(&schur_p(parts, CAP), n)?, (n - 1) % 2 == 1)
            } else {
                SparsePolynomial::zero(n)
            };
            ctx.check_poly(format!("restoring x1 to SP[{parts:?}], n={n}"), &lhs, &rhs);

            // stripping the first variable: elementary derivatives against
            // powers of x1
            let f = schur_p(parts, CAP);
            let mut expansion = SparsePolynomial::zero(n);
            for m in 0..=parts.iter().sum::<u32>() {
                let derived = realize(&foulkes_d(&e_gen(m, CAP), &f), n)?;
                let term =
                    signed(derived, m % 2 == 1).checked_mul(&x1_power(n, m as usize))?;
                expansion = expansion.checked_add(&term)?;
            }
            ctx.check_poly(format!("stripping x1 from SP[{parts:?}], n={n}"), &stripped, &expansion);
        }

        // rectangle gluing over a split alphabet
        for q in 1..n {
            let r = n - q;
            let word = rectangle_word(q, r)?;
            let cross_split = split_cross(n, q)?;
            for i_parts in &indices {
                if i_parts.len() > q {
                    continue;
                }
                for j_parts in &indices {
                    if j_parts.len() > r
                        || i_parts.iter().sum::<u32>() + j_parts.iter().sum::<u32>() > 8
                    {
                        continue;
                    }
                    let left = realize(&schur_p(i_parts, CAP), q)?.embedded(n, 0)?;
                    let right = realize(&schur_p(j_parts, CAP), r)?.embedded(n, q)?;
                    let lhs = apply_word(
                        &left.checked_mul(&right)?.checked_mul(&cross_split)?,
                        &word,
                    )?;
                    let coeff = rectangle_coefficient(q, r, i_parts.len(), j_parts.len());
                    let merged: Vec<u32> =
                        i_parts.iter().chain(j_parts.iter()).copied().collect();
                    let rhs = realize(&schur_p(&merged, CAP), n)?
                        .scaled(&DyadicRational::from_integer(coeff));
                    ctx.check_poly(
                        format!("gluing SP[{i_parts:?}] and SP[{j_parts:?}] at q={q}, n={n}"),
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
    }
    Ok(())
}
