//! Golden worked cases at desk scale: specific erasures at ranks 5 and 7,
//! the single full tower at rank 5, and the two-rank factorization of the
//! D tower.

use crate::divdiff::{
    apply_letter, apply_word, nabla_b, nabla_d, nabla_d_word, parse_word,
};
use crate::dyadic::DyadicRational;
use crate::error::Result;
use crate::poly::SparsePolynomial;
use crate::ptilde::{ptilde, qtilde, strict_partitions};
use crate::schubert::y_general;
use crate::weyl::Letter;

use super::{leading_product, x1_power, Ctx};

fn scaled_by(f: SparsePolynomial, c: i64) -> SparsePolynomial {
    f.scaled(&DyadicRational::from_integer(c))
}

pub(crate) fn examples(ctx: &mut Ctx) -> Result<()> {
    let picked = ctx.ranks("golden cases", &[2, 4, 5, 7]);

    if picked.contains(&7) {
        // erasures under the B towers at rank 7
        let b_cases: &[(&[u32], &[u32], usize, i64, &[u32])] = &[
            (&[5, 4, 3, 2, 1], &[2, 5], 2, 4, &[4, 3, 2]),
            (&[7, 5, 4, 3, 1], &[2, 3, 4], 3, -8, &[7, 4]),
            (&[7, 6, 4, 1], &[1, 6], 2, -4, &[7, 4, 1]),
            (&[7, 6, 4, 3, 1], &[1, 6], 2, 0, &[]),
            (&[7, 6, 4, 3, 2, 1], &[1, 2, 2, 4], 4, 16, &[7, 2, 1]),
            (&[7, 6, 4, 3, 2, 1], &[1, 3, 4, 4], 4, -16, &[7, 4, 2]),
            (&[6, 5, 4, 3, 2, 1], &[1, 2, 3, 3], 4, -16, &[5, 3]),
            (&[6, 5, 4, 3, 2, 1], &[2, 2, 3, 4], 4, -16, &[6, 3, 1]),
            (&[6, 5, 4, 3, 2, 1], &[2, 2, 3], 3, 8, &[6, 3, 1]),
        ];
        for &(parts, alpha, k, coeff, target) in b_cases {
            let f = qtilde(parts, 7)?.checked_mul(&y_general(alpha, 7)?)?;
            let lhs = nabla_b(&f, k, 7)?;
            let rhs = if coeff == 0 {
                SparsePolynomial::zero(7)
            } else {
                scaled_by(qtilde(target, 7)?, coeff)
            };
            ctx.check_poly(
                format!("Qt[{parts:?}] * Y[{alpha:?}] under the B tower k={k}, n=7"),
                &lhs,
                &rhs,
            );
        }

        // erasures under the D towers at rank 7
        let d_cases: &[(&[u32], &[u32], usize, i64, &[u32])] = &[
            (&[5, 4, 3, 2, 1], &[1, 3], 1, -1, &[4, 3, 1]),
            (&[6, 4, 3, 2, 1], &[2, 5], 1, 1, &[6, 3, 2, 1]),
            (&[6, 5, 4, 3, 2, 1], &[1, 1, 1, 2], 2, -1, &[6, 2]),
            (&[6, 5, 4, 3, 2, 1], &[1, 1, 1, 3], 2, 1, &[6, 2, 1]),
            (&[6, 5, 4, 3, 2, 1], &[0, 1, 2, 2], 2, -1, &[5, 3]),
            (&[6, 5, 4, 3, 2, 1], &[1, 1, 2, 3], 2, -1, &[6, 3, 1]),
        ];
        for &(parts, alpha, k, coeff, target) in d_cases {
            let f = ptilde(parts, 7)?.checked_mul(&y_general(alpha, 7)?)?;
            let lhs = nabla_d(&f, k, 7)?;
            let rhs = scaled_by(ptilde(target, 7)?, coeff);
            ctx.check_poly(
                format!("Pt[{parts:?}] * Y[{alpha:?}] under the D tower k={k}, n=7"),
                &lhs,
                &rhs,
            );
        }
    }

    if picked.contains(&5) {
        // the single full tower against a top x1-weight
        let alive = qtilde(&[5, 3, 2, 1], 5)?;
        let lhs = nabla_b(&x1_power(5, 5).checked_mul(&alive)?, 1, 5)?;
        ctx.check_poly(
            "x1^5 * Qt[[5, 3, 2, 1]] under the single tower, n=5",
            &lhs,
            &scaled_by(alive, -2),
        );
        let dead = qtilde(&[5, 2, 1], 5)?;
        let lhs = nabla_b(&x1_power(5, 5).checked_mul(&dead)?, 1, 5)?;
        ctx.check_poly(
            "x1^5 * Qt[[5, 2, 1]] under the single tower, n=5",
            &lhs,
            &SparsePolynomial::zero(5),
        );

        // short erasures at rank 5
        let f = ptilde(&[3, 2], 5)?.checked_mul(&y_general(&[1, 3], 5)?)?;
        ctx.check_poly(
            "Pt[[3, 2]] * Y[[1, 3]] under the D tower k=1, n=5",
            &nabla_d(&f, 1, 5)?,
            &ptilde(&[2], 5)?,
        );
        let f = qtilde(&[3, 2], 5)?.checked_mul(&y_general(&[2, 4], 5)?)?;
        ctx.check_poly(
            "Qt[[3, 2]] * Y[[2, 4]] under the B tower k=2, n=5",
            &nabla_b(&f, 2, 5)?,
            &scaled_by(qtilde(&[2], 5)?, 4),
        );
        let f = qtilde(&[3, 2], 5)?.checked_mul(&y_general(&[2], 5)?)?;
        ctx.check_poly(
            "Qt[[3, 2]] * Y[[2]] under the B tower k=1, n=5",
            &nabla_b(&f, 1, 5)?,
            &scaled_by(qtilde(&[2], 5)?, -2),
        );
    }

    if picked.contains(&2) {
        // the heart letter splits into two weighted B runs on symmetric
        // arguments
        let mut probes: Vec<(String, SparsePolynomial)> = Vec::new();
        for parts in strict_partitions(2) {
            probes.push((format!("Qt[{parts:?}]"), qtilde(&parts, 2)?));
        }
        for case in 0..5 {
            probes.push((format!("random {case}"), ctx.random_symmetric(2)));
        }
        let long_word = parse_word("0 1 0")?;
        let short_word = parse_word("0 1")?;
        for (name, f) in probes {
            let lhs = apply_letter(&f, Letter::Heart)?;
            let rhs = apply_word(&f.checked_mul(&leading_product(2, 2))?, &long_word)?
                .checked_add(&apply_word(&f.checked_mul(&leading_product(2, 1))?, &short_word)?)?;
            ctx.check_poly(format!("heart factorization on {name}, n=2"), &lhs, &rhs);
        }
    }

    if picked.contains(&4) {
        // the rank-4 D tower word and its two-run factorization
        ctx.check(
            "the rank-4 D tower word",
            nabla_d_word(2, 4)? == parse_word("h 2 3 1 2 h")?,
            || format!("word = {:?}", nabla_d_word(2, 4).unwrap()),
        );
        let mut probes: Vec<(String, SparsePolynomial)> = Vec::new();
        for parts in strict_partitions(4) {
            probes.push((format!("Qt[{parts:?}]"), qtilde(&parts, 4)?));
        }
        for case in 0..5 {
            probes.push((format!("random {case}"), ctx.random_symmetric(4)));
        }
        for (name, f) in probes {
            let lhs = nabla_d(&f, 2, 4)?;
            let rhs = nabla_b(&f.checked_mul(&leading_product(4, 4))?, 4, 4)?
                .checked_add(&nabla_b(&f.checked_mul(&leading_product(4, 3))?, 3, 4)?)?;
            ctx.check_poly(format!("D tower factorization on {name}, n=4"), &lhs, &rhs);
        }
    }

    Ok(())
}
