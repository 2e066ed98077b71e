//! Structural operator identities: splits of the D tower and single-row
//! removals.

use crate::divdiff::{apply_word, nabla_b, nabla_b_word, nabla_d};
use crate::dyadic::DyadicRational;
use crate::error::Result;
use crate::poly::SparsePolynomial;
use crate::ptilde::{elementary, ptilde, qtilde, strict_partitions};
use crate::weyl::Letter;

use super::{erase_parts, int_poly, leading_product, signed, staircase_parts, x1_power, Ctx};

/// At full width `n = 2k` the D tower splits into two weighted B towers;
/// on the way, it annihilates every basis element except the two staircase
/// indices.
pub(crate) fn prop6(ctx: &mut Ctx) -> Result<()> {
    for n in ctx.ranks("half-rank split", &[2, 4]) {
        let k = n / 2;
        let mut probes: Vec<(String, SparsePolynomial)> = Vec::new();
        for parts in strict_partitions(n) {
            probes.push((format!("Qt[{parts:?}]"), qtilde(&parts, n)?));
        }
        for case in 0..5 {
            probes.push((format!("random symmetric {case}"), ctx.random_symmetric(n)));
        }
        for (name, f) in &probes {
            let lhs = nabla_d(f, k, n)?;
            let rhs = nabla_b(&leading_product(n, n).checked_mul(f)?, n, n)?
                .checked_add(&nabla_b(&leading_product(n, n - 1).checked_mul(f)?, n - 1, n)?)?;
            ctx.check_poly(format!("split of the D tower on {name}, n={n}"), &lhs, &rhs);
        }
        for parts in strict_partitions(n) {
            let image = nabla_d(&qtilde(&parts, n)?, k, n)?;
            let expected = if parts == staircase_parts(n - 1) {
                signed(int_poly(n, 1 << (n - 1)), k % 2 == 1)
            } else if parts == staircase_parts(n) {
                signed(
                    leading_product(n, n).scaled(&DyadicRational::from_integer(1 << (n - 1))),
                    k % 2 == 1,
                )
            } else {
                SparsePolynomial::zero(n)
            };
            ctx.check_poly(format!("D tower on Qt[{parts:?}], n={n}"), &image, &expected);
        }
    }
    Ok(())
}

/// Away from full width the split picks up a tail of exchanges acting on
/// the unused variables; both sides live on polynomials symmetric in the
/// first `2k` and in the last `n-2k` variables separately.
pub(crate) fn cor8(ctx: &mut Ctx) -> Result<()> {
    for (k, n) in [(1usize, 3usize), (1, 4), (2, 4), (2, 5)] {
        if ctx.restrict.map_or(false, |r| r != n) {
            continue;
        }
        ctx.note_range(format!("split with tail: k={k}, n={n}"));
        let m = n - 2 * k;
        let tail: Vec<Letter> = (1..=m).map(|i| Letter::S(i as u8)).collect();

        let mut factors: Vec<(String, SparsePolynomial)> =
            vec![("1".into(), SparsePolynomial::one(n))];
        for j in 1..=m.min(2) {
            factors.push((format!("e{j}'"), elementary(j, m).embedded(n, 2 * k)?));
        }
        let mut probes: Vec<(String, SparsePolynomial)> = Vec::new();
        for parts in strict_partitions(2 * k) {
            let head = qtilde(&parts, 2 * k)?.embedded(n, 0)?;
            for (gname, g) in &factors {
                probes.push((format!("Qt[{parts:?}]' * {gname}"), head.checked_mul(g)?));
            }
        }
        for case in 0..10 {
            let mut f = ctx.random_symmetric(2 * k).embedded(n, 0)?;
            if m >= 1 {
                let g = ctx.random_symmetric(m).embedded(n, 2 * k)?;
                f = f.checked_mul(&g)?;
            }
            probes.push((format!("random split-symmetric {case}"), f));
        }
        for (name, f) in &probes {
            let lhs = nabla_d(f, k, n)?;
            let first = nabla_b(&leading_product(n, 2 * k).checked_mul(f)?, 2 * k, n)?;
            let second = apply_word(
                &nabla_b(&leading_product(n, 2 * k - 1).checked_mul(f)?, 2 * k - 1, n)?,
                &tail,
            )?;
            let rhs = first.checked_add(&second)?;
            ctx.check_poly(format!("tailed split on {name}, k={k}, n={n}"), &lhs, &rhs);
        }
    }
    Ok(())
}

/// Removing the two leading parts with one heart-led chain.
pub(crate) fn prop17(ctx: &mut Ctx) -> Result<()> {
    for n in ctx.ranks("leading-pair removal", &[3, 4, 5]) {
        for parts in strict_partitions(n - 1) {
            if parts.len() < 2 {
                continue;
            }
            let (i1, i2) = (parts[0] as usize, parts[1] as usize);
            let mut word = vec![Letter::Heart];
            word.extend((2..=i1).map(|i| Letter::S(i as u8)));
            word.extend((1..=i2).map(|i| Letter::S(i as u8)));
            let lhs = apply_word(&ptilde(&parts, n)?, &word)?;
            let rhs = signed(ptilde(&parts[2..], n)?, (i1 + i2) % 2 == 1);
            ctx.check_poly(format!("leading pair of Pt[{parts:?}], n={n}"), &lhs, &rhs);
        }
    }
    Ok(())
}

/// A single part `p` is erased by the weight `x_1^{n-p}` under one full
/// B block; indices not containing `p` are annihilated.
pub(crate) fn prop20(ctx: &mut Ctx) -> Result<()> {
    for n in ctx.ranks("weighted single-part removal", &[3, 4]) {
        let word = nabla_b_word(1, n)?;
        for p in 1..=n as u32 {
            let weight = x1_power(n, n - p as usize);
            for parts in strict_partitions(n) {
                let lhs = apply_word(&weight.checked_mul(&ptilde(&parts, n)?)?, &word)?;
                let rhs = match parts.iter().position(|&q| q == p) {
                    Some(pos) => {
                        signed(ptilde(&erase_parts(&parts, &[p]), n)?, (pos + n) % 2 == 1)
                    }
                    None => SparsePolynomial::zero(n),
                };
                ctx.check_poly(
                    format!("x1^{} * Pt[{parts:?}] erases {p}, n={n}", n - p as usize),
                    &lhs,
                    &rhs,
                );
            }
        }
    }
    Ok(())
}

/// The leading part drops under its own initial chain.
pub(crate) fn prop22(ctx: &mut Ctx) -> Result<()> {
    for n in ctx.ranks("leading-part removal", &[3, 4]) {
        for parts in strict_partitions(n) {
            if parts.is_empty() {
                continue;
            }
            let i1 = parts[0] as usize;
            let mut word = vec![Letter::Zero];
            word.extend((1..i1).map(|i| Letter::S(i as u8)));
            let lhs = apply_word(&ptilde(&parts, n)?, &word)?;
            let rhs = signed(ptilde(&parts[1..], n)?, i1 % 2 == 1);
            ctx.check_poly(format!("leading part of Pt[{parts:?}], n={n}"), &lhs, &rhs);
        }
    }
    Ok(())
}

/// The weight `x_1^n` under one full B block: a parity gate with value -2.
pub(crate) fn prop28(ctx: &mut Ctx) -> Result<()> {
    for n in ctx.ranks("full-weight parity gate", &[3, 4, 5]) {
        let word = nabla_b_word(1, n)?;
        let weight = x1_power(n, n);
        for parts in strict_partitions(n) {
            let f = qtilde(&parts, n)?;
            let lhs = apply_word(&f.checked_mul(&weight)?, &word)?;
            let rhs = if (n + parts.len()) % 2 == 1 {
                f.scaled(&DyadicRational::from_integer(-2))
            } else {
                SparsePolynomial::zero(n)
            };
            ctx.check_poly(format!("Qt[{parts:?}] * x1^{n} under one block, n={n}"), &lhs, &rhs);
        }
    }
    Ok(())
}
