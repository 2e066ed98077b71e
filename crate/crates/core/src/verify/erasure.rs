//! Part-erasure identities under the triangular operator towers.

use num_bigint::BigInt;

use crate::dyadic::DyadicRational;
use crate::error::Result;
use crate::divdiff::{nabla_b, nabla_d};
use crate::poly::SparsePolynomial;
use crate::ptilde::{ptilde, qtilde, strict_partitions};
use crate::schubert::{schubert_y, y_general};

use super::{erase_parts, erase_positions, signed, weakly_increasing, Ctx};

fn two_to(k: usize) -> DyadicRational {
    DyadicRational::new(BigInt::from(1), k as i64)
}

/// `Qt_I * Y_alpha` under the width-`k` type-B tower: zero unless the
/// ladder values `n-(t-1)-alpha_t` are all parts of `I`, in which case they
/// are erased and the sign tracks the sum of their positions.
pub(crate) fn fact4(ctx: &mut Ctx) -> Result<()> {
    for n in ctx.ranks("erasure", &[3, 4, 5]) {
        for k in 1..=n {
            for alpha in weakly_increasing(k, (n - k) as u32) {
                let targets: Vec<u32> =
                    (1..=k).map(|t| (n - (t - 1)) as u32 - alpha[t - 1]).collect();
                let y = schubert_y(&alpha, n)?;
                for parts in strict_partitions(n) {
                    let lhs = nabla_b(&qtilde(&parts, n)?.checked_mul(&y)?, k, n)?;
                    let rhs = match erase_positions(&parts, &targets) {
                        None => SparsePolynomial::zero(n),
                        Some(s) => signed(
                            qtilde(&erase_parts(&parts, &targets), n)?.scaled(&two_to(k)),
                            (k * (n - 1) + s) % 2 == 1,
                        ),
                    };
                    ctx.check_poly(
                        format!("Qt[{parts:?}] * Y[{alpha:?}], B tower k={k}, n={n}"),
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
    }
    Ok(())
}

/// The boundary column `alpha_k = n-k+1`: the result survives only when the
/// length of `I` and `n` have opposite parities, and the remaining ladder
/// values are erased as before.
pub(crate) fn thm9(ctx: &mut Ctx) -> Result<()> {
    for n in ctx.ranks("boundary erasure", &[3, 4, 5]) {
        for k in 1..=n {
            let top = (n - k + 1) as u32;
            for prefix in weakly_increasing(k - 1, top) {
                let mut alpha = prefix;
                alpha.push(top);
                let targets: Vec<u32> =
                    (1..k).map(|t| (n - (t - 1)) as u32 - alpha[t - 1]).collect();
                let y = y_general(&alpha, n)?;
                for parts in strict_partitions(n) {
                    let lhs = nabla_b(&qtilde(&parts, n)?.checked_mul(&y)?, k, n)?;
                    let rhs = if parts.len() % 2 == n % 2 {
                        SparsePolynomial::zero(n)
                    } else {
                        match erase_positions(&parts, &targets) {
                            None => SparsePolynomial::zero(n),
                            Some(s) => signed(
                                qtilde(&erase_parts(&parts, &targets), n)?.scaled(&two_to(k)),
                                ((k - 1) * (n - 1) + 1 + s) % 2 == 1,
                            ),
                        }
                    };
                    ctx.check_poly(
                        format!("Qt[{parts:?}] * Y[{alpha:?}], B tower k={k}, n={n}"),
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
    }
    Ok(())
}

/// The type-D tower erases `2k` ladder values `n-t-alpha_t`; the last one
/// may be zero, a phantom part sitting one past the end of `I`.
pub(crate) fn thm11(ctx: &mut Ctx) -> Result<()> {
    for n in ctx.ranks("even erasure", &[4, 5, 6]) {
        for k in 1..=n / 2 {
            for alpha in weakly_increasing(2 * k, (n - 2 * k) as u32) {
                let ladder: Vec<u32> = (1..=2 * k).map(|t| (n - t) as u32 - alpha[t - 1]).collect();
                let y = schubert_y(&alpha, n)?;
                for parts in strict_partitions(n - 1) {
                    let lhs = nabla_d(&ptilde(&parts, n)?.checked_mul(&y)?, k, n)?;
                    let (targets, phantom) = match ladder.last() {
                        Some(0) => (&ladder[..ladder.len() - 1], true),
                        _ => (&ladder[..], false),
                    };
                    let rhs = match erase_positions(&parts, targets) {
                        None => SparsePolynomial::zero(n),
                        Some(mut s) => {
                            if phantom {
                                s += parts.len() + 1;
                            }
                            signed(ptilde(&erase_parts(&parts, targets), n)?, s % 2 == 1)
                        }
                    };
                    ctx.check_poly(
                        format!("Pt[{parts:?}] * Y[{alpha:?}], D tower k={k}, n={n}"),
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
    }
    Ok(())
}

/// The `Pt` form of the width-`k` erasure: same gate, sign
/// `(-1)^{k(n-1)+s}` and no power of two.
pub(crate) fn thm21(ctx: &mut Ctx) -> Result<()> {
    for n in ctx.ranks("erasure", &[3, 4, 5]) {
        for k in 1..=n {
            for alpha in weakly_increasing(k, (n - k) as u32) {
                let targets: Vec<u32> =
                    (1..=k).map(|t| (n - (t - 1)) as u32 - alpha[t - 1]).collect();
                let y = schubert_y(&alpha, n)?;
                for parts in strict_partitions(n) {
                    let lhs = nabla_b(&ptilde(&parts, n)?.checked_mul(&y)?, k, n)?;
                    let rhs = match erase_positions(&parts, &targets) {
                        None => SparsePolynomial::zero(n),
                        Some(s) => signed(
                            ptilde(&erase_parts(&parts, &targets), n)?,
                            (k * (n - 1) + s) % 2 == 1,
                        ),
                    };
                    ctx.check_poly(
                        format!("Pt[{parts:?}] * Y[{alpha:?}], B tower k={k}, n={n}"),
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
    }
    Ok(())
}
