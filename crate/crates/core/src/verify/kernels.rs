//! The reproducing kernels: determinantal form versus pair expansion,
//! the orbit vanishing pattern, and reproduction modulo the difference
//! ideal.

use crate::divdiff::{apply_word, nabla_b_word, partial_v_word};
use crate::error::Result;
use crate::poly::SparsePolynomial;
use crate::ptilde::{
    congruent_mod_ideal, elementary, kernel_f, kernel_ptilde, kernel_ptilde_twisted,
};
use crate::schubert::schur_s;
use crate::weyl::{enumerate_group, longest_element, GroupType, ENUMERATION_BOUND};

use super::{bounded_partitions, signed, staircase_parts, Ctx};

/// Products of elementary symmetric polynomials spanning the small-degree
/// symmetric polynomials.
fn symmetric_spanning(n: usize) -> Result<Vec<SparsePolynomial>> {
    let mut out = Vec::new();
    for lambda in bounded_partitions(n, 4) {
        let mut f = SparsePolynomial::one(n);
        for &p in &lambda {
            f = f.checked_mul(&elementary(p, n))?;
        }
        out.push(f);
    }
    Ok(out)
}

/// All monomials with exponents below `n`.
fn monomial_spanning(n: usize) -> Vec<SparsePolynomial> {
    let mut out = Vec::new();
    let total = n.pow(n as u32);
    for mut idx in 0..total {
        let mut exps = vec![0u16; n];
        for e in exps.iter_mut() {
            *e = (idx % n) as u16;
            idx /= n;
        }
        out.push(SparsePolynomial::monomial(n, &exps, crate::dyadic::DyadicRational::one()));
    }
    out
}

pub(crate) fn kernels(ctx: &mut Ctx) -> Result<()> {
    for n in ctx.ranks("kernel congruence and orbit pattern", &[2, 3]) {
        for t in [GroupType::B, GroupType::D] {
            let size = if t == GroupType::B { n } else { n - 1 };
            let diff = kernel_f(n, t)?.checked_sub(&kernel_ptilde(n, t)?)?;
            let ok = congruent_mod_ideal(&diff, t)?;
            ctx.check(
                format!("determinant matches the pair expansion, type {t}, n={n}"),
                ok,
                || format!("difference = {}", diff.to_plain_string()),
            );

            // collapsing the second alphabet along a group element kills
            // the pair kernel off the unsigned part; on it, the kernel is
            // the staircase Schur polynomial
            let diagonal = schur_s(&staircase_parts(size), n)?;
            for w in enumerate_group(t, n, ENUMERATION_BOUND)? {
                let twisted = kernel_ptilde_twisted(n, t, &w)?;
                let expected = if w.negative_count() > 0 {
                    SparsePolynomial::zero(n)
                } else {
                    diagonal.clone()
                };
                ctx.check_poly(
                    format!("pair kernel along {w}, type {t}, n={n}"),
                    &twisted,
                    &expected,
                );
            }
        }
    }

    for n in ctx.ranks("reproducing property", &[2]) {
        for t in [GroupType::B, GroupType::D] {
            let kernel = kernel_f(n, t)?;
            let alphabet = 2 * n;
            let (word, pair_sign) = if t == GroupType::B {
                (nabla_b_word(n, n)?, n * (n + 1) / 2 % 2 == 1)
            } else {
                (partial_v_word(n)?, n * (n - 1) / 2 % 2 == 1)
            };

            // symmetric arguments: pairing against the kernel hands the
            // argument over to the second alphabet, up to the global sign
            for f in symmetric_spanning(n)? {
                let lhs = apply_word(&f.embedded(alphabet, 0)?.checked_mul(&kernel)?, &word)?;
                let rhs = signed(f.embedded(alphabet, n)?, pair_sign);
                let ok = congruent_mod_ideal(&lhs.checked_sub(&rhs)?, t)?;
                ctx.check(
                    format!(
                        "triangular reproduction of {}, type {t}, n={n}",
                        f.to_plain_string()
                    ),
                    ok,
                    || format!("lhs = {}; rhs = {}", lhs.to_plain_string(), rhs.to_plain_string()),
                );
            }

            // arbitrary arguments: weighting by the cross-alphabet
            // Vandermonde and applying the longest element reproduces over
            // the full polynomial ring, with no sign
            let longest = longest_element(t, n).reduced_word(t)?;
            let mut vandermonde = SparsePolynomial::one(alphabet);
            for i in 2..=n {
                for j in 1..i {
                    let factor = SparsePolynomial::variable(alphabet, i - 1)
                        .checked_sub(&SparsePolynomial::variable(alphabet, n + j - 1))?;
                    vandermonde = vandermonde.checked_mul(&factor)?;
                }
            }
            for f in monomial_spanning(n) {
                let lhs = apply_word(
                    &f.embedded(alphabet, 0)?
                        .checked_mul(&vandermonde)?
                        .checked_mul(&kernel)?,
                    &longest,
                )?;
                let rhs = f.embedded(alphabet, n)?;
                let ok = congruent_mod_ideal(&lhs.checked_sub(&rhs)?, t)?;
                ctx.check(
                    format!(
                        "full reproduction of {}, type {t}, n={n}",
                        f.to_plain_string()
                    ),
                    ok,
                    || format!("lhs = {}; rhs = {}", lhs.to_plain_string(), rhs.to_plain_string()),
                );
            }
        }
    }
    Ok(())
}
