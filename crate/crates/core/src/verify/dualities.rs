//! Dual bases under the canonical scalar products, the carrier-element
//! presentations of the `Pt` basis, and the stability of the signed
//! Schubert polynomials.

use crate::divdiff::{apply_element, nabla_b, nabla_d, nabla_d_word};
use crate::dyadic::DyadicRational;
use crate::error::Result;
use crate::poly::SparsePolynomial;
use crate::ptilde::{ptilde, staircase_complement, strict_partitions};
use crate::schubert::{
    scalar_pair, schubert_x, schubert_y, staircase_monomial, v_of_parts, w_of_parts, PairingKind,
};
use crate::weyl::{
    enumerate_group, involution_prime, longest_element, GroupType, SignedPermutation,
    ENUMERATION_BOUND,
};

use super::{int_poly, signed, staircase_codes, staircase_parts, Ctx};

fn delta_poly(n: usize, hit: bool, negative: bool) -> SparsePolynomial {
    if hit {
        signed(int_poly(n, 1), negative)
    } else {
        SparsePolynomial::zero(n)
    }
}

/// Biorthogonality of the Schubert basis under the exchange pairing: the
/// reversed-variable polynomials pair against the complementary-code family,
/// and complementary staircase exponents pair to a plain delta.
pub(crate) fn duality_a(ctx: &mut Ctx) -> Result<()> {
    for n in ctx.ranks("exchange pairing", &[3, 4]) {
        let omega = longest_element(GroupType::A, n);
        let codes = staircase_codes(n);
        for alpha in &codes {
            let reversed = schubert_y(alpha, n)?.act(&omega)?;
            let weight: u32 = alpha.iter().sum();
            for beta in &codes {
                let dual = schubert_y(&involution_prime(beta)?, n)?;
                let lhs = scalar_pair(&reversed, &dual, PairingKind::A, n)?;
                let rhs = delta_poly(n, alpha == beta, weight % 2 == 1);
                ctx.check_poly(format!("(Y[{alpha:?}]^w, Y[{beta:?}']) at n={n}"), &lhs, &rhs);
            }
        }
        // the complementary-code pairing lands in degree |alpha| - |beta|,
        // so the delta statement lives on the equal-weight stratum
        for alpha in &codes {
            let weight: u32 = alpha.iter().sum();
            for beta in &codes {
                if weight != beta.iter().sum::<u32>() {
                    continue;
                }
                let partner: Vec<u32> =
                    beta.iter().enumerate().map(|(i, &b)| (n - 1 - i) as u32 - b).collect();
                let lhs =
                    scalar_pair(&schubert_y(alpha, n)?, &schubert_y(&partner, n)?, PairingKind::A, n)?;
                let rhs = delta_poly(n, alpha == beta, false);
                ctx.check_poly(
                    format!("(Y[{alpha:?}], Y[rho - {beta:?}]) at n={n}"),
                    &lhs,
                    &rhs,
                );
            }
        }
    }
    Ok(())
}

/// Complementary `Pt` indices are dual under the triangular pairing, and
/// the full-group pairing splits over the basis `Y_alpha Pt_I` of the
/// polynomial ring.
fn duality_signed(ctx: &mut Ctx, t: GroupType) -> Result<()> {
    let (label, ranks): (&str, &[usize]) = match t {
        GroupType::B => ("hyperoctahedral pairing", &[2, 3]),
        _ => ("even pairing", &[2, 3]),
    };
    for n in ctx.ranks(label, ranks) {
        let max_part = if t == GroupType::B { n } else { n - 1 };
        let triangular =
            if t == GroupType::B { PairingKind::BTriangular } else { PairingKind::DTriangular };
        let full = if t == GroupType::B { PairingKind::BFull } else { PairingKind::DFull };
        let pair_sign = if t == GroupType::B {
            n * (n + 1) / 2 % 2 == 1
        } else {
            n * (n - 1) / 2 % 2 == 1
        };
        let indices = strict_partitions(max_part);

        for parts in &indices {
            let f = ptilde(parts, n)?;
            for dual_parts in &indices {
                let g = ptilde(&staircase_complement(dual_parts, max_part)?, n)?;
                let lhs = scalar_pair(&f, &g, triangular, n)?;
                let rhs = delta_poly(n, parts == dual_parts, pair_sign);
                ctx.check_poly(
                    format!("<Pt[{parts:?}], Pt[rho \\ {dual_parts:?}]> type {t}, n={n}"),
                    &lhs,
                    &rhs,
                );
            }
        }

        let omega = longest_element(GroupType::A, n);
        let codes = staircase_codes(n);
        for alpha in &codes {
            let weight: u32 = alpha.iter().sum();
            let y_left = schubert_y(alpha, n)?.act(&omega)?;
            for parts in &indices {
                let left = y_left.checked_mul(&ptilde(parts, n)?)?;
                for beta in &codes {
                    let y_right = schubert_y(&involution_prime(beta)?, n)?;
                    for dual_parts in &indices {
                        let right = y_right
                            .checked_mul(&ptilde(&staircase_complement(dual_parts, max_part)?, n)?)?;
                        let lhs = scalar_pair(&left, &right, full, n)?;
                        let rhs = delta_poly(
                            n,
                            alpha == beta && parts == dual_parts,
                            (weight as usize + if pair_sign { 1 } else { 0 }) % 2 == 1,
                        );
                        ctx.check_poly(
                            format!(
                                "[Y[{alpha:?}]^w Pt[{parts:?}], Y[{beta:?}'] Pt[rho \\ {dual_parts:?}]] type {t}, n={n}"
                            ),
                            &lhs,
                            &rhs,
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

pub(crate) fn duality_b(ctx: &mut Ctx) -> Result<()> {
    duality_signed(ctx, GroupType::B)
}

pub(crate) fn duality_d(ctx: &mut Ctx) -> Result<()> {
    duality_signed(ctx, GroupType::D)
}

/// The Lemma-14 presentation data of a strict partition: the monomial
/// exponent, the sorting permutation and the tower width.
struct Presentation {
    alpha: Vec<u16>,
    sigma: SignedPermutation,
    k: usize,
}

fn presentation(parts: &[u32], n: usize) -> Result<Presentation> {
    let heads: Vec<u32> = parts.iter().map(|&p| p + 1).collect();
    let same = n % 2 == parts.len() % 2;
    let js: Vec<u32> =
        (1..=n as u32).filter(|j| !heads.contains(j) && (same || *j != 1)).collect();
    let mut alpha: Vec<u16> = js.iter().map(|&j| (n as u32 - j) as u16).collect();
    alpha.resize(n, 0);
    let mut image: Vec<i32> = js.iter().map(|&j| j as i32).collect();
    image.extend(heads.iter().map(|&h| h as i32));
    if !same {
        image.push(1);
    }
    Ok(Presentation { alpha, sigma: SignedPermutation::from_image(image)?, k: js.len() / 2 })
}

/// The unique length-`|I|` element not annihilating `Pt_I`, checked against
/// the whole length stratum.
fn carrier_uniqueness(
    ctx: &mut Ctx,
    parts: &[u32],
    n: usize,
    t: GroupType,
) -> Result<()> {
    let f = ptilde(parts, n)?;
    let weight = parts.iter().sum::<u32>() as usize;
    let w_i = w_of_parts(parts, n, t)?;
    ctx.check(
        format!("carrier length for Pt[{parts:?}] type {t}, n={n}"),
        w_i.length(t)? == weight,
        || format!("lhs = {}; rhs = {weight}", w_i.length(t).unwrap()),
    );
    for w in enumerate_group(t, n, ENUMERATION_BOUND)? {
        if w.length(t)? != weight {
            continue;
        }
        let image = apply_element(&f, &w, t)?;
        let expected =
            delta_poly(n, w == w_i, weight % 2 == 1);
        ctx.check_poly(format!("Pt[{parts:?}] under {w} type {t}, n={n}"), &image, &expected);
    }
    Ok(())
}

/// The carrier chain lowers the top monomial-weighted `Pt` to each `Pt_I`,
/// through the factored presentation, and realizes the `Pt` basis among the
/// signed Schubert polynomials of type D.
pub(crate) fn thm15(ctx: &mut Ctx) -> Result<()> {
    for n in ctx.ranks("carrier chains (D)", &[2, 3, 4]) {
        let top = staircase_monomial(n).checked_mul(&ptilde(&staircase_parts(n - 1), n)?)?;
        let top_ptilde = ptilde(&staircase_parts(n - 1), n)?;
        for parts in strict_partitions(n - 1) {
            let weight = parts.iter().sum::<u32>() as usize;
            let negative = (weight + n * (n - 1) / 2) % 2 == 1;
            let rhs = signed(ptilde(&parts, n)?, negative);

            let v = v_of_parts(&parts, n, GroupType::D)?;
            let lhs = apply_element(&top, &v, GroupType::D)?;
            ctx.check_poly(format!("top chain to Pt[{parts:?}], n={n}"), &lhs, &rhs);

            // factored route: sort the staircase monomial, then reverse the
            // leading window, then the D tower
            let data = presentation(&parts, n)?;
            let sorted = apply_element(&staircase_monomial(n), &data.sigma, GroupType::A)?;
            let monomial =
                SparsePolynomial::monomial(n, &data.alpha, DyadicRational::one());
            ctx.check_poly(
                format!("sorted staircase monomial for Pt[{parts:?}], n={n}"),
                &sorted,
                &monomial,
            );
            let window = 2 * data.k;
            let reversal = if window == 0 {
                SignedPermutation::identity(n)
            } else {
                longest_element(GroupType::A, window).embedded(n)?
            };
            let routed = nabla_d(
                &apply_element(&monomial.checked_mul(&top_ptilde)?, &reversal, GroupType::A)?,
                data.k,
                n,
            )?;
            ctx.check_poly(format!("factored chain to Pt[{parts:?}], n={n}"), &routed, &rhs);
            let length_split = data.sigma.length(GroupType::A)?
                + window * window.saturating_sub(1) / 2
                + nabla_d_word(data.k, n)?.len();
            ctx.check(
                format!("carrier length splits for Pt[{parts:?}], n={n}"),
                v.length(GroupType::D)? == length_split,
                || format!("lhs = {}; rhs = {length_split}", v.length(GroupType::D).unwrap()),
            );

            carrier_uniqueness(ctx, &parts, n, GroupType::D)?;

            let x = schubert_x(&w_of_parts(&parts, n, GroupType::D)?.inverse(), GroupType::D, n)?;
            ctx.check_poly(format!("signed Schubert form of Pt[{parts:?}], n={n}"), &x, &rhs);
        }
    }
    Ok(())
}

/// The full-width B tower reverses the staircase-weighted Schubert basis
/// and annihilates every proper top index; symmetric input lands in the
/// fully sign-invariant ring.
pub(crate) fn thm18(ctx: &mut Ctx) -> Result<()> {
    for n in ctx.ranks("top reversal (B)", &[2, 3]) {
        let omega = longest_element(GroupType::A, n);
        let top = ptilde(&staircase_parts(n), n)?;
        for alpha in staircase_codes(n) {
            let y = schubert_y(&alpha, n)?;
            let lhs = nabla_b(&y.checked_mul(&top)?, n, n)?;
            let weight: u32 = alpha.iter().sum();
            let rhs = signed(y.act(&omega)?, (weight as usize + n * (n + 1) / 2) % 2 == 1);
            ctx.check_poly(format!("Y[{alpha:?}] * top Pt under the full tower, n={n}"), &lhs, &rhs);

            for parts in strict_partitions(n) {
                if parts == staircase_parts(n) {
                    continue;
                }
                let image = nabla_b(&y.checked_mul(&ptilde(&parts, n)?)?, n, n)?;
                ctx.check_poly(
                    format!("Y[{alpha:?}] * Pt[{parts:?}] under the full tower, n={n}"),
                    &image,
                    &SparsePolynomial::zero(n),
                );
            }
        }
        // on symmetric input the tower lands in the fully sign-invariant ring
        let flip = SignedPermutation::simple_zero(n)?;
        for case in 0..20 {
            let f = ctx.random_symmetric(n);
            let image = nabla_b(&f, n, n)?;
            ctx.check(
                format!("full tower image is doubly symmetric, case {case}, n={n}"),
                image.is_symmetric_in_first(n) && image.act(&flip)? == image,
                || format!("input = {}; image = {}", f.to_plain_string(), image.to_plain_string()),
            );
        }
    }
    Ok(())
}

/// The type-B carrier chain and the matching signed Schubert realization.
pub(crate) fn thm23(ctx: &mut Ctx) -> Result<()> {
    for n in ctx.ranks("carrier chains (B)", &[2, 3]) {
        let top = staircase_monomial(n).checked_mul(&ptilde(&staircase_parts(n), n)?)?;
        for parts in strict_partitions(n) {
            let weight = parts.iter().sum::<u32>() as usize;
            let negative = (weight + n * (n + 1) / 2) % 2 == 1;
            let rhs = signed(ptilde(&parts, n)?, negative);

            let v = v_of_parts(&parts, n, GroupType::B)?;
            let lhs = apply_element(&top, &v, GroupType::B)?;
            ctx.check_poly(format!("top chain to Pt[{parts:?}], n={n}"), &lhs, &rhs);

            carrier_uniqueness(ctx, &parts, n, GroupType::B)?;

            let x = schubert_x(&w_of_parts(&parts, n, GroupType::B)?.inverse(), GroupType::B, n)?;
            ctx.check_poly(format!("signed Schubert form of Pt[{parts:?}], n={n}"), &x, &rhs);
        }
    }
    Ok(())
}

/// Membership in the ideal generated by the positive-degree invariants:
/// every divided difference of a member has vanishing constant term.
fn in_invariant_ideal(f: &SparsePolynomial, t: GroupType, n: usize) -> Result<bool> {
    let alphabet = f.alphabet_size();
    for w in enumerate_group(t, n, ENUMERATION_BOUND)? {
        let mut h = apply_element(f, &w.embedded(alphabet)?, t)?;
        for v in (0..alphabet).rev() {
            h = h.substituted_zero(v);
        }
        if !h.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Setting the last variable to zero collapses the rank-(n+1) signed
/// Schubert polynomial onto its rank-n form up to the rank sign; exactly in
/// type B, modulo the invariant ideal in type D (exactly below length n).
pub(crate) fn stability(ctx: &mut Ctx) -> Result<()> {
    for n in ctx.ranks("stability", &[2, 3]) {
        for t in [GroupType::B, GroupType::D] {
            let flip = match t {
                GroupType::B => n % 2 == 0,
                _ => n % 2 == 1,
            };
            for w in enumerate_group(t, n, ENUMERATION_BOUND)? {
                let big = schubert_x(&w.embedded(n + 1)?, t, n + 1)?;
                let collapsed = big.substituted_zero(n);
                let small = signed(schubert_x(&w, t, n)?, flip).extended(n + 1)?;
                if t == GroupType::B || w.length(t)? < n {
                    ctx.check_poly(
                        format!("X[{w}] type {t} from rank {} to {n}", n + 1),
                        &collapsed,
                        &small,
                    );
                }
                if t == GroupType::D {
                    let diff = collapsed.checked_sub(&small)?;
                    ctx.check(
                        format!("X[{w}] type {t} from rank {} to {n}, mod invariants", n + 1),
                        in_invariant_ideal(&diff, t, n)?,
                        || format!("lhs = {}; rhs = {}", collapsed.to_plain_string(), small.to_plain_string()),
                    );
                }
            }
        }
    }
    Ok(())
}
