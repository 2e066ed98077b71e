//! Schubert polynomials for the classical series.
//!
//! The type A family `Y_alpha` is indexed by exponent vectors and produced
//! by divided differences from a staircase monomial; a separate recursion
//! serves as an independent oracle. The signed families `X_w` (types B and
//! D) start from the staircase monomial times the top `Pt` polynomial. The
//! module also provides Schur polynomials, the canonical scalar pairings,
//! and the carrier elements `v(I)`/`w(I)` that move one `Pt` polynomial to
//! another under divided differences.

use crate::divdiff::{apply_element, apply_letter, nabla_b, partial_v};
use crate::dyadic::DyadicRational;
use crate::error::{Error, Result};
use crate::poly::SparsePolynomial;
use crate::ptilde::ptilde;
use crate::weyl::{code_inverse, longest_element, GroupType, Letter, SignedPermutation};

/// The staircase monomial `x_1^{n-1} x_2^{n-2} ... x_n^0`.
pub fn staircase_monomial(n: usize) -> SparsePolynomial {
    let exp: Vec<u16> = (0..n).map(|i| (n - 1 - i) as u16).collect();
    SparsePolynomial::monomial(n, &exp, DyadicRational::one())
}

fn pad_code(alpha: &[u32], n: usize) -> Result<Vec<u32>> {
    if alpha.len() > n {
        return Err(Error::InvalidArgument(format!(
            "exponent vector {alpha:?} has more than {n} entries"
        )));
    }
    let mut padded = alpha.to_vec();
    padded.resize(n, 0);
    Ok(padded)
}

fn fits_staircase(alpha: &[u32], n: usize) -> bool {
    alpha.iter().enumerate().all(|(i, &a)| a as usize + i < n)
}

/// Schubert polynomial `Y_alpha` over `n` variables, for exponent vectors
/// inside the staircase `(n-1, .., 1, 0)`.
pub fn schubert_y(alpha: &[u32], n: usize) -> Result<SparsePolynomial> {
    let padded = pad_code(alpha, n)?;
    if !fits_staircase(&padded, n) {
        return Err(Error::InvalidArgument(format!(
            "exponent vector {alpha:?} does not fit inside the staircase of {n}"
        )));
    }
    let u = code_inverse(&padded)?;
    let carrier = longest_element(GroupType::A, n).compose(&u);
    apply_element(&staircase_monomial(n), &carrier, GroupType::A)
}

/// Independent construction of `Y_alpha` by the exchange recursion: weakly
/// decreasing vectors are monomials, and a strict ascent at position `i`
/// is produced by one divided difference from a heavier vector.
pub fn schubert_y_by_recursion(alpha: &[u32], n: usize) -> Result<SparsePolynomial> {
    let padded = pad_code(alpha, n)?;
    if !fits_staircase(&padded, n) {
        return Err(Error::InvalidArgument(format!(
            "exponent vector {alpha:?} does not fit inside the staircase of {n}"
        )));
    }
    match padded.windows(2).position(|p| p[0] < p[1]) {
        None => {
            let exp: Vec<u16> = padded.iter().map(|&a| a as u16).collect();
            Ok(SparsePolynomial::monomial(n, &exp, DyadicRational::one()))
        }
        Some(i) => {
            let mut heavier = padded.clone();
            heavier[i] = padded[i + 1] + 1;
            heavier[i + 1] = padded[i];
            let upper = schubert_y_by_recursion(&heavier, n)?;
            apply_letter(&upper, Letter::S(i as u8 + 1))
        }
    }
}

/// Schur polynomial `s_lambda(x_1..x_k)` via the staircase-shifted monomial
/// and the full symmetrizing word.
pub fn schur_s(lambda: &[u32], k: usize) -> Result<SparsePolynomial> {
    if lambda.windows(2).any(|p| p[0] < p[1]) {
        return Err(Error::InvalidArgument(format!(
            "{lambda:?} is not weakly decreasing"
        )));
    }
    if lambda.len() > k {
        return Err(Error::InvalidArgument(format!(
            "partition {lambda:?} has more than {k} rows"
        )));
    }
    let mut exp = vec![0u16; k];
    for i in 0..k {
        let part = lambda.get(i).copied().unwrap_or(0);
        exp[i] = part as u16 + (k - 1 - i) as u16;
    }
    let top = SparsePolynomial::monomial(k, &exp, DyadicRational::one());
    apply_element(&top, &longest_element(GroupType::A, k), GroupType::A)
}

/// `Y_alpha` extended beyond the staircase: weakly increasing vectors (with
/// trailing zeros) are Schur polynomials in an initial segment of the
/// variables.
pub fn y_general(alpha: &[u32], n: usize) -> Result<SparsePolynomial> {
    let padded = pad_code(alpha, n)?;
    if fits_staircase(&padded, n) {
        return schubert_y(&padded, n);
    }
    let mut prefix = padded.clone();
    while prefix.last() == Some(&0) {
        prefix.pop();
    }
    if prefix.windows(2).all(|p| p[0] <= p[1]) {
        let lambda: Vec<u32> = prefix.iter().rev().copied().collect();
        return schur_s(&lambda, prefix.len())?.embedded(n, 0);
    }
    Err(Error::InvalidArgument(format!(
        "exponent vector {alpha:?} is outside the staircase and not weakly increasing"
    )))
}

/// The canonical scalar products: each multiplies its arguments and applies
/// one distinguished chain of divided differences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairingKind {
    /// `fg` followed by the longest exchange element; lands in symmetric
    /// polynomials.
    A,
    /// `fg` followed by the triangular word of type D; needs symmetric
    /// arguments.
    DTriangular,
    /// `fg` followed by the longest element of type D.
    DFull,
    /// `fg` followed by the full triangular tower of type B; needs
    /// symmetric arguments.
    BTriangular,
    /// `fg` followed by the longest element of type B.
    BFull,
}

pub fn scalar_pair(
    f: &SparsePolynomial,
    g: &SparsePolynomial,
    kind: PairingKind,
    n: usize,
) -> Result<SparsePolynomial> {
    if f.alphabet_size() != n || g.alphabet_size() != n {
        return Err(Error::AlphabetMismatch(f.alphabet_size(), n));
    }
    if matches!(kind, PairingKind::DTriangular | PairingKind::BTriangular)
        && !(f.is_symmetric_in_first(n) && g.is_symmetric_in_first(n))
    {
        return Err(Error::NotSymmetric);
    }
    let product = f.checked_mul(g)?;
    match kind {
        PairingKind::A => apply_element(&product, &longest_element(GroupType::A, n), GroupType::A),
        PairingKind::DTriangular => partial_v(&product, n),
        PairingKind::DFull => {
            apply_element(&product, &longest_element(GroupType::D, n), GroupType::D)
        }
        PairingKind::BTriangular => nabla_b(&product, n, n),
        PairingKind::BFull => {
            apply_element(&product, &longest_element(GroupType::B, n), GroupType::B)
        }
    }
}

fn check_strict_in(parts: &[u32], max_part: usize) -> Result<()> {
    if parts.windows(2).any(|p| p[0] <= p[1])
        || parts.iter().any(|&p| p == 0 || p as usize > max_part)
    {
        return Err(Error::InvalidArgument(format!(
            "{parts:?} is not a strict partition with parts at most {max_part}"
        )));
    }
    Ok(())
}

/// The signed permutation carrying the top `Pt` polynomial to `Pt_I` under
/// its chain of divided differences.
pub fn v_of_parts(parts: &[u32], n: usize, t: GroupType) -> Result<SignedPermutation> {
    let ell = parts.len();
    match t {
        GroupType::B => {
            check_strict_in(parts, n)?;
            let mut image: Vec<i32> = parts.iter().map(|&p| p as i32).collect();
            for j in 1..=n as i32 {
                if !parts.contains(&(j as u32)) {
                    image.push(-j);
                }
            }
            SignedPermutation::from_image(image)
        }
        GroupType::D => {
            check_strict_in(parts, n.saturating_sub(1))?;
            let heads: Vec<i32> = parts.iter().map(|&p| p as i32 + 1).collect();
            let mut image = heads.clone();
            if (n - ell) % 2 == 1 {
                image.push(1);
            }
            for j in 1..=n as i32 {
                if j != 1 && !heads.contains(&j) {
                    image.push(-j);
                } else if j == 1 && (n - ell) % 2 == 0 {
                    image.push(-1);
                }
            }
            // the negated tail must come in increasing order of magnitude
            let split = ell + (n - ell) % 2;
            image[split..].sort_by_key(|v| v.abs());
            SignedPermutation::from_image(image)
        }
        GroupType::A => Err(Error::InvalidArgument(
            "carrier elements exist for types B and D".into(),
        )),
    }
}

/// The unique minimal-length element whose divided difference sends `Pt_I`
/// to a nonzero constant: `w(I) = v(I)^{-1} w_0`.
pub fn w_of_parts(parts: &[u32], n: usize, t: GroupType) -> Result<SignedPermutation> {
    Ok(v_of_parts(parts, n, t)?
        .inverse()
        .compose(&longest_element(t, n)))
}

/// Signed Schubert polynomial `X_w` of type B or D over `n` variables.
pub fn schubert_x(w: &SignedPermutation, t: GroupType, n: usize) -> Result<SparsePolynomial> {
    if w.size() != n {
        return Err(Error::InvalidPermutation(format!(
            "rank mismatch: {} vs {n}",
            w.size()
        )));
    }
    w.check_member(t)?;
    let max_part = match t {
        GroupType::B => n,
        GroupType::D => n - 1,
        GroupType::A => {
            return Err(Error::InvalidArgument(
                "signed Schubert polynomials exist for types B and D".into(),
            ))
        }
    };
    let staircase: Vec<u32> = (1..=max_part as u32).rev().collect();
    let top = staircase_monomial(n).checked_mul(&ptilde(&staircase, n)?)?;
    let carrier = longest_element(t, n).compose(w);
    apply_element(&top, &carrier, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;

    fn perm(image: &[i32]) -> SignedPermutation {
        SignedPermutation::from_image(image.to_vec()).unwrap()
    }

    // semistandard tableaux oracle for Schur polynomials
    fn schur_by_tableaux(lambda: &[u32], k: usize) -> SparsePolynomial {
        let rows = lambda.len();
        let mut acc = SparsePolynomial::zero(k);
        let mut shape: Vec<Vec<u8>> = lambda.iter().map(|&r| vec![0; r as usize]).collect();
        fn fill(
            shape: &mut Vec<Vec<u8>>,
            row: usize,
            col: usize,
            k: usize,
            acc: &mut SparsePolynomial,
        ) {
            if row == shape.len() {
                let mut exp = vec![0u16; k];
                for r in shape.iter() {
                    for &e in r {
                        exp[e as usize - 1] += 1;
                    }
                }
                let term =
                    SparsePolynomial::monomial(k, &exp, crate::dyadic::DyadicRational::one());
                *acc = acc.checked_add(&term).unwrap();
                return;
            }
            if col == shape[row].len() {
                fill(shape, row + 1, 0, k, acc);
                return;
            }
            let min_left = if col > 0 { shape[row][col - 1] } else { 1 };
            let min_above = if row > 0 && col < shape[row - 1].len() {
                shape[row - 1][col] + 1
            } else {
                1
            };
            for v in min_left.max(min_above)..=k as u8 {
                shape[row][col] = v;
                fill(shape, row, col + 1, k, acc);
            }
            shape[row][col] = 0;
        }
        if rows == 0 {
            return SparsePolynomial::one(k);
        }
        fill(&mut shape, 0, 0, k, &mut acc);
        acc
    }

    #[test]
    fn dominant_vectors_are_monomials() {
        let n = 3;
        assert_eq!(schubert_y(&[2, 1, 0], n).unwrap(), staircase_monomial(n));
        assert_eq!(
            schubert_y(&[1], n).unwrap(),
            SparsePolynomial::variable(n, 0)
        );
        assert!(schubert_y(&[3], n).is_err());
        assert!(schubert_y(&[0, 0, 1], n).is_err());
    }

    #[test]
    fn recursion_agrees_with_carrier_construction() {
        for n in 2..=4usize {
            let mut codes = vec![vec![]];
            for i in 0..n {
                let mut next = Vec::new();
                for code in &codes {
                    for a in 0..(n - i) as u32 {
                        let mut c: Vec<u32> = code.clone();
                        c.push(a);
                        next.push(c);
                    }
                }
                codes = next;
            }
            for code in codes {
                assert_eq!(
                    schubert_y(&code, n).unwrap(),
                    schubert_y_by_recursion(&code, n).unwrap(),
                    "mismatch at {code:?}"
                );
            }
        }
    }

    #[test]
    fn schur_routes_agree() {
        for (lambda, k) in [
            (vec![1], 2usize),
            (vec![2, 1], 2),
            (vec![2, 1], 3),
            (vec![3, 1, 1], 3),
        ] {
            assert_eq!(
                schur_s(&lambda, k).unwrap(),
                schur_by_tableaux(&lambda, k),
                "mismatch at {lambda:?} in {k} variables"
            );
        }
        assert_eq!(schur_s(&[], 2).unwrap(), SparsePolynomial::one(2));
    }

    #[test]
    fn weakly_increasing_vectors_are_schur_polynomials() {
        // inside the staircase both constructions must agree
        let inside = schubert_y(&[0, 1, 0], 3).unwrap();
        let via_schur = y_general(&[0, 1, 0], 3).unwrap();
        assert_eq!(inside, via_schur);
        assert_eq!(
            inside,
            SparsePolynomial::parse("x1 + x2", 3).unwrap()
        );
        // outside it, the Schur fallback takes over
        let s21 = y_general(&[1, 2], 2).unwrap();
        assert_eq!(s21, schur_by_tableaux(&[2, 1], 2));
        assert!(y_general(&[2, 1, 2], 3).is_err());
    }

    #[test]
    fn multiplying_by_the_full_segment_shifts_the_index() {
        // Y_alpha * x_1..x_k = Y_{alpha + 1^k}
        let cases: [(&[u32], usize, usize); 3] =
            [(&[1, 0, 0], 1, 3), (&[0, 1, 0], 2, 3), (&[0, 1], 2, 3)];
        for (alpha, k, n) in cases {
            let mut shifted: Vec<u32> = alpha.to_vec();
            shifted.resize(n, 0);
            for t in 0..k {
                shifted[t] += 1;
            }
            let mut segment = SparsePolynomial::one(n);
            for v in 0..k {
                segment = segment
                    .checked_mul(&SparsePolynomial::variable(n, v))
                    .unwrap();
            }
            assert_eq!(
                y_general(alpha, n).unwrap().checked_mul(&segment).unwrap(),
                y_general(&shifted, n).unwrap(),
                "shift failed at {alpha:?}, k={k}"
            );
        }
    }

    #[test]
    fn carrier_elements_match_known_images() {
        assert_eq!(
            v_of_parts(&[1], 2, GroupType::D).unwrap(),
            perm(&[2, 1])
        );
        assert_eq!(
            v_of_parts(&[2, 1], 2, GroupType::B).unwrap(),
            perm(&[2, 1])
        );
        assert_eq!(
            v_of_parts(&[], 2, GroupType::D).unwrap(),
            perm(&[-1, -2])
        );
        assert_eq!(
            v_of_parts(&[2], 4, GroupType::D).unwrap(),
            perm(&[3, 1, -2, -4])
        );
        assert_eq!(
            v_of_parts(&[1], 3, GroupType::B).unwrap(),
            perm(&[1, -2, -3])
        );
        assert!(v_of_parts(&[2], 2, GroupType::D).is_err());
    }

    #[test]
    fn triangular_chain_reaches_every_ptilde() {
        // x^rho Pt_top d_{v(I)} = +-Pt_I, the sign fixed by weight and rank
        for (n, t) in [(2usize, GroupType::B), (3, GroupType::D)] {
            let max_part = match t {
                GroupType::B => n,
                _ => n - 1,
            };
            let staircase: Vec<u32> = (1..=max_part as u32).rev().collect();
            let top = staircase_monomial(n)
                .checked_mul(&ptilde(&staircase, n).unwrap())
                .unwrap();
            let rank_weight = match t {
                GroupType::B => n * (n + 1) / 2,
                _ => n * (n - 1) / 2,
            };
            for parts in crate::ptilde::strict_partitions(max_part) {
                let v = v_of_parts(&parts, n, t).unwrap();
                let image = apply_element(&top, &v, t).unwrap();
                let weight: u32 = parts.iter().sum();
                let sign = if (weight as usize + rank_weight) % 2 == 1 {
                    -1
                } else {
                    1
                };
                let expected = ptilde(&parts, n)
                    .unwrap()
                    .scaled(&DyadicRational::from_integer(sign));
                assert_eq!(image, expected, "carrier failed at {parts:?}, type {t}");
            }
        }
    }

    #[test]
    fn signed_schubert_basics() {
        // the identity indexes the image of the full top chain
        let x_id = schubert_x(&SignedPermutation::identity(2), GroupType::D, 2).unwrap();
        assert_eq!(
            x_id,
            SparsePolynomial::constant(2, DyadicRational::from_integer(-1))
        );
        let x_id_b = schubert_x(&SignedPermutation::identity(1), GroupType::B, 1).unwrap();
        assert_eq!(
            x_id_b,
            SparsePolynomial::constant(1, DyadicRational::from_integer(-1))
        );
        // degree equals the length of the index
        let w = perm(&[-2, -1]);
        let x = schubert_x(&w, GroupType::D, 2).unwrap();
        assert_eq!(
            x.total_degree().unwrap() as usize,
            w.length(GroupType::D).unwrap()
        );
    }

    #[test]
    fn pairings_respect_preconditions() {
        let n = 2;
        let rho = staircase_monomial(n);
        let one = SparsePolynomial::one(n);
        assert_eq!(
            scalar_pair(&rho, &one, PairingKind::A, n).unwrap(),
            SparsePolynomial::one(n)
        );
        let x1 = SparsePolynomial::variable(n, 0);
        assert!(scalar_pair(&x1, &one, PairingKind::DTriangular, n).is_err());
        let e1 = crate::ptilde::elementary(1, n);
        assert!(scalar_pair(&e1, &one, PairingKind::BTriangular, n).is_ok());
    }

    #[test]
    fn leading_term_of_x_matches_top_monomial() {
        let n = 2;
        let w0 = longest_element(GroupType::B, n);
        let x_top = schubert_x(&w0, GroupType::B, n).unwrap();
        let (mono, coeff) = x_top.leading_term().unwrap();
        assert_eq!(mono, &Monomial(vec![3, 1]));
        assert_eq!(coeff, &DyadicRational::new(1.into(), -2));
    }
}
