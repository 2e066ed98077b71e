//! The Qt/Pt polynomial families and their reproducing kernels.
//!
//! `Qt_k = e_k` (elementary symmetric), pairs extend by Schur's corrected
//! product, longer indices by a Pfaffian or an equivalent recursion, and
//! `Pt_I = Qt_I / 2^{len(I)}`. Repeated parts are allowed (the families are
//! indexed by weakly decreasing sequences) and satisfy a factorization by
//! the doubled pair. The module also builds the two-alphabet kernels
//! `kernel_f` (determinant) and `kernel_ptilde` (sum over complementary
//! pairs), together with the orbit-substitution congruence used to compare
//! them modulo the invariant-difference ideal.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::divdiff::{nabla_b, partial_v};
use crate::dyadic::DyadicRational;
use crate::error::{Error, Result};
use crate::poly::{Monomial, SparsePolynomial};
use crate::weyl::{enumerate_group, GroupType, SignedPermutation, ENUMERATION_BOUND};

/// Elementary symmetric polynomial `e_k(x_1..x_n)`; zero for `k > n`.
pub fn elementary(k: usize, n: usize) -> SparsePolynomial {
    if k > n {
        return SparsePolynomial::zero(n);
    }
    let mut terms = Vec::new();
    let mut choice: Vec<usize> = (0..k).collect();
    loop {
        let mut exp = vec![0u16; n];
        for &v in &choice {
            exp[v] = 1;
        }
        terms.push((Monomial(exp), DyadicRational::one()));
        // next k-subset in lexicographic order
        let mut idx = k;
        loop {
            if idx == 0 {
                return SparsePolynomial::from_terms(n, terms)
                    .expect("elementary fits any term limit in scope");
            }
            idx -= 1;
            if choice[idx] < n - (k - idx) {
                choice[idx] += 1;
                for t in idx + 1..k {
                    choice[t] = choice[t - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Evaluation strategy for `qtilde`: the padded Pfaffian expansion or the
/// singles/pairs recursion. Both agree; tests compare them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QtildeMethod {
    Pfaffian,
    Recursion,
}

type CacheKey = (QtildeMethod, Vec<u32>, usize);

fn cache() -> &'static Mutex<HashMap<CacheKey, Arc<SparsePolynomial>>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Arc<SparsePolynomial>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Strips trailing zeros and rejects sequences that are not weakly
/// decreasing.
fn normalize_parts(parts: &[u32]) -> Result<Vec<u32>> {
    for pair in parts.windows(2) {
        if pair[0] < pair[1] {
            return Err(Error::InvalidArgument(format!(
                "index {parts:?} is not weakly decreasing"
            )));
        }
    }
    Ok(parts.iter().copied().take_while(|&p| p > 0).collect())
}

/// The corrected product of two single-row polynomials:
/// `Qt_i Qt_j + 2 sum_{p=1}^{j} (-1)^p Qt_{i+p} Qt_{j-p}`.
pub fn qtilde_pair(i: u32, j: u32, n: usize) -> Result<SparsePolynomial> {
    if i < j {
        return Err(Error::InvalidArgument(format!(
            "pair index needs i >= j, got ({i},{j})"
        )));
    }
    let e = |k: u32| elementary(k as usize, n);
    let mut out = e(i).checked_mul(&e(j))?;
    let two = DyadicRational::from_integer(2);
    for p in 1..=j {
        let prod = e(i + p).checked_mul(&e(j - p))?.scaled(&two);
        out = if p % 2 == 1 {
            out.checked_sub(&prod)?
        } else {
            out.checked_add(&prod)?
        };
    }
    Ok(out)
}

fn qtilde_memoized(parts: Vec<u32>, n: usize, method: QtildeMethod) -> Result<Arc<SparsePolynomial>> {
    let key = (method, parts, n);
    if let Some(hit) = cache().lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let parts = &key.1;
    let value = match parts.len() {
        0 => SparsePolynomial::one(n),
        1 => elementary(parts[0] as usize, n),
        _ => match method {
            QtildeMethod::Pfaffian => {
                // pad to even length (an index 0 pairs as a bare single row)
                let mut padded = parts.clone();
                if padded.len() % 2 == 1 {
                    padded.push(0);
                }
                let mut acc = SparsePolynomial::zero(n);
                for j in 1..padded.len() {
                    let entry = qtilde_pair(padded[0], padded[j], n)?;
                    let mut rest: Vec<u32> = padded[1..].to_vec();
                    rest.remove(j - 1);
                    let sub = qtilde_memoized(normalize_parts(&rest)?, n, method)?;
                    let term = entry.checked_mul(&sub)?;
                    // expansion signs alternate starting positive
                    acc = if j % 2 == 1 {
                        acc.checked_add(&term)?
                    } else {
                        acc.checked_sub(&term)?
                    };
                }
                acc
            }
            QtildeMethod::Recursion => {
                let mut acc = SparsePolynomial::zero(n);
                if parts.len() % 2 == 1 {
                    for j in 0..parts.len() {
                        let single = elementary(parts[j] as usize, n);
                        let mut rest = parts.clone();
                        rest.remove(j);
                        let sub = qtilde_memoized(normalize_parts(&rest)?, n, method)?;
                        let term = single.checked_mul(&sub)?;
                        acc = if j % 2 == 0 {
                            acc.checked_add(&term)?
                        } else {
                            acc.checked_sub(&term)?
                        };
                    }
                } else {
                    for j in 1..parts.len() {
                        let entry = qtilde_pair(parts[0], parts[j], n)?;
                        let mut rest: Vec<u32> = parts[1..].to_vec();
                        rest.remove(j - 1);
                        let sub = qtilde_memoized(normalize_parts(&rest)?, n, method)?;
                        let term = entry.checked_mul(&sub)?;
                        acc = if j % 2 == 1 {
                            acc.checked_add(&term)?
                        } else {
                            acc.checked_sub(&term)?
                        };
                    }
                }
                acc
            }
        },
    };
    let arc = Arc::new(value);
    cache().lock().unwrap().insert(key, arc.clone());
    Ok(arc)
}

pub fn qtilde_with(parts: &[u32], n: usize, method: QtildeMethod) -> Result<SparsePolynomial> {
    Ok((*qtilde_memoized(normalize_parts(parts)?, n, method)?).clone())
}

/// `Qt` polynomial of a weakly decreasing index over `n` variables.
pub fn qtilde(parts: &[u32], n: usize) -> Result<SparsePolynomial> {
    qtilde_with(parts, n, QtildeMethod::Recursion)
}

/// `Pt_I = Qt_I / 2^{len(I)}` (trailing zeros do not count toward the
/// length).
pub fn ptilde(parts: &[u32], n: usize) -> Result<SparsePolynomial> {
    let normalized = normalize_parts(parts)?;
    let len = normalized.len() as i64;
    Ok(qtilde(&normalized, n)?.scaled(&DyadicRational::new(1.into(), -len)))
}

/// All strict partitions with distinct parts drawn from `{1..max_part}`,
/// in a deterministic (size, then lexicographic) order.
pub fn strict_partitions(max_part: usize) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = (0u32..(1 << max_part))
        .map(|mask| {
            (1..=max_part as u32)
                .rev()
                .filter(|p| mask >> (p - 1) & 1 == 1)
                .collect()
        })
        .collect();
    out.sort();
    out.sort_by_key(|i| i.len());
    out
}

/// Complement of the parts of `I` inside `{max_part, .., 1}`, decreasing.
pub fn staircase_complement(parts: &[u32], max_part: usize) -> Result<Vec<u32>> {
    let mut present = vec![false; max_part + 1];
    for &p in parts {
        if p == 0 || p as usize > max_part || present[p as usize] {
            return Err(Error::InvalidArgument(format!(
                "{parts:?} is not a strict partition inside the staircase of {max_part}"
            )));
        }
        present[p as usize] = true;
    }
    Ok((1..=max_part as u32).rev().filter(|&p| !present[p as usize]).collect())
}

/// Checks the one-variable branching rule
/// `Qt_I(x_1..x_m) = sum_J x_m^{|I|-|J|} Qt_J(x_1..x_{m-1})`. For strict `I`
/// the sum is over weakly decreasing `J` obtained by removing at most one
/// box per row. A pair of equal parts branches as one block losing both
/// boxes or neither (its single-box term telescopes away), so in general
/// `I` splits into equal-part pairs plus a strict remainder and the
/// contributions multiply out, recombined through the doubled-pair
/// factorization. Returns whether the rule holds together with the
/// contributing `(J, exponent)` pairs, repeats meaning multiplicity.
pub fn branch(parts: &[u32], m: usize) -> Result<(bool, Vec<(Vec<u32>, usize)>)> {
    let parts = normalize_parts(parts)?;
    if m == 0 {
        return Err(Error::InvalidArgument("branching needs m >= 1".into()));
    }
    let mut pairs: Vec<u32> = Vec::new();
    let mut single: Vec<u32> = Vec::new();
    let mut i = 0;
    while i < parts.len() {
        if i + 1 < parts.len() && parts[i] == parts[i + 1] {
            pairs.push(parts[i]);
            i += 2;
        } else {
            single.push(parts[i]);
            i += 1;
        }
    }
    let mut blocks: Vec<(Vec<u32>, usize)> = vec![(vec![], 0)];
    for &a in &pairs {
        let mut next = Vec::new();
        for (kept, e) in &blocks {
            let mut with = kept.clone();
            with.extend([a, a]);
            next.push((with, *e));
            let mut without = kept.clone();
            if a > 1 {
                without.extend([a - 1, a - 1]);
            }
            next.push((without, e + 2));
        }
        blocks = next;
    }
    let rows = single.len();
    let mut contributing: Vec<(Vec<u32>, usize)> = Vec::new();
    for (kept, e) in &blocks {
        for mask in 0u32..(1 << rows) {
            let s: Vec<u32> = (0..rows)
                .map(|t| single[t] - (mask >> t & 1))
                .collect();
            if s.windows(2).any(|p| p[0] < p[1]) {
                continue;
            }
            let mut all = kept.clone();
            all.extend(&s);
            all.sort_unstable_by(|x, y| y.cmp(x));
            contributing.push((normalize_parts(&all)?, e + mask.count_ones() as usize));
        }
    }
    let lhs = qtilde(&parts, m)?;
    let mut rhs = SparsePolynomial::zero(m);
    for (j, exponent) in &contributing {
        let factor = qtilde(j, m - 1)?.embedded(m, 0)?;
        let xm = SparsePolynomial::monomial(
            m,
            &{
                let mut e = vec![0u16; m];
                e[m - 1] = *exponent as u16;
                e
            },
            DyadicRational::one(),
        );
        rhs = rhs.checked_add(&factor.checked_mul(&xm)?)?;
    }
    Ok((lhs == rhs, contributing))
}

/// Decomposes a symmetric polynomial over the `Pt` basis of the invariant
/// ring of the requested type, coefficients extracted by the dual pairing;
/// errors if the reconstruction does not return the input exactly.
pub fn ptilde_decompose(
    f: &SparsePolynomial,
    n: usize,
    t: GroupType,
) -> Result<Vec<(Vec<u32>, SparsePolynomial)>> {
    if f.alphabet_size() != n {
        return Err(Error::AlphabetMismatch(f.alphabet_size(), n));
    }
    if !f.is_symmetric_in_first(n) {
        return Err(Error::NotSymmetric);
    }
    let max_part = match t {
        GroupType::B => n,
        GroupType::D => n - 1,
        GroupType::A => return Err(Error::InvalidArgument("basis exists for types B and D".into())),
    };
    let pair_sign = match t {
        GroupType::B => (n * (n + 1) / 2) % 2 == 1,
        _ => (n * (n - 1) / 2) % 2 == 1,
    };
    let degree = f.total_degree().unwrap_or(0);
    let mut out = Vec::new();
    let mut reconstruction = SparsePolynomial::zero(n);
    for parts in strict_partitions(max_part) {
        if parts.iter().sum::<u32>() > degree {
            continue;
        }
        let dual = ptilde(&staircase_complement(&parts, max_part)?, n)?;
        let product = f.checked_mul(&dual)?;
        let mut coeff = match t {
            GroupType::B => nabla_b(&product, n, n)?,
            _ => partial_v(&product, n)?,
        };
        if pair_sign {
            coeff = -coeff;
        }
        if coeff.is_zero() {
            continue;
        }
        reconstruction =
            reconstruction.checked_add(&coeff.checked_mul(&ptilde(&parts, n)?)?)?;
        out.push((parts, coeff));
    }
    if reconstruction != *f {
        return Err(Error::InvalidArgument(
            "dual-pairing coefficients do not reconstruct the input".into(),
        ));
    }
    Ok(out)
}

/// Fast expansion of a symmetric polynomial as a constant combination of
/// `Qt_I` with strict `I`, by leading-term elimination; `None` when the
/// input is not such a combination.
pub fn qtilde_expand_scalar(
    f: &SparsePolynomial,
    n: usize,
) -> Result<Option<Vec<(Vec<u32>, DyadicRational)>>> {
    let mut rest = f.clone();
    let mut out = Vec::new();
    while !rest.is_zero() {
        let (mono, coeff) = {
            let (m, c) = rest.leading_term().expect("nonzero polynomial");
            (m.clone(), c.clone())
        };
        // the leading monomial of Qt_I is x^(conjugate of I), so read the
        // exponent as a partition and transpose it back
        let mut lambda: Vec<u32> = mono.0.iter().map(|&e| e as u32).collect();
        while lambda.last() == Some(&0) {
            lambda.pop();
        }
        if lambda.windows(2).any(|p| p[0] < p[1]) {
            return Ok(None);
        }
        let top = lambda.first().copied().unwrap_or(0) as usize;
        let parts: Vec<u32> = (1..=top as u32)
            .map(|i| lambda.iter().filter(|&&p| p >= i).count() as u32)
            .collect();
        if parts.windows(2).any(|p| p[0] <= p[1]) || parts.iter().any(|&p| p as usize > n) {
            return Ok(None);
        }
        rest = rest.checked_sub(&qtilde(&parts, n)?.scaled(&coeff))?;
        if rest
            .leading_term()
            .map(|(m, _)| *m >= mono)
            .unwrap_or(false)
        {
            return Ok(None);
        }
        out.push((parts, coeff));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.sort_by_key(|(parts, _)| std::cmp::Reverse(parts.iter().sum::<u32>()));
    Ok(Some(out))
}

fn kernel_params(n: usize, t: GroupType) -> Result<(usize, usize)> {
    match t {
        GroupType::B => Ok((n, n + 1)),
        GroupType::D => {
            if n < 1 {
                return Err(Error::InvalidArgument("kernel needs n >= 1".into()));
            }
            Ok((n - 1, n))
        }
        GroupType::A => Err(Error::InvalidArgument("kernels exist for types B and D".into())),
    }
}

fn determinant(mat: &[Vec<SparsePolynomial>], alphabet: usize) -> Result<SparsePolynomial> {
    fn go(
        mat: &[Vec<SparsePolynomial>],
        row: usize,
        cols: u32,
        alphabet: usize,
        memo: &mut HashMap<u32, SparsePolynomial>,
    ) -> Result<SparsePolynomial> {
        if row == mat.len() {
            return Ok(SparsePolynomial::one(alphabet));
        }
        if let Some(hit) = memo.get(&cols) {
            return Ok(hit.clone());
        }
        let mut acc = SparsePolynomial::zero(alphabet);
        let mut parity = false;
        for col in 0..mat.len() {
            if cols >> col & 1 == 0 {
                continue;
            }
            if !mat[row][col].is_zero() {
                let sub = go(mat, row + 1, cols & !(1 << col), alphabet, memo)?;
                let term = mat[row][col].checked_mul(&sub)?;
                acc = if parity {
                    acc.checked_sub(&term)?
                } else {
                    acc.checked_add(&term)?
                };
            }
            parity = !parity;
        }
        memo.insert(cols, acc.clone());
        Ok(acc)
    }
    let mut memo = HashMap::new();
    go(mat, 0, (1u32 << mat.len()) - 1, alphabet, &mut memo)
}

/// Determinantal kernel over the doubled alphabet `x_1..x_n, y_1..y_n`:
/// entries `Pt_d(X) + Pt_d(Y)` on the band `d >= 1`, the constant 1 on
/// `d = 0` and zero below.
pub fn kernel_f(n: usize, t: GroupType) -> Result<SparsePolynomial> {
    let (size, shift) = kernel_params(n, t)?;
    let alphabet = 2 * n;
    let mut mat = vec![vec![SparsePolynomial::zero(alphabet); size]; size];
    for i in 1..=size {
        for j in 1..=size {
            let d = shift as i64 + j as i64 - 2 * i as i64;
            mat[i - 1][j - 1] = if d < 0 {
                SparsePolynomial::zero(alphabet)
            } else if d == 0 {
                SparsePolynomial::one(alphabet)
            } else {
                let px = ptilde(&[d as u32], n)?.embedded(alphabet, 0)?;
                let py = ptilde(&[d as u32], n)?.embedded(alphabet, n)?;
                px.checked_add(&py)?
            };
        }
    }
    determinant(&mat, alphabet)
}

/// The complementary-pair kernel
/// `sum_I Pt_I(X) Pt_{complement}(Y)` over the doubled alphabet.
pub fn kernel_ptilde(n: usize, t: GroupType) -> Result<SparsePolynomial> {
    let (size, _) = kernel_params(n, t)?;
    let max_part = size;
    let alphabet = 2 * n;
    let mut acc = SparsePolynomial::zero(alphabet);
    for parts in strict_partitions(max_part) {
        let px = ptilde(&parts, n)?.embedded(alphabet, 0)?;
        let py = ptilde(&staircase_complement(&parts, max_part)?, n)?.embedded(alphabet, n)?;
        acc = acc.checked_add(&px.checked_mul(&py)?)?;
    }
    Ok(acc)
}

/// The complementary-pair kernel with the first alphabet twisted by `w` and
/// both alphabets identified: `sum_I Pt_I^w Pt_{complement}` over `n`
/// variables.
pub fn kernel_ptilde_twisted(
    n: usize,
    t: GroupType,
    w: &SignedPermutation,
) -> Result<SparsePolynomial> {
    let (size, _) = kernel_params(n, t)?;
    let mut acc = SparsePolynomial::zero(n);
    for parts in strict_partitions(size) {
        let px = ptilde(&parts, n)?.act(w)?;
        let py = ptilde(&staircase_complement(&parts, size)?, n)?;
        acc = acc.checked_add(&px.checked_mul(&py)?)?;
    }
    Ok(acc)
}

/// Substitutes the second half of a doubled alphabet by the `w`-image of
/// the first: `y_i -> sign(w_i) x_{|w_i|}`, producing an `n`-variable
/// polynomial.
pub fn substitute_second_alphabet(
    f: &SparsePolynomial,
    w: &SignedPermutation,
) -> Result<SparsePolynomial> {
    let alphabet = f.alphabet_size();
    let n = w.size();
    if alphabet != 2 * n {
        return Err(Error::AlphabetMismatch(alphabet, 2 * n));
    }
    let mut terms = Vec::new();
    for (m, c) in f.iter() {
        let mut exp: Vec<u16> = m.0[..n].to_vec();
        let mut negative = false;
        for i in 0..n {
            let image = w.entry(i);
            let target = image.unsigned_abs() as usize - 1;
            let e = m.0[n + i];
            exp[target] += e;
            if image < 0 && e % 2 == 1 {
                negative = !negative;
            }
        }
        terms.push((Monomial(exp), if negative { -c } else { c.clone() }));
    }
    SparsePolynomial::from_terms(n, terms)
}

/// Decides congruence to zero modulo the invariant-difference ideal of the
/// requested type by substituting `Y := X^w` over the whole group orbit.
pub fn congruent_mod_ideal(f: &SparsePolynomial, t: GroupType) -> Result<bool> {
    let alphabet = f.alphabet_size();
    if alphabet % 2 != 0 {
        return Err(Error::InvalidArgument(
            "congruence expects a doubled alphabet".into(),
        ));
    }
    let n = alphabet / 2;
    for w in enumerate_group(t, n, ENUMERATION_BOUND)? {
        if !substitute_second_alphabet(f, &w)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::Letter;

    #[test]
    fn singles_and_pairs() {
        let n = 2;
        assert_eq!(qtilde(&[1], n).unwrap(), elementary(1, n));
        assert_eq!(qtilde_pair(1, 0, n).unwrap(), elementary(1, n));
        // the doubled pair is the power sum of squares
        let expected = SparsePolynomial::parse("x1^2 + x2^2", n).unwrap();
        assert_eq!(qtilde_pair(1, 1, n).unwrap(), expected);
        assert!(qtilde_pair(0, 1, n).is_err());
        assert_eq!(qtilde(&[3], 2).unwrap(), SparsePolynomial::zero(2));
    }

    #[test]
    fn methods_agree() {
        for n in 2..=4 {
            for parts in strict_partitions(n) {
                assert_eq!(
                    qtilde_with(&parts, n, QtildeMethod::Pfaffian).unwrap(),
                    qtilde_with(&parts, n, QtildeMethod::Recursion).unwrap(),
                    "mismatch at {parts:?}, n={n}"
                );
            }
        }
        // and on indices with repeats
        for parts in [vec![2, 2], vec![2, 1, 1], vec![3, 2, 2, 1], vec![1, 1, 1]] {
            for n in 2..=4 {
                assert_eq!(
                    qtilde_with(&parts, n, QtildeMethod::Pfaffian).unwrap(),
                    qtilde_with(&parts, n, QtildeMethod::Recursion).unwrap(),
                    "mismatch at {parts:?}, n={n}"
                );
            }
        }
    }

    #[test]
    fn doubled_pair_factorization() {
        for n in 2..=4usize {
            let cases: [(&[u32], &[u32], u32); 4] = [
                (&[3, 1], &[3, 2, 2, 1], 2),
                (&[3, 1], &[3, 1, 1, 1], 1),
                (&[2], &[3, 3, 2], 3),
                (&[], &[2, 2], 2),
            ];
            for (plain, doubled, j) in cases {
                let lhs = qtilde(doubled, n).unwrap();
                let rhs = qtilde_pair(j, j, n)
                    .unwrap()
                    .checked_mul(&qtilde(plain, n).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs, "factorization at {doubled:?}, n={n}");
            }
        }
    }

    #[test]
    fn leading_terms_are_monic_conjugate_monomials() {
        // the top product of elementary functions contributes x^(conjugate of I)
        // exactly once, and every correction term is smaller in the term order
        for n in 2..=4 {
            for parts in strict_partitions(n) {
                if parts.is_empty() {
                    continue;
                }
                let q = qtilde(&parts, n).unwrap();
                let (mono, coeff) = q.leading_term().unwrap();
                let mut expected = vec![0u16; n];
                for &p in &parts {
                    for slot in &mut expected[..p as usize] {
                        *slot += 1;
                    }
                }
                assert_eq!(mono.0, expected, "leading monomial of {parts:?}");
                assert!(coeff.is_one(), "leading coefficient of {parts:?}");
            }
        }
    }

    #[test]
    fn branching_rule() {
        for (parts, m) in [
            (vec![1], 2usize),
            (vec![2, 1], 2),
            (vec![3, 2, 1], 3),
            (vec![3, 1], 4),
        ] {
            let (ok, contributing) = branch(&parts, m).unwrap();
            assert!(ok, "branching failed for {parts:?} in {m} variables");
            assert!(!contributing.is_empty());
        }
        let (_, js) = branch(&[1], 2).unwrap();
        assert_eq!(js, vec![(vec![1], 0), (vec![], 1)]);
    }

    #[test]
    fn complement_and_enumeration() {
        assert_eq!(staircase_complement(&[2], 3).unwrap(), vec![3, 1]);
        assert_eq!(staircase_complement(&[], 2).unwrap(), vec![2, 1]);
        assert!(staircase_complement(&[4], 3).is_err());
        assert_eq!(strict_partitions(3).len(), 8);
    }

    #[test]
    fn scalar_expansion_and_dual_decomposition() {
        let n = 3;
        let f = qtilde(&[2, 1], n)
            .unwrap()
            .scaled(&DyadicRational::from_integer(4))
            .checked_add(&qtilde(&[3], n).unwrap())
            .unwrap();
        let expansion = qtilde_expand_scalar(&f, n).unwrap().unwrap();
        assert_eq!(
            expansion,
            vec![
                (vec![2, 1], DyadicRational::from_integer(4)),
                (vec![3], DyadicRational::one()),
            ]
        );
        assert_eq!(
            qtilde_expand_scalar(&SparsePolynomial::variable(n, 0), n).unwrap(),
            None
        );

        // dual decomposition reconstructs and finds the same single term
        let g = ptilde(&[2, 1], n).unwrap();
        let decomposition = ptilde_decompose(&g, n, GroupType::D).unwrap();
        assert_eq!(decomposition.len(), 1);
        assert_eq!(decomposition[0].0, vec![2, 1]);
        assert_eq!(decomposition[0].1, SparsePolynomial::one(n));

        let mixed = elementary(1, n).checked_mul(&elementary(2, n)).unwrap();
        let parts_sum: SparsePolynomial = ptilde_decompose(&mixed, n, GroupType::B)
            .unwrap()
            .into_iter()
            .fold(SparsePolynomial::zero(n), |acc, (parts, coeff)| {
                acc.checked_add(&coeff.checked_mul(&ptilde(&parts, n).unwrap()).unwrap())
                    .unwrap()
            });
        assert_eq!(parts_sum, mixed);
    }

    #[test]
    fn kernels_in_rank_two() {
        let n = 2;
        // single-entry determinant for type D
        let f = kernel_f(n, GroupType::D).unwrap();
        let expected = ptilde(&[1], n)
            .unwrap()
            .embedded(4, 0)
            .unwrap()
            .checked_add(&ptilde(&[1], n).unwrap().embedded(4, 2).unwrap())
            .unwrap();
        assert_eq!(f, expected);
        assert_eq!(kernel_ptilde(n, GroupType::D).unwrap(), expected);

        // the difference is congruent to zero for both types
        for t in [GroupType::B, GroupType::D] {
            let diff = kernel_f(n, t)
                .unwrap()
                .checked_sub(&kernel_ptilde(n, t).unwrap())
                .unwrap();
            assert!(congruent_mod_ideal(&diff, t).unwrap(), "type {t}");
        }
    }

    #[test]
    fn congruence_examples() {
        let n = 2;
        let x1x2 = SparsePolynomial::monomial(2 * n, &[1, 1, 0, 0], DyadicRational::one());
        let y1y2 = SparsePolynomial::monomial(2 * n, &[0, 0, 1, 1], DyadicRational::one());
        let product_diff = x1x2.checked_sub(&y1y2).unwrap();
        assert!(congruent_mod_ideal(&product_diff, GroupType::D).unwrap());
        assert!(!congruent_mod_ideal(&product_diff, GroupType::B).unwrap());
        let linear_diff = SparsePolynomial::monomial(2 * n, &[1, 0, 0, 0], DyadicRational::one())
            .checked_sub(&SparsePolynomial::monomial(
                2 * n,
                &[0, 0, 1, 0],
                DyadicRational::one(),
            ))
            .unwrap();
        assert!(!congruent_mod_ideal(&linear_diff, GroupType::D).unwrap());
    }

    #[test]
    fn triangular_operator_collapses_the_basis() {
        // the full triangular word annihilates every proper Pt and maps the
        // staircase one to a sign
        let n = 3;
        let full: Vec<u32> = (1..=n as u32).rev().collect();
        for parts in strict_partitions(n) {
            let image = nabla_b(&ptilde(&parts, n).unwrap(), n, n).unwrap();
            if parts == full {
                let sign = if (n * (n + 1) / 2) % 2 == 1 { -1 } else { 1 };
                assert_eq!(image, SparsePolynomial::constant(n, DyadicRational::from_integer(sign)));
            } else {
                assert!(image.is_zero(), "expected zero at {parts:?}");
            }
        }
        // scalar product normalization in rank two, type D
        let p1 = ptilde(&[1], 2).unwrap();
        let paired = crate::divdiff::apply_word(&p1, &[Letter::Heart]).unwrap();
        assert_eq!(paired, SparsePolynomial::constant(2, DyadicRational::from_integer(-1)));
    }
}
