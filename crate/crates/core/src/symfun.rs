//! Symmetric functions in the power-sum basis, with the generator families
//! (elementary, complete, and the doubled odd-power family), the Hall
//! scalar product and its adjoint derivative, Schur Q/P functions by a
//! Pfaffian on pairs, the degree-lowering vertex operators, and exact
//! realization in finitely many variables.
//!
//! Every expression carries a degree cap; terms above the cap are dropped
//! silently, so caps must be chosen at least as large as any degree the
//! caller intends to inspect.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::dyadic::DyadicRational;
use crate::error::{Error, Result};
use crate::poly::{Monomial, SparsePolynomial};
use crate::weyl::Letter;

/// A symmetric function written in the power-sum basis, truncated beyond
/// the degree cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymFunExpr {
    cap: u32,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

fn partition_degree(parts: &[u32]) -> u32 {
    parts.iter().sum()
}

impl SymFunExpr {
    pub fn zero(cap: u32) -> Self {
        SymFunExpr { cap, terms: BTreeMap::new() }
    }

    pub fn one(cap: u32) -> Self {
        SymFunExpr::from_partition(&[], BigRational::one(), cap)
    }

    /// A single scaled power-sum monomial `c * p_lambda`.
    pub fn from_partition(lambda: &[u32], coeff: BigRational, cap: u32) -> Self {
        let mut sorted: Vec<u32> = lambda.iter().copied().filter(|&p| p > 0).collect();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mut expr = SymFunExpr::zero(cap);
        if !coeff.is_zero() && partition_degree(&sorted) <= cap {
            expr.terms.insert(sorted, coeff);
        }
        expr
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|l| partition_degree(l)).max().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, lambda: &[u32]) -> BigRational {
        self.terms.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    fn insert(&mut self, lambda: Vec<u32>, coeff: BigRational) {
        if coeff.is_zero() || partition_degree(&lambda) > self.cap {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Occupied(mut occupied) => {
                *occupied.get_mut() += coeff;
                if occupied.get().is_zero() {
                    occupied.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(vacant) => {
                vacant.insert(coeff);
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.cap = self.cap.min(rhs.cap);
        out.terms.retain(|l, _| partition_degree(l) <= out.cap);
        for (l, c) in &rhs.terms {
            out.insert(l.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scaled(&-BigRational::one()))
    }

    pub fn scaled(&self, coeff: &BigRational) -> Self {
        if coeff.is_zero() {
            return SymFunExpr::zero(self.cap);
        }
        SymFunExpr {
            cap: self.cap,
            terms: self.terms.iter().map(|(l, c)| (l.clone(), c * coeff)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = SymFunExpr::zero(self.cap.min(rhs.cap));
        for (la, ca) in &self.terms {
            for (lb, cb) in &rhs.terms {
                if partition_degree(la) + partition_degree(lb) > out.cap {
                    continue;
                }
                let mut merged: Vec<u32> = la.iter().chain(lb.iter()).copied().collect();
                merged.sort_unstable_by(|a, b| b.cmp(a));
                out.insert(merged, ca * cb);
            }
        }
        out
    }

    /// Plain rendering, e.g. `3/2*p[2,1] - p[3] + 1`.
    pub fn to_plain_string(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by_key(|l| (std::cmp::Reverse(partition_degree(l)), (*l).clone()));
        let mut out = String::new();
        for (idx, lambda) in keys.iter().enumerate() {
            let c = &self.terms[*lambda];
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff_text = if mag.is_integer() {
                mag.numer().to_string()
            } else {
                format!("{}/{}", mag.numer(), mag.denom())
            };
            if lambda.is_empty() {
                out.push_str(&coeff_text);
            } else {
                let body = lambda
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                if coeff_text == "1" {
                    out.push_str(&format!("p[{body}]"));
                } else {
                    out.push_str(&format!("{coeff_text}*p[{body}]"));
                }
            }
        }
        out
    }
}

enum GeneratorKind {
    Elementary,
    Complete,
    Doubled,
}

fn generator(kind: GeneratorKind, k: u32, cap: u32) -> SymFunExpr {
    // Newton-style recurrences from the logarithmic derivative of each
    // generating series
    let mut family = vec![SymFunExpr::one(cap)];
    for m in 1..=k {
        let mut acc = SymFunExpr::zero(cap);
        for j in 1..=m {
            let weight = match kind {
                GeneratorKind::Elementary => {
                    if j % 2 == 1 {
                        BigRational::one()
                    } else {
                        -BigRational::one()
                    }
                }
                GeneratorKind::Complete => BigRational::one(),
                GeneratorKind::Doubled => {
                    if j % 2 == 1 {
                        BigRational::from_integer(2.into())
                    } else {
                        BigRational::zero()
                    }
                }
            };
            if weight.is_zero() {
                continue;
            }
            let p_j = SymFunExpr::from_partition(&[j], weight, cap);
            acc = acc.add(&p_j.mul(&family[(m - j) as usize]));
        }
        family.push(acc.scaled(&BigRational::new(BigInt::one(), m.into())));
    }
    family.swap_remove(k as usize)
}

/// Power sum `p_k` as an expression.
pub fn p_gen(k: u32, cap: u32) -> SymFunExpr {
    SymFunExpr::from_partition(&[k], BigRational::one(), cap)
}

/// Elementary symmetric function `e_k`.
pub fn e_gen(k: u32, cap: u32) -> SymFunExpr {
    generator(GeneratorKind::Elementary, k, cap)
}

/// Complete homogeneous function `h_k`, equal to the one-row Schur
/// function.
pub fn h_gen(k: u32, cap: u32) -> SymFunExpr {
    generator(GeneratorKind::Complete, k, cap)
}

/// One-row function `q_k` of the doubled odd-power series
/// `exp(2 sum_{m odd} p_m t^m / m)`.
pub fn q_gen(k: u32, cap: u32) -> SymFunExpr {
    generator(GeneratorKind::Doubled, k, cap)
}

/// One-row Schur P function, half of `q_k` for `k > 0`.
pub fn p_row_gen(k: u32, cap: u32) -> SymFunExpr {
    if k == 0 {
        return SymFunExpr::one(cap);
    }
    q_gen(k, cap).scaled(&BigRational::new(BigInt::one(), 2.into()))
}

fn z_factor(lambda: &[u32]) -> BigRational {
    let mut z = BigInt::one();
    let mut run = 0u64;
    for (idx, &part) in lambda.iter().enumerate() {
        run += 1;
        let next_differs = idx + 1 == lambda.len() || lambda[idx + 1] != part;
        z *= BigInt::from(part);
        if next_differs {
            for m in 1..=run {
                z *= BigInt::from(m);
            }
            run = 0;
        }
    }
    BigRational::from_integer(z)
}

/// Hall scalar product; power sums are orthogonal with norm `z_lambda`.
pub fn hall_pair(f: &SymFunExpr, g: &SymFunExpr) -> BigRational {
    let mut acc = BigRational::zero();
    for (lambda, c) in f.iter() {
        let d = g.coefficient(lambda);
        if !d.is_zero() {
            acc += c * d * z_factor(lambda);
        }
    }
    acc
}

fn derive_single(g: &SymFunExpr, k: u32) -> SymFunExpr {
    // adjoint of multiplication by p_k: k * d/dp_k
    let mut out = SymFunExpr::zero(g.cap());
    for (lambda, c) in g.iter() {
        let multiplicity = lambda.iter().filter(|&&p| p == k).count();
        if multiplicity == 0 {
            continue;
        }
        let mut reduced = lambda.clone();
        let pos = reduced.iter().position(|&p| p == k).unwrap();
        reduced.remove(pos);
        let factor = BigRational::from_integer(BigInt::from(k) * BigInt::from(multiplicity));
        out.insert(reduced, c * factor);
    }
    out
}

/// The adjoint of multiplication by `f` under the Hall product, applied to
/// `g`.
pub fn foulkes_d(f: &SymFunExpr, g: &SymFunExpr) -> SymFunExpr {
    let mut out = SymFunExpr::zero(g.cap());
    for (lambda, c) in f.iter() {
        let mut derived = g.clone();
        for &part in lambda {
            derived = derive_single(&derived, part);
        }
        out = out.add(&derived.scaled(c));
    }
    out
}

/// Sorts a nonnegative sequence into a strict partition using full
/// antisymmetry: zeros are dropped, a repeated value kills the term and
/// each transposition flips the sign.
pub fn antisym_normalize(seq: &[u32]) -> Option<(Vec<u32>, bool)> {
    let mut parts: Vec<u32> = seq.iter().copied().filter(|&p| p > 0).collect();
    let mut negative = false;
    for i in 1..parts.len() {
        let mut j = i;
        while j > 0 && parts[j] > parts[j - 1] {
            parts.swap(j, j - 1);
            negative = !negative;
            j -= 1;
        }
    }
    if parts.windows(2).any(|p| p[0] == p[1]) {
        return None;
    }
    Some((parts, negative))
}

fn q_pair(a: u32, b: u32, cap: u32) -> SymFunExpr {
    let mut out = q_gen(a, cap).mul(&q_gen(b, cap));
    for p in 1..=b {
        let prod = q_gen(a + p, cap)
            .mul(&q_gen(b - p, cap))
            .scaled(&BigRational::from_integer(2.into()));
        out = if p % 2 == 1 { out.sub(&prod) } else { out.add(&prod) };
    }
    out
}

fn schur_q_sorted(parts: &[u32], cap: u32) -> SymFunExpr {
    match parts.len() {
        0 => SymFunExpr::one(cap),
        1 => q_gen(parts[0], cap),
        _ => {
            let mut padded = parts.to_vec();
            if padded.len() % 2 == 1 {
                padded.push(0);
            }
            let mut acc = SymFunExpr::zero(cap);
            for j in 1..padded.len() {
                let entry = q_pair(padded[0], padded[j], cap);
                let mut rest = padded[1..].to_vec();
                rest.remove(j - 1);
                rest.retain(|&p| p > 0);
                let term = entry.mul(&schur_q_sorted(&rest, cap));
                acc = if j % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
    }
}

/// Schur Q function of any nonnegative sequence, normalized
/// antisymmetrically.
pub fn schur_q(seq: &[u32], cap: u32) -> SymFunExpr {
    match antisym_normalize(seq) {
        None => SymFunExpr::zero(cap),
        Some((parts, negative)) => {
            let q = schur_q_sorted(&parts, cap);
            if negative {
                q.scaled(&-BigRational::one())
            } else {
                q
            }
        }
    }
}

/// Schur P function, `2^{-len}` times the Q function.
pub fn schur_p(seq: &[u32], cap: u32) -> SymFunExpr {
    match antisym_normalize(seq) {
        None => SymFunExpr::zero(cap),
        Some((parts, negative)) => {
            let scale = BigRational::new(
                if negative { -BigInt::one() } else { BigInt::one() },
                BigInt::from(2).pow(parts.len() as u32),
            );
            schur_q_sorted(&parts, cap).scaled(&scale)
        }
    }
}

fn e_pair(a: u32, b: u32, cap: u32) -> SymFunExpr {
    let mut out = e_gen(a, cap).mul(&e_gen(b, cap));
    for p in 1..=b {
        let prod = e_gen(a + p, cap)
            .mul(&e_gen(b - p, cap))
            .scaled(&BigRational::from_integer(2.into()));
        out = if p % 2 == 1 { out.sub(&prod) } else { out.add(&prod) };
    }
    out
}

/// The stable symmetric function whose finite realizations are the `Qt`
/// polynomials: built from free elementary generators, so repeated parts
/// survive.
pub fn qtilde_sym(parts: &[u32], cap: u32) -> Result<SymFunExpr> {
    for pair in parts.windows(2) {
        if pair[0] < pair[1] {
            return Err(Error::InvalidArgument(format!(
                "index {parts:?} is not weakly decreasing"
            )));
        }
    }
    let parts: Vec<u32> = parts.iter().copied().take_while(|&p| p > 0).collect();
    Ok(match parts.len() {
        0 => SymFunExpr::one(cap),
        1 => e_gen(parts[0], cap),
        _ => {
            let mut padded = parts.clone();
            if padded.len() % 2 == 1 {
                padded.push(0);
            }
            let mut acc = SymFunExpr::zero(cap);
            for j in 1..padded.len() {
                let entry = e_pair(padded[0], padded[j], cap);
                let mut rest = padded[1..].to_vec();
                rest.remove(j - 1);
                rest.retain(|&p| p > 0);
                let term = entry.mul(&qtilde_sym(&rest, cap)?);
                acc = if j % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
    })
}

/// The degree-balanced vertex operators: an alternating sum of an adjoint
/// derivative followed by multiplication with a one-row family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexOp {
    /// derive by one-row P, multiply by one-row Schur
    Us,
    /// derive by one-row P, multiply by elementary
    Ue,
    /// derive by elementary, multiply by one-row P
    Ve,
}

pub fn vertex_apply(f: &SymFunExpr, op: VertexOp) -> SymFunExpr {
    let cap = f.cap();
    let mut acc = f.clone();
    for k in 1..=f.degree() {
        let (derive_by, multiply_by) = match op {
            VertexOp::Us => (p_row_gen(k, cap), h_gen(k, cap)),
            VertexOp::Ue => (p_row_gen(k, cap), e_gen(k, cap)),
            VertexOp::Ve => (e_gen(k, cap), p_row_gen(k, cap)),
        };
        let term = foulkes_d(&derive_by, f).mul(&multiply_by);
        acc = if k % 2 == 1 { acc.sub(&term) } else { acc.add(&term) };
    }
    acc
}

fn rational_to_dyadic(r: &BigRational) -> Result<DyadicRational> {
    let denom = r.denom();
    let bits = denom.trailing_zeros().unwrap_or(0);
    if (denom >> bits) != BigInt::one() {
        return Err(Error::NonDyadic(r.to_string()));
    }
    Ok(DyadicRational::new(r.numer().clone(), -(bits as i64)))
}

/// Power sum polynomial `x_1^k + .. + x_n^k` (`k = 0` gives the constant
/// `n`).
pub fn power_sum(k: u32, n: usize) -> SparsePolynomial {
    if k == 0 {
        return SparsePolynomial::constant(n, DyadicRational::from_integer(n as i64));
    }
    let mut terms = Vec::new();
    for v in 0..n {
        let mut exp = vec![0u16; n];
        exp[v] = k as u16;
        terms.push((Monomial(exp), DyadicRational::one()));
    }
    SparsePolynomial::from_terms(n, terms).expect("power sum fits any term limit in scope")
}

/// Evaluates an expression in `n` variables exactly; errors if a
/// coefficient of the result is not dyadic.
pub fn realize(f: &SymFunExpr, n: usize) -> Result<SparsePolynomial> {
    let mut acc: BTreeMap<Monomial, BigRational> = BTreeMap::new();
    let mut cache: BTreeMap<u32, SparsePolynomial> = BTreeMap::new();
    for (lambda, c) in f.iter() {
        let mut product = SparsePolynomial::one(n);
        for &part in lambda {
            let ps = cache.entry(part).or_insert_with(|| power_sum(part, n));
            product = product.checked_mul(ps)?;
        }
        for (m, pc) in product.iter() {
            let as_rational = if pc.exponent() >= 0 {
                BigRational::from_integer(
                    pc.mantissa().clone() * BigInt::from(2).pow(pc.exponent() as u32),
                )
            } else {
                BigRational::new(
                    pc.mantissa().clone(),
                    BigInt::from(2).pow((-pc.exponent()) as u32),
                )
            };
            let entry = acc.entry(m.clone()).or_insert_with(BigRational::zero);
            *entry += c * as_rational;
        }
    }
    let mut terms = Vec::new();
    for (m, c) in acc {
        if c.is_zero() {
            continue;
        }
        terms.push((m, rational_to_dyadic(&c)?));
    }
    SparsePolynomial::from_terms(n, terms)
}

/// The rectangular word with rows `(q..n-1), (q-1..n-2), .., (1..r)` read
/// top to bottom, `n = q + r`.
pub fn rectangle_word(q: usize, r: usize) -> Result<Vec<Letter>> {
    if q == 0 || r == 0 {
        return Err(Error::InvalidArgument("rectangle needs q, r >= 1".into()));
    }
    let mut word = Vec::with_capacity(q * r);
    for t in 0..q {
        for idx in (q - t)..(q - t + r) {
            word.push(Letter::S(idx as u8));
        }
    }
    Ok(word)
}

/// The multiplicity with which the rectangular word glues two P functions
/// on split alphabets into one.
pub fn rectangle_coefficient(q: usize, r: usize, k: usize, h: usize) -> i64 {
    if (q - k) * (r - h) % 2 == 1 {
        return 0;
    }
    let n = q + r;
    let value = binomial(((n - k - h) / 2) as u64, ((q - k) / 2) as u64) as i64;
    if (q - k) * r % 2 == 1 {
        -value
    } else {
        value
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(num: i64, den: i64) -> BigRational {
        BigRational::new(num.into(), den.into())
    }

    #[test]
    fn generator_families() {
        let cap = 6;
        assert_eq!(e_gen(1, cap), p_gen(1, cap));
        let e2 = e_gen(2, cap);
        assert_eq!(e2.coefficient(&[1, 1]), rat(1, 2));
        assert_eq!(e2.coefficient(&[2]), rat(-1, 2));
        let h2 = h_gen(2, cap);
        assert_eq!(h2.coefficient(&[1, 1]), rat(1, 2));
        assert_eq!(h2.coefficient(&[2]), rat(1, 2));
        assert_eq!(q_gen(1, cap), p_gen(1, cap).scaled(&rat(2, 1)));
        let q2 = q_gen(2, cap);
        assert_eq!(q2.coefficient(&[1, 1]), rat(2, 1));
        assert_eq!(q2.coefficient(&[2]), rat(0, 1));
        // h_3 has a denominator 6; realization still lands in integers
        let h3 = h_gen(3, cap);
        assert_eq!(h3.coefficient(&[1, 1, 1]), rat(1, 6));
        let realized = realize(&h3, 2).unwrap();
        assert_eq!(
            realized,
            SparsePolynomial::parse("x1^3 + x1^2*x2 + x1*x2^2 + x2^3", 2).unwrap()
        );
    }

    #[test]
    fn hall_product_norms() {
        let cap = 4;
        assert_eq!(hall_pair(&p_gen(1, cap), &p_gen(1, cap)), rat(1, 1));
        assert_eq!(hall_pair(&p_gen(2, cap), &p_gen(2, cap)), rat(2, 1));
        let p11 = p_gen(1, cap).mul(&p_gen(1, cap));
        assert_eq!(hall_pair(&p11, &p11), rat(2, 1));
        assert_eq!(hall_pair(&h_gen(2, cap), &h_gen(2, cap)), rat(1, 1));
        assert_eq!(hall_pair(&h_gen(2, cap), &e_gen(2, cap)), rat(0, 1));
    }

    #[test]
    fn derivative_is_adjoint_to_multiplication() {
        let cap = 6;
        let triples = [
            (e_gen(2, cap), p_gen(1, cap), h_gen(3, cap)),
            (q_gen(2, cap), e_gen(2, cap), h_gen(4, cap)),
            (p_gen(3, cap), h_gen(1, cap), h_gen(4, cap)),
        ];
        for (f, g, h) in triples {
            let lhs = hall_pair(&f.mul(&g), &h);
            let rhs = hall_pair(&g, &foulkes_d(&f, &h));
            assert_eq!(lhs, rhs);
        }
        assert_eq!(
            foulkes_d(&p_gen(1, cap), &p_gen(1, cap).mul(&p_gen(1, cap))),
            p_gen(1, cap).scaled(&rat(2, 1))
        );
    }

    #[test]
    fn schur_pq_basics() {
        let cap = 8;
        // the pair formula cancels on equal indices
        assert!(schur_q(&[2, 2], cap).is_zero());
        assert_eq!(
            schur_q(&[1, 2], cap),
            schur_q(&[2, 1], cap).scaled(&-BigRational::one())
        );
        assert!(schur_q(&[3, 0, 3], cap).is_zero());
        // known realization in two variables
        let p21 = realize(&schur_p(&[2, 1], cap), 2).unwrap();
        assert_eq!(
            p21,
            SparsePolynomial::parse("x1^2*x2 + x1*x2^2", 2).unwrap()
        );
        let q21 = realize(&schur_q(&[2, 1], cap), 2).unwrap();
        assert_eq!(
            q21,
            SparsePolynomial::parse("4*x1^2*x2 + 4*x1*x2^2", 2).unwrap()
        );
        // more variables than parts
        let p2_three = realize(&schur_p(&[2], cap), 3).unwrap();
        assert_eq!(
            p2_three,
            SparsePolynomial::parse(
                "x1^2 + x2^2 + x3^2 + 2*x1*x2 + 2*x1*x3 + 2*x2*x3",
                3
            )
            .unwrap()
        );
    }

    #[test]
    fn stable_qtilde_matches_finite_realizations() {
        let cap = 8;
        for parts in [vec![1], vec![2, 1], vec![2, 2], vec![3, 1]] {
            let stable = qtilde_sym(&parts, cap).unwrap();
            for n in 2..=3 {
                assert_eq!(
                    realize(&stable, n).unwrap(),
                    crate::ptilde::qtilde(&parts, n).unwrap(),
                    "mismatch at {parts:?}, n={n}"
                );
            }
        }
        assert!(qtilde_sym(&[1, 2], 8).is_err());
    }

    #[test]
    fn vertex_operators_kill_odd_rows() {
        let cap = 8;
        // single rows have odd length, so they vanish
        assert!(vertex_apply(&qtilde_sym(&[1], cap).unwrap(), VertexOp::Us).is_zero());
        assert!(vertex_apply(&schur_p(&[1], cap), VertexOp::Ve).is_zero());
        assert!(vertex_apply(&p_gen(1, cap), VertexOp::Ue).is_zero());
        // even-length indices are fixed
        let q21 = qtilde_sym(&[2, 1], cap).unwrap();
        assert_eq!(vertex_apply(&q21, VertexOp::Us), q21);
        let p31 = schur_p(&[3, 1], cap);
        assert_eq!(vertex_apply(&p31, VertexOp::Ve), p31);
    }

    #[test]
    fn realization_requires_dyadic_output() {
        let third = SymFunExpr::from_partition(&[3], rat(1, 3), 6);
        assert!(matches!(realize(&third, 2), Err(Error::NonDyadic(_))));
        let ok = SymFunExpr::from_partition(&[2], rat(3, 4), 6);
        assert_eq!(
            realize(&ok, 1).unwrap(),
            SparsePolynomial::parse("3/2^2*x1^2", 1).unwrap()
        );
    }

    #[test]
    fn truncation_is_silent_and_sticky() {
        let low = p_gen(2, 2);
        let product = low.mul(&low); // degree 4 exceeds the cap
        assert!(product.is_zero());
        let mixed = p_gen(2, 8).add(&p_gen(1, 3));
        assert_eq!(mixed.cap(), 3);
    }

    #[test]
    fn rectangle_word_shape() {
        let word = rectangle_word(2, 3).unwrap();
        let text: Vec<String> = word.iter().map(|l| l.to_string()).collect();
        assert_eq!(text.join(" "), "2 3 4 1 2 3");
        assert_eq!(rectangle_coefficient(1, 2, 0, 0), 1);
        assert_eq!(rectangle_coefficient(1, 2, 0, 1), 0);
        assert_eq!(rectangle_coefficient(1, 2, 0, 2), 1);
        assert_eq!(rectangle_coefficient(1, 1, 0, 0), 0);
        assert_eq!(rectangle_coefficient(1, 3, 0, 1), -1);
        assert_eq!(rectangle_coefficient(2, 2, 0, 0), 2);
    }
}
