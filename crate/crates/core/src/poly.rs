//! Sparse multivariate polynomials over Z[1/2].
//!
//! A polynomial carries its alphabet size `n` and a map from exponent
//! vectors to nonzero dyadic coefficients. Terms are kept in graded
//! reverse-lexicographic order with `x1 > x2 > ... > xn`, which fixes a
//! canonical serialization: both the plain-text form and the JSON form list
//! terms leading-first and round-trip bit-exactly.
//!
//! Key operations:
//! - ring arithmetic with exact coefficient arithmetic throughout,
//! - the (right) action of signed permutations, `x_i -> sign * x_target`,
//! - exact division by repeated leading-term elimination, reporting
//!   `NonDivisible` when no quotient exists in Z[1/2][x].

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};

use crate::dyadic::DyadicRational;
use crate::error::{Error, Result};
use crate::weyl::SignedPermutation;

/// Global cap on term counts, as an out-of-memory guard. Zero disables it.
static MAX_TERMS: AtomicUsize = AtomicUsize::new(0);

/// Sets the global term-count limit (0 disables). Returns the old limit.
pub fn set_max_terms(limit: usize) -> usize {
    MAX_TERMS.swap(limit, AtomicOrdering::Relaxed)
}

fn check_term_limit(count: usize) -> Result<()> {
    let limit = MAX_TERMS.load(AtomicOrdering::Relaxed);
    if limit != 0 && count > limit {
        return Err(Error::TermLimit(count, limit));
    }
    Ok(())
}

/// An exponent vector, ordered by graded reverse-lexicographic comparison
/// with `x1 > x2 > ... > xn`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise quotient; `None` when any exponent would go negative.
    fn checked_sub(&self, rhs: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (&a, &b) in self.0.iter().zip(&rhs.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Monomial(out))
    }

    fn mul(&self, rhs: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&rhs.0).map(|(&a, &b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // equal degree: greater = smaller entry at the last differing index
        for j in (0..self.0.len()).rev() {
            if self.0[j] != other.0[j] {
                return other.0[j].cmp(&self.0[j]);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse polynomial over Z[1/2] in `n` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    n: usize,
    terms: BTreeMap<Monomial, DyadicRational>,
}

impl SparsePolynomial {
    pub fn zero(n: usize) -> Self {
        SparsePolynomial { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, value: DyadicRational) -> Self {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(Monomial(vec![0; n]), value);
        }
        SparsePolynomial { n, terms }
    }

    pub fn one(n: usize) -> Self {
        SparsePolynomial::constant(n, DyadicRational::one())
    }

    /// The variable `x_{var+1}` (0-based index).
    pub fn variable(n: usize, var: usize) -> Self {
        assert!(var < n, "variable index out of range");
        let mut exp = vec![0u16; n];
        exp[var] = 1;
        SparsePolynomial::monomial(n, &exp, DyadicRational::one())
    }

    pub fn monomial(n: usize, exponents: &[u16], coeff: DyadicRational) -> Self {
        assert_eq!(exponents.len(), n, "exponent vector length must equal n");
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(Monomial(exponents.to_vec()), coeff);
        }
        SparsePolynomial { n, terms }
    }

    /// Builds a polynomial from an unsorted term stream, merging duplicates
    /// and dropping zero coefficients.
    pub fn from_terms(n: usize, mut raw: Vec<(Monomial, DyadicRational)>) -> Result<Self> {
        raw.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let mut terms = BTreeMap::new();
        let mut iter = raw.into_iter();
        if let Some((mut mono, mut coeff)) = iter.next() {
            for (m, c) in iter {
                if m == mono {
                    coeff += &c;
                } else {
                    if !coeff.is_zero() {
                        terms.insert(mono, coeff);
                    }
                    mono = m;
                    coeff = c;
                }
            }
            if !coeff.is_zero() {
                terms.insert(mono, coeff);
            }
        }
        check_term_limit(terms.len())?;
        Ok(SparsePolynomial { n, terms })
    }

    pub fn alphabet_size(&self) -> usize {
        self.n
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates terms in ascending grevlex order.
    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &DyadicRational)> {
        self.terms.iter()
    }

    /// The coefficient of an exponent vector (zero when absent).
    pub fn coefficient(&self, exponents: &[u16]) -> DyadicRational {
        assert_eq!(exponents.len(), self.n);
        self.terms
            .get(&Monomial(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(DyadicRational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// The leading (greatest) term in grevlex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &DyadicRational)> {
        self.terms.last_key_value()
    }

    /// `Some(c)` when the polynomial is the constant `c` (possibly zero).
    pub fn constant_value(&self) -> Option<DyadicRational> {
        match self.terms.len() {
            0 => Some(DyadicRational::zero()),
            1 => {
                let (m, c) = self.terms.first_key_value().unwrap();
                m.is_constant().then(|| c.clone())
            }
            _ => None,
        }
    }

    fn check_same_alphabet(&self, rhs: &Self) -> Result<()> {
        if self.n != rhs.n {
            return Err(Error::AlphabetMismatch(self.n, rhs.n));
        }
        Ok(())
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.check_same_alphabet(rhs)?;
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            match terms.get_mut(m) {
                Some(existing) => {
                    *existing += c;
                    if existing.is_zero() {
                        terms.remove(m);
                    }
                }
                None => {
                    terms.insert(m.clone(), c.clone());
                }
            }
        }
        check_term_limit(terms.len())?;
        Ok(SparsePolynomial { n: self.n, terms })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.checked_add(&-rhs)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_same_alphabet(rhs)?;
        if self.is_zero() || rhs.is_zero() {
            return Ok(SparsePolynomial::zero(self.n));
        }
        // iterate over the smaller factor outside
        let (small, large) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut raw = Vec::with_capacity(small.terms.len() * large.terms.len());
        for (ms, cs) in &small.terms {
            for (ml, cl) in &large.terms {
                raw.push((ms.mul(ml), cs * cl));
            }
        }
        SparsePolynomial::from_terms(self.n, raw)
    }

    /// Multiplies by a single term, preserving order.
    pub fn mul_term(&self, exponents: &[u16], coeff: &DyadicRational) -> Self {
        assert_eq!(exponents.len(), self.n);
        if coeff.is_zero() {
            return SparsePolynomial::zero(self.n);
        }
        let shift = Monomial(exponents.to_vec());
        // adding a fixed vector preserves grevlex order, so rebuild directly
        let terms: BTreeMap<_, _> = self
            .terms
            .iter()
            .map(|(m, c)| (m.mul(&shift), c * coeff))
            .collect();
        SparsePolynomial { n: self.n, terms }
    }

    pub fn scaled(&self, coeff: &DyadicRational) -> Self {
        self.mul_term(&vec![0; self.n], coeff)
    }

    /// Exact division: returns `q` with `self = q * divisor`, or
    /// `NonDivisible` when no such `q` exists over Z[1/2].
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self> {
        self.check_same_alphabet(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (dm, dc) = divisor.leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut rest = self.clone();
        let mut quotient: Vec<(Monomial, DyadicRational)> = Vec::new();
        while let Some((rm, rc)) = rest.leading_term() {
            let qm = rm.checked_sub(&dm).ok_or(Error::NonDivisible)?;
            let qc = rc.checked_div(&dc).ok_or(Error::NonDivisible)?;
            rest = rest.checked_sub(&divisor.mul_term(&qm.0, &qc))?;
            quotient.push((qm, qc));
            check_term_limit(quotient.len())?;
        }
        SparsePolynomial::from_terms(self.n, quotient)
    }

    /// Applies a signed permutation: `x_i -> sign * x_target` following the
    /// one-line notation of `w`, arranged so that acting by `u` then `v`
    /// equals acting by the product `uv`.
    pub fn act(&self, w: &SignedPermutation) -> Result<Self> {
        if w.size() != self.n {
            return Err(Error::AlphabetMismatch(self.n, w.size()));
        }
        let inv = w.inverse();
        let mut raw = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut exp = vec![0u16; self.n];
            let mut flip = false;
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let target = inv.entry(i);
                exp[target.unsigned_abs() as usize - 1] = e;
                if target < 0 && e % 2 == 1 {
                    flip = !flip;
                }
            }
            let coeff = if flip { -c } else { c.clone() };
            raw.push((Monomial(exp), coeff));
        }
        SparsePolynomial::from_terms(self.n, raw)
    }

    /// Exchanges the variables with 0-based indices `i` and `j`.
    pub fn swapped_vars(&self, i: usize, j: usize) -> Self {
        self.map_exponents(|exp| {
            exp.swap(i, j);
            false
        })
    }

    /// Substitutes `x_{i+1} -> -x_{i+1}`.
    pub fn negated_var(&self, i: usize) -> Self {
        self.map_exponents(|exp| exp[i] % 2 == 1)
    }

    /// Substitutes `x_{i+1} -> -x_{j+1}` and `x_{j+1} -> -x_{i+1}`.
    pub fn swapped_negated_vars(&self, i: usize, j: usize) -> Self {
        self.map_exponents(|exp| {
            exp.swap(i, j);
            (exp[i] + exp[j]) % 2 == 1
        })
    }

    fn map_exponents(&self, f: impl Fn(&mut Vec<u16>) -> bool) -> Self {
        let mut raw = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut exp = m.0.clone();
            let flip = f(&mut exp);
            let coeff = if flip { -c } else { c.clone() };
            raw.push((Monomial(exp), coeff));
        }
        SparsePolynomial::from_terms(self.n, raw).expect("relabeling cannot grow")
    }

    /// Sets `x_{var+1} := 0`, keeping the alphabet size.
    pub fn substituted_zero(&self, var: usize) -> Self {
        assert!(var < self.n);
        let terms: BTreeMap<_, _> = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[var] == 0)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        SparsePolynomial { n: self.n, terms }
    }

    /// Reinterprets the polynomial over a larger alphabet, with the original
    /// variables placed at `offset..offset + n`.
    pub fn embedded(&self, new_n: usize, offset: usize) -> Result<Self> {
        if offset + self.n > new_n {
            return Err(Error::AlphabetMismatch(offset + self.n, new_n));
        }
        let terms: BTreeMap<_, _> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exp = vec![0u16; new_n];
                exp[offset..offset + self.n].copy_from_slice(&m.0);
                (Monomial(exp), c.clone())
            })
            .collect();
        Ok(SparsePolynomial { n: new_n, terms })
    }

    /// Pads the alphabet with unused trailing variables.
    pub fn extended(&self, new_n: usize) -> Result<Self> {
        self.embedded(new_n, 0)
    }

    /// Shrinks the alphabet; errors when a dropped variable is in use.
    pub fn restricted(&self, new_n: usize) -> Result<Self> {
        if new_n > self.n {
            return Err(Error::AlphabetMismatch(self.n, new_n));
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.0[new_n..].iter().any(|&e| e != 0) {
                return Err(Error::InvalidArgument(format!(
                    "variable beyond x{new_n} occurs with nonzero exponent"
                )));
            }
            terms.insert(Monomial(m.0[..new_n].to_vec()), c.clone());
        }
        Ok(SparsePolynomial { n: new_n, terms })
    }

    /// True when the polynomial is invariant under exchanging adjacent
    /// variables `x1..x_upto` (1-based bound).
    pub fn is_symmetric_in_first(&self, upto: usize) -> bool {
        (0..upto.saturating_sub(1)).all(|i| self.swapped_vars(i, i + 1) == *self)
    }

    /// Canonical plain-text form: terms leading-first, `c*x1^a1*...`.
    pub fn to_plain_string(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || m.is_constant() {
                factors.push(mag.to_string());
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{}", i + 1)),
                    _ => factors.push(format!("x{}^{}", i + 1, e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// LaTeX rendering of the canonical form.
    pub fn to_latex(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff_tex = if mag.is_integer() {
                let v = mag.to_integer().unwrap();
                v.to_string()
            } else {
                format!("\\frac{{{}}}{{2^{{{}}}}}", mag.mantissa(), -mag.exponent())
            };
            if coeff_tex != "1" || m.is_constant() {
                out.push_str(&coeff_tex);
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => out.push_str(&format!("x_{{{}}}", i + 1)),
                    _ => out.push_str(&format!("x_{{{}}}^{{{}}}", i + 1, e)),
                }
            }
        }
        out
    }

    /// Parses the plain-text form back (inverse of `to_plain_string`).
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if text == "0" {
            return Ok(SparsePolynomial::zero(n));
        }
        let mut raw: Vec<(Monomial, DyadicRational)> = Vec::new();
        let mut rest = text;
        let mut sign_neg = false;
        if let Some(r) = rest.strip_prefix('-') {
            sign_neg = true;
            rest = r.trim_start();
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r.trim_start();
        }
        loop {
            let split = rest
                .char_indices()
                .find(|&(_, ch)| ch == '+' || ch == '-')
                .map(|(i, _)| i);
            let (term_text, remainder) = match split {
                Some(i) => (&rest[..i], Some(&rest[i..])),
                None => (rest, None),
            };
            let (mono, coeff) = parse_term(term_text.trim(), n)?;
            let coeff = if sign_neg { -coeff } else { coeff };
            raw.push((mono, coeff));
            match remainder {
                None => break,
                Some(r) => {
                    sign_neg = r.starts_with('-');
                    rest = r[1..].trim_start();
                }
            }
        }
        SparsePolynomial::from_terms(n, raw)
    }
}

fn parse_term(text: &str, n: usize) -> Result<(Monomial, DyadicRational)> {
    if text.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let mut coeff = DyadicRational::one();
    let mut exp = vec![0u16; n];
    for factor in text.split('*') {
        let factor = factor.trim();
        if let Some(body) = factor.strip_prefix('x') {
            let (var_text, pow_text) = match body.split_once('^') {
                Some((v, p)) => (v, Some(p)),
                None => (body, None),
            };
            let var: usize = var_text
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable {factor:?}")))?;
            if var == 0 || var > n {
                return Err(Error::Parse(format!("variable x{var} outside alphabet of size {n}")));
            }
            let pow: u16 = match pow_text {
                None => 1,
                Some(p) => p
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
            };
            exp[var - 1] += pow;
        } else {
            coeff = &coeff * &DyadicRational::parse(factor)?;
        }
    }
    Ok((Monomial(exp), coeff))
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_plain_string())
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        let terms: BTreeMap<_, _> = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        SparsePolynomial { n: self.n, terms }
    }
}

impl Neg for SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        -&self
    }
}

impl Add for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn add(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        self.checked_add(rhs).expect("polynomial addition failed")
    }
}

impl Sub for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn sub(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        self.checked_sub(rhs).expect("polynomial subtraction failed")
    }
}

impl Mul for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn mul(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        self.checked_mul(rhs).expect("polynomial multiplication failed")
    }
}

#[derive(Serialize, Deserialize)]
struct CoeffRepr {
    m: String,
    e: i64,
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    coeff: CoeffRepr,
    exp: Vec<u16>,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    n: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for SparsePolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| TermRepr {
                coeff: CoeffRepr { m: c.mantissa().to_string(), e: c.exponent() },
                exp: m.0.clone(),
            })
            .collect();
        PolyRepr { n: self.n, terms }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SparsePolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(deserializer)?;
        let mut raw = Vec::with_capacity(repr.terms.len());
        for t in repr.terms {
            if t.exp.len() != repr.n {
                return Err(D::Error::custom("exponent vector length differs from n"));
            }
            let m: BigInt = t
                .coeff
                .m
                .parse()
                .map_err(|_| D::Error::custom("bad mantissa"))?;
            raw.push((Monomial(t.exp), DyadicRational::new(m, t.coeff.e)));
        }
        SparsePolynomial::from_terms(repr.n, raw).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{GroupType, SignedPermutation};

    fn dy(m: i64) -> DyadicRational {
        DyadicRational::from_integer(m)
    }

    fn x(n: usize, var: usize) -> SparsePolynomial {
        SparsePolynomial::variable(n, var)
    }

    #[test]
    fn grevlex_order() {
        // degree first
        assert!(Monomial(vec![2, 0]) > Monomial(vec![1, 0]));
        // x1 > x2 at equal degree
        assert!(Monomial(vec![1, 0]) > Monomial(vec![0, 1]));
        // x1*x3 vs x2^2 at degree 2 in 3 variables: last difference is x3
        assert!(Monomial(vec![0, 2, 0]) > Monomial(vec![1, 0, 1]));
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let n = 2;
        let f = &x(n, 0) + &x(n, 1);
        let g = &x(n, 0) - &x(n, 1);
        let prod = &f * &g;
        let expect = &(&x(n, 0) * &x(n, 0)) - &(&x(n, 1) * &x(n, 1));
        assert_eq!(prod, expect);
        assert!((&f - &f).is_zero());
        let quarter = SparsePolynomial::monomial(n, &[2, 0], DyadicRational::new(1.into(), -2));
        assert_eq!(quarter.to_plain_string(), "1/2^2*x1^2");
    }

    #[test]
    fn exact_division() {
        let n = 2;
        // (x1^2*x2 - x1*x2^2) / (x1 - x2) = x1*x2
        let f = SparsePolynomial::from_terms(
            n,
            vec![
                (Monomial(vec![2, 1]), dy(1)),
                (Monomial(vec![1, 2]), dy(-1)),
            ],
        )
        .unwrap();
        let g = &x(n, 0) - &x(n, 1);
        let q = f.exact_divide(&g).unwrap();
        assert_eq!(q, SparsePolynomial::monomial(n, &[1, 1], dy(1)));
        // x1 is not divisible by x1 - x2
        assert_eq!(x(n, 0).exact_divide(&g), Err(Error::NonDivisible));
        // dividing by zero is an error
        assert_eq!(
            x(n, 0).exact_divide(&SparsePolynomial::zero(n)),
            Err(Error::DivisionByZero)
        );
        // round trip on a denser example
        let h = &(&f * &f) + &f;
        let q2 = (&h * &g).exact_divide(&g).unwrap();
        assert_eq!(q2, h);
    }

    #[test]
    fn action_of_generators() {
        let n = 2;
        let s0 = SignedPermutation::simple_zero(n).unwrap();
        let sh = SignedPermutation::simple_heart(n).unwrap();
        let s1 = SignedPermutation::simple(n, 1).unwrap();
        // x1 * s0 = -x1
        assert_eq!(x(n, 0).act(&s0).unwrap(), -&x(n, 0));
        // x1 * s_heart = -x2
        assert_eq!(x(n, 0).act(&sh).unwrap(), -&x(n, 1));
        // x2 * s_heart = -x1
        assert_eq!(x(n, 1).act(&sh).unwrap(), -&x(n, 0));
        // x1 * s1 = x2
        assert_eq!(x(n, 0).act(&s1).unwrap(), x(n, 1));
    }

    #[test]
    fn action_is_multiplicative() {
        // (f^u)^v = f^(uv) on a composite example in B_3
        let n = 3;
        let f = &(&x(n, 0) + &(&x(n, 1) * &x(n, 1))) * &(&x(n, 2) + &SparsePolynomial::one(n));
        let u = SignedPermutation::from_image(vec![2, -3, 1]).unwrap();
        let v = SignedPermutation::from_image(vec![-1, 3, 2]).unwrap();
        let uv = u.compose(&v);
        assert_eq!(f.act(&u).unwrap().act(&v).unwrap(), f.act(&uv).unwrap());
        // inverse action restores the original
        assert_eq!(f.act(&u).unwrap().act(&u.inverse()).unwrap(), f);
        let _ = GroupType::B;
    }

    #[test]
    fn substitution_helpers() {
        let n = 3;
        let f = &(&x(n, 0) * &x(n, 1)) + &x(n, 2);
        assert_eq!(f.substituted_zero(2), &x(n, 0) * &x(n, 1));
        assert_eq!(f.swapped_vars(0, 2), &(&x(n, 2) * &x(n, 1)) + &x(n, 0));
        assert_eq!(f.negated_var(0), &(-&(&x(n, 0) * &x(n, 1))) + &x(n, 2));
        let g = f.swapped_negated_vars(0, 1);
        assert_eq!(g, &(&x(n, 0) * &x(n, 1)) + &x(n, 2));
    }

    #[test]
    fn embedding() {
        let f = &x(2, 0) + &x(2, 1);
        let g = f.embedded(4, 2).unwrap();
        assert_eq!(g, &x(4, 2) + &x(4, 3));
        assert_eq!(f.extended(3).unwrap().restricted(2).unwrap(), f);
        assert!(g.restricted(2).is_err());
    }

    #[test]
    fn plain_round_trip() {
        let n = 3;
        let f = SparsePolynomial::from_terms(
            n,
            vec![
                (Monomial(vec![2, 1, 0]), dy(3)),
                (Monomial(vec![0, 0, 1]), DyadicRational::new((-5).into(), -2)),
                (Monomial(vec![0, 0, 0]), dy(1)),
            ],
        )
        .unwrap();
        let text = f.to_plain_string();
        assert_eq!(text, "3*x1^2*x2 - 5/2^2*x3 + 1");
        assert_eq!(SparsePolynomial::parse(&text, n).unwrap(), f);
        assert_eq!(SparsePolynomial::parse("0", n).unwrap(), SparsePolynomial::zero(n));
    }

    #[test]
    fn json_round_trip() {
        let n = 2;
        let f = SparsePolynomial::from_terms(
            n,
            vec![
                (Monomial(vec![1, 0]), DyadicRational::new(3.into(), -1)),
                (Monomial(vec![0, 2]), dy(-4)),
            ],
        )
        .unwrap();
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(
            json,
            r#"{"n":2,"terms":[{"coeff":{"m":"-1","e":2},"exp":[0,2]},{"coeff":{"m":"3","e":-1},"exp":[1,0]}]}"#
        );
        let back: SparsePolynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn term_limit_guard() {
        let old = set_max_terms(2);
        let n = 1;
        let f = SparsePolynomial::parse("x1^2 + x1 + 1", n);
        assert!(matches!(f, Err(Error::TermLimit(3, 2))));
        set_max_terms(old);
        assert!(SparsePolynomial::parse("x1^2 + x1 + 1", n).is_ok());
    }
}
