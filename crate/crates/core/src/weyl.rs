//! Signed permutations and the Weyl groups of types A, B and D.
//!
//! An element is coded by its one-line image vector `[1..n] * w`, with
//! negative entries marking sign changes. The group law matches the right
//! action on vectors: `[1..n]*(uv) = ([1..n]*u)*v`, where the generators act
//! by `[v]s_i = [.., v_{i+1}, v_i, ..]`, `[v]s_0 = [-v_1, v_2, ..]` and
//! `[v]s_heart = [-v_2, -v_1, v_3, ..]`.
//!
//! Membership: type A means no negative entries, type B is unrestricted, and
//! type D requires an even number of negative entries.

use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// Which Weyl group a computation takes place in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupType {
    A,
    B,
    D,
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupType::A => write!(f, "A"),
            GroupType::B => write!(f, "B"),
            GroupType::D => write!(f, "D"),
        }
    }
}

/// A generator name. `S(i)` is the exchange `s_i`; `Zero` is the sign change
/// `s_0`; `Heart` is the type-D generator; `ZeroC` names the operator
/// variant of `s_0` with denominator `2x_1` and is not a group element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Letter {
    Heart,
    Zero,
    ZeroC,
    S(u8),
}

impl Letter {
    /// Position used when choosing the lowest-index descent.
    pub fn index(&self) -> u8 {
        match self {
            Letter::Heart | Letter::Zero | Letter::ZeroC => 0,
            Letter::S(i) => *i,
        }
    }

    pub fn parse(text: &str) -> Result<Letter> {
        match text {
            "h" => Ok(Letter::Heart),
            "0" => Ok(Letter::Zero),
            "0c" => Ok(Letter::ZeroC),
            _ => text
                .parse::<u8>()
                .ok()
                .filter(|&i| i >= 1)
                .map(Letter::S)
                .ok_or_else(|| Error::Parse(format!("bad letter {text:?}"))),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Heart => write!(f, "h"),
            Letter::Zero => write!(f, "0"),
            Letter::ZeroC => write!(f, "0c"),
            Letter::S(i) => write!(f, "{i}"),
        }
    }
}

/// The generators of the given group on `n` letters, lowest index first.
pub fn generators(t: GroupType, n: usize) -> Vec<Letter> {
    let mut gens = Vec::new();
    match t {
        GroupType::A => {}
        GroupType::B => gens.push(Letter::Zero),
        GroupType::D => {
            if n >= 2 {
                gens.push(Letter::Heart);
            }
        }
    }
    for i in 1..n {
        gens.push(Letter::S(i as u8));
    }
    gens
}

/// A signed permutation in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    image: Vec<i32>,
}

impl SignedPermutation {
    /// Validates and wraps a one-line image vector.
    pub fn from_image(image: Vec<i32>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > n || seen[a - 1] {
                return Err(Error::InvalidPermutation(format!("{image:?}")));
            }
            seen[a - 1] = true;
        }
        Ok(SignedPermutation { image })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation { image: (1..=n as i32).collect() }
    }

    /// The exchange `s_i`, `1 <= i <= n-1`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::InvalidLetter(i.to_string(), format!("need 1 <= i < {n}")));
        }
        let mut w = SignedPermutation::identity(n);
        w.image.swap(i - 1, i);
        Ok(w)
    }

    /// The sign change `s_0` on the first letter.
    pub fn simple_zero(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidLetter("0".into(), "empty alphabet".into()));
        }
        let mut w = SignedPermutation::identity(n);
        w.image[0] = -1;
        Ok(w)
    }

    /// The type-D generator `s_heart`.
    pub fn simple_heart(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidLetter("h".into(), "needs n >= 2".into()));
        }
        let mut w = SignedPermutation::identity(n);
        w.image[0] = -2;
        w.image[1] = -1;
        Ok(w)
    }

    /// The group element named by a letter.
    pub fn from_letter(n: usize, letter: Letter) -> Result<Self> {
        match letter {
            Letter::Heart => SignedPermutation::simple_heart(n),
            Letter::Zero => SignedPermutation::simple_zero(n),
            Letter::S(i) => SignedPermutation::simple(n, i as usize),
            Letter::ZeroC => Err(Error::InvalidLetter(
                "0c".into(),
                "an operator name, not a group generator".into(),
            )),
        }
    }

    pub fn size(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[i32] {
        &self.image
    }

    /// The entry at 0-based position `i`.
    pub fn entry(&self, i: usize) -> i32 {
        self.image[i]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| v == i as i32 + 1)
    }

    /// Group product: the image vector of `self * rhs` under the right
    /// action on vectors. Panics when the sizes differ.
    pub fn compose(&self, rhs: &Self) -> Self {
        assert_eq!(self.size(), rhs.size(), "composing different ranks");
        let image = rhs
            .image
            .iter()
            .map(|&v| {
                let target = self.image[v.unsigned_abs() as usize - 1];
                if v < 0 {
                    -target
                } else {
                    target
                }
            })
            .collect();
        SignedPermutation { image }
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0; self.size()];
        for (k, &v) in self.image.iter().enumerate() {
            let a = v.unsigned_abs() as usize - 1;
            image[a] = if v < 0 { -(k as i32 + 1) } else { k as i32 + 1 };
        }
        SignedPermutation { image }
    }

    pub fn negative_count(&self) -> usize {
        self.image.iter().filter(|&&v| v < 0).count()
    }

    pub fn is_member(&self, t: GroupType) -> bool {
        match t {
            GroupType::A => self.negative_count() == 0,
            GroupType::B => true,
            GroupType::D => self.negative_count() % 2 == 0,
        }
    }

    pub fn check_member(&self, t: GroupType) -> Result<()> {
        if !self.is_member(t) {
            return Err(Error::NotInGroup(format!("{self} is not of type {t}")));
        }
        Ok(())
    }

    /// Coxeter length with respect to the standard generators of the group.
    pub fn length(&self, t: GroupType) -> Result<usize> {
        self.check_member(t)?;
        let n = self.size();
        let mut inv = 0usize;
        for i in 0..n {
            for j in i + 1..n {
                if self.image[i] > self.image[j] {
                    inv += 1;
                }
            }
        }
        let extra: usize = match t {
            GroupType::A => 0,
            GroupType::B => self
                .image
                .iter()
                .filter(|&&v| v < 0)
                .map(|&v| v.unsigned_abs() as usize)
                .sum(),
            GroupType::D => self
                .image
                .iter()
                .filter(|&&v| v < 0)
                .map(|&v| v.unsigned_abs() as usize - 1)
                .sum(),
        };
        Ok(inv + extra)
    }

    /// Right multiplication by the generator named by `letter`.
    pub fn apply_letter(&self, letter: Letter) -> Result<Self> {
        let gen = SignedPermutation::from_letter(self.size(), letter)?;
        Ok(self.compose(&gen))
    }

    /// The lexicographically first reduced word, chosen by repeatedly taking
    /// the lowest-index right descent.
    pub fn reduced_word(&self, t: GroupType) -> Result<Vec<Letter>> {
        self.check_member(t)?;
        let n = self.size();
        let mut w = self.clone();
        let mut len = w.length(t)?;
        let mut word = Vec::with_capacity(len);
        'outer: while len > 0 {
            for letter in generators(t, n) {
                let next = w.apply_letter(letter)?;
                let next_len = next.length(t)?;
                if next_len < len {
                    word.push(letter);
                    w = next;
                    len = next_len;
                    continue 'outer;
                }
            }
            unreachable!("a non-identity element always has a right descent");
        }
        word.reverse();
        Ok(word)
    }

    /// Extends the element to a larger rank, fixing the new letters.
    pub fn embedded(&self, new_n: usize) -> Result<Self> {
        if new_n < self.size() {
            return Err(Error::InvalidArgument(format!(
                "cannot embed rank {} into rank {new_n}",
                self.size()
            )));
        }
        let mut image = self.image.clone();
        image.extend(self.size() as i32 + 1..=new_n as i32);
        Ok(SignedPermutation { image })
    }

    /// Lehmer code of a type-A element: `c_i = #{j > i : w_j < w_i}`.
    pub fn code(&self) -> Result<Vec<u32>> {
        self.check_member(GroupType::A)?;
        let n = self.size();
        Ok((0..n)
            .map(|i| (i + 1..n).filter(|&j| self.image[j] < self.image[i]).count() as u32)
            .collect())
    }

    pub fn parse(text: &str) -> Result<Self> {
        let inner = text
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [..] element, got {text:?}")))?;
        let image = inner
            .split(',')
            .map(|p| p.trim().parse::<i32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("bad element {text:?}")))?;
        SignedPermutation::from_image(image)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.image.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Evaluates a word of generator letters to a group element.
pub fn evaluate_word(n: usize, word: &[Letter]) -> Result<SignedPermutation> {
    let mut w = SignedPermutation::identity(n);
    for &letter in word {
        w = w.apply_letter(letter)?;
    }
    Ok(w)
}

/// Lists the whole group in a deterministic order (by length, then by image
/// vector). `bound` protects against accidental huge enumerations.
pub fn enumerate_group(t: GroupType, n: usize, bound: usize) -> Result<Vec<SignedPermutation>> {
    if n > bound {
        return Err(Error::BoundExceeded(n, bound));
    }
    let gens: Vec<SignedPermutation> = generators(t, n)
        .into_iter()
        .map(|l| SignedPermutation::from_letter(n, l))
        .collect::<Result<_>>()?;
    let mut seen: HashSet<Vec<i32>> = HashSet::new();
    let mut queue = vec![SignedPermutation::identity(n)];
    seen.insert(queue[0].image.clone());
    let mut out = Vec::new();
    while let Some(w) = queue.pop() {
        out.push(w.clone());
        for g in &gens {
            let next = w.compose(g);
            if seen.insert(next.image.clone()) {
                queue.push(next);
            }
        }
    }
    let mut keyed: Vec<(usize, SignedPermutation)> = out
        .into_iter()
        .map(|w| (w.length(t).expect("member by construction"), w))
        .collect();
    keyed.sort();
    Ok(keyed.into_iter().map(|(_, w)| w).collect())
}

/// Default enumeration bound.
pub const ENUMERATION_BOUND: usize = 6;

/// The permutation whose Lehmer code is `alpha` (type A, rank
/// `alpha.len()`).
pub fn code_inverse(alpha: &[u32]) -> Result<SignedPermutation> {
    let n = alpha.len();
    let mut remaining: Vec<i32> = (1..=n as i32).collect();
    let mut image = Vec::with_capacity(n);
    for (i, &c) in alpha.iter().enumerate() {
        let c = c as usize;
        if c >= remaining.len() {
            return Err(Error::InvalidArgument(format!(
                "entry {c} at position {i} is too large for a Lehmer code of length {n}"
            )));
        }
        image.push(remaining.remove(c));
    }
    Ok(SignedPermutation { image })
}

/// The complementary code `alpha -> code(w * omega)` where
/// `code(w) = alpha`; an involution on codes contained in the staircase.
pub fn involution_prime(alpha: &[u32]) -> Result<Vec<u32>> {
    let n = alpha.len();
    let w = code_inverse(alpha)?;
    w.compose(&longest_element(GroupType::A, n)).code()
}

/// The longest element: `[n..1]` for A, `[-1..-n]` for B, and for D the
/// all-negative vector when `n` is even, else `[1,-2,..,-n]`.
pub fn longest_element(t: GroupType, n: usize) -> SignedPermutation {
    let image = match t {
        GroupType::A => (1..=n as i32).rev().collect(),
        GroupType::B => (1..=n as i32).map(|v| -v).collect(),
        GroupType::D => {
            if n % 2 == 0 {
                (1..=n as i32).map(|v| -v).collect()
            } else {
                std::iter::once(1)
                    .chain((2..=n as i32).map(|v| -v))
                    .collect()
            }
        }
    };
    SignedPermutation { image }
}

/// The reflection negating the `i`-th coordinate (1-based); `tau(n,1)` is
/// `s_0` and `tau(n,i) = s_{i-1} tau(n,i-1) s_{i-1}`.
pub fn tau(n: usize, i: usize) -> SignedPermutation {
    let image = (1..=n as i32)
        .map(|v| if v == i as i32 { -v } else { v })
        .collect();
    SignedPermutation { image }
}

/// Named elements used throughout: the longest element of each group, and
/// for type D also `upsilon = omega * w0(D)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Distinguished {
    Longest,
    Upsilon,
}

pub fn distinguished(t: GroupType, n: usize, which: Distinguished) -> Result<SignedPermutation> {
    match which {
        Distinguished::Longest => Ok(longest_element(t, n)),
        Distinguished::Upsilon => {
            if t != GroupType::D {
                return Err(Error::InvalidArgument(
                    "upsilon only exists in type D".into(),
                ));
            }
            Ok(longest_element(GroupType::A, n).compose(&longest_element(GroupType::D, n)))
        }
    }
}

/// Collects distinct reduced words (at most `limit`) by exploring every
/// right descent. Deterministic depth-first order.
pub fn reduced_words_up_to(
    w: &SignedPermutation,
    t: GroupType,
    limit: usize,
) -> Result<Vec<Vec<Letter>>> {
    let mut out = Vec::new();
    let len = w.length(t)?;
    let mut stack: Vec<(SignedPermutation, usize, Vec<Letter>)> = vec![(w.clone(), len, Vec::new())];
    while let Some((v, vlen, suffix)) = stack.pop() {
        if out.len() >= limit {
            break;
        }
        if vlen == 0 {
            let mut word = suffix.clone();
            word.reverse();
            out.push(word);
            continue;
        }
        // push in reverse so the lowest-index descent is explored first
        let mut branches = Vec::new();
        for letter in generators(t, v.size()) {
            let next = v.apply_letter(letter)?;
            let next_len = next.length(t)?;
            if next_len < vlen {
                let mut s = suffix.clone();
                s.push(letter);
                branches.push((next, next_len, s));
            }
        }
        while let Some(b) = branches.pop() {
            stack.push(b);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(image: &[i32]) -> SignedPermutation {
        SignedPermutation::from_image(image.to_vec()).unwrap()
    }

    #[test]
    fn construction_and_validation() {
        assert!(SignedPermutation::from_image(vec![2, -1, 3]).is_ok());
        assert!(SignedPermutation::from_image(vec![2, 2]).is_err());
        assert!(SignedPermutation::from_image(vec![0, 1]).is_err());
        assert!(SignedPermutation::from_image(vec![3, 1]).is_err());
        assert_eq!(SignedPermutation::parse("[2,-1,3]").unwrap(), perm(&[2, -1, 3]));
        assert_eq!(perm(&[2, -1, 3]).to_string(), "[2,-1,3]");
    }

    #[test]
    fn composition_matches_vector_action() {
        // s_heart * s_1 = [-1,-2] in D_2
        let sh = SignedPermutation::simple_heart(2).unwrap();
        let s1 = SignedPermutation::simple(2, 1).unwrap();
        assert_eq!(sh.compose(&s1), perm(&[-1, -2]));
        // s_0 s_1 s_0 = s_heart embedded in B_3
        let s0 = SignedPermutation::simple_zero(3).unwrap();
        let s1 = SignedPermutation::simple(3, 1).unwrap();
        let w = s0.compose(&s1).compose(&s0);
        assert_eq!(w, perm(&[-2, -1, 3]));
    }

    #[test]
    fn inverse_works() {
        let u = perm(&[2, -1, 3]);
        assert_eq!(u.inverse(), perm(&[-2, 1, 3]));
        assert!(u.compose(&u.inverse()).is_identity());
        assert!(u.inverse().compose(&u).is_identity());
    }

    #[test]
    fn lengths_of_longest_elements() {
        for n in 1..=5 {
            let omega = longest_element(GroupType::A, n);
            assert_eq!(omega.length(GroupType::A).unwrap(), n * (n - 1) / 2);
            let w0b = longest_element(GroupType::B, n);
            assert_eq!(w0b.length(GroupType::B).unwrap(), n * n);
            let w0d = longest_element(GroupType::D, n);
            assert_eq!(w0d.length(GroupType::D).unwrap(), n * n - n);
        }
    }

    #[test]
    fn membership() {
        assert!(perm(&[2, 1, 3]).is_member(GroupType::A));
        assert!(!perm(&[2, -1, 3]).is_member(GroupType::A));
        assert!(perm(&[-2, -1, 3]).is_member(GroupType::D));
        assert!(!perm(&[-2, 1, 3]).is_member(GroupType::D));
        assert!(perm(&[-2, 1, 3]).length(GroupType::D).is_err());
    }

    #[test]
    fn reduced_words() {
        // greedy lowest-index descents
        let w = perm(&[2, -1]);
        assert_eq!(
            w.reduced_word(GroupType::B).unwrap(),
            vec![Letter::Zero, Letter::S(1)]
        );
        assert_eq!(
            evaluate_word(2, &[Letter::Zero, Letter::S(1)]).unwrap(),
            w
        );
        // s_heart alone
        let sh = SignedPermutation::simple_heart(2).unwrap();
        assert_eq!(sh.reduced_word(GroupType::D).unwrap(), vec![Letter::Heart]);
        // every reduced word evaluates back and has the right length, B_3
        for w in enumerate_group(GroupType::B, 3, 6).unwrap() {
            let word = w.reduced_word(GroupType::B).unwrap();
            assert_eq!(word.len(), w.length(GroupType::B).unwrap());
            assert_eq!(evaluate_word(3, &word).unwrap(), w);
        }
    }

    #[test]
    fn group_cardinalities() {
        let sizes = |t, n| enumerate_group(t, n, 6).unwrap().len();
        assert_eq!(sizes(GroupType::A, 3), 6);
        assert_eq!(sizes(GroupType::A, 4), 24);
        assert_eq!(sizes(GroupType::B, 2), 8);
        assert_eq!(sizes(GroupType::B, 3), 48);
        assert_eq!(sizes(GroupType::D, 2), 4);
        assert_eq!(sizes(GroupType::D, 3), 24);
        assert_eq!(sizes(GroupType::D, 4), 192);
        assert!(matches!(
            enumerate_group(GroupType::B, 7, 6),
            Err(Error::BoundExceeded(7, 6))
        ));
    }

    #[test]
    fn codes() {
        let omega = longest_element(GroupType::A, 3);
        assert_eq!(omega.code().unwrap(), vec![2, 1, 0]);
        assert_eq!(code_inverse(&[1, 0, 0]).unwrap(), perm(&[2, 1, 3]));
        for w in enumerate_group(GroupType::A, 4, 6).unwrap() {
            assert_eq!(code_inverse(&w.code().unwrap()).unwrap(), w);
        }
        assert!(code_inverse(&[3, 0, 0]).is_err());
        // the complementary involution sends the staircase to zero
        assert_eq!(involution_prime(&[2, 1, 0]).unwrap(), vec![0, 0, 0]);
        assert_eq!(involution_prime(&[0, 0, 0]).unwrap(), vec![2, 1, 0]);
        assert_eq!(involution_prime(&[1, 0]).unwrap(), vec![0, 0]);
    }

    #[test]
    fn distinguished_elements() {
        assert_eq!(longest_element(GroupType::D, 2), perm(&[-1, -2]));
        assert_eq!(longest_element(GroupType::D, 3), perm(&[1, -2, -3]));
        assert_eq!(
            distinguished(GroupType::D, 2, Distinguished::Upsilon).unwrap(),
            perm(&[-2, -1])
        );
        assert_eq!(
            distinguished(GroupType::D, 3, Distinguished::Upsilon).unwrap(),
            perm(&[3, -2, -1])
        );
        assert!(distinguished(GroupType::B, 2, Distinguished::Upsilon).is_err());
    }

    #[test]
    fn multiple_reduced_words() {
        let w0 = longest_element(GroupType::B, 2);
        let words = reduced_words_up_to(&w0, GroupType::B, 10).unwrap();
        // w0(B2) = s0 s1 s0 s1 = s1 s0 s1 s0 and mixtures
        assert!(words.len() >= 2);
        for word in &words {
            assert_eq!(word.len(), 4);
            assert_eq!(evaluate_word(2, word).unwrap(), w0);
        }
    }
}
