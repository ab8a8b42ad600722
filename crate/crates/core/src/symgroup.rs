//! Permutations of `{1..n}`: lengths, reduced words, Bruhat and left orders,
//! and the shift embeddings `S_m -> S_n`.
//!
//! Permutations are stored in one-line form with 0-based values. Products
//! compose right to left: `(x * y)(i) = x(y(i))`, so the word
//! `a_1 a_2 ... a_k` evaluates to `s_{a_1} s_{a_2} ... s_{a_k}`.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Which reduced word is chosen as the preferred expression of a permutation.
///
/// Both choices are built greedily from the left (a left descent first, then
/// the preferred word of the remainder), which is what the Specht engine
/// relies on.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WordConvention {
    /// Lexicographically smallest reduced word.
    #[default]
    LexMin,
    /// Lexicographically largest reduced word.
    LexMax,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n as u8).collect())
    }

    /// From one-line notation with 1-based values.
    pub fn from_one_line(w: &[usize]) -> Option<Self> {
        let n = w.len();
        let mut seen = vec![false; n];
        for &x in w {
            if x == 0 || x > n || seen[x - 1] {
                return None;
            }
            seen[x - 1] = true;
        }
        Some(Permutation(w.iter().map(|&x| (x - 1) as u8).collect()))
    }

    /// One-line notation with 1-based values.
    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] as usize + 1
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.0
    }

    pub(crate) fn from_raw(v: Vec<u8>) -> Self {
        Permutation(v)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.n()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation(inv)
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        let mut l = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    l += 1;
                }
            }
        }
        l
    }

    /// `s_a * self` (1-based generator index).
    pub fn left_mul_s(&self, a: usize) -> Self {
        let mut w = self.0.clone();
        let (x, y) = ((a - 1) as u8, a as u8);
        for v in w.iter_mut() {
            if *v == x {
                *v = y;
            } else if *v == y {
                *v = x;
            }
        }
        Permutation(w)
    }

    /// `self * s_r`.
    pub fn right_mul_s(&self, r: usize) -> Self {
        let mut w = self.0.clone();
        w.swap(r - 1, r);
        w.into()
    }

    /// `l(s_a w) < l(w)`, equivalently `w^{-1}(a) > w^{-1}(a+1)`.
    pub fn is_left_descent(&self, a: usize) -> bool {
        let pa = self.0.iter().position(|&x| x as usize == a - 1).unwrap();
        let pb = self.0.iter().position(|&x| x as usize == a).unwrap();
        pa > pb
    }

    /// `l(w s_r) < l(w)`, equivalently `w(r) > w(r+1)`.
    pub fn is_right_descent(&self, r: usize) -> bool {
        self.0[r - 1] > self.0[r]
    }

    pub fn left_descents(&self) -> Vec<usize> {
        let inv = self.inverse();
        (1..self.n()).filter(|&a| inv.0[a - 1] > inv.0[a]).collect()
    }

    /// The preferred reduced word under the given convention.
    pub fn reduced_word(&self, conv: WordConvention) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut inv = self.inverse();
        loop {
            let desc = (1..inv.n()).filter(|&a| inv.0[a - 1] > inv.0[a]);
            let a = match conv {
                WordConvention::LexMin => desc.min(),
                WordConvention::LexMax => desc.max(),
            };
            let Some(a) = a else { break };
            word.push(a);
            // s_a w has inverse w^{-1} s_a.
            inv.0.swap(a - 1, a);
        }
        word
    }

    /// Lexicographically smallest reduced word.
    pub fn canonical_reduced_word(&self) -> Vec<usize> {
        self.reduced_word(WordConvention::LexMin)
    }

    /// Evaluates `s_{a_1} ... s_{a_k}` in `S_n`.
    pub fn from_word(n: usize, word: &[usize]) -> Self {
        let mut w = Permutation::identity(n);
        for &a in word.iter().rev() {
            w = w.left_mul_s(a);
        }
        w
    }

    /// Bruhat order `self <= w` by the rank-matrix criterion.
    pub fn bruhat_leq(&self, w: &Permutation) -> bool {
        let n = self.n();
        assert_eq!(n, w.n(), "Bruhat comparison needs equal degrees");
        if self.length() > w.length() {
            return false;
        }
        // Compare #{k <= i : x(k) >= j} for all i, j.
        for j in 0..n {
            let (mut cx, mut cw) = (0usize, 0usize);
            for i in 0..n {
                if self.0[i] as usize >= j {
                    cx += 1;
                }
                if w.0[i] as usize >= j {
                    cw += 1;
                }
                if cx > cw {
                    return false;
                }
            }
        }
        true
    }

    /// Left order: `l(w) = l(w x^{-1}) + l(x)`.
    pub fn left_order_leq(&self, w: &Permutation) -> bool {
        w.length() == w.compose(&self.inverse()).length() + self.length()
    }

    /// Image of `self in S_m` under `s_i -> s_{i+k}` in `S_n`.
    pub fn shift(&self, k: usize, n: usize) -> Self {
        assert!(k + self.n() <= n, "shift out of range");
        let mut w: Vec<u8> = (0..n as u8).collect();
        for (i, &x) in self.0.iter().enumerate() {
            w[i + k] = x + k as u8;
        }
        Permutation(w)
    }
}

impl From<Vec<u8>> for Permutation {
    fn from(v: Vec<u8>) -> Self {
        Permutation(v)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.one_line().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

/// All permutations of `S_n` in lexicographic order of one-line form.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (0..n as u8).collect();
    loop {
        out.push(Permutation(cur.clone()));
        // Next permutation in lexicographic order.
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn longest_element_of_s3() {
        let w = Permutation::from_one_line(&[3, 2, 1]).unwrap();
        assert_eq!(w.length(), 3);
        assert_eq!(w.canonical_reduced_word(), vec![1, 2, 1]);
        assert_eq!(w.reduced_word(WordConvention::LexMax), vec![2, 1, 2]);
    }

    #[test]
    fn identity_has_empty_word() {
        let id = Permutation::identity(4);
        assert_eq!(id.length(), 0);
        assert!(id.canonical_reduced_word().is_empty());
    }

    #[test]
    fn word_round_trip() {
        for w in all_permutations(5) {
            for conv in [WordConvention::LexMin, WordConvention::LexMax] {
                let word = w.reduced_word(conv);
                assert_eq!(word.len(), w.length());
                assert_eq!(Permutation::from_word(5, &word), w);
            }
        }
    }

    #[test]
    fn bruhat_small_cases() {
        let s1 = Permutation::from_word(3, &[1]);
        let s2 = Permutation::from_word(3, &[2]);
        let w0 = Permutation::from_word(3, &[1, 2, 1]);
        assert!(s1.bruhat_leq(&w0));
        assert!(!s2.bruhat_leq(&s1));
        assert!(Permutation::identity(3).bruhat_leq(&s2));
    }

    #[test]
    fn shift_embeds() {
        let s1 = Permutation::from_word(2, &[1]);
        assert_eq!(s1.shift(2, 5), Permutation::from_word(5, &[3]));
        assert_eq!(s1.shift(0, 5), Permutation::from_word(5, &[1]));
    }
}
