//! Formal words in the KLR generators `e(i)`, `y_r`, `psi_r` with integer
//! coefficients: degrees, the anti-automorphism `tau`, the sign twist, shift
//! maps and column Garnir elements.
//!
//! A word `g_1 g_2 ... g_k` is a product in the written order, so acting on a
//! vector applies `g_k` first. Integer coefficients suffice for everything the
//! presentation needs; the module action maps them into the chosen field.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::config::{AlgebraConfig, QuantumChar, Residue};
use crate::error::{invalid, Result};
use crate::partition::{Multipartition, Node};
use crate::symgroup::Permutation;
use crate::tableau::Tableau;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    /// `e(i)` for a full residue sequence.
    Idem(Vec<Residue>),
    /// The shifted idempotent `e(i)^{+k}`: the sum of all `e(j)` whose entries
    /// `k+1 .. k+len(i)` spell `i`.
    IdemPattern { offset: usize, pattern: Vec<Residue> },
    Y(usize),
    Psi(usize),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Idem(i) => write!(f, "e({i:?})"),
            Generator::IdemPattern { offset, pattern } => write!(f, "e({pattern:?})^+{offset}"),
            Generator::Y(r) => write!(f, "y{r}"),
            Generator::Psi(r) => write!(f, "psi{r}"),
        }
    }
}

/// A word in the generators.
pub type Word = Vec<Generator>;

/// The word `psi_{a_1} ... psi_{a_k}`.
pub fn psi_word(indices: &[usize]) -> Word {
    indices.iter().map(|&a| Generator::Psi(a)).collect()
}

/// A finite integer combination of words, acting on modules for `H_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraElement {
    pub n: usize,
    terms: BTreeMap<Word, i64>,
}

impl AlgebraElement {
    pub fn zero(n: usize) -> Self {
        AlgebraElement { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::from_word(n, Vec::new())
    }

    pub fn from_word(n: usize, w: Word) -> Self {
        Self::from_terms(n, [(w, 1)])
    }

    pub fn y(n: usize, r: usize) -> Self {
        Self::from_word(n, vec![Generator::Y(r)])
    }

    pub fn psi(n: usize, r: usize) -> Self {
        Self::from_word(n, vec![Generator::Psi(r)])
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Word, i64)>) -> Self {
        let mut out = Self::zero(n);
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    }

    pub fn add_term(&mut self, w: Word, c: i64) {
        let entry = self.terms.entry(w).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, i64)> {
        self.terms.iter().map(|(w, c)| (w, *c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &AlgebraElement) -> Self {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_terms(self.n, self.terms().map(|(w, c)| (w.clone(), c * k)))
    }

    /// The product `self * other`.
    pub fn mul(&self, other: &AlgebraElement) -> Self {
        let mut out = Self::zero(self.n.max(other.n));
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                let mut w = a.clone();
                w.extend(b.iter().cloned());
                out.add_term(w, x * y);
            }
        }
        out
    }

    /// The anti-automorphism fixing every generator: reverses all words.
    pub fn tau(&self) -> Self {
        Self::from_terms(self.n, self.terms().map(|(w, c)| (w.iter().rev().cloned().collect(), c)))
    }

    /// `e(i) -> e(-i)`, `y_r -> -y_r`, `psi_r -> -psi_r`.
    pub fn sgn(&self, cfg: &AlgebraConfig) -> Self {
        Self::from_terms(
            self.n,
            self.terms().map(|(w, c)| {
                let mut sign = 1;
                let word = w
                    .iter()
                    .map(|g| match g {
                        Generator::Idem(i) => Generator::Idem(i.iter().map(|&x| cfg.neg(x)).collect()),
                        Generator::IdemPattern { offset, pattern } => Generator::IdemPattern {
                            offset: *offset,
                            pattern: pattern.iter().map(|&x| cfg.neg(x)).collect(),
                        },
                        other => {
                            sign = -sign;
                            other.clone()
                        }
                    })
                    .collect();
                (word, c * sign)
            }),
        )
    }

    /// The shift map into `H_{target}`: indices move up by `k` and each
    /// `e(i)` becomes `e(i)^{+k}`.
    pub fn shift(&self, k: usize, target: usize) -> Self {
        assert!(self.n + k <= target, "shift out of range");
        Self::from_terms(
            target,
            self.terms().map(|(w, c)| {
                let word = w
                    .iter()
                    .map(|g| match g {
                        Generator::Idem(i) => Generator::IdemPattern { offset: k, pattern: i.clone() },
                        Generator::IdemPattern { offset, pattern } => {
                            Generator::IdemPattern { offset: offset + k, pattern: pattern.clone() }
                        }
                        Generator::Y(r) => Generator::Y(r + k),
                        Generator::Psi(r) => Generator::Psi(r + k),
                    })
                    .collect();
                (word, c)
            }),
        )
    }

    /// The set of `psi` indices occurring in any term.
    pub fn psi_support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self
            .terms
            .keys()
            .flatten()
            .filter_map(|g| if let Generator::Psi(r) = g { Some(*r) } else { None })
            .collect();
        s.sort_unstable();
        s.dedup();
        s
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(w, c)| {
                let body = if w.is_empty() {
                    "1".to_string()
                } else {
                    w.iter().map(|g| g.to_string()).collect::<Vec<_>>().join("*")
                };
                if c == 1 {
                    body
                } else {
                    format!("{c}*{body}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The degree of `word` acting on a vector with residue sequence `seed`, or
/// `None` when an idempotent in the word kills it.
pub fn word_degree(word: &[Generator], seed: &[Residue], cfg: &AlgebraConfig) -> Option<i64> {
    let mut i = seed.to_vec();
    let mut deg = 0;
    for g in word.iter().rev() {
        match g {
            Generator::Idem(j) => {
                if *j != i {
                    return None;
                }
            }
            Generator::IdemPattern { offset, pattern } => {
                if i.get(*offset..offset + pattern.len()) != Some(pattern.as_slice()) {
                    return None;
                }
            }
            Generator::Y(_) => deg += 2,
            Generator::Psi(r) => {
                deg -= cfg.cartan(i[r - 1], i[*r]);
                i.swap(r - 1, *r);
            }
        }
    }
    Some(deg)
}

/// The residue sequence after applying `word` to a vector of residue `seed`.
pub fn word_residue(word: &[Generator], seed: &[Residue]) -> Vec<Residue> {
    let mut i = seed.to_vec();
    for g in word.iter().rev() {
        if let Generator::Psi(r) = g {
            i.swap(r - 1, *r);
        }
    }
    i
}

/// `psi_t` (column, `w_t`) as a word from the canonical reduced expression.
pub fn word_of_tableau_col(t: &Tableau) -> Word {
    psi_word(&t.perm_col().canonical_reduced_word())
}

/// `psi^t` (row, `w^t`) as a word from the canonical reduced expression.
pub fn word_of_tableau_row(t: &Tableau) -> Word {
    psi_word(&t.perm_row().canonical_reduced_word())
}

/// The choices left open when reconstructing the general column Garnir
/// element `g_A = sum_{u in D} tau_u psi^{T_A}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GarnirVariant {
    /// When true the bricks of the lower part of column `c` take the first
    /// brick values in `T_A`; otherwise `T_A` is the Garnir tableau itself.
    pub lower_bricks_first: bool,
    /// Coset representatives: minimal in their left cosets (`u W_J`) when
    /// false, in their right cosets (`W_J u`) when true.
    pub right_cosets: bool,
    /// `tau_r = sign * psi_{w_r} + constant`; a sign of 0 means `(-1)^e`.
    pub sign: i64,
    pub constant: i64,
}

impl Default for GarnirVariant {
    fn default() -> Self {
        GarnirVariant { lower_bricks_first: true, right_cosets: false, sign: 1, constant: 1 }
    }
}

impl GarnirVariant {
    /// Every combination, the default first.
    pub fn all() -> Vec<GarnirVariant> {
        let mut out = vec![GarnirVariant::default()];
        for lower_bricks_first in [true, false] {
            for right_cosets in [false, true] {
                for sign in [1, -1, 0] {
                    for constant in [1, -1] {
                        let v = GarnirVariant { lower_bricks_first, right_cosets, sign, constant };
                        if !out.contains(&v) {
                            out.push(v);
                        }
                    }
                }
            }
        }
        out
    }
}

/// The belt data of a column Garnir node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GarnirBelt {
    /// First and last entries of the belt in `t_lambda`.
    pub a: usize,
    pub b: usize,
    /// Number of bricks in the lower part of column `c` and in the upper part of column `c + 1`.
    pub k: usize,
    pub f: usize,
    /// The tableau `T_A` whose `psi` word heads the Garnir element.
    pub t_a: Tableau,
    /// Smallest brick entry of `T_A`.
    pub brick_start: usize,
}

/// Column Garnir nodes of `lambda`: nodes `(r, c, m)` with `(r, c+1, m)` in `lambda`.
pub fn column_garnir_nodes(lambda: &Multipartition) -> Vec<Node> {
    lambda
        .nodes()
        .into_iter()
        .filter(|a| lambda.contains(&Node::new(a.r, a.c + 1, a.m)))
        .collect()
}

/// Builds the Garnir tableau and brick data for the node `a`.
pub fn garnir_belt(lambda: &Multipartition, node: &Node, cfg: &AlgebraConfig, variant: GarnirVariant) -> Result<GarnirBelt> {
    let (r, c, m) = (node.r, node.c, node.m);
    if !lambda.contains(node) || !lambda.contains(&Node::new(r, c + 1, m)) {
        return invalid(format!("{node} is not a column Garnir node of {lambda}"));
    }
    let tl = Tableau::t_col(lambda);
    let a = tl.entry(node);
    let b = tl.entry(&Node::new(r, c + 1, m));
    let len_c = lambda.col_len(m, c);
    let (k, f) = match cfg.e {
        QuantumChar::Finite(e) => ((len_c - r + 1) / e as usize, r / e as usize),
        QuantumChar::Infinite => (0, 0),
    };
    let e = match cfg.e {
        QuantumChar::Finite(e) => e as usize,
        QuantumChar::Infinite => 0,
    };
    // Garnir tableau: upper part of column c+1 gets a.., then the lower part of column c.
    let brick_start = a + r - f * e;
    let t_a = Tableau::from_fn(lambda, |x| {
        if x.m == m && x.c == c + 1 && x.r <= r {
            let g = a + x.r - 1;
            if variant.lower_bricks_first && x.r > r - f * e {
                // Upper bricks move after the lower bricks.
                g + k * e
            } else {
                g
            }
        } else if x.m == m && x.c == c && x.r >= r {
            let g = a + r + (x.r - r);
            if variant.lower_bricks_first && x.r < r + k * e {
                g - f * e
            } else {
                g
            }
        } else {
            tl.entry(x)
        }
    });
    Ok(GarnirBelt { a, b, k, f, t_a, brick_start })
}

/// The column Garnir element `g_A` for the node `a`, idempotent omitted.
pub fn garnir_element_column(lambda: &Multipartition, node: &Node, cfg: &AlgebraConfig) -> Result<AlgebraElement> {
    garnir_element_variant(lambda, node, cfg, GarnirVariant::default())
}

pub fn garnir_element_variant(
    lambda: &Multipartition,
    node: &Node,
    cfg: &AlgebraConfig,
    variant: GarnirVariant,
) -> Result<AlgebraElement> {
    let n = lambda.size();
    let belt = garnir_belt(lambda, node, cfg, variant)?;
    let head = AlgebraElement::from_word(n, word_of_tableau_col(&belt.t_a));
    let bricks = belt.k + belt.f;
    if bricks <= 1 {
        return Ok(head);
    }
    let e = match cfg.e {
        QuantumChar::Finite(e) => e as usize,
        QuantumChar::Infinite => unreachable!("no bricks when e is infinite"),
    };
    let sign = if variant.sign == 0 { if e % 2 == 0 { 1 } else { -1 } } else { variant.sign };
    // tau_j for the brick transpositions j = 1 .. bricks-1.
    let taus: Vec<AlgebraElement> = (1..bricks)
        .map(|j| {
            let lo = belt.brick_start + (j - 1) * e;
            let mut w: Vec<usize> = (1..=n).collect();
            for x in lo..lo + e {
                w[x - 1] = x + e;
                w[x + e - 1] = x;
            }
            let perm = Permutation::from_one_line(&w).expect("block swap is a permutation");
            let sigma = AlgebraElement::from_word(n, psi_word(&perm.canonical_reduced_word()));
            sigma.scale(sign).add(&AlgebraElement::one(n).scale(variant.constant))
        })
        .collect();
    // The first brick group in value order is the one placed first in T_A.
    let first = if variant.lower_bricks_first { belt.k } else { belt.f };
    let mut total = AlgebraElement::zero(n);
    for u in crate::symgroup::all_permutations(bricks) {
        let keep = if variant.right_cosets { u.inverse() } else { u.clone() };
        let minimal = (1..bricks).filter(|&i| i != first).all(|i| !keep.is_right_descent(i));
        if !minimal {
            continue;
        }
        let mut tau_u = AlgebraElement::one(n);
        for j in u.canonical_reduced_word() {
            tau_u = tau_u.mul(&taus[j - 1]);
        }
        total = total.add(&tau_u);
    }
    Ok(total.mul(&head))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn degrees_of_generators() {
        let cfg = AlgebraConfig::finite(3, &[0]);
        assert_eq!(word_degree(&[Generator::Idem(vec![0, 1])], &[0, 1], &cfg), Some(0));
        assert_eq!(word_degree(&[Generator::Y(1)], &[0, 1], &cfg), Some(2));
        assert_eq!(word_degree(&[Generator::Psi(1)], &[0, 0], &cfg), Some(-2));
        assert_eq!(word_degree(&[Generator::Psi(1)], &[0, 1], &cfg), Some(1));
        let cfg2 = AlgebraConfig::finite(2, &[0]);
        assert_eq!(word_degree(&[Generator::Psi(1)], &[0, 1], &cfg2), Some(2));
        let cfg5 = AlgebraConfig::finite(5, &[0]);
        assert_eq!(word_degree(&[Generator::Psi(1)], &[0, 2], &cfg5), Some(0));
    }

    #[test]
    fn tau_and_sgn_are_involutions() {
        let cfg = AlgebraConfig::finite(3, &[0]);
        let x = AlgebraElement::from_terms(3, [(psi_word(&[1, 2]), 2), (vec![Generator::Y(1), Generator::Idem(vec![1, 2, 0])], -1)]);
        assert_eq!(x.tau().tau(), x);
        assert_eq!(x.sgn(&cfg).sgn(&cfg), x);
        assert_eq!(AlgebraElement::from_word(3, psi_word(&[1, 2])).tau(), AlgebraElement::from_word(3, psi_word(&[2, 1])));
        let e = AlgebraElement::from_word(2, vec![Generator::Idem(vec![1, 2])]);
        assert_eq!(e.sgn(&cfg), AlgebraElement::from_word(2, vec![Generator::Idem(vec![2, 1])]));
        assert_eq!(AlgebraElement::from_word(2, vec![Generator::Y(1)]).sgn(&cfg).terms().next().unwrap().1, -1);
    }

    #[test]
    fn shift_moves_indices() {
        let x = AlgebraElement::from_word(2, psi_word(&[1]));
        assert_eq!(x.shift(2, 5), AlgebraElement::from_word(5, psi_word(&[3])));
        assert_eq!(x.shift(0, 5), AlgebraElement::from_word(5, psi_word(&[1])));
    }

    #[test]
    fn garnir_special_case() {
        let cfg = AlgebraConfig::finite(3, &[0]);
        let g = garnir_element_column(&mp("2"), &Node::new(1, 1, 1), &cfg).unwrap();
        assert_eq!(g, AlgebraElement::from_word(2, psi_word(&[1])));
        let g = garnir_element_column(&mp("2,1"), &Node::new(1, 1, 1), &cfg).unwrap();
        assert_eq!(g, AlgebraElement::from_word(3, psi_word(&[1, 2])));
        assert!(garnir_element_column(&mp("2,1"), &Node::new(2, 1, 1), &cfg).is_err());
    }

    #[test]
    fn garnir_support_lies_in_the_belt() {
        let lam = mp("3,3,2,2,1|2,1");
        for e in [2, 3, 4] {
            let cfg = AlgebraConfig::finite(e, &[0, 0]);
            let g = garnir_element_column(&lam, &Node::new(3, 1, 1), &cfg).unwrap();
            assert!(g.psi_support().iter().all(|&r| (6..=10).contains(&r)), "e={e}: {g}");
        }
    }
}
