//! Multipartitions, nodes, dominance, residues, content and defect, and the
//! left/right and top/bottom splittings used by the removal theorems.
//!
//! Components are drawn along a diagonal from top right to bottom left, so a
//! later component lies to the left of, and below, an earlier one.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::config::{AlgebraConfig, Residue};
use crate::error::{Error, Result};

/// A node `(r, c, m)`: row, column and component, all 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub r: usize,
    pub c: usize,
    pub m: usize,
}

impl Node {
    pub fn new(r: usize, c: usize, m: usize) -> Self {
        Node { r, c, m }
    }

    pub fn residue(&self, cfg: &AlgebraConfig) -> Residue {
        cfg.norm(cfg.kappa[self.m - 1] + self.c as i64 - self.r as i64)
    }

    /// Strictly left: later component, or same component and smaller column.
    pub fn left_of(&self, other: &Node) -> bool {
        self.m > other.m || (self.m == other.m && self.c < other.c)
    }

    /// Weakly left (left of or in the same column of the same component).
    pub fn weakly_left_of(&self, other: &Node) -> bool {
        self.m > other.m || (self.m == other.m && self.c <= other.c)
    }

    /// Strictly above: earlier component, or same component and smaller row.
    pub fn above(&self, other: &Node) -> bool {
        self.m < other.m || (self.m == other.m && self.r < other.r)
    }

    pub fn weakly_above(&self, other: &Node) -> bool {
        self.m < other.m || (self.m == other.m && self.r <= other.r)
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.r, self.c, self.m)
    }
}

/// A multiset of residues: the root `sum_i c_i alpha_i`.
pub type RootContent = BTreeMap<Residue, usize>;

/// An `l`-multipartition. Components are trimmed of trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Multipartition {
    comps: Vec<Vec<usize>>,
}

impl Multipartition {
    /// Builds a multipartition, rejecting increasing parts.
    pub fn new(comps: Vec<Vec<usize>>) -> Result<Self> {
        if comps.is_empty() {
            return Err(Error::InvalidInput("a multipartition needs at least one component".into()));
        }
        let mut out = Vec::with_capacity(comps.len());
        for mut p in comps {
            while p.last() == Some(&0) {
                p.pop();
            }
            if p.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidInput(format!("component {p:?} is not weakly decreasing")));
            }
            if p.contains(&0) {
                return Err(Error::InvalidInput(format!("component {p:?} has an interior zero")));
            }
            out.push(p);
        }
        Ok(Multipartition { comps: out })
    }

    /// Convenience constructor for literals known to be valid.
    pub fn from_parts(comps: &[&[usize]]) -> Self {
        Self::new(comps.iter().map(|c| c.to_vec()).collect()).expect("valid multipartition")
    }

    pub fn empty(level: usize) -> Self {
        Multipartition { comps: vec![Vec::new(); level] }
    }

    pub fn level(&self) -> usize {
        self.comps.len()
    }

    pub fn size(&self) -> usize {
        self.comps.iter().flatten().sum()
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.comps
    }

    /// The component `m` (1-based).
    pub fn comp(&self, m: usize) -> &[usize] {
        &self.comps[m - 1]
    }

    /// Row length `lambda^(m)_r`, zero beyond the last row.
    pub fn row_len(&self, m: usize, r: usize) -> usize {
        self.comps[m - 1].get(r - 1).copied().unwrap_or(0)
    }

    /// Column length `(lambda^(m))'_c`.
    pub fn col_len(&self, m: usize, c: usize) -> usize {
        self.comps[m - 1].iter().take_while(|&&x| x >= c).count()
    }

    pub fn contains(&self, node: &Node) -> bool {
        node.m >= 1 && node.m <= self.level() && node.r >= 1 && node.c >= 1 && node.c <= self.row_len(node.m, node.r)
    }

    /// All nodes, component by component, row by row.
    pub fn nodes(&self) -> Vec<Node> {
        let mut out = Vec::with_capacity(self.size());
        for (mi, p) in self.comps.iter().enumerate() {
            for (ri, &len) in p.iter().enumerate() {
                for c in 1..=len {
                    out.push(Node::new(ri + 1, c, mi + 1));
                }
            }
        }
        out
    }

    /// Conjugate `(lambda^(l)', ..., lambda^(1)')`.
    pub fn conjugate(&self) -> Self {
        let comps = self.comps.iter().rev().map(|p| conjugate_partition(p)).collect();
        Multipartition { comps }
    }

    /// Dominance order on multipartitions of the same size and level.
    pub fn dominates(&self, other: &Multipartition) -> Result<bool> {
        if self.level() != other.level() || self.size() != other.size() {
            return Err(Error::InvalidInput(format!(
                "dominance needs equal size and level: {self} vs {other}"
            )));
        }
        Ok(composition_dominates(&self.comps, &other.comps))
    }

    pub fn removable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (mi, p) in self.comps.iter().enumerate() {
            for (ri, &len) in p.iter().enumerate() {
                let next = p.get(ri + 1).copied().unwrap_or(0);
                if len > next {
                    out.push(Node::new(ri + 1, len, mi + 1));
                }
            }
        }
        out
    }

    pub fn addable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (mi, p) in self.comps.iter().enumerate() {
            for ri in 0..=p.len() {
                let len = p.get(ri).copied().unwrap_or(0);
                let prev = if ri == 0 { usize::MAX } else { p[ri - 1] };
                if len < prev {
                    out.push(Node::new(ri + 1, len + 1, mi + 1));
                }
            }
        }
        out
    }

    /// Removes a removable node.
    pub fn remove(&self, node: &Node) -> Self {
        let mut comps = self.comps.clone();
        let p = &mut comps[node.m - 1];
        p[node.r - 1] -= 1;
        if p[node.r - 1] == 0 {
            p.truncate(node.r - 1);
        }
        Multipartition { comps }
    }

    /// Adds an addable node.
    pub fn add(&self, node: &Node) -> Self {
        let mut comps = self.comps.clone();
        let p = &mut comps[node.m - 1];
        if node.r > p.len() {
            p.push(1);
        } else {
            p[node.r - 1] += 1;
        }
        Multipartition { comps }
    }

    pub fn content(&self, cfg: &AlgebraConfig) -> RootContent {
        let mut out = RootContent::new();
        for node in self.nodes() {
            *out.entry(node.residue(cfg)).or_insert(0) += 1;
        }
        out
    }

    /// Defect `(Lambda_kappa | alpha) - (alpha | alpha) / 2` of the content.
    pub fn defect(&self, cfg: &AlgebraConfig) -> i64 {
        defect_of_content(&self.content(cfg), cfg)
    }

    /// Splits at column `c` of component `m` into `(lambda_L, lambda_R)` with
    /// multicharges `(kappa_L, kappa_R)`.
    pub fn split_columns(
        &self,
        c: usize,
        m: usize,
        kappa: &[Residue],
    ) -> Result<(Multipartition, Multipartition, Vec<Residue>, Vec<Residue>)> {
        self.check_component(m)?;
        let comp = &self.comps[m - 1];
        let left: Vec<usize> = comp.iter().map(|&x| x.min(c)).filter(|&x| x > 0).collect();
        let right: Vec<usize> = comp.iter().map(|&x| x.saturating_sub(c)).filter(|&x| x > 0).collect();
        let mut lc = vec![left];
        lc.extend(self.comps[m..].iter().cloned());
        let mut rc: Vec<Vec<usize>> = self.comps[..m - 1].to_vec();
        rc.push(right);
        let kl = kappa[m - 1..].to_vec();
        let mut kr = kappa[..m].to_vec();
        kr[m - 1] += c as i64;
        Ok((Multipartition { comps: lc }, Multipartition { comps: rc }, kl, kr))
    }

    /// Splits after row `r` of component `m` into `(lambda_T, lambda_B)` with
    /// multicharges `(kappa_T, kappa_B)`.
    pub fn split_rows(
        &self,
        r: usize,
        m: usize,
        kappa: &[Residue],
    ) -> Result<(Multipartition, Multipartition, Vec<Residue>, Vec<Residue>)> {
        self.check_component(m)?;
        let comp = &self.comps[m - 1];
        let top: Vec<usize> = comp.iter().take(r).copied().collect();
        let bottom: Vec<usize> = comp.iter().skip(r).copied().collect();
        let mut tc: Vec<Vec<usize>> = self.comps[..m - 1].to_vec();
        tc.push(top);
        let mut bc = vec![bottom];
        bc.extend(self.comps[m..].iter().cloned());
        let kt = kappa[..m].to_vec();
        let mut kb = kappa[m - 1..].to_vec();
        kb[0] -= r as i64;
        Ok((Multipartition { comps: tc }, Multipartition { comps: bc }, kt, kb))
    }

    /// The multipartition `lambda # mu` whose left part is `lambda_L` and
    /// whose right part is `mu_R`.
    pub fn lr_join(&self, mu: &Multipartition, c: usize, m: usize) -> Result<Multipartition> {
        self.check_component(m)?;
        if mu.level() != self.level() {
            return Err(Error::InvalidJoin("levels differ".into()));
        }
        let a = self.col_len(m, c);
        let b = mu.col_len(m, c);
        let b1 = mu.col_len(m, c + 1);
        if c > 0 && !(a >= b && b >= b1) {
            return Err(Error::InvalidJoin(format!(
                "need lambda'_c >= mu'_c >= mu'_(c+1), got {a}, {b}, {b1}"
            )));
        }
        let rows = a.max(mu.comp(m).len());
        let mut comp = Vec::with_capacity(rows);
        for r in 1..=rows {
            let left = self.row_len(m, r).min(c);
            let right = mu.row_len(m, r).saturating_sub(c);
            if right > 0 && left < c {
                return Err(Error::InvalidJoin(format!("row {r} of the join is not a partition row")));
            }
            comp.push(left + right);
        }
        let mut comps: Vec<Vec<usize>> = mu.comps[..m - 1].to_vec();
        comps.push(comp);
        comps.extend(self.comps[m..].iter().cloned());
        Multipartition::new(comps).map_err(|e| Error::InvalidJoin(e.to_string()))
    }

    fn check_component(&self, m: usize) -> Result<()> {
        if m == 0 || m > self.level() {
            return Err(Error::InvalidInput(format!("component {m} out of range 1..={}", self.level())));
        }
        Ok(())
    }

    /// Every `l`-multipartition of `n`, in a fixed deterministic order.
    pub fn all(level: usize, n: usize) -> Vec<Multipartition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        distribute(level, n, &mut cur, &mut out);
        out
    }
}

fn distribute(level: usize, n: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Multipartition>) {
    if cur.len() + 1 == level {
        for p in partitions(n) {
            cur.push(p);
            out.push(Multipartition { comps: cur.clone() });
            cur.pop();
        }
        return;
    }
    for k in (0..=n).rev() {
        for p in partitions(k) {
            cur.push(p);
            distribute(level, n - k, cur, out);
            cur.pop();
        }
    }
}

/// Partitions of `n` in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            go(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn conjugate_partition(p: &[usize]) -> Vec<usize> {
    let w = p.first().copied().unwrap_or(0);
    (1..=w).map(|c| p.iter().take_while(|&&x| x >= c).count()).collect()
}

/// Dominance on `l`-multicompositions given as per-component row lengths.
pub fn composition_dominates(a: &[Vec<usize>], b: &[Vec<usize>]) -> bool {
    let (mut sa, mut sb) = (0usize, 0usize);
    for (pa, pb) in a.iter().zip(b) {
        let rows = pa.len().max(pb.len());
        for r in 0..rows {
            sa += pa.get(r).copied().unwrap_or(0);
            sb += pb.get(r).copied().unwrap_or(0);
            if sa < sb {
                return false;
            }
        }
    }
    true
}

/// Defect of a root with respect to `Lambda_kappa`.
pub fn defect_of_content(content: &RootContent, cfg: &AlgebraConfig) -> i64 {
    let lam: i64 = cfg.kappa.iter().map(|k| *content.get(k).unwrap_or(&0) as i64).sum();
    let mut form = 0i64;
    for (&i, &ci) in content {
        for (&j, &cj) in content {
            form += ci as i64 * cj as i64 * cfg.cartan(i, j);
        }
    }
    debug_assert!(form % 2 == 0);
    lam - form / 2
}

impl fmt::Display for Multipartition {
    /// Components separated by `|`, parts by `,`, an empty component as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .comps
            .iter()
            .map(|p| {
                if p.is_empty() {
                    "0".to_string()
                } else {
                    p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
                }
            })
            .collect();
        write!(f, "{}", parts.join("|"))
    }
}

impl FromStr for Multipartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let comps = s
            .trim()
            .split('|')
            .map(|c| {
                let c = c.trim();
                if c.is_empty() || c == "0" {
                    return Ok(Vec::new());
                }
                c.split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad part {x:?} in {s:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Multipartition::new(comps).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Laurent polynomial in `v` with non-negative integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedDimension(pub BTreeMap<i64, u64>);

impl GradedDimension {
    pub fn zero() -> Self {
        GradedDimension(BTreeMap::new())
    }

    /// `v^d`.
    pub fn monomial(d: i64) -> Self {
        let mut m = BTreeMap::new();
        m.insert(d, 1);
        GradedDimension(m)
    }

    pub fn add_degree(&mut self, d: i64) {
        *self.0.entry(d).or_insert(0) += 1;
    }

    pub fn is_zero(&self) -> bool {
        self.0.values().all(|&c| c == 0)
    }

    /// Ungraded dimension (value at `v = 1`).
    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        GradedDimension(self.0.iter().map(|(&d, &c)| (d + k, c)).collect())
    }

    /// The bar involution `v -> v^{-1}`.
    pub fn bar(&self) -> Self {
        GradedDimension(self.0.iter().map(|(&d, &c)| (-d, c)).collect())
    }

    pub fn add(&self, other: &GradedDimension) -> Self {
        let mut out = self.0.clone();
        for (&d, &c) in &other.0 {
            *out.entry(d).or_insert(0) += c;
        }
        GradedDimension(out)
    }

    pub fn mul(&self, other: &GradedDimension) -> Self {
        let mut out = BTreeMap::new();
        for (&a, &x) in &self.0 {
            for (&b, &y) in &other.0 {
                *out.entry(a + b).or_insert(0) += x * y;
            }
        }
        out.retain(|_, c| *c != 0);
        GradedDimension(out)
    }

    fn normalized(&self) -> BTreeMap<i64, u64> {
        self.0.iter().filter(|(_, &c)| c != 0).map(|(&d, &c)| (d, c)).collect()
    }

    /// Equality ignoring explicit zero coefficients.
    pub fn same_as(&self, other: &GradedDimension) -> bool {
        self.normalized() == other.normalized()
    }

    /// Parses the printed form, e.g. `"1 + v^2"`, `"v"`, `"2v^-1"`, `"0"`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut out = GradedDimension::zero();
        let s = s.trim();
        if s == "0" {
            return Ok(out);
        }
        for term in s.split('+') {
            let t = term.trim();
            let (coef, rest) = match t.find('v') {
                Some(pos) => (&t[..pos], &t[pos..]),
                None => (t, ""),
            };
            let c: u64 = if coef.is_empty() {
                1
            } else {
                coef.parse().map_err(|_| Error::Parse(format!("bad coefficient in {t:?}")))?
            };
            let d: i64 = if rest.is_empty() {
                0
            } else if rest == "v" {
                1
            } else {
                rest.strip_prefix("v^")
                    .and_then(|x| x.trim_matches(|ch| ch == '(' || ch == ')').parse().ok())
                    .ok_or_else(|| Error::Parse(format!("bad exponent in {t:?}")))?
            };
            *out.0.entry(d).or_insert(0) += c;
        }
        Ok(out)
    }
}

impl PartialOrd for GradedDimension {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.normalized().cmp(&other.normalized()))
    }
}

impl fmt::Display for GradedDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .normalized()
            .iter()
            .map(|(&d, &c)| {
                let coef = if c == 1 && d != 0 { String::new() } else { c.to_string() };
                match d {
                    0 => coef,
                    1 => format!("{coef}v"),
                    _ => format!("{coef}v^{d}"),
                }
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl Serialize for GradedDimension {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let n = self.normalized();
        let mut map = s.serialize_map(Some(n.len()))?;
        for (d, c) in n {
            map.serialize_entry(&d.to_string(), &c)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for GradedDimension {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: BTreeMap<String, u64> = BTreeMap::deserialize(d)?;
        let mut out = BTreeMap::new();
        for (k, v) in raw {
            let deg: i64 = k.parse().map_err(serde::de::Error::custom)?;
            out.insert(deg, v);
        }
        Ok(GradedDimension(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["1,1|2,1,1,1|1", "0|3", "2,2|0|0", "0"] {
            assert_eq!(mp(s).to_string(), s);
        }
        assert!("1,2".parse::<Multipartition>().is_err());
    }

    #[test]
    fn conjugate_reverses_components() {
        assert_eq!(mp("2,2|2,1,1|3,2").conjugate(), mp("2,2,1|3,1|2,2"));
        assert_eq!(Multipartition::empty(2).conjugate(), Multipartition::empty(2));
    }

    #[test]
    fn dominance_examples() {
        assert!(mp("1,1|2,1,1,1|1").dominates(&mp("1|3,1|3")).unwrap());
        assert!(!mp("1,1").dominates(&mp("2")).unwrap());
        assert!(mp("2").dominates(&mp("1,1")).unwrap());
        assert!(mp("1").dominates(&mp("1,1")).is_err());
    }

    #[test]
    fn residues_of_the_worked_example() {
        let cfg = AlgebraConfig::finite(4, &[1, 2, 0]);
        let lam = mp("2,2|2,1,1|3,2");
        let res: Vec<Residue> = lam.nodes().iter().map(|a| a.residue(&cfg)).collect();
        assert_eq!(res, vec![1, 2, 0, 1, 2, 3, 1, 0, 0, 1, 2, 3, 0]);
    }

    #[test]
    fn defect_values() {
        let cfg = AlgebraConfig::finite(3, &[1, 1]);
        assert_eq!(mp("2|2,1").defect(&cfg), 3);
        assert_eq!(Multipartition::empty(2).defect(&cfg), 0);
        for e in 2..6 {
            for k in 0..e as i64 {
                assert_eq!(mp("1").defect(&AlgebraConfig::finite(e, &[k])), 0);
            }
        }
    }

    #[test]
    fn column_split_example() {
        let lam = mp("3|2,2|2,1");
        let (l, r, kl, kr) = lam.split_columns(1, 2, &[0, 1, 2]).unwrap();
        assert_eq!(l, mp("1,1|2,1"));
        assert_eq!(r, mp("3|1,1"));
        assert_eq!(kl, vec![1, 2]);
        assert_eq!(kr, vec![0, 2]);
        let (l0, r0, _, _) = lam.split_columns(0, 2, &[0, 1, 2]).unwrap();
        assert_eq!(l0, mp("0|2,1"));
        assert_eq!(r0, mp("3|2,2"));
    }

    #[test]
    fn row_split_example() {
        let lam = mp("1,1|2,1,1,1|1");
        let (t, b, kt, kb) = lam.split_rows(1, 2, &[0, 1, 0]).unwrap();
        assert_eq!(t, mp("1,1|2"));
        assert_eq!(b, mp("1,1,1|1"));
        assert_eq!(kt, vec![0, 1]);
        assert_eq!(kb, vec![0, 0]);
    }

    #[test]
    fn self_join_is_identity() {
        let lam = mp("3|2,2|2,1");
        assert_eq!(lam.lr_join(&lam, 1, 2).unwrap(), lam);
    }

    #[test]
    fn graded_dimension_printing() {
        let mut g = GradedDimension::zero();
        assert_eq!(g.to_string(), "0");
        g.add_degree(0);
        g.add_degree(2);
        assert_eq!(g.to_string(), "1 + v^2");
        assert_eq!(GradedDimension::monomial(1).to_string(), "v");
        assert_eq!(GradedDimension::parse("1 + v^2").unwrap(), g);
        assert_eq!(GradedDimension::parse("2v^-1").unwrap().to_string(), "2v^-1");
    }

    #[test]
    fn counts_of_multipartitions() {
        assert_eq!(Multipartition::all(1, 5).len(), 7);
        assert_eq!(Multipartition::all(2, 5).len(), 36);
        assert_eq!(Multipartition::all(3, 0).len(), 1);
    }
}
