//! Tableaux: the distinguished tableaux `t_lambda` and `t^lambda`, the
//! permutations `w_t` and `w^t`, residue sequences, degree and codegree,
//! dominance, dominated tableaux, and the joins used by the removal
//! theorems.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::config::{AlgebraConfig, Residue};
use crate::error::{Error, Result};
use crate::partition::{composition_dominates, GradedDimension, Multipartition, Node};
use crate::symgroup::Permutation;

/// A bijective filling of a Young diagram by `1..n`, stored per component as
/// a list of rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    shape: Multipartition,
    rows: Vec<Vec<Vec<usize>>>,
}

impl Tableau {
    /// Builds a tableau from per-component rows, checking bijectivity.
    pub fn from_rows(rows: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        let shape = Multipartition::new(rows.iter().map(|c| c.iter().map(|r| r.len()).collect()).collect())?;
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for &x in rows.iter().flatten().flatten() {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidInput(format!("entries must be exactly 1..{n}")));
            }
            seen[x] = true;
        }
        Ok(Tableau { shape, rows })
    }

    /// Fills `shape` node by node from a function of the node.
    pub fn from_fn(shape: &Multipartition, mut f: impl FnMut(&Node) -> usize) -> Self {
        let rows = shape
            .components()
            .iter()
            .enumerate()
            .map(|(mi, p)| {
                p.iter()
                    .enumerate()
                    .map(|(ri, &len)| (1..=len).map(|c| f(&Node::new(ri + 1, c, mi + 1))).collect())
                    .collect()
            })
            .collect();
        Tableau { shape: shape.clone(), rows }
    }

    /// `t_lambda`: `1..n` down successive columns from left to right, so the
    /// last component is filled first.
    pub fn t_col(shape: &Multipartition) -> Self {
        let mut pos = std::collections::HashMap::new();
        let mut k = 0;
        for m in (1..=shape.level()).rev() {
            let width = shape.comp(m).first().copied().unwrap_or(0);
            for c in 1..=width {
                for r in 1..=shape.col_len(m, c) {
                    k += 1;
                    pos.insert(Node::new(r, c, m), k);
                }
            }
        }
        Self::from_fn(shape, |a| pos[a])
    }

    /// `t^lambda`: `1..n` along successive rows from top to bottom.
    pub fn t_row(shape: &Multipartition) -> Self {
        let mut k = 0;
        Self::from_fn(shape, |_| {
            k += 1;
            k
        })
    }

    pub fn shape(&self) -> &Multipartition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Vec<usize>>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.shape.size()
    }

    pub fn level(&self) -> usize {
        self.shape.level()
    }

    pub fn entry(&self, a: &Node) -> usize {
        self.rows[a.m - 1][a.r - 1][a.c - 1]
    }

    /// Positions of the entries: element `k - 1` is the node holding `k`.
    pub fn positions(&self) -> Vec<Node> {
        let mut pos = vec![Node::new(0, 0, 0); self.n()];
        for (mi, comp) in self.rows.iter().enumerate() {
            for (ri, row) in comp.iter().enumerate() {
                for (ci, &x) in row.iter().enumerate() {
                    pos[x - 1] = Node::new(ri + 1, ci + 1, mi + 1);
                }
            }
        }
        pos
    }

    pub fn position(&self, k: usize) -> Node {
        self.positions()[k - 1]
    }

    pub fn is_row_strict(&self) -> bool {
        self.rows.iter().flatten().all(|row| row.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn is_column_strict(&self) -> bool {
        self.rows.iter().all(|comp| {
            comp.windows(2)
                .all(|pair| pair[1].iter().zip(&pair[0]).all(|(lo, hi)| lo > hi))
        })
    }

    pub fn is_standard(&self) -> bool {
        self.is_row_strict() && self.is_column_strict()
    }

    /// Applies a permutation to the entries.
    pub fn act(&self, w: &Permutation) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|comp| comp.iter().map(|row| row.iter().map(|&x| w.apply(x)).collect()).collect())
            .collect();
        Tableau { shape: self.shape.clone(), rows }
    }

    fn perm_relative_to(&self, base: &Tableau) -> Permutation {
        let mut w = vec![0usize; self.n()];
        for a in self.shape.nodes() {
            w[base.entry(&a) - 1] = self.entry(&a);
        }
        Permutation::from_one_line(&w).expect("tableau is a bijection")
    }

    /// `w_t` with `w_t t_lambda = t`.
    pub fn perm_col(&self) -> Permutation {
        self.perm_relative_to(&Tableau::t_col(&self.shape))
    }

    /// `w^t` with `w^t t^lambda = t`.
    pub fn perm_row(&self) -> Permutation {
        self.perm_relative_to(&Tableau::t_row(&self.shape))
    }

    /// The residue sequence `i(t)`.
    pub fn residue_sequence(&self, cfg: &AlgebraConfig) -> Vec<Residue> {
        self.positions().iter().map(|a| a.residue(cfg)).collect()
    }

    fn check_standard(&self) -> Result<()> {
        if !self.is_standard() {
            return Err(Error::InvalidInput(format!("tableau {self} is not standard")));
        }
        Ok(())
    }

    /// The degree recursion `deg(t) = d_A(lambda) + deg(t_{<n})`.
    pub fn degree(&self, cfg: &AlgebraConfig) -> Result<i64> {
        self.check_standard()?;
        Ok(self.degree_by(cfg, d_below))
    }

    /// The codegree recursion `codeg(t) = d^A(lambda) + codeg(t_{<n})`.
    pub fn codegree(&self, cfg: &AlgebraConfig) -> Result<i64> {
        self.check_standard()?;
        Ok(self.degree_by(cfg, d_above))
    }

    fn degree_by(&self, cfg: &AlgebraConfig, d: fn(&Multipartition, &Node, &AlgebraConfig) -> i64) -> i64 {
        let pos = self.positions();
        let mut shape = self.shape.clone();
        let mut total = 0;
        for k in (1..=self.n()).rev() {
            let a = pos[k - 1];
            total += d(&shape, &a, cfg);
            shape = shape.remove(&a);
        }
        total
    }

    /// Removes the entry `n`.
    pub fn truncate_last(&self) -> Tableau {
        let a = self.position(self.n());
        let mut rows = self.rows.clone();
        rows[a.m - 1][a.r - 1].pop();
        if rows[a.m - 1][a.r - 1].is_empty() {
            rows[a.m - 1].pop();
        }
        Tableau { shape: self.shape.remove(&a), rows }
    }

    /// The conjugate `t'(r, c, m) = t(c, r, l + 1 - m)`.
    pub fn conjugate(&self) -> Tableau {
        let l = self.level();
        let shape = self.shape.conjugate();
        Tableau::from_fn(&shape, |a| self.entry(&Node::new(a.c, a.r, l + 1 - a.m)))
    }

    /// `Shape(t|m)`: per component, the number of entries `<= m` in each row.
    pub fn shape_upto(&self, m: usize) -> Vec<Vec<usize>> {
        self.rows
            .iter()
            .map(|comp| comp.iter().map(|row| row.iter().filter(|&&x| x <= m).count()).collect())
            .collect()
    }

    /// `Shape(t|m)'`: the multicomposition of the conjugate diagram, i.e.
    /// component `l + 1 - k` lists the column counts of component `k`.
    pub fn shape_upto_conj(&self, m: usize) -> Vec<Vec<usize>> {
        self.rows
            .iter()
            .rev()
            .map(|comp| {
                let width = comp.first().map_or(0, |r| r.len());
                (0..width)
                    .map(|c| comp.iter().filter(|row| row.get(c).is_some_and(|&x| x <= m)).count())
                    .collect()
            })
            .collect()
    }

    /// Tableau dominance: `self >= other` iff `w_self >= w_other` in Bruhat
    /// order, so `t_lambda` is the least dominant `lambda`-tableau.
    pub fn dominates(&self, other: &Tableau) -> Result<bool> {
        if self.shape != other.shape {
            return Err(Error::InvalidInput("tableaux of different shapes".into()));
        }
        Ok(other.perm_col().bruhat_leq(&self.perm_col()))
    }

    /// Dominance of row-strict tableaux through row permutations:
    /// `self >= other` iff `w^self <= w^other`. On standard tableaux this
    /// agrees with [`Tableau::dominates`]; on row-strict tableaux it is the
    /// order characterised by the shapes `Shape(t|m)`.
    pub fn row_dominates(&self, other: &Tableau) -> Result<bool> {
        if self.shape != other.shape {
            return Err(Error::InvalidInput("tableaux of different shapes".into()));
        }
        Ok(self.perm_row().bruhat_leq(&other.perm_row()))
    }

    /// Each entry lies weakly left of its position in `t_lambda`.
    pub fn is_col_dominated(&self, lambda: &Multipartition) -> bool {
        self.is_col_dominated_upto(lambda, self.n())
    }

    /// Column domination restricted to the entries `1..j`.
    pub fn is_col_dominated_upto(&self, lambda: &Multipartition, j: usize) -> bool {
        let base = Tableau::t_col(lambda).positions();
        self.positions().iter().zip(&base).take(j).all(|(a, b)| a.weakly_left_of(b))
    }

    /// Each entry lies weakly above its position in `t^lambda`.
    pub fn is_row_dominated(&self, lambda: &Multipartition) -> bool {
        self.is_row_dominated_upto(lambda, self.n())
    }

    /// Row domination restricted to the entries `1..j`.
    pub fn is_row_dominated_upto(&self, lambda: &Multipartition, j: usize) -> bool {
        let base = Tableau::t_row(lambda).positions();
        self.positions().iter().zip(&base).take(j).all(|(a, b)| a.weakly_above(b))
    }
}

fn d_count(shape: &Multipartition, a: &Node, cfg: &AlgebraConfig, pick: fn(&Node, &Node) -> bool) -> i64 {
    let i = a.residue(cfg);
    let add = shape
        .addable_nodes()
        .iter()
        .filter(|b| b.residue(cfg) == i && pick(b, a))
        .count() as i64;
    let rem = shape
        .removable_nodes()
        .iter()
        .filter(|b| b.residue(cfg) == i && pick(b, a))
        .count() as i64;
    add - rem
}

/// `d_A(lambda)`: addable minus removable `res(A)`-nodes strictly below `A`.
pub fn d_below(shape: &Multipartition, a: &Node, cfg: &AlgebraConfig) -> i64 {
    d_count(shape, a, cfg, |b, a| a.above(b))
}

/// `d^A(lambda)`: addable minus removable `res(A)`-nodes strictly above `A`.
pub fn d_above(shape: &Multipartition, a: &Node, cfg: &AlgebraConfig) -> i64 {
    d_count(shape, a, cfg, |b, a| b.above(a))
}

/// `|Std(lambda)|` and the codegree generating function
/// `sum_t v^codeg(t)`, by recursion over removable nodes. No tableau is
/// stored, so this works far beyond the sizes where modules can be built.
pub fn std_graded_count(shape: &Multipartition, cfg: &AlgebraConfig) -> (u128, GradedDimension) {
    fn go(
        shape: &Multipartition,
        cfg: &AlgebraConfig,
        memo: &mut HashMap<Multipartition, (u128, GradedDimension)>,
    ) -> (u128, GradedDimension) {
        if shape.size() == 0 {
            return (1, GradedDimension::monomial(0));
        }
        if let Some(hit) = memo.get(shape) {
            return hit.clone();
        }
        let (mut count, mut dim) = (0u128, GradedDimension::zero());
        for a in shape.removable_nodes() {
            let (c, d) = go(&shape.remove(&a), cfg, memo);
            count += c;
            dim = dim.add(&d.shift(d_above(shape, &a, cfg)));
        }
        memo.insert(shape.clone(), (count, dim.clone()));
        (count, dim)
    }
    go(shape, cfg, &mut HashMap::new())
}

/// All standard `lambda`-tableaux, sorted by `(l(w_t), w_t)` so that the
/// order refines dominance and `t_lambda` comes first.
pub fn enumerate_std(shape: &Multipartition) -> Vec<Tableau> {
    let n = shape.size();
    let mut out = Vec::new();
    let mut filling: Vec<Node> = Vec::with_capacity(n);
    grow(shape, &Multipartition::empty(shape.level()), &mut filling, &|_, _| true, &mut out);
    sort_by_perm(&mut out);
    out
}

/// `Std_lambda(mu)`: standard `mu`-tableaux with every entry weakly left of
/// its position in `t_lambda`.
pub fn enumerate_col_dominated(lambda: &Multipartition, mu: &Multipartition) -> Vec<Tableau> {
    if lambda.size() != mu.size() || lambda.level() != mu.level() {
        return Vec::new();
    }
    let base = Tableau::t_col(lambda).positions();
    let mut out = Vec::new();
    let mut filling = Vec::with_capacity(mu.size());
    let ok = move |k: usize, a: &Node| a.weakly_left_of(&base[k - 1]);
    grow(mu, &Multipartition::empty(mu.level()), &mut filling, &ok, &mut out);
    sort_by_perm(&mut out);
    out
}

/// `Std^lambda(mu)`: standard `mu`-tableaux with every entry weakly above
/// its position in `t^lambda`.
pub fn enumerate_row_dominated(lambda: &Multipartition, mu: &Multipartition) -> Vec<Tableau> {
    if lambda.size() != mu.size() || lambda.level() != mu.level() {
        return Vec::new();
    }
    let base = Tableau::t_row(lambda).positions();
    let mut out = Vec::new();
    let mut filling = Vec::with_capacity(mu.size());
    let ok = move |k: usize, a: &Node| a.weakly_above(&base[k - 1]);
    grow(mu, &Multipartition::empty(mu.level()), &mut filling, &ok, &mut out);
    sort_by_perm(&mut out);
    out
}

fn grow(
    target: &Multipartition,
    cur: &Multipartition,
    filling: &mut Vec<Node>,
    ok: &dyn Fn(usize, &Node) -> bool,
    out: &mut Vec<Tableau>,
) {
    let k = filling.len() + 1;
    if k > target.size() {
        let pos = filling.clone();
        let mut inv = std::collections::HashMap::new();
        for (i, a) in pos.iter().enumerate() {
            inv.insert(*a, i + 1);
        }
        out.push(Tableau::from_fn(target, |a| inv[a]));
        return;
    }
    for a in cur.addable_nodes() {
        if target.contains(&a) && ok(k, &a) {
            filling.push(a);
            grow(target, &cur.add(&a), filling, ok, out);
            filling.pop();
        }
    }
}

fn sort_by_perm(v: &mut [Tableau]) {
    v.sort_by_cached_key(|t| {
        let w = t.perm_col();
        (w.length(), w.one_line())
    });
}

/// The join `t_L # t_R`: entries `1..n_L` as in `t_L`, then `n_L + 1..n`
/// placed as `1..n_R` are in `t_R`. The split column is `c`; the component
/// index `m` is the level of `t_R`.
pub fn lr_join_tableaux(t_left: &Tableau, t_right: &Tableau, c: usize) -> Result<Tableau> {
    let m = t_right.level();
    let nl = t_left.n();
    let mut rows: Vec<Vec<Vec<usize>>> = t_right.rows[..m - 1]
        .iter()
        .map(|comp| comp.iter().map(|r| r.iter().map(|x| x + nl).collect()).collect())
        .collect();
    let lcomp = &t_left.rows[0];
    let rcomp = &t_right.rows[m - 1];
    let height = lcomp.len().max(rcomp.len());
    let mut comp = Vec::with_capacity(height);
    for r in 0..height {
        let left = lcomp.get(r).cloned().unwrap_or_default();
        let right: Vec<usize> = rcomp.get(r).map(|row| row.iter().map(|x| x + nl).collect()).unwrap_or_default();
        if left.len() > c || (!right.is_empty() && left.len() != c) {
            return Err(Error::InvalidJoin(format!("row {} does not fit the split at column {c}", r + 1)));
        }
        let mut row = left;
        row.extend(right);
        comp.push(row);
    }
    rows.push(comp);
    rows.extend(t_left.rows[1..].iter().cloned());
    Tableau::from_rows(rows).map_err(|e| Error::InvalidJoin(e.to_string()))
}

/// Inverse of [`lr_join_tableaux`] on `Std_LR(lambda)`.
pub fn lr_split_tableau(t: &Tableau, c: usize, m: usize) -> Result<(Tableau, Tableau)> {
    let lambda = t.shape();
    let (ll, lr, _, _) = lambda.split_columns(c, m, &vec![0; lambda.level()])?;
    let nl = ll.size();
    let in_left = |a: &Node| a.m > m || (a.m == m && a.c <= c);
    let pos = t.positions();
    if pos.iter().take(nl).any(|a| !in_left(a)) {
        return Err(Error::NotSplittable(format!("entries 1..{nl} of {t} are not all left of the cut")));
    }
    let tl = Tableau::from_fn(&ll, |a| {
        let orig = if a.m == 1 { Node::new(a.r, a.c, m) } else { Node::new(a.r, a.c, a.m + m - 1) };
        t.entry(&orig)
    });
    let tr = Tableau::from_fn(&lr, |a| {
        let orig = if a.m == m { Node::new(a.r, a.c + c, m) } else { *a };
        t.entry(&orig) - nl
    });
    Ok((tl, tr))
}

/// `t^+` for column removal: a first column `1..k` is added to component `m`
/// of a `lambda_R`-tableau and the other entries are raised by `k`. The
/// result has level `l`, components after `m` being empty.
pub fn add_first_column(t: &Tableau, k: usize, l: usize) -> Result<Tableau> {
    let m = t.level();
    let mut comps = vec![vec![1; k]];
    comps.extend(std::iter::repeat(Vec::new()).take(l - m));
    let left = Tableau::t_col(&Multipartition::new(comps)?);
    lr_join_tableaux(&left, t, 1)
}

/// `t^+` for final column removal: a column with entries `n+1..n+k` is
/// appended to the first component of a `lambda_L`-tableau, which becomes
/// component `m` of the result.
pub fn add_last_column(t: &Tableau, k: usize, m: usize) -> Result<Tableau> {
    let d = t.rows[0].first().map_or(0, |r| r.len()) + 1;
    if t.rows[0].len() < k || t.rows[0].iter().take(k).any(|r| r.len() != d - 1) {
        return Err(Error::InvalidInput("the new column must extend rows of full width".into()));
    }
    let mut comps = vec![Vec::new(); m - 1];
    comps.push(vec![1; k]);
    let right = Tableau::t_col(&Multipartition::new(comps)?);
    lr_join_tableaux(t, &right, d - 1)
}

/// The integers in the top (`S_T`) and bottom (`S_B`) parts of `t_lambda`
/// for a row split after row `r` of component `m`.
pub fn row_split_labels(lambda: &Multipartition, r: usize, m: usize) -> (Vec<usize>, Vec<usize>) {
    let t = Tableau::t_col(lambda);
    let (mut top, mut bottom) = (Vec::new(), Vec::new());
    for a in lambda.nodes() {
        if a.m < m || (a.m == m && a.r <= r) {
            top.push(t.entry(&a));
        } else {
            bottom.push(t.entry(&a));
        }
    }
    top.sort_unstable();
    bottom.sort_unstable();
    (top, bottom)
}

/// The row join `t #_r s` of a `mu_B`-tableau `t` and a `mu_T`-tableau `s`,
/// relabelled through `S_B` and `S_T`.
pub fn row_join_tableaux(
    t: &Tableau,
    s: &Tableau,
    lambda: &Multipartition,
    mu: &Multipartition,
    r: usize,
    m: usize,
) -> Result<Tableau> {
    let kappa0 = vec![0; lambda.level()];
    let (lt, lb, _, _) = lambda.split_rows(r, m, &kappa0)?;
    let (mt, mb, _, _) = mu.split_rows(r, m, &kappa0)?;
    if lt.size() != mt.size() {
        return Err(Error::InvalidInput("top parts have different sizes".into()));
    }
    if t.shape() != &mb || s.shape() != &mt {
        return Err(Error::InvalidInput("tableau shapes do not match the split of mu".into()));
    }
    if !t.is_standard() || !t.is_col_dominated(&lb) || !s.is_standard() || !s.is_col_dominated(&lt) {
        return Err(Error::InvalidInput("row join needs dominated standard tableaux".into()));
    }
    let (st, sb) = row_split_labels(lambda, r, m);
    Ok(Tableau::from_fn(mu, |a| {
        if a.m < m || (a.m == m && a.r <= r) {
            st[s.entry(a) - 1]
        } else {
            let b = if a.m == m { Node::new(a.r - r, a.c, 1) } else { Node::new(a.r, a.c, a.m - m + 1) };
            sb[t.entry(&b) - 1]
        }
    }))
}

/// Dominance of multicompositions, exposed for the shape criteria.
pub fn shapes_dominate(a: &[Vec<usize>], b: &[Vec<usize>]) -> bool {
    composition_dominates(a, b)
}

impl fmt::Display for Tableau {
    /// Rows joined by `;`, entries by `,`, components by `|`; an empty
    /// component is written `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self
            .rows
            .iter()
            .map(|comp| {
                if comp.is_empty() {
                    "0".to_string()
                } else {
                    comp.iter()
                        .map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
                        .collect::<Vec<_>>()
                        .join(";")
                }
            })
            .collect();
        write!(f, "{}", comps.join("|"))
    }
}

impl FromStr for Tableau {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .trim()
            .split('|')
            .map(|comp| {
                let comp = comp.trim();
                if comp.is_empty() || comp == "0" {
                    return Ok(Vec::new());
                }
                comp.split(';')
                    .map(|row| {
                        row.split(',')
                            .map(|x| {
                                x.trim()
                                    .parse::<usize>()
                                    .map_err(|_| Error::Parse(format!("bad entry {x:?} in {s:?}")))
                            })
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::from_rows(rows).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    fn tab(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    #[test]
    fn distinguished_tableaux_of_the_worked_example() {
        let lam = mp("2,2|2,1,1|3,2");
        assert_eq!(Tableau::t_col(&lam), tab("10,12;11,13|6,9;7;8|1,3,5;2,4"));
        assert_eq!(Tableau::t_row(&lam), tab("1,2;3,4|5,6;7;8|9,10,11;12,13"));
    }

    #[test]
    fn residue_sequences_of_the_worked_example() {
        let cfg = AlgebraConfig::finite(4, &[1, 2, 0]);
        let lam = mp("2,2|2,1,1|3,2");
        assert_eq!(
            Tableau::t_col(&lam).residue_sequence(&cfg),
            vec![0, 3, 1, 0, 2, 2, 1, 0, 3, 1, 0, 2, 1]
        );
        assert_eq!(
            Tableau::t_row(&lam).residue_sequence(&cfg),
            vec![1, 2, 0, 1, 2, 3, 1, 0, 0, 1, 2, 3, 0]
        );
    }

    #[test]
    fn degree_example() {
        let cfg = AlgebraConfig::finite(3, &[1, 1]);
        let t = tab("3,4|1,5;2");
        assert_eq!(t.residue_sequence(&cfg), vec![1, 0, 1, 2, 2]);
        assert_eq!(t.degree(&cfg).unwrap(), 3);
        assert_eq!(t.codegree(&cfg).unwrap(), 0);
        let t5 = t.truncate_last();
        assert_eq!(t5.degree(&cfg).unwrap(), 2);
        assert_eq!(t5.codegree(&cfg).unwrap(), 1);
        let a = Node::new(1, 2, 2);
        assert_eq!(d_below(t.shape(), &a, &cfg), 1);
        assert_eq!(d_above(t.shape(), &a, &cfg), -1);
    }

    #[test]
    fn codegree_of_hook() {
        let cfg = AlgebraConfig::finite(3, &[0]);
        let lam = mp("2,1");
        assert_eq!(Tableau::t_col(&lam).codegree(&cfg).unwrap(), 0);
        assert_eq!(Tableau::t_row(&lam).codegree(&cfg).unwrap(), 1);
    }

    #[test]
    fn empty_tableau_has_degree_zero() {
        let cfg = AlgebraConfig::finite(2, &[0, 1]);
        let t = Tableau::t_col(&Multipartition::empty(2));
        assert_eq!(t.degree(&cfg).unwrap(), 0);
        assert_eq!(t.codegree(&cfg).unwrap(), 0);
        assert_eq!(enumerate_std(&Multipartition::empty(2)).len(), 1);
    }

    #[test]
    fn perms_of_distinguished_tableaux() {
        let lam = mp("2,1|3");
        assert_eq!(Tableau::t_col(&lam).perm_col(), Permutation::identity(6));
        assert_eq!(Tableau::t_row(&lam).perm_row(), Permutation::identity(6));
        for t in enumerate_std(&lam) {
            assert_eq!(Tableau::t_col(&lam).act(&t.perm_col()), t);
        }
    }

    #[test]
    fn join_example() {
        let tl = tab("1;3|2,4;5");
        let tr = tab("2,3,5|1;4");
        assert_eq!(lr_join_tableaux(&tl, &tr, 1).unwrap(), tab("7,8,10|1,6;3,9|2,4;5"));
        let lam = mp("3|2,2|2,1");
        let (a, b) = lr_split_tableau(&tab("7,8,10|1,6;3,9|2,4;5"), 1, 2).unwrap();
        assert_eq!((a, b), (tl, tr));
        let (ll, lr, _, _) = lam.split_columns(1, 2, &[0, 0, 0]).unwrap();
        assert_eq!(
            lr_join_tableaux(&Tableau::t_col(&ll), &Tableau::t_col(&lr), 1).unwrap(),
            Tableau::t_col(&lam)
        );
    }

    #[test]
    fn row_join_example() {
        let lam = mp("1,1|2,1,1,1|1");
        let mu = mp("1|3,1|3");
        let (st, sb) = row_split_labels(&lam, 1, 2);
        assert_eq!(st, vec![2, 6, 7, 8]);
        assert_eq!(sb, vec![1, 3, 4, 5]);
        let s = tab("3|1,2,4");
        let t = tab("2|1,3,4");
        let u = row_join_tableaux(&t, &s, &lam, &mu, 1, 2).unwrap();
        assert_eq!(u, tab("7|2,6,8;3|1,4,5"));
        assert!(u.is_col_dominated(&lam));
    }

    #[test]
    fn dominated_sets() {
        let lam = mp("1,1|2,1,1,1|1");
        let mu = mp("1|3,1|3");
        let set = enumerate_col_dominated(&lam, &mu);
        assert!(set.contains(&tab("7|2,6,8;3|1,4,5")));
        assert!(set.contains(&tab("7|4,6,8;5|1,2,3")));
        assert_eq!(enumerate_col_dominated(&mu, &mu), vec![Tableau::t_col(&mu)]);
    }

    #[test]
    fn conjugation() {
        let lam = mp("2,1|3");
        let t = Tableau::t_col(&lam);
        assert_eq!(t.conjugate(), Tableau::t_row(&lam.conjugate()));
        assert_eq!(t.conjugate().conjugate(), t);
    }

    #[test]
    fn column_additions() {
        let lam = mp("0|2,1,1");
        let (_, lr, _, _) = lam.split_columns(1, 2, &[0, 0]).unwrap();
        assert_eq!(add_first_column(&Tableau::t_col(&lr), 3, 2).unwrap(), Tableau::t_col(&lam));
        let lam = mp("2,2,1|1");
        let (ll, _, _, _) = lam.split_columns(1, 1, &[0, 0]).unwrap();
        assert_eq!(add_last_column(&Tableau::t_col(&ll), 2, 1).unwrap(), Tableau::t_col(&lam));
    }
}
