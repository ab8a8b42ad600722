//! The construction engine behind column Specht modules.
//!
//! The presentation of `S_lambda` has four families of relations. The first
//! three (idempotent, `y_r z = 0`, `psi_r z = 0` down the columns of
//! `t_lambda`) say exactly that `z` spans a one dimensional module `L` for
//! the parabolic subalgebra attached to the columns of `t_lambda`. So
//! `S_lambda` is the quotient of the induced module `M = H (x) L` by the
//! submodule `N` generated by the Garnir vectors `g_A z`.
//!
//! `M` has basis `u_d = psi_{R(d)} z` for `d` a minimal length left coset
//! representative of the column Young subgroup, `R(d)` the preferred reduced
//! word. The action of `psi_a` and `y_r` on this basis is computed by
//! recursion on length with integer coefficients: the only inputs are the
//! defining relations of the KLR algebra. `N` is then found by linear
//! closure, block by block, and the quotient is read off in the basis
//! `{u_{w_t} : t standard}`. Nothing here is trusted blindly: the resulting
//! model is certified against the full presentation in [`crate::specht`].

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::rc::Rc;

use crate::config::{AlgebraConfig, Residue};
use crate::error::{inconsistent, Result};
use crate::linalg::{Echelon, SparseMatrix, SparseVec};
use crate::partition::Multipartition;
use crate::scalar::Scalar;
use crate::symgroup::{Permutation, WordConvention};
use crate::tableau::{enumerate_std, Tableau};
use crate::words::{column_garnir_nodes, garnir_element_variant, AlgebraElement, GarnirVariant, Generator};

/// An integer vector on the basis of `M`, sorted by index.
pub type IVec = Vec<(u32, i64)>;
type Shared = Rc<IVec>;

fn merge(mut terms: Vec<(u32, i64)>) -> IVec {
    terms.sort_unstable_by_key(|t| t.0);
    let mut out: IVec = Vec::with_capacity(terms.len());
    for (i, c) in terms {
        match out.last_mut() {
            Some(last) if last.0 == i => {
                last.1 = last.1.checked_add(c).expect("coefficient overflow");
            }
            _ => out.push((i, c)),
        }
    }
    out.retain(|t| t.1 != 0);
    out
}

fn lin(parts: &[(i64, &IVec)]) -> IVec {
    let mut terms = Vec::new();
    for (k, v) in parts {
        if *k != 0 {
            terms.extend(v.iter().map(|&(i, c)| (i, c.checked_mul(*k).expect("coefficient overflow"))));
        }
    }
    merge(terms)
}

/// The induced module `M` with memoised generator actions.
pub struct InducedModule {
    pub cfg: AlgebraConfig,
    pub n: usize,
    pub lambda: Multipartition,
    pub conv: WordConvention,
    ilam: Vec<Residue>,
    perms: Vec<Permutation>,
    index: HashMap<Vec<u8>, u32>,
    words: Vec<Vec<u8>>,
    suffix: Vec<u32>,
    residues: Vec<Vec<Residue>>,
    degrees: Vec<i64>,
    psi_memo: Vec<Option<Shared>>,
    y_memo: Vec<Option<Shared>>,
    front_memo: HashMap<(Vec<u8>, u8), (Vec<u8>, Shared)>,
    word_memo: HashMap<Vec<u8>, Shared>,
}

impl InducedModule {
    pub fn new(lambda: &Multipartition, cfg: &AlgebraConfig, conv: WordConvention) -> Result<Self> {
        let n = lambda.size();
        let tl = Tableau::t_col(lambda);
        let ilam = tl.residue_sequence(cfg);
        let pos = tl.positions();
        // Column blocks: maximal runs of positions r with r below r+1's cell... in t_lambda.
        let mut blocks: Vec<usize> = Vec::new();
        for r in 1..=n {
            let same = r > 1 && {
                let (p, q) = (pos[r - 2], pos[r - 1]);
                p.m == q.m && p.c == q.c && p.r + 1 == q.r
            };
            if same {
                *blocks.last_mut().unwrap() += 1;
            } else {
                blocks.push(1);
            }
        }
        let mut perms = coset_reps(&blocks);
        perms.sort_by_cached_key(|p| (p.length(), p.clone()));
        let index: HashMap<Vec<u8>, u32> = perms.iter().enumerate().map(|(i, p)| (p.raw().to_vec(), i as u32)).collect();
        let base_deg = tl.codegree(cfg)?;
        let mut words = Vec::with_capacity(perms.len());
        let mut suffix = Vec::with_capacity(perms.len());
        let mut residues = Vec::with_capacity(perms.len());
        let mut degrees = Vec::with_capacity(perms.len());
        for (i, d) in perms.iter().enumerate() {
            let inv = d.inverse();
            residues.push((1..=n).map(|k| ilam[inv.apply(k) - 1]).collect::<Vec<_>>());
            if i == 0 {
                words.push(Vec::new());
                suffix.push(0);
                degrees.push(base_deg);
                continue;
            }
            let desc = d.left_descents();
            let a0 = match conv {
                WordConvention::LexMin => *desc.first().unwrap(),
                WordConvention::LexMax => *desc.last().unwrap(),
            };
            let x = index[d.left_mul_s(a0).raw()];
            let mut w = vec![a0 as u8];
            w.extend_from_slice(&words[x as usize]);
            words.push(w);
            suffix.push(x);
            let j: &Vec<Residue> = &residues[x as usize];
            degrees.push(degrees[x as usize] - cfg.cartan(j[a0 - 1], j[a0]));
        }
        let size = perms.len();
        Ok(InducedModule {
            cfg: cfg.clone(),
            n,
            lambda: lambda.clone(),
            conv,
            ilam,
            perms,
            index,
            words,
            suffix,
            residues,
            degrees,
            psi_memo: vec![None; size * n.saturating_sub(1)],
            y_memo: vec![None; size * n],
            front_memo: HashMap::new(),
            word_memo: HashMap::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.perms.len()
    }

    pub fn perm(&self, d: u32) -> &Permutation {
        &self.perms[d as usize]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<u32> {
        self.index.get(p.raw()).copied()
    }

    pub fn residue(&self, d: u32) -> &[Residue] {
        &self.residues[d as usize]
    }

    pub fn degree(&self, d: u32) -> i64 {
        self.degrees[d as usize]
    }

    pub fn word(&self, d: u32) -> Vec<usize> {
        self.words[d as usize].iter().map(|&a| a as usize).collect()
    }

    fn unit(d: u32) -> IVec {
        vec![(d, 1)]
    }

    /// `psi_a u_d`.
    pub fn psi(&mut self, a: usize, d: u32) -> Shared {
        let key = (a - 1) * self.perms.len() + d as usize;
        if let Some(v) = &self.psi_memo[key] {
            return v.clone();
        }
        let v = Rc::new(self.compute_psi(a, d));
        self.psi_memo[key] = Some(v.clone());
        v
    }

    fn compute_psi(&mut self, a: usize, d: u32) -> IVec {
        let dp = self.perms[d as usize].clone();
        let sd = dp.left_mul_s(a);
        let mut aw = vec![a as u8];
        aw.extend_from_slice(&self.words[d as usize]);
        if !dp.is_left_descent(a) {
            if let Some(&s) = self.index.get(sd.raw()) {
                if self.words[s as usize][0] as usize == a {
                    return Self::unit(s);
                }
                let target = self.words[s as usize].clone();
                let diff = self.diffvec(&aw, &target);
                return lin(&[(1, &Self::unit(s)), (1, &diff)]);
            }
            // s_a d = d s_r with r, r+1 in one column, and psi_r z = 0.
            let r = dp.inverse().apply(a);
            debug_assert_eq!(dp.apply(r + 1), a + 1);
            let mut target = self.words[d as usize].clone();
            target.push(r as u8);
            return self.diffvec(&aw, &target);
        }
        let x = self.index[sd.raw()];
        let q = self.quadratic(a, x);
        if self.words[d as usize][0] as usize == a {
            return q;
        }
        let mut ax = vec![a as u8];
        ax.extend_from_slice(&self.words[x as usize]);
        let rd = self.words[d as usize].clone();
        let diff = self.diffvec(&ax, &rd);
        let corr = self.apply_psi(a, &diff);
        lin(&[(1, &q), (-1, &corr)])
    }

    /// `psi_a^2 e(j) u_x` by the quadratic relation.
    fn quadratic(&mut self, a: usize, x: u32) -> IVec {
        let j = self.residues[x as usize].clone();
        let (p, q) = (j[a - 1], j[a]);
        let cfg = self.cfg.clone();
        if p == q {
            Vec::new()
        } else if cfg.cartan(p, q) == 0 {
            Self::unit(x)
        } else if cfg.double_arrow(p, q) {
            let w = {
                let hi = self.y(a + 1, x);
                let lo = self.y(a, x);
                lin(&[(1, &hi), (-1, &lo)])
            };
            let hi = self.apply_y(a + 1, &w);
            let lo = self.apply_y(a, &w);
            lin(&[(-1, &hi), (1, &lo)])
        } else {
            let hi = self.y(a + 1, x);
            let lo = self.y(a, x);
            if cfg.arrow(p, q) {
                lin(&[(1, &hi), (-1, &lo)])
            } else {
                lin(&[(-1, &hi), (1, &lo)])
            }
        }
    }

    /// `y_r u_d`.
    pub fn y(&mut self, r: usize, d: u32) -> Shared {
        let key = (r - 1) * self.perms.len() + d as usize;
        if let Some(v) = &self.y_memo[key] {
            return v.clone();
        }
        let v = Rc::new(self.compute_y(r, d));
        self.y_memo[key] = Some(v.clone());
        v
    }

    fn compute_y(&mut self, r: usize, d: u32) -> IVec {
        if d == 0 {
            return Vec::new();
        }
        let a0 = self.words[d as usize][0] as usize;
        let x = self.suffix[d as usize];
        let j = &self.residues[x as usize];
        let delta = (j[a0 - 1] == j[a0]) as i64;
        if r == a0 {
            let inner = self.y(a0 + 1, x);
            let v = self.apply_psi(a0, &inner);
            lin(&[(1, &v), (-delta, &Self::unit(x))])
        } else if r == a0 + 1 {
            let inner = self.y(a0, x);
            let v = self.apply_psi(a0, &inner);
            lin(&[(1, &v), (delta, &Self::unit(x))])
        } else {
            let inner = self.y(r, x);
            self.apply_psi(a0, &inner)
        }
    }

    pub fn apply_psi(&mut self, a: usize, v: &IVec) -> IVec {
        let mut terms = Vec::new();
        for &(d, c) in v {
            let img = self.psi(a, d);
            terms.extend(img.iter().map(|&(i, k)| (i, k.checked_mul(c).expect("coefficient overflow"))));
        }
        merge(terms)
    }

    pub fn apply_y(&mut self, r: usize, v: &IVec) -> IVec {
        let mut terms = Vec::new();
        for &(d, c) in v {
            let img = self.y(r, d);
            terms.extend(img.iter().map(|&(i, k)| (i, k.checked_mul(c).expect("coefficient overflow"))));
        }
        merge(terms)
    }

    /// `psi_{a_1} ... psi_{a_k} z` for an arbitrary word.
    fn word_vector(&mut self, word: &[u8]) -> Shared {
        if let Some(v) = self.word_memo.get(word) {
            return v.clone();
        }
        let v = if word.is_empty() {
            Self::unit(0)
        } else {
            let rest = self.word_vector(&word[1..]);
            self.apply_psi(word[0] as usize, &rest)
        };
        let v = Rc::new(v);
        self.word_memo.insert(word.to_vec(), v.clone());
        v
    }

    /// `psi_W z - psi_T z` for two reduced words of the same permutation.
    fn diffvec(&mut self, w: &[u8], t: &[u8]) -> IVec {
        if w == t {
            return Vec::new();
        }
        if w[0] == t[0] {
            let inner = self.diffvec(&w[1..], &t[1..]);
            return self.apply_psi(w[0] as usize, &inner);
        }
        let (w2, err) = self.to_front(w, t[0]);
        let inner = self.diffvec(&w2, &t[1..]);
        let v = self.apply_psi(t[0] as usize, &inner);
        lin(&[(1, &err), (1, &v)])
    }

    /// Rewrites `psi_W z = psi_a psi_{W'} z + err` where `s_a` is a left
    /// descent of the permutation of the reduced word `W`.
    fn to_front(&mut self, w: &[u8], a: u8) -> (Vec<u8>, Shared) {
        if w[0] == a {
            return (w[1..].to_vec(), Rc::new(Vec::new()));
        }
        let key = (w.to_vec(), a);
        if let Some(hit) = self.front_memo.get(&key) {
            return hit.clone();
        }
        let b = w[0];
        let v = &w[1..];
        let out = if a.abs_diff(b) > 1 {
            let (v2, e) = self.to_front(v, a);
            let mut nw = vec![b];
            nw.extend_from_slice(&v2);
            (nw, Rc::new(self.apply_psi(b as usize, &e)))
        } else {
            let (v2, e1) = self.to_front(v, a);
            let (v3, e2) = self.to_front(&v2, b);
            let t1 = self.apply_psi(b as usize, &e1);
            let t2 = {
                let x = self.apply_psi(a as usize, &e2);
                self.apply_psi(b as usize, &x)
            };
            let r = a.min(b) as usize;
            let base = self.word_vector(&v3);
            let corr = self.braid_correction(r, &v3, &base);
            let sign = if b as usize == r { 1 } else { -1 };
            let mut nw = vec![b, a];
            nw.extend_from_slice(&v3);
            (nw, Rc::new(lin(&[(1, &t1), (1, &t2), (sign, &corr)])))
        };
        self.front_memo.insert(key, out.clone());
        out
    }

    /// `(psi_r psi_{r+1} psi_r - psi_{r+1} psi_r psi_{r+1}) e(j)` applied to
    /// `psi_{V} z`, with `j` its residue sequence.
    fn braid_correction(&mut self, r: usize, v: &[u8], base: &IVec) -> IVec {
        let mut j = self.ilam.clone();
        for &x in v.iter().rev() {
            j.swap(x as usize - 1, x as usize);
        }
        let (p, q, s) = (j[r - 1], j[r], j[r + 1]);
        if s != p {
            return Vec::new();
        }
        let cfg = self.cfg.clone();
        if cfg.arrow(p, q) {
            base.clone()
        } else if cfg.arrow(q, p) {
            lin(&[(-1, base)])
        } else if cfg.double_arrow(p, q) {
            let a = self.apply_y(r, base);
            let b = self.apply_y(r + 1, base);
            let c = self.apply_y(r + 2, base);
            lin(&[(1, &a), (-2, &b), (1, &c)])
        } else {
            Vec::new()
        }
    }

    /// Applies a formal algebra element to a vector of `M`.
    pub fn apply_element(&mut self, x: &AlgebraElement, v: &IVec) -> IVec {
        let mut total = Vec::new();
        for (word, c) in x.terms() {
            let mut cur = v.clone();
            for g in word.iter().rev() {
                cur = match g {
                    Generator::Psi(a) => self.apply_psi(*a, &cur),
                    Generator::Y(r) => self.apply_y(*r, &cur),
                    Generator::Idem(i) => cur.into_iter().filter(|(d, _)| self.residues[*d as usize] == *i).collect(),
                    Generator::IdemPattern { offset, pattern } => cur
                        .into_iter()
                        .filter(|(d, _)| {
                            self.residues[*d as usize].get(*offset..offset + pattern.len()) == Some(pattern.as_slice())
                        })
                        .collect(),
                };
                if cur.is_empty() {
                    break;
                }
            }
            total.extend(cur.into_iter().map(|(i, k)| (i, k * c)));
        }
        merge(total)
    }

    /// `psi_{word} z` for a `psi`-word given by indices.
    pub fn apply_word_to_seed(&mut self, word: &[usize]) -> IVec {
        let w: Vec<u8> = word.iter().map(|&a| a as u8).collect();
        (*self.word_vector(&w)).clone()
    }
}

/// Minimal length left coset representatives of the Young subgroup whose
/// blocks are consecutive runs of the given lengths: permutations increasing
/// on each block.
fn coset_reps(blocks: &[usize]) -> Vec<Permutation> {
    let n: usize = blocks.iter().sum();
    let mut starts = Vec::with_capacity(blocks.len());
    let mut s = 0;
    for &b in blocks {
        starts.push(s);
        s += b;
    }
    let mut out = Vec::new();
    let mut fill = vec![0u8; n];
    let mut used = vec![0usize; blocks.len()];
    fn rec(
        v: usize,
        n: usize,
        blocks: &[usize],
        starts: &[usize],
        used: &mut [usize],
        fill: &mut [u8],
        out: &mut Vec<Permutation>,
    ) {
        if v == n {
            out.push(Permutation::from_raw(fill.to_vec()));
            return;
        }
        for k in 0..blocks.len() {
            if used[k] < blocks[k] {
                fill[starts[k] + used[k]] = v as u8;
                used[k] += 1;
                rec(v + 1, n, blocks, starts, used, fill, out);
                used[k] -= 1;
            }
        }
    }
    rec(0, n, blocks, &starts, &mut used, &mut fill, &mut out);
    out
}

/// The quotient `M / N` in the basis `{u_{w_t}}`, before certification.
pub struct Quotient {
    pub std: Vec<Tableau>,
    pub degrees: Vec<i64>,
    pub residues: Vec<Vec<Residue>>,
    /// `psi[a-1]` and `y[r-1]` as matrices on the standard basis.
    pub psi: Vec<SparseMatrix>,
    pub y: Vec<SparseMatrix>,
    pub stats: EngineStats,
}

/// Sizes recorded while building a model.
#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct EngineStats {
    pub induced_dim: usize,
    pub blocks: usize,
    pub relations_dim: usize,
    pub garnir_vectors: usize,
}

type BlockKey = (Vec<Residue>, i64);

struct Block {
    /// Members in elimination order: non-standard first, then standard.
    members: Vec<u32>,
    nstd: usize,
    ech: Echelon,
}

impl Block {
    fn full(&self) -> bool {
        self.ech.dim() + self.nstd == self.members.len()
    }
}

/// Builds the quotient `M / N` for `lambda`.
pub fn build_quotient(
    lambda: &Multipartition,
    cfg: &AlgebraConfig,
    conv: WordConvention,
    variant: GarnirVariant,
) -> Result<(InducedModule, Quotient)> {
    let field = cfg.field;
    let mut m = InducedModule::new(lambda, cfg, conv)?;
    let n = m.n;
    let std = enumerate_std(lambda);
    let std_idx: Vec<u32> = std
        .iter()
        .map(|t| m.index_of(&t.perm_col()).expect("standard tableaux are coset representatives"))
        .collect();
    let mut is_std = vec![false; m.dim()];
    for &d in &std_idx {
        is_std[d as usize] = true;
    }
    // Blocks keyed by (residue sequence, degree).
    let mut block_of: Vec<(usize, usize)> = vec![(0, 0); m.dim()];
    let mut keys: BTreeMap<BlockKey, usize> = BTreeMap::new();
    let mut members: Vec<Vec<u32>> = Vec::new();
    for d in 0..m.dim() as u32 {
        let key = (m.residue(d).to_vec(), m.degree(d));
        let next = keys.len();
        let b = *keys.entry(key).or_insert(next);
        if b == members.len() {
            members.push(Vec::new());
        }
        members[b].push(d);
    }
    let mut blocks: Vec<Block> = members
        .into_iter()
        .map(|mut mem| {
            mem.sort_by_key(|&d| (is_std[d as usize], d));
            let nstd = mem.iter().filter(|&&d| is_std[d as usize]).count();
            Block { members: mem, nstd, ech: Echelon::new(field) }
        })
        .collect();
    for (b, blk) in blocks.iter().enumerate() {
        for (i, &d) in blk.members.iter().enumerate() {
            block_of[d as usize] = (b, i);
        }
    }
    let to_local = |v: &IVec, block_of: &[(usize, usize)]| -> Result<(usize, SparseVec)> {
        let b = block_of[v[0].0 as usize].0;
        let mut out = Vec::with_capacity(v.len());
        for &(d, c) in v {
            let (bb, i) = block_of[d as usize];
            if bb != b {
                return inconsistent("a relation vector is not homogeneous");
            }
            out.push((i, Scalar::from_i64(c, field)));
        }
        out.sort_by_key(|t| t.0);
        Ok((b, out))
    };

    let mut queue: VecDeque<(usize, SparseVec)> = VecDeque::new();
    let garnir = column_garnir_nodes(lambda);
    let mut stats = EngineStats { induced_dim: m.dim(), blocks: blocks.len(), ..Default::default() };
    for node in &garnir {
        let g = garnir_element_variant(lambda, node, cfg, variant)?;
        let v = m.apply_element(&g, &vec![(0, 1)]);
        if v.is_empty() {
            continue;
        }
        stats.garnir_vectors += 1;
        let (b, local) = to_local(&v, &block_of)?;
        if let Some(row) = blocks[b].ech.insert(&local) {
            queue.push_back((b, row));
        }
    }
    while let Some((b, row)) = queue.pop_front() {
        let global: Vec<(u32, Scalar)> = row.iter().map(|(i, c)| (blocks[b].members[*i], c.clone())).collect();
        let d0 = global[0].0;
        let res = m.residue(d0).to_vec();
        let deg = m.degree(d0);
        let gens = (1..n).map(|a| (true, a)).chain((1..=n).map(|r| (false, r)));
        for (is_psi, a) in gens {
            let (tres, tdeg) = if is_psi {
                let mut t = res.clone();
                t.swap(a - 1, a);
                (t.clone(), deg - cfg.cartan(res[a - 1], res[a]))
            } else {
                (res.clone(), deg + 2)
            };
            let Some(&tb) = keys.get(&(tres, tdeg)) else { continue };
            if blocks[tb].full() {
                continue;
            }
            // Apply the generator to each term and accumulate over the field.
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (d, c) in &global {
                let img = if is_psi { m.psi(a, *d) } else { m.y(a, *d) };
                for &(e, k) in img.iter() {
                    let (bb, i) = block_of[e as usize];
                    if bb != tb {
                        return inconsistent("generator action left its block");
                    }
                    let term = c * &Scalar::from_i64(k, field);
                    let slot = acc.entry(i).or_insert_with(|| Scalar::zero(field));
                    *slot = &*slot + &term;
                }
            }
            let v: SparseVec = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if v.is_empty() {
                continue;
            }
            if let Some(new_row) = blocks[tb].ech.insert(&v) {
                if new_row[0].0 >= blocks[tb].members.len() - blocks[tb].nstd {
                    return inconsistent(format!(
                        "relations reach a standard basis vector of {lambda} (Garnir variant {variant:?})"
                    ));
                }
                queue.push_back((tb, new_row));
            }
        }
    }
    for blk in &blocks {
        if !blk.full() {
            return inconsistent(format!(
                "relations span {} of {} expected dimensions in a block of {lambda}",
                blk.ech.dim(),
                blk.members.len() - blk.nstd
            ));
        }
        if blk.ech.pivots().any(|p| p >= blk.members.len() - blk.nstd) {
            return inconsistent("relations reach a standard basis vector");
        }
    }
    stats.relations_dim = blocks.iter().map(|b| b.ech.dim()).sum();

    // Read off the action on the standard basis.
    let mut pos_in_std: HashMap<u32, usize> = HashMap::new();
    for (i, &d) in std_idx.iter().enumerate() {
        pos_in_std.insert(d, i);
    }
    let reduce = |v: &IVec, blocks: &[Block]| -> SparseVec {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for &(d, c) in v {
            let c = Scalar::from_i64(c, field);
            let (b, i) = block_of[d as usize];
            let blk = &blocks[b];
            if is_std[d as usize] {
                let slot = acc.entry(pos_in_std[&d]).or_insert_with(|| Scalar::zero(field));
                *slot = &*slot + &c;
            } else {
                let row = blk.ech.row_with_pivot(i).expect("complete block");
                for (j, k) in row.iter().skip(1) {
                    let e = blk.members[*j];
                    let slot = acc.entry(pos_in_std[&e]).or_insert_with(|| Scalar::zero(field));
                    *slot = &*slot - &(&c * k);
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    };
    let dim = std.len();
    let mut psi = Vec::with_capacity(n.saturating_sub(1));
    for a in 1..n {
        let cols = std_idx.iter().map(|&d| reduce(&m.psi(a, d), &blocks)).collect();
        psi.push(SparseMatrix { nrows: dim, cols });
    }
    let mut y = Vec::with_capacity(n);
    for r in 1..=n {
        let cols = std_idx.iter().map(|&d| reduce(&m.y(r, d), &blocks)).collect();
        y.push(SparseMatrix { nrows: dim, cols });
    }
    let degrees = std_idx.iter().map(|&d| m.degree(d)).collect();
    let residues = std_idx.iter().map(|&d| m.residue(d).to_vec()).collect();
    Ok((m, Quotient { std, degrees, residues, psi, y, stats }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coset_counts() {
        assert_eq!(coset_reps(&[2, 1]).len(), 3);
        assert_eq!(coset_reps(&[2, 4, 1, 1]).len(), 840);
        assert_eq!(coset_reps(&[]).len(), 1);
    }

    #[test]
    fn induced_module_of_a_column_is_one_dimensional() {
        let cfg = AlgebraConfig::finite(3, &[0]);
        let m = InducedModule::new(&"1,1,1".parse().unwrap(), &cfg, WordConvention::LexMin).unwrap();
        assert_eq!(m.dim(), 1);
    }

    #[test]
    fn small_quotient_has_standard_dimension() {
        let cfg = AlgebraConfig::finite(3, &[0]);
        let (_, q) =
            build_quotient(&"2,1".parse().unwrap(), &cfg, WordConvention::LexMin, GarnirVariant::default()).unwrap();
        assert_eq!(q.std.len(), 2);
        assert_eq!(q.degrees, vec![0, 1]);
    }
}
