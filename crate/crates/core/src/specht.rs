//! Concrete graded Specht modules: action matrices on the standard basis,
//! certification against the presentation, row modules through the sign
//! twist, the duality pairing and the dual basis `f_t`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::config::{AlgebraConfig, Residue};
use crate::engine::{build_quotient, EngineStats};
use crate::error::{inconsistent, Error, Result};
use crate::linalg::{dense_from_cols, inverse, sv_add_scaled, sv_get, sv_scale, sv_unit, SparseMatrix, SparseVec};
use crate::partition::{GradedDimension, Multipartition, Node};
use crate::scalar::Scalar;
use crate::symgroup::WordConvention;
use crate::tableau::Tableau;
use crate::words::{
    column_garnir_nodes, garnir_element_variant, psi_word, AlgebraElement, GarnirVariant, Generator,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    Column,
    Row,
}

/// Construction choices for a model.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ModelOptions {
    pub conv: WordConvention,
    /// A fixed Garnir reconstruction; `None` tries the default first and
    /// falls back to the other variants until one certifies.
    pub variant: Option<GarnirVariant>,
}

/// A graded Specht module with explicit generator matrices.
#[derive(Clone, Debug)]
pub struct SpechtModel {
    pub lambda: Multipartition,
    pub cfg: AlgebraConfig,
    pub orientation: Orientation,
    pub conv: WordConvention,
    pub variant: GarnirVariant,
    pub basis: Vec<Tableau>,
    pub degrees: Vec<i64>,
    pub residues: Vec<Vec<Residue>>,
    /// `psi[r-1]` and `y[r-1]`, stored by columns.
    pub psi: Vec<SparseMatrix>,
    pub y: Vec<SparseMatrix>,
    pub stats: EngineStats,
    index: HashMap<Tableau, usize>,
}

impl SpechtModel {
    pub fn n(&self) -> usize {
        self.lambda.size()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn field(&self) -> crate::config::FieldKind {
        self.cfg.field
    }

    /// Index of the seed `z_lambda` (or `z^lambda`) in the basis.
    pub fn seed(&self) -> usize {
        let t = match self.orientation {
            Orientation::Column => Tableau::t_col(&self.lambda),
            Orientation::Row => Tableau::t_row(&self.lambda),
        };
        self.index[&t]
    }

    pub fn index_of(&self, t: &Tableau) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn unit(&self, i: usize) -> SparseVec {
        sv_unit(i, self.field())
    }

    pub fn graded_dimension(&self) -> GradedDimension {
        let mut g = GradedDimension::zero();
        for &d in &self.degrees {
            g.add_degree(d);
        }
        g
    }

    pub fn apply_generator(&self, g: &Generator, v: &SparseVec) -> SparseVec {
        match g {
            Generator::Psi(r) => self.psi[r - 1].apply(v),
            Generator::Y(r) => self.y[r - 1].apply(v),
            Generator::Idem(i) => v.iter().filter(|(j, _)| self.residues[*j] == *i).cloned().collect(),
            Generator::IdemPattern { offset, pattern } => v
                .iter()
                .filter(|(j, _)| self.residues[*j].get(*offset..offset + pattern.len()) == Some(pattern.as_slice()))
                .cloned()
                .collect(),
        }
    }

    /// The action of a formal element on a coordinate vector.
    pub fn act(&self, x: &AlgebraElement, v: &SparseVec) -> Result<SparseVec> {
        if x.n > self.n().max(1) && !x.is_zero() {
            return Err(Error::InvalidInput(format!("element of H_{} acting on a module for H_{}", x.n, self.n())));
        }
        let mut total: SparseVec = Vec::new();
        for (word, c) in x.terms() {
            let mut cur = v.clone();
            for g in word.iter().rev() {
                let ok = match g {
                    Generator::Psi(r) => *r >= 1 && *r < self.n(),
                    Generator::Y(r) => *r >= 1 && *r <= self.n(),
                    _ => true,
                };
                if !ok {
                    return Err(Error::InvalidInput(format!("generator {g} out of range for n = {}", self.n())));
                }
                cur = self.apply_generator(g, &cur);
                if cur.is_empty() {
                    break;
                }
            }
            total = sv_add_scaled(&total, &cur, &Scalar::from_i64(c, self.field()));
        }
        Ok(total)
    }

    /// Applies the `psi`-word with the given indices.
    pub fn act_word(&self, word: &[usize], v: &SparseVec) -> SparseVec {
        let mut cur = v.clone();
        for &a in word.iter().rev() {
            cur = self.psi[a - 1].apply(&cur);
        }
        cur
    }

    /// The preferred word of the basis vector at `i`.
    pub fn basis_word(&self, i: usize) -> Vec<usize> {
        let t = &self.basis[i];
        match self.orientation {
            Orientation::Column => t.perm_col().reduced_word(self.conv),
            Orientation::Row => t.perm_row().reduced_word(self.conv),
        }
    }
}

/// Builds and certifies the column Specht module `S_lambda`.
pub fn build_column_model(lambda: &Multipartition, cfg: &AlgebraConfig) -> Result<SpechtModel> {
    build_column_model_with(lambda, cfg, ModelOptions::default())
}

pub fn build_column_model_with(lambda: &Multipartition, cfg: &AlgebraConfig, opts: ModelOptions) -> Result<SpechtModel> {
    if lambda.level() != cfg.level() {
        return Err(Error::InvalidInput(format!("{lambda} has level {} but kappa has level {}", lambda.level(), cfg.level())));
    }
    let variants = match opts.variant {
        Some(v) => vec![v],
        None => GarnirVariant::all(),
    };
    let mut last = None;
    for variant in variants {
        match build_with_variant(lambda, cfg, opts.conv, variant) {
            Ok(model) => return Ok(model),
            Err(e) => last = Some(e),
        }
    }
    Err(last.expect("at least one variant"))
}

fn build_with_variant(
    lambda: &Multipartition,
    cfg: &AlgebraConfig,
    conv: WordConvention,
    variant: GarnirVariant,
) -> Result<SpechtModel> {
    let (_, q) = build_quotient(lambda, cfg, conv, variant)?;
    let index = q.std.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
    let model = SpechtModel {
        lambda: lambda.clone(),
        cfg: cfg.clone(),
        orientation: Orientation::Column,
        conv,
        variant,
        basis: q.std,
        degrees: q.degrees,
        residues: q.residues,
        psi: q.psi,
        y: q.y,
        stats: q.stats,
        index,
    };
    let report = validate(&model);
    if let Some(fail) = report.first_failure() {
        return inconsistent(format!("model of {lambda} failed {}: {}", fail.name, fail.witness.clone().unwrap_or_default()));
    }
    Ok(model)
}

/// One named check of a validation run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    fn record(&mut self, name: &str, witness: Option<String>) {
        self.checks.push(Check { name: name.to_string(), passed: witness.is_none(), witness });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "ok" } else { "FAIL" };
            match &c.witness {
                Some(w) => writeln!(f, "{mark:4} {} ({w})", c.name)?,
                None => writeln!(f, "{mark:4} {}", c.name)?,
            }
        }
        Ok(())
    }
}

fn first_mismatch(model: &SpechtModel, mut check: impl FnMut(usize) -> Option<String>) -> Option<String> {
    (0..model.dim()).find_map(&mut check)
}

fn lin2(a: &SparseVec, b: &SparseVec, kb: i64, field: crate::config::FieldKind) -> SparseVec {
    sv_add_scaled(a, b, &Scalar::from_i64(kb, field))
}

/// Checks every defining relation of the KLR algebra as an identity of
/// action matrices, plus the presentation of the module.
pub fn validate(model: &SpechtModel) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = model.n();
    let cfg = &model.cfg;
    let field = model.field();
    let psi = |r: usize, v: &SparseVec| model.psi[r - 1].apply(v);
    let y = |r: usize, v: &SparseVec| model.y[r - 1].apply(v);
    let res_of = |v: &SparseVec| -> Option<Vec<Residue>> {
        let first = &model.residues[v.first()?.0];
        v.iter().all(|(j, _)| &model.residues[*j] == first).then(|| first.clone())
    };

    report.record(
        "psi_r e(i) = e(s_r i) psi_r",
        first_mismatch(model, |j| {
            let i = &model.residues[j];
            for r in 1..n {
                let img = psi(r, &model.unit(j));
                let mut t = i.clone();
                t.swap(r - 1, r);
                if img.iter().any(|(k, _)| model.residues[*k] != t) {
                    return Some(format!("psi_{r} on {}", model.basis[j]));
                }
            }
            for r in 1..=n {
                if y(r, &model.unit(j)).iter().any(|(k, _)| model.residues[*k] != *i) {
                    return Some(format!("y_{r} on {}", model.basis[j]));
                }
            }
            None
        }),
    );
    report.record(
        "homogeneity",
        first_mismatch(model, |j| {
            let i = &model.residues[j];
            let d = model.degrees[j];
            for r in 1..n {
                let want = d - cfg.cartan(i[r - 1], i[r]);
                if psi(r, &model.unit(j)).iter().any(|(k, _)| model.degrees[*k] != want) {
                    return Some(format!("psi_{r} on {}", model.basis[j]));
                }
            }
            for r in 1..=n {
                if y(r, &model.unit(j)).iter().any(|(k, _)| model.degrees[*k] != d + 2) {
                    return Some(format!("y_{r} on {}", model.basis[j]));
                }
            }
            None
        }),
    );
    report.record(
        "y_r y_s = y_s y_r",
        first_mismatch(model, |j| {
            let v = model.unit(j);
            for r in 1..=n {
                for s in r + 1..=n {
                    if y(r, &y(s, &v)) != y(s, &y(r, &v)) {
                        return Some(format!("r={r} s={s} on {}", model.basis[j]));
                    }
                }
            }
            None
        }),
    );
    report.record(
        "psi_r y_s = y_s psi_r",
        first_mismatch(model, |j| {
            let v = model.unit(j);
            for r in 1..n {
                for s in (1..=n).filter(|&s| s != r && s != r + 1) {
                    if psi(r, &y(s, &v)) != y(s, &psi(r, &v)) {
                        return Some(format!("r={r} s={s} on {}", model.basis[j]));
                    }
                }
            }
            None
        }),
    );
    report.record(
        "psi_r psi_s = psi_s psi_r",
        first_mismatch(model, |j| {
            let v = model.unit(j);
            for r in 1..n {
                for s in r + 2..n {
                    if psi(r, &psi(s, &v)) != psi(s, &psi(r, &v)) {
                        return Some(format!("r={r} s={s} on {}", model.basis[j]));
                    }
                }
            }
            None
        }),
    );
    report.record(
        "y psi relations",
        first_mismatch(model, |j| {
            let v = model.unit(j);
            let i = &model.residues[j];
            for r in 1..n {
                let delta = (i[r - 1] == i[r]) as i64;
                let lhs = y(r, &psi(r, &v));
                let rhs = lin2(&psi(r, &y(r + 1, &v)), &v, -delta, field);
                if lhs != rhs {
                    return Some(format!("y_r psi_r, r={r} on {}", model.basis[j]));
                }
                let lhs = y(r + 1, &psi(r, &v));
                let rhs = lin2(&psi(r, &y(r, &v)), &v, delta, field);
                if lhs != rhs {
                    return Some(format!("y_(r+1) psi_r, r={r} on {}", model.basis[j]));
                }
            }
            None
        }),
    );
    report.record(
        "quadratic relation",
        first_mismatch(model, |j| {
            let v = model.unit(j);
            let i = &model.residues[j];
            for r in 1..n {
                let (p, q) = (i[r - 1], i[r]);
                let lhs = psi(r, &psi(r, &v));
                let rhs = if p == q {
                    Vec::new()
                } else if cfg.cartan(p, q) == 0 {
                    v.clone()
                } else if cfg.double_arrow(p, q) {
                    let w = lin2(&y(r + 1, &v), &y(r, &v), -1, field);
                    lin2(&y(r, &w), &y(r + 1, &w), -1, field)
                } else if cfg.arrow(p, q) {
                    lin2(&y(r + 1, &v), &y(r, &v), -1, field)
                } else {
                    lin2(&y(r, &v), &y(r + 1, &v), -1, field)
                };
                if lhs != rhs {
                    return Some(format!("r={r} on {}", model.basis[j]));
                }
            }
            None
        }),
    );
    report.record(
        "braid relation",
        first_mismatch(model, |j| {
            let v = model.unit(j);
            let i = &model.residues[j];
            for r in 1..n.saturating_sub(1) {
                let lhs = psi(r, &psi(r + 1, &psi(r, &v)));
                let base = psi(r + 1, &psi(r, &psi(r + 1, &v)));
                let (p, q, s) = (i[r - 1], i[r], i[r + 1]);
                let rhs = if s != p {
                    base
                } else if cfg.arrow(p, q) {
                    lin2(&base, &v, 1, field)
                } else if cfg.arrow(q, p) {
                    lin2(&base, &v, -1, field)
                } else if cfg.double_arrow(p, q) {
                    let t = lin2(&base, &y(r, &v), 1, field);
                    let t = lin2(&t, &y(r + 1, &v), -2, field);
                    lin2(&t, &y(r + 2, &v), 1, field)
                } else {
                    base
                };
                if lhs != rhs {
                    return Some(format!("r={r} on {}", model.basis[j]));
                }
            }
            None
        }),
    );

    // The presentation of the module on its seed.
    let seed = model.seed();
    let z = model.unit(seed);
    let (seed_tab, seed_res) = match model.orientation {
        Orientation::Column => {
            let t = Tableau::t_col(&model.lambda);
            let r = t.residue_sequence(cfg);
            (t, r)
        }
        Orientation::Row => {
            let t = Tableau::t_row(&model.lambda);
            let r = t.residue_sequence(cfg);
            (t, r)
        }
    };
    report.record(
        "seed idempotent",
        (res_of(&z).as_ref() != Some(&seed_res)).then(|| format!("seed residue {:?}", model.residues[seed])),
    );
    report.record(
        "seed y relations",
        (1..=n).find(|&r| !y(r, &z).is_empty()).map(|r| format!("y_{r} z != 0")),
    );
    let pos = seed_tab.positions();
    report.record(
        "seed psi relations",
        (1..n)
            .filter(|&r| {
                let (a, b) = (pos[r - 1], pos[r]);
                match model.orientation {
                    Orientation::Column => a.m == b.m && a.c == b.c && a.r + 1 == b.r,
                    Orientation::Row => a.m == b.m && a.r == b.r && a.c + 1 == b.c,
                }
            })
            .find(|&r| !psi(r, &z).is_empty())
            .map(|r| format!("psi_{r} z != 0")),
    );
    if model.orientation == Orientation::Column {
        let mut witness = None;
        for node in column_garnir_nodes(&model.lambda) {
            let ok = garnir_element_variant(&model.lambda, &node, cfg, model.variant)
                .and_then(|g| model.act(&g, &z))
                .map(|v| v.is_empty())
                .unwrap_or(false);
            if !ok {
                witness = Some(format!("g_A z != 0 for A = {node}"));
                break;
            }
        }
        report.record("seed Garnir relations", witness);
    }
    report.record(
        "standard basis",
        (0..model.dim()).find_map(|j| {
            let v = model.act_word(&model.basis_word(j), &z);
            (v != model.unit(j)).then(|| format!("psi word of {} does not give its basis vector", model.basis[j]))
        }),
    );
    report.record(
        "graded dimension",
        (0..model.dim()).find_map(|j| {
            let t = &model.basis[j];
            let want = match model.orientation {
                Orientation::Column => t.codegree(cfg),
                Orientation::Row => t.degree(cfg),
            };
            let res = t.residue_sequence(cfg);
            (want.ok() != Some(model.degrees[j]) || res != model.residues[j])
                .then(|| format!("{t} has degree {} and residues {:?}", model.degrees[j], model.residues[j]))
        }),
    );
    let expected = crate::tableau::enumerate_std(&model.lambda).len();
    report.record(
        "dimension",
        (expected != model.dim()).then(|| format!("{} basis vectors, {expected} standard tableaux", model.dim())),
    );
    report.record(
        "cyclotomic relation",
        first_mismatch(model, |j| {
            if n == 0 {
                return None;
            }
            let i1 = model.residues[j][0];
            let k = cfg.kappa.iter().filter(|&&x| x == i1).count();
            let mut v = model.unit(j);
            for _ in 0..k {
                v = y(1, &v);
            }
            (!v.is_empty()).then(|| format!("y_1^{k} on {}", model.basis[j]))
        }),
    );
    report
}

/// The row Specht module `S^lambda`, obtained from the column module of
/// `(lambda', kappa')` through the sign twist. The basis vector of `s` is
/// `v^s = (-1)^{l(w^s)} v_{s'}`.
pub fn build_row_model(lambda: &Multipartition, cfg: &AlgebraConfig) -> Result<SpechtModel> {
    build_row_model_with(lambda, cfg, ModelOptions::default())
}

pub fn build_row_model_with(lambda: &Multipartition, cfg: &AlgebraConfig, opts: ModelOptions) -> Result<SpechtModel> {
    let col = build_column_model_with(&lambda.conjugate(), &cfg.conjugate(), opts)?;
    Ok(twist_to_row(&col, lambda, cfg))
}

fn twist_to_row(col: &SpechtModel, lambda: &Multipartition, cfg: &AlgebraConfig) -> SpechtModel {
    let field = col.field();
    let basis: Vec<Tableau> = col.basis.iter().map(|t| t.conjugate()).collect();
    let signs: Vec<Scalar> = col
        .basis
        .iter()
        .map(|t| Scalar::from_i64(if t.perm_col().length() % 2 == 0 { 1 } else { -1 }, field))
        .collect();
    let twist = |m: &SparseMatrix| SparseMatrix {
        nrows: m.nrows,
        cols: m
            .cols
            .iter()
            .enumerate()
            .map(|(j, c)| c.iter().map(|(i, x)| (*i, -&(&(x * &signs[*i]) * &signs[j]))).collect())
            .collect(),
    };
    let index = basis.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
    SpechtModel {
        lambda: lambda.clone(),
        cfg: cfg.clone(),
        orientation: Orientation::Row,
        conv: col.conv,
        variant: col.variant,
        basis,
        degrees: col.degrees.clone(),
        residues: col.residues.iter().map(|r| r.iter().map(|&x| cfg.neg(x)).collect()).collect(),
        psi: col.psi.iter().map(twist).collect(),
        y: col.y.iter().map(twist).collect(),
        stats: col.stats.clone(),
        index,
    }
}

/// The pairing matrix of a column model: `P(s, t)` is the coefficient of
/// `v_{t^lambda}` in `tau(psi^s) v_t`. Rows and columns follow the basis order.
pub fn pairing_matrix(model: &SpechtModel) -> Result<Vec<Vec<Scalar>>> {
    if model.orientation != Orientation::Column {
        return Err(Error::InvalidInput("pairing_matrix needs a column model".into()));
    }
    let top = model.index[&Tableau::t_row(&model.lambda)];
    let field = model.field();
    let mut p = vec![vec![Scalar::zero(field); model.dim()]; model.dim()];
    for (si, s) in model.basis.iter().enumerate() {
        let word: Vec<usize> = s.perm_row().reduced_word(model.conv).into_iter().rev().collect();
        for ti in 0..model.dim() {
            let v = model.act_word(&word, &model.unit(ti));
            if let Some(c) = sv_get(&v, top) {
                p[si][ti] = c.clone();
            }
        }
    }
    Ok(p)
}

/// The basis `{f_t}` of `S_mu` dual to the row basis `{v^t}` of `S^mu`,
/// transported by the isomorphism sending `z_mu` to `f^{t_mu}`.
///
/// Writing `v_s = sum_t Q(s, t) f_t`, the coefficient `Q(s, t)` is the
/// coefficient of `v^{t_mu}` in `tau(psi_s) v^t`, computed in the row module.
#[derive(Clone, Debug)]
pub struct DualBasis {
    pub q: Vec<Vec<Scalar>>,
    /// Entry `t` is `f_t` in coordinates on `{v_s}`.
    pub f: Vec<SparseVec>,
}

impl DualBasis {
    /// Coordinates on `{f_t}` of a vector given on `{v_s}`.
    pub fn to_f_coords(&self, x: &SparseVec) -> SparseVec {
        let dim = self.q.len();
        let field = x.first().map(|(_, c)| c.field());
        let Some(field) = field else { return Vec::new() };
        let mut out = Vec::new();
        for t in 0..dim {
            let mut acc = Scalar::zero(field);
            for (s, c) in x {
                let q = &self.q[*s][t];
                if !q.is_zero() {
                    acc = &acc + &(c * q);
                }
            }
            if !acc.is_zero() {
                out.push((t, acc));
            }
        }
        out
    }

    /// Coordinates on `{v_s}` of a vector given on `{f_t}`.
    pub fn from_f_coords(&self, a: &SparseVec) -> SparseVec {
        let mut out = Vec::new();
        for (t, c) in a {
            out = sv_add_scaled(&out, &self.f[*t], c);
        }
        out
    }
}

/// The vectors `f_t` in coordinates on `{v_s}`, one per basis tableau.
pub fn dual_basis_f(model: &SpechtModel) -> Result<Vec<SparseVec>> {
    Ok(dual_basis(model)?.f)
}

pub fn dual_basis(model: &SpechtModel) -> Result<DualBasis> {
    if model.orientation != Orientation::Column {
        return Err(Error::InvalidInput("dual_basis_f needs a column model".into()));
    }
    let opts = ModelOptions { conv: model.conv, variant: Some(model.variant) };
    let row = build_row_model_with(&model.lambda, &model.cfg, opts)
        .or_else(|_| build_row_model_with(&model.lambda, &model.cfg, ModelOptions { conv: model.conv, variant: None }))?;
    dual_basis_from_row(model, &row)
}

/// As [`dual_basis`] with the row model supplied.
pub fn dual_basis_from_row(model: &SpechtModel, row: &SpechtModel) -> Result<DualBasis> {
    let field = model.field();
    let dim = model.dim();
    let top = row.index[&Tableau::t_col(&model.lambda)];
    let row_pos: Vec<usize> = model.basis.iter().map(|t| row.index[t]).collect();
    let mut q = vec![vec![Scalar::zero(field); dim]; dim];
    for (si, s) in model.basis.iter().enumerate() {
        let word: Vec<usize> = s.perm_col().reduced_word(model.conv).into_iter().rev().collect();
        for ti in 0..dim {
            let v = row.act_word(&word, &row.unit(row_pos[ti]));
            if let Some(c) = sv_get(&v, top) {
                q[si][ti] = c.clone();
            }
        }
    }
    let qinv = inverse(&q, field).ok_or_else(|| Error::Inconsistency("the duality pairing is singular".into()))?;
    let f = (0..dim)
        .map(|t| (0..dim).filter(|&s| !qinv[t][s].is_zero()).map(|s| (s, qinv[t][s].clone())).collect())
        .collect();
    Ok(DualBasis { q, f })
}

/// Column models shared between computations, keyed by shape, multicharge
/// and word convention. Safe to use from several threads.
#[derive(Default)]
pub struct ModelCache {
    models: Mutex<HashMap<(Multipartition, AlgebraConfig, WordConvention), Arc<SpechtModel>>>,
    duals: Mutex<HashMap<(Multipartition, AlgebraConfig, WordConvention), Arc<DualBasis>>>,
}

impl ModelCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn column(&self, lambda: &Multipartition, cfg: &AlgebraConfig) -> Result<Arc<SpechtModel>> {
        self.column_with(lambda, cfg, WordConvention::default())
    }

    pub fn column_with(&self, lambda: &Multipartition, cfg: &AlgebraConfig, conv: WordConvention) -> Result<Arc<SpechtModel>> {
        let key = (lambda.clone(), cfg.clone(), conv);
        if let Some(m) = self.models.lock().expect("cache lock").get(&key) {
            return Ok(m.clone());
        }
        let model = Arc::new(build_column_model_with(lambda, cfg, ModelOptions { conv, variant: None })?);
        self.models.lock().expect("cache lock").insert(key, model.clone());
        Ok(model)
    }

    pub fn dual(&self, lambda: &Multipartition, cfg: &AlgebraConfig) -> Result<Arc<DualBasis>> {
        let key = (lambda.clone(), cfg.clone(), WordConvention::default());
        if let Some(d) = self.duals.lock().expect("cache lock").get(&key) {
            return Ok(d.clone());
        }
        let col = self.column(lambda, cfg)?;
        let row = twist_to_row(&*self.column(&lambda.conjugate(), &cfg.conjugate())?, lambda, cfg);
        let d = Arc::new(dual_basis_from_row(&col, &row)?);
        self.duals.lock().expect("cache lock").insert(key, d.clone());
        Ok(d)
    }

    pub fn len(&self) -> usize {
        self.models.lock().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Degrees of the entries of `v`, or `None` when `v` is not homogeneous.
pub fn vector_degree(model: &SpechtModel, v: &SparseVec) -> Option<i64> {
    let d = model.degrees[v.first()?.0];
    v.iter().all(|(j, _)| model.degrees[*j] == d).then_some(d)
}

/// Matrix of the pairing as sparse columns, used by reports.
pub fn pairing_columns(model: &SpechtModel) -> Result<Vec<SparseVec>> {
    let p = pairing_matrix(model)?;
    let dim = model.dim();
    Ok((0..dim).map(|t| (0..dim).filter(|&s| !p[s][t].is_zero()).map(|s| (s, p[s][t].clone())).collect()).collect())
}

/// Re-expresses the dense square matrix from sparse columns (for tests).
pub fn dense(cols: &[SparseVec], dim: usize, field: crate::config::FieldKind) -> Vec<Vec<Scalar>> {
    dense_from_cols(cols, dim, field)
}

/// `psi_t z` computed with the given word instead of the preferred one.
pub fn seed_word_vector(model: &SpechtModel, word: &[usize]) -> SparseVec {
    model.act_word(word, &model.unit(model.seed()))
}

/// `sum_i c_i v_i` from tableau-indexed coefficients.
pub fn vector_from_tableaux(model: &SpechtModel, terms: &[(Tableau, Scalar)]) -> Result<SparseVec> {
    let mut v = Vec::new();
    for (t, c) in terms {
        let i = model.index_of(t).ok_or_else(|| Error::InvalidInput(format!("{t} is not a standard {}-tableau", model.lambda)))?;
        v = sv_add_scaled(&v, &model.unit(i), c);
    }
    Ok(v)
}

/// Scales `v` so that the coefficient at index `i` becomes 1.
pub fn normalise_at(v: &SparseVec, i: usize) -> SparseVec {
    match sv_get(v, i) {
        Some(c) => sv_scale(v, &c.inv()),
        None => v.clone(),
    }
}

/// The element `psi_w` as an algebra element for a list of indices.
pub fn psi_element(n: usize, word: &[usize]) -> AlgebraElement {
    AlgebraElement::from_word(n, psi_word(word))
}

/// Residue of a node, re-exported for report code.
pub fn node_residue(a: &Node, cfg: &AlgebraConfig) -> Residue {
    a.residue(cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn one_box() {
        let cfg = AlgebraConfig::finite(3, &[0]);
        let m = build_column_model(&mp("1"), &cfg).unwrap();
        assert_eq!(m.dim(), 1);
        assert!(m.y[0].cols[0].is_empty());
    }

    #[test]
    fn two_boxes_in_a_row() {
        let cfg = AlgebraConfig::finite(3, &[0]);
        let m = build_column_model(&mp("2"), &cfg).unwrap();
        assert_eq!(m.dim(), 1);
        assert!(m.psi[0].cols[0].is_empty());
    }

    #[test]
    fn hook_graded_dimension() {
        let cfg = AlgebraConfig::finite(3, &[0]);
        let m = build_column_model(&mp("2,1"), &cfg).unwrap();
        assert_eq!(m.graded_dimension().to_string(), "1 + v");
        let r = build_row_model(&mp("2,1"), &cfg).unwrap();
        assert!(validate(&r).passed(), "{}", validate(&r));
        assert_eq!(r.graded_dimension().to_string(), "1 + v");
    }

    #[test]
    fn empty_multipartition() {
        let cfg = AlgebraConfig::finite(2, &[0, 1]);
        let m = build_column_model(&Multipartition::empty(2), &cfg).unwrap();
        assert_eq!(m.dim(), 1);
        assert_eq!(m.degrees, vec![0]);
    }
}
