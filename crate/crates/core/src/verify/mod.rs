//! Executable checks of the row and column removal theorems, the duality
//! theorem and the dominated-hom theorem, single instances or sweeps.

pub mod lemmas;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::AlgebraConfig;
use crate::error::{Error, Result};
use crate::hom::{hom_space, product_hom, row_join_candidate, HomBasis};
use crate::linalg::same_span;
use crate::partition::{GradedDimension, Multipartition};
use crate::specht::ModelCache;

/// The checks that can be run by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Theorem {
    /// Certification of the column models.
    Validate,
    /// `deg(t) + codeg(t) = df(lambda)`.
    Degdef,
    /// Bruhat order on tableaux against the shape criteria.
    Brudom,
    /// Graded column removal.
    Cr,
    /// Graded row removal.
    Rr,
    /// Final column removal.
    Fcr,
    /// Generalised column removal and spanning by product homomorphisms.
    Gcr,
    /// Generalised row removal.
    Grr,
    /// Dominated homs for conjugate pairs.
    Homconj,
    /// Every homomorphism is dominated when `e != 2` and `kappa` is distinct.
    Domhom,
    /// Decomposable Specht modules outside those hypotheses.
    Witnesses,
    /// The row-join candidate (conjectural, report only).
    Exprow,
    /// Standard-basis lemmas on the module action.
    Lemmas,
    /// Independence of the dominated span from the reduced-word choice.
    Convention,
}

impl Theorem {
    pub const ALL: [Theorem; 14] = [
        Theorem::Validate,
        Theorem::Degdef,
        Theorem::Brudom,
        Theorem::Cr,
        Theorem::Rr,
        Theorem::Fcr,
        Theorem::Gcr,
        Theorem::Grr,
        Theorem::Homconj,
        Theorem::Domhom,
        Theorem::Witnesses,
        Theorem::Exprow,
        Theorem::Lemmas,
        Theorem::Convention,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::Validate => "validate",
            Theorem::Degdef => "degdef",
            Theorem::Brudom => "brudom",
            Theorem::Cr => "cr",
            Theorem::Rr => "rr",
            Theorem::Fcr => "fcr",
            Theorem::Gcr => "gcr",
            Theorem::Grr => "grr",
            Theorem::Homconj => "homconj",
            Theorem::Domhom => "domhom",
            Theorem::Witnesses => "witnesses",
            Theorem::Exprow => "exprow",
            Theorem::Lemmas => "lemmas",
            Theorem::Convention => "convention",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown theorem id {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
    /// The computation itself failed (an engine inconsistency).
    Error,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "not-applicable",
            Verdict::Error => "error",
        })
    }
}

/// The data identifying one checked instance.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<String>,
    pub e: String,
    pub kappa: Vec<i64>,
    pub field: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
}

impl Instance {
    pub fn new(cfg: &AlgebraConfig, lambda: Option<&Multipartition>, mu: Option<&Multipartition>) -> Self {
        Instance {
            lambda: lambda.map(|l| l.to_string()),
            mu: mu.map(|m| m.to_string()),
            e: cfg.e.to_string(),
            kappa: cfg.kappa.clone(),
            field: cfg.field.to_string(),
            ..Default::default()
        }
    }

    fn with(mut self, c: Option<usize>, r: Option<usize>, m: Option<usize>) -> Self {
        self.c = c;
        self.r = r;
        self.m = m;
        self
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k: Vec<String> = self.kappa.iter().map(|x| x.to_string()).collect();
        write!(f, "e={} kappa={}", self.e, k.join(","))?;
        if let Some(l) = &self.lambda {
            write!(f, " lambda={l}")?;
        }
        if let Some(m) = &self.mu {
            write!(f, " mu={m}")?;
        }
        for (name, v) in [("c", self.c), ("r", self.r), ("m", self.m)] {
            if let Some(v) = v {
                write!(f, " {name}={v}")?;
            }
        }
        Ok(())
    }
}

/// The outcome of one check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub instance: Instance,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub left: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right: Option<String>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Report-only checks never count as failures.
    pub hard: bool,
}

impl VerificationReport {
    fn new(theorem: Theorem, instance: Instance) -> Self {
        VerificationReport { theorem, instance, left: None, right: None, verdict: Verdict::Pass, witness: None, hard: true }
    }

    fn not_applicable(theorem: Theorem, instance: Instance, why: impl Into<String>) -> Self {
        VerificationReport { verdict: Verdict::NotApplicable, witness: Some(why.into()), ..Self::new(theorem, instance) }
    }

    fn compare(theorem: Theorem, instance: Instance, left: &GradedDimension, right: &GradedDimension) -> Self {
        let mut rep = Self::new(theorem, instance);
        rep.left = Some(left.to_string());
        rep.right = Some(right.to_string());
        if !left.same_as(right) {
            rep.verdict = Verdict::Fail;
            rep.witness = Some(format!("{left} != {right}"));
        }
        rep
    }

    fn from_result(theorem: Theorem, instance: Instance, r: Result<VerificationReport>) -> Self {
        r.unwrap_or_else(|e| VerificationReport {
            verdict: Verdict::Error,
            witness: Some(e.to_string()),
            ..Self::new(theorem, instance)
        })
    }

    fn fail(mut self, witness: impl Into<String>) -> Self {
        self.verdict = Verdict::Fail;
        self.witness = Some(witness.into());
        self
    }

    pub fn is_failure(&self) -> bool {
        self.hard && matches!(self.verdict, Verdict::Fail | Verdict::Error)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialise")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}] {}", self.theorem, self.instance, self.verdict)?;
        if let (Some(l), Some(r)) = (&self.left, &self.right) {
            write!(f, " ({l} vs {r})")?;
        }
        if let Some(w) = &self.witness {
            write!(f, ": {w}")?;
        }
        Ok(())
    }
}

/// Per-theorem counts over a batch of reports.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub theorem: String,
    pub instances: usize,
    pub passes: usize,
    pub failures: usize,
    pub not_applicable: usize,
    pub report_only_failures: usize,
}

pub fn summarise(reports: &[VerificationReport]) -> Vec<SummaryRow> {
    let mut rows: BTreeMap<Theorem, SummaryRow> = BTreeMap::new();
    for r in reports {
        let row = rows.entry(r.theorem).or_insert_with(|| SummaryRow { theorem: r.theorem.to_string(), ..Default::default() });
        row.instances += 1;
        match r.verdict {
            Verdict::Pass => row.passes += 1,
            Verdict::NotApplicable => row.not_applicable += 1,
            Verdict::Fail | Verdict::Error if r.hard => row.failures += 1,
            Verdict::Fail | Verdict::Error => row.report_only_failures += 1,
        }
    }
    rows.into_values().collect()
}

/// Renders the summary as an aligned text table.
pub fn summary_table(rows: &[SummaryRow]) -> String {
    let mut out = format!("{:<11} {:>9} {:>7} {:>8} {:>6} {:>11}\n", "theorem", "instances", "passes", "failures", "n/a", "report-only");
    for r in rows {
        out.push_str(&format!(
            "{:<11} {:>9} {:>7} {:>8} {:>6} {:>11}\n",
            r.theorem, r.instances, r.passes, r.failures, r.not_applicable, r.report_only_failures
        ));
    }
    out
}

type HomKey = (Multipartition, Multipartition, AlgebraConfig, bool);

/// Shared state for verification: cached models and hom spaces.
#[derive(Default)]
pub struct Verifier {
    pub cache: ModelCache,
    homs: Mutex<HashMap<HomKey, Arc<HomBasis>>>,
}

/// A family of instances: all multipartitions of level `cfg.level()` and
/// size at most `n_max`.
#[derive(Clone, Debug)]
pub struct SweepSpec {
    pub cfg: AlgebraConfig,
    pub n_max: usize,
    /// Random words per module in the lemma suite.
    pub samples: usize,
    /// Seed for every random choice made by a sweep.
    pub seed: u64,
}

impl SweepSpec {
    pub fn new(cfg: AlgebraConfig, n_max: usize) -> Self {
        SweepSpec { cfg, n_max, samples: 100, seed: 0x5eed }
    }

    pub fn shapes(&self) -> Vec<Multipartition> {
        (0..=self.n_max).flat_map(|n| Multipartition::all(self.cfg.level(), n)).collect()
    }

    /// Pairs of the same size and content, the only pairs with nonzero homs.
    pub fn pairs(&self) -> Vec<(Multipartition, Multipartition)> {
        let mut out = Vec::new();
        for n in 0..=self.n_max {
            let all = Multipartition::all(self.cfg.level(), n);
            for l in &all {
                let cl = l.content(&self.cfg);
                for m in &all {
                    if m.content(&self.cfg) == cl {
                        out.push((l.clone(), m.clone()));
                    }
                }
            }
        }
        out
    }
}

fn first_row(l: &Multipartition, m: usize) -> usize {
    l.row_len(m, 1)
}

fn height(l: &Multipartition, m: usize) -> usize {
    l.col_len(m, 1)
}

impl Verifier {
    pub fn new() -> Self {
        Self::default()
    }

    /// The (dominated) hom space, cached.
    pub fn hom(&self, lambda: &Multipartition, mu: &Multipartition, cfg: &AlgebraConfig, dominated: bool) -> Result<Arc<HomBasis>> {
        let key = (lambda.clone(), mu.clone(), cfg.clone(), dominated);
        if let Some(h) = self.homs.lock().expect("hom cache lock").get(&key) {
            return Ok(h.clone());
        }
        let source = self.cache.column(lambda, cfg)?;
        let target = self.cache.column(mu, cfg)?;
        let h = Arc::new(hom_space(&source, &target, dominated)?);
        self.homs.lock().expect("hom cache lock").insert(key, h.clone());
        Ok(h)
    }

    pub fn dhom(&self, lambda: &Multipartition, mu: &Multipartition, cfg: &AlgebraConfig) -> Result<GradedDimension> {
        Ok(self.hom(lambda, mu, cfg, true)?.graded_dimension())
    }

    /// Column removal: the first columns of component `m` have equal length
    /// and later components are empty.
    pub fn verify_cr(&self, lambda: &Multipartition, mu: &Multipartition, m: usize, cfg: &AlgebraConfig) -> VerificationReport {
        let inst = Instance::new(cfg, Some(lambda), Some(mu)).with(None, None, Some(m));
        if m == 0 || m > cfg.level() || lambda.level() != cfg.level() || mu.level() != cfg.level() {
            return VerificationReport::not_applicable(Theorem::Cr, inst, "component out of range");
        }
        if (m + 1..=cfg.level()).any(|j| !lambda.comp(j).is_empty() || !mu.comp(j).is_empty()) {
            return VerificationReport::not_applicable(Theorem::Cr, inst, "components after m are not empty");
        }
        let k = height(lambda, m);
        if k == 0 || k != height(mu, m) {
            return VerificationReport::not_applicable(Theorem::Cr, inst, "first columns differ or are empty");
        }
        let run = || -> Result<VerificationReport> {
            let (_, lr, _, kr) = lambda.split_columns(1, m, &cfg.kappa)?;
            let (_, mr, _, _) = mu.split_columns(1, m, &cfg.kappa)?;
            let left = self.dhom(lambda, mu, cfg)?;
            let right = self.dhom(&lr, &mr, &cfg.with_kappa(&kr))?;
            Ok(VerificationReport::compare(Theorem::Cr, inst.clone(), &left, &right))
        };
        VerificationReport::from_result(Theorem::Cr, inst.clone(), run())
    }

    /// Row removal: the first rows of component `m` have equal length and
    /// earlier components are empty.
    pub fn verify_rr(&self, lambda: &Multipartition, mu: &Multipartition, m: usize, cfg: &AlgebraConfig) -> VerificationReport {
        let inst = Instance::new(cfg, Some(lambda), Some(mu)).with(None, None, Some(m));
        if m == 0 || m > cfg.level() || lambda.level() != cfg.level() || mu.level() != cfg.level() {
            return VerificationReport::not_applicable(Theorem::Rr, inst, "component out of range");
        }
        if (1..m).any(|j| !lambda.comp(j).is_empty() || !mu.comp(j).is_empty()) {
            return VerificationReport::not_applicable(Theorem::Rr, inst, "components before m are not empty");
        }
        let k = first_row(lambda, m);
        if k == 0 || k != first_row(mu, m) {
            return VerificationReport::not_applicable(Theorem::Rr, inst, "first rows differ or are empty");
        }
        let run = || -> Result<VerificationReport> {
            let (_, lb, _, kb) = lambda.split_rows(1, m, &cfg.kappa)?;
            let (_, mb, _, _) = mu.split_rows(1, m, &cfg.kappa)?;
            let left = self.dhom(lambda, mu, cfg)?;
            let right = self.dhom(&lb, &mb, &cfg.with_kappa(&kb))?;
            Ok(VerificationReport::compare(Theorem::Rr, inst.clone(), &left, &right))
        };
        VerificationReport::from_result(Theorem::Rr, inst.clone(), run())
    }

    /// Final column removal: the last columns of component `m` are in the
    /// same place with the same length and earlier components are empty.
    pub fn verify_fcr(&self, lambda: &Multipartition, mu: &Multipartition, m: usize, cfg: &AlgebraConfig) -> VerificationReport {
        let inst = Instance::new(cfg, Some(lambda), Some(mu)).with(None, None, Some(m));
        if m == 0 || m > cfg.level() || lambda.level() != cfg.level() || mu.level() != cfg.level() {
            return VerificationReport::not_applicable(Theorem::Fcr, inst, "component out of range");
        }
        if (1..m).any(|j| !lambda.comp(j).is_empty() || !mu.comp(j).is_empty()) {
            return VerificationReport::not_applicable(Theorem::Fcr, inst, "components before m are not empty");
        }
        let d = first_row(lambda, m);
        if d == 0 || d != first_row(mu, m) || lambda.col_len(m, d) != mu.col_len(m, d) {
            return VerificationReport::not_applicable(Theorem::Fcr, inst, "last columns differ or are empty");
        }
        let run = || -> Result<VerificationReport> {
            let (ll, _, kl, _) = lambda.split_columns(d - 1, m, &cfg.kappa)?;
            let (ml, _, _, _) = mu.split_columns(d - 1, m, &cfg.kappa)?;
            let left = self.dhom(lambda, mu, cfg)?;
            let right = self.dhom(&ll, &ml, &cfg.with_kappa(&kl))?;
            Ok(VerificationReport::compare(Theorem::Fcr, inst.clone(), &left, &right))
        };
        VerificationReport::from_result(Theorem::Fcr, inst.clone(), run())
    }

    /// Generalised column removal at column `c` of component `m`, together
    /// with the check that product homomorphisms span the dominated homs.
    pub fn verify_gcr(&self, lambda: &Multipartition, mu: &Multipartition, c: usize, m: usize, cfg: &AlgebraConfig) -> VerificationReport {
        let inst = Instance::new(cfg, Some(lambda), Some(mu)).with(Some(c), None, Some(m));
        if m == 0 || m > cfg.level() || lambda.level() != cfg.level() || mu.level() != cfg.level() {
            return VerificationReport::not_applicable(Theorem::Gcr, inst, "component out of range");
        }
        let run = || -> Result<VerificationReport> {
            let (ll, lr, kl, kr) = lambda.split_columns(c, m, &cfg.kappa)?;
            let (ml, mr, _, _) = mu.split_columns(c, m, &cfg.kappa)?;
            if ll.size() != ml.size() {
                return Ok(VerificationReport::not_applicable(Theorem::Gcr, inst.clone(), "left parts have different sizes"));
            }
            let (cl, cr) = (cfg.with_kappa(&kl), cfg.with_kappa(&kr));
            let whole = self.hom(lambda, mu, cfg, true)?;
            let hl = self.hom(&ll, &ml, &cl, true)?;
            let hr = self.hom(&lr, &mr, &cr, true)?;
            let left = whole.graded_dimension();
            let right = hl.graded_dimension().mul(&hr.graded_dimension());
            let rep = VerificationReport::compare(Theorem::Gcr, inst.clone(), &left, &right);
            if rep.verdict != Verdict::Pass {
                return Ok(rep);
            }
            // Product homomorphisms span the dominated homs.
            let source = self.cache.column(lambda, cfg)?;
            let target = self.cache.column(mu, cfg)?;
            let mut products = Vec::new();
            for i in 0..hl.dim() {
                for j in 0..hr.dim() {
                    products.push(product_hom(&hl, i, &hr, j, c, &source, &target)?.image);
                }
            }
            if !same_span(&products, &whole.images(), cfg.field) {
                return Ok(rep.fail("product homomorphisms do not span the dominated homs"));
            }
            Ok(rep)
        };
        VerificationReport::from_result(Theorem::Gcr, inst.clone(), run())
    }

    /// Generalised row removal after row `r` of component `m`.
    pub fn verify_grr(&self, lambda: &Multipartition, mu: &Multipartition, r: usize, m: usize, cfg: &AlgebraConfig) -> VerificationReport {
        let inst = Instance::new(cfg, Some(lambda), Some(mu)).with(None, Some(r), Some(m));
        if m == 0 || m > cfg.level() || lambda.level() != cfg.level() || mu.level() != cfg.level() {
            return VerificationReport::not_applicable(Theorem::Grr, inst, "component out of range");
        }
        let run = || -> Result<VerificationReport> {
            let (lt, lb, kt, kb) = lambda.split_rows(r, m, &cfg.kappa)?;
            let (mt, mb, _, _) = mu.split_rows(r, m, &cfg.kappa)?;
            if lt.size() != mt.size() {
                return Ok(VerificationReport::not_applicable(Theorem::Grr, inst.clone(), "top parts have different sizes"));
            }
            let left = self.dhom(lambda, mu, cfg)?;
            let right = self.dhom(&lt, &mt, &cfg.with_kappa(&kt))?.mul(&self.dhom(&lb, &mb, &cfg.with_kappa(&kb))?);
            Ok(VerificationReport::compare(Theorem::Grr, inst.clone(), &left, &right))
        };
        VerificationReport::from_result(Theorem::Grr, inst.clone(), run())
    }

    /// Dominated homs `S_lambda -> S_mu` against `S_mu' -> S_lambda'` for
    /// the conjugate multicharge.
    pub fn verify_duality(&self, lambda: &Multipartition, mu: &Multipartition, cfg: &AlgebraConfig) -> VerificationReport {
        let inst = Instance::new(cfg, Some(lambda), Some(mu));
        let run = || -> Result<VerificationReport> {
            let left = self.dhom(lambda, mu, cfg)?;
            let right = self.dhom(&mu.conjugate(), &lambda.conjugate(), &cfg.conjugate())?;
            Ok(VerificationReport::compare(Theorem::Homconj, inst.clone(), &left, &right))
        };
        VerificationReport::from_result(Theorem::Homconj, inst.clone(), run())
    }

    /// Every homomorphism is dominated, and endomorphisms are scalars, when
    /// `e != 2` and the entries of `kappa` are distinct.
    pub fn verify_domhom_pair(&self, lambda: &Multipartition, mu: &Multipartition, cfg: &AlgebraConfig) -> VerificationReport {
        let inst = Instance::new(cfg, Some(lambda), Some(mu));
        if let Some(why) = domhom_gate(cfg) {
            return VerificationReport::not_applicable(Theorem::Domhom, inst, why);
        }
        let run = || -> Result<VerificationReport> {
            let full = self.hom(lambda, mu, cfg, false)?;
            let dom = self.hom(lambda, mu, cfg, true)?;
            let mut rep = VerificationReport::compare(Theorem::Domhom, inst.clone(), &full.graded_dimension(), &dom.graded_dimension());
            if rep.verdict == Verdict::Pass && !full.same_span(&dom) {
                rep = rep.fail("the spans differ");
            }
            if rep.verdict == Verdict::Pass && lambda == mu && full.graded_dimension().to_string() != "1" {
                rep = rep.fail(format!("End has graded dimension {}", full.graded_dimension()));
            }
            if rep.verdict == Verdict::Pass && full.dim() > 0 && !lambda.dominates(mu)? {
                rep = rep.fail("a nonzero hom without lambda dominating mu");
            }
            Ok(rep)
        };
        VerificationReport::from_result(Theorem::Domhom, inst.clone(), run())
    }

    /// All pairs of size at most `n_max`; a single not-applicable report when
    /// the hypotheses fail.
    pub fn verify_domhom(&self, cfg: &AlgebraConfig, n_max: usize) -> Vec<VerificationReport> {
        if let Some(why) = domhom_gate(cfg) {
            return vec![VerificationReport::not_applicable(Theorem::Domhom, Instance::new(cfg, None, None), why)];
        }
        SweepSpec::new(cfg.clone(), n_max)
            .pairs()
            .par_iter()
            .map(|(l, m)| self.verify_domhom_pair(l, m, cfg))
            .collect()
    }

    /// `End(S_lambda)` has dimension at least 2 for the two decomposable
    /// examples outside the hypotheses of the dominated-hom theorem.
    pub fn verify_decomposable_witnesses(&self) -> Vec<VerificationReport> {
        let cases = [("5,1,1", AlgebraConfig::finite(2, &[0])), ("3|3", AlgebraConfig::finite(3, &[0, 0]))];
        cases
            .iter()
            .map(|(shape, cfg)| {
                let lambda: Multipartition = shape.parse().expect("valid shape");
                self.verify_witness(&lambda, cfg)
            })
            .collect()
    }

    pub fn verify_witness(&self, lambda: &Multipartition, cfg: &AlgebraConfig) -> VerificationReport {
        let inst = Instance::new(cfg, Some(lambda), Some(lambda));
        let run = || -> Result<VerificationReport> {
            let end = self.hom(lambda, lambda, cfg, false)?;
            let mut rep = VerificationReport::new(Theorem::Witnesses, inst.clone());
            rep.left = Some(end.graded_dimension().to_string());
            rep.right = Some(">= 2".into());
            if end.dim() < 2 {
                rep = rep.fail(format!("End has dimension {}", end.dim()));
            }
            Ok(rep)
        };
        VerificationReport::from_result(Theorem::Witnesses, inst.clone(), run())
    }

    /// The row-join candidate for every pair of basis homomorphisms of the
    /// top and bottom factors. `hard` marks instances where a failure counts.
    pub fn verify_exprow(
        &self,
        lambda: &Multipartition,
        mu: &Multipartition,
        r: usize,
        m: usize,
        cfg: &AlgebraConfig,
        hard: bool,
    ) -> VerificationReport {
        let inst = Instance::new(cfg, Some(lambda), Some(mu)).with(None, Some(r), Some(m));
        let run = || -> Result<VerificationReport> {
            let (lt, lb, kt, kb) = lambda.split_rows(r, m, &cfg.kappa)?;
            let (mt, mb, _, _) = mu.split_rows(r, m, &cfg.kappa)?;
            if lt.size() != mt.size() {
                return Ok(VerificationReport::not_applicable(Theorem::Exprow, inst.clone(), "top parts have different sizes"));
            }
            let (ct, cb) = (cfg.with_kappa(&kt), cfg.with_kappa(&kb));
            let top = self.hom(&lt, &mt, &ct, true)?;
            let bottom = self.hom(&lb, &mb, &cb, true)?;
            let mut rep = VerificationReport::new(Theorem::Exprow, inst.clone());
            rep.hard = hard;
            rep.left = Some(format!("{} candidates", top.dim() * bottom.dim()));
            if top.dim() == 0 || bottom.dim() == 0 {
                rep.right = Some("0 homomorphisms".into());
                return Ok(rep);
            }
            let source = self.cache.column(lambda, cfg)?;
            let target = self.cache.column(mu, cfg)?;
            let (dt, db, dm) = (self.cache.dual(&mt, &ct)?, self.cache.dual(&mb, &cb)?, self.cache.dual(mu, cfg)?);
            let mut good = 0;
            let mut candidates = Vec::new();
            for bi in 0..bottom.dim() {
                for ti in 0..top.dim() {
                    match row_join_candidate(&bottom, bi, &db, &top, ti, &dt, r, m, &source, &target, &dm) {
                        Ok(c) if c.is_hom => {
                            good += 1;
                            candidates.push(c.vector);
                        }
                        Ok(_) => {
                            rep.witness.get_or_insert_with(|| format!("candidate {bi}x{ti} is not a homomorphism"));
                        }
                        Err(e) => {
                            rep.witness.get_or_insert_with(|| format!("candidate {bi}x{ti}: {e}"));
                        }
                    }
                }
            }
            rep.right = Some(format!("{good} homomorphisms"));
            if good < top.dim() * bottom.dim() {
                rep.verdict = Verdict::Fail;
            } else {
                let whole = self.hom(lambda, mu, cfg, true)?;
                if !same_span(&candidates, &whole.images(), cfg.field) {
                    rep = rep.fail("the candidates do not span the dominated homs");
                }
            }
            Ok(rep)
        };
        VerificationReport::from_result(Theorem::Exprow, inst.clone(), run())
    }

    /// The worked example: `e = 2`, `kappa = (0,1,0)`, split after row 1 of
    /// component 2. Failures here are hard.
    pub fn verify_exprow_worked_example(&self) -> VerificationReport {
        let cfg = AlgebraConfig::finite(2, &[0, 1, 0]);
        let lambda: Multipartition = "1,1|2,1,1,1|1".parse().expect("valid shape");
        let mu: Multipartition = "1|3,1|3".parse().expect("valid shape");
        self.verify_exprow(&lambda, &mu, 1, 2, &cfg, true)
    }

    /// Runs a check over a sweep. Instances are evaluated in parallel; the
    /// output order follows the enumeration order.
    pub fn sweep(&self, theorem: Theorem, spec: &SweepSpec) -> Vec<VerificationReport> {
        let cfg = &spec.cfg;
        let l = cfg.level();
        match theorem {
            Theorem::Validate | Theorem::Degdef | Theorem::Brudom | Theorem::Lemmas | Theorem::Convention => {
                lemmas::sweep(self, theorem, spec)
            }
            Theorem::Domhom => self.verify_domhom(cfg, spec.n_max),
            Theorem::Witnesses => self.verify_decomposable_witnesses(),
            Theorem::Homconj => spec.pairs().par_iter().map(|(a, b)| self.verify_duality(a, b, cfg)).collect(),
            Theorem::Cr | Theorem::Rr | Theorem::Fcr => {
                let jobs: Vec<_> = spec.pairs().into_iter().flat_map(|(a, b)| (1..=l).map(move |m| (a.clone(), b.clone(), m))).collect();
                let reports: Vec<VerificationReport> = jobs
                    .par_iter()
                    .map(|(a, b, m)| match theorem {
                        Theorem::Cr => self.verify_cr(a, b, *m, cfg),
                        Theorem::Rr => self.verify_rr(a, b, *m, cfg),
                        _ => self.verify_fcr(a, b, *m, cfg),
                    })
                    .collect();
                reports.into_iter().filter(|r| r.verdict != Verdict::NotApplicable).collect()
            }
            Theorem::Gcr | Theorem::Grr | Theorem::Exprow => {
                let mut jobs = Vec::new();
                for (a, b) in spec.pairs() {
                    for m in 1..=l {
                        let bound = if theorem == Theorem::Gcr {
                            first_row(&a, m).max(first_row(&b, m))
                        } else {
                            height(&a, m).max(height(&b, m))
                        };
                        for k in 0..=bound {
                            jobs.push((a.clone(), b.clone(), k, m));
                        }
                    }
                }
                let reports: Vec<VerificationReport> = jobs
                    .par_iter()
                    .map(|(a, b, k, m)| match theorem {
                        Theorem::Gcr => self.verify_gcr(a, b, *k, *m, cfg),
                        Theorem::Grr => self.verify_grr(a, b, *k, *m, cfg),
                        _ => self.verify_exprow(a, b, *k, *m, cfg, false),
                    })
                    .collect();
                reports.into_iter().filter(|r| r.verdict != Verdict::NotApplicable).collect()
            }
        }
    }
}

/// Why the dominated-hom theorem does not apply, if it does not.
pub fn domhom_gate(cfg: &AlgebraConfig) -> Option<String> {
    if cfg.is_e2() {
        return Some("needs e != 2".into());
    }
    let mut k = cfg.kappa.clone();
    k.sort_unstable();
    k.dedup();
    (k.len() != cfg.kappa.len()).then(|| "needs distinct kappa entries".into())
}
