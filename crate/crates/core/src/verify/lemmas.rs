//! Sweeps over single shapes: model certification, degree/codegree sums,
//! Bruhat order against shape dominance, the standard-basis lemmas and
//! independence from the choice of reduced words.

use std::collections::HashSet;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use super::{Instance, SweepSpec, Theorem, VerificationReport, Verdict, Verifier};
use crate::config::AlgebraConfig;
use crate::error::Result;
use crate::hom::hom_space;
use crate::linalg::{same_span, SparseVec};
use crate::partition::{composition_dominates, Multipartition};
use crate::specht::{build_row_model, validate, SpechtModel};
use crate::symgroup::{all_permutations, Permutation, WordConvention};
use crate::tableau::{enumerate_col_dominated, enumerate_std, Tableau};
use crate::words::AlgebraElement;

pub(super) fn sweep(v: &Verifier, theorem: Theorem, spec: &SweepSpec) -> Vec<VerificationReport> {
    let cfg = &spec.cfg;
    match theorem {
        Theorem::Convention => {
            let mut pairs = spec.pairs();
            let mut rng = StdRng::seed_from_u64(spec.seed);
            let k = (pairs.len() / 4).max(8).min(pairs.len());
            pairs.shuffle(&mut rng);
            pairs.truncate(k);
            pairs.par_iter().map(|(l, m)| check_convention(v, l, m, cfg)).collect()
        }
        Theorem::Brudom => {
            let shapes = spec.shapes();
            let mut out: Vec<VerificationReport> = shapes.par_iter().map(|l| check_brudom(l, cfg)).collect();
            out.extend(spec.pairs().par_iter().map(|(l, m)| check_domalt(l, m, cfg)).collect::<Vec<_>>());
            out
        }
        _ => spec
            .shapes()
            .par_iter()
            .enumerate()
            .map(|(i, l)| match theorem {
                Theorem::Validate => check_validate(v, l, cfg),
                Theorem::Degdef => check_degdef(l, cfg),
                _ => check_lemmas(v, l, cfg, spec.samples, spec.seed.wrapping_add(i as u64)),
            })
            .collect(),
    }
}

fn report(theorem: Theorem, lambda: &Multipartition, cfg: &AlgebraConfig, r: Result<Option<String>>) -> VerificationReport {
    let mut rep = VerificationReport::new(theorem, Instance::new(cfg, Some(lambda), None));
    match r {
        Ok(None) => {}
        Ok(Some(w)) => rep = rep.fail(w),
        Err(e) => {
            rep.verdict = Verdict::Error;
            rep.witness = Some(e.to_string());
        }
    }
    rep
}

/// Builds and certifies the column and row models of `lambda`.
pub fn check_validate(v: &Verifier, lambda: &Multipartition, cfg: &AlgebraConfig) -> VerificationReport {
    let run = || -> Result<Option<String>> {
        let col = v.cache.column(lambda, cfg)?;
        let rc = validate(&col);
        if let Some(c) = rc.first_failure() {
            return Ok(Some(format!("column model: {} ({})", c.name, c.witness.clone().unwrap_or_default())));
        }
        let row = build_row_model(lambda, cfg)?;
        let rr = validate(&row);
        if let Some(c) = rr.first_failure() {
            return Ok(Some(format!("row model: {} ({})", c.name, c.witness.clone().unwrap_or_default())));
        }
        Ok(None)
    };
    report(Theorem::Validate, lambda, cfg, run())
}

/// `deg(t) + codeg(t) = df(lambda)` for every standard tableau.
pub fn check_degdef(lambda: &Multipartition, cfg: &AlgebraConfig) -> VerificationReport {
    let run = || -> Result<Option<String>> {
        let df = lambda.defect(cfg);
        for t in enumerate_std(lambda) {
            let (d, c) = (t.degree(cfg)?, t.codegree(cfg)?);
            if d + c != df {
                return Ok(Some(format!("{t}: {d} + {c} != {df}")));
            }
        }
        Ok(None)
    };
    report(Theorem::Degdef, lambda, cfg, run())
}

/// All `lambda`-tableaux whose entries increase along rows (or down
/// columns when `columns` is set).
pub fn strict_tableaux(lambda: &Multipartition, columns: bool) -> Vec<Tableau> {
    let base = Tableau::t_row(lambda);
    all_permutations(lambda.size())
        .iter()
        .map(|w| base.act(w))
        .filter(|t| if columns { t.is_column_strict() } else { t.is_row_strict() })
        .collect()
}

/// Bruhat order against dominance of the shapes of initial segments:
/// row permutations for row-strict tableaux, column permutations and
/// conjugate shapes for column-strict ones. On standard pairs both
/// permutation orders must agree.
pub fn check_brudom(lambda: &Multipartition, cfg: &AlgebraConfig) -> VerificationReport {
    let run = || -> Result<Option<String>> {
        let n = lambda.size();
        for columns in [false, true] {
            let tabs = strict_tableaux(lambda, columns);
            let shapes: Vec<Vec<Vec<Vec<usize>>>> = tabs
                .iter()
                .map(|t| (1..=n).map(|m| if columns { t.shape_upto_conj(m) } else { t.shape_upto(m) }).collect())
                .collect();
            for (i, s) in tabs.iter().enumerate() {
                for (j, t) in tabs.iter().enumerate() {
                    let bruhat = if columns { t.dominates(s)? } else { t.row_dominates(s)? };
                    if s.is_standard() && t.is_standard() && t.dominates(s)? != bruhat {
                        return Ok(Some(format!("{s} vs {t}: row and column permutations disagree")));
                    }
                    let by_shape = (0..n).all(|m| {
                        if columns {
                            composition_dominates(&shapes[i][m], &shapes[j][m])
                        } else {
                            composition_dominates(&shapes[j][m], &shapes[i][m])
                        }
                    });
                    if bruhat != by_shape {
                        let kind = if columns { "column" } else { "row" };
                        return Ok(Some(format!("{kind}-strict {s} vs {t}: Bruhat {bruhat}, shapes {by_shape}")));
                    }
                }
            }
        }
        Ok(None)
    };
    report(Theorem::Brudom, lambda, cfg, run())
}

/// Column and row domination on initial segments against shape dominance.
pub fn check_domalt(lambda: &Multipartition, mu: &Multipartition, cfg: &AlgebraConfig) -> VerificationReport {
    let mut rep = VerificationReport::new(Theorem::Brudom, Instance::new(cfg, Some(lambda), Some(mu)));
    let (tc, tr) = (Tableau::t_col(lambda), Tableau::t_row(lambda));
    for s in enumerate_std(mu) {
        for j in 1..=mu.size() {
            let col = (1..=j).all(|m| composition_dominates(&tc.shape_upto(m), &s.shape_upto(m)));
            let row = (1..=j).all(|m| composition_dominates(&s.shape_upto(m), &tr.shape_upto(m)));
            if col != s.is_col_dominated_upto(lambda, j) || row != s.is_row_dominated_upto(lambda, j) {
                return rep.fail(format!("{s} on 1..{j}"));
            }
        }
    }
    rep.left = Some("domination".into());
    rep
}

/// Relative position of `j - 1` and `j` in a tableau.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Adjacent {
    /// Same row, `j` to the right.
    Right,
    /// Same column, `j` below.
    Below,
    /// `j` strictly lower and left, or in a later component.
    SouthWest,
    /// `j` strictly higher and right, or in an earlier component.
    NorthEast,
}

pub fn adjacent(t: &Tableau, j: usize) -> Adjacent {
    let (a, b) = (t.position(j - 1), t.position(j));
    if a.m == b.m && a.r == b.r {
        Adjacent::Right
    } else if a.m == b.m && a.c == b.c {
        Adjacent::Below
    } else {
        let w = t.perm_col().inverse();
        if w.apply(j - 1) > w.apply(j) {
            Adjacent::SouthWest
        } else {
            Adjacent::NorthEast
        }
    }
}

/// A reduced word for `w`, choosing a random left descent at each step.
pub fn random_reduced_word(w: &Permutation, rng: &mut impl Rng) -> Vec<usize> {
    let mut word = Vec::with_capacity(w.length());
    let mut cur = w.clone();
    loop {
        let desc = cur.left_descents();
        let Some(&a) = desc.choose(rng) else { break };
        word.push(a);
        cur = cur.left_mul_s(a);
    }
    word
}

/// Permutations admitting a reduced expression that is a subword of `word`.
pub fn reduced_subword_products(n: usize, word: &[usize]) -> HashSet<Permutation> {
    let mut set = HashSet::from([Permutation::identity(n)]);
    for &a in word {
        // `w s_a` is longer than `w` exactly when `a` is not a right descent.
        let grown: Vec<Permutation> = set.iter().filter(|w| !w.is_right_descent(a)).map(|w| w.right_mul_s(a)).collect();
        set.extend(grown);
    }
    set
}

fn strictly_below(model: &SpechtModel, t: usize, v: &SparseVec, allow_equal: bool) -> Result<Option<usize>> {
    let top = &model.basis[t];
    for (u, _) in v {
        if *u == t && allow_equal {
            continue;
        }
        if *u == t || !top.dominates(&model.basis[*u])? {
            return Ok(Some(*u));
        }
    }
    Ok(None)
}

/// The standard-basis lemmas for the column model of `lambda`, with
/// `samples` random words for the subexpression property.
pub fn check_lemmas(v: &Verifier, lambda: &Multipartition, cfg: &AlgebraConfig, samples: usize, seed: u64) -> VerificationReport {
    let run = || -> Result<Option<String>> {
        let model = v.cache.column(lambda, cfg)?;
        let n = model.n();
        let z = model.unit(model.seed());
        let mut rng = StdRng::seed_from_u64(seed);
        for (ti, t) in model.basis.iter().enumerate() {
            let w = t.perm_col();
            // Any reduced word gives v_t up to strictly lower terms.
            let mut words = vec![w.reduced_word(WordConvention::LexMin), w.reduced_word(WordConvention::LexMax)];
            words.extend((0..4).map(|_| random_reduced_word(&w, &mut rng)));
            for word in &words {
                let x = model.act_word(word, &z);
                if x.iter().find(|(u, _)| *u == ti).map(|(_, c)| c.is_one()) != Some(true) {
                    return Ok(Some(format!("diffredex: word {word:?} misses v_{t}")));
                }
                if let Some(u) = strictly_below(&model, ti, &x, true)? {
                    return Ok(Some(format!("diffredex: word {word:?} for {t} meets {}", model.basis[u])));
                }
            }
            for i in 1..=n {
                let x = model.act(&AlgebraElement::y(n, i), &model.unit(ti))?;
                if let Some(u) = strictly_below(&model, ti, &x, false)? {
                    return Ok(Some(format!("ystd: y_{i} v_{t} meets {}", model.basis[u])));
                }
            }
            for j in 2..=n {
                let x = model.act_word(&[j - 1], &model.unit(ti));
                let (name, allow_equal) = match adjacent(t, j) {
                    Adjacent::Right | Adjacent::Below => ("samecol", false),
                    Adjacent::SouthWest => ("unswitch", true),
                    Adjacent::NorthEast => continue,
                };
                if let Some(u) = strictly_below(&model, ti, &x, allow_equal)? {
                    return Ok(Some(format!("{name}: psi_{} v_{t} meets {}", j - 1, model.basis[u])));
                }
            }
        }
        // A basis vector in the support of a psi-word applied to z has a
        // reduced expression inside that word.
        if n >= 2 {
            for _ in 0..samples {
                let len = rng.gen_range(0..=n * (n - 1) / 2 + 2);
                let word: Vec<usize> = (0..len).map(|_| rng.gen_range(1..n)).collect();
                let x = model.act_word(&word, &z);
                if x.is_empty() {
                    continue;
                }
                let reachable = reduced_subword_products(n, &word);
                for (u, _) in &x {
                    if !reachable.contains(&model.basis[*u].perm_col()) {
                        return Ok(Some(format!("subexp: word {word:?} reaches {}", model.basis[*u])));
                    }
                }
            }
        }
        Ok(None)
    };
    report(Theorem::Lemmas, lambda, cfg, run())
}

/// Compares the lexicographically smallest and largest preferred words:
/// the span of the dominated basis vectors and the dominated hom spaces.
pub fn check_convention(v: &Verifier, lambda: &Multipartition, mu: &Multipartition, cfg: &AlgebraConfig) -> VerificationReport {
    let mut rep = VerificationReport::new(Theorem::Convention, Instance::new(cfg, Some(lambda), Some(mu)));
    let run = || -> Result<Option<(String, String, Option<String>)>> {
        let target = v.cache.column(mu, cfg)?;
        let z = target.unit(target.seed());
        let dominated = enumerate_col_dominated(lambda, mu);
        let lexmin: Vec<SparseVec> = dominated
            .iter()
            .map(|t| target.unit(target.index_of(t).expect("standard tableau")))
            .collect();
        let lexmax: Vec<SparseVec> = dominated
            .iter()
            .map(|t| target.act_word(&t.perm_col().reduced_word(WordConvention::LexMax), &z))
            .collect();
        if !same_span(&lexmin, &lexmax, cfg.field) {
            return Ok(Some((String::new(), String::new(), Some("dominated spans differ".into()))));
        }
        let d_min = v.dhom(lambda, mu, cfg)?;
        let src = v.cache.column_with(lambda, cfg, WordConvention::LexMax)?;
        let tgt = v.cache.column_with(mu, cfg, WordConvention::LexMax)?;
        let d_max = hom_space(&src, &tgt, true)?.graded_dimension();
        let witness = (!d_min.same_as(&d_max)).then(|| format!("{d_min} != {d_max}"));
        Ok(Some((d_min.to_string(), d_max.to_string(), witness)))
    };
    match run() {
        Ok(None) => {}
        Ok(Some((l, r, w))) => {
            if !l.is_empty() {
                rep.left = Some(l);
                rep.right = Some(r);
            }
            if let Some(w) = w {
                rep = rep.fail(w);
            }
        }
        Err(e) => {
            rep.verdict = Verdict::Error;
            rep.witness = Some(e.to_string());
        }
    }
    rep
}
