//! Graded spaces of homomorphisms between column Specht modules.
//!
//! A homomorphism `S_lambda -> S_mu` is determined by the image `x` of
//! `z_lambda`, and `x` is admissible exactly when it satisfies the defining
//! relations of `z_lambda`. So the space is the nullspace of those relations
//! on the `i_lambda` block of `S_mu`, solved one degree at a time.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::config::AlgebraConfig;
use crate::error::{inconsistent, Error, Result};
use crate::linalg::{nullspace, same_span, sv_add_scaled, sv_get, sv_scale, Echelon, SparseVec};
use crate::partition::{GradedDimension, Multipartition};
use crate::scalar::Scalar;
use crate::specht::{vector_degree, DualBasis, ModelCache, Orientation, SpechtModel};
use crate::tableau::{lr_join_tableaux, row_join_tableaux, Tableau};
use crate::words::{column_garnir_nodes, garnir_element_variant, AlgebraElement};

/// A homogeneous homomorphism, stored as the coordinates of the image of
/// `z_lambda` on the standard basis of the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomElement {
    pub degree: i64,
    pub image: SparseVec,
}

/// A homogeneous basis of `Hom(S_lambda, S_mu)` or of its dominated part.
#[derive(Clone, Debug)]
pub struct HomBasis {
    pub source: Multipartition,
    pub target: Arc<SpechtModel>,
    pub dominated: bool,
    pub elements: Vec<HomElement>,
}

impl HomBasis {
    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn cfg(&self) -> &AlgebraConfig {
        &self.target.cfg
    }

    pub fn graded_dimension(&self) -> GradedDimension {
        graded_dimension(self)
    }

    /// The image of `z_lambda` under element `i`, keyed by tableau.
    pub fn image_terms(&self, i: usize) -> Vec<(Tableau, Scalar)> {
        self.elements[i].image.iter().map(|(j, c)| (self.target.basis[*j].clone(), c.clone())).collect()
    }

    pub fn images(&self) -> Vec<SparseVec> {
        self.elements.iter().map(|h| h.image.clone()).collect()
    }

    /// Whether the spans of the images agree.
    pub fn same_span(&self, other: &HomBasis) -> bool {
        self.target.basis == other.target.basis && same_span(&self.images(), &other.images(), self.target.field())
    }

    /// Whether every image of `self` lies in the span of `other`.
    pub fn span_within(&self, other: &HomBasis) -> bool {
        let mut e = Echelon::new(self.target.field());
        for v in other.images() {
            e.insert(&v);
        }
        self.images().iter().all(|v| e.contains(v))
    }
}

pub fn graded_dimension(h: &HomBasis) -> GradedDimension {
    let mut g = GradedDimension::zero();
    for e in &h.elements {
        g.add_degree(e.degree);
    }
    g
}

/// The defining relations of `z_lambda` other than the idempotent: every
/// `y_r`, `psi_r` for `r` directly above `r + 1` in `t_lambda`, and the
/// column Garnir elements.
pub fn annihilator_generators(source: &SpechtModel) -> Result<Vec<AlgebraElement>> {
    let lambda = &source.lambda;
    let n = lambda.size();
    let mut out: Vec<AlgebraElement> = (1..=n).map(|r| AlgebraElement::y(n, r)).collect();
    let pos = Tableau::t_col(lambda).positions();
    for r in 1..n {
        let (a, b) = (pos[r - 1], pos[r]);
        if a.m == b.m && a.c == b.c && a.r + 1 == b.r {
            out.push(AlgebraElement::psi(n, r));
        }
    }
    for node in column_garnir_nodes(lambda) {
        out.push(garnir_element_variant(lambda, &node, &source.cfg, source.variant)?);
    }
    Ok(out)
}

fn check_pair(source: &SpechtModel, target: &SpechtModel) -> Result<()> {
    if source.orientation != Orientation::Column || target.orientation != Orientation::Column {
        return Err(Error::InvalidInput("homomorphisms are computed between column modules".into()));
    }
    if source.cfg != target.cfg {
        return Err(Error::InvalidInput(format!("source uses {} but target uses {}", source.cfg, target.cfg)));
    }
    if source.n() != target.n() {
        return Err(Error::InvalidInput(format!("{} and {} have different sizes", source.lambda, target.lambda)));
    }
    Ok(())
}

/// Whether `z_lambda -> x` defines a homomorphism `S_lambda -> S_mu`.
pub fn is_hom_image(source: &SpechtModel, target: &SpechtModel, x: &SparseVec) -> Result<bool> {
    check_pair(source, target)?;
    let ilam = Tableau::t_col(&source.lambda).residue_sequence(&source.cfg);
    if x.iter().any(|(j, _)| target.residues[*j] != ilam) {
        return Ok(false);
    }
    for g in annihilator_generators(source)? {
        if !target.act(&g, x)?.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A homogeneous basis of `Hom(S_lambda, S_mu)`, or of the dominated
/// homomorphisms when `dominated` is set.
pub fn hom_space(source: &SpechtModel, target: &Arc<SpechtModel>, dominated: bool) -> Result<HomBasis> {
    check_pair(source, target)?;
    let cfg = &source.cfg;
    let lambda = &source.lambda;
    let empty = HomBasis { source: lambda.clone(), target: target.clone(), dominated, elements: Vec::new() };
    if lambda.content(cfg) != target.lambda.content(cfg) {
        return Ok(empty);
    }
    let t_lam = Tableau::t_col(lambda);
    let ilam = t_lam.residue_sequence(cfg);
    let base = t_lam.codegree(cfg)?;
    let mut by_degree: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (j, t) in target.basis.iter().enumerate() {
        if target.residues[j] == ilam && (!dominated || t.is_col_dominated(lambda)) {
            by_degree.entry(target.degrees[j]).or_default().push(j);
        }
    }
    let gens = annihilator_generators(source)?;
    let field = target.field();
    let mut elements = Vec::new();
    for (deg, cands) in by_degree {
        let mut rows: BTreeMap<(usize, usize), Vec<Scalar>> = BTreeMap::new();
        for (k, &j) in cands.iter().enumerate() {
            for (g, x) in gens.iter().enumerate() {
                for (i, c) in target.act(x, &target.unit(j))? {
                    rows.entry((g, i)).or_insert_with(|| vec![Scalar::zero(field); cands.len()])[k] = c;
                }
            }
        }
        let m: Vec<Vec<Scalar>> = rows.into_values().collect();
        for sol in nullspace(&m, cands.len(), field) {
            let image: SparseVec = cands.iter().zip(sol).filter(|(_, c)| !c.is_zero()).map(|(&j, c)| (j, c)).collect();
            elements.push(HomElement { degree: deg - base, image });
        }
    }
    if elements.len() == 1 {
        let top = dominance_maximal(target, &elements[0].image);
        elements[0].image = normalise(&elements[0].image, top);
    }
    Ok(HomBasis { source: lambda.clone(), target: target.clone(), dominated, elements })
}

/// The first support index (in basis order) not strictly dominated by
/// another support tableau.
pub fn dominance_maximal(model: &SpechtModel, v: &SparseVec) -> usize {
    let perms: Vec<_> = v.iter().map(|(j, _)| model.basis[*j].perm_col()).collect();
    for (k, (j, _)) in v.iter().enumerate() {
        let beaten = perms.iter().enumerate().any(|(o, p)| o != k && p != &perms[k] && perms[k].bruhat_leq(p));
        if !beaten {
            return *j;
        }
    }
    v[0].0
}

fn normalise(v: &SparseVec, i: usize) -> SparseVec {
    match sv_get(v, i) {
        Some(c) => sv_scale(v, &c.inv()),
        None => v.clone(),
    }
}

/// `hom_space` with models taken from a cache.
pub fn hom_space_cached(
    cache: &ModelCache,
    lambda: &Multipartition,
    mu: &Multipartition,
    cfg: &AlgebraConfig,
    dominated: bool,
) -> Result<HomBasis> {
    let source = cache.column(lambda, cfg)?;
    let target = cache.column(mu, cfg)?;
    hom_space(&source, &target, dominated)
}

/// The product homomorphism `phi_L # phi_R`: the image of `z_lambda` is
/// `sum a_s b_t v_{s # t}`. It is checked against the relations of
/// `z_lambda`; a failure is reported as an inconsistency.
pub fn product_hom(
    left: &HomBasis,
    li: usize,
    right: &HomBasis,
    ri: usize,
    c: usize,
    source: &SpechtModel,
    target: &SpechtModel,
) -> Result<HomElement> {
    let (phi_l, phi_r) = (&left.elements[li], &right.elements[ri]);
    let mut image = Vec::new();
    for (s, a) in &phi_l.image {
        for (t, b) in &phi_r.image {
            let joined = lr_join_tableaux(&left.target.basis[*s], &right.target.basis[*t], c)?;
            let j = target
                .index_of(&joined)
                .ok_or_else(|| Error::Inconsistency(format!("{joined} is not a standard {}-tableau", target.lambda)))?;
            image = sv_add_scaled(&image, &target.unit(j), &(a * b));
        }
    }
    let degree = phi_l.degree + phi_r.degree;
    if image.is_empty() {
        return Ok(HomElement { degree, image });
    }
    if !is_hom_image(source, target, &image)? {
        return inconsistent(format!("the product of homomorphisms into {} is not a homomorphism", target.lambda));
    }
    let base = Tableau::t_col(&source.lambda).codegree(&source.cfg)?;
    if vector_degree(target, &image).map(|d| d - base) != Some(degree) {
        return inconsistent("a product homomorphism has the wrong degree");
    }
    Ok(HomElement { degree, image })
}

/// The candidate row-join vector `sum a_t b_s f_{t #_r s}` and whether it
/// defines a homomorphism.
#[derive(Clone, Debug)]
pub struct RowJoinCandidate {
    pub vector: SparseVec,
    pub is_hom: bool,
}

/// Builds the row-join candidate from a bottom and a top homomorphism. The
/// factor images are rewritten on the `f` bases of their targets; the result
/// is reported, not assumed to be a homomorphism.
#[allow(clippy::too_many_arguments)]
pub fn row_join_candidate(
    bottom: &HomBasis,
    bi: usize,
    bottom_dual: &DualBasis,
    top: &HomBasis,
    ti: usize,
    top_dual: &DualBasis,
    r: usize,
    m: usize,
    source: &SpechtModel,
    target: &SpechtModel,
    target_dual: &DualBasis,
) -> Result<RowJoinCandidate> {
    let a = bottom_dual.to_f_coords(&bottom.elements[bi].image);
    let b = top_dual.to_f_coords(&top.elements[ti].image);
    let mut coords = Vec::new();
    for (t, x) in &a {
        for (s, y) in &b {
            let joined = row_join_tableaux(
                &bottom.target.basis[*t],
                &top.target.basis[*s],
                &source.lambda,
                &target.lambda,
                r,
                m,
            )?;
            let j = target
                .index_of(&joined)
                .ok_or_else(|| Error::Inconsistency(format!("{joined} is not a standard {}-tableau", target.lambda)))?;
            coords = sv_add_scaled(&coords, &target.unit(j), &(x * y));
        }
    }
    let vector = target_dual.from_f_coords(&coords);
    let is_hom = vector.is_empty() || is_hom_image(source, target, &vector)?;
    Ok(RowJoinCandidate { vector, is_hom })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn remark_pair_is_not_dominated() {
        let cache = ModelCache::new();
        let cfg = AlgebraConfig::finite(2, &[0]);
        let full = hom_space_cached(&cache, &mp("1,1"), &mp("2"), &cfg, false).unwrap();
        let dom = hom_space_cached(&cache, &mp("1,1"), &mp("2"), &cfg, true).unwrap();
        assert_eq!(full.dim(), 1);
        assert_eq!(dom.dim(), 0);
    }

    #[test]
    fn identity_endomorphism() {
        let cache = ModelCache::new();
        let cfg = AlgebraConfig::finite(3, &[0, 1]);
        let h = hom_space_cached(&cache, &mp("2,1|1"), &mp("2,1|1"), &cfg, false).unwrap();
        assert_eq!(h.graded_dimension().to_string(), "1");
        assert_eq!(h.image_terms(0), vec![(Tableau::t_col(&mp("2,1|1")), Scalar::one(cfg.field))]);
    }

    #[test]
    fn different_content_gives_zero() {
        let cache = ModelCache::new();
        let cfg = AlgebraConfig::finite(3, &[0]);
        let h = hom_space_cached(&cache, &mp("2"), &mp("1,1"), &cfg, false).unwrap();
        assert_eq!(h.dim(), 0);
    }
}
