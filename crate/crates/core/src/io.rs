//! JSON views of models, hom spaces and reports. Maps keep basis order, so
//! output is identical across runs.

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::config::AlgebraConfig;
use crate::error::Result;
use crate::hom::HomBasis;
use crate::linalg::SparseMatrix;
use crate::partition::{GradedDimension, Multipartition};
use crate::specht::SpechtModel;
use crate::tableau::{enumerate_std, std_graded_count, Tableau};
use crate::verify::VerificationReport;

/// One basis vector of a model.
#[derive(Clone, Debug, Serialize)]
pub struct BasisEntry {
    pub tableau: String,
    pub degree: i64,
    pub residues: Vec<i64>,
}

/// Summary of a Specht module, as printed by `specht-info`. Everything is
/// computed from tableau combinatorics; the module is not built.
#[derive(Clone, Debug, Serialize)]
pub struct ModuleInfo {
    pub lambda: String,
    pub e: String,
    pub kappa: Vec<i64>,
    pub field: String,
    pub dim: u128,
    pub graded_dim: GradedDimension,
    pub defect: i64,
    pub i_lambda: Vec<i64>,
    /// Absent when `dim` exceeds the listing limit.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<BasisEntry>>,
}

impl ModuleInfo {
    /// Lists the basis only when there are at most `max_basis` tableaux.
    pub fn new(lambda: &Multipartition, cfg: &AlgebraConfig, max_basis: usize) -> Result<Self> {
        let (dim, graded_dim) = std_graded_count(lambda, cfg);
        let basis = if dim <= max_basis as u128 {
            let entries = enumerate_std(lambda)
                .into_iter()
                .map(|t| {
                    Ok(BasisEntry { tableau: t.to_string(), degree: t.codegree(cfg)?, residues: t.residue_sequence(cfg) })
                })
                .collect::<Result<Vec<_>>>()?;
            Some(entries)
        } else {
            None
        };
        Ok(ModuleInfo {
            lambda: lambda.to_string(),
            e: cfg.e.to_string(),
            kappa: cfg.kappa.clone(),
            field: cfg.field.to_string(),
            dim,
            graded_dim,
            defect: lambda.defect(cfg),
            i_lambda: Tableau::t_col(lambda).residue_sequence(cfg),
            basis,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "lambda: {}\ne: {}  kappa: {}  field: {}\n|Std|: {}\ngraded dimension: {}\ndefect: {}\ni_lambda: {}\nbasis:\n",
            self.lambda,
            self.e,
            join(&self.kappa),
            self.field,
            self.dim,
            self.graded_dim,
            self.defect,
            paren(&self.i_lambda)
        );
        match &self.basis {
            Some(basis) => {
                for b in basis {
                    out.push_str(&format!("  {}  degree {}  residues {}\n", b.tableau, b.degree, paren(&b.residues)));
                }
            }
            None => out.push_str("  (omitted; raise --max-basis to list)\n"),
        }
        out
    }
}

fn join(v: &[i64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn paren(v: &[i64]) -> String {
    format!("({})", join(v))
}

fn matrix_triples(m: &SparseMatrix) -> Value {
    let mut triples = Vec::new();
    for (c, col) in m.cols.iter().enumerate() {
        for (r, x) in col {
            triples.push(json!([r, c, x.to_string()]));
        }
    }
    triples.sort_by_key(|t| (t[0].as_u64(), t[1].as_u64()));
    Value::Array(triples)
}

/// Full model dump: basis, degrees, residues and the generator matrices as
/// `(row, col, scalar)` triples.
pub fn model_json(model: &SpechtModel) -> Value {
    json!({
        "lambda": model.lambda.to_string(),
        "e": model.cfg.e.to_string(),
        "kappa": model.cfg.kappa,
        "field": model.cfg.field.to_string(),
        "orientation": model.orientation,
        "basis": model.basis.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        "degrees": model.degrees,
        "residues": model.residues,
        "psi": model.psi.iter().map(matrix_triples).collect::<Vec<_>>(),
        "y": model.y.iter().map(matrix_triples).collect::<Vec<_>>(),
    })
}

/// `{"graded_dim": {...}, "basis": [{"degree": d, "image": {tableau: scalar}}]}`.
pub fn hom_json(h: &HomBasis) -> Value {
    let basis: Vec<Value> = (0..h.dim())
        .map(|i| {
            let mut image = Map::new();
            for (t, c) in h.image_terms(i) {
                image.insert(t.to_string(), Value::String(c.to_string()));
            }
            json!({ "degree": h.elements[i].degree, "image": image })
        })
        .collect();
    json!({ "graded_dim": h.graded_dimension(), "basis": basis })
}

/// Human-readable hom basis: one line per basis homomorphism.
pub fn hom_text(h: &HomBasis) -> String {
    let mut out = format!("graded dimension: {}\n", h.graded_dimension());
    for i in 0..h.dim() {
        let terms: Vec<String> = h
            .image_terms(i)
            .iter()
            .map(|(t, c)| if c.is_one() { format!("v[{t}]") } else { format!("{c} v[{t}]") })
            .collect();
        out.push_str(&format!("degree {}: z_lambda -> {}\n", h.elements[i].degree, terms.join(" + ")));
    }
    out
}

/// One JSON object per report, one per line.
pub fn reports_jsonl(reports: &[VerificationReport]) -> String {
    reports.iter().map(|r| r.to_json() + "\n").collect()
}
