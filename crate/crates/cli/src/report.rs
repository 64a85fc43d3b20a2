//! Poset files and the machine-readable run reports.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use ocpoly::{GammaKind, Poset, TieBreak};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// On-disk poset format: `{"size": d, "covers": [[a, b], ...]}`, 1-based,
/// each pair meaning `p_a < p_b` is a cover.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetFile {
    pub size: usize,
    pub covers: Vec<(usize, usize)>,
}

impl PosetFile {
    pub fn canonical(poset: &Poset) -> PosetFile {
        PosetFile {
            size: poset.size(),
            covers: poset.covers(),
        }
    }
}

pub fn load_poset(path: &Path) -> Result<Poset, CliError> {
    let raw = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let file: PosetFile = serde_json::from_str(&raw)
        .map_err(|e| CliError::Input(format!("cannot parse {}: {e}", path.display())))?;
    if file.size < 1 || file.size > 64 {
        return Err(CliError::Input(format!(
            "{}: poset size must be in 1..=64",
            path.display()
        )));
    }
    Poset::from_covers(file.size, &file.covers)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Short deterministic label for a poset, used in sweep CSV rows:
/// cover pairs joined like `1<3;2<4`, empty for an antichain.
pub fn poset_label(poset: &Poset) -> String {
    poset
        .covers()
        .iter()
        .map(|(a, b)| format!("{a}<{b}"))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn kind_label(kind: GammaKind) -> &'static str {
    match kind {
        GammaKind::OrderMinusChain => "oc",
        GammaKind::OrderMinusOrder => "oo",
        GammaKind::ChainMinusChain => "cc",
        GammaKind::OrderAlone => "o",
        GammaKind::ChainAlone => "c",
    }
}

pub fn tie_label(tie: TieBreak) -> &'static str {
    match tie {
        TieBreak::MaskAscending => "a",
        TieBreak::MaskDescending => "b",
    }
}

#[derive(Serialize)]
pub struct NormalSummary {
    pub n_max: usize,
    pub ok: bool,
}

#[derive(Serialize)]
pub struct HilbertSummary {
    pub depth: usize,
    pub ok: bool,
}

#[derive(Serialize)]
pub struct GroebnerSummary {
    pub tie_break: &'static str,
    pub variables: usize,
    pub binomials: usize,
    pub leading_terms_ok: bool,
    pub s_pairs_reduced: usize,
    pub s_pairs_skipped_coprime: u64,
    pub all_reduced_to_zero: bool,
    pub quadratic: bool,
    pub squarefree: bool,
    pub z_free: bool,
    /// Trailing terms where the empty-set substitution produced a `z`
    /// inside a `y`-pair rewrite.
    pub star_substitutions: usize,
}

/// Everything one pipeline run reports. Optional sections appear only when
/// the corresponding stage ran.
#[derive(Serialize)]
pub struct RunReport {
    pub poset_p: PosetFile,
    pub poset_q: PosetFile,
    pub kind: &'static str,
    pub dim: usize,
    /// `i(1), ..., i(d)`.
    pub counts: Vec<i128>,
    pub delta: Vec<i64>,
    pub delta_symmetric: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fano: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gorenstein: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normal: Option<NormalSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub groebner: Option<GroebnerSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hilbert: Option<HilbertSummary>,
    /// Wall time per stage in microseconds; requested with `--timing`, which
    /// gives up byte-for-byte reproducibility of the report.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_us: Option<BTreeMap<&'static str, u128>>,
}

/// Groebner diagnostics dump: the variable order, every binomial, and the
/// S-pair outcomes.
#[derive(Serialize)]
pub struct Diagnostics {
    pub tie_break: &'static str,
    pub variables: Vec<String>,
    pub binomials: Vec<DiagnosticsBinomial>,
    pub s_pairs_skipped_coprime: u64,
    pub s_pairs: Vec<DiagnosticsSPair>,
}

#[derive(Serialize)]
pub struct DiagnosticsBinomial {
    pub first: String,
    pub second: String,
    #[serde(rename = "type")]
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub star_substitution: Option<bool>,
}

#[derive(Serialize)]
pub struct DiagnosticsSPair {
    pub i: usize,
    pub j: usize,
    pub reduced_to_zero: bool,
}
