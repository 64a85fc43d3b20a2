//! Exhaustive sweep over all labeled poset pairs of a fixed size.

use std::path::Path;

use ocpoly::{
    build_system, delta_vector, ehrhart_counts, is_fano, is_gorenstein_fano, is_normal_up_to,
    GammaKind, Poset, TieBreak,
};
use rayon::prelude::*;

use crate::pipeline::build_gamma;
use crate::report::{kind_label, poset_label};
use crate::CliError;

const SWEEP_NORMALITY_BOUND: usize = 3;

pub fn run_sweep(d: usize, kind: GammaKind, out: &Path, bound: usize) -> Result<(), CliError> {
    if d < 1 {
        return Err(CliError::Input("sweep size must be at least 1".into()));
    }
    if d > bound {
        return Err(CliError::Input(format!(
            "sweep size {d} exceeds the configured bound {bound} (raise it with --bound)"
        )));
    }
    if d > 6 {
        return Err(CliError::Input(
            "labeled-poset enumeration is limited to size 6".into(),
        ));
    }

    let posets = Poset::enumerate_all(d);
    let pairs: Vec<(usize, usize)> = (0..posets.len())
        .flat_map(|a| (0..posets.len()).map(move |b| (a, b)))
        .collect();

    let rows: Vec<Vec<String>> = pairs
        .par_iter()
        .map(|&(a, b)| sweep_row(d, kind, &posets[a], &posets[b]))
        .collect::<Result<_, _>>()?;

    let mut writer = csv::Writer::from_path(out)
        .map_err(|e| CliError::Input(format!("cannot write {}: {e}", out.display())))?;
    let mut header: Vec<String> = vec!["posetP".into(), "posetQ".into(), "kind".into()];
    header.extend((1..=d).map(|t| format!("i{t}")));
    header.extend((0..=d).map(|i| format!("delta{i}")));
    header.extend(
        ["fano", "gorenstein", "normal_n3", "groebner_ok"]
            .iter()
            .map(|s| s.to_string()),
    );
    let io_err = |e: csv::Error| CliError::Input(format!("cannot write {}: {e}", out.display()));
    writer.write_record(&header).map_err(io_err)?;
    for row in &rows {
        writer.write_record(row).map_err(io_err)?;
    }
    writer.flush().map_err(|e| CliError::Input(format!("cannot write {}: {e}", out.display())))?;
    Ok(())
}

pub(crate) fn sweep_row(
    d: usize,
    kind: GammaKind,
    p: &Poset,
    q: &Poset,
) -> Result<Vec<String>, CliError> {
    let poly = build_gamma(kind, p, q)?;
    let fail = |e: ocpoly::GeometryError| CliError::Property(format!("{p:?} / {q:?}: {e}"));
    let counts = ehrhart_counts(&poly, d).map_err(fail)?;
    let delta = delta_vector(&counts);
    let fano = is_fano(&poly).map_err(fail)?;
    let gorenstein = is_gorenstein_fano(&poly).map_err(fail)?;
    let normal = is_normal_up_to(&poly, SWEEP_NORMALITY_BOUND).map_err(fail)?;
    // the Groebner stage only applies to the order-minus-chain combination
    let groebner_ok = if kind == GammaKind::OrderMinusChain {
        let sys = build_system(p, q, TieBreak::MaskAscending)
            .map_err(|e| CliError::Input(e.to_string()))?;
        if sys.buchberger_verify() {
            "true".to_string()
        } else {
            "false".to_string()
        }
    } else {
        String::new()
    };

    let mut row = vec![poset_label(p), poset_label(q), kind_label(kind).to_string()];
    row.extend(counts.counts().iter().map(|c| c.to_string()));
    row.extend(delta.entries().iter().map(|x| x.to_string()));
    row.push(fano.to_string());
    row.push(gorenstein.to_string());
    row.push(normal.to_string());
    row.push(groebner_ok);
    Ok(row)
}
