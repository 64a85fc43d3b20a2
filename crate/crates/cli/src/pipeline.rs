//! Stage runners shared by the `delta` and `verify` subcommands.

use std::collections::BTreeMap;
use std::time::Instant;

use ocpoly::{
    build_system, delta_vector, ehrhart_counts, gamma, is_fano, is_gorenstein_fano,
    is_normal_up_to, GammaKind, GeometryError, LatticePolytope, Poset, TieBreak,
};

use crate::report::{
    kind_label, tie_label, Diagnostics, DiagnosticsBinomial, DiagnosticsSPair, GroebnerSummary,
    HilbertSummary, NormalSummary, PosetFile, RunReport,
};
use crate::CliError;

pub struct Timings {
    map: Option<BTreeMap<&'static str, u128>>,
}

impl Timings {
    pub fn new(enabled: bool) -> Timings {
        Timings {
            map: enabled.then(BTreeMap::new),
        }
    }

    pub fn record<T>(&mut self, stage: &'static str, f: impl FnOnce() -> T) -> T {
        let started = Instant::now();
        let out = f();
        if let Some(map) = &mut self.map {
            map.insert(stage, started.elapsed().as_micros());
        }
        out
    }

    pub fn into_map(self) -> Option<BTreeMap<&'static str, u128>> {
        self.map
    }
}

fn internal(e: GeometryError) -> CliError {
    CliError::Property(format!("geometry stage failed: {e}"))
}

pub fn build_gamma(kind: GammaKind, p: &Poset, q: &Poset) -> Result<LatticePolytope, CliError> {
    gamma(kind, p, q).map_err(|e| CliError::Input(e.to_string()))
}

fn base_report(
    p: &Poset,
    q: &Poset,
    kind: GammaKind,
    poly: &LatticePolytope,
    timings: &mut Timings,
) -> Result<RunReport, CliError> {
    let d = poly.dim();
    let counts = timings.record("counts", || ehrhart_counts(poly, d)).map_err(internal)?;
    let delta = timings.record("delta", || delta_vector(&counts));
    Ok(RunReport {
        poset_p: PosetFile::canonical(p),
        poset_q: PosetFile::canonical(q),
        kind: kind_label(kind),
        dim: d,
        counts: counts
            .counts()
            .iter()
            .map(|c| i128::try_from(c).expect("count exceeds i128"))
            .collect(),
        delta: delta.to_i64(),
        delta_symmetric: delta.is_symmetric(),
        fano: None,
        gorenstein: None,
        normal: None,
        groebner: None,
        hilbert: None,
        timing_us: None,
    })
}

pub fn delta_report(
    p: &Poset,
    q: &Poset,
    kind: GammaKind,
    timing: bool,
) -> Result<RunReport, CliError> {
    let mut timings = Timings::new(timing);
    let poly = timings.record("gamma", || build_gamma(kind, p, q))?;
    timings.record("hull", || poly.hrep().map(|_| ())).map_err(internal)?;
    let mut report = base_report(p, q, kind, &poly, &mut timings)?;
    report.timing_us = timings.into_map();
    Ok(report)
}

pub struct VerifyOptions {
    pub kind: GammaKind,
    pub n_max: usize,
    pub hilbert_depth: usize,
    pub tie_break: TieBreak,
    pub corrupt_generators: bool,
    pub timing: bool,
    pub want_diagnostics: bool,
}

pub struct VerifyOutcome {
    pub report: RunReport,
    /// Names of failed properties, in pipeline order.
    pub failures: Vec<&'static str>,
    pub diagnostics: Option<Diagnostics>,
}

pub fn verify_report(p: &Poset, q: &Poset, opts: &VerifyOptions) -> Result<VerifyOutcome, CliError> {
    let mut timings = Timings::new(opts.timing);
    let mut failures: Vec<&'static str> = Vec::new();

    let poly = timings.record("gamma", || build_gamma(opts.kind, p, q))?;
    timings.record("hull", || poly.hrep().map(|_| ())).map_err(internal)?;
    let mut report = base_report(p, q, opts.kind, &poly, &mut timings)?;

    let mut diagnostics = None;
    // the binomial presentation only exists for the order-minus-chain polytope
    if opts.kind == GammaKind::OrderMinusChain {
        let mut sys = timings.record("generators", || {
            build_system(p, q, opts.tie_break).map_err(|e| CliError::Input(e.to_string()))
        })?;
        if opts.corrupt_generators {
            sys.swap_binomial_sides(0);
        }
        let groebner = timings.record("buchberger", || sys.verify_groebner());
        let profile = sys.initial_ideal_profile();
        if !groebner.ok() {
            failures.push("groebner");
        }
        if !(profile.quadratic && profile.squarefree && profile.z_free) {
            failures.push("initial-ideal");
        }

        let hilbert_ok = timings.record("hilbert", || {
            (0..=opts.hilbert_depth).all(|n| {
                let standard = sys.standard_monomial_count(n);
                if standard != sys.hilbert_oracle(n) {
                    return false;
                }
                if n == 0 {
                    return standard == 1;
                }
                poly.lattice_points(n as u64)
                    .map(|pts| pts.len() as u64 == standard)
                    .unwrap_or(false)
            })
        });
        if !hilbert_ok {
            failures.push("hilbert");
        }

        report.groebner = Some(GroebnerSummary {
            tie_break: tie_label(opts.tie_break),
            variables: sys.order().nvars(),
            binomials: sys.generators().len(),
            leading_terms_ok: groebner.leading_terms_ok,
            s_pairs_reduced: groebner.s_pairs.len(),
            s_pairs_skipped_coprime: groebner.skipped_coprime,
            all_reduced_to_zero: groebner.s_pairs.iter().all(|s| s.reduced_to_zero),
            quadratic: profile.quadratic,
            squarefree: profile.squarefree,
            z_free: profile.z_free,
            star_substitutions: sys
                .generators()
                .iter()
                .filter(|g| g.kind() == ocpoly::BinomialKind::YY && g.second_has_z())
                .count(),
        });
        report.hilbert = Some(HilbertSummary {
            depth: opts.hilbert_depth,
            ok: hilbert_ok,
        });

        if opts.want_diagnostics {
            diagnostics = Some(Diagnostics {
                tie_break: tie_label(opts.tie_break),
                variables: sys.order().vars().iter().map(ToString::to_string).collect(),
                binomials: sys
                    .generators()
                    .iter()
                    .map(|g| DiagnosticsBinomial {
                        first: sys.order().monomial_string(g.first()),
                        second: sys.order().monomial_string(g.second()),
                        kind: g.kind().diagnostics_label(),
                        star_substitution: (g.kind() == ocpoly::BinomialKind::YY
                            && g.second_has_z())
                        .then_some(true),
                    })
                    .collect(),
                s_pairs_skipped_coprime: groebner.skipped_coprime,
                s_pairs: groebner
                    .s_pairs
                    .iter()
                    .map(|s| DiagnosticsSPair {
                        i: s.i,
                        j: s.j,
                        reduced_to_zero: s.reduced_to_zero,
                    })
                    .collect(),
            });
        }
    }

    let fano = timings.record("fano", || is_fano(&poly)).map_err(internal)?;
    if !fano {
        failures.push("fano");
    }
    let gorenstein = timings
        .record("gorenstein", || is_gorenstein_fano(&poly))
        .map_err(internal)?;
    if !gorenstein {
        failures.push("gorenstein");
    }
    if !report.delta_symmetric {
        failures.push("delta-symmetry");
    }
    let normal = timings
        .record("normality", || is_normal_up_to(&poly, opts.n_max))
        .map_err(internal)?;
    if !normal {
        failures.push("normality");
    }

    report.fano = Some(fano);
    report.gorenstein = Some(gorenstein);
    report.normal = Some(NormalSummary {
        n_max: opts.n_max,
        ok: normal,
    });
    report.timing_us = timings.into_map();

    Ok(VerifyOutcome {
        report,
        failures,
        diagnostics,
    })
}
