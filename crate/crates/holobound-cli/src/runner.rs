//! Executes the checks of a run configuration and aggregates the outcome.

use serde::Serialize;
use sha2::{Digest, Sha256};

use holobound::checks::report::CaseContext;
use holobound::checks::{self, tol, EstimateReport, Verdict};
use holobound::invariance::{invariance_check, TestIntegrand};
use holobound::rng::tag_of;
use holobound::{CPoint, DensityKind, DomainSpec, HoloFunction, MeasureSpec};

use crate::config::{
    integrand_from_config, monotone_map_from_name, resolve, sharpness_mode_from_name,
    CheckConfig, ConfigError, RunConfig,
};

#[derive(Debug, Clone, Serialize)]
pub struct RunSummary {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
    pub total: usize,
    pub seed: u64,
    pub config_digest: String,
    pub parallel: bool,
    pub mc_samples: u64,
    /// One entry per configured space, with its cached normalization N.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub spaces: Vec<SpaceHeader>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpaceHeader {
    pub id: String,
    pub geometry: String,
    pub n: usize,
    pub p: f64,
    pub alpha: String,
    pub normalization: Option<f64>,
    pub normalization_error: Option<f64>,
}

#[derive(Debug)]
pub enum RunError {
    Config(Vec<ConfigError>),
    Execution(String),
}

impl std::fmt::Display for RunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RunError::Config(errors) => {
                writeln!(f, "configuration errors:")?;
                for e in errors {
                    writeln!(f, "  {e}")?;
                }
                Ok(())
            }
            RunError::Execution(msg) => write!(f, "execution error: {msg}"),
        }
    }
}

impl std::error::Error for RunError {}

pub fn config_digest(config: &RunConfig) -> String {
    let canonical = serde_json::to_vec(config).expect("config serializes");
    let digest = Sha256::digest(&canonical);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// Run every check, in configuration order. The front-end stays on one
/// thread; parallelism lives inside the integration engine, so reports are
/// identical regardless of thread count.
pub fn run(config: &RunConfig) -> Result<(RunSummary, Vec<EstimateReport>), RunError> {
    let resolved = resolve(config).map_err(RunError::Config)?;
    let settings = resolved.settings.clone();

    let mut reports = Vec::new();
    for (idx, check) in config.checks.iter().enumerate() {
        let mut rs = execute_check(idx, check, &resolved, &settings)
            .map_err(|e| RunError::Execution(format!("checks[{idx}]: {e}")))?;
        reports.append(&mut rs);
    }
    let spaces = space_headers(config, &resolved);
    let mut summary = RunSummary {
        pass: 0,
        fail: 0,
        inconclusive: 0,
        total: reports.len(),
        seed: config.seed,
        config_digest: config_digest(config),
        parallel: holobound::parallel_enabled(),
        mc_samples: settings.mc_samples,
        spaces,
    };
    for r in &reports {
        match r.verdict {
            Verdict::Pass => summary.pass += 1,
            Verdict::Fail => summary.fail += 1,
            Verdict::Inconclusive => summary.inconclusive += 1,
        }
    }
    Ok((summary, reports))
}

fn space_headers(
    config: &RunConfig,
    resolved: &crate::config::ResolvedConfig,
) -> Vec<SpaceHeader> {
    config
        .spaces
        .iter()
        .filter_map(|sc| {
            let s = resolved.spaces.get(&sc.id)?;
            Some(SpaceHeader {
                id: sc.id.clone(),
                geometry: s.weight().variant_name().to_string(),
                n: s.dim(),
                p: s.p(),
                alpha: s.weight().alpha_label(),
                normalization: s.normalization().map(|n| n.value),
                normalization_error: s.normalization().map(|n| n.error),
            })
        })
        .collect()
}

fn execute_check(
    idx: usize,
    check: &CheckConfig,
    resolved: &crate::config::ResolvedConfig,
    settings: &holobound::EngineSettings,
) -> anyhow::Result<Vec<EstimateReport>> {
    let tag = tag_of(&format!("{idx}:{check:?}"));
    match check {
        CheckConfig::Bound {
            space,
            function,
            point_re,
            point_im,
        } => {
            let s = &resolved.spaces[space];
            let f = &resolved.functions[function];
            let z = CPoint::from_re_im(point_re, point_im)?;
            Ok(vec![checks::pointwise_bound_check(
                f, s, &z, resolved.plan, settings, tag,
            )?])
        }
        CheckConfig::SupBound {
            space,
            function,
            search_budget,
        } => {
            let s = &resolved.spaces[space];
            let f = &resolved.functions[function];
            Ok(vec![checks::sup_bound_check(
                f,
                s,
                *search_budget,
                settings,
                tag,
            )?])
        }
        CheckConfig::Invariance {
            automorphism,
            integrand,
        } => {
            let map = &resolved.automorphisms[automorphism];
            let domain = map
                .domain()
                .ok_or_else(|| anyhow::anyhow!("automorphism has no fixed domain"))?;
            let kind = match &domain {
                DomainSpec::FullSpace { .. } => DensityKind::Lebesgue,
                DomainSpec::UnitBall { .. } => DensityKind::BallInvariant,
                DomainSpec::Polydisc { .. } => DensityKind::PolydiscInvariant,
            };
            let measure = MeasureSpec::new(domain.clone(), kind)?;
            let g: TestIntegrand =
                integrand_from_config(integrand, &resolved.functions, domain.dim())?;
            let out = invariance_check(map, &measure, &g, settings, tag)?;
            let deterministic = matches!(kind, DensityKind::Lebesgue);
            let allowance = if deterministic {
                tol::INVARIANCE_DET_REL * out.lhs.value.abs().max(1.0)
            } else {
                tol::MC_SIGMA * out.combined_err
            };
            let ctx = CaseContext {
                check: "invariance",
                geometry: map.variant_name().to_string(),
                n: domain.dim(),
                p: 0.0,
                alpha: "-".to_string(),
                point: map.base_point().to_string(),
                descriptor: format!("{g:?}"),
            };
            let merged = holobound::IntegrationResult {
                value: out.lhs.value,
                error: out.combined_err,
                method: out.rhs.method,
                nodes: out.lhs.nodes + out.rhs.nodes,
                converged: out.lhs.converged && out.rhs.converged,
            };
            Ok(vec![ctx.deviation_report(
                (out.lhs.value - out.rhs.value).abs(),
                allowance,
                &merged,
            )])
        }
        CheckConfig::Pluriharmonicity {
            space,
            automorphism,
            points,
        } => {
            let s = &resolved.spaces[space];
            let map = &resolved.automorphisms[automorphism];
            let psi = checks::psi_match_check(s, map, *points, settings, tag)?;
            let stencil =
                checks::pluriharmonicity_check(s, map, (*points / 10).max(5), settings, tag)?;
            Ok(vec![psi, stencil])
        }
        CheckConfig::Sharpness {
            space,
            z0_re,
            z0_im,
            mode,
            scales,
        } => {
            let s = &resolved.spaces[space];
            let z0 = CPoint::from_re_im(z0_re, z0_im)?;
            let mode = sharpness_mode_from_name(mode.as_deref(), s.weight())?;
            Ok(vec![checks::sharpness_check(
                s, &z0, mode, scales, settings, tag,
            )?])
        }
        CheckConfig::Delta0 {
            space,
            candidates,
            max_terms,
            max_degree,
            exp_scale,
        } => {
            let s = &resolved.spaces[space];
            let mut family = vec![HoloFunction::constant(
                num_complex::Complex64::new(1.0, 0.0),
                s.dim(),
            )];
            family.extend(checks::family::random_family(
                settings.seed,
                tag,
                *candidates,
                s.dim(),
                *max_terms,
                *max_degree,
                *exp_scale,
            ));
            let est = checks::delta0_estimate(s, &family, settings, tag)?;
            let ctx = CaseContext {
                check: "delta0",
                geometry: s.weight().variant_name().to_string(),
                n: s.dim(),
                p: s.p(),
                alpha: s.weight().alpha_label(),
                point: CPoint::zero(s.dim()).to_string(),
                descriptor: format!("{} candidates", family.len()),
            };
            let upper = 1.0 + tol::DELTA0_UPPER.max(tol::MC_SIGMA * est.err_est);
            Ok(vec![ctx.band_report(
                est.value,
                1.0 - tol::DELTA0_LOWER,
                upper,
                &est.integration,
            )])
        }
        CheckConfig::Scheme {
            space,
            automorphism,
            function,
            phi_rate,
        } => {
            let s = &resolved.spaces[space];
            let map = &resolved.automorphisms[automorphism];
            let f = &resolved.functions[function];
            let rate = phi_rate.unwrap_or_else(|| s.p());
            let spec = checks::SchemeSpec {
                space: s.clone(),
                map: map.clone(),
                phi_rate: rate,
                class_sample: vec![f.clone()],
            };
            let (r1, r2) = checks::scheme_check(&spec, f, settings, tag)?;
            Ok(vec![r1, r2])
        }
        CheckConfig::Integrated {
            space,
            function,
            map,
            radius,
        } => {
            let s = &resolved.spaces[space];
            let f = &resolved.functions[function];
            let m = monotone_map_from_name(map)?;
            Ok(vec![checks::integrated_bound_check(
                f, s, m, *radius, settings, tag,
            )?])
        }
    }
}

/// Exit-status policy: 0 all pass, 1 any fail, 2 inconclusive only.
pub fn exit_code(summary: &RunSummary) -> i32 {
    if summary.fail > 0 {
        1
    } else if summary.inconclusive > 0 {
        2
    } else {
        0
    }
}
