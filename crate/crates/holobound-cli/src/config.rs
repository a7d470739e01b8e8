//! The run configuration schema and its translation into library objects.

use std::collections::HashMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use holobound::checks::{MonotoneMap, SharpnessMode};
use holobound::invariance::TestIntegrand;
use holobound::{
    Automorphism, CPoint, DensityKind, DomainSpec, EngineSettings, HoloFunction, MeasureSpec,
    PolyExpTerm, SpaceSpec, WeightSpec,
};

/// A number that may be the string "inf".
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Extended {
    Num(f64),
    Word(ExtendedWord),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExtendedWord {
    #[serde(rename = "inf")]
    Inf,
}

impl Extended {
    pub fn value(self) -> f64 {
        match self {
            Extended::Num(v) => v,
            Extended::Word(ExtendedWord::Inf) => f64::INFINITY,
        }
    }

    pub fn from_f64(v: f64) -> Self {
        if v.is_infinite() {
            Extended::Word(ExtendedWord::Inf)
        } else {
            Extended::Num(v)
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpaceConfig {
    pub id: String,
    /// "fock" | "ball" | "polydisc"
    pub domain: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub radii: Vec<Extended>,
    /// Remark-2 style contiguous coordinate blocks; alphas are given
    /// per block and expanded per coordinate.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub blocks: Vec<usize>,
    /// "fock" | "fock_aniso" | "ball" | "polydisc"
    pub weight: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub alphas: Vec<f64>,
    pub p: Extended,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermConfig {
    pub coeff_re: f64,
    pub coeff_im: f64,
    pub powers: Vec<u32>,
    pub exp_re: Vec<f64>,
    pub exp_im: Vec<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FunctionConfig {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub terms: Vec<TermConfig>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AutomorphismConfig {
    pub id: String,
    /// "translation" | "ball" | "polydisc"
    pub automorphism: String,
    pub z0_re: Vec<f64>,
    pub z0_im: Vec<f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub radii: Vec<Extended>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum IntegrandConfig {
    #[serde(rename = "gauss-damped")]
    GaussDamped {
        rate: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        function: Option<String>,
    },
    #[serde(rename = "boundary-power")]
    BoundaryPower { sigma: f64 },
    #[serde(rename = "factor-power")]
    FactorPower { sigmas: Vec<f64> },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "check")]
pub enum CheckConfig {
    #[serde(rename = "bound")]
    Bound {
        space: String,
        function: String,
        point_re: Vec<f64>,
        point_im: Vec<f64>,
    },
    #[serde(rename = "sup-bound")]
    SupBound {
        space: String,
        function: String,
        #[serde(default = "default_search_budget")]
        search_budget: usize,
    },
    #[serde(rename = "invariance")]
    Invariance {
        automorphism: String,
        integrand: IntegrandConfig,
    },
    #[serde(rename = "pluriharmonicity")]
    Pluriharmonicity {
        space: String,
        automorphism: String,
        #[serde(default = "default_psi_points")]
        points: usize,
    },
    #[serde(rename = "sharpness")]
    Sharpness {
        space: String,
        z0_re: Vec<f64>,
        z0_im: Vec<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        mode: Option<String>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        scales: Vec<f64>,
    },
    #[serde(rename = "delta0")]
    Delta0 {
        space: String,
        #[serde(default = "default_candidates")]
        candidates: usize,
        #[serde(default = "default_max_terms")]
        max_terms: usize,
        #[serde(default = "default_max_degree")]
        max_degree: u32,
        #[serde(default = "default_exp_scale")]
        exp_scale: f64,
    },
    #[serde(rename = "scheme")]
    Scheme {
        space: String,
        automorphism: String,
        function: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        phi_rate: Option<f64>,
    },
    #[serde(rename = "integrated")]
    Integrated {
        space: String,
        function: String,
        /// "t" | "t^2" | "log(1+t)"
        map: String,
        radius: f64,
    },
}

fn default_search_budget() -> usize {
    512
}
fn default_psi_points() -> usize {
    1000
}
fn default_candidates() -> usize {
    200
}
fn default_max_terms() -> usize {
    4
}
fn default_max_degree() -> u32 {
    3
}
fn default_exp_scale() -> f64 {
    0.5
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct IntegrationConfig {
    /// "auto" | "deterministic" | "monte-carlo"
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mc_samples: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub det_radial_max: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub det_angular_max: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_det_nodes: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub det_tol: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mc_tol: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OutputConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
    /// "csv" | "json"
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunConfig {
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub integration: Option<IntegrationConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<OutputConfig>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub spaces: Vec<SpaceConfig>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub functions: Vec<FunctionConfig>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub automorphisms: Vec<AutomorphismConfig>,
    pub checks: Vec<CheckConfig>,
}

impl RunConfig {
    pub fn engine_settings(&self) -> EngineSettings {
        let mut s = EngineSettings {
            seed: self.seed,
            ..EngineSettings::default()
        };
        if let Some(i) = &self.integration {
            if let Some(v) = i.mc_samples {
                s.mc_samples = v;
            }
            if let Some(v) = i.det_radial_max {
                s.det_radial_max = v;
            }
            if let Some(v) = i.det_angular_max {
                s.det_angular_max = v;
            }
            if let Some(v) = i.max_det_nodes {
                s.max_det_nodes = v;
            }
            if let Some(v) = i.det_tol {
                s.det_tol = v;
            }
            if let Some(v) = i.mc_tol {
                s.mc_tol = v;
            }
        }
        s
    }
}

/// Resolved objects, keyed by their config ids.
pub struct ResolvedConfig {
    pub settings: EngineSettings,
    pub plan: holobound::PlanChoice,
    pub spaces: HashMap<String, SpaceSpec>,
    pub functions: HashMap<String, HoloFunction>,
    pub automorphisms: HashMap<String, Automorphism>,
}

#[derive(Debug)]
pub struct ConfigError {
    pub path: String,
    pub message: String,
}

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

fn err(path: impl Into<String>, message: impl std::fmt::Display) -> ConfigError {
    ConfigError {
        path: path.into(),
        message: message.to_string(),
    }
}

pub fn resolve(config: &RunConfig) -> Result<ResolvedConfig, Vec<ConfigError>> {
    let settings = config.engine_settings();
    let mut errors = Vec::new();
    let plan = match config
        .integration
        .as_ref()
        .and_then(|i| i.method.as_deref())
        .unwrap_or("auto")
    {
        "auto" => holobound::PlanChoice::Auto,
        "deterministic" => holobound::PlanChoice::ForceDeterministic,
        "monte-carlo" => holobound::PlanChoice::ForceMonteCarlo,
        other => {
            errors.push(err(
                "integration.method",
                format!("unknown method '{other}' (use auto, deterministic, monte-carlo)"),
            ));
            holobound::PlanChoice::Auto
        }
    };
    let mut spaces = HashMap::new();
    let mut functions = HashMap::new();
    let mut automorphisms = HashMap::new();

    for (i, sc) in config.spaces.iter().enumerate() {
        let path = format!("spaces[{i}]");
        if spaces.contains_key(&sc.id) {
            errors.push(err(format!("{path}.id"), format!("duplicate id '{}'", sc.id)));
            continue;
        }
        match build_space(sc, &settings) {
            Ok(s) => {
                spaces.insert(sc.id.clone(), s);
            }
            Err(e) => errors.push(err(path, e)),
        }
    }
    for (i, fc) in config.functions.iter().enumerate() {
        let path = format!("functions[{i}]");
        if functions.contains_key(&fc.id) {
            errors.push(err(format!("{path}.id"), format!("duplicate id '{}'", fc.id)));
            continue;
        }
        match build_function(fc) {
            Ok(f) => {
                functions.insert(fc.id.clone(), f);
            }
            Err(e) => errors.push(err(path, e)),
        }
    }
    for (i, ac) in config.automorphisms.iter().enumerate() {
        let path = format!("automorphisms[{i}]");
        if automorphisms.contains_key(&ac.id) {
            errors.push(err(format!("{path}.id"), format!("duplicate id '{}'", ac.id)));
            continue;
        }
        match build_automorphism(ac) {
            Ok(a) => {
                automorphisms.insert(ac.id.clone(), a);
            }
            Err(e) => errors.push(err(path, e)),
        }
    }

    // reference checks
    for (i, cc) in config.checks.iter().enumerate() {
        let path = format!("checks[{i}]");
        let mut need_space = |id: &String, field: &str| {
            if !spaces.contains_key(id) {
                errors.push(err(
                    format!("{path}.{field}"),
                    format!("unknown space id '{id}'"),
                ));
            }
        };
        match cc {
            CheckConfig::Bound { space, function, .. }
            | CheckConfig::SupBound { space, function, .. }
            | CheckConfig::Integrated { space, function, .. } => {
                need_space(space, "space");
                if !functions.contains_key(function) {
                    errors.push(err(
                        format!("{path}.function"),
                        format!("unknown function id '{function}'"),
                    ));
                }
            }
            CheckConfig::Sharpness { space, .. } | CheckConfig::Delta0 { space, .. } => {
                need_space(space, "space");
            }
            CheckConfig::Pluriharmonicity {
                space,
                automorphism,
                ..
            } => {
                need_space(space, "space");
                if !automorphisms.contains_key(automorphism) {
                    errors.push(err(
                        format!("{path}.automorphism"),
                        format!("unknown automorphism id '{automorphism}'"),
                    ));
                }
            }
            CheckConfig::Scheme {
                space,
                automorphism,
                function,
                ..
            } => {
                need_space(space, "space");
                if !automorphisms.contains_key(automorphism) {
                    errors.push(err(
                        format!("{path}.automorphism"),
                        format!("unknown automorphism id '{automorphism}'"),
                    ));
                }
                if !functions.contains_key(function) {
                    errors.push(err(
                        format!("{path}.function"),
                        format!("unknown function id '{function}'"),
                    ));
                }
            }
            CheckConfig::Invariance {
                automorphism,
                integrand,
            } => {
                if !automorphisms.contains_key(automorphism) {
                    errors.push(err(
                        format!("{path}.automorphism"),
                        format!("unknown automorphism id '{automorphism}'"),
                    ));
                }
                if let IntegrandConfig::GaussDamped {
                    function: Some(fid),
                    ..
                } = integrand
                {
                    if !functions.contains_key(fid) {
                        errors.push(err(
                            format!("{path}.integrand.function"),
                            format!("unknown function id '{fid}'"),
                        ));
                    }
                }
            }
        }
    }

    if errors.is_empty() {
        Ok(ResolvedConfig {
            settings,
            plan,
            spaces,
            functions,
            automorphisms,
        })
    } else {
        Err(errors)
    }
}

fn build_space(sc: &SpaceConfig, settings: &EngineSettings) -> anyhow::Result<SpaceSpec> {
    let radii: Vec<f64> = sc.radii.iter().map(|r| r.value()).collect();
    let domain = match sc.domain.as_str() {
        "fock" => DomainSpec::full_space(sc.n)?,
        "ball" => DomainSpec::unit_ball(sc.n)?,
        "polydisc" => {
            if radii.len() != sc.n {
                anyhow::bail!("polydisc needs {} radii, got {}", sc.n, radii.len());
            }
            DomainSpec::polydisc(radii.clone())?
        }
        other => anyhow::bail!("unknown domain '{other}'"),
    };
    let alphas_expanded: Vec<f64> = if sc.blocks.is_empty() {
        sc.alphas.clone()
    } else {
        if sc.blocks.iter().sum::<usize>() != sc.n {
            anyhow::bail!("blocks must sum to n={}", sc.n);
        }
        if sc.alphas.len() != sc.blocks.len() {
            anyhow::bail!(
                "one alpha per block required: {} blocks, {} alphas",
                sc.blocks.len(),
                sc.alphas.len()
            );
        }
        sc.blocks
            .iter()
            .zip(&sc.alphas)
            .flat_map(|(&len, &a)| std::iter::repeat(a).take(len))
            .collect()
    };
    let p = sc.p.value();
    let weight_p = if p.is_finite() { p } else { 2.0 };
    let weight = match sc.weight.as_str() {
        "fock" => WeightSpec::Fock {
            alpha: sc.alpha.ok_or_else(|| anyhow::anyhow!("fock weight needs 'alpha'"))?,
        },
        "fock_aniso" => WeightSpec::FockAniso {
            alphas: alphas_expanded,
        },
        "ball" => WeightSpec::BallBergman {
            alpha: sc.alpha.ok_or_else(|| anyhow::anyhow!("ball weight needs 'alpha'"))?,
            p: weight_p,
        },
        "polydisc" => WeightSpec::PolydiscBergman {
            alphas: alphas_expanded,
            p: weight_p,
            radii: radii.clone(),
        },
        other => anyhow::bail!("unknown weight '{other}'"),
    };
    let kind = match &weight {
        WeightSpec::Fock { .. } | WeightSpec::FockAniso { .. } => DensityKind::Lebesgue,
        WeightSpec::BallBergman { .. } => DensityKind::BallInvariant,
        WeightSpec::PolydiscBergman { .. } => DensityKind::PolydiscInvariant,
    };
    let measure = MeasureSpec::new(domain.clone(), kind)?;
    Ok(SpaceSpec::new(domain, measure, weight, p, settings)?)
}

fn build_function(fc: &FunctionConfig) -> anyhow::Result<HoloFunction> {
    let mut terms = Vec::with_capacity(fc.terms.len());
    for t in &fc.terms {
        if t.exp_re.len() != t.powers.len() || t.exp_im.len() != t.powers.len() {
            anyhow::bail!("term arrays must share one length per coordinate");
        }
        let expvec = t
            .exp_re
            .iter()
            .zip(&t.exp_im)
            .map(|(&re, &im)| Complex64::new(re, im))
            .collect();
        terms.push(PolyExpTerm::new(
            Complex64::new(t.coeff_re, t.coeff_im),
            t.powers.clone(),
            expvec,
        )?);
    }
    let label = fc.label.clone().unwrap_or_else(|| fc.id.clone());
    Ok(HoloFunction::from_terms(terms, label)?)
}

fn build_automorphism(ac: &AutomorphismConfig) -> anyhow::Result<Automorphism> {
    let z0 = CPoint::from_re_im(&ac.z0_re, &ac.z0_im)?;
    Ok(match ac.automorphism.as_str() {
        "translation" => Automorphism::translation(z0),
        "ball" => Automorphism::ball_mobius(z0)?,
        "polydisc" => {
            let radii: Vec<f64> = if ac.radii.is_empty() {
                vec![1.0; z0.dim()]
            } else {
                ac.radii.iter().map(|r| r.value()).collect()
            };
            Automorphism::polydisc_mobius(z0, radii)?
        }
        other => anyhow::bail!("unknown automorphism '{other}'"),
    })
}

pub fn integrand_from_config(
    ic: &IntegrandConfig,
    functions: &HashMap<String, HoloFunction>,
    dim: usize,
) -> anyhow::Result<TestIntegrand> {
    Ok(match ic {
        IntegrandConfig::GaussDamped { rate, function } => {
            let h = match function {
                Some(id) => functions
                    .get(id)
                    .cloned()
                    .ok_or_else(|| anyhow::anyhow!("unknown function id '{id}'"))?,
                None => HoloFunction::constant(Complex64::new(1.0, 0.0), dim),
            };
            TestIntegrand::GaussDamped { rate: *rate, h }
        }
        IntegrandConfig::BoundaryPower { sigma } => TestIntegrand::BoundaryPower { sigma: *sigma },
        IntegrandConfig::FactorPower { sigmas } => TestIntegrand::FactorBoundaryPower {
            sigmas: sigmas.clone(),
        },
    })
}

pub fn monotone_map_from_name(name: &str) -> anyhow::Result<MonotoneMap> {
    Ok(match name {
        "t" => MonotoneMap::Identity,
        "t^2" => MonotoneMap::Square,
        "log(1+t)" => MonotoneMap::Log1p,
        other => anyhow::bail!("unknown monotone map '{other}' (use t, t^2, log(1+t))"),
    })
}

pub fn sharpness_mode_from_name(
    name: Option<&str>,
    weight: &WeightSpec,
) -> anyhow::Result<SharpnessMode> {
    Ok(match name {
        None => SharpnessMode::for_weight(weight),
        Some("exact") => SharpnessMode::ExactBand,
        Some("family") => SharpnessMode::FamilyEvidence,
        Some(other) => anyhow::bail!("unknown sharpness mode '{other}'"),
    })
}
