//! Built-in verification presets, one per instantiated geometry plus the
//! generic-scheme and integrated-estimate batteries.

use crate::config::{
    AutomorphismConfig, CheckConfig, Extended, FunctionConfig, IntegrandConfig,
    IntegrationConfig, RunConfig, SpaceConfig, TermConfig,
};

pub const PRESET_NAMES: [&str; 6] = [
    "fock-theorem-f",
    "fock-aniso",
    "ball-bergman",
    "polydisc-bergman",
    "scheme-generic",
    "integrated-remark",
];

pub fn preset(name: &str) -> Option<RunConfig> {
    match name {
        "fock-theorem-f" => Some(fock_theorem_f()),
        "fock-aniso" => Some(fock_aniso()),
        "ball-bergman" => Some(ball_bergman()),
        "polydisc-bergman" => Some(polydisc_bergman()),
        "scheme-generic" => Some(scheme_generic()),
        "integrated-remark" => Some(integrated_remark()),
        _ => None,
    }
}

fn num(v: f64) -> Extended {
    Extended::from_f64(v)
}

fn fock_space(id: &str, n: usize, alpha: f64, p: f64) -> SpaceConfig {
    SpaceConfig {
        id: id.into(),
        domain: "fock".into(),
        n,
        radii: vec![],
        blocks: vec![],
        weight: "fock".into(),
        alpha: Some(alpha),
        alphas: vec![],
        p: num(p),
    }
}

fn term1(coeff: (f64, f64), power: u32, b: (f64, f64)) -> TermConfig {
    TermConfig {
        coeff_re: coeff.0,
        coeff_im: coeff.1,
        powers: vec![power],
        exp_re: vec![b.0],
        exp_im: vec![b.1],
    }
}

fn default_integration() -> Option<IntegrationConfig> {
    Some(IntegrationConfig {
        mc_samples: Some(200_000),
        // two complex factors still fit a trustworthy tensor grid, and the
        // 1-D ladders may run deep enough to certify Mobius kernels
        max_det_nodes: Some(5_000_000),
        det_radial_max: Some(128),
        det_angular_max: Some(256),
        ..IntegrationConfig::default()
    })
}

fn fock_theorem_f() -> RunConfig {
    let functions = vec![
        FunctionConfig {
            id: "one_plus_z".into(),
            label: Some("1+z".into()),
            terms: vec![term1((1.0, 0.0), 0, (0.0, 0.0)), term1((1.0, 0.0), 1, (0.0, 0.0))],
        },
        FunctionConfig {
            id: "gauss_mix".into(),
            label: Some("z^2+0.3e^{0.5z}".into()),
            terms: vec![term1((1.0, 0.0), 2, (0.0, 0.0)), term1((0.3, 0.0), 0, (0.5, 0.0))],
        },
        FunctionConfig {
            id: "plane_wave2".into(),
            label: Some("exp pairing in C^2".into()),
            terms: vec![TermConfig {
                coeff_re: 1.0,
                coeff_im: 0.0,
                powers: vec![0, 0],
                exp_re: vec![1.0, 0.5],
                exp_im: vec![0.0, -0.5],
            }],
        },
    ];
    RunConfig {
        seed: 20240601,
        integration: default_integration(),
        output: None,
        spaces: vec![
            fock_space("f1_a1_p2", 1, 1.0, 2.0),
            fock_space("f1_a2_p05", 1, 2.0, 0.5),
            fock_space("f2_a1_p2", 2, 1.0, 2.0),
        ],
        functions,
        automorphisms: vec![],
        checks: vec![
            CheckConfig::Bound {
                space: "f1_a1_p2".into(),
                function: "one_plus_z".into(),
                point_re: vec![0.7],
                point_im: vec![-0.4],
            },
            CheckConfig::Bound {
                space: "f1_a2_p05".into(),
                function: "gauss_mix".into(),
                point_re: vec![1.2],
                point_im: vec![0.3],
            },
            CheckConfig::Bound {
                space: "f2_a1_p2".into(),
                function: "plane_wave2".into(),
                point_re: vec![0.5, -0.5],
                point_im: vec![0.0, 0.5],
            },
            CheckConfig::SupBound {
                space: "f1_a1_p2".into(),
                function: "one_plus_z".into(),
                search_budget: 512,
            },
            CheckConfig::Sharpness {
                space: "f1_a1_p2".into(),
                z0_re: vec![0.0],
                z0_im: vec![0.0],
                mode: None,
                scales: vec![],
            },
            CheckConfig::Sharpness {
                space: "f1_a1_p2".into(),
                z0_re: vec![1.0],
                z0_im: vec![0.0],
                mode: None,
                scales: vec![],
            },
            CheckConfig::Sharpness {
                space: "f1_a1_p2".into(),
                z0_re: vec![2.0],
                z0_im: vec![0.0],
                mode: None,
                scales: vec![],
            },
            CheckConfig::Delta0 {
                space: "f1_a1_p2".into(),
                candidates: 64,
                max_terms: 4,
                max_degree: 3,
                exp_scale: 0.5,
            },
        ],
    }
}

fn fock_aniso() -> RunConfig {
    RunConfig {
        seed: 20240602,
        integration: default_integration(),
        output: None,
        spaces: vec![
            SpaceConfig {
                id: "aniso".into(),
                domain: "fock".into(),
                n: 2,
                radii: vec![],
                blocks: vec![],
                weight: "fock_aniso".into(),
                alpha: None,
                alphas: vec![1.0, 2.0],
                p: num(2.0),
            },
            // Remark-2 style: one radial block covering both coordinates
            SpaceConfig {
                id: "block".into(),
                domain: "fock".into(),
                n: 2,
                radii: vec![],
                blocks: vec![2],
                weight: "fock_aniso".into(),
                alpha: None,
                alphas: vec![1.5],
                p: num(2.0),
            },
        ],
        functions: vec![FunctionConfig {
            id: "mix2".into(),
            label: Some("z1·z2 + 1".into()),
            terms: vec![
                TermConfig {
                    coeff_re: 1.0,
                    coeff_im: 0.0,
                    powers: vec![1, 1],
                    exp_re: vec![0.0, 0.0],
                    exp_im: vec![0.0, 0.0],
                },
                TermConfig {
                    coeff_re: 1.0,
                    coeff_im: 0.0,
                    powers: vec![0, 0],
                    exp_re: vec![0.0, 0.0],
                    exp_im: vec![0.0, 0.0],
                },
            ],
        }],
        automorphisms: vec![AutomorphismConfig {
            id: "shift".into(),
            automorphism: "translation".into(),
            z0_re: vec![0.6, -0.3],
            z0_im: vec![0.2, 0.4],
        radii: vec![],
        }],
        checks: vec![
            CheckConfig::Bound {
                space: "aniso".into(),
                function: "mix2".into(),
                point_re: vec![0.4, 0.6],
                point_im: vec![-0.2, 0.1],
            },
            CheckConfig::Bound {
                space: "block".into(),
                function: "mix2".into(),
                point_re: vec![0.4, 0.6],
                point_im: vec![-0.2, 0.1],
            },
            CheckConfig::Sharpness {
                space: "aniso".into(),
                z0_re: vec![0.8, 0.3],
                z0_im: vec![0.0, -0.5],
                mode: None,
                scales: vec![],
            },
            CheckConfig::Pluriharmonicity {
                space: "aniso".into(),
                automorphism: "shift".into(),
                points: 500,
            },
            CheckConfig::Pluriharmonicity {
                space: "block".into(),
                automorphism: "shift".into(),
                points: 500,
            },
        ],
    }
}

fn ball_bergman() -> RunConfig {
    RunConfig {
        seed: 20240603,
        integration: default_integration(),
        output: None,
        spaces: vec![
            SpaceConfig {
                id: "disc".into(),
                domain: "ball".into(),
                n: 1,
                radii: vec![],
                blocks: vec![],
                weight: "ball".into(),
                alpha: Some(0.5),
                alphas: vec![],
                p: num(2.0),
            },
            SpaceConfig {
                id: "ball2".into(),
                domain: "ball".into(),
                n: 2,
                radii: vec![],
                blocks: vec![],
                weight: "ball".into(),
                alpha: Some(0.0),
                alphas: vec![],
                p: num(2.0),
            },
        ],
        functions: vec![FunctionConfig {
            id: "poly_d".into(),
            label: Some("1+z/2".into()),
            terms: vec![term1((1.0, 0.0), 0, (0.0, 0.0)), term1((0.5, 0.0), 1, (0.0, 0.0))],
        }],
        automorphisms: vec![
            AutomorphismConfig {
                id: "mob_d".into(),
                automorphism: "ball".into(),
                z0_re: vec![0.5],
                z0_im: vec![0.0],
                radii: vec![],
            },
            AutomorphismConfig {
                id: "mob_b2".into(),
                automorphism: "ball".into(),
                z0_re: vec![0.3, -0.2],
                z0_im: vec![0.1, 0.25],
                radii: vec![],
            },
        ],
        checks: vec![
            CheckConfig::Bound {
                space: "disc".into(),
                function: "poly_d".into(),
                point_re: vec![0.5],
                point_im: vec![0.2],
            },
            CheckConfig::Sharpness {
                space: "disc".into(),
                z0_re: vec![0.4],
                z0_im: vec![0.2],
                mode: None,
                scales: vec![],
            },
            CheckConfig::Sharpness {
                space: "ball2".into(),
                z0_re: vec![0.3, -0.2],
                z0_im: vec![0.1, 0.25],
                mode: None,
                scales: vec![],
            },
            CheckConfig::Invariance {
                automorphism: "mob_d".into(),
                integrand: IntegrandConfig::BoundaryPower { sigma: 2.0 },
            },
            CheckConfig::Invariance {
                automorphism: "mob_b2".into(),
                integrand: IntegrandConfig::BoundaryPower { sigma: 3.5 },
            },
            CheckConfig::Pluriharmonicity {
                space: "disc".into(),
                automorphism: "mob_d".into(),
                points: 500,
            },
            CheckConfig::Pluriharmonicity {
                space: "ball2".into(),
                automorphism: "mob_b2".into(),
                points: 500,
            },
            CheckConfig::Delta0 {
                space: "disc".into(),
                candidates: 64,
                max_terms: 3,
                max_degree: 3,
                exp_scale: 0.0,
            },
        ],
    }
}

fn polydisc_bergman() -> RunConfig {
    RunConfig {
        seed: 20240604,
        integration: default_integration(),
        output: None,
        spaces: vec![
            SpaceConfig {
                id: "pd".into(),
                domain: "polydisc".into(),
                n: 2,
                radii: vec![num(1.0), num(2.0)],
                blocks: vec![],
                weight: "polydisc".into(),
                alpha: None,
                alphas: vec![0.5, 1.0],
                p: num(2.0),
            },
            // Remark-3 poly-cylinder: one infinite factor carries a Gaussian
            SpaceConfig {
                id: "cyl".into(),
                domain: "polydisc".into(),
                n: 2,
                radii: vec![num(1.0), Extended::from_f64(f64::INFINITY)],
                blocks: vec![],
                weight: "polydisc".into(),
                alpha: None,
                alphas: vec![0.5, 1.0],
                p: num(2.0),
            },
        ],
        functions: vec![FunctionConfig {
            id: "pd_fn".into(),
            label: Some("1 + z1·z2/2".into()),
            terms: vec![
                TermConfig {
                    coeff_re: 1.0,
                    coeff_im: 0.0,
                    powers: vec![0, 0],
                    exp_re: vec![0.0, 0.0],
                    exp_im: vec![0.0, 0.0],
                },
                TermConfig {
                    coeff_re: 0.5,
                    coeff_im: 0.0,
                    powers: vec![1, 1],
                    exp_re: vec![0.0, 0.0],
                    exp_im: vec![0.0, 0.0],
                },
            ],
        }],
        automorphisms: vec![
            AutomorphismConfig {
                id: "mob_pd".into(),
                automorphism: "polydisc".into(),
                z0_re: vec![0.3, 0.8],
                z0_im: vec![-0.2, 0.5],
                radii: vec![num(1.0), num(2.0)],
            },
            AutomorphismConfig {
                id: "mob_cyl".into(),
                automorphism: "polydisc".into(),
                z0_re: vec![0.3, 0.7],
                z0_im: vec![-0.2, -0.1],
                radii: vec![num(1.0), Extended::from_f64(f64::INFINITY)],
            },
        ],
        checks: vec![
            CheckConfig::Bound {
                space: "pd".into(),
                function: "pd_fn".into(),
                point_re: vec![0.4, 1.2],
                point_im: vec![0.1, -0.6],
            },
            CheckConfig::Bound {
                space: "cyl".into(),
                function: "pd_fn".into(),
                point_re: vec![0.4, 1.2],
                point_im: vec![0.1, -0.6],
            },
            CheckConfig::Sharpness {
                space: "pd".into(),
                z0_re: vec![0.3, 0.8],
                z0_im: vec![-0.2, 0.5],
                mode: None,
                scales: vec![],
            },
            CheckConfig::Sharpness {
                space: "cyl".into(),
                z0_re: vec![0.3, 0.7],
                z0_im: vec![-0.2, -0.1],
                mode: None,
                scales: vec![],
            },
            CheckConfig::Invariance {
                automorphism: "mob_pd".into(),
                integrand: IntegrandConfig::FactorPower {
                    sigmas: vec![2.0, 3.0],
                },
            },
            CheckConfig::Invariance {
                automorphism: "mob_cyl".into(),
                integrand: IntegrandConfig::FactorPower {
                    sigmas: vec![2.5, 1.0],
                },
            },
            CheckConfig::Pluriharmonicity {
                space: "pd".into(),
                automorphism: "mob_pd".into(),
                points: 500,
            },
            CheckConfig::Pluriharmonicity {
                space: "cyl".into(),
                automorphism: "mob_cyl".into(),
                points: 500,
            },
        ],
    }
}

fn scheme_generic() -> RunConfig {
    RunConfig {
        seed: 20240605,
        integration: default_integration(),
        output: None,
        spaces: vec![
            fock_space("fock1", 1, 1.0, 2.0),
            SpaceConfig {
                id: "disc".into(),
                domain: "ball".into(),
                n: 1,
                radii: vec![],
                blocks: vec![],
                weight: "ball".into(),
                alpha: Some(0.0),
                alphas: vec![],
                p: num(2.0),
            },
            SpaceConfig {
                id: "pd".into(),
                domain: "polydisc".into(),
                n: 2,
                radii: vec![num(1.0), num(1.0)],
                blocks: vec![],
                weight: "polydisc".into(),
                alpha: None,
                alphas: vec![0.0, 0.5],
                p: num(2.0),
            },
        ],
        functions: vec![
            FunctionConfig {
                id: "u1".into(),
                label: Some("1+z".into()),
                terms: vec![term1((1.0, 0.0), 0, (0.0, 0.0)), term1((1.0, 0.0), 1, (0.0, 0.0))],
            },
            FunctionConfig {
                id: "u2".into(),
                label: Some("1 + z1/2 + z2²/4".into()),
                terms: vec![
                    TermConfig {
                        coeff_re: 1.0,
                        coeff_im: 0.0,
                        powers: vec![0, 0],
                        exp_re: vec![0.0, 0.0],
                        exp_im: vec![0.0, 0.0],
                    },
                    TermConfig {
                        coeff_re: 0.5,
                        coeff_im: 0.0,
                        powers: vec![1, 0],
                        exp_re: vec![0.0, 0.0],
                        exp_im: vec![0.0, 0.0],
                    },
                    TermConfig {
                        coeff_re: 0.25,
                        coeff_im: 0.0,
                        powers: vec![0, 2],
                        exp_re: vec![0.0, 0.0],
                        exp_im: vec![0.0, 0.0],
                    },
                ],
            },
        ],
        automorphisms: vec![
            AutomorphismConfig {
                id: "shift".into(),
                automorphism: "translation".into(),
                z0_re: vec![0.7],
                z0_im: vec![-0.3],
                radii: vec![],
            },
            AutomorphismConfig {
                id: "mob".into(),
                automorphism: "ball".into(),
                z0_re: vec![0.5],
                z0_im: vec![0.0],
                radii: vec![],
            },
            AutomorphismConfig {
                id: "mob2".into(),
                automorphism: "polydisc".into(),
                z0_re: vec![0.2, -0.4],
                z0_im: vec![0.3, 0.1],
                radii: vec![num(1.0), num(1.0)],
            },
        ],
        checks: vec![
            CheckConfig::Scheme {
                space: "fock1".into(),
                automorphism: "shift".into(),
                function: "u1".into(),
                phi_rate: None,
            },
            CheckConfig::Scheme {
                space: "fock1".into(),
                automorphism: "shift".into(),
                function: "u1".into(),
                phi_rate: Some(4.0),
            },
            CheckConfig::Scheme {
                space: "disc".into(),
                automorphism: "mob".into(),
                function: "u1".into(),
                phi_rate: None,
            },
            CheckConfig::Scheme {
                space: "pd".into(),
                automorphism: "mob2".into(),
                function: "u2".into(),
                phi_rate: None,
            },
        ],
    }
}

fn integrated_remark() -> RunConfig {
    RunConfig {
        seed: 20240606,
        integration: default_integration(),
        output: None,
        spaces: vec![
            fock_space("fock1", 1, 1.0, 2.0),
            SpaceConfig {
                id: "disc".into(),
                domain: "ball".into(),
                n: 1,
                radii: vec![],
                blocks: vec![],
                weight: "ball".into(),
                alpha: Some(0.5),
                alphas: vec![],
                p: num(2.0),
            },
        ],
        functions: vec![
            FunctionConfig {
                id: "f".into(),
                label: Some("1+z".into()),
                terms: vec![term1((1.0, 0.0), 0, (0.0, 0.0)), term1((1.0, 0.0), 1, (0.0, 0.0))],
            },
            FunctionConfig {
                id: "g".into(),
                label: Some("e^{0.8z}".into()),
                terms: vec![term1((1.0, 0.0), 0, (0.8, 0.0))],
            },
        ],
        automorphisms: vec![],
        checks: vec![
            CheckConfig::Integrated {
                space: "fock1".into(),
                function: "f".into(),
                map: "t".into(),
                radius: 1.0,
            },
            CheckConfig::Integrated {
                space: "fock1".into(),
                function: "g".into(),
                map: "t^2".into(),
                radius: 2.0,
            },
            CheckConfig::Integrated {
                space: "fock1".into(),
                function: "f".into(),
                map: "log(1+t)".into(),
                radius: 1.5,
            },
            CheckConfig::Integrated {
                space: "disc".into(),
                function: "f".into(),
                map: "t^2".into(),
                radius: 0.7,
            },
            CheckConfig::Integrated {
                space: "disc".into(),
                function: "g".into(),
                map: "log(1+t)".into(),
                radius: 0.9,
            },
        ],
    }
}
