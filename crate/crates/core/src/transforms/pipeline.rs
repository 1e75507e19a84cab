use serde::Serialize;

use super::{
    complete_square, gegenbauer_ode, gegenbauer_to_hypergeometric, legendre_ode, legendre_parameters, lienard_to_riccati,
    riccati_to_linear, to_gegenbauer, HypergeomParams, LegendreParams, NormalizedSecondOrder, RiccatiEq, TransformError,
};
use crate::algebra::{rat, LinearODE};
use crate::pzfield::{build_field, GeneralizedSystem, PZParams};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChangeOfVariables {
    pub forward: String,
    pub backward: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StageRecord {
    pub stage: String,
    pub equation: Vec<String>,
    pub change_of_variables: Option<ChangeOfVariables>,
}

/// Every intermediate equation of the chain. The typed fields feed numerical
/// verification; `stages` is the serialized view.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PipelineReport {
    pub params: PZParams,
    pub stages: Vec<StageRecord>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub lienard: GeneralizedSystem,
    #[serde(skip)]
    pub riccati: RiccatiEq,
    #[serde(skip)]
    pub linear: LinearODE,
    #[serde(skip)]
    pub normalized: NormalizedSecondOrder,
    #[serde(skip)]
    pub gegenbauer: LinearODE,
    #[serde(skip)]
    pub hypergeometric: HypergeomParams,
    #[serde(skip)]
    pub hypergeometric_ode: LinearODE,
    #[serde(skip)]
    pub legendre: LegendreParams,
    #[serde(skip)]
    pub legendre_ode: LinearODE,
    #[serde(skip)]
    pub gegenbauer_mu_form: LinearODE,
}

fn at<T>(stage: &str, r: Result<T, TransformError>) -> Result<T, TransformError> {
    r.map_err(|e| TransformError::Stage { stage: stage.to_string(), source: Box::new(e) })
}

fn cov(forward: &str, backward: &str) -> Option<ChangeOfVariables> {
    Some(ChangeOfVariables { forward: forward.to_string(), backward: backward.to_string() })
}

/// Runs the whole chain for one parameter set.
pub fn full_pipeline(params: &PZParams) -> Result<PipelineReport, TransformError> {
    let lienard = build_field(params);
    let riccati = lienard_to_riccati(params);
    let linear = at("riccati_to_linear", riccati_to_linear(params))?;
    let legendre = at("legendre_parameters", legendre_parameters(params))?;
    let PZParams { a, b, m, k, .. } = params;
    let c0 = params.c0();
    let normalized = at("complete_square", complete_square(m, &rat(0, 1), &c0, &(rat(2, 1) * m + k), &rat(0, 1), &(a * b * k * k)))?;
    let gegenbauer = at("to_gegenbauer", to_gegenbauer(&normalized))?;
    let nu = legendre.nu[0].clone();
    let hypergeometric = gegenbauer_to_hypergeometric(&legendre.mu, &nu);
    let hypergeometric_ode = at("gegenbauer_to_hypergeometric", hypergeometric.to_ode())?;
    let legendre_ode_eq = at("legendre", legendre_ode(&legendre.mu, &nu))?;
    let gegenbauer_mu_form = at("to_gegenbauer", gegenbauer_ode(&legendre.mu, &nu))?;

    let stages = vec![
        StageRecord { stage: "lienard".into(), equation: vec!["x' = y".into(), lienard.to_string()], change_of_variables: None },
        StageRecord {
            stage: "riccati".into(),
            equation: riccati.to_strings(),
            change_of_variables: cov("z = x^k, t = y x^(-m) - a x^k - b x^(-k)", "x = z^(1/k), y = x^m (t + a x^k + b x^(-k))"),
        },
        StageRecord {
            stage: "linear".into(),
            equation: linear.to_strings(),
            change_of_variables: cov("w = exp(int a k z/(m t^2 + c0) dt)", "z = (m t^2 + c0)/(a k) w'/w"),
        },
        StageRecord {
            stage: "normalized".into(),
            equation: normalized.to_ode().to_strings(),
            change_of_variables: cov(&format!("tau = t + {}", normalized.shift), &format!("t = tau - {}", normalized.shift)),
        },
        StageRecord {
            stage: "gegenbauer".into(),
            equation: gegenbauer.to_strings(),
            change_of_variables: cov(
                &format!("xi = tau/sqrt(tau^2 + {})", normalized.q0),
                &format!("tau = xi sqrt({}/(1 - xi^2))", normalized.q0),
            ),
        },
        StageRecord {
            stage: "hypergeometric".into(),
            equation: hypergeometric_ode.to_strings(),
            change_of_variables: cov("z = (1 - xi)/2", "xi = 1 - 2z"),
        },
        StageRecord {
            stage: "legendre".into(),
            equation: legendre_ode_eq.to_strings(),
            change_of_variables: cov(
                &format!("y = (1 - x^2)^({}/2) u, x = xi", legendre.mu),
                &format!("u = (1 - x^2)^(-({})/2) y", legendre.mu),
            ),
        },
    ];
    let notes = vec![
        format!("Riccati right side constant term is +b*k = {}; the variant with -b*k does not satisfy the foliation", b * k),
        format!("hypergeometric and Legendre stages use nu = {} (other root {})", nu, legendre.nu[1]),
    ];
    Ok(PipelineReport {
        params: params.clone(),
        stages,
        notes,
        lienard,
        riccati,
        linear,
        normalized,
        gegenbauer,
        hypergeometric,
        hypergeometric_ode,
        legendre,
        legendre_ode: legendre_ode_eq,
        gegenbauer_mu_form,
    })
}
