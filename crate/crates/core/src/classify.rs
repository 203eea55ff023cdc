//! Mechanical evaluation of the controllability criteria.
//!
//! The decision procedure works on capped closures, so it distinguishes
//! "saturated at a finite dimension" from "still growing at the cap". Growth
//! is reported as evidence for infinite dimensionality, never as proof; the
//! evidence record carries every cap that influenced a verdict.

use crate::closure::{build_c, check_bc_in_b, lie_closure, pbw_coverage, BcOutcome, ClosureCaps, LieClosureResult};
use crate::env::EnvElement;
use crate::error::{CoreError, Result};
use crate::rep::{basis_state, env_to_matrix, random_interior_state, CMatrix, RepSpec, StateVector};
use crate::system::{ControlSystem, ManifoldTarget};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// The controllability classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Classification {
    /// Finite-dimensional space with the closure spanning su(N) or u(N).
    FiniteDimControllable,
    /// Saturated finite closure satisfying the bracket and tangent-rank
    /// conditions on the orbit manifold.
    StronglyAnalyticallyControllable,
    /// Cap-growing closure satisfying the bracket and tangent-rank
    /// conditions; the infinite-dimensionality clause is evidence-backed.
    ApproxStrongSmoothControllable,
    /// Finite closure cannot be strongly controllable on the unit sphere of
    /// an infinite-dimensional space.
    NoGoStrong,
    /// Some condition failed or could not be decided under the caps.
    Inconclusive,
}

/// Numerical rank threshold factor for tangent-space computations.
pub const RANK_TOLERANCE: f64 = 1e-9;

/// Caps as recorded in evidence.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct CapsRecord {
    pub order_cap: u32,
    pub iter_cap: u32,
    pub k_max: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct GrowthPoint {
    pub cap: u32,
    pub dim: usize,
    pub max_order: Option<u32>,
    pub saturated: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BcRecord {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_b: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_c: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TangentSample {
    pub phi: String,
    pub rank_c: usize,
    pub rank_a: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct FiniteDimRecord {
    pub space_dim: usize,
    pub expected_dims: [usize; 2],
    pub matrix_span_dim: usize,
    pub traceless: bool,
}

/// Everything that justifies a classification.
#[derive(Clone, Debug, Serialize)]
pub struct Evidence {
    pub dim_a: usize,
    pub dim_b: Option<usize>,
    pub dim_c: Option<usize>,
    pub saturated: bool,
    pub max_order: Option<u32>,
    pub growth: Vec<GrowthPoint>,
    pub condition_bc: Option<BcRecord>,
    pub tangent: Vec<TangentSample>,
    pub rank_convention: &'static str,
    pub caps: CapsRecord,
    pub manifold: ManifoldTarget,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub finite_dim_check: Option<FiniteDimRecord>,
    /// Whether the finite-closure no-go applies to the sphere of an
    /// infinite-dimensional space.
    pub nogo_sphere: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failed_condition: Option<String>,
    pub notes: Vec<String>,
}

/// Classification plus its supporting evidence.
#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub classification: Classification,
    pub evidence: Evidence,
}

/// Complex rank of `{X phi : X in basis}`, by singular values with threshold
/// `RANK_TOLERANCE * sigma_max`.
///
/// The geometric tangent dimension is real; the complex-rank convention is
/// recorded in evidence and used consistently on both sides of every
/// comparison, so rank equality tests are well posed.
pub fn tangent_rank(
    basis: &[EnvElement],
    phi: &StateVector,
    rep: &RepSpec,
) -> Result<usize> {
    if basis.is_empty() {
        return Ok(0);
    }
    let max_order = basis.iter().filter_map(EnvElement::order).max().unwrap_or(0);
    let limit = rep.interior_limit(max_order);
    if limit == 0 {
        return Err(CoreError::Precondition(format!(
            "representation too small for order-{max_order} tangent vectors"
        )));
    }
    for idx in limit..phi.len() {
        if phi[idx].norm() > 1e-12 {
            return Err(CoreError::Precondition(format!(
                "state has support at level {idx}, outside the interior limit {limit}"
            )));
        }
    }
    let mut cols = CMatrix::from_element(rep.dim, basis.len(), Complex64::new(0.0, 0.0));
    for (c, x) in basis.iter().enumerate() {
        let m = env_to_matrix(rep, x)?;
        cols.set_column(c, &(m * phi));
    }
    let svd = cols.svd(false, false);
    let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    if smax <= 0.0 {
        return Ok(0);
    }
    Ok(svd
        .singular_values
        .iter()
        .filter(|&&s| s > RANK_TOLERANCE * smax)
        .count())
}

fn render_basis(system: &ControlSystem, e: &EnvElement) -> String {
    e.render(system.algebra().labels())
}

/// Complex dimension of the matrix span of a basis, with a traceless check.
fn matrix_span(basis: &[EnvElement], rep: &RepSpec) -> Result<(usize, bool)> {
    let k = rep.dim;
    let mut stacked = CMatrix::from_element(k * k, basis.len(), Complex64::new(0.0, 0.0));
    let mut traceless = true;
    for (c, x) in basis.iter().enumerate() {
        let m = env_to_matrix(rep, x)?;
        if m.trace().norm() > 1e-9 * m.norm().max(1.0) {
            traceless = false;
        }
        for (r, v) in m.iter().enumerate() {
            stacked[(r, c)] = *v;
        }
    }
    let svd = stacked.svd(false, false);
    let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let rank = if smax <= 0.0 {
        0
    } else {
        svd.singular_values
            .iter()
            .filter(|&&s| s > RANK_TOLERANCE * smax)
            .count()
    };
    Ok((rank, traceless))
}

/// Sample states for the tangent-rank condition: the first basis state plus
/// two seeded pseudo-random unit vectors, all within the truncation interior
/// for the orders in play.
fn sample_states(rep: &RepSpec, max_order: u32, seed: u64) -> Vec<(String, StateVector)> {
    let limit = rep.interior_limit(max_order).max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![("e0".to_string(), basis_state(rep.dim, 0))];
    for i in 0..2 {
        out.push((
            format!("random{}", i + 1),
            random_interior_state(rep.dim, limit, &mut rng),
        ));
    }
    out
}

/// Tangent rank with the state ray adjoined: the rank of
/// `{X phi} ∪ {phi}` minus one. Comparing these on both sides tests equality
/// of the tangent spaces modulo the ray direction, which is the well-posed
/// reading on a sphere of rays: scalars (Casimir combinations in particular)
/// act along the ray and must not tip the comparison.
fn tangent_rank_mod_ray(basis: &[EnvElement], phi: &StateVector, rep: &RepSpec) -> Result<usize> {
    let max_order = basis.iter().filter_map(EnvElement::order).max().unwrap_or(0);
    let limit = rep.interior_limit(max_order);
    if limit == 0 {
        return Err(CoreError::Precondition(format!(
            "representation too small for order-{max_order} tangent vectors"
        )));
    }
    let mut cols = CMatrix::from_element(rep.dim, basis.len() + 1, Complex64::new(0.0, 0.0));
    for (c, x) in basis.iter().enumerate() {
        let m = env_to_matrix(rep, x)?;
        cols.set_column(c, &(m * phi));
    }
    cols.set_column(basis.len(), phi);
    let svd = cols.svd(false, false);
    let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    if smax <= 0.0 {
        return Ok(0);
    }
    let rank = svd
        .singular_values
        .iter()
        .filter(|&&s| s > RANK_TOLERANCE * smax)
        .count();
    Ok(rank.saturating_sub(1))
}

/// True when saturation cannot have been an artifact of grade truncation:
/// every bracket of basis elements stays within the cap.
fn genuinely_closed(r: &LieClosureResult) -> bool {
    let m = r.max_order.unwrap_or(0);
    r.saturated && (m <= 1 || 2 * m - 1 <= r.order_cap)
}

/// Runs the decision procedure on a control system.
///
/// Steps: compute the full closure and its growth curve; finite exact
/// representations get the su(N)/u(N) dimension test; sphere targets over
/// truncated infinite-dimensional spaces get the no-go; otherwise the bracket
/// condition and tangent-rank equality decide between the strong-analytic and
/// approximate-smooth verdicts, with every failure reported as inconclusive
/// plus the failed condition.
pub fn classify(
    system: &ControlSystem,
    caps: ClosureCaps,
    k_max: u32,
    rep: Option<&RepSpec>,
    seed: u64,
) -> Result<Verdict> {
    let alg = system.algebra();
    let mut a_gens: Vec<EnvElement> = Vec::new();
    if !system.h0().is_zero() {
        a_gens.push(system.h0().clone());
    }
    a_gens.extend(system.controls().iter().cloned());

    // Growth curve across caps, for the infinite-dimensionality evidence.
    // At least two caps are always sampled, extending past the working cap
    // when the generators leave no room below it.
    let min_cap = a_gens
        .iter()
        .map(|g| g.identify_unit(alg).order().unwrap_or(0))
        .max()
        .unwrap_or(1)
        .max(1)
        .min(caps.order_cap);
    let mut growth_caps: Vec<u32> = (min_cap..=caps.order_cap).collect();
    if growth_caps.len() < 2 {
        growth_caps.push(caps.order_cap + 1);
    }
    let mut growth = Vec::new();
    for &cap in &growth_caps {
        let r = lie_closure(alg, &a_gens, ClosureCaps::new(cap, caps.iter_cap))?;
        growth.push(GrowthPoint {
            cap,
            dim: r.dim,
            max_order: r.max_order,
            saturated: r.saturated,
        });
    }
    let a = lie_closure(alg, &a_gens, caps)?;

    let caps_record = CapsRecord {
        order_cap: caps.order_cap,
        iter_cap: caps.iter_cap,
        k_max,
    };
    let mut evidence = Evidence {
        dim_a: a.dim,
        dim_b: None,
        dim_c: None,
        saturated: a.saturated,
        max_order: a.max_order,
        growth,
        condition_bc: None,
        tangent: Vec::new(),
        rank_convention: "complex, modulo the state ray",
        caps: caps_record,
        manifold: system.manifold(),
        finite_dim_check: None,
        nogo_sphere: false,
        failed_condition: None,
        notes: Vec::new(),
    };

    // (a) Finite-dimensional representation: the su(N)/u(N) rank criterion.
    if let Some(rep) = rep {
        if rep.is_exact_finite() {
            let n = rep.dim;
            let expected = [n * n - 1, n * n];
            if genuinely_closed(&a) && (a.dim == expected[0] || a.dim == expected[1]) {
                let (span_dim, traceless) = matrix_span(&a.basis, rep)?;
                evidence.finite_dim_check = Some(FiniteDimRecord {
                    space_dim: n,
                    expected_dims: expected,
                    matrix_span_dim: span_dim,
                    traceless,
                });
                if span_dim == a.dim && (traceless || a.dim == expected[1]) {
                    evidence.notes.push(format!(
                        "closure spans {} on the {n}-level space",
                        if a.dim == expected[0] { "su(N)" } else { "u(N)" }
                    ));
                    return Ok(Verdict {
                        classification: Classification::FiniteDimControllable,
                        evidence,
                    });
                }
            }
            evidence.failed_condition = Some(format!(
                "closure dimension {} differs from su(N)/u(N) dimension {}/{} on the {n}-level space",
                a.dim, expected[0], expected[1],
            ));
            if system.h0().is_zero() {
                evidence.notes.push(
                    "homogeneous system: the rank condition is also necessary, so the \
                     deficit rules out controllability over the sphere"
                        .to_string(),
                );
            }
            // B, C and the bracket condition are still informative evidence.
            let b = lie_closure(alg, system.controls(), caps)?;
            evidence.dim_b = Some(b.dim);
            let c = build_c(alg, system.h0(), &b, k_max, caps)?;
            evidence.dim_c = Some(c.dim);
            let bc = check_bc_in_b(alg, &b, &c, caps.order_cap)?;
            evidence.condition_bc = Some(match &bc {
                BcOutcome::Holds => BcRecord {
                    holds: true,
                    witness_b: None,
                    witness_c: None,
                    residual: None,
                },
                BcOutcome::Fails { b_index, c_index, residual } => BcRecord {
                    holds: false,
                    witness_b: Some(render_basis(system, &b.basis[*b_index])),
                    witness_c: Some(render_basis(system, &c.basis[*c_index])),
                    residual: Some(render_basis(system, residual)),
                },
            });
            return Ok(Verdict {
                classification: Classification::Inconclusive,
                evidence,
            });
        }
    }

    // (b) Finite closure cannot be strongly controllable on the sphere of an
    // infinite-dimensional space.
    let infinite_space = rep.map_or(true, |r| !r.is_exact_finite());
    if genuinely_closed(&a) && infinite_space {
        evidence.nogo_sphere = true;
        if system.manifold() == ManifoldTarget::Sphere {
            evidence
                .notes
                .push("finite closure over an infinite-dimensional space".to_string());
            return Ok(Verdict {
                classification: Classification::NoGoStrong,
                evidence,
            });
        }
    }

    // (c) Bracket condition and tangent ranks.
    let b = lie_closure(alg, system.controls(), caps)?;
    evidence.dim_b = Some(b.dim);
    let c = build_c(alg, system.h0(), &b, k_max, caps)?;
    evidence.dim_c = Some(c.dim);

    let bc = check_bc_in_b(alg, &b, &c, caps.order_cap)?;
    match &bc {
        BcOutcome::Holds => {
            evidence.condition_bc = Some(BcRecord {
                holds: true,
                witness_b: None,
                witness_c: None,
                residual: None,
            });
        }
        BcOutcome::Fails { b_index, c_index, residual } => {
            evidence.condition_bc = Some(BcRecord {
                holds: false,
                witness_b: Some(render_basis(system, &b.basis[*b_index])),
                witness_c: Some(render_basis(system, &c.basis[*c_index])),
                residual: Some(render_basis(system, residual)),
            });
            evidence.failed_condition = Some("[B,C] ⊆ B fails".to_string());
            return Ok(Verdict {
                classification: Classification::Inconclusive,
                evidence,
            });
        }
    }

    if let Some(rep) = rep {
        let max_order = a
            .basis
            .iter()
            .chain(c.basis.iter())
            .filter_map(EnvElement::order)
            .max()
            .unwrap_or(0);
        for (label, phi) in sample_states(rep, max_order, seed) {
            let rank_c = tangent_rank_mod_ray(&c.basis, &phi, rep)?;
            let rank_a = tangent_rank_mod_ray(&a.basis, &phi, rep)?;
            evidence.tangent.push(TangentSample {
                phi: label,
                rank_c,
                rank_a,
            });
        }
        if evidence.tangent.iter().any(|t| t.rank_c != t.rank_a) {
            evidence.failed_condition =
                Some("tangent ranks of C and A differ at a sampled state".to_string());
            return Ok(Verdict {
                classification: Classification::Inconclusive,
                evidence,
            });
        }
    }

    if genuinely_closed(&a) {
        return Ok(Verdict {
            classification: Classification::StronglyAnalyticallyControllable,
            evidence,
        });
    }

    if a.hit_iter_cap {
        evidence.failed_condition =
            Some("closure iteration cap reached before saturation".to_string());
        return Ok(Verdict {
            classification: Classification::Inconclusive,
            evidence,
        });
    }

    let cap_growing = evidence
        .growth
        .windows(2)
        .last()
        .map_or(false, |w| w[1].dim > w[0].dim);
    if cap_growing {
        evidence.notes.push(
            "closure dimension still growing at the order cap; infinite dimensionality \
             is numerically supported, not proven"
                .to_string(),
        );
        return Ok(Verdict {
            classification: Classification::ApproxStrongSmoothControllable,
            evidence,
        });
    }

    evidence.failed_condition = Some(
        "saturation is truncation-limited and the dimension stopped growing; \
         neither the finite nor the growing reading is supported"
            .to_string(),
    );
    Ok(Verdict {
        classification: Classification::Inconclusive,
        evidence,
    })
}

/// Coverage summary attached to reports.
#[derive(Clone, Debug, Serialize)]
pub struct CoverageSummary {
    pub order: u32,
    pub covered_dim: usize,
    pub total: usize,
    pub fraction: f64,
    pub missing: Vec<String>,
}

pub fn coverage_summary(
    system: &ControlSystem,
    closure: &LieClosureResult,
    n: u32,
) -> Result<CoverageSummary> {
    let report = pbw_coverage(system.algebra(), closure, n)?;
    Ok(CoverageSummary {
        order: n,
        covered_dim: report.covered_dim,
        total: report.total,
        fraction: report.fraction(),
        missing: report
            .missing
            .iter()
            .map(|m| m.render(system.algebra().labels()))
            .collect(),
    })
}
