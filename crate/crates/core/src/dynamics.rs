//! Piecewise-constant propagation and the product-formula / attainability
//! experiments.
//!
//! Matrix exponentials go through the eigendecomposition of the Hermitian
//! matrix `iM`, so propagators are unitary up to rounding; with kept
//! dimensions of at most a couple hundred that is also the cheap option.

use crate::error::{CoreError, Result};
use crate::rep::{basis_state, env_to_matrix, hermitian_eigen, is_skew_hermitian, random_interior_state, CMatrix, RepSpec, StateVector};
use crate::system::ControlSystem;
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// A piecewise-constant control schedule: segments of positive duration with
/// one amplitude per control Hamiltonian.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ControlSchedule {
    pub segments: Vec<ScheduleSegment>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScheduleSegment {
    pub duration: f64,
    pub amplitudes: Vec<f64>,
}

impl ControlSchedule {
    pub fn new(segments: Vec<ScheduleSegment>) -> Result<Self> {
        for s in &segments {
            if !(s.duration > 0.0) {
                return Err(CoreError::Argument(format!(
                    "segment durations must be positive, got {}",
                    s.duration
                )));
            }
        }
        Ok(Self { segments })
    }

    pub fn empty() -> Self {
        Self { segments: Vec::new() }
    }

    pub fn total_duration(&self) -> f64 {
        self.segments.iter().map(|s| s.duration).sum()
    }

    /// `duration,u1,...,um` rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for s in &self.segments {
            out.push_str(&format!("{}", s.duration));
            for u in &s.amplitudes {
                out.push_str(&format!(",{u}"));
            }
            out.push('\n');
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut segments = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split(',').map(str::trim);
            let duration: f64 = fields
                .next()
                .ok_or_else(|| CoreError::Argument(format!("schedule line {} empty", lineno + 1)))?
                .parse()
                .map_err(|e| CoreError::Argument(format!("schedule line {}: {e}", lineno + 1)))?;
            let amplitudes: std::result::Result<Vec<f64>, _> =
                fields.map(str::parse::<f64>).collect();
            let amplitudes = amplitudes
                .map_err(|e| CoreError::Argument(format!("schedule line {}: {e}", lineno + 1)))?;
            segments.push(ScheduleSegment { duration, amplitudes });
        }
        Self::new(segments)
    }
}

const SKEW_TOL: f64 = 1e-10;

/// `exp(M)` for skew-Hermitian `M`, via the eigendecomposition of `iM`.
/// The result is unitary to rounding. Non-skew input is rejected.
pub fn expm_skew(m: &CMatrix) -> Result<CMatrix> {
    if !is_skew_hermitian(m, SKEW_TOL) {
        return Err(CoreError::Precondition(
            "matrix exponent is not skew-Hermitian".into(),
        ));
    }
    // iM is Hermitian with real spectrum; exp(M) = V exp(-i diag) V†.
    let herm = m * Complex64::new(0.0, 1.0);
    let (vals, vecs) = hermitian_eigen(&herm);
    let mut scaled = vecs.clone();
    for c in 0..scaled.ncols() {
        let phase = Complex64::new(0.0, -vals[c]).exp();
        for r in 0..scaled.nrows() {
            scaled[(r, c)] *= phase;
        }
    }
    Ok(scaled * vecs.adjoint())
}

/// Segment Hamiltonian `H0 + sum_j u_j H_j` as a matrix.
fn segment_generator(h0: &CMatrix, controls: &[CMatrix], u: &[f64]) -> Result<CMatrix> {
    if u.len() != controls.len() {
        return Err(CoreError::Argument(format!(
            "segment has {} amplitudes for {} controls",
            u.len(),
            controls.len()
        )));
    }
    let mut h = h0.clone();
    for (uj, hj) in u.iter().zip(controls) {
        h += hj * Complex64::new(*uj, 0.0);
    }
    Ok(h)
}

/// Matrices of the system Hamiltonians in the given representation.
pub fn system_matrices(system: &ControlSystem, rep: &RepSpec) -> Result<(CMatrix, Vec<CMatrix>)> {
    let h0 = env_to_matrix(rep, system.h0())?;
    let controls: Result<Vec<CMatrix>> = system
        .controls()
        .iter()
        .map(|h| env_to_matrix(rep, h))
        .collect();
    Ok((h0, controls?))
}

/// Propagates `psi0` through the schedule: factors applied left-to-right in
/// time order. Norm is preserved to rounding.
pub fn propagate(
    system: &ControlSystem,
    rep: &RepSpec,
    sched: &ControlSchedule,
    psi0: &StateVector,
) -> Result<StateVector> {
    if sched.segments.is_empty() {
        return Err(CoreError::Argument("empty schedule".into()));
    }
    let (h0, controls) = system_matrices(system, rep)?;
    propagate_with(&h0, &controls, sched, psi0)
}

/// As [`propagate`], with the Hamiltonian matrices already built.
pub fn propagate_with(
    h0: &CMatrix,
    controls: &[CMatrix],
    sched: &ControlSchedule,
    psi0: &StateVector,
) -> Result<StateVector> {
    if psi0.len() != h0.nrows() {
        return Err(CoreError::Argument("state dimension mismatch".into()));
    }
    let mut psi = psi0.clone();
    for seg in &sched.segments {
        let h = segment_generator(h0, controls, &seg.amplitudes)?;
        let u = expm_skew(&(h * Complex64::new(seg.duration, 0.0)))?;
        psi = u * psi;
    }
    Ok(psi)
}

/// `|<a, b>|^2`.
pub fn fidelity(a: &StateVector, b: &StateVector) -> f64 {
    a.dotc(b).norm_sqr()
}

/// The fixed probe set used by the product-formula error measurements:
/// the first basis state plus two seeded random unit states.
pub fn probe_states(dim: usize, seed: u64) -> Vec<StateVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut probes = vec![basis_state(dim, 0)];
    for _ in 0..2 {
        probes.push(random_interior_state(dim, dim, &mut rng));
    }
    probes
}

fn max_probe_error(target: &CMatrix, approx: &CMatrix, probes: &[StateVector]) -> f64 {
    probes
        .iter()
        .map(|phi| ((target * phi) - (approx * phi)).norm())
        .fold(0.0, f64::max)
}

/// Error of the product-formula approximation of the sum flow:
/// `max_phi || exp(s(X+Y)) phi - (exp((s/n)X) exp((s/n)Y))^n phi ||`.
pub fn trotter_sum_error(
    x: &CMatrix,
    y: &CMatrix,
    s: f64,
    n: u32,
    probes: &[StateVector],
) -> Result<f64> {
    if n == 0 {
        return Err(CoreError::Argument("n must be at least 1".into()));
    }
    let target = expm_skew(&((x + y) * Complex64::new(s, 0.0)))?;
    let step = Complex64::new(s / n as f64, 0.0);
    let ux = expm_skew(&(x * step))?;
    let uy = expm_skew(&(y * step))?;
    let stepper = &ux * &uy;
    let approx = matrix_power(&stepper, n);
    Ok(max_probe_error(&target, &approx, probes))
}

/// Error of the group-commutator product approximation of the bracket flow:
/// `max_phi || exp(s[X,Y]) phi - (X_r Y_r X_r^{-1} Y_r^{-1})^n phi ||` with
/// `r = sqrt(s/n)`.
pub fn trotter_commutator_error(
    x: &CMatrix,
    y: &CMatrix,
    s: f64,
    n: u32,
    probes: &[StateVector],
) -> Result<f64> {
    if n == 0 {
        return Err(CoreError::Argument("n must be at least 1".into()));
    }
    if s < 0.0 {
        return Err(CoreError::Argument("s must be nonnegative".into()));
    }
    let comm = x * y - y * x;
    let target = expm_skew(&(comm * Complex64::new(s, 0.0)))?;
    let r = Complex64::new((s / n as f64).sqrt(), 0.0);
    let ux = expm_skew(&(x * r))?;
    let uy = expm_skew(&(y * r))?;
    let stepper = &ux * &uy * ux.adjoint() * uy.adjoint();
    let approx = matrix_power(&stepper, n);
    Ok(max_probe_error(&target, &approx, probes))
}

fn matrix_power(m: &CMatrix, n: u32) -> CMatrix {
    let mut result = CMatrix::identity(m.nrows(), m.ncols());
    let mut base = m.clone();
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            result = &result * &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    result
}

/// One point of a flow experiment.
#[derive(Clone, Debug, Serialize)]
pub struct FlowPoint {
    pub parameter: f64,
    pub error: f64,
    /// The proven upper bound at this parameter, when the experiment has one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<f64>,
}

/// Result of a convergence or bound experiment.
#[derive(Clone, Debug, Serialize)]
pub struct FlowExperimentResult {
    pub grid: Vec<FlowPoint>,
    pub fitted_rate: f64,
    pub notes: String,
}

impl FlowExperimentResult {
    /// `param,error[,bound]` CSV rows with a header.
    pub fn to_csv(&self, param_name: &str) -> String {
        let has_bound = self.grid.iter().any(|p| p.bound.is_some());
        let mut out = if has_bound {
            format!("{param_name},error,bound\n")
        } else {
            format!("{param_name},error\n")
        };
        for p in &self.grid {
            match p.bound {
                Some(b) => out.push_str(&format!("{},{},{}\n", p.parameter, p.error, b)),
                None => out.push_str(&format!("{},{}\n", p.parameter, p.error)),
            }
        }
        out
    }

    pub fn max_bound_excess(&self) -> f64 {
        self.grid
            .iter()
            .filter_map(|p| p.bound.map(|b| p.error - b))
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Log-log least-squares slope of `error` against `parameter`.
pub fn fitted_loglog_slope(points: &[(f64, f64)]) -> f64 {
    let data: Vec<(f64, f64)> = points
        .iter()
        .filter(|(p, e)| *p > 0.0 && *e > 0.0)
        .map(|(p, e)| (p.ln(), e.ln()))
        .collect();
    if data.len() < 2 {
        return f64::NAN;
    }
    let n = data.len() as f64;
    let sx: f64 = data.iter().map(|(x, _)| x).sum();
    let sy: f64 = data.iter().map(|(_, y)| y).sum();
    let sxx: f64 = data.iter().map(|(x, _)| x * x).sum();
    let sxy: f64 = data.iter().map(|(x, y)| x * y).sum();
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

/// Deviation between the perturbed and unperturbed flows against the proven
/// `eps * M * t` bound, with `M` estimated as `max_s ||H0 exp(s X) psi0||`
/// on a time grid of at least `grid_points` samples.
pub fn attainability_experiment(
    h0m: &CMatrix,
    xm: &CMatrix,
    t: f64,
    eps_list: &[f64],
    psi0: &StateVector,
    grid_points: usize,
) -> Result<FlowExperimentResult> {
    if !is_skew_hermitian(h0m, SKEW_TOL) || !is_skew_hermitian(xm, SKEW_TOL) {
        return Err(CoreError::Precondition(
            "attainability experiment needs skew-Hermitian matrices".into(),
        ));
    }
    if eps_list.is_empty() || eps_list.iter().any(|&e| e < 0.0) {
        return Err(CoreError::Argument("epsilon list must be nonnegative".into()));
    }
    let grid_points = grid_points.max(100);

    // M = sup_{[0,t]} ||H0 X_s psi0||, from a dense grid; exp(s X) is reused
    // from a single eigendecomposition of iX.
    let herm = xm * Complex64::new(0.0, 1.0);
    let (vals, vecs) = hermitian_eigen(&herm);
    let y0 = vecs.adjoint() * psi0;
    let mut m_est = 0.0f64;
    for gi in 0..=grid_points {
        let s = t * gi as f64 / grid_points as f64;
        let mut ys = y0.clone();
        for (r, amp) in ys.iter_mut().enumerate() {
            *amp *= Complex64::new(0.0, -vals[r] * s).exp();
        }
        let xs_psi = &vecs * ys;
        m_est = m_est.max((h0m * xs_psi).norm());
    }

    let x_flow = expm_skew(&(xm * Complex64::new(t, 0.0)))?;
    let reference = &x_flow * psi0;
    let mut grid = Vec::new();
    let mut slopes = Vec::new();
    for &eps in eps_list {
        let gen = h0m * Complex64::new(eps, 0.0) + xm;
        let flow = expm_skew(&(gen * Complex64::new(t, 0.0)))?;
        let dev = ((flow * psi0) - &reference).norm();
        let bound = eps * m_est * t * (1.0 + 1e-6);
        if eps > 0.0 {
            slopes.push(dev / eps);
        }
        grid.push(FlowPoint {
            parameter: eps,
            error: dev,
            bound: Some(bound),
        });
    }
    let fitted_rate = if slopes.is_empty() {
        0.0
    } else {
        slopes.iter().sum::<f64>() / slopes.len() as f64
    };
    Ok(FlowExperimentResult {
        grid,
        fitted_rate,
        notes: format!("M estimated on {} grid points over [0,{t}]", grid_points + 1),
    })
}

/// Budget for the reachability probe.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ReachBudget {
    pub segments: usize,
    pub restarts: usize,
    /// Coordinate-descent refinement sweeps per restart.
    pub refine_sweeps: usize,
}

/// Outcome of a reachability probe. The probe is an optimizer: it reports the
/// best schedule found and never claims unreachability.
#[derive(Clone, Debug, Serialize)]
pub struct ReachOutcome {
    pub best_fidelity: f64,
    pub schedule: ControlSchedule,
    pub evaluations: u64,
}

/// Searches piecewise-constant schedules maximizing `|<target, psi(T)>|^2`
/// by seeded random restarts plus coordinate descent on durations and
/// amplitudes. Deterministic for a fixed seed.
pub fn reach_probe(
    system: &ControlSystem,
    rep: &RepSpec,
    psi0: &StateVector,
    target: &StateVector,
    budget: ReachBudget,
    seed: u64,
) -> Result<ReachOutcome> {
    if budget.segments == 0 || budget.restarts == 0 {
        return Err(CoreError::Argument("reach budget must be nonzero".into()));
    }
    if (target.norm() - 1.0).abs() > 1e-9 {
        return Err(CoreError::Argument("target must be unit norm".into()));
    }
    let (h0, controls) = system_matrices(system, rep)?;
    let m = controls.len();
    let mut evals: u64 = 0;

    let mut eval = |params: &[f64]| -> Result<f64> {
        let sched = params_to_schedule(params, budget.segments, m);
        let psi = propagate_with(&h0, &controls, &sched, psi0)?;
        evals += 1;
        Ok(fidelity(target, &psi))
    };

    // The identity (empty schedule) is always a candidate.
    let mut best_fid = fidelity(target, psi0);
    let mut best_params: Option<Vec<f64>> = None;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n_params = budget.segments * (1 + m);
    for _ in 0..budget.restarts {
        let mut params: Vec<f64> = (0..n_params)
            .map(|p| {
                if p % (1 + m) == 0 {
                    rng.gen_range(0.1..1.5)
                } else {
                    rng.gen_range(-3.0..3.0)
                }
            })
            .collect();
        let mut fid = eval(&params)?;
        let mut step = 0.5f64;
        for _ in 0..budget.refine_sweeps {
            let mut improved = false;
            for p in 0..n_params {
                for dir in [1.0, -1.0] {
                    let saved = params[p];
                    let mut trial = saved + dir * step;
                    if p % (1 + m) == 0 {
                        trial = trial.max(1e-3);
                    }
                    params[p] = trial;
                    let f = eval(&params)?;
                    if f > fid {
                        fid = f;
                        improved = true;
                    } else {
                        params[p] = saved;
                    }
                }
            }
            if !improved {
                step *= 0.5;
                if step < 1e-6 {
                    break;
                }
            }
        }
        if fid > best_fid {
            best_fid = fid;
            best_params = Some(params);
        }
    }

    let schedule = match best_params {
        Some(p) => params_to_schedule(&p, budget.segments, m),
        None => ControlSchedule::empty(),
    };
    Ok(ReachOutcome {
        best_fidelity: best_fid,
        schedule,
        evaluations: evals,
    })
}

fn params_to_schedule(params: &[f64], segments: usize, m: usize) -> ControlSchedule {
    let mut segs = Vec::with_capacity(segments);
    for s in 0..segments {
        let base = s * (1 + m);
        segs.push(ScheduleSegment {
            duration: params[base].max(1e-3),
            amplitudes: params[base + 1..base + 1 + m].to_vec(),
        });
    }
    ControlSchedule { segments: segs }
}
