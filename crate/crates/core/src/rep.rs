//! Truncated matrix realizations of the preset algebra families, the
//! symbolic-to-matrix substitution, Nelson operator and Sobolev-type norms.
//!
//! The commutation tables are the ground truth; matrix elements are
//! implementation choices validated by [`homomorphism_check`]. Spin
//! representations are exact at every level; the discrete-series and Fock
//! truncations are exact only on the interior, away from the cut, which is
//! why every polynomial-order-`n` computation restricts states to levels
//! below `dim - n - margin`.

use crate::algebra::{Involution, StructureAlgebra};
use crate::env::{EnvElement, Rewriter};
use crate::error::{CoreError, Result};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type CMatrix = DMatrix<Complex64>;
pub type StateVector = DVector<Complex64>;

/// Which generator the ladder construction diagonalizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompactAxis {
    /// `L_z` compact (potential-algebra convention).
    Z,
    /// `L_y` compact (scattering-algebra convention).
    Y,
}

#[derive(Clone, Debug)]
pub enum RepKind {
    /// Exact spin-j matrices, `dim = 2j + 1`. Generators `(Lx, Ly, Lz)`.
    Su2Spin,
    /// Lowest-weight discrete-series ladder truncated to `dim` levels.
    /// Generators `(Lx, Ly, Lz)`.
    Su11DiscretePlus { compact: CompactAxis },
    /// Truncated Fock-space oscillator. Generators `(x, p, 1)`.
    HeisenbergFock,
    /// Caller-supplied matrices, one per generator.
    Explicit(Vec<CMatrix>),
}

/// A truncated matrix realization.
#[derive(Clone, Debug)]
pub struct RepSpec {
    pub kind: RepKind,
    /// Doubled weight: spin `j` or lowest weight `j`, stored as `2j`.
    pub twice_j: u32,
    /// Number of levels kept.
    pub dim: usize,
    /// Interior safety margin.
    pub margin: u32,
}

impl RepSpec {
    pub fn new(kind: RepKind, twice_j: u32, dim: usize, margin: u32) -> Result<Self> {
        if dim < 2 {
            return Err(CoreError::Argument("representation needs dim >= 2".into()));
        }
        if let RepKind::Su2Spin = kind {
            if dim != twice_j as usize + 1 {
                return Err(CoreError::Argument(format!(
                    "spin representation must have dim = 2j+1 = {}, got {dim}",
                    twice_j + 1
                )));
            }
        }
        if let RepKind::Explicit(ref mats) = kind {
            if mats.is_empty() || mats.iter().any(|m| m.nrows() != dim || m.ncols() != dim) {
                return Err(CoreError::Argument(
                    "explicit representation matrices must all be dim x dim".into(),
                ));
            }
        }
        Ok(Self { kind, twice_j, dim, margin })
    }

    pub fn su2_spin(twice_j: u32) -> Result<Self> {
        Self::new(RepKind::Su2Spin, twice_j, twice_j as usize + 1, 2)
    }

    pub fn su11_discrete(compact: CompactAxis, twice_j: u32, dim: usize) -> Result<Self> {
        Self::new(RepKind::Su11DiscretePlus { compact }, twice_j, dim, 2)
    }

    pub fn heisenberg_fock(dim: usize) -> Result<Self> {
        Self::new(RepKind::HeisenbergFock, 0, dim, 2)
    }

    pub fn gen_count(&self) -> usize {
        match &self.kind {
            RepKind::Explicit(mats) => mats.len(),
            _ => 3,
        }
    }

    /// True when the representation is an exact finite-dimensional one rather
    /// than a truncation of an infinite-dimensional space.
    pub fn is_exact_finite(&self) -> bool {
        matches!(self.kind, RepKind::Su2Spin)
    }

    /// Exclusive upper bound on basis indices a state may occupy so that
    /// order-`n` polynomials act exactly on it. The whole space for exact
    /// finite representations.
    pub fn interior_limit(&self, order: u32) -> usize {
        if self.is_exact_finite() {
            return self.dim;
        }
        self.dim.saturating_sub((order + self.margin) as usize)
    }

    /// The generator matrix. Index order matches the algebra declaration:
    /// `(Lx, Ly, Lz)` for the spin and discrete-series kinds, `(x, p, 1)`
    /// for the oscillator.
    pub fn gen_matrix(&self, g: usize) -> Result<CMatrix> {
        if g >= self.gen_count() {
            return Err(CoreError::Argument(format!(
                "unknown generator index {g} for this representation"
            )));
        }
        let k = self.dim;
        let j = self.twice_j as f64 / 2.0;
        let zero = Complex64::new(0.0, 0.0);
        match &self.kind {
            RepKind::Su2Spin => {
                // Ladder convention: L+|j,m> = sqrt((j-m)(j+m+1)) |j,m+1>,
                // basis index 0 holds m = j.
                let m_of = |idx: usize| j - idx as f64;
                let mut plus = CMatrix::from_element(k, k, zero);
                for idx in 1..k {
                    let m = m_of(idx);
                    plus[(idx - 1, idx)] = Complex64::new(((j - m) * (j + m + 1.0)).sqrt(), 0.0);
                }
                let minus = plus.adjoint();
                Ok(match g {
                    0 => (&plus + &minus) * Complex64::new(0.5, 0.0),
                    1 => (&plus - &minus) * Complex64::new(0.0, -0.5),
                    _ => CMatrix::from_fn(k, k, |r, c| {
                        if r == c {
                            Complex64::new(m_of(r), 0.0)
                        } else {
                            zero
                        }
                    }),
                })
            }
            RepKind::Su11DiscretePlus { compact } => {
                // K+|n> = sqrt((n+1)(n+2j)) |n+1> on levels n = 0..dim-1;
                // the compact generator is diag(j + n).
                let mut raise = CMatrix::from_element(k, k, zero);
                for n in 0..k - 1 {
                    let c = ((n as f64 + 1.0) * (n as f64 + 2.0 * j)).sqrt();
                    raise[(n + 1, n)] = Complex64::new(c, 0.0);
                }
                let lower = raise.adjoint();
                let diag = CMatrix::from_fn(k, k, |r, c| {
                    if r == c {
                        Complex64::new(j + r as f64, 0.0)
                    } else {
                        zero
                    }
                });
                Ok(match (compact, g) {
                    // Potential: Lz compact; K± = Lx ∓ i Ly.
                    (CompactAxis::Z, 0) => (&raise + &lower) * Complex64::new(0.5, 0.0),
                    (CompactAxis::Z, 1) => (&raise - &lower) * Complex64::new(0.0, 0.5),
                    (CompactAxis::Z, _) => diag,
                    // Scattering: Ly compact; K± = Lx ± i Lz.
                    (CompactAxis::Y, 0) => (&raise + &lower) * Complex64::new(0.5, 0.0),
                    (CompactAxis::Y, 1) => diag,
                    (CompactAxis::Y, _) => (&raise - &lower) * Complex64::new(0.0, -0.5),
                })
            }
            RepKind::HeisenbergFock => {
                let mut a = CMatrix::from_element(k, k, zero);
                for n in 1..k {
                    a[(n - 1, n)] = Complex64::new((n as f64).sqrt(), 0.0);
                }
                let adag = a.adjoint();
                let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
                Ok(match g {
                    0 => (&a + &adag) * s,
                    1 => (&adag - &a) * (s * Complex64::new(0.0, 1.0)),
                    _ => CMatrix::identity(k, k),
                })
            }
            RepKind::Explicit(mats) => Ok(mats[g].clone()),
        }
    }

    /// All generator matrices, in generator order.
    pub fn gen_matrices(&self) -> Result<Vec<CMatrix>> {
        (0..self.gen_count()).map(|g| self.gen_matrix(g)).collect()
    }

    pub fn describe(&self) -> String {
        let kind = match &self.kind {
            RepKind::Su2Spin => "su2-spin".to_string(),
            RepKind::Su11DiscretePlus { compact: CompactAxis::Z } => {
                "su11-discrete-plus (compact Lz)".to_string()
            }
            RepKind::Su11DiscretePlus { compact: CompactAxis::Y } => {
                "su11-discrete-plus (compact Ly)".to_string()
            }
            RepKind::HeisenbergFock => "heisenberg-fock".to_string(),
            RepKind::Explicit(_) => "explicit".to_string(),
        };
        format!(
            "{kind}, 2j={}, dim={}, margin={}",
            self.twice_j, self.dim, self.margin
        )
    }
}

/// Substitutes generator matrices into each PBW monomial (ordered product)
/// and sums with the element's coefficients. Linear in the element.
pub fn env_to_matrix(rep: &RepSpec, elem: &EnvElement) -> Result<CMatrix> {
    if elem.gen_count() != rep.gen_count() {
        return Err(CoreError::Argument(
            "element and representation have different generator counts".into(),
        ));
    }
    let k = rep.dim;
    let gens = rep.gen_matrices()?;
    let mut out = CMatrix::from_element(k, k, Complex64::new(0.0, 0.0));
    for (mon, coeff) in elem.terms() {
        let mut acc = CMatrix::identity(k, k);
        for (g, &e) in mon.exps().iter().enumerate() {
            for _ in 0..e {
                acc = &acc * &gens[g];
            }
        }
        let (re, im) = coeff.to_f64_pair();
        out += acc * Complex64::new(re, im);
    }
    Ok(out)
}

/// `I + sum L_g^2` over the non-central Hermitian generators. The central
/// unit of the oscillator algebra enters through the leading identity once.
pub fn nelson_delta(rep: &RepSpec, alg: &StructureAlgebra) -> Result<CMatrix> {
    if alg.dim() != rep.gen_count() {
        return Err(CoreError::Argument(
            "algebra and representation have different generator counts".into(),
        ));
    }
    let k = rep.dim;
    let mut delta = CMatrix::identity(k, k);
    for g in 0..alg.dim() {
        if alg.is_central(g) || alg.involution(g) != Involution::Hermitian {
            continue;
        }
        let m = rep.gen_matrix(g)?;
        delta += &m * &m;
    }
    Ok(delta)
}

/// Hermitian eigendecomposition helper: eigenvalues ascending with their
/// unitary eigenbasis.
pub fn hermitian_eigen(m: &CMatrix) -> (DVector<f64>, CMatrix) {
    let eig = m.clone().symmetric_eigen();
    (eig.eigenvalues, eig.eigenvectors)
}

/// Sobolev-type diagnostic norm `sqrt(<phi, Delta^{k/2} phi>)`; `k = 0` is
/// the Hilbert norm. Fractional powers go through the eigendecomposition, so
/// odd `k` is fine. Monotone non-decreasing in `k` because `Delta >= I`.
pub fn sobolev_norm(rep: &RepSpec, alg: &StructureAlgebra, phi: &StateVector, k: u32) -> Result<f64> {
    if phi.len() != rep.dim {
        return Err(CoreError::Argument("state dimension mismatch".into()));
    }
    let delta = nelson_delta(rep, alg)?;
    let (vals, vecs) = hermitian_eigen(&delta);
    let y = vecs.adjoint() * phi;
    let mut acc = 0.0;
    for (i, amp) in y.iter().enumerate() {
        let lam = vals[i].max(0.0);
        acc += lam.powf(k as f64 / 2.0) * amp.norm_sqr();
    }
    Ok(acc.max(0.0).sqrt())
}

/// Validation report from [`homomorphism_check`].
#[derive(Clone, Debug)]
pub struct HomCheckReport {
    pub trials: usize,
    pub max_rel_dev: f64,
    pub pass: bool,
}

fn random_env_element(
    rng: &mut ChaCha8Rng,
    d: usize,
    max_order: u32,
) -> EnvElement {
    use crate::env::PbwMonomial;
    use crate::scalar::GaussianRational;
    let mut out = EnvElement::zero(d);
    let n_terms = rng.gen_range(1..=3);
    for _ in 0..n_terms {
        let mut exps = vec![0u32; d];
        let mut budget = rng.gen_range(0..=max_order);
        while budget > 0 {
            let g = rng.gen_range(0..d);
            exps[g] += 1;
            budget -= 1;
        }
        let coeff = GaussianRational::from_parts(
            rng.gen_range(-3i64..=3),
            rng.gen_range(1i64..=2),
            rng.gen_range(-3i64..=3),
            1,
        );
        out.add_term(PbwMonomial::from_exps(exps), &coeff);
    }
    out
}

/// Truncation-validity gate: over random element pairs of order at most `n`,
/// compares the matrix of the symbolic bracket against the matrix commutator,
/// restricted to columns whose states stay interior under order-`2n` action.
/// With `restrict_interior` disabled the comparison includes the corrupted
/// boundary, which demonstrably fails for small truncations.
pub fn homomorphism_check(
    rep: &RepSpec,
    alg: &StructureAlgebra,
    n: u32,
    trials: usize,
    seed: u64,
    restrict_interior: bool,
) -> Result<HomCheckReport> {
    if alg.dim() != rep.gen_count() {
        return Err(CoreError::Argument(
            "algebra and representation have different generator counts".into(),
        ));
    }
    let interior = if restrict_interior {
        rep.interior_limit(2 * n)
    } else {
        rep.dim
    };
    if interior == 0 {
        return Err(CoreError::Argument(format!(
            "truncation dim {} too small for order {n} with margin {}",
            rep.dim, rep.margin
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rw = Rewriter::new(alg);
    let mut max_rel = 0.0f64;
    for _ in 0..trials {
        let a = random_env_element(&mut rng, alg.dim(), n);
        let b = random_env_element(&mut rng, alg.dim(), n);
        let sym = rw.bracket(&a, &b)?;
        let m_sym = env_to_matrix(rep, &sym)?;
        let m_a = env_to_matrix(rep, &a)?;
        let m_b = env_to_matrix(rep, &b)?;
        let m_comm = &m_a * &m_b - &m_b * &m_a;
        let diff = &m_sym - &m_comm;
        let num: f64 = (0..interior)
            .map(|c| diff.column(c).norm_squared())
            .sum::<f64>()
            .sqrt();
        // Deviations are measured against the operand scale: that is the
        // scale of the commutator's own rounding noise, and it stays
        // meaningful when the bracket is exactly zero.
        let scale = (m_a.norm() * m_b.norm()).max(1e-300);
        max_rel = max_rel.max(num / scale);
    }
    Ok(HomCheckReport {
        trials,
        max_rel_dev: max_rel,
        pass: max_rel < 1e-9,
    })
}

/// `|k>` basis state.
pub fn basis_state(dim: usize, k: usize) -> StateVector {
    let mut v = StateVector::from_element(dim, Complex64::new(0.0, 0.0));
    v[k] = Complex64::new(1.0, 0.0);
    v
}

/// Unit-norm random state supported on indices `0..support`.
pub fn random_interior_state(dim: usize, support: usize, rng: &mut ChaCha8Rng) -> StateVector {
    let support = support.clamp(1, dim);
    let mut v = StateVector::from_element(dim, Complex64::new(0.0, 0.0));
    for k in 0..support {
        v[k] = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    }
    let n = v.norm();
    v / Complex64::new(n, 0.0)
}

pub fn is_hermitian(m: &CMatrix, tol: f64) -> bool {
    (m - m.adjoint()).norm() <= tol * m.norm().max(1.0)
}

pub fn is_skew_hermitian(m: &CMatrix, tol: f64) -> bool {
    (m + m.adjoint()).norm() <= tol * m.norm().max(1.0)
}

/// Row-major CSV with `re,im` cell pairs, for debugging exports.
pub fn matrix_to_csv(m: &CMatrix) -> String {
    let mut out = String::new();
    for r in 0..m.nrows() {
        let row: Vec<String> = (0..m.ncols())
            .map(|c| format!("{},{}", m[(r, c)].re, m[(r, c)].im))
            .collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}
