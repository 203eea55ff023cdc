//! Finite-dimensional Lie algebras given by exact structure constants.
//!
//! A [`StructureAlgebra`] stores the generator labels, the full antisymmetric
//! bracket table `[L_i, L_j] = sum_k c_ijk L_k` with Gaussian-rational
//! coefficients, an involution sign per generator (`+1` Hermitian, `-1`
//! skew-Hermitian) and centrality flags. Construction validates antisymmetry
//! and centrality; the Jacobi identity is checked separately by
//! [`StructureAlgebra::verify_jacobi`] so callers can report a witness.

use crate::error::{CoreError, Result};
use crate::scalar::GaussianRational;
use std::collections::BTreeMap;
use std::fmt;

/// Sign of a generator under the adjoint involution.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Involution {
    Hermitian,
    SkewHermitian,
}

impl Involution {
    pub fn sign(self) -> i64 {
        match self {
            Involution::Hermitian => 1,
            Involution::SkewHermitian => -1,
        }
    }
}

/// A sparse linear combination of generators with exact coefficients.
///
/// Zero coefficients are never stored; equality is coefficient-wise.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct AlgebraElement {
    coords: BTreeMap<usize, GaussianRational>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn generator(index: usize) -> Self {
        Self::term(index, GaussianRational::one())
    }

    pub fn term(index: usize, coeff: GaussianRational) -> Self {
        let mut coords = BTreeMap::new();
        if !coeff.is_zero() {
            coords.insert(index, coeff);
        }
        Self { coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> impl Iterator<Item = (usize, &GaussianRational)> {
        self.coords.iter().map(|(k, v)| (*k, v))
    }

    pub fn coeff(&self, index: usize) -> GaussianRational {
        self.coords
            .get(&index)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn add_term(&mut self, index: usize, coeff: &GaussianRational) {
        if coeff.is_zero() {
            return;
        }
        match self.coords.entry(index) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let new = o.get() + coeff;
                if new.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = new;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in other.coords() {
            out.add_term(k, v);
        }
        out
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coords: self
                .coords
                .iter()
                .map(|(k, v)| (*k, v * c))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&(-GaussianRational::one()))
    }

    pub fn render(&self, labels: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coords
            .iter()
            .map(|(k, v)| format!("({})*{}", v, labels[*k]))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Witness of a Jacobi-identity violation on a generator triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiWitness {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl fmt::Display for JacobiWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "generator triple ({}, {}, {})", self.i, self.j, self.k)
    }
}

/// A Lie algebra defined by exact structure constants.
#[derive(Clone, Debug)]
pub struct StructureAlgebra {
    name: String,
    labels: Vec<String>,
    /// Full d x d table; `table[i][j] = [L_i, L_j]`.
    table: Vec<Vec<AlgebraElement>>,
    involutions: Vec<Involution>,
    central: Vec<bool>,
    /// A central generator identified with the scalar unit in
    /// enveloping-algebra closure and coverage computations (see `env`).
    unit_generator: Option<usize>,
}

impl StructureAlgebra {
    /// Builds and validates an algebra from the strictly-upper bracket
    /// entries; `[L_j, L_i]` for `i < j` is filled in by antisymmetry.
    ///
    /// Rejected at construction: diagonal or lower entries supplied twice,
    /// central generators with nonzero brackets, or a designated unit
    /// generator that is not central. The Jacobi identity is *not* checked
    /// here; call [`Self::verify_jacobi`] (the loaders do).
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        upper_brackets: Vec<((usize, usize), AlgebraElement)>,
        involutions: Vec<Involution>,
        central: Vec<bool>,
        unit_generator: Option<usize>,
    ) -> Result<Self> {
        let d = labels.len();
        if d == 0 {
            return Err(CoreError::Argument("algebra needs at least one generator".into()));
        }
        if involutions.len() != d || central.len() != d {
            return Err(CoreError::Argument(
                "involution/centrality flags must match generator count".into(),
            ));
        }
        let mut table = vec![vec![AlgebraElement::zero(); d]; d];
        for ((i, j), elem) in upper_brackets {
            if i >= d || j >= d {
                return Err(CoreError::Argument(format!(
                    "bracket entry ({i},{j}) out of range for {d} generators"
                )));
            }
            if i == j {
                if !elem.is_zero() {
                    return Err(CoreError::Validation(format!(
                        "[{l},{l}] must vanish",
                        l = labels[i]
                    )));
                }
                continue;
            }
            if i > j {
                return Err(CoreError::Argument(format!(
                    "supply bracket entries with i < j only, got ({i},{j})"
                )));
            }
            for (k, _) in elem.coords() {
                if k >= d {
                    return Err(CoreError::Argument(format!(
                        "bracket ({i},{j}) references generator {k} out of range"
                    )));
                }
            }
            table[i][j] = elem.clone();
            table[j][i] = elem.neg();
        }
        if let Some(u) = unit_generator {
            if u >= d {
                return Err(CoreError::Argument(format!("unit generator {u} out of range")));
            }
            if !central[u] {
                return Err(CoreError::Validation(
                    "the designated unit generator must be central".into(),
                ));
            }
        }
        let alg = Self {
            name: name.into(),
            labels,
            table,
            involutions,
            central,
            unit_generator,
        };
        for g in 0..d {
            if alg.central[g] {
                for other in 0..d {
                    if !alg.table[g][other].is_zero() {
                        return Err(CoreError::Validation(format!(
                            "central generator {} has a nonzero bracket with {}",
                            alg.labels[g], alg.labels[other]
                        )));
                    }
                }
            }
        }
        Ok(alg)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn involution(&self, g: usize) -> Involution {
        self.involutions[g]
    }

    pub fn is_central(&self, g: usize) -> bool {
        self.central[g]
    }

    pub fn unit_generator(&self) -> Option<usize> {
        self.unit_generator
    }

    /// `[L_i, L_j]` exactly as stored.
    pub fn bracket_gen(&self, i: usize, j: usize) -> Result<AlgebraElement> {
        let d = self.dim();
        if i >= d || j >= d {
            return Err(CoreError::Argument(format!(
                "generator index out of range: ({i},{j}) with d = {d}"
            )));
        }
        Ok(self.table[i][j].clone())
    }

    /// Bilinear extension of the bracket table to arbitrary elements.
    pub fn bracket(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        let d = self.dim();
        let mut out = AlgebraElement::zero();
        for (i, ci) in x.coords() {
            if i >= d {
                return Err(CoreError::Argument(format!(
                    "element references generator {i} outside algebra '{}'",
                    self.name
                )));
            }
            for (j, cj) in y.coords() {
                if j >= d {
                    return Err(CoreError::Argument(format!(
                        "element references generator {j} outside algebra '{}'",
                        self.name
                    )));
                }
                let c = ci * cj;
                for (k, ck) in self.table[i][j].coords() {
                    out.add_term(k, &(&c * ck));
                }
            }
        }
        Ok(out)
    }

    /// Checks the Jacobi identity exactly on every generator triple.
    pub fn verify_jacobi(&self) -> std::result::Result<(), JacobiWitness> {
        let d = self.dim();
        for i in 0..d {
            for j in (i + 1)..d {
                for k in (j + 1)..d {
                    let a = AlgebraElement::generator(i);
                    let b = AlgebraElement::generator(j);
                    let c = AlgebraElement::generator(k);
                    let t1 = self.bracket(&self.table[i][j], &c).unwrap();
                    let t2 = self.bracket(&self.table[j][k], &a).unwrap();
                    let t3 = self.bracket(&self.table[k][i], &b).unwrap();
                    if !t1.add(&t2).add(&t3).is_zero() {
                        return Err(JacobiWitness { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    /// The adjoint involution on order-1 elements: conjugate coefficients and
    /// apply each generator's sign. An exact involution.
    pub fn adjoint(&self, x: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (g, c) in x.coords() {
            let mut cc = c.conj();
            if self.involutions[g] == Involution::SkewHermitian {
                cc = -cc;
            }
            out.add_term(g, &cc);
        }
        out
    }
}
