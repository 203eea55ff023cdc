//! Lie-closure generation inside the (truncated) enveloping algebra, plus
//! the subspace conditions the controllability criteria are built from.
//!
//! All membership and independence decisions are exact. Order caps turn the
//! in-general-undecidable question "is this closure infinite dimensional"
//! into a reported observation: dimension growth under increasing caps is
//! labelled evidence, never proof.
//!
//! For algebras that designate a central unit generator, every computation in
//! this module identifies that generator with the scalar 1 first (see
//! [`EnvElement::identify_unit`]); closures are then taken in the quotient
//! where the unit generator acts as the identity operator.

use crate::algebra::StructureAlgebra;
use crate::elim::{Echelon, Ranking};
use crate::env::{EnvElement, PbwMonomial, Rewriter};
use crate::error::{CoreError, Result};
use serde::Serialize;

/// Caps bounding a closure computation.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ClosureCaps {
    /// Brackets are grade-truncated at this order.
    pub order_cap: u32,
    /// Maximum number of bracket sweeps.
    pub iter_cap: u32,
}

impl ClosureCaps {
    pub fn new(order_cap: u32, iter_cap: u32) -> Self {
        Self { order_cap, iter_cap }
    }
}

/// Result of a capped Lie-closure search.
#[derive(Clone, Debug)]
pub struct LieClosureResult {
    /// Canonical reduced row-echelon basis, highest pivot first.
    pub basis: Vec<EnvElement>,
    pub dim: usize,
    /// Maximum term order over the basis; `None` for an empty basis.
    pub max_order: Option<u32>,
    /// True iff a full bracket sweep added no new independent element.
    pub saturated: bool,
    pub order_cap: u32,
    /// Bracket sweeps performed.
    pub iterations: u32,
    /// Set when the iteration cap stopped the search before saturation.
    pub hit_iter_cap: bool,
}

impl LieClosureResult {
    pub fn span(&self) -> Echelon {
        let mut ech = Echelon::new();
        for row in &self.basis {
            ech.insert(row);
        }
        ech
    }
}

/// Smallest bracket-closed subspace of the order-capped enveloping algebra
/// containing the (grade-truncated) generators.
///
/// Deterministic: pairs are processed in (older, newer) basis order and new
/// elements are appended, so identical inputs give identical bases.
pub fn lie_closure(
    alg: &StructureAlgebra,
    generators: &[EnvElement],
    caps: ClosureCaps,
) -> Result<LieClosureResult> {
    if generators.is_empty() {
        return Err(CoreError::Argument("closure of an empty generator list".into()));
    }
    if caps.order_cap == 0 || caps.iter_cap == 0 {
        return Err(CoreError::Argument("closure caps must be positive".into()));
    }
    // Generator order is measured after unit identification, where the
    // effective order can only shrink.
    let effective = generators
        .iter()
        .map(|g| g.identify_unit(alg).order().unwrap_or(0))
        .max()
        .unwrap_or(0);
    if effective > caps.order_cap {
        return Err(CoreError::Argument(format!(
            "order cap {} below maximum generator order {effective}",
            caps.order_cap
        )));
    }

    let mut rw = Rewriter::new(alg);
    let mut ech = Echelon::new();
    let mut elements: Vec<EnvElement> = Vec::new();
    for g in generators {
        if g.gen_count() != alg.dim() {
            return Err(CoreError::Argument(
                "generator over a different algebra".into(),
            ));
        }
        let reduced = g.identify_unit(alg).truncated(caps.order_cap);
        if ech.insert(&reduced) {
            elements.push(reduced);
        }
    }

    let mut iterations = 0u32;
    let mut saturated = false;
    let mut hit_iter_cap = false;
    // Pairs with second index below this bound have been processed.
    let mut processed_upto = 0usize;
    loop {
        if iterations >= caps.iter_cap {
            hit_iter_cap = true;
            break;
        }
        iterations += 1;
        let frontier_end = elements.len();
        let mut added = false;
        for j in processed_upto.max(1)..frontier_end {
            for i in 0..j {
                let b = rw.bracket(&elements[i], &elements[j])?;
                let b = b.identify_unit(alg).truncated(caps.order_cap);
                if ech.insert(&b) {
                    elements.push(b);
                    added = true;
                }
            }
        }
        processed_upto = frontier_end;
        if !added && elements.len() == frontier_end {
            saturated = true;
            break;
        }
    }

    let basis = ech.canonical_rows();
    let max_order = basis.iter().filter_map(EnvElement::order).max();
    Ok(LieClosureResult {
        dim: basis.len(),
        basis,
        max_order,
        saturated,
        order_cap: caps.order_cap,
        iterations,
        hit_iter_cap,
    })
}

/// Closure of `{ad_{H0}^k b : b in B, 0 <= k <= k_max}` under brackets,
/// truncated at the same order cap as `B`. Contains `B` (the `k = 0` terms).
pub fn build_c(
    alg: &StructureAlgebra,
    h0: &EnvElement,
    b: &LieClosureResult,
    k_max: u32,
    caps: ClosureCaps,
) -> Result<LieClosureResult> {
    if caps.order_cap != b.order_cap {
        return Err(CoreError::Argument(format!(
            "inconsistent caps: B was computed at order cap {}, got {}",
            b.order_cap, caps.order_cap
        )));
    }
    let mut rw = Rewriter::new(alg);
    let h0 = h0.identify_unit(alg);
    let mut seeds = Vec::new();
    for base in &b.basis {
        let mut current = base.clone();
        seeds.push(current.clone());
        for _ in 0..k_max {
            current = rw
                .bracket(&h0, &current)?
                .identify_unit(alg)
                .truncated(caps.order_cap);
            if current.is_zero() {
                break;
            }
            seeds.push(current.clone());
        }
    }
    if seeds.is_empty() {
        return Err(CoreError::Argument("B has an empty basis".into()));
    }
    lie_closure(alg, &seeds, caps)
}

/// Outcome of the `[B, C] ⊆ B` condition.
#[derive(Clone, Debug)]
pub enum BcOutcome {
    Holds,
    Fails {
        /// Index into `b.basis`.
        b_index: usize,
        /// Index into `c.basis`.
        c_index: usize,
        /// The part of the bracket outside span(B).
        residual: EnvElement,
    },
}

impl BcOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, BcOutcome::Holds)
    }
}

/// Decides `[B, C] ⊆ B` by exact elimination on basis pairs (sufficient by
/// bilinearity), brackets truncated at the common order cap.
pub fn check_bc_in_b(
    alg: &StructureAlgebra,
    b: &LieClosureResult,
    c: &LieClosureResult,
    order_cap: u32,
) -> Result<BcOutcome> {
    let span_b = b.span();
    let mut rw = Rewriter::new(alg);
    for (bi, belem) in b.basis.iter().enumerate() {
        for (ci, celem) in c.basis.iter().enumerate() {
            let br = rw
                .bracket(belem, celem)?
                .identify_unit(alg)
                .truncated(order_cap);
            let residual = span_b.reduce(&br);
            if !residual.is_zero() {
                return Ok(BcOutcome::Fails {
                    b_index: bi,
                    c_index: ci,
                    residual,
                });
            }
        }
    }
    Ok(BcOutcome::Holds)
}

/// Coverage of the order-`1..=n` PBW monomials by a closure result.
#[derive(Clone, Debug)]
pub struct CoverageReport {
    /// Dimension of `span(basis) ∩ <monomials of order 1..=n>`.
    pub covered_dim: usize,
    /// Number of PBW monomials of order `1..=n` (excluding the unit
    /// generator's powers when the algebra identifies one).
    pub total: usize,
    /// Monomials of order `1..=n` not individually contained in the span.
    /// A combination of missing monomials can still be covered; the fraction
    /// is computed from the intersection dimension, not from this list.
    pub missing: Vec<PbwMonomial>,
}

impl CoverageReport {
    pub fn fraction(&self) -> f64 {
        if self.total == 0 {
            return 1.0;
        }
        self.covered_dim as f64 / self.total as f64
    }

    pub fn is_full(&self) -> bool {
        self.covered_dim == self.total
    }
}

/// All monomials of order `1..=n` (skipping any power of `skip`), in
/// ascending graded-lex order.
fn enumerate_monomials(d: usize, skip: Option<usize>, n: u32) -> Vec<PbwMonomial> {
    fn rec(
        d: usize,
        skip: Option<usize>,
        g: usize,
        remaining: u32,
        exps: &mut Vec<u32>,
        out: &mut Vec<PbwMonomial>,
    ) {
        if g == d {
            let m = PbwMonomial::from_exps(exps.clone());
            if m.order() >= 1 {
                out.push(m);
            }
            return;
        }
        let cap = if Some(g) == skip { 0 } else { remaining };
        for e in 0..=cap {
            exps[g] = e;
            rec(d, skip, g + 1, remaining - e, exps, out);
        }
        exps[g] = 0;
    }
    let mut out = Vec::new();
    let mut exps = vec![0u32; d];
    rec(d, skip, 0, n, &mut exps, &mut out);
    out.sort();
    out
}

/// Fraction of the order-`1..=n` monomial space spanned by the closure, with
/// the individually-missing monomials listed. The order-0 monomial is always
/// excluded from the census; so are powers of an identified unit generator.
pub fn pbw_coverage(
    alg: &StructureAlgebra,
    result: &LieClosureResult,
    n: u32,
) -> Result<CoverageReport> {
    if n > result.order_cap {
        return Err(CoreError::Argument(format!(
            "coverage order {n} exceeds the closure's order cap {}",
            result.order_cap
        )));
    }
    let skip = alg.unit_generator();
    let census = enumerate_monomials(alg.dim(), skip, n);

    // Intersection dimension: eliminate with a ranking that prefers pivots
    // outside the window, so rows pivoting inside are fully inside.
    let mut windowed = Echelon::with_ranking(Ranking::CoverageWindow { n, exclude_gen: skip });
    for row in &result.basis {
        windowed.insert(row);
    }
    let covered_dim = windowed
        .pivots()
        .iter()
        .filter(|p| {
            let ord = p.order();
            ord >= 1 && ord <= n && skip.map_or(true, |g| p.exps()[g] == 0)
        })
        .count();

    let span = result.span();
    let missing = census
        .iter()
        .filter(|m| {
            !span.contains(&EnvElement::monomial(
                (*m).clone(),
                crate::scalar::GaussianRational::one(),
            ))
        })
        .cloned()
        .collect();

    Ok(CoverageReport {
        covered_dim,
        total: census.len(),
        missing,
    })
}
