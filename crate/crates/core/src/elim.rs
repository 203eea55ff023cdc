//! Exact sparse Gaussian elimination over enveloping-algebra elements.
//!
//! Rows are kept in reduced row-echelon form with monic pivots, so the basis
//! of a span is canonical: it depends only on the subspace and the monomial
//! ranking, never on insertion order. No tolerance enters any decision.

use crate::env::{EnvElement, PbwMonomial};
use crate::scalar::GaussianRational;
use std::collections::HashMap;

/// Monomial ranking used to pick pivots.
#[derive(Clone, Debug)]
pub enum Ranking {
    /// Plain descending graded-lexicographic order.
    GradedLex,
    /// Ranks monomials *outside* the window (order 0 or order > n, or any
    /// power of the excluded generator) above monomials inside it, so rows
    /// whose pivot is inside the window are supported entirely inside. Used
    /// to compute the dimension of `span ∩ <monomials of order 1..=n>`.
    CoverageWindow { n: u32, exclude_gen: Option<usize> },
}

impl Ranking {
    fn class(&self, m: &PbwMonomial) -> u8 {
        match self {
            Ranking::GradedLex => 0,
            Ranking::CoverageWindow { n, exclude_gen } => {
                let ord = m.order();
                let excluded = exclude_gen.map_or(false, |g| m.exps()[g] > 0);
                if ord == 0 || ord > *n || excluded {
                    1
                } else {
                    0
                }
            }
        }
    }

    /// True iff `a` outranks `b`.
    fn gt(&self, a: &PbwMonomial, b: &PbwMonomial) -> bool {
        (self.class(a), a) > (self.class(b), b)
    }
}

/// A reduced row-echelon basis with exact arithmetic.
pub struct Echelon {
    ranking: Ranking,
    rows: Vec<EnvElement>,
    pivots: Vec<PbwMonomial>,
    pivot_index: HashMap<PbwMonomial, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::with_ranking(Ranking::GradedLex)
    }

    pub fn with_ranking(ranking: Ranking) -> Self {
        Self {
            ranking,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_index: HashMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ranking(&self) -> &Ranking {
        &self.ranking
    }

    fn leading(&self, e: &EnvElement) -> Option<PbwMonomial> {
        e.terms()
            .map(|(m, _)| m)
            .max_by(|a, b| {
                if self.ranking.gt(a, b) {
                    std::cmp::Ordering::Greater
                } else if self.ranking.gt(b, a) {
                    std::cmp::Ordering::Less
                } else {
                    std::cmp::Ordering::Equal
                }
            })
            .cloned()
    }

    /// Fully reduces `e` against the current rows.
    pub fn reduce(&self, e: &EnvElement) -> EnvElement {
        let mut r = e.clone();
        loop {
            let hit = r
                .terms()
                .filter_map(|(m, c)| self.pivot_index.get(m).map(|&i| (m.clone(), c.clone(), i)))
                .max_by(|a, b| {
                    if self.ranking.gt(&a.0, &b.0) {
                        std::cmp::Ordering::Greater
                    } else if self.ranking.gt(&b.0, &a.0) {
                        std::cmp::Ordering::Less
                    } else {
                        std::cmp::Ordering::Equal
                    }
                });
            let Some((_, coeff, idx)) = hit else { break };
            r = r.sub(&self.rows[idx].scale(&coeff));
        }
        r
    }

    /// True iff `e` already lies in the span of the rows.
    pub fn contains(&self, e: &EnvElement) -> bool {
        self.reduce(e).is_zero()
    }

    /// Inserts `e` if it is independent of the current rows; returns whether
    /// the dimension grew. The new row is made monic and back-substituted
    /// into every existing row.
    pub fn insert(&mut self, e: &EnvElement) -> bool {
        let r = self.reduce(e);
        if r.is_zero() {
            return false;
        }
        let pivot = self.leading(&r).expect("nonzero element has a leading monomial");
        let lead = r.coeff(&pivot);
        let inv = lead.inv().expect("leading coefficient is nonzero");
        let row = r.scale(&inv);
        for existing in &mut self.rows {
            let c = existing.coeff(&pivot);
            if !c.is_zero() {
                *existing = existing.sub(&row.scale(&c));
            }
        }
        self.pivot_index.insert(pivot.clone(), self.rows.len());
        self.pivots.push(pivot);
        self.rows.push(row);
        true
    }

    pub fn rows(&self) -> &[EnvElement] {
        &self.rows
    }

    pub fn pivots(&self) -> &[PbwMonomial] {
        &self.pivots
    }

    /// Rows sorted by pivot rank, highest first: a canonical basis of the
    /// span, independent of insertion order.
    pub fn canonical_rows(&self) -> Vec<EnvElement> {
        let mut idx: Vec<usize> = (0..self.rows.len()).collect();
        idx.sort_by(|&a, &b| {
            if self.ranking.gt(&self.pivots[a], &self.pivots[b]) {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
        idx.into_iter().map(|i| self.rows[i].clone()).collect()
    }

    /// Expresses `e` in the row basis if possible: returns the coefficient of
    /// each row such that `e = sum_i c_i row_i`, or `None` if `e` is outside
    /// the span.
    pub fn coordinates(&self, e: &EnvElement) -> Option<Vec<GaussianRational>> {
        let mut r = e.clone();
        let mut coords = vec![GaussianRational::zero(); self.rows.len()];
        loop {
            let hit = r
                .terms()
                .filter_map(|(m, c)| self.pivot_index.get(m).map(|&i| (c.clone(), i)))
                .next();
            let Some((coeff, idx)) = hit else { break };
            coords[idx] = &coords[idx] + &coeff;
            r = r.sub(&self.rows[idx].scale(&coeff));
        }
        if r.is_zero() {
            Some(coords)
        } else {
            None
        }
    }
}

impl Default for Echelon {
    fn default() -> Self {
        Self::new()
    }
}
