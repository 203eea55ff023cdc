//! The universal enveloping algebra over a structure algebra.
//!
//! Elements are exact linear combinations of normally-ordered monomials
//! `L_1^{a_1} ... L_d^{a_d}` in the fixed generator order of the algebra
//! (declaration order). Products are computed by adjacent-transposition
//! rewriting: each out-of-order pair `L_b L_a` (with `b` after `a`) becomes
//! `L_a L_b + [L_b, L_a]`, and every correction term is strictly shorter, so
//! the rewriting terminates. A per-rewriter memo table keyed on words makes
//! repeated products cheap; it has no observable effect on results.

use crate::algebra::{Involution, StructureAlgebra};
use crate::error::{CoreError, Result};
use crate::scalar::GaussianRational;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

/// An ordered monomial, stored as one exponent per generator.
///
/// The all-zero monomial is the unit of the enveloping algebra; its order is
/// zero. The order of any monomial is the sum of its exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PbwMonomial {
    exps: Vec<u32>,
}

impl PbwMonomial {
    pub fn unit(d: usize) -> Self {
        Self { exps: vec![0; d] }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    /// Builds the monomial counting the letters of an *ordered* word.
    pub fn from_sorted_word(d: usize, word: &[usize]) -> Self {
        let mut exps = vec![0u32; d];
        for &g in word {
            exps[g] += 1;
        }
        Self { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn order(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    /// Expands back into the ordered word `[0,0,...,1,...]`.
    pub fn word(&self) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.order() as usize);
        for (g, &e) in self.exps.iter().enumerate() {
            for _ in 0..e {
                w.push(g);
            }
        }
        w
    }

    pub fn render(&self, labels: &[String]) -> String {
        if self.is_unit() {
            return "1".to_string();
        }
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(g, &e)| format!("{}^{}", labels[g], e))
            .collect::<Vec<_>>()
            .join("")
    }
}

/// Graded-lexicographic order: by total order first, then lexicographically
/// on the exponent vector. This fixes the canonical echelon forms used by the
/// closure machinery.
impl Ord for PbwMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for PbwMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An exact element of the enveloping algebra: a sparse map from PBW
/// monomials to Gaussian-rational coefficients. Zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EnvElement {
    d: usize,
    terms: BTreeMap<PbwMonomial, GaussianRational>,
}

impl EnvElement {
    pub fn zero(d: usize) -> Self {
        Self { d, terms: BTreeMap::new() }
    }

    pub fn unit(d: usize) -> Self {
        Self::monomial(PbwMonomial::unit(d), GaussianRational::one())
    }

    pub fn scalar(d: usize, c: GaussianRational) -> Self {
        Self::monomial(PbwMonomial::unit(d), c)
    }

    pub fn generator(d: usize, g: usize) -> Self {
        let mut exps = vec![0u32; d];
        exps[g] = 1;
        Self::monomial(PbwMonomial::from_exps(exps), GaussianRational::one())
    }

    pub fn monomial(m: PbwMonomial, c: GaussianRational) -> Self {
        let d = m.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { d, terms }
    }

    /// Embeds an order-1 algebra element.
    pub fn from_algebra_element(d: usize, x: &crate::algebra::AlgebraElement) -> Self {
        let mut out = Self::zero(d);
        for (g, c) in x.coords() {
            let mut exps = vec![0u32; d];
            exps[g] = 1;
            out.add_term(PbwMonomial::from_exps(exps), c);
        }
        out
    }

    pub fn gen_count(&self) -> usize {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_else(GaussianRational::zero)
    }

    /// The order of the element; `None` for the zero element.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(PbwMonomial::order).max()
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.len(), self.d);
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let new = o.get() + c;
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
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (m, c) in other.terms() {
            self.add_term(m.clone(), c);
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.d);
        }
        Self {
            d: self.d,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&(-GaussianRational::one()))
    }

    /// Drops every term of order greater than `n`. Idempotent.
    pub fn truncated(&self, n: u32) -> Self {
        Self {
            d: self.d,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.order() <= n)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitutes the algebra's designated central unit generator by the
    /// scalar 1, i.e. passes to the quotient in which that generator *is* the
    /// identity operator. This is an algebra homomorphism; closure and
    /// coverage computations over unit-carrying algebras work in its image.
    /// No-op when the algebra designates no unit generator.
    pub fn identify_unit(&self, alg: &StructureAlgebra) -> Self {
        let Some(u) = alg.unit_generator() else {
            return self.clone();
        };
        let mut out = Self::zero(self.d);
        for (m, c) in self.terms() {
            if m.exps()[u] == 0 {
                out.add_term(m.clone(), c);
            } else {
                let mut exps = m.exps().to_vec();
                exps[u] = 0;
                out.add_term(PbwMonomial::from_exps(exps), c);
            }
        }
        out
    }

    /// Canonical text rendering: monomials sorted in descending graded-lex
    /// order, every coefficient in parentheses, e.g.
    /// `(2i)*Ly^1Lz^1 + (-1)*Lx^1`.
    pub fn render(&self, labels: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| format!("({})*{}", c, m.render(labels)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Normal-ordering engine for one algebra, with a word-keyed memo table.
///
/// The cache only stores already-computed normal forms; results are identical
/// with or without cache hits. Each rewriter is single-threaded; concurrent
/// callers create their own.
pub struct Rewriter<'a> {
    alg: &'a StructureAlgebra,
    cache: HashMap<Box<[u8]>, EnvElement>,
}

impl<'a> Rewriter<'a> {
    pub fn new(alg: &'a StructureAlgebra) -> Self {
        Self { alg, cache: HashMap::new() }
    }

    pub fn algebra(&self) -> &StructureAlgebra {
        self.alg
    }

    fn check_element(&self, x: &EnvElement) -> Result<()> {
        if x.gen_count() != self.alg.dim() {
            return Err(CoreError::Argument(format!(
                "element over {} generators used with algebra '{}' of dimension {}",
                x.gen_count(),
                self.alg.name(),
                self.alg.dim()
            )));
        }
        Ok(())
    }

    /// PBW normal form of the product `L_{w_1} ... L_{w_n}`.
    pub fn normal_order(&mut self, word: &[usize]) -> Result<EnvElement> {
        let d = self.alg.dim();
        for &g in word {
            if g >= d {
                return Err(CoreError::Argument(format!(
                    "word letter {g} out of range for algebra '{}'",
                    self.alg.name()
                )));
            }
        }
        Ok(self.normal_order_word(word))
    }

    fn normal_order_word(&mut self, word: &[usize]) -> EnvElement {
        let d = self.alg.dim();
        // Find the first descent.
        let descent = word.windows(2).position(|p| p[0] > p[1]);
        let Some(k) = descent else {
            return EnvElement::monomial(
                PbwMonomial::from_sorted_word(d, word),
                GaussianRational::one(),
            );
        };
        let key: Box<[u8]> = word.iter().map(|&g| g as u8).collect();
        if let Some(hit) = self.cache.get(&key) {
            return hit.clone();
        }
        // L_b L_a = L_a L_b + [L_b, L_a], with b = word[k] > a = word[k+1].
        let mut swapped = word.to_vec();
        swapped.swap(k, k + 1);
        let mut result = self.normal_order_word(&swapped);
        let correction = self.alg.bracket_gen(word[k], word[k + 1]).expect("validated indices");
        for (t, c) in correction.coords() {
            let mut shorter = Vec::with_capacity(word.len() - 1);
            shorter.extend_from_slice(&word[..k]);
            shorter.push(t);
            shorter.extend_from_slice(&word[k + 2..]);
            let sub = self.normal_order_word(&shorter);
            result.add_assign(&sub.scale(c));
        }
        self.cache.insert(key, result.clone());
        result
    }

    /// Associative product of the enveloping algebra, in normal form.
    pub fn multiply(&mut self, a: &EnvElement, b: &EnvElement) -> Result<EnvElement> {
        self.check_element(a)?;
        self.check_element(b)?;
        let mut out = EnvElement::zero(self.alg.dim());
        for (ma, ca) in a.terms() {
            let wa = ma.word();
            for (mb, cb) in b.terms() {
                let mut word = wa.clone();
                word.extend(mb.word());
                let prod = self.normal_order_word(&word);
                out.add_assign(&prod.scale(&(ca * cb)));
            }
        }
        Ok(out)
    }

    /// `[A, B] = A*B - B*A` in normal form.
    pub fn bracket(&mut self, a: &EnvElement, b: &EnvElement) -> Result<EnvElement> {
        let ab = self.multiply(a, b)?;
        let ba = self.multiply(b, a)?;
        Ok(ab.sub(&ba))
    }

    /// The adjoint, extended from the generator flags as an antilinear
    /// antihomomorphism; the result is renormal-ordered.
    pub fn adjoint(&mut self, a: &EnvElement) -> Result<EnvElement> {
        self.check_element(a)?;
        let mut out = EnvElement::zero(self.alg.dim());
        for (m, c) in a.terms() {
            let mut sign_flip = false;
            for (g, &e) in m.exps().iter().enumerate() {
                if self.alg.involution(g) == Involution::SkewHermitian && e % 2 == 1 {
                    sign_flip = !sign_flip;
                }
            }
            let mut coeff = c.conj();
            if sign_flip {
                coeff = -coeff;
            }
            let mut word = m.word();
            word.reverse();
            let reordered = self.normal_order_word(&word);
            out.add_assign(&reordered.scale(&coeff));
        }
        Ok(out)
    }

    /// Whether `H† = -H` exactly.
    pub fn is_skew(&mut self, h: &EnvElement) -> Result<bool> {
        Ok(self.adjoint(h)? == h.neg())
    }
}

/// One-shot convenience wrappers over a fresh [`Rewriter`].
pub fn normal_order(alg: &StructureAlgebra, word: &[usize]) -> Result<EnvElement> {
    Rewriter::new(alg).normal_order(word)
}

pub fn multiply(alg: &StructureAlgebra, a: &EnvElement, b: &EnvElement) -> Result<EnvElement> {
    Rewriter::new(alg).multiply(a, b)
}

pub fn env_bracket(alg: &StructureAlgebra, a: &EnvElement, b: &EnvElement) -> Result<EnvElement> {
    Rewriter::new(alg).bracket(a, b)
}

pub fn env_adjoint(alg: &StructureAlgebra, a: &EnvElement) -> Result<EnvElement> {
    Rewriter::new(alg).adjoint(a)
}

pub fn grade_truncate(a: &EnvElement, n: u32) -> EnvElement {
    a.truncated(n)
}
