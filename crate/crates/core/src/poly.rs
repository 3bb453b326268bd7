//! Multivariate polynomials with exact rational coefficients.
//!
//! Terms are stored strictly descending in the polynomial's own monomial
//! order, with no zero coefficients and pairwise distinct monomials. The
//! zero polynomial has an empty term list. All values are immutable
//! after construction; every operation returns a new polynomial.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::context::VariableContext;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    ContextMismatch,
    UnknownVariable(String),
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::ContextMismatch => write!(f, "polynomials live in different contexts"),
            PolyError::UnknownVariable(n) => write!(f, "variable `{}` not in target context", n),
        }
    }
}

impl std::error::Error for PolyError {}

#[derive(Debug, Clone)]
pub struct Polynomial {
    ctx: Arc<VariableContext>,
    order: MonomialOrder,
    /// Strictly descending in `order`; no zero coefficients.
    terms: Vec<(BigRational, Monomial)>,
}

impl Polynomial {
    pub fn zero(ctx: Arc<VariableContext>, order: MonomialOrder) -> Self {
        Polynomial {
            ctx,
            order,
            terms: Vec::new(),
        }
    }

    pub fn constant(ctx: Arc<VariableContext>, order: MonomialOrder, c: BigRational) -> Self {
        Polynomial::from_terms(ctx, order, vec![(c, Monomial::one())])
    }

    pub fn one(ctx: Arc<VariableContext>, order: MonomialOrder) -> Self {
        Polynomial::constant(ctx, order, BigRational::one())
    }

    pub fn variable(ctx: Arc<VariableContext>, order: MonomialOrder, idx: usize) -> Self {
        assert!(idx < ctx.num_vars(), "variable index out of range");
        Polynomial::from_terms(ctx, order, vec![(BigRational::one(), Monomial::var(idx))])
    }

    pub fn monomial(ctx: Arc<VariableContext>, order: MonomialOrder, m: Monomial) -> Self {
        Polynomial::from_terms(ctx, order, vec![(BigRational::one(), m)])
    }

    /// Normalizing constructor: merges duplicate monomials, drops zero
    /// coefficients, sorts descending.
    pub fn from_terms(
        ctx: Arc<VariableContext>,
        order: MonomialOrder,
        terms: Vec<(BigRational, Monomial)>,
    ) -> Self {
        let mut map: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (c, m) in terms {
            if c.is_zero() {
                continue;
            }
            let entry = map.entry(m).or_insert_with(BigRational::zero);
            *entry += c;
        }
        let mut terms: Vec<(BigRational, Monomial)> = map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (c, m))
            .collect();
        terms.sort_by(|(_, a), (_, b)| order.compare(b, a));
        Polynomial { ctx, order, terms }
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn terms(&self) -> &[(BigRational, Monomial)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// A binomial in the sense used for toric ideals: at most two terms.
    pub fn is_binomial(&self) -> bool {
        self.terms.len() <= 2
    }

    pub fn leading_term(&self) -> Option<(&BigRational, &Monomial)> {
        self.terms.first().map(|(c, m)| (c, m))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(_, m)| m)
    }

    /// Union of the supports of all monomials.
    pub fn support(&self) -> std::collections::BTreeSet<usize> {
        let mut s = std::collections::BTreeSet::new();
        for (_, m) in &self.terms {
            s.extend(m.support());
        }
        s
    }

    fn same_context(&self, other: &Polynomial) -> bool {
        Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx
    }

    /// Re-sorts the terms under a different order.
    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        if self.order == order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|(_, a), (_, b)| order.compare(b, a));
        Polynomial {
            ctx: Arc::clone(&self.ctx),
            order,
            terms,
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        if !self.same_context(other) {
            return Err(PolyError::ContextMismatch);
        }
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Ok(Polynomial::from_terms(
            Arc::clone(&self.ctx),
            self.order.clone(),
            terms,
        ))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ctx: Arc::clone(&self.ctx),
            order: self.order.clone(),
            terms: self.terms.iter().map(|(c, m)| (-c, m.clone())).collect(),
        }
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        if !self.same_context(other) {
            return Err(PolyError::ContextMismatch);
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ca, ma) in &self.terms {
            for (cb, mb) in &other.terms {
                terms.push((ca * cb, ma.mul(mb)));
            }
        }
        Ok(Polynomial::from_terms(
            Arc::clone(&self.ctx),
            self.order.clone(),
            terms,
        ))
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.checked_add(other).expect("context mismatch in add")
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.checked_sub(other).expect("context mismatch in sub")
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.checked_mul(other).expect("context mismatch in mul")
    }

    pub fn mul_term(&self, c: &BigRational, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(Arc::clone(&self.ctx), self.order.clone());
        }
        // Multiplying every monomial by a fixed one preserves the order.
        Polynomial {
            ctx: Arc::clone(&self.ctx),
            order: self.order.clone(),
            terms: self
                .terms
                .iter()
                .map(|(tc, tm)| (tc * c, tm.mul(m)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        self.mul_term(c, &Monomial::one())
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(Arc::clone(&self.ctx), self.order.clone());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some((lc, _)) => {
                let inv = BigRational::one() / lc;
                self.scale(&inv)
            }
        }
    }

    /// Ring-homomorphism evaluation: variables named in `assignment` map
    /// to the given polynomials (over `target`), all others map to
    /// themselves. Every unassigned variable must exist in `target`.
    pub fn substitute(
        &self,
        assignment: &BTreeMap<String, Polynomial>,
        target: &Arc<VariableContext>,
        order: &MonomialOrder,
    ) -> Result<Polynomial, PolyError> {
        let mut images: BTreeMap<usize, Polynomial> = BTreeMap::new();
        for idx in self.support() {
            let name = self.ctx.name(idx);
            let image = match assignment.get(name) {
                Some(p) => {
                    if !(Arc::ptr_eq(p.context(), target) || **p.context() == **target) {
                        return Err(PolyError::ContextMismatch);
                    }
                    p.with_order(order.clone())
                }
                None => {
                    let t_idx = target
                        .index_of(name)
                        .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
                    Polynomial::variable(Arc::clone(target), order.clone(), t_idx)
                }
            };
            images.insert(idx, image);
        }
        let mut acc = Polynomial::zero(Arc::clone(target), order.clone());
        for (c, m) in &self.terms {
            let mut term = Polynomial::constant(Arc::clone(target), order.clone(), c.clone());
            for (idx, e) in m.iter() {
                term = term.mul(&images[&idx].pow(e));
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Injects this polynomial into a larger context by variable name.
    pub fn embed(
        &self,
        target: &Arc<VariableContext>,
        order: &MonomialOrder,
    ) -> Result<Polynomial, PolyError> {
        let map: Vec<Option<usize>> = (0..self.ctx.num_vars())
            .map(|i| target.index_of(self.ctx.name(i)))
            .collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (c, m) in &self.terms {
            let remapped = m.remap(&map).ok_or_else(|| {
                let bad = m
                    .support()
                    .into_iter()
                    .find(|&i| map[i].is_none())
                    .expect("remap failed on some variable");
                PolyError::UnknownVariable(self.ctx.name(bad).to_string())
            })?;
            terms.push((c.clone(), remapped));
        }
        Ok(Polynomial::from_terms(
            Arc::clone(target),
            order.clone(),
            terms,
        ))
    }

    /// Reindexes through an old-index -> new-index map into `target`.
    /// Returns `None` if some present variable has no image.
    pub fn remap(
        &self,
        map: &[Option<usize>],
        target: &Arc<VariableContext>,
        order: &MonomialOrder,
    ) -> Option<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (c, m) in &self.terms {
            terms.push((c.clone(), m.remap(map)?));
        }
        Some(Polynomial::from_terms(
            Arc::clone(target),
            order.clone(),
            terms,
        ))
    }
}

/// Mathematical equality: same context, same term set. The stored order
/// is presentation, not content.
impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        if !self.same_context(other) {
            return false;
        }
        if self.terms.len() != other.terms.len() {
            return false;
        }
        let a: BTreeMap<&Monomial, &BigRational> =
            self.terms.iter().map(|(c, m)| (m, c)).collect();
        let b: BTreeMap<&Monomial, &BigRational> =
            other.terms.iter().map(|(c, m)| (m, c)).collect();
        a == b
    }
}

impl Eq for Polynomial {}

fn write_coeff(f: &mut fmt::Formatter<'_>, c: &BigRational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    /// Canonical text form: terms in the polynomial's own descending
    /// order, `coef*var^e*...` factors joined by `*`, unit coefficients
    /// omitted, integer coefficients printed without denominator.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, m)) in self.terms.iter().enumerate() {
            let abs = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write_coeff(f, &abs)?;
                continue;
            }
            let mut lead = true;
            if !abs.is_one() {
                write_coeff(f, &abs)?;
                lead = false;
            }
            for (idx, e) in m.iter() {
                if !lead {
                    write!(f, "*")?;
                }
                lead = false;
                write!(f, "{}", self.ctx.name(idx))?;
                if e > 1 {
                    write!(f, "^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn ctx2() -> Arc<VariableContext> {
        VariableContext::standard(2, 3)
    }

    fn var(ctx: &Arc<VariableContext>, name: &str) -> Polynomial {
        Polynomial::variable(
            Arc::clone(ctx),
            MonomialOrder::Grevlex,
            ctx.index_of(name).unwrap(),
        )
    }

    #[test]
    fn add_cancels_terms() {
        let ctx = ctx2();
        let x1 = var(&ctx, "x1");
        let x2 = var(&ctx, "x2");
        // (x1 - x2) + x2 = x1
        let sum = x1.sub(&x2).add(&x2);
        assert_eq!(sum, x1);
    }

    #[test]
    fn multiply_by_monomial() {
        let ctx = ctx2();
        // K1 * x1^2 (the complex monomial for an exponent vector (2,0))
        let k1 = var(&ctx, "K1");
        let x1sq = Polynomial::monomial(
            Arc::clone(&ctx),
            MonomialOrder::Grevlex,
            Monomial::var_pow(0, 2),
        );
        let prod = k1.mul(&x1sq);
        assert_eq!(prod.num_terms(), 1);
        assert_eq!(prod.to_string(), "x1^2*K1");
    }

    #[test]
    fn multiply_by_zero_absorbs() {
        let ctx = ctx2();
        let p = var(&ctx, "x1").add(&var(&ctx, "K2"));
        let zero = Polynomial::zero(Arc::clone(&ctx), MonomialOrder::Grevlex);
        assert!(p.mul(&zero).is_zero());
    }

    #[test]
    fn substitute_species_to_zero() {
        // K1*x1 - K2 with every species variable sent to 0 gives -K2.
        let ctx = ctx2();
        let p = var(&ctx, "K1").mul(&var(&ctx, "x1")).sub(&var(&ctx, "K2"));
        let zero = Polynomial::zero(Arc::clone(&ctx), MonomialOrder::Grevlex);
        let mut assign = BTreeMap::new();
        assign.insert("x1".to_string(), zero.clone());
        assign.insert("x2".to_string(), zero);
        let img = p
            .substitute(&assign, &ctx, &MonomialOrder::Grevlex)
            .unwrap();
        assert_eq!(img, var(&ctx, "K2").neg());
        assert_eq!(img.to_string(), "-K2");
    }

    #[test]
    fn substitute_empty_assignment_is_identity() {
        let ctx = ctx2();
        let p = var(&ctx, "x1").mul(&var(&ctx, "K3")).add(&var(&ctx, "x2"));
        let img = p
            .substitute(&BTreeMap::new(), &ctx, &MonomialOrder::Grevlex)
            .unwrap();
        assert_eq!(img, p);
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let a = VariableContext::standard(1, 1);
        let b = VariableContext::standard(2, 1);
        let pa = Polynomial::variable(Arc::clone(&a), MonomialOrder::Grevlex, 0);
        let pb = Polynomial::variable(Arc::clone(&b), MonomialOrder::Grevlex, 0);
        assert_eq!(pa.checked_add(&pb), Err(PolyError::ContextMismatch));
        assert_eq!(pa.checked_mul(&pb), Err(PolyError::ContextMismatch));
    }

    #[test]
    fn display_round_trip_shapes() {
        let ctx = ctx2();
        // grevlex puts K1*K2 above K3^2 and K2^2 above K1*K3
        let p = var(&ctx, "K1")
            .mul(&var(&ctx, "K2"))
            .sub(&var(&ctx, "K3").mul(&var(&ctx, "K3")));
        assert_eq!(p.to_string(), "K1*K2 - K3^2");
        let q = var(&ctx, "K1")
            .mul(&var(&ctx, "K3"))
            .sub(&var(&ctx, "K2").mul(&var(&ctx, "K2")));
        assert_eq!(q.to_string(), "-K2^2 + K1*K3");
        let c = Polynomial::constant(
            Arc::clone(&ctx),
            MonomialOrder::Grevlex,
            rat(3) / rat(4),
        );
        assert_eq!(c.to_string(), "3/4");
        let r = var(&ctx, "x1").scale(&rat(-2)).add(&c);
        assert_eq!(r.to_string(), "-2*x1 + 3/4");
    }

    #[test]
    fn zero_polynomial_prints_as_zero() {
        let ctx = ctx2();
        assert_eq!(
            Polynomial::zero(ctx, MonomialOrder::Grevlex).to_string(),
            "0"
        );
    }
}
