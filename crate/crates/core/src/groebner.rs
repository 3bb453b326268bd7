//! Buchberger's algorithm and the ideal operations built on it:
//! division with remainder, reduced Groebner bases, elimination,
//! saturation, equality, membership, and Krull dimension.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;

use crate::context::VariableContext;
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    SaturationByZero,
    UnitIdeal,
}

impl fmt::Display for GroebnerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroebnerError::SaturationByZero => write!(f, "cannot saturate by the zero polynomial"),
            GroebnerError::UnitIdeal => write!(f, "the unit ideal has no Krull dimension"),
        }
    }
}

impl std::error::Error for GroebnerError {}

/// Division with remainder: `f = sum(q_i * g_i) + r` where no term of
/// `r` is divisible by any leading monomial of `divisors`.
///
/// Deterministic: divisors are tried in list order and the leading term
/// of the running polynomial is always reduced first.
pub fn reduce(
    f: &Polynomial,
    divisors: &[Polynomial],
    order: &MonomialOrder,
) -> (Polynomial, Vec<Polynomial>) {
    let ctx = Arc::clone(f.context());
    let divisors: Vec<Polynomial> = divisors
        .iter()
        .map(|g| g.with_order(order.clone()))
        .collect();
    let mut quotients: Vec<Polynomial> = divisors
        .iter()
        .map(|_| Polynomial::zero(Arc::clone(&ctx), order.clone()))
        .collect();
    let mut p = f.with_order(order.clone());
    let mut remainder: Vec<(BigRational, Monomial)> = Vec::new();
    'outer: while let Some((c, m)) = p.leading_term() {
        let (c, m) = (c.clone(), m.clone());
        for (i, g) in divisors.iter().enumerate() {
            let (gc, gm) = match g.leading_term() {
                Some(t) => t,
                None => continue,
            };
            if let Some(t) = m.try_div(gm) {
                let q = &c / gc;
                quotients[i] = quotients[i].add(&Polynomial::from_terms(
                    Arc::clone(&ctx),
                    order.clone(),
                    vec![(q.clone(), t.clone())],
                ));
                p = p.sub(&g.mul_term(&q, &t));
                continue 'outer;
            }
        }
        remainder.push((c.clone(), m.clone()));
        p = p.sub(&Polynomial::from_terms(
            Arc::clone(&ctx),
            order.clone(),
            vec![(c, m)],
        ));
    }
    (
        Polynomial::from_terms(ctx, order.clone(), remainder),
        quotients,
    )
}

/// Normal form only: the remainder of `reduce`.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    reduce(f, divisors, order).0
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let (fc, fm) = f.leading_term().expect("nonzero");
    let (gc, gm) = g.leading_term().expect("nonzero");
    let lcm = fm.lcm(gm);
    let tf = lcm.try_div(fm).expect("lcm divisible");
    let tg = lcm.try_div(gm).expect("lcm divisible");
    let inv_f = BigRational::new(1.into(), 1.into()) / fc;
    let inv_g = BigRational::new(1.into(), 1.into()) / gc;
    let a = f.mul_term(&inv_f, &tf);
    let b = g.mul_term(&inv_g, &tg);
    let _ = order;
    a.sub(&b)
}

/// Reduced Groebner basis of the ideal generated by `gens` under
/// `order`: monic elements, no term of any element divisible by the
/// leading monomial of another, sorted ascending by leading monomial.
///
/// Pair selection takes the smallest lcm in the active order with ties
/// broken by generator indices; the coprime-lcm and chain criteria
/// prune the pair queue.
pub fn buchberger(
    ctx: &Arc<VariableContext>,
    gens: &[Polynomial],
    order: &MonomialOrder,
) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.with_order(order.clone()).monic())
        .collect();
    let _ = ctx;

    let mut pending: BTreeMap<(usize, usize), Monomial> = BTreeMap::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let lcm = basis[i]
                .leading_monomial()
                .unwrap()
                .lcm(basis[j].leading_monomial().unwrap());
            pending.insert((i, j), lcm);
        }
    }

    while !pending.is_empty() {
        let (&(i, j), _) = pending
            .iter()
            .min_by(|(ka, la), (kb, lb)| {
                order.compare(la, lb).then_with(|| ka.cmp(kb))
            })
            .expect("nonempty");
        let lcm = pending.remove(&(i, j)).expect("present");

        let lm_i = basis[i].leading_monomial().unwrap();
        let lm_j = basis[j].leading_monomial().unwrap();
        // Coprime leading monomials: the S-polynomial reduces to zero.
        if lm_i.is_coprime_with(lm_j) {
            continue;
        }
        // Chain criterion: some k divides the lcm and both mixed pairs
        // were already treated.
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&lcm)
                && !pending.contains_key(&key(i, k))
                && !pending.contains_key(&key(j, k))
        });
        if chain {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = normal_form(&s, &basis, order);
        if !r.is_zero() {
            let r = r.monic();
            let new = basis.len();
            for t in 0..new {
                let lcm = basis[t]
                    .leading_monomial()
                    .unwrap()
                    .lcm(r.leading_monomial().unwrap());
                pending.insert((t, new), lcm);
            }
            basis.push(r);
        }
    }

    interreduce(basis, order)
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Minimalizes the leading monomials, then replaces every element by its
/// normal form with respect to the others. Result is the unique reduced
/// basis, sorted ascending by leading monomial.
fn interreduce(basis: Vec<Polynomial>, order: &MonomialOrder) -> Vec<Polynomial> {
    let mut sorted = basis;
    sorted.sort_by(|a, b| cmp_by_lm(a, b, order));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in sorted {
        let lm = g.leading_monomial().expect("nonzero").clone();
        if !minimal
            .iter()
            .any(|h| h.leading_monomial().unwrap().divides(&lm))
        {
            minimal.push(g);
        }
    }
    // Leading monomials are now pairwise non-divisible, so reduction
    // keeps every leading term in place and one pass suffices.
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        minimal[i] = normal_form(&minimal[i], &others, order).monic();
    }
    minimal.sort_by(|a, b| cmp_by_lm(a, b, order));
    minimal
}

fn cmp_by_lm(a: &Polynomial, b: &Polynomial, order: &MonomialOrder) -> Ordering {
    match (a.leading_monomial(), b.leading_monomial()) {
        (Some(ma), Some(mb)) => order.compare(ma, mb),
        (None, None) => Ordering::Equal,
        (None, Some(_)) => Ordering::Less,
        (Some(_), None) => Ordering::Greater,
    }
}

/// Generators of `I` intersected with the subring on the `keep`
/// variables, as an ideal of that subring.
///
/// Computes a Groebner basis under a block order that puts the
/// eliminated variables on top and keeps grevlex inside each block, then
/// restricts the elements supported on `keep`.
pub fn eliminate(ideal: &Ideal, keep: &BTreeSet<usize>) -> Ideal {
    let ctx = ideal.context();
    let all: BTreeSet<usize> = (0..ctx.num_vars()).collect();
    let elim: BTreeSet<usize> = all.difference(keep).copied().collect();
    let order = MonomialOrder::elimination(elim, keep.clone());
    let gb = ideal.groebner_basis(&order);
    let (sub_ctx, map) = ctx.restrict(keep);
    let kept: Vec<Polynomial> = gb
        .iter()
        .filter(|g| g.support().is_subset(keep))
        .map(|g| {
            g.remap(&map, &sub_ctx, &MonomialOrder::Grevlex)
                .expect("kept polynomials are supported on keep")
        })
        .collect();
    // Restriction preserves relative variable order, so the filtered
    // basis is the reduced grevlex basis of the intersection ideal.
    Ideal::with_cached_gb(sub_ctx, kept, MonomialOrder::Grevlex)
}

/// The saturation `I : f^infinity`, computed Rabinowitsch-style: adjoin
/// a fresh top-block variable y, add the generator y*f - 1, eliminate y.
pub fn saturate(ideal: &Ideal, f: &Polynomial) -> Result<Ideal, GroebnerError> {
    if f.is_zero() {
        return Err(GroebnerError::SaturationByZero);
    }
    let ctx = ideal.context();
    let y_name = ctx.fresh_name("y");
    let (big_ctx, y_idx) = ctx.with_aux(&[y_name]);
    let order = MonomialOrder::Grevlex;
    let mut gens: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|g| g.embed(&big_ctx, &order).expect("extension keeps names"))
        .collect();
    let y = Polynomial::variable(Arc::clone(&big_ctx), order.clone(), y_idx[0]);
    let f_up = f.embed(&big_ctx, &order).expect("extension keeps names");
    gens.push(y.mul(&f_up).sub(&Polynomial::one(big_ctx.clone(), order)));
    let extended = Ideal::new(big_ctx, gens);
    let keep: BTreeSet<usize> = (0..ctx.num_vars()).collect();
    Ok(eliminate(&extended, &keep))
}

/// Ideal equality via reduced Groebner bases under one fixed order.
pub fn ideal_equal(a: &Ideal, b: &Ideal) -> bool {
    assert!(a.same_context(b), "ideal_equal across different contexts");
    let order = MonomialOrder::Grevlex;
    let ga = a.groebner_basis(&order);
    let gb = b.groebner_basis(&order);
    *ga == *gb
}

/// Membership via reduction against the reduced basis.
pub fn ideal_member(f: &Polynomial, ideal: &Ideal) -> bool {
    let order = MonomialOrder::Grevlex;
    let gb = ideal.groebner_basis(&order);
    normal_form(f, &gb, &order).is_zero()
}

/// Krull dimension of the quotient ring: the largest number of variables
/// that are independent modulo the initial ideal, plus every variable
/// that appears in no leading monomial. Exhaustive over subsets of the
/// variables that do appear (small at this toolkit's scale).
pub fn dimension(ideal: &Ideal) -> Result<usize, GroebnerError> {
    let order = MonomialOrder::Grevlex;
    let gb = ideal.groebner_basis(&order);
    let lms: Vec<Monomial> = gb
        .iter()
        .map(|g| g.leading_monomial().expect("basis has no zeros").clone())
        .collect();
    if lms.iter().any(|m| m.is_one()) {
        return Err(GroebnerError::UnitIdeal);
    }
    let mut occurring: BTreeSet<usize> = BTreeSet::new();
    for m in &lms {
        occurring.extend(m.support());
    }
    let occurring: Vec<usize> = occurring.into_iter().collect();
    let free = ideal.context().num_vars() - occurring.len();
    let mut best = 0usize;
    for mask in 0u64..(1u64 << occurring.len()) {
        let subset: BTreeSet<usize> = occurring
            .iter()
            .enumerate()
            .filter(|(bit, _)| mask & (1 << bit) != 0)
            .map(|(_, &v)| v)
            .collect();
        if subset.len() <= best {
            continue;
        }
        if !lms.iter().any(|m| m.supported_on(&subset)) {
            best = subset.len();
        }
    }
    Ok(free + best)
}
