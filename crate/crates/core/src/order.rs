//! Monomial orders: lex, grevlex, weighted grevlex, and block
//! (elimination) orders built from them.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::context::VariableContext;
use crate::monomial::Monomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderError {
    WeightCount { expected: usize, got: usize },
    NonPositiveWeight(usize),
    BlocksNotAPartition,
}

impl fmt::Display for OrderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderError::WeightCount { expected, got } => {
                write!(f, "expected {} weights, got {}", expected, got)
            }
            OrderError::NonPositiveWeight(i) => {
                write!(f, "weight for variable {} is not positive", i)
            }
            OrderError::BlocksNotAPartition => {
                write!(f, "block variable sets do not partition the context")
            }
        }
    }
}

impl std::error::Error for OrderError {}

/// A total, multiplicative monomial order with 1 minimal.
///
/// Variables with smaller global index are the larger variables, so
/// `Lex` gives x1 > x2 > ... > K1 > ... and `Grevlex` breaks degree
/// ties against the smallest variable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum MonomialOrder {
    Lex,
    Grevlex,
    /// Grevlex refined by a positive weight per variable index; ties in
    /// weighted degree fall back to plain grevlex.
    WeightedGrevlex(Vec<BigRational>),
    /// Compares block by block in the listed sequence; each entry is the
    /// set of variable indices in the block and the order used inside it.
    Block(Vec<(BTreeSet<usize>, MonomialOrder)>),
}

impl MonomialOrder {
    /// Block order that eliminates `top`: anything involving a `top`
    /// variable beats anything supported on `bottom` alone.
    pub fn elimination(top: BTreeSet<usize>, bottom: BTreeSet<usize>) -> MonomialOrder {
        if top.is_empty() {
            return MonomialOrder::Grevlex;
        }
        MonomialOrder::Block(vec![
            (top, MonomialOrder::Grevlex),
            (bottom, MonomialOrder::Grevlex),
        ])
    }

    /// The block order used for the ideals attached to a network:
    /// x-block above K-block, grevlex inside each.
    pub fn x_over_k(ctx: &VariableContext) -> MonomialOrder {
        MonomialOrder::elimination(
            ctx.x_indices().into_iter().collect(),
            ctx.k_indices().into_iter().collect(),
        )
    }

    /// Checks that the order is well-formed over `ctx`.
    pub fn validate(&self, ctx: &VariableContext) -> Result<(), OrderError> {
        match self {
            MonomialOrder::Lex | MonomialOrder::Grevlex => Ok(()),
            MonomialOrder::WeightedGrevlex(w) => {
                if w.len() != ctx.num_vars() {
                    return Err(OrderError::WeightCount {
                        expected: ctx.num_vars(),
                        got: w.len(),
                    });
                }
                for (i, wi) in w.iter().enumerate() {
                    if *wi <= BigRational::zero() {
                        return Err(OrderError::NonPositiveWeight(i));
                    }
                }
                Ok(())
            }
            MonomialOrder::Block(blocks) => {
                let mut seen = BTreeSet::new();
                for (vars, inner) in blocks {
                    for &v in vars {
                        if !seen.insert(v) {
                            return Err(OrderError::BlocksNotAPartition);
                        }
                    }
                    inner.validate(ctx)?;
                }
                if seen != (0..ctx.num_vars()).collect::<BTreeSet<_>>() {
                    return Err(OrderError::BlocksNotAPartition);
                }
                Ok(())
            }
        }
    }

    /// Compares two monomials over the same context.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => lex_cmp(a, b),
            MonomialOrder::Grevlex => grevlex_cmp(a, b),
            MonomialOrder::WeightedGrevlex(w) => {
                let wa = weighted_degree(a, w);
                let wb = weighted_degree(b, w);
                wa.cmp(&wb).then_with(|| grevlex_cmp(a, b))
            }
            MonomialOrder::Block(blocks) => {
                for (vars, inner) in blocks {
                    let ra = a.restricted(vars);
                    let rb = b.restricted(vars);
                    let c = inner.compare(&ra, &rb);
                    if c != Ordering::Equal {
                        return c;
                    }
                }
                Ordering::Equal
            }
        }
    }
}

fn weighted_degree(m: &Monomial, w: &[BigRational]) -> BigRational {
    let mut d = BigRational::zero();
    for (i, e) in m.iter() {
        d += &w[i] * BigRational::from_integer(e.into());
    }
    d
}

/// Merged iteration over the union of two supports, ascending by index.
fn merged<'a>(
    a: &'a Monomial,
    b: &'a Monomial,
) -> impl Iterator<Item = (usize, u32, u32)> + 'a {
    let support: BTreeSet<usize> = a.support().union(&b.support()).copied().collect();
    support
        .into_iter()
        .map(move |i| (i, a.exponent(i), b.exponent(i)))
}

fn lex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    for (_, ea, eb) in merged(a, b) {
        match ea.cmp(&eb) {
            Ordering::Equal => continue,
            c => return c,
        }
    }
    Ordering::Equal
}

fn grevlex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    match a.total_degree().cmp(&b.total_degree()) {
        Ordering::Equal => {}
        c => return c,
    }
    // Equal degree: the monomial with the smaller exponent on the least
    // variable is the larger one.
    let diffs: Vec<(usize, u32, u32)> = merged(a, b).collect();
    for &(_, ea, eb) in diffs.iter().rev() {
        match ea.cmp(&eb) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}
