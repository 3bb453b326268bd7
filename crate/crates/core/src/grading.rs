//! The weighted multigrading attached to a partitioned vertex set:
//! species variables carry positive weights, each vertex variable
//! carries the indicator of its block.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::context::{Block, VariableContext};
use crate::monomial::Monomial;
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GradingError {
    AuxiliaryVariable(String),
    WeightCount { expected: usize, got: usize },
    ComponentCount { expected: usize, got: usize },
}

impl fmt::Display for GradingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GradingError::AuxiliaryVariable(n) => {
                write!(f, "monomial contains auxiliary variable `{}`", n)
            }
            GradingError::WeightCount { expected, got } => {
                write!(f, "expected {} species weights, got {}", expected, got)
            }
            GradingError::ComponentCount { expected, got } => {
                write!(f, "expected {} component entries, got {}", expected, got)
            }
        }
    }
}

impl std::error::Error for GradingError {}

/// Degree value of the multigrading: a rational weight for the species
/// part and one counter per block for the vertex part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiDegree {
    pub weight: BigRational,
    pub components: Vec<u64>,
}

impl MultiDegree {
    fn zero(num_components: usize) -> Self {
        MultiDegree {
            weight: BigRational::zero(),
            components: vec![0; num_components],
        }
    }

    fn add_assign(&mut self, other: &MultiDegree) {
        self.weight += &other.weight;
        for (a, b) in self.components.iter_mut().zip(&other.components) {
            *a += b;
        }
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, [", self.weight)?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, "])")
    }
}

/// mdeg(x_j) = (q_j, 0), mdeg(K_i) = (0, e_k) for i in block k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigrading {
    x_weights: Vec<BigRational>,
    component_of_k: Vec<usize>,
    num_components: usize,
}

impl Multigrading {
    pub fn new(
        ctx: &VariableContext,
        x_weights: Vec<BigRational>,
        component_of_k: Vec<usize>,
    ) -> Result<Self, GradingError> {
        if x_weights.len() != ctx.x_count() {
            return Err(GradingError::WeightCount {
                expected: ctx.x_count(),
                got: x_weights.len(),
            });
        }
        if component_of_k.len() != ctx.k_count() {
            return Err(GradingError::ComponentCount {
                expected: ctx.k_count(),
                got: component_of_k.len(),
            });
        }
        let num_components = component_of_k.iter().map(|k| k + 1).max().unwrap_or(0);
        Ok(Multigrading {
            x_weights,
            component_of_k,
            num_components,
        })
    }

    pub fn num_components(&self) -> usize {
        self.num_components
    }

    /// Additive degree of a monomial; auxiliary variables are not graded
    /// and are rejected.
    pub fn monomial_degree(
        &self,
        ctx: &VariableContext,
        m: &Monomial,
    ) -> Result<MultiDegree, GradingError> {
        let mut deg = MultiDegree::zero(self.num_components);
        let s = ctx.x_count();
        for (idx, e) in m.iter() {
            match ctx.block(idx) {
                Block::X => {
                    deg.weight +=
                        &self.x_weights[idx] * BigRational::from_integer(e.into());
                }
                Block::K => {
                    deg.components[self.component_of_k[idx - s]] += e as u64;
                }
                Block::Aux => {
                    return Err(GradingError::AuxiliaryVariable(ctx.name(idx).to_string()))
                }
            }
        }
        Ok(deg)
    }

    /// Sum of the degrees of two monomials equals the degree of the
    /// product; exposed for the additivity property tests.
    pub fn sum(&self, a: &MultiDegree, b: &MultiDegree) -> MultiDegree {
        let mut out = a.clone();
        out.add_assign(b);
        out
    }

    /// True iff all terms of `p` share one multidegree. The zero
    /// polynomial is homogeneous.
    pub fn is_homogeneous(&self, p: &Polynomial) -> Result<bool, GradingError> {
        let ctx = p.context();
        let mut first: Option<MultiDegree> = None;
        for (_, m) in p.terms() {
            let d = self.monomial_degree(ctx, m)?;
            match &first {
                None => first = Some(d),
                Some(f) => {
                    if *f != d {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::MonomialOrder;
    use num_bigint::BigInt;
    use std::sync::Arc;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    /// Grading of the two-species, one-block triangle ring with q = (1,1).
    fn triangle_grading(ctx: &VariableContext) -> Multigrading {
        Multigrading::new(ctx, vec![rat(1), rat(1)], vec![0, 0, 0]).unwrap()
    }

    #[test]
    fn vertex_times_species_monomial_degree() {
        let ctx = VariableContext::standard(2, 3);
        let g = triangle_grading(&ctx);
        // K1 * x1 * x2 has weight 2 and sits in block 1
        let m = Monomial::from_pairs([(0, 1), (1, 1), (2, 1)]);
        let d = g.monomial_degree(&ctx, &m).unwrap();
        assert_eq!(d.weight, rat(2));
        assert_eq!(d.components, vec![1]);
    }

    #[test]
    fn unit_monomial_has_zero_degree() {
        let ctx = VariableContext::standard(2, 3);
        let g = triangle_grading(&ctx);
        let d = g.monomial_degree(&ctx, &Monomial::one()).unwrap();
        assert_eq!(d.weight, BigRational::zero());
        assert_eq!(d.components, vec![0]);
    }

    #[test]
    fn pure_species_monomial_sums_weights() {
        let ctx = VariableContext::standard(2, 3);
        let g = triangle_grading(&ctx);
        // x1 * x2^2
        let m = Monomial::from_pairs([(0, 1), (1, 2)]);
        let d = g.monomial_degree(&ctx, &m).unwrap();
        assert_eq!(d.weight, rat(3));
        assert_eq!(d.components, vec![0]);
    }

    #[test]
    fn homogeneity_of_block_binomial() {
        let ctx = VariableContext::standard(2, 3);
        let g = triangle_grading(&ctx);
        let order = MonomialOrder::Grevlex;
        // K1*x1*x2 - K2*x1^2 is homogeneous of degree (2, e1)
        let p = Polynomial::from_terms(
            Arc::clone(&ctx),
            order.clone(),
            vec![
                (rat(1), Monomial::from_pairs([(2, 1), (0, 1), (1, 1)])),
                (rat(-1), Monomial::from_pairs([(3, 1), (0, 2)])),
            ],
        );
        assert!(g.is_homogeneous(&p).unwrap());
        // x1 + 1 is not
        let q = Polynomial::from_terms(
            Arc::clone(&ctx),
            order.clone(),
            vec![(rat(1), Monomial::var(0)), (rat(1), Monomial::one())],
        );
        assert!(!g.is_homogeneous(&q).unwrap());
        // zero polynomial is vacuously homogeneous
        let z = Polynomial::zero(Arc::clone(&ctx), order);
        assert!(g.is_homogeneous(&z).unwrap());
    }

    #[test]
    fn auxiliary_variables_are_rejected() {
        let base = VariableContext::standard(1, 1);
        let (ctx, y) = base.with_aux(&["y".to_string()]);
        let g = Multigrading::new(&ctx, vec![rat(1)], vec![0]).unwrap();
        let m = Monomial::var(y[0]);
        assert!(matches!(
            g.monomial_degree(&ctx, &m),
            Err(GradingError::AuxiliaryVariable(_))
        ));
    }
}
