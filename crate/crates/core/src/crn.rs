//! The ideals and matrices attached to a reaction network.
//!
//! For a network with partition A_1, ..., A_l and complex monomials
//! x^{v_i}, the presentation map sends K_i to x^{v_i} * t_k for i in
//! block k. Its kernel — the defining ideal of the multi-Rees algebra of
//! the blocks' monomial ideals — is obtained from the pairwise binomials
//! K_i x^{v_j} - K_j x^{v_i} by saturating at the product of all species
//! variables. Everything else here (moduli ideal, Cayley matrices,
//! special fiber) derives from that ideal.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::context::VariableContext;
use crate::grading::Multigrading;
use crate::groebner::{eliminate, ideal_equal, ideal_member, saturate};
use crate::ideal::Ideal;
use crate::matrix::IntegerMatrix;
use crate::monomial::Monomial;
use crate::network::Network;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::weights::{nullspace_basis, primitive_integer_vector, strict_positive_witness};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrnError {
    NotWeaklyReversible,
}

impl fmt::Display for CrnError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CrnError::NotWeaklyReversible => write!(
                f,
                "network is not weakly reversible; pass --as-partition to use \
                 the complete-digraph semantics of its partition"
            ),
        }
    }
}

impl std::error::Error for CrnError {}

/// The ring K[x, K] for a network: one species variable per species,
/// one vertex variable per complex.
pub fn base_context(net: &Network) -> Arc<VariableContext> {
    VariableContext::standard(net.num_species(), net.num_vertices())
}

/// K[x, K, t]: the base ring extended by one auxiliary t per component.
pub fn rees_context(net: &Network) -> Arc<VariableContext> {
    let names: Vec<String> = (1..=net.num_components())
        .map(|k| format!("t{}", k))
        .collect();
    base_context(net).with_aux(&names).0
}

/// The monomial x^{v_i} of a vertex, over a context whose x-block leads.
fn complex_monomial(net: &Network, vertex: usize) -> Monomial {
    Monomial::from_exponents(&net.vertices()[vertex])
}

/// Presentation data of the multi-Rees algebra: the image of each K_i
/// and the (deliberately non-minimal) generator lists of the monomial
/// ideals I_k.
#[derive(Debug, Clone)]
pub struct ReesPresentation {
    pub context: Arc<VariableContext>,
    /// Image of K_i under the presentation map, indexed by vertex.
    pub phi_images: Vec<Polynomial>,
    /// I_k generators: exactly the complex monomials of block k.
    pub monomial_ideals: Vec<Vec<Monomial>>,
}

pub fn rees_presentation(net: &Network) -> ReesPresentation {
    let ctx = rees_context(net);
    let order = MonomialOrder::Grevlex;
    let s = net.num_species();
    let n = net.num_vertices();
    let component = net.component_of();
    let phi_images = (0..n)
        .map(|i| {
            let t_idx = s + n + component[i];
            let m = complex_monomial(net, i).mul(&Monomial::var(t_idx));
            Polynomial::monomial(Arc::clone(&ctx), order.clone(), m)
        })
        .collect();
    let monomial_ideals = net
        .partition()
        .iter()
        .map(|block| block.iter().map(|&i| complex_monomial(net, i)).collect())
        .collect();
    ReesPresentation {
        context: ctx,
        phi_images,
        monomial_ideals,
    }
}

/// The presentation map as a substitution: K_i -> x^{v_i} * t_k.
pub fn phi_assignment(net: &Network) -> (BTreeMap<String, Polynomial>, Arc<VariableContext>) {
    let pres = rees_presentation(net);
    let base = base_context(net);
    let mut map = BTreeMap::new();
    for i in 0..net.num_vertices() {
        let name = base.name(base.k_var(i)).to_string();
        map.insert(name, pres.phi_images[i].clone());
    }
    (map, pres.context)
}

/// R-algebra generators of the multi-Rees algebra, one per column of the
/// standard Cayley matrix (block by block).
pub fn rees_generators(net: &Network) -> Vec<Polynomial> {
    let pres = rees_presentation(net);
    let (_, perm) = net.y_matrix();
    perm.iter().map(|&v| pres.phi_images[v].clone()).collect()
}

/// The pairwise binomials K_i x^{v_j} - K_j x^{v_i} over all i < j in a
/// common block; blocks of size one contribute nothing.
pub fn binomial_generators(net: &Network) -> Ideal {
    let ctx = base_context(net);
    let order = MonomialOrder::x_over_k(&ctx);
    let mut gens = Vec::new();
    for block in net.partition() {
        for a in 0..block.len() {
            for b in a + 1..block.len() {
                let (i, j) = (block[a], block[b]);
                let lead = Monomial::var(ctx.k_var(i)).mul(&complex_monomial(net, j));
                let trail = Monomial::var(ctx.k_var(j)).mul(&complex_monomial(net, i));
                gens.push(Polynomial::from_terms(
                    Arc::clone(&ctx),
                    order.clone(),
                    vec![
                        (BigRational::from_integer(1.into()), lead),
                        (BigRational::from_integer((-1).into()), trail),
                    ],
                ));
            }
        }
    }
    Ideal::new(ctx, gens)
}

/// Product of all species variables (1 when there are none).
fn species_product(ctx: &Arc<VariableContext>, indices: &[usize]) -> Polynomial {
    let m = Monomial::from_pairs(indices.iter().map(|&i| (i, 1)));
    Polynomial::monomial(Arc::clone(ctx), MonomialOrder::Grevlex, m)
}

/// The toric ideal of the network: the saturation of the pairwise
/// binomials at the product of all species variables, presented by its
/// reduced basis under the block order x over K.
///
/// Defined by the paper's construction only for weakly reversible
/// networks; `as_partition` opts into the partition semantics (complete
/// digraph on every block), which ignores the edge directions.
pub fn toric_ideal(net: &Network, as_partition: bool) -> Result<Ideal, CrnError> {
    if !as_partition && !net.is_weakly_reversible() {
        return Err(CrnError::NotWeaklyReversible);
    }
    let tprime = binomial_generators(net);
    let ctx = Arc::clone(tprime.context());
    let f = species_product(&ctx, &ctx.x_indices());
    let saturated = saturate(&tprime, &f).expect("species product is nonzero");
    let order = MonomialOrder::x_over_k(&ctx);
    let gb = saturated.groebner_basis(&order).as_ref().clone();
    Ok(Ideal::with_cached_gb(ctx, gb, order))
}

/// The moduli ideal: the toric ideal intersected with K[K].
pub fn moduli_ideal_from(tg: &Ideal) -> Ideal {
    let keep: BTreeSet<usize> = tg.context().k_indices().into_iter().collect();
    eliminate(tg, &keep)
}

pub fn moduli_ideal(net: &Network, as_partition: bool) -> Result<Ideal, CrnError> {
    Ok(moduli_ideal_from(&toric_ideal(net, as_partition)?))
}

// ---------------------------------------------------------------------------
// Cayley matrices
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CayleyVariant {
    /// Y with one indicator row per component appended.
    Standard,
    /// The identity on the species prepended (columns for x_1..x_s).
    Modified,
    /// Minus the identity prepended; kept for the regression on the
    /// sign discrepancy this produces.
    Extended,
}

impl CayleyVariant {
    pub fn parse(name: &str) -> Option<CayleyVariant> {
        match name {
            "standard" => Some(CayleyVariant::Standard),
            "modified" => Some(CayleyVariant::Modified),
            "extended" => Some(CayleyVariant::Extended),
            _ => None,
        }
    }
}

/// The Cayley matrix of the network: columns are renumbered so blocks
/// are contiguous (the `y_matrix` permutation).
pub fn cayley_matrix(net: &Network, variant: CayleyVariant) -> IntegerMatrix {
    let (y, perm) = net.y_matrix();
    let n = perm.len();
    let l = net.num_components();
    let mut indicator = IntegerMatrix::zero(l, n);
    let mut offset = 0usize;
    for (k, block) in net.partition().iter().enumerate() {
        for c in offset..offset + block.len() {
            indicator.set(k, c, BigInt::from(1));
        }
        offset += block.len();
    }
    let standard = y.stack(&indicator);
    match variant {
        CayleyVariant::Standard => standard,
        CayleyVariant::Modified | CayleyVariant::Extended => {
            let s = net.num_species();
            let mut eye = IntegerMatrix::identity(s);
            if variant == CayleyVariant::Extended {
                eye = eye.negated();
            }
            let eye_block = eye.stack(&IntegerMatrix::zero(l, s));
            eye_block.augment(&standard)
        }
    }
}

/// The toric ideal of an integer matrix: the kernel of the monomial map
/// sending the variable of column j to the product of row variables
/// raised to that column.
///
/// Columns are labelled by `column_vars` (indices into `target`). Fresh
/// row variables are adjoined and eliminated; when the matrix has
/// negative entries a Laurent witness w with w * (product of rows) - 1
/// makes the row variables invertible first.
pub fn toric_ideal_of_matrix(
    matrix: &IntegerMatrix,
    column_vars: &[usize],
    target: &Arc<VariableContext>,
) -> Ideal {
    assert_eq!(
        matrix.cols(),
        column_vars.len(),
        "one column variable per matrix column"
    );
    let rows = matrix.rows();
    let mut names: Vec<String> = Vec::with_capacity(rows + 1);
    let mut taken: BTreeSet<String> = target.names().map(str::to_string).collect();
    for r in 0..rows {
        let mut name = format!("r{}", r + 1);
        while taken.contains(&name) {
            name.insert(0, 'r');
        }
        taken.insert(name.clone());
        names.push(name);
    }
    let needs_witness = matrix.has_negative_entry();
    if needs_witness {
        let mut name = "w".to_string();
        while taken.contains(&name) {
            name.insert(0, 'w');
        }
        names.push(name);
    }
    let (work_ctx, new_idx) = target.with_aux(&names);
    let row_idx = &new_idx[..rows];
    let order = MonomialOrder::elimination(
        new_idx.iter().copied().collect(),
        (0..target.num_vars()).collect(),
    );

    let mut gens: Vec<Polynomial> = Vec::new();
    for (c, &col_var) in column_vars.iter().enumerate() {
        let mut positive = Monomial::one();
        let mut negative = Monomial::var(col_var);
        for r in 0..rows {
            let e = matrix.get(r, c);
            if e.is_zero() {
                continue;
            }
            let mag = u32::try_from(e.abs().clone()).expect("exponent fits in u32");
            if e.is_positive() {
                positive = positive.mul(&Monomial::var_pow(row_idx[r], mag));
            } else {
                negative = negative.mul(&Monomial::var_pow(row_idx[r], mag));
            }
        }
        gens.push(Polynomial::from_terms(
            Arc::clone(&work_ctx),
            order.clone(),
            vec![
                (BigRational::from_integer(1.into()), negative),
                (BigRational::from_integer((-1).into()), positive),
            ],
        ));
    }
    if needs_witness {
        let w = new_idx[rows];
        let all_rows = Monomial::from_pairs(row_idx.iter().map(|&i| (i, 1)))
            .mul(&Monomial::var(w));
        gens.push(Polynomial::from_terms(
            Arc::clone(&work_ctx),
            order.clone(),
            vec![
                (BigRational::from_integer(1.into()), all_rows),
                (BigRational::from_integer((-1).into()), Monomial::one()),
            ],
        ));
    }
    let joint = Ideal::new(work_ctx, gens);
    eliminate(&joint, &(0..target.num_vars()).collect())
}

/// The toric ideal read off a Cayley matrix of the network: over K[K]
/// for the standard variant, over K[x, K] for modified and extended.
pub fn cayley_toric_ideal(net: &Network, variant: CayleyVariant) -> Ideal {
    let base = base_context(net);
    let matrix = cayley_matrix(net, variant);
    let (_, perm) = net.y_matrix();
    match variant {
        CayleyVariant::Standard => {
            let keep: BTreeSet<usize> = base.k_indices().into_iter().collect();
            let (kctx, _) = base.restrict(&keep);
            let column_vars: Vec<usize> = perm.clone();
            toric_ideal_of_matrix(&matrix, &column_vars, &kctx)
        }
        CayleyVariant::Modified | CayleyVariant::Extended => {
            let s = net.num_species();
            let mut column_vars: Vec<usize> = (0..s).collect();
            column_vars.extend(perm.iter().map(|&v| base.k_var(v)));
            toric_ideal_of_matrix(&matrix, &column_vars, &base)
        }
    }
}

// ---------------------------------------------------------------------------
// Kernel soundness, weights, fiber
// ---------------------------------------------------------------------------

/// Verifies that the computed toric ideal sits inside the kernel of the
/// presentation map and contains the pairwise binomials: every basis
/// element maps to zero under K_i -> x^{v_i} t_k, and every pairwise
/// binomial is a member.
pub fn kernel_soundness_check(net: &Network, tg: &Ideal) -> bool {
    let (assignment, rees_ctx) = phi_assignment(net);
    let order = MonomialOrder::Grevlex;
    let gb = tg.groebner_basis(&order);
    for g in gb.iter() {
        match g.substitute(&assignment, &rees_ctx, &order) {
            Ok(image) => {
                if !image.is_zero() {
                    return false;
                }
            }
            Err(_) => return false,
        }
    }
    binomial_generators(net)
        .generators()
        .iter()
        .all(|g| ideal_member(g, tg))
}

/// A positive integer weight vector for the species together with the
/// per-block weighted degrees it induces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveWeights {
    pub q: Vec<BigInt>,
    pub block_degrees: Vec<BigInt>,
}

/// Searches for positive species weights making all complex monomials of
/// each block share one weighted degree: solves (v_i - v_j) q = 0 within
/// blocks and finds a strictly positive solution by exact
/// Fourier-Motzkin elimination, normalized to a primitive integer
/// vector.
pub fn find_positive_weights(net: &Network) -> Option<PositiveWeights> {
    let s = net.num_species();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for block in net.partition() {
        let first = &net.vertices()[block[0]];
        for &other in &block[1..] {
            let v = &net.vertices()[other];
            rows.push(
                (0..s)
                    .map(|j| BigRational::from_integer(BigInt::from(first[j]) - BigInt::from(v[j])))
                    .collect(),
            );
        }
    }
    let basis = nullspace_basis(&rows, s);
    let d = basis.len();
    // q_j > 0 expressed in the nullspace coordinates
    let constraints: Vec<Vec<BigRational>> = (0..s)
        .map(|j| (0..d).map(|b| basis[b][j].clone()).collect())
        .collect();
    let lambda = strict_positive_witness(&constraints, d)?;
    let q_rat: Vec<BigRational> = (0..s)
        .map(|j| {
            (0..d)
                .map(|b| &basis[b][j] * &lambda[b])
                .fold(BigRational::zero(), |acc, v| acc + v)
        })
        .collect();
    let q = primitive_integer_vector(&q_rat);
    let block_degrees = net
        .partition()
        .iter()
        .map(|block| {
            let v = &net.vertices()[block[0]];
            (0..s).map(|j| &q[j] * BigInt::from(v[j])).sum()
        })
        .collect();
    Some(PositiveWeights { q, block_degrees })
}

/// The multigrading induced by species weights q: mdeg(x_j) = (q_j, 0),
/// mdeg(K_i) = (0, e_k) for i in block k.
pub fn multigrading(net: &Network, q: &[BigInt]) -> Multigrading {
    let ctx = base_context(net);
    let weights = q
        .iter()
        .map(|v| BigRational::from_integer(v.clone()))
        .collect();
    Multigrading::new(&ctx, weights, net.component_of()).expect("network dimensions match")
}

/// True iff every basis element of the toric ideal is homogeneous under
/// the grading induced by the weights.
pub fn homogeneity_check(net: &Network, tg: &Ideal, q: &[BigInt]) -> bool {
    let grading = multigrading(net, q);
    tg.groebner_basis(&MonomialOrder::Grevlex)
        .iter()
        .all(|g| grading.is_homogeneous(g).unwrap_or(false))
}

/// The special fiber of the multi-Rees algebra, presented in K[K].
#[derive(Debug, Clone)]
pub struct FiberResult {
    pub fiber_ideal: Ideal,
    /// Whether positive weights exist, in which case the fiber ideal
    /// coincides with the moduli ideal.
    pub homogeneous_case: bool,
    pub weights: Option<PositiveWeights>,
}

/// Image of the toric ideal under x -> 0: the defining ideal of the
/// special fiber in K[K].
pub fn special_fiber(net: &Network, tg: &Ideal) -> FiberResult {
    let ctx = tg.context();
    let order = MonomialOrder::Grevlex;
    let zero = Polynomial::zero(Arc::clone(ctx), order.clone());
    let assignment: BTreeMap<String, Polynomial> = ctx
        .x_indices()
        .into_iter()
        .map(|i| (ctx.name(i).to_string(), zero.clone()))
        .collect();
    let keep: BTreeSet<usize> = ctx.k_indices().into_iter().collect();
    let (kctx, map) = ctx.restrict(&keep);
    let images: Vec<Polynomial> = tg
        .groebner_basis(&order)
        .iter()
        .map(|g| {
            g.substitute(&assignment, ctx, &order)
                .expect("x -> 0 stays in the ring")
        })
        .filter(|p| !p.is_zero())
        .map(|p| {
            p.remap(&map, &kctx, &order)
                .expect("images are supported on the K block")
        })
        .collect();
    let fiber_ideal = Ideal::new(kctx, images);
    let weights = find_positive_weights(net);
    FiberResult {
        fiber_ideal,
        homogeneous_case: weights.is_some(),
        weights,
    }
}

/// Computes the toric ideal two ways — saturating each component at its
/// own species product and then the sum at the full product, versus
/// saturating the pairwise binomials directly — and compares.
pub fn partition_equivalence_check(net: &Network) -> Result<bool, CrnError> {
    if !net.is_weakly_reversible() {
        return Err(CrnError::NotWeaklyReversible);
    }
    let direct = toric_ideal(net, false)?;
    let ctx = Arc::clone(direct.context());
    let order = MonomialOrder::x_over_k(&ctx);

    let mut summed: Vec<Polynomial> = Vec::new();
    for block in net.partition() {
        let mut gens = Vec::new();
        for a in 0..block.len() {
            for b in a + 1..block.len() {
                let (i, j) = (block[a], block[b]);
                let lead = Monomial::var(ctx.k_var(i)).mul(&complex_monomial(net, j));
                let trail = Monomial::var(ctx.k_var(j)).mul(&complex_monomial(net, i));
                gens.push(Polynomial::from_terms(
                    Arc::clone(&ctx),
                    order.clone(),
                    vec![
                        (BigRational::from_integer(1.into()), lead),
                        (BigRational::from_integer((-1).into()), trail),
                    ],
                ));
            }
        }
        // species appearing in this component
        let appearing: Vec<usize> = ctx
            .x_indices()
            .into_iter()
            .filter(|&j| block.iter().any(|&i| net.vertices()[i][j] > 0))
            .collect();
        let block_ideal = Ideal::new(Arc::clone(&ctx), gens);
        let product = species_product(&ctx, &appearing);
        let saturated = saturate(&block_ideal, &product).expect("nonzero product");
        summed.extend(saturated.generators().iter().cloned());
    }
    let sum_ideal = Ideal::new(Arc::clone(&ctx), summed);
    let full_product = species_product(&ctx, &ctx.x_indices());
    let via_components = saturate(&sum_ideal, &full_product).expect("nonzero product");
    Ok(ideal_equal(&via_components, &direct))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::parse_network;
    use crate::polytext::parse_polynomial;

    const EDELSTEIN: &str = "A <-> 2A k12, k21\nA + B <-> C k34, k43\nC <-> B k45, k54\n";
    const TRIANGLE: &str = "2A <-> A + B\nA + B <-> 2B\n2B <-> 2A\n";

    fn net(text: &str) -> Network {
        parse_network(text).unwrap()
    }

    fn ideal_from(srcs: &[&str], ctx: &Arc<VariableContext>) -> Ideal {
        Ideal::new(
            Arc::clone(ctx),
            srcs.iter()
                .map(|s| parse_polynomial(s, ctx, &MonomialOrder::Grevlex).unwrap())
                .collect(),
        )
    }

    #[test]
    fn triangle_binomial_generators() {
        let net = net(TRIANGLE);
        let tprime = binomial_generators(&net);
        let ctx = Arc::clone(tprime.context());
        let expected = ideal_from(
            &[
                "K1*x1*x2 - K2*x1^2",
                "K1*x2^2 - K3*x1^2",
                "K2*x2^2 - K3*x1*x2",
            ],
            &ctx,
        );
        assert_eq!(tprime.generators().len(), 3);
        assert!(ideal_equal(&tprime, &expected));
    }

    #[test]
    fn edelstein_first_block_binomial() {
        let net = net(EDELSTEIN);
        let tprime = binomial_generators(&net);
        let ctx = Arc::clone(tprime.context());
        let gen = parse_polynomial("K1*x1^2 - K2*x1", &ctx, &MonomialOrder::Grevlex).unwrap();
        assert!(tprime.generators().contains(&gen));
        assert_eq!(tprime.generators().len(), 1 + 3);
    }

    #[test]
    fn all_singleton_blocks_give_zero_ideal() {
        let net = net("A\nB\n");
        assert!(binomial_generators(&net).generators().is_empty());
        let tg = toric_ideal(&net, false).unwrap();
        assert!(tg.is_zero_ideal());
        let mg = moduli_ideal_from(&tg);
        assert!(mg.is_zero_ideal());
    }

    #[test]
    fn triangle_toric_ideal() {
        let net = net(TRIANGLE);
        let tg = toric_ideal(&net, false).unwrap();
        let ctx = Arc::clone(tg.context());
        let expected = ideal_from(
            &["K3*x1 - K2*x2", "K2*x1 - K1*x2", "K1*K3 - K2^2"],
            &ctx,
        );
        assert!(ideal_equal(&tg, &expected));
        for g in tg.generators() {
            assert!(g.is_binomial());
        }
    }

    #[test]
    fn edelstein_toric_ideal() {
        let net = net(EDELSTEIN);
        let tg = toric_ideal(&net, false).unwrap();
        let ctx = Arc::clone(tg.context());
        let expected = ideal_from(
            &[
                "K1*K3 - K2*K5",
                "K4*x2 - K5*x3",
                "K1*x1 - K2",
                "K5*x1 - K3",
            ],
            &ctx,
        );
        assert!(ideal_equal(&tg, &expected));
    }

    #[test]
    fn triangle_moduli_ideal() {
        let net = net(TRIANGLE);
        let mg = moduli_ideal(&net, false).unwrap();
        let expected = ideal_from(&["K1*K3 - K2^2"], mg.context());
        assert!(ideal_equal(&mg, &expected));
        assert_eq!(mg.context().num_vars(), 3);
    }

    #[test]
    fn edelstein_moduli_ideal() {
        let net = net(EDELSTEIN);
        let mg = moduli_ideal(&net, false).unwrap();
        let expected = ideal_from(&["K1*K3 - K2*K5"], mg.context());
        assert!(ideal_equal(&mg, &expected));
    }

    #[test]
    fn non_weakly_reversible_is_refused() {
        let net = net("A -> B\n");
        assert_eq!(
            toric_ideal(&net, false).unwrap_err(),
            CrnError::NotWeaklyReversible
        );
        // the partition semantics treat the block as a complete digraph
        let tg = toric_ideal(&net, true).unwrap();
        assert!(!tg.is_zero_ideal());
    }

    #[test]
    fn edelstein_cayley_matrices() {
        let net = net(EDELSTEIN);
        let standard = cayley_matrix(&net, CayleyVariant::Standard);
        assert_eq!(
            standard.to_string(),
            "1 2 1 0 0\n0 0 1 0 1\n0 0 0 1 0\n1 1 0 0 0\n0 0 1 1 1"
        );
        let modified = cayley_matrix(&net, CayleyVariant::Modified);
        assert_eq!(modified.rows(), 5);
        assert_eq!(modified.cols(), 8);
        assert_eq!(*modified.get(0, 0), BigInt::from(1));
        let extended = cayley_matrix(&net, CayleyVariant::Extended);
        assert_eq!(*extended.get(0, 0), BigInt::from(-1));
    }

    #[test]
    fn triangle_modified_cayley_shape() {
        let net = net(TRIANGLE);
        let modified = cayley_matrix(&net, CayleyVariant::Modified);
        assert_eq!(modified.rows(), 3);
        assert_eq!(modified.cols(), 5);
        assert_eq!(
            modified.to_string(),
            "1 0 2 1 0\n0 1 0 1 2\n0 0 1 1 1"
        );
    }

    #[test]
    fn single_component_indicator_row() {
        let net = net(TRIANGLE);
        let standard = cayley_matrix(&net, CayleyVariant::Standard);
        assert_eq!(standard.to_string(), "2 1 0\n0 1 2\n1 1 1");
    }

    #[test]
    fn cayley_toric_ideals_match_paper_objects() {
        for text in [TRIANGLE, EDELSTEIN] {
            let net = net(text);
            let tg = toric_ideal(&net, false).unwrap();
            let mg = moduli_ideal_from(&tg);
            let standard = cayley_toric_ideal(&net, CayleyVariant::Standard);
            assert!(ideal_equal(&standard, &mg), "standard Cayley vs moduli");
            let modified = cayley_toric_ideal(&net, CayleyVariant::Modified);
            assert!(ideal_equal(&modified, &tg), "modified Cayley vs toric");
        }
    }

    #[test]
    fn identity_matrix_has_zero_toric_ideal() {
        let ctx = VariableContext::standard(0, 3);
        let ideal = toric_ideal_of_matrix(
            &IntegerMatrix::identity(3),
            &[0, 1, 2],
            &ctx,
        );
        assert!(ideal.is_zero_ideal());
    }

    #[test]
    fn extended_cayley_flips_the_species_sign() {
        let net = net(EDELSTEIN);
        let extended = cayley_toric_ideal(&net, CayleyVariant::Extended);
        let ctx = extended.context();
        let flipped =
            parse_polynomial("K1 - K2*x1", ctx, &MonomialOrder::Grevlex).unwrap();
        let original =
            parse_polynomial("K1*x1 - K2", ctx, &MonomialOrder::Grevlex).unwrap();
        assert!(ideal_member(&flipped, &extended));
        assert!(!ideal_member(&original, &extended));
        let tg = toric_ideal(&net, false).unwrap();
        assert!(!ideal_equal(&extended, &tg));
    }

    #[test]
    fn rees_generators_follow_cayley_columns() {
        let net = net(EDELSTEIN);
        let gens = rees_generators(&net);
        let strings: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        assert_eq!(
            strings,
            ["x1*t1", "x1^2*t1", "x1*x2*t2", "x3*t2", "x2*t2"]
        );
    }

    #[test]
    fn rees_generators_triangle_and_single_vertex() {
        let tri = net(TRIANGLE);
        let strings: Vec<String> = rees_generators(&tri).iter().map(ToString::to_string).collect();
        assert_eq!(strings, ["x1^2*t1", "x1*x2*t1", "x2^2*t1"]);
        let single = net("A\n");
        let strings: Vec<String> =
            rees_generators(&single).iter().map(ToString::to_string).collect();
        assert_eq!(strings, ["x1*t1"]);
    }

    #[test]
    fn presentation_keeps_nonminimal_generators() {
        let net = net(EDELSTEIN);
        let pres = rees_presentation(&net);
        // block 1 keeps both x1 and x1^2 even though x1 divides x1^2
        assert_eq!(pres.monomial_ideals[0].len(), 2);
        assert_eq!(pres.monomial_ideals[1].len(), 3);
    }

    #[test]
    fn kernel_soundness_on_paper_networks() {
        for text in [TRIANGLE, EDELSTEIN] {
            let net = net(text);
            let tg = toric_ideal(&net, false).unwrap();
            assert!(kernel_soundness_check(&net, &tg));
        }
    }

    #[test]
    fn kernel_soundness_rejects_corrupted_ideal() {
        let net = net(EDELSTEIN);
        let tg = toric_ideal(&net, false).unwrap();
        let ctx = Arc::clone(tg.context());
        let mut gens: Vec<Polynomial> = tg.generators().to_vec();
        gens.pop();
        gens.push(parse_polynomial("x1*K1", &ctx, &MonomialOrder::Grevlex).unwrap());
        let corrupted = Ideal::new(ctx, gens);
        assert!(!kernel_soundness_check(&net, &corrupted));
    }

    #[test]
    fn triangle_weights_exist() {
        let net = net(TRIANGLE);
        let w = find_positive_weights(&net).unwrap();
        assert_eq!(w.q, vec![BigInt::from(1), BigInt::from(1)]);
        assert_eq!(w.block_degrees, vec![BigInt::from(2)]);
    }

    #[test]
    fn edelstein_weights_do_not_exist() {
        let net = net(EDELSTEIN);
        assert_eq!(find_positive_weights(&net), None);
    }

    #[test]
    fn singleton_blocks_get_unit_weights() {
        let net = net("A\nB + C\n");
        let w = find_positive_weights(&net).unwrap();
        assert_eq!(w.q, vec![BigInt::from(1); 3]);
    }

    #[test]
    fn homogeneity_check_triangle() {
        let net = net(TRIANGLE);
        let tg = toric_ideal(&net, false).unwrap();
        assert!(homogeneity_check(&net, &tg, &[BigInt::from(1), BigInt::from(1)]));
        // wrong weights break homogeneity
        assert!(!homogeneity_check(&net, &tg, &[BigInt::from(1), BigInt::from(2)]));
        // the zero ideal is vacuously homogeneous
        let empty = net_zero();
        let tg0 = toric_ideal(&empty, false).unwrap();
        let q: Vec<BigInt> = vec![BigInt::from(1)];
        assert!(homogeneity_check(&empty, &tg0, &q));
    }

    fn net_zero() -> Network {
        parse_network("A\n").unwrap()
    }

    #[test]
    fn triangle_fiber_is_moduli() {
        let net = net(TRIANGLE);
        let tg = toric_ideal(&net, false).unwrap();
        let fiber = special_fiber(&net, &tg);
        assert!(fiber.homogeneous_case);
        let expected = ideal_from(&["K1*K3 - K2^2"], fiber.fiber_ideal.context());
        assert!(ideal_equal(&fiber.fiber_ideal, &expected));
        let mg = moduli_ideal_from(&tg);
        assert!(ideal_equal(&fiber.fiber_ideal, &mg));
    }

    #[test]
    fn edelstein_fiber_differs_from_moduli() {
        let net = net(EDELSTEIN);
        let tg = toric_ideal(&net, false).unwrap();
        let fiber = special_fiber(&net, &tg);
        assert!(!fiber.homogeneous_case);
        let expected = ideal_from(&["K2", "K3"], fiber.fiber_ideal.context());
        assert!(ideal_equal(&fiber.fiber_ideal, &expected));
        let mg = moduli_ideal_from(&tg);
        assert!(!ideal_equal(&fiber.fiber_ideal, &mg));
    }

    #[test]
    fn fiber_of_singleton_blocks_is_zero() {
        let net = net("A\nB\n");
        let tg = toric_ideal(&net, false).unwrap();
        let fiber = special_fiber(&net, &tg);
        assert!(fiber.fiber_ideal.is_zero_ideal());
        assert!(fiber.homogeneous_case);
    }

    #[test]
    fn partition_equivalence_on_paper_networks() {
        for text in [TRIANGLE, EDELSTEIN] {
            let net = net(text);
            assert!(partition_equivalence_check(&net).unwrap());
        }
    }

    #[test]
    fn substitution_example_from_presentation() {
        // the triangle moduli generator lies in the kernel of the map
        let net = net(TRIANGLE);
        let (assignment, rees_ctx) = phi_assignment(&net);
        let base = base_context(&net);
        let p = parse_polynomial("K1*K3 - K2^2", &base, &MonomialOrder::Grevlex).unwrap();
        let image = p
            .substitute(&assignment, &rees_ctx, &MonomialOrder::Grevlex)
            .unwrap();
        assert!(image.is_zero());
    }
}
