//! Exact rational linear algebra for the positive-weight search:
//! reduced row echelon form, nullspace bases, and Fourier-Motzkin
//! elimination for strict homogeneous inequality systems.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(mat: &mut Vec<Vec<BigRational>>) -> Vec<usize> {
    let rows = mat.len();
    let cols = mat.first().map(Vec::len).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, pr);
        let inv = BigRational::one() / mat[r][c].clone();
        for x in &mut mat[r] {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !mat[i][c].is_zero() {
                let factor = mat[i][c].clone();
                for c2 in 0..cols {
                    let delta = &factor * &mat[r][c2];
                    mat[i][c2] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Basis of the nullspace of the row system, one vector per free column,
/// ordered by free column index.
pub fn nullspace_basis(rows: &[Vec<BigRational>], dim: usize) -> Vec<Vec<BigRational>> {
    let mut mat: Vec<Vec<BigRational>> = rows.to_vec();
    let pivots = rref(&mut mat);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..dim {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![BigRational::zero(); dim];
        v[free] = BigRational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -mat[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Rank of a rational row system.
pub fn rational_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut mat = rows.to_vec();
    rref(&mut mat).len()
}

/// A witness for the strict homogeneous system `row . x > 0` for every
/// row, via Fourier-Motzkin elimination. Deterministic: bounds are
/// resolved from the last variable down with midpoint / bound+-1 picks.
pub fn strict_positive_witness(
    constraints: &[Vec<BigRational>],
    dim: usize,
) -> Option<Vec<BigRational>> {
    if dim == 0 {
        // no variables: feasible iff there are no constraints (0 > 0 fails)
        return constraints.is_empty().then(Vec::new);
    }
    if constraints.iter().any(|c| c.iter().all(Zero::is_zero)) {
        return None;
    }
    // stages[k] holds constraints over variables 0..=k
    let mut stages: Vec<Vec<Vec<BigRational>>> = vec![Vec::new(); dim];
    stages[dim - 1] = constraints.to_vec();
    for k in (1..dim).rev() {
        let mut next: Vec<Vec<BigRational>> = Vec::new();
        let (mut lowers, mut uppers) = (Vec::new(), Vec::new());
        for c in &stages[k] {
            if c[k].is_zero() {
                next.push(c[..k].to_vec());
            } else if c[k].is_positive() {
                lowers.push(c.clone());
            } else {
                uppers.push(c.clone());
            }
        }
        for lo in &lowers {
            for hi in &uppers {
                // positive combination cancelling variable k
                let a = -hi[k].clone();
                let b = lo[k].clone();
                let combined: Vec<BigRational> = (0..k)
                    .map(|i| &lo[i] * &a + &hi[i] * &b)
                    .collect();
                if combined.iter().all(Zero::is_zero) {
                    return None;
                }
                next.push(combined);
            }
        }
        if next.iter().any(|c| c.iter().all(Zero::is_zero)) {
            return None;
        }
        stages[k - 1] = next;
    }
    // back-substitution
    let mut x: Vec<BigRational> = Vec::with_capacity(dim);
    for k in 0..dim {
        let mut lower: Option<BigRational> = None;
        let mut upper: Option<BigRational> = None;
        for c in &stages[k] {
            if c[k].is_zero() {
                continue;
            }
            let mut rhs = BigRational::zero();
            for i in 0..k {
                rhs -= &c[i] * &x[i];
            }
            let bound = rhs / c[k].clone();
            if c[k].is_positive() {
                lower = Some(match lower {
                    Some(l) if l >= bound => l,
                    _ => bound,
                });
            } else {
                upper = Some(match upper {
                    Some(u) if u <= bound => u,
                    _ => bound,
                });
            }
        }
        let value = match (lower, upper) {
            (Some(l), Some(u)) => {
                if l >= u {
                    return None;
                }
                (l + u) / BigRational::from_integer(2.into())
            }
            (Some(l), None) => l + BigRational::one(),
            (None, Some(u)) => u - BigRational::one(),
            (None, None) => BigRational::one(),
        };
        x.push(value);
    }
    Some(x)
}

/// Scales a strictly positive rational vector to the smallest positive
/// integer vector on its ray.
pub fn primitive_integer_vector(q: &[BigRational]) -> Vec<BigInt> {
    if q.is_empty() {
        return Vec::new();
    }
    let mut denom_lcm = BigInt::one();
    for x in q {
        denom_lcm = denom_lcm.lcm(x.denom());
    }
    let scaled: Vec<BigInt> = q
        .iter()
        .map(|x| (x * BigRational::from_integer(denom_lcm.clone())).to_integer())
        .collect();
    let mut g = BigInt::zero();
    for v in &scaled {
        g = g.gcd(v);
    }
    if g.is_zero() {
        return scaled;
    }
    scaled.into_iter().map(|v| v / &g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn rows(data: &[&[i64]]) -> Vec<Vec<BigRational>> {
        data.iter()
            .map(|r| r.iter().map(|&v| rat(v)).collect())
            .collect()
    }

    #[test]
    fn nullspace_of_difference_constraints() {
        // q1 - q2 = 0 twice over: nullspace spanned by (1,1)
        let basis = nullspace_basis(&rows(&[&[1, -1], &[2, -2]]), 2);
        assert_eq!(basis, vec![vec![rat(1), rat(1)]]);
    }

    #[test]
    fn nullspace_of_empty_system_is_identity() {
        let basis = nullspace_basis(&[], 3);
        assert_eq!(basis.len(), 3);
        assert_eq!(basis[0], vec![rat(1), rat(0), rat(0)]);
    }

    #[test]
    fn witness_for_orthant() {
        // x0 > 0, x1 > 0
        let w = strict_positive_witness(&rows(&[&[1, 0], &[0, 1]]), 2).unwrap();
        assert!(w.iter().all(|v| *v > BigRational::zero()));
        assert_eq!(w, vec![rat(1), rat(1)]);
    }

    #[test]
    fn witness_respects_two_sided_bounds() {
        // x0 > 0, x1 > 0, x1 - x0 > 0, 3x0 - x1 > 0  (so x0 < x1 < 3x0)
        let sys = rows(&[&[1, 0], &[0, 1], &[-1, 1], &[3, -1]]);
        let w = strict_positive_witness(&sys, 2).unwrap();
        for c in &sys {
            let val = &c[0] * &w[0] + &c[1] * &w[1];
            assert!(val > BigRational::zero(), "violated: {:?} at {:?}", c, w);
        }
    }

    #[test]
    fn infeasible_systems_are_detected() {
        // x0 > 0 and -x0 > 0
        assert_eq!(strict_positive_witness(&rows(&[&[1], &[-1]]), 1), None);
        // 0 > 0 directly
        assert_eq!(strict_positive_witness(&rows(&[&[0, 0]]), 2), None);
        // x0 + x1 > 0 with -x0 - x1 > 0 cancels to 0 > 0
        assert_eq!(
            strict_positive_witness(&rows(&[&[1, 1], &[-1, -1]]), 2),
            None
        );
    }

    #[test]
    fn primitive_scaling() {
        let q = vec![rat(1) / rat(2), rat(3) / rat(2)];
        assert_eq!(
            primitive_integer_vector(&q),
            vec![BigInt::from(1), BigInt::from(3)]
        );
        let q = vec![rat(4), rat(6)];
        assert_eq!(
            primitive_integer_vector(&q),
            vec![BigInt::from(2), BigInt::from(3)]
        );
    }
}
