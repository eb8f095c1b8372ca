//! Simultaneous conjugation up to monomial scalars: find invertible `u` and
//! scalars `α_g = q^{k_g}` with `Y = α_g·u·X·u⁻¹` for every pair `(X, Y)` in
//! group `g`.

use crate::field::Field;
use crate::matrix::{MatSpace, Matrix};

/// Exponent range searched for the scalars.
pub const MAX_EXPONENT: i32 = 4;

#[derive(Clone, Debug, PartialEq)]
pub struct ScaledConjugacy<F> {
    pub u: Matrix<F>,
    /// One exponent per group; the scalar is `q^k`.
    pub exponents: Vec<i32>,
    pub alphas: Vec<F>,
}

/// `q^k` for `k = 0, 1, -1, 2, -2, …, ±MAX_EXPONENT`.
pub fn monomial_candidates<F: Field>(q: &F) -> Vec<(i32, F)> {
    let mut out = vec![(0, F::one())];
    for k in 1..=MAX_EXPONENT {
        for e in [k, -k] {
            if let Some(v) = q.pow_i32(e) {
                out.push((e, v));
            }
        }
    }
    out
}

/// Necessary condition for `Y ~ α·X`: equal power-sum traces
/// `tr((αX)^j) = tr(Y^j)` for `j = 1..n`, i.e. equal characteristic
/// polynomials in characteristic zero.
pub fn spectra_match<F: Field>(x: &Matrix<F>, y: &Matrix<F>, alpha: &F) -> bool {
    let ax = x.scale(alpha);
    let (mut px, mut py) = (ax.clone(), y.clone());
    for j in 1..=x.rows() {
        if px.trace() != py.trace() {
            return false;
        }
        if j < x.rows() {
            px = &px * &ax;
            py = &py * y;
        }
    }
    true
}

pub fn find_scaled_conjugacy<F: Field>(
    groups: &[Vec<(&Matrix<F>, &Matrix<F>)>],
    q: &F,
) -> Option<ScaledConjugacy<F>> {
    let n = groups.iter().flatten().next()?.0.rows();
    let candidates = monomial_candidates(q);
    let viable: Vec<Vec<&(i32, F)>> = groups
        .iter()
        .map(|pairs| {
            candidates
                .iter()
                .filter(|(_, a)| pairs.iter().all(|(x, y)| spectra_match(x, y, a)))
                .collect()
        })
        .collect();
    if viable.iter().any(Vec::is_empty) {
        return None;
    }
    let mut idx = vec![0usize; groups.len()];
    loop {
        let choice: Vec<&(i32, F)> = idx.iter().zip(&viable).map(|(&i, v)| v[i]).collect();
        if let Some(found) = try_scalars(n, groups, &choice) {
            return Some(found);
        }
        // odometer over the viable candidates
        let mut g = 0;
        loop {
            if g == groups.len() {
                return None;
            }
            idx[g] += 1;
            if idx[g] < viable[g].len() {
                break;
            }
            idx[g] = 0;
            g += 1;
        }
    }
}

fn try_scalars<F: Field>(
    n: usize,
    groups: &[Vec<(&Matrix<F>, &Matrix<F>)>],
    choice: &[&(i32, F)],
) -> Option<ScaledConjugacy<F>> {
    // Y = α·u·X·u⁻¹  ⇔  Y·u − α·u·X = 0
    let space = MatSpace::solve(n, |u| {
        groups
            .iter()
            .zip(choice)
            .flat_map(|(pairs, (_, a))| {
                pairs
                    .iter()
                    .map(move |(x, y)| &(*y * u) - &(u * *x).scale(a))
            })
            .collect()
    });
    let u = space.find_invertible()?;
    let uinv = u.inverse().ok()?;
    let exact = groups.iter().zip(choice).all(|(pairs, (_, a))| {
        pairs
            .iter()
            .all(|(x, y)| (&(&u * *x) * &uinv).scale(a) == **y)
    });
    exact.then(|| ScaledConjugacy {
        u,
        exponents: choice.iter().map(|(k, _)| *k).collect(),
        alphas: choice.iter().map(|(_, a)| a.clone()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::RatFunc;
    use num_traits::{One, Zero};

    type M = Matrix<RatFunc>;

    #[test]
    fn candidates_are_ordered_by_size() {
        let ks: Vec<i32> = monomial_candidates(&RatFunc::q())
            .iter()
            .map(|c| c.0)
            .collect();
        assert_eq!(ks, vec![0, 1, -1, 2, -2, 3, -3, 4, -4]);
    }

    #[test]
    fn spectra_filter() {
        let x = M::diag(vec![RatFunc::one(), RatFunc::q()]);
        let y = M::diag(vec![RatFunc::q_pow(2), RatFunc::q()]);
        assert!(spectra_match(&x, &y, &RatFunc::q()));
        assert!(!spectra_match(&x, &y, &RatFunc::one()));
    }

    #[test]
    fn recovers_permutation_and_scale() {
        let x = M::diag(vec![RatFunc::one(), RatFunc::q()]);
        let n1 = M::unit(2, 0, 1);
        let perm = M::from_rows(vec![
            vec![RatFunc::zero(), RatFunc::one()],
            vec![RatFunc::one(), RatFunc::zero()],
        ])
        .unwrap();
        let a = RatFunc::q();
        let y = (&(&perm * &x) * &perm).scale(&a);
        let n2 = (&(&perm * &n1) * &perm).scale(&a);
        let found = find_scaled_conjugacy(&[vec![(&x, &y), (&n1, &n2)]], &RatFunc::q()).unwrap();
        assert_eq!(found.exponents, vec![1]);
        assert!(found.u.is_invertible());
    }
}
