//! The Clifford algebra C(1,3) realized on 4×4 matrices in the Dirac
//! convention, and inner actions `c_ij·v = Σ_k m_ik·v·m*_kj` built from a
//! quantum GL₂ representation.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::ComplexField;
use crate::gl2::GL2Rep;
use crate::matrix::{MatSpace, Matrix};

/// Labels of [`CliffordBasis::basis16`], in order.
pub const BASIS_NAMES: [&str; 16] = [
    "1", "g0", "g1", "g2", "g3", "g01", "g02", "g03", "g12", "g13", "g23", "g012", "g013", "g023",
    "g123", "g0123",
];

/// Index sets of [`BASIS_NAMES`].
pub const BASIS_INDICES: [&[usize]; 16] = [
    &[],
    &[0],
    &[1],
    &[2],
    &[3],
    &[0, 1],
    &[0, 2],
    &[0, 3],
    &[1, 2],
    &[1, 3],
    &[2, 3],
    &[0, 1, 2],
    &[0, 1, 3],
    &[0, 2, 3],
    &[1, 2, 3],
    &[0, 1, 2, 3],
];

#[derive(Clone, Debug)]
pub struct CliffordBasis<F> {
    pub gamma: [Matrix<F>; 4],
    pub basis16: Vec<Matrix<F>>,
    /// `diag(1, −1, −1, −1)`
    pub metric: [i64; 4],
    /// Inverse of the 16×16 matrix whose columns are the flattened basis.
    coords_inv: Matrix<F>,
}

fn sigma<F: ComplexField>(k: usize) -> Matrix<F> {
    let (o, z, i) = (F::one(), F::zero(), F::imag_unit());
    let rows = match k {
        1 => vec![vec![z.clone(), o.clone()], vec![o, z]],
        2 => vec![vec![z.clone(), -i.clone()], vec![i, z]],
        _ => vec![vec![o.clone(), z.clone()], vec![z, -o]],
    };
    Matrix::from_rows(rows).expect("2×2 rows")
}

fn permutations(k: usize) -> Vec<(Vec<usize>, bool)> {
    if k == 0 {
        return vec![(Vec::new(), true)];
    }
    let mut out = Vec::new();
    for (p, even) in permutations(k - 1) {
        // inserting k−1 at position i moves it past k−1−i elements
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, k - 1);
            out.push((q, even == ((p.len() - i) % 2 == 0)));
        }
    }
    out
}

impl<F: ComplexField> CliffordBasis<F> {
    pub fn new() -> Self {
        let o = F::one();
        let g0 = Matrix::diag(vec![o.clone(), o.clone(), -o.clone(), -o]);
        let zero2 = Matrix::zero(2);
        let gk = |k| {
            let s: Matrix<F> = sigma(k);
            Matrix::block2(&zero2, &s, &-s.clone(), &zero2)
        };
        let gamma = [g0, gk(1), gk(2), gk(3)];
        let mut cb = Self {
            gamma,
            basis16: Vec::new(),
            metric: [1, -1, -1, -1],
            coords_inv: Matrix::zero(0),
        };
        cb.basis16 = BASIS_INDICES.iter().map(|ix| cb.antisym(ix)).collect();
        let columns = Matrix::from_fn(16, 16, |r, c| cb.basis16[c].as_flat()[r].clone());
        cb.coords_inv = columns
            .inverse()
            .expect("the sixteen products form a basis");
        cb
    }

    pub fn g(&self, mu: usize, nu: usize) -> F {
        if mu == nu {
            F::from_i64(self.metric[mu])
        } else {
            F::zero()
        }
    }

    /// `γ_{μ₁…μ_k} = (1/k!)·Σ_σ sgn(σ)·γ_{μσ(1)}⋯γ_{μσ(k)}`; the identity for
    /// `k = 0`.
    pub fn antisym(&self, indices: &[usize]) -> Matrix<F> {
        let k = indices.len();
        let mut acc = Matrix::zero(4);
        let mut count = 0i64;
        for (perm, even) in permutations(k) {
            let mut prod = Matrix::identity(4);
            for &p in &perm {
                prod = &prod * &self.gamma[indices[p]];
            }
            acc = if even { &acc + &prod } else { &acc - &prod };
            count += 1;
        }
        acc.scale(&F::from_i64(count).inv().expect("k! is nonzero"))
    }

    /// The three defining relation families, checked for every index tuple:
    /// `γμγν = g_μν + γ_μν` with `γ_μν = −γ_νμ`,
    /// `γργ_μν = g_ρμ·γν − g_ρν·γμ + γ_ρμν`, and
    /// `γλγ_μνρ = g_λμ·γ_νρ − g_λν·γ_μρ + g_λρ·γ_μν + γ_λμνρ`.
    pub fn relations_hold(&self) -> bool {
        let mut cache: HashMap<Vec<usize>, Matrix<F>> = HashMap::new();
        let mut a = |ix: &[usize]| -> Matrix<F> {
            cache
                .entry(ix.to_vec())
                .or_insert_with(|| self.antisym(ix))
                .clone()
        };
        let id = Matrix::<F>::identity(4);
        let r = 0..4usize;
        for mu in r.clone() {
            for nu in r.clone() {
                let lhs = &self.gamma[mu] * &self.gamma[nu];
                if lhs != &id.scale(&self.g(mu, nu)) + &a(&[mu, nu]) {
                    return false;
                }
                if a(&[mu, nu]) != -a(&[nu, mu]) {
                    return false;
                }
                for rho in r.clone() {
                    let lhs = &self.gamma[rho] * &a(&[mu, nu]);
                    let rhs = &(&self.gamma[nu].scale(&self.g(rho, mu))
                        - &self.gamma[mu].scale(&self.g(rho, nu)))
                        + &a(&[rho, mu, nu]);
                    if lhs != rhs {
                        return false;
                    }
                    for lam in r.clone() {
                        let lhs = &self.gamma[lam] * &a(&[mu, nu, rho]);
                        let rhs = &(&(&a(&[nu, rho]).scale(&self.g(lam, mu))
                            - &a(&[mu, rho]).scale(&self.g(lam, nu)))
                            + &a(&[mu, nu]).scale(&self.g(lam, rho)))
                            + &a(&[lam, mu, nu, rho]);
                        if lhs != rhs {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// `γμγν + γνγμ = 2·g_μν`
    pub fn anticommutation_holds(&self) -> bool {
        (0..4).all(|mu| {
            (0..4).all(|nu| {
                let s = &(&self.gamma[mu] * &self.gamma[nu]) + &(&self.gamma[nu] * &self.gamma[mu]);
                s == Matrix::identity(4).scale(&(self.g(mu, nu) * F::from_i64(2)))
            })
        })
    }

    pub fn basis_rank(&self) -> usize {
        MatSpace::span(4, &self.basis16).dim()
    }

    /// Coefficients of `v` in `basis16`.
    pub fn to_coords(&self, v: &Matrix<F>) -> Vec<F> {
        assert_eq!((v.rows(), v.cols()), (4, 4));
        let col = Matrix::from_fn(16, 1, |r, _| v.as_flat()[r].clone());
        (&self.coords_inv * &col).into_flat()
    }

    pub fn from_coords(&self, coords: &[F]) -> Matrix<F> {
        coords
            .iter()
            .zip(&self.basis16)
            .fold(Matrix::zero(4), |acc, (c, b)| &acc + &b.scale(c))
    }
}

impl<F: ComplexField> Default for CliffordBasis<F> {
    fn default() -> Self {
        Self::new()
    }
}

pub fn to_clifford_coords<F: ComplexField>(v: &Matrix<F>, cb: &CliffordBasis<F>) -> Vec<F> {
    cb.to_coords(v)
}

#[derive(Clone, Debug, PartialEq)]
pub struct InnerAction<F> {
    pub rep: GL2Rep<F>,
    /// Blocks `m*_kj` of `M⁻¹`, indexed `[k−1][j−1]`.
    pub mstar: [[Matrix<F>; 2]; 2],
}

pub fn build_action<F: ComplexField>(rep: &GL2Rep<F>) -> Result<InnerAction<F>> {
    let n = rep.n();
    let minv = rep
        .block_matrix()
        .inverse()
        .map_err(|_| Error::ActionUndefined)?;
    let b = |r, c| minv.block(r * n, c * n, n, n);
    Ok(InnerAction {
        rep: rep.clone(),
        mstar: [[b(0, 0), b(0, 1)], [b(1, 0), b(1, 1)]],
    })
}

impl<F: ComplexField> InnerAction<F> {
    /// `c_ij·v = Σ_k C_ik·v·m*_kj` with `i, j ∈ {1, 2}`.
    pub fn act(&self, i: usize, j: usize, v: &Matrix<F>) -> Result<Matrix<F>> {
        if !(1..=2).contains(&i) || !(1..=2).contains(&j) {
            return Err(Error::IndexOutOfRange(i, j));
        }
        let mut acc = Matrix::zero(self.rep.n());
        for k in 1..=2 {
            let m = self.rep.get(i, k).expect("index checked");
            acc = &acc + &(&(m * v) * &self.mstar[k - 1][j - 1]);
        }
        Ok(acc)
    }

    /// `c_ij·1 = δ_ij·1` for all `i, j`.
    pub fn is_unital(&self) -> bool {
        let id = Matrix::identity(self.rep.n());
        (1..=2).all(|i| {
            (1..=2).all(|j| {
                let expected = if i == j {
                    id.clone()
                } else {
                    Matrix::zero(id.rows())
                };
                self.act(i, j, &id).expect("valid indices") == expected
            })
        })
    }

    /// `c_ij·(vw) = Σ_k (c_ik·v)(c_kj·w)` for all `i, j`.
    pub fn respects_product(&self, v: &Matrix<F>, w: &Matrix<F>) -> bool {
        let vw = v * w;
        (1..=2).all(|i| {
            (1..=2).all(|j| {
                let lhs = self.act(i, j, &vw).expect("valid indices");
                let rhs = (1..=2).fold(Matrix::zero(v.rows()), |acc, k| {
                    let a = self.act(i, k, v).expect("valid indices");
                    let b = self.act(k, j, w).expect("valid indices");
                    &acc + &(&a * &b)
                });
                lhs == rhs
            })
        })
    }

    /// Whether `c_ij·v = δ_ij·v` for all `i, j`.
    pub fn is_counit_invariant(&self, v: &Matrix<F>) -> bool {
        (1..=2).all(|i| {
            (1..=2).all(|j| {
                let expected = if i == j {
                    v.clone()
                } else {
                    Matrix::zero(v.rows())
                };
                self.act(i, j, v).expect("valid indices") == expected
            })
        })
    }
}

/// `{v : c_ij·v = δ_ij·v}` jointly for every action.
pub fn counit_invariants<F: ComplexField>(actions: &[InnerAction<F>]) -> MatSpace<F> {
    let n = actions.first().map_or(4, |a| a.rep.n());
    MatSpace::solve(n, |v| {
        let mut out = Vec::new();
        for a in actions {
            for i in 1..=2 {
                for j in 1..=2 {
                    let img = a.act(i, j, v).expect("valid indices");
                    out.push(if i == j { &img - v } else { img });
                }
            }
        }
        out
    })
}

/// Generators of the operator algebra: every `C_ij` of every instance and
/// the inverse of each quantum determinant.
pub fn operator_generators<F: ComplexField>(reps: &[GL2Rep<F>]) -> Result<Vec<Matrix<F>>> {
    let mut gens = Vec::with_capacity(5 * reps.len());
    for r in reps {
        gens.extend(r.generators().into_iter().cloned());
        gens.push(r.detq().inverse()?);
    }
    Ok(gens)
}

/// The operator algebra ℜ generated by the instances.
pub fn operator_algebra<F: ComplexField>(reps: &[GL2Rep<F>]) -> Result<MatSpace<F>> {
    let n = reps.first().map_or(4, GL2Rep::n);
    Ok(MatSpace::subalgebra_closure(n, &operator_generators(reps)?))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Invariants<F> {
    pub space: MatSpace<F>,
    /// Clifford coordinates of each basis element of `space`.
    pub coords: Vec<Vec<F>>,
}

/// Invariant algebra as the centralizer of ℜ. Pass one instance for single
/// mode or the family instantiations for family mode.
pub fn invariants_of<F: ComplexField>(
    reps: &[GL2Rep<F>],
    cb: &CliffordBasis<F>,
) -> Result<Invariants<F>> {
    let r = operator_algebra(reps)?;
    let space = MatSpace::centralizer(r.n(), &r.basis());
    let coords = space.basis().iter().map(|v| cb.to_coords(v)).collect();
    Ok(Invariants { space, coords })
}
