//! Representations of quantum GL₂: four matrices `C11, C12, C21, C22`
//! subject to the six defining relations with invertible quantum determinant.

use crate::conjugacy::find_scaled_conjugacy;
use crate::error::Result;
use crate::field::Field;
use crate::matrix::Matrix;

#[derive(Clone, Debug, PartialEq)]
pub struct GL2Rep<F> {
    pub c11: Matrix<F>,
    pub c12: Matrix<F>,
    pub c21: Matrix<F>,
    pub c22: Matrix<F>,
}

impl<F: Field> GL2Rep<F> {
    pub fn new(c11: Matrix<F>, c12: Matrix<F>, c21: Matrix<F>, c22: Matrix<F>) -> Result<Self> {
        c11.check_same_dim(&c12)?;
        c11.check_same_dim(&c21)?;
        c11.check_same_dim(&c22)?;
        Ok(Self { c11, c12, c21, c22 })
    }

    /// `C11 = C22 = 1`, `C12 = C21 = 0`.
    pub fn classical(n: usize) -> Self {
        Self {
            c11: Matrix::identity(n),
            c12: Matrix::zero(n),
            c21: Matrix::zero(n),
            c22: Matrix::identity(n),
        }
    }

    pub fn n(&self) -> usize {
        self.c11.rows()
    }

    /// Generator `C_ij` for `i, j ∈ {1, 2}`.
    pub fn get(&self, i: usize, j: usize) -> Option<&Matrix<F>> {
        match (i, j) {
            (1, 1) => Some(&self.c11),
            (1, 2) => Some(&self.c12),
            (2, 1) => Some(&self.c21),
            (2, 2) => Some(&self.c22),
            _ => None,
        }
    }

    pub fn generators(&self) -> [&Matrix<F>; 4] {
        [&self.c11, &self.c12, &self.c21, &self.c22]
    }

    /// `det_q = C11·C22 − C12·C21`
    pub fn detq(&self) -> Matrix<F> {
        &(&self.c11 * &self.c22) - &(&self.c12 * &self.c21)
    }

    /// `(q − 1)·C12·C21`
    pub fn perturbation(&self, q: &F) -> Matrix<F> {
        (&self.c12 * &self.c21).scale(&(q.clone() - F::one()))
    }

    /// The `2n×2n` block matrix `[[C11, C12], [C21, C22]]`.
    pub fn block_matrix(&self) -> Matrix<F> {
        Matrix::block2(&self.c11, &self.c12, &self.c21, &self.c22)
    }

    /// `C11, C21 ↦ α₁·u(·)u⁻¹` and `C12, C22 ↦ α₂·u(·)u⁻¹`.
    pub fn conjugate(&self, u: &Matrix<F>, alpha1: &F, alpha2: &F) -> Result<Self> {
        let uinv = u.inverse()?;
        let c = |m: &Matrix<F>, a: &F| (&(u * m) * &uinv).scale(a);
        Ok(Self {
            c11: c(&self.c11, alpha1),
            c12: c(&self.c12, alpha2),
            c21: c(&self.c21, alpha1),
            c22: c(&self.c22, alpha2),
        })
    }

    pub fn map<G: Field>(&self, f: impl Fn(&Matrix<F>) -> Result<Matrix<G>>) -> Result<GL2Rep<G>> {
        Ok(GL2Rep {
            c11: f(&self.c11)?,
            c12: f(&self.c12)?,
            c21: f(&self.c21)?,
            c22: f(&self.c22)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelationReport<F> {
    /// `C11·C12 = C12·C11`
    pub c11_c12_commute: bool,
    /// `C21·C11 = q·C11·C21`
    pub c21_c11_q: bool,
    /// `C22·C12 = q·C12·C22`
    pub c22_c12_q: bool,
    /// `C21·C22 = C22·C21`
    pub c21_c22_commute: bool,
    /// `C21·C12 = q·C12·C21`
    pub c21_c12_q: bool,
    /// `C22·C11 − C11·C22 = (q − 1)·C12·C21`
    pub commutator_c22_c11: bool,
    pub detq: Matrix<F>,
    pub detq_invertible: bool,
    pub perturbation: Matrix<F>,
    pub perturbation_nonzero: bool,
}

impl<F> RelationReport<F> {
    pub fn relations(&self) -> [bool; 6] {
        [
            self.c11_c12_commute,
            self.c21_c11_q,
            self.c22_c12_q,
            self.c21_c22_commute,
            self.c21_c12_q,
            self.commutator_c22_c11,
        ]
    }

    pub fn relations_hold(&self) -> bool {
        self.relations().iter().all(|&b| b)
    }

    /// All six relations and an invertible `det_q`.
    pub fn is_representation(&self) -> bool {
        self.relations_hold() && self.detq_invertible
    }
}

pub fn verify_relations<F: Field>(r: &GL2Rep<F>, q: &F) -> RelationReport<F> {
    let one = F::one();
    let qc = |a: &Matrix<F>, b: &Matrix<F>, k: &F| Matrix::q_commutator(a, b, k).is_zero();
    let perturbation = r.perturbation(q);
    let comm = &(&r.c22 * &r.c11) - &(&r.c11 * &r.c22);
    let detq = r.detq();
    RelationReport {
        c11_c12_commute: qc(&r.c11, &r.c12, &one),
        c21_c11_q: qc(&r.c21, &r.c11, q),
        c22_c12_q: qc(&r.c22, &r.c12, q),
        c21_c22_commute: qc(&r.c21, &r.c22, &one),
        c21_c12_q: qc(&r.c21, &r.c12, q),
        commutator_c22_c11: comm == perturbation,
        detq_invertible: detq.is_invertible(),
        detq,
        perturbation_nonzero: !perturbation.is_zero(),
        perturbation,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corollary1Report {
    /// Why the representation hypothesis fails, if it does.
    pub precondition_failure: Option<String>,
    pub c11_invertible: bool,
    pub c22_invertible: bool,
    pub c12_nilpotent: bool,
    pub c21_nilpotent: bool,
    pub failures: Vec<String>,
}

impl Corollary1Report {
    pub fn passed(&self) -> bool {
        self.precondition_failure.is_none() && self.failures.is_empty()
    }
}

/// Invertibility of `C11`, `C22` and nilpotency of `C12`, `C21`. The four
/// properties are always computed; the verdict also requires the relations
/// and an invertible `det_q`.
pub fn corollary1_check<F: Field>(r: &GL2Rep<F>, q: &F) -> Corollary1Report {
    let rel = verify_relations(r, q);
    let precondition_failure = if !rel.relations_hold() {
        Some("relations fail".to_string())
    } else if !rel.detq_invertible {
        Some("det_q singular".to_string())
    } else {
        None
    };
    let c11_invertible = r.c11.is_invertible();
    let c22_invertible = r.c22.is_invertible();
    let c12_nilpotent = r.c12.is_nilpotent();
    let c21_nilpotent = r.c21.is_nilpotent();
    let failures = [
        (c11_invertible, "C11 singular"),
        (c22_invertible, "C22 singular"),
        (c12_nilpotent, "C12 not nilpotent"),
        (c21_nilpotent, "C21 not nilpotent"),
    ]
    .into_iter()
    .filter(|(ok, _)| !ok)
    .map(|(_, msg)| msg.to_string())
    .collect();
    Corollary1Report {
        precondition_failure,
        c11_invertible,
        c22_invertible,
        c12_nilpotent,
        c21_nilpotent,
        failures,
    }
}

/// `1 + q + … + q^{k−1}`
pub fn q_integer<F: Field>(q: &F, k: u32) -> F {
    let mut acc = F::zero();
    let mut p = F::one();
    for _ in 0..k {
        acc = acc + p.clone();
        p = p * q.clone();
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KmutatorReport {
    /// `ε·x = q·x·ε` for `ε = xy − yx`.
    pub premise_holds: bool,
    pub epsilon_invertible: bool,
    /// `(k, x^k·y − y·x^k = [k]_q·x^{k−1}·ε)` for `k = 1..=kmax`; empty when
    /// the premise fails.
    pub identity: Vec<(u32, bool)>,
}

impl KmutatorReport {
    pub fn identity_holds(&self) -> bool {
        self.premise_holds && self.identity.iter().all(|&(_, ok)| ok)
    }
}

pub fn kmutator_check<F: Field>(x: &Matrix<F>, y: &Matrix<F>, kmax: u32, q: &F) -> KmutatorReport {
    let eps = &(x * y) - &(y * x);
    let premise_holds = Matrix::q_commutator(&eps, x, q).is_zero();
    let epsilon_invertible = eps.is_invertible();
    let mut identity = Vec::new();
    if premise_holds {
        // xk_1 = x^{k−1}, xk = x^k
        let mut xk_1 = Matrix::identity(x.rows());
        for k in 1..=kmax {
            let xk = &xk_1 * x;
            let lhs = &(&xk * y) - &(y * &xk);
            let rhs = (&xk_1 * &eps).scale(&q_integer(q, k));
            identity.push((k, lhs == rhs));
            xk_1 = xk;
        }
    }
    KmutatorReport {
        premise_holds,
        epsilon_invertible,
        identity,
    }
}

/// Which of `xy = yx`, `xy = q·yx`, `xy = q⁻¹·yx` hold for a named pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairRelation {
    pub left: &'static str,
    pub right: &'static str,
    pub commute: bool,
    pub q_commute: bool,
    pub q_inv_commute: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Figure2Split<F> {
    /// `C11⁻¹·C12`
    pub a12: Matrix<F>,
    /// `C11⁻¹·det_q`
    pub a22: Matrix<F>,
    pub pairs: Vec<PairRelation>,
}

/// Splits the generators into the two quantum-plane factors `{c21, c11}` and
/// `{a22, a12}` and reports the relations within and across them.
pub fn figure2_split<F: Field>(r: &GL2Rep<F>, q: &F) -> Result<Figure2Split<F>> {
    let c11_inv = r.c11.inverse()?;
    let a12 = &c11_inv * &r.c12;
    let a22 = &c11_inv * &r.detq();
    let qinv = q.inv();
    let rel = |left, x: &Matrix<F>, right, y: &Matrix<F>| {
        let xy = x * y;
        let yx = y * x;
        PairRelation {
            left,
            right,
            commute: xy == yx,
            q_commute: xy == yx.scale(q),
            q_inv_commute: qinv.as_ref().is_some_and(|qi| xy == yx.scale(qi)),
        }
    };
    let pairs = vec![
        rel("c21", &r.c21, "c11", &r.c11),
        rel("a22", &a22, "a12", &a12),
        rel("c11", &r.c11, "a12", &a12),
        rel("c11", &r.c11, "a22", &a22),
        rel("c21", &r.c21, "a12", &a12),
        rel("c21", &r.c21, "a22", &a22),
    ];
    Ok(Figure2Split { a12, a22, pairs })
}

#[derive(Clone, Debug, PartialEq)]
pub struct GL2Equivalence<F> {
    pub u: Matrix<F>,
    pub alpha1: F,
    pub alpha2: F,
    /// `alpha_i = q^{exponents[i−1]}`
    pub exponents: [i32; 2],
}

/// Searches `u` and monomial `α₁, α₂` with `C′11 = α₁·uC11u⁻¹`,
/// `C′21 = α₁·uC21u⁻¹`, `C′12 = α₂·uC12u⁻¹`, `C′22 = α₂·uC22u⁻¹`.
pub fn gl2_equivalent<F: Field>(
    r1: &GL2Rep<F>,
    r2: &GL2Rep<F>,
    q: &F,
) -> Result<Option<GL2Equivalence<F>>> {
    r1.c11.check_same_dim(&r2.c11)?;
    let groups = [
        vec![(&r1.c11, &r2.c11), (&r1.c21, &r2.c21)],
        vec![(&r1.c12, &r2.c12), (&r1.c22, &r2.c22)],
    ];
    Ok(find_scaled_conjugacy(&groups, q).map(|c| GL2Equivalence {
        u: c.u,
        alpha1: c.alphas[0].clone(),
        alpha2: c.alphas[1].clone(),
        exponents: [c.exponents[0], c.exponents[1]],
    }))
}

/// Whether the column space of `C12` is invariant under `C11`, `C22`, `C21`:
/// `rank [G·C12 | C12] = rank C12` for each.
pub fn c12_image_invariant<F: Field>(r: &GL2Rep<F>) -> bool {
    let base = r.c12.rank();
    [&r.c11, &r.c22, &r.c21].iter().all(|g| {
        let gc = *g * &r.c12;
        let n = r.n();
        let joined = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                gc[(i, j)].clone()
            } else {
                r.c12[(i, j - n)].clone()
            }
        });
        joined.rank() == base
    })
}

/// For a representation by upper (or lower) triangular matrices:
/// `diag(C12·C21) = 0` and `diag(C11·C22) = diag(det_q)`. `None` if some
/// generator is not triangular in the common direction.
pub fn triangular_diagonal_coincidence<F: Field>(r: &GL2Rep<F>) -> Option<bool> {
    let gens = r.generators();
    let triangular = gens.iter().all(|g| g.is_upper_triangular())
        || gens.iter().all(|g| g.is_lower_triangular());
    if !triangular {
        return None;
    }
    let p = &r.c12 * &r.c21;
    let c = &r.c11 * &r.c22;
    Some(p.diagonal().iter().all(F::is_zero) && c.diagonal() == r.detq().diagonal())
}
