//! Matrix pairs `(A, B)` with `AB = qBA`: the commutant spaces `B(A)`,
//! `B′(A)`, admissibility, and equivalence under `(A, B) ↦ α·u(A, B)u⁻¹`.

use serde::{Deserialize, Serialize};

use crate::conjugacy::find_scaled_conjugacy;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{MatSpace, Matrix};

#[derive(Clone, Debug, PartialEq)]
pub struct QSpinorRep<F> {
    pub a: Matrix<F>,
    pub b: Matrix<F>,
    pub q: F,
}

impl<F: Field> QSpinorRep<F> {
    pub fn new(a: Matrix<F>, b: Matrix<F>, q: F) -> Result<Self> {
        a.check_same_dim(&b)?;
        Ok(Self { a, b, q })
    }

    pub fn n(&self) -> usize {
        self.a.rows()
    }

    /// `AB = qBA` exactly.
    pub fn check(&self) -> bool {
        Matrix::q_commutator(&self.a, &self.b, &self.q).is_zero()
    }

    /// `(α·uAu⁻¹, α·uBu⁻¹)`
    pub fn conjugate(&self, u: &Matrix<F>, alpha: &F) -> Result<Self> {
        let uinv = u.inverse()?;
        let c = |m: &Matrix<F>| (&(u * m) * &uinv).scale(alpha);
        Ok(Self {
            a: c(&self.a),
            b: c(&self.b),
            q: self.q.clone(),
        })
    }
}

pub fn check_spinor<F: Field>(a: &Matrix<F>, b: &Matrix<F>, q: &F) -> Result<bool> {
    a.check_same_dim(b)?;
    Ok(Matrix::q_commutator(a, b, q).is_zero())
}

/// `B(A) = {B : AB = qBA}`.
pub fn commutant_b<F: Field>(a: &Matrix<F>, q: &F) -> MatSpace<F> {
    MatSpace::solve(a.rows(), |x| vec![Matrix::q_commutator(a, x, q)])
}

/// `B′(A) = {B′ : B′A = qAB′}`.
pub fn commutant_bprime<F: Field>(a: &Matrix<F>, q: &F) -> MatSpace<F> {
    MatSpace::solve(a.rows(), |x| vec![Matrix::q_commutator(x, a, q)])
}

/// Direction of the `C`–`A` edge in the admissibility triangle.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// `CB = qBC` and `CA = qAC`.
    #[default]
    Default,
    /// `CB = qBC` and `AC = qCA`.
    Flipped,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AdmissibilityWitness<F> {
    pub admissible: bool,
    /// All `C` satisfying both relations.
    pub c_space: MatSpace<F>,
    /// A member of `c_space` with `C·B ≠ 0`, present iff admissible.
    pub witness_c: Option<Matrix<F>>,
}

pub fn admissibility<F: Field>(
    a: &Matrix<F>,
    b: &Matrix<F>,
    q: &F,
    orientation: Orientation,
) -> Result<AdmissibilityWitness<F>> {
    if !check_spinor(a, b, q)? {
        return Err(Error::NotQSpinor);
    }
    let c_space = MatSpace::solve(a.rows(), |c| {
        let second = match orientation {
            Orientation::Default => Matrix::q_commutator(c, a, q),
            Orientation::Flipped => Matrix::q_commutator(a, c, q),
        };
        vec![Matrix::q_commutator(c, b, q), second]
    });
    // C ↦ C·B is linear, so it is nonzero on the space iff it is nonzero on
    // some basis element
    let witness_c = c_space.basis().into_iter().find(|c| !(c * b).is_zero());
    Ok(AdmissibilityWitness {
        admissible: witness_c.is_some(),
        c_space,
        witness_c,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpinorEquivalence<F> {
    pub u: Matrix<F>,
    pub alpha: F,
    /// `alpha = q^exponent`
    pub exponent: i32,
}

/// Searches `u` invertible and `α = q^k` (|k| ≤ 4) with `A₂ = α·uA₁u⁻¹`,
/// `B₂ = α·uB₁u⁻¹`. `None` means no witness within monomial scalings.
pub fn spinor_equivalent<F: Field>(
    r1: &QSpinorRep<F>,
    r2: &QSpinorRep<F>,
) -> Result<Option<SpinorEquivalence<F>>> {
    r1.a.check_same_dim(&r2.a)?;
    let groups = [vec![(&r1.a, &r2.a), (&r1.b, &r2.b)]];
    Ok(
        find_scaled_conjugacy(&groups, &r1.q).map(|c| SpinorEquivalence {
            u: c.u,
            alpha: c.alphas[0].clone(),
            exponent: c.exponents[0],
        }),
    )
}
