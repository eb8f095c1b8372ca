//! Linear subspaces of the `n²`-dimensional space of `n×n` matrices.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::dense::Matrix;
use crate::field::Field;

/// Subspace stored as a reduced row echelon basis of the row-major
/// flattenings. The basis is unique for a given subspace, so equality of
/// `MatSpace`s is equality of subspaces.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatSpace<F> {
    n: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> MatSpace<F> {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// The whole matrix space.
    pub fn full(n: usize) -> Self {
        let mut s = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                s.insert(&Matrix::unit(n, i, j));
            }
        }
        s
    }

    pub fn span<'a>(n: usize, mats: impl IntoIterator<Item = &'a Matrix<F>>) -> Self
    where
        F: 'a,
    {
        let mut s = Self::zero(n);
        for m in mats {
            s.insert(m);
        }
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> Vec<Matrix<F>> {
        self.rows
            .iter()
            .map(|r| Matrix::from_flat(self.n, r.clone()))
            .collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residue of `v` after eliminating every pivot coordinate.
    fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row).skip(p) {
                if !r.is_zero() {
                    *x = x.clone() - f.clone() * r.clone();
                }
            }
        }
        v
    }

    pub fn contains(&self, m: &Matrix<F>) -> bool {
        assert_eq!(m.rows(), self.n);
        self.reduce(m.as_flat()).iter().all(|x| x.is_zero())
    }

    /// Adds `m` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, m: &Matrix<F>) -> bool {
        assert!(m.rows() == self.n && m.cols() == self.n);
        let mut v = self.reduce(m.as_flat());
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().unwrap();
        for x in v.iter_mut().skip(p) {
            *x = x.clone() * inv.clone();
        }
        for row in &mut self.rows {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&v).skip(p) {
                if !y.is_zero() {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.basis().iter().all(|b| other.contains(b))
    }

    /// Elementwise transpose of every member.
    pub fn transpose(&self) -> Self {
        let t: Vec<Matrix<F>> = self.basis().iter().map(Matrix::transpose).collect();
        Self::span(self.n, &t)
    }

    /// Smallest multiplicatively closed subspace containing `generators`:
    /// the span of all nonempty words in them.
    pub fn subalgebra_closure(n: usize, generators: &[Matrix<F>]) -> Self {
        let mut space = Self::zero(n);
        let mut queue: Vec<Matrix<F>> = Vec::new();
        for g in generators {
            if space.insert(g) {
                queue.push(g.clone());
            }
        }
        // every word is g·w with w a shorter word, so closing the span under
        // left multiplication by generators reaches all of them
        while let Some(w) = queue.pop() {
            for g in generators {
                let gw = g * &w;
                if space.insert(&gw) {
                    queue.push(gw);
                }
            }
        }
        space
    }

    /// `{X : XG = GX}` for every `G` in `generators`.
    pub fn centralizer(n: usize, generators: &[Matrix<F>]) -> Self {
        let gens = generators.to_vec();
        Self::solve(n, move |x: &Matrix<F>| {
            gens.iter().map(|g| &(x * g) - &(g * x)).collect()
        })
    }

    /// Common kernel of a family of linear maps on `n×n` matrices.
    ///
    /// `maps` sends `X` to the list of images whose simultaneous vanishing
    /// defines the subspace. It is evaluated on each matrix unit to assemble
    /// the stacked operator, so it must be linear in `X`.
    pub fn solve(n: usize, maps: impl Fn(&Matrix<F>) -> Vec<Matrix<F>>) -> Self {
        let dim = n * n;
        let mut columns: Vec<Vec<F>> = Vec::with_capacity(dim);
        for k in 0..dim {
            let images = maps(&Matrix::unit(n, k / n, k % n));
            let col: Vec<F> = images.into_iter().flat_map(Matrix::into_flat).collect();
            columns.push(col);
        }
        let rows = columns.first().map_or(0, Vec::len);
        let op = Matrix::from_fn(rows, dim, |i, j| columns[j][i].clone());
        let mut s = Self::zero(n);
        for v in op.nullspace() {
            s.insert(&Matrix::from_flat(n, v));
        }
        s
    }

    /// Some invertible member, if one is found.
    ///
    /// Tries the basis itself, then the moment-curve combination with
    /// coefficients `1, t, t², …` at `t = 3`, then a fixed-seed batch of
    /// random integer combinations. A `None` is correct with overwhelming
    /// probability (a nonzero determinant polynomial of degree ≤ n vanishes on
    /// a random point of [-1000, 1000]^d with probability ≤ n/2001).
    pub fn find_invertible(&self) -> Option<Matrix<F>> {
        let basis = self.basis();
        if basis.is_empty() {
            return None;
        }
        if let Some(b) = basis.iter().find(|b| b.is_invertible()) {
            return Some(b.clone());
        }
        let combine = |coeffs: &[F]| -> Matrix<F> {
            let mut acc = Matrix::zero(self.n);
            for (c, b) in coeffs.iter().zip(&basis) {
                acc = &acc + &b.scale(c);
            }
            acc
        };
        let t = F::from_i64(3);
        let mut moment = Vec::with_capacity(basis.len());
        let mut tk = F::one();
        for _ in 0..basis.len() {
            moment.push(tk.clone());
            tk = tk * t.clone();
        }
        let m = combine(&moment);
        if m.is_invertible() {
            return Some(m);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_9e11);
        for _ in 0..24 {
            let coeffs: Vec<F> = (0..basis.len())
                .map(|_| F::from_i64(rng.gen_range(-1000..=1000)))
                .collect();
            let m = combine(&coeffs);
            if m.is_invertible() {
                return Some(m);
            }
        }
        None
    }
}
