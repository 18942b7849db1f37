use crate::linalg::{Field, LinalgError, Matrix, Scalar};
use crate::report::Report;

#[derive(Debug, thiserror::Error)]
pub enum HopfError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("antipode is not invertible")]
    AntipodeNotInvertible,
    #[error("construction failed: {0}")]
    ConstructionFailure(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A finite dimensional Hopf algebra over a field, given by structure
/// matrices in a fixed basis `e_0, ..., e_{n-1}`.
#[derive(Clone, Debug)]
pub struct ClassicalHopf {
    pub field: Field,
    pub dim: usize,
    /// n x n^2
    pub m: Matrix,
    /// n x 1
    pub u: Matrix,
    /// n^2 x n
    pub delta: Matrix,
    /// 1 x n
    pub eps: Matrix,
    pub s: Matrix,
    pub s_inv: Matrix,
    left: Vec<Matrix>,
}

fn expect_shape(name: &str, m: &Matrix, shape: (usize, usize)) -> Result<(), HopfError> {
    if m.shape() != shape {
        return Err(HopfError::DimensionMismatch(format!(
            "{name} is {}x{}, expected {}x{}",
            m.rows(),
            m.cols(),
            shape.0,
            shape.1
        )));
    }
    Ok(())
}

impl ClassicalHopf {
    pub fn new(m: Matrix, u: Matrix, delta: Matrix, eps: Matrix, s: Matrix) -> Result<ClassicalHopf, HopfError> {
        let n = u.rows();
        expect_shape("m", &m, (n, n * n))?;
        expect_shape("u", &u, (n, 1))?;
        expect_shape("delta", &delta, (n * n, n))?;
        expect_shape("eps", &eps, (1, n))?;
        expect_shape("S", &s, (n, n))?;
        let s_inv = s.inverse().map_err(|_| HopfError::AntipodeNotInvertible)?;
        let field = m.field().clone();
        let left = (0..n).map(|i| Matrix::from_fn(&field, n, n, |r, c| m.get(r, i * n + c).clone())).collect();
        Ok(ClassicalHopf { field, dim: n, m, u, delta, eps, s, s_inv, left })
    }

    pub fn one(&self) -> Matrix {
        self.u.clone()
    }

    pub fn basis(&self, i: usize) -> Matrix {
        Matrix::unit_vector(&self.field, self.dim, i)
    }

    pub fn zero(&self) -> Matrix {
        Matrix::zeros(&self.field, self.dim, 1)
    }

    /// Matrix of `y ↦ x y`.
    pub fn left_mult(&self, x: &Matrix) -> Matrix {
        let f = &self.field;
        let mut acc = Matrix::zeros(f, self.dim, self.dim);
        for (i, l) in self.left.iter().enumerate() {
            let c = x.get(i, 0);
            if !f.is_zero(c) {
                acc = acc.add(&l.scale(c));
            }
        }
        acc
    }

    /// Matrix of `y ↦ y x`.
    pub fn right_mult(&self, x: &Matrix) -> Matrix {
        let cols: Vec<Matrix> = self.left.iter().map(|l| l.mul(x)).collect();
        Matrix::hstack(&cols.iter().collect::<Vec<_>>())
    }

    pub fn mul(&self, x: &Matrix, y: &Matrix) -> Matrix {
        self.left_mult(x).mul(y)
    }

    pub fn mul_all(&self, xs: &[&Matrix]) -> Matrix {
        xs.iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    pub fn pow(&self, x: &Matrix, k: u32) -> Matrix {
        (0..k).fold(self.one(), |acc, _| self.mul(&acc, x))
    }

    pub fn coproduct(&self, x: &Matrix) -> Matrix {
        self.delta.mul(x)
    }

    pub fn counit(&self, x: &Matrix) -> Scalar {
        self.eps.mul(x).get(0, 0).clone()
    }

    pub fn antipode(&self, x: &Matrix) -> Matrix {
        self.s.mul(x)
    }

    /// Product in `H ⊗ H` of two `n^2 x 1` vectors.
    pub fn tensor_mul(&self, x: &Matrix, y: &Matrix) -> Matrix {
        let n = self.dim;
        let f = &self.field;
        let ym = y.reshape(n, n);
        let mut acc = Matrix::zeros(f, n, n);
        for i in 0..n {
            let row = Matrix::from_fn(f, n, 1, |j, _| x.get(i * n + j, 0).clone());
            if row.is_zero() {
                continue;
            }
            let rhs = self.left_mult(&row);
            acc = acc.add(&self.left[i].mul(&ym).mul(&rhs.transpose()));
        }
        acc.reshape(n * n, 1)
    }

    /// Flip of the two legs of an `n^2 x 1` vector.
    pub fn flip(&self, x: &Matrix) -> Matrix {
        let n = self.dim;
        x.reshape(n, n).transpose().reshape(n * n, 1)
    }

    pub fn tensor_one(&self) -> Matrix {
        self.u.kron(&self.u)
    }

    /// Two-sided inverse, if any.
    pub fn inverse(&self, x: &Matrix) -> Option<Matrix> {
        let y = self.left_mult(x).solve(&self.one()).ok()??;
        (self.mul(&y, x) == self.one()).then_some(y)
    }

    pub fn is_central(&self, x: &Matrix) -> bool {
        self.left_mult(x) == self.right_mult(x)
    }

    /// Hopf algebra axioms, each compared as a matrix identity.
    pub fn validate(&self) -> Report {
        let n = self.dim;
        let f = &self.field;
        let id = Matrix::identity(f, n);
        let mut rep = Report::new("Hopf algebra axioms");
        rep.equal("associativity", &self.m.precompose_mid(1, &self.m, n), &self.m.precompose_mid(n, &self.m, 1));
        rep.equal("unit_left", &self.m.precompose_mid(1, &self.u, n), &id);
        rep.equal("unit_right", &self.m.precompose_mid(n, &self.u, 1), &id);
        rep.equal(
            "coassociativity",
            &self.delta.apply_mid(1, n, &self.delta),
            &self.delta.apply_mid(n, 1, &self.delta),
        );
        rep.equal("counit_left", &self.eps.apply_mid(1, n, &self.delta), &id);
        rep.equal("counit_right", &self.eps.apply_mid(n, 1, &self.delta), &id);
        // Δ(xy) = Δ(x)Δ(y) on basis pairs
        let mut lhs = Vec::with_capacity(n * n);
        let mut rhs = Vec::with_capacity(n * n);
        let coprods: Vec<Matrix> = (0..n).map(|i| self.delta.col(i)).collect();
        for i in 0..n {
            for j in 0..n {
                lhs.push(self.delta.mul(&self.m.col(i * n + j)));
                rhs.push(self.tensor_mul(&coprods[i], &coprods[j]));
            }
        }
        rep.equal(
            "bialgebra",
            &Matrix::hstack(&lhs.iter().collect::<Vec<_>>()),
            &Matrix::hstack(&rhs.iter().collect::<Vec<_>>()),
        );
        rep.equal("coproduct_unit", &self.delta.mul(&self.u), &self.tensor_one());
        rep.equal("counit_product", &self.eps.mul(&self.m), &self.eps.kron(&self.eps));
        rep.equal("counit_unit", &self.eps.mul(&self.u), &Matrix::identity(f, 1));
        let ue = self.u.mul(&self.eps);
        rep.equal("antipode_left", &self.m.precompose_mid(1, &self.s, n).mul(&self.delta), &ue);
        rep.equal("antipode_right", &self.m.precompose_mid(n, &self.s, 1).mul(&self.delta), &ue);
        rep.equal("antipode_inverse", &self.s.mul(&self.s_inv), &id);
        rep
    }
}

/// Group algebra `kG` from a multiplication table on `0..n` with identity `0`.
pub fn group_algebra(field: &Field, table: &[Vec<usize>]) -> ClassicalHopf {
    let n = table.len();
    let mut m = Matrix::zeros(field, n, n * n);
    let mut delta = Matrix::zeros(field, n * n, n);
    let mut s = Matrix::zeros(field, n, n);
    for g in 0..n {
        for h in 0..n {
            m.set(table[g][h], g * n + h, field.one());
        }
        delta.set(g * n + g, g, field.one());
        let inv = (0..n).find(|&h| table[g][h] == 0).expect("group element without inverse");
        s.set(inv, g, field.one());
    }
    let u = Matrix::unit_vector(field, n, 0);
    let eps = Matrix::from_fn(field, 1, n, |_, _| field.one());
    ClassicalHopf::new(m, u, delta, eps, s).expect("group algebra")
}
