use std::fmt;

use super::{Field, LinalgError, Scalar};

/// Dense row-major matrix over an exact field.
#[derive(Clone, Debug)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}
impl Eq for Matrix {}

/// General solution `particular + span(kernel)` of `A x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Matrix,
    pub kernel: Vec<Matrix>,
}

fn dim_err(what: &str, a: (usize, usize), b: (usize, usize)) -> LinalgError {
    LinalgError::DimensionMismatch(format!("{what}: {}x{} vs {}x{}", a.0, a.1, b.0, b.1))
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(field: &Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field: field.clone(), rows, cols, data }
    }

    pub fn from_vec(field: &Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Matrix, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        for s in &data {
            field.check(s)?;
        }
        Ok(Matrix { field: field.clone(), rows, cols, data })
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(LinalgError::DimensionMismatch("ragged rows".into()));
        }
        Matrix::from_vec(field, r, c, rows.into_iter().flatten().collect())
    }

    /// Integer entries, handy for fixtures.
    pub fn from_i64(field: &Field, rows: usize, cols: usize, vals: &[i64]) -> Matrix {
        assert_eq!(vals.len(), rows * cols, "wrong number of entries");
        Matrix { field: field.clone(), rows, cols, data: vals.iter().map(|v| field.from_i64(*v)).collect() }
    }

    pub fn column(field: &Field, entries: Vec<Scalar>) -> Matrix {
        let n = entries.len();
        Matrix { field: field.clone(), rows: n, cols: 1, data: entries }
    }

    /// Standard basis column `e_i` of length `n`.
    pub fn unit_vector(field: &Field, n: usize, i: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, 1);
        m.data[i] = field.one();
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }
    pub fn data(&self) -> &[Scalar] {
        &self.data
    }
    pub fn into_data(self) -> Vec<Scalar> {
        self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    /// `self[i,j] += v`
    pub fn add_at(&mut self, i: usize, j: usize, v: &Scalar) {
        let k = i * self.cols + j;
        self.data[k] = self.field.add(&self.data[k], v);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(&self.field, self.rows)
    }

    pub fn col(&self, j: usize) -> Matrix {
        Matrix::from_fn(&self.field, self.rows, 1, |i, _| self.get(i, j).clone())
    }

    pub fn row(&self, i: usize) -> Matrix {
        Matrix::from_fn(&self.field, 1, self.cols, |_, j| self.get(i, j).clone())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Row-major reshape.
    pub fn reshape(&self, rows: usize, cols: usize) -> Matrix {
        assert_eq!(rows * cols, self.data.len(), "reshape changes the number of entries");
        Matrix { field: self.field.clone(), rows, cols, data: self.data.clone() }
    }

    /// The first entry where the two matrices differ.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize)> {
        if self.shape() != other.shape() {
            return Some((0, 0));
        }
        (0..self.data.len()).find(|&k| self.data[k] != other.data[k]).map(|k| (k / self.cols, k % self.cols))
    }

    fn same_field(&self, other: &Matrix) -> Result<(), LinalgError> {
        if self.field != other.field {
            Err(LinalgError::FieldMismatch)
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.same_field(other)?;
        if self.shape() != other.shape() {
            return Err(dim_err("add", self.shape(), other.shape()));
        }
        let f = &self.field;
        Ok(Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.try_add(other).expect("matrix add")
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Matrix {
        self.map(|f, x| f.neg(x))
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        self.map(|f, x| f.mul(s, x))
    }

    pub fn map(&self, g: impl Fn(&Field, &Scalar) -> Scalar) -> Matrix {
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| g(&self.field, x)).collect(),
        }
    }

    /// `self * other`, i.e. `self` after `other`.
    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(dim_err("mul", self.shape(), other.shape()));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if f.is_zero(a) {
                    continue;
                }
                let orow = &other.data[k * other.cols..(k + 1) * other.cols];
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, b) in dst.iter_mut().zip(orow) {
                    if !f.is_zero(b) {
                        *d = f.add(d, &f.mul(a, b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.try_mul(other).unwrap_or_else(|e| panic!("matrix mul: {e}"))
    }

    /// Kronecker product, block `(i,j)` is `self[i,j] * other`.
    pub fn try_kron(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.same_field(other)?;
        let f = &self.field;
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Matrix::zeros(f, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if f.is_zero(a) {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !f.is_zero(b) {
                            out.data[(i * other.rows + k) * c + j * other.cols + l] = f.mul(a, b);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        self.try_kron(other).unwrap_or_else(|e| panic!("kron: {e}"))
    }

    /// Kronecker product of a list, left to right.
    pub fn kron_all(field: &Field, factors: &[&Matrix]) -> Matrix {
        factors.iter().fold(Matrix::identity(field, 1), |acc, m| acc.kron(m))
    }

    /// `(a ⊗ b) * self` without forming the Kronecker product. `self` has
    /// `a.cols * b.cols` rows; each column is treated as an `a.cols x b.cols`
    /// block and mapped to `a X b^T`.
    pub fn kron_apply(a: &Matrix, b: &Matrix, v: &Matrix) -> Matrix {
        assert_eq!(v.rows, a.cols * b.cols, "kron_apply dimension mismatch");
        let f = &v.field;
        let mut out = Matrix::zeros(f, a.rows * b.rows, v.cols);
        for col in 0..v.cols {
            let x = Matrix::from_fn(f, a.cols, b.cols, |i, j| v.get(i * b.cols + j, col).clone());
            let y = a.mul(&x).mul(&b.transpose());
            for (k, s) in y.data.into_iter().enumerate() {
                out.data[k * v.cols + col] = s;
            }
        }
        out
    }

    pub fn hstack(parts: &[&Matrix]) -> Matrix {
        let f = parts[0].field.clone();
        let rows = parts[0].rows;
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(&f, rows, cols);
        let mut off = 0;
        for m in parts {
            assert_eq!(m.rows, rows, "hstack row mismatch");
            for i in 0..rows {
                for j in 0..m.cols {
                    out.data[i * cols + off + j] = m.get(i, j).clone();
                }
            }
            off += m.cols;
        }
        out
    }

    pub fn vstack(parts: &[&Matrix]) -> Matrix {
        let f = parts[0].field.clone();
        let cols = parts[0].cols;
        let mut data = Vec::new();
        for m in parts {
            assert_eq!(m.cols, cols, "vstack column mismatch");
            data.extend(m.data.iter().cloned());
        }
        let rows = data.len() / cols.max(1);
        Matrix { field: f, rows, cols, data }
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else { continue };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("nonzero pivot");
            for j in c..m.cols {
                let k = r * m.cols + j;
                m.data[k] = f.mul(&m.data[k], &inv);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for j in c..m.cols {
                    let pv = &m.data[r * m.cols + j];
                    if f.is_zero(pv) {
                        continue;
                    }
                    let t = f.mul(&factor, pv);
                    let k = i * m.cols + j;
                    m.data[k] = f.sub(&m.data[k], &t);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel, as columns.
    pub fn nullspace(&self) -> Vec<Matrix> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = Matrix::zeros(f, self.cols, 1);
                v.data[fc] = f.one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v.data[pc] = f.neg(r.get(row, fc));
                }
                v
            })
            .collect()
    }

    /// All solutions of `self * x = b` (`b` a single column), or `None`.
    pub fn solve_affine(&self, b: &Matrix) -> Result<Option<AffineSolution>, LinalgError> {
        self.same_field(b)?;
        if b.rows != self.rows || b.cols != 1 {
            return Err(dim_err("solve_affine", self.shape(), b.shape()));
        }
        let f = &self.field;
        let aug = Matrix::hstack(&[self, b]);
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(f, self.cols, 1);
        for (row, &pc) in pivots.iter().enumerate() {
            x.data[pc] = r.get(row, self.cols).clone();
        }
        Ok(Some(AffineSolution { particular: x, kernel: self.nullspace() }))
    }

    /// One solution of `self * X = b` for a matrix right-hand side (free
    /// variables set to zero), or `None`.
    pub fn solve(&self, b: &Matrix) -> Result<Option<Matrix>, LinalgError> {
        self.same_field(b)?;
        if b.rows != self.rows {
            return Err(dim_err("solve", self.shape(), b.shape()));
        }
        let f = &self.field;
        let aug = Matrix::hstack(&[self, b]);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(f, self.cols, b.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.data[pc * b.cols + j] = r.get(row, self.cols + j).clone();
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if self.rows != self.cols {
            return Err(dim_err("inverse", self.shape(), self.shape()));
        }
        let n = self.rows;
        let aug = Matrix::hstack(&[self, &Matrix::identity(&self.field, n)]);
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(LinalgError::NotInvertible);
        }
        Ok(Matrix::from_fn(&self.field, n, n, |i, j| r.get(i, n + j).clone()))
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).fold(self.field.zero(), |acc, i| self.field.add(&acc, self.get(i, i)))
    }

    /// Rows of formatted entries, the shape used by bundles and JSON reports.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.field.format(self.get(i, j))).collect()).collect()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.to_strings();
        let w = rows.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        for r in rows {
            let line: Vec<String> = r.iter().map(|s| format!("{s:>w$}")).collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}

impl std::ops::Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        Matrix::mul(self, rhs)
    }
}

impl std::ops::Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        Matrix::add(self, rhs)
    }
}

impl std::ops::Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        Matrix::sub(self, rhs)
    }
}

impl Matrix {
    /// `(id_outer ⊗ self ⊗ id_inner) * v` where the rows of `v` are indexed
    /// by `(o, c, i)` with `c < self.cols`. The columns of `v` ride along.
    pub fn apply_mid(&self, outer: usize, inner: usize, v: &Matrix) -> Matrix {
        assert_eq!(v.rows, outer * self.cols * inner, "apply_mid dimension mismatch");
        let f = &self.field;
        let w = inner * v.cols;
        let mut out = Matrix::zeros(f, outer * self.rows * inner, v.cols);
        for o in 0..outer {
            for c in 0..self.cols {
                let src = &v.data[(o * self.cols + c) * w..(o * self.cols + c + 1) * w];
                if src.iter().all(|x| f.is_zero(x)) {
                    continue;
                }
                for r in 0..self.rows {
                    let a = self.get(r, c);
                    if f.is_zero(a) {
                        continue;
                    }
                    let base = (o * self.rows + r) * w;
                    for (k, s) in src.iter().enumerate() {
                        if !f.is_zero(s) {
                            out.data[base + k] = f.add(&out.data[base + k], &f.mul(a, s));
                        }
                    }
                }
            }
        }
        out
    }

    /// `self * (id_outer ⊗ g ⊗ id_inner)`: precomposition on one tensor slot.
    pub fn precompose_mid(&self, outer: usize, g: &Matrix, inner: usize) -> Matrix {
        g.transpose().apply_mid(outer, inner, &self.transpose()).transpose()
    }
}
