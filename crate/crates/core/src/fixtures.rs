//! Small named Hopf algebras and quasitriangular structures used by the
//! examples, the tests and the command line tool.

use std::sync::Arc;

use crate::ambient::{AmbientHopf, VObject};
use crate::classical::{group_algebra, ClassicalHopf};
use crate::coend::CoendData;
use crate::internal::InternalHopf;
use crate::linalg::{Field, Matrix, Scalar};

/// The one-dimensional Hopf algebra `k`.
pub fn ground(field: &Field) -> ClassicalHopf {
    group_algebra(field, &[vec![0]])
}

pub fn cyclic(field: &Field, n: usize) -> ClassicalHopf {
    let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    group_algebra(field, &table)
}

/// `k[Z/2 x Z/2]` with basis `1, g, h, gh`.
pub fn klein(field: &Field) -> ClassicalHopf {
    let table: Vec<Vec<usize>> = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
    group_algebra(field, &table)
}

/// Permutations of three letters, identity first, in lexicographic order.
pub fn s3_elements() -> Vec<[usize; 3]> {
    let mut perms = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                if a != b && b != c && a != c {
                    perms.push([a, b, c]);
                }
            }
        }
    }
    perms
}

/// `kS_3`, with the product `(στ)(i) = σ(τ(i))`.
pub fn symmetric3(field: &Field) -> ClassicalHopf {
    let perms = s3_elements();
    let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    let table: Vec<Vec<usize>> = perms
        .iter()
        .map(|s| perms.iter().map(|t| idx([s[t[0]], s[t[1]], s[t[2]]])).collect())
        .collect();
    group_algebra(field, &table)
}

/// Sweedler's four dimensional algebra, basis `1, g, x, gx`, with
/// `g^2 = 1`, `x^2 = 0`, `xg = -gx`, `Δx = x ⊗ 1 + g ⊗ x`.
pub fn sweedler(field: &Field) -> ClassicalHopf {
    let f = field;
    // basis g^a x^b at index a + 2b
    let mut m = Matrix::zeros(f, 4, 16);
    for i in 0..4 {
        for j in 0..4 {
            let (a, b) = (i % 2, i / 2);
            let (c, d) = (j % 2, j / 2);
            if b + d > 1 {
                continue;
            }
            let sign = if b * c == 1 { -1 } else { 1 };
            m.set((a + c) % 2 + 2 * (b + d), i * 4 + j, f.from_i64(sign));
        }
    }
    let mut delta = Matrix::zeros(f, 16, 4);
    let one = f.one();
    delta.set(0, 0, one.clone());
    delta.set(4 + 1, 1, one.clone());
    // Δx = x⊗1 + g⊗x
    delta.set(2 * 4, 2, one.clone());
    delta.set(4 + 2, 2, one.clone());
    // Δ(gx) = gx⊗g + 1⊗gx
    delta.set(3 * 4 + 1, 3, one.clone());
    delta.set(3, 3, one);
    let u = Matrix::unit_vector(f, 4, 0);
    let eps = Matrix::from_i64(f, 1, 4, &[1, 1, 0, 0]);
    // S(g) = g, S(x) = -gx, S(gx) = x
    let s = Matrix::from_i64(f, 4, 4, &[1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0]);
    ClassicalHopf::new(m, u, delta, eps, s).expect("Sweedler algebra")
}

fn half(field: &Field) -> Scalar {
    field.from_ratio(1, 2).expect("characteristic 2 is not supported here")
}

/// `R = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g)` on `kZ/2`: super vector spaces.
pub fn super_r(field: &Field) -> Matrix {
    Matrix::from_i64(field, 4, 1, &[1, 1, 1, -1]).scale(&half(field))
}

/// `R = (1/n) Σ_{a,b} ζ^{ab} g^a ⊗ g^b` on `kZ/n` for a primitive `n`-th
/// root of unity `ζ`.
pub fn cyclic_r(field: &Field, n: usize, zeta: &Scalar) -> Matrix {
    let inv_n = field.inv(&field.from_i64(n as i64)).expect("n is invertible in the field");
    let mut r = Matrix::zeros(field, n * n, 1);
    for a in 0..n {
        for b in 0..n {
            r.set(a * n + b, 0, field.mul(&inv_n, &field.pow(zeta, (a * b) as u64)));
        }
    }
    r
}

/// `R = 1 ⊗ 1`.
pub fn trivial_r(h: &ClassicalHopf) -> Matrix {
    h.tensor_one()
}

/// The one-parameter family on Sweedler's algebra:
/// `R_α = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g) + α/2 (x⊗x − x⊗gx + gx⊗x + gx⊗gx)`.
pub fn sweedler_r(field: &Field, alpha: &Scalar) -> Matrix {
    let h = half(field);
    let mut r = Matrix::zeros(field, 16, 1);
    for (k, v) in [(0, 1), (1, 1), (4, 1), (5, -1)] {
        r.set(k, 0, field.mul(&h, &field.from_i64(v)));
    }
    let ah = field.mul(alpha, &h);
    for (k, v) in [(2 * 4 + 2, 1), (2 * 4 + 3, -1), (3 * 4 + 2, 1), (3 * 4 + 3, 1)] {
        r.set(k, 0, field.mul(&ah, &field.from_i64(v)));
    }
    r
}

/// Non-symmetric R-matrix on `k[Z/2 x Z/2]` (basis `1, g, h, gh`):
/// `R = e_0 ⊗ 1 + e_1 ⊗ g` with `e_0 = (1+h)/2`, `e_1 = (1−h)/2`.
pub fn klein_r(field: &Field) -> Matrix {
    let hf = half(field);
    let mut r = Matrix::zeros(field, 16, 1);
    // e_0 ⊗ 1 = ½(1⊗1 + h⊗1), e_1 ⊗ g = ½(1⊗g − h⊗g)
    for (k, v) in [(0, 1), (2 * 4, 1), (1, 1), (2 * 4 + 1, -1)] {
        r.set(k, 0, field.mul(&hf, &field.from_i64(v)));
    }
    r
}

/// Vector spaces: `A = k`.
pub fn vec_ambient(field: &Field) -> Arc<AmbientHopf> {
    let h = ground(field);
    let r = h.tensor_one();
    AmbientHopf::new(h, r).unwrap()
}

/// Super vector spaces: `A = kZ/2` with the super R-matrix.
pub fn svec_ambient(field: &Field) -> Arc<AmbientHopf> {
    AmbientHopf::new(cyclic(field, 2), super_r(field)).unwrap()
}

pub fn sweedler_ambient(field: &Field, alpha: &Scalar) -> Arc<AmbientHopf> {
    AmbientHopf::new(sweedler(field), sweedler_r(field, alpha)).unwrap()
}

/// A non-symmetric braided ambient.
pub fn klein_ambient(field: &Field) -> Arc<AmbientHopf> {
    AmbientHopf::new(klein(field), klein_r(field)).unwrap()
}

/// The coend of an ambient, shared.
pub fn coend_of(ambient: &Arc<AmbientHopf>) -> Arc<CoendData> {
    Arc::new(CoendData::build(ambient).expect("fixture ambients have a coend"))
}

/// The exterior algebra on one generator `θ` over super vector spaces
/// (basis `1, θ`): `θ² = 0`, `Δθ = θ⊗1 + 1⊗θ`, `Sθ = −θ`. With `odd = false`
/// the generator is even, and the braided bialgebra axiom fails.
pub fn exterior_line(coend: &Arc<CoendData>, odd: bool) -> InternalHopf {
    let a = &coend.ambient;
    let f = a.field();
    let parity = if odd { -1 } else { 1 };
    let carrier = VObject::from_character(a, &Matrix::from_i64(f, 1, 2, &[1, 1]))
        .unwrap()
        .direct_sum(&VObject::from_character(a, &Matrix::from_i64(f, 1, 2, &[1, parity])).unwrap());
    let m = Matrix::from_i64(f, 2, 4, &[1, 0, 0, 0, 0, 1, 1, 0]);
    let u = Matrix::from_i64(f, 2, 1, &[1, 0]);
    let delta = Matrix::from_i64(f, 4, 2, &[1, 0, 0, 1, 0, 1, 0, 0]);
    let eps = Matrix::from_i64(f, 1, 2, &[1, 0]);
    let s = Matrix::from_i64(f, 2, 2, &[1, 0, 0, -1]);
    InternalHopf::new(coend, carrier, m, u, delta, eps, s).unwrap()
}
