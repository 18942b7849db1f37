//! Hopf algebras over the ground field: R-matrices, grouplike, pivotal,
//! balanced and ribbon elements, Drinfeld elements and the Drinfeld double.
//! Also serves as the reference implementation for the case `A = k`.

mod double;
mod hopf;

pub use double::drinfeld_double;
pub use hopf::{group_algebra, ClassicalHopf, HopfError};

use crate::linalg::Matrix;
use crate::report::Report;

/// `(R1)`–`(R4)` for `R ∈ H ⊗ H` given as an `n^2 x 1` column.
pub fn check_r(h: &ClassicalHopf, r: &Matrix) -> Report {
    let n = h.dim;
    let mut rep = Report::new("R-matrix axioms");
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..n {
        let d = h.delta.col(i);
        lhs.push(h.tensor_mul(r, &d));
        rhs.push(h.tensor_mul(&h.flip(&d), r));
    }
    rep.equal("R1", &Matrix::hstack(&lhs.iter().collect::<Vec<_>>()), &Matrix::hstack(&rhs.iter().collect::<Vec<_>>()));

    let (r2, r3) = r_products(h, r);
    rep.equal("R2", &h.delta.apply_mid(n, 1, r), &r2);
    rep.equal("R3", &h.delta.apply_mid(1, n, r), &r3);
    rep.equal("R4_right", &h.eps.apply_mid(n, 1, r), &h.one());
    rep.equal("R4_left", &h.eps.apply_mid(1, n, r), &h.one());
    rep
}

/// `R13 R12` and `R13 R23`, the right hand sides of `(R2)` and `(R3)`.
pub fn r_products(h: &ClassicalHopf, r: &Matrix) -> (Matrix, Matrix) {
    let n = h.dim;
    let f = &h.field;
    let nz: Vec<(usize, usize, crate::linalg::Scalar)> = (0..n * n)
        .filter(|k| !f.is_zero(r.get(*k, 0)))
        .map(|k| (k / n, k % n, r.get(k, 0).clone()))
        .collect();
    // (id⊗Δ)R = R_i R_j ⊗ R^j ⊗ R^i
    let mut r2 = Matrix::zeros(f, n * n * n, 1);
    // (Δ⊗id)R = R_i ⊗ R_j ⊗ R^i R^j
    let mut r3 = Matrix::zeros(f, n * n * n, 1);
    for (i, ii, a) in &nz {
        for (j, jj, b) in &nz {
            let c = f.mul(a, b);
            let prod_lower = h.m.col(i * n + j);
            let prod_upper = h.m.col(ii * n + jj);
            for k in 0..n {
                let x = prod_lower.get(k, 0);
                if !f.is_zero(x) {
                    r2.add_at((k * n + jj) * n + ii, 0, &f.mul(&c, x));
                }
                let y = prod_upper.get(k, 0);
                if !f.is_zero(y) {
                    r3.add_at((i * n + j) * n + k, 0, &f.mul(&c, y));
                }
            }
        }
    }
    (r2, r3)
}

pub fn check_grouplike(h: &ClassicalHopf, g: &Matrix) -> Report {
    let mut rep = Report::new("grouplike");
    rep.equal("G1", &h.coproduct(g), &g.kron(g));
    rep.equal("G2", &Matrix::column(&h.field, vec![h.counit(g)]), &Matrix::identity(&h.field, 1));
    rep
}

pub fn check_pivotal(h: &ClassicalHopf, p: &Matrix) -> Report {
    let mut rep = check_grouplike(h, p);
    rep.subject = "pivotal".into();
    let s2 = h.s.mul(&h.s);
    match h.inverse(p) {
        Some(pinv) => {
            rep.equal("P2", &s2, &h.left_mult(&pinv).mul(&h.right_mult(p)));
        }
        None => rep.flag("P2", false, Some("candidate is not invertible".into())),
    }
    rep
}

/// `R21 R` as an `n^2 x 1` column.
pub fn double_braiding_element(h: &ClassicalHopf, r: &Matrix) -> Matrix {
    h.tensor_mul(&h.flip(r), r)
}

pub fn check_balanced(h: &ClassicalHopf, r: &Matrix, t: &Matrix) -> Report {
    let mut rep = Report::new("balanced");
    rep.equal("T1", &h.left_mult(t), &h.right_mult(t));
    rep.equal("T2", &Matrix::column(&h.field, vec![h.counit(t)]), &Matrix::identity(&h.field, 1));
    rep.equal("T3", &h.coproduct(t), &h.tensor_mul(&t.kron(t), &double_braiding_element(h, r)));
    rep
}

pub fn check_ribbon(h: &ClassicalHopf, r: &Matrix, t: &Matrix) -> Report {
    let mut rep = check_balanced(h, r, t);
    rep.subject = "ribbon".into();
    rep.equal("T4", &h.antipode(t), t);
    rep
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrinfeldElements {
    pub u: Matrix,
    pub u_inv: Matrix,
    pub q: Matrix,
    pub c: Matrix,
}

#[derive(Debug, thiserror::Error)]
pub enum ClassicalError {
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

/// `u = R_i S(R^i)`, `u^{-1} = S^2(R_i) R^i`, `q = u S(u)^{-1}`, `c = u S(u)`.
pub fn drinfeld_u_classical(h: &ClassicalHopf, r: &Matrix) -> Result<DrinfeldElements, ClassicalError> {
    let n = h.dim;
    let f = &h.field;
    let s2 = h.s.mul(&h.s);
    let mut u = h.zero();
    let mut u_inv = h.zero();
    for k in 0..n * n {
        let c = r.get(k, 0);
        if f.is_zero(c) {
            continue;
        }
        let (i, j) = (k / n, k % n);
        u = u.add(&h.mul(&h.basis(i), &h.s.col(j)).scale(c));
        u_inv = u_inv.add(&h.mul(&s2.col(i), &h.basis(j)).scale(c));
    }
    if h.mul(&u, &u_inv) != h.one() || h.mul(&u_inv, &u) != h.one() {
        return Err(ClassicalError::InternalInconsistency("u u^{-1} != 1".into()));
    }
    let su = h.antipode(&u);
    let su_inv = h
        .inverse(&su)
        .ok_or_else(|| ClassicalError::InternalInconsistency("S(u) is not invertible".into()))?;
    Ok(DrinfeldElements { q: h.mul(&u, &su_inv), c: h.mul(&u, &su), u, u_inv })
}

#[derive(Clone, Debug)]
pub enum Candidate {
    Pivotal(Matrix),
    Balanced(Matrix),
}

#[derive(Clone, Debug)]
pub struct CorollaryReport {
    pub pivotal: Matrix,
    pub balanced: Matrix,
    /// The image under the bijection passes its predicate.
    pub image_ok: bool,
    pub p_squared_eq_q: bool,
    pub t_minus2_eq_c: bool,
    pub ribbon: bool,
}

impl CorollaryReport {
    /// Both criteria agree with the ribbon predicate.
    pub fn consistent(&self) -> bool {
        self.p_squared_eq_q == self.ribbon && self.t_minus2_eq_c == self.ribbon
    }
}

/// Moves a pivotal or balanced element across `p ↦ u^{-1} p`, `t ↦ u t`
/// and evaluates `p^2 = q`, `t^{-2} = c`.
pub fn corollary_check(h: &ClassicalHopf, r: &Matrix, cand: &Candidate) -> Result<CorollaryReport, ClassicalError> {
    let d = drinfeld_u_classical(h, r)?;
    let (p, t, image_ok) = match cand {
        Candidate::Pivotal(p) => {
            let t = h.mul(&d.u_inv, p);
            let ok = check_balanced(h, r, &t).passed();
            (p.clone(), t, ok)
        }
        Candidate::Balanced(t) => {
            let p = h.mul(&d.u, t);
            let ok = check_pivotal(h, &p).passed();
            (p, t.clone(), ok)
        }
    };
    let p_squared_eq_q = h.mul(&p, &p) == d.q;
    let t_minus2_eq_c = match h.inverse(&t) {
        Some(ti) => h.mul(&ti, &ti) == d.c,
        None => false,
    };
    let ribbon = check_ribbon(h, r, &t).passed();
    Ok(CorollaryReport { pivotal: p, balanced: t, image_ok, p_squared_eq_q, t_minus2_eq_c, ribbon })
}

/// Rank of the Drinfeld map `H* → H, f ↦ (f ⊗ id)(R21 R)`; factorizable iff
/// it equals `dim H`.
pub fn drinfeld_map_rank(h: &ClassicalHopf, r: &Matrix) -> usize {
    let n = h.dim;
    // column f of the map is the f-th row block of R21 R
    double_braiding_element(h, r).reshape(n, n).rank()
}
