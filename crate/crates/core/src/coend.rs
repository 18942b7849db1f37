//! The coend `C` of the module category on `A*`, its universal coaction,
//! the factorization bijections and the canonical Hopf structure and pairing.

use std::sync::Arc;

use crate::ambient::{AmbientHopf, ModA, VObject};
use crate::category::BraidedRigid;
use crate::linalg::{LinalgError, Matrix};
use crate::report::Report;

#[derive(Debug, thiserror::Error)]
pub enum CoendError {
    #[error("no compatible action on the coend: {0}")]
    NoCoendAction(String),
    #[error("not a natural transformation component: {0}")]
    NotNatural(String),
    #[error("source mismatch: {0}")]
    SourceMismatch(String),
    #[error("structure derivation failed for {0}")]
    StructureDerivationFailure(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Inverts `f ↦ (id ⊗ f) δ_G` and its two-variable analogue, by evaluating
/// at a point `g` of a generator `G` whose coaction at `g` is nondegenerate.
#[derive(Clone, Debug)]
pub struct Factorizer {
    pub dg: usize,
    pub dz: usize,
    /// `g` as a `dG x 1` column.
    pub point: Matrix,
    /// `δ_G: G → G ⊗ Z`
    pub coaction: Matrix,
    /// `σ_{Z,G}: Z ⊗ G → G ⊗ Z`
    pub braid_zg: Matrix,
    p_inv: Matrix,
    w_inv: Matrix,
}

impl Factorizer {
    pub fn new(point: Matrix, coaction: Matrix, braid_zg: Matrix, dz: usize) -> Result<Factorizer, CoendError> {
        let dg = point.rows();
        let p = coaction.mul(&point).reshape(dg, dz);
        let p_inv = p
            .inverse()
            .map_err(|_| CoendError::NotNatural("the coaction at the chosen point is degenerate".into()))?;
        let w = Self::two_point(&coaction, &braid_zg, dz).mul(&point.kron(&point)).reshape(dg * dg, dz * dz);
        let w_inv = w
            .inverse()
            .map_err(|_| CoendError::NotNatural("the two-variable coaction at the chosen point is degenerate".into()))?;
        Ok(Factorizer { dg, dz, point, coaction, braid_zg, p_inv, w_inv })
    }

    /// `(id_G ⊗ σ_{Z,G} ⊗ id_Z)(δ_G ⊗ δ_G): G ⊗ G → G ⊗ G ⊗ Z ⊗ Z`
    pub fn two_point(coaction: &Matrix, braid_zg: &Matrix, dz: usize) -> Matrix {
        let k = coaction.kron(coaction);
        braid_zg.apply_mid(coaction.cols(), dz, &k)
    }

    /// `f: Z → D` from the element `α_G(g) ∈ G ⊗ D` (a `dG·dD x 1` column).
    pub fn factorize1_point(&self, alpha: &Matrix) -> Matrix {
        let dd = alpha.rows() / self.dg;
        self.p_inv.mul(&alpha.reshape(self.dg, dd)).transpose()
    }

    /// `f: Z ⊗ Z → D` from `α_{G,G}(g ⊗ g) ∈ G ⊗ G ⊗ D`.
    pub fn factorize2_point(&self, t: &Matrix) -> Matrix {
        let dd = t.rows() / (self.dg * self.dg);
        self.w_inv.mul(&t.reshape(self.dg * self.dg, dd)).transpose()
    }

    /// `f: Z → D` from the full component `α_G: G → G ⊗ D`, checking that the
    /// component is recovered.
    pub fn factorize1(&self, component: &Matrix) -> Result<Matrix, CoendError> {
        let f = self.factorize1_point(&component.mul(&self.point));
        if sigma1(&f, &self.coaction, self.dg) != *component {
            return Err(CoendError::NotNatural("round trip through the generator differs".into()));
        }
        Ok(f)
    }

    /// `f: Z ⊗ Z → D` from the full component `α_{G,G}`.
    pub fn factorize2(&self, component: &Matrix) -> Result<Matrix, CoendError> {
        let f = self.factorize2_point(&component.mul(&self.point.kron(&self.point)));
        if self.sigma2_generator(&f) != *component {
            return Err(CoendError::NotNatural("round trip through the generator pair differs".into()));
        }
        Ok(f)
    }

    pub fn sigma2_generator(&self, f: &Matrix) -> Matrix {
        let two = Self::two_point(&self.coaction, &self.braid_zg, self.dz);
        f.apply_mid(self.dg * self.dg, 1, &two)
    }
}

/// `(id_X ⊗ f) δ_X`
pub fn sigma1(f: &Matrix, coaction: &Matrix, dx: usize) -> Matrix {
    f.apply_mid(dx, 1, coaction)
}

/// The coend with its derived structure.
#[derive(Clone, Debug)]
pub struct CoendData {
    pub ambient: Arc<AmbientHopf>,
    pub cat: ModA,
    pub obj: VObject,
    pub m: Matrix,
    pub u: Matrix,
    pub delta: Matrix,
    pub eps: Matrix,
    pub s: Matrix,
    pub s_inv: Matrix,
    pub omega: Matrix,
    pub omega_bar: Matrix,
    pub omega_under: Matrix,
    pub factorizer: Factorizer,
}

/// `δ_X(x) = Σ_i x·a_i ⊗ a^i` as a `(d n) x d` matrix.
pub fn universal_coaction(x: &VObject) -> Matrix {
    let n = x.ambient().dim();
    let d = x.dim();
    Matrix::from_fn(x.field(), d * n, d, |row, c| x.rho()[row % n].get(row / n, c).clone())
}

/// Action on `A*` with `(ξ·b)(c) = ξ(b_2 c S^{-1}(b_1))`.
fn coend_action(a: &Arc<AmbientHopf>) -> Vec<Matrix> {
    let h = &a.hopf;
    let f = &h.field;
    let n = h.dim;
    let sinv_cols: Vec<Matrix> = (0..n).map(|i| h.s_inv.col(i)).collect();
    (0..n)
        .map(|k| {
            let mut t = Matrix::zeros(f, n, n);
            for ij in 0..n * n {
                let coef = h.delta.get(ij, k);
                if f.is_zero(coef) {
                    continue;
                }
                let (i, j) = (ij / n, ij % n);
                for c in 0..n {
                    let v = h.mul(&h.mul(&h.basis(j), &h.basis(c)), &sinv_cols[i]).scale(coef);
                    for r in 0..n {
                        t.add_at(r, c, v.get(r, 0));
                    }
                }
            }
            t.transpose()
        })
        .collect()
}

/// Solves for the coend action as the unique one making `δ_A` `A`-linear;
/// used to cross-check the closed form.
pub fn coend_action_by_solve(a: &Arc<AmbientHopf>) -> Result<Vec<Matrix>, CoendError> {
    let h = &a.hopf;
    let f = &h.field;
    let n = h.dim;
    let reg = VObject::regular(a);
    let delta_a = universal_coaction(&reg);
    // unknown ρ_C(a_q)[s, t] at index q n^2 + s n + t
    let nu = n * n * n;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for k in 0..n {
        // δ_A ρ_A(a_k) = Σ Δ_k[p,q] (ρ_A(a_p) ⊗ ρ_C(a_q)) δ_A
        let lhs = delta_a.mul(&reg.rho()[k]);
        for out in 0..n * n {
            for col in 0..n {
                let mut row = vec![f.zero(); nu];
                let (xo, so) = (out / n, out % n);
                for pq in 0..n * n {
                    let c = h.delta.get(pq, k);
                    if f.is_zero(c) {
                        continue;
                    }
                    let (p, qq) = (pq / n, pq % n);
                    for xi in 0..n {
                        let rp = reg.rho()[p].get(xo, xi);
                        if f.is_zero(rp) {
                            continue;
                        }
                        for t in 0..n {
                            let d = delta_a.get(xi * n + t, col);
                            if f.is_zero(d) {
                                continue;
                            }
                            let idx = qq * n * n + so * n + t;
                            row[idx] = f.add(&row[idx], &f.mul(&f.mul(c, rp), d));
                        }
                    }
                }
                rows.push(row);
                rhs.push(lhs.get(out, col).clone());
            }
        }
    }
    let sys = Matrix::from_rows(f, rows)?;
    let sol = sys
        .solve_affine(&Matrix::column(f, rhs))?
        .ok_or_else(|| CoendError::NoCoendAction("inconsistent linear system".into()))?;
    if !sol.kernel.is_empty() {
        return Err(CoendError::NoCoendAction("action not unique".into()));
    }
    let x = sol.particular;
    Ok((0..n).map(|q| Matrix::from_fn(f, n, n, |s, t| x.get(q * n * n + s * n + t, 0).clone())).collect())
}

impl CoendData {
    /// Builds `C` and derives its Hopf algebra structure and pairings.
    pub fn build(ambient: &Arc<AmbientHopf>) -> Result<CoendData, CoendError> {
        let cat = ModA(ambient.clone());
        let h = &ambient.hopf;
        let n = h.dim;
        let obj = VObject::new(ambient, coend_action(ambient)).map_err(|e| CoendError::NoCoendAction(e.to_string()))?;
        let reg = cat.regular();
        let delta_a = universal_coaction(&reg);
        if cat.morphism_witness(&delta_a, &reg, &cat.tensor(&reg, &obj)).is_some() {
            return Err(CoendError::NoCoendAction("δ_A is not A-linear".into()));
        }
        let factorizer = Factorizer::new(h.one(), delta_a.clone(), cat.braid(&obj, &reg), n)?;

        let eps = factorizer.factorize1_point(&h.one());
        let u = universal_coaction(&cat.unit());
        let d1 = delta_a.mul(&h.one());
        let delta = factorizer.factorize1_point(&delta_a.apply_mid(1, n, &d1));
        let aa = cat.tensor(&reg, &reg);
        let one2 = h.one().kron(&h.one());
        let m = factorizer.factorize2_point(&universal_coaction(&aa).mul(&one2));
        let sigma = cat.braid(&reg, &reg);
        let omega = factorizer.factorize2_point(&sigma.mul(&sigma).mul(&one2));
        let s = solve_antipode(&m, &u, &delta, &eps)?;
        let s_inv = s.inverse().map_err(|_| CoendError::StructureDerivationFailure("antipode inverse".into()))?;
        let omega_bar = omega.precompose_mid(1, &s, n);
        let omega_under = omega.precompose_mid(1, &s_inv, n);
        Ok(CoendData {
            ambient: ambient.clone(),
            cat,
            obj,
            m,
            u,
            delta,
            eps,
            s,
            s_inv,
            omega,
            omega_bar,
            omega_under,
            factorizer,
        })
    }

    pub fn dim(&self) -> usize {
        self.obj.dim()
    }

    pub fn coaction(&self, x: &VObject) -> Matrix {
        universal_coaction(x)
    }

    /// `Σ(f)_X = (id_X ⊗ f) δ_X`
    pub fn sigma1(&self, f: &Matrix, x: &VObject) -> Matrix {
        sigma1(f, &universal_coaction(x), x.dim())
    }

    /// `(id ⊗ f)(id ⊗ σ_{C,Y} ⊗ id)(δ_X ⊗ δ_Y)`
    pub fn sigma2(&self, f: &Matrix, x: &VObject, y: &VObject) -> Matrix {
        let two = two_variable_coaction(&self.cat, &self.obj, x, y);
        f.apply_mid(x.dim() * y.dim(), 1, &two)
    }

    /// `f: C → D` from the regular component `α_A: A → A ⊗ D`.
    pub fn factorize1(&self, component: &Matrix) -> Result<Matrix, CoendError> {
        self.factorizer.factorize1(component)
    }

    /// `f: C ⊗ C → D` from the component `α_{A,A}: A ⊗ A → A ⊗ A ⊗ D`.
    pub fn factorize2(&self, component: &Matrix) -> Result<Matrix, CoendError> {
        self.factorizer.factorize2(component)
    }

    /// Defining properties of the derived structure.
    pub fn validate(&self) -> Report {
        let cat = &self.cat;
        let f = self.ambient.field();
        let n = self.dim();
        let c = &self.obj;
        let one = cat.unit();
        let mut rep = Report::new("coend");
        let hopf = crate::internal::hopf_in_v_report(
            cat, c, &self.m, &self.u, &self.delta, &self.eps, &self.s, &self.s_inv,
        );
        rep.extend("", hopf);
        // counit of the coaction on sampled objects
        let reg = cat.regular();
        let samples = [reg.clone(), one.clone(), cat.tensor(&reg, &reg), cat.left_dual(&reg), c.clone()];
        for (i, x) in samples.iter().enumerate() {
            let d = x.dim();
            rep.equal(&format!("coaction_counit[{i}]"), &self.sigma1(&self.eps, x), &Matrix::identity(f, d));
            let dx = universal_coaction(x);
            rep.flag(
                &format!("coaction_morphism[{i}]"),
                cat.morphism_witness(&dx, x, &cat.tensor(x, c)).is_none(),
                None,
            );
        }
        // naturality along left multiplications A → A and ε: A → 1
        let h = &self.ambient.hopf;
        let delta_a = universal_coaction(&reg);
        for k in 0..n.min(h.dim) {
            let lk = h.left_mult(&h.basis(k));
            rep.equal(
                &format!("coaction_natural[left_mult {k}]"),
                &lk.kron(&Matrix::identity(f, n)).mul(&delta_a),
                &delta_a.mul(&lk),
            );
        }
        rep.equal(
            "coaction_natural[counit]",
            &h.eps.kron(&Matrix::identity(f, n)).mul(&delta_a),
            &universal_coaction(&one).mul(&h.eps),
        );
        // δ_C = (id ⊗ m)(σ_{C,C} ⊗ id)(S ⊗ Δ)Δ
        let sigma_cc = cat.braid(c, c);
        let id = Matrix::identity(f, n);
        let rhs = self.m.apply_mid(n, 1, &sigma_cc.apply_mid(1, n, &self.s.kron(&self.delta).mul(&self.delta)));
        rep.equal("self_coaction", &universal_coaction(c), &rhs);
        // pairing axioms
        let w = &self.omega;
        let w_mid = w.apply_mid(1, 1, &id.kron(w).kron(&id));
        rep.equal("pairing_product_left", &w.mul(&self.m.kron(&id)), &w_mid.mul(&id.kron(&id).kron(&self.delta)));
        rep.equal("pairing_product_right", &w.mul(&id.kron(&self.m)), &w_mid.mul(&self.delta.kron(&id).kron(&id)));
        rep.equal("pairing_unit_left", &w.mul(&self.u.kron(&id)), &self.eps);
        rep.equal("pairing_unit_right", &w.mul(&id.kron(&self.u)), &self.eps);
        // ω̄ = ω(S⊗id) = ω(id⊗S^{-1})σ̄, ω̲ = ω(S^{-1}⊗id) = ω(S⊗id)σ
        let sigma_rev = cat.braid_rev(c, c);
        rep.equal("omega_bar_alt", &self.omega_bar, &w.mul(&id.kron(&self.s_inv)).mul(&sigma_rev));
        rep.equal("omega_under_alt", &self.omega_under, &w.mul(&self.s.kron(&id)).mul(&sigma_cc));
        // (ω ⊗ ω̲)(id ⊗ σ ⊗ id)(Δ ⊗ Δ) = ε ⊗ ε
        let dd = sigma_cc.apply_mid(n, n, &self.delta.kron(&self.delta));
        let ee = self.eps.kron(&self.eps);
        rep.equal("omega_under_convolution_left", &w.kron(&self.omega_under).mul(&dd), &ee);
        rep.equal("omega_under_convolution_right", &self.omega_under.kron(w).mul(&dd), &ee);
        rep
    }
}

/// `(id_X ⊗ σ_{C,Y} ⊗ id_C)(δ_X ⊗ δ_Y)`
pub fn two_variable_coaction(cat: &ModA, c: &VObject, x: &VObject, y: &VObject) -> Matrix {
    let k = universal_coaction(x).kron(&universal_coaction(y));
    cat.braid(c, y).apply_mid(x.dim(), c.dim(), &k)
}

/// The unique `S` with `m(S ⊗ id)Δ = u ε`.
fn solve_antipode(m: &Matrix, u: &Matrix, delta: &Matrix, eps: &Matrix) -> Result<Matrix, CoendError> {
    let f = m.field().clone();
    let n = u.rows();
    let mut sys = Matrix::zeros(&f, n * n, n * n);
    for c in 0..n {
        for pq in 0..n * n {
            let d = delta.get(pq, c);
            if f.is_zero(d) {
                continue;
            }
            let (p, q) = (pq / n, pq % n);
            for o in 0..n {
                for r in 0..n {
                    let mv = m.get(o, r * n + q);
                    if !f.is_zero(mv) {
                        sys.add_at(o * n + c, r * n + p, &f.mul(d, mv));
                    }
                }
            }
        }
    }
    let rhs = u.mul(eps).reshape(n * n, 1);
    let sol = sys
        .solve_affine(&rhs)?
        .ok_or_else(|| CoendError::StructureDerivationFailure("antipode".into()))?;
    if !sol.kernel.is_empty() {
        return Err(CoendError::StructureDerivationFailure("antipode is not unique".into()));
    }
    Ok(sol.particular.reshape(n, n))
}
