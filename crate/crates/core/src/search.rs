//! Search for special elements: linear axioms cut out an affine subspace of
//! `Hom_V(C, H)` (or `Hom_V(C⊗C, H⊗H)`), the remaining quadratic axioms are
//! resolved by enumeration over a prime field.

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::ambient::{ModA, VObject};
use crate::category::BraidedRigid;
use crate::classical::{
    check_balanced, check_grouplike, check_pivotal, check_r, check_ribbon, double_braiding_element, r_products,
    ClassicalHopf,
};
use crate::elements::ElementError;
use crate::internal::{BraidedModules, InternalError, InternalHopf};
use crate::linalg::{Field, FieldKind, LinalgError, Matrix, Scalar};
use crate::report::Report;

/// Equations for `f ρ_X(a_k) = ρ_Y(a_k) f`, one row per `(k, i, j)`, in the
/// unknowns `f[p, q]` flattened row-major.
pub fn linearity_system(cat: &ModA, x: &VObject, y: &VObject) -> Matrix {
    let f = x.field();
    let (dx, dy) = (x.dim(), y.dim());
    let n = cat.0.dim();
    let mut sys = Matrix::zeros(f, n * dy * dx, dy * dx);
    for k in 0..n {
        let (rx, ry) = (&x.rho()[k], &y.rho()[k]);
        for i in 0..dy {
            for j in 0..dx {
                let row = (k * dy + i) * dx + j;
                for q in 0..dx {
                    let c = rx.get(q, j);
                    if !f.is_zero(c) {
                        sys.add_at(row, i * dx + q, c);
                    }
                }
                for p in 0..dy {
                    let c = ry.get(i, p);
                    if !f.is_zero(c) {
                        sys.add_at(row, p * dx + j, &f.neg(c));
                    }
                }
            }
        }
    }
    sys
}

/// A basis of `Hom_V(X, Y)`.
pub fn hom_basis(cat: &ModA, x: &VObject, y: &VObject) -> Vec<Matrix> {
    linearity_system(cat, x, y)
        .nullspace()
        .into_iter()
        .map(|v| v.reshape(y.dim(), x.dim()))
        .collect()
}

/// What to search for. The `Classical*` kinds work on an ordinary Hopf
/// algebra; the others on a Hopf algebra in the base category.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Central,
    Grouplike,
    TwistedGrouplike,
    Pivotal,
    Balanced,
    Ribbon,
    RMatrix,
    ClassicalCentral,
    ClassicalGrouplike,
    ClassicalPivotal,
    ClassicalBalanced,
    ClassicalRibbon,
    ClassicalRMatrix,
}

impl Kind {
    pub const ALL: [Kind; 13] = [
        Kind::Central,
        Kind::Grouplike,
        Kind::TwistedGrouplike,
        Kind::Pivotal,
        Kind::Balanced,
        Kind::Ribbon,
        Kind::RMatrix,
        Kind::ClassicalCentral,
        Kind::ClassicalGrouplike,
        Kind::ClassicalPivotal,
        Kind::ClassicalBalanced,
        Kind::ClassicalRibbon,
        Kind::ClassicalRMatrix,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Central => "central",
            Kind::Grouplike => "grouplike",
            Kind::TwistedGrouplike => "twisted_grouplike",
            Kind::Pivotal => "pivotal",
            Kind::Balanced => "balanced",
            Kind::Ribbon => "ribbon",
            Kind::RMatrix => "r_matrix",
            Kind::ClassicalCentral => "classical_central",
            Kind::ClassicalGrouplike => "classical_grouplike",
            Kind::ClassicalPivotal => "classical_pivotal",
            Kind::ClassicalBalanced => "classical_balanced",
            Kind::ClassicalRibbon => "classical_ribbon",
            Kind::ClassicalRMatrix => "classical_r_matrix",
        }
    }

    pub fn is_classical(self) -> bool {
        self >= Kind::ClassicalCentral
    }

    /// Balanced and ribbon elements are relative to an R-matrix.
    pub fn needs_r_matrix(self) -> bool {
        matches!(self, Kind::Balanced | Kind::Ribbon | Kind::ClassicalBalanced | Kind::ClassicalRibbon)
    }

    /// The classical counterpart of a kind, for `A = k` comparisons.
    pub fn classical(self) -> Kind {
        match self {
            Kind::Central => Kind::ClassicalCentral,
            Kind::Grouplike | Kind::TwistedGrouplike => Kind::ClassicalGrouplike,
            Kind::Pivotal => Kind::ClassicalPivotal,
            Kind::Balanced => Kind::ClassicalBalanced,
            Kind::Ribbon => Kind::ClassicalRibbon,
            Kind::RMatrix => Kind::ClassicalRMatrix,
            k => k,
        }
    }
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Kind {
    type Err = SearchError;
    fn from_str(s: &str) -> Result<Kind, SearchError> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| SearchError::UnknownKind(s.to_string()))
    }
}

#[derive(Clone, Debug)]
pub enum Instance {
    /// A Hopf algebra in the base category, with an R-matrix when the kind
    /// needs one.
    Coend { hopf: Arc<InternalHopf>, braided: Option<BraidedModules> },
    Classical { hopf: ClassicalHopf, r: Option<Matrix> },
}

#[derive(Clone, Debug)]
pub enum Strategy {
    AffineThenEnumerate,
    EnumerateAll,
    VerifyCandidates(Vec<Matrix>),
}

#[derive(Clone, Debug)]
pub struct SearchSpec {
    pub kind: Kind,
    pub instance: Instance,
    pub strategy: Strategy,
}

#[derive(Debug, thiserror::Error)]
pub enum SearchError {
    #[error("search space of dimension {dim} exceeds the limit {limit}")]
    SearchSpaceTooLarge { dim: usize, limit: usize },
    #[error("enumeration needs a prime field, got {0}")]
    NotPrimeField(String),
    #[error("kind {0} needs an R-matrix")]
    MissingRMatrix(Kind),
    #[error("kind {kind} does not apply to this instance: {reason}")]
    InstanceMismatch { kind: Kind, reason: String },
    #[error("unknown kind {0:?}")]
    UnknownKind(String),
    #[error("axiom {0} is not of degree at most two in the unknown")]
    NotQuadratic(String),
    #[error("enumeration hit fails the full predicate: {0}")]
    Leak(String),
    #[error(transparent)]
    Element(#[from] ElementError),
    #[error(transparent)]
    Internal(#[from] InternalError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Largest affine dimension [`enumerate`] will scan.
pub const ENUMERATION_LIMIT: usize = 12;
/// Largest ambient dimension [`oracle_enumerate_all`] will scan.
pub const ORACLE_LIMIT: usize = 9;

/// The affine part of a search: solutions of the linear axioms are
/// `particular + span(directions)`.
#[derive(Clone, Debug)]
pub struct AffineSystem {
    /// Dimension of the parameter space the system lives in.
    pub parameter_dim: usize,
    /// `None` when the linear axioms have no common solution.
    pub particular: Option<Matrix>,
    pub directions: Vec<Matrix>,
    pub linear_axioms: Vec<&'static str>,
    pub residual_axioms: Vec<&'static str>,
}

/// A found element with the report of its full predicate.
#[derive(Clone, Debug)]
pub struct Hit {
    pub element: Matrix,
    pub report: Report,
}

type Eval = Box<dyn Fn(&Matrix) -> Matrix + Send + Sync>;
type Verify = Box<dyn Fn(&Matrix) -> Result<Report, SearchError> + Send + Sync>;

/// One search problem: the parameter space, the axioms split by degree and
/// the full predicate.
struct Problem {
    field: Field,
    shape: (usize, usize),
    space: Vec<Matrix>,
    in_space: Box<dyn Fn(&Matrix) -> bool + Send + Sync>,
    linear: Vec<(&'static str, Eval)>,
    residual: Vec<(&'static str, Eval)>,
    verify: Verify,
}

fn flat(m: &Matrix) -> Matrix {
    let (r, c) = m.shape();
    m.reshape(r * c, 1)
}

fn standard_basis(field: &Field, n: usize) -> Vec<Matrix> {
    (0..n).map(|i| Matrix::unit_vector(field, n, i)).collect()
}

fn problem(spec_kind: Kind, instance: &Instance) -> Result<Problem, SearchError> {
    match instance {
        Instance::Coend { hopf, braided } => {
            if spec_kind.is_classical() {
                return Err(SearchError::InstanceMismatch {
                    kind: spec_kind,
                    reason: "classical kinds need a classical Hopf algebra".into(),
                });
            }
            coend_problem(spec_kind, hopf, braided.as_ref())
        }
        Instance::Classical { hopf, r } => {
            if !spec_kind.is_classical() {
                return Err(SearchError::InstanceMismatch {
                    kind: spec_kind,
                    reason: "needs a Hopf algebra in the base category".into(),
                });
            }
            classical_problem(spec_kind, hopf, r.as_ref())
        }
    }
}

fn coend_problem(kind: Kind, h: &Arc<InternalHopf>, bm: Option<&BraidedModules>) -> Result<Problem, SearchError> {
    let f = h.field().clone();
    let cat = h.cat().clone();
    let (nh, nc) = (h.dim(), h.coend.dim());
    let fa = h.free_regular();
    let ff = h.free_pair();
    let g = h.free_point();
    let gg = g.kron(&g);
    let one = Matrix::identity(&f, 1);
    let need_bm = || bm.cloned().ok_or(SearchError::MissingRMatrix(kind));

    if kind == Kind::RMatrix {
        let bm = bm.cloned().unwrap_or(BraidedModules::new(h, Matrix::zeros(&f, nh * nh, nc * nc))?);
        let cc = cat.tensor(&h.coend.obj, &h.coend.obj);
        let hh = cat.tensor(&h.carrier, &h.carrier);
        let space = hom_basis(&cat, &cc, &hh);
        let unit = h.trivial_module();
        let d = fa.dim();
        let id = Matrix::identity(&f, d);
        let ggg = gg.kron(&g);
        let id3 = Matrix::identity(&f, d * d * d);
        let mut linear: Vec<(&'static str, Eval)> = Vec::new();
        let (b, m, n) = (bm.clone(), fa.clone(), ff.clone());
        let id_h = Matrix::identity(&f, nh);
        linear.push((
            "module_map",
            Box::new(move |r| {
                let s = b.braid_with(r, &m, &m);
                s.mul(&n.r).sub(&n.r.mul(&s.kron(&id_h)))
            }),
        ));
        let (b, m, u, i) = (bm.clone(), fa.clone(), unit.clone(), id.clone());
        linear.push(("unit_left", Box::new(move |r| b.braid_with(r, &u, &m).sub(&i))));
        let (b, m, u, i) = (bm.clone(), fa.clone(), unit, id);
        linear.push(("unit_right", Box::new(move |r| b.braid_with(r, &m, &u).sub(&i))));
        let mut residual: Vec<(&'static str, Eval)> = Vec::new();
        let (b, m, n, v, i3) = (bm.clone(), fa.clone(), ff.clone(), ggg.clone(), id3.clone());
        residual.push((
            "hexagon_1",
            Box::new(move |r| {
                let s = b.braid_with(r, &m, &m);
                let rhs = s.apply_mid(d, 1, &s.apply_mid(1, d, &i3));
                b.braid_with(r, &m, &n).sub(&rhs).mul(&v)
            }),
        ));
        let (b, m, n, v, i3) = (bm.clone(), fa.clone(), ff.clone(), ggg, id3);
        residual.push((
            "hexagon_2",
            Box::new(move |r| {
                let s = b.braid_with(r, &m, &m);
                let rhs = s.apply_mid(1, d, &s.apply_mid(d, 1, &i3));
                b.braid_with(r, &n, &m).sub(&rhs).mul(&v)
            }),
        ));
        let hopf = h.clone();
        let (c2, h2) = (cc.clone(), hh.clone());
        return Ok(Problem {
            field: f,
            shape: (nh * nh, nc * nc),
            space,
            in_space: Box::new(move |r| cat.morphism_witness(r, &c2, &h2).is_none()),
            linear,
            residual,
            verify: Box::new(move |r| Ok(BraidedModules::new(&hopf, r.clone())?.validate_r())),
        });
    }

    let space = hom_basis(&cat, &h.coend.obj, &h.carrier);
    let mut linear: Vec<(&'static str, Eval)> = Vec::new();
    let mut residual: Vec<(&'static str, Eval)> = Vec::new();

    let counit = |name: &'static str| -> (&'static str, Eval) {
        let (hp, o) = (h.clone(), one.clone());
        (name, Box::new(move |a: &Matrix| hp.eps.mul(a).mul(&hp.coend.u).sub(&o)))
    };
    let central = || -> (&'static str, Eval) {
        let hp = h.clone();
        (
            "central",
            Box::new(move |a: &Matrix| {
                let (l, r) = hp.central_sides(a);
                l.sub(&r)
            }),
        )
    };
    // a^♯_{F⊗F} - (a^♯_F ⊗ a^♯_F) tw, at the point g ⊗ g
    let comult = |name: &'static str, tw: Option<Matrix>| -> (&'static str, Eval) {
        let (hp, m, n, v) = (h.clone(), fa.clone(), ff.clone(), gg.clone());
        (
            name,
            Box::new(move |a: &Matrix| {
                let s = hp.apply_element(a, &m).expect("shape checked");
                let ss = hp.apply_element(a, &n).expect("shape checked");
                let rhs = match &tw {
                    Some(t) => s.kron(&s).mul(&t.mul(&v)),
                    None => s.kron(&s).mul(&v),
                };
                ss.mul(&v).sub(&rhs)
            }),
        )
    };
    let v_double = {
        let b = cat.braid(&fa.carrier, &fa.carrier);
        b.mul(&b)
    };

    let verify: Verify = match kind {
        Kind::Central => {
            linear.push(central());
            let hp = h.clone();
            Box::new(move |a| Ok(hp.central_report(a)))
        }
        Kind::Grouplike => {
            linear.push(counit("counit"));
            residual.push(comult("comultiplicative", None));
            let hp = h.clone();
            Box::new(move |a| Ok(hp.grouplike_report(a)))
        }
        Kind::TwistedGrouplike | Kind::Pivotal => {
            linear.push(counit("counit"));
            residual.push(comult("twisted_comultiplicative", Some(v_double)));
            let hp = h.clone();
            if kind == Kind::Pivotal {
                let (m, dd) = (fa.clone(), h.hmod_right_dual(&h.hmod_right_dual(&fa)));
                let id_h = Matrix::identity(&f, nh);
                let hq = h.clone();
                linear.push((
                    "antipode_square",
                    Box::new(move |a| {
                        let phi = hq.pivotal_candidate(a, &m).expect("shape checked");
                        phi.mul(&m.r).sub(&dd.r.mul(&phi.kron(&id_h)))
                    }),
                ));
                Box::new(move |a| Ok(hp.pivotal_report(a)))
            } else {
                Box::new(move |a| Ok(hp.twisted_grouplike_report(a)))
            }
        }
        Kind::Balanced | Kind::Ribbon => {
            let bm = need_bm()?;
            linear.push(central());
            linear.push(counit("CT2"));
            let b = bm.braid(&fa, &fa);
            residual.push(comult("CT3", Some(b.mul(&b))));
            if kind == Kind::Ribbon {
                let hp = h.clone();
                linear.push(("CT4", Box::new(move |a| hp.antipode_elem(a).expect("natural").sub(a))));
                Box::new(move |a| Ok(bm.ribbon_report(a)?))
            } else {
                Box::new(move |a| Ok(bm.balanced_report(a)?))
            }
        }
        _ => unreachable!("classical kinds are handled elsewhere"),
    };
    let (cobj, carrier) = (h.coend.obj.clone(), h.carrier.clone());
    Ok(Problem {
        field: f,
        shape: (nh, nc),
        space,
        in_space: Box::new(move |a| cat.morphism_witness(a, &cobj, &carrier).is_none()),
        linear,
        residual,
        verify,
    })
}

fn classical_problem(kind: Kind, h: &ClassicalHopf, r: Option<&Matrix>) -> Result<Problem, SearchError> {
    let f = h.field.clone();
    let n = h.dim;
    let one = Matrix::identity(&f, 1);
    let mut linear: Vec<(&'static str, Eval)> = Vec::new();
    let mut residual: Vec<(&'static str, Eval)> = Vec::new();
    let counit = |name: &'static str| -> (&'static str, Eval) {
        let (hp, o) = (h.clone(), one.clone());
        (name, Box::new(move |x: &Matrix| hp.eps.mul(x).sub(&o)))
    };
    let central = |name: &'static str| -> (&'static str, Eval) {
        let hp = h.clone();
        (name, Box::new(move |x: &Matrix| hp.left_mult(x).sub(&hp.right_mult(x))))
    };
    let hp = h.clone();
    if kind == Kind::ClassicalRMatrix {
        let h1 = h.clone();
        linear.push((
            "R1",
            Box::new(move |r| {
                let cols: Vec<Matrix> = (0..h1.dim)
                    .map(|i| {
                        let d = h1.delta.col(i);
                        h1.tensor_mul(r, &d).sub(&h1.tensor_mul(&h1.flip(&d), r))
                    })
                    .collect();
                Matrix::hstack(&cols.iter().collect::<Vec<_>>())
            }),
        ));
        let h4 = h.clone();
        linear.push(("R4_right", Box::new(move |r| h4.eps.apply_mid(h4.dim, 1, r).sub(&h4.one()))));
        let h4 = h.clone();
        linear.push(("R4_left", Box::new(move |r| h4.eps.apply_mid(1, h4.dim, r).sub(&h4.one()))));
        let h2 = h.clone();
        residual.push(("R2", Box::new(move |r| h2.delta.apply_mid(h2.dim, 1, r).sub(&r_products(&h2, r).0))));
        let h3 = h.clone();
        residual.push(("R3", Box::new(move |r| h3.delta.apply_mid(1, h3.dim, r).sub(&r_products(&h3, r).1))));
        return Ok(Problem {
            field: f.clone(),
            shape: (n * n, 1),
            space: standard_basis(&f, n * n),
            in_space: Box::new(|_| true),
            linear,
            residual,
            verify: Box::new(move |r| Ok(check_r(&hp, r))),
        });
    }
    let verify: Verify = match kind {
        Kind::ClassicalCentral => {
            linear.push(central("central"));
            Box::new(move |x| {
                let mut rep = Report::new("central");
                rep.equal("central", &hp.left_mult(x), &hp.right_mult(x));
                Ok(rep)
            })
        }
        Kind::ClassicalGrouplike | Kind::ClassicalPivotal => {
            linear.push(counit("G2"));
            let h1 = h.clone();
            residual.push(("G1", Box::new(move |x| h1.coproduct(x).sub(&x.kron(x)))));
            if kind == Kind::ClassicalPivotal {
                let h2 = h.clone();
                let s2 = h.s.mul(&h.s);
                linear.push(("P2", Box::new(move |p| h2.left_mult(p).mul(&s2).sub(&h2.right_mult(p)))));
                Box::new(move |x| Ok(check_pivotal(&hp, x)))
            } else {
                Box::new(move |x| Ok(check_grouplike(&hp, x)))
            }
        }
        Kind::ClassicalBalanced | Kind::ClassicalRibbon => {
            let r = r.cloned().ok_or(SearchError::MissingRMatrix(kind))?;
            linear.push(central("T1"));
            linear.push(counit("T2"));
            let h3 = h.clone();
            let rr = double_braiding_element(h, &r);
            residual.push(("T3", Box::new(move |t| h3.coproduct(t).sub(&h3.tensor_mul(&t.kron(t), &rr)))));
            if kind == Kind::ClassicalRibbon {
                let h4 = h.clone();
                linear.push(("T4", Box::new(move |t| h4.antipode(t).sub(t))));
                Box::new(move |x| Ok(check_ribbon(&hp, &r, x)))
            } else {
                Box::new(move |x| Ok(check_balanced(&hp, &r, x)))
            }
        }
        _ => unreachable!("only classical kinds reach here"),
    };
    Ok(Problem {
        field: f.clone(),
        shape: (n, 1),
        space: standard_basis(&f, n),
        in_space: Box::new(|_| true),
        linear,
        residual,
        verify,
    })
}

fn combine(field: &Field, shape: (usize, usize), basis: &[Matrix], coords: &Matrix) -> Matrix {
    let mut acc = Matrix::zeros(field, shape.0, shape.1);
    for (i, b) in basis.iter().enumerate() {
        let c = coords.get(i, 0);
        if !field.is_zero(c) {
            acc = acc.add(&b.scale(c));
        }
    }
    acc
}

fn affine_system(p: &Problem) -> Result<AffineSystem, SearchError> {
    let f = &p.field;
    let zero = Matrix::zeros(f, p.shape.0, p.shape.1);
    let m = p.space.len();
    let mut blocks = Vec::new();
    let mut rhs = Vec::new();
    for (_, eval) in &p.linear {
        let base = flat(&eval(&zero));
        let cols: Vec<Matrix> = p.space.iter().map(|b| flat(&eval(b)).sub(&base)).collect();
        blocks.push(if cols.is_empty() { Matrix::zeros(f, base.rows(), 0) } else { Matrix::hstack(&cols.iter().collect::<Vec<_>>()) });
        rhs.push(base.neg());
    }
    let names = |v: &[(&'static str, Eval)]| v.iter().map(|(n, _)| *n).collect::<Vec<_>>();
    let (linear_axioms, residual_axioms) = (names(&p.linear), names(&p.residual));
    if blocks.is_empty() {
        return Ok(AffineSystem {
            parameter_dim: m,
            particular: Some(zero),
            directions: p.space.clone(),
            linear_axioms,
            residual_axioms,
        });
    }
    let sys = Matrix::vstack(&blocks.iter().collect::<Vec<_>>());
    let b = Matrix::vstack(&rhs.iter().collect::<Vec<_>>());
    let (particular, directions) = match sys.solve_affine(&b)? {
        Some(sol) => (
            Some(combine(f, p.shape, &p.space, &sol.particular)),
            sol.kernel.iter().map(|k| combine(f, p.shape, &p.space, k)).collect(),
        ),
        None => (None, Vec::new()),
    };
    Ok(AffineSystem { parameter_dim: m, particular, directions, linear_axioms, residual_axioms })
}

/// Splits the axioms of a kind into the affine system and the residual
/// (quadratic) axioms.
pub fn linearize(spec: &SearchSpec) -> Result<AffineSystem, SearchError> {
    affine_system(&problem(spec.kind, &spec.instance)?)
}

fn prime_of(field: &Field) -> Result<u64, SearchError> {
    match field.kind() {
        FieldKind::Prime(p) => Ok(*p),
        _ => Err(SearchError::NotPrimeField(field.describe())),
    }
}

fn residue(s: &Scalar) -> u64 {
    match s {
        Scalar::P(v) => *v,
        _ => unreachable!("prime field scalars only"),
    }
}

/// `g(s) = g0 + Σ L_i s_i + Σ_{i≤j} Q_ij s_i s_j` for one output coordinate,
/// with the zero coefficients dropped.
struct QuadraticRow {
    constant: u64,
    linear: Vec<(usize, u64)>,
    quadratic: Vec<(usize, usize, u64)>,
}

impl QuadraticRow {
    fn eval(&self, s: &[u64], p: u64) -> u64 {
        let mut acc = self.constant as u128;
        for (i, c) in &self.linear {
            acc += *c as u128 * s[*i] as u128;
        }
        for (i, j, c) in &self.quadratic {
            acc += (*c as u128 * s[*i] as u128 % p as u128) * s[*j] as u128;
        }
        (acc % p as u128) as u64
    }
}

/// The residual axioms as quadratic polynomials in the affine coordinates,
/// recovered by polarization and checked at random points.
fn compile_residual(p: &Problem, x0: &Matrix, dirs: &[Matrix], prime: u64) -> Result<Vec<QuadraticRow>, SearchError> {
    let f = &p.field;
    if p.residual.is_empty() {
        return Ok(Vec::new());
    }
    let g = |x: &Matrix| -> Matrix {
        let parts: Vec<Matrix> = p.residual.iter().map(|(_, e)| flat(&e(x))).collect();
        Matrix::vstack(&parts.iter().collect::<Vec<_>>())
    };
    let k = dirs.len();
    let g0 = g(x0);
    let rows = g0.rows();
    let plus: Vec<Matrix> = dirs.iter().map(|d| g(&x0.add(d))).collect();
    let half = if prime == 2 { None } else { Some(f.inv(&f.from_i64(2))?) };
    let mut lin = vec![Matrix::zeros(f, rows, 1); k];
    let mut quad = vec![vec![Matrix::zeros(f, rows, 1); k]; k];
    for i in 0..k {
        match &half {
            // over F_2 the coordinates satisfy s² = s
            None => lin[i] = plus[i].sub(&g0),
            Some(h) => {
                let minus = g(&x0.sub(&dirs[i]));
                lin[i] = plus[i].sub(&minus).scale(h);
                quad[i][i] = plus[i].add(&minus).scale(h).sub(&g0);
            }
        }
        for j in i + 1..k {
            quad[i][j] = g(&x0.add(&dirs[i]).add(&dirs[j])).sub(&plus[i]).sub(&plus[j]).add(&g0);
        }
    }
    let compiled: Vec<(usize, QuadraticRow)> = (0..rows)
        .map(|r| {
            let row = QuadraticRow {
                constant: residue(g0.get(r, 0)),
                linear: (0..k).map(|i| (i, residue(lin[i].get(r, 0)))).filter(|(_, c)| *c != 0).collect(),
                quadratic: (0..k)
                    .flat_map(|i| (i..k).map(move |j| (i, j)))
                    .map(|(i, j)| (i, j, residue(quad[i][j].get(r, 0))))
                    .filter(|(_, _, c)| *c != 0)
                    .collect(),
            };
            (r, row)
        })
        .filter(|(_, q)| q.constant != 0 || !q.linear.is_empty() || !q.quadratic.is_empty())
        .collect();
    // a polynomial of higher degree would disagree somewhere
    let mut state = 0x9e37_79b9_7f4a_7c15u64;
    for _ in 0..4 {
        let s: Vec<u64> = (0..k)
            .map(|_| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (state >> 33) % prime
            })
            .collect();
        let direct = g(&point(x0, dirs, &s));
        let expected: Vec<(usize, u64)> =
            (0..rows).map(|r| (r, residue(direct.get(r, 0)))).filter(|(_, v)| *v != 0).collect();
        let rebuilt: Vec<(usize, u64)> =
            compiled.iter().map(|(r, q)| (*r, q.eval(&s, prime))).filter(|(_, v)| *v != 0).collect();
        if expected != rebuilt {
            let names: Vec<&str> = p.residual.iter().map(|(n, _)| *n).collect();
            return Err(SearchError::NotQuadratic(names.join(", ")));
        }
    }
    Ok(compiled.into_iter().map(|(_, q)| q).collect())
}

fn point(x0: &Matrix, dirs: &[Matrix], s: &[u64]) -> Matrix {
    let mut x = x0.clone();
    for (d, c) in dirs.iter().zip(s) {
        if *c != 0 {
            x = x.add(&d.scale(&Scalar::P(*c)));
        }
    }
    x
}

/// Coordinates of `index` in base `p`, most significant first.
fn digits(mut index: u64, p: u64, k: usize) -> Vec<u64> {
    let mut s = vec![0; k];
    for slot in s.iter_mut().rev() {
        *slot = index % p;
        index /= p;
    }
    s
}

fn total_points(p: u64, k: usize) -> Result<u64, SearchError> {
    p.checked_pow(k as u32).ok_or(SearchError::SearchSpaceTooLarge { dim: k, limit: ENUMERATION_LIMIT })
}

fn sort_hits(mut hits: Vec<Hit>) -> Vec<Hit> {
    hits.sort_by(|a, b| a.element.data().cmp(b.element.data()));
    hits
}

fn verified(p: &Problem, xs: Vec<Matrix>, strict: bool) -> Result<Vec<Hit>, SearchError> {
    let checked: Vec<Result<Option<Hit>, SearchError>> = xs
        .into_par_iter()
        .map(|x| {
            let report = (p.verify)(&x)?;
            if report.passed() {
                Ok(Some(Hit { element: x, report }))
            } else if strict {
                Err(SearchError::Leak(report.to_string()))
            } else {
                Ok(None)
            }
        })
        .collect();
    let mut hits = Vec::new();
    for c in checked {
        if let Some(h) = c? {
            hits.push(h);
        }
    }
    Ok(sort_hits(hits))
}

/// Every element of the kind: the affine solutions of the linear axioms are
/// scanned against the compiled residual axioms, and each hit is re-checked
/// with the full predicate.
pub fn enumerate(spec: &SearchSpec) -> Result<Vec<Hit>, SearchError> {
    let p = problem(spec.kind, &spec.instance)?;
    let prime = prime_of(&p.field)?;
    let sys = affine_system(&p)?;
    let Some(x0) = sys.particular else { return Ok(Vec::new()) };
    let k = sys.directions.len();
    if k > ENUMERATION_LIMIT {
        return Err(SearchError::SearchSpaceTooLarge { dim: k, limit: ENUMERATION_LIMIT });
    }
    let rows = compile_residual(&p, &x0, &sys.directions, prime)?;
    let total = total_points(prime, k)?;
    let found: Vec<u64> = (0..total)
        .into_par_iter()
        .filter(|idx| {
            let s = digits(*idx, prime, k);
            rows.iter().all(|q| q.eval(&s, prime) == 0)
        })
        .collect();
    let xs = found.into_iter().map(|idx| point(&x0, &sys.directions, &digits(idx, prime, k))).collect();
    verified(&p, xs, true)
}

/// The reference search: every matrix of the right shape, kept when it lies
/// in the parameter space and passes every axiom and the full predicate.
pub fn oracle_enumerate_all(spec: &SearchSpec) -> Result<Vec<Hit>, SearchError> {
    let p = problem(spec.kind, &spec.instance)?;
    let prime = prime_of(&p.field)?;
    let n = p.shape.0 * p.shape.1;
    if n > ORACLE_LIMIT {
        return Err(SearchError::SearchSpaceTooLarge { dim: n, limit: ORACLE_LIMIT });
    }
    let total = total_points(prime, n)?;
    let axioms: Vec<&Eval> = p.linear.iter().chain(p.residual.iter()).map(|(_, e)| e).collect();
    let found: Vec<Matrix> = (0..total)
        .into_par_iter()
        .filter_map(|idx| {
            let data = digits(idx, prime, n).into_iter().map(Scalar::P).collect();
            let x = Matrix::from_vec(&p.field, p.shape.0, p.shape.1, data).expect("shape");
            ((p.in_space)(&x) && axioms.iter().all(|e| e(&x).is_zero())).then_some(x)
        })
        .collect();
    verified(&p, found, false)
}

/// Number of coordinates the brute-force scan runs over.
pub fn oracle_dimension(kind: Kind, instance: &Instance) -> Result<usize, SearchError> {
    let p = problem(kind, instance)?;
    Ok(p.shape.0 * p.shape.1)
}

/// The candidates that pass the full predicate, in sorted order.
pub fn verify_candidates(spec: &SearchSpec, candidates: &[Matrix]) -> Result<Vec<Hit>, SearchError> {
    let p = problem(spec.kind, &spec.instance)?;
    for c in candidates {
        if c.shape() != p.shape {
            return Err(SearchError::InstanceMismatch {
                kind: spec.kind,
                reason: format!("candidate must be {}x{}", p.shape.0, p.shape.1),
            });
        }
    }
    let admissible: Vec<Matrix> = candidates.iter().filter(|c| (p.in_space)(c)).cloned().collect();
    verified(&p, admissible, false)
}

/// The full predicate of a kind on one matrix, whether it passes or not.
pub fn predicate_report(kind: Kind, instance: &Instance, x: &Matrix) -> Result<Report, SearchError> {
    let p = problem(kind, instance)?;
    if x.shape() != p.shape {
        return Err(SearchError::InstanceMismatch { kind, reason: format!("must be {}x{}", p.shape.0, p.shape.1) });
    }
    let mut rep = (p.verify)(x)?;
    rep.flag("in_parameter_space", (p.in_space)(x), None);
    Ok(rep)
}

/// Runs the strategy of the spec.
pub fn search(spec: &SearchSpec) -> Result<Vec<Hit>, SearchError> {
    match &spec.strategy {
        Strategy::AffineThenEnumerate => enumerate(spec),
        Strategy::EnumerateAll => oracle_enumerate_all(spec),
        Strategy::VerifyCandidates(c) => verify_candidates(spec, c),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    fn classical_spec(kind: Kind, hopf: &ClassicalHopf, r: Option<Matrix>) -> SearchSpec {
        SearchSpec {
            kind,
            instance: Instance::Classical { hopf: hopf.clone(), r },
            strategy: Strategy::AffineThenEnumerate,
        }
    }

    fn elements(hits: &[Hit]) -> Vec<Matrix> {
        hits.iter().map(|h| h.element.clone()).collect()
    }

    fn coend_spec(kind: Kind, hopf: &Arc<InternalHopf>, braided: Option<BraidedModules>) -> SearchSpec {
        SearchSpec {
            kind,
            instance: Instance::Coend { hopf: hopf.clone(), braided },
            strategy: Strategy::AffineThenEnumerate,
        }
    }

    #[test]
    fn trivial_hopf_algebra_has_only_the_unit() {
        let f = Field::prime(3).unwrap();
        let c = coend_of(&vec_ambient(&f));
        let one = Arc::new(InternalHopf::trivial(&c));
        let r = one.u.kron(&one.u).mul(&c.eps.kron(&c.eps));
        let bm = BraidedModules::new(&one, r.clone()).unwrap();
        assert_eq!(elements(&enumerate(&coend_spec(Kind::RMatrix, &one, None)).unwrap()), vec![r]);
        for kind in [Kind::Grouplike, Kind::TwistedGrouplike, Kind::Pivotal, Kind::Balanced, Kind::Ribbon] {
            let spec = coend_spec(kind, &one, Some(bm.clone()));
            let hits = elements(&enumerate(&spec).unwrap());
            assert_eq!(hits, vec![one.conv_unit()], "{kind}");
            assert_eq!(elements(&oracle_enumerate_all(&spec).unwrap()), hits, "{kind}");
        }
    }

    #[test]
    fn trivial_hopf_algebra_over_super_vector_spaces() {
        // the parity operator is a monoidal automorphism of the identity, and
        // the unsigned flip is a second braiding
        let f = Field::prime(3).unwrap();
        let c = coend_of(&svec_ambient(&f));
        let one = Arc::new(InternalHopf::trivial(&c));
        let r = one.u.kron(&one.u).mul(&c.eps.kron(&c.eps));
        let rs = elements(&enumerate(&coend_spec(Kind::RMatrix, &one, None)).unwrap());
        assert_eq!(rs.len(), 2);
        assert!(rs.contains(&r));
        let gs = elements(&enumerate(&coend_spec(Kind::Grouplike, &one, None)).unwrap());
        assert_eq!(gs.len(), 2);
        assert!(gs.contains(&one.conv_unit()));
    }

    #[test]
    fn super_ribbon_elements_match_the_oracle() {
        let f = Field::prime(3).unwrap();
        let h = cyclic(&f, 2);
        let spec = classical_spec(Kind::ClassicalRibbon, &h, Some(super_r(&f)));
        let found = elements(&enumerate(&spec).unwrap());
        assert!(!found.is_empty());
        assert_eq!(elements(&oracle_enumerate_all(&spec).unwrap()), found);
    }

    #[test]
    fn sweedler_pivotal_elements_are_closed_under_inverse() {
        let f = Field::prime(5).unwrap();
        let h = sweedler(&f);
        let found = elements(&enumerate(&classical_spec(Kind::ClassicalPivotal, &h, None)).unwrap());
        assert!(!found.is_empty());
        for p in &found {
            let inv = h.inverse(p).unwrap();
            assert!(found.contains(&inv));
        }
    }

    #[test]
    fn guards_and_mismatches() {
        let f = Field::prime(3).unwrap();
        let (d, r) = crate::classical::drinfeld_double(&cyclic(&f, 2)).unwrap();
        let spec = classical_spec(Kind::ClassicalRMatrix, &d, None);
        let err = oracle_enumerate_all(&spec).unwrap_err();
        assert!(matches!(err, SearchError::SearchSpaceTooLarge { dim: 16, .. }), "{err}");
        let spec = classical_spec(Kind::ClassicalBalanced, &d, None);
        assert!(matches!(enumerate(&spec), Err(SearchError::MissingRMatrix(_))));
        let spec = classical_spec(Kind::Central, &d, Some(r));
        assert!(matches!(enumerate(&spec), Err(SearchError::InstanceMismatch { .. })));
        let q = Field::rationals();
        let spec = classical_spec(Kind::ClassicalGrouplike, &cyclic(&q, 2), None);
        assert!(matches!(enumerate(&spec), Err(SearchError::NotPrimeField(_))));
        let cands = vec![cyclic(&q, 2).basis(1), cyclic(&q, 2).zero()];
        assert_eq!(elements(&verify_candidates(&spec, &cands).unwrap()), vec![cands[0].clone()]);
        assert_eq!("twisted_grouplike".parse::<Kind>().unwrap(), Kind::TwistedGrouplike);
    }

    #[test]
    fn linearization_partitions_axioms() {
        let f = Field::prime(3).unwrap();
        let h = cyclic(&f, 2);
        let sys = linearize(&classical_spec(Kind::ClassicalBalanced, &h, Some(super_r(&f)))).unwrap();
        assert_eq!(sys.linear_axioms, vec!["T1", "T2"]);
        assert_eq!(sys.residual_axioms, vec!["T3"]);
        assert_eq!(sys.parameter_dim, 2);
    }

    #[test]
    fn grouplikes_of_cyclic_group() {
        let f = Field::prime(3).unwrap();
        let h = cyclic(&f, 2);
        let spec = classical_spec(Kind::ClassicalGrouplike, &h, None);
        let found = elements(&enumerate(&spec).unwrap());
        assert_eq!(found, vec![h.basis(1), h.basis(0)]);
        assert_eq!(elements(&oracle_enumerate_all(&spec).unwrap()), found);
    }
}
