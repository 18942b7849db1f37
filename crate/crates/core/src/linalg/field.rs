//! Exact ground fields: the rationals, prime fields and simple algebraic
//! extensions of either.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::LinalgError;

/// A single field element. The variant always matches the owning [`Field`];
/// arithmetic goes through the field so that residues and extension
/// coefficients stay canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Q(BigRational),
    P(u64),
    /// Coefficients over the base field, lowest degree first, length = degree.
    E(Vec<Scalar>),
}

#[derive(Debug, PartialEq, Eq)]
pub enum FieldKind {
    Rationals,
    Prime(u64),
    Extension(Extension),
}

#[derive(Debug, PartialEq, Eq)]
pub struct Extension {
    pub base: Field,
    /// Monic minimal polynomial, lowest degree first (length degree + 1).
    pub min_poly: Vec<Scalar>,
    pub generator: String,
}

/// Cheaply clonable handle to a field description.
#[derive(Clone, Debug)]
pub struct Field(Arc<FieldKind>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}
impl Eq for Field {}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

impl Field {
    pub fn rationals() -> Field {
        Field(Arc::new(FieldKind::Rationals))
    }

    pub fn prime(p: u64) -> Result<Field, LinalgError> {
        if !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(Field(Arc::new(FieldKind::Prime(p))))
    }

    /// `min_poly` is monic, lowest degree first. Irreducibility is taken on
    /// trust, except that for degree at most 3 a root in the base field is
    /// rejected.
    pub fn extension(base: &Field, min_poly: Vec<Scalar>, generator: &str) -> Result<Field, LinalgError> {
        if matches!(*base.0, FieldKind::Extension(_)) {
            return Err(LinalgError::InvalidMinPoly("base of an extension must be Q or F_p".into()));
        }
        if min_poly.len() < 2 {
            return Err(LinalgError::InvalidMinPoly("degree must be at least 1".into()));
        }
        for c in &min_poly {
            base.check(c)?;
        }
        if !base.is_one(min_poly.last().unwrap()) {
            return Err(LinalgError::InvalidMinPoly("minimal polynomial must be monic".into()));
        }
        if generator.is_empty() || !generator.chars().all(|c| c.is_ascii_alphabetic() || c == '_') {
            return Err(LinalgError::InvalidMinPoly(format!("bad generator name {generator:?}")));
        }
        let deg = min_poly.len() - 1;
        if deg <= 3 {
            if let Some(r) = base.find_root(&min_poly) {
                return Err(LinalgError::InvalidMinPoly(format!(
                    "polynomial has the root {} in the base field",
                    base.format(&r)
                )));
            }
        }
        Ok(Field(Arc::new(FieldKind::Extension(Extension {
            base: base.clone(),
            min_poly,
            generator: generator.to_string(),
        }))))
    }

    pub fn kind(&self) -> &FieldKind {
        &self.0
    }

    pub fn characteristic(&self) -> u64 {
        match &*self.0 {
            FieldKind::Rationals => 0,
            FieldKind::Prime(p) => *p,
            FieldKind::Extension(e) => e.base.characteristic(),
        }
    }

    /// Number of elements, `None` for infinite fields or when it overflows.
    pub fn order(&self) -> Option<u64> {
        match &*self.0 {
            FieldKind::Rationals => None,
            FieldKind::Prime(p) => Some(*p),
            FieldKind::Extension(e) => {
                let q = e.base.order()?;
                q.checked_pow((e.min_poly.len() - 1) as u32)
            }
        }
    }

    /// All elements in a fixed order (zero first), for finite fields only.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match &*self.0 {
            FieldKind::Rationals => None,
            FieldKind::Prime(p) => Some((0..*p).map(Scalar::P).collect()),
            FieldKind::Extension(e) => {
                let base = e.base.elements()?;
                let deg = e.min_poly.len() - 1;
                let total = self.order()?;
                let mut out = Vec::with_capacity(total as usize);
                for mut idx in 0..total {
                    let mut coeffs = Vec::with_capacity(deg);
                    for _ in 0..deg {
                        coeffs.push(base[(idx % base.len() as u64) as usize].clone());
                        idx /= base.len() as u64;
                    }
                    out.push(Scalar::E(coeffs));
                }
                Some(out)
            }
        }
    }

    pub fn zero(&self) -> Scalar {
        match &*self.0 {
            FieldKind::Rationals => Scalar::Q(BigRational::zero()),
            FieldKind::Prime(_) => Scalar::P(0),
            FieldKind::Extension(e) => Scalar::E(vec![e.base.zero(); e.min_poly.len() - 1]),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match &*self.0 {
            FieldKind::Rationals => Scalar::Q(BigRational::from_integer(BigInt::from(v))),
            FieldKind::Prime(p) => Scalar::P(v.rem_euclid(*p as i64) as u64),
            FieldKind::Extension(e) => {
                let mut c = vec![e.base.zero(); e.min_poly.len() - 1];
                c[0] = e.base.from_i64(v);
                Scalar::E(c)
            }
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match &*self.0 {
            FieldKind::Rationals => Scalar::Q(BigRational::from_integer(v.clone())),
            FieldKind::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(*p));
                Scalar::P(r.to_u64().unwrap())
            }
            FieldKind::Extension(e) => {
                let mut c = vec![e.base.zero(); e.min_poly.len() - 1];
                c[0] = e.base.from_bigint(v);
                Scalar::E(c)
            }
        }
    }

    /// `num / den` as a field element.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar, LinalgError> {
        let n = self.from_i64(num);
        let d = self.from_i64(den);
        self.div(&n, &d)
    }

    /// The generator of a simple extension.
    pub fn generator(&self) -> Option<Scalar> {
        match &*self.0 {
            FieldKind::Extension(e) => {
                let deg = e.min_poly.len() - 1;
                let mut c = vec![e.base.zero(); deg];
                if deg == 1 {
                    // x = -c0 when the polynomial is linear
                    c[0] = e.base.neg(&e.min_poly[0]);
                } else {
                    c[1] = e.base.one();
                }
                Some(Scalar::E(c))
            }
            _ => None,
        }
    }

    /// Membership test: variant and canonical form.
    pub fn check(&self, a: &Scalar) -> Result<(), LinalgError> {
        let ok = match (&*self.0, a) {
            (FieldKind::Rationals, Scalar::Q(_)) => true,
            (FieldKind::Prime(p), Scalar::P(v)) => v < p,
            (FieldKind::Extension(e), Scalar::E(c)) => {
                c.len() == e.min_poly.len() - 1 && c.iter().all(|x| e.base.check(x).is_ok())
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(LinalgError::FieldMismatch)
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Q(q) => q.is_zero(),
            Scalar::P(v) => *v == 0,
            Scalar::E(c) => match &*self.0 {
                FieldKind::Extension(e) => c.iter().all(|x| e.base.is_zero(x)),
                _ => false,
            },
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (&*self.0, a, b) {
            (FieldKind::Rationals, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x + y),
            (FieldKind::Prime(p), Scalar::P(x), Scalar::P(y)) => Scalar::P(((*x as u128 + *y as u128) % *p as u128) as u64),
            (FieldKind::Extension(e), Scalar::E(x), Scalar::E(y)) => {
                Scalar::E(x.iter().zip(y).map(|(u, v)| e.base.add(u, v)).collect())
            }
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (&*self.0, a) {
            (FieldKind::Rationals, Scalar::Q(x)) => Scalar::Q(-x),
            (FieldKind::Prime(p), Scalar::P(x)) => Scalar::P(if *x == 0 { 0 } else { p - x }),
            (FieldKind::Extension(e), Scalar::E(x)) => Scalar::E(x.iter().map(|u| e.base.neg(u)).collect()),
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (&*self.0, a, b) {
            (FieldKind::Rationals, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x * y),
            (FieldKind::Prime(p), Scalar::P(x), Scalar::P(y)) => Scalar::P(((*x as u128 * *y as u128) % *p as u128) as u64),
            (FieldKind::Extension(e), Scalar::E(x), Scalar::E(y)) => Scalar::E(e.mul(x, y)),
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar, LinalgError> {
        if self.is_zero(a) {
            return Err(LinalgError::DivisionByZero);
        }
        match (&*self.0, a) {
            (FieldKind::Rationals, Scalar::Q(x)) => Ok(Scalar::Q(x.recip())),
            (FieldKind::Prime(p), Scalar::P(x)) => Ok(Scalar::P(mod_pow(*x, p - 2, *p))),
            (FieldKind::Extension(e), Scalar::E(x)) => e.inv(x).map(Scalar::E),
            _ => Err(LinalgError::FieldMismatch),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, LinalgError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Scalar, mut e: u64) -> Scalar {
        let mut acc = self.one();
        let mut b = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        acc
    }

    /// Checked binary operation, the entry point for untrusted operands.
    pub fn arith(&self, a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar, LinalgError> {
        self.check(a)?;
        self.check(b)?;
        Ok(match op {
            ArithOp::Add => self.add(a, b),
            ArithOp::Sub => self.sub(a, b),
            ArithOp::Mul => self.mul(a, b),
            ArithOp::Div => self.div(a, b)?,
        })
    }

    fn eval_poly(&self, poly: &[Scalar], x: &Scalar) -> Scalar {
        poly.iter().rev().fold(self.zero(), |acc, c| self.add(&self.mul(&acc, x), c))
    }

    /// A root of `poly` in this field, if one is found. Used only as the
    /// low degree irreducibility spot check.
    fn find_root(&self, poly: &[Scalar]) -> Option<Scalar> {
        match &*self.0 {
            FieldKind::Prime(p) if *p <= 1 << 20 => {
                (0..*p).map(Scalar::P).find(|x| self.is_zero(&self.eval_poly(poly, x)))
            }
            FieldKind::Rationals => {
                // rational root theorem on the integer-cleared polynomial
                let den_lcm = poly.iter().fold(BigInt::one(), |acc, c| match c {
                    Scalar::Q(q) => acc.lcm(q.denom()),
                    _ => acc,
                });
                let ints: Vec<BigInt> = poly
                    .iter()
                    .map(|c| match c {
                        Scalar::Q(q) => (q * BigRational::from_integer(den_lcm.clone())).to_integer(),
                        _ => BigInt::zero(),
                    })
                    .collect();
                if ints[0].is_zero() {
                    return Some(self.zero());
                }
                let a0 = ints[0].abs().to_u64()?;
                let an = ints.last().unwrap().abs().to_u64()?;
                if a0 > 1_000_000_000_000 || an > 1_000_000_000_000 {
                    return None;
                }
                let divisors = |n: u64| -> Vec<u64> {
                    let mut d = Vec::new();
                    let mut i = 1u64;
                    while i * i <= n {
                        if n.is_multiple_of(i) {
                            d.push(i);
                            d.push(n / i);
                        }
                        i += 1;
                    }
                    d
                };
                for num in divisors(a0) {
                    for den in divisors(an) {
                        for sign in [1i64, -1] {
                            let cand = Scalar::Q(BigRational::new(BigInt::from(num) * sign, BigInt::from(den)));
                            if self.is_zero(&self.eval_poly(poly, &cand)) {
                                return Some(cand);
                            }
                        }
                    }
                }
                None
            }
            _ => None,
        }
    }

    /// Parse a scalar literal: `-3/4` over Q, `2` over F_p, `1+2*a^2` over an extension.
    pub fn parse(&self, text: &str) -> Result<Scalar, LinalgError> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).map(|c| if c == '\u{2212}' { '-' } else { c }).collect();
        if t.is_empty() {
            return Err(LinalgError::Parse("empty scalar literal".into()));
        }
        match &*self.0 {
            FieldKind::Rationals | FieldKind::Prime(_) => self.parse_base_literal(&t),
            FieldKind::Extension(e) => {
                let mut acc = self.zero();
                for (sign, term) in split_terms(&t)? {
                    let (coeff, power) = parse_term(&term, &e.generator)
                        .ok_or_else(|| LinalgError::Parse(format!("bad term {term:?} in {text:?}")))?;
                    let c = match coeff {
                        Some(c) => e.base.parse_base_literal(&c)?,
                        None => e.base.one(),
                    };
                    let c = if sign { e.base.neg(&c) } else { c };
                    let mut lifted = vec![e.base.zero(); e.min_poly.len() - 1];
                    lifted[0] = c;
                    let g = self.generator().unwrap();
                    let term_val = self.mul(&Scalar::E(lifted), &self.pow(&g, power));
                    acc = self.add(&acc, &term_val);
                }
                Ok(acc)
            }
        }
    }

    fn parse_base_literal(&self, t: &str) -> Result<Scalar, LinalgError> {
        let bad = || LinalgError::Parse(format!("bad scalar literal {t:?}"));
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n, d),
            None => (t, "1"),
        };
        let n: BigInt = num.parse().map_err(|_| bad())?;
        let d: BigInt = den.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(LinalgError::DivisionByZero);
        }
        match &*self.0 {
            FieldKind::Rationals => Ok(Scalar::Q(BigRational::new(n, d))),
            _ => self.div(&self.from_bigint(&n), &self.from_bigint(&d)),
        }
    }

    /// Inverse of [`Field::parse`].
    pub fn format(&self, a: &Scalar) -> String {
        match (&*self.0, a) {
            (FieldKind::Rationals, Scalar::Q(q)) => {
                if q.is_integer() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            }
            (FieldKind::Prime(_), Scalar::P(v)) => v.to_string(),
            (FieldKind::Extension(e), Scalar::E(c)) => {
                let mut out = String::new();
                for (k, coef) in c.iter().enumerate() {
                    if e.base.is_zero(coef) {
                        continue;
                    }
                    let mut s = e.base.format(coef);
                    let negative = s.starts_with('-');
                    if negative {
                        s.remove(0);
                    }
                    let body = match k {
                        0 => s,
                        _ => {
                            let g = if k == 1 { e.generator.clone() } else { format!("{}^{}", e.generator, k) };
                            if s == "1" {
                                g
                            } else {
                                format!("{s}*{g}")
                            }
                        }
                    };
                    if out.is_empty() {
                        if negative {
                            out.push('-');
                        }
                    } else {
                        out.push(if negative { '-' } else { '+' });
                    }
                    out.push_str(&body);
                }
                if out.is_empty() {
                    "0".into()
                } else {
                    out
                }
            }
            _ => "<foreign scalar>".into(),
        }
    }

    /// Short description, e.g. `Q`, `F_5`, `Q[i]/(i^2+1)`.
    pub fn describe(&self) -> String {
        match &*self.0 {
            FieldKind::Rationals => "Q".into(),
            FieldKind::Prime(p) => format!("F_{p}"),
            FieldKind::Extension(e) => {
                let terms: Vec<String> = e
                    .min_poly
                    .iter()
                    .enumerate()
                    .rev()
                    .filter(|(_, c)| !e.base.is_zero(c))
                    .map(|(k, c)| {
                        let cs = e.base.format(c);
                        match k {
                            0 => cs,
                            1 => format!("{cs}*{}", e.generator),
                            _ => format!("{cs}*{}^{k}", e.generator),
                        }
                    })
                    .collect();
                format!("{}[{}]/({})", e.base.describe(), e.generator, terms.join("+"))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Extension {
    fn deg(&self) -> usize {
        self.min_poly.len() - 1
    }

    fn reduce(&self, mut prod: Vec<Scalar>) -> Vec<Scalar> {
        let d = self.deg();
        let b = &self.base;
        for k in (d..prod.len()).rev() {
            let c = prod[k].clone();
            if b.is_zero(&c) {
                continue;
            }
            for (j, m) in self.min_poly.iter().enumerate() {
                let idx = k - d + j;
                prod[idx] = b.sub(&prod[idx], &b.mul(&c, m));
            }
        }
        prod.truncate(d);
        while prod.len() < d {
            prod.push(b.zero());
        }
        prod
    }

    fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let b = &self.base;
        let mut prod = vec![b.zero(); x.len() + y.len() - 1];
        for (i, u) in x.iter().enumerate() {
            if b.is_zero(u) {
                continue;
            }
            for (j, v) in y.iter().enumerate() {
                prod[i + j] = b.add(&prod[i + j], &b.mul(u, v));
            }
        }
        self.reduce(prod)
    }

    /// Inverse by solving `x * y = 1` for the coefficients of `y`; a singular
    /// multiplication map means the polynomial was reducible.
    fn inv(&self, x: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        let b = &self.base;
        let d = self.deg();
        // column j of the multiplication map is x * gen^j
        let mut cols = Vec::with_capacity(d);
        let mut basis = vec![b.zero(); d];
        for j in 0..d {
            basis.iter_mut().for_each(|c| *c = b.zero());
            basis[j] = b.one();
            cols.push(self.mul(x, &basis));
        }
        // augmented rows [M | e0]
        let mut rows: Vec<Vec<Scalar>> = (0..d)
            .map(|i| {
                let mut r: Vec<Scalar> = (0..d).map(|j| cols[j][i].clone()).collect();
                r.push(if i == 0 { b.one() } else { b.zero() });
                r
            })
            .collect();
        for c in 0..d {
            let piv = (c..d).find(|&r| !b.is_zero(&rows[r][c])).ok_or(LinalgError::ZeroDivisor)?;
            rows.swap(c, piv);
            let inv = b.inv(&rows[c][c])?;
            for v in rows[c].iter_mut() {
                *v = b.mul(v, &inv);
            }
            for r in 0..d {
                if r != c && !b.is_zero(&rows[r][c]) {
                    let f = rows[r][c].clone();
                    for k in 0..=d {
                        let t = b.mul(&f, &rows[c][k]);
                        rows[r][k] = b.sub(&rows[r][k], &t);
                    }
                }
            }
        }
        Ok(rows.into_iter().map(|mut r| r.pop().unwrap()).collect())
    }
}

fn split_terms(t: &str) -> Result<Vec<(bool, String)>, LinalgError> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    let mut prev: Option<char> = None;
    for ch in t.chars() {
        if (ch == '+' || ch == '-') && !matches!(prev, None | Some('^') | Some('*') | Some('/')) {
            out.push((neg, std::mem::take(&mut cur)));
            neg = ch == '-';
        } else if (ch == '+' || ch == '-') && prev.is_none() {
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
        prev = Some(ch);
    }
    out.push((neg, cur));
    if out.iter().any(|(_, s)| s.is_empty()) {
        return Err(LinalgError::Parse(format!("bad polynomial literal {t:?}")));
    }
    Ok(out)
}

/// `3`, `3*a`, `3*a^2`, `a`, `a^2`, `1/2*a` -> (coefficient, power)
fn parse_term(term: &str, gen: &str) -> Option<(Option<String>, u64)> {
    let (coeff, mono) = match term.split_once('*') {
        Some((c, m)) => (Some(c.to_string()), Some(m)),
        None if term.starts_with(gen) => (None, Some(term)),
        None => (Some(term.to_string()), None),
    };
    let power = match mono {
        None => 0,
        Some(m) => {
            let rest = m.strip_prefix(gen)?;
            if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')?.parse().ok()?
            }
        }
    };
    Some((coeff, power))
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}
