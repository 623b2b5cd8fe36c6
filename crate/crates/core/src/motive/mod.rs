//! Exact arithmetic in the coefficient ring of monodromic motives.
//!
//! A [`MotiveScalar`] is a reduced fraction of Laurent polynomials over Q in
//! the distinguished variable `u` and finitely many [`AdamsAtom`]s. The
//! variable `u` stands for `-L^{1/2}` where `L` is the Lefschetz motive, so
//! `L^{k/2}` is encoded as `(-u)^k` and the localized denominators
//! `L^{k/2} - L^{-k/2}` become `u^k - u^{-k}` up to sign. An atom `X.k`
//! stands for the Adams operation `psi^k` applied to the generator `X`.
//!
//! Supported specializations: the Adams endomorphisms `psi^k` (u -> u^k,
//! `X.j -> X.jk`) and the Euler-characteristic limit `u -> 1` with atoms
//! replaced by their chi-values.

mod frac;
mod gcd;
mod parse;
mod poly;

pub use parse::parse_scalar;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use frac::Frac;
use poly::{Monomial, Poly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MotiveError {
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("adams weight must be a positive integer")]
    AdamsWeight,
    #[error("atom weight must be a positive integer")]
    AtomWeight,
    #[error("pole at Euler point")]
    EulerPole,
    #[error("no Euler assignment for base symbol `{0}`")]
    MissingChi(String),
    #[error("evaluation pole")]
    EvaluationPole,
    #[error("evaluation point missing a value for `{0}`")]
    MissingPoint(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// A named motive generator under an Adams operation: `(base, k)` models
/// `psi^k([base])`. Weight 1 is the class itself.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct AdamsAtom {
    base: String,
    weight: u32,
}

impl AdamsAtom {
    pub fn new(base: impl Into<String>, weight: u32) -> Result<Self, MotiveError> {
        if weight == 0 {
            return Err(MotiveError::AtomWeight);
        }
        Ok(AdamsAtom {
            base: base.into(),
            weight,
        })
    }

    pub fn base(&self) -> &str {
        &self.base
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }
}

impl fmt::Display for AdamsAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.base, self.weight)
    }
}

/// Variables of the coefficient ring: `u` first, then atoms by (base, weight).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub(crate) enum Var {
    U,
    Atom(AdamsAtom),
}

/// An element of the coefficient field: a canonical fraction of Laurent
/// polynomials in `u` and Adams atoms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MotiveScalar(Frac<Var>);

impl MotiveScalar {
    pub fn zero() -> Self {
        MotiveScalar(Frac::zero())
    }

    pub fn one() -> Self {
        MotiveScalar(Frac::one())
    }

    pub fn from_rational(c: BigRational) -> Self {
        MotiveScalar(Frac::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// The distinguished variable `u = -L^{1/2}`.
    pub fn u() -> Self {
        Self::u_pow(1)
    }

    pub fn u_pow(e: i64) -> Self {
        MotiveScalar(Frac::from_poly(Poly::monomial(
            Monomial::var(Var::U, e),
            BigRational::one(),
        )))
    }

    /// `L^{e/2} = (-u)^e`.
    pub fn l_half_pow(e: i64) -> Self {
        let sign = if e.rem_euclid(2) == 0 { 1 } else { -1 };
        MotiveScalar(Frac::from_poly(Poly::monomial(
            Monomial::var(Var::U, e),
            BigRational::from_integer(BigInt::from(sign)),
        )))
    }

    /// The atom `psi^weight([base])`.
    pub fn atom(base: impl Into<String>, weight: u32) -> Result<Self, MotiveError> {
        let a = AdamsAtom::new(base, weight)?;
        Ok(MotiveScalar(Frac::from_poly(Poly::var(Var::Atom(a)))))
    }

    /// Canonicalize a raw numerator/denominator pair given as monomial lists
    /// `(coefficient, u-exponent, [(atom, exponent)])`.
    pub fn normalize_raw(
        num: Vec<(BigRational, i64, Vec<(AdamsAtom, i64)>)>,
        den: Vec<(BigRational, i64, Vec<(AdamsAtom, i64)>)>,
    ) -> Result<Self, MotiveError> {
        let build = |terms: Vec<(BigRational, i64, Vec<(AdamsAtom, i64)>)>| {
            let mut p = Poly::zero();
            for (c, ue, atoms) in terms {
                let mut exps = vec![(Var::U, ue)];
                for (a, e) in atoms {
                    exps.push((Var::Atom(a), e));
                }
                p.add_term(Monomial::from_exps(exps), c);
            }
            p
        };
        MotiveScalar::from_frac(build(num), build(den))
    }

    pub(crate) fn from_frac(num: Poly<Var>, den: Poly<Var>) -> Result<Self, MotiveError> {
        Frac::new(num, den)
            .map(MotiveScalar)
            .map_err(|_| MotiveError::DivisionByZero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        self.0.as_rational()
    }

    pub fn add(&self, other: &Self) -> Self {
        MotiveScalar(self.0.add(&other.0))
    }

    pub fn sub(&self, other: &Self) -> Self {
        MotiveScalar(self.0.sub(&other.0))
    }

    pub fn neg(&self) -> Self {
        MotiveScalar(self.0.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        MotiveScalar(self.0.mul(&other.0))
    }

    pub fn div(&self, other: &Self) -> Result<Self, MotiveError> {
        self.0
            .div(&other.0)
            .map(MotiveScalar)
            .ok_or(MotiveError::DivisionByZero)
    }

    pub fn inv(&self) -> Result<Self, MotiveError> {
        self.0
            .inv()
            .map(MotiveScalar)
            .ok_or(MotiveError::DivisionByZero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        MotiveScalar(self.0.scale(c))
    }

    pub fn pow(&self, e: i64) -> Result<Self, MotiveError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// The Adams operation `psi^k`: the Q-algebra endomorphism with
    /// `u -> u^k` and atom `(base, j) -> (base, j*k)`.
    pub fn adams(&self, k: u32) -> Result<Self, MotiveError> {
        if k == 0 {
            return Err(MotiveError::AdamsWeight);
        }
        if k == 1 {
            return Ok(self.clone());
        }
        let mapped = self.0.map_monomials(|m| {
            Monomial::from_exps(
                m.iter()
                    .map(|(v, e)| match v {
                        Var::U => (Var::U, e * k as i64),
                        Var::Atom(a) => (
                            Var::Atom(AdamsAtom {
                                base: a.base.clone(),
                                weight: a.weight * k,
                            }),
                            *e,
                        ),
                    })
                    .collect(),
            )
        });
        Ok(MotiveScalar(mapped))
    }

    /// Exact evaluation at a rational point.
    pub fn eval_at(&self, point: &EvalPoint) -> Result<BigRational, MotiveError> {
        for v in self.0.num().vars().union(&self.0.den().vars()) {
            if let Var::Atom(a) = v {
                if !point.atoms.contains_key(a) {
                    return Err(MotiveError::MissingPoint(a.to_string()));
                }
            }
        }
        let value_of = |v: &Var| match v {
            Var::U => point.u.clone(),
            Var::Atom(a) => point.atoms.get(a).cloned().unwrap(),
        };
        self.0.eval(&value_of).ok_or(MotiveError::EvaluationPole)
    }

    /// The Euler-characteristic specialization: atoms `(base, k)` are
    /// replaced by `chi(base)` (independently of `k`), then the limit
    /// `u -> 1` is taken by expanding numerator and denominator at
    /// `u = 1 + eps` and cancelling the common leading power of `eps`.
    pub fn euler_specialize(&self, cfg: &EulerConfig) -> Result<EulerValue, MotiveError> {
        if self.is_zero() {
            return Ok(EulerValue::zero());
        }
        let den = specialize_atoms(self.0.den(), cfg)?;
        if den.is_zero() {
            return Err(MotiveError::EulerPole);
        }
        let num = specialize_atoms(self.0.num(), cfg)?;
        if num.is_zero() {
            return Ok(EulerValue::zero());
        }
        let num_eps = expand_at_u_equals_one(&num);
        let den_eps = expand_at_u_equals_one(&den);
        let vn = *num_eps.keys().next().expect("nonzero numerator");
        let vd = *den_eps.keys().next().expect("nonzero denominator");
        if vn < vd {
            return Err(MotiveError::EulerPole);
        }
        if vn > vd {
            return Ok(EulerValue::zero());
        }
        let frac = Frac::new(num_eps[&vn].clone(), den_eps[&vd].clone())
            .expect("nonzero leading denominator coefficient");
        Ok(EulerValue(frac))
    }

    /// Atom bases occurring anywhere in the scalar, deduplicated.
    pub fn atom_bases(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for v in self.0.num().vars().union(&self.0.den().vars()) {
            if let Var::Atom(a) = v {
                if !out.contains(&a.base) {
                    out.push(a.base.clone());
                }
            }
        }
        out
    }

    pub(crate) fn num_poly(&self) -> &Poly<Var> {
        self.0.num()
    }

    pub(crate) fn den_poly(&self) -> &Poly<Var> {
        self.0.den()
    }
}

/// Substitute atoms by chi-values or chi-indeterminates; `u` is untouched.
fn specialize_atoms(p: &Poly<Var>, cfg: &EulerConfig) -> Result<Poly<ChiOrU>, MotiveError> {
    let mut out = Poly::zero();
    'terms: for (m, c) in p.terms() {
        let mut coeff = c.clone();
        let mut exps: Vec<(ChiOrU, i64)> = Vec::new();
        for (v, e) in m.iter() {
            match v {
                Var::U => exps.push((ChiOrU::U, *e)),
                Var::Atom(a) => match cfg.lookup(&a.base) {
                    None => return Err(MotiveError::MissingChi(a.base.clone())),
                    Some(ChiAssignment::Symbolic) => {
                        exps.push((ChiOrU::Chi(a.base.clone()), *e));
                    }
                    Some(ChiAssignment::Value(q)) => {
                        if q.is_zero() {
                            if *e < 0 {
                                return Err(MotiveError::EulerPole);
                            }
                            continue 'terms; // the whole term vanishes
                        }
                        coeff *= poly::rational_pow(&q, *e);
                    }
                },
            }
        }
        out.add_term(Monomial::from_exps(exps), coeff);
    }
    Ok(out)
}

/// Variables live during the Euler limit: `u` plus chi-indeterminates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum ChiOrU {
    U,
    Chi(String),
}

/// Expand `p(u, chi...)` at `u = 1 + eps` and collect chi-polynomials by
/// `eps`-power. Exponents of `u` may be negative; the fraction's value is
/// unchanged by clearing them first.
fn expand_at_u_equals_one(p: &Poly<ChiOrU>) -> BTreeMap<u32, Poly<String>> {
    let shift = p.min_exponent(&ChiOrU::U).min(0);
    let p = p.shift(&ChiOrU::U, -shift);
    let mut by_eps: BTreeMap<u32, Poly<String>> = BTreeMap::new();
    for (m, c) in p.terms() {
        let e = m.exponent_of(&ChiOrU::U);
        debug_assert!(e >= 0);
        let chi_mono = Monomial::from_exps(
            m.iter()
                .filter_map(|(v, k)| match v {
                    ChiOrU::U => None,
                    ChiOrU::Chi(s) => Some((s.clone(), *k)),
                })
                .collect(),
        );
        // (1 + eps)^e = sum_j C(e, j) eps^j
        let mut binom = BigInt::one();
        for j in 0..=e {
            let coeff = c * BigRational::from_integer(binom.clone());
            by_eps
                .entry(j as u32)
                .or_insert_with(Poly::zero)
                .add_term(chi_mono.clone(), coeff);
            binom = binom * BigInt::from(e - j) / BigInt::from(j + 1);
        }
    }
    by_eps.retain(|_, q| !q.is_zero());
    by_eps
}

/// Per-symbol Euler-characteristic assignment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChiAssignment {
    Value(BigRational),
    Symbolic,
}

/// Assignments of chi-values to atom base symbols.
#[derive(Clone, Debug, Default)]
pub struct EulerConfig {
    assignments: BTreeMap<String, ChiAssignment>,
    all_symbolic: bool,
}

impl EulerConfig {
    pub fn new() -> Self {
        Self::default()
    }

    /// Treat every base symbol as its own chi-indeterminate.
    pub fn symbolic_all() -> Self {
        EulerConfig {
            assignments: BTreeMap::new(),
            all_symbolic: true,
        }
    }

    pub fn assign(mut self, base: impl Into<String>, value: BigRational) -> Self {
        self.assignments
            .insert(base.into(), ChiAssignment::Value(value));
        self
    }

    pub fn assign_int(self, base: impl Into<String>, value: i64) -> Self {
        self.assign(base, BigRational::from_integer(BigInt::from(value)))
    }

    pub fn assign_symbolic(mut self, base: impl Into<String>) -> Self {
        self.assignments
            .insert(base.into(), ChiAssignment::Symbolic);
        self
    }

    fn lookup(&self, base: &str) -> Option<ChiAssignment> {
        self.assignments.get(base).cloned().or(if self.all_symbolic {
            Some(ChiAssignment::Symbolic)
        } else {
            None
        })
    }
}

/// Result of Euler specialization: a canonical fraction of polynomials in
/// chi-indeterminates (a plain rational when no symbol stays symbolic).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EulerValue(Frac<String>);

impl EulerValue {
    pub fn zero() -> Self {
        EulerValue(Frac::zero())
    }

    pub fn from_rational(c: BigRational) -> Self {
        EulerValue(Frac::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// The chi-indeterminate attached to `base`.
    pub fn symbol(base: impl Into<String>) -> Self {
        EulerValue(Frac::from_poly(Poly::var(base.into())))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        self.0.as_rational()
    }

    pub fn add(&self, other: &Self) -> Self {
        EulerValue(self.0.add(&other.0))
    }

    pub fn sub(&self, other: &Self) -> Self {
        EulerValue(self.0.sub(&other.0))
    }

    pub fn mul(&self, other: &Self) -> Self {
        EulerValue(self.0.mul(&other.0))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        EulerValue(self.0.scale(c))
    }

    pub fn neg(&self) -> Self {
        EulerValue(self.0.neg())
    }
}

/// A rational evaluation point for [`MotiveScalar::eval_at`].
#[derive(Clone, Debug, Default)]
pub struct EvalPoint {
    pub u: BigRational,
    pub atoms: BTreeMap<AdamsAtom, BigRational>,
}

impl EvalPoint {
    pub fn new(u: BigRational) -> Self {
        EvalPoint {
            u,
            atoms: BTreeMap::new(),
        }
    }

    pub fn with_atom(mut self, atom: AdamsAtom, value: BigRational) -> Self {
        self.atoms.insert(atom, value);
        self
    }
}

fn fmt_rational(c: &BigRational) -> String {
    let body = if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    };
    if c.is_negative() {
        format!("({})", body)
    } else {
        body
    }
}

fn fmt_var_power(name: &str, e: i64) -> String {
    if e == 1 {
        name.to_string()
    } else {
        format!("{}^{}", name, e)
    }
}

fn fmt_motive_poly(p: &Poly<Var>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (m, c) in p.terms_desc() {
        let mut factors = Vec::new();
        for (v, e) in m.iter() {
            match v {
                Var::U => factors.push(fmt_var_power("u", *e)),
                Var::Atom(a) => factors.push(fmt_var_power(&a.to_string(), *e)),
            }
        }
        parts.push(join_term(c, factors));
    }
    parts.join(" + ")
}

fn fmt_chi_poly(p: &Poly<String>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (m, c) in p.terms_desc() {
        let factors: Vec<String> = m.iter().map(|(v, e)| fmt_var_power(v, *e)).collect();
        parts.push(join_term(c, factors));
    }
    parts.join(" + ")
}

fn join_term(c: &BigRational, factors: Vec<String>) -> String {
    if factors.is_empty() {
        fmt_rational(c)
    } else if c.is_one() {
        factors.join(" * ")
    } else {
        format!("{} * {}", fmt_rational(c), factors.join(" * "))
    }
}

impl fmt::Display for MotiveScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.den().is_one() {
            write!(f, "{}", fmt_motive_poly(self.0.num()))
        } else {
            write!(
                f,
                "({}) / ({})",
                fmt_motive_poly(self.0.num()),
                fmt_motive_poly(self.0.den())
            )
        }
    }
}

impl fmt::Display for EulerValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.den().is_one() {
            write!(f, "{}", fmt_chi_poly(self.0.num()))
        } else {
            write!(
                f,
                "({}) / ({})",
                fmt_chi_poly(self.0.num()),
                fmt_chi_poly(self.0.den())
            )
        }
    }
}

impl serde::Serialize for MotiveScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for MotiveScalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_scalar(&text).map_err(serde::de::Error::custom)
    }
}

impl serde::Serialize for EulerValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn qr(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn x(k: u32) -> MotiveScalar {
        MotiveScalar::atom("X", k).unwrap()
    }

    #[test]
    fn normalize_cancels_polynomial_factors() {
        // (u^2 - 1)/(u - 1) -> u + 1
        let s = parse_scalar("(u^2 + (-1)) / (u + (-1))").unwrap();
        assert_eq!(s, MotiveScalar::u().add(&MotiveScalar::one()));
    }

    #[test]
    fn normalize_removes_content() {
        let two_u = MotiveScalar::u().scale(&q(2));
        let s = two_u.div(&MotiveScalar::from_int(2)).unwrap();
        assert_eq!(s, MotiveScalar::u());
    }

    #[test]
    fn normalize_cancels_atom_factor() {
        // (u*X.1 - u)/(X.1 - 1) -> u, cross-checked by evaluation
        let num = MotiveScalar::u().mul(&x(1)).sub(&MotiveScalar::u());
        let den = x(1).sub(&MotiveScalar::one());
        let s = num.div(&den).unwrap();
        assert_eq!(s, MotiveScalar::u());
        let pt = EvalPoint::new(q(7)).with_atom(AdamsAtom::new("X", 1).unwrap(), q(5));
        assert_eq!(num.eval_at(&pt).unwrap() / den.eval_at(&pt).unwrap(), q(7));
    }

    #[test]
    fn add_and_mul_basics() {
        assert!(MotiveScalar::u().add(&MotiveScalar::u().neg()).is_zero());
        // (-u)(-u) = u^2, i.e. L^{1/2} * L^{1/2} = L
        let l_half = MotiveScalar::l_half_pow(1);
        assert_eq!(l_half.mul(&l_half), MotiveScalar::u_pow(2));
        assert_eq!(MotiveScalar::l_half_pow(2), MotiveScalar::u_pow(2));
        assert_eq!(MotiveScalar::l_half_pow(-3), MotiveScalar::u_pow(-3).neg());
    }

    #[test]
    fn div_by_u_minus_uinv_is_canonical() {
        let d = MotiveScalar::u().sub(&MotiveScalar::u_pow(-1));
        let s = MotiveScalar::one().div(&d).unwrap();
        assert_eq!(s.to_string(), "(u) / (u^2 + (-1))");
        assert_eq!(s.mul(&d), MotiveScalar::one());
        assert_eq!(
            MotiveScalar::one().div(&MotiveScalar::zero()),
            Err(MotiveError::DivisionByZero)
        );
    }

    #[test]
    fn adams_monomial_action() {
        // psi^2((-L^{1/2})[X]) = (-L^{1/2})^2 psi^2([X]), i.e. u X.1 -> u^2 X.2
        let a = MotiveScalar::u().mul(&x(1));
        assert_eq!(a.adams(2).unwrap(), MotiveScalar::u_pow(2).mul(&x(2)));
        assert_eq!(x(2).adams(3).unwrap(), x(6));
        assert_eq!(
            MotiveScalar::from_int(7).adams(5).unwrap(),
            MotiveScalar::from_int(7)
        );
        assert_eq!(a.adams(1).unwrap(), a);
        assert_eq!(a.adams(0), Err(MotiveError::AdamsWeight));
    }

    #[test]
    fn adams_is_ring_homomorphism() {
        let a = MotiveScalar::u().add(&x(1));
        let b = x(2).sub(&MotiveScalar::u_pow(-1));
        for k in [2u32, 3] {
            assert_eq!(
                a.mul(&b).adams(k).unwrap(),
                a.adams(k).unwrap().mul(&b.adams(k).unwrap())
            );
            assert_eq!(
                a.add(&b).adams(k).unwrap(),
                a.adams(k).unwrap().add(&b.adams(k).unwrap())
            );
        }
        assert_eq!(
            a.adams(2).unwrap().adams(3).unwrap(),
            a.adams(6).unwrap()
        );
    }

    #[test]
    fn euler_of_weighted_atom() {
        // chi(L^{-3/2}[X]) = -chi(X)
        let s = MotiveScalar::u_pow(-3).neg().mul(&x(1));
        let cfg = EulerConfig::new().assign_int("X", 7);
        assert_eq!(s.euler_specialize(&cfg).unwrap().as_rational(), Some(q(-7)));
        let sym = s.euler_specialize(&EulerConfig::symbolic_all()).unwrap();
        assert_eq!(sym, EulerValue::symbol("X").neg());
        assert_eq!(sym.to_string(), "(-1) * X");
    }

    #[test]
    fn euler_needs_lhopital_step() {
        // (u^{-1} - u)/(u^2 - u^{-2}) -> -1/2 at u = 1
        let num = MotiveScalar::u_pow(-1).sub(&MotiveScalar::u());
        let den = MotiveScalar::u_pow(2).sub(&MotiveScalar::u_pow(-2));
        let s = num.div(&den).unwrap();
        let v = s.euler_specialize(&EulerConfig::new()).unwrap();
        assert_eq!(v.as_rational(), Some(qr(-1, 2)));
    }

    #[test]
    fn euler_of_u_power_is_one() {
        let v = MotiveScalar::u_pow(17)
            .euler_specialize(&EulerConfig::new())
            .unwrap();
        assert_eq!(v.as_rational(), Some(q(1)));
    }

    #[test]
    fn euler_pole_detected() {
        let s = MotiveScalar::one()
            .div(&MotiveScalar::u().sub(&MotiveScalar::one()))
            .unwrap();
        assert_eq!(
            s.euler_specialize(&EulerConfig::new()),
            Err(MotiveError::EulerPole)
        );
    }

    #[test]
    fn euler_missing_assignment() {
        let cfg = EulerConfig::new();
        assert_eq!(
            x(1).euler_specialize(&cfg),
            Err(MotiveError::MissingChi("X".into()))
        );
    }

    #[test]
    fn eval_examples() {
        assert_eq!(
            MotiveScalar::u_pow(2).eval_at(&EvalPoint::new(q(3))).unwrap(),
            q(9)
        );
        let s = parse_scalar("(u^2 + (-1)) / (u + (-1))").unwrap();
        assert_eq!(s.eval_at(&EvalPoint::new(q(3))).unwrap(), q(4));
        let s = x(1).mul(&MotiveScalar::u_pow(-1));
        let pt = EvalPoint::new(q(2)).with_atom(AdamsAtom::new("X", 1).unwrap(), q(5));
        assert_eq!(s.eval_at(&pt).unwrap(), qr(5, 2));
        // pole
        let s = MotiveScalar::one()
            .div(&MotiveScalar::u().sub(&MotiveScalar::one()))
            .unwrap();
        assert_eq!(
            s.eval_at(&EvalPoint::new(q(1))),
            Err(MotiveError::EvaluationPole)
        );
    }

    #[test]
    fn canonical_display() {
        let s = MotiveScalar::u_pow(-3).neg().mul(&x(1));
        assert_eq!(s.to_string(), "(-1) * u^-3 * X.1");
        let t = MotiveScalar::u_pow(2)
            .add(&MotiveScalar::from_rational(qr(1, 2)).mul(&x(2)));
        assert_eq!(t.to_string(), "u^2 + 1/2 * X.2");
    }

    #[test]
    fn euler_commutes_with_adams() {
        let cfg = EulerConfig::new().assign_int("X", -6);
        let s = MotiveScalar::u_pow(-3)
            .mul(&x(1))
            .add(&MotiveScalar::one().div(&MotiveScalar::u().add(&MotiveScalar::u_pow(-1))).unwrap());
        for k in [1u32, 2, 3, 5] {
            assert_eq!(
                s.adams(k).unwrap().euler_specialize(&cfg).unwrap(),
                s.euler_specialize(&cfg).unwrap()
            );
        }
    }
}
