//! Sparse Laurent polynomials over Q in a totally ordered set of variables.
//!
//! Monomials are exponent vectors with integer (possibly negative) entries,
//! compared lexicographically in variable precedence order. The canonical
//! fraction layer ([`super::frac`]) restricts to ordinary polynomials
//! (exponents >= 0) after clearing Laurent units; this layer keeps full
//! Laurent generality for raw inputs.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Marker bound for variable types usable in polynomials. Precedence for
/// the lexicographic monomial order is the variable's `Ord` (smallest first).
pub trait PolyVar: Clone + Ord + Debug {}
impl<T: Clone + Ord + Debug> PolyVar for T {}

/// A power product of variables with integer exponents.
///
/// Invariant: entries sorted by variable, no zero exponents stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Monomial<V: PolyVar> {
    exps: Vec<(V, i64)>,
}

impl<V: PolyVar> Monomial<V> {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(v: V, e: i64) -> Self {
        if e == 0 {
            Self::one()
        } else {
            Monomial { exps: vec![(v, e)] }
        }
    }

    pub fn from_exps(mut exps: Vec<(V, i64)>) -> Self {
        exps.retain(|(_, e)| *e != 0);
        exps.sort_by(|a, b| a.0.cmp(&b.0));
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent_of(&self, v: &V) -> i64 {
        self.exps
            .iter()
            .find(|(w, _)| w == v)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = &(V, i64)> {
        self.exps.iter()
    }

    /// Merge exponents additively.
    pub fn mul(&self, other: &Self) -> Self {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() || j < other.exps.len() {
            match (self.exps.get(i), other.exps.get(j)) {
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => {
                        exps.push((va.clone(), *ea));
                        i += 1;
                    }
                    Ordering::Greater => {
                        exps.push((vb.clone(), *eb));
                        j += 1;
                    }
                    Ordering::Equal => {
                        let e = ea + eb;
                        if e != 0 {
                            exps.push((va.clone(), e));
                        }
                        i += 1;
                        j += 1;
                    }
                },
                (Some((va, ea)), None) => {
                    exps.push((va.clone(), *ea));
                    i += 1;
                }
                (None, Some((vb, eb))) => {
                    exps.push((vb.clone(), *eb));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Monomial { exps }
    }

    /// Exponent-wise difference (Laurent division, always defined).
    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    pub fn inv(&self) -> Self {
        Monomial {
            exps: self.exps.iter().map(|(v, e)| (v.clone(), -e)).collect(),
        }
    }

    /// Ordinary divisibility: every exponent of `other` at most ours.
    pub fn divisible_by(&self, other: &Self) -> bool {
        other.exps.iter().all(|(v, e)| self.exponent_of(v) >= *e)
    }

    pub fn pow(&self, k: i64) -> Self {
        if k == 0 {
            return Self::one();
        }
        Monomial {
            exps: self
                .exps
                .iter()
                .map(|(v, e)| (v.clone(), e * k))
                .collect(),
        }
    }
}

impl<V: PolyVar> Ord for Monomial<V> {
    /// Lexicographic order: the first variable (in precedence order) with
    /// differing exponents decides; larger exponent means larger monomial.
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.exps.get(i), other.exps.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some((_, ea)), None) => return ea.cmp(&0),
                (None, Some((_, eb))) => return 0.cmp(eb),
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => return ea.cmp(&0),
                    Ordering::Greater => return 0.cmp(eb),
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl<V: PolyVar> PartialOrd for Monomial<V> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial: monomial -> nonzero rational coefficient.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly<V: PolyVar> {
    terms: BTreeMap<Monomial<V>, BigRational>,
}

impl<V: PolyVar> Poly<V> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Poly { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn var(v: V) -> Self {
        Self::monomial(Monomial::var(v, 1), BigRational::one())
    }

    pub fn monomial(m: Monomial<V>, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial<V>, &BigRational)> {
        self.terms.iter()
    }

    /// Terms in descending monomial order (leading first).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial<V>, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn leading(&self) -> Option<(&Monomial<V>, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial<V>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial<V>, c: &BigRational) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc * c))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        self.mul_term(&Monomial::one(), c)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Poly::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn vars(&self) -> BTreeSet<V> {
        let mut set = BTreeSet::new();
        for m in self.terms.keys() {
            for (v, _) in m.iter() {
                set.insert(v.clone());
            }
        }
        set
    }

    pub fn contains_var(&self, v: &V) -> bool {
        self.terms.keys().any(|m| m.exponent_of(v) != 0)
    }

    /// Smallest exponent of `v` over all terms (0 for terms lacking `v`).
    pub fn min_exponent(&self, v: &V) -> i64 {
        self.terms
            .keys()
            .map(|m| m.exponent_of(v))
            .min()
            .unwrap_or(0)
    }

    pub fn max_exponent(&self, v: &V) -> i64 {
        self.terms
            .keys()
            .map(|m| m.exponent_of(v))
            .max()
            .unwrap_or(0)
    }

    /// Multiply every term by `v^e`.
    pub fn shift(&self, v: &V, e: i64) -> Self {
        if e == 0 {
            return self.clone();
        }
        let m = Monomial::var(v.clone(), e);
        self.mul_term(&m, &BigRational::one())
    }

    /// Coefficient of `v^k`, as a polynomial in the remaining variables.
    pub fn coeff_of_power(&self, v: &V, k: i64) -> Self {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            if m.exponent_of(v) == k {
                let reduced = Monomial::from_exps(
                    m.iter()
                        .filter(|(w, _)| w != v)
                        .cloned()
                        .collect(),
                );
                out.add_term(reduced, c.clone());
            }
        }
        out
    }

    /// All exponents of `v` that occur, ascending.
    pub fn exponents_of(&self, v: &V) -> BTreeSet<i64> {
        self.terms.keys().map(|m| m.exponent_of(v)).collect()
    }

    /// Rebuild with monomials mapped through `f` (must be multiplicative on
    /// monomials for ring-map semantics; coefficients are preserved).
    pub fn map_monomials<W: PolyVar>(&self, mut f: impl FnMut(&Monomial<V>) -> Monomial<W>) -> Poly<W> {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }

    /// Exact evaluation; `value_of` must return a value for every variable.
    /// Returns `None` on 0 raised to a negative power.
    pub fn eval(&self, value_of: &impl Fn(&V) -> BigRational) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.iter() {
                let val = value_of(v);
                if val.is_zero() {
                    if *e < 0 {
                        return None;
                    }
                    t = BigRational::zero();
                    break;
                }
                t *= rational_pow(&val, *e);
            }
            acc += t;
        }
        Some(acc)
    }

    /// The rational `r` with `self / r` integer-primitive and positive leading
    /// coefficient. Zero polynomial yields 1.
    pub fn rational_content(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::one();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = BigRational::new(num_gcd, den_lcm);
        if self.leading().unwrap().1.is_negative() {
            content = -content;
        }
        content
    }

    /// Divide all coefficients by a nonzero rational.
    pub fn div_rational(&self, c: &BigRational) -> Self {
        assert!(!c.is_zero());
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, cc)| (m.clone(), cc / c))
                .collect(),
        }
    }

    /// Exact multivariate division; `None` when `d` does not divide `self`.
    /// Exponents are assumed nonnegative on both sides.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if let Some(c) = d.as_constant() {
            return Some(self.div_rational(&c));
        }
        let (dm, dc) = d.leading().unwrap();
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((rm, rc)) = rem.leading() {
            if !rm.divisible_by(&dm) {
                return None;
            }
            let qm = rm.div(&dm);
            let qc = rc / &dc;
            quot.add_term(qm.clone(), qc.clone());
            rem = rem.sub(&d.mul_term(&qm, &qc));
        }
        Some(quot)
    }
}

/// `base^e` for integer `e` (negative allowed, nonzero base).
pub fn rational_pow(base: &BigRational, e: i64) -> BigRational {
    if e == 0 {
        return BigRational::one();
    }
    let mut acc = BigRational::one();
    let b = if e > 0 { base.clone() } else { base.recip() };
    for _ in 0..e.unsigned_abs() {
        acc *= &b;
    }
    acc
}
