//! Canonical fractions of Laurent polynomials.
//!
//! Canonical form: numerator and denominator are ordinary polynomials with
//! gcd 1, no common monomial factor (for every variable, the minimum
//! exponent across the two parts is zero), and the denominator's leading
//! coefficient is +1. Equality of canonical forms is structural equality.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gcd::gcd;
use super::poly::{Monomial, Poly, PolyVar};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Frac<V: PolyVar> {
    num: Poly<V>,
    den: Poly<V>,
}

/// Raw fraction with a zero denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroDenominator;

impl<V: PolyVar> Frac<V> {
    /// Canonicalize a raw Laurent fraction.
    pub fn new(num: Poly<V>, den: Poly<V>) -> Result<Self, ZeroDenominator> {
        if den.is_zero() {
            return Err(ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Frac {
                num: Poly::zero(),
                den: Poly::one(),
            });
        }
        // Clear Laurent units: shift each variable so both parts are ordinary
        // polynomials sharing no monomial factor.
        let mut num = num;
        let mut den = den;
        let mut vars = num.vars();
        vars.extend(den.vars());
        for v in vars {
            let m = num.min_exponent(&v).min(den.min_exponent(&v));
            if m != 0 {
                num = num.shift(&v, -m);
                den = den.shift(&v, -m);
            }
        }
        let g = gcd(&num, &den);
        if !g.is_one() {
            num = num.exact_div(&g).expect("gcd divides numerator");
            den = den.exact_div(&g).expect("gcd divides denominator");
        }
        let lc = den.leading().expect("nonzero denominator").1.clone();
        if !lc.is_one() {
            num = num.div_rational(&lc);
            den = den.div_rational(&lc);
        }
        Ok(Frac { num, den })
    }

    pub fn from_poly(p: Poly<V>) -> Self {
        Frac::new(p, Poly::one()).expect("unit denominator")
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly<V> {
        &self.num
    }

    pub fn den(&self) -> &Poly<V> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// `Some(c)` when the value is the constant rational `c`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if !self.den.is_one() {
            return None;
        }
        self.num.as_constant()
    }

    pub fn add(&self, other: &Self) -> Self {
        // a/b + c/d with g = gcd(b, d): t = a(d/g) + c(b/g) over b(d/g);
        // the only possible common factor of t with the denominator divides g.
        let g = gcd(&self.den, &other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            let den = self.den.mul(&other.den);
            return Self::finish_reduced(num, den);
        }
        let db = self.den.exact_div(&g).expect("gcd divides");
        let dd = other.den.exact_div(&g).expect("gcd divides");
        let t = self.num.mul(&dd).add(&other.num.mul(&db));
        if t.is_zero() {
            return Self::zero();
        }
        let h = gcd(&t, &g);
        if h.is_one() {
            Self::finish_reduced(t, self.den.mul(&dd))
        } else {
            let t = t.exact_div(&h).expect("gcd divides");
            let den = self
                .den
                .exact_div(&h)
                .expect("h divides g divides den")
                .mul(&dd);
            Self::finish_reduced(t, den)
        }
    }

    pub fn neg(&self) -> Self {
        Frac {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        // Cross-cancel so the product is reduced without a large final gcd.
        let g1 = gcd(&self.num, &other.den);
        let g2 = gcd(&other.num, &self.den);
        let n1 = self.num.exact_div(&g1).expect("gcd divides");
        let d2 = other.den.exact_div(&g1).expect("gcd divides");
        let n2 = other.num.exact_div(&g2).expect("gcd divides");
        let d1 = self.den.exact_div(&g2).expect("gcd divides");
        Self::finish_reduced(n1.mul(&n2), d1.mul(&d2))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::finish_reduced(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        Some(self.mul(&other.inv()?))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Frac {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Finish canonicalization for a pair already known to be free of common
    /// polynomial factors: only the monic-denominator invariant needs fixing.
    fn finish_reduced(num: Poly<V>, den: Poly<V>) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        debug_assert!(gcd(&num, &den).is_one(), "finish_reduced got a reducible pair");
        let mut num = num;
        let mut den = den;
        let lc = den.leading().expect("nonzero denominator").1.clone();
        if !lc.is_one() {
            num = num.div_rational(&lc);
            den = den.div_rational(&lc);
        }
        Frac { num, den }
    }

    /// Evaluate at a point. `None` when the denominator vanishes or a
    /// negative power of zero appears.
    pub fn eval(&self, value_of: &impl Fn(&V) -> BigRational) -> Option<BigRational> {
        let d = self.den.eval(value_of)?;
        if d.is_zero() {
            return None;
        }
        let n = self.num.eval(value_of)?;
        Some(n / d)
    }

    /// Map monomials of both parts through a multiplicative monomial map,
    /// then re-canonicalize (ring homomorphisms need not preserve gcds).
    pub fn map_monomials<W: PolyVar>(
        &self,
        mut f: impl FnMut(&Monomial<V>) -> Monomial<W>,
    ) -> Frac<W> {
        let num = self.num.map_monomials(&mut f);
        let den = self.den.map_monomials(&mut f);
        Frac::new(num, den).expect("injective monomial map keeps denominator nonzero")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn cancels_polynomial_factors() {
        // (u^2 - 1)/(u - 1) = u + 1
        let u = Poly::var("u");
        let num = u.mul(&u).sub(&Poly::one());
        let den = u.sub(&Poly::one());
        let f = Frac::new(num, den).unwrap();
        assert_eq!(f, Frac::from_poly(u.add(&Poly::one())));
    }

    #[test]
    fn clears_laurent_units_and_makes_den_monic() {
        // 1/(u - u^{-1}) -> u / (u^2 - 1)
        let u = Poly::var("u");
        let uinv = Poly::monomial(Monomial::var("u", -1), q(1));
        let f = Frac::new(Poly::one(), u.sub(&uinv)).unwrap();
        assert_eq!(f.num(), &u);
        assert_eq!(f.den(), &u.mul(&u).sub(&Poly::one()));
    }

    #[test]
    fn field_identities() {
        let u = Frac::from_poly(Poly::var("u"));
        let x = Frac::from_poly(Poly::var("x"));
        let a = u.add(&x);
        let b = u.sub(&x);
        let prod = a.mul(&b);
        let back = prod.div(&b).unwrap();
        assert_eq!(back, a);
        assert_eq!(a.mul(&a.inv().unwrap()), Frac::one());
        assert!(Frac::<&str>::zero().inv().is_none());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(Frac::<&str>::new(Poly::one(), Poly::zero()).is_err());
    }
}
