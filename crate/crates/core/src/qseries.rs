//! Truncated power series in `q` over the motive field.
//!
//! A series of order `N` tracks coefficients of `q^0 .. q^N` exactly; all
//! arithmetic is exact modulo `q^{N+1}`. Binary operations demand equal
//! orders — re-truncation is explicit via [`QSeries::truncate`], never
//! silent.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::motive::{MotiveError, MotiveScalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("series order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("exp/log domain: expected constant term {expected}")]
    Domain { expected: &'static str },
    #[error("non-unit denominator: constant term is zero")]
    NonUnitDenominator,
    #[error("truncation order {0} exceeds current order {1}")]
    BadTruncation(usize, usize),
    #[error(transparent)]
    Motive(#[from] MotiveError),
}

/// Coefficients of `q^0 .. q^order`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSeries {
    order: usize,
    coeffs: Vec<MotiveScalar>,
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        QSeries {
            order,
            coeffs: vec![MotiveScalar::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = MotiveScalar::one();
        s
    }

    /// `c * q^k`, truncated to `order`.
    pub fn monomial(order: usize, k: usize, c: MotiveScalar) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn from_coeffs(order: usize, mut coeffs: Vec<MotiveScalar>) -> Self {
        coeffs.resize(order + 1, MotiveScalar::zero());
        QSeries { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, n: usize) -> &MotiveScalar {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[MotiveScalar] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, n: usize, c: MotiveScalar) {
        self.coeffs[n] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Result<Self, SeriesError> {
        if order > self.order {
            return Err(SeriesError::BadTruncation(order, self.order));
        }
        Ok(QSeries {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    fn check_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order != other.order {
            return Err(SeriesError::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        Ok(QSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        Ok(QSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        })
    }

    pub fn scale(&self, c: &MotiveScalar) -> Self {
        QSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let mut out = Self::zero(self.order);
        for i in 0..=self.order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(self.order - i) {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                let t = self.coeffs[i].mul(&other.coeffs[j]);
                out.coeffs[i + j] = out.coeffs[i + j].add(&t);
            }
        }
        Ok(out)
    }

    /// Substitute `q -> -q`.
    pub fn negate_q(&self) -> Self {
        QSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| if n % 2 == 0 { c.clone() } else { c.neg() })
                .collect(),
        }
    }

    /// Ordinary exponential; requires a vanishing constant term.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::Domain { expected: "0" });
        }
        let mut out = Self::one(self.order);
        // n g_n = sum_{j=1..n} j f_j g_{n-j}
        for n in 1..=self.order {
            let mut acc = MotiveScalar::zero();
            for j in 1..=n {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                let t = self.coeffs[j]
                    .scale(&BigRational::from_integer(BigInt::from(j as i64)))
                    .mul(&out.coeffs[n - j]);
                acc = acc.add(&t);
            }
            out.coeffs[n] = acc.scale(&BigRational::new(BigInt::from(1), BigInt::from(n as i64)));
        }
        Ok(out)
    }

    /// Ordinary logarithm; requires constant term 1.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::Domain { expected: "1" });
        }
        let mut out = Self::zero(self.order);
        // h_n = f_n - (1/n) sum_{j=1..n-1} j h_j f_{n-j}
        for n in 1..=self.order {
            let mut acc = MotiveScalar::zero();
            for j in 1..n {
                if out.coeffs[j].is_zero() || self.coeffs[n - j].is_zero() {
                    continue;
                }
                let t = out.coeffs[j]
                    .scale(&BigRational::from_integer(BigInt::from(j as i64)))
                    .mul(&self.coeffs[n - j]);
                acc = acc.add(&t);
            }
            out.coeffs[n] = self.coeffs[n]
                .sub(&acc.scale(&BigRational::new(BigInt::from(1), BigInt::from(n as i64))));
        }
        Ok(out)
    }

    /// Expand `num/den` as a series: the unique `h` with `den * h = num`
    /// modulo `q^{order+1}`. Coefficient slices may have any length.
    pub fn expand_rational(
        num: &[MotiveScalar],
        den: &[MotiveScalar],
        order: usize,
    ) -> Result<Self, SeriesError> {
        let den0 = den.first().cloned().unwrap_or_else(MotiveScalar::zero);
        if den0.is_zero() {
            return Err(SeriesError::NonUnitDenominator);
        }
        let at = |s: &[MotiveScalar], n: usize| {
            s.get(n).cloned().unwrap_or_else(MotiveScalar::zero)
        };
        let mut out = Self::zero(order);
        for n in 0..=order {
            let mut acc = at(num, n);
            for j in 1..=n.min(den.len().saturating_sub(1)) {
                let d = at(den, j);
                if d.is_zero() || out.coeffs[n - j].is_zero() {
                    continue;
                }
                acc = acc.sub(&d.mul(&out.coeffs[n - j]));
            }
            out.coeffs[n] = acc.div(&den0)?;
        }
        Ok(out)
    }

    /// The Adams-series bridge: from `b` with `b_0 = 0` produce `a` with
    /// `a_n = sum_{k|n} (1/k) psi^k(b_{n/k})`, so that `exp(a) = Exp(b)`.
    pub fn exp_coeff_bridge(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::Domain { expected: "0" });
        }
        let mut out = Self::zero(self.order);
        for n in 1..=self.order {
            let mut acc = MotiveScalar::zero();
            for k in 1..=n {
                if n % k != 0 || self.coeffs[n / k].is_zero() {
                    continue;
                }
                let t = self.coeffs[n / k]
                    .adams(k as u32)?
                    .scale(&BigRational::new(BigInt::from(1), BigInt::from(k as i64)));
                acc = acc.add(&t);
            }
            out.coeffs[n] = acc;
        }
        Ok(out)
    }

    /// The power-structure exponential `Exp(sum a_n q^n) = prod (1-q^n)^{-a_n}`,
    /// computed as `exp` of the Adams-series bridge.
    pub fn plethystic_exp(&self) -> Result<Self, SeriesError> {
        self.exp_coeff_bridge()?.exp()
    }

    /// Inverse of [`QSeries::plethystic_exp`]; requires constant term 1.
    /// Inverts the triangular system `a_n = sum_{k|n} (1/k) psi^k(b_{n/k})`.
    pub fn plethystic_log(&self) -> Result<Self, SeriesError> {
        let a = self.log()?;
        let mut b = Self::zero(self.order);
        for n in 1..=self.order {
            let mut acc = a.coeffs[n].clone();
            for k in 2..=n {
                if n % k != 0 || b.coeffs[n / k].is_zero() {
                    continue;
                }
                let t = b.coeffs[n / k]
                    .adams(k as u32)?
                    .scale(&BigRational::new(BigInt::from(1), BigInt::from(k as i64)));
                acc = acc.sub(&t);
            }
            b.coeffs[n] = acc;
        }
        Ok(b)
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if n == 0 {
                write!(f, "({})", c)?;
            } else if n == 1 {
                write!(f, "({}) q", c)?;
            } else {
                write!(f, "({}) q^{}", c, n)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// JSON form: an `order` field plus the coefficient strings.
#[derive(Serialize, Deserialize)]
pub struct QSeriesJson {
    pub order: usize,
    pub coeffs: Vec<String>,
}

impl From<&QSeries> for QSeriesJson {
    fn from(s: &QSeries) -> Self {
        QSeriesJson {
            order: s.order,
            coeffs: s.coeffs.iter().map(|c| c.to_string()).collect(),
        }
    }
}

impl QSeriesJson {
    pub fn to_series(&self) -> Result<QSeries, MotiveError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| crate::motive::parse_scalar(c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(QSeries::from_coeffs(self.order, coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::motive::parse_scalar;

    fn s(text: &str) -> MotiveScalar {
        parse_scalar(text).unwrap()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn exp_log_fixed_examples() {
        assert_eq!(QSeries::zero(4).exp().unwrap(), QSeries::one(4));
        assert_eq!(QSeries::one(4).log().unwrap(), QSeries::zero(4));

        // log(1 + a q) = a q - a^2 q^2 / 2 + a^3 q^3 / 3 with a = X.1
        let a = s("X.1");
        let f = QSeries::from_coeffs(3, vec![MotiveScalar::one(), a.clone()]);
        let l = f.log().unwrap();
        assert_eq!(l.coeff(1), &a);
        assert_eq!(l.coeff(2), &a.mul(&a).scale(&BigRational::new((-1).into(), 2.into())));
        assert_eq!(
            l.coeff(3),
            &a.mul(&a).mul(&a).scale(&BigRational::new(1.into(), 3.into()))
        );

        // exp(u q + u^2 q^2/2 + ...) truncated at order 2 is 1 + u q + u^2 q^2
        let g = QSeries::from_coeffs(
            2,
            vec![
                MotiveScalar::zero(),
                s("u"),
                s("1/2 * u^2"),
            ],
        );
        let e = g.exp().unwrap();
        assert_eq!(e.coeff(0), &MotiveScalar::one());
        assert_eq!(e.coeff(1), &s("u"));
        assert_eq!(e.coeff(2), &s("u^2"));
    }

    #[test]
    fn exp_log_domain_errors() {
        assert!(QSeries::one(2).exp().is_err());
        assert!(QSeries::zero(2).log().is_err());
    }

    #[test]
    fn expand_rational_geometric() {
        let one = [MotiveScalar::one()];
        let den = [MotiveScalar::one(), MotiveScalar::from_int(-1)];
        let g = QSeries::expand_rational(
            &[MotiveScalar::zero(), MotiveScalar::one()],
            &den,
            4,
        )
        .unwrap();
        for n in 1..=4 {
            assert_eq!(g.coeff(n), &MotiveScalar::one());
        }
        assert!(g.coeff(0).is_zero());
        assert_eq!(
            QSeries::expand_rational(&one, &one, 2).unwrap(),
            QSeries::one(2)
        );
        assert!(matches!(
            QSeries::expand_rational(&one, &[MotiveScalar::zero()], 2),
            Err(SeriesError::NonUnitDenominator)
        ));
    }

    #[test]
    fn expand_rational_satisfies_defining_identity() {
        let num = [s("u"), s("X.1"), s("(-1) * u^-2")];
        let den = [MotiveScalar::one(), s("u + X.1"), s("3/2")];
        let h = QSeries::expand_rational(&num, &den, 6).unwrap();
        let num_s = QSeries::from_coeffs(6, num.to_vec());
        let den_s = QSeries::from_coeffs(6, den.to_vec());
        assert_eq!(den_s.mul(&h).unwrap(), num_s);
    }

    #[test]
    fn plethystic_exp_of_atom() {
        // Exp(X.1 q) = 1 + X.1 q + ((X.1^2 + X.2)/2) q^2 + ...
        let f = QSeries::monomial(2, 1, s("X.1"));
        let e = f.plethystic_exp().unwrap();
        assert_eq!(e.coeff(0), &MotiveScalar::one());
        assert_eq!(e.coeff(1), &s("X.1"));
        assert_eq!(e.coeff(2), &s("1/2 * X.1^2 + 1/2 * X.2"));
        // and Exp(0) = 1
        assert_eq!(QSeries::zero(3).plethystic_exp().unwrap(), QSeries::one(3));
    }

    #[test]
    fn plethystic_exp_of_u_matches_geometric() {
        // Exp(u q) = 1 + u q + u^2 q^2 (Adams bridge with psi^k(u) = u^k)
        let f = QSeries::monomial(2, 1, s("u"));
        let e = f.plethystic_exp().unwrap();
        assert_eq!(e.coeff(1), &s("u"));
        assert_eq!(e.coeff(2), &s("u^2"));
    }

    #[test]
    fn plethystic_log_inverts() {
        let f = QSeries::from_coeffs(
            2,
            vec![MotiveScalar::one(), s("X.1"), s("1/2 * X.1^2 + 1/2 * X.2")],
        );
        let l = f.plethystic_log().unwrap();
        assert_eq!(l, QSeries::monomial(2, 1, s("X.1")));
        assert_eq!(QSeries::one(3).plethystic_log().unwrap(), QSeries::zero(3));
    }

    #[test]
    fn plethystic_log_of_rational_binomial() {
        // (1-q)^{-c} has coefficients c(c+1)...(c+n-1)/n!; Log returns c q.
        let c = BigRational::new(5.into(), 2.into());
        let mut coeffs = vec![MotiveScalar::one()];
        let mut acc = BigRational::from_integer(1.into());
        for n in 0..3u32 {
            acc = acc * (&c + BigRational::from_integer(n.into()))
                / BigRational::from_integer(BigInt::from(n + 1));
            coeffs.push(MotiveScalar::from_rational(acc.clone()));
        }
        let f = QSeries::from_coeffs(3, coeffs);
        let l = f.plethystic_log().unwrap();
        assert_eq!(l.coeff(1), &MotiveScalar::from_rational(c));
        assert!(l.coeff(2).is_zero());
        assert!(l.coeff(3).is_zero());
    }

    #[test]
    fn bridge_examples() {
        // b = X.1 q  =>  a = X.1 q + (1/2) X.2 q^2
        let b = QSeries::monomial(2, 1, s("X.1"));
        let a = b.exp_coeff_bridge().unwrap();
        assert_eq!(a.coeff(1), &s("X.1"));
        assert_eq!(a.coeff(2), &s("1/2 * X.2"));

        // b = c q  =>  a_n = c / n
        let b = QSeries::monomial(4, 1, MotiveScalar::from_int(3));
        let a = b.exp_coeff_bridge().unwrap();
        for n in 1..=4 {
            assert_eq!(
                a.coeff(n),
                &MotiveScalar::from_rational(BigRational::new(3.into(), (n as i64).into()))
            );
        }

        assert_eq!(
            QSeries::zero(3).exp_coeff_bridge().unwrap(),
            QSeries::zero(3)
        );
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let a = QSeries::one(3);
        let b = QSeries::one(4);
        assert!(matches!(a.add(&b), Err(SeriesError::OrderMismatch(3, 4))));
        assert_eq!(b.truncate(3).unwrap(), QSeries::one(3));
        assert!(b.truncate(5).is_err());
    }

    #[test]
    fn euler_commutes_with_plethystic_exp() {
        use crate::motive::EulerConfig;
        // Exp over motives, specialized, equals Exp over the specialized
        // rational coefficients.
        let f = QSeries::from_coeffs(4, vec![MotiveScalar::zero(), s("X.1"), s("u * X.1"), s("X.2")]);
        let cfg = EulerConfig::new().assign_int("X", -6);
        let lhs: Vec<BigRational> = f
            .plethystic_exp()
            .unwrap()
            .coeffs()
            .iter()
            .map(|c| c.euler_specialize(&cfg).unwrap().as_rational().unwrap())
            .collect();
        let spec = QSeries::from_coeffs(
            4,
            f.coeffs()
                .iter()
                .map(|c| {
                    MotiveScalar::from_rational(
                        c.euler_specialize(&cfg).unwrap().as_rational().unwrap(),
                    )
                })
                .collect(),
        );
        let rhs: Vec<BigRational> = spec
            .plethystic_exp()
            .unwrap()
            .coeffs()
            .iter()
            .map(|c| c.as_rational().unwrap())
            .collect();
        assert_eq!(lhs, rhs);
    }
}
