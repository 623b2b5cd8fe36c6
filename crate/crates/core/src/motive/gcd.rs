//! Multivariate polynomial gcd over Q by primitive pseudo-remainder sequences.
//!
//! Inputs must be ordinary polynomials (all exponents >= 0). The result is
//! monic with respect to the lexicographic leading monomial, so associates
//! collapse to one representative.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{Monomial, Poly, PolyVar};

/// Monic gcd of `a` and `b`. `gcd(0, 0) = 0`.
pub fn gcd<V: PolyVar>(a: &Poly<V>, b: &Poly<V>) -> Poly<V> {
    if a.is_zero() {
        return make_monic(b.clone());
    }
    if b.is_zero() {
        return make_monic(a.clone());
    }
    // Common monomial factor first: variables are primes, and stripping the
    // per-poly monomial content leaves polynomials no variable divides.
    let (ma, a1) = strip_monomial_content(a);
    let (mb, b1) = strip_monomial_content(b);
    let mg = monomial_gcd(&ma, &mb);
    let core = gcd_primitive_parts(&a1, &b1);
    make_monic(core.mul_term(&mg, &BigRational::one()))
}

fn gcd_primitive_parts<V: PolyVar>(a: &Poly<V>, b: &Poly<V>) -> Poly<V> {
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return Poly::one();
    }
    if a == b {
        return a.clone();
    }
    let vars_a = a.vars();
    let vars_b = b.vars();
    // Variables present in only one operand contribute through contents only.
    let common: Vec<V> = vars_a.intersection(&vars_b).cloned().collect();
    if common.is_empty() {
        return Poly::one();
    }
    let x = common[0].clone();
    let cont_a = content_in(a, &x);
    let cont_b = content_in(b, &x);
    let cont = gcd(&cont_a, &cont_b);
    let pa = a.exact_div(&cont_a).expect("content divides");
    let pb = b.exact_div(&cont_b).expect("content divides");
    let g = prs_gcd(&pa, &pb, &x);
    cont.mul(&g)
}

/// Primitive PRS on two polynomials primitive w.r.t. `x`, both containing `x`.
fn prs_gcd<V: PolyVar>(a: &Poly<V>, b: &Poly<V>, x: &V) -> Poly<V> {
    let mut f = a.clone();
    let mut g = b.clone();
    if degree_in(&f, x) < degree_in(&g, x) {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        if g.is_zero() {
            return primitive_part(&f, x);
        }
        if degree_in(&g, x) == 0 {
            // A nonzero remainder free of x: the x-primitive inputs share
            // no factor involving x, and contents were handled upstream.
            return Poly::one();
        }
        let r = pseudo_rem(&f, &g, x);
        f = g;
        g = primitive_part(&r, x);
    }
}

/// Remainder of `lc(g)^k * f` modulo `g`, working in `x`. Only well-defined
/// up to factors of `lc(g)`, which is all a primitive PRS needs.
fn pseudo_rem<V: PolyVar>(f: &Poly<V>, g: &Poly<V>, x: &V) -> Poly<V> {
    let dg = degree_in(g, x);
    let lcg = g.coeff_of_power(x, dg);
    let mut r = f.clone();
    loop {
        if r.is_zero() {
            return r;
        }
        let dr = degree_in(&r, x);
        if dr < dg {
            return r;
        }
        let lcr = r.coeff_of_power(x, dr);
        // r <- lcg * r - lcr * x^(dr-dg) * g
        let shifted = g.shift(x, dr - dg);
        r = r.mul(&lcg).sub(&shifted.mul(&lcr));
        debug_assert!(r.is_zero() || degree_in(&r, x) < dr);
    }
}

/// Gcd of the `x`-power coefficients, with early exit once it collapses to
/// a constant.
fn content_in<V: PolyVar>(p: &Poly<V>, x: &V) -> Poly<V> {
    let mut acc = Poly::zero();
    for k in p.exponents_of(x) {
        let c = p.coeff_of_power(x, k);
        acc = gcd(&acc, &c);
        if acc.as_constant().map(|c| !c.is_zero()).unwrap_or(false) {
            return Poly::one();
        }
    }
    make_monic(acc)
}

fn primitive_part<V: PolyVar>(p: &Poly<V>, x: &V) -> Poly<V> {
    if p.is_zero() {
        return Poly::zero();
    }
    let cont = content_in(p, x);
    let pp = p.exact_div(&cont).expect("content divides");
    // Normalize the rational scale as well so PRS coefficients stay small.
    let rc = pp.rational_content();
    pp.div_rational(&rc)
}

fn degree_in<V: PolyVar>(p: &Poly<V>, x: &V) -> i64 {
    p.max_exponent(x)
}

fn strip_monomial_content<V: PolyVar>(p: &Poly<V>) -> (Monomial<V>, Poly<V>) {
    let mut exps = Vec::new();
    for v in p.vars() {
        let e = p.min_exponent(&v);
        debug_assert!(e >= 0, "gcd inputs must be ordinary polynomials");
        if e > 0 {
            exps.push((v, e));
        }
    }
    let m = Monomial::from_exps(exps);
    let stripped = p.mul_term(&m.inv(), &BigRational::one());
    (m, stripped)
}

fn monomial_gcd<V: PolyVar>(a: &Monomial<V>, b: &Monomial<V>) -> Monomial<V> {
    let mut exps = Vec::new();
    for (v, e) in a.iter() {
        let eb = b.exponent_of(v);
        let m = (*e).min(eb);
        if m > 0 {
            exps.push((v.clone(), m));
        }
    }
    Monomial::from_exps(exps)
}

fn make_monic<V: PolyVar>(p: Poly<V>) -> Poly<V> {
    match p.leading() {
        None => p,
        Some((_, c)) => {
            if c.is_one() {
                p
            } else {
                let c = c.clone();
                p.div_rational(&c)
            }
        }
    }
}
