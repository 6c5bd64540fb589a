//! Dense univariate polynomials over a [`Field`].
//!
//! Coefficients are stored in ascending degree order with no trailing zeros;
//! the zero polynomial is the empty vector and has no numeric degree.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith;
use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<u64>,
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<u64>) -> Poly {
        debug_assert!(coeffs.iter().all(|&c| field.contains(c)));
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &Field) -> Poly {
        Poly::new(field, Vec::new())
    }

    pub fn one(field: &Field) -> Poly {
        Poly::new(field, vec![1])
    }

    pub fn constant(field: &Field, c: u64) -> Poly {
        Poly::new(field, vec![c])
    }

    /// `c * x^deg`.
    pub fn monomial(field: &Field, c: u64, deg: usize) -> Poly {
        let mut coeffs = vec![0; deg + 1];
        coeffs[deg] = c;
        Poly::new(field, coeffs)
    }

    pub fn x(field: &Field) -> Poly {
        Poly::monomial(field, 1, 1)
    }

    /// `x - root`.
    pub fn linear(field: &Field, root: u64) -> Poly {
        Poly::new(field, vec![field.neg(root), 1])
    }

    /// `x^n - 1`.
    pub fn x_n_minus_one(field: &Field, n: usize) -> Poly {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = field.neg(1);
        coeffs[n] = field.add(coeffs[n], 1);
        Poly::new(field, coeffs)
    }

    /// Polynomial whose coefficients are the entries of `word`.
    pub fn from_word(field: &Field, word: &[u64]) -> Poly {
        Poly::new(field, word.to_vec())
    }

    /// Coefficient vector padded with zeros to length `n`.
    pub fn to_word(&self, n: usize) -> Vec<u64> {
        assert!(self.coeffs.len() <= n, "degree too high for length {n}");
        let mut w = self.coeffs.clone();
        w.resize(n, 0);
        w
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn constant_term(&self) -> u64 {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self.add_unchecked(&-other))
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Poly) -> Poly {
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        Poly::new(f, coeffs)
    }

    fn mul_unchecked(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }

    pub fn scale(&self, c: u64) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Horner evaluation at an element of the coefficient field.
    pub fn eval(&self, x: u64) -> u64 {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Copies the coefficients into another field through `embed`.
    pub fn map_into(&self, target: &Field, embed: impl Fn(u64) -> u64) -> Poly {
        Poly::new(target, self.coeffs.iter().map(|&c| embed(c)).collect())
    }

    /// Quotient and remainder with `deg r < deg b`.
    pub fn divmod(&self, b: &Poly) -> Result<(Poly, Poly)> {
        self.check(b)?;
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let f = &self.field;
        let Some(da) = self.degree() else {
            return Ok((Poly::zero(f), Poly::zero(f)));
        };
        if da < db {
            return Ok((Poly::zero(f), self.clone()));
        }
        let lead_inv = f.inv(b.leading())?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; da - db + 1];
        for shift in (0..=da - db).rev() {
            let c = rem[shift + db];
            if c == 0 {
                continue;
            }
            let t = f.mul(c, lead_inv);
            quot[shift] = t;
            for (i, &bc) in b.coeffs.iter().enumerate() {
                rem[shift + i] = f.sub(rem[shift + i], f.mul(t, bc));
            }
        }
        rem.truncate(db);
        Ok((Poly::new(f, quot), Poly::new(f, rem)))
    }

    pub fn rem(&self, b: &Poly) -> Result<Poly> {
        Ok(self.divmod(b)?.1)
    }

    /// True iff `self` divides `other` (the zero polynomial divides only zero).
    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        matches!(other.rem(self), Ok(r) if r.is_zero())
    }

    /// `self / b`, failing unless the division is exact.
    pub fn exact_div(&self, b: &Poly) -> Option<Poly> {
        match self.divmod(b) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading()).expect("nonzero leading coefficient");
        self.scale(inv)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// `h(0)^{-1} x^{deg h} h(1/x)`, normalized to be monic.
    pub fn reciprocal(&self) -> Result<Poly> {
        if self.constant_term() == 0 {
            return Err(Error::ZeroConstantTerm);
        }
        let reversed: Vec<u64> = self.coeffs.iter().rev().copied().collect();
        Ok(Poly::new(&self.field, reversed).monic())
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u64, modulus: &Poly) -> Result<Poly> {
        let mut base = self.rem(modulus)?;
        let mut acc = Poly::one(&self.field).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(modulus)?;
            }
            base = (&base * &base).rem(modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Rabin's irreducibility test: `x^{Q^d} = x mod f` and
    /// `gcd(x^{Q^{d/r}} - x, f) = 1` for every prime `r | d`, where `Q` is the
    /// size of the coefficient field.
    pub fn is_irreducible(&self) -> bool {
        let Some(d) = self.degree() else {
            return false;
        };
        if d == 0 {
            return false;
        }
        if d == 1 {
            return true;
        }
        let f = &self.field;
        let q = f.order();
        let x = Poly::x(f);
        // frob[k] = x^{q^k} mod self
        let mut frob = vec![x.rem(self).expect("nonzero modulus")];
        for k in 1..=d {
            let next = frob[k - 1].pow_mod(q, self).expect("nonzero modulus");
            frob.push(next);
        }
        if frob[d] != x.rem(self).expect("nonzero modulus") {
            return false;
        }
        arith::prime_divisors(d as u64).into_iter().all(|r| {
            let h = &frob[d / r as usize] - &x;
            h.gcd(self).map(|g| g.is_one()).unwrap_or(false)
        })
    }

    /// Irreducibility by trial division against every monic polynomial of
    /// degree `1..=deg/2`. Exponential; only for small instances.
    pub fn is_irreducible_by_trial_division(&self) -> bool {
        let Some(d) = self.degree() else {
            return false;
        };
        if d == 0 {
            return false;
        }
        let f = &self.field;
        let q = f.order();
        for deg in 1..=d / 2 {
            let count = q.pow(deg as u32);
            for idx in 0..count {
                let mut coeffs = Vec::with_capacity(deg + 1);
                let mut v = idx;
                for _ in 0..deg {
                    coeffs.push(v % q);
                    v /= q;
                }
                coeffs.push(1);
                if Poly::new(f, coeffs).divides(self) {
                    return false;
                }
            }
        }
        true
    }

    /// Least `a` with `self | x^a - 1`, searched over the divisors of `n_hint`.
    pub fn order(&self, n_hint: usize) -> Result<usize> {
        if self.constant_term() == 0 {
            return Err(Error::ZeroConstantTerm);
        }
        let f = &self.field;
        if !self.divides(&Poly::x_n_minus_one(f, n_hint)) {
            return Err(Error::NotADivisor(n_hint));
        }
        for a in arith::divisors(n_hint as u64) {
            let a = a as usize;
            // x^a mod self == 1
            if Poly::x(f).pow_mod(a as u64, self)? == Poly::one(f).rem(self)? {
                return Ok(a);
            }
        }
        Ok(n_hint)
    }

    /// Parses the rendering produced by `Display`, e.g. `1 + 3x^2 + x^5`
    /// or `(1,0) + (0,1)x` over an extension field.
    pub fn parse(field: &Field, text: &str) -> Result<Poly> {
        let text = text.trim();
        if text == "0" {
            return Ok(Poly::zero(field));
        }
        let mut acc = Poly::zero(field);
        for raw in text.split('+') {
            let term = raw.trim();
            if term.is_empty() {
                return Err(Error::Parse(format!("empty term in {text:?}")));
            }
            let (coef_text, mono_text) = match term.find('x') {
                Some(pos) => (&term[..pos], Some(&term[pos..])),
                None => (term, None),
            };
            let coef = if coef_text.trim().is_empty() {
                if mono_text.is_none() {
                    return Err(Error::Parse(format!("empty term in {text:?}")));
                }
                1
            } else {
                parse_coefficient(field, coef_text.trim())?
            };
            let deg = match mono_text {
                None => 0,
                Some("x") => 1,
                Some(m) => {
                    let exp = m
                        .strip_prefix("x^")
                        .ok_or_else(|| Error::Parse(format!("bad monomial {m:?}")))?;
                    exp.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad exponent {exp:?}")))?
                }
            };
            acc = &acc + &Poly::monomial(field, coef, deg);
        }
        Ok(acc)
    }
}

fn parse_coefficient(field: &Field, text: &str) -> Result<u64> {
    let p = field.characteristic();
    let bad = || Error::Parse(format!("bad coefficient {text:?} for {field}"));
    if field.is_prime_field() {
        let v: u64 = text.parse().map_err(|_| bad())?;
        return if v < p { Ok(v) } else { Err(bad()) };
    }
    let inner = text
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(bad)?;
    let digits = inner
        .split(',')
        .map(|d| d.trim().parse::<u64>().ok().filter(|&v| v < p))
        .collect::<Option<Vec<u64>>>()
        .ok_or_else(bad)?;
    if digits.len() != field.degree() {
        return Err(bad());
    }
    Ok(field.from_digits(&digits))
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if deg == 0 || c != 1 {
                f.write_str(&self.field.format_element(c))?;
            }
            match deg {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{deg}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("polynomials over the same field")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("polynomials over the same field")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("polynomials over the same field")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

/// Product of a sequence of polynomials; the empty product is one.
pub fn product<'a>(field: &Field, polys: impl IntoIterator<Item = &'a Poly>) -> Poly {
    polys
        .into_iter()
        .fold(Poly::one(field), |acc, p| &acc * p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> Field {
        Field::with_order(q).unwrap()
    }

    #[test]
    fn ring_ops() {
        let f2 = gf(2);
        let a = Poly::new(&f2, vec![1, 1]);
        assert_eq!(&a * &a, Poly::new(&f2, vec![1, 0, 1]));

        let f7 = gf(7);
        let mut prod = Poly::x(&f7);
        for a in 1..7 {
            prod = &prod * &Poly::linear(&f7, a);
        }
        let x7_minus_x = &Poly::monomial(&f7, 1, 7) - &Poly::x(&f7);
        assert!((&prod - &x7_minus_x).is_zero());

        let cube_plus_one = Poly::new(&f7, vec![1, 0, 0, 1]);
        assert_eq!(cube_plus_one.eval(2), 2);
        assert_eq!(
            a.checked_add(&cube_plus_one).unwrap_err(),
            Error::FieldMismatch
        );
    }

    #[test]
    fn zero_has_no_degree() {
        let f = gf(5);
        assert_eq!(Poly::zero(&f).degree(), None);
        assert_eq!(Poly::new(&f, vec![0, 0, 0]).coeffs(), &[] as &[u64]);
        assert_eq!(Poly::one(&f).degree(), Some(0));
    }

    #[test]
    fn division() {
        let f = gf(7);
        let n = 9;
        let (q, r) = Poly::x_n_minus_one(&f, n)
            .divmod(&Poly::linear(&f, 1))
            .unwrap();
        assert!(r.is_zero());
        assert_eq!(q, Poly::new(&f, vec![1; n]));

        let a = Poly::new(&f, vec![3, 0, 5, 2]);
        let (q, r) = a.divmod(&a).unwrap();
        assert!(q.is_one() && r.is_zero());
        assert_eq!(a.divmod(&Poly::zero(&f)).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn minimal_polynomial_divides_x31_minus_1() {
        let f2 = gf(2);
        let big = Field::extension(2, 5).unwrap();
        let eta = big.nth_root_of_unity(31).unwrap();
        // product over the 2-cyclotomic coset of 1 mod 31
        let mut g = Poly::one(&big);
        for j in [1u64, 2, 4, 8, 16] {
            g = &g * &Poly::linear(&big, big.pow_u(eta, j));
        }
        assert!(g.coeffs().iter().all(|&c| c <= 1));
        let g = Poly::new(&f2, g.coeffs().to_vec());
        assert_eq!(g.degree(), Some(5));
        assert!(Poly::x_n_minus_one(&f2, 31).rem(&g).unwrap().is_zero());
        assert_eq!(g.order(31).unwrap(), 31);
    }

    #[test]
    fn gcd_cases() {
        let f = gf(7);
        let a = Poly::new(&f, vec![2, 4]);
        assert_eq!(a.gcd(&Poly::zero(&f)).unwrap(), a.monic());
        let g = Poly::linear(&f, 1).gcd(&Poly::linear(&f, 6)).unwrap();
        assert!(g.is_one());
        assert_eq!(
            Poly::zero(&f).gcd(&Poly::zero(&f)).unwrap_err(),
            Error::BothZero
        );
    }

    #[test]
    fn reciprocal_cases() {
        for q in [2, 3, 7, 8, 9] {
            let f = gf(q);
            let xm1 = Poly::linear(&f, 1);
            assert_eq!(xm1.reciprocal().unwrap(), xm1);
        }
        let f = gf(7);
        let h = Poly::new(&f, vec![3, 1, 0, 5]);
        assert_eq!(h.reciprocal().unwrap().reciprocal().unwrap(), h.monic());
        assert_eq!(
            Poly::x(&f).reciprocal().unwrap_err(),
            Error::ZeroConstantTerm
        );
    }

    /// Roots of the reciprocal are the inverses of the roots, checked in a
    /// splitting field by exhaustive evaluation.
    #[test]
    fn reciprocal_inverts_roots() {
        let f = gf(7);
        let big = Field::extension(7, 3).unwrap();
        let h = Poly::new(&f, vec![1, 0, 1, 1]); // irreducible cubic
        let h_big = h.map_into(&big, |c| c);
        let r_big = h.reciprocal().unwrap().map_into(&big, |c| c);
        let roots: Vec<u64> = (1..343).filter(|&a| h_big.eval(a) == 0).collect();
        let mut inv_roots: Vec<u64> = roots.iter().map(|&a| big.inv(a).unwrap()).collect();
        inv_roots.sort();
        let recip_roots: Vec<u64> = (1..343).filter(|&a| r_big.eval(a) == 0).collect();
        assert_eq!(roots.len(), 3);
        assert_eq!(recip_roots, inv_roots);
    }

    #[test]
    fn order_cases() {
        let f = gf(2);
        assert_eq!(Poly::linear(&f, 1).order(31).unwrap(), 1);
        let xx1 = Poly::new(&f, vec![1, 1, 1]);
        assert_eq!(xx1.order(3).unwrap(), 3);
        assert_eq!(xx1.order(6).unwrap(), 3);
        assert_eq!(xx1.order(7).unwrap_err(), Error::NotADivisor(7));
        assert_eq!(Poly::x(&f).order(7).unwrap_err(), Error::ZeroConstantTerm);
    }

    #[test]
    fn irreducibility_tests_agree() {
        for q in [2u64, 3, 4] {
            let f = gf(q);
            for deg in 1..=4usize {
                for idx in 0..q.pow(deg as u32) {
                    let mut coeffs = Vec::new();
                    let mut v = idx;
                    for _ in 0..deg {
                        coeffs.push(v % q);
                        v /= q;
                    }
                    coeffs.push(1);
                    let p = Poly::new(&f, coeffs);
                    assert_eq!(
                        p.is_irreducible(),
                        p.is_irreducible_by_trial_division(),
                        "{p} over GF({q})"
                    );
                }
            }
        }
    }

    #[test]
    fn text_rendering() {
        let f2 = gf(2);
        let p = Poly::new(&f2, vec![1, 0, 0, 1, 0, 0, 0, 1]);
        assert_eq!(p.to_string(), "1 + x^3 + x^7");
        assert_eq!(Poly::parse(&f2, "1 + x^3 + x^7").unwrap(), p);
        let f7 = gf(7);
        let p = Poly::new(&f7, vec![0, 3, 1]);
        assert_eq!(p.to_string(), "3x + x^2");
        let f9 = gf(9);
        let p = Poly::new(&f9, vec![1, f9.from_digits(&[0, 1]), 0, 1]);
        assert_eq!(p.to_string(), "(1,0) + (0,1)x + x^3");
        assert_eq!(Poly::parse(&f9, &p.to_string()).unwrap(), p);
        assert_eq!(Poly::zero(&f9).to_string(), "0");
        assert!(Poly::parse(&f7, "9x").is_err());
        assert!(Poly::parse(&f7, "1 + ").is_err());
        assert!(Poly::parse(&f9, "2x").is_err());
        assert!(Poly::parse(&f7, "x^a").is_err());
    }
}
