//! Generators `g_i = prod_{j in C_i} (x - eta^j)` and minimal polynomials
//! `M_s`, computed in a splitting field and pulled back to GF(q).

use std::collections::{BTreeMap, HashMap};

use crate::arith;
use crate::cyclotomy::{class_coset_decomposition, ClassDecomposition, CyclotomicCoset, SexticClasses};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{self, Poly};

use super::CyclicCode;

/// Base fields above this size are not embedded.
const MAX_BASE_ORDER: u64 = 1 << 20;

/// GF(q^ell) containing a primitive n-th root of unity `eta`, together with
/// the embedding of GF(q).
#[derive(Clone, Debug)]
pub struct SplittingField {
    base: Field,
    ext: Field,
    n: u64,
    eta: u64,
    embed: Vec<u64>,
    pull_back: HashMap<u64, u64>,
}

impl SplittingField {
    pub fn new(base: &Field, n: u64) -> Result<SplittingField> {
        SplittingField::with_eta_exponent(base, n, 1)
    }

    /// Uses `eta^a` in place of the canonical root; `a` must be a unit mod `n`.
    pub fn with_eta_exponent(base: &Field, n: u64, a: u64) -> Result<SplittingField> {
        let q = base.order();
        if q > MAX_BASE_ORDER {
            return Err(Error::TooLarge(format!("base field of size {q}")));
        }
        if arith::gcd(a, n) != 1 {
            return Err(Error::InvalidArgument(format!("{a} is not a unit mod {n}")));
        }
        let ell = arith::mult_order(q, n).ok_or(Error::NotCoprime { q, n })? as usize;
        let ext = Field::extension(base.characteristic(), base.degree() * ell)?;
        let embed: Vec<u64> = if base.is_prime_field() || ext == *base {
            (0..q).collect()
        } else {
            let beta = subfield_generator_root(base, &ext);
            (0..q)
                .map(|c| {
                    base.digits(c)
                        .iter()
                        .rev()
                        .fold(0, |acc, &d| ext.add(ext.mul(acc, beta), d))
                })
                .collect()
        };
        let pull_back = embed.iter().enumerate().map(|(c, &e)| (e, c as u64)).collect();
        let eta = ext.pow_u(ext.nth_root_of_unity(n)?, a);
        Ok(SplittingField {
            base: base.clone(),
            ext,
            n,
            eta,
            embed,
            pull_back,
        })
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn extension(&self) -> &Field {
        &self.ext
    }

    pub fn eta(&self) -> u64 {
        self.eta
    }

    pub fn embed(&self, c: u64) -> u64 {
        self.embed[c as usize]
    }

    /// `prod (x - eta^j)` over the given exponents, as a polynomial over GF(q).
    pub fn root_product(&self, exponents: &[u64]) -> Result<Poly> {
        let ext = &self.ext;
        let mut acc = Poly::one(ext);
        for &j in exponents {
            acc = &acc * &Poly::linear(ext, ext.pow_u(self.eta, j % self.n));
        }
        let coeffs = acc
            .coeffs()
            .iter()
            .map(|c| self.pull_back.get(c).copied())
            .collect::<Option<Vec<u64>>>()
            .ok_or(Error::CoefficientNotInBaseField)?;
        Ok(Poly::new(&self.base, coeffs))
    }
}

/// A root in `ext` of the modulus defining `base`, so that the base field's
/// polynomial basis maps into `ext`.
fn subfield_generator_root(base: &Field, ext: &Field) -> u64 {
    let modulus = base.modulus().expect("proper extension");
    let q = base.order();
    let xi = ext.pow_u(ext.primitive_element(), (ext.order() - 1) / (q - 1));
    let mut cand = 1;
    for _ in 0..q - 1 {
        let value = modulus
            .iter()
            .rev()
            .fold(0, |acc, &c| ext.add(ext.mul(acc, cand), c));
        if value == 0 {
            return cand;
        }
        cand = ext.mul(cand, xi);
    }
    unreachable!("irreducible modulus of degree e splits in GF(p^(e*ell))")
}

fn check_residue(classes: &SexticClasses, field: &Field) -> Result<()> {
    let q = field.order();
    if !classes.contains_sextic_residue(q) {
        return Err(Error::QNotSexticResidue { q, n: classes.n() });
    }
    Ok(())
}

/// The six polynomials `g_0 .. g_5` over GF(q).
#[derive(Clone, Debug)]
pub struct SexticGenerators {
    classes: SexticClasses,
    field: Field,
    generators: [Poly; 6],
}

pub fn build_sextic_generators(classes: &SexticClasses, field: &Field) -> Result<SexticGenerators> {
    check_residue(classes, field)?;
    let split = SplittingField::new(field, classes.n())?;
    SexticGenerators::with_splitting_field(classes, &split)
}

impl SexticGenerators {
    pub fn with_splitting_field(
        classes: &SexticClasses,
        split: &SplittingField,
    ) -> Result<SexticGenerators> {
        check_residue(classes, split.base())?;
        let mut gens = Vec::with_capacity(6);
        for i in 0..6 {
            gens.push(split.root_product(classes.class(i))?);
        }
        Ok(SexticGenerators {
            classes: classes.clone(),
            field: split.base().clone(),
            generators: gens.try_into().expect("six generators"),
        })
    }

    pub fn classes(&self) -> &SexticClasses {
        &self.classes
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.classes.n() as usize
    }

    /// `g_i`, index taken mod 6.
    pub fn generator(&self, i: usize) -> &Poly {
        &self.generators[i % 6]
    }

    pub fn generators(&self) -> &[Poly; 6] {
        &self.generators
    }

    /// The leftover factor `x - 1`.
    pub fn residual(&self) -> Poly {
        Poly::linear(&self.field, 1)
    }

    /// Product of `g_i` over a set of class indices (taken mod 6, duplicates ignored).
    pub fn product(&self, subset: &[usize]) -> Poly {
        let mut idx: Vec<usize> = subset.iter().map(|i| i % 6).collect();
        idx.sort_unstable();
        idx.dedup();
        poly::product(&self.field, idx.iter().map(|&i| &self.generators[i]))
    }

    /// The cyclic code generated by `product(subset)`.
    pub fn code(&self, subset: &[usize]) -> Result<CyclicCode> {
        CyclicCode::from_generator(self.n(), &self.field, self.product(subset))
    }

    /// `(x - 1) g_0 .. g_5 == x^n - 1`.
    pub fn factorization_holds(&self) -> bool {
        let all = self.product(&[0, 1, 2, 3, 4, 5]);
        &self.residual() * &all == Poly::x_n_minus_one(&self.field, self.n())
    }
}

/// Minimal polynomials `M_s` over GF(q), keyed by minimal coset representative.
#[derive(Clone, Debug)]
pub struct MinimalPolySet {
    field: Field,
    n: usize,
    decomposition: ClassDecomposition,
    polys: BTreeMap<u64, Poly>,
}

pub fn build_minimal_polys(classes: &SexticClasses, field: &Field) -> Result<MinimalPolySet> {
    check_residue(classes, field)?;
    let split = SplittingField::new(field, classes.n())?;
    MinimalPolySet::with_splitting_field(classes, &split)
}

impl MinimalPolySet {
    pub fn with_splitting_field(
        classes: &SexticClasses,
        split: &SplittingField,
    ) -> Result<MinimalPolySet> {
        let field = split.base();
        let n = classes.n();
        let decomposition = class_coset_decomposition(classes, field.order())?;
        let mut polys = BTreeMap::new();
        polys.insert(0, Poly::linear(field, 1));
        for s in decomposition.representatives.iter().flatten().copied() {
            let coset = CyclotomicCoset::new(s, n, field.order())?;
            polys.insert(s, split.root_product(coset.elements())?);
        }
        Ok(MinimalPolySet {
            field: field.clone(),
            n: n as usize,
            decomposition,
            polys,
        })
    }

    pub fn get(&self, s: u64) -> Option<&Poly> {
        self.polys.get(&s)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// All `(s, M_s)` pairs including `s = 0`, ascending.
    pub fn iter(&self) -> impl Iterator<Item = (u64, &Poly)> {
        self.polys.iter().map(|(&s, p)| (s, p))
    }

    pub fn decomposition(&self) -> &ClassDecomposition {
        &self.decomposition
    }

    /// Representatives whose minimal polynomials multiply to `g_i`.
    pub fn class_factors(&self, i: usize) -> &[u64] {
        &self.decomposition.representatives[i % 6]
    }

    /// `prod_{s in class i} M_s`.
    pub fn class_product(&self, i: usize) -> Poly {
        poly::product(
            &self.field,
            self.class_factors(i).iter().map(|s| &self.polys[s]),
        )
    }
}

/// Classes, generators and minimal polynomials for one `(n, q, gamma)`,
/// sharing a single splitting field.
#[derive(Clone, Debug)]
pub struct SexticSetup {
    pub classes: SexticClasses,
    pub field: Field,
    pub generators: SexticGenerators,
    pub minimal: MinimalPolySet,
}

impl SexticSetup {
    pub fn new(n: u64, q: u64, gamma: Option<u64>) -> Result<SexticSetup> {
        let classes = SexticClasses::new(n, gamma)?;
        let field = Field::with_order(q)?;
        check_residue(&classes, &field)?;
        let split = SplittingField::new(&field, n)?;
        let generators = SexticGenerators::with_splitting_field(&classes, &split)?;
        let minimal = MinimalPolySet::with_splitting_field(&classes, &split)?;
        Ok(SexticSetup {
            classes,
            field,
            generators,
            minimal,
        })
    }

    pub fn n(&self) -> usize {
        self.classes.n() as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_generators_for_n7_q8() {
        let s = SexticSetup::new(7, 8, None).unwrap();
        for i in 0..6 {
            assert_eq!(s.generators.generator(i).degree(), Some(1));
        }
        assert!(s.generators.factorization_holds());
    }

    #[test]
    fn n19_q7_cubics() {
        let s = SexticSetup::new(19, 7, None).unwrap();
        let g = &s.generators;
        for i in 0..6 {
            assert_eq!(g.generator(i).degree(), Some(3));
        }
        // multiply out independently of factorization_holds
        let mut prod = g.residual();
        for p in g.generators() {
            prod = &prod * p;
        }
        assert_eq!(prod, Poly::x_n_minus_one(&s.field, 19));
    }

    #[test]
    fn minimal_polys_for_127() {
        let s = SexticSetup::new(127, 2, Some(39)).unwrap();
        let m = &s.minimal;
        assert_eq!(m.get(0).unwrap(), &Poly::linear(&s.field, 1));
        assert_eq!(m.get(1).unwrap().degree(), Some(7));
        let g0 = poly::product(&s.field, [1u64, 19, 47].iter().map(|r| m.get(*r).unwrap()));
        assert_eq!(&g0, s.generators.generator(0));
        for i in 0..6 {
            assert_eq!(&m.class_product(i), s.generators.generator(i));
        }
        let all = poly::product(&s.field, m.iter().map(|(_, p)| p));
        assert_eq!(all, Poly::x_n_minus_one(&s.field, 127));
        for (_, p) in m.iter() {
            assert!(p.is_irreducible());
        }
    }

    #[test]
    fn rejects_non_residue() {
        let classes = SexticClasses::new(19, None).unwrap();
        let f3 = Field::prime(3).unwrap();
        assert_eq!(
            build_sextic_generators(&classes, &f3).unwrap_err(),
            Error::QNotSexticResidue { q: 3, n: 19 }
        );
        assert!(build_minimal_polys(&classes, &f3).is_err());
    }

    /// GF(4) over n = 43 needs the embedding GF(4) -> GF(4^7).
    #[test]
    fn prime_power_base_field() {
        let s = SexticSetup::new(43, 4, None).unwrap();
        assert!(s.generators.factorization_holds());
        for i in 0..6 {
            assert_eq!(s.generators.generator(i).degree(), Some(7));
            assert!(s.generators.generator(i).is_irreducible());
        }
    }

    #[test]
    fn generator_set_independent_of_eta() {
        let classes = SexticClasses::new(31, None).unwrap();
        let f = Field::prime(2).unwrap();
        let a = SplittingField::new(&f, 31).unwrap();
        let b = SplittingField::with_eta_exponent(&f, 31, 3).unwrap();
        let ga = SexticGenerators::with_splitting_field(&classes, &a).unwrap();
        let gb = SexticGenerators::with_splitting_field(&classes, &b).unwrap();
        let mut sa: Vec<Vec<u64>> = ga.generators().iter().map(|p| p.coeffs().to_vec()).collect();
        let mut sb: Vec<Vec<u64>> = gb.generators().iter().map(|p| p.coeffs().to_vec()).collect();
        assert_ne!(sa, sb, "eta^3 lies outside class 0, so labels shift");
        sa.sort();
        sb.sort();
        assert_eq!(sa, sb);
    }
}
