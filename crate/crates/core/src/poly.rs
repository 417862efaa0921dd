//! Sparse polynomials in `2n` base variables `x1..x2n` and `n` spinor
//! variables `q1..qn`, with exact Gaussian rational coefficients.
//!
//! Values are immutable after construction and always canonical: no stored
//! coefficient is zero, and term iteration is graded by (base degree, spinor
//! degree), then lexicographic on the exponent vectors. Equality is equality
//! of term maps.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::ops::{Add, Mul, Neg, Sub};

/// Which exponent bank a variable index refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarBank {
    /// `x1..x2n`.
    Base,
    /// `q1..qn`.
    Spinor,
}

/// Parity of a spinor degree; the kernel of the Dirac operator splits along it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(degree: u32) -> Parity {
        if degree.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

/// A monomial `x^a q^b`: exponent vectors of length `2n` and `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    xexp: Vec<u32>,
    qexp: Vec<u32>,
}

impl Monomial {
    /// The constant monomial for half-dimension `n`.
    pub fn unit(n: usize) -> Self {
        Monomial {
            xexp: vec![0; 2 * n],
            qexp: vec![0; n],
        }
    }

    /// Builds a monomial from raw exponent vectors; `xexp` must have exactly
    /// twice the length of `qexp`.
    pub fn from_exps(xexp: Vec<u32>, qexp: Vec<u32>) -> Self {
        assert_eq!(
            xexp.len(),
            2 * qexp.len(),
            "monomial banks must have lengths 2n and n"
        );
        Monomial { xexp, qexp }
    }

    pub fn n(&self) -> usize {
        self.qexp.len()
    }

    pub fn xexp(&self) -> &[u32] {
        &self.xexp
    }

    pub fn qexp(&self) -> &[u32] {
        &self.qexp
    }

    pub fn base_degree(&self) -> u32 {
        self.xexp.iter().sum()
    }

    pub fn spinor_degree(&self) -> u32 {
        self.qexp.iter().sum()
    }

    pub fn spinor_parity(&self) -> Parity {
        Parity::of(self.spinor_degree())
    }

    /// Componentwise exponent sum.
    pub fn times(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.n(), other.n());
        Monomial {
            xexp: self
                .xexp
                .iter()
                .zip(&other.xexp)
                .map(|(a, b)| a + b)
                .collect(),
            qexp: self
                .qexp
                .iter()
                .zip(&other.qexp)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn shifted(&self, bank: VarBank, idx0: usize, delta: i64) -> Monomial {
        let mut m = self.clone();
        let slot = match bank {
            VarBank::Base => &mut m.xexp[idx0],
            VarBank::Spinor => &mut m.qexp[idx0],
        };
        *slot = (*slot as i64 + delta) as u32;
        m
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.base_degree()
            .cmp(&other.base_degree())
            .then_with(|| self.spinor_degree().cmp(&other.spinor_degree()))
            .then_with(|| self.xexp.cmp(&other.xexp))
            .then_with(|| self.qexp.cmp(&other.qexp))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse spinor-valued polynomial for a fixed half-dimension `n`.
#[derive(Clone, PartialEq, Eq)]
pub struct SPoly {
    n: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl SPoly {
    pub fn zero(n: usize) -> Self {
        SPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Scalar) -> Self {
        let mut p = SPoly::zero(n);
        p.accumulate(Monomial::unit(n), c);
        p
    }

    pub fn one(n: usize) -> Self {
        SPoly::constant(n, Scalar::one())
    }

    /// The variable `x{index}` (1-based, `1..=2n`).
    pub fn var_x(n: usize, index: usize) -> Result<Self> {
        if index == 0 || index > 2 * n {
            return Err(Error::IndexOutOfRange {
                what: "base variable",
                index,
                max: 2 * n,
            });
        }
        let mut m = Monomial::unit(n);
        m.xexp[index - 1] = 1;
        Ok(SPoly::from_monomial(n, m, Scalar::one()))
    }

    /// The variable `q{index}` (1-based, `1..=n`).
    pub fn var_q(n: usize, index: usize) -> Result<Self> {
        if index == 0 || index > n {
            return Err(Error::IndexOutOfRange {
                what: "spinor variable",
                index,
                max: n,
            });
        }
        let mut m = Monomial::unit(n);
        m.qexp[index - 1] = 1;
        Ok(SPoly::from_monomial(n, m, Scalar::one()))
    }

    pub fn from_monomial(n: usize, m: Monomial, c: Scalar) -> Self {
        let mut p = SPoly::zero(n);
        p.accumulate(m, c);
        p
    }

    /// Canonicalizing constructor: merges like terms and drops zeros.
    pub fn from_terms<I>(n: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let mut p = SPoly::zero(n);
        for (m, c) in terms {
            p.accumulate(m, c);
        }
        p
    }

    fn accumulate(&mut self, m: Monomial, c: Scalar) {
        assert_eq!(m.n(), self.n, "monomial size does not match n");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    fn check_n(&self, other: &SPoly) -> Result<()> {
        if self.n != other.n {
            Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &SPoly) -> Result<SPoly> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &SPoly) -> Result<SPoly> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &SPoly) -> Result<SPoly> {
        self.check_n(other)?;
        let mut out = SPoly::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.accumulate(ma.times(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> SPoly {
        if c.is_zero() {
            return SPoly::zero(self.n);
        }
        SPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    /// Multiplies by a single variable (1-based index).
    pub fn mul_var(&self, bank: VarBank, index: usize) -> Result<SPoly> {
        let idx0 = self.check_index(bank, index)?;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.shifted(bank, idx0, 1), c.clone()))
            .collect();
        Ok(SPoly { n: self.n, terms })
    }

    fn check_index(&self, bank: VarBank, index: usize) -> Result<usize> {
        let max = match bank {
            VarBank::Base => 2 * self.n,
            VarBank::Spinor => self.n,
        };
        if index == 0 || index > max {
            return Err(Error::IndexOutOfRange {
                what: match bank {
                    VarBank::Base => "base variable",
                    VarBank::Spinor => "spinor variable",
                },
                index,
                max,
            });
        }
        Ok(index - 1)
    }

    /// Exact formal partial derivative with respect to the given variable
    /// (1-based index).
    pub fn diff(&self, bank: VarBank, index: usize) -> Result<SPoly> {
        let idx0 = self.check_index(bank, index)?;
        let mut out = SPoly::zero(self.n);
        for (m, c) in &self.terms {
            let e = match bank {
                VarBank::Base => m.xexp[idx0],
                VarBank::Spinor => m.qexp[idx0],
            };
            if e == 0 {
                continue;
            }
            let factor = Scalar::from_int(e as i64);
            out.accumulate(m.shifted(bank, idx0, -1), c * &factor);
        }
        Ok(out)
    }

    /// The base-homogeneous part of degree `basedeg`; the parts over all
    /// degrees sum back to the input.
    pub fn graded_part(&self, basedeg: u32) -> SPoly {
        SPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.base_degree() == basedeg)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drops every term of spinor degree greater than `dmax`.
    pub fn spinor_truncate(&self, dmax: u32) -> SPoly {
        SPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.spinor_degree() <= dmax)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The set of (base degree, spinor degree) pairs carried by the terms.
    pub fn bidegree_support(&self) -> BTreeSet<(u32, u32)> {
        self.terms
            .keys()
            .map(|m| (m.base_degree(), m.spinor_degree()))
            .collect()
    }

    /// Maximum base degree, or `None` for the zero polynomial.
    pub fn base_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.base_degree()).max()
    }

    /// Maximum spinor degree, or `None` for the zero polynomial.
    pub fn spinor_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.spinor_degree()).max()
    }

    /// `Some(k)` when every term has base degree `k`. The zero polynomial
    /// reports degree 0.
    pub fn homogeneous_base_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|m| m.base_degree());
        match degs.next() {
            None => Some(0),
            Some(first) => {
                if degs.all(|d| d == first) {
                    Some(first)
                } else {
                    None
                }
            }
        }
    }

    /// The distinct base degrees present, ascending.
    pub fn base_degrees(&self) -> Vec<u32> {
        let set: BTreeSet<u32> = self.terms.keys().map(|m| m.base_degree()).collect();
        set.into_iter().collect()
    }

    /// `Some(parity)` when every term has the same spinor parity.
    pub fn spinor_parity(&self) -> Option<Parity> {
        let mut parities = self.terms.keys().map(|m| m.spinor_parity());
        let first = parities.next()?;
        parities.all(|p| p == first).then_some(first)
    }
}

impl std::fmt::Debug for SPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SPoly(n={}, {})", self.n, crate::textio::serialize(self))
    }
}

impl Add for &SPoly {
    type Output = SPoly;
    fn add(self, rhs: &SPoly) -> SPoly {
        self.try_add(rhs).expect("polynomial dimension mismatch")
    }
}

impl Sub for &SPoly {
    type Output = SPoly;
    fn sub(self, rhs: &SPoly) -> SPoly {
        self.try_sub(rhs).expect("polynomial dimension mismatch")
    }
}

impl Mul for &SPoly {
    type Output = SPoly;
    fn mul(self, rhs: &SPoly) -> SPoly {
        self.try_mul(rhs).expect("polynomial dimension mismatch")
    }
}

impl Neg for &SPoly {
    type Output = SPoly;
    fn neg(self) -> SPoly {
        SPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_poly_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for SPoly {
            type Output = SPoly;
            fn $method(self, rhs: SPoly) -> SPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&SPoly> for SPoly {
            type Output = SPoly;
            fn $method(self, rhs: &SPoly) -> SPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add);
forward_poly_binop!(Sub, sub);
forward_poly_binop!(Mul, mul);

impl Neg for SPoly {
    type Output = SPoly;
    fn neg(self) -> SPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textio::parse;

    fn p(src: &str, n: usize) -> SPoly {
        parse(src, n).unwrap()
    }

    #[test]
    fn additive_inverse_cancels() {
        let x1 = p("x1", 1);
        assert!((&x1 + &(-&x1)).is_zero());
    }

    #[test]
    fn like_terms_merge() {
        assert_eq!(p("x1 + q1", 1) + p("q1", 1), p("x1 + 2q1", 1));
        assert_eq!(
            p("1/2 x2 q1^2", 1) + p("1/2 x2 q1^2", 1),
            p("x2 q1^2", 1)
        );
    }

    #[test]
    fn products_add_exponents() {
        assert_eq!(p("q1", 1) * p("q1", 1), p("q1^2", 1));
        assert_eq!(p("x1 + q1", 1) * p("x1 - q1", 1), p("x1^2 - q1^2", 1));
        assert_eq!(p("i", 1) * p("i", 1), p("-1", 1));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let a = SPoly::one(1);
        let b = SPoly::one(2);
        assert_eq!(
            a.try_add(&b),
            Err(Error::DimensionMismatch {
                expected: 1,
                found: 2
            })
        );
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn derivatives() {
        assert_eq!(p("x1^2", 1).diff(VarBank::Base, 1).unwrap(), p("2x1", 1));
        assert_eq!(
            p("q1^3", 1).diff(VarBank::Spinor, 1).unwrap(),
            p("3q1^2", 1)
        );
        assert!(p("x2 q1", 1).diff(VarBank::Base, 1).unwrap().is_zero());
    }

    #[test]
    fn diff_index_out_of_range() {
        assert_eq!(
            p("x1", 1).diff(VarBank::Base, 3),
            Err(Error::IndexOutOfRange {
                what: "base variable",
                index: 3,
                max: 2
            })
        );
        assert!(p("x1", 1).diff(VarBank::Spinor, 2).is_err());
    }

    #[test]
    fn graded_and_truncated_extraction() {
        assert_eq!(p("x1 + x1 x2", 1).graded_part(2), p("x1 x2", 1));
        assert_eq!(p("q1 + q1^3", 1).spinor_truncate(2), p("q1", 1));
        let support = p("x1 q1^2", 1).bidegree_support();
        assert_eq!(support.into_iter().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn graded_parts_reassemble() {
        let q = p("1 + x1 - 2x1 x2 q1 + q1^3 + x2^3", 1);
        let mut sum = SPoly::zero(1);
        for k in q.base_degrees() {
            sum = sum + q.graded_part(k);
        }
        assert_eq!(sum, q);
    }

    #[test]
    fn canonical_order_is_graded_then_lex() {
        let q = p("x1 + x2 q1^2 + q1", 1);
        let order: Vec<(u32, u32)> = q
            .terms()
            .map(|(m, _)| (m.base_degree(), m.spinor_degree()))
            .collect();
        assert_eq!(order, vec![(0, 1), (1, 0), (1, 2)]);
    }

    #[test]
    fn homogeneous_degree_detection() {
        assert_eq!(p("x1 x2 + x2^2", 1).homogeneous_base_degree(), Some(2));
        assert_eq!(p("x1 + x2^2", 1).homogeneous_base_degree(), None);
        assert_eq!(SPoly::zero(1).homogeneous_base_degree(), Some(0));
    }

    #[test]
    fn parity_detection() {
        assert_eq!(p("1 + q1^2", 1).spinor_parity(), Some(Parity::Even));
        assert_eq!(p("q1 + q1^3", 1).spinor_parity(), Some(Parity::Odd));
        assert_eq!(p("1 + q1", 1).spinor_parity(), None);
    }

    #[test]
    fn values_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<SPoly>();
        assert_send_sync::<Monomial>();

        let q = std::sync::Arc::new(p("x1 x2 q1 - 3x2^2 + q1^3", 1));
        let handles: Vec<_> = (0..4)
            .map(|_| {
                let q = q.clone();
                std::thread::spawn(move || crate::ops::apply_gamma(&q))
            })
            .collect();
        let results: Vec<SPoly> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert!(results.windows(2).all(|w| w[0] == w[1]));
    }
}
