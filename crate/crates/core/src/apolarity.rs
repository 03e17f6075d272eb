//! Homogeneous polynomials, the apolarity pairing and catalecticant ranks.
//!
//! A [`Polynomial`] doubles as a differential operator: the same type holds
//! `f` in `x1..xn` and operators in the dual variables `X1..Xn`. Under
//! [`Convention::Contraction`] the monomial bases of equal degree pair to the
//! Kronecker delta; under [`Convention::Differentiation`] `X_i` acts as the
//! partial derivative.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Rational, RationalMatrix};
use crate::monomial::{enumerate_t, tau, tau_usize, Monomial};

/// Resource limits shared by the matrix-heavy operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest row or column count of any matrix we are willing to build.
    pub max_matrix_dim: usize,
    /// Largest `tau(n,d)` for exhaustive support enumeration.
    pub max_locus_tau: usize,
    /// Largest number of candidate monomials whose subsets are enumerated
    /// when grouping operators by contraction image.
    pub max_subset_monomials: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_matrix_dim: 20_000,
            max_locus_tau: 20,
            max_subset_monomials: 16,
        }
    }
}

impl Limits {
    pub(crate) fn check_matrix(&self, rows: u128, cols: u128) -> Result<()> {
        let dim = rows.max(cols);
        if dim > self.max_matrix_dim as u128 {
            return Err(Error::guard(
                "matrix dimension",
                dim,
                self.max_matrix_dim as u128,
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    /// `X^a(x^b) = x^(b-a)` when `a <= b`, else 0.
    #[default]
    Contraction,
    /// `X^a(x^b) = prod(b_i!/(b_i-a_i)!) x^(b-a)` when `a <= b`, else 0.
    Differentiation,
}

impl Convention {
    /// Scalar produced when `X^a` hits `x^b`; `a` must divide `b`.
    pub(crate) fn factor(self, a: &Monomial, b: &Monomial) -> Rational {
        match self {
            Convention::Contraction => Rational::one(),
            Convention::Differentiation => {
                let mut acc = BigInt::one();
                for (&ai, &bi) in a.exponents().iter().zip(b.exponents()) {
                    for k in 0..ai {
                        acc *= BigInt::from(bi - k);
                    }
                }
                Rational::from_integer(acc)
            }
        }
    }
}

/// A homogeneous polynomial with exact rational coefficients.
///
/// Invariants: every key has length `num_vars` and degree `degree`; no stored
/// coefficient is zero. The zero polynomial of any degree is representable
/// (it arises as a contraction result).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    num_vars: usize,
    degree: u32,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    /// Builds a nonzero polynomial, summing repeated monomials and dropping
    /// cancelled terms. The degree is taken from the terms.
    pub fn new(
        num_vars: usize,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Result<Self> {
        let mut degree = None;
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            if m.num_vars() != num_vars {
                return Err(Error::invalid(format!(
                    "monomial {m:?} has {} variables, expected {num_vars}",
                    m.num_vars()
                )));
            }
            match degree {
                None => degree = Some(m.degree()),
                Some(d) if d != m.degree() => {
                    return Err(Error::Inhomogeneous {
                        first: d,
                        second: m.degree(),
                    })
                }
                _ => {}
            }
            *map.entry(m).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        if map.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Self {
            num_vars,
            degree: degree.expect("nonempty"),
            terms: map,
        })
    }

    pub fn zero(num_vars: usize, degree: u32) -> Self {
        Self {
            num_vars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self {
            num_vars: m.num_vars(),
            degree: m.degree(),
            terms: BTreeMap::from([(m, Rational::one())]),
        }
    }

    /// Sum of the given monomials, each with coefficient 1.
    pub fn sum_of(num_vars: usize, monomials: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        Self::new(
            num_vars,
            monomials.into_iter().map(|m| (m, Rational::one())),
        )
    }

    /// Builds a polynomial of known degree from coefficients over the
    /// ascending degree-`degree` basis. The result may be zero.
    pub fn from_coefficients(
        num_vars: usize,
        degree: u32,
        coefficients: &[Rational],
    ) -> Result<Self> {
        let basis = enumerate_t(num_vars, degree)?;
        if basis.len() != coefficients.len() {
            return Err(Error::invalid(
                "coefficient vector does not match the basis",
            ));
        }
        Ok(Self {
            num_vars,
            degree,
            terms: basis
                .into_iter()
                .zip(coefficients)
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m, c.clone()))
                .collect(),
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Support monomials in ascending lex order.
    pub fn support(&self) -> Vec<Monomial> {
        self.terms.keys().cloned().collect()
    }

    pub fn is_coefficient_one(&self) -> bool {
        self.terms.values().all(One::is_one)
    }

    pub fn scale(&self, lambda: &Rational) -> Polynomial {
        if lambda.is_zero() {
            return Polynomial::zero(self.num_vars, self.degree);
        }
        Polynomial {
            num_vars: self.num_vars,
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * lambda))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            num_vars: self.num_vars,
            degree: self.degree + m.degree(),
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other)?;
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                *terms.entry(a.mul(b)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Polynomial {
            num_vars: self.num_vars,
            degree: self.degree + other.degree,
            terms,
        })
    }

    fn check_same_ring(&self, other: &Polynomial) -> Result<()> {
        if self.num_vars != other.num_vars {
            return Err(Error::invalid(format!(
                "polynomials live in {} and {} variables",
                self.num_vars, other.num_vars
            )));
        }
        Ok(())
    }

    fn combine(&self, other: &Polynomial, sign: i64) -> Result<Polynomial> {
        self.check_same_ring(other)?;
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::Inhomogeneous {
                first: self.degree,
                second: other.degree,
            });
        }
        let degree = if self.is_zero() {
            other.degree
        } else {
            self.degree
        };
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let e = terms.entry(m.clone()).or_insert_with(Rational::zero);
            if sign > 0 {
                *e += c;
            } else {
                *e -= c;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Polynomial {
            num_vars: self.num_vars,
            degree,
            terms,
        })
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.combine(other, -1)
    }

    /// Coefficients over the ascending monomial basis of this degree.
    pub fn to_coefficients(&self) -> Vec<Rational> {
        let basis = enumerate_t(self.num_vars, self.degree).expect("num_vars >= 1");
        basis.iter().map(|m| self.coefficient(m)).collect()
    }

    /// Makes the leading (lex-greatest) coefficient 1.
    pub fn monic(&self) -> Polynomial {
        match self.terms.iter().next_back() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            crate::text::format_polynomial(self, &crate::text::VariableNames::plain(self.num_vars))
        )
    }
}

/// Applies the operator `op` (in dual variables) to `f`.
pub fn contract(op: &Polynomial, f: &Polynomial, conv: Convention) -> Result<Polynomial> {
    if op.num_vars != f.num_vars {
        return Err(Error::invalid(format!(
            "operator has {} variables but the polynomial has {}",
            op.num_vars, f.num_vars
        )));
    }
    if op.degree > f.degree {
        return Err(Error::invalid(format!(
            "operator degree {} exceeds polynomial degree {}",
            op.degree, f.degree
        )));
    }
    let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
    for (a, ca) in &op.terms {
        for (b, cb) in &f.terms {
            if let Some(q) = a.quotient_of(b) {
                let c = ca * cb * conv.factor(a, b);
                *terms.entry(q).or_insert_with(Rational::zero) += c;
            }
        }
    }
    terms.retain(|_, c| !c.is_zero());
    Ok(Polynomial {
        num_vars: f.num_vars,
        degree: f.degree - op.degree,
        terms,
    })
}

fn basis_index(basis: &[Monomial], m: &Monomial) -> usize {
    basis
        .binary_search(m)
        .expect("monomial belongs to the basis")
}

/// Matrix of `Q_j -> R_{d-j}`, `alpha -> alpha(f)`. Rows follow the
/// ascending degree `d-j` basis, columns the ascending degree `j` basis.
pub fn catalecticant(f: &Polynomial, j: u32, conv: Convention) -> Result<RationalMatrix> {
    catalecticant_with(f, j, conv, &Limits::default())
}

pub fn catalecticant_with(
    f: &Polynomial,
    j: u32,
    conv: Convention,
    limits: &Limits,
) -> Result<RationalMatrix> {
    if j > f.degree {
        return Err(Error::invalid(format!(
            "catalecticant degree {j} exceeds polynomial degree {}",
            f.degree
        )));
    }
    let n = f.num_vars;
    limits.check_matrix(tau(n, f.degree - j)?, tau(n, j)?)?;
    let rows = enumerate_t(n, f.degree - j)?;
    let cols = enumerate_t(n, j)?;
    let mut m = RationalMatrix::zeros(rows.len(), cols.len());
    for (b, c) in &f.terms {
        for alpha in b.divisors().into_iter().filter(|a| a.degree() == j) {
            let beta = alpha.quotient_of(b).expect("alpha divides b");
            let value = c * conv.factor(&alpha, b);
            m.set(basis_index(&rows, &beta), basis_index(&cols, &alpha), value);
        }
    }
    Ok(m)
}

/// `dim Ann(f)_j` under the default convention.
pub fn ann_dimension(f: &Polynomial, j: u32) -> Result<usize> {
    ann_dimension_with(f, j, Convention::default(), &Limits::default())
}

pub fn ann_dimension_with(
    f: &Polynomial,
    j: u32,
    conv: Convention,
    limits: &Limits,
) -> Result<usize> {
    let total = tau_usize(f.num_vars.max(1), j);
    if j > f.degree {
        return Ok(total);
    }
    if f.is_zero() {
        return Ok(total);
    }
    let m = catalecticant_with(f, j, conv, limits)?;
    Ok(total - m.rank())
}

/// Canonical basis of `Ann(f)_j` as operator polynomials.
pub fn ann_basis(f: &Polynomial, j: u32) -> Result<Vec<Polynomial>> {
    ann_basis_with(f, j, Convention::default(), &Limits::default())
}

pub fn ann_basis_with(
    f: &Polynomial,
    j: u32,
    conv: Convention,
    limits: &Limits,
) -> Result<Vec<Polynomial>> {
    let m = catalecticant_with(f, j, conv, limits)?;
    m.kernel_basis()
        .iter()
        .map(|v| Polynomial::from_coefficients(f.num_vars, j, v))
        .collect()
}

/// `(dim A_0, ..., dim A_d)` for `A = Q/Ann(f)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HilbertVector(pub Vec<usize>);

impl HilbertVector {
    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn socle_degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_symmetric(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }
}

impl fmt::Display for HilbertVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn hilbert_vector(f: &Polynomial) -> Result<HilbertVector> {
    hilbert_vector_with(f, Convention::default(), &Limits::default())
}

/// Each entry comes from its own catalecticant, so the Gorenstein symmetry
/// of the result is an independent check rather than an assumption.
pub fn hilbert_vector_with(
    f: &Polynomial,
    conv: Convention,
    limits: &Limits,
) -> Result<HilbertVector> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    (0..=f.degree)
        .map(|j| {
            let m = catalecticant_with(f, j, conv, limits)?;
            Ok(m.rank())
        })
        .collect::<Result<Vec<_>>>()
        .map(HilbertVector)
}

pub fn is_standard(f: &Polynomial) -> Result<bool> {
    is_standard_with(f, Convention::default())
}

pub fn is_standard_with(f: &Polynomial, conv: Convention) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.degree == 0 {
        return Ok(false);
    }
    Ok(ann_dimension_with(f, 1, conv, &Limits::default())? == 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum HilbertOrder {
    LessEq,
    GreaterEq,
    Equal,
    Incomparable,
}

/// Coordinatewise comparison; vectors of different socle degree are
/// rejected rather than called incomparable.
pub fn compare_hilbert(a: &HilbertVector, b: &HilbertVector) -> Result<HilbertOrder> {
    if a.0.len() != b.0.len() {
        return Err(Error::invalid(format!(
            "Hilbert vectors of lengths {} and {} are not comparable",
            a.0.len(),
            b.0.len()
        )));
    }
    let le = a.0.iter().zip(&b.0).all(|(x, y)| x <= y);
    let ge = a.0.iter().zip(&b.0).all(|(x, y)| x >= y);
    Ok(match (le, ge) {
        (true, true) => HilbertOrder::Equal,
        (true, false) => HilbertOrder::LessEq,
        (false, true) => HilbertOrder::GreaterEq,
        (false, false) => HilbertOrder::Incomparable,
    })
}

/// Whether `op` lies in `Ann(f)`.
pub fn annihilates(op: &Polynomial, f: &Polynomial, conv: Convention) -> Result<bool> {
    if op.degree > f.degree {
        return Ok(true);
    }
    Ok(contract(op, f, conv)?.is_zero())
}
