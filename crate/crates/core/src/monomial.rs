//! Exponent vectors and the combinatorial maps built on them.
//!
//! Variables are 0-based in this module's API; the text and JSON layers
//! convert to the 1-based names `x1..xN` users see. The ordering used
//! everywhere is lexicographic with the first coordinate dominant, and the
//! "monomial basis" of a graded piece is always [`enumerate_t`] in ascending
//! order.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monic monomial `x^e`, stored as its exponent vector with a cached
/// total degree.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<u32>", try_from = "Vec<u32>")]
pub struct Monomial {
    exponents: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::invalid("exponent vector must have length >= 1"));
        }
        let degree = exponents.iter().sum();
        Ok(Self { exponents, degree })
    }

    pub fn one(num_vars: usize) -> Self {
        Self::new(vec![0; num_vars.max(1)]).expect("nonempty")
    }

    /// `x_var^power` in `num_vars` variables.
    pub fn power(num_vars: usize, var: usize, power: u32) -> Self {
        let mut e = vec![0; num_vars];
        e[var] = power;
        Self::new(e).expect("nonempty")
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exponents[var]
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents.len() == other.exponents.len()
            && self
                .exponents
                .iter()
                .zip(&other.exponents)
                .all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exponents: other
                .exponents
                .iter()
                .zip(&self.exponents)
                .map(|(b, a)| b - a)
                .collect(),
            degree: other.degree - self.degree,
        })
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.num_vars(), other.num_vars());
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
            degree: self.degree + other.degree,
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.num_vars(), other.num_vars());
        let exponents: Vec<u32> = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| *a.min(b))
            .collect();
        Monomial::new(exponents).expect("nonempty")
    }

    /// Multiplies by `x_var`.
    pub fn raised(&self, var: usize) -> Monomial {
        let mut m = self.clone();
        m.exponents[var] += 1;
        m.degree += 1;
        m
    }

    /// Divides by `x_var`, if possible.
    pub fn lowered(&self, var: usize) -> Option<Monomial> {
        if self.exponents[var] == 0 {
            return None;
        }
        let mut m = self.clone();
        m.exponents[var] -= 1;
        m.degree -= 1;
        Some(m)
    }

    /// All divisors (including 1 and `self`), in ascending lex order.
    pub fn divisors(&self) -> Vec<Monomial> {
        let mut out = vec![Vec::with_capacity(self.num_vars())];
        for &e in &self.exponents {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<u32>| {
                    (0..=e).map(move |k| {
                        let mut p = prefix.clone();
                        p.push(k);
                        p
                    })
                })
                .collect();
        }
        out.into_iter()
            .map(|e| Monomial::new(e).expect("nonempty"))
            .collect()
    }

    /// Concatenates two exponent vectors (e.g. an x-block and a u-block).
    pub fn concat(&self, other: &Monomial) -> Monomial {
        let mut exponents = self.exponents.clone();
        exponents.extend_from_slice(&other.exponents);
        Monomial::new(exponents).expect("nonempty")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exponents.cmp(&other.exponents)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents)
    }
}

impl From<Monomial> for Vec<u32> {
    fn from(m: Monomial) -> Self {
        m.exponents
    }
}

impl TryFrom<Vec<u32>> for Monomial {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Monomial::new(v)
    }
}

/// Result of decrementing one coordinate: either a monomial of one degree
/// less, or negative infinity when the coordinate was already 0 (the
/// corresponding derivative of `x^i` is the zero polynomial).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Derivative {
    Monomial(Monomial),
    NegInfinity,
}

impl Derivative {
    pub fn monomial(self) -> Option<Monomial> {
        match self {
            Derivative::Monomial(m) => Some(m),
            Derivative::NegInfinity => None,
        }
    }
}

/// Number of monomials of degree `d` in `n` variables, `C(n+d-1, d)`.
pub fn tau(n: usize, d: u32) -> Result<u128> {
    if n == 0 {
        return Err(Error::invalid("tau needs n >= 1"));
    }
    Ok(binomial(n as u128 - 1 + d as u128, d as u128))
}

pub(crate) fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// [`tau`] for callers that already validated `n >= 1` and need a size.
pub(crate) fn tau_usize(n: usize, d: u32) -> usize {
    tau(n, d).expect("n >= 1") as usize
}

/// Every exponent vector of length `n` and degree exactly `d`, ascending in
/// lex order.
pub fn enumerate_t(n: usize, d: u32) -> Result<Vec<Monomial>> {
    if n == 0 {
        return Err(Error::invalid("need at least one variable"));
    }
    let mut out = Vec::with_capacity(tau_usize(n, d));
    let mut current = vec![0u32; n];
    fill(&mut current, 0, d, &mut out);
    Ok(out)
}

fn fill(current: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    let n = current.len();
    if pos == n - 1 {
        current[pos] = remaining;
        out.push(Monomial::new(current.clone()).expect("nonempty"));
        return;
    }
    for e in 0..=remaining {
        current[pos] = e;
        fill(current, pos + 1, remaining - e, out);
    }
}

pub fn lex_compare(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.num_vars() != b.num_vars() {
        return Err(Error::invalid(format!(
            "cannot compare exponent vectors of lengths {} and {}",
            a.num_vars(),
            b.num_vars()
        )));
    }
    for (x, y) in a.exponents().iter().zip(b.exponents()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return Ok(other),
        }
    }
    Ok(Ordering::Equal)
}

fn check_var(i: &Monomial, k: usize) -> Result<()> {
    if k >= i.num_vars() {
        return Err(Error::invalid(format!(
            "variable index {} out of range for {} variables",
            k + 1,
            i.num_vars()
        )));
    }
    Ok(())
}

/// Decrements coordinate `k` (0-based).
pub fn derive(i: &Monomial, k: usize) -> Result<Derivative> {
    check_var(i, k)?;
    Ok(match i.lowered(k) {
        Some(m) => Derivative::Monomial(m),
        None => Derivative::NegInfinity,
    })
}

/// Deletes coordinate `k` (0-based).
pub fn delete_coordinate(i: &Monomial, k: usize) -> Result<Monomial> {
    check_var(i, k)?;
    if i.num_vars() < 2 {
        return Err(Error::invalid("cannot delete the only coordinate"));
    }
    let mut e = i.exponents().to_vec();
    e.remove(k);
    Monomial::new(e)
}

/// 0-based index of the last positive coordinate.
pub fn last_positive(i: &Monomial) -> Result<usize> {
    i.exponents()
        .iter()
        .rposition(|&e| e > 0)
        .ok_or_else(|| Error::invalid("the zero exponent vector has no positive coordinate"))
}

/// Decrements the last positive coordinate.
pub fn chop(i: &Monomial) -> Result<Monomial> {
    let h = last_positive(i)?;
    Ok(i.lowered(h).expect("coordinate is positive"))
}

/// Lex-minimum preimage of `j` under [`chop`], found by scanning every
/// degree `|j|+1` vector.
pub fn chop_section(j: &Monomial) -> Result<Monomial> {
    enumerate_t(j.num_vars(), j.degree() + 1)?
        .into_iter()
        .find(|l| chop(l).as_ref() == Ok(j))
        .ok_or_else(|| Error::Internal(format!("{j:?} has no preimage under chop")))
}

/// Indices (0-based, ascending) of the degree `d-1` basis monomials in
/// `n` variables that are divisible by the last variable.
pub fn z1_set(n: usize, d: u32) -> Result<Vec<usize>> {
    if n < 2 || d < 2 {
        return Err(Error::invalid("Z1 needs n >= 2 and d >= 2"));
    }
    Ok(enumerate_t(n, d - 1)?
        .iter()
        .enumerate()
        .filter(|(_, m)| m.exponent(n - 1) >= 1)
        .map(|(k, _)| k)
        .collect())
}

/// Indices (0-based, ascending) of the degree `d-1` basis monomials in `n`
/// variables lying in the image of [`chop_section`] on degree `d-2`.
pub fn z2_set(n: usize, d: u32) -> Result<Vec<usize>> {
    if n < 2 || d < 3 {
        return Err(Error::invalid("Z2 needs n >= 2 and d >= 3"));
    }
    let image = enumerate_t(n, d - 2)?
        .iter()
        .map(chop_section)
        .collect::<Result<std::collections::BTreeSet<_>>>()?;
    Ok(enumerate_t(n, d - 1)?
        .iter()
        .enumerate()
        .filter(|(_, m)| image.contains(*m))
        .map(|(k, _)| k)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    #[test]
    fn tau_values() {
        assert_eq!(tau(2, 3).unwrap(), 4);
        assert_eq!(tau(7, 0).unwrap(), 1);
        assert_eq!(tau(3, 2).unwrap(), 6);
        assert!(tau(0, 2).is_err());
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(
            enumerate_t(2, 2).unwrap(),
            vec![mono(&[0, 2]), mono(&[1, 1]), mono(&[2, 0])]
        );
        assert_eq!(enumerate_t(1, 5).unwrap(), vec![mono(&[5])]);
        assert_eq!(enumerate_t(3, 3).unwrap().len(), 10);
        assert!(enumerate_t(0, 1).is_err());
    }

    #[test]
    fn lex_examples() {
        use Ordering::*;
        assert_eq!(lex_compare(&mono(&[1, 2]), &mono(&[2, 1])).unwrap(), Less);
        assert_eq!(
            lex_compare(&mono(&[2, 1]), &mono(&[2, 0])).unwrap(),
            Greater
        );
        assert_eq!(lex_compare(&mono(&[3, 3]), &mono(&[3, 3])).unwrap(), Equal);
        assert!(lex_compare(&mono(&[1]), &mono(&[1, 0])).is_err());
    }

    #[test]
    fn derivative_and_deletion() {
        assert_eq!(
            derive(&mono(&[2, 1]), 1).unwrap(),
            Derivative::Monomial(mono(&[2, 0]))
        );
        assert_eq!(derive(&mono(&[2, 0]), 1).unwrap(), Derivative::NegInfinity);
        assert_eq!(
            derive(&mono(&[1, 1, 1]), 0).unwrap(),
            Derivative::Monomial(mono(&[0, 1, 1]))
        );
        assert!(derive(&mono(&[1, 1]), 2).is_err());

        assert_eq!(
            delete_coordinate(&mono(&[2, 1, 3]), 1).unwrap(),
            mono(&[2, 3])
        );
        assert_eq!(delete_coordinate(&mono(&[0, 5]), 0).unwrap(), mono(&[5]));
        assert_eq!(
            delete_coordinate(&mono(&[1, 1, 0]), 2).unwrap(),
            mono(&[1, 1])
        );
        assert!(delete_coordinate(&mono(&[4]), 0).is_err());
    }

    #[test]
    fn last_positive_and_chop() {
        assert_eq!(last_positive(&mono(&[1, 0, 2])).unwrap() + 1, 3);
        assert_eq!(last_positive(&mono(&[4, 0, 0])).unwrap() + 1, 1);
        assert_eq!(last_positive(&mono(&[0, 1, 0])).unwrap() + 1, 2);
        assert!(last_positive(&mono(&[0, 0])).is_err());

        assert_eq!(chop(&mono(&[1, 0, 2])).unwrap(), mono(&[1, 0, 1]));
        assert_eq!(chop(&mono(&[0, 3])).unwrap(), mono(&[0, 2]));
        assert_eq!(chop(&mono(&[2, 1, 0])).unwrap(), mono(&[2, 0, 0]));
        assert!(chop(&mono(&[0])).is_err());
    }

    #[test]
    fn chop_section_examples() {
        assert_eq!(chop_section(&mono(&[1, 0, 1])).unwrap(), mono(&[1, 0, 2]));
        assert_eq!(chop_section(&mono(&[0, 2])).unwrap(), mono(&[0, 3]));
        assert_eq!(chop_section(&mono(&[6])).unwrap(), mono(&[7]));
    }

    #[test]
    fn z_sets() {
        assert_eq!(z1_set(2, 3).unwrap(), vec![0, 1]);
        assert_eq!(z1_set(2, 2).unwrap(), vec![0]);
        assert_eq!(z2_set(2, 3).unwrap(), vec![0, 1]);
        assert_eq!(z2_set(2, 4).unwrap().len(), 3);
        assert!(z1_set(1, 3).is_err());
        assert!(z1_set(2, 1).is_err());
        assert!(z2_set(2, 2).is_err());
    }

    #[test]
    fn monomial_helpers() {
        let a = mono(&[2, 1]);
        assert_eq!(a.degree(), 3);
        assert!(mono(&[1, 1]).divides(&a));
        assert!(!mono(&[0, 2]).divides(&a));
        assert_eq!(mono(&[1, 1]).quotient_of(&a), Some(mono(&[1, 0])));
        assert_eq!(a.divisors().len(), 6);
        assert_eq!(a.gcd(&mono(&[1, 2])), mono(&[1, 1]));
        assert!(Monomial::new(vec![]).is_err());
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, "[2,1]");
        assert_eq!(serde_json::from_str::<Monomial>(&json).unwrap(), a);
    }
}
