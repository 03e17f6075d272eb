//! Independent reference implementations used to cross-check the library.
//!
//! Nothing here calls into the library's linear algebra or monomial code:
//! polynomials are plain maps from exponent vectors to rationals, ranks come
//! from a textbook Gaussian elimination, and monomial bases from brute-force
//! enumeration of bounded vectors.

#![allow(dead_code)]

use std::collections::BTreeMap;

use apolar::rng::{Probability, Sampler};
use apolar::{is_standard, Monomial, Polynomial};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

pub type Terms = BTreeMap<Vec<u32>, BigRational>;

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// All length-`n` vectors with entries summing to `d`, by scanning the box
/// `[0, d]^n`.
pub fn brute_monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let base = d as usize + 1;
    let total = base.pow(n as u32);
    for code in 0..total {
        let mut c = code;
        let mut v = Vec::with_capacity(n);
        for _ in 0..n {
            v.push((c % base) as u32);
            c /= base;
        }
        if v.iter().sum::<u32>() == d {
            out.push(v);
        }
    }
    out.sort();
    out
}

pub fn terms_of(f: &Polynomial) -> Terms {
    f.terms()
        .iter()
        .map(|(m, c)| (m.exponents().to_vec(), c.clone()))
        .collect()
}

/// `X^a` applied to `f` by the dual-basis rule.
pub fn contract_monomial(a: &[u32], f: &Terms) -> Terms {
    let mut out = Terms::new();
    for (b, c) in f {
        if a.iter().zip(b).all(|(x, y)| x <= y) {
            let e: Vec<u32> = a.iter().zip(b).map(|(x, y)| y - x).collect();
            *out.entry(e).or_insert_with(BigRational::zero) += c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn contract(op: &Terms, f: &Terms) -> Terms {
    let mut out = Terms::new();
    for (a, c) in op {
        for (e, v) in contract_monomial(a, f) {
            *out.entry(e).or_insert_with(BigRational::zero) += c * v;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn gaussian_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let factor = &rows[r][c] / &pivot;
                for k in c..cols {
                    let delta = &factor * &rows[rank][k];
                    rows[r][k] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `dim A_j`: contract every degree-`j` monomial operator with `f` and rank
/// the resulting coefficient vectors.
pub fn oracle_h(f: &Terms, n: usize, d: u32, j: u32) -> usize {
    let targets = brute_monomials(n, d - j);
    let index: BTreeMap<&Vec<u32>, usize> =
        targets.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let rows = brute_monomials(n, j)
        .iter()
        .map(|a| {
            let mut row = vec![BigRational::zero(); targets.len()];
            for (e, c) in contract_monomial(a, f) {
                row[index[&e]] = c;
            }
            row
        })
        .collect();
    gaussian_rank(rows)
}

pub fn oracle_hilbert(f: &Polynomial) -> Vec<usize> {
    let t = terms_of(f);
    (0..=f.degree())
        .map(|j| oracle_h(&t, f.num_vars(), f.degree(), j))
        .collect()
}

pub fn poly(n: usize, terms: &[(&[u32], i64)]) -> Polynomial {
    Polynomial::new(
        n,
        terms
            .iter()
            .map(|(e, c)| (Monomial::new(e.to_vec()).unwrap(), q(*c))),
    )
    .unwrap()
}

/// A random standard form: each degree-`d` monomial is kept with
/// probability 1/2, with a nonzero coefficient in `[-9, 9]` (or 1).
pub fn random_standard(sampler: &mut Sampler, n: usize, d: u32, ones: bool) -> Polynomial {
    let basis = brute_monomials(n, d);
    loop {
        let mut terms = Vec::new();
        for e in &basis {
            if sampler.coin(Probability::half()) {
                let c = if ones { 1 } else { sampler.nonzero(9) };
                terms.push((Monomial::new(e.clone()).unwrap(), q(c)));
            }
        }
        if terms.is_empty() {
            continue;
        }
        let f = Polynomial::new(n, terms).unwrap();
        if is_standard(&f).unwrap() {
            return f;
        }
    }
}
