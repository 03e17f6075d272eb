//! Structured generators of `Ann(f)` for polynomials whose coefficients
//! are all 1, and their degree-wise verification.
//!
//! Three families are produced:
//! * powers `X_k^(d+1)`,
//! * minimal non-faces of the cell complex of `f` (monomials outside it
//!   whose proper divisors all lie inside),
//! * differences `P1 - P2` of coefficient-1 operators with the same
//!   contraction image.
//!
//! Contraction (not differentiation) is the pairing used throughout: only
//! under it do coefficient-1 operators hit coefficient-1 polynomials with
//! 0/1 images.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::apolarity::{
    ann_dimension_with, catalecticant_with, contract, Convention, Limits, Polynomial,
};
use crate::complex::{minimal_nonfaces, zeta_of, CellComplex};
use crate::error::{Error, Result};
use crate::linalg::Span;
use crate::monomial::{enumerate_t, Monomial};
use crate::text::{format_polynomial, VariableNames};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PowerGenerator {
    /// 0-based variable index.
    pub variable: usize,
    pub exponent: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    pub num_vars: usize,
    pub socle_degree: u32,
    pub powers: Vec<PowerGenerator>,
    pub nonfaces: BTreeMap<u32, Vec<Monomial>>,
    pub differences: BTreeMap<u32, Vec<(Polynomial, Polynomial)>>,
}

impl GeneratorSet {
    /// Every generator as an operator polynomial, ordered by degree.
    pub fn operators(&self) -> Vec<Polynomial> {
        let mut ops: Vec<Polynomial> = Vec::new();
        for (_, ms) in &self.nonfaces {
            ops.extend(ms.iter().cloned().map(Polynomial::monomial));
        }
        for (_, pairs) in &self.differences {
            ops.extend(
                pairs
                    .iter()
                    .map(|(a, b)| a.sub(b).expect("same degree operators")),
            );
        }
        ops.extend(
            self.powers.iter().map(|p| {
                Polynomial::monomial(Monomial::power(self.num_vars, p.variable, p.exponent))
            }),
        );
        ops.sort_by_key(Polynomial::degree);
        ops
    }

    pub fn len(&self) -> usize {
        self.powers.len()
            + self.nonfaces.values().map(Vec::len).sum::<usize>()
            + self.differences.values().map(Vec::len).sum::<usize>()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn describe(&self, names: &VariableNames) -> GeneratorSetJson {
        let dual = names.dual();
        GeneratorSetJson {
            powers: self
                .powers
                .iter()
                .map(|p| {
                    format_polynomial(
                        &Polynomial::monomial(Monomial::power(
                            self.num_vars,
                            p.variable,
                            p.exponent,
                        )),
                        &dual,
                    )
                })
                .collect(),
            nonfaces: self
                .nonfaces
                .iter()
                .map(|(j, ms)| {
                    (
                        *j,
                        ms.iter()
                            .map(|m| format_polynomial(&Polynomial::monomial(m.clone()), &dual))
                            .collect(),
                    )
                })
                .collect(),
            differences: self
                .differences
                .iter()
                .map(|(j, pairs)| {
                    (
                        *j,
                        pairs
                            .iter()
                            .map(|(a, b)| {
                                [format_polynomial(a, &dual), format_polynomial(b, &dual)]
                            })
                            .collect(),
                    )
                })
                .collect(),
        }
    }
}

/// Text rendering of a [`GeneratorSet`] for JSON output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorSetJson {
    pub powers: Vec<String>,
    pub nonfaces: BTreeMap<u32, Vec<String>>,
    /// `[P1, P2]` pairs; the generator is `P1 - P2`.
    pub differences: BTreeMap<u32, Vec<[String; 2]>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtractOptions {
    /// Highest degree searched for difference generators; `None` searches
    /// every degree up to the socle degree.
    pub max_difference_degree: Option<u32>,
    pub limits: Limits,
}

impl Default for ExtractOptions {
    fn default() -> Self {
        Self {
            max_difference_degree: None,
            limits: Limits::default(),
        }
    }
}

fn require_coefficient_one(f: &Polynomial) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_coefficient_one() {
        return Err(Error::invalid("all coefficients must equal 1"));
    }
    Ok(())
}

/// Degree-`j` monomials of the complex, i.e. the operators `X^a` with
/// `X^a(f) != 0`, in descending lex order.
fn live_monomials(zeta: &CellComplex, j: u32) -> Vec<Monomial> {
    let mut live: Vec<Monomial> = zeta
        .cells()
        .iter()
        .filter(|m| m.degree() == j)
        .cloned()
        .collect();
    live.reverse();
    live
}

/// Contraction images of the live monomials as count vectors over the
/// ascending degree `d-j` basis.
fn images(f: &Polynomial, j: u32, live: &[Monomial], limits: &Limits) -> Result<Vec<Vec<u32>>> {
    let cat = catalecticant_with(f, j, Convention::Contraction, limits)?;
    let cols = enumerate_t(f.num_vars(), j)?;
    Ok(live
        .iter()
        .map(|m| {
            let c = cols.binary_search(m).expect("basis monomial");
            (0..cat.rows())
                .map(|r| u32::from(!num_traits::Zero::is_zero(cat.get(r, c))))
                .collect()
        })
        .collect())
}

fn subset_polynomial(num_vars: usize, live: &[Monomial], members: &[usize]) -> Polynomial {
    Polynomial::sum_of(num_vars, members.iter().map(|&i| live[i].clone())).expect("nonempty subset")
}

/// Lexicographic index combinations of size `k` out of `n`.
fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = if k <= n { Some((0..k).collect()) } else { None };
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                current = None;
                break;
            }
            i -= 1;
            if next[i] < n - k + i {
                next[i] += 1;
                for t in i + 1..k {
                    next[t] = next[t - 1] + 1;
                }
                current = Some(next);
                break;
            }
        }
        Some(out)
    })
}

fn check_subset_guard(live: usize, limits: &Limits) -> Result<()> {
    if live > limits.max_subset_monomials {
        return Err(Error::guard(
            "non-annihilating monomials for subset search",
            live as u128,
            limits.max_subset_monomials as u128,
        ));
    }
    Ok(())
}

/// Partition of the coefficient-1 operators of degree `j` supported on
/// non-annihilating monomials by their exact contraction image.
///
/// Members are ordered by size, then descending lex order of their
/// supports; classes are ordered by their first member.
pub fn equal_image_classes(
    f: &Polynomial,
    j: u32,
    limits: &Limits,
) -> Result<Vec<Vec<Polynomial>>> {
    require_coefficient_one(f)?;
    if j == 0 || j > f.degree() {
        return Err(Error::invalid(format!(
            "degree {j} out of range 1..={}",
            f.degree()
        )));
    }
    let zeta = zeta_of(f)?;
    let live = live_monomials(&zeta, j);
    check_subset_guard(live.len(), limits)?;
    let imgs = images(f, j, &live, limits)?;
    let mut order: Vec<Vec<u32>> = Vec::new();
    let mut classes: HashMap<Vec<u32>, Vec<Vec<usize>>> = HashMap::new();
    for size in 1..=live.len() {
        for members in combinations(live.len(), size) {
            let mut image = vec![0u32; imgs.first().map_or(0, Vec::len)];
            for &i in &members {
                for (acc, v) in image.iter_mut().zip(&imgs[i]) {
                    *acc += v;
                }
            }
            let entry = classes.entry(image.clone()).or_default();
            if entry.is_empty() {
                order.push(image);
            }
            entry.push(members);
        }
    }
    Ok(order
        .into_iter()
        .map(|image| {
            classes[&image]
                .iter()
                .map(|members| subset_polynomial(f.num_vars(), &live, members))
                .collect()
        })
        .collect())
}

/// Generators of `Ann(f)` from the three structured families, with
/// redundant differences pruned.
pub fn extract_generators(f: &Polynomial) -> Result<GeneratorSet> {
    extract_generators_with(f, &ExtractOptions::default())
}

pub fn extract_generators_with(f: &Polynomial, opts: &ExtractOptions) -> Result<GeneratorSet> {
    require_coefficient_one(f)?;
    let limits = &opts.limits;
    let n = f.num_vars();
    let d = f.degree();
    if ann_dimension_with(f, 1, Convention::Contraction, limits)? != 0 {
        return Err(Error::invalid("polynomial is not standard"));
    }
    let zeta = zeta_of(f)?;
    let support = f.support();

    // X_k^(d+1) is kept only when no lower pure power of X_k is a non-face,
    // i.e. when x_k^d itself is in the support.
    let powers = (0..n)
        .filter(|&k| support.contains(&Monomial::power(n, k, d)))
        .map(|k| PowerGenerator {
            variable: k,
            exponent: d + 1,
        })
        .collect();

    let mut nonfaces = BTreeMap::new();
    let mut differences: BTreeMap<u32, Vec<(Polynomial, Polynomial)>> = BTreeMap::new();
    let mut lower: Vec<Polynomial> = Vec::new();
    let diff_cap = opts.max_difference_degree.unwrap_or(d).min(d);

    for j in 1..=d {
        let basis = enumerate_t(n, j)?;
        let target = ann_dimension_with(f, j, Convention::Contraction, limits)?;
        let mut span = Span::new(basis.len());
        for g in &lower {
            for m in enumerate_t(n, j - g.degree())? {
                span.insert(&g.mul_monomial(&m).to_coefficients());
            }
        }
        let nf = minimal_nonfaces(&zeta, j)?;
        for m in &nf {
            span.insert(&Polynomial::monomial(m.clone()).to_coefficients());
        }
        lower.extend(nf.iter().cloned().map(Polynomial::monomial));
        if !nf.is_empty() {
            nonfaces.insert(j, nf);
        }

        if j > diff_cap || span.rank() >= target {
            continue;
        }
        let pairs = difference_generators(f, j, &zeta, &mut span, target, limits)?;
        for (a, b) in &pairs {
            lower.push(a.sub(b).expect("same degree"));
        }
        if !pairs.is_empty() {
            differences.insert(j, pairs);
        }
    }

    Ok(GeneratorSet {
        num_vars: n,
        socle_degree: d,
        powers,
        nonfaces,
        differences,
    })
}

/// Walks coefficient-1 operators by increasing size (then descending lex
/// order of support); whenever one has the same image as an earlier one,
/// their difference is a candidate, kept only if it enlarges `span`. Stops
/// once the span reaches `target`.
fn difference_generators(
    f: &Polynomial,
    j: u32,
    zeta: &CellComplex,
    span: &mut Span,
    target: usize,
    limits: &Limits,
) -> Result<Vec<(Polynomial, Polynomial)>> {
    let live = live_monomials(zeta, j);
    check_subset_guard(live.len(), limits)?;
    let imgs = images(f, j, &live, limits)?;
    let rows = imgs.first().map_or(0, Vec::len);
    let n = f.num_vars();
    let mut last_of_class: HashMap<Vec<u32>, Vec<usize>> = HashMap::new();
    let mut out = Vec::new();
    for size in 1..=live.len() {
        for members in combinations(live.len(), size) {
            let mut image = vec![0u32; rows];
            for &i in &members {
                for (acc, v) in image.iter_mut().zip(&imgs[i]) {
                    *acc += v;
                }
            }
            if let Some(prev) = last_of_class.insert(image, members.clone()) {
                let p1 = subset_polynomial(n, &live, &prev);
                let p2 = subset_polynomial(n, &live, &members);
                let diff = p1.sub(&p2)?;
                if span.insert(&diff.to_coefficients()) {
                    out.push((p1, p2));
                    if span.rank() >= target {
                        return Ok(out);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Checks, in every degree `1..=deg f`, that the ideal generated by `ops`
/// has exactly `Ann(f)_j` as its degree-`j` part.
pub fn verify_operators(f: &Polynomial, ops: &[Polynomial]) -> Result<bool> {
    verify_operators_with(f, ops, &Limits::default())
}

pub fn verify_operators_with(f: &Polynomial, ops: &[Polynomial], limits: &Limits) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.num_vars();
    for op in ops {
        if op.num_vars() != n {
            return Err(Error::invalid("generator lives in the wrong ring"));
        }
    }
    for j in 1..=f.degree() {
        let target = ann_dimension_with(f, j, Convention::Contraction, limits)?;
        let basis_len = enumerate_t(n, j)?.len();
        let mut span = Span::new(basis_len);
        for g in ops.iter().filter(|g| g.degree() <= j && !g.is_zero()) {
            for m in enumerate_t(n, j - g.degree())? {
                let product = g.mul_monomial(&m);
                if !contract(&product, f, Convention::Contraction)?.is_zero() {
                    return Ok(false);
                }
                span.insert(&product.to_coefficients());
            }
        }
        if span.rank() != target {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn verify_generators(f: &Polynomial, g: &GeneratorSet) -> Result<bool> {
    verify_operators(f, &g.operators())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_polynomial;

    fn p(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, n).unwrap()
    }

    #[test]
    fn binary_quadric_generators() {
        let f = p("x1^2 + x1*x2", 2);
        let g = extract_generators(&f).unwrap();
        assert_eq!(
            g.powers,
            vec![PowerGenerator {
                variable: 0,
                exponent: 3
            }]
        );
        assert_eq!(g.nonfaces[&2], vec![Monomial::power(2, 1, 2)]);
        assert_eq!(g.differences[&2], vec![(p("x1^2", 2), p("x1*x2", 2))]);
        assert!(verify_generators(&f, &g).unwrap());
        let stated = [p("x1^3", 2), p("x2^2", 2), p("x1^2 - x1*x2", 2)];
        assert!(verify_operators(&f, &stated).unwrap());
        assert!(!verify_operators(&f, &stated[..2]).unwrap());
    }

    #[test]
    fn single_variable_chain() {
        let f = p("x1^5", 1);
        let g = extract_generators(&f).unwrap();
        assert_eq!(g.operators(), vec![p("x1^6", 1)]);
        assert!(verify_generators(&f, &g).unwrap());
    }

    #[test]
    fn binary_cubic() {
        let all_ones = p("x1^3 + x1^2*x2 + x1*x2^2 + x2^3", 2);
        assert!(extract_generators(&all_ones).is_err());
        let f = p("x1^3 + x1*x2^2", 2);
        let g = extract_generators(&f).unwrap();
        assert_eq!(g.powers.len(), 1);
        assert!(verify_generators(&f, &g).unwrap());
    }

    #[test]
    fn image_classes() {
        let f = p("x1^2 + x1*x2", 2);
        let classes = equal_image_classes(&f, 2, &Limits::default()).unwrap();
        assert_eq!(classes[0], vec![p("x1^2", 2), p("x1*x2", 2)]);
        assert_eq!(classes.len(), 2);
        for c in equal_image_classes(&p("x1^4", 1), 2, &Limits::default()).unwrap() {
            assert_eq!(c.len(), 1);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(extract_generators(&p("2*x1^2 + x1*x2", 2)).is_err());
        assert!(extract_generators(&p("x1^2", 2)).is_err());
        assert!(equal_image_classes(&p("x1^2", 1), 3, &Limits::default()).is_err());
    }

    #[test]
    fn combinations_are_lexicographic() {
        let all: Vec<_> = combinations(4, 2).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(combinations(2, 3).count(), 0);
    }
}
