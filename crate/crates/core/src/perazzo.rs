//! Perazzo polynomials and the sampling experiments around the minimality
//! of the full Perazzo Hilbert vector.
//!
//! Variables are laid out as the x-block followed by the u-block. A Perazzo
//! polynomial is `sum_i x_i * M_i` for distinct degree `d-1` monomials `M_i`
//! in the u-variables; it is full when the `M_i` are the whole ascending
//! basis.

use rayon::prelude::*;
use serde::Serialize;

use crate::apolarity::{
    ann_dimension_with, catalecticant_with, compare_hilbert, hilbert_vector_with, is_standard_with,
    Convention, HilbertOrder, HilbertVector, Limits, Polynomial,
};
use crate::error::{Error, Result};
use crate::linalg::{rat, Rational, Span};
use crate::locus::SupportSet;
use crate::monomial::{enumerate_t, tau, tau_usize, Monomial};
use crate::rng::{Probability, Sampler};
use crate::text::{format_polynomial, VariableNames};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerazzoSpec {
    pub n: usize,
    pub d: u32,
    /// `None` for the full polynomial.
    pub m_choice: Option<Vec<Monomial>>,
}

impl PerazzoSpec {
    pub fn full(n: usize, d: u32) -> Self {
        Self {
            n,
            d,
            m_choice: None,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n < 2 || self.d < 2 {
            return Err(Error::invalid("Perazzo polynomials need n >= 2 and d >= 2"));
        }
        if let Some(ms) = &self.m_choice {
            if ms.is_empty() {
                return Err(Error::invalid("m_choice must be nonempty"));
            }
            for (k, m) in ms.iter().enumerate() {
                if m.num_vars() != self.n || m.degree() != self.d - 1 {
                    return Err(Error::invalid(format!(
                        "m_choice entry {m:?} is not a degree {} monomial in {} variables",
                        self.d - 1,
                        self.n
                    )));
                }
                if ms[..k].contains(m) {
                    return Err(Error::invalid(format!("m_choice repeats {m:?}")));
                }
            }
        }
        Ok(())
    }

    pub fn x_count(&self) -> usize {
        match &self.m_choice {
            Some(ms) => ms.len(),
            None => tau_usize(self.n, self.d - 1),
        }
    }

    pub fn names(&self) -> VariableNames {
        VariableNames::split(self.x_count(), self.n)
    }
}

pub fn build_perazzo(spec: &PerazzoSpec) -> Result<Polynomial> {
    spec.validate()?;
    let ms = match &spec.m_choice {
        Some(ms) => ms.clone(),
        None => enumerate_t(spec.n, spec.d - 1)?,
    };
    let p = ms.len();
    let x_zero = Monomial::one(p);
    let terms = ms.iter().enumerate().map(|(i, m)| {
        let x = x_zero.raised(i);
        (x.concat(m), rat(1))
    });
    Polynomial::new(p + spec.n, terms)
}

/// `(d1, d2)` when every term has x-block degree `d1` and u-block degree
/// `d2`; `None` for mixed bidegrees or the zero polynomial.
pub fn is_bihomogeneous(f: &Polynomial, x_block: &[usize]) -> Option<(u32, u32)> {
    let mut found = None;
    for m in f.terms().keys() {
        let dx: u32 = x_block.iter().map(|&v| m.exponent(v)).sum();
        let pair = (dx, m.degree() - dx);
        match found {
            None => found = Some(pair),
            Some(p) if p != pair => return None,
            _ => {}
        }
    }
    found
}

pub fn full_perazzo_hilbert(n: usize, d: u32, limits: &Limits) -> Result<HilbertVector> {
    let f = build_perazzo(&PerazzoSpec::full(n, d))?;
    hilbert_vector_with(&f, Convention::Contraction, limits)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Degree2Census {
    pub monomial_count: usize,
    pub binomial_count: usize,
    pub other_count: usize,
    pub total_dim: usize,
}

/// Splits `Ann(f)_2` into monomials, then `X^a - X^b` binomials that grow
/// the span, then the rest.
pub fn degree2_census(f: &Polynomial, limits: &Limits) -> Result<Degree2Census> {
    if f.degree() < 2 {
        return Err(Error::invalid("the degree-2 census needs degree >= 2"));
    }
    let m = catalecticant_with(f, 2, Convention::Contraction, limits)?;
    let total_dim = m.cols() - m.rank();
    let column =
        |c: usize| -> Vec<Rational> { (0..m.rows()).map(|r| m.get(r, c).clone()).collect() };
    let columns: Vec<Vec<Rational>> = (0..m.cols()).map(column).collect();
    let is_zero = |v: &[Rational]| v.iter().all(|x| x == &Rational::default());

    let mut span = Span::new(m.cols());
    let mut monomial_count = 0;
    for (c, col) in columns.iter().enumerate() {
        if is_zero(col) {
            let mut e = vec![Rational::default(); m.cols()];
            e[c] = rat(1);
            span.insert(&e);
            monomial_count += 1;
        }
    }
    let mut binomial_count = 0;
    for a in 0..m.cols() {
        if is_zero(&columns[a]) {
            continue;
        }
        for b in a + 1..m.cols() {
            if columns[a] == columns[b] {
                let mut e = vec![Rational::default(); m.cols()];
                e[a] = rat(1);
                e[b] = rat(-1);
                if span.insert(&e) {
                    binomial_count += 1;
                }
            }
        }
    }
    Ok(Degree2Census {
        monomial_count,
        binomial_count,
        other_count: total_dim - monomial_count - binomial_count,
        total_dim,
    })
}

/// `h_2 = tau(n,2) - dim Ann(f)_2`.
pub fn h2_of(f: &Polynomial) -> Result<usize> {
    if f.degree() < 2 {
        return Err(Error::invalid("h_2 needs degree >= 2"));
    }
    let ann = ann_dimension_with(f, 2, Convention::Contraction, &Limits::default())?;
    Ok(tau_usize(f.num_vars(), 2) - ann)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplingOptions {
    pub inclusion: Probability,
    /// Draws per trial before the trial is counted as aborted.
    pub retry_cap: u32,
    /// Coefficients are nonzero integers in `[-max, max]`.
    pub coefficient_bound: u32,
    pub jobs: usize,
    pub limits: Limits,
}

impl Default for SamplingOptions {
    fn default() -> Self {
        Self {
            inclusion: Probability::half(),
            retry_cap: 50,
            coefficient_bound: 9,
            jobs: 1,
            limits: Limits::default(),
        }
    }
}

/// Draws supports until a standard form appears. Returns the form and the
/// 0-based attempt that produced it.
fn draw_standard(
    sampler: &mut Sampler,
    basis: &[Monomial],
    opts: &SamplingOptions,
    random_coefficients: bool,
) -> Result<Option<(Polynomial, u32)>> {
    let n = basis[0].num_vars();
    for attempt in 0..opts.retry_cap {
        let mut terms = Vec::new();
        for m in basis {
            if sampler.coin(opts.inclusion) {
                terms.push(m.clone());
            }
        }
        let terms: Vec<(Monomial, Rational)> = terms
            .into_iter()
            .map(|m| {
                let c = if random_coefficients {
                    sampler.nonzero(opts.coefficient_bound)
                } else {
                    1
                };
                (m, rat(c))
            })
            .collect();
        if terms.is_empty() {
            continue;
        }
        let f = Polynomial::new(n, terms)?;
        if is_standard_with(&f, Convention::Contraction)? {
            return Ok(Some((f, attempt)));
        }
    }
    Ok(None)
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    if jobs == 0 {
        return Err(Error::invalid("jobs must be at least 1"));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))
}

fn sampling_basis(n: usize, d: u32, limits: &Limits) -> Result<(usize, Vec<Monomial>)> {
    if n < 2 || d < 2 {
        return Err(Error::invalid("sampling needs n >= 2 and d >= 2"));
    }
    let codim = n + tau_usize(n, d - 1);
    let count = tau(codim, d)?;
    limits.check_matrix(count, count)?;
    Ok((codim, enumerate_t(codim, d)?))
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ConjectureSpec {
    pub n: usize,
    pub d: u32,
    pub codim: usize,
}

#[derive(Debug, Clone, Default, Serialize, PartialEq, Eq)]
pub struct Tallies {
    pub strictly_below: usize,
    pub above: usize,
    pub equal: usize,
    pub incomparable: usize,
    pub aborted: usize,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Violator {
    pub trial: u64,
    pub attempt: u32,
    pub polynomial: String,
    pub hilbert: HilbertVector,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ConjectureReport {
    pub schema_version: u32,
    pub spec: ConjectureSpec,
    pub seed: u64,
    pub trials: u64,
    pub h_fp: HilbertVector,
    pub tallies: Tallies,
    pub violators: Vec<Violator>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

enum TrialOutcome {
    Aborted,
    Compared(HilbertOrder, Option<Violator>),
}

/// Samples standard forms of codimension `n + tau(n,d-1)` and degree `d`
/// and compares each Hilbert vector with the full Perazzo one. A form whose
/// vector lies strictly below is a violator of minimality and is listed in
/// full. Trial `t` uses RNG stream `t`, so the report does not depend on
/// `opts.jobs`.
pub fn conjecture_sample_check(
    n: usize,
    d: u32,
    trials: u64,
    seed: u64,
    opts: &SamplingOptions,
) -> Result<ConjectureReport> {
    let (codim, basis) = sampling_basis(n, d, &opts.limits)?;
    let h_fp = full_perazzo_hilbert(n, d, &opts.limits)?;
    let names = VariableNames::split(codim - n, n);

    let run = |t: u64| -> Result<TrialOutcome> {
        let mut sampler = Sampler::for_trial(seed, t);
        let Some((f, attempt)) = draw_standard(&mut sampler, &basis, opts, true)? else {
            return Ok(TrialOutcome::Aborted);
        };
        let h = hilbert_vector_with(&f, Convention::Contraction, &opts.limits)?;
        let order = compare_hilbert(&h, &h_fp)?;
        let violator = (order == HilbertOrder::LessEq).then(|| Violator {
            trial: t,
            attempt,
            polynomial: format_polynomial(&f, &names),
            hilbert: h,
        });
        Ok(TrialOutcome::Compared(order, violator))
    };
    let outcomes: Vec<TrialOutcome> =
        pool(opts.jobs)?.install(|| (0..trials).into_par_iter().map(run).collect::<Result<_>>())?;

    let mut tallies = Tallies::default();
    let mut violators = Vec::new();
    for o in outcomes {
        match o {
            TrialOutcome::Aborted => tallies.aborted += 1,
            TrialOutcome::Compared(order, v) => {
                match order {
                    HilbertOrder::LessEq => tallies.strictly_below += 1,
                    HilbertOrder::GreaterEq => tallies.above += 1,
                    HilbertOrder::Equal => tallies.equal += 1,
                    HilbertOrder::Incomparable => tallies.incomparable += 1,
                }
                violators.extend(v);
            }
        }
    }
    Ok(ConjectureReport {
        schema_version: 1,
        spec: ConjectureSpec { n, d, codim },
        seed,
        trials,
        h_fp,
        tallies,
        violators,
        runtime_ms: None,
    })
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct AllOnesTrial {
    pub trial: u64,
    /// Coefficients in ascending support order.
    pub coefficients: Vec<i64>,
    pub hilbert: HilbertVector,
    pub order: HilbertOrder,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct AllOnesReport {
    pub support: String,
    pub seed: u64,
    pub h_ones: HilbertVector,
    pub trials: Vec<AllOnesTrial>,
    pub counterexamples: usize,
}

/// Compares the Hilbert vector of the coefficient-1 form on `support` with
/// forms on the same support with random nonzero coefficients; the check
/// holds when the coefficient-1 vector is `LESS_EQ` or `EQUAL`.
pub fn all_ones_check(support: &SupportSet, trials: u64, seed: u64) -> Result<AllOnesReport> {
    let ones = support.polynomial()?;
    if !is_standard_with(&ones, Convention::Contraction)? {
        return Err(Error::invalid(
            "the coefficient-1 form on this support is not standard",
        ));
    }
    let limits = Limits::default();
    let h_ones = hilbert_vector_with(&ones, Convention::Contraction, &limits)?;
    let mut out = Vec::new();
    for t in 0..trials {
        let mut sampler = Sampler::for_trial(seed, t);
        let coefficients: Vec<i64> = (0..support.len()).map(|_| sampler.nonzero(9)).collect();
        let f = Polynomial::new(
            support.num_vars(),
            support
                .monomials()
                .iter()
                .cloned()
                .zip(coefficients.iter().map(|&c| rat(c))),
        )?;
        let hilbert = hilbert_vector_with(&f, Convention::Contraction, &limits)?;
        let order = compare_hilbert(&h_ones, &hilbert)?;
        out.push(AllOnesTrial {
            trial: t,
            coefficients,
            hilbert,
            order,
            holds: matches!(order, HilbertOrder::LessEq | HilbertOrder::Equal),
        });
    }
    let counterexamples = out.iter().filter(|t| !t.holds).count();
    Ok(AllOnesReport {
        support: format_polynomial(&ones, &VariableNames::plain(support.num_vars())),
        seed,
        h_ones,
        trials: out,
        counterexamples,
    })
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Degree2Dominance {
    pub n: usize,
    pub d: u32,
    /// `dim Ann(f)_2` of the full Perazzo form.
    pub full_perazzo_ann2: usize,
    pub sampled: usize,
    pub aborted: usize,
    pub max_ann2: Option<usize>,
    /// Sampled forms with strictly more degree-2 annihilators.
    pub exceeding: Vec<String>,
}

/// Samples coefficient-1 standard forms of the full Perazzo codimension and
/// degree and compares `dim Ann(f)_2` with the full Perazzo value.
pub fn degree2_dominance_check(
    n: usize,
    d: u32,
    trials: u64,
    seed: u64,
    opts: &SamplingOptions,
) -> Result<Degree2Dominance> {
    let (codim, basis) = sampling_basis(n, d, &opts.limits)?;
    let fp = build_perazzo(&PerazzoSpec::full(n, d))?;
    let full_perazzo_ann2 = ann_dimension_with(&fp, 2, Convention::Contraction, &opts.limits)?;
    let names = VariableNames::split(codim - n, n);
    let run = |t: u64| -> Result<Option<(usize, String)>> {
        let mut sampler = Sampler::for_trial(seed, t);
        let Some((f, _)) = draw_standard(&mut sampler, &basis, opts, false)? else {
            return Ok(None);
        };
        let a = ann_dimension_with(&f, 2, Convention::Contraction, &opts.limits)?;
        Ok(Some((a, format_polynomial(&f, &names))))
    };
    let results: Vec<Option<(usize, String)>> =
        pool(opts.jobs)?.install(|| (0..trials).into_par_iter().map(run).collect::<Result<_>>())?;
    let sampled: Vec<_> = results.iter().flatten().collect();
    Ok(Degree2Dominance {
        n,
        d,
        full_perazzo_ann2,
        sampled: sampled.len(),
        aborted: results.len() - sampled.len(),
        max_ann2: sampled.iter().map(|(a, _)| *a).max(),
        exceeding: sampled
            .iter()
            .filter(|(a, _)| *a > full_perazzo_ann2)
            .map(|(_, s)| s.clone())
            .collect(),
    })
}
