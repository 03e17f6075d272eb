//! Supports of standard forms, their components, and the two coordinate
//! maps between ambient spaces of Perazzo type.
//!
//! The support predicates are evaluated literally from the derivative maps
//! `D_j`; [`crate::apolarity::is_standard`] is the linear-algebra verdict and
//! the two can disagree (see `x1^2*x2 + x1*x2^2`).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::apolarity::{Limits, Polynomial};
use crate::error::{Error, Result};
use crate::linalg::{Rational, RationalMatrix};
use crate::monomial::{chop, enumerate_t, tau, tau_usize, z1_set, z2_set, Monomial};
use crate::text::{format_monomial, VariableNames};

/// Nonempty set of monomials of one common degree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SupportSet {
    num_vars: usize,
    degree: u32,
    monomials: BTreeSet<Monomial>,
}

impl SupportSet {
    pub fn new(num_vars: usize, monomials: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let monomials: BTreeSet<Monomial> = monomials.into_iter().collect();
        let Some(first) = monomials.first() else {
            return Err(Error::invalid("support must be nonempty"));
        };
        let degree = first.degree();
        for m in &monomials {
            if m.num_vars() != num_vars {
                return Err(Error::invalid(format!(
                    "support monomial {m:?} does not have {num_vars} variables"
                )));
            }
            if m.degree() != degree {
                return Err(Error::Inhomogeneous {
                    first: degree,
                    second: m.degree(),
                });
            }
        }
        Ok(Self {
            num_vars,
            degree,
            monomials,
        })
    }

    pub fn of(f: &Polynomial) -> Result<Self> {
        Self::new(f.num_vars(), f.support())
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn monomials(&self) -> &BTreeSet<Monomial> {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// The coefficient-1 polynomial on this support.
    pub fn polynomial(&self) -> Result<Polynomial> {
        Polynomial::sum_of(self.num_vars, self.monomials.iter().cloned())
    }

    /// All defined `(i, j, D_j(i))` triples, `j` 0-based.
    fn derivatives(&self) -> impl Iterator<Item = (&Monomial, usize, Monomial)> + '_ {
        self.monomials.iter().flat_map(move |i| {
            (0..self.num_vars).filter_map(move |j| i.lowered(j).map(|d| (i, j, d)))
        })
    }

    /// The set of all defined derivatives of support monomials.
    pub fn derived_set(&self) -> BTreeSet<Monomial> {
        self.derivatives().map(|(_, _, d)| d).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StConditions {
    pub st_a: bool,
    pub st_b: bool,
    pub st_c: bool,
}

impl StConditions {
    pub fn all(&self) -> bool {
        self.st_a && self.st_b && self.st_c
    }
}

pub fn st_conditions(s: &SupportSet) -> StConditions {
    let st_a = (0..s.num_vars).all(|j| s.monomials.iter().any(|m| m.exponent(j) >= 1));

    let mut hits: BTreeMap<Monomial, Vec<(&Monomial, usize)>> = BTreeMap::new();
    for (i, j, d) in s.derivatives() {
        hits.entry(d).or_default().push((i, j));
    }
    let st_b = hits.values().all(|pairs| pairs.len() <= 1);
    let st_c = hits.values().all(|pairs| {
        pairs
            .iter()
            .all(|(i1, j1)| pairs.iter().all(|(i2, j2)| !(i1 != i2 && j1 != j2)))
    });
    StConditions { st_a, st_b, st_c }
}

/// Every pair of distinct support monomials has a gcd of degree `<= d-2`.
pub fn gcd_condition(s: &SupportSet) -> bool {
    let ms: Vec<&Monomial> = s.monomials.iter().collect();
    ms.iter().enumerate().all(|(a, m1)| {
        ms[a + 1..]
            .iter()
            .all(|m2| m1.gcd(m2).degree() + 2 <= s.degree)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentDescriptor {
    pub derived_set: BTreeSet<Monomial>,
    pub support: SupportSet,
    /// `|support| - 1`.
    pub dim_support: usize,
    /// `|derived_set| - 1`.
    pub dim_derived: usize,
}

impl ComponentDescriptor {
    pub fn new(support: SupportSet) -> Self {
        let derived_set = support.derived_set();
        Self {
            dim_support: support.len() - 1,
            dim_derived: derived_set.len().saturating_sub(1),
            derived_set,
            support,
        }
    }
}

/// All supports in `T(n,d)` satisfying st.A, st.B and st.C, ordered by size
/// and then by their ascending monomial lists.
pub fn enumerate_admissible_supports(
    n: usize,
    d: u32,
    limits: &Limits,
) -> Result<Vec<ComponentDescriptor>> {
    if n == 0 || d == 0 {
        return Err(Error::invalid("enumeration needs n >= 1 and d >= 1"));
    }
    let count = tau(n, d)?;
    if count > limits.max_locus_tau as u128 {
        return Err(Error::guard(
            "tau(n,d)",
            count,
            limits.max_locus_tau as u128,
        ));
    }
    let basis = enumerate_t(n, d)?;
    let derivs: Vec<Vec<Monomial>> = basis
        .iter()
        .map(|m| (0..n).filter_map(|j| m.lowered(j)).collect())
        .collect();

    // Any two support monomials sharing a derivative violate st.B, so the
    // search only extends by monomials with fresh derivatives.
    let mut found = Vec::new();
    let mut chosen = Vec::new();
    let mut used = BTreeSet::new();
    search(&basis, &derivs, 0, &mut chosen, &mut used, &mut found);

    let mut out = Vec::new();
    for idx in found {
        let support = SupportSet::new(n, idx.iter().map(|&k| basis[k].clone()))?;
        if st_conditions(&support).all() {
            out.push(ComponentDescriptor::new(support));
        }
    }
    out.sort_by(|a, b| {
        (a.support.len(), &a.support.monomials).cmp(&(b.support.len(), &b.support.monomials))
    });
    Ok(out)
}

fn search(
    basis: &[Monomial],
    derivs: &[Vec<Monomial>],
    next: usize,
    chosen: &mut Vec<usize>,
    used: &mut BTreeSet<Monomial>,
    found: &mut Vec<Vec<usize>>,
) {
    if next == basis.len() {
        if !chosen.is_empty() {
            found.push(chosen.clone());
        }
        return;
    }
    search(basis, derivs, next + 1, chosen, used, found);
    if derivs[next].iter().all(|d| !used.contains(d)) {
        used.extend(derivs[next].iter().cloned());
        chosen.push(next);
        search(basis, derivs, next + 1, chosen, used, found);
        chosen.pop();
        for d in &derivs[next] {
            used.remove(d);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentRecord {
    pub support: Vec<String>,
    pub derived_set: Vec<String>,
    pub dim_support: usize,
    pub dim_derived: usize,
}

pub fn component_records(components: &[ComponentDescriptor]) -> Vec<ComponentRecord> {
    components
        .iter()
        .map(|c| {
            let names = VariableNames::plain(c.support.num_vars);
            ComponentRecord {
                support: c
                    .support
                    .monomials
                    .iter()
                    .map(|m| format_monomial(m, &names))
                    .collect(),
                derived_set: c
                    .derived_set
                    .iter()
                    .map(|m| format_monomial(m, &names))
                    .collect(),
                dim_support: c.dim_support,
                dim_derived: c.dim_derived,
            }
        })
        .collect()
}

/// One row per component; monomial lists are `;`-separated.
pub fn components_csv(components: &[ComponentDescriptor]) -> String {
    let mut out = String::from("index,size,dim_support,dim_derived,support,derived_set\n");
    for (k, r) in component_records(components).iter().enumerate() {
        writeln!(
            out,
            "{k},{},{},{},{},{}",
            r.support.len(),
            r.dim_support,
            r.dim_derived,
            r.support.join(";"),
            r.derived_set.join(";")
        )
        .unwrap();
    }
    out
}

pub fn full_perazzo_locus_dimension(n: usize, d: u32) -> Result<usize> {
    if n < 2 || d < 2 {
        return Err(Error::invalid(
            "the full Perazzo locus needs n >= 2 and d >= 2",
        ));
    }
    Ok(tau_usize(n, d - 1) - 1)
}

/// Whether `l` is the lex-minimum preimage of its own chop, i.e. lies in
/// the image of [`crate::monomial::chop_section`]. Closed form: the last
/// coordinate is positive.
pub fn in_chop_section_image(l: &Monomial) -> bool {
    l.degree() >= 1 && l.exponent(l.num_vars() - 1) >= 1
}

/// A linear map between monomial bases together with its matrix
/// (rows follow `target`, columns follow `domain`).
#[derive(Debug, Clone)]
pub struct MonomialMap {
    pub domain: Vec<Monomial>,
    pub target: Vec<Monomial>,
    pub matrix: RationalMatrix,
}

fn build_map(
    domain: Vec<Monomial>,
    target: Vec<Monomial>,
    image: impl Fn(&Monomial) -> Result<Option<Monomial>>,
) -> Result<MonomialMap> {
    let mut matrix = RationalMatrix::zeros(target.len(), domain.len());
    for (c, m) in domain.iter().enumerate() {
        if let Some(img) = image(m)? {
            let r = target.binary_search(&img).map_err(|_| {
                Error::Internal(format!("image {img:?} of {m:?} is not a target monomial"))
            })?;
            matrix.set(r, c, Rational::from_integer(1.into()));
        }
    }
    Ok(MonomialMap {
        domain,
        target,
        matrix,
    })
}

/// `phi_(n,d)`: kills monomials divisible by `u_n` or by some `x_h`,
/// `h in Z1`, and deletes those coordinates from the rest.
pub fn phi_matrix(n: usize, d: u32, limits: &Limits) -> Result<MonomialMap> {
    if n < 2 || d < 2 {
        return Err(Error::invalid("phi needs n >= 2 and d >= 2"));
    }
    let t = tau_usize(n, d - 1);
    let t_low = tau_usize(n - 1, d - 1);
    limits.check_matrix(tau(t_low + n - 1, d)?, tau(t + n, d)?)?;
    let z1: BTreeSet<usize> = z1_set(n, d)?.into_iter().collect();
    let keep: Vec<usize> = (0..t + n - 1).filter(|v| !z1.contains(v)).collect();
    if keep.len() != t_low + n - 1 {
        return Err(Error::Internal(
            "phi keeps the wrong number of variables".into(),
        ));
    }
    build_map(
        enumerate_t(t + n, d)?,
        enumerate_t(t_low + n - 1, d)?,
        |m| {
            if m.exponent(t + n - 1) >= 1 || z1.iter().any(|&h| m.exponent(h) >= 1) {
                return Ok(None);
            }
            Monomial::new(keep.iter().map(|&v| m.exponent(v)).collect()).map(Some)
        },
    )
}

/// `psi_(n,d)`: a monomial survives iff all its x-variables have index in
/// `Z2`, the whole vector is a chop-section image and its u-part is a
/// chop-section image of degree `d-1`; survivors map to their chop with the
/// `Z2` x-variables renumbered consecutively.
pub fn psi_matrix(n: usize, d: u32, limits: &Limits) -> Result<MonomialMap> {
    if n < 2 || d < 3 {
        return Err(Error::invalid("psi needs n >= 2 and d >= 3"));
    }
    let t = tau_usize(n, d - 1);
    let t_low = tau_usize(n, d - 2);
    limits.check_matrix(tau(t_low + n, d - 1)?, tau(t + n, d)?)?;
    let z2 = z2_set(n, d)?;
    if z2.len() != t_low {
        return Err(Error::Internal(format!(
            "|Z2| = {} but the target has {t_low} x-variables",
            z2.len()
        )));
    }
    let z2_set: BTreeSet<usize> = z2.iter().copied().collect();
    build_map(
        enumerate_t(t + n, d)?,
        enumerate_t(t_low + n, d - 1)?,
        |m| {
            let e = m.exponents();
            let killed_x = (0..t).any(|k| e[k] >= 1 && !z2_set.contains(&k));
            let u = Monomial::new(e[t..].to_vec())?;
            if killed_x
                || !in_chop_section_image(m)
                || u.degree() != d - 1
                || !in_chop_section_image(&u)
            {
                return Ok(None);
            }
            let c = chop(m)?;
            let mut out: Vec<u32> = z2.iter().map(|&k| c.exponent(k)).collect();
            out.extend_from_slice(&c.exponents()[t..]);
            Monomial::new(out).map(Some)
        },
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapReport {
    pub map: &'static str,
    pub n: usize,
    pub d: u32,
    pub domain_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub kernel_dim: usize,
    /// The kernel dimension the closed formula predicts.
    pub formula_kernel_dim: usize,
    pub matches_formula: bool,
    pub surjective: bool,
}

fn report(map: &'static str, n: usize, d: u32, m: &MonomialMap, formula: usize) -> MapReport {
    let rank = m.matrix.rank();
    let kernel_dim = m.domain.len() - rank;
    MapReport {
        map,
        n,
        d,
        domain_dim: m.domain.len(),
        target_dim: m.target.len(),
        rank,
        kernel_dim,
        formula_kernel_dim: formula,
        matches_formula: kernel_dim == formula,
        surjective: rank == m.target.len(),
    }
}

/// Computed kernel dimension of `phi` against
/// `tau(n,d-1) - tau(n-1,d-1) + 1`.
pub fn phi_report(n: usize, d: u32, limits: &Limits) -> Result<MapReport> {
    let m = phi_matrix(n, d, limits)?;
    let formula = tau_usize(n, d - 1) - tau_usize(n - 1, d - 1) + 1;
    Ok(report("phi", n, d, &m, formula))
}

/// Computed kernel dimension of `psi` against `tau(n,d-1) - tau(n,d-2)`.
pub fn psi_report(n: usize, d: u32, limits: &Limits) -> Result<MapReport> {
    let m = psi_matrix(n, d, limits)?;
    let formula = tau_usize(n, d - 1) - tau_usize(n, d - 2);
    Ok(report("psi", n, d, &m, formula))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::chop_section;
    use crate::text::parse_polynomial;

    fn support(s: &str, n: usize) -> SupportSet {
        SupportSet::of(&parse_polynomial(s, n).unwrap()).unwrap()
    }

    #[test]
    fn st_examples() {
        let power = support("x1^3 + x2^3 + x3^3", 3);
        assert!(st_conditions(&power).all());
        let mixed = st_conditions(&support("x1^2*x2 + x1*x2^2", 2));
        assert!(mixed.st_a && !mixed.st_b && !mixed.st_c);
        assert!(!st_conditions(&support("x1^2", 2)).st_a);
    }

    #[test]
    fn gcd_examples() {
        assert!(gcd_condition(&support("x1^3 + x2^3", 2)));
        assert!(!gcd_condition(&support("x1^2*x2 + x1*x2^2", 2)));
        assert!(gcd_condition(&support("x1^2", 1)));
    }

    #[test]
    fn enumerate_binary_quadrics() {
        let comps = enumerate_admissible_supports(2, 2, &Limits::default()).unwrap();
        let supports: Vec<_> = comps.iter().map(|c| c.support.clone()).collect();
        assert_eq!(
            supports,
            vec![support("x1*x2", 2), support("x1^2 + x2^2", 2)]
        );
        assert_eq!(comps[1].dim_support, 1);
        assert_eq!(comps[1].dim_derived, 1);
        assert_eq!(comps[0].dim_support, 0);
        assert_eq!(comps[0].dim_derived, 1);
    }

    #[test]
    fn enumerate_one_variable() {
        let comps = enumerate_admissible_supports(1, 4, &Limits::default()).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!((comps[0].dim_support, comps[0].dim_derived), (0, 0));
    }

    #[test]
    fn enumerate_guard() {
        assert!(enumerate_admissible_supports(4, 3, &Limits::default()).is_ok());
        assert!(matches!(
            enumerate_admissible_supports(5, 3, &Limits::default()),
            Err(Error::Guard { value: 35, .. })
        ));
    }

    #[test]
    fn chop_section_image_closed_form() {
        for n in 1..=4 {
            for d in 0..=3 {
                let image: BTreeSet<_> = enumerate_t(n, d)
                    .unwrap()
                    .iter()
                    .map(|j| chop_section(j).unwrap())
                    .collect();
                for l in enumerate_t(n, d + 1).unwrap() {
                    assert_eq!(image.contains(&l), in_chop_section_image(&l), "{l:?}");
                }
            }
        }
    }

    #[test]
    fn phi_is_a_surjective_projection() {
        let m = phi_matrix(2, 2, &Limits::default()).unwrap();
        // x1 x2 u1 u2 -> x1' u1'; Z1 = {x1} since M_1 = u2.
        assert_eq!(m.domain.len(), 10);
        assert_eq!(m.target.len(), 3);
        let r = phi_report(2, 2, &Limits::default()).unwrap();
        assert!(r.surjective);
        assert_eq!(r.kernel_dim, 7);
        assert_eq!(r.formula_kernel_dim, 2);
        for (c, mono) in m.domain.iter().enumerate() {
            if mono.exponent(3) >= 1 {
                assert!((0..m.target.len())
                    .all(|r| m.matrix.get(r, c) == &Rational::from_integer(0.into())));
            }
        }
    }

    #[test]
    fn psi_images_are_single_monomials() {
        let m = psi_matrix(2, 3, &Limits::default()).unwrap();
        for c in 0..m.domain.len() {
            let nonzero = (0..m.target.len())
                .filter(|&r| m.matrix.get(r, c) != &Rational::from_integer(0.into()))
                .count();
            assert!(nonzero <= 1);
        }
        let r = psi_report(2, 3, &Limits::default()).unwrap();
        assert_eq!(r.rank, 4);
        assert_eq!(r.formula_kernel_dim, 1);
    }

    #[test]
    fn locus_dimensions() {
        assert_eq!(full_perazzo_locus_dimension(2, 2).unwrap(), 1);
        assert_eq!(full_perazzo_locus_dimension(2, 3).unwrap(), 2);
        assert_eq!(full_perazzo_locus_dimension(3, 2).unwrap(), 2);
        assert!(full_perazzo_locus_dimension(1, 2).is_err());
    }

    #[test]
    fn csv_catalog() {
        let comps = enumerate_admissible_supports(2, 2, &Limits::default()).unwrap();
        let csv = components_csv(&comps);
        assert_eq!(
            csv,
            "index,size,dim_support,dim_derived,support,derived_set\n\
             0,1,0,1,x1*x2,x2;x1\n\
             1,2,1,1,x2^2;x1^2,x2;x1\n"
        );
    }
}
