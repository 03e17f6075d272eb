//! The monomial cell complex of a polynomial.
//!
//! A degree-`k` monic monomial is a `(k-1)`-cell. The complex of a support
//! is the set of all monomials of degree `>= 1` dividing some support
//! monomial; gluing along common divisors is automatic because a shared
//! divisor is one set element. Containment of the complexes of two
//! monomials is exactly divisibility, so the face poset is all we keep.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::apolarity::Polynomial;
use crate::error::{Error, Result};
use crate::monomial::{enumerate_t, Monomial};
use crate::text::{format_monomial, VariableNames};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cell {
    pub monomial: Monomial,
    pub dimension: u32,
}

impl Cell {
    pub fn new(monomial: Monomial) -> Result<Self> {
        if monomial.degree() == 0 {
            return Err(Error::invalid("the empty monomial is not a cell"));
        }
        let dimension = monomial.degree() - 1;
        Ok(Self {
            monomial,
            dimension,
        })
    }
}

/// Divisor-closed set of monomials of positive degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellComplex {
    num_vars: usize,
    cells: BTreeSet<Monomial>,
}

impl CellComplex {
    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn cells(&self) -> &BTreeSet<Monomial> {
        &self.cells
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.cells.contains(m)
    }

    pub fn top_dimension(&self) -> Option<u32> {
        self.cells.iter().map(|m| m.degree() - 1).max()
    }

    /// Cells of the given dimension, ascending.
    pub fn cells_of_dimension(&self, dim: u32) -> Vec<Cell> {
        self.cells
            .iter()
            .filter(|m| m.degree() == dim + 1)
            .map(|m| Cell::new(m.clone()).expect("positive degree"))
            .collect()
    }

    pub fn is_divisor_closed(&self) -> bool {
        self.cells.iter().all(|m| {
            (0..self.num_vars)
                .filter_map(|v| m.lowered(v))
                .filter(|d| d.degree() >= 1)
                .all(|d| self.cells.contains(&d))
        })
    }

    /// Covering relations of the face poset: `(lower, upper)` with
    /// `upper = lower * x_v`.
    pub fn covering_edges(&self) -> Vec<(Monomial, Monomial)> {
        let mut edges = Vec::new();
        for m in &self.cells {
            for v in 0..self.num_vars {
                if let Some(d) = m.lowered(v) {
                    if d.degree() >= 1 {
                        edges.push((d, m.clone()));
                    }
                }
            }
        }
        edges.sort();
        edges.dedup();
        edges
    }
}

pub fn zeta_of_support(support: &[Monomial], num_vars: usize) -> Result<CellComplex> {
    let Some(first) = support.first() else {
        return Err(Error::invalid("support must be nonempty"));
    };
    let d = first.degree();
    if d == 0 {
        return Err(Error::invalid("support monomials must have degree >= 1"));
    }
    let mut cells = BTreeSet::new();
    for m in support {
        if m.num_vars() != num_vars {
            return Err(Error::invalid("support monomial has the wrong length"));
        }
        if m.degree() != d {
            return Err(Error::Inhomogeneous {
                first: d,
                second: m.degree(),
            });
        }
        cells.extend(m.divisors().into_iter().filter(|q| q.degree() >= 1));
    }
    Ok(CellComplex { num_vars, cells })
}

pub fn zeta_of(f: &Polynomial) -> Result<CellComplex> {
    zeta_of_support(&f.support(), f.num_vars())
}

/// Number of cells of dimension at most `k`.
pub fn skeleton_count(c: &CellComplex, k: u32) -> usize {
    c.cells.iter().filter(|m| m.degree() <= k + 1).count()
}

/// `(s_0, ..., s_d)` with `s_0 = 1` and `s_h` the number of degree-`h`
/// cells.
pub fn s_counts(c: &CellComplex, d: u32) -> Vec<usize> {
    let mut s = vec![0usize; d as usize + 1];
    s[0] = 1;
    for m in &c.cells {
        if (1..=d).contains(&m.degree()) {
            s[m.degree() as usize] += 1;
        }
    }
    s
}

/// `zeta(g)` is a subcomplex of `zeta(h)` iff `g` divides `h`.
pub fn is_subcomplex(g: &Monomial, h: &Monomial) -> bool {
    g.divides(h)
}

/// Degree-`j` monomials outside the complex all of whose proper divisors of
/// positive degree are inside it.
pub fn minimal_nonfaces(c: &CellComplex, j: u32) -> Result<Vec<Monomial>> {
    if j == 0 {
        return Err(Error::invalid("non-faces start in degree 1"));
    }
    Ok(enumerate_t(c.num_vars, j)?
        .into_iter()
        .filter(|m| !c.cells.contains(m))
        .filter(|m| {
            m.divisors()
                .iter()
                .filter(|q| q.degree() >= 1 && q.degree() < j)
                .all(|q| c.cells.contains(q))
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FacePosetJson {
    pub num_vars: usize,
    /// Cell names grouped by dimension (key = dimension).
    pub cells: BTreeMap<u32, Vec<String>>,
    /// `[lower, upper]` covering pairs.
    pub edges: Vec<[String; 2]>,
}

pub fn face_poset(c: &CellComplex, names: &VariableNames) -> FacePosetJson {
    let mut cells: BTreeMap<u32, Vec<String>> = BTreeMap::new();
    for m in &c.cells {
        cells
            .entry(m.degree() - 1)
            .or_default()
            .push(format_monomial(m, names));
    }
    let edges = c
        .covering_edges()
        .into_iter()
        .map(|(a, b)| [format_monomial(&a, names), format_monomial(&b, names)])
        .collect();
    FacePosetJson {
        num_vars: c.num_vars,
        cells,
        edges,
    }
}

/// Graphviz rendering of the face poset, one rank per dimension.
pub fn to_dot(c: &CellComplex, names: &VariableNames) -> String {
    let mut out = String::from("digraph zeta {\n  rankdir=BT;\n  node [shape=box];\n");
    let poset = face_poset(c, names);
    for (dim, cells) in &poset.cells {
        let quoted: Vec<String> = cells.iter().map(|s| format!("\"{s}\"")).collect();
        writeln!(
            out,
            "  {{ rank=same; {} }} // dimension {dim}",
            quoted.join("; ")
        )
        .unwrap();
    }
    for [a, b] in &poset.edges {
        writeln!(out, "  \"{a}\" -> \"{b}\";").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_polynomial;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    fn zeta(s: &str, n: usize) -> CellComplex {
        zeta_of(&parse_polynomial(s, n).unwrap()).unwrap()
    }

    #[test]
    fn power_chain() {
        let c = zeta("x1^4", 1);
        let expect: BTreeSet<_> = (1..=4).map(|k| mono(&[k])).collect();
        assert_eq!(c.cells(), &expect);
        for k in 0..4 {
            assert_eq!(skeleton_count(&c, k), k as usize + 1);
        }
        assert_eq!(s_counts(&c, 4), vec![1; 5]);
    }

    #[test]
    fn small_supports() {
        let c = zeta("x1^2*x2", 2);
        let expect: BTreeSet<_> = [[1, 0], [0, 1], [2, 0], [1, 1], [2, 1]]
            .iter()
            .map(|e| mono(e))
            .collect();
        assert_eq!(c.cells(), &expect);
        assert_eq!(skeleton_count(&c, 0), 2);
        assert_eq!(skeleton_count(&c, 1), 4);
        assert_eq!(s_counts(&c, 3), vec![1, 2, 2, 1]);

        let coprime = zeta("x1^2 + x2^2", 2);
        assert_eq!(coprime.cells().len(), 4);
        assert_eq!(s_counts(&zeta("x1^2 + x1*x2", 2), 2), vec![1, 2, 2]);
    }

    #[test]
    fn subcomplex_is_divisibility() {
        assert!(is_subcomplex(&mono(&[1, 1]), &mono(&[2, 1])));
        assert!(!is_subcomplex(&mono(&[0, 2]), &mono(&[2, 1])));
        assert!(is_subcomplex(&mono(&[2, 1]), &mono(&[2, 1])));
    }

    #[test]
    fn nonfaces() {
        let c = zeta("x1^2 + x1*x2", 2);
        assert_eq!(minimal_nonfaces(&c, 2).unwrap(), vec![mono(&[0, 2])]);
        assert!(minimal_nonfaces(&c, 1).unwrap().is_empty());

        let sym = zeta("x1*x2*x3 + x1*x2*x4 + x1*x3*x4 + x2*x3*x4", 4);
        let squares: Vec<_> = (0..4).rev().map(|v| Monomial::power(4, v, 2)).collect();
        assert_eq!(minimal_nonfaces(&sym, 2).unwrap(), squares);

        let unused = zeta("x1^3", 3);
        assert_eq!(
            minimal_nonfaces(&unused, 1).unwrap(),
            vec![mono(&[0, 0, 1]), mono(&[0, 1, 0])]
        );
    }

    #[test]
    fn rejects_bad_supports() {
        assert!(zeta_of_support(&[], 2).is_err());
        assert!(zeta_of_support(&[mono(&[2, 0]), mono(&[1, 0])], 2).is_err());
        assert!(zeta_of_support(&[mono(&[0, 0])], 2).is_err());
    }

    #[test]
    fn exports() {
        let c = zeta("x1^2*x2", 2);
        let names = VariableNames::plain(2);
        let poset = face_poset(&c, &names);
        assert_eq!(poset.cells[&0], vec!["x2", "x1"]);
        assert_eq!(poset.edges.len(), 5);
        let dot = to_dot(&c, &names);
        assert!(dot.contains("\"x1*x2\" -> \"x1^2*x2\";"));
        assert!(c.is_divisor_closed());
    }
}
