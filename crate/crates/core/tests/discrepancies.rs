//! Places where a stated claim and the computed answer differ, pinned down
//! so the computed behaviour is explicit.

use apolar::apolarity::{annihilates, catalecticant, hilbert_vector_with, is_standard};
use apolar::generators::{
    extract_generators, extract_generators_with, verify_generators, verify_operators,
    ExtractOptions,
};
use apolar::linalg::rat;
use apolar::locus::{st_conditions, SupportSet};
use apolar::perazzo::all_ones_check;
use apolar::text::parse_polynomial;
use apolar::{
    ann_basis, compare_hilbert, hilbert_vector, Convention, HilbertOrder, Limits, Polynomial,
};

fn p(s: &str, n: usize) -> Polynomial {
    parse_polynomial(s, n).unwrap()
}

#[test]
fn conventions_disagree_on_catalecticant_rank() {
    let f = p("x1^2 + x1*x2 + x2^2", 2);
    assert_eq!(
        catalecticant(&f, 1, Convention::Contraction)
            .unwrap()
            .rank(),
        1
    );
    assert_eq!(
        catalecticant(&f, 1, Convention::Differentiation)
            .unwrap()
            .rank(),
        2
    );
}

#[test]
fn all_ones_vector_can_exceed_a_random_one() {
    let support = p("x1^2 + x1*x2 + x1*x3 + x2*x3", 3);
    let ones = hilbert_vector(&support).unwrap();
    assert_eq!(ones.0, vec![1, 3, 1]);
    let degenerate = p("2*x1^2 + x1*x2 + x1*x3 + x2*x3", 3);
    let h = hilbert_vector(&degenerate).unwrap();
    assert_eq!(h.0, vec![1, 2, 1]);
    assert_eq!(compare_hilbert(&ones, &h).unwrap(), HilbertOrder::GreaterEq);

    // The sampling check reports such draws with everything needed to
    // reproduce them.
    let s = SupportSet::of(&support).unwrap();
    let report = all_ones_check(&s, 400, 7).unwrap();
    assert!(report.counterexamples > 0);
    for t in report.trials.iter().filter(|t| !t.holds) {
        let terms = s
            .monomials()
            .iter()
            .cloned()
            .zip(t.coefficients.iter().map(|&c| rat(c)));
        let f = Polynomial::new(3, terms).unwrap();
        assert_eq!(hilbert_vector(&f).unwrap(), t.hilbert);
        assert_eq!(t.order, HilbertOrder::GreaterEq);
    }
}

#[test]
fn binomial_coefficient_cubic_under_both_conventions() {
    let f = p("x1^3 + 3*x1^2*x2 + 3*x1*x2^2 + x2^3", 2);
    // Under contraction X1^2 and X2^2 have independent images, so no
    // combination l1*X1^2 - l2*X2^2 with l1, l2 nonzero annihilates.
    for l1 in -4i64..=4 {
        for l2 in -4i64..=4 {
            if l1 == 0 || l2 == 0 {
                continue;
            }
            let op = p("x1^2", 2)
                .scale(&rat(l1))
                .sub(&p("x2^2", 2).scale(&rat(l2)))
                .unwrap();
            assert!(
                !annihilates(&op, &f, Convention::Contraction).unwrap(),
                "{op:?}"
            );
        }
    }
    // Under differentiation f = (x1 + x2)^3 and all second derivatives agree.
    for op in ["x1^2 - x2^2", "x1^2 - x1*x2"] {
        assert!(annihilates(&p(op, 2), &f, Convention::Differentiation).unwrap());
    }
    assert_eq!(
        hilbert_vector_with(&f, Convention::Differentiation, &Limits::default())
            .unwrap()
            .0,
        vec![1, 1, 1, 1]
    );
}

#[test]
fn all_monomials_form_has_consecutive_difference_kernel() {
    for n in 2..=4 {
        let all: Vec<String> = apolar::monomial::enumerate_t(n, 3)
            .unwrap()
            .iter()
            .map(|m| apolar::text::format_monomial(m, &apolar::text::VariableNames::plain(n)))
            .collect();
        let f = p(&all.join(" + "), n);
        let basis = ann_basis(&f, 1).unwrap();
        assert_eq!(basis.len(), n - 1);
        for i in 1..n {
            let op = p(&format!("x{i} - x{}", i + 1), n);
            assert!(annihilates(&op, &f, Convention::Contraction).unwrap());
        }
        assert!(!is_standard(&f).unwrap());
    }
}

#[test]
fn support_conditions_disagree_with_standardness() {
    let f = p("x1^2*x2 + x1*x2^2", 2);
    assert!(is_standard(&f).unwrap());
    let st = st_conditions(&SupportSet::of(&f).unwrap());
    assert!(st.st_a && !st.st_b && !st.st_c);
}

#[test]
fn half_degree_cap_misses_differences() {
    let f = p("x1^2 + x1*x2", 2);
    let capped = extract_generators_with(
        &f,
        &ExtractOptions {
            max_difference_degree: Some(1),
            ..ExtractOptions::default()
        },
    )
    .unwrap();
    assert!(!verify_generators(&f, &capped).unwrap());
    assert!(verify_generators(&f, &extract_generators(&f).unwrap()).unwrap());
}

#[test]
fn listed_power_generator_is_redundant() {
    let f = p("x1^2 + x1*x2", 2);
    assert!(verify_operators(&f, &[p("x2^2", 2), p("x1^2 - x1*x2", 2)]).unwrap());
}
