mod common;

use common::*;
use num_complex::Complex64;
use qwzeta::algebra::{charpoly_exact, RatPolynomial};
use qwzeta::experiments::srg_distinguish;
use qwzeta::graph::families;
use qwzeta::spectra::{compare, roots, SpectrumMultiset};
use qwzeta::walk::{edge_matrices, positive_support, transition_matrix};
use qwzeta::zeta::{ihara_reciprocal_bass_form, ihara_reciprocal_edge_form, power_traces};

fn char_u(g: &qwzeta::graph::Graph) -> RatPolynomial {
    charpoly_exact(&transition_matrix(g, &g.arcs()).unwrap().into_matrix()).unwrap()
}

#[test]
fn k4_charpoly_of_u() {
    // (x^2-1)^2 (x-1)^2 (x^2 + 2/3 x + 1)^3
    let expected = product(&[
        (&[q(-1, 1), q(0, 1), q(1, 1)], 2),
        (&[q(-1, 1), q(1, 1)], 2),
        (&[q(1, 1), q(2, 3), q(1, 1)], 3),
    ]);
    let ours = char_u(&families::complete(4));
    assert_eq!(ours, RatPolynomial::new(expected));
    assert_eq!(ours, RatPolynomial::new(faddeev_leverrier(&grover_matrix(4, families::complete(4).edges()))));
}

#[test]
fn k4_edge_form() {
    // (1-t^2)^2 (1-t)(1-2t)(1+t+2t^2)^3
    let expected = product(&[
        (&[q(1, 1), q(0, 1), q(-1, 1)], 2),
        (&[q(1, 1), q(-1, 1)], 1),
        (&[q(1, 1), q(-2, 1)], 1),
        (&[q(1, 1), q(1, 1), q(2, 1)], 3),
    ]);
    let g = families::complete(4);
    assert_eq!(ihara_reciprocal_edge_form(&g.arcs()).unwrap(), RatPolynomial::new(expected));
}

#[test]
fn k4_triangle_trace() {
    let g = families::complete(4);
    let traces = power_traces(&edge_matrices(&g.arcs()).edge_matrix(), 4).unwrap();
    assert_eq!(traces[1], q(0, 1));
    assert_eq!(traces[2], q(0, 1));
    assert_eq!(traces[3], q(24, 1));
    assert_eq!(traces[4], q(24, 1));
}

#[test]
fn path_needs_division() {
    let g = families::path(3);
    assert_eq!(char_u(&g), RatPolynomial::from_i64(&[-1, 0, 0, 0, 1]));
    assert_eq!(ihara_reciprocal_edge_form(&g.arcs()).unwrap(), RatPolynomial::one());
    let bass = ihara_reciprocal_bass_form(&g).unwrap();
    assert_eq!(bass.as_polynomial(), Some(&RatPolynomial::one()));
}

#[test]
fn petersen_u_plus_spectrum() {
    let g = families::petersen();
    let u = transition_matrix(&g, &g.arcs()).unwrap().into_matrix();
    let spectrum = roots(&charpoly_exact(&positive_support(&u)).unwrap()).unwrap();
    let c = Complex64::new;
    let s7 = 7f64.sqrt() / 2.0;
    let mut expected = vec![c(2.0, 0.0), c(1.0, 0.0)];
    for _ in 0..5 {
        expected.extend([c(0.5, s7), c(0.5, -s7), c(1.0, 0.0), c(-1.0, 0.0)]);
    }
    for _ in 0..4 {
        expected.extend([c(-1.0, 1.0), c(-1.0, -1.0)]);
    }
    let cmp = compare(&spectrum, &SpectrumMultiset::new(expected).with_tolerance(1e-8));
    assert!(cmp.equal, "distance {}", cmp.max_pair_distance);
}

#[test]
fn relabelling_is_invisible() {
    let g = families::petersen();
    let perm = [3, 7, 0, 9, 1, 4, 8, 2, 6, 5];
    let h = g.relabel(&perm).unwrap();
    assert!(srg_distinguish(&g, &h).unwrap().is_indistinct());
    assert_eq!(char_u(&g), char_u(&h));
}

#[test]
fn distinguish_is_symmetric() {
    let (a, b) = (families::complete(4), families::cycle(4));
    let ab = srg_distinguish(&a, &b).unwrap();
    let ba = srg_distinguish(&b, &a).unwrap();
    assert_eq!(ab.level, ba.level);
    assert_eq!(ab.details[0].first, ba.details[0].second);
}
