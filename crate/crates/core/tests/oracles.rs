mod common;

use common::*;
use num_traits::{One, Zero};
use proptest::prelude::*;
use qwzeta::algebra::{charpoly_exact, polymat_det, PolyMatrix, RatPolynomial, RationalMatrix};
use qwzeta::graph::{encode_graph6, families, parse_graph6, Graph};
use qwzeta::walk::transition_matrix;

fn small_matrix(size: usize) -> impl Strategy<Value = RationalMatrix> {
    proptest::collection::vec((-6i64..=6, 1i64..=3), size * size).prop_map(move |v| {
        RationalMatrix::from_fn(size, size, |i, j| {
            let (p, d) = v[i * size + j];
            q(p, d)
        })
    })
}

fn connected_graph() -> impl Strategy<Value = Graph> {
    (2usize..=7)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)))
        .prop_map(|(n, bits)| {
            // A path keeps it connected; the bits add chords.
            let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if v > u + 1 && bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn det_is_multiplicative(a in small_matrix(5), b in small_matrix(5)) {
        let ab = a.matmul(&b).unwrap();
        prop_assert_eq!(ab.det_exact().unwrap(), a.det_exact().unwrap() * b.det_exact().unwrap());
    }

    #[test]
    fn det_matches_cofactor_expansion(a in small_matrix(5)) {
        prop_assert_eq!(a.det_exact().unwrap(), laplace_det(&to_mat(&a)));
    }

    #[test]
    fn charpoly_matches_faddeev_leverrier(a in small_matrix(5)) {
        let p = charpoly_exact(&a).unwrap();
        prop_assert_eq!(p, RatPolynomial::new(faddeev_leverrier(&to_mat(&a))));
    }

    #[test]
    fn charpoly_constant_term(a in small_matrix(4)) {
        let p = charpoly_exact(&a).unwrap();
        prop_assert_eq!(p.coeff(0), a.det_exact().unwrap());
    }

    #[test]
    fn polymat_det_of_constant_matrix(a in small_matrix(4)) {
        let zero = RationalMatrix::zeros(4, 4);
        let p = polymat_det(&PolyMatrix::affine(&a, &zero).unwrap(), 0).unwrap();
        prop_assert_eq!(p, RatPolynomial::constant(a.det_exact().unwrap()));
    }

    #[test]
    fn graph6_round_trip(g in connected_graph()) {
        let text = encode_graph6(&g).unwrap();
        let back = parse_graph6(&text).unwrap();
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        let mut a: Vec<_> = g.edges().to_vec();
        let mut b: Vec<_> = back.edges().to_vec();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn transition_matrix_matches_definition(g in connected_graph()) {
        let u = transition_matrix(&g, &g.arcs()).unwrap();
        prop_assert_eq!(to_mat(u.matrix()), grover_matrix(g.vertex_count(), g.edges()));
    }

    #[test]
    fn charpoly_of_u_matches_faddeev_leverrier(g in connected_graph()) {
        let u = grover_matrix(g.vertex_count(), g.edges());
        let ours = charpoly_exact(&transition_matrix(&g, &g.arcs()).unwrap().into_matrix()).unwrap();
        prop_assert_eq!(ours, RatPolynomial::new(faddeev_leverrier(&u)));
    }
}

#[test]
fn faddeev_leverrier_agrees_on_petersen() {
    let g = families::petersen();
    let u = grover_matrix(10, g.edges());
    let ours = charpoly_exact(&transition_matrix(&g, &g.arcs()).unwrap().into_matrix()).unwrap();
    assert_eq!(ours, RatPolynomial::new(faddeev_leverrier(&u)));
    assert!(!ours.coeff(0).is_zero());
}

#[test]
fn petersen_u3_plus_matches_faddeev_leverrier() {
    let g = families::petersen();
    let u = grover_matrix(10, g.edges());
    let cube = mul(&mul(&u, &u), &u);
    let support: Mat = cube
        .iter()
        .map(|row| row.iter().map(|v| if *v > Q::zero() { Q::one() } else { Q::zero() }).collect())
        .collect();
    let ours = charpoly_exact(&qwzeta::experiments::Operator::U3Plus.matrix(&g).unwrap()).unwrap();
    assert_eq!(ours, RatPolynomial::new(faddeev_leverrier(&support)));
    assert_eq!(ours.degree(), Some(30));
    assert!(ours.is_integral());
}
