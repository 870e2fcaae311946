use num_traits::{Signed, Zero};
use octaspec_core::closed_forms;
use octaspec_core::exact_algebra::{int, rat, to_f64, BigInt, BigRational};
use octaspec_core::graph_gen::{build_linear_octagonal, build_moebius_octagonal, SimpleGraph};
use octaspec_core::laplacian::{block_decompose, phase_tridiagonal_scaled, Family};
use octaspec_core::oracles::*;

fn k2() -> SimpleGraph {
    SimpleGraph::from_edges(2, &[(0, 1)]).unwrap()
}

#[test]
fn unit_resistor_and_octagon() {
    let r = resistance_matrix_exact(&k2()).unwrap();
    assert_eq!(r.get(0, 1), &int(1));
    assert_eq!(kf_oracle(&k2()).unwrap(), int(1));
    assert_eq!(dk_oracle(&k2()).unwrap(), int(1));
    assert_eq!(kemeny_oracle(&k2()).unwrap(), rat(1, 2));

    let octagon = build_linear_octagonal(1).unwrap();
    let r = resistance_matrix_exact(&octagon).unwrap();
    // 8-cycle u1 u2 u3 u4 v4 v3 v2 v1: u1 (0) is opposite v4 (7)
    assert_eq!(r.get(0, 7), &int(2));
    assert_eq!(r.get(0, 1), &rat(7, 8));
}

#[test]
fn q1_invariants_by_both_routes() {
    let q1 = build_moebius_octagonal(1).unwrap();
    assert_eq!(dk_resistance(&q1).unwrap(), rat(1097, 15));
    assert_eq!(kemeny_oracle(&q1).unwrap(), rat(1097, 210));
    assert_eq!(dk_oracle(&q1).unwrap(), rat(1097, 15));
}

#[test]
fn q2_resistance_route_settles_dk() {
    let q2 = build_moebius_octagonal(2).unwrap();
    assert_eq!(dk_oracle(&q2).unwrap(), rat(1346, 3));
}

#[test]
fn route_independence() {
    for n in 1..=8 {
        let q = build_moebius_octagonal(n).unwrap();
        let by_r = dk_resistance(&q).unwrap();
        let by_c = kemeny_oracle(&q).unwrap() * int(14 * n as i64);
        assert_eq!(by_r, by_c, "Q_{n}");
    }
    for n in 1..=4 {
        let l = build_linear_octagonal(n).unwrap();
        let by_r = dk_resistance(&l).unwrap();
        let by_c = kemeny_oracle(&l).unwrap() * int(2 * l.edge_count() as i64);
        assert_eq!(by_r, by_c, "L_{n}");
    }
}

#[test]
fn grounding_does_not_matter() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x0c7a);
    for n in 1..=3 {
        let q = build_moebius_octagonal(n).unwrap();
        let base = resistance_matrix_exact(&q).unwrap();
        for _ in 0..3 {
            let ground = rng.gen_range(0..q.vertex_count());
            assert_eq!(resistance_matrix_grounded(&q, ground).unwrap(), base, "ground {ground}");
        }
    }
}

#[test]
fn resistance_sanity() {
    let graphs: Vec<SimpleGraph> = (1..=3)
        .map(|n| build_moebius_octagonal(n).unwrap().graph().clone())
        .chain((1..=2).map(|n| build_linear_octagonal(n).unwrap().graph().clone()))
        .chain([k2()])
        .collect();
    for g in &graphs {
        let r = resistance_matrix_exact(g).unwrap();
        let nv = g.vertex_count();
        for i in 0..nv {
            assert!(r.get(i, i).is_zero());
            let hops = g.bfs_distances(i);
            for j in 0..nv {
                assert_eq!(r.get(i, j), r.get(j, i));
                if i != j {
                    assert!(r.get(i, j).is_positive());
                    assert!(r.get(i, j) <= &int(hops[j].unwrap() as i64));
                }
                for k in 0..nv {
                    assert!(r.get(i, k) <= &(r.get(i, j) + r.get(j, k)));
                }
            }
        }
    }
}

#[test]
fn disconnected_graph_rejected() {
    let g = SimpleGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
    assert_eq!(resistance_matrix_exact(&g).unwrap_err(), octaspec_core::Error::Disconnected);
    assert!(kemeny_oracle(&g).is_err());
}

#[test]
fn matrix_tree_counts() {
    let count = |n| spanning_trees_oracle(&build_moebius_octagonal(n).unwrap()).unwrap();
    assert_eq!(count(1), BigInt::from(15));
    assert_eq!(count(4), BigInt::from(23064));
    assert_eq!(count(7), BigInt::from(19686345));
    assert_eq!(spanning_trees_oracle(&build_linear_octagonal(1).unwrap()).unwrap(), BigInt::from(8));
    for n in 1..=12 {
        assert_eq!(count(n), closed_forms::spanning_trees(n as u64).unwrap(), "Q_{n}");
    }
}

#[test]
fn block_charpolys_n1() {
    let b = block_decompose(1).unwrap();
    let pa = charpoly_exact(&b.a_image());
    assert_eq!(pa.coeffs, vec![int(0), rat(7, 4), rat(-8, 3), int(1)]);
    let ps = charpoly_exact(&b.s_image());
    assert_eq!(ps.coeffs, vec![rat(-5, 6), rat(37, 12), rat(-10, 3), int(1)]);
    assert_eq!(recip_sum_from_charpoly(&pa).unwrap(), rat(32, 21));
    assert_eq!(recip_sum_from_charpoly(&ps).unwrap(), rat(37, 10));
}

#[test]
fn walk_laplacian_has_simple_zero_root() {
    use octaspec_core::laplacian::rational_walk_laplacian;
    for n in 1..=6 {
        let p = charpoly_exact(&rational_walk_laplacian(&build_moebius_octagonal(n).unwrap()).unwrap());
        assert!(p.coeff(0).is_zero());
        assert!(!p.coeff(1).is_zero());
    }
}

#[test]
fn leading_minor_fixtures() {
    let a = phase_tridiagonal_scaled(Family::A, 0, 6).unwrap().similarity_image();
    assert_eq!(
        leading_principal_minors_exact(&a),
        vec![rat(2, 3), rat(1, 2), rat(1, 3), rat(5, 36), rat(1, 12), rat(7, 144)]
    );
    let s = phase_tridiagonal_scaled(Family::S, 0, 5).unwrap().similarity_image();
    assert_eq!(
        leading_principal_minors_exact(&s),
        vec![rat(4, 3), rat(7, 6), rat(5, 6), rat(11, 12), rat(7, 9)]
    );
}

#[test]
fn numeric_spectrum_agrees_with_exact_kemeny() {
    for n in 1..=10 {
        let q = build_moebius_octagonal(n).unwrap();
        let numeric = kemeny_numeric(&q).unwrap();
        let exact: BigRational = closed_forms::kemeny(n as u64).unwrap();
        let exact = to_f64(&exact);
        assert!(((numeric - exact) / exact).abs() < 1e-7, "n={n}: {numeric} vs {exact}");
    }
}
