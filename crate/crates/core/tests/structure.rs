use num_bigint::BigInt;
use octaspec_core::graph_gen::*;

#[test]
fn counts_up_to_fifty() {
    for n in 1..=50 {
        let q = build_moebius_octagonal(n).unwrap();
        assert_eq!(q.vertex_count(), 6 * n);
        assert_eq!(q.edge_count(), 7 * n);
        assert_eq!(q.degrees().iter().filter(|&&d| d == 3).count(), 2 * n);
        assert_eq!(q.degrees().iter().filter(|&&d| d == 2).count(), 4 * n);
        assert_eq!(q.degrees().iter().sum::<usize>(), 2 * q.edge_count());
        assert_eq!(q.degree_product(), BigInt::from(2).pow(4 * n as u32) * BigInt::from(3).pow(2 * n as u32));
        assert!(q.is_connected());

        let l = build_linear_octagonal(n).unwrap();
        assert_eq!(l.vertex_count(), 6 * n + 2);
        assert_eq!(l.edge_count(), 7 * n + 1);
        assert_eq!(l.degrees().iter().sum::<usize>(), 2 * l.edge_count());
        assert!(l.is_connected());
    }
}

#[test]
fn moebius_chain_is_biconnected() {
    for n in 1..=12 {
        assert!(build_moebius_octagonal(n).unwrap().is_biconnected());
    }
}

#[test]
fn bipartite_iff_odd() {
    for n in 1..=20 {
        let q = build_moebius_octagonal(n).unwrap();
        let cert = is_bipartite(&q);
        assert!(cert.verify(&q), "certificate for Q_{n}");
        assert_eq!(cert.is_bipartite(), n % 2 == 1, "Q_{n}");
        if let Bipartiteness::OddCycle(c) = &cert {
            assert!(c.len() % 2 == 1);
        }
    }
}

#[test]
fn mirror_is_fixed_point_free_involution() {
    for n in 1..=20 {
        let q = build_moebius_octagonal(n).unwrap();
        let m = mirror_automorphism(&q).unwrap();
        assert!(m.is_involution());
        assert!(m.fixed_points().is_empty());
        assert!(m.is_automorphism_of(&q));
    }
}
