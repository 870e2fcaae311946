use octaspec_core::closed_forms::*;
use octaspec_core::exact_algebra::{int, BigRational};
use octaspec_core::laplacian::{block_decompose, phase_tridiagonal_scaled, Family};
use octaspec_core::oracles::{charpoly_exact, det_exact, leading_principal_minors_exact, recip_sum_from_charpoly};

const N_MAX: u64 = 8;

fn signed(k: u64, x: &BigRational) -> BigRational {
    if k.is_multiple_of(2) {
        x.clone()
    } else {
        -x.clone()
    }
}

#[test]
fn w_minors_are_leading_minors() {
    for n in 1..=N_MAX {
        let m = 3 * n as usize;
        for phase in 0..=2u8 {
            let image = phase_tridiagonal_scaled(Family::A, phase, m).unwrap().similarity_image();
            let minors = leading_principal_minors_exact(&image);
            for (j, d) in minors.iter().enumerate() {
                assert_eq!(&w_minor(phase, j as i64 + 1).unwrap(), d, "n={n} phase={phase} j={}", j + 1);
            }
        }
    }
}

#[test]
fn q_minors_are_leading_minors() {
    for n in 1..=N_MAX {
        let m = 3 * n as usize;
        for phase in 0..=1u8 {
            let image = phase_tridiagonal_scaled(Family::S, phase, m).unwrap().similarity_image();
            let minors = leading_principal_minors_exact(&image);
            for (j, d) in minors.iter().enumerate() {
                assert_eq!(&q_minor(phase, j as i64 + 1).unwrap(), d, "n={n} phase={phase} j={}", j + 1);
            }
        }
    }
}

#[test]
fn vertex_deleted_minors() {
    for n in 1..=N_MAX {
        let b = block_decompose(n as usize).unwrap();
        let (a, s) = (b.a_image(), b.s_image());
        let mut sum_a = int(0);
        let mut sum_s = int(0);
        for x in 1..=3 * n {
            let drop = [(x - 1) as usize];
            let la = minor_det_la(x, n).unwrap();
            let ls = minor_det_ls(x, n).unwrap();
            assert_eq!(la, det_exact(&a.delete(&drop)), "A n={n} x={x}");
            assert_eq!(ls, det_exact(&s.delete(&drop)), "S n={n} x={x}");
            sum_a += la;
            sum_s += ls;
        }
        assert_eq!(sum_a, coeff_d_3n_minus_1(n).unwrap(), "A deleted-minor sum, n={n}");
        assert_eq!(sum_s, coeff_t_3n_minus_1(n).unwrap(), "S deleted-minor sum, n={n}");
    }
}

#[test]
fn characteristic_coefficients() {
    for n in 1..=N_MAX {
        let b = block_decompose(n as usize).unwrap();
        let pa = charpoly_exact(&b.a_image());
        let ps = charpoly_exact(&b.s_image());
        let m = 3 * n;
        // z^1 and z^2 coefficients of det(zI − 𝓛_A) are (−1)^{m−1} d_{m−1}, (−1)^{m−2} d_{m−2}
        assert_eq!(signed(m - 1, pa.coeff(1)), coeff_d_3n_minus_1(n).unwrap(), "n={n}");
        assert_eq!(signed(m - 2, pa.coeff(2)), coeff_d_3n_minus_2(n).unwrap(), "n={n}");
        assert_eq!(signed(m - 1, ps.coeff(1)), coeff_t_3n_minus_1(n).unwrap(), "n={n}");
        assert_eq!(signed(m, ps.coeff(0)), det_ls(n).unwrap(), "n={n}");
        assert_eq!(det_exact(&b.s_image()), det_ls(n).unwrap());
        assert_eq!(recip_sum_from_charpoly(&pa).unwrap(), sum_recip_alpha(n).unwrap());
        assert_eq!(recip_sum_from_charpoly(&ps).unwrap(), xi(n).unwrap());
    }
}

#[test]
fn alpha_display_matches_vieta_ratio() {
    for n in 1..=N_MAX {
        let n2 = (n * n) as i64;
        assert_eq!(
            sum_recip_alpha(n).unwrap(),
            BigRational::new((147 * n2 - 19).into(), 84.into())
        );
    }
}
