use crate::error::{Error, Result};
use crate::exact_algebra::BigRational;
use crate::laplacian::RatMatrix;
use num_traits::{One, Zero};

/// Monic characteristic polynomial `det(zI − M)`, coefficients in ascending
/// order: `coeffs[k]` multiplies `z^k`, and `coeffs[order] = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    pub coeffs: Vec<BigRational>,
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    /// Value at a rational point.
    pub fn eval(&self, z: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * z + c)
    }
}

fn poly_mul_linear(p: &[BigRational], root: &BigRational) -> Vec<BigRational> {
    // (z − root) · p
    let mut out = vec![BigRational::zero(); p.len() + 1];
    for (k, c) in p.iter().enumerate() {
        out[k + 1] += c;
        out[k] -= root * c;
    }
    out
}

/// Exact characteristic polynomial: similarity reduction to upper Hessenberg
/// form over ℚ, then the Hessenberg determinant recurrence.
pub fn charpoly_exact(m: &RatMatrix) -> CharPoly {
    let n = m.order();
    let mut h: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
        .collect();

    for col in 0..n.saturating_sub(2) {
        let Some(p) = (col + 1..n).find(|&r| !h[r][col].is_zero()) else {
            continue;
        };
        if p != col + 1 {
            h.swap(p, col + 1);
            for row in h.iter_mut() {
                row.swap(p, col + 1);
            }
        }
        let pivot = h[col + 1][col].clone();
        for r in col + 2..n {
            if h[r][col].is_zero() {
                continue;
            }
            let f = &h[r][col] / &pivot;
            // row_r -= f · row_{col+1}
            let (upper, lower) = h.split_at_mut(r);
            for (x, y) in lower[0].iter_mut().zip(&upper[col + 1]) {
                *x -= &f * y;
            }
            // col_{col+1} += f · col_r keeps the similarity
            for row in h.iter_mut() {
                let d = &f * &row[r];
                row[col + 1] += d;
            }
        }
    }

    // p_k = (z − h_kk) p_{k−1} − Σ_{i<k} h_{ik} (Π_{j=i+1..k} h_{j,j−1}) p_{i−1}
    let mut polys: Vec<Vec<BigRational>> = vec![vec![BigRational::one()]];
    for k in 0..n {
        let mut next = poly_mul_linear(&polys[k], &h[k][k]);
        let mut sub = BigRational::one();
        for i in (0..k).rev() {
            sub *= &h[i + 1][i];
            if sub.is_zero() {
                break;
            }
            let coef = &h[i][k] * &sub;
            if coef.is_zero() {
                continue;
            }
            for (d, c) in polys[i].iter().enumerate() {
                next[d] -= &coef * c;
            }
        }
        polys.push(next);
    }
    CharPoly {
        coeffs: polys.pop().unwrap(),
    }
}

/// `Σ 1/λ` over the nonzero roots, read off the two lowest nonvanishing
/// coefficients. At most one zero root is allowed.
pub fn recip_sum_from_charpoly(p: &CharPoly) -> Result<BigRational> {
    let c = &p.coeffs;
    if !c[0].is_zero() {
        return Ok(-&c[1] / &c[0]);
    }
    if c.len() < 3 || c[1].is_zero() {
        return Err(Error::InvalidInput(
            "characteristic polynomial has a repeated zero root".into(),
        ));
    }
    Ok(-&c[2] / &c[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::{int, rat};
    use crate::oracles::exact::det_cofactor;
    use proptest::prelude::*;

    fn poly(cs: &[BigRational]) -> CharPoly {
        CharPoly { coeffs: cs.to_vec() }
    }

    #[test]
    fn vieta_ratios() {
        let a = poly(&[int(0), rat(7, 4), rat(-8, 3), int(1)]);
        assert_eq!(recip_sum_from_charpoly(&a).unwrap(), rat(32, 21));
        let s = poly(&[rat(-5, 6), rat(37, 12), rat(-10, 3), int(1)]);
        assert_eq!(recip_sum_from_charpoly(&s).unwrap(), rat(37, 10));
        let roots = poly(&[int(0), int(2), int(-3), int(1)]);
        assert_eq!(recip_sum_from_charpoly(&roots).unwrap(), rat(3, 2));
        let double_zero = poly(&[int(0), int(0), int(-1), int(1)]);
        assert!(recip_sum_from_charpoly(&double_zero).is_err());
    }

    #[test]
    fn companion_like_matrix() {
        // [[0,0,−c0],[1,0,−c1],[0,1,−c2]] has charpoly z³ + c2 z² + c1 z + c0
        let m = RatMatrix::from_fn(3, |i, j| match (i, j) {
            (1, 0) | (2, 1) => int(1),
            (0, 2) => int(-5),
            (1, 2) => rat(-1, 2),
            (2, 2) => int(3),
            _ => int(0),
        });
        let p = charpoly_exact(&m);
        assert_eq!(p.coeffs, vec![int(5), rat(1, 2), int(-3), int(1)]);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn charpoly_matches_determinant_at_points(
            n in 1usize..=4,
            entries in proptest::collection::vec((-5i64..=5, 1i64..=4), 16),
            z in -4i64..=4,
        ) {
            let m = RatMatrix::from_fn(n, |i, j| rat(entries[i * 4 + j].0, entries[i * 4 + j].1));
            let p = charpoly_exact(&m);
            prop_assert_eq!(p.degree(), n);
            prop_assert_eq!(p.coeff(n), &int(1));
            let shifted = RatMatrix::from_fn(n, |i, j| {
                let d = if i == j { int(z) } else { int(0) };
                d - m.get(i, j)
            });
            prop_assert_eq!(p.eval(&int(z)), det_cofactor(&shifted));
        }
    }
}
