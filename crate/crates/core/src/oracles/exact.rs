//! Exact elimination over ℚ: Bareiss determinants and leading minors on
//! integer-scaled rows, plus rank and inverse by rational Gauss–Jordan.

use crate::exact_algebra::{BigInt, BigRational};
use crate::laplacian::RatMatrix;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Rows scaled to integers: `rows[i] = scale[i] · m[i]`.
struct IntegerRows {
    rows: Vec<Vec<BigInt>>,
    scales: Vec<BigInt>,
}

fn integer_rows(m: &RatMatrix) -> IntegerRows {
    let n = m.order();
    let mut rows = Vec::with_capacity(n);
    let mut scales = Vec::with_capacity(n);
    for i in 0..n {
        let scale = (0..n).fold(BigInt::one(), |acc, j| acc.lcm(m.get(i, j).denom()));
        rows.push(
            (0..n)
                .map(|j| {
                    let x = m.get(i, j);
                    x.numer() * (&scale / x.denom())
                })
                .collect(),
        );
        scales.push(scale);
    }
    IntegerRows { rows, scales }
}

/// One Bareiss step eliminating below pivot `k`.
fn bareiss_step(a: &mut [Vec<BigInt>], k: usize, prev: &BigInt) {
    let n = a.len();
    for i in k + 1..n {
        for j in k + 1..n {
            let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
            a[i][j] = v / prev;
        }
        a[i][k] = BigInt::zero();
    }
}

/// Fraction-free determinant of an integer matrix.
pub fn det_integer(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        bareiss_step(&mut a, k, &prev);
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

pub fn det_exact(m: &RatMatrix) -> BigRational {
    let IntegerRows { rows, scales } = integer_rows(m);
    let scale: BigInt = scales.iter().product();
    BigRational::new(det_integer(rows), scale)
}

/// All leading principal minors `det M[0..k, 0..k]`, `k = 1..=order`, in one
/// fraction-free pass (per-minor fallback after a vanishing pivot).
pub fn leading_principal_minors_exact(m: &RatMatrix) -> Vec<BigRational> {
    let n = m.order();
    let IntegerRows { mut rows, scales } = integer_rows(m);
    let mut out = Vec::with_capacity(n);
    let mut prev = BigInt::one();
    let mut prefix = BigInt::one();
    for k in 0..n {
        prefix *= &scales[k];
        let pivot = rows[k][k].clone();
        out.push(BigRational::new(pivot.clone(), prefix.clone()));
        if pivot.is_zero() {
            out.extend((k + 2..=n).map(|order| det_exact(&m.leading(order))));
            return out;
        }
        bareiss_step(&mut rows, k, &prev);
        prev = pivot;
    }
    out
}

pub fn rank_exact(m: &RatMatrix) -> usize {
    let n = m.order();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..n {
            if !a[r][col].is_zero() {
                let f = &a[r][col] / &a[rank][col];
                let (upper, lower) = a.split_at_mut(r);
                for (x, y) in lower[0][col..].iter_mut().zip(&upper[rank][col..]) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Exact inverse by Gauss–Jordan; `None` when singular.
pub fn inverse_exact(m: &RatMatrix) -> Option<RatMatrix> {
    let n = m.order();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        inv.swap(col, p);
        let pivot = a[col][col].clone();
        for c in 0..n {
            a[col][c] /= &pivot;
            inv[col][c] /= &pivot;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..n {
                    let da = &f * &a[col][c];
                    a[r][c] -= da;
                    let di = &f * &inv[col][c];
                    inv[r][c] -= di;
                }
            }
        }
    }
    Some(RatMatrix::from_fn(n, |i, j| inv[i][j].clone()))
}

/// Determinant of a small matrix by cofactor expansion (test oracle only).
#[cfg(test)]
pub(crate) fn det_cofactor(m: &RatMatrix) -> BigRational {
    let n = m.order();
    if n == 1 {
        return m.get(0, 0).clone();
    }
    (0..n)
        .map(|j| {
            let minor = RatMatrix::from_fn(n - 1, |r, c| {
                m.get(r + 1, if c < j { c } else { c + 1 }).clone()
            });
            let term = m.get(0, j) * det_cofactor(&minor);
            if j % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::{int, rat};
    use proptest::prelude::*;

    fn small_matrix(n: usize) -> impl Strategy<Value = RatMatrix> {
        proptest::collection::vec((-6i64..=6, 1i64..=5), n * n).prop_map(move |v| {
            RatMatrix::from_fn(n, |i, j| {
                let (p, q) = v[i * n + j];
                rat(p, q)
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn bareiss_matches_cofactor(m in (1usize..=5).prop_flat_map(small_matrix)) {
            prop_assert_eq!(det_exact(&m), det_cofactor(&m));
            let minors = leading_principal_minors_exact(&m);
            for (k, d) in minors.iter().enumerate() {
                prop_assert_eq!(d, &det_cofactor(&m.leading(k + 1)));
            }
        }

        #[test]
        fn inverse_round_trip(m in (1usize..=4).prop_flat_map(small_matrix)) {
            match inverse_exact(&m) {
                None => prop_assert!(det_exact(&m).is_zero()),
                Some(inv) => {
                    let n = m.order();
                    for i in 0..n {
                        for j in 0..n {
                            let v: BigRational = (0..n).map(|k| m.get(i, k) * inv.get(k, j)).sum();
                            prop_assert_eq!(v, if i == j { int(1) } else { int(0) });
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn identity_minors() {
        assert_eq!(leading_principal_minors_exact(&RatMatrix::identity(4)), vec![int(1); 4]);
    }

    #[test]
    fn vanishing_pivot_fallback() {
        // [[0,1],[1,0]]: minors 0, −1
        let m = RatMatrix::from_fn(2, |i, j| if i == j { int(0) } else { int(1) });
        assert_eq!(leading_principal_minors_exact(&m), vec![int(0), int(-1)]);
        assert_eq!(det_exact(&m), int(-1));
    }

    #[test]
    fn rank_of_singular_matrix() {
        let m = RatMatrix::from_fn(3, |i, j| int((i + 1) as i64 * (j + 1) as i64));
        assert_eq!(rank_exact(&m), 1);
        assert_eq!(rank_exact(&RatMatrix::identity(3)), 3);
        assert!(inverse_exact(&m).is_none());
    }
}
