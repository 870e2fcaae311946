//! Exact closed-form spectral invariants of `Q_n`.
//!
//! All constants of the formulas live in [`ClosedForms`]; its `Default` holds
//! the published values (with the two corrections noted on the fields). The
//! free functions evaluate with those defaults. Overriding a single constant
//! is how the verification suite is mutation-tested.

use crate::error::{Error, Result};
use crate::exact_algebra::{
    int, lucas_pair, rat, rat_pow, rational_array, rational_str, to_significant, BigInt,
    BigRational, QuadExt,
};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize, Serializer};

/// Coefficients of every closed form.
///
/// `x₊ = growth_root`, `x₋` its conjugate, `δ = decay`. Leading minors of the
/// `A` windows have the shape `w_j = scale[j mod 3] · (1 + j) · δ^⌊j/3⌋`; those
/// of the `S` windows are `c·x₊^⌊j/3⌋ + c̄·x₋^⌊j/3⌋` with `c` taken per residue.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ClosedForms {
    /// `x₊ = 1/3 + (1/12)√15 = (4 + √15)/12`, as `[rational, √15 part]`.
    #[serde(with = "rational_array")]
    pub growth_root: [BigRational; 2],
    #[serde(with = "rational_str")]
    pub decay: BigRational,
    /// Coupling `e²` across a degree-3/degree-2 bond (`1/6`).
    #[serde(with = "rational_str")]
    pub coupling: BigRational,
    /// Phase-0 `A` minors by `j mod 3`. The `j ≡ 2` entry is `1/6`, from the
    /// recurrence solution `C_k = (1+k)/2 · δ^k`; the displayed branch would be `1`.
    #[serde(with = "rational_array")]
    pub phase0_scale: [BigRational; 3],
    #[serde(with = "rational_array")]
    pub phase1_scale: [BigRational; 3],
    /// Phase-0 `S` minors by `j mod 3`: rational parts, then √15 parts.
    #[serde(with = "rational_array")]
    pub s_phase0_rational: [BigRational; 3],
    #[serde(with = "rational_array")]
    pub s_phase0_sqrt15: [BigRational; 3],
    #[serde(with = "rational_array")]
    pub s_phase1_rational: [BigRational; 3],
    #[serde(with = "rational_array")]
    pub s_phase1_sqrt15: [BigRational; 3],
    #[serde(with = "rational_str")]
    pub det_ls_offset: BigRational,
    /// Vertex-deleted `S` minors by `x mod 3`, times `√15 (x₊ⁿ − x₋ⁿ)`.
    #[serde(with = "rational_array")]
    pub s_deleted_minor: [BigRational; 3],
    /// `(−1)^{3n−1} t_{3n−1} = c · n · √15 (x₊ⁿ − x₋ⁿ)`.
    #[serde(with = "rational_str")]
    pub s_linear_coefficient: BigRational,
    /// `(−1)^{3n−1} d_{3n−1} = c · n² δⁿ`.
    #[serde(with = "rational_str")]
    pub a_linear_coefficient: BigRational,
    /// `(−1)^{3n−2} d_{3n−2} = (c₄ n⁴ − c₂ n²)/den · δⁿ`. The `δⁿ` factor is
    /// required for the ratio with `d_{3n−1}` to reproduce `Σ 1/α`.
    #[serde(with = "rational_str")]
    pub a_quadratic_quartic: BigRational,
    #[serde(with = "rational_str")]
    pub a_quadratic_square: BigRational,
    #[serde(with = "rational_str")]
    pub a_quadratic_denominator: BigRational,
    /// `Σ 1/α = (c₂ n² − c₀)/den`.
    #[serde(with = "rational_str")]
    pub alpha_square: BigRational,
    #[serde(with = "rational_str")]
    pub alpha_constant: BigRational,
    #[serde(with = "rational_str")]
    pub alpha_denominator: BigRational,
    /// `τ = c · n · (t_n + offset)`.
    #[serde(with = "rational_str")]
    pub tau_factor: BigRational,
    #[serde(with = "rational_str")]
    pub tau_offset: BigRational,
}

impl Default for ClosedForms {
    fn default() -> Self {
        Self {
            growth_root: [rat(1, 3), rat(1, 12)],
            decay: rat(1, 12),
            coupling: rat(1, 6),
            phase0_scale: [int(1), rat(1, 3), rat(1, 6)],
            phase1_scale: [int(1), rat(1, 2), rat(1, 4)],
            s_phase0_rational: [rat(1, 2), rat(2, 3), rat(7, 12)],
            s_phase0_sqrt15: [rat(1, 5), rat(17, 90), rat(7, 45)],
            s_phase1_rational: [rat(1, 2), rat(1, 2), rat(3, 8)],
            s_phase1_sqrt15: [rat(1, 5), rat(3, 20), rat(1, 10)],
            det_ls_offset: int(2),
            s_deleted_minor: [rat(7, 15), rat(3, 10), rat(7, 15)],
            s_linear_coefficient: rat(37, 30),
            a_linear_coefficient: int(21),
            a_quadratic_quartic: int(147),
            a_quadratic_square: int(19),
            a_quadratic_denominator: int(4),
            alpha_square: int(147),
            alpha_constant: int(19),
            alpha_denominator: int(84),
            tau_factor: rat(3, 2),
            tau_offset: int(2),
        }
    }
}

/// Minor index with the conventions `w_{−1} = 0`, `w_0 = 1`.
fn trivial_minor(j: i64) -> Option<BigRational> {
    match j {
        j if j < 0 => Some(BigRational::zero()),
        0 => Some(BigRational::one()),
        _ => None,
    }
}

fn check_n(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    Ok(())
}

fn big(v: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl ClosedForms {
    fn x_plus(&self) -> QuadExt {
        QuadExt::new(self.growth_root[0].clone(), self.growth_root[1].clone())
    }

    fn decay_pow(&self, k: u64) -> BigRational {
        rat_pow(&self.decay, k as u32)
    }

    /// `√15 (x₊ⁿ − x₋ⁿ)`, rational whenever `x₊, x₋` are conjugate.
    fn sqrt15_difference(&self, n: u64) -> Result<BigRational> {
        let x = self.x_plus();
        let diff = &x.pow(n) - &x.conj().pow(n);
        (&diff * &QuadExt::new(int(0), int(1)))
            .to_rational()
            .ok_or_else(|| Error::Consistency("√15(x₊ⁿ − x₋ⁿ) is irrational".into()))
    }

    /// Leading minor of order `j` of the phase-`phase` `A` window
    /// (`j ≥ −1`; `w_{−1} = 0`, `w_0 = 1`).
    pub fn w_minor(&self, phase: u8, j: i64) -> Result<BigRational> {
        if phase > 2 {
            return Err(Error::Usage(format!("w-minor phase {phase} out of range")));
        }
        if let Some(v) = trivial_minor(j) {
            return Ok(v);
        }
        if phase == 2 {
            // first row/column is a degree-2 site followed by the phase-0 window
            return Ok(self.w_minor(0, j - 1)? - &self.coupling * self.w_minor(1, j - 2)?);
        }
        let scale = if phase == 0 {
            &self.phase0_scale
        } else {
            &self.phase1_scale
        };
        let ju = j as u64;
        Ok(&scale[(ju % 3) as usize] * big(1 + ju) * self.decay_pow(ju / 3))
    }

    /// Leading minor of order `j` of the phase-`phase` `S` window.
    pub fn q_minor(&self, phase: u8, j: i64) -> Result<BigRational> {
        let (re, im) = match phase {
            0 => (&self.s_phase0_rational, &self.s_phase0_sqrt15),
            1 => (&self.s_phase1_rational, &self.s_phase1_sqrt15),
            _ => return Err(Error::Usage(format!("q-minor phase {phase} out of range"))),
        };
        if let Some(v) = trivial_minor(j) {
            return Ok(v);
        }
        let ju = j as u64;
        let r = (ju % 3) as usize;
        let c = QuadExt::new(re[r].clone(), im[r].clone());
        let x = self.x_plus();
        let k = ju / 3;
        let value = &(&c * &x.pow(k)) + &(&c.conj() * &x.conj().pow(k));
        value.to_rational().ok_or_else(|| {
            Error::Consistency(format!("q-minor ({phase}, {j}) left residue {value}"))
        })
    }

    /// `det 𝓛_S = q⁰_{3n} − e² q¹_{3n−2} + offset · δⁿ`.
    pub fn det_ls(&self, n: u64) -> Result<BigRational> {
        check_n(n)?;
        let j = 3 * n as i64;
        Ok(self.q_minor(0, j)? - &self.coupling * self.q_minor(1, j - 2)?
            + &self.det_ls_offset * self.decay_pow(n))
    }

    /// `Σ_{j≥2} 1/α_j` over the nonzero spectrum of `𝓛_A`.
    pub fn sum_recip_alpha(&self, n: u64) -> Result<BigRational> {
        check_n(n)?;
        Ok((&self.alpha_square * big(n * n) - &self.alpha_constant) / &self.alpha_denominator)
    }

    /// `(−1)^{3n−1} d_{3n−1}`: the sum of vertex-deleted minors of `𝓛_A`,
    /// equal to `Π_{j≥2} α_j`.
    pub fn coeff_d_3n_minus_1(&self, n: u64) -> Result<BigRational> {
        check_n(n)?;
        Ok(&self.a_linear_coefficient * big(n * n) * self.decay_pow(n))
    }

    /// `(−1)^{3n−2} d_{3n−2}`: the sum of two-vertex-deleted minors of `𝓛_A`.
    pub fn coeff_d_3n_minus_2(&self, n: u64) -> Result<BigRational> {
        check_n(n)?;
        let n2 = big(n * n);
        Ok((&self.a_quadratic_quartic * &n2 * &n2 - &self.a_quadratic_square * &n2)
            / &self.a_quadratic_denominator
            * self.decay_pow(n))
    }

    /// `(−1)^{3n−1} t_{3n−1}`: the sum of vertex-deleted minors of `𝓛_S`.
    pub fn coeff_t_3n_minus_1(&self, n: u64) -> Result<BigRational> {
        check_n(n)?;
        Ok(&self.s_linear_coefficient * big(n) * self.sqrt15_difference(n)?)
    }

    fn check_vertex(x: u64, n: u64) -> Result<()> {
        check_n(n)?;
        if x == 0 || x > 3 * n {
            return Err(Error::Usage(format!("vertex {x} outside 1..={}", 3 * n)));
        }
        Ok(())
    }

    /// `det 𝓛_A[x]`, `𝓛_A` with row and column `x` (1-based) deleted.
    ///
    /// The remaining matrix is two tridiagonal pieces `1..x−1` and `x+1..3n`
    /// joined by the corner bond, hence
    /// `w⁰_{x−1} w^p_{3n−x} − e² w¹_{x−2} w^p_{3n−x−1}` with `p` fixed by `x mod 3`.
    pub fn minor_det_la(&self, x: u64, n: u64) -> Result<BigRational> {
        Self::check_vertex(x, n)?;
        let phase = match x % 3 {
            0 => 0,
            1 => 1,
            _ => 2,
        };
        let (x, m) = (x as i64, 3 * n as i64);
        Ok(self.w_minor(0, x - 1)? * self.w_minor(phase, m - x)?
            - &self.coupling * self.w_minor(1, x - 2)? * self.w_minor(phase, m - x - 1)?)
    }

    /// `det 𝓛_S[x]`; depends only on `x mod 3`.
    pub fn minor_det_ls(&self, x: u64, n: u64) -> Result<BigRational> {
        Self::check_vertex(x, n)?;
        let c = &self.s_deleted_minor[(x % 3) as usize];
        Ok(c * self.sqrt15_difference(n)?)
    }

    /// `ξ_n = Σ 1/ρ_j`, by two exact routes that must agree: the quadratic
    /// field ratio `t_{3n−1} / det 𝓛_S`, and the integer form
    /// `15 c n u_n / (t_n + offset)` on the Lucas pair.
    pub fn xi(&self, n: u64) -> Result<BigRational> {
        let field = self.coeff_t_3n_minus_1(n)? / self.det_ls(n)?;
        let lucas = lucas_pair(n);
        let denominator = BigRational::from_integer(lucas.t) + &self.det_ls_offset;
        let integer = &self.s_linear_coefficient
            * big(15 * n)
            * BigRational::from_integer(lucas.u)
            / denominator;
        if field != integer {
            return Err(Error::Consistency(format!(
                "xi({n}): field route {field} != Lucas route {integer}"
            )));
        }
        Ok(field)
    }

    /// Kemeny's constant `Σ 1/α + Σ 1/ρ`.
    pub fn kemeny(&self, n: u64) -> Result<BigRational> {
        Ok(self.sum_recip_alpha(n)? + self.xi(n)?)
    }

    /// Degree-Kirchhoff index `2|E| · Kc = 14n · Kc`.
    pub fn dk_index(&self, n: u64) -> Result<BigRational> {
        Ok(big(14 * n) * self.kemeny(n)?)
    }

    /// Number of spanning trees `c n (t_n + offset)`.
    pub fn spanning_trees(&self, n: u64) -> Result<BigInt> {
        check_n(n)?;
        let t = BigRational::from_integer(lucas_pair(n).t);
        let tau = &self.tau_factor * big(n) * (t + &self.tau_offset);
        if !tau.is_integer() {
            return Err(Error::Consistency(format!("tau({n}) = {tau} is not an integer")));
        }
        Ok(tau.to_integer())
    }

    pub fn summary(&self, n: u64) -> Result<SpectralSummary> {
        let sum_recip_alpha = self.sum_recip_alpha(n)?;
        let sum_recip_rho = self.xi(n)?;
        let kemeny = &sum_recip_alpha + &sum_recip_rho;
        Ok(SpectralSummary {
            n,
            dk: big(14 * n) * &kemeny,
            sum_recip_alpha,
            sum_recip_rho,
            kemeny,
            tau: self.spanning_trees(n)?,
        })
    }
}

/// The closed-form invariants of `Q_n` in one record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralSummary {
    pub n: u64,
    pub sum_recip_alpha: BigRational,
    pub sum_recip_rho: BigRational,
    pub dk: BigRational,
    pub kemeny: BigRational,
    pub tau: BigInt,
}

#[derive(Serialize)]
struct SummaryJson<'a> {
    n: u64,
    #[serde(with = "rational_str")]
    sum_recip_alpha: &'a BigRational,
    #[serde(with = "rational_str")]
    xi: &'a BigRational,
    #[serde(with = "rational_str")]
    dk: &'a BigRational,
    dk_decimal: serde_json::Number,
    #[serde(with = "rational_str")]
    kemeny: &'a BigRational,
    tau: String,
}

impl Serialize for SpectralSummary {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let decimal = to_significant(&self.dk, 15);
        let dk_decimal: serde_json::Number = decimal
            .parse()
            .map_err(|_| serde::ser::Error::custom(format!("bad decimal {decimal}")))?;
        SummaryJson {
            n: self.n,
            sum_recip_alpha: &self.sum_recip_alpha,
            xi: &self.sum_recip_rho,
            dk: &self.dk,
            dk_decimal,
            kemeny: &self.kemeny,
            tau: self.tau.to_string(),
        }
        .serialize(s)
    }
}

fn defaults() -> ClosedForms {
    ClosedForms::default()
}

pub fn sum_recip_alpha(n: u64) -> Result<BigRational> {
    defaults().sum_recip_alpha(n)
}

pub fn xi(n: u64) -> Result<BigRational> {
    defaults().xi(n)
}

pub fn dk_index(n: u64) -> Result<BigRational> {
    defaults().dk_index(n)
}

pub fn kemeny(n: u64) -> Result<BigRational> {
    defaults().kemeny(n)
}

pub fn spanning_trees(n: u64) -> Result<BigInt> {
    defaults().spanning_trees(n)
}

pub fn w_minor(phase: u8, j: i64) -> Result<BigRational> {
    defaults().w_minor(phase, j)
}

pub fn q_minor(phase: u8, j: i64) -> Result<BigRational> {
    defaults().q_minor(phase, j)
}

pub fn det_ls(n: u64) -> Result<BigRational> {
    defaults().det_ls(n)
}

pub fn coeff_d_3n_minus_1(n: u64) -> Result<BigRational> {
    defaults().coeff_d_3n_minus_1(n)
}

pub fn coeff_d_3n_minus_2(n: u64) -> Result<BigRational> {
    defaults().coeff_d_3n_minus_2(n)
}

pub fn coeff_t_3n_minus_1(n: u64) -> Result<BigRational> {
    defaults().coeff_t_3n_minus_1(n)
}

pub fn minor_det_la(x: u64, n: u64) -> Result<BigRational> {
    defaults().minor_det_la(x, n)
}

pub fn minor_det_ls(x: u64, n: u64) -> Result<BigRational> {
    defaults().minor_det_ls(x, n)
}

pub fn summary(n: u64) -> Result<SpectralSummary> {
    defaults().summary(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::format_rational;

    fn r(p: i64, q: i64) -> BigRational {
        rat(p, q)
    }

    #[test]
    fn alpha_sums() {
        assert_eq!(sum_recip_alpha(1).unwrap(), r(32, 21));
        assert_eq!(sum_recip_alpha(2).unwrap(), r(569, 84));
        assert!(sum_recip_alpha(0).is_err());
    }

    #[test]
    fn xi_values() {
        assert_eq!(xi(1).unwrap(), r(37, 10));
        assert_eq!(xi(2).unwrap(), r(37, 4));
        assert_eq!(xi(3).unwrap(), r(999, 70));
    }

    #[test]
    fn dk_and_kemeny() {
        assert_eq!(dk_index(1).unwrap(), r(1097, 15));
        assert_eq!(dk_index(2).unwrap(), r(1346, 3));
        assert_eq!(dk_index(3).unwrap(), r(6257, 5));
        assert_eq!(kemeny(1).unwrap(), r(1097, 210));
        assert_eq!(kemeny(2).unwrap(), r(673, 42));
        for n in 1..=20 {
            assert_eq!(dk_index(n).unwrap(), big(14 * n) * kemeny(n).unwrap());
            let cf = ClosedForms::default();
            let cubic = r(147, 6) * big(n * n * n) - r(19, 6) * big(n) + big(14 * n) * xi(n).unwrap();
            assert_eq!(cf.dk_index(n).unwrap(), cubic, "n={n}");
        }
    }

    #[test]
    fn tree_counts() {
        let expected = [
            15u64, 192, 2205, 23064, 226875, 2143296, 19686345, 177131568, 1568872935,
            13724122560, 118854766965, 1020809018952,
        ];
        for (i, &t) in expected.iter().enumerate() {
            assert_eq!(spanning_trees(i as u64 + 1).unwrap(), BigInt::from(t));
        }
    }

    #[test]
    fn w_minors() {
        let phase0: Vec<_> = (1..=6).map(|j| w_minor(0, j).unwrap()).collect();
        assert_eq!(
            phase0,
            vec![r(2, 3), r(1, 2), r(1, 3), r(5, 36), r(1, 12), r(7, 144)]
        );
        let phase1: Vec<_> = (1..=3).map(|j| w_minor(1, j).unwrap()).collect();
        assert_eq!(phase1, vec![r(1, 1), r(3, 4), r(1, 3)]);
        assert_eq!(w_minor(2, 2).unwrap(), r(1, 2));
        assert_eq!(w_minor(2, 1).unwrap(), r(1, 1));
        assert_eq!(w_minor(0, 0).unwrap(), r(1, 1));
        assert_eq!(w_minor(1, -1).unwrap(), r(0, 1));
        assert!(w_minor(3, 1).is_err());
    }

    #[test]
    fn q_minors() {
        let phase0: Vec<_> = (1..=5).map(|j| q_minor(0, j).unwrap()).collect();
        assert_eq!(phase0, vec![r(4, 3), r(7, 6), r(5, 6), r(11, 12), r(7, 9)]);
        assert_eq!(q_minor(1, 1).unwrap(), r(1, 1));
        assert_eq!(q_minor(1, 2).unwrap(), r(3, 4));
        assert!(q_minor(2, 1).is_err());
    }

    #[test]
    fn s_determinant() {
        assert_eq!(det_ls(1).unwrap(), r(5, 6));
        assert_eq!(det_ls(2).unwrap(), r(4, 9));
        for n in 1..=30 {
            let scaled = det_ls(n).unwrap() * rat_pow(&int(12), n as u32);
            let t = lucas_pair(n).t;
            assert_eq!(scaled, BigRational::from_integer(t + 2u32), "n={n}");
        }
    }

    #[test]
    fn a_coefficients() {
        assert_eq!(coeff_d_3n_minus_1(1).unwrap(), r(7, 4));
        assert_eq!(coeff_d_3n_minus_2(1).unwrap(), r(8, 3));
        for n in 1..=20 {
            let ratio = coeff_d_3n_minus_2(n).unwrap() / coeff_d_3n_minus_1(n).unwrap();
            assert_eq!(ratio, sum_recip_alpha(n).unwrap());
        }
    }

    #[test]
    fn deleted_minors_n1() {
        let la: Vec<_> = (1..=3).map(|x| minor_det_la(x, 1).unwrap()).collect();
        assert_eq!(la, vec![r(3, 4), r(1, 2), r(1, 2)]);
        assert_eq!(la.iter().sum::<BigRational>(), coeff_d_3n_minus_1(1).unwrap());
        assert_eq!(minor_det_ls(3, 1).unwrap(), r(7, 6));
        assert_eq!(minor_det_ls(3, 1).unwrap(), q_minor(0, 2).unwrap());
        assert_eq!(coeff_t_3n_minus_1(1).unwrap(), r(37, 12));
        assert!(minor_det_la(0, 1).is_err());
        assert!(minor_det_ls(4, 1).is_err());
    }

    #[test]
    fn s_linear_coefficient_by_subcases() {
        // n (q⁰_{3n−1} + q¹_{3n−1} + q⁰_{3n−1})
        for n in 1..=10u64 {
            let j = 3 * n as i64 - 1;
            let sub = big(n) * (q_minor(0, j).unwrap() * int(2) + q_minor(1, j).unwrap());
            assert_eq!(sub, coeff_t_3n_minus_1(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn tree_count_identity() {
        // τ · 2m = Π d · Π α · Π ρ
        for n in 1..=20u64 {
            let lhs = BigRational::from_integer(spanning_trees(n).unwrap()) * big(14 * n);
            let degree_product = rat_pow(&int(144), n as u32);
            let rhs = degree_product * coeff_d_3n_minus_1(n).unwrap() * det_ls(n).unwrap();
            assert_eq!(lhs, rhs, "n={n}");
        }
    }

    #[test]
    fn summary_json() {
        let s = summary(1).unwrap();
        assert_eq!(s.dk, big(14) * &s.kemeny);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(
            json,
            r#"{"n":1,"sum_recip_alpha":"32/21","xi":"37/10","dk":"1097/15","dk_decimal":73.1333333333333,"kemeny":"1097/210","tau":"15"}"#
        );
        assert_eq!(format_rational(&summary(2).unwrap().dk), "1346/3");
    }

    #[test]
    fn constants_round_trip_and_partial_override() {
        let cf = ClosedForms::default();
        let json = serde_json::to_string(&cf).unwrap();
        let back: ClosedForms = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cf);
        let tweaked: ClosedForms =
            serde_json::from_str(r#"{"a_linear_coefficient":"22/1"}"#).unwrap();
        assert_eq!(tweaked.a_linear_coefficient, int(22));
        assert_eq!(tweaked.alpha_square, int(147));
        assert!(serde_json::from_str::<ClosedForms>(r#"{"bogus":"1"}"#).is_err());
    }

    #[test]
    fn xi_routes_disagree_on_bad_root() {
        let cf = ClosedForms {
            growth_root: [r(1, 3), r(1, 11)],
            ..ClosedForms::default()
        };
        assert!(matches!(cf.xi(2), Err(Error::Consistency(_))));
    }

    #[test]
    fn fractional_tree_count_rejected() {
        let cf = ClosedForms {
            tau_factor: r(3, 7),
            ..ClosedForms::default()
        };
        assert!(matches!(cf.spanning_trees(1), Err(Error::Consistency(_))));
    }
}
