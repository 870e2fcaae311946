//! Brute-force oracles, independent of the closed-form evaluators.
//!
//! Spectra come from Jacobi rotations; everything else is exact: Bareiss
//! determinants, Hessenberg characteristic polynomials, grounded-Laplacian
//! resistance solves and Matrix-Tree cofactors.

mod charpoly;
mod eigen;
pub mod exact;
mod resistance;

pub use charpoly::{charpoly_exact, recip_sum_from_charpoly, CharPoly};
pub use eigen::{determinant_numeric, eigenvalues_symmetric};
pub use exact::{det_exact, leading_principal_minors_exact, rank_exact};
pub use resistance::{resistance_matrix_exact, resistance_matrix_grounded, ResistanceMatrix};

use crate::error::{Error, Result};
use crate::exact_algebra::{BigInt, BigRational};
use crate::graph_gen::SimpleGraph;
use crate::laplacian::{combinatorial_laplacian, normalized_laplacian, rational_walk_laplacian};

/// Nonzero-eigenvalue threshold for numeric spectra.
pub const ZERO_EIGENVALUE_THRESHOLD: f64 = 1e-9;

fn require_connected(g: &SimpleGraph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// `DK(G) = Σ_{i<j} d_i d_j r_ij`, resistance route only.
pub fn dk_resistance(g: &SimpleGraph) -> Result<BigRational> {
    require_connected(g)?;
    let r = resistance_matrix_exact(g)?;
    let d = g.degrees();
    Ok(r.pairs()
        .map(|(i, j, rij)| rij * BigRational::from_integer(BigInt::from(d[i] * d[j])))
        .sum())
}

/// `DK(G)` by resistances, cross-checked against `2m · Kc(G)` from the
/// characteristic polynomial.
pub fn dk_oracle(g: &SimpleGraph) -> Result<BigRational> {
    let by_resistance = dk_resistance(g)?;
    let by_spectrum = kemeny_oracle(g)? * BigRational::from_integer((2 * g.edge_count()).into());
    if by_resistance != by_spectrum {
        return Err(Error::Consistency(format!(
            "DK by resistance {by_resistance} differs from 2m*Kc {by_spectrum}"
        )));
    }
    Ok(by_resistance)
}

/// `Kf(G) = Σ_{i<j} r_ij`.
pub fn kf_oracle(g: &SimpleGraph) -> Result<BigRational> {
    require_connected(g)?;
    Ok(resistance_matrix_exact(g)?.pairs().map(|(_, _, r)| r.clone()).sum())
}

/// `Kc(G) = Σ 1/λ` over nonzero normalized-Laplacian eigenvalues, via the
/// exact characteristic polynomial of `I − D^{-1}A`.
pub fn kemeny_oracle(g: &SimpleGraph) -> Result<BigRational> {
    require_connected(g)?;
    recip_sum_from_charpoly(&charpoly_exact(&rational_walk_laplacian(g)?))
}

/// Floating-point `Σ 1/λ` over eigenvalues above [`ZERO_EIGENVALUE_THRESHOLD`].
pub fn kemeny_numeric(g: &SimpleGraph) -> Result<f64> {
    let eig = eigenvalues_symmetric(&normalized_laplacian(g)?, 1e-13)?;
    Ok(eig
        .iter()
        .filter(|&&l| l > ZERO_EIGENVALUE_THRESHOLD)
        .map(|l| 1.0 / l)
        .sum())
}

/// Matrix-Tree count: determinant of `L` with row/column 0 deleted.
pub fn spanning_trees_oracle(g: &SimpleGraph) -> Result<BigInt> {
    if g.vertex_count() == 1 {
        return Ok(BigInt::from(1));
    }
    let reduced = combinatorial_laplacian(g).delete(&[0]);
    let rows = (0..reduced.order())
        .map(|i| {
            (0..reduced.order())
                .map(|j| reduced.get(i, j).to_integer())
                .collect()
        })
        .collect();
    Ok(exact::det_integer(rows))
}
