use super::exact::inverse_exact;
use crate::error::{Error, Result};
use crate::exact_algebra::BigRational;
use crate::graph_gen::SimpleGraph;
use crate::laplacian::combinatorial_laplacian;
use num_traits::Zero;

/// Effective resistances `r_ij` with unit edge resistors, exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResistanceMatrix {
    order: usize,
    data: Vec<BigRational>,
}

impl ResistanceMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.order + j]
    }

    /// `(i, j, r_ij)` for `i < j`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, &BigRational)> + '_ {
        (0..self.order).flat_map(move |i| (i + 1..self.order).map(move |j| (i, j, self.get(i, j))))
    }
}

pub fn resistance_matrix_exact(g: &SimpleGraph) -> Result<ResistanceMatrix> {
    resistance_matrix_grounded(g, 0)
}

/// Resistances from the inverse of the Laplacian with vertex `ground` removed:
/// `r_ij = G_ii + G_jj − 2 G_ij`, where `G` is padded with zeros at `ground`.
pub fn resistance_matrix_grounded(g: &SimpleGraph, ground: usize) -> Result<ResistanceMatrix> {
    let n = g.vertex_count();
    if ground >= n {
        return Err(Error::InvalidArgument(format!("ground vertex {ground} out of range")));
    }
    if n == 1 {
        return Ok(ResistanceMatrix {
            order: 1,
            data: vec![BigRational::zero()],
        });
    }
    let reduced = combinatorial_laplacian(g).delete(&[ground]);
    let inv = inverse_exact(&reduced).ok_or(Error::Disconnected)?;
    let idx = |v: usize| -> Option<usize> {
        match v.cmp(&ground) {
            std::cmp::Ordering::Less => Some(v),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(v - 1),
        }
    };
    let gram = |a: usize, b: usize| -> BigRational {
        match (idx(a), idx(b)) {
            (Some(x), Some(y)) => inv.get(x, y).clone(),
            _ => BigRational::zero(),
        }
    };
    let mut data = vec![BigRational::zero(); n * n];
    for i in 0..n {
        for j in i + 1..n {
            let r = gram(i, i) + gram(j, j) - gram(i, j) * BigRational::from_integer(2.into());
            data[i * n + j] = r.clone();
            data[j * n + i] = r;
        }
    }
    Ok(ResistanceMatrix { order: n, data })
}
