use super::{BigInt, BigRational, QuadExt};
use crate::error::{Error, Result};

/// `t_k = (4+√15)^k + (4−√15)^k` and `u_k√15 = (4+√15)^k − (4−√15)^k`.
///
/// Both obey `s_k = 8 s_{k−1} − s_{k−2}`; `t_k² − 15 u_k² = 4`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LucasPair {
    pub t: BigInt,
    pub u: BigInt,
}

pub fn lucas_pair(k: u64) -> LucasPair {
    let step = |prev: &BigInt, cur: &BigInt| -> BigInt { cur * 8u32 - prev };
    let (mut t0, mut t1) = (BigInt::from(2), BigInt::from(8));
    let (mut u0, mut u1) = (BigInt::from(0), BigInt::from(2));
    for _ in 0..k {
        let t2 = step(&t0, &t1);
        let u2 = step(&u0, &u1);
        t0 = std::mem::replace(&mut t1, t2);
        u0 = std::mem::replace(&mut u1, u2);
    }
    LucasPair { t: t0, u: u0 }
}

pub fn lucas_t(k: u64) -> BigInt {
    lucas_pair(k).t
}

pub fn lucas_u(k: u64) -> BigInt {
    lucas_pair(k).u
}

/// Checks `(4+√15)^k = (t_k + u_k√15)/2`.
pub fn quad_to_lucas_consistency(k: u64) -> Result<bool> {
    let LucasPair { t, u } = lucas_pair(k);
    let half = |v: BigInt| BigRational::new(v, BigInt::from(2));
    let expected = QuadExt::new(half(t), half(u));
    let power = QuadExt::fundamental_unit().pow(k);
    if power == expected {
        Ok(true)
    } else {
        Err(Error::Consistency(format!(
            "(4+sqrt15)^{k} = {power}, Lucas pair gives {expected}"
        )))
    }
}
