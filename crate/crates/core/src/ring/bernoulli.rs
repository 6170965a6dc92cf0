//! Bernoulli numbers and the rational even normalized zeta values.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

static TABLE: OnceLock<Mutex<Vec<BigRational>>> = OnceLock::new();

/// `B_n` with the convention `B_1 = −1/2`, from `Σ_{j≤n} C(n+1,j) B_j = 0`.
pub fn bernoulli(n: usize) -> BigRational {
    let table = TABLE.get_or_init(|| Mutex::new(vec![BigRational::one()]));
    let mut b = table.lock().unwrap_or_else(|e| e.into_inner());
    while b.len() <= n {
        let m = b.len();
        // row of C(m+1, j)
        let mut binom = BigInt::one();
        let mut acc = BigRational::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += BigRational::from_integer(binom.clone()) * bj;
            binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b[n].clone()
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `ζ(2k)/(2πi)^{2k} = −B_{2k}/(2·(2k)!)`.
pub fn zeta_tilde_even(k: u32) -> Result<BigRational> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "zeta_tilde_even needs k >= 1".into(),
        ));
    }
    let n = 2 * k as usize;
    let denom = BigRational::from_integer(BigInt::from(2) * factorial(n));
    Ok(-bernoulli(n) / denom)
}
