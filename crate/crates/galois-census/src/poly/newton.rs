//! Conversion between power sums and elementary symmetric functions of a
//! root multiset, in both directions, over exact rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Elementary symmetric functions `e_1..e_n` from power sums `p_1..p_n`,
/// using `k e_k = sum_{i=1..k} (-1)^(i-1) p_i e_(k-i)`.
pub fn power_sums_to_elementary(p: &[BigRational]) -> Vec<BigRational> {
    let n = p.len();
    let mut e = vec![BigRational::one()]; // e_0
    for k in 1..=n {
        let mut acc = BigRational::zero();
        for i in 1..=k {
            let term = &p[i - 1] * &e[k - i];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        e.push(acc / BigRational::from(BigInt::from(k)));
    }
    e.remove(0);
    e
}

/// Power sums `p_1..p_n` from elementary symmetric functions `e_1..e_n`,
/// inverting the same identity.
pub fn elementary_to_power_sums(e: &[BigRational]) -> Vec<BigRational> {
    let n = e.len();
    let mut e_full = vec![BigRational::one()];
    e_full.extend(e.iter().cloned());
    let mut p: Vec<BigRational> = vec![];
    for k in 1..=n {
        let mut acc = BigRational::from(BigInt::from(k)) * &e_full[k];
        for i in 1..k {
            let term = &p[i - 1] * &e_full[k - i];
            if i % 2 == 1 {
                acc -= term;
            } else {
                acc += term;
            }
        }
        // k e_k = sum (-1)^(i-1) p_i e_(k-i); the i = k term isolates p_k
        if k % 2 == 1 {
            p.push(acc);
        } else {
            p.push(-acc);
        }
    }
    p
}
