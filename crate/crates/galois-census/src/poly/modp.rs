//! Polynomial arithmetic over GF(p) for word-sized primes: just enough for
//! distinct-degree factorization degrees (factor degree patterns mod p).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::uni::UniPoly;

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Dense monic-friendly polynomial over GF(p), ascending coefficients,
/// no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMod {
    pub coeffs: Vec<u64>,
    pub p: u64,
}

impl PolyMod {
    fn trim(mut coeffs: Vec<u64>, p: u64) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PolyMod { coeffs, p }
    }

    pub fn from_unipoly(f: &UniPoly, p: u64) -> Self {
        let pm = BigInt::from(p);
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| c.mod_floor(&pm).to_u64().unwrap())
            .collect();
        Self::trim(coeffs, p)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn x(p: u64) -> Self {
        PolyMod {
            coeffs: vec![0, 1],
            p,
        }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(*self.coeffs.last().unwrap(), self.p);
        PolyMod {
            coeffs: self
                .coeffs
                .iter()
                .map(|&c| mul_mod(c, inv, self.p))
                .collect(),
            p: self.p,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, item) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *item = add_mod(a, self.p - b % self.p, self.p) % self.p;
        }
        Self::trim(out, self.p)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return PolyMod {
                coeffs: vec![],
                p: self.p,
            };
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = add_mod(out[i + j], mul_mod(a, b, self.p), self.p);
            }
        }
        Self::trim(out, self.p)
    }

    pub fn rem(&self, modulus: &Self) -> Self {
        assert!(!modulus.is_zero());
        let d = modulus.degree();
        let mut rem = self.coeffs.clone();
        let lead_inv = inv_mod(*modulus.coeffs.last().unwrap(), self.p);
        while rem.len() > d {
            let k = rem.len() - 1 - d;
            let factor = mul_mod(*rem.last().unwrap(), lead_inv, self.p);
            if factor != 0 {
                for (j, &m) in modulus.coeffs.iter().enumerate() {
                    let sub = mul_mod(factor, m, self.p);
                    rem[k + j] = add_mod(rem[k + j], self.p - sub, self.p) % self.p;
                }
            }
            rem.pop();
        }
        Self::trim(rem, self.p)
    }

    pub fn div_exact_mod(&self, other: &Self) -> Self {
        // division is exact in all call sites (factor removal)
        let mut rem = self.coeffs.clone();
        let d = other.degree();
        let lead_inv = inv_mod(*other.coeffs.last().unwrap(), self.p);
        let mut quot = vec![0u64; rem.len().saturating_sub(d)];
        while rem.len() > d {
            let k = rem.len() - 1 - d;
            let factor = mul_mod(*rem.last().unwrap(), lead_inv, self.p);
            quot[k] = factor;
            if factor != 0 {
                for (j, &m) in other.coeffs.iter().enumerate() {
                    let sub = mul_mod(factor, m, self.p);
                    rem[k + j] = add_mod(rem[k + j], self.p - sub, self.p) % self.p;
                }
            }
            rem.pop();
        }
        debug_assert!(rem.iter().all(|&c| c == 0));
        Self::trim(quot, self.p)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return PolyMod {
                coeffs: vec![],
                p: self.p,
            };
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod(c, (i as u64) % self.p, self.p))
            .collect();
        Self::trim(out, self.p)
    }

    /// `self^e mod modulus` by square and multiply.
    pub fn pow_mod(&self, mut e: u64, modulus: &Self) -> Self {
        let mut base = self.rem(modulus);
        let mut acc = PolyMod {
            coeffs: vec![1],
            p: self.p,
        };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
            e >>= 1;
        }
        acc
    }
}

/// Factor degree multiset of a squarefree polynomial mod p via
/// distinct-degree factorization, or `None` when the reduction is unusable
/// (leading coefficient vanishes, or the reduction is not squarefree).
pub fn factor_degrees_mod_p(f: &UniPoly, p: u64) -> Option<Vec<usize>> {
    let pm = BigInt::from(p);
    if f.leading().mod_floor(&pm).is_zero() {
        return None;
    }
    let fp = PolyMod::from_unipoly(f, p).monic();
    if fp.degree() == 0 {
        return Some(vec![]);
    }
    let g = fp.gcd(&fp.derivative());
    if g.degree() > 0 {
        return None; // not squarefree mod p
    }
    let mut degrees = vec![];
    let mut rest = fp;
    let x = PolyMod::x(p);
    let mut frob = x.pow_mod(p, &rest); // x^(p^d) mod rest, updated per round
    let mut d = 1usize;
    while rest.degree() >= 2 * d {
        let diff = frob.sub(&x);
        let g = diff.gcd(&rest);
        if g.degree() > 0 {
            for _ in 0..g.degree() / d {
                degrees.push(d);
            }
            rest = rest.div_exact_mod(&g);
            frob = frob.rem(&rest);
        }
        d += 1;
        if rest.degree() == 0 {
            break;
        }
        frob = frob.pow_mod(p, &rest);
    }
    if rest.degree() > 0 {
        degrees.push(rest.degree());
    }
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    Some(degrees)
}

/// The first `count` primes `>= from`, by trial division (word-sized scale).
pub fn primes_from(from: u64, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut candidate = from.max(2);
    while out.len() < count {
        if is_prime_u64(candidate) {
            out.push(candidate);
        }
        candidate += 1;
    }
    out
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let mut d = 37u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_i64(coeffs)
    }

    #[test]
    fn cycle_type_pattern_examples() {
        // X^2 + 1 mod 5 splits (roots 2, 3)
        assert_eq!(factor_degrees_mod_p(&p(&[1, 0, 1]), 5), Some(vec![1, 1]));
        // X^2 + 1 mod 3 stays irreducible
        assert_eq!(factor_degrees_mod_p(&p(&[1, 0, 1]), 3), Some(vec![2]));
        // X^2 + 1 mod 2 = (X+1)^2: unusable
        assert_eq!(factor_degrees_mod_p(&p(&[1, 0, 1]), 2), None);
    }

    #[test]
    fn quintic_patterns() {
        // X^5 - 2 mod 7: 7 = 2 mod 5 -> x -> x^5 permutes, pattern from known factorization
        let f = p(&[-2, 0, 0, 0, 0, 1]);
        let degs = factor_degrees_mod_p(&f, 7).unwrap();
        let total: usize = degs.iter().sum();
        assert_eq!(total, 5);
        // irreducible quintic mod 3
        let degs3 = factor_degrees_mod_p(&f, 3).unwrap();
        assert_eq!(degs3.iter().sum::<usize>(), 5);
    }

    #[test]
    fn degree_pattern_matches_bruteforce_eval() {
        // count roots mod p as a sanity check against degree-1 factors
        let f = p(&[-1, 0, 0, 1]); // X^3 - 1
        for prime in [7u64, 11, 13, 31] {
            if let Some(degs) = factor_degrees_mod_p(&f, prime) {
                let ones = degs.iter().filter(|&&d| d == 1).count();
                let roots = (0..prime)
                    .filter(|&x| {
                        let v = (pow_mod(x, 3, prime) + prime - 1) % prime;
                        v == 0
                    })
                    .count();
                assert_eq!(ones, roots, "prime {prime}");
            }
        }
    }

    #[test]
    fn prime_generation() {
        assert_eq!(primes_from(11, 5), vec![11, 13, 17, 19, 23]);
        assert!(is_prime_u64(1_000_003));
        assert!(!is_prime_u64(1_000_001));
    }
}
