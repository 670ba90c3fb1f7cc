//! Exact factorization over the integers (equivalently the rationals).
//!
//! Squarefree parts are factored by root-subset reconstruction: compute
//! certified complex roots, scale elementary symmetric functions of root
//! subsets by the leading coefficient, round to integer candidates, and
//! verify by exact division. A distinct-degree factorization over a few
//! small primes first certifies most irreducible inputs outright.

use num_bigint::BigInt;

use num_traits::{One, Zero};

use super::modp::factor_degrees_mod_p;
use super::roots::{complex_roots, poly_from_root_balls, ComplexBall};
use super::uni::UniPoly;
use crate::error::{Error, Result};

/// Hard cap on the degree handled by the reconstruction search.
pub const FACTOR_DEGREE_CAP: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    /// Signed content: `input = content * prod factors[i].0 ^ factors[i].1`.
    pub content: BigInt,
    /// Primitive irreducible factors with positive leading coefficients,
    /// sorted by degree then coefficients, with multiplicities.
    pub factors: Vec<(UniPoly, usize)>,
}

impl Factorization {
    pub fn product(&self) -> UniPoly {
        let mut acc = UniPoly::constant(self.content.clone());
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = acc.mul(f);
            }
        }
        acc
    }

    /// Factor degrees with multiplicity, descending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut out = vec![];
        for (f, m) in &self.factors {
            for _ in 0..*m {
                out.push(f.degree());
            }
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    /// Number of irreducible factors counted with multiplicity.
    pub fn count_with_multiplicity(&self) -> usize {
        self.factors.iter().map(|(_, m)| m).sum()
    }

    pub fn is_irreducible(&self) -> bool {
        self.count_with_multiplicity() == 1
    }
}

pub fn factor_rational(p: &UniPoly) -> Result<Factorization> {
    if p.is_zero() {
        return Err(Error::Domain("cannot factor the zero polynomial".into()));
    }
    let (content, prim) = p.primitive();
    if prim.degree() == 0 {
        return Ok(Factorization {
            content,
            factors: vec![],
        });
    }
    if prim.degree() > FACTOR_DEGREE_CAP {
        return Err(Error::CapExceeded(format!(
            "factorization capped at degree {FACTOR_DEGREE_CAP}, got {}",
            prim.degree()
        )));
    }
    let mut factors: Vec<(UniPoly, usize)> = vec![];
    // roots at zero
    let zeros = prim
        .coeffs()
        .iter()
        .take_while(|c| c.is_zero())
        .count();
    let mut rest = prim;
    if zeros > 0 {
        rest = UniPoly::new(rest.coeffs()[zeros..].to_vec());
        factors.push((UniPoly::monomial(BigInt::one(), 1), zeros));
    }
    if rest.degree() > 0 {
        let (extra_content, parts) = rest.squarefree_decomposition();
        debug_assert!(extra_content.is_one());
        for (q, mult) in parts {
            for irr in factor_squarefree(&q)? {
                merge_factor(&mut factors, irr, mult);
            }
        }
    }
    factors.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
    });
    let result = Factorization { content, factors };
    if result.product() != *p {
        return Err(Error::Inconsistent(
            "factor product does not reproduce the input".into(),
        ));
    }
    Ok(result)
}

fn merge_factor(factors: &mut Vec<(UniPoly, usize)>, f: UniPoly, mult: usize) {
    for (g, m) in factors.iter_mut() {
        if *g == f {
            *m += mult;
            return;
        }
    }
    factors.push((f, mult));
}

/// Number of usable primes tried for the mod-p irreducibility certificate.
const CERTIFICATE_PRIME_BUDGET: usize = 20;

fn factor_squarefree(q: &UniPoly) -> Result<Vec<UniPoly>> {
    let n = q.degree();
    if n <= 1 {
        return Ok(vec![q.clone()]);
    }
    // fast exit: irreducible mod p (same degree, squarefree) => irreducible over Q
    let mut usable = 0;
    let mut prime = 3u64;
    while usable < CERTIFICATE_PRIME_BUDGET {
        if let Some(pattern) = factor_degrees_mod_p(q, prime) {
            usable += 1;
            if pattern.len() == 1 && pattern[0] == n {
                return Ok(vec![q.clone()]);
            }
        }
        prime = super::modp::primes_from(prime + 1, 1)[0];
    }

    let mut prec = 64u32;
    for _ in 0..8 {
        let roots = match complex_roots(q, prec) {
            Ok(r) => r,
            Err(Error::Precision(_)) => {
                prec *= 2;
                continue;
            }
            Err(e) => return Err(e),
        };
        match reconstruct_from_roots(q, &roots)? {
            Some(factors) => return Ok(factors),
            None => {
                prec *= 2;
            }
        }
    }
    Err(Error::Precision(format!(
        "root-subset reconstruction did not stabilize for degree {n}"
    )))
}

/// One reconstruction pass at fixed precision. `Ok(None)` requests a retry
/// at higher precision (some candidate ball was too wide to round).
fn reconstruct_from_roots(
    q: &UniPoly,
    roots: &[ComplexBall],
) -> Result<Option<Vec<UniPoly>>> {
    let n = q.degree();
    let mut live: Vec<usize> = (0..n).collect();
    let mut remaining = q.clone();
    let mut out = vec![];
    'peel: while remaining.degree() > 0 {
        let d_rem = remaining.degree();
        let lc = remaining.leading();
        for size in 1..=d_rem / 2 {
            for subset in combinations(&live, size) {
                let chosen: Vec<ComplexBall> =
                    subset.iter().map(|&i| roots[i].clone()).collect();
                match candidate_from_subset(&chosen, &lc) {
                    CandidateOutcome::TooWide => return Ok(None),
                    CandidateOutcome::NotIntegral => continue,
                    CandidateOutcome::Candidate(cand) => {
                        let (_, prim) = cand.primitive();
                        if prim.degree() == 0 {
                            continue;
                        }
                        if let Some(quot) = remaining.div_exact(&prim) {
                            out.push(prim);
                            remaining = quot;
                            live.retain(|i| !subset.contains(i));
                            continue 'peel;
                        }
                    }
                }
            }
        }
        // nothing of degree <= d/2 divides: the rest is irreducible
        out.push(remaining.primitive().1);
        break;
    }
    Ok(Some(out))
}

enum CandidateOutcome {
    Candidate(UniPoly),
    NotIntegral,
    TooWide,
}

fn candidate_from_subset(roots: &[ComplexBall], lc: &BigInt) -> CandidateOutcome {
    use num_rational::BigRational;
    let quarter = BigRational::new(BigInt::one(), BigInt::from(4));
    let coeffs = poly_from_root_balls(roots);
    let mut ints = Vec::with_capacity(coeffs.len());
    for ball in &coeffs {
        let scaled = ball.scale_int(lc);
        if scaled.rad >= quarter {
            return CandidateOutcome::TooWide;
        }
        match scaled.round_to_integer() {
            Some(v) => ints.push(v),
            None => return CandidateOutcome::NotIntegral,
        }
    }
    CandidateOutcome::Candidate(UniPoly::new(ints))
}

fn combinations(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut stack = vec![];
    fn rec(items: &[usize], size: usize, start: usize, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if stack.len() == size {
            out.push(stack.clone());
            return;
        }
        for i in start..items.len() {
            stack.push(items[i]);
            rec(items, size, i + 1, stack, out);
            stack.pop();
        }
    }
    rec(items, size, 0, &mut stack, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_i64(coeffs)
    }

    #[test]
    fn quadratic_split() {
        let f = factor_rational(&p(&[-4, 0, 1])).unwrap();
        assert_eq!(f.content, BigInt::one());
        assert_eq!(f.degrees(), vec![1, 1]);
        assert_eq!(f.factors[0].0, p(&[-2, 1]));
        assert_eq!(f.factors[1].0, p(&[2, 1]));
    }

    #[test]
    fn quintic_with_linear_factor() {
        let f = factor_rational(&p(&[-32, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(f.degrees(), vec![4, 1]);
        // verified by exact multiplication
        assert_eq!(f.product(), p(&[-32, 0, 0, 0, 0, 1]));
        assert_eq!(f.factors[0].0, p(&[-2, 1]));
        assert_eq!(f.factors[1].0, p(&[16, 8, 4, 2, 1]));
    }

    #[test]
    fn eisenstein_irreducible_quintic() {
        // X^5 - 3 is irreducible by the Eisenstein criterion at 3 (oracle):
        // 3 | a_0..a_4, 3 does not divide the lead, 9 does not divide a_0.
        let q = p(&[-3, 0, 0, 0, 0, 1]);
        let three = BigInt::from(3);
        let nine = BigInt::from(9);
        assert!(q.coeffs()[..5].iter().all(|c| c.mod_floor(&three).is_zero()));
        assert!(!q.leading().mod_floor(&three).is_zero());
        assert!(!q.coeff(0).mod_floor(&nine).is_zero());
        let f = factor_rational(&q).unwrap();
        assert!(f.is_irreducible());
    }

    #[test]
    fn content_and_multiplicity() {
        // -6 (X-1)^2 (X+2) X^3
        let f = p(&[-1, 1]);
        let g = p(&[2, 1]);
        let input = f
            .mul(&f)
            .mul(&g)
            .mul(&UniPoly::monomial(BigInt::from(-6), 3));
        let fac = factor_rational(&input).unwrap();
        assert_eq!(fac.content, BigInt::from(-6));
        assert_eq!(fac.product(), input);
        assert_eq!(fac.degrees(), vec![1, 1, 1, 1, 1, 1]);
        let mults: Vec<usize> = fac.factors.iter().map(|(_, m)| *m).collect();
        assert_eq!(mults.iter().sum::<usize>(), 6);
    }

    #[test]
    fn non_monic_factors() {
        // (2X - 1)(3X + 5) has leading coefficient 6
        let input = p(&[-1, 2]).mul(&p(&[5, 3]));
        let fac = factor_rational(&input).unwrap();
        assert_eq!(fac.degrees(), vec![1, 1]);
        assert!(fac.factors.iter().any(|(f, _)| *f == p(&[-1, 2])));
        assert!(fac.factors.iter().any(|(f, _)| *f == p(&[5, 3])));
    }

    #[test]
    fn biquadratic_splits_without_full_degree_certificate() {
        // (X^2 - 2)(X^2 - 3): no prime gives an irreducible reduction,
        // so this exercises the reconstruction path
        let input = p(&[-2, 0, 1]).mul(&p(&[-3, 0, 1]));
        let fac = factor_rational(&input).unwrap();
        assert_eq!(fac.degrees(), vec![2, 2]);
        assert!(fac.factors.iter().any(|(f, _)| *f == p(&[-2, 0, 1])));
    }

    #[test]
    fn monicization_commutes_with_specialization() {
        use crate::poly::parse_multipoly;
        // specialize(monicize(f), t) equals the pointwise monic companion
        // c^(n-1) p(X/c) whenever the leading coefficient c survives, and
        // both specializations factor with the same degree multiset
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let cases = [
            "T1*X^2 + X + 1",
            "2*X^2 + T1*X + 1",
            "(T1 + 1)*X^3 + T1*X - 7",
            "3*X^4 + T1^2*X^2 + T1 + 1",
        ];
        for text in cases {
            let f = parse_multipoly(text).unwrap();
            let h = f.monicize("X").unwrap();
            let n = f.degree_in("X");
            for _ in 0..10 {
                let t = vec![BigInt::from(rng.gen_range(-20i64..=20))];
                let p = f.specialize(&t).unwrap();
                if p.is_zero() || p.degree() < n {
                    continue; // leading coefficient vanished
                }
                let c = p.leading();
                // pointwise monic companion: coefficient of X^(n-k) is c^(k-1) a_(n-k)
                let mut coeffs = vec![BigInt::zero(); n + 1];
                coeffs[n] = BigInt::one();
                let mut pow = BigInt::one();
                for k in 1..=n {
                    coeffs[n - k] = &pow * p.coeff(n - k);
                    if k < n {
                        pow *= &c;
                    }
                }
                let pointwise = UniPoly::new(coeffs);
                let specialized = h.specialize(&t).unwrap();
                assert_eq!(specialized, pointwise, "mismatch for {text} at t = {t:?}");
                assert_eq!(
                    factor_rational(&specialized).unwrap().degrees(),
                    factor_rational(&p).unwrap().degrees(),
                    "splitting behavior differs for {text} at t = {t:?}"
                );
            }
        }
    }

    #[test]
    fn random_products_reassemble_exactly() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..40 {
            let num_factors = rng.gen_range(1..=3);
            let mut input = UniPoly::constant(BigInt::from(rng.gen_range(1..=4)));
            for _ in 0..num_factors {
                let d = rng.gen_range(1..=3);
                let mut coeffs: Vec<i64> = (0..=d).map(|_| rng.gen_range(-8..=8)).collect();
                if coeffs[d] == 0 {
                    coeffs[d] = 1;
                }
                input = input.mul(&UniPoly::from_i64(&coeffs));
            }
            if input.degree() > FACTOR_DEGREE_CAP || input.is_zero() {
                continue;
            }
            let fac = factor_rational(&input).unwrap();
            assert_eq!(fac.product(), input, "reassembly failed for {input}");
        }
    }
}
