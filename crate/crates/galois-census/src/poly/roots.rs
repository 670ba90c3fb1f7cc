//! Certified complex root enclosures.
//!
//! The pipeline is: simultaneous Aberth iteration in `f64` for starting
//! points, Newton refinement in dyadic rational arithmetic, then an exact
//! a-posteriori certificate. For a point `z` with `p'(z) != 0`, the disk
//! around `z` of radius `n * |p(z)/p'(z)|` always contains a root; if the `n`
//! disks are pairwise disjoint each contains exactly one root.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::uni::{sqrt_lower, sqrt_upper, UniPoly};
use crate::error::{Error, Result};

/// Exact complex rational.
#[derive(Clone, PartialEq, Eq)]
pub struct CRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl CRat {
    pub fn zero() -> Self {
        CRat {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn from_rational(re: BigRational) -> Self {
        CRat {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn from_f64(re: f64, im: f64) -> Option<Self> {
        Some(CRat {
            re: BigRational::from_float(re)?,
            im: BigRational::from_float(im)?,
        })
    }

    pub fn add(&self, o: &Self) -> Self {
        CRat {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        CRat {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        CRat {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        let d = o.norm_sqr();
        if d.is_zero() {
            return None;
        }
        let conj_mul = CRat {
            re: &self.re * &o.re + &self.im * &o.im,
            im: &self.im * &o.re - &self.re * &o.im,
        };
        Some(CRat {
            re: conj_mul.re / &d,
            im: conj_mul.im / &d,
        })
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Round both parts to denominator `2^bits`.
    pub fn round_dyadic(&self, bits: u32) -> Self {
        CRat {
            re: round_dyadic(&self.re, bits),
            im: round_dyadic(&self.im, bits),
        }
    }
}

pub fn round_dyadic(x: &BigRational, bits: u32) -> BigRational {
    let scale = BigInt::one() << bits;
    let scaled = x * BigRational::from(scale.clone());
    BigRational::new(scaled.round().to_integer(), scale)
}

/// Smallest dyadic with denominator `2^bits` that is `>= x`.
pub fn ceil_dyadic(x: &BigRational, bits: u32) -> BigRational {
    let scale = BigInt::one() << bits;
    let scaled = x * BigRational::from(scale.clone());
    BigRational::new(scaled.ceil().to_integer(), scale)
}

/// A complex disk guaranteed to contain the value it stands for. Arithmetic
/// on balls widens the radius so a true enclosure is never shrunk.
#[derive(Clone)]
pub struct ComplexBall {
    pub center: CRat,
    pub rad: BigRational,
}

impl ComplexBall {
    pub fn exact(center: CRat) -> Self {
        ComplexBall {
            center,
            rad: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        Self::exact(CRat::from_rational(BigRational::one()))
    }

    pub fn add(&self, o: &Self) -> Self {
        ComplexBall {
            center: self.center.add(&o.center),
            rad: &self.rad + &o.rad,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        ComplexBall {
            center: self.center.sub(&o.center),
            rad: &self.rad + &o.rad,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let rad = self.modulus_ub() * &o.rad
            + o.center_modulus_ub() * &self.rad;
        ComplexBall {
            center: self.center.mul(&o.center),
            rad,
        }
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        let cr = BigRational::from(c.clone());
        ComplexBall {
            center: CRat {
                re: &self.center.re * &cr,
                im: &self.center.im * &cr,
            },
            rad: &self.rad * cr.abs(),
        }
    }

    /// Shift the center by an integer (radius unchanged).
    pub fn add_int(&self, c: &BigInt) -> Self {
        ComplexBall {
            center: CRat {
                re: &self.center.re + BigRational::from(c.clone()),
                im: self.center.im.clone(),
            },
            rad: self.rad.clone(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = ComplexBall::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Round the center to denominator `2^bits` (radius widened by the
    /// rounding error and itself rounded up to the same grid). Keeps long
    /// products from blowing up the exact representation while staying a
    /// true enclosure.
    pub fn round_to(&self, bits: u32) -> Self {
        let err = BigRational::new(BigInt::one(), BigInt::one() << bits);
        ComplexBall {
            center: self.center.round_dyadic(bits),
            rad: ceil_dyadic(&(&self.rad + err), bits),
        }
    }

    pub fn mul_r(&self, o: &Self, bits: u32) -> Self {
        self.mul(o).round_to(bits)
    }

    pub fn pow_r(&self, mut k: u32, bits: u32) -> Self {
        let mut base = self.clone();
        let mut acc = ComplexBall::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_r(&base, bits);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_r(&base, bits);
            }
        }
        acc
    }

    fn center_modulus_ub(&self) -> BigRational {
        sqrt_upper(&self.center.norm_sqr())
    }

    pub fn modulus_ub(&self) -> BigRational {
        self.center_modulus_ub() + &self.rad
    }

    pub fn modulus_lb(&self) -> BigRational {
        let lb = sqrt_lower(&self.center.norm_sqr()) - &self.rad;
        if lb.is_negative() {
            BigRational::zero()
        } else {
            lb
        }
    }

    /// True when the two disks are provably disjoint.
    pub fn is_disjoint(&self, o: &Self) -> bool {
        let d = self.center.sub(&o.center).norm_sqr();
        let r = &self.rad + &o.rad;
        d > &r * &r
    }

    /// The unique integer in the ball, when the ball pins one down
    /// (real line crossed, radius < 1/2, nearest integer inside).
    pub fn round_to_integer(&self) -> Option<BigInt> {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        if self.rad >= half || self.center.im.abs() > self.rad {
            return None;
        }
        let k = self.center.re.round().to_integer();
        if (&self.center.re - BigRational::from(k.clone())).abs() <= self.rad {
            Some(k)
        } else {
            None
        }
    }

    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(
            self.center.re.to_f64().unwrap_or(f64::NAN),
            self.center.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl std::fmt::Debug for ComplexBall {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Ball({} + {}i ± {})",
            self.center.re.to_f64().unwrap_or(f64::NAN),
            self.center.im.to_f64().unwrap_or(f64::NAN),
            self.rad.to_f64().unwrap_or(f64::NAN)
        )
    }
}

/// Ascending ball coefficients of `prod (Y - r_i)` over the given root balls.
pub fn poly_from_root_balls(roots: &[ComplexBall]) -> Vec<ComplexBall> {
    let mut coeffs = vec![ComplexBall::one()];
    for r in roots {
        let mut next = vec![ComplexBall::exact(CRat::zero()); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] = next[i + 1].add(c);
            next[i] = next[i].sub(&c.mul(r));
        }
        coeffs = next;
    }
    coeffs
}

/// As `poly_from_root_balls`, with dyadic rounding at the given working
/// precision after every product.
pub fn poly_from_root_balls_rounded(roots: &[ComplexBall], bits: u32) -> Vec<ComplexBall> {
    let mut coeffs = vec![ComplexBall::one()];
    for r in roots {
        let mut next = vec![ComplexBall::exact(CRat::zero()); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] = next[i + 1].add(c);
            next[i] = next[i].sub(&c.mul_r(r, bits));
        }
        coeffs = next;
    }
    coeffs
}

fn eval_crat(p: &UniPoly, z: &CRat) -> CRat {
    let mut acc = CRat::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(z);
        acc.re += BigRational::from(c.clone());
    }
    acc
}

fn eval_c64(c: &[f64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        acc = acc * z + a;
    }
    acc
}

fn eval_c64_deriv(c: &[f64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for i in (1..c.len()).rev() {
        acc = acc * z + c[i] * i as f64;
    }
    acc
}

/// Simultaneous (Aberth-Ehrlich) iteration in f64. Returns approximations in
/// arbitrary order, or `None` when the iteration fails to settle.
fn aberth_f64(coeffs: &[f64], attempt: u64) -> Option<Vec<Complex64>> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    if !lead.is_finite() || lead == 0.0 {
        return None;
    }
    let mut radius: f64 = 0.0;
    for (k, &c) in coeffs.iter().enumerate().take(n) {
        if c != 0.0 {
            let r = (c / lead).abs().powf(1.0 / (n - k) as f64);
            radius = radius.max(r);
        }
    }
    radius = 2.0 * radius.max(0.5);

    // deterministic pseudo-random jitter so retries take fresh paths
    let mut state = attempt.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(12345);
    let mut jitter = || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        ((state >> 11) as f64 / (1u64 << 53) as f64) - 0.5
    };

    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64
                + 0.3967 + 0.2 * jitter();
            let r = radius * (0.6 + 0.25 * (k as f64 / n as f64) + 0.1 * jitter().abs());
            Complex64::new(r * angle.cos(), r * angle.sin())
        })
        .collect();

    let tol = 1e-13;
    for _ in 0..500 {
        let mut max_step: f64 = 0.0;
        for i in 0..n {
            let pv = eval_c64(coeffs, z[i]);
            let dv = eval_c64_deriv(coeffs, z[i]);
            if !pv.is_finite() || !dv.is_finite() {
                return None;
            }
            if pv.norm() == 0.0 {
                continue;
            }
            if dv.norm() == 0.0 {
                let nudge = 1e-4 * (1.0 + z[i].norm());
                z[i] += Complex64::new(nudge, 1e-4);
                max_step = f64::INFINITY;
                continue;
            }
            let w = pv / dv;
            let mut s = Complex64::new(0.0, 0.0);
            for (j, zj) in z.iter().enumerate() {
                if j != i {
                    let d = z[i] - zj;
                    if d.norm() == 0.0 {
                        s = Complex64::new(f64::NAN, 0.0);
                        break;
                    }
                    s += Complex64::new(1.0, 0.0) / d;
                }
            }
            if !s.is_finite() {
                let nudge = 1e-4 * (1.0 + z[i].norm());
                z[i] += Complex64::new(nudge, -1e-4);
                max_step = f64::INFINITY;
                continue;
            }
            let denom = Complex64::new(1.0, 0.0) - w * s;
            let step = if denom.norm() < 1e-300 { w } else { w / denom };
            z[i] -= step;
            let rel = step.norm() / (1.0 + z[i].norm());
            max_step = max_step.max(rel);
        }
        if max_step <= tol {
            return Some(z);
        }
    }
    None
}

/// Exact certificate radius `n * |p(z)/p'(z)|` (upper bound); `None` when
/// `p'(z) = 0`.
fn certificate_radius(p: &UniPoly, dp: &UniPoly, z: &CRat, n: usize) -> Option<BigRational> {
    let pv = eval_crat(p, z);
    if pv.is_zero() {
        return Some(BigRational::zero());
    }
    let dv = eval_crat(dp, z);
    let dn = dv.norm_sqr();
    if dn.is_zero() {
        return None;
    }
    let ratio = pv.norm_sqr() / dn;
    Some(BigRational::from(BigInt::from(n)) * sqrt_upper(&ratio))
}

fn newton_refine(p: &UniPoly, dp: &UniPoly, start: &CRat, work_bits: u32) -> CRat {
    let mut z = start.round_dyadic(work_bits);
    let stop = BigRational::new(BigInt::one(), BigInt::one() << (work_bits - 8));
    for _ in 0..40 {
        let pv = eval_crat(p, &z);
        if pv.is_zero() {
            return z;
        }
        let dv = eval_crat(dp, &z);
        let step = match pv.div(&dv) {
            Some(s) => s,
            None => return z,
        };
        z = z.sub(&step).round_dyadic(work_bits);
        let scale = BigRational::one() + sqrt_upper(&z.norm_sqr());
        if sqrt_upper(&step.norm_sqr()) <= &stop * scale {
            break;
        }
    }
    z
}

/// Certified enclosures of all roots of a squarefree polynomial: `n` pairwise
/// disjoint balls, each containing exactly one root, with radius at most
/// `2^-prec` (absolute). Fails with a raise-precision signal when the
/// iteration cannot be certified.
pub fn complex_roots(p: &UniPoly, prec_bits: u32) -> Result<Vec<ComplexBall>> {
    if p.is_zero() {
        return Err(Error::Domain("roots of the zero polynomial".into()));
    }
    let n = p.degree();
    if n == 0 {
        return Err(Error::Domain("roots of a constant polynomial".into()));
    }
    if p.gcd(&p.derivative()).degree() > 0 {
        return Err(Error::Domain(
            "root finding requires squarefree input; deflate first".into(),
        ));
    }
    if n == 1 {
        let root = BigRational::new(-p.coeff(0), p.coeff(1));
        return Ok(vec![ComplexBall::exact(CRat::from_rational(root))]);
    }

    let bound = p.root_bound()?;
    let bound_bits = (bound.to_integer() + BigInt::from(2)).bits() as u32;
    let dp = p.derivative();
    let target = BigRational::new(BigInt::one(), BigInt::one() << prec_bits);
    let coeffs_f64 = p.scaled_f64_coeffs();

    for attempt in 0..8u64 {
        let work_bits = prec_bits + 2 * bound_bits + 64 + 32 * attempt as u32;
        let approx = match aberth_f64(&coeffs_f64, attempt) {
            Some(a) => a,
            None => continue,
        };
        let mut balls = Vec::with_capacity(n);
        let mut ok = true;
        for a in &approx {
            let seed = match CRat::from_f64(a.re, a.im) {
                Some(s) => s,
                None => {
                    ok = false;
                    break;
                }
            };
            let z = newton_refine(p, &dp, &seed, work_bits);
            match certificate_radius(p, &dp, &z, n) {
                Some(rad) if rad <= target => balls.push(ComplexBall {
                    center: z,
                    rad,
                }),
                _ => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        let disjoint = (0..n).all(|i| (i + 1..n).all(|j| balls[i].is_disjoint(&balls[j])));
        if disjoint {
            return Ok(balls);
        }
    }
    Err(Error::Precision(format!(
        "could not certify {n} disjoint root enclosures at {prec_bits} bits; raise precision",
        n = n
    )))
}

/// Root enclosures of an arbitrary nonzero polynomial, with multiplicities,
/// via the squarefree decomposition.
pub fn roots_with_multiplicity(
    p: &UniPoly,
    prec_bits: u32,
) -> Result<Vec<(ComplexBall, usize)>> {
    if p.is_zero() {
        return Err(Error::Domain("roots of the zero polynomial".into()));
    }
    let (_, parts) = p.squarefree_decomposition();
    let mut out = vec![];
    for (q, mult) in parts {
        if q.degree() == 0 {
            continue;
        }
        for ball in complex_roots(&q, prec_bits)? {
            out.push((ball, mult));
        }
    }
    Ok(out)
}

/// Exactly the integer roots of a nonzero polynomial: real root enclosures
/// within the coefficient root bound are rounded to the nearest integer and
/// verified by exact evaluation.
pub fn integer_roots(p: &UniPoly) -> Result<Vec<BigInt>> {
    if p.is_zero() {
        return Err(Error::Domain("integer roots of the zero polynomial".into()));
    }
    let mut found = vec![];
    let mut q = p.clone();
    // strip roots at zero
    let mut k = 0;
    while k < q.coeffs().len() && q.coeffs()[k].is_zero() {
        k += 1;
    }
    if k > 0 {
        found.push(BigInt::zero());
        q = UniPoly::new(q.coeffs()[k..].to_vec());
    }
    if q.degree() >= 1 {
        let sf = q.squarefree_part();
        for ball in complex_roots(&sf, 32)? {
            if let Some(z) = ball.round_to_integer() {
                if p.eval(&z).is_zero() && !found.contains(&z) {
                    found.push(z);
                }
            }
        }
    }
    found.sort();
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_i64(coeffs)
    }

    #[test]
    fn known_quadratic_roots() {
        let balls = complex_roots(&p(&[-4, 0, 1]), 128).unwrap();
        assert_eq!(balls.len(), 2);
        let tol = BigRational::new(BigInt::one(), BigInt::one() << 128);
        for b in &balls {
            assert!(b.rad <= tol);
            let z = b.to_complex64();
            assert!((z.re.abs() - 2.0).abs() < 1e-12 && z.im.abs() < 1e-12);
        }
        assert!(balls[0].is_disjoint(&balls[1]));
    }

    #[test]
    fn imaginary_roots() {
        let balls = complex_roots(&p(&[1, 0, 1]), 64).unwrap();
        assert_eq!(balls.len(), 2);
        for b in &balls {
            let z = b.to_complex64();
            assert!(z.re.abs() < 1e-12 && (z.im.abs() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn quintic_against_radial_oracle() {
        // roots of X^5 - 2 are 2^(1/5) e^(2 pi i k/5)
        let balls = complex_roots(&p(&[-2, 0, 0, 0, 0, 1]), 96).unwrap();
        assert_eq!(balls.len(), 5);
        let r = 2f64.powf(0.2);
        let mut matched = [false; 5];
        for b in &balls {
            let z = b.to_complex64();
            let hit = (0..5).find(|&k| {
                let angle = 2.0 * std::f64::consts::PI * k as f64 / 5.0;
                let oracle = Complex64::new(r * angle.cos(), r * angle.sin());
                (z - oracle).norm() < 1e-10
            });
            let k = hit.expect("enclosure far from every oracle root");
            assert!(!matched[k], "two enclosures matched one oracle root");
            matched[k] = true;
        }
        for i in 0..5 {
            for j in i + 1..5 {
                assert!(balls[i].is_disjoint(&balls[j]));
            }
        }
    }

    #[test]
    fn integer_root_examples() {
        assert_eq!(
            integer_roots(&p(&[-64, 0, 1])).unwrap(),
            vec![BigInt::from(-8), BigInt::from(8)]
        );
        assert_eq!(integer_roots(&p(&[-8, 0, 1])).unwrap(), vec![]);
        assert_eq!(
            integer_roots(&p(&[-27, 0, 0, 1])).unwrap(),
            vec![BigInt::from(3)]
        );
        // multiple root and zero root
        let q = p(&[0, 0, 1]).mul(&p(&[-3, 1])).mul(&p(&[-3, 1]));
        assert_eq!(
            integer_roots(&q).unwrap(),
            vec![BigInt::from(0), BigInt::from(3)]
        );
    }

    #[test]
    fn ball_arithmetic_enclosures() {
        let mk = |re: i64, im: i64, rad_num: i64| ComplexBall {
            center: CRat {
                re: BigRational::from(BigInt::from(re)),
                im: BigRational::from(BigInt::from(im)),
            },
            rad: BigRational::new(BigInt::from(rad_num), BigInt::from(100)),
        };
        let a = mk(3, 1, 5);
        let b = mk(-2, 4, 3);
        let prod = a.mul(&b);
        // center must be the exact product
        assert_eq!(prod.center.re, BigRational::from(BigInt::from(-10)));
        assert_eq!(prod.center.im, BigRational::from(BigInt::from(10)));
        // radius dominates |a| rb + |b| ra
        let min_rad = a.modulus_lb() * &b.rad + b.modulus_lb() * &a.rad;
        assert!(prod.rad >= min_rad);

        let sq = a.pow(2);
        assert_eq!(sq.center.re, BigRational::from(BigInt::from(8)));
        assert_eq!(sq.center.im, BigRational::from(BigInt::from(6)));
    }

    #[test]
    fn ball_product_polynomial() {
        let one = ComplexBall::exact(CRat::from_rational(BigRational::from(BigInt::from(1))));
        let two = ComplexBall::exact(CRat::from_rational(BigRational::from(BigInt::from(2))));
        let coeffs = poly_from_root_balls(&[one, two]);
        // (Y-1)(Y-2) = Y^2 - 3Y + 2
        assert_eq!(coeffs.len(), 3);
        assert_eq!(coeffs[0].center.re, BigRational::from(BigInt::from(2)));
        assert_eq!(coeffs[1].center.re, BigRational::from(BigInt::from(-3)));
        assert_eq!(coeffs[2].center.re, BigRational::from(BigInt::from(1)));
    }

    #[test]
    fn rounding_into_integers() {
        let b = ComplexBall {
            center: CRat {
                re: BigRational::new(BigInt::from(799), BigInt::from(100)),
                im: BigRational::new(BigInt::from(1), BigInt::from(100)),
            },
            rad: BigRational::new(BigInt::from(2), BigInt::from(100)),
        };
        assert_eq!(b.round_to_integer(), Some(BigInt::from(8)));
        let far = ComplexBall {
            center: CRat {
                re: BigRational::new(BigInt::from(75), BigInt::from(10)),
                im: BigRational::zero(),
            },
            rad: BigRational::new(BigInt::from(1), BigInt::from(10)),
        };
        assert_eq!(far.round_to_integer(), None);
    }
}
