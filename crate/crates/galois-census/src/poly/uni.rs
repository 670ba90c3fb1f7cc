//! Dense exact-integer univariate polynomials.
//!
//! Coefficients are stored in ascending order (`coeffs[i]` multiplies `X^i`)
//! with no trailing zeros; the zero polynomial has an empty coefficient list.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// `c * X^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `X^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs: out }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    /// `p(X + c)` by repeated synthetic division.
    pub fn compose_shift(&self, c: &BigInt) -> Self {
        if self.is_zero() || c.is_zero() {
            return self.clone();
        }
        let mut work = self.coeffs.clone();
        let n = work.len();
        let mut out = vec![BigInt::zero(); n];
        for item in out.iter_mut() {
            // divide work by (X - (-c)) keeping the remainder, i.e. evaluate tail at -c
            for i in (0..work.len().saturating_sub(1)).rev() {
                let high = work[i + 1].clone();
                work[i] += high * c;
            }
            *item = work.remove(0);
            if work.is_empty() {
                break;
            }
        }
        Self::new(out)
    }

    /// Greatest common divisor of all coefficients, always nonnegative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Primitive part with positive leading coefficient, plus the signed content,
    /// so that `content * primitive = self`.
    pub fn primitive(&self) -> (BigInt, UniPoly) {
        if self.is_zero() {
            return (BigInt::zero(), UniPoly::zero());
        }
        let mut cont = self.content();
        if self.leading().is_negative() {
            cont = -cont;
        }
        let prim = UniPoly::new(self.coeffs.iter().map(|c| c / &cont).collect());
        (cont, prim)
    }

    /// Exact division over Z; `None` when `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Option<UniPoly> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(UniPoly::zero());
        }
        if self.degree() < other.degree() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dq = self.degree() - other.degree();
        let mut quot = vec![BigInt::zero(); dq + 1];
        let lead = other.leading();
        for k in (0..=dq).rev() {
            let top = rem[k + other.degree()].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                rem[k + j] -= &q * b;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(UniPoly::new(quot))
    }

    /// Remainder of `self` by `other` up to a power of `lead(other)`; enough
    /// for the primitive remainder sequence in `gcd`.
    pub fn pseudo_rem(&self, other: &Self) -> UniPoly {
        assert!(!other.is_zero());
        let d = other.degree();
        let lead = other.leading();
        let mut rem = self.clone();
        while !rem.is_zero() && rem.degree() >= d {
            let k = rem.degree() - d;
            let top = rem.leading();
            rem = rem.scale(&lead).sub(&other.scale(&top).shift_up(k));
        }
        rem
    }

    /// Gcd over Z via the primitive polynomial remainder sequence.
    /// Result is primitive with positive leading coefficient, scaled by the
    /// gcd of the contents.
    pub fn gcd(&self, other: &Self) -> UniPoly {
        if self.is_zero() {
            return other.primitive().1.scale(&self.content().gcd(&other.content())).abs_lead();
        }
        if other.is_zero() {
            return self.primitive().1.scale(&self.content().gcd(&other.content())).abs_lead();
        }
        let cont = self.content().gcd(&other.content());
        let (_, mut a) = self.primitive();
        let (_, mut b) = other.primitive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive().1;
            a = b;
            b = r;
        }
        a.scale(&cont).abs_lead()
    }

    fn abs_lead(self) -> UniPoly {
        if self.leading().is_negative() {
            self.neg()
        } else {
            self
        }
    }

    /// Product of the distinct irreducible factors (the squarefree part),
    /// primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.is_zero() || self.degree() == 0 {
            return UniPoly::one();
        }
        let (_, p) = self.primitive();
        let g = p.gcd(&p.derivative());
        if g.degree() == 0 {
            return p;
        }
        p.div_exact(&g)
            .expect("gcd divides the polynomial")
            .primitive()
            .1
    }

    /// Yun's algorithm: returns `(q_1, 1), (q_2, 2), ...` with each `q_i`
    /// squarefree, primitive, pairwise coprime, and
    /// `self = content * prod q_i^i`.
    pub fn squarefree_decomposition(&self) -> (BigInt, Vec<(UniPoly, usize)>) {
        if self.is_zero() {
            return (BigInt::zero(), vec![]);
        }
        let (cont, p) = self.primitive();
        if p.degree() == 0 {
            return (cont, vec![]);
        }
        let dp = p.derivative();
        let g = p.gcd(&dp);
        if g.degree() == 0 {
            return (cont, vec![(p, 1)]);
        }
        let mut out = vec![];
        let mut w = p.div_exact(&g).unwrap();
        let mut y = dp.div_exact(&g).unwrap();
        let mut i = 1usize;
        loop {
            let z = y.sub(&w.derivative());
            if z.is_zero() {
                if w.degree() > 0 {
                    out.push((w.primitive().1, i));
                }
                break;
            }
            let f = w.gcd(&z);
            if f.degree() > 0 {
                out.push((f.clone(), i));
            }
            w = w.div_exact(&f).unwrap();
            y = z.div_exact(&f).unwrap();
            i += 1;
        }
        // fix signs: each factor is positive-leading; absorb the residue into content
        let mut prod = UniPoly::constant(cont.clone());
        for (q, m) in &out {
            for _ in 0..*m {
                prod = prod.mul(q);
            }
        }
        debug_assert_eq!(&prod, self);
        (cont, out)
    }

    /// Resultant of `self` and `other` via fraction-free Gaussian elimination
    /// of the Sylvester matrix.
    pub fn resultant(&self, other: &Self) -> BigInt {
        if self.is_zero() || other.is_zero() {
            return BigInt::zero();
        }
        let n = self.degree();
        let m = other.degree();
        if n == 0 {
            return num_traits::pow::pow(self.leading(), m);
        }
        if m == 0 {
            return num_traits::pow::pow(other.leading(), n);
        }
        let size = n + m;
        let mut mat = vec![vec![BigInt::zero(); size]; size];
        for (row, item) in mat.iter_mut().enumerate().take(m) {
            for (j, c) in self.coeffs.iter().rev().enumerate() {
                item[row + j] = c.clone();
            }
        }
        for row in 0..n {
            for (j, c) in other.coeffs.iter().rev().enumerate() {
                mat[m + row][row + j] = c.clone();
            }
        }
        bareiss_determinant(mat)
    }

    /// Discriminant with the convention
    /// `disc(p) = (-1)^(n(n-1)/2) * res(p, p') / lead(p)`.
    pub fn discriminant(&self) -> Result<BigInt> {
        let n = self.degree();
        if self.is_zero() || n == 0 {
            return Err(Error::Domain(
                "discriminant requires degree >= 1".into(),
            ));
        }
        if n == 1 {
            return Ok(BigInt::one());
        }
        // closed forms for the common small degrees
        if n == 2 {
            let (a, b, c) = (self.coeff(2), self.coeff(1), self.coeff(0));
            return Ok(&b * &b - BigInt::from(4) * a * c);
        }
        if n == 3 {
            let (a, b, c, d) = (self.coeff(3), self.coeff(2), self.coeff(1), self.coeff(0));
            return Ok(BigInt::from(18) * &a * &b * &c * &d - BigInt::from(4) * &b * &b * &b * &d
                + &b * &b * &c * &c
                - BigInt::from(4) * &a * &c * &c * &c
                - BigInt::from(27) * &a * &a * &d * &d);
        }
        let res = self.resultant(&self.derivative());
        let sign = if (n * (n - 1) / 2).is_multiple_of(2) {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        let (q, r) = (sign * res).div_rem(&self.leading());
        if !r.is_zero() {
            return Err(Error::Inconsistent(
                "leading coefficient does not divide the resultant".into(),
            ));
        }
        Ok(q)
    }

    /// Upper bound `B` (outward-rounded rational) with `|z| <= B` for every
    /// complex root `z`, from the coefficient-ratio root bound
    /// `|z| <= 1/(2^(1/n)-1) * max_k (|a_k| / (|a_0| C(n,k)))^(1/k)`
    /// with `a_0` the leading coefficient.
    pub fn root_bound(&self) -> Result<BigRational> {
        if self.is_zero() {
            return Err(Error::Domain("root bound of the zero polynomial".into()));
        }
        let n = self.degree();
        if n == 0 {
            return Ok(BigRational::zero());
        }
        let lead = self.leading().abs();
        let mut best = BigRational::zero();
        let mut binom = BigInt::one();
        for k in 1..=n {
            // C(n, k) built incrementally
            binom = binom * BigInt::from(n + 1 - k) / BigInt::from(k);
            let a = self.coeff(n - k).abs();
            if a.is_zero() {
                continue;
            }
            let denom = &lead * &binom;
            let r = kth_root_upper(&BigRational::new(a, denom), k as u32);
            if r > best {
                best = r;
            }
        }
        if best.is_zero() {
            return Ok(BigRational::zero());
        }
        // upper bound for 1/(2^(1/n) - 1): lower-bound 2^(1/n) by a dyadic
        let scale_bits = 32u32;
        let d = BigInt::one() << scale_bits;
        let two_dn = BigInt::from(2) * num_traits::pow::pow(d.clone(), n);
        let l = two_dn.nth_root(n as u32); // floor((2 D^n)^(1/n)) <= 2^(1/n) D
        let denom = l - &d;
        debug_assert!(denom.is_positive());
        let factor = BigRational::new(d, denom);
        Ok(factor * best)
    }

    /// All coefficients as `f64` after scaling by a common power of two so the
    /// largest magnitude stays representable (scaling does not move the
    /// roots). f64 covers ~1023 bits, so scaling only kicks in beyond 900.
    pub fn scaled_f64_coeffs(&self) -> Vec<f64> {
        use num_traits::ToPrimitive;
        let max_bits = self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0);
        let shift = max_bits.saturating_sub(900);
        self.coeffs
            .iter()
            .map(|c| {
                let scaled: BigInt = c >> shift;
                scaled.to_f64().unwrap_or(0.0)
            })
            .collect()
    }

    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (pos, (i, c)) in self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .enumerate()
        {
            let mag = c.abs();
            if pos == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                out.push_str(&mag.to_string());
            }
            if i > 0 {
                if show_coeff {
                    out.push('*');
                }
                out.push_str(var);
                if i > 1 {
                    out.push_str(&format!("^{i}"));
                }
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var("X"))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({})", self)
    }
}

/// Fraction-free (Bareiss) determinant; consumes the matrix.
fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !m[r][k].is_zero());
            match swap {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero());
                m[i][j] = q;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Smallest integer `m >= 0` with `m^k >= x` (for `x >= 0`).
pub fn int_root_upper(x: &BigInt, k: u32) -> BigInt {
    debug_assert!(!x.is_negative());
    let r = x.nth_root(k);
    if num_traits::pow::pow(r.clone(), k as usize) >= *x {
        r
    } else {
        r + 1
    }
}

/// Upper bound on `x^(1/k)` for a nonnegative rational `x`:
/// `(a/b)^(1/k) <= ceil((a b^(k-1))^(1/k)) / b`.
pub fn kth_root_upper(x: &BigRational, k: u32) -> BigRational {
    debug_assert!(!x.is_negative());
    if x.is_zero() {
        return BigRational::zero();
    }
    let a = x.numer();
    let b = x.denom();
    let inner = a * num_traits::pow::pow(b.clone(), (k - 1) as usize);
    BigRational::new(int_root_upper(&inner, k), b.clone())
}

/// Upper bound on `sqrt(x)` for a nonnegative rational `x`.
pub fn sqrt_upper(x: &BigRational) -> BigRational {
    kth_root_upper(x, 2)
}

/// Lower bound on `sqrt(x)` for a nonnegative rational `x`.
pub fn sqrt_lower(x: &BigRational) -> BigRational {
    if x.is_zero() {
        return BigRational::zero();
    }
    let inner = x.numer() * x.denom();
    BigRational::new(inner.sqrt(), x.denom().clone())
}

pub fn is_perfect_square(x: &BigInt) -> bool {
    if x.is_negative() {
        return false;
    }
    let r = x.sqrt();
    &(&r * &r) == x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_i64(coeffs)
    }

    #[test]
    fn arithmetic_basics() {
        let a = p(&[-4, 0, 1]); // X^2 - 4
        let b = p(&[2, 1]); // X + 2
        assert_eq!(a.degree(), 2);
        assert_eq!(a.mul(&b), p(&[-8, -4, 2, 1]));
        assert_eq!(a.sub(&a), UniPoly::zero());
        assert_eq!(a.eval(&BigInt::from(3)), BigInt::from(5));
    }

    #[test]
    fn exact_division() {
        let a = p(&[-4, 0, 1]);
        let b = p(&[-2, 1]);
        assert_eq!(a.div_exact(&b), Some(p(&[2, 1])));
        assert_eq!(a.div_exact(&p(&[1, 1])), None);
        // non-monic divisor
        let c = p(&[2, 3]).mul(&p(&[-1, 5]));
        assert_eq!(c.div_exact(&p(&[2, 3])), Some(p(&[-1, 5])));
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = p(&[-1, 1]); // X - 1
        let b = p(&[2, 1]); // X + 2
        let q = a.mul(&a).mul(&b);
        let g = q.gcd(&q.derivative());
        assert_eq!(g, a);
        assert_eq!(q.squarefree_part(), a.mul(&b));

        let (cont, dec) = q.scale(&BigInt::from(-6)).squarefree_decomposition();
        assert_eq!(cont, BigInt::from(-6));
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[0], (b, 1));
        assert_eq!(dec[1], (a, 2));
    }

    #[test]
    fn discriminant_examples() {
        // oracle for quadratics: b^2 - 4ac
        assert_eq!(p(&[-4, 0, 1]).discriminant().unwrap(), BigInt::from(16));
        assert_eq!(p(&[0, 0, 1]).discriminant().unwrap(), BigInt::from(0));
        assert_eq!(p(&[1, 0, 1]).discriminant().unwrap(), BigInt::from(-4));
        assert!(p(&[5]).discriminant().is_err());
        // cubic closed form vs resultant route
        let c = p(&[-1, -3, 0, 1]); // X^3 - 3X - 1, disc 81
        assert_eq!(c.discriminant().unwrap(), BigInt::from(81));
        let via_res = {
            let res = c.resultant(&c.derivative());
            -res // n=3: sign (-1)^3, lead 1
        };
        assert_eq!(via_res, BigInt::from(81));
        assert_eq!(p(&[-2, 0, 0, 1]).discriminant().unwrap(), BigInt::from(-108));
    }

    #[test]
    fn resultant_matches_root_product() {
        // res(p, q) = lead(p)^deg q * prod q(alpha_i)
        let a = p(&[-4, 0, 1]); // roots 2, -2
        let b = p(&[0, 2]); // 2X
        assert_eq!(a.resultant(&b), BigInt::from(-16));
    }

    #[test]
    fn root_bound_examples() {
        let linear = p(&[-5, 1]);
        assert_eq!(linear.root_bound().unwrap(), BigRational::from(BigInt::from(5)));

        let b = p(&[-8, 0, 2]).root_bound().unwrap();
        // exact value (sqrt(2)+1)*2 = 4.8284...
        let lo = BigRational::new(BigInt::from(48284), BigInt::from(10000));
        let hi = BigRational::new(BigInt::from(4832), BigInt::from(1000));
        assert!(b >= lo && b <= hi, "bound {b} outside [{lo}, {hi}]");

        assert_eq!(p(&[0, 0, 0, 0, 1]).root_bound().unwrap(), BigRational::zero());
    }

    #[test]
    fn shift_composition() {
        let a = p(&[0, 0, 1]); // X^2
        let shifted = a.compose_shift(&BigInt::from(3)); // (X+3)^2
        assert_eq!(shifted, p(&[9, 6, 1]));
        let back = shifted.compose_shift(&BigInt::from(-3));
        assert_eq!(back, a);
    }

    #[test]
    fn display_roundtrip_shape() {
        let a = p(&[2, 0, -3, 1]);
        assert_eq!(a.to_string_var("X"), "X^3 - 3*X^2 + 2");
        assert_eq!(UniPoly::zero().to_string_var("T1"), "0");
    }

    #[test]
    fn root_helpers() {
        assert!(is_perfect_square(&BigInt::from(64)));
        assert!(!is_perfect_square(&BigInt::from(8)));
        assert!(!is_perfect_square(&BigInt::from(-4)));
        assert_eq!(int_root_upper(&BigInt::from(8), 2), BigInt::from(3));
        assert_eq!(int_root_upper(&BigInt::from(9), 2), BigInt::from(3));
        let x = BigRational::new(BigInt::from(2), BigInt::one());
        let up = sqrt_upper(&x);
        let dn = sqrt_lower(&x);
        assert!(&up * &up >= x && &dn * &dn <= x);
    }
}
