//! Sparse exact-integer polynomials in the variables `X`, `Z`, `T1..Ts`.
//!
//! Terms map exponent vectors (aligned with the ordered variable list) to
//! nonzero coefficients. The variable order is canonical: the main variable
//! (`X` or `Z`) first, then parameters `T1 < T2 < ...`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

use super::uni::UniPoly;
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

/// Equality is semantic: variables unused by either side do not matter.
impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        let (a, b) = self.aligned(other);
        a.terms == b.terms
    }
}

impl Eq for MultiPoly {}

/// Canonical ordering of variable names: main variables before parameters,
/// parameters by index, anything else alphabetically after.
fn var_rank(name: &str) -> (u8, u32, String) {
    match name {
        "X" => (0, 0, String::new()),
        "Z" => (0, 1, String::new()),
        _ => {
            if let Some(rest) = name.strip_prefix('T') {
                if let Ok(idx) = rest.parse::<u32>() {
                    return (1, idx, String::new());
                }
            }
            (2, 0, name.to_string())
        }
    }
}

pub fn is_param_name(name: &str) -> bool {
    var_rank(name).0 == 1
}

impl MultiPoly {
    pub fn zero(vars: Vec<String>) -> Self {
        let mut p = MultiPoly {
            vars,
            terms: BTreeMap::new(),
        };
        p.canonicalize_vars();
        p
    }

    pub fn constant(vars: Vec<String>, c: BigInt) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; p.vars.len()], c);
        }
        p
    }

    pub fn var(vars: Vec<String>, name: &str) -> Self {
        let mut p = Self::zero(vars);
        let i = p.var_index(name).expect("variable not in list");
        let mut exp = vec![0; p.vars.len()];
        exp[i] = 1;
        p.terms.insert(exp, BigInt::one());
        p
    }

    pub fn from_terms(vars: Vec<String>, terms: Vec<(Vec<u32>, BigInt)>) -> Self {
        let mut p = MultiPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        };
        for (exp, c) in terms {
            assert_eq!(exp.len(), vars.len(), "exponent arity mismatch");
            p.add_term_raw(exp, c);
        }
        p.canonicalize_vars();
        p
    }

    fn canonicalize_vars(&mut self) {
        let mut order: Vec<usize> = (0..self.vars.len()).collect();
        order.sort_by_key(|&i| var_rank(&self.vars[i]));
        if order.iter().enumerate().all(|(a, &b)| a == b) {
            return;
        }
        let new_vars: Vec<String> = order.iter().map(|&i| self.vars[i].clone()).collect();
        let mut new_terms = BTreeMap::new();
        for (exp, c) in std::mem::take(&mut self.terms) {
            let new_exp: Vec<u32> = order.iter().map(|&i| exp[i]).collect();
            new_terms.insert(new_exp, c);
        }
        self.vars = new_vars;
        self.terms = new_terms;
    }

    fn add_term_raw(&mut self, exp: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Degree in one variable (0 for absent variables or the zero polynomial).
    pub fn degree_in(&self, name: &str) -> usize {
        match self.var_index(name) {
            None => 0,
            Some(i) => self
                .terms
                .keys()
                .map(|e| e[i] as usize)
                .max()
                .unwrap_or(0),
        }
    }

    /// The main (non-parameter) variable, if exactly one occurs with positive degree.
    pub fn main_var(&self) -> Option<&str> {
        let mut found = None;
        for (i, v) in self.vars.iter().enumerate() {
            if is_param_name(v) {
                continue;
            }
            if self.terms.keys().any(|e| e[i] > 0) {
                if found.is_some() {
                    return None;
                }
                found = Some(v.as_str());
            }
        }
        found
    }

    /// Parameter variables actually present in the variable list, in order.
    pub fn param_vars(&self) -> Vec<String> {
        self.vars
            .iter()
            .filter(|v| is_param_name(v))
            .cloned()
            .collect()
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c))
                .collect(),
        }
    }

    /// Align two polynomials over the union of their variable lists.
    fn aligned(&self, other: &Self) -> (MultiPoly, MultiPoly) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let mut vars: Vec<String> = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars.sort_by_key(|v| var_rank(v));
        (self.embed(&vars), other.embed(&vars))
    }

    fn embed(&self, vars: &[String]) -> MultiPoly {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("superset"))
            .collect();
        let mut terms = BTreeMap::new();
        for (exp, c) in &self.terms {
            let mut new_exp = vec![0u32; vars.len()];
            for (i, &e) in exp.iter().enumerate() {
                new_exp[map[i]] = e;
            }
            terms.insert(new_exp, c.clone());
        }
        MultiPoly {
            vars: vars.to_vec(),
            terms,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = self.aligned(other);
        for (exp, c) in b.terms {
            a.add_term_raw(exp, c);
        }
        a
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        let mut out = MultiPoly {
            vars: a.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term_raw(exp, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = MultiPoly::constant(self.vars.clone(), BigInt::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(self.vars.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.clone(), a * c))
                .collect(),
        }
    }

    /// Coefficient of `main^k` as a polynomial in the remaining variables.
    pub fn coeff_in(&self, main: &str, k: u32) -> MultiPoly {
        let i = match self.var_index(main) {
            Some(i) => i,
            None => {
                return if k == 0 {
                    self.clone()
                } else {
                    MultiPoly::zero(self.vars.clone())
                }
            }
        };
        let mut vars = self.vars.clone();
        vars.remove(i);
        let mut out = MultiPoly {
            vars,
            terms: BTreeMap::new(),
        };
        for (exp, c) in &self.terms {
            if exp[i] == k {
                let mut e = exp.clone();
                e.remove(i);
                out.add_term_raw(e, c.clone());
            }
        }
        out
    }

    /// Assemble `sum coeffs[k] * main^k` from per-power coefficient polynomials.
    pub fn assemble(main: &str, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut vars = vec![main.to_string()];
        for c in coeffs {
            for v in c.vars() {
                if !vars.contains(v) {
                    vars.push(v.clone());
                }
            }
        }
        let mut acc = MultiPoly::zero(vars.clone());
        let main_poly = MultiPoly::var(vars.clone(), main);
        for (k, c) in coeffs.iter().enumerate() {
            acc = acc.add(&c.mul(&main_poly.pow(k as u32)));
        }
        acc
    }

    /// Lex-greatest term with exponents aligned to the given variable order.
    pub fn leading_term_aligned(&self, vars: &[String]) -> Option<(Vec<u32>, BigInt)> {
        let positions: Vec<Option<usize>> = vars.iter().map(|v| self.var_index(v)).collect();
        let mut best: Option<(Vec<u32>, BigInt)> = None;
        for (exp, c) in &self.terms {
            let aligned: Vec<u32> = positions
                .iter()
                .map(|p| p.map_or(0, |i| exp[i]))
                .collect();
            match &best {
                Some((b, _)) if *b >= aligned => {}
                _ => best = Some((aligned, c.clone())),
            }
        }
        best
    }

    /// Substitute a polynomial for one variable.
    pub fn substitute(&self, name: &str, value: &MultiPoly) -> MultiPoly {
        let i = match self.var_index(name) {
            Some(i) => i,
            None => return self.clone(),
        };
        let mut rest_vars = self.vars.clone();
        rest_vars.remove(i);
        let mut out = MultiPoly::zero(rest_vars.clone());
        for (exp, c) in &self.terms {
            let mut e = exp.clone();
            let k = e.remove(i);
            let base = MultiPoly::from_terms(rest_vars.clone(), vec![(e, c.clone())]);
            out = out.add(&base.mul(&value.pow(k)));
        }
        out
    }

    /// Substitute integers for all parameter variables, leaving a univariate
    /// polynomial in the single remaining main variable.
    pub fn specialize(&self, t: &[BigInt]) -> Result<UniPoly> {
        let params = self.param_vars();
        if t.len() != params.len() {
            return Err(Error::Arity {
                expected: params.len(),
                got: t.len(),
            });
        }
        let mains: Vec<&String> = self
            .vars
            .iter()
            .filter(|v| !is_param_name(v))
            .collect();
        if mains.len() != 1 {
            return Err(Error::Domain(format!(
                "specialization needs exactly one non-parameter variable, found {}",
                mains.len()
            )));
        }
        let main_idx = self.var_index(mains[0]).unwrap();
        let param_idx: Vec<usize> = params.iter().map(|v| self.var_index(v).unwrap()).collect();
        let mut coeffs = vec![BigInt::zero(); self.degree_in(mains[0]) + 1];
        for (exp, c) in &self.terms {
            let mut val = c.clone();
            for (pi, &vi) in param_idx.iter().enumerate() {
                if exp[vi] > 0 {
                    val *= num_traits::pow::pow(t[pi].clone(), exp[vi] as usize);
                }
            }
            coeffs[exp[main_idx] as usize] += val;
        }
        Ok(UniPoly::new(coeffs))
    }

    /// Convert a polynomial without parameter variables into a `UniPoly`.
    pub fn to_unipoly(&self, var: &str) -> Result<UniPoly> {
        for v in &self.vars {
            if v != var && self.degree_in(v) > 0 {
                return Err(Error::Domain(format!(
                    "polynomial is not univariate in {var}: also uses {v}"
                )));
            }
        }
        let mut coeffs = vec![BigInt::zero(); self.degree_in(var) + 1];
        match self.var_index(var) {
            Some(i) => {
                for (exp, c) in &self.terms {
                    coeffs[exp[i] as usize] += c.clone();
                }
            }
            None => {
                for c in self.terms.values() {
                    coeffs[0] += c.clone();
                }
            }
        }
        Ok(UniPoly::new(coeffs))
    }

    pub fn from_unipoly(p: &UniPoly, var: &str) -> MultiPoly {
        let vars = vec![var.to_string()];
        let terms = p
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (vec![i as u32], c.clone()))
            .collect();
        MultiPoly::from_terms(vars, terms)
    }

    pub fn is_monic_in(&self, main: &str) -> bool {
        let n = self.degree_in(main) as u32;
        if n == 0 {
            return false;
        }
        let lead = self.coeff_in(main, n);
        lead.num_terms() == 1 && lead.terms().next().is_some_and(|(e, c)| {
            e.iter().all(|&x| x == 0) && c.is_one()
        })
    }

    /// The monic companion `X^n + g1 X^(n-1) + g0 g2 X^(n-2) + ... + g0^(n-1) g_n`
    /// of `f = g0 X^n + g1 X^(n-1) + ... + g_n`; shares the splitting field with
    /// `f` at every specialization where `g0` does not vanish.
    pub fn monicize(&self, main: &str) -> Result<MultiPoly> {
        let n = self.degree_in(main);
        if n == 0 {
            return Err(Error::Domain(format!("polynomial is constant in {main}")));
        }
        let g0 = self.coeff_in(main, n as u32);
        let mut coeffs = vec![MultiPoly::zero(g0.vars().to_vec()); n + 1];
        coeffs[n] = MultiPoly::constant(g0.vars().to_vec(), BigInt::one());
        let mut g0_pow = MultiPoly::constant(g0.vars().to_vec(), BigInt::one());
        for k in 1..=n {
            // coefficient of main^(n-k) is g0^(k-1) * g_k
            let gk = self.coeff_in(main, (n - k) as u32);
            coeffs[n - k] = g0_pow.mul(&gk);
            if k < n {
                g0_pow = g0_pow.mul(&g0);
            }
        }
        Ok(MultiPoly::assemble(main, &coeffs))
    }

    /// Canonical text form: monomials in descending exponent order, explicit
    /// coefficients and `*` separators, `^` powers.
    fn fmt_canonical(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (pos, (exp, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if pos == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const = exp.iter().all(|&e| e == 0);
            let show_coeff = !mag.is_one() || is_const;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            // parameters print before the main variable: `T1*X^2`, not `X^2*T1`
            let mut order: Vec<usize> = (0..self.vars.len()).collect();
            order.sort_by_key(|&i| (!is_param_name(&self.vars[i]), i));
            let mut first_var = !show_coeff;
            for &i in &order {
                let e = exp[i];
                if e == 0 {
                    continue;
                }
                if !first_var {
                    write!(f, "*")?;
                }
                first_var = false;
                write!(f, "{}", self.vars[i])?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_canonical(f)
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_multipoly;

    fn mp(s: &str) -> MultiPoly {
        parse_multipoly(s).unwrap()
    }

    #[test]
    fn specialize_examples() {
        let p = mp("X^2 - T1");
        assert_eq!(
            p.specialize(&[BigInt::from(4)]).unwrap(),
            UniPoly::from_i64(&[-4, 0, 1])
        );
        let q = mp("X^5 - T1");
        assert_eq!(
            q.specialize(&[BigInt::from(0)]).unwrap(),
            UniPoly::from_i64(&[0, 0, 0, 0, 0, 1])
        );
        // leading term vanishes: degree drops
        let r = mp("T1*X^2 + X");
        let s = r.specialize(&[BigInt::from(0)]).unwrap();
        assert_eq!(s, UniPoly::from_i64(&[0, 1]));
        assert_eq!(s.degree(), 1);
        // wrong arity
        assert!(p.specialize(&[]).is_err());
        assert!(p.specialize(&[BigInt::one(), BigInt::one()]).is_err());
    }

    #[test]
    fn monicize_examples() {
        let already = mp("X^2 - T1");
        assert_eq!(already.monicize("X").unwrap(), already);

        let f = mp("2*X^2 + T1*X + 1");
        assert_eq!(f.monicize("X").unwrap(), mp("X^2 + T1*X + 2"));

        let linear = mp("T1*X + 1");
        assert_eq!(linear.monicize("X").unwrap(), mp("X + 1"));

        assert!(mp("T1 + 1").monicize("X").is_err());
    }

    #[test]
    fn monicize_defining_identity() {
        // h(g0 * Y) = g0^(n-1) * f(Y) with Y a fresh main variable
        let f = mp("3*T1*X^3 + T1^2*X + 5");
        let h = f.monicize("X").unwrap();
        let g0 = f.coeff_in("X", 3);
        let y = MultiPoly::var(vec!["X".into(), "T1".into()], "X");
        let lhs = h.substitute("X", &g0.mul(&y));
        let rhs = g0.pow(2).mul(&f);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn coeff_extraction_and_assemble() {
        let f = mp("2*X^2 + T1*X + 1 - T2^3");
        assert_eq!(f.coeff_in("X", 2), mp("2"));
        assert_eq!(f.coeff_in("X", 1), mp("T1"));
        assert_eq!(f.coeff_in("X", 0), mp("1 - T2^3"));
        let coeffs: Vec<MultiPoly> = (0..=2).map(|k| f.coeff_in("X", k)).collect();
        assert_eq!(MultiPoly::assemble("X", &coeffs), f);
    }

    #[test]
    fn canonical_display() {
        let f = mp("T1*X + X^2 - 3");
        assert_eq!(f.to_string(), "X^2 + T1*X - 3");
        let g = mp("Z^2 - T1^3");
        assert_eq!(g.to_string(), "Z^2 - T1^3");
    }

    #[test]
    fn substitution_shift() {
        let f = mp("X^2 - T1");
        let shift = mp("X - 2");
        let shifted = f.substitute("X", &shift);
        assert_eq!(shifted, mp("X^2 - 4*X + 4 - T1"));
    }
}
