//! Exact resolvent construction through the fundamental theorem of symmetric
//! functions: expand `prod_i (Z - z_i)` symbolically in root variables,
//! rewrite each coefficient in the elementary symmetric polynomials, and
//! substitute them by the (signed) coefficients of `f`. Exponential in the
//! degree; intended as an independent oracle for small cases.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Resolvent, ResolventParams};
use crate::error::{Error, Result};
use crate::perm::PermGroup;
use crate::poly::MultiPoly;

fn root_var(i: usize) -> String {
    format!("A{}", i + 1)
}

/// Elementary symmetric polynomial `e_k` in the root variables, expanded.
fn elementary_sym(n: usize, k: usize) -> MultiPoly {
    let vars: Vec<String> = (0..n).map(root_var).collect();
    let mut acc = MultiPoly::zero(vars.clone());
    let mut subset = vec![];
    fn rec(
        n: usize,
        k: usize,
        start: usize,
        subset: &mut Vec<usize>,
        vars: &[String],
        acc: &mut MultiPoly,
    ) {
        if subset.len() == k {
            let mut exp = vec![0u32; n];
            for &i in subset.iter() {
                exp[i] = 1;
            }
            *acc = acc.add(&MultiPoly::from_terms(
                vars.to_vec(),
                vec![(exp, BigInt::one())],
            ));
            return;
        }
        for i in start..n {
            subset.push(i);
            rec(n, k, i + 1, subset, vars, acc);
            subset.pop();
        }
    }
    rec(n, k, 0, &mut subset, &vars, &mut acc);
    acc
}

/// Shared expansion caches for one reduction session: powers of each `e_i`
/// and products `prod_{i<n} e_i^(mu_i)` as raw term lists, reused across
/// coefficients. `e_n = A1...An` is a single monomial, so its power is an
/// exponent shift rather than a multiplication.
struct SymCache {
    vars: Vec<String>,
    elems: Vec<MultiPoly>,
    pows: Vec<Vec<MultiPoly>>,
    products: std::collections::HashMap<Vec<u32>, Vec<(Vec<u32>, BigInt)>>,
}

impl SymCache {
    fn new(n: usize) -> Self {
        let vars: Vec<String> = (0..n).map(root_var).collect();
        let elems: Vec<MultiPoly> = (1..=n).map(|k| elementary_sym(n, k)).collect();
        let pows = (0..n)
            .map(|_| vec![MultiPoly::constant(vars.clone(), BigInt::one())])
            .collect();
        SymCache {
            vars,
            elems,
            pows,
            products: Default::default(),
        }
    }

    fn power(&mut self, i: usize, k: u32) -> MultiPoly {
        while self.pows[i].len() <= k as usize {
            let next = self.pows[i].last().unwrap().mul(&self.elems[i]);
            self.pows[i].push(next);
        }
        self.pows[i][k as usize].clone()
    }

    /// Terms of `prod_i e_i^(mu_i)` with exponents aligned to `A1..An`.
    fn product_terms(&mut self, mu: &[u32]) -> Vec<(Vec<u32>, BigInt)> {
        let n = self.vars.len();
        let head = &mu[..n - 1];
        if !self.products.contains_key(head) {
            let mut prod = MultiPoly::constant(self.vars.clone(), BigInt::one());
            for (i, &m) in head.iter().enumerate() {
                if m > 0 {
                    prod = prod.mul(&self.power(i, m));
                }
            }
            let vars = self.vars.clone();
            let terms: Vec<(Vec<u32>, BigInt)> = prod
                .terms()
                .map(|(exp, c)| {
                    let aligned: Vec<u32> = vars
                        .iter()
                        .map(|v| prod.var_index(v).map_or(0, |i| exp[i]))
                        .collect();
                    (aligned, c.clone())
                })
                .collect();
            self.products.insert(head.to_vec(), terms);
        }
        let shift = mu[n - 1];
        self.products[head]
            .iter()
            .map(|(exp, c)| {
                let shifted: Vec<u32> = exp.iter().map(|&x| x + shift).collect();
                (shifted, c.clone())
            })
            .collect()
    }
}

/// Rewrite a symmetric polynomial in `A1..An` as a polynomial in the
/// elementary symmetric polynomials: returns `(mu, c)` pairs representing
/// `sum c * prod_i e_i^(mu_i)`. The remainder lives in a plain map keyed by
/// exponent vectors in `A1..An` order, whose maximum key is the lex-leading
/// term.
fn reduce_symmetric_cached(
    p: &MultiPoly,
    n: usize,
    cache: &mut SymCache,
) -> Result<Vec<(Vec<u32>, BigInt)>> {
    use std::collections::BTreeMap;
    let vars = cache.vars.clone();
    let mut rem: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    for (exp, c) in p.terms() {
        let aligned: Vec<u32> = vars
            .iter()
            .map(|v| p.var_index(v).map_or(0, |i| exp[i]))
            .collect();
        if exp.iter().enumerate().any(|(i, &x)| {
            x > 0 && !vars.contains(&p.vars()[i])
        }) {
            return Err(Error::Inconsistent(
                "polynomial uses variables outside the root set".into(),
            ));
        }
        rem.insert(aligned, c.clone());
    }

    let mut out = vec![];
    let mut guard = 0usize;
    while let Some((lambda, lead_coeff)) = rem.last_key_value().map(|(k, v)| (k.clone(), v.clone())) {
        guard += 1;
        if guard > 1_000_000 {
            return Err(Error::Inconsistent(
                "symmetric reduction failed to terminate".into(),
            ));
        }
        for w in lambda.windows(2) {
            if w[0] < w[1] {
                return Err(Error::Inconsistent(format!(
                    "leading exponent {lambda:?} is not weakly decreasing; input not symmetric"
                )));
            }
        }
        let mut mu = vec![0u32; n];
        for i in 0..n {
            let next = if i + 1 < n { lambda[i + 1] } else { 0 };
            mu[i] = lambda[i] - next;
        }
        for (exp, pc) in cache.product_terms(&mu) {
            let delta = &lead_coeff * pc;
            match rem.entry(exp) {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(-delta);
                }
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    *o.get_mut() -= delta;
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
            }
        }
        out.push((mu, lead_coeff));
    }
    Ok(out)
}

#[cfg(test)]
fn reduce_symmetric(p: &MultiPoly, n: usize) -> Result<Vec<(Vec<u32>, BigInt)>> {
    reduce_symmetric_cached(p, n, &mut SymCache::new(n))
}

/// Build the resolvent exactly by symmetric reduction (oracle path).
pub fn build_resolvent_symmetric(
    f: &MultiPoly,
    k: &PermGroup,
    params: &ResolventParams,
) -> Result<Resolvent> {
    let main = f
        .main_var()
        .ok_or_else(|| Error::Domain("f has no main variable".into()))?
        .to_string();
    let n = f.degree_in(&main);
    if !f.is_monic_in(&main) {
        return Err(Error::Domain("f must be monic".into()));
    }
    let m = params.reps.len();
    let root_vars: Vec<String> = (0..n).map(root_var).collect();

    // z_i as exact polynomials in the root variables
    let gamma_poly = MultiPoly::constant(root_vars.clone(), params.gamma.clone());
    let shifted: Vec<MultiPoly> = (0..n)
        .map(|i| MultiPoly::var(root_vars.clone(), &root_var(i)).add(&gamma_poly))
        .collect();
    let z_polys: Vec<MultiPoly> = params
        .reps
        .iter()
        .map(|sigma| {
            let mut z = MultiPoly::zero(root_vars.clone());
            for (ki, &dk) in params.d.iter().enumerate() {
                let kk = (ki + 1) as u32;
                let mut inner = MultiPoly::zero(root_vars.clone());
                for tau in k.elements() {
                    let mut prod = MultiPoly::constant(root_vars.clone(), BigInt::one());
                    for (j, &ej) in params.e.iter().enumerate() {
                        let root = sigma.apply(tau.apply(j));
                        prod = prod.mul(&shifted[root].pow(kk * ej));
                    }
                    inner = inner.add(&prod);
                }
                z = z.add(&inner.scale(&BigInt::from(dk)));
            }
            z
        })
        .collect();

    // Phi = prod (Z - z_i) over vars [Z, A1..An]
    let mut phi_vars = vec!["Z".to_string()];
    phi_vars.extend(root_vars.clone());
    let z_var = MultiPoly::var(phi_vars.clone(), "Z");
    let mut phi_sym = MultiPoly::constant(phi_vars.clone(), BigInt::one());
    for zp in &z_polys {
        phi_sym = phi_sym.mul(&z_var.sub(zp));
    }

    // rewrite each Z-coefficient via elementary symmetric polynomials and
    // substitute e_i -> (-1)^i g_i
    let g: Vec<MultiPoly> = (0..=n as u32)
        .map(|j| f.coeff_in(&main, n as u32 - j))
        .collect(); // g[j] = coefficient of X^(n-j), g[0] = 1
    let t_vars = f.param_vars();
    let mut cache = SymCache::new(n);
    let mut z_coeffs: Vec<MultiPoly> = Vec::with_capacity(m + 1);
    for power_of_z in 0..=m {
        let coeff_sym = phi_sym.coeff_in("Z", power_of_z as u32);
        let reduced = reduce_symmetric_cached(&coeff_sym, n, &mut cache)?;
        let mut acc = MultiPoly::zero(t_vars.clone());
        for (mu, c) in reduced {
            let mut term = MultiPoly::constant(t_vars.clone(), c);
            for (i, &mi) in mu.iter().enumerate() {
                if mi == 0 {
                    continue;
                }
                // e_(i+1) = (-1)^(i+1) g_(i+1)
                let mut base = g[i + 1].clone();
                if (i + 1) % 2 == 1 {
                    base = base.neg();
                }
                term = term.mul(&base.pow(mi));
            }
            acc = acc.add(&term);
        }
        z_coeffs.push(acc);
    }
    let phi = MultiPoly::assemble("Z", &z_coeffs);
    if !phi.is_monic_in("Z") {
        return Err(Error::Inconsistent(
            "symmetric-path resolvent is not monic".into(),
        ));
    }
    Ok(Resolvent {
        f: f.clone(),
        k: k.clone(),
        params: params.clone(),
        phi,
        m,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_multipoly;
    use num_traits::Zero;

    #[test]
    fn elementary_polys() {
        let e1 = elementary_sym(3, 1);
        let e2 = elementary_sym(3, 2);
        let e3 = elementary_sym(3, 3);
        assert_eq!(e1.num_terms(), 3);
        assert_eq!(e2.num_terms(), 3);
        assert_eq!(e3.num_terms(), 1);
    }

    #[test]
    fn reduce_power_sum() {
        // A1^2 + A2^2 = e1^2 - 2 e2
        let vars = vec!["A1".to_string(), "A2".to_string()];
        let p = MultiPoly::from_terms(
            vars,
            vec![
                (vec![2, 0], BigInt::one()),
                (vec![0, 2], BigInt::one()),
            ],
        );
        let reduced = reduce_symmetric(&p, 2).unwrap();
        assert_eq!(
            reduced,
            vec![
                (vec![2, 0], BigInt::one()),
                (vec![0, 1], BigInt::from(-2))
            ]
        );
    }

    #[test]
    fn rejects_asymmetric_input() {
        let vars = vec!["A1".to_string(), "A2".to_string()];
        let p = MultiPoly::from_terms(vars, vec![(vec![0, 1], BigInt::one())]);
        assert!(reduce_symmetric(&p, 2).is_err());
    }

    #[test]
    fn square_root_family_by_hand() {
        // f = X^2 - T, K trivial, e = (1,2), d = (1): Phi = Z^2 - T^3
        let f = parse_multipoly("X^2 - T1").unwrap();
        let k = PermGroup::trivial(2);
        let ambient = PermGroup::symmetric(2);
        let reps = PermGroup::coset_reps(&ambient, &k).unwrap();
        let params = ResolventParams {
            gamma: BigInt::zero(),
            e: vec![1, 2],
            d: vec![1],
            reps,
        };
        let r = build_resolvent_symmetric(&f, &k, &params).unwrap();
        assert_eq!(r.phi, parse_multipoly("Z^2 - T1^3").unwrap());
    }

    #[test]
    fn full_group_linear_resolvent_by_hand() {
        // K = S2, e = (1,2), d = (1,2): z = d1(a1 a2^2 + a2 a1^2) + d2(a1^2 a2^4 + a2^2 a1^4)
        // = e1 e2 + 2 e2^2 (e1^2 - 2 e2) with e1 = 0, e2 = -T: z = 4 T^3
        let f = parse_multipoly("X^2 - T1").unwrap();
        let k = PermGroup::symmetric(2);
        let reps = PermGroup::coset_reps(&k, &k).unwrap();
        let params = ResolventParams {
            gamma: BigInt::zero(),
            e: vec![1, 2],
            d: vec![1, 2],
            reps,
        };
        let r = build_resolvent_symmetric(&f, &k, &params).unwrap();
        assert_eq!(r.phi, parse_multipoly("Z - 4*T1^3").unwrap());
    }
}
