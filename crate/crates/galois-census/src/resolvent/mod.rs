//! Construction of Galois resolvents: for a monic `f(X, T)` and a subgroup
//! `K <= S_n`, a monic integer polynomial `Phi(Z, T)` of degree `m = |S_n/K|`
//! in `Z` whose specializations pick up an integer root whenever the
//! specialized polynomial has Galois group (conjugate into) `K`.
//!
//! `Phi = prod_i (Z - z_i)` over coset representatives `sigma_i`, where
//! `z_i = sum_k d_k sum_{tau in K} prod_j (alpha_{sigma_i(tau(j))} + gamma)^(k e_j)`.
//! The exponent data `(gamma, e, d)` is searched so the `z_i` are provably
//! distinct at one admissible specialization; the coefficients are then
//! reconstructed exactly by interpolation from certified root enclosures
//! and cross-checkable against an exact symmetric-function expansion.

pub mod symmetric;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::galois::{admissible, Admissibility};
use crate::perm::{Perm, PermGroup};
use crate::poly::{roots::roots_with_multiplicity, ComplexBall, MultiPoly, UniPoly};

/// Degree cap for the resolvent in `Z`.
pub const RESOLVENT_DEGREE_CAP: usize = 120;
/// Above this `Z`-degree the construction is legal but expensive.
pub const RESOLVENT_DEGREE_WARN: usize = 24;
/// Cap on the total number of interpolation grid points.
pub const GRID_POINT_CAP: usize = 20_000;

#[derive(Clone, Debug)]
pub struct ResolventParams {
    pub gamma: BigInt,
    pub e: Vec<u32>,
    pub d: Vec<u32>,
    pub reps: Vec<Perm>,
}

#[derive(Clone, Debug)]
pub struct Resolvent {
    pub f: MultiPoly,
    pub k: PermGroup,
    pub params: ResolventParams,
    /// Monic polynomial in `Z` over the parameter ring.
    pub phi: MultiPoly,
    pub m: usize,
}

#[derive(Clone, Debug)]
pub struct ResolventConfig {
    pub precision: u32,
    /// Parameter resamplings per precision level in the distinctness search.
    pub retry_cap: u32,
    pub seed: u64,
}

impl Default for ResolventConfig {
    fn default() -> Self {
        ResolventConfig {
            precision: 256,
            retry_cap: 16,
            seed: 1,
        }
    }
}

/// The `z` values as certified balls from root enclosures of a specialized
/// polynomial (roots listed with multiplicity, `n` entries):
/// `z_i = sum_k d_k sum_{tau in K} prod_j (alpha_{sigma_i(tau(j))} + gamma)^(k e_j)`.
/// Products are rounded to `work_bits` of dyadic precision, which widens the
/// radii but keeps the representation compact.
pub fn z_values(
    alphas: &[ComplexBall],
    k: &PermGroup,
    reps: &[Perm],
    e: &[u32],
    d: &[u32],
    gamma: &BigInt,
    work_bits: u32,
) -> Vec<ComplexBall> {
    let n = alphas.len();
    debug_assert_eq!(e.len(), n);
    debug_assert_eq!(d.len(), k.order());
    let shifted: Vec<ComplexBall> = alphas.iter().map(|a| a.add_int(gamma)).collect();
    // powers are shared heavily across cosets; cache by (root, exponent)
    let mut pow_cache: HashMap<(usize, u32), ComplexBall> = HashMap::new();
    let mut power = |root: usize, exp: u32, shifted: &[ComplexBall]| -> ComplexBall {
        pow_cache
            .entry((root, exp))
            .or_insert_with(|| shifted[root].pow_r(exp, work_bits))
            .clone()
    };
    let zero = ComplexBall::exact(crate::poly::CRat::zero());
    reps.iter()
        .map(|sigma| {
            let mut z = zero.clone();
            for (ki, &dk) in d.iter().enumerate() {
                let kk = (ki + 1) as u32;
                let mut inner = zero.clone();
                for tau in k.elements() {
                    let mut prod = ComplexBall::one();
                    for (j, &ej) in e.iter().enumerate() {
                        let root = sigma.apply(tau.apply(j));
                        prod = prod.mul_r(&power(root, kk * ej, &shifted), work_bits);
                    }
                    inner = inner.add(&prod);
                }
                z = z.add(&inner.scale_int(&BigInt::from(dk)));
            }
            z
        })
        .collect()
}

/// Working precision for the ball products in the resolvent pipeline:
/// enough bits for the final integer rounding at magnitudes up to
/// `(|t|+2)^degree_bound`, plus margin. Scales with the configured
/// precision so the retry ladder can push through hard cases.
fn work_bits_for(prec: u32, degree_bound: u64, t: &[BigInt]) -> u32 {
    let max_t = t
        .iter()
        .map(|x| x.abs().bits())
        .max()
        .unwrap_or(1)
        .max(1);
    prec / 4 + 64 + (degree_bound as u32).saturating_mul(max_t as u32 + 1)
}

impl Resolvent {
    /// Specialize `Phi` at `t`, leaving a univariate polynomial in `Z`.
    pub fn specialize(&self, t: &[BigInt]) -> Result<UniPoly> {
        self.phi.specialize(t)
    }

    /// Smallest integer root by absolute value (ties to the nonnegative one)
    /// of `Phi(Z, t)`, when an integer root exists.
    pub fn root_test(&self, t: &[BigInt]) -> Result<Option<BigInt>> {
        let p = self.specialize(t)?;
        if p.is_zero() {
            return Ok(Some(BigInt::zero()));
        }
        let roots = crate::poly::integer_roots(&p)?;
        Ok(pick_reported_root(&roots))
    }

    /// One-sided confirmation of a candidate identification: if the
    /// splitting group at `t` is conjugate into `K`, the specialized
    /// resolvent must have an integer root. `false` therefore refutes the
    /// candidate; `true` is consistent without proving it.
    pub fn consistent_with_candidate(&self, t: &[BigInt]) -> Result<bool> {
        Ok(self.root_test(t)?.is_some())
    }

    /// Serialized form: a reproducible parameter header plus the canonical
    /// polynomial text.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "f = {}", self.f);
        if self.k.order() == 1 {
            let _ = writeln!(out, "K = trivial");
        } else {
            let gens: Vec<String> = self
                .k
                .generators()
                .iter()
                .map(|g| g.to_cycle_string())
                .collect();
            let _ = writeln!(out, "K = {}", gens.join(", "));
        }
        let _ = writeln!(out, "K_order = {}", self.k.order());
        let _ = writeln!(out, "gamma = {}", self.params.gamma);
        let _ = writeln!(
            out,
            "e = {}",
            self.params
                .e
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        let _ = writeln!(
            out,
            "d = {}",
            self.params
                .d
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        let _ = writeln!(out, "m = {}", self.m);
        let _ = writeln!(out, "phi = {}", self.phi);
        out
    }
}

/// Reporting convention for multiple integer roots: smallest absolute value,
/// ties broken toward the nonnegative root.
pub fn pick_reported_root(roots: &[BigInt]) -> Option<BigInt> {
    roots
        .iter()
        .min_by(|a, b| {
            a.abs()
                .cmp(&b.abs())
                .then_with(|| b.cmp(a)) // positive before negative on ties
        })
        .cloned()
}

fn validate_input(f: &MultiPoly, k: &PermGroup) -> Result<(String, usize, Vec<String>)> {
    let main = f
        .main_var()
        .ok_or_else(|| Error::Domain("f has no main variable".into()))?
        .to_string();
    let n = f.degree_in(&main);
    if n == 0 {
        return Err(Error::Domain("f is constant in its main variable".into()));
    }
    if !f.is_monic_in(&main) {
        return Err(Error::Domain(format!(
            "f must be monic in {main}; apply monicization first"
        )));
    }
    if k.degree() != n {
        return Err(Error::Domain(format!(
            "K acts on {} points but f has degree {n}",
            k.degree()
        )));
    }
    let params = f.param_vars();
    if params.is_empty() {
        return Err(Error::Domain(
            "f has no parameter variables; nothing to specialize".into(),
        ));
    }
    Ok((main, n, params))
}

/// Search for `(gamma, e, d)` making the `z_i` pairwise distinct, certified
/// by ball separation at one random admissible specialization.
pub fn find_params(
    f: &MultiPoly,
    k: &PermGroup,
    cfg: &ResolventConfig,
) -> Result<ResolventParams> {
    use rand::SeedableRng;
    let (_, n, _) = validate_input(f, k)?;
    let ambient = PermGroup::symmetric(n);
    let reps = PermGroup::coset_reps(&ambient, k)?;
    let m = reps.len();
    if m > RESOLVENT_DEGREE_CAP {
        return Err(Error::CapExceeded(format!(
            "resolvent degree m = {m} exceeds the cap {RESOLVENT_DEGREE_CAP}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut gamma = BigInt::zero();
    let mut e: Vec<u32> = (1..=n as u32).collect();
    let mut d: Vec<u32> = (1..=k.order() as u32).collect();
    let mut prec = cfg.precision;

    for doubling in 0..4 {
        for _attempt in 0..cfg.retry_cap {
            let t_star = random_admissible(f, &mut rng)?;
            let p = f.specialize(&t_star)?;
            let alphas: Vec<ComplexBall> = match roots_with_multiplicity(&p, prec) {
                Ok(list) => list.into_iter().map(|(b, _)| b).collect(),
                Err(Error::Precision(_)) => break, // double precision
                Err(e) => return Err(e),
            };
            let sum_e: u64 = e.iter().map(|&x| x as u64).sum();
            let wb = work_bits_for(prec, k.order() as u64 * sum_e, &t_star);
            let z = z_values(&alphas, k, &reps, &e, &d, &gamma, wb);
            let mut distinct = true;
            'outer: for i in 0..m {
                for j in i + 1..m {
                    if !z[i].is_disjoint(&z[j]) {
                        distinct = false;
                        break 'outer;
                    }
                }
            }
            if distinct {
                return Ok(ResolventParams {
                    gamma,
                    e,
                    d,
                    reps,
                });
            }
            // collision: resample exponents from [1, n^2], shift gamma
            let hi = (n * n) as u32;
            e = (0..n).map(|_| rng.gen_range(1..=hi)).collect();
            d = (0..k.order()).map(|_| rng.gen_range(1..=hi)).collect();
            gamma += 1;
        }
        prec *= 2;
        let _ = doubling;
    }
    Err(Error::CapExceeded(
        "no distinct-z parameters found within retry and precision caps".into(),
    ))
}

fn random_admissible(f: &MultiPoly, rng: &mut ChaCha8Rng) -> Result<Vec<BigInt>> {
    let s = f.param_vars().len();
    for _ in 0..500 {
        let t: Vec<BigInt> = (0..s).map(|_| BigInt::from(rng.gen_range(-20i64..=20))).collect();
        if admissible(f, &t)? == Admissibility::Admissible {
            return Ok(t);
        }
    }
    Err(Error::Domain(
        "no admissible specialization found in a large sample; is f separable?".into(),
    ))
}

/// Exact construction of the resolvent by numeric interpolation: certified
/// root enclosures at integer grid nodes, integer rounding of the expanded
/// coefficients, exact tensor interpolation within derived degree bounds,
/// and verification at fresh nodes.
pub fn build_resolvent(
    f: &MultiPoly,
    k: &PermGroup,
    params: &ResolventParams,
    cfg: &ResolventConfig,
) -> Result<Resolvent> {
    let (main, n, t_vars) = validate_input(f, k)?;
    let m = params.reps.len();
    let s = t_vars.len();

    // deg_T h_i <= i |K| (sum e) maxdeg_T(g_j); use i = m uniformly
    let sum_e: u64 = params.e.iter().map(|&x| x as u64).sum();
    let max_g_deg: u64 = (0..=n as u32)
        .map(|j| {
            let g = f.coeff_in(&main, j);
            t_vars
                .iter()
                .map(|v| g.degree_in(v) as u64)
                .max()
                .unwrap_or(0)
        })
        .max()
        .unwrap_or(0);
    let degree_bound = (m as u64) * (k.order() as u64) * sum_e * max_g_deg;
    let nodes_per_axis = degree_bound as usize + 1;
    if nodes_per_axis.checked_pow(s as u32).is_none_or(|total| total > GRID_POINT_CAP) {
        return Err(Error::CapExceeded(format!(
            "interpolation grid of {nodes_per_axis}^{s} points exceeds the cap {GRID_POINT_CAP}"
        )));
    }

    let axis: Vec<BigInt> = node_sequence(nodes_per_axis);
    let axes: Vec<Vec<BigInt>> = vec![axis.clone(); s];

    let mut prec = cfg.precision;
    'precision: for _ in 0..5 {
        // coefficients of Phi(Z, t) at every grid point
        let mut node_values: HashMap<Vec<usize>, Vec<BigInt>> = HashMap::new();
        let mut idx = vec![0usize; s];
        loop {
            let t: Vec<BigInt> = idx.iter().enumerate().map(|(v, &i)| axes[v][i].clone()).collect();
            match phi_coeffs_at(f, k, params, &t, prec, m)? {
                Some(coeffs) => {
                    node_values.insert(idx.clone(), coeffs);
                }
                None => {
                    prec *= 2;
                    continue 'precision;
                }
            }
            // odometer
            let mut v = 0;
            loop {
                if v == s {
                    break;
                }
                idx[v] += 1;
                if idx[v] < axes[v].len() {
                    break;
                }
                idx[v] = 0;
                v += 1;
            }
            if v == s {
                break;
            }
        }

        // interpolate h_i for i = 1..m (coefficient of Z^(m-i))
        let mut h = Vec::with_capacity(m);
        for i in 1..=m {
            let values = |grid_idx: &[usize]| {
                BigRational::from(node_values[grid_idx][m - i].clone())
            };
            h.push(crate::poly::interpolate_tensor(&t_vars, &axes, &values)?);
        }

        // assemble Phi = Z^m + sum h_i Z^(m-i)
        let mut z_coeffs = vec![MultiPoly::zero(t_vars.clone()); m + 1];
        z_coeffs[m] = MultiPoly::constant(t_vars.clone(), BigInt::from(1));
        for (i, hi) in h.iter().enumerate() {
            z_coeffs[m - (i + 1)] = hi.clone();
        }
        let phi = MultiPoly::assemble("Z", &z_coeffs);
        if !phi.is_monic_in("Z") {
            return Err(Error::Inconsistent("assembled resolvent is not monic".into()));
        }

        let resolvent = Resolvent {
            f: f.clone(),
            k: k.clone(),
            params: params.clone(),
            phi,
            m,
        };

        // verify at fresh nodes beyond the grid
        for fresh_index in 0..2 {
            let fresh = node_sequence(nodes_per_axis + 1 + fresh_index)
                .pop()
                .unwrap();
            let t = vec![fresh.clone(); s];
            let direct = match phi_coeffs_at(f, k, params, &t, prec, m)? {
                Some(c) => c,
                None => {
                    prec *= 2;
                    continue 'precision;
                }
            };
            let specialized = resolvent.specialize(&t)?;
            let expected = UniPoly::new({
                let mut c = direct.clone();
                c.push(BigInt::from(1));
                c
            });
            if specialized != expected {
                return Err(Error::Inconsistent(format!(
                    "resolvent verification failed at fresh node {t:?}"
                )));
            }
        }
        return Ok(resolvent);
    }
    Err(Error::Precision(
        "resolvent coefficients could not be pinned to integers; raise precision".into(),
    ))
}

/// Ascending coefficients (constant..Z^(m-1)) of `Phi(Z, t)` from certified
/// root enclosures; `None` when some coefficient ball is too wide to round.
fn phi_coeffs_at(
    f: &MultiPoly,
    k: &PermGroup,
    params: &ResolventParams,
    t: &[BigInt],
    prec: u32,
    m: usize,
) -> Result<Option<Vec<BigInt>>> {
    let p = f.specialize(t)?;
    let mut alphas = Vec::new();
    for (ball, mult) in roots_with_multiplicity(&p, prec)? {
        for _ in 0..mult {
            alphas.push(ball.clone());
        }
    }
    let sum_e: u64 = params.e.iter().map(|&x| x as u64).sum();
    let wb = work_bits_for(
        prec,
        (m as u64) * (k.order() as u64) * sum_e,
        t,
    );
    let z = z_values(
        &alphas,
        k,
        &params.reps,
        &params.e,
        &params.d,
        &params.gamma,
        wb,
    );
    debug_assert_eq!(z.len(), m);
    let balls = crate::poly::roots::poly_from_root_balls_rounded(&z, wb);
    let quarter = BigRational::new(BigInt::from(1), BigInt::from(4));
    let mut out = Vec::with_capacity(m);
    for ball in balls.iter().take(m) {
        if ball.rad >= quarter {
            return Ok(None);
        }
        match ball.round_to_integer() {
            Some(v) => out.push(v),
            None => {
                return Err(Error::Inconsistent(
                    "resolvent coefficient enclosure excludes every integer".into(),
                ))
            }
        }
    }
    Ok(Some(out))
}

/// Node sequence 0, 1, -1, 2, -2, ...
fn node_sequence(count: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(count);
    let mut k = 0i64;
    while out.len() < count {
        if k == 0 {
            out.push(BigInt::zero());
        } else {
            out.push(BigInt::from(k));
            if out.len() < count {
                out.push(BigInt::from(-k));
            }
        }
        k += 1;
    }
    out.truncate(count);
    out
}

/// Statistics for the minimum irreducible-factor degree of specialized
/// resolvents against the `|G|/|K|` prediction.
#[derive(Clone, Debug)]
pub struct MinFactorStats {
    pub rows: Vec<(Vec<BigInt>, usize)>,
    pub threshold: usize,
    pub fraction_meeting: f64,
}

/// For each sample `t`, the minimum degree among irreducible factors of
/// `Phi(Z, t)`, and the fraction meeting `deg >= g_order / |K|`.
pub fn min_factor_degree_check(
    r: &Resolvent,
    samples: &[Vec<BigInt>],
    g_order: usize,
) -> Result<MinFactorStats> {
    let threshold = g_order / r.k.order().max(1);
    let mut rows = vec![];
    let mut meeting = 0usize;
    for t in samples {
        let p = r.specialize(t)?;
        if p.is_zero() || p.degree() == 0 {
            rows.push((t.clone(), 0));
            continue;
        }
        let fac = crate::poly::factor_rational(&p)?;
        let min_deg = fac
            .degrees()
            .into_iter()
            .filter(|&d| d >= 1)
            .min()
            .unwrap_or(0);
        if min_deg >= threshold {
            meeting += 1;
        }
        rows.push((t.clone(), min_deg));
    }
    let fraction = if rows.is_empty() {
        1.0
    } else {
        meeting as f64 / rows.len() as f64
    };
    Ok(MinFactorStats {
        rows,
        threshold,
        fraction_meeting: fraction,
    })
}
