//! Exhaustive specialization counting over integer boxes `|t| <= H`:
//! counts of prescribed splitting-field groups (mode N), of group changes
//! (mode E), and of reducible specializations (mode R), with classification
//! tallies, generic-group estimation, resolvent-root censuses, and
//! log-log exponent fitting.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::galois::{identify, splitting_class, GroupTag, IdentifyConfig, SplitClass};
use crate::perm::PermGroup;
use crate::poly::{factor_rational, MultiPoly};
use crate::resolvent::Resolvent;

/// Cap on enumerated lattice points per census call.
pub const BOX_POINT_CAP: u64 = 8_000_000;

#[derive(Clone, Debug, PartialEq)]
pub enum Mode {
    /// Splitting field has Galois group (conjugate to) the target.
    GroupEquals(PermGroup),
    /// Splitting field group differs from the generic group.
    GroupChanges,
    /// The specialization becomes reducible.
    Reducible,
}

impl Mode {
    pub fn letter(&self) -> &'static str {
        match self {
            Mode::GroupEquals(_) => "N",
            Mode::GroupChanges => "E",
            Mode::Reducible => "R",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HeightRow {
    pub height: u64,
    pub count: u64,
    pub degenerate: u64,
    pub total: u64,
    pub by_class: Vec<(String, u64)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub poly: String,
    pub degree: usize,
    pub parameters: usize,
    pub mode: String,
    pub subgroup: Option<String>,
    pub generic_group: Option<String>,
    pub generic_order: Option<usize>,
    pub predicted_exponent: Option<f64>,
    pub predicted_exponent_expr: Option<String>,
    pub fitted_slope: Option<f64>,
    pub fit_residual: Option<f64>,
    pub rows: Vec<HeightRow>,
    pub seed: u64,
}

impl CensusReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "H,mode,subgroup,count,degenerate,predicted_exponent,fitted_slope\n",
        );
        for row in &self.rows {
            let subgroup = self.subgroup.as_deref().unwrap_or("-");
            let pred = self
                .predicted_exponent
                .map(|x| format!("{x:.6}"))
                .unwrap_or_else(|| "-".into());
            let slope = self
                .fitted_slope
                .map(|x| format!("{x:.6}"))
                .unwrap_or_else(|| "-".into());
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                row.height, self.mode, subgroup, row.count, row.degenerate, pred, slope
            ));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Least-squares slope of `log count` against `log H` over heights with a
/// positive count, plus the root-mean-square residual.
pub fn fit_exponent(points: &[(u64, u64)]) -> Result<(f64, f64)> {
    let usable: Vec<(f64, f64)> = points
        .iter()
        .filter(|(_, c)| *c > 0)
        .map(|(h, c)| ((*h as f64).ln(), (*c as f64).ln()))
        .collect();
    if usable.is_empty() {
        return Err(Error::Domain("all counts are zero; nothing to fit".into()));
    }
    if usable.len() < 3 {
        return Err(Error::Domain(format!(
            "exponent fitting needs at least 3 positive heights, got {}",
            usable.len()
        )));
    }
    let n = usable.len() as f64;
    let mean_x = usable.iter().map(|(x, _)| x).sum::<f64>() / n;
    let mean_y = usable.iter().map(|(_, y)| y).sum::<f64>() / n;
    let sxx: f64 = usable.iter().map(|(x, _)| (x - mean_x).powi(2)).sum();
    let sxy: f64 = usable
        .iter()
        .map(|(x, y)| (x - mean_x) * (y - mean_y))
        .sum();
    let slope = if sxx == 0.0 { 0.0 } else { sxy / sxx };
    let intercept = mean_y - slope * mean_x;
    let rss: f64 = usable
        .iter()
        .map(|(x, y)| (y - (slope * x + intercept)).powi(2))
        .sum();
    Ok((slope, (rss / n).sqrt()))
}

/// Estimate the generic Galois group by identifying random admissible
/// specializations: the maximal identified group, cross-checked so that
/// every other sampled class embeds into it up to conjugacy.
pub fn generic_group(f: &MultiPoly, cfg: &RunConfig) -> Result<(PermGroup, String)> {
    let main = f
        .main_var()
        .ok_or_else(|| Error::Domain("no main variable".into()))?
        .to_string();
    let n = f.degree_in(&main);
    if n > 5 {
        return Err(Error::Domain(
            "generic-group estimation is implemented for degree <= 5".into(),
        ));
    }
    let id_cfg = cfg.identify_config();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x67656e65);
    let s = f.param_vars().len();
    let mut identified: Vec<(PermGroup, String)> = vec![];
    let mut others: Vec<SplitClass> = vec![];
    let mut tries = 0;
    while identified.len() < 24 && tries < 4000 {
        tries += 1;
        let t: Vec<BigInt> = (0..s)
            .map(|_| BigInt::from(rng.gen_range(-50i64..=50)))
            .collect();
        if crate::galois::admissible(f, &t)? != crate::galois::Admissibility::Admissible {
            continue;
        }
        let p = f.specialize(&t)?;
        match identify(&p, &id_cfg)? {
            GroupTag::Identified { group, name, .. } => identified.push((group, name)),
            GroupTag::Reducible { .. } => {
                others.push(splitting_class(&p, n, &id_cfg)?);
            }
            GroupTag::Degenerate { .. } => {
                return Err(Error::Inconsistent(
                    "admissible specialization classified as degenerate".into(),
                ))
            }
            GroupTag::CycleTypes { .. } => unreachable!("degree capped above"),
        }
    }
    if identified.is_empty() {
        return Err(Error::Domain(
            "no irreducible admissible specialization found; is f irreducible?".into(),
        ));
    }
    let (best, best_name) = identified
        .iter()
        .max_by_key(|(g, _)| g.order())
        .cloned()
        .unwrap();
    for (g, name) in &identified {
        if !g.embeds_up_to_conjugacy(&best) {
            return Err(Error::Inconsistent(format!(
                "sampled group {name} does not embed in the maximal group {best_name}"
            )));
        }
    }
    for class in &others {
        if class.name != "zero" && !class.group.embeds_up_to_conjugacy(&best) {
            return Err(Error::Inconsistent(format!(
                "reducible class {} does not embed in the maximal group {best_name}",
                class.name
            )));
        }
    }
    Ok((best, best_name))
}

/// Outcome of classifying one lattice point.
struct PointOutcome {
    class_key: String,
    degenerate: bool,
    counted: bool,
    /// Group to containment-check against the generic group, for classes
    /// seen the first time.
    class_group: Option<PermGroup>,
}

fn classify_point(
    f: &MultiPoly,
    n: usize,
    t: &[BigInt],
    mode: &Mode,
    generic: Option<&PermGroup>,
    id_cfg: &IdentifyConfig,
) -> Result<PointOutcome> {
    let p = f.specialize(t)?;
    match mode {
        Mode::Reducible => {
            if p.is_zero() || p.degree() == 0 {
                return Ok(PointOutcome {
                    class_key: "degenerate-constant".into(),
                    degenerate: true,
                    counted: false,
                    class_group: None,
                });
            }
            let fac = factor_rational(&p)?;
            let degenerate =
                p.degree() < n || fac.factors.iter().any(|(_, m)| *m > 1);
            let reducible = fac.count_with_multiplicity() > 1;
            let degrees = fac.degrees();
            let key = if reducible {
                format!(
                    "split {}",
                    degrees
                        .iter()
                        .map(|d| d.to_string())
                        .collect::<Vec<_>>()
                        .join("+")
                )
            } else {
                "irreducible".into()
            };
            Ok(PointOutcome {
                class_key: key,
                degenerate,
                counted: reducible,
                class_group: None,
            })
        }
        Mode::GroupEquals(_) | Mode::GroupChanges => {
            let class = splitting_class(&p, n, id_cfg)?;
            let counted = match mode {
                Mode::GroupEquals(k) => {
                    class.name != "zero" && class.group.is_conjugate_to(k)
                }
                Mode::GroupChanges => match generic {
                    Some(g) => class.name == "zero" || !class.group.is_conjugate_to(g),
                    None => false,
                },
                Mode::Reducible => unreachable!(),
            };
            Ok(PointOutcome {
                class_key: class.name.clone(),
                degenerate: class.degenerate.is_some(),
                counted,
                class_group: if class.name == "zero" {
                    None
                } else {
                    Some(class.group)
                },
            })
        }
    }
}

struct ShardAccum {
    /// class key -> (per-height-bucket counts, representative group)
    classes: Vec<(String, Vec<u64>, Option<PermGroup>)>,
    counted: Vec<u64>,
    degenerate: Vec<u64>,
    total: Vec<u64>,
}

impl ShardAccum {
    fn new(buckets: usize) -> Self {
        ShardAccum {
            classes: vec![],
            counted: vec![0; buckets],
            degenerate: vec![0; buckets],
            total: vec![0; buckets],
        }
    }

    fn add(&mut self, bucket: usize, outcome: PointOutcome) {
        self.total[bucket] += 1;
        if outcome.counted {
            self.counted[bucket] += 1;
        }
        if outcome.degenerate {
            self.degenerate[bucket] += 1;
        }
        match self
            .classes
            .iter_mut()
            .find(|(key, _, _)| *key == outcome.class_key)
        {
            Some((_, counts, _)) => counts[bucket] += 1,
            None => {
                let mut counts = vec![0; self.counted.len()];
                counts[bucket] += 1;
                self.classes
                    .push((outcome.class_key, counts, outcome.class_group));
            }
        }
    }

    fn merge(&mut self, other: ShardAccum) {
        for i in 0..self.counted.len() {
            self.counted[i] += other.counted[i];
            self.degenerate[i] += other.degenerate[i];
            self.total[i] += other.total[i];
        }
        for (key, counts, group) in other.classes {
            match self.classes.iter_mut().find(|(k, _, _)| *k == key) {
                Some((_, mine, _)) => {
                    for (a, b) in mine.iter_mut().zip(&counts) {
                        *a += b;
                    }
                }
                None => self.classes.push((key, counts, group)),
            }
        }
    }
}

/// Decode a flattened box index into the lattice point, mixed radix 2H+1.
fn decode_point(mut idx: u64, s: usize, h: u64) -> Vec<BigInt> {
    let base = 2 * h + 1;
    let mut t = Vec::with_capacity(s);
    for _ in 0..s {
        let digit = idx % base;
        idx /= base;
        t.push(BigInt::from(digit as i64 - h as i64));
    }
    t
}

fn max_norm(t: &[BigInt]) -> u64 {
    t.iter()
        .map(|x| {
            let v: BigInt = if x < &BigInt::from(0) { -x } else { x.clone() };
            v.to_u64().unwrap_or(u64::MAX)
        })
        .max()
        .unwrap_or(0)
}

/// Exhaustive census over `|t| <= max(heights)`, bucketed per height.
/// Results are independent of the worker count.
pub fn census(
    f: &MultiPoly,
    heights: &[u64],
    mode: Mode,
    cfg: &RunConfig,
) -> Result<CensusReport> {
    let main = f
        .main_var()
        .ok_or_else(|| Error::Domain("no main variable".into()))?
        .to_string();
    let n = f.degree_in(&main);
    if heights.is_empty() {
        return Err(Error::Domain("at least one height is required".into()));
    }
    if heights.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Domain("heights must be strictly ascending".into()));
    }
    let s = f.param_vars().len();
    if s == 0 {
        return Err(Error::Domain("f has no parameters to specialize".into()));
    }
    let h_max = *heights.last().unwrap();
    let base = 2 * h_max + 1;
    let points = base.checked_pow(s as u32).filter(|&p| p <= BOX_POINT_CAP);
    let points = match points {
        Some(p) => p,
        None => {
            return Err(Error::CapExceeded(format!(
                "census box (2*{h_max}+1)^{s} exceeds the budget of {BOX_POINT_CAP} points"
            )))
        }
    };

    // generic group: required for mode E, informative otherwise
    let generic = match generic_group(f, cfg) {
        Ok(g) => Some(g),
        Err(Error::Domain(_)) | Err(Error::CapExceeded(_)) => None,
        Err(e) => return Err(e),
    };
    if matches!(mode, Mode::GroupChanges) && generic.is_none() {
        return Err(Error::Domain(
            "mode E needs a generic group; degree too high or f reducible".into(),
        ));
    }
    if let (Mode::GroupEquals(k), Some((g, _))) = (&mode, &generic) {
        if k.degree() != n {
            return Err(Error::Domain(format!(
                "subgroup acts on {} points but f has degree {n}",
                k.degree()
            )));
        }
        let _ = g;
    }

    let id_cfg = cfg.identify_config();
    let buckets = heights.len();
    let workers = cfg.workers.max(1).min(points.max(1) as usize);
    let chunk = points.div_ceil(workers as u64);
    let generic_group_ref = generic.as_ref().map(|(g, _)| g);

    let shard_results: Vec<Result<ShardAccum>> = std::thread::scope(|scope| {
        let mut handles = vec![];
        for w in 0..workers {
            let lo = w as u64 * chunk;
            let hi = ((w as u64 + 1) * chunk).min(points);
            let f = &f;
            let heights = &heights;
            let mode = &mode;
            let id_cfg = &id_cfg;
            handles.push(scope.spawn(move || -> Result<ShardAccum> {
                let mut acc = ShardAccum::new(buckets);
                for idx in lo..hi {
                    let t = decode_point(idx, s, h_max);
                    let norm = max_norm(&t);
                    let bucket = heights.partition_point(|&h| h < norm);
                    if bucket >= buckets {
                        // point outside every requested height (impossible
                        // since h_max is the last height)
                        continue;
                    }
                    let outcome =
                        classify_point(f, n, &t, mode, generic_group_ref, id_cfg)?;
                    acc.add(bucket, outcome);
                }
                Ok(acc)
            }));
        }
        handles.into_iter().map(|h| h.join().expect("no panics")).collect()
    });

    let mut acc = ShardAccum::new(buckets);
    for shard in shard_results {
        acc.merge(shard?);
    }

    // containment: every classified group embeds in the generic group
    if let Some((g, gname)) = &generic {
        for (key, _, group) in &acc.classes {
            if let Some(group) = group {
                if !group.embeds_up_to_conjugacy(g) {
                    return Err(Error::Inconsistent(format!(
                        "class {key} does not embed in the generic group {gname}"
                    )));
                }
            }
        }
    }

    // prefix sums turn per-bucket tallies into per-height cumulative counts
    let cumulative = |v: &[u64]| -> Vec<u64> {
        let mut out = Vec::with_capacity(v.len());
        let mut running = 0;
        for &x in v {
            running += x;
            out.push(running);
        }
        out
    };
    let counted = cumulative(&acc.counted);
    let degenerate = cumulative(&acc.degenerate);
    let total = cumulative(&acc.total);
    let mut class_names: Vec<String> = acc.classes.iter().map(|(k, _, _)| k.clone()).collect();
    class_names.sort();

    let mut rows = vec![];
    for (i, &h) in heights.iter().enumerate() {
        let expected_total = (2 * h + 1).pow(s as u32);
        if total[i] != expected_total {
            return Err(Error::Inconsistent(format!(
                "partition violated at H = {h}: {} classified, expected {expected_total}",
                total[i]
            )));
        }
        let mut by_class = vec![];
        for name in &class_names {
            let (_, counts, _) = acc
                .classes
                .iter()
                .find(|(k, _, _)| k == name)
                .expect("name from the same list");
            let cum: u64 = counts[..=i].iter().sum();
            if cum > 0 {
                by_class.push((name.clone(), cum));
            }
        }
        rows.push(HeightRow {
            height: h,
            count: counted[i],
            degenerate: degenerate[i],
            total: total[i],
            by_class,
        });
    }
    // monotonicity is structural (cumulative sums), checked defensively
    debug_assert!(rows.windows(2).all(|w| w[0].count <= w[1].count));

    let (predicted, predicted_expr) = predicted_exponent(&mode, s, generic.as_ref())?;
    let fit_points: Vec<(u64, u64)> = rows.iter().map(|r| (r.height, r.count)).collect();
    let fit = fit_exponent(&fit_points).ok();

    Ok(CensusReport {
        poly: f.to_string(),
        degree: n,
        parameters: s,
        mode: mode.letter().to_string(),
        subgroup: match &mode {
            Mode::GroupEquals(k) => Some(k.describe()),
            _ => None,
        },
        generic_group: generic.as_ref().map(|(_, name)| name.clone()),
        generic_order: generic.as_ref().map(|(g, _)| g.order()),
        predicted_exponent: predicted,
        predicted_exponent_expr: predicted_expr,
        fitted_slope: fit.map(|(s, _)| s),
        fit_residual: fit.map(|(_, r)| r),
        rows,
        seed: cfg.seed,
    })
}

/// The exponent the bounds predict: `s - 1 + |G/K|^-1` for mode N,
/// `s - 1 + delta_G` for E, `s - 1 + gamma_G` for R.
fn predicted_exponent(
    mode: &Mode,
    s: usize,
    generic: Option<&(PermGroup, String)>,
) -> Result<(Option<f64>, Option<String>)> {
    let (g, _) = match generic {
        Some(pair) => pair,
        None => return Ok((None, None)),
    };
    let base = s as f64 - 1.0;
    match mode {
        Mode::GroupEquals(k) => {
            if !k.embeds_up_to_conjugacy(g) {
                return Ok((None, Some("K does not embed in G".into())));
            }
            let inv_index = k.order() as f64 / g.order() as f64;
            Ok((
                Some(base + inv_index),
                Some(format!("s-1+{}/{}", k.order(), g.order())),
            ))
        }
        Mode::GroupChanges => match g.delta()? {
            Some(d) => {
                let v = *d.numer() as f64 / *d.denom() as f64;
                Ok((Some(base + v), Some(format!("s-1+{d}"))))
            }
            None => Ok((None, None)),
        },
        Mode::Reducible => {
            let gm = g.gamma()?;
            let v = *gm.numer() as f64 / *gm.denom() as f64;
            Ok((Some(base + v), Some(format!("s-1+{gm}"))))
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ResolventCensusRow {
    pub height: u64,
    /// Specializations whose resolvent has an integer root.
    pub integer_root_count: u64,
    /// Specializations whose splitting group equals K up to conjugacy.
    pub group_equals_count: u64,
}

/// Count `t` with an integer resolvent root against the mode-N count; the
/// former dominates the latter for every height (the resolvent root is a
/// necessary condition).
pub fn resolvent_census(
    r: &Resolvent,
    heights: &[u64],
    cfg: &RunConfig,
) -> Result<Vec<ResolventCensusRow>> {
    if heights.is_empty() || heights.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Domain("heights must be ascending and nonempty".into()));
    }
    let main = r
        .f
        .main_var()
        .ok_or_else(|| Error::Domain("no main variable".into()))?
        .to_string();
    let n = r.f.degree_in(&main);
    let s = r.f.param_vars().len();
    let h_max = *heights.last().unwrap();
    let base = 2 * h_max + 1;
    let points = base
        .checked_pow(s as u32)
        .filter(|&p| p <= BOX_POINT_CAP)
        .ok_or_else(|| Error::CapExceeded("resolvent census box too large".into()))?;
    let id_cfg = cfg.identify_config();

    let buckets = heights.len();
    let mut m_buckets = vec![0u64; buckets];
    let mut n_buckets = vec![0u64; buckets];
    for idx in 0..points {
        let t = decode_point(idx, s, h_max);
        let bucket = heights.partition_point(|&h| h < max_norm(&t));
        if bucket >= buckets {
            continue;
        }
        if r.root_test(&t)?.is_some() {
            m_buckets[bucket] += 1;
        }
        let p = r.f.specialize(&t)?;
        let class = splitting_class(&p, n, &id_cfg)?;
        if class.name != "zero" && class.group.is_conjugate_to(&r.k) {
            n_buckets[bucket] += 1;
        }
    }
    let mut rows = vec![];
    let (mut m_cum, mut n_cum) = (0u64, 0u64);
    for (i, &h) in heights.iter().enumerate() {
        m_cum += m_buckets[i];
        n_cum += n_buckets[i];
        if n_cum > m_cum {
            return Err(Error::Inconsistent(format!(
                "resolvent upper bound violated at H = {h}: N = {n_cum} > M = {m_cum}"
            )));
        }
        rows.push(ResolventCensusRow {
            height: h,
            integer_root_count: m_cum,
            group_equals_count: n_cum,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_multipoly;

    fn quick_cfg() -> RunConfig {
        RunConfig {
            sample_floor: 4,
            ..RunConfig::default()
        }
    }

    #[test]
    fn fit_exponent_examples() {
        // R counts of the square-root family: floor(sqrt(H)) + 1
        let pts: Vec<(u64, u64)> = [100u64, 10_000, 1_000_000]
            .iter()
            .map(|&h| (h, (h as f64).sqrt().floor() as u64 + 1))
            .collect();
        let (slope, _) = fit_exponent(&pts).unwrap();
        assert!((slope - 0.5).abs() < 0.02, "slope {slope}");

        let flat = [(10u64, 7u64), (100, 7), (1000, 7)];
        let (slope, resid) = fit_exponent(&flat).unwrap();
        assert_eq!(slope, 0.0);
        assert!(resid < 1e-12);

        assert!(fit_exponent(&[(10, 0), (100, 0), (1000, 0)]).is_err());
        assert!(fit_exponent(&[(10, 5), (100, 9)]).is_err());
    }

    #[test]
    fn generic_groups_of_reference_families() {
        let cfg = quick_cfg();
        let (g, name) = generic_group(&parse_multipoly("X^2 - T1").unwrap(), &cfg).unwrap();
        assert_eq!((g.order(), name.as_str()), (2, "S2"));
        let (g, name) = generic_group(&parse_multipoly("X^3 - T1").unwrap(), &cfg).unwrap();
        assert_eq!((g.order(), name.as_str()), (6, "S3"));
        let (g, name) = generic_group(&parse_multipoly("X^5 - T1").unwrap(), &cfg).unwrap();
        assert_eq!((g.order(), name.as_str()), (20, "F20"));
    }

    #[test]
    fn census_r_square_family() {
        // reducible exactly at perfect squares: 11 of them up to 100
        let f = parse_multipoly("X^2 - T1").unwrap();
        let report = census(&f, &[10, 100], Mode::Reducible, &quick_cfg()).unwrap();
        assert_eq!(report.rows[0].count, 4); // 0, 1, 4, 9
        assert_eq!(report.rows[1].count, 11);
        assert_eq!(report.rows[1].total, 201);
        // degenerate points: only t = 0
        assert_eq!(report.rows[1].degenerate, 1);
    }

    #[test]
    fn census_n_square_family_small() {
        let f = parse_multipoly("X^2 - T1").unwrap();
        // independent oracle over t = -10..=10: group is S2 unless t is a
        // perfect square (0, 1, 4, 9), so 21 - 4 = 17
        let k = PermGroup::symmetric(2);
        let report = census(&f, &[10], Mode::GroupEquals(k), &quick_cfg()).unwrap();
        assert_eq!(report.rows[0].count, 17);

        let trivial = PermGroup::trivial(2);
        let report = census(&f, &[10], Mode::GroupEquals(trivial), &quick_cfg()).unwrap();
        assert_eq!(report.rows[0].count, 4);
        assert_eq!(report.predicted_exponent, Some(0.5));
    }

    #[test]
    fn census_e_square_family() {
        let f = parse_multipoly("X^2 - T1").unwrap();
        let report = census(&f, &[10], Mode::GroupChanges, &quick_cfg()).unwrap();
        // E counts trivial-group points: the perfect squares
        assert_eq!(report.rows[0].count, 4);
    }

    #[test]
    fn census_is_worker_count_invariant() {
        let f = parse_multipoly("X^3 - T1").unwrap();
        let mut cfg1 = quick_cfg();
        cfg1.workers = 1;
        let mut cfg4 = quick_cfg();
        cfg4.workers = 4;
        let a = census(&f, &[15], Mode::Reducible, &cfg1).unwrap();
        let b = census(&f, &[15], Mode::Reducible, &cfg4).unwrap();
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn census_rejects_bad_heights() {
        let f = parse_multipoly("X^2 - T1").unwrap();
        assert!(census(&f, &[], Mode::Reducible, &quick_cfg()).is_err());
        assert!(census(&f, &[10, 10], Mode::Reducible, &quick_cfg()).is_err());
        assert!(census(&f, &[100, 10], Mode::Reducible, &quick_cfg()).is_err());
    }

    #[test]
    fn csv_shape() {
        let f = parse_multipoly("X^2 - T1").unwrap();
        let report = census(&f, &[5, 10], Mode::Reducible, &quick_cfg()).unwrap();
        let csv = report.to_csv();
        let lines: Vec<&str> = csv.trim().lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[0].starts_with("H,mode,subgroup,count"));
        assert!(lines[1].starts_with("5,R,-,"));
    }
}
