//! Command-line front end: resolvent construction, specialization censuses,
//! Galois group identification, and group invariant tables.

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::json;
use std::io::Write;
use std::process::ExitCode;

use galois_census::census::{census, generic_group, resolvent_census, Mode};
use galois_census::config::{OutputFormat, RunConfig, CONFIG_ENV_VAR};
use galois_census::error::Error;
use galois_census::galois::{identify, Confidence, GroupTag};
use galois_census::perm::{parse_group, PermGroup};
use galois_census::poly::{parse_multipoly, parse_unipoly, MultiPoly};
use galois_census::resolvent::{
    build_resolvent, find_params, ResolventParams, RESOLVENT_DEGREE_WARN,
};

#[derive(Parser)]
#[command(
    name = "galois-census",
    about = "Exact Galois resolvents and specialization censuses for parametric integer polynomials",
    version
)]
struct Cli {
    /// Path to a key=value config file (default: $GALOIS_CENSUS_CONFIG).
    #[arg(long, global = true)]
    config: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// Root-enclosure precision in bits.
    #[arg(long)]
    precision: Option<u32>,
    /// Random seed; identical seeds give byte-identical output.
    #[arg(long)]
    seed: Option<u64>,
    /// Output file (stdout when absent).
    #[arg(long)]
    out: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Build the Galois resolvent of a polynomial and subgroup.
    Resolvent {
        /// Parametric polynomial, e.g. "X^2 - T1" (monic in X; monicized
        /// with a notice otherwise).
        #[arg(long)]
        poly: String,
        /// Subgroup of S_n: "trivial", a name (S3, C5, D5, F20, V4, A4),
        /// or generators like "(1 2),(1 2 3)".
        #[arg(long)]
        subgroup: String,
        /// Resolvent parameters "gamma=0;e=1,2;d=1" (searched when absent).
        #[arg(long)]
        params: Option<String>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Count specializations by height: N (group equals subgroup),
    /// E (group differs from the generic group), R (reducible).
    Count {
        #[arg(long)]
        poly: String,
        /// N, E, or R.
        #[arg(long)]
        mode: String,
        /// Target subgroup for mode N.
        #[arg(long)]
        subgroup: Option<String>,
        /// Ascending heights, e.g. "100,1000,10000".
        #[arg(long)]
        heights: String,
        /// csv or json.
        #[arg(long)]
        format: Option<String>,
        /// Worker threads for the enumeration.
        #[arg(long)]
        workers: Option<usize>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Identify the Galois group of a univariate integer polynomial.
    Identify {
        /// Univariate polynomial in X, e.g. "X^5 - 2".
        #[arg(long)]
        poly: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Order, delta, gamma, and the subgroup table of a named group.
    Invariants {
        /// Group name (S5, A5, C2, D5, F20, ...) or generators with --degree.
        #[arg(long)]
        group: String,
        /// Degree context for generator lists.
        #[arg(long)]
        degree: Option<usize>,
        /// json (default: human-readable text).
        #[arg(long)]
        format: Option<String>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Count specializations whose resolvent picks up an integer root,
    /// against the mode-N count (the inequality of the root criterion).
    ResolventCount {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        subgroup: String,
        #[arg(long)]
        heights: String,
        #[command(flatten)]
        common: CommonOpts,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn load_config(path_flag: &Option<String>, common: &CommonOpts) -> Result<RunConfig, Error> {
    let mut cfg = RunConfig::default();
    let path = path_flag
        .clone()
        .or_else(|| std::env::var(CONFIG_ENV_VAR).ok());
    if let Some(path) = path {
        let content = std::fs::read_to_string(&path)
            .map_err(|e| Error::Parse(format!("cannot read config {path}: {e}")))?;
        cfg.apply_file(&content)?;
    }
    if let Some(p) = common.precision {
        cfg.apply_kv("precision", &p.to_string())?;
    }
    if let Some(s) = common.seed {
        cfg.apply_kv("seed", &s.to_string())?;
    }
    Ok(cfg)
}

fn emit(out: &Option<String>, content: &str) -> Result<(), Error> {
    match out {
        None => {
            print!("{content}");
            std::io::stdout().flush().ok();
            Ok(())
        }
        Some(path) => std::fs::write(path, content)
            .map_err(|e| Error::Parse(format!("cannot write {path}: {e}"))),
    }
}

fn parse_heights(spec: &str) -> Result<Vec<u64>, Error> {
    let heights: Result<Vec<u64>, _> = spec
        .split(',')
        .map(|s| s.trim().parse::<u64>())
        .collect();
    let heights = heights.map_err(|_| Error::Parse(format!("bad heights list '{spec}'")))?;
    if heights.is_empty() || heights.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Parse(
            "heights must be a nonempty ascending list".into(),
        ));
    }
    Ok(heights)
}

/// Parse "gamma=0;e=1,2;d=1" into resolvent parameters.
fn parse_resolvent_params(
    spec: &str,
    f: &MultiPoly,
    k: &PermGroup,
) -> Result<ResolventParams, Error> {
    let main = f
        .main_var()
        .ok_or_else(|| Error::Parse("polynomial has no main variable".into()))?;
    let n = f.degree_in(main);
    let reps = PermGroup::coset_reps(&PermGroup::symmetric(n), k)?;
    let mut gamma = BigInt::from(0);
    let mut e: Option<Vec<u32>> = None;
    let mut d: Option<Vec<u32>> = None;
    for part in spec.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("bad parameter '{part}'")))?;
        let list = |v: &str| -> Result<Vec<u32>, Error> {
            v.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad exponent '{x}'")))
                })
                .collect()
        };
        match key.trim() {
            "gamma" => {
                gamma = value
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad gamma '{value}'")))?
            }
            "e" => e = Some(list(value)?),
            "d" => d = Some(list(value)?),
            other => return Err(Error::Parse(format!("unknown parameter '{other}'"))),
        }
    }
    let e = e.unwrap_or_else(|| (1..=n as u32).collect());
    let d = d.unwrap_or_else(|| (1..=k.order() as u32).collect());
    if e.len() != n {
        return Err(Error::Parse(format!("e must have {n} entries")));
    }
    if d.len() != k.order() {
        return Err(Error::Parse(format!("d must have {} entries", k.order())));
    }
    if e.iter().chain(d.iter()).any(|&x| x == 0) {
        return Err(Error::Parse("e and d entries must be positive".into()));
    }
    Ok(ResolventParams { gamma, e, d, reps })
}

fn prepare_poly_subgroup(poly: &str, subgroup: &str) -> Result<(MultiPoly, PermGroup), Error> {
    let parsed = parse_multipoly(poly)?;
    let main = parsed
        .main_var()
        .ok_or_else(|| Error::Parse("polynomial has no main variable".into()))?
        .to_string();
    let f = if parsed.is_monic_in(&main) {
        parsed
    } else {
        eprintln!("notice: polynomial is not monic in {main}; using its monic companion");
        parsed.monicize(&main)?
    };
    let n = f.degree_in(&main);
    let k = parse_group(subgroup, Some(n))?;
    Ok((f, k))
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Resolvent {
            poly,
            subgroup,
            params,
            common,
        } => {
            let cfg = load_config(&cli.config, &common)?;
            let (f, k) = prepare_poly_subgroup(&poly, &subgroup)?;
            let params = match params {
                Some(spec) => parse_resolvent_params(&spec, &f, &k)?,
                None => find_params(&f, &k, &cfg.resolvent_config())?,
            };
            if params.reps.len() > RESOLVENT_DEGREE_WARN {
                eprintln!(
                    "notice: resolvent degree m = {} is large; this may take a while",
                    params.reps.len()
                );
            }
            let r = build_resolvent(&f, &k, &params, &cfg.resolvent_config())?;
            emit(&common.out, &r.to_text())
        }
        Command::Count {
            poly,
            mode,
            subgroup,
            heights,
            format,
            workers,
            common,
        } => {
            let mut cfg = load_config(&cli.config, &common)?;
            if let Some(w) = workers {
                cfg.apply_kv("workers", &w.to_string())?;
            }
            if let Some(fmt) = format {
                cfg.apply_kv("format", &fmt)?;
            }
            let heights = parse_heights(&heights)?;
            let f = parse_multipoly(&poly)?;
            let mode = match mode.as_str() {
                "R" | "r" => Mode::Reducible,
                "E" | "e" => Mode::GroupChanges,
                "N" | "n" => {
                    let sub = subgroup
                        .ok_or_else(|| Error::Parse("mode N needs --subgroup".into()))?;
                    let main = f.main_var().ok_or_else(|| {
                        Error::Parse("polynomial has no main variable".into())
                    })?;
                    let n = f.degree_in(main);
                    Mode::GroupEquals(parse_group(&sub, Some(n))?)
                }
                other => {
                    return Err(Error::Parse(format!(
                        "mode must be N, E, or R, got '{other}'"
                    )))
                }
            };
            let report = census(&f, &heights, mode, &cfg)?;
            let content = match cfg.format {
                OutputFormat::Csv => report.to_csv(),
                OutputFormat::Json => format!("{}\n", report.to_json()),
            };
            emit(&common.out, &content)
        }
        Command::Identify { poly, common } => {
            let cfg = load_config(&cli.config, &common)?;
            let p = parse_unipoly(&poly, "X")?;
            let tag = identify(&p, &cfg.identify_config())?;
            let value = match &tag {
                GroupTag::Identified {
                    group,
                    name,
                    confidence,
                } => json!({
                    "kind": "identified",
                    "name": name,
                    "order": group.order(),
                    "degree": group.degree(),
                    "generators": group.generators().iter()
                        .map(|g| g.to_cycle_string()).collect::<Vec<_>>(),
                    "confidence": confidence_json(confidence),
                }),
                GroupTag::Reducible { degrees } => json!({
                    "kind": "reducible",
                    "factor_degrees": degrees,
                }),
                GroupTag::Degenerate { reason } => json!({
                    "kind": "degenerate",
                    "reason": format!("{reason:?}"),
                }),
                GroupTag::CycleTypes { observed } => json!({
                    "kind": "cycle-census",
                    "observed_cycle_types": observed,
                }),
            };
            emit(
                &common.out,
                &format!("{}\n", serde_json::to_string_pretty(&value).unwrap()),
            )
        }
        Command::Invariants {
            group,
            degree,
            format,
            common,
        } => {
            let _cfg = load_config(&cli.config, &common)?;
            let g = parse_group(&group, degree)?;
            let delta = g.delta()?;
            let gamma = if g.degree() >= 2 {
                Some(g.gamma()?)
            } else {
                None
            };
            let subgroups = g.all_subgroups()?;
            let mut order_tally: Vec<(usize, usize, usize)> = vec![];
            for k in &subgroups {
                let transitive = k.is_transitive() as usize;
                match order_tally.iter_mut().find(|(o, _, _)| *o == k.order()) {
                    Some((_, count, trans)) => {
                        *count += 1;
                        *trans += transitive;
                    }
                    None => order_tally.push((k.order(), 1, transitive)),
                }
            }
            order_tally.sort_unstable();
            let is_json = matches!(format.as_deref(), Some("json"));
            let content = if is_json {
                let value = json!({
                    "group": g.describe(),
                    "degree": g.degree(),
                    "order": g.order(),
                    "delta": delta.map(|d| d.to_string()),
                    "gamma": gamma.map(|d| d.to_string()),
                    "subgroup_count": subgroups.len(),
                    "subgroups_by_order": order_tally.iter().map(|(o, c, t)| json!({
                        "order": o, "count": c, "transitive": t,
                    })).collect::<Vec<_>>(),
                });
                format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
            } else {
                let mut s = String::new();
                s.push_str(&format!("group     = {}\n", g.describe()));
                s.push_str(&format!("degree    = {}\n", g.degree()));
                s.push_str(&format!("order     = {}\n", g.order()));
                s.push_str(&format!(
                    "delta     = {}\n",
                    delta
                        .map(|d| d.to_string())
                        .unwrap_or_else(|| "undefined (trivial group)".into())
                ));
                s.push_str(&format!(
                    "gamma     = {}\n",
                    gamma
                        .map(|d| d.to_string())
                        .unwrap_or_else(|| "undefined (degree < 2)".into())
                ));
                s.push_str(&format!("subgroups = {}\n", subgroups.len()));
                s.push_str("order  count  transitive\n");
                for (o, c, t) in order_tally {
                    s.push_str(&format!("{o:<6} {c:<6} {t}\n"));
                }
                s
            };
            emit(&common.out, &content)
        }
        Command::ResolventCount {
            poly,
            subgroup,
            heights,
            common,
        } => {
            let cfg = load_config(&cli.config, &common)?;
            let heights = parse_heights(&heights)?;
            let (f, k) = prepare_poly_subgroup(&poly, &subgroup)?;
            let params = find_params(&f, &k, &cfg.resolvent_config())?;
            let r = build_resolvent(&f, &k, &params, &cfg.resolvent_config())?;
            let rows = resolvent_census(&r, &heights, &cfg)?;
            let (_, gname) = generic_group(&f, &cfg)?;
            let mut content = String::from("H,integer_root_count,group_equals_count,generic\n");
            for row in &rows {
                content.push_str(&format!(
                    "{},{},{},{}\n",
                    row.height, row.integer_root_count, row.group_equals_count, gname
                ));
            }
            emit(&common.out, &content)
        }
    }
}

fn confidence_json(c: &Confidence) -> serde_json::Value {
    match c {
        Confidence::Exact => json!({"kind": "exact"}),
        Confidence::MonteCarlo { error_bound } => json!({
            "kind": "monte-carlo",
            "error_bound": error_bound,
        }),
    }
}
