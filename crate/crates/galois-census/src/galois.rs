//! Galois group identification for integer polynomials of degree <= 5,
//! the admissibility predicate for specializations, and classification of
//! splitting fields by their permutation action on the roots.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{Perm, PermGroup};
use crate::poly::{
    factor_degrees_mod_p, factor_rational, is_perfect_square, modp::primes_from, MultiPoly,
    UniPoly,
};

/// Sampling configuration for the cycle-type census over primes.
#[derive(Clone, Debug)]
pub struct IdentifyConfig {
    /// Smallest prime sampled.
    pub min_prime: u64,
    /// Number of usable primes sampled at most.
    pub prime_budget: usize,
    /// Keep sampling at least this many usable primes even after the
    /// candidate list is pinned, so Dedekind cross-checks have data
    /// (applies to degrees >= 3).
    pub sample_floor: usize,
}

impl Default for IdentifyConfig {
    fn default() -> Self {
        IdentifyConfig {
            min_prime: 11,
            prime_budget: 100,
            sample_floor: 8,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum Confidence {
    /// Pinned by exact invariants (factorization, discriminant, unique
    /// consistent candidate).
    Exact,
    /// Chance that an unobserved cycle-type class (density at least
    /// 1/|G|) evaded every sample.
    MonteCarlo { error_bound: f64 },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum DegenerateReason {
    DegreeDrop,
    Inseparable,
    Zero,
}

/// Identification result for one integer polynomial.
#[derive(Clone, Debug)]
pub enum GroupTag {
    /// Irreducible input: the Galois group as a transitive subgroup of S_n,
    /// up to conjugacy.
    Identified {
        group: PermGroup,
        name: String,
        confidence: Confidence,
    },
    /// Reducible input: degrees of the irreducible factors, descending.
    Reducible { degrees: Vec<usize> },
    /// Specialization broke a side condition (degree drop, repeated roots).
    Degenerate { reason: DegenerateReason },
    /// Degree >= 6: only the observed cycle-type census is reported.
    CycleTypes { observed: Vec<Vec<usize>> },
}

impl GroupTag {
    pub fn kind(&self) -> &'static str {
        match self {
            GroupTag::Identified { .. } => "identified",
            GroupTag::Reducible { .. } => "reducible",
            GroupTag::Degenerate { .. } => "degenerate",
            GroupTag::CycleTypes { .. } => "cycle-census",
        }
    }
}

/// Admissibility of a specialization: degree preserved and discriminant
/// nonzero (so the specialized group embeds into the generic group).
#[derive(Clone, Debug, PartialEq)]
pub enum Admissibility {
    Admissible,
    DegreeDrop { expected: usize, got: usize },
    ZeroDiscriminant,
}

impl Admissibility {
    pub fn is_admissible(&self) -> bool {
        matches!(self, Admissibility::Admissible)
    }
}

pub fn admissible(f: &MultiPoly, t: &[BigInt]) -> Result<Admissibility> {
    let main = f
        .main_var()
        .ok_or_else(|| Error::Domain("no main variable".into()))?
        .to_string();
    let n = f.degree_in(&main);
    let p = f.specialize(t)?;
    if p.is_zero() || p.degree() < n {
        return Ok(Admissibility::DegreeDrop {
            expected: n,
            got: if p.is_zero() { 0 } else { p.degree() },
        });
    }
    if n >= 1 && p.degree() >= 1 && p.discriminant()?.is_zero() {
        return Ok(Admissibility::ZeroDiscriminant);
    }
    Ok(Admissibility::Admissible)
}

/// Factor degree pattern of `p` mod `prime` (a cycle type of the Galois
/// group when usable), or `None` when the reduction is degenerate.
pub fn cycle_type_mod_p(p: &UniPoly, prime: u64) -> Option<Vec<usize>> {
    factor_degrees_mod_p(p, prime)
}

pub fn is_discriminant_square(p: &UniPoly) -> Result<bool> {
    let d = p.discriminant()?;
    if d.is_zero() {
        return Err(Error::Domain("inseparable polynomial".into()));
    }
    Ok(is_perfect_square(&d))
}

/// The transitive groups of degree 2..=5 as canonical representatives,
/// ordered by degree then order.
pub fn transitive_groups(n: usize) -> Vec<(PermGroup, &'static str)> {
    match n {
        2 => vec![(PermGroup::symmetric(2), "S2")],
        3 => vec![
            (PermGroup::cyclic(3), "C3"),
            (PermGroup::symmetric(3), "S3"),
        ],
        4 => vec![
            (PermGroup::cyclic(4), "C4"),
            (PermGroup::klein4(), "V4"),
            (PermGroup::dihedral(4), "D4"),
            (PermGroup::alternating(4), "A4"),
            (PermGroup::symmetric(4), "S4"),
        ],
        5 => vec![
            (PermGroup::cyclic(5), "C5"),
            (PermGroup::dihedral(5), "D5"),
            (PermGroup::frobenius20(), "F20"),
            (PermGroup::alternating(5), "A5"),
            (PermGroup::symmetric(5), "S5"),
        ],
        _ => vec![],
    }
}

/// Identify the Galois group of an integer polynomial.
///
/// Pipeline: degenerate checks, exact factorization, the discriminant-square
/// parity test, then a cycle-type census over primes matched against the
/// classification of transitive groups of degree <= 5. Every sampled cycle
/// type is asserted to occur in the reported group (Dedekind consistency).
pub fn identify(p: &UniPoly, cfg: &IdentifyConfig) -> Result<GroupTag> {
    if p.is_zero() || p.degree() == 0 {
        return Ok(GroupTag::Degenerate {
            reason: DegenerateReason::Zero,
        });
    }
    let n = p.degree();
    if n >= 2 && p.discriminant()?.is_zero() {
        return Ok(GroupTag::Degenerate {
            reason: DegenerateReason::Inseparable,
        });
    }
    let fac = factor_rational(p)?;
    if !fac.is_irreducible() {
        return Ok(GroupTag::Reducible {
            degrees: fac.degrees(),
        });
    }
    if n == 1 {
        return Ok(GroupTag::Identified {
            group: PermGroup::trivial(1),
            name: "trivial".into(),
            confidence: Confidence::Exact,
        });
    }

    let disc_square = is_discriminant_square(p)?;
    let (observed, samples) = sample_cycle_types(p, cfg, n, disc_square);

    if n > 5 {
        return Ok(GroupTag::CycleTypes { observed });
    }

    let mut candidates: Vec<(PermGroup, &'static str)> = transitive_groups(n)
        .into_iter()
        .filter(|(g, _)| g.is_even_group() == disc_square)
        .filter(|(g, _)| observed.iter().all(|t| g.has_cycle_type(t)))
        .collect();
    if candidates.is_empty() {
        return Err(Error::Inconsistent(format!(
            "no transitive group of degree {n} matches parity and observed cycle types of {p}"
        )));
    }
    candidates.sort_by_key(|(g, _)| g.order());
    let ambiguous = candidates.len() > 1;
    let (group, name) = candidates.swap_remove(0);
    // Dedekind consistency: every observed type is a type of the report
    for t in &observed {
        if !group.has_cycle_type(t) {
            return Err(Error::Inconsistent(format!(
                "sampled cycle type {t:?} is not realized in reported group {name}"
            )));
        }
    }
    let confidence = if ambiguous {
        let density = 1.0 / group.order() as f64;
        Confidence::MonteCarlo {
            error_bound: (1.0 - density).powi(samples as i32),
        }
    } else {
        Confidence::Exact
    };
    Ok(GroupTag::Identified {
        group,
        name: name.to_string(),
        confidence,
    })
}

/// Returns the distinct observed cycle types and the number of usable
/// primes actually sampled.
fn sample_cycle_types(
    p: &UniPoly,
    cfg: &IdentifyConfig,
    n: usize,
    disc_square: bool,
) -> (Vec<Vec<usize>>, usize) {
    let mut observed: Vec<Vec<usize>> = vec![];
    if n < 3 {
        // parity plus irreducibility already pin the unique candidate
        return (observed, 0);
    }
    let mut remaining_candidates = 2usize;
    let mut usable = 0usize;
    let mut prime = cfg.min_prime;
    while usable < cfg.prime_budget {
        if let Some(pattern) = factor_degrees_mod_p(p, prime) {
            usable += 1;
            if !observed.contains(&pattern) {
                observed.push(pattern);
                if n <= 5 {
                    remaining_candidates = transitive_groups(n)
                        .iter()
                        .filter(|(g, _)| g.is_even_group() == disc_square)
                        .filter(|(g, _)| observed.iter().all(|t| g.has_cycle_type(t)))
                        .count();
                }
            }
            if usable >= cfg.sample_floor && (n > 5 || remaining_candidates <= 1) {
                break;
            }
        }
        prime = primes_from(prime + 1, 1)[0];
    }
    observed.sort();
    (observed, usable)
}

/// A splitting-field class: the Galois group of the splitting field of a
/// (possibly reducible or degenerate) specialization, as a subgroup of the
/// ambient symmetric group up to conjugacy, with factors acting on blocks
/// and rational roots as fixed points.
#[derive(Clone, Debug)]
pub struct SplitClass {
    pub group: PermGroup,
    pub name: String,
    pub degenerate: Option<DegenerateReason>,
    pub reducible: bool,
    /// Degrees of the distinct irreducible factors, descending.
    pub factor_degrees: Vec<usize>,
    pub confidence: Confidence,
}

/// Classify the splitting field of `p` inside `S_ambient`.
///
/// Supported through ambient degree 5: at most two nonlinear factors can
/// occur, and composita of (2,2) and (3,2) splits are resolved through
/// discriminant comparisons (`Q(sqrt a) = Q(sqrt b)` iff `ab` is a square).
pub fn splitting_class(p: &UniPoly, ambient_n: usize, cfg: &IdentifyConfig) -> Result<SplitClass> {
    if ambient_n > 5 {
        return Err(Error::Domain(
            "splitting-field classification is implemented for degree <= 5".into(),
        ));
    }
    if p.is_zero() {
        return Ok(SplitClass {
            group: PermGroup::trivial(ambient_n),
            name: "zero".into(),
            degenerate: Some(DegenerateReason::Zero),
            reducible: false,
            factor_degrees: vec![],
            confidence: Confidence::Exact,
        });
    }
    // fast path for quadratic specializations: no root machinery needed
    if p.degree() == 2 && ambient_n == 2 {
        return quadratic_class(p);
    }
    let fac = factor_rational(p)?;
    let degenerate = if p.degree() < ambient_n {
        Some(DegenerateReason::DegreeDrop)
    } else if fac.factors.iter().any(|(_, m)| *m > 1) {
        Some(DegenerateReason::Inseparable)
    } else {
        None
    };
    let reducible = fac.count_with_multiplicity() > 1 && p.degree() >= 1;
    // distinct irreducible factors, descending degree
    let mut distinct: Vec<UniPoly> = fac.factors.iter().map(|(f, _)| f.clone()).collect();
    distinct.sort_by(|a, b| b.degree().cmp(&a.degree()).then(a.coeffs().cmp(b.coeffs())));
    let factor_degrees: Vec<usize> = distinct.iter().map(|f| f.degree()).collect();
    let nonlinear: Vec<&UniPoly> = distinct.iter().filter(|f| f.degree() >= 2).collect();

    let (group, name, confidence) = match nonlinear.len() {
        0 => (
            PermGroup::trivial(ambient_n),
            "trivial".to_string(),
            Confidence::Exact,
        ),
        1 => {
            let q = nonlinear[0];
            match identify(q, cfg)? {
                GroupTag::Identified {
                    group,
                    name,
                    confidence,
                } => {
                    let embedded = embed_block(&group, ambient_n, 0)?;
                    let name = if ambient_n == q.degree() {
                        name
                    } else {
                        embedded.describe()
                    };
                    (embedded, name, confidence)
                }
                other => {
                    return Err(Error::Inconsistent(format!(
                        "irreducible factor classified as {}",
                        other.kind()
                    )))
                }
            }
        }
        2 => {
            let (a, b) = (nonlinear[0], nonlinear[1]);
            compose_two_factors(a, b, ambient_n, cfg)?
        }
        _ => {
            return Err(Error::Inconsistent(
                "more than two nonlinear factors cannot occur at degree <= 5".into(),
            ))
        }
    };
    Ok(SplitClass {
        group,
        name,
        degenerate,
        reducible,
        factor_degrees,
        confidence,
    })
}

/// Exact classification of a quadratic by its discriminant alone.
fn quadratic_class(p: &UniPoly) -> Result<SplitClass> {
    let d = p.discriminant()?;
    if d.is_zero() {
        // a (X - r)^2 with rational double root r = -b/2a; the root is
        // rational exactly when the linear factor is integral, which holds
        // iff the squarefree part is linear
        let sf = p.squarefree_part();
        if sf.degree() == 1 {
            return Ok(SplitClass {
                group: PermGroup::trivial(2),
                name: "trivial".into(),
                degenerate: Some(DegenerateReason::Inseparable),
                reducible: true,
                factor_degrees: vec![1],
                confidence: Confidence::Exact,
            });
        }
        return Err(Error::Inconsistent(
            "quadratic with zero discriminant and nonlinear squarefree part".into(),
        ));
    }
    if is_perfect_square(&d) {
        // two rational roots, but a non-square leading coefficient can keep
        // the factors non-monic; the splitting field is Q either way
        Ok(SplitClass {
            group: PermGroup::trivial(2),
            name: "trivial".into(),
            degenerate: None,
            reducible: true,
            factor_degrees: vec![1, 1],
            confidence: Confidence::Exact,
        })
    } else {
        Ok(SplitClass {
            group: PermGroup::symmetric(2),
            name: "S2".into(),
            degenerate: None,
            reducible: false,
            factor_degrees: vec![2],
            confidence: Confidence::Exact,
        })
    }
}

/// Embed a group on d points into S_ambient acting on the block starting at
/// `offset` (0-based), fixing everything else.
fn embed_block(g: &PermGroup, ambient_n: usize, offset: usize) -> Result<PermGroup> {
    let d = g.degree();
    if offset + d > ambient_n {
        return Err(Error::Domain("block does not fit the ambient degree".into()));
    }
    let gens: Vec<Perm> = g
        .generators()
        .iter()
        .map(|p| {
            let mut images: Vec<usize> = (0..ambient_n).collect();
            for i in 0..d {
                images[offset + i] = offset + p.apply(i);
            }
            Perm::from_images(images).expect("valid embedding")
        })
        .collect();
    PermGroup::generate(ambient_n, gens)
}

/// Splitting group of a product of two irreducible nonlinear factors at
/// ambient degree <= 5: the degree pairs are (2,2) or (3,2).
fn compose_two_factors(
    a: &UniPoly,
    b: &UniPoly,
    ambient_n: usize,
    cfg: &IdentifyConfig,
) -> Result<(PermGroup, String, Confidence)> {
    let (da, db) = (a.degree(), b.degree());
    if da + db > ambient_n {
        return Err(Error::Inconsistent("factor degrees exceed ambient".into()));
    }
    if da == 2 && db == 2 {
        let disc_a = a.discriminant()?;
        let disc_b = b.discriminant()?;
        let same_field = is_perfect_square(&(&disc_a * &disc_b));
        let g = if same_field {
            // the two quadratics cut out the same field: diagonal C2
            PermGroup::generate(ambient_n, vec![two_block_swap(ambient_n, 0, 2)?])?
        } else {
            PermGroup::generate(
                ambient_n,
                vec![swap_pair(ambient_n, 0)?, swap_pair(ambient_n, 2)?],
            )?
        };
        let name = g.describe();
        return Ok((g, name, Confidence::Exact));
    }
    if da == 3 && db == 2 {
        let cubic_tag = identify(a, cfg)?;
        let cubic_group_name = match &cubic_tag {
            GroupTag::Identified { name, .. } => name.clone(),
            _ => return Err(Error::Inconsistent("cubic factor not identified".into())),
        };
        let disc_cubic = a.discriminant()?;
        let disc_quad = b.discriminant()?;
        let three_cycle = Perm::from_cycles(ambient_n, &[vec![1, 2, 3]])?;
        let g = if cubic_group_name == "C3" {
            // cyclic cubic fields contain no quadratic subfield
            PermGroup::generate(ambient_n, vec![three_cycle, swap_pair(ambient_n, 3)?])?
        } else if is_perfect_square(&(&disc_cubic * &disc_quad)) {
            // the quadratic resolvent field of the cubic is the quadratic's
            // field: order 6, transpositions coupled to the quadratic swap
            let coupled = Perm::from_cycles(ambient_n, &[vec![1, 2], vec![4, 5]])?;
            PermGroup::generate(ambient_n, vec![three_cycle, coupled])?
        } else {
            PermGroup::generate(
                ambient_n,
                vec![
                    three_cycle,
                    Perm::from_cycles(ambient_n, &[vec![1, 2]])?,
                    swap_pair(ambient_n, 3)?,
                ],
            )?
        };
        let name = g.describe();
        return Ok((g, name, Confidence::Exact));
    }
    Err(Error::Inconsistent(format!(
        "unexpected nonlinear degree pair ({da},{db}) at ambient {ambient_n}"
    )))
}

fn swap_pair(n: usize, offset: usize) -> Result<Perm> {
    Perm::from_cycles(n, &[vec![offset + 1, offset + 2]])
}

fn two_block_swap(n: usize, off_a: usize, off_b: usize) -> Result<Perm> {
    Perm::from_cycles(n, &[vec![off_a + 1, off_a + 2], vec![off_b + 1, off_b + 2]])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_multipoly;

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_i64(coeffs)
    }

    #[test]
    fn admissibility_examples() {
        let f = parse_multipoly("X^2 - T1").unwrap();
        assert_eq!(
            admissible(&f, &[BigInt::zero()]).unwrap(),
            Admissibility::ZeroDiscriminant
        );
        assert_eq!(
            admissible(&f, &[BigInt::from(2)]).unwrap(),
            Admissibility::Admissible
        );
        let g = parse_multipoly("T1*X^2 + X + 1").unwrap();
        assert!(matches!(
            admissible(&g, &[BigInt::zero()]).unwrap(),
            Admissibility::DegreeDrop {
                expected: 2,
                got: 1
            }
        ));
    }

    #[test]
    fn discriminant_square_examples() {
        assert!(is_discriminant_square(&p(&[-1, -3, 0, 1])).unwrap()); // disc 81
        assert!(!is_discriminant_square(&p(&[-2, 0, 0, 1])).unwrap()); // disc -108
        assert!(!is_discriminant_square(&p(&[-2, 0, 1])).unwrap()); // disc 8
        assert!(is_discriminant_square(&p(&[0, 0, 1])).is_err());
    }

    #[test]
    fn identify_quadratics() {
        let cfg = IdentifyConfig::default();
        match identify(&p(&[-2, 0, 1]), &cfg).unwrap() {
            GroupTag::Identified {
                name, confidence, ..
            } => {
                assert_eq!(name, "S2");
                assert_eq!(confidence, Confidence::Exact);
            }
            other => panic!("expected S2, got {other:?}"),
        }
        match identify(&p(&[-4, 0, 1]), &cfg).unwrap() {
            GroupTag::Reducible { degrees } => assert_eq!(degrees, vec![1, 1]),
            other => panic!("expected reducible, got {other:?}"),
        }
        assert!(matches!(
            identify(&p(&[0, 0, 1]), &cfg).unwrap(),
            GroupTag::Degenerate {
                reason: DegenerateReason::Inseparable
            }
        ));
    }

    #[test]
    fn identify_cubics() {
        let cfg = IdentifyConfig::default();
        // disc 81 square: cyclic
        match identify(&p(&[-1, -3, 0, 1]), &cfg).unwrap() {
            GroupTag::Identified { name, .. } => assert_eq!(name, "C3"),
            other => panic!("{other:?}"),
        }
        match identify(&p(&[-2, 0, 0, 1]), &cfg).unwrap() {
            GroupTag::Identified { name, .. } => assert_eq!(name, "S3"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn identify_quintic_order20() {
        let cfg = IdentifyConfig::default();
        match identify(&p(&[-2, 0, 0, 0, 0, 1]), &cfg).unwrap() {
            GroupTag::Identified { group, name, .. } => {
                assert_eq!(name, "F20");
                assert_eq!(group.order(), 20);
            }
            other => panic!("expected F20, got {other:?}"),
        }
    }

    #[test]
    fn identify_shift_invariance() {
        let cfg = IdentifyConfig::default();
        for coeffs in [[-2i64, 0, 0, 1], [-1, -3, 0, 1]] {
            let q = UniPoly::from_i64(&coeffs);
            let shifted = q.compose_shift(&BigInt::from(7));
            let a = identify(&q, &cfg).unwrap();
            let b = identify(&shifted, &cfg).unwrap();
            match (a, b) {
                (GroupTag::Identified { name: na, .. }, GroupTag::Identified { name: nb, .. }) => {
                    assert_eq!(na, nb)
                }
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn cycle_type_mod_p_examples() {
        assert_eq!(cycle_type_mod_p(&p(&[1, 0, 1]), 5), Some(vec![1, 1]));
        assert_eq!(cycle_type_mod_p(&p(&[1, 0, 1]), 3), Some(vec![2]));
        assert_eq!(cycle_type_mod_p(&p(&[1, 0, 1]), 2), None);
    }

    #[test]
    fn splitting_classes() {
        let cfg = IdentifyConfig::default();
        // X^2 at t=0: radical X, trivial group, degenerate
        let c = splitting_class(&p(&[0, 0, 1]), 2, &cfg).unwrap();
        assert_eq!(c.name, "trivial");
        assert_eq!(c.degenerate, Some(DegenerateReason::Inseparable));

        // cube split: (X-2)(X^2+2X+4) -> C2 acting on the quadratic block
        let c = splitting_class(&p(&[-8, 0, 0, 1]), 3, &cfg).unwrap();
        assert_eq!(c.group.order(), 2);
        assert!(c.reducible);
        assert_eq!(c.factor_degrees, vec![2, 1]);

        // same quadratic field twice: (X^2-2)(X^2-8) -> diagonal C2
        let q = p(&[-2, 0, 1]).mul(&p(&[-8, 0, 1]));
        let c = splitting_class(&q, 4, &cfg).unwrap();
        assert_eq!(c.group.order(), 2);
        assert_eq!(c.group.orbit_sizes(), vec![2, 2]);

        // different quadratic fields: (X^2-2)(X^2-3) -> C2 x C2
        let q = p(&[-2, 0, 1]).mul(&p(&[-3, 0, 1]));
        let c = splitting_class(&q, 4, &cfg).unwrap();
        assert_eq!(c.group.order(), 4);

        // S3 cubic times its own discriminant field: disc(X^3-2) = -108,
        // squarefree part -3, so pair with X^2+3
        let q = p(&[-2, 0, 0, 1]).mul(&p(&[3, 0, 1]));
        let c = splitting_class(&q, 5, &cfg).unwrap();
        assert_eq!(c.group.order(), 6);

        // S3 cubic times an unrelated quadratic: order 12
        let q = p(&[-2, 0, 0, 1]).mul(&p(&[-5, 0, 1]));
        let c = splitting_class(&q, 5, &cfg).unwrap();
        assert_eq!(c.group.order(), 12);

        // C3 cubic times a quadratic: order 6 direct product
        let q = p(&[-1, -3, 0, 1]).mul(&p(&[-5, 0, 1]));
        let c = splitting_class(&q, 5, &cfg).unwrap();
        assert_eq!(c.group.order(), 6);
    }

    #[test]
    fn degree_six_reports_cycle_census_only() {
        let cfg = IdentifyConfig {
            prime_budget: 20,
            ..IdentifyConfig::default()
        };
        // X^6 - X - 1 is irreducible with squarefree reductions aplenty
        match identify(&p(&[-1, -1, 0, 0, 0, 0, 1]), &cfg).unwrap() {
            GroupTag::CycleTypes { observed } => {
                assert!(!observed.is_empty());
                for t in &observed {
                    assert_eq!(t.iter().sum::<usize>(), 6);
                }
            }
            other => panic!("expected cycle census, got {:?}", other.kind()),
        }
    }

    #[test]
    fn identified_groups_are_transitive() {
        let cfg = IdentifyConfig::default();
        for coeffs in [
            vec![-2i64, 0, 1],
            vec![-2, 0, 0, 1],
            vec![-1, -3, 0, 1],
            vec![-2, 0, 0, 0, 0, 1],
            vec![2, 4, 0, 0, 0, 1],
        ] {
            if let GroupTag::Identified { group, .. } =
                identify(&UniPoly::from_i64(&coeffs), &cfg).unwrap()
            {
                assert!(group.is_transitive());
            }
        }
    }
}
