//! Exact polynomial interpolation (Newton divided differences over the
//! rationals), with an integer-coefficient wrapper and a tensor-grid
//! multivariate variant used by the resolvent builder.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeMap;

use super::multi::MultiPoly;
use super::uni::UniPoly;
use crate::error::{Error, Result};

/// Unique polynomial of degree < nodes.len() through the given points,
/// as ascending rational coefficients.
pub fn newton_interpolate(points: &[(BigRational, BigRational)]) -> Result<Vec<BigRational>> {
    let n = points.len();
    if n == 0 {
        return Ok(vec![]);
    }
    for i in 0..n {
        for j in i + 1..n {
            if points[i].0 == points[j].0 {
                return Err(Error::Domain("interpolation nodes must be distinct".into()));
            }
        }
    }
    // divided differences
    let mut table: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
    let mut coeffs = vec![table[0].clone()];
    for level in 1..n {
        for i in (level..n).rev() {
            let dx = &points[i].0 - &points[i - level].0;
            table[i] = (&table[i] - &table[i - 1]) / dx;
        }
        coeffs.push(table[level].clone());
    }
    // expand the Newton form into monomial coefficients
    let mut out = vec![BigRational::zero(); n];
    let mut basis = vec![BigRational::from(BigInt::from(1))]; // running prod (x - x_i)
    for (level, c) in coeffs.iter().enumerate() {
        for (k, b) in basis.iter().enumerate() {
            out[k] += c * b;
        }
        if level + 1 < n {
            // basis *= (x - x_level)
            let root = &points[level].0;
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] += b;
                next[k] -= b * root;
            }
            basis = next;
        }
    }
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    Ok(out)
}

/// Exact reconstruction of an integer polynomial of degree <= `degree_bound`
/// from integer evaluations. Errors when too few nodes are supplied or the
/// interpolant is non-integral (wrong bound or corrupted upstream values).
pub fn interpolate_integer(
    points: &[(BigInt, BigInt)],
    degree_bound: usize,
) -> Result<UniPoly> {
    if points.len() < degree_bound + 1 {
        return Err(Error::Domain(format!(
            "need at least {} nodes for degree bound {}, got {}",
            degree_bound + 1,
            degree_bound,
            points.len()
        )));
    }
    let rational_points: Vec<(BigRational, BigRational)> = points
        .iter()
        .map(|(x, y)| (BigRational::from(x.clone()), BigRational::from(y.clone())))
        .collect();
    let coeffs = newton_interpolate(&rational_points)?;
    if coeffs.len() > degree_bound + 1 {
        return Err(Error::Precision(format!(
            "interpolant has degree {} above the stated bound {}",
            coeffs.len() - 1,
            degree_bound
        )));
    }
    let mut out = Vec::with_capacity(coeffs.len());
    for c in coeffs {
        if !c.is_integer() {
            return Err(Error::Precision(
                "interpolant has non-integral coefficients".into(),
            ));
        }
        out.push(c.to_integer());
    }
    Ok(UniPoly::new(out))
}

/// Interpolate an integer polynomial in the parameter variables from exact
/// values on a full tensor grid: `axes[v]` lists the nodes of variable
/// `var_names[v]`, and `values` maps each grid index vector to the value.
/// Recurses one variable at a time.
pub fn interpolate_tensor(
    var_names: &[String],
    axes: &[Vec<BigInt>],
    values: &dyn Fn(&[usize]) -> BigRational,
) -> Result<MultiPoly> {
    assert_eq!(var_names.len(), axes.len());
    let rational = interp_tensor_rec(var_names, axes, values, &mut vec![])?;
    // clear to integers
    let mut terms = vec![];
    for (exp, c) in rational {
        if !c.is_integer() {
            return Err(Error::Precision(
                "tensor interpolant has non-integral coefficients".into(),
            ));
        }
        let n = c.to_integer();
        if !n.is_zero() {
            terms.push((exp, n));
        }
    }
    Ok(MultiPoly::from_terms(var_names.to_vec(), terms))
}

fn interp_tensor_rec(
    var_names: &[String],
    axes: &[Vec<BigInt>],
    values: &dyn Fn(&[usize]) -> BigRational,
    prefix: &mut Vec<usize>,
) -> Result<BTreeMap<Vec<u32>, BigRational>> {
    let v = prefix.len();
    if v == var_names.len() {
        let mut map = BTreeMap::new();
        let c = values(prefix);
        if !c.is_zero() {
            map.insert(vec![], c);
        }
        return Ok(map);
    }
    // interpolate in variable v: for each node, recursively build the tail
    // polynomial, then interpolate each tail coefficient across the nodes
    let mut per_node: Vec<BTreeMap<Vec<u32>, BigRational>> = vec![];
    for i in 0..axes[v].len() {
        prefix.push(i);
        per_node.push(interp_tensor_rec(var_names, axes, values, prefix)?);
        prefix.pop();
    }
    let mut all_exponents: Vec<Vec<u32>> = vec![];
    for m in &per_node {
        for e in m.keys() {
            if !all_exponents.contains(e) {
                all_exponents.push(e.clone());
            }
        }
    }
    let mut out: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
    for tail_exp in all_exponents {
        let points: Vec<(BigRational, BigRational)> = axes[v]
            .iter()
            .enumerate()
            .map(|(i, x)| {
                (
                    BigRational::from(x.clone()),
                    per_node[i]
                        .get(&tail_exp)
                        .cloned()
                        .unwrap_or_else(BigRational::zero),
                )
            })
            .collect();
        let coeffs = newton_interpolate(&points)?;
        for (k, c) in coeffs.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut exp = vec![k as u32];
            exp.extend(&tail_exp);
            *out.entry(exp).or_insert_with(BigRational::zero) += c;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_multipoly;

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn cube_reconstruction() {
        // three nodes are not enough for degree bound 3
        let three = [(bi(0), bi(0)), (bi(1), bi(1)), (bi(2), bi(8))];
        assert!(interpolate_integer(&three, 3).is_err());
        let four = [
            (bi(0), bi(0)),
            (bi(1), bi(1)),
            (bi(2), bi(8)),
            (bi(-1), bi(-1)),
        ];
        let p = interpolate_integer(&four, 3).unwrap();
        assert_eq!(p, UniPoly::from_i64(&[0, 0, 0, 1]));
    }

    #[test]
    fn constant_values() {
        let pts = [(bi(1), bi(7)), (bi(2), bi(7)), (bi(5), bi(7))];
        assert_eq!(interpolate_integer(&pts, 2).unwrap(), UniPoly::from_i64(&[7]));
    }

    #[test]
    fn evaluation_roundtrip() {
        let p = UniPoly::from_i64(&[0, -1, 2]); // 2T^2 - T
        let pts: Vec<(BigInt, BigInt)> = (0..4).map(|i| (bi(i), p.eval(&bi(i)))).collect();
        assert_eq!(interpolate_integer(&pts, 2).unwrap(), p);
        // degree bound violation reported
        let q = UniPoly::from_i64(&[1, 0, 0, 5]);
        let pts: Vec<(BigInt, BigInt)> = (0..6).map(|i| (bi(i), q.eval(&bi(i)))).collect();
        assert!(interpolate_integer(&pts, 2).is_err());
    }

    #[test]
    fn non_integral_detected() {
        // values of T/2 at odd nodes
        let pts = [(bi(1), bi(1)), (bi(3), bi(2)), (bi(5), bi(3))];
        assert!(matches!(
            interpolate_integer(&pts, 2),
            Err(Error::Precision(_))
        ));
    }

    #[test]
    fn tensor_two_variables() {
        let target = parse_multipoly("3*T1^2*T2 - T2 + 5").unwrap();
        let vars = vec!["T1".to_string(), "T2".to_string()];
        let axes = vec![
            vec![bi(0), bi(1), bi(2)],
            vec![bi(0), bi(1)],
        ];
        let values = |idx: &[usize]| {
            let t = [axes[0][idx[0]].clone(), axes[1][idx[1]].clone()];
            // evaluate target exactly at the grid point
            let mut acc = BigRational::zero();
            for (exp, c) in target.terms() {
                let mut term = BigRational::from(c.clone());
                for (vi, &e) in exp.iter().enumerate() {
                    for _ in 0..e {
                        term *= BigRational::from(t[vi].clone());
                    }
                }
                acc += term;
            }
            acc
        };
        let rebuilt = interpolate_tensor(&vars, &axes, &values).unwrap();
        assert_eq!(rebuilt, target);
    }
}
