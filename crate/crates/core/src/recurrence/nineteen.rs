//! Nineteen-vertex recurrence factors and the reconstruction of `Z_N` as a
//! polynomial in `zeta_N` from its values at `zeta_N = z_k` and
//! `zeta_N = -q^{-3} z_k`.

use std::collections::HashMap;

use super::{check_index, with, without, PartitionEvaluator};
use crate::error::{Error, Result};
use crate::lattice::Normalization;
use crate::scalar::Field;

fn sizes<F>(zeta: &[F], z: &[F]) -> Result<usize> {
    if zeta.len() != z.len() {
        return Err(Error::Domain(format!(
            "{} row and {} column rapidities",
            zeta.len(),
            z.len()
        )));
    }
    Ok(zeta.len())
}

/// Factor at `zeta_j = z_i`. Carries `(q^3 + 1) z_i`, so it vanishes at
/// `q^3 = -1`.
pub fn factor_f19<F: Field>(i: usize, j: usize, zeta: &[F], z: &[F], q: &F) -> Result<F> {
    let n = sizes(zeta, z)?;
    check_index(i, n)?;
    check_index(j, n)?;
    let (q2, q3) = (q.square(), q.pow(3));
    let mut acc = (q3.clone() + &F::one()) * &z[i];
    for k in (0..n).filter(|&k| k != i) {
        acc = acc * &(q2.clone() * &z[i] - &z[k]) * &(q3.clone() * &z[i] + &z[k]);
    }
    for k in (0..n).filter(|&k| k != j) {
        acc = acc * &(q2.clone() * &zeta[k] - &z[i]) * &(q3.clone() * &zeta[k] + &z[i]);
    }
    Ok(acc)
}

/// Factor at `zeta_j = -q^{-3} z_i`.
pub fn factor_g19<F: Field>(i: usize, j: usize, zeta: &[F], z: &[F], q: &F) -> Result<F> {
    let n = sizes(zeta, z)?;
    check_index(i, n)?;
    check_index(j, n)?;
    let (q2, q3) = (q.square(), q.pow(3));
    let mut acc = -q.powi(-(n as i64) - 1)? * &(q3.clone() + &F::one()) * &z[i];
    for k in (0..n).filter(|&k| k != i) {
        acc =
            acc * &(z[i].clone() - &(q2.clone() * &z[k])) * &(z[i].clone() + &(q3.clone() * &z[k]));
    }
    for k in (0..n).filter(|&k| k != j) {
        acc = acc * &(zeta[k].clone() - &z[i]) * &(q.clone() * &zeta[k] + &z[i]);
    }
    Ok(acc)
}

fn x1<F: Field>(ratio: &F, q: &F) -> F {
    (ratio.clone() * &q.square() - &F::one()) * &(ratio.clone() * &q.pow(3) + &F::one())
}

/// `z_j^2 x1(zeta / z_j)`.
fn x1_cleared<F: Field>(zeta: &F, zj: &F, q: &F) -> F {
    (q.square() * zeta - zj) * &(q.pow(3) * zeta + zj)
}

/// Weights of the frozen first row and last column once `zeta_1 = z_N`
/// (the given `zeta_1` is ignored): `prod_{i<N} x1(zeta_1/z_i)` times
/// `prod_{i>1} x1(zeta_i/z_N)`. The cleared form multiplies each `x1` by the
/// square of its column rapidity.
pub fn frozen_line_factor<F: Field>(
    zeta: &[F],
    z: &[F],
    q: &F,
    normalization: Normalization,
) -> Result<F> {
    let n = sizes(zeta, z)?;
    if n < 2 {
        return Err(Error::Domain("frozen lines need N >= 2".into()));
    }
    let zn = &z[n - 1];
    let mut acc = F::one();
    for zi in &z[..n - 1] {
        acc = acc
            * &match normalization {
                Normalization::Raw => x1(&zn.div(zi)?, q),
                Normalization::Cleared => x1_cleared(zn, zi, q),
            };
    }
    for zeta_i in &zeta[1..] {
        acc = acc
            * &match normalization {
                Normalization::Raw => x1(&zeta_i.div(zn)?, q),
                Normalization::Cleared => x1_cleared(zeta_i, zn, q),
            };
    }
    Ok(acc)
}

/// `q^3 != -1`, otherwise the two node families coincide.
fn require_generic<F: Field>(q: &F) -> Result<()> {
    if (q.pow(3) + &F::one()).is_zero() {
        return Err(Error::Unsupported(
            "at q^3 = -1 the recurrence nodes collide; use the determinant route".into(),
        ));
    }
    Ok(())
}

/// Value at `x` of the polynomial of degree `< nodes.len()` through the
/// given points.
pub fn lagrange_eval<F: Field>(nodes: &[F], values: &[F], x: &F) -> Result<F> {
    let mut acc = F::zero();
    for (a, (na, va)) in nodes.iter().zip(values).enumerate() {
        let mut term = va.clone();
        for (b, nb) in nodes.iter().enumerate() {
            if a == b {
                continue;
            }
            let gap = na.clone() - nb;
            if gap.is_zero() {
                return Err(Error::NodeCollision(format!("node {na} repeated")));
            }
            term = term * &(x.clone() - nb) * &gap.inv()?;
        }
        acc = acc + &term;
    }
    Ok(acc)
}

/// The `2N` nodes in `zeta_N` and the value there given the sub-lattice
/// values `sub[k] = Z_{N-1}[zeta_N, z_k]`.
pub fn interpolation_data<F: Field>(
    zeta: &[F],
    z: &[F],
    q: &F,
    sub: &[F],
) -> Result<(Vec<F>, Vec<F>)> {
    let n = sizes(zeta, z)?;
    let shift = -q.powi(-3)?;
    let (mut nodes, mut values) = (Vec::with_capacity(2 * n), Vec::with_capacity(2 * n));
    for k in 0..n {
        let at = z[k].clone();
        values.push(factor_f19(k, n - 1, &with(zeta, n - 1, at.clone()), z, q)? * &sub[k]);
        nodes.push(at);
        let at = shift.clone() * &z[k];
        values.push(factor_g19(k, n - 1, &with(zeta, n - 1, at.clone()), z, q)? * &sub[k]);
        nodes.push(at);
    }
    Ok((nodes, values))
}

/// One reconstruction step: `Z_N` at `(zeta, z)` from the evaluator of
/// `Z_{N-1}`.
pub fn lagrange_extend<F: Field>(
    prev: &dyn PartitionEvaluator<F>,
    zeta: &[F],
    z: &[F],
    q: &F,
) -> Result<F> {
    let n = sizes(zeta, z)?;
    if n == 0 {
        return Ok(F::one());
    }
    require_generic(q)?;
    let head = &zeta[..n - 1];
    let sub: Vec<F> = (0..n)
        .map(|k| prev.eval(head, &without(z, k)))
        .collect::<Result<_>>()?;
    let (nodes, values) = interpolation_data(zeta, z, q, &sub)?;
    lagrange_eval(&nodes, &values, &zeta[n - 1])
}

/// `Z_N` from `Z_0 = 1` by repeated reconstruction. Sub-lattice values only
/// depend on which column rapidities remain, so they are cached per subset.
pub fn zn_via_recurrence<F: Field>(zeta: &[F], z: &[F], q: &F) -> Result<F> {
    let n = sizes(zeta, z)?;
    if n > 20 {
        return Err(Error::Capacity(format!(
            "recurrence limited to N <= 20, got {n}"
        )));
    }
    require_generic(q)?;
    let mut memo: HashMap<u32, F> = HashMap::new();
    subset_value(zeta, z, q, (1u32 << n) - 1, &mut memo)
}

fn subset_value<F: Field>(
    zeta: &[F],
    z: &[F],
    q: &F,
    mask: u32,
    memo: &mut HashMap<u32, F>,
) -> Result<F> {
    if mask == 0 {
        return Ok(F::one());
    }
    if let Some(v) = memo.get(&mask) {
        return Ok(v.clone());
    }
    let cols: Vec<usize> = (0..z.len()).filter(|&c| mask & (1 << c) != 0).collect();
    let m = cols.len();
    let zs: Vec<F> = cols.iter().map(|&c| z[c].clone()).collect();
    let mut sub = Vec::with_capacity(m);
    for &c in &cols {
        sub.push(subset_value(zeta, z, q, mask & !(1 << c), memo)?);
    }
    let (nodes, values) = interpolation_data(&zeta[..m], &zs, q, &sub)?;
    let v = lagrange_eval(&nodes, &values, &zeta[m - 1])?;
    memo.insert(mask, v.clone());
    Ok(v)
}

/// The closed two-term sum form of the reconstruction, transcribed
/// factor by factor.
pub fn zn_two_term_sum<F: Field>(zeta: &[F], z: &[F], q: &F) -> Result<F> {
    let n = sizes(zeta, z)?;
    if n == 0 {
        return Ok(F::one());
    }
    let (q2, q3) = (q.square(), q.pow(3));
    let q3inv = q.powi(-3)?;
    let x = &zeta[n - 1];
    let head = &zeta[..n - 1];
    let mut total = F::zero();
    for k in 0..n {
        let mut term = zn_two_term_sum(head, &without(z, k), q)?;
        for i in (0..n).filter(|&i| i != k) {
            let gap = z[k].clone() - &z[i];
            if gap.is_zero() {
                return Err(Error::NodeCollision(format!("z_{k} = z_{i}")));
            }
            term = term
                * &(x.clone() - &z[i])
                * &(x.clone() + &(q3inv.clone() * &z[i]))
                * &gap.inv()?;
        }
        let mut first = q3.clone() * x + &z[k];
        for i in (0..n).filter(|&i| i != k) {
            first = first * &(q2.clone() * &z[k] - &z[i]);
        }
        for zi in head {
            first = first * &(q2.clone() * zi - &z[k]) * &(z[k].clone() + &(q3.clone() * zi));
        }
        let mut second = q.pow(2 * n as u32 - 1) * &(x.clone() - &z[k]);
        for i in (0..n).filter(|&i| i != k) {
            second = second * &(z[k].clone() - &(q2.clone() * &z[i]));
        }
        for zi in head {
            second = second * &(zi.clone() - &z[k]) * &(z[k].clone() + &(q.clone() * zi));
        }
        total = total + &(term * &(first + &second));
    }
    Ok(q3.pow(n as u32 - 1) * &total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recurrence::{LagrangeExtension, Unit};
    use crate::scalar::{Cyclo12, Rational, Ring};

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn point(n: usize) -> (Vec<Rational>, Vec<Rational>, Rational) {
        let zeta = [r(2, 3), r(-7, 5), r(11, 4), r(3, 13), r(-5, 9)];
        let z = [r(5, 7), r(9, 2), r(-4, 11), r(13, 6), r(1, 8)];
        (zeta[..n].to_vec(), z[..n].to_vec(), r(3, 2))
    }

    #[test]
    fn single_site_factors() {
        let (zeta, z, q) = point(1);
        let f = factor_f19(0, 0, &zeta, &z, &q).unwrap();
        assert_eq!(f, (q.pow(3) + &Rational::one()) * &z[0]);
        let cyc = [Cyclo12::from_ints([2, 1, 0, 0])];
        assert!(factor_f19(0, 0, &cyc, &cyc, &Cyclo12::q())
            .unwrap()
            .is_zero());
    }

    #[test]
    fn base_case_is_one() {
        assert_eq!(
            zn_via_recurrence::<Rational>(&[], &[], &r(3, 2)).unwrap(),
            Rational::one()
        );
    }

    #[test]
    fn nodes_are_reproduced() {
        let (zeta, z, q) = point(3);
        let shift = -q.powi(-3).unwrap();
        for k in 0..3 {
            let sub = zn_via_recurrence(&zeta[..2], &without(&z, k), &q).unwrap();
            let at = with(&zeta, 2, z[k].clone());
            assert_eq!(
                zn_via_recurrence(&at, &z, &q).unwrap(),
                factor_f19(k, 2, &at, &z, &q).unwrap() * &sub
            );
            let at = with(&zeta, 2, shift.clone() * &z[k]);
            assert_eq!(
                zn_via_recurrence(&at, &z, &q).unwrap(),
                factor_g19(k, 2, &at, &z, &q).unwrap() * &sub
            );
        }
    }

    #[test]
    fn degree_in_last_rapidity() {
        // the 2N-th finite difference of a degree 2N-1 polynomial is zero
        let (zeta, z, q) = point(2);
        let mut vals: Vec<Rational> = (0..5)
            .map(|t| {
                let at = with(&zeta, 1, r(t, 1) + &r(1, 7));
                zn_via_recurrence(&at, &z, &q).unwrap()
            })
            .collect();
        for _ in 0..4 {
            vals = vals.windows(2).map(|w| w[1].clone() - &w[0]).collect();
        }
        assert!(vals[0].is_zero());
    }

    #[test]
    fn two_term_sum_matches_interpolation() {
        for n in 1..=4 {
            let (zeta, z, q) = point(n);
            assert_eq!(
                zn_two_term_sum(&zeta, &z, &q).unwrap(),
                zn_via_recurrence(&zeta, &z, &q).unwrap(),
                "N = {n}"
            );
        }
    }

    #[test]
    fn evaluator_chain_matches_memoized() {
        let (zeta, z, q) = point(3);
        let mut ev: Box<dyn PartitionEvaluator<Rational>> = Box::new(Unit);
        for _ in 0..3 {
            ev = Box::new(LagrangeExtension::new(ev, q.clone()));
        }
        assert_eq!(
            ev.eval(&zeta, &z).unwrap(),
            zn_via_recurrence(&zeta, &z, &q).unwrap()
        );
    }

    #[test]
    fn refuses_cubic_root_of_unity() {
        let v = [Cyclo12::from_ints([2, 1, 0, 0])];
        assert!(matches!(
            zn_via_recurrence(&v, &v, &Cyclo12::q()),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn colliding_nodes_are_reported() {
        let (zeta, _, q) = point(2);
        let z = [r(5, 7), r(5, 7)];
        assert!(matches!(
            zn_via_recurrence(&zeta, &z, &q),
            Err(Error::NodeCollision(_))
        ));
    }

    #[test]
    fn frozen_factor_forms() {
        let (zeta, z, q) = point(3);
        let raw = frozen_line_factor(&zeta, &z, &q, Normalization::Raw).unwrap();
        let cleared = frozen_line_factor(&zeta, &z, &q, Normalization::Cleared).unwrap();
        let powers = z[0].square() * &z[1].square() * &z[2].pow(4);
        assert_eq!(cleared, raw * &powers);
        // F_{N,1} over the cleared frozen product is (q^3 + 1) z_N
        let at = with(&zeta, 0, z[2].clone());
        let f = factor_f19(2, 0, &at, &z, &q).unwrap();
        assert_eq!(f, cleared * &(q.pow(3) + &Rational::one()) * &z[2]);
    }
}
