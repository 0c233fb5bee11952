//! Six-vertex recurrence factors and the Izergin determinant.
//!
//! All functions take the rapidities `zeta`, `z` themselves; the six-vertex
//! weights only involve their squares.

use super::check_index;
use crate::error::{Error, Result};
use crate::scalar::matrix::{det_gauss, Matrix};
use crate::scalar::Field;

fn check_sizes<F>(zeta: &[F], z: &[F]) -> Result<usize> {
    if zeta.len() != z.len() {
        return Err(Error::Domain(format!(
            "{} row and {} column rapidities",
            zeta.len(),
            z.len()
        )));
    }
    Ok(zeta.len())
}

/// Factor at `zeta_j = z_i`.
pub fn factor_f6v<F: Field>(i: usize, j: usize, zeta: &[F], z: &[F], q: &F) -> Result<F> {
    let n = check_sizes(zeta, z)?;
    check_index(i, n)?;
    check_index(j, n)?;
    let q2 = q.square();
    let zi2 = z[i].square();
    let mut acc = F::one();
    for k in (0..n).filter(|&k| k != i) {
        acc = acc * &(q2.clone() * &zi2 - &z[k].square());
    }
    for k in (0..n).filter(|&k| k != j) {
        acc = acc * &(q2.clone() * &zeta[k].square() - &zi2);
    }
    Ok(acc)
}

/// Factor at `zeta_j = z_i / q`.
pub fn factor_g6v<F: Field>(i: usize, j: usize, zeta: &[F], z: &[F], q: &F) -> Result<F> {
    let n = check_sizes(zeta, z)?;
    check_index(i, n)?;
    check_index(j, n)?;
    let q2 = q.square();
    let zi2 = z[i].square();
    let mut acc = F::one();
    for k in (0..n).filter(|&k| k != i) {
        acc = acc * &(zi2.clone() - &(q2.clone() * &z[k].square()));
    }
    for k in (0..n).filter(|&k| k != j) {
        acc = acc * &(zeta[k].square() - &zi2);
    }
    Ok(acc)
}

/// Prefactor times `det 1/((zeta_i^2 - z_j^2)(q^2 zeta_i^2 - z_j^2))`, equal to
/// the state sum with the raw weights.
pub fn izergin_determinant<F: Field>(zeta: &[F], z: &[F], q: &F) -> Result<F> {
    let n = check_sizes(zeta, z)?;
    let q2 = q.square();
    let q2m1 = q2.clone() - F::one();
    let coincident =
        || Error::Coincident("singular Cauchy-type entry; use the recurrence route instead".into());
    let mut entries = Vec::with_capacity(n);
    let mut numer = F::one();
    for a in zeta {
        let mut row = Vec::with_capacity(n);
        for b in z {
            let e = (a.square() - &b.square()) * &(q2.clone() * &a.square() - &b.square());
            if e.is_zero() {
                return Err(coincident());
            }
            numer = numer * &e;
            row.push(e.inv()?);
        }
        entries.push(row);
    }
    let mut denom = F::one();
    for i in 0..n {
        for j in i + 1..n {
            denom =
                denom * &(zeta[i].square() - &zeta[j].square()) * &(z[j].square() - &z[i].square());
        }
    }
    let e = (n as u32).saturating_sub(1);
    for i in 0..n {
        denom = denom * &q2m1.pow(e) * &zeta[i].pow(e) * &z[i].pow(e);
    }
    if denom.is_zero() {
        return Err(coincident());
    }
    let det = det_gauss(&Matrix::from_rows(entries)?)?;
    Ok(numer * &denom.inv()? * &det)
}

/// `(q^2 - 1)^{N(N-1)} prod_i (zeta_i z_i)^{N-1}`: turns the raw partition
/// function into the polynomial on which the recurrences hold as written.
pub fn polynomial_factor<F: Field>(zeta: &[F], z: &[F], q: &F) -> F {
    let n = zeta.len() as u32;
    let e = n.saturating_sub(1);
    let mut acc = (q.square() - F::one()).pow(n * e);
    for (a, b) in zeta.iter().zip(z) {
        acc = acc * &(a.clone() * b).pow(e);
    }
    acc
}

/// Izergin's value in the polynomial normalization.
pub fn izergin_polynomial<F: Field>(zeta: &[F], z: &[F], q: &F) -> Result<F> {
    Ok(izergin_determinant(zeta, z, q)? * &polynomial_factor(zeta, z, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Rational, Ring};

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn single_site() {
        let (zeta, z, q) = ([r(2, 3)], [r(5, 7)], r(3, 2));
        assert_eq!(factor_f6v(0, 0, &zeta, &z, &q).unwrap(), Rational::one());
        assert_eq!(factor_g6v(0, 0, &zeta, &z, &q).unwrap(), Rational::one());
        assert_eq!(izergin_determinant(&zeta, &z, &q).unwrap(), Rational::one());
    }

    #[test]
    fn f_term_by_term() {
        let zeta = [r(2, 3), r(7, 4)];
        let z = [r(5, 7), r(-3, 5)];
        let q = r(3, 2);
        let q2 = q.square();
        // i = 1, j = 0: (q^2 z_1^2 - z_0^2)(q^2 zeta_1^2 - z_1^2)
        let expected = (q2.clone() * &z[1].square() - &z[0].square())
            * &(q2 * &zeta[1].square() - &z[1].square());
        assert_eq!(factor_f6v(1, 0, &zeta, &z, &q).unwrap(), expected);
    }

    #[test]
    fn index_errors() {
        let v = [r(1, 2)];
        assert_eq!(
            factor_f6v(1, 0, &v, &v, &r(2, 1)),
            Err(Error::IndexOutOfRange { index: 1, n: 1 })
        );
    }

    #[test]
    fn coincident_rapidities_are_reported() {
        let zeta = [r(2, 3), r(2, 3)];
        let z = [r(5, 7), r(1, 5)];
        assert!(matches!(
            izergin_determinant(&zeta, &z, &r(3, 2)),
            Err(Error::Coincident(_))
        ));
        let zeta = [r(5, 7), r(2, 3)];
        assert!(matches!(
            izergin_determinant(&zeta, &z, &r(3, 2)),
            Err(Error::Coincident(_))
        ));
    }
}
