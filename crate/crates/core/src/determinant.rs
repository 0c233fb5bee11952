//! The nineteen-vertex partition function at `q^3 = -1` as a determinant of
//! the `Delta` family:
//!
//! ```text
//! Z^cleared_N = mu_N * prod_k zeta_k * prod_{i,j} (z_i - zeta_j) * det_{1<=i,j<=N-1} Delta_{3j-i,N}
//! ```
//!
//! `mu_N` is a number in `Cyclo12`; it is measured against the enumerator,
//! never assumed.

use crate::error::{Error, Result};
use crate::lattice::{self, EnumOptions};
use crate::recurrence::{with, without};
use crate::report::{Mode, VerificationReport, Witness};
use crate::sample::{RootPoint, Sampler};
use crate::scalar::matrix::{det_bareiss, det_cofactor, Matrix};
use crate::scalar::{product, Cyclo12, ExactDiv, Field, MPoly, Rational, Ring, Var};
use crate::symmetric::{delta_values, p_generating};
use crate::vertex::Model;

/// Above this size the determinant goes through fraction-free elimination.
/// Polynomial division makes elimination far slower than expansion on the
/// sizes reached here.
const COFACTOR_MAX: usize = 4;

#[derive(Debug, Clone, PartialEq)]
pub struct DeterminantResult<R: Ring> {
    pub n: usize,
    pub mode: Mode,
    pub matrix: Matrix<R>,
    pub value: R,
}

fn at<R: Ring>(d: &[R], k: i64) -> R {
    if k < 0 || k as usize >= d.len() {
        R::zero()
    } else {
        d[k as usize].clone()
    }
}

/// `(N-1) x (N-1)` matrix with entry `(i, j)` (1-based) equal to `Delta_{3j-i,N}`.
pub fn delta_matrix<R: Ring>(zeta: &[R], z: &[R]) -> Matrix<R> {
    let d = delta_values(zeta, z);
    let m = zeta.len().saturating_sub(1);
    Matrix::from_fn(m, m, |i, j| at(&d, 3 * (j as i64 + 1) - (i as i64 + 1)))
}

pub fn determinant<R: ExactDiv>(m: &Matrix<R>) -> Result<R> {
    if m.rows() <= COFACTOR_MAX {
        det_cofactor(m)
    } else {
        det_bareiss(m)
    }
}

pub fn cubic_determinant<R: ExactDiv>(zeta: &[R], z: &[R]) -> Result<R> {
    check_sizes(zeta, z)?;
    determinant(&delta_matrix(zeta, z))
}

fn check_sizes<R>(zeta: &[R], z: &[R]) -> Result<usize> {
    if zeta.len() != z.len() || zeta.is_empty() {
        return Err(Error::Domain(format!(
            "need N >= 1 row and column rapidities, got {} and {}",
            zeta.len(),
            z.len()
        )));
    }
    Ok(zeta.len())
}

/// The determinant as a polynomial in `zeta_1..zeta_N, z_1..z_N`.
pub fn z_cubic_root_symbolic(n: usize) -> Result<DeterminantResult<MPoly<Rational>>> {
    let zeta: Vec<_> = Var::zetas(n).into_iter().map(MPoly::var).collect();
    let z: Vec<_> = Var::zs(n).into_iter().map(MPoly::var).collect();
    check_sizes(&zeta, &z)?;
    let matrix = delta_matrix(&zeta, &z);
    let value = determinant(&matrix)?;
    Ok(DeterminantResult {
        n,
        mode: Mode::Symbolic,
        matrix,
        value,
    })
}

pub fn z_cubic_root_point<F: Field>(zeta: &[F], z: &[F]) -> Result<DeterminantResult<F>> {
    let n = check_sizes(zeta, z)?;
    let matrix = delta_matrix(zeta, z);
    let value = determinant(&matrix)?;
    Ok(DeterminantResult {
        n,
        mode: Mode::Point,
        matrix,
        value,
    })
}

/// `prod_{i,j} (z_i - zeta_j)`.
pub fn common_factor<R: Ring>(zeta: &[R], z: &[R]) -> R {
    let mut acc = R::one();
    for b in z {
        for a in zeta {
            acc = acc * &(b.clone() - a);
        }
    }
    acc
}

/// Everything on the right-hand side except `mu_N`.
pub fn determinant_shape<R: ExactDiv>(zeta: &[R], z: &[R]) -> Result<R> {
    Ok(product(zeta) * &common_factor(zeta, z) * &cubic_determinant(zeta, z)?)
}

/// `mu_N * shape`, the determinant route to the cleared partition function.
pub fn determinant_route<F: Field>(zeta: &[F], z: &[F], mu: &F) -> Result<F> {
    Ok(mu.clone() * &determinant_shape(zeta, z)?)
}

#[derive(serde::Deserialize)]
struct Constants {
    mu: std::collections::BTreeMap<usize, String>,
}

const CONSTANTS: &str = include_str!("../golden/constants.json");

/// Archived `mu_N` (in `Cyclo12` with `p` the standard generator), if any.
pub fn archived_mu(n: usize) -> Result<Option<Cyclo12>> {
    let c: Constants =
        serde_json::from_str(CONSTANTS).map_err(|e| Error::Parse(format!("constants: {e}")))?;
    c.mu.get(&n).map(|s| s.parse()).transpose()
}

/// Archived `mu_N`, or a fresh measurement at a seeded point.
pub fn mu_constant(n: usize, opts: &EnumOptions) -> Result<Cyclo12> {
    if let Some(mu) = archived_mu(n)? {
        return Ok(mu);
    }
    let mut sampler = Sampler::new(n as u64);
    loop {
        if let Some(mu) = measure_mu(&rational_point(&mut sampler, n), opts)? {
            return Ok(mu);
        }
    }
}

fn embed(xs: &[Rational]) -> Vec<Cyclo12> {
    xs.iter().map(Cyclo12::from_rational).collect()
}

fn cleared_enumeration(point: &RootPoint<Rational>, opts: &EnumOptions) -> Result<Cyclo12> {
    lattice::enumerate_cleared(
        Model::NineteenVertex,
        &embed(&point.u),
        &embed(&point.v),
        &Cyclo12::p(),
        opts,
    )
}

/// `enumerator / shape` at one point, `None` when the shape vanishes there.
pub fn measure_mu(point: &RootPoint<Rational>, opts: &EnumOptions) -> Result<Option<Cyclo12>> {
    let shape = determinant_shape(&point.zeta(), &point.z())?;
    if shape.is_zero() {
        return Ok(None);
    }
    let z = cleared_enumeration(point, opts)?;
    Ok(Some(z * &Cyclo12::from_rational(&shape.inv()?)))
}

fn rational_point(sampler: &mut Sampler, n: usize) -> RootPoint<Rational> {
    // q is not rational, so the sampler's ratio test only excludes +-1 here
    sampler.roots::<Rational>(n, &Rational::from(2))
}

/// The determinant at `zeta_j := z_i` against `q^{2(N-1)} P(z_i | rest) det_{N-1}(rest)`,
/// where `rest` drops `zeta_j` and `z_i`.
pub fn determinant_recurrence_holds(
    zeta: &[Rational],
    z: &[Rational],
    i: usize,
    j: usize,
) -> Result<bool> {
    let n = check_sizes(zeta, z)?;
    if n < 2 {
        return Err(Error::Domain(
            "the determinant recurrence needs N >= 2".into(),
        ));
    }
    let q = Cyclo12::q();
    let lhs = cubic_determinant(&with(zeta, j, z[i].clone()), z)?;
    let (rest_zeta, rest_z) = (without(zeta, j), without(z, i));
    let pivot = Cyclo12::from_rational(&z[i]);
    let p = p_generating(&embed(&rest_zeta), &embed(&rest_z), &pivot, &q)?;
    let rhs = q.pow(2 * (n as u32 - 1))
        * &p
        * &Cyclo12::from_rational(&cubic_determinant(&rest_zeta, &rest_z)?);
    Ok(Cyclo12::from_rational(&lhs) == rhs)
}

/// mu_N constancy across `trials` seeded draws, then the determinant
/// recurrence at every `(i, j)` on a further draw.
pub fn reconcile_with_enumeration(
    n: usize,
    trials: usize,
    seed: u64,
    opts: &EnumOptions,
) -> Result<VerificationReport> {
    opts.capacity.check(Model::NineteenVertex, n)?;
    let mut sampler = Sampler::new(seed);
    let mut report = VerificationReport::new("determinant-reconciliation", n, Mode::Point);
    let mut first: Option<Cyclo12> = None;
    let mut done = 0;
    while done < trials {
        let point = rational_point(&mut sampler, n);
        let Some(mu) = measure_mu(&point, opts)? else {
            continue;
        };
        done += 1;
        match &first {
            None => {
                report.record(true, || unreachable!());
                first = Some(mu);
            }
            Some(mu0) => report.record(&mu == mu0, || {
                Witness::new(
                    &point.zeta(),
                    &point.z(),
                    format!("mu {mu} differs from {mu0}"),
                )
            }),
        }
    }
    report.constants.mu = first.map(|mu| mu.to_string());
    if n >= 2 {
        let point = rational_point(&mut sampler, n);
        let (zeta, z) = (point.zeta(), point.z());
        for i in 0..n {
            for j in 0..n {
                let ok = determinant_recurrence_holds(&zeta, &z, i, j)?;
                report.record(ok, || {
                    Witness::new(
                        &zeta,
                        &z,
                        format!("determinant recurrence at zeta_{} = z_{}", j + 1, i + 1),
                    )
                });
            }
        }
        report.note(format!(
            "{trials} draws for mu, {} (i, j) pairs for the recurrence",
            n * n
        ));
    }
    Ok(report)
}

/// Fully symbolic reconciliation: the enumerated polynomial divides exactly
/// by `prod zeta * prod (z_i - zeta_j)` and the quotient is a constant
/// multiple of the determinant.
pub fn symbolic_reconcile(n: usize, opts: &EnumOptions) -> Result<VerificationReport> {
    opts.capacity.check(Model::NineteenVertex, n)?;
    let u: Vec<MPoly<Cyclo12>> = Var::us(n).into_iter().map(MPoly::var).collect();
    let v: Vec<MPoly<Cyclo12>> = Var::vs(n).into_iter().map(MPoly::var).collect();
    let mut z_poly = lattice::enumerate_cleared(
        Model::NineteenVertex,
        &u,
        &v,
        &MPoly::constant(Cyclo12::p()),
        opts,
    )?;
    for k in 1..=n as u16 {
        z_poly = z_poly
            .halve_exponents(Var::U(k), Var::Zeta(k))?
            .halve_exponents(Var::V(k), Var::Z(k))?;
    }
    let zeta: Vec<_> = Var::zetas(n).into_iter().map(MPoly::var).collect();
    let z: Vec<_> = Var::zs(n).into_iter().map(MPoly::var).collect();
    let prefactor: MPoly<Cyclo12> = product(&zeta) * &common_factor(&zeta, &z);
    let det = z_cubic_root_symbolic(n)?
        .value
        .map_coeffs(Cyclo12::from_rational);

    let mut report = VerificationReport::new("determinant-reconciliation", n, Mode::Symbolic);
    let (quotient, rem) = z_poly.div_rem(&prefactor)?;
    report.record(rem.is_zero(), || {
        Witness::new::<String>(
            &[],
            &[],
            format!("remainder modulo the common factor: {rem}"),
        )
    });
    let (mu, rem) = quotient.div_rem(&det)?;
    report.record(rem.is_zero(), || {
        Witness::new::<String>(&[], &[], format!("remainder modulo the determinant: {rem}"))
    });
    let constant = mu.as_constant();
    report.record(constant.is_some(), || {
        Witness::new::<String>(&[], &[], format!("quotient is not constant: {mu}"))
    });
    report.constants.mu = constant.map(|c| c.to_string());
    Ok(report)
}

/// The elimination step behind the determinant recurrence, checked exactly.
///
/// With `zeta_N = z_N`, `A` unit upper bidiagonal with superdiagonal `-z_N`
/// and `B_{k,l} = z_N^{3(l-k)}` for `l >= k`, the product `A Delta B` of the
/// specialized `(N-1) x (N-1)` matrix has a last column that vanishes above
/// its corner, the corner is `q^{2(N-1)} P(z_N | rest)`, and the leading
/// block is the size `N-1` matrix of the remaining variables.
///
/// `rest` fixes `zeta_1..zeta_{N-1}, z_1..z_{N-1}` to numbers, leaving only
/// `z_N` symbolic; `None` keeps every variable symbolic.
pub fn proof_transform_check(
    n: usize,
    rest: Option<(&[Rational], &[Rational])>,
) -> Result<VerificationReport> {
    if n < 2 {
        return Err(Error::Domain("the elimination step needs N >= 2".into()));
    }
    let m = n - 1;
    type P = MPoly<Rational>;
    let (zeta_rest, z_rest): (Vec<P>, Vec<P>) = match rest {
        None => (
            Var::zetas(m).into_iter().map(P::var).collect(),
            Var::zs(m).into_iter().map(P::var).collect(),
        ),
        Some((a, b)) => {
            if a.len() != m || b.len() != m {
                return Err(Error::Domain(format!(
                    "need {m} fixed rapidities of each kind"
                )));
            }
            (
                a.iter().cloned().map(P::constant).collect(),
                b.iter().cloned().map(P::constant).collect(),
            )
        }
    };
    let zn = P::var(Var::Z(n as u16));
    let mode = if rest.is_none() {
        Mode::Symbolic
    } else {
        Mode::Point
    };
    let mut report = VerificationReport::new("proof-transform", n, mode);
    let fail = |what: &str| {
        let what = what.to_string();
        move || Witness::new::<String>(&[], &[], what)
    };

    // the specialized matrix two ways: directly, and through the
    // three-term rule applied to the smaller table
    let small = delta_values(&zeta_rest, &z_rest);
    let mut zeta_full = zeta_rest.clone();
    zeta_full.push(zn.clone());
    let mut z_full = z_rest.clone();
    z_full.push(zn.clone());
    let direct = delta_matrix(&zeta_full, &z_full);
    let zn2 = zn.square();
    let spec = Matrix::from_fn(m, m, |i, j| {
        let k = 3 * (j as i64 + 1) - (i as i64 + 1);
        at(&small, k) + &(zn.clone() * &at(&small, k - 1)) + &(zn2.clone() * &at(&small, k - 2))
    });
    report.record(
        direct == spec,
        fail("three-term rule disagrees with direct specialization"),
    );

    let a = Matrix::from_fn(m, m, |i, j| {
        if i == j {
            P::one()
        } else if j == i + 1 {
            -zn.clone()
        } else {
            P::zero()
        }
    });
    let b = Matrix::from_fn(m, m, |i, j| {
        if j >= i {
            zn.pow(3 * (j - i) as u32)
        } else {
            P::zero()
        }
    });
    report.record(det_cofactor(&a)?.is_one(), fail("det A != 1"));
    report.record(det_cofactor(&b)?.is_one(), fail("det B != 1"));

    let t = a.mul(&spec)?.mul(&b)?;
    let last = m - 1;
    let column_clear = (0..last).all(|i| t.get(i, last).is_zero());
    report.record(
        column_clear,
        fail("eliminated column does not vanish above the corner"),
    );

    // q^{2(N-1)} P with N-1 variables of each kind is the bracket itself,
    // whose x-coefficients are the smaller Delta table
    let corner_expected = (0..=2 * m).fold(P::zero(), |acc, k| {
        acc + &(zn.pow(k as u32) * &small[2 * m - k])
    });
    report.record(
        t.get(last, last) == &corner_expected,
        fail("corner is not q^{2(N-1)} P(z_N | rest)"),
    );
    if rest.is_some() {
        // cross-check the corner against the generating polynomial itself
        let q = Cyclo12::q();
        let zeta_c: Vec<Cyclo12> = zeta_rest
            .iter()
            .map(|p| p.as_constant().expect("fixed").into())
            .collect();
        let z_c: Vec<Cyclo12> = z_rest
            .iter()
            .map(|p| p.as_constant().expect("fixed").into())
            .collect();
        let pivot = Cyclo12::from_i64(7);
        let p = p_generating(&zeta_c, &z_c, &pivot, &q)? * &q.pow(2 * m as u32);
        let mut b = crate::scalar::Bindings::new();
        b.insert(Var::Z(n as u16), Rational::from(7));
        let corner_at = Cyclo12::from_rational(&t.get(last, last).eval(&b)?);
        report.record(corner_at == p, fail("corner disagrees with P at z_N = 7"));
    }

    let lead: Vec<usize> = (0..last).collect();
    let block = t.select(&lead, &lead);
    report.record(
        block == delta_matrix(&zeta_rest, &z_rest),
        fail("leading block is not the smaller matrix"),
    );

    let det_spec = determinant(&spec)?;
    if m <= 3 || rest.is_some() {
        // implied by det A = det B = 1; only spelled out where it is cheap
        let det_t = determinant(&t)?;
        report.record(det_spec == det_t, fail("det(A Delta B) != det Delta"));
    }
    let det_small = determinant(&block)?;
    report.record(
        det_spec == corner_expected * &det_small,
        fail("factorization identity"),
    );

    let first_column_clear = (0..last).all(|i| t.get(i, 0).is_zero());
    report.note(format!(
        "the column cleared by A and B is the last one; the first column {} above its bottom entry",
        if first_column_clear {
            "also vanishes"
        } else {
            "does not vanish"
        }
    ));
    Ok(report)
}

/// Adjacent transpositions of `zeta` and of `z` leave the determinant fixed:
/// symbolically for `N <= 3`, otherwise at a seeded point.
pub fn symmetry_check(n: usize, seed: u64) -> Result<VerificationReport> {
    if n <= 3 {
        let value = z_cubic_root_symbolic(n)?.value;
        let mut report = VerificationReport::new("determinant-symmetry", n, Mode::Symbolic);
        for group in [Var::zetas(n), Var::zs(n)] {
            report.record(value.is_symmetric(&group), || {
                Witness::new::<String>(&[], &[], format!("not symmetric in {group:?}"))
            });
        }
        return Ok(report);
    }
    let mut sampler = Sampler::new(seed);
    let point = rational_point(&mut sampler, n);
    let (zeta, z) = (point.zeta(), point.z());
    let base = cubic_determinant(&zeta, &z)?;
    let mut report = VerificationReport::new("determinant-symmetry", n, Mode::Point);
    for k in 0..n - 1 {
        let mut zs = zeta.clone();
        zs.swap(k, k + 1);
        report.record(cubic_determinant(&zs, &z)? == base, || {
            Witness::new(&zs, &z, format!("swap zeta_{} zeta_{}", k + 1, k + 2))
        });
        let mut zz = z.clone();
        zz.swap(k, k + 1);
        report.record(cubic_determinant(&zeta, &zz)? == base, || {
            Witness::new(&zeta, &zz, format!("swap z_{} z_{}", k + 1, k + 2))
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetric::delta_from_generating;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn small_sizes() {
        assert!(z_cubic_root_symbolic(1).unwrap().value.is_one());
        let two = z_cubic_root_symbolic(2).unwrap();
        assert_eq!(two.value, delta_from_generating(2).unwrap().get(2));
        let three = z_cubic_root_symbolic(3).unwrap();
        let t = delta_from_generating(3).unwrap();
        assert_eq!(three.matrix.get(0, 0), &t.get(2));
        assert_eq!(three.matrix.get(0, 1), &t.get(5));
        assert_eq!(three.matrix.get(1, 0), &t.get(1));
        assert_eq!(three.matrix.get(1, 1), &t.get(4));
    }

    #[test]
    fn point_matches_symbolic() {
        let zeta = [r(2, 3), r(-5, 7), r(4, 1)];
        let z = [r(1, 2), r(9, 5), r(-3, 4)];
        let sym = z_cubic_root_symbolic(3).unwrap().value;
        let mut b = crate::scalar::Bindings::new();
        for k in 0..3 {
            b.insert(Var::Zeta(k as u16 + 1), zeta[k].clone());
            b.insert(Var::Z(k as u16 + 1), z[k].clone());
        }
        assert_eq!(
            sym.eval(&b).unwrap(),
            z_cubic_root_point(&zeta, &z).unwrap().value
        );
    }

    #[test]
    fn common_factor_basics() {
        assert_eq!(common_factor(&[r(2, 1)], &[r(5, 1)]), r(3, 1));
        assert!(common_factor(&[r(2, 1), r(3, 1)], &[r(7, 1), r(2, 1)]).is_zero());
    }

    #[test]
    fn mu_is_constant_small() {
        let opts = EnumOptions::default();
        for n in 1..=3 {
            let rep = reconcile_with_enumeration(n, 3, 11, &opts).unwrap();
            assert!(rep.passed(), "{rep:?}");
        }
    }

    #[test]
    fn symbolic_two() {
        let rep = symbolic_reconcile(2, &EnumOptions::default()).unwrap();
        assert!(rep.passed(), "{rep:?}");
        let point = reconcile_with_enumeration(2, 1, 3, &EnumOptions::default()).unwrap();
        assert_eq!(rep.constants.mu, point.constants.mu);
    }

    #[test]
    fn elimination_step() {
        for n in 2..=4 {
            let rep = proof_transform_check(n, None).unwrap();
            assert!(rep.passed(), "{rep:?}");
        }
        let rest = ([r(2, 3), r(5, 1), r(-1, 4)], [r(3, 7), r(-2, 1), r(6, 5)]);
        let rep = proof_transform_check(4, Some((&rest.0, &rest.1))).unwrap();
        assert!(rep.passed(), "{rep:?}");
    }

    #[test]
    fn archive_matches_small_measurements() {
        let opts = EnumOptions::default();
        for n in 1..=3 {
            let rep = reconcile_with_enumeration(n, 1, 2, &opts).unwrap();
            assert_eq!(
                rep.constants.mu,
                archived_mu(n).unwrap().map(|m| m.to_string())
            );
        }
        assert_eq!(archived_mu(40).unwrap(), None);
    }

    #[test]
    fn symmetric() {
        assert!(symmetry_check(3, 1).unwrap().passed());
        assert!(symmetry_check(4, 1).unwrap().passed());
    }
}
