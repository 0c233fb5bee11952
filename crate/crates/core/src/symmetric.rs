//! Elementary symmetric polynomials, the generating polynomial `P(x)` and
//! the family `Delta_{i,N}` it produces at `q^3 = -1`.
//!
//! With `M` row rapidities,
//!
//! ```text
//! bracket(x) = q prod(zeta + q x) prod(z + x/q) + q^{-1} prod(zeta + x/q) prod(z + q x)
//! P(x)       = (-q)^M bracket(x)
//! bracket(x) = sum_i x^i Delta_{2M-i, M}
//! ```

use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::{Mode, VerificationReport, Witness};
use crate::scalar::{Cyclo12, Field, MPoly, Rational, Ring, Var};

/// `E_i(xs)`; zero for `i < 0` or `i > xs.len()`.
pub fn elementary_symmetric<R: Ring>(xs: &[R], i: i64) -> R {
    if i < 0 || i as usize > xs.len() {
        return R::zero();
    }
    let i = i as usize;
    // e[k] after processing a prefix of xs
    let mut e = vec![R::zero(); i + 1];
    e[0] = R::one();
    for x in xs {
        for k in (1..=i).rev() {
            e[k] = e[k].clone() + &(e[k - 1].clone() * x);
        }
    }
    e[i].clone()
}

pub fn elementary_symmetric_poly<F: Field>(vars: &[Var], i: i64) -> MPoly<F> {
    let xs: Vec<MPoly<F>> = vars.iter().map(|&v| MPoly::var(v)).collect();
    elementary_symmetric(&xs, i)
}

/// The bracket above, over any ring, given `q` and `q^{-1}`.
pub fn generating_bracket<R: Ring>(zeta: &[R], z: &[R], x: &R, q: &R, q_inv: &R) -> R {
    let qx = q.clone() * x;
    let xq = q_inv.clone() * x;
    let mut first = q.clone();
    let mut second = q_inv.clone();
    for a in zeta {
        first = first * &(a.clone() + &qx);
        second = second * &(a.clone() + &xq);
    }
    for b in z {
        first = first * &(b.clone() + &xq);
        second = second * &(b.clone() + &qx);
    }
    first + &second
}

/// `P(x | zeta, z) = (-q)^M bracket(x)` with `M = zeta.len()`.
pub fn p_generating<F: Field>(zeta: &[F], z: &[F], x: &F, q: &F) -> Result<F> {
    let bracket = generating_bracket(zeta, z, x, q, &q.inv()?);
    Ok((-q.clone()).pow(zeta.len() as u32) * &bracket)
}

/// `P` as a polynomial in `x` and the rapidity variables over `Cyclo12`.
pub fn p_generating_poly(n: usize) -> MPoly<Cyclo12> {
    let (zeta, z) = symbols::<Cyclo12>(n);
    let q = MPoly::constant(Cyclo12::q());
    let q_inv = MPoly::constant(Cyclo12::q().inv().expect("q is a unit"));
    let bracket = generating_bracket(&zeta, &z, &MPoly::var(Var::X), &q, &q_inv);
    (-q).pow(n as u32) * &bracket
}

fn symbols<F: Field>(n: usize) -> (Vec<MPoly<F>>, Vec<MPoly<F>>) {
    (
        Var::zetas(n).into_iter().map(MPoly::var).collect(),
        Var::zs(n).into_iter().map(MPoly::var).collect(),
    )
}

/// `Delta_{i,N}` for `0 <= i <= 2N`, integer polynomials in `zeta_1..zeta_N`,
/// `z_1..z_N`.
#[derive(Debug, Clone, PartialEq)]
pub struct DeltaTable {
    pub n: usize,
    entries: Vec<MPoly<Rational>>,
}

impl DeltaTable {
    /// `Delta_{i,N}`, zero outside `0..=2N`.
    pub fn get(&self, i: i64) -> MPoly<Rational> {
        if i < 0 || i as usize >= self.entries.len() {
            MPoly::zero()
        } else {
            self.entries[i as usize].clone()
        }
    }

    pub fn entries(&self) -> &[MPoly<Rational>] {
        &self.entries
    }

    pub fn to_cyclo(&self, i: i64) -> MPoly<Cyclo12> {
        self.get(i).map_coeffs(Cyclo12::from_rational)
    }

    pub fn export(&self) -> DeltaExport {
        DeltaExport {
            n: self.n,
            deltas: self
                .entries
                .iter()
                .enumerate()
                .map(|(index, p)| DeltaEntry {
                    index,
                    terms: p.term_list(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DeltaEntry {
    pub index: usize,
    pub terms: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DeltaExport {
    pub n: usize,
    pub deltas: Vec<DeltaEntry>,
}

fn integer_coefficients(p: &MPoly<Cyclo12>, what: &str) -> Result<MPoly<Rational>> {
    p.try_map_coeffs(|c| match c.as_rational() {
        Some(r) if r.is_integer() => Ok(r.clone()),
        _ => Err(Error::Integrity {
            what: what.to_string(),
            coeff: c.to_string(),
        }),
    })
}

/// Coefficients of `x` in the bracket, i.e. `(-q)^{-N} P_N(x)`, at
/// `q^3 = -1`.
pub fn delta_from_generating(n: usize) -> Result<DeltaTable> {
    let (zeta, z) = symbols::<Cyclo12>(n);
    let q = MPoly::constant(Cyclo12::q());
    let q_inv = MPoly::constant(Cyclo12::q().inv()?);
    let bracket = generating_bracket(&zeta, &z, &MPoly::var(Var::X), &q, &q_inv);
    let entries = (0..=2 * n)
        .map(|i| {
            let coeff = bracket.coeff_extract(Var::X, (2 * n - i) as u32);
            integer_coefficients(&coeff, &format!("Delta_{{{i},{n}}}"))
        })
        .collect::<Result<_>>()?;
    Ok(DeltaTable { n, entries })
}

/// `q^m + q^{-m}` at a primitive `q^3 = -1`, by the residue of `m` mod 6.
pub fn residue_coefficient(m: i64) -> i64 {
    match m.rem_euclid(6) {
        0 => 2,
        1 | 5 => 1,
        2 | 4 => -1,
        _ => -2,
    }
}

/// `Delta_{2N-i,N} = sum_{n1+n2=i, 0<=n1,n2<=N} c(1+n1-n2) E_{N-n1}(zeta) E_{N-n2}(z)`
/// with `c(m) = q^m + q^{-m}`, over any ring. Returns `Delta_{0..=2N}`.
pub fn delta_values<R: Ring>(zeta: &[R], z: &[R]) -> Vec<R> {
    let n = zeta.len();
    let e_zeta: Vec<R> = (0..=n)
        .map(|k| elementary_symmetric(zeta, k as i64))
        .collect();
    let e_z: Vec<R> = (0..=n).map(|k| elementary_symmetric(z, k as i64)).collect();
    let mut out = vec![R::zero(); 2 * n + 1];
    for n1 in 0..=n {
        for n2 in 0..=n {
            let c = R::from_i64(residue_coefficient(1 + n1 as i64 - n2 as i64));
            let idx = 2 * n - (n1 + n2);
            out[idx] = out[idx].clone() + &(c * &e_zeta[n - n1] * &e_z[n - n2]);
        }
    }
    out
}

pub fn delta_from_elementary(n: usize) -> DeltaTable {
    let (zeta, z) = symbols::<Rational>(n);
    DeltaTable {
        n,
        entries: delta_values(&zeta, &z),
    }
}

/// `Delta_{i,N}(zeta_N = z_N) = Delta_{i,N-1} + z_N Delta_{i-1,N-1} + z_N^2 Delta_{i-2,N-1}`
/// for every `0 <= i <= 2N`, symbolically.
pub fn delta_specialize_check(n: usize) -> Result<VerificationReport> {
    if n < 2 {
        return Err(Error::Domain("specialization needs N >= 2".into()));
    }
    let big = delta_from_generating(n)?;
    let small = delta_from_generating(n - 1)?;
    let zn = MPoly::var(Var::Z(n as u16));
    let mut report = VerificationReport::new("delta-specialization", n, Mode::Symbolic);
    for i in 0..=2 * n as i64 {
        let lhs = big.get(i).substitute(Var::Zeta(n as u16), &zn);
        let rhs =
            small.get(i) + &(zn.clone() * &small.get(i - 1)) + &(zn.square() * &small.get(i - 2));
        report.record(lhs == rhs, || {
            Witness::new::<String>(&[], &[], format!("Delta_{{{i},{n}}}: {lhs} != {rhs}"))
        });
    }
    Ok(report)
}

/// At `q = 1` the bracket is `2 prod(zeta + x) prod(z + x)`, so the
/// coefficient of `x^i` in `P` is `(-1)^N 2 E_{2N-i}` of the union.
pub fn q_one_check(n: usize) -> VerificationReport {
    let (zeta, z) = symbols::<Rational>(n);
    let one = MPoly::one();
    let x = MPoly::var(Var::X);
    let p = generating_bracket(&zeta, &z, &x, &one, &one).scale(&Rational::from(if n % 2 == 0 {
        1
    } else {
        -1
    }));
    let union: Vec<Var> = Var::zetas(n).into_iter().chain(Var::zs(n)).collect();
    let sign = Rational::from(if n % 2 == 0 { 2 } else { -2 });
    let mut report = VerificationReport::new("generating-at-q-one", n, Mode::Symbolic);
    for i in 0..=2 * n {
        let lhs = p.coeff_extract(Var::X, i as u32);
        let rhs = elementary_symmetric_poly::<Rational>(&union, (2 * n - i) as i64).scale(&sign);
        report.record(lhs == rhs, || {
            Witness::new::<String>(&[], &[], format!("coefficient of x^{i}"))
        });
    }
    report
}
