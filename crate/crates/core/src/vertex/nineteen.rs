//! Izergin-Korepin nineteen-vertex weights as functions of the ratio
//! `zeta = zeta_i / z_j`.

use super::Label;
use crate::error::{Error, Result};
use crate::scalar::{Field, Ring};

/// Raw weight, transcribed term by term (x4 keeps its six-term form).
///
/// The caller supplies `sqrt_zeta` and `sqrt_q`; they are checked against
/// `zeta` and `q` but never computed.
pub fn weights19v<F: Field>(label: Label, zeta: &F, sqrt_zeta: &F, q: &F, sqrt_q: &F) -> Result<F> {
    if sqrt_zeta.square() != *zeta {
        return Err(Error::InconsistentRoot(format!(
            "({sqrt_zeta})^2 != {zeta}"
        )));
    }
    if sqrt_q.square() != *q {
        return Err(Error::InconsistentRoot(format!("({sqrt_q})^2 != {q}")));
    }
    let one = F::one;
    let z = zeta;
    let zm1 = z.clone() - &one();
    let q2m1 = q.pow(2) - &one();
    let zq3p1 = z.clone() * &q.pow(3) + &one();
    let w = match label {
        Label::X1 => (z.clone() * &q.pow(2) - &one()) * &zq3p1,
        Label::X2 => zm1 * q * &zq3p1,
        Label::X3 => zm1 * &q.pow(2) * &(z.clone() * q + &one()),
        Label::X4 => {
            -z.clone() + &(z.clone() * &q.pow(5)) + &(z.clone() * &zm1 * &q.pow(4))
                - &(z.clone() * &q.pow(3))
                + &(z.clone() * &q.pow(2))
                + &(zm1 * q)
        }
        Label::X5 => sqrt_zeta.clone() * &q2m1 * &zq3p1,
        Label::X6 => sqrt_zeta.clone() * &zm1 * &(-sqrt_q.clone()) * &q2m1,
        Label::X7 => z.clone() * &q2m1 * &(z.clone() * &q.pow(3) + &(zm1 * q) + &one()),
        Label::Y5 => sqrt_zeta.clone() * &q2m1 * &zq3p1,
        Label::Y6 => sqrt_zeta.clone() * &zm1 * &sqrt_q.pow(5) * &q2m1,
        Label::Y7 => q2m1 * &(z.clone() * &q.pow(3) - &(zm1 * &q.pow(2)) + &one()),
        other => {
            return Err(Error::Domain(format!(
                "{other} is not a nineteen-vertex weight"
            )))
        }
    };
    Ok(w)
}

/// `v^4 * w(u^2 / v^2)` with `sqrt(u^2/v^2) := u / v`, expanded so that only
/// ring operations are needed. `q = p^2`.
pub fn cleared19v<R: Ring>(label: Label, u: &R, v: &R, p: &R) -> Option<R> {
    let q = p.square();
    let u2 = u.square();
    let v2 = v.square();
    let uv = u.clone() * v;
    let q2m1 = q.square() - R::one();
    let diff = u2.clone() - &v2;
    let q3u2pv2 = q.pow(3) * &u2 + &v2;
    Some(match label {
        Label::X1 => (q.square() * &u2 - &v2) * &q3u2pv2,
        Label::X2 => diff * &q * &q3u2pv2,
        Label::X3 => diff * &q.square() * &(q.clone() * &u2 + &v2),
        Label::X4 => {
            let u2v2 = u2.clone() * &v2;
            -u2v2.clone() + &(q.pow(5) * &u2v2) + &(u2.clone() * &diff * &q.pow(4))
                - &(q.pow(3) * &u2v2)
                + &(q.square() * &u2v2)
                + &(diff * &v2 * &q)
        }
        Label::X5 | Label::Y5 => uv * &q2m1 * &q3u2pv2,
        Label::X6 => -(uv * &diff * p * &q2m1),
        Label::X7 => u2.clone() * &q2m1 * &(q.pow(3) * &u2 + &(diff * &q) + &v2),
        Label::Y6 => uv * &diff * &p.pow(5) * &q2m1,
        Label::Y7 => v2.clone() * &q2m1 * &(q.pow(3) * &u2 - &(diff * &q.square()) + &v2),
        _ => return None,
    })
}

/// Denominator-cleared weight at rapidity roots `(u, v)`.
pub fn normalized_weight<F: Field>(label: Label, u: &F, v: &F, p: &F) -> Result<F> {
    if v.is_zero() {
        return Err(Error::Domain("normalized weight needs v != 0".into()));
    }
    cleared19v(label, u, v, p)
        .ok_or_else(|| Error::Domain(format!("{label} is not a nineteen-vertex weight")))
}

/// Labels whose raw weight vanishes at `zeta` (with `sqrt_zeta`, `p`).
pub fn vanishing_labels<F: Field>(zeta: &F, sqrt_zeta: &F, p: &F) -> Result<Vec<Label>> {
    let q = p.square();
    let mut out = Vec::new();
    for &label in super::Model::NineteenVertex.labels() {
        if weights19v(label, zeta, sqrt_zeta, &q, p)?.is_zero() {
            out.push(label);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Cyclo12, MPoly, Rational, Var};

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn raw(label: Label, zeta: Rational, sqrt_zeta: Rational, p: Rational) -> Rational {
        weights19v(label, &zeta, &sqrt_zeta, &p.square(), &p).unwrap()
    }

    #[test]
    fn x2_vanishes_at_one() {
        assert!(raw(Label::X2, r(1, 1), r(1, 1), r(3, 2)).is_zero());
    }

    #[test]
    fn x1_vanishes_at_inverse_q_squared() {
        let p = r(3, 2);
        let q = p.square();
        let zeta = q.square().inv().unwrap();
        let sqrt_zeta = q.inv().unwrap();
        assert!(raw(Label::X1, zeta, sqrt_zeta, p).is_zero());
    }

    #[test]
    fn x1_direct_substitution() {
        assert_eq!(
            raw(Label::X1, r(4, 1), r(2, 1), r(2, 1)),
            Rational::from(63 * 257)
        );
        // zeta = 2, q = 2 has no rational roots; x1 does not need them.
        assert_eq!(
            root_free(Label::X1, &r(2, 1), &r(2, 1)),
            Rational::from(119)
        );
    }

    #[test]
    fn inconsistent_roots_rejected() {
        let q = r(4, 1);
        assert!(matches!(
            weights19v(Label::X1, &r(2, 1), &r(3, 2), &q, &r(2, 1)),
            Err(Error::InconsistentRoot(_))
        ));
        assert!(matches!(
            weights19v(Label::X1, &r(4, 1), &r(2, 1), &q, &r(3, 1)),
            Err(Error::InconsistentRoot(_))
        ));
    }

    #[test]
    fn cleared_equals_v4_times_raw() {
        let (u, v, p) = (r(-3, 7), r(5, 2), r(7, 5));
        let ratio = u.clone() * &v.inv().unwrap();
        for &label in super::super::Model::NineteenVertex.labels() {
            let expected = v.pow(4) * &raw(label, ratio.square(), ratio.clone(), p.clone());
            assert_eq!(
                normalized_weight(label, &u, &v, &p).unwrap(),
                expected,
                "{label}"
            );
        }
    }

    #[test]
    fn normalized_weight_at_coincidence() {
        let (v, p) = (r(5, 3), r(4, 3));
        let q = p.square();
        let expected = (q.square() - Rational::one()) * &(q.pow(3) + &Rational::one()) * &v.pow(4);
        assert_eq!(normalized_weight(Label::X1, &v, &v, &p).unwrap(), expected);
        assert!(normalized_weight(Label::X2, &v, &v, &p).unwrap().is_zero());
        assert!(normalized_weight(Label::X1, &v, &Rational::zero(), &p).is_err());
    }

    #[test]
    fn turning_pair_is_even() {
        type P = MPoly<Rational>;
        let (u, v, p) = (P::var(Var::U(1)), P::var(Var::V(1)), P::var(Var::P));
        let x5 = cleared19v(Label::X5, &u, &v, &p).unwrap();
        let expected =
            u.clone() * &v * &(p.pow(4) - P::one()) * &(p.pow(6) * &u.square() + &v.square());
        assert_eq!(x5, expected);
        let prod = x5 * &cleared19v(Label::Y6, &u, &v, &p).unwrap();
        for (m, _) in prod.terms() {
            assert_eq!(m.exponent(Var::U(1)) % 2, 0);
            assert_eq!(m.exponent(Var::V(1)) % 2, 0);
        }
    }

    #[test]
    fn vanishing_loci() {
        let p = r(5, 3);
        let mut at_one = vanishing_labels(&r(1, 1), &r(1, 1), &p).unwrap();
        at_one.sort();
        assert_eq!(at_one, vec![Label::X2, Label::X3, Label::X6, Label::Y6]);

        let q = p.square();
        let zeta = -q.pow(3).inv().unwrap();
        let at_minus: Vec<Label> = super::super::Model::NineteenVertex
            .labels()
            .iter()
            .copied()
            .filter(|&l| root_free(l, &zeta, &q).is_zero())
            .collect();
        assert_eq!(at_minus, vec![Label::X1, Label::X2, Label::X5, Label::Y5]);

        // At q^3 = -1 the two loci meet (1 = -q^{-3}) and every weight vanishes.
        let pc = Cyclo12::p();
        assert_eq!(-pc.pow(6).inv().unwrap(), Cyclo12::one());
        let cyc = vanishing_labels(&Cyclo12::one(), &Cyclo12::one(), &pc).unwrap();
        assert_eq!(cyc.len(), 10);
    }

    /// The weight divided by whatever odd power of `sqrt(zeta)` and `sqrt(q)`
    /// it carries, evaluated at `(zeta, q)`. Needs no square roots.
    fn root_free(label: Label, zeta: &Rational, q: &Rational) -> Rational {
        type P = MPoly<Rational>;
        let (u, p) = (P::var(Var::U(1)), P::var(Var::P));
        let w = cleared19v(label, &u, &P::one(), &p).unwrap();
        let parity =
            |m: &crate::scalar::Monomial| (m.exponent(Var::U(1)) % 2, m.exponent(Var::P) % 2);
        let first = parity(w.terms().next().unwrap().0);
        let halved = P::from_terms(w.terms().map(|(m, c)| {
            assert_eq!(parity(m), first, "{label} mixes parities");
            let e = crate::scalar::Monomial::from_pairs([
                (Var::Zeta(1), m.exponent(Var::U(1)) / 2),
                (Var::Q, m.exponent(Var::P) / 2),
            ]);
            (e, c.clone())
        }));
        let b = [(Var::Zeta(1), zeta.clone()), (Var::Q, q.clone())].into();
        halved.eval(&b).unwrap()
    }
}
