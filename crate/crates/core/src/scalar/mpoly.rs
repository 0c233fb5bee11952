use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::{ExactDiv, Field, Rational, Ring};
use crate::error::{Error, Result};

/// Named variable slots shared by every polynomial in the crate.
///
/// Indices are fixed so that polynomials built independently (for instance a
/// size-N and a size-(N-1) Delta table) live in the same ring.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Q,
    P,
    /// horizontal rapidity zeta_k, 1-based
    Zeta(u16),
    /// vertical rapidity z_k, 1-based
    Z(u16),
    /// square root of zeta_k
    U(u16),
    /// square root of z_k
    V(u16),
}

impl Var {
    pub fn index(self) -> u32 {
        let slot = |k: u16, offset: u32| 3 + 4 * (u32::from(k).saturating_sub(1)) + offset;
        match self {
            Var::X => 0,
            Var::Q => 1,
            Var::P => 2,
            Var::Zeta(k) => slot(k, 0),
            Var::Z(k) => slot(k, 1),
            Var::U(k) => slot(k, 2),
            Var::V(k) => slot(k, 3),
        }
    }

    pub fn zetas(n: usize) -> Vec<Var> {
        (1..=n as u16).map(Var::Zeta).collect()
    }

    pub fn zs(n: usize) -> Vec<Var> {
        (1..=n as u16).map(Var::Z).collect()
    }

    pub fn us(n: usize) -> Vec<Var> {
        (1..=n as u16).map(Var::U).collect()
    }

    pub fn vs(n: usize) -> Vec<Var> {
        (1..=n as u16).map(Var::V).collect()
    }
}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Var {
    fn cmp(&self, other: &Self) -> Ordering {
        self.index().cmp(&other.index())
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X => write!(f, "x"),
            Var::Q => write!(f, "q"),
            Var::P => write!(f, "p"),
            Var::Zeta(k) => write!(f, "zeta{k}"),
            Var::Z(k) => write!(f, "z{k}"),
            Var::U(k) => write!(f, "u{k}"),
            Var::V(k) => write!(f, "v{k}"),
        }
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let indexed = |rest: &str| {
            rest.parse::<u16>()
                .ok()
                .filter(|&k| k > 0)
                .ok_or_else(|| Error::Parse(format!("bad variable `{s}`")))
        };
        match s {
            "x" => Ok(Var::X),
            "q" => Ok(Var::Q),
            "p" => Ok(Var::P),
            _ => {
                if let Some(rest) = s.strip_prefix("zeta") {
                    indexed(rest).map(Var::Zeta)
                } else if let Some(rest) = s.strip_prefix('z') {
                    indexed(rest).map(Var::Z)
                } else if let Some(rest) = s.strip_prefix('u') {
                    indexed(rest).map(Var::U)
                } else if let Some(rest) = s.strip_prefix('v') {
                    indexed(rest).map(Var::V)
                } else {
                    Err(Error::Parse(format!("bad variable `{s}`")))
                }
            }
        }
    }
}

/// Sparse power product, sorted by variable with no zero exponents.
///
/// Ordered graded-lexicographically: total degree first, then the exponent of
/// the lowest-indexed variable where the two differ.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var, exp: u32) -> Self {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, exp)])
        }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut map: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_default() += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.iter().find(|&&(w, _)| w == v).map_or(0, |&(_, e)| e)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, ea) = self.0[i];
            let (b, eb) = other.0[j];
            match a.cmp(&b) {
                Ordering::Less => {
                    out.push((a, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == v {
                let d = other.0[j].1;
                if d > e {
                    return None;
                }
                if e > d {
                    out.push((v, e - d));
                }
                j += 1;
            } else {
                out.push((v, e));
            }
        }
        (j == other.0.len()).then_some(Monomial(out))
    }

    fn without(&self, v: Var) -> Monomial {
        Monomial(self.0.iter().copied().filter(|&(w, _)| w != v).collect())
    }

    fn map_vars(&self, f: impl Fn(Var) -> Var) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|&(v, e)| (f(v), e)))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (mut i, mut j) = (0, 0);
            loop {
                match (self.0.get(i), other.0.get(j)) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(&(a, ea)), Some(&(b, eb))) => match a.cmp(&b) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => {
                            if ea != eb {
                                return ea.cmp(&eb);
                            }
                            i += 1;
                            j += 1;
                        }
                    },
                }
            }
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, &(v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Variable assignment for evaluation.
pub type Bindings<C> = BTreeMap<Var, C>;

/// Sparse multivariate polynomial with coefficients in a field.
///
/// No zero coefficient is ever stored, so structural equality is polynomial
/// equality.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MPoly<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Field> MPoly<C> {
    pub fn constant(c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        MPoly { terms }
    }

    pub fn var(v: Var) -> Self {
        MPoly::term(C::one(), Monomial::var(v, 1))
    }

    pub fn term(c: C, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut out = MPoly::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.clone() + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// The constant value, when the polynomial has no variables.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c))
                .collect(),
        }
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|&(v, _)| v))
            .collect()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(v)).max()
    }

    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == degree)
    }

    /// Coefficient of `v^k`, as a polynomial in the remaining variables.
    pub fn coeff_extract(&self, v: Var, k: u32) -> Self {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(v) == k)
                .map(|(m, c)| (m.without(v), c.clone()))
                .collect(),
        }
    }

    /// Ring homomorphism into `R`: variables through `bind`, coefficients
    /// through `lift`.
    pub fn evaluate_with<R: Ring>(
        &self,
        bind: &dyn Fn(Var) -> Option<R>,
        lift: &dyn Fn(&C) -> R,
    ) -> Result<R> {
        let mut cache: BTreeMap<Var, R> = BTreeMap::new();
        for v in self.variables() {
            cache.insert(v, bind(v).ok_or(Error::MissingBinding(v))?);
        }
        let mut acc = R::zero();
        for (m, c) in &self.terms {
            let mut t = lift(c);
            for &(v, e) in &m.0 {
                t = t * &cache[&v].pow(e);
            }
            acc = acc + &t;
        }
        Ok(acc)
    }

    /// Full evaluation; every variable present must be bound.
    pub fn eval(&self, bindings: &Bindings<C>) -> Result<C> {
        self.evaluate_with(&|v| bindings.get(&v).cloned(), &|c| c.clone())
    }

    /// Bind some variables, keep the rest symbolic.
    pub fn partial_eval(&self, bindings: &Bindings<C>) -> Self {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for &(v, e) in &m.0 {
                match bindings.get(&v) {
                    Some(value) => coeff = coeff * &value.pow(e),
                    None => rest.push((v, e)),
                }
            }
            out.add_term(Monomial(rest), coeff);
        }
        out
    }

    /// Replace `v` by a polynomial.
    pub fn substitute(&self, v: Var, value: &MPoly<C>) -> Self {
        self.evaluate_with(
            &|w| Some(if w == v { value.clone() } else { MPoly::var(w) }),
            &|c| MPoly::constant(c.clone()),
        )
        .expect("every variable is bound")
    }

    /// Rename variables through `f`.
    pub fn rename(&self, f: impl Fn(Var) -> Var) -> Self {
        MPoly::from_terms(self.terms.iter().map(|(m, c)| (m.map_vars(&f), c.clone())))
    }

    pub fn swap_vars(&self, a: Var, b: Var) -> Self {
        self.rename(|v| {
            if v == a {
                b
            } else if v == b {
                a
            } else {
                v
            }
        })
    }

    /// Invariance under every adjacent transposition of `group`, which
    /// generates the full symmetric group on it.
    pub fn is_symmetric(&self, group: &[Var]) -> bool {
        group
            .windows(2)
            .all(|w| self.swap_vars(w[0], w[1]) == *self)
    }

    /// Rewrite even powers `from^{2k}` as `to^k`; fails on an odd power.
    pub fn halve_exponents(&self, from: Var, to: Var) -> Result<Self> {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(from);
            if e % 2 == 1 {
                return Err(Error::Domain(format!("odd power of {from} in {m}")));
            }
            let rest = m.without(from).mul(&Monomial::var(to, e / 2));
            out.add_term(rest, c.clone());
        }
        Ok(out)
    }

    pub fn map_coeffs<D: Field>(&self, f: impl Fn(&C) -> D) -> MPoly<D> {
        MPoly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    pub fn try_map_coeffs<D: Field>(&self, f: impl Fn(&C) -> Result<D>) -> Result<MPoly<D>> {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Multivariate division by a single divisor in graded-lex order.
    /// Returns `(quotient, remainder)` with `self = quotient * divisor + remainder`
    /// and no remainder term divisible by the divisor's leading monomial.
    pub fn div_rem(&self, divisor: &MPoly<C>) -> Result<(Self, Self)> {
        let (lead_m, lead_c) = divisor.leading_term().ok_or(Error::DivisionByZero)?;
        let lead_inv = lead_c.inv()?;
        let mut rest = self.clone();
        let mut quotient = MPoly::zero();
        let mut remainder = MPoly::zero();
        while let Some((m, c)) = rest.terms.iter().next_back() {
            let (m, c) = (m.clone(), c.clone());
            match m.checked_div(lead_m) {
                Some(shift) => {
                    let factor = c * &lead_inv;
                    let step = MPoly::term(factor, shift);
                    rest = rest - &(step.clone() * divisor);
                    quotient = quotient + &step;
                }
                None => {
                    rest.terms.remove(&m);
                    remainder.add_term(m, c);
                }
            }
        }
        Ok((quotient, remainder))
    }

    /// Canonical sorted term list `(coefficient, monomial)`, descending order.
    pub fn term_list(&self) -> Vec<(String, String)> {
        self.terms()
            .map(|(m, c)| (c.to_string(), m.to_string()))
            .collect()
    }
}

impl MPoly<Rational> {
    /// True when every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(Rational::is_integer)
    }
}

impl<C: Field> fmt::Display for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let text = c.to_string();
            let (sign, magnitude) = match text.strip_prefix('-') {
                Some(rest) if !rest.starts_with('[') => ("-", rest.to_string()),
                _ => ("+", text),
            };
            if k == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (m.is_one(), magnitude.as_str()) {
                (true, _) => write!(f, "{magnitude}")?,
                (false, "1") => write!(f, "{m}")?,
                (false, _) => write!(f, "{magnitude}*{m}")?,
            }
        }
        Ok(())
    }
}

impl<C: Field> fmt::Debug for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<C: Field> Serialize for MPoly<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.term_list().serialize(serializer)
    }
}

impl<'a, C: Field> Add<&'a MPoly<C>> for MPoly<C> {
    type Output = MPoly<C>;
    fn add(mut self, rhs: &'a MPoly<C>) -> MPoly<C> {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
        self
    }
}

impl<'a, C: Field> Sub<&'a MPoly<C>> for MPoly<C> {
    type Output = MPoly<C>;
    fn sub(mut self, rhs: &'a MPoly<C>) -> MPoly<C> {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
        self
    }
}

impl<'a, C: Field> Mul<&'a MPoly<C>> for MPoly<C> {
    type Output = MPoly<C>;
    fn mul(self, rhs: &'a MPoly<C>) -> MPoly<C> {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb);
            }
        }
        out
    }
}

impl<C: Field> Add for MPoly<C> {
    type Output = MPoly<C>;
    fn add(self, rhs: MPoly<C>) -> MPoly<C> {
        self + &rhs
    }
}

impl<C: Field> Sub for MPoly<C> {
    type Output = MPoly<C>;
    fn sub(self, rhs: MPoly<C>) -> MPoly<C> {
        self - &rhs
    }
}

impl<C: Field> Mul for MPoly<C> {
    type Output = MPoly<C>;
    fn mul(self, rhs: MPoly<C>) -> MPoly<C> {
        self * &rhs
    }
}

impl<C: Field> Neg for MPoly<C> {
    type Output = MPoly<C>;
    fn neg(self) -> MPoly<C> {
        MPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<C: Field> Ring for MPoly<C> {
    fn zero() -> Self {
        MPoly {
            terms: BTreeMap::new(),
        }
    }

    fn one() -> Self {
        MPoly::constant(C::one())
    }

    fn from_rational(r: &Rational) -> Self {
        MPoly::constant(C::from_rational(r))
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Field> ExactDiv for MPoly<C> {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        let (quotient, remainder) = self.div_rem(rhs).ok()?;
        remainder.is_zero().then_some(quotient)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = MPoly<Rational>;

    fn v(var: Var) -> P {
        P::var(var)
    }

    fn int(n: i64) -> P {
        P::from_i64(n)
    }

    #[test]
    fn eval_sum() {
        let p = v(Var::Zeta(1)) + v(Var::Z(1));
        let b: Bindings<Rational> = [
            (Var::Zeta(1), Rational::from(2)),
            (Var::Z(1), Rational::from(3)),
        ]
        .into();
        assert_eq!(p.eval(&b).unwrap(), Rational::from(5));
    }

    #[test]
    fn eval_missing_binding() {
        let p = v(Var::Zeta(1)) * v(Var::Z(1));
        let b: Bindings<Rational> = [(Var::Zeta(1), Rational::from(2))].into();
        assert_eq!(p.eval(&b), Err(Error::MissingBinding(Var::Z(1))));
    }

    #[test]
    fn substitute_specializes() {
        let p = v(Var::Zeta(1)) * v(Var::Z(1));
        assert_eq!(
            p.substitute(Var::Zeta(1), &v(Var::Z(1))),
            v(Var::Z(1)).square()
        );
    }

    #[test]
    fn coefficient_extraction() {
        let p = v(Var::X).square() + int(3) * v(Var::X);
        assert_eq!(p.coeff_extract(Var::X, 1), int(3));
        assert_eq!(p.coeff_extract(Var::X, 2), int(1));
        assert!(p.coeff_extract(Var::X, 5).is_zero());
    }

    #[test]
    fn symmetry_detection() {
        let group = [Var::Zeta(1), Var::Zeta(2)];
        assert!((v(Var::Zeta(1)) * v(Var::Zeta(2))).is_symmetric(&group));
        assert!(!(v(Var::Zeta(1)) + int(2) * v(Var::Zeta(2))).is_symmetric(&group));
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = v(Var::X) + int(1);
        let d = p.clone() - &p;
        assert!(d.is_zero());
        assert_eq!(d.len(), 0);
        assert_eq!(d.to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let a = v(Var::Z(1)) - v(Var::Zeta(1));
        let b = v(Var::Z(1)) + v(Var::Zeta(2)) * int(3);
        let prod = a.clone() * &b;
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        let (_, r) = (prod + &int(1)).div_rem(&a).unwrap();
        assert!(!r.is_zero());
    }

    #[test]
    fn halving_even_powers() {
        let p = v(Var::U(1)).pow(4) * v(Var::V(1)).square();
        let h = p.halve_exponents(Var::U(1), Var::Zeta(1)).unwrap();
        assert_eq!(h, v(Var::Zeta(1)).square() * v(Var::V(1)).square());
        assert!(v(Var::U(1))
            .halve_exponents(Var::U(1), Var::Zeta(1))
            .is_err());
    }

    #[test]
    fn display_order() {
        let p = int(2) * v(Var::Zeta(1)) + int(2) * v(Var::Zeta(2)) - v(Var::Z(1)) - v(Var::Z(2));
        assert_eq!(p.to_string(), "2*zeta1 - z1 + 2*zeta2 - z2");
        assert_eq!("zeta12".parse::<Var>().unwrap(), Var::Zeta(12));
        assert_eq!("z3".parse::<Var>().unwrap(), Var::Z(3));
    }
}
