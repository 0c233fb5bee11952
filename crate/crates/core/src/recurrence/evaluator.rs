use super::{nineteen, six, Provenance};
use crate::error::{Error, Result};
use crate::lattice::{self, EnumOptions};
use crate::scalar::{Bindings, Field, MPoly, Var};
use crate::vertex::Model;

/// A partition function as a black box on rapidity points `(zeta, z)`.
pub trait PartitionEvaluator<F>: Send + Sync {
    fn size(&self) -> usize;
    fn provenance(&self) -> Provenance;
    fn eval(&self, zeta: &[F], z: &[F]) -> Result<F>;
}

fn check_len<F>(n: usize, zeta: &[F], z: &[F]) -> Result<()> {
    if zeta.len() != n || z.len() != n {
        return Err(Error::Domain(format!(
            "evaluator of size {n} called with {} and {} rapidities",
            zeta.len(),
            z.len()
        )));
    }
    Ok(())
}

/// `Z_0 = 1`.
pub struct Unit;

impl<F: Field> PartitionEvaluator<F> for Unit {
    fn size(&self) -> usize {
        0
    }

    fn provenance(&self) -> Provenance {
        Provenance::RecurrenceBuilt
    }

    fn eval(&self, zeta: &[F], z: &[F]) -> Result<F> {
        check_len(0, zeta, z)?;
        Ok(F::one())
    }
}

/// `Z_N` reconstructed from an evaluator of `Z_{N-1}`.
pub struct LagrangeExtension<F> {
    prev: Box<dyn PartitionEvaluator<F>>,
    q: F,
}

impl<F: Field> LagrangeExtension<F> {
    pub fn new(prev: Box<dyn PartitionEvaluator<F>>, q: F) -> Self {
        LagrangeExtension { prev, q }
    }
}

impl<F: Field> PartitionEvaluator<F> for LagrangeExtension<F> {
    fn size(&self) -> usize {
        self.prev.size() + 1
    }

    fn provenance(&self) -> Provenance {
        Provenance::RecurrenceBuilt
    }

    fn eval(&self, zeta: &[F], z: &[F]) -> Result<F> {
        check_len(self.size(), zeta, z)?;
        nineteen::lagrange_extend(self.prev.as_ref(), zeta, z, &self.q)
    }
}

/// Six-vertex state sum with the raw weights.
pub struct EnumeratedSix<F> {
    pub n: usize,
    pub q: F,
    pub opts: EnumOptions,
}

impl<F: Field> PartitionEvaluator<F> for EnumeratedSix<F> {
    fn size(&self) -> usize {
        self.n
    }

    fn provenance(&self) -> Provenance {
        Provenance::Enumerated
    }

    fn eval(&self, zeta: &[F], z: &[F]) -> Result<F> {
        check_len(self.n, zeta, z)?;
        lattice::enumerate_six_vertex_raw(zeta, z, &self.q, &self.opts)
    }
}

pub struct IzerginEvaluator<F> {
    pub n: usize,
    pub q: F,
}

impl<F: Field> PartitionEvaluator<F> for IzerginEvaluator<F> {
    fn size(&self) -> usize {
        self.n
    }

    fn provenance(&self) -> Provenance {
        Provenance::Determinant
    }

    fn eval(&self, zeta: &[F], z: &[F]) -> Result<F> {
        check_len(self.n, zeta, z)?;
        six::izergin_determinant(zeta, z, &self.q)
    }
}

/// Nineteen-vertex state sum in the cleared normalization, as a function of
/// `(zeta, z)` rather than of their roots.
///
/// Coordinates with an exact square root in the field are fed to the lattice
/// directly. The others become symbolic roots; the state sum is then even in
/// each of them, and halving the exponents gives a polynomial in the
/// coordinate itself, which is evaluated. An odd exponent is reported as an
/// integrity error.
pub struct EnumeratedNineteen<F> {
    pub n: usize,
    /// `sqrt(q)`.
    pub p: F,
    pub opts: EnumOptions,
}

impl<F: Field> EnumeratedNineteen<F> {
    pub fn new(n: usize, p: F, opts: EnumOptions) -> Self {
        EnumeratedNineteen { n, p, opts }
    }
}

impl<F: Field> PartitionEvaluator<F> for EnumeratedNineteen<F> {
    fn size(&self) -> usize {
        self.n
    }

    fn provenance(&self) -> Provenance {
        Provenance::Enumerated
    }

    fn eval(&self, zeta: &[F], z: &[F]) -> Result<F> {
        check_len(self.n, zeta, z)?;
        let u: Vec<Option<F>> = zeta.iter().map(Field::sqrt_exact).collect();
        let v: Vec<Option<F>> = z.iter().map(Field::sqrt_exact).collect();
        if u.iter().chain(&v).all(Option::is_some) {
            let u: Vec<F> = u.into_iter().flatten().collect();
            let v: Vec<F> = v.into_iter().flatten().collect();
            return lattice::enumerate_cleared(Model::NineteenVertex, &u, &v, &self.p, &self.opts);
        }
        let lift = |roots: &[Option<F>], var: fn(u16) -> Var| -> Vec<MPoly<F>> {
            roots
                .iter()
                .enumerate()
                .map(|(k, r)| match r {
                    Some(r) => MPoly::constant(r.clone()),
                    None => MPoly::var(var(k as u16 + 1)),
                })
                .collect()
        };
        let (us, vs) = (lift(&u, Var::U), lift(&v, Var::V));
        let p = MPoly::constant(self.p.clone());
        let mut poly = lattice::enumerate_cleared(Model::NineteenVertex, &us, &vs, &p, &self.opts)?;
        let mut bindings: Bindings<F> = Bindings::new();
        for (k, r) in u.iter().enumerate() {
            if r.is_none() {
                let k = k as u16 + 1;
                poly = poly.halve_exponents(Var::U(k), Var::Zeta(k))?;
                bindings.insert(Var::Zeta(k), zeta[k as usize - 1].clone());
            }
        }
        for (k, r) in v.iter().enumerate() {
            if r.is_none() {
                let k = k as u16 + 1;
                poly = poly.halve_exponents(Var::V(k), Var::Z(k))?;
                bindings.insert(Var::Z(k), z[k as usize - 1].clone());
            }
        }
        poly.eval(&bindings)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{LatticeSpec, Normalization};
    use crate::scalar::{Rational, Ring};

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn symbolic_fallback_matches_direct_roots() {
        let u = vec![r(2, 3), r(-5, 4)];
        let v = vec![r(7, 5), r(3, 1)];
        let p = r(3, 2);
        let spec = LatticeSpec::new(
            Model::NineteenVertex,
            u.clone(),
            v.clone(),
            p.clone(),
            Normalization::Cleared,
        )
        .unwrap();
        let direct = lattice::enumerate_dwpf(&spec, &EnumOptions::default()).unwrap();
        let ev = EnumeratedNineteen::new(2, p, EnumOptions::default());
        let zeta: Vec<Rational> = u.iter().map(Ring::square).collect();
        let z: Vec<Rational> = v.iter().map(Ring::square).collect();
        assert_eq!(ev.eval(&zeta, &z).unwrap(), direct);
        // a coordinate without a rational root goes through the symbolic path
        let zeta2 = vec![r(2, 1), zeta[1].clone()];
        let z2 = vec![z[0].clone(), r(3, 1)];
        let sym = ev.eval(&zeta2, &z2).unwrap();
        // cross-check against a polynomial fit in zeta_1 through square points
        let xs: Vec<Rational> = (1..=5).map(|k| r(k * k, 1)).collect();
        let ys: Vec<Rational> = xs
            .iter()
            .map(|x| ev.eval(&[x.clone(), zeta[1].clone()], &z2).unwrap())
            .collect();
        assert_eq!(sym, nineteen::lagrange_eval(&xs, &ys, &r(2, 1)).unwrap());
    }

    #[test]
    fn wrong_arity_is_rejected() {
        let ev = IzerginEvaluator { n: 2, q: r(3, 2) };
        assert!(ev.eval(&[r(1, 2)], &[r(1, 3)]).is_err());
    }
}
