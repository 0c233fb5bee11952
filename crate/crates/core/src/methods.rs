//! Interchangeable routes to `Z_N`, registered by name.
//!
//! Every route answers the same question (the partition function at given
//! rapidity roots, in a given normalization) so that any two of them can be
//! compared exactly.

use std::collections::BTreeMap;

use crate::determinant;
use crate::error::{Error, Result};
use crate::lattice::{self, EnumOptions, LatticeSpec, Normalization};
use crate::recurrence::{nineteen, six, Provenance};
use crate::scalar::{product, Cyclo12, Field, Rational, Ring};
use crate::vertex::Model;

/// One evaluation request. `u`, `v` are the square roots of the row and
/// column rapidities and `q = p^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct Query<F> {
    pub model: Model,
    pub u: Vec<F>,
    pub v: Vec<F>,
    pub p: F,
    pub normalization: Normalization,
}

impl<F: Field> Query<F> {
    pub fn n(&self) -> usize {
        self.u.len()
    }

    fn zeta(&self) -> Vec<F> {
        self.u.iter().map(Ring::square).collect()
    }

    fn z(&self) -> Vec<F> {
        self.v.iter().map(Ring::square).collect()
    }

    fn q(&self) -> F {
        self.p.square()
    }

    /// Converts a cleared value into the requested normalization.
    fn from_cleared(&self, cleared: F) -> Result<F> {
        match self.normalization {
            Normalization::Cleared => Ok(cleared),
            Normalization::Raw => {
                let factor = lattice::clearing_factor(self.model, &self.u, &self.v, &self.p);
                cleared.div(&factor)
            }
        }
    }

    fn from_raw(&self, raw: F) -> F {
        match self.normalization {
            Normalization::Raw => raw,
            Normalization::Cleared => {
                raw * &lattice::clearing_factor(self.model, &self.u, &self.v, &self.p)
            }
        }
    }

    fn unsupported(&self, method: &str, why: &str) -> Error {
        Error::Unsupported(format!("method `{method}` on {}: {why}", self.model))
    }
}

pub trait PartitionMethod<F: Field>: Send + Sync {
    fn name(&self) -> &'static str;
    fn provenance(&self) -> Provenance;
    fn compute(&self, query: &Query<F>, opts: &EnumOptions) -> Result<F>;
}

/// Transfer-matrix state sum. Works for both models and any `q`.
pub struct Enumerate;

impl<F: Field> PartitionMethod<F> for Enumerate {
    fn name(&self) -> &'static str {
        "enumerate"
    }

    fn provenance(&self) -> Provenance {
        Provenance::Enumerated
    }

    fn compute(&self, query: &Query<F>, opts: &EnumOptions) -> Result<F> {
        let spec = LatticeSpec::new(
            query.model,
            query.u.clone(),
            query.v.clone(),
            query.p.clone(),
            query.normalization,
        )?;
        lattice::enumerate_dwpf(&spec, opts)
    }
}

/// Izergin's determinant; six-vertex only.
pub struct Izergin;

impl<F: Field> PartitionMethod<F> for Izergin {
    fn name(&self) -> &'static str {
        "izergin"
    }

    fn provenance(&self) -> Provenance {
        Provenance::Determinant
    }

    fn compute(&self, query: &Query<F>, _opts: &EnumOptions) -> Result<F> {
        if query.model != Model::SixVertex {
            return Err(query.unsupported("izergin", "six-vertex only"));
        }
        let raw = six::izergin_determinant(&query.zeta(), &query.z(), &query.q())?;
        Ok(query.from_raw(raw))
    }
}

/// Lagrange reconstruction from `Z_0 = 1`; nineteen-vertex, `q^3 != -1`.
///
/// The cleared sum is `(q^2 - 1)^N prod zeta_k` times the reconstructed value.
pub struct Recurrence;

impl<F: Field> PartitionMethod<F> for Recurrence {
    fn name(&self) -> &'static str {
        "recurrence"
    }

    fn provenance(&self) -> Provenance {
        Provenance::RecurrenceBuilt
    }

    fn compute(&self, query: &Query<F>, _opts: &EnumOptions) -> Result<F> {
        if query.model != Model::NineteenVertex {
            return Err(query.unsupported("recurrence", "nineteen-vertex only"));
        }
        let (zeta, z, q) = (query.zeta(), query.z(), query.q());
        let rec = nineteen::zn_via_recurrence(&zeta, &z, &q)?;
        let lambda = (q.square() - F::one()).pow(query.n() as u32);
        query.from_cleared(lambda * &product(&zeta) * &rec)
    }
}

/// The `Delta` determinant with the archived `mu_N`; nineteen-vertex at
/// `p` equal to the standard primitive twelfth root of unity.
pub struct CubicDeterminant;

impl PartitionMethod<Cyclo12> for CubicDeterminant {
    fn name(&self) -> &'static str {
        "determinant"
    }

    fn provenance(&self) -> Provenance {
        Provenance::Determinant
    }

    fn compute(&self, query: &Query<Cyclo12>, opts: &EnumOptions) -> Result<Cyclo12> {
        if query.model != Model::NineteenVertex {
            return Err(query.unsupported("determinant", "nineteen-vertex only"));
        }
        if query.p != Cyclo12::p() {
            return Err(query.unsupported("determinant", "needs p = the standard generator"));
        }
        let mu = determinant::mu_constant(query.n(), opts)?;
        let cleared = determinant::determinant_route(&query.zeta(), &query.z(), &mu)?;
        query.from_cleared(cleared)
    }
}

pub struct MethodRegistry<F: Field> {
    methods: BTreeMap<&'static str, Box<dyn PartitionMethod<F>>>,
}

impl<F: Field> Default for MethodRegistry<F> {
    fn default() -> Self {
        MethodRegistry {
            methods: BTreeMap::new(),
        }
    }
}

impl<F: Field> MethodRegistry<F> {
    pub fn register(&mut self, method: Box<dyn PartitionMethod<F>>) {
        self.methods.insert(method.name(), method);
    }

    pub fn get(&self, name: &str) -> Result<&dyn PartitionMethod<F>> {
        self.methods
            .get(name)
            .map(|m| m.as_ref())
            .ok_or_else(|| Error::UnknownMethod(name.to_string()))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.methods.keys().copied().collect()
    }

    fn with_generic() -> Self {
        let mut r = MethodRegistry::default();
        r.register(Box::new(Enumerate));
        r.register(Box::new(Izergin));
        r.register(Box::new(Recurrence));
        r
    }
}

impl MethodRegistry<Rational> {
    pub fn standard() -> Self {
        Self::with_generic()
    }
}

impl MethodRegistry<Cyclo12> {
    pub fn standard() -> Self {
        let mut r = Self::with_generic();
        r.register(Box::new(CubicDeterminant));
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn query<F: Field>(
        model: Model,
        u: &[F],
        v: &[F],
        p: F,
        normalization: Normalization,
    ) -> Query<F> {
        Query {
            model,
            u: u.to_vec(),
            v: v.to_vec(),
            p,
            normalization,
        }
    }

    #[test]
    fn unknown_name() {
        let reg = MethodRegistry::<Rational>::standard();
        assert!(matches!(reg.get("magic"), Err(Error::UnknownMethod(_))));
        assert_eq!(reg.names(), vec!["enumerate", "izergin", "recurrence"]);
        assert!(MethodRegistry::<Cyclo12>::standard()
            .get("determinant")
            .is_ok());
    }

    #[test]
    fn six_vertex_routes_agree() {
        let reg = MethodRegistry::<Rational>::standard();
        let opts = EnumOptions::default();
        for norm in [Normalization::Raw, Normalization::Cleared] {
            let q = query(
                Model::SixVertex,
                &[r(2, 3), r(-5, 4), r(3, 1)],
                &[r(7, 5), r(1, 2), r(-9, 7)],
                r(3, 2),
                norm,
            );
            let a = reg.get("enumerate").unwrap().compute(&q, &opts).unwrap();
            let b = reg.get("izergin").unwrap().compute(&q, &opts).unwrap();
            assert_eq!(a, b, "{norm:?}");
        }
    }

    #[test]
    fn nineteen_vertex_routes_agree() {
        let reg = MethodRegistry::<Rational>::standard();
        let opts = EnumOptions::default();
        for norm in [Normalization::Raw, Normalization::Cleared] {
            let q = query(
                Model::NineteenVertex,
                &[r(2, 3), r(-5, 4), r(3, 1)],
                &[r(7, 5), r(1, 2), r(-9, 7)],
                r(3, 2),
                norm,
            );
            let a = reg.get("enumerate").unwrap().compute(&q, &opts).unwrap();
            let b = reg.get("recurrence").unwrap().compute(&q, &opts).unwrap();
            assert_eq!(a, b, "{norm:?}");
        }
    }

    #[test]
    fn cubic_root_routes_agree() {
        let reg = MethodRegistry::<Cyclo12>::standard();
        let opts = EnumOptions::default();
        let c = |n, d| Cyclo12::from(r(n, d));
        let q = query(
            Model::NineteenVertex,
            &[c(2, 3), c(-5, 4), c(3, 1)],
            &[c(7, 5), c(1, 2), c(-9, 7)],
            Cyclo12::p(),
            Normalization::Raw,
        );
        let a = reg.get("enumerate").unwrap().compute(&q, &opts).unwrap();
        let b = reg.get("determinant").unwrap().compute(&q, &opts).unwrap();
        assert_eq!(a, b);
        assert!(matches!(
            reg.get("recurrence").unwrap().compute(&q, &opts),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn model_mismatch_is_unsupported() {
        let reg = MethodRegistry::<Rational>::standard();
        let q = query(
            Model::NineteenVertex,
            &[r(2, 3)],
            &[r(7, 5)],
            r(3, 2),
            Normalization::Raw,
        );
        assert!(matches!(
            reg.get("izergin")
                .unwrap()
                .compute(&q, &EnumOptions::default()),
            Err(Error::Unsupported(_))
        ));
    }
}
