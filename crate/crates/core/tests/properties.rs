use proptest::prelude::*;

use dwpf_core::lattice::{self, EnumOptions, LatticeSpec, Normalization};
use dwpf_core::recurrence::six;
use dwpf_core::scalar::matrix::{det_bareiss, det_cofactor, det_gauss, Matrix};
use dwpf_core::scalar::{Bindings, Cyclo12, Field, MPoly, Monomial, Rational, Ring, Var};
use dwpf_core::symmetric::{delta_values, elementary_symmetric};
use dwpf_core::vertex::{check_yang_baxter, Model};

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn cyclo() -> impl Strategy<Value = Cyclo12> {
    prop::array::uniform4(rational()).prop_map(Cyclo12::new)
}

const VARS: [Var; 4] = [Var::Zeta(1), Var::Zeta(2), Var::Z(1), Var::X];

fn poly() -> impl Strategy<Value = MPoly<Rational>> {
    prop::collection::vec((rational(), prop::array::uniform4(0u32..3)), 0..6).prop_map(|terms| {
        MPoly::from_terms(
            terms
                .into_iter()
                .map(|(c, e)| (Monomial::from_pairs(VARS.iter().copied().zip(e)), c)),
        )
    })
}

fn bindings() -> impl Strategy<Value = Bindings<Rational>> {
    prop::array::uniform4(rational()).prop_map(|vals| VARS.iter().copied().zip(vals).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn cyclo_field_axioms(a in cyclo(), b in cyclo(), c in cyclo()) {
        prop_assert_eq!((a.clone() * &b) * &c, a.clone() * &(b.clone() * &c));
        prop_assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + &(a.clone() * &c));
        prop_assert_eq!(a.clone() * &b, b.clone() * &a);
        if !a.is_zero() {
            prop_assert!((a.clone() * &a.inv().unwrap()).is_one());
        } else {
            prop_assert!(a.inv().is_err());
        }
    }

    #[test]
    fn poly_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!((a.clone() * &b) * &c, a.clone() * &(b.clone() * &c));
        prop_assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + &(a.clone() * &c));
        prop_assert_eq!(a.clone() + &b, b.clone() + &a);
        prop_assert!((a.clone() - &a).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), at in bindings()) {
        let (ea, eb) = (a.eval(&at).unwrap(), b.eval(&at).unwrap());
        prop_assert_eq!((a.clone() + &b).eval(&at).unwrap(), ea.clone() + &eb);
        prop_assert_eq!((a * &b).eval(&at).unwrap(), ea * &eb);
    }

    #[test]
    fn determinants_agree(n in 1usize..=4, entries in prop::collection::vec(-9i64..=9, 16)) {
        let m = Matrix::from_fn(n, n, |i, j| Rational::from(entries[i * 4 + j]));
        let oracle = det_cofactor(&m).unwrap();
        prop_assert_eq!(det_bareiss(&m).unwrap(), oracle.clone());
        prop_assert_eq!(det_gauss(&m).unwrap(), oracle);
    }

    #[test]
    fn elementary_generating_function(xs in prop::collection::vec(rational(), 0..5), t in rational()) {
        // prod (1 + t x) = sum_i t^i E_i
        let lhs = xs.iter().fold(Rational::one(), |acc, x| acc * &(Rational::one() + &(t.clone() * x)));
        let rhs = (0..=xs.len()).fold(Rational::zero(), |acc, i| acc + &(t.pow(i as u32) * &elementary_symmetric(&xs, i as i64)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn delta_values_are_homogeneous(
        zeta in prop::collection::vec(rational(), 3),
        z in prop::collection::vec(rational(), 3),
        s in nonzero_rational(),
    ) {
        let scale = |xs: &[Rational]| xs.iter().map(|x| x.clone() * &s).collect::<Vec<_>>();
        let base = delta_values(&zeta, &z);
        let scaled = delta_values(&scale(&zeta), &scale(&z));
        for (i, (a, b)) in base.iter().zip(&scaled).enumerate() {
            prop_assert_eq!(b.clone(), a.clone() * &s.pow(i as u32));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn yang_baxter_at_random_points(x in rational(), y in rational(), z in rational(), p in nonzero_rational()) {
        for model in [Model::SixVertex, Model::NineteenVertex] {
            prop_assert!(check_yang_baxter(model, &x, &y, &z, &p).unwrap().is_zero());
        }
    }

    #[test]
    fn izergin_matches_enumeration(
        zeta in prop::collection::vec(nonzero_rational(), 3),
        z in prop::collection::vec(nonzero_rational(), 3),
        p in nonzero_rational(),
    ) {
        let q = p.square();
        prop_assume!(!(q.square() - Rational::one()).is_zero());
        let opts = EnumOptions::default();
        match six::izergin_determinant(&zeta, &z, &q) {
            Ok(det) => prop_assert_eq!(det, lattice::enumerate_six_vertex_raw(&zeta, &z, &q, &opts).unwrap()),
            // singular Cauchy entries are reported, never silently mishandled
            Err(e) => prop_assert!(matches!(e, dwpf_core::Error::Coincident(_))),
        }
    }

    #[test]
    fn nineteen_vertex_row_swap(
        u in prop::collection::vec(rational(), 3),
        v in prop::collection::vec(nonzero_rational(), 3),
        p in nonzero_rational(),
        k in 0usize..2,
    ) {
        let opts = EnumOptions::default();
        let value = |u: Vec<Rational>| {
            let spec = LatticeSpec::new(Model::NineteenVertex, u, v.clone(), p.clone(), Normalization::Cleared).unwrap();
            lattice::enumerate_dwpf(&spec, &opts).unwrap()
        };
        let mut swapped = u.clone();
        swapped.swap(k, k + 1);
        prop_assert_eq!(value(u), value(swapped));
    }
}
