//! The identity suite: every exact check the crate knows, as
//! `VerificationReport`s, plus the per-model selection run by `verify`.

use std::str::FromStr;

use crate::determinant;
use crate::error::{Error, Result};
use crate::lattice::{self, EnumOptions, LatticeSpec, Normalization};
use crate::recurrence::{
    nineteen, six, with, without, EnumeratedNineteen, LagrangeExtension, PartitionEvaluator,
    Provenance,
};
use crate::report::{Mode, VerificationReport, Witness};
use crate::sample::Sampler;
use crate::scalar::{product, Cyclo12, Field, MPoly, Monomial, Rational, Ring, Var};
use crate::symmetric;
use crate::vertex::{check_yang_baxter, Model};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QDomain {
    /// `q = p^2` with `p` a seeded random rational.
    Rational,
    /// `p` a primitive twelfth root of unity, so `q^3 = -1`.
    Cyclo12,
}

impl FromStr for QDomain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rational" => Ok(QDomain::Rational),
            "cyclo12" => Ok(QDomain::Cyclo12),
            _ => Err(Error::Parse(format!("unknown q domain `{s}`"))),
        }
    }
}

fn yb_trials<F: Field>(
    model: Model,
    trials: usize,
    sampler: &mut Sampler,
    p: &F,
    report: &mut VerificationReport,
) -> Result<()> {
    for _ in 0..trials {
        let (x, y, z) = loop {
            let t = (sampler.rational(), sampler.rational(), sampler.rational());
            if t.0 != t.1 && t.1 != t.2 && t.0 != t.2 {
                break t;
            }
        };
        let embed = |r: &Rational| F::from_rational(r);
        let res = check_yang_baxter(model, &embed(&x), &embed(&y), &embed(&z), p)?;
        report.record(res.is_zero(), || {
            Witness::new(
                &[x.clone(), y.clone(), z.clone()],
                &[],
                format!("{} nonzero residual entries", res.nonzero_count()),
            )
        });
    }
    Ok(())
}

/// Braid relation residual at `trials` seeded rapidity triples.
pub fn yang_baxter_check(
    model: Model,
    domain: QDomain,
    trials: usize,
    seed: u64,
) -> Result<VerificationReport> {
    let mut sampler = Sampler::new(seed);
    let mut report = VerificationReport::new(format!("yang-baxter-{model}"), 3, Mode::Point);
    match domain {
        QDomain::Rational => {
            let p = sampler.generic_p();
            yb_trials(model, trials, &mut sampler, &p, &mut report)?;
            report.note(format!("p = {p}"));
        }
        QDomain::Cyclo12 => yb_trials(model, trials, &mut sampler, &Cyclo12::p(), &mut report)?,
    }
    Ok(report)
}

/// Izergin's determinant against the raw six-vertex state sum.
pub fn izergin_check(
    n: usize,
    trials: usize,
    seed: u64,
    opts: &EnumOptions,
) -> Result<VerificationReport> {
    let mut sampler = Sampler::new(seed);
    let q = sampler.generic_p().square();
    let mut report = VerificationReport::new("izergin-equals-enumeration", n, Mode::Point);
    for _ in 0..trials {
        let pt = sampler.roots::<Rational>(n, &q);
        let (zeta, z) = (pt.zeta(), pt.z());
        let det = six::izergin_determinant(&zeta, &z, &q)?;
        let sum = lattice::enumerate_six_vertex_raw(&zeta, &z, &q, opts)?;
        report.record(det == sum, || {
            Witness::new(&zeta, &z, format!("{det} != {sum}"))
        });
    }
    Ok(report)
}

fn six_vertex_polynomial(
    zeta: &[Rational],
    z: &[Rational],
    q: &Rational,
    opts: &EnumOptions,
) -> Result<Rational> {
    Ok(lattice::enumerate_six_vertex_raw(zeta, z, q, opts)? * &six::polynomial_factor(zeta, z, q))
}

/// Scaling every rapidity by `s` multiplies the polynomial form by
/// `s^{2N(N-1)}`: degree `N(N-1)` in the squared rapidities.
pub fn homogeneity_check(
    n: usize,
    trials: usize,
    seed: u64,
    opts: &EnumOptions,
) -> Result<VerificationReport> {
    let mut sampler = Sampler::new(seed);
    let q = sampler.generic_p().square();
    let mut report = VerificationReport::new("six-vertex-homogeneity", n, Mode::Point);
    let degree = 2 * (n * n.saturating_sub(1)) as u32;
    for _ in 0..trials {
        let pt = sampler.roots::<Rational>(n, &q);
        let (zeta, z) = (pt.zeta(), pt.z());
        let s = sampler.rational();
        let scale = |xs: &[Rational]| xs.iter().map(|x| x.clone() * &s).collect::<Vec<_>>();
        let base = six_vertex_polynomial(&zeta, &z, &q, opts)?;
        let scaled = six_vertex_polynomial(&scale(&zeta), &scale(&z), &q, opts)?;
        report.record(scaled == base * &s.pow(degree), || {
            Witness::new(&zeta, &z, format!("scaling by {s}"))
        });
    }
    Ok(report)
}

/// Both six-vertex recurrences on the polynomial form, at every `(i, j)`.
pub fn six_vertex_recurrence_check(
    n: usize,
    seed: u64,
    opts: &EnumOptions,
) -> Result<VerificationReport> {
    if n < 2 {
        return Err(Error::Domain("recurrences need N >= 2".into()));
    }
    let mut sampler = Sampler::new(seed);
    let q = sampler.generic_p().square();
    let pt = sampler.roots::<Rational>(n, &q);
    let (zeta, z) = (pt.zeta(), pt.z());
    let mut report = VerificationReport::new("six-vertex-recurrences", n, Mode::Point);
    for i in 0..n {
        for j in 0..n {
            let rest = six_vertex_polynomial(&without(&zeta, j), &without(&z, i), &q, opts)?;
            let at_f = with(&zeta, j, z[i].clone());
            let lhs = six_vertex_polynomial(&at_f, &z, &q, opts)?;
            let rhs = six::factor_f6v(i, j, &at_f, &z, &q)? * &rest;
            report.record(lhs == rhs, || {
                Witness::new(&at_f, &z, format!("f at ({}, {})", i + 1, j + 1))
            });
            let at_g = with(&zeta, j, z[i].div(&q)?);
            let lhs = six_vertex_polynomial(&at_g, &z, &q, opts)?;
            let rhs = six::factor_g6v(i, j, &at_g, &z, &q)? * &rest;
            report.record(lhs == rhs, || {
                Witness::new(&at_g, &z, format!("g at ({}, {})", i + 1, j + 1))
            });
        }
    }
    Ok(report)
}

/// Cleared nineteen-vertex sum divided by `prod zeta_k` and a constant.
struct Normalized {
    inner: EnumeratedNineteen<Rational>,
    scale: Rational,
}

impl PartitionEvaluator<Rational> for Normalized {
    fn size(&self) -> usize {
        self.inner.n
    }

    fn provenance(&self) -> Provenance {
        Provenance::Enumerated
    }

    fn eval(&self, zeta: &[Rational], z: &[Rational]) -> Result<Rational> {
        let v = self.inner.eval(zeta, z)?;
        v.div(&(product(zeta) * &self.scale))
    }
}

/// Keeps the first value seen and compares later ones against it.
struct Constancy(Option<Rational>);

impl Constancy {
    fn check(&mut self, value: Rational) -> (bool, String) {
        match &self.0 {
            None => {
                let s = value.to_string();
                self.0 = Some(value);
                (true, s)
            }
            Some(first) => (&value == first, format!("{value} vs {first}")),
        }
    }
}

/// Generic `q`: the enumerated sum obeys both specializations with one
/// rapidity-free constant per step, `lambda_N` is rapidity-free, and the
/// Lagrange step from the enumerated `Z_{N-1}` reproduces the enumerated `Z_N`.
///
/// All values are the cleared sum over `prod zeta_k`.
pub fn nineteen_vertex_recurrence_check(
    n: usize,
    trials: usize,
    seed: u64,
    opts: &EnumOptions,
) -> Result<VerificationReport> {
    if n < 2 {
        return Err(Error::Domain("recurrences need N >= 2".into()));
    }
    let mut sampler = Sampler::new(seed);
    let p = sampler.generic_p();
    let q = p.square();
    let shift = -q.powi(-3)?;
    let enumerated = |m: usize, scale: Rational| Normalized {
        inner: EnumeratedNineteen::new(m, p.clone(), *opts),
        scale,
    };
    let full = enumerated(n, Rational::one());
    let smaller = enumerated(n - 1, Rational::one());
    let mut report = VerificationReport::new("nineteen-vertex-recurrences", n, Mode::Point);
    let mut step = Constancy(None);
    let mut lambda = Constancy(None);
    let mut lambda_prev = Constancy(None);
    for t in 0..trials {
        let pt = sampler.roots::<Rational>(n, &q);
        let (zeta, z) = (pt.zeta(), pt.z());
        let pairs: Vec<(usize, usize)> = if t == 0 {
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
        } else {
            vec![(sampler.index(n), sampler.index(n))]
        };
        for (i, j) in pairs {
            let rest = smaller.eval(&without(&zeta, j), &without(&z, i))?;
            for (branch, at) in [("F", z[i].clone()), ("G", shift.clone() * &z[i])] {
                let point = with(&zeta, j, at);
                let factor = if branch == "F" {
                    nineteen::factor_f19(i, j, &point, &z, &q)?
                } else {
                    nineteen::factor_g19(i, j, &point, &z, &q)?
                };
                let (ok, detail) = step.check(full.eval(&point, &z)?.div(&(factor * &rest))?);
                report.record(ok, || {
                    Witness::new(
                        &point,
                        &z,
                        format!("{branch} branch at ({}, {}): {detail}", i + 1, j + 1),
                    )
                });
            }
        }
        let rec = nineteen::zn_via_recurrence(&zeta, &z, &q)?;
        let (ok, detail) = lambda.check(full.eval(&zeta, &z)?.div(&rec)?);
        report.record(ok, || {
            Witness::new(&zeta, &z, format!("lambda_N: {detail}"))
        });
        let (head, tail_z) = (&zeta[..n - 1], &z[..n - 1]);
        let rec_prev = nineteen::zn_via_recurrence(head, tail_z, &q)?;
        let (ok, detail) = lambda_prev.check(smaller.eval(head, tail_z)?.div(&rec_prev)?);
        report.record(ok, || {
            Witness::new(head, tail_z, format!("lambda_{{N-1}}: {detail}"))
        });
    }
    let lambda_n = lambda.0.clone().expect("at least one trial");
    let lambda_prev = lambda_prev.0.clone().expect("at least one trial");
    // the Lagrange step seeded with the enumerated, lambda-normalized Z_{N-1}
    let ext = LagrangeExtension::new(Box::new(enumerated(n - 1, lambda_prev)), q.clone());
    for _ in 0..trials {
        let pt = sampler.roots::<Rational>(n, &q);
        let (zeta, z) = (pt.zeta(), pt.z());
        let lhs = full.eval(&zeta, &z)?;
        let rhs = lambda_n.clone() * &ext.eval(&zeta, &z)?;
        report.record(lhs == rhs, || {
            Witness::new(&zeta, &z, "Lagrange step against enumeration")
        });
    }
    let expected = (q.square() - Rational::one()).pow(n as u32);
    if lambda_n != expected {
        report.note(format!(
            "lambda_N = {lambda_n} differs from (q^2-1)^N = {expected}"
        ));
    }
    report.constants.lambda = Some(lambda_n.to_string());
    report.note(format!(
        "p = {p}; per-step constant {}",
        step.0.map(|c| c.to_string()).unwrap_or_default()
    ));
    Ok(report)
}

/// Rapidity symmetry of the raw partition function, and for the
/// nineteen-vertex model invariance under `u_i -> -u_i`.
pub fn partition_symmetry_check(
    model: Model,
    n: usize,
    seed: u64,
    opts: &EnumOptions,
) -> Result<VerificationReport> {
    let mut sampler = Sampler::new(seed);
    let p = sampler.generic_p();
    let q = p.square();
    let pt = sampler.roots::<Rational>(n, &q);
    let value = |u: &[Rational], v: &[Rational]| -> Result<Rational> {
        let spec = LatticeSpec::new(model, u.to_vec(), v.to_vec(), p.clone(), Normalization::Raw)?;
        lattice::enumerate_dwpf(&spec, opts)
    };
    let base = value(&pt.u, &pt.v)?;
    let mut report = VerificationReport::new(format!("partition-symmetry-{model}"), n, Mode::Point);
    for k in 0..n.saturating_sub(1) {
        let mut u = pt.u.clone();
        u.swap(k, k + 1);
        report.record(value(&u, &pt.v)? == base, || {
            Witness::new(&u, &pt.v, format!("swap zeta_{} zeta_{}", k + 1, k + 2))
        });
        let mut v = pt.v.clone();
        v.swap(k, k + 1);
        report.record(value(&pt.u, &v)? == base, || {
            Witness::new(&pt.u, &v, format!("swap z_{} z_{}", k + 1, k + 2))
        });
    }
    if model == Model::NineteenVertex {
        for k in 0..n {
            let mut u = pt.u.clone();
            u[k] = -u[k].clone();
            report.record(value(&u, &pt.v)? == base, || {
                Witness::new(&u, &pt.v, format!("u_{} -> -u_{}", k + 1, k + 1))
            });
        }
    }
    Ok(report)
}

/// Unit-weight six-vertex sums against the monotone-triangle count.
pub fn configuration_count_check(max_n: usize, opts: &EnumOptions) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("alternating-sign-matrix-count", max_n, Mode::Point);
    for n in 1..=max_n {
        let count = lattice::unit_weight_count(Model::SixVertex, n, opts)?;
        let oracle = lattice::asm_count_oracle(n);
        report.record(count == oracle.into(), || {
            Witness::new::<String>(&[], &[], format!("N = {n}: {count} != {oracle}"))
        });
    }
    Ok(report)
}

/// `Delta_{1..4,2}` against the explicit list.
pub fn delta_list_check() -> Result<VerificationReport> {
    type P = MPoly<Rational>;
    let mono = |pairs: &[(Var, u32)]| Monomial::from_pairs(pairs.iter().copied());
    let poly = |terms: &[(i64, &[(Var, u32)])]| {
        P::from_terms(terms.iter().map(|&(c, m)| (mono(m), Rational::from(c))))
    };
    let (a1, a2, b1, b2) = (
        (Var::Zeta(1), 1),
        (Var::Zeta(2), 1),
        (Var::Z(1), 1),
        (Var::Z(2), 1),
    );
    let expected = [
        poly(&[(2, &[a1]), (2, &[a2]), (-1, &[b1]), (-1, &[b2])]),
        poly(&[
            (1, &[a1, a2]),
            (1, &[a1, b2]),
            (1, &[a2, b2]),
            (1, &[a1, b1]),
            (1, &[a2, b1]),
            (-2, &[b1, b2]),
        ]),
        poly(&[
            (-1, &[a1, b1, b2]),
            (2, &[a1, a2, b1]),
            (2, &[a1, a2, b2]),
            (-1, &[a2, b1, b2]),
        ]),
        poly(&[(1, &[a1, a2, b1, b2])]),
    ];
    let table = symmetric::delta_from_generating(2)?;
    let mut report = VerificationReport::new("delta-list-two", 2, Mode::Symbolic);
    for (k, e) in expected.iter().enumerate() {
        let got = table.get(k as i64 + 1);
        report.record(&got == e, || {
            Witness::new::<String>(&[], &[], format!("Delta_{{{},2}} = {got}", k + 1))
        });
    }
    Ok(report)
}

/// Generating-function and elementary-symmetric constructions of the table.
pub fn delta_cross_check(n: usize) -> Result<VerificationReport> {
    let a = symmetric::delta_from_generating(n)?;
    let b = symmetric::delta_from_elementary(n);
    let mut report = VerificationReport::new("delta-cross-construction", n, Mode::Symbolic);
    for i in 0..=2 * n as i64 {
        report.record(a.get(i) == b.get(i), || {
            Witness::new::<String>(&[], &[], format!("Delta_{{{i},{n}}}"))
        });
    }
    for (i, d) in a.entries().iter().enumerate() {
        let ok = d.is_homogeneous(i as u32)
            && d.has_integer_coefficients()
            && d.is_symmetric(&Var::zetas(n))
            && d.is_symmetric(&Var::zs(n));
        report.record(ok, || {
            Witness::new::<String>(&[], &[], format!("Delta_{{{i},{n}}} invariants"))
        });
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub model: Model,
    pub n: usize,
    pub domain: QDomain,
    pub seed: u64,
    pub trials: usize,
    pub opts: EnumOptions,
}

type Job<'a> = Box<dyn FnOnce() -> Result<Vec<VerificationReport>> + Send + 'a>;

fn one<'a>(f: impl FnOnce() -> Result<VerificationReport> + Send + 'a) -> Job<'a> {
    Box::new(move || f().map(|r| vec![r]))
}

/// The identities relevant to one model and `q` domain at size `n`. Jobs
/// run on `opts.threads` threads; the output order is fixed.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let SuiteConfig {
        model,
        n,
        domain,
        seed,
        trials,
        opts,
    } = *cfg;
    if n == 0 {
        return Err(Error::Domain("suite needs N >= 1".into()));
    }
    let serial = EnumOptions { threads: 1, ..opts };
    let o = &serial;
    let mut jobs: Vec<Job> = vec![one(move || {
        yang_baxter_check(model, domain, trials.max(1), seed)
    })];
    match (model, domain) {
        (Model::SixVertex, _) => {
            jobs.push(one(move || izergin_check(n, trials, seed, o)));
            jobs.push(one(move || homogeneity_check(n, trials, seed, o)));
            if n >= 2 {
                jobs.push(one(move || six_vertex_recurrence_check(n, seed, o)));
            }
            jobs.push(one(move || configuration_count_check(n, o)));
        }
        (Model::NineteenVertex, QDomain::Rational) if n >= 2 => {
            jobs.push(one(move || {
                nineteen_vertex_recurrence_check(n, trials, seed, o)
            }));
        }
        (Model::NineteenVertex, QDomain::Rational) => {}
        (Model::NineteenVertex, QDomain::Cyclo12) => {
            jobs.push(one(delta_list_check));
            jobs.push(one(move || delta_cross_check(n)));
            jobs.push(one(move || Ok(symmetric::q_one_check(n))));
            if n >= 2 {
                jobs.push(one(move || symmetric::delta_specialize_check(n)));
                jobs.push(one(move || determinant::symbolic_reconcile(2, o)));
                jobs.push(one(move || determinant::proof_transform_check(n, None)));
            }
            jobs.push(one(move || {
                determinant::reconcile_with_enumeration(n, trials, seed, o)
            }));
            jobs.push(one(move || determinant::symmetry_check(n, seed)));
        }
    }
    jobs.push(one(move || partition_symmetry_check(model, n, seed, o)));
    run_jobs(jobs, opts.threads.max(1))
}

fn run_jobs(jobs: Vec<Job>, threads: usize) -> Result<Vec<VerificationReport>> {
    let mut slots: Vec<Option<Result<Vec<VerificationReport>>>> =
        (0..jobs.len()).map(|_| None).collect();
    let queue = std::sync::Mutex::new(jobs.into_iter().enumerate().collect::<Vec<_>>());
    let results = std::sync::Mutex::new(&mut slots);
    std::thread::scope(|s| {
        for _ in 0..threads {
            s.spawn(|| loop {
                let next = queue.lock().expect("queue").pop();
                let Some((k, job)) = next else { break };
                let out = job();
                results.lock().expect("results")[k] = Some(out);
            });
        }
    });
    let mut all = Vec::new();
    for slot in slots {
        all.extend(slot.expect("every job ran")?);
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_list() {
        assert!(delta_list_check().unwrap().passed());
    }

    #[test]
    fn small_suites_pass() {
        for (model, domain) in [
            (Model::SixVertex, QDomain::Rational),
            (Model::NineteenVertex, QDomain::Rational),
            (Model::NineteenVertex, QDomain::Cyclo12),
        ] {
            let cfg = SuiteConfig {
                model,
                n: 2,
                domain,
                seed: 3,
                trials: 3,
                opts: EnumOptions {
                    threads: 2,
                    ..Default::default()
                },
            };
            for rep in run_suite(&cfg).unwrap() {
                assert!(rep.passed(), "{rep:?}");
            }
        }
    }

    #[test]
    fn thread_count_does_not_change_output() {
        let mut cfg = SuiteConfig {
            model: Model::NineteenVertex,
            n: 2,
            domain: QDomain::Cyclo12,
            seed: 9,
            trials: 2,
            opts: EnumOptions::default(),
        };
        let a = run_suite(&cfg).unwrap();
        cfg.opts.threads = 3;
        assert_eq!(a, run_suite(&cfg).unwrap());
    }

    #[test]
    fn domain_parsing() {
        assert_eq!("cyclo12".parse::<QDomain>().unwrap(), QDomain::Cyclo12);
        assert!("complex".parse::<QDomain>().is_err());
    }
}
