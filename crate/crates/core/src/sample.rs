//! Seeded random test points with degenerate draws rejected.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalar::{Field, Rational, Ring};

/// Largest `|k|` for which `± q^k` is a forbidden rapidity ratio.
const RATIO_POWERS: i64 = 6;

pub struct Sampler {
    rng: ChaCha8Rng,
    bound: i64,
}

/// Row roots `u`, column roots `v`, with `zeta = u^2`, `z = v^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct RootPoint<F> {
    pub u: Vec<F>,
    pub v: Vec<F>,
}

impl<F: Ring> RootPoint<F> {
    pub fn zeta(&self) -> Vec<F> {
        self.u.iter().map(Ring::square).collect()
    }

    pub fn z(&self) -> Vec<F> {
        self.v.iter().map(Ring::square).collect()
    }
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            bound: 30,
        }
    }

    /// `±a/b` with `1 <= a, b <= bound`.
    pub fn rational(&mut self) -> Rational {
        let a = self.rng.gen_range(1..=self.bound);
        let b = self.rng.gen_range(1..=self.bound);
        let s = if self.rng.gen_bool(0.5) { 1 } else { -1 };
        Rational::new(s * a, b).expect("nonzero denominator")
    }

    /// A rational `p` with `q = p^2` far from the special values
    /// (`q^2 = 1`, `q^3 = -1`).
    pub fn generic_p(&mut self) -> Rational {
        loop {
            let p = self.rational();
            let q = p.square();
            if !(q.square() - Rational::one()).is_zero() && !(q.pow(3) + &Rational::one()).is_zero()
            {
                return p;
            }
        }
    }

    /// `n` row and `n` column roots with nonzero, pairwise generic squares.
    pub fn roots<F: Field>(&mut self, n: usize, q: &F) -> RootPoint<F> {
        loop {
            let u: Vec<F> = (0..n).map(|_| F::from_rational(&self.rational())).collect();
            let v: Vec<F> = (0..n).map(|_| F::from_rational(&self.rational())).collect();
            let point = RootPoint { u, v };
            let mut all = point.zeta();
            all.extend(point.z());
            if generic(&all, q) {
                return point;
            }
        }
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }
}

/// No value is zero and no ratio of two values is `± q^k` for small `k`.
pub fn generic<F: Field>(values: &[F], q: &F) -> bool {
    if values.iter().any(Ring::is_zero) {
        return false;
    }
    let mut bad = Vec::new();
    for k in -RATIO_POWERS..=RATIO_POWERS {
        let Ok(qk) = q.powi(k) else { return false };
        bad.push(-qk.clone());
        bad.push(qk);
    }
    for (a, x) in values.iter().enumerate() {
        for y in &values[a + 1..] {
            let Ok(ratio) = x.div(y) else { return false };
            if bad.contains(&ratio) {
                return false;
            }
        }
    }
    true
}
