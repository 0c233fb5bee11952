//! Exact state sums over the N x N lattice with domain-wall boundaries.
//!
//! Boundaries: `+` on the left and top, `-` on the right and bottom. Rows are
//! contracted top to bottom and, inside a row, vertex by vertex with one
//! carried horizontal edge, so the live state is `d^N * d` values.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{Field, Ring};
use crate::vertex::{nineteen, rmatrix, six, Label, Model, Transition};

pub const MAX_N_ENV: &str = "DWPF_MAX_N";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Normalization {
    /// Weights exactly as written.
    Raw,
    /// Denominator-cleared weights in the square-root variables.
    Cleared,
}

impl std::str::FromStr for Normalization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "raw" => Ok(Normalization::Raw),
            "cleared" => Ok(Normalization::Cleared),
            _ => Err(Error::Parse(format!("unknown normalization `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Capacity {
    pub max_n_6v: usize,
    pub max_n_19v: usize,
}

impl Default for Capacity {
    fn default() -> Self {
        Capacity {
            max_n_6v: 12,
            max_n_19v: 8,
        }
    }
}

impl Capacity {
    /// Defaults, with both caps replaced by `DWPF_MAX_N` when it is set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(MAX_N_ENV) {
            Ok(s) => {
                let n = s
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("{MAX_N_ENV}={s} is not an integer")))?;
                Ok(Capacity {
                    max_n_6v: n,
                    max_n_19v: n,
                })
            }
            Err(_) => Ok(Capacity::default()),
        }
    }

    pub fn max_n(&self, model: Model) -> usize {
        match model {
            Model::SixVertex => self.max_n_6v,
            Model::NineteenVertex => self.max_n_19v,
        }
    }

    pub fn check(&self, model: Model, n: usize) -> Result<()> {
        if n > self.max_n(model) {
            return Err(Error::Capacity(format!(
                "{model} lattice of size {n} exceeds the cap {} ({}^{n} edge states)",
                self.max_n(model),
                model.edge_states()
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumOptions {
    pub threads: usize,
    pub capacity: Capacity,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            threads: 1,
            capacity: Capacity::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LatticeSpec<F> {
    pub model: Model,
    pub n: usize,
    /// Row roots: `zeta_i = u_i^2`.
    pub u: Vec<F>,
    /// Column roots: `z_j = v_j^2`.
    pub v: Vec<F>,
    /// `q = p^2`.
    pub p: F,
    pub normalization: Normalization,
}

impl<F: Field> LatticeSpec<F> {
    pub fn new(
        model: Model,
        u: Vec<F>,
        v: Vec<F>,
        p: F,
        normalization: Normalization,
    ) -> Result<Self> {
        let n = u.len();
        if n == 0 || v.len() != n {
            return Err(Error::Domain(format!(
                "need N >= 1 row and column roots, got {} and {}",
                u.len(),
                v.len()
            )));
        }
        if v.iter().any(Ring::is_zero) {
            return Err(Error::Domain("column roots must be nonzero".into()));
        }
        Ok(LatticeSpec {
            model,
            n,
            u,
            v,
            p,
            normalization,
        })
    }

    /// Per-cell weights indexed `[i * n + j][transition]`.
    pub fn cell_weights(&self) -> Result<Vec<Vec<F>>> {
        let q = self.p.square();
        let transitions = self.model.transitions();
        let mut out = Vec::with_capacity(self.n * self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                let (u, v) = (&self.u[i], &self.v[j]);
                let row: Vec<F> = match (self.normalization, self.model) {
                    (Normalization::Cleared, model) => transitions
                        .iter()
                        .map(|t| rmatrix::cleared_weight(model, t.label, u, v, &self.p).unwrap())
                        .collect(),
                    (Normalization::Raw, Model::SixVertex) => {
                        let w = six::weights6v(&u.square(), &v.square(), &q)?;
                        transitions
                            .iter()
                            .map(|t| w.get(t.label).unwrap())
                            .collect()
                    }
                    (Normalization::Raw, Model::NineteenVertex) => {
                        let root = u.div(v)?;
                        let zeta = root.square();
                        transitions
                            .iter()
                            .map(|t| nineteen::weights19v(t.label, &zeta, &root, &q, &self.p))
                            .collect::<Result<_>>()?
                    }
                };
                out.push(row);
            }
        }
        Ok(out)
    }
}

/// Transitions grouped by `(right, bottom)`, the pair that a pulled target
/// state fixes.
fn by_outgoing(model: Model) -> Vec<Vec<(usize, &'static Transition)>> {
    let d = model.edge_states();
    let mut groups = vec![Vec::new(); d * d];
    for (k, t) in model.transitions().iter().enumerate() {
        groups[t.right * d + t.bottom].push((k, t));
    }
    groups
}

/// Contracts the lattice with the given per-cell weights.
///
/// A state is the index `digits * d + carried`, where digit `j` (base `d`,
/// least significant first) is the vertical edge below the last processed
/// vertex of column `j`. Each vertex update is computed target by target, so
/// chunks of targets are independent and `threads > 1` gives identical
/// results.
pub fn transfer<R: Ring>(
    model: Model,
    n: usize,
    cells: &[Vec<R>],
    opts: &EnumOptions,
) -> Result<R> {
    opts.capacity.check(model, n)?;
    if cells.len() != n * n {
        return Err(Error::Domain(format!(
            "expected {} cells, got {}",
            n * n,
            cells.len()
        )));
    }
    let d = model.edge_states();
    let (plus, minus) = (model.plus(), model.minus());
    let width = d.pow(n as u32);
    let size = width * d;
    let pow: Vec<usize> = (0..n).map(|j| d.pow(j as u32)).collect();
    let groups = by_outgoing(model);

    // All top edges `+`, carried edge `+`.
    let mut state = vec![R::zero(); size];
    state[plus] = R::one();
    for i in 0..n {
        for j in 0..n {
            let cell = &cells[i * n + j];
            let pull = |target: usize| -> R {
                let right = target % d;
                let digits = target / d;
                let bottom = (digits / pow[j]) % d;
                let base = digits - bottom * pow[j];
                let mut acc = R::zero();
                for &(k, t) in &groups[right * d + bottom] {
                    let src = (base + t.top * pow[j]) * d + t.left;
                    let s = &state[src];
                    let w = &cell[k];
                    if !s.is_zero() && !w.is_zero() {
                        acc = acc + &(s.clone() * w);
                    }
                }
                acc
            };
            state = run_chunks(size, opts.threads, &pull);
        }
        // Right boundary `-`; the next row starts with `+` on the left.
        let mut next = vec![R::zero(); size];
        for digits in 0..width {
            next[digits * d + plus] = std::mem::replace(&mut state[digits * d + minus], R::zero());
        }
        state = next;
    }
    let all_minus: usize = pow.iter().map(|p| p * minus).sum();
    Ok(state[all_minus * d + plus].clone())
}

fn run_chunks<R: Ring>(size: usize, threads: usize, f: &(dyn Fn(usize) -> R + Sync)) -> Vec<R> {
    if threads <= 1 || size < 256 {
        return (0..size).map(f).collect();
    }
    let chunk = size.div_ceil(threads);
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..size)
            .step_by(chunk)
            .map(|start| {
                let end = (start + chunk).min(size);
                s.spawn(move || (start..end).map(f).collect::<Vec<R>>())
            })
            .collect();
        // joined in spawn order
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("transfer worker panicked"))
            .collect()
    })
}

pub fn enumerate_dwpf<F: Field>(spec: &LatticeSpec<F>, opts: &EnumOptions) -> Result<F> {
    opts.capacity.check(spec.model, spec.n)?;
    transfer(spec.model, spec.n, &spec.cell_weights()?, opts)
}

/// Cleared-normalization state sum over any ring; with polynomial inputs this
/// produces the partition function symbolically.
pub fn enumerate_cleared<R: Ring>(
    model: Model,
    u: &[R],
    v: &[R],
    p: &R,
    opts: &EnumOptions,
) -> Result<R> {
    let n = u.len();
    if v.len() != n {
        return Err(Error::Domain("row and column counts differ".into()));
    }
    opts.capacity.check(model, n)?;
    let cells: Vec<Vec<R>> = (0..n * n)
        .map(|c| {
            model
                .transitions()
                .iter()
                .map(|t| rmatrix::cleared_weight(model, t.label, &u[c / n], &v[c % n], p).unwrap())
                .collect()
        })
        .collect();
    transfer(model, n, &cells, opts)
}

/// Six-vertex state sum with raw weights, taking the rapidities themselves:
/// the weights only need `zeta` and `z`, not their roots.
pub fn enumerate_six_vertex_raw<F: Field>(
    zeta: &[F],
    z: &[F],
    q: &F,
    opts: &EnumOptions,
) -> Result<F> {
    let n = zeta.len();
    if z.len() != n {
        return Err(Error::Domain("row and column counts differ".into()));
    }
    opts.capacity.check(Model::SixVertex, n)?;
    let mut cells = Vec::with_capacity(n * n);
    for a in zeta {
        for b in z {
            let w = six::weights6v(a, b, q)?;
            cells.push(
                Model::SixVertex
                    .transitions()
                    .iter()
                    .map(|t| w.get(t.label).unwrap())
                    .collect(),
            );
        }
    }
    transfer(Model::SixVertex, n, &cells, opts)
}

/// Number of domain-wall configurations (all weights 1).
pub fn unit_weight_count(model: Model, n: usize, opts: &EnumOptions) -> Result<BigInt> {
    use crate::scalar::Rational;
    let ones = vec![vec![Rational::one(); model.transitions().len()]; n * n];
    let total = transfer(model, n, &ones, opts)?;
    Ok(total.numer().clone())
}

/// The factor by which the cleared sum exceeds the raw one:
/// `prod_j v_j^{4N}` for the nineteen-vertex model and
/// `(q^2 - 1)^{N^2} prod_i zeta_i^N prod_j z_j^N` for the six-vertex model.
pub fn clearing_factor<R: Ring>(model: Model, u: &[R], v: &[R], p: &R) -> R {
    let n = u.len() as u32;
    match model {
        Model::NineteenVertex => v.iter().fold(R::one(), |acc, v| acc * &v.pow(4 * n)),
        Model::SixVertex => {
            let q2m1 = p.pow(4) - R::one();
            let rows = u.iter().fold(R::one(), |acc, u| acc * &u.pow(2 * n));
            let cols = v.iter().fold(R::one(), |acc, v| acc * &v.pow(2 * n));
            q2m1.pow(n * n) * &rows * &cols
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Configuration {
    /// Vertex label per cell, row-major, top row first.
    pub labels: Vec<Vec<Label>>,
    pub weight: String,
}

pub const MAX_LISTED_N: usize = 4;

/// Explicit list of configurations (N <= 4), at most `limit` of them, with
/// their weights. The weights sum to the transfer result when nothing is cut.
pub fn enumerate_configurations<F: Field>(
    spec: &LatticeSpec<F>,
    limit: usize,
) -> Result<Vec<(Vec<Vec<Label>>, F)>> {
    if spec.n > MAX_LISTED_N {
        return Err(Error::Capacity(format!(
            "configuration listing needs N <= {MAX_LISTED_N}, got {}",
            spec.n
        )));
    }
    let cells = spec.cell_weights()?;
    let model = spec.model;
    let n = spec.n;
    let mut out = Vec::new();
    let mut labels = vec![Vec::with_capacity(n); n];
    let mut below = vec![model.plus(); n];
    dfs(
        model,
        n,
        &cells,
        0,
        model.plus(),
        &mut below,
        F::one(),
        &mut labels,
        &mut out,
        limit,
    );
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn dfs<F: Field>(
    model: Model,
    n: usize,
    cells: &[Vec<F>],
    cell: usize,
    carried: usize,
    edges: &mut Vec<usize>,
    acc: F,
    labels: &mut Vec<Vec<Label>>,
    out: &mut Vec<(Vec<Vec<Label>>, F)>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    if cell == n * n {
        if edges.iter().all(|&e| e == model.minus()) {
            out.push((labels.clone(), acc));
        }
        return;
    }
    let (i, j) = (cell / n, cell % n);
    for (k, t) in model.transitions().iter().enumerate() {
        if t.left != carried || t.top != edges[j] || cells[cell][k].is_zero() {
            continue;
        }
        let last_col = j == n - 1;
        if last_col && t.right != model.minus() {
            continue;
        }
        let saved = edges[j];
        edges[j] = t.bottom;
        labels[i].push(t.label);
        let next_carried = if last_col { model.plus() } else { t.right };
        dfs(
            model,
            n,
            cells,
            cell + 1,
            next_carried,
            edges,
            acc.clone() * &cells[cell][k],
            labels,
            out,
            limit,
        );
        labels[i].pop();
        edges[j] = saved;
    }
}

pub fn configuration_dump<F: Field>(list: &[(Vec<Vec<Label>>, F)]) -> Vec<Configuration> {
    list.iter()
        .map(|(labels, w)| Configuration {
            labels: labels.clone(),
            weight: w.to_string(),
        })
        .collect()
}

/// Alternating sign matrices of order `n`, counted as monotone triangles with
/// bottom row `1..n`. Independent of the lattice code.
pub fn asm_count_oracle(n: usize) -> u128 {
    if n == 0 {
        return 1;
    }
    let mut layer: BTreeMap<Vec<u8>, u128> = BTreeMap::new();
    layer.insert((1..=n as u8).collect(), 1);
    for _ in 1..n {
        let mut next = BTreeMap::new();
        for (row, count) in &layer {
            let mut cur = Vec::with_capacity(row.len() - 1);
            interlacing(row, 0, &mut cur, &mut |r| {
                *next.entry(r.to_vec()).or_insert(0) += *count;
            });
        }
        layer = next;
    }
    layer.values().sum()
}

/// Strictly increasing rows `b` with `a_k <= b_k <= a_{k+1}`.
fn interlacing(a: &[u8], k: usize, cur: &mut Vec<u8>, emit: &mut dyn FnMut(&[u8])) {
    if k + 1 == a.len() {
        emit(cur);
        return;
    }
    let lo = cur.last().map_or(a[k], |&prev| a[k].max(prev + 1));
    for b in lo..=a[k + 1] {
        cur.push(b);
        interlacing(a, k + 1, cur, emit);
        cur.pop();
    }
}
