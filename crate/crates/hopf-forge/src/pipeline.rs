//! Composite diagrams as pipelines of whiskered generators.
//!
//! A pipeline stores its steps in application order; each step is
//! "identity on `left` leading factors, a generator, identity on `right`
//! trailing factors (and the carrier)". Evaluation pushes one source basis
//! vector at a time through the steps in structured form, so intermediate
//! words of large dimension never materialize as dense matrices. A dense
//! oracle that does materialize every step is kept for cross-checking on
//! small words.

use crate::scalar::Scalar;
use crate::word::{Backend, NatGen, Payload, PointWitness, TensorWord, render_sparse};
use std::cell::Cell;
use std::collections::BTreeMap;

/// Configurable resource caps; checks refuse to exceed them.
#[derive(Debug, Clone, Copy)]
pub struct Caps {
    pub arity: usize,
    pub dense: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { arity: 8, dense: 4096 }
    }
}

/// Shared configuration for diagram checks. With `dense_oracle` set, every
/// comparison whose words all fit under `oracle_max` is re-evaluated along
/// the dense path and the two answers are asserted identical;
/// `oracle_runs` counts how many comparisons did so.
#[derive(Debug)]
pub struct CheckConfig {
    pub caps: Caps,
    pub dense_oracle: bool,
    pub oracle_max: usize,
    oracle_runs: Cell<usize>,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig { caps: Caps::default(), dense_oracle: false, oracle_max: 256, oracle_runs: Cell::new(0) }
    }
}

impl CheckConfig {
    pub fn with_oracle() -> Self {
        CheckConfig { dense_oracle: true, ..Default::default() }
    }

    pub fn with_caps(caps: Caps) -> Self {
        CheckConfig { caps, ..Default::default() }
    }

    pub fn oracle_runs(&self) -> usize {
        self.oracle_runs.get()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CalcError {
    ArityCapExceeded { arity: usize, cap: usize },
    DenseCapExceeded { size: usize, cap: usize },
}

impl std::fmt::Display for CalcError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CalcError::ArityCapExceeded { arity, cap } => {
                write!(f, "word arity {arity} exceeds the cap {cap}")
            }
            CalcError::DenseCapExceeded { size, cap } => {
                write!(f, "dense dimension {size} exceeds the cap {cap}")
            }
        }
    }
}

impl std::error::Error for CalcError {}

#[derive(Debug, Clone)]
struct Step {
    left: usize,
    gen: NatGen,
    right: usize,
}

#[derive(Debug, Clone)]
pub struct Pipeline {
    pub backend: Backend,
    pub src: TensorWord,
    steps: Vec<Step>,
    cur: TensorWord,
}

impl Pipeline {
    pub fn id(backend: Backend, src: TensorWord) -> Self {
        Pipeline { backend, src, steps: Vec::new(), cur: src }
    }

    pub fn dst(&self) -> TensorWord {
        self.cur
    }

    /// Appends "identity on `left` factors, `gen`, identity on `right`
    /// factors". A generator with a carrier must sit flush right.
    pub fn step(mut self, left: usize, gen: &NatGen, right: usize) -> Self {
        assert_eq!(gen.backend, self.backend, "backend mismatch");
        if gen.src.carrier.is_some() {
            assert_eq!(right, 0, "carrier generator must sit flush right");
            assert_eq!(gen.src.carrier, self.cur.carrier, "carrier mismatch");
            assert_eq!(self.cur.arity, left + gen.src.arity, "word arity mismatch");
            self.cur = TensorWord { arity: left + gen.dst.arity, carrier: gen.dst.carrier };
        } else {
            assert_eq!(self.cur.arity, left + gen.src.arity + right, "word arity mismatch");
            self.cur = TensorWord { arity: left + gen.dst.arity + right, carrier: self.cur.carrier };
        }
        self.steps.push(Step { left, gen: gen.clone(), right });
        self
    }

    /// Appends `gen` covering the whole current word.
    pub fn then(self, gen: &NatGen) -> Self {
        if gen.src.carrier.is_some() {
            self.step(0, gen, 0)
        } else {
            assert_eq!(self.cur.carrier, None, "carrierless generator on carried word");
            self.step(0, gen, 0)
        }
    }

    /// Largest word size at any step boundary, including source and target.
    pub fn max_boundary(&self) -> usize {
        let mut w = self.src;
        let mut best = w.size(self.backend);
        for s in &self.steps {
            w = step_dst(w, s);
            best = best.max(w.size(self.backend));
        }
        best
    }

    fn max_arity(&self) -> usize {
        let mut w = self.src;
        let mut best = w.arity;
        for s in &self.steps {
            w = step_dst(w, s);
            best = best.max(w.arity);
        }
        best
    }

    fn check_arity(&self, caps: &Caps) -> Result<(), CalcError> {
        let arity = self.max_arity();
        if arity > caps.arity {
            return Err(CalcError::ArityCapExceeded { arity, cap: caps.arity });
        }
        Ok(())
    }

    fn prepare(&self) -> Vec<PreparedStep> {
        let base = self.backend.base();
        let mut w = self.src;
        let mut out = Vec::with_capacity(self.steps.len());
        for s in &self.steps {
            let l = base.pow(s.left as u32);
            let r = if s.gen.src.carrier.is_some() {
                1
            } else {
                base.pow(s.right as u32) * w.carrier.unwrap_or(1)
            };
            let cols = match &s.gen.payload {
                Payload::Mat(m) => Cols::Sparse((0..m.cols).map(|j| m.col_sparse(j)).collect()),
                Payload::Map(f) => Cols::Table(f.table().to_vec()),
            };
            out.push(PreparedStep {
                left: l,
                right: r,
                src_mid: s.gen.payload.src_size(),
                dst_mid: s.gen.payload.dst_size(),
                cols,
            });
            w = step_dst(w, s);
        }
        out
    }

    /// Image of one source basis vector through the whole pipeline, as a
    /// sorted sparse vector (vector backend).
    pub fn eval_basis_vect(backend: Backend, prep: &[PreparedStep], idx: usize) -> Vec<(usize, Scalar)> {
        let one = backend.domain().expect("vector eval on set backend").one();
        let mut cur: Vec<(usize, Scalar)> = vec![(idx, one)];
        for st in prep {
            let Cols::Sparse(cols) = &st.cols else { panic!("vector eval on set payload") };
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (i, c) in &cur {
                let (l, s, r) = st.decompose(*i);
                for (t, v) in &cols[s] {
                    let o = st.recompose(l, *t, r);
                    let add = c.mul(v);
                    match acc.remove(&o) {
                        Some(prev) => {
                            let sum = prev.add(&add);
                            if !sum.is_zero() {
                                acc.insert(o, sum);
                            }
                        }
                        None => {
                            if !add.is_zero() {
                                acc.insert(o, add);
                            }
                        }
                    }
                }
            }
            cur = acc.into_iter().collect();
        }
        cur
    }

    /// Image of one source point through the whole pipeline (set backend).
    pub fn eval_basis_set(prep: &[PreparedStep], idx: usize) -> usize {
        let mut cur = idx;
        for st in prep {
            let Cols::Table(table) = &st.cols else { panic!("set eval on vector payload") };
            let (l, s, r) = st.decompose(cur);
            cur = st.recompose(l, table[s], r);
        }
        cur
    }

    /// Evaluates the composite into a materialized generator. Source and
    /// target must fit under the dense cap; intermediate words need not.
    pub fn materialize(&self, cfg: &CheckConfig) -> Result<NatGen, CalcError> {
        self.check_arity(&cfg.caps)?;
        let (srcn, dstn) = (self.src.size(self.backend), self.cur.size(self.backend));
        for size in [srcn, dstn] {
            if size > cfg.caps.dense {
                return Err(CalcError::DenseCapExceeded { size, cap: cfg.caps.dense });
            }
        }
        let prep = self.prepare();
        let payload = match self.backend {
            Backend::Vect { field, .. } => {
                let mut m = crate::matrix::ExactMatrix::zero(dstn, srcn, field.domain());
                for j in 0..srcn {
                    for (i, v) in Self::eval_basis_vect(self.backend, &prep, j) {
                        m.set(i, j, v);
                    }
                }
                Payload::Mat(m)
            }
            Backend::Set { .. } => {
                let table = (0..srcn).map(|j| Self::eval_basis_set(&prep, j)).collect();
                Payload::Map(crate::finmap::FiniteMap::new(srcn, dstn, table))
            }
        };
        Ok(NatGen::new(self.backend, self.src, self.cur, payload))
    }

    /// Reference evaluation: every step becomes a full Kronecker/product
    /// matrix and the steps are composed densely. Refuses words over the
    /// dense cap. Only used to cross-check the structured path.
    pub fn dense_oracle(&self, cfg: &CheckConfig) -> Result<NatGen, CalcError> {
        self.check_arity(&cfg.caps)?;
        let bound = self.max_boundary();
        if bound > cfg.caps.dense {
            return Err(CalcError::DenseCapExceeded { size: bound, cap: cfg.caps.dense });
        }
        let mut acc = NatGen::identity(self.backend, self.src);
        let base = self.backend.base();
        let mut w = self.src;
        for s in &self.steps {
            let r = if s.gen.src.carrier.is_some() {
                1
            } else {
                base.pow(s.right as u32) * w.carrier.unwrap_or(1)
            };
            let l = base.pow(s.left as u32);
            let stepmat = Payload::identity(self.backend, l)
                .tensor(&s.gen.payload)
                .tensor(&Payload::identity(self.backend, r));
            w = step_dst(w, s);
            acc = NatGen::new(self.backend, self.src, w, stepmat.after(&acc.payload));
        }
        Ok(acc)
    }
}

fn step_dst(w: TensorWord, s: &Step) -> TensorWord {
    if s.gen.src.carrier.is_some() {
        TensorWord { arity: s.left + s.gen.dst.arity, carrier: s.gen.dst.carrier }
    } else {
        TensorWord { arity: s.left + s.gen.dst.arity + s.right, carrier: w.carrier }
    }
}

#[derive(Debug)]
enum Cols {
    Sparse(Vec<Vec<(usize, Scalar)>>),
    Table(Vec<usize>),
}

#[derive(Debug)]
pub struct PreparedStep {
    left: usize,
    right: usize,
    src_mid: usize,
    dst_mid: usize,
    cols: Cols,
}

impl PreparedStep {
    fn decompose(&self, idx: usize) -> (usize, usize, usize) {
        let r = idx % self.right;
        let rest = idx / self.right;
        let s = rest % self.src_mid;
        let l = rest / self.src_mid;
        debug_assert!(l < self.left);
        (l, s, r)
    }

    fn recompose(&self, l: usize, t: usize, r: usize) -> usize {
        (l * self.dst_mid + t) * self.right + r
    }
}

/// Compares two composites with the same boundary words. Returns the first
/// differing basis point if any. With the oracle enabled and all words
/// small enough, both sides are additionally recomputed densely and the
/// structured and dense answers asserted identical.
pub fn compare_pipelines(
    lhs: &Pipeline,
    rhs: &Pipeline,
    cfg: &CheckConfig,
) -> Result<Option<PointWitness>, CalcError> {
    assert_eq!(lhs.src, rhs.src, "source word mismatch");
    assert_eq!(lhs.dst(), rhs.dst(), "target word mismatch");
    assert_eq!(lhs.backend, rhs.backend, "backend mismatch");
    lhs.check_arity(&cfg.caps)?;
    rhs.check_arity(&cfg.caps)?;

    if cfg.dense_oracle
        && lhs.max_boundary() <= cfg.oracle_max
        && rhs.max_boundary() <= cfg.oracle_max
    {
        for p in [lhs, rhs] {
            let structured = p.materialize(cfg)?;
            let dense = p.dense_oracle(cfg)?;
            assert_eq!(structured, dense, "structured and dense evaluation disagree");
        }
        cfg.oracle_runs.set(cfg.oracle_runs.get() + 1);
    }

    let n = lhs.src.size(lhs.backend);
    let lp = lhs.prepare();
    let rp = rhs.prepare();
    let dstw = lhs.dst();
    match lhs.backend {
        Backend::Vect { .. } => {
            for j in 0..n {
                let a = Pipeline::eval_basis_vect(lhs.backend, &lp, j);
                let b = Pipeline::eval_basis_vect(lhs.backend, &rp, j);
                if a != b {
                    return Ok(Some(PointWitness {
                        input: lhs.src.render_index(lhs.backend, j),
                        lhs: render_sparse(&a, dstw, lhs.backend),
                        rhs: render_sparse(&b, dstw, lhs.backend),
                    }));
                }
            }
        }
        Backend::Set { .. } => {
            for j in 0..n {
                let a = Pipeline::eval_basis_set(&lp, j);
                let b = Pipeline::eval_basis_set(&rp, j);
                if a != b {
                    return Ok(Some(PointWitness {
                        input: lhs.src.render_index(lhs.backend, j),
                        lhs: dstw.render_index(lhs.backend, a),
                        rhs: dstw.render_index(lhs.backend, b),
                    }));
                }
            }
        }
    }
    Ok(None)
}
