//! Tensor words and their morphism generators.
//!
//! Both backends present an endofunctor applied repeatedly: `B (x) -` on
//! finite-dimensional vector spaces and `G x -` on finite sets. A word of
//! arity `m` is the `m`-fold application, optionally followed by a fixed
//! carrier object `X` (a module or comodule underlying object). Bases of
//! words are ordered lexicographically with the leftmost factor most
//! significant and the carrier least significant.
//!
//! A natural transformation between word functors is determined by its
//! generator, the component at the unit object; the component at any other
//! object is the generator followed by the identity of that object. All
//! diagram checks below work on generators.

use crate::finmap::FiniteMap;
use crate::matrix::ExactMatrix;
use crate::scalar::{Domain, Scalar};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Fp(u64),
    Q,
}

impl FieldSpec {
    pub fn domain(self) -> Domain {
        match self {
            FieldSpec::Fp(p) => Domain::Fp(p),
            FieldSpec::Q => Domain::Q,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Backend {
    Vect { field: FieldSpec, dim: usize },
    Set { size: usize },
}

impl Backend {
    /// Dimension of `B` resp. cardinality of `G`.
    pub fn base(self) -> usize {
        match self {
            Backend::Vect { dim, .. } => dim,
            Backend::Set { size } => size,
        }
    }

    pub fn domain(self) -> Option<Domain> {
        match self {
            Backend::Vect { field, .. } => Some(field.domain()),
            Backend::Set { .. } => None,
        }
    }

    pub fn is_vect(self) -> bool {
        matches!(self, Backend::Vect { .. })
    }
}

/// A word functor: `arity` tensor factors, optionally applied to a fixed
/// carrier of the given size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TensorWord {
    pub arity: usize,
    pub carrier: Option<usize>,
}

impl TensorWord {
    pub fn plain(arity: usize) -> Self {
        TensorWord { arity, carrier: None }
    }

    pub fn with_carrier(arity: usize, carrier: usize) -> Self {
        TensorWord { arity, carrier: Some(carrier) }
    }

    pub fn size(&self, backend: Backend) -> usize {
        backend.base().pow(self.arity as u32) * self.carrier.unwrap_or(1)
    }

    /// Renders a basis index as a factor tuple, carrier slot last.
    pub fn render_index(&self, backend: Backend, idx: usize) -> String {
        let base = backend.base();
        let carrier = self.carrier.unwrap_or(1);
        let (mut w, c) = (idx / carrier, idx % carrier);
        let mut digits = vec![0usize; self.arity];
        for slot in (0..self.arity).rev() {
            digits[slot] = w % base;
            w /= base;
        }
        let word = digits.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",");
        match self.carrier {
            Some(_) if self.arity > 0 => format!("({word}|{c})"),
            Some(_) => format!("(|{c})"),
            None => format!("({word})"),
        }
    }
}

/// Morphism data: a matrix whose columns are images of source basis
/// vectors, or a table of a finite map.
#[derive(Debug, Clone, PartialEq)]
pub enum Payload {
    Mat(ExactMatrix),
    Map(FiniteMap),
}

impl Payload {
    pub fn src_size(&self) -> usize {
        match self {
            Payload::Mat(m) => m.cols,
            Payload::Map(f) => f.source,
        }
    }

    pub fn dst_size(&self) -> usize {
        match self {
            Payload::Mat(m) => m.rows,
            Payload::Map(f) => f.target,
        }
    }

    pub fn identity(backend: Backend, n: usize) -> Payload {
        match backend {
            Backend::Vect { field, .. } => Payload::Mat(ExactMatrix::identity(n, field.domain())),
            Backend::Set { .. } => Payload::Map(FiniteMap::identity(n)),
        }
    }

    /// `self` after `rhs`: apply `rhs` first.
    pub fn after(&self, rhs: &Payload) -> Payload {
        match (self, rhs) {
            (Payload::Mat(a), Payload::Mat(b)) => Payload::Mat(a.mul(b)),
            (Payload::Map(a), Payload::Map(b)) => Payload::Map(a.after(b)),
            _ => panic!("backend mismatch"),
        }
    }

    /// Tensor/cartesian product, `self` most significant.
    pub fn tensor(&self, rhs: &Payload) -> Payload {
        match (self, rhs) {
            (Payload::Mat(a), Payload::Mat(b)) => Payload::Mat(a.kron(b)),
            (Payload::Map(a), Payload::Map(b)) => Payload::Map(a.product(b)),
            _ => panic!("backend mismatch"),
        }
    }

    /// First source index on which the payloads differ.
    pub fn first_difference(&self, rhs: &Payload) -> Option<usize> {
        assert_eq!(self.src_size(), rhs.src_size(), "shape mismatch");
        assert_eq!(self.dst_size(), rhs.dst_size(), "shape mismatch");
        match (self, rhs) {
            (Payload::Mat(a), Payload::Mat(b)) => {
                (0..a.cols).find(|&j| (0..a.rows).any(|i| a.get(i, j) != b.get(i, j)))
            }
            (Payload::Map(a), Payload::Map(b)) => (0..a.source).find(|&i| a.apply(i) != b.apply(i)),
            _ => panic!("backend mismatch"),
        }
    }
}

/// Generator of a natural transformation between word functors.
#[derive(Debug, Clone, PartialEq)]
pub struct NatGen {
    pub backend: Backend,
    pub src: TensorWord,
    pub dst: TensorWord,
    pub payload: Payload,
}

impl NatGen {
    pub fn new(backend: Backend, src: TensorWord, dst: TensorWord, payload: Payload) -> Self {
        assert_eq!(payload.src_size(), src.size(backend), "payload/source size mismatch");
        assert_eq!(payload.dst_size(), dst.size(backend), "payload/target size mismatch");
        match (backend, &payload) {
            (Backend::Vect { .. }, Payload::Mat(_)) | (Backend::Set { .. }, Payload::Map(_)) => {}
            _ => panic!("payload kind does not match backend"),
        }
        NatGen { backend, src, dst, payload }
    }

    pub fn identity(backend: Backend, word: TensorWord) -> Self {
        let n = word.size(backend);
        NatGen::new(backend, word, word, Payload::identity(backend, n))
    }

    /// `self` then `next` (application order).
    pub fn then(&self, next: &NatGen) -> NatGen {
        assert_eq!(self.dst, next.src, "word mismatch in composition");
        NatGen::new(self.backend, self.src, next.dst, next.payload.after(&self.payload))
    }

    /// Identity on `j` leading factors, then `self`: the image of the
    /// generator under the `j`-fold functor application.
    pub fn whisker_left(&self, j: usize) -> NatGen {
        let left = Payload::identity(self.backend, self.backend.base().pow(j as u32));
        let src = TensorWord { arity: self.src.arity + j, carrier: self.src.carrier };
        let dst = TensorWord { arity: self.dst.arity + j, carrier: self.dst.carrier };
        NatGen::new(self.backend, src, dst, left.tensor(&self.payload))
    }

    /// `self` on the leading factors, identity on `j` trailing word factors
    /// and optionally a carrier: the component of `self` at the object
    /// `H^j(X)`. Only a carrierless generator has such components.
    pub fn at_word(&self, j: usize, carrier: Option<usize>) -> NatGen {
        assert!(self.src.carrier.is_none() && self.dst.carrier.is_none(), "generator already carries a fixed object");
        let rightsize = self.backend.base().pow(j as u32) * carrier.unwrap_or(1);
        let right = Payload::identity(self.backend, rightsize);
        let src = TensorWord { arity: self.src.arity + j, carrier };
        let dst = TensorWord { arity: self.dst.arity + j, carrier };
        NatGen::new(self.backend, src, dst, self.payload.tensor(&right))
    }

    /// Identity on `j` trailing word factors, no carrier.
    pub fn whisker_right(&self, j: usize) -> NatGen {
        self.at_word(j, None)
    }

    /// Component at a fixed carrier object.
    pub fn at_carrier(&self, carrier: usize) -> NatGen {
        self.at_word(0, Some(carrier))
    }

    /// Horizontal composite `self (x) other` of carrierless generators.
    pub fn hcomp(&self, other: &NatGen) -> NatGen {
        assert!(self.src.carrier.is_none() && other.src.carrier.is_none());
        self.whisker_right(other.src.arity).then(&other.whisker_left(self.dst.arity))
    }

    /// First differing source basis vector, rendered, or `None` if equal.
    pub fn first_difference(&self, rhs: &NatGen) -> Option<PointWitness> {
        assert_eq!(self.src, rhs.src, "source word mismatch");
        assert_eq!(self.dst, rhs.dst, "target word mismatch");
        let j = self.payload.first_difference(&rhs.payload)?;
        Some(PointWitness {
            input: self.src.render_index(self.backend, j),
            lhs: render_image(&self.payload, self.dst, self.backend, j),
            rhs: render_image(&rhs.payload, self.dst, self.backend, j),
        })
    }
}

/// A basis point where two composites disagree, with both images.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct PointWitness {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for PointWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at {}: lhs = {}, rhs = {}", self.input, self.lhs, self.rhs)
    }
}

/// Renders the image of source basis vector `j` of a payload.
pub fn render_image(p: &Payload, dst: TensorWord, backend: Backend, j: usize) -> String {
    match p {
        Payload::Mat(m) => render_sparse(&m.col_sparse(j), dst, backend),
        Payload::Map(f) => dst.render_index(backend, f.apply(j)),
    }
}

/// Renders a sparse vector as a combination of basis tuples.
pub fn render_sparse(terms: &[(usize, Scalar)], word: TensorWord, backend: Backend) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    terms
        .iter()
        .map(|(i, c)| {
            let b = word.render_index(backend, *i);
            if c.is_one() { b } else { format!("{c}*{b}") }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vect2() -> Backend {
        Backend::Vect { field: FieldSpec::Fp(5), dim: 2 }
    }

    /// Basis swap on one factor, as a 1 -> 1 generator.
    fn flip(b: Backend) -> NatGen {
        let d = b.domain().unwrap();
        let m = ExactMatrix::from_rows(
            d,
            vec![vec![d.zero(), d.one()], vec![d.one(), d.zero()]],
        );
        NatGen::new(b, TensorWord::plain(1), TensorWord::plain(1), Payload::Mat(m))
    }

    #[test]
    fn whisker_left_acts_on_trailing_factor() {
        let b = vect2();
        let g = flip(b).whisker_left(1);
        // e_(0,0) (index 0) maps to e_(0,1) (index 1).
        if let Payload::Mat(m) = &g.payload {
            assert!(m.get(1, 0).is_one());
            assert!(m.get(3, 2).is_one());
        } else {
            unreachable!()
        }
    }

    #[test]
    fn whisker_right_acts_on_leading_factor() {
        let b = vect2();
        let g = flip(b).whisker_right(1);
        // e_(0,0) (index 0) maps to e_(1,0) (index 2).
        if let Payload::Mat(m) = &g.payload {
            assert!(m.get(2, 0).is_one());
            assert!(m.get(0, 2).is_one());
        } else {
            unreachable!()
        }
    }

    #[test]
    fn hcomp_is_tensor_of_generators() {
        let b = vect2();
        let f = flip(b);
        let fg = f.hcomp(&f);
        let direct = NatGen::new(
            b,
            TensorWord::plain(2),
            TensorWord::plain(2),
            f.payload.tensor(&f.payload),
        );
        assert_eq!(fg, direct);
        // Interchange: (f x id);(id x f) == (id x f);(f x id).
        let other = f.whisker_left(1).then(&f.whisker_right(1));
        assert_eq!(fg, other);
    }

    #[test]
    fn set_words_and_rendering() {
        let b = Backend::Set { size: 3 };
        let w = TensorWord::plain(2);
        assert_eq!(w.size(b), 9);
        assert_eq!(w.render_index(b, 5), "(1,2)");
        let wc = TensorWord::with_carrier(1, 4);
        assert_eq!(wc.size(b), 12);
        assert_eq!(wc.render_index(b, 7), "(1|3)");
    }

    #[test]
    fn carrier_component() {
        let b = vect2();
        let g = flip(b).at_carrier(3);
        assert_eq!(g.src, TensorWord::with_carrier(1, 3));
        assert_eq!(g.payload.src_size(), 6);
    }

    #[test]
    fn difference_witness() {
        let b = vect2();
        let f = flip(b);
        let id = NatGen::identity(b, TensorWord::plain(1));
        let w = f.first_difference(&id).unwrap();
        assert_eq!(w.input, "(0)");
        assert_eq!(w.lhs, "(1)");
        assert_eq!(w.rhs, "(0)");
    }
}
