//! On-disk instance format.
//!
//! An instance file is a JSON object presenting the structure maps of a
//! candidate bimonad. Vector backend: a coefficient algebra/coalgebra `B`
//! by structure constants, `mul[i][j][k]` the coefficient of `e_k` in
//! `e_i * e_j` and `comul[k][i][j]` the coefficient of `e_i (x) e_j` in
//! `delta(e_k)`, plus optional braiding (a `d^2 x d^2` matrix on pair
//! indices `i*d+j`), optional antipode (`d x d`), and optional parity (a
//! 0/1 vector selecting the sign-twisted swap; exclusive with an explicit
//! braiding). Set backend: a multiplication table with a unit element; the
//! comultiplication is the diagonal, the counit the terminal map, the
//! braiding the swap.
//!
//! Parsing accepts any JSON layout; emission is canonical (fixed key
//! order, fixed line layout), so emitted files are byte-stable.

use crate::matrix::ExactMatrix;
use crate::finmap::FiniteMap;
use crate::scalar::{is_prime, scalar_from_json, scalar_to_json, sign, Domain, Scalar};
use crate::word::{Backend, FieldSpec, NatGen, Payload, TensorWord};
use crate::EngineError;
use serde_json::Value;

#[derive(Debug, Clone, PartialEq)]
pub enum InstanceSpec {
    Vect(VectSpec),
    Set(SetSpec),
}

#[derive(Debug, Clone, PartialEq)]
pub struct VectSpec {
    pub field: FieldSpec,
    pub dim: usize,
    pub mul: Vec<Vec<Vec<Scalar>>>,
    pub unit: Vec<Scalar>,
    pub comul: Vec<Vec<Vec<Scalar>>>,
    pub counit: Vec<Scalar>,
    pub braiding: Option<Vec<Vec<Scalar>>>,
    pub antipode: Option<Vec<Vec<Scalar>>>,
    pub parity: Option<Vec<u8>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SetSpec {
    pub size: usize,
    pub table: Vec<Vec<usize>>,
    pub unit: usize,
}

/// Which braiding an instance uses; remembered so derived instances can be
/// emitted in the same style.
#[derive(Debug, Clone, PartialEq)]
pub enum TauKind {
    PlainSwap,
    SuperSwap(Vec<u8>),
    Explicit,
}

/// The structure maps of an instance as generators.
#[derive(Debug, Clone, PartialEq)]
pub struct Structure {
    pub backend: Backend,
    pub m: NatGen,
    pub e: NatGen,
    pub delta: NatGen,
    pub eps: NatGen,
    pub tau: NatGen,
    pub tau_kind: TauKind,
    pub antipode: Option<NatGen>,
}

/// The swap `x (x) y -> y (x) x` as a 2 -> 2 generator.
pub fn plain_swap(backend: Backend) -> NatGen {
    let n = backend.base();
    let payload = match backend {
        Backend::Vect { field, .. } => {
            let mut m = ExactMatrix::zero(n * n, n * n, field.domain());
            for i in 0..n {
                for j in 0..n {
                    m.set(j * n + i, i * n + j, field.domain().one());
                }
            }
            Payload::Mat(m)
        }
        Backend::Set { .. } => {
            Payload::Map(FiniteMap::from_fn(n * n, n * n, |x| (x % n) * n + x / n))
        }
    };
    NatGen::new(backend, TensorWord::plain(2), TensorWord::plain(2), payload)
}

/// The sign-twisted swap `x (x) y -> (-1)^{|x||y|} y (x) x` for a parity
/// grading of the basis. Vector backend only.
pub fn super_swap(backend: Backend, parity: &[u8]) -> NatGen {
    let Backend::Vect { field, dim } = backend else {
        panic!("sign-twisted swap needs the vector backend")
    };
    assert_eq!(parity.len(), dim, "parity length mismatch");
    let d = field.domain();
    let mut m = ExactMatrix::zero(dim * dim, dim * dim, d);
    for i in 0..dim {
        for j in 0..dim {
            m.set(j * dim + i, i * dim + j, sign(d, parity[i] * parity[j]));
        }
    }
    NatGen::new(backend, TensorWord::plain(2), TensorWord::plain(2), Payload::Mat(m))
}

impl InstanceSpec {
    pub fn backend(&self) -> Backend {
        match self {
            InstanceSpec::Vect(v) => Backend::Vect { field: v.field, dim: v.dim },
            InstanceSpec::Set(s) => Backend::Set { size: s.size },
        }
    }

    /// Builds the structure-map generators.
    pub fn to_structure(&self) -> Structure {
        match self {
            InstanceSpec::Vect(v) => v.to_structure(),
            InstanceSpec::Set(s) => s.to_structure(),
        }
    }

    pub fn parse(text: &str) -> Result<InstanceSpec, EngineError> {
        let v: Value = serde_json::from_str(text)
            .map_err(|e| EngineError::Parse(format!("invalid JSON: {e}")))?;
        Self::from_value(&v).map_err(EngineError::Parse)
    }

    fn from_value(v: &Value) -> Result<InstanceSpec, String> {
        let obj = v.as_object().ok_or("top level must be an object")?;
        let backend = obj
            .get("backend")
            .and_then(Value::as_str)
            .ok_or("missing string field \"backend\"")?;
        match backend {
            "vect" => VectSpec::from_obj(obj).map(InstanceSpec::Vect),
            "set" => SetSpec::from_obj(obj).map(InstanceSpec::Set),
            other => Err(format!("unknown backend {other:?}, expected \"vect\" or \"set\"")),
        }
    }

    /// Canonical rendering; parsing then emitting a canonical file is the
    /// identity on bytes.
    pub fn emit(&self) -> String {
        match self {
            InstanceSpec::Vect(v) => v.emit(),
            InstanceSpec::Set(s) => s.emit(),
        }
    }
}

const VECT_KEYS: &[&str] =
    &["backend", "field", "dim", "mul", "unit", "comul", "counit", "braiding", "antipode", "parity"];
const SET_KEYS: &[&str] = &["backend", "size", "table", "unit"];

impl VectSpec {
    fn from_obj(obj: &serde_json::Map<String, Value>) -> Result<VectSpec, String> {
        for k in obj.keys() {
            if !VECT_KEYS.contains(&k.as_str()) {
                return Err(format!("unknown field {k:?} for the vector backend"));
            }
        }
        let field = parse_field(obj.get("field").ok_or("missing field \"field\"")?)?;
        let domain = field.domain();
        let dim = parse_usize(obj.get("dim").ok_or("missing field \"dim\"")?, "dim")?;
        if dim == 0 {
            return Err("dim must be at least 1".into());
        }
        let mul = parse_cube(obj.get("mul").ok_or("missing field \"mul\"")?, "mul", dim, domain)?;
        let unit = parse_vec(obj.get("unit").ok_or("missing field \"unit\"")?, "unit", dim, domain)?;
        let comul =
            parse_cube(obj.get("comul").ok_or("missing field \"comul\"")?, "comul", dim, domain)?;
        let counit =
            parse_vec(obj.get("counit").ok_or("missing field \"counit\"")?, "counit", dim, domain)?;
        let braiding = obj
            .get("braiding")
            .map(|b| parse_matrix(b, "braiding", dim * dim, dim * dim, domain))
            .transpose()?;
        let antipode = obj
            .get("antipode")
            .map(|a| parse_matrix(a, "antipode", dim, dim, domain))
            .transpose()?;
        let parity = obj.get("parity").map(|p| parse_parity(p, dim)).transpose()?;
        if braiding.is_some() && parity.is_some() {
            return Err("\"braiding\" and \"parity\" are mutually exclusive".into());
        }
        Ok(VectSpec { field, dim, mul, unit, comul, counit, braiding, antipode, parity })
    }

    pub fn to_structure(&self) -> Structure {
        let backend = Backend::Vect { field: self.field, dim: self.dim };
        let domain = self.field.domain();
        let d = self.dim;
        let w = TensorWord::plain;

        let mut m = ExactMatrix::zero(d, d * d, domain);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    m.set(k, i * d + j, self.mul[i][j][k].clone());
                }
            }
        }
        let mut e = ExactMatrix::zero(d, 1, domain);
        for k in 0..d {
            e.set(k, 0, self.unit[k].clone());
        }
        let mut delta = ExactMatrix::zero(d * d, d, domain);
        for k in 0..d {
            for i in 0..d {
                for j in 0..d {
                    delta.set(i * d + j, k, self.comul[k][i][j].clone());
                }
            }
        }
        let mut eps = ExactMatrix::zero(1, d, domain);
        for k in 0..d {
            eps.set(0, k, self.counit[k].clone());
        }
        let (tau, tau_kind) = match (&self.braiding, &self.parity) {
            (Some(b), None) => {
                let mut t = ExactMatrix::zero(d * d, d * d, domain);
                for r in 0..d * d {
                    for c in 0..d * d {
                        t.set(r, c, b[r][c].clone());
                    }
                }
                (
                    NatGen::new(backend, w(2), w(2), Payload::Mat(t)),
                    TauKind::Explicit,
                )
            }
            (None, Some(p)) => (super_swap(backend, p), TauKind::SuperSwap(p.clone())),
            (None, None) => (plain_swap(backend), TauKind::PlainSwap),
            (Some(_), Some(_)) => unreachable!("validated as exclusive"),
        };
        let antipode = self.antipode.as_ref().map(|a| {
            let mut s = ExactMatrix::zero(d, d, domain);
            for r in 0..d {
                for c in 0..d {
                    s.set(r, c, a[r][c].clone());
                }
            }
            NatGen::new(backend, w(1), w(1), Payload::Mat(s))
        });
        Structure {
            backend,
            m: NatGen::new(backend, w(2), w(1), Payload::Mat(m)),
            e: NatGen::new(backend, w(0), w(1), Payload::Mat(e)),
            delta: NatGen::new(backend, w(1), w(2), Payload::Mat(delta)),
            eps: NatGen::new(backend, w(1), w(0), Payload::Mat(eps)),
            tau,
            tau_kind,
            antipode,
        }
    }

    /// Rebuilds a spec from structure-map generators (used when emitting
    /// derived instances).
    pub fn from_structure(s: &Structure) -> VectSpec {
        let Backend::Vect { field, dim: d } = s.backend else { panic!("vector spec from set backend") };
        let get = |g: &NatGen, r: usize, c: usize| -> Scalar {
            let Payload::Mat(m) = &g.payload else { unreachable!() };
            m.get(r, c).clone()
        };
        let mul = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| (0..d).map(|k| get(&s.m, k, i * d + j)).collect())
                    .collect()
            })
            .collect();
        let unit = (0..d).map(|k| get(&s.e, k, 0)).collect();
        let comul = (0..d)
            .map(|k| {
                (0..d)
                    .map(|i| (0..d).map(|j| get(&s.delta, i * d + j, k)).collect())
                    .collect()
            })
            .collect();
        let counit = (0..d).map(|k| get(&s.eps, 0, k)).collect();
        let (braiding, parity) = match &s.tau_kind {
            TauKind::PlainSwap => (None, None),
            TauKind::SuperSwap(p) => (None, Some(p.clone())),
            TauKind::Explicit => {
                let b = (0..d * d)
                    .map(|r| (0..d * d).map(|c| get(&s.tau, r, c)).collect())
                    .collect();
                (Some(b), None)
            }
        };
        let antipode = s
            .antipode
            .as_ref()
            .map(|a| (0..d).map(|r| (0..d).map(|c| get(a, r, c)).collect()).collect());
        VectSpec { field, dim: d, mul, unit, comul, counit, braiding, antipode, parity }
    }

    fn emit(&self) -> String {
        let mut out = String::new();
        out.push_str("{\n");
        out.push_str("  \"backend\": \"vect\",\n");
        match self.field {
            FieldSpec::Fp(p) => {
                out.push_str(&format!("  \"field\": {{\"kind\": \"Fp\", \"p\": {p}}},\n"))
            }
            FieldSpec::Q => out.push_str("  \"field\": {\"kind\": \"Q\"},\n"),
        }
        out.push_str(&format!("  \"dim\": {},\n", self.dim));
        emit_cube(&mut out, "mul", &self.mul);
        out.push_str(",\n");
        out.push_str(&format!("  \"unit\": {},\n", inline_scalars(&self.unit)));
        emit_cube(&mut out, "comul", &self.comul);
        out.push_str(",\n");
        out.push_str(&format!("  \"counit\": {}", inline_scalars(&self.counit)));
        if let Some(b) = &self.braiding {
            out.push_str(",\n");
            emit_matrix(&mut out, "braiding", b);
        }
        if let Some(a) = &self.antipode {
            out.push_str(",\n");
            emit_matrix(&mut out, "antipode", a);
        }
        if let Some(p) = &self.parity {
            let row = p.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ");
            out.push_str(&format!(",\n  \"parity\": [{row}]"));
        }
        out.push_str("\n}\n");
        out
    }
}

impl SetSpec {
    fn from_obj(obj: &serde_json::Map<String, Value>) -> Result<SetSpec, String> {
        for k in obj.keys() {
            if !SET_KEYS.contains(&k.as_str()) {
                return Err(format!("unknown field {k:?} for the set backend"));
            }
        }
        let size = parse_usize(obj.get("size").ok_or("missing field \"size\"")?, "size")?;
        if size == 0 {
            return Err("size must be at least 1".into());
        }
        let rows = obj
            .get("table")
            .and_then(Value::as_array)
            .ok_or("missing array field \"table\"")?;
        if rows.len() != size {
            return Err(format!("table has {} rows, expected {size}", rows.len()));
        }
        let mut table = Vec::with_capacity(size);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_array().ok_or_else(|| format!("table[{i}] is not an array"))?;
            if row.len() != size {
                return Err(format!("table[{i}] has {} entries, expected {size}", row.len()));
            }
            let mut r = Vec::with_capacity(size);
            for (j, cell) in row.iter().enumerate() {
                let v = parse_usize(cell, &format!("table[{i}][{j}]"))?;
                if v >= size {
                    return Err(format!("table[{i}][{j}] = {v} out of range 0..{size}"));
                }
                r.push(v);
            }
            table.push(r);
        }
        let unit = parse_usize(obj.get("unit").ok_or("missing field \"unit\"")?, "unit")?;
        if unit >= size {
            return Err(format!("unit = {unit} out of range 0..{size}"));
        }
        Ok(SetSpec { size, table, unit })
    }

    pub fn to_structure(&self) -> Structure {
        let backend = Backend::Set { size: self.size };
        let s = self.size;
        let w = TensorWord::plain;
        let m = FiniteMap::from_fn(s * s, s, |x| self.table[x / s][x % s]);
        let e = FiniteMap::new(1, s, vec![self.unit]);
        let delta = FiniteMap::from_fn(s, s * s, |g| g * s + g);
        let eps = FiniteMap::from_fn(s, 1, |_| 0);
        Structure {
            backend,
            m: NatGen::new(backend, w(2), w(1), Payload::Map(m)),
            e: NatGen::new(backend, w(0), w(1), Payload::Map(e)),
            delta: NatGen::new(backend, w(1), w(2), Payload::Map(delta)),
            eps: NatGen::new(backend, w(1), w(0), Payload::Map(eps)),
            tau: plain_swap(backend),
            tau_kind: TauKind::PlainSwap,
            antipode: None,
        }
    }

    /// Rebuilds a spec from structure maps. The comultiplication, counit
    /// and braiding of a set instance are canonical; asserts they are.
    pub fn from_structure(s: &Structure) -> SetSpec {
        let Backend::Set { size } = s.backend else { panic!("set spec from vector backend") };
        let Payload::Map(m) = &s.m.payload else { unreachable!() };
        let Payload::Map(e) = &s.e.payload else { unreachable!() };
        assert_eq!(s.delta, s_diagonal(s.backend), "set comultiplication must be the diagonal");
        assert_eq!(s.tau, plain_swap(s.backend), "set braiding must be the swap");
        let table = (0..size).map(|i| (0..size).map(|j| m.apply(i * size + j)).collect()).collect();
        SetSpec { size, table, unit: e.apply(0) }
    }

    fn emit(&self) -> String {
        let mut out = String::new();
        out.push_str("{\n");
        out.push_str("  \"backend\": \"set\",\n");
        out.push_str(&format!("  \"size\": {},\n", self.size));
        out.push_str("  \"table\": [\n");
        for (i, row) in self.table.iter().enumerate() {
            let line = row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ");
            let comma = if i + 1 < self.table.len() { "," } else { "" };
            out.push_str(&format!("    [{line}]{comma}\n"));
        }
        out.push_str("  ],\n");
        out.push_str(&format!("  \"unit\": {}\n", self.unit));
        out.push_str("}\n");
        out
    }
}

/// Diagonal map as a generator (used by assertions on set structures).
fn s_diagonal(backend: Backend) -> NatGen {
    let s = backend.base();
    NatGen::new(
        backend,
        TensorWord::plain(1),
        TensorWord::plain(2),
        Payload::Map(FiniteMap::from_fn(s, s * s, |g| g * s + g)),
    )
}

fn parse_field(v: &Value) -> Result<FieldSpec, String> {
    let obj = v.as_object().ok_or("\"field\" must be an object")?;
    let kind = obj.get("kind").and_then(Value::as_str).ok_or("field.kind must be a string")?;
    match kind {
        "Q" => {
            if obj.len() != 1 {
                return Err("field of kind \"Q\" takes no other keys".into());
            }
            Ok(FieldSpec::Q)
        }
        "Fp" => {
            let p = obj
                .get("p")
                .and_then(Value::as_u64)
                .ok_or("field.p must be a positive integer")?;
            if !is_prime(p) {
                return Err(format!("field.p = {p} is not prime"));
            }
            if p >= 1 << 31 {
                return Err(format!("field.p = {p} exceeds the supported modulus bound 2^31"));
            }
            Ok(FieldSpec::Fp(p))
        }
        other => Err(format!("unknown field kind {other:?}")),
    }
}

fn parse_usize(v: &Value, path: &str) -> Result<usize, String> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| format!("{path} must be a non-negative integer"))
}

fn parse_vec(v: &Value, path: &str, len: usize, domain: Domain) -> Result<Vec<Scalar>, String> {
    let arr = v.as_array().ok_or_else(|| format!("{path} must be an array"))?;
    if arr.len() != len {
        return Err(format!("{path} has {} entries, expected {len}", arr.len()));
    }
    arr.iter()
        .enumerate()
        .map(|(i, x)| scalar_from_json(domain, x).map_err(|e| format!("{path}[{i}]: {e}")))
        .collect()
}

fn parse_matrix(
    v: &Value,
    path: &str,
    rows: usize,
    cols: usize,
    domain: Domain,
) -> Result<Vec<Vec<Scalar>>, String> {
    let arr = v.as_array().ok_or_else(|| format!("{path} must be an array"))?;
    if arr.len() != rows {
        return Err(format!("{path} has {} rows, expected {rows}", arr.len()));
    }
    arr.iter()
        .enumerate()
        .map(|(i, row)| parse_vec(row, &format!("{path}[{i}]"), cols, domain))
        .collect()
}

fn parse_cube(
    v: &Value,
    path: &str,
    d: usize,
    domain: Domain,
) -> Result<Vec<Vec<Vec<Scalar>>>, String> {
    let arr = v.as_array().ok_or_else(|| format!("{path} must be an array"))?;
    if arr.len() != d {
        return Err(format!("{path} has {} entries, expected {d}", arr.len()));
    }
    arr.iter()
        .enumerate()
        .map(|(i, plane)| parse_matrix(plane, &format!("{path}[{i}]"), d, d, domain))
        .collect()
}

fn parse_parity(v: &Value, d: usize) -> Result<Vec<u8>, String> {
    let arr = v.as_array().ok_or("parity must be an array")?;
    if arr.len() != d {
        return Err(format!("parity has {} entries, expected {d}", arr.len()));
    }
    arr.iter()
        .enumerate()
        .map(|(i, x)| match x.as_u64() {
            Some(0) => Ok(0),
            Some(1) => Ok(1),
            _ => Err(format!("parity[{i}] must be 0 or 1")),
        })
        .collect()
}

fn inline_scalars(v: &[Scalar]) -> String {
    let parts = v
        .iter()
        .map(|s| serde_json::to_string(&scalar_to_json(s)).expect("scalar json"))
        .collect::<Vec<_>>();
    format!("[{}]", parts.join(", "))
}

fn emit_cube(out: &mut String, key: &str, cube: &[Vec<Vec<Scalar>>]) {
    out.push_str(&format!("  \"{key}\": [\n"));
    for (i, plane) in cube.iter().enumerate() {
        let rows = plane.iter().map(|r| inline_scalars(r)).collect::<Vec<_>>().join(", ");
        let comma = if i + 1 < cube.len() { "," } else { "" };
        out.push_str(&format!("    [{rows}]{comma}\n"));
    }
    out.push_str("  ]");
}

fn emit_matrix(out: &mut String, key: &str, m: &[Vec<Scalar>]) {
    out.push_str(&format!("  \"{key}\": [\n"));
    for (i, row) in m.iter().enumerate() {
        let comma = if i + 1 < m.len() { "," } else { "" };
        out.push_str(&format!("    {}{comma}\n", inline_scalars(row)));
    }
    out.push_str("  ]");
}

#[cfg(test)]
mod tests {
    use super::*;

    const C2_LIKE: &str = r#"{
  "backend": "vect",
  "field": {"kind": "Fp", "p": 2},
  "dim": 2,
  "mul": [
    [[1, 0], [0, 1]],
    [[0, 1], [1, 0]]
  ],
  "unit": [1, 0],
  "comul": [
    [[1, 0], [0, 0]],
    [[0, 0], [0, 1]]
  ],
  "counit": [1, 1]
}
"#;

    #[test]
    fn parse_then_emit_is_identity_on_canonical_files() {
        let spec = InstanceSpec::parse(C2_LIKE).unwrap();
        assert_eq!(spec.emit(), C2_LIKE);
    }

    #[test]
    fn structure_maps_have_expected_shapes() {
        let spec = InstanceSpec::parse(C2_LIKE).unwrap();
        let s = spec.to_structure();
        assert_eq!(s.m.payload.src_size(), 4);
        assert_eq!(s.m.payload.dst_size(), 2);
        assert_eq!(s.delta.payload.src_size(), 2);
        assert_eq!(s.delta.payload.dst_size(), 4);
        assert_eq!(s.tau, plain_swap(s.backend));
        // g*g = 1: column 3 of m is e_0.
        let Payload::Mat(m) = &s.m.payload else { unreachable!() };
        assert!(m.get(0, 3).is_one());
        assert!(m.get(1, 3).is_zero());
    }

    #[test]
    fn round_trip_via_from_structure() {
        let spec = InstanceSpec::parse(C2_LIKE).unwrap();
        let s = spec.to_structure();
        let back = VectSpec::from_structure(&s);
        assert_eq!(InstanceSpec::Vect(back), spec);
    }

    #[test]
    fn parse_errors_carry_paths() {
        let bad = C2_LIKE.replace("\"unit\": [1, 0]", "\"unit\": [1, 0, 0]");
        let err = InstanceSpec::parse(&bad).unwrap_err();
        assert!(err.to_string().contains("unit has 3 entries, expected 2"), "{err}");

        let bad = C2_LIKE.replace("{\"kind\": \"Fp\", \"p\": 2}", "{\"kind\": \"Fp\", \"p\": 6}");
        let err = InstanceSpec::parse(&bad).unwrap_err();
        assert!(err.to_string().contains("not prime"), "{err}");

        let bad = C2_LIKE.replace("\"counit\": [1, 1]", "\"counit\": [1, 1],\n  \"bogus\": 3");
        let err = InstanceSpec::parse(&bad).unwrap_err();
        assert!(err.to_string().contains("unknown field \"bogus\""), "{err}");
    }

    #[test]
    fn parity_and_braiding_are_exclusive() {
        let bad = C2_LIKE.replace(
            "\"counit\": [1, 1]",
            "\"counit\": [1, 1],\n  \"parity\": [0, 1],\n  \"braiding\": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]",
        );
        let err = InstanceSpec::parse(&bad).unwrap_err();
        assert!(err.to_string().contains("mutually exclusive"), "{err}");
    }

    #[test]
    fn set_spec_round_trip() {
        let text = "{\n  \"backend\": \"set\",\n  \"size\": 2,\n  \"table\": [\n    [0, 1],\n    [1, 1]\n  ],\n  \"unit\": 0\n}\n";
        let spec = InstanceSpec::parse(text).unwrap();
        assert_eq!(spec.emit(), text);
        let s = spec.to_structure();
        let InstanceSpec::Set(orig) = &spec else { unreachable!() };
        assert_eq!(&SetSpec::from_structure(&s), orig);
    }

    #[test]
    fn super_swap_signs() {
        let backend = Backend::Vect { field: FieldSpec::Fp(3), dim: 2 };
        let t = super_swap(backend, &[0, 1]);
        let Payload::Mat(m) = &t.payload else { unreachable!() };
        // e_1 (x) e_1 -> -(e_1 (x) e_1): entry (3,3) = -1 = 2 mod 3.
        assert_eq!(m.get(3, 3), &Domain::Fp(3).from_i64(-1));
        // e_0 (x) e_1 -> +(e_1 (x) e_0): entry (2,1) = 1.
        assert!(m.get(2, 1).is_one());
    }
}
