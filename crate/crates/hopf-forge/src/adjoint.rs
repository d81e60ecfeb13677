//! Adjunctions and the mate calculus: the concrete adjunctions B⊗− ⊣ B*⊗−
//! (vector backend) and G×− ⊣ Map(G,−) (set backend), transfer of monads,
//! comonads, bimonads, braidings and antipodes to the right adjoint, dual
//! structure constants, the group characterization of set-backend Hopf
//! structures, and probe-based spot checks of the Map(G,−) side.
//!
//! Index convention: the dual basis is indexed identically to the original
//! basis; dualizing a multi-factor map transposes the matrix and reverses
//! the tensor factors, and that reversal is applied explicitly everywhere.

use crate::bimonad::{compute_antipode, gamma, payload_item, AntipodeOutcome, BimonadData};
use crate::monad::{check_comonad, check_comonad_to_monad, check_monad, word, ComonadData, MonadData};
use crate::pipeline::CheckConfig;
use crate::report::CheckItem;
use crate::tau::{bimonad_from_tau, check_tau_bimonad, check_yang_baxter, tau_entwining};
use crate::word::{Backend, NatGen, Payload, TensorWord};
use crate::EngineError;

/// Largest probe component size |a|^|G| accepted by probe evaluations.
const PROBE_BUDGET: usize = 200_000;

/// Reverses the base-`base` digits of a word index of the given arity.
pub(crate) fn rev_index(idx: usize, base: usize, arity: usize) -> usize {
    let mut rest = idx;
    let mut out = 0;
    for _ in 0..arity {
        out = out * base + rest % base;
        rest /= base;
    }
    out
}

/// One concrete adjunction: unit and counit are stored explicitly for the
/// vector backend (coevaluation `1 → B*⊗B` and evaluation `B⊗B* → 1` on
/// dual-basis words); the set adjunction G×− ⊣ Map(G,−) keeps no global
/// data and is exercised through probes.
#[derive(Debug, Clone)]
pub struct AdjunctionData {
    pub backend: Backend,
    pub eta: Option<Payload>,
    pub eps: Option<Payload>,
}

/// Builds the adjunction B⊗− ⊣ B*⊗− from the dual basis and checks both
/// triangle identities exactly.
pub fn tensor_hom_adjunction(backend: Backend) -> Result<(AdjunctionData, Vec<CheckItem>), EngineError> {
    let Backend::Vect { field, dim: d } = backend else {
        return Err(EngineError::Precondition("tensor_hom_adjunction requires the vector backend".to_string()));
    };
    let dom = field.domain();
    let eta = Payload::Mat(crate::matrix::ExactMatrix::from_fn(d * d, 1, dom, |r, _| {
        if r / d == r % d { dom.one() } else { dom.zero() }
    }));
    let eps = Payload::Mat(crate::matrix::ExactMatrix::from_fn(1, d * d, dom, |_, c| {
        if c / d == c % d { dom.one() } else { dom.zero() }
    }));
    let id_d = Payload::identity(backend, d);
    let single = TensorWord::plain(1);
    let items = vec![
        // (εL)·(Lη) = id_L
        payload_item(
            "adj.triangle.left",
            "adj.nat",
            backend,
            single,
            single,
            &eps.tensor(&id_d).after(&id_d.tensor(&eta)),
            &id_d,
        ),
        // (Rε)·(ηR) = id_R
        payload_item(
            "adj.triangle.right",
            "adj.nat",
            backend,
            single,
            single,
            &id_d.tensor(&eps).after(&eta.tensor(&id_d)),
            &id_d,
        ),
    ];
    Ok((AdjunctionData { backend, eta: Some(eta), eps: Some(eps) }, items))
}

/// Builds the adjunction G×− ⊣ Map(G,−) and checks both triangle identities
/// pointwise at probe objects of size 1..=3.
pub fn set_adjunction(backend: Backend) -> Result<(AdjunctionData, Vec<CheckItem>), EngineError> {
    let Backend::Set { size: d } = backend else {
        return Err(EngineError::Precondition("set_adjunction requires the set backend".to_string()));
    };
    let mut items = Vec::new();
    for n in 1usize..=3 {
        // (εL)·(Lη) = id at a, executed stage by stage on every point of
        // G × a: the unit sends x to the tabulated function g' ↦ (g', x),
        // the counit evaluates a pair (g, f) to f(g).
        let left_ok = (0..d * n).all(|gx| {
            let (g, x) = (gx / n, gx % n);
            let after_unit: (usize, Vec<(usize, usize)>) = (g, (0..d).map(|gp| (gp, x)).collect());
            let after_counit = after_unit.1[after_unit.0];
            after_counit == (g, x)
        });
        items.push(probe_item(&format!("adj.triangle.left.probe{n}"), "adj.nat", left_ok, None));
        // (Rε)·(ηR) = id at a, executed on every function f: G → a: the
        // unit tabulates g ↦ (g, f), the counit evaluates each pair.
        let total = n.checked_pow(d as u32).filter(|&t| t <= PROBE_BUDGET).ok_or_else(|| {
            EngineError::Precondition(format!("probe budget exceeded: {n}^{d} functions"))
        })?;
        let right_ok = (0..total).all(|code| {
            let f = decode_function(code, d, n);
            let after_unit: Vec<(usize, &Vec<usize>)> = (0..d).map(|g| (g, &f)).collect();
            let after_counit: Vec<usize> = after_unit.iter().map(|(g, h)| h[*g]).collect();
            after_counit == f
        });
        items.push(probe_item(&format!("adj.triangle.right.probe{n}"), "adj.nat", right_ok, None));
    }
    Ok((AdjunctionData { backend, eta: None, eps: None }, items))
}

fn probe_item(id: &str, label: &'static str, ok: bool, note: Option<String>) -> CheckItem {
    let mut item = CheckItem::pass(id, label);
    item.ok = ok;
    item.note = note;
    item
}

/// Decodes a function G → a (|G| = d digits base n, position 0 = element 0).
fn decode_function(code: usize, d: usize, n: usize) -> Vec<usize> {
    let mut rest = code;
    (0..d)
        .map(|_| {
            let v = rest % n;
            rest /= n;
            v
        })
        .collect()
}

/// The mate of a transformation between powers of the left adjoint: a
/// transformation between the corresponding powers of the right adjoint.
#[derive(Debug, Clone, PartialEq)]
pub struct MateResult {
    pub backend: Backend,
    /// Number of right-adjoint factors in the mate's source (= the arity of
    /// the original target word).
    pub src_arity: usize,
    /// Number of right-adjoint factors in the mate's target.
    pub dst_arity: usize,
    /// Vector backend: the honest matrix of the mate on dual-basis words
    /// (`base^src_arity → base^dst_arity`). Set backend: the map
    /// `G^dst_arity → G^src_arity` representing the mate under the Yoneda
    /// embedding (the mate sends `f ↦ f ∘ h`).
    pub payload: Payload,
}

/// Core index transform shared by both mate directions: transpose with
/// explicit factor reversal (matrices), or conjugation by factor reversal
/// (representing maps).
pub(crate) fn mate_payload(backend: Backend, p: &Payload, src_arity: usize, dst_arity: usize) -> Payload {
    let d = backend.base();
    match p {
        Payload::Mat(a) => {
            assert_eq!((a.rows, a.cols), (d.pow(dst_arity as u32), d.pow(src_arity as u32)), "shape mismatch");
            let dom = a.domain;
            Payload::Mat(crate::matrix::ExactMatrix::from_fn(a.cols, a.rows, dom, |r, c| {
                a.get(rev_index(c, d, dst_arity), rev_index(r, d, src_arity)).clone()
            }))
        }
        Payload::Map(f) => {
            assert_eq!((f.source, f.target), (d.pow(src_arity as u32), d.pow(dst_arity as u32)), "shape mismatch");
            Payload::Map(crate::finmap::FiniteMap::from_fn(f.source, f.target, |x| {
                rev_index(f.apply(rev_index(x, d, src_arity)), d, dst_arity)
            }))
        }
    }
}

/// Computes the mate of `alpha : L^j → L^k` under the adjunction: the
/// transformation `R^k → R^j` on the right-adjoint side.
pub fn mate(alpha: &NatGen, adj: &AdjunctionData) -> MateResult {
    assert_eq!(alpha.backend, adj.backend, "backend mismatch");
    assert!(alpha.src.carrier.is_none() && alpha.dst.carrier.is_none(), "mates are taken of carrierless generators");
    let (j, k) = (alpha.src.arity, alpha.dst.arity);
    MateResult {
        backend: alpha.backend,
        src_arity: k,
        dst_arity: j,
        payload: mate_payload(alpha.backend, &alpha.payload, j, k),
    }
}

impl MateResult {
    /// The inverse transfer: the mate of this right-adjoint transformation
    /// is again a transformation between powers of the left adjoint.
    pub fn mate_back(&self, adj: &AdjunctionData) -> NatGen {
        assert_eq!(self.backend, adj.backend, "backend mismatch");
        let (src, dst) = (self.dst_arity, self.src_arity);
        let payload = match self.payload {
            // The honest matrix has shape base^src_arity → base^dst_arity.
            Payload::Mat(_) => mate_payload(self.backend, &self.payload, self.src_arity, self.dst_arity),
            // The representing map has the original orientation already.
            Payload::Map(_) => mate_payload(self.backend, &self.payload, self.dst_arity, self.src_arity),
        };
        NatGen::new(self.backend, TensorWord::plain(src), TensorWord::plain(dst), payload)
    }

    /// Vector backend: the mate as an honest generator on dual-basis words.
    pub fn gen_on_dual(&self) -> NatGen {
        assert!(matches!(self.payload, Payload::Mat(_)), "gen_on_dual requires the vector backend");
        NatGen::new(
            self.backend,
            TensorWord::plain(self.src_arity),
            TensorWord::plain(self.dst_arity),
            self.payload.clone(),
        )
    }

    /// Set backend: the Yoneda representative of the mate as a generator
    /// between powers of the left adjoint.
    pub fn representing_gen(&self) -> NatGen {
        assert!(matches!(self.payload, Payload::Map(_)), "representing_gen requires the set backend");
        NatGen::new(
            self.backend,
            TensorWord::plain(self.dst_arity),
            TensorWord::plain(self.src_arity),
            self.payload.clone(),
        )
    }
}

fn require_vect(adj: &AdjunctionData, what: &str) -> Result<(), EngineError> {
    if adj.backend.is_vect() {
        Ok(())
    } else {
        Err(EngineError::Precondition(format!("{what} requires the vector backend")))
    }
}

fn relabel(items: Vec<CheckItem>, prefix: &str, label: &'static str) -> Vec<CheckItem> {
    items.into_iter().map(|c| CheckItem { id: format!("{prefix}{}", c.id), label, ..c }).collect()
}

fn prefix_ids(items: Vec<CheckItem>, prefix: &str) -> Vec<CheckItem> {
    items.into_iter().map(|c| CheckItem { id: format!("{prefix}{}", c.id), ..c }).collect()
}

/// The comonad on the right adjoint of a monad: comultiplication and counit
/// are the mates of the multiplication and unit. The comonad laws are
/// re-checked exhaustively on the dual side.
pub fn adjoint_comonad(
    monad: &MonadData,
    adj: &AdjunctionData,
    cfg: &CheckConfig,
) -> Result<(ComonadData, Vec<CheckItem>), EngineError> {
    require_vect(adj, "adjoint_comonad")?;
    let comul = mate(&monad.mul, adj).gen_on_dual();
    let counit = mate(&monad.unit, adj).gen_on_dual();
    let comonad = ComonadData::new(comul, counit);
    let items = relabel(check_comonad(&comonad, cfg)?, "adjoint.", "adj.mon.com");
    Ok((comonad, items))
}

/// The monad on the right adjoint of a comonad: multiplication and unit are
/// the mates of the comultiplication and counit.
pub fn adjoint_monad(
    comonad: &ComonadData,
    adj: &AdjunctionData,
    cfg: &CheckConfig,
) -> Result<(MonadData, Vec<CheckItem>), EngineError> {
    require_vect(adj, "adjoint_monad")?;
    let mul = mate(&comonad.comul, adj).gen_on_dual();
    let unit = mate(&comonad.counit, adj).gen_on_dual();
    let monad = MonadData::new(mul, unit);
    let items = relabel(check_monad(&monad, cfg)?, "adjoint.", "adj.mon.com");
    Ok((monad, items))
}

/// The full structure transferred to the right adjoint, with its
/// verification suite.
#[derive(Debug, Clone)]
pub struct AdjointBimonad {
    pub monad: MonadData,
    pub comonad: ComonadData,
    pub tau: NatGen,
    pub lam: NatGen,
    pub items: Vec<CheckItem>,
}

impl AdjointBimonad {
    pub fn bimonad(&self) -> BimonadData {
        BimonadData::new(self.monad.clone(), self.comonad.clone(), self.lam.clone())
    }
}

/// Transfers a τ-bimonad to the right adjoint: the dual monad and comonad
/// are the mates of the comonad and monad, the braiding is the mate of the
/// braiding, and the entwining is induced from the transferred braiding.
///
/// Items: the full bimonad suite on the dual side, a check that the mate of
/// the original entwining `τ̃` is a comonad-to-monad distributive law on the
/// dual side, and a check that the dual entwining equals the mate of the
/// co-induced entwining `τ̃′ = Hm·τH·Hδ`.
pub fn adjoint_bimonad(
    monad: &MonadData,
    comonad: &ComonadData,
    tau: &NatGen,
    adj: &AdjunctionData,
    cfg: &CheckConfig,
) -> Result<AdjointBimonad, EngineError> {
    require_vect(adj, "adjoint_bimonad")?;
    let b = adj.backend;
    let r_monad = MonadData::new(mate(&comonad.comul, adj).gen_on_dual(), mate(&comonad.counit, adj).gen_on_dual());
    let r_comonad = ComonadData::new(mate(&monad.mul, adj).gen_on_dual(), mate(&monad.unit, adj).gen_on_dual());
    let tau_r = mate(tau, adj).gen_on_dual();
    let lam_r = tau_entwining(&r_monad, &r_comonad, &tau_r, cfg)?;
    let r_bimonad = BimonadData::new(r_monad.clone(), r_comonad.clone(), lam_r.clone());
    let mut items = prefix_ids(crate::bimonad::check_bimonad(&r_bimonad, cfg)?, "adjoint.");
    let valid = items.iter().all(|c| c.ok);
    items.push(probe_item("adj.bimonad.valid", "adj.bim", valid, None));

    // The mate of the original entwining τ̃ is a mixed law from the dual
    // comonad to the dual monad.
    let lam_h = tau_entwining(monad, comonad, tau, cfg)?;
    let lam_h_mate = mate(&lam_h, adj).gen_on_dual();
    items.extend(relabel(
        check_comonad_to_monad(&lam_h_mate, &r_comonad, &r_monad, cfg)?,
        "adj.",
        "adj.dist",
    ));

    // The dual entwining equals the mate of τ̃′ = Hm·τH·Hδ.
    let co_induced = word(b, 2).step(1, &comonad.comul, 0).step(0, tau, 1).step(1, &monad.mul, 0).materialize(cfg)?;
    let co_mate = mate(&co_induced, adj).gen_on_dual();
    items.push(payload_item(
        "adj.entwining.route",
        "adj.tau",
        b,
        TensorWord::plain(2),
        TensorWord::plain(2),
        &lam_r.payload,
        &co_mate.payload,
    ));
    Ok(AdjointBimonad { monad: r_monad, comonad: r_comonad, tau: tau_r, lam: lam_r, items })
}

/// Transfers a braiding to the right adjoint and re-runs the full τ-bimonad
/// suite there, including the Yang–Baxter equivalence (τ satisfies it if
/// and only if its mate does).
pub fn tau_transfer(
    monad: &MonadData,
    comonad: &ComonadData,
    tau: &NatGen,
    adj: &AdjunctionData,
    cfg: &CheckConfig,
) -> Result<AdjointBimonad, EngineError> {
    require_vect(adj, "tau_transfer")?;
    let transferred = adjoint_bimonad(monad, comonad, tau, adj, cfg)?;
    let mut items = prefix_ids(
        check_tau_bimonad(&transferred.monad, &transferred.comonad, &transferred.tau, cfg)?,
        "adjoint.",
    );
    let yb_l = check_yang_baxter(tau, cfg)?;
    let yb_r = check_yang_baxter(&transferred.tau, cfg)?;
    let equiv = yb_l.ok == yb_r.ok;
    items.push(probe_item(
        "adj.yang.equiv",
        "adj.dist",
        equiv,
        Some(format!("Yang-Baxter on the left adjoint: {}; on the right adjoint: {}", yb_l.ok, yb_r.ok)),
    ));
    items.extend(transferred.items.clone());
    Ok(AdjointBimonad { items, ..transferred })
}

/// Checks that having an antipode transfers across the adjunction: the
/// canonical maps of both sides are inverted independently and must agree
/// on invertibility; when both are invertible the antipode is transferred
/// by the mate construction and re-verified on the dual side.
pub fn antipode_transfer_check(
    monad: &MonadData,
    comonad: &ComonadData,
    tau: &NatGen,
    adj: &AdjunctionData,
    cfg: &CheckConfig,
) -> Result<Vec<CheckItem>, EngineError> {
    require_vect(adj, "antipode_transfer_check")?;
    let h = bimonad_from_tau(monad, comonad, tau, cfg)?;
    let transferred = adjoint_bimonad(monad, comonad, tau, adj, cfg)?;
    let r = transferred.bimonad();
    let (pair_l, _) = gamma(&h, cfg)?;
    let (pair_r, _) = gamma(&r, cfg)?;
    let inv_l = pair_l.beta.is_some();
    let inv_r = pair_r.beta.is_some();
    let mut note = format!("canonical map invertible on the left adjoint: {inv_l}; on the right adjoint: {inv_r}");
    if let Some(c) = &pair_l.gamma_failure {
        note.push_str(&format!("; left: {}", c.evidence));
    }
    if let Some(c) = &pair_r.gamma_failure {
        note.push_str(&format!("; right: {}", c.evidence));
    }
    let mut items = vec![probe_item("adj.antipode.equiv", "adj.Hopf", inv_l == inv_r, Some(note))];
    if inv_l && inv_r {
        let AntipodeOutcome::Found(cand) = compute_antipode(&h, cfg)? else {
            return Err(EngineError::Precondition("canonical map invertible but antipode construction failed".into()));
        };
        let s_r = mate(&cand.s, adj).gen_on_dual();
        let dual_cand = crate::bimonad::check_antipode(&r, &s_r, cfg)?;
        items.extend(relabel(dual_cand.items, "adjoint.", "adj.Hopf"));
    }
    Ok(items)
}

/// The dual structure constants, built by direct transposition with factor
/// reversal, asserted against the mate route, with the full τ suite re-run
/// on the dual.
#[derive(Debug, Clone)]
pub struct DualStructure {
    pub monad: MonadData,
    pub comonad: ComonadData,
    pub tau: NatGen,
    pub antipode: Option<NatGen>,
    pub items: Vec<CheckItem>,
}

/// Dualizes vector-backend structure constants: multiplication is the
/// transpose of the comultiplication (with factor reversal), and so on,
/// per the dual-basis convention. Agreement with the mate route is asserted
/// map by map.
pub fn dualize(
    monad: &MonadData,
    comonad: &ComonadData,
    tau: &NatGen,
    antipode: Option<&NatGen>,
    cfg: &CheckConfig,
) -> Result<DualStructure, EngineError> {
    let b = monad.backend();
    let Backend::Vect { field, dim: d } = b else {
        return Err(EngineError::Precondition("dualize requires the vector backend".to_string()));
    };
    let dom = field.domain();
    let get = |p: &Payload| match p {
        Payload::Mat(m) => m.clone(),
        Payload::Map(_) => unreachable!("vector backend"),
    };
    let (m, e) = (get(&monad.mul.payload), get(&monad.unit.payload));
    let (dl, eps) = (get(&comonad.comul.payload), get(&comonad.counit.payload));
    let t = get(&tau.payload);
    let rev2 = |i: usize| (i % d) * d + i / d;
    // mul*[i, (a,b)] = comul[(b,a), i]
    let mul_star = crate::matrix::ExactMatrix::from_fn(d, d * d, dom, |r, c| dl.get(rev2(c), r).clone());
    // comul*[(a,b), i] = mul[i, (b,a)]
    let comul_star = crate::matrix::ExactMatrix::from_fn(d * d, d, dom, |r, c| m.get(c, rev2(r)).clone());
    // unit* = counitᵀ, counit* = unitᵀ
    let unit_star = crate::matrix::ExactMatrix::from_fn(d, 1, dom, |r, _| eps.get(0, r).clone());
    let counit_star = crate::matrix::ExactMatrix::from_fn(1, d, dom, |_, c| e.get(c, 0).clone());
    // tau*[(c,d'), (a,b)] = tau[(b,a), (d',c)]
    let tau_star = crate::matrix::ExactMatrix::from_fn(d * d, d * d, dom, |r, c| t.get(rev2(c), rev2(r)).clone());

    let single = TensorWord::plain(1);
    let pair = TensorWord::plain(2);
    let dual_monad = MonadData::new(
        NatGen::new(b, pair, single, Payload::Mat(mul_star)),
        NatGen::new(b, TensorWord::plain(0), single, Payload::Mat(unit_star)),
    );
    let dual_comonad = ComonadData::new(
        NatGen::new(b, single, pair, Payload::Mat(comul_star)),
        NatGen::new(b, single, TensorWord::plain(0), Payload::Mat(counit_star)),
    );
    let dual_tau = NatGen::new(b, pair, pair, Payload::Mat(tau_star));
    let dual_antipode = antipode.map(|s| {
        let s_star = get(&s.payload).transpose();
        NatGen::new(b, single, single, Payload::Mat(s_star))
    });

    let (adj, _) = tensor_hom_adjunction(b)?;
    let mut items = vec![
        payload_item(
            "dual.mul.agrees",
            "Hopf-dual",
            b,
            pair,
            single,
            &dual_monad.mul.payload,
            &mate(&comonad.comul, &adj).payload,
        ),
        payload_item(
            "dual.comul.agrees",
            "Hopf-dual",
            b,
            single,
            pair,
            &dual_comonad.comul.payload,
            &mate(&monad.mul, &adj).payload,
        ),
        payload_item(
            "dual.unit.agrees",
            "Hopf-dual",
            b,
            TensorWord::plain(0),
            single,
            &dual_monad.unit.payload,
            &mate(&comonad.counit, &adj).payload,
        ),
        payload_item(
            "dual.counit.agrees",
            "Hopf-dual",
            b,
            single,
            TensorWord::plain(0),
            &dual_comonad.counit.payload,
            &mate(&monad.unit, &adj).payload,
        ),
        payload_item("dual.tau.agrees", "Hopf-dual", b, pair, pair, &dual_tau.payload, &mate(tau, &adj).payload),
    ];
    if let (Some(ds), Some(s)) = (&dual_antipode, antipode) {
        items.push(payload_item("dual.antipode.agrees", "Hopf-dual", b, single, single, &ds.payload, &mate(s, &adj).payload));
    }
    items.extend(prefix_ids(check_tau_bimonad(&dual_monad, &dual_comonad, &dual_tau, cfg)?, "dual."));
    Ok(DualStructure { monad: dual_monad, comonad: dual_comonad, tau: dual_tau, antipode: dual_antipode, items })
}

/// Two inputs of the canonical map (g, h) ↦ (g, gh) sharing one image —
/// concrete evidence that the map is not a bijection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Collision {
    pub first: (usize, usize),
    pub second: (usize, usize),
    pub image: (usize, usize),
}

impl std::fmt::Display for Collision {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({},{}) and ({},{}) both map to ({},{})",
            self.first.0, self.first.1, self.second.0, self.second.1, self.image.0, self.image.1
        )
    }
}

/// Verdict of the group characterization: a finite monoid is a group if and
/// only if the canonical map (g, h) ↦ (g, gh) of its set-backend structure
/// is a bijection.
#[derive(Debug, Clone)]
pub struct GroupVerdict {
    pub is_group: bool,
    /// A collision of the canonical map when it is not bijective.
    pub collision: Option<Collision>,
    pub items: Vec<CheckItem>,
}

/// Runs the group characterization on a monoid table (row-major, `n × n`).
/// The table must be associative with a two-sided unit; the canonical-map
/// verdict is cross-checked against a direct two-sided-inverse search.
pub fn group_check(table: &[usize], n: usize) -> Result<GroupVerdict, EngineError> {
    if n == 0 || table.len() != n * n || table.iter().any(|&v| v >= n) {
        return Err(EngineError::Precondition(format!("not an {n}x{n} multiplication table")));
    }
    let mul = |a: usize, b: usize| table[a * n + b];
    let unit = (0..n)
        .find(|&u| (0..n).all(|x| mul(u, x) == x && mul(x, u) == x))
        .ok_or_else(|| EngineError::Precondition("table has no two-sided unit".to_string()))?;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                    return Err(EngineError::Precondition(format!(
                        "table is not associative at ({a},{b},{c})"
                    )));
                }
            }
        }
    }

    let b = Backend::Set { size: n };
    let single = TensorWord::plain(1);
    let monad = MonadData::new(
        NatGen::new(b, TensorWord::plain(2), single, Payload::Map(crate::finmap::FiniteMap::from_fn(n * n, n, |i| mul(i / n, i % n)))),
        NatGen::new(b, TensorWord::plain(0), single, Payload::Map(crate::finmap::FiniteMap::from_fn(1, n, |_| unit))),
    );
    let comonad = ComonadData::new(
        NatGen::new(b, single, TensorWord::plain(2), Payload::Map(crate::finmap::FiniteMap::from_fn(n, n * n, |g| g * n + g))),
        NatGen::new(b, single, TensorWord::plain(0), Payload::Map(crate::finmap::FiniteMap::from_fn(n, 1, |_| 0))),
    );
    let cfg = CheckConfig::default();
    let tau = crate::instance::plain_swap(b);
    let h = bimonad_from_tau(&monad, &comonad, &tau, &cfg).map_err(EngineError::Calc)?;
    let (pair, _) = gamma(&h, &cfg).map_err(EngineError::Calc)?;
    let canonical_bijective = pair.beta.is_some();
    let collision = if canonical_bijective {
        None
    } else {
        // Extract the first duplicate image from the canonical map's table.
        let Payload::Map(g_map) = &pair.gamma.payload else { unreachable!("set backend") };
        let mut seen = vec![None; n * n];
        let mut found = None;
        for (i, &img) in g_map.table().iter().enumerate() {
            match seen[img] {
                Some(j) => {
                    found = Some(Collision {
                        first: (j / n, j % n),
                        second: (i / n, i % n),
                        image: (img / n, img % n),
                    });
                    break;
                }
                None => seen[img] = Some(i),
            }
        }
        Some(found.expect("a non-bijective self-map has a duplicate image"))
    };

    // Independent oracle: every element has a two-sided inverse.
    let oracle_group = (0..n).all(|g| (0..n).any(|x| mul(g, x) == unit && mul(x, g) == unit));

    let items = vec![
        probe_item(
            "group.canonical",
            "Hopf-group",
            canonical_bijective == oracle_group,
            Some(match &collision {
                Some(c) => format!("canonical map not bijective: {c}"),
                None => "canonical map is a bijection".to_string(),
            }),
        ),
        probe_item(
            "group.oracle",
            "Hopf-group",
            canonical_bijective == oracle_group,
            Some(format!("inverse-search oracle says group: {oracle_group}")),
        ),
    ];
    Ok(GroupVerdict { is_group: canonical_bijective, collision, items })
}

/// Pointwise spot checks of the transferred structure on Map(G,−) at probe
/// objects: comonad laws for the transferred comultiplication, monad laws
/// for the transferred multiplication, and naturality squares against
/// pseudorandom test functions.
pub fn map_functor_probe(
    monad: &MonadData,
    comonad: &ComonadData,
    probes: &[usize],
) -> Result<Vec<CheckItem>, EngineError> {
    let Backend::Set { size: d } = monad.backend() else {
        return Err(EngineError::Precondition("map_functor_probe requires the set backend".to_string()));
    };
    let mul = match &monad.mul.payload {
        Payload::Map(f) => f.clone(),
        _ => unreachable!(),
    };
    let unit = match &monad.unit.payload {
        Payload::Map(f) => f.apply(0),
        _ => unreachable!(),
    };
    let comul = match &comonad.comul.payload {
        Payload::Map(f) => f.clone(),
        _ => unreachable!(),
    };
    // Representing maps of the transferred structure: the comultiplication
    // on Map(G,−) is represented by rev∘m∘rev, the multiplication by
    // rev∘δ∘rev, the counit by the unit element, the unit by the terminal
    // map.
    let h_comul: Vec<usize> = (0..d * d).map(|i| mul.apply(rev_index(i, d, 2))).collect();
    let h_mul: Vec<usize> = (0..d).map(|g| rev_index(comul.apply(g), d, 2)).collect();

    let mut items = Vec::new();
    let mut rng: u64 = 0x9e3779b97f4a7c15;
    let mut next = move || {
        rng ^= rng << 13;
        rng ^= rng >> 7;
        rng ^= rng << 17;
        rng
    };
    for &n in probes {
        let total = n.checked_pow(d as u32).filter(|&t| t <= PROBE_BUDGET).ok_or_else(|| {
            EngineError::Precondition(format!("probe budget exceeded: {n}^{d} functions at probe size {n}"))
        })?;
        let sample: Vec<Vec<usize>> = if total <= 4096 {
            (0..total).map(|code| decode_function(code, d, n)).collect()
        } else {
            (0..64).map(|_| (0..d).map(|_| (next() as usize) % n).collect()).collect()
        };
        // Transferred comultiplication: δ_R(f) = f ∘ h_comul as a function
        // on G², flattened with the outer factor most significant.
        let coassoc = sample.iter().all(|f| {
            (0..d).all(|g1| {
                (0..d).all(|g2| {
                    (0..d).all(|g3| {
                        // (δ_R ⊗ R)(δ_R f) at (g1, g2, g3) vs (R ⊗ δ_R)(δ_R f).
                        let left = f[h_comul[h_comul[g1 * d + g2] * d + g3]];
                        let right = f[h_comul[g1 * d + h_comul[g2 * d + g3]]];
                        left == right
                    })
                })
            })
        });
        items.push(probe_item(&format!("probe.coassoc.n{n}"), "adj.mon.com", coassoc, None));
        let counit = sample.iter().all(|f| {
            (0..d).all(|g| f[h_comul[unit * d + g]] == f[g] && f[h_comul[g * d + unit]] == f[g])
        });
        items.push(probe_item(&format!("probe.counit.n{n}"), "adj.mon.com", counit, None));
        // Transferred multiplication on Map(G,−): m_R(F)(g) = F(h_mul(g))
        // for F: G² → a; associativity and unit laws pointwise.
        let assoc = {
            let sample_f3: Vec<Vec<usize>> =
                (0..16).map(|_| (0..d * d * d).map(|_| (next() as usize) % n).collect()).collect();
            sample_f3.iter().all(|big| {
                (0..d).all(|g| {
                    let gg = h_mul[g];
                    let (a, bb) = (gg / d, gg % d);
                    let left = big[a * d * d + h_mul[bb]];
                    let inner = h_mul[a];
                    let right = big[(inner / d) * d * d + (inner % d) * d + bb];
                    left == right
                })
            })
        };
        items.push(probe_item(&format!("probe.assoc.n{n}"), "adj.mon.com", assoc, None));
        let unit_laws = sample.iter().all(|f| {
            (0..d).all(|g| {
                let gg = h_mul[g];
                let (a, bb) = (gg / d, gg % d);
                // e_R on the outer factor: F(g1, g2) = f(g2); on the inner:
                // F(g1, g2) = f(g1).
                f[bb] == f[g] && f[a] == f[g]
            })
        });
        items.push(probe_item(&format!("probe.unit.n{n}"), "adj.mon.com", unit_laws, None));
        // Naturality spot check: for pseudorandom φ : a → a and f : G → a,
        // the two routes around the square Map(G,φ) / transferred
        // comultiplication produce the same table on G².
        let natural = (0..8).all(|_| {
            let f: Vec<usize> = (0..d).map(|_| (next() as usize) % n).collect();
            let phi: Vec<usize> = (0..n).map(|_| (next() as usize) % n).collect();
            let route_a: Vec<usize> = {
                let delta_f: Vec<usize> = (0..d * d).map(|i| f[h_comul[i]]).collect();
                delta_f.iter().map(|&v| phi[v]).collect()
            };
            let route_b: Vec<usize> = {
                let phi_f: Vec<usize> = f.iter().map(|&v| phi[v]).collect();
                (0..d * d).map(|i| phi_f[h_comul[i]]).collect()
            };
            route_a == route_b
        });
        items.push(probe_item(&format!("probe.natural.n{n}"), "adj.mon.com", natural, None));
    }
    Ok(items)
}
