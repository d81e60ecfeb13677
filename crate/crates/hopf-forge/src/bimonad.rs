//! Bimonads: a monad and comonad structure on the same generator tied
//! together by a mixed distributive law, plus everything downstream of that
//! compatibility — the canonical maps γ and γ′, antipode computation with
//! falsifiable failure certificates, Hopf modules, the free-module
//! comparison construction, coinvariants through split idempotents, and the
//! fundamental equivalence checks.

use serde::Serialize;

use crate::monad::{
    check_comodule, check_comonad, check_module, check_monad, check_monad_to_comonad,
    comodule_morphism_witness, diagram, module_morphism_witness, word, word_on, ComonadData, ComoduleData, ModuleData,
    MonadData,
};
use crate::pipeline::{CalcError, CheckConfig};
use crate::report::CheckItem;
use crate::word::{render_image, render_sparse, Backend, NatGen, Payload, PointWitness, TensorWord};

/// A bimonad: monad + comonad + mixed law `λ: TG → GT` subject to the
/// product/coproduct square and the three unit/counit squares.
#[derive(Debug, Clone)]
pub struct BimonadData {
    pub monad: MonadData,
    pub comonad: ComonadData,
    pub lam: NatGen,
}

impl BimonadData {
    pub fn new(monad: MonadData, comonad: ComonadData, lam: NatGen) -> BimonadData {
        assert_eq!(monad.backend(), comonad.backend(), "backend mismatch");
        assert_eq!(lam.backend, monad.backend(), "backend mismatch");
        assert_eq!(
            (lam.src, lam.dst),
            (TensorWord::plain(2), TensorWord::plain(2)),
            "mixed law must have shape 2 -> 2"
        );
        BimonadData { monad, comonad, lam }
    }

    pub fn backend(&self) -> Backend {
        self.lam.backend
    }
}

/// Compares two carrier-level payloads and shapes the first difference into
/// a witness.
pub(crate) fn payload_item(
    id: &str,
    label: &'static str,
    backend: Backend,
    src: TensorWord,
    dst: TensorWord,
    lhs: &Payload,
    rhs: &Payload,
) -> CheckItem {
    let witness = lhs.first_difference(rhs).map(|idx| PointWitness {
        input: src.render_index(backend, idx),
        lhs: render_image(lhs, dst, backend, idx),
        rhs: render_image(rhs, dst, backend, idx),
    });
    CheckItem::new(id, label, witness)
}

/// Full law suite for a bimonad: monad laws, comonad laws, the four mixed
/// distributive-law diagrams, the product/coproduct compatibility square,
/// and the three unit/counit squares.
pub fn check_bimonad(h: &BimonadData, cfg: &CheckConfig) -> Result<Vec<CheckItem>, CalcError> {
    let b = h.backend();
    let (m, e) = (&h.monad.mul, &h.monad.unit);
    let (d, eps) = (&h.comonad.comul, &h.comonad.counit);
    let mut items = check_monad(&h.monad, cfg)?;
    items.extend(check_comonad(&h.comonad, cfg)?);
    items.extend(check_monad_to_comonad(&h.lam, &h.monad, &h.comonad, cfg)?);
    // δ·m = Hm·λH·Hδ
    items.push(diagram(
        "bimonad.mul.comul",
        "D.1.18",
        &word(b, 2).then(m).then(d),
        &word(b, 2).step(1, d, 0).step(0, &h.lam, 1).step(1, m, 0),
        cfg,
    )?);
    // ε·m = ε·Hε
    items.push(diagram(
        "bimonad.counit.mul",
        "D.1.18b",
        &word(b, 2).then(m).then(eps),
        &word(b, 2).step(1, eps, 0).then(eps),
        cfg,
    )?);
    // δ·e = eH·e
    items.push(diagram(
        "bimonad.unit.comul",
        "D.1.18b",
        &word(b, 0).then(e).then(d),
        &word(b, 0).then(e).step(0, e, 1),
        cfg,
    )?);
    // ε·e = 1
    items.push(diagram("bimonad.unit.counit", "D.1.18b", &word(b, 0).then(e).then(eps), &word(b, 0), cfg)?);
    Ok(items)
}

/// Evidence that an instance has no antipode: the named canonical map is not
/// invertible, shown by a kernel combination (vector backend) or a collision
/// (set backend).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NoAntipodeCertificate {
    /// Which canonical map is singular: "gamma" or "gamma'".
    pub map: String,
    /// Rendered kernel vector or collision equation.
    pub evidence: String,
}

impl std::fmt::Display for NoAntipodeCertificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "no antipode: {} is not invertible ({})", self.map, self.evidence)
    }
}

/// The canonical maps `γ = Hm·δH` and `γ′ = mH·Hδ` with their inverses when
/// those exist, and singularity evidence when they do not.
#[derive(Debug, Clone)]
pub struct GammaPair {
    pub gamma: NatGen,
    pub gamma_prime: NatGen,
    pub beta: Option<NatGen>,
    pub beta_prime: Option<NatGen>,
    pub gamma_failure: Option<NoAntipodeCertificate>,
    pub gamma_prime_failure: Option<NoAntipodeCertificate>,
}

fn invert_payload(map_name: &str, p: &Payload, backend: Backend) -> Result<Payload, NoAntipodeCertificate> {
    let pair = TensorWord::plain(2);
    match p {
        Payload::Mat(m) => m.invert().map(Payload::Mat).map_err(|w| {
            let terms: Vec<_> =
                w.kernel.iter().enumerate().filter(|(_, s)| !s.is_zero()).map(|(i, s)| (i, s.clone())).collect();
            NoAntipodeCertificate {
                map: map_name.to_string(),
                evidence: format!(
                    "kernel contains {}; rank {} of {}",
                    render_sparse(&terms, pair, backend),
                    m.rank(),
                    m.rows
                ),
            }
        }),
        Payload::Map(f) => f.invert().map(Payload::Map).map_err(|w| NoAntipodeCertificate {
            map: map_name.to_string(),
            evidence: format!(
                "collision {} and {} both map to {}",
                pair.render_index(backend, w.first),
                pair.render_index(backend, w.second),
                pair.render_index(backend, w.image)
            ),
        }),
    }
}

/// Builds γ and γ′, attempts to invert them, and checks the unit equations
/// `γ·He = δ`, `γ′·eH = δ` plus the one-sided linearity squares.
pub fn gamma(h: &BimonadData, cfg: &CheckConfig) -> Result<(GammaPair, Vec<CheckItem>), CalcError> {
    let b = h.backend();
    let (m, e) = (&h.monad.mul, &h.monad.unit);
    let d = &h.comonad.comul;
    let gamma = word(b, 2).step(0, d, 1).step(1, m, 0).materialize(cfg)?;
    let gamma_prime = word(b, 2).step(1, d, 0).step(0, m, 1).materialize(cfg)?;
    let items = vec![
        // γ·He = δ
        diagram("gamma.unit", "E.1.24", &word(b, 1).step(1, e, 0).then(&gamma), &word(b, 1).then(d), cfg)?,
        // γ′·eH = δ
        diagram("gamma.prime.unit", "E.1.24", &word(b, 1).step(0, e, 1).then(&gamma_prime), &word(b, 1).then(d), cfg)?,
        // γ·Hm = Hm·γH
        diagram(
            "gamma.linear",
            "canon",
            &word(b, 3).step(1, m, 0).then(&gamma),
            &word(b, 3).step(0, &gamma, 1).step(1, m, 0),
            cfg,
        )?,
        // γ′·mH = mH·Hγ′
        diagram(
            "gamma.prime.linear",
            "canon",
            &word(b, 3).step(0, m, 1).then(&gamma_prime),
            &word(b, 3).step(1, &gamma_prime, 0).step(0, m, 1),
            cfg,
        )?,
    ];
    let pair2 = TensorWord::plain(2);
    let (beta, gamma_failure) = match invert_payload("gamma", &gamma.payload, b) {
        Ok(p) => (Some(NatGen::new(b, pair2, pair2, p)), None),
        Err(c) => (None, Some(c)),
    };
    let (beta_prime, gamma_prime_failure) = match invert_payload("gamma'", &gamma_prime.payload, b) {
        Ok(p) => (Some(NatGen::new(b, pair2, pair2, p)), None),
        Err(c) => (None, Some(c)),
    };
    Ok((GammaPair { gamma, gamma_prime, beta, beta_prime, gamma_failure, gamma_prime_failure }, items))
}

/// An antipode candidate with the two convolution identities' verdicts.
#[derive(Debug, Clone)]
pub struct AntipodeCandidate {
    pub s: NatGen,
    pub left_ok: bool,
    pub right_ok: bool,
    pub items: Vec<CheckItem>,
}

impl AntipodeCandidate {
    pub fn verified(&self) -> bool {
        self.left_ok && self.right_ok
    }
}

/// Checks both antipode identities `m·SH·δ = e·ε` and `m·HS·δ = e·ε` for a
/// supplied candidate.
pub fn check_antipode(h: &BimonadData, s: &NatGen, cfg: &CheckConfig) -> Result<AntipodeCandidate, CalcError> {
    assert_eq!((s.src, s.dst), (TensorWord::plain(1), TensorWord::plain(1)), "antipode must have shape 1 -> 1");
    let b = h.backend();
    let (m, e) = (&h.monad.mul, &h.monad.unit);
    let (d, eps) = (&h.comonad.comul, &h.comonad.counit);
    let unit_counit = word(b, 1).then(eps).then(e);
    let left = diagram("antipode.left", "P.1.11", &word(b, 1).then(d).step(0, s, 1).then(m), &unit_counit, cfg)?;
    let right = diagram("antipode.right", "P.1.11", &word(b, 1).then(d).step(1, s, 0).then(m), &unit_counit, cfg)?;
    let (left_ok, right_ok) = (left.ok, right.ok);
    Ok(AntipodeCandidate { s: s.clone(), left_ok, right_ok, items: vec![left, right] })
}

/// Result of trying to compute an antipode from the canonical maps.
#[derive(Debug, Clone)]
pub enum AntipodeOutcome {
    Found(AntipodeCandidate),
    Missing(NoAntipodeCertificate),
}

/// Inverts γ and, on success, builds `S = εH·β·He` and verifies both
/// antipode identities. On failure returns the singularity certificate.
pub fn compute_antipode(h: &BimonadData, cfg: &CheckConfig) -> Result<AntipodeOutcome, CalcError> {
    let (pair, _) = gamma(h, cfg)?;
    let Some(beta) = pair.beta else {
        return Ok(AntipodeOutcome::Missing(pair.gamma_failure.expect("missing beta implies certificate")));
    };
    let b = h.backend();
    let (e, eps) = (&h.monad.unit, &h.comonad.counit);
    let s = word(b, 1).step(1, e, 0).then(&beta).step(0, eps, 1).materialize(cfg)?;
    Ok(AntipodeOutcome::Found(check_antipode(h, &s, cfg)?))
}

/// The three-way equivalence bundle: γ invertible ⟺ γ′ invertible ⟺ an
/// antipode exists. Returns one item whose verdict is agreement of the three
/// booleans, with a note spelling them out.
pub fn hopf_bundle(h: &BimonadData, cfg: &CheckConfig) -> Result<(bool, CheckItem), CalcError> {
    let (pair, _) = gamma(h, cfg)?;
    let g_ok = pair.beta.is_some();
    let gp_ok = pair.beta_prime.is_some();
    let s_ok = match compute_antipode(h, cfg)? {
        AntipodeOutcome::Found(c) => c.verified(),
        AntipodeOutcome::Missing(_) => false,
    };
    let agree = g_ok == gp_ok && gp_ok == s_ok;
    let mut item = if agree {
        CheckItem::pass("hopf.bundle", "P.1.13")
    } else {
        CheckItem::fail_note("hopf.bundle", "P.1.13", "equivalence bundle disagrees".to_string())
    };
    item.note = Some(format!("gamma invertible: {g_ok}; gamma' invertible: {gp_ok}; verified antipode: {s_ok}"));
    Ok((s_ok && agree, item))
}

/// A Hopf module: one carrier with an action and a coaction subject to the
/// mixed diagram for the bimonad's entwining.
#[derive(Debug, Clone)]
pub struct HopfModuleData {
    pub module: ModuleData,
    pub comodule: ComoduleData,
}

impl HopfModuleData {
    pub fn new(module: ModuleData, comodule: ComoduleData) -> HopfModuleData {
        assert_eq!(module.carrier, comodule.carrier, "carrier mismatch");
        HopfModuleData { module, comodule }
    }

    pub fn carrier(&self) -> usize {
        self.module.carrier
    }

    pub fn backend(&self) -> Backend {
        self.module.backend()
    }
}

/// Checks module laws, comodule laws, and the mixed compatibility square
/// `θ·h = H(h)·λ_X·H(θ)`.
pub fn check_hopf_module(h: &BimonadData, hm: &HopfModuleData, cfg: &CheckConfig) -> Result<Vec<CheckItem>, CalcError> {
    let b = hm.backend();
    let x = hm.carrier();
    let mut items = check_module(&h.monad, &hm.module, cfg)?;
    items.extend(check_comodule(&h.comonad, &hm.comodule, cfg)?);
    let (act, coact) = (&hm.module.action, &hm.comodule.coaction);
    items.push(diagram(
        "hopf.mixed",
        "D.1.17",
        &word_on(b, 1, x).step(0, act, 0).step(0, coact, 0),
        &word_on(b, 1, x).step(1, coact, 0).step(0, &h.lam, 0).step(1, act, 0),
        cfg,
    )?);
    Ok(items)
}

/// The free Hopf module on a carrier of size `v`: carrier `B ⊗ V`, action
/// `m ⊗ id`, coaction `δ ⊗ id`. Verified before being returned.
pub fn comparison(
    h: &BimonadData,
    v: usize,
    cfg: &CheckConfig,
) -> Result<(HopfModuleData, Vec<CheckItem>), CalcError> {
    let b = h.backend();
    let x = b.base() * v;
    let idv = Payload::identity(b, v);
    let action = NatGen::new(
        b,
        TensorWord::with_carrier(1, x),
        TensorWord::with_carrier(0, x),
        h.monad.mul.payload.tensor(&idv),
    );
    let coaction = NatGen::new(
        b,
        TensorWord::with_carrier(0, x),
        TensorWord::with_carrier(1, x),
        h.comonad.comul.payload.tensor(&idv),
    );
    let hm = HopfModuleData::new(ModuleData::new(x, action), ComoduleData::new(x, coaction));
    let items = check_hopf_module(h, &hm, cfg)?
        .into_iter()
        .map(|item| CheckItem { id: format!("comparison.{}", item.id), ..item })
        .collect();
    Ok((hm, items))
}

/// The split of the coinvariants idempotent `q = h·S_X·θ` on a Hopf module:
/// `incl: coinv → X` and `proj: X → coinv` with `incl·proj = q` and
/// `proj·incl = id`.
#[derive(Debug, Clone)]
pub struct CoinvariantSplit {
    pub q: Payload,
    pub incl: Payload,
    pub proj: Payload,
    pub coinv_size: usize,
}

fn split_payload(p: &Payload) -> (Payload, Payload) {
    match p {
        Payload::Mat(m) => {
            let (i, qbar) = m.split_idempotent();
            (Payload::Mat(i), Payload::Mat(qbar))
        }
        Payload::Map(f) => {
            let (i, qbar) = f.split_idempotent();
            (Payload::Map(i), Payload::Map(qbar))
        }
    }
}

/// Computes the coinvariants of a Hopf module along a verified antipode:
/// forms `q = h·S_X·θ`, asserts idempotency and the equaliser equations,
/// and splits it.
pub fn coinvariants(
    h: &BimonadData,
    s: &NatGen,
    hm: &HopfModuleData,
    cfg: &CheckConfig,
) -> Result<(CoinvariantSplit, Vec<CheckItem>), CalcError> {
    let _ = cfg;
    let b = hm.backend();
    let x = hm.carrier();
    let act = &hm.module.action.payload;
    let coact = &hm.comodule.coaction.payload;
    let s_x = s.payload.tensor(&Payload::identity(b, x));
    let q = act.after(&s_x).after(coact);
    let on_x = TensorWord::with_carrier(0, x);
    let over_x = TensorWord::with_carrier(1, x);
    let e_x = h.monad.unit.payload.tensor(&Payload::identity(b, x));
    let eps_x = h.comonad.counit.payload.tensor(&Payload::identity(b, x));
    let mut items = vec![
        payload_item("coinv.idempotent", "id.split", b, on_x, on_x, &q.after(&q), &q),
        // e_X·q = θ·q
        payload_item("coinv.unit", "id.split", b, on_x, over_x, &e_x.after(&q), &coact.after(&q)),
        // q·ε_X = q·h
        payload_item("coinv.counit", "id.split", b, over_x, on_x, &q.after(&eps_x), &q.after(act)),
    ];
    let (incl, proj) = split_payload(&q);
    let coinv_size = incl.src_size();
    let on_c = TensorWord::with_carrier(0, coinv_size);
    items.push(payload_item("coinv.split.factor", "id.split", b, on_x, on_x, &incl.after(&proj), &q));
    items.push(payload_item(
        "coinv.split.retract",
        "id.split",
        b,
        on_c,
        on_c,
        &proj.after(&incl),
        &Payload::identity(b, coinv_size),
    ));
    // e_X·incl = θ·incl: the split lands in the equaliser of (e_X, θ).
    items.push(payload_item("coinv.equaliser", "id.split", b, on_c, over_x, &e_x.after(&incl), &coact.after(&incl)));
    Ok((CoinvariantSplit { q, incl, proj, coinv_size }, items))
}

/// The equivalence verdict on one Hopf module: builds `α = h·H(incl)` and
/// `β = H(proj)·θ` over the coinvariants and asserts they are mutually
/// inverse module-and-comodule morphisms, plus the size identity
/// `|X| = |B|·|coinv|`.
pub fn fundamental_check(
    h: &BimonadData,
    s: &NatGen,
    hm: &HopfModuleData,
    cfg: &CheckConfig,
) -> Result<(CoinvariantSplit, Vec<CheckItem>), CalcError> {
    let b = hm.backend();
    let x = hm.carrier();
    let (split, mut items) = coinvariants(h, s, hm, cfg)?;
    let (free, comp_items) = comparison_on(h, &split, cfg)?;
    items.extend(comp_items);
    let act = &hm.module.action.payload;
    let coact = &hm.comodule.coaction.payload;
    let h_incl = Payload::identity(b, b.base()).tensor(&split.incl);
    let h_proj = Payload::identity(b, b.base()).tensor(&split.proj);
    let alpha = act.after(&h_incl);
    let beta = h_proj.after(coact);
    let on_x = TensorWord::with_carrier(0, x);
    let free_x = TensorWord::with_carrier(0, free.carrier());
    items.push(payload_item(
        "fund.alpha.beta",
        "id.split",
        b,
        on_x,
        on_x,
        &alpha.after(&beta),
        &Payload::identity(b, x),
    ));
    items.push(payload_item(
        "fund.beta.alpha",
        "id.split",
        b,
        free_x,
        free_x,
        &beta.after(&alpha),
        &Payload::identity(b, free.carrier()),
    ));
    items.push(CheckItem::new(
        "fund.alpha.linear",
        "T.1.14",
        module_morphism_witness(&alpha, &free.module, &hm.module, b),
    ));
    items.push(CheckItem::new(
        "fund.alpha.colinear",
        "T.1.14",
        comodule_morphism_witness(&alpha, &free.comodule, &hm.comodule, b),
    ));
    let size_ok = x == b.base() * split.coinv_size;
    let mut size_item = if size_ok {
        CheckItem::pass("fund.size", "T.1.14")
    } else {
        CheckItem::fail_note("fund.size", "T.1.14", "carrier is not free over the coinvariants".to_string())
    };
    size_item.note = Some(format!("carrier {x} = base {} x coinvariants {}", b.base(), split.coinv_size));
    items.push(size_item);
    Ok((split, items))
}

/// The free Hopf module on the coinvariants carrier of a split.
fn comparison_on(
    h: &BimonadData,
    split: &CoinvariantSplit,
    cfg: &CheckConfig,
) -> Result<(HopfModuleData, Vec<CheckItem>), CalcError> {
    comparison(h, split.coinv_size, cfg)
}

/// Free-module round trip: builds the free Hopf module on a carrier of size
/// `v`, runs the fundamental check, and additionally verifies that the
/// coinvariants of the free module recover the carrier via
/// `u = proj·e_V` and `w = ε_V·incl`.
pub fn free_roundtrip(h: &BimonadData, s: &NatGen, v: usize, cfg: &CheckConfig) -> Result<Vec<CheckItem>, CalcError> {
    let b = h.backend();
    let (free, mut items) = comparison(h, v, cfg)?;
    let (split, fund_items) = fundamental_check(h, s, &free, cfg)?;
    items.extend(fund_items);
    let idv = Payload::identity(b, v);
    let e_v = h.monad.unit.payload.tensor(&idv);
    let eps_v = h.comonad.counit.payload.tensor(&idv);
    let u = split.proj.after(&e_v);
    let w = eps_v.after(&split.incl);
    let on_v = TensorWord::with_carrier(0, v);
    let on_c = TensorWord::with_carrier(0, split.coinv_size);
    items.push(payload_item("fund.free.retract", "T.1.8", b, on_v, on_v, &w.after(&u), &idv));
    items.push(payload_item(
        "fund.free.section",
        "T.1.8",
        b,
        on_c,
        on_c,
        &u.after(&w),
        &Payload::identity(b, split.coinv_size),
    ));
    let mut size = CheckItem::new("fund.free.size", "T.1.8", None);
    size.ok = split.coinv_size == v;
    size.note = Some(format!("coinvariants of the free module on {v}: {}", split.coinv_size));
    items.push(size);
    Ok(items)
}

/// The regular Hopf module: the generator itself with action `m` and
/// coaction `δ`.
pub fn regular_hopf_module(h: &BimonadData) -> HopfModuleData {
    HopfModuleData::new(ModuleData::regular(&h.monad), ComoduleData::regular(&h.comonad))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::instance::Structure;
    use crate::matrix::ExactMatrix;
    use crate::scalar::Domain;
    use crate::tau_entwining;

    fn cfg() -> CheckConfig {
        CheckConfig::default()
    }

    fn structure(name: &str) -> Structure {
        catalog::load(name).unwrap().1.to_structure()
    }

    /// Builds the bimonad with the entwining induced by the instance's
    /// braiding (the only construction the engine uses for instance files).
    fn bimonad(name: &str) -> BimonadData {
        let s = structure(name);
        let monad = MonadData::new(s.m.clone(), s.e.clone());
        let comonad = ComonadData::new(s.delta.clone(), s.eps.clone());
        let lam = tau_entwining(&monad, &comonad, &s.tau, &cfg()).unwrap();
        BimonadData::new(monad, comonad, lam)
    }

    fn all_ok(items: &[CheckItem]) -> bool {
        items.iter().all(|c| c.ok)
    }

    #[test]
    fn catalog_bimonads_pass_full_suite() {
        for name in ["c2_f2", "c3_f3", "s3_q", "sweedler_f5", "sweedler_q", "monoid_1z_f2", "exterior_f3", "z4_set", "monoid_1z_set"]
        {
            let h = bimonad(name);
            let items = check_bimonad(&h, &cfg()).unwrap();
            assert!(all_ok(&items), "{name}: {:?}", items.iter().filter(|c| !c.ok).collect::<Vec<_>>());
        }
    }

    /// γ on a group algebra is the permutation (g, h) ↦ (g, gh); on the
    /// order-2 group it is a 4×4 permutation matrix.
    #[test]
    fn gamma_on_group_algebra_is_permutation() {
        let h = bimonad("c2_f2");
        let (pair, items) = gamma(&h, &cfg()).unwrap();
        assert!(all_ok(&items), "{items:?}");
        assert!(pair.beta.is_some());
        assert!(pair.beta_prime.is_some());
        let Payload::Mat(g) = &pair.gamma.payload else { panic!("vect payload") };
        // Column (i, j) = i·2+j must hit row (i, i xor j).
        for i in 0..2 {
            for j in 0..2 {
                assert!(g.get(i * 2 + (i ^ j), i * 2 + j).is_one());
            }
        }
    }

    /// The idempotent monoid {1, z} has a singular γ: z⊗1 and z⊗z share the
    /// image z⊗z, so the kernel contains z⊗1 - z⊗z and the rank is 3 of 4.
    #[test]
    fn monoid_gamma_is_singular_with_kernel() {
        let h = bimonad("monoid_1z_f2");
        let (pair, items) = gamma(&h, &cfg()).unwrap();
        assert!(all_ok(&items), "{items:?}");
        assert!(pair.beta.is_none());
        let cert = pair.gamma_failure.unwrap();
        assert_eq!(cert.map, "gamma");
        assert!(cert.evidence.contains("rank 3 of 4"), "{}", cert.evidence);
        let Payload::Mat(g) = &pair.gamma.payload else { panic!("vect payload") };
        assert_eq!(g.rank(), 3);
        // The kernel combination is (1,0) + (1,1) over F2 (z⊗1 - z⊗z).
        assert!(cert.evidence.contains("(1,0)"), "{}", cert.evidence);
        assert!(cert.evidence.contains("(1,1)"), "{}", cert.evidence);
    }

    #[test]
    fn group_algebra_antipode_is_inversion() {
        let h = bimonad("c3_f3");
        let AntipodeOutcome::Found(cand) = compute_antipode(&h, &cfg()).unwrap() else {
            panic!("antipode expected");
        };
        assert!(cand.verified());
        let Payload::Mat(s) = &cand.s.payload else { panic!("vect payload") };
        // S(g^k) = g^(3-k): column 1 -> row 2, column 2 -> row 1.
        assert!(s.get(0, 0).is_one());
        assert!(s.get(2, 1).is_one());
        assert!(s.get(1, 2).is_one());
    }

    /// The 4-dimensional instance over F5: S(x) = -gx (index 3 with value
    /// 4 = -1 mod 5) and S² is not the identity, witnessed on x.
    #[test]
    fn four_dim_antipode_has_infinite_order_on_x() {
        let h = bimonad("sweedler_f5");
        let AntipodeOutcome::Found(cand) = compute_antipode(&h, &cfg()).unwrap() else {
            panic!("antipode expected");
        };
        assert!(cand.verified());
        let Payload::Mat(s) = &cand.s.payload else { panic!("vect payload") };
        // Basis order 1, g, x, gx. S(g) = g, S(x) = -gx.
        assert!(s.get(1, 1).is_one());
        assert!(s.get(3, 2).eq(&Domain::Fp(5).from_i64(-1)));
        assert!(s.get(2, 2).is_zero());
        let s2 = s.mul(s);
        // S²(x) = -x ≠ x.
        assert!(s2.get(2, 2).eq(&Domain::Fp(5).from_i64(-1)));
        let id = ExactMatrix::identity(4, Domain::Fp(5));
        assert_ne!(s2, id);
    }

    #[test]
    fn wrong_antipode_candidate_fails_with_witness() {
        let h = bimonad("c3_f3");
        let id_map = NatGen::identity(h.backend(), TensorWord::plain(1));
        let cand = check_antipode(&h, &id_map, &cfg()).unwrap();
        assert!(!cand.left_ok && !cand.right_ok);
        let w = cand.items[0].witness.as_ref().unwrap();
        assert_eq!(w.input, "(1)");
    }

    #[test]
    fn set_group_antipode_is_inverse_map() {
        let h = bimonad("z4_set");
        let AntipodeOutcome::Found(cand) = compute_antipode(&h, &cfg()).unwrap() else {
            panic!("antipode expected");
        };
        assert!(cand.verified());
        let Payload::Map(f) = &cand.s.payload else { panic!("set payload") };
        assert_eq!(f.table(), &[0, 3, 2, 1]);
    }

    #[test]
    fn set_monoid_has_collision_certificate() {
        let h = bimonad("monoid_1z_set");
        let AntipodeOutcome::Missing(cert) = compute_antipode(&h, &cfg()).unwrap() else {
            panic!("no antipode expected");
        };
        assert_eq!(cert.map, "gamma");
        assert!(cert.evidence.contains("collision"), "{}", cert.evidence);
    }

    #[test]
    fn hopf_bundle_agrees_across_catalog() {
        for name in ["c2_f2", "sweedler_f5", "monoid_1z_f2", "z4_set", "monoid_1z_set", "exterior_f3"] {
            let h = bimonad(name);
            let (_, item) = hopf_bundle(&h, &cfg()).unwrap();
            assert!(item.ok, "{name}: {:?}", item.note);
        }
    }

    #[test]
    fn comparison_produces_verified_hopf_modules() {
        let h = bimonad("sweedler_f5");
        for v in [1usize, 2, 3] {
            let (hm, items) = comparison(&h, v, &cfg()).unwrap();
            assert_eq!(hm.carrier(), 4 * v);
            assert!(all_ok(&items), "v={v}: {items:?}");
        }
    }

    #[test]
    fn regular_module_is_hopf_module() {
        for name in ["c2_f2", "sweedler_f5", "z4_set"] {
            let h = bimonad(name);
            let hm = regular_hopf_module(&h);
            let items = check_hopf_module(&h, &hm, &cfg()).unwrap();
            assert!(all_ok(&items), "{name}: {items:?}");
        }
    }

    #[test]
    fn broken_coaction_fails_named_diagram() {
        let h = bimonad("c2_f2");
        let hm = regular_hopf_module(&h);
        // Replace the coaction by the unit-insertion e ⊗ id, which is a
        // comodule coaction for the trivial grading but breaks the mixed
        // square against the product action.
        let broken = ComoduleData::new(
            2,
            NatGen::new(
                h.backend(),
                TensorWord::with_carrier(0, 2),
                TensorWord::with_carrier(1, 2),
                h.monad.unit.payload.tensor(&Payload::identity(h.backend(), 2)),
            ),
        );
        let bad = HopfModuleData::new(hm.module.clone(), broken);
        let items = check_hopf_module(&h, &bad, &cfg()).unwrap();
        let mixed = items.iter().find(|c| c.id == "hopf.mixed").unwrap();
        assert!(!mixed.ok);
        assert!(mixed.witness.is_some());
    }

    /// Coinvariants of the regular Hopf module are one-dimensional: q sends
    /// every grouplike to the unit.
    #[test]
    fn regular_coinvariants_are_one_dimensional() {
        let h = bimonad("c2_f2");
        let AntipodeOutcome::Found(cand) = compute_antipode(&h, &cfg()).unwrap() else { panic!() };
        let hm = regular_hopf_module(&h);
        let (split, items) = coinvariants(&h, &cand.s, &hm, &cfg()).unwrap();
        assert!(all_ok(&items), "{items:?}");
        assert_eq!(split.coinv_size, 1);
        let Payload::Mat(q) = &split.q else { panic!() };
        // q(1) = 1 and q(g) = 1.
        assert!(q.get(0, 0).is_one());
        assert!(q.get(0, 1).is_one());
        assert!(q.get(1, 1).is_zero());
    }

    #[test]
    fn fundamental_check_on_free_modules() {
        for name in ["c2_f2", "sweedler_f5", "z4_set"] {
            let h = bimonad(name);
            let AntipodeOutcome::Found(cand) = compute_antipode(&h, &cfg()).unwrap() else {
                panic!("{name}: antipode expected");
            };
            for v in [1usize, 2] {
                let items = free_roundtrip(&h, &cand.s, v, &cfg()).unwrap();
                assert!(all_ok(&items), "{name} v={v}: {:?}", items.iter().filter(|c| !c.ok).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn fundamental_check_on_regular_module() {
        let h = bimonad("sweedler_f5");
        let AntipodeOutcome::Found(cand) = compute_antipode(&h, &cfg()).unwrap() else { panic!() };
        let hm = regular_hopf_module(&h);
        let (split, items) = fundamental_check(&h, &cand.s, &hm, &cfg()).unwrap();
        assert!(all_ok(&items), "{:?}", items.iter().filter(|c| !c.ok).collect::<Vec<_>>());
        assert_eq!(split.coinv_size, 1);
    }

    #[test]
    fn zero_carrier_is_degenerate_but_consistent() {
        let h = bimonad("c2_f2");
        let (hm, items) = comparison(&h, 0, &cfg()).unwrap();
        assert_eq!(hm.carrier(), 0);
        assert!(all_ok(&items), "{items:?}");
    }
}
