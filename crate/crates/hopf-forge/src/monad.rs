//! Monads and comonads on the generator backend, the four flavors of
//! distributive law between them, the lifted structures they induce on
//! (co)modules, and composite (co)monads.
//!
//! Every law is phrased as a pair of [`Pipeline`]s over the same source word
//! and checked basis vector by basis vector, so a failure always comes with a
//! concrete input where the two sides disagree.

use crate::pipeline::{compare_pipelines, CalcError, CheckConfig, Pipeline};
use crate::report::CheckItem;
use crate::word::{Backend, NatGen, Payload, PointWitness, TensorWord};

/// A monad structure on the generator endofunctor: a product `m` (arity 2 → 1)
/// and a unit `e` (arity 0 → 1).
#[derive(Debug, Clone)]
pub struct MonadData {
    pub mul: NatGen,
    pub unit: NatGen,
}

impl MonadData {
    pub fn new(mul: NatGen, unit: NatGen) -> MonadData {
        assert_eq!(mul.backend, unit.backend, "backend mismatch");
        assert_eq!((mul.src, mul.dst), (TensorWord::plain(2), TensorWord::plain(1)), "product must have shape 2 -> 1");
        assert_eq!((unit.src, unit.dst), (TensorWord::plain(0), TensorWord::plain(1)), "unit must have shape 0 -> 1");
        MonadData { mul, unit }
    }

    pub fn backend(&self) -> Backend {
        self.mul.backend
    }
}

/// A comonad structure on the generator endofunctor: a coproduct `δ`
/// (arity 1 → 2) and a counit `ε` (arity 1 → 0).
#[derive(Debug, Clone)]
pub struct ComonadData {
    pub comul: NatGen,
    pub counit: NatGen,
}

impl ComonadData {
    pub fn new(comul: NatGen, counit: NatGen) -> ComonadData {
        assert_eq!(comul.backend, counit.backend, "backend mismatch");
        assert_eq!((comul.src, comul.dst), (TensorWord::plain(1), TensorWord::plain(2)), "coproduct must have shape 1 -> 2");
        assert_eq!((counit.src, counit.dst), (TensorWord::plain(1), TensorWord::plain(0)), "counit must have shape 1 -> 0");
        ComonadData { comul, counit }
    }

    pub fn backend(&self) -> Backend {
        self.comul.backend
    }
}

/// The four flavors of distributive law between two (co)monad structures on
/// the generator endofunctor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistLawKind {
    /// `λ: TG → GT` where `T` is a monad and `G` a comonad (a mixed law from
    /// the monad to the comonad).
    MonadToComonad,
    /// `λ: GT → TG` where `G` is a comonad and `T` a monad.
    ComonadToMonad,
    /// `λ: FT → TF` for two monads `F`, `T`.
    MonadMonad,
    /// `φ: TG → GT` for two comonads `T`, `G`.
    ComonadComonad,
}

/// Builds a `CheckItem` by comparing two pipelines pointwise.
pub(crate) fn diagram(
    id: &str,
    label: &'static str,
    lhs: &Pipeline,
    rhs: &Pipeline,
    cfg: &CheckConfig,
) -> Result<CheckItem, CalcError> {
    Ok(CheckItem::new(id, label, compare_pipelines(lhs, rhs, cfg)?))
}

/// Identity pipeline on the plain word of the given arity.
pub(crate) fn word(backend: Backend, arity: usize) -> Pipeline {
    Pipeline::id(backend, TensorWord::plain(arity))
}

/// Checks associativity and both unit laws.
pub fn check_monad(monad: &MonadData, cfg: &CheckConfig) -> Result<Vec<CheckItem>, CalcError> {
    let b = monad.backend();
    let (m, e) = (&monad.mul, &monad.unit);
    Ok(vec![
        // m·(m ⊗ id) = m·(id ⊗ m)
        diagram(
            "monad.assoc",
            "mon-com",
            &word(b, 3).step(0, m, 1).then(m),
            &word(b, 3).step(1, m, 0).then(m),
            cfg,
        )?,
        // m·(e ⊗ id) = id
        diagram("monad.unit.left", "mon-com", &word(b, 1).step(0, e, 1).then(m), &word(b, 1), cfg)?,
        // m·(id ⊗ e) = id
        diagram("monad.unit.right", "mon-com", &word(b, 1).step(1, e, 0).then(m), &word(b, 1), cfg)?,
    ])
}

/// Checks coassociativity and both counit laws.
pub fn check_comonad(comonad: &ComonadData, cfg: &CheckConfig) -> Result<Vec<CheckItem>, CalcError> {
    let b = comonad.backend();
    let (d, eps) = (&comonad.comul, &comonad.counit);
    Ok(vec![
        // (δ ⊗ id)·δ = (id ⊗ δ)·δ
        diagram(
            "comonad.coassoc",
            "mon-com",
            &word(b, 1).then(d).step(0, d, 1),
            &word(b, 1).then(d).step(1, d, 0),
            cfg,
        )?,
        // (ε ⊗ id)·δ = id
        diagram("comonad.counit.left", "mon-com", &word(b, 1).then(d).step(0, eps, 1), &word(b, 1), cfg)?,
        // (id ⊗ ε)·δ = id
        diagram("comonad.counit.right", "mon-com", &word(b, 1).then(d).step(1, eps, 0), &word(b, 1), cfg)?,
    ])
}

fn assert_law_shape(lam: &NatGen) {
    assert_eq!(
        (lam.src, lam.dst),
        (TensorWord::plain(2), TensorWord::plain(2)),
        "distributive law must have shape 2 -> 2"
    );
}

/// Checks the four diagrams of a mixed law `λ: TG → GT` from the monad `T`
/// to the comonad `G`.
pub fn check_monad_to_comonad(
    lam: &NatGen,
    monad: &MonadData,
    comonad: &ComonadData,
    cfg: &CheckConfig,
) -> Result<Vec<CheckItem>, CalcError> {
    assert_law_shape(lam);
    let b = lam.backend;
    let (m, e) = (&monad.mul, &monad.unit);
    let (d, eps) = (&comonad.comul, &comonad.counit);
    Ok(vec![
        // λ·eG = Ge
        diagram(
            "dist.m2c.unit",
            "mon-com",
            &word(b, 1).step(0, e, 1).then(lam),
            &word(b, 1).step(1, e, 0),
            cfg,
        )?,
        // εT·λ = Tε
        diagram(
            "dist.m2c.counit",
            "mon-com",
            &word(b, 2).then(lam).step(0, eps, 1),
            &word(b, 2).step(1, eps, 0),
            cfg,
        )?,
        // δT·λ = Gλ·λG·Tδ
        diagram(
            "dist.m2c.comul",
            "mon-com",
            &word(b, 2).then(lam).step(0, d, 1),
            &word(b, 2).step(1, d, 0).step(0, lam, 1).step(1, lam, 0),
            cfg,
        )?,
        // λ·mG = Gm·λT·Tλ
        diagram(
            "dist.m2c.mul",
            "mon-com",
            &word(b, 3).step(0, m, 1).then(lam),
            &word(b, 3).step(1, lam, 0).step(0, lam, 1).step(1, m, 0),
            cfg,
        )?,
    ])
}

/// Checks the four diagrams of a mixed law `λ: GT → TG` from the comonad `G`
/// to the monad `T`.
pub fn check_comonad_to_monad(
    lam: &NatGen,
    comonad: &ComonadData,
    monad: &MonadData,
    cfg: &CheckConfig,
) -> Result<Vec<CheckItem>, CalcError> {
    assert_law_shape(lam);
    let b = lam.backend;
    let (m, e) = (&monad.mul, &monad.unit);
    let (d, eps) = (&comonad.comul, &comonad.counit);
    Ok(vec![
        // λ·Ge = eG
        diagram(
            "dist.c2m.unit",
            "common",
            &word(b, 1).step(1, e, 0).then(lam),
            &word(b, 1).step(0, e, 1),
            cfg,
        )?,
        // Tε·λ = εT
        diagram(
            "dist.c2m.counit",
            "common",
            &word(b, 2).then(lam).step(1, eps, 0),
            &word(b, 2).step(0, eps, 1),
            cfg,
        )?,
        // λ·Gm = mG·Tλ·λT
        diagram(
            "dist.c2m.mul",
            "common",
            &word(b, 3).step(1, m, 0).then(lam),
            &word(b, 3).step(0, lam, 1).step(1, lam, 0).step(0, m, 1),
            cfg,
        )?,
        // Tδ·λ = λG·Gλ·δT
        diagram(
            "dist.c2m.comul",
            "common",
            &word(b, 2).then(lam).step(1, d, 0),
            &word(b, 2).step(0, d, 1).step(1, lam, 0).step(0, lam, 1),
            cfg,
        )?,
    ])
}

/// Checks the four diagrams of a monad-monad law `λ: FT → TF`.
pub fn check_monad_monad(
    lam: &NatGen,
    first: &MonadData,
    second: &MonadData,
    cfg: &CheckConfig,
) -> Result<Vec<CheckItem>, CalcError> {
    assert_law_shape(lam);
    let b = lam.backend;
    let (m, e) = (&first.mul, &first.unit);
    let (m2, e2) = (&second.mul, &second.unit);
    Ok(vec![
        // λ·eT = Te
        diagram(
            "dist.mm.unit.left",
            "lift.mon.mon",
            &word(b, 1).step(0, e, 1).then(lam),
            &word(b, 1).step(1, e, 0),
            cfg,
        )?,
        // λ·Fe' = e'F
        diagram(
            "dist.mm.unit.right",
            "lift.mon.mon",
            &word(b, 1).step(1, e2, 0).then(lam),
            &word(b, 1).step(0, e2, 1),
            cfg,
        )?,
        // λ·mT = Tm·λF·Fλ
        diagram(
            "dist.mm.mul.left",
            "lift.mon.mon",
            &word(b, 3).step(0, m, 1).then(lam),
            &word(b, 3).step(1, lam, 0).step(0, lam, 1).step(1, m, 0),
            cfg,
        )?,
        // λ·Fm' = m'F·Tλ·λT
        diagram(
            "dist.mm.mul.right",
            "lift.mon.mon",
            &word(b, 3).step(1, m2, 0).then(lam),
            &word(b, 3).step(0, lam, 1).step(1, lam, 0).step(0, m2, 1),
            cfg,
        )?,
    ])
}

/// Checks the four diagrams of a comonad-comonad law `φ: TG → GT`.
pub fn check_comonad_comonad(
    phi: &NatGen,
    first: &ComonadData,
    second: &ComonadData,
    cfg: &CheckConfig,
) -> Result<Vec<CheckItem>, CalcError> {
    assert_law_shape(phi);
    let b = phi.backend;
    let (d2, eps2) = (&first.comul, &first.counit);
    let (d, eps) = (&second.comul, &second.counit);
    Ok(vec![
        // εT·φ = Tε
        diagram(
            "dist.cc.counit.right",
            "lift.comon.comon",
            &word(b, 2).then(phi).step(0, eps, 1),
            &word(b, 2).step(1, eps, 0),
            cfg,
        )?,
        // Gε'·φ = ε'G
        diagram(
            "dist.cc.counit.left",
            "lift.comon.comon",
            &word(b, 2).then(phi).step(1, eps2, 0),
            &word(b, 2).step(0, eps2, 1),
            cfg,
        )?,
        // δT·φ = Gφ·φG·Tδ
        diagram(
            "dist.cc.comul.right",
            "lift.comon.comon",
            &word(b, 2).then(phi).step(0, d, 1),
            &word(b, 2).step(1, d, 0).step(0, phi, 1).step(1, phi, 0),
            cfg,
        )?,
        // Gδ'·φ = φT·Tφ·δ'G
        diagram(
            "dist.cc.comul.left",
            "lift.comon.comon",
            &word(b, 2).then(phi).step(1, d2, 0),
            &word(b, 2).step(0, d2, 1).step(1, phi, 0).step(0, phi, 1),
            cfg,
        )?,
    ])
}

/// Checks the diagram set of the requested flavor for a single monad/comonad
/// pair on the generator. For the monad-monad flavor both monad slots are the
/// supplied monad; for comonad-comonad both slots are the supplied comonad.
pub fn check_dist_law(
    kind: DistLawKind,
    lam: &NatGen,
    monad: &MonadData,
    comonad: &ComonadData,
    cfg: &CheckConfig,
) -> Result<Vec<CheckItem>, CalcError> {
    match kind {
        DistLawKind::MonadToComonad => check_monad_to_comonad(lam, monad, comonad, cfg),
        DistLawKind::ComonadToMonad => check_comonad_to_monad(lam, comonad, monad, cfg),
        DistLawKind::MonadMonad => check_monad_monad(lam, monad, monad, cfg),
        DistLawKind::ComonadComonad => check_comonad_comonad(lam, comonad, comonad, cfg),
    }
}

/// A module over the generator monad: a carrier of the given size and an
/// action `h` with shape `(1 | X) → (0 | X)`.
#[derive(Debug, Clone)]
pub struct ModuleData {
    pub carrier: usize,
    pub action: NatGen,
}

impl ModuleData {
    pub fn new(carrier: usize, action: NatGen) -> ModuleData {
        assert_eq!(action.src, TensorWord::with_carrier(1, carrier), "action source must be (1 | X)");
        assert_eq!(action.dst, TensorWord::with_carrier(0, carrier), "action target must be (0 | X)");
        ModuleData { carrier, action }
    }

    pub fn backend(&self) -> Backend {
        self.action.backend
    }

    /// The regular module: the generator acting on itself by its product.
    pub fn regular(monad: &MonadData) -> ModuleData {
        let b = monad.backend();
        let x = b.base();
        let action = NatGen::new(
            b,
            TensorWord::with_carrier(1, x),
            TensorWord::with_carrier(0, x),
            monad.mul.payload.clone(),
        );
        ModuleData::new(x, action)
    }
}

/// A comodule over the generator comonad: a coaction `θ` with shape
/// `(0 | X) → (1 | X)`.
#[derive(Debug, Clone)]
pub struct ComoduleData {
    pub carrier: usize,
    pub coaction: NatGen,
}

impl ComoduleData {
    pub fn new(carrier: usize, coaction: NatGen) -> ComoduleData {
        assert_eq!(coaction.src, TensorWord::with_carrier(0, carrier), "coaction source must be (0 | X)");
        assert_eq!(coaction.dst, TensorWord::with_carrier(1, carrier), "coaction target must be (1 | X)");
        ComoduleData { carrier, coaction }
    }

    pub fn backend(&self) -> Backend {
        self.coaction.backend
    }

    /// The regular comodule: the generator coacting on itself by its coproduct.
    pub fn regular(comonad: &ComonadData) -> ComoduleData {
        let b = comonad.backend();
        let x = b.base();
        let coaction = NatGen::new(
            b,
            TensorWord::with_carrier(0, x),
            TensorWord::with_carrier(1, x),
            comonad.comul.payload.clone(),
        );
        ComoduleData::new(x, coaction)
    }
}

/// Identity pipeline on the word of the given arity over a fixed carrier.
pub(crate) fn word_on(backend: Backend, arity: usize, carrier: usize) -> Pipeline {
    Pipeline::id(backend, TensorWord::with_carrier(arity, carrier))
}

/// Checks the module laws `h·(m ⊗ id_X) = h·(id ⊗ h)` and `h·(e ⊗ id_X) = id`.
pub fn check_module(monad: &MonadData, module: &ModuleData, cfg: &CheckConfig) -> Result<Vec<CheckItem>, CalcError> {
    let b = module.backend();
    let x = module.carrier;
    let h = &module.action;
    Ok(vec![
        diagram(
            "module.assoc",
            "mon-com",
            &word_on(b, 2, x).step(0, &monad.mul, 0).step(0, h, 0),
            &word_on(b, 2, x).step(1, h, 0).step(0, h, 0),
            cfg,
        )?,
        diagram(
            "module.unit",
            "mon-com",
            &word_on(b, 0, x).step(0, &monad.unit, 0).step(0, h, 0),
            &word_on(b, 0, x),
            cfg,
        )?,
    ])
}

/// Checks the comodule laws `(δ ⊗ id_X)·θ = (id ⊗ θ)·θ` and `(ε ⊗ id_X)·θ = id`.
pub fn check_comodule(
    comonad: &ComonadData,
    comodule: &ComoduleData,
    cfg: &CheckConfig,
) -> Result<Vec<CheckItem>, CalcError> {
    let b = comodule.backend();
    let x = comodule.carrier;
    let th = &comodule.coaction;
    Ok(vec![
        diagram(
            "comodule.coassoc",
            "mon-com",
            &word_on(b, 0, x).step(0, th, 0).step(0, &comonad.comul, 0),
            &word_on(b, 0, x).step(0, th, 0).step(1, th, 0),
            cfg,
        )?,
        diagram(
            "comodule.counit",
            "mon-com",
            &word_on(b, 0, x).step(0, th, 0).step(0, &comonad.counit, 0),
            &word_on(b, 0, x),
            cfg,
        )?,
    ])
}

/// Checks the mixed compatibility square for a carrier that is both a module
/// and a comodule: `θ·h = G(h)·λ_X·T(θ)`.
pub fn check_bimodule(
    lam: &NatGen,
    module: &ModuleData,
    comodule: &ComoduleData,
    cfg: &CheckConfig,
) -> Result<Vec<CheckItem>, CalcError> {
    assert_eq!(module.carrier, comodule.carrier, "carrier mismatch");
    let b = module.backend();
    let x = module.carrier;
    let (h, th) = (&module.action, &comodule.coaction);
    Ok(vec![diagram(
        "bimodule.mixed",
        "bimod",
        &word_on(b, 1, x).step(0, h, 0).step(0, th, 0),
        &word_on(b, 1, x).step(1, th, 0).step(0, lam, 0).step(1, h, 0),
        cfg,
    )?])
}

/// Checks that a carrier-level map `f: X → Y` commutes with two module
/// actions: `f·h_X = h_Y·(id ⊗ f)`. The payload of `f` maps the carrier of
/// `from` to the carrier of `to`.
pub fn module_morphism_witness(f: &Payload, from: &ModuleData, to: &ModuleData, backend: Backend) -> Option<PointWitness> {
    assert_eq!(f.src_size(), from.carrier, "morphism source mismatch");
    assert_eq!(f.dst_size(), to.carrier, "morphism target mismatch");
    let lhs = f.after(&from.action.payload);
    let rhs = to.action.payload.after(&Payload::identity(backend, backend.base()).tensor(f));
    let src = TensorWord::with_carrier(1, from.carrier);
    let dst = TensorWord::with_carrier(0, to.carrier);
    lhs.first_difference(&rhs).map(|idx| PointWitness {
        input: src.render_index(backend, idx),
        lhs: crate::word::render_image(&lhs, dst, backend, idx),
        rhs: crate::word::render_image(&rhs, dst, backend, idx),
    })
}

/// The comonad lifted to modules by a monad-to-comonad law: sends a module
/// `(X, h)` to `(G(X), G(h)·λ_X)`, where the new carrier is the flattened
/// object `B ⊗ X`.
///
/// Re-verifies the module laws for the lifted action and checks that the
/// comonad's coproduct and counit components are morphisms of modules from
/// the lifted module (to the twice-lifted module, resp. the original one).
/// Builds the lifted module structure without re-verifying it.
fn lift_comonad_data(lam: &NatGen, module: &ModuleData, cfg: &CheckConfig) -> Result<ModuleData, CalcError> {
    let b = module.backend();
    let x = module.carrier;
    let lifted_carrier = b.base() * x;
    // Action on G(X): T G X --λ_X--> G T X --G(h)--> G X, reshaped to treat
    // B ⊗ X as a single carrier.
    let action = word_on(b, 2, x).step(0, lam, 0).step(1, &module.action, 0).materialize(cfg)?;
    Ok(ModuleData::new(
        lifted_carrier,
        NatGen::new(
            b,
            TensorWord::with_carrier(1, lifted_carrier),
            TensorWord::with_carrier(0, lifted_carrier),
            action.payload,
        ),
    ))
}

pub fn lift_comonad(
    lam: &NatGen,
    monad: &MonadData,
    comonad: &ComonadData,
    module: &ModuleData,
    cfg: &CheckConfig,
) -> Result<(ModuleData, Vec<CheckItem>), CalcError> {
    let b = module.backend();
    let x = module.carrier;
    let lifted = lift_comonad_data(lam, module, cfg)?;
    let mut items = Vec::new();
    for item in check_module(monad, &lifted, cfg)? {
        items.push(CheckItem { id: format!("lift.comonad.{}", item.id), ..item });
    }
    // δ_X: G(X) → G(G(X)) must be a module morphism from the lift to the
    // double lift, and ε_X: G(X) → X one from the lift to the original.
    let double = lift_comonad_data(lam, &lifted, cfg)?;
    let delta_x = comonad.comul.at_carrier(x);
    items.push(CheckItem::new(
        "lift.comonad.comul.morphism",
        "mon-com",
        module_morphism_witness(&delta_x.payload, &lifted, &double, b),
    ));
    let eps_x = comonad.counit.at_carrier(x);
    items.push(CheckItem::new(
        "lift.comonad.counit.morphism",
        "mon-com",
        module_morphism_witness(&eps_x.payload, &lifted, module, b),
    ));
    Ok((lifted, items))
}

/// Checks that a carrier-level map `f: X → Y` commutes with two coactions:
/// `(id ⊗ f)·θ_X = θ_Y·f`.
pub fn comodule_morphism_witness(
    f: &Payload,
    from: &ComoduleData,
    to: &ComoduleData,
    backend: Backend,
) -> Option<PointWitness> {
    assert_eq!(f.src_size(), from.carrier, "morphism source mismatch");
    assert_eq!(f.dst_size(), to.carrier, "morphism target mismatch");
    let lhs = Payload::identity(backend, backend.base()).tensor(f).after(&from.coaction.payload);
    let rhs = to.coaction.payload.after(f);
    let src = TensorWord::with_carrier(0, from.carrier);
    let dst = TensorWord::with_carrier(1, to.carrier);
    lhs.first_difference(&rhs).map(|idx| PointWitness {
        input: src.render_index(backend, idx),
        lhs: crate::word::render_image(&lhs, dst, backend, idx),
        rhs: crate::word::render_image(&rhs, dst, backend, idx),
    })
}

/// The monad lifted to comodules by the same monad-to-comonad law: sends a
/// comodule `(X, θ)` to `(T(X), λ_X·T(θ))`.
///
/// Re-verifies the comodule laws for the lifted coaction and checks that the
/// monad's product and unit components are morphisms of comodules.
/// Builds the lifted comodule structure without re-verifying it.
fn lift_monad_data(lam: &NatGen, comodule: &ComoduleData, cfg: &CheckConfig) -> Result<ComoduleData, CalcError> {
    let b = comodule.backend();
    let x = comodule.carrier;
    let lifted_carrier = b.base() * x;
    // Coaction on T(X): T X --T(θ)--> T G X --λ_X--> G T X.
    let coaction = word_on(b, 1, x).step(1, &comodule.coaction, 0).step(0, lam, 0).materialize(cfg)?;
    Ok(ComoduleData::new(
        lifted_carrier,
        NatGen::new(
            b,
            TensorWord::with_carrier(0, lifted_carrier),
            TensorWord::with_carrier(1, lifted_carrier),
            coaction.payload,
        ),
    ))
}

pub fn lift_monad(
    lam: &NatGen,
    monad: &MonadData,
    comonad: &ComonadData,
    comodule: &ComoduleData,
    cfg: &CheckConfig,
) -> Result<(ComoduleData, Vec<CheckItem>), CalcError> {
    let b = comodule.backend();
    let x = comodule.carrier;
    let lifted = lift_monad_data(lam, comodule, cfg)?;
    let mut items = Vec::new();
    for item in check_comodule(comonad, &lifted, cfg)? {
        items.push(CheckItem { id: format!("lift.monad.{}", item.id), ..item });
    }
    let double = lift_monad_data(lam, &lifted, cfg)?;
    let m_x = monad.mul.at_carrier(x);
    items.push(CheckItem::new(
        "lift.monad.mul.morphism",
        "mon-com",
        comodule_morphism_witness(&m_x.payload, &double, &lifted, b),
    ));
    let e_x = monad.unit.at_carrier(x);
    items.push(CheckItem::new(
        "lift.monad.unit.morphism",
        "mon-com",
        comodule_morphism_witness(&e_x.payload, comodule, &lifted, b),
    ));
    Ok((lifted, items))
}

/// The backend carrying the square of the generator (dimension or size `d²`),
/// used by composite (co)monads and by the doubling construction.
pub fn squared_backend(b: Backend) -> Backend {
    match b {
        Backend::Vect { field, dim } => Backend::Vect { field, dim: dim * dim },
        Backend::Set { size } => Backend::Set { size: size * size },
    }
}

/// The canonical monad on the composite `TF` induced by a monad-monad law
/// `λ: FT → TF`: product `(m' ⊗ m)·(T λ F)`, unit `e' ⊗ e`. The result lives
/// on the squared backend and is re-verified with `check_monad`.
pub fn compose_monad(
    lam: &NatGen,
    first: &MonadData,
    second: &MonadData,
    cfg: &CheckConfig,
) -> Result<(MonadData, Vec<CheckItem>), CalcError> {
    let b = lam.backend;
    let sq = squared_backend(b);
    let presquare = word(b, 4)
        .step(1, lam, 1)
        .step(0, &second.mul, 2)
        .step(1, &first.mul, 0)
        .materialize(cfg)?;
    let mul = NatGen::new(sq, TensorWord::plain(2), TensorWord::plain(1), presquare.payload);
    let unit = NatGen::new(
        sq,
        TensorWord::plain(0),
        TensorWord::plain(1),
        second.unit.payload.tensor(&first.unit.payload),
    );
    let composite = MonadData::new(mul, unit);
    let items = check_monad(&composite, cfg)?
        .into_iter()
        .map(|item| CheckItem { id: format!("comp.{}", item.id), label: "lift.mon.mon", ..item })
        .collect();
    Ok((composite, items))
}

/// The canonical comonad on the composite `TG` induced by a comonad-comonad
/// law `φ: TG → GT`: coproduct `(T φ G)·(δ' ⊗ δ)`, counit `ε' ⊗ ε`. The
/// result lives on the squared backend and is re-verified with
/// `check_comonad`.
pub fn compose_comonad(
    phi: &NatGen,
    first: &ComonadData,
    second: &ComonadData,
    cfg: &CheckConfig,
) -> Result<(ComonadData, Vec<CheckItem>), CalcError> {
    let b = phi.backend;
    let sq = squared_backend(b);
    let presquare = word(b, 2)
        .step(0, &first.comul, 1)
        .step(2, &second.comul, 0)
        .step(1, phi, 1)
        .materialize(cfg)?;
    let comul = NatGen::new(sq, TensorWord::plain(1), TensorWord::plain(2), presquare.payload);
    let counit = NatGen::new(
        sq,
        TensorWord::plain(1),
        TensorWord::plain(0),
        first.counit.payload.tensor(&second.counit.payload),
    );
    let composite = ComonadData::new(comul, counit);
    let items = check_comonad(&composite, cfg)?
        .into_iter()
        .map(|item| CheckItem { id: format!("comp.{}", item.id), label: "lift.comon.comon", ..item })
        .collect();
    Ok((composite, items))
}
