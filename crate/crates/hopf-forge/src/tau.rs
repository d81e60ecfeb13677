//! Braided structure: local prebraidings τ, the double-entwining axioms, the
//! Yang–Baxter condition, τ-bimonads, the induced entwining
//! `τ̃ = mH·Hτ·δH`, doubling on H⊗H, the τ-opposite structure, the antipode
//! anti-homomorphism properties, and the two convolution products.

use crate::bimonad::BimonadData;
use crate::monad::{
    check_comonad, check_comonad_to_monad, check_monad, check_monad_to_comonad, diagram, squared_backend, word,
    ComonadData, MonadData,
};
use crate::pipeline::{CalcError, CheckConfig};
use crate::report::CheckItem;
use crate::word::{NatGen, TensorWord};

fn assert_braiding_shape(tau: &NatGen) {
    assert_eq!(
        (tau.src, tau.dst),
        (TensorWord::plain(2), TensorWord::plain(2)),
        "braiding must have shape 2 -> 2"
    );
}

/// Relabels sub-check items onto τ-specific ids and law labels.
fn remap(items: Vec<CheckItem>, table: &[(&str, &str, &'static str)]) -> Vec<CheckItem> {
    items
        .into_iter()
        .map(|item| {
            let (_, id, label) =
                table.iter().find(|(old, _, _)| *old == item.id).expect("sub-check id missing from remap table");
            CheckItem { id: id.to_string(), label, ..item }
        })
        .collect()
}

/// The eight double-entwining axioms: τ is simultaneously a mixed law from
/// the monad to the comonad and from the comonad to the monad.
pub fn check_double_entwining(
    tau: &NatGen,
    monad: &MonadData,
    comonad: &ComonadData,
    cfg: &CheckConfig,
) -> Result<Vec<CheckItem>, CalcError> {
    assert_braiding_shape(tau);
    let mut items = remap(
        check_monad_to_comonad(tau, monad, comonad, cfg)?,
        &[
            ("dist.m2c.unit", "tau.E.1.4", "E.1.4"),
            ("dist.m2c.counit", "tau.E.1.5", "E.1.5"),
            ("dist.m2c.comul", "tau.E.1.6", "E.1.6"),
            ("dist.m2c.mul", "tau.E.1.7", "E.1.7"),
        ],
    );
    items.extend(remap(
        check_comonad_to_monad(tau, comonad, monad, cfg)?,
        &[
            ("dist.c2m.unit", "tau.E.1.8", "E.1.8"),
            ("dist.c2m.counit", "tau.E.1.9", "E.1.9"),
            ("dist.c2m.mul", "tau.E.1.10", "E.1.10"),
            ("dist.c2m.comul", "tau.E.1.11", "E.1.11"),
        ],
    ));
    Ok(items)
}

/// The Yang–Baxter condition `τH·Hτ·τH = Hτ·τH·Hτ` at three factors.
pub fn check_yang_baxter(tau: &NatGen, cfg: &CheckConfig) -> Result<CheckItem, CalcError> {
    assert_braiding_shape(tau);
    let b = tau.backend;
    diagram(
        "tau.yang.baxter",
        "Yang",
        &word(b, 3).step(0, tau, 1).step(1, tau, 0).step(0, tau, 1),
        &word(b, 3).step(1, tau, 0).step(0, tau, 1).step(1, tau, 0),
        cfg,
    )
}

/// The involution condition `τ·τ = id`.
pub fn check_involutive(tau: &NatGen, cfg: &CheckConfig) -> Result<CheckItem, CalcError> {
    assert_braiding_shape(tau);
    let b = tau.backend;
    diagram("tau.involutive", "YB1", &word(b, 2).then(tau).then(tau), &word(b, 2), cfg)
}

/// Full τ-bimonad suite: monad laws, comonad laws, the eight double-entwining
/// axioms, the product/coproduct square `δ·m = mm·HτH·δδ` and the three
/// unit/counit squares.
pub fn check_tau_bimonad(
    monad: &MonadData,
    comonad: &ComonadData,
    tau: &NatGen,
    cfg: &CheckConfig,
) -> Result<Vec<CheckItem>, CalcError> {
    assert_braiding_shape(tau);
    let b = tau.backend;
    let (m, e) = (&monad.mul, &monad.unit);
    let (d, eps) = (&comonad.comul, &comonad.counit);
    let mut items = check_monad(monad, cfg)?;
    items.extend(check_comonad(comonad, cfg)?);
    items.extend(check_double_entwining(tau, monad, comonad, cfg)?);
    // δ·m = mm·HτH·δδ
    items.push(diagram(
        "tau.mul.comul",
        "D.1.2",
        &word(b, 2).then(m).then(d),
        &word(b, 2).step(0, d, 1).step(2, d, 0).step(1, tau, 1).step(0, m, 2).step(1, m, 0),
        cfg,
    )?);
    // ε·m = ε·Hε
    items.push(diagram(
        "tau.counit.mul",
        "D.1.3",
        &word(b, 2).then(m).then(eps),
        &word(b, 2).step(1, eps, 0).then(eps),
        cfg,
    )?);
    // δ·e = eH·e
    items.push(diagram(
        "tau.unit.comul",
        "D.1.3",
        &word(b, 0).then(e).then(d),
        &word(b, 0).then(e).step(0, e, 1),
        cfg,
    )?);
    // ε·e = 1
    items.push(diagram("tau.unit.counit", "D.1.3", &word(b, 0).then(e).then(eps), &word(b, 0), cfg)?);
    Ok(items)
}

/// The induced entwining `τ̃ = mH·Hτ·δH` as a materialized generator.
pub fn tau_entwining(
    monad: &MonadData,
    comonad: &ComonadData,
    tau: &NatGen,
    cfg: &CheckConfig,
) -> Result<NatGen, CalcError> {
    assert_braiding_shape(tau);
    let b = tau.backend;
    word(b, 2).step(0, &comonad.comul, 1).step(1, tau, 0).step(0, &monad.mul, 1).materialize(cfg)
}

/// Verifies that the induced entwining satisfies the four mixed
/// distributive-law axioms, returning τ̃ alongside the items.
pub fn check_tau_entwining(
    monad: &MonadData,
    comonad: &ComonadData,
    tau: &NatGen,
    cfg: &CheckConfig,
) -> Result<(NatGen, Vec<CheckItem>), CalcError> {
    let lam = tau_entwining(monad, comonad, tau, cfg)?;
    let items = remap(
        check_monad_to_comonad(&lam, monad, comonad, cfg)?,
        &[
            ("dist.m2c.unit", "tau.entwining.unit", "E.1.12"),
            ("dist.m2c.counit", "tau.entwining.counit", "E.1.13"),
            ("dist.m2c.comul", "tau.entwining.comul", "E.1.14"),
            ("dist.m2c.mul", "tau.entwining.mul", "E.1.15"),
        ],
    );
    Ok((lam, items))
}

/// Packages a τ-bimonad as a bimonad with mixed law `τ̃`.
pub fn bimonad_from_tau(
    monad: &MonadData,
    comonad: &ComonadData,
    tau: &NatGen,
    cfg: &CheckConfig,
) -> Result<BimonadData, CalcError> {
    let lam = tau_entwining(monad, comonad, tau, cfg)?;
    Ok(BimonadData::new(monad.clone(), comonad.clone(), lam))
}

/// A doubled τ-bimonad on the squared generator H⊗H, together with the full
/// verification suite run on the doubled data.
#[derive(Debug, Clone)]
pub struct DoubledBimonad {
    pub monad: MonadData,
    pub comonad: ComonadData,
    pub tau: NatGen,
    pub items: Vec<CheckItem>,
}

/// Builds the double of a τ-bimonad on H⊗H:
/// `m̄ = mm·HτH`, `ē = ee`, `δ̄ = HτH·δδ`, `ε̄ = εε`,
/// `τ̄ = HτH·(Hτ and τH on disjoint factors)·HτH`, and re-runs the full
/// τ-bimonad suite over the squared backend (ids prefixed `double.`).
///
/// Callers are responsible for the preconditions (τ-bimonad laws plus
/// Yang–Baxter); the returned suite re-verifies everything on the double.
pub fn double_bimonad(
    monad: &MonadData,
    comonad: &ComonadData,
    tau: &NatGen,
    cfg: &CheckConfig,
) -> Result<DoubledBimonad, CalcError> {
    assert_braiding_shape(tau);
    let b = tau.backend;
    let sq = squared_backend(b);
    let (m, e) = (&monad.mul, &monad.unit);
    let (d, eps) = (&comonad.comul, &comonad.counit);
    let pair = TensorWord::plain(2);
    let single = TensorWord::plain(1);
    let mul2 = word(b, 4).step(1, tau, 1).step(0, m, 2).step(1, m, 0).materialize(cfg)?;
    let comul2 = word(b, 2).step(0, d, 1).step(2, d, 0).step(1, tau, 1).materialize(cfg)?;
    let tau2 = word(b, 4).step(1, tau, 1).step(0, tau, 2).step(2, tau, 0).step(1, tau, 1).materialize(cfg)?;
    let dm = MonadData::new(
        NatGen::new(sq, pair, single, mul2.payload),
        NatGen::new(sq, TensorWord::plain(0), single, e.payload.tensor(&e.payload)),
    );
    let dc = ComonadData::new(
        NatGen::new(sq, single, pair, comul2.payload),
        NatGen::new(sq, single, TensorWord::plain(0), eps.payload.tensor(&eps.payload)),
    );
    let dtau = NatGen::new(sq, pair, pair, tau2.payload);
    let items = check_tau_bimonad(&dm, &dc, &dtau, cfg)?
        .into_iter()
        .map(|item| CheckItem { id: format!("double.{}", item.id), ..item })
        .collect();
    Ok(DoubledBimonad { monad: dm, comonad: dc, tau: dtau, items })
}

/// The τ-opposite structure: `m′ = m·τ`, `δ′ = τ·δ`, unchanged unit, counit
/// and braiding, together with precondition items (τ involutive, Yang–Baxter)
/// and the full τ-bimonad suite on the opposite (ids prefixed `opposite.`).
#[derive(Debug, Clone)]
pub struct OppositeBimonad {
    pub monad: MonadData,
    pub comonad: ComonadData,
    pub tau: NatGen,
    pub items: Vec<CheckItem>,
}

pub fn opposite_bimonad(
    monad: &MonadData,
    comonad: &ComonadData,
    tau: &NatGen,
    cfg: &CheckConfig,
) -> Result<OppositeBimonad, CalcError> {
    assert_braiding_shape(tau);
    let b = tau.backend;
    let mul_op = word(b, 2).then(tau).then(&monad.mul).materialize(cfg)?;
    let comul_op = word(b, 1).then(&comonad.comul).then(tau).materialize(cfg)?;
    let om = MonadData::new(mul_op, monad.unit.clone());
    let oc = ComonadData::new(comul_op, comonad.counit.clone());
    let mut items = vec![check_involutive(tau, cfg)?, check_yang_baxter(tau, cfg)?];
    items.extend(check_tau_bimonad(&om, &oc, tau, cfg)?.into_iter().map(|item| {
        // The monad laws on m·τ are one statement, the rest of the opposite
        // τ-bimonad suite another.
        let label = if item.id.starts_with("monad.") { "YB1" } else { "YB2" };
        CheckItem { id: format!("opposite.{}", item.id), label, ..item }
    }));
    Ok(OppositeBimonad { monad: om, comonad: oc, tau: tau.clone(), items })
}

/// Antipode anti-homomorphism properties over a braiding:
/// `S·m = m·SS·τ`, `δ·S = τ·SS·δ`, the two commutation hypotheses
/// `τ·HS = SH·τ` and `τ·SH = HS·τ`, unit/counit preservation, and the
/// morphism framing into the τ-opposite structure.
pub fn check_antipode_tau_props(
    monad: &MonadData,
    comonad: &ComonadData,
    tau: &NatGen,
    s: &NatGen,
    cfg: &CheckConfig,
) -> Result<Vec<CheckItem>, CalcError> {
    assert_braiding_shape(tau);
    let b = tau.backend;
    let (m, e) = (&monad.mul, &monad.unit);
    let (d, eps) = (&comonad.comul, &comonad.counit);
    let mut items = vec![
        // S·m = m·SS·τ
        diagram(
            "antipode.anti.mul",
            "bim.S.E",
            &word(b, 2).then(m).then(s),
            &word(b, 2).then(tau).step(0, s, 1).step(1, s, 0).then(m),
            cfg,
        )?,
        // δ·S = τ·SS·δ
        diagram(
            "antipode.anti.comul",
            "bim.S.E",
            &word(b, 1).then(s).then(d),
            &word(b, 1).then(d).step(0, s, 1).step(1, s, 0).then(tau),
            cfg,
        )?,
        // τ·HS = SH·τ
        diagram(
            "antipode.commute.right",
            "bim.anti",
            &word(b, 2).step(1, s, 0).then(tau),
            &word(b, 2).then(tau).step(0, s, 1),
            cfg,
        )?,
        // τ·SH = HS·τ
        diagram(
            "antipode.commute.left",
            "bim.anti",
            &word(b, 2).step(0, s, 1).then(tau),
            &word(b, 2).then(tau).step(1, s, 0),
            cfg,
        )?,
        // S·e = e
        diagram("antipode.unit", "bim.anti", &word(b, 0).then(e).then(s), &word(b, 0).then(e), cfg)?,
        // ε·S = ε
        diagram("antipode.counit", "bim.anti", &word(b, 1).then(s).then(eps), &word(b, 1).then(eps), cfg)?,
    ];
    let commute = items.iter().filter(|c| c.id.starts_with("antipode.commute.")).all(|c| c.ok);
    // The morphism framing into the opposite structure, and S as an antipode
    // for it, only make sense once the commutation hypotheses hold.
    if commute {
        // S·m = m′·SS: S is a monad morphism into the opposite product.
        items.push(diagram(
            "antipode.monad.morphism",
            "bim.anti",
            &word(b, 2).then(m).then(s),
            &word(b, 2).step(0, s, 1).step(1, s, 0).then(tau).then(m),
            cfg,
        )?);
        // δ·S = SS·δ′: S is a comonad morphism from the opposite coproduct.
        items.push(diagram(
            "antipode.comonad.morphism",
            "bim.anti",
            &word(b, 1).then(s).then(d),
            &word(b, 1).then(d).then(tau).step(0, s, 1).step(1, s, 0),
            cfg,
        )?);
        // m′·SH·δ′ = e·ε = m′·HS·δ′: S is an antipode for the opposite.
        let unit_counit = word(b, 1).then(eps).then(e);
        items.push(diagram(
            "antipode.opposite.left",
            "YB2",
            &word(b, 1).then(d).then(tau).step(0, s, 1).then(tau).then(m),
            &unit_counit,
            cfg,
        )?);
        items.push(diagram(
            "antipode.opposite.right",
            "YB2",
            &word(b, 1).then(d).then(tau).step(1, s, 0).then(tau).then(m),
            &unit_counit,
            cfg,
        )?);
    }
    Ok(items)
}

/// Convolution product on transformations `HH → H`:
/// `f * g = m·(f⊗g)·HτH·δδ`.
pub fn convolve_hh_h(
    f: &NatGen,
    g: &NatGen,
    monad: &MonadData,
    comonad: &ComonadData,
    tau: &NatGen,
    cfg: &CheckConfig,
) -> Result<NatGen, CalcError> {
    assert_eq!((f.src, f.dst), (TensorWord::plain(2), TensorWord::plain(1)), "f must have shape 2 -> 1");
    assert_eq!((g.src, g.dst), (TensorWord::plain(2), TensorWord::plain(1)), "g must have shape 2 -> 1");
    let b = tau.backend;
    let d = &comonad.comul;
    word(b, 2)
        .step(0, d, 1)
        .step(2, d, 0)
        .step(1, tau, 1)
        .step(0, f, 2)
        .step(1, g, 0)
        .then(&monad.mul)
        .materialize(cfg)
}

/// Unit of the convolution algebra on `HH → H`: `e·εε`.
pub fn convolution_unit_hh_h(
    monad: &MonadData,
    comonad: &ComonadData,
    cfg: &CheckConfig,
) -> Result<NatGen, CalcError> {
    let b = monad.backend();
    word(b, 2).step(1, &comonad.counit, 0).then(&comonad.counit).then(&monad.unit).materialize(cfg)
}

/// Convolution product on transformations `H → HH`: the comultiplication of
/// H followed by `f ⊗ g` and the multiplication `mm·HτH` of the doubled
/// monad on H⊗H.
pub fn convolve_h_hh(
    f: &NatGen,
    g: &NatGen,
    monad: &MonadData,
    comonad: &ComonadData,
    tau: &NatGen,
    cfg: &CheckConfig,
) -> Result<NatGen, CalcError> {
    assert_eq!((f.src, f.dst), (TensorWord::plain(1), TensorWord::plain(2)), "f must have shape 1 -> 2");
    assert_eq!((g.src, g.dst), (TensorWord::plain(1), TensorWord::plain(2)), "g must have shape 1 -> 2");
    let b = monad.backend();
    let m = &monad.mul;
    word(b, 1)
        .then(&comonad.comul)
        .step(0, f, 1)
        .step(2, g, 0)
        .step(1, tau, 1)
        .step(0, m, 2)
        .step(1, m, 0)
        .materialize(cfg)
}

/// Unit of the convolution algebra on `H → HH`: `ee·ε`.
pub fn convolution_unit_h_hh(
    monad: &MonadData,
    comonad: &ComonadData,
    cfg: &CheckConfig,
) -> Result<NatGen, CalcError> {
    let b = monad.backend();
    let e = &monad.unit;
    word(b, 1).then(&comonad.counit).then(e).step(0, e, 1).materialize(cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bimonad::{compute_antipode, AntipodeOutcome};
    use crate::catalog;
    use crate::instance::{plain_swap, Structure};
    use crate::word::Payload;

    fn cfg() -> CheckConfig {
        CheckConfig::default()
    }

    fn structure(name: &str) -> Structure {
        catalog::load(name).unwrap().1.to_structure()
    }

    fn parts(name: &str) -> (MonadData, ComonadData, NatGen) {
        let s = structure(name);
        (MonadData::new(s.m, s.e), ComonadData::new(s.delta, s.eps), s.tau)
    }

    fn all_ok(items: &[CheckItem]) -> bool {
        items.iter().all(|c| c.ok)
    }

    #[test]
    fn catalog_instances_are_tau_bimonads() {
        for name in ["c2_f2", "c3_f3", "s3_q", "sweedler_f5", "sweedler_q", "monoid_1z_f2", "exterior_f3", "z4_set", "monoid_1z_set"]
        {
            let (monad, comonad, tau) = parts(name);
            let items = check_tau_bimonad(&monad, &comonad, &tau, &cfg()).unwrap();
            assert!(all_ok(&items), "{name}: {:?}", items.iter().filter(|c| !c.ok).collect::<Vec<_>>());
            assert!(check_yang_baxter(&tau, &cfg()).unwrap().ok, "{name}");
            assert!(check_involutive(&tau, &cfg()).unwrap().ok, "{name}");
        }
    }

    /// The signed swap on the rank-1 graded instance passes the full τ
    /// suite; the plain swap fails exactly the product/coproduct square,
    /// with 0 on one side and a doubled term on the other.
    #[test]
    fn graded_instance_needs_signed_swap() {
        let (monad, comonad, tau) = parts("exterior_f3");
        let good = check_tau_bimonad(&monad, &comonad, &tau, &cfg()).unwrap();
        assert!(all_ok(&good), "{:?}", good.iter().filter(|c| !c.ok).collect::<Vec<_>>());

        let flat = plain_swap(monad.backend());
        let bad = check_tau_bimonad(&monad, &comonad, &flat, &cfg()).unwrap();
        let failing: Vec<&CheckItem> = bad.iter().filter(|c| !c.ok).collect();
        assert_eq!(failing.len(), 1, "{failing:?}");
        assert_eq!(failing[0].id, "tau.mul.comul");
        assert_eq!(failing[0].label, "D.1.2");
        let w = failing[0].witness.as_ref().unwrap();
        assert_eq!(w.input, "(1,1)");
        assert!(w.rhs.contains('2'), "{}", w.rhs);
    }

    #[test]
    fn induced_entwining_satisfies_mixed_law() {
        for name in ["c2_f2", "sweedler_f5", "exterior_f3", "z4_set"] {
            let (monad, comonad, tau) = parts(name);
            let (_, items) = check_tau_entwining(&monad, &comonad, &tau, &cfg()).unwrap();
            assert!(all_ok(&items), "{name}: {items:?}");
        }
    }

    /// On a group algebra the induced entwining is (g, h) ↦ (gh, g), not the
    /// plain swap.
    #[test]
    fn induced_entwining_on_group_algebra() {
        let (monad, comonad, tau) = parts("c3_f3");
        let lam = tau_entwining(&monad, &comonad, &tau, &cfg()).unwrap();
        let Payload::Mat(mat) = &lam.payload else { panic!("vect payload") };
        for g in 0..3 {
            for h in 0..3 {
                // Column g·3+h hits row (gh)·3+g.
                assert!(mat.get(((g + h) % 3) * 3 + g, g * 3 + h).is_one());
            }
        }
    }

    #[test]
    fn doubling_group_instance_gives_product_group() {
        let (monad, comonad, tau) = parts("c2_f2");
        let doubled = double_bimonad(&monad, &comonad, &tau, &cfg()).unwrap();
        assert!(all_ok(&doubled.items), "{:?}", doubled.items.iter().filter(|c| !c.ok).collect::<Vec<_>>());
        assert_eq!(doubled.monad.backend().base(), 4);
        let Payload::Mat(mul) = &doubled.monad.mul.payload else { panic!("vect payload") };
        // The double of the order-2 group algebra is the Klein four-group
        // algebra: (a, b) · (c, d) = (a xor c, b xor d).
        for x in 0..4usize {
            for y in 0..4usize {
                assert!(mul.get(x ^ y, x * 4 + y).is_one(), "({x},{y})");
            }
        }
    }

    #[test]
    fn doubling_set_instance_gives_product_table() {
        let (monad, comonad, tau) = parts("z4_set");
        let doubled = double_bimonad(&monad, &comonad, &tau, &cfg()).unwrap();
        assert!(all_ok(&doubled.items), "{:?}", doubled.items.iter().filter(|c| !c.ok).collect::<Vec<_>>());
        let Payload::Map(mul) = &doubled.monad.mul.payload else { panic!("set payload") };
        // Pairs (a, b) with index a·4+b multiply componentwise mod 4.
        for a in 0..4usize {
            for b in 0..4usize {
                for c in 0..4usize {
                    for d in 0..4usize {
                        let x = a * 4 + b;
                        let y = c * 4 + d;
                        assert_eq!(mul.apply(x * 16 + y), ((a + c) % 4) * 4 + (b + d) % 4);
                    }
                }
            }
        }
    }

    #[test]
    fn doubling_four_dim_instance_passes_lazily() {
        let (monad, comonad, tau) = parts("sweedler_f5");
        let doubled = double_bimonad(&monad, &comonad, &tau, &cfg()).unwrap();
        assert!(all_ok(&doubled.items), "{:?}", doubled.items.iter().filter(|c| !c.ok).collect::<Vec<_>>());
        assert_eq!(doubled.monad.backend().base(), 16);
    }

    #[test]
    fn opposite_is_involutive_and_verified() {
        let (monad, comonad, tau) = parts("s3_q");
        let op = opposite_bimonad(&monad, &comonad, &tau, &cfg()).unwrap();
        assert!(all_ok(&op.items), "{:?}", op.items.iter().filter(|c| !c.ok).collect::<Vec<_>>());
        // The group algebra of a noncommutative group has a genuinely
        // different opposite product.
        assert_ne!(op.monad.mul.payload, monad.mul.payload);
        let op2 = opposite_bimonad(&op.monad, &op.comonad, &op.tau, &cfg()).unwrap();
        assert_eq!(op2.monad.mul.payload, monad.mul.payload);
        assert_eq!(op2.comonad.comul.payload, comonad.comul.payload);
    }

    /// The 4-dimensional instance is noncommutative: the opposite product
    /// differs on mixed products of g and x.
    #[test]
    fn four_dim_opposite_differs_at_mixed_product() {
        let (monad, comonad, tau) = parts("sweedler_f5");
        let op = opposite_bimonad(&monad, &comonad, &tau, &cfg()).unwrap();
        assert!(all_ok(&op.items), "{:?}", op.items.iter().filter(|c| !c.ok).collect::<Vec<_>>());
        let idx = op.monad.mul.payload.first_difference(&monad.mul.payload).unwrap();
        // Basis order 1, g, x, gx: the first differing column is g⊗x = 1·4+2,
        // where the product is gx but the opposite product is xg = -gx.
        assert_eq!(idx, 4 + 2);
    }

    #[test]
    fn antipode_anti_homomorphism_properties() {
        for name in ["c2_f2", "c3_f3", "s3_q", "sweedler_f5", "z4_set"] {
            let (monad, comonad, tau) = parts(name);
            let h = bimonad_from_tau(&monad, &comonad, &tau, &cfg()).unwrap();
            let AntipodeOutcome::Found(cand) = compute_antipode(&h, &cfg()).unwrap() else {
                panic!("{name}: antipode expected");
            };
            assert!(cand.verified(), "{name}");
            let items = check_antipode_tau_props(&monad, &comonad, &tau, &cand.s, &cfg()).unwrap();
            assert!(all_ok(&items), "{name}: {:?}", items.iter().filter(|c| !c.ok).collect::<Vec<_>>());
        }
    }

    #[test]
    fn identity_is_not_an_anti_homomorphism_on_noncommutative_instance() {
        let (monad, comonad, tau) = parts("s3_q");
        let id = NatGen::identity(tau.backend, TensorWord::plain(1));
        let items = check_antipode_tau_props(&monad, &comonad, &tau, &id, &cfg()).unwrap();
        let anti = items.iter().find(|c| c.id == "antipode.anti.mul").unwrap();
        assert!(!anti.ok);
        assert!(anti.witness.is_some());
    }

    /// `(S·m) * m = e·εε` in the convolution algebra on `HH → H`.
    #[test]
    fn convolution_identity_two_to_one() {
        for name in ["sweedler_f5", "c3_f3", "z4_set"] {
            let (monad, comonad, tau) = parts(name);
            let h = bimonad_from_tau(&monad, &comonad, &tau, &cfg()).unwrap();
            let AntipodeOutcome::Found(cand) = compute_antipode(&h, &cfg()).unwrap() else { panic!() };
            let b = tau.backend;
            let sm = word(b, 2).then(&monad.mul).then(&cand.s).materialize(&cfg()).unwrap();
            let prod = convolve_hh_h(&sm, &monad.mul, &monad, &comonad, &tau, &cfg()).unwrap();
            let unit = convolution_unit_hh_h(&monad, &comonad, &cfg()).unwrap();
            assert_eq!(prod.payload.first_difference(&unit.payload), None, "{name}");
        }
    }

    /// `(δ·S) * δ = ee·ε` and `δ * (τ·SS·δ) = ee·ε` in the convolution
    /// algebra on `H → HH`.
    #[test]
    fn convolution_identities_one_to_two() {
        for name in ["sweedler_f5", "c3_f3", "z4_set"] {
            let (monad, comonad, tau) = parts(name);
            let h = bimonad_from_tau(&monad, &comonad, &tau, &cfg()).unwrap();
            let AntipodeOutcome::Found(cand) = compute_antipode(&h, &cfg()).unwrap() else { panic!() };
            let b = tau.backend;
            let s = &cand.s;
            let d = &comonad.comul;
            let ds = word(b, 1).then(s).then(d).materialize(&cfg()).unwrap();
            let left = convolve_h_hh(&ds, d, &monad, &comonad, &tau, &cfg()).unwrap();
            let unit = convolution_unit_h_hh(&monad, &comonad, &cfg()).unwrap();
            assert_eq!(left.payload.first_difference(&unit.payload), None, "{name}");
            let tssd = word(b, 1).then(d).step(0, s, 1).step(1, s, 0).then(&tau).materialize(&cfg()).unwrap();
            let right = convolve_h_hh(d, &tssd, &monad, &comonad, &tau, &cfg()).unwrap();
            assert_eq!(right.payload.first_difference(&unit.payload), None, "{name}");
        }
    }

    #[test]
    fn convolution_unit_is_neutral() {
        let (monad, comonad, tau) = parts("sweedler_f5");
        let unit = convolution_unit_hh_h(&monad, &comonad, &cfg()).unwrap();
        let m = &monad.mul;
        let left = convolve_hh_h(&unit, m, &monad, &comonad, &tau, &cfg()).unwrap();
        let right = convolve_hh_h(m, &unit, &monad, &comonad, &tau, &cfg()).unwrap();
        assert_eq!(left.payload.first_difference(&m.payload), None);
        assert_eq!(right.payload.first_difference(&m.payload), None);
    }
}
