//! Distributive-law axioms and everything they enable: composing the two
//! monads through the law, the monad-in-monad encoding, the three
//! projections, morphism-level checks, Yang-Baxter and n-fold systems.
//!
//! Orientation is normalized once and for all: a law runs
//! `second∘first => first∘second`. Monad-morphism components are colax,
//! `carrier∘T_src => T_tgt∘carrier`, matching the explicit cell description
//! the encode/decode round trip is checked against.

use crate::container::{
    check_monad, eval_morphism_on_set, law_witness, Container, ContainerMorphism, FinSet,
    MonadData,
};
use crate::error::{Error, Result};
use crate::gray::NFoldSystem;
use crate::report::{CheckInstance, CheckReport};
use std::collections::BTreeMap;

/// A candidate distributive law `law: second∘first => first∘second` between
/// two monads on the same object. The four axioms are a checkable property,
/// not a constructor invariant.
#[derive(Debug, Clone, PartialEq)]
pub struct DistLawData {
    pub first: MonadData,
    pub second: MonadData,
    pub law: ContainerMorphism,
}

impl DistLawData {
    pub fn new(first: MonadData, second: MonadData, law: ContainerMorphism) -> Result<Self> {
        let src = second.functor.compose(&first.functor);
        let tgt = first.functor.compose(&second.functor);
        if law.src() != &src || law.tgt() != &tgt {
            return Err(Error::BoundaryMismatch(format!(
                "law must run {}∘{} => {}∘{}",
                second.name, first.name, first.name, second.name
            )));
        }
        Ok(DistLawData { first, second, law })
    }

    pub fn name(&self) -> String {
        format!("{}/{}", self.second.name, self.first.name)
    }
}

/// The four distributive-law axioms by container equality: two unit
/// triangles, two multiplication pentagons.
pub fn check_dist_law(d: &DistLawData) -> CheckReport {
    let mut report = CheckReport::new(format!("dist({})", d.name()));
    for (tag, lhs, rhs) in dist_law_sides(d) {
        report.record(tag, law_witness(&lhs, &rhs));
    }
    report
}

/// The same four axioms decided purely by the pointwise oracle on sets of
/// size up to `max_size`; the independent route for verdict cross-checks.
pub fn check_dist_law_pointwise(d: &DistLawData, max_size: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("dist-pointwise({})", d.name()));
    for (tag, lhs, rhs) in dist_law_sides(d) {
        let mut witness = None;
        for size in 0..=max_size {
            let x = FinSet::new(size);
            let la = eval_morphism_on_set(&lhs, x);
            let lb = eval_morphism_on_set(&rhs, x);
            if la != lb {
                let e = (0..la.dom().size).find(|&e| la.apply(e) != lb.apply(e)).unwrap();
                witness = Some(format!("at |X|={size} element {e}"));
                break;
            }
        }
        report.record(tag, witness);
    }
    report
}

/// Both sides of each axiom, tagged.
fn dist_law_sides(d: &DistLawData) -> Vec<(String, ContainerMorphism, ContainerMorphism)> {
    let t = &d.first.functor;
    let s = &d.second.functor;
    let gamma = &d.law;
    let wi = ContainerMorphism::whisker_inner;
    let wo = ContainerMorphism::whisker_outer;
    let v = |a: &ContainerMorphism, b: &ContainerMorphism| {
        ContainerMorphism::vertical(a, b).expect("axiom boundary")
    };
    vec![
        // γ ∘ (S·η₁) = η₁·S : S => T∘S
        (
            "dist.unit-first".into(),
            v(gamma, &wo(s, &d.first.unit)),
            wi(&d.first.unit, s),
        ),
        // γ ∘ (η₂·T) = T·η₂ : T => T∘S
        (
            "dist.unit-second".into(),
            v(gamma, &wi(&d.second.unit, t)),
            wo(t, &d.second.unit),
        ),
        // γ ∘ (S·μ₁) = (μ₁·S) ∘ (T·γ) ∘ (γ·T) : S∘T∘T => T∘S
        (
            "dist.mult-first".into(),
            v(gamma, &wo(s, &d.first.mult)),
            v(&wi(&d.first.mult, s), &v(&wo(t, gamma), &wi(gamma, t))),
        ),
        // γ ∘ (μ₂·T) = (T·μ₂) ∘ (γ·S) ∘ (S·γ) : S∘S∘T => T∘S
        (
            "dist.mult-second".into(),
            v(gamma, &wi(&d.second.mult, t)),
            v(&wo(t, &d.second.mult), &v(&wi(gamma, s), &wo(s, gamma))),
        ),
    ]
}

/// The composite monad on `first∘second`: unit `η₁·η₂`, multiplication
/// `(μ₁·μ₂) ∘ (T·γ·S)`. Passes check_monad whenever the law passes
/// check_dist_law.
pub fn compose_via_law(d: &DistLawData) -> MonadData {
    let t = &d.first.functor;
    let s = &d.second.functor;
    let carrier = t.compose(s);
    let unit = ContainerMorphism::horizontal(&d.first.unit, &d.second.unit)
        .expect("unit boundaries");
    let middle = ContainerMorphism::whisker_outer(
        t,
        &ContainerMorphism::whisker_inner(&d.law, s),
    );
    let mults = ContainerMorphism::horizontal(&d.first.mult, &d.second.mult)
        .expect("mult boundaries");
    let mult = ContainerMorphism::vertical(&mults, &middle).expect("composite mult");
    MonadData::new(
        format!("{}∘{}", d.first.name, d.second.name),
        carrier,
        unit,
        mult,
    )
    .expect("composite monad boundaries")
}

// ---------------------------------------------------------------------------
// Monad morphisms
// ---------------------------------------------------------------------------

/// A 1-cell of the 2-category of monads: a carrier endofunctor `f` with a
/// colax component `φ: f∘T_src => T_tgt∘f`.
#[derive(Debug, Clone, PartialEq)]
pub struct MonadMorphismData {
    pub carrier: Container,
    pub component: ContainerMorphism,
}

impl MonadMorphismData {
    pub fn new(source: &MonadData, target: &MonadData, carrier: Container, component: ContainerMorphism) -> Result<Self> {
        let src = carrier.compose(&source.functor);
        let tgt = target.functor.compose(&carrier);
        if component.src() != &src || component.tgt() != &tgt {
            return Err(Error::BoundaryMismatch(format!(
                "component must run f∘{} => {}∘f",
                source.name, target.name
            )));
        }
        Ok(MonadMorphismData { carrier, component })
    }

    pub fn identity(m: &MonadData) -> Self {
        MonadMorphismData {
            carrier: Container::identity(),
            component: ContainerMorphism::identity(&m.functor),
        }
    }

    /// `(f2, φ2) · (f1, φ1) = (f2∘f1, (φ2·f1) ∘ (f2·φ1))`.
    pub fn compose(later: &MonadMorphismData, earlier: &MonadMorphismData) -> Result<Self> {
        let carrier = later.carrier.compose(&earlier.carrier);
        let component = ContainerMorphism::vertical(
            &ContainerMorphism::whisker_inner(&later.component, &earlier.carrier),
            &ContainerMorphism::whisker_outer(&later.carrier, &earlier.component),
        )?;
        Ok(MonadMorphismData { carrier, component })
    }
}

/// Unit and multiplication compatibility squares for a monad morphism.
pub fn check_monad_morphism(
    source: &MonadData,
    target: &MonadData,
    m: &MonadMorphismData,
) -> CheckReport {
    let mut report = CheckReport::new(format!("mnd-morphism({}->{})", source.name, target.name));
    let f = &m.carrier;
    let phi = &m.component;
    let wi = ContainerMorphism::whisker_inner;
    let wo = ContainerMorphism::whisker_outer;
    let v = |a: &ContainerMorphism, b: &ContainerMorphism| ContainerMorphism::vertical(a, b);

    // φ ∘ (f·η_src) = η_tgt·f
    match v(phi, &wo(f, &source.unit)) {
        Ok(lhs) => report.record(
            "mnd-morphism.unit",
            law_witness(&lhs, &wi(&target.unit, f)),
        ),
        Err(e) => report.record("mnd-morphism.unit", Some(e.to_string())),
    }
    // φ ∘ (f·μ_src) = (μ_tgt·f) ∘ (T_tgt·φ) ∘ (φ·T_src)
    let rhs = v(
        &wi(&target.mult, f),
        &v(&wo(&target.functor, phi), &wi(phi, &source.functor)).expect("mult ladder"),
    )
    .expect("mult ladder");
    match v(phi, &wo(f, &source.mult)) {
        Ok(lhs) => report.record("mnd-morphism.mult", law_witness(&lhs, &rhs)),
        Err(e) => report.record("mnd-morphism.mult", Some(e.to_string())),
    }
    report
}

/// The 2-cell condition in the 2-category of monads for `cell: (f,φ₁) -> (g,φ₂)`:
/// `φ₂ ∘ (cell·T_src) = (T_tgt·cell) ∘ φ₁`.
pub fn monad_two_cell_condition(
    source: &MonadData,
    target: &MonadData,
    from: &MonadMorphismData,
    to: &MonadMorphismData,
    cell: &ContainerMorphism,
) -> Option<String> {
    let lhs = match ContainerMorphism::vertical(
        &to.component,
        &ContainerMorphism::whisker_inner(cell, &source.functor),
    ) {
        Ok(x) => x,
        Err(e) => return Some(e.to_string()),
    };
    let rhs = match ContainerMorphism::vertical(
        &ContainerMorphism::whisker_outer(&target.functor, cell),
        &from.component,
    ) {
        Ok(x) => x,
        Err(e) => return Some(e.to_string()),
    };
    law_witness(&lhs, &rhs)
}

// ---------------------------------------------------------------------------
// Distributive laws as monads in monads
// ---------------------------------------------------------------------------

/// The nested record: a monad in the 2-category of monads. The base is the
/// law's first monad; the carrier 1-cell is the second monad's functor with
/// the law as its colax component, and the second monad's unit and
/// multiplication are the 2-cells.
#[derive(Debug, Clone, PartialEq)]
pub struct MonadInMnd {
    pub base: MonadData,
    pub carrier: MonadMorphismData,
    pub carrier_name: String,
    pub unit: ContainerMorphism,
    pub mult: ContainerMorphism,
}

pub fn encode_as_monad_in_mnd(d: &DistLawData) -> MonadInMnd {
    MonadInMnd {
        base: d.first.clone(),
        carrier: MonadMorphismData {
            carrier: d.second.functor.clone(),
            component: d.law.clone(),
        },
        carrier_name: d.second.name.clone(),
        unit: d.second.unit.clone(),
        mult: d.second.mult.clone(),
    }
}

pub fn decode_from_monad_in_mnd(m: &MonadInMnd) -> Result<DistLawData> {
    let second = MonadData::new(
        m.carrier_name.clone(),
        m.carrier.carrier.clone(),
        m.unit.clone(),
        m.mult.clone(),
    )?;
    DistLawData::new(m.base.clone(), second, m.carrier.component.clone())
}

/// The four cell conditions of the nested monad, in correspondence with the
/// four distributive-law axioms (see [`mnd_condition_for`]).
pub fn check_monad_in_mnd(m: &MonadInMnd) -> CheckReport {
    let mut report = CheckReport::new("monad-in-mnd");
    let one_cell = check_monad_morphism(&m.base, &m.base, &m.carrier);
    for inst in one_cell.instances {
        let tag = match inst.tag.as_str() {
            "mnd-morphism.unit" => "mnd.cell-unit",
            "mnd-morphism.mult" => "mnd.cell-mult",
            other => other,
        };
        report.push(CheckInstance {
            tag: tag.into(),
            ..inst
        });
    }
    // η as a 2-cell from the identity 1-cell to the carrier
    let id_cell = MonadMorphismData::identity(&m.base);
    report.record(
        "mnd.unit-2cell",
        monad_two_cell_condition(&m.base, &m.base, &id_cell, &m.carrier, &m.unit),
    );
    // μ as a 2-cell from carrier·carrier to the carrier
    match MonadMorphismData::compose(&m.carrier, &m.carrier) {
        Ok(squared) => report.record(
            "mnd.mult-2cell",
            monad_two_cell_condition(&m.base, &m.base, &squared, &m.carrier, &m.mult),
        ),
        Err(e) => report.record("mnd.mult-2cell", Some(e.to_string())),
    }
    report
}

/// The fixed axiom correspondence between the two routes.
pub fn mnd_condition_for(dist_tag: &str) -> Option<&'static str> {
    match dist_tag {
        "dist.unit-first" => Some("mnd.cell-unit"),
        "dist.mult-first" => Some("mnd.cell-mult"),
        "dist.unit-second" => Some("mnd.unit-2cell"),
        "dist.mult-second" => Some("mnd.mult-2cell"),
        _ => None,
    }
}

// ---------------------------------------------------------------------------
// Morphisms of distributive laws and the three projections
// ---------------------------------------------------------------------------

/// A 1-cell between distributive laws: one carrier, one component per monad
/// pair, both colax.
#[derive(Debug, Clone, PartialEq)]
pub struct DistMorphismData {
    pub carrier: Container,
    pub first_component: ContainerMorphism,
    pub second_component: ContainerMorphism,
}

impl DistMorphismData {
    pub fn identity(d: &DistLawData) -> Self {
        DistMorphismData {
            carrier: Container::identity(),
            first_component: ContainerMorphism::identity(&d.first.functor),
            second_component: ContainerMorphism::identity(&d.second.functor),
        }
    }

    pub fn compose(later: &DistMorphismData, earlier: &DistMorphismData) -> Result<Self> {
        let first = MonadMorphismData::compose(
            &MonadMorphismData {
                carrier: later.carrier.clone(),
                component: later.first_component.clone(),
            },
            &MonadMorphismData {
                carrier: earlier.carrier.clone(),
                component: earlier.first_component.clone(),
            },
        )?;
        let second = MonadMorphismData::compose(
            &MonadMorphismData {
                carrier: later.carrier.clone(),
                component: later.second_component.clone(),
            },
            &MonadMorphismData {
                carrier: earlier.carrier.clone(),
                component: earlier.second_component.clone(),
            },
        )?;
        Ok(DistMorphismData {
            carrier: first.carrier,
            first_component: first.component,
            second_component: second.component,
        })
    }

    pub fn first_part(&self) -> MonadMorphismData {
        MonadMorphismData {
            carrier: self.carrier.clone(),
            component: self.first_component.clone(),
        }
    }

    pub fn second_part(&self) -> MonadMorphismData {
        MonadMorphismData {
            carrier: self.carrier.clone(),
            component: self.second_component.clone(),
        }
    }
}

/// The three conditions on a morphism of laws: monad morphism on the first
/// parts, on the second parts, and the hexagon mixing both components with
/// the two laws.
pub fn check_dist_morphism(
    src: &DistLawData,
    tgt: &DistLawData,
    m: &DistMorphismData,
) -> CheckReport {
    let mut report = CheckReport::new("dist-morphism");
    report.absorb(
        "first.",
        check_monad_morphism(&src.first, &tgt.first, &m.first_part()),
    );
    report.absorb(
        "second.",
        check_monad_morphism(&src.second, &tgt.second, &m.second_part()),
    );
    // (T₂·ψ) ∘ (φ·S₁) ∘ (f·σ₁) = (σ₂·f) ∘ (S₂·φ) ∘ (ψ·T₁)
    let f = &m.carrier;
    let phi = &m.first_component;
    let psi = &m.second_component;
    let wi = ContainerMorphism::whisker_inner;
    let wo = ContainerMorphism::whisker_outer;
    let lhs = ContainerMorphism::vertical(
        &wo(&tgt.first.functor, psi),
        &ContainerMorphism::vertical(&wi(phi, &src.second.functor), &wo(f, &src.law))
            .expect("hexagon lhs"),
    )
    .expect("hexagon lhs");
    let rhs = ContainerMorphism::vertical(
        &wi(&tgt.law, f),
        &ContainerMorphism::vertical(&wo(&tgt.second.functor, phi), &wi(psi, &src.first.functor))
            .expect("hexagon rhs"),
    )
    .expect("hexagon rhs");
    report.record("hexagon", law_witness(&lhs, &rhs));
    report
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Projection {
    U1,
    U2,
    C,
}

/// The projections to the 2-category of monads: the two underlying monads
/// and the composite through the law.
pub fn dist_projections(d: &DistLawData, which: Projection) -> MonadData {
    match which {
        Projection::U1 => d.first.clone(),
        Projection::U2 => d.second.clone(),
        Projection::C => compose_via_law(d),
    }
}

/// Action of the projections on 1-cells; the composite sends `(f, φ, ψ)` to
/// `(f, (T₂·ψ) ∘ (φ·S₁))`.
pub fn dist_projections_on_morphism(
    src: &DistLawData,
    tgt: &DistLawData,
    m: &DistMorphismData,
    which: Projection,
) -> Result<MonadMorphismData> {
    match which {
        Projection::U1 => Ok(m.first_part()),
        Projection::U2 => Ok(m.second_part()),
        Projection::C => {
            let component = ContainerMorphism::vertical(
                &ContainerMorphism::whisker_outer(&tgt.first.functor, &m.second_component),
                &ContainerMorphism::whisker_inner(&m.first_component, &src.second.functor),
            )?;
            Ok(MonadMorphismData {
                carrier: m.carrier.clone(),
                component,
            })
        }
    }
}

// ---------------------------------------------------------------------------
// Yang-Baxter and n-fold systems
// ---------------------------------------------------------------------------

/// The hexagon among three pairwise laws, in the orientation
/// `λ_ij: T_j∘T_i => T_i∘T_j`:
/// `(T₁·λ23) ∘ (λ13·T₂) ∘ (T₃·λ12) = (λ12·T₃) ∘ (T₂·λ13) ∘ (λ23·T₁)`.
pub fn check_yang_baxter(
    t1: &MonadData,
    t2: &MonadData,
    t3: &MonadData,
    law12: &ContainerMorphism,
    law13: &ContainerMorphism,
    law23: &ContainerMorphism,
) -> Result<CheckReport> {
    for (tag, law, a, b) in [
        ("λ12", law12, t1, t2),
        ("λ13", law13, t1, t3),
        ("λ23", law23, t2, t3),
    ] {
        let src = b.functor.compose(&a.functor);
        let tgt = a.functor.compose(&b.functor);
        if law.src() != &src || law.tgt() != &tgt {
            return Err(Error::BoundaryMismatch(format!(
                "{tag} must run {}∘{} => {}∘{}",
                b.name, a.name, a.name, b.name
            )));
        }
    }
    let wi = ContainerMorphism::whisker_inner;
    let wo = ContainerMorphism::whisker_outer;
    let lhs = ContainerMorphism::vertical(
        &wo(&t1.functor, law23),
        &ContainerMorphism::vertical(&wi(law13, &t2.functor), &wo(&t3.functor, law12))?,
    )?;
    let rhs = ContainerMorphism::vertical(
        &wi(law12, &t3.functor),
        &ContainerMorphism::vertical(&wo(&t2.functor, law13), &wi(law23, &t1.functor))?,
    )?;
    let mut report = CheckReport::new("yang-baxter");
    report.record("yang-baxter", law_witness(&lhs, &rhs));
    Ok(report)
}

/// A 2-fold system from a single law: monads `(second, first)`, one entry.
pub fn nfold_from_pair(d: DistLawData) -> Result<NFoldSystem> {
    let monads = vec![d.second.clone(), d.first.clone()];
    let mut laws = BTreeMap::new();
    laws.insert((1, 2), d);
    NFoldSystem::new(monads, laws)
}

/// Aggregate check: every monad, every pairwise law, every Yang-Baxter
/// triple. Tags carry the 1-based system indices.
pub fn check_nfold(s: &NFoldSystem) -> CheckReport {
    let n = s.n();
    let mut report = CheckReport::new(format!("nfold({n})"));
    for (i, m) in s.monads.iter().enumerate() {
        let sub = check_monad(m);
        for inst in sub.instances {
            report.push(CheckInstance {
                tag: inst.tag.replacen("monad.", &format!("monad({}).", i + 1), 1),
                ..inst
            });
        }
    }
    for ((i, j), law) in &s.laws {
        let sub = check_dist_law(law);
        for inst in sub.instances {
            report.push(CheckInstance {
                tag: inst.tag.replacen("dist.", &format!("dist({i},{j})."), 1),
                ..inst
            });
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                // The shared hexagon checker expects λ_xy: T_y∘T_x => T_x∘T_y,
                // which the stored orientation provides after reversing the
                // triple: (T'_1,T'_2,T'_3) := (T_k,T_j,T_i).
                let sub = check_yang_baxter(
                    &s.monads[k - 1],
                    &s.monads[j - 1],
                    &s.monads[i - 1],
                    &s.laws[&(j, k)].law,
                    &s.laws[&(i, k)].law,
                    &s.laws[&(i, j)].law,
                );
                match sub {
                    Ok(sub) => {
                        let witness = sub.instances.into_iter().find(|x| !x.pass).map(|x| x.witness);
                        report.record(format!("yang-baxter({i},{j},{k})"), witness);
                    }
                    Err(e) => report.record(format!("yang-baxter({i},{j},{k})"), Some(e.to_string())),
                }
            }
        }
    }
    report
}

// ---------------------------------------------------------------------------
// Mutations (fault injection for negative tests and scenarios)
// ---------------------------------------------------------------------------

/// Systematic small perturbations of a transformation: every single-entry
/// shape redirection (with a padded position table where fiber sizes change)
/// and every single-entry position change. The original is not included.
pub fn morphism_mutations(m: &ContainerMorphism) -> Vec<ContainerMorphism> {
    let mut out = Vec::new();
    let src = m.src();
    let tgt = m.tgt();
    for s in 0..src.shape_count() {
        for new_t in 0..tgt.shape_count() {
            if new_t == m.shape_map()[s] {
                continue;
            }
            if tgt.pos_count(new_t) > 0 && src.pos_count(s) == 0 {
                continue;
            }
            let mut shape_map = m.shape_map().to_vec();
            let mut pos_maps = m.pos_maps().to_vec();
            shape_map[s] = new_t;
            pos_maps[s] = (0..tgt.pos_count(new_t))
                .map(|r| *m.pos_maps()[s].get(r).unwrap_or(&0))
                .collect();
            if let Ok(mutant) =
                ContainerMorphism::new(src.clone(), tgt.clone(), shape_map, pos_maps)
            {
                out.push(mutant);
            }
        }
        for r in 0..m.pos_maps()[s].len() {
            for new_p in 0..src.pos_count(s) {
                if new_p == m.pos_maps()[s][r] {
                    continue;
                }
                let mut pos_maps = m.pos_maps().to_vec();
                pos_maps[s][r] = new_p;
                if let Ok(mutant) = ContainerMorphism::new(
                    src.clone(),
                    tgt.clone(),
                    m.shape_map().to_vec(),
                    pos_maps,
                ) {
                    out.push(mutant);
                }
            }
        }
    }
    out
}

/// A fixed deterministic corruption used by negative scenarios: the first
/// mutation that still has valid boundaries.
pub fn corrupt_law(d: &DistLawData) -> Result<DistLawData> {
    let mutants = morphism_mutations(&d.law);
    let law = mutants
        .into_iter()
        .next()
        .ok_or_else(|| Error::InvalidParameter("law admits no mutation".into()))?;
    DistLawData::new(d.first.clone(), d.second.clone(), law)
}
