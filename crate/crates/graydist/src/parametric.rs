//! The two parametric constructions and their Eilenberg-Moore content:
//! the Writer law through the canonical strength, the Either law through
//! the coslice lift, module and coslice lifts with the `U∘T̂ = T∘U`
//! carrier contract, functoriality spot-checks, and the cocartesian
//! structure lemmas verified by exhaustive enumeration.

use crate::container::{
    all_functions, apply_container, either, elem_decode, elem_encode, eval_morphism_on_set,
    eval_on_set, writer, Container, ContainerMorphism, FinFunction, FinSet, MonadData,
    MonoidTable,
};
use crate::error::{Error, Result};
use crate::laws::{
    check_dist_morphism, check_monad_morphism, DistLawData, DistMorphismData, MonadMorphismData,
};
use crate::report::CheckReport;

/// `Writer_M∘T => T∘Writer_M`: the canonical strength `M × T(B) -> T(M × B)`
/// in shape/position form. Slots: `first = T`, `second = Writer_M`.
pub fn dwriter(m: &MonoidTable, t: &MonadData) -> Result<DistLawData> {
    let w = writer(m);
    let src = w.functor.compose(&t.functor);
    let tgt = t.functor.compose(&w.functor);
    let t_depth = t.functor.depth();
    let mut shape_map = Vec::with_capacity(src.shape_count());
    let mut pos_maps = Vec::with_capacity(src.shape_count());
    for c in 0..src.shape_count() {
        let (m_shape, asg) = src.split_shape(1, c);
        let t_shape = asg[0];
        let target = tgt.join_shape(
            t_depth,
            t_shape,
            &vec![m_shape; t.functor.pos_count(t_shape)],
        );
        let pm = (0..tgt.pos_count(target))
            .map(|r| {
                let (p_t, _) = tgt.split_pos(t_depth, target, r);
                src.join_pos(1, c, 0, p_t)
            })
            .collect();
        shape_map.push(target);
        pos_maps.push(pm);
    }
    let law = ContainerMorphism::new(src, tgt, shape_map, pos_maps)?;
    DistLawData::new(t.clone(), w, law)
}

/// `Either_A∘T => T∘Either_A`: the unique law inducing the coslice lift,
/// `⟨η_{A+B}∘ℓ, T(r)⟩ : A + T(B) -> T(A + B)` in shape/position form.
/// Slots: `first = T`, `second = Either_A`.
pub fn deither(a: FinSet, t: &MonadData) -> Result<DistLawData> {
    let e = either(a);
    let n = a.size;
    let src = e.functor.compose(&t.functor);
    let tgt = t.functor.compose(&e.functor);
    let t_depth = t.functor.depth();
    let eta_shape = t.unit.shape_map()[0];
    let mut shape_map = Vec::with_capacity(src.shape_count());
    let mut pos_maps = Vec::with_capacity(src.shape_count());
    for c in 0..src.shape_count() {
        let (e_shape, asg) = src.split_shape(1, c);
        if e_shape < n {
            // ℓa ↦ η_{A+B}(ℓa): the unit shape of T filled with the constant
            // shape a, which has no positions.
            let target = tgt.join_shape(
                t_depth,
                eta_shape,
                &vec![e_shape; t.functor.pos_count(eta_shape)],
            );
            shape_map.push(target);
            pos_maps.push(Vec::new());
        } else {
            // r(t-value) ↦ T(r): keep the T-shape, wrap every position.
            let t_shape = asg[0];
            let target = tgt.join_shape(
                t_depth,
                t_shape,
                &vec![n; t.functor.pos_count(t_shape)],
            );
            let pm = (0..tgt.pos_count(target))
                .map(|r| {
                    let (p_t, _) = tgt.split_pos(t_depth, target, r);
                    src.join_pos(1, c, 0, p_t)
                })
                .collect();
            shape_map.push(target);
            pos_maps.push(pm);
        }
    }
    let law = ContainerMorphism::new(src, tgt, shape_map, pos_maps)?;
    DistLawData::new(t.clone(), e, law)
}

// ---------------------------------------------------------------------------
// Modules over a monoid and their lift along a strong monad
// ---------------------------------------------------------------------------

/// An object of the Eilenberg-Moore category in one of its two concrete
/// guises: an M-module action, or a coslice point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleObject {
    /// Carrier `A` with action `M × A -> A` satisfying the module laws
    /// (enforced at construction).
    WriterModule { carrier: FinSet, action: FinFunction },
    /// Carrier `X` with a point `A -> X` (no laws beyond totality).
    CoslicePoint { carrier: FinSet, point: FinFunction },
}

/// Build a validated writer module; rejects non-unital or non-associative
/// actions.
pub fn writer_module(m: &MonoidTable, carrier: FinSet, action: FinFunction) -> Result<ModuleObject> {
    let msize = m.size();
    if action.dom().size != msize * carrier.size || action.cod() != carrier {
        return Err(Error::InvalidModule("action must map M × A to A".into()));
    }
    let act = |mv: usize, av: usize| action.apply(mv * carrier.size + av);
    for av in 0..carrier.size {
        if act(m.unit, av) != av {
            return Err(Error::InvalidModule(format!("unit law fails at {av}")));
        }
    }
    for m1 in 0..msize {
        for m2 in 0..msize {
            for av in 0..carrier.size {
                if act(m1, act(m2, av)) != act(m.mul(m1, m2), av) {
                    return Err(Error::InvalidModule(format!(
                        "associativity fails at ({m1},{m2},{av})"
                    )));
                }
            }
        }
    }
    Ok(ModuleObject::WriterModule { carrier, action })
}

/// The free module `M × A` with action by multiplication.
pub fn free_writer_module(m: &MonoidTable, a: FinSet) -> ModuleObject {
    let msize = m.size();
    let carrier = FinSet::new(msize * a.size);
    let values = (0..msize * carrier.size)
        .map(|e| {
            let (mv, rest) = (e / carrier.size, e % carrier.size);
            let (m2, av) = (rest / a.size, rest % a.size);
            m.mul(mv, m2) * a.size + av
        })
        .collect();
    let action = FinFunction::new(FinSet::new(msize * carrier.size), carrier, values)
        .expect("free action is total");
    writer_module(m, carrier, action).expect("free module satisfies the laws")
}

/// All module structures on carriers of size up to `bound`.
pub fn enumerate_writer_modules(m: &MonoidTable, bound: usize) -> Vec<ModuleObject> {
    let mut out = Vec::new();
    for size in 0..=bound {
        let carrier = FinSet::new(size);
        let dom = FinSet::new(m.size() * size);
        for action in all_functions(dom, carrier) {
            if let Ok(module) = writer_module(m, carrier, action) {
                out.push(module);
            }
        }
    }
    out
}

/// Lift each sample module along the monad: carrier `T(A)`, action
/// `T(φ)∘σ`. Verifies the module laws for the lifted action, the carrier
/// equation `U∘T̂ = T∘U`, and that the monad's unit and multiplication
/// components are module morphisms.
pub fn lift_writer_modules(
    m: &MonoidTable,
    t: &MonadData,
    samples: &[ModuleObject],
) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("lift-writer({},{})", m.name, t.name));
    let law = dwriter(m, t)?;
    for (idx, sample) in samples.iter().enumerate() {
        let (carrier, action) = match sample {
            ModuleObject::WriterModule { carrier, action } => (*carrier, action),
            ModuleObject::CoslicePoint { .. } => {
                return Err(Error::InvalidModule("expected writer modules".into()))
            }
        };
        let lifted_carrier = eval_on_set(&t.functor, carrier);
        let lifted_action = lifted_module_action(m, t, carrier, action);
        // U∘T̂ = T∘U on carriers, by construction; recorded as an instance.
        report.record(
            format!("sample{idx}.carrier-equation"),
            if lifted_action.cod() == lifted_carrier {
                None
            } else {
                Some("lifted carrier differs from T(A)".into())
            },
        );
        match writer_module(m, lifted_carrier, lifted_action.clone()) {
            Ok(_) => report.record(format!("sample{idx}.module-laws"), None),
            Err(e) => report.record(format!("sample{idx}.module-laws"), Some(e.to_string())),
        }
        // η_A : (A,φ) -> T̂(A,φ) is a module morphism
        let eta = eval_morphism_on_set(&t.unit, carrier);
        report.record(
            format!("sample{idx}.unit-module-morphism"),
            module_morphism_witness(m, carrier, action, lifted_carrier, &lifted_action, &eta),
        );
        // μ_A : T̂²(A,φ) -> T̂(A,φ) is a module morphism
        let double_action = lifted_module_action(m, t, lifted_carrier, &lifted_action);
        let mu = eval_morphism_on_set(&t.mult, carrier);
        report.record(
            format!("sample{idx}.mult-module-morphism"),
            module_morphism_witness(
                m,
                eval_on_set(&t.functor, lifted_carrier),
                &double_action,
                lifted_carrier,
                &lifted_action,
                &mu,
            ),
        );
        // lift/law coherence: the lifted action equals evaluating the
        // dwriter law followed by T(φ), pointwise.
        let via_law = {
            let sigma = eval_morphism_on_set(&law.law, carrier);
            let t_phi = apply_container(&t.functor, action);
            FinFunction::compose(&t_phi, &sigma).expect("coherence composite")
        };
        report.record(
            format!("sample{idx}.lift-law-coherence"),
            if via_law == lifted_action {
                None
            } else {
                Some("lifted action differs from the law route".into())
            },
        );
    }
    Ok(report)
}

/// `M × T(A) -> T(M × A) -> T(A)`: the lifted action through the canonical
/// strength.
fn lifted_module_action(
    m: &MonoidTable,
    t: &MonadData,
    carrier: FinSet,
    action: &FinFunction,
) -> FinFunction {
    let sigma = crate::container::strength(&t.functor, m.carrier, carrier);
    let t_phi = apply_container(&t.functor, action);
    FinFunction::compose(&t_phi, &sigma).expect("strength then action")
}

fn module_morphism_witness(
    m: &MonoidTable,
    src_carrier: FinSet,
    src_action: &FinFunction,
    _tgt_carrier: FinSet,
    tgt_action: &FinFunction,
    f: &FinFunction,
) -> Option<String> {
    for mv in 0..m.size() {
        for av in 0..src_carrier.size {
            let lhs = f.apply(src_action.apply(mv * src_carrier.size + av));
            let rhs = tgt_action.apply(mv * f.cod().size + f.apply(av));
            if lhs != rhs {
                return Some(format!("square fails at (m={mv}, a={av}): {lhs} vs {rhs}"));
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Coslice lifts for pointed endofunctors and monads
// ---------------------------------------------------------------------------

/// Lift a pointed endofunctor `(F, u)` to the coslice under `A`:
/// `F̂(X,φ) = (F(X), F(φ)∘u_A)`. Checks functoriality on all coslice
/// morphisms between the samples, that the point is a coslice morphism, and
/// (when `mult` is supplied) the monad multiplication componentwise.
pub fn lift_coslice(
    a: FinSet,
    f: &Container,
    point: &ContainerMorphism,
    mult: Option<&ContainerMorphism>,
    samples: &[ModuleObject],
) -> Result<CheckReport> {
    let mut report = CheckReport::new("lift-coslice");
    if point.src() != &Container::identity() || point.tgt() != f {
        return Err(Error::BoundaryMismatch("point must run Id => F".into()));
    }
    let u_at = |x: FinSet| eval_morphism_on_set(point, x);
    let hat = |carrier: FinSet, phi: &FinFunction| -> (FinSet, FinFunction) {
        let lifted_carrier = eval_on_set(f, carrier);
        let f_phi = apply_container(f, phi);
        let lifted_point = FinFunction::compose(&f_phi, &u_at(a)).expect("lifted point");
        (lifted_carrier, lifted_point)
    };
    let points: Vec<(FinSet, FinFunction)> = samples
        .iter()
        .map(|s| match s {
            ModuleObject::CoslicePoint { carrier, point } => Ok((*carrier, point.clone())),
            ModuleObject::WriterModule { .. } => {
                Err(Error::InvalidModule("expected coslice points".into()))
            }
        })
        .collect::<Result<_>>()?;

    for (idx, (carrier, phi)) in points.iter().enumerate() {
        let (lifted_carrier, lifted_point) = hat(*carrier, phi);
        report.record(
            format!("sample{idx}.carrier-equation"),
            if lifted_point.cod() == lifted_carrier && lifted_point.dom() == a {
                None
            } else {
                Some("lifted point has the wrong boundary".into())
            },
        );
        // û_(X,φ) := u_X is a coslice morphism (X,φ) -> F̂(X,φ)
        let ux = u_at(*carrier);
        let coslice_ok = FinFunction::compose(&ux, phi).expect("u∘φ") == lifted_point;
        report.record(
            format!("sample{idx}.point-coslice-morphism"),
            if coslice_ok {
                None
            } else {
                Some("u_X ∘ φ differs from the lifted point".into())
            },
        );
        if let Some(mu) = mult {
            // μ_X ∘ F̂(F̂(X,φ)) point = F̂(X,φ) point
            let (_, double_point) = hat(lifted_carrier, &lifted_point);
            let mu_x = eval_morphism_on_set(mu, *carrier);
            let lhs = FinFunction::compose(&mu_x, &double_point).expect("μ∘point");
            report.record(
                format!("sample{idx}.mult-coslice-morphism"),
                if lhs == lifted_point {
                    None
                } else {
                    Some("μ_X is not a coslice morphism on this sample".into())
                },
            );
        }
    }

    // Functoriality on all coslice morphisms between samples: F̂ preserves
    // the coslice-morphism property, identities and composition.
    for (i, (xc, xp)) in points.iter().enumerate() {
        for (j, (yc, yp)) in points.iter().enumerate() {
            let morphisms: Vec<FinFunction> = all_functions(*xc, *yc)
                .into_iter()
                .filter(|g| &FinFunction::compose(g, xp).expect("g∘φ") == yp)
                .collect();
            let mut ok = true;
            for g in &morphisms {
                let (.., x_lift) = hat(*xc, xp);
                let (.., y_lift) = hat(*yc, yp);
                let fg = apply_container(f, g);
                if FinFunction::compose(&fg, &x_lift).expect("F(g)∘lift") != y_lift {
                    ok = false;
                }
            }
            report.record(
                format!("functorial[{i}->{j}]({} morphisms)", morphisms.len()),
                if ok {
                    None
                } else {
                    Some("image of a coslice morphism is not one".into())
                },
            );
        }
    }
    Ok(report)
}

/// Default coslice samples: every point on carriers of size up to `bound`.
pub fn enumerate_coslice_points(a: FinSet, bound: usize) -> Vec<ModuleObject> {
    let mut out = Vec::new();
    for size in 0..=bound {
        let carrier = FinSet::new(size);
        for point in all_functions(a, carrier) {
            out.push(ModuleObject::CoslicePoint { carrier, point });
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Functoriality of the parametric constructions
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub enum ParametricKind {
    DWriter(MonoidTable),
    DEither(FinSet),
}

/// The image of a monad morphism under the parametric construction: the
/// carrier is reused, the first component is the given one, and the second
/// component is the canonical interchange of the carrier with Writer/Either.
/// For identity carriers both canonical components are identities.
pub fn parametric_image(
    kind: &ParametricKind,
    m: &MonadMorphismData,
) -> Result<DistMorphismData> {
    let second_component = match kind {
        ParametricKind::DWriter(monoid) => fold_costrength(&m.carrier, monoid),
        ParametricKind::DEither(a) => {
            if !m.carrier.is_identity() {
                return Err(Error::InvalidParameter(
                    "the either construction acts on identity-carrier morphisms".into(),
                ));
            }
            ContainerMorphism::identity(&either(*a).functor)
        }
    };
    Ok(DistMorphismData {
        carrier: m.carrier.clone(),
        first_component: m.component.clone(),
        second_component,
    })
}

/// `Φ∘Writer => Writer∘Φ`: multiply the monoid labels found at the positions
/// of a shape, in position order. On the identity carrier this is the
/// identity.
fn fold_costrength(carrier: &Container, m: &MonoidTable) -> ContainerMorphism {
    let w = writer(m).functor;
    let src = carrier.compose(&w);
    let tgt = w.compose(carrier);
    let cut = carrier.depth();
    let mut shape_map = Vec::with_capacity(src.shape_count());
    let mut pos_maps = Vec::with_capacity(src.shape_count());
    for c in 0..src.shape_count() {
        let (phi_shape, labels) = src.split_shape(cut, c);
        let folded = labels.iter().fold(m.unit, |acc, &l| m.mul(acc, l));
        let target = tgt.join_shape(1, folded, &[phi_shape]);
        let pm = (0..tgt.pos_count(target))
            .map(|r| {
                let (_, q) = tgt.split_pos(1, target, r);
                src.join_pos(cut, c, q, 0)
            })
            .collect();
        shape_map.push(target);
        pos_maps.push(pm);
    }
    ContainerMorphism::new(src, tgt, shape_map, pos_maps).expect("costrength bounds")
}

/// Build the image morphism between the laws for `T` and `T'` and run the
/// three morphism conditions; also checks composition preservation on the
/// pair `(m, m)` when composable.
pub fn check_parametric_functoriality(
    kind: &ParametricKind,
    source: &MonadData,
    target: &MonadData,
    m: &MonadMorphismData,
) -> Result<CheckReport> {
    let mut report = CheckReport::new("parametric-functoriality");
    let precondition = check_monad_morphism(source, target, m);
    if !precondition.passed() {
        return Err(Error::InvalidParameter(
            "input must be a monad morphism".into(),
        ));
    }
    let src_law = build_law(kind, source)?;
    let tgt_law = build_law(kind, target)?;
    let image = parametric_image(kind, m)?;
    report.absorb("image.", check_dist_morphism(&src_law, &tgt_law, &image));

    // composition preservation needs a composable pair; (m', m) with m' the
    // identity on the target is always available.
    let idm = MonadMorphismData::identity(target);
    let pair = MonadMorphismData::compose(&idm, m)?;
    let image_pair = parametric_image(kind, &pair)?;
    let composed_images = DistMorphismData::compose(
        &parametric_image(kind, &idm)?,
        &image,
    )?;
    let same = image_pair.carrier == composed_images.carrier
        && ContainerMorphism::equal(&image_pair.first_component, &composed_images.first_component)?
        && ContainerMorphism::equal(
            &image_pair.second_component,
            &composed_images.second_component,
        )?;
    report.record(
        "composition-preserved",
        if same {
            None
        } else {
            Some("image of the composite differs from the composite of images".into()),
        },
    );
    Ok(report)
}

fn build_law(kind: &ParametricKind, t: &MonadData) -> Result<DistLawData> {
    match kind {
        ParametricKind::DWriter(m) => dwriter(m, t),
        ParametricKind::DEither(a) => deither(*a, t),
    }
}

// ---------------------------------------------------------------------------
// Cocartesian structure lemmas
// ---------------------------------------------------------------------------

/// Exhaustively verify that a finite set carries exactly one monoid
/// structure under coproduct: unit the empty map, multiplication the
/// codiagonal. Returns the number of candidate multiplications examined.
pub fn unique_cocartesian_monoid(a: FinSet) -> Result<(FinFunction, usize)> {
    if a.size > 3 {
        return Err(Error::SizeLimitExceeded(format!(
            "exhaustive search is capped at |A| = 3, got {}",
            a.size
        )));
    }
    let double = FinSet::new(2 * a.size);
    let mut found = Vec::new();
    let candidates = all_functions(double, a);
    let total = candidates.len();
    for m in candidates {
        // unit laws: the unit is the unique map from the initial object, so
        // they collapse to m∘ℓ = id and m∘r = id
        let unital = (0..a.size).all(|x| m.apply(x) == x && m.apply(a.size + x) == x);
        if !unital {
            continue;
        }
        // associativity: both routes A+A+A -> A
        let assoc = (0..3 * a.size).all(|e| {
            let (side, x) = (e / a.size, e % a.size);
            // ⟨id,id⟩ is forced, so both routes send every injection to x
            let route1 = match side {
                0 => m.apply(x),
                _ => m.apply(a.size + m.apply(if side == 1 { x } else { a.size + x })),
            };
            let route2 = match side {
                2 => m.apply(a.size + x),
                _ => m.apply(m.apply(if side == 0 { x } else { a.size + x })),
            };
            route1 == route2
        });
        if assoc {
            found.push(m);
        }
    }
    if found.len() != 1 {
        return Err(Error::InvalidParameter(format!(
            "expected exactly one monoid structure, found {}",
            found.len()
        )));
    }
    Ok((found.into_iter().next().unwrap(), total))
}

/// Enumerate all module actions `σ: A + X -> X` with `|X| <= bound`
/// satisfying the module laws, verify every one is `⟨φ, id⟩`, and check the
/// two functors of the module/coslice comparison are mutually inverse on
/// objects and morphisms.
pub fn modules_coslice_iso(a: FinSet, bound: usize) -> Result<CheckReport> {
    if bound > 3 {
        return Err(Error::SizeLimitExceeded("bound is capped at 3".into()));
    }
    let mut report = CheckReport::new(format!("modules-coslice(|A|={})", a.size));
    let mut modules_by_carrier: Vec<Vec<FinFunction>> = Vec::new();
    for size in 0..=bound {
        let x = FinSet::new(size);
        let dom = FinSet::new(a.size + size);
        let mut modules = Vec::new();
        for sigma in all_functions(dom, x) {
            // unit law σ∘r = id; it pins σ = ⟨φ, id⟩, and associativity over
            // the codiagonal monoid is then automatic (checked below anyway)
            if (0..size).any(|v| sigma.apply(a.size + v) != v) {
                continue;
            }
            let assoc = (0..a.size).all(|av| {
                // both routes A+(A+X) -> X on the r(ℓ a) injection
                sigma.apply(a.size + sigma.apply(av)) == sigma.apply(av)
            });
            if !assoc {
                continue;
            }
            modules.push(sigma);
        }
        // every module is ⟨φ, id⟩ and conversely, so the count is |X|^|A|
        let coslice_count = all_functions(a, x).len();
        report.record(
            format!("object-count[|X|={size}]"),
            if modules.len() == coslice_count {
                None
            } else {
                Some(format!("{} modules vs {} points", modules.len(), coslice_count))
            },
        );
        let all_clamped = modules
            .iter()
            .all(|sigma| (0..size).all(|v| sigma.apply(a.size + v) == v));
        report.record(
            format!("shape[|X|={size}]"),
            if all_clamped {
                None
            } else {
                Some("a module action is not ⟨φ, id⟩".into())
            },
        );
        modules_by_carrier.push(modules);
    }
    // morphism counts agree for all carrier pairs, and the module and
    // coslice morphism conditions are equivalent function by function
    for (i, xs) in modules_by_carrier.iter().enumerate() {
        for (j, ys) in modules_by_carrier.iter().enumerate() {
            let x = FinSet::new(i);
            let y = FinSet::new(j);
            let mut module_morphisms = 0usize;
            let mut coslice_morphisms = 0usize;
            let mut equivalent = true;
            for sx in xs {
                for sy in ys {
                    for g in all_functions(x, y) {
                        // module condition: g∘σ = τ∘(A+g)
                        let module_ok = (0..a.size + x.size).all(|e| {
                            let lhs = g.apply(sx.apply(e));
                            let rhs = if e < a.size {
                                sy.apply(e)
                            } else {
                                sy.apply(a.size + g.apply(e - a.size))
                            };
                            lhs == rhs
                        });
                        // coslice condition: g∘φ = ψ
                        let coslice_ok =
                            (0..a.size).all(|av| g.apply(sx.apply(av)) == sy.apply(av));
                        module_morphisms += module_ok as usize;
                        coslice_morphisms += coslice_ok as usize;
                        equivalent &= module_ok == coslice_ok;
                    }
                }
            }
            report.record(
                format!("morphism-count[{i}->{j}]"),
                if module_morphisms == coslice_morphisms && equivalent {
                    None
                } else {
                    Some(format!("{module_morphisms} vs {coslice_morphisms}"))
                },
            );
        }
    }
    Ok(report)
}

/// Pointwise agreement of the coslice lift on the free point `(A, id)` with
/// the deither law, at every set size up to `bound`. The free coslice object
/// lifts to `(T(A), η_A)`, which is exactly the law's ℓ-branch.
pub fn either_lift_law_coherence(a: FinSet, t: &MonadData, bound: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("either-lift-law");
    let law = deither(a, t)?;
    for size in 0..=bound {
        let b = FinSet::new(size);
        let component = eval_morphism_on_set(&law.law, b);
        // ℓ-branch: law(ℓa) = η_{A+B}(ℓ a)
        let eta = eval_morphism_on_set(&t.unit, FinSet::new(a.size + size));
        let src = law.law.src();
        let lok = (0..a.size).all(|av| {
            let e = elem_encode(src, b, av, &[]);
            component.apply(e) == eta.apply(av)
        });
        // r-branch: law(r v) = T(r)(v)
        let r_fn = FinFunction::new(
            b,
            FinSet::new(a.size + size),
            (0..size).map(|v| a.size + v).collect(),
        )
        .expect("right injection");
        let t_r = apply_container(&t.functor, &r_fn);
        let rok = (0..eval_on_set(&t.functor, b).size).all(|v| {
            let (shape, vals) = elem_decode(&t.functor, b, v);
            // embed the T-element under the r-shape of Either∘T
            let s = src.join_shape(1, a.size, &[shape]);
            let e = elem_encode(src, b, s, &vals);
            component.apply(e) == t_r.apply(v)
        });
        report.record(
            format!("pointwise[|B|={size}]"),
            if lok && rok {
                None
            } else {
                Some("lift and law disagree".into())
            },
        );
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::container::{identity_monad, maybe, reader, state};
    use crate::laws::{check_dist_law, check_dist_law_pointwise};

    fn z2() -> MonoidTable {
        MonoidTable::cyclic(2)
    }

    #[test]
    fn dwriter_unrolls_the_strength() {
        // T = maybe, M = Z2: law(m, Nothing) = Nothing; law(m, Just b) = Just (m, b)
        let d = dwriter(&z2(), &maybe()).unwrap();
        let x = FinSet::new(2);
        let f = eval_morphism_on_set(&d.law, x);
        let src = d.law.src();
        let tgt = d.law.tgt();
        for m in 0..2usize {
            // src shape (m, Nothing): no positions
            let nothing_like = (0..src.shape_count())
                .find(|&s| src.render_shape(s) == format!("({m},0)"))
                .unwrap();
            let e = elem_encode(src, x, nothing_like, &[]);
            let (ts, _) = elem_decode(tgt, x, f.apply(e));
            assert_eq!(tgt.render_shape(ts), "(0)");
            for b in 0..x.size {
                let just_like = (0..src.shape_count())
                    .find(|&s| src.render_shape(s) == format!("({m},1)"))
                    .unwrap();
                let e = elem_encode(src, x, just_like, &[b]);
                let (ts, vals) = elem_decode(tgt, x, f.apply(e));
                assert_eq!(tgt.render_shape(ts), format!("(1,{m})"));
                assert_eq!(vals, vec![b]);
            }
        }
    }

    #[test]
    fn dwriter_identity_is_identity_law() {
        let d = dwriter(&z2(), &identity_monad()).unwrap();
        assert!(d.law.is_identity());
    }

    #[test]
    fn dwriter_state_passes() {
        let d = dwriter(&z2(), &state(FinSet::new(2))).unwrap();
        assert!(check_dist_law(&d).passed());
        assert!(check_dist_law_pointwise(&d, 2).passed());
    }

    #[test]
    fn deither_unrolls_the_coslice_lift() {
        // T = writer(Z2): law(ℓa) = (e, ℓa); law(r (m,b)) = (m, r b)
        let w = writer(&z2());
        let d = deither(FinSet::new(1), &w).unwrap();
        let x = FinSet::new(2);
        let f = eval_morphism_on_set(&d.law, x);
        let src = d.law.src();
        let tgt = d.law.tgt();
        // ℓ-branch
        let la = elem_encode(src, x, 0, &[]);
        let (shape, _) = elem_decode(tgt, x, f.apply(la));
        assert_eq!(tgt.render_shape(shape), "(0,0)"); // unit label, ℓ-shape
        // r-branch
        for m in 0..2usize {
            for b in 0..x.size {
                let e = {
                    let s = (0..src.shape_count())
                        .find(|&s| src.render_shape(s) == format!("(1,{m})"))
                        .unwrap();
                    elem_encode(src, x, s, &[b])
                };
                let (shape, vals) = elem_decode(tgt, x, f.apply(e));
                assert_eq!(tgt.render_shape(shape), format!("({m},1)"));
                assert_eq!(vals, vec![b]);
            }
        }
    }

    #[test]
    fn deither_empty_is_identity_like() {
        let d = deither(FinSet::new(0), &maybe()).unwrap();
        assert!(check_dist_law(&d).passed());
    }

    #[test]
    fn deither_reader_passes() {
        let d = deither(FinSet::new(1), &reader(FinSet::new(2))).unwrap();
        assert!(check_dist_law(&d).passed());
        assert!(check_dist_law_pointwise(&d, 3).passed());
    }

    #[test]
    fn lift_writer_module_samples() {
        let t = maybe();
        let mut samples = vec![free_writer_module(&z2(), FinSet::new(2))];
        samples.extend(enumerate_writer_modules(&z2(), 2));
        let report = lift_writer_modules(&z2(), &t, &samples).unwrap();
        assert!(report.passed(), "{report}");
        // the trivial module on the singleton is in the enumeration
        assert!(samples.iter().any(|s| matches!(
            s,
            ModuleObject::WriterModule { carrier, .. } if carrier.size == 1
        )));
    }

    #[test]
    fn non_module_action_is_rejected() {
        // constant action breaks the unit law on a 2-element carrier
        let carrier = FinSet::new(2);
        let action = FinFunction::new(FinSet::new(4), carrier, vec![0, 0, 0, 0]).unwrap();
        assert!(writer_module(&z2(), carrier, action).is_err());
    }

    #[test]
    fn lift_coslice_samples() {
        let a = FinSet::new(1);
        let m = maybe();
        let samples = enumerate_coslice_points(a, 2);
        let report =
            lift_coslice(a, &m.functor, &m.unit, Some(&m.mult), &samples).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn lift_coslice_of_free_point_is_unit() {
        // (X,φ) with X = A, φ = id, F = maybe lifts to (Maybe A, Just)
        let a = FinSet::new(2);
        let m = maybe();
        let phi = FinFunction::identity(a);
        let f_phi = apply_container(&m.functor, &phi);
        let u_a = eval_morphism_on_set(&m.unit, a);
        let lifted = FinFunction::compose(&f_phi, &u_a).unwrap();
        let eta = eval_morphism_on_set(&m.unit, a);
        assert_eq!(lifted, eta);
    }

    #[test]
    fn functoriality_identity_morphism() {
        let m = maybe();
        let idm = MonadMorphismData::identity(&m);
        let report = check_parametric_functoriality(
            &ParametricKind::DWriter(z2()),
            &m,
            &m,
            &idm,
        )
        .unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn functoriality_unit_morphism_both_kinds() {
        let id = identity_monad();
        let m = maybe();
        let unit_morphism =
            MonadMorphismData::new(&id, &m, Container::identity(), m.unit.clone()).unwrap();
        for kind in [
            ParametricKind::DWriter(z2()),
            ParametricKind::DEither(FinSet::new(1)),
        ] {
            let report =
                check_parametric_functoriality(&kind, &id, &m, &unit_morphism).unwrap();
            assert!(report.passed(), "{kind:?}:\n{report}");
        }
    }

    #[test]
    fn unique_monoid_structures() {
        for n in 1..=3usize {
            let (m, candidates) = unique_cocartesian_monoid(FinSet::new(n)).unwrap();
            assert_eq!(candidates, all_functions(FinSet::new(2 * n), FinSet::new(n)).len());
            // the codiagonal
            for x in 0..n {
                assert_eq!(m.apply(x), x);
                assert_eq!(m.apply(n + x), x);
            }
        }
        assert!(unique_cocartesian_monoid(FinSet::new(4)).is_err());
    }

    #[test]
    fn modules_coslice_counts() {
        let report = modules_coslice_iso(FinSet::new(1), 2).unwrap();
        assert!(report.passed(), "{report}");
        // |A| = 1, |X| = 2: two modules, two points
        let inst = report
            .instances
            .iter()
            .find(|i| i.tag == "object-count[|X|=2]")
            .unwrap();
        assert!(inst.pass);
    }

    #[test]
    fn either_lift_matches_law() {
        for t in [maybe(), reader(FinSet::new(2))] {
            let report = either_lift_law_coherence(FinSet::new(1), &t, 3).unwrap();
            assert!(report.passed(), "{}:\n{report}", t.name);
        }
    }
}
