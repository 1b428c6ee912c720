//! The walking monad as a presentation, lax-Gray-style tensor presentations,
//! iterated powers with Yang-Baxter relations, and the repack between
//! interpretations of those presentations and n-fold distributive-law
//! systems.
//!
//! Crossings are stored only for pairs of 1-cell *generators*; crossings on
//! words are derived terms built by the composition ladders, and crossings
//! with identity words are identity 2-cells. Naturality relations are
//! instantiated over generator 2-cells, Yang-Baxter over generator triples.

use crate::container::{Container, MonadData};
use crate::error::{Error, Result};
use crate::laws::DistLawData;
use crate::twocat::{
    ContainerCat, Interpretation, OneCellWord, OneGen, Presentation, Relation, TwoCat,
    TwoCellTerm, TwoGen,
};
use std::collections::BTreeMap;

/// One object `*`, one 1-generator `t`, 2-generators `eta: Id => t` and
/// `mu: t·t => t`, and the three monad relations.
pub fn walking_monad() -> Presentation {
    let t = |n: usize| OneCellWord::path("*", vec!["t".into(); n]);
    let gen = TwoCellTerm::gen;
    let id = TwoCellTerm::id;
    Presentation::new(
        vec!["*".into()],
        vec![OneGen {
            name: "t".into(),
            src: "*".into(),
            tgt: "*".into(),
        }],
        vec![
            TwoGen {
                name: "eta".into(),
                src: t(0),
                tgt: t(1),
            },
            TwoGen {
                name: "mu".into(),
                src: t(2),
                tgt: t(1),
            },
        ],
        vec![
            Relation {
                tag: "monad.unit-left".into(),
                lhs: TwoCellTerm::v(gen("mu"), TwoCellTerm::h(gen("eta"), id(t(1)))),
                rhs: id(t(1)),
            },
            Relation {
                tag: "monad.unit-right".into(),
                lhs: TwoCellTerm::v(gen("mu"), TwoCellTerm::h(id(t(1)), gen("eta"))),
                rhs: id(t(1)),
            },
            Relation {
                tag: "monad.assoc".into(),
                lhs: TwoCellTerm::v(gen("mu"), TwoCellTerm::h(gen("mu"), id(t(1)))),
                rhs: TwoCellTerm::v(gen("mu"), TwoCellTerm::h(id(t(1)), gen("mu"))),
            },
        ],
    )
    .expect("walking monad presentation is well-formed")
}

/// Crossing of two factor words, derived from generator crossings by the
/// composition ladders; identity words give identity 2-cells. Words are in
/// application order, all at the single object `base`.
fn derived_crossing(
    base: &str,
    word_i: &[String],
    word_j: &[String],
    cross: &dyn Fn(&str, &str) -> String,
) -> TwoCellTerm {
    let word = |gens: &[String]| OneCellWord::path(base, gens.to_vec());
    if word_i.is_empty() {
        return TwoCellTerm::id(word(word_j));
    }
    if word_j.is_empty() {
        return TwoCellTerm::id(word(word_i));
    }
    if word_i.len() > 1 {
        // γ_{(f1·f2), g} = (γ_{f1,g} · {f2}) ∘ ({f1} · γ_{f2,g}), f1 applied last
        let (rest, last) = (&word_i[..word_i.len() - 1], &word_i[word_i.len() - 1..]);
        return TwoCellTerm::v(
            TwoCellTerm::h(
                derived_crossing(base, last, word_j, cross),
                TwoCellTerm::id(word(rest)),
            ),
            TwoCellTerm::h(
                TwoCellTerm::id(word(last)),
                derived_crossing(base, rest, word_j, cross),
            ),
        );
    }
    if word_j.len() > 1 {
        // γ_{f, (g1·g2)} = ({g1} · γ_{f,g2}) ∘ (γ_{f,g1} · {g2}), g1 applied last
        let (rest, last) = (&word_j[..word_j.len() - 1], &word_j[word_j.len() - 1..]);
        return TwoCellTerm::v(
            TwoCellTerm::h(
                TwoCellTerm::id(word(last)),
                derived_crossing(base, word_i, rest, cross),
            ),
            TwoCellTerm::h(
                derived_crossing(base, word_i, last, cross),
                TwoCellTerm::id(word(rest)),
            ),
        );
    }
    TwoCellTerm::gen(cross(&word_i[0], &word_j[0]))
}

/// Naturality of the crossing family in both slots: for `phi` a factor-`i`
/// cell and `psi` a factor-`j` cell,
/// `({psi}·{phi}) ∘ γ_{src phi, src psi} = γ_{tgt phi, tgt psi} ∘ ({phi}·{psi})`.
fn naturality_relation(
    base: &str,
    tag: String,
    phi: (&TwoCellTerm, &[String], &[String]),
    psi: (&TwoCellTerm, &[String], &[String]),
    cross: &dyn Fn(&str, &str) -> String,
) -> Relation {
    let (phi_term, phi_src, phi_tgt) = phi;
    let (psi_term, psi_src, psi_tgt) = psi;
    Relation {
        tag,
        lhs: TwoCellTerm::v(
            TwoCellTerm::h(psi_term.clone(), phi_term.clone()),
            derived_crossing(base, phi_src, psi_src, cross),
        ),
        rhs: TwoCellTerm::v(
            derived_crossing(base, phi_tgt, psi_tgt, cross),
            TwoCellTerm::h(phi_term.clone(), psi_term.clone()),
        ),
    }
}

/// One factor of an iterated tensor presentation, over a single object:
/// 1-generators, and 2-generators with their boundary words.
#[derive(Debug, Clone)]
struct Factor {
    one_gens: Vec<String>,
    two_gens: Vec<(String, Vec<String>, Vec<String>)>,
    relations: Vec<Relation>,
}

fn single_object_factor(p: &Presentation) -> Result<Factor> {
    if p.objects.len() != 1 {
        return Err(Error::InvalidParameter(
            "tensor factors must have a single object".into(),
        ));
    }
    Ok(Factor {
        one_gens: p.one_gens.iter().map(|g| g.name.clone()).collect(),
        two_gens: p
            .two_gens
            .iter()
            .map(|g| (g.name.clone(), g.src.gens.clone(), g.tgt.gens.clone()))
            .collect(),
        relations: p.relations.clone(),
    })
}

fn walking_factor(i: usize) -> Factor {
    let t = format!("t{i}");
    Factor {
        one_gens: vec![t.clone()],
        two_gens: vec![
            (format!("eta{i}"), vec![], vec![t.clone()]),
            (format!("mu{i}"), vec![t.clone(), t.clone()], vec![t.clone()]),
        ],
        relations: monad_relations(&format!("monad({i})"), &t, &format!("eta{i}"), &format!("mu{i}")),
    }
}

fn monad_relations(prefix: &str, t: &str, eta: &str, mu: &str) -> Vec<Relation> {
    let word = |n: usize| OneCellWord::path("*", vec![t.to_string(); n]);
    let gen = TwoCellTerm::gen;
    let id = TwoCellTerm::id;
    vec![
        Relation {
            tag: format!("{prefix}.unit-left"),
            lhs: TwoCellTerm::v(gen(mu), TwoCellTerm::h(gen(eta), id(word(1)))),
            rhs: id(word(1)),
        },
        Relation {
            tag: format!("{prefix}.unit-right"),
            lhs: TwoCellTerm::v(gen(mu), TwoCellTerm::h(id(word(1)), gen(eta))),
            rhs: id(word(1)),
        },
        Relation {
            tag: format!("{prefix}.assoc"),
            lhs: TwoCellTerm::v(gen(mu), TwoCellTerm::h(gen(mu), id(word(1)))),
            rhs: TwoCellTerm::v(gen(mu), TwoCellTerm::h(id(word(1)), gen(mu))),
        },
    ]
}

fn cross_name(f: &str, g: &str) -> String {
    format!("gamma({f},{g})")
}

/// The iterated tensor presentation of a single-object base with `n` walking
/// monads, with factor bookkeeping for crossings and the repack operations.
#[derive(Debug, Clone)]
pub struct MndPower {
    pub presentation: Presentation,
    pub n: usize,
    /// factor index of each 1-generator (base factors are 0)
    gen_factor: BTreeMap<String, usize>,
}

impl MndPower {
    pub fn build(p: &Presentation, n: usize) -> Result<MndPower> {
        let base = single_object_factor(p)?;
        let obj = p.objects[0].clone();
        let mut factors = vec![base];
        factors.extend((1..=n).map(walking_factor));

        let mut one_gens = Vec::new();
        let mut two_gens = Vec::new();
        let mut relations = Vec::new();
        let mut gen_factor = BTreeMap::new();
        for (idx, factor) in factors.iter().enumerate() {
            for g in &factor.one_gens {
                gen_factor.insert(g.clone(), idx);
                one_gens.push(OneGen {
                    name: g.clone(),
                    src: obj.clone(),
                    tgt: obj.clone(),
                });
            }
            for (name, src, tgt) in &factor.two_gens {
                two_gens.push(TwoGen {
                    name: name.clone(),
                    src: OneCellWord::path(obj.clone(), src.clone()),
                    tgt: OneCellWord::path(obj.clone(), tgt.clone()),
                });
            }
            relations.extend(factor.relations.iter().cloned());
        }

        // crossings per generator pair with strictly increasing factor index
        let cross: &dyn Fn(&str, &str) -> String = &cross_name;
        for i in 0..factors.len() {
            for j in i + 1..factors.len() {
                for f in &factors[i].one_gens {
                    for g in &factors[j].one_gens {
                        two_gens.push(TwoGen {
                            name: cross_name(f, g),
                            src: OneCellWord::path(obj.clone(), vec![g.clone(), f.clone()]),
                            tgt: OneCellWord::path(obj.clone(), vec![f.clone(), g.clone()]),
                        });
                    }
                }
            }
        }

        // naturality instances over generator 2-cells, with the identity on
        // the higher factor's 1-generators included
        for i in 0..factors.len() {
            for j in i + 1..factors.len() {
                for (phi, phi_src, phi_tgt) in &factors[i].two_gens {
                    let phi_term = TwoCellTerm::gen(phi.clone());
                    let mut psis: Vec<(String, TwoCellTerm, Vec<String>, Vec<String>)> = factors
                        [j]
                        .two_gens
                        .iter()
                        .map(|(name, s, t)| {
                            (name.clone(), TwoCellTerm::gen(name.clone()), s.clone(), t.clone())
                        })
                        .collect();
                    for g in &factors[j].one_gens {
                        psis.push((
                            format!("id:{g}"),
                            TwoCellTerm::id(OneCellWord::path(obj.clone(), vec![g.clone()])),
                            vec![g.clone()],
                            vec![g.clone()],
                        ));
                    }
                    for (psi_name, psi_term, psi_src, psi_tgt) in &psis {
                        relations.push(naturality_relation(
                            &obj,
                            format!("gray.natural({i},{j})[{phi}x{psi_name}]"),
                            (&phi_term, phi_src.as_slice(), phi_tgt.as_slice()),
                            (psi_term, psi_src.as_slice(), psi_tgt.as_slice()),
                            cross,
                        ));
                    }
                }
            }
        }

        // Yang-Baxter per triple of 1-generators with increasing factors
        for i in 0..factors.len() {
            for j in i + 1..factors.len() {
                for k in j + 1..factors.len() {
                    for f in &factors[i].one_gens {
                        for g in &factors[j].one_gens {
                            for h in &factors[k].one_gens {
                                relations.push(yang_baxter_relation(&obj, f, g, h, cross));
                            }
                        }
                    }
                }
            }
        }

        let presentation = Presentation::new(p.objects.clone(), one_gens, two_gens, relations)?;
        Ok(MndPower {
            presentation,
            n,
            gen_factor,
        })
    }

    pub fn factor_of(&self, gen: &str) -> Option<usize> {
        self.gen_factor.get(gen).copied()
    }

    /// Crossing of two factor words as a derived term.
    pub fn crossing_term(
        &self,
        i: usize,
        word_i: &OneCellWord,
        j: usize,
        word_j: &OneCellWord,
    ) -> Result<TwoCellTerm> {
        if i >= j {
            return Err(Error::InvalidParameter(format!(
                "crossing needs increasing factors, got {i} and {j}"
            )));
        }
        for (word, idx) in [(word_i, i), (word_j, j)] {
            for g in &word.gens {
                if self.factor_of(g) != Some(idx) {
                    return Err(Error::BoundaryMismatch(format!(
                        "generator {g} does not belong to factor {idx}"
                    )));
                }
            }
        }
        let obj = &self.presentation.objects[0];
        Ok(derived_crossing(obj, &word_i.gens, &word_j.gens, &cross_name))
    }

    /// Evaluate the derived crossing of two words under an interpretation.
    pub fn extend_crossing<B: TwoCat>(
        &self,
        target: &B,
        interp: &Interpretation<B>,
        i: usize,
        word_i: &OneCellWord,
        j: usize,
        word_j: &OneCellWord,
    ) -> Result<B::Two> {
        let term = self.crossing_term(i, word_i, j, word_j)?;
        interp.eval_term(target, &self.presentation, &term)
    }
}

fn yang_baxter_relation(
    base: &str,
    f: &str,
    g: &str,
    h: &str,
    cross: &dyn Fn(&str, &str) -> String,
) -> Relation {
    let id1 = |name: &str| TwoCellTerm::id(OneCellWord::path(base, vec![name.to_string()]));
    let gamma = |a: &str, b: &str| TwoCellTerm::gen(cross(a, b));
    Relation {
        tag: format!("yang-baxter({f},{g},{h})"),
        lhs: TwoCellTerm::v(
            TwoCellTerm::v(
                TwoCellTerm::h(id1(h), gamma(f, g)),
                TwoCellTerm::h(gamma(f, h), id1(g)),
            ),
            TwoCellTerm::h(id1(f), gamma(g, h)),
        ),
        rhs: TwoCellTerm::v(
            TwoCellTerm::v(
                TwoCellTerm::h(gamma(g, h), id1(f)),
                TwoCellTerm::h(id1(g), gamma(f, h)),
            ),
            TwoCellTerm::h(gamma(f, g), id1(h)),
        ),
    }
}

/// Iterated tensor with `n` walking monads; `mnd_power(terminal, 2)` is the
/// presentation whose strict interpretations are distributive laws.
pub fn mnd_power(p: &Presentation, n: usize) -> Result<Presentation> {
    if n == 0 {
        return Ok(p.clone());
    }
    Ok(MndPower::build(p, n)?.presentation)
}

/// Binary tensor of two single-object presentations: lifted generators of
/// both factors plus one crossing per pair of 1-generators; relations are
/// the lifted ones, naturality over generator 2-cells (with identities on
/// the second factor's 1-generators) and, when the first factor already
/// carries crossings, their Yang-Baxter instances against the new factor.
pub fn gray_tensor(p: &Presentation, q: &Presentation) -> Result<Presentation> {
    let pf = single_object_factor(p)?;
    let qf = single_object_factor(q)?;
    let obj = format!("({},{})", p.objects[0], q.objects[0]);

    let lift = |side: usize, name: &str| format!("{side}:{name}");
    let lift_word = |side: usize, base: &str, gens: &[String]| {
        OneCellWord::path(base, gens.iter().map(|g| lift(side, g)).collect())
    };
    fn lift_term(t: &TwoCellTerm, side: usize, obj: &str) -> TwoCellTerm {
        match t {
            TwoCellTerm::Gen(name) => TwoCellTerm::gen(format!("{side}:{name}")),
            TwoCellTerm::Id(w) => TwoCellTerm::id(OneCellWord::path(
                obj,
                w.gens.iter().map(|g| format!("{side}:{g}")).collect(),
            )),
            TwoCellTerm::V(a, b) => {
                TwoCellTerm::v(lift_term(a, side, obj), lift_term(b, side, obj))
            }
            TwoCellTerm::H(a, b) => {
                TwoCellTerm::h(lift_term(a, side, obj), lift_term(b, side, obj))
            }
        }
    }

    let mut one_gens = Vec::new();
    let mut two_gens = Vec::new();
    let mut relations = Vec::new();
    for (side, factor) in [(1usize, &pf), (2usize, &qf)] {
        for g in &factor.one_gens {
            one_gens.push(OneGen {
                name: lift(side, g),
                src: obj.clone(),
                tgt: obj.clone(),
            });
        }
        for (name, src, tgt) in &factor.two_gens {
            two_gens.push(TwoGen {
                name: lift(side, name),
                src: lift_word(side, &obj, src),
                tgt: lift_word(side, &obj, tgt),
            });
        }
        for r in &factor.relations {
            relations.push(Relation {
                tag: format!("{side}:{}", r.tag),
                lhs: lift_term(&r.lhs, side, &obj),
                rhs: lift_term(&r.rhs, side, &obj),
            });
        }
    }
    let cross_fn = |f: &str, g: &str| format!("cross({f},{g})");
    let cross: &dyn Fn(&str, &str) -> String = &cross_fn;
    for f in &pf.one_gens {
        for g in &qf.one_gens {
            two_gens.push(TwoGen {
                name: cross_fn(&lift(1, f), &lift(2, g)),
                src: OneCellWord::path(obj.clone(), vec![lift(2, g), lift(1, f)]),
                tgt: OneCellWord::path(obj.clone(), vec![lift(1, f), lift(2, g)]),
            });
        }
    }
    for (phi, phi_src, phi_tgt) in &pf.two_gens {
        let phi_term = TwoCellTerm::gen(lift(1, phi));
        let phi_src: Vec<String> = phi_src.iter().map(|g| lift(1, g)).collect();
        let phi_tgt: Vec<String> = phi_tgt.iter().map(|g| lift(1, g)).collect();
        let mut psis: Vec<(String, TwoCellTerm, Vec<String>, Vec<String>)> = qf
            .two_gens
            .iter()
            .map(|(name, s, t)| {
                (
                    lift(2, name),
                    TwoCellTerm::gen(lift(2, name)),
                    s.iter().map(|g| lift(2, g)).collect(),
                    t.iter().map(|g| lift(2, g)).collect(),
                )
            })
            .collect();
        for g in &qf.one_gens {
            let lifted = lift(2, g);
            psis.push((
                format!("id:{lifted}"),
                TwoCellTerm::id(OneCellWord::path(obj.clone(), vec![lifted.clone()])),
                vec![lifted.clone()],
                vec![lifted],
            ));
        }
        for (psi_name, psi_term, psi_src, psi_tgt) in &psis {
            relations.push(naturality_relation(
                &obj,
                format!("gray.natural[{phi}x{psi_name}]", phi = lift(1, phi)),
                (&phi_term, phi_src.as_slice(), phi_tgt.as_slice()),
                (psi_term, psi_src.as_slice(), psi_tgt.as_slice()),
                cross,
            ));
        }
    }

    Presentation::new(vec![obj], one_gens, two_gens, relations)
}

/// An n-monad system over one object: monads `T_1..T_n` and a law for every
/// pair `i < j` oriented `T_i∘T_j => T_j∘T_i` (the earlier-indexed monad is
/// pushed inward), matching the crossing images of the tensor presentation.
#[derive(Debug, Clone)]
pub struct NFoldSystem {
    pub monads: Vec<MonadData>,
    pub laws: BTreeMap<(usize, usize), DistLawData>,
}

impl NFoldSystem {
    /// 1-based law keys `(i, j)` with `i < j <= monads.len()`; entry `(i, j)`
    /// must have `first = T_j` and `second = T_i`.
    pub fn new(monads: Vec<MonadData>, laws: BTreeMap<(usize, usize), DistLawData>) -> Result<Self> {
        if monads.is_empty() {
            return Err(Error::InvalidParameter("need at least one monad".into()));
        }
        let n = monads.len();
        for i in 1..=n {
            for j in i + 1..=n {
                let law = laws
                    .get(&(i, j))
                    .ok_or_else(|| Error::InvalidParameter(format!("missing law ({i},{j})")))?;
                if law.first.functor != monads[j - 1].functor
                    || law.second.functor != monads[i - 1].functor
                {
                    return Err(Error::BoundaryMismatch(format!(
                        "law ({i},{j}) does not run T_{i}∘T_{j} => T_{j}∘T_{i}"
                    )));
                }
            }
        }
        if laws.len() != n * (n - 1) / 2 {
            return Err(Error::InvalidParameter("spurious law entries".into()));
        }
        Ok(NFoldSystem { monads, laws })
    }

    pub fn n(&self) -> usize {
        self.monads.len()
    }
}

/// The interpretation of `mnd_power(terminal, n)` carrying an n-fold system.
pub fn encode_pdist(system: &NFoldSystem) -> Result<(MndPower, Interpretation<ContainerCat>)> {
    let n = system.n();
    let power = MndPower::build(&Presentation::terminal(), n)?;
    let mut interp: Interpretation<ContainerCat> = Interpretation::new();
    interp.objects.insert("*".into(), ());
    for (i, monad) in system.monads.iter().enumerate() {
        let i = i + 1;
        interp.ones.insert(format!("t{i}"), monad.functor.clone());
        interp.twos.insert(format!("eta{i}"), monad.unit.clone());
        interp.twos.insert(format!("mu{i}"), monad.mult.clone());
    }
    for ((i, j), law) in &system.laws {
        interp
            .twos
            .insert(cross_name(&format!("t{i}"), &format!("t{j}")), law.law.clone());
    }
    interp.validate(&ContainerCat, &power.presentation)?;
    Ok((power, interp))
}

/// Inverse repack: read the monads and the law matrix off an interpretation
/// of `mnd_power(terminal, n)`.
pub fn decode_pdist(
    power: &MndPower,
    interp: &Interpretation<ContainerCat>,
) -> Result<NFoldSystem> {
    interp.validate(&ContainerCat, &power.presentation)?;
    let n = power.n;
    let mut monads = Vec::with_capacity(n);
    for i in 1..=n {
        let functor = interp.ones[&format!("t{i}")].clone();
        let unit = interp.twos[&format!("eta{i}")].clone();
        let mult = interp.twos[&format!("mu{i}")].clone();
        monads.push(MonadData::new(format!("t{i}"), functor, unit, mult)?);
    }
    let mut laws = BTreeMap::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let law = interp.twos[&cross_name(&format!("t{i}"), &format!("t{j}"))].clone();
            laws.insert(
                (i, j),
                DistLawData::new(monads[j - 1].clone(), monads[i - 1].clone(), law)?,
            );
        }
    }
    NFoldSystem::new(monads, laws)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::container::{maybe, writer, ContainerMorphism, MonoidTable};
    use crate::twocat::check_relations;

    #[test]
    fn walking_monad_counts() {
        let p = walking_monad();
        assert_eq!(p.objects.len(), 1);
        assert_eq!(p.one_gens.len(), 1);
        assert_eq!(p.two_gens.len(), 2);
        assert_eq!(p.relations.len(), 3);
    }

    #[test]
    fn walking_monad_assoc_boundaries() {
        let p = walking_monad();
        let assoc = p.relations.iter().find(|r| r.tag == "monad.assoc").unwrap();
        let (ls, lt) = p.typecheck_term(&assoc.lhs).unwrap();
        let (rs, rt) = p.typecheck_term(&assoc.rhs).unwrap();
        assert_eq!(ls.gens.len(), 3);
        assert_eq!(lt.gens.len(), 1);
        assert_eq!((ls, lt), (rs, rt));
    }

    #[test]
    fn walking_monad_interprets_maybe() {
        let p = walking_monad();
        let m = maybe();
        let mut interp: Interpretation<ContainerCat> = Interpretation::new();
        interp.objects.insert("*".into(), ());
        interp.ones.insert("t".into(), m.functor.clone());
        interp.twos.insert("eta".into(), m.unit.clone());
        interp.twos.insert("mu".into(), m.mult.clone());
        let report = check_relations(&ContainerCat, &interp, &p).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn mnd_power_counts() {
        for n in 0..=4usize {
            let p = mnd_power(&Presentation::terminal(), n).unwrap();
            assert_eq!(p.one_gens.len(), n, "one-gens at n={n}");
            let choose2 = n * n.saturating_sub(1) / 2;
            let choose3 = if n >= 3 { n * (n - 1) * (n - 2) / 6 } else { 0 };
            assert_eq!(p.two_gens.len(), 2 * n + choose2, "two-gens at n={n}");
            let yb = p
                .relations
                .iter()
                .filter(|r| r.tag.starts_with("yang-baxter"))
                .count();
            assert_eq!(yb, choose3, "yang-baxter count at n={n}");
        }
    }

    #[test]
    fn mnd_power_two_matches_binary_tensor() {
        let direct = mnd_power(&Presentation::terminal(), 2).unwrap();
        let binary = gray_tensor(&walking_monad(), &walking_monad()).unwrap();
        assert_eq!(direct.one_gens.len(), binary.one_gens.len());
        assert_eq!(direct.two_gens.len(), binary.two_gens.len());
        assert_eq!(direct.relations.len(), binary.relations.len());

        let via_walking = mnd_power(&walking_monad(), 1).unwrap();
        assert_eq!(direct.one_gens.len(), via_walking.one_gens.len());
        assert_eq!(direct.two_gens.len(), via_walking.two_gens.len());
        assert_eq!(direct.relations.len(), via_walking.relations.len());
    }

    #[test]
    fn binary_tensor_counts() {
        let p = gray_tensor(&walking_monad(), &walking_monad()).unwrap();
        assert_eq!(p.objects.len(), 1);
        assert_eq!(p.one_gens.len(), 2);
        assert_eq!(p.two_gens.len(), 5);
    }

    #[test]
    fn tensor_with_terminal_is_isomorphic() {
        let q = walking_monad();
        let p = gray_tensor(&Presentation::terminal(), &q).unwrap();
        assert_eq!(p.one_gens.len(), q.one_gens.len());
        assert_eq!(p.two_gens.len(), q.two_gens.len());
        assert_eq!(p.relations.len(), q.relations.len());
        // names only gain the side prefix
        assert!(p.one_gens.iter().all(|g| g.name.starts_with("2:")));
    }

    #[test]
    fn crossing_with_identity_word_is_identity() {
        let power = MndPower::build(&Presentation::terminal(), 2).unwrap();
        let m = maybe();
        let system = crate::laws::nfold_from_pair(
            crate::parametric::dwriter(&MonoidTable::cyclic(2), &m).unwrap(),
        )
        .unwrap();
        let (_, interp) = encode_pdist(&system).unwrap();

        let empty = OneCellWord::id("*");
        let t2 = OneCellWord::path("*", vec!["t2".into()]);
        // γ_{Id, t2} is the identity on the image of t2.
        let cell = power
            .extend_crossing(&ContainerCat, &interp, 1, &empty, 2, &t2)
            .unwrap();
        assert!(cell.is_identity());
        // and symmetrically for the identity word on the higher factor
        let t1 = OneCellWord::path("*", vec!["t1".into()]);
        let cell = power
            .extend_crossing(&ContainerCat, &interp, 1, &t1, 2, &OneCellWord::id("*"))
            .unwrap();
        assert!(cell.is_identity());
    }

    #[test]
    fn extend_crossing_matches_ladder_on_words() {
        let power = MndPower::build(&Presentation::terminal(), 2).unwrap();
        let m = maybe();
        let dw = crate::parametric::dwriter(&MonoidTable::cyclic(2), &m).unwrap();
        let system = crate::laws::nfold_from_pair(dw.clone()).unwrap();
        let (_, interp) = encode_pdist(&system).unwrap();

        // γ on (t1·t1, t2) equals the two-step ladder evaluated directly.
        let t1t1 = OneCellWord::path("*", vec!["t1".into(), "t1".into()]);
        let t2 = OneCellWord::path("*", vec!["t2".into()]);
        let cell = power
            .extend_crossing(&ContainerCat, &interp, 1, &t1t1, 2, &t2)
            .unwrap();
        let gamma = &dw.law;
        let t1img = interp.ones["t1"].clone();
        let direct = ContainerMorphism::vertical(
            &ContainerMorphism::whisker_inner(gamma, &t1img),
            &ContainerMorphism::whisker_outer(&t1img, gamma),
        )
        .unwrap();
        assert!(ContainerMorphism::equal(&cell, &direct).unwrap());

        // γ on (t1, t2·t2) against the dual ladder.
        let t2t2 = OneCellWord::path("*", vec!["t2".into(), "t2".into()]);
        let t1 = OneCellWord::path("*", vec!["t1".into()]);
        let cell = power
            .extend_crossing(&ContainerCat, &interp, 1, &t1, 2, &t2t2)
            .unwrap();
        let t2img = interp.ones["t2"].clone();
        let direct = ContainerMorphism::vertical(
            &ContainerMorphism::whisker_outer(&t2img, gamma),
            &ContainerMorphism::whisker_inner(gamma, &t2img),
        )
        .unwrap();
        assert!(ContainerMorphism::equal(&cell, &direct).unwrap());
    }
}
