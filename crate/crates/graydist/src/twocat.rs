//! Finitely presented strict 2-categories and a formal 2-cell term algebra.
//!
//! A [`Presentation`] lists object, 1-cell and 2-cell generators plus
//! relations between 2-cell terms. Terms are never normalized; equality of
//! terms is only decided after interpretation into a concrete target with
//! decidable 2-cell equality (the [`TwoCat`] trait). Composition of 1-cells
//! is written `g · f` with `f` applied first; words store their generators
//! in application order.

use crate::container::{Container, ContainerMorphism};
use crate::error::{Error, Result};
use crate::report::CheckReport;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;

/// A strict 2-category with decidable 2-cell equality, the target interface
/// for interpretations.
pub trait TwoCat {
    type Obj: Clone + Eq + fmt::Debug;
    type One: Clone + Eq + fmt::Debug;
    type Two: Clone + fmt::Debug;

    fn one_src(&self, f: &Self::One) -> Self::Obj;
    fn one_tgt(&self, f: &Self::One) -> Self::Obj;
    fn id_one(&self, o: &Self::Obj) -> Self::One;
    /// `later · earlier` (earlier applied first).
    fn compose_one(&self, later: &Self::One, earlier: &Self::One) -> Result<Self::One>;

    fn two_src(&self, a: &Self::Two) -> Self::One;
    fn two_tgt(&self, a: &Self::Two) -> Self::One;
    fn id_two(&self, f: &Self::One) -> Self::Two;
    fn vertical(&self, later: &Self::Two, earlier: &Self::Two) -> Result<Self::Two>;
    fn horizontal(&self, outer: &Self::Two, inner: &Self::Two) -> Result<Self::Two>;
    fn equal_two(&self, a: &Self::Two, b: &Self::Two) -> Result<bool>;

    fn describe_two(&self, _a: &Self::Two) -> String {
        String::new()
    }

    /// Counterexample description when `a != b`.
    fn diff_witness(&self, a: &Self::Two, b: &Self::Two) -> Option<String> {
        match self.equal_two(a, b) {
            Ok(true) => None,
            Ok(false) => Some("cells differ".into()),
            Err(e) => Some(format!("boundary mismatch: {e}")),
        }
    }
}

/// Finite polynomial endofunctors as a one-object strict 2-category.
#[derive(Debug, Clone, Copy, Default)]
pub struct ContainerCat;

impl TwoCat for ContainerCat {
    type Obj = ();
    type One = Container;
    type Two = ContainerMorphism;

    fn one_src(&self, _f: &Container) {}
    fn one_tgt(&self, _f: &Container) {}

    fn id_one(&self, _o: &()) -> Container {
        Container::identity()
    }

    fn compose_one(&self, later: &Container, earlier: &Container) -> Result<Container> {
        Ok(later.compose(earlier))
    }

    fn two_src(&self, a: &ContainerMorphism) -> Container {
        a.src().clone()
    }

    fn two_tgt(&self, a: &ContainerMorphism) -> Container {
        a.tgt().clone()
    }

    fn id_two(&self, f: &Container) -> ContainerMorphism {
        ContainerMorphism::identity(f)
    }

    fn vertical(
        &self,
        later: &ContainerMorphism,
        earlier: &ContainerMorphism,
    ) -> Result<ContainerMorphism> {
        ContainerMorphism::vertical(later, earlier)
    }

    fn horizontal(
        &self,
        outer: &ContainerMorphism,
        inner: &ContainerMorphism,
    ) -> Result<ContainerMorphism> {
        ContainerMorphism::horizontal(outer, inner)
    }

    fn equal_two(&self, a: &ContainerMorphism, b: &ContainerMorphism) -> Result<bool> {
        ContainerMorphism::equal(a, b)
    }

    fn describe_two(&self, a: &ContainerMorphism) -> String {
        a.to_string()
    }

    fn diff_witness(&self, a: &ContainerMorphism, b: &ContainerMorphism) -> Option<String> {
        crate::container::law_witness(a, b)
    }
}

/// The terminal strict 2-category: one object, identity cells only.
#[derive(Debug, Clone, Copy, Default)]
pub struct TerminalCat;

impl TwoCat for TerminalCat {
    type Obj = ();
    type One = ();
    type Two = ();

    fn one_src(&self, _f: &()) {}
    fn one_tgt(&self, _f: &()) {}
    fn id_one(&self, _o: &()) {}
    fn compose_one(&self, _later: &(), _earlier: &()) -> Result<()> {
        Ok(())
    }
    fn two_src(&self, _a: &()) {}
    fn two_tgt(&self, _a: &()) {}
    fn id_two(&self, _f: &()) {}
    fn vertical(&self, _later: &(), _earlier: &()) -> Result<()> {
        Ok(())
    }
    fn horizontal(&self, _outer: &(), _inner: &()) -> Result<()> {
        Ok(())
    }
    fn equal_two(&self, _a: &(), _b: &()) -> Result<bool> {
        Ok(true)
    }
}

/// A composable sequence of 1-cell generators, stored in application order
/// (`gens[0]` first). The base object disambiguates the empty word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OneCellWord {
    pub base: String,
    pub gens: Vec<String>,
}

impl OneCellWord {
    pub fn id(base: impl Into<String>) -> Self {
        OneCellWord {
            base: base.into(),
            gens: Vec::new(),
        }
    }

    pub fn path(base: impl Into<String>, gens: Vec<String>) -> Self {
        OneCellWord {
            base: base.into(),
            gens,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// `self · earlier`: concatenation with `earlier` applied first.
    pub fn after(&self, earlier: &OneCellWord) -> OneCellWord {
        let mut gens = earlier.gens.clone();
        gens.extend(self.gens.iter().cloned());
        OneCellWord {
            base: earlier.base.clone(),
            gens,
        }
    }
}

impl fmt::Display for OneCellWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "Id_{}", self.base);
        }
        let parts: Vec<&str> = self.gens.iter().rev().map(|s| s.as_str()).collect();
        write!(f, "{}", parts.join("·"))
    }
}

/// Formal pasting expressions over the 2-cell generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoCellTerm {
    Gen(String),
    Id(OneCellWord),
    /// Vertical composite, first argument applied last.
    V(Box<TwoCellTerm>, Box<TwoCellTerm>),
    /// Horizontal composite, first argument outermost.
    H(Box<TwoCellTerm>, Box<TwoCellTerm>),
}

impl TwoCellTerm {
    pub fn gen(name: impl Into<String>) -> Self {
        TwoCellTerm::Gen(name.into())
    }

    pub fn id(word: OneCellWord) -> Self {
        TwoCellTerm::Id(word)
    }

    pub fn v(later: TwoCellTerm, earlier: TwoCellTerm) -> Self {
        TwoCellTerm::V(Box::new(later), Box::new(earlier))
    }

    pub fn h(outer: TwoCellTerm, inner: TwoCellTerm) -> Self {
        TwoCellTerm::H(Box::new(outer), Box::new(inner))
    }
}

impl fmt::Display for TwoCellTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwoCellTerm::Gen(name) => write!(f, "{name}"),
            TwoCellTerm::Id(w) => write!(f, "1_{{{w}}}"),
            TwoCellTerm::V(a, b) => write!(f, "({a} ∘ {b})"),
            TwoCellTerm::H(a, b) => write!(f, "({a} · {b})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneGen {
    pub name: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoGen {
    pub name: String,
    pub src: OneCellWord,
    pub tgt: OneCellWord,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub tag: String,
    pub lhs: TwoCellTerm,
    pub rhs: TwoCellTerm,
}

/// A finitely presented strict 2-category. Construction typechecks every
/// generator boundary and both sides of every relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub objects: Vec<String>,
    pub one_gens: Vec<OneGen>,
    pub two_gens: Vec<TwoGen>,
    pub relations: Vec<Relation>,
}

impl Presentation {
    pub fn new(
        objects: Vec<String>,
        one_gens: Vec<OneGen>,
        two_gens: Vec<TwoGen>,
        relations: Vec<Relation>,
    ) -> Result<Self> {
        let p = Presentation {
            objects,
            one_gens,
            two_gens,
            relations,
        };
        p.validate()?;
        Ok(p)
    }

    /// One object, no generators, no relations.
    pub fn terminal() -> Self {
        Presentation {
            objects: vec!["*".into()],
            one_gens: Vec::new(),
            two_gens: Vec::new(),
            relations: Vec::new(),
        }
    }

    fn validate(&self) -> Result<()> {
        for g in &self.one_gens {
            for obj in [&g.src, &g.tgt] {
                if !self.objects.contains(obj) {
                    return Err(Error::UnknownGenerator(format!(
                        "object {obj} in 1-cell {}",
                        g.name
                    )));
                }
            }
        }
        for g in &self.two_gens {
            let s = self.word_boundaries(&g.src)?;
            let t = self.word_boundaries(&g.tgt)?;
            if s != t {
                return Err(Error::BoundaryMismatch(format!(
                    "2-cell {}: source word runs {}->{} but target word runs {}->{}",
                    g.name, s.0, s.1, t.0, t.1
                )));
            }
        }
        for r in &self.relations {
            let (ls, lt) = self.typecheck_term(&r.lhs)?;
            let (rs, rt) = self.typecheck_term(&r.rhs)?;
            if ls != rs || lt != rt {
                return Err(Error::BoundaryMismatch(format!(
                    "relation {}: {ls} => {lt} against {rs} => {rt}",
                    r.tag
                )));
            }
        }
        Ok(())
    }

    pub fn one_gen(&self, name: &str) -> Result<&OneGen> {
        self.one_gens
            .iter()
            .find(|g| g.name == name)
            .ok_or_else(|| Error::UnknownGenerator(format!("1-cell {name}")))
    }

    pub fn two_gen(&self, name: &str) -> Result<&TwoGen> {
        self.two_gens
            .iter()
            .find(|g| g.name == name)
            .ok_or_else(|| Error::UnknownGenerator(format!("2-cell {name}")))
    }

    /// Source and target objects of a word; checks composability.
    pub fn word_boundaries(&self, w: &OneCellWord) -> Result<(String, String)> {
        if !self.objects.contains(&w.base) {
            return Err(Error::UnknownGenerator(format!("object {}", w.base)));
        }
        let mut at = w.base.clone();
        for name in &w.gens {
            let g = self.one_gen(name)?;
            if g.src != at {
                return Err(Error::BoundaryMismatch(format!(
                    "word {w}: generator {name} starts at {} but the path is at {at}",
                    g.src
                )));
            }
            at = g.tgt.clone();
        }
        Ok((w.base.clone(), at))
    }

    /// Boundary words of a term; fails on ill-typed composites, reporting the
    /// offending subterm.
    pub fn typecheck_term(&self, t: &TwoCellTerm) -> Result<(OneCellWord, OneCellWord)> {
        match t {
            TwoCellTerm::Gen(name) => {
                let g = self.two_gen(name)?;
                Ok((g.src.clone(), g.tgt.clone()))
            }
            TwoCellTerm::Id(w) => {
                self.word_boundaries(w)?;
                Ok((w.clone(), w.clone()))
            }
            TwoCellTerm::V(later, earlier) => {
                let (es, et) = self.typecheck_term(earlier)?;
                let (ls, lt) = self.typecheck_term(later)?;
                if et != ls {
                    return Err(Error::BoundaryMismatch(format!(
                        "vertical composite {t}: middle boundary {et} against {ls}"
                    )));
                }
                Ok((es, lt))
            }
            TwoCellTerm::H(outer, inner) => {
                let (is_, it) = self.typecheck_term(inner)?;
                let (os, ot) = self.typecheck_term(outer)?;
                let inner_tgt_obj = self.word_boundaries(&is_)?.1;
                let outer_src_obj = self.word_boundaries(&os)?.0;
                if inner_tgt_obj != outer_src_obj {
                    return Err(Error::BoundaryMismatch(format!(
                        "horizontal composite {t}: object {inner_tgt_obj} against {outer_src_obj}"
                    )));
                }
                Ok((os.after(&is_), ot.after(&it)))
            }
        }
    }
}

/// A strict 2-functor out of a presentation into a concrete target:
/// assignments for all three generator kinds.
#[derive(Debug, Clone)]
pub struct Interpretation<B: TwoCat> {
    pub objects: BTreeMap<String, B::Obj>,
    pub ones: BTreeMap<String, B::One>,
    pub twos: BTreeMap<String, B::Two>,
}

impl<B: TwoCat> Interpretation<B> {
    pub fn new() -> Self {
        Interpretation {
            objects: BTreeMap::new(),
            ones: BTreeMap::new(),
            twos: BTreeMap::new(),
        }
    }

    /// Check that every generator is assigned and that assigned boundaries
    /// match the images of the generator signatures.
    pub fn validate(&self, target: &B, p: &Presentation) -> Result<()> {
        for obj in &p.objects {
            if !self.objects.contains_key(obj) {
                return Err(Error::Resolution(format!("object {obj} not assigned")));
            }
        }
        for g in &p.one_gens {
            let img = self
                .ones
                .get(&g.name)
                .ok_or_else(|| Error::Resolution(format!("1-cell {} not assigned", g.name)))?;
            if target.one_src(img) != self.objects[&g.src]
                || target.one_tgt(img) != self.objects[&g.tgt]
            {
                return Err(Error::BoundaryMismatch(format!(
                    "image of 1-cell {} has wrong endpoints",
                    g.name
                )));
            }
        }
        for g in &p.two_gens {
            let img = self
                .twos
                .get(&g.name)
                .ok_or_else(|| Error::Resolution(format!("2-cell {} not assigned", g.name)))?;
            let src = self.eval_word(target, p, &g.src)?;
            let tgt = self.eval_word(target, p, &g.tgt)?;
            if target.two_src(img) != src || target.two_tgt(img) != tgt {
                return Err(Error::BoundaryMismatch(format!(
                    "image of 2-cell {} has the wrong boundary",
                    g.name
                )));
            }
        }
        Ok(())
    }

    pub fn eval_word(&self, target: &B, p: &Presentation, w: &OneCellWord) -> Result<B::One> {
        let base = self
            .objects
            .get(&w.base)
            .ok_or_else(|| Error::Resolution(format!("object {}", w.base)))?;
        let mut acc = target.id_one(base);
        for name in &w.gens {
            p.one_gen(name)?;
            let img = self
                .ones
                .get(name)
                .ok_or_else(|| Error::Resolution(format!("1-cell {name}")))?;
            acc = target.compose_one(img, &acc)?;
        }
        Ok(acc)
    }

    /// Structural recursion: identities to identities, both compositions
    /// preserved strictly.
    pub fn eval_term(&self, target: &B, p: &Presentation, t: &TwoCellTerm) -> Result<B::Two> {
        match t {
            TwoCellTerm::Gen(name) => {
                p.two_gen(name)?;
                self.twos
                    .get(name)
                    .cloned()
                    .ok_or_else(|| Error::Resolution(format!("2-cell {name}")))
            }
            TwoCellTerm::Id(w) => Ok(target.id_two(&self.eval_word(target, p, w)?)),
            TwoCellTerm::V(later, earlier) => {
                let e = self.eval_term(target, p, earlier)?;
                let l = self.eval_term(target, p, later)?;
                target.vertical(&l, &e)
            }
            TwoCellTerm::H(outer, inner) => {
                let i = self.eval_term(target, p, inner)?;
                let o = self.eval_term(target, p, outer)?;
                target.horizontal(&o, &i)
            }
        }
    }
}

impl<B: TwoCat> Default for Interpretation<B> {
    fn default() -> Self {
        Self::new()
    }
}

/// Evaluate both sides of every relation and compare with the target's
/// decidable equality. Failures are data, not errors.
pub fn check_relations<B: TwoCat>(
    target: &B,
    interp: &Interpretation<B>,
    p: &Presentation,
) -> Result<CheckReport> {
    interp.validate(target, p)?;
    let mut report = CheckReport::new("relations");
    for rel in &p.relations {
        let lhs = interp.eval_term(target, p, &rel.lhs)?;
        let rhs = interp.eval_term(target, p, &rel.rhs)?;
        report.record(rel.tag.clone(), target.diff_witness(&lhs, &rhs));
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// JSON serialization
// ---------------------------------------------------------------------------

fn word_to_json(w: &OneCellWord) -> Value {
    json!({ "object": w.base, "path": w.gens })
}

fn word_from_json(v: &Value) -> Result<OneCellWord> {
    let base = v
        .get("object")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse("word needs an \"object\"".into()))?;
    let gens = v
        .get("path")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("word needs a \"path\"".into()))?
        .iter()
        .map(|g| {
            g.as_str()
                .map(str::to_owned)
                .ok_or_else(|| Error::Parse("path entries are strings".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(OneCellWord::path(base, gens))
}

fn term_to_json(t: &TwoCellTerm) -> Value {
    match t {
        TwoCellTerm::Gen(name) => json!(["gen", name]),
        TwoCellTerm::Id(w) => json!(["id", word_to_json(w)]),
        TwoCellTerm::V(a, b) => json!(["v", term_to_json(a), term_to_json(b)]),
        TwoCellTerm::H(a, b) => json!(["h", term_to_json(a), term_to_json(b)]),
    }
}

fn term_from_json(v: &Value) -> Result<TwoCellTerm> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse("terms are arrays".into()))?;
    let head = arr
        .first()
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse("term head must be a string".into()))?;
    match (head, arr.len()) {
        ("gen", 2) => Ok(TwoCellTerm::Gen(
            arr[1]
                .as_str()
                .ok_or_else(|| Error::Parse("gen name".into()))?
                .to_owned(),
        )),
        ("id", 2) => Ok(TwoCellTerm::Id(word_from_json(&arr[1])?)),
        ("v", 3) => Ok(TwoCellTerm::v(
            term_from_json(&arr[1])?,
            term_from_json(&arr[2])?,
        )),
        ("h", 3) => Ok(TwoCellTerm::h(
            term_from_json(&arr[1])?,
            term_from_json(&arr[2])?,
        )),
        _ => Err(Error::Parse(format!("bad term head {head:?}"))),
    }
}

pub fn presentation_to_json(p: &Presentation) -> Value {
    json!({
        "objects": p.objects,
        "one_cells": p.one_gens.iter().map(|g| json!({
            "name": g.name, "src": g.src, "tgt": g.tgt
        })).collect::<Vec<_>>(),
        "two_cells": p.two_gens.iter().map(|g| json!({
            "name": g.name, "src": word_to_json(&g.src), "tgt": word_to_json(&g.tgt)
        })).collect::<Vec<_>>(),
        "relations": p.relations.iter().map(|r| json!({
            "tag": r.tag, "lhs": term_to_json(&r.lhs), "rhs": term_to_json(&r.rhs)
        })).collect::<Vec<_>>(),
    })
}

pub fn presentation_from_json(v: &Value) -> Result<Presentation> {
    let objects = v
        .get("objects")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing \"objects\"".into()))?
        .iter()
        .map(|o| {
            o.as_str()
                .map(str::to_owned)
                .ok_or_else(|| Error::Parse("objects are strings".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut one_gens = Vec::new();
    for g in v
        .get("one_cells")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing \"one_cells\"".into()))?
    {
        one_gens.push(OneGen {
            name: field_str(g, "name")?,
            src: field_str(g, "src")?,
            tgt: field_str(g, "tgt")?,
        });
    }
    let mut two_gens = Vec::new();
    for g in v
        .get("two_cells")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing \"two_cells\"".into()))?
    {
        two_gens.push(TwoGen {
            name: field_str(g, "name")?,
            src: word_from_json(g.get("src").ok_or_else(|| Error::Parse("two_cell src".into()))?)?,
            tgt: word_from_json(g.get("tgt").ok_or_else(|| Error::Parse("two_cell tgt".into()))?)?,
        });
    }
    let mut relations = Vec::new();
    for r in v
        .get("relations")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing \"relations\"".into()))?
    {
        relations.push(Relation {
            tag: field_str(r, "tag")?,
            lhs: term_from_json(r.get("lhs").ok_or_else(|| Error::Parse("relation lhs".into()))?)?,
            rhs: term_from_json(r.get("rhs").ok_or_else(|| Error::Parse("relation rhs".into()))?)?,
        });
    }
    Presentation::new(objects, one_gens, two_gens, relations)
}

fn field_str(v: &Value, key: &str) -> Result<String> {
    v.get(key)
        .and_then(Value::as_str)
        .map(str::to_owned)
        .ok_or_else(|| Error::Parse(format!("missing string field {key:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::container::{writer, writer_raw, MonoidTable};
    use crate::gray::walking_monad;

    fn z2_interp() -> Interpretation<ContainerCat> {
        let w = writer(&MonoidTable::cyclic(2));
        let mut i = Interpretation::new();
        i.objects.insert("*".into(), ());
        i.ones.insert("t".into(), w.functor.clone());
        i.twos.insert("eta".into(), w.unit.clone());
        i.twos.insert("mu".into(), w.mult.clone());
        i
    }

    #[test]
    fn typecheck_examples() {
        let p = walking_monad();
        // identity on the empty word
        let (s, t) = p
            .typecheck_term(&TwoCellTerm::id(OneCellWord::id("*")))
            .unwrap();
        assert!(s.is_empty() && t.is_empty());

        // μ∘(μ·t) runs t·t·t => t
        let ttt = TwoCellTerm::v(
            TwoCellTerm::gen("mu"),
            TwoCellTerm::h(
                TwoCellTerm::gen("mu"),
                TwoCellTerm::id(OneCellWord::path("*", vec!["t".into()])),
            ),
        );
        let (s, t) = p.typecheck_term(&ttt).unwrap();
        assert_eq!(s.gens.len(), 3);
        assert_eq!(t.gens.len(), 1);

        // vertical(η, μ) is ill-typed: tgt(μ) = t but src(η) = Id.
        let bad = TwoCellTerm::v(TwoCellTerm::gen("eta"), TwoCellTerm::gen("mu"));
        assert!(matches!(
            p.typecheck_term(&bad),
            Err(Error::BoundaryMismatch(_))
        ));
    }

    #[test]
    fn eval_term_examples() {
        let p = walking_monad();
        let target = ContainerCat;
        let interp = z2_interp();
        let w = writer(&MonoidTable::cyclic(2));

        // identities map to identities on the evaluated word
        let word = OneCellWord::path("*", vec!["t".into(), "t".into()]);
        let cell = interp
            .eval_term(&target, &p, &TwoCellTerm::id(word.clone()))
            .unwrap();
        let expected = ContainerMorphism::identity(&w.functor.compose(&w.functor));
        assert!(ContainerMorphism::equal(&cell, &expected).unwrap());

        // μ evaluates to the container morphism with shape map addition mod 2
        let mu = interp
            .eval_term(&target, &p, &TwoCellTerm::gen("mu"))
            .unwrap();
        assert!(ContainerMorphism::equal(&mu, &w.mult).unwrap());
    }

    #[test]
    fn walking_monad_relations_pass_for_writer() {
        let p = walking_monad();
        let report = check_relations(&ContainerCat, &z2_interp(), &p).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.instances.len(), 3);
    }

    #[test]
    fn corrupted_mult_fails_assoc_with_witness() {
        let p = walking_monad();
        let table: Vec<Vec<usize>> = (0..3)
            .map(|a| (0..3).map(|b| (a + 2 * b) % 3).collect())
            .collect();
        let bad = writer_raw("bad", 3, 0, &table).unwrap();
        let mut interp: Interpretation<ContainerCat> = Interpretation::new();
        interp.objects.insert("*".into(), ());
        interp.ones.insert("t".into(), bad.functor.clone());
        interp.twos.insert("eta".into(), bad.unit.clone());
        interp.twos.insert("mu".into(), bad.mult.clone());
        let report = check_relations(&ContainerCat, &interp, &p).unwrap();
        assert!(!report.passed());
        let assoc = report
            .instances
            .iter()
            .find(|i| i.tag == "monad.assoc")
            .unwrap();
        assert!(!assoc.pass);
        assert!(!assoc.witness.is_empty());
    }

    #[test]
    fn empty_relation_set_passes() {
        let p = Presentation::terminal();
        let mut interp: Interpretation<ContainerCat> = Interpretation::new();
        interp.objects.insert("*".into(), ());
        let report = check_relations(&ContainerCat, &interp, &p).unwrap();
        assert!(report.passed());
        assert!(report.instances.is_empty());
    }

    #[test]
    fn json_round_trip() {
        let p = walking_monad();
        let v = presentation_to_json(&p);
        let back = presentation_from_json(&v).unwrap();
        assert_eq!(p, back);
    }
}
