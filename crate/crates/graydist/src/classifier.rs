//! The path-based lax functor classifier over a strict target, its two
//! compositions, the hom-set enumeration for the terminal base, and the
//! translation between monads and their classifying assignments.
//!
//! 1-cells are composable paths; a 2-cell between a length-`m` and a
//! length-`n` path carries an interval reindexing from the `(n+1)`-chain to
//! the `(m+1)`-chain plus one target 2-cell per generating arrow of `[n]`,
//! from the reindexed window composite to the path's arrow. Components on
//! longer arrows are derived by composition.

use crate::container::{eval_size, ContainerMorphism, FinSet, MonadData};
use crate::error::{Error, Result};
use crate::ordinals::{interval_maps, GenKind, IntervalMap, MonotoneMap, Ordinal};
use crate::twocat::{TerminalCat, TwoCat};

/// A 1-cell of the classifier: a composable path, stored in application
/// order. Length 0 is the identity on the endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HatOneCell<B: TwoCat> {
    pub source: B::Obj,
    pub path: Vec<B::One>,
}

impl<B: TwoCat> HatOneCell<B> {
    pub fn identity(obj: B::Obj) -> Self {
        HatOneCell {
            source: obj,
            path: Vec::new(),
        }
    }

    pub fn new(target: &B, source: B::Obj, path: Vec<B::One>) -> Result<Self> {
        let mut at = source.clone();
        for f in &path {
            if target.one_src(f) != at {
                return Err(Error::BoundaryMismatch("path is not composable".into()));
            }
            at = target.one_tgt(f);
        }
        Ok(HatOneCell { source, path })
    }

    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn is_empty(&self) -> bool {
        self.path.is_empty()
    }

    pub fn target(&self, b: &B) -> B::Obj {
        self.path
            .last()
            .map(|f| b.one_tgt(f))
            .unwrap_or_else(|| self.source.clone())
    }

    /// Strict composite of the sub-path `lo..hi` (identity when empty).
    pub fn window(&self, b: &B, lo: usize, hi: usize) -> Result<B::One> {
        let at = if lo == 0 {
            self.source.clone()
        } else {
            b.one_tgt(&self.path[lo - 1])
        };
        let mut acc = b.id_one(&at);
        for f in &self.path[lo..hi] {
            acc = b.compose_one(f, &acc)?;
        }
        Ok(acc)
    }

    /// Path concatenation: `later ⋆ earlier` (earlier traversed first).
    pub fn concat(later: &Self, earlier: &Self) -> Self {
        let mut path = earlier.path.clone();
        path.extend(later.path.iter().cloned());
        HatOneCell {
            source: earlier.source.clone(),
            path,
        }
    }
}

/// A 2-cell of the classifier: interval reindexing plus components on the
/// generating arrows of the target path.
#[derive(Debug, Clone)]
pub struct HatTwoCell<B: TwoCat> {
    pub src: HatOneCell<B>,
    pub tgt: HatOneCell<B>,
    /// Interval map from the `(tgt.len()+1)`-chain to the `(src.len()+1)`-chain.
    pub reindex: IntervalMap,
    /// `components[a]` runs from the composite of `src.path[α(a)..α(a+1)]`
    /// to `tgt.path[a]`.
    pub components: Vec<B::Two>,
}

impl<B: TwoCat> HatTwoCell<B> {
    pub fn new(
        b: &B,
        src: HatOneCell<B>,
        tgt: HatOneCell<B>,
        reindex: IntervalMap,
        components: Vec<B::Two>,
    ) -> Result<Self> {
        if reindex.dom().size != tgt.len() + 1 || reindex.cod().size != src.len() + 1 {
            return Err(Error::BoundaryMismatch(format!(
                "reindex must run the {}-chain to the {}-chain",
                tgt.len() + 1,
                src.len() + 1
            )));
        }
        if src.source != tgt.source || src.target(b) != tgt.target(b) {
            return Err(Error::BoundaryMismatch("endpoints differ".into()));
        }
        if components.len() != tgt.len() {
            return Err(Error::BoundaryMismatch(format!(
                "need {} components, got {}",
                tgt.len(),
                components.len()
            )));
        }
        let cell = HatTwoCell {
            src,
            tgt,
            reindex,
            components,
        };
        for a in 0..cell.tgt.len() {
            let window = cell
                .src
                .window(b, cell.reindex.apply(a), cell.reindex.apply(a + 1))?;
            if b.two_src(&cell.components[a]) != window
                || b.two_tgt(&cell.components[a]) != cell.tgt.path[a]
            {
                return Err(Error::BoundaryMismatch(format!(
                    "component {a} has the wrong boundary"
                )));
            }
        }
        Ok(cell)
    }

    pub fn identity(b: &B, cell: &HatOneCell<B>) -> Self {
        HatTwoCell {
            src: cell.clone(),
            tgt: cell.clone(),
            reindex: IntervalMap::identity(Ordinal::new(cell.len() + 1)),
            components: cell.path.iter().map(|f| b.id_two(f)).collect(),
        }
    }

    /// Derived component on the composite arrow `lo..hi` of the target path:
    /// generator components composed left to right.
    pub fn component_window(&self, b: &B, lo: usize, hi: usize) -> Result<B::Two> {
        let window = self
            .src
            .window(b, self.reindex.apply(lo), self.reindex.apply(hi))?;
        let _ = window;
        let mut acc: Option<B::Two> = None;
        for a in lo..hi {
            // whisker the next component onto the accumulated composite
            acc = Some(match acc {
                None => self.components[a].clone(),
                Some(prev) => b.horizontal(&self.components[a], &prev)?,
            });
        }
        Ok(match acc {
            Some(x) => x,
            None => b.id_two(&self.src.window(b, self.reindex.apply(lo), self.reindex.apply(hi))?),
        })
    }
}

/// Vertical composition `(φ, α) ∘ (ψ, β) = (φ ∘ ψα, β ∘ α)`: the reindex
/// composes contravariantly, components compose after reindexing `ψ`'s
/// windows along `α`.
pub fn hat_vertical<B: TwoCat>(
    b: &B,
    later: &HatTwoCell<B>,
    earlier: &HatTwoCell<B>,
) -> Result<HatTwoCell<B>> {
    if earlier.tgt != later.src {
        return Err(Error::BoundaryMismatch(
            "vertical composite needs matching middle 1-cell".into(),
        ));
    }
    let reindex = IntervalMap::compose(&earlier.reindex, &later.reindex)?;
    let mut components = Vec::with_capacity(later.tgt.len());
    for a in 0..later.tgt.len() {
        let lo = later.reindex.apply(a);
        let hi = later.reindex.apply(a + 1);
        let reindexed = earlier.component_window(b, lo, hi)?;
        components.push(b.vertical(&later.components[a], &reindexed)?);
    }
    HatTwoCell::new(
        b,
        earlier.src.clone(),
        later.tgt.clone(),
        reindex,
        components,
    )
}

/// Horizontal composition: paths concatenate, reindexings block-sum, and
/// components are taken from the half the generating arrow lives in.
pub fn hat_horizontal<B: TwoCat>(
    b: &B,
    outer: &HatTwoCell<B>,
    inner: &HatTwoCell<B>,
) -> Result<HatTwoCell<B>> {
    if inner.src.target(b) != outer.src.source {
        return Err(Error::BoundaryMismatch(
            "horizontal composite needs composable endpoints".into(),
        ));
    }
    let src = HatOneCell::concat(&outer.src, &inner.src);
    let tgt = HatOneCell::concat(&outer.tgt, &inner.tgt);
    let reindex = inner.reindex.wedge(&outer.reindex);
    let mut components = Vec::with_capacity(tgt.len());
    for a in 0..tgt.len() {
        if a < inner.tgt.len() {
            components.push(inner.components[a].clone());
        } else {
            components.push(outer.components[a - inner.tgt.len()].clone());
        }
    }
    HatTwoCell::new(b, src, tgt, reindex, components)
}

/// All 2-cells between the length-`m` and the length-`n` 1-cell of the
/// classifier of the terminal 2-category: one per interval map, hence
/// `C(m+n-1, m)` of them.
pub fn hat_terminal_hom(m: usize, n: usize) -> Vec<HatTwoCell<TerminalCat>> {
    let b = TerminalCat;
    let src = HatOneCell::<TerminalCat> {
        source: (),
        path: vec![(); m],
    };
    let tgt = HatOneCell::<TerminalCat> {
        source: (),
        path: vec![(); n],
    };
    interval_maps(Ordinal::new(n + 1), Ordinal::new(m + 1))
        .into_iter()
        .map(|alpha| {
            HatTwoCell::new(&b, src.clone(), tgt.clone(), alpha, vec![(); n])
                .expect("terminal cells are always well-bounded")
        })
        .collect()
}

/// The classifying cell of a monotone map in the terminal classifier.
pub fn hat_terminal_of_monotone(f: &MonotoneMap) -> HatTwoCell<TerminalCat> {
    let b = TerminalCat;
    let m = f.dom().size;
    let n = f.cod().size;
    HatTwoCell::new(
        &b,
        HatOneCell {
            source: (),
            path: vec![(); m],
        },
        HatOneCell {
            source: (),
            path: vec![(); n],
        },
        f.dualize(),
        vec![(); n],
    )
    .expect("dual of a monotone map classifies a cell")
}

/// Recover the monotone map classified by a terminal-classifier cell.
pub fn monotone_of_hat_terminal(cell: &HatTwoCell<TerminalCat>) -> MonotoneMap {
    cell.reindex.dualize()
}

/// The strict assignment classified by a monad: a monotone map with fiber
/// profile `(k_0, …, k_{n-1})` goes to the horizontal composite of
/// left-nested multiplication trees, with `k = 0` the unit and `k = 1` the
/// identity. Composition of monotone maps goes to vertical composition.
pub struct MonadClassifier {
    monad: MonadData,
}

impl MonadClassifier {
    pub fn new(monad: MonadData) -> Self {
        MonadClassifier { monad }
    }

    pub fn monad(&self) -> &MonadData {
        &self.monad
    }

    /// Left-nested multiplication tree `t^k => t`.
    pub fn mu_tree(&self, k: usize) -> ContainerMorphism {
        let t = &self.monad.functor;
        match k {
            0 => self.monad.unit.clone(),
            1 => ContainerMorphism::identity(t),
            _ => {
                let mut acc = self.monad.mult.clone();
                for _ in 2..k {
                    acc = ContainerMorphism::vertical(
                        &self.monad.mult,
                        &ContainerMorphism::whisker_inner(&acc, t),
                    )
                    .expect("mu tree boundary");
                }
                acc
            }
        }
    }

    /// Image of a monotone map: horizontal composite over the fiber profile,
    /// outermost codomain factor first.
    pub fn apply(&self, f: &MonotoneMap) -> ContainerMorphism {
        let profile = f.fiber_profile();
        let mut acc: Option<ContainerMorphism> = None;
        for &k in profile.iter().rev() {
            let tree = self.mu_tree(k);
            acc = Some(match acc {
                None => tree,
                Some(inner) => {
                    ContainerMorphism::horizontal(&tree, &inner).expect("profile blocks")
                }
            });
        }
        acc.unwrap_or_else(|| ContainerMorphism::identity(&crate::container::Container::identity()))
    }
}

/// Extract the monad back from a classifying assignment: the carrier from
/// the identity's boundary, the unit from the empty map, the multiplication
/// from the first degeneracy.
pub fn tilde_of_assignment(
    h: impl Fn(&MonotoneMap) -> ContainerMorphism,
) -> Result<MonadData> {
    let id1 = MonotoneMap::identity(Ordinal::new(1));
    let carrier = h(&id1).src().clone();
    let unit = h(&MonotoneMap::empty_to(Ordinal::new(1)));
    let mult = h(&MonotoneMap::generator(GenKind::Sigma, 0, 0)?);
    MonadData::new("tilde", carrier, unit, mult)
}

/// Hom-set cardinalities of the terminal classifier as a table, for the CLI.
pub fn hom_table(max: usize) -> Vec<Vec<usize>> {
    (0..=max)
        .map(|m| (0..=max).map(|n| hat_terminal_hom(m, n).len()).collect())
        .collect()
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `C(m+n-1, m)`, the expected hom-set size; `C(-1, 0) = 1` for `m = n = 0`.
pub fn expected_hom_size(m: usize, n: usize) -> usize {
    if m + n == 0 {
        1
    } else {
        binomial(m + n - 1, m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::container::{identity_monad, maybe, writer, MonoidTable};
    use crate::ordinals::monotone_maps;

    #[test]
    fn hom_counts_match_binomials() {
        for m in 0..=4usize {
            for n in 0..=4usize {
                assert_eq!(
                    hat_terminal_hom(m, n).len(),
                    expected_hom_size(m, n),
                    "hom({m},{n})"
                );
                assert_eq!(
                    hat_terminal_hom(m, n).len(),
                    monotone_maps(Ordinal::new(m), Ordinal::new(n)).len()
                );
            }
        }
        // the three named instances
        assert_eq!(hat_terminal_hom(2, 1).len(), 1);
        assert_eq!(hat_terminal_hom(0, 1).len(), 1);
        assert_eq!(hat_terminal_hom(2, 2).len(), 3);
    }

    #[test]
    fn vertical_transport_matches_simplex_composition() {
        // monotone f: a -> b, g: b -> c classify cells whose vertical
        // composite is classified by g∘f
        for a in 0..=3usize {
            for bo in 0..=3usize {
                for c in 0..=3usize {
                    for f in monotone_maps(Ordinal::new(a), Ordinal::new(bo)) {
                        for g in monotone_maps(Ordinal::new(bo), Ordinal::new(c)) {
                            let b = TerminalCat;
                            let cf = hat_terminal_of_monotone(&f);
                            let cg = hat_terminal_of_monotone(&g);
                            let composite = hat_vertical(&b, &cg, &cf).unwrap();
                            let expected = MonotoneMap::compose(&g, &f).unwrap();
                            assert_eq!(monotone_of_hat_terminal(&composite), expected);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn horizontal_transport_matches_ordinal_sum() {
        for m1 in 0..=2usize {
            for n1 in 0..=2usize {
                for m2 in 0..=2usize {
                    for n2 in 0..=2usize {
                        for f in monotone_maps(Ordinal::new(m1), Ordinal::new(n1)) {
                            for g in monotone_maps(Ordinal::new(m2), Ordinal::new(n2)) {
                                let b = TerminalCat;
                                let cf = hat_terminal_of_monotone(&f);
                                let cg = hat_terminal_of_monotone(&g);
                                // f's block first: f inner, g outer
                                let composite = hat_horizontal(&b, &cg, &cf).unwrap();
                                let expected = f.ordinal_sum(&g);
                                assert_eq!(
                                    monotone_of_hat_terminal(&composite),
                                    expected,
                                    "f={f} g={g}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lengths_add_and_identities_are_neutral() {
        let b = TerminalCat;
        let c2 = &hat_terminal_hom(2, 1)[0];
        let c3 = &hat_terminal_hom(3, 2)[0];
        let composite = hat_horizontal(&b, c3, c2).unwrap();
        assert_eq!(composite.src.len(), 5);

        let id0 = HatTwoCell::identity(&b, &HatOneCell::identity(()));
        let kept = hat_horizontal(&b, c2, &id0).unwrap();
        assert_eq!(kept.src.len(), c2.src.len());
        assert_eq!(kept.reindex, c2.reindex);
        let kept = hat_horizontal(&b, &id0, c2).unwrap();
        assert_eq!(kept.reindex, c2.reindex);

        let idc = HatTwoCell::identity(
            &b,
            &HatOneCell {
                source: (),
                path: vec![(); 1],
            },
        );
        let kept = hat_vertical(&b, &idc, c2).unwrap();
        assert_eq!(kept.reindex, c2.reindex);

        // mismatched lengths refuse to compose vertically
        assert!(hat_vertical(&b, c2, c3).is_err());
    }

    #[test]
    fn interchange_in_terminal_hat() {
        let b = TerminalCat;
        for m in 0..=2usize {
            for n in 0..=2usize {
                for k in 0..=2usize {
                    for l in 0..=2usize {
                        for c1 in hat_terminal_hom(m, n) {
                            for c2 in hat_terminal_hom(n, k) {
                                for d1 in hat_terminal_hom(m, n) {
                                    for d2 in hat_terminal_hom(n, k) {
                                        let _ = l;
                                        // (c2∘c1)·(d2∘d1) = (c2·d2)∘(c1·d1)
                                        let lhs = hat_horizontal(
                                            &b,
                                            &hat_vertical(&b, &c2, &c1).unwrap(),
                                            &hat_vertical(&b, &d2, &d1).unwrap(),
                                        )
                                        .unwrap();
                                        let rhs = hat_vertical(
                                            &b,
                                            &hat_horizontal(&b, &c2, &d2).unwrap(),
                                            &hat_horizontal(&b, &c1, &d1).unwrap(),
                                        )
                                        .unwrap();
                                        assert_eq!(lhs.reindex, rhs.reindex);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn hat_of_monad_named_values() {
        let w = writer(&MonoidTable::cyclic(2));
        let h = MonadClassifier::new(w.clone());
        // σ⁰₀ (profile (2)) goes to μ
        let mu = h.apply(&MonotoneMap::generator(GenKind::Sigma, 0, 0).unwrap());
        assert!(ContainerMorphism::equal(&mu, &w.mult).unwrap());
        // the empty map (profile (0)) goes to η
        let eta = h.apply(&MonotoneMap::empty_to(Ordinal::new(1)));
        assert!(ContainerMorphism::equal(&eta, &w.unit).unwrap());
        // profile (3): μ∘(μ·t) = μ∘(t·μ) by associativity
        let tree3 = h.apply(&MonotoneMap::to_point(Ordinal::new(3)));
        let other = ContainerMorphism::vertical(
            &w.mult,
            &ContainerMorphism::whisker_outer(&w.functor, &w.mult),
        )
        .unwrap();
        assert!(ContainerMorphism::equal(&tree3, &other).unwrap());
    }

    #[test]
    fn hat_of_monad_is_functorial() {
        // image of a composite is the vertical composite of images
        let m = maybe();
        let h = MonadClassifier::new(m);
        for a in 0..=3usize {
            for b in 0..=3usize {
                for c in 0..=3usize {
                    for f in monotone_maps(Ordinal::new(a), Ordinal::new(b)) {
                        for g in monotone_maps(Ordinal::new(b), Ordinal::new(c)) {
                            let gf = MonotoneMap::compose(&g, &f).unwrap();
                            let lhs = h.apply(&gf);
                            let rhs =
                                ContainerMorphism::vertical(&h.apply(&g), &h.apply(&f)).unwrap();
                            assert!(
                                ContainerMorphism::equal(&lhs, &rhs).unwrap(),
                                "f={f} g={g}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn tilde_hat_round_trips() {
        for m in [writer(&MonoidTable::cyclic(2)), maybe(), identity_monad()] {
            let h = MonadClassifier::new(m.clone());
            let back = tilde_of_assignment(|f| h.apply(f)).unwrap();
            assert_eq!(back.functor, m.functor);
            assert!(ContainerMorphism::equal(&back.unit, &m.unit).unwrap());
            assert!(ContainerMorphism::equal(&back.mult, &m.mult).unwrap());
        }
    }

    #[test]
    fn hom_table_sizes() {
        let table = hom_table(4);
        assert_eq!(table[2][2], 3);
        assert_eq!(table[0][0], 1);
        let _ = eval_size(&maybe().functor, FinSet::new(1));
    }
}
