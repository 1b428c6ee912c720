//! The augmented simplex category and the augmented interval category.
//!
//! Ordinals are stored by cardinality: `Ordinal { size: n }` is the chain with
//! `n` elements, printed in the shifted `[n-1]` notation only by the
//! pretty-printer. Interval maps are monotone maps that preserve the bottom
//! and top element of nonempty chains; the duality between the two categories
//! is realized by precomposition on hom-sets into the 2-chain.

use crate::error::{Error, Result};
use std::fmt;

/// A finite totally ordered set, kept by cardinality. `size: 0` is the empty
/// ordinal (the shifted notation's `[-1]`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ordinal {
    pub size: usize,
}

impl Ordinal {
    pub fn new(size: usize) -> Self {
        Ordinal { size }
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.size as isize - 1)
    }
}

/// Generator families of the augmented simplex category.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    /// Injective monotone map missing one value.
    Delta,
    /// Surjective monotone map identifying two adjacent values.
    Sigma,
}

/// A weakly increasing map between ordinals, stored pointwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonotoneMap {
    dom: Ordinal,
    cod: Ordinal,
    values: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(dom: Ordinal, cod: Ordinal, values: Vec<usize>) -> Result<Self> {
        if values.len() != dom.size {
            return Err(Error::InvalidParameter(format!(
                "map from {dom} needs {} values, got {}",
                dom.size,
                values.len()
            )));
        }
        for (i, &v) in values.iter().enumerate() {
            if v >= cod.size {
                return Err(Error::IndexOutOfRange(format!(
                    "value {v} at index {i} not below {}",
                    cod.size
                )));
            }
            if i > 0 && values[i - 1] > v {
                return Err(Error::InvalidParameter(format!(
                    "not monotone at index {i}: {} > {v}",
                    values[i - 1]
                )));
            }
        }
        Ok(MonotoneMap { dom, cod, values })
    }

    pub fn identity(n: Ordinal) -> Self {
        MonotoneMap {
            dom: n,
            cod: n,
            values: (0..n.size).collect(),
        }
    }

    /// The unique map from the empty ordinal.
    pub fn empty_to(cod: Ordinal) -> Self {
        MonotoneMap {
            dom: Ordinal::new(0),
            cod,
            values: Vec::new(),
        }
    }

    /// The unique map from a chain onto the singleton.
    pub fn to_point(dom: Ordinal) -> Self {
        MonotoneMap {
            dom,
            cod: Ordinal::new(1),
            values: vec![0; dom.size],
        }
    }

    /// The face/degeneracy generators: `delta(n, k)` is the injective map
    /// missing the value `k` (domain of size `n`, codomain of size `n+1`);
    /// `sigma(n, k)` is the surjective map identifying `k` and `k+1` (domain
    /// of size `n+2`, codomain of size `n+1`).
    pub fn generator(kind: GenKind, n: usize, k: usize) -> Result<Self> {
        if k > n {
            return Err(Error::IndexOutOfRange(format!(
                "generator index k={k} exceeds n={n}"
            )));
        }
        match kind {
            GenKind::Delta => {
                let values = (0..n).map(|i| if i < k { i } else { i + 1 }).collect();
                MonotoneMap::new(Ordinal::new(n), Ordinal::new(n + 1), values)
            }
            GenKind::Sigma => {
                let values = (0..n + 2).map(|i| if i <= k { i } else { i - 1 }).collect();
                MonotoneMap::new(Ordinal::new(n + 2), Ordinal::new(n + 1), values)
            }
        }
    }

    pub fn dom(&self) -> Ordinal {
        self.dom
    }

    pub fn cod(&self) -> Ordinal {
        self.cod
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod && self.values.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `g` after `f`.
    pub fn compose(g: &MonotoneMap, f: &MonotoneMap) -> Result<MonotoneMap> {
        if f.cod != g.dom {
            return Err(Error::DomainMismatch(format!(
                "cannot compose {} -> {} after {} -> {}",
                g.dom, g.cod, f.dom, f.cod
            )));
        }
        let values = f.values.iter().map(|&v| g.values[v]).collect();
        MonotoneMap::new(f.dom, g.cod, values)
    }

    /// Block sum: the first block maps by `self`, the second by `other`
    /// shifted past `self`'s codomain. Strictly associative and unital with
    /// unit the empty map on the empty ordinal.
    pub fn ordinal_sum(&self, other: &MonotoneMap) -> MonotoneMap {
        let mut values = self.values.clone();
        values.extend(other.values.iter().map(|&v| v + self.cod.size));
        MonotoneMap {
            dom: Ordinal::new(self.dom.size + other.dom.size),
            cod: Ordinal::new(self.cod.size + other.cod.size),
            values,
        }
    }

    /// Precomposition action on hom-sets into the 2-chain: a map between
    /// chains of sizes `m -> n` dualizes to an interval map between chains of
    /// sizes `n+1 -> m+1`. Contravariant: `dualize(g∘f) = dualize(f)∘dualize(g)`.
    ///
    /// Maps into the 2-chain are enumerated by their number of top values, so
    /// the dual sends `j` to the number of domain elements whose image lies in
    /// the top `j` values of the codomain.
    pub fn dualize(&self) -> IntervalMap {
        let m = self.dom.size;
        let n = self.cod.size;
        let values = (0..=n)
            .map(|j| (0..m).filter(|&i| self.values[i] + j >= n).count())
            .collect();
        IntervalMap::new(
            MonotoneMap::new(Ordinal::new(n + 1), Ordinal::new(m + 1), values)
                .expect("dual values are monotone by construction"),
        )
        .expect("dual preserves endpoints by construction")
    }

    /// Fiber sizes, one entry per codomain element. The map is recovered as
    /// the ordinal sum of the unique maps onto a point with these fiber sizes.
    pub fn fiber_profile(&self) -> Vec<usize> {
        let mut profile = vec![0usize; self.cod.size];
        for &v in &self.values {
            profile[v] += 1;
        }
        profile
    }
}

impl fmt::Display for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "{}->{}: ({})", self.dom, self.cod, vals.join(","))
    }
}

/// An arrow of the augmented interval category: a monotone map between
/// nonempty chains preserving bottom and top.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntervalMap {
    underlying: MonotoneMap,
}

impl IntervalMap {
    pub fn new(underlying: MonotoneMap) -> Result<Self> {
        if underlying.dom.size == 0 || underlying.cod.size == 0 {
            return Err(Error::InvalidParameter(
                "interval maps need nonempty chains".into(),
            ));
        }
        let first = underlying.values[0];
        let last = *underlying.values.last().unwrap();
        if first != 0 || last != underlying.cod.size - 1 {
            return Err(Error::InvalidParameter(format!(
                "endpoints not preserved: bottom -> {first}, top -> {last} (cod {})",
                underlying.cod
            )));
        }
        Ok(IntervalMap { underlying })
    }

    pub fn identity(n: Ordinal) -> Self {
        IntervalMap {
            underlying: MonotoneMap::identity(n),
        }
    }

    pub fn underlying(&self) -> &MonotoneMap {
        &self.underlying
    }

    pub fn dom(&self) -> Ordinal {
        self.underlying.dom
    }

    pub fn cod(&self) -> Ordinal {
        self.underlying.cod
    }

    pub fn values(&self) -> &[usize] {
        &self.underlying.values
    }

    pub fn apply(&self, i: usize) -> usize {
        self.underlying.values[i]
    }

    pub fn is_identity(&self) -> bool {
        self.underlying.is_identity()
    }

    pub fn compose(g: &IntervalMap, f: &IntervalMap) -> Result<IntervalMap> {
        IntervalMap::new(MonotoneMap::compose(&g.underlying, &f.underlying)?)
    }

    /// The monoidal structure transferred from ordinal sum: chains glue along
    /// the shared endpoint (top of the first = bottom of the second).
    pub fn wedge(&self, other: &IntervalMap) -> IntervalMap {
        let mut values = self.values().to_vec();
        let shift = self.cod().size - 1;
        values.extend(other.values().iter().skip(1).map(|&v| v + shift));
        IntervalMap {
            underlying: MonotoneMap::new(
                Ordinal::new(self.dom().size + other.dom().size - 1),
                Ordinal::new(self.cod().size + other.cod().size - 1),
                values,
            )
            .expect("wedge is monotone by construction"),
        }
    }

    /// Inverse direction of the duality: an interval map between chains of
    /// sizes `n+1 -> m+1` dualizes back to a monotone map of sizes `m -> n`.
    pub fn dualize(&self) -> MonotoneMap {
        let n = self.dom().size - 1;
        let m = self.cod().size - 1;
        let values = (0..m)
            .map(|i| (1..n).filter(|&j| self.apply(j) + i >= m).count())
            .collect();
        MonotoneMap::new(Ordinal::new(m), Ordinal::new(n), values)
            .expect("dual of an interval map is monotone")
    }
}

impl fmt::Display for IntervalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.underlying)
    }
}

/// All monotone maps `dom -> cod`, in lexicographic order of value tuples.
pub fn monotone_maps(dom: Ordinal, cod: Ordinal) -> Vec<MonotoneMap> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(dom.size);
    enumerate_monotone(dom.size, cod.size, 0, &mut current, &mut out);
    out.into_iter()
        .map(|values| MonotoneMap { dom, cod, values })
        .collect()
}

fn enumerate_monotone(
    remaining: usize,
    cod: usize,
    min: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    for v in min..cod {
        current.push(v);
        enumerate_monotone(remaining - 1, cod, v, current, out);
        current.pop();
    }
}

/// All interval maps `dom -> cod`, in lexicographic order of value tuples.
pub fn interval_maps(dom: Ordinal, cod: Ordinal) -> Vec<IntervalMap> {
    if dom.size == 0 || cod.size == 0 {
        return Vec::new();
    }
    if dom.size == 1 {
        return if cod.size == 1 {
            vec![IntervalMap::identity(Ordinal::new(1))]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    let mut current = vec![0usize];
    enumerate_interval(dom.size - 1, cod.size, 0, &mut current, &mut out);
    out.into_iter()
        .filter(|values| *values.last().unwrap() == cod.size - 1)
        .map(|values| {
            IntervalMap::new(MonotoneMap { dom, cod, values }).expect("endpoints enforced")
        })
        .collect()
}

fn enumerate_interval(
    remaining: usize,
    cod: usize,
    min: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    for v in min..cod {
        current.push(v);
        enumerate_interval(remaining - 1, cod, v, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(n: usize) -> Ordinal {
        Ordinal::new(n)
    }

    #[test]
    fn generator_examples() {
        // (delta, 1, 0): the map [0] -> [1] hitting only 1.
        let d10 = MonotoneMap::generator(GenKind::Delta, 1, 0).unwrap();
        assert_eq!(d10.values(), &[1]);
        assert_eq!((d10.dom().size, d10.cod().size), (1, 2));

        // (sigma, 0, 0): the only map onto a singleton from the 2-chain.
        let s00 = MonotoneMap::generator(GenKind::Sigma, 0, 0).unwrap();
        assert_eq!(s00.values(), &[0, 0]);

        // (delta, 2, 2): pointwise enumeration of injective monotone maps
        // [1] -> [2] missing the value 2 leaves exactly (0,1).
        let d22 = MonotoneMap::generator(GenKind::Delta, 2, 2).unwrap();
        let injective_missing_2: Vec<_> = monotone_maps(ord(2), ord(3))
            .into_iter()
            .filter(|m| {
                m.values()[0] != m.values()[1] && m.values().iter().all(|&v| v != 2)
            })
            .collect();
        assert_eq!(injective_missing_2.len(), 1);
        assert_eq!(d22, injective_missing_2[0]);
        assert_eq!(d22.values(), &[0, 1]);

        assert!(MonotoneMap::generator(GenKind::Delta, 1, 2).is_err());
    }

    #[test]
    fn compose_examples() {
        let d10 = MonotoneMap::generator(GenKind::Delta, 1, 0).unwrap();
        let d11 = MonotoneMap::generator(GenKind::Delta, 1, 1).unwrap();
        let s00 = MonotoneMap::generator(GenKind::Sigma, 0, 0).unwrap();
        assert!(MonotoneMap::compose(&s00, &d10).unwrap().is_identity());
        assert!(MonotoneMap::compose(&s00, &d11).unwrap().is_identity());

        let id = MonotoneMap::identity(ord(2));
        let f = MonotoneMap::new(ord(2), ord(2), vec![0, 0]).unwrap();
        assert_eq!(MonotoneMap::compose(&id, &f).unwrap(), f);

        assert!(MonotoneMap::compose(&d10, &d10).is_err());
    }

    #[test]
    fn ordinal_sum_examples() {
        let id0 = MonotoneMap::identity(ord(1));
        assert!(id0.ordinal_sum(&id0).is_identity());

        let d10 = MonotoneMap::generator(GenKind::Delta, 1, 0).unwrap();
        let sum = d10.ordinal_sum(&id0);
        assert_eq!(sum.values(), &[1, 2]);
        assert_eq!((sum.dom().size, sum.cod().size), (2, 3));

        let empty = MonotoneMap::empty_to(ord(1));
        let sum = empty.ordinal_sum(&id0);
        assert_eq!(sum.values(), &[1]);
    }

    #[test]
    fn ordinal_sum_associative_unital() {
        let unit = MonotoneMap::empty_to(ord(0));
        let maps: Vec<_> = monotone_maps(ord(2), ord(2));
        for f in &maps {
            assert_eq!(&unit.ordinal_sum(f), f);
            assert_eq!(&f.ordinal_sum(&unit), f);
            for g in &maps {
                for h in &maps {
                    assert_eq!(
                        f.ordinal_sum(g).ordinal_sum(h),
                        f.ordinal_sum(&g.ordinal_sum(h))
                    );
                }
            }
        }
    }

    #[test]
    fn dualize_examples() {
        let id0 = MonotoneMap::identity(ord(1));
        assert!(id0.dualize().is_identity());
        assert_eq!(id0.dualize().dom().size, 2);

        // Precomposition with delta(1,0) on the three maps {00, 01, 11}.
        let d10 = MonotoneMap::generator(GenKind::Delta, 1, 0).unwrap();
        let dual = d10.dualize();
        assert_eq!(dual.values(), &[0, 1, 1]);
        assert_eq!((dual.dom().size, dual.cod().size), (3, 2));

        assert_eq!(monotone_maps(ord(1), ord(2)).len(), 2);
    }

    #[test]
    fn dualize_contravariant_and_bijective() {
        for m in 0..=5usize {
            for n in 0..=5usize {
                let homs = monotone_maps(ord(m), ord(n));
                let duals: Vec<_> = homs.iter().map(|f| f.dualize()).collect();
                let interval_homs = interval_maps(ord(n + 1), ord(m + 1));
                assert_eq!(duals.len(), interval_homs.len(), "sizes {m} {n}");
                for d in &duals {
                    assert!(interval_homs.contains(d));
                }
                let mut seen = duals.clone();
                seen.sort_by(|a, b| a.values().cmp(b.values()));
                seen.dedup();
                assert_eq!(seen.len(), homs.len(), "dualize not injective at {m} {n}");
                // Round trip back to the simplex side.
                for f in &homs {
                    assert_eq!(&f.dualize().dualize(), f);
                }
            }
        }
        // Contravariance on all composable pairs at small sizes.
        for a in 0..=3usize {
            for b in 0..=3usize {
                for c in 0..=3usize {
                    for f in monotone_maps(ord(a), ord(b)) {
                        for g in monotone_maps(ord(b), ord(c)) {
                            let gf = MonotoneMap::compose(&g, &f).unwrap();
                            let lhs = gf.dualize();
                            let rhs =
                                IntervalMap::compose(&f.dualize(), &g.dualize()).unwrap();
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn wedge_transports_ordinal_sum() {
        for m in 0..=3usize {
            for n in 0..=3usize {
                for f in monotone_maps(ord(m), ord(2)) {
                    for g in monotone_maps(ord(n), ord(2)) {
                        let lhs = f.ordinal_sum(&g).dualize();
                        let rhs = g.dualize().wedge(&f.dualize());
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn fiber_profile_examples() {
        let s00 = MonotoneMap::generator(GenKind::Sigma, 0, 0).unwrap();
        assert_eq!(s00.fiber_profile(), vec![2]);
        assert_eq!(MonotoneMap::identity(ord(2)).fiber_profile(), vec![1, 1]);
        assert_eq!(MonotoneMap::empty_to(ord(1)).fiber_profile(), vec![0]);
    }

    #[test]
    fn fiber_profile_recovers_map() {
        for f in monotone_maps(ord(4), ord(3)) {
            let profile = f.fiber_profile();
            let mut acc = MonotoneMap::empty_to(ord(0));
            for &k in &profile {
                acc = acc.ordinal_sum(&MonotoneMap::to_point(ord(k)));
            }
            assert_eq!(acc, f);
        }
    }

    /// The five standard identity families, checked pointwise for n <= 5.
    #[test]
    fn simplicial_identities() {
        let delta = |n, k| MonotoneMap::generator(GenKind::Delta, n, k).unwrap();
        let sigma = |n, k| MonotoneMap::generator(GenKind::Sigma, n, k).unwrap();
        for n in 0..=5usize {
            // delta(n+1, l) ∘ delta(n, k) = delta(n+1, k) ∘ delta(n, l-1), k < l
            for l in 0..=n + 1 {
                for k in 0..l {
                    let lhs = MonotoneMap::compose(&delta(n + 1, l), &delta(n, k)).unwrap();
                    let rhs = MonotoneMap::compose(&delta(n + 1, k), &delta(n, l - 1)).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
            // sigma(n, l) ∘ sigma(n+1, k) = sigma(n, k) ∘ sigma(n+1, l+1), k <= l
            for l in 0..=n {
                for k in 0..=l {
                    let lhs = MonotoneMap::compose(&sigma(n, l), &sigma(n + 1, k)).unwrap();
                    let rhs = MonotoneMap::compose(&sigma(n, k), &sigma(n + 1, l + 1)).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
            // mixed: sigma(n, l) ∘ delta(n+1, k), three cases
            for l in 0..=n {
                for k in 0..=n + 1 {
                    let lhs = MonotoneMap::compose(&sigma(n, l), &delta(n + 1, k)).unwrap();
                    if k < l {
                        let rhs =
                            MonotoneMap::compose(&delta(n, k), &sigma(n - 1, l - 1)).unwrap();
                        assert_eq!(lhs, rhs, "case k<l n={n} k={k} l={l}");
                    } else if k == l || k == l + 1 {
                        assert!(lhs.is_identity(), "case id n={n} k={k} l={l}");
                    } else {
                        let rhs = MonotoneMap::compose(&delta(n, k - 1), &sigma(n - 1, l)).unwrap();
                        assert_eq!(lhs, rhs, "case k>l+1 n={n} k={k} l={l}");
                    }
                }
            }
        }
    }

    #[test]
    fn display_uses_shifted_notation() {
        let s00 = MonotoneMap::generator(GenKind::Sigma, 1, 0).unwrap();
        assert_eq!(s00.to_string(), "[2]->[1]: (0,0,1)");
        assert_eq!(MonotoneMap::empty_to(ord(1)).to_string(), "[-1]->[0]: ()");
    }
}
