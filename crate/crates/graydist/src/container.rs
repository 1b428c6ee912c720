//! Finite polynomial (container) endofunctors of finite sets.
//!
//! A container is a word of atoms, each atom a list of position counts per
//! shape; the empty word is the identity endofunctor and word concatenation
//! is functor composition, so composition of 1-cells is strictly associative
//! and unital at the data level. The shapes and positions of a word are
//! obtained by a fixed right-nested flattening, and `split_*`/`join_*`
//! convert between the flattening of a concatenation and its two halves;
//! every structural operation (whiskering, horizontal composition, the
//! monad builders) goes through these converters, never through ad hoc
//! index arithmetic.
//!
//! Natural transformations are stored in shape/position form: a shape map
//! plus one contravariant position map per source shape. Equality is
//! componentwise table comparison, which for polynomial functors on sets is
//! sound and complete; the pointwise evaluation oracle at small sets is kept
//! alongside as an independent cross-check.

use crate::error::{Error, Result};
use crate::report::CheckReport;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A finite set; elements are the indices `0..size`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FinSet {
    pub size: usize,
}

impl FinSet {
    pub fn new(size: usize) -> Self {
        FinSet { size }
    }
}

/// A total function between finite sets, stored pointwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinFunction {
    dom: FinSet,
    cod: FinSet,
    values: Vec<usize>,
}

impl FinFunction {
    pub fn new(dom: FinSet, cod: FinSet, values: Vec<usize>) -> Result<Self> {
        if values.len() != dom.size {
            return Err(Error::InvalidParameter(format!(
                "function needs {} values, got {}",
                dom.size,
                values.len()
            )));
        }
        if let Some(&v) = values.iter().find(|&&v| v >= cod.size) {
            return Err(Error::IndexOutOfRange(format!(
                "value {v} not below {}",
                cod.size
            )));
        }
        Ok(FinFunction { dom, cod, values })
    }

    pub fn identity(s: FinSet) -> Self {
        FinFunction {
            dom: s,
            cod: s,
            values: (0..s.size).collect(),
        }
    }

    pub fn dom(&self) -> FinSet {
        self.dom
    }

    pub fn cod(&self) -> FinSet {
        self.cod
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, x: usize) -> usize {
        self.values[x]
    }

    /// `g` after `f`.
    pub fn compose(g: &FinFunction, f: &FinFunction) -> Result<FinFunction> {
        if f.cod != g.dom {
            return Err(Error::DomainMismatch(format!(
                "cannot compose through {} vs {}",
                f.cod.size, g.dom.size
            )));
        }
        Ok(FinFunction {
            dom: f.dom,
            cod: g.cod,
            values: f.values.iter().map(|&v| g.values[v]).collect(),
        })
    }
}

/// All functions `dom -> cod` in lexicographic order (first argument most
/// significant).
pub fn all_functions(dom: FinSet, cod: FinSet) -> Vec<FinFunction> {
    let mut out = Vec::new();
    let total = pow(cod.size, dom.size);
    for code in 0..total {
        let values = digits(code, cod.size, dom.size);
        out.push(FinFunction {
            dom,
            cod,
            values,
        });
    }
    out
}

/// Code of a function under the `all_functions` order.
pub fn function_code(f: &FinFunction) -> usize {
    let mut code = 0;
    for &v in &f.values {
        code = code * f.cod.size + v;
    }
    code
}

fn pow(base: usize, exp: usize) -> usize {
    // 0^0 = 1: the empty assignment.
    let mut acc = 1usize;
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

fn digits(mut code: usize, base: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0usize; len];
    for i in (0..len).rev() {
        if base > 0 {
            out[i] = code % base;
            code /= base;
        }
    }
    out
}

fn undigits(ds: &[usize], base: usize) -> usize {
    let mut code = 0;
    for &d in ds {
        code = code * base + d;
    }
    code
}

/// A finite monoid given by its multiplication table. Unit laws and
/// associativity are enforced at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidTable {
    pub name: String,
    pub carrier: FinSet,
    pub unit: usize,
    table: Vec<Vec<usize>>,
}

impl MonoidTable {
    pub fn new(name: impl Into<String>, size: usize, unit: usize, table: Vec<Vec<usize>>) -> Result<Self> {
        let name = name.into();
        if unit >= size {
            return Err(Error::InvalidParameter(format!("unit {unit} not below {size}")));
        }
        if table.len() != size || table.iter().any(|row| row.len() != size) {
            return Err(Error::InvalidParameter(format!("table must be {size}x{size}")));
        }
        for row in &table {
            if let Some(&v) = row.iter().find(|&&v| v >= size) {
                return Err(Error::IndexOutOfRange(format!("entry {v} not below {size}")));
            }
        }
        for a in 0..size {
            if table[unit][a] != a || table[a][unit] != a {
                return Err(Error::InvalidParameter(format!("unit laws fail at {a}")));
            }
        }
        for a in 0..size {
            for b in 0..size {
                for c in 0..size {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidParameter(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(MonoidTable {
            name,
            carrier: FinSet::new(size),
            unit,
            table,
        })
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        MonoidTable::new(format!("z{n}"), n, 0, table).expect("cyclic tables are monoids")
    }

    /// The two-element meet monoid: 1 is the unit, 0 absorbs.
    pub fn bool_and() -> Self {
        MonoidTable::new("bool-and", 2, 1, vec![vec![0, 0], vec![0, 1]])
            .expect("AND is a monoid")
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn size(&self) -> usize {
        self.carrier.size
    }
}

/// One layer of a container word: position counts per shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FlatPoly {
    pos: Vec<usize>,
}

impl FlatPoly {
    pub fn new(pos: Vec<usize>) -> Self {
        FlatPoly { pos }
    }

    /// The identity polynomial: one shape, one position.
    pub fn one() -> Self {
        FlatPoly { pos: vec![1] }
    }

    pub fn shape_count(&self) -> usize {
        self.pos.len()
    }

    pub fn pos_count(&self, shape: usize) -> usize {
        self.pos[shape]
    }
}

/// Shape/position codecs for the pairing of an outer layer with an already
/// flattened inner polynomial. Shapes of the pair are `(s, g)` with `s` an
/// outer shape and `g` an assignment of inner shapes to the positions of
/// `s`, ordered by `s` then lexicographically by `g`; positions are `(p, q)`
/// pairs ordered by blocks.
fn pair_flat(outer: &FlatPoly, inner: &FlatPoly) -> FlatPoly {
    let mut pos = Vec::new();
    for s in 0..outer.shape_count() {
        let n = outer.pos_count(s);
        for code in 0..pow(inner.shape_count(), n) {
            let g = digits(code, inner.shape_count(), n);
            pos.push(g.iter().map(|&t| inner.pos_count(t)).sum());
        }
    }
    FlatPoly { pos }
}

fn pair_shape_offset(outer: &FlatPoly, inner: &FlatPoly, s: usize) -> usize {
    (0..s)
        .map(|s2| pow(inner.shape_count(), outer.pos_count(s2)))
        .sum()
}

fn pair_encode_shape(outer: &FlatPoly, inner: &FlatPoly, s: usize, g: &[usize]) -> usize {
    pair_shape_offset(outer, inner, s) + undigits(g, inner.shape_count())
}

fn pair_decode_shape(outer: &FlatPoly, inner: &FlatPoly, mut code: usize) -> (usize, Vec<usize>) {
    for s in 0..outer.shape_count() {
        let block = pow(inner.shape_count(), outer.pos_count(s));
        if code < block {
            return (s, digits(code, inner.shape_count(), outer.pos_count(s)));
        }
        code -= block;
    }
    panic!("shape code out of range");
}

fn pair_encode_pos(inner: &FlatPoly, g: &[usize], p: usize, q: usize) -> usize {
    g[..p].iter().map(|&t| inner.pos_count(t)).sum::<usize>() + q
}

fn pair_decode_pos(inner: &FlatPoly, g: &[usize], mut code: usize) -> (usize, usize) {
    for (p, &t) in g.iter().enumerate() {
        let block = inner.pos_count(t);
        if code < block {
            return (p, code);
        }
        code -= block;
    }
    panic!("position code out of range");
}

/// A finite polynomial endofunctor, stored as a word of layers with the
/// outermost layer first. The empty word is the identity functor and
/// `compose` is word concatenation. The right-nested flattening of the word
/// is cached at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Container {
    atoms: Vec<FlatPoly>,
    flat: FlatPoly,
}

impl Container {
    fn from_atoms(atoms: Vec<FlatPoly>) -> Self {
        let mut flat = FlatPoly::one();
        for atom in atoms.iter().rev() {
            flat = pair_flat(atom, &flat);
        }
        Container { atoms, flat }
    }

    pub fn identity() -> Self {
        Container::from_atoms(Vec::new())
    }

    /// A one-layer container from position counts per shape.
    pub fn atom(pos: Vec<usize>) -> Self {
        Container::from_atoms(vec![FlatPoly::new(pos)])
    }

    pub fn atoms(&self) -> &[FlatPoly] {
        &self.atoms
    }

    pub fn depth(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_identity(&self) -> bool {
        self.atoms.is_empty()
    }

    /// Horizontal composition of 1-cells: `self` outermost.
    pub fn compose(&self, inner: &Container) -> Container {
        let mut atoms = self.atoms.clone();
        atoms.extend(inner.atoms.iter().cloned());
        Container::from_atoms(atoms)
    }

    pub fn prefix(&self, cut: usize) -> Container {
        Container::from_atoms(self.atoms[..cut].to_vec())
    }

    pub fn suffix(&self, cut: usize) -> Container {
        Container::from_atoms(self.atoms[cut..].to_vec())
    }

    /// Right-nested flattening of the word.
    pub fn flat(&self) -> &FlatPoly {
        &self.flat
    }

    pub fn shape_count(&self) -> usize {
        self.flat.shape_count()
    }

    pub fn pos_count(&self, shape: usize) -> usize {
        self.flat.pos_count(shape)
    }

    /// Decompose a shape of the whole word at `cut` into a shape of the
    /// prefix and one suffix shape per prefix position.
    pub fn split_shape(&self, cut: usize, shape: usize) -> (usize, Vec<usize>) {
        if cut == 0 {
            return (0, vec![shape]);
        }
        let tail = self.suffix(1);
        let (s, g) = pair_decode_shape(&self.atoms[0], tail.flat(), shape);
        let mut prefix_assign = Vec::with_capacity(g.len());
        let mut suffix_shapes = Vec::new();
        for &gp in &g {
            let (u, inner) = tail.split_shape(cut - 1, gp);
            prefix_assign.push(u);
            suffix_shapes.extend(inner);
        }
        let prefix_tail = tail.prefix(cut - 1);
        let prefix_shape =
            pair_encode_shape(&self.atoms[0], prefix_tail.flat(), s, &prefix_assign);
        (prefix_shape, suffix_shapes)
    }

    /// Inverse of [`Container::split_shape`].
    pub fn join_shape(&self, cut: usize, prefix_shape: usize, suffix_shapes: &[usize]) -> usize {
        if cut == 0 {
            debug_assert_eq!(prefix_shape, 0);
            debug_assert_eq!(suffix_shapes.len(), 1);
            return suffix_shapes[0];
        }
        let tail = self.suffix(1);
        let prefix_tail = tail.prefix(cut - 1);
        let (s, u) = pair_decode_shape(&self.atoms[0], prefix_tail.flat(), prefix_shape);
        let mut g = Vec::with_capacity(u.len());
        let mut offset = 0;
        for &up in &u {
            let cnt = prefix_tail.flat().pos_count(up);
            g.push(tail.join_shape(cut - 1, up, &suffix_shapes[offset..offset + cnt]));
            offset += cnt;
        }
        pair_encode_shape(&self.atoms[0], tail.flat(), s, &g)
    }

    /// Decompose a position of `shape` at `cut` into a prefix position and a
    /// position of the suffix shape sitting there.
    pub fn split_pos(&self, cut: usize, shape: usize, pos: usize) -> (usize, usize) {
        if cut == 0 {
            return (0, pos);
        }
        let tail = self.suffix(1);
        let (_, g) = pair_decode_shape(&self.atoms[0], tail.flat(), shape);
        let (p, q) = pair_decode_pos(tail.flat(), &g, pos);
        let (q1, q2) = tail.split_pos(cut - 1, g[p], q);
        let prefix_tail = tail.prefix(cut - 1);
        let mut prefix_pos = q1;
        for gp in &g[..p] {
            let (u, _) = tail.split_shape(cut - 1, *gp);
            prefix_pos += prefix_tail.flat().pos_count(u);
        }
        (prefix_pos, q2)
    }

    /// Inverse of [`Container::split_pos`].
    pub fn join_pos(&self, cut: usize, shape: usize, prefix_pos: usize, suffix_pos: usize) -> usize {
        if cut == 0 {
            debug_assert_eq!(prefix_pos, 0);
            return suffix_pos;
        }
        let tail = self.suffix(1);
        let (_, g) = pair_decode_shape(&self.atoms[0], tail.flat(), shape);
        let prefix_tail = tail.prefix(cut - 1);
        let mut rest = prefix_pos;
        for (p, &gp) in g.iter().enumerate() {
            let (u, _) = tail.split_shape(cut - 1, gp);
            let block = prefix_tail.flat().pos_count(u);
            if rest < block {
                let q = tail.join_pos(cut - 1, gp, rest, suffix_pos);
                return pair_encode_pos(tail.flat(), &g, p, q);
            }
            rest -= block;
        }
        panic!("prefix position out of range");
    }

    /// Preorder listing of the atom shapes of a flattened shape; used in
    /// counterexample witnesses.
    pub fn render_shape(&self, shape: usize) -> String {
        let mut acc = Vec::new();
        self.collect_shape(shape, &mut acc);
        format!("({})", acc.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
    }

    fn collect_shape(&self, shape: usize, acc: &mut Vec<usize>) {
        if self.atoms.is_empty() {
            return;
        }
        let tail = self.suffix(1);
        let (s, g) = pair_decode_shape(&self.atoms[0], &tail.flat(), shape);
        acc.push(s);
        for &gp in &g {
            tail.collect_shape(gp, acc);
        }
    }
}

impl fmt::Display for Container {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.atoms.is_empty() {
            return write!(f, "Id");
        }
        let parts: Vec<String> = self
            .atoms
            .iter()
            .map(|a| {
                format!(
                    "{{{}}}",
                    a.pos.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
                )
            })
            .collect();
        write!(f, "{}", parts.join("∘"))
    }
}

/// A natural transformation between containers: a shape map and, per source
/// shape, a contravariant position map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContainerMorphism {
    src: Container,
    tgt: Container,
    shape_map: Vec<usize>,
    pos_maps: Vec<Vec<usize>>,
}

impl ContainerMorphism {
    pub fn new(
        src: Container,
        tgt: Container,
        shape_map: Vec<usize>,
        pos_maps: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let sf = src.flat();
        let tf = tgt.flat();
        if shape_map.len() != sf.shape_count() || pos_maps.len() != sf.shape_count() {
            return Err(Error::InvalidParameter(format!(
                "expected {} shape entries, got {}/{}",
                sf.shape_count(),
                shape_map.len(),
                pos_maps.len()
            )));
        }
        for (s, (&t, pm)) in shape_map.iter().zip(&pos_maps).enumerate() {
            if t >= tf.shape_count() {
                return Err(Error::IndexOutOfRange(format!("target shape {t} at {s}")));
            }
            if pm.len() != tf.pos_count(t) {
                return Err(Error::InvalidParameter(format!(
                    "shape {s}: position map needs {} entries, got {}",
                    tf.pos_count(t),
                    pm.len()
                )));
            }
            if let Some(&p) = pm.iter().find(|&&p| p >= sf.pos_count(s)) {
                return Err(Error::IndexOutOfRange(format!(
                    "shape {s}: source position {p} not below {}",
                    sf.pos_count(s)
                )));
            }
        }
        Ok(ContainerMorphism {
            src,
            tgt,
            shape_map,
            pos_maps,
        })
    }

    pub fn identity(c: &Container) -> Self {
        let flat = c.flat();
        ContainerMorphism {
            src: c.clone(),
            tgt: c.clone(),
            shape_map: (0..flat.shape_count()).collect(),
            pos_maps: (0..flat.shape_count())
                .map(|s| (0..flat.pos_count(s)).collect())
                .collect(),
        }
    }

    pub fn src(&self) -> &Container {
        &self.src
    }

    pub fn tgt(&self) -> &Container {
        &self.tgt
    }

    pub fn shape_map(&self) -> &[usize] {
        &self.shape_map
    }

    pub fn pos_maps(&self) -> &[Vec<usize>] {
        &self.pos_maps
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.tgt
            && self.shape_map.iter().enumerate().all(|(s, &t)| s == t)
            && self
                .pos_maps
                .iter()
                .all(|pm| pm.iter().enumerate().all(|(q, &p)| q == p))
    }

    /// Vertical composition: `later` after `earlier`.
    pub fn vertical(later: &ContainerMorphism, earlier: &ContainerMorphism) -> Result<Self> {
        if earlier.tgt != later.src {
            return Err(Error::BoundaryMismatch(format!(
                "vertical: {} vs {}",
                earlier.tgt, later.src
            )));
        }
        let shape_map = earlier
            .shape_map
            .iter()
            .map(|&m| later.shape_map[m])
            .collect();
        let pos_maps = earlier
            .shape_map
            .iter()
            .enumerate()
            .map(|(s, &m)| {
                later.pos_maps[m]
                    .iter()
                    .map(|&r| earlier.pos_maps[s][r])
                    .collect()
            })
            .collect();
        Ok(ContainerMorphism {
            src: earlier.src.clone(),
            tgt: later.tgt.clone(),
            shape_map,
            pos_maps,
        })
    }

    /// Horizontal composition: `outer · inner` on concatenated words.
    pub fn horizontal(outer: &ContainerMorphism, inner: &ContainerMorphism) -> Result<Self> {
        let src = outer.src.compose(&inner.src);
        let tgt = outer.tgt.compose(&inner.tgt);
        let cut_src = outer.src.depth();
        let cut_tgt = outer.tgt.depth();
        let outer_tgt_flat = outer.tgt.flat();
        let mut shape_map = Vec::with_capacity(src.shape_count());
        let mut pos_maps = Vec::with_capacity(src.shape_count());
        for c in 0..src.shape_count() {
            let (s1, asg) = src.split_shape(cut_src, c);
            let s1t = outer.shape_map[s1];
            let asg_t: Vec<usize> = (0..outer_tgt_flat.pos_count(s1t))
                .map(|pt| inner.shape_map[asg[outer.pos_maps[s1][pt]]])
                .collect();
            let ct = tgt.join_shape(cut_tgt, s1t, &asg_t);
            let pm: Vec<usize> = (0..tgt.pos_count(ct))
                .map(|rt| {
                    let (pt, qt) = tgt.split_pos(cut_tgt, ct, rt);
                    let p = outer.pos_maps[s1][pt];
                    let q = inner.pos_maps[asg[p]][qt];
                    src.join_pos(cut_src, c, p, q)
                })
                .collect();
            shape_map.push(ct);
            pos_maps.push(pm);
        }
        Ok(ContainerMorphism {
            src,
            tgt,
            shape_map,
            pos_maps,
        })
    }

    /// Whisker a container on the outside: `f · self`.
    pub fn whisker_outer(f: &Container, m: &ContainerMorphism) -> Self {
        ContainerMorphism::horizontal(&ContainerMorphism::identity(f), m)
            .expect("whiskering cannot fail")
    }

    /// Whisker a container on the inside: `self · f`.
    pub fn whisker_inner(m: &ContainerMorphism, f: &Container) -> Self {
        ContainerMorphism::horizontal(m, &ContainerMorphism::identity(f))
            .expect("whiskering cannot fail")
    }

    /// Decidable 2-cell equality; errors when boundaries differ.
    pub fn equal(a: &ContainerMorphism, b: &ContainerMorphism) -> Result<bool> {
        if a.src != b.src || a.tgt != b.tgt {
            return Err(Error::BoundaryMismatch(format!(
                "comparing {} => {} with {} => {}",
                a.src, a.tgt, b.src, b.tgt
            )));
        }
        Ok(a.shape_map == b.shape_map && a.pos_maps == b.pos_maps)
    }

    /// First shape (plus position detail) where the two tables differ.
    pub fn first_difference(a: &ContainerMorphism, b: &ContainerMorphism) -> Option<String> {
        for s in 0..a.shape_map.len() {
            if a.shape_map[s] != b.shape_map[s] {
                return Some(format!(
                    "shape {} ↦ {} vs {}",
                    a.src.render_shape(s),
                    a.tgt.render_shape(a.shape_map[s]),
                    b.tgt.render_shape(b.shape_map[s])
                ));
            }
            if a.pos_maps[s] != b.pos_maps[s] {
                return Some(format!(
                    "shape {}: position maps {:?} vs {:?}",
                    a.src.render_shape(s),
                    a.pos_maps[s],
                    b.pos_maps[s]
                ));
            }
        }
        None
    }
}

impl fmt::Display for ContainerMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} => {} on {} shapes",
            self.src,
            self.tgt,
            self.shape_map.len()
        )
    }
}

// ---------------------------------------------------------------------------
// Pointwise oracle
// ---------------------------------------------------------------------------

/// `|F(X)|` together with element codecs: an element is a shape plus one
/// `X`-value per position, encoded shape-major then lexicographically.
pub fn eval_size(c: &Container, x: FinSet) -> usize {
    let flat = c.flat();
    (0..flat.shape_count()).map(|s| pow(x.size, flat.pos_count(s))).sum()
}

pub fn eval_on_set(c: &Container, x: FinSet) -> FinSet {
    FinSet::new(eval_size(c, x))
}

pub fn elem_encode(c: &Container, x: FinSet, shape: usize, vals: &[usize]) -> usize {
    let flat = c.flat();
    let offset: usize = (0..shape).map(|s| pow(x.size, flat.pos_count(s))).sum();
    offset + undigits(vals, x.size)
}

pub fn elem_decode(c: &Container, x: FinSet, mut code: usize) -> (usize, Vec<usize>) {
    let flat = c.flat();
    for s in 0..flat.shape_count() {
        let block = pow(x.size, flat.pos_count(s));
        if code < block {
            return (s, digits(code, x.size, flat.pos_count(s)));
        }
        code -= block;
    }
    panic!("element code out of range");
}

/// The functor's action on a function: `F(f): F(X) -> F(Y)`.
pub fn apply_container(c: &Container, f: &FinFunction) -> FinFunction {
    let dom = eval_on_set(c, f.dom());
    let cod = eval_on_set(c, f.cod());
    let values = (0..dom.size)
        .map(|e| {
            let (s, vals) = elem_decode(c, f.dom(), e);
            let mapped: Vec<usize> = vals.iter().map(|&v| f.apply(v)).collect();
            elem_encode(c, f.cod(), s, &mapped)
        })
        .collect();
    FinFunction::new(dom, cod, values).expect("functor action is total")
}

/// The transformation's component at `X` as a concrete function.
pub fn eval_morphism_on_set(m: &ContainerMorphism, x: FinSet) -> FinFunction {
    let dom = eval_on_set(m.src(), x);
    let cod = eval_on_set(m.tgt(), x);
    let values = (0..dom.size)
        .map(|e| {
            let (s, vals) = elem_decode(m.src(), x, e);
            let t = m.shape_map()[s];
            let mapped: Vec<usize> = m.pos_maps()[s].iter().map(|&p| vals[p]).collect();
            elem_encode(m.tgt(), x, t, &mapped)
        })
        .collect();
    FinFunction::new(dom, cod, values).expect("component is total")
}

/// Pointwise comparison at one set size.
pub fn pointwise_equal(a: &ContainerMorphism, b: &ContainerMorphism, x: FinSet) -> Result<bool> {
    if a.src() != b.src() || a.tgt() != b.tgt() {
        return Err(Error::BoundaryMismatch("pointwise comparison".into()));
    }
    Ok(eval_morphism_on_set(a, x) == eval_morphism_on_set(b, x))
}

/// Set size at which pointwise equality is complete for morphisms out of
/// `src`: one more than the largest position count.
pub fn completeness_size(src: &Container) -> usize {
    let flat = src.flat();
    (0..flat.shape_count())
        .map(|s| flat.pos_count(s))
        .max()
        .unwrap_or(0)
        + 1
}

/// Naturality square for the component family of `m` at the function `f`.
pub fn naturality_holds(m: &ContainerMorphism, f: &FinFunction) -> bool {
    let lhs = FinFunction::compose(&apply_container(m.tgt(), f), &eval_morphism_on_set(m, f.dom()))
        .expect("composable");
    let rhs = FinFunction::compose(&eval_morphism_on_set(m, f.cod()), &apply_container(m.src(), f))
        .expect("composable");
    lhs == rhs
}

/// Canonical rebracketing `(F∘G)(X) -> F(G(X))`; returns true when it is a
/// bijection, which is the exact sense in which composite evaluation agrees
/// with pointwise nesting.
pub fn compose_eval_agrees(outer: &Container, inner: &Container, x: FinSet) -> bool {
    let whole = outer.compose(inner);
    let cut = outer.depth();
    let gx = eval_on_set(inner, x);
    let lhs = eval_size(&whole, x);
    let rhs = eval_size(outer, gx);
    if lhs != rhs {
        return false;
    }
    let mut seen = vec![false; rhs];
    for e in 0..lhs {
        let (c, vals) = elem_decode(&whole, x, e);
        let (s1, asg) = whole.split_shape(cut, c);
        let inner_elems: Vec<usize> = (0..outer.pos_count(s1))
            .map(|p| {
                let block: Vec<usize> = (0..inner.pos_count(asg[p]))
                    .map(|q| vals[whole.join_pos(cut, c, p, q)])
                    .collect();
                elem_encode(inner, x, asg[p], &block)
            })
            .collect();
        let code = elem_encode(outer, gx, s1, &inner_elems);
        if seen[code] {
            return false;
        }
        seen[code] = true;
    }
    true
}

// ---------------------------------------------------------------------------
// Monads
// ---------------------------------------------------------------------------

/// A container together with candidate unit and multiplication. The monad
/// laws are a checkable property, not a constructor invariant; only the
/// boundaries are enforced here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonadData {
    pub name: String,
    pub functor: Container,
    pub unit: ContainerMorphism,
    pub mult: ContainerMorphism,
}

impl MonadData {
    pub fn new(
        name: impl Into<String>,
        functor: Container,
        unit: ContainerMorphism,
        mult: ContainerMorphism,
    ) -> Result<Self> {
        if unit.src() != &Container::identity() || unit.tgt() != &functor {
            return Err(Error::BoundaryMismatch("unit must go Id => functor".into()));
        }
        let squared = functor.compose(&functor);
        if mult.src() != &squared || mult.tgt() != &functor {
            return Err(Error::BoundaryMismatch(
                "mult must go functor∘functor => functor".into(),
            ));
        }
        Ok(MonadData {
            name: name.into(),
            functor,
            unit,
            mult,
        })
    }
}

/// Builtin monad selection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Builtin {
    Writer(MonoidTable),
    Either(FinSet),
    Maybe,
    Reader(FinSet),
    State(FinSet),
    Identity,
}

pub fn builtin(kind: Builtin) -> MonadData {
    match kind {
        Builtin::Writer(m) => writer(&m),
        Builtin::Either(a) => either(a),
        Builtin::Maybe => maybe(),
        Builtin::Reader(r) => reader(r),
        Builtin::State(s) => state(s),
        Builtin::Identity => identity_monad(),
    }
}

pub fn identity_monad() -> MonadData {
    let c = Container::identity();
    MonadData::new(
        "identity",
        c.clone(),
        ContainerMorphism::identity(&c),
        ContainerMorphism::identity(&c),
    )
    .expect("identity monad is well-bounded")
}

/// Writer over a monoid: shapes are monoid elements, one position each.
pub fn writer(m: &MonoidTable) -> MonadData {
    writer_with_table(
        format!("writer({})", m.name),
        m.size(),
        m.unit,
        |a, b| m.mul(a, b),
    )
    .expect("valid monoid gives well-bounded writer")
}

/// Writer-shaped monad from a raw multiplication table; the table is not
/// required to satisfy the monoid laws, so the result may fail check_monad.
pub fn writer_raw(
    name: impl Into<String>,
    size: usize,
    unit: usize,
    table: &[Vec<usize>],
) -> Result<MonadData> {
    if unit >= size || table.len() != size {
        return Err(Error::InvalidParameter("bad raw writer data".into()));
    }
    for row in table {
        if row.len() != size || row.iter().any(|&v| v >= size) {
            return Err(Error::InvalidParameter("bad raw writer table".into()));
        }
    }
    writer_with_table(name, size, unit, |a, b| table[a][b])
}

fn writer_with_table(
    name: impl Into<String>,
    size: usize,
    unit: usize,
    mul: impl Fn(usize, usize) -> usize,
) -> Result<MonadData> {
    let functor = Container::atom(vec![1; size]);
    let unit_m = ContainerMorphism::new(
        Container::identity(),
        functor.clone(),
        vec![unit],
        vec![vec![0]],
    )?;
    let squared = functor.compose(&functor);
    let mut shape_map = Vec::new();
    let mut pos_maps = Vec::new();
    for c in 0..squared.shape_count() {
        let (m1, g) = pair_decode_shape(&functor.atoms[0], &functor.flat(), c);
        shape_map.push(mul(m1, g[0]));
        pos_maps.push(vec![0]);
    }
    let mult = ContainerMorphism::new(squared, functor.clone(), shape_map, pos_maps)?;
    MonadData::new(name, functor, unit_m, mult)
}

/// Either over a finite set: one constant shape per element, plus one
/// one-position shape (the last code) for the unit side.
pub fn either(a: FinSet) -> MonadData {
    let n = a.size;
    let mut pos = vec![0; n];
    pos.push(1);
    let functor = Container::atom(pos);
    let unit = ContainerMorphism::new(
        Container::identity(),
        functor.clone(),
        vec![n],
        vec![vec![0]],
    )
    .expect("unit bounds");
    let squared = functor.compose(&functor);
    let mut shape_map = Vec::new();
    let mut pos_maps = Vec::new();
    for c in 0..squared.shape_count() {
        let (s, g) = pair_decode_shape(&functor.atoms[0], &functor.flat(), c);
        if s < n {
            shape_map.push(s);
            pos_maps.push(Vec::new());
        } else if g[0] < n {
            shape_map.push(g[0]);
            pos_maps.push(Vec::new());
        } else {
            shape_map.push(n);
            pos_maps.push(vec![0]);
        }
    }
    let mult =
        ContainerMorphism::new(squared, functor.clone(), shape_map, pos_maps).expect("mult bounds");
    MonadData::new(format!("either({n})"), functor, unit, mult).expect("either is well-bounded")
}

pub fn maybe() -> MonadData {
    let mut m = either(FinSet::new(1));
    m.name = "maybe".into();
    m
}

/// Reader over a finite set: one shape, `|R|` positions.
pub fn reader(r: FinSet) -> MonadData {
    let n = r.size;
    let functor = Container::atom(vec![n]);
    let unit = ContainerMorphism::new(
        Container::identity(),
        functor.clone(),
        vec![0],
        vec![vec![0; n]],
    )
    .expect("unit bounds");
    let squared = functor.compose(&functor);
    let shape_map = vec![0; squared.shape_count()];
    let pos_maps = (0..squared.shape_count())
        .map(|c| (0..n).map(|p| squared.join_pos(1, c, p, p)).collect())
        .collect();
    let mult =
        ContainerMorphism::new(squared, functor.clone(), shape_map, pos_maps).expect("mult bounds");
    MonadData::new(format!("reader({n})"), functor, unit, mult).expect("reader is well-bounded")
}

/// State over a finite set: shapes are the functions `S -> S` (the state
/// transition), positions are the input states.
pub fn state(s: FinSet) -> MonadData {
    let n = s.size;
    let shapes = pow(n, n);
    let functor = Container::atom(vec![n; shapes]);
    let id_code = undigits(&(0..n).collect::<Vec<_>>(), n);
    let unit = ContainerMorphism::new(
        Container::identity(),
        functor.clone(),
        vec![id_code],
        vec![vec![0; n]],
    )
    .expect("unit bounds");
    let squared = functor.compose(&functor);
    let mut shape_map = Vec::new();
    let mut pos_maps = Vec::new();
    for c in 0..squared.shape_count() {
        let (f1c, g) = pair_decode_shape(&functor.atoms[0], &functor.flat(), c);
        let f1 = digits(f1c, n, n);
        let h: Vec<usize> = (0..n)
            .map(|st| {
                let inner = digits(g[st], n, n);
                inner[f1[st]]
            })
            .collect();
        shape_map.push(undigits(&h, n));
        pos_maps.push(
            (0..n)
                .map(|st| squared.join_pos(1, c, st, f1[st]))
                .collect(),
        );
    }
    let mult =
        ContainerMorphism::new(squared, functor.clone(), shape_map, pos_maps).expect("mult bounds");
    MonadData::new(format!("state({n})"), functor, unit, mult).expect("state is well-bounded")
}

/// The three monad laws by container equality. On failure the witness holds
/// a shape-level counterexample plus a pointwise one from the oracle.
pub fn check_monad(m: &MonadData) -> CheckReport {
    let mut report = CheckReport::new(format!("monad({})", m.name));
    let t = &m.functor;
    let idm = ContainerMorphism::identity(t);
    let left = ContainerMorphism::vertical(
        &m.mult,
        &ContainerMorphism::horizontal(&m.unit, &idm).expect("whisker"),
    )
    .expect("left unit boundary");
    report.record("monad.unit-left", law_witness(&left, &idm));
    let right = ContainerMorphism::vertical(
        &m.mult,
        &ContainerMorphism::horizontal(&idm, &m.unit).expect("whisker"),
    )
    .expect("right unit boundary");
    report.record("monad.unit-right", law_witness(&right, &idm));
    let assoc_l = ContainerMorphism::vertical(
        &m.mult,
        &ContainerMorphism::whisker_inner(&m.mult, t),
    )
    .expect("assoc boundary");
    let assoc_r = ContainerMorphism::vertical(
        &m.mult,
        &ContainerMorphism::whisker_outer(t, &m.mult),
    )
    .expect("assoc boundary");
    report.record("monad.assoc", law_witness(&assoc_l, &assoc_r));
    report
}

/// None when the two sides agree; otherwise a rendered counterexample.
pub fn law_witness(lhs: &ContainerMorphism, rhs: &ContainerMorphism) -> Option<String> {
    match ContainerMorphism::equal(lhs, rhs) {
        Ok(true) => None,
        Ok(false) => {
            let shape_diff = ContainerMorphism::first_difference(lhs, rhs)
                .unwrap_or_else(|| "tables differ".into());
            let size = completeness_size(lhs.src()).clamp(1, 4);
            let x = FinSet::new(size);
            let la = eval_morphism_on_set(lhs, x);
            let lb = eval_morphism_on_set(rhs, x);
            let point = (0..la.dom().size)
                .find(|&e| la.apply(e) != lb.apply(e))
                .map(|e| {
                    format!(
                        "; at |X|={size} element {e}: {} vs {}",
                        la.apply(e),
                        lb.apply(e)
                    )
                })
                .unwrap_or_default();
            Some(format!("{shape_diff}{point}"))
        }
        Err(e) => Some(format!("boundary mismatch: {e}")),
    }
}

// ---------------------------------------------------------------------------
// Strength and enrichment
// ---------------------------------------------------------------------------

/// Product codes: `A × B` is `a * |B| + b`.
pub fn prod(a: FinSet, b: FinSet) -> FinSet {
    FinSet::new(a.size * b.size)
}

/// The canonical container strength `A × F(B) -> F(A × B)`:
/// `(a, (s, v)) ↦ (s, p ↦ (a, v_p))`.
pub fn strength(f: &Container, a: FinSet, b: FinSet) -> FinFunction {
    let fb = eval_on_set(f, b);
    let fab = eval_on_set(f, prod(a, b));
    let dom = prod(a, fb);
    let values = (0..dom.size)
        .map(|e| {
            let (av, fe) = (e / fb.size, e % fb.size);
            let (s, vals) = elem_decode(f, b, fe);
            let paired: Vec<usize> = vals.iter().map(|&v| av * b.size + v).collect();
            elem_encode(f, prod(a, b), s, &paired)
        })
        .collect();
    FinFunction::new(dom, fab, values).expect("strength is total")
}

/// The canonical enrichment `[A,B] -> [F(A), F(B)]`: the functor's action on
/// functions, tabulated.
pub fn enrichment(f: &Container, a: FinSet, b: FinSet) -> FinFunction {
    let dom = FinSet::new(pow(b.size, a.size));
    let fa = eval_on_set(f, a);
    let fb = eval_on_set(f, b);
    let cod = FinSet::new(pow(fb.size, fa.size));
    let values = (0..dom.size)
        .map(|h| {
            let hf = FinFunction::new(a, b, digits(h, b.size, a.size)).expect("function");
            function_code(&apply_container(f, &hf))
        })
        .collect();
    FinFunction::new(dom, cod, values).expect("enrichment is total")
}

/// Enrichment induced by a strength family via evaluation:
/// `[A,B] × F(A) -> F([A,B] × A) -> F(B)`, curried.
pub fn enrichment_from_strength(
    f: &Container,
    a: FinSet,
    b: FinSet,
    str_at: impl Fn(FinSet, FinSet) -> FinFunction,
) -> FinFunction {
    let hom = FinSet::new(pow(b.size, a.size));
    let fa = eval_on_set(f, a);
    let fb = eval_on_set(f, b);
    let tau = str_at(hom, a);
    // Ev : [A,B] × A -> B
    let ev = FinFunction::new(
        prod(hom, a),
        b,
        (0..hom.size * a.size)
            .map(|e| digits(e / a.size, b.size, a.size)[e % a.size])
            .collect(),
    )
    .expect("evaluation map");
    let fev = apply_container(f, &ev);
    let values = (0..hom.size)
        .map(|h| {
            let table: Vec<usize> = (0..fa.size)
                .map(|e| fev.apply(tau.apply(h * fa.size + e)))
                .collect();
            undigits(&table, fb.size)
        })
        .collect();
    FinFunction::new(hom, FinSet::new(pow(fb.size, fa.size)), values).expect("total")
}

/// Strength induced by an enrichment family via the unit of the tensor-hom
/// adjunction: `A × F(B) -> [B, A×B] × F(B) -> [F(B), F(A×B)] × F(B) -> F(A×B)`.
pub fn strength_from_enrichment(
    f: &Container,
    a: FinSet,
    b: FinSet,
    enr_at: impl Fn(FinSet, FinSet) -> FinFunction,
) -> FinFunction {
    let fb = eval_on_set(f, b);
    let fab = eval_on_set(f, prod(a, b));
    let enr = enr_at(b, prod(a, b));
    let values = (0..a.size * fb.size)
        .map(|e| {
            let (av, fe) = (e / fb.size, e % fb.size);
            // unit: a ↦ (b ↦ (a,b)) in [B, A×B]
            let unit_code = undigits(
                &(0..b.size).map(|bv| av * b.size + bv).collect::<Vec<_>>(),
                a.size * b.size,
            );
            let action = digits(enr.apply(unit_code), fab.size, fb.size);
            action[fe]
        })
        .collect();
    FinFunction::new(prod(a, fb), fab, values).expect("total")
}

/// Strength -> enrichment -> strength and enrichment -> strength ->
/// enrichment, compared with the canonical families at all sizes ≤ bound.
pub fn strength_enrichment_roundtrip(f: &Container, bound: usize) -> CheckReport {
    let mut report = CheckReport::new("strength-enrichment");
    for a in 0..=bound {
        for b in 0..=bound {
            let (a, b) = (FinSet::new(a), FinSet::new(b));
            let tag = format!("roundtrip[A={},B={}]", a.size, b.size);
            let canonical = strength(f, a, b);
            let via = strength_from_enrichment(f, a, b, |x, y| {
                enrichment_from_strength(f, x, y, |u, v| strength(f, u, v))
            });
            let strength_ok = canonical == via;
            let canonical_e = enrichment(f, a, b);
            let via_e = enrichment_from_strength(f, a, b, |x, y| {
                strength_from_enrichment(f, x, y, |u, v| enrichment(f, u, v))
            });
            let enrich_ok = canonical_e == via_e;
            if strength_ok && enrich_ok {
                report.record(tag, None);
            } else {
                report.record(
                    tag,
                    Some(format!(
                        "strength round trip {}; enrichment round trip {}",
                        if strength_ok { "ok" } else { "differs" },
                        if enrich_ok { "ok" } else { "differs" }
                    )),
                );
            }
        }
    }
    report
}

/// Unit and associativity coherence of the canonical strength, pointwise.
pub fn strength_coherences(f: &Container, bound: usize) -> CheckReport {
    let mut report = CheckReport::new("strength-coherence");
    let one = FinSet::new(1);
    for b in 0..=bound {
        let b = FinSet::new(b);
        // F(λ) ∘ τ_{1,B} = λ_{F(B)}; product codes make λ the identity.
        let tau = strength(f, one, b);
        let ok = (0..tau.dom().size).all(|e| tau.apply(e) == e);
        report.record(
            format!("unit-triangle[B={}]", b.size),
            if ok { None } else { Some("τ_{1,B} is not the identity on codes".into()) },
        );
    }
    for a in 0..=bound {
        for b in 0..=bound {
            for c in 0..=bound {
                let (a, b, c) = (FinSet::new(a), FinSet::new(b), FinSet::new(c));
                // τ_{A×B,C} = τ rebracketed: product codes are strictly
                // associative, so both routes land in the same set.
                let lhs = strength(f, prod(a, b), c);
                let inner = strength(f, b, c);
                let fc = eval_on_set(f, c);
                let fbc = eval_on_set(f, prod(b, c));
                let rhs_values: Vec<usize> = (0..prod(prod(a, b), fc).size)
                    .map(|e| {
                        let (ab, fe) = (e / fc.size, e % fc.size);
                        let (av, bv) = (ab / b.size, ab % b.size);
                        let mid = inner.apply(bv * fc.size + fe);
                        strength(f, a, prod(b, c)).apply(av * fbc.size + mid)
                    })
                    .collect();
                let ok = lhs.values() == rhs_values.as_slice();
                report.record(
                    format!("assoc-pentagon[A={},B={},C={}]", a.size, b.size, c.size),
                    if ok { None } else { Some("pentagon routes differ".into()) },
                );
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_word_is_strictly_associative() {
        let w = writer(&MonoidTable::cyclic(2)).functor;
        let m = maybe().functor;
        let r = reader(FinSet::new(2)).functor;
        let left = w.compose(&m).compose(&r);
        let right = w.compose(&m.compose(&r));
        assert_eq!(left, right);
        assert_eq!(left.flat(), right.flat());
        let id = Container::identity();
        assert_eq!(id.compose(&m), m);
        assert_eq!(m.compose(&id), m);
    }

    #[test]
    fn split_join_are_inverse() {
        let w = writer(&MonoidTable::cyclic(2)).functor;
        let m = maybe().functor;
        let s = state(FinSet::new(2)).functor;
        let word = w.compose(&m).compose(&s);
        for cut in 0..=word.depth() {
            for shape in 0..word.shape_count() {
                let (p, asg) = word.split_shape(cut, shape);
                assert_eq!(word.join_shape(cut, p, &asg), shape);
                for pos in 0..word.pos_count(shape) {
                    let (pp, sp) = word.split_pos(cut, shape, pos);
                    assert_eq!(word.join_pos(cut, shape, pp, sp), pos);
                }
            }
        }
    }

    #[test]
    fn compose_shape_counts() {
        let w2 = writer(&MonoidTable::cyclic(2)).functor;
        assert_eq!(w2.compose(&w2).shape_count(), 4);
        let m = maybe().functor;
        // Nothing, Just Nothing-shape, Just Just-shape.
        assert_eq!(m.compose(&m).shape_count(), 3);
        let f = maybe().functor;
        assert_eq!(Container::identity().compose(&f), f);
    }

    #[test]
    fn eval_examples() {
        let w2 = writer(&MonoidTable::cyclic(2)).functor;
        assert_eq!(eval_size(&w2, FinSet::new(3)), 6);
        let m = maybe().functor;
        assert_eq!(eval_size(&m, FinSet::new(0)), 1); // shapes with no positions only
        let s2 = state(FinSet::new(2)).functor;
        assert_eq!(eval_size(&s2, FinSet::new(2)), 16);
    }

    #[test]
    fn eval_composition_agrees_pointwise() {
        let builtins = [
            writer(&MonoidTable::cyclic(2)).functor,
            maybe().functor,
            reader(FinSet::new(2)).functor,
            state(FinSet::new(2)).functor,
            either(FinSet::new(2)).functor,
            Container::identity(),
        ];
        for f in &builtins {
            for g in &builtins {
                for x in 0..=3 {
                    let x = FinSet::new(x);
                    assert_eq!(
                        eval_size(&f.compose(g), x),
                        eval_size(f, eval_on_set(g, x)),
                        "{f} ∘ {g} at {}",
                        x.size
                    );
                    assert!(compose_eval_agrees(f, g, x));
                }
            }
        }
    }

    #[test]
    fn builtins_pass_monad_laws() {
        let monads = [
            writer(&MonoidTable::cyclic(2)),
            writer(&MonoidTable::cyclic(3)),
            writer(&MonoidTable::bool_and()),
            either(FinSet::new(1)),
            either(FinSet::new(2)),
            maybe(),
            reader(FinSet::new(2)),
            state(FinSet::new(2)),
            identity_monad(),
        ];
        for m in &monads {
            let report = check_monad(m);
            assert!(report.passed(), "{}:\n{report}", m.name);
        }
    }

    #[test]
    fn corrupted_writer_fails_assoc_with_witness() {
        // a + 2b mod 3 satisfies the unit laws but not associativity.
        let table: Vec<Vec<usize>> = (0..3)
            .map(|a| (0..3).map(|b| (a + 2 * b) % 3).collect())
            .collect();
        assert!(MonoidTable::new("bad", 3, 0, table.clone()).is_err());
        let bad = writer_raw("writer(z3-bad)", 3, 0, &table).unwrap();
        let report = check_monad(&bad);
        let failing = report.failing_tags();
        assert!(failing.contains(&"monad.assoc"), "{report}");
        assert!(report.instances.iter().any(|i| i.tag == "monad.unit-right" && i.pass));
        // (1,1,1) is a witness: (1+2)+2 = 2 against 1+2·(1+2) = 1 mod 3.
        let cubed = bad.functor.compose(&bad.functor).compose(&bad.functor);
        let lhs = ContainerMorphism::vertical(
            &bad.mult,
            &ContainerMorphism::whisker_inner(&bad.mult, &bad.functor),
        )
        .unwrap();
        let rhs = ContainerMorphism::vertical(
            &bad.mult,
            &ContainerMorphism::whisker_outer(&bad.functor, &bad.mult),
        )
        .unwrap();
        let triple = (0..cubed.shape_count())
            .find(|&s| cubed.render_shape(s) == "(1,1,1)")
            .unwrap();
        assert_eq!(lhs.shape_map()[triple], 2);
        assert_eq!(rhs.shape_map()[triple], 1);
    }

    #[test]
    fn writer_mult_is_monoid_addition() {
        let m = MonoidTable::cyclic(2);
        let w = writer(&m);
        let squared = w.functor.compose(&w.functor);
        for c in 0..squared.shape_count() {
            let (m1, g) = squared.split_shape(1, c);
            assert_eq!(w.mult.shape_map()[c], m.mul(m1, g[0]));
        }
    }

    #[test]
    fn either_empty_is_identity_like() {
        let e0 = either(FinSet::new(0));
        assert!(check_monad(&e0).passed());
        for x in 0..=3 {
            assert_eq!(eval_size(&e0.functor, FinSet::new(x)), x);
        }
    }

    #[test]
    fn maybe_mult_pointwise() {
        let m = maybe();
        // μ(ℓ) = ℓ and μ(r∘r) = r, pointwise on sets of size ≤ 3.
        for x in 0..=3usize {
            let x = FinSet::new(x);
            let f = eval_morphism_on_set(&m.mult, x);
            let squared = m.functor.compose(&m.functor);
            // Nothing ↦ Nothing
            let nothing_outer = elem_encode(&squared, x, 0, &[]);
            let nothing = elem_encode(&m.functor, x, 0, &[]);
            assert_eq!(f.apply(nothing_outer), nothing);
            // Just Nothing ↦ Nothing; Just (Just v) ↦ Just v
            assert_eq!(f.apply(elem_encode(&squared, x, 1, &[])), nothing);
            for v in 0..x.size {
                let jj = elem_encode(&squared, x, 2, &[v]);
                assert_eq!(f.apply(jj), elem_encode(&m.functor, x, 1, &[v]));
            }
        }
    }

    #[test]
    fn morphism_equality_behaviour() {
        let w3 = writer(&MonoidTable::cyclic(3));
        assert!(ContainerMorphism::equal(&w3.mult, &w3.mult).unwrap());
        let table: Vec<Vec<usize>> = (0..3)
            .map(|a| (0..3).map(|b| (a + 2 * b) % 3).collect())
            .collect();
        let bad = writer_raw("bad", 3, 0, &table).unwrap();
        assert!(!ContainerMorphism::equal(&w3.mult, &bad.mult).unwrap());
        // Tables differ at (1,1): 1+1 = 2 against 1+2 = 0 mod 3.
        let squared = w3.functor.compose(&w3.functor);
        let pair = (0..squared.shape_count())
            .find(|&s| squared.render_shape(s) == "(1,1)")
            .unwrap();
        assert_eq!(w3.mult.shape_map()[pair], 2);
        assert_eq!(bad.mult.shape_map()[pair], 0);
        assert!(ContainerMorphism::first_difference(&w3.mult, &bad.mult).is_some());
        // Boundary mismatch is an error, not a verdict.
        assert!(ContainerMorphism::equal(&w3.mult, &w3.unit).is_err());
    }

    #[test]
    fn two_presentations_of_maybe_mult_agree() {
        let m = maybe();
        // Unrolled ⟨ℓ, id⟩ built independently from the pointwise oracle view.
        let squared = m.functor.compose(&m.functor);
        let mut shape_map = Vec::new();
        let mut pos_maps = Vec::new();
        for c in 0..squared.shape_count() {
            let (s, g) = squared.split_shape(1, c);
            if s == 0 || g[0] == 0 {
                shape_map.push(0);
                pos_maps.push(vec![]);
            } else {
                shape_map.push(1);
                pos_maps.push(vec![0]);
            }
        }
        let unrolled =
            ContainerMorphism::new(squared, m.functor.clone(), shape_map, pos_maps).unwrap();
        assert!(ContainerMorphism::equal(&m.mult, &unrolled).unwrap());
        let size = completeness_size(unrolled.src());
        assert!(pointwise_equal(&m.mult, &unrolled, FinSet::new(size)).unwrap());
    }

    #[test]
    fn interchange_on_container_cells() {
        // (a' ∘ a) · (b' ∘ b) = (a' · b') ∘ (a · b) for vertically composable
        // pairs.
        let m = maybe();
        let w = writer(&MonoidTable::cyclic(2));
        let a = m.mult.clone();
        let id_m = ContainerMorphism::identity(&m.functor);
        let id_w = ContainerMorphism::identity(&w.functor);
        let b = w.mult.clone();
        let lhs = ContainerMorphism::horizontal(
            &ContainerMorphism::vertical(&id_m, &a).unwrap(),
            &ContainerMorphism::vertical(&id_w, &b).unwrap(),
        )
        .unwrap();
        let rhs = ContainerMorphism::vertical(
            &ContainerMorphism::horizontal(&id_m, &id_w).unwrap(),
            &ContainerMorphism::horizontal(&a, &b).unwrap(),
        )
        .unwrap();
        assert!(ContainerMorphism::equal(&lhs, &rhs).unwrap());
    }

    #[test]
    fn strength_examples() {
        // Identity container: pairing is the identity on codes.
        let id = Container::identity();
        let tau = strength(&id, FinSet::new(2), FinSet::new(3));
        assert!((0..tau.dom().size).all(|e| tau.apply(e) == e));

        // Maybe: Nothing stays Nothing-shaped.
        let m = maybe().functor;
        let (a, b) = (FinSet::new(2), FinSet::new(2));
        let tau = strength(&m, a, b);
        let fb = eval_on_set(&m, b);
        let nothing = elem_encode(&m, b, 0, &[]);
        for av in 0..a.size {
            let out = tau.apply(av * fb.size + nothing);
            let (shape, _) = elem_decode(&m, prod(a, b), out);
            assert_eq!(shape, 0);
        }

        // Writer: (a, (m, b)) ↦ (m, (a, b)).
        let w = writer(&MonoidTable::cyclic(2)).functor;
        let tau = strength(&w, a, b);
        let wb = eval_on_set(&w, b);
        for av in 0..a.size {
            for mv in 0..2 {
                for bv in 0..b.size {
                    let e = elem_encode(&w, b, mv, &[bv]);
                    let out = tau.apply(av * wb.size + e);
                    let (shape, vals) = elem_decode(&w, prod(a, b), out);
                    assert_eq!(shape, mv);
                    assert_eq!(vals, vec![av * b.size + bv]);
                }
            }
        }
    }

    #[test]
    fn strength_enrichment_roundtrips() {
        for f in [
            Container::identity(),
            writer(&MonoidTable::cyclic(2)).functor,
            maybe().functor,
        ] {
            let report = strength_enrichment_roundtrip(&f, 3);
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn naturality_of_builtin_cells() {
        let cells = [
            maybe().mult,
            maybe().unit,
            writer(&MonoidTable::cyclic(3)).mult,
            state(FinSet::new(2)).mult,
            reader(FinSet::new(2)).mult,
        ];
        for cell in &cells {
            for x in 0..=3usize {
                for y in 0..=3usize {
                    for f in all_functions(FinSet::new(x), FinSet::new(y)) {
                        assert!(naturality_holds(cell, &f));
                    }
                }
            }
        }
    }
}
