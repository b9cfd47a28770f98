//! Stable sets, generated subrepresentations, Ω-words and bases.
//!
//! Everything here works on any [`Layered`] structure: a single
//! representation is the two-layer case of a tower. Layers are numbered
//! from 1, and layer 1 is always generated in full, so generating tuples
//! list subsets of layers `2..=n` only.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::algebra::{ElemSet, FiniteAlgebra, Mapping, Tuples};
use crate::error::Error;
use crate::representation::{RepMorphism, Representation};

/// A chain of algebras `A₁..Aₙ` with `f_{i,i+1}: Aᵢ → *Aᵢ₊₁`.
pub trait Layered {
    /// `n ≥ 2`.
    fn layer_count(&self) -> usize;
    /// `Aᵢ` for `1 ≤ i ≤ n`.
    fn layer(&self, i: usize) -> &FiniteAlgebra;
    /// `f_{i,i+1}` for `1 ≤ i < n`.
    fn action_into(&self, i: usize) -> &Representation;
}

impl Layered for Representation {
    fn layer_count(&self) -> usize {
        2
    }

    fn layer(&self, i: usize) -> &FiniteAlgebra {
        match i {
            1 => self.domain(),
            2 => self.space(),
            _ => panic!("layer {i} out of range for a representation"),
        }
    }

    fn action_into(&self, i: usize) -> &Representation {
        assert_eq!(i, 1, "a representation has one action");
        self
    }
}

/// A term over layer-1 constants, generators, layer operations and actions.
///
/// Words are compared by evaluation; two different words may name the
/// same element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OmegaWord {
    /// An element of `A₁`.
    Const(usize),
    /// A generator: `element ∈ X_layer`, `layer ≥ 2`.
    Gen { layer: usize, element: usize },
    /// An operation of `A_layer` applied to words of the same layer, `layer ≥ 2`.
    Op {
        layer: usize,
        op: usize,
        args: Arc<[OmegaWord]>,
    },
    /// `actor` (layer − 1) acting on `target` (layer).
    Act {
        layer: usize,
        actor: Arc<OmegaWord>,
        target: Arc<OmegaWord>,
    },
}

impl OmegaWord {
    pub fn layer(&self) -> usize {
        match self {
            OmegaWord::Const(_) => 1,
            OmegaWord::Gen { layer, .. }
            | OmegaWord::Op { layer, .. }
            | OmegaWord::Act { layer, .. } => *layer,
        }
    }

    pub fn op(layer: usize, op: usize, args: Vec<OmegaWord>) -> Self {
        OmegaWord::Op {
            layer,
            op,
            args: args.into(),
        }
    }

    pub fn act(actor: OmegaWord, target: OmegaWord) -> Self {
        OmegaWord::Act {
            layer: target.layer(),
            actor: Arc::new(actor),
            target: Arc::new(target),
        }
    }

    /// Number of nodes, counting shared subterms once per occurrence.
    pub fn size(&self) -> usize {
        match self {
            OmegaWord::Const(_) | OmegaWord::Gen { .. } => 1,
            OmegaWord::Op { args, .. } => 1 + args.iter().map(OmegaWord::size).sum::<usize>(),
            OmegaWord::Act { actor, target, .. } => 1 + actor.size() + target.size(),
        }
    }
}

/// One subset per layer `2..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratingTuple {
    sets: Vec<ElemSet>,
}

impl GeneratingTuple {
    /// `sets[0]` is `X₂`.
    pub fn new(sets: Vec<ElemSet>) -> Self {
        GeneratingTuple { sets }
    }

    /// The two-layer tuple `(X)`.
    pub fn single(set: ElemSet) -> Self {
        GeneratingTuple {
            sets: alloc::vec![set],
        }
    }

    /// Every layer in full.
    pub fn full<L: Layered + ?Sized>(t: &L) -> Self {
        GeneratingTuple {
            sets: (2..=t.layer_count())
                .map(|i| (0..t.layer(i).size()).collect())
                .collect(),
        }
    }

    /// Top layer index.
    pub fn top(&self) -> usize {
        self.sets.len() + 1
    }

    /// `X_layer`, `layer ≥ 2`.
    pub fn get(&self, layer: usize) -> &ElemSet {
        &self.sets[layer - 2]
    }

    pub fn get_mut(&mut self, layer: usize) -> &mut ElemSet {
        &mut self.sets[layer - 2]
    }

    pub fn sets(&self) -> &[ElemSet] {
        &self.sets
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.sets.iter().map(ElemSet::len).collect()
    }

    pub fn total_len(&self) -> usize {
        self.sets.iter().map(ElemSet::len).sum()
    }

    fn check<L: Layered + ?Sized>(&self, t: &L) -> Result<(), Error> {
        if self.sets.len() + 1 != t.layer_count() {
            return Err(Error::SizeMismatch {
                expected: t.layer_count() - 1,
                found: self.sets.len(),
            });
        }
        for (k, set) in self.sets.iter().enumerate() {
            let size = t.layer(k + 2).size();
            if let Some(&element) = set.iter().find(|&&x| x >= size) {
                return Err(Error::ElementOutOfRange { element, size });
            }
        }
        Ok(())
    }
}

/// One witness word per generated element, per layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateTable {
    layers: Vec<BTreeMap<usize, OmegaWord>>,
}

impl CoordinateTable {
    pub fn layer_count(&self) -> usize {
        self.layers.len()
    }

    /// The generated subset `Yᵢ`.
    pub fn elements(&self, layer: usize) -> ElemSet {
        self.layers[layer - 1].keys().copied().collect()
    }

    pub fn sets(&self) -> Vec<ElemSet> {
        (1..=self.layers.len()).map(|i| self.elements(i)).collect()
    }

    pub fn contains(&self, layer: usize, x: usize) -> bool {
        self.layers[layer - 1].contains_key(&x)
    }

    pub fn word(&self, layer: usize, x: usize) -> Option<&OmegaWord> {
        self.layers[layer - 1].get(&x)
    }

    pub fn words(&self, layer: usize) -> impl Iterator<Item = (usize, &OmegaWord)> {
        self.layers[layer - 1].iter().map(|(&x, w)| (x, w))
    }
}

/// Least superset of `seed` closed under the operations of `alg` and under
/// the action of every element of `actors`.
fn close_layer(
    alg: &FiniteAlgebra,
    below: &Representation,
    actors: &BTreeMap<usize, OmegaWord>,
    seed: &ElemSet,
    layer: usize,
) -> BTreeMap<usize, OmegaWord> {
    let mut words: BTreeMap<usize, OmegaWord> = seed
        .iter()
        .map(|&element| (element, OmegaWord::Gen { layer, element }))
        .collect();
    let sig = alg.signature();
    for op in (0..sig.len()).filter(|&op| sig.arity(op) == 0) {
        words
            .entry(alg.apply(op, &[]))
            .or_insert_with(|| OmegaWord::op(layer, op, Vec::new()));
    }
    loop {
        let current: Vec<(usize, OmegaWord)> = words.iter().map(|(&x, w)| (x, w.clone())).collect();
        let before = words.len();
        for op in (0..sig.len()).filter(|&op| sig.arity(op) > 0) {
            for pick in Tuples::new(current.len(), sig.arity(op)) {
                let args: Vec<usize> = pick.iter().map(|&k| current[k].0).collect();
                words.entry(alg.apply(op, &args)).or_insert_with(|| {
                    OmegaWord::op(
                        layer,
                        op,
                        pick.iter().map(|&k| current[k].1.clone()).collect(),
                    )
                });
            }
        }
        for (&a, aw) in actors {
            for (x, xw) in &current {
                words
                    .entry(below.act(a, *x))
                    .or_insert_with(|| OmegaWord::act(aw.clone(), xw.clone()));
            }
        }
        if words.len() == before {
            return words;
        }
    }
}

/// The generated tower of subrepresentations `J(f, X)` with witness words.
///
/// Layers are closed bottom-up; layer `i` is acted on only by the part of
/// layer `i − 1` already generated.
pub fn closure<L: Layered + ?Sized>(t: &L, x: &GeneratingTuple) -> Result<CoordinateTable, Error> {
    x.check(t)?;
    let mut layers = Vec::with_capacity(t.layer_count());
    layers.push(
        (0..t.layer(1).size())
            .map(|a| (a, OmegaWord::Const(a)))
            .collect::<BTreeMap<_, _>>(),
    );
    for i in 2..=t.layer_count() {
        let next = close_layer(
            t.layer(i),
            t.action_into(i - 1),
            &layers[i - 2],
            x.get(i),
            i,
        );
        layers.push(next);
    }
    Ok(CoordinateTable { layers })
}

/// Whether `(Y₂..Yₙ)` is closed under each layer's operations and the
/// actions of the layer below.
pub fn is_stable_tuple<L: Layered + ?Sized>(t: &L, y: &GeneratingTuple) -> Result<bool, Error> {
    y.check(t)?;
    let full_bottom: ElemSet = (0..t.layer(1).size()).collect();
    Ok((2..=t.layer_count()).all(|i| {
        let actors = if i == 2 { &full_bottom } else { y.get(i - 1) };
        let set = y.get(i);
        let rep = t.action_into(i - 1);
        t.layer(i).is_closed(set)
            && actors
                .iter()
                .all(|&a| set.iter().all(|&m| set.contains(&rep.act(a, m))))
    }))
}

pub fn is_generating_tuple<L: Layered + ?Sized>(t: &L, x: &GeneratingTuple) -> Result<bool, Error> {
    let table = closure(t, x)?;
    Ok((2..=t.layer_count()).all(|i| table.layers[i - 1].len() == t.layer(i).size()))
}

/// Evaluates `w` with generators drawn from `x`.
pub fn evaluate_word<L: Layered + ?Sized>(
    t: &L,
    w: &OmegaWord,
    x: &GeneratingTuple,
) -> Result<usize, Error> {
    x.check(t)?;
    eval(t, w, x)
}

fn eval<L: Layered + ?Sized>(t: &L, w: &OmegaWord, x: &GeneratingTuple) -> Result<usize, Error> {
    use alloc::format;
    let n = t.layer_count();
    let layer_ok = |layer: usize| (2..=n).contains(&layer);
    match w {
        OmegaWord::Const(a) => {
            if *a < t.layer(1).size() {
                Ok(*a)
            } else {
                Err(Error::MalformedWord(format!(
                    "constant {a} is not in layer 1"
                )))
            }
        }
        OmegaWord::Gen { layer, element } => {
            if layer_ok(*layer) && x.get(*layer).contains(element) {
                Ok(*element)
            } else {
                Err(Error::MalformedWord(format!(
                    "{element} is not a generator of layer {layer}"
                )))
            }
        }
        OmegaWord::Op { layer, op, args } => {
            if !layer_ok(*layer) {
                return Err(Error::MalformedWord(format!(
                    "operation word at layer {layer}"
                )));
            }
            let alg = t.layer(*layer);
            if *op >= alg.signature().len() || alg.signature().arity(*op) != args.len() {
                return Err(Error::MalformedWord(format!(
                    "operation #{op} of layer {layer} given {} arguments",
                    args.len()
                )));
            }
            let mut values = Vec::with_capacity(args.len());
            for arg in args.iter() {
                if arg.layer() != *layer {
                    return Err(Error::MalformedWord(format!(
                        "argument of layer {} under layer {layer}",
                        arg.layer()
                    )));
                }
                values.push(eval(t, arg, x)?);
            }
            Ok(alg.apply(*op, &values))
        }
        OmegaWord::Act {
            layer,
            actor,
            target,
        } => {
            if !layer_ok(*layer) || actor.layer() + 1 != *layer || target.layer() != *layer {
                return Err(Error::MalformedWord(format!(
                    "action at layer {layer} has mismatched operands"
                )));
            }
            let a = eval(t, actor, x)?;
            let m = eval(t, target, x)?;
            Ok(t.action_into(layer - 1).act(a, m))
        }
    }
}

/// The stored witness word for `target` in layer `layer`.
pub fn tuple_coordinates_of<L: Layered + ?Sized>(
    t: &L,
    x: &GeneratingTuple,
    layer: usize,
    target: usize,
) -> Result<OmegaWord, Error> {
    if layer == 0 || layer > t.layer_count() {
        return Err(Error::LayerOutOfRange { layer });
    }
    closure(t, x)?
        .word(layer, target)
        .cloned()
        .ok_or(Error::NotGenerated {
            layer,
            element: target,
        })
}

/// Greedy irredundant subtuple of `start`: layers bottom-up, elements in
/// ascending order, each dropped when the rest still generates.
pub fn find_basis_tuple<L: Layered + ?Sized>(
    t: &L,
    start: &GeneratingTuple,
) -> Result<GeneratingTuple, Error> {
    if !is_generating_tuple(t, start)? {
        return Err(Error::NotGenerating);
    }
    let mut current = start.clone();
    for i in 2..=t.layer_count() {
        let candidates: Vec<usize> = current.get(i).iter().copied().collect();
        for x in candidates {
            current.get_mut(i).remove(&x);
            if !is_generating_tuple(t, &current)? {
                current.get_mut(i).insert(x);
            }
        }
    }
    Ok(current)
}

/// Generates, and dropping any single element stops it generating.
pub fn is_basis_tuple<L: Layered + ?Sized>(t: &L, x: &GeneratingTuple) -> Result<bool, Error> {
    if !is_generating_tuple(t, x)? {
        return Ok(false);
    }
    for i in 2..=t.layer_count() {
        for &e in x.get(i) {
            let mut smaller = x.clone();
            smaller.get_mut(i).remove(&e);
            if is_generating_tuple(t, &smaller)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `(h₂(X₂)..hₙ(Xₙ))` for layer maps `maps[k] = h_{k+1}`.
pub fn image_tuple(maps: &[&Mapping], x: &GeneratingTuple) -> GeneratingTuple {
    GeneratingTuple::new(
        (2..=x.top())
            .map(|i| maps[i - 1].image_of_set(x.get(i)))
            .collect(),
    )
}

/// Whether the image of a generating tuple under layer maps still generates.
pub fn is_regular_on<L: Layered + ?Sized>(
    t: &L,
    maps: &[&Mapping],
    x: &GeneratingTuple,
) -> Result<bool, Error> {
    if maps.len() != t.layer_count() {
        return Err(Error::SizeMismatch {
            expected: t.layer_count(),
            found: maps.len(),
        });
    }
    if !is_generating_tuple(t, x)? {
        return Err(Error::NotGenerating);
    }
    is_generating_tuple(t, &image_tuple(maps, x))
}

/// Rewrites generators and layer-1 constants through the layer maps.
pub fn map_word(w: &OmegaWord, maps: &[&Mapping]) -> OmegaWord {
    match w {
        OmegaWord::Const(a) => OmegaWord::Const(maps[0].apply(*a)),
        OmegaWord::Gen { layer, element } => OmegaWord::Gen {
            layer: *layer,
            element: maps[layer - 1].apply(*element),
        },
        OmegaWord::Op { layer, op, args } => OmegaWord::Op {
            layer: *layer,
            op: *op,
            args: args.iter().map(|a| map_word(a, maps)).collect(),
        },
        OmegaWord::Act {
            layer,
            actor,
            target,
        } => OmegaWord::Act {
            layer: *layer,
            actor: Arc::new(map_word(actor, maps)),
            target: Arc::new(map_word(target, maps)),
        },
    }
}

/// Outcome of checking that word rewriting and the layer maps agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateMapReport {
    pub checked: usize,
    /// `(layer, element)` where `eval(map_word(w(x))) ≠ h(x)`.
    pub mismatches: Vec<(usize, usize)>,
}

impl CoordinateMapReport {
    pub fn commutes(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// For every generated element, evaluates its rewritten witness word over
/// the image tuple and compares with the mapped element.
pub fn check_coordinate_map<L: Layered + ?Sized>(
    t: &L,
    maps: &[&Mapping],
    x: &GeneratingTuple,
) -> Result<CoordinateMapReport, Error> {
    if maps.len() != t.layer_count() {
        return Err(Error::SizeMismatch {
            expected: t.layer_count(),
            found: maps.len(),
        });
    }
    let table = closure(t, x)?;
    let image = image_tuple(maps, x);
    let mut report = CoordinateMapReport {
        checked: 0,
        mismatches: Vec::new(),
    };
    for i in 1..=t.layer_count() {
        for (e, w) in table.words(i) {
            report.checked += 1;
            if evaluate_word(t, &map_word(w, maps), &image)? != maps[i - 1].apply(e) {
                report.mismatches.push((i, e));
            }
        }
    }
    Ok(report)
}

/// `f(a)(x) ∈ X` for all `a`, and `X` closed under the space operations.
pub fn is_stable(rep: &Representation, x: &ElemSet) -> bool {
    rep.is_stable(x)
}

/// The generated subrepresentation `J(f, X)` and witness words for its elements.
pub fn stable_closure(
    rep: &Representation,
    x: &ElemSet,
) -> Result<(ElemSet, CoordinateTable), Error> {
    let table = closure(rep, &GeneratingTuple::single(x.clone()))?;
    Ok((table.elements(2), table))
}

pub fn coordinates_of(
    rep: &Representation,
    x: &ElemSet,
    target: usize,
) -> Result<OmegaWord, Error> {
    tuple_coordinates_of(rep, &GeneratingTuple::single(x.clone()), 2, target)
}

pub fn is_generating(rep: &Representation, x: &ElemSet) -> Result<bool, Error> {
    is_generating_tuple(rep, &GeneratingTuple::single(x.clone()))
}

pub fn find_basis(rep: &Representation, start: &ElemSet) -> Result<ElemSet, Error> {
    Ok(
        find_basis_tuple(rep, &GeneratingTuple::single(start.clone()))?
            .get(2)
            .clone(),
    )
}

pub fn endomorphism_is_regular_on(
    rep: &Representation,
    endo: &RepMorphism,
    x: &ElemSet,
) -> Result<bool, Error> {
    is_regular_on(
        rep,
        &[&endo.domain_map, &endo.space_map],
        &GeneratingTuple::single(x.clone()),
    )
}

pub fn coordinate_map_of_endomorphism(
    rep: &Representation,
    endo: &RepMorphism,
    x: &ElemSet,
) -> Result<CoordinateMapReport, Error> {
    if !is_generating(rep, x)? {
        return Err(Error::NotGenerating);
    }
    check_coordinate_map(
        rep,
        &[&endo.domain_map, &endo.space_map],
        &GeneratingTuple::single(x.clone()),
    )
}
