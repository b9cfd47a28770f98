//! Towers `A₁ → *A₂ → … → *Aₙ` of representations.
//!
//! Layers are numbered from 1; `rep(i)` is `f_{i,i+1}`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::FiniteAlgebra;
use crate::algebra::{Mapping, OpWitness, Tuples, Verdict};
use crate::budget::Meter;
use crate::error::Error;
use crate::generation::{
    closure, find_basis_tuple, image_tuple, is_basis_tuple, is_generating_tuple, CoordinateTable,
    GeneratingTuple, Layered,
};
use crate::loops::{check_loop, LoopReport};
use crate::representation::{
    validate_morphism, Interp, MorphismFailure, OpInterpretation, RepMorphism, Representation,
    RepresentationViolation, Transformation,
};
use crate::search::enumerate_automorphisms;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tower {
    reps: Vec<Representation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TowerViolation {
    TooShort,
    /// The space of `f_{i,i+1}` differs from the domain of `f_{i+1,i+2}`.
    Chain {
        layer: usize,
    },
    Representation {
        layer: usize,
        violation: RepresentationViolation,
    },
}

impl fmt::Display for TowerViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TowerViolation::TooShort => write!(f, "a tower needs at least one representation"),
            TowerViolation::Chain { layer } => write!(
                f,
                "layer {} is not shared by the adjacent representations",
                layer + 1
            ),
            TowerViolation::Representation { layer, violation } => {
                write!(
                    f,
                    "representation of layer {layer} in layer {}: {violation}",
                    layer + 1
                )
            }
        }
    }
}

impl Tower {
    pub fn new(reps: Vec<Representation>) -> Result<Self, Error> {
        let t = Tower { reps };
        match t.validate().first() {
            None => Ok(t),
            Some(v) => Err(Error::InvalidRepresentation(format!("{v}"))),
        }
    }

    pub fn from_reps_unchecked(reps: Vec<Representation>) -> Self {
        Tower { reps }
    }

    pub fn reps(&self) -> &[Representation] {
        &self.reps
    }

    /// `f_{i,i+1}`.
    pub fn rep(&self, i: usize) -> &Representation {
        &self.reps[i - 1]
    }

    pub fn validate(&self) -> Vec<TowerViolation> {
        let mut out = Vec::new();
        if self.reps.is_empty() {
            out.push(TowerViolation::TooShort);
            return out;
        }
        for (k, pair) in self.reps.windows(2).enumerate() {
            if pair[0].space() != pair[1].domain() {
                out.push(TowerViolation::Chain { layer: k + 1 });
            }
        }
        for (k, rep) in self.reps.iter().enumerate() {
            out.extend(rep.validate().into_iter().map(|violation| {
                TowerViolation::Representation {
                    layer: k + 1,
                    violation,
                }
            }));
        }
        out
    }

    /// Every `f_{i,i+1}` is effective.
    pub fn is_effective(&self) -> bool {
        self.reps.iter().all(Representation::is_effective)
    }

    fn check_skip_layer(&self, i: usize) -> Result<(), Error> {
        if i == 0 || i + 2 > self.layer_count() {
            return Err(Error::LayerOutOfRange { layer: i });
        }
        Ok(())
    }
}

impl Layered for Tower {
    fn layer_count(&self) -> usize {
        self.reps.len() + 1
    }

    fn layer(&self, i: usize) -> &FiniteAlgebra {
        if i == 1 {
            self.reps[0].domain()
        } else {
            self.reps[i - 2].space()
        }
    }

    fn action_into(&self, i: usize) -> &Representation {
        &self.reps[i - 1]
    }
}

/// `f_{i,i+2}`: the action of `Aᵢ` on the image of `f_{i+1,i+2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkipRepresentation {
    /// Domain `Aᵢ`; space is the image set with the induced Ωᵢ₊₁ operations.
    pub rep: Representation,
    /// Distinct transformations `f_{i+1,i+2}(a)`; element `k` of the space is `images[k]`.
    pub images: Vec<Transformation>,
    /// `a_{i+1} ↦` position of `f_{i+1,i+2}(a_{i+1})` in `images`.
    pub projection: Mapping,
}

/// Builds the skip representation from `lower = f_{i,i+1}` and `upper = f_{i+1,i+2}`.
///
/// `f_{i,i+2}(a)(f_{i+1,i+2}(x)) = f_{i+1,i+2}(f_{i,i+1}(a)(x))`.
pub fn skip_of(
    lower: &Representation,
    upper: &Representation,
) -> Result<SkipRepresentation, Error> {
    if lower.space() != upper.domain() {
        return Err(Error::ChainMismatch);
    }
    let (images, projection) = upper.image();
    let mid = upper.domain();
    let sig = mid.signature().clone();
    let mut tables = Vec::with_capacity(sig.len());
    for op in 0..sig.len() {
        let mut table = Vec::new();
        for args in Tuples::new(images.len(), sig.arity(op)) {
            let acts: Vec<&Mapping> = args.iter().map(|&k| &images[k]).collect();
            let t = upper.interp().apply(op, &acts, upper.space())?;
            let pos = images
                .iter()
                .position(|s| *s == t)
                .ok_or(Error::NotClosed)?;
            table.push(pos);
        }
        tables.push(table);
    }
    let space = FiniteAlgebra::new(sig, images.len(), tables)?;

    let mut table = Vec::with_capacity(lower.domain().size());
    for a in 0..lower.domain().size() {
        let mut image = alloc::vec![usize::MAX; images.len()];
        let mut source = alloc::vec![0; images.len()];
        for x in 0..mid.size() {
            let p = projection.apply(x);
            let q = projection.apply(lower.act(a, x));
            if image[p] == usize::MAX {
                image[p] = q;
                source[p] = x;
            } else if image[p] != q {
                return Err(Error::IllDefinedSkip {
                    domain: a,
                    first: source[p],
                    second: x,
                });
            }
        }
        table.push(Mapping::new(image, images.len())?);
    }
    let rep = Representation::new(lower.domain().clone(), space, lower.interp().clone(), table)?;
    Ok(SkipRepresentation {
        rep,
        images,
        projection,
    })
}

/// `f_{i,i+2}` of the tower.
pub fn derive_skip(t: &Tower, i: usize) -> Result<SkipRepresentation, Error> {
    t.check_skip_layer(i)?;
    skip_of(t.rep(i), t.rep(i + 1))
}

/// `f_{i,i+k}` for `k ≥ 2`, built from `f_{i,i+1}` and `f_{i+1,i+k}`.
pub fn iterated_skip(t: &Tower, i: usize, k: usize) -> Result<SkipRepresentation, Error> {
    if k < 2 || i == 0 || i + k > t.layer_count() {
        return Err(Error::LayerOutOfRange { layer: i + k });
    }
    if k == 2 {
        return derive_skip(t, i);
    }
    let upper = iterated_skip(t, i + 1, k - 1)?;
    skip_of(t.rep(i), &upper.rep)
}

/// Checks the defining equation of the skip action on every `(a, x)`;
/// the witness is the failing pair.
pub fn skip_equation(
    lower: &Representation,
    upper: &Representation,
    skip: &SkipRepresentation,
) -> Verdict<(usize, usize)> {
    for a in 0..lower.domain().size() {
        for x in 0..upper.domain().size() {
            let lhs = skip.images.get(skip.rep.act(a, skip.projection.apply(x)));
            if lhs != Some(upper.action(lower.act(a, x))) {
                return Verdict::Fails((a, x));
            }
        }
    }
    Verdict::Holds
}

/// Whether `(id, a ↦ f_{i+1,i+2}(a))` is a morphism from `lower` to the skip representation.
pub fn id_projection_is_morphism(
    lower: &Representation,
    skip: &SkipRepresentation,
) -> Result<bool, Error> {
    let m = RepMorphism::new(
        Mapping::identity(lower.domain().size()),
        skip.projection.clone(),
    );
    Ok(validate_morphism(&m, lower, &skip.rep)?.holds())
}

pub fn check_id_f23_morphism(t: &Tower, i: usize) -> Result<bool, Error> {
    let skip = derive_skip(t, i)?;
    id_projection_is_morphism(t.rep(i), &skip)
}

/// `f′_{i,i+2}`, the skip action extended to all of `Aᵢ₊₂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    pub rep: Representation,
    /// Elements `e` with `f_{i+1,i+2}(e) = δ`, ascending; the first is used.
    pub identity_preimages: Vec<usize>,
    /// `f′(a)` equals the skip image of `a` acting on `δ`, for every `a`.
    pub consistent_with_skip: bool,
}

/// The interpretation of `f′`: an op interpreted pointwise through a middle
/// operation takes that operation's interpretation one layer up.
fn lifted_interp(lower: &OpInterpretation, upper: &OpInterpretation) -> OpInterpretation {
    OpInterpretation::new(
        lower
            .modes()
            .iter()
            .map(|mode| match mode {
                Interp::Pointwise(w) => upper.mode(*w).clone(),
                other => other.clone(),
            })
            .collect(),
    )
}

pub fn extend_pair(lower: &Representation, upper: &Representation) -> Result<Extension, Error> {
    let skip = skip_of(lower, upper)?;
    let delta = Mapping::identity(upper.space().size());
    let identity_preimages: Vec<usize> = (0..upper.domain().size())
        .filter(|&e| *upper.action(e) == delta)
        .collect();
    let Some(&e) = identity_preimages.first() else {
        return Err(Error::NoIdentityPreimage);
    };
    for a in 0..lower.domain().size() {
        let chosen = upper.action(lower.act(a, e));
        if let Some(&other) = identity_preimages
            .iter()
            .find(|&&o| upper.action(lower.act(a, o)) != chosen)
        {
            return Err(Error::PreimageDependence {
                first: e,
                second: other,
                domain: a,
            });
        }
    }
    let table: Vec<Transformation> = (0..lower.domain().size())
        .map(|a| upper.action(lower.act(a, e)).clone())
        .collect();
    let consistent_with_skip = table
        .iter()
        .enumerate()
        .all(|(a, t)| skip.images[skip.rep.act(a, skip.projection.apply(e))] == *t);
    let rep = Representation::new(
        lower.domain().clone(),
        upper.space().clone(),
        lifted_interp(lower.interp(), upper.interp()),
        table,
    )?;
    Ok(Extension {
        rep,
        identity_preimages,
        consistent_with_skip,
    })
}

pub fn extend_skip_to_carrier(t: &Tower, i: usize) -> Result<Extension, Error> {
    t.check_skip_layer(i)?;
    extend_pair(t.rep(i), t.rep(i + 1))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropagationReport {
    /// `f_{i,i+1}..f_{i+k−1,i+k}` are all effective.
    pub precondition: bool,
    /// `f_{i,i+k}` is effective; `None` when the precondition fails.
    pub skip_effective: Option<bool>,
    /// `f′_{i,i+2}` is effective; `None` when `k ≠ 2`, the precondition
    /// fails, or the extension is undefined.
    pub extension_effective: Option<bool>,
}

impl PropagationReport {
    /// No observed counterexample.
    pub fn holds(&self) -> bool {
        self.skip_effective != Some(false) && self.extension_effective != Some(false)
    }
}

pub fn check_effectiveness_propagation(
    t: &Tower,
    i: usize,
    k: usize,
) -> Result<PropagationReport, Error> {
    if k < 2 || i == 0 || i + k > t.layer_count() {
        return Err(Error::LayerOutOfRange { layer: i + k });
    }
    let precondition = (i..i + k).all(|j| t.rep(j).is_effective());
    if !precondition {
        return Ok(PropagationReport {
            precondition,
            skip_effective: None,
            extension_effective: None,
        });
    }
    let skip_effective = Some(iterated_skip(t, i, k)?.rep.is_effective());
    let extension_effective = if k == 2 {
        match extend_skip_to_carrier(t, i) {
            Ok(ext) => Some(ext.rep.is_effective()),
            Err(
                Error::NoIdentityPreimage
                | Error::PreimageDependence { .. }
                | Error::InvalidRepresentation(_),
            ) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    Ok(PropagationReport {
        precondition,
        skip_effective,
        extension_effective,
    })
}

/// One map per layer, `maps[k]` acting on `A_{k+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TowerMorphism {
    pub maps: Vec<Mapping>,
}

impl TowerMorphism {
    pub fn new(maps: Vec<Mapping>) -> Self {
        TowerMorphism { maps }
    }

    pub fn identity(t: &Tower) -> Self {
        TowerMorphism {
            maps: (1..=t.layer_count())
                .map(|i| Mapping::identity(t.layer(i).size()))
                .collect(),
        }
    }

    /// `h_i`.
    pub fn map(&self, layer: usize) -> &Mapping {
        &self.maps[layer - 1]
    }

    pub fn layer_maps(&self) -> Vec<&Mapping> {
        self.maps.iter().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TowerMorphismFailure {
    NotHomomorphism {
        layer: usize,
        witness: OpWitness,
    },
    /// `h_{i+1}(f(a)(x)) ≠ g(h_i(a))(h_{i+1}(x))`.
    Square {
        layer: usize,
        element: usize,
        point: usize,
    },
}

impl fmt::Display for TowerMorphismFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TowerMorphismFailure::NotHomomorphism { layer, witness } => {
                write!(f, "map of layer {layer} is not a homomorphism ({witness})")
            }
            TowerMorphismFailure::Square {
                layer,
                element,
                point,
            } => write!(
                f,
                "square between layers {layer} and {} fails at element {element}, point {point}",
                layer + 1
            ),
        }
    }
}

pub fn validate_tower_morphism(
    tm: &TowerMorphism,
    src: &Tower,
    dst: &Tower,
) -> Result<Verdict<TowerMorphismFailure>, Error> {
    if src.layer_count() != dst.layer_count() || tm.maps.len() != src.layer_count() {
        return Err(Error::ChainMismatch);
    }
    for i in 1..src.layer_count() {
        let pair = RepMorphism::new(tm.map(i).clone(), tm.map(i + 1).clone());
        match validate_morphism(&pair, src.rep(i), dst.rep(i))? {
            Verdict::Holds => {}
            Verdict::Fails(MorphismFailure::DomainNotHomomorphism(witness)) => {
                return Ok(Verdict::Fails(TowerMorphismFailure::NotHomomorphism {
                    layer: i,
                    witness,
                }))
            }
            Verdict::Fails(MorphismFailure::SpaceNotHomomorphism(witness)) => {
                return Ok(Verdict::Fails(TowerMorphismFailure::NotHomomorphism {
                    layer: i + 1,
                    witness,
                }))
            }
            Verdict::Fails(MorphismFailure::Commutation { element, point }) => {
                return Ok(Verdict::Fails(TowerMorphismFailure::Square {
                    layer: i,
                    element,
                    point,
                }))
            }
        }
    }
    Ok(Verdict::Holds)
}

/// Layerwise `q∘p`.
pub fn compose_tower_morphisms(
    p: &TowerMorphism,
    q: &TowerMorphism,
) -> Result<TowerMorphism, Error> {
    if p.maps.len() != q.maps.len()
        || p.maps
            .iter()
            .zip(&q.maps)
            .any(|(a, b)| a.target_size() != b.source_size())
    {
        return Err(Error::ChainMismatch);
    }
    Ok(TowerMorphism {
        maps: p
            .maps
            .iter()
            .zip(&q.maps)
            .map(|(a, b)| b.after(a))
            .collect(),
    })
}

/// `*h_{i+2}: f_{i+1,i+2}(x) ↦ g_{i+1,i+2}(h_{i+1}(x))` on skip spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerStarLift {
    /// Skip-space position in the source to skip-space position in the target.
    pub map: Mapping,
    /// `*h(f_{i,i+2}(a)(p)) = g_{i,i+2}(h_i(a))(*h(p))`; witness `(a, p)`.
    pub commutes: Verdict<(usize, usize)>,
}

pub fn star_lift_tower(
    tm: &TowerMorphism,
    src: &Tower,
    dst: &Tower,
    i: usize,
) -> Result<TowerStarLift, Error> {
    src.check_skip_layer(i)?;
    if src.layer_count() != dst.layer_count() || tm.maps.len() != src.layer_count() {
        return Err(Error::ChainMismatch);
    }
    if let Some((first, second)) = src.rep(i + 1).effectiveness_witness() {
        return Err(Error::NotEffective { first, second });
    }
    let f = derive_skip(src, i)?;
    let g = derive_skip(dst, i)?;
    let h_mid = tm.map(i + 1);
    // effective, so the projection is a bijection onto the skip space
    let map = Mapping::new(
        (0..f.images.len())
            .map(|p| {
                let x = f
                    .projection
                    .image()
                    .iter()
                    .position(|&q| q == p)
                    .expect("projection is onto");
                g.projection.apply(h_mid.apply(x))
            })
            .collect(),
        g.images.len(),
    )?;
    let mut commutes = Verdict::Holds;
    'outer: for a in 0..src.layer(i).size() {
        let ha = tm.map(i).apply(a);
        for p in 0..f.images.len() {
            if map.apply(f.rep.act(a, p)) != g.rep.act(ha, map.apply(p)) {
                commutes = Verdict::Fails((a, p));
                break 'outer;
            }
        }
    }
    Ok(TowerStarLift { map, commutes })
}

pub fn tower_closure(t: &Tower, x: &GeneratingTuple) -> Result<CoordinateTable, Error> {
    closure(t, x)
}

pub fn is_generating(t: &Tower, x: &GeneratingTuple) -> Result<bool, Error> {
    is_generating_tuple(t, x)
}

pub fn find_tower_basis(t: &Tower, start: &GeneratingTuple) -> Result<GeneratingTuple, Error> {
    find_basis_tuple(t, start)
}

#[derive(Debug, Clone)]
pub struct TowerAutomorphismLoop {
    pub members: Vec<TowerMorphism>,
    pub report: LoopReport,
    /// Every member maps every supplied basis to a generating tuple;
    /// witness `(member, basis)`.
    pub regular: Verdict<(usize, usize)>,
    /// Every member maps every supplied basis to a basis.
    pub bases_preserved: Verdict<(usize, usize)>,
}

/// All layerwise automorphism tuples of `t`, found layer by layer: the map
/// on `A_{i+1}` is only tried against partial tuples whose last square holds.
pub fn tower_automorphisms(t: &Tower, meter: &mut Meter<'_>) -> Result<Vec<TowerMorphism>, Error> {
    let per_layer: Vec<Vec<Mapping>> = (1..=t.layer_count())
        .map(|i| enumerate_automorphisms(t.layer(i), meter))
        .collect::<Result<_, _>>()?;
    let mut partial: Vec<Vec<&Mapping>> = per_layer[0].iter().map(|h| alloc::vec![h]).collect();
    for i in 1..t.layer_count() {
        let rep = t.rep(i);
        let mut next = Vec::new();
        for prefix in &partial {
            let h_low = prefix[i - 1];
            for h_up in &per_layer[i] {
                meter.tick()?;
                let commutes = (0..rep.domain().size()).all(|a| {
                    let ha = h_low.apply(a);
                    (0..rep.space().size())
                        .all(|x| h_up.apply(rep.act(a, x)) == rep.act(ha, h_up.apply(x)))
                });
                if commutes {
                    let mut longer = prefix.clone();
                    longer.push(h_up);
                    next.push(longer);
                }
            }
        }
        partial = next;
    }
    Ok(partial
        .into_iter()
        .map(|maps| TowerMorphism::new(maps.into_iter().cloned().collect()))
        .collect())
}

/// The automorphisms of `t` with the loop axioms checked, plus regularity
/// and basis preservation against each of `bases`.
pub fn tower_automorphism_loop(
    t: &Tower,
    bases: &[GeneratingTuple],
    meter: &mut Meter<'_>,
) -> Result<TowerAutomorphismLoop, Error> {
    let members = tower_automorphisms(t, meter)?;
    let identity = TowerMorphism::identity(t);
    let report = check_loop(&members, &identity, |p, q| {
        compose_tower_morphisms(q, p).expect("automorphisms of one tower chain")
    });
    let mut regular = Verdict::Holds;
    let mut bases_preserved = Verdict::Holds;
    for (m, member) in members.iter().enumerate() {
        let maps = member.layer_maps();
        for (b, basis) in bases.iter().enumerate() {
            meter.tick()?;
            let image = image_tuple(&maps, basis);
            if regular.holds() && !is_generating_tuple(t, &image)? {
                regular = Verdict::Fails((m, b));
            }
            if bases_preserved.holds() && !is_basis_tuple(t, &image)? {
                bases_preserved = Verdict::Fails((m, b));
            }
        }
    }
    Ok(TowerAutomorphismLoop {
        members,
        report,
        regular,
        bases_preserved,
    })
}
