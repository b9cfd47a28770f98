//! Representations `f: A → *M` of an Ω₁-algebra by transformations of an
//! Ω₂-algebra, and morphisms between them.
//!
//! The Ω₁-structure on transformations is declared per operation through an
//! [`OpInterpretation`]. Only the left convention is modelled; right actions
//! are converted when documents are loaded.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{
    check_homomorphism, kernel_congruence, quotient_algebra, AlgebraViolation, Congruence, ElemSet,
    FiniteAlgebra, Mapping, OpWitness, Partition, Tuples, Verdict,
};
use crate::budget::Meter;
use crate::error::Error;
use crate::loops::{check_loop, LoopReport};
use crate::search::enumerate_automorphisms;

/// A transformation of `M` is an endomorphism of `M` as an Ω₂-algebra.
pub type Transformation = Mapping;

/// How one Ω₁ operation acts on transformations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Interp {
    /// Binary: `(F, G) ↦ F∘G`, i.e. `m ↦ F(G(m))`.
    Compose,
    /// Nullary: the identity transformation δ.
    Identity,
    /// Unary: inverse, defined on bijections only.
    Inverse,
    /// `(F₁..Fₖ) ↦ m ↦ ω₂(F₁(m)..Fₖ(m))` for the given Ω₂ operation index.
    Pointwise(usize),
}

impl Interp {
    pub fn arity(&self, space: &FiniteAlgebra) -> usize {
        match self {
            Interp::Compose => 2,
            Interp::Identity => 0,
            Interp::Inverse => 1,
            Interp::Pointwise(op) => space.signature().arity(*op),
        }
    }
}

/// One [`Interp`] per domain operation, in signature order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OpInterpretation {
    modes: Vec<Interp>,
}

impl OpInterpretation {
    pub fn new(modes: Vec<Interp>) -> Self {
        OpInterpretation { modes }
    }

    pub fn modes(&self) -> &[Interp] {
        &self.modes
    }

    pub fn mode(&self, op: usize) -> &Interp {
        &self.modes[op]
    }

    /// Evaluates operation `op` on transformations of `space`.
    pub fn apply(
        &self,
        op: usize,
        args: &[&Mapping],
        space: &FiniteAlgebra,
    ) -> Result<Mapping, Error> {
        let n = space.size();
        Ok(match &self.modes[op] {
            Interp::Compose => args[0].after(args[1]),
            Interp::Identity => Mapping::identity(n),
            Interp::Inverse => args[0].inverse().ok_or(Error::InverseUndefined { op })?,
            Interp::Pointwise(w) => {
                let image = (0..n)
                    .map(|m| {
                        let at: Vec<usize> = args.iter().map(|t| t.apply(m)).collect();
                        space.apply(*w, &at)
                    })
                    .collect();
                Mapping::new(image, n)?
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepresentationViolation {
    Domain(AlgebraViolation),
    Space(AlgebraViolation),
    InterpretationCount {
        expected: usize,
        found: usize,
    },
    PointwiseUnknown {
        op: usize,
        target: usize,
    },
    ArityMismatch {
        op: usize,
        expected: usize,
        found: usize,
    },
    TableSize {
        expected: usize,
        found: usize,
    },
    TransformationShape {
        element: usize,
    },
    NotTransformation {
        element: usize,
        witness: OpWitness,
    },
    InverseUndefined {
        op: usize,
        args: Vec<usize>,
    },
    LawFails {
        op: usize,
        args: Vec<usize>,
    },
}

impl fmt::Display for RepresentationViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use RepresentationViolation::*;
        match self {
            Domain(v) => write!(f, "domain: {v}"),
            Space(v) => write!(f, "space: {v}"),
            InterpretationCount { expected, found } => {
                write!(
                    f,
                    "{found} interpretations given for {expected} domain operations"
                )
            }
            PointwiseUnknown { op, target } => {
                write!(f, "op #{op} is pointwise over unknown space op #{target}")
            }
            ArityMismatch {
                op,
                expected,
                found,
            } => {
                write!(
                    f,
                    "op #{op} has arity {expected} but its interpretation takes {found}"
                )
            }
            TableSize { expected, found } => {
                write!(f, "action table has {found} rows, expected {expected}")
            }
            TransformationShape { element } => {
                write!(f, "action of {element} is not a self-map of the space")
            }
            NotTransformation { element, witness } => {
                write!(
                    f,
                    "action of {element} is not an endomorphism of the space ({witness})"
                )
            }
            InverseUndefined { op, args } => {
                write!(
                    f,
                    "op #{op} at {args:?} needs the inverse of a non-bijective transformation"
                )
            }
            LawFails { op, args } => write!(f, "homomorphism law fails for op #{op} at {args:?}"),
        }
    }
}

/// A homomorphism from `domain` into the declared structure on `*space`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Representation {
    domain: FiniteAlgebra,
    space: FiniteAlgebra,
    interp: OpInterpretation,
    table: Vec<Transformation>,
}

impl Representation {
    /// Builds and validates; the first violation becomes the error.
    pub fn new(
        domain: FiniteAlgebra,
        space: FiniteAlgebra,
        interp: OpInterpretation,
        table: Vec<Transformation>,
    ) -> Result<Self, Error> {
        let rep = Representation {
            domain,
            space,
            interp,
            table,
        };
        match rep.validate().first() {
            None => Ok(rep),
            Some(v) => Err(Error::InvalidRepresentation(format!("{v}"))),
        }
    }

    pub fn from_parts_unchecked(
        domain: FiniteAlgebra,
        space: FiniteAlgebra,
        interp: OpInterpretation,
        table: Vec<Transformation>,
    ) -> Self {
        Representation {
            domain,
            space,
            interp,
            table,
        }
    }

    /// Builds from an action function `(a, m) ↦ f(a)(m)`, then validates.
    pub fn from_action(
        domain: FiniteAlgebra,
        space: FiniteAlgebra,
        interp: OpInterpretation,
        act: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, Error> {
        let n = space.size();
        let table = (0..domain.size())
            .map(|a| Mapping::new((0..n).map(|m| act(a, m)).collect(), n))
            .collect::<Result<Vec<_>, _>>()?;
        Representation::new(domain, space, interp, table)
    }

    /// The representation `a ↦ g(h(a))` induced by a homomorphism `h: domain → B`.
    pub fn pull_back(
        g: &Representation,
        domain: FiniteAlgebra,
        h: &Mapping,
    ) -> Result<Self, Error> {
        if let Verdict::Fails(w) = check_homomorphism(h, &domain, &g.domain)? {
            return Err(Error::NotHomomorphism(w));
        }
        let table = (0..domain.size())
            .map(|a| g.table[h.apply(a)].clone())
            .collect();
        Representation::new(domain, g.space.clone(), g.interp.clone(), table)
    }

    pub fn domain(&self) -> &FiniteAlgebra {
        &self.domain
    }

    pub fn space(&self) -> &FiniteAlgebra {
        &self.space
    }

    pub fn interp(&self) -> &OpInterpretation {
        &self.interp
    }

    pub fn table(&self) -> &[Transformation] {
        &self.table
    }

    pub fn action(&self, a: usize) -> &Transformation {
        &self.table[a]
    }

    /// `f(a)(m)`.
    pub fn act(&self, a: usize, m: usize) -> usize {
        self.table[a].apply(m)
    }

    /// Lists every violated invariant. Structural problems stop the check
    /// before the law is evaluated.
    pub fn validate(&self) -> Vec<RepresentationViolation> {
        use RepresentationViolation::*;
        let mut out: Vec<_> = self.domain.validate().into_iter().map(Domain).collect();
        out.extend(self.space.validate().into_iter().map(Space));
        if !out.is_empty() {
            return out;
        }
        let dsig = self.domain.signature();
        if self.interp.modes.len() != dsig.len() {
            out.push(InterpretationCount {
                expected: dsig.len(),
                found: self.interp.modes.len(),
            });
            return out;
        }
        for (op, mode) in self.interp.modes.iter().enumerate() {
            if let Interp::Pointwise(t) = mode {
                if *t >= self.space.signature().len() {
                    out.push(PointwiseUnknown { op, target: *t });
                    continue;
                }
            }
            let found = mode.arity(&self.space);
            if found != dsig.arity(op) {
                out.push(ArityMismatch {
                    op,
                    expected: dsig.arity(op),
                    found,
                });
            }
        }
        if self.table.len() != self.domain.size() {
            out.push(TableSize {
                expected: self.domain.size(),
                found: self.table.len(),
            });
        }
        if !out.is_empty() {
            return out;
        }
        let n = self.space.size();
        for (a, t) in self.table.iter().enumerate() {
            if t.source_size() != n || t.target_size() != n {
                out.push(TransformationShape { element: a });
            } else if let Ok(Verdict::Fails(witness)) =
                check_homomorphism(t, &self.space, &self.space)
            {
                out.push(NotTransformation {
                    element: a,
                    witness,
                });
            }
        }
        if !out.is_empty() {
            return out;
        }
        for op in 0..dsig.len() {
            for args in Tuples::new(self.domain.size(), dsig.arity(op)) {
                let acts: Vec<&Mapping> = args.iter().map(|&a| &self.table[a]).collect();
                match self.interp.apply(op, &acts, &self.space) {
                    Err(_) => {
                        out.push(InverseUndefined { op, args });
                        break;
                    }
                    Ok(rhs) => {
                        if self.table[self.domain.apply(op, &args)] != rhs {
                            out.push(LawFails { op, args });
                            break;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// First pair of distinct elements acting identically, if any.
    pub fn effectiveness_witness(&self) -> Option<(usize, usize)> {
        let mut seen: BTreeMap<&Mapping, usize> = BTreeMap::new();
        for (a, t) in self.table.iter().enumerate() {
            if let Some(&b) = seen.get(t) {
                return Some((b, a));
            }
            seen.insert(t, a);
        }
        None
    }

    /// Distinct elements act by distinct transformations.
    pub fn is_effective(&self) -> bool {
        self.effectiveness_witness().is_none()
    }

    /// Number of `a` with `f(a)(from) = to`.
    fn solutions(&self, from: usize, to: usize) -> usize {
        self.table.iter().filter(|t| t.apply(from) == to).count()
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.space.size();
        (0..n).all(|from| (0..n).all(|to| self.solutions(from, to) > 0))
    }

    /// Exactly one acting element for every ordered pair of points.
    pub fn is_single_transitive(&self) -> bool {
        let n = self.space.size();
        (0..n).all(|from| (0..n).all(|to| self.solutions(from, to) == 1))
    }

    /// Distinct transformations in the image, in first-occurrence order, and
    /// the map from domain elements to their position in that list.
    pub fn image(&self) -> (Vec<Transformation>, Mapping) {
        let mut distinct: Vec<Transformation> = Vec::new();
        let mut index: BTreeMap<&Mapping, usize> = BTreeMap::new();
        let mut positions = Vec::with_capacity(self.table.len());
        for t in &self.table {
            let next = index.len();
            let pos = *index.entry(t).or_insert(next);
            if pos == distinct.len() {
                distinct.push(t.clone());
            }
            positions.push(pos);
        }
        let map =
            Mapping::new(positions, distinct.len()).expect("positions index the distinct list");
        (distinct, map)
    }

    /// Whether `set` is closed under the space operations and under every action.
    pub fn is_stable(&self, set: &ElemSet) -> bool {
        self.space.is_closed(set)
            && self
                .table
                .iter()
                .all(|t| set.iter().all(|&x| set.contains(&t.apply(x))))
    }
}

/// Checks `m₁ ≡ m₂ ⇒ t(m₁) ≡ t(m₂)`.
pub fn is_coordinated(t: &Transformation, equivalence: &Partition) -> bool {
    coordination_witness(t, equivalence).is_none()
}

fn coordination_witness(t: &Transformation, equivalence: &Partition) -> Option<(usize, usize)> {
    for block in equivalence.blocks() {
        let first = block[0];
        for &other in &block[1..] {
            if !equivalence.same(t.apply(first), t.apply(other)) {
                return Some((first, other));
            }
        }
    }
    None
}

/// A pair `(r, R)` of maps between the domains and between the spaces.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RepMorphism {
    pub domain_map: Mapping,
    pub space_map: Mapping,
}

impl RepMorphism {
    pub fn new(domain_map: Mapping, space_map: Mapping) -> Self {
        RepMorphism {
            domain_map,
            space_map,
        }
    }

    pub fn identity(rep: &Representation) -> Self {
        RepMorphism {
            domain_map: Mapping::identity(rep.domain.size()),
            space_map: Mapping::identity(rep.space.size()),
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        Some(RepMorphism {
            domain_map: self.domain_map.inverse()?,
            space_map: self.space_map.inverse()?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MorphismFailure {
    DomainNotHomomorphism(OpWitness),
    SpaceNotHomomorphism(OpWitness),
    /// `R(f(a)(m)) ≠ g(r(a))(R(m))`.
    Commutation {
        element: usize,
        point: usize,
    },
}

impl fmt::Display for MorphismFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MorphismFailure::DomainNotHomomorphism(w) => {
                write!(f, "domain map is not a homomorphism ({w})")
            }
            MorphismFailure::SpaceNotHomomorphism(w) => {
                write!(f, "space map is not a homomorphism ({w})")
            }
            MorphismFailure::Commutation { element, point } => {
                write!(
                    f,
                    "square does not commute at element {element}, point {point}"
                )
            }
        }
    }
}

/// Checks all three morphism conditions exhaustively.
pub fn validate_morphism(
    m: &RepMorphism,
    src: &Representation,
    dst: &Representation,
) -> Result<Verdict<MorphismFailure>, Error> {
    if let Verdict::Fails(w) = check_homomorphism(&m.domain_map, &src.domain, &dst.domain)? {
        return Ok(Verdict::Fails(MorphismFailure::DomainNotHomomorphism(w)));
    }
    if let Verdict::Fails(w) = check_homomorphism(&m.space_map, &src.space, &dst.space)? {
        return Ok(Verdict::Fails(MorphismFailure::SpaceNotHomomorphism(w)));
    }
    Ok(commutation(m, src, dst))
}

fn commutation(
    m: &RepMorphism,
    src: &Representation,
    dst: &Representation,
) -> Verdict<MorphismFailure> {
    for a in 0..src.domain.size() {
        let ra = m.domain_map.apply(a);
        for point in 0..src.space.size() {
            if m.space_map.apply(src.act(a, point)) != dst.act(ra, m.space_map.apply(point)) {
                return Verdict::Fails(MorphismFailure::Commutation { element: a, point });
            }
        }
    }
    Verdict::Holds
}

/// `(q∘p, Q∘P)` for `first = (p, P)` followed by `second = (q, Q)`.
pub fn compose_morphisms(first: &RepMorphism, second: &RepMorphism) -> Result<RepMorphism, Error> {
    if first.domain_map.target_size() != second.domain_map.source_size()
        || first.space_map.target_size() != second.space_map.source_size()
    {
        return Err(Error::ChainMismatch);
    }
    Ok(RepMorphism {
        domain_map: second.domain_map.after(&first.domain_map),
        space_map: second.space_map.after(&first.space_map),
    })
}

/// The map `*H: f(a) ↦ g(h(a))` on transformation images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarLift {
    pub source_images: Vec<Transformation>,
    pub target_images: Vec<Transformation>,
    /// Position in `source_images` to position in `target_images`.
    pub map: Mapping,
    /// Whether every interpreted Ω₁ operation is preserved; witnesses are
    /// domain tuples.
    pub preserves_ops: Verdict<OpWitness>,
}

impl StarLift {
    pub fn lift(&self, t: &Transformation) -> Option<&Transformation> {
        let pos = self.source_images.iter().position(|s| s == t)?;
        Some(&self.target_images[self.map.apply(pos)])
    }
}

/// Requires `src` to be effective, otherwise the lift may be ill-defined.
pub fn star_lift(
    m: &RepMorphism,
    src: &Representation,
    dst: &Representation,
) -> Result<StarLift, Error> {
    if let Some((first, second)) = src.effectiveness_witness() {
        return Err(Error::NotEffective { first, second });
    }
    if src.domain.signature() != dst.domain.signature() {
        return Err(Error::SignatureMismatch);
    }
    let (source_images, src_pos) = src.image();
    let (target_images, dst_pos) = dst.image();
    let map = Mapping::new(
        (0..src.domain.size())
            .map(|a| dst_pos.apply(m.domain_map.apply(a)))
            .collect(),
        target_images.len(),
    )?;
    debug_assert_eq!(src_pos, Mapping::identity(src.domain.size()));

    let sig = src.domain.signature();
    let mut preserves_ops = Verdict::Holds;
    'ops: for op in 0..sig.len() {
        for args in Tuples::new(src.domain.size(), sig.arity(op)) {
            let acts: Vec<&Mapping> = args.iter().map(|&a| &source_images[a]).collect();
            let lifted: Vec<&Mapping> =
                args.iter().map(|&a| &target_images[map.apply(a)]).collect();
            let lhs = src
                .interp
                .apply(op, &acts, &src.space)
                .ok()
                .and_then(|t| source_images.iter().position(|s| *s == t))
                .map(|pos| &target_images[map.apply(pos)]);
            let rhs = dst.interp.apply(op, &lifted, &dst.space).ok();
            if lhs.is_none() || lhs != rhs.as_ref() {
                preserves_ops = Verdict::Fails(OpWitness { op, args });
                break 'ops;
            }
        }
    }
    Ok(StarLift {
        source_images,
        target_images,
        map,
        preserves_ops,
    })
}

/// The representation of `A/s` on `M/S` with `F(j(a))(J(m)) = J(f(a)(m))`.
///
/// `space_eq` must also be a congruence of the space so that `M/S` carries
/// the Ω₂ operations the interpretation may refer to.
pub fn quotient_representation(
    rep: &Representation,
    space_eq: &Partition,
    domain_cong: &Congruence,
) -> Result<Representation, Error> {
    if space_eq.size() != rep.space.size() {
        return Err(Error::SizeMismatch {
            expected: rep.space.size(),
            found: space_eq.size(),
        });
    }
    for (a, t) in rep.table.iter().enumerate() {
        if let Some((first, second)) = coordination_witness(t, space_eq) {
            return Err(Error::NotCoordinated {
                domain: a,
                first,
                second,
            });
        }
    }
    let space_cong = Congruence::new(&rep.space, space_eq.clone())?;
    let (dom_q, _) = quotient_algebra(&rep.domain, domain_cong)?;
    let (space_q, big_j) = quotient_algebra(&rep.space, &space_cong)?;

    let space_reps = space_eq.representatives();
    for block in domain_cong.partition().blocks() {
        let first = block[0];
        for &second in &block[1..] {
            for &point in &space_reps {
                if big_j.apply(rep.act(first, point)) != big_j.apply(rep.act(second, point)) {
                    return Err(Error::ClassesActDifferently {
                        first,
                        second,
                        point,
                    });
                }
            }
        }
    }
    let dom_reps = domain_cong.partition().representatives();
    Representation::from_action(dom_q, space_q, rep.interp.clone(), |b, c| {
        big_j.apply(rep.act(dom_reps[b], space_reps[c]))
    })
}

/// Checks attached to a [`Decomposition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionReport {
    /// `r = i∘t∘j` elementwise.
    pub domain_factors: bool,
    /// `R = I∘T∘J` elementwise.
    pub space_factors: bool,
    pub projections_surjective: bool,
    pub t_bijective: bool,
    pub big_t_bijective: bool,
    pub inclusions_injective: bool,
    /// `(j, J)` from `f` to `F`.
    pub projection_morphism: Verdict<MorphismFailure>,
    /// `(t, T)` from `F` to `G`.
    pub bijection_morphism: Verdict<MorphismFailure>,
    /// `(t⁻¹, T⁻¹)` from `G` to `F`.
    pub inverse_morphism: Verdict<MorphismFailure>,
    /// `(i, I)` from `G` to `g`.
    pub inclusion_morphism: Verdict<MorphismFailure>,
}

impl DecompositionReport {
    pub fn all_hold(&self) -> bool {
        self.domain_factors
            && self.space_factors
            && self.projections_surjective
            && self.t_bijective
            && self.big_t_bijective
            && self.inclusions_injective
            && self.projection_morphism.holds()
            && self.bijection_morphism.holds()
            && self.inverse_morphism.holds()
            && self.inclusion_morphism.holds()
    }
}

/// Factorisation of a morphism `(r, R)` through kernels and images.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub domain_kernel: Congruence,
    pub space_kernel: Partition,
    pub j: Mapping,
    pub t: Mapping,
    pub i: Mapping,
    pub big_j: Mapping,
    pub big_t: Mapping,
    pub big_i: Mapping,
    /// `F`, the representation of `A/s` on `M/S`.
    pub quotient: Representation,
    /// `G`, the representation of `r(A)` on `R(M)`.
    pub image: Representation,
    pub report: DecompositionReport,
}

pub fn decompose_morphism(
    m: &RepMorphism,
    src: &Representation,
    dst: &Representation,
) -> Result<Decomposition, Error> {
    if let Verdict::Fails(why) = validate_morphism(m, src, dst)? {
        return Err(Error::InvalidMorphism(format!("{why}")));
    }
    let (r, big_r) = (&m.domain_map, &m.space_map);
    let domain_kernel = kernel_congruence(r, &src.domain, &dst.domain)?;
    let space_kernel = kernel_congruence(big_r, &src.space, &dst.space)?.into_partition();
    let quotient = quotient_representation(src, &space_kernel, &domain_kernel)?;
    let j = domain_kernel.partition().projection();
    let big_j = space_kernel.projection();

    let (sub_b, i) = dst.domain.subalgebra(&r.image_set())?;
    let (sub_n, big_i) = dst.space.subalgebra(&big_r.image_set())?;
    let pos_b: BTreeMap<usize, usize> =
        i.image().iter().enumerate().map(|(k, &x)| (x, k)).collect();
    let pos_n: BTreeMap<usize, usize> = big_i
        .image()
        .iter()
        .enumerate()
        .map(|(k, &x)| (x, k))
        .collect();
    let image = Representation::from_action(sub_b, sub_n, dst.interp.clone(), |b, n| {
        pos_n[&dst.act(i.apply(b), big_i.apply(n))]
    })?;

    let t = Mapping::new(
        domain_kernel
            .partition()
            .representatives()
            .iter()
            .map(|&a| pos_b[&r.apply(a)])
            .collect(),
        i.source_size(),
    )?;
    let big_t = Mapping::new(
        space_kernel
            .representatives()
            .iter()
            .map(|&x| pos_n[&big_r.apply(x)])
            .collect(),
        big_i.source_size(),
    )?;

    let projection = RepMorphism::new(j.clone(), big_j.clone());
    let bijection = RepMorphism::new(t.clone(), big_t.clone());
    let inclusion = RepMorphism::new(i.clone(), big_i.clone());
    let inverse_morphism = match bijection.inverse() {
        Some(inv) => validate_morphism(&inv, &image, &quotient)?,
        None => Verdict::Fails(MorphismFailure::Commutation {
            element: 0,
            point: 0,
        }),
    };
    let report = DecompositionReport {
        domain_factors: i.after(&t).after(&j) == *r,
        space_factors: big_i.after(&big_t).after(&big_j) == *big_r,
        projections_surjective: j.is_surjective() && big_j.is_surjective(),
        t_bijective: t.is_bijective(),
        big_t_bijective: big_t.is_bijective(),
        inclusions_injective: i.is_injective() && big_i.is_injective(),
        projection_morphism: validate_morphism(&projection, src, &quotient)?,
        bijection_morphism: validate_morphism(&bijection, &quotient, &image)?,
        inverse_morphism,
        inclusion_morphism: validate_morphism(&inclusion, &image, dst)?,
    };
    Ok(Decomposition {
        domain_kernel,
        space_kernel,
        j,
        t,
        i,
        big_j,
        big_t,
        big_i,
        quotient,
        image,
        report,
    })
}

/// Automorphisms of a representation together with their loop check.
#[derive(Debug, Clone)]
pub struct AutomorphismLoop {
    pub members: Vec<RepMorphism>,
    pub report: LoopReport,
}

/// Every `(r, R)` with `r ∈ Aut(A)`, `R ∈ Aut(M)` and a commuting square.
pub fn automorphism_loop(
    rep: &Representation,
    meter: &mut Meter<'_>,
) -> Result<AutomorphismLoop, Error> {
    let auts_domain = enumerate_automorphisms(&rep.domain, meter)?;
    let auts_space = enumerate_automorphisms(&rep.space, meter)?;
    let mut members = Vec::new();
    for r in &auts_domain {
        for big_r in &auts_space {
            meter.tick()?;
            let pair = RepMorphism::new(r.clone(), big_r.clone());
            if commutation(&pair, rep, rep).holds() {
                members.push(pair);
            }
        }
    }
    let identity = RepMorphism::identity(rep);
    let report = check_loop(&members, &identity, |p, q| {
        compose_morphisms(q, p).expect("automorphisms of one representation chain")
    });
    Ok(AutomorphismLoop { members, report })
}

/// For single-transitive `f`, the map `H` with `H(f(a)(m)) = g(h(a))(n)`.
///
/// The caller chooses the base points `m` and `n`; the result is only a
/// candidate and should be checked with [`validate_morphism`].
pub fn transported_morphism(
    f: &Representation,
    g: &Representation,
    h: &Mapping,
    m: usize,
    n: usize,
) -> Result<RepMorphism, Error> {
    if !f.is_single_transitive() {
        return Err(Error::InvalidRepresentation(
            "source is not single transitive".into(),
        ));
    }
    let image = (0..f.space.size())
        .map(|target| {
            let a = (0..f.domain.size())
                .find(|&a| f.act(a, m) == target)
                .expect("transitive");
            g.act(h.apply(a), n)
        })
        .collect();
    Ok(RepMorphism::new(
        h.clone(),
        Mapping::new(image, g.space.size())?,
    ))
}
