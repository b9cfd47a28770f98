//! Finite Ω-algebras as total operation tables.
//!
//! Elements are dense indices `0..n`. An operation of arity `k` is stored as
//! a flat table of `n^k` results; argument tuples are laid out in
//! lexicographic order with the first argument most significant.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

pub type ElemSet = BTreeSet<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpDecl {
    pub symbol: String,
    pub arity: usize,
}

impl OpDecl {
    pub fn new(symbol: impl Into<String>, arity: usize) -> Self {
        OpDecl {
            symbol: symbol.into(),
            arity,
        }
    }
}

/// An ordered list of operation symbols with arities.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Signature {
    ops: Vec<OpDecl>,
}

impl Signature {
    /// Builds a signature, rejecting repeated symbols.
    pub fn new(ops: Vec<OpDecl>) -> Result<Self, Error> {
        let mut seen = BTreeSet::new();
        for op in &ops {
            if !seen.insert(op.symbol.as_str()) {
                return Err(Error::SignatureMismatch);
            }
        }
        Ok(Signature { ops })
    }

    pub fn empty() -> Self {
        Signature { ops: Vec::new() }
    }

    pub fn ops(&self) -> &[OpDecl] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn arity(&self, op: usize) -> usize {
        self.ops[op].arity
    }

    pub fn symbol(&self, op: usize) -> &str {
        &self.ops[op].symbol
    }

    pub fn index_of(&self, symbol: &str) -> Option<usize> {
        self.ops.iter().position(|o| o.symbol == symbol)
    }
}

/// Odometer over all `arity`-tuples of `0..size`, in table order.
#[derive(Debug, Clone)]
pub struct Tuples {
    size: usize,
    current: Vec<usize>,
    done: bool,
}

impl Tuples {
    pub fn new(size: usize, arity: usize) -> Self {
        Tuples {
            size,
            current: vec![0; arity],
            done: size == 0 && arity > 0,
        }
    }
}

impl Iterator for Tuples {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let mut pos = self.current.len();
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            self.current[pos] += 1;
            if self.current[pos] < self.size {
                break;
            }
            self.current[pos] = 0;
        }
        Some(out)
    }
}

/// Position of `args` in a table over a carrier of `size` elements.
pub fn tuple_index(size: usize, args: &[usize]) -> usize {
    args.iter().fold(0, |acc, &a| acc * size + a)
}

pub fn table_len(size: usize, arity: usize) -> usize {
    size.pow(arity as u32)
}

/// A counterexample tuple for an operation-preservation law.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OpWitness {
    pub op: usize,
    pub args: Vec<usize>,
}

impl fmt::Display for OpWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "op #{} at {:?}", self.op, self.args)
    }
}

/// Outcome of an exhaustive check: either the law holds or a witness is found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Fails(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }

    pub fn map<V>(self, f: impl FnOnce(W) -> V) -> Verdict<V> {
        match self {
            Verdict::Holds => Verdict::Holds,
            Verdict::Fails(w) => Verdict::Fails(f(w)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraViolation {
    TableLength {
        op: usize,
        expected: usize,
        found: usize,
    },
    EntryOutOfRange {
        op: usize,
        position: usize,
        entry: usize,
    },
    EmptyCarrierWithConstant {
        op: usize,
    },
}

impl fmt::Display for AlgebraViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraViolation::TableLength {
                op,
                expected,
                found,
            } => {
                write!(
                    f,
                    "table of op #{op} has {found} entries, expected {expected}"
                )
            }
            AlgebraViolation::EntryOutOfRange {
                op,
                position,
                entry,
            } => {
                write!(
                    f,
                    "entry out of range: op #{op} position {position} holds {entry}"
                )
            }
            AlgebraViolation::EmptyCarrierWithConstant { op } => {
                write!(f, "nullary op #{op} on an empty carrier")
            }
        }
    }
}

/// A finite carrier `0..size` with one total table per signature operation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteAlgebra {
    signature: Signature,
    size: usize,
    tables: Vec<Vec<usize>>,
}

impl FiniteAlgebra {
    /// Builds an algebra without checking the tables. Use [`validate`] before
    /// handing the result to any other operation.
    ///
    /// [`validate`]: FiniteAlgebra::validate
    pub fn from_tables_unchecked(
        signature: Signature,
        size: usize,
        tables: Vec<Vec<usize>>,
    ) -> Self {
        FiniteAlgebra {
            signature,
            size,
            tables,
        }
    }

    pub fn new(signature: Signature, size: usize, tables: Vec<Vec<usize>>) -> Result<Self, Error> {
        if tables.len() != signature.len() {
            return Err(Error::SizeMismatch {
                expected: signature.len(),
                found: tables.len(),
            });
        }
        let alg = FiniteAlgebra {
            signature,
            size,
            tables,
        };
        match alg.validate().into_iter().next() {
            None => Ok(alg),
            Some(AlgebraViolation::TableLength {
                expected, found, ..
            }) => Err(Error::SizeMismatch { expected, found }),
            Some(AlgebraViolation::EntryOutOfRange { entry, .. }) => {
                Err(Error::ElementOutOfRange {
                    element: entry,
                    size: alg.size,
                })
            }
            Some(AlgebraViolation::EmptyCarrierWithConstant { .. }) => {
                Err(Error::ElementOutOfRange {
                    element: 0,
                    size: 0,
                })
            }
        }
    }

    /// A bare set with no operations.
    pub fn set(size: usize) -> Self {
        FiniteAlgebra {
            signature: Signature::empty(),
            size,
            tables: Vec::new(),
        }
    }

    /// Builds an algebra by evaluating `f(op, args)` on every tuple.
    pub fn from_fn(
        signature: Signature,
        size: usize,
        mut f: impl FnMut(usize, &[usize]) -> usize,
    ) -> Self {
        let tables = (0..signature.len())
            .map(|op| {
                Tuples::new(size, signature.arity(op))
                    .map(|args| f(op, &args))
                    .collect()
            })
            .collect();
        FiniteAlgebra {
            signature,
            size,
            tables,
        }
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn table(&self, op: usize) -> &[usize] {
        &self.tables[op]
    }

    pub fn apply(&self, op: usize, args: &[usize]) -> usize {
        self.tables[op][tuple_index(self.size, args)]
    }

    pub fn op_index(&self, symbol: &str) -> Option<usize> {
        self.signature.index_of(symbol)
    }

    /// Values of all nullary operations.
    pub fn constants(&self) -> ElemSet {
        (0..self.signature.len())
            .filter(|&op| self.signature.arity(op) == 0)
            .map(|op| self.tables[op][0])
            .collect()
    }

    /// Lists every violated table invariant; empty means valid.
    pub fn validate(&self) -> Vec<AlgebraViolation> {
        let mut out = Vec::new();
        for (op, decl) in self.signature.ops().iter().enumerate() {
            let table = self.tables.get(op).map(Vec::as_slice).unwrap_or(&[]);
            if decl.arity == 0 && self.size == 0 {
                out.push(AlgebraViolation::EmptyCarrierWithConstant { op });
                continue;
            }
            let expected = table_len(self.size, decl.arity);
            if table.len() != expected {
                out.push(AlgebraViolation::TableLength {
                    op,
                    expected,
                    found: table.len(),
                });
            }
            for (position, &entry) in table.iter().enumerate() {
                if entry >= self.size {
                    out.push(AlgebraViolation::EntryOutOfRange {
                        op,
                        position,
                        entry,
                    });
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Least subset containing `seed` and closed under all operations.
    pub fn subalgebra_closure(&self, seed: &ElemSet) -> ElemSet {
        let mut set: ElemSet = seed.iter().copied().filter(|&x| x < self.size).collect();
        set.extend(self.constants());
        loop {
            let members: Vec<usize> = set.iter().copied().collect();
            let mut grew = false;
            for op in 0..self.signature.len() {
                let arity = self.signature.arity(op);
                if arity == 0 {
                    continue;
                }
                for idx in Tuples::new(members.len(), arity) {
                    let args: Vec<usize> = idx.iter().map(|&i| members[i]).collect();
                    grew |= set.insert(self.apply(op, &args));
                }
            }
            if !grew {
                return set;
            }
        }
    }

    /// Whether `set` is closed under every operation.
    pub fn is_closed(&self, set: &ElemSet) -> bool {
        let members: Vec<usize> = set.iter().copied().collect();
        (0..self.signature.len()).all(|op| {
            Tuples::new(members.len(), self.signature.arity(op)).all(|idx| {
                let args: Vec<usize> = idx.iter().map(|&i| members[i]).collect();
                set.contains(&self.apply(op, &args))
            })
        })
    }

    /// The subalgebra on a closed subset, re-indexed in ascending order,
    /// together with its inclusion map.
    pub fn subalgebra(&self, set: &ElemSet) -> Result<(FiniteAlgebra, Mapping), Error> {
        if !self.is_closed(set) {
            return Err(Error::NotClosed);
        }
        let members: Vec<usize> = set.iter().copied().collect();
        let position: BTreeMap<usize, usize> =
            members.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let sub = FiniteAlgebra::from_fn(self.signature.clone(), members.len(), |op, args| {
            let lifted: Vec<usize> = args.iter().map(|&a| members[a]).collect();
            position[&self.apply(op, &lifted)]
        });
        let inclusion = Mapping {
            image: members,
            target_size: self.size,
        };
        Ok((sub, inclusion))
    }

    /// Direct product; element `(x, y)` has index `x * other.size + y`.
    pub fn product(&self, other: &FiniteAlgebra) -> Result<FiniteAlgebra, Error> {
        if self.signature != other.signature {
            return Err(Error::SignatureMismatch);
        }
        let n = other.size;
        Ok(FiniteAlgebra::from_fn(
            self.signature.clone(),
            self.size * n,
            |op, args| {
                let left: Vec<usize> = args.iter().map(|&a| a / n).collect();
                let right: Vec<usize> = args.iter().map(|&a| a % n).collect();
                self.apply(op, &left) * n + other.apply(op, &right)
            },
        ))
    }
}

/// A total map between carriers `0..source_size` and `0..target_size`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mapping {
    image: Vec<usize>,
    target_size: usize,
}

impl Mapping {
    pub fn new(image: Vec<usize>, target_size: usize) -> Result<Self, Error> {
        if let Some(&bad) = image.iter().find(|&&x| x >= target_size) {
            return Err(Error::ElementOutOfRange {
                element: bad,
                size: target_size,
            });
        }
        Ok(Mapping { image, target_size })
    }

    pub fn identity(size: usize) -> Self {
        Mapping {
            image: (0..size).collect(),
            target_size: size,
        }
    }

    pub fn constant(source_size: usize, target_size: usize, value: usize) -> Self {
        Mapping {
            image: vec![value; source_size],
            target_size,
        }
    }

    pub fn source_size(&self) -> usize {
        self.image.len()
    }

    pub fn target_size(&self) -> usize {
        self.target_size
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    /// `self ∘ inner`: first `inner`, then `self`.
    pub fn after(&self, inner: &Mapping) -> Mapping {
        Mapping {
            image: inner.image.iter().map(|&x| self.image[x]).collect(),
            target_size: self.target_size,
        }
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target_size];
        self.image
            .iter()
            .all(|&x| !core::mem::replace(&mut seen[x], true))
    }

    pub fn is_surjective(&self) -> bool {
        self.image_set().len() == self.target_size
    }

    pub fn is_bijective(&self) -> bool {
        self.image.len() == self.target_size && self.is_injective()
    }

    pub fn inverse(&self) -> Option<Mapping> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.target_size];
        for (x, &y) in self.image.iter().enumerate() {
            inv[y] = x;
        }
        Some(Mapping {
            image: inv,
            target_size: self.image.len(),
        })
    }

    pub fn image_set(&self) -> ElemSet {
        self.image.iter().copied().collect()
    }

    pub fn is_identity(&self) -> bool {
        self.target_size == self.image.len() && self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn image_of_set(&self, set: &ElemSet) -> ElemSet {
        set.iter().map(|&x| self.image[x]).collect()
    }
}

/// Checks `h(ω(a₁..aₖ)) = ω(h(a₁)..h(aₖ))` on every operation and tuple.
pub fn check_homomorphism(
    h: &Mapping,
    src: &FiniteAlgebra,
    dst: &FiniteAlgebra,
) -> Result<Verdict<OpWitness>, Error> {
    if src.signature != dst.signature {
        return Err(Error::SignatureMismatch);
    }
    if h.source_size() != src.size {
        return Err(Error::SizeMismatch {
            expected: src.size,
            found: h.source_size(),
        });
    }
    if h.target_size() != dst.size {
        return Err(Error::SizeMismatch {
            expected: dst.size,
            found: h.target_size(),
        });
    }
    for op in 0..src.signature.len() {
        for args in Tuples::new(src.size, src.signature.arity(op)) {
            let mapped: Vec<usize> = args.iter().map(|&a| h.apply(a)).collect();
            if h.apply(src.apply(op, &args)) != dst.apply(op, &mapped) {
                return Ok(Verdict::Fails(OpWitness { op, args }));
            }
        }
    }
    Ok(Verdict::Holds)
}

pub fn is_homomorphism(
    h: &Mapping,
    src: &FiniteAlgebra,
    dst: &FiniteAlgebra,
) -> Result<bool, Error> {
    check_homomorphism(h, src, dst).map(|v| v.holds())
}

/// An equivalence relation on `0..n`, stored as canonical block ids
/// (blocks numbered by first occurrence).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    blocks: Vec<usize>,
}

impl Partition {
    /// Accepts arbitrary labels per element and renumbers them canonically.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut renumber = BTreeMap::new();
        let blocks = labels
            .iter()
            .map(|l| {
                let next = renumber.len();
                *renumber.entry(*l).or_insert(next)
            })
            .collect();
        Partition { blocks }
    }

    pub fn discrete(size: usize) -> Self {
        Partition {
            blocks: (0..size).collect(),
        }
    }

    pub fn total(size: usize) -> Self {
        Partition {
            blocks: vec![0; size],
        }
    }

    pub fn kernel_of(h: &Mapping) -> Self {
        Partition::from_labels(h.image())
    }

    pub fn size(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.blocks[x]
    }

    pub fn block_ids(&self) -> &[usize] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.iter().max().map_or(0, |m| m + 1)
    }

    pub fn same(&self, x: usize, y: usize) -> bool {
        self.blocks[x] == self.blocks[y]
    }

    /// Blocks as ascending element lists, in block-id order.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.block_count()];
        for (x, &b) in self.blocks.iter().enumerate() {
            out[b].push(x);
        }
        out
    }

    /// Smallest member of each block.
    pub fn representatives(&self) -> Vec<usize> {
        self.blocks().into_iter().map(|b| b[0]).collect()
    }

    /// The natural map onto the block ids.
    pub fn projection(&self) -> Mapping {
        Mapping {
            image: self.blocks.clone(),
            target_size: self.block_count(),
        }
    }

    /// First pair of blockwise-equal tuples whose results fall in different blocks.
    pub fn find_incompatibility(
        &self,
        alg: &FiniteAlgebra,
    ) -> Option<(usize, Vec<usize>, Vec<usize>)> {
        let blocks = self.blocks();
        for op in 0..alg.signature().len() {
            let arity = alg.signature().arity(op);
            for args in Tuples::new(alg.size(), arity) {
                let base = self.blocks[alg.apply(op, &args)];
                for pos in 0..arity {
                    for &y in &blocks[self.blocks[args[pos]]] {
                        let mut other = args.clone();
                        other[pos] = y;
                        if self.blocks[alg.apply(op, &other)] != base {
                            return Some((op, args, other));
                        }
                    }
                }
            }
        }
        None
    }
}

/// A partition compatible with every operation of an algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Congruence {
    partition: Partition,
}

impl Congruence {
    pub fn new(alg: &FiniteAlgebra, partition: Partition) -> Result<Self, Error> {
        if partition.size() != alg.size() {
            return Err(Error::SizeMismatch {
                expected: alg.size(),
                found: partition.size(),
            });
        }
        if let Some((op, left, right)) = partition.find_incompatibility(alg) {
            return Err(Error::Incompatible { op, left, right });
        }
        Ok(Congruence { partition })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn into_partition(self) -> Partition {
        self.partition
    }
}

/// The partition into preimage classes of a homomorphism `h: src → dst`.
pub fn kernel_congruence(
    h: &Mapping,
    src: &FiniteAlgebra,
    dst: &FiniteAlgebra,
) -> Result<Congruence, Error> {
    if let Verdict::Fails(w) = check_homomorphism(h, src, dst)? {
        return Err(Error::NotHomomorphism(w));
    }
    Congruence::new(src, Partition::kernel_of(h))
}

/// `alg / c` on block ids, with the natural projection.
pub fn quotient_algebra(
    alg: &FiniteAlgebra,
    c: &Congruence,
) -> Result<(FiniteAlgebra, Mapping), Error> {
    let p = c.partition();
    if p.size() != alg.size() {
        return Err(Error::SizeMismatch {
            expected: alg.size(),
            found: p.size(),
        });
    }
    if let Some((op, left, right)) = p.find_incompatibility(alg) {
        return Err(Error::Incompatible { op, left, right });
    }
    let reps = p.representatives();
    let quotient = FiniteAlgebra::from_fn(alg.signature().clone(), reps.len(), |op, args| {
        let lifted: Vec<usize> = args.iter().map(|&b| reps[b]).collect();
        p.block_of(alg.apply(op, &lifted))
    });
    Ok((quotient, p.projection()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn zn(n: usize) -> FiniteAlgebra {
        let sig = Signature::new(vec![OpDecl::new("+", 2)]).unwrap();
        FiniteAlgebra::from_fn(sig, n, |_, a| (a[0] + a[1]) % n)
    }

    fn zn_with_one(n: usize) -> FiniteAlgebra {
        let sig = Signature::new(vec![OpDecl::new("+", 2), OpDecl::new("1", 0)]).unwrap();
        FiniteAlgebra::from_fn(
            sig,
            n,
            |op, a| if op == 0 { (a[0] + a[1]) % n } else { 1 % n },
        )
    }

    #[test]
    fn tuples_enumerate_in_table_order() {
        let all: Vec<_> = Tuples::new(2, 2).collect();
        assert_eq!(all, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(Tuples::new(3, 0).count(), 1);
        assert_eq!(Tuples::new(0, 1).count(), 0);
    }

    #[test]
    fn z3_is_valid() {
        assert!(zn(3).validate().is_empty());
    }

    #[test]
    fn entry_out_of_range_reported() {
        let sig = Signature::new(vec![OpDecl::new("+", 2)]).unwrap();
        let mut table: Vec<usize> = Tuples::new(3, 2).map(|a| (a[0] + a[1]) % 3).collect();
        table[4] = 5;
        let alg = FiniteAlgebra::from_tables_unchecked(sig, 3, vec![table]);
        let v = alg.validate();
        assert_eq!(
            v,
            vec![AlgebraViolation::EntryOutOfRange {
                op: 0,
                position: 4,
                entry: 5
            }]
        );
        assert!(v[0].to_string().contains("entry out of range"));
    }

    #[test]
    fn nullary_constant_is_valid() {
        let sig = Signature::new(vec![OpDecl::new("e", 0)]).unwrap();
        let alg = FiniteAlgebra::new(sig, 3, vec![vec![0]]).unwrap();
        assert_eq!(alg.constants(), ElemSet::from([0]));
    }

    #[test]
    fn truncated_table_reported() {
        let sig = Signature::new(vec![OpDecl::new("+", 2)]).unwrap();
        let alg = FiniteAlgebra::from_tables_unchecked(sig, 3, vec![vec![0; 8]]);
        assert_eq!(
            alg.validate(),
            vec![AlgebraViolation::TableLength {
                op: 0,
                expected: 9,
                found: 8
            }]
        );
    }

    #[test]
    fn duplicate_symbols_rejected() {
        assert!(Signature::new(vec![OpDecl::new("+", 2), OpDecl::new("+", 1)]).is_err());
    }

    #[test]
    fn homomorphisms_of_z3() {
        let z3 = zn(3);
        assert!(is_homomorphism(&Mapping::identity(3), &z3, &z3).unwrap());
        let double = Mapping::new(vec![0, 2, 1], 3).unwrap();
        assert!(is_homomorphism(&double, &z3, &z3).unwrap());
        let z3e = zn_with_one(3);
        let zero = Mapping::constant(3, 3, 0);
        let verdict = check_homomorphism(&zero, &z3e, &z3e).unwrap();
        assert_eq!(
            verdict,
            Verdict::Fails(OpWitness {
                op: 1,
                args: vec![]
            })
        );
    }

    #[test]
    fn signature_mismatch_is_an_error() {
        assert_eq!(
            check_homomorphism(&Mapping::identity(3), &zn(3), &zn_with_one(3)),
            Err(Error::SignatureMismatch)
        );
    }

    #[test]
    fn kernels() {
        let z3 = zn(3);
        let k = kernel_congruence(&Mapping::identity(3), &z3, &z3).unwrap();
        assert_eq!(k.partition().block_count(), 3);
        let trivial = FiniteAlgebra::from_fn(z3.signature().clone(), 1, |_, _| 0);
        let k = kernel_congruence(&Mapping::constant(3, 1, 0), &z3, &trivial).unwrap();
        assert_eq!(k.partition().blocks(), vec![vec![0, 1, 2]]);
        let not_hom = Mapping::new(vec![0, 0, 1], 3).unwrap();
        assert!(matches!(
            kernel_congruence(&not_hom, &z3, &z3),
            Err(Error::NotHomomorphism(_))
        ));
    }

    #[test]
    fn z6_mod_parity_is_z2() {
        let z6 = zn(6);
        let c = Congruence::new(&z6, Partition::from_labels(&[0, 1, 0, 1, 0, 1])).unwrap();
        let (q, proj) = quotient_algebra(&z6, &c).unwrap();
        assert_eq!(q, zn(2));
        assert!(is_homomorphism(&proj, &z6, &q).unwrap());
        assert!(proj.is_surjective());
    }

    #[test]
    fn quotient_extremes() {
        let z3 = zn(3);
        let (q, _) =
            quotient_algebra(&z3, &Congruence::new(&z3, Partition::discrete(3)).unwrap()).unwrap();
        assert_eq!(q, z3);
        let (q, _) =
            quotient_algebra(&z3, &Congruence::new(&z3, Partition::total(3)).unwrap()).unwrap();
        assert_eq!(q.size(), 1);
    }

    #[test]
    fn incompatible_partition_rejected() {
        let z3 = zn(3);
        let err = Congruence::new(&z3, Partition::from_labels(&[0, 0, 1])).unwrap_err();
        assert!(matches!(err, Error::Incompatible { op: 0, .. }));
    }

    #[test]
    fn closure_examples() {
        let z3 = zn(3);
        assert_eq!(
            z3.subalgebra_closure(&ElemSet::from([1])),
            ElemSet::from([0, 1, 2])
        );
        let all: ElemSet = (0..3).collect();
        assert_eq!(z3.subalgebra_closure(&all), all);
        assert!(z3.subalgebra_closure(&ElemSet::new()).is_empty());
    }

    #[test]
    fn mapping_inverse_and_composition() {
        let m = Mapping::new(vec![2, 0, 1], 3).unwrap();
        let inv = m.inverse().unwrap();
        assert!(m.after(&inv).is_identity());
        assert!(inv.after(&m).is_identity());
        assert!(Mapping::constant(2, 2, 0).inverse().is_none());
        assert!(Mapping::new(vec![3], 3).is_err());
    }

    #[test]
    fn product_of_z2_with_itself() {
        let z2 = zn(2);
        let v = z2.product(&z2).unwrap();
        assert_eq!(v.size(), 4);
        assert_eq!(v.apply(0, &[1, 2]), 3);
        assert_eq!(v.apply(0, &[3, 3]), 0);
    }
}
