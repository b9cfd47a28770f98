use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::OpWitness;

/// Errors raised when an operation's precondition does not hold.
///
/// Failed *checks* (a map that is not a homomorphism, a law that does not
/// hold) are reported through [`Verdict`](crate::Verdict) and report types;
/// this enum is for inputs that an operation refuses to work on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    SignatureMismatch,
    SizeMismatch {
        expected: usize,
        found: usize,
    },
    NotHomomorphism(OpWitness),
    Incompatible {
        op: usize,
        left: Vec<usize>,
        right: Vec<usize>,
    },
    BudgetExceeded {
        spent: u64,
        limit: u64,
    },
    DeadlineExceeded,
    NotEffective {
        first: usize,
        second: usize,
    },
    NotCoordinated {
        domain: usize,
        first: usize,
        second: usize,
    },
    ClassesActDifferently {
        first: usize,
        second: usize,
        point: usize,
    },
    InvalidMorphism(String),
    InvalidRepresentation(String),
    InverseUndefined {
        op: usize,
    },
    NotGenerating,
    NotClosed,
    NotGenerated {
        layer: usize,
        element: usize,
    },
    MalformedWord(String),
    LayerOutOfRange {
        layer: usize,
    },
    NoIdentityPreimage,
    PreimageDependence {
        first: usize,
        second: usize,
        domain: usize,
    },
    IllDefinedSkip {
        domain: usize,
        first: usize,
        second: usize,
    },
    ChainMismatch,
    ElementOutOfRange {
        element: usize,
        size: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SignatureMismatch => write!(f, "signatures do not match"),
            Error::SizeMismatch { expected, found } => {
                write!(f, "size mismatch: expected {expected}, found {found}")
            }
            Error::NotHomomorphism(w) => write!(f, "map is not a homomorphism ({w})"),
            Error::Incompatible { op, left, right } => write!(
                f,
                "partition is not compatible with op #{op}: {left:?} and {right:?} are blockwise equal but their results are not"
            ),
            Error::BudgetExceeded { spent, limit } => {
                write!(f, "enumeration budget exceeded ({spent} > {limit} candidates)")
            }
            Error::DeadlineExceeded => write!(f, "enumeration time limit exceeded"),
            Error::NotEffective { first, second } => {
                write!(f, "representation is not effective: {first} and {second} act equally")
            }
            Error::NotCoordinated { domain, first, second } => write!(
                f,
                "transformation of {domain} is not coordinated with the equivalence at ({first}, {second})"
            ),
            Error::ClassesActDifferently { first, second, point } => write!(
                f,
                "congruent elements {first} and {second} act differently on class of {point}"
            ),
            Error::InvalidMorphism(msg) => write!(f, "invalid morphism: {msg}"),
            Error::InvalidRepresentation(msg) => write!(f, "invalid representation: {msg}"),
            Error::InverseUndefined { op } => {
                write!(f, "inverse requested for a non-bijective transformation (op #{op})")
            }
            Error::NotGenerating => write!(f, "set does not generate"),
            Error::NotClosed => write!(f, "subset is not closed under the operations"),
            Error::NotGenerated { layer, element } => {
                write!(f, "element {element} of layer {layer} is not generated")
            }
            Error::MalformedWord(msg) => write!(f, "malformed word: {msg}"),
            Error::LayerOutOfRange { layer } => write!(f, "layer {layer} out of range"),
            Error::NoIdentityPreimage => {
                write!(f, "identity transformation is not in the image of the upper representation")
            }
            Error::PreimageDependence { first, second, domain } => write!(
                f,
                "extension depends on the identity preimage ({first} vs {second} at {domain})"
            ),
            Error::IllDefinedSkip { domain, first, second } => write!(
                f,
                "skip action of {domain} is ill-defined: {first} and {second} act equally above but map apart"
            ),
            Error::ChainMismatch => write!(f, "morphisms do not chain"),
            Error::ElementOutOfRange { element, size } => {
                write!(f, "element {element} out of range for carrier of size {size}")
            }
        }
    }
}

impl core::error::Error for Error {}
