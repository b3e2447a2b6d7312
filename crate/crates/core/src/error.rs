use alloc::string::String;
use core::fmt;

/// Errors reported by the library.
///
/// Operations whose failure can only come from an internal bug (a coloring
/// that does not stabilize, a realized diagram that fails its own
/// verification) panic instead of returning one of these.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A generator index lies outside `1..=n`.
    GeneratorOutOfRange { gen: usize, n: usize },
    /// Two values with different ambient generator/strand counts were mixed.
    ArityMismatch { left: usize, right: usize },
    /// `substitute` was given the wrong number of generator images.
    ImageCount { expected: usize, got: usize },
    /// A word could not be parsed from text.
    WordSyntax(String),
    /// A monomial has a repeated or out-of-range variable.
    MalformedMonomial(String),
    /// A polynomial is not the expansion of any group element.
    NotGroupLike,
    /// A strand index lies outside `1..=n`.
    StrandOutOfRange { strand: usize, n: usize },
    /// Two arrow endpoints occupy the same slot of the same strand.
    DuplicatePosition { strand: usize, pos: usize },
    /// An arrow index does not refer to an arrow of the diagram.
    NoSuchArrow { index: usize },
    /// A move was requested at a location where its pattern does not hold.
    MoveNotApplicable(String),
    /// A Milnor index sequence is repeated, too short or out of range.
    BadMilnorIndex(String),
    /// A realization target for strand `i` contains the letter `x_i`.
    TargetUsesOwnMeridian { strand: usize },
    /// A strand count outside the supported range.
    InvalidStrandCount { n: usize },
    /// A surface component id was referenced but never declared.
    UnknownComponent { id: usize },
    /// The same surface component id was declared twice.
    DuplicateComponent { id: usize },
    /// A double-point circle pairs a component with itself.
    SameComponent { id: usize },
    /// A homology class has the wrong number of bits for its component.
    ClassLength { expected: usize, got: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::GeneratorOutOfRange { gen, n } => {
                write!(f, "generator index {gen} out of range 1..={n}")
            }
            Error::ArityMismatch { left, right } => {
                write!(f, "mismatched generator counts: {left} vs {right}")
            }
            Error::ImageCount { expected, got } => {
                write!(f, "expected {expected} generator images, got {got}")
            }
            Error::WordSyntax(tok) => write!(f, "cannot parse word token `{tok}`"),
            Error::MalformedMonomial(why) => write!(f, "malformed monomial: {why}"),
            Error::NotGroupLike => write!(f, "polynomial is not a group expansion"),
            Error::StrandOutOfRange { strand, n } => {
                write!(f, "strand index {strand} out of range 1..={n}")
            }
            Error::DuplicatePosition { strand, pos } => {
                write!(f, "duplicate position {pos} on strand {strand}")
            }
            Error::NoSuchArrow { index } => write!(f, "no arrow with index {index}"),
            Error::MoveNotApplicable(why) => write!(f, "move not applicable: {why}"),
            Error::BadMilnorIndex(why) => write!(f, "bad Milnor index: {why}"),
            Error::TargetUsesOwnMeridian { strand } => {
                write!(
                    f,
                    "target for strand {strand} contains its own meridian x{strand}"
                )
            }
            Error::InvalidStrandCount { n } => write!(f, "invalid strand count {n}"),
            Error::UnknownComponent { id } => write!(f, "unknown component id {id}"),
            Error::DuplicateComponent { id } => write!(f, "component id {id} declared twice"),
            Error::SameComponent { id } => {
                write!(f, "double-point circle pairs component {id} with itself")
            }
            Error::ClassLength { expected, got } => {
                write!(
                    f,
                    "homology class has {got} bits, component rank is {expected}"
                )
            }
        }
    }
}

impl core::error::Error for Error {}
