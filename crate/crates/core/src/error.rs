use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Vertex;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Errors raised by the library.
///
/// Input errors (malformed edges, bad parameters) are kept apart from
/// precondition failures so that front ends can map them to different exit
/// statuses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `k` is zero or larger than `n`.
    Uniformity { n: u32, k: u32 },
    /// An edge has the wrong number of vertices.
    Arity { edge: Vec<Vertex>, expected: usize },
    /// An edge uses a vertex outside `{1..n}`.
    VertexOutOfRange { edge: Vec<Vertex>, vertex: Vertex, n: u32 },
    /// An edge repeats a vertex.
    RepeatedVertex { edge: Vec<Vertex>, vertex: Vertex },
    /// A vertex set is larger than the uniformity allows.
    SetTooLarge { size: usize, k: u32 },
    /// Numeric parameters are outside an operation's domain.
    Parameters(String),
    /// Two objects that must agree on `n`, `k` (or label counts) do not.
    Mismatch(String),
    /// A documented precondition does not hold on the input.
    Precondition(String),
    /// A family that must be rainbow-free admits a rainbow matching.
    HasRainbow(Vec<(usize, Vec<Vertex>)>),
}

impl Error {
    pub(crate) fn params(msg: impl Into<String>) -> Self {
        Error::Parameters(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    /// True for errors caused by violated preconditions rather than malformed
    /// input.
    pub fn is_precondition(&self) -> bool {
        matches!(self, Error::Precondition(_) | Error::HasRainbow(_))
    }
}

fn write_edge(f: &mut fmt::Formatter<'_>, edge: &[Vertex]) -> fmt::Result {
    f.write_str("(")?;
    for (i, v) in edge.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    f.write_str(")")
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Uniformity { n, k } => write!(f, "uniformity k={k} invalid for n={n}"),
            Error::Arity { edge, expected } => {
                f.write_str("edge ")?;
                write_edge(f, edge)?;
                write!(f, " has {} vertices, expected {expected}", edge.len())
            }
            Error::VertexOutOfRange { edge, vertex, n } => {
                f.write_str("edge ")?;
                write_edge(f, edge)?;
                write!(f, ": vertex {vertex} out of range 1..={n}")
            }
            Error::RepeatedVertex { edge, vertex } => {
                f.write_str("edge ")?;
                write_edge(f, edge)?;
                write!(f, ": vertex {vertex} repeated")
            }
            Error::SetTooLarge { size, k } => {
                write!(f, "vertex set of size {size} exceeds uniformity {k}")
            }
            Error::Parameters(msg) => write!(f, "invalid parameters: {msg}"),
            Error::Mismatch(msg) => write!(f, "mismatched inputs: {msg}"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::HasRainbow(pairs) => {
                f.write_str("family admits a rainbow matching:")?;
                for (i, e) in pairs {
                    write!(f, " F{}:", i + 1)?;
                    write_edge(f, e)?;
                }
                Ok(())
            }
        }
    }
}

impl core::error::Error for Error {}
