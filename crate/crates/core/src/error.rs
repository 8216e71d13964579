use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph order {0} exceeds the supported maximum of {max}", max = crate::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("edge ({0}, {1}) is a self-loop")]
    SelfLoop(usize, usize),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("vertex {vertex} is not in 0..{n}")]
    BadVertex { vertex: usize, n: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph is not connected")]
    Disconnected,
    #[error("initial set must be nonempty")]
    EmptySet,
    #[error("propagation stalled before observing every vertex")]
    Stalled,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph does not match the {rows}x{cols} grid layout")]
    NotAGrid { rows: usize, cols: usize },
    #[error("force reassignment failed: {0}")]
    Reassignment(String),
    #[error("intervals {0} and {1} share an endpoint")]
    DuplicateEndpoint(usize, usize),
    #[error("interval {0} has right endpoint not greater than left endpoint")]
    EmptyInterval(usize),
    #[error("representation is not a unit interval representation")]
    NotUnit,
    #[error("propagation time must be at least 2 (a set with time 1 already dominates)")]
    TimeTooShort,
    #[error("search budget exhausted")]
    BudgetExceeded,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
