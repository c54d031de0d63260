use thiserror::Error;

/// Every failure the library can report.
///
/// Each variant belongs to one of the library modules; [`Error::module`]
/// and [`Error::name`] give the stable identifiers the CLI prints.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("order {0} is not a prime power")]
    InvalidOrder(u64),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("edge {0}-{1} listed twice")]
    DuplicateEdge(usize, usize),
    #[error("loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("automorphism search limited to {bound} vertices, graph has {n}")]
    EnumerationBoundExceeded { n: usize, bound: usize },

    #[error("bad word token `{0}`")]
    BadWordToken(String),

    #[error("bad partial conjugation token `{0}`")]
    BadLetterToken(String),
    #[error("{domain} is not a component of the complement of the star of v{operator}")]
    InvalidDomain { operator: usize, domain: String },
    #[error("generator images do not send vertex {vertex}'s clique into a conjugate of a clique subgroup")]
    NotInAutStar { vertex: usize },
    #[error("letter {letter} does not have v{link} as a link point")]
    LetterOutsideLink { letter: String, link: usize },
    #[error("omitting letters outside the subgraph changed the automorphism")]
    RewriteMismatch,
    #[error("expected {expected} generator images, got {got}")]
    ImageCountMismatch { expected: usize, got: usize },

    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not a tree with at least three vertices")]
    NotATree,
    #[error("vertices v{i} and v{j} violate the distance requirement")]
    DistancePrecondition { i: usize, j: usize },
    #[error("graph contains a separating intersection of links")]
    SilPresent,
    #[error("operation requires every vertex order to be 2")]
    NotRacg,
}

impl Error {
    pub fn module(&self) -> &'static str {
        use Error::*;
        match self {
            IndexOutOfRange { .. }
            | InvalidOrder(_)
            | Parse { .. }
            | DuplicateEdge(..)
            | SelfLoop(_)
            | EmptyGraph
            | EnumerationBoundExceeded { .. } => "graph_core",
            BadWordToken(_) => "word_engine",
            BadLetterToken(_)
            | InvalidDomain { .. }
            | NotInAutStar { .. }
            | LetterOutsideLink { .. }
            | RewriteMismatch
            | ImageCountMismatch { .. } => "aut_calculus",
            NotConnected | NotATree | DistancePrecondition { .. } | SilPresent | NotRacg => {
                "structure"
            }
        }
    }

    pub fn name(&self) -> &'static str {
        use Error::*;
        match self {
            IndexOutOfRange { .. } => "IndexOutOfRange",
            InvalidOrder(_) => "InvalidOrder",
            Parse { .. } => "Parse",
            DuplicateEdge(..) => "DuplicateEdge",
            SelfLoop(_) => "SelfLoop",
            EmptyGraph => "EmptyGraph",
            EnumerationBoundExceeded { .. } => "EnumerationBoundExceeded",
            BadWordToken(_) => "BadWordToken",
            BadLetterToken(_) => "BadLetterToken",
            InvalidDomain { .. } => "InvalidDomain",
            NotInAutStar { .. } => "NotInAutStar",
            LetterOutsideLink { .. } => "LetterOutsideLink",
            RewriteMismatch => "RewriteMismatch",
            ImageCountMismatch { .. } => "ImageCountMismatch",
            NotConnected => "NotConnected",
            NotATree => "NotATree",
            DistancePrecondition { .. } => "DistancePrecondition",
            SilPresent => "SilPresent",
            NotRacg => "NotRacg",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
