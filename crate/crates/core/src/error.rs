use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("universe must contain at least one point")]
    EmptyUniverse,

    #[error("universe of {size} points exceeds the supported maximum of {max}")]
    UniverseTooLarge { size: usize, max: usize },

    #[error("point {point} is outside a universe of {universe} points")]
    PointOutOfRange { point: usize, universe: usize },

    #[error("a Boolean algebra needs at least one atom (0 must differ from 1)")]
    DegenerateAlgebra,

    #[error("{what}: size {size} exceeds cap {cap} (raise it with --cap-elements / --cap-worlds)")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("set {0} is not an element of the regular closed algebra")]
    NotInCarrier(String),

    #[error("element {element} is outside an algebra of {count} elements")]
    ElementOutOfRange { element: usize, count: usize },

    #[error("not a {kind}: {reason}")]
    NotFilterOrIdeal { kind: &'static str, reason: String },

    #[error("relation is not {0}")]
    InvalidRelation(&'static str),

    #[error("parametrized frame is not antitone: R({larger:#b}) relates ({s},{t}) but R({smaller:#b}) does not")]
    NotAntitone {
        smaller: u64,
        larger: u64,
        s: usize,
        t: usize,
    },

    #[error("invalid frame: {0}")]
    InvalidFrame(String),

    #[error("covering relation fails {axiom} at witness {witness:?}")]
    AxiomViolation { axiom: String, witness: Vec<u64> },

    #[error("{0} requires a verified extended contact algebra")]
    RequiresEca(&'static str),

    #[error(
        "the type-1/type-2 constructions need a finite topological model of the algebra; \
         no construction of one from an abstract algebra is available, so supply a topology document"
    )]
    MissingTopologicalModel,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown label {0:?}")]
    UnknownLabel(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Json {
            line: err.line(),
            column: err.column(),
            message: err.to_string(),
        }
    }
}
