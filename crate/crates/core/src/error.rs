use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when building graphs, parsing formats,
/// instantiating families or running solvers and suites.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{what} exceeds the supported maximum of {max}")]
    TooLarge { what: &'static str, max: usize },
    #[error("degree profile is undefined for the order-0 graph")]
    OrderZero,
    #[error("byte {byte:#04x} at offset {pos} is outside the graph6 range 63..=126")]
    BadChar { byte: u8, pos: usize },
    #[error("graph6 record truncated: {needed} payload bytes needed, {found} found")]
    Truncated { needed: usize, found: usize },
    #[error("multi-byte graph6 order encodings (order >= 63) are not supported")]
    UnsupportedOrder,
    #[error("trailing bytes after the graph6 payload")]
    TrailingBytes,
    #[error("line {line}: {msg}")]
    ParseError { line: usize, msg: String },
    #[error("family {family:?}: {msg}")]
    BadArity { family: String, msg: String },
    #[error("family {family:?}: parameter out of range: {msg}")]
    BadRange { family: String, msg: String },
    #[error("not a tree: {0}")]
    NotATree(&'static str),
    #[error("graph is not r-regular for any r >= 1")]
    NotRegular,
    #[error("edge set is not a spanning regular subgraph: {0}")]
    NotSpanningRegular(&'static str),
    #[error("edge ({0}, {1}) is not present in the graph")]
    EdgeNotInGraph(usize, usize),
    #[error("out-regular query on the empty vertex set")]
    EmptySet,
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("instance of order {order} exceeds the limit {limit}")]
    InstanceTooLarge { order: usize, limit: usize },
}
