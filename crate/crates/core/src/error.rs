use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("cycle detected through vertex {0}")]
    Cyclic(usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("quiver is not of Dynkin type ({0})")]
    NotDynkin(String),
    #[error("{0} is not a positive root of this quiver")]
    NotARoot(String),
    #[error("w must be at least 1")]
    InvalidW,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("search space of {needed} candidate subsets exceeds the budget of {budget}")]
    Budget { needed: u128, budget: u64 },
    #[error("group has more than {0} elements")]
    GroupTooLarge(usize),
    #[error("internal convention check failed: {0}")]
    Convention(String),
}
