use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A graph or product does not fit in the configured vertex-set width.
    #[error("{n} vertices exceed the vertex-set capacity of {capacity}")]
    Capacity { n: usize, capacity: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid input: {0}")]
    Input(String),

    /// The search expanded more nodes than the configured budget allows.
    #[error("node budget of {limit} exceeded")]
    Budget { limit: u64 },

    /// Enumeration of optimal functions was requested on a graph above the size guard.
    #[error("enumeration guard exceeded: {n} vertices > limit {limit}")]
    EnumerationGuard { n: usize, limit: usize },
}
