use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Arguments outside the domain of the function.
    #[error("domain error: {0}")]
    Domain(String),

    /// An iterative kernel hit its iteration cap.
    #[error("{routine} did not converge after {iterations} iterations")]
    Convergence {
        routine: &'static str,
        iterations: usize,
    },

    /// The integrand produced a non-finite value inside the interval.
    #[error("integrand returned {value} at x = {x}")]
    Evaluation { x: f64, value: f64 },
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
