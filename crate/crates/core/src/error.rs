use sepdeform_scalar::ScalarError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("{what} needs {size}, over the budget of {limit}")]
    BudgetExceeded { what: &'static str, size: u128, limit: u128 },
    #[error("operands belong to different algebras ({0})")]
    DescriptorMismatch(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("relation failed: {0}")]
    RelationFailure(String),
    #[error("the given generators span only {span} of {dim} dimensions")]
    NotGenerating { span: usize, dim: usize },
}

pub type Result<T, E = CoreError> = std::result::Result<T, E>;

pub(crate) fn check_budget(what: &'static str, size: u128, limit: u128) -> Result<()> {
    if size > limit {
        Err(CoreError::BudgetExceeded { what, size, limit })
    } else {
        Ok(())
    }
}
