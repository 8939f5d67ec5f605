use thiserror::Error;

use toricmot_core::Error as CoreError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{origin}:{line}:{column}: {message}")]
    Parse { origin: String, line: usize, column: usize, message: String },
    #[error("cannot read {path}: {message}")]
    Read { path: String, message: String },
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Usage(String),
    #[error("certification failed: {0}")]
    Certification(String),
    #[error("cannot write {path}: {message}")]
    Write { path: String, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Read { .. } | CliError::Validation(_) => 2,
            CliError::Certification(_) => 3,
            CliError::Usage(_) => 4,
            CliError::Write { .. } => 1,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::InvalidSemigroup(_) | CoreError::EmptyInput(_) => CliError::Validation(e.to_string()),
            CoreError::NotSaturated => CliError::Usage(e.to_string()),
            _ => CliError::Certification(e.to_string()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use toricmot_core::SemigroupError;

    #[test]
    fn exit_codes() {
        let cert = CoreError::Certification { level: 1, rays: Vec::new(), order: 40 };
        assert_eq!(CliError::from(cert).exit_code(), 3);
        assert_eq!(CliError::from(CoreError::Internal("x".into())).exit_code(), 3);
        assert_eq!(CliError::from(CoreError::from(SemigroupError::NotStrictlyConvex)).exit_code(), 2);
        assert_eq!(CliError::from(CoreError::NotSaturated).exit_code(), 4);
    }
}
