//! CLI error classification; the variant decides the process exit code.

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}:{line}: {message}")]
    ParseLine {
        path: String,
        line: usize,
        message: String,
    },

    #[error("{path}: {message}")]
    ParseFile { path: String, message: String },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("domain mismatch: {0} (pass --allow-domain-mismatch to use the larger domain)")]
    DomainMismatch(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("failed to write {path}: {source}")]
    OutputIo {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    /// 2 for input-data problems, 3 for configuration problems, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::ParseLine { .. }
            | Self::ParseFile { .. }
            | Self::Io { .. }
            | Self::DomainMismatch(_) => 2,
            Self::Config(_) => 3,
            Self::OutputIo { .. } => 1,
        }
    }

    pub fn config(message: impl Into<String>) -> Self {
        Self::Config(message.into())
    }
}
