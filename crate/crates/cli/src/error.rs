use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Json {
        path: String,
        #[source]
        source: serde_json::Error,
    },
    /// A schema violation, located by a JSON path such as `$.mul[1][0]`.
    #[error("{at}: {msg}")]
    Schema { at: String, msg: String },
    #[error(transparent)]
    Core(#[from] bnskein::Error),
    #[error(transparent)]
    Exact(#[from] bnskein_exact::ExactError),
    #[error("{0}")]
    Usage(String),
    #[error("oracle disagreement: {0}")]
    Disagreement(String),
}

impl CliError {
    pub fn schema(at: impl Into<String>, msg: impl Into<String>) -> Self {
        CliError::Schema {
            at: at.into(),
            msg: msg.into(),
        }
    }

    /// 2 for oracle disagreements, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Disagreement(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
