use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WindowError {
    #[error("invalid kernel: {0}")]
    InvalidKernel(String),

    #[error("bad parameter `{name}` = {value}: {reason}")]
    BadParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("no spectral null found below {f_max} Hz")]
    NoNullsFound { f_max: f64 },

    #[error("need at least two nulls and one sidelobe peak, found {nulls} nulls")]
    InsufficientLobes { nulls: usize },

    #[error("sidelobes still above {threshold_db} dB at {f_max} Hz")]
    NotConverged { threshold_db: f64, f_max: f64 },

    #[error("cannot parse window spec at `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("{window}: {source}")]
    Report {
        window: String,
        #[source]
        source: Box<WindowError>,
    },
}

pub type Result<T> = std::result::Result<T, WindowError>;
