use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid basis index {0}")]
    InvalidIndex(String),
    #[error("{what} = {value} out of range {range}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        range: String,
    },
    #[error("degenerate frame: {0}")]
    DegenerateFrame(String),
    #[error("not of pure bidegree ({0}, {1})")]
    NotPureBidegree(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_range(what: &'static str, value: usize, lo: usize, hi: usize) -> Result<()> {
    if value < lo || value > hi {
        return Err(Error::OutOfRange {
            what,
            value: value as i64,
            range: format!("[{lo}, {hi}]"),
        });
    }
    Ok(())
}
