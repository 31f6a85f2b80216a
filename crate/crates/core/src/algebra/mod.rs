//! Arithmetic in the free associative algebra `GF(2)<a_1, ..., a_k>`.

mod element;
pub(crate) mod parse;
mod template;
mod word;

pub use element::{CodegreeWindow, Degree, Element};
pub use template::{substitute, Slot};
pub use word::{Word, WordsOfLength};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("alphabet mismatch: {left} vs {right} generators")]
    AlphabetMismatch { left: usize, right: usize },
    #[error("letter {} is outside an alphabet of {alphabet} generators", (b'a' + *letter) as char)]
    LetterOutOfRange { letter: u8, alphabet: usize },
    #[error("{0} is undefined for the zero element")]
    ZeroElement(&'static str),
    #[error("window width must be positive")]
    InvalidWindow,
    #[error("variable {0} has no assigned value")]
    UnassignedVariable(usize),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}
