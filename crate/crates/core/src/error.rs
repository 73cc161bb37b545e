//! Error type shared by all operations in this crate.

use thiserror::Error;

/// Errors reported by semiring, matrix, graph, and sequence operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A ⊙ result left the finite domain of the carrier (e.g. `i64`
    /// addition overflow under max-plus). Never silently wrapped: a
    /// wrapped value would corrupt every ⊕ comparison downstream.
    #[error("semiring product overflowed the finite carrier domain")]
    Overflow,

    /// The closure series e ⊕ a ⊕ a² ⊕ … does not stabilize for this
    /// element (e.g. a positive scalar under max-plus).
    #[error("star closure diverges: the power series does not stabilize")]
    Divergence,

    /// Closure elimination hit a diverging cycle while processing the
    /// given pivot vertex.
    #[error("star closure diverges at pivot vertex {vertex}")]
    DivergenceAtVertex { vertex: usize },

    /// Matrix or vector operands have incompatible dimensions.
    #[error("dimension mismatch: left is {left_rows}x{left_cols}, right is {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    /// A triangular entry point scanned the matrix and found a non-φ
    /// entry on or below the diagonal.
    #[error("matrix is not strictly upper triangular: non-zero entry at ({row}, {col})")]
    NotTriangular { row: usize, col: usize },

    /// An edge endpoint lies outside `0..vertex_count`.
    #[error("vertex {vertex} out of range for graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    /// An edge weight is not an element of the selected semiring's
    /// carrier (e.g. 1.5 under max-times, a fractional weight under an
    /// integer semiring).
    #[error("weight {weight} is outside the {semiring} carrier")]
    WeightOutOfDomain {
        semiring: &'static str,
        weight: String,
    },

    /// Witness backtracking found a solution vector that no valid
    /// successor can explain; the vector was not produced by back
    /// substitution over the given sequence.
    #[error("inconsistent solution vector: no successor explains x[{index}]")]
    InconsistentSolution { index: usize },

    /// Text input (sequence, graph, or matrix dump) failed to parse.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
