use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed group spec `{0}`: expected C<n>(xC<n>)*, D<m> or Q<m>")]
    MalformedSpec(String),
    #[error("invalid group parameter: {0}")]
    InvalidParameter(String),
    #[error("group order {0} exceeds the supported maximum of {max}", max = crate::groups::MAX_ORDER)]
    OrderTooLarge(usize),
    #[error("element {element} does not belong to {group}")]
    InvalidElement { group: String, element: String },
    #[error("unknown element name `{0}`")]
    UnknownElementName(String),
    #[error("cyclotomic field mismatch: conductor {left} vs {right}")]
    FieldMismatch { left: u32, right: u32 },
    #[error("group mismatch: {left} vs {right}")]
    GroupMismatch { left: String, right: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("no value supplied for variable {0}")]
    MissingVariable(usize),
    #[error("operation requires a dihedral or generalized quaternion group, got {0}")]
    NotMetacyclic(String),
    #[error("operation requires an abelian group, got {0}")]
    NotAbelian(String),
    #[error("{0} is undefined for this group: {1}")]
    Undefined(String, String),
    #[error("character index {index} out of range 0..{bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("coefficient at {0} is not a constant")]
    NonConstant(String),
    #[error("representation degree mismatch: expected {expected}, got {actual}")]
    DegreeMismatch { expected: usize, actual: usize },
    #[error("group order {order} exceeds the symbolic limit {limit}; use numeric mode")]
    SymbolicLimit { order: usize, limit: usize },
    #[error("group determinant vanishes at this assignment; the element is not invertible")]
    Singular,
    #[error("unknown check id `{0}`")]
    UnknownCheck(String),
    #[error("check {id} does not apply to {group}: {reason}")]
    Inapplicable {
        id: String,
        group: String,
        reason: String,
    },
    #[error("cannot parse rational `{0}`")]
    BadRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
