use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// An indeterminate `x[row,col]` of the generic skew-symmetric matrix, always
/// stored with `row < col`.
///
/// The derived ordering is lexicographic on `(row, col)`; it is also the
/// variable precedence used by every term order (smaller id = higher
/// precedence).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VarId {
    row: u16,
    col: u16,
}

impl VarId {
    pub fn new(row: usize, col: usize) -> Result<Self> {
        if row == 0 || row >= col || col > u16::MAX as usize {
            return Err(domain(format!(
                "variable x[{row},{col}] needs 1 <= row < col"
            )));
        }
        Ok(VarId {
            row: row as u16,
            col: col as u16,
        })
    }

    pub fn row(self) -> usize {
        self.row as usize
    }

    pub fn col(self) -> usize {
        self.col as usize
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{},{}]", self.row, self.col)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// Entry `(i,j)` of the skew-symmetric matrix: zero on the diagonal,
/// otherwise a signed canonical variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignedVar {
    Zero,
    Var { var: VarId, sign: Sign },
}

impl SignedVar {
    pub fn sign(self) -> Option<Sign> {
        match self {
            SignedVar::Zero => None,
            SignedVar::Var { sign, .. } => Some(sign),
        }
    }

    pub fn var(self) -> Option<VarId> {
        match self {
            SignedVar::Zero => None,
            SignedVar::Var { var, .. } => Some(var),
        }
    }
}

/// Canonical signed representative of entry `(i,j)` of an `n x n`
/// skew-symmetric matrix of indeterminates.
pub fn make_var(i: usize, j: usize, n: usize) -> Result<SignedVar> {
    if i == 0 || j == 0 || i > n || j > n {
        return Err(domain(format!("entry ({i},{j}) outside 1..={n}")));
    }
    Ok(match i.cmp(&j) {
        std::cmp::Ordering::Equal => SignedVar::Zero,
        std::cmp::Ordering::Less => SignedVar::Var {
            var: VarId::new(i, j)?,
            sign: Sign::Plus,
        },
        std::cmp::Ordering::Greater => SignedVar::Var {
            var: VarId::new(j, i)?,
            sign: Sign::Minus,
        },
    })
}
