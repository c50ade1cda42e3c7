//! 3-CNF formulas.

use std::fmt;

use crate::error::{Error, Result};

/// A 3-CNF formula over variables `1..=n_vars`.
///
/// Literals are signed, DIMACS style: `3` is `x3` and `-3` is its negation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    n_vars: usize,
    clauses: Vec<[i32; 3]>,
}

impl CnfFormula {
    pub fn new(n_vars: usize, clauses: Vec<[i32; 3]>) -> Result<Self> {
        for clause in &clauses {
            for &lit in clause {
                if lit == 0 || lit.unsigned_abs() as usize > n_vars {
                    return Err(Error::Precondition(format!(
                        "literal {lit} out of range for {n_vars} variables"
                    )));
                }
            }
        }
        Ok(Self { n_vars, clauses })
    }

    /// Builds a formula from clauses of arbitrary length, rejecting any
    /// clause that does not have exactly three literals.
    pub fn from_clauses(n_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        let fixed = clauses
            .into_iter()
            .map(|c| {
                <[i32; 3]>::try_from(c.as_slice()).map_err(|_| {
                    Error::Precondition(format!("clause {c:?} does not have exactly 3 literals"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n_vars, fixed)
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn clauses(&self) -> &[[i32; 3]] {
        &self.clauses
    }

    pub fn m(&self) -> usize {
        self.clauses.len()
    }

    /// `assignment[i]` is the value of variable `i + 1`.
    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|clause| {
            clause
                .iter()
                .any(|&lit| assignment[lit.unsigned_abs() as usize - 1] == (lit > 0))
        })
    }
}

impl fmt::Display for CnfFormula {
    /// DIMACS CNF.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p cnf {} {}", self.n_vars, self.clauses.len())?;
        for [a, b, c] in &self.clauses {
            writeln!(f, "{a} {b} {c} 0")?;
        }
        Ok(())
    }
}
