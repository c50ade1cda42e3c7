//! Truth-table satisfiability.

use crate::cnf::CnfFormula;

/// A satisfying assignment, trying assignments in binary counting order.
pub fn satisfying_assignment(f: &CnfFormula) -> Option<Vec<bool>> {
    let n = f.n_vars();
    assert!(n < 64, "too many variables for truth-table search");
    (0u64..1 << n)
        .map(|bits| (0..n).map(|i| bits >> i & 1 == 1).collect::<Vec<_>>())
        .find(|a| f.satisfied_by(a))
}

pub fn sat_bruteforce(f: &CnfFormula) -> bool {
    satisfying_assignment(f).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert!(sat_bruteforce(&CnfFormula::new(3, vec![]).unwrap()));
        let f = CnfFormula::new(1, vec![[1, 1, 1], [-1, -1, -1]]).unwrap();
        assert!(!sat_bruteforce(&f));
        let g = CnfFormula::new(2, vec![[1, 1, 2], [-1, -1, -1]]).unwrap();
        assert_eq!(satisfying_assignment(&g), Some(vec![false, true]));
    }
}
