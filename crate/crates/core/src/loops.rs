//! Loop axioms for a finite set of maps under composition.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

/// What held for a finite set under a binary product.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LoopReport {
    pub order: usize,
    pub identity_present: bool,
    pub closed: bool,
    pub inverses: bool,
    /// `a·x = b` has exactly one solution `x` for all `a, b`.
    pub left_division_unique: bool,
    /// `y·a = b` has exactly one solution `y` for all `a, b`.
    pub right_division_unique: bool,
    /// Recorded only; a loop need not be associative.
    pub associative: bool,
}

impl LoopReport {
    pub fn is_loop(&self) -> bool {
        self.order > 0
            && self.identity_present
            && self.closed
            && self.inverses
            && self.left_division_unique
            && self.right_division_unique
    }
}

/// Checks the loop axioms by building the full product table.
///
/// Associativity is checked on every triple once the set is closed.
pub fn check_loop<T: Ord + Clone>(
    members: &[T],
    identity: &T,
    product: impl Fn(&T, &T) -> T,
) -> LoopReport {
    let index: BTreeMap<&T, usize> = members.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let n = members.len();
    let mut report = LoopReport {
        order: index.len(),
        ..LoopReport::default()
    };
    let Some(&e) = index.get(identity) else {
        return report;
    };
    report.identity_present = true;

    let mut table = Vec::with_capacity(n * n);
    for a in members {
        for b in members {
            match index.get(&product(a, b)) {
                Some(&c) => table.push(c),
                None => return report,
            }
        }
    }
    report.closed = true;
    let at = |a: usize, b: usize| table[a * n + b];

    report.inverses = (0..n).all(|a| (0..n).any(|b| at(a, b) == e && at(b, a) == e));

    // unique division is the same as every row / column being a permutation
    let mut seen = alloc::vec![false; n];
    let mut rows_ok = true;
    let mut cols_ok = true;
    for a in 0..n {
        seen.iter_mut().for_each(|s| *s = false);
        rows_ok &= (0..n).all(|x| !core::mem::replace(&mut seen[at(a, x)], true));
        seen.iter_mut().for_each(|s| *s = false);
        cols_ok &= (0..n).all(|y| !core::mem::replace(&mut seen[at(y, a)], true));
    }
    report.left_division_unique = rows_ok;
    report.right_division_unique = cols_ok;

    report.associative =
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| at(at(a, b), c) == at(a, at(b, c)))));
    report
}
