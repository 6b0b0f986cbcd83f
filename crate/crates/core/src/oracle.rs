//! Independent membership oracle.
//!
//! A forward dynamic program over the raw generator list. It never touches
//! the Apéry machinery in [`crate::semigroup`], which is what makes it usable
//! as a cross-check for the fast path.

/// `table[x]` is true iff `x` is a nonnegative integer combination of
/// `generators`, for `0 <= x <= bound`.
///
/// Non-positive entries in `generators` are ignored. A negative `bound`
/// yields an empty table.
pub fn sieve_oracle(generators: &[i64], bound: i64) -> Vec<bool> {
    if bound < 0 {
        return Vec::new();
    }
    let len = bound as usize + 1;
    let mut table = vec![false; len];
    table[0] = true;
    for x in 1..len {
        table[x] = generators
            .iter()
            .filter(|&&g| g > 0)
            .any(|&g| (g as usize) <= x && table[x - g as usize]);
    }
    table
}

/// Largest `x <= bound` absent from the table, or `None` when every entry
/// is present.
pub fn largest_absent(table: &[bool]) -> Option<usize> {
    table.iter().rposition(|&present| !present)
}
