//! A second construction of the cocycle that never touches the Clifford
//! algebra. It only uses the defining relations of the cover: `ŝ_i² = -1`,
//! braid relations with no sign, and `ŝ_i ŝ_j = -ŝ_j ŝ_i` for `|i - j| ≥ 2`.
//! Two reduced words of the same permutation then give products that differ
//! by `(-1)^(square moves)`, which the word graph records.

use std::sync::Arc;

use crate::groups::{symmetric_group, Elem, Permutation};

use super::table::{fold_steps, CocycleTable};
use super::words::{canonical_reduced_word, WordGraph};
use super::CocycleError;

/// Largest degree for the rewriting construction.
pub const MAX_REWRITING_DEGREE: usize = 5;

/// Builds the cocycle table of `S_n` by word rewriting.
pub fn rewriting_cocycle(n: usize) -> Result<CocycleTable, CocycleError> {
    if n > MAX_REWRITING_DEGREE {
        return Err(CocycleError::DegreeTooLarge { degree: n, cap: MAX_REWRITING_DEGREE });
    }
    let group = Arc::new(symmetric_group(n)?);
    let simple: Vec<Elem> = (1..n).map(|i| group.index_of(&Permutation::elementary(n, i)).expect("in S_n")).collect();
    let words: Vec<Vec<usize>> =
        group.elements().map(|x| canonical_reduced_word(group.label(x)).letters().to_vec()).collect();
    let graphs: Vec<WordGraph> =
        group.elements().map(|x| WordGraph::build(group.label(x))).collect::<Result<_, _>>()?;

    let mut step = vec![0i8; group.order() * n.saturating_sub(1)];
    for x in group.elements() {
        for i in 1..n {
            let y = group.mul(x, simple[i - 1]);
            let sign = if words[y].len() > words[x].len() {
                // can(x) followed by i is a reduced word of y
                let mut w = words[x].clone();
                w.push(i);
                graphs[y].label(&w)
            } else {
                // can(y) followed by i is a reduced word of x, and ŝ_i² = -1
                let mut w = words[y].clone();
                w.push(i);
                graphs[x].label(&w).map(|s| -s)
            };
            step[x * (n - 1) + (i - 1)] = sign.ok_or_else(|| CocycleError::NonCentralDiscrepancy {
                sigma: group.label(x).to_cycle_string(),
                tau: Permutation::elementary(n, i).to_cycle_string(),
            })?;
        }
    }
    let values = fold_steps(&group, &simple, &words, |x, i| step[x * (n - 1) + (i - 1)]);
    Ok(CocycleTable::from_parts(n, group, values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur_cocycle::cocycle;

    #[test]
    fn agrees_with_clifford_table() {
        for n in 1..=4 {
            let a = rewriting_cocycle(n).unwrap();
            let b = cocycle(n).unwrap();
            assert_eq!(a.values(), b.values(), "n={n}");
        }
    }
}
