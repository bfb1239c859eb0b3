use serde::Serialize;

use crate::groups::Permutation;
use crate::partitions::{enumerate_partitions, Parity, Partition};

use super::table::{cocycle, CocycleTable, MAX_TABLE_DEGREE};
use super::CocycleError;

/// Largest degree for the criterion-based class count.
pub const MAX_CRITERION_DEGREE: usize = 30;

/// The closed form of the supersymbol as a character of the centralizer.
///
/// For every even `k`, the `k`-cycles of `σ` are permuted by `τ` up to a
/// rotation: if `b_C` is the smallest point of the cycle `C` and `τ` maps `C`
/// onto `C'`, then `τ(b_C) = σ^r(b_{C'})` for a unique offset `r` mod `k`.
/// The value is the product over even `k` of the sign of the induced
/// permutation of `k`-cycles times `(-1)` to the total offset.
pub fn schur_supersymbol_character(sigma: &Permutation, tau: &Permutation) -> Result<i8, CocycleError> {
    if sigma.degree() != tau.degree() {
        return Err(CocycleError::NotCommuting { g: sigma.to_cycle_string(), h: tau.to_cycle_string() });
    }
    if sigma.compose(tau) != tau.compose(sigma) {
        return Err(CocycleError::NotCommuting { g: sigma.to_cycle_string(), h: tau.to_cycle_string() });
    }
    let cycles = sigma.cycles();
    let mut cycle_of = vec![usize::MAX; sigma.degree()];
    // offset_in[x] = r with x = σ^r(b) for b the base point of x's cycle
    let mut offset_in = vec![0usize; sigma.degree()];
    for (c, cyc) in cycles.iter().enumerate() {
        let mut x = cyc[0];
        for r in 0..cyc.len() {
            cycle_of[x] = c;
            offset_in[x] = r;
            x = sigma.apply(x);
        }
    }
    let mut value = 1i8;
    let mut lengths: Vec<usize> = cycles.iter().map(Vec::len).filter(|k| k % 2 == 0).collect();
    lengths.sort_unstable();
    lengths.dedup();
    for k in lengths {
        let of_length: Vec<usize> = (0..cycles.len()).filter(|&c| cycles[c].len() == k).collect();
        let image: Vec<usize> = of_length
            .iter()
            .map(|&c| {
                let target = cycle_of[tau.apply(cycles[c][0])];
                of_length.iter().position(|&d| d == target).expect("τ preserves cycle lengths")
            })
            .collect();
        let induced = Permutation::from_images(image).expect("τ permutes the k-cycles");
        value *= induced.sign();
        let offset: usize = of_length.iter().map(|&c| offset_in[tau.apply(cycles[c][0])]).sum();
        if offset % 2 == 1 {
            value = -value;
        }
    }
    Ok(value)
}

/// `true` iff `c(g, h) = c(h, g)` for every `h` commuting with `g`.
pub fn is_c_regular_bruteforce(table: &CocycleTable, class_rep: &Permutation) -> Result<bool, CocycleError> {
    let g = table.elem(class_rep)?;
    let group = table.group();
    Ok(group.centralizer(g).into_iter().all(|h| table.get(g, h) == table.get(h, g)))
}

/// Schur's criterion: an even class is regular iff all its parts are odd, an
/// odd class iff its parts are distinct.
pub fn is_c_regular_schur(lambda: &Partition) -> bool {
    match lambda.parity() {
        Parity::Even => lambda.all_parts_odd(),
        Parity::Odd => lambda.is_strict(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RegularityMode {
    Criterion,
    Brute,
}

/// Regularity of one conjugacy class of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassRegularity {
    pub cycle_type: Partition,
    pub parity: Parity,
    pub regular: bool,
}

/// Every class of `S_n`, labelled by cycle type in reverse-lexicographic
/// order, with its regularity decided by `mode`.
pub fn classify_classes(n: usize, mode: RegularityMode) -> Result<Vec<ClassRegularity>, CocycleError> {
    let cap = match mode {
        RegularityMode::Criterion => MAX_CRITERION_DEGREE,
        RegularityMode::Brute => MAX_TABLE_DEGREE,
    };
    if n > cap {
        return Err(CocycleError::DegreeTooLarge { degree: n, cap });
    }
    let shapes = enumerate_partitions(n)?;
    let table = match mode {
        RegularityMode::Brute if n >= 1 => Some(cocycle(n)?),
        _ => None,
    };
    shapes
        .into_iter()
        .map(|lambda| {
            let regular = match &table {
                Some(t) => is_c_regular_bruteforce(t, &Permutation::with_cycle_type(&lambda))?,
                None => is_c_regular_schur(&lambda),
            };
            Ok(ClassRegularity { parity: lambda.parity(), cycle_type: lambda, regular })
        })
        .collect()
}

/// Raw counts `(even regular classes, odd regular classes)` of `S_n`.
///
/// The even regular classes are the partitions into odd parts, so the first
/// entry equals the number of strict partitions `s(n)` and the second the
/// number of odd strict partitions. See [`irreducible_counts`] for the split
/// into absolutely irreducible and self-associate simple objects.
pub fn count_regular_classes(n: usize, mode: RegularityMode) -> Result<(u64, u64), CocycleError> {
    let mut even = 0;
    let mut odd = 0;
    for c in classify_classes(n, mode)? {
        if c.regular {
            match c.parity {
                Parity::Even => even += 1,
                Parity::Odd => odd += 1,
            }
        }
    }
    Ok((even, odd))
}

/// Simple objects of the twisted super group algebra counted from the
/// regular classes: `(absolutely irreducible, self-associate)`.
///
/// The even regular classes count all simple objects up to shift and the
/// odd regular classes count the self-associate ones, so the absolutely
/// irreducible ones number `even - odd`.
pub fn irreducible_counts(n: usize, mode: RegularityMode) -> Result<(u64, u64), CocycleError> {
    let (even, odd) = count_regular_classes(n, mode)?;
    Ok((even - odd, odd))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn criterion_examples() {
        assert!(is_c_regular_schur(&part(&[3, 1])));
        assert!(!is_c_regular_schur(&part(&[2, 2])));
        assert!(is_c_regular_schur(&part(&[4])));
        assert!(!is_c_regular_schur(&part(&[2, 1, 1])));
    }

    #[test]
    fn brute_force_examples() {
        let t2 = cocycle(2).unwrap();
        assert!(is_c_regular_bruteforce(&t2, &Permutation::elementary(2, 1)).unwrap());
        let t4 = cocycle(4).unwrap();
        assert!(is_c_regular_bruteforce(&t4, &Permutation::identity(4)).unwrap());
        assert!(!is_c_regular_bruteforce(&t4, &Permutation::elementary(4, 1)).unwrap());
    }

    #[test]
    fn closed_form_examples() {
        let t = Permutation::elementary(2, 1);
        assert_eq!(schur_supersymbol_character(&t, &t).unwrap(), -1);
        let s = Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        let h = Permutation::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap();
        assert_eq!(schur_supersymbol_character(&s, &h).unwrap(), -1);
        let three = Permutation::from_cycles(4, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(schur_supersymbol_character(&three, &three).unwrap(), 1);
    }

    #[test]
    fn counts_small() {
        assert_eq!(count_regular_classes(1, RegularityMode::Criterion).unwrap(), (1, 0));
        assert_eq!(count_regular_classes(4, RegularityMode::Brute).unwrap(), (2, 1));
        assert_eq!(irreducible_counts(4, RegularityMode::Criterion).unwrap(), (1, 1));
        assert_eq!(irreducible_counts(5, RegularityMode::Criterion).unwrap(), (1, 2));
    }
}
