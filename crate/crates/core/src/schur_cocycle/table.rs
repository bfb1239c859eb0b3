use std::sync::Arc;

use rand::Rng;
use rayon::prelude::*;

use crate::groups::{symmetric_group, Elem, FiniteGroup, Permutation};

use super::clifford::CliffordElement;
use super::words::canonical_reduced_word;
use super::CocycleError;

/// Largest degree for which a full table is built.
pub const MAX_TABLE_DEGREE: usize = 7;
/// Largest degree for Clifford lifts.
pub const MAX_LIFT_DEGREE: usize = 8;

/// The lift of `σ` to the Clifford algebra: the product of `ŝ_i` over its
/// canonical reduced word.
pub fn clifford_lift(sigma: &Permutation) -> Result<CliffordElement, CocycleError> {
    if sigma.degree() > MAX_LIFT_DEGREE {
        return Err(CocycleError::DegreeTooLarge { degree: sigma.degree(), cap: MAX_LIFT_DEGREE });
    }
    Ok(canonical_reduced_word(sigma)
        .letters()
        .iter()
        .fold(CliffordElement::one(), |acc, &i| acc.mul(&CliffordElement::simple_lift(i))))
}

/// `c(σ, τ)` straight from the definition `lift(σ) lift(τ) = c · lift(στ)`.
pub fn clifford_cocycle_value(sigma: &Permutation, tau: &Permutation) -> Result<i8, CocycleError> {
    let lhs = clifford_lift(sigma)?.mul(&clifford_lift(tau)?);
    let rhs = clifford_lift(&sigma.compose(tau))?;
    lhs.sign_relative_to(&rhs).ok_or_else(|| CocycleError::NonCentralDiscrepancy {
        sigma: sigma.to_cycle_string(),
        tau: tau.to_cycle_string(),
    })
}

/// The ±1 cocycle of the Schur extension of `S_n` on all pairs, with
/// elements indexed as in [`symmetric_group`].
#[derive(Clone)]
pub struct CocycleTable {
    n: usize,
    group: Arc<FiniteGroup>,
    values: Vec<i8>,
}

impl CocycleTable {
    pub(crate) fn from_parts(n: usize, group: Arc<FiniteGroup>, values: Vec<i8>) -> Self {
        CocycleTable { n, group, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    #[inline]
    pub fn get(&self, sigma: Elem, tau: Elem) -> i8 {
        self.values[sigma * self.group.order() + tau]
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    pub fn elem(&self, p: &Permutation) -> Result<Elem, CocycleError> {
        self.group.index_of(p).ok_or_else(|| CocycleError::NotInGroup(p.to_cycle_string()))
    }

    /// `c(σ, τ)` for permutations.
    pub fn value(&self, sigma: &Permutation, tau: &Permutation) -> Result<i8, CocycleError> {
        Ok(self.get(self.elem(sigma)?, self.elem(tau)?))
    }

    fn check_commute(&self, g: Elem, h: Elem) -> Result<(), CocycleError> {
        if !self.group.commute(g, h) {
            return Err(CocycleError::NotCommuting {
                g: self.group.label(g).to_cycle_string(),
                h: self.group.label(h).to_cycle_string(),
            });
        }
        Ok(())
    }

    /// `ε(g, h) = c(g, h) / c(h, g)` for commuting elements.
    pub fn symbol_elems(&self, g: Elem, h: Elem) -> Result<i8, CocycleError> {
        self.check_commute(g, h)?;
        Ok(self.get(g, h) * self.get(h, g))
    }

    /// `e(g, h) = (-1)^(deg g · deg h) ε(g, h)`, grading by sign.
    pub fn supersymbol_elems(&self, g: Elem, h: Elem) -> Result<i8, CocycleError> {
        let eps = self.symbol_elems(g, h)?;
        let both_odd = self.group.label(g).is_odd() && self.group.label(h).is_odd();
        Ok(if both_odd { -eps } else { eps })
    }

    pub fn symbol(&self, g: &Permutation, h: &Permutation) -> Result<i8, CocycleError> {
        self.symbol_elems(self.elem(g)?, self.elem(h)?)
    }

    pub fn supersymbol(&self, g: &Permutation, h: &Permutation) -> Result<i8, CocycleError> {
        self.supersymbol_elems(self.elem(g)?, self.elem(h)?)
    }

    fn identity_holds(&self, g: Elem, h: Elem, k: Elem) -> bool {
        let grp = &self.group;
        self.get(grp.mul(g, h), k) * self.get(g, h) == self.get(g, grp.mul(h, k)) * self.get(h, k)
    }

    /// Checks `c(gh,k) c(g,h) = c(g,hk) c(h,k)` on every triple and returns
    /// the first failing triple, if any.
    pub fn first_cocycle_failure(&self) -> Option<(Elem, Elem, Elem)> {
        let order = self.group.order();
        (0..order).into_par_iter().find_map_first(|g| {
            for h in 0..order {
                for k in 0..order {
                    if !self.identity_holds(g, h, k) {
                        return Some((g, h, k));
                    }
                }
            }
            None
        })
    }

    /// Checks the cocycle identity on `samples` random triples.
    pub fn sampled_cocycle_failure<R: Rng>(&self, rng: &mut R, samples: usize) -> Option<(Elem, Elem, Elem)> {
        let order = self.group.order();
        let triples: Vec<(Elem, Elem, Elem)> =
            (0..samples).map(|_| (rng.gen_range(0..order), rng.gen_range(0..order), rng.gen_range(0..order))).collect();
        triples.into_par_iter().find_first(|&(g, h, k)| !self.identity_holds(g, h, k))
    }

    /// `c(1, g) = c(g, 1) = 1` for all `g`.
    pub fn is_normalized(&self) -> bool {
        let id = self.group.identity();
        self.group.elements().all(|g| self.get(id, g) == 1 && self.get(g, id) == 1)
    }
}

/// Builds the table from the Clifford lifts.
///
/// Writing `lift(σ) ŝ_i = d(σ, i) lift(σ σ_i)`, the value `c(σ, τ)` is the
/// product of the `d` collected while multiplying `lift(σ)` by the letters of
/// the canonical word of `τ` one at a time.
pub fn cocycle(n: usize) -> Result<CocycleTable, CocycleError> {
    if n > MAX_TABLE_DEGREE {
        return Err(CocycleError::DegreeTooLarge { degree: n, cap: MAX_TABLE_DEGREE });
    }
    let group = Arc::new(symmetric_group(n)?);
    let simple: Vec<Elem> = (1..n).map(|i| group.index_of(&Permutation::elementary(n, i)).expect("in S_n")).collect();

    let lifts: Vec<CliffordElement> =
        group.elements().into_par_iter().map(|x| clifford_lift(group.label(x))).collect::<Result<_, _>>()?;

    // step[x * (n-1) + (i-1)] = d(x, i)
    let step: Vec<i8> = group
        .elements()
        .into_par_iter()
        .flat_map_iter(|x| {
            let lifts = &lifts;
            let group = &group;
            let simple = &simple;
            (1..n).map(move |i| {
                let lhs = lifts[x].mul(&CliffordElement::simple_lift(i));
                let y = group.mul(x, simple[i - 1]);
                lhs.sign_relative_to(&lifts[y]).ok_or_else(|| CocycleError::NonCentralDiscrepancy {
                    sigma: group.label(x).to_cycle_string(),
                    tau: Permutation::elementary(n, i).to_cycle_string(),
                })
            })
        })
        .collect::<Result<_, _>>()?;

    let words: Vec<Vec<usize>> =
        group.elements().map(|t| canonical_reduced_word(group.label(t)).letters().to_vec()).collect();
    let values = fold_steps(&group, &simple, &words, |x, i| step[x * (n - 1) + (i - 1)]);
    Ok(CocycleTable::from_parts(n, group, values))
}

/// `c(σ, τ) = Π_j d(σ_{j-1}, b_j)` along the canonical word `b` of `τ`.
pub(crate) fn fold_steps<F>(group: &FiniteGroup, simple: &[Elem], words: &[Vec<usize>], d: F) -> Vec<i8>
where
    F: Fn(Elem, usize) -> i8 + Sync,
{
    let order = group.order();
    let mut values = vec![0i8; order * order];
    values.par_chunks_mut(order).enumerate().for_each(|(sigma, row)| {
        for (tau, slot) in row.iter_mut().enumerate() {
            let mut x = sigma;
            let mut sign = 1i8;
            for &i in &words[tau] {
                sign *= d(x, i);
                x = group.mul(x, simple[i - 1]);
            }
            *slot = sign;
        }
    });
    values
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s2_generator_squares_to_minus_one() {
        let t = cocycle(2).unwrap();
        let s1 = Permutation::elementary(2, 1);
        assert_eq!(t.value(&s1, &s1).unwrap(), -1);
        assert!(t.is_normalized());
    }

    #[test]
    fn table_matches_direct_clifford_comparison() {
        for n in 1..=4 {
            let t = cocycle(n).unwrap();
            let g = t.group().clone();
            for x in g.elements() {
                for y in g.elements() {
                    let direct = clifford_cocycle_value(g.label(x), g.label(y)).unwrap();
                    assert_eq!(t.get(x, y), direct, "n={n} x={} y={}", g.label(x), g.label(y));
                }
            }
        }
    }

    #[test]
    fn cocycle_identity_small() {
        for n in 1..=4 {
            assert_eq!(cocycle(n).unwrap().first_cocycle_failure(), None);
        }
    }

    #[test]
    fn symbols_in_s4() {
        let t = cocycle(4).unwrap();
        let s1 = Permutation::elementary(4, 1);
        let s3 = Permutation::elementary(4, 3);
        assert_eq!(t.symbol(&s1, &s3).unwrap(), -1);
        assert_eq!(t.supersymbol(&s1, &s3).unwrap(), 1);
        assert!(matches!(
            t.symbol(&s1, &Permutation::elementary(4, 2)),
            Err(CocycleError::NotCommuting { .. })
        ));
    }

    #[test]
    fn lift_of_identity_is_one() {
        assert_eq!(clifford_lift(&Permutation::identity(5)).unwrap(), CliffordElement::one());
        assert!(clifford_lift(&Permutation::identity(9)).is_err());
    }
}
