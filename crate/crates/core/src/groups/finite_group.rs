use std::collections::HashMap;

use rand::Rng;
use rayon::prelude::*;

use super::{GroupError, Permutation};

/// Default bound on the order of a group built by closure.
pub const DEFAULT_ORDER_CAP: usize = 10080;

/// Dense index of an element inside a [`FiniteGroup`].
pub type Elem = usize;

/// A finite permutation group stored as a Cayley table.
///
/// Element 0 is the identity. Elements are numbered in breadth-first
/// discovery order from the generators (right multiplication, generators
/// tried in the order given), so every construction is reproducible.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    cayley: Vec<u32>,
    inverse: Vec<Elem>,
    labels: Vec<Permutation>,
    index: HashMap<Permutation, Elem>,
    generators: Vec<Elem>,
}

impl FiniteGroup {
    pub fn from_generators(gens: &[Permutation]) -> Result<Self, GroupError> {
        Self::from_generators_capped(gens, DEFAULT_ORDER_CAP)
    }

    pub fn from_generators_capped(gens: &[Permutation], cap: usize) -> Result<Self, GroupError> {
        let degree = gens.first().map(|g| g.degree()).unwrap_or(0);
        if let Some(bad) = gens.iter().find(|g| g.degree() != degree) {
            return Err(GroupError::DegreeMismatch { expected: degree, found: bad.degree() });
        }

        let mut labels = vec![Permutation::identity(degree)];
        let mut index = HashMap::new();
        index.insert(labels[0].clone(), 0);
        // parent[y] = (x, generator slot) with y = x * gens[slot]
        let mut parent: Vec<Option<(Elem, usize)>> = vec![None];
        let mut right_gen: Vec<Vec<Elem>> = Vec::new();

        let mut head = 0;
        while head < labels.len() {
            let x = labels[head].clone();
            let mut row = Vec::with_capacity(gens.len());
            for (slot, g) in gens.iter().enumerate() {
                let y = x.compose(g);
                let idx = match index.get(&y) {
                    Some(&i) => i,
                    None => {
                        let i = labels.len();
                        if i >= cap {
                            return Err(GroupError::OrderCapExceeded { cap });
                        }
                        index.insert(y.clone(), i);
                        labels.push(y);
                        parent.push(Some((head, slot)));
                        i
                    }
                };
                row.push(idx);
            }
            right_gen.push(row);
            head += 1;
        }

        let order = labels.len();
        // Fill row x column by column: x * y = (x * parent(y)) * gen.
        let mut cayley = vec![0u32; order * order];
        cayley.par_chunks_mut(order).enumerate().for_each(|(x, row)| {
            row[0] = x as u32;
            for y in 1..order {
                let (py, slot) = parent[y].expect("non-identity element has a parent");
                row[y] = right_gen[row[py] as usize][slot] as u32;
            }
        });

        let mut inverse = vec![0; order];
        for (x, inv) in inverse.iter_mut().enumerate() {
            *inv = index[&labels[x].inverse()];
        }

        let generators = gens.iter().map(|g| index[g]).collect();
        Ok(FiniteGroup { order, cayley, inverse, labels, index, generators })
    }

    /// The trivial group realized on `degree` points.
    pub fn trivial(degree: usize) -> Self {
        Self::from_generators(&[Permutation::identity(degree)]).expect("trivial group")
    }

    /// Cyclic group of order `n` acting on itself.
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        let images: Vec<usize> = (0..n).map(|j| (j + 1) % n).collect();
        Self::from_generators(&[Permutation::from_images(images)?])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        0
    }

    pub fn degree(&self) -> usize {
        self.labels[0].degree()
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.cayley[x * self.order + y] as Elem
    }

    #[inline]
    pub fn inv(&self, x: Elem) -> Elem {
        self.inverse[x]
    }

    /// `s x s^-1`
    #[inline]
    pub fn conjugate(&self, s: Elem, x: Elem) -> Elem {
        self.mul(self.mul(s, x), self.inverse[s])
    }

    pub fn pow(&self, x: Elem, k: u64) -> Elem {
        let mut acc = self.identity();
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    pub fn label(&self, x: Elem) -> &Permutation {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[Permutation] {
        &self.labels
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn index_of(&self, p: &Permutation) -> Option<Elem> {
        self.index.get(p).copied()
    }

    pub fn commute(&self, x: Elem, y: Elem) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    /// Conjugacy classes ordered by smallest member; each class is sorted, so
    /// its first entry is the canonical representative.
    pub fn conjugacy_classes(&self) -> Vec<Vec<Elem>> {
        let mut class_of = vec![usize::MAX; self.order];
        let mut classes: Vec<Vec<Elem>> = Vec::new();
        for x in self.elements() {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = Vec::new();
            for s in self.elements() {
                let y = self.conjugate(s, x);
                if class_of[y] == usize::MAX {
                    class_of[y] = id;
                    members.push(y);
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        classes
    }

    pub fn centralizer(&self, g: Elem) -> Vec<Elem> {
        self.elements().filter(|&h| self.commute(g, h)).collect()
    }

    /// All ordered commuting pairs `(g, h)`.
    pub fn commuting_pairs(&self) -> Vec<(Elem, Elem)> {
        self.elements()
            .into_par_iter()
            .flat_map_iter(|g| self.centralizer(g).into_iter().map(move |h| (g, h)))
            .collect()
    }

    /// Commuting pairs up to simultaneous conjugation: for each class
    /// representative `g`, one `h` per orbit of `C_g` acting on itself by
    /// conjugation.
    pub fn commuting_pair_representatives(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for class in self.conjugacy_classes() {
            let g = class[0];
            let cent = self.centralizer(g);
            let mut seen = vec![false; self.order];
            for &h in &cent {
                if seen[h] {
                    continue;
                }
                for &s in &cent {
                    seen[self.conjugate(s, h)] = true;
                }
                out.push((g, h));
            }
        }
        out
    }

    /// Checks associativity on every triple.
    pub fn check_associativity_exhaustive(&self) -> bool {
        self.elements().into_par_iter().all(|a| {
            for b in self.elements() {
                let ab = self.mul(a, b);
                for c in self.elements() {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return false;
                    }
                }
            }
            true
        })
    }

    pub fn check_associativity_sampled<R: Rng>(&self, rng: &mut R, samples: usize) -> bool {
        (0..samples).all(|_| {
            let a = rng.gen_range(0..self.order);
            let b = rng.gen_range(0..self.order);
            let c = rng.gen_range(0..self.order);
            self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
        })
    }

    /// Identity, inverse, and (exhaustive up to order 200, else sampled)
    /// associativity checks.
    pub fn verify_axioms<R: Rng>(&self, rng: &mut R) -> bool {
        let id = self.identity();
        let units = self
            .elements()
            .all(|x| self.mul(id, x) == x && self.mul(x, id) == x && self.mul(x, self.inv(x)) == id);
        let assoc = if self.order <= 200 {
            self.check_associativity_exhaustive()
        } else {
            self.check_associativity_sampled(rng, 1000)
        };
        units && assoc
    }
}

/// `S_n` generated by the elementary transpositions `sigma_1, .., sigma_{n-1}`.
pub fn symmetric_group(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::EmptyDegree);
    }
    let cap = DEFAULT_ORDER_CAP.max(40320);
    if n > 8 {
        return Err(GroupError::OrderCapExceeded { cap });
    }
    if n == 1 {
        return Ok(FiniteGroup::trivial(1));
    }
    let gens: Vec<Permutation> = (1..n).map(|i| Permutation::elementary(n, i)).collect();
    FiniteGroup::from_generators_capped(&gens, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn cyc(n: usize, c: &[usize]) -> Permutation {
        Permutation::from_cycles(n, &[c.to_vec()]).unwrap()
    }

    #[test]
    fn small_closures() {
        let z2 = FiniteGroup::from_generators(&[cyc(2, &[0, 1])]).unwrap();
        assert_eq!(z2.order(), 2);
        let s3 = FiniteGroup::from_generators(&[cyc(3, &[0, 1]), cyc(3, &[1, 2])]).unwrap();
        assert_eq!(s3.order(), 6);
        let z4 = FiniteGroup::from_generators(&[cyc(4, &[0, 1, 2, 3])]).unwrap();
        assert_eq!(z4.order(), 4);
        assert!(z4.elements().all(|x| z4.elements().all(|y| z4.commute(x, y))));
    }

    #[test]
    fn degree_mismatch_and_cap() {
        let err = FiniteGroup::from_generators(&[cyc(2, &[0, 1]), cyc(3, &[0, 1])]).unwrap_err();
        assert!(matches!(err, GroupError::DegreeMismatch { .. }));
        let gens: Vec<Permutation> = (1..5).map(|i| Permutation::elementary(5, i)).collect();
        let err = FiniteGroup::from_generators_capped(&gens, 50).unwrap_err();
        assert!(matches!(err, GroupError::OrderCapExceeded { cap: 50 }));
    }

    #[test]
    fn symmetric_orders() {
        assert_eq!(symmetric_group(1).unwrap().order(), 1);
        assert_eq!(symmetric_group(4).unwrap().order(), 24);
        assert_eq!(symmetric_group(6).unwrap().order(), 720);
        assert!(symmetric_group(9).is_err());
    }

    #[test]
    fn class_sizes() {
        assert_eq!(FiniteGroup::trivial(1).conjugacy_classes(), vec![vec![0]]);
        let sizes = |n| {
            let g = symmetric_group(n).unwrap();
            g.conjugacy_classes().iter().map(|c| c.len()).collect::<Vec<_>>()
        };
        assert_eq!(sizes(3), vec![1, 3, 2]);
        // BFS order meets a 3-cycle before a double transposition
        assert_eq!(sizes(4), vec![1, 6, 8, 3, 6]);
    }

    #[test]
    fn centralizers_in_s4() {
        let g = symmetric_group(4).unwrap();
        let four = g.index_of(&cyc(4, &[0, 1, 2, 3])).unwrap();
        assert_eq!(g.centralizer(four).len(), 4);
        let t = g.index_of(&cyc(4, &[0, 1])).unwrap();
        assert_eq!(g.centralizer(t).len(), 4);
        assert_eq!(g.centralizer(g.identity()).len(), 24);
    }

    #[test]
    fn axioms_hold() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=6 {
            assert!(symmetric_group(n).unwrap().verify_axioms(&mut rng));
        }
    }

    #[test]
    fn bfs_order_is_deterministic() {
        let a = symmetric_group(5).unwrap();
        let b = symmetric_group(5).unwrap();
        assert_eq!(a.labels(), b.labels());
        assert!(a.label(0).is_identity());
    }
}
